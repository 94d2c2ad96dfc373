use serde::Serialize;

use crate::{Error, Result};

/// Precision escalation schedule: start at `initial` bits and multiply by
/// `factor` until `maximum` is exceeded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PrecisionPolicy {
    initial: u32,
    maximum: u32,
    factor: u32,
}

impl Default for PrecisionPolicy {
    fn default() -> Self {
        Self {
            initial: 64,
            maximum: 512,
            factor: 2,
        }
    }
}

impl PrecisionPolicy {
    pub fn new(initial: u32, maximum: u32, factor: u32) -> Result<Self> {
        if initial < 2 {
            return Err(Error::PrecisionTooLow(initial));
        }
        if initial > maximum {
            return Err(Error::InvalidPolicy(format!(
                "initial precision {initial} exceeds maximum {maximum}"
            )));
        }
        if factor < 2 {
            return Err(Error::InvalidPolicy(format!(
                "escalation factor {factor} is below 2"
            )));
        }
        Ok(Self {
            initial,
            maximum,
            factor,
        })
    }

    pub fn initial(&self) -> u32 {
        self.initial
    }

    pub fn maximum(&self) -> u32 {
        self.maximum
    }

    pub fn factor(&self) -> u32 {
        self.factor
    }

    /// Precisions to try, in order. The last one is always `maximum`.
    pub fn levels(&self) -> Vec<u32> {
        let mut out = Vec::new();
        let mut p = self.initial;
        while p < self.maximum {
            out.push(p);
            p = p.saturating_mul(self.factor);
        }
        out.push(self.maximum);
        out
    }

    /// Runs `attempt` at each level until it yields `Some`; `None` means the
    /// maximum precision was not enough.
    pub fn escalate<T>(&self, mut attempt: impl FnMut(u32) -> Result<Option<T>>) -> Result<Option<T>> {
        for p in self.levels() {
            if let Some(v) = attempt(p)? {
                return Ok(Some(v));
            }
        }
        Ok(None)
    }
}
