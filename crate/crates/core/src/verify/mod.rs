//! Table reproduction, certified sweeps and the errata report.

mod errata;
pub mod golden;
pub mod output;
mod sweep;
mod table;

pub use errata::{errata_entries, Classification, ErrataEntry};
pub use output::Format;
pub use sweep::{run_sweep, CheckCounts, Problem, SweepConfig, SweepReport};
pub use table::{compute_table, render_cell, Cell, CellStatus, TableId, TableReport, TableRow};
