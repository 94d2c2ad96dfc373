use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use centralbound::bounds::{
    agievich_catalan, agievich_central, agievich_general, agievich_shifted, catalan_upper,
    central_lower, central_upper, general_rs_bound, sasvari_pair, BoundResult,
};
use centralbound::exec::Execution;
use centralbound::real::{PrecisionPolicy, render_significant};
use centralbound::verify::output::{render_bound, render_errata, render_sweep, render_table};
use centralbound::verify::{compute_table, errata_entries, run_sweep, Format, SweepConfig, TableId};
use centralbound::Error;

const EXIT_FAILED: u8 = 1;
const EXIT_UNDECIDED: u8 = 2;
const EXIT_USAGE: u8 = 64;

/// Certified evaluation and verification of central binomial and Catalan bounds.
#[derive(Debug, Parser)]
#[command(name = "centralbound", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Recompute a published table and compare every cell.
    Table(TableArgs),
    /// Certified sweep of the bound inequalities over n = 1..max-n.
    Verify(VerifyArgs),
    /// Evaluate a single bound.
    Bound(BoundArgs),
    /// Report printed values and formulas that disagree with recomputation.
    Errata(CommonArgs),
}

#[derive(Debug, Args)]
struct CommonArgs {
    #[arg(long, value_enum, default_value_t = FormatArg::Md)]
    format: FormatArg,
    /// Write the report to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = 64)]
    precision_init: u32,
    #[arg(long, default_value_t = 512)]
    precision_max: u32,
}

impl CommonArgs {
    fn policy(&self) -> Result<PrecisionPolicy, Error> {
        PrecisionPolicy::new(self.precision_init, self.precision_max, 2)
    }
}

#[derive(Debug, Args)]
struct TableArgs {
    #[arg(value_enum)]
    table: TableArg,
    /// Significant digits (defaults to the table's published precision).
    #[arg(long)]
    digits: Option<u32>,
    /// Exit with status 2 when some cell stays undecided.
    #[arg(long)]
    strict: bool,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 1000)]
    max_n: u64,
    /// Truncation order to check; repeatable. Odd orders are checked as lower
    /// bounds, even orders as upper bounds.
    #[arg(long = "order", default_values_t = [1u32, 2])]
    orders: Vec<u32>,
    /// Accepted for symmetry with `table`; undecided checks always give a
    /// nonzero exit status here.
    #[arg(long)]
    strict: bool,
    /// Omit the wall-time field so repeated runs are byte-identical.
    #[arg(long)]
    no_timing: bool,
    /// Run on a single thread.
    #[arg(long)]
    sequential: bool,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Debug, Args)]
struct BoundArgs {
    #[arg(value_enum)]
    name: BoundArg,
    #[arg(long)]
    n: Option<u64>,
    #[arg(long, allow_hyphen_values = true)]
    k: Option<i64>,
    #[arg(long)]
    r: Option<u64>,
    #[arg(long)]
    s: Option<u64>,
    /// Series order (number of terms; for general-rs the number of term pairs).
    #[arg(long)]
    order: Option<u32>,
    #[arg(long, default_value_t = 10)]
    digits: u32,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Md,
    Csv,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Md => Format::Md,
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TableArg {
    Table1,
    Table2,
    Table3,
}

impl From<TableArg> for TableId {
    fn from(t: TableArg) -> Self {
        match t {
            TableArg::Table1 => TableId::Table1,
            TableArg::Table2 => TableId::Table2,
            TableArg::Table3 => TableId::Table3,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum BoundArg {
    AgievichGeneral,
    AgievichShifted,
    AgievichCentral,
    AgievichCatalan,
    SasvariLower,
    SasvariUpper,
    CentralOrderN,
    CatalanOrderN,
    GeneralRs,
}

enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NeedsMorePrecision { .. } => Failure::Runtime(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn emit(common: &CommonArgs, text: &str) -> Result<(), Failure> {
    match &common.out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::Runtime(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .map_err(|e| Failure::Runtime(format!("cannot write to stdout: {e}")))
        }
    }
}

fn cmd_table(args: &TableArgs) -> Result<u8, Failure> {
    let table = TableId::from(args.table);
    let digits = args.digits.unwrap_or(table.native_digits());
    let report = compute_table(table, digits, &args.common.policy()?, Execution::default())?;
    emit(&args.common, &render_table(&report, args.common.format.into()))?;
    let undecided = report.count(centralbound::verify::CellStatus::Undecided);
    Ok(if report.failures() > 0 {
        EXIT_FAILED
    } else if undecided > 0 && args.strict {
        EXIT_UNDECIDED
    } else {
        0
    })
}

fn cmd_verify(args: &VerifyArgs) -> Result<u8, Failure> {
    let cfg = SweepConfig {
        max_n: args.max_n,
        orders: args.orders.clone(),
        policy: args.common.policy()?,
        execution: if args.sequential {
            Execution::Sequential
        } else {
            Execution::default()
        },
        timing: !args.no_timing,
    };
    let report = run_sweep(&cfg)?;
    emit(&args.common, &render_sweep(&report, args.common.format.into()))?;
    Ok(if report.totals.failed > 0 {
        EXIT_FAILED
    } else if report.totals.undecided > 0 {
        EXIT_UNDECIDED
    } else {
        0
    })
}

fn require<T>(value: Option<T>, flag: &str, bound: &str) -> Result<T, Failure> {
    value.ok_or_else(|| Failure::Usage(format!("{bound} requires --{flag}")))
}

fn evaluate(args: &BoundArgs, p: u32) -> Result<BoundResult, Failure> {
    let name = format!("{:?}", args.name);
    let n = || require(args.n, "n", &name);
    Ok(match args.name {
        BoundArg::AgievichGeneral => agievich_general(n()?, require(args.k, "k", &name)?, p)?,
        BoundArg::AgievichShifted => agievich_shifted(n()?, args.k.unwrap_or(0), p)?,
        BoundArg::AgievichCentral => agievich_central(n()?, p)?,
        BoundArg::AgievichCatalan => agievich_catalan(n()?, p)?,
        BoundArg::SasvariLower => sasvari_pair(n()?, p)?.0,
        BoundArg::SasvariUpper => sasvari_pair(n()?, p)?.1,
        BoundArg::CentralOrderN => {
            let order = require(args.order, "order", &name)?;
            if order % 2 == 1 {
                central_lower(n()?, order, p)?
            } else {
                central_upper(n()?, order, p)?
            }
        }
        BoundArg::CatalanOrderN => catalan_upper(n()?, require(args.order, "order", &name)?, p)?,
        BoundArg::GeneralRs => general_rs_bound(
            require(args.r, "r", &name)?,
            require(args.s, "s", &name)?,
            args.order.unwrap_or(1),
            p,
        )?,
    })
}

fn cmd_bound(args: &BoundArgs) -> Result<u8, Failure> {
    let policy = args.common.policy()?;
    for p in policy.levels() {
        let result = evaluate(args, p)?;
        match render_significant(&result.value, args.digits) {
            Ok(value) => {
                emit(&args.common, &render_bound(&result, &value, args.common.format.into()))?;
                return Ok(0);
            }
            Err(Error::NeedsMorePrecision { .. }) => continue,
            Err(e) => return Err(e.into()),
        }
    }
    eprintln!(
        "centralbound: {} significant digits not determined at {} bits",
        args.digits,
        policy.maximum()
    );
    Ok(EXIT_UNDECIDED)
}

fn cmd_errata(args: &CommonArgs) -> Result<u8, Failure> {
    let entries = errata_entries(&args.policy()?)?;
    emit(args, &render_errata(&entries, args.format.into()))?;
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match &cli.command {
        Command::Table(a) => cmd_table(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Bound(a) => cmd_bound(a),
        Command::Errata(a) => cmd_errata(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("centralbound: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("centralbound: {msg}");
            ExitCode::from(EXIT_FAILED)
        }
    }
}
