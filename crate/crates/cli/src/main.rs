//! `ctuples`: exact commuting-tuple counts, reference-table verification,
//! and Bessenrodt-Ono sign scans.
//!
//! Exit codes: 0 success / verification pass, 1 verification mismatch,
//! 2 usage error, 3 guard refusal (an operation declined inputs outside its
//! supported domain).

use commuting_tuples_cli::{records, scans};

use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use commuting_tuples::arith::BigRat;
use commuting_tuples::golden::{self, TableReport};
use commuting_tuples::{asymptotics, bo, census, render, BigInt, CountTable};

use records::{emit, CensusRecord, OutputFormat, ValueRecord, SCHEMA_VERSION};

#[derive(Parser)]
#[command(
    name = "ctuples",
    version,
    about = "Exact commuting-tuple counts in symmetric groups and Bessenrodt-Ono sign analysis",
    max_term_width = 100
)]
struct Cli {
    /// Output format for records
    #[arg(long, global = true, value_enum, default_value_t = Format::Markdown)]
    format: Format,

    /// Render scientific decimals as "1.234567890e8" instead of "·10^"
    #[arg(long, global = true)]
    ascii: bool,

    /// Worker threads for scans
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    workers: u32,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Markdown,
    Csv,
    Jsonl,
}

impl Format {
    fn output(self) -> OutputFormat {
        match self {
            Format::Markdown => OutputFormat::Markdown,
            Format::Csv => OutputFormat::Csv,
            Format::Jsonl => OutputFormat::JsonLines,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Compute a single exact value
    Compute(ComputeArgs),
    /// Recompute an embedded reference table and diff it cell by cell
    VerifyTables(VerifyArgs),
    /// Range scans (exceptions, sign thresholds, empirical floors)
    Scan(ScanArgs),
    /// Enumerate commuting tuples directly and cross-check the recursion
    BruteForce(BruteForceArgs),
}

#[derive(Args)]
struct ComputeArgs {
    /// What to compute: N, g, delta, B, D, A, M1, M3
    kind: Kind,
    #[arg(long)]
    ell: Option<u32>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    a: Option<u32>,
    #[arg(long)]
    b: Option<u32>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    /// Scaled commuting-tuple count
    #[value(name = "N")]
    Count,
    /// Lattice subgroup count
    #[value(name = "g")]
    Subgroups,
    /// N(a) N(b) - N(a+b)
    #[value(name = "delta")]
    Delta,
    /// Leading growth term
    #[value(name = "B")]
    Leading,
    /// Subleading growth term
    #[value(name = "D")]
    Subleading,
    /// Lower envelope
    #[value(name = "A")]
    Lower,
    /// Leading growth base
    #[value(name = "M1")]
    LeadingBase,
    /// Next-to-subleading growth base
    #[value(name = "M3")]
    NextSubleadingBase,
}

#[derive(Args)]
struct VerifyArgs {
    /// Which table to verify
    table: Table,
    /// Scan window for table2 (the embedded rows are complete up to 1000)
    #[arg(long, default_value_t = 100)]
    a_max: u32,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Table {
    Table1,
    Table2,
    Table3,
    Table4,
}

#[derive(Args)]
struct ScanArgs {
    #[command(subcommand)]
    which: ScanKind,
}

#[derive(Subcommand)]
enum ScanKind {
    /// All pairs with zero or negative delta in a window, per rank
    Exceptions {
        /// Rank or inclusive rank range, e.g. 3 or 2..10
        #[arg(long)]
        ell: EllRange,
        #[arg(long, default_value_t = 100)]
        a_max: u32,
    },
    /// Sign-stabilization profiles for all pairs 2 <= a <= b <= a_max
    Thresholds {
        #[arg(long, default_value_t = 10)]
        a_max: u32,
        /// Raise the rank ceiling for profiles with no certified threshold
        #[arg(long)]
        ell_cap: Option<u32>,
    },
    /// Smallest floor with an all-positive window per rank (uncertified)
    EmpiricalFloor {
        #[arg(long)]
        ell: EllRange,
        #[arg(long, default_value_t = 100)]
        a_max: u32,
    },
}

#[derive(Clone, Copy)]
struct EllRange {
    start: u32,
    end: u32,
}

impl EllRange {
    fn values(self) -> Vec<u32> {
        (self.start..=self.end).collect()
    }
}

impl FromStr for EllRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |t: &str| {
            t.parse::<u32>()
                .map_err(|_| format!("invalid rank '{t}' in '{s}'"))
        };
        let (start, end) = match s.split_once("..") {
            Some((lo, hi)) => (parse(lo)?, parse(hi)?),
            None => {
                let v = parse(s)?;
                (v, v)
            }
        };
        if start < 2 {
            return Err(format!("ranks start at 2, got {start}"));
        }
        if end < start {
            return Err(format!("empty rank range '{s}'"));
        }
        Ok(EllRange { start, end })
    }
}

#[derive(Args)]
struct BruteForceArgs {
    #[arg(long)]
    ell: u32,
    #[arg(long)]
    n: u32,
}

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_REFUSED: u8 = 3;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format.output();
    let ascii = cli.ascii;
    let workers = cli.workers as usize;

    let outcome = match cli.command {
        Command::Compute(args) => cmd_compute(args, format, ascii),
        Command::VerifyTables(args) => cmd_verify(args),
        Command::Scan(args) => cmd_scan(args, format, workers),
        Command::BruteForce(args) => cmd_brute_force(args, format),
    };
    match outcome {
        Ok(code) => code,
        Err(err) => {
            eprintln!("refused: {err}");
            ExitCode::from(EXIT_REFUSED)
        }
    }
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("usage error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

struct Params {
    kind: &'static str,
    ell: Option<u32>,
    n: Option<u32>,
    a: Option<u32>,
    b: Option<u32>,
}

fn value_record(p: Params, value: String, decimal: String) -> ValueRecord {
    ValueRecord {
        schema_version: SCHEMA_VERSION,
        record: "value".to_string(),
        kind: p.kind.to_string(),
        ell: p.ell,
        n: p.n,
        a: p.a,
        b: p.b,
        value,
        decimal,
    }
}

fn print_value(rec: ValueRecord, format: OutputFormat) {
    match format {
        OutputFormat::Markdown => {
            // single human-readable line; fractions carry their decimal
            if rec.value.contains('/') {
                println!("{} ({})", rec.value, rec.decimal);
            } else {
                println!("{}", rec.value);
            }
        }
        other => print!("{}", emit(&[rec], other)),
    }
}

fn cmd_compute(
    args: ComputeArgs,
    format: OutputFormat,
    ascii: bool,
) -> commuting_tuples::Result<ExitCode> {
    let need = |what: Option<u32>, name: &str| -> Result<u32, ExitCode> {
        what.ok_or_else(|| usage_error(&format!("compute requires --{name} for this kind")))
    };
    macro_rules! req {
        ($x:expr, $name:literal) => {
            match need($x, $name) {
                Ok(v) => v,
                Err(code) => return Ok(code),
            }
        };
    }

    let int_out = |p: Params, v: &BigInt| {
        let rec = value_record(p, v.to_string(), render::sci_int(v, ascii));
        print_value(rec, format);
        Ok(ExitCode::SUCCESS)
    };
    let rat_out = |p: Params, v: &BigRat| {
        let rec = value_record(p, render::fraction(v), render::sci(v, ascii));
        print_value(rec, format);
        Ok(ExitCode::SUCCESS)
    };

    match args.kind {
        Kind::Count => {
            let (ell, n) = (req!(args.ell, "ell"), req!(args.n, "n"));
            if ell < 1 {
                return Ok(usage_error("N requires --ell >= 1"));
            }
            let table = CountTable::new(ell, n)?;
            int_out(
                Params {
                    kind: "N",
                    ell: Some(ell),
                    n: Some(n),
                    a: None,
                    b: None,
                },
                table.value(n),
            )
        }
        Kind::Subgroups => {
            let (ell, n) = (req!(args.ell, "ell"), req!(args.n, "n"));
            if ell < 1 || n < 1 {
                return Ok(usage_error("g requires --ell >= 1 and --n >= 1"));
            }
            let v = commuting_tuples::subgroups::count(ell, n as u64)?;
            int_out(
                Params {
                    kind: "g",
                    ell: Some(ell),
                    n: Some(n),
                    a: None,
                    b: None,
                },
                &v,
            )
        }
        Kind::Delta => {
            let (a, b, ell) = (req!(args.a, "a"), req!(args.b, "b"), req!(args.ell, "ell"));
            if a < 2 || b < 2 || ell < 1 {
                return Ok(usage_error("delta requires --a, --b >= 2 and --ell >= 1"));
            }
            let table = CountTable::new(ell, a + b)?;
            let v = bo::delta_in(&table, a, b);
            int_out(
                Params {
                    kind: "delta",
                    ell: Some(ell),
                    n: None,
                    a: Some(a),
                    b: Some(b),
                },
                &v,
            )
        }
        Kind::Leading => {
            let (ell, n) = (req!(args.ell, "ell"), req!(args.n, "n"));
            if ell < 1 {
                return Ok(usage_error("B requires --ell >= 1"));
            }
            let v = asymptotics::leading(ell, n)?;
            rat_out(
                Params {
                    kind: "B",
                    ell: Some(ell),
                    n: Some(n),
                    a: None,
                    b: None,
                },
                &v,
            )
        }
        Kind::Subleading => {
            let (ell, n) = (req!(args.ell, "ell"), req!(args.n, "n"));
            if ell < 1 {
                return Ok(usage_error("D requires --ell >= 1"));
            }
            let v = asymptotics::subleading(ell, n)?;
            rat_out(
                Params {
                    kind: "D",
                    ell: Some(ell),
                    n: Some(n),
                    a: None,
                    b: None,
                },
                &v,
            )
        }
        Kind::Lower => {
            let (ell, n) = (req!(args.ell, "ell"), req!(args.n, "n"));
            if ell < 2 {
                return Ok(usage_error("A requires --ell >= 2"));
            }
            let v = asymptotics::lower(ell, n)?;
            rat_out(
                Params {
                    kind: "A",
                    ell: Some(ell),
                    n: Some(n),
                    a: None,
                    b: None,
                },
                &v,
            )
        }
        Kind::LeadingBase => {
            let n = req!(args.n, "n");
            let v = asymptotics::leading_base(n)?;
            int_out(
                Params {
                    kind: "M1",
                    ell: None,
                    n: Some(n),
                    a: None,
                    b: None,
                },
                &v,
            )
        }
        Kind::NextSubleadingBase => {
            let n = req!(args.n, "n");
            let v = asymptotics::next_subleading_base(n)?;
            int_out(
                Params {
                    kind: "M3",
                    ell: None,
                    n: Some(n),
                    a: None,
                    b: None,
                },
                &v,
            )
        }
    }
}

fn cmd_verify(args: VerifyArgs) -> commuting_tuples::Result<ExitCode> {
    let report: TableReport = match args.table {
        Table::Table1 => golden::verify_table1()?,
        Table::Table2 => golden::verify_table2(args.a_max)?,
        Table::Table3 => golden::verify_table3()?,
        Table::Table4 => golden::verify_table4()?,
    };
    if report.passed() {
        let extra = match args.table {
            Table::Table2 => format!(" (window a_max={})", args.a_max),
            Table::Table4 => format!(
                " including {} starred special cases",
                golden::table4_starred_count()
            ),
            _ => String::new(),
        };
        let unit = match args.table {
            Table::Table2 => "rows",
            Table::Table4 => "entries",
            _ => "cells",
        };
        println!("{}: PASS, {} {unit}{extra}", report.table, report.cells);
        Ok(ExitCode::SUCCESS)
    } else {
        println!(
            "{}: FAIL, {}/{} cells differ",
            report.table,
            report.diffs.len(),
            report.cells
        );
        for diff in &report.diffs {
            println!("  {diff}");
        }
        Ok(ExitCode::from(EXIT_MISMATCH))
    }
}

fn cmd_scan(
    args: ScanArgs,
    format: OutputFormat,
    workers: usize,
) -> commuting_tuples::Result<ExitCode> {
    match args.which {
        ScanKind::Exceptions { ell, a_max } => {
            if a_max < 2 {
                return Ok(usage_error("scan window must be at least 2"));
            }
            let rows = scans::scan_exceptions(&ell.values(), a_max, workers)?;
            print!("{}", emit(&rows, format));
        }
        ScanKind::Thresholds { a_max, ell_cap } => {
            if a_max < 2 {
                return Ok(usage_error("scan window must be at least 2"));
            }
            let rows = scans::scan_thresholds(a_max, ell_cap, workers)?;
            print!("{}", emit(&rows, format));
        }
        ScanKind::EmpiricalFloor { ell, a_max } => {
            if a_max < 2 {
                return Ok(usage_error("scan window must be at least 2"));
            }
            let rows = scans::scan_floors(&ell.values(), a_max, workers)?;
            print!("{}", emit(&rows, format));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_brute_force(
    args: BruteForceArgs,
    format: OutputFormat,
) -> commuting_tuples::Result<ExitCode> {
    if args.ell < 1 || args.n < 1 {
        return Ok(usage_error("brute-force requires --ell >= 1 and --n >= 1"));
    }
    let c = census::brute_force_census(args.ell, args.n)?;
    let recursion = commuting_tuples::n_ell(args.ell, args.n);
    let agreement = recursion == c.scaled;
    let rec = CensusRecord {
        schema_version: SCHEMA_VERSION,
        record: "census".to_string(),
        ell: c.ell,
        n: c.n,
        raw_count: c.raw_count.to_string(),
        n_factorial: commuting_tuples::arith::factorial(c.n).to_string(),
        scaled: c.scaled.to_string(),
        recursion: recursion.to_string(),
        agreement,
    };
    match format {
        OutputFormat::Markdown => {
            println!(
                "raw={} n!={} scaled={} recursion={} {}",
                rec.raw_count,
                rec.n_factorial,
                rec.scaled,
                rec.recursion,
                if agreement { "AGREE" } else { "DISAGREE" }
            );
        }
        other => print!("{}", emit(std::slice::from_ref(&rec), other)),
    }
    // a disagreement would mean one of the two routes is broken
    Ok(if agreement {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_MISMATCH)
    })
}
