//! Output records. Every record carries a schema version, serializes with
//! keys in declaration order, and round-trips through JSON lines.

use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

/// Rendering target for record streams.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Markdown,
    Csv,
    JsonLines,
}

pub trait Record: Serialize {
    fn csv_header() -> &'static str;
    fn csv_row(&self) -> String;
    fn markdown_header() -> &'static str;
    fn markdown_row(&self) -> String;
}

/// Renders a record stream; CSV gets a header row, JSON lines one object
/// per line, markdown a pipe table. All line endings are LF.
pub fn emit<R: Record>(records: &[R], format: OutputFormat) -> String {
    let mut out = String::new();
    match format {
        OutputFormat::Csv => {
            out.push_str(R::csv_header());
            out.push('\n');
            for r in records {
                out.push_str(&r.csv_row());
                out.push('\n');
            }
        }
        OutputFormat::JsonLines => {
            for r in records {
                out.push_str(&serde_json::to_string(r).expect("records serialize"));
                out.push('\n');
            }
        }
        OutputFormat::Markdown => {
            out.push_str(R::markdown_header());
            out.push('\n');
            for r in records {
                out.push_str(&r.markdown_row());
                out.push('\n');
            }
        }
    }
    out
}

/// One exceptional pair found by an exception scan.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExceptionRecord {
    pub schema_version: u32,
    pub record: String,
    pub ell: u32,
    pub a: u32,
    pub b: u32,
    pub class: String,
}

impl Record for ExceptionRecord {
    fn csv_header() -> &'static str {
        "ell,a,b,class"
    }
    fn csv_row(&self) -> String {
        format!("{},{},{},{}", self.ell, self.a, self.b, self.class)
    }
    fn markdown_header() -> &'static str {
        "| ell | a | b | class |\n|---|---|---|---|"
    }
    fn markdown_row(&self) -> String {
        format!(
            "| {} | {} | {} | {} |",
            self.ell, self.a, self.b, self.class
        )
    }
}

/// Sign-stabilization profile of one pair.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ThresholdRecord {
    pub schema_version: u32,
    pub record: String,
    pub a: u32,
    pub b: u32,
    pub entry: String,
    pub stable_from: u32,
    pub final_sign: String,
    pub checked_to: u32,
    pub certified: bool,
    /// Which certified case fired; null for empirical-only profiles.
    pub case: Option<String>,
    pub ell_star: Option<u32>,
    /// Run-length-encoded signs over ell = 2..=checked_to.
    pub runs: Vec<(String, u32)>,
}

impl Record for ThresholdRecord {
    fn csv_header() -> &'static str {
        "a,b,entry,stable_from,final_sign,checked_to,certified,case,ell_star,runs"
    }
    fn csv_row(&self) -> String {
        let runs: Vec<String> = self
            .runs
            .iter()
            .map(|(s, len)| format!("{s}:{len}"))
            .collect();
        format!(
            "{},{},{},{},{},{},{},{},{},{}",
            self.a,
            self.b,
            self.entry,
            self.stable_from,
            self.final_sign,
            self.checked_to,
            self.certified,
            self.case.as_deref().unwrap_or(""),
            self.ell_star.map_or(String::new(), |v| v.to_string()),
            runs.join(";")
        )
    }
    fn markdown_header() -> &'static str {
        "| a | b | entry | stable_from | checked_to | certificate |\n|---|---|---|---|---|---|"
    }
    fn markdown_row(&self) -> String {
        let cert = if self.certified {
            format!(
                "certified: {} (ell* = {})",
                self.case.as_deref().unwrap_or("?"),
                self.ell_star.unwrap_or(0)
            )
        } else {
            "uncertified (empirical)".to_string()
        };
        format!(
            "| {} | {} | {} | {} | {} | {} |",
            self.a, self.b, self.entry, self.stable_from, self.checked_to, cert
        )
    }
}

/// Window-limited positivity floor for one rank.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FloorRecord {
    pub schema_version: u32,
    pub record: String,
    pub ell: u32,
    pub a_max: u32,
    pub floor: u32,
    pub certified: bool,
}

impl Record for FloorRecord {
    fn csv_header() -> &'static str {
        "ell,a_max,floor,certified"
    }
    fn csv_row(&self) -> String {
        format!(
            "{},{},{},{}",
            self.ell, self.a_max, self.floor, self.certified
        )
    }
    fn markdown_header() -> &'static str {
        "| ell | a_max | floor | status |\n|---|---|---|---|"
    }
    fn markdown_row(&self) -> String {
        format!(
            "| {} | {} | {} | uncertified (window-limited) |",
            self.ell, self.a_max, self.floor
        )
    }
}

/// One computed value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ValueRecord {
    pub schema_version: u32,
    pub record: String,
    pub kind: String,
    pub ell: Option<u32>,
    pub n: Option<u32>,
    pub a: Option<u32>,
    pub b: Option<u32>,
    /// Full decimal integer, or exact fraction "p/q".
    pub value: String,
    /// Scientific rendering, 10 significant digits.
    pub decimal: String,
}

impl Record for ValueRecord {
    fn csv_header() -> &'static str {
        "kind,ell,n,a,b,value,decimal"
    }
    fn csv_row(&self) -> String {
        let opt = |v: Option<u32>| v.map_or(String::new(), |x| x.to_string());
        format!(
            "{},{},{},{},{},{},{}",
            self.kind,
            opt(self.ell),
            opt(self.n),
            opt(self.a),
            opt(self.b),
            self.value,
            self.decimal
        )
    }
    fn markdown_header() -> &'static str {
        "| kind | value | decimal |\n|---|---|---|"
    }
    fn markdown_row(&self) -> String {
        format!("| {} | {} | {} |", self.kind, self.value, self.decimal)
    }
}

/// Brute-force census result with the recursion cross-check.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CensusRecord {
    pub schema_version: u32,
    pub record: String,
    pub ell: u32,
    pub n: u32,
    pub raw_count: String,
    pub n_factorial: String,
    pub scaled: String,
    pub recursion: String,
    pub agreement: bool,
}

impl Record for CensusRecord {
    fn csv_header() -> &'static str {
        "ell,n,raw_count,n_factorial,scaled,recursion,agreement"
    }
    fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{}",
            self.ell,
            self.n,
            self.raw_count,
            self.n_factorial,
            self.scaled,
            self.recursion,
            self.agreement
        )
    }
    fn markdown_header() -> &'static str {
        "| ell | n | raw | n! | scaled | recursion | check |\n|---|---|---|---|---|---|---|"
    }
    fn markdown_row(&self) -> String {
        format!(
            "| {} | {} | {} | {} | {} | {} | {} |",
            self.ell,
            self.n,
            self.raw_count,
            self.n_factorial,
            self.scaled,
            self.recursion,
            if self.agreement { "AGREE" } else { "DISAGREE" }
        )
    }
}
