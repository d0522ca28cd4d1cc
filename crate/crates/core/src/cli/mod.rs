//! Command-line front end: scenario registry, file formats and reports.

mod formats;
mod registry;

use std::collections::BTreeMap;
use std::io::{IsTerminal, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::abelian::smith_normal_form;
use crate::contactlab::{Limits, ScenarioError, Status, VerificationResult};

pub use formats::{
    parse_complex, parse_matrix, parse_presentation, write_complex, write_matrix, write_presentation, FormatError,
};
pub use registry::{find, registry, ParamSpec, ScenarioDescriptor};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "contactcheck", version, about = "Exact verification of contact-geometric identities")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// List registered scenarios.
    List,
    /// Run one scenario.
    Verify {
        #[arg(long)]
        scenario: String,
        /// Value of the scenario's parameter (n, k or a).
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Lift the default parameter caps.
        #[arg(long)]
        unsafe_n: bool,
        /// Run the scenario's negative control instead.
        #[arg(long)]
        control: bool,
    },
    /// Smith normal form of a matrix file.
    Snf {
        #[arg(long)]
        input: PathBuf,
    },
    /// Homology of a chain-complex file.
    Homology {
        #[arg(long)]
        input: PathBuf,
    },
    /// Simplify a presentation file.
    Pi1 {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        simplify: bool,
        #[arg(long)]
        abelianize: bool,
    },
    /// Run every scenario and write a report.
    Report {
        #[arg(long)]
        all: bool,
        /// Largest parameter value to run.
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        unsafe_n: bool,
    },
}

/// One result as it appears in JSON output.
#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct ResultRecord {
    pub scenario: String,
    pub params: BTreeMap<String, Value>,
    pub status: Status,
    pub witness: Option<String>,
    pub axioms_used: Vec<String>,
    pub details: Vec<String>,
    pub elapsed_ms: u64,
}

impl From<&VerificationResult> for ResultRecord {
    fn from(r: &VerificationResult) -> Self {
        let params = r
            .params
            .iter()
            .map(|(k, v)| {
                let val = v.parse::<u64>().map(Value::from).unwrap_or_else(|_| Value::String(v.clone()));
                (k.clone(), val)
            })
            .collect();
        ResultRecord {
            scenario: r.scenario.clone(),
            params,
            status: r.status,
            witness: r.witness.clone(),
            axioms_used: r.axioms_used.clone(),
            details: r.details.clone(),
            elapsed_ms: r.elapsed.as_millis() as u64,
        }
    }
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct Report {
    pub version: String,
    pub results: Vec<ResultRecord>,
    pub summary: Summary,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn new(results: &[VerificationResult], elapsed_ms: u64) -> Self {
        let pass = results.iter().filter(|r| r.passed()).count();
        Report {
            version: env!("CARGO_PKG_VERSION").to_string(),
            results: results.iter().map(ResultRecord::from).collect(),
            summary: Summary {
                pass,
                fail: results.len() - pass,
            },
            elapsed_ms,
        }
    }
}

/// Scenario runs for `report --all`: each parameterised scenario at every
/// value from its minimum to `min(cap, n_max)`, in registry order.
pub fn report_plan(limits: &Limits, n_max: Option<usize>) -> Vec<(&'static ScenarioDescriptor, Option<usize>)> {
    let mut plan = Vec::new();
    for d in registry() {
        match d.param {
            None => plan.push((d, None)),
            Some(p) => {
                let hi = n_max.map_or(p.max(limits), |m| m.min(p.max(limits)));
                plan.extend((p.min..=hi).map(|v| (d, Some(v))));
            }
        }
    }
    plan
}

pub fn run_report(limits: &Limits, n_max: Option<usize>) -> Result<Vec<VerificationResult>, ScenarioError> {
    report_plan(limits, n_max)
        .par_iter()
        .map(|(d, v)| d.run(*v, limits))
        .collect()
}

struct Style {
    color: bool,
}

impl Style {
    fn status(&self, s: Status) -> String {
        let (text, code) = match s {
            Status::Pass => ("PASS", "32"),
            Status::Fail => ("FAIL", "31"),
        };
        if self.color {
            format!("\x1b[{code}m{text}\x1b[0m")
        } else {
            text.to_string()
        }
    }
}

fn describe(r: &VerificationResult) -> String {
    let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
    if params.is_empty() {
        r.scenario.clone()
    } else {
        format!("{} {}", r.scenario, params.join(" "))
    }
}

fn print_result(out: &mut dyn Write, style: &Style, r: &VerificationResult) -> std::io::Result<()> {
    writeln!(out, "{} {} ({} ms)", style.status(r.status), describe(r), r.elapsed.as_millis())?;
    for d in &r.details {
        writeln!(out, "  {d}")?;
    }
    for a in &r.axioms_used {
        writeln!(out, "  axiom: {a}")?;
    }
    if let Some(w) = &r.witness {
        writeln!(out, "  witness: {w}")?;
    }
    Ok(())
}

fn read(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

/// Parse `args` (including the program name) and execute; returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    let style = Style {
        color: std::env::var_os("NO_COLOR").is_none() && std::io::stdout().is_terminal(),
    };
    match execute(cli.cmd, out, &style) {
        Ok(code) => code,
        Err(msg) if msg == BROKEN_PIPE => EXIT_PASS,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

/// Marks a failed write to `out`; a closed pipe is not reported as an error.
const BROKEN_PIPE: &str = "\0broken pipe";

fn execute(cmd: Cmd, out: &mut dyn Write, style: &Style) -> Result<i32, String> {
    let io = |e: std::io::Error| {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            BROKEN_PIPE.to_string()
        } else {
            e.to_string()
        }
    };
    match cmd {
        Cmd::List => {
            for d in registry() {
                let p = d.param.map_or(String::new(), |p| {
                    format!(" [{} in {}..={}, default {}]", p.name, p.min, p.max(&Limits::default()), p.default)
                });
                writeln!(out, "{:<22} {:<10} {}{p}", d.name, d.module, d.description).map_err(io)?;
            }
            Ok(EXIT_PASS)
        }
        Cmd::Verify {
            scenario,
            n,
            format,
            unsafe_n,
            control,
        } => {
            let d = find(&scenario).ok_or_else(|| format!("unknown scenario {scenario:?}; see `list`"))?;
            if n.is_some() && d.param.is_none() {
                return Err(format!("scenario {scenario} takes no parameter"));
            }
            let limits = if unsafe_n { Limits::unbounded() } else { Limits::default() };
            let r = if control { d.run_control(n, &limits) } else { d.run(n, &limits) }.map_err(|e| e.to_string())?;
            match format {
                Format::Text => print_result(out, style, &r).map_err(io)?,
                Format::Json => {
                    let s = serde_json::to_string_pretty(&ResultRecord::from(&r)).expect("serializable");
                    writeln!(out, "{s}").map_err(io)?;
                }
            }
            Ok(if r.passed() { EXIT_PASS } else { EXIT_FAIL })
        }
        Cmd::Snf { input } => {
            let m = parse_matrix(&read(&input)?).map_err(|e| e.to_string())?;
            let f = smith_normal_form(&m);
            let factors: Vec<String> = m.invariant_factors().iter().map(|d| d.to_string()).collect();
            writeln!(out, "invariant factors: {}", factors.join(" ")).map_err(io)?;
            for (name, mat) in [("S", &f.s), ("U", &f.u), ("V", &f.v)] {
                write!(out, "{name}:\n{}", write_matrix(mat)).map_err(io)?;
            }
            Ok(EXIT_PASS)
        }
        Cmd::Homology { input } => {
            let c = parse_complex(&read(&input)?).map_err(|e| e.to_string())?;
            for (k, h) in c.homology().iter().enumerate() {
                writeln!(out, "H_{k} = {h}").map_err(io)?;
            }
            Ok(EXIT_PASS)
        }
        Cmd::Pi1 {
            input,
            simplify,
            abelianize,
        } => {
            let p = parse_presentation(&read(&input)?).map_err(|e| e.to_string())?;
            let p = if simplify {
                let s = p.simplify();
                for step in &s.steps {
                    writeln!(out, "# {step}").map_err(io)?;
                }
                if let Some(r) = s.free_rank() {
                    writeln!(out, "# free of rank {r}").map_err(io)?;
                }
                s.presentation
            } else {
                p
            };
            write!(out, "{}", write_presentation(&p)).map_err(io)?;
            if abelianize {
                writeln!(out, "# abelianization: {}", p.abelianization()).map_err(io)?;
            }
            Ok(EXIT_PASS)
        }
        Cmd::Report {
            all,
            n_max,
            out: path,
            unsafe_n,
        } => {
            if !all {
                return Err("report needs --all".into());
            }
            let limits = if unsafe_n { Limits::unbounded() } else { Limits::default() };
            let start = Instant::now();
            let results = run_report(&limits, n_max).map_err(|e| e.to_string())?;
            let report = Report::new(&results, start.elapsed().as_millis() as u64);
            for r in &results {
                writeln!(out, "{} {}", style.status(r.status), describe(r)).map_err(io)?;
            }
            writeln!(out, "{} passed, {} failed", report.summary.pass, report.summary.fail).map_err(io)?;
            if let Some(path) = path {
                let s = serde_json::to_string_pretty(&report).expect("serializable");
                std::fs::write(&path, s + "\n").map_err(|e| format!("{}: {e}", path.display()))?;
            }
            Ok(if report.summary.fail == 0 { EXIT_PASS } else { EXIT_FAIL })
        }
    }
}
