//! `maprec table | check | oracle`.
//!
//! Exit codes: 0 on success, 1 when a check fails or a computation errors,
//! 2 on usage errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use maprec_core::oracle::{enumerate_with, EnumSpec, Family, OracleError, DEFAULT_H_CAP};

use crate::cache::Cache;
use crate::checks::{run_suite, CheckParams, Suite, SuiteReport};
use crate::render::{render, Format};
use crate::table::{compute_table, TableFamily};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "maprec", version, about = "Map enumeration by topological recursion")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a table of map counts.
    Table(TableArgs),
    /// Run a verification suite and print a JSON report.
    Check(CheckArgs),
    /// Count maps by brute force.
    Oracle(OracleArgs),
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, value_parser = parse_family)]
    pub family: TableFamily,
    /// `2,4,6`, `2..14` (step 2), or `1,1;2,2` for several boundaries.
    #[arg(long)]
    pub lengths: Option<String>,
    /// Must agree with the family.
    #[arg(long)]
    pub genus: Option<usize>,
    #[arg(long, default_value_t = 8)]
    pub qmax: usize,
    #[arg(long, default_value = "md")]
    pub format: Format,
    /// Worker threads; defaults to all cores.
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Overridden by `MAPREC_CACHE`.
    #[arg(long)]
    pub cache_dir: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[arg(long)]
    pub suite: Suite,
    #[arg(long, default_value_t = 8)]
    pub qmax: usize,
    #[arg(long, default_value_t = 8)]
    pub order: usize,
    #[arg(long, default_value_t = 12)]
    pub hmax: usize,
    #[arg(long, default_value_t = 3)]
    pub gnmax: usize,
    /// `json` or `md`.
    #[arg(long, default_value = "json")]
    pub format: Format,
    #[arg(long)]
    pub jobs: Option<usize>,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(long, default_value_t = 0)]
    pub genus: usize,
    /// One length per boundary, e.g. `2,2`.
    #[arg(long)]
    pub lengths: String,
    #[arg(long, default_value_t = 0)]
    pub quads: usize,
    #[arg(long, default_value = "ordinary", value_parser = parse_class)]
    pub class: Family,
    /// Print one line per map before the count.
    #[arg(long)]
    pub witnesses: bool,
    /// Largest number of half-edges to enumerate.
    #[arg(long, default_value_t = DEFAULT_H_CAP)]
    pub cap: usize,
}

fn parse_family(s: &str) -> Result<TableFamily, String> {
    TableFamily::parse(s).ok_or_else(|| {
        let names: Vec<&str> = TableFamily::ALL.iter().map(|f| f.name()).collect();
        format!("unknown family `{}` (one of {})", s, names.join(", "))
    })
}

fn parse_class(s: &str) -> Result<Family, String> {
    Family::parse(s).ok_or_else(|| format!("unknown class `{}` (ordinary, mixed, simple, fully-simple)", s))
}

fn parse_number(s: &str) -> Result<usize, String> {
    s.trim().parse().map_err(|_| format!("`{}` is not a length", s.trim()))
}

/// Rows from a `--lengths` value; `boundaries` is the tuple size.
pub fn parse_lengths(spec: &str, boundaries: usize) -> Result<Vec<Vec<usize>>, String> {
    let mut rows = Vec::new();
    if boundaries == 1 {
        for item in spec.split(',') {
            if let Some((a, b)) = item.split_once("..") {
                let (a, b) = (parse_number(a)?, parse_number(b)?);
                if a > b || (b - a) % 2 != 0 {
                    return Err(format!("range `{}` must run upwards in steps of 2", item.trim()));
                }
                rows.extend((a..=b).step_by(2).map(|l| vec![l]));
            } else {
                rows.push(vec![parse_number(item)?]);
            }
        }
    } else {
        for tuple in spec.split(';') {
            let row = tuple.split(',').map(parse_number).collect::<Result<Vec<_>, _>>()?;
            if row.len() != boundaries {
                return Err(format!("`{}` has {} lengths, expected {}", tuple.trim(), row.len(), boundaries));
            }
            rows.push(row);
        }
    }
    Ok(rows)
}

#[derive(Debug)]
pub struct TableConfig {
    pub family: TableFamily,
    pub rows: Vec<Vec<usize>>,
    pub q_max: usize,
    pub format: Format,
    pub jobs: Option<usize>,
    pub cache: Option<Cache>,
}

#[derive(Debug)]
pub struct CheckConfig {
    pub suite: Suite,
    pub params: CheckParams,
    pub format: Format,
    pub jobs: Option<usize>,
}

#[derive(Debug)]
pub struct OracleConfig {
    pub spec: EnumSpec,
    pub witnesses: bool,
}

/// A command with validated arguments.
#[derive(Debug)]
pub enum RunConfig {
    Table(TableConfig),
    Check(CheckConfig),
    Oracle(OracleConfig),
}

fn check_jobs(jobs: Option<usize>) -> Result<Option<usize>, String> {
    match jobs {
        Some(0) => Err("--jobs must be positive".into()),
        j => Ok(j),
    }
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Result<RunConfig, String> {
        match cli.command {
            Command::Table(a) => {
                if let Some(g) = a.genus {
                    if g != a.family.genus() {
                        return Err(format!("family {} has genus {}, not {}", a.family, a.family.genus(), g));
                    }
                }
                let rows = match &a.lengths {
                    Some(s) => parse_lengths(s, a.family.boundaries())?,
                    None => a.family.default_lengths(),
                };
                if let Some(r) = rows.iter().find(|r| r.contains(&0)) {
                    return Err(format!("boundary lengths must be positive, got {:?}", r));
                }
                Ok(RunConfig::Table(TableConfig {
                    family: a.family,
                    rows,
                    q_max: a.qmax,
                    format: a.format,
                    jobs: check_jobs(a.jobs)?,
                    cache: Cache::from_env_or(a.cache_dir),
                }))
            }
            Command::Check(a) => {
                if a.format == Format::Csv {
                    return Err("check reports are json or md".into());
                }
                if a.gnmax == 0 {
                    return Err("--gnmax must be positive".into());
                }
                let params = CheckParams { q_max: a.qmax, order: a.order.max(1), h_max: a.hmax, gn_max: a.gnmax };
                Ok(RunConfig::Check(CheckConfig { suite: a.suite, params, format: a.format, jobs: check_jobs(a.jobs)? }))
            }
            Command::Oracle(a) => {
                let lengths = a.lengths.split(',').map(parse_number).collect::<Result<Vec<_>, _>>()?;
                if lengths.is_empty() || lengths.contains(&0) {
                    return Err("boundary lengths must be positive".into());
                }
                let mut spec = EnumSpec::quadrangulation(a.genus, &lengths, a.quads, a.class);
                spec.cap = a.cap;
                Ok(RunConfig::Oracle(OracleConfig { spec, witnesses: a.witnesses }))
            }
        }
    }
}

fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match jobs.and_then(|n| rayon::ThreadPoolBuilder::new().num_threads(n).build().ok()) {
        Some(pool) => pool.install(f),
        None => f(),
    }
}

fn report_md(r: &SuiteReport) -> String {
    let mut s = format!("suite {}: {}\n\n| case | expect | held | ok |\n|---|---|---|---|\n", r.suite, if r.passed { "pass" } else { "FAIL" });
    for c in &r.cases {
        let expect = match c.expect {
            crate::checks::Expect::Pass => "pass",
            crate::checks::Expect::Fail => "fail",
        };
        s.push_str(&format!("| {} | {} | {} | {} |\n", c.name, expect, c.held, if c.ok { "ok" } else { "WRONG" }));
    }
    s
}

pub fn execute(cfg: RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let written = match cfg {
        RunConfig::Table(c) => match with_jobs(c.jobs, || compute_table(c.family, &c.rows, c.q_max, c.cache.as_ref())) {
            Ok(t) => out.write_all(render(&t, c.format).as_bytes()).map(|_| EXIT_OK),
            Err(e) => writeln!(err, "error: {}", e).map(|_| EXIT_FAILURE),
        },
        RunConfig::Check(c) => {
            let report = with_jobs(c.jobs, || run_suite(c.suite, &c.params));
            let text = match c.format {
                Format::Md => report_md(&report),
                _ => serde_json::to_string_pretty(&report).expect("plain data serializes") + "\n",
            };
            out.write_all(text.as_bytes()).map(|_| if report.passed { EXIT_OK } else { EXIT_FAILURE })
        }
        RunConfig::Oracle(c) => {
            let mut lines = Vec::new();
            let result = enumerate_with(&c.spec, |m| {
                if c.witnesses {
                    lines.push(m.to_line());
                }
            });
            match result {
                Ok(n) => {
                    lines.push(n.to_string());
                    out.write_all((lines.join("\n") + "\n").as_bytes()).map(|_| EXIT_OK)
                }
                Err(e @ OracleError::TooLarge { .. }) => writeln!(err, "error: {} (raise --cap)", e).map(|_| EXIT_USAGE),
                Err(e) => writeln!(err, "error: {}", e).map(|_| EXIT_FAILURE),
            }
        }
    };
    written.unwrap_or(EXIT_FAILURE)
}

/// Parses, validates and runs; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match RunConfig::from_cli(cli) {
        Ok(cfg) => execute(cfg, out, err),
        Err(msg) => {
            let _ = writeln!(err, "error: {}", msg);
            EXIT_USAGE
        }
    }
}
