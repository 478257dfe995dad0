//! The `rgw` command-line front end.
//!
//! Every command produces one report (JSON by default, CSV on request) and
//! an exit status: `0` success, `1` failed check or runtime error, `2` usage
//! error, `3` enumeration budget exceeded. Failures emit a JSON error object
//! `{error, message, ...}` regardless of `--format`.

mod report;
pub mod suite;

use std::fs;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::hurwitz::{CoverCountQuery, Method, Oracle, DEFAULT_BUDGET};
use crate::partitions::{partitions_of, Profile};
use crate::signs::{compose, named_chain, register_paper_isos, ChainName};
use crate::tqft::instantiate::{split_check, standard_insertions, SplitCheck};
use crate::tqft::{series_assemble, vfc_coefficient_chain, CoefficientChainJson, InvariantTable};

pub use report::Format;
use report::{csv_rows, ChainRow, HurwitzRow, SeriesRow, SignRow, SplitRow, SuiteRow};

pub const CACHE_DIR_ENV: &str = "RGW_CACHE_DIR";

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "rgw", version, about = "Exact checks of the real splitting rule for local curves")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Maximum number of elementary tuple extensions for enumeration.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: u64,

    /// Write the report here instead of stdout.
    #[arg(long = "output", global = true)]
    pub output_path: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Directory for persisted character tables.
    #[arg(long, global = true, env = CACHE_DIR_ENV)]
    pub cache_dir: Option<PathBuf>,

    /// Omit `elapsed_ms`, making reports byte-identical across runs.
    #[arg(long, global = true)]
    pub no_timing: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count connected-or-not branched covers of a genus-g surface.
    Hurwitz(HurwitzArgs),
    /// Compare both sides of the degeneration rule on doublet targets.
    SplitCheck(SplitCheckArgs),
    /// Assemble generating series from a table file.
    Series(SeriesArgs),
    /// Coefficient table of the virtual class comparison per partition.
    Chain(ChainArgs),
    /// Replay an orientation-sign chain.
    Signs(SignsArgs),
    /// Run the full acceptance battery.
    Suite,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Enum,
    Char,
    Both,
    /// `both` when enumeration fits the budget, `char` otherwise.
    Auto,
}

impl MethodArg {
    fn fixed(self) -> Option<Method> {
        match self {
            MethodArg::Enum => Some(Method::Enumeration),
            MethodArg::Char => Some(Method::Characters),
            MethodArg::Both => Some(Method::Both),
            MethodArg::Auto => None,
        }
    }
}

#[derive(Debug, Args)]
pub struct HurwitzArgs {
    #[arg(long)]
    pub d: u32,
    #[arg(long, default_value_t = 0)]
    pub genus: u32,
    /// Ramification profiles as JSON, e.g. "[[2],[2]]".
    #[arg(long, default_value = "[]")]
    pub profiles: String,
    #[arg(long)]
    pub ordered: bool,
    #[arg(long, value_enum, default_value_t = MethodArg::Char)]
    pub method: MethodArg,
}

#[derive(Debug, Args)]
pub struct SplitCheckArgs {
    #[arg(long, required_unless_present = "max_d")]
    pub d: Option<u32>,
    #[arg(long, default_value_t = 1)]
    pub half_genus: u32,
    #[arg(long, default_value = "[]")]
    pub profiles: String,
    /// Sweep degrees `1..=M` over the standard insertions instead.
    #[arg(long, conflicts_with = "d")]
    pub max_d: Option<u32>,
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    pub level: i64,
    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    pub method: MethodArg,
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    #[arg(long)]
    pub table: PathBuf,
    /// Restrict to one degree.
    #[arg(long)]
    pub d: Option<u32>,
    /// Restrict to one profile (requires --d).
    #[arg(long, requires = "d")]
    pub profiles: Option<String>,
}

#[derive(Debug, Args)]
pub struct ChainArgs {
    #[arg(long)]
    pub d: u32,
}

#[derive(Debug, Args)]
pub struct SignsArgs {
    #[arg(long)]
    pub ell: u32,
    #[arg(long, value_enum, default_value_t = ChainArg::Main)]
    pub chain: ChainArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ChainArg {
    Main,
    Comsign,
}

/// Exit status plus the text to emit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub report: String,
}

pub fn run(config: &RunConfig) -> Outcome {
    let oracle = Oracle::new(config.budget, config.cache_dir.clone());
    let start = Instant::now();
    let result = match &config.command {
        Command::Hurwitz(a) => hurwitz(&oracle, a),
        Command::SplitCheck(a) => split_check_cmd(&oracle, a),
        Command::Series(a) => series_cmd(a),
        Command::Chain(a) => chain_cmd(a),
        Command::Signs(a) => signs_cmd(a),
        Command::Suite => suite_cmd(&oracle),
    };
    let elapsed = (!config.no_timing).then(|| start.elapsed().as_millis() as u64);
    match result {
        Ok(mut r) => {
            if let (Some(ms), Value::Object(map)) = (elapsed, &mut r.json) {
                map.insert("elapsed_ms".into(), ms.into());
            }
            let text = match config.format {
                Format::Json => pretty(&r.json),
                Format::Csv => match r.rows.to_csv() {
                    Ok(t) => t,
                    Err(e) => return error_outcome(&e, None),
                },
            };
            Outcome {
                code: if r.passed { EXIT_OK } else { EXIT_CHECK_FAILED },
                report: if r.passed {
                    text
                } else if config.format == Format::Json {
                    pretty(&json!({
                        "error": "check-failed",
                        "message": r.failure.unwrap_or_default(),
                        "report": r.json,
                    }))
                } else {
                    text
                },
            }
        }
        Err(failure) => {
            let (e, partial) = *failure;
            error_outcome(&e, partial)
        }
    }
}

/// Writes the report to `--output` or stdout.
pub fn emit(config: &RunConfig, outcome: &Outcome) -> std::io::Result<()> {
    match &config.output_path {
        Some(path) => fs::write(path, &outcome.report),
        None => {
            use std::io::Write;
            let mut out = std::io::stdout().lock();
            out.write_all(outcome.report.as_bytes())?;
            out.flush()
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::EnumerationTooLarge { .. } => EXIT_BUDGET,
        Error::InvalidDegree(_) | Error::InvalidPartition(_) | Error::InvalidProfile(_) => EXIT_USAGE,
        _ => EXIT_CHECK_FAILED,
    }
}

fn error_outcome(e: &Error, partial: Option<Value>) -> Outcome {
    let mut obj = json!({ "error": e.kind(), "message": e.to_string() });
    if let Some(p) = partial {
        obj["partial"] = p;
    }
    Outcome {
        code: exit_code(e),
        report: pretty(&obj),
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

struct Report {
    json: Value,
    rows: report::Rows,
    passed: bool,
    failure: Option<String>,
}

impl Report {
    fn ok(json: Value, rows: report::Rows) -> Self {
        Report {
            json,
            rows,
            passed: true,
            failure: None,
        }
    }
}

/// Failures carry an optional partial report.
type Failure = Box<(Error, Option<Value>)>;
type CmdResult = std::result::Result<Report, Failure>;

fn plain<T>(r: Result<T>) -> std::result::Result<T, Failure> {
    r.map_err(|e| Box::new((e, None)))
}

fn hurwitz(oracle: &Oracle, a: &HurwitzArgs) -> CmdResult {
    let profile = plain(Profile::parse(a.d, &a.profiles))?;
    let mut q = CoverCountQuery::new(a.genus, profile.clone());
    if a.ordered {
        q = q.ordered();
    }
    let method = a.method.fixed().unwrap_or(Method::Both);
    let method = match (a.method, method) {
        (MethodArg::Auto, _) if Oracle::enumeration_cost(&q) > u128::from(oracle.budget()) => Method::Characters,
        (_, m) => m,
    };
    let query = json!({
        "d": a.d,
        "genus": a.genus,
        "profiles": to_value(&profile),
        "ordered": a.ordered,
    });
    let value = oracle.count(&q, method).map_err(|e| {
        let partial = matches!(e, Error::EnumerationTooLarge { .. }).then(|| {
            json!({
                "query": query.clone(),
                "chi_forced": q.chi_forced(),
                "method": to_value(&method),
                "enumeration_estimate": Oracle::enumeration_cost(&q).to_string(),
                "budget": oracle.budget(),
            })
        });
        Box::new((e, partial))
    })?;
    let json = json!({
        "query": query,
        "chi_forced": q.chi_forced(),
        "value": to_value(&crate::json::RationalJson::from(&value)),
        "method": to_value(&method),
    });
    let row = HurwitzRow {
        d: a.d,
        genus: a.genus,
        profiles: profile.to_json_string(),
        ordered: a.ordered,
        chi_forced: q.chi_forced(),
        num: value.numer().to_string(),
        den: value.denom().to_string(),
        method: method_name(method).into(),
    };
    Ok(Report::ok(json, csv_rows(vec![row])))
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Enumeration => "enum",
        Method::Characters => "char",
        Method::Both => "both",
    }
}

fn run_split_check(
    oracle: &Oracle,
    half_genus: u32,
    profile: &Profile,
    level: i64,
    method: MethodArg,
) -> Result<SplitCheck> {
    match method.fixed() {
        Some(m) => split_check(oracle, half_genus, profile, level, m),
        None => match split_check(oracle, half_genus, profile, level, Method::Both) {
            Err(Error::EnumerationTooLarge { .. }) => {
                split_check(oracle, half_genus, profile, level, Method::Characters)
            }
            other => other,
        },
    }
}

fn split_check_cmd(oracle: &Oracle, a: &SplitCheckArgs) -> CmdResult {
    let profiles: Vec<Profile> = match (a.max_d, a.d) {
        (Some(m), _) => {
            let mut all = Vec::new();
            for d in 1..=m {
                all.extend(plain(standard_insertions(d))?);
            }
            all
        }
        (None, Some(d)) => vec![plain(Profile::parse(d, &a.profiles))?],
        (None, None) => unreachable!("clap requires --d or --max-d"),
    };
    let mut checks = Vec::new();
    let mut rows = Vec::new();
    let mut failure = None;
    for p in &profiles {
        let c = run_split_check(oracle, a.half_genus, p, a.level, a.method).map_err(|e| {
            let partial = json!({ "completed": checks.clone(), "failed_at": { "d": p.degree(), "profile": to_value(p) } });
            Box::new((e, Some(partial)))
        })?;
        if failure.is_none() && !(c.invariant_agrees() && c.series_agrees()) {
            failure = Some(format!(
                "degeneration rule disagrees at d={}, profile={}: smoothing {} vs split {}",
                c.degree(),
                c.profile,
                c.smoothing,
                c.split
            ));
        }
        rows.push(SplitRow::from_check(&c, a.level));
        checks.push(report::split_check_json(&c, method_name(c.method)));
    }
    let passed = failure.is_none();
    Ok(Report {
        json: json!({
            "half_genus": a.half_genus,
            "level": a.level,
            "checks": checks,
            "all_agree": passed,
        }),
        rows: csv_rows(rows),
        passed,
        failure,
    })
}

fn series_cmd(a: &SeriesArgs) -> CmdResult {
    let table = plain(InvariantTable::load(&a.table))?;
    let filter = match (&a.d, &a.profiles) {
        (Some(d), Some(p)) => Some((*d, Some(plain(Profile::parse(*d, p))?))),
        (Some(d), None) => Some((*d, None)),
        _ => None,
    };
    let mut keys: Vec<(u32, Profile)> = table
        .entries()
        .map(|(k, _)| (k.degree, k.profile.clone()))
        .filter(|(d, p)| match &filter {
            None => true,
            Some((fd, None)) => d == fd,
            Some((fd, Some(fp))) => d == fd && p == fp,
        })
        .collect();
    keys.dedup();
    if let Some((d, Some(p))) = &filter {
        if keys.is_empty() {
            keys.push((*d, p.clone()));
        }
    }
    let mut series = Vec::new();
    let mut rows = Vec::new();
    for (d, p) in keys {
        let s = plain(series_assemble(&table, d, &p))?;
        for ((t2, u), c) in s.terms() {
            rows.push(SeriesRow {
                d,
                profile: p.to_json_string(),
                t2,
                u,
                num: c.numer().to_string(),
                den: c.denom().to_string(),
            });
        }
        series.push(json!({ "d": d, "profile": to_value(&p), "terms": to_value(&s.to_json()) }));
    }
    Ok(Report::ok(
        json!({ "target": to_value(table.target()), "series": series }),
        csv_rows(rows),
    ))
}

fn chain_cmd(a: &ChainArgs) -> CmdResult {
    let chains: Vec<_> = plain(partitions_of(a.d))?
        .iter()
        .map(vfc_coefficient_chain)
        .collect();
    let all_hold = chains.iter().all(|c| c.holds());
    let rows: Vec<ChainRow> = chains.iter().map(ChainRow::from).collect();
    let json_rows: Vec<CoefficientChainJson> = chains.iter().map(CoefficientChainJson::from).collect();
    Ok(Report {
        json: json!({ "d": a.d, "rows": to_value(&json_rows), "all_hold": all_hold }),
        rows: csv_rows(rows),
        passed: all_hold,
        failure: (!all_hold).then(|| "coefficient chain does not close".to_string()),
    })
}

fn signs_cmd(a: &SignsArgs) -> CmdResult {
    let name = match a.chain {
        ChainArg::Main => ChainName::Main,
        ChainArg::Comsign => ChainName::Comsign,
    };
    let catalog = register_paper_isos();
    let chain = plain(named_chain(&catalog, name))?;
    let r = plain(compose(&chain, a.ell))?;
    let rows = r
        .steps
        .iter()
        .enumerate()
        .map(|(i, s)| SignRow {
            step: i + 1,
            name: s.name.clone(),
            sign: s.sign,
            running: s.running,
        })
        .collect();
    Ok(Report::ok(
        json!({
            "chain": to_value(&name),
            "ell": a.ell,
            "source": r.source.to_string(),
            "target": r.target.to_string(),
            "steps": to_value(&r.steps),
            "sign": r.sign,
        }),
        csv_rows::<SignRow>(rows),
    ))
}

fn suite_cmd(oracle: &Oracle) -> CmdResult {
    let outcomes = suite::run_all(oracle);
    let passed = outcomes.iter().all(|o| o.passed);
    let failure = outcomes
        .iter()
        .find(|o| !o.passed)
        .map(|o| format!("criterion {} ({}) failed: {}", o.id, o.name, o.detail));
    let rows: Vec<SuiteRow> = outcomes.iter().map(SuiteRow::from).collect();
    Ok(Report {
        json: json!({ "criteria": to_value(&outcomes), "passed": passed }),
        rows: csv_rows(rows),
        passed,
        failure,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        let mut full = vec!["rgw", "--no-timing"];
        full.extend_from_slice(args);
        run(&RunConfig::try_parse_from(full).unwrap())
    }

    fn parse(o: &Outcome) -> Value {
        serde_json::from_str(&o.report).unwrap()
    }

    #[test]
    fn hurwitz_torus_degree_two() {
        let o = run_args(&["hurwitz", "--d", "2", "--genus", "1", "--profiles", "[]"]);
        assert_eq!(o.code, 0);
        assert!(o.report.contains(r#""value": {
    "num": 2,
    "den": 1
  }"#), "{}", o.report);
    }

    #[test]
    fn chain_degree_three_has_three_rows() {
        let o = run_args(&["chain", "--d", "3"]);
        let v = parse(&o);
        let rows = v["rows"].as_array().unwrap();
        assert_eq!(rows.len(), 3);
        let lambdas: Vec<String> = rows.iter().map(|r| r["lambda"].to_string()).collect();
        assert_eq!(lambdas, vec!["[3]", "[2,1]", "[1,1,1]"]);
    }

    #[test]
    fn signs_main_chain() {
        let o = run_args(&["signs", "--ell", "1", "--chain", "main"]);
        assert_eq!(o.code, 0);
        assert_eq!(parse(&o)["sign"].to_string(), "1");
    }

    #[test]
    fn budget_exceeded_exits_three_with_partial_report() {
        let o = run_args(&["--budget", "10", "hurwitz", "--d", "4", "--genus", "1", "--method", "enum"]);
        assert_eq!(o.code, EXIT_BUDGET);
        let v = parse(&o);
        assert_eq!(v["error"], "enumeration-too-large");
        assert_eq!(v["partial"]["chi_forced"].to_string(), "0");
    }

    #[test]
    fn bad_profile_is_a_usage_error() {
        let o = run_args(&["hurwitz", "--d", "3", "--profiles", "[[2]]"]);
        assert_eq!(o.code, EXIT_USAGE);
        assert_eq!(parse(&o)["error"], "invalid-profile");
    }

    #[test]
    fn zero_budget_and_unknown_flags_are_rejected() {
        assert!(RunConfig::try_parse_from(["rgw", "--budget", "0", "suite"]).is_err());
        assert!(RunConfig::try_parse_from(["rgw", "chain", "--d", "3", "--bogus"]).is_err());
    }

    #[test]
    fn deterministic_without_timing() {
        let args = ["split-check", "--d", "3", "--half-genus", "1", "--profiles", "[[3]]"];
        assert_eq!(run_args(&args), run_args(&args));
    }

    #[test]
    fn csv_has_fixed_header() {
        let o = run_args(&["--format", "csv", "chain", "--d", "2"]);
        let mut lines = o.report.lines();
        assert_eq!(lines.next().unwrap(), "lambda,c_split_num,c_split_den,deg_phi,deg_q0,holds");
        assert_eq!(lines.count(), 2);
    }
}
