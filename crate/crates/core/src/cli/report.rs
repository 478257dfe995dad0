//! Report shapes. JSON reports are built ad hoc with `serde_json`; CSV
//! exports use one flat row type per command with a fixed header.

use clap::ValueEnum;
use serde::Serialize;
use serde_json::{json, Value};

use super::suite::CriterionOutcome;
use crate::error::{Error, Result};
use crate::json::{int_number, RationalJson};
use crate::tqft::instantiate::SplitCheck;
use crate::tqft::CoefficientChain;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

pub(super) trait CsvRow: Serialize {
    const HEADER: &'static [&'static str];
}

/// CSV text rendered eagerly, so commands stay format-agnostic.
pub(super) struct Rows(Result<String>);

impl Rows {
    pub(super) fn to_csv(&self) -> Result<String> {
        self.0.clone()
    }
}

pub(super) fn csv_rows<T: CsvRow>(rows: Vec<T>) -> Rows {
    let render = || -> Result<String> {
        let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
        let csv_err = |e: csv::Error| Error::Io(e.to_string());
        w.write_record(T::HEADER).map_err(csv_err)?;
        for row in &rows {
            w.serialize(row).map_err(csv_err)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))
    };
    Rows(render())
}

#[derive(Serialize)]
pub(super) struct HurwitzRow {
    pub d: u32,
    pub genus: u32,
    pub profiles: String,
    pub ordered: bool,
    pub chi_forced: i64,
    pub num: String,
    pub den: String,
    pub method: String,
}

impl CsvRow for HurwitzRow {
    const HEADER: &'static [&'static str] =
        &["d", "genus", "profiles", "ordered", "chi_forced", "num", "den", "method"];
}

#[derive(Serialize)]
pub(super) struct SplitRow {
    pub d: u32,
    pub half_genus: u32,
    pub level: i64,
    pub profile: String,
    pub chi: i64,
    pub method: String,
    pub smoothing_num: String,
    pub smoothing_den: String,
    pub split_num: String,
    pub split_den: String,
    pub invariant_agrees: bool,
    pub series_agrees: bool,
}

impl CsvRow for SplitRow {
    const HEADER: &'static [&'static str] = &[
        "d",
        "half_genus",
        "level",
        "profile",
        "chi",
        "method",
        "smoothing_num",
        "smoothing_den",
        "split_num",
        "split_den",
        "invariant_agrees",
        "series_agrees",
    ];
}

impl SplitRow {
    pub(super) fn from_check(c: &SplitCheck, level: i64) -> Self {
        SplitRow {
            d: c.degree(),
            half_genus: c.half_genus,
            level,
            profile: c.profile.to_json_string(),
            chi: c.chi,
            method: super::method_name(c.method).into(),
            smoothing_num: c.smoothing.numer().to_string(),
            smoothing_den: c.smoothing.denom().to_string(),
            split_num: c.split.numer().to_string(),
            split_den: c.split.denom().to_string(),
            invariant_agrees: c.invariant_agrees(),
            series_agrees: c.series_agrees(),
        }
    }
}

pub(super) fn split_check_json(c: &SplitCheck, method: &str) -> Value {
    let terms: Vec<Value> = c
        .terms
        .iter()
        .map(|t| {
            json!({
                "lambda": t.lambda,
                "zeta": int_number(&t.zeta.clone().into()),
                "chi": t.chi,
                "value": RationalJson::from(&t.value),
            })
        })
        .collect();
    json!({
        "d": c.degree(),
        "profile": c.profile,
        "chi": c.chi,
        "method": method,
        "smoothing": RationalJson::from(&c.smoothing),
        "terms": terms,
        "split": RationalJson::from(&c.split),
        "invariant_agrees": c.invariant_agrees(),
        "smoothing_series": c.smoothing_series.to_json(),
        "split_series": c.split_series.to_json(),
        "series_agrees": c.series_agrees(),
    })
}

#[derive(Serialize)]
pub(super) struct SeriesRow {
    pub d: u32,
    pub profile: String,
    pub t2: i64,
    pub u: i64,
    pub num: String,
    pub den: String,
}

impl CsvRow for SeriesRow {
    const HEADER: &'static [&'static str] = &["d", "profile", "t2", "u", "num", "den"];
}

#[derive(Serialize)]
pub(super) struct ChainRow {
    pub lambda: String,
    pub c_split_num: String,
    pub c_split_den: String,
    pub deg_phi: String,
    pub deg_q0: String,
    pub holds: bool,
}

impl CsvRow for ChainRow {
    const HEADER: &'static [&'static str] =
        &["lambda", "c_split_num", "c_split_den", "deg_phi", "deg_q0", "holds"];
}

impl From<&CoefficientChain> for ChainRow {
    fn from(c: &CoefficientChain) -> Self {
        ChainRow {
            lambda: c.lambda.to_string(),
            c_split_num: c.c_split.numer().to_string(),
            c_split_den: c.c_split.denom().to_string(),
            deg_phi: c.deg_phi.to_string(),
            deg_q0: c.deg_q0.to_string(),
            holds: c.holds(),
        }
    }
}

#[derive(Serialize)]
pub(super) struct SignRow {
    pub step: usize,
    pub name: String,
    pub sign: i8,
    pub running: i8,
}

impl CsvRow for SignRow {
    const HEADER: &'static [&'static str] = &["step", "name", "sign", "running"];
}

#[derive(Serialize)]
pub(super) struct SuiteRow {
    pub id: u32,
    pub criterion: String,
    pub status: String,
    pub checks: u64,
    pub detail: String,
}

impl CsvRow for SuiteRow {
    const HEADER: &'static [&'static str] = &["id", "criterion", "status", "checks", "detail"];
}

impl From<&CriterionOutcome> for SuiteRow {
    fn from(o: &CriterionOutcome) -> Self {
        SuiteRow {
            id: o.id,
            criterion: o.name.to_string(),
            status: o.status().into(),
            checks: o.checks,
            detail: o.detail.clone(),
        }
    }
}
