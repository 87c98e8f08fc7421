//! Structured solve report.
//!
//! One JSON object per document, keys in the fixed order `n`, `min_value`,
//! `argmin`, `oracle_queries`, `search_lo`, `offset_applied`, followed by the
//! optional `ilp_optimum` and `rational_min`. Unbounded integers are encoded
//! as decimal strings. The document ends with a single newline.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::ParseDiagnostic;
use crate::qubo::Assignment;
use crate::solvers::SolveReport;

/// Values derived from a reduction, reported next to the QUBO result.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ReportExtras {
    pub ilp_optimum: Option<BigInt>,
    /// `(numerator, denominator)` of the minimum of a rational instance.
    pub rational_min: Option<(BigInt, BigInt)>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ReportDocument {
    n: usize,
    min_value: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    argmin: Option<Vec<u8>>,
    oracle_queries: u64,
    search_lo: String,
    offset_applied: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    ilp_optimum: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rational_min: Option<String>,
}

pub fn write_report(report: &SolveReport) -> String {
    write_report_with(report, &ReportExtras::default())
}

pub fn write_report_with(report: &SolveReport, extras: &ReportExtras) -> String {
    let doc = ReportDocument {
        n: report.n,
        min_value: report.min_value.to_string(),
        argmin: report.argmin.as_ref().map(Assignment::to_bits),
        oracle_queries: report.queries,
        search_lo: report.search_lo.to_string(),
        offset_applied: report.offset_applied.to_string(),
        ilp_optimum: extras.ilp_optimum.as_ref().map(ToString::to_string),
        rational_min: extras.rational_min.as_ref().map(|(p, q)| format!("{p}/{q}")),
    };
    let mut out = serde_json::to_string(&doc).expect("report serializes");
    out.push('\n');
    out
}

fn decimal(field: &str, text: &str) -> Result<BigInt, ParseDiagnostic> {
    BigInt::from_str(text)
        .map_err(|_| ParseDiagnostic::new(1, 1, format!("field `{field}` is not a decimal integer: `{text}`")))
}

pub fn parse_report(text: &str) -> Result<(SolveReport, ReportExtras), ParseDiagnostic> {
    let doc: ReportDocument =
        serde_json::from_str(text).map_err(|e| ParseDiagnostic::new(e.line().max(1), e.column().max(1), e.to_string()))?;
    let argmin = match doc.argmin {
        Some(bits) => Some(
            Assignment::from_bits(&bits).map_err(|e| ParseDiagnostic::new(1, 1, e.to_string()))?,
        ),
        None => None,
    };
    let rational_min = match doc.rational_min {
        Some(s) => {
            let (p, q) = s
                .split_once('/')
                .ok_or_else(|| ParseDiagnostic::new(1, 1, format!("`rational_min` is not a fraction: `{s}`")))?;
            Some((decimal("rational_min", p)?, decimal("rational_min", q)?))
        }
        None => None,
    };
    let report = SolveReport {
        n: doc.n,
        min_value: decimal("min_value", &doc.min_value)?,
        argmin,
        queries: doc.oracle_queries,
        search_lo: decimal("search_lo", &doc.search_lo)?,
        offset_applied: decimal("offset_applied", &doc.offset_applied)?,
    };
    let extras = ReportExtras {
        ilp_optimum: doc.ilp_optimum.map(|s| decimal("ilp_optimum", &s)).transpose()?,
        rational_min,
    };
    Ok((report, extras))
}
