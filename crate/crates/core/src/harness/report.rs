//! Exact bound values and the CSV/JSON report formats.

use std::cmp::Ordering;
use std::fmt;
use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::Path;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::check::Finding;
use crate::error::{Error, Result};
use crate::labeling::ProofTrace;

/// A nonnegative rational in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Ratio {
    pub num: u64,
    pub den: u64,
}

impl Ratio {
    pub fn new(num: u64, den: u64) -> Self {
        assert!(den != 0, "zero denominator");
        let g = num.gcd(&den);
        Ratio {
            num: num / g,
            den: den / g,
        }
    }
}

impl Ord for Ratio {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }
}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// Domination numbers of one pair and the bounds they are compared with.
/// Every verdict is decided in integer arithmetic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub g6_g: String,
    pub g6_h: String,
    pub gamma_g: usize,
    pub gamma_h: usize,
    pub gamma_product: usize,
    /// `γ(G□H) >= γ(G)γ(H)`.
    pub vizing_lhs_ok: bool,
    /// `3γ(G□H) >= 2γ(G)γ(H)`.
    pub two_thirds_ok: bool,
    /// `(γ(G)γ(H) + min(γ(G), γ(H))) / 2`, reported for context.
    pub suen_tarr_value: Ratio,
    /// `γ(G)(γ(H) + 1) / 2`, reported for context.
    pub survey_clawfree_value: Ratio,
    /// `γ(G□H) / (γ(G)γ(H))`.
    pub ratio: Ratio,
}

impl BoundReport {
    pub fn new(g6_g: String, g6_h: String, gamma_g: usize, gamma_h: usize, gamma_product: usize) -> Self {
        let (a, b, p) = (gamma_g as u64, gamma_h as u64, gamma_product as u64);
        BoundReport {
            g6_g,
            g6_h,
            gamma_g,
            gamma_h,
            gamma_product,
            vizing_lhs_ok: p >= a * b,
            two_thirds_ok: 3 * p >= 2 * a * b,
            suen_tarr_value: Ratio::new(a * b + a.min(b), 2),
            survey_clawfree_value: Ratio::new(a * (b + 1), 2),
            ratio: Ratio::new(p, a * b),
        }
    }
}

/// One `(G, H)` row of a corpus run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceRecord {
    pub report: BoundReport,
    /// Number of minimum dominating sets the pipeline was run on.
    pub traces_checked: usize,
    /// Largest `Σ|D_i| / |D|` over those runs.
    pub max_overcount: Ratio,
    pub product_search_nodes: u64,
    pub violations: Vec<Finding>,
    pub elapsed_us: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub traces: Option<Vec<ProofTrace>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Json,
}

pub const CSV_HEADER: [&str; 14] = [
    "g6_G",
    "g6_H",
    "gammaG",
    "gammaH",
    "gammaGH",
    "vizing_ok",
    "two_thirds_ok",
    "ratio_num",
    "ratio_den",
    "st_bound_num",
    "st_bound_den",
    "survey_bound_num",
    "survey_bound_den",
    "violations",
];

/// Writes `records` to `path`. CSV rows depend only on the records (no
/// timings), so identical corpora give byte-identical files.
pub fn emit_report(records: &[InstanceRecord], format: ReportFormat, path: &Path) -> Result<()> {
    if records.is_empty() {
        return Err(Error::Input("refusing to write an empty report".into()));
    }
    let file = File::create(path)?;
    match format {
        ReportFormat::Csv => {
            let mut w = csv::Writer::from_writer(BufWriter::new(file));
            w.write_record(CSV_HEADER)?;
            for r in records {
                let b = &r.report;
                w.write_record([
                    b.g6_g.clone(),
                    b.g6_h.clone(),
                    b.gamma_g.to_string(),
                    b.gamma_h.to_string(),
                    b.gamma_product.to_string(),
                    b.vizing_lhs_ok.to_string(),
                    b.two_thirds_ok.to_string(),
                    b.ratio.num.to_string(),
                    b.ratio.den.to_string(),
                    b.suen_tarr_value.num.to_string(),
                    b.suen_tarr_value.den.to_string(),
                    b.survey_clawfree_value.num.to_string(),
                    b.survey_clawfree_value.den.to_string(),
                    r.violations.len().to_string(),
                ])?;
            }
            w.flush()?;
        }
        ReportFormat::Json => {
            let mut w = BufWriter::new(file);
            serde_json::to_writer_pretty(&mut w, records)?;
            w.write_all(b"\n")?;
            w.flush()?;
        }
    }
    Ok(())
}

pub fn load_json_report(path: &Path) -> Result<Vec<InstanceRecord>> {
    Ok(serde_json::from_reader(BufReader::new(File::open(path)?))?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratio_is_reduced_and_ordered() {
        let r = Ratio::new(6, 4);
        assert_eq!((r.num, r.den), (3, 2));
        assert!(Ratio::new(2, 3) < Ratio::new(3, 4));
        assert_eq!(Ratio::new(2, 3).cmp(&Ratio::new(4, 6)), Ordering::Equal);
        assert_eq!(Ratio::new(0, 5), Ratio { num: 0, den: 1 });
    }

    #[test]
    fn bound_report_arithmetic() {
        let b = BoundReport::new("A".into(), "B".into(), 2, 2, 6);
        assert_eq!(b.ratio, Ratio { num: 3, den: 2 });
        assert!(b.vizing_lhs_ok && b.two_thirds_ok);
        assert_eq!(b.suen_tarr_value, Ratio::new(3, 1));
        assert_eq!(b.survey_clawfree_value, Ratio::new(3, 1));

        // 3·2 < 2·2·2
        let b = BoundReport::new("A".into(), "B".into(), 2, 2, 2);
        assert!(!b.vizing_lhs_ok && !b.two_thirds_ok);
        let b = BoundReport::new("A".into(), "B".into(), 3, 1, 2);
        assert!(!b.vizing_lhs_ok && b.two_thirds_ok);
    }
}
