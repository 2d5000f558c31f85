use std::cmp::{Ordering, Reverse};
use std::collections::BTreeMap;
use std::fs;
use std::time::Instant;

use log::{debug, info, warn};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::check::{Finding, FindingKind};
use crate::claw::find_claw;
use crate::decomposition::{decompose, verify_structural_observations};
use crate::domination::{all_minimum_dominating_sets, domination_number, verify_allan_laskar};
use crate::enumerate::{enumerate_connected_up_to, DEFAULT_ENUMERATION_CAP, HARD_ENUMERATION_LIMIT};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::{emit_graph6, parse_graph6_lines};
use crate::labeling::{run_pipeline, ProofTrace};
use crate::product::cartesian_product;

use super::config::{CorpusSource, RunConfig};
use super::report::{emit_report, BoundReport, InstanceRecord, Ratio, ReportFormat};

/// Result of [`verify_pair`].
#[derive(Clone, Debug)]
pub struct PairVerification {
    pub report: BoundReport,
    pub traces: Vec<ProofTrace>,
    /// Critical findings from the structural checks, the bound checks and
    /// every trace.
    pub findings: Vec<Finding>,
    pub product_search_nodes: u64,
    pub max_overcount: Ratio,
}

/// Computes γ(G), an independent γ-set of G, γ(H) and γ(G□H), checks the
/// bounds, and runs the labeling pipeline on the product's minimum
/// dominating set (or on all of them, if configured and small enough).
pub fn verify_pair(g: &Graph, h: &Graph, cfg: &RunConfig) -> Result<PairVerification> {
    for (name, f) in [("G", g), ("H", h)] {
        if !f.is_connected()? {
            return Err(Error::Precondition(format!("{name} is disconnected")));
        }
    }
    if let Some(w) = find_claw(g) {
        return Err(Error::NotClawFree {
            center: w.center,
            leaves: w.leaves,
        });
    }

    let mut findings = Vec::new();
    let (allan_laskar, gamma_g, independent) = verify_allan_laskar(g)?;
    findings.extend(allan_laskar.findings);
    let gamma: Vec<usize> = independent.witness.to_vec();
    let dec = decompose(g, &gamma)?;
    findings.extend(verify_structural_observations(g, &dec)?.findings);

    let gamma_h = domination_number(h)?;
    let (product, _) = cartesian_product(g, h)?;
    let gamma_p = domination_number(&product)?;

    let report = BoundReport::new(
        emit_graph6(g)?,
        emit_graph6(h)?,
        gamma_g.value,
        gamma_h.value,
        gamma_p.value,
    );
    if !report.vizing_lhs_ok {
        findings.push(Finding::new(
            FindingKind::VizingInequality,
            format!(
                "γ(G□H) = {} < γ(G)γ(H) = {}·{}",
                gamma_p.value, gamma_g.value, gamma_h.value
            ),
        ));
    }
    if !report.two_thirds_ok {
        findings.push(Finding::new(
            FindingKind::TwoThirdsBound,
            format!(
                "3γ(G□H) = {} < 2γ(G)γ(H) = {}",
                3 * gamma_p.value,
                2 * gamma_g.value * gamma_h.value
            ),
        ));
    }

    let ds = if cfg.all_min_d && product.n() <= cfg.all_min_d_limit {
        all_minimum_dominating_sets(&product, gamma_p.value, false)?
    } else {
        vec![gamma_p.witness]
    };
    let mut traces = Vec::with_capacity(ds.len());
    let mut max_overcount = Ratio::new(1, 1);
    for d in ds {
        let t = run_pipeline(g, &gamma, h, d, cfg.order_shuffle_seed)?;
        findings.extend(t.findings().cloned());
        max_overcount = max_overcount.max(Ratio::new(t.label_class_total as u64, t.d_size() as u64));
        traces.push(t);
    }

    Ok(PairVerification {
        report,
        traces,
        findings,
        product_search_nodes: gamma_p.node_count,
        max_overcount,
    })
}

/// The instance achieving an extremal value, with ties broken by graph6
/// strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Extremal {
    pub value: Ratio,
    pub g6_g: String,
    pub g6_h: String,
}

impl Extremal {
    fn key(&self) -> (&str, &str) {
        (&self.g6_g, &self.g6_h)
    }
}

fn pick<F: Fn(&Extremal, &Extremal) -> Ordering>(a: Option<Extremal>, b: Option<Extremal>, cmp: F) -> Option<Extremal> {
    match (a, b) {
        (Some(a), Some(b)) => Some(if cmp(&b, &a) == Ordering::Less { b } else { a }),
        (a, b) => a.or(b),
    }
}

/// Aggregate over instance records. [`CorpusSummary::merge`] is
/// associative and commutative, so per-shard summaries can be combined in
/// any order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusSummary {
    pub instances: usize,
    pub traces_checked: usize,
    /// Number of findings per kind.
    pub violations: BTreeMap<String, usize>,
    /// Smallest `γ(G□H) / (γ(G)γ(H))`.
    pub min_ratio: Option<Extremal>,
    /// Largest `Σ|D_i| / |D|`.
    pub max_overcount: Option<Extremal>,
    pub total_elapsed_us: u64,
    pub max_elapsed_us: u64,
}

impl CorpusSummary {
    pub fn of(record: &InstanceRecord) -> Self {
        let mut violations = BTreeMap::new();
        for f in &record.violations {
            *violations.entry(f.kind.name().to_string()).or_insert(0) += 1;
        }
        let at = |value| Extremal {
            value,
            g6_g: record.report.g6_g.clone(),
            g6_h: record.report.g6_h.clone(),
        };
        CorpusSummary {
            instances: 1,
            traces_checked: record.traces_checked,
            violations,
            min_ratio: Some(at(record.report.ratio)),
            max_overcount: Some(at(record.max_overcount)),
            total_elapsed_us: record.elapsed_us,
            max_elapsed_us: record.elapsed_us,
        }
    }

    pub fn merge(mut self, other: CorpusSummary) -> Self {
        self.instances += other.instances;
        self.traces_checked += other.traces_checked;
        for (k, v) in other.violations {
            *self.violations.entry(k).or_insert(0) += v;
        }
        self.min_ratio = pick(self.min_ratio, other.min_ratio, |a, b| {
            a.value.cmp(&b.value).then_with(|| a.key().cmp(&b.key()))
        });
        self.max_overcount = pick(self.max_overcount, other.max_overcount, |a, b| {
            Reverse(a.value)
                .cmp(&Reverse(b.value))
                .then_with(|| a.key().cmp(&b.key()))
        });
        self.total_elapsed_us += other.total_elapsed_us;
        self.max_elapsed_us = self.max_elapsed_us.max(other.max_elapsed_us);
        self
    }

    pub fn critical_count(&self) -> usize {
        self.violations.values().sum()
    }

    pub fn mean_elapsed_us(&self) -> u64 {
        self.total_elapsed_us.checked_div(self.instances as u64).unwrap_or(0)
    }
}

#[derive(Clone, Debug)]
pub struct CorpusRun {
    pub summary: CorpusSummary,
    pub records: Vec<InstanceRecord>,
    /// Candidate factors dropped because they contain a claw (G side) or
    /// are disconnected.
    pub skipped_claw: usize,
    pub skipped_disconnected: usize,
}

/// Factor lists for a run: `(G candidates, H candidates, skipped claw,
/// skipped disconnected)`.
pub fn load_corpus(cfg: &RunConfig) -> Result<(Vec<Graph>, Vec<Graph>, usize, usize)> {
    cfg.validate()?;
    let cap = if cfg.unsafe_caps {
        HARD_ENUMERATION_LIMIT
    } else {
        DEFAULT_ENUMERATION_CAP
    };
    let (raw_g, raw_h) = match &cfg.corpus_source {
        CorpusSource::BuiltIn => (
            enumerate_connected_up_to(cfg.max_ng, cap)?,
            enumerate_connected_up_to(cfg.max_nh, cap)?,
        ),
        CorpusSource::Graph6File(path) => {
            let text = fs::read_to_string(path)?;
            let all = parse_graph6_lines(&text)?;
            let gs = all
                .iter()
                .filter(|g| (1..=cfg.max_ng).contains(&g.n()))
                .cloned()
                .collect();
            let hs = all.into_iter().filter(|g| (1..=cfg.max_nh).contains(&g.n())).collect();
            (gs, hs)
        }
    };
    let mut skipped_claw = 0;
    let mut skipped_disconnected = 0;
    let mut gs = Vec::new();
    for g in raw_g {
        let g6 = emit_graph6(&g)?;
        if !g.is_connected()? {
            warn!("skipping G = {g6}: disconnected");
            skipped_disconnected += 1;
        } else if let Some(w) = find_claw(&g) {
            debug!(
                "skipping G = {g6}: claw centred at {} with leaves {:?}",
                w.center, w.leaves
            );
            if matches!(cfg.corpus_source, CorpusSource::Graph6File(_)) {
                warn!(
                    "skipping G = {g6}: claw centred at {} with leaves {:?}",
                    w.center, w.leaves
                );
            }
            skipped_claw += 1;
        } else {
            gs.push(g);
        }
    }
    let mut hs = Vec::new();
    for h in raw_h {
        if h.is_connected()? {
            hs.push(h);
        } else {
            warn!("skipping H = {}: disconnected", emit_graph6(&h)?);
            skipped_disconnected += 1;
        }
    }
    Ok((gs, hs, skipped_claw, skipped_disconnected))
}

fn run_instance(g: &Graph, h: &Graph, cfg: &RunConfig) -> Result<InstanceRecord> {
    let start = Instant::now();
    let v = verify_pair(g, h, cfg)?;
    let elapsed_us = start.elapsed().as_micros() as u64;
    for f in &v.findings {
        warn!("critical finding on G = {}, H = {}: {f}", v.report.g6_g, v.report.g6_h);
    }
    Ok(InstanceRecord {
        traces_checked: v.traces.len(),
        max_overcount: v.max_overcount,
        product_search_nodes: v.product_search_nodes,
        violations: v.findings,
        elapsed_us,
        traces: cfg.embed_traces.then_some(v.traces),
        report: v.report,
    })
}

/// Runs [`verify_pair`] on every `(G, H)` of the corpus and aggregates.
///
/// Records come back in corpus order (G-major) whatever the worker count.
/// When `cfg.out_dir` is set, `report.csv`, `report.json` and
/// `summary.json` are written there.
pub fn run_corpus(cfg: &RunConfig) -> Result<CorpusRun> {
    let (gs, hs, skipped_claw, skipped_disconnected) = load_corpus(cfg)?;
    let pairs: Vec<(&Graph, &Graph)> = gs.iter().flat_map(|g| hs.iter().map(move |h| (g, h))).collect();
    info!(
        "corpus: {} claw-free G × {} H = {} instances",
        gs.len(),
        hs.len(),
        pairs.len()
    );

    let work = || {
        pairs
            .par_iter()
            .map(|(g, h)| run_instance(g, h, cfg))
            .collect::<Result<Vec<_>>>()
    };
    let records = match cfg.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::Config(format!("cannot start {jobs} workers: {e}")))?
            .install(work)?,
        None => work()?,
    };
    let summary = records
        .iter()
        .map(CorpusSummary::of)
        .fold(CorpusSummary::default(), CorpusSummary::merge);

    if let Some(dir) = &cfg.out_dir {
        fs::create_dir_all(dir)?;
        if !records.is_empty() {
            emit_report(&records, ReportFormat::Csv, &dir.join("report.csv"))?;
            emit_report(&records, ReportFormat::Json, &dir.join("report.json"))?;
        }
        fs::write(dir.join("summary.json"), serde_json::to_string_pretty(&summary)? + "\n")?;
    }
    Ok(CorpusRun {
        summary,
        records,
        skipped_claw,
        skipped_disconnected,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankedInstance {
    pub rank: usize,
    pub g6_g: String,
    pub g6_h: String,
    pub gamma_g: usize,
    pub gamma_h: usize,
    pub gamma_product: usize,
    pub ratio: Ratio,
    /// `ratio < 2/3`: a counterexample to the two-thirds bound.
    pub below_two_thirds: bool,
}

/// Ranks records by ascending `γ(G□H) / (γ(G)γ(H))`, ties by graph6
/// strings.
pub fn rank_records(records: &[InstanceRecord]) -> Vec<RankedInstance> {
    let mut rows: Vec<&BoundReport> = records.iter().map(|r| &r.report).collect();
    rows.sort_by(|a, b| {
        a.ratio
            .cmp(&b.ratio)
            .then_with(|| (&a.g6_g, &a.g6_h).cmp(&(&b.g6_g, &b.g6_h)))
    });
    rows.into_iter()
        .enumerate()
        .map(|(i, b)| RankedInstance {
            rank: i + 1,
            g6_g: b.g6_g.clone(),
            g6_h: b.g6_h.clone(),
            gamma_g: b.gamma_g,
            gamma_h: b.gamma_h,
            gamma_product: b.gamma_product,
            ratio: b.ratio,
            below_two_thirds: b.ratio < Ratio::new(2, 3),
        })
        .collect()
}

/// Runs the corpus and returns it ranked by ratio.
pub fn search_extremal(cfg: &RunConfig) -> Result<(Vec<RankedInstance>, CorpusRun)> {
    let run = run_corpus(cfg)?;
    Ok((rank_records(&run.records), run))
}
