//! Global checks on the final labeling and the assembled proof trace.

use serde::{Deserialize, Serialize};

use crate::bitset::{Vertex, VertexSet};
use crate::check::{CheckRecord, Finding, FindingKind};
use crate::decomposition::DecompositionDump;
use crate::domination::dominates;

use super::{FiberTrace, Label, LabelState, ProductInstance};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelEntry {
    pub vertex: Vertex,
    pub g: Vertex,
    pub h: Vertex,
    pub label: Label,
}

/// Everything a pipeline run established about one `(G, Γ, H, D)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProofTrace {
    pub decomposition: DecompositionDump,
    pub d: VertexSet,
    pub gamma_g: usize,
    pub gamma_h: usize,
    /// Final labels.
    pub labels: Vec<LabelEntry>,
    /// Number of paired labels after each stage.
    pub pair_counts: Vec<usize>,
    pub fibers: Vec<FiberTrace>,
    /// `D_i`: vertices of `D` whose label contains `i`.
    pub label_classes: Vec<VertexSet>,
    pub projections_dominate: Vec<bool>,
    /// `Σ_i |D_i|`.
    pub label_class_total: usize,
    /// `Σ_h |S1_h|`.
    pub pair_total: usize,
    pub checks: Vec<CheckRecord>,
}

impl ProofTrace {
    pub fn d_size(&self) -> usize {
        self.d.len()
    }

    pub fn findings(&self) -> impl Iterator<Item = &Finding> {
        self.checks.iter().flat_map(|c| c.findings.iter())
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.check == name)
    }
}

/// Checks the per-fiber completion bound, projection domination of every
/// label class, the counting identity and the final inequality chain
/// `γ(G)γ(H) <= Σ|D_i|` and `2Σ|D_i| <= 3|D|`. `γ(G)` is taken to be the
/// number of cells.
pub fn verify_claims(
    inst: &ProductInstance,
    fibers: Vec<FiberTrace>,
    state: &LabelState,
    gamma_h: usize,
) -> ProofTrace {
    let k = inst.dec.k();
    let map = &inst.map;
    let mut checks = Vec::new();

    let mut too_small = Vec::new();
    for f in &fibers {
        if let Some(e) = f.completion {
            if e.len() < f.pair_vertices.len() {
                too_small.push(Finding::new(
                    FindingKind::CompletionTooSmall,
                    format!(
                        "fiber {}: |E| = {} < |S1| = {} (E = {:?}, S1 = {:?})",
                        f.h,
                        e.len(),
                        f.pair_vertices.len(),
                        e.iter().map(|x| map.unflat(x)).collect::<Vec<_>>(),
                        f.pair_vertices.iter().map(|x| map.unflat(x)).collect::<Vec<_>>()
                    ),
                ));
            }
        }
    }
    checks.push(CheckRecord::from_findings("completion_bound", too_small));

    let mut label_classes = vec![VertexSet::EMPTY; k];
    for (&x, &label) in &state.labels {
        for i in label.indices() {
            label_classes[i].insert(x);
        }
    }
    let mut not_dominating = Vec::new();
    let projections_dominate: Vec<bool> = label_classes
        .iter()
        .enumerate()
        .map(|(i, &di)| {
            let proj = map.project_h(di);
            let ok = dominates(&inst.h, proj);
            if !ok {
                not_dominating.push(Finding::new(
                    FindingKind::ProjectionNotDominating,
                    format!(
                        "label class {i} projects to {:?}, leaving H-vertices {:?} undominated",
                        proj.to_vec(),
                        (inst.h.vertices() - inst.h.closed_of_set(proj)).to_vec()
                    ),
                ));
            }
            ok
        })
        .collect();
    checks.push(CheckRecord::from_findings("projection_domination", not_dominating));

    let label_class_total: usize = label_classes.iter().map(|s| s.len()).sum();
    let pair_total: usize = fibers.iter().map(|f| f.pair_vertices.len()).sum();
    let d_size = inst.d.len();

    let mut counting = Vec::new();
    if label_class_total != d_size + pair_total {
        counting.push(Finding::new(
            FindingKind::CountingIdentity,
            format!("Σ|D_i| = {label_class_total} but |D| + Σ|S1_h| = {d_size} + {pair_total}"),
        ));
    }
    checks.push(CheckRecord::from_findings("counting_identity", counting));

    let mut lower = Vec::new();
    if label_class_total < k * gamma_h {
        lower.push(Finding::new(
            FindingKind::LowerChain,
            format!("Σ|D_i| = {label_class_total} < γ(G)γ(H) = {k}·{gamma_h}"),
        ));
    }
    checks.push(CheckRecord::from_findings("lower_chain", lower));

    let mut upper = Vec::new();
    if 2 * label_class_total > 3 * d_size {
        upper.push(Finding::new(
            FindingKind::UpperChain,
            format!("2Σ|D_i| = {} > 3|D| = {}", 2 * label_class_total, 3 * d_size),
        ));
    }
    checks.push(CheckRecord::from_findings("upper_chain", upper));

    let labels = state
        .labels
        .iter()
        .map(|(&vertex, &label)| {
            let (g, h) = map.unflat(vertex);
            LabelEntry { vertex, g, h, label }
        })
        .collect();

    ProofTrace {
        decomposition: inst.dec.to_dump(),
        d: inst.d,
        gamma_g: k,
        gamma_h,
        labels,
        pair_counts: Vec::new(),
        fibers,
        label_classes,
        projections_dominate,
        label_class_total,
        pair_total,
        checks,
    }
}
