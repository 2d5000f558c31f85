//! Per-fiber sets after the third labeling, and the minimum completion
//! set `E_h`.

use serde::{Deserialize, Serialize};

use crate::bitset::{for_each_subset_of_size, Vertex, VertexSet};
use crate::check::{Finding, FindingKind};
use crate::decomposition::{CellSet, VertexClass};
use crate::error::{Error, Result};

use super::{Label, LabelState, ProductInstance, Stage, VerticalTable};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberTrace {
    pub h: Vertex,
    /// `I_h`, vertically undominated cells.
    pub undominated_cells: CellSet,
    /// `I1_h = [k] - I_h`.
    pub dominated_cells: CellSet,
    /// `S1_h`, vertices of `D^h` still carrying a pair.
    pub pair_vertices: VertexSet,
    /// `J1_h`, union of the surviving pairs.
    pub pair_indices: CellSet,
    /// `E_h`, or `None` when no completion exists.
    pub completion: Option<VertexSet>,
    /// Whether `D` has no vertex above or below the chamber of `J1_h` in a
    /// fiber adjacent to `h`.
    pub vertical_neighbors_empty: bool,
    /// Whether every member of `E_h` is a private neighbour of a
    /// vertically dominated cell carrying a singleton label.
    pub completion_private: bool,
}

impl FiberTrace {
    /// `|E_h| >= |S1_h|`; false when `E_h` does not exist.
    pub fn completion_covers_pairs(&self) -> bool {
        self.completion.is_some_and(|e| e.len() >= self.pair_vertices.len())
    }
}

/// Computes `I_h`, `S1_h`, `J1_h` and `I1_h` for every fiber and checks
/// that `S1_h` lies in the chamber of `I_h`, `|J1_h| = 2|S1_h|` and
/// `J1_h ⊆ I_h`.
pub fn fiber_sets(
    inst: &ProductInstance,
    table: &VerticalTable,
    state: &LabelState,
) -> Result<(Vec<FiberTrace>, Vec<Finding>)> {
    if state.stage != Stage::L3 {
        return Err(Error::Precondition(format!(
            "fiber sets need stage L3, got {:?}",
            state.stage
        )));
    }
    let mut traces = Vec::with_capacity(inst.map.n_h);
    let mut findings = Vec::new();
    for h in 0..inst.map.n_h {
        let open = table.undominated_cells[h];
        let mut pair_vertices = VertexSet::EMPTY;
        let mut pair_indices = CellSet::EMPTY;
        for x in inst.d_in_fiber(h) {
            if let Some(l @ Label::Pair(..)) = state.get(x) {
                pair_vertices.insert(x);
                pair_indices |= l.indices();
            }
        }
        let chamber = inst.map.lift(inst.dec.chamber_of(open), VertexSet::singleton(h));
        if !pair_vertices.is_subset(chamber) {
            findings.push(Finding::new(
                FindingKind::FiberSetInvariant,
                format!(
                    "fiber {h}: S1 {:?} leaves the chamber of I_h {:?}",
                    pair_vertices,
                    open.to_vec()
                ),
            ));
        }
        if pair_indices.len() != 2 * pair_vertices.len() {
            findings.push(Finding::new(
                FindingKind::FiberSetInvariant,
                format!(
                    "fiber {h}: |J1| = {} but |S1| = {}",
                    pair_indices.len(),
                    pair_vertices.len()
                ),
            ));
        }
        if !pair_indices.is_subset(open) {
            findings.push(Finding::new(
                FindingKind::FiberSetInvariant,
                format!(
                    "fiber {h}: J1 {:?} is not inside I_h {:?}",
                    pair_indices.to_vec(),
                    open.to_vec()
                ),
            ));
        }
        traces.push(FiberTrace {
            h,
            undominated_cells: open,
            dominated_cells: inst.dec.all_cells() - open,
            pair_vertices,
            pair_indices,
            completion: None,
            vertical_neighbors_empty: true,
            completion_private: true,
        });
    }
    Ok((traces, findings))
}

/// Finds a minimum `E ⊆ D^h ∩ C(I1_h)` such that
/// `(D ∩ C(J1_h)) ∪ (D ∩ N_H(C(J1_h))) ∪ E` dominates `C(J1_h)` in fiber
/// `h`. Among minimum sets the lexicographically least is taken.
pub fn compute_completion_set(inst: &ProductInstance, trace: &mut FiberTrace, state: &LabelState) -> Vec<Finding> {
    let h = trace.h;
    let map = &inst.map;
    let here = VertexSet::singleton(h);
    let target = map.lift(inst.dec.chamber_of(trace.pair_indices), here);
    let above_below = map.lift(inst.dec.chamber_of(trace.pair_indices), inst.h.neighbors(h)) & inst.d;
    trace.vertical_neighbors_empty = above_below.is_empty();

    let base = (target & inst.d) | above_below;
    let residual = target - inst.product.closed_of_set(base);
    let candidates = map.lift(inst.dec.chamber_of(trace.dominated_cells), here) & inst.d;

    let mut found = None;
    for size in 0..=candidates.len() {
        for_each_subset_of_size(candidates, size, |e| {
            if residual.is_subset(inst.product.closed_of_set(e)) {
                found = Some(e);
                return false;
            }
            true
        });
        if found.is_some() {
            break;
        }
    }

    let mut findings = Vec::new();
    match found {
        None => {
            trace.completion = None;
            trace.completion_private = false;
            findings.push(Finding::new(
                FindingKind::CompletionInfeasible,
                format!(
                    "fiber {h}: residual {:?} of the chamber of J1 {:?} cannot be dominated from D^h ∩ C(I1) = {:?}",
                    residual.iter().map(|x| map.unflat(x)).collect::<Vec<_>>(),
                    trace.pair_indices.to_vec(),
                    candidates.iter().map(|x| map.unflat(x)).collect::<Vec<_>>()
                ),
            ));
        }
        Some(e) => {
            trace.completion = Some(e);
            let bad: Vec<(Vertex, Vertex)> = e
                .iter()
                .filter(|&x| {
                    let (g, _) = map.unflat(x);
                    let private_dominated =
                        matches!(inst.dec.class_of(g), VertexClass::Private(i) if trace.dominated_cells.contains(i));
                    !(private_dominated && matches!(state.get(x), Some(Label::One(_))))
                })
                .map(|x| map.unflat(x))
                .collect();
            trace.completion_private = bad.is_empty();
            if !bad.is_empty() {
                findings.push(Finding::new(
                    FindingKind::CompletionNotPrivate,
                    format!(
                        "fiber {h}: completion members {bad:?} are not singleton-labelled private neighbours of C(I1)"
                    ),
                ));
            }
        }
    }
    findings
}
