//! Cells and chambers of a graph relative to an independent dominating set.
//!
//! Given `Γ = (v_0, .., v_{k-1})`, every vertex outside Γ falls into exactly
//! one class according to `N(v) ∩ Γ`: the private class `P_i` when that
//! intersection is `{v_i}`, or the shared class `P_S` when it is
//! `{v_i : i ∈ S}` with `|S| >= 2`. Cell indices are positions in Γ.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::bitset::{Vertex, VertexSet};
use crate::check::{CheckRecord, Finding, FindingKind};
use crate::claw::find_claw;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A set of cell indices. Uses the vertex bitset representation.
pub type CellSet = VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "class", content = "cells")]
pub enum VertexClass {
    Dominator(usize),
    Private(usize),
    Shared(CellSet),
}

impl VertexClass {
    /// Cell indices a label on this vertex may use.
    pub fn indices(self) -> CellSet {
        match self {
            VertexClass::Dominator(i) | VertexClass::Private(i) => CellSet::singleton(i),
            VertexClass::Shared(s) => s,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellDecomposition {
    gamma: Vec<Vertex>,
    private: Vec<VertexSet>,
    shared: BTreeMap<CellSet, VertexSet>,
    class_of: Vec<VertexClass>,
}

impl CellDecomposition {
    pub fn k(&self) -> usize {
        self.gamma.len()
    }

    pub fn gamma(&self) -> &[Vertex] {
        &self.gamma
    }

    pub fn gamma_set(&self) -> VertexSet {
        self.gamma.iter().collect()
    }

    pub fn all_cells(&self) -> CellSet {
        CellSet::full(self.k())
    }

    pub fn private(&self, i: usize) -> VertexSet {
        self.private[i]
    }

    /// `Q_i = {v_i} ∪ P_i`.
    pub fn cell(&self, i: usize) -> VertexSet {
        let mut q = self.private[i];
        q.insert(self.gamma[i]);
        q
    }

    /// Nonempty shared classes keyed by their index sets.
    pub fn shared(&self) -> impl Iterator<Item = (CellSet, VertexSet)> + '_ {
        self.shared.iter().map(|(&s, &v)| (s, v))
    }

    pub fn shared_class(&self, s: CellSet) -> VertexSet {
        self.shared.get(&s).copied().unwrap_or_default()
    }

    pub fn class_of(&self, v: Vertex) -> VertexClass {
        self.class_of[v]
    }

    /// `C(Q_I)`: the cells indexed by `I` plus every shared class `P_S`
    /// with `S ⊆ I`.
    pub fn chamber(&self, cells: CellSet) -> Result<VertexSet> {
        if let Some(i) = (cells - self.all_cells()).first() {
            return Err(Error::Input(format!("cell index {i} outside 0..{}", self.k())));
        }
        Ok(self.chamber_of(cells))
    }

    pub(crate) fn chamber_of(&self, cells: CellSet) -> VertexSet {
        let mut out = cells.iter().fold(VertexSet::EMPTY, |acc, i| acc | self.cell(i));
        for (&s, &p) in &self.shared {
            if s.is_subset(cells) {
                out |= p;
            }
        }
        out
    }

    pub fn to_dump(&self) -> DecompositionDump {
        DecompositionDump {
            gamma: self.gamma.clone(),
            private: self.private.iter().map(|p| p.to_vec()).collect(),
            shared: self
                .shared
                .iter()
                .map(|(s, p)| SharedClassDump {
                    indices: s.to_vec(),
                    vertices: p.to_vec(),
                })
                .collect(),
        }
    }
}

/// JSON form of a decomposition; shared classes are listed by sorted index
/// lists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionDump {
    pub gamma: Vec<Vertex>,
    pub private: Vec<Vec<Vertex>>,
    pub shared: Vec<SharedClassDump>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SharedClassDump {
    pub indices: Vec<usize>,
    pub vertices: Vec<Vertex>,
}

/// Classifies every vertex of `g` against the independent dominating set
/// `gamma` (in the given order).
pub fn decompose(g: &Graph, gamma: &[Vertex]) -> Result<CellDecomposition> {
    let mut gset = VertexSet::EMPTY;
    for &v in gamma {
        g.check_vertex(v)?;
        if gset.contains(v) {
            return Err(Error::Input(format!("vertex {v} repeated in Γ")));
        }
        gset.insert(v);
    }
    if let Some((u, v)) = gamma
        .iter()
        .find_map(|&u| (g.neighbors(u) & gset).first().map(|v| (u, v)))
    {
        return Err(Error::Input(format!("Γ is not independent: {u} and {v} are adjacent")));
    }
    if let Some(v) = (g.vertices() - g.closed_of_set(gset)).first() {
        return Err(Error::Input(format!("Γ does not dominate vertex {v}")));
    }

    let position: BTreeMap<Vertex, usize> = gamma.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut private = vec![VertexSet::EMPTY; gamma.len()];
    let mut shared: BTreeMap<CellSet, VertexSet> = BTreeMap::new();
    let mut class_of = Vec::with_capacity(g.n());
    for v in 0..g.n() {
        let class = if let Some(&i) = position.get(&v) {
            VertexClass::Dominator(i)
        } else {
            let idx: CellSet = (g.neighbors(v) & gset).iter().map(|u| position[&u]).collect();
            if idx.len() == 1 {
                let i = idx.first().unwrap();
                private[i].insert(v);
                VertexClass::Private(i)
            } else {
                shared.entry(idx).or_default().insert(v);
                VertexClass::Shared(idx)
            }
        };
        class_of.push(class);
    }
    Ok(CellDecomposition {
        gamma: gamma.to_vec(),
        private,
        shared,
        class_of,
    })
}

/// Checks the structural facts a claw-free graph must satisfy: no shared
/// class has three or more indices, no edge joins shared classes with
/// disjoint index pairs, and no edge joins `P_a` to `P_{b,c}` with
/// `a ∉ {b,c}`.
///
/// Graphs containing a claw are refused with the claw as witness.
pub fn verify_structural_observations(g: &Graph, dec: &CellDecomposition) -> Result<CheckRecord> {
    if let Some(w) = find_claw(g) {
        return Err(Error::NotClawFree {
            center: w.center,
            leaves: w.leaves,
        });
    }
    let mut findings = Vec::new();
    for (s, p) in dec.shared() {
        if s.len() >= 3 {
            findings.push(Finding::new(
                FindingKind::SharedClassTooLarge,
                format!("P_{:?} = {:?} is nonempty", s.to_vec(), p.to_vec()),
            ));
        }
    }
    for (x, y) in g.edges() {
        let (cx, cy) = (dec.class_of(x), dec.class_of(y));
        match (cx, cy) {
            (VertexClass::Shared(s), VertexClass::Shared(t)) if s.len() == 2 && t.len() == 2 => {
                if !s.intersects(t) {
                    findings.push(Finding::new(
                        FindingKind::DisjointSharedEdge,
                        format!("edge {x}-{y} joins P_{:?} and P_{:?}", s.to_vec(), t.to_vec()),
                    ));
                }
            }
            (VertexClass::Private(a), VertexClass::Shared(t)) | (VertexClass::Shared(t), VertexClass::Private(a))
                if t.len() == 2 && !t.contains(a) =>
            {
                findings.push(Finding::new(
                    FindingKind::PrivateSharedEdge,
                    format!("edge {x}-{y} joins P_{a} and P_{:?}", t.to_vec()),
                ));
            }
            _ => {}
        }
    }
    Ok(CheckRecord::from_findings("structural_observations", findings))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().collect()
    }

    // path a-b-c-d as 0-1-2-3
    #[test]
    fn path_example() {
        let g = Graph::path(4).unwrap();
        let dec = decompose(&g, &[0, 2]).unwrap();
        assert_eq!(dec.private(0), VertexSet::EMPTY);
        assert_eq!(dec.private(1), set(&[3]));
        assert_eq!(dec.shared_class(set(&[0, 1])), set(&[1]));
        assert_eq!(dec.chamber(set(&[0, 1])).unwrap(), g.vertices());
        assert_eq!(dec.chamber(set(&[1])).unwrap(), set(&[2, 3]));
    }

    #[test]
    fn cycle_example() {
        let g = Graph::cycle(4).unwrap();
        let dec = decompose(&g, &[0, 2]).unwrap();
        assert_eq!(dec.shared_class(set(&[0, 1])), set(&[1, 3]));
        assert!(dec.private(0).is_empty() && dec.private(1).is_empty());
        assert_eq!(dec.chamber(VertexSet::EMPTY).unwrap(), VertexSet::EMPTY);
        assert!(verify_structural_observations(&g, &dec).unwrap().passed);
    }

    #[test]
    fn triangle_single_cell() {
        let g = Graph::complete(3).unwrap();
        let dec = decompose(&g, &[0]).unwrap();
        assert_eq!(dec.private(0), set(&[1, 2]));
        assert_eq!(dec.shared().count(), 0);
        assert_eq!(dec.chamber(set(&[0])).unwrap(), dec.cell(0));
    }

    #[test]
    fn rejects_bad_gamma() {
        let g = Graph::path(4).unwrap();
        let err = decompose(&g, &[0, 1]).unwrap_err().to_string();
        assert!(err.contains("not independent"), "{err}");
        let err = decompose(&g, &[0]).unwrap_err().to_string();
        assert!(err.contains("does not dominate"), "{err}");
        assert!(decompose(&g, &[0, 2]).unwrap().chamber(set(&[5])).is_err());
    }

    #[test]
    fn claw_skips_observation_check() {
        let g = Graph::star(3).unwrap();
        let dec = decompose(&g, &[0]).unwrap();
        assert!(matches!(
            verify_structural_observations(&g, &dec),
            Err(Error::NotClawFree { .. })
        ));
    }

    #[test]
    fn large_shared_class_is_reported_not_fatal() {
        // K_{1,3} with Γ = leaves: the centre is in P_{0,1,2}
        let g = Graph::star(3).unwrap();
        let dec = decompose(&g, &[1, 2, 3]).unwrap();
        assert_eq!(dec.class_of(0), VertexClass::Shared(set(&[0, 1, 2])));
        assert_eq!(dec.class_of(0).indices().len(), 3);
    }

    #[test]
    fn dump_lists_sorted_indices() {
        let dec = decompose(&Graph::path(4).unwrap(), &[0, 2]).unwrap();
        let json = serde_json::to_string(&dec.to_dump()).unwrap();
        assert_eq!(
            json,
            r#"{"gamma":[0,2],"private":[[],[3]],"shared":[{"indices":[0,1],"vertices":[1]}]}"#
        );
    }
}
