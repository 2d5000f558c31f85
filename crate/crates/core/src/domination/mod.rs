//! Exact domination and independent domination numbers.

mod brute;
mod solver;

use serde::{Deserialize, Serialize};

pub use brute::{all_minimum_dominating_sets, brute_force_gamma, ALL_MINIMUM_LIMIT, BRUTE_FORCE_LIMIT};
pub use solver::{domination_number, min_independent_dominating_set};

use crate::bitset::VertexSet;
use crate::check::{CheckRecord, Finding, FindingKind};
use crate::claw::find_claw;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A minimum (independent) dominating set with its size and the number of
/// search nodes spent finding it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominationResult {
    pub value: usize,
    pub witness: VertexSet,
    pub node_count: u64,
}

/// Whether `N[s] = V(G)`.
pub fn is_dominating_set(g: &Graph, s: VertexSet) -> Result<bool> {
    g.check_set(s)?;
    Ok(dominates(g, s))
}

#[inline]
pub(crate) fn dominates(g: &Graph, s: VertexSet) -> bool {
    g.closed_of_set(s) == g.vertices()
}

/// Compares i(G) with γ(G) on a claw-free graph.
pub fn verify_allan_laskar(g: &Graph) -> Result<(CheckRecord, DominationResult, DominationResult)> {
    if let Some(w) = find_claw(g) {
        return Err(Error::NotClawFree {
            center: w.center,
            leaves: w.leaves,
        });
    }
    let gamma = domination_number(g)?;
    let indep = min_independent_dominating_set(g)?;
    let mut findings = Vec::new();
    if gamma.value != indep.value {
        findings.push(Finding::new(
            FindingKind::IndependentDominationGap,
            format!(
                "claw-free graph with γ = {} (witness {:?}) but i = {} (witness {:?})",
                gamma.value, gamma.witness, indep.value, indep.witness
            ),
        ));
    }
    Ok((CheckRecord::from_findings("allan_laskar", findings), gamma, indep))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dominating_set_examples() {
        let p3 = Graph::path(3).unwrap();
        assert!(is_dominating_set(&p3, VertexSet::singleton(1)).unwrap());
        let k1 = Graph::empty(1).unwrap();
        assert!(!is_dominating_set(&k1, VertexSet::EMPTY).unwrap());
        let c4 = Graph::cycle(4).unwrap();
        assert!(!is_dominating_set(&c4, VertexSet::singleton(0)).unwrap());
        assert!(is_dominating_set(&c4, VertexSet::singleton(9)).is_err());
    }

    #[test]
    fn allan_laskar_examples() {
        let (rec, g, i) = verify_allan_laskar(&Graph::cycle(5).unwrap()).unwrap();
        assert!(rec.passed);
        assert_eq!((g.value, i.value), (2, 2));
        let (rec, g, _) = verify_allan_laskar(&Graph::complete(3).unwrap()).unwrap();
        assert!(rec.passed);
        assert_eq!(g.value, 1);
    }

    #[test]
    fn allan_laskar_refuses_claws() {
        match verify_allan_laskar(&Graph::star(3).unwrap()) {
            Err(Error::NotClawFree { center, leaves }) => {
                assert_eq!(center, 0);
                assert_eq!(leaves, [1, 2, 3]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
