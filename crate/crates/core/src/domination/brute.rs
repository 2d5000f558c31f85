//! Exhaustive subset sweeps. These are the reference oracle for the
//! branch and bound solver and the source of "every minimum set"
//! enumerations.

use crate::bitset::{for_each_subset_of_size, VertexSet};
use crate::error::{Error, Result};
use crate::graph::Graph;

use super::{dominates, DominationResult};

pub const BRUTE_FORCE_LIMIT: usize = 16;

/// Largest graph for which [`all_minimum_dominating_sets`] will run.
pub const ALL_MINIMUM_LIMIT: usize = 24;

/// Minimum (independent) dominating set by sweeping subsets in increasing
/// cardinality; the first hit in lexicographic order is returned.
pub fn brute_force_gamma(g: &Graph, independent_only: bool) -> Result<DominationResult> {
    if g.n() > BRUTE_FORCE_LIMIT {
        return Err(Error::Config(format!(
            "brute force is capped at {BRUTE_FORCE_LIMIT} vertices, graph has {}",
            g.n()
        )));
    }
    if g.n() == 0 {
        return Err(Error::Input("domination is undefined for the empty graph".into()));
    }
    let mut tried = 0u64;
    for k in 0..=g.n() {
        let mut hit = None;
        for_each_subset_of_size(g.vertices(), k, |s| {
            tried += 1;
            if dominates(g, s) && (!independent_only || g.is_independent(s)) {
                hit = Some(s);
                return false;
            }
            true
        });
        if let Some(witness) = hit {
            return Ok(DominationResult {
                value: k,
                witness,
                node_count: tried,
            });
        }
    }
    unreachable!("V(G) dominates G and some maximal independent set does too")
}

/// Every dominating set of size `size` (independent ones only, if asked),
/// in lexicographic order.
pub fn all_minimum_dominating_sets(g: &Graph, size: usize, independent_only: bool) -> Result<Vec<VertexSet>> {
    if g.n() > ALL_MINIMUM_LIMIT {
        return Err(Error::Config(format!(
            "enumerating all minimum dominating sets is capped at {ALL_MINIMUM_LIMIT} vertices, graph has {}",
            g.n()
        )));
    }
    let mut out = Vec::new();
    for_each_subset_of_size(g.vertices(), size, |s| {
        if dominates(g, s) && (!independent_only || g.is_independent(s)) {
            out.push(s);
        }
        true
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracle_values() {
        assert_eq!(brute_force_gamma(&Graph::path(4).unwrap(), false).unwrap().value, 2);
        let k1 = brute_force_gamma(&Graph::empty(1).unwrap(), true).unwrap();
        assert_eq!((k1.value, k1.witness.to_vec()), (1, vec![0]));
        assert_eq!(brute_force_gamma(&Graph::cycle(5).unwrap(), true).unwrap().value, 2);
    }

    #[test]
    fn oracle_refuses_large_graphs() {
        let err = brute_force_gamma(&Graph::path(17).unwrap(), false).unwrap_err();
        assert!(err.to_string().contains("16"), "{err}");
    }

    #[test]
    fn all_minimum_sets_of_c4() {
        let sets = all_minimum_dominating_sets(&Graph::cycle(4).unwrap(), 2, false).unwrap();
        // all six pairs of C4 dominate
        assert_eq!(sets.len(), 6);
        let indep = all_minimum_dominating_sets(&Graph::cycle(4).unwrap(), 2, true).unwrap();
        assert_eq!(indep.len(), 2);
    }
}
