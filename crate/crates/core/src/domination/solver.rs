//! Branch and bound for minimum (independent) dominating sets.
//!
//! Branching: pick the undominated vertex with the fewest eligible
//! dominators in its closed neighbourhood and try each of them in
//! ascending order. A candidate that has been tried is excluded from the
//! later sibling branches, since every solution containing it was already
//! covered. Ties always go to the lowest vertex index, so the returned
//! witness is the first minimum set met in this fixed search order.

use crate::bitset::{Vertex, VertexSet};
use crate::error::{Error, Result};
use crate::graph::Graph;

use super::DominationResult;

struct Solver<'a> {
    g: &'a Graph,
    all: VertexSet,
    independent: bool,
    best: Option<VertexSet>,
    best_size: usize,
    nodes: u64,
}

impl Solver<'_> {
    fn new(g: &Graph, independent: bool) -> Solver<'_> {
        Solver {
            g,
            all: g.vertices(),
            independent,
            best: None,
            best_size: usize::MAX,
            nodes: 0,
        }
    }

    /// Size of a set of undominated vertices whose eligible dominator sets
    /// are pairwise disjoint; each needs its own dominator. `None` when
    /// some undominated vertex has no eligible dominator left.
    fn packing_bound(&self, undominated: VertexSet, eligible: VertexSet) -> Option<usize> {
        let mut cands: Vec<(usize, VertexSet)> = Vec::with_capacity(undominated.len());
        for v in undominated {
            let c = self.g.closed(v) & eligible;
            if c.is_empty() {
                return None;
            }
            cands.push((c.len(), c));
        }
        cands.sort_by_key(|&(len, c)| (len, c.bits()));
        let mut used = VertexSet::EMPTY;
        let mut count = 0;
        for (_, c) in cands {
            if !c.intersects(used) {
                used |= c;
                count += 1;
            }
        }
        Some(count)
    }

    fn search(&mut self, chosen: VertexSet, dominated: VertexSet, eligible: VertexSet) {
        self.nodes += 1;
        let undominated = self.all - dominated;
        if undominated.is_empty() {
            if chosen.len() < self.best_size {
                self.best_size = chosen.len();
                self.best = Some(chosen);
            }
            return;
        }
        let Some(lb) = self.packing_bound(undominated, eligible) else {
            return;
        };
        if chosen.len() + lb >= self.best_size {
            return;
        }

        let mut pivot: Option<(usize, Vertex)> = None;
        for v in undominated {
            let c = (self.g.closed(v) & eligible).len();
            if pivot.is_none_or(|(best, _)| c < best) {
                pivot = Some((c, v));
            }
        }
        let (_, v) = pivot.expect("undominated is nonempty");

        let mut eligible = eligible;
        for c in self.g.closed(v) & eligible {
            let closed_c = self.g.closed(c);
            let mut next = eligible;
            next.remove(c);
            if self.independent {
                next = next - closed_c;
            }
            let mut with_c = chosen;
            with_c.insert(c);
            self.search(with_c, dominated | closed_c, next);
            eligible.remove(c);
        }
    }

    /// Greedy max-coverage (maximal independent, in the independent
    /// variant) upper bound.
    fn greedy(&self) -> VertexSet {
        let mut chosen = VertexSet::EMPTY;
        let mut dominated = VertexSet::EMPTY;
        let mut eligible = self.all;
        while dominated != self.all {
            let mut pick: Option<(usize, Vertex)> = None;
            for c in eligible {
                let gain = (self.g.closed(c) - dominated).len();
                if gain > 0 && pick.is_none_or(|(best, _)| gain > best) {
                    pick = Some((gain, c));
                }
            }
            let (_, c) = pick.expect("an undominated vertex is itself eligible or has an eligible neighbour");
            chosen.insert(c);
            dominated |= self.g.closed(c);
            eligible.remove(c);
            if self.independent {
                eligible = eligible - self.g.closed(c);
            }
        }
        chosen
    }

    fn solve(mut self) -> DominationResult {
        let seed = self.greedy();
        // allow equal-size solutions so the witness comes from the search order
        self.best_size = seed.len() + 1;
        self.search(VertexSet::EMPTY, VertexSet::EMPTY, self.all);
        let witness = self.best.unwrap_or(seed);
        DominationResult {
            value: witness.len(),
            witness,
            node_count: self.nodes,
        }
    }
}

fn solve(g: &Graph, independent: bool) -> Result<DominationResult> {
    if g.n() == 0 {
        return Err(Error::Input("domination is undefined for the empty graph".into()));
    }
    Ok(Solver::new(g, independent).solve())
}

/// γ(G) with a minimum dominating set.
pub fn domination_number(g: &Graph) -> Result<DominationResult> {
    solve(g, false)
}

/// i(G) with a minimum independent dominating set.
pub fn min_independent_dominating_set(g: &Graph) -> Result<DominationResult> {
    solve(g, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domination::{brute_force_gamma, dominates};
    use crate::product::cartesian_product;

    #[test]
    fn complete_graphs_have_gamma_one() {
        for n in 1..=8 {
            let r = domination_number(&Graph::complete(n).unwrap()).unwrap();
            assert_eq!(r.value, 1);
            assert_eq!(r.witness.to_vec(), vec![0]);
        }
    }

    #[test]
    fn small_values() {
        assert_eq!(domination_number(&Graph::path(4).unwrap()).unwrap().value, 2);
        let star = Graph::star(3).unwrap();
        let r = min_independent_dominating_set(&star).unwrap();
        assert_eq!((r.value, r.witness.to_vec()), (1, vec![0]));
        assert_eq!(
            min_independent_dominating_set(&Graph::cycle(4).unwrap()).unwrap().value,
            2
        );
        assert_eq!(
            min_independent_dominating_set(&Graph::cycle(5).unwrap()).unwrap().value,
            2
        );
    }

    #[test]
    fn torus_matches_oracle() {
        let c4 = Graph::cycle(4).unwrap();
        let (t, _) = cartesian_product(&c4, &c4).unwrap();
        let r = domination_number(&t).unwrap();
        assert_eq!(r.value, brute_force_gamma(&t, false).unwrap().value);
        assert_eq!(r.value, 4);
        assert!(dominates(&t, r.witness));
    }

    #[test]
    fn independent_witness_is_independent() {
        // double star: i > γ
        let g = Graph::from_edge_list(8, &[(0, 1), (0, 2), (0, 3), (0, 4), (4, 5), (5, 6), (5, 7)]).unwrap();
        let gamma = domination_number(&g).unwrap();
        let i = min_independent_dominating_set(&g).unwrap();
        assert!(g.is_independent(i.witness));
        assert!(dominates(&g, i.witness));
        assert!(i.value >= gamma.value);
        assert_eq!(i.value, brute_force_gamma(&g, true).unwrap().value);
    }

    #[test]
    fn witness_is_deterministic() {
        let g = Graph::cycle(7).unwrap();
        let a = domination_number(&g).unwrap();
        let b = domination_number(&g).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn empty_graph_rejected() {
        assert!(domination_number(&Graph::empty(0).unwrap()).is_err());
    }
}
