//! Exhaustive enumeration of connected graphs up to isomorphism.
//!
//! The canonical form of a graph is the relabelling whose graph6 bit string
//! (upper triangle, column by column) is lexicographically smallest over all
//! vertex permutations. It is found by a branch and bound over partial
//! permutations: at each position only vertices with the smallest column
//! against the already placed vertices can start a minimal code, so only
//! ties branch.

use std::collections::BTreeMap;

use crate::bitset::{Vertex, VertexSet};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_ENUMERATION_CAP: usize = 7;

/// Codes are packed into a `u64`, which bounds `n(n-1)/2 <= 64`.
pub const HARD_ENUMERATION_LIMIT: usize = 9;

/// A graph in canonical labelling together with its packed code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    pub code: u64,
    pub graph: Graph,
}

struct Search<'a> {
    g: &'a Graph,
    nbits: u32,
    placed: Vec<Vertex>,
    best: Option<(u64, Vec<Vertex>)>,
}

impl Search<'_> {
    /// Bit position (from the most significant end of the code) where
    /// column `j` begins.
    fn column_offset(j: usize) -> u32 {
        (j * j.saturating_sub(1) / 2) as u32
    }

    fn column_of(&self, v: Vertex) -> u64 {
        self.placed
            .iter()
            .fold(0u64, |acc, &u| acc << 1 | self.g.has_edge(u, v) as u64)
    }

    fn run(&mut self, remaining: VertexSet, prefix: u64) {
        let j = self.placed.len();
        if remaining.is_empty() {
            if self.best.as_ref().is_none_or(|(b, _)| prefix < *b) {
                self.best = Some((prefix, self.placed.clone()));
            }
            return;
        }
        let cols: Vec<(Vertex, u64)> = remaining.iter().map(|v| (v, self.column_of(v))).collect();
        let min = cols.iter().map(|&(_, c)| c).min().unwrap();
        // bits of column j occupy positions [offset(j), offset(j+1))
        let shift = self.nbits - Self::column_offset(j + 1);
        let next_prefix = prefix | (min << shift);
        if let Some((best, _)) = &self.best {
            let mask = if shift >= 64 { 0 } else { !0u64 << shift };
            if next_prefix & mask > best & mask {
                return;
            }
        }
        for (v, c) in cols {
            if c != min {
                continue;
            }
            self.placed.push(v);
            let mut rest = remaining;
            rest.remove(v);
            self.run(rest, next_prefix);
            self.placed.pop();
        }
    }
}

/// Computes the canonical form of `g`. Graphs up to 11 vertices are
/// supported (the packed code must fit 64 bits).
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let n = g.n();
    let nbits = n * n.saturating_sub(1) / 2;
    if nbits > 64 {
        return Err(Error::Config(format!(
            "canonical form supports at most 11 vertices, graph has {n}"
        )));
    }
    let mut s = Search {
        g,
        nbits: nbits as u32,
        placed: Vec::with_capacity(n),
        best: None,
    };
    s.run(g.vertices(), 0);
    let (code, order) = s.best.expect("search always reaches a leaf");
    // order[pos] = original vertex; relabel original -> position
    let mut perm = vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    Ok(CanonicalForm {
        code,
        graph: g.permuted(&perm),
    })
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    Ok(a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_form(a)?.code == canonical_form(b)?.code)
}

/// All connected graphs on `n` vertices, one canonical representative per
/// isomorphism class, ordered by canonical code.
///
/// Every connected graph has a non-cut vertex, so each class on `n`
/// vertices arises by attaching a new vertex to a connected graph on `n-1`.
pub fn enumerate_connected_graphs(n: usize, cap: usize) -> Result<Vec<Graph>> {
    if cap > HARD_ENUMERATION_LIMIT {
        return Err(Error::Config(format!(
            "enumeration cap {cap} exceeds the hard limit {HARD_ENUMERATION_LIMIT}"
        )));
    }
    if n == 0 || n > cap {
        return Err(Error::Config(format!(
            "vertex count {n} outside the enumeration range 1..={cap}"
        )));
    }
    let mut level = vec![Graph::empty(1)?];
    for m in 2..=n {
        let mut next: BTreeMap<u64, Graph> = BTreeMap::new();
        for base in &level {
            let old = m - 1;
            for mask in 1u64..(1 << old) {
                let mut adj: Vec<VertexSet> = (0..old).map(|v| base.neighbors(v)).collect();
                let nb = VertexSet::from_bits(mask as u128);
                for u in nb {
                    adj[u].insert(old);
                }
                adj.push(nb);
                let cf = canonical_form(&Graph::from_adjacency(adj)?)?;
                next.entry(cf.code).or_insert(cf.graph);
            }
        }
        level = next.into_values().collect();
    }
    Ok(level)
}

/// Connected graphs on `1..=max_n` vertices, smallest first.
pub fn enumerate_connected_up_to(max_n: usize, cap: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(enumerate_connected_graphs(n, cap)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for i in 0..=p.len() {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }

    /// Oracle: every labelled graph on n vertices, deduplicated by the
    /// minimum edge-bit string over all n! relabellings.
    fn brute_force_connected_count(n: usize) -> usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        let perms = permutations(n);
        let mut classes = HashSet::new();
        for mask in 0u64..(1 << pairs.len()) {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::from_edge_list(n, &edges).unwrap();
            if !g.is_connected().unwrap() {
                continue;
            }
            let key = perms
                .iter()
                .map(|p| {
                    pairs
                        .iter()
                        .map(|&(i, j)| g.has_edge(p[i], p[j]))
                        .collect::<Vec<bool>>()
                })
                .min()
                .unwrap();
            classes.insert(key);
        }
        classes.len()
    }

    #[test]
    fn counts_match_brute_force_oracle() {
        let oracle: Vec<usize> = (1..=5).map(brute_force_connected_count).collect();
        assert_eq!(oracle, vec![1, 1, 2, 6, 21]);
        for (i, &expected) in oracle.iter().enumerate() {
            assert_eq!(
                enumerate_connected_graphs(i + 1, DEFAULT_ENUMERATION_CAP)
                    .unwrap()
                    .len(),
                expected
            );
        }
    }

    #[test]
    fn n3_is_path_and_triangle() {
        let gs = enumerate_connected_graphs(3, DEFAULT_ENUMERATION_CAP).unwrap();
        let mut edges: Vec<usize> = gs.iter().map(|g| g.edge_count()).collect();
        edges.sort();
        assert_eq!(edges, vec![2, 3]);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(enumerate_connected_graphs(8, 7), Err(Error::Config(_))));
        assert!(matches!(enumerate_connected_graphs(0, 7), Err(Error::Config(_))));
        assert!(matches!(enumerate_connected_graphs(3, 12), Err(Error::Config(_))));
    }

    #[test]
    fn canonical_form_is_label_invariant() {
        let g = Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5)]).unwrap();
        let base = canonical_form(&g).unwrap();
        for p in permutations(6).iter().step_by(37) {
            let cf = canonical_form(&g.permuted(p)).unwrap();
            assert_eq!(cf, base);
        }
    }

    #[test]
    fn canonical_code_is_global_minimum() {
        // compare against the exhaustive minimum over all relabellings
        let g = Graph::from_edge_list(5, &[(0, 1), (0, 2), (0, 3), (3, 4)]).unwrap();
        let min = permutations(5)
            .iter()
            .map(|p| canonical_form_code_of(&g.permuted(p)))
            .min()
            .unwrap();
        assert_eq!(canonical_form(&g).unwrap().code, min);
    }

    fn canonical_form_code_of(g: &Graph) -> u64 {
        let n = g.n();
        let nbits = n * (n - 1) / 2;
        let mut code = 0u64;
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if g.has_edge(i, j) {
                    code |= 1 << (nbits - 1 - k);
                }
                k += 1;
            }
        }
        code
    }
}
