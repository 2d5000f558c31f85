//! Cartesian product `G □ H`.

use serde::{Deserialize, Serialize};

use crate::bitset::{Vertex, VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Bijection between pairs `(g, h)` and product vertex indices.
///
/// Vertices of one G-fiber `G^h` occupy the contiguous range
/// `h*n_g .. (h+1)*n_g`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductIndexMap {
    pub n_g: usize,
    pub n_h: usize,
}

impl ProductIndexMap {
    #[inline]
    pub fn flat(&self, g: Vertex, h: Vertex) -> Vertex {
        debug_assert!(g < self.n_g && h < self.n_h);
        h * self.n_g + g
    }

    #[inline]
    pub fn unflat(&self, x: Vertex) -> (Vertex, Vertex) {
        (x % self.n_g, x / self.n_g)
    }

    pub fn len(&self) -> usize {
        self.n_g * self.n_h
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The vertices of fiber `G^h`.
    pub fn fiber(&self, h: Vertex) -> VertexSet {
        VertexSet::from_bits(VertexSet::full(self.n_g).bits() << (h * self.n_g))
    }

    /// `gs × hs` as a set of product vertices.
    pub fn lift(&self, gs: VertexSet, hs: VertexSet) -> VertexSet {
        hs.iter().fold(VertexSet::EMPTY, |acc, h| {
            acc | VertexSet::from_bits(gs.bits() << (h * self.n_g))
        })
    }

    /// The G-coordinates of the members of `s` that lie in fiber `h`.
    pub fn fiber_slice(&self, s: VertexSet, h: Vertex) -> VertexSet {
        VertexSet::from_bits((s & self.fiber(h)).bits() >> (h * self.n_g))
    }

    /// The projection of `s` onto H.
    pub fn project_h(&self, s: VertexSet) -> VertexSet {
        s.iter().map(|x| x / self.n_g).collect()
    }
}

/// Builds `G □ H`: `(g,h) ~ (g',h')` iff exactly one coordinate differs and
/// the differing coordinates are adjacent in their factor.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<(Graph, ProductIndexMap)> {
    if g.n() == 0 || h.n() == 0 {
        return Err(Error::Input("Cartesian product needs two nonempty factors".into()));
    }
    let n = g.n() * h.n();
    if n > MAX_VERTICES {
        return Err(Error::Input(format!(
            "product would have {n} vertices, above the supported maximum of {MAX_VERTICES}"
        )));
    }
    let map = ProductIndexMap { n_g: g.n(), n_h: h.n() };
    let mut edges = Vec::with_capacity(g.n() * h.edge_count() + h.n() * g.edge_count());
    for hv in 0..h.n() {
        for (a, b) in g.edges() {
            edges.push((map.flat(a, hv), map.flat(b, hv)));
        }
    }
    for gv in 0..g.n() {
        for (a, b) in h.edges() {
            edges.push((map.flat(gv, a), map.flat(gv, b)));
        }
    }
    Ok((Graph::from_edge_list(n, &edges)?, map))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p2_times_p2_is_c4() {
        let p2 = Graph::path(2).unwrap();
        let (prod, _) = cartesian_product(&p2, &p2).unwrap();
        assert_eq!(prod.n(), 4);
        assert_eq!(prod.edge_count(), 4);
        assert!((0..4).all(|v| prod.degree(v) == 2));
        assert!(prod.is_connected().unwrap());
    }

    #[test]
    fn k1_is_identity() {
        let k1 = Graph::empty(1).unwrap();
        let h = Graph::cycle(5).unwrap();
        let (prod, map) = cartesian_product(&k1, &h).unwrap();
        for (a, b) in h.edges() {
            assert!(prod.has_edge(map.flat(0, a), map.flat(0, b)));
        }
        assert_eq!(prod.edge_count(), h.edge_count());
    }

    #[test]
    fn p3_times_p2_counts() {
        let (prod, _) = cartesian_product(&Graph::path(3).unwrap(), &Graph::path(2).unwrap()).unwrap();
        assert_eq!(prod.n(), 6);
        assert_eq!(prod.edge_count(), 7);
    }

    #[test]
    fn empty_factor_rejected() {
        let k0 = Graph::empty(0).unwrap();
        assert!(cartesian_product(&k0, &Graph::path(2).unwrap()).is_err());
    }

    #[test]
    fn index_map_helpers() {
        let map = ProductIndexMap { n_g: 3, n_h: 4 };
        for x in 0..12 {
            let (g, h) = map.unflat(x);
            assert_eq!(map.flat(g, h), x);
        }
        assert_eq!(map.fiber(2).to_vec(), vec![6, 7, 8]);
        let gs: VertexSet = [0, 2].iter().collect();
        let hs: VertexSet = [1, 3].iter().collect();
        assert_eq!(map.lift(gs, hs).to_vec(), vec![3, 5, 9, 11]);
        assert_eq!(map.fiber_slice(map.lift(gs, hs), 3), gs);
        assert_eq!(map.project_h(map.lift(gs, hs)), hs);
    }
}
