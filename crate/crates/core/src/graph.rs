//! Finite simple undirected graphs on vertex set `0..n`.

use std::fmt;
use std::io::BufRead;

use crate::bitset::{Vertex, VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};

/// A simple undirected graph stored as one neighbour bitset per vertex.
///
/// Adjacency is symmetric and irreflexive; every constructor checks this, so
/// a `Graph` value is always well formed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::Input(format!(
                "{n} vertices exceeds the supported maximum of {MAX_VERTICES}"
            )));
        }
        Ok(Graph {
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    /// Builds a graph from an edge list. Duplicate edges are collapsed.
    pub fn from_edge_list(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Input(format!("edge ({u}, {v}) has an endpoint outside 0..{n}")));
            }
            if u == v {
                return Err(Error::Input(format!("edge ({u}, {v}) is a self-loop")));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency bitsets, validating symmetry,
    /// irreflexivity and range.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Self> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(Error::Input(format!(
                "{n} vertices exceeds the supported maximum of {MAX_VERTICES}"
            )));
        }
        let all = VertexSet::full(n);
        for (v, &nb) in adj.iter().enumerate() {
            if !nb.is_subset(all) {
                return Err(Error::Input(format!("vertex {v} has a neighbour outside 0..{n}")));
            }
            if nb.contains(v) {
                return Err(Error::Input(format!("vertex {v} is adjacent to itself")));
            }
            if let Some(u) = nb.iter().find(|&u| !adj[u].contains(v)) {
                return Err(Error::Input(format!("adjacency is not symmetric on ({v}, {u})")));
            }
        }
        Ok(Graph { adj })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let all = VertexSet::full(n);
        Graph::from_adjacency((0..n).map(|v| all - VertexSet::singleton(v)).collect())
    }

    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edge_list(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Input(format!("a cycle needs at least 3 vertices, got {n}")));
        }
        let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
        Graph::from_edge_list(n, &edges)
    }

    /// The star `K_{1,leaves}` with centre 0.
    pub fn star(leaves: usize) -> Result<Self> {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Graph::from_edge_list(leaves + 1, &edges)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// Open neighbourhood. Panics when `v` is out of range.
    #[inline]
    pub fn neighbors(&self, v: Vertex) -> VertexSet {
        self.adj[v]
    }

    /// Closed neighbourhood `N[v]` without the range check.
    #[inline]
    pub fn closed(&self, v: Vertex) -> VertexSet {
        let mut s = self.adj[v];
        s.insert(v);
        s
    }

    pub fn closed_neighborhood(&self, v: Vertex) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.closed(v))
    }

    /// `N[S]`, the union of closed neighbourhoods over `s`.
    pub fn closed_of_set(&self, s: VertexSet) -> VertexSet {
        s.iter().fold(s, |acc, v| acc | self.adj[v])
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v >= self.n() {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        } else {
            Ok(())
        }
    }

    pub fn check_set(&self, s: VertexSet) -> Result<()> {
        match (s - self.vertices()).first() {
            Some(v) => Err(Error::VertexOutOfRange { vertex: v, n: self.n() }),
            None => Ok(()),
        }
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| !self.adj[v].intersects(s))
    }

    /// Whether a traversal from vertex 0 reaches every vertex.
    pub fn is_connected(&self) -> Result<bool> {
        if self.n() == 0 {
            return Err(Error::Input("connectivity is undefined for the empty graph".into()));
        }
        let mut seen = VertexSet::singleton(0);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next |= self.adj[v];
            }
            frontier = next - seen;
            seen |= frontier;
        }
        Ok(seen == self.vertices())
    }

    /// Graph obtained by relabelling: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[Vertex]) -> Graph {
        let mut adj = vec![VertexSet::EMPTY; self.n()];
        for (u, v) in self.edges() {
            adj[perm[u]].insert(perm[v]);
            adj[perm[v]].insert(perm[u]);
        }
        Graph { adj }
    }

    /// Writes the plain edge-list format: `n m` then one `u v` per line.
    pub fn to_edge_list_text(&self) -> String {
        let edges = self.edges();
        let mut out = format!("{} {}\n", self.n(), edges.len());
        for (u, v) in edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Parses the plain edge-list format. Blank lines and `#` comments are
    /// ignored.
    pub fn parse_edge_list<R: BufRead>(reader: R) -> Result<Graph> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        for (i, line) in reader.lines().enumerate() {
            let line = line?;
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let lineno = i + 1;
            let nums: Vec<usize> = line
                .split_whitespace()
                .map(|t| {
                    t.parse().map_err(|_| Error::EdgeList {
                        line: lineno,
                        reason: format!("`{t}` is not a nonnegative integer"),
                    })
                })
                .collect::<Result<_>>()?;
            if nums.len() != 2 {
                return Err(Error::EdgeList {
                    line: lineno,
                    reason: format!("expected two integers, found {}", nums.len()),
                });
            }
            match header {
                None => header = Some((nums[0], nums[1])),
                Some(_) => edges.push((nums[0], nums[1])),
            }
        }
        let (n, m) = header.ok_or(Error::EdgeList {
            line: 0,
            reason: "missing `n m` header".into(),
        })?;
        if edges.len() != m {
            return Err(Error::EdgeList {
                line: 0,
                reason: format!("header declares {m} edges but {} were listed", edges.len()),
            });
        }
        Graph::from_edge_list(n, &edges)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_examples() {
        let p2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        assert_eq!(p2.edge_count(), 1);
        let k1 = Graph::from_edge_list(1, &[]).unwrap();
        assert_eq!(k1.n(), 1);
        assert_eq!(k1.edge_count(), 0);
        let c4 = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!((0..4).all(|v| c4.degree(v) == 2));
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 0), (0, 1), (1, 2)]).unwrap();
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn bad_edges_name_the_pair() {
        let err = Graph::from_edge_list(3, &[(0, 3)]).unwrap_err().to_string();
        assert!(err.contains("(0, 3)"), "{err}");
        let err = Graph::from_edge_list(3, &[(2, 2)]).unwrap_err().to_string();
        assert!(err.contains("(2, 2)") && err.contains("self-loop"), "{err}");
    }

    #[test]
    fn closed_neighborhoods() {
        let p3 = Graph::path(3).unwrap();
        assert_eq!(p3.closed_neighborhood(1).unwrap().to_vec(), vec![0, 1, 2]);
        let k1 = Graph::empty(1).unwrap();
        assert_eq!(k1.closed_neighborhood(0).unwrap().to_vec(), vec![0]);
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(c4.closed_neighborhood(0).unwrap().to_vec(), vec![0, 1, 3]);
        assert!(matches!(c4.closed_neighborhood(4), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn connectivity() {
        assert!(Graph::path(4).unwrap().is_connected().unwrap());
        let two_edges = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!two_edges.is_connected().unwrap());
        assert!(Graph::empty(1).unwrap().is_connected().unwrap());
        assert!(Graph::empty(0).unwrap().is_connected().is_err());
    }

    #[test]
    fn from_adjacency_rejects_asymmetry() {
        let adj = vec![VertexSet::singleton(1), VertexSet::EMPTY];
        assert!(Graph::from_adjacency(adj).is_err());
    }

    #[test]
    fn edge_list_text_roundtrip() {
        let g = Graph::cycle(5).unwrap();
        let text = g.to_edge_list_text();
        assert!(text.starts_with("5 5\n"));
        let back = Graph::parse_edge_list(text.as_bytes()).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn edge_list_text_errors() {
        assert!(matches!(
            Graph::parse_edge_list("3 2\n0 1\n".as_bytes()),
            Err(Error::EdgeList { .. })
        ));
        assert!(matches!(
            Graph::parse_edge_list("3 1\n0 x\n".as_bytes()),
            Err(Error::EdgeList { line: 2, .. })
        ));
    }
}
