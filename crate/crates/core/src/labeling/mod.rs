//! Three-stage labeling of a minimum dominating set `D` of `G □ H`, with
//! every intermediate property checked on the instance.
//!
//! Cell indices are positions in Γ (0-based). Product vertices are flat
//! indices under [`ProductIndexMap`]; fiber `G^h` is the block of vertices
//! with second coordinate `h`.

mod claims;
mod completion;
mod pipeline;
mod stages;
mod vertical;

use std::collections::BTreeMap;
use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

pub use claims::{verify_claims, LabelEntry, ProofTrace};
pub use completion::{compute_completion_set, fiber_sets, FiberTrace};
pub use pipeline::run_pipeline;
pub use stages::{
    check_label_subset, check_post_second, check_post_third, check_totality, labeling1, labeling2, labeling3,
};
pub use vertical::{classify_vertical, VerticalTable};

use crate::bitset::{Vertex, VertexSet};
use crate::decomposition::{CellDecomposition, CellSet};
use crate::domination::dominates;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::product::{cartesian_product, ProductIndexMap};

/// A label on a vertex of `D`: one cell index or an ordered pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Label {
    One(usize),
    Pair(usize, usize),
}

impl Label {
    /// Builds a pair label with sorted components.
    pub fn pair(a: usize, b: usize) -> Label {
        debug_assert_ne!(a, b);
        Label::Pair(a.min(b), a.max(b))
    }

    pub fn indices(self) -> CellSet {
        match self {
            Label::One(i) => CellSet::singleton(i),
            Label::Pair(i, j) => [i, j].iter().collect(),
        }
    }

    pub fn is_pair(self) -> bool {
        matches!(self, Label::Pair(..))
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::One(i) => write!(f, "{i}"),
            Label::Pair(i, j) => write!(f, "({i},{j})"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Stage {
    L1,
    L2,
    L3,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelState {
    pub stage: Stage,
    pub labels: BTreeMap<Vertex, Label>,
}

impl LabelState {
    pub fn pair_count(&self) -> usize {
        self.labels.values().filter(|l| l.is_pair()).count()
    }

    pub fn get(&self, v: Vertex) -> Option<Label> {
        self.labels.get(&v).copied()
    }
}

/// The data every stage works on: both factors, the decomposition of `G`,
/// the product and a dominating set `D` of it.
#[derive(Clone, Debug)]
pub struct ProductInstance {
    pub g: Graph,
    pub h: Graph,
    pub dec: CellDecomposition,
    pub product: Graph,
    pub map: ProductIndexMap,
    pub d: VertexSet,
}

impl ProductInstance {
    /// Validates that `d` dominates `G □ H`; on failure the error names an
    /// undominated product vertex.
    pub fn new(g: &Graph, h: &Graph, dec: CellDecomposition, d: VertexSet) -> Result<Self> {
        let (product, map) = cartesian_product(g, h)?;
        product.check_set(d)?;
        if !dominates(&product, d) {
            let x = (product.vertices() - product.closed_of_set(d)).first().unwrap();
            let (gv, hv) = map.unflat(x);
            return Err(Error::Input(format!(
                "D does not dominate G□H: vertex ({gv},{hv}) is undominated"
            )));
        }
        Ok(ProductInstance {
            g: g.clone(),
            h: h.clone(),
            dec,
            product,
            map,
            d,
        })
    }

    /// `D^h` as product vertices.
    pub fn d_in_fiber(&self, h: Vertex) -> VertexSet {
        self.d & self.map.fiber(h)
    }
}

/// Resolution of the choices left open by the labeling rules: fixed
/// lowest-index-first, or drawn from a seeded generator.
pub enum Order<'a> {
    Fixed,
    Shuffled(&'a mut ChaCha8Rng),
}

impl Order<'_> {
    pub(crate) fn arrange<T>(&mut self, items: &mut [T]) {
        if let Order::Shuffled(rng) = self {
            items.shuffle(rng);
        }
    }

    /// `false` under the fixed order.
    pub(crate) fn coin(&mut self) -> bool {
        match self {
            Order::Fixed => false,
            Order::Shuffled(rng) => rng.random(),
        }
    }

    pub(crate) fn pick<T: Copy>(&mut self, items: &[T]) -> Option<T> {
        match self {
            Order::Fixed => items.first().copied(),
            Order::Shuffled(rng) => (!items.is_empty()).then(|| items[rng.random_range(0..items.len())]),
        }
    }
}
