use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::decomposition::CellSet;

use super::ProductInstance;

/// Which cells and vertices are vertically dominated by `D`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerticalTable {
    /// `I_h`: cells `i` with `(Q_i × N_H[h]) ∩ D = ∅`, one entry per `h`.
    pub undominated_cells: Vec<CellSet>,
    /// Product vertices `(v,h)` with `({v} × N_H[h]) ∩ D ≠ ∅`.
    pub dominated_vertices: VertexSet,
}

impl VerticalTable {
    pub fn is_vertically_dominated(&self, x: usize) -> bool {
        self.dominated_vertices.contains(x)
    }
}

pub fn classify_vertical(inst: &ProductInstance) -> VerticalTable {
    let map = &inst.map;
    let mut undominated_cells = Vec::with_capacity(map.n_h);
    let mut dominated_vertices = VertexSet::EMPTY;
    for h in 0..map.n_h {
        let rows = inst.h.closed(h);
        let mut cells = CellSet::EMPTY;
        for i in 0..inst.dec.k() {
            if !map.lift(inst.dec.cell(i), rows).intersects(inst.d) {
                cells.insert(i);
            }
        }
        undominated_cells.push(cells);
        for g in 0..map.n_g {
            if map.lift(VertexSet::singleton(g), rows).intersects(inst.d) {
                dominated_vertices.insert(map.flat(g, h));
            }
        }
    }
    VerticalTable {
        undominated_cells,
        dominated_vertices,
    }
}
