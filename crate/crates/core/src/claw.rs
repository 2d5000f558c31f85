//! Claw (`K_{1,3}`) detection.

use serde::{Deserialize, Serialize};

use crate::bitset::Vertex;
use crate::graph::Graph;

/// An induced claw: a centre and three pairwise non-adjacent neighbours.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClawWitness {
    pub center: Vertex,
    pub leaves: [Vertex; 3],
}

/// Returns the lexicographically first claw `(c, a < b < d)`, if any.
pub fn find_claw(g: &Graph) -> Option<ClawWitness> {
    for c in 0..g.n() {
        let nb = g.neighbors(c);
        if nb.len() < 3 {
            continue;
        }
        for a in nb {
            // candidates after a, non-adjacent to a
            let rest_a = nb - g.closed(a);
            for b in rest_a.iter().filter(|&b| b > a) {
                let rest_b = rest_a - g.closed(b);
                if let Some(d) = rest_b.iter().find(|&d| d > b) {
                    return Some(ClawWitness {
                        center: c,
                        leaves: [a, b, d],
                    });
                }
            }
        }
    }
    None
}

pub fn is_claw_free(g: &Graph) -> bool {
    find_claw(g).is_none()
}
