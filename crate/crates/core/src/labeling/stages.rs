//! The three labeling stages and the properties checked after each.

use std::collections::BTreeMap;

use crate::bitset::{Vertex, VertexSet};
use crate::check::{Finding, FindingKind};
use crate::decomposition::{CellSet, VertexClass};
use crate::error::{Error, Result};

use super::{Label, LabelState, Order, ProductInstance, Stage, VerticalTable};

/// First labeling: vertices of a cell take that cell's index; a shared
/// neighbour in `P_{a,b}` takes the pair when both cells are vertically
/// undominated in its fiber, the undominated one when exactly one is, and
/// the smaller index otherwise.
pub fn labeling1(inst: &ProductInstance, table: &VerticalTable) -> Result<LabelState> {
    let mut labels = BTreeMap::new();
    for x in inst.d {
        let (g, h) = inst.map.unflat(x);
        let label = match inst.dec.class_of(g) {
            VertexClass::Dominator(i) | VertexClass::Private(i) => Label::One(i),
            VertexClass::Shared(s) => {
                if s.len() != 2 {
                    return Err(Error::Precondition(format!(
                        "D-vertex ({g},{h}) lies in shared class P_{:?} with {} indices",
                        s.to_vec(),
                        s.len()
                    )));
                }
                let v = s.to_vec();
                let (a, b) = (v[0], v[1]);
                let open = table.undominated_cells[h];
                match (open.contains(a), open.contains(b)) {
                    (true, true) => Label::Pair(a, b),
                    (true, false) => Label::One(a),
                    (false, true) => Label::One(b),
                    (false, false) => Label::One(a),
                }
            }
        };
        labels.insert(x, label);
    }
    Ok(LabelState {
        stage: Stage::L1,
        labels,
    })
}

/// Second labeling: a pair `(a,b)` at fiber `h` is split when some
/// neighbouring fiber `h' ∈ N_H(h)` holds a vertex of `D ∩ P_{a,b}`. The
/// pass visits `D` once; the witness keeps or receives the complementary
/// index.
pub fn labeling2(inst: &ProductInstance, state: &LabelState, order: &mut Order<'_>) -> Result<LabelState> {
    if state.stage != Stage::L1 {
        return Err(Error::Precondition(format!(
            "second labeling expects stage L1, got {:?}",
            state.stage
        )));
    }
    let mut labels = state.labels.clone();
    let mut visit: Vec<Vertex> = inst.d.to_vec();
    order.arrange(&mut visit);
    for x in visit {
        let Label::Pair(a, b) = labels[&x] else {
            continue;
        };
        let (_, h) = inst.map.unflat(x);
        let class = inst.dec.shared_class([a, b].iter().collect());
        let mut rows = inst.h.neighbors(h).to_vec();
        order.arrange(&mut rows);
        let witnesses: Vec<Vertex> = rows
            .iter()
            .flat_map(|&r| (inst.map.lift(class, VertexSet::singleton(r)) & inst.d).iter())
            .collect();
        let Some(y) = order.pick(&witnesses) else {
            continue;
        };
        match labels[&y] {
            Label::One(c) if c == a => {
                labels.insert(x, Label::One(b));
            }
            Label::One(c) if c == b => {
                labels.insert(x, Label::One(a));
            }
            Label::Pair(c, e) if (c, e) == (a, b) => {
                let (mine, theirs) = if order.coin() { (b, a) } else { (a, b) };
                labels.insert(x, Label::One(mine));
                labels.insert(y, Label::One(theirs));
            }
            other => {
                return Err(Error::Internal(format!(
                    "witness {y} in P_({a},{b}) carries label {other}, outside its class"
                )));
            }
        }
    }
    Ok(LabelState {
        stage: Stage::L2,
        labels,
    })
}

#[derive(Clone, Copy, Debug)]
enum Move {
    /// Two identical pairs: split them across the two vertices.
    SplitTwin(Vertex, Vertex),
    /// `y` shares exactly one index with another pair; keep its other one.
    DropShared(Vertex, usize),
    /// `y`'s pair contains a singleton present in the fiber.
    DropCovered(Vertex, usize),
}

fn moves_in_fiber(members: &[Vertex], labels: &BTreeMap<Vertex, Label>, first_only: bool) -> Vec<Move> {
    let mut out = Vec::new();
    for (p, &x) in members.iter().enumerate() {
        for &y in &members[p + 1..] {
            if labels[&x].is_pair() && labels[&x] == labels[&y] {
                out.push(Move::SplitTwin(x, y));
                if first_only {
                    return out;
                }
            }
        }
    }
    for (q, &y) in members.iter().enumerate() {
        let Label::Pair(a, b) = labels[&y] else { continue };
        let mine: CellSet = [a, b].iter().collect();
        for &x in &members[..q] {
            if let Label::Pair(..) = labels[&x] {
                let shared = mine & labels[&x].indices();
                if shared.len() == 1 {
                    let keep = (mine - shared).first().unwrap();
                    out.push(Move::DropShared(y, keep));
                    if first_only {
                        return out;
                    }
                }
            }
        }
    }
    for &y in members {
        let Label::Pair(a, b) = labels[&y] else { continue };
        for &x in members.iter().filter(|&&x| x != y) {
            if let Label::One(c) = labels[&x] {
                if c == a || c == b {
                    out.push(Move::DropCovered(y, if c == a { b } else { a }));
                    if first_only {
                        return out;
                    }
                }
            }
        }
    }
    out
}

/// Third labeling: inside each fiber, repeatedly resolve two identical
/// pairs, two pairs sharing one index, or a pair containing a singleton
/// present in the fiber, until none of these remain.
pub fn labeling3(inst: &ProductInstance, state: &LabelState, order: &mut Order<'_>) -> Result<LabelState> {
    if state.stage != Stage::L2 {
        return Err(Error::Precondition(format!(
            "third labeling expects stage L2, got {:?}",
            state.stage
        )));
    }
    let mut labels = state.labels.clone();
    let mut fibers: Vec<Vertex> = (0..inst.map.n_h).collect();
    order.arrange(&mut fibers);
    let fixed = matches!(order, Order::Fixed);
    for h in fibers {
        let members = inst.d_in_fiber(h).to_vec();
        let budget = members.iter().filter(|x| labels[x].is_pair()).count();
        let mut steps = 0;
        loop {
            let moves = moves_in_fiber(&members, &labels, fixed);
            let Some(mv) = order.pick(&moves) else { break };
            steps += 1;
            if steps > budget {
                return Err(Error::Internal(format!(
                    "third labeling did not reach a fixpoint in fiber {h} within {budget} steps"
                )));
            }
            match mv {
                Move::SplitTwin(x, y) => {
                    let Label::Pair(a, b) = labels[&x] else { unreachable!() };
                    let (first, second) = if order.coin() { (b, a) } else { (a, b) };
                    labels.insert(x, Label::One(first));
                    labels.insert(y, Label::One(second));
                }
                Move::DropShared(y, keep) | Move::DropCovered(y, keep) => {
                    labels.insert(y, Label::One(keep));
                }
            }
        }
    }
    Ok(LabelState {
        stage: Stage::L3,
        labels,
    })
}

/// Every vertex of `D` carries exactly one label and nothing else does.
pub fn check_totality(inst: &ProductInstance, state: &LabelState) -> Vec<Finding> {
    let labelled: VertexSet = state.labels.keys().collect();
    let mut out = Vec::new();
    if let Some(x) = (inst.d - labelled).first() {
        out.push(Finding::new(
            FindingKind::LabelTotality,
            format!("after {:?}: D-vertex {x} has no label", state.stage),
        ));
    }
    if let Some(x) = (labelled - inst.d).first() {
        out.push(Finding::new(
            FindingKind::LabelTotality,
            format!("after {:?}: vertex {x} outside D carries a label", state.stage),
        ));
    }
    out
}

/// Every label component indexes the vertex's cell or one of its shared
/// indices; pairs are sorted and distinct.
pub fn check_label_subset(inst: &ProductInstance, state: &LabelState) -> Vec<Finding> {
    let mut out = Vec::new();
    for (&x, &label) in &state.labels {
        let (g, h) = inst.map.unflat(x);
        let allowed = inst.dec.class_of(g).indices();
        let malformed = matches!(label, Label::Pair(a, b) if a >= b);
        if malformed || !label.indices().is_subset(allowed) {
            out.push(Finding::new(
                FindingKind::LabelSubset,
                format!(
                    "after {:?}: ({g},{h}) labelled {label} but its class allows {:?}",
                    state.stage,
                    allowed.to_vec()
                ),
            ));
        }
    }
    out
}

/// A surviving pair `(a,b)` at fiber `h` has no vertex of `D ∩ P_{a,b}` in
/// any fiber adjacent to `h`.
pub fn check_post_second(inst: &ProductInstance, state: &LabelState) -> Vec<Finding> {
    let mut out = Vec::new();
    for (&x, &label) in &state.labels {
        let Label::Pair(a, b) = label else { continue };
        let (g, h) = inst.map.unflat(x);
        let class = inst.dec.shared_class([a, b].iter().collect());
        let hit = inst.map.lift(class, inst.h.neighbors(h)) & inst.d;
        if let Some(y) = hit.first() {
            let (yg, yh) = inst.map.unflat(y);
            out.push(Finding::new(
                FindingKind::PostSecondLabelingWitness,
                format!(
                    "after {:?}: ({g},{h}) keeps pair {label} although ({yg},{yh}) ∈ D ∩ P_({a},{b}) in an adjacent fiber",
                    state.stage
                ),
            ));
        }
    }
    out
}

/// In every fiber the surviving pairs are pairwise disjoint and share no
/// index with a singleton label of the same fiber.
pub fn check_post_third(inst: &ProductInstance, state: &LabelState) -> Vec<Finding> {
    let mut out = Vec::new();
    for h in 0..inst.map.n_h {
        let mut pair_idx = CellSet::EMPTY;
        let mut single_idx = CellSet::EMPTY;
        let mut overlap = false;
        for x in inst.d_in_fiber(h) {
            match state.labels.get(&x) {
                Some(&Label::Pair(a, b)) => {
                    let s: CellSet = [a, b].iter().collect();
                    overlap |= pair_idx.intersects(s);
                    pair_idx |= s;
                }
                Some(&Label::One(i)) => single_idx.insert(i),
                None => {}
            }
        }
        if overlap || pair_idx.intersects(single_idx) {
            out.push(Finding::new(
                FindingKind::PostThirdLabelingOverlap,
                format!(
                    "fiber {h}: pair indices {:?} overlap each other or singletons {:?}",
                    pair_idx.to_vec(),
                    single_idx.to_vec()
                ),
            ));
        }
    }
    out
}
