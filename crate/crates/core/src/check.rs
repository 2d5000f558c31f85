//! Check outcomes shared by every verification step.
//!
//! A failed check is data, not an error: it is recorded as a [`Finding`] and
//! surfaced in reports and in the process exit status.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FindingKind {
    /// i(G) != γ(G) on a claw-free graph.
    IndependentDominationGap,
    /// A shared class indexed by three or more dominators is nonempty.
    SharedClassTooLarge,
    /// Edge between P_{a,b} and P_{c,d} with a, b, c, d distinct.
    DisjointSharedEdge,
    /// Edge between P_a and P_{b,c} with a not in {b, c}.
    PrivateSharedEdge,
    /// A vertex of D lacks a label, or a label sits outside D.
    LabelTotality,
    /// A label component does not index the vertex's cell or shared class.
    LabelSubset,
    /// The number of paired labels grew between stages.
    PairCountIncreased,
    /// A surviving pair after the second labeling still has a witness in a
    /// neighbouring fiber.
    PostSecondLabelingWitness,
    /// Surviving pairs in a fiber overlap each other or a singleton.
    PostThirdLabelingOverlap,
    /// S1 outside the chamber of I, |J1| != 2|S1|, or J1 not inside I.
    FiberSetInvariant,
    /// No subset of the allowed candidates completes the domination of the
    /// chamber of J1.
    CompletionInfeasible,
    /// A completion member is not a singleton-labelled private neighbour
    /// of a vertically dominated cell.
    CompletionNotPrivate,
    /// |E_h| < |S1_h| in some fiber.
    CompletionTooSmall,
    /// The projection of D_i onto H does not dominate H.
    ProjectionNotDominating,
    /// sum |D_i| != |D| + sum |S1_h|.
    CountingIdentity,
    /// sum |D_i| < γ(G)γ(H).
    LowerChain,
    /// 2 sum |D_i| > 3 |D|.
    UpperChain,
    /// γ(G□H) < γ(G)γ(H).
    VizingInequality,
    /// 3γ(G□H) < 2γ(G)γ(H).
    TwoThirdsBound,
}

impl FindingKind {
    pub fn name(self) -> &'static str {
        use FindingKind::*;
        match self {
            IndependentDominationGap => "independent_domination_gap",
            SharedClassTooLarge => "shared_class_too_large",
            DisjointSharedEdge => "disjoint_shared_edge",
            PrivateSharedEdge => "private_shared_edge",
            LabelTotality => "label_totality",
            LabelSubset => "label_subset",
            PairCountIncreased => "pair_count_increased",
            PostSecondLabelingWitness => "post_second_labeling_witness",
            PostThirdLabelingOverlap => "post_third_labeling_overlap",
            FiberSetInvariant => "fiber_set_invariant",
            CompletionInfeasible => "completion_infeasible",
            CompletionNotPrivate => "completion_not_private",
            CompletionTooSmall => "completion_too_small",
            ProjectionNotDominating => "projection_not_dominating",
            CountingIdentity => "counting_identity",
            LowerChain => "lower_chain",
            UpperChain => "upper_chain",
            VizingInequality => "vizing_inequality",
            TwoThirdsBound => "two_thirds_bound",
        }
    }
}

impl fmt::Display for FindingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A critical finding: a concrete instance on which a checked statement
/// fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    pub kind: FindingKind,
    pub message: String,
}

impl Finding {
    pub fn new(kind: FindingKind, message: impl Into<String>) -> Self {
        Finding {
            kind,
            message: message.into(),
        }
    }
}

impl fmt::Display for Finding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.kind, self.message)
    }
}

/// Outcome of one named check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub check: String,
    pub passed: bool,
    pub findings: Vec<Finding>,
}

impl CheckRecord {
    pub fn from_findings(check: impl Into<String>, findings: Vec<Finding>) -> Self {
        CheckRecord {
            check: check.into(),
            passed: findings.is_empty(),
            findings,
        }
    }
}
