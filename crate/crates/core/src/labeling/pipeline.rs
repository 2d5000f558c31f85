use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bitset::{Vertex, VertexSet};
use crate::check::{CheckRecord, Finding, FindingKind};
use crate::claw::find_claw;
use crate::decomposition::decompose;
use crate::domination::domination_number;
use crate::error::{Error, Result};
use crate::graph::Graph;

use super::{
    check_label_subset, check_post_second, check_post_third, check_totality, classify_vertical, compute_completion_set,
    fiber_sets, labeling1, labeling2, labeling3, verify_claims, Order, ProductInstance, ProofTrace,
};

/// Runs the full labeling pipeline on `G □ H` with independent γ-set
/// `gamma` of `G` and dominating set `d` of the product.
///
/// `d` is expected to be a minimum dominating set; the checks are only
/// meaningful then. With `shuffle_seed`, every choice the labeling rules
/// leave open is drawn from a generator seeded with it.
pub fn run_pipeline(
    g: &Graph,
    gamma: &[Vertex],
    h: &Graph,
    d: VertexSet,
    shuffle_seed: Option<u64>,
) -> Result<ProofTrace> {
    if let Some(w) = find_claw(g) {
        return Err(Error::NotClawFree {
            center: w.center,
            leaves: w.leaves,
        });
    }
    let dec = decompose(g, gamma)?;
    let gamma_h = domination_number(h)?.value;
    let inst = ProductInstance::new(g, h, dec, d)?;

    let mut rng = shuffle_seed.map(ChaCha8Rng::seed_from_u64);
    let mut order = match rng.as_mut() {
        Some(r) => Order::Shuffled(r),
        None => Order::Fixed,
    };

    let table = classify_vertical(&inst);
    let s1 = labeling1(&inst, &table)?;
    let s2 = labeling2(&inst, &s1, &mut order)?;
    let s3 = labeling3(&inst, &s2, &mut order)?;

    let mut totality = Vec::new();
    let mut subset = Vec::new();
    for s in [&s1, &s2, &s3] {
        totality.extend(check_totality(&inst, s));
        subset.extend(check_label_subset(&inst, s));
    }
    let pair_counts = vec![s1.pair_count(), s2.pair_count(), s3.pair_count()];
    let mut monotone = Vec::new();
    if pair_counts.windows(2).any(|w| w[1] > w[0]) {
        monotone.push(Finding::new(
            FindingKind::PairCountIncreased,
            format!("pair counts across stages: {pair_counts:?}"),
        ));
    }
    let post_second = check_post_second(&inst, &s2);
    let mut post_third = check_post_second(&inst, &s3);
    post_third.extend(check_post_third(&inst, &s3));

    let (mut fibers, fiber_findings) = fiber_sets(&inst, &table, &s3)?;
    let mut completion = Vec::new();
    for f in &mut fibers {
        completion.extend(compute_completion_set(&inst, f, &s3));
    }

    let mut trace = verify_claims(&inst, fibers, &s3, gamma_h);
    trace.pair_counts = pair_counts;
    let mut checks = vec![
        CheckRecord::from_findings("label_totality", totality),
        CheckRecord::from_findings("label_subset", subset),
        CheckRecord::from_findings("pair_monotonicity", monotone),
        CheckRecord::from_findings("post_second_labeling", post_second),
        CheckRecord::from_findings("post_third_labeling", post_third),
        CheckRecord::from_findings("fiber_sets", fiber_findings),
        CheckRecord::from_findings("completion", completion),
    ];
    checks.append(&mut trace.checks);
    trace.checks = checks;
    Ok(trace)
}
