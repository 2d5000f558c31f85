//! Acceptance suite. Runs with `harness = false` so every criterion prints
//! exactly one PASS/FAIL line; the process exits nonzero if any fails.

use std::collections::BTreeSet;
use std::fs;
use std::process::ExitCode;
use std::time::Instant;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use clawbound::claw::is_claw_free;
use clawbound::decomposition::{decompose, verify_structural_observations};
use clawbound::domination::{
    all_minimum_dominating_sets, brute_force_gamma, domination_number, min_independent_dominating_set,
    verify_allan_laskar,
};
use clawbound::enumerate::enumerate_connected_graphs;
use clawbound::graph6::{emit_graph6, parse_graph6};
use clawbound::harness::{run_corpus, verify_pair, RunConfig};
use clawbound::Graph;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn connected_up_to(n: usize) -> Vec<Graph> {
    (1..=n)
        .flat_map(|k| enumerate_connected_graphs(k, 8).unwrap())
        .collect()
}

fn claw_free_up_to(n: usize) -> Vec<Graph> {
    connected_up_to(n).into_iter().filter(is_claw_free).collect()
}

fn solver_matches_brute_force() -> Outcome {
    let graphs = connected_up_to(8);
    for g in &graphs {
        let g6 = emit_graph6(g).unwrap();
        let (a, b) = (domination_number(g).unwrap(), brute_force_gamma(g, false).unwrap());
        if a.value != b.value {
            return Err(format!("γ({g6}): solver {} vs brute force {}", a.value, b.value));
        }
        let (a, b) = (
            min_independent_dominating_set(g).unwrap(),
            brute_force_gamma(g, true).unwrap(),
        );
        if a.value != b.value {
            return Err(format!("i({g6}): solver {} vs brute force {}", a.value, b.value));
        }
    }
    Ok(format!("{} connected graphs on 1..=8 vertices", graphs.len()))
}

fn independent_equals_gamma() -> Outcome {
    let graphs = claw_free_up_to(7);
    for g in &graphs {
        let (record, ..) = verify_allan_laskar(g).unwrap();
        if !record.passed {
            return Err(format!("{}: {:?}", emit_graph6(g).unwrap(), record.findings));
        }
    }
    Ok(format!("{} connected claw-free graphs on 1..=7 vertices", graphs.len()))
}

fn structural_observations() -> Outcome {
    let graphs = claw_free_up_to(7);
    let mut sets = 0;
    for g in &graphs {
        let i = min_independent_dominating_set(g).unwrap().value;
        for gamma in all_minimum_dominating_sets(g, i, true).unwrap() {
            let dec = decompose(g, &gamma.to_vec()).unwrap();
            let record = verify_structural_observations(g, &dec).unwrap();
            if !record.passed {
                return Err(format!(
                    "{} with Γ = {gamma:?}: {:?}",
                    emit_graph6(g).unwrap(),
                    record.findings
                ));
            }
            sets += 1;
        }
    }
    Ok(format!("{} graphs, {sets} independent γ-sets", graphs.len()))
}

fn main_bound() -> Outcome {
    let run = run_corpus(&RunConfig::default()).map_err(|e| e.to_string())?;
    let bad: Vec<_> = run
        .records
        .iter()
        .filter(|r| !r.report.two_thirds_ok || !r.report.vizing_lhs_ok)
        .map(|r| format!("({}, {})", r.report.g6_g, r.report.g6_h))
        .collect();
    if !bad.is_empty() {
        return Err(format!("bound violated on {}", bad.join(", ")));
    }
    let min = run
        .summary
        .min_ratio
        .as_ref()
        .map(|m| m.value.to_string())
        .unwrap_or_default();
    Ok(format!(
        "{} pairs, minimum γ(G□H)/(γ(G)γ(H)) = {min}",
        run.records.len()
    ))
}

fn claim_suite() -> Outcome {
    let cfg = RunConfig {
        all_min_d: true,
        ..RunConfig::default()
    };
    let run = run_corpus(&cfg).map_err(|e| e.to_string())?;
    if run.summary.critical_count() != 0 {
        return Err(format!("critical findings: {:?}", run.summary.violations));
    }
    Ok(format!(
        "{} pairs, {} pipeline runs",
        run.records.len(),
        run.summary.traces_checked
    ))
}

fn order_robustness() -> Outcome {
    let cfg = RunConfig {
        all_min_d: true,
        ..RunConfig::default()
    };
    let gs = claw_free_up_to(cfg.max_ng);
    let hs = connected_up_to(cfg.max_nh);
    let pairs: Vec<(&Graph, &Graph)> = gs.iter().flat_map(|g| hs.iter().map(move |h| (g, h))).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(20_240_601);
    let chosen = sample(&mut rng, pairs.len(), 100.min(pairs.len())).into_vec();
    let mut traces = 0;
    for seed in 0..10u64 {
        let cfg = RunConfig {
            order_shuffle_seed: Some(seed),
            ..cfg.clone()
        };
        for &i in &chosen {
            let (g, h) = pairs[i];
            let v = verify_pair(g, h, &cfg).map_err(|e| e.to_string())?;
            if !v.findings.is_empty() {
                return Err(format!(
                    "seed {seed}, ({}, {}): {:?}",
                    v.report.g6_g, v.report.g6_h, v.findings
                ));
            }
            traces += v.traces.len();
        }
    }
    Ok(format!("{} instances × 10 seeds, {traces} pipeline runs", chosen.len()))
}

/// Connected graphs on `n` vertices up to isomorphism, by listing every
/// labelled graph and keeping the least adjacency code over all labellings.
fn brute_force_class_count(n: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let perms = permutations(n);
    let mut classes = BTreeSet::new();
    for mask in 0u32..1 << pairs.len() {
        let edges: Vec<_> = (0..pairs.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| pairs[i])
            .collect();
        let g = Graph::from_edge_list(n, &edges).unwrap();
        if !g.is_connected().unwrap() {
            continue;
        }
        let code = perms
            .iter()
            .map(|p| {
                let mut bits: Vec<(usize, usize)> =
                    edges.iter().map(|&(u, v)| (p[u].min(p[v]), p[u].max(p[v]))).collect();
                bits.sort();
                bits
            })
            .min()
            .unwrap();
        classes.insert(code);
    }
    classes.len()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn graph6_and_counts() -> Outcome {
    let graphs = connected_up_to(8);
    for g in &graphs {
        let s = emit_graph6(g).unwrap();
        if parse_graph6(&s).unwrap() != *g {
            return Err(format!("{s} does not round-trip"));
        }
    }
    let counts: Vec<usize> = (1..=4)
        .map(|n| enumerate_connected_graphs(n, 8).unwrap().len())
        .collect();
    let oracle: Vec<usize> = (1..=4).map(brute_force_class_count).collect();
    if counts != [1, 1, 2, 6] || counts != oracle {
        return Err(format!("counts {counts:?}, oracle {oracle:?}"));
    }
    Ok(format!("{} graphs round-trip; counts n=1..4 {counts:?}", graphs.len()))
}

fn deterministic_csv() -> Outcome {
    let read = || -> Result<Vec<u8>, String> {
        let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
        let cfg = RunConfig {
            out_dir: Some(dir.path().to_path_buf()),
            ..RunConfig::default()
        };
        run_corpus(&cfg).map_err(|e| e.to_string())?;
        fs::read(dir.path().join("report.csv")).map_err(|e| e.to_string())
    };
    let (a, b) = (read()?, read()?);
    if a != b {
        return Err("report.csv differs between runs".into());
    }
    Ok(format!("{} identical bytes", a.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 solver matches brute force (n <= 8)", solver_matches_brute_force),
        ("2 i(G) = γ(G) on claw-free graphs (n <= 7)", independent_equals_gamma),
        ("3 shared classes and cross edges (n <= 7)", structural_observations),
        ("4 two-thirds bound and Vizing inequality", main_bound),
        ("5 labeling claim suite", claim_suite),
        ("6 order robustness over 10 seeds", order_robustness),
        ("7 graph6 round-trip and enumeration counts", graph6_and_counts),
        ("8 byte-identical corpus CSV", deterministic_csv),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS  criterion {name}: {detail} ({secs:.2}s)"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  criterion {name}: {detail} ({secs:.2}s)");
            }
        }
    }
    println!("{} of 8 criteria passed", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
