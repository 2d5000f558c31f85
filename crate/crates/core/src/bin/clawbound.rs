use std::fs;
use std::io::BufReader;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use clawbound::claw::find_claw;
use clawbound::domination::{domination_number, min_independent_dominating_set};
use clawbound::graph6::{emit_graph6, parse_graph6_lines};
use clawbound::harness::{run_corpus, search_extremal, verify_pair, CorpusRun, CorpusSource, RunConfig};
use clawbound::product::cartesian_product;
use clawbound::Graph;

#[derive(Parser)]
#[command(
    name = "clawbound",
    version,
    about = "Domination in Cartesian products with a claw-free factor"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print γ and i with witnesses for every graph in a file.
    Gamma { file: PathBuf },
    /// Report whether each graph in a file is claw-free.
    Clawfree { file: PathBuf },
    /// Emit G □ H for the first graph of each file.
    Product {
        g: PathBuf,
        h: PathBuf,
        #[arg(long, value_enum, default_value_t = OutFormat::G6)]
        format: OutFormat,
    },
    /// Check one pair: bounds, decomposition and the labeling pipeline.
    Verify {
        g: PathBuf,
        h: PathBuf,
        /// Run the pipeline on every minimum dominating set of small products.
        #[arg(long)]
        all_min_d: bool,
        #[arg(long)]
        shuffle_seed: Option<u64>,
        /// Write the proof traces as JSON.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Sweep every (G, H) pair of a corpus.
    Corpus(CorpusArgs),
    /// Rank corpus instances by γ(G□H) / (γ(G)γ(H)).
    Search {
        #[command(flatten)]
        corpus: CorpusArgs,
        /// Number of ranked instances to print.
        #[arg(long, default_value_t = 20)]
        top: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    G6,
    El,
}

#[derive(Args)]
struct CorpusArgs {
    #[arg(long, default_value_t = 6)]
    max_ng: usize,
    #[arg(long, default_value_t = 4)]
    max_nh: usize,
    /// Read factors from a graph6 file instead of enumerating.
    #[arg(long)]
    g6: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long)]
    all_min_d: bool,
    #[arg(long)]
    shuffle_seed: Option<u64>,
    /// Embed proof traces in report.json.
    #[arg(long)]
    traces: bool,
    /// Allow caps beyond the default safe range.
    #[arg(long)]
    unsafe_caps: bool,
}

impl CorpusArgs {
    fn config(&self) -> Result<RunConfig> {
        let jobs = match std::env::var("CLAWBOUND_JOBS") {
            Ok(v) => Some(
                v.trim()
                    .parse()
                    .with_context(|| format!("CLAWBOUND_JOBS={v} is not a count"))?,
            ),
            Err(_) => self.jobs,
        };
        Ok(RunConfig {
            max_ng: self.max_ng,
            max_nh: self.max_nh,
            corpus_source: match &self.g6 {
                Some(p) => CorpusSource::Graph6File(p.clone()),
                None => CorpusSource::BuiltIn,
            },
            all_min_d: self.all_min_d,
            order_shuffle_seed: self.shuffle_seed,
            embed_traces: self.traces,
            out_dir: self.out.clone(),
            jobs,
            unsafe_caps: self.unsafe_caps,
            ..RunConfig::default()
        })
    }
}

/// Reads graphs from a `.g6` or `.el` file; other extensions are sniffed.
fn read_graphs(path: &Path) -> Result<Vec<Graph>> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let edge_list = match path.extension().and_then(|e| e.to_str()) {
        Some("g6") => false,
        Some("el") => true,
        _ => text
            .lines()
            .find(|l| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
            .is_some_and(|l| {
                l.split_whitespace().count() == 2 && l.split_whitespace().all(|t| t.parse::<usize>().is_ok())
            }),
    };
    let graphs = if edge_list {
        vec![Graph::parse_edge_list(BufReader::new(text.as_bytes()))?]
    } else {
        parse_graph6_lines(&text)?
    };
    if graphs.is_empty() {
        bail!("{} contains no graphs", path.display());
    }
    Ok(graphs)
}

fn first_graph(path: &Path) -> Result<Graph> {
    Ok(read_graphs(path)?.swap_remove(0))
}

fn label(g: &Graph) -> String {
    emit_graph6(g).unwrap_or_else(|_| format!("<{} vertices>", g.n()))
}

fn print_corpus(run: &CorpusRun) {
    let s = &run.summary;
    println!(
        "instances: {}  traces checked: {}  skipped (claw): {}  skipped (disconnected): {}",
        s.instances, s.traces_checked, run.skipped_claw, run.skipped_disconnected
    );
    if let Some(m) = &s.min_ratio {
        println!("min γ(G□H)/(γ(G)γ(H)) = {} at G = {}, H = {}", m.value, m.g6_g, m.g6_h);
    }
    if let Some(m) = &s.max_overcount {
        println!("max Σ|D_i|/|D| = {} at G = {}, H = {}", m.value, m.g6_g, m.g6_h);
    }
    println!(
        "time: total {:.3}s, mean {}µs, max {}µs per instance",
        s.total_elapsed_us as f64 / 1e6,
        s.mean_elapsed_us(),
        s.max_elapsed_us
    );
    if s.violations.is_empty() {
        println!("critical findings: none");
    } else {
        for (kind, count) in &s.violations {
            println!("critical finding {kind}: {count}");
        }
    }
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Gamma { file } => {
            for g in read_graphs(&file)? {
                let gamma = domination_number(&g)?;
                let indep = min_independent_dominating_set(&g)?;
                println!(
                    "{}\tn={}\tgamma={} {:?}\ti={} {:?}\tnodes={}",
                    label(&g),
                    g.n(),
                    gamma.value,
                    gamma.witness,
                    indep.value,
                    indep.witness,
                    gamma.node_count + indep.node_count
                );
            }
            Ok(true)
        }
        Command::Clawfree { file } => {
            for g in read_graphs(&file)? {
                match find_claw(&g) {
                    None => println!("{}\tclaw-free", label(&g)),
                    Some(w) => println!("{}\tclaw center={} leaves={:?}", label(&g), w.center, w.leaves),
                }
            }
            Ok(true)
        }
        Command::Product { g, h, format } => {
            let (p, _) = cartesian_product(&first_graph(&g)?, &first_graph(&h)?)?;
            match format {
                OutFormat::G6 => println!("{}", emit_graph6(&p)?),
                OutFormat::El => print!("{}", p.to_edge_list_text()),
            }
            Ok(true)
        }
        Command::Verify {
            g,
            h,
            all_min_d,
            shuffle_seed,
            trace,
        } => {
            let cfg = RunConfig {
                all_min_d,
                order_shuffle_seed: shuffle_seed,
                ..RunConfig::default()
            };
            let v = verify_pair(&first_graph(&g)?, &first_graph(&h)?, &cfg)?;
            let r = &v.report;
            println!("G = {}  H = {}", r.g6_g, r.g6_h);
            println!(
                "γ(G) = {}  γ(H) = {}  γ(G□H) = {}",
                r.gamma_g, r.gamma_h, r.gamma_product
            );
            println!("ratio γ(G□H)/(γ(G)γ(H)) = {}", r.ratio);
            println!(
                "Vizing inequality: {}",
                if r.vizing_lhs_ok { "holds" } else { "VIOLATED" }
            );
            println!(
                "two-thirds bound: {}",
                if r.two_thirds_ok { "holds" } else { "VIOLATED" }
            );
            println!(
                "baselines: {} (Suen-Tarr), {} (claw-free survey)",
                r.suen_tarr_value, r.survey_clawfree_value
            );
            println!(
                "pipeline runs: {}  max Σ|D_i|/|D| = {}",
                v.traces.len(),
                v.max_overcount
            );
            for f in &v.findings {
                println!("critical: {f}");
            }
            if let Some(path) = trace {
                fs::write(&path, serde_json::to_string_pretty(&v.traces)? + "\n")
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            Ok(v.findings.is_empty())
        }
        Command::Corpus(args) => {
            let run = run_corpus(&args.config()?)?;
            print_corpus(&run);
            Ok(run.summary.critical_count() == 0)
        }
        Command::Search { corpus, top } => {
            let (ranked, run) = search_extremal(&corpus.config()?)?;
            println!("rank\tratio\tγG\tγH\tγGH\tG\tH");
            for r in ranked.iter().take(top) {
                println!(
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}{}",
                    r.rank,
                    r.ratio,
                    r.gamma_g,
                    r.gamma_h,
                    r.gamma_product,
                    r.g6_g,
                    r.g6_h,
                    if r.below_two_thirds { "\tBELOW 2/3" } else { "" }
                );
            }
            print_corpus(&run);
            Ok(run.summary.critical_count() == 0)
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
