//! The `thintree` command line.
//!
//! Exit codes: 0 = thin / pass, 1 = counterexample found (not thin, lemma
//! violation, or fuzz disagreement), 2 = usage or format error. All
//! verdict output goes to stdout and is byte-identical across runs with
//! the same inputs and seeds; timings go to stderr.

use clap::{Parser, Subcommand};
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::graph::Cut;
use crate::harness::{self, LemmaReport};
use crate::io;
use crate::oracle::{
    max_avg_cut_decision_bf, max_avg_cut_opt_bf, max_cut_bf, thin_tree_verify_bf, SpanningTree,
    DEFAULT_VERTEX_LIMIT,
};
use crate::rational::{format_rational, parse_rational, Rational};
use crate::reduce::{reduce_mac_to_ttvc, SOUND_MULTIPLIER};

#[derive(Parser)]
#[command(
    name = "thintree",
    about = "Exact thin-tree verification and the MaxCut -> ThinTreeValid reduction chain",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify that a spanning tree is alpha-thin; exit 0 if thin, 1 if a
    /// violating cut exists.
    Verify {
        /// Graph file (`p`/`e` lines).
        graph: PathBuf,
        /// Tree file (`t`/`i` lines).
        tree: PathBuf,
        /// Threshold alpha as `p/q` or a bare integer.
        alpha: String,
    },
    /// Run a brute-force solver.
    Solve {
        #[command(subcommand)]
        problem: SolveProblem,
    },
    /// Build the gadget instance (G', T, alpha) for a MaxAvgCut triple.
    Reduce {
        graph: PathBuf,
        /// MaxAvgCut threshold, at least -1.
        #[arg(long, allow_hyphen_values = true)]
        k: String,
        /// Clique size per edge; below 24 the instance is flagged unsound.
        #[arg(long, default_value_t = SOUND_MULTIPLIER)]
        multiplier: usize,
        /// Output directory for gadget.graph / gadget.tree / gadget.map.
        #[arg(long)]
        out: PathBuf,
    },
    /// Check both gadget lemmas on one instance.
    CheckLemmas {
        graph: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        k: String,
        /// Random clique-splitting cuts to sample.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// End-to-end campaign over seeded random instances; exit 1 on any
    /// disagreement with the brute-force reference.
    Fuzz {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        count: usize,
        #[arg(long = "max-n")]
        max_n: usize,
    },
}

#[derive(Subcommand)]
enum SolveProblem {
    /// Maximum cut size; with --k, also the decision answer.
    Maxcut {
        graph: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        k: Option<String>,
    },
    /// Maximum average cut weight; with --k, the decision answer instead.
    Maxavgcut {
        graph: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        k: Option<String>,
    },
}

/// Parses argv and runs the requested subcommand, returning the process
/// exit code.
pub fn run<I>(args: I) -> i32
where
    I: IntoIterator<Item = String>,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            // Let clap render --help/--version on stdout with exit 0.
            let code = if err.use_stderr() { 2 } else { 0 };
            let _ = err.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            2
        }
    }
}

fn dispatch(command: Command) -> Result<i32> {
    match command {
        Command::Verify { graph, tree, alpha } => cmd_verify(&graph, &tree, &alpha),
        Command::Solve { problem } => match problem {
            SolveProblem::Maxcut { graph, k } => cmd_solve_maxcut(&graph, k.as_deref()),
            SolveProblem::Maxavgcut { graph, k } => cmd_solve_maxavgcut(&graph, k.as_deref()),
        },
        Command::Reduce {
            graph,
            k,
            multiplier,
            out,
        } => cmd_reduce(&graph, &k, multiplier, &out),
        Command::CheckLemmas {
            graph,
            k,
            samples,
            seed,
        } => cmd_check_lemmas(&graph, &k, samples, seed),
        Command::Fuzz { seed, count, max_n } => cmd_fuzz(seed, count, max_n),
    }
}

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| {
        Error::InvalidArgument(format!("cannot read {}: {e}", path.display()))
    })
}

fn load_graph(path: &Path) -> Result<io::GraphFile> {
    let text = read_file(path)?;
    parse_in(path, io::parse_graph(&text))
}

/// Attaches the file name to parse diagnostics.
fn parse_in<T>(path: &Path, result: Result<T>) -> Result<T> {
    result.map_err(|e| match e {
        Error::Parse { line, message } => Error::Parse {
            line,
            message: format!("{}: {message}", path.display()),
        },
        other => other,
    })
}

fn format_cut_vertices(cut: &Cut) -> String {
    let mut out = String::new();
    for (i, v) in cut.vertices().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        let _ = write!(out, "{v}");
    }
    out
}

fn cmd_verify(graph_path: &Path, tree_path: &Path, alpha_text: &str) -> Result<i32> {
    let file = load_graph(graph_path)?;
    let tree_ids = parse_in(tree_path, io::parse_tree(&read_file(tree_path)?))?;
    let tree = SpanningTree::new(&file.graph, tree_ids)?;
    let alpha = parse_rational(alpha_text)?;
    let verdict = thin_tree_verify_bf(&file.graph, &tree, &alpha, DEFAULT_VERTEX_LIMIT)?;
    if verdict.is_thin {
        println!(
            "THIN alpha={} worst={}",
            format_rational(&alpha),
            format_rational(&verdict.worst_thickness)
        );
        Ok(0)
    } else {
        println!(
            "NOT-THIN alpha={} worst={}",
            format_rational(&alpha),
            format_rational(&verdict.worst_thickness)
        );
        let cut = verdict.worst_cut.expect("certificate accompanies a NOT-THIN verdict");
        println!("certificate {}", format_cut_vertices(&cut));
        Ok(1)
    }
}

fn cmd_solve_maxcut(graph_path: &Path, k: Option<&str>) -> Result<i32> {
    let file = load_graph(graph_path)?;
    let (value, cut) = max_cut_bf(&file.graph)?;
    match k {
        None => {
            println!("maxcut value={value}");
            println!("cut {}", format_cut_vertices(&cut));
        }
        Some(text) => {
            let threshold = parse_rational(text)?;
            let answer = Rational::from_integer((value as i64).into()) >= threshold;
            println!(
                "maxcut value={value} k={} answer={}",
                format_rational(&threshold),
                if answer { "YES" } else { "NO" }
            );
            println!("cut {}", format_cut_vertices(&cut));
        }
    }
    Ok(0)
}

fn cmd_solve_maxavgcut(graph_path: &Path, k: Option<&str>) -> Result<i32> {
    let file = load_graph(graph_path)?;
    match k {
        None => {
            let (value, cut) = max_avg_cut_opt_bf(&file.graph, &file.weights)?;
            println!("maxavgcut value={}", format_rational(&value));
            println!("cut {}", format_cut_vertices(&cut));
        }
        Some(text) => {
            let threshold = parse_rational(text)?;
            let answer = max_avg_cut_decision_bf(&file.graph, &file.weights, &threshold)?;
            println!(
                "maxavgcut k={} answer={}",
                format_rational(&threshold),
                if answer { "YES" } else { "NO" }
            );
        }
    }
    Ok(0)
}

fn cmd_reduce(graph_path: &Path, k_text: &str, multiplier: usize, out_dir: &Path) -> Result<i32> {
    let file = load_graph(graph_path)?;
    let k = parse_rational(k_text)?;
    let instance = reduce_mac_to_ttvc(&file.graph, &file.weights, &k, multiplier)?;
    if multiplier < SOUND_MULTIPLIER {
        eprintln!(
            "warning: multiplier {multiplier} is below {SOUND_MULTIPLIER}; the \
             clique-splitting bound is not established, so the instance is only \
             structurally meaningful"
        );
    }

    std::fs::create_dir_all(out_dir)?;
    let graph_out = out_dir.join("gadget.graph");
    let tree_out = out_dir.join("gadget.tree");
    let map_out = out_dir.join("gadget.map");
    std::fs::write(&graph_out, io::write_graph(instance.g_prime(), None))?;
    std::fs::write(&tree_out, io::write_tree(instance.tree()))?;
    std::fs::write(&map_out, instance.write_map())?;

    println!(
        "reduce n={} m={} k={} multiplier={multiplier}",
        file.graph.vertex_count(),
        file.graph.edge_count(),
        format_rational(&k)
    );
    println!(
        "gadget vertices={} edges={} alpha={}",
        instance.g_prime().vertex_count(),
        instance.g_prime().edge_count(),
        format_rational(instance.alpha())
    );
    for path in [&graph_out, &tree_out, &map_out] {
        println!("wrote {}", path.display());
    }
    Ok(0)
}

fn print_report(name: &str, report: &LemmaReport) -> bool {
    let status = if report.passed() { "PASS" } else { "FAIL" };
    println!(
        "{status} {name} instance=[{}] checks={} violations={}",
        report.instance,
        report.checks_run,
        report.violations.len()
    );
    for violation in &report.violations {
        let cut = violation
            .cut
            .as_ref()
            .map(format_cut_vertices)
            .unwrap_or_else(|| "-".into());
        println!(
            "violation {name} cut=[{cut}] expected=[{}] observed=[{}]",
            violation.expected, violation.observed
        );
    }
    eprintln!("{name}: {} ms", report.elapsed.as_millis());
    report.passed()
}

fn cmd_check_lemmas(graph_path: &Path, k_text: &str, samples: usize, seed: u64) -> Result<i32> {
    let file = load_graph(graph_path)?;
    let k = parse_rational(k_text)?;
    println!(
        "# check-lemmas graph={} k={} samples={samples} seed={seed} multiplier={SOUND_MULTIPLIER}",
        graph_path.display(),
        format_rational(&k)
    );
    let report1 = harness::lemma1_check(&file.graph, &file.weights, &k, SOUND_MULTIPLIER)?;
    let ok1 = print_report("lemma1", &report1);
    let instance = reduce_mac_to_ttvc(&file.graph, &file.weights, &k, SOUND_MULTIPLIER)?;
    let report2 = harness::lemma2_check(&instance, samples, seed)?;
    let ok2 = print_report("lemma2", &report2);
    Ok(if ok1 && ok2 { 0 } else { 1 })
}

fn cmd_fuzz(seed: u64, count: usize, max_n: usize) -> Result<i32> {
    println!(
        "# fuzz seed={seed} count={count} max-n={max_n} multiplier={SOUND_MULTIPLIER} edge-cap={}",
        harness::FUZZ_EDGE_CAP
    );
    let outcome = harness::fuzz_campaign(seed, count, max_n)?;
    for trial in &outcome.trials {
        let status = if trial.disagreements == 0 { "PASS" } else { "FAIL" };
        println!(
            "{status} trial={} n={} m={} checks={} disagreements={}",
            trial.index, trial.vertex_count, trial.edge_count, trial.checks, trial.disagreements
        );
    }
    let status = if outcome.total_disagreements == 0 { "PASS" } else { "FAIL" };
    println!(
        "{status} campaign trials={} checks={} disagreements={}",
        outcome.trials.len(),
        outcome.total_checks,
        outcome.total_disagreements
    );
    Ok(if outcome.total_disagreements == 0 { 0 } else { 1 })
}
