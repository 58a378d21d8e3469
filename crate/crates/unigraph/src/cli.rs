//! Command-line surface: argument parsing, format ingestion, rendering,
//! and exit codes.
//!
//! Exit codes are the machine contract: 0 success / unimodular, 1 not
//! unimodular, 2 indeterminate or operational failure, 64 input error.

use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::construct::{random_unimodular, GeneratorParams};
use crate::decompose::block_decomposition;
use crate::graph::Graph;
use crate::io::{certificate_to_json, graph_to_json, parse_graph, script_to_json};
use crate::linalg::{
    is_totally_unimodular_bruteforce, minor_scan, MinorReport, DEFAULT_MINOR_LIMIT,
};
use crate::soc::{decide_unimodular_capped, Verdict, DEFAULT_CYCLE_CAP};
use crate::toric::{enumerate_circuits, enumerate_graver, kernel_oracle_graver, EnumerationCaps};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_UNIMODULAR: i32 = 1;
pub const EXIT_INDETERMINATE: i32 = 2;
pub const EXIT_INPUT_ERROR: i32 = 64;

#[derive(Parser)]
#[command(
    name = "unigraph",
    about = "Decide unimodularity of graph incidence matrices, with certificates",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InputArg {
    /// Graph file (edge list or JSON, auto-detected); stdin when omitted
    input: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Decide unimodularity and print a certificate
    Decide {
        #[command(flatten)]
        input: InputArg,
        /// Emit the certificate as JSON
        #[arg(long)]
        json: bool,
        /// Cap on enumerated induced odd cycles
        #[arg(long, default_value_t = DEFAULT_CYCLE_CAP)]
        cap: usize,
    },
    /// List circuits or the Graver basis of the graph's toric ideal
    Bases {
        #[command(flatten)]
        input: InputArg,
        /// Enumerate circuits structurally
        #[arg(long, conflicts_with_all = ["graver", "oracle"])]
        circuits: bool,
        /// Enumerate the Graver basis structurally (default)
        #[arg(long, conflicts_with = "oracle")]
        graver: bool,
        /// Compute the Graver basis by exhaustive kernel search with the
        /// given coordinate bound
        #[arg(long, value_name = "BOUND")]
        oracle: Option<i64>,
        /// Cap on returned elements
        #[arg(long, default_value_t = 100_000)]
        cap: usize,
    },
    /// Exact minor scan of the incidence matrix
    Oracle {
        #[command(flatten)]
        input: InputArg,
        /// Sample this many minors instead of exhausting them
        #[arg(long, value_name = "N")]
        sample: Option<u64>,
        /// RNG seed for sampling
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also run the brute-force total-unimodularity check up to this
        /// submatrix order
        #[arg(long, value_name = "K")]
        tu: Option<usize>,
    },
    /// Generate a certified-unimodular graph from a seed
    Generate {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of triangle petals in the flower base
        #[arg(long, default_value_t = 2)]
        petals: usize,
        /// Maximum number of random ears
        #[arg(long, default_value_t = 4)]
        ears: usize,
        #[arg(long = "max-ear-len", default_value_t = 4)]
        max_ear_len: usize,
        /// Build a bipartite graph (even cycle base) instead of a flower
        #[arg(long)]
        bipartite: bool,
        /// Write the graph JSON here instead of stdout
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        /// Also write the replayable construction script here
        #[arg(long, value_name = "FILE")]
        script: Option<PathBuf>,
    },
    /// Print the block decomposition
    Blocks {
        #[command(flatten)]
        input: InputArg,
    },
}

/// Entry point behind the binary; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap handles --help/--version printing itself
            let code = if e.use_stderr() { EXIT_INPUT_ERROR } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match cli.command {
        Command::Decide { input, json, cap } => with_graph(&input, |g| cmd_decide(g, json, cap)),
        Command::Bases {
            input,
            circuits,
            graver,
            oracle,
            cap,
        } => with_graph(&input, |g| cmd_bases(g, circuits, graver, oracle, cap)),
        Command::Oracle {
            input,
            sample,
            seed,
            tu,
        } => with_graph(&input, |g| cmd_oracle(g, sample, seed, tu)),
        Command::Generate {
            seed,
            petals,
            ears,
            max_ear_len,
            bipartite,
            out,
            script,
        } => cmd_generate(seed, petals, ears, max_ear_len, bipartite, out, script),
        Command::Blocks { input } => with_graph(&input, cmd_blocks),
    }
}

fn read_input(input: &InputArg) -> Result<String, String> {
    match &input.input {
        Some(path) => std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| format!("stdin: {e}"))?;
            Ok(buf)
        }
    }
}

fn with_graph(input: &InputArg, f: impl FnOnce(&Graph) -> i32) -> i32 {
    let text = match read_input(input) {
        Ok(t) => t,
        Err(msg) => {
            eprintln!("error: {msg}");
            return EXIT_INPUT_ERROR;
        }
    };
    match parse_graph(&text) {
        Ok(g) => f(&g),
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_INPUT_ERROR
        }
    }
}

fn cmd_decide(g: &Graph, json: bool, cap: usize) -> i32 {
    let cert = decide_unimodular_capped(g, cap);
    if json {
        println!("{}", certificate_to_json(g, &cert));
    } else {
        match cert.verdict {
            Verdict::UnimodularBipartite => println!("UNIMODULAR_BIPARTITE: the graph is bipartite"),
            Verdict::UnimodularSingleBlockSoc => println!(
                "UNIMODULAR_SINGLE_BLOCK_SOC: one non-bipartite block, any two odd cycles intersect"
            ),
            Verdict::UnimodularLinkVertex => println!(
                "UNIMODULAR_LINK_VERTEX: every odd cycle passes through vertex {:?}",
                g.label(cert.link_vertex.expect("link vertex present"))
            ),
            Verdict::NotUnimodular => {
                let w = cert.witness.as_ref().expect("witness present");
                let label_seq = |c: &crate::decompose::CycleWitness| {
                    c.vertices()
                        .iter()
                        .map(|&v| g.label(v).to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                };
                println!("NOT_UNIMODULAR: vertex-disjoint odd cycles found");
                println!("  cycle 1: {}", label_seq(&w.cycle1));
                println!("  cycle 2: {}", label_seq(&w.cycle2));
                println!(
                    "  witness binomial: {}",
                    cert.witness_binomial.as_ref().expect("binomial present")
                );
            }
            Verdict::Indeterminate => println!(
                "INDETERMINATE: {}",
                cert.indeterminate_reason.as_deref().unwrap_or("unknown")
            ),
        }
        println!("non-bipartite blocks: {}", cert.non_bipartite_blocks);
    }
    match cert.verdict {
        Verdict::NotUnimodular => EXIT_NOT_UNIMODULAR,
        Verdict::Indeterminate => EXIT_INDETERMINATE,
        _ => EXIT_OK,
    }
}

fn cmd_bases(g: &Graph, circuits: bool, _graver: bool, oracle: Option<i64>, cap: usize) -> i32 {
    let caps = EnumerationCaps {
        max_elements: cap,
        ..EnumerationCaps::default()
    };
    let basis = if let Some(bound) = oracle {
        match kernel_oracle_graver(g, bound, true, caps.exploration_budget) {
            Ok(b) => b,
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_INDETERMINATE;
            }
        }
    } else if circuits {
        enumerate_circuits(g, &caps)
    } else {
        enumerate_graver(g, &caps)
    };
    for b in &basis.elements {
        if b.is_square_free() {
            println!("{b}");
        } else {
            println!("{b}  # not square-free");
        }
    }
    println!("{}", if basis.complete { "complete" } else { "incomplete" });
    EXIT_OK
}

fn cmd_oracle(g: &Graph, sample: Option<u64>, seed: u64, tu: Option<usize>) -> i32 {
    let m = g.incidence_matrix();
    let limit = sample.unwrap_or(DEFAULT_MINOR_LIMIT as u64);
    let report: MinorReport = minor_scan(&m, Some(limit), Some(seed));
    let values: Vec<String> = report
        .distinct_abs_values
        .iter()
        .map(|v| v.to_string())
        .collect();
    let verdict = match report.unimodular_verdict() {
        Ok(true) => "yes".to_string(),
        Ok(false) => "no".to_string(),
        Err(e) => format!("unknown ({e})"),
    };
    println!(
        "d={}, |minors|={{{}}}, unimodular={}",
        report.rank,
        values.join(","),
        verdict
    );
    println!(
        "minors evaluated: {} ({})",
        report.minors_evaluated,
        if report.sampled { "sampled" } else { "exhaustive" }
    );
    if let Some(k) = tu {
        match is_totally_unimodular_bruteforce(&m, k) {
            Ok(ans) => println!("totally-unimodular={}", if ans { "yes" } else { "no" }),
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_INDETERMINATE;
            }
        }
    }
    EXIT_OK
}

fn cmd_generate(
    seed: u64,
    petals: usize,
    ears: usize,
    max_ear_len: usize,
    bipartite: bool,
    out: Option<PathBuf>,
    script_path: Option<PathBuf>,
) -> i32 {
    let params = GeneratorParams {
        petals,
        max_ears: ears,
        max_ear_length: max_ear_len,
        bipartite_mode: bipartite,
    };
    let (g, script) = random_unimodular(seed, &params);
    let graph_json = graph_to_json(&g);
    if let Some(path) = out {
        if let Err(e) = std::fs::write(&path, graph_json + "\n") {
            eprintln!("error: {}: {e}", path.display());
            return EXIT_INDETERMINATE;
        }
    } else {
        println!("{graph_json}");
    }
    if let Some(path) = script_path {
        if let Err(e) = std::fs::write(&path, script_to_json(&script) + "\n") {
            eprintln!("error: {}: {e}", path.display());
            return EXIT_INDETERMINATE;
        }
    }
    EXIT_OK
}

fn cmd_blocks(g: &Graph) -> i32 {
    let dec = block_decomposition(g);
    for (i, b) in dec.blocks.iter().enumerate() {
        let edges: Vec<String> = b
            .edges
            .iter()
            .map(|&e| {
                let [u, v] = g.endpoints(e);
                format!("{}-{}", g.label(u), g.label(v))
            })
            .collect();
        println!(
            "block {}: edges [{}] bipartite={}",
            i,
            edges.join(", "),
            if b.bipartite { "yes" } else { "no" }
        );
    }
    let cuts: Vec<&str> = dec.cut_vertices.iter().map(|&v| g.label(v)).collect();
    println!("cut vertices: [{}]", cuts.join(", "));
    println!("s={}", dec.non_bipartite_count());
    EXIT_OK
}
