//! `wh`: build, analyze, classify and census WH_n(a,b,c,d) graphs.
//!
//! Machine-readable JSON goes to stdout, human-readable summaries to stderr,
//! so the commands compose in pipelines. Exit codes: 0 success, 1 usage
//! error, 2 internal discrepancy (a census disagreement or an edge-transitive
//! hit, either of which signals a bug).

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::path::PathBuf;
use std::process::ExitCode;
use wh_core::census::{self, SweepOptions};
use wh_core::{classify, format, params::WhParams, symmetry, WhGraph};

#[derive(Parser)]
#[command(name = "wh", version, about = "Woolly Hat graph toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Json,
    Graph6,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Build the graph and emit it in the chosen format.
    Build {
        n: i64,
        a: i64,
        b: i64,
        c: i64,
        d: i64,
        #[arg(long, value_enum, default_value = "graph6")]
        format: OutputFormat,
    },
    /// Compute the automorphism group and print the transitivity report.
    Analyze {
        n: i64,
        a: i64,
        b: i64,
        c: i64,
        d: i64,
    },
    /// Decide the vertex-transitivity classification of one tuple.
    Classify {
        n: i64,
        a: i64,
        b: i64,
        c: i64,
        d: i64,
    },
    /// Exhaustive edge-transitivity search for 3 <= n <= n-max.
    SearchEt {
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        workers: Option<usize>,
        /// Required for n-max beyond 40.
        #[arg(long)]
        long_run: bool,
        #[arg(long)]
        checkpoint: Option<PathBuf>,
    },
    /// Vertex-transitivity census over iso-class representatives.
    CensusVt {
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        workers: Option<usize>,
        /// Output directory for census.jsonl, graphs.g6 and checkpoint.json;
        /// without it records go to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        checkpoint: Option<PathBuf>,
    },
    /// LR-structure candidate conditions on a vertex-transitive tuple.
    LrCheck {
        n: i64,
        a: i64,
        b: i64,
        c: i64,
        d: i64,
    },
    /// Isomorphism test between two tuples.
    Iso {
        n1: i64,
        a1: i64,
        b1: i64,
        c1: i64,
        d1: i64,
        n2: i64,
        a2: i64,
        b2: i64,
        c2: i64,
        d2: i64,
    },
}

fn parse_params(n: i64, a: i64, b: i64, c: i64, d: i64) -> Result<WhParams, ExitCode> {
    WhParams::new(n, a, b, c, d).map_err(|e| {
        eprintln!("parameter error: {e}");
        ExitCode::from(1)
    })
}

#[derive(Serialize)]
struct BuildJson {
    #[serde(flatten)]
    params: WhParams,
    order: usize,
    graph6: String,
    edges: Vec<(String, String, &'static str)>,
}

#[derive(Serialize)]
struct IsoJson {
    isomorphic: bool,
    digest_first: String,
    digest_second: String,
    multiplier_witness: Option<usize>,
}

#[derive(Serialize)]
struct LrNotApplicable {
    applicable: bool,
    vertex_transitive: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(code) => code,
    }
}

fn run(cli: Cli) -> Result<ExitCode, ExitCode> {
    match cli.command {
        Command::Build {
            n,
            a,
            b,
            c,
            d,
            format,
        } => {
            let p = parse_params(n, a, b, c, d)?;
            let g = WhGraph::build(p);
            match format {
                OutputFormat::Graph6 => println!("{}", format::graph6(&g)),
                OutputFormat::Dot => print!("{}", format::dot(&g)),
                OutputFormat::Json => {
                    let edges = g
                        .edges()
                        .iter()
                        .map(|&(u, v, kind)| {
                            (
                                g.vertex_id(u).to_string(),
                                g.vertex_id(v).to_string(),
                                kind.label(),
                            )
                        })
                        .collect();
                    let out = BuildJson {
                        params: p,
                        order: g.order(),
                        graph6: format::graph6(&g),
                        edges,
                    };
                    println!("{}", serde_json::to_string(&out).expect("serializable"));
                }
            }
            eprintln!(
                "built {p}: {} vertices, {} edges",
                g.order(),
                g.edges().len()
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Analyze { n, a, b, c, d } => {
            let p = parse_params(n, a, b, c, d)?;
            let report = symmetry::transitivity_report(&WhGraph::build(p));
            println!("{}", serde_json::to_string(&report).expect("serializable"));
            eprintln!(
                "{p}: |Aut| = {}, orbits v/e/a/2a = {}/{}/{}/{}",
                report.aut_order,
                report.vertex_orbits,
                report.edge_orbits,
                report.arc_orbits,
                report.two_arc_orbits
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify { n, a, b, c, d } => {
            let p = parse_params(n, a, b, c, d)?;
            let result = classify::classify(&p);
            println!("{}", serde_json::to_string(&result).expect("serializable"));
            eprintln!("{p}: {result}");
            Ok(ExitCode::SUCCESS)
        }
        Command::SearchEt {
            n_max,
            workers,
            long_run,
            checkpoint,
        } => {
            if n_max > 40 && !long_run {
                eprintln!("n-max beyond 40 is a long run; pass --long-run to confirm");
                return Ok(ExitCode::from(1));
            }
            let opts = SweepOptions {
                checkpoint,
                progress: true,
            };
            let outcome = census::with_workers(workers, move || {
                census::search_edge_transitive_with(n_max, &opts)
            });
            for hit in &outcome.hits {
                println!("{}", serde_json::to_string(hit).expect("serializable"));
            }
            if outcome.hits.is_empty() {
                eprintln!(
                    "no edge-transitive WH-graphs found (n <= {n_max}; {} tuples examined, {} past the cheap filter)",
                    outcome.tuples_examined, outcome.cheap_survivors
                );
                Ok(ExitCode::SUCCESS)
            } else {
                eprintln!(
                    "found {} edge-transitive tuples -- no such graphs exist, so this signals a bug",
                    outcome.hits.len()
                );
                Ok(ExitCode::from(2))
            }
        }
        Command::CensusVt {
            n_max,
            workers,
            out,
            checkpoint,
        } => {
            let opts = SweepOptions {
                checkpoint,
                progress: true,
            };
            let outcome = match out {
                Some(dir) => census::with_workers(workers, {
                    let dir = dir.clone();
                    let opts = opts.clone();
                    move || census::vt_census_to_dir(n_max, &dir, &opts)
                })
                .map_err(|e| {
                    eprintln!("census io error: {e}");
                    ExitCode::from(1)
                })?,
                None => {
                    let outcome = census::with_workers(workers, move || census::vt_census(n_max));
                    for record in &outcome.records {
                        println!("{}", serde_json::to_string(record).expect("serializable"));
                    }
                    outcome
                }
            };
            let vt = outcome.records.iter().filter(|r| r.vt_ground_truth).count();
            eprintln!(
                "census complete: {} representatives, {} vertex-transitive, {} discrepancies",
                outcome.records.len(),
                vt,
                outcome.discrepancies.len()
            );
            if outcome.discrepancies.is_empty() {
                Ok(ExitCode::SUCCESS)
            } else {
                for d in &outcome.discrepancies {
                    eprintln!(
                        "discrepancy: {}",
                        serde_json::to_string(d).expect("serializable")
                    );
                }
                Ok(ExitCode::from(2))
            }
        }
        Command::LrCheck { n, a, b, c, d } => {
            let p = parse_params(n, a, b, c, d)?;
            match symmetry::lr_candidate_check(&WhGraph::build(p)) {
                Ok(report) => {
                    println!("{}", serde_json::to_string(&report).expect("serializable"));
                    eprintln!(
                        "{p}: no alternating 4-cycles = {}, swap automorphism = {}, q witness = {:?}",
                        report.no_alt_4cycles, report.swap_automorphism_exists, report.q_witness
                    );
                    Ok(ExitCode::SUCCESS)
                }
                Err(symmetry::SymmetryError::NotVertexTransitive(_)) => {
                    let out = LrNotApplicable {
                        applicable: false,
                        vertex_transitive: false,
                    };
                    println!("{}", serde_json::to_string(&out).expect("serializable"));
                    eprintln!("{p} is not vertex-transitive; LR conditions do not apply");
                    Ok(ExitCode::SUCCESS)
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Iso {
            n1,
            a1,
            b1,
            c1,
            d1,
            n2,
            a2,
            b2,
            c2,
            d2,
        } => {
            let p1 = parse_params(n1, a1, b1, c1, d1)?;
            let p2 = parse_params(n2, a2, b2, c2, d2)?;
            let f1 = wh_core::canonical_form(&WhGraph::build(p1));
            let f2 = wh_core::canonical_form(&WhGraph::build(p2));
            let isomorphic = f1.digest == f2.digest;
            let witness = multiplier_witness(&p1, &p2);
            let out = IsoJson {
                isomorphic,
                digest_first: f1.digest,
                digest_second: f2.digest,
                multiplier_witness: witness,
            };
            println!("{}", serde_json::to_string(&out).expect("serializable"));
            match (isomorphic, witness) {
                (true, Some(q)) => eprintln!("isomorphic (q = {q} witness)"),
                (true, None) => {
                    eprintln!("isomorphic (no multiplier witness; sporadic relabeling)")
                }
                (false, _) => eprintln!("not isomorphic"),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// Least multiplier q mapping the first tuple onto the second; failing that,
/// onto any tuple describing the identical labeled graph as the second.
fn multiplier_witness(p1: &WhParams, p2: &WhParams) -> Option<usize> {
    if p1.n() != p2.n() {
        return None;
    }
    let exact = (1..p1.n()).find(|&q| p1.multiplier_image(q) == Ok(*p2));
    exact.or_else(|| {
        let symmetries = p2.symmetries();
        (1..p1.n()).find(|&q| {
            p1.multiplier_image(q)
                .map(|image| symmetries.contains(&image))
                .unwrap_or(false)
        })
    })
}
