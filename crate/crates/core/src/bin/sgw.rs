//! Batch front end: classification sweeps, registered structure checks,
//! ad-hoc expression inspection, partition combinatorics, and character
//! table export. Exit code 0 = all pass, 1 = any fail, 2 = resource skips.

use clap::{Parser, Subcommand};
use serde_json::json;

use sgw_core::chars::{brauer_characters, decomposition_matrix, export_tables};
use sgw_core::lemmas::{run_lemmas, LemmaCtx};
use sgw_core::meataxe::SimpleCatalog;
use sgw_core::partition::{
    self, eps_phi, normal_conormal, residue_rows, two_regular_partitions_of, Partition,
};
use sgw_core::report::{InspectRecord, Record, Report, Verdict};
use sgw_core::sweep::run_sweep;

#[derive(Parser)]
#[command(name = "sgw", version, about = "symmetric group workbench over GF(2)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum Format {
    Json,
    Md,
}

#[derive(Subcommand)]
enum Command {
    /// Test irreducibility of all tensor products of nontrivial
    /// irreducibles and compare against the predicted family.
    Sweep {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 5000)]
        max_dim: usize,
        #[arg(long, default_value_t = 4)]
        jobs: usize,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run registered structure checks at the given n values.
    Lemmas {
        /// Comma-separated list, e.g. 6,8
        #[arg(long)]
        n: String,
        /// Only these check ids, e.g. L53,L5
        #[arg(long)]
        only: Option<String>,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Evaluate an expression such as 'chop(M"5,1")' or
    /// 'end(res[n-1](D"4,2"))'.
    Inspect {
        /// Degree hint; must match the atoms in the expression.
        #[arg(long)]
        n: Option<usize>,
        expression: String,
        #[arg(long, default_value_t = 20000)]
        max_dim: usize,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Partition combinatorics: residues, normal and conormal nodes.
    Partitions {
        #[arg(long)]
        n: usize,
        /// Report full node data for this partition only.
        #[arg(long)]
        normal_nodes: Option<String>,
    },
    /// Export ordinary/Brauer character tables and the decomposition
    /// matrix as JSON.
    Chartab {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
}

fn emit(report: &Report, format: Format) -> i32 {
    match format {
        Format::Json => println!("{}", report.to_json()),
        Format::Md => println!("{}", report.to_markdown()),
    }
    report.exit_code()
}

fn main() {
    partition::convention_self_test();
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Sweep {
            n,
            max_dim,
            jobs,
            seed,
            format,
        } => match run_sweep(n, max_dim, jobs, seed) {
            Ok(records) => {
                let records = records.into_iter().map(Record::Sweep).collect();
                emit(&Report::new("sweep", vec![n], seed, records), format)
            }
            Err(e) => {
                eprintln!("sweep: {e}");
                1
            }
        },
        Command::Lemmas {
            n,
            only,
            seed,
            format,
        } => {
            let ns: Result<Vec<usize>, _> = n.split(',').map(|s| s.trim().parse()).collect();
            let Ok(ns) = ns else {
                eprintln!("lemmas: cannot parse --n {n:?}");
                std::process::exit(1);
            };
            let only: Option<Vec<String>> = only
                .map(|s| s.split(',').map(|x| x.trim().to_string()).collect());
            match run_lemmas(&ns, only.as_deref(), seed) {
                Ok(checks) => {
                    let records = checks.into_iter().map(Record::Lemma).collect();
                    emit(&Report::new("lemmas", ns, seed, records), format)
                }
                Err(e) => {
                    eprintln!("lemmas: {e}");
                    1
                }
            }
        }
        Command::Inspect {
            n,
            expression,
            max_dim,
            seed,
            format,
        } => match sgw_core::expr::evaluate(&expression, max_dim, seed) {
            Ok(value) => {
                let record = Record::Inspect(InspectRecord {
                    expression: expression.clone(),
                    value,
                    verdict: Verdict::Pass,
                });
                emit(
                    &Report::new("inspect", n.into_iter().collect(), seed, vec![record]),
                    format,
                )
            }
            Err(sgw_core::expr::ExprError::Resource { dim, budget }) => {
                eprintln!("inspect: module dimension {dim} exceeds budget {budget}");
                2
            }
            Err(e) => {
                eprintln!("inspect: {e}");
                1
            }
        },
        Command::Partitions { n, normal_nodes } => {
            let value = match normal_nodes {
                Some(s) => match s.parse::<Partition>() {
                    Ok(lam) => {
                        if lam.n() != n {
                            eprintln!("partitions: {lam} is not a partition of {n}");
                            std::process::exit(1);
                        }
                        partition_detail(&lam)
                    }
                    Err(e) => {
                        eprintln!("partitions: {e}");
                        std::process::exit(1);
                    }
                },
                None => {
                    let rows: Vec<_> = two_regular_partitions_of(n)
                        .iter()
                        .map(|lam| {
                            let ep = eps_phi(lam);
                            json!({
                                "partition": lam.to_string(),
                                "eps": [ep.eps0, ep.eps1],
                                "phi": [ep.phi0, ep.phi1],
                                "js": lam.is_js().unwrap(),
                            })
                        })
                        .collect();
                    json!({ "n": n, "two_regular": rows })
                }
            };
            println!("{}", serde_json::to_string_pretty(&value).unwrap());
            0
        }
        Command::Chartab { n, seed, out } => {
            let mut ctx = LemmaCtx::new(seed);
            let catalog = SimpleCatalog::symmetric(n);
            let _ = &mut ctx;
            match decomposition_matrix(n, &catalog, seed) {
                Ok(dm) => {
                    let phi = brauer_characters(&dm);
                    let export = export_tables(&dm, &phi);
                    let text = serde_json::to_string_pretty(&export).unwrap();
                    match out {
                        Some(path) => std::fs::write(path, text).expect("write output"),
                        None => println!("{text}"),
                    }
                    0
                }
                Err(e) => {
                    eprintln!("chartab: {e}");
                    1
                }
            }
        }
    };
    std::process::exit(code);
}

fn partition_detail(lam: &Partition) -> serde_json::Value {
    let ep = eps_phi(lam);
    let mut normals = Vec::new();
    let mut conormals = Vec::new();
    for i in 0..2u8 {
        let (ns, cs) = normal_conormal(lam, i);
        normals.push(json!(ns
            .iter()
            .map(|x| json!({"row": x.row, "col": x.col}))
            .collect::<Vec<_>>()));
        conormals.push(json!(cs
            .iter()
            .map(|x| json!({"row": x.row, "col": x.col}))
            .collect::<Vec<_>>()));
    }
    json!({
        "partition": lam.to_string(),
        "residues": residue_rows(lam),
        "normal_nodes": { "residue_0": normals[0], "residue_1": normals[1] },
        "conormal_nodes": { "residue_0": conormals[0], "residue_1": conormals[1] },
        "eps": [ep.eps0, ep.eps1],
        "phi": [ep.phi0, ep.phi1],
        "two_regular": lam.is_two_regular(),
        "js": if lam.is_two_regular() { json!(lam.is_js().unwrap()) } else { json!(null) },
    })
}
