use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use smallcover::catalog::{self, CatalogItem};
use smallcover::cohomology::hochster_profile;
use smallcover::enumeration::{enumerate_char_maps, Filter, SearchConfig};
use smallcover::fibering::{fibering_verdict, render_links_table, FiberingVerdict};
use smallcover::io::{complex_to_text, matrix_to_text, parse_vector, read_complex, read_matrix};
use smallcover::obstructions::symplectic_verdict;
use smallcover::verify::{verify_paper, VerifyOptions};
use smallcover::{CharacteristicMap, Error, Gf2Matrix, Result, SimplicialComplex};

#[derive(Parser)]
#[command(name = "smallcover", version, about = "Symplectic obstructions for small covers")]
struct Cli {
    /// Worker threads for enumeration (0 = all cores)
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    /// Machine-readable output
    #[arg(long, global = true)]
    json: bool,
    /// Print only the final verdict or summary line
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the obstruction decision tree on a complex and a matrix
    Analyze {
        /// Facet file or catalog id
        complex: String,
        /// Matrix file or catalog id
        matrix: String,
        /// Number of matrix rows (default: dimension + 1)
        #[arg(long)]
        rows: Option<usize>,
        /// Also print the weight-by-weight Betti profile
        #[arg(long)]
        profile: bool,
    },
    /// List characteristic maps up to row operations
    Enumerate {
        complex: String,
        #[arg(long)]
        rows: Option<usize>,
        /// orientable, c-symplectic, factor-compatible or symplectic-product
        #[arg(long = "filter")]
        filters: Vec<Filter>,
        #[arg(long)]
        count_only: bool,
    },
    /// Check the circle-fibering certificate over a flag 2-sphere
    FiberCheck {
        complex: String,
        matrix: String,
        /// Sign vector as a bit string, one bit per vertex
        #[arg(long)]
        epsilon: String,
    },
    /// Inspect the built-in catalog
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Re-run every published check
    VerifyPaper {
        /// Run only these blocks
        #[arg(long)]
        only: Vec<String>,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    List,
    Show { id: String },
}

fn load_complex(arg: &str) -> Result<SimplicialComplex> {
    if Path::new(arg).exists() {
        read_complex(Path::new(arg))
    } else {
        catalog::complex(arg)
    }
}

fn load_matrix(arg: &str, n: usize) -> Result<Gf2Matrix> {
    if Path::new(arg).exists() {
        read_matrix(Path::new(arg), n)
    } else {
        catalog::matrix(arg)
    }
}

fn default_rows(k: &SimplicialComplex) -> usize {
    (k.dim() + 1).max(1) as usize
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Analyze {
            complex,
            matrix,
            rows,
            profile,
        } => {
            let k = load_complex(&complex)?;
            let lambda = load_matrix(&matrix, rows.unwrap_or_else(|| default_rows(&k)))?;
            let map = CharacteristicMap::new(k, lambda)?;
            let report = symplectic_verdict(map.complex(), map.matrix())?;
            let prof = if profile {
                Some(hochster_profile(map.complex(), map.matrix())?)
            } else {
                None
            };
            if cli.json {
                println!("{}", json!({ "report": report, "profile": prof }));
            } else if cli.quiet {
                println!("{}", report.verdict_line());
            } else {
                if let Some(p) = &prof {
                    for line in p.render_lines() {
                        println!("{line}");
                    }
                    println!("betti={:?}", p.betti);
                }
                print!("{}", report.render());
            }
            Ok(0)
        }
        Command::Enumerate {
            complex,
            rows,
            filters,
            count_only,
        } => {
            let k = load_complex(&complex)?;
            let config = SearchConfig {
                n: rows.unwrap_or_else(|| default_rows(&k)),
                filters,
                jobs: cli.jobs,
                count_only: count_only || cli.quiet,
            };
            let census = enumerate_char_maps(&k, &config)?;
            if cli.json {
                println!("{}", serde_json::to_string(&census)?);
            } else {
                print!("{}", census.render());
            }
            Ok(0)
        }
        Command::FiberCheck {
            complex,
            matrix,
            epsilon,
        } => {
            let l = load_complex(&complex)?;
            let mu = load_matrix(&matrix, default_rows(&l))?;
            let eps = if Path::new(&epsilon).exists() {
                parse_vector(&std::fs::read_to_string(&epsilon)?)?
            } else {
                parse_vector(&epsilon).or_else(|_| catalog::vector(&epsilon))?
            };
            let cert = fibering_verdict(&l, &mu, &eps);
            let line = match &cert.verdict {
                FiberingVerdict::Fibers { divisor } => format!("VERDICT: Fibers — image divisor {divisor}"),
                FiberingVerdict::Inconclusive(msg) => format!("VERDICT: Inconclusive — {msg}"),
            };
            if cli.json {
                println!("{}", serde_json::to_string(&cert)?);
            } else {
                if !cli.quiet {
                    print!("{}", render_links_table(&cert.links));
                }
                println!("{line}");
            }
            Ok(if cert.fibers() { 0 } else { 1 })
        }
        Command::Catalog { action } => {
            match action {
                CatalogAction::List => {
                    let entries = catalog::list();
                    if cli.json {
                        let ids: Vec<_> = entries
                            .iter()
                            .map(|e| json!({ "id": e.id, "description": e.description }))
                            .collect();
                        println!("{}", serde_json::to_string(&ids)?);
                    } else {
                        for e in entries {
                            println!("{:<24} {}", e.id, e.description);
                        }
                    }
                }
                CatalogAction::Show { id } => {
                    let e = catalog::get(&id)?;
                    if cli.json {
                        println!("{}", serde_json::to_string(&e)?);
                    } else {
                        println!("# {}", e.description);
                        match &e.item {
                            CatalogItem::Complex(k) => print!("{}", complex_to_text(k)),
                            CatalogItem::Matrix { matrix, over } => {
                                println!("# over {over}");
                                print!("{}", matrix_to_text(matrix));
                            }
                            CatalogItem::Vector(v) => println!("{v}"),
                        }
                    }
                }
            }
            Ok(0)
        }
        Command::VerifyPaper { only } => {
            let report = verify_paper(&VerifyOptions {
                only,
                jobs: cli.jobs,
                fibering_base: None,
            })?;
            if cli.json {
                println!("{}", serde_json::to_string(&report)?);
            } else if cli.quiet {
                println!("{} passed, {} failed", report.passed, report.failed);
            } else {
                print!("{}", report.render());
            }
            Ok(report.exit_code() as u8)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::Parse { .. } | Error::Json(_) | Error::Io(_) | Error::UnknownCatalogId(_) => 3,
                Error::InvalidInput(_) => 2,
                _ => 1,
            };
            ExitCode::from(code)
        }
    }
}
