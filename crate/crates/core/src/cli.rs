//! The `msgeo` command line: one JSON document per invocation.
//!
//! Exit status is 0 on success, 2 on usage errors and 1 on domain errors;
//! errors are written to stderr as `{"error": code, "detail": message}`.
//! `MSGEO_TOLERANCE` overrides the default tolerance.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::combinatorics::{
    borsuk_by_gh, borsuk_partitionable, chromatic_number, clique_cover_number, count_edge_covers,
    realize_configuration, DEFAULT_AB,
};
use crate::error::Error;
use crate::gh::{gh_exact, gh_to_simplex, interpolate};
use crate::hausdorff::{count_s_position_sets, cs_set, SubsetPair};
use crate::io::{self, num, nums, pairs_json};
use crate::metric::DEFAULT_TOLERANCE;
use crate::selftest::{self, Scale};
use crate::trees::{
    mst, mst_spectrum, mst_spectrum_by_gh, mst_spectrum_by_partitions, smt_by_networks,
    smt_by_supersets,
};

pub const TOLERANCE_ENV: &str = "MSGEO_TOLERANCE";

#[derive(Debug, Parser)]
#[command(name = "msgeo", version, about = "Exact Hausdorff and Gromov-Hausdorff distances on finite metric spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SpectrumMethod {
    Edges,
    Partitions,
    Gh,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SteinerMethod {
    Supersets,
    Networks,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ScaleArg {
    Quick,
    Full,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a space or point-cloud file against the metric axioms.
    Validate { file: PathBuf },
    /// Hausdorff distance between two subsets.
    Hausdorff {
        #[arg(long)]
        space: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        a: Vec<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        b: Vec<usize>,
    },
    /// Count the sets in s-position between two subsets.
    CountSposition {
        #[arg(long)]
        space: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        a: Vec<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        b: Vec<usize>,
        #[arg(long)]
        s: f64,
        /// Candidate points; defaults to `C_s(A, B)`.
        #[arg(long, value_delimiter = ',')]
        candidates: Option<Vec<usize>>,
    },
    /// Exact Gromov-Hausdorff distance.
    Gh {
        #[arg(long)]
        x: PathBuf,
        #[arg(long)]
        y: PathBuf,
        #[arg(long)]
        witness: bool,
    },
    /// Distance from a space to the simplex `λΔ_m`.
    GhSimplex {
        #[arg(long)]
        x: PathBuf,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        lambda: f64,
    },
    /// The space `R_t` along a correspondence (an optimal one by default).
    Interpolate {
        #[arg(long)]
        x: PathBuf,
        #[arg(long)]
        y: PathBuf,
        #[arg(long)]
        t: f64,
        #[arg(long)]
        corr: Option<PathBuf>,
    },
    /// Minimum spanning tree.
    Mst {
        #[arg(long)]
        space: PathBuf,
    },
    /// Descending MST edge lengths.
    MstSpectrum {
        #[arg(long)]
        space: PathBuf,
        #[arg(long, value_enum, default_value = "edges")]
        method: SpectrumMethod,
        /// Simplex size for `--method gh`; defaults to `2 diam`.
        #[arg(long)]
        lambda: Option<f64>,
    },
    /// Steiner minimal tree on a boundary set.
    Steiner {
        #[arg(long)]
        space: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        m: Vec<usize>,
        #[arg(long, value_enum, default_value = "supersets")]
        method: SteinerMethod,
    },
    /// Partition into `m` parts of smaller diameter, by search and by GH.
    Borsuk {
        #[arg(long)]
        space: PathBuf,
        #[arg(long)]
        m: usize,
        /// Defaults to `diam / 2`.
        #[arg(long)]
        lambda: Option<f64>,
    },
    /// Clique cover number.
    CliqueCover {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value_t = DEFAULT_AB.0)]
        a: f64,
        #[arg(long, default_value_t = DEFAULT_AB.1)]
        b: f64,
    },
    /// Chromatic number.
    Chromatic {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value_t = DEFAULT_AB.0)]
        a: f64,
        #[arg(long, default_value_t = DEFAULT_AB.1)]
        b: f64,
    },
    /// Number of edge covers of a bipartite graph.
    EdgeCovers {
        #[arg(long)]
        bipartite: PathBuf,
    },
    /// Euclidean configuration realizing a bipartite graph.
    RealizeConfig {
        #[arg(long)]
        bipartite: PathBuf,
    },
    /// Oracle-equivalence suites.
    Selftest {
        #[arg(long, value_enum, default_value = "quick")]
        scale: ScaleArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Worker threads; defaults to all cores.
        #[arg(long)]
        jobs: Option<usize>,
    },
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

fn tolerance() -> std::result::Result<f64, Failure> {
    match std::env::var(TOLERANCE_ENV) {
        Err(_) => Ok(DEFAULT_TOLERANCE),
        Ok(s) => match s.trim().parse::<f64>() {
            Ok(t) if t >= 0.0 && t.is_finite() => Ok(t),
            _ => Err(Failure::Usage(format!("{TOLERANCE_ENV}={s:?} is not a tolerance"))),
        },
    }
}

fn execute(cmd: Command, tol: f64) -> std::result::Result<(Value, bool), Failure> {
    let load = |p: &PathBuf| io::load_space(p, tol);
    let value = match cmd {
        Command::Validate { file } => {
            let x = load(&file)?;
            json!({"valid": true, "points": x.len(), "diameter": num(x.diameter())})
        }
        Command::Hausdorff { space, a, b } => {
            let x = load(&space)?;
            json!({"value": num(SubsetPair::new(&x, &a, &b)?.hausdorff())})
        }
        Command::CountSposition { space, a, b, s, candidates } => {
            let x = load(&space)?;
            let pair = SubsetPair::new(&x, &a, &b)?;
            let cs = cs_set(&pair, s, tol)?;
            let cands = candidates.unwrap_or_else(|| cs.clone());
            let count = count_s_position_sets(&pair, &cands, s, tol)?;
            json!({"count": count, "r": num(pair.hausdorff()), "cs": cs})
        }
        Command::Gh { x, y, witness } => {
            let r = gh_exact(&load(&x)?, &load(&y)?)?;
            if witness {
                json!({"distance": num(r.distance), "witness": pairs_json(r.witness.pairs())})
            } else {
                json!({"distance": num(r.distance)})
            }
        }
        Command::GhSimplex { x, m, lambda } => {
            json!({"distance": num(gh_to_simplex(&load(&x)?, m, lambda)?)})
        }
        Command::Interpolate { x, y, t, corr } => {
            let (x, y) = (load(&x)?, load(&y)?);
            let corr = match corr {
                Some(p) => io::load_correspondence(p, x.len(), y.len())?,
                None => gh_exact(&x, &y)?.witness,
            };
            io::space_to_json(&interpolate(&x, &y, &corr, t, tol)?)
        }
        Command::Mst { space } => {
            let t = mst(&load(&space)?);
            let edges: Vec<Value> = t.edges.iter().map(|&(i, j, d)| json!([i, j, num(d)])).collect();
            json!({"length": num(t.length()), "edges": edges})
        }
        Command::MstSpectrum { space, method, lambda } => {
            let x = load(&space)?;
            match method {
                SpectrumMethod::Edges => json!({"spectrum": nums(&mst_spectrum(&x)?)}),
                SpectrumMethod::Partitions => {
                    json!({"spectrum": nums(&mst_spectrum_by_partitions(&x)?)})
                }
                SpectrumMethod::Gh => {
                    let lambda = lambda.unwrap_or(2.0 * x.diameter());
                    let g = mst_spectrum_by_gh(&x, lambda)?;
                    json!({
                        "spectrum": nums(&g.spectrum),
                        "mst_length": num(g.mst_length),
                        "lambda": num(lambda),
                    })
                }
            }
        }
        Command::Steiner { space, m, method } => {
            let x = load(&space)?;
            match method {
                SteinerMethod::Supersets => {
                    let r = smt_by_supersets(&x, &m, tol)?;
                    json!({"length": num(r.length), "vertices": r.vertices})
                }
                SteinerMethod::Networks => {
                    let r = smt_by_networks(&x, &m, tol)?;
                    json!({
                        "length": num(r.length),
                        "topology": r.topology.map(|t| pairs_json(&t.edges)),
                        "placement": r.placement,
                    })
                }
            }
        }
        Command::Borsuk { space, m, lambda } => {
            let x = load(&space)?;
            let lambda = lambda.unwrap_or(x.diameter() / 2.0);
            let brute = borsuk_partitionable(&x, m, tol)?;
            let by_gh = borsuk_by_gh(&x, m, lambda, tol)?;
            if brute != by_gh {
                return Err(Error::OracleMismatch {
                    what: "Borsuk decision",
                    left: by_gh.to_string(),
                    right: brute.to_string(),
                }
                .into());
            }
            json!({"partitionable": brute, "lambda": num(lambda)})
        }
        Command::CliqueCover { graph, a, b } => {
            json!({"value": clique_cover_number(&io::load_graph(graph)?, a, b, tol)?})
        }
        Command::Chromatic { graph, a, b } => {
            json!({"value": chromatic_number(&io::load_graph(graph)?, a, b, tol)?})
        }
        Command::EdgeCovers { bipartite } => {
            json!({"count": count_edge_covers(&io::load_bipartite(bipartite)?)?})
        }
        Command::RealizeConfig { bipartite } => {
            let r = realize_configuration(&io::load_bipartite(bipartite)?)?;
            let pts: Vec<Vec<f64>> = r.a.into_iter().chain(r.b).collect();
            io::points_to_json("euclidean", &pts)
        }
        Command::Selftest { scale, seed, jobs } => {
            let scale = match scale {
                ScaleArg::Quick => Scale::Quick,
                ScaleArg::Full => Scale::Full,
            };
            let mut builder = rayon::ThreadPoolBuilder::new();
            if let Some(j) = jobs {
                if j == 0 {
                    return Err(Failure::Usage("--jobs must be at least 1".into()));
                }
                builder = builder.num_threads(j);
            }
            let pool = builder
                .build()
                .map_err(|e| Error::Io(format!("thread pool: {e}")))?;
            let report = pool.install(|| selftest::run(scale, seed));
            let pass = report.pass;
            let mut v = serde_json::to_value(&report).map_err(|e| Error::Io(e.to_string()))?;
            for s in v["suites"].as_array_mut().into_iter().flatten() {
                let d = s["max_deviation"].as_f64().unwrap_or(0.0);
                s["max_deviation"] = num(d);
            }
            return Ok((v, pass));
        }
    };
    Ok((value, true))
}

fn error_doc(code: &str, detail: &str) -> String {
    json!({"error": code, "detail": detail}).to_string()
}

/// Runs the command line `argv` (program name first), writing the result
/// document to `out` and errors to `err`. Returns the exit status.
pub fn run_with(argv: &[String], out: &mut impl Write, err: &mut impl Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let _ = writeln!(err, "{}", error_doc("UsageError", e.to_string().trim()));
            return 2;
        }
    };
    let result = tolerance().and_then(|tol| execute(cli.command, tol));
    match result {
        Ok((doc, pass)) => {
            let _ = writeln!(out, "{doc}");
            if pass {
                0
            } else {
                1
            }
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "{}", error_doc("UsageError", &msg));
            2
        }
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "{}", error_doc(e.code(), &e.to_string()));
            1
        }
    }
}

/// [`run_with`] on the process's stdout and stderr.
pub fn run(argv: &[String]) -> i32 {
    run_with(argv, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}
