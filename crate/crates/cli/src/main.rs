use std::path::PathBuf;
use std::process::ExitCode;

use centrality::{corpus, edgelist, read_source, report, tsv, write_output, FormatError};
use centrality_core::axioms::{
    axiom_matrix, check_density_axiom, check_score_monotonicity, check_size_axiom, compute_exact, watershed,
    Axiom, AxiomConfig, AxiomVerdict, Family, GeneratorSpec, SizeConfig,
};
use centrality_core::retrieval::{run_eval, synthetic_corpus, EvalOptions, Ranker, SyntheticConfig};
use centrality_core::spectral::hits;
use centrality_core::{compute, Error, Graph, Measure, SpectralParams};
use clap::{Args, Parser, Subcommand, ValueEnum};

/// Centrality measures on directed graphs and the axiom bench.
#[derive(Parser)]
#[command(name = "centrality", version)]
struct Cli {
    /// Worker threads; 0 lets the runtime decide.
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,

    /// Output file (written atomically); standard output by default.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Per-node scores as TSV.
    Compute {
        #[command(flatten)]
        input: Input,
        #[arg(short, long, value_parser = parse_measure)]
        measure: Measure,
        #[command(flatten)]
        params: Params,
        /// Write exact fractions for the rational-valued measures.
        #[arg(long)]
        exact: bool,
        /// For HITS, the hub scores instead of the authority scores.
        #[arg(long)]
        hub: bool,
    },
    /// Nodes by decreasing score, ties by increasing id.
    Rank {
        #[command(flatten)]
        input: Input,
        #[arg(short, long, value_parser = parse_measure)]
        measure: Measure,
        #[command(flatten)]
        params: Params,
        #[arg(long)]
        top: Option<usize>,
    },
    /// Generates a clique/cycle graph, or a synthetic retrieval corpus
    /// (written to the directory given by --output).
    Gen {
        #[arg(short, long)]
        family: GenFamily,
        #[arg(short, default_value_t = 5)]
        k: usize,
        #[arg(short, default_value_t = 7)]
        p: usize,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
    },
    /// Checks the size, density and score-monotonicity axioms.
    Axioms {
        /// Measures to check (repeatable); all of them by default.
        #[arg(short, long, value_parser = parse_measure)]
        measure: Vec<Measure>,
        /// Axioms to check (repeatable); all of them by default.
        #[arg(short, long)]
        axiom: Vec<AxiomArg>,
        #[arg(long, default_value_t = 10_000)]
        trials: usize,
        #[arg(long, default_value_t = 1_000)]
        spectral_trials: usize,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
        /// Probe the size axiom on full graphs with small bounds instead
        /// of closed forms.
        #[arg(long)]
        full_graph: bool,
        #[arg(long, default_value = "tsv")]
        format: ReportFormat,
        #[command(flatten)]
        params: Params,
    },
    /// Least clique size k for which the clique bridge beats the cycle bridge.
    Watershed {
        #[arg(short, long, value_parser = parse_measure)]
        measure: Measure,
        #[arg(short)]
        p: usize,
        #[arg(long, default_value_t = 200)]
        k_max: usize,
        #[command(flatten)]
        params: Params,
    },
    /// Ranking quality on a corpus directory.
    Eval {
        /// Corpus directory.
        #[arg(short, long, required_unless_present = "synthetic", conflicts_with = "synthetic")]
        corpus: Option<PathBuf>,
        /// Use the built-in synthetic corpus.
        #[arg(long)]
        synthetic: bool,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
        /// A measure id, or `none` for document-id order.
        #[arg(short, long, value_parser = parse_ranker)]
        measure: Ranker,
        #[arg(short, default_value_t = 10)]
        k: usize,
        /// Drop links between documents of the same host first.
        #[arg(long)]
        inter_host: bool,
        #[arg(long)]
        per_query: bool,
        #[command(flatten)]
        params: Params,
    },
}

#[derive(Args)]
struct Input {
    /// Edge-list file, `-` for standard input.
    #[arg(short, long, conflicts_with = "generate")]
    graph: Option<String>,
    /// Generator spec `S:k:p` or `D:k:p` instead of a file.
    #[arg(long)]
    generate: Option<String>,
}

#[derive(Args)]
struct Params {
    /// PageRank damping factor.
    #[arg(long, default_value_t = 0.5)]
    alpha: f64,
    /// Katz attenuation factor; 1/(2λ) by default.
    #[arg(long)]
    beta: Option<f64>,
    #[arg(long, default_value_t = 1e-12)]
    tol: f64,
    #[arg(long, default_value_t = 1_000_000)]
    max_iters: usize,
    /// PageRank preference vector, comma-separated.
    #[arg(long, value_delimiter = ',')]
    preference: Option<Vec<f64>>,
    /// ℓ1-normalize PageRank.
    #[arg(long)]
    normalize: bool,
}

impl Params {
    fn spectral(&self) -> SpectralParams {
        let mut p = SpectralParams {
            alpha: self.alpha,
            beta: self.beta,
            tol: self.tol,
            max_iters: self.max_iters,
            normalize_pagerank: self.normalize,
            ..SpectralParams::default()
        };
        if let Some(v) = &self.preference {
            p = p.with_preference(v.clone());
        }
        p
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum GenFamily {
    #[value(name = "S", alias = "s")]
    S,
    #[value(name = "D", alias = "d")]
    D,
    Corpus,
}

#[derive(Clone, Copy, ValueEnum)]
enum AxiomArg {
    Size,
    Density,
    Monotonicity,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Tsv,
    Matrix,
}

fn parse_measure(s: &str) -> Result<Measure, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_ranker(s: &str) -> Result<Ranker, String> {
    if s == "none" {
        Ok(Ranker::Identity)
    } else {
        parse_measure(s).map(Ranker::Measure)
    }
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Core(#[from] Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        let core = match self {
            CliError::Usage(_) => return 1,
            CliError::Format(FormatError::Core(e)) | CliError::Core(e) => e,
            CliError::Format(_) => return 2,
        };
        match core {
            Error::InvalidParameter(_) | Error::UnknownMeasure(_) => 1,
            Error::NoConvergence { .. } | Error::DegenerateSpectrum { .. } | Error::Divergent { .. } => 3,
            Error::NodeOutOfRange { .. } | Error::TooLarge { .. } | Error::Overflow | Error::NotTabulated(_) => 2,
        }
    }
}

fn parse_spec(s: &str) -> Result<GeneratorSpec, CliError> {
    let bad = || CliError::Usage(format!("generator spec must look like S:5:7, got `{s}`"));
    let parts: Vec<&str> = s.split(':').collect();
    let [f, k, p] = parts[..] else { return Err(bad()) };
    let family = match f {
        "S" | "s" => Family::S,
        "D" | "d" => Family::D,
        _ => return Err(bad()),
    };
    Ok(GeneratorSpec::new(family, k.parse().map_err(|_| bad())?, p.parse().map_err(|_| bad())?)?)
}

fn load(input: &Input) -> Result<Graph, CliError> {
    if let Some(spec) = &input.generate {
        return Ok(parse_spec(spec)?.build());
    }
    let path = input.graph.as_deref().unwrap_or("-");
    let list = edgelist::parse(&read_source(path)?).map_err(|e| e.in_file(path))?;
    if !list.loop_lines.is_empty() {
        eprintln!("warning: {path}: {} loop(s), first on line {}", list.loop_lines.len(), list.loop_lines[0]);
    }
    Ok(list.graph)
}

fn run(cli: Cli) -> Result<(), CliError> {
    if cli.threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global()
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    let out = cli.output.as_deref();
    match cli.command {
        Command::Compute {
            input,
            measure,
            params,
            exact,
            hub,
        } => {
            let g = load(&input)?;
            let params = params.spectral();
            if exact {
                let scores = compute_exact(&g, measure)
                    .ok_or_else(|| CliError::Usage(format!("{measure} has no exact form here")))??;
                return Ok(write_output(out, &tsv::write_exact(measure, &scores))?);
            }
            let text = if measure == Measure::Hits {
                let (authority, hubs) = hits(&g, &params)?;
                if hub {
                    tsv::write_scores(&hubs, &[("side", "hub".into())])
                } else {
                    tsv::write_scores(&authority, &[("side", "authority".into())])
                }
            } else {
                if hub {
                    return Err(CliError::Usage("--hub applies to hits only".into()));
                }
                tsv::write_scores(&compute(&g, measure, &params)?, &[])
            };
            write_output(out, &text)?;
        }
        Command::Rank {
            input,
            measure,
            params,
            top,
        } => {
            let g = load(&input)?;
            let sv = compute(&g, measure, &params.spectral())?;
            let ids: Vec<usize> = (0..g.num_nodes()).collect();
            let order = centrality_core::retrieval::rank_by(&sv.scores, &ids);
            write_output(out, &tsv::write_ranking(&sv, &order, top))?;
        }
        Command::Gen { family, k, p, seed } => match family {
            GenFamily::S | GenFamily::D => {
                let f = if matches!(family, GenFamily::S) { Family::S } else { Family::D };
                let g = GeneratorSpec::new(f, k, p)?.build();
                write_output(out, &edgelist::serialize(&g))?;
            }
            GenFamily::Corpus => {
                let dir = out.ok_or_else(|| CliError::Usage("gen -f corpus needs --output DIR".into()))?;
                let (c, q) = synthetic_corpus(&SyntheticConfig {
                    seed,
                    ..SyntheticConfig::default()
                })?;
                corpus::write_corpus(dir, &c, &q)?;
            }
        },
        Command::Axioms {
            measure,
            axiom,
            trials,
            spectral_trials,
            seed,
            full_graph,
            format,
            params,
        } => {
            let measures = if measure.is_empty() { Measure::ALL.to_vec() } else { measure };
            let mut config = AxiomConfig {
                params: params.spectral(),
                ..AxiomConfig::default()
            };
            config.monotonicity.trials = trials;
            config.monotonicity.spectral_trials = spectral_trials;
            config.monotonicity.seed = seed;
            if full_graph {
                config.size = SizeConfig::full_graph();
            }
            let axioms: Vec<Axiom> = if axiom.is_empty() {
                Axiom::ALL.to_vec()
            } else {
                axiom
                    .iter()
                    .map(|a| match a {
                        AxiomArg::Size => Axiom::Size,
                        AxiomArg::Density => Axiom::Density,
                        AxiomArg::Monotonicity => Axiom::Monotonicity,
                    })
                    .collect()
            };
            let text = if axioms.len() == 3 {
                let rows = axiom_matrix(&measures, &config)?;
                match format {
                    ReportFormat::Matrix => report::matrix(&rows),
                    ReportFormat::Tsv => report::verdict_lines(&rows.iter().flat_map(|r| r.cells()).collect::<Vec<_>>()),
                }
            } else {
                if matches!(format, ReportFormat::Matrix) {
                    return Err(CliError::Usage("--format matrix needs all three axioms".into()));
                }
                let mut verdicts: Vec<AxiomVerdict> = Vec::new();
                for &m in &measures {
                    for &a in &axioms {
                        verdicts.push(match a {
                            Axiom::Size => check_size_axiom(m, &config.size, &config.params)?,
                            Axiom::Density => check_density_axiom(m, &config.density_ks, &config.params)?,
                            Axiom::Monotonicity => check_score_monotonicity(m, &config.monotonicity, &config.params)?,
                        });
                    }
                }
                report::verdict_lines(&verdicts.iter().collect::<Vec<_>>())
            };
            write_output(out, &text)?;
        }
        Command::Watershed {
            measure,
            p,
            k_max,
            params,
        } => {
            let k = watershed(measure, p, k_max, &params.spectral())?;
            let text = match k {
                Some(k) => format!("{k}\n"),
                None => format!("none (k <= {k_max})\n"),
            };
            write_output(out, &text)?;
        }
        Command::Eval {
            corpus: dir,
            synthetic,
            seed,
            measure,
            k,
            inter_host,
            per_query,
            params,
        } => {
            let (c, queries) = if synthetic {
                synthetic_corpus(&SyntheticConfig {
                    seed,
                    ..SyntheticConfig::default()
                })?
            } else {
                corpus::read_corpus(dir.as_deref().expect("required by clap"))?
            };
            let options = EvalOptions {
                k,
                inter_host_only: inter_host,
            };
            let run = run_eval(&c, &queries, measure, &params.spectral(), &options)?;
            write_output(out, &report::eval_report(&run, per_query))?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
