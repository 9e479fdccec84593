use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use ordopt::io::{self, Format};
use ordopt::nondominance::{cone_filter, pareto_filter, PointSet, SpaceTag};
use ordopt::oracle::{self, RandomGraphSpec, DEFAULT_ITEM_LIMIT, DEFAULT_NODE_LIMIT, DEFAULT_SEED};
use ordopt::ordinal::{head_transform, tail_transform, ConeMatrix, CountingVector, OrdinalVector, Sense};
use ordopt::rational::format_rational;
use ordopt::scalarization::{
    lambda_to_mu, mu_to_lambda, weight_space_decomposition, weighted_sum_solve, weighted_sum_solve_mu, LambdaWeights,
    MuWeights,
};
use ordopt::solvers::{self, Instance, ProblemKind, SolveOptions};
use serde_json::json;

#[derive(Parser)]
#[command(name = "ordopt", version, about = "Ordinal combinatorial optimization by Pareto transformation")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// Report every efficient solution instead of one per non-dominated value.
    #[arg(long, global = true)]
    all_efficient: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Plotdata,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
            FormatArg::Plotdata => Format::PlotData,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ProblemArg {
    Sp,
    Knapsack,
    Mixed,
    Wtop,
}

impl From<ProblemArg> for ProblemKind {
    fn from(p: ProblemArg) -> Self {
        match p {
            ProblemArg::Sp => ProblemKind::ShortestPath,
            ProblemArg::Knapsack => ProblemKind::Knapsack,
            ProblemArg::Mixed => ProblemKind::Mixed,
            ProblemArg::Wtop => ProblemKind::WeightedCounting,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ConeArg {
    Pareto,
    Tail,
    TailGenerators,
    Head,
    HeadGenerators,
}

#[derive(Clone, Copy, ValueEnum)]
enum SenseArg {
    Min,
    Max,
}

#[derive(Subcommand)]
enum Command {
    /// Counting, tail, head and sorted-category images of counting vectors,
    /// or of every feasible solution of an instance file.
    Transform {
        file: Option<PathBuf>,
        /// Treat the input as counting vectors even if it looks like an instance.
        #[arg(long)]
        vectors: bool,
    },
    /// Non-dominated points of a point file.
    Filter {
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = ConeArg::Pareto)]
        cone: ConeArg,
        /// Orientation for the Pareto cone.
        #[arg(long, value_enum, default_value_t = SenseArg::Min)]
        sense: SenseArg,
    },
    /// Solve an instance file exactly.
    Solve {
        #[arg(value_enum)]
        problem: ProblemArg,
        file: Option<PathBuf>,
    },
    /// Weighted-sum optimum of a point file.
    Scalarize {
        file: Option<PathBuf>,
        /// Weights on the coordinates as given, e.g. `1/3,1/3,1/3`; normalised to sum one.
        #[arg(long, required_unless_present = "mu", conflicts_with = "mu")]
        lambda: Option<String>,
        /// Strictly increasing weights on counting vectors, summing to one.
        #[arg(long)]
        mu: Option<String>,
    },
    /// Weight space decomposition of a point file.
    Wsd { file: Option<PathBuf> },
    /// Compare solvers with exhaustive enumeration.
    OracleCheck {
        file: Option<PathBuf>,
        #[arg(long, value_enum)]
        problem: Option<ProblemArg>,
        /// Check this many random instances per problem instead of a file.
        #[arg(long, conflicts_with = "file")]
        random: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

enum Failure {
    Usage(String),
    Mismatch(String),
}

impl From<ordopt::Error> for Failure {
    fn from(e: ordopt::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Mismatch(out)) => {
            print!("{out}");
            ExitCode::from(2)
        }
    }
}

fn read_input(file: Option<&PathBuf>) -> Result<String, Failure> {
    match file {
        Some(p) if p.as_os_str() != "-" => {
            std::fs::read_to_string(p).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))
        }
        _ => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::Usage(format!("stdin: {e}")))?;
            Ok(s)
        }
    }
}

fn looks_like_instance(text: &str) -> bool {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .is_some_and(|l| l.starts_with("GRAPH") || l.starts_with("KNAPSACK"))
}

fn run(cli: Cli) -> Result<String, Failure> {
    let format = Format::from(cli.format);
    let options = SolveOptions {
        all_efficient: cli.all_efficient,
    };
    match cli.command {
        Command::Transform { file, vectors } => {
            let text = read_input(file.as_ref())?;
            if !vectors && looks_like_instance(&text) {
                transform_instance(&io::parse_instance(&text)?, format)
            } else {
                transform_vectors(&io::parse_count_vectors(&text)?, format)
            }
        }
        Command::Filter { file, cone, sense } => {
            let points = io::parse_points(&read_input(file.as_ref())?)?;
            let k = points[0].len();
            let set = PointSet::from_vectors(points, SpaceTag::Tail)?;
            let kept = match cone {
                ConeArg::Pareto => pareto_filter(
                    &set,
                    match sense {
                        SenseArg::Min => Sense::Min,
                        SenseArg::Max => Sense::Max,
                    },
                )?,
                ConeArg::Tail => cone_filter(&set, &ConeMatrix::tail_halfspaces(k))?,
                ConeArg::TailGenerators => cone_filter(&set, &ConeMatrix::tail_generators(k))?,
                ConeArg::Head => cone_filter(&set, &ConeMatrix::head_halfspaces(k))?,
                ConeArg::HeadGenerators => cone_filter(&set, &ConeMatrix::head_generators(k))?,
            };
            Ok(io::emit_points(&kept, format))
        }
        Command::Solve { problem, file } => {
            let instance = io::parse_instance(&read_input(file.as_ref())?)?;
            let res = solvers::solve(&instance, problem.into(), options)?;
            Ok(io::emit_result(&res, format))
        }
        Command::Scalarize { file, lambda, mu } => {
            let set = PointSet::from_vectors(io::parse_points(&read_input(file.as_ref())?)?, SpaceTag::Tail)?;
            let (lambda, mu, opt) = match (lambda, mu) {
                (Some(l), _) => {
                    let l = LambdaWeights::normalized(io::parse_vector(&l)?)?;
                    let opt = weighted_sum_solve(&set, &l)?;
                    let m = lambda_to_mu(&l);
                    (l, m, opt)
                }
                (None, Some(m)) => {
                    let m = MuWeights::new(io::parse_vector(&m)?)?;
                    let opt = weighted_sum_solve_mu(&set, &m)?;
                    (mu_to_lambda(&m), m, opt)
                }
                (None, None) => return Err(Failure::Usage("one of --lambda or --mu is required".into())),
            };
            let ids: Vec<usize> = opt.argmin.iter().map(|p| p.id).collect();
            let tuple = |v: &[ordopt::Rational]| format!("({})", v.iter().map(format_rational).collect::<Vec<_>>().join(","));
            Ok(match format {
                Format::Json => {
                    let strs = |v: &[ordopt::Rational]| v.iter().map(format_rational).collect::<Vec<_>>();
                    let body = json!({
                        "lambda": strs(lambda.values()),
                        "mu": strs(mu.values()),
                        "value": format_rational(&opt.value),
                        "argmin": ids,
                    });
                    format!("{}\n", serde_json::to_string_pretty(&body).expect("serialisable"))
                }
                _ => {
                    let ids: Vec<String> = ids.iter().map(ToString::to_string).collect();
                    format!(
                        "lambda={} mu={} value={} argmin={}\n",
                        tuple(lambda.values()),
                        tuple(mu.values()),
                        format_rational(&opt.value),
                        ids.join(",")
                    )
                }
            })
        }
        Command::Wsd { file } => {
            let set = PointSet::from_vectors(io::parse_points(&read_input(file.as_ref())?)?, SpaceTag::Tail)?;
            Ok(io::emit_decomposition(&weight_space_decomposition(&set)?, format))
        }
        Command::OracleCheck {
            file,
            problem,
            random,
            seed,
        } => oracle_check(file.as_ref(), problem.map(Into::into), random, seed),
    }
}

fn transform_vectors(vectors: &[Vec<u64>], format: Format) -> Result<String, Failure> {
    let mut rows = Vec::with_capacity(vectors.len());
    for v in vectors {
        let c = CountingVector::new(v.clone())?;
        rows.push((tail_transform(&c), head_transform(&c), OrdinalVector::from_counts(&c), c));
    }
    let k = vectors[0].len();
    let space = ordopt::ordinal::CategorySpace::new(k)?;
    Ok(match format {
        Format::Text => rows
            .iter()
            .map(|(t, h, o, c)| format!("c={c} ctilde={t} chead={h} o={}\n", o.display(&space)))
            .collect(),
        Format::Json => {
            let body: Vec<_> = rows
                .iter()
                .map(|(t, h, o, c)| json!({"c": c, "ctilde": t, "chead": h, "o": o.display(&space).to_string()}))
                .collect();
            format!("{}\n", serde_json::to_string_pretty(&body).expect("serialisable"))
        }
        Format::PlotData => rows
            .iter()
            .map(|(t, ..)| {
                let cells: Vec<String> = t.as_slice().iter().map(ToString::to_string).collect();
                format!("{}\n", cells.join(" "))
            })
            .collect(),
    })
}

fn transform_instance(instance: &Instance, format: Format) -> Result<String, Failure> {
    let (feasible, spaces, prefix, key) = match instance {
        Instance::Graph(g) => (oracle::enumerate_paths(g, DEFAULT_NODE_LIMIT)?, g.spaces().to_vec(), "e", "path"),
        Instance::Knapsack(k) => (
            oracle::enumerate_subsets(k, DEFAULT_ITEM_LIMIT)?,
            vec![k.space().clone()],
            "i",
            "items",
        ),
    };
    let r = spaces.len();
    Ok(match format {
        Format::Json => {
            let body: Vec<_> = feasible
                .solutions
                .iter()
                .map(|s| {
                    let objectives: Vec<_> = s
                        .counts
                        .iter()
                        .zip(&spaces)
                        .map(|(c, space)| {
                            json!({
                                "c": c,
                                "ctilde": tail_transform(c),
                                "o": OrdinalVector::from_counts(c).display(space).to_string(),
                            })
                        })
                        .collect();
                    let w: Vec<String> = s.weights.iter().map(format_rational).collect();
                    json!({"ids": s.ids, "w": w, "objectives": objectives})
                })
                .collect();
            format!("{}\n", serde_json::to_string_pretty(&body).expect("serialisable"))
        }
        Format::PlotData => feasible
            .solutions
            .iter()
            .map(|s| {
                let cells: Vec<String> = s
                    .counts
                    .iter()
                    .flat_map(|c| tail_transform(c).into_vec())
                    .map(|x| x.to_string())
                    .collect();
                format!("{}\n", cells.join(" "))
            })
            .collect(),
        Format::Text => feasible
            .solutions
            .iter()
            .map(|s| {
                let mut fields = Vec::new();
                if !s.weights.is_empty() {
                    let w: Vec<String> = s.weights.iter().map(format_rational).collect();
                    fields.push(format!("w=({})", w.join(",")));
                }
                for (l, (c, space)) in s.counts.iter().zip(&spaces).enumerate() {
                    let suffix = if r == 1 { String::new() } else { (l + 1).to_string() };
                    fields.push(io::triple_fields(&suffix, c, space));
                }
                let ids: Vec<String> = s.ids.iter().map(|id| format!("{prefix}{id}")).collect();
                fields.push(format!("{key}={}", ids.join(",")));
                format!("{}\n", fields.join(" "))
            })
            .collect(),
    })
}

fn problem_name(p: ProblemKind) -> &'static str {
    match p {
        ProblemKind::ShortestPath => "sp",
        ProblemKind::Knapsack => "knapsack",
        ProblemKind::Mixed => "mixed",
        ProblemKind::WeightedCounting => "wtop",
    }
}

fn oracle_check(
    file: Option<&PathBuf>,
    problem: Option<ProblemKind>,
    random: Option<usize>,
    seed: u64,
) -> Result<String, Failure> {
    let mut out = format!("seed={seed}\n");
    let mut ok = true;
    if let Some(n) = random {
        let mut rng = oracle::seeded_rng(seed);
        let problems = match problem {
            Some(p) => vec![p],
            None => vec![
                ProblemKind::ShortestPath,
                ProblemKind::Knapsack,
                ProblemKind::Mixed,
                ProblemKind::WeightedCounting,
            ],
        };
        for p in problems {
            let mut agree = 0;
            for i in 0..n {
                let instance = match p {
                    ProblemKind::Knapsack => Instance::Knapsack(oracle::random_knapsack(10, 30, 4, &mut rng)),
                    ProblemKind::ShortestPath => Instance::Graph(oracle::random_graph(RandomGraphSpec::default(), &mut rng)),
                    ProblemKind::Mixed => Instance::Graph(oracle::random_graph(
                        RandomGraphSpec {
                            real_objectives: 1,
                            ordinal_objectives: 2,
                            ..RandomGraphSpec::default()
                        },
                        &mut rng,
                    )),
                    ProblemKind::WeightedCounting => Instance::Graph(oracle::random_graph(
                        RandomGraphSpec {
                            real_objectives: 1,
                            ..RandomGraphSpec::default()
                        },
                        &mut rng,
                    )),
                };
                let cmp = oracle::compare(&instance, p, seed)?;
                if cmp.agree() {
                    agree += 1;
                } else {
                    ok = false;
                    out.push_str(&format!("MISMATCH {} instance={}\n{}", problem_name(p), i + 1, io::write_instance(&instance)));
                }
            }
            out.push_str(&format!("{} agree={agree}/{n}\n", problem_name(p)));
        }
    } else {
        let instance = io::parse_instance(&read_input(file)?)?;
        let p = problem.unwrap_or(match &instance {
            Instance::Knapsack(_) => ProblemKind::Knapsack,
            Instance::Graph(g) if g.ordinal_objectives() == 0 => ProblemKind::Mixed,
            Instance::Graph(_) => ProblemKind::ShortestPath,
        });
        let cmp = oracle::compare(&instance, p, seed)?;
        for (label, rows) in [("solver", &cmp.solver), ("oracle", &cmp.oracle)] {
            for (value, sols) in rows.iter() {
                let v: Vec<String> = value.iter().map(format_rational).collect();
                out.push_str(&format!("{label} value=({}) solutions={}\n", v.join(","), sols.len()));
            }
        }
        if let Some(same) = cmp.concepts_agree {
            out.push_str(&format!("tail-vs-sampled={}\n", if same { "agree" } else { "differ" }));
        }
        ok = cmp.agree();
        out.push_str(&format!("{} {}\n", problem_name(p), if ok { "agree" } else { "MISMATCH" }));
    }
    if ok {
        Ok(out)
    } else {
        Err(Failure::Mismatch(out))
    }
}
