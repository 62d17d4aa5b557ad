use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use gaincover::families::{
    butson_gain, fourier_butson, huang_signing, k3n_nonexample, s3_cover_k5,
};
use gaincover::graph::{
    complete_bipartite, complete_graph, complete_multipartite, cycle, folded_cube, hypercube,
    johnson, kneser, path, petersen,
};
use gaincover::report::{analyze, certify, CertifyChecks, InputDescriptor};
use gaincover::search::{
    search_two_ev, verify_corollary_6_5, verify_theorem_5_1, verify_theorem_6_2, verify_theorem_6_4,
    verify_theorem_6_4_search, CheckOutcome, SearchMode, SearchSpec, VerifySummary, THM_SRG_DRG,
};
use gaincover::{Error, GainGraph, Graph, GroupSpec};

#[derive(Parser)]
#[command(name = "gaincover", version, about = "Gain graphs, covers and two-eigenvalue certificates")]
struct Cli {
    /// Eigenvalue clustering tolerance.
    #[arg(long, global = true, default_value_t = 1e-7)]
    tol: f64,
    /// Seed for random searches.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Maximum number of gain assignments examined.
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Also write the JSON output to this file.
    #[arg(long, global = true)]
    json: Option<PathBuf>,
    /// Include wall-clock timing in reports.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named family, write its gain file and report.
    Demo(DemoArgs),
    /// Write the cover of a gain file as an edge list.
    Lift {
        gain_file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Spectral report for a gain file.
    Classify { gain_file: PathBuf },
    /// Regularity checks on an edge list or on the lift of a gain file.
    Certify(CertifyArgs),
    /// Search normalized gains on a base graph for two-eigenvalue covers.
    Search(SearchArgs),
    /// Run a theorem-verification harness.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Huang,
    CohenTits,
    Butson,
    S3k5,
    K3nNonexample,
}

#[derive(Args)]
struct DemoArgs {
    family: Family,
    #[arg(long, default_value_t = 3)]
    n: usize,
    #[arg(long, default_value_t = 3)]
    q: usize,
    /// Where to write the gain file (defaults to `<family>.gain`).
    #[arg(long)]
    gain_out: Option<PathBuf>,
}

#[derive(Args)]
struct CertifyArgs {
    path: PathBuf,
    #[arg(long)]
    walk: bool,
    #[arg(long)]
    drg: bool,
    #[arg(long)]
    srg: bool,
    #[arg(long)]
    antipodal: bool,
    #[arg(long)]
    drackn: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Exhaustive,
    Random,
}

#[derive(Args)]
struct SearchArgs {
    /// Edge-list path or generator such as `complete:4`, `petersen`,
    /// `bipartite:3,3`, `multipartite:2,2,2`, `kneser:7,2`.
    #[arg(long)]
    base: String,
    /// Abelian group orders, e.g. `3` or `2,2`.
    #[arg(long)]
    group: String,
    #[arg(long, value_enum, default_value_t = Mode::Exhaustive)]
    mode: Mode,
    /// Try the column-count obstruction before classifying.
    #[arg(long)]
    prefilter: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Theorem {
    #[value(name = "5.1")]
    WalkRegular,
    #[value(name = "6.2")]
    Drackn,
    #[value(name = "6.4")]
    SrgCover,
    #[value(name = "6.5")]
    Bipartite,
}

#[derive(Args)]
struct VerifyArgs {
    theorem: Theorem,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    /// Base for 6.4 (generator or edge-list path).
    #[arg(long)]
    base: Option<String>,
    /// Single gain file for 6.4.
    #[arg(long)]
    gain: Option<PathBuf>,
    /// Where a falsifying gain is written.
    #[arg(long, default_value = "falsification.gain")]
    reproducer: PathBuf,
}

const DEFAULT_BUDGET: u64 = 1 << 20;
const DEFAULT_SAMPLES: u64 = 200;

fn usage(msg: impl Into<String>) -> Error {
    Error::Parameter(msg.into())
}

fn parse_list(s: &str) -> Result<Vec<usize>, Error> {
    s.split(',')
        .map(|x| x.trim().parse().map_err(|_| usage(format!("bad number {x:?}"))))
        .collect()
}

fn parse_base(spec: &str) -> Result<Graph, Error> {
    if Path::new(spec).is_file() {
        return Graph::parse_edge_list(&fs::read_to_string(spec)?);
    }
    let (name, args) = spec.split_once(':').unwrap_or((spec, ""));
    let nums = if args.is_empty() { Vec::new() } else { parse_list(args)? };
    let want = |k: usize| {
        if nums.len() == k {
            Ok(())
        } else {
            Err(usage(format!("{name} takes {k} parameter(s)")))
        }
    };
    match name {
        "petersen" => want(0).map(|_| petersen()),
        "complete" => want(1).and_then(|_| complete_graph(nums[0])),
        "cycle" => want(1).and_then(|_| cycle(nums[0])),
        "path" => want(1).and_then(|_| path(nums[0])),
        "hypercube" => want(1).and_then(|_| hypercube(nums[0])),
        "folded-cube" => want(1).and_then(|_| folded_cube(nums[0])),
        "bipartite" => want(2).and_then(|_| complete_bipartite(nums[0], nums[1])),
        "multipartite" => complete_multipartite(&nums),
        "kneser" => want(2).and_then(|_| kneser(nums[0], nums[1])),
        "johnson" => want(2).and_then(|_| johnson(nums[0], nums[1])),
        _ => Err(usage(format!("unknown base {spec:?}"))),
    }
}

fn read_gain(path: &Path) -> Result<GainGraph, Error> {
    GainGraph::parse_gain_file(&fs::read_to_string(path)?)
}

fn is_gain_text(text: &str) -> bool {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .is_some_and(|l| l.starts_with("gainfile"))
}

fn emit<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}

#[derive(Serialize)]
struct SearchSummary {
    sampled: u64,
    two_ev: u64,
    connected_two_ev: u64,
    prefiltered: bool,
    hits: Vec<String>,
}

fn run(cli: &Cli) -> Result<String, Error> {
    let tol = cli.tol;
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(usage("--tol must be positive"));
    }
    let budget = cli.budget.unwrap_or(DEFAULT_BUDGET);
    match &cli.command {
        Command::Demo(a) => {
            let (name, f) = match a.family {
                Family::Huang => ("huang", huang_signing(a.n)?),
                Family::CohenTits if a.n < 2 => return Err(usage("cohen-tits needs --n >= 2")),
                Family::CohenTits => ("cohen-tits", huang_signing(a.n)?),
                Family::Butson => ("butson", butson_gain(&fourier_butson(a.q)?)?),
                Family::S3k5 => ("s3k5", s3_cover_k5()),
                Family::K3nNonexample => ("k3n-nonexample", k3n_nonexample(a.n)?),
            };
            let out = a.gain_out.clone().unwrap_or_else(|| PathBuf::from(format!("{name}.gain")));
            fs::write(&out, f.to_gain_file())?;
            Ok(analyze(&f, &out.display().to_string(), tol, cli.timing)?.to_json())
        }
        Command::Lift { gain_file, out } => {
            let text = read_gain(gain_file)?.lift().graph().to_edge_list();
            match out {
                Some(p) => fs::write(p, &text)?,
                None => print!("{text}"),
            }
            Ok(String::new())
        }
        Command::Classify { gain_file } => {
            let f = read_gain(gain_file)?;
            Ok(analyze(&f, &gain_file.display().to_string(), tol, cli.timing)?.to_json())
        }
        Command::Certify(a) => {
            let text = fs::read_to_string(&a.path)?;
            let source = a.path.display().to_string();
            let (g, input) = if is_gain_text(&text) {
                let f = GainGraph::parse_gain_file(&text)?;
                (f.lift().graph().clone(), InputDescriptor::for_gain(&source, &f))
            } else {
                let g = Graph::parse_edge_list(&text)?;
                let input = InputDescriptor::for_graph(&source, &g);
                (g, input)
            };
            let mut checks = CertifyChecks {
                walk: a.walk,
                drg: a.drg,
                srg: a.srg,
                antipodal: a.antipodal,
                drackn: a.drackn,
            };
            if !checks.any() {
                checks = CertifyChecks::all();
            }
            Ok(certify(&g, input, checks)?.to_json())
        }
        Command::Search(a) => {
            let group = GroupSpec::abelian(parse_list(&a.group)?)?;
            let mode = match a.mode {
                Mode::Exhaustive => SearchMode::Exhaustive,
                Mode::Random => SearchMode::Random,
            };
            let budget = cli.budget.unwrap_or(match mode {
                SearchMode::Exhaustive => DEFAULT_BUDGET,
                SearchMode::Random => DEFAULT_SAMPLES,
            });
            let spec = SearchSpec::new(parse_base(&a.base)?, group, mode, budget, cli.seed)?;
            let out = search_two_ev(&spec, a.prefilter)?;
            Ok(emit(&SearchSummary {
                sampled: out.sampled,
                two_ev: out.hits.len() as u64,
                connected_two_ev: out.hits.iter().filter(|h| h.two_ev.cover_connected).count() as u64,
                prefiltered: out.prefiltered,
                hits: out.hits.iter().map(|h| h.gain.to_gain_file()).collect(),
            }))
        }
        Command::Verify(a) => {
            let need = |x: Option<usize>, flag: &str| x.ok_or_else(|| usage(format!("--{flag} is required")));
            let summary: VerifySummary = match a.theorem {
                Theorem::WalkRegular => {
                    let bases = vec![
                        complete_graph(4)?,
                        complete_graph(5)?,
                        complete_bipartite(3, 3)?,
                        cycle(6)?,
                        hypercube(3)?,
                    ];
                    let groups = vec![
                        GroupSpec::cyclic(2)?,
                        GroupSpec::cyclic(3)?,
                        GroupSpec::cyclic(4)?,
                        GroupSpec::abelian(vec![2, 2])?,
                    ];
                    verify_theorem_5_1(&bases, &groups, cli.budget.unwrap_or(DEFAULT_SAMPLES), cli.seed)?
                }
                Theorem::Drackn => verify_theorem_6_2(need(a.n, "n")?, need(a.r, "r")?, budget)?,
                Theorem::SrgCover => match (&a.gain, &a.base) {
                    (Some(p), None) => {
                        let rec = verify_theorem_6_4(&read_gain(p)?)?;
                        let applicable = rec.theorem_checks.get(THM_SRG_DRG) == Some(&CheckOutcome::Pass);
                        VerifySummary {
                            sampled: 1,
                            two_ev: u64::from(rec.two_ev.is_two_ev),
                            verified: u64::from(applicable),
                            connected_two_ev: u64::from(applicable),
                            ..Default::default()
                        }
                    }
                    (None, Some(b)) => verify_theorem_6_4_search(parse_base(b)?, need(a.r, "r")?, budget)?,
                    _ => return Err(usage("6.4 takes exactly one of --gain or --base")),
                },
                Theorem::Bipartite => {
                    let n = need(a.n, "n")?;
                    verify_corollary_6_5(a.m.unwrap_or(n), n, need(a.r, "r")?, budget)?
                }
            };
            Ok(emit(&summary))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let reproducer = match &cli.command {
        Command::Verify(a) => a.reproducer.clone(),
        _ => PathBuf::from("falsification.gain"),
    };
    match run(&cli) {
        Ok(json) => {
            if !json.is_empty() {
                println!("{json}");
                if let Some(p) = &cli.json {
                    if let Err(e) = fs::write(p, format!("{json}\n")) {
                        eprintln!("error: {e}");
                        return ExitCode::from(1);
                    }
                }
            }
            ExitCode::SUCCESS
        }
        Err(Error::Falsified { theorem, detail, reproducer: text }) => {
            eprintln!("FALSIFIED {theorem}: {detail}");
            match fs::write(&reproducer, text) {
                Ok(()) => eprintln!("reproducer written to {}", reproducer.display()),
                Err(e) => eprintln!("could not write reproducer: {e}"),
            }
            ExitCode::from(2)
        }
        Err(e @ (Error::NoConvergence(_) | Error::NotHermitian(_))) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
