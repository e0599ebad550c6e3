use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hmds::codes::{CodeJson, LinearCode};
use hmds::fields::FieldCtx;
use hmds::repro::{self, Tier};
use hmds::{bounds, construct, cosets, hmds as hm, Error};

const EXIT_FALSE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(name = "hmds", version, about = "Higher-order MDS codes: constructions, property checks and bounds")]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Enumeration budget in vectors.
    #[arg(long, global = true, env = "HMDS_BUDGET")]
    budget: Option<f64>,
    /// Seed for randomized experiments.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build an explicit 2-MDS GRS code.
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
    },
    /// Test a property of a code given as a JSON descriptor or a fixture name.
    Check(CheckArgs),
    /// Singleton-type, volume and threshold bounds for a parameter set.
    Bounds(BoundsArgs),
    /// Reproduce the numeric claims of the worked examples.
    Repro(ReproArgs),
    /// Randomized and algebraic experiments.
    Experiment {
        #[command(subcommand)]
        kind: ExperimentKind,
    },
}

#[derive(Subcommand)]
enum ConstructKind {
    /// Sidon-set construction for redundancy rho over GF(2^h) subfields.
    General {
        #[arg(long)]
        rho: usize,
        #[arg(long)]
        h: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Redundancy-3 construction of length 2^h over GF(2^{32h}).
    Rho3 {
        #[arg(long)]
        h: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Greedy redundancy-3 locator selection over GF(2^m).
    Greedy {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Property {
    Mds,
    Distance,
    List,
    Strong,
    Lmds,
    #[value(name = "2mds")]
    TwoMds,
    Lightly,
    Profile,
    Bonneau,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    /// Determinants of the block matrices over admissible triples (decides lightly-2-MDS).
    Det,
    /// Puncturing reduction to smaller codes.
    Puncture,
    /// Exhaustive coset enumeration.
    Brute,
}

#[derive(Args)]
struct CheckArgs {
    /// Path to a code descriptor, or the name of an embedded fixture.
    #[arg(long)]
    code: String,
    #[arg(long, value_enum)]
    property: Property,
    #[arg(long, value_enum, default_value = "puncture")]
    method: Method,
    /// List size L.
    #[arg(long = "L", alias = "l")]
    list: Option<u64>,
    /// Decoding radius for `list`.
    #[arg(long)]
    tau: Option<usize>,
    /// Total weight bound (L+1)tau for `strong`.
    #[arg(long = "T", alias = "t")]
    total: Option<u64>,
}

#[derive(Args)]
struct BoundsArgs {
    #[arg(long)]
    n: u64,
    #[arg(long)]
    k: u64,
    #[arg(long = "L", alias = "l", default_value_t = 2)]
    list: u64,
    #[arg(long, default_value_t = 2)]
    q: u64,
    #[arg(long)]
    eps: Option<f64>,
    #[arg(long)]
    tau: Option<u64>,
}

#[derive(Args)]
struct ReproArgs {
    #[arg(long, conflicts_with_all = ["all", "list", "dump"])]
    case: Option<String>,
    /// Run every case up to --tier.
    #[arg(long)]
    all: bool,
    #[arg(long, default_value = "fast")]
    tier: String,
    /// List the cases.
    #[arg(long)]
    list: bool,
    /// Write the embedded fixtures as JSON descriptors into this directory.
    #[arg(long)]
    dump: Option<PathBuf>,
}

#[derive(Subcommand)]
enum ExperimentKind {
    /// Fraction of random [n,k] codes over GF(2^m) that are not 2-MDS.
    MonteCarlo {
        #[arg(long, default_value_t = 6)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long, default_value_t = 16)]
        m: usize,
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
    /// Compare det M and det S at random points over GF(p).
    Sylvester {
        #[arg(long, default_value_t = 3)]
        rho: usize,
        /// Partition sizes, comma separated.
        #[arg(long, value_delimiter = ',', default_value = "2,2,2")]
        parts: Vec<usize>,
        #[arg(long, default_value_t = 1_000_003)]
        p: u64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
}

enum Outcome {
    Ok(Value),
    False(Value),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    if let Some(b) = cli.budget {
        if !(b >= 1.0) {
            eprintln!("error: budget must be at least 1");
            return ExitCode::from(EXIT_USAGE);
        }
        hmds::set_budget(b as u64);
    }
    match run(&cli) {
        Ok(Outcome::Ok(v)) => {
            emit(&cli, &v);
            ExitCode::SUCCESS
        }
        Ok(Outcome::False(v)) => {
            emit(&cli, &v);
            ExitCode::from(EXIT_FALSE)
        }
        Err(e) => {
            if cli.json {
                println!("{}", json!({"error": e.to_string()}));
            } else {
                eprintln!("error: {e}");
            }
            ExitCode::from(if e.is_budget() { EXIT_BUDGET } else { EXIT_USAGE })
        }
    }
}

fn emit(cli: &Cli, v: &Value) {
    if cli.json {
        println!("{}", serde_json::to_string(v).unwrap());
    } else if let Some(text) = v.get("text").and_then(Value::as_str) {
        print!("{text}");
    } else {
        println!("{}", serde_json::to_string_pretty(v).unwrap());
    }
}

fn run(cli: &Cli) -> hmds::Result<Outcome> {
    match &cli.cmd {
        Cmd::Construct { kind } => run_construct(kind),
        Cmd::Check(a) => run_check(a),
        Cmd::Bounds(a) => {
            let r = bounds::report(a.n, a.k, a.q, a.list, a.eps, a.tau)?;
            Ok(Outcome::Ok(serde_json::to_value(r).unwrap()))
        }
        Cmd::Repro(a) => run_repro(cli, a),
        Cmd::Experiment { kind } => run_experiment(cli, kind),
    }
}

fn write_code(code: &LinearCode, out: &Option<PathBuf>) -> hmds::Result<Outcome> {
    let v = serde_json::to_value(code.to_json()).unwrap();
    match out {
        Some(p) => {
            let s = serde_json::to_string_pretty(&v).unwrap();
            std::fs::write(p, s + "\n").map_err(|e| Error::Parse(format!("{}: {e}", p.display())))?;
            Ok(Outcome::Ok(json!({"n": code.n(), "k": code.k(), "written": p.display().to_string()})))
        }
        None => Ok(Outcome::Ok(v)),
    }
}

fn run_construct(kind: &ConstructKind) -> hmds::Result<Outcome> {
    match kind {
        ConstructKind::General { rho, h, out } => write_code(&construct::general_construction(*rho, *h)?.0, out),
        ConstructKind::Rho3 { h, out } => write_code(&construct::rho3_construction(*h)?.0, out),
        ConstructKind::Greedy { m, n, out } => write_code(&construct::greedy_rho3(&FieldCtx::binary(*m)?, *n)?, out),
    }
}

fn load_code(spec: &str) -> hmds::Result<LinearCode> {
    if let Some((_, j)) = repro::fixtures().into_iter().find(|(name, _)| *name == spec) {
        return LinearCode::from_json(&j);
    }
    let text = std::fs::read_to_string(spec).map_err(|e| Error::Parse(format!("{spec}: {e}")))?;
    let j: CodeJson = serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{spec}: {e}")))?;
    LinearCode::from_json(&j)
}

fn need<T: Copy>(v: Option<T>, flag: &str) -> hmds::Result<T> {
    v.ok_or_else(|| Error::BadParameters(format!("--{flag} is required for this property")))
}

fn verdict(key: &str, holds: bool, witness: Option<cosets::Witness>, extra: Value) -> Outcome {
    let mut v = json!({ key: holds });
    if let Some(w) = witness {
        v["witness"] = serde_json::to_value(w).unwrap();
    }
    if let Value::Object(m) = extra {
        for (k, x) in m {
            v[k] = x;
        }
    }
    if holds {
        Outcome::Ok(v)
    } else {
        Outcome::False(v)
    }
}

fn run_check(a: &CheckArgs) -> hmds::Result<Outcome> {
    let code = load_code(&a.code)?;
    let shape = json!({"n": code.n(), "k": code.k()});
    Ok(match a.property {
        Property::Mds => verdict("mds", code.is_mds(), None, shape),
        Property::Distance => {
            let d = code.min_distance()?;
            Outcome::Ok(json!({"n": code.n(), "k": code.k(), "distance": d}))
        }
        Property::List => {
            let (tau, l) = (need(a.tau, "tau")?, need(a.list, "L")?);
            let (ok, w) = cosets::is_list_decodable(&code, tau, l)?;
            verdict("list_decodable", ok, w, json!({"tau": tau, "L": l}))
        }
        Property::Strong => {
            let (t, l) = (need(a.total, "T")?, need(a.list, "L")?);
            let (ok, w) = cosets::is_strongly_list_decodable(&code, t, l)?;
            verdict("strongly_list_decodable", ok, w, json!({"T": t, "L": l}))
        }
        Property::Lmds => {
            let l = need(a.list, "L")?;
            let t = l * code.redundancy() as u64;
            let (ok, w) = cosets::is_strongly_list_decodable(&code, t, l)?;
            verdict("lmds", ok, w, json!({"L": l}))
        }
        Property::Lightly => {
            let l = a.list.unwrap_or(2);
            let t = a.total.unwrap_or(l * code.redundancy() as u64);
            let (ok, w) = cosets::is_lightly_list_decodable_bruteforce(&code, t, l)?;
            verdict("lightly", ok, w, json!({"T": t, "L": l}))
        }
        Property::TwoMds => {
            let (key, (ok, w)) = match a.method {
                Method::Det => ("lightly_2mds", hm::lightly_2mds_det(&code)?),
                Method::Puncture => ("2mds", hm::is_2mds(&code)?),
                Method::Brute => ("2mds", cosets::is_strongly_list_decodable(&code, 2 * code.redundancy() as u64, 2)?),
            };
            verdict(key, ok, w, shape)
        }
        Property::Profile => {
            let l_max = match a.list {
                Some(l) => l,
                None => bounds::high_l_threshold(code.n() as u64, code.k() as u64).try_into().unwrap_or(1u64).max(1),
            };
            let p = cosets::l_mds_profile(&code, l_max)?;
            Outcome::Ok(serde_json::to_value(p).unwrap())
        }
        Property::Bonneau => verdict("bonneau", cosets::bonneau_check(&code)?, None, shape),
    })
}

fn run_repro(cli: &Cli, a: &ReproArgs) -> hmds::Result<Outcome> {
    if a.list {
        let v = serde_json::to_value(repro::CASES).unwrap();
        if cli.json {
            return Ok(Outcome::Ok(v));
        }
        let mut text = String::new();
        for c in repro::CASES {
            text += &format!("{:<18} {:<9} {}\n", c.id, format!("{:?}", c.tier).to_lowercase(), c.description);
        }
        return Ok(Outcome::Ok(json!({ "text": text })));
    }
    if let Some(dir) = &a.dump {
        std::fs::create_dir_all(dir).map_err(|e| Error::Parse(format!("{}: {e}", dir.display())))?;
        let mut written = vec![];
        for (name, j) in repro::fixtures() {
            let p = dir.join(format!("{name}.json"));
            let s = serde_json::to_string_pretty(&j).unwrap() + "\n";
            std::fs::write(&p, s).map_err(|e| Error::Parse(format!("{}: {e}", p.display())))?;
            written.push(p.display().to_string());
        }
        return Ok(Outcome::Ok(json!({ "written": written })));
    }
    let ids: Vec<&str> = match (&a.case, a.all) {
        (Some(id), _) => vec![id.as_str()],
        (None, true) => {
            let tier: Tier = a.tier.parse()?;
            repro::cases_up_to(tier).into_iter().map(|c| c.id).collect()
        }
        (None, false) => return Err(Error::BadParameters("give --case ID, --all, --list or --dump DIR".into())),
    };
    let mut results = vec![];
    for id in ids {
        results.push(repro::run_case_budgeted(id)?);
    }
    let pass = results.iter().all(|r| r.pass);
    let v = if cli.json {
        serde_json::to_value(&results).unwrap()
    } else {
        let mut text = String::new();
        for r in &results {
            text += &format!("{} {}\n", if r.pass { "PASS" } else { "FAIL" }, r.id);
            for c in &r.checks {
                if c.pass {
                    text += &format!("  ok   {}: {}\n", c.name, c.got);
                } else {
                    text += &format!("  DIFF {}: expected {} got {}\n", c.name, c.expected, c.got);
                }
            }
        }
        json!({ "text": text })
    };
    Ok(if pass { Outcome::Ok(v) } else { Outcome::False(v) })
}

fn run_experiment(cli: &Cli, kind: &ExperimentKind) -> hmds::Result<Outcome> {
    match kind {
        ExperimentKind::MonteCarlo { n, k, m, samples } => {
            let f = FieldCtx::binary(*m)?;
            let r = hm::random_2mds_fraction(&f, *n, *k, *samples, cli.seed)?;
            let mut v = serde_json::to_value(&r).unwrap();
            v["bound_5n_over_q"] = json!(hm::fraction_bound(*n, &f));
            Ok(Outcome::Ok(v))
        }
        ExperimentKind::Sylvester { rho, parts, p, trials } => {
            use rand::{Rng, SeedableRng};
            let f = FieldCtx::prime(*p)?;
            let spec = hm::PartitionSpec::new(*rho, parts.clone())?;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(cli.seed);
            let (mut agree, mut zero_residual) = (0, 0);
            for _ in 0..*trials {
                let x: Vec<_> = (0..spec.len()).map(|_| f.from_u64(rng.gen_range(0..*p))).collect();
                agree += hm::sylvester_equiv_check(&f, &spec, &x)? as usize;
                zero_residual += hm::conjecture_residual(&f, &spec, &x)?.is_zero() as usize;
            }
            let v = json!({"rho": rho, "parts": parts, "p": p, "trials": trials, "equivalence_holds": agree, "residual_zero": zero_residual});
            Ok(if agree == *trials { Outcome::Ok(v) } else { Outcome::False(v) })
        }
    }
}
