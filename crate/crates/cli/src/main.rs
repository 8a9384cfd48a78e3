use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use dsqec::code::{fixture, format_checkset, load_checkset, load_code, CheckSet, StabilizerCode};
use dsqec::verify::{check_global_capped, DEFAULT_FAULT_CAP};
use dsqec::{
    build_table, count_faults, css_parity_pair, distances, double_construction,
    generator_resynthesis, gv_check, hybrid_hamming, lemma1_check, oa_check, parity_augment,
    random_augment, render_table, run_trials, search_code, singleton_check, symmetric_hamming,
    Error, FaultBudget, GraphSearchConfig, MlDecoder64, NoiseModel64, RandomSearchConfig, TableId,
};

/// Data-syndrome stabilizer codes: check sets that correct errors on data
/// qubits and on extracted syndrome bits.
#[derive(Parser)]
#[command(name = "dsqec", version, after_help = THREADS_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

const THREADS_HELP: &str = "Set RAYON_NUM_THREADS to control the number of worker threads.\n\
     Exit status: 0 ok or satisfied, 1 witness found or bound violated, 2 usage or input error.";

const CODE_HELP: &str = "Built-in code name (five_qubit, steane_css, steane_alt) or code file";
const CHECKSET_HELP: &str = "Built-in check set (five_qubit, steane_css, steane_alt, \
     five_qubit_parity, steane_css_parity, steane_alt_parity, steane_css_pair) or check set file";

#[derive(Subcommand)]
enum Command {
    /// Print the single-fault syndrome table of the five-qubit code (I),
    /// the five-qubit code with its redundant parity generator (II), or the
    /// Steane code under CSS and alternative generators (III)
    Tables {
        #[arg(value_parser = parse_table)]
        which: TableId,
    },
    /// Exhaustive minimum distance and pure distance of a stabilizer code
    Distance {
        #[arg(long, help = CODE_HELP)]
        code: String,
        /// Largest weight searched; defaults to n
        #[arg(long)]
        cutoff: Option<usize>,
    },
    /// Global fault correction: every pair of faults within the budget has
    /// distinct observed syndromes or equivalent data errors
    VerifyGlobal {
        #[command(flatten)]
        target: Target,
        /// Fault budget: sym:t (combined weight <= t) or asym:a,b
        #[arg(long, default_value = "sym:1")]
        budget: FaultBudget,
        /// Refuse budgets with more faults than this
        #[arg(long, default_value_t = DEFAULT_FAULT_CAP)]
        cap: u128,
        /// List one collision per colliding syndrome
        #[arg(long)]
        all: bool,
    },
    /// Syndrome weight condition: each error on t < d qubits has syndrome
    /// weight at least d - t or is a stabilizer element
    VerifyLemma1 {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        d: usize,
    },
    /// Orthogonal-array property of the stabilizer on every set of l qubits
    VerifyOa {
        #[arg(long, help = CODE_HELP)]
        code: String,
        #[arg(long)]
        l: usize,
    },
    /// Hamming, Gilbert-Varshamov and Singleton bounds in exact integer
    /// arithmetic
    Bound {
        #[command(subcommand)]
        bound: Bound,
    },
    /// Build a redundant check set from a code's generators
    Augment(AugmentArgs),
    /// Monte Carlo logical error rate under depolarizing data noise and
    /// independent syndrome flips
    Simulate(SimulateArgs),
    /// Search invertible recombinations of the generators for a minimal
    /// generating set that is globally correcting
    Resynth {
        #[arg(long, help = CODE_HELP)]
        code: String,
        #[arg(long, default_value = "sym:1")]
        budget: FaultBudget,
        #[arg(long, default_value_t = 1000)]
        attempts: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Write the check set here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Seeded graph-state search for an [[n,1,d]] code, certified by the
    /// exhaustive distance search
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        restarts: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Target {
    #[arg(long, help = CHECKSET_HELP, required_unless_present = "code")]
    checkset: Option<String>,
    /// Code the check set must generate; alone, its bare generators are
    /// the check set
    #[arg(long)]
    code: Option<String>,
}

#[derive(Subcommand)]
enum Bound {
    /// Hybrid Hamming bound for n_q qubits and n_c classical bits
    Hybrid {
        #[arg(long)]
        nq: usize,
        #[arg(long)]
        nc: usize,
        #[arg(long)]
        tq: usize,
        #[arg(long)]
        tc: usize,
        /// Number of syndrome bits
        #[arg(long)]
        s: usize,
    },
    /// Hamming bound for an [[n,k]] code with r redundant checks correcting
    /// t combined faults
    Symmetric {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        t: usize,
    },
    /// Gilbert-Varshamov existence condition for an [[n,k,d]] code
    Gv {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: usize,
    },
    /// Quantum Singleton bound n - k >= 2(d - 1)
    Singleton {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    /// Append the product of all generators
    Parity,
    /// Append the products of the X-type and of the Z-type generators
    CssPair,
    /// Generators, three parity copies and two perfect-hash blocks (d = 5)
    PhfDouble,
    /// Random stabilizer elements with a syndrome weight floor
    Random,
    /// Random invertible recombination of the generators
    Resynth,
}

#[derive(Args)]
struct AugmentArgs {
    #[arg(long, help = CODE_HELP)]
    code: String,
    #[arg(long, value_enum)]
    method: Method,
    /// Relative syndrome weight target for the random method
    #[arg(long, default_value_t = 0.25)]
    delta: f64,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 100)]
    attempts: usize,
    /// Fault budget for the resynth method
    #[arg(long, default_value = "sym:1")]
    budget: FaultBudget,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SimulateArgs {
    #[arg(long, help = CHECKSET_HELP)]
    checkset: String,
    /// Faults the lookup table corrects; the ML decoder searches up to its
    /// total weight
    #[arg(long, default_value = "sym:1")]
    budget: FaultBudget,
    #[arg(long)]
    p: f64,
    #[arg(long)]
    q: f64,
    #[arg(long, default_value_t = 100_000)]
    trials: u64,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Coset maximum-likelihood decoding instead of table lookup
    #[arg(long)]
    ml: bool,
}

fn parse_table(s: &str) -> Result<TableId, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn resolve_code(name: &str) -> dsqec::Result<StabilizerCode> {
    match fixture(name) {
        Some(code) => Ok(code),
        None => load_code(name).map_err(|e| with_path(name, e)),
    }
}

fn with_path(name: &str, e: Error) -> Error {
    match e {
        Error::Io(msg) => Error::Io(format!("{name}: {msg}")),
        e => e,
    }
}

fn resolve_checkset(name: &str) -> dsqec::Result<CheckSet> {
    if let Some(code) = fixture(name) {
        return Ok(CheckSet::from_generators(&code));
    }
    if let Some(base) = name.strip_suffix("_parity") {
        if let Some(code) = fixture(base) {
            return Ok(parity_augment(&code));
        }
    }
    if let Some(base) = name.strip_suffix("_pair") {
        if let Some(code) = fixture(base) {
            return css_parity_pair(&code);
        }
    }
    load_checkset(name).map_err(|e| with_path(name, e))
}

fn resolve_target(t: &Target) -> dsqec::Result<CheckSet> {
    match (&t.checkset, &t.code) {
        (Some(c), None) => resolve_checkset(c),
        (None, Some(c)) => Ok(CheckSet::from_generators(&resolve_code(c)?)),
        (Some(checks), Some(code)) => {
            let checks = resolve_checkset(checks)?;
            CheckSet::new(resolve_code(code)?, checks.operators().to_vec())
        }
        (None, None) => unreachable!("clap requires one of --checkset and --code"),
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> dsqec::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(Error::from),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Runs a command; `Ok(false)` means a witness was found or a bound fails.
fn run(cmd: Command) -> dsqec::Result<bool> {
    match cmd {
        Command::Tables { which } => {
            print!("{}", render_table(which));
            Ok(true)
        }
        Command::Distance { code, cutoff } => {
            let c = resolve_code(&code)?;
            let d = distances(&c, cutoff.unwrap_or(c.n()))?;
            println!("{d}");
            Ok(true)
        }
        Command::VerifyGlobal {
            target,
            budget,
            cap,
            all,
        } => {
            let checks = resolve_target(&target)?;
            let report = check_global_capped(&checks, &budget, cap)?;
            println!(
                "budget {budget}, n={} m={}, {} faults",
                checks.n(),
                checks.m(),
                count_faults(checks.n(), checks.m(), &budget)
            );
            match &report.witness {
                None => println!("ok"),
                Some(w) => {
                    println!("collision: {w}");
                    if all {
                        for c in &report.collisions {
                            println!("\t{c}");
                        }
                    }
                }
            }
            Ok(report.ok)
        }
        Command::VerifyLemma1 { target, d } => {
            let checks = resolve_target(&target)?;
            let report = lemma1_check(&checks, d)?;
            match &report.violation {
                None => println!("ok"),
                Some(v) => println!("violation: {v}"),
            }
            Ok(report.ok)
        }
        Command::VerifyOa { code, l } => {
            let ok = oa_check(&resolve_code(&code)?, l)?;
            println!("{}", if ok { "ok" } else { "not an orthogonal array" });
            Ok(ok)
        }
        Command::Bound { bound } => {
            let (report, ok) = match bound {
                Bound::Hybrid { nq, nc, tq, tc, s } => {
                    let r = hybrid_hamming(nq, nc, tq, tc, s);
                    (r.to_string(), r.satisfied)
                }
                Bound::Symmetric { n, k, r, t } => {
                    check_nk(n, k)?;
                    let r = symmetric_hamming(n, k, r, t);
                    (r.to_string(), r.satisfied)
                }
                Bound::Gv { n, k, d } => {
                    check_nk(n, k)?;
                    let r = gv_check(n, k, d);
                    (r.to_string(), r.satisfied)
                }
                Bound::Singleton { n, k, d } => {
                    check_nk(n, k)?;
                    let ok = singleton_check(n, k, d);
                    let rhs = 2 * d.saturating_sub(1);
                    let op = if ok { ">=" } else { "<" };
                    (format!("{} {op} {rhs}", n - k), ok)
                }
            };
            println!("{report}");
            Ok(ok)
        }
        Command::Augment(args) => augment(args),
        Command::Simulate(args) => simulate(args),
        Command::Resynth {
            code,
            budget,
            attempts,
            seed,
            out,
        } => {
            let c = resolve_code(&code)?;
            let res = generator_resynthesis(&c, &budget, attempts, seed)?;
            let prov = vec![
                format!(
                    "resynth of {code} at {budget}, seed {seed}, attempt {}",
                    res.attempt
                ),
                format!(
                    "transform rows: {}",
                    res.transform.to_string().trim().replace('\n', " ")
                ),
            ];
            emit(&format_checkset(&res.checks, &prov), out.as_ref())?;
            Ok(true)
        }
        Command::Search {
            n,
            d,
            seed,
            restarts,
            out,
        } => {
            let cfg = GraphSearchConfig {
                seed,
                restarts,
                ..GraphSearchConfig::default()
            };
            let code = search_code(n, d, &cfg)?;
            let text = format!(
                "# [[{n},1,{d}]] code from graph-state search, seed {seed}\n{}",
                dsqec::format_code(&code)
            );
            emit(&text, out.as_ref())?;
            Ok(true)
        }
    }
}

fn check_nk(n: usize, k: usize) -> dsqec::Result<()> {
    if k > n {
        return Err(Error::Domain(format!("k={k} exceeds n={n}")));
    }
    Ok(())
}

fn augment(args: AugmentArgs) -> dsqec::Result<bool> {
    let code = resolve_code(&args.code)?;
    let name = &args.code;
    let (checks, prov) = match args.method {
        Method::Parity => (
            parity_augment(&code),
            vec![format!("parity augmentation of {name}")],
        ),
        Method::CssPair => (
            css_parity_pair(&code)?,
            vec![format!("CSS parity pair augmentation of {name}")],
        ),
        Method::PhfDouble => (
            double_construction(&code)?,
            vec![format!("perfect-hash double construction on {name}")],
        ),
        Method::Random => {
            let cfg = RandomSearchConfig::new(args.delta, args.seed, args.attempts)?;
            let res = random_augment(&code, &cfg)?;
            let prov = vec![format!(
                "random augmentation of {name}: delta {:.6}, m={} t={}, seed {}, attempt {}",
                args.delta, res.m, res.t, args.seed, res.attempt
            )];
            (res.checks, prov)
        }
        Method::Resynth => {
            let res = generator_resynthesis(&code, &args.budget, args.attempts, args.seed)?;
            let prov = vec![format!(
                "resynth of {name} at {}, seed {}, attempt {}",
                args.budget, args.seed, res.attempt
            )];
            (res.checks, prov)
        }
    };
    emit(&format_checkset(&checks, &prov), args.out.as_ref())?;
    Ok(true)
}

fn simulate(args: SimulateArgs) -> dsqec::Result<bool> {
    let checks = resolve_checkset(&args.checkset)?;
    let model = NoiseModel64::new(args.p, args.q, args.seed)?;
    let stats = if args.ml {
        let decoder = MlDecoder64::new(checks, model, args.budget.max_total())?;
        run_trials(&decoder, &model, args.trials)?
    } else {
        let table = build_table(&checks, &args.budget)?;
        run_trials(&table, &model, args.trials)?
    };
    println!("p\tq\ttrials\tfailures\tlogical\tflagged\tseed");
    println!(
        "{:.6}\t{:.6}\t{}\t{}\t{}\t{}\t{}",
        args.p,
        args.q,
        stats.trials,
        stats.decoding_failures,
        stats.logical_errors,
        stats.flagged_uncorrectable,
        args.seed
    );
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let echo: Vec<String> = std::env::args().collect();
    eprintln!("command: {}", echo.join(" "));
    let start = Instant::now();
    let result = run(cli.command);
    eprintln!("wall time {:.6} s", start.elapsed().as_secs_f64());
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
