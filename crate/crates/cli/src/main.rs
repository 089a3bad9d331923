//! Command-line surface: parse descriptors and polynomials, run checks,
//! and emit human tables or machine-readable JSON reports.
//!
//! Exit status: 0 on a successful computation, 2 on usage or input
//! errors, 3 when a budget is exceeded, and 1 only when `--expect` is set
//! and the verdict differs.

mod report;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use starpi_core::checker::{
    check_containment, check_standard_combinations, check_standard_full_scan, is_star_identity,
    identity_subspace, min_standard_degree_report, polynomial_from_coefficients,
    signature_monomials, Budget, CheckMode, Verdict,
};
use starpi_core::embed::{decide, DecideOutcome};
use starpi_core::poly::standard_poly;
use starpi_core::rat::rat_int;
use starpi_core::{parse_polynomial, Error, Parity, Signature, StarAlgebra};

use report::Report;

#[derive(Parser)]
#[command(
    name = "starpi",
    version,
    about = "Polynomial identities with involution on *-simple matrix algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Worker threads for tuple enumerations.
    #[arg(long, global = true, default_value_t = 1)]
    workers: usize,

    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Human)]
    output: OutputFormat,

    /// Seed for randomized checks and benches.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Largest number of basis tuples one enumeration may visit.
    #[arg(long, global = true, default_value_t = 10_000_000)]
    max_tuples: u64,

    /// Largest signature degree subspace and containment computations accept.
    #[arg(long, global = true, default_value_t = 5)]
    max_degree: usize,

    /// Fail (exit 1) when the verdict differs; only meaningful for `check`.
    #[arg(long, global = true, value_enum)]
    expect: Option<Expectation>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Human,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Expectation {
    Identity,
    Nonidentity,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Exhaustive,
    Randomized,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ParityArg {
    Y,
    Z,
    X,
}

impl From<ParityArg> for Parity {
    fn from(p: ParityArg) -> Parity {
        match p {
            ParityArg::Y => Parity::Y,
            ParityArg::Z => Parity::Z,
            ParityArg::X => Parity::X,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a polynomial is a *-identity of an algebra.
    Check {
        /// Algebra descriptor: t:<n>, s:<even n> or ex:<k>.
        #[arg(long)]
        algebra: String,
        /// Polynomial, e.g. "st(4; z,z,z,z)" or "[y1,z2] - 2*z2*y1".
        #[arg(long)]
        poly: String,
        /// Exhaustive (complete, multilinear only) or randomized sampling.
        #[arg(long, value_enum, default_value_t = ModeArg::Exhaustive)]
        mode: ModeArg,
        /// Sample count in randomized mode.
        #[arg(long, default_value_t = 200)]
        trials: u64,
    },
    /// Smallest degree at which the standard polynomial becomes an identity.
    MinDegree {
        #[arg(long)]
        algebra: String,
        /// Variable parity the standard polynomial is taken in.
        #[arg(long, value_enum)]
        parity: ParityArg,
        /// Largest degree to try.
        #[arg(long, default_value_t = 8)]
        max: usize,
    },
    /// Dimension and basis of multilinear identity subspaces.
    Subspace {
        #[arg(long)]
        algebra: String,
        /// One signature, e.g. "y,z,y".
        #[arg(long, conflicts_with = "degree")]
        signature: Option<String>,
        /// All {y,z} signatures of this degree.
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Degree-truncated comparison of identity ideals: is every identity
    /// of A an identity of B?
    Containment {
        /// Descriptor of the algebra whose identities are tested.
        #[arg(long)]
        a: String,
        /// Descriptor of the algebra they are tested in.
        #[arg(long)]
        b: String,
        /// Truncation degree.
        #[arg(long, default_value_t = 3)]
        max: usize,
    },
    /// Choose, apply and verify an embedding construction.
    Embed {
        /// Source algebra descriptor.
        #[arg(long)]
        from: String,
        /// Target algebra descriptor.
        #[arg(long)]
        to: String,
        /// Truncation degree for the identity-containment premise check.
        #[arg(long, default_value_t = 2)]
        max: usize,
    },
    /// Cross-validate and time the evaluation strategies.
    Bench {
        #[arg(long)]
        algebra: String,
        #[arg(long, value_enum)]
        parity: ParityArg,
        /// Degree of the standard polynomial under test.
        #[arg(long)]
        degree: usize,
        /// Random tuples evaluated per strategy.
        #[arg(long, default_value_t = 25)]
        trials: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn run(cli: &Cli) -> starpi_core::Result<u8> {
    let budget = Budget { max_degree: cli.max_degree, max_tuples: cli.max_tuples };
    if cli.workers == 0 {
        return Err(Error::InvalidInput("--workers must be >= 1".into()));
    }
    if cli.expect.is_some() && !matches!(cli.command, Command::Check { .. }) {
        return Err(Error::InvalidInput("--expect is only meaningful with `check`".into()));
    }
    let started = Instant::now();
    let mut report = match &cli.command {
        Command::Check { algebra, poly, mode, trials } => {
            run_check(cli, &budget, algebra, poly, *mode, *trials)?
        }
        Command::MinDegree { algebra, parity, max } => {
            run_min_degree(cli, &budget, algebra, (*parity).into(), *max)?
        }
        Command::Subspace { algebra, signature, degree } => {
            run_subspace(cli, &budget, algebra, signature.as_deref(), *degree)?
        }
        Command::Containment { a, b, max } => run_containment(cli, &budget, a, b, *max)?,
        Command::Embed { from, to, max } => run_embed(cli, &budget, from, to, *max)?,
        Command::Bench { algebra, parity, degree, trials } => {
            run_bench(cli, &budget, algebra, (*parity).into(), *degree, *trials)?
        }
    };
    report
        .timings
        .get_or_insert_with(serde_json::Map::new)
        .insert("total_ms".into(), json!(started.elapsed().as_millis() as u64));

    match cli.output {
        OutputFormat::Json => println!("{}", serde_json::to_string_pretty(&report).expect("serializable")),
        OutputFormat::Human => report.print_human(),
    }

    if let Some(expect) = cli.expect {
        let wanted = match expect {
            Expectation::Identity => "identity",
            Expectation::Nonidentity => "non-identity",
        };
        if report.verdict != json!(wanted) {
            eprintln!("expectation failed: wanted {wanted}, got {}", report.verdict);
            return Ok(1);
        }
    }
    Ok(0)
}

fn algebra(desc: &str) -> starpi_core::Result<StarAlgebra> {
    StarAlgebra::from_descriptor(desc)
}

fn base_config(cli: &Cli, argv: Vec<String>) -> serde_json::Map<String, Value> {
    let mut m = serde_json::Map::new();
    m.insert("argv".into(), json!(argv));
    m.insert("workers".into(), json!(cli.workers));
    m.insert("seed".into(), json!(cli.seed));
    m.insert("max_tuples".into(), json!(cli.max_tuples));
    m.insert("max_degree".into(), json!(cli.max_degree));
    m
}

/// The normalized argument vector that reproduces this run (defaults made
/// explicit), embedded in every report for exact re-execution.
fn normalized_argv(cli: &Cli, command_args: Vec<String>) -> Vec<String> {
    let mut argv = command_args;
    argv.push("--workers".into());
    argv.push(cli.workers.to_string());
    argv.push("--seed".into());
    argv.push(cli.seed.to_string());
    argv.push("--max-tuples".into());
    argv.push(cli.max_tuples.to_string());
    argv.push("--max-degree".into());
    argv.push(cli.max_degree.to_string());
    argv.push("--output".into());
    argv.push(match cli.output {
        OutputFormat::Human => "human".into(),
        OutputFormat::Json => "json".into(),
    });
    argv
}

fn run_check(
    cli: &Cli,
    budget: &Budget,
    algebra_desc: &str,
    poly_text: &str,
    mode: ModeArg,
    trials: u64,
) -> starpi_core::Result<Report> {
    let alg = algebra(algebra_desc)?;
    let poly = parse_polynomial(poly_text)?;
    let check_mode = match mode {
        ModeArg::Exhaustive => CheckMode::Exhaustive,
        ModeArg::Randomized => CheckMode::Randomized { seed: cli.seed, trials },
    };
    let result = is_star_identity(&poly, &alg, check_mode, budget, cli.workers)?;

    let mode_text = match mode {
        ModeArg::Exhaustive => "exhaustive",
        ModeArg::Randomized => "randomized",
    };
    let argv = normalized_argv(
        cli,
        vec![
            "check".into(),
            "--algebra".into(),
            algebra_desc.into(),
            "--poly".into(),
            poly_text.into(),
            "--mode".into(),
            mode_text.into(),
            "--trials".into(),
            trials.to_string(),
        ],
    );
    let mut config = base_config(cli, argv);
    config.insert("algebra".into(), json!(algebra_desc));
    config.insert("poly".into(), json!(poly_text));
    config.insert("mode".into(), json!(mode_text));
    config.insert("trials".into(), json!(trials));

    let mut report = Report::new("check", config, &[&alg], cli.seed);
    report.verdict = json!(match result.verdict {
        Verdict::Identity => "identity",
        Verdict::NonIdentity => "non-identity",
    });
    report.witness = result.witness.as_ref().map(|w| serde_json::to_value(w).expect("serializable"));
    report.probabilistic = Some(result.probabilistic);
    report.details = Some(json!({
        "polynomial": poly.render(),
        "method": serde_json::to_value(result.method).expect("serializable"),
        "tuples_checked": result.tuples_checked,
    }));
    Ok(report)
}

fn run_min_degree(
    cli: &Cli,
    budget: &Budget,
    algebra_desc: &str,
    parity: Parity,
    max: usize,
) -> starpi_core::Result<Report> {
    let alg = algebra(algebra_desc)?;
    let result = min_standard_degree_report(&alg, parity, max, budget, cli.workers)?;

    let argv = normalized_argv(
        cli,
        vec![
            "min-degree".into(),
            "--algebra".into(),
            algebra_desc.into(),
            "--parity".into(),
            parity.to_string(),
            "--max".into(),
            max.to_string(),
        ],
    );
    let mut config = base_config(cli, argv);
    config.insert("algebra".into(), json!(algebra_desc));
    config.insert("parity".into(), json!(parity.to_string()));
    config.insert("max".into(), json!(max));

    let mut report = Report::new("min-degree", config, &[&alg], cli.seed);
    report.verdict = match result.found {
        Some(d) => json!(d),
        None => json!("not-found"),
    };
    report.details = Some(serde_json::to_value(&result).expect("serializable"));
    Ok(report)
}

fn run_subspace(
    cli: &Cli,
    budget: &Budget,
    algebra_desc: &str,
    signature: Option<&str>,
    degree: Option<usize>,
) -> starpi_core::Result<Report> {
    let alg = algebra(algebra_desc)?;
    let signatures = match (signature, degree) {
        (Some(text), None) => vec![Signature::parse(text)?],
        (None, Some(d)) if d >= 1 => {
            budget.admit_degree(d)?;
            Signature::all_yz_of_degree(d)
        }
        (None, Some(_)) => return Err(Error::InvalidInput("--degree must be >= 1".into())),
        _ => {
            return Err(Error::InvalidInput(
                "subspace needs exactly one of --signature or --degree".into(),
            ))
        }
    };

    let mut dims = Vec::new();
    let mut entries = Vec::new();
    for sig in &signatures {
        let space = identity_subspace(&alg, sig, budget, cli.workers)?;
        let monomials = signature_monomials(sig);
        let basis: Vec<String> = space
            .vectors()
            .iter()
            .map(|v| polynomial_from_coefficients(&monomials, v).render())
            .collect();
        dims.push(json!({ "signature": sig.render(), "dim": space.dim() }));
        entries.push(json!({
            "signature": sig.render(),
            "dim": space.dim(),
            "basis": basis,
        }));
    }

    let mut command_args = vec!["subspace".into(), "--algebra".into(), algebra_desc.into()];
    if let Some(text) = signature {
        command_args.push("--signature".into());
        command_args.push(text.into());
    }
    if let Some(d) = degree {
        command_args.push("--degree".into());
        command_args.push(d.to_string());
    }
    let argv = normalized_argv(cli, command_args);
    let mut config = base_config(cli, argv);
    config.insert("algebra".into(), json!(algebra_desc));
    config.insert("signature".into(), json!(signature));
    config.insert("degree".into(), json!(degree));

    let mut report = Report::new("subspace", config, &[&alg], cli.seed);
    report.verdict = if signatures.len() == 1 {
        dims[0]["dim"].clone()
    } else {
        Value::Array(dims.iter().map(|d| d["dim"].clone()).collect())
    };
    report.subspace_dims = Some(Value::Array(dims));
    report.details = Some(json!({ "subspaces": entries }));
    Ok(report)
}

fn run_containment(
    cli: &Cli,
    budget: &Budget,
    a_desc: &str,
    b_desc: &str,
    max: usize,
) -> starpi_core::Result<Report> {
    let a = algebra(a_desc)?;
    let b = algebra(b_desc)?;
    let result = check_containment(&a, &b, max, budget, cli.workers)?;

    let argv = normalized_argv(
        cli,
        vec![
            "containment".into(),
            "--a".into(),
            a_desc.into(),
            "--b".into(),
            b_desc.into(),
            "--max".into(),
            max.to_string(),
        ],
    );
    let mut config = base_config(cli, argv);
    config.insert("a".into(), json!(a_desc));
    config.insert("b".into(), json!(b_desc));
    config.insert("max".into(), json!(max));

    let mut report = Report::new("containment", config, &[&a, &b], cli.seed);
    report.verdict = json!(if result.contained { "contained" } else { "not-contained" });
    report.truncated_at = Some(max);
    report.details = Some(serde_json::to_value(&result).expect("serializable"));
    Ok(report)
}

fn run_embed(
    cli: &Cli,
    budget: &Budget,
    from_desc: &str,
    to_desc: &str,
    max: usize,
) -> starpi_core::Result<Report> {
    let from = algebra(from_desc)?;
    let to = algebra(to_desc)?;
    let result = decide(&from, &to, max, budget, cli.workers)?;
    let verification = result.plan().map(|plan| plan.verify(cli.workers));

    let argv = normalized_argv(
        cli,
        vec![
            "embed".into(),
            "--from".into(),
            from_desc.into(),
            "--to".into(),
            to_desc.into(),
            "--max".into(),
            max.to_string(),
        ],
    );
    let mut config = base_config(cli, argv);
    config.insert("from".into(), json!(from_desc));
    config.insert("to".into(), json!(to_desc));
    config.insert("max".into(), json!(max));

    let mut report = Report::new("embed", config, &[&from, &to], cli.seed);
    report.verdict = json!(match result.outcome {
        DecideOutcome::StarEmbedding { .. } => "star-embedding",
        DecideOutcome::AlgebraEmbedding { .. } => "algebra-embedding",
        DecideOutcome::NoConstruction { .. } => "no-construction",
    });
    report.truncated_at = Some(max);
    report.plan = result.plan().map(|p| serde_json::to_value(p).expect("serializable"));
    report.details = Some(json!({
        "decision": serde_json::to_value(&result).expect("serializable"),
        "verification": verification.map(|v| serde_json::to_value(&v).expect("serializable")),
    }));
    Ok(report)
}

fn run_bench(
    cli: &Cli,
    budget: &Budget,
    algebra_desc: &str,
    parity: Parity,
    degree: usize,
    trials: u64,
) -> starpi_core::Result<Report> {
    use starpi_core::eval::{evaluate, evaluate_standard_fast, Assignment};
    use starpi_core::poly::VarRef;

    if degree == 0 {
        return Err(Error::InvalidInput("--degree must be >= 1".into()));
    }
    if trials == 0 {
        return Err(Error::InvalidInput("--trials must be >= 1".into()));
    }
    let alg = algebra(algebra_desc)?;
    let sig = Signature::uniform(parity, degree);
    let poly = standard_poly(&sig);

    // Seeded random parity-projected tuples shared by both evaluators.
    let tuples: Vec<Vec<starpi_core::Element>> = (0..trials)
        .map(|t| {
            (0..degree)
                .map(|slot| random_projected(&alg, parity, cli.seed, t, slot as u64))
                .collect()
        })
        .collect();

    let leibniz_started = Instant::now();
    let leibniz: Vec<starpi_core::Element> = tuples
        .iter()
        .map(|args| {
            let assignment: Assignment = args
                .iter()
                .enumerate()
                .map(|(i, e)| (VarRef::new(i as u32 + 1, parity), e.clone()))
                .collect();
            evaluate(&poly, &alg, &assignment)
        })
        .collect::<starpi_core::Result<_>>()?;
    let leibniz_ms = leibniz_started.elapsed().as_secs_f64() * 1e3;

    let subset_started = Instant::now();
    let subset: Vec<starpi_core::Element> = tuples
        .iter()
        .map(|args| evaluate_standard_fast(&alg, args))
        .collect::<starpi_core::Result<_>>()?;
    let subset_ms = subset_started.elapsed().as_secs_f64() * 1e3;

    // Correctness gate: exact agreement on every instance, before any
    // timing is reported.
    if leibniz != subset {
        return Err(Error::InvalidInput(
            "internal disagreement between evaluation strategies".into(),
        ));
    }

    let combinations_started = Instant::now();
    let combinations =
        check_standard_combinations(&alg, parity, degree, &rat_int(1), budget, cli.workers)?;
    let combinations_ms = combinations_started.elapsed().as_secs_f64() * 1e3;

    // Cross-validate the alternating shortcut against the full scan when
    // the full tuple space fits the budget.
    let dim = alg.space_dim(parity) as u64;
    let full_fits = dim
        .checked_pow(degree as u32)
        .is_some_and(|n| n <= budget.max_tuples);
    let (full_scan_ms, full_verdict) = if full_fits {
        let full_started = Instant::now();
        let full = check_standard_full_scan(&alg, parity, degree, budget, cli.workers)?;
        if full.verdict != combinations.verdict {
            return Err(Error::InvalidInput(
                "internal disagreement between combinations and full scan".into(),
            ));
        }
        (
            Some(full_started.elapsed().as_secs_f64() * 1e3),
            Some(full.verdict),
        )
    } else {
        (None, None)
    };

    let argv = normalized_argv(
        cli,
        vec![
            "bench".into(),
            "--algebra".into(),
            algebra_desc.into(),
            "--parity".into(),
            parity.to_string(),
            "--degree".into(),
            degree.to_string(),
            "--trials".into(),
            trials.to_string(),
        ],
    );
    let mut config = base_config(cli, argv);
    config.insert("algebra".into(), json!(algebra_desc));
    config.insert("parity".into(), json!(parity.to_string()));
    config.insert("degree".into(), json!(degree));
    config.insert("trials".into(), json!(trials));

    let mut report = Report::new("bench", config, &[&alg], cli.seed);
    report.verdict = json!("strategies-agree");
    let mut timings = serde_json::Map::new();
    timings.insert("leibniz_ms".into(), json!(leibniz_ms));
    timings.insert("subset_dp_ms".into(), json!(subset_ms));
    timings.insert("combinations_ms".into(), json!(combinations_ms));
    if let Some(ms) = full_scan_ms {
        timings.insert("full_scan_ms".into(), json!(ms));
    }
    report.timings = Some(timings);
    report.details = Some(json!({
        "instances": trials,
        "standard_degree": degree,
        "combinations_verdict": serde_json::to_value(combinations.verdict).expect("serializable"),
        "full_scan_verdict": full_verdict.map(|v| serde_json::to_value(v).expect("serializable")),
        "full_scan_cross_validated": full_fits,
    }));
    Ok(report)
}

/// Deterministic parity-projected random element for the bench command.
fn random_projected(
    alg: &StarAlgebra,
    parity: Parity,
    seed: u64,
    trial: u64,
    slot: u64,
) -> starpi_core::Element {
    use starpi_core::rat::Rat;
    // splitmix64 over (seed, trial, slot).
    let mut x = seed ^ trial.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ slot.wrapping_mul(0xD1B5_4A32_D192_ED03);
    let mut next = move || {
        x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = x;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    };
    let coords: Vec<Rat> = (0..alg.dim())
        .map(|_| rat_int((next() % 7) as i64 - 3))
        .collect();
    let raw = alg.element_from_coords(&coords).expect("full-length coords");
    match parity {
        Parity::X => raw,
        Parity::Y => alg.decompose(&raw).expect("member").0,
        Parity::Z => alg.decompose(&raw).expect("member").1,
    }
}
