use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hlvir::structure::{c_coeff, multiply_p, Partition, Straightener};
use hlvir::suite::{run_criterion, CriterionReport};
use hlvir::vertex::{LambdaVector, RhoSpec};
use hlvir::virasoro::{build_operator, TheoremCase, Verifier, VirasoroSpec};
use hlvir::Error;

#[derive(Parser)]
#[command(name = "hlvir", version, about = "Hall-Littlewood polynomials and Virasoro actions, computed exactly")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Recompute every Q_λ instead of memoizing.
    #[arg(long, global = true)]
    no_cache: bool,
    /// Maximum number of memoized Q_λ per value of ρ.
    #[arg(long, global = true, env = "HLVIR_CACHE_LIMIT")]
    cache_limit: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print Q_λ(t; ρ).
    Q(RhoLambda),
    /// Rewrite Q_λ in the partition-labelled basis.
    Straighten(RhoLambda),
    /// Print the coefficient c_μ(ρ) of Q_μ in p_|μ|.
    Coeff {
        #[arg(long, allow_hyphen_values = true)]
        rho: RhoSpec,
        #[arg(long)]
        mu: String,
    },
    /// Expand p_r Q_λ as a combination of Q labels.
    Mulp {
        #[arg(long)]
        r: u32,
        #[command(flatten)]
        at: RhoLambda,
    },
    /// Apply an operator such as `L:n=2,m=-1` or `LS:m=2` to Q_λ.
    Apply {
        #[arg(long)]
        op: VirasoroSpec,
        #[command(flatten)]
        at: RhoLambda,
    },
    /// Compare both sides of one identity.
    Verify(VerifyArgs),
    /// Run the acceptance sweep.
    Selftest {
        #[arg(long, default_value = "desk")]
        suite: String,
        /// Comma-separated criterion numbers (default: all).
        #[arg(long)]
        criteria: Option<String>,
        /// Include wall-clock times.
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Args)]
struct RhoLambda {
    #[arg(long, allow_hyphen_values = true)]
    rho: RhoSpec,
    /// Comma-separated integers; empty for λ = ().
    #[arg(long, allow_hyphen_values = true, default_value = "")]
    lambda: LambdaVector,
}

#[derive(Args)]
struct VerifyArgs {
    /// T1.1, T1.2, T3.3, TA.3, TA.4, bracket, mult, deriv, remarkA, baseA,
    /// vexp, schur-norm, exchange, pb, perpb, lhatb, ltildeb, homogeneous,
    /// schur-lhatb, schur-lb, or `json` with --spec.
    #[arg(long)]
    case: String,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long, allow_hyphen_values = true)]
    m: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<LambdaVector>,
    #[arg(long, allow_hyphen_values = true)]
    i: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    j: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    r: Option<i64>,
    #[arg(long)]
    k: Option<u32>,
    #[arg(long, allow_hyphen_values = true)]
    s: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    rho: Option<RhoSpec>,
    #[arg(long, default_value_t = 6)]
    degree: u32,
    /// A full case as JSON, e.g. {"theorem":"T1.1","n":2,"m":1,"lambda":[3,1]}.
    #[arg(long)]
    spec: Option<String>,
}

const SHOWN_FAILURES: usize = 20;

enum Failure {
    Inequality,
    Lib(Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::SingularCoefficient { .. }
        | Error::Pole { .. }
        | Error::UnsupportedExpansion { .. }
        | Error::DivisionByZero => 3,
        Error::DegeneratePairing { .. } => 4,
        Error::AdjointUndefined { .. } => 5,
        Error::InvalidParameter(_) | Error::Parse(_) | Error::FieldMismatch { .. } => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Inequality) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn emit(cli: &Cli, text: impl AsRef<str>, value: Value) {
    match cli.format {
        Format::Text => println!("{}", text.as_ref()),
        Format::Json => println!("{}", serde_json::to_string(&value).expect("JSON")),
    }
}

fn verifier(cli: &Cli) -> Verifier {
    Verifier::with_options(!cli.no_cache, cli.cache_limit)
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Q(at) => {
            let v = verifier(cli);
            let q = v.cache(&at.rho).hl_q(at.lambda.parts());
            emit(
                cli,
                q.to_text(),
                json!({"rho": at.rho.to_string(), "lambda": at.lambda.parts(), "poly": q.to_json()}),
            );
        }
        Command::Straighten(at) => {
            let q = Straightener::new(at.rho.clone()).straighten(&at.lambda);
            emit(
                cli,
                q.to_text(),
                json!({"rho": at.rho.to_string(), "lambda": at.lambda.parts(), "combination": q.to_json()}),
            );
        }
        Command::Coeff { rho, mu } => {
            let parts: LambdaVector = mu.parse()?;
            let mu = Partition::from_lambda(&parts)?;
            let c = c_coeff(&mu, rho)?;
            emit(
                cli,
                c.to_string(),
                json!({"rho": rho.to_string(), "mu": mu.parts(), "coeff": c.to_string()}),
            );
        }
        Command::Mulp { r, at } => {
            let q = multiply_p(*r, &at.lambda, &at.rho)?;
            emit(
                cli,
                q.to_text(),
                json!({"rho": at.rho.to_string(), "r": r, "lambda": at.lambda.parts(), "combination": q.to_json()}),
            );
        }
        Command::Apply { op, at } => {
            let v = verifier(cli);
            let cache = v.cache(&at.rho);
            let operator = build_operator(op, cache.field())?;
            let image = operator.apply(&cache.hl_q(at.lambda.parts()))?;
            emit(
                cli,
                image.to_text(),
                json!({"op": op.to_string(), "rho": at.rho.to_string(), "lambda": at.lambda.parts(), "poly": image.to_json()}),
            );
        }
        Command::Verify(args) => {
            let case = case_from_args(args)?;
            let verdict = verifier(cli).verify(&case)?;
            let mut text = format!(
                "case: {}\nequal: {}\nlhs: {}\nrhs: {}\ndiff: {}",
                serde_json::to_string(&case).expect("JSON"),
                verdict.equal,
                verdict.lhs,
                verdict.rhs,
                verdict.diff
            );
            if let Some(c) = &verdict.central {
                text.push_str(&format!("\ncentral: {c}"));
            }
            emit(cli, text, verdict.to_json());
            if !verdict.equal {
                return Err(Failure::Inequality);
            }
        }
        Command::Selftest { suite, criteria, timings } => {
            if suite != "desk" {
                return Err(Failure::Usage(format!("unknown suite {suite:?}; available: desk")));
            }
            let ids: Vec<u32> = match criteria {
                None => (1..=11).collect(),
                Some(list) => list
                    .split(',')
                    .map(|x| {
                        x.trim()
                            .parse()
                            .ok()
                            .filter(|id| (1..=11).contains(id))
                            .ok_or_else(|| Failure::Usage(format!("bad criterion {x:?}")))
                    })
                    .collect::<Result<_, _>>()?,
            };
            let start = Instant::now();
            let v = verifier(cli);
            let reports: Vec<CriterionReport> = ids.iter().map(|&id| run_criterion(id, &v)).collect();
            let passed = reports.iter().all(|r| r.passed);
            emit_selftest(cli, &reports, *timings, start.elapsed().as_secs_f64());
            if !passed {
                return Err(Failure::Inequality);
            }
        }
    }
    Ok(())
}

fn emit_selftest(cli: &Cli, reports: &[CriterionReport], timings: bool, total: f64) {
    let failed = reports.iter().filter(|r| !r.passed).count();
    let checks: usize = reports.iter().map(|r| r.checks).sum();
    let mut lines = Vec::new();
    let mut items = Vec::new();
    for r in reports {
        let mut line = r.line();
        if timings {
            line.push_str(&format!(" [{:.2}s]", r.elapsed.as_secs_f64()));
        }
        lines.push(line);
        lines.extend(r.failures.iter().take(SHOWN_FAILURES).map(|f| format!("    {f}")));
        if r.failures.len() > SHOWN_FAILURES {
            lines.push(format!("    ... and {} more", r.failures.len() - SHOWN_FAILURES));
        }
        lines.extend(r.notes.iter().map(|n| format!("    note: {n}")));
        let mut item = serde_json::to_value(r).expect("JSON");
        if timings {
            item["elapsed"] = json!(r.elapsed.as_secs_f64());
        }
        items.push(item);
    }
    let mut summary = format!(
        "summary: {} criteria, {} passed, {} failed, {} checks",
        reports.len(),
        reports.len() - failed,
        failed,
        checks
    );
    if timings {
        summary.push_str(&format!(", {total:.2}s"));
    }
    lines.push(summary);
    let mut value = json!({"suite": "desk", "passed": failed == 0, "failed": failed, "checks": checks, "criteria": items});
    if timings {
        value["elapsed"] = json!(total);
    }
    emit(cli, lines.join("\n"), value);
}

fn case_from_args(a: &VerifyArgs) -> Result<TheoremCase, Failure> {
    let need = |name: &str| Failure::Usage(format!("--case {} needs --{name}", a.case));
    let n = || a.n.ok_or_else(|| need("n"));
    let m = || a.m.ok_or_else(|| need("m"));
    let r = || a.r.ok_or_else(|| need("r"));
    let k = || a.k.ok_or_else(|| need("k"));
    let lambda = || a.lambda.clone().ok_or_else(|| need("lambda"));
    let rho = || a.rho.clone().ok_or_else(|| need("rho"));
    let positive = |x: i64| u32::try_from(x).map_err(|_| Failure::Usage(format!("expected r ≥ 0, got {x}")));
    let degree = a.degree;
    let case = match a.case.as_str() {
        "T1.1" => TheoremCase::T1_1 { n: n()?, m: m()?, lambda: lambda()? },
        "T1.2" => TheoremCase::T1_2 { n: n()?, m: m()?, lambda: lambda()? },
        "T3.3" => TheoremCase::T3_3 { n: n()?, m: m()?, lambda: lambda()? },
        "TA.3" => TheoremCase::TA3 { m: m()?, lambda: lambda()? },
        "TA.4" => TheoremCase::TA4 { m: m()?, lambda: lambda()? },
        "baseA" => TheoremCase::BaseA { m: m()? },
        "remarkA" => TheoremCase::RemarkA { m: m()? },
        "bracket" => TheoremCase::Bracket {
            n: n()?,
            i: a.i.ok_or_else(|| need("i"))?,
            j: a.j.ok_or_else(|| need("j"))?,
            degree,
        },
        "mult" => TheoremCase::MultFormula { r: positive(r()?)?, lambda: lambda()?, rho: rho()? },
        "deriv" => TheoremCase::DerivFormula { r: positive(r()?)?, lambda: lambda()?, rho: rho()? },
        "vexp" => TheoremCase::VExpansion { n: n()?, m: m()?, lambda: lambda()? },
        "schur-norm" => TheoremCase::SchurNormalization { m: m()?, degree },
        "exchange" => TheoremCase::Exchange {
            m: m()?,
            s: a.s.ok_or_else(|| need("s"))?,
            rho: rho()?,
            degree,
        },
        "pb" => TheoremCase::PowerSumB { k: k()?, r: r()?, rho: rho()?, degree },
        "perpb" => TheoremCase::PerpB { k: k()?, r: r()?, rho: rho()?, degree },
        "lhatb" => TheoremCase::LhatB { n: n()?, m: m()?, r: r()?, degree },
        "ltildeb" => TheoremCase::LtildeB { n: n()?, m: m()?, r: r()?, degree },
        "homogeneous" => TheoremCase::HomogeneousIdentity { r: r()?, rho: rho()?, degree },
        "schur-lhatb" => TheoremCase::SchurLhatB { m: m()?, r: r()?, degree },
        "schur-lb" => TheoremCase::SchurLB { m: m()?, r: r()?, degree },
        "json" => {
            let text = a.spec.as_deref().ok_or_else(|| need("spec"))?;
            serde_json::from_str(text).map_err(|e| Failure::Usage(format!("bad case JSON: {e}")))?
        }
        other => return Err(Failure::Usage(format!("unknown case {other:?}"))),
    };
    Ok(case)
}
