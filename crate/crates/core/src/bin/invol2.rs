use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use invol2::forms::{i_invariant, PfisterForm};
use invol2::scenario::{recheck, run, Certificate, Failure, RunOptions, Scenario};
use invol2::structure::{represents, DecomposedAlgebra, FactorSpec};
use invol2::suite::{run_all, SuiteConfig};
use invol2::{Error, FieldCtx};

const BUDGET_ENV: &str = "INVOL2_DEGREE_BUDGET";

#[derive(Parser)]
#[command(name = "invol2", version, about = "Totally decomposable orthogonal involutions in characteristic 2")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a scenario file and print its certificate.
    Run {
        file: PathBuf,
        #[arg(long)]
        seed: Option<u64>,
        /// Re-verify the witnesses of a certificate produced from this scenario.
        #[arg(long, value_name = "CERT")]
        recheck: Option<PathBuf>,
        /// Write the certificate here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Record per-action wall-clock times (breaks byte-for-byte determinism).
        #[arg(long)]
        timings: bool,
    },
    /// Run the bundled verification suite.
    VerifyPaper {
        #[arg(long, default_value_t = 3)]
        scale: usize,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Pfister invariant and i-invariant of a product of factors,
    /// each written `[alpha,beta)` or `m2t`.
    Pfister {
        #[arg(long, value_delimiter = ',', required = true)]
        vars: Vec<String>,
        #[arg(required = true)]
        factors: Vec<String>,
    },
    /// i-invariant of the Pfister form <<g_1, ..., g_n>>.
    IInvariant {
        #[arg(long, value_delimiter = ',', required = true)]
        vars: Vec<String>,
        #[arg(required = true)]
        gens: Vec<String>,
    },
    /// Whether alpha = x^2 for a nonzero x in F[v_1..v_n], with a witness.
    Represents {
        alpha: String,
        #[arg(long, value_delimiter = ',', required = true)]
        vars: Vec<String>,
        /// `[alpha,beta)` or `m2t`; repeat for each factor.
        #[arg(long = "factor", required = true)]
        factors: Vec<String>,
    },
}

fn budget() -> Result<Option<u32>, Failure> {
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| Failure::Parse(format!("{BUDGET_ENV} must be an integer, got {v:?}"))),
        Err(_) => Ok(None),
    }
}

fn lib_failure(e: Error) -> Failure {
    match e {
        Error::DegreeOverflow { .. } => Failure::DegreeOverflow(e.to_string()),
        Error::Parse(m) => Failure::Parse(m),
        Error::InvalidContext(_) => Failure::Parse(e.to_string()),
        other => Failure::Verification(other.to_string()),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
}

fn field(vars: &[String]) -> Result<FieldCtx, Failure> {
    match budget()? {
        Some(b) => FieldCtx::with_budget(vars, b),
        None => FieldCtx::new(vars),
    }
    .map_err(|e| Failure::Parse(e.to_string()))
}

fn decomposed(vars: &[String], factors: &[String]) -> Result<DecomposedAlgebra, Failure> {
    let k = field(vars)?;
    let specs = factors.iter().map(|f| FactorSpec::parse(&k, f)).collect::<Result<Vec<_>, _>>().map_err(lib_failure)?;
    DecomposedAlgebra::new(&k, &specs).map_err(lib_failure)
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(p) => std::fs::write(p, format!("{text}\n")).map_err(|e| Failure::Parse(format!("{}: {e}", p.display()))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn execute(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Run { file, seed, recheck: cert_path, out, timings } => {
            let scenario = Scenario::from_json(&read(&file)?)?;
            let opts = RunOptions { seed, degree_budget: budget()?, timings };
            if let Some(cp) = cert_path {
                let cert: Certificate =
                    serde_json::from_str(&read(&cp)?).map_err(|e| Failure::Parse(format!("certificate: {e}")))?;
                if cert.scenario != scenario {
                    return Err(Failure::Verification("certificate was produced from a different scenario".into()));
                }
                let report = recheck(&cert, RunOptions { seed: Some(cert.seed), ..opts })?;
                for f in &report.failures {
                    eprintln!("{f}");
                }
                println!("rechecked {} witnesses, {} failures", report.checked, report.failures.len());
                if !report.ok() {
                    return Err(Failure::Verification("certificate did not re-verify".into()));
                }
                return Ok(());
            }
            let cert = run(&scenario, opts)?;
            let text = serde_json::to_string_pretty(&cert).expect("certificate serializes");
            emit(&text, out.as_deref())?;
            for r in cert.results.iter().filter(|r| !r.expectation_met) {
                eprintln!("action {} ({}): expectation not met {}", r.index, r.action, r.error.as_deref().unwrap_or(""));
            }
            if !cert.all_expectations_met {
                return Err(Failure::Verification("some expectations were not met".into()));
            }
            Ok(())
        }
        Command::VerifyPaper { scale, seed, json } => {
            let reports = run_all(&SuiteConfig { seed, scale });
            if json {
                println!("{}", serde_json::to_string_pretty(&reports).expect("reports serialize"));
            } else {
                for r in &reports {
                    println!(
                        "{:>2} {} {:>7} ms  {}: {}",
                        r.id,
                        if r.passed { "PASS" } else { "FAIL" },
                        r.elapsed_ms,
                        r.title,
                        r.detail
                    );
                }
            }
            if reports.iter().all(|r| r.passed) {
                Ok(())
            } else {
                Err(Failure::Verification("some criteria failed".into()))
            }
        }
        Command::Pfister { vars, factors } => {
            let d = decomposed(&vars, &factors)?;
            let pf = d.pfister().map_err(lib_failure)?;
            let gens: Vec<String> = pf.generators().iter().map(|g| g.render()).collect();
            println!("<<{}>>", gens.join(", "));
            println!("i = {}", i_invariant(&pf).map_err(lib_failure)?);
            Ok(())
        }
        Command::IInvariant { vars, gens } => {
            let k = field(&vars)?;
            let gens = gens.iter().map(|g| k.parse(g)).collect::<Result<Vec<_>, _>>().map_err(lib_failure)?;
            let pf = PfisterForm::new(&k, gens).map_err(lib_failure)?;
            println!("{}", i_invariant(&pf).map_err(lib_failure)?);
            Ok(())
        }
        Command::Represents { alpha, vars, factors } => {
            let d = decomposed(&vars, &factors)?;
            let a = d.ctx().parse(&alpha).map_err(lib_failure)?;
            match represents(&d, &a).map_err(lib_failure)?.witness() {
                Some(x) => println!("yes\nx = {}", x.render()),
                None => println!("no"),
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match execute(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("{f}");
            ExitCode::from(f.exit_code() as u8)
        }
    }
}
