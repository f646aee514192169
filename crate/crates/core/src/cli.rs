//! Command-line front end. Every invocation writes one JSON document.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 verification or
//! classification failure, 3 budget exceeded.

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::classify::{are_isomorphic_family, classify};
use crate::codim::{check_bound, DEFAULT_BUDGET};
use crate::construct::{iso_equivdef, iso_shift, verify_iso, Family, FamilyParams};
use crate::cyclotomic::{parse_scalar, CyclotomicField};
use crate::error::Error;
use crate::exactla::Mat;
use crate::hmod::HModuleLie;
use crate::liealg::{builtin, LieAlgebra, DEFAULT_SEED};
use crate::report::{Check, Report};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_FAILURE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "taftlie", version, about = "Lie algebras with a Taft algebra action")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a family member and print it as JSON.
    Construct(Common),
    /// Check every axiom and identity that applies.
    Verify(Common),
    /// Identify the canonical case and extract its parameters.
    Classify(Common),
    /// Compute c_n^H and check the upper bound.
    Codim {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
    },
    /// Build and verify explicit isomorphisms, or compare two L_alpha members.
    Iso {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = IsoMode::Equivdef)]
        mode: IsoMode,
        #[arg(long, default_value_t = 0)]
        k: usize,
        /// Second scalar for `--mode compare`.
        #[arg(long, allow_hyphen_values = true)]
        scalar2: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum IsoMode {
    Equivdef,
    Shift,
    Compare,
}

#[derive(Args, Debug)]
struct Common {
    #[arg(long)]
    family: Option<String>,
    /// Built-in simple algebra: sl2, sl3, sl4.
    #[arg(long = "B")]
    b: Option<String>,
    /// LieAlgebra JSON file used as B.
    #[arg(long = "B-file")]
    b_file: Option<PathBuf>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    scalar: Option<String>,
    /// HModuleLie JSON file, instead of family parameters.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Include wall-clock time in the report.
    #[arg(long)]
    timing: bool,
}

enum Failure {
    Usage(String),
    Report(i32, Value),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Verification { check, witness } => Failure::Report(
                EXIT_FAILURE,
                json!({
                    "status": "fail",
                    "error": format!("verification failed: {check}"),
                    "checks": [Check::fail(check, witness)],
                }),
            ),
            Error::Precondition(msg) => Failure::Report(
                EXIT_FAILURE,
                json!({ "status": "fail", "error": format!("precondition violated: {msg}") }),
            ),
            Error::BudgetExceeded { required, budget } => Failure::Report(
                EXIT_BUDGET,
                json!({
                    "status": "budget_exceeded",
                    "required": required.to_string(),
                    "budget": budget.to_string(),
                }),
            ),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = std::result::Result<(i32, Value), Failure>;

impl Common {
    fn params(&self) -> std::result::Result<FamilyParams, Failure> {
        let family: Family = self
            .family
            .as_deref()
            .ok_or_else(|| Failure::Usage("--family or --input is required".into()))?
            .parse()?;
        let m = self.m.ok_or_else(|| Failure::Usage("--m is required".into()))?;
        let field = CyclotomicField::get(m)?;
        let b = match (&self.b, &self.b_file) {
            (Some(name), None) => builtin(name, &field)?,
            (None, Some(path)) => {
                let text = std::fs::read_to_string(path)?;
                let b = LieAlgebra::from_json(&serde_json::from_str(&text)?)?;
                if b.conductor() != m {
                    return Err(Error::ConductorMismatch {
                        left: m,
                        right: b.conductor(),
                    }
                    .into());
                }
                b
            }
            _ => return Err(Failure::Usage("exactly one of --B and --B-file is required".into())),
        };
        let scalar = parse_scalar(
            &field,
            self.scalar
                .as_deref()
                .ok_or_else(|| Failure::Usage("--scalar is required".into()))?,
        )?;
        Ok(FamilyParams::new(family, b, m, scalar)?)
    }

    fn module(&self) -> std::result::Result<(HModuleLie, Option<FamilyParams>), Failure> {
        if let Some(path) = &self.input {
            if self.family.is_some() {
                return Err(Failure::Usage("--input and --family are exclusive".into()));
            }
            let text = std::fs::read_to_string(path)?;
            let value: Value = serde_json::from_str(&text)?;
            return Ok((HModuleLie::from_json(&value)?, None));
        }
        let p = self.params()?;
        Ok((p.build()?, Some(p)))
    }

    fn describe(&self, params: &Option<FamilyParams>) -> Value {
        match params {
            Some(p) => json!({
                "family": p.family.name(),
                "B": self.b.clone().unwrap_or_else(|| "file".into()),
                "m": p.m,
                "scalar": p.scalar.to_string(),
            }),
            None => json!({ "input": self.input.as_ref().map(|p| p.display().to_string()) }),
        }
    }
}

fn status_code(passed: bool) -> i32 {
    if passed {
        EXIT_OK
    } else {
        EXIT_FAILURE
    }
}

fn verify_report(m: &HModuleLie, seed: u64, family: bool) -> Result<Report, Error> {
    let mut report = m.lie().check_lie_axioms();
    report.extend(m.verify_module_axioms());
    if m.taft_order().is_some() {
        report.extend(m.verify_graded_lemmas_with_seed(seed)?);
    }
    if family {
        let s = m.is_h_simple_with_seed(seed);
        report.push(if s.is_absolutely_simple() {
            Check::pass("H-simple").with_detail(s.to_json())
        } else {
            Check::fail("H-simple", s.to_json())
        });
    }
    Ok(report)
}

fn execute(cmd: &Command) -> Outcome {
    match cmd {
        Command::Construct(c) => {
            let (m, p) = c.module()?;
            Ok((
                EXIT_OK,
                json!({ "command": "construct", "params": c.describe(&p), "module": m.to_json() }),
            ))
        }
        Command::Verify(c) => {
            let (m, p) = c.module()?;
            let report = verify_report(&m, c.seed, p.is_some())?;
            Ok((
                status_code(report.passed()),
                json!({
                    "command": "verify",
                    "params": c.describe(&p),
                    "seed": c.seed,
                    "passed": report.passed(),
                    "checks": report,
                }),
            ))
        }
        Command::Classify(c) => {
            let (m, p) = c.module()?;
            let r = classify(&m)?;
            Ok((
                status_code(r.is_recognized()),
                json!({ "command": "classify", "params": c.describe(&p), "result": r.to_json() }),
            ))
        }
        Command::Codim { common, n, budget } => {
            let (m, p) = common.module()?;
            let (result, report) = check_bound(&m, *n, *budget)?;
            let mut doc = json!({
                "command": "codim",
                "params": common.describe(&p),
                "n": result.n,
                "c_n": result.c_n,
                "bound": result.bound.to_string(),
                "checks": report,
            });
            if report.passed() {
                doc["passed"] = json!(true);
            }
            Ok((status_code(report.passed()), doc))
        }
        Command::Iso {
            common,
            mode,
            k,
            scalar2,
        } => {
            let p = common.params()?;
            match mode {
                IsoMode::Equivdef => {
                    let iso = iso_equivdef(&p.b, p.m, &p.scalar)?;
                    let report = verify_iso(&iso);
                    Ok((
                        status_code(report.passed()),
                        json!({
                            "command": "iso",
                            "mode": "equivdef",
                            "params": common.describe(&Some(p.clone())),
                            "gamma": crate::classify::extract_gamma(&iso.source)?.to_string(),
                            "matrix": iso.matrix.to_wire(),
                            "checks": report,
                        }),
                    ))
                }
                IsoMode::Shift => {
                    let psi = Mat::identity(p.b.field(), p.b.dim());
                    let iso = iso_shift(&p.b, p.m, &p.scalar, *k, &psi)?;
                    let report = verify_iso(&iso);
                    let target = &p.scalar * &p.b.field().zeta_pow(*k as i64);
                    Ok((
                        status_code(report.passed()),
                        json!({
                            "command": "iso",
                            "mode": "shift",
                            "params": common.describe(&Some(p.clone())),
                            "k": k,
                            "target_scalar": target.to_string(),
                            "matrix": iso.matrix.to_wire(),
                            "checks": report,
                        }),
                    ))
                }
                IsoMode::Compare => {
                    let s2 = scalar2
                        .as_deref()
                        .ok_or_else(|| Failure::Usage("--scalar2 is required".into()))?;
                    let q = FamilyParams::new(p.family, p.b.clone(), p.m, parse_scalar(p.b.field(), s2)?)?;
                    let cmp = are_isomorphic_family(&p, &q)?;
                    Ok((
                        EXIT_OK,
                        json!({
                            "command": "iso",
                            "mode": "compare",
                            "params": common.describe(&Some(p.clone())),
                            "scalar2": q.scalar.to_string(),
                            "result": cmp.to_json(),
                        }),
                    ))
                }
            }
        }
    }
}

fn common_of(cmd: &Command) -> &Common {
    match cmd {
        Command::Construct(c) | Command::Verify(c) | Command::Classify(c) => c,
        Command::Codim { common, .. } | Command::Iso { common, .. } => common,
    }
}

fn emit(doc: &Value, common: &Common, out: &mut dyn Write) -> std::io::Result<()> {
    let mut text = serde_json::to_string_pretty(doc).expect("serializable");
    text.push('\n');
    match &common.out {
        Some(path) => std::fs::write(path, text),
        None => out.write_all(text.as_bytes()),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let common = common_of(&cli.command);
    let start = Instant::now();
    let (code, mut doc) = match execute(&cli.command) {
        Ok(r) => r,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_USAGE;
        }
        Err(Failure::Report(code, doc)) => (code, doc),
    };
    if common.timing {
        doc["elapsed"] = json!(start.elapsed().as_secs_f64());
    }
    if let Err(e) = emit(&doc, common, out) {
        let _ = writeln!(err, "error: {e}");
        return EXIT_USAGE;
    }
    code
}
