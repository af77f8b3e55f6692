//! Command-line driver.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage error, 3 internal
//! failure (including a pole hit while specializing).

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::Error;
use crate::exactalg::json::ratqt_to_json;
use crate::exactalg::{monomial_ratio, LaurentQ, RatQT, TSubst};
use crate::invariants::{self, CableSpec, Convention, Family};
use crate::joracle::oracle_jones;
use crate::macdonald::{macdonald_poly, sign_macdonald_poly, SymPoly};
use crate::selftest;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConventionArg {
    Topological,
    Newton,
}

impl From<ConventionArg> for Convention {
    fn from(c: ConventionArg) -> Self {
        match c {
            ConventionArg::Topological => Convention::Topological,
            ConventionArg::Newton => Convention::Newton,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TorusFamily {
    Cherednik,
    Sign,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VerifyFamily {
    Cherednik,
    Sign,
    Iterated,
    Cd,
}

#[derive(Debug, Parser)]
#[command(name = "dahaknot", version, about = "Exact DAHA polynomials of torus knots and iterated cables")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: Format,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<std::path::PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Macdonald polynomial p_n in the monomial basis m_k = X^k + X^-k.
    Macdonald {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "cherednik")]
        family: TorusFamily,
    },
    /// Torus knot polynomial of one pair.
    Torus {
        #[arg(long)]
        n: i64,
        #[arg(long, allow_hyphen_values = true)]
        r: i64,
        #[arg(long, allow_hyphen_values = true)]
        s: i64,
        #[arg(long, value_enum, default_value = "cherednik")]
        family: TorusFamily,
    },
    /// Iterated cable polynomial J_n(r, s; q, t).
    Iterated {
        #[arg(long)]
        n: i64,
        /// Pairs such as "2,3;2,5", companion first.
        #[arg(long, allow_hyphen_values = true)]
        pairs: String,
        #[arg(long, value_enum, default_value = "topological")]
        convention: ConventionArg,
    },
    /// Newton-pair polynomial JD_n(r, s; q, t).
    Cd {
        #[arg(long)]
        n: i64,
        #[arg(long, allow_hyphen_values = true)]
        pairs: String,
        #[arg(long, value_enum, default_value = "newton")]
        convention: ConventionArg,
    },
    /// Colored Jones polynomial from the cabling sum formula.
    Oracle {
        #[arg(long)]
        n: i64,
        #[arg(long, allow_hyphen_values = true)]
        pairs: String,
        #[arg(long, value_enum, default_value = "topological")]
        convention: ConventionArg,
    },
    /// Specialize a family and compare it with the oracle.
    Verify {
        #[arg(long)]
        n: i64,
        #[arg(long, allow_hyphen_values = true)]
        pairs: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        r: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        s: Option<i64>,
        #[arg(long, value_enum, default_value = "topological")]
        convention: ConventionArg,
        /// Defaults to `iterated` for topological pairs and `cd` for Newton pairs.
        #[arg(long, value_enum)]
        family: Option<VerifyFamily>,
        #[arg(long, hide = true, default_value_t = 0, allow_hyphen_values = true)]
        prefactor_shift: i64,
    },
    /// Run the invariant checks of every module.
    Selftest,
}

/// What to run, after validation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Job {
    Macdonald { n: usize, sign: bool },
    Compute { family: Family, n: usize, spec: CableSpec },
    Oracle { n: usize, spec: CableSpec },
    Verify { family: Family, n: usize, spec: CableSpec, prefactor_shift: i64 },
    Selftest,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub job: Job,
    pub format: Format,
    pub output: Option<std::path::PathBuf>,
}

#[derive(Debug)]
pub enum ArgError {
    /// Help or version output requested; not a failure.
    Display(String),
    Usage(String),
}

fn color(n: i64) -> Result<usize, ArgError> {
    if n < 1 {
        return Err(ArgError::Usage(format!("--n {n}: the color must be at least 1")));
    }
    Ok(n as usize)
}

fn spec(text: &str, convention: ConventionArg) -> Result<CableSpec, ArgError> {
    CableSpec::parse(text, convention.into()).map_err(|e| ArgError::Usage(format!("--pairs {text}: {e}")))
}

fn torus_spec(r: i64, s: i64) -> Result<CableSpec, ArgError> {
    CableSpec::topological(&[(r, s)]).map_err(|_| ArgError::Usage(format!("--r {r} --s {s}: gcd({r},{s}) != 1")))
}

pub fn parse_args<I, T>(argv: I) -> Result<RunConfig, ArgError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv).map_err(|e| match e.kind() {
        clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
            ArgError::Display(e.to_string())
        }
        _ => ArgError::Usage(e.to_string()),
    })?;
    let job = match cli.command {
        Command::Macdonald { n, family } => Job::Macdonald { n, sign: family == TorusFamily::Sign },
        Command::Torus { n, r, s, family } => {
            let family = match family {
                TorusFamily::Cherednik => Family::Cherednik,
                TorusFamily::Sign => Family::Sign,
            };
            Job::Compute { family, n: color(n)?, spec: torus_spec(r, s)? }
        }
        Command::Iterated { n, pairs, convention } => {
            Job::Compute { family: Family::Iterated, n: color(n)?, spec: spec(&pairs, convention)? }
        }
        Command::Cd { n, pairs, convention } => {
            if convention != ConventionArg::Newton {
                return Err(ArgError::Usage("cd takes Newton pairs (--convention newton)".into()));
            }
            Job::Compute { family: Family::Cd, n: color(n)?, spec: spec(&pairs, convention)? }
        }
        Command::Oracle { n, pairs, convention } => Job::Oracle { n: color(n)?, spec: spec(&pairs, convention)? },
        Command::Verify { n, pairs, r, s, convention, family, prefactor_shift } => {
            let n = color(n)?;
            let family = match family {
                Some(VerifyFamily::Cherednik) => Family::Cherednik,
                Some(VerifyFamily::Sign) => Family::Sign,
                Some(VerifyFamily::Iterated) => Family::Iterated,
                Some(VerifyFamily::Cd) => Family::Cd,
                None if convention == ConventionArg::Newton => Family::Cd,
                None => Family::Iterated,
            };
            let spec = match (pairs, r, s) {
                (Some(p), None, None) => spec(&p, convention)?,
                (None, Some(r), Some(s)) => torus_spec(r, s)?,
                _ => return Err(ArgError::Usage("give either --pairs or both --r and --s".into())),
            };
            let torus = matches!(family, Family::Cherednik | Family::Sign);
            if torus && spec.pairs().len() != 1 {
                return Err(ArgError::Usage(format!("{} takes a single pair", family.name())));
            }
            if family == Family::Cd && spec.convention() != Convention::Newton {
                return Err(ArgError::Usage("cd takes Newton pairs (--convention newton)".into()));
            }
            Job::Verify { family, n, spec, prefactor_shift }
        }
        Command::Selftest => Job::Selftest,
    };
    Ok(RunConfig { job, format: cli.format, output: cli.output })
}

/// Comparison of a `t`-specialization with the oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub matched: bool,
    pub sign: i32,
    pub monomial_k: Option<i64>,
    pub rule: TSubst,
    pub specialized: LaurentQ,
    pub oracle: LaurentQ,
}

impl VerifyReport {
    fn json(&self) -> Value {
        json!({ "match": self.matched, "sign": self.sign, "monomial_k": self.monomial_k })
    }

    /// Terms where `specialized` and `sign·oracle` differ.
    pub fn diff(&self) -> Vec<String> {
        let target = if self.sign < 0 { self.oracle.neg() } else { self.oracle.clone() };
        let mut exps: Vec<i64> =
            self.specialized.terms().map(|(e, _)| e).chain(target.terms().map(|(e, _)| e)).collect();
        exps.sort_unstable();
        exps.dedup();
        exps.into_iter()
            .filter_map(|e| {
                let (a, b) = (self.specialized.coeff(e), target.coeff(e));
                (a != b).then(|| format!("q^{e}: computed {a}, oracle {b}"))
            })
            .collect()
    }
}

pub fn run_verify(
    family: Family,
    n: usize,
    spec: &CableSpec,
    prefactor_shift: i64,
) -> crate::Result<(RatQT, VerifyReport)> {
    let value = invariants::compute(family, n, spec)?.value;
    let shifted = value.mul_monomial(prefactor_shift, 0);
    let rule = if family == Family::Sign { TSubst::One } else { TSubst::MinusQ2 };
    let specialized = LaurentQ::from_ratqt(&shifted.specialize_t(rule)?)?;
    let oracle = oracle_jones(n as i64, spec)?;
    let (matched, sign, monomial_k) = if family == Family::Cd {
        match monomial_ratio(&specialized, &oracle) {
            Some((sign, k)) => (true, sign, Some(k)),
            None => (false, 1, None),
        }
    } else if specialized == oracle {
        (true, 1, None)
    } else if specialized == oracle.neg() {
        (true, -1, None)
    } else {
        (false, 1, None)
    };
    Ok((value, VerifyReport { matched, sign, monomial_k, rule, specialized, oracle }))
}

fn pairs_json(spec: &CableSpec) -> Value {
    Value::Array(spec.pairs().iter().map(|&(r, s)| json!([r, s])).collect())
}

fn header(out: &mut String, family: &str, n: usize, spec: &CableSpec) {
    let pairs: Vec<String> = spec.pairs().iter().map(|(r, s)| format!("{r},{s}")).collect();
    let _ = writeln!(out, "family: {family}");
    let _ = writeln!(out, "n: {n}");
    let _ = writeln!(out, "pairs: {}", pairs.join(";"));
    let _ = writeln!(out, "convention: {}", spec.convention().name());
}

fn record(family: &str, n: usize, spec: &CableSpec, value: &RatQT, verify: Value) -> Value {
    json!({
        "family": family,
        "n": n,
        "pairs": pairs_json(spec),
        "convention": spec.convention().name(),
        "value": ratqt_to_json(value),
        "verify": verify,
    })
}

fn render_sym(p: &SymPoly, n: usize, sign: bool, format: Format) -> String {
    let family = if sign { "sign-macdonald" } else { "macdonald" };
    match format {
        Format::Json => {
            let coeffs: Vec<Value> = p.coeffs().map(|(k, c)| json!([k, ratqt_to_json(c)])).collect();
            let v = json!({ "family": family, "n": n, "basis": "m", "coeffs": coeffs });
            format!("{}\n", serde_json::to_string_pretty(&v).unwrap_or_default())
        }
        Format::Text => {
            let mut out = format!("family: {family}\nn: {n}\n");
            for (k, c) in p.coeffs().rev() {
                let _ = writeln!(out, "m_{k}: {c}");
            }
            out
        }
    }
}

fn to_json_text(v: &Value) -> String {
    format!("{}\n", serde_json::to_string_pretty(v).unwrap_or_default())
}

fn exit_for(e: &Error) -> i32 {
    match e {
        Error::InvalidSpec(_) | Error::NotCoprime { .. } | Error::Parse(_) => EXIT_USAGE,
        _ => EXIT_INTERNAL,
    }
}

/// Executes a validated config. Returns the report and the exit code.
pub fn execute(cfg: &RunConfig) -> (String, i32) {
    match execute_inner(cfg) {
        Ok(r) => r,
        Err(e @ Error::Pole { .. }) => (format!("pole during specialization: {e}\n"), EXIT_INTERNAL),
        Err(e) => (format!("error: {e}\n"), exit_for(&e)),
    }
}

fn execute_inner(cfg: &RunConfig) -> crate::Result<(String, i32)> {
    let format = cfg.format;
    let out = match &cfg.job {
        Job::Macdonald { n, sign } => {
            let p = if *sign { sign_macdonald_poly(*n)? } else { macdonald_poly(*n)? };
            (render_sym(&p, *n, *sign, format), EXIT_OK)
        }
        Job::Compute { family, n, spec } => {
            let v = invariants::compute(*family, *n, spec)?.value;
            let text = match format {
                Format::Json => to_json_text(&record(family.name(), *n, spec, &v, Value::Null)),
                Format::Text => {
                    let mut s = String::new();
                    header(&mut s, family.name(), *n, spec);
                    let _ = writeln!(s, "value: {v}");
                    s
                }
            };
            (text, EXIT_OK)
        }
        Job::Oracle { n, spec } => {
            let v = oracle_jones(*n as i64, spec)?;
            let text = match format {
                Format::Json => to_json_text(&record("oracle", *n, spec, &v.to_ratqt(), Value::Null)),
                Format::Text => {
                    let mut s = String::new();
                    header(&mut s, "oracle", *n, spec);
                    let _ = writeln!(s, "value: {v}");
                    s
                }
            };
            (text, EXIT_OK)
        }
        Job::Verify { family, n, spec, prefactor_shift } => {
            let (value, rep) = run_verify(*family, *n, spec, *prefactor_shift)?;
            let code = if rep.matched { EXIT_OK } else { EXIT_MISMATCH };
            let text = match format {
                Format::Json => {
                    let mut v = record(family.name(), *n, spec, &value, rep.json());
                    if !rep.matched {
                        v["diff"] = json!(rep.diff());
                    }
                    to_json_text(&v)
                }
                Format::Text => {
                    let mut s = String::new();
                    header(&mut s, family.name(), *n, spec);
                    let _ = writeln!(s, "value: {value}");
                    let _ = writeln!(s, "specialized ({}): {}", rep.rule.describe(), rep.specialized);
                    let _ = writeln!(s, "oracle: {}", rep.oracle);
                    if rep.matched {
                        match rep.monomial_k {
                            Some(k) => {
                                let _ = writeln!(s, "verify: match sign={} k={k}", rep.sign);
                            }
                            None => {
                                let _ = writeln!(s, "verify: match sign={}", rep.sign);
                            }
                        }
                    } else {
                        let _ = writeln!(s, "verify: MISMATCH");
                        for line in rep.diff() {
                            let _ = writeln!(s, "  {line}");
                        }
                    }
                    s
                }
            };
            (text, code)
        }
        Job::Selftest => {
            let outcomes = selftest::run_all();
            let code = if outcomes.iter().all(|o| o.passed) { EXIT_OK } else { EXIT_INTERNAL };
            let text = match format {
                Format::Text => selftest::render(&outcomes),
                Format::Json => {
                    let rows: Vec<Value> = outcomes
                        .iter()
                        .map(|o| json!({ "check": o.name, "passed": o.passed, "detail": o.detail }))
                        .collect();
                    to_json_text(&Value::Array(rows))
                }
            };
            (text, code)
        }
    };
    Ok(out)
}

/// Full entry point: parse, execute, write. Returns the process exit code.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cfg = match parse_args(argv) {
        Ok(c) => c,
        Err(ArgError::Display(text)) => {
            let _ = write!(stdout, "{text}");
            return EXIT_OK;
        }
        Err(ArgError::Usage(msg)) => {
            let _ = writeln!(stderr, "{}", msg.trim_end());
            return EXIT_USAGE;
        }
    };
    let (text, code) = execute(&cfg);
    let target: &mut dyn Write = if code == EXIT_OK || code == EXIT_MISMATCH { stdout } else { stderr };
    match &cfg.output {
        Some(path) if code == EXIT_OK || code == EXIT_MISMATCH => {
            if let Err(e) = std::fs::write(path, &text) {
                let _ = writeln!(stderr, "cannot write {}: {e}", path.display());
                return EXIT_INTERNAL;
            }
        }
        _ => {
            let _ = write!(target, "{text}");
        }
    }
    code
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> Result<RunConfig, ArgError> {
        parse_args(std::iter::once("dahaknot").chain(s.split_whitespace()))
    }

    #[test]
    fn parses_iterated() {
        let cfg = parse("iterated --n 2 --pairs 2,3;2,5 --convention topological").unwrap();
        let spec = CableSpec::topological(&[(2, 3), (2, 5)]).unwrap();
        assert_eq!(cfg.job, Job::Compute { family: Family::Iterated, n: 2, spec });
    }

    #[test]
    fn rejects_non_coprime_torus() {
        match parse("torus --n 2 --r 2 --s 4") {
            Err(ArgError::Usage(m)) => assert!(m.contains("gcd(2,4)"), "{m}"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn verify_newton_defaults_to_cd() {
        let cfg = parse("verify --n 2 --pairs 2,3 --convention newton").unwrap();
        assert!(matches!(cfg.job, Job::Verify { family: Family::Cd, .. }));
    }

    #[test]
    fn rejects_bad_tokens() {
        for bad in ["iterated --n 0 --pairs 2,3", "iterated --n 2 --pairs 2;3", "iterated --n 2 --pairs 2,x", "bogus"] {
            assert!(matches!(parse(bad), Err(ArgError::Usage(_))), "{bad}");
        }
    }

    #[test]
    fn negative_pairs_parse() {
        let cfg = parse("iterated --n 2 --pairs 2,3;2,-5").unwrap();
        let spec = CableSpec::topological(&[(2, 3), (2, -5)]).unwrap();
        assert_eq!(cfg.job, Job::Compute { family: Family::Iterated, n: 2, spec });
        assert!(parse("torus --n 1 --r -2 --s 3").is_ok());
    }
}
