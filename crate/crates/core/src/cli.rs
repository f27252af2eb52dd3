//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3 pole or
//! domain error. Results go to stdout, diagnostics to stderr.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::algebra::{rf_latex, rf_text, RatFn, RationalFunctionJson};
use crate::circular::{cot_derivative_poly, tan_derivative_poly, DerivativePolynomial};
use crate::error::Error;
use crate::hyperbolic::{coth_derivative_poly, tanh_derivative_poly};
use crate::ladder::{ladder_coefficients, verify_ladder_exact, Arrangement};
use crate::polylog::{chi_neg, li_neg, ti_neg};
use crate::report::VerificationReport;
use crate::verify::{run_suite, Suite, EXACT_N_MAX};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

/// Largest order accepted by the closed-form and eval commands.
pub const MAX_ORDER: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Latex,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Trig,
    Hyperbolic,
    Inverse,
    Ladder,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Trig => Suite::Trig,
            SuiteArg::Hyperbolic => Suite::Hyperbolic,
            SuiteArg::Inverse => Suite::Inverse,
            SuiteArg::Ladder => Suite::Ladder,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum EvalKind {
    Li,
    Chi,
    Ti,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, ValueEnum)]
enum ArrangementArg {
    #[default]
    TwoOverZ,
    ZOverTwo,
}

fn order(s: &str) -> Result<usize, String> {
    let n: usize = s.parse().map_err(|_| format!("`{s}` is not a nonnegative integer"))?;
    if n > MAX_ORDER {
        return Err(format!("order {n} exceeds the maximum {MAX_ORDER}"));
    }
    Ok(n)
}

#[derive(Debug, Parser)]
#[command(name = "polypseudolog", version, about = "Negative-order polylogarithms and derivative identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Closed form of Li_{-n}(z)
    Li(ClosedFormArgs),
    /// Closed form of chi_{-n}(z)
    Chi(ClosedFormArgs),
    /// Closed form of Ti_{-n}(z)
    Ti(ClosedFormArgs),
    /// P with (d/dx)^n cot x = P(cot x)
    CotPoly(ClosedFormArgs),
    /// P with (d/dx)^n tan x = P(tan x)
    TanPoly(ClosedFormArgs),
    /// P with (d/dx)^n coth x = P(coth x)
    CothPoly(ClosedFormArgs),
    /// P with (d/dx)^n tanh x = P(tanh x)
    TanhPoly(ClosedFormArgs),
    /// Evaluate a closed form at a complex point such as 0.5, 1+2i or 0.3-0.1i
    Eval {
        #[arg(value_enum)]
        kind: EvalKind,
        #[arg(value_parser = order)]
        n: usize,
        #[arg(allow_hyphen_values = true)]
        z: String,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Run a verification suite
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
        /// Tolerance for the numeric checks (suite default if omitted)
        #[arg(long)]
        tolerance: Option<f64>,
        /// Reserved; every suite is deterministic
        #[arg(long)]
        seed: Option<u64>,
        /// Restrict the inverse suite to one identity
        #[arg(long)]
        name: Option<String>,
    },
    /// Print the ladder relation with exact coefficients
    Ladder {
        #[arg(long, value_parser = order)]
        n: usize,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
        #[arg(long, value_enum, default_value_t)]
        arrangement: ArrangementArg,
    },
}

#[derive(Debug, clap::Args)]
struct ClosedFormArgs {
    #[arg(value_parser = order)]
    n: usize,
    #[arg(long, value_enum, default_value_t)]
    format: OutputFormat,
}

/// JSON form of a `li`/`chi`/`ti` closed form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedFormJson {
    pub kind: String,
    pub n: usize,
    pub var: char,
    #[serde(flatten)]
    pub function: RationalFunctionJson,
}

impl ClosedFormJson {
    pub fn new(kind: &str, n: usize, f: &RatFn) -> Self {
        Self { kind: kind.to_string(), n, var: f.var(), function: f.to_json() }
    }

    /// Re-canonicalized rational function.
    pub fn parse(&self) -> Result<RatFn, Error> {
        Ok(RatFn::from_json(&self.function, self.var)?)
    }
}

/// Parses `a`, `a+bi` or `a-bi`; the minus may be ASCII `-` or U+2212.
pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    let t: String = s.trim().replace('\u{2212}', "-");
    let bad = || format!("invalid complex literal `{s}`, expected FLOAT or FLOAT(+|-)FLOATi");
    let Some(body) = t.strip_suffix('i') else {
        return t.parse::<f64>().map(|re| Complex64::new(re, 0.0)).map_err(|_| bad());
    };
    // the sign separating the parts is the last one not opening an exponent
    let split = body
        .char_indices()
        .filter(|&(i, c)| (c == '+' || c == '-') && i > 0 && !matches!(body.as_bytes()[i - 1], b'e' | b'E'))
        .map(|(i, _)| i)
        .next_back()
        .ok_or_else(bad)?;
    let re: f64 = body[..split].parse().map_err(|_| bad())?;
    let im_text = &body[split..];
    let im: f64 = match im_text {
        "+" => 1.0,
        "-" => -1.0,
        _ => im_text.parse().map_err(|_| bad())?,
    };
    Ok(Complex64::new(re, im))
}

fn format_complex(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{:?}", z.re)
    } else if z.im < 0.0 {
        format!("{:?}-{:?}i", z.re, -z.im)
    } else {
        format!("{:?}+{:?}i", z.re, z.im)
    }
}

fn polynomial_output(p: &DerivativePolynomial, format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => p.text(),
        OutputFormat::Latex => p.latex(),
        OutputFormat::Json => serde_json::to_string(&p.to_json()).expect("serializable"),
    }
}

fn closed_form_output(kind: &str, n: usize, f: &RatFn, format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => rf_text(f),
        OutputFormat::Latex => rf_latex(f),
        OutputFormat::Json => serde_json::to_string(&ClosedFormJson::new(kind, n, f)).expect("serializable"),
    }
}

fn latex_table(reports: &[VerificationReport]) -> String {
    let mut out = String::from("\\begin{tabular}{llll}\nidentity & $n_{\\max}$ & max rel.\\ error & result \\\\\n\\hline\n");
    for r in reports {
        let err = r.max_error().map_or("exact".to_string(), |e| format!("${e:.1e}$"));
        let verdict = if r.pass { "pass" } else { "FAIL" };
        out.push_str(&format!("\\texttt{{{}}} & {} & {err} & {verdict} \\\\\n", r.identity, r.n));
    }
    out.push_str("\\end{tabular}");
    out
}

fn verify_output(reports: &[VerificationReport], format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => serde_json::to_string_pretty(reports).expect("serializable"),
        OutputFormat::Latex => latex_table(reports),
        OutputFormat::Text => {
            let mut lines: Vec<String> = reports.iter().map(VerificationReport::summary).collect();
            let passed = reports.iter().filter(|r| r.pass).count();
            lines.push(format!("{passed}/{} identities passed", reports.len()));
            lines.join("\n")
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_DOMAIN
        }
    }
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Error> {
    let mut emit = |s: String| {
        let _ = writeln!(out, "{s}");
    };
    match command {
        Command::Li(a) => emit(closed_form_output("li", a.n, &li_neg(a.n), a.format)),
        Command::Chi(a) => emit(closed_form_output("chi", a.n, &chi_neg(a.n), a.format)),
        Command::Ti(a) => emit(closed_form_output("ti", a.n, &ti_neg(a.n), a.format)),
        Command::CotPoly(a) => emit(polynomial_output(&cot_derivative_poly(a.n), a.format)),
        Command::TanPoly(a) => emit(polynomial_output(&tan_derivative_poly(a.n), a.format)),
        Command::CothPoly(a) => emit(polynomial_output(&coth_derivative_poly(a.n), a.format)),
        Command::TanhPoly(a) => emit(polynomial_output(&tanh_derivative_poly(a.n), a.format)),
        Command::Eval { kind, n, z, format } => {
            let z = match parse_complex(&z) {
                Ok(z) => z,
                Err(msg) => {
                    let _ = writeln!(err, "error: {msg}");
                    return Ok(EXIT_USAGE);
                }
            };
            let f = match kind {
                EvalKind::Li => li_neg(n),
                EvalKind::Chi => chi_neg(n),
                EvalKind::Ti => ti_neg(n),
            };
            let v = f.eval(z)?;
            emit(match format {
                OutputFormat::Json => serde_json::json!({ "re": v.re, "im": v.im }).to_string(),
                _ => format_complex(v),
            });
        }
        Command::Verify { suite, n_max, format, tolerance, seed: _, name } => {
            let suite = Suite::from(suite);
            if n_max > suite.n_max_bound() {
                let _ = writeln!(err, "error: --n-max {n_max} exceeds {} for this suite", suite.n_max_bound());
                return Ok(EXIT_USAGE);
            }
            if let Some(t) = tolerance {
                if !(t > 0.0 && t.is_finite()) {
                    let _ = writeln!(err, "error: --tolerance must be positive");
                    return Ok(EXIT_USAGE);
                }
            }
            if let Some(name) = &name {
                if suite != Suite::Inverse || crate::inverse::find(name).is_none() {
                    let _ = writeln!(err, "error: --name {name} does not name an inverse identity");
                    return Ok(EXIT_USAGE);
                }
            }
            let reports = run_suite(suite, n_max, tolerance, name.as_deref());
            emit(verify_output(&reports, format));
            if reports.iter().any(|r| !r.pass) {
                return Ok(EXIT_VERIFY_FAILED);
            }
        }
        Command::Ladder { n, format, arrangement } => {
            let c = ladder_coefficients(n);
            let arrangement = match arrangement {
                ArrangementArg::TwoOverZ => Arrangement::TwoOverZ,
                ArrangementArg::ZOverTwo => Arrangement::ZOverTwo,
            };
            emit(match format {
                OutputFormat::Text => c.text(arrangement),
                OutputFormat::Latex => c.latex(arrangement),
                OutputFormat::Json => {
                    let exact = n <= EXACT_N_MAX && verify_ladder_exact(n);
                    serde_json::to_string(&c.to_json(exact)).expect("serializable")
                }
            });
        }
    }
    Ok(EXIT_OK)
}
