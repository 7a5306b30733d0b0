//! Command-line front end. Exit codes: 0 pass, 1 fail or domain error,
//! 2 usage error.

use std::ffi::OsString;
use std::io::Write;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::matq::{builtin_rep, fundamental_t, spin1_t, RepMatrix};
use crate::ncpoly::builtin_presentation;
use crate::osc::OscParams;
use crate::rmat::{fundamental_r, universal_r};
use crate::scalars::{
    basic_hypergeometric, format_complex, heine_number, q_exp, q_factorial, q_int_heine, q_int_sym,
    q_int_sym_real, q_pochhammer, QScalar,
};
use crate::suite;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

pub const EMIT_OBJECTS: [&str; 7] = [
    "R2",
    "R3",
    "P",
    "T-fund",
    "T1-spin1",
    "rep-fund",
    "rep-spin1",
];

#[derive(Parser, Debug)]
#[command(name = "qalg", version, about = "Exact checks for q-deformed algebras")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run a suite or a single check.
    Verify(VerifyArgs),
    /// Write a catalog matrix in canonical scalar text.
    Emit(EmitArgs),
    /// Evaluate a q-number or q-series, exactly or at a numeric q.
    Qseries(QseriesArgs),
    /// List suites, checks and emittable objects.
    List,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Json,
    Text,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum EmitFormat {
    Json,
    Csv,
}

#[derive(Args, Debug)]
#[command(allow_negative_numbers = true)]
struct VerifyArgs {
    /// A single check name (alternative to --suite).
    check: Option<String>,
    /// all, plane, qgroup, universal-t, rmatrix or oscillator.
    #[arg(long)]
    suite: Option<String>,
    /// Numeric q for the oscillator checks; exact checks keep q symbolic.
    #[arg(long, allow_hyphen_values = true)]
    q: Option<String>,
    /// Fock truncation for the oscillator checks.
    #[arg(long, default_value_t = 8)]
    d: usize,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    format: ReportFormat,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Args, Debug)]
struct EmitArgs {
    /// R2, R3, P, T-fund, T1-spin1, rep-fund or rep-spin1.
    object: String,
    #[arg(long, value_enum, default_value_t = EmitFormat::Json)]
    format: EmitFormat,
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SeriesFn {
    /// Heine number [n]_q.
    Qint,
    /// Symmetric number [[n]]_q.
    Qintsym,
    /// [n]_q!.
    Qfact,
    /// (x; q)_n.
    Qpoch,
    /// Truncated e_q(z).
    Qexp,
    /// Truncated rφs(a; b; q, z); numeric only.
    Phi,
}

#[derive(Args, Debug)]
#[command(allow_negative_numbers = true)]
struct QseriesArgs {
    #[arg(value_enum)]
    function: SeriesFn,
    /// qint/qintsym/qfact: n; qpoch: x n; qexp: z; phi: z.
    args: Vec<String>,
    /// Numeric q (real or "a+bi"); symbolic when absent.
    #[arg(long, allow_hyphen_values = true)]
    q: Option<String>,
    /// Number of series terms.
    #[arg(long, default_value_t = 20)]
    terms: usize,
    /// Upper parameters of phi, comma separated.
    #[arg(long, allow_hyphen_values = true, value_delimiter = ',')]
    a: Vec<String>,
    /// Lower parameters of phi, comma separated.
    #[arg(long, allow_hyphen_values = true, value_delimiter = ',')]
    b: Vec<String>,
}

/// Failure of a command, mapped to an exit code.
enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::UnknownKey { .. } | Error::Parameter(_) => Failure::Usage(e.to_string()),
            other => Failure::Domain(other.to_string()),
        }
    }
}

type CmdResult = std::result::Result<i32, Failure>;

/// Parses `a`, `a+bi`, `a-bi`, `bi` or `i`.
pub fn parse_complex(s: &str) -> Option<Complex64> {
    let t = s.trim().replace(' ', "");
    if let Ok(x) = t.parse::<f64>() {
        return Some(Complex64::new(x, 0.0));
    }
    let body = t.strip_suffix('i')?;
    // split at the last sign that is not an exponent sign or the leading one
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        x => x.parse().ok()?,
    };
    Some(Complex64::new(re.parse().ok()?, im))
}

fn parse_q(s: &str) -> std::result::Result<Complex64, Failure> {
    parse_complex(s).ok_or_else(|| Failure::Usage(format!("cannot parse q = `{s}`")))
}

fn write_out(
    path: &Option<std::path::PathBuf>,
    text: &str,
    stdout: &mut dyn Write,
) -> std::result::Result<(), Failure> {
    match path {
        Some(p) => {
            std::fs::write(p, text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))
        }
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Domain(e.to_string())),
    }
}

fn cmd_verify(a: &VerifyArgs, stdout: &mut dyn Write) -> CmdResult {
    let target = match (&a.check, &a.suite) {
        (Some(_), Some(_)) => {
            return Err(Failure::Usage(
                "give a check name or --suite, not both".into(),
            ))
        }
        (Some(c), None) => c.clone(),
        (None, Some(s)) => s.clone(),
        (None, None) => "all".into(),
    };
    let mut params = OscParams {
        d: a.d,
        ..OscParams::default()
    };
    if let Some(q) = &a.q {
        let z = parse_q(q)?;
        if z.im != 0.0 {
            return Err(Failure::Usage(format!(
                "q = {q} must be real for the numeric checks"
            )));
        }
        params.q = z.re;
    }
    let result = suite::run(&target, params)?;
    let text = match a.format {
        ReportFormat::Json => result.to_json(),
        ReportFormat::Text => result.to_text(),
        ReportFormat::Csv => result.to_csv(),
    };
    write_out(&a.out, &text, stdout)?;
    Ok(if result.passed() {
        EXIT_PASS
    } else {
        EXIT_FAIL
    })
}

fn matrix_json(object: &str, m: Value, note: Option<&str>) -> Value {
    let mut v = json!({ "object": object });
    if let Some(n) = note {
        v["note"] = json!(n);
    }
    v["matrix"] = m;
    v
}

/// The named catalog object in the requested format.
pub fn emit_object(object: &str, csv: bool) -> Result<String> {
    let matrix = |m: &RepMatrix, note: Option<&str>| {
        if csv {
            m.to_csv()
        } else {
            pretty(&matrix_json(object, m.to_json(), note))
        }
    };
    Ok(match object {
        "R2" => {
            let r = fundamental_r();
            matrix(&r.r, Some(&r.note))
        }
        "R3" => {
            let s = builtin_rep("spin1")?;
            let r = universal_r(&s, &s, 6)?;
            matrix(&r.r, Some(&r.note))
        }
        "P" => matrix(&RepMatrix::flip(2), Some("flip on C^2 (x) C^2")),
        "T-fund" | "T1-spin1" => {
            let pres = builtin_presentation("funq_sl2")?;
            let t = if object == "T-fund" {
                fundamental_t(Arc::clone(&pres))
            } else {
                spin1_t(Arc::clone(&pres))
            };
            if csv {
                t.to_csv()
            } else {
                pretty(&matrix_json(
                    object,
                    t.to_json(),
                    Some("entries over funq_sl2"),
                ))
            }
        }
        "rep-fund" | "rep-spin1" => {
            let rep = builtin_rep(&object[4..])?;
            if csv {
                let mut out = String::new();
                for (label, m) in [
                    ("E", &rep.e),
                    ("F", &rep.f),
                    ("K", &rep.k),
                    ("Kinv", &rep.kinv),
                ] {
                    out.push_str(&format!("# {label}\n"));
                    out.push_str(&m.to_csv());
                }
                out
            } else {
                let mut v = rep.to_json();
                v["object"] = json!(object);
                pretty(&v)
            }
        }
        other => {
            return Err(Error::UnknownKey {
                kind: "object",
                key: other.into(),
            })
        }
    })
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json") + "\n"
}

fn cmd_emit(a: &EmitArgs, stdout: &mut dyn Write) -> CmdResult {
    let text = emit_object(&a.object, a.format == EmitFormat::Csv)?;
    write_out(&a.out, &text, stdout)?;
    Ok(EXIT_PASS)
}

fn int_arg(args: &[String], k: usize, what: &str) -> std::result::Result<i64, Failure> {
    let s = args
        .get(k)
        .ok_or_else(|| Failure::Usage(format!("missing argument {what}")))?;
    s.parse()
        .map_err(|_| Failure::Usage(format!("{what} = `{s}` is not an integer")))
}

fn nonneg_arg(args: &[String], k: usize, what: &str) -> std::result::Result<u32, Failure> {
    let n = int_arg(args, k, what)?;
    u32::try_from(n).map_err(|_| Failure::Usage(format!("{what} = {n} must be nonnegative")))
}

fn rational_arg(
    args: &[String],
    k: usize,
    what: &str,
) -> std::result::Result<BigRational, Failure> {
    let s = args
        .get(k)
        .ok_or_else(|| Failure::Usage(format!("missing argument {what}")))?;
    s.parse::<BigRational>()
        .map_err(|_| Failure::Usage(format!("{what} = `{s}` is not a rational number")))
}

fn complex_arg(s: &str, what: &str) -> std::result::Result<Complex64, Failure> {
    parse_complex(s).ok_or_else(|| Failure::Usage(format!("{what} = `{s}` is not a number")))
}

fn sym_numeric(n: i64, q: Complex64) -> std::result::Result<Complex64, Failure> {
    if q.im == 0.0 && q.re > 0.0 {
        return Ok(Complex64::new(q_int_sym_real(n as f64, q.re), 0.0));
    }
    let den = q - q.inv();
    if den.norm() == 0.0 {
        return Err(Failure::Domain(format!(
            "q - 1/q vanishes at q = {}",
            format_complex(q)
        )));
    }
    Ok((q.powi(n as i32) - q.powi(-(n as i32))) / den)
}

/// Evaluates one `qseries` request; returns the printed value.
fn qseries_value(a: &QseriesArgs) -> std::result::Result<String, Failure> {
    let q = a.q.as_deref().map(parse_q).transpose()?;
    if q.is_some_and(|z| z.norm() == 0.0) {
        return Err(Failure::Usage("q must be nonzero".into()));
    }
    let exact = |x: QScalar| Ok(x.to_string());
    let num = |z: Complex64| Ok(format_complex(z));
    match a.function {
        SeriesFn::Qint => {
            let n = nonneg_arg(&a.args, 0, "n")?;
            match q {
                None => exact(q_int_heine(n)),
                Some(z) => num(heine_number(n, &z)),
            }
        }
        SeriesFn::Qintsym => {
            let n = int_arg(&a.args, 0, "n")?;
            match q {
                None => exact(q_int_sym(n)),
                Some(z) => num(sym_numeric(n, z)?),
            }
        }
        SeriesFn::Qfact => {
            let n = nonneg_arg(&a.args, 0, "n")?;
            match q {
                None => exact(q_factorial(n, &QScalar::q())),
                Some(z) => num(q_factorial(n, &z)),
            }
        }
        SeriesFn::Qpoch => {
            let n = nonneg_arg(&a.args, 1, "n")?;
            match q {
                None => {
                    let x = QScalar::from_rational(&rational_arg(&a.args, 0, "x")?);
                    exact(q_pochhammer(&x, &QScalar::q(), n))
                }
                Some(z) => {
                    let x = complex_arg(a.args.first().map(String::as_str).unwrap_or(""), "x")?;
                    num(q_pochhammer(&x, &z, n))
                }
            }
        }
        SeriesFn::Qexp => match q {
            None => {
                let x = QScalar::from_rational(&rational_arg(&a.args, 0, "z")?);
                exact(q_exp(&x, &QScalar::q(), a.terms)?)
            }
            Some(zq) => {
                let x = complex_arg(a.args.first().map(String::as_str).unwrap_or(""), "z")?;
                num(q_exp(&x, &zq, a.terms)?)
            }
        },
        SeriesFn::Phi => {
            let zq = q.ok_or_else(|| Failure::Usage("phi needs a numeric --q".into()))?;
            let z = complex_arg(a.args.first().map(String::as_str).unwrap_or(""), "z")?;
            let parse_list = |v: &[String], what: &str| {
                v.iter()
                    .filter(|s| !s.is_empty())
                    .map(|s| complex_arg(s, what))
                    .collect::<std::result::Result<Vec<_>, _>>()
            };
            let upper = parse_list(&a.a, "a")?;
            let lower = parse_list(&a.b, "b")?;
            num(basic_hypergeometric(&upper, &lower, zq, z, a.terms)?)
        }
    }
}

fn cmd_qseries(a: &QseriesArgs, stdout: &mut dyn Write) -> CmdResult {
    let v = qseries_value(a)?;
    writeln!(stdout, "{v}").map_err(|e| Failure::Domain(e.to_string()))?;
    Ok(EXIT_PASS)
}

fn cmd_list(stdout: &mut dyn Write) -> CmdResult {
    let mut out = String::new();
    out.push_str(&format!("suites: {}\n", suite::SUITES.join(", ")));
    out.push_str(&format!("checks: {}\n", suite::all_checks().join(", ")));
    out.push_str(&format!("objects: {}\n", EMIT_OBJECTS.join(", ")));
    stdout
        .write_all(out.as_bytes())
        .map_err(|e| Failure::Domain(e.to_string()))?;
    Ok(EXIT_PASS)
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_PASS
            };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let res = match &cli.cmd {
        Command::Verify(a) => cmd_verify(a, stdout),
        Command::Emit(a) => cmd_emit(a, stdout),
        Command::Qseries(a) => cmd_qseries(a, stdout),
        Command::List => cmd_list(stdout),
    };
    match res {
        Ok(code) => code,
        Err(Failure::Usage(m)) => {
            let _ = writeln!(stderr, "error: {m}");
            EXIT_USAGE
        }
        Err(Failure::Domain(m)) => {
            let _ = writeln!(stderr, "error: {m}");
            EXIT_FAIL
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv: Vec<&str> = std::iter::once("qalg")
            .chain(args.iter().copied())
            .collect();
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn complex_parsing() {
        assert_eq!(parse_complex("1.5"), Some(Complex64::new(1.5, 0.0)));
        assert_eq!(parse_complex("-1.0"), Some(Complex64::new(-1.0, 0.0)));
        assert_eq!(parse_complex("1+2i"), Some(Complex64::new(1.0, 2.0)));
        assert_eq!(parse_complex("0.5-0.25i"), Some(Complex64::new(0.5, -0.25)));
        assert_eq!(parse_complex("-i"), Some(Complex64::new(0.0, -1.0)));
        assert_eq!(
            parse_complex("1e-3+1e-2i"),
            Some(Complex64::new(1e-3, 1e-2))
        );
        assert_eq!(parse_complex("abc"), None);
    }

    #[test]
    fn qseries_examples() {
        assert_eq!(
            run_capture(&["qseries", "qintsym", "4"]).1,
            "s^6 + s^2 + s^-2 + s^-6\n"
        );
        assert_eq!(run_capture(&["qseries", "qint", "0"]).1, "0\n");
        assert_eq!(run_capture(&["qseries", "qintsym", "-1"]).1, "-1\n");
        assert_eq!(run_capture(&["qseries", "qint", "3", "--q", "2"]).1, "7\n");
        // 1 + 1 + 1/(1 + q)
        let (_, e3, _) = run_capture(&["qseries", "qexp", "1", "--terms", "3"]);
        let x = QScalar::from_int(2) + (QScalar::one() + QScalar::q()).inv().unwrap();
        assert_eq!(e3.trim(), x.to_string());
        let (c, out, _) = run_capture(&["qseries", "qexp", "1", "--q", "0.5", "--terms", "30"]);
        assert_eq!(c, 0);
        let (_, phi, _) = run_capture(&[
            "qseries", "phi", "0.5", "--q", "0.5", "--terms", "30", "--a", "0",
        ]);
        let (x, y): (f64, f64) = (out.trim().parse().unwrap(), phi.trim().parse().unwrap());
        assert!((x - y).abs() < 1e-12);
    }

    #[test]
    fn qseries_errors() {
        assert_eq!(run_capture(&["qseries", "qint", "x"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["qseries", "phi", "1"]).0, EXIT_USAGE);
        // [2]_{-1}! = 0
        assert_eq!(
            run_capture(&["qseries", "qexp", "1", "--q", "-1", "--terms", "4"]).0,
            EXIT_FAIL
        );
        assert_eq!(
            run_capture(&["qseries", "qintsym", "2", "--q", "-1"]).0,
            EXIT_FAIL
        );
    }
}
