//! Command-line surface.
//!
//! [`run`] takes the arguments after the program name and returns the exit
//! code together with everything written to stdout and stderr, so the whole
//! surface is testable in-process. Exit codes: 0 success, 1 domain error,
//! 2 usage error. Domain errors are reported as
//! `{"error": name, "detail": message}` (on stdout under `--json`, on stderr
//! otherwise).

use std::fmt::Display;
use std::io::{self, Read};
use std::path::Path;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::algebra::{LaurentPolynomial as Lp, TruncatedSeries};
use crate::arcspace::{self, ArcStratumReport, QuadraticGerm, Selector, DEFAULT_ORDER};
use crate::germ::{self, NaiveRecovery, PolynomialGerm, Verdict};
use crate::scissor::{self, SetExpression};
use crate::selfcheck::selfcheck;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser)]
#[command(name = "nash-zeta", version, about = "Virtual Poincaré polynomials and arc-space zeta functions")]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// β of a signature quadric or of a set expression.
    #[command(subcommand)]
    Beta(BetaCommand),
    /// Truncated zeta series of a diagonal quadratic germ.
    Zeta(ZetaArgs),
    /// (s, t) from the signed T² coefficients.
    Recover {
        #[arg(long)]
        plus_coeff: String,
        #[arg(long)]
        minus_coeff: String,
    },
    /// (min, max) from the naive T² coefficient.
    RecoverNaive {
        #[arg(long)]
        coeff: String,
    },
    /// Hessian inertia of a germ.
    Inertia {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        dim: Option<usize>,
    },
    /// Splits a jet into a diagonal quadratic part and a remainder.
    Split {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        jet: u32,
        #[arg(long)]
        dim: Option<usize>,
    },
    /// Looks for a zeta coefficient separating two germs.
    Discriminate {
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
        #[arg(long)]
        dim: Option<usize>,
    },
    /// Runs every identity grid up to the bound.
    Selfcheck {
        #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u32).range(2..))]
        max: u32,
    },
}

#[derive(Subcommand)]
enum BetaCommand {
    /// Cone X⁰_{m,M}.
    X0(MinMax),
    /// Projective quadric Z_{m,M}.
    Z(MinMax),
    /// Level set X¹_{s,t}.
    X1(Signature),
    /// Level set X⁻¹_{s,t}.
    Xneg1(Signature),
    /// Set expression JSON from a file, or "-" for stdin.
    Expr { source: String },
}

#[derive(Args)]
struct MinMax {
    #[arg(long = "m")]
    m: u32,
    #[arg(long = "M", value_name = "M")]
    big_m: u32,
}

#[derive(Args)]
struct Signature {
    #[arg(long)]
    s: u32,
    #[arg(long)]
    t: u32,
}

#[derive(Args)]
struct ZetaArgs {
    #[arg(long)]
    dim: u32,
    #[arg(long)]
    plus: u32,
    #[arg(long)]
    minus: u32,
    #[arg(long, default_value = "naive")]
    selector: Selector,
    #[arg(long, default_value_t = DEFAULT_ORDER)]
    order: usize,
    /// Also print the stratification of every A_n.
    #[arg(long)]
    strata: bool,
}

struct DomainError {
    name: &'static str,
    detail: String,
}

fn domain(name: &'static str, detail: impl Display) -> DomainError {
    DomainError {
        name,
        detail: detail.to_string(),
    }
}

macro_rules! impl_from_error {
    ($($t:ty),*) => {$(
        impl From<$t> for DomainError {
            fn from(e: $t) -> Self {
                domain(e.name(), e)
            }
        }
    )*};
}

impl_from_error!(
    crate::algebra::AlgebraError,
    crate::scissor::ScissorError,
    crate::arcspace::ArcError,
    crate::germ::GermError
);

/// A rendered result: human text and its JSON counterpart.
struct Rendered {
    text: String,
    json: serde_json::Value,
    code: i32,
}

impl Rendered {
    fn new(text: impl Into<String>, json: impl Serialize) -> Self {
        Self {
            text: text.into(),
            json: serde_json::to_value(json).expect("serializable output"),
            code: 0,
        }
    }
}

struct Context<'a> {
    stdin: &'a mut dyn Read,
}

impl Context<'_> {
    /// Contents of a file, or of stdin for "-".
    fn read_source(&mut self, source: &str) -> Result<String, DomainError> {
        if source == "-" {
            let mut buf = String::new();
            self.stdin
                .read_to_string(&mut buf)
                .map_err(|e| domain("IoError", format!("stdin: {e}")))?;
            return Ok(buf);
        }
        std::fs::read_to_string(source).map_err(|e| domain("IoError", format!("{source}: {e}")))
    }

    /// A germ given inline, in a file, or on stdin, as text or JSON.
    fn germ(&mut self, arg: &str, dim: Option<usize>) -> Result<PolynomialGerm, DomainError> {
        let text = if arg == "-" || Path::new(arg).is_file() {
            self.read_source(arg)?
        } else {
            arg.to_string()
        };
        let text = text.trim();
        let germ = if text.starts_with('{') {
            let value: serde_json::Value =
                serde_json::from_str(text).map_err(|e| domain("MalformedGermJson", e))?;
            PolynomialGerm::from_json_value(&value)?
        } else {
            germ::parse_germ(text, dim)?
        };
        match dim {
            Some(d) if germ.nvars() > d => Err(germ::GermError::DimensionTooSmall {
                dim: d,
                used: germ.nvars(),
            }
            .into()),
            _ => Ok(germ),
        }
    }
}

/// A coefficient in JSON form `[[exp,"c"],…]` or as text like `u^-1 + u^-2`.
fn coefficient(arg: &str) -> Result<Lp, DomainError> {
    serde_json::from_str::<Lp>(arg).or_else(|_| arg.parse::<Lp>().map_err(DomainError::from))
}

fn beta(cmd: BetaCommand, ctx: &mut Context) -> Result<Rendered, DomainError> {
    let beta = match cmd {
        BetaCommand::X0(MinMax { m, big_m }) => scissor::beta_x0(m, big_m),
        BetaCommand::Z(MinMax { m, big_m }) => scissor::beta_z(m, big_m)?,
        BetaCommand::X1(Signature { s, t }) => scissor::beta_x1(s, t),
        BetaCommand::Xneg1(Signature { s, t }) => scissor::beta_xneg1(s, t),
        BetaCommand::Expr { source } => {
            let text = ctx.read_source(&source)?;
            let value: serde_json::Value = serde_json::from_str(&text)
                .map_err(|e| domain("MalformedExpression", e))?;
            scissor::beta_eval(&SetExpression::from_json(&value)?)?
        }
    };
    Ok(Rendered::new(beta.to_string(), &beta))
}

fn render_strata(reports: &[ArcStratumReport]) -> String {
    let mut out = String::new();
    for report in reports {
        out.push_str(&format!(
            "A_{} ({}) of {}: beta = {}\n",
            report.n, report.selector, report.germ, report.total_beta
        ));
        for stratum in &report.strata {
            out.push_str(&format!("  {}\n    {}\n    beta = {}\n", stratum.description, stratum.set, stratum.beta));
        }
    }
    out
}

fn zeta(args: ZetaArgs) -> Result<Rendered, DomainError> {
    let germ = QuadraticGerm::new(args.dim, args.plus, args.minus)?;
    let series: TruncatedSeries = arcspace::zeta(&germ, args.selector, args.order)?;
    if !args.strata {
        return Ok(Rendered::new(series.to_string(), &series));
    }
    let reports = (1..=args.order)
        .map(|n| arcspace::stratify(&germ, n, args.selector))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Rendered::new(
        format!("{}{series}", render_strata(&reports)),
        json!({ "series": series, "strata": reports }),
    ))
}

fn recover_naive(coeff: &str) -> Result<Rendered, DomainError> {
    let result = germ::recover_minmax_naive(&coefficient(coeff)?)?;
    let text = match result {
        NaiveRecovery::Determined { m, big_m } => format!("m = {m}, M = {big_m}"),
        NaiveRecovery::Ambiguous { reason } => format!("ambiguous: {reason}"),
    };
    Ok(Rendered::new(text, result))
}

fn split(ctx: &mut Context, poly: &str, jet: u32, dim: Option<usize>) -> Result<Rendered, DomainError> {
    let f = ctx.germ(poly, dim)?;
    let result = germ::split_jet(&f, jet)?;
    let change: Vec<String> = result.change.iter().map(ToString::to_string).collect();
    let text = format!(
        "phi = ({})\nquadratic part: {}\nnormal form: {}\nremainder: {}\ninertia: s = {}, t = {}",
        change.join(", "),
        result.quadratic_part(),
        result.normal_form(),
        result.remainder,
        result.inertia.s,
        result.inertia.t
    );
    let mut json = serde_json::to_value(&result).expect("serializable");
    json["normal_form"] = json!(result.normal_form().to_string());
    Ok(Rendered::new(text, json))
}

fn discriminate(
    ctx: &mut Context,
    f: &str,
    g: &str,
    order: usize,
    dim: Option<usize>,
) -> Result<Rendered, DomainError> {
    let (f, g) = (ctx.germ(f, dim)?, ctx.germ(g, dim)?);
    let d = germ::discriminate(&f, &g, order)?;
    let text = match &d.verdict {
        Verdict::Distinguished { selector, n, f_coeff, g_coeff, conditional } => format!(
            "distinguished by the {selector} zeta at T^{n}: {f_coeff} vs {g_coeff}{}",
            if *conditional {
                " (coefficient taken from the quadratic parts)"
            } else {
                ""
            }
        ),
        Verdict::NotDistinguished { up_to } => {
            format!("not distinguished by zeta coefficients up to T^{up_to}")
        }
    };
    Ok(Rendered::new(text, &d))
}

fn dispatch(command: Command, ctx: &mut Context) -> Result<Rendered, DomainError> {
    match command {
        Command::Beta(cmd) => beta(cmd, ctx),
        Command::Zeta(args) => zeta(args),
        Command::Recover { plus_coeff, minus_coeff } => {
            let (s, t) = germ::recover_signature(&coefficient(&plus_coeff)?, &coefficient(&minus_coeff)?)?;
            Ok(Rendered::new(format!("s = {s}, t = {t}"), json!({ "s": s, "t": t })))
        }
        Command::RecoverNaive { coeff } => recover_naive(&coeff),
        Command::Inertia { poly, dim } => {
            let inertia = germ::hessian_inertia(&ctx.germ(&poly, dim)?)?;
            Ok(Rendered::new(
                format!(
                    "s = {}, t = {}, rank = {}, corank = {}",
                    inertia.s,
                    inertia.t,
                    inertia.rank(),
                    inertia.corank()
                ),
                json!({
                    "s": inertia.s,
                    "t": inertia.t,
                    "rank": inertia.rank(),
                    "corank": inertia.corank(),
                    "nvars": inertia.nvars,
                }),
            ))
        }
        Command::Split { poly, jet, dim } => split(ctx, &poly, jet, dim),
        Command::Discriminate { f, g, order, dim } => discriminate(ctx, &f, &g, order, dim),
        Command::Selfcheck { max } => {
            let report = selfcheck(max);
            let mut rendered = Rendered::new(report.to_string(), &report);
            rendered.code = report.exit_code();
            Ok(rendered)
        }
    }
}

fn line(s: impl Display) -> String {
    let mut s = s.to_string();
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

/// Runs the command line with an explicit stdin.
pub fn run_with_stdin<I, S>(argv: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args = std::iter::once("nash-zeta".to_string()).chain(argv.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let (stdout, stderr) = if code == 0 {
                (rendered, String::new())
            } else {
                (String::new(), rendered)
            };
            return Outcome { code, stdout, stderr };
        }
    };
    let json = cli.json;
    match dispatch(cli.command, &mut Context { stdin }) {
        Ok(rendered) => Outcome {
            code: rendered.code,
            stdout: if json {
                line(serde_json::to_string(&rendered.json).expect("serializable"))
            } else {
                line(rendered.text)
            },
            stderr: String::new(),
        },
        Err(e) => {
            let envelope = line(json!({ "error": e.name, "detail": e.detail }));
            let (stdout, stderr) = if json {
                (envelope, String::new())
            } else {
                (String::new(), envelope)
            };
            Outcome { code: 1, stdout, stderr }
        }
    }
}

/// Runs the command line against the process stdin.
pub fn run<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    run_with_stdin(argv, &mut io::stdin().lock())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> Outcome {
        run_with_stdin(args.iter().copied(), &mut io::empty())
    }

    #[test]
    fn beta_x0() {
        let out = run_str(&["beta", "x0", "--m", "2", "--M", "2"]);
        assert_eq!(out.code, 0);
        assert_eq!(out.stdout, "u^3 + u^2 - u\n");
    }

    #[test]
    fn zeta_json() {
        let out = run_str(&[
            "zeta", "--dim", "3", "--plus", "2", "--minus", "1", "--selector", "plus", "--order", "2", "--json",
        ]);
        assert_eq!(out.code, 0);
        let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["terms"], json!([[2, [[-2, "1"], [-1, "1"]]]]));
    }

    #[test]
    fn recover_json() {
        let out = run_str(&[
            "recover",
            "--plus-coeff",
            r#"[[-2,"1"],[-1,"1"]]"#,
            "--minus-coeff",
            r#"[[-2,"-1"],[-1,"1"]]"#,
            "--json",
        ]);
        assert_eq!(out.code, 0);
        assert_eq!(out.stdout, "{\"s\":2,\"t\":1}\n");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_str(&["beta", "x0", "--m", "2"]).code, 2);
        assert_eq!(run_str(&["nonsense"]).code, 2);
        assert_eq!(run_str(&["selfcheck", "--max", "1"]).code, 2);
        let out = run_str(&["recover", "--plus-coeff", "u^2 + u + 1", "--minus-coeff", "0", "--json"]);
        assert_eq!(out.code, 1);
        let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["error"], "NotSignatureForm");
        let out = run_str(&["inertia", "--poly", "x1 + x2^2"]);
        assert_eq!(out.code, 1);
        assert!(out.stderr.contains("NotSingularAtOrigin"));
    }

    #[test]
    fn stdin_source() {
        let expr = br#"{"atom":"quadric_affine","c":1,"s":2,"t":1}"#;
        let out = run_with_stdin(["beta", "expr", "-"], &mut &expr[..]);
        assert_eq!(out.code, 0, "{}", out.stderr);
        assert_eq!(out.stdout, format!("{}\n", scissor::beta_x1(2, 1)));
    }
}
