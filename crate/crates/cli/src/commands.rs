use std::fmt::Write as _;

use adc_core::{
    adc_represent, brute_integral_zero, check_euclidean, check_n2, check_norm_axioms, descend,
    format_form, format_vector, infer_dimension, parse_form, parse_point, random_rational_zero,
    verify_adc, AdcFindingKind, Error, FractionPoint, NormedDomain, QuadraticPolynomial, SearchBox,
    TraceDocument,
};
use num_bigint::{BigInt, BigUint};

use crate::{CheckArgs, CheckKind, Cli, Command, DescentArgs, Format};

pub struct Output {
    pub stdout: String,
    pub code: u8,
}

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
    /// Anything already produced before the failure.
    pub stdout: String,
}

impl Failure {
    pub fn input(message: String) -> Self {
        Failure {
            code: 1,
            message,
            stdout: String::new(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::OracleNotFound { .. } => 2,
            Error::Invariant(_) => 4,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
            stdout: String::new(),
        }
    }
}

type Run = Result<Output, Failure>;

fn ok(stdout: String) -> Run {
    Ok(Output { stdout, code: 0 })
}

/// Attaches the offending input and a caret to parse errors.
fn parsed<T>(text: &str, r: adc_core::Result<T>) -> Result<T, Failure> {
    r.map_err(|e| match &e {
        Error::Parse(p) => {
            let caret = " ".repeat(text[..p.offset.min(text.len())].chars().count());
            Failure::input(format!("{e}\n  {text}\n  {caret}^"))
        }
        _ => e.into(),
    })
}

fn form_dim(cli: &Cli, text: &str) -> usize {
    cli.dim.unwrap_or_else(|| infer_dimension(text))
}

pub fn run<D: NormedDomain>(d: &D, cli: &Cli) -> Run {
    match &cli.command {
        Command::Descend(args) => cmd_descend(d, cli, args),
        Command::Represent(args) => cmd_represent(d, cli, args),
        Command::Check(c) => {
            let (kind, args) = c.split();
            cmd_check(d, cli, kind, args)
        }
        Command::ThreeSquares {
            n,
            seed,
            window,
            trace,
        } => cmd_three_squares(d, cli, *n, *seed, *window, *trace),
        Command::Parse { form } => {
            let f = parsed(form, parse_form(d, form, form_dim(cli, form)))?;
            ok(format!("{}\n", format_form(d, &f)))
        }
    }
}

type Input<E> = (FractionPoint<E>, QuadraticPolynomial<E>);

fn point_and_form<D: NormedDomain>(
    d: &D,
    cli: &Cli,
    args: &DescentArgs,
) -> Result<Input<D::Elem>, Failure> {
    let x = parsed(&args.point, parse_point(d, &args.point))?;
    let dim = cli.dim.unwrap_or(x.dim());
    if dim != x.dim() {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: x.dim(),
        }
        .into());
    }
    let f = parsed(&args.form, parse_form(d, &args.form, dim))?;
    Ok((x, f))
}

fn render(doc: &TraceDocument, format: Format, trace: bool) -> String {
    let mut doc = doc.clone();
    if !trace {
        doc.steps.clear();
    }
    match format {
        Format::Json => serde_json::to_string(&doc).expect("serializable") + "\n",
        Format::Text => {
            let mut out = String::new();
            for r in &doc.steps {
                writeln!(out, "{}", r.to_text()).unwrap();
            }
            if let Some(v) = &doc.value {
                writeln!(out, "value={v}").unwrap();
            }
            writeln!(out, "{}", doc.result_text()).unwrap();
            out
        }
    }
}

fn cmd_descend<D: NormedDomain>(d: &D, cli: &Cli, args: &DescentArgs) -> Run {
    let (x, f) = point_and_form(d, cli, args)?;
    let trace = descend(d, &f, &x, args.window)?;
    ok(render(
        &TraceDocument::new(d, &f, &trace),
        cli.format,
        args.trace,
    ))
}

fn cmd_represent<D: NormedDomain>(d: &D, cli: &Cli, args: &DescentArgs) -> Run {
    let (x, q) = point_and_form(d, cli, args)?;
    let r = adc_represent(d, &q, &x, args.window)?;
    let mut doc = TraceDocument::new(d, &q, &r.trace);
    doc.value = Some(d.format_elem(&r.value));
    ok(render(&doc, cli.format, args.trace))
}

fn default_check_form<D: NormedDomain>(d: &D, kind: CheckKind) -> &'static str {
    match (kind, d.descriptor()) {
        (CheckKind::N2, adc_core::Domain::RationalIntegers) => "x^2+y^2+z^2",
        (CheckKind::N2, _) => "x^2",
        (_, adc_core::Domain::PrimeFieldPolynomials(_)) => "x^2+t*y^2",
        _ => "x^2+y^2+z^2",
    }
}

fn report(checked: usize, failures: Vec<String>, notes: Vec<String>, format: Format) -> Run {
    let code = if failures.is_empty() { 0 } else { 2 };
    let stdout = match format {
        Format::Json => {
            serde_json::json!({ "checked": checked, "failures": failures, "notes": notes })
                .to_string()
                + "\n"
        }
        Format::Text => {
            let mut out = format!("checked={checked} failures={}\n", failures.len());
            for line in failures.iter().chain(&notes) {
                writeln!(out, "{line}").unwrap();
            }
            out
        }
    };
    Ok(Output { stdout, code })
}

fn min_text(m: &Option<num_rational::BigRational>) -> String {
    m.as_ref()
        .map_or_else(|| "none".to_owned(), |r| r.to_string())
}

fn cmd_check<D: NormedDomain>(d: &D, cli: &Cli, kind: CheckKind, args: &CheckArgs) -> Run {
    let text = args.form.as_deref().unwrap_or(default_check_form(d, kind));
    let form = || parsed(text, parse_form(d, text, form_dim(cli, text)));
    match kind {
        CheckKind::Euclidean => {
            let f = form()?;
            let (h, b) = (args.height.unwrap_or(4), args.box_size.unwrap_or(3));
            let r = check_euclidean(d, &f, h, b, args.window)?;
            let failures = r
                .failures
                .iter()
                .map(|e| {
                    format!(
                        "failure index={} point={} window={} min_norm={}",
                        e.index,
                        e.point.format(d),
                        e.window,
                        min_text(&e.min_norm)
                    )
                })
                .collect();
            report(r.checked, failures, vec![], cli.format)
        }
        CheckKind::Adc => {
            let q = form()?;
            let search = SearchBox::new(args.box_size.unwrap_or(3), args.height.unwrap_or(4));
            let r = verify_adc(d, &q, search, args.window)?;
            let (mut failures, mut notes) = (Vec::new(), Vec::new());
            for f in &r.findings {
                let head = format!(
                    "point={} value={}",
                    f.point.format(d),
                    d.format_elem(&f.value)
                );
                let line = match &f.kind {
                    AdcFindingKind::Inapplicable { min_norm, brute } => format!(
                        "inapplicable {head} min_norm={} brute={}",
                        min_text(min_norm),
                        brute
                            .as_ref()
                            .map_or_else(|| "none".to_owned(), |y| format_vector(d, y))
                    ),
                    AdcFindingKind::DescentFailed(msg) => format!("failure {head} descent: {msg}"),
                    AdcFindingKind::Disagreement { descent } => {
                        format!(
                            "failure {head} descent={} brute=none",
                            format_vector(d, descent)
                        )
                    }
                };
                if f.is_failure() {
                    failures.push(line)
                } else {
                    notes.push(line)
                }
            }
            report(r.checked, failures, notes, cli.format)
        }
        CheckKind::NormAxioms => {
            let r = check_norm_axioms(d, args.samples, args.box_size.unwrap_or(20), args.seed);
            let failures = r
                .failures
                .iter()
                .map(|f| format!("failure axiom={} witness={}", f.axiom, f.witness))
                .collect();
            report(r.checked, failures, vec![], cli.format)
        }
        CheckKind::N2 => {
            let q = form()?;
            let h = args.height.unwrap_or(match d.descriptor() {
                adc_core::Domain::RationalIntegers => 100,
                adc_core::Domain::GaussianIntegers => 50,
                adc_core::Domain::PrimeFieldPolynomials(_) => 3,
            });
            let r = check_n2(d, &q, &d.elements_within_height(h), args.window)?;
            let failures = r
                .failures
                .iter()
                .map(|f| format!("failure element={} {}", f.element, f.reason))
                .collect();
            report(r.checked, failures, vec![], cli.format)
        }
    }
}

/// `n = 4^a (8b + 7)`, the classical obstruction.
pub fn excluded_from_three_squares(mut n: u64) -> bool {
    while n > 0 && n.is_multiple_of(4) {
        n /= 4;
    }
    n % 8 == 7
}

fn cmd_three_squares<D: NormedDomain>(
    d: &D,
    cli: &Cli,
    n: u64,
    seed: u64,
    window: u32,
    trace: bool,
) -> Run {
    if !matches!(d.descriptor(), adc_core::Domain::RationalIntegers) {
        return Err(Failure::input("three-squares works over Z only".to_owned()));
    }
    if n == 0 {
        return Err(Failure::input("n must be positive".to_owned()));
    }
    if excluded_from_three_squares(n) {
        return Ok(Output {
            stdout: format!("{n} is not representable as a sum of three squares\n"),
            code: 3,
        });
    }
    let mut f = parse_form(d, "x^2+y^2+z^2", 3)?;
    f.set_constant(d.neg(&d.from_bigint(&BigInt::from(n))));
    let side = u32::try_from(BigUint::from(n).sqrt())
        .map_err(|_| Failure::input("n is too large".to_owned()))?;
    let Some(y0) = brute_integral_zero(d, &f, SearchBox::new(side, 0)) else {
        return Err(Error::Invariant(format!("no integral zero found for {n}")).into());
    };
    let x = random_rational_zero(d, &f, &y0, seed, &BigUint::from(2u32))?;
    let t = descend(d, &f, &x, window)?;
    let doc = TraceDocument::new(d, &f, &t);
    let stdout = match cli.format {
        Format::Json => render(&doc, Format::Json, trace),
        Format::Text => format!("start={}\n{}", doc.start, render(&doc, Format::Text, trace)),
    };
    ok(stdout)
}
