//! Descent from a rational zero of `f = f2 + f1 + f0` to an integral one.
//!
//! Given a zero `x = a/b` outside `R^d` and a witness `y` with
//! `0 < ‖f2(x - y)‖ < 1`, put `v = a - b*y` and expand
//! `F(T) = f(y + T v) = A T^2 + B T + C`. `1/b` is a root of `F`, the other
//! root is `C/b'` with `b' = A/b = -B - C*b`, and `x' = (b'*y + C*v)/b'` is a
//! new zero with `‖b'‖ = ‖f2(x - y)‖ ‖b‖ < ‖b‖`. Iterating reaches `R^d`
//! because norms are natural numbers.
//!
//! Every identity above is re-checked exactly on every step; a mismatch is
//! reported as [`Error::Invariant`].

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;

use crate::domain::NormedDomain;
use crate::error::{Error, Result};
use crate::fraction::{format_vector, FractionPoint};
use crate::oracle::{euclidean_step, OracleOutcome, OracleResult};
use crate::quadratic::{LineExpansion, QuadraticPolynomial};

/// Supplies the rounding witness `y` for a non-integral point.
pub trait WitnessOracle<D: NormedDomain> {
    fn witness(
        &mut self,
        d: &D,
        f: &QuadraticPolynomial<D::Elem>,
        x: &FractionPoint<D::Elem>,
    ) -> Result<OracleOutcome<D::Elem>>;

    /// Search window reported in `OracleNotFound` errors.
    fn window(&self) -> u32;
}

/// The default oracle: [`euclidean_step`] with a fixed window.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WindowOracle {
    pub window: u32,
}

impl<D: NormedDomain> WitnessOracle<D> for WindowOracle {
    fn witness(
        &mut self,
        d: &D,
        f: &QuadraticPolynomial<D::Elem>,
        x: &FractionPoint<D::Elem>,
    ) -> Result<OracleOutcome<D::Elem>> {
        euclidean_step(d, f, x, self.window)
    }

    fn window(&self) -> u32 {
        self.window
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescentStep<E> {
    /// Current zero `a/b`, as handed to the step.
    pub x: FractionPoint<E>,
    pub y: Vec<E>,
    /// `a - b*y`.
    pub v: Vec<E>,
    /// `A = f2(v)`, `B`, `C = f(y)`.
    pub line: LineExpansion<E>,
    /// `‖f2(x - y)‖`.
    pub vnorm: BigRational,
    pub den: E,
    /// `b' = A/b`.
    pub den_next: E,
    /// `a' = b'*y + C*v`, before reduction.
    pub num_next: Vec<E>,
    /// `a'/b'` in lowest terms.
    pub x_next: FractionPoint<E>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescentTrace<E> {
    pub start: FractionPoint<E>,
    pub steps: Vec<DescentStep<E>>,
    pub result: Vec<E>,
}

fn invariant<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Invariant(msg.into()))
}

fn require_zero<D: NormedDomain>(
    d: &D,
    f: &QuadraticPolynomial<D::Elem>,
    x: &FractionPoint<D::Elem>,
) -> Result<()> {
    let value = f.eval(d, x)?;
    if value.is_zero(d) {
        Ok(())
    } else {
        Err(Error::NotAZero {
            value: value.format(d),
        })
    }
}

/// One step with the default window oracle.
pub fn descent_step<D: NormedDomain>(
    d: &D,
    f: &QuadraticPolynomial<D::Elem>,
    x: &FractionPoint<D::Elem>,
    window: u32,
) -> Result<DescentStep<D::Elem>> {
    descent_step_with(d, f, x, &mut WindowOracle { window }, 0)
}

/// One descent step from the zero `x` of `f`; `step` only labels errors.
pub fn descent_step_with<D: NormedDomain, O: WitnessOracle<D>>(
    d: &D,
    f: &QuadraticPolynomial<D::Elem>,
    x: &FractionPoint<D::Elem>,
    oracle: &mut O,
    step: usize,
) -> Result<DescentStep<D::Elem>> {
    require_zero(d, f, x)?;
    if x.is_integral(d) {
        return Err(Error::PointIsIntegral { point: x.format(d) });
    }
    let OracleResult { y, vnorm, .. } = match oracle.witness(d, f, x)? {
        OracleOutcome::Found(r) => r,
        OracleOutcome::NotFound(nf) => {
            return Err(Error::OracleNotFound {
                step,
                point: x.format(d),
                window: oracle.window(),
                min_norm: nf.min_norm,
            })
        }
    };

    let (a, b) = (x.num(), x.den());
    let v: Vec<D::Elem> = a
        .iter()
        .zip(&y)
        .map(|(ai, yi)| d.sub(ai, &d.mul(b, yi)))
        .collect();
    let line = f.expand_along_line(d, &y, &v)?;
    let LineExpansion {
        a: big_a,
        b: big_b,
        c: big_c,
    } = &line;

    if d.is_zero(big_a) {
        return invariant("A = f2(v) vanished");
    }
    // F(1/b) = 0, denominators cleared
    let root_check = d.add(&d.add(big_a, &d.mul(big_b, b)), &d.mul(big_c, &d.mul(b, b)));
    if !d.is_zero(&root_check) {
        return invariant("A + B*b + C*b^2 != 0");
    }
    let Some(den_next) = d.div_exact(big_a, b) else {
        return invariant("b does not divide A");
    };
    if den_next != d.sub(&d.neg(big_b), &d.mul(big_c, b)) {
        return invariant("A/b != -B - C*b");
    }
    if d.is_zero(&den_next) {
        return invariant("b' = 0");
    }

    let (norm_b, norm_next) = (d.norm(b), d.norm(&den_next));
    if norm_next >= norm_b {
        return invariant(format!("‖b'‖ = {norm_next} is not below ‖b‖ = {norm_b}"));
    }
    if BigRational::from_integer(BigInt::from(norm_next.clone()))
        != &vnorm * BigRational::from_integer(BigInt::from(norm_b.clone()))
    {
        return invariant("‖b'‖ != ‖f2(x - y)‖ ‖b‖");
    }

    let num_next: Vec<D::Elem> = y
        .iter()
        .zip(&v)
        .map(|(yi, vi)| d.add(&d.mul(&den_next, yi), &d.mul(big_c, vi)))
        .collect();
    let unreduced = FractionPoint::unreduced(d, num_next.clone(), den_next.clone())?;
    if !f.eval(d, &unreduced)?.is_zero(d) {
        return invariant("f(x') != 0");
    }
    let x_next = unreduced.canonical(d);

    Ok(DescentStep {
        x: x.clone(),
        y,
        v,
        line,
        vnorm,
        den: b.clone(),
        den_next,
        num_next,
        x_next,
    })
}

/// Descends from the zero `x` with the default window oracle and step cap.
pub fn descend<D: NormedDomain>(
    d: &D,
    f: &QuadraticPolynomial<D::Elem>,
    x: &FractionPoint<D::Elem>,
    window: u32,
) -> Result<DescentTrace<D::Elem>> {
    descend_with(d, f, x, &mut WindowOracle { window }, None)
}

/// Repeats descent steps until the zero is integral.
///
/// `max_steps` defaults to `‖b0‖`, which strictly decreasing natural norms can
/// never exceed; hitting it is an internal error.
pub fn descend_with<D: NormedDomain, O: WitnessOracle<D>>(
    d: &D,
    f: &QuadraticPolynomial<D::Elem>,
    x: &FractionPoint<D::Elem>,
    oracle: &mut O,
    max_steps: Option<BigUint>,
) -> Result<DescentTrace<D::Elem>> {
    require_zero(d, f, x)?;
    let cap = max_steps.unwrap_or_else(|| d.norm(x.den()));
    let mut steps: Vec<DescentStep<D::Elem>> = Vec::new();
    let mut current = x.clone();
    let result = loop {
        if let Some(r) = current.as_integral(d) {
            break r;
        }
        if BigUint::from(steps.len()) >= cap {
            return invariant(format!("descent exceeded {cap} steps"));
        }
        let step = descent_step_with(d, f, &current, oracle, steps.len())?;
        if let Some(prev) = steps.last() {
            if d.norm(&step.den) > d.norm(&prev.den_next) {
                return invariant("denominator norm increased between steps");
            }
        }
        current = step.x_next.clone();
        steps.push(step);
    };
    if !d.is_zero(&f.eval_integral(d, &result)?) {
        return invariant("descent result is not a zero");
    }
    Ok(DescentTrace {
        start: x.clone(),
        steps,
        result,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation<E> {
    /// The common value `q(x) = q(y)`.
    pub value: E,
    pub y: Vec<E>,
    pub trace: DescentTrace<E>,
}

/// For a form `q` and `x` with `q(x)` in `R`, finds `y` in `R^d` with
/// `q(y) = q(x)` by descending on `q - q(x)`.
pub fn adc_represent<D: NormedDomain>(
    d: &D,
    q: &QuadraticPolynomial<D::Elem>,
    x: &FractionPoint<D::Elem>,
    window: u32,
) -> Result<Representation<D::Elem>> {
    if !q.is_form(d) {
        return Err(Error::NotAForm);
    }
    let qx = q.eval(d, x)?;
    let Some(value) = qx.as_integral(d) else {
        return Err(Error::ValueNotInRing {
            value: qx.format(d),
        });
    };
    let trace = descend(d, &q.sub_constant(d, &value), x, window)?;
    if q.eval_integral(d, &trace.result)? != value {
        return invariant("q(y) != q(x)");
    }
    Ok(Representation {
        value,
        y: trace.result.clone(),
        trace,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct N2Failure {
    pub element: String,
    pub reason: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct N2Report {
    pub checked: usize,
    pub failures: Vec<N2Failure>,
}

/// Checks that nonzero non-units have norm above 1, directly and through the
/// Euclidean form `q`: for `x = e1/a` the oracle's `y` must give
/// `0 < ‖q(e1 - a*y)‖ < ‖a‖^2`, an inequality between integers.
pub fn check_n2<D: NormedDomain>(
    d: &D,
    q: &QuadraticPolynomial<D::Elem>,
    elements: &[D::Elem],
    window: u32,
) -> Result<N2Report> {
    if !q.is_form(d) {
        return Err(Error::NotAForm);
    }
    let mut report = N2Report::default();
    for a in elements.iter().filter(|a| !d.is_zero(a) && !d.is_unit(a)) {
        report.checked += 1;
        let mut fail = |reason: String| {
            report.failures.push(N2Failure {
                element: d.format_elem(a),
                reason,
            })
        };
        let norm_a = d.norm(a);
        if norm_a <= BigUint::from(1u32) {
            fail(format!("non-unit of norm {norm_a}"));
        }

        let mut e1 = vec![d.zero(); q.dim()];
        e1[0] = d.one();
        let x = FractionPoint::unreduced(d, e1.clone(), a.clone())?;
        let r = match euclidean_step(d, q, &x, window)? {
            OracleOutcome::Found(r) => r,
            OracleOutcome::NotFound(_) => {
                fail(format!(
                    "no rounding witness for e1/a within window {window}"
                ));
                continue;
            }
        };
        let w: Vec<D::Elem> = e1
            .iter()
            .zip(&r.y)
            .map(|(e, yi)| d.sub(e, &d.mul(a, yi)))
            .collect();
        let value_norm = d.norm(&q.eval_f2_integral(d, &w)?);
        let bound = &norm_a * &norm_a;
        if value_norm.is_zero() || value_norm >= bound {
            fail(format!(
                "‖q(e1 - a*y)‖ = {value_norm} outside (0, {bound}) for y = {}",
                format_vector(d, &r.y)
            ));
        }
        if BigRational::from_integer(value_norm.into())
            != r.vnorm * BigRational::from_integer(bound.into())
        {
            fail("‖q(e1 - a*y)‖ != ‖a‖^2 ‖q(x - y)‖".to_owned());
        }
    }
    Ok(report)
}
