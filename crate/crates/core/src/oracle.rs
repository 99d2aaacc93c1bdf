//! Rounding oracle for Euclidean forms.
//!
//! A form `g` is Euclidean when every `x` in `K^d \ R^d` admits `y` in `R^d`
//! with `0 < ‖g(x - y)‖ < 1`. The oracle first tries coordinatewise rounding
//! and, failing that, searches a bounded box of offsets around the rounded
//! point. It never guesses a larger box on its own.

use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::domain::NormedDomain;
use crate::error::{Error, Result};
use crate::fraction::{Fraction, FractionPoint};
use crate::quadratic::QuadraticPolynomial;

pub const DEFAULT_WINDOW: u32 = 2;

/// A witness `y` together with `f2(x - y)` and its norm, `0 < vnorm < 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult<E> {
    pub y: Vec<E>,
    pub value: Fraction<E>,
    pub vnorm: BigRational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NotFound<E> {
    pub point: FractionPoint<E>,
    pub window: u32,
    /// Smallest positive norm `‖f2(x - y)‖` seen in the window, if any.
    pub min_norm: Option<BigRational>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleOutcome<E> {
    Found(OracleResult<E>),
    NotFound(NotFound<E>),
}

impl<E> OracleOutcome<E> {
    pub fn found(self) -> Option<OracleResult<E>> {
        match self {
            OracleOutcome::Found(r) => Some(r),
            OracleOutcome::NotFound(_) => None,
        }
    }
}

fn admissible(vnorm: &BigRational) -> bool {
    !vnorm.is_zero() && *vnorm < BigRational::one()
}

/// Coordinatewise nearest element of `R`.
pub fn round_point<D: NormedDomain>(d: &D, x: &FractionPoint<D::Elem>) -> Vec<D::Elem> {
    x.num()
        .iter()
        .map(|a| d.round_quotient(a, x.den()))
        .collect()
}

fn evaluate<D: NormedDomain>(
    d: &D,
    f: &QuadraticPolynomial<D::Elem>,
    x: &FractionPoint<D::Elem>,
    y: Vec<D::Elem>,
) -> Result<OracleResult<D::Elem>> {
    let value = f.eval_f2(d, &x.sub_integral(d, &y)?)?;
    let vnorm = value.ext_norm(d);
    Ok(OracleResult { y, value, vnorm })
}

/// Every vector in `choices^dim`, in lexicographic order of `choices`.
pub(crate) fn cartesian<T: Clone>(choices: &[T], dim: usize) -> Vec<Vec<T>> {
    let mut out = vec![Vec::with_capacity(dim)];
    for _ in 0..dim {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                choices.iter().map(move |c| {
                    let mut v = prefix.clone();
                    v.push(c.clone());
                    v
                })
            })
            .collect();
    }
    out
}

/// All candidates `y = round(x) + offset` with offsets from the window box,
/// evaluated. Order follows the offsets.
pub fn window_candidates<D: NormedDomain>(
    d: &D,
    f: &QuadraticPolynomial<D::Elem>,
    x: &FractionPoint<D::Elem>,
    window: u32,
) -> Result<Vec<OracleResult<D::Elem>>> {
    let center = round_point(d, x);
    cartesian(&d.window_offsets(window), x.dim())
        .into_iter()
        .map(|off| {
            let y = center.iter().zip(&off).map(|(c, o)| d.add(c, o)).collect();
            evaluate(d, f, x, y)
        })
        .collect()
}

/// Finds `y` in `R^d` with `0 < ‖f2(x - y)‖ < 1`.
///
/// Rounding is tried first; if its value is zero or has norm at least 1, the
/// whole window is searched and the admissible `y` of least norm wins, ties
/// broken by the lexicographic order of `y`.
pub fn euclidean_step<D: NormedDomain>(
    d: &D,
    f: &QuadraticPolynomial<D::Elem>,
    x: &FractionPoint<D::Elem>,
    window: u32,
) -> Result<OracleOutcome<D::Elem>> {
    if x.dim() != f.dim() {
        return Err(Error::DimensionMismatch {
            expected: f.dim(),
            found: x.dim(),
        });
    }
    if x.is_integral(d) {
        return Err(Error::PointIsIntegral { point: x.format(d) });
    }
    let rounded = evaluate(d, f, x, round_point(d, x))?;
    if admissible(&rounded.vnorm) {
        return Ok(OracleOutcome::Found(rounded));
    }

    let candidates = window_candidates(d, f, x, window)?;
    let min_norm = candidates
        .iter()
        .map(|c| &c.vnorm)
        .filter(|n| !n.is_zero())
        .min()
        .cloned();
    let best = candidates
        .into_iter()
        .filter(|c| admissible(&c.vnorm))
        .min_by(|a, b| a.vnorm.cmp(&b.vnorm).then_with(|| a.y.cmp(&b.y)));
    Ok(match best {
        Some(r) => OracleOutcome::Found(r),
        None => OracleOutcome::NotFound(NotFound {
            point: x.clone(),
            window,
            min_norm,
        }),
    })
}

/// Canonical non-integral points `a/b` with `b` of height at most `height`
/// and every `a_i` in the box of size `box_size`. Ordered by denominator, then
/// lexicographically by numerators.
pub fn non_integral_points<D: NormedDomain>(
    d: &D,
    dim: usize,
    height: u32,
    box_size: u32,
) -> Vec<FractionPoint<D::Elem>> {
    let dens: Vec<D::Elem> = d
        .elements_within_height(height)
        .into_iter()
        .filter(|b| !d.is_zero(b) && !d.is_unit(b) && d.is_normalized(b))
        .collect();
    let numerators = cartesian(&d.box_elements(box_size), dim);
    let mut out = Vec::new();
    for b in &dens {
        for a in &numerators {
            let g = a.iter().fold(b.clone(), |g, ai| d.gcd(&g, ai));
            if d.is_unit(&g) {
                out.push(
                    FractionPoint::unreduced(d, a.clone(), b.clone()).expect("nonzero denominator"),
                );
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EuclideanFailure<E> {
    /// Position of the point in enumeration order.
    pub index: usize,
    pub point: FractionPoint<E>,
    pub window: u32,
    pub min_norm: Option<BigRational>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EuclideanReport<E> {
    pub checked: usize,
    pub failures: Vec<EuclideanFailure<E>>,
}

/// Runs [`euclidean_step`] on every point of [`non_integral_points`].
///
/// A bounded corroboration or refutation only; Euclideanness quantifies over
/// all of `K^d`. Runs in parallel, failures come back in enumeration order.
pub fn check_euclidean<D: NormedDomain>(
    d: &D,
    f: &QuadraticPolynomial<D::Elem>,
    height: u32,
    box_size: u32,
    window: u32,
) -> Result<EuclideanReport<D::Elem>> {
    let points = non_integral_points(d, f.dim(), height, box_size);
    let outcomes = points
        .par_iter()
        .map(|x| euclidean_step(d, f, x, window))
        .collect::<Result<Vec<_>>>()?;
    let failures = outcomes
        .into_iter()
        .enumerate()
        .filter_map(|(index, o)| match o {
            OracleOutcome::Found(_) => None,
            OracleOutcome::NotFound(nf) => Some(EuclideanFailure {
                index,
                point: nf.point,
                window: nf.window,
                min_norm: nf.min_norm,
            }),
        })
        .collect();
    Ok(EuclideanReport {
        checked: points.len(),
        failures,
    })
}
