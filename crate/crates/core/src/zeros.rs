//! Brute-force search, the chord construction of rational zeros, and the ADC
//! cross-check.

use num_bigint::BigUint;
use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::descent::adc_represent;
use crate::domain::NormedDomain;
use crate::error::{Error, Result};
use crate::fraction::{check_dim, FractionPoint};
use crate::oracle::{cartesian, non_integral_points};
use crate::quadratic::QuadraticPolynomial;

/// Draws allowed to [`random_rational_zero`] before it gives up.
pub const ATTEMPT_BUDGET: u32 = 1000;

/// Bounds for enumeration.
///
/// `numerators` bounds each coordinate (or numerator) as in
/// [`NormedDomain::box_elements`]: `|n|` over `Z`, `|re|, |im|` over `Z[i]`,
/// the degree over `F_p[t]`. `height` bounds denominators as in
/// [`NormedDomain::elements_within_height`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBox {
    pub numerators: u32,
    pub height: u32,
}

impl SearchBox {
    pub fn new(numerators: u32, height: u32) -> Self {
        SearchBox { numerators, height }
    }
}

/// `box^dim` in shell order: by the largest coordinate size, then
/// lexicographically.
pub fn shell_order<D: NormedDomain>(d: &D, dim: usize, size: u32) -> Vec<Vec<D::Elem>> {
    let mut pts = cartesian(&d.box_elements(size), dim);
    pts.sort_by_cached_key(|p| (p.iter().map(|a| d.size(a)).max().unwrap_or(0), p.clone()));
    pts
}

/// First `y` in shell order over `box.numerators` with `f(y) = 0`.
pub fn brute_integral_zero<D: NormedDomain>(
    d: &D,
    f: &QuadraticPolynomial<D::Elem>,
    search: SearchBox,
) -> Option<Vec<D::Elem>> {
    brute_value(d, f, &d.zero(), search.numerators)
}

/// First `y` in shell order with `f(y) = value`.
pub fn brute_value<D: NormedDomain>(
    d: &D,
    f: &QuadraticPolynomial<D::Elem>,
    value: &D::Elem,
    size: u32,
) -> Option<Vec<D::Elem>> {
    shell_order(d, f.dim(), size)
        .into_iter()
        .find(|y| f.eval_integral(d, y).map(|v| v == *value).unwrap_or(false))
}

/// Second intersection of the line `y0 + T*w` with `f = 0`.
///
/// With `f(y0 + T*w) = A T^2 + B T` the other root is `T = -B/A`, so the
/// point is `(A*y0 - B*w)/A`. A tangent line (`B = 0`) gives back `y0`.
pub fn chord_zero<D: NormedDomain>(
    d: &D,
    f: &QuadraticPolynomial<D::Elem>,
    y0: &[D::Elem],
    w: &[D::Elem],
) -> Result<FractionPoint<D::Elem>> {
    check_dim(f.dim(), y0.len())?;
    check_dim(f.dim(), w.len())?;
    let value = f.eval_integral(d, y0)?;
    if !d.is_zero(&value) {
        return Err(Error::NotAZero {
            value: d.format_elem(&value),
        });
    }
    let line = f.expand_along_line(d, y0, w)?;
    if d.is_zero(&line.a) {
        return Err(Error::IsotropicDirection {
            direction: crate::fraction::format_vector(d, w),
        });
    }
    let num = y0
        .iter()
        .zip(w)
        .map(|(yi, wi)| d.sub(&d.mul(&line.a, yi), &d.mul(&line.b, wi)))
        .collect();
    FractionPoint::reduce(d, num, line.a)
}

/// Chord zeros along seeded random directions until one is non-integral with
/// denominator norm at least `height_min`.
///
/// Directions start in the box of size 1 and the box grows by one every 10
/// draws. Fails with [`Error::AttemptBudgetExhausted`] after
/// [`ATTEMPT_BUDGET`] draws.
pub fn random_rational_zero<D: NormedDomain>(
    d: &D,
    f: &QuadraticPolynomial<D::Elem>,
    y0: &[D::Elem],
    seed: u64,
    height_min: &BigUint,
) -> Result<FractionPoint<D::Elem>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 0..ATTEMPT_BUDGET {
        let size = 1 + attempt / 10;
        let w: Vec<D::Elem> = (0..f.dim())
            .map(|_| d.random_element(&mut rng, size))
            .collect();
        let x = match chord_zero(d, f, y0, &w) {
            Ok(x) => x,
            Err(Error::IsotropicDirection { .. }) => continue,
            Err(e) => return Err(e),
        };
        if !x.is_integral(d) && d.norm(x.den()) >= *height_min {
            return Ok(x);
        }
    }
    Err(Error::AttemptBudgetExhausted {
        attempts: ATTEMPT_BUDGET,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AdcFindingKind<E> {
    /// The oracle found no witness: the form is not Euclidean here, so the
    /// descent does not apply. Not a counterexample when brute force
    /// still finds `y`.
    Inapplicable {
        min_norm: Option<BigRational>,
        brute: Option<Vec<E>>,
    },
    /// The descent failed for another reason.
    DescentFailed(String),
    /// The descent produced `y` but brute force found nothing in its box.
    Disagreement { descent: Vec<E> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdcFinding<E> {
    pub point: FractionPoint<E>,
    pub value: E,
    pub kind: AdcFindingKind<E>,
}

impl<E> AdcFinding<E> {
    /// Everything but an inapplicable point whose value brute force still
    /// represents.
    pub fn is_failure(&self) -> bool {
        !matches!(
            self.kind,
            AdcFindingKind::Inapplicable { brute: Some(_), .. }
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdcReport<E> {
    /// Points with `q(x)` in `R`.
    pub checked: usize,
    /// Points skipped because `q(x)` is not in `R`.
    pub skipped: usize,
    pub findings: Vec<AdcFinding<E>>,
}

impl<E> AdcReport<E> {
    pub fn failures(&self) -> impl Iterator<Item = &AdcFinding<E>> {
        self.findings.iter().filter(|f| f.is_failure())
    }

    pub fn failure_count(&self) -> usize {
        self.failures().count()
    }
}

/// For every non-integral `x` in the box with `q(x)` in `R`, represents
/// `q(x)` twice: by descent and by brute force over the box of size
/// [`NormedDomain::sqrt_size_bound`] of the value. That box is exhaustive
/// for sums of squares over `Z` and for `X^2` in every domain; elsewhere a
/// brute miss is reported rather than trusted.
pub fn verify_adc<D: NormedDomain>(
    d: &D,
    q: &QuadraticPolynomial<D::Elem>,
    search: SearchBox,
    window: u32,
) -> Result<AdcReport<D::Elem>> {
    if !q.is_form(d) {
        return Err(Error::NotAForm);
    }
    let points = non_integral_points(d, q.dim(), search.height, search.numerators);
    let outcomes = points
        .par_iter()
        .map(|x| -> Result<Option<Option<AdcFinding<D::Elem>>>> {
            let Some(value) = q.eval(d, x)?.as_integral(d) else {
                return Ok(None);
            };
            let brute = brute_value(d, q, &value, d.sqrt_size_bound(&value));
            let kind = match adc_represent(d, q, x, window) {
                Ok(r) => match brute {
                    Some(_) => None,
                    None => Some(AdcFindingKind::Disagreement { descent: r.y }),
                },
                Err(Error::OracleNotFound { min_norm, .. }) => {
                    Some(AdcFindingKind::Inapplicable { min_norm, brute })
                }
                Err(e) => Some(AdcFindingKind::DescentFailed(e.to_string())),
            };
            Ok(Some(kind.map(|kind| AdcFinding {
                point: x.clone(),
                value,
                kind,
            })))
        })
        .collect::<Result<Vec<_>>>()?;

    let mut report = AdcReport {
        checked: 0,
        skipped: 0,
        findings: Vec::new(),
    };
    for o in outcomes {
        match o {
            None => report.skipped += 1,
            Some(finding) => {
                report.checked += 1;
                report.findings.extend(finding);
            }
        }
    }
    Ok(report)
}
