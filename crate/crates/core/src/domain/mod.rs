//! Integral domains carrying a discrete multiplicative norm.
//!
//! A domain is a *ring object*: a small value that owns the parameters of the
//! ring (for example the characteristic of `F_p[t]`) and performs arithmetic on
//! plain element values. Elements do not know which ring they belong to, so
//! every operation goes through the domain.
//!
//! Three instances ship: [`Integers`], [`GaussianIntegers`] and
//! [`PrimeFieldPolynomials`]. A new instance only has to implement
//! [`NormedDomain`]; nothing downstream matches on the concrete type.

mod axioms;
mod fp_poly;
mod gaussian;
mod integers;

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{Error, Result};

pub use axioms::{check_norm_axioms, AxiomFailure, AxiomReport};
pub use fp_poly::{FpPoly, PrimeFieldPolynomials};
pub use gaussian::{Gaussian, GaussianIntegers};
pub use integers::Integers;

/// Which ring a computation runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Domain {
    RationalIntegers,
    GaussianIntegers,
    PrimeFieldPolynomials(u64),
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::RationalIntegers => f.write_str("Z"),
            Domain::GaussianIntegers => f.write_str("Zi"),
            Domain::PrimeFieldPolynomials(p) => write!(f, "Fpt:{p}"),
        }
    }
}

impl FromStr for Domain {
    type Err = String;

    /// Accepts `Z`, `Zi` and `Fpt:<p>`; the prime is validated.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "Z" => Ok(Domain::RationalIntegers),
            "Zi" => Ok(Domain::GaussianIntegers),
            _ => {
                let p = s
                    .strip_prefix("Fpt:")
                    .ok_or_else(|| format!("unknown domain `{s}` (expected Z, Zi or Fpt:<p>)"))?;
                let p: u64 = p
                    .parse()
                    .map_err(|_| format!("invalid characteristic `{p}`"))?;
                PrimeFieldPolynomials::new(p).map_err(|e| e.to_string())?;
                Ok(Domain::PrimeFieldPolynomials(p))
            }
        }
    }
}

/// An integral domain with a discrete multiplicative norm `R -> N`, a
/// Euclidean division compatible with that norm, and a canonical choice of
/// associate (used to put fractions in lowest terms).
#[allow(clippy::wrong_self_convention)]
pub trait NormedDomain: Clone + fmt::Debug + Send + Sync {
    type Elem: Clone + Eq + Ord + Hash + fmt::Debug + Send + Sync;

    fn descriptor(&self) -> Domain;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    /// Image of a rational integer under the canonical map `Z -> R`.
    fn from_bigint(&self, n: &BigInt) -> Self::Elem;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// `‖0‖ = 0` and `‖ab‖ = ‖a‖‖b‖`.
    fn norm(&self, a: &Self::Elem) -> BigUint;

    /// True iff `a` divides 1. Decided structurally, not through the norm.
    fn is_unit(&self, a: &Self::Elem) -> bool;

    /// The full (finite) unit group.
    fn units(&self) -> Vec<Self::Elem>;

    /// Division with remainder, `a = q*b + r` with `‖r‖ < ‖b‖`. `b` must be nonzero.
    fn div_rem(&self, a: &Self::Elem, b: &Self::Elem) -> (Self::Elem, Self::Elem);

    /// The element nearest to `num/den`:
    /// integers round to nearest with ties toward zero (componentwise for
    /// Gaussian integers), polynomials take the polynomial part.
    fn round_quotient(&self, num: &Self::Elem, den: &Self::Elem) -> Self::Elem;

    /// The unit `u` for which `u*a` is the normalized associate of `a`.
    /// Returns 1 for zero.
    fn normalizing_unit(&self, a: &Self::Elem) -> Self::Elem;

    /// Whether `a` is a canonically represented element of this ring.
    fn contains(&self, a: &Self::Elem) -> bool;

    /// The adjoined constant written in element syntax (`i` or `t`), if any.
    fn generator(&self) -> Option<(&'static str, Self::Elem)>;

    /// Size used for box enumeration and shell ordering: `|a|` for integers,
    /// `max(|re|, |im|)` for Gaussian integers, degree for polynomials (zero
    /// and constants have size 0).
    fn size(&self, a: &Self::Elem) -> u64;

    /// All elements of size at most `size`, in ascending order.
    fn box_elements(&self, size: u32) -> Vec<Self::Elem>;

    /// All elements of bounded height, ascending: norm at most `height` for
    /// integers and Gaussian integers, degree at most `height` for polynomials.
    fn elements_within_height(&self, height: u32) -> Vec<Self::Elem>;

    /// Search offsets for the rounding oracle, ascending: `|o| <= window` for
    /// integers, `‖o‖ <= window` for Gaussian integers, degree below `window`
    /// for polynomials.
    fn window_offsets(&self, window: u32) -> Vec<Self::Elem>;

    /// A size `s` such that every `y` with `‖y‖^2 <= ‖a‖` has size at most `s`.
    fn sqrt_size_bound(&self, a: &Self::Elem) -> u32;

    /// A uniformly random element of `box_elements(size)`.
    fn random_element<G: Rng + ?Sized>(&self, rng: &mut G, size: u32) -> Self::Elem;

    fn format_elem(&self, a: &Self::Elem) -> String;

    // Provided operations.

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_bigint(&BigInt::from(n))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn pow(&self, a: &Self::Elem, mut e: u32) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// `Some(a/b)` when `b` divides `a` exactly.
    fn div_exact(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        if self.is_zero(b) {
            return None;
        }
        let (q, r) = self.div_rem(a, b);
        self.is_zero(&r).then_some(q)
    }

    fn normalize(&self, a: &Self::Elem) -> Self::Elem {
        self.mul(&self.normalizing_unit(a), a)
    }

    fn is_normalized(&self, a: &Self::Elem) -> bool {
        self.normalize(a) == *a
    }

    /// Normalized greatest common divisor.
    fn gcd(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let mut a = a.clone();
        let mut b = b.clone();
        while !self.is_zero(&b) {
            let (_, r) = self.div_rem(&a, &b);
            a = b;
            b = r;
        }
        self.normalize(&a)
    }

    fn ensure_contains(&self, a: &Self::Elem) -> Result<()> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(Error::NotInDomain {
                element: format!("{a:?}"),
                domain: self.descriptor().to_string(),
            })
        }
    }
}

/// Nearest integer to `num/den`, ties toward zero.
pub(crate) fn round_half_toward_zero(num: &BigInt, den: &BigInt) -> BigInt {
    use num_integer::Integer;
    use num_traits::Signed;

    let negative = num.is_negative() != den.is_negative();
    let (a, b) = (num.abs(), den.abs());
    let (mut q, r) = a.div_rem(&b);
    if (&r << 1u32) > b {
        q += BigInt::one();
    }
    if negative && !q.is_zero() {
        -q
    } else {
        q
    }
}

/// Floor of the square root.
pub(crate) fn isqrt(n: &BigUint) -> BigUint {
    n.sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding_ties_go_toward_zero() {
        let r = |n: i64, d: i64| round_half_toward_zero(&n.into(), &d.into());
        assert_eq!(r(-11, 5), BigInt::from(-2));
        assert_eq!(r(2, 5), BigInt::from(0));
        assert_eq!(r(1, 2), BigInt::from(0));
        assert_eq!(r(-1, 2), BigInt::from(0));
        assert_eq!(r(3, 2), BigInt::from(1));
        assert_eq!(r(-3, 2), BigInt::from(-1));
        assert_eq!(r(18, 5), BigInt::from(4));
        assert_eq!(r(7, -3), BigInt::from(-2));
    }

    #[test]
    fn domain_descriptor_parses() {
        assert_eq!("Z".parse::<Domain>(), Ok(Domain::RationalIntegers));
        assert_eq!("Zi".parse::<Domain>(), Ok(Domain::GaussianIntegers));
        assert_eq!(
            "Fpt:3".parse::<Domain>(),
            Ok(Domain::PrimeFieldPolynomials(3))
        );
        assert!("Fpt:4".parse::<Domain>().is_err());
        assert!("Q".parse::<Domain>().is_err());
        assert_eq!(Domain::PrimeFieldPolynomials(5).to_string(), "Fpt:5");
    }
}
