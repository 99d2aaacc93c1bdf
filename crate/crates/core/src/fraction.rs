//! Exact arithmetic in the fraction field `K` of a normed domain.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::domain::NormedDomain;
use crate::error::{Error, Result};

/// An element `num/den` of `K`, kept in lowest terms with a normalized
/// denominator, so equal fractions are equal values.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Fraction<E> {
    num: E,
    den: E,
}

impl<E: Clone + Eq> Fraction<E> {
    pub fn new<D: NormedDomain<Elem = E>>(d: &D, num: E, den: E) -> Result<Self> {
        if d.is_zero(&den) {
            return Err(Error::ZeroDenominator);
        }
        let g = d.gcd(&num, &den);
        let (num, den) = (
            d.div_exact(&num, &g).expect("gcd divides numerator"),
            d.div_exact(&den, &g).expect("gcd divides denominator"),
        );
        let u = d.normalizing_unit(&den);
        Ok(Fraction {
            num: d.mul(&u, &num),
            den: d.mul(&u, &den),
        })
    }

    pub fn from_elem<D: NormedDomain<Elem = E>>(d: &D, a: E) -> Self {
        Fraction {
            num: a,
            den: d.one(),
        }
    }

    pub fn zero<D: NormedDomain<Elem = E>>(d: &D) -> Self {
        Self::from_elem(d, d.zero())
    }

    pub fn num(&self) -> &E {
        &self.num
    }

    pub fn den(&self) -> &E {
        &self.den
    }

    pub fn is_zero<D: NormedDomain<Elem = E>>(&self, d: &D) -> bool {
        d.is_zero(&self.num)
    }

    /// The element of `R` this fraction equals, if it lies in `R`.
    pub fn as_integral<D: NormedDomain<Elem = E>>(&self, d: &D) -> Option<E> {
        d.is_unit(&self.den)
            .then(|| d.div_exact(&self.num, &self.den).expect("units divide"))
    }

    /// `‖num‖ / ‖den‖`.
    pub fn ext_norm<D: NormedDomain<Elem = E>>(&self, d: &D) -> BigRational {
        BigRational::new(
            BigInt::from(d.norm(&self.num)),
            BigInt::from(d.norm(&self.den)),
        )
    }

    pub fn add<D: NormedDomain<Elem = E>>(&self, d: &D, other: &Self) -> Self {
        let num = d.add(&d.mul(&self.num, &other.den), &d.mul(&other.num, &self.den));
        Self::new(d, num, d.mul(&self.den, &other.den)).expect("nonzero product of denominators")
    }

    pub fn neg<D: NormedDomain<Elem = E>>(&self, d: &D) -> Self {
        Fraction {
            num: d.neg(&self.num),
            den: self.den.clone(),
        }
    }

    pub fn sub<D: NormedDomain<Elem = E>>(&self, d: &D, other: &Self) -> Self {
        self.add(d, &other.neg(d))
    }

    pub fn mul<D: NormedDomain<Elem = E>>(&self, d: &D, other: &Self) -> Self {
        Self::new(
            d,
            d.mul(&self.num, &other.num),
            d.mul(&self.den, &other.den),
        )
        .expect("nonzero product of denominators")
    }

    pub fn inv<D: NormedDomain<Elem = E>>(&self, d: &D) -> Result<Self> {
        Self::new(d, self.den.clone(), self.num.clone())
    }

    pub fn format<D: NormedDomain<Elem = E>>(&self, d: &D) -> String {
        if d.is_unit(&self.den) {
            d.format_elem(&self.num)
        } else {
            format!("{}/{}", d.format_elem(&self.num), d.format_elem(&self.den))
        }
    }
}

/// A point `a/b` of `K^d` with numerator vector `a` and one shared
/// denominator `b`.
///
/// [`FractionPoint::reduce`] yields the canonical form; [`FractionPoint::unreduced`]
/// keeps the given representative, which the descent accepts as well.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FractionPoint<E> {
    num: Vec<E>,
    den: E,
}

impl<E: Clone + Eq> FractionPoint<E> {
    /// Divides out the gcd of all entries and normalizes the denominator.
    pub fn reduce<D: NormedDomain<Elem = E>>(d: &D, num: Vec<E>, den: E) -> Result<Self> {
        let p = Self::unreduced(d, num, den)?;
        let g = p.num.iter().fold(p.den.clone(), |g, a| d.gcd(&g, a));
        let u = d.normalizing_unit(&d.div_exact(&p.den, &g).expect("gcd divides"));
        let scale = |x: &E| d.mul(&u, &d.div_exact(x, &g).expect("gcd divides"));
        Ok(FractionPoint {
            num: p.num.iter().map(scale).collect(),
            den: scale(&p.den),
        })
    }

    /// Keeps `num/den` as given. Fails on a zero denominator or empty vector.
    pub fn unreduced<D: NormedDomain<Elem = E>>(d: &D, num: Vec<E>, den: E) -> Result<Self> {
        if num.is_empty() {
            return Err(Error::ZeroDimension);
        }
        if d.is_zero(&den) {
            return Err(Error::ZeroDenominator);
        }
        for a in num.iter().chain(std::iter::once(&den)) {
            d.ensure_contains(a)?;
        }
        Ok(FractionPoint { num, den })
    }

    pub fn from_integral<D: NormedDomain<Elem = E>>(d: &D, a: Vec<E>) -> Result<Self> {
        Self::unreduced(d, a, d.one())
    }

    pub fn dim(&self) -> usize {
        self.num.len()
    }

    pub fn num(&self) -> &[E] {
        &self.num
    }

    pub fn den(&self) -> &E {
        &self.den
    }

    pub fn canonical<D: NormedDomain<Elem = E>>(&self, d: &D) -> Self {
        Self::reduce(d, self.num.clone(), self.den.clone()).expect("valid point")
    }

    pub fn is_canonical<D: NormedDomain<Elem = E>>(&self, d: &D) -> bool {
        self.canonical(d) == *self
    }

    /// `Some(a)` when the point lies in `R^d`.
    pub fn as_integral<D: NormedDomain<Elem = E>>(&self, d: &D) -> Option<Vec<E>> {
        let c = self.canonical(d);
        d.is_unit(&c.den).then(|| {
            c.num
                .iter()
                .map(|a| d.div_exact(a, &c.den).expect("units divide"))
                .collect()
        })
    }

    pub fn is_integral<D: NormedDomain<Elem = E>>(&self, d: &D) -> bool {
        self.as_integral(d).is_some()
    }

    pub fn coord<D: NormedDomain<Elem = E>>(&self, d: &D, i: usize) -> Fraction<E> {
        Fraction::new(d, self.num[i].clone(), self.den.clone()).expect("nonzero denominator")
    }

    /// `self - y` for `y` in `R^d`, as `(a - b*y)/b`.
    pub fn sub_integral<D: NormedDomain<Elem = E>>(&self, d: &D, y: &[E]) -> Result<Self> {
        check_dim(self.dim(), y.len())?;
        let num = self
            .num
            .iter()
            .zip(y)
            .map(|(a, yi)| d.sub(a, &d.mul(&self.den, yi)))
            .collect();
        Ok(FractionPoint {
            num,
            den: self.den.clone(),
        })
    }

    pub fn add<D: NormedDomain<Elem = E>>(&self, d: &D, other: &Self) -> Result<Self> {
        check_dim(self.dim(), other.dim())?;
        let num = self
            .num
            .iter()
            .zip(&other.num)
            .map(|(a, b)| d.add(&d.mul(a, &other.den), &d.mul(b, &self.den)))
            .collect();
        Self::reduce(d, num, d.mul(&self.den, &other.den))
    }

    pub fn scale<D: NormedDomain<Elem = E>>(&self, d: &D, c: &Fraction<E>) -> Self {
        let num = self.num.iter().map(|a| d.mul(a, c.num())).collect();
        Self::reduce(d, num, d.mul(&self.den, c.den())).expect("nonzero denominator")
    }

    /// `a1,...,ad/b`, the point syntax accepted by the CLI.
    pub fn format<D: NormedDomain<Elem = E>>(&self, d: &D) -> String {
        let nums: Vec<String> = self.num.iter().map(|a| d.format_elem(a)).collect();
        format!("{}/{}", nums.join(","), d.format_elem(&self.den))
    }
}

/// `(a1,...,ad)`.
pub fn format_vector<D: NormedDomain>(d: &D, v: &[D::Elem]) -> String {
    let parts: Vec<String> = v.iter().map(|a| d.format_elem(a)).collect();
    format!("({})", parts.join(","))
}

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
