use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rand::Rng;

use super::{Domain, NormedDomain};
use crate::error::{Error, Result};

/// A polynomial over `F_p`, coefficients little-endian, no trailing zeros.
///
/// Ordered by degree first, then by coefficients from the leading one down.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FpPoly(Vec<u64>);

impl FpPoly {
    pub fn zero() -> Self {
        FpPoly(Vec::new())
    }

    /// Builds a polynomial from little-endian coefficients, reducing mod `p`.
    pub fn from_coeffs(coeffs: impl IntoIterator<Item = u64>, p: u64) -> Self {
        let mut c: Vec<u64> = coeffs.into_iter().map(|x| x % p).collect();
        trim(&mut c);
        FpPoly(c)
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.0
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    fn leading(&self) -> u64 {
        self.0.last().copied().unwrap_or(0)
    }
}

impl Ord for FpPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.iter().rev().cmp(other.0.iter().rev()))
    }
}

impl PartialOrd for FpPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn trim(c: &mut Vec<u64>) {
    while c.last() == Some(&0) {
        c.pop();
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut k = 2u64;
    while k * k <= p {
        if p.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}

/// `F_p[t]` with `‖a‖ = p^deg(a)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeFieldPolynomials {
    p: u64,
}

impl PrimeFieldPolynomials {
    pub const MAX_CHARACTERISTIC: u64 = 1 << 31;

    pub fn new(p: u64) -> Result<Self> {
        if p >= Self::MAX_CHARACTERISTIC {
            return Err(Error::CharacteristicTooLarge(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeFieldPolynomials { p })
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn poly(&self, coeffs: &[u64]) -> FpPoly {
        FpPoly::from_coeffs(coeffs.iter().copied(), self.p)
    }

    fn inv(&self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.p));
        let e = BigInt::from(a).extended_gcd(&BigInt::from(self.p));
        e.x.mod_floor(&BigInt::from(self.p)).to_u64().unwrap()
    }

    /// All polynomials of degree below `n` (zero included), ascending.
    fn all_below_degree(&self, n: u32) -> Vec<FpPoly> {
        let count = (self.p as usize).pow(n);
        let mut out: Vec<FpPoly> = (0..count)
            .map(|mut k| {
                let digits = (0..n).map(|_| {
                    let c = (k % self.p as usize) as u64;
                    k /= self.p as usize;
                    c
                });
                FpPoly::from_coeffs(digits.collect::<Vec<_>>(), self.p)
            })
            .collect();
        out.sort();
        out
    }
}

impl NormedDomain for PrimeFieldPolynomials {
    type Elem = FpPoly;

    fn descriptor(&self) -> Domain {
        Domain::PrimeFieldPolynomials(self.p)
    }

    fn zero(&self) -> FpPoly {
        FpPoly::zero()
    }

    fn one(&self) -> FpPoly {
        FpPoly(vec![1])
    }

    fn from_bigint(&self, n: &BigInt) -> FpPoly {
        let r = n.mod_floor(&BigInt::from(self.p)).to_u64().unwrap();
        FpPoly::from_coeffs([r], self.p)
    }

    fn add(&self, a: &FpPoly, b: &FpPoly) -> FpPoly {
        let n = a.0.len().max(b.0.len());
        let get = |v: &FpPoly, i: usize| v.0.get(i).copied().unwrap_or(0);
        FpPoly::from_coeffs((0..n).map(|i| (get(a, i) + get(b, i)) % self.p), self.p)
    }

    fn neg(&self, a: &FpPoly) -> FpPoly {
        FpPoly::from_coeffs(a.0.iter().map(|&x| (self.p - x) % self.p), self.p)
    }

    fn mul(&self, a: &FpPoly, b: &FpPoly) -> FpPoly {
        if a.0.is_empty() || b.0.is_empty() {
            return FpPoly::zero();
        }
        let mut out = vec![0u64; a.0.len() + b.0.len() - 1];
        for (i, &x) in a.0.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.0.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % self.p;
            }
        }
        FpPoly::from_coeffs(out, self.p)
    }

    fn is_zero(&self, a: &FpPoly) -> bool {
        a.0.is_empty()
    }

    fn norm(&self, a: &FpPoly) -> BigUint {
        match a.degree() {
            None => BigUint::zero(),
            Some(d) => BigUint::from(self.p).pow(d as u32),
        }
    }

    fn is_unit(&self, a: &FpPoly) -> bool {
        a.degree() == Some(0)
    }

    fn units(&self) -> Vec<FpPoly> {
        (1..self.p).map(|c| FpPoly(vec![c])).collect()
    }

    fn div_rem(&self, a: &FpPoly, b: &FpPoly) -> (FpPoly, FpPoly) {
        let db = b.degree().expect("division by the zero polynomial");
        let lc_inv = self.inv(b.leading());
        let mut r = a.0.clone();
        let mut q = vec![0u64; a.0.len().saturating_sub(db)];
        while r.len() > db {
            let top = r.len() - 1;
            let c = r[top] * lc_inv % self.p;
            let shift = top - db;
            q[shift] = c;
            for (j, &bj) in b.0.iter().enumerate() {
                r[shift + j] = (r[shift + j] + self.p - c * bj % self.p) % self.p;
            }
            trim(&mut r);
        }
        (FpPoly::from_coeffs(q, self.p), FpPoly(r))
    }

    fn round_quotient(&self, num: &FpPoly, den: &FpPoly) -> FpPoly {
        self.div_rem(num, den).0
    }

    /// Normalized polynomials are monic.
    fn normalizing_unit(&self, a: &FpPoly) -> FpPoly {
        if a.0.is_empty() {
            self.one()
        } else {
            FpPoly(vec![self.inv(a.leading())])
        }
    }

    fn contains(&self, a: &FpPoly) -> bool {
        a.0.last() != Some(&0) && a.0.iter().all(|&c| c < self.p)
    }

    fn generator(&self) -> Option<(&'static str, FpPoly)> {
        Some(("t", FpPoly::from_coeffs([0, 1], self.p)))
    }

    fn size(&self, a: &FpPoly) -> u64 {
        a.degree().unwrap_or(0) as u64
    }

    fn box_elements(&self, size: u32) -> Vec<FpPoly> {
        self.all_below_degree(size + 1)
    }

    fn elements_within_height(&self, height: u32) -> Vec<FpPoly> {
        self.box_elements(height)
    }

    fn window_offsets(&self, window: u32) -> Vec<FpPoly> {
        self.all_below_degree(window)
    }

    fn sqrt_size_bound(&self, a: &FpPoly) -> u32 {
        (a.degree().unwrap_or(0) / 2) as u32
    }

    fn random_element<G: Rng + ?Sized>(&self, rng: &mut G, size: u32) -> FpPoly {
        FpPoly::from_coeffs((0..=size).map(|_| rng.random_range(0..self.p)), self.p)
    }

    /// Decimal coefficients, descending powers of `t`: `2*t^3+t+1`.
    fn format_elem(&self, a: &FpPoly) -> String {
        if a.0.is_empty() {
            return "0".to_owned();
        }
        let mut out = String::new();
        for (k, &c) in a.0.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !out.is_empty() {
                out.push('+');
            }
            let mono = match k {
                0 => String::new(),
                1 => "t".to_owned(),
                _ => format!("t^{k}"),
            };
            match (c, k) {
                (_, 0) => out.push_str(&c.to_string()),
                (1, _) => out.push_str(&mono),
                _ => out.push_str(&format!("{c}*{mono}")),
            }
        }
        out
    }

    fn gcd(&self, a: &FpPoly, b: &FpPoly) -> FpPoly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.0.is_empty() {
            let (_, r) = self.div_rem(&a, &b);
            a = b;
            b = r;
        }
        self.normalize(&a)
    }
}
