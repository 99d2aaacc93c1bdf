use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use super::{isqrt, round_half_toward_zero, Domain, NormedDomain};

/// The rational integers with `‖a‖ = |a|`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Integers;

impl NormedDomain for Integers {
    type Elem = BigInt;

    fn descriptor(&self) -> Domain {
        Domain::RationalIntegers
    }

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }

    fn one(&self) -> BigInt {
        BigInt::one()
    }

    fn from_bigint(&self, n: &BigInt) -> BigInt {
        n.clone()
    }

    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }

    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }

    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }

    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }

    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }

    fn norm(&self, a: &BigInt) -> BigUint {
        a.magnitude().clone()
    }

    fn is_unit(&self, a: &BigInt) -> bool {
        a.magnitude().is_one()
    }

    fn units(&self) -> Vec<BigInt> {
        vec![BigInt::from(-1), BigInt::one()]
    }

    fn div_rem(&self, a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
        Integer::div_rem(a, b)
    }

    fn round_quotient(&self, num: &BigInt, den: &BigInt) -> BigInt {
        round_half_toward_zero(num, den)
    }

    fn normalizing_unit(&self, a: &BigInt) -> BigInt {
        if a.sign() == Sign::Minus {
            BigInt::from(-1)
        } else {
            BigInt::one()
        }
    }

    fn contains(&self, _a: &BigInt) -> bool {
        true
    }

    fn generator(&self) -> Option<(&'static str, BigInt)> {
        None
    }

    fn size(&self, a: &BigInt) -> u64 {
        a.magnitude().try_into().unwrap_or(u64::MAX)
    }

    fn box_elements(&self, size: u32) -> Vec<BigInt> {
        let s = i64::from(size);
        (-s..=s).map(BigInt::from).collect()
    }

    fn elements_within_height(&self, height: u32) -> Vec<BigInt> {
        self.box_elements(height)
    }

    fn window_offsets(&self, window: u32) -> Vec<BigInt> {
        self.box_elements(window)
    }

    fn sqrt_size_bound(&self, a: &BigInt) -> u32 {
        isqrt(a.magnitude()).try_into().unwrap_or(u32::MAX)
    }

    fn random_element<G: Rng + ?Sized>(&self, rng: &mut G, size: u32) -> BigInt {
        let s = i64::from(size);
        BigInt::from(rng.random_range(-s..=s))
    }

    fn format_elem(&self, a: &BigInt) -> String {
        a.to_string()
    }

    fn gcd(&self, a: &BigInt, b: &BigInt) -> BigInt {
        Integer::gcd(a, b)
    }

    fn normalize(&self, a: &BigInt) -> BigInt {
        a.abs()
    }
}
