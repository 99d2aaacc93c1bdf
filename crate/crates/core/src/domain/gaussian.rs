use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use rand::Rng;

use super::{isqrt, round_half_toward_zero, Domain, NormedDomain};

/// A Gaussian integer `re + im*i`. Ordered lexicographically by `(re, im)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gaussian {
    pub re: BigInt,
    pub im: BigInt,
}

impl Gaussian {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        Gaussian {
            re: re.into(),
            im: im.into(),
        }
    }

    fn conj(&self) -> Gaussian {
        Gaussian {
            re: self.re.clone(),
            im: -&self.im,
        }
    }
}

/// `Z[i]` with `‖a + bi‖ = a^2 + b^2`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct GaussianIntegers;

impl NormedDomain for GaussianIntegers {
    type Elem = Gaussian;

    fn descriptor(&self) -> Domain {
        Domain::GaussianIntegers
    }

    fn zero(&self) -> Gaussian {
        Gaussian::new(0, 0)
    }

    fn one(&self) -> Gaussian {
        Gaussian::new(1, 0)
    }

    fn from_bigint(&self, n: &BigInt) -> Gaussian {
        Gaussian {
            re: n.clone(),
            im: BigInt::zero(),
        }
    }

    fn add(&self, a: &Gaussian, b: &Gaussian) -> Gaussian {
        Gaussian {
            re: &a.re + &b.re,
            im: &a.im + &b.im,
        }
    }

    fn neg(&self, a: &Gaussian) -> Gaussian {
        Gaussian {
            re: -&a.re,
            im: -&a.im,
        }
    }

    fn mul(&self, a: &Gaussian, b: &Gaussian) -> Gaussian {
        Gaussian {
            re: &a.re * &b.re - &a.im * &b.im,
            im: &a.re * &b.im + &a.im * &b.re,
        }
    }

    fn is_zero(&self, a: &Gaussian) -> bool {
        a.re.is_zero() && a.im.is_zero()
    }

    fn norm(&self, a: &Gaussian) -> BigUint {
        (&a.re * &a.re + &a.im * &a.im).into_parts().1
    }

    fn is_unit(&self, a: &Gaussian) -> bool {
        (a.re.is_zero() && a.im.magnitude().is_one())
            || (a.im.is_zero() && a.re.magnitude().is_one())
    }

    fn units(&self) -> Vec<Gaussian> {
        vec![
            Gaussian::new(-1, 0),
            Gaussian::new(0, -1),
            Gaussian::new(0, 1),
            Gaussian::new(1, 0),
        ]
    }

    fn div_rem(&self, a: &Gaussian, b: &Gaussian) -> (Gaussian, Gaussian) {
        let q = self.round_quotient(a, b);
        let r = self.sub(a, &self.mul(&q, b));
        (q, r)
    }

    fn round_quotient(&self, num: &Gaussian, den: &Gaussian) -> Gaussian {
        let scaled = self.mul(num, &den.conj());
        let n = BigInt::from(self.norm(den));
        Gaussian {
            re: round_half_toward_zero(&scaled.re, &n),
            im: round_half_toward_zero(&scaled.im, &n),
        }
    }

    /// Normalized associates lie in the first quadrant: `re > 0, im >= 0`.
    fn normalizing_unit(&self, a: &Gaussian) -> Gaussian {
        if self.is_zero(a) {
            return self.one();
        }
        self.units()
            .into_iter()
            .find(|u| {
                let b = self.mul(u, a);
                b.re.is_positive() && !b.im.is_negative()
            })
            .expect("exactly one associate lies in the first quadrant")
    }

    fn contains(&self, _a: &Gaussian) -> bool {
        true
    }

    fn generator(&self) -> Option<(&'static str, Gaussian)> {
        Some(("i", Gaussian::new(0, 1)))
    }

    fn size(&self, a: &Gaussian) -> u64 {
        let m = a.re.magnitude().max(a.im.magnitude());
        m.try_into().unwrap_or(u64::MAX)
    }

    fn box_elements(&self, size: u32) -> Vec<Gaussian> {
        let s = i64::from(size);
        (-s..=s)
            .flat_map(|re| (-s..=s).map(move |im| Gaussian::new(re, im)))
            .collect()
    }

    fn elements_within_height(&self, height: u32) -> Vec<Gaussian> {
        let s = isqrt(&BigUint::from(height)).try_into().unwrap_or(u32::MAX);
        let h = BigUint::from(height);
        self.box_elements(s)
            .into_iter()
            .filter(|g| self.norm(g) <= h)
            .collect()
    }

    fn window_offsets(&self, window: u32) -> Vec<Gaussian> {
        self.elements_within_height(window)
    }

    fn sqrt_size_bound(&self, a: &Gaussian) -> u32 {
        // |y|^2 <= ‖y‖ and ‖y‖^2 <= ‖a‖ give max(|re|,|im|) <= ‖a‖^(1/4)
        isqrt(&isqrt(&self.norm(a))).try_into().unwrap_or(u32::MAX)
    }

    fn random_element<G: Rng + ?Sized>(&self, rng: &mut G, size: u32) -> Gaussian {
        let s = i64::from(size);
        Gaussian::new(rng.random_range(-s..=s), rng.random_range(-s..=s))
    }

    /// `a`, `bi`, `(a+bi)` or `(a-bi)`, with unit imaginary parts written `i`.
    fn format_elem(&self, a: &Gaussian) -> String {
        let imag = |b: &BigInt| -> String {
            if b.is_one() {
                "i".to_owned()
            } else if *b == -BigInt::one() {
                "-i".to_owned()
            } else {
                format!("{b}i")
            }
        };
        match (a.re.is_zero(), a.im.is_zero()) {
            (_, true) => a.re.to_string(),
            (true, false) => imag(&a.im),
            (false, false) => {
                let sign = if a.im.is_negative() { '-' } else { '+' };
                let abs_im = a.im.abs();
                let im = if abs_im.is_one() {
                    "i".to_owned()
                } else {
                    format!("{abs_im}i")
                };
                format!("({}{sign}{im})", a.re)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: i64, im: i64) -> Gaussian {
        Gaussian::new(re, im)
    }

    #[test]
    fn ring_operations() {
        let d = GaussianIntegers;
        assert_eq!(d.add(&g(1, 2), &g(3, -2)), g(4, 0));
        assert_eq!(d.mul(&g(1, 1), &g(1, -1)), g(2, 0));
    }

    #[test]
    fn norm_examples() {
        let d = GaussianIntegers;
        assert_eq!(d.norm(&g(3, 2)), BigUint::from(13u32));
        assert_eq!(d.norm(&g(0, 0)), BigUint::zero());
    }

    #[test]
    fn units() {
        let d = GaussianIntegers;
        assert!(d.is_unit(&g(0, 1)));
        assert!(d.is_unit(&g(-1, 0)));
        assert!(!d.is_unit(&g(1, 1)));
        assert!(!d.is_unit(&g(0, 0)));
    }

    #[test]
    fn normalization_lands_in_first_quadrant() {
        let d = GaussianIntegers;
        for a in d.box_elements(3) {
            if d.is_zero(&a) {
                continue;
            }
            let n = d.normalize(&a);
            assert!(n.re.is_positive() && !n.im.is_negative(), "{a:?} -> {n:?}");
            assert!(d.is_unit(&d.normalizing_unit(&a)));
        }
    }

    #[test]
    fn division_remainder_is_small() {
        let d = GaussianIntegers;
        for a in d.box_elements(4) {
            for b in d.box_elements(2) {
                if d.is_zero(&b) {
                    continue;
                }
                let (q, r) = d.div_rem(&a, &b);
                assert_eq!(d.add(&d.mul(&q, &b), &r), a);
                assert!(d.norm(&r) < d.norm(&b));
            }
        }
    }

    #[test]
    fn formatting() {
        let d = GaussianIntegers;
        assert_eq!(d.format_elem(&g(3, 0)), "3");
        assert_eq!(d.format_elem(&g(0, -1)), "-i");
        assert_eq!(d.format_elem(&g(0, 4)), "4i");
        assert_eq!(d.format_elem(&g(1, 2)), "(1+2i)");
        assert_eq!(d.format_elem(&g(-3, -1)), "(-3-i)");
    }
}
