//! Shared helpers: random inputs and an independent rational evaluator.
#![allow(dead_code)]

use adc_core::{FractionPoint, Integers, NormedDomain, QuadraticPolynomial};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn z(n: i64) -> BigInt {
    BigInt::from(n)
}

pub fn zv(v: &[i64]) -> Vec<BigInt> {
    v.iter().copied().map(z).collect()
}

pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(z(n), z(d))
}

/// An integer quadratic polynomial kept as plain coefficient lists, evaluated
/// over `Q` without touching the library's arithmetic.
#[derive(Debug, Clone)]
pub struct ZPoly {
    pub dim: usize,
    /// `quad[i][j]` for `i <= j`; entries below the diagonal are ignored.
    pub quad: Vec<Vec<i64>>,
    pub lin: Vec<i64>,
    pub constant: i64,
}

impl ZPoly {
    pub fn random<G: Rng>(rng: &mut G, dim: usize, size: i64) -> Self {
        let quad = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| {
                        if j >= i {
                            rng.random_range(-size..=size)
                        } else {
                            0
                        }
                    })
                    .collect()
            })
            .collect();
        ZPoly {
            dim,
            quad,
            lin: (0..dim).map(|_| rng.random_range(-size..=size)).collect(),
            constant: rng.random_range(-size..=size),
        }
    }

    pub fn diagonal(coeffs: &[i64]) -> Self {
        let dim = coeffs.len();
        let mut quad = vec![vec![0; dim]; dim];
        for (i, c) in coeffs.iter().enumerate() {
            quad[i][i] = *c;
        }
        ZPoly {
            dim,
            quad,
            lin: vec![0; dim],
            constant: 0,
        }
    }

    pub fn to_lib(&self) -> QuadraticPolynomial<BigInt> {
        let mut f = QuadraticPolynomial::zero(&Integers, self.dim).unwrap();
        for i in 0..self.dim {
            for j in i..self.dim {
                f.set_quad(i, j, z(self.quad[i][j]));
            }
            f.set_lin(i, z(self.lin[i]));
        }
        f.set_constant(z(self.constant));
        f
    }

    pub fn eval_f2(&self, x: &[BigRational]) -> BigRational {
        let mut acc = BigRational::from_integer(z(0));
        for i in 0..self.dim {
            for j in i..self.dim {
                acc += BigRational::from_integer(z(self.quad[i][j])) * &x[i] * &x[j];
            }
        }
        acc
    }

    pub fn eval(&self, x: &[BigRational]) -> BigRational {
        let mut acc = self.eval_f2(x) + BigRational::from_integer(z(self.constant));
        for (c, xi) in self.lin.iter().zip(x) {
            acc += BigRational::from_integer(z(*c)) * xi;
        }
        acc
    }

    /// `f2(x+y) - f2(x) - f2(y)` expanded by hand: `sum c_ij (x_i y_j + x_j y_i)`.
    pub fn bilinear(&self, x: &[BigRational], y: &[BigRational]) -> BigRational {
        let mut acc = BigRational::from_integer(z(0));
        for i in 0..self.dim {
            for j in i..self.dim {
                let c = BigRational::from_integer(z(self.quad[i][j]));
                acc += c * (&x[i] * &y[j] + &x[j] * &y[i]);
            }
        }
        acc
    }

    pub fn eval_int(&self, y: &[BigInt]) -> BigRational {
        self.eval(&ints(y))
    }
}

pub fn ints(v: &[BigInt]) -> Vec<BigRational> {
    v.iter().cloned().map(BigRational::from_integer).collect()
}

pub fn rationals(p: &FractionPoint<BigInt>) -> Vec<BigRational> {
    p.num()
        .iter()
        .map(|a| BigRational::new(a.clone(), p.den().clone()))
        .collect()
}

/// Random polynomial over any domain, coefficients from the box of `size`.
pub fn random_poly<D: NormedDomain, G: Rng>(
    d: &D,
    rng: &mut G,
    dim: usize,
    size: u32,
) -> QuadraticPolynomial<D::Elem> {
    let mut f = QuadraticPolynomial::zero(d, dim).unwrap();
    let coeff = |rng: &mut G| {
        if rng.random_bool(0.3) {
            d.zero()
        } else {
            d.random_element(rng, size)
        }
    };
    for i in 0..dim {
        for j in i..dim {
            f.set_quad(i, j, coeff(rng));
        }
        f.set_lin(i, coeff(rng));
    }
    f.set_constant(coeff(rng));
    f
}

pub fn random_vec<D: NormedDomain, G: Rng>(
    d: &D,
    rng: &mut G,
    dim: usize,
    size: u32,
) -> Vec<D::Elem> {
    (0..dim).map(|_| d.random_element(rng, size)).collect()
}

/// Shifts the constant term so that `y0` becomes a zero.
pub fn through<D: NormedDomain>(
    d: &D,
    f: QuadraticPolynomial<D::Elem>,
    y0: &[D::Elem],
) -> QuadraticPolynomial<D::Elem> {
    let v = f.eval_integral(d, y0).unwrap();
    let c = d.sub(f.constant(), &v);
    f.with_constant(c)
}
