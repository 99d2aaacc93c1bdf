//! Quadratic polynomials `f = f2 + f1 + f0` over a normed domain.

use crate::domain::NormedDomain;
use crate::error::{Error, Result};
use crate::fraction::{check_dim, Fraction, FractionPoint};

/// A polynomial of degree at most 2 in `dim` variables.
///
/// The quadratic part is stored as the monomial table `c_ij`, `i <= j`, rather
/// than a symmetric matrix: halving off-diagonal entries is impossible in
/// characteristic 2.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadraticPolynomial<E> {
    dim: usize,
    quad: Vec<E>,
    lin: Vec<E>,
    constant: E,
}

/// Coefficients of `f(y + T v) = a T^2 + b T + c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineExpansion<E> {
    pub a: E,
    pub b: E,
    pub c: E,
}

fn tri_index(dim: usize, i: usize, j: usize) -> usize {
    let (i, j) = if i <= j { (i, j) } else { (j, i) };
    i * dim - i * i.saturating_sub(1) / 2 + (j - i)
}

impl<E: Clone + Eq> QuadraticPolynomial<E> {
    pub fn zero<D: NormedDomain<Elem = E>>(d: &D, dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        Ok(QuadraticPolynomial {
            dim,
            quad: vec![d.zero(); dim * (dim + 1) / 2],
            lin: vec![d.zero(); dim],
            constant: d.zero(),
        })
    }

    /// `quad` lists `c_ij` for `i <= j` in row-major order.
    pub fn from_parts<D: NormedDomain<Elem = E>>(
        d: &D,
        dim: usize,
        quad: Vec<E>,
        lin: Vec<E>,
        constant: E,
    ) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        check_dim(dim * (dim + 1) / 2, quad.len())?;
        check_dim(dim, lin.len())?;
        for c in quad.iter().chain(&lin).chain(std::iter::once(&constant)) {
            d.ensure_contains(c)?;
        }
        Ok(QuadraticPolynomial {
            dim,
            quad,
            lin,
            constant,
        })
    }

    /// `sum c_i X_i^2`.
    pub fn diagonal<D: NormedDomain<Elem = E>>(d: &D, coeffs: Vec<E>) -> Result<Self> {
        let mut f = Self::zero(d, coeffs.len())?;
        for (i, c) in coeffs.into_iter().enumerate() {
            f.set_quad(i, i, c);
        }
        Ok(f)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn quad_coeff(&self, i: usize, j: usize) -> &E {
        &self.quad[tri_index(self.dim, i, j)]
    }

    pub fn lin_coeff(&self, i: usize) -> &E {
        &self.lin[i]
    }

    pub fn constant(&self) -> &E {
        &self.constant
    }

    pub fn set_quad(&mut self, i: usize, j: usize, c: E) {
        let k = tri_index(self.dim, i, j);
        self.quad[k] = c;
    }

    pub fn set_lin(&mut self, i: usize, c: E) {
        self.lin[i] = c;
    }

    pub fn set_constant(&mut self, c: E) {
        self.constant = c;
    }

    pub fn with_constant(mut self, c: E) -> Self {
        self.constant = c;
        self
    }

    /// True when the linear and constant parts vanish.
    pub fn is_form<D: NormedDomain<Elem = E>>(&self, d: &D) -> bool {
        self.lin.iter().all(|c| d.is_zero(c)) && d.is_zero(&self.constant)
    }

    pub fn is_zero<D: NormedDomain<Elem = E>>(&self, d: &D) -> bool {
        self.is_form(d) && self.quad.iter().all(|c| d.is_zero(c))
    }

    /// `f2(a)` for `a` in `R^d`.
    pub fn eval_f2_integral<D: NormedDomain<Elem = E>>(&self, d: &D, a: &[E]) -> Result<E> {
        check_dim(self.dim, a.len())?;
        let mut acc = d.zero();
        for i in 0..self.dim {
            for j in i..self.dim {
                let c = self.quad_coeff(i, j);
                if !d.is_zero(c) {
                    acc = d.add(&acc, &d.mul(c, &d.mul(&a[i], &a[j])));
                }
            }
        }
        Ok(acc)
    }

    /// `f1(a)` for `a` in `R^d`.
    pub fn eval_f1_integral<D: NormedDomain<Elem = E>>(&self, d: &D, a: &[E]) -> Result<E> {
        check_dim(self.dim, a.len())?;
        Ok(self
            .lin
            .iter()
            .zip(a)
            .fold(d.zero(), |acc, (l, x)| d.add(&acc, &d.mul(l, x))))
    }

    /// `f(a)` for `a` in `R^d`.
    pub fn eval_integral<D: NormedDomain<Elem = E>>(&self, d: &D, a: &[E]) -> Result<E> {
        let v = d.add(&self.eval_f2_integral(d, a)?, &self.eval_f1_integral(d, a)?);
        Ok(d.add(&v, &self.constant))
    }

    /// `f(a/b) = (f2(a) + b f1(a) + b^2 f0) / b^2`, computed in `R` before the
    /// single final division.
    pub fn eval<D: NormedDomain<Elem = E>>(
        &self,
        d: &D,
        x: &FractionPoint<E>,
    ) -> Result<Fraction<E>> {
        let (a, b) = (x.num(), x.den());
        let b2 = d.mul(b, b);
        let num = d.add(
            &d.add(
                &self.eval_f2_integral(d, a)?,
                &d.mul(b, &self.eval_f1_integral(d, a)?),
            ),
            &d.mul(&b2, &self.constant),
        );
        Fraction::new(d, num, b2)
    }

    pub fn eval_f2<D: NormedDomain<Elem = E>>(
        &self,
        d: &D,
        x: &FractionPoint<E>,
    ) -> Result<Fraction<E>> {
        let b = x.den();
        Fraction::new(d, self.eval_f2_integral(d, x.num())?, d.mul(b, b))
    }

    /// `<x, y> = f2(x + y) - f2(x) - f2(y)`.
    pub fn bilinear<D: NormedDomain<Elem = E>>(
        &self,
        d: &D,
        x: &FractionPoint<E>,
        y: &FractionPoint<E>,
    ) -> Result<Fraction<E>> {
        check_dim(self.dim, x.dim())?;
        check_dim(self.dim, y.dim())?;
        let s = x.add(d, y)?;
        Ok(self
            .eval_f2(d, &s)?
            .sub(d, &self.eval_f2(d, x)?)
            .sub(d, &self.eval_f2(d, y)?))
    }

    /// Coefficients of `F(T) = f(y + T v)` for `y`, `v` in `R^d`:
    /// `a = f2(v)`, `c = f(y)`, `b = f(y + v) - a - c`. The identity is
    /// re-checked at `T = -1`.
    pub fn expand_along_line<D: NormedDomain<Elem = E>>(
        &self,
        d: &D,
        y: &[E],
        v: &[E],
    ) -> Result<LineExpansion<E>> {
        check_dim(self.dim, y.len())?;
        check_dim(self.dim, v.len())?;
        let a = self.eval_f2_integral(d, v)?;
        let c = self.eval_integral(d, y)?;
        let y_plus_v: Vec<E> = y.iter().zip(v).map(|(p, q)| d.add(p, q)).collect();
        let b = d.sub(&d.sub(&self.eval_integral(d, &y_plus_v)?, &a), &c);

        let y_minus_v: Vec<E> = y.iter().zip(v).map(|(p, q)| d.sub(p, q)).collect();
        let at_minus_one = d.add(&d.sub(&a, &b), &c);
        if self.eval_integral(d, &y_minus_v)? != at_minus_one {
            return Err(Error::Invariant("f(y - v) != A - B + C".into()));
        }
        Ok(LineExpansion { a, b, c })
    }

    /// The homogeneous quadratic part `f2` as a polynomial.
    pub fn quadratic_part<D: NormedDomain<Elem = E>>(&self, d: &D) -> Self {
        QuadraticPolynomial {
            dim: self.dim,
            quad: self.quad.clone(),
            lin: vec![d.zero(); self.dim],
            constant: d.zero(),
        }
    }

    /// `f - r`.
    pub fn sub_constant<D: NormedDomain<Elem = E>>(&self, d: &D, r: &E) -> Self {
        let mut f = self.clone();
        f.constant = d.sub(&self.constant, r);
        f
    }
}
