use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Zero;

use super::coef::{poly_rem, trim, Coef, GaussianRational};
use super::AlgebraError;

/// Dense univariate polynomial, coefficients in ascending degree.
///
/// The zero polynomial has no coefficients; otherwise the last coefficient is
/// nonzero.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<C> {
    coeffs: Vec<C>,
    var: char,
}

pub type RatPoly = Poly<BigRational>;
pub type GaussPoly = Poly<GaussianRational>;

impl<C: Coef> Poly<C> {
    pub fn new(mut coeffs: Vec<C>, var: char) -> Self {
        trim(&mut coeffs);
        Self { coeffs, var }
    }

    pub fn from_ints(coeffs: &[i64], var: char) -> Self {
        Self::new(coeffs.iter().map(|&c| C::from_int(c)).collect(), var)
    }

    pub fn zero(var: char) -> Self {
        Self { coeffs: Vec::new(), var }
    }

    pub fn constant(c: C, var: char) -> Self {
        Self::new(vec![c], var)
    }

    pub fn one(var: char) -> Self {
        Self::constant(C::one(), var)
    }

    /// The monomial `c * var^k`.
    pub fn monomial(c: C, k: usize, var: char) -> Self {
        let mut coeffs = vec![C::zero(); k];
        coeffs.push(c);
        Self::new(coeffs, var)
    }

    /// The variable itself.
    pub fn x(var: char) -> Self {
        Self::monomial(C::one(), 1, var)
    }

    pub fn var(&self) -> char {
        self.var
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&C> {
        self.coeffs.last()
    }

    /// Coefficient of `var^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    pub fn with_var(mut self, var: char) -> Self {
        self.var = var;
        self
    }

    fn check_var(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.var == other.var {
            Ok(())
        } else {
            Err(AlgebraError::VariableMismatch(self.var, other.var))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_var(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + &other.coeff(k)).collect();
        Ok(Self::new(coeffs, self.var))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_var(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - other.coeff(k)).collect();
        Ok(Self::new(coeffs, self.var))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_var(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.var));
        }
        let mut out = vec![C::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + &(a.clone() * b);
            }
        }
        Ok(Self::new(out, self.var))
    }

    pub fn scale(&self, s: &C) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.clone() * s).collect(), self.var)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.var);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal derivative with respect to the variable.
    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.clone() * &C::from_int(k as i64))
            .collect();
        Self::new(coeffs, self.var)
    }

    /// `var * d/dvar`: multiplies coefficient `k` by `k`.
    pub fn euler_derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c.clone() * &C::from_int(k as i64))
            .collect();
        Self::new(coeffs, self.var)
    }

    /// `p(c * var)`.
    pub fn scale_var(&self, c: &C) -> Self {
        let mut power = C::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(a.clone() * &power);
            power = power * c;
        }
        Self::new(coeffs, self.var)
    }

    /// `p(var^k)`.
    pub fn compose_power(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![C::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = a.clone();
        }
        Self::new(coeffs, self.var)
    }

    /// `var^m * p(1/var)` for `m >= degree`.
    pub fn reversed(&self, m: usize) -> Self {
        let mut coeffs = vec![C::zero(); m + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            coeffs[m - i] = a.clone();
        }
        Self::new(coeffs, self.var)
    }

    /// `p(q(var))` by Horner's rule.
    pub fn compose(&self, inner: &Self) -> Result<Self, AlgebraError> {
        self.check_var(inner)?;
        let mut acc = Self::zero(self.var);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Self::constant(c.clone(), self.var);
        }
        Ok(acc)
    }

    /// Quotient and remainder of division by a nonzero polynomial.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), AlgebraError> {
        self.check_var(divisor)?;
        let db = divisor.degree().ok_or(AlgebraError::DivisionByZero)?;
        let mut r = self.coeffs.clone();
        if r.len() <= db {
            return Ok((Self::zero(self.var), self.clone()));
        }
        let inv = C::one() / divisor.coeffs[db].clone();
        let mut q = vec![C::zero(); r.len() - db];
        for top in (db..r.len()).rev() {
            let t = r[top].clone() * &inv;
            if t.is_zero() {
                continue;
            }
            let shift = top - db;
            for (i, b) in divisor.coeffs.iter().enumerate() {
                r[shift + i] = r[shift + i].clone() - t.clone() * b;
            }
            q[shift] = t;
        }
        r.truncate(db);
        Ok((Self::new(q, self.var), Self::new(r, self.var)))
    }

    /// Remainder only; see [`Poly::div_rem`].
    pub fn rem(&self, divisor: &Self) -> Result<Self, AlgebraError> {
        self.check_var(divisor)?;
        if divisor.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::new(poly_rem(&self.coeffs, &divisor.coeffs), self.var))
    }

    /// Monic greatest common divisor (zero iff both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_var(other)?;
        Ok(Self::new(C::poly_gcd(&self.coeffs, &other.coeffs), self.var))
    }

    /// Exact evaluation at a point of the coefficient field.
    pub fn eval_exact(&self, x: &C) -> C {
        self.coeffs
            .iter()
            .rev()
            .fold(C::zero(), |acc, c| acc * x + c)
    }

    pub fn eval(&self, x: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::zero(), |acc, c| acc * x + c.to_complex64())
    }

    /// Sum of coefficient magnitudes times `|x|^k`: a bound on the rounding
    /// scale of [`Poly::eval`].
    pub fn eval_abs(&self, x: Complex64) -> f64 {
        let r = x.norm();
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * r + c.to_complex64().norm())
    }

    pub fn to_gaussian(&self) -> GaussPoly {
        Poly::new(self.coeffs.iter().map(Coef::to_gaussian).collect(), self.var)
    }

    /// Real polynomial when every coefficient has zero imaginary part.
    pub fn to_real(&self) -> Option<RatPoly> {
        let coeffs: Option<Vec<BigRational>> = self.coeffs.iter().map(Coef::as_real).collect();
        coeffs.map(|c| Poly::new(c, self.var))
    }

    /// Coefficient of the lowest-degree nonzero term, with that degree.
    pub fn lowest_term(&self) -> Option<(usize, &C)> {
        self.coeffs.iter().enumerate().find(|(_, c)| !c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }
}

impl<C: Coef> Add for &Poly<C> {
    type Output = Poly<C>;

    fn add(self, rhs: Self) -> Poly<C> {
        self.try_add(rhs).expect("polynomial variable mismatch")
    }
}

impl<C: Coef> Sub for &Poly<C> {
    type Output = Poly<C>;

    fn sub(self, rhs: Self) -> Poly<C> {
        self.try_sub(rhs).expect("polynomial variable mismatch")
    }
}

impl<C: Coef> Mul for &Poly<C> {
    type Output = Poly<C>;

    fn mul(self, rhs: Self) -> Poly<C> {
        self.try_mul(rhs).expect("polynomial variable mismatch")
    }
}

impl<C: Coef> Neg for Poly<C> {
    type Output = Poly<C>;

    fn neg(self) -> Poly<C> {
        let var = self.var;
        Poly::new(self.coeffs.into_iter().map(|c| -c).collect(), var)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> RatPoly {
        Poly::from_ints(c, 'z')
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(p(&[0, 0, 1]).derivative(), p(&[0, 2]));
        assert_eq!(&p(&[1, -1]) * &p(&[1, 1]), p(&[1, 0, -1]));
        assert_eq!(&p(&[0, 1, 0, 1]) + &p(&[0, 0, 0, -1]), p(&[0, 1]));
        assert_eq!(p(&[3, 1]).scale(&BigRational::from_integer(2.into())), p(&[6, 2]));
        assert!((&p(&[1, 2]) - &p(&[1, 2])).is_zero());
    }

    #[test]
    fn variable_mismatch_is_an_error() {
        let a = p(&[1, 1]);
        let b = Poly::from_ints(&[1, 1], 'u');
        assert_eq!(a.try_add(&b), Err(AlgebraError::VariableMismatch('z', 'u')));
        assert!(a.try_mul(&b).is_err());
    }

    #[test]
    fn division_and_gcd() {
        let a = p(&[-1, 0, 0, 1]); // z^3 - 1
        let b = p(&[-1, 1]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(q, p(&[1, 1, 1]));
        assert!(r.is_zero());
        assert_eq!(a.gcd(&p(&[-1, 0, 1])).unwrap(), p(&[-1, 1]));
        assert_eq!(a.div_rem(&Poly::zero('z')), Err(AlgebraError::DivisionByZero));
    }

    #[test]
    fn substitutions() {
        let f = p(&[1, 2, 3]);
        assert_eq!(f.scale_var(&BigRational::from_integer((-1).into())), p(&[1, -2, 3]));
        assert_eq!(f.compose_power(2), p(&[1, 0, 2, 0, 3]));
        assert_eq!(f.reversed(3), p(&[0, 3, 2, 1]));
        assert_eq!(f.compose(&p(&[0, 0, 1])).unwrap(), f.compose_power(2));
        assert_eq!(p(&[1, 1]).pow(3), p(&[1, 3, 3, 1]));
        assert_eq!(p(&[5, 1, 1]).euler_derivative(), p(&[0, 1, 2]));
    }
}
