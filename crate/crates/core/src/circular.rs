//! Higher derivatives of `cot`, `tan`, `csc` and `sec` built from
//! negative-order polylogarithms at `+-e^{ix}` and `+-i e^{ix}`.
//!
//! The polynomials are assembled in exact Gaussian arithmetic and must come
//! out real with integer coefficients. The evaluators keep the complex
//! expressions intact in double precision and check that the imaginary part
//! cancels.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::algebra::{poly_latex, poly_text, Coef, GaussPoly, GaussianRational, Poly, RatPoly};
use crate::combinatorics::{binomial, eulerian_b_row, factorial, stirling2_row};
use crate::error::{Error, Result};
use crate::jet::SINGULARITY_GUARD;
use crate::polylog::li_neg_eval;

/// Sample grid for the csc routes.
pub const CSC_GRID: [f64; 6] = [0.3, 0.7, 1.0, 1.4, 2.0, 2.8];
/// Sample grid for the sec routes; every point is at least 0.37 from an odd
/// multiple of `pi/2`.
pub const SEC_GRID: [f64; 6] = [-1.2, -0.4, 0.3, 0.7, 1.0, 2.2];

/// Imaginary parts up to `RESIDUE_TOL * (1 + |re|)` are rounding noise.
pub const RESIDUE_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Target {
    Cot,
    Tan,
    Coth,
    Tanh,
}

impl Target {
    pub fn name(self) -> &'static str {
        match self {
            Target::Cot => "cot",
            Target::Tan => "tan",
            Target::Coth => "coth",
            Target::Tanh => "tanh",
        }
    }

    /// `(sign, sigma)` with `f' = sign (1 + sigma f^2)`.
    fn first_derivative(self) -> (i64, i64) {
        match self {
            Target::Cot => (-1, 1),
            Target::Tan => (1, 1),
            Target::Coth | Target::Tanh => (1, -1),
        }
    }
}

/// `P` with `(d/dx)^order target(x) = P(target(x))`. Coefficients are in
/// ascending powers of `u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivativePolynomial {
    pub target: Target,
    pub order: usize,
    pub coeffs: Vec<BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivativePolynomialJson {
    pub target: Target,
    pub order: usize,
    pub coeffs: Vec<String>,
}

impl DerivativePolynomial {
    /// # Panics
    ///
    /// Panics on a non-integer coefficient.
    pub fn from_rational(target: Target, order: usize, p: &RatPoly) -> Self {
        let coeffs = p
            .coeffs()
            .iter()
            .map(|c| {
                assert!(c.is_integer(), "non-integer coefficient {c} in {} polynomial", target.name());
                c.to_integer()
            })
            .collect();
        Self { target, order, coeffs }
    }

    pub fn to_poly(&self) -> RatPoly {
        Poly::new(self.coeffs.iter().cloned().map(BigRational::from_integer).collect(), 'u')
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, u: f64) -> f64 {
        self.to_poly().eval(Complex64::new(u, 0.0)).re
    }

    pub fn text(&self) -> String {
        poly_text(&self.to_poly())
    }

    pub fn latex(&self) -> String {
        poly_latex(&self.to_poly())
    }

    pub fn to_json(&self) -> DerivativePolynomialJson {
        DerivativePolynomialJson {
            target: self.target,
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c.to_string()).collect(),
        }
    }
}

/// `P_0 = u`, `P_{k+1} = f'(u) P_k'(u)`. Uses nothing but polynomial
/// differentiation.
pub fn derivative_poly_recurrence(target: Target, n: usize) -> DerivativePolynomial {
    let (sign, sigma) = target.first_derivative();
    let fprime: RatPoly = Poly::from_ints(&[sign, 0, sign * sigma], 'u');
    let mut p: RatPoly = Poly::x('u');
    for _ in 0..n {
        p = &fprime * &p.derivative();
    }
    DerivativePolynomial::from_rational(target, n, &p)
}

/// `sum_{k=0..n} weight(k) k! {n+1 brace k+1} base^(k+1)`.
pub(crate) fn stirling_expansion<C: Coef>(n: usize, base: &Poly<C>, weight: impl Fn(usize) -> C) -> Poly<C> {
    let row = stirling2_row(n + 1);
    let mut acc = Poly::zero(base.var());
    let mut power = base.clone();
    for k in 0..=n {
        let c = C::from_rational(BigRational::from_integer(factorial(k as u64) * &row[k + 1]));
        acc = &acc + &power.scale(&(c * &weight(k)));
        power = &power * base;
    }
    acc
}

pub(crate) fn pow2(k: usize) -> BigRational {
    BigRational::from_integer(num_traits::pow(BigInt::from(2), k))
}

/// `i^k` in the Gaussian field.
fn i_pow(k: i64) -> GaussianRational {
    let i = GaussianRational::imaginary_unit().unwrap();
    match k.rem_euclid(4) {
        0 => GaussianRational::one(),
        1 => i,
        2 => -GaussianRational::one(),
        _ => -i,
    }
}

/// `i^k` in double precision.
pub(crate) fn i_pow_f64(k: i64) -> Complex64 {
    match k.rem_euclid(4) {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    }
}

/// # Panics
///
/// Panics if an imaginary part survived: that is a bug in the construction.
fn real_integer(target: Target, n: usize, p: &GaussPoly) -> DerivativePolynomial {
    let real = p
        .to_real()
        .unwrap_or_else(|| panic!("imaginary parts did not cancel in {} polynomial of order {n}", target.name()));
    DerivativePolynomial::from_rational(target, n, &real)
}

fn gauss_linear(c0: i64, c1_imag: i64) -> GaussPoly {
    Poly::new(
        vec![GaussianRational::from_int(c0), GaussianRational::from_int(c1_imag) * i_pow(1)],
        'u',
    )
}

/// `(d/dx)^n cot x` from `Li_{-n}(e^{ix})`: expands
/// `sum_k (k!/2^(k+1)) {n+1 brace k+1} (i u - 1)^(k+1)` and multiplies by
/// `2^(n+1) i^(n-1)`. Order 0 returns `u`.
pub fn cot_derivative_poly(n: usize) -> DerivativePolynomial {
    if n == 0 {
        return derivative_poly_recurrence(Target::Cot, 0);
    }
    let sum = stirling_expansion(n, &gauss_linear(-1, 1), |k| {
        GaussianRational::from_rational(BigRational::one() / pow2(k + 1))
    });
    let factor = GaussianRational::from_rational(pow2(n + 1)) * i_pow(n as i64 - 1);
    real_integer(Target::Cot, n, &sum.scale(&factor))
}

/// `(d/dx)^n tan x = 2^n i^(n-1) sum_k ((-1)^k k!/2^k) {n+1 brace k+1}
/// (1 + i u)^(k+1)`. Order 0 returns `u`.
pub fn tan_derivative_poly(n: usize) -> DerivativePolynomial {
    if n == 0 {
        return derivative_poly_recurrence(Target::Tan, 0);
    }
    let sum = stirling_expansion(n, &gauss_linear(1, 1), |k| {
        let w = BigRational::one() / pow2(k);
        GaussianRational::from_rational(if k % 2 == 1 { -w } else { w })
    });
    let factor = GaussianRational::from_rational(pow2(n)) * i_pow(n as i64 - 1);
    real_integer(Target::Tan, n, &sum.scale(&factor))
}

/// Returns the real part, or [`Error::ImaginaryResidue`] when the imaginary
/// part is not negligible.
pub(crate) fn real_part(z: Complex64) -> Result<f64> {
    if z.im.abs() > RESIDUE_TOL * (1.0 + z.re.abs()) || !z.re.is_finite() {
        return Err(Error::ImaginaryResidue { re: z.re, im: z.im });
    }
    Ok(z.re)
}

/// Fails when `x` is within [`SINGULARITY_GUARD`] of `offset + k pi`.
pub(crate) fn guard_lattice(x: f64, offset: f64) -> Result<()> {
    let y = x - offset;
    let d = (y - std::f64::consts::PI * (y / std::f64::consts::PI).round()).abs();
    if d < SINGULARITY_GUARD || !x.is_finite() {
        return Err(Error::Singularity(x));
    }
    Ok(())
}

fn to_f64(b: &BigInt) -> f64 {
    b.to_f64().expect("finite")
}

/// `(-1)^k k! {n+1 brace k+1} / 2^k` for `k = 0..=n`.
pub(crate) fn alternating_stirling_weights(n: usize) -> Vec<f64> {
    let row = stirling2_row(n + 1);
    (0..=n)
        .map(|k| {
            let w = to_f64(&(factorial(k as u64) * &row[k + 1])) / 2f64.powi(k as i32);
            if k % 2 == 1 {
                -w
            } else {
                w
            }
        })
        .collect()
}

fn binom_f64(n: usize, k: usize) -> f64 {
    to_f64(&binomial(n as u64, k as i64))
}

/// `sum_{k=1..n+1} sign(k) S(n,k) e^{-i(n-2k)x}` with `sign(k) = (-1)^k` when
/// `alternating`.
fn eulerian_phase_sum(n: usize, x: f64, alternating: bool) -> Complex64 {
    eulerian_b_row(n)
        .iter()
        .enumerate()
        .map(|(idx, s)| {
            let k = idx + 1;
            let sign = if alternating && k % 2 == 1 { -1.0 } else { 1.0 };
            let phase = -(n as f64 - 2.0 * k as f64) * x;
            Complex64::from_polar(sign * to_f64(s), phase)
        })
        .sum()
}

/// `(d/dx)^n csc x = ((-1)^n / 2^n) e^{-2ix} csc^(n+1) x
/// sum_k S(n,k) e^{-i(n-2k)x}`.
pub fn csc_derivative_eval(n: usize, x: f64) -> Result<f64> {
    guard_lattice(x, 0.0)?;
    let sign = if n % 2 == 1 { -1.0 } else { 1.0 };
    let pre = sign / 2f64.powi(n as i32) * (1.0 / x.sin()).powi(n as i32 + 1);
    let z = Complex64::from_polar(pre, -2.0 * x) * eulerian_phase_sum(n, x, false);
    real_part(z)
}

/// `(d/dx)^n csc x = i^(n-1) [Li_{-n}(e^{ix}) - Li_{-n}(-e^{ix})]`.
pub fn csc_derivative_via_li(n: usize, x: f64) -> Result<f64> {
    guard_lattice(x, 0.0)?;
    let e = Complex64::from_polar(1.0, x);
    let diff = li_neg_eval(n, e)? - li_neg_eval(n, -e)?;
    real_part(i_pow_f64(n as i64 - 1) * diff)
}

/// Double sum over `tan(x/2)` and `cot(x/2)` from the binomial expansion.
pub fn csc_derivative_binomial(n: usize, x: f64) -> Result<f64> {
    guard_lattice(x, 0.0)?;
    let t = (x / 2.0).tan();
    let c = 1.0 / t;
    let weights = alternating_stirling_weights(n);
    let mut total = Complex64::new(0.0, 0.0);
    for (k, w) in weights.iter().enumerate() {
        let mut inner = Complex64::new(0.0, 0.0);
        for j in 0..=k + 1 {
            let sign = if j % 2 == 1 { -1.0 } else { 1.0 };
            let bracket = t.powi(j as i32) - sign * c.powi(j as i32);
            inner += i_pow_f64(j as i64) * (binom_f64(k + 1, j) * bracket);
        }
        total += inner * *w;
    }
    real_part(i_pow_f64(n as i64 - 1) * total / 2.0)
}

/// `(d/dx)^n sec x = -(i^n / 2^n) e^{-2ix} sec^(n+1) x
/// sum_k (-1)^k S(n,k) e^{-i(n-2k)x}`.
pub fn sec_derivative_eval(n: usize, x: f64) -> Result<f64> {
    guard_lattice(x, std::f64::consts::FRAC_PI_2)?;
    let pre = (1.0 / x.cos()).powi(n as i32 + 1) / 2f64.powi(n as i32);
    let z = -i_pow_f64(n as i64) * Complex64::from_polar(pre, -2.0 * x) * eulerian_phase_sum(n, x, true);
    real_part(z)
}

/// `(d/dx)^n sec x = i^(n-1) [Li_{-n}(i e^{ix}) - Li_{-n}(-i e^{ix})]`.
pub fn sec_derivative_via_li(n: usize, x: f64) -> Result<f64> {
    guard_lattice(x, std::f64::consts::FRAC_PI_2)?;
    let e = Complex64::new(0.0, 1.0) * Complex64::from_polar(1.0, x);
    let diff = li_neg_eval(n, e)? - li_neg_eval(n, -e)?;
    real_part(i_pow_f64(n as i64 - 1) * diff)
}

/// Triple sum over `tan x` and `sec x`.
pub fn sec_derivative_binomial(n: usize, x: f64) -> Result<f64> {
    guard_lattice(x, std::f64::consts::FRAC_PI_2)?;
    let t = x.tan();
    let s = 1.0 / x.cos();
    let weights = alternating_stirling_weights(n);
    let mut total = Complex64::new(0.0, 0.0);
    for (k, w) in weights.iter().enumerate() {
        let mut middle = Complex64::new(0.0, 0.0);
        for j in 0..=k + 1 {
            let mut inner = 0.0;
            for l in 0..=j {
                let odd = if l % 2 == 1 { 2.0 } else { 0.0 };
                inner += binom_f64(j, l) * t.powi((j - l) as i32) * s.powi(l as i32) * odd;
            }
            middle += i_pow_f64(j as i64) * (binom_f64(k + 1, j) * inner);
        }
        total += middle * *w;
    }
    real_part(i_pow_f64(n as i64 - 1) * total / 2.0)
}

/// Both sides of `2 cot 2x = cot x - tan x` read off the order-zero
/// duplication formula at `z = e^{2ix}`: returns
/// `(2 Im[Li_0(z) + Li_0(-z)], 2 Im[2 Li_0(z^2)])`.
pub fn cot_double_angle_via_li(x: f64) -> Result<(f64, f64)> {
    let z = Complex64::from_polar(1.0, 2.0 * x);
    let lhs = li_neg_eval(0, z)? + li_neg_eval(0, -z)?;
    let rhs = li_neg_eval(0, z * z)? * 2.0;
    Ok((2.0 * lhs.im, 2.0 * rhs.im))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jet::{nth_derivative, FunctionId};
    use std::f64::consts::FRAC_PI_2;

    fn ints(c: &[i64]) -> Vec<BigInt> {
        c.iter().map(|&v| BigInt::from(v)).collect()
    }

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / a.abs().max(b.abs()).max(1.0)
    }

    #[test]
    fn polynomial_examples() {
        assert_eq!(cot_derivative_poly(1).coeffs, ints(&[-1, 0, -1]));
        assert_eq!(cot_derivative_poly(2).coeffs, ints(&[0, 2, 0, 2]));
        assert_eq!(cot_derivative_poly(3).coeffs, ints(&[-2, 0, -8, 0, -6]));
        assert_eq!(tan_derivative_poly(1).coeffs, ints(&[1, 0, 1]));
        assert_eq!(tan_derivative_poly(2).coeffs, ints(&[0, 2, 0, 2]));
        assert_eq!(tan_derivative_poly(4), derivative_poly_recurrence(Target::Tan, 4));
        assert_eq!(derivative_poly_recurrence(Target::Cot, 0).coeffs, ints(&[0, 1]));
        assert_eq!(derivative_poly_recurrence(Target::Cot, 2).coeffs, ints(&[0, 2, 0, 2]));
        assert_eq!(cot_derivative_poly(1).text(), "-1 - u^2");
    }

    #[test]
    fn degree_and_parity() {
        for n in 1..12 {
            for p in [cot_derivative_poly(n), tan_derivative_poly(n)] {
                assert_eq!(p.degree(), Some(n + 1));
                for (j, c) in p.coeffs.iter().enumerate() {
                    if (j + n + 1) % 2 == 1 {
                        assert_eq!(*c, BigInt::from(0), "order {n} term {j}");
                    }
                }
            }
        }
    }

    #[test]
    fn polynomial_matches_jet() {
        for n in 1..8 {
            let x: f64 = 0.8;
            let cot = cot_derivative_poly(n).eval(1.0 / x.tan());
            assert!(rel(cot, nth_derivative(FunctionId::Cot, x, n).unwrap()) < 1e-9);
            let tan = tan_derivative_poly(n).eval(x.tan());
            assert!(rel(tan, nth_derivative(FunctionId::Tan, x, n).unwrap()) < 1e-9);
        }
    }

    #[test]
    fn csc_examples() {
        assert!((csc_derivative_eval(0, FRAC_PI_2).unwrap() - 1.0).abs() < 1e-14);
        assert!(csc_derivative_eval(1, FRAC_PI_2).unwrap().abs() < 1e-14);
        let jet4 = nth_derivative(FunctionId::Csc, 1.0, 4).unwrap();
        assert!(rel(csc_derivative_eval(4, 1.0).unwrap(), jet4) < 1e-8);
        assert!((csc_derivative_via_li(0, FRAC_PI_2).unwrap() - 1.0).abs() < 1e-14);
        assert!(rel(csc_derivative_via_li(2, 0.7).unwrap(), csc_derivative_eval(2, 0.7).unwrap()) < 1e-9);
        let jet6 = nth_derivative(FunctionId::Csc, 2.0, 6).unwrap();
        assert!(rel(csc_derivative_via_li(6, 2.0).unwrap(), jet6) < 1e-8);
        assert!((csc_derivative_binomial(0, FRAC_PI_2).unwrap() - 1.0).abs() < 1e-14);
        assert!(rel(csc_derivative_binomial(3, 1.1).unwrap(), csc_derivative_eval(3, 1.1).unwrap()) < 1e-8);
    }

    #[test]
    fn sec_examples() {
        assert!((sec_derivative_eval(0, 0.0).unwrap() - 1.0).abs() < 1e-14);
        assert!((sec_derivative_eval(2, 0.0).unwrap() - 1.0).abs() < 1e-12);
        assert!((sec_derivative_via_li(2, 0.0).unwrap() - 1.0).abs() < 1e-12);
        let jet3 = nth_derivative(FunctionId::Sec, 0.4, 3).unwrap();
        assert!(rel(sec_derivative_binomial(3, 0.4).unwrap(), jet3) < 1e-7);
        let a = sec_derivative_eval(5, 0.9).unwrap();
        assert!(rel(a, sec_derivative_via_li(5, 0.9).unwrap()) < 1e-8);
        assert!(rel(a, sec_derivative_binomial(5, 0.9).unwrap()) < 1e-8);
    }

    #[test]
    fn singularities() {
        assert_eq!(csc_derivative_eval(2, 0.0), Err(Error::Singularity(0.0)));
        assert!(matches!(csc_derivative_via_li(1, std::f64::consts::PI), Err(Error::Singularity(_))));
        assert!(matches!(sec_derivative_binomial(1, FRAC_PI_2), Err(Error::Singularity(_))));
        assert!(matches!(sec_derivative_eval(1, -FRAC_PI_2), Err(Error::Singularity(_))));
    }

    #[test]
    fn residue_check() {
        assert!(real_part(Complex64::new(1.0, 1e-10)).is_ok());
        assert!(matches!(real_part(Complex64::new(1.0, 1e-6)), Err(Error::ImaginaryResidue { .. })));
    }

    #[test]
    fn double_angle() {
        for k in 1..=10 {
            let x = 0.137 * k as f64;
            let (lhs, rhs) = cot_double_angle_via_li(x).unwrap();
            let direct = 1.0 / x.tan() - x.tan();
            assert!(rel(lhs, direct) < 1e-12, "x = {x}");
            assert!(rel(rhs, 2.0 / (2.0 * x).tan()) < 1e-12, "x = {x}");
            assert!(rel(lhs, rhs) < 1e-12);
        }
    }

    #[test]
    fn json_form() {
        let j = cot_derivative_poly(2).to_json();
        assert_eq!(serde_json::to_string(&j).unwrap(), r#"{"target":"cot","order":2,"coeffs":["0","2","0","2"]}"#);
    }
}
