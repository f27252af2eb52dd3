//! Negative-integer-order polylogarithms `Li_{-n}(z)`, the Legendre chi
//! function `chi_{-n}(z)` and the inverse tangent integral `Ti_{-n}(z)` as
//! canonical rational functions in `z`.
//!
//! Every function is available through at least two independent
//! constructions, and the test suite checks that they agree exactly:
//!
//! | function | routes |
//! |----------|--------|
//! | `Li_{-n}` | [`li_neg_operator`] (`(z d/dz)^n z/(1-z)`), [`li_neg_stirling`] |
//! | `chi_{-n}` | [`chi_neg`] (type-B Eulerian numerator), [`chi_from_li`] |
//! | `Ti_{-n}` | [`ti_neg`], [`ti_from_chi`] (`-i chi_{-n}(i z)`) |
//!
//! [`li_series_eval`] sums the defining power series numerically and serves
//! as a floating-point oracle inside the unit disk.

use std::sync::Arc;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::{Coef, GaussianRational, Poly, RatFn, RatPoly, RationalFunction, Substitution};
use crate::combinatorics::{eulerian_b_row, factorial, stirling2_row};
use crate::error::{Error, Result};
use crate::memo::Memo;

/// Hard cap on the number of series terms in [`li_series_eval`].
pub const SERIES_TERM_CAP: usize = 1_000_000;

static LI_NEG: Memo<RatFn> = Memo::new();
static CHI_NEG: Memo<RatFn> = Memo::new();
static TI_NEG: Memo<RatFn> = Memo::new();

/// How a [`PolylogClosedForm`] was built.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Construction {
    Operator,
    Stirling,
    ChiClosed,
    TiClosed,
    LiDifference,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PolylogClosedForm {
    pub order: usize,
    pub function: RatFn,
    pub construction: Construction,
}

impl PolylogClosedForm {
    pub fn build(construction: Construction, order: usize) -> Self {
        let function = match construction {
            Construction::Operator => li_neg_operator(order),
            Construction::Stirling => li_neg_stirling(order),
            Construction::ChiClosed => chi_neg(order).as_ref().clone(),
            Construction::TiClosed => ti_neg(order).as_ref().clone(),
            Construction::LiDifference => chi_from_li(order),
        };
        Self { order, function, construction }
    }
}

fn z_over_one_minus_z() -> RatFn {
    RationalFunction::new(Poly::from_ints(&[0, 1], 'z'), Poly::from_ints(&[1, -1], 'z'))
        .expect("nonzero denominator")
}

/// `(z d/dz)^n z/(1-z)` by repeated exact differentiation.
pub fn li_neg_operator(n: usize) -> RatFn {
    (0..n).fold(z_over_one_minus_z(), |f, _| f.z_ddz())
}

/// `sum_{k=0..n} k! {n+1 brace k+1} (z/(1-z))^(k+1)`, summed over the common
/// denominator `(1-z)^(n+1)` and then reduced.
pub fn li_neg_stirling(n: usize) -> RatFn {
    let row = stirling2_row(n + 1);
    let one_minus_z: RatPoly = Poly::from_ints(&[1, -1], 'z');
    let mut num = Poly::zero('z');
    for k in 0..=n {
        let c = BigRational::from_integer(factorial(k as u64) * &row[k + 1]);
        // z^(k+1) (1-z)^(n-k)
        let term = &Poly::monomial(c, k + 1, 'z') * &one_minus_z.pow((n - k) as u32);
        num = &num + &term;
    }
    RationalFunction::new(num, one_minus_z.pow(n as u32 + 1)).expect("nonzero denominator")
}

/// Canonical `Li_{-n}(z)`, memoized.
pub fn li_neg(n: usize) -> Arc<RatFn> {
    LI_NEG.get_or_insert_with(n, || li_neg_stirling(n))
}

/// `chi_{-n}(z) = sum_{k=1..n+1} S(n,k) z^(2k-1) / (1 - z^2)^(n+1)`, memoized.
pub fn chi_neg(n: usize) -> Arc<RatFn> {
    CHI_NEG.get_or_insert_with(n, || odd_numerator_closed_form(n, false))
}

/// `Ti_{-n}(z) = -sum_{k=1..n+1} (-1)^k S(n,k) z^(2k-1) / (1 + z^2)^(n+1)`,
/// memoized.
pub fn ti_neg(n: usize) -> Arc<RatFn> {
    TI_NEG.get_or_insert_with(n, || odd_numerator_closed_form(n, true))
}

fn odd_numerator_closed_form(n: usize, alternating: bool) -> RatFn {
    let row = eulerian_b_row(n);
    let mut coeffs = vec![BigRational::zero(); 2 * n + 2];
    for (idx, s) in row.iter().enumerate() {
        let k = idx + 1;
        let mut c = BigRational::from_integer(s.clone());
        // -(-1)^k is +1 for odd k
        if alternating && k % 2 == 0 {
            c = -c;
        }
        coeffs[2 * k - 1] = c;
    }
    let base: RatPoly = Poly::from_ints(&[1, 0, if alternating { 1 } else { -1 }], 'z');
    RationalFunction::new(Poly::new(coeffs, 'z'), base.pow(n as u32 + 1))
        .expect("nonzero denominator")
}

/// `(Li_{-n}(z) - Li_{-n}(-z)) / 2`.
pub fn chi_from_li(n: usize) -> RatFn {
    let li = li_neg(n);
    let mirrored = li.substitute(Substitution::NegateZ).expect("real substitution");
    (&*li - &mirrored).scale(&BigRational::new(BigInt::one(), BigInt::from(2)))
}

/// `-i chi_{-n}(i z)` computed with Gaussian coefficients.
///
/// # Panics
///
/// Panics if an imaginary part survives canonicalization.
pub fn ti_from_chi(n: usize) -> RatFn {
    let minus_i = -GaussianRational::imaginary_unit().unwrap();
    chi_neg(n)
        .to_gaussian()
        .substitute(Substitution::ITimesZ)
        .expect("Gaussian substitution")
        .scale(&minus_i)
        .to_real()
        .expect("-i chi(iz) must have real coefficients")
}

/// Exact check of `Li_{-n}(z) + Li_{-n}(-z) = 2^(n+1) Li_{-n}(z^2)`.
pub fn duplication_holds(n: usize) -> bool {
    let li = li_neg(n);
    let lhs = &*li + &li.substitute(Substitution::NegateZ).expect("real substitution");
    let two_pow = BigRational::from_integer(num_traits::pow(BigInt::from(2), n + 1));
    let rhs = li.substitute(Substitution::SquareZ).expect("real substitution").scale(&two_pow);
    lhs == rhs
}

/// Numerically sums `sum_{k>=1} z^k / k^s`.
///
/// Stops once the terms are decreasing and the next one is below
/// `tol * (1 + |partial sum|)`. Requires `|z| < 1` and `tol > 0`.
pub fn li_series_eval(s: i32, z: Complex64, tol: f64) -> Result<Complex64> {
    if !(z.norm() < 1.0) {
        return Err(Error::Domain(format!("series requires |z| < 1, got |z| = {}", z.norm())));
    }
    if !(tol > 0.0) {
        return Err(Error::Domain(format!("tolerance must be positive, got {tol}")));
    }
    let r = z.norm();
    let mut sum = Complex64::zero();
    let mut zk = Complex64::new(1.0, 0.0);
    for k in 1..=SERIES_TERM_CAP {
        zk *= z;
        let kf = k as f64;
        sum += zk * kf.powi(-s);
        let next_mag = r.powi(k as i32 + 1) * (kf + 1.0).powi(-s);
        // |t_{k+1}/t_k| = r ((k+1)/k)^(-s)
        let ratio = r * ((kf + 1.0) / kf).powi(-s);
        if ratio < 1.0 && next_mag < tol * (1.0 + sum.norm()) {
            return Ok(sum);
        }
        if zk.norm() == 0.0 {
            return Ok(sum);
        }
    }
    Err(Error::NonConvergence(SERIES_TERM_CAP))
}

/// `rf_eval` of a canonical closed form at a complex point.
pub fn eval_closed(f: &RatFn, z: Complex64) -> Result<Complex64> {
    Ok(f.eval(z)?)
}

/// Li_{-n}(z) via the canonical closed form.
pub fn li_neg_eval(n: usize, z: Complex64) -> Result<Complex64> {
    eval_closed(&li_neg(n), z)
}

pub fn chi_neg_eval(n: usize, z: Complex64) -> Result<Complex64> {
    eval_closed(&chi_neg(n), z)
}

pub fn ti_neg_eval(n: usize, z: Complex64) -> Result<Complex64> {
    eval_closed(&ti_neg(n), z)
}
