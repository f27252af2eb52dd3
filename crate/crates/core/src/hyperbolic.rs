//! Hyperbolic counterparts: derivative polynomials of `coth` and `tanh`, and
//! `csch`/`sech` derivatives, all from `Li_{-n}(+-e^x)` in real arithmetic.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use crate::algebra::Poly;
use crate::circular::{derivative_poly_recurrence, pow2, stirling_expansion, DerivativePolynomial, Target};
use crate::combinatorics::eulerian_b_row;
use crate::error::{Error, Result};
use crate::jet::{nth_derivative, FunctionId, SINGULARITY_GUARD};
use crate::polylog::{chi_neg_eval, li_neg_eval, ti_neg_eval};
use crate::report::{PointResult, VerificationReport};

/// Sample grid for the hyperbolic checks.
pub const HYPERBOLIC_GRID: [f64; 5] = [0.3, 0.5, 0.8, 1.2, 2.0];

fn hyperbolic_poly(target: Target, n: usize) -> DerivativePolynomial {
    if n == 0 {
        return derivative_poly_recurrence(target, 0);
    }
    let sum = stirling_expansion(n, &Poly::from_ints(&[1, 1], 'u'), |k| {
        let w = BigRational::one() / pow2(k);
        if k % 2 == 1 {
            -w
        } else {
            w
        }
    });
    DerivativePolynomial::from_rational(target, n, &sum.scale(&pow2(n)))
}

/// `(d/dx)^n coth x = 2^n sum_k ((-1)^k k!/2^k) {n+1 brace k+1} (1 + u)^(k+1)`
/// at `u = coth x`.
pub fn coth_derivative_poly(n: usize) -> DerivativePolynomial {
    hyperbolic_poly(Target::Coth, n)
}

/// Same expansion as [`coth_derivative_poly`], read at `u = tanh x`.
pub fn tanh_derivative_poly(n: usize) -> DerivativePolynomial {
    hyperbolic_poly(Target::Tanh, n)
}

/// Two sides of a numeric relation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Sides {
    pub lhs: f64,
    pub rhs: f64,
}

fn real(z: Complex64) -> f64 {
    debug_assert!(z.im == 0.0);
    z.re
}

fn guard_origin(x: f64) -> Result<()> {
    if x.abs() < SINGULARITY_GUARD || !x.is_finite() {
        return Err(Error::Singularity(x));
    }
    Ok(())
}

/// `(d/dx)^n f(x/2)` from the jet oracle.
fn half_argument_derivative(f: FunctionId, n: usize, x: f64) -> Result<f64> {
    Ok(nth_derivative(f, x / 2.0, n)? / 2f64.powi(n as i32))
}

/// `Li_{-n}(e^x)` against `-(1/2) (d/dx)^n coth(x/2)`. The sides differ by
/// `1/2` at `n = 0`.
pub fn li_relation_coth(n: usize, x: f64) -> Result<Sides> {
    guard_origin(x)?;
    let lhs = real(li_neg_eval(n, Complex64::new(x.exp(), 0.0))?);
    let rhs = -0.5 * half_argument_derivative(FunctionId::Coth, n, x)?;
    Ok(Sides { lhs, rhs })
}

/// `Li_{-n}(-e^x)` against `-(1/2) (d/dx)^n tanh(x/2)`. The sides differ by
/// `1/2` at `n = 0`.
pub fn li_relation_tanh(n: usize, x: f64) -> Result<Sides> {
    let lhs = real(li_neg_eval(n, Complex64::new(-x.exp(), 0.0))?);
    let rhs = -0.5 * half_argument_derivative(FunctionId::Tanh, n, x)?;
    Ok(Sides { lhs, rhs })
}

fn to_f64(b: &BigInt) -> f64 {
    b.to_f64().expect("finite")
}

/// `sum_{k=1..n+1} sign(k) S(n,k) e^{(n-2k)x}`.
fn eulerian_exp_sum(n: usize, x: f64, alternating: bool) -> f64 {
    eulerian_b_row(n)
        .iter()
        .enumerate()
        .map(|(idx, s)| {
            let k = idx + 1;
            let sign = if alternating && k % 2 == 1 { -1.0 } else { 1.0 };
            sign * to_f64(s) * ((n as f64 - 2.0 * k as f64) * x).exp()
        })
        .sum()
}

/// `(d/dx)^n csch x = ((-1)^n / 2^n) e^{2x} csch^(n+1) x sum_k S(n,k) e^{(n-2k)x}`.
pub fn csch_derivative_eval(n: usize, x: f64) -> Result<f64> {
    guard_origin(x)?;
    let sign = if n % 2 == 1 { -1.0 } else { 1.0 };
    let csch = 1.0 / x.sinh();
    Ok(sign / 2f64.powi(n as i32) * (2.0 * x).exp() * csch.powi(n as i32 + 1) * eulerian_exp_sum(n, x, false))
}

/// `(d/dx)^n sech x = -((-1)^n / 2^n) e^{2x} sech^(n+1) x
/// sum_k (-1)^k S(n,k) e^{(n-2k)x}`.
pub fn sech_derivative_eval(n: usize, x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::Domain(format!("x = {x}")));
    }
    let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
    let sech = 1.0 / x.cosh();
    Ok(sign / 2f64.powi(n as i32) * (2.0 * x).exp() * sech.powi(n as i32 + 1) * eulerian_exp_sum(n, x, true))
}

/// `2 chi_{-n}(e^x)` against `-(d/dx)^n csch x`.
pub fn chi_csch_relation(n: usize, x: f64) -> Result<Sides> {
    guard_origin(x)?;
    let lhs = 2.0 * real(chi_neg_eval(n, Complex64::new(x.exp(), 0.0))?);
    Ok(Sides { lhs, rhs: -nth_derivative(FunctionId::Csch, x, n)? })
}

/// `2 Ti_{-n}(e^x)` against `(d/dx)^n sech x`.
pub fn ti_sech_relation(n: usize, x: f64) -> Result<Sides> {
    let lhs = 2.0 * real(ti_neg_eval(n, Complex64::new(x.exp(), 0.0))?);
    Ok(Sides { lhs, rhs: nth_derivative(FunctionId::Sech, x, n)? })
}

/// Both `chi`/`Ti` relations at one point, as a two-entry report.
pub fn chi_ti_hyperbolic_relations(n: usize, x: f64, tolerance: f64) -> VerificationReport {
    let point = |label: &str, sides: Result<Sides>| {
        PointResult::from_sides(x, sides.map(|s| (s.lhs, s.rhs))).labelled(label)
    };
    VerificationReport::numeric(
        "chi-ti-hyperbolic",
        n,
        tolerance,
        vec![point("chi-csch", chi_csch_relation(n, x)), point("ti-sech", ti_sech_relation(n, x))],
    )
}
