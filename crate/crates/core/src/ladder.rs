//! The ladder-like relation
//! `Li_{-n}(z) - Li_{-n}(-z) = (2/z) sum_k c_k Li_{-k}(z^2)` with
//! `c_k = (-1)^(n-k) 2^k C(n,k)`, its `chi`/`Ti` forms, and the variants at
//! `z = e^{ix}` and `z = i e^{ix}`.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{Poly, RatFn, RationalFunction, Substitution};
use crate::circular::{guard_lattice, i_pow_f64, real_part};
use crate::combinatorics::binomial;
use crate::error::Result;
use crate::polylog::{chi_neg, li_neg, li_neg_eval, ti_neg};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LadderCoefficients {
    pub n: usize,
    pub coeffs: Vec<BigInt>,
}

/// Which side carries the scalar factor when printing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Arrangement {
    /// `Li(z) - Li(-z) = (2/z) sum ...`
    #[default]
    TwoOverZ,
    /// `(z/2) (Li(z) - Li(-z)) = sum ...`
    ZOverTwo,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LadderJson {
    pub n: usize,
    pub coefficients: Vec<String>,
    pub exact: bool,
}

pub fn ladder_coefficients(n: usize) -> LadderCoefficients {
    let coeffs = (0..=n)
        .map(|k| {
            let c = binomial(n as u64, k as i64) * num_traits::pow(BigInt::from(2), k);
            if (n - k) % 2 == 1 {
                -c
            } else {
                c
            }
        })
        .collect();
    LadderCoefficients { n, coeffs }
}

fn li_term(k: usize, var: &str, style: Style) -> String {
    match style {
        Style::Text => format!("Li_{{-{k}}}({var})").replace("{-0}", "{0}"),
        Style::Latex => format!("\\operatorname{{Li}}_{{-{k}}}({var})").replace("{-0}", "{0}"),
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Style {
    Text,
    Latex,
}

impl LadderCoefficients {
    pub fn sum(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    fn combination(&self, style: Style) -> String {
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            let neg = c < &BigInt::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            let sep = match (out.is_empty(), neg) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            let num = if mag == BigInt::from(1) { String::new() } else { format!("{mag} ") };
            out.push_str(&format!("{sep}{num}{}", li_term(k, "z^2", style)));
        }
        out
    }

    fn render(&self, arrangement: Arrangement, style: Style) -> String {
        let n = self.n;
        let diff = format!("{} - {}", li_term(n, "z", style), li_term(n, "-z", style));
        let sum = self.combination(style);
        match (arrangement, style) {
            (Arrangement::TwoOverZ, Style::Text) => format!("{diff} = (2/z) [{sum}]"),
            (Arrangement::TwoOverZ, Style::Latex) => format!("{diff} = \\frac{{2}}{{z}}\\left[{sum}\\right]"),
            (Arrangement::ZOverTwo, Style::Text) => format!("(z/2) [{diff}] = {sum}"),
            (Arrangement::ZOverTwo, Style::Latex) => format!("\\frac{{z}}{{2}}\\left[{diff}\\right] = {sum}"),
        }
    }

    /// e.g. `Li_{-1}(z) - Li_{-1}(-z) = (2/z) [-Li_{0}(z^2) + 2 Li_{-1}(z^2)]`.
    pub fn text(&self, arrangement: Arrangement) -> String {
        self.render(arrangement, Style::Text)
    }

    pub fn latex(&self, arrangement: Arrangement) -> String {
        self.render(arrangement, Style::Latex)
    }

    pub fn to_json(&self, exact: bool) -> LadderJson {
        LadderJson { n: self.n, coefficients: self.coeffs.iter().map(|c| c.to_string()).collect(), exact }
    }
}

fn ratfn_of(c: &BigInt) -> BigRational {
    BigRational::from_integer(c.clone())
}

/// `sum_k c_k Li_{-k}(sigma(z^2))` where `sigma` is applied before squaring.
fn ladder_sum(n: usize, pre: Option<Substitution>) -> RatFn {
    let c = ladder_coefficients(n);
    c.coeffs.iter().enumerate().fold(RatFn::zero('z'), |acc, (k, ck)| {
        let mut f = li_neg(k).as_ref().clone();
        if let Some(s) = pre {
            f = f.substitute(s).expect("real substitution");
        }
        let f = f.substitute(Substitution::SquareZ).expect("real substitution");
        &acc + &f.scale(&ratfn_of(ck))
    })
}

fn times_z(f: &RatFn, s: i64) -> RatFn {
    f * &RationalFunction::from_poly(Poly::from_ints(&[0, s], 'z'))
}

/// `Li_{-n}(z) - Li_{-n}(-z)`.
fn odd_difference(n: usize) -> RatFn {
    let li = li_neg(n);
    &*li - &li.substitute(Substitution::NegateZ).expect("real substitution")
}

/// `(2/z) sum_k c_k Li_{-k}(z^2)`.
pub fn ladder_rhs(n: usize) -> RatFn {
    let sum = ladder_sum(n, None).scale(&BigRational::from_integer(2.into()));
    let inv_z = RatFn::x('z').recip().expect("z is nonzero");
    &sum * &inv_z
}

/// Exact equality of both sides of the main relation.
pub fn verify_ladder_exact(n: usize) -> bool {
    odd_difference(n) == ladder_rhs(n)
}

/// `z chi_{-n}(z) = sum_k c_k Li_{-k}(z^2)`, exactly.
pub fn chi_ladder(n: usize) -> bool {
    times_z(&chi_neg(n), 1) == ladder_sum(n, None)
}

/// `z Ti_{-n}(z) = -sum_k c_k Li_{-k}(-z^2)`, exactly.
pub fn ti_ladder(n: usize) -> bool {
    times_z(&ti_neg(n), -1) == ladder_sum(n, Some(Substitution::NegateZ))
}

/// The main relation with `z -> i z` applied to both sides, in Gaussian
/// arithmetic. At `z = e^{ix}` this is the sec variant.
pub fn sec_variant_exact(n: usize) -> bool {
    let lhs = odd_difference(n).to_gaussian().substitute(Substitution::ITimesZ);
    let rhs = ladder_rhs(n).to_gaussian().substitute(Substitution::ITimesZ);
    match (lhs, rhs) {
        (Ok(l), Ok(r)) => l == r,
        _ => false,
    }
}

/// `Li_{-n}(i e^{ix}) - Li_{-n}(-i e^{ix})` against
/// `-2i e^{-ix} sum_k c_k Li_{-k}(-e^{2ix})` numerically at `x`, and the
/// exact `z -> iz` image of the main relation. Both must hold.
pub fn verify_ladder_sec_variant(n: usize, x: f64, tolerance: f64) -> Result<bool> {
    let (lhs, rhs) = sec_variant_sides(n, x)?;
    let numeric = (lhs - rhs).norm() <= tolerance * lhs.norm().max(rhs.norm());
    Ok(numeric && sec_variant_exact(n))
}

/// Both sides of the numeric sec variant.
pub fn sec_variant_sides(n: usize, x: f64) -> Result<(Complex64, Complex64)> {
    guard_lattice(x, std::f64::consts::FRAC_PI_2)?;
    let w = Complex64::new(0.0, 1.0) * Complex64::from_polar(1.0, x);
    let lhs = li_neg_eval(n, w)? - li_neg_eval(n, -w)?;
    let m = -Complex64::from_polar(1.0, 2.0 * x);
    let rhs = weighted_li_sum(n, m)? * Complex64::new(0.0, -2.0) * Complex64::from_polar(1.0, -x);
    Ok((lhs, rhs))
}

fn weighted_li_sum(n: usize, z: Complex64) -> Result<Complex64> {
    let c = ladder_coefficients(n);
    let mut acc = Complex64::new(0.0, 0.0);
    for (k, ck) in c.coeffs.iter().enumerate() {
        acc += li_neg_eval(k, z)? * ck.to_f64().expect("finite");
    }
    Ok(acc)
}

/// `(d/dx)^n csc x = 2 i^(n-1) e^{-ix} sum_k c_k Li_{-k}(e^{2ix})`.
pub fn leibniz_csc_route(n: usize, x: f64) -> Result<f64> {
    guard_lattice(x, 0.0)?;
    let s = weighted_li_sum(n, Complex64::from_polar(1.0, 2.0 * x))?;
    real_part(i_pow_f64(n as i64 - 1) * Complex64::from_polar(2.0, -x) * s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circular::csc_derivative_eval;
    use crate::jet::{nth_derivative, FunctionId};
    use crate::report::relative_error;

    fn row(n: usize) -> Vec<i64> {
        ladder_coefficients(n).coeffs.iter().map(|c| c.to_i64().unwrap()).collect()
    }

    #[test]
    fn coefficient_rows() {
        assert_eq!(row(0), [1]);
        assert_eq!(row(1), [-1, 2]);
        assert_eq!(row(2), [1, -4, 4]);
        assert_eq!(row(3), [-1, 6, -12, 8]);
        assert_eq!(row(4), [1, -8, 24, -32, 16]);
        assert_eq!(row(6), [1, -12, 60, -160, 240, -192, 64]);
        for n in 0..=30 {
            assert_eq!(ladder_coefficients(n).sum(), BigInt::from(1));
        }
    }

    #[test]
    fn exact_relations() {
        for n in [0, 1, 2, 4, 7] {
            assert!(verify_ladder_exact(n), "n = {n}");
            assert!(chi_ladder(n), "chi n = {n}");
            assert!(ti_ladder(n), "ti n = {n}");
        }
        assert!(sec_variant_exact(3));
    }

    #[test]
    fn ti_order_zero_by_hand() {
        // z Ti_0(z) = z^2/(1+z^2) = -Li_0(-z^2)
        let lhs = times_z(&ti_neg(0), 1);
        let want = RatFn::new(Poly::from_ints(&[0, 0, 1], 'z'), Poly::from_ints(&[1, 0, 1], 'z')).unwrap();
        assert_eq!(lhs, want);
    }

    #[test]
    fn sec_variant_numeric() {
        assert!(verify_ladder_sec_variant(0, 0.5, 1e-12).unwrap());
        assert!(verify_ladder_sec_variant(3, 1.1, 1e-10).unwrap());
        assert!(verify_ladder_sec_variant(2, std::f64::consts::FRAC_PI_2, 1e-10).is_err());
    }

    #[test]
    fn leibniz_route() {
        assert!((leibniz_csc_route(0, std::f64::consts::FRAC_PI_2).unwrap() - 1.0).abs() < 1e-14);
        let a = leibniz_csc_route(2, 0.9).unwrap();
        assert!(relative_error(a, csc_derivative_eval(2, 0.9).unwrap()) < 1e-8);
        let b = leibniz_csc_route(7, 1.7).unwrap();
        assert!(relative_error(b, nth_derivative(FunctionId::Csc, 1.7, 7).unwrap()) < 1e-7);
    }

    #[test]
    fn rendering() {
        let c = ladder_coefficients(1);
        assert_eq!(c.text(Arrangement::TwoOverZ), "Li_{-1}(z) - Li_{-1}(-z) = (2/z) [-Li_{0}(z^2) + 2 Li_{-1}(z^2)]");
        assert_eq!(
            ladder_coefficients(0).latex(Arrangement::ZOverTwo),
            "\\frac{z}{2}\\left[\\operatorname{Li}_{0}(z) - \\operatorname{Li}_{0}(-z)\\right] = \\operatorname{Li}_{0}(z^2)"
        );
        assert_eq!(c.to_json(true).coefficients, vec!["-1", "2"]);
    }
}
