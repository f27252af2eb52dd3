//! Text, LaTeX and JSON renderings of polynomials and rational functions.
//!
//! Text output is ASCII only. Terms are listed in ascending degree with spaced
//! binary signs, `z + 6z^3 + z^5`. A denominator of the form
//! `c (1 + a z^k)^m` with `a = +-1` is printed factored, `(1-z^2)^3`, with the
//! scalar `c` moved into the numerator.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::coef::Coef;
use super::poly::Poly;
use super::ratfunc::{RatFn, RationalFunction};
use super::AlgebraError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Style {
    Text,
    Latex,
}

fn int_or_frac(r: &BigRational, style: Style) -> String {
    if r.is_integer() {
        return r.numer().to_string();
    }
    match style {
        Style::Text => format!("{}/{}", r.numer(), r.denom()),
        Style::Latex => format!("\\frac{{{}}}{{{}}}", r.numer(), r.denom()),
    }
}

fn power(var: char, k: usize, style: Style) -> String {
    match k {
        0 => String::new(),
        1 => var.to_string(),
        k if k < 10 || style == Style::Text => format!("{var}^{k}"),
        k => format!("{var}^{{{k}}}"),
    }
}

/// Returns `(negative, body)` for one term; the body never carries a leading
/// sign for real coefficients.
fn term<C: Coef>(c: &C, k: usize, var: char, style: Style) -> (bool, String) {
    let g = c.to_gaussian();
    let pw = power(var, k, style);
    if g.im.is_zero() {
        let neg = g.re.is_negative();
        let abs = g.re.abs();
        let body = if abs.is_one() && k > 0 {
            pw
        } else if abs.is_integer() || k == 0 {
            format!("{}{pw}", int_or_frac(&abs, style))
        } else {
            format!("({}){pw}", int_or_frac(&abs, style))
        };
        return (neg, body);
    }
    let i = "i";
    let cplx = if g.re.is_zero() {
        if g.im.is_one() {
            i.to_string()
        } else if (-g.im.clone()).is_one() {
            format!("-{i}")
        } else {
            format!("{}{i}", int_or_frac(&g.im, style))
        }
    } else {
        let sign = if g.im.is_negative() { "-" } else { "+" };
        let im = g.im.abs();
        let im = if im.is_one() { String::new() } else { int_or_frac(&im, style) };
        format!("{}{sign}{im}{i}", int_or_frac(&g.re, style))
    };
    if k == 0 && g.re.is_zero() {
        (false, cplx)
    } else {
        (false, format!("({cplx}){pw}"))
    }
}

fn poly_string<C: Coef>(p: &Poly<C>, style: Style) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let (neg, body) = term(c, k, p.var(), style);
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    out
}

fn term_count<C: Coef>(p: &Poly<C>) -> usize {
    p.coeffs().iter().filter(|c| !c.is_zero()).count()
}

/// Splits a rational function into numerator text and an optional factored
/// or expanded denominator text (already parenthesized where needed).
fn rf_parts<C: Coef>(f: &RationalFunction<C>, style: Style) -> (Poly<C>, Option<String>) {
    if f.den().degree() == Some(0) {
        let s = C::one() / f.den().coeff(0);
        return (f.num().scale(&s), None);
    }
    if let Some(bp) = f.denominator_power() {
        let unit = bp.a.as_real().filter(|a| a.abs().is_one());
        if let Some(a) = unit {
            let s = C::one() / bp.scale.clone();
            let sign = if a.is_negative() { "-" } else { "+" };
            let base = format!("(1{sign}{})", power(f.var(), bp.step, style));
            let den = match (bp.power, style) {
                (1, _) => base,
                (m, Style::Text) | (m @ 0..=9, Style::Latex) => format!("{base}^{m}"),
                (m, Style::Latex) => format!("{base}^{{{m}}}"),
            };
            return (f.num().scale(&s), Some(den));
        }
    }
    (f.num().clone(), Some(format!("({})", poly_string(f.den(), style))))
}

pub fn poly_text<C: Coef>(p: &Poly<C>) -> String {
    poly_string(p, Style::Text)
}

pub fn poly_latex<C: Coef>(p: &Poly<C>) -> String {
    poly_string(p, Style::Latex)
}

/// ASCII rendering, e.g. `(z + 6z^3 + z^5)/(1-z^2)^3`.
pub fn rf_text<C: Coef>(f: &RationalFunction<C>) -> String {
    let (num, den) = rf_parts(f, Style::Text);
    let num_s = poly_string(&num, Style::Text);
    match den {
        None => num_s,
        Some(den) if term_count(&num) > 1 => format!("({num_s})/{den}"),
        Some(den) => format!("{num_s}/{den}"),
    }
}

/// LaTeX rendering, e.g. `\frac{z + 6z^3 + z^5}{(1-z^2)^3}`.
pub fn rf_latex<C: Coef>(f: &RationalFunction<C>) -> String {
    let (num, den) = rf_parts(f, Style::Latex);
    let num_s = poly_string(&num, Style::Latex);
    match den {
        None => num_s,
        Some(den) => {
            // a lone factor needs no parens inside \frac
            let den = match f.denominator_power() {
                Some(bp) if bp.power > 1 => den,
                _ => den.trim_start_matches('(').trim_end_matches(')').to_string(),
            };
            format!("\\frac{{{num_s}}}{{{den}}}")
        }
    }
}

/// JSON form of a real rational function: coefficients in ascending degree as
/// decimal strings (`"3"`, `"-1/2"`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalFunctionJson {
    pub num: Vec<String>,
    pub den: Vec<String>,
}

fn coef_strings(p: &Poly<BigRational>) -> Vec<String> {
    p.coeffs().iter().map(|c| c.to_string()).collect()
}

pub(crate) fn parse_rational(s: &str) -> Result<BigRational, AlgebraError> {
    let bad = || AlgebraError::Parse(format!("invalid rational coefficient {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.trim().parse().map_err(|_| bad())?)),
    }
}

impl RatFn {
    pub fn to_json(&self) -> RationalFunctionJson {
        RationalFunctionJson {
            num: coef_strings(self.num()),
            den: coef_strings(self.den()),
        }
    }

    /// Parses the JSON form and re-canonicalizes.
    pub fn from_json(json: &RationalFunctionJson, var: char) -> Result<Self, AlgebraError> {
        let parse = |v: &[String]| -> Result<Poly<BigRational>, AlgebraError> {
            Ok(Poly::new(v.iter().map(|s| parse_rational(s)).collect::<Result<_, _>>()?, var))
        };
        RationalFunction::new(parse(&json.num)?, parse(&json.den)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::coef::GaussianRational;
    use num_complex::Complex;

    fn rf(n: &[i64], d: &[i64]) -> RatFn {
        RationalFunction::new(Poly::from_ints(n, 'z'), Poly::from_ints(d, 'z')).unwrap()
    }

    #[test]
    fn text_forms() {
        assert_eq!(rf_text(&rf(&[0, 1], &[1, -1])), "z/(1-z)");
        let chi2 = RatFn::new(
            Poly::from_ints(&[0, 1, 0, 6, 0, 1], 'z'),
            Poly::from_ints(&[1, 0, -1], 'z').pow(3),
        )
        .unwrap();
        assert_eq!(rf_text(&chi2), "(z + 6z^3 + z^5)/(1-z^2)^3");
        assert_eq!(rf_latex(&chi2), "\\frac{z + 6z^3 + z^5}{(1-z^2)^3}");
        assert_eq!(poly_text(&Poly::<BigRational>::from_ints(&[-1, 0, -1], 'u')), "-1 - u^2");
        assert_eq!(rf_text(&rf(&[3], &[2])), "3/2");
        assert_eq!(rf_text(&rf(&[1], &[1, 1, 1])), "1/(1 + z + z^2)");
        assert_eq!(rf_latex(&rf(&[1], &[1, 1, 1])), "\\frac{1}{1 + z + z^2}");
        assert_eq!(rf_latex(&rf(&[0, 1], &[1, 0, -1])), "\\frac{z}{1-z^2}");
        assert_eq!(rf_text(&rf(&[0, 1], &[1, 0, -1])), "z/(1-z^2)");
        assert_eq!(rf_text(&RatFn::zero('z')), "0");
    }

    #[test]
    fn gaussian_terms() {
        let i = Complex::new(BigRational::zero(), BigRational::one());
        let p: Poly<GaussianRational> =
            Poly::new(vec![i.clone(), Complex::new(BigRational::one(), BigRational::one())], 'z');
        assert_eq!(poly_text(&p), "i + (1+i)z");
    }

    #[test]
    fn json_round_trip() {
        let f = rf(&[0, 1, 1], &[1, -3, 3, -1]);
        let j = f.to_json();
        assert_eq!(j.den, vec!["-1", "3", "-3", "1"]);
        let text = serde_json::to_string(&j).unwrap();
        let back: RationalFunctionJson = serde_json::from_str(&text).unwrap();
        assert_eq!(RatFn::from_json(&back, 'z').unwrap(), f);
        let bad = RationalFunctionJson { num: vec!["x".into()], den: vec!["1".into()] };
        assert!(RatFn::from_json(&bad, 'z').is_err());
    }
}
