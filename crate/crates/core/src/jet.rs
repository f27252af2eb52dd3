//! Truncated Taylor series ("jets") in double precision.
//!
//! A [`Jet`] at `x0` of order `N` stores `c[k] = f^(k)(x0) / k!` for
//! `k = 0..=N`. Arithmetic combines jets coefficient by coefficient with the
//! usual Cauchy-product recurrences and never reads past the order of either
//! operand. [`Jet::derivative`] drops one order, so repeated operator
//! application `(a(x) d/dx)^n f` consumes exactly `n` orders.
//!
//! This module is the crate's independent differentiation oracle: nothing in
//! it touches the exact-algebra or polylog code.

use std::f64::consts::FRAC_PI_2;
use std::fmt;

use thiserror::Error;

use crate::algebra::{rational_to_f64, Poly, RatFn};

/// Distance from a pole or branch point below which lifting fails.
pub const SINGULARITY_GUARD: f64 = 1e-6;

/// Guard orders added by [`apply_operator_power`] on top of the `n` it consumes.
pub const GUARD_ORDERS: usize = 2;

#[derive(Clone, Debug, PartialEq, Error)]
pub enum JetError {
    #[error("{function} is not defined at x = {x0}")]
    Domain { function: FunctionId, x0: f64 },
    #[error("{function} is singular at x = {x0}")]
    Singularity { function: FunctionId, x0: f64 },
    #[error("jet order exhausted")]
    OrderExhausted,
    #[error("division by a jet with zero constant term at x = {0}")]
    ZeroDivisor(f64),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Jet {
    x0: f64,
    c: Vec<f64>,
}

impl Jet {
    pub fn from_coeffs(x0: f64, c: Vec<f64>) -> Self {
        assert!(!c.is_empty(), "a jet has at least the constant term");
        Self { x0, c }
    }

    pub fn constant(v: f64, x0: f64, order: usize) -> Self {
        let mut c = vec![0.0; order + 1];
        c[0] = v;
        Self { x0, c }
    }

    /// The identity function `x` expanded at `x0`.
    pub fn variable(x0: f64, order: usize) -> Self {
        let mut j = Self::constant(x0, x0, order);
        if order >= 1 {
            j.c[1] = 1.0;
        }
        j
    }

    pub fn x0(&self) -> f64 {
        self.x0
    }

    pub fn order(&self) -> usize {
        self.c.len() - 1
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.c
    }

    pub fn value(&self) -> f64 {
        self.c[0]
    }

    /// `k`-th derivative at `x0`, `k! c[k]`.
    pub fn derivative_value(&self, k: usize) -> Result<f64, JetError> {
        let ck = self.c.get(k).ok_or(JetError::OrderExhausted)?;
        Ok(ck * (1..=k).map(|i| i as f64).product::<f64>())
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self { x0: self.x0, c: self.c[..=order.min(self.order())].to_vec() }
    }

    fn paired_order(&self, other: &Jet) -> usize {
        debug_assert_eq!(self.x0, other.x0, "jets expanded at different points");
        self.order().min(other.order())
    }

    pub fn add(&self, other: &Jet) -> Jet {
        let n = self.paired_order(other);
        Jet { x0: self.x0, c: (0..=n).map(|k| self.c[k] + other.c[k]).collect() }
    }

    pub fn sub(&self, other: &Jet) -> Jet {
        let n = self.paired_order(other);
        Jet { x0: self.x0, c: (0..=n).map(|k| self.c[k] - other.c[k]).collect() }
    }

    pub fn mul(&self, other: &Jet) -> Jet {
        let n = self.paired_order(other);
        let c = (0..=n)
            .map(|k| (0..=k).map(|j| self.c[j] * other.c[k - j]).sum())
            .collect();
        Jet { x0: self.x0, c }
    }

    pub fn scale(&self, s: f64) -> Jet {
        Jet { x0: self.x0, c: self.c.iter().map(|v| v * s).collect() }
    }

    pub fn add_scalar(&self, s: f64) -> Jet {
        let mut out = self.clone();
        out.c[0] += s;
        out
    }

    pub fn div(&self, other: &Jet) -> Result<Jet, JetError> {
        let n = self.paired_order(other);
        let b0 = other.c[0];
        if b0 == 0.0 || !b0.is_finite() {
            return Err(JetError::ZeroDivisor(self.x0));
        }
        let mut q = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let s: f64 = (1..=k).map(|j| other.c[j] * q[k - j]).sum();
            q.push((self.c[k] - s) / b0);
        }
        Ok(Jet { x0: self.x0, c: q })
    }

    pub fn recip(&self) -> Result<Jet, JetError> {
        Jet::constant(1.0, self.x0, self.order()).div(self)
    }

    /// Square root; requires a positive constant term.
    pub fn sqrt(&self) -> Result<Jet, JetError> {
        let a0 = self.c[0];
        if !(a0 > 0.0) {
            return Err(JetError::ZeroDivisor(self.x0));
        }
        let s0 = a0.sqrt();
        let mut s = vec![s0];
        for k in 1..=self.order() {
            let cross: f64 = (1..k).map(|j| s[j] * s[k - j]).sum();
            s.push((self.c[k] - cross) / (2.0 * s0));
        }
        Ok(Jet { x0: self.x0, c: s })
    }

    pub fn exp(&self) -> Jet {
        let mut e = vec![self.c[0].exp()];
        for k in 1..=self.order() {
            let acc: f64 = (1..=k).map(|j| j as f64 * self.c[j] * e[k - j]).sum();
            e.push(acc / k as f64);
        }
        Jet { x0: self.x0, c: e }
    }

    /// Natural logarithm; requires a positive constant term.
    pub fn ln(&self) -> Result<Jet, JetError> {
        let a0 = self.c[0];
        if !(a0 > 0.0) {
            return Err(JetError::ZeroDivisor(self.x0));
        }
        let mut l = vec![a0.ln()];
        for k in 1..=self.order() {
            let acc: f64 = (1..k).map(|j| j as f64 * l[j] * self.c[k - j]).sum();
            l.push((self.c[k] - acc / k as f64) / a0);
        }
        Ok(Jet { x0: self.x0, c: l })
    }

    /// `(sin f, cos f)`.
    pub fn sin_cos(&self) -> (Jet, Jet) {
        let (s0, c0) = self.c[0].sin_cos();
        let mut s = vec![s0];
        let mut c = vec![c0];
        for k in 1..=self.order() {
            let ds: f64 = (1..=k).map(|j| j as f64 * self.c[j] * c[k - j]).sum();
            let dc: f64 = (1..=k).map(|j| j as f64 * self.c[j] * s[k - j]).sum();
            s.push(ds / k as f64);
            c.push(-dc / k as f64);
        }
        (Jet { x0: self.x0, c: s }, Jet { x0: self.x0, c })
    }

    /// d/dx; the result has one order less.
    pub fn derivative(&self) -> Result<Jet, JetError> {
        if self.order() == 0 {
            return Err(JetError::OrderExhausted);
        }
        let c = (1..self.c.len()).map(|k| k as f64 * self.c[k]).collect();
        Ok(Jet { x0: self.x0, c })
    }

    /// Antiderivative with the given value at `x0`; one order more.
    pub fn integrate(&self, value: f64) -> Jet {
        let mut c = Vec::with_capacity(self.c.len() + 1);
        c.push(value);
        c.extend(self.c.iter().enumerate().map(|(k, v)| v / (k + 1) as f64));
        Jet { x0: self.x0, c }
    }

    /// Evaluates a real polynomial at this jet (Horner).
    pub fn compose_poly(&self, p: &Poly<num_rational::BigRational>) -> Jet {
        let mut acc = Jet::constant(0.0, self.x0, self.order());
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(self).add_scalar(rational_to_f64(c));
        }
        acc
    }

    /// Evaluates a real rational function at this jet.
    pub fn compose_rational(&self, f: &RatFn) -> Result<Jet, JetError> {
        self.compose_poly(f.num()).div(&self.compose_poly(f.den()))
    }
}

/// Scalar functions the oracle can expand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FunctionId {
    Exp,
    Ln,
    Sin,
    Cos,
    Tan,
    Cot,
    Csc,
    Sec,
    Sinh,
    Cosh,
    Tanh,
    Coth,
    Csch,
    Sech,
    Arctan,
    Arctanh,
    Arccot,
    Arccoth,
    Arcsin,
    Arccos,
    Arcsinh,
    Arccosh,
    Arcsech,
    Arccsc,
    Arcsec,
    Arccsch,
}

impl FunctionId {
    pub const ALL: [FunctionId; 26] = [
        FunctionId::Exp,
        FunctionId::Ln,
        FunctionId::Sin,
        FunctionId::Cos,
        FunctionId::Tan,
        FunctionId::Cot,
        FunctionId::Csc,
        FunctionId::Sec,
        FunctionId::Sinh,
        FunctionId::Cosh,
        FunctionId::Tanh,
        FunctionId::Coth,
        FunctionId::Csch,
        FunctionId::Sech,
        FunctionId::Arctan,
        FunctionId::Arctanh,
        FunctionId::Arccot,
        FunctionId::Arccoth,
        FunctionId::Arcsin,
        FunctionId::Arccos,
        FunctionId::Arcsinh,
        FunctionId::Arccosh,
        FunctionId::Arcsech,
        FunctionId::Arccsc,
        FunctionId::Arcsec,
        FunctionId::Arccsch,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FunctionId::Exp => "exp",
            FunctionId::Ln => "ln",
            FunctionId::Sin => "sin",
            FunctionId::Cos => "cos",
            FunctionId::Tan => "tan",
            FunctionId::Cot => "cot",
            FunctionId::Csc => "csc",
            FunctionId::Sec => "sec",
            FunctionId::Sinh => "sinh",
            FunctionId::Cosh => "cosh",
            FunctionId::Tanh => "tanh",
            FunctionId::Coth => "coth",
            FunctionId::Csch => "csch",
            FunctionId::Sech => "sech",
            FunctionId::Arctan => "arctan",
            FunctionId::Arctanh => "arctanh",
            FunctionId::Arccot => "arccot",
            FunctionId::Arccoth => "arccoth",
            FunctionId::Arcsin => "arcsin",
            FunctionId::Arccos => "arccos",
            FunctionId::Arcsinh => "arcsinh",
            FunctionId::Arccosh => "arccosh",
            FunctionId::Arcsech => "arcsech",
            FunctionId::Arccsc => "arccsc",
            FunctionId::Arcsec => "arcsec",
            FunctionId::Arccsch => "arccsch",
        }
    }

    pub fn from_name(name: &str) -> Option<FunctionId> {
        FunctionId::ALL.into_iter().find(|f| f.name() == name)
    }
}

impl fmt::Display for FunctionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Distance from `x` to the nearest point of `offset + k * period`.
fn lattice_distance(x: f64, offset: f64, period: f64) -> f64 {
    let r = (x - offset).rem_euclid(period);
    r.min(period - r)
}

/// Taylor coefficients of `function` at `x0` through `order`.
///
/// Inverse functions are built by expanding their algebraic derivative and
/// integrating, with the constant term from the standard library. Real-valued
/// conventions: `arccot` has range `(0, pi)`; `arctanh` and `arccoth` are
/// taken as `1/2 ln|(1+x)/(1-x)|` (the real part of the principal branch) on
/// all of `R \ {-1, 1}`, so their derivatives are `1/(1-x^2)` everywhere.
pub fn jet_lift(function: FunctionId, x0: f64, order: usize) -> Result<Jet, JetError> {
    use FunctionId::*;
    let domain = || Err(JetError::Domain { function, x0 });
    let singular = || Err(JetError::Singularity { function, x0 });
    let near = |p: f64| (x0 - p).abs() < SINGULARITY_GUARD;
    if !x0.is_finite() {
        return domain();
    }

    let x = Jet::variable(x0, order);
    match function {
        Exp => Ok(x.exp()),
        Ln => {
            if x0 <= 0.0 {
                return domain();
            }
            if near(0.0) {
                return singular();
            }
            x.ln()
        }
        Sin | Cos | Tan | Cot | Csc | Sec => {
            let pole_offset = match function {
                Tan | Sec => Some(FRAC_PI_2),
                Cot | Csc => Some(0.0),
                _ => None,
            };
            if let Some(offset) = pole_offset {
                if lattice_distance(x0, offset, std::f64::consts::PI) < SINGULARITY_GUARD {
                    return singular();
                }
            }
            let (s, c) = x.sin_cos();
            match function {
                Sin => Ok(s),
                Cos => Ok(c),
                Tan => s.div(&c),
                Cot => c.div(&s),
                Csc => s.recip(),
                _ => c.recip(),
            }
        }
        Sinh | Cosh | Tanh | Coth | Csch | Sech => {
            if matches!(function, Coth | Csch) && near(0.0) {
                return singular();
            }
            let ep = x.exp();
            let em = x.scale(-1.0).exp();
            let sh = ep.sub(&em).scale(0.5);
            let ch = ep.add(&em).scale(0.5);
            match function {
                Sinh => Ok(sh),
                Cosh => Ok(ch),
                Tanh => sh.div(&ch),
                Coth => ch.div(&sh),
                Csch => sh.recip(),
                _ => ch.recip(),
            }
        }
        _ => lift_inverse(function, x0, order),
    }
}

fn lift_inverse(function: FunctionId, x0: f64, order: usize) -> Result<Jet, JetError> {
    use FunctionId::*;
    let domain = Err(JetError::Domain { function, x0 });
    let singular = Err(JetError::Singularity { function, x0 });
    let near = |p: f64| (x0 - p).abs() < SINGULARITY_GUARD;

    match function {
        Arctanh | Arccoth | Arcsin | Arccos if near(1.0) || near(-1.0) => return singular,
        Arcsin | Arccos if x0.abs() > 1.0 => return domain,
        Arccosh if x0 < 1.0 => return domain,
        Arccosh if near(1.0) => return singular,
        Arcsech if x0 <= 0.0 || x0 > 1.0 => return domain,
        Arcsech if near(0.0) || near(1.0) => return singular,
        Arccsc | Arcsec if x0.abs() < 1.0 => return domain,
        Arccsc | Arcsec if near(1.0) || near(-1.0) => return singular,
        Arccsch if near(0.0) => return singular,
        _ => {}
    }

    let value = match function {
        Arctan => x0.atan(),
        Arccot => FRAC_PI_2 - x0.atan(),
        Arctanh | Arccoth => 0.5 * ((1.0 + x0) / (1.0 - x0)).abs().ln(),
        Arcsin => x0.asin(),
        Arccos => x0.acos(),
        Arcsinh => x0.asinh(),
        Arccosh => x0.acosh(),
        Arcsech => (1.0 / x0).acosh(),
        Arccsc => (1.0 / x0).asin(),
        Arcsec => (1.0 / x0).acos(),
        Arccsch => (1.0 / x0).asinh(),
        _ => unreachable!("not an inverse function"),
    };
    if order == 0 {
        return Ok(Jet::constant(value, x0, 0));
    }

    let x = Jet::variable(x0, order - 1);
    let x2 = x.mul(&x);
    let one = Jet::constant(1.0, x0, order - 1);
    let abs_x = if x0 < 0.0 { x.scale(-1.0) } else { x.clone() };
    let derivative = match function {
        Arctan => one.add(&x2).recip()?,
        Arccot => one.add(&x2).recip()?.scale(-1.0),
        Arctanh | Arccoth => one.sub(&x2).recip()?,
        Arcsin => one.sub(&x2).sqrt()?.recip()?,
        Arccos => one.sub(&x2).sqrt()?.recip()?.scale(-1.0),
        Arcsinh => one.add(&x2).sqrt()?.recip()?,
        Arccosh => x2.sub(&one).sqrt()?.recip()?,
        Arcsech => x.mul(&one.sub(&x2).sqrt()?).recip()?.scale(-1.0),
        Arccsc => abs_x.mul(&x2.sub(&one).sqrt()?).recip()?.scale(-1.0),
        Arcsec => abs_x.mul(&x2.sub(&one).sqrt()?).recip()?,
        Arccsch => abs_x.mul(&one.add(&x2).sqrt()?).recip()?.scale(-1.0),
        _ => unreachable!("not an inverse function"),
    };
    Ok(derivative.integrate(value))
}

/// `f^(n)(x0)` from a jet of order `n`.
pub fn nth_derivative(function: FunctionId, x0: f64, n: usize) -> Result<f64, JetError> {
    jet_lift(function, x0, n)?.derivative_value(n)
}

/// Applies `g -> a * g'` to `f` `n` times; each round consumes one order.
pub fn apply_operator_jet(a: &Jet, f: &Jet, n: usize) -> Result<Jet, JetError> {
    let mut g = f.clone();
    for _ in 0..n {
        g = a.mul(&g.derivative()?);
    }
    Ok(g)
}

/// Value at `x0` of `(a(x) d/dx)^n target`.
///
/// `coef` builds the jet of `a` from the jet of the variable `x`. Jets are
/// lifted to order `n + GUARD_ORDERS`.
pub fn apply_operator_power<A>(coef: A, target: FunctionId, n: usize, x0: f64) -> Result<f64, JetError>
where
    A: Fn(&Jet) -> Result<Jet, JetError>,
{
    let order = n + GUARD_ORDERS;
    let f = jet_lift(target, x0, order)?;
    let a = coef(&Jet::variable(x0, order))?;
    Ok(apply_operator_jet(&a, &f, n)?.value())
}

/// Operator coefficient given as a rational function of `x`.
pub fn rational_coef(f: &RatFn) -> impl Fn(&Jet) -> Result<Jet, JetError> + '_ {
    move |x| x.compose_rational(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Poly, RationalFunction};

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * (1.0 + a.abs().max(b.abs()))
    }

    #[test]
    fn lift_examples() {
        let e = jet_lift(FunctionId::Exp, 0.0, 5).unwrap();
        let want = [1.0, 1.0, 0.5, 1.0 / 6.0, 1.0 / 24.0, 1.0 / 120.0];
        for (a, b) in e.coeffs().iter().zip(want) {
            assert!(close(*a, b, 1e-15));
        }
        let t = jet_lift(FunctionId::Arctanh, 0.0, 3).unwrap();
        for (a, b) in t.coeffs().iter().zip([0.0, 1.0, 0.0, 1.0 / 3.0]) {
            assert!(close(*a, b, 1e-15));
        }
        let c = jet_lift(FunctionId::Cot, FRAC_PI_2, 2).unwrap();
        for (a, b) in c.coeffs().iter().zip([0.0, -1.0, 0.0]) {
            assert!(close(*a, b, 1e-15), "{a} vs {b}");
        }
    }

    #[test]
    fn derivative_examples() {
        assert!(close(nth_derivative(FunctionId::Sin, 0.0, 1).unwrap(), 1.0, 1e-15));
        assert!(close(nth_derivative(FunctionId::Tan, 0.0, 3).unwrap(), 2.0, 1e-14));
        // sec'' = sec^3 + sec tan^2
        assert!(close(nth_derivative(FunctionId::Sec, 0.0, 2).unwrap(), 1.0, 1e-14));
        for n in 0..=12 {
            for x0 in [-1.3, 0.0, 0.4, 2.2] {
                let d = nth_derivative(FunctionId::Exp, x0, n).unwrap();
                assert!((d - x0.exp()).abs() <= 1e-10 * x0.exp());
            }
        }
    }

    #[test]
    fn inverse_derivatives_match_closed_forms() {
        let cases: [(FunctionId, f64, f64); 12] = [
            (FunctionId::Arctan, 0.7, 1.0 / (1.0 + 0.49)),
            (FunctionId::Arccot, 0.7, -1.0 / (1.0 + 0.49)),
            (FunctionId::Arctanh, 0.3, 1.0 / (1.0 - 0.09)),
            (FunctionId::Arccoth, 3.0, 1.0 / (1.0 - 9.0)),
            (FunctionId::Arcsin, 0.6, 1.0 / 0.8),
            (FunctionId::Arccos, 0.6, -1.0 / 0.8),
            (FunctionId::Arcsinh, 0.75, 1.0 / 1.25),
            (FunctionId::Arccosh, 1.25, 1.0 / 0.75),
            (FunctionId::Arcsech, 0.6, -1.0 / (0.6 * 0.8)),
            (FunctionId::Arccsc, -1.25, -1.0 / (1.25 * 0.75)),
            (FunctionId::Arcsec, 1.25, 1.0 / (1.25 * 0.75)),
            (FunctionId::Arccsch, -0.75, -1.0 / (0.75 * 1.25)),
        ];
        for (f, x0, want) in cases {
            let d = nth_derivative(f, x0, 1).unwrap();
            assert!(close(d, want, 1e-14), "{f}: {d} vs {want}");
        }
        // constant terms
        assert!(close(jet_lift(FunctionId::Arcsech, 0.6, 0).unwrap().value(), (1.0f64 / 0.6).acosh(), 1e-15));
        assert!(close(jet_lift(FunctionId::Arccot, -1.0, 2).unwrap().value(), 1.5 * FRAC_PI_2, 1e-15));
    }

    #[test]
    fn inverse_jets_match_finite_differences() {
        // fourth-order central difference of the first derivative checks c[2]
        let h = 1e-3;
        for (f, x0) in [
            (FunctionId::Arcsin, 0.3),
            (FunctionId::Arccsch, 0.9),
            (FunctionId::Arcsech, 0.5),
            (FunctionId::Arccosh, 1.7),
        ] {
            let d1 = |x: f64| nth_derivative(f, x, 1).unwrap();
            let fd = (-d1(x0 + 2.0 * h) + 8.0 * d1(x0 + h) - 8.0 * d1(x0 - h) + d1(x0 - 2.0 * h)) / (12.0 * h);
            let d2 = nth_derivative(f, x0, 2).unwrap();
            assert!(close(d2, fd, 1e-9), "{f}: {d2} vs {fd}");
        }
    }

    #[test]
    fn domain_and_singularity_errors() {
        assert!(matches!(jet_lift(FunctionId::Arccosh, 0.5, 3), Err(JetError::Domain { .. })));
        assert!(matches!(jet_lift(FunctionId::Arcsin, 1.5, 3), Err(JetError::Domain { .. })));
        assert!(matches!(jet_lift(FunctionId::Tan, FRAC_PI_2, 3), Err(JetError::Singularity { .. })));
        assert!(matches!(jet_lift(FunctionId::Coth, 1e-7, 3), Err(JetError::Singularity { .. })));
        assert!(matches!(jet_lift(FunctionId::Arctanh, 1.0 - 1e-7, 3), Err(JetError::Singularity { .. })));
        assert!(matches!(jet_lift(FunctionId::Csc, 3.0 * std::f64::consts::PI, 1), Err(JetError::Singularity { .. })));
        assert!(jet_lift(FunctionId::Csc, 1e-3, 1).is_ok());
    }

    #[test]
    fn operator_power_examples() {
        let x = |j: &Jet| Ok(j.clone());
        let v = apply_operator_power(x, FunctionId::Arctanh, 1, 0.5).unwrap();
        assert!(close(v, 2.0 / 3.0, 1e-15));
        let v = apply_operator_power(x, FunctionId::Arctan, 1, 1.0).unwrap();
        assert!(close(v, 0.5, 1e-15));
        let v = apply_operator_power(|j: &Jet| Ok(j.mul(j)), FunctionId::Sin, 0, 0.8).unwrap();
        assert!(close(v, 0.8f64.sin(), 1e-15));
        for x0 in [0.2, 1.0, 3.5, 10.0] {
            let v = apply_operator_power(x, FunctionId::Ln, 1, x0).unwrap();
            assert!(close(v, 1.0, 1e-14));
            // (x d/dx)^2 ln x = 0
            let v = apply_operator_power(x, FunctionId::Ln, 2, x0).unwrap();
            assert!(v.abs() < 1e-13);
        }
    }

    #[test]
    fn rational_operator_coefficient() {
        // a(x) = x + x^3 on arcsinh: (x + x^3) / sqrt(1 + x^2) = x sqrt(1 + x^2)
        let a = RationalFunction::from_poly(Poly::from_ints(&[0, 1, 0, 1], 'x'));
        let x0: f64 = 0.7;
        let v = apply_operator_power(rational_coef(&a), FunctionId::Arcsinh, 1, x0).unwrap();
        assert!(close(v, x0 * (1.0 + x0 * x0).sqrt(), 1e-15));
    }

    #[test]
    fn order_accounting() {
        let n = 4;
        let mut j = jet_lift(FunctionId::Sin, 0.3, n).unwrap();
        for _ in 0..n {
            j = j.derivative().unwrap();
        }
        assert_eq!(j.order(), 0);
        // fourth derivative of sin is sin
        assert!(close(j.value(), 0.3f64.sin(), 1e-14));
        assert_eq!(j.derivative(), Err(JetError::OrderExhausted));
        let a = Jet::variable(0.3, n);
        let f = jet_lift(FunctionId::Sin, 0.3, n).unwrap();
        assert!(apply_operator_jet(&a, &f, n).is_ok());
        assert_eq!(apply_operator_jet(&a, &f, n + 1), Err(JetError::OrderExhausted));
    }

    #[test]
    fn function_names_round_trip() {
        for f in FunctionId::ALL {
            assert_eq!(FunctionId::from_name(f.name()), Some(f));
        }
    }
}
