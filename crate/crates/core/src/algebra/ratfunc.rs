use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_rational::BigRational;

use super::coef::{Coef, GaussianRational};
use super::poly::Poly;
use super::AlgebraError;

/// Argument transformations `z -> sigma(z)` used by the identities.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Substitution {
    /// `z -> -z`
    NegateZ,
    /// `z -> z^2`
    SquareZ,
    /// `z -> 1/z`
    InvertZ,
    /// `z -> i z`; needs Gaussian coefficients.
    ITimesZ,
}

/// Reduced quotient of polynomials in canonical form.
///
/// Invariants: the denominator is nonzero; numerator and denominator are
/// coprime; the denominator is scaled to a primitive integer polynomial with
/// positive leading coefficient when it is real, and to a monic polynomial
/// otherwise. Zero is stored as `0/1`. Under these rules two rational functions
/// are equal iff their representations are identical.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalFunction<C> {
    num: Poly<C>,
    den: Poly<C>,
}

pub type RatFn = RationalFunction<BigRational>;
pub type GaussRatFn = RationalFunction<GaussianRational>;

/// Denominator written as `scale * (1 + a var^step)^power`.
#[derive(Clone, Debug, PartialEq)]
pub struct BinomialPower<C> {
    pub scale: C,
    pub a: C,
    pub step: usize,
    pub power: u32,
}

impl<C: Coef> RationalFunction<C> {
    pub fn new(num: Poly<C>, den: Poly<C>) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let g = num.gcd(&den)?;
        if g.degree().unwrap_or(0) == 0 {
            return Ok(Self::normalized(num, den));
        }
        let (num, _) = num.div_rem(&g)?;
        let (den, _) = den.div_rem(&g)?;
        Ok(Self::normalized(num, den))
    }

    /// Skips the gcd step; callers guarantee `num` and `den` are coprime.
    fn normalized(num: Poly<C>, den: Poly<C>) -> Self {
        let var = den.var();
        if num.is_zero() {
            return Self::zero(var);
        }
        let s = C::normalizer(den.coeffs());
        if s.is_one() {
            Self { num, den }
        } else {
            Self { num: num.scale(&s), den: den.scale(&s) }
        }
    }

    pub fn from_poly(p: Poly<C>) -> Self {
        let var = p.var();
        Self::normalized(p, Poly::one(var))
    }

    pub fn constant(c: C, var: char) -> Self {
        Self::from_poly(Poly::constant(c, var))
    }

    pub fn zero(var: char) -> Self {
        Self { num: Poly::zero(var), den: Poly::one(var) }
    }

    pub fn one(var: char) -> Self {
        Self::constant(C::one(), var)
    }

    /// The variable as a rational function.
    pub fn x(var: char) -> Self {
        Self::from_poly(Poly::x(var))
    }

    pub fn num(&self) -> &Poly<C> {
        &self.num
    }

    pub fn den(&self) -> &Poly<C> {
        &self.den
    }

    pub fn var(&self) -> char {
        self.den.var()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        if self.den == other.den {
            return Self::new(self.num.try_add(&other.num)?, self.den.clone());
        }
        let num = self.num.try_mul(&other.den)?.try_add(&other.num.try_mul(&self.den)?)?;
        Self::new(num, self.den.try_mul(&other.den)?)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.try_add(&-other.clone())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        // cross-cancel first so the final gcd sees small inputs
        let g1 = self.num.gcd(&other.den)?;
        let g2 = other.num.gcd(&self.den)?;
        let (a, _) = self.num.div_rem(&g1)?;
        let (d, _) = other.den.div_rem(&g1)?;
        let (c, _) = other.num.div_rem(&g2)?;
        let (b, _) = self.den.div_rem(&g2)?;
        if a.is_zero() || c.is_zero() {
            return Ok(Self::zero(self.var()));
        }
        Ok(Self::normalized(&a * &c, &b * &d))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.try_mul(&other.recip()?)
    }

    pub fn recip(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn scale(&self, s: &C) -> Self {
        if s.is_zero() {
            return Self::zero(self.var());
        }
        Self::normalized(self.num.scale(s), self.den.clone())
    }

    pub fn pow(&self, e: u32) -> Self {
        Self::normalized(self.num.pow(e), self.den.pow(e))
    }

    /// `z * d/dz` of the function.
    pub fn z_ddz(&self) -> Self {
        let p = &self.num;
        let q = &self.den;
        let dq = q.derivative();
        if dq.is_zero() {
            return Self::normalized(p.euler_derivative(), q.clone());
        }
        // q = g s, q' = g r  =>  z f' = z (p' s - p r) / (g s^2) = z (p' s - p r) / (q s)
        let g = q.gcd(&dq).expect("same variable");
        let (s, _) = q.div_rem(&g).expect("nonzero gcd");
        let (r, _) = dq.div_rem(&g).expect("nonzero gcd");
        let num = &(&p.euler_derivative() * &s) - &(&(&Poly::x(q.var()) * p) * &r);
        Self::new(num, q * &s).expect("nonzero denominator")
    }

    /// The composition `f(sigma(z))`.
    pub fn substitute(&self, kind: Substitution) -> Result<Self, AlgebraError> {
        // each substitution maps coprime pairs to coprime pairs
        match kind {
            Substitution::NegateZ => {
                let m = -C::one();
                Ok(Self::normalized(self.num.scale_var(&m), self.den.scale_var(&m)))
            }
            Substitution::ITimesZ => {
                let i = C::imaginary_unit().ok_or(AlgebraError::RequiresGaussian)?;
                Ok(Self::normalized(self.num.scale_var(&i), self.den.scale_var(&i)))
            }
            Substitution::SquareZ => Ok(Self::normalized(
                self.num.compose_power(2),
                self.den.compose_power(2),
            )),
            Substitution::InvertZ => {
                if self.is_zero() {
                    return Ok(self.clone());
                }
                let m = self.num.degree().unwrap().max(self.den.degree().unwrap());
                Ok(Self::normalized(self.num.reversed(m), self.den.reversed(m)))
            }
        }
    }

    /// Detects a denominator of the form `scale * (1 + a z^step)^power` with
    /// `power >= 1` and `step` in `{1, 2}`.
    pub fn denominator_power(&self) -> Option<BinomialPower<C>> {
        let deg = self.den.degree()?;
        let scale = self.den.coeff(0);
        if deg == 0 || scale.is_zero() {
            return None;
        }
        for step in [1usize, 2] {
            if deg % step != 0 {
                continue;
            }
            let power = (deg / step) as u32;
            let a = self.den.coeff(step) / (scale.clone() * &C::from_int(power as i64));
            if a.is_zero() {
                continue;
            }
            let base = Poly::new(
                (0..=step)
                    .map(|k| match k {
                        0 => C::one(),
                        k if k == step => a.clone(),
                        _ => C::zero(),
                    })
                    .collect(),
                self.var(),
            );
            if base.pow(power).scale(&scale) == self.den {
                return Some(BinomialPower { scale, a, step, power });
            }
        }
        None
    }

    /// Floating-point evaluation. Denominators of the form
    /// `scale * (1 + a z^k)^m` are evaluated in factored form, which avoids
    /// cancellation in the expanded coefficients near their roots.
    ///
    /// Fails with [`AlgebraError::Pole`] when `|den(z)| < 1e-12 (1 + |z|^deg)`.
    pub fn eval(&self, z: Complex64) -> Result<Complex64, AlgebraError> {
        let den = match self.denominator_power() {
            Some(bp) => {
                let base = Complex64::new(1.0, 0.0) + bp.a.to_complex64() * z.powu(bp.step as u32);
                bp.scale.to_complex64() * base.powu(bp.power)
            }
            None => self.den.eval(z),
        };
        let deg = self.den.degree().unwrap_or(0) as i32;
        let eps = 1e-12 * (1.0 + z.norm().powi(deg));
        if den.norm() < eps || !den.is_finite() {
            return Err(AlgebraError::Pole(z));
        }
        Ok(self.num.eval(z) / den)
    }

    /// Exact evaluation; `None` at a pole.
    pub fn eval_exact(&self, z: &C) -> Option<C> {
        let d = self.den.eval_exact(z);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval_exact(z) / d)
    }

    pub fn to_gaussian(&self) -> GaussRatFn {
        RationalFunction::normalized(self.num.to_gaussian(), self.den.to_gaussian())
    }

    /// The real rational function when every canonical coefficient is real.
    pub fn to_real(&self) -> Option<RatFn> {
        Some(RationalFunction {
            num: self.num.to_real()?,
            den: self.den.to_real()?,
        })
    }
}

impl<C: Coef> Neg for RationalFunction<C> {
    type Output = Self;

    fn neg(self) -> Self {
        Self { num: -self.num, den: self.den }
    }
}

impl<C: Coef> Add for &RationalFunction<C> {
    type Output = RationalFunction<C>;

    fn add(self, rhs: Self) -> RationalFunction<C> {
        self.try_add(rhs).expect("rational function variable mismatch")
    }
}

impl<C: Coef> Sub for &RationalFunction<C> {
    type Output = RationalFunction<C>;

    fn sub(self, rhs: Self) -> RationalFunction<C> {
        self.try_sub(rhs).expect("rational function variable mismatch")
    }
}

impl<C: Coef> Mul for &RationalFunction<C> {
    type Output = RationalFunction<C>;

    fn mul(self, rhs: Self) -> RationalFunction<C> {
        self.try_mul(rhs).expect("rational function variable mismatch")
    }
}
