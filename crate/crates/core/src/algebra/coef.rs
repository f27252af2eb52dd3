use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::{Complex, Complex64};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact Gaussian rational `a + b i` with `a, b` rational.
pub type GaussianRational = Complex<BigRational>;

/// Exact field element usable as a polynomial coefficient.
///
/// Two implementations exist: [`BigRational`] for real work and
/// [`GaussianRational`] for expressions that carry the imaginary unit.
pub trait Coef:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn from_rational(r: BigRational) -> Self;

    fn from_int(i: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(i)))
    }

    /// The imaginary unit, if this coefficient ring contains it.
    fn imaginary_unit() -> Option<Self>;

    /// The real part when the imaginary part is exactly zero.
    fn as_real(&self) -> Option<BigRational>;

    fn to_complex64(&self) -> Complex64;

    /// Scalar `s` such that `s * den` is the canonical denominator: primitive
    /// with integer coefficients and positive leading coefficient when real,
    /// monic otherwise.
    fn normalizer(den: &[Self]) -> Self {
        let lc = den.last().expect("normalizer of zero polynomial").clone();
        let inv = Self::one() / lc;
        let monic: Vec<Self> = den.iter().map(|c| c.clone() * &inv).collect();
        let reals: Option<Vec<BigRational>> = monic.iter().map(Self::as_real).collect();
        match reals {
            Some(reals) => inv * &Self::from_rational(primitive_scale(&reals)),
            None => inv,
        }
    }

    /// Greatest common divisor of two dense polynomials (ascending order, no
    /// trailing zeros), returned monic. Either input may be zero.
    fn poly_gcd(a: &[Self], b: &[Self]) -> Vec<Self> {
        euclid_gcd(a, b)
    }

    /// Embedding into the Gaussian field.
    fn to_gaussian(&self) -> GaussianRational;
}

/// Scalar turning rational coefficients into a primitive integer vector whose
/// last (leading) entry keeps its sign. Input must not be all zero.
pub(crate) fn primitive_scale(coeffs: &[BigRational]) -> BigRational {
    let mut den_lcm = BigInt::one();
    let mut num_gcd = BigInt::zero();
    for c in coeffs.iter().filter(|c| !c.is_zero()) {
        den_lcm = den_lcm.lcm(c.denom());
        num_gcd = num_gcd.gcd(c.numer());
    }
    let mut s = BigRational::new(den_lcm, num_gcd);
    if coeffs.iter().rev().find(|c| !c.is_zero()).is_some_and(|c| c.is_negative()) {
        s = -s;
    }
    s
}

/// Plain Euclidean algorithm over a field with monic remainders.
pub(crate) fn euclid_gcd<C: Coef>(a: &[C], b: &[C]) -> Vec<C> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    while !b.is_empty() {
        let r = poly_rem(&a, &b);
        a = b;
        b = make_monic(r);
    }
    make_monic(a)
}

fn make_monic<C: Coef>(p: Vec<C>) -> Vec<C> {
    match p.last() {
        None => p,
        Some(lc) => {
            let inv = C::one() / lc.clone();
            p.into_iter().map(|c| c * &inv).collect()
        }
    }
}

/// Remainder of `a` divided by nonzero `b` over a field; trailing zeros trimmed.
pub(crate) fn poly_rem<C: Coef>(a: &[C], b: &[C]) -> Vec<C> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let inv = C::one() / b[db].clone();
    while r.len() > db {
        let top = r.len() - 1;
        let q = r[top].clone() * &inv;
        if !q.is_zero() {
            let shift = top - db;
            for (i, bc) in b.iter().enumerate() {
                r[shift + i] = r[shift + i].clone() - q.clone() * bc;
            }
        }
        r.pop();
        trim(&mut r);
    }
    trim(&mut r);
    r
}

pub(crate) fn trim<C: Zero>(p: &mut Vec<C>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

impl Coef for BigRational {
    fn from_rational(r: BigRational) -> Self {
        r
    }

    fn imaginary_unit() -> Option<Self> {
        None
    }

    fn as_real(&self) -> Option<BigRational> {
        Some(self.clone())
    }

    fn to_complex64(&self) -> Complex64 {
        Complex64::new(rational_to_f64(self), 0.0)
    }

    fn poly_gcd(a: &[Self], b: &[Self]) -> Vec<Self> {
        let g = primitive_prs_gcd(&to_primitive_ints(a), &to_primitive_ints(b));
        let g: Vec<BigRational> = g.into_iter().map(BigRational::from_integer).collect();
        make_monic(g)
    }

    fn to_gaussian(&self) -> GaussianRational {
        Complex::new(self.clone(), BigRational::zero())
    }
}

impl Coef for GaussianRational {
    fn from_rational(r: BigRational) -> Self {
        Complex::new(r, BigRational::zero())
    }

    fn imaginary_unit() -> Option<Self> {
        Some(Complex::new(BigRational::zero(), BigRational::one()))
    }

    fn as_real(&self) -> Option<BigRational> {
        self.im.is_zero().then(|| self.re.clone())
    }

    fn to_complex64(&self) -> Complex64 {
        Complex64::new(rational_to_f64(&self.re), rational_to_f64(&self.im))
    }

    fn to_gaussian(&self) -> GaussianRational {
        self.clone()
    }
}

pub(crate) fn rational_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // numerator and denominator both overflow f64; scale by bit length
        let shift = r.numer().bits().max(r.denom().bits()).saturating_sub(1000) as i32;
        let n = (r.numer() >> shift as usize).to_f64().unwrap_or(f64::NAN);
        let d = (r.denom() >> shift as usize).to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

fn to_primitive_ints(p: &[BigRational]) -> Vec<BigInt> {
    if p.is_empty() {
        return Vec::new();
    }
    let s = primitive_scale(p);
    p.iter()
        .map(|c| {
            let v = c * &s;
            debug_assert!(v.is_integer());
            v.to_integer()
        })
        .collect()
}

fn content(p: &[BigInt]) -> BigInt {
    p.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn primitive_part(mut p: Vec<BigInt>) -> Vec<BigInt> {
    let c = content(&p);
    if !c.is_zero() && !c.is_one() {
        for v in &mut p {
            *v /= &c;
        }
    }
    if p.last().is_some_and(|v| v.is_negative()) {
        for v in &mut p {
            *v = -&*v;
        }
    }
    p
}

/// Pseudo-remainder of integer polynomials, `lc(b)^(da-db+1) * a mod b`.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lc = &b[db];
    while r.len() > db {
        let top = r.len() - 1;
        let t = r[top].clone();
        let shift = top - db;
        if !t.is_zero() {
            for v in r.iter_mut() {
                *v *= lc;
            }
            for (i, bc) in b.iter().enumerate() {
                r[shift + i] -= &t * bc;
            }
        }
        r.pop();
        trim(&mut r);
    }
    r
}

/// Primitive polynomial remainder sequence gcd over the integers.
fn primitive_prs_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let (mut a, mut b) = if a.len() >= b.len() {
        (a.to_vec(), b.to_vec())
    } else {
        (b.to_vec(), a.to_vec())
    };
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = pseudo_rem(&a, &b);
        a = b;
        b = primitive_part(r);
    }
    primitive_part(a)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| BigRational::from_integer(x.into())).collect()
    }

    #[test]
    fn gcd_of_shared_factor() {
        // (1 - z)(1 + z) and (1 - z)^2
        let a = q(&[1, 0, -1]);
        let b = q(&[1, -2, 1]);
        assert_eq!(BigRational::poly_gcd(&a, &b), q(&[-1, 1]));
        let ga: Vec<GaussianRational> = a.iter().map(Coef::to_gaussian).collect();
        let gb: Vec<GaussianRational> = b.iter().map(Coef::to_gaussian).collect();
        let g = GaussianRational::poly_gcd(&ga, &gb);
        assert_eq!(g, q(&[-1, 1]).iter().map(Coef::to_gaussian).collect::<Vec<_>>());
    }

    #[test]
    fn gcd_with_zero() {
        let a = q(&[2, 4]);
        assert_eq!(BigRational::poly_gcd(&a, &[]), q(&[1, 2]).iter().map(|c| c / BigRational::from_integer(2.into())).collect::<Vec<_>>());
        assert!(BigRational::poly_gcd(&[], &[]).is_empty());
    }

    #[test]
    fn normalizer_makes_primitive_positive() {
        let den = vec![
            BigRational::new(1.into(), 2.into()),
            BigRational::new((-3).into(), 4.into()),
        ];
        let s = BigRational::normalizer(&den);
        let scaled: Vec<_> = den.iter().map(|c| c * &s).collect();
        assert_eq!(scaled, q(&[-2, 3]));
    }

    #[test]
    fn huge_rational_to_f64() {
        let big = num_traits::pow(BigInt::from(10), 400);
        let r = BigRational::new(&big + 1, big * 2);
        assert!((rational_to_f64(&r) - 0.5).abs() < 1e-15);
    }
}
