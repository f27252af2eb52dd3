#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use polypseudolog::algebra::{Poly, RatFn, RationalFunction};
use proptest::prelude::*;

pub fn poly_strategy(max_len: usize) -> impl Strategy<Value = Poly<BigRational>> {
    prop::collection::vec(-6i64..=6, 1..=max_len).prop_map(|c| Poly::from_ints(&c, 'z'))
}

/// Random rational functions in `z` with small integer coefficients.
pub fn ratfn_strategy() -> impl Strategy<Value = RatFn> {
    (poly_strategy(5), poly_strategy(4))
        .prop_filter("nonzero denominator", |(_, d)| !d.is_zero())
        .prop_map(|(n, d)| RationalFunction::new(n, d).unwrap())
}

pub fn rational_strategy() -> impl Strategy<Value = BigRational> {
    (-40i64..=40, 1i64..=12).prop_map(|(p, q)| BigRational::new(BigInt::from(p), BigInt::from(q)))
}

pub fn close(a: f64, b: f64, tol: f64) -> bool {
    polypseudolog::report::relative_error(a, b) <= tol
}
