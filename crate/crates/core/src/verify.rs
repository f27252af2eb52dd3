//! Verification sweeps grouped by identity family. Each function returns one
//! report per identity covering orders `0..=n_max` (or `1..=n_max` where
//! order zero does not apply).

use std::f64::consts::FRAC_PI_2;

use crate::circular::{
    cot_derivative_poly, cot_double_angle_via_li, csc_derivative_binomial, csc_derivative_eval,
    csc_derivative_via_li, derivative_poly_recurrence, sec_derivative_binomial, sec_derivative_eval,
    sec_derivative_via_li, tan_derivative_poly, Target, CSC_GRID, SEC_GRID,
};
use crate::error::Result;
use crate::hyperbolic::{
    chi_csch_relation, coth_derivative_poly, csch_derivative_eval, li_relation_coth, li_relation_tanh,
    sech_derivative_eval, tanh_derivative_poly, ti_sech_relation, Sides, HYPERBOLIC_GRID,
};
use crate::inverse::{registry, verify_generic_suite, verify_identity, InverseIdentity};
use crate::jet::{nth_derivative, FunctionId};
use crate::ladder::{chi_ladder, ladder_coefficients, sec_variant_sides, ti_ladder, verify_ladder_exact};
use crate::polylog::duplication_holds;
use crate::report::{PointResult, VerificationReport};

/// Largest order accepted by the exact-only suite.
pub const EXACT_N_MAX: usize = 15;
/// Largest order accepted by suites with numeric checks.
pub const NUMERIC_N_MAX: usize = 10;

pub const DEFAULT_TRIG_TOLERANCE: f64 = 1e-7;
pub const DEFAULT_HYPERBOLIC_TOLERANCE: f64 = 1e-8;
pub const DEFAULT_INVERSE_TOLERANCE: f64 = 1e-7;
pub const DEFAULT_LADDER_TOLERANCE: f64 = 1e-10;

/// Points for the double-angle check.
pub const DOUBLE_ANGLE_POINTS: [f64; 10] = [0.1, 0.25, 0.4, 0.55, 0.7, 1.0, 1.2, 1.45, 1.9, 2.6];
/// Points for the numeric sec variant of the ladder.
pub const LADDER_SEC_POINTS: [f64; 4] = [0.5, 1.1, 2.0, 2.9];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Trig,
    Hyperbolic,
    Inverse,
    Ladder,
    All,
}

impl Suite {
    pub fn n_max_bound(self) -> usize {
        match self {
            Suite::Ladder => EXACT_N_MAX,
            _ => NUMERIC_N_MAX,
        }
    }

    pub fn default_tolerance(self) -> f64 {
        match self {
            Suite::Trig | Suite::All => DEFAULT_TRIG_TOLERANCE,
            Suite::Hyperbolic => DEFAULT_HYPERBOLIC_TOLERANCE,
            Suite::Inverse => DEFAULT_INVERSE_TOLERANCE,
            Suite::Ladder => DEFAULT_LADDER_TOLERANCE,
        }
    }
}

/// `route(n, x)` against `oracle(n, x)` at every grid point, orders `orders`.
fn route_vs<F, G>(name: &str, orders: impl Iterator<Item = usize>, grid: &[f64], tol: f64, route: F, oracle: G) -> VerificationReport
where
    F: Fn(usize, f64) -> Result<f64>,
    G: Fn(usize, f64) -> Result<f64>,
{
    let reports = orders.map(|n| {
        let points = grid
            .iter()
            .map(|&x| PointResult::from_sides(x, route(n, x).and_then(|l| Ok((l, oracle(n, x)?)))))
            .collect();
        VerificationReport::numeric(name, n, tol, points)
    });
    VerificationReport::merge(name, tol, reports.collect::<Vec<_>>())
}

fn sides_vs(name: &str, orders: impl Iterator<Item = usize>, grid: &[f64], tol: f64, f: impl Fn(usize, f64) -> Result<Sides>) -> VerificationReport {
    let reports = orders.map(|n| {
        let points = grid.iter().map(|&x| PointResult::from_sides(x, f(n, x).map(|s| (s.lhs, s.rhs)))).collect();
        VerificationReport::numeric(name, n, tol, points)
    });
    VerificationReport::merge(name, tol, reports.collect::<Vec<_>>())
}

fn jet(f: FunctionId) -> impl Fn(usize, f64) -> Result<f64> {
    move |n, x| Ok(nth_derivative(f, x, n)?)
}

/// Derivative polynomials, csc and sec routes, the double-angle formula.
pub fn trig_suite(n_max: usize, tol: f64) -> Vec<VerificationReport> {
    let csc = jet(FunctionId::Csc);
    let sec = jet(FunctionId::Sec);
    vec![
        VerificationReport::exact_sweep("cot-poly", 1..=n_max, |n| cot_derivative_poly(n) == derivative_poly_recurrence(Target::Cot, n)),
        VerificationReport::exact_sweep("tan-poly", 1..=n_max, |n| tan_derivative_poly(n) == derivative_poly_recurrence(Target::Tan, n)),
        route_vs("csc-li-difference", 0..=n_max, &CSC_GRID, tol, csc_derivative_via_li, &csc),
        route_vs("csc-eulerian", 0..=n_max, &CSC_GRID, tol, csc_derivative_eval, &csc),
        route_vs("csc-binomial", 0..=n_max, &CSC_GRID, tol, csc_derivative_binomial, &csc),
        route_vs("csc-leibniz", 0..=n_max, &CSC_GRID, tol, crate::ladder::leibniz_csc_route, &csc),
        route_vs("sec-li-difference", 0..=n_max, &SEC_GRID, tol, sec_derivative_via_li, &sec),
        route_vs("sec-eulerian", 0..=n_max, &SEC_GRID, tol, sec_derivative_eval, &sec),
        route_vs("sec-binomial", 0..=n_max, &SEC_GRID, tol, sec_derivative_binomial, &sec),
        double_angle_report(tol),
    ]
}

/// `cot x - tan x` and `2 cot 2x` from order-zero polylogarithms, against
/// each other and against the standard library.
pub fn double_angle_report(tol: f64) -> VerificationReport {
    let mut points = Vec::new();
    for &x in &DOUBLE_ANGLE_POINTS {
        match cot_double_angle_via_li(x) {
            Ok((lhs, rhs)) => {
                points.push(PointResult::compare(x, lhs, rhs).labelled("duplication"));
                points.push(PointResult::compare(x, lhs, 1.0 / x.tan() - x.tan()).labelled("cot-minus-tan"));
                points.push(PointResult::compare(x, rhs, 2.0 / (2.0 * x).tan()).labelled("twice-cot-double"));
            }
            Err(e) => points.push(PointResult::failed(x, &e)),
        }
    }
    VerificationReport::numeric("cot-double-angle", 0, tol, points)
}

/// coth/tanh polynomials, csch/sech evaluators and the polylog relations at
/// `+-e^x`. The relations start at order one.
pub fn hyperbolic_suite(n_max: usize, tol: f64) -> Vec<VerificationReport> {
    let g = &HYPERBOLIC_GRID;
    vec![
        VerificationReport::exact_sweep("coth-poly", 1..=n_max, |n| coth_derivative_poly(n) == derivative_poly_recurrence(Target::Coth, n)),
        VerificationReport::exact_sweep("tanh-poly", 1..=n_max, |n| tanh_derivative_poly(n) == derivative_poly_recurrence(Target::Tanh, n)),
        route_vs("csch-eulerian", 0..=n_max, g, tol, csch_derivative_eval, jet(FunctionId::Csch)),
        route_vs("sech-eulerian", 0..=n_max, g, tol, sech_derivative_eval, jet(FunctionId::Sech)),
        sides_vs("li-coth", 1..=n_max.max(1), g, tol, li_relation_coth),
        sides_vs("li-tanh", 1..=n_max.max(1), g, tol, li_relation_tanh),
        sides_vs("chi-csch", 1..=n_max.max(1), g, tol, chi_csch_relation),
        sides_vs("ti-sech", 1..=n_max.max(1), g, tol, ti_sech_relation),
    ]
}

fn inverse_report(id: &InverseIdentity, n_max: usize, tol: f64) -> VerificationReport {
    VerificationReport::merge(id.name, tol, (0..=n_max).map(|n| verify_identity(id, n, tol)).collect::<Vec<_>>())
}

/// The twelve inverse-function identities plus the `sin`/`cos` operand
/// checks. `name` restricts the run to one inverse identity.
pub fn inverse_suite(n_max: usize, tol: f64, name: Option<&str>) -> Vec<VerificationReport> {
    let ids: Vec<&InverseIdentity> = registry().iter().filter(|id| name.is_none_or(|w| w == id.name)).collect();
    let mut reports: Vec<VerificationReport> = std::thread::scope(|s| {
        let handles: Vec<_> = ids.iter().map(|id| s.spawn(move || inverse_report(id, n_max, tol))).collect();
        handles.into_iter().map(|h| h.join().expect("verification thread panicked")).collect()
    });
    if name.is_none() {
        for f in [FunctionId::Sin, FunctionId::Cos] {
            let name = format!("generic-{}", f.name());
            let per_order = (0..=n_max).map(|n| match verify_generic_suite(f, n, tol) {
                Ok(r) => r,
                Err(e) => VerificationReport::numeric(name.as_str(), n, tol, vec![PointResult::failed(f64::NAN, &e)]),
            });
            reports.push(VerificationReport::merge(name.as_str(), tol, per_order.collect::<Vec<_>>()));
        }
    }
    reports
}

/// Exact ladder relations, the duplication formula and the numeric sec
/// variant.
pub fn ladder_suite(n_max: usize, tol: f64) -> Vec<VerificationReport> {
    let sec_numeric = (0..=n_max).map(|n| {
        let points = LADDER_SEC_POINTS
            .iter()
            .flat_map(|&x| match sec_variant_sides(n, x) {
                Ok((l, r)) => PointResult::compare_complex(x, l, r).to_vec(),
                Err(e) => vec![PointResult::failed(x, &e)],
            })
            .collect();
        VerificationReport::numeric("ladder-sec-numeric", n, tol, points)
    });
    vec![
        VerificationReport::exact_sweep("ladder", 0..=n_max, verify_ladder_exact),
        VerificationReport::exact_sweep("chi-ladder", 0..=n_max, chi_ladder),
        VerificationReport::exact_sweep("ti-ladder", 0..=n_max, ti_ladder),
        VerificationReport::exact_sweep("ladder-sec-exact", 0..=n_max.min(NUMERIC_N_MAX), crate::ladder::sec_variant_exact),
        VerificationReport::exact_sweep("ladder-coefficient-sum", 0..=n_max, |n| ladder_coefficients(n).sum() == 1.into()),
        VerificationReport::exact_sweep("duplication", 0..=n_max, duplication_holds),
        VerificationReport::merge("ladder-sec-numeric", tol, sec_numeric.collect::<Vec<_>>()),
    ]
}

/// Runs `suite`; `tol` applies to its numeric checks.
pub fn run_suite(suite: Suite, n_max: usize, tol: Option<f64>, name: Option<&str>) -> Vec<VerificationReport> {
    let t = |s: Suite| tol.unwrap_or(s.default_tolerance());
    match suite {
        Suite::Trig => trig_suite(n_max, t(Suite::Trig)),
        Suite::Hyperbolic => hyperbolic_suite(n_max, t(Suite::Hyperbolic)),
        Suite::Inverse => inverse_suite(n_max, t(Suite::Inverse), name),
        Suite::Ladder => ladder_suite(n_max, t(Suite::Ladder)),
        Suite::All => [Suite::Trig, Suite::Hyperbolic, Suite::Inverse, Suite::Ladder]
            .into_iter()
            .flat_map(|s| run_suite(s, n_max, tol, name))
            .collect(),
    }
}

/// `true` when `x` is at least `margin` from every odd multiple of `pi/2`.
pub fn clear_of_sec_poles(x: f64, margin: f64) -> bool {
    let y = x - FRAC_PI_2;
    (y - std::f64::consts::PI * (y / std::f64::consts::PI).round()).abs() >= margin
}
