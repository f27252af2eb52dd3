//! `chi_{-n}` and `Ti_{-n}` at algebraic arguments as `(a(x) d/dx)^(n+1)`
//! applied to the twelve inverse trigonometric and hyperbolic functions, and
//! `Li_{-n}(f/(1+f))` for a generic operand `f`.

use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::algebra::{Poly, RatFn};
use crate::combinatorics::{factorial, stirling2_row};
use crate::error::{Error, Result};
use crate::jet::{apply_operator_power, rational_coef, FunctionId, Jet, JetError};
use crate::polylog::{chi_neg_eval, li_neg_eval, ti_neg_eval};
use crate::report::{PointResult, VerificationReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Chi,
    Ti,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::Chi => "chi",
            Side::Ti => "Ti",
        }
    }
}

/// `chi_{-n}(g(x)) = sign (a(x) d/dx)^(n + power_offset) target(x)` (or the
/// same with `Ti`).
#[derive(Clone, Copy, Debug)]
pub struct InverseIdentity {
    pub name: &'static str,
    pub side: Side,
    /// Printable form of `g`.
    pub argument: &'static str,
    pub argument_fn: fn(f64) -> f64,
    /// Printable form of `a`.
    pub operator: &'static str,
    operator_num: &'static [i64],
    operator_den: &'static [i64],
    pub target: FunctionId,
    pub sign: f64,
    /// The operator is applied `n + power_offset` times.
    pub power_offset: usize,
    /// Open intervals making up the domain.
    pub domain: &'static [(f64, f64)],
    pub sample_points: &'static [f64],
}

const INF: f64 = f64::INFINITY;
const REAL_LINE: &[(f64, f64)] = &[(-INF, INF)];
const PUNCTURED_AT_ONES: &[(f64, f64)] = &[(-INF, -1.0), (-1.0, 1.0), (1.0, INF)];
const PUNCTURED_AT_ZERO: &[(f64, f64)] = &[(-INF, 0.0), (0.0, INF)];
const OUTSIDE_UNIT: &[(f64, f64)] = &[(-INF, -1.0), (1.0, INF)];

fn identity(x: f64) -> f64 {
    x
}

fn reciprocal(x: f64) -> f64 {
    1.0 / x
}

const REGISTRY: [InverseIdentity; 12] = [
    InverseIdentity {
        name: "arctanh",
        side: Side::Chi,
        argument: "x",
        argument_fn: identity,
        operator: "x",
        operator_num: &[0, 1],
        operator_den: &[1],
        target: FunctionId::Arctanh,
        sign: 1.0,
        power_offset: 1,
        domain: PUNCTURED_AT_ONES,
        sample_points: &[-2.5, -0.6, 0.3, 0.5, 0.8, 1.7],
    },
    InverseIdentity {
        name: "arccoth",
        side: Side::Chi,
        argument: "1/x",
        argument_fn: reciprocal,
        operator: "-x",
        operator_num: &[0, -1],
        operator_den: &[1],
        target: FunctionId::Arccoth,
        sign: 1.0,
        power_offset: 1,
        domain: PUNCTURED_AT_ONES,
        sample_points: &[-3.0, -1.6, -0.5, 0.4, 1.5, 2.5],
    },
    InverseIdentity {
        name: "arcsinh",
        side: Side::Chi,
        argument: "x/sqrt(1 + x^2)",
        argument_fn: |x| x / (1.0 + x * x).sqrt(),
        operator: "x + x^3",
        operator_num: &[0, 1, 0, 1],
        operator_den: &[1],
        target: FunctionId::Arcsinh,
        sign: 1.0,
        power_offset: 1,
        domain: REAL_LINE,
        sample_points: &[-2.0, -0.7, 0.3, 0.9, 1.8],
    },
    InverseIdentity {
        name: "arccsch",
        side: Side::Chi,
        argument: "1/(x sqrt(1 + x^-2))",
        argument_fn: |x| 1.0 / (x * (1.0 + 1.0 / (x * x)).sqrt()),
        operator: "-(x + 1/x)",
        operator_num: &[-1, 0, -1],
        operator_den: &[0, 1],
        target: FunctionId::Arccsch,
        sign: 1.0,
        power_offset: 1,
        domain: PUNCTURED_AT_ZERO,
        sample_points: &[-1.5, -0.6, 0.4, 1.0, 2.2],
    },
    InverseIdentity {
        name: "arccosh",
        side: Side::Chi,
        argument: "sqrt(x^2 - 1)/x",
        argument_fn: |x| (x * x - 1.0).sqrt() / x,
        operator: "x(x^2 - 1)",
        operator_num: &[0, -1, 0, 1],
        operator_den: &[1],
        target: FunctionId::Arccosh,
        sign: 1.0,
        power_offset: 1,
        domain: &[(1.0, INF)],
        sample_points: &[1.1, 1.5, 2.0, 2.5, 3.0],
    },
    InverseIdentity {
        name: "arcsech",
        side: Side::Chi,
        argument: "sqrt(1 - x^2)",
        argument_fn: |x| (1.0 - x * x).sqrt(),
        operator: "x - 1/x",
        operator_num: &[-1, 0, 1],
        operator_den: &[0, 1],
        target: FunctionId::Arcsech,
        sign: 1.0,
        power_offset: 1,
        domain: &[(0.0, 1.0)],
        // reciprocals of the arccosh points
        sample_points: &[1.0 / 3.0, 1.0 / 2.5, 1.0 / 2.0, 1.0 / 1.5, 1.0 / 1.1],
    },
    InverseIdentity {
        name: "arctan",
        side: Side::Ti,
        argument: "x",
        argument_fn: identity,
        operator: "x",
        operator_num: &[0, 1],
        operator_den: &[1],
        target: FunctionId::Arctan,
        sign: 1.0,
        power_offset: 1,
        domain: REAL_LINE,
        sample_points: &[-1.5, -0.5, 0.4, 1.0, 2.0],
    },
    InverseIdentity {
        name: "arccot",
        side: Side::Ti,
        argument: "x",
        argument_fn: identity,
        operator: "x",
        operator_num: &[0, 1],
        operator_den: &[1],
        target: FunctionId::Arccot,
        sign: -1.0,
        power_offset: 1,
        domain: REAL_LINE,
        sample_points: &[-1.5, -0.5, 0.4, 1.0, 2.0],
    },
    InverseIdentity {
        name: "arcsin",
        side: Side::Ti,
        argument: "x/sqrt(1 - x^2)",
        argument_fn: |x| x / (1.0 - x * x).sqrt(),
        operator: "x - x^3",
        operator_num: &[0, 1, 0, -1],
        operator_den: &[1],
        target: FunctionId::Arcsin,
        sign: 1.0,
        power_offset: 1,
        domain: &[(-1.0, 1.0)],
        sample_points: &[-0.8, -0.3, 0.2, 0.5, 0.9],
    },
    InverseIdentity {
        name: "arccos",
        side: Side::Ti,
        argument: "sqrt(1 - x^2)/x",
        argument_fn: |x| (1.0 - x * x).sqrt() / x,
        operator: "x^3 - x",
        operator_num: &[0, -1, 0, 1],
        operator_den: &[1],
        target: FunctionId::Arccos,
        sign: 1.0,
        power_offset: 1,
        domain: &[(-1.0, 0.0), (0.0, 1.0)],
        sample_points: &[-0.7, -0.3, 0.25, 0.6, 0.9],
    },
    InverseIdentity {
        name: "arccsc",
        side: Side::Ti,
        argument: "1/(x sqrt(1 - x^-2))",
        argument_fn: |x| 1.0 / (x * (1.0 - 1.0 / (x * x)).sqrt()),
        operator: "1/x - x",
        operator_num: &[1, 0, -1],
        operator_den: &[0, 1],
        target: FunctionId::Arccsc,
        sign: 1.0,
        power_offset: 1,
        domain: OUTSIDE_UNIT,
        sample_points: &[-3.0, -1.5, 1.2, 2.0, 4.0],
    },
    InverseIdentity {
        name: "arcsec",
        side: Side::Ti,
        argument: "x sqrt(1 - x^-2)",
        argument_fn: |x| x * (1.0 - 1.0 / (x * x)).sqrt(),
        operator: "x - 1/x",
        operator_num: &[-1, 0, 1],
        operator_den: &[0, 1],
        target: FunctionId::Arcsec,
        sign: 1.0,
        power_offset: 1,
        domain: OUTSIDE_UNIT,
        sample_points: &[-2.5, -1.3, 1.1, 1.8, 3.0],
    },
];

pub fn registry() -> &'static [InverseIdentity] {
    &REGISTRY
}

pub fn find(name: &str) -> Option<&'static InverseIdentity> {
    REGISTRY.iter().find(|id| id.name == name)
}

impl InverseIdentity {
    /// `a(x)` as an exact rational function of `x`.
    pub fn operator_coef(&self) -> RatFn {
        RatFn::new(Poly::from_ints(self.operator_num, 'x'), Poly::from_ints(self.operator_den, 'x'))
            .expect("registry operators have nonzero denominators")
    }

    pub fn in_domain(&self, x: f64) -> bool {
        self.domain.iter().any(|&(lo, hi)| lo < x && x < hi)
    }

    /// `chi_{-n}(g(x))` or `Ti_{-n}(g(x))` from the closed form.
    pub fn lhs(&self, n: usize, x: f64) -> Result<f64> {
        if !self.in_domain(x) {
            return Err(Error::Domain(format!("{} at x = {x}", self.name)));
        }
        let g = Complex64::new((self.argument_fn)(x), 0.0);
        let v = match self.side {
            Side::Chi => chi_neg_eval(n, g)?,
            Side::Ti => ti_neg_eval(n, g)?,
        };
        Ok(v.re)
    }

    /// `sign (a d/dx)^(n + power_offset) target` at `x` from the jet oracle.
    pub fn rhs(&self, n: usize, x: f64) -> Result<f64> {
        if !self.in_domain(x) {
            return Err(Error::Domain(format!("{} at x = {x}", self.name)));
        }
        let a = self.operator_coef();
        let v = apply_operator_power(rational_coef(&a), self.target, n + self.power_offset, x)?;
        Ok(self.sign * v)
    }

    /// Human-readable statement, e.g.
    /// `chi_{-n}(x/sqrt(1 + x^2)) = ((x + x^3) d/dx)^(n+1) arcsinh x`.
    pub fn statement(&self) -> String {
        let sign = if self.sign < 0.0 { "-" } else { "" };
        let op = if self.operator.contains(' ') || self.operator.starts_with('-') {
            format!("({})", self.operator)
        } else {
            self.operator.to_string()
        };
        format!(
            "{}_{{-n}}({}) = {sign}({op} d/dx)^(n+{}) {} x",
            self.side.name(),
            self.argument,
            self.power_offset,
            self.target.name()
        )
    }
}

/// Compares both sides at every sample point.
pub fn verify_identity(id: &InverseIdentity, n: usize, tolerance: f64) -> VerificationReport {
    let points = id
        .sample_points
        .iter()
        .map(|&x| PointResult::from_sides(x, id.lhs(n, x).and_then(|l| Ok((l, id.rhs(n, x)?)))))
        .collect();
    VerificationReport::numeric(id.name, n, tolerance, points)
}

/// Sample points for the generic-operand check with `sin`.
pub const SIN_OPERAND_POINTS: [f64; 5] = [-0.6, 0.4, std::f64::consts::FRAC_PI_6, 1.0, 2.5];
/// Sample points for the generic-operand check with `cos`.
pub const COS_OPERAND_POINTS: [f64; 5] = [0.5, 1.2, std::f64::consts::FRAC_PI_3, 2.0, 2.6];

fn operand_value(f: FunctionId, x: f64) -> Result<f64> {
    match f {
        FunctionId::Sin => Ok(x.sin()),
        FunctionId::Cos => Ok(x.cos()),
        other => Err(Error::Domain(format!("generic operand must be sin or cos, got {}", other.name()))),
    }
}

/// `sum_{k=0..n} k! {n+1 brace k+1} f^(k+1)`.
pub fn stirling_operand_sum(n: usize, f: f64) -> f64 {
    let row = stirling2_row(n + 1);
    (0..=n)
        .map(|k| (factorial(k as u64) * &row[k + 1]).to_f64().expect("finite") * f.powi(k as i32 + 1))
        .sum()
}

/// `f (1 + f) / f'` as a jet, for `f` in `{sin, cos}`.
fn operand_operator(f: FunctionId) -> impl Fn(&Jet) -> Result<Jet, JetError> {
    move |x: &Jet| {
        let (s, c) = x.sin_cos();
        match f {
            FunctionId::Sin => s.mul(&s.add_scalar(1.0)).div(&c),
            _ => Ok(c.mul(&c.add_scalar(1.0)).div(&s)?.scale(-1.0)),
        }
    }
}

/// `Li_{-n}(f/(1+f))` against the Stirling sum in `f`, and against
/// `(a d/dx)^n f` with `a = f(1+f)/f'` from the jet oracle.
pub fn verify_generic_operand(f: FunctionId, n: usize, x: f64, tolerance: f64) -> Result<VerificationReport> {
    let fx = operand_value(f, x)?;
    if (1.0 + fx).abs() < crate::jet::SINGULARITY_GUARD {
        return Err(Error::Singularity(x));
    }
    let lhs = li_neg_eval(n, Complex64::new(fx / (1.0 + fx), 0.0)).map(|z| z.re);
    let closed = PointResult::from_sides(x, lhs.clone().map(|l| (l, stirling_operand_sum(n, fx)))).labelled("closed-form");
    let operator = apply_operator_power(operand_operator(f), f, n, x).map_err(Error::from);
    let op = PointResult::from_sides(x, lhs.and_then(|l| Ok((l, operator?)))).labelled("operator");
    Ok(VerificationReport::numeric(format!("generic-{}", f.name()), n, tolerance, vec![closed, op]))
}

/// [`verify_generic_operand`] over the fixed points for `f`, merged.
pub fn verify_generic_suite(f: FunctionId, n: usize, tolerance: f64) -> Result<VerificationReport> {
    let xs: &[f64] = match f {
        FunctionId::Sin => &SIN_OPERAND_POINTS,
        _ => &COS_OPERAND_POINTS,
    };
    let mut points = Vec::new();
    for &x in xs {
        points.extend(verify_generic_operand(f, n, x, tolerance)?.points);
    }
    Ok(VerificationReport::numeric(format!("generic-{}", f.name()), n, tolerance, points))
}
