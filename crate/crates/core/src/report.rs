//! Verification reports shared by every identity suite.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::Error;

/// `|a - b| / max(|a|, |b|)`, zero when `a == b`. NaN propagates.
pub fn relative_error(a: f64, b: f64) -> f64 {
    if a == b {
        return 0.0;
    }
    (a - b).abs() / a.abs().max(b.abs())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Numeric,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PointResult {
    /// Order at which this point was evaluated.
    #[serde(default)]
    pub n: usize,
    pub x: f64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub label: Option<String>,
    pub lhs: Option<f64>,
    pub rhs: Option<f64>,
    pub rel_err: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error: Option<String>,
}

impl PointResult {
    pub fn compare(x: f64, lhs: f64, rhs: f64) -> Self {
        Self { n: 0, x, label: None, lhs: Some(lhs), rhs: Some(rhs), rel_err: Some(relative_error(lhs, rhs)), error: None }
    }

    /// Two points labelled `re` and `im`, both carrying the complex relative
    /// error `|l - r| / max(|l|, |r|)`.
    pub fn compare_complex(x: f64, l: Complex64, r: Complex64) -> [Self; 2] {
        let err = if l == r { 0.0 } else { (l - r).norm() / l.norm().max(r.norm()) };
        let part = |lhs: f64, rhs: f64, label: &str| Self {
            rel_err: Some(err),
            ..Self::compare(x, lhs, rhs).labelled(label)
        };
        [part(l.re, r.re, "re"), part(l.im, r.im, "im")]
    }

    /// A point whose sides could not both be evaluated.
    pub fn failed(x: f64, err: &Error) -> Self {
        Self { n: 0, x, label: None, lhs: None, rhs: None, rel_err: None, error: Some(err.to_string()) }
    }

    pub fn from_sides(x: f64, sides: Result<(f64, f64), Error>) -> Self {
        match sides {
            Ok((lhs, rhs)) => Self::compare(x, lhs, rhs),
            Err(e) => Self::failed(x, &e),
        }
    }

    pub fn labelled(mut self, label: &str) -> Self {
        self.label = Some(label.to_string());
        self
    }

    fn passes(&self, tolerance: f64) -> bool {
        self.error.is_none() && self.rel_err.is_some_and(|e| e <= tolerance)
    }
}

/// Outcome of checking one identity.
///
/// `n` is the highest order covered; numeric points carry their own order.
/// `pass` holds iff every point evaluated and every relative error is within
/// `tolerance`. Exact reports carry no points, tolerance zero, and list the
/// orders at which equality failed.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub identity: String,
    pub n: usize,
    pub mode: Mode,
    pub tolerance: f64,
    pub points: Vec<PointResult>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub failed_orders: Vec<usize>,
    pub pass: bool,
}

impl VerificationReport {
    /// Report at a single order `n`; every point is tagged with `n`.
    pub fn numeric(identity: impl Into<String>, n: usize, tolerance: f64, mut points: Vec<PointResult>) -> Self {
        for p in &mut points {
            p.n = n;
        }
        let pass = !points.is_empty() && points.iter().all(|p| p.passes(tolerance));
        Self { identity: identity.into(), n, mode: Mode::Numeric, tolerance, points, failed_orders: Vec::new(), pass }
    }

    pub fn exact(identity: impl Into<String>, n: usize, pass: bool) -> Self {
        let failed_orders = if pass { Vec::new() } else { vec![n] };
        Self { identity: identity.into(), n, mode: Mode::Exact, tolerance: 0.0, points: Vec::new(), failed_orders, pass }
    }

    /// Exact check over every order in `orders`.
    pub fn exact_sweep(identity: impl Into<String>, orders: impl IntoIterator<Item = usize>, check: impl Fn(usize) -> bool) -> Self {
        let mut n_max = 0;
        let mut failed_orders = Vec::new();
        for n in orders {
            n_max = n_max.max(n);
            if !check(n) {
                failed_orders.push(n);
            }
        }
        let pass = failed_orders.is_empty();
        Self { identity: identity.into(), n: n_max, mode: Mode::Exact, tolerance: 0.0, points: Vec::new(), failed_orders, pass }
    }

    /// Concatenates single-order numeric reports for one identity.
    pub fn merge(identity: impl Into<String>, tolerance: f64, reports: impl IntoIterator<Item = VerificationReport>) -> Self {
        let mut points = Vec::new();
        let mut n = 0;
        let mut pass = true;
        for r in reports {
            n = n.max(r.n);
            pass &= r.pass;
            points.extend(r.points);
        }
        let pass = pass && !points.is_empty();
        Self { identity: identity.into(), n, mode: Mode::Numeric, tolerance, points, failed_orders: Vec::new(), pass }
    }

    pub fn max_error(&self) -> Option<f64> {
        self.points.iter().filter_map(|p| p.rel_err).fold(None, |m, e| Some(m.map_or(e, |m: f64| m.max(e))))
    }

    /// One-line summary, e.g. `arcsinh n<=6 numeric pass max_rel_err=1.2e-15 tol=1e-7`.
    pub fn summary(&self) -> String {
        let verdict = if self.pass { "pass" } else { "FAIL" };
        match (self.mode, self.max_error()) {
            (Mode::Numeric, Some(e)) => {
                format!("{} n<={} numeric {verdict} max_rel_err={e:.1e} tol={:.0e}", self.identity, self.n, self.tolerance)
            }
            (Mode::Numeric, None) => format!("{} n<={} numeric {verdict}", self.identity, self.n),
            (Mode::Exact, _) if self.failed_orders.is_empty() => format!("{} n<={} exact {verdict}", self.identity, self.n),
            (Mode::Exact, _) => format!("{} n<={} exact {verdict} at n={:?}", self.identity, self.n, self.failed_orders),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relative_error_values() {
        assert_eq!(relative_error(2.0, 2.0), 0.0);
        assert_eq!(relative_error(0.0, 0.0), 0.0);
        assert!((relative_error(100.0, 101.0) - 1.0 / 101.0).abs() < 1e-15);
        assert!((relative_error(1e-3, 2e-3) - 0.5).abs() < 1e-15);
        assert!(relative_error(1.0, f64::NAN).is_nan());
    }

    #[test]
    fn pass_flag() {
        let ok = VerificationReport::numeric("t", 1, 1e-6, vec![PointResult::compare(0.5, 1.0, 1.0 + 1e-9)]);
        assert!(ok.pass);
        let bad = VerificationReport::numeric("t", 1, 1e-12, vec![PointResult::compare(0.5, 1.0, 1.0 + 1e-9)]);
        assert!(!bad.pass);
        let err = VerificationReport::numeric("t", 1, 1.0, vec![PointResult::failed(0.0, &Error::Singularity(0.0))]);
        assert!(!err.pass);
        assert!(!VerificationReport::numeric("t", 1, 1.0, vec![]).pass);
    }

    #[test]
    fn merge_and_sweep() {
        let a = VerificationReport::numeric("t", 1, 1e-6, vec![PointResult::compare(0.5, 1.0, 1.0)]);
        let b = VerificationReport::numeric("t", 2, 1e-6, vec![PointResult::compare(0.5, 1.0, 2.0)]);
        let m = VerificationReport::merge("t", 1e-6, [a, b]);
        assert_eq!((m.n, m.points.len(), m.pass), (2, 2, false));
        assert_eq!(m.points[1].n, 2);
        let s = VerificationReport::exact_sweep("e", 0..5, |n| n != 3);
        assert_eq!(s.failed_orders, vec![3]);
        assert_eq!(s.summary(), "e n<=4 exact FAIL at n=[3]");
    }

    #[test]
    fn json_shape() {
        let r = VerificationReport::numeric("arctan", 0, 1e-7, vec![PointResult::compare(1.0, 0.5, 0.5)]);
        let v: serde_json::Value = serde_json::to_value(&r).unwrap();
        assert_eq!(v["identity"], "arctan");
        assert_eq!(v["mode"], "numeric");
        assert_eq!(v["points"][0]["rel_err"], 0.0);
        assert!(v["points"][0].get("error").is_none());
        let back: VerificationReport = serde_json::from_value(v).unwrap();
        assert_eq!(back, r);
    }
}
