use std::process::{Command, Output};

use polypseudolog::cli::ClosedFormJson;
use polypseudolog::polylog::{chi_neg, li_neg, ti_neg};
use polypseudolog::report::VerificationReport;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polypseudolog")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn closed_form_examples() {
    let o = run(&["chi", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "(z + 6z^3 + z^5)/(1-z^2)^3");
    assert_eq!(stdout(&run(&["li", "0"])).trim(), "z/(1-z)");
    assert_eq!(stdout(&run(&["ti", "1"])).trim(), "(z - z^3)/(1+z^2)^2");
    assert_eq!(stdout(&run(&["cot-poly", "1"])).trim(), "-1 - u^2");
    assert_eq!(stdout(&run(&["chi", "0", "--format", "latex"])).trim(), "\\frac{z}{1-z^2}");
}

#[test]
fn json_round_trips() {
    for n in [0, 1, 5, 12] {
        for (kind, f) in [("li", li_neg(n)), ("chi", chi_neg(n)), ("ti", ti_neg(n))] {
            let o = run(&[kind, &n.to_string(), "--format", "json"]);
            let parsed: ClosedFormJson = serde_json::from_slice(&o.stdout).unwrap();
            assert_eq!((parsed.kind.as_str(), parsed.n), (kind, n));
            assert_eq!(parsed.parse().unwrap(), *f);
        }
    }
}

#[test]
fn eval_examples() {
    let o = run(&["eval", "li", "1", "0.5"]);
    assert_eq!((o.status.code(), stdout(&o).trim()), (Some(0), "2.0"));
    let pole = run(&["eval", "li", "0", "1"]);
    assert_eq!(pole.status.code(), Some(3));
    assert!(pole.stdout.is_empty() && !pole.stderr.is_empty());
    assert_eq!(run(&["eval", "chi", "1", "0.5\u{2212}0.5i"]).status.code(), Some(0));
    assert_eq!(run(&["eval", "chi", "1", "abc"]).status.code(), Some(2));
}

#[test]
fn usage_errors() {
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
    assert_eq!(run(&["li", "65"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "trig", "--n-max", "11"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "inverse", "--name", "arcfoo"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "ladder", "--name", "arctan"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "trig", "--tolerance", "-1"]).status.code(), Some(2));
}

#[test]
fn failing_verification_exits_one() {
    let o = run(&["verify", "trig", "--n-max", "2", "--tolerance", "1e-30"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
}

#[test]
fn verify_ladder_passes() {
    let o = run(&["verify", "ladder", "--n-max", "10"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn verify_inverse_reports_each_identity() {
    let o = run(&["verify", "inverse", "--n-max", "6", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let reports: Vec<VerificationReport> = serde_json::from_slice(&o.stdout).unwrap();
    let named: Vec<_> = reports.iter().filter(|r| r.identity.starts_with("arc")).collect();
    assert_eq!(named.len(), 12);
    assert!(reports.iter().all(|r| r.pass && r.n == 6));
    let one = run(&["verify", "inverse", "--name", "arcsech", "--format", "json"]);
    let reports: Vec<VerificationReport> = serde_json::from_slice(&one.stdout).unwrap();
    assert_eq!(reports.len(), 1);
}

#[test]
fn verify_all_json_is_deterministic() {
    let a = run(&["verify", "all", "--n-max", "6", "--format", "json"]);
    assert_eq!(a.status.code(), Some(0));
    let reports: Vec<VerificationReport> = serde_json::from_slice(&a.stdout).unwrap();
    assert!(reports.len() > 30);
    let b = run(&["verify", "all", "--n-max", "6", "--format", "json", "--seed", "7"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn ladder_output() {
    let o = run(&["ladder", "--n", "1"]);
    assert_eq!(stdout(&o).trim(), "Li_{-1}(z) - Li_{-1}(-z) = (2/z) [-Li_{0}(z^2) + 2 Li_{-1}(z^2)]");
    let j: serde_json::Value = serde_json::from_slice(&run(&["ladder", "--n", "64", "--format", "json"]).stdout).unwrap();
    assert_eq!(j["coefficients"].as_array().unwrap().len(), 65);
    let z = run(&["ladder", "--n", "6", "--arrangement", "z-over-two"]);
    assert!(stdout(&z).starts_with("(z/2) ["));
}
