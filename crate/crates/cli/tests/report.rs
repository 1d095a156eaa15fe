use bilinear_cli::report::{from_json, to_csv, to_json, CheckReport, ParamsUsed, SuiteReport};
use bilinear_core::Cx;
use proptest::prelude::*;

fn finite() -> impl Strategy<Value = f64> {
    prop_oneof![-1e300f64..1e300, -1.0f64..1.0, Just(0.0), Just(f64::MAX)]
}

proptest! {
    #[test]
    fn json_round_trips(
        vals in prop::collection::vec((finite(), finite(), finite(), finite(), 0.0f64..1.0), 0..6),
        tol in prop::option::of(1e-300f64..1.0),
    ) {
        let checks: Vec<CheckReport> = vals
            .iter()
            .enumerate()
            .map(|(i, &(a, b, c, d, t))| CheckReport::compare(format!("c{i}[x={a}]"), Cx::new(a, b), Cx::new(c, d), t))
            .collect();
        let params = ParamsUsed { tol, ..ParamsUsed::default() };
        let r = SuiteReport::new("prop", params, checks, 7);
        prop_assert_eq!(from_json(&to_json(&r)).unwrap(), r.clone());
        prop_assert_eq!(to_csv(&r).lines().count(), r.checks.len() + 1);
    }

    #[test]
    fn pass_matches_definition(l in finite(), r in finite(), tol in 0.0f64..1.0) {
        let c = CheckReport::real("x", l, r, tol);
        prop_assert_eq!(c.pass, c.abs_err <= tol || c.rel_err <= tol);
    }
}

#[test]
fn failed_check_keeps_its_message() {
    let c = CheckReport::failed("broken", "domain: t = -1");
    let r = SuiteReport::new("s", ParamsUsed::default(), vec![c], 0);
    let back = from_json(&to_json(&r)).unwrap();
    assert!(!back.pass);
    assert_eq!(back.checks[0].error.as_deref(), Some("domain: t = -1"));
}
