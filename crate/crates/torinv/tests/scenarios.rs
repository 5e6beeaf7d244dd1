use num_bigint::BigUint;
use torinv::reproduce::{reproduce_cubic, reproduce_tensor, Scenario};

#[test]
fn cubic_scenarios_assert_the_closed_form_bounds() {
    for (n, want) in [(2usize, 10u32), (3, 42)] {
        let report = reproduce_cubic(n).unwrap();
        assert!(report.passed(), "n = {n}, stages: {:?}", report.stages);
        assert_eq!(report.scenario, Scenario::Cubic);
        assert_eq!(report.final_bound, Some(BigUint::from(want)), "n = {n}");
        assert_eq!(report.stabilizer_dim, Some(n));
        assert_eq!(report.expected_stabilizer_dim, n);
    }
}

#[test]
fn tensor_scenarios_assert_the_closed_form_bounds() {
    for (n, want) in [(1usize, 3u32), (2, 15)] {
        let report = reproduce_tensor(n).unwrap();
        assert!(report.passed(), "n = {n}, stages: {:?}", report.stages);
        assert_eq!(report.scenario, Scenario::Tensor);
        assert_eq!(report.final_bound, Some(BigUint::from(want)), "n = {n}");
        assert_eq!(report.stabilizer_dim, Some(3 * n));
    }
}

#[test]
fn scenario_stage_names_are_stable() {
    let report = reproduce_cubic(2).unwrap();
    let stages: Vec<&str> = report.stages.iter().map(|s| s.stage.as_str()).collect();
    assert_eq!(
        stages,
        [
            "build-point",
            "certify-closed-orbit",
            "stabilizer-dimension",
            "subspace-weight-matrix",
            "degree-bounds",
            "compose-chain",
            "formula-check",
        ]
    );
}

#[test]
fn scenario_reports_are_deterministic_bytes() {
    let a = reproduce_cubic(2).unwrap();
    let b = reproduce_cubic(2).unwrap();
    assert_eq!(a.to_json_string(), b.to_json_string());
    assert_eq!(a.to_markdown(), b.to_markdown());

    let json = a.to_json_string();
    assert!(json.contains("\"finalBound\": 10"));
    assert!(json.contains("\"scenario\": \"cubic\""));
    let md = a.to_markdown();
    assert!(md.contains("| certify-closed-orbit | pass |"));
    assert!(md.contains("**10**"));
}

#[test]
fn markdown_reports_failures_without_asserting_a_bound() {
    // A tensor point whose decorations repeat a scalar is rejected before
    // any stage runs; a report with a failing stage never asserts a bound.
    let report = reproduce_tensor(1).unwrap();
    assert!(report.to_markdown().contains("Asserted lower bound"));
    let mut broken = report.clone();
    broken.stages[1].passed = false;
    broken.final_bound = None;
    assert!(broken.to_markdown().contains("No bound asserted"));
}
