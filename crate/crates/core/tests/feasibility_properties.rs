use f5_core::feasibility::{
    aes_parameter_check, degree_threshold, gamma_scan, gamma_system, half_max_terms, weakened_threshold,
    wheel_scan, wheel_system, ExtendabilityParams, ScanConfig,
};
use f5_core::algebra::ExactScalar;
use f5_core::par::Execution;

#[test]
fn weakened_threshold_makes_scans_feasible() {
    let cfg = ScanConfig::new(30);
    let weak = weakened_threshold();
    assert!(wheel_scan(&weak, &cfg).unwrap().strictly_feasible(&wheel_system(&weak)));
    for d in 2..=5 {
        let sys = gamma_system(d, &weak).unwrap();
        assert!(gamma_scan(d, &weak, &cfg).unwrap().strictly_feasible(&sys), "d = {d}");
    }
}

#[test]
fn exact_and_numeric_verdicts_agree_at_threshold() {
    let cfg = ScanConfig::new(30);
    let t = degree_threshold();
    let wheel = wheel_scan(&t, &cfg).unwrap();
    assert!(wheel.no_feasible_point());
    assert!(!wheel.strictly_feasible(&wheel_system(&t)));
    for d in 2..=6 {
        let scan = gamma_scan(d, &t, &cfg).unwrap();
        assert!(scan.no_feasible_point(), "d = {d}");
        // the reported slack is the exact min over constraints at the point
        let sys = gamma_system(d, &t).unwrap();
        assert!(sys.in_closed_domain(&scan.best_point));
        assert_eq!(sys.min_slack(&scan.best_point).unwrap(), scan.best_slack);
    }
}

#[test]
fn scans_are_deterministic_across_execution_modes() {
    let t = degree_threshold();
    let seq = ScanConfig::new(24).with_execution(Execution::Sequential);
    let par = ScanConfig::new(24).with_execution(Execution::Parallel);
    let a = wheel_scan(&t, &seq).unwrap();
    let b = wheel_scan(&t, &par).unwrap();
    assert_eq!((a.best_point, a.best_slack, a.coarse_points), (b.best_point, b.best_slack, b.coarse_points));
    let a = gamma_scan(4, &t, &seq.with_seed(7)).unwrap();
    let b = gamma_scan(4, &t, &par.with_seed(7)).unwrap();
    assert_eq!((a.best_point, a.best_slack), (b.best_point, b.best_slack));
}

#[test]
fn stability_parameters_regression() {
    let p = ExtendabilityParams::stability_choice();
    assert!(aes_parameter_check(&p).pass);
    let quarter = p.beta.square() / ExactScalar::from_int(4);
    assert_eq!(quarter, ExactScalar::from_ratio(4, 45));
    let (m1, m2) = half_max_terms(&p);
    let one = ExactScalar::one();
    assert_eq!(m2, &quarter + &((&one - &p.beta) * &p.gamma));
    // the first term is the larger one, and half of it is still below δ
    assert!(m1 > m2);
    assert!(&m1 / &ExactScalar::from_int(2) < p.delta);
}
