use f5_core::par::Execution;
use f5_core::search::{naive_optimum, run_search, Family, Mode, SearchSpec};
use proptest::prelude::*;

fn spec(max_n: usize) -> impl Strategy<Value = SearchSpec> {
    (3..=max_n, any::<(bool, bool, bool)>(), any::<bool>(), any::<bool>()).prop_map(
        |(n, (f5, k4_minus, k4_shadow), degree_mode, non3)| {
            let family = Family { f5, k4_minus, k4_shadow };
            let mode = if degree_mode { Mode::MaxMinDegree } else { Mode::MaxEdges };
            let s = SearchSpec::new(n, family, mode);
            if non3 { s.non_3partite() } else { s }
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn search_agrees_with_naive_scan(s in spec(5)) {
        let r = run_search(&s).unwrap();
        prop_assert!(r.exhaustive);
        prop_assert!(r.validate(&s));
        prop_assert_eq!(r.optimum, naive_optimum(&s).unwrap());
    }

    #[test]
    fn reduction_and_scheduling_do_not_change_results(s in spec(6)) {
        let plain = run_search(&s).unwrap();
        let reduced = run_search(&s.clone().reduced(true)).unwrap();
        prop_assert_eq!(plain.optimum, reduced.optimum);
        prop_assert!(reduced.validate(&s));
        let seq = run_search(&s.clone().with_execution(Execution::Sequential)).unwrap();
        prop_assert_eq!(seq, plain);
    }
}
