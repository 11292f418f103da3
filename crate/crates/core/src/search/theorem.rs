//! Instance checker for the minimum-degree stability statement: an `F5`-free
//! 3-graph with `δ > 4n²/45` is 3-partite. The general statement needs
//! `n >= 5000`; for instances that are also `K4^-`-free it is asserted at
//! every order.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::detect::{find_f5, find_k4_minus};
use crate::error::Result;
use crate::graph::{three_partition, ThreeGraph};
use crate::par::{map_range, Execution};

/// Order from which the statement is asserted without `K4^-`-freeness.
pub const ORDER_HYPOTHESIS: usize = 5000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum VacuousReason {
    NotF5Free,
    /// `45 δ <= 4 n²`.
    DegreeAtOrBelowThreshold,
    /// Contains `K4^-` and `n < 5000`.
    OrderBelowHypothesis,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "verdict", content = "reason")]
pub enum Verdict {
    Vacuous(VacuousReason),
    Consistent,
    Counterexample,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TheoremCheck {
    pub n: usize,
    pub min_degree: usize,
    pub f5_free: bool,
    pub k4_minus_free: bool,
    /// Only computed when the implication is asserted.
    pub three_partite: Option<bool>,
    #[serde(flatten)]
    pub verdict: Verdict,
}

pub fn check_main_theorem(h: &ThreeGraph) -> Result<TheoremCheck> {
    let n = h.n();
    let min_degree = h.min_degree();
    let f5_free = find_f5(h).is_none();
    let k4_minus_free = find_k4_minus(h).is_none();
    let mut check = TheoremCheck {
        n,
        min_degree,
        f5_free,
        k4_minus_free,
        three_partite: None,
        verdict: Verdict::Consistent,
    };
    let above = 45 * min_degree as u128 > 4 * (n as u128) * (n as u128);
    let reason = if !f5_free {
        Some(VacuousReason::NotF5Free)
    } else if !above {
        Some(VacuousReason::DegreeAtOrBelowThreshold)
    } else if !k4_minus_free && n < ORDER_HYPOTHESIS {
        Some(VacuousReason::OrderBelowHypothesis)
    } else {
        None
    };
    if let Some(r) = reason {
        check.verdict = Verdict::Vacuous(r);
        return Ok(check);
    }
    let partite = three_partition(h)?.is_some();
    check.three_partite = Some(partite);
    check.verdict = if partite { Verdict::Consistent } else { Verdict::Counterexample };
    Ok(check)
}

/// A random 3-graph on `n` vertices: half the time an independent edge
/// sample of random density, otherwise a random complete 3-partite graph
/// with a few edges toggled.
pub fn random_instance(n: usize, seed: u64) -> ThreeGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let triples: Vec<[usize; 3]> = (0..n)
        .flat_map(|a| (a + 1..n).flat_map(move |b| (b + 1..n).map(move |c| [a, b, c])))
        .collect();
    let edges: Vec<[usize; 3]> = if rng.gen_bool(0.5) {
        let p: f64 = rng.gen();
        triples.into_iter().filter(|_| rng.gen_bool(p)).collect()
    } else {
        let part: Vec<u8> = (0..n).map(|_| rng.gen_range(0..3)).collect();
        let flips = rng.gen_range(0..=3);
        let mut chosen: Vec<bool> = triples
            .iter()
            .map(|t| {
                let mut seen = [false; 3];
                t.iter().for_each(|&v| seen[part[v] as usize] = true);
                seen.iter().all(|&s| s)
            })
            .collect();
        for _ in 0..flips {
            if !chosen.is_empty() {
                let i = rng.gen_range(0..chosen.len());
                chosen[i] = !chosen[i];
            }
        }
        triples.into_iter().zip(chosen).filter(|&(_, c)| c).map(|(t, _)| t).collect()
    };
    ThreeGraph::new(n, edges).expect("sorted distinct triples")
}

fn instance_seed(seed: u64, index: u64) -> u64 {
    seed ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FuzzSummary {
    pub instances: u64,
    pub not_f5_free: u64,
    pub below_threshold: u64,
    pub order_below_hypothesis: u64,
    pub consistent: u64,
    pub counterexamples: u64,
    /// Index of the first counterexample, for replay with [`random_instance`].
    pub first_counterexample: Option<u64>,
}

/// Checks `count` random instances with `n` drawn from `orders`; instance `i`
/// is reproducible from `(seed, i)`.
pub fn fuzz_main_theorem(
    count: u64,
    orders: std::ops::RangeInclusive<usize>,
    seed: u64,
    execution: Execution,
) -> Result<FuzzSummary> {
    let (lo, hi) = (*orders.start(), *orders.end());
    let verdicts = map_range(execution, 0..count as usize, |i| {
        let s = instance_seed(seed, i as u64);
        let n = lo + (s % (hi - lo + 1) as u64) as usize;
        check_main_theorem(&random_instance(n, s)).map(|c| c.verdict)
    });
    let mut summary = FuzzSummary::default();
    for (i, v) in verdicts.into_iter().enumerate() {
        summary.instances += 1;
        match v? {
            Verdict::Vacuous(VacuousReason::NotF5Free) => summary.not_f5_free += 1,
            Verdict::Vacuous(VacuousReason::DegreeAtOrBelowThreshold) => summary.below_threshold += 1,
            Verdict::Vacuous(VacuousReason::OrderBelowHypothesis) => summary.order_below_hypothesis += 1,
            Verdict::Consistent => summary.consistent += 1,
            Verdict::Counterexample => {
                summary.counterexamples += 1;
                summary.first_counterexample.get_or_insert(i as u64);
            }
        }
    }
    Ok(summary)
}

/// Rebuilds instance `index` of a fuzz run.
pub fn fuzz_instance(orders: std::ops::RangeInclusive<usize>, seed: u64, index: u64) -> ThreeGraph {
    let (lo, hi) = (*orders.start(), *orders.end());
    let s = instance_seed(seed, index);
    random_instance(lo + (s % (hi - lo + 1) as u64) as usize, s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{balanced_turan, wheel_blowup};

    #[test]
    fn wheel_blowup_sits_on_the_threshold() {
        let h = wheel_blowup(5, [2; 5]);
        let c = check_main_theorem(&h).unwrap();
        assert_eq!((c.n, c.min_degree), (15, 20));
        assert_eq!(c.verdict, Verdict::Vacuous(VacuousReason::DegreeAtOrBelowThreshold));
    }

    #[test]
    fn balanced_turan_six_is_consistent() {
        let c = check_main_theorem(&balanced_turan(6)).unwrap();
        assert_eq!(c.min_degree, 4);
        assert_eq!(c.verdict, Verdict::Consistent);
        assert_eq!(c.three_partite, Some(true));
    }

    #[test]
    fn verdict_serializes_flat() {
        let c = check_main_theorem(&ThreeGraph::f5()).unwrap();
        let v = serde_json::to_value(&c).unwrap();
        assert_eq!(v["verdict"], "vacuous");
        assert_eq!(v["reason"], "not-f5-free");
        let back: TheoremCheck = serde_json::from_value(v).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn f5_is_vacuous() {
        let c = check_main_theorem(&ThreeGraph::f5()).unwrap();
        assert_eq!(c.verdict, Verdict::Vacuous(VacuousReason::NotF5Free));
    }

    #[test]
    fn fuzz_is_reproducible_and_clean() {
        let a = fuzz_main_theorem(2000, 5..=7, 3, Execution::Sequential).unwrap();
        let b = fuzz_main_theorem(2000, 5..=7, 3, Execution::Parallel).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.counterexamples, 0);
        assert!(a.consistent > 0, "{a:?}");
    }
}
