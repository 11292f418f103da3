//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero when an outcome differs from its pinned expectation or a run
//! exceeds its time limit.
//!
//! Criterion 9 has a pinned failure: the seven-part witness with nonempty
//! `Z` parts contains `F5`. The harness checks that the failure is exactly
//! the known one (valid `F5` witness, `δ = 183`, `K4` in the shadow,
//! `δ/n² ≥ 0.0535`) and reports FAIL for it.

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use f5_core::algebra::{
    exact_sign, int, rat, verify_conjugation, verify_gamma_inverse, verify_pentagon_identity, ExactScalar,
};
use f5_core::construct::{tightness_witness, wheel_blowup};
use f5_core::detect::{
    audit_link_facts, find_clique, find_f5, find_k4_minus, is_cancellative, EDGE_LINKS_DISJOINT,
    EDGE_LINKS_TRIANGLE_SPLIT,
};
use f5_core::feasibility::{
    aes_parameter_check, degree_threshold, numeric_claim_audit, opt1_certificate, opt2_certificate,
    weakened_threshold, wheel_scan, wheel_system, ExtendabilityParams, ScanConfig,
};
use f5_core::graph::{independence_number, max_independent_set, three_partition, DEFAULT_INDEPENDENCE_CAP};
use f5_core::par::Execution;
use f5_core::search::{
    extremal_number, fuzz_main_theorem, max_min_degree, random_instance, Family, Mode, SearchSpec,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

mod common;
use common::{alpha_by_definition, cancellative_by_definition, f5_free_by_definition, grow, min_degree};

type Criterion = (&'static str, fn() -> Outcome, u64);

struct Outcome {
    pass: bool,
    detail: String,
    /// Whether the outcome matches its pinned expectation.
    as_expected: bool,
}

impl Outcome {
    fn plain(pass: bool, detail: String) -> Self {
        Outcome { pass, detail, as_expected: pass }
    }
}

fn tight_wheel() -> Outcome {
    let h = wheel_blowup(5, [2; 5]);
    let n = h.n();
    let d = min_degree(&h);
    let on_threshold = 45 * d == 4 * n * n;
    let canc = is_cancellative(&h);
    let canc_def = cancellative_by_definition(h.edges());
    let partite = three_partition(&h).expect("n within cap").is_some();
    Outcome::plain(
        n == 15 && d == 20 && on_threshold && canc && canc_def && !partite,
        format!("n = {n}, δ = {d}, 45δ = 4n²: {on_threshold}, cancellative: {canc}, 3-partite: {partite}"),
    )
}

fn matrix_identities() -> Outcome {
    let inv_fail: Vec<usize> = (2..=20).filter(|&d| !verify_gamma_inverse(d).unwrap().pass).collect();
    let conj_fail: Vec<usize> = (2..=12).filter(|&d| !verify_conjugation(d).unwrap().pass).collect();
    let pentagon = verify_pentagon_identity().unwrap().pass;
    Outcome::plain(
        inv_fail.is_empty() && conj_fail.is_empty() && pentagon,
        format!(
            "inverse d=2..20 failures {inv_fail:?}, conjugation d=2..12 failures {conj_fail:?}, pentagon {pentagon}"
        ),
    )
}

fn wheel_system_certificate() -> Outcome {
    let cfg = ScanConfig::new(60);
    let report = opt1_certificate(&cfg).unwrap();
    let cubic = report.check("cubic-negative").is_some_and(|c| c.pass);
    // independent sample of the cubic on a fine rational grid
    let grid_negative = (0..=1000).all(|k| {
        let x = rat(k, 1000);
        let p = int(135) * &x * &x * &x - int(225) * &x * &x + int(96) * &x - int(16);
        p < int(0)
    });
    let scan = wheel_scan(&degree_threshold(), &cfg).unwrap();
    let infeasible = scan.best_slack.sign() <= 0;
    let weak = weakened_threshold();
    let flipped = wheel_scan(&weak, &cfg).unwrap().strictly_feasible(&wheel_system(&weak));
    Outcome::plain(
        report.pass && cubic && grid_negative && infeasible && flipped,
        format!(
            "cubic < 0 on [0,1]: {cubic} (grid {grid_negative}), max min-slack {} ≤ 0: {infeasible}, 3/45 feasible: {flipped}",
            scan.best_slack
        ),
    )
}

fn gamma_system_certificates() -> Outcome {
    let cfg = ScanConfig::new(60);
    // (3 - 16/(3√5))² with 16/(3√5) = (16/15)√5
    let base = ExactScalar::new(int(3), rat(-16, 15)).square();
    let mut failures = Vec::new();
    for d in 2..=12i64 {
        let report = opt2_certificate(d as usize, &cfg).unwrap();
        let exact = report.check("exact-bound").is_some_and(|c| c.pass);
        let scan = report.check("scan-max-min-slack").is_some_and(|c| c.pass);
        let coeff = ExactScalar::rational(rat(d * d - 13 * d + 144, 578));
        let bound = (&coeff * &base) <= degree_threshold();
        if !(report.pass && exact && scan && bound) {
            failures.push(d);
        }
    }
    Outcome::plain(
        failures.is_empty(),
        format!("d = 2..12, exact bound and scan evidence; failures {failures:?}"),
    )
}

fn parameter_system() -> Outcome {
    let p = ExtendabilityParams::stability_choice();
    let report = aes_parameter_check(&p);
    let strict = report.details.len() == 5 && report.details.iter().all(|c| c.pass);
    let quarter = p.beta.square() / ExactScalar::from_int(4) == ExactScalar::from_ratio(4, 45);
    Outcome::plain(
        report.pass && strict && quarter,
        format!("{} strict inequalities hold: {strict}, β²/4 = 4/45: {quarter}", report.details.len()),
    )
}

fn scalar_claims() -> Outcome {
    let report = numeric_claim_audit();
    let six = report.details.len() == 6 && report.details.iter().all(|c| c.pass);
    let density = rat(527, 729000) > rat(1, 1620);
    let ratio = ExactScalar::new(rat(33 * 12, 76), rat(-33 * 5, 76)) - ExactScalar::from_ratio(6, 17);
    let sign = exact_sign(&ratio);
    Outcome::plain(
        report.pass && six && density && sign == 1,
        format!("claims (a)-(f) pass: {six}, 527/729000 > 1/1620: {density}, sign 33(12-5√5)/76 - 6/17 = {sign:+}"),
    )
}

fn small_extremal_numbers() -> Outcome {
    let mut ok = true;
    let mut found = Vec::new();
    for (n, want) in [(5, 4), (6, 8), (7, 12)] {
        let r = extremal_number(n, Family::cancellative()).unwrap();
        let w = r.witness.clone().expect("witness");
        let valid = w.edge_count() == want
            && cancellative_by_definition(w.edges())
            && three_partition(&w).unwrap().is_some();
        ok &= r.exhaustive && r.optimum == Some(want) && valid;
        found.push(format!("n={n}: {:?}", r.optimum));
    }
    Outcome::plain(ok, format!("{}, 3-partite witnesses", found.join(", ")))
}

fn small_non_partite_degree() -> Outcome {
    let spec = SearchSpec::new(6, Family::cancellative(), Mode::MaxMinDegree).non_3partite();
    let r = max_min_degree(&spec).unwrap();
    let witness_ok = match (&r.optimum, &r.witness) {
        (Some(o), Some(w)) => {
            min_degree(w) == *o && cancellative_by_definition(w.edges()) && three_partition(w).unwrap().is_none()
        }
        (None, _) => true,
        _ => false,
    };
    Outcome::plain(
        r.exhaustive && r.optimum.is_none_or(|o| o <= 3) && witness_ok,
        format!("optimum {:?} (≤ 3 required), exhaustive {}, nodes {}", r.optimum, r.exhaustive, r.nodes),
    )
}

fn seven_part_witness() -> Outcome {
    let w = tightness_witness(58, Some([14, 14, 14, 2, 2, 2])).unwrap();
    let h = &w.graph;
    let n = h.n();
    let detector = find_f5(h);
    let f5_free = detector.is_none();
    let witness_valid = detector.as_ref().is_some_and(|x| x.validate_three(h));
    let f5_def = f5_free_by_definition(h.edges());
    let k4 = find_clique(&h.shadow(), 4).unwrap().is_some();
    let d = min_degree(h);
    let ratio = d as f64 / (n * n) as f64;
    let ratio_ok = ratio >= 0.0535;
    let pass = f5_free && k4 && ratio_ok && d == 180;
    // Pinned mode: F5 present (detector and definition agree, witness valid),
    // δ = 183 instead of 180, remaining clauses hold.
    let pinned = !f5_free && witness_valid && !f5_def && d == 183 && k4 && ratio_ok;
    let mut detail = format!(
        "n = {n}, F5-free: {f5_free}, K4 in shadow: {k4}, δ = {d} (stated 180; target (n-10)²/12 = {}), δ/n² = {ratio:.4} ≥ 0.0535: {ratio_ok}",
        (n - 10) * (n - 10) / 12
    );
    if pinned {
        detail.push_str("; known failure: Z parts create F5 via {4,z1,y2},{4,z1,y3},{1,y2,y3}");
    }
    Outcome { pass, detail, as_expected: pinned }
}

fn property_suites() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut problems: Vec<String> = Vec::new();
    let (mut canc_count, mut f5_count, mut pairs) = (0, 0, HashSet::new());

    for i in 0..1000 {
        let n = 5 + i % 6;
        let cancellative = i % 2 == 0;
        let h = if cancellative {
            grow(n, &mut rng, cancellative_by_definition)
        } else {
            grow(n, &mut rng, f5_free_by_definition)
        };
        let audit = audit_link_facts(&h);
        let facts_ok = if cancellative_by_definition(h.edges()) {
            canc_count += 1;
            audit.holds
        } else {
            f5_count += 1;
            [EDGE_LINKS_DISJOINT, EDGE_LINKS_TRIANGLE_SPLIT]
                .iter()
                .all(|f| audit.fact(f).is_some_and(|r| r.holds))
        };
        if !facts_ok {
            problems.push(format!("link facts fail on corpus instance {i}"));
        }
        pairs.insert((n, h.edge_count()));
    }

    // equivalence and α on the corpus regrown plus unconstrained instances
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut checked = 0;
    for i in 0..2000 {
        let n = 5 + i % 6;
        let h = match i % 4 {
            0 => grow(n, &mut rng, cancellative_by_definition),
            1 => grow(n, &mut rng, f5_free_by_definition),
            _ => random_instance(n, 0xabc ^ i as u64),
        };
        let free = find_f5(&h).is_none() && find_k4_minus(&h).is_none();
        let canc = is_cancellative(&h);
        if canc != free || canc != cancellative_by_definition(h.edges()) {
            problems.push(format!("cancellative equivalence fails on instance {i}"));
        }
        if find_f5(&h).is_none() != f5_free_by_definition(h.edges()) {
            problems.push(format!("F5 detector disagrees with definition on instance {i}"));
        }
        let brute = alpha_by_definition(&h);
        let alpha = independence_number(&h).unwrap();
        let shadow_alpha = max_independent_set(&h.shadow(), DEFAULT_INDEPENDENCE_CAP).unwrap().len();
        if brute != alpha || brute != shadow_alpha {
            problems.push(format!("α mismatch on instance {i}: {brute} {alpha} {shadow_alpha}"));
        }
        checked += 1;
    }

    let fuzz = fuzz_main_theorem(100_000, 5..=7, 0x1234, Execution::Parallel).unwrap();
    if fuzz.counterexamples != 0 {
        problems.push(format!("fuzz counterexample at index {:?}", fuzz.first_counterexample));
    }
    let detail = format!(
        "corpus {canc_count} cancellative + {f5_count} F5-free ({} distinct (n, |E|)), {checked} equivalence/α instances, \
         fuzz {} instances: {} consistent, {} counterexamples{}",
        pairs.len(),
        fuzz.instances,
        fuzz.consistent,
        fuzz.counterexamples,
        if problems.is_empty() { String::new() } else { format!("; problems: {}", problems.join("; ")) }
    );
    Outcome::plain(problems.is_empty() && canc_count > 0 && f5_count > 0, detail)
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("tight wheel blowup", tight_wheel, 1),
        ("circulant matrix identities", matrix_identities, 5),
        ("wheel system infeasible", wheel_system_certificate, 60),
        ("Γ_d systems infeasible", gamma_system_certificates, 120),
        ("extendability parameters", parameter_system, 1),
        ("scalar claim audit", scalar_claims, 1),
        ("small extremal numbers", small_extremal_numbers, 600),
        ("small non-3-partite degree", small_non_partite_degree, 300),
        ("seven-part witness", seven_part_witness, 30),
        ("property suites", property_suites, 600),
    ];
    let mut deviations = 0;
    for (k, (name, run, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let in_time = elapsed <= Duration::from_secs(limit);
        let pass = outcome.pass && in_time;
        if !(outcome.as_expected && in_time) {
            deviations += 1;
        }
        println!(
            "{} criterion {}: {name}: {} ({:.2}s / limit {limit}s{})",
            if pass { "PASS" } else { "FAIL" },
            k + 1,
            outcome.detail,
            elapsed.as_secs_f64(),
            if in_time { "" } else { ", over limit" },
        );
    }
    if deviations == 0 {
        println!("acceptance: all outcomes match expectations");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {deviations} unexpected outcome(s)");
        ExitCode::FAILURE
    }
}
