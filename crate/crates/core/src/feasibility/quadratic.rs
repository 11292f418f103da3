//! The two quadratic systems: the wheel system on the 5-simplex and the
//! `Γ_d` system on the positive orthant.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::{quadratic_roots, Poly};
use super::scan::{scan_orthant, scan_simplex, ScanConfig, SlackScan};
use super::system::{ConstraintSystem, Domain, QuadPoly};
use crate::algebra::{fmt_rational, int, rat, verify_conjugation, verify_pentagon_identity, ExactScalar, Rational};
use crate::construct::gamma_graph;
use crate::error::{Error, Result};
use crate::report::{CertificateReport, Check};

/// The common threshold `4/45`.
pub fn degree_threshold() -> ExactScalar {
    ExactScalar::from_ratio(4, 45)
}

/// The weakened threshold `3/45` used to check that the scan can succeed.
pub fn weakened_threshold() -> ExactScalar {
    ExactScalar::from_ratio(3, 45)
}

fn check_resolution(resolution: usize) -> Result<()> {
    if resolution < 10 {
        return Err(Error::ParameterOutOfRange {
            name: "resolution",
            value: resolution as i64,
            range: "resolution >= 10",
        });
    }
    Ok(())
}

/// Variables `(x, y1, …, y5)` on the simplex: `Σ y_i y_{i+1} > t` and
/// `x (y_{i-1} + y_{i+1}) > t` for each rim index.
pub fn wheel_system(threshold: &ExactScalar) -> ConstraintSystem {
    let y = |i: usize| 1 + (i % 5);
    let mut sys = ConstraintSystem::new(6, Domain::Simplex);
    let rim = QuadPoly::quadratic((0..5).map(|i| (y(i), y(i + 1), int(1))));
    sys.add("rim-edges", "threshold", rim, threshold.clone()).expect("in range");
    for i in 0..5 {
        let hub = QuadPoly::quadratic([(0, y(i + 4), int(1)), (0, y(i + 1), int(1))]);
        sys.add(format!("hub-{}", i + 1), "threshold", hub, threshold.clone())
            .expect("in range");
    }
    sys
}

pub fn wheel_scan(threshold: &ExactScalar, cfg: &ScanConfig) -> Result<SlackScan> {
    check_resolution(cfg.resolution)?;
    scan_simplex(&wheel_system(threshold), cfg)
}

/// Certifies that the wheel system with threshold `4/45` has no solution:
/// a lattice scan plus refinement as numeric evidence, and the exact
/// reduction to a cubic that is negative on `[0, 1]`.
pub fn opt1_certificate(cfg: &ScanConfig) -> Result<CertificateReport> {
    check_resolution(cfg.resolution)?;
    let t = degree_threshold();
    let sys = wheel_system(&t);
    let scan = scan_simplex(&sys, cfg)?;
    let mut details = vec![scan_check(&scan)];

    // summing the hub constraints: Σ x(y_{i-1}+y_{i+1}) = 2x·Σy = 2x(1-x)
    let hub_sum = sys.constraints()[1..]
        .iter()
        .fold(QuadPoly::zero(), |acc, c| add_poly(acc, &c.lhs));
    let two_x_sum = QuadPoly::quadratic((1..6).map(|i| (0, i, int(2))));
    let bound = int(5) * rat(4, 45) / int(2);
    details.push(
        Check::new("hub-sum", hub_sum == two_x_sum && bound == rat(2, 9))
            .exact(format!("x(1-x) > {}", fmt_rational(&bound)))
            .note("the five hub constraints sum to 2x(1-x)"),
    );

    // x(1-x) - 2/9 = -(x - 1/3)(x - 2/3)
    let q = Poly::new(vec![rat(-2, 9), int(1), int(-1)]);
    let roots = quadratic_roots(&q);
    details.push(
        Check::new("x-interval", roots == Some((rat(1, 3), rat(2, 3))) && q.coeff(2) < Rational::zero())
            .exact("1/3 < x < 2/3")
            .note("discriminant 1/9 is a rational square; leading coefficient negative"),
    );

    details.push(pentagon_check()?);

    // Applying the regular-graph bound to the pentagram with z = 2(1-x),
    // z0 = 4/(45x) and clearing 405x²:
    // 405x²·(4(1-x)·4/(45x) - 5·(4/(45x))²) = 16(-9x² + 9x - 1)
    let x = Poly::x();
    let one_minus_x = Poly::from_ints(&[1, -1]);
    let lower = &(&Poly::from_ints(&[0, 144]) * &one_minus_x) - &Poly::from_ints(&[16]);
    let claimed = Poly::from_ints(&[-1, 9, -9]).scale(&int(16));
    details.push(
        Check::new("pentagram-bound", lower == claimed)
            .exact(format!("405x²·bound = {claimed}")),
    );

    // 405x²[(1-x)² - 4/45] - 16(-9x²+9x-1) = -(1-3x)(135x³ - 225x² + 96x - 16)
    let cubic = Poly::from_ints(&[-16, 96, -225, 135]);
    let x2 = &x * &x;
    let lhs = &(&x2.scale(&int(405)) * &(&(&one_minus_x * &one_minus_x) - &Poly::constant(rat(4, 45))))
        - &claimed;
    let rhs = -&(&Poly::from_ints(&[1, -3]) * &cubic);
    details.push(Check::new("endgame-factorization", lhs == rhs).exact(format!("-(1 - 3x)({cubic})")));

    let min_width = Rational::new(BigInt::one(), BigInt::one() << 20u32);
    let neg = cubic.certify_negative(&int(0), &int(1), &min_width);
    let worst = neg.worst_bound.as_ref().map(fmt_rational).unwrap_or_default();
    details.push(
        Check::new("cubic-negative", neg.holds)
            .exact(format!(
                "p(0) = {}, p(1) = {}, worst interval bound {worst}",
                fmt_rational(&cubic.eval(&int(0))),
                fmt_rational(&cubic.eval(&int(1)))
            ))
            .note(format!(
                "{} dyadic intervals cover [0,1], each with a negative exact upper bound",
                neg.intervals.len()
            )),
    );

    // the cubic is negative, so 1 - 3x > 0, i.e. x < 1/3, against x > 1/3
    details.push(
        Check::new(
            "contradiction",
            neg.holds && roots.as_ref().is_some_and(|(lo, _)| *lo == rat(1, 3)),
        )
        .note("1 - 3x > 0 contradicts x > 1/3"),
    );
    Ok(CertificateReport::new("opt1", None, details))
}

fn add_poly(mut acc: QuadPoly, p: &QuadPoly) -> QuadPoly {
    for (m, c) in p.terms() {
        acc.add_term(*m, c.clone());
    }
    acc
}

fn pentagon_check() -> Result<Check> {
    let r = verify_pentagon_identity()?;
    Ok(Check::new("pentagon-identity", r.pass).note("(A_2^-1)^T B A_2^-1 = A_Q / 2 exactly"))
}

fn scan_check(scan: &SlackScan) -> Check {
    Check::new("scan-max-min-slack", scan.no_feasible_point() && !scan.truncated)
        .exact(scan.best_slack.to_string())
        .approx(scan.best_slack.to_f64())
        .note(format!(
            "{} coarse points at resolution {}, {} exact rechecks, {} refinement steps on the winning start",
            scan.coarse_points,
            scan.resolution,
            scan.exact_rechecks,
            scan.refinement_trace.len()
        ))
}

/// `3 - 16/(3√5)`, the cap on the total weight.
pub fn gamma_total_cap() -> ExactScalar {
    ExactScalar::new(int(3), rat(-16, 15))
}

fn check_d(d: usize) -> Result<()> {
    if !(2..=12).contains(&d) {
        return Err(Error::ParameterOutOfRange {
            name: "d",
            value: d as i64,
            range: "2..=12",
        });
    }
    Ok(())
}

/// Variables `y_1..y_{3d-1}` on the orthant: the `Γ_d` edge sum exceeds
/// `threshold`, every neighbourhood sum exceeds `6/17` of the total, and the
/// total stays below `3 - 16/(3√5)`.
pub fn gamma_system(d: usize, threshold: &ExactScalar) -> Result<ConstraintSystem> {
    let g = gamma_graph(d)?;
    let m = g.n();
    let mut sys = ConstraintSystem::new(m, Domain::Orthant);
    let edges = QuadPoly::quadratic(g.edges().iter().map(|&[i, j]| (i, j, int(1))));
    sys.add("edge-sum", "threshold", edges, threshold.clone())?;
    for i in 0..m {
        let lin = QuadPoly::linear((0..m).map(|j| {
            let own = if g.has_edge(i, j) { int(1) } else { int(0) };
            (j, own - rat(6, 17))
        }));
        sys.add(format!("neighbourhood-{i}"), "neighbourhood", lin, ExactScalar::zero())?;
    }
    let total = QuadPoly::linear((0..m).map(|j| (j, int(-1))));
    sys.add("total", "total", total, -gamma_total_cap())?;
    Ok(sys)
}

/// Structured starting points: uniform vectors at several totals and
/// period-3 patterns.
fn gamma_starts(m: usize, cap: f64) -> Vec<Vec<f64>> {
    let mut starts = Vec::new();
    for frac in [0.5, 0.9, 0.99, 0.999] {
        starts.push(vec![cap * frac / m as f64; m]);
    }
    for heavy in 0..3 {
        let w: Vec<f64> = (0..m).map(|i| if i % 3 == heavy { 2.0 } else { 1.0 }).collect();
        let s: f64 = w.iter().sum();
        starts.push(w.iter().map(|v| v * cap * 0.99 / s).collect());
    }
    starts
}

pub fn gamma_scan(d: usize, threshold: &ExactScalar, cfg: &ScanConfig) -> Result<SlackScan> {
    check_d(d)?;
    check_resolution(cfg.resolution)?;
    let sys = gamma_system(d, threshold)?;
    let cap = gamma_total_cap().to_f64();
    scan_orthant(&sys, cfg, &gamma_starts(sys.vars(), cap), cap)
}

/// `(d² - 13d + 144)/578`, the coefficient of `y²` in the final bound.
pub fn gamma_coefficient(d: usize) -> Rational {
    let d = int(d as i64);
    (&d * &d - int(13) * &d + int(144)) / int(578)
}

/// Certifies that the `Γ_d` system has no solution for `2 ≤ d ≤ 12`.
pub fn opt2_certificate(d: usize, cfg: &ScanConfig) -> Result<CertificateReport> {
    check_d(d)?;
    check_resolution(cfg.resolution)?;
    let cap = gamma_total_cap();
    let cap_sq = cap.square();
    let mut details = vec![Check::new("cap-square", cap_sq == ExactScalar::new(rat(661, 45), rat(-32, 5)))
        .exact(cap_sq.to_string())
        .approx(cap_sq.to_f64())];

    // symbolic identities in d, with m = 3d - 1
    let dp = Poly::x();
    let m = Poly::from_ints(&[-1, 3]);
    let lhs = &(&(&m - &Poly::from_ints(&[3])) * &(&dp.scale(&int(17)) - &m.scale(&int(3)))).scale(&int(6));
    let rhs = (&Poly::from_ints(&[-4, 3]) * &Poly::from_ints(&[3, 8])).scale(&int(6));
    details.push(Check::new("regularity-constant", *lhs == rhs).exact(format!("6(m-3)(17d-3m) = {rhs}")));
    let pairs = (&dp * &Poly::from_ints(&[-1, 1])).scale(&rat(1, 2));
    let combined = &pairs - &rhs.scale(&rat(1, 289));
    let target = Poly::from_ints(&[144, -13, 1]).scale(&rat(1, 578));
    details.push(
        Check::new("coefficient-identity", combined == target)
            .exact("C(d,2) - 6(3d-4)(8d+3)/289 = (d^2 - 13d + 144)/578"),
    );

    let conj = verify_conjugation(d)?;
    details.push(Check::new("conjugation-identity", conj.pass));

    let coef = gamma_coefficient(d);
    let bound = ExactScalar::rational(coef.clone()) * &cap_sq;
    let margin = &bound - &degree_threshold();
    details.push(
        Check::new("exact-bound", margin.sign() <= 0)
            .exact(format!("({}) * ({}) = {}", fmt_rational(&coef), cap_sq, bound))
            .approx(bound.to_f64())
            .note(format!("4/45 - bound = {}", -margin)),
    );

    if d >= 6 {
        // averaging the neighbourhood constraints over a d-regular graph on
        // 3d-1 vertices needs d/(3d-1) > 6/17, which fails for d >= 6
        let ratio = rat(d as i64, 3 * d as i64 - 1);
        details.push(
            Check::new("neighbourhood-average", ratio <= rat(6, 17))
                .exact(format!("d/(3d-1) = {} <= 6/17", fmt_rational(&ratio)))
                .note("the neighbourhood constraints alone are infeasible"),
        );
    }

    let scan = gamma_scan(d, &degree_threshold(), cfg)?;
    details.push(scan_check(&scan));
    Ok(CertificateReport::new("opt2", Some(d as i64), details))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wheel_system_tight_point() {
        let sys = wheel_system(&degree_threshold());
        let x = [rat(1, 3), rat(2, 15), rat(2, 15), rat(2, 15), rat(2, 15), rat(2, 15)];
        assert!(sys.in_open_domain(&x));
        assert_eq!(sys.min_slack(&x).unwrap(), ExactScalar::zero());
        let weak = wheel_system(&weakened_threshold());
        assert_eq!(weak.min_slack(&x).unwrap(), ExactScalar::from_ratio(1, 45));
    }

    #[test]
    fn opt1_at_low_resolution() {
        let r = opt1_certificate(&ScanConfig::new(15)).unwrap();
        assert!(r.pass, "{r:#?}");
        assert!(matches!(
            opt1_certificate(&ScanConfig::new(9)),
            Err(Error::ParameterOutOfRange { .. })
        ));
    }

    #[test]
    fn gamma_coefficients() {
        assert_eq!(gamma_coefficient(2), rat(122, 578));
        assert_eq!(gamma_coefficient(12), rat(132, 578));
        let b2 = ExactScalar::rational(gamma_coefficient(2)) * gamma_total_cap().square();
        assert!((b2.to_f64() - 0.0798).abs() < 1e-4);
        assert!(gamma_system(13, &degree_threshold()).is_ok());
        assert!(opt2_certificate(13, &ScanConfig::new(60)).is_err());
        assert!(opt2_certificate(1, &ScanConfig::new(60)).is_err());
    }

    #[test]
    fn opt2_small_d() {
        for d in [2, 6] {
            let r = opt2_certificate(d, &ScanConfig::new(60)).unwrap();
            assert!(r.pass, "{r:#?}");
        }
    }
}
