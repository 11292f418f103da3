//! Exact verification of the scalar inequalities used along the way.
//!
//! Claims over an infinite range of `n` are reduced to finitely many exact
//! checks: if `f(n0) > 0` and every coefficient of `f(n0 + t)` is
//! nonnegative, then `f(n) > 0` for all `n ≥ n0`.

use num_traits::Signed;

use super::poly::Poly;
use crate::algebra::{fmt_rational, int, rat, ExactScalar, Rational};
use crate::report::{CertificateReport, Check};

/// First order for which the clique-count claims are needed.
pub const LARGE_N: i64 = 4629;

/// Outcome of the range reduction for `f(n) > 0` on `n ≥ n0`.
#[derive(Clone, Debug)]
pub struct RangeClaim {
    pub holds: bool,
    pub at_start: Rational,
    pub shifted: Poly,
}

pub fn positive_from(f: &Poly, n0: i64) -> RangeClaim {
    let n0 = int(n0);
    let shifted = f.taylor_shift(&n0);
    let at_start = f.eval(&n0);
    let holds = at_start.is_positive() && shifted.coeffs().iter().all(|c| !c.is_negative());
    RangeClaim { holds, at_start, shifted }
}

fn range_check(name: &str, f: &Poly, n0: i64, what: &str) -> Check {
    let c = positive_from(f, n0);
    Check::new(name, c.holds)
        .exact(format!("f({n0}) = {}", fmt_rational(&c.at_start)))
        .note(format!(
            "{what}; f(n) = {f}; f({n0} + t) = {} has no negative coefficient",
            c.shifted
        ))
}

/// `7n²/12 - 196n - C(n, 2)`.
pub fn seven_clique_margin() -> Poly {
    Poly::new(vec![int(0), rat(-391, 2), rat(1, 12)])
}

/// `(k² - 6k + 6)/(12k)·n² - k·C(k+1, 2)·n`.
pub fn clique_excess(k: i64) -> Poly {
    Poly::new(vec![
        int(0),
        int(-k * k * (k + 1) / 2),
        rat(k * k - 6 * k + 6, 12 * k),
    ])
}

fn x0() -> ExactScalar {
    // 16/(3√5) - 2
    ExactScalar::new(int(-2), rat(16, 15))
}

fn shadow_degree_ratio() -> ExactScalar {
    // 4/(3√5)
    ExactScalar::new(int(0), rat(4, 15))
}

fn claim_a() -> Check {
    let f = seven_clique_margin();
    let direct = (&Poly::new(vec![int(0), int(-196), rat(7, 12)])
        - &Poly::new(vec![int(0), rat(-1, 2), rat(1, 2)]))
        == f;
    let mut c = range_check(
        "a-seven-clique-count",
        &f,
        LARGE_N,
        "7n²/12 - 196n > C(n,2) for n > 4628",
    );
    let at_2000 = f.eval(&int(2000));
    c.pass &= direct && at_2000.is_negative();
    c.note = format!("{}; fails at n = 2000 with value {}", c.note, fmt_rational(&at_2000));
    c
}

fn claim_b() -> Check {
    let parts: Vec<_> = [5, 6]
        .into_iter()
        .map(|k| {
            // k/12 = (k-1)/(2k) + (k² - 6k + 6)/(12k)
            let split = rat(k - 1, 2 * k) + rat(k * k - 6 * k + 6, 12 * k) == rat(k, 12);
            (k, split, positive_from(&clique_excess(k), LARGE_N))
        })
        .collect();
    let pass = parts.iter().all(|(_, split, c)| *split && c.holds);
    let exact = parts
        .iter()
        .map(|(k, _, c)| format!("k = {k}: f({LARGE_N}) = {}", fmt_rational(&c.at_start)))
        .collect::<Vec<_>>()
        .join("; ");
    Check::new("b-clique-excess", pass).exact(exact).note(format!(
        "(k²-6k+6)/(12k)·n² - k·C(k+1,2)·n > 0 for k in {{5, 6}}, n > 4628; roots at n = 4500 and 1512; {}",
        parts
            .iter()
            .map(|(k, _, c)| format!("k = {k}: f({LARGE_N} + t) = {}", c.shifted))
            .collect::<Vec<_>>()
            .join("; ")
    ))
}

fn claim_c() -> Check {
    let eps = rat(1, 180);
    let g = rat(1, 3) + int(2) * &eps;
    let value = &g * (int(4) * &g - int(1)) * (int(3) * &g - int(1)) / int(6);
    let target = &eps / int(9);
    Check::new("c-k4-density", g == rat(31, 90) && value > target)
        .exact(format!("{} > {}", fmt_rational(&value), fmt_rational(&target)))
        .note("γ(4γ-1)(3γ-1)/6 > ε/9 at ε = 1/180, γ = 1/3 + 2ε = 31/90")
}

fn claim_d() -> Check {
    let x = x0();
    let half = ExactScalar::from_ratio(1, 2);
    let in_range = x.sign() > 0 && x < half;
    let value = ExactScalar::from_ratio(3, 8) * &x * (ExactScalar::one() - &x);
    let stated = ExactScalar::new(rat(-263, 60), int(2));
    let below = stated < ExactScalar::from_ratio(4, 45);
    Check::new("d-case-one-chain", in_range && value == stated && below)
        .exact(format!("(3/8)·x0(1-x0) = {value} < 4/45"))
        .approx(value.to_f64())
        .note(
            "x0 = 16/(3√5) - 2 lies in (0, 1/2), where x(1-x) increases, so the bound at x0 covers \
             every x ≤ x0; the restriction x ≤ x0 is the case hypothesis on the independence ratio",
        )
}

fn claim_e() -> Check {
    let x = x0();
    let beta = shadow_degree_ratio();
    let one = ExactScalar::one();
    let p_at = &one - &x - ExactScalar::from_ratio(4, 45) / &x;
    let value = &one - &p_at / &beta;
    let stated = ExactScalar::new(rat(99, 19), rat(-165, 76));
    let above = (&value - ExactScalar::from_ratio(6, 17)).sign() == 1;
    // 1 - x - 4/(45x) decreases where x² > 4/45; x0 is the left end
    let decreasing = x.square() > ExactScalar::from_ratio(4, 45);
    let positive = p_at.sign() > 0;
    Check::new("e-neighbourhood-ratio", value == stated && above && decreasing && positive)
        .exact(format!("1 - (1/β)(1 - x0 - 4/(45 x0)) = {value} > 6/17"))
        .approx(value.to_f64())
        .note(
            "equals 33(12-5√5)/76; 1 - x - 4/(45x) is decreasing on [x0, 1] since x0² > 4/45, \
             and is positive at x0, so replacing y by β only lowers the bound",
        )
}

fn claim_f() -> Check {
    let beta = shadow_degree_ratio();
    let sq = beta.square();
    let ok = sq == ExactScalar::from_ratio(16, 45)
        && sq == ExactScalar::from_int(4) * ExactScalar::from_ratio(4, 45)
        && beta.sign() > 0
        && beta > ExactScalar::from_ratio(4, 7);
    Check::new("f-shadow-degree", ok)
        .exact(format!("(4/(3√5))² = {sq} = 4·(4/45)"))
        .approx(beta.to_f64())
        .note("2√(4/45) = 4/(3√5) > 4/7")
}

/// Checks every catalogued scalar claim exactly.
pub fn numeric_claim_audit() -> CertificateReport {
    let details = vec![claim_a(), claim_b(), claim_c(), claim_d(), claim_e(), claim_f()];
    debug_assert!(details.iter().all(|c| !c.name.is_empty()));
    CertificateReport::new("scalar-audit", None, details)
}

/// `33(12 - 5√5)/76 - 6/17`.
pub fn neighbourhood_ratio_margin() -> ExactScalar {
    ExactScalar::new(rat(99, 19), rat(-165, 76)) - ExactScalar::from_ratio(6, 17)
}
