use crate::algebra::{int, rat, ExactScalar};
use crate::report::{CertificateReport, Check};

/// Parameters `(α, β, δ, γ)` of the vertex-extendability system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtendabilityParams {
    pub alpha: ExactScalar,
    pub beta: ExactScalar,
    pub delta: ExactScalar,
    pub gamma: ExactScalar,
}

impl ExtendabilityParams {
    /// `(1 - 4/(3√5), 4/(3√5), 4/45, 3 - 20/(3√5))`.
    pub fn stability_choice() -> Self {
        // 4/(3√5) = (4/15)√5 and 20/(3√5) = (4/3)√5
        ExtendabilityParams {
            alpha: ExactScalar::new(int(1), rat(-4, 15)),
            beta: ExactScalar::new(int(0), rat(4, 15)),
            delta: ExactScalar::from_ratio(4, 45),
            gamma: ExactScalar::new(int(3), rat(-4, 3)),
        }
    }
}

fn strict(name: &str, lhs: &ExactScalar, rhs: &ExactScalar, what: &str) -> Check {
    let gap = lhs - rhs;
    Check::new(name, gap.sign() > 0)
        .exact(gap.to_string())
        .approx(gap.to_f64())
        .note(format!("{what}; value is lhs - rhs"))
}

/// Evaluates the five strict inequalities
/// `β > 1/2`,
/// `δ > β(1-β)/3 + γα`, `δ > (1-γ)²/12 + γα`, `δ > 1/12`,
/// `δ > ½·max{(2-2β)²/4 + (2β-1)γ, β²/4 + (1-β)γ}`
/// exactly. The report passes iff all hold.
pub fn aes_parameter_check(p: &ExtendabilityParams) -> CertificateReport {
    let one = ExactScalar::one();
    let half = ExactScalar::from_ratio(1, 2);
    let (a, b, d, g) = (&p.alpha, &p.beta, &p.delta, &p.gamma);
    let ga = g * a;
    let t1 = b * &(&one - b) / ExactScalar::from_int(3) + &ga;
    let t2 = (&one - g).square() / ExactScalar::from_int(12) + &ga;
    let (m1, m2) = half_max_terms(p);
    let larger = if m1 >= m2 { m1.clone() } else { m2.clone() };
    let details = vec![
        strict("beta-above-half", b, &half, "β > 1/2"),
        strict("delta-vs-link-term", d, &t1, "δ > β(1-β)/3 + γα"),
        strict("delta-vs-gamma-term", d, &t2, "δ > (1-γ)²/12 + γα"),
        strict("delta-vs-twelfth", d, &ExactScalar::from_ratio(1, 12), "δ > 1/12"),
        strict(
            "delta-vs-half-max",
            d,
            &(&half * &larger),
            &format!("δ > ½·max{{{m1}, {m2}}}"),
        ),
    ];
    CertificateReport::new("aes-parameters", None, details)
}

/// The two terms inside the last maximum, in order.
pub fn half_max_terms(p: &ExtendabilityParams) -> (ExactScalar, ExactScalar) {
    let one = ExactScalar::one();
    let two = ExactScalar::from_int(2);
    let four = ExactScalar::from_int(4);
    let (b, g) = (&p.beta, &p.gamma);
    let m1 = (&two - b * &two).square() / &four + (b * &two - &one) * g;
    let m2 = b.square() / &four + (&one - b) * g;
    (m1, m2)
}
