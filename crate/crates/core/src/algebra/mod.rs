//! Exact arithmetic over `Q` and `Q(√5)`, dense exact matrices, and
//! verifiers for the circulant matrix identities behind the quadratic
//! optimisation lemmas.

mod matrix;
mod scalar;

pub use matrix::ExactMatrix;
pub use scalar::{exact_sign, fmt_rational, int, rat, rational_to_f64, ExactScalar, Rational};

use num_traits::{Signed, Zero};

use crate::construct::gamma_graph;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::report::{CertificateReport, Check};

/// `W_m`: ones on the diagonal and at cyclic offsets `±1`.
pub fn circulant_w(m: usize) -> Result<ExactMatrix> {
    if m < 3 {
        return Err(Error::DimensionTooSmall { m, min: 3 });
    }
    Ok(ExactMatrix::from_fn(m, |i, j| {
        let diff = (i + m - j) % m;
        if diff == 0 || diff == 1 || diff == m - 1 {
            ExactScalar::one()
        } else {
            ExactScalar::zero()
        }
    }))
}

/// `J_m`, the all-ones matrix.
pub fn all_ones_j(m: usize) -> ExactMatrix {
    ExactMatrix::from_fn(m, |_, _| ExactScalar::one())
}

pub fn adjacency(g: &Graph) -> ExactMatrix {
    ExactMatrix::from_fn(g.n(), |i, j| {
        if g.has_edge(i, j) {
            ExactScalar::one()
        } else {
            ExactScalar::zero()
        }
    })
}

fn require_d(d: usize, min: usize, range: &'static str) -> Result<()> {
    if d < min {
        return Err(Error::ParameterOutOfRange { name: "d", value: d as i64, range });
    }
    Ok(())
}

/// The claimed inverse `W_{3d-1} - (1/d) J_{3d-1}` of the adjacency matrix
/// of `Γ_d`.
pub fn gamma_inverse(d: usize) -> Result<ExactMatrix> {
    require_d(d, 2, "d >= 2")?;
    let m = 3 * d - 1;
    circulant_w(m)?.sub(&all_ones_j(m).scale(&ExactScalar::from_ratio(1, d as i64)))
}

fn equality_check(name: &str, lhs: &ExactMatrix, rhs: &ExactMatrix) -> Result<Check> {
    let dev = lhs.max_deviation(rhs)?;
    Ok(Check::new(name, dev.is_zero())
        .exact(dev.to_string())
        .note("max absolute entry deviation"))
}

/// Multiplies `A_d` by `W_{3d-1} - (1/d) J` exactly and compares with `I`.
pub fn verify_gamma_inverse(d: usize) -> Result<CertificateReport> {
    let inv = gamma_inverse(d)?;
    let g = gamma_graph(d)?;
    let a = adjacency(&g);
    let m = a.dim();
    let id = ExactMatrix::identity(m);
    let details = vec![
        Check::new("gamma-regular", g.regular_degree() == Some(d))
            .exact(format!("{m} vertices, degree {d}")),
        Check::new("adjacency-symmetric", a.is_symmetric()),
        equality_check("right-inverse", &a.mul(&inv)?, &id)?,
        equality_check("left-inverse", &inv.mul(&a)?, &id)?,
    ];
    Ok(CertificateReport::new("gamma-inverse", Some(d as i64), details))
}

/// Checks `(A_d⁻¹)ᵀ (½A_d - C(d,2) J) A_d⁻¹ = (W - J)/2` exactly.
pub fn verify_conjugation(d: usize) -> Result<CertificateReport> {
    let inv = gamma_inverse(d)?;
    let a = adjacency(&gamma_graph(d)?);
    let m = a.dim();
    let j = all_ones_j(m);
    let half = ExactScalar::from_ratio(1, 2);
    let pairs = ExactScalar::from_int((d * (d - 1) / 2) as i64);
    let middle = a.scale(&half).sub(&j.scale(&pairs))?;
    let lhs = inv.transpose().mul(&middle)?.mul(&inv)?;
    let rhs = circulant_w(m)?.sub(&j)?.scale(&half);
    let details = vec![
        equality_check("conjugation-identity", &lhs, &rhs)?,
        Check::new("lhs-symmetric", lhs.is_symmetric()),
    ];
    Ok(CertificateReport::new("conjugation", Some(d as i64), details))
}

/// The 5×5 matrix of pairwise weights used with the pentagon.
pub fn pentagon_b() -> ExactMatrix {
    let one = || rat(1, 1);
    let h = || rat(1, 2);
    ExactMatrix::from_rows(&[
        vec![one(), h(), one(), one(), h()],
        vec![h(), one(), h(), one(), one()],
        vec![one(), h(), one(), h(), one()],
        vec![one(), one(), h(), one(), h()],
        vec![h(), one(), one(), h(), one()],
    ])
    .expect("square")
}

/// The pentagram: the 5-cycle `1-3-5-2-4-1` on `[5]`, zero-indexed.
pub fn pentagram() -> Graph {
    Graph::new(5, [[0, 2], [1, 3], [2, 4], [3, 0], [4, 1]]).expect("valid")
}

/// Checks `(A_2⁻¹)ᵀ B A_2⁻¹ = ½ A_Q` exactly.
pub fn verify_pentagon_identity() -> Result<CertificateReport> {
    let inv = gamma_inverse(2)?;
    let b = pentagon_b();
    let lhs = inv.transpose().mul(&b)?.mul(&inv)?;
    let rhs = adjacency(&pentagram()).scale(&ExactScalar::from_ratio(1, 2));
    let details = vec![
        Check::new("b-symmetric", b.is_symmetric()),
        equality_check("pentagon-identity", &lhs, &rhs)?,
        Check::new("lhs-symmetric", lhs.is_symmetric()),
        Check::new("entry-1-2", lhs.get(0, 1).is_zero()).exact(lhs.get(0, 1).to_string()),
    ];
    Ok(CertificateReport::new("pentagon", None, details))
}

/// `½ zᵀ A_F z - (d·z·z0 - ½·d·m·z0²)` for a `d`-regular `F` on `m`
/// vertices, where `z = Σ z_i`. Requires `min z_i ≥ z0 ≥ 0`.
pub fn quadratic_form_gap(f: &Graph, z: &[Rational], z0: &Rational) -> Result<Rational> {
    let d = f.regular_degree().ok_or(Error::NotRegular)?;
    let m = f.n();
    if z.len() != m {
        return Err(Error::PreconditionViolated(format!(
            "vector of length {} for a graph on {m} vertices",
            z.len()
        )));
    }
    if z0.is_negative() {
        return Err(Error::PreconditionViolated("z0 must be nonnegative".into()));
    }
    if let Some(bad) = z.iter().find(|&zi| zi < z0) {
        return Err(Error::PreconditionViolated(format!(
            "entry {} is below z0 = {}",
            fmt_rational(bad),
            fmt_rational(z0)
        )));
    }
    let two = int(2);
    let lhs = f
        .edges()
        .iter()
        .fold(Rational::zero(), |acc, &[u, v]| acc + &z[u] * &z[v]);
    let total: Rational = z.iter().fold(Rational::zero(), |acc, x| acc + x);
    let dq = int(d as i64);
    let rhs = &dq * &total * z0 - &dq * int(m as i64) * z0 * z0 / &two;
    Ok(lhs - rhs)
}
