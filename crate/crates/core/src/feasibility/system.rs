use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use crate::algebra::{rational_to_f64, ExactScalar, Rational};
use crate::error::{Error, Result};

/// A monomial of degree at most two; quadratic indices are stored `i ≤ j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Monomial {
    Const,
    Linear(usize),
    Quadratic(usize, usize),
}

impl Monomial {
    fn canonical(self) -> Self {
        match self {
            Monomial::Quadratic(i, j) if i > j => Monomial::Quadratic(j, i),
            m => m,
        }
    }

    fn max_var(self) -> Option<usize> {
        match self {
            Monomial::Const => None,
            Monomial::Linear(i) => Some(i),
            Monomial::Quadratic(_, j) => Some(j),
        }
    }
}

/// Polynomial of degree at most two with rational coefficients; like
/// monomials are merged and zero coefficients dropped.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QuadPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl QuadPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, monomial: Monomial, coeff: Rational) {
        let key = monomial.canonical();
        let entry = self.terms.entry(key).or_insert_with(Rational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn with_term(mut self, monomial: Monomial, coeff: Rational) -> Self {
        self.add_term(monomial, coeff);
        self
    }

    /// `Σ c_i x_i`.
    pub fn linear(terms: impl IntoIterator<Item = (usize, Rational)>) -> Self {
        let mut p = Self::zero();
        for (i, c) in terms {
            p.add_term(Monomial::Linear(i), c);
        }
        p
    }

    /// `Σ c · x_i x_j` over the given pairs.
    pub fn quadratic(terms: impl IntoIterator<Item = (usize, usize, Rational)>) -> Self {
        let mut p = Self::zero();
        for (i, j, c) in terms {
            p.add_term(Monomial::Quadratic(i, j), c);
        }
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn max_var(&self) -> Option<usize> {
        self.terms.keys().filter_map(|m| m.max_var()).max()
    }

    pub fn eval(&self, x: &[Rational]) -> Rational {
        self.terms.iter().fold(Rational::zero(), |acc, (m, c)| {
            acc + match *m {
                Monomial::Const => c.clone(),
                Monomial::Linear(i) => c * &x[i],
                Monomial::Quadratic(i, j) => c * &x[i] * &x[j],
            }
        })
    }
}

/// Where the variables live; the scan works on the closure.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Domain {
    /// Coordinates sum to one, each positive.
    Simplex,
    /// Each coordinate positive.
    Orthant,
}

/// `lhs(x) > threshold`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub label: String,
    /// Constraints sharing a group share a threshold, so a group can be
    /// weakened as a unit.
    pub group: String,
    pub lhs: QuadPoly,
    pub threshold: ExactScalar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstraintSystem {
    vars: usize,
    domain: Domain,
    constraints: Vec<Constraint>,
}

impl ConstraintSystem {
    pub fn new(vars: usize, domain: Domain) -> Self {
        ConstraintSystem { vars, domain, constraints: Vec::new() }
    }

    pub fn add(
        &mut self,
        label: impl Into<String>,
        group: impl Into<String>,
        lhs: QuadPoly,
        threshold: ExactScalar,
    ) -> Result<()> {
        if let Some(v) = lhs.max_var().filter(|&v| v >= self.vars) {
            return Err(Error::OutOfRange { vertex: v, n: self.vars });
        }
        self.constraints.push(Constraint {
            label: label.into(),
            group: group.into(),
            lhs,
            threshold,
        });
        Ok(())
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    /// Copy with every constraint of `group` given a new threshold.
    pub fn with_group_threshold(&self, group: &str, threshold: ExactScalar) -> Self {
        let mut out = self.clone();
        for c in out.constraints.iter_mut().filter(|c| c.group == group) {
            c.threshold = threshold.clone();
        }
        out
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len == self.vars {
            Ok(())
        } else {
            Err(Error::PreconditionViolated(format!(
                "point has {len} coordinates, system has {} variables",
                self.vars
            )))
        }
    }

    /// Whether `x` lies in the closure of the domain.
    pub fn in_closed_domain(&self, x: &[Rational]) -> bool {
        x.len() == self.vars
            && x.iter().all(|v| !v.is_negative())
            && (self.domain == Domain::Orthant
                || x.iter().fold(Rational::zero(), |a, v| a + v) == Rational::from_integer(1.into()))
    }

    pub fn in_open_domain(&self, x: &[Rational]) -> bool {
        self.in_closed_domain(x) && x.iter().all(Signed::is_positive)
    }

    /// `lhs(x) - threshold` for every constraint.
    pub fn slacks(&self, x: &[Rational]) -> Result<Vec<ExactScalar>> {
        self.check_len(x.len())?;
        Ok(self
            .constraints
            .iter()
            .map(|c| ExactScalar::rational(c.lhs.eval(x)) - &c.threshold)
            .collect())
    }

    /// Smallest slack; positive exactly when `x` satisfies every constraint.
    pub fn min_slack(&self, x: &[Rational]) -> Result<ExactScalar> {
        Ok(self.slacks(x)?.into_iter().min().unwrap_or_default())
    }

    pub fn compile(&self) -> FloatSystem {
        FloatSystem {
            vars: self.vars,
            constraints: self
                .constraints
                .iter()
                .map(|c| {
                    let mut fc = FloatConstraint {
                        offset: -c.threshold.to_f64(),
                        ..FloatConstraint::default()
                    };
                    for (m, coef) in c.lhs.terms() {
                        let k = rational_to_f64(coef);
                        match *m {
                            Monomial::Const => fc.offset += k,
                            Monomial::Linear(i) => fc.linear.push((i, k)),
                            Monomial::Quadratic(i, j) => fc.quadratic.push((i, j, k)),
                        }
                    }
                    fc
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Default)]
struct FloatConstraint {
    offset: f64,
    linear: Vec<(usize, f64)>,
    quadratic: Vec<(usize, usize, f64)>,
}

/// Double-precision copy of a [`ConstraintSystem`] for fast scanning.
#[derive(Clone, Debug)]
pub struct FloatSystem {
    vars: usize,
    constraints: Vec<FloatConstraint>,
}

impl FloatSystem {
    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn min_slack(&self, x: &[f64]) -> f64 {
        self.constraints
            .iter()
            .map(|c| {
                let lin: f64 = c.linear.iter().map(|&(i, k)| k * x[i]).sum();
                let quad: f64 = c.quadratic.iter().map(|&(i, j, k)| k * x[i] * x[j]).sum();
                c.offset + lin + quad
            })
            .fold(f64::INFINITY, f64::min)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};

    #[test]
    fn canonical_terms() {
        let p = QuadPoly::zero()
            .with_term(Monomial::Quadratic(2, 1), int(3))
            .with_term(Monomial::Quadratic(1, 2), int(-3))
            .with_term(Monomial::Const, rat(1, 2));
        assert_eq!(p.terms().count(), 1);
        assert_eq!(p.eval(&[int(0), int(5), int(7)]), rat(1, 2));
    }

    #[test]
    fn slacks_exact_and_float_agree() {
        let mut s = ConstraintSystem::new(2, Domain::Simplex);
        s.add("xy", "q", QuadPoly::quadratic([(0, 1, int(1))]), ExactScalar::from_ratio(1, 5))
            .unwrap();
        s.add("x", "l", QuadPoly::linear([(0, int(1))]), ExactScalar::from_ratio(1, 3))
            .unwrap();
        let x = [rat(1, 2), rat(1, 2)];
        assert!(s.in_open_domain(&x));
        let slacks = s.slacks(&x).unwrap();
        assert_eq!(slacks, vec![ExactScalar::from_ratio(1, 20), ExactScalar::from_ratio(1, 6)]);
        assert_eq!(s.min_slack(&x).unwrap(), ExactScalar::from_ratio(1, 20));
        assert!((s.compile().min_slack(&[0.5, 0.5]) - 0.05).abs() < 1e-15);
        let weak = s.with_group_threshold("q", ExactScalar::from_ratio(1, 2));
        assert!(weak.min_slack(&x).unwrap().sign() < 0);
        assert!(s.add("bad", "q", QuadPoly::linear([(2, int(1))]), ExactScalar::zero()).is_err());
        assert!(!s.in_closed_domain(&[rat(1, 2), rat(1, 3)]));
    }
}
