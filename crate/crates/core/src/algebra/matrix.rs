use std::fmt;

use super::scalar::{ExactScalar, Rational};
use crate::error::{Error, Result};

/// Dense square matrix over `Q(√5)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    m: usize,
    entries: Vec<ExactScalar>,
}

impl ExactMatrix {
    pub fn zeros(m: usize) -> Self {
        ExactMatrix { m, entries: vec![ExactScalar::zero(); m * m] }
    }

    pub fn identity(m: usize) -> Self {
        Self::from_fn(m, |i, j| if i == j { ExactScalar::one() } else { ExactScalar::zero() })
    }

    pub fn from_fn(m: usize, mut f: impl FnMut(usize, usize) -> ExactScalar) -> Self {
        let mut entries = Vec::with_capacity(m * m);
        for i in 0..m {
            for j in 0..m {
                entries.push(f(i, j));
            }
        }
        ExactMatrix { m, entries }
    }

    /// Builds a matrix from rational rows; every row must have length `rows.len()`.
    pub fn from_rows(rows: &[Vec<Rational>]) -> Result<Self> {
        let m = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != m) {
            return Err(Error::PreconditionViolated(format!(
                "row of length {} in a {m}x{m} matrix",
                bad.len()
            )));
        }
        Ok(Self::from_fn(m, |i, j| ExactScalar::rational(rows[i][j].clone())))
    }

    pub fn dim(&self) -> usize {
        self.m
    }

    pub fn get(&self, i: usize, j: usize) -> &ExactScalar {
        &self.entries[i * self.m + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: ExactScalar) {
        self.entries[i * self.m + j] = value;
    }

    fn same_dim(&self, other: &Self) -> Result<()> {
        if self.m == other.m {
            Ok(())
        } else {
            Err(Error::PreconditionViolated(format!(
                "dimension mismatch: {} vs {}",
                self.m, other.m
            )))
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_dim(other)?;
        let m = self.m;
        let mut out = Self::zeros(m);
        for i in 0..m {
            for k in 0..m {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..m {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * m + j;
                        out.entries[idx] = &out.entries[idx] + &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_dim(other)?;
        Ok(self.zip(other, |a, b| a + b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_dim(other)?;
        Ok(self.zip(other, |a, b| a - b))
    }

    fn zip(&self, other: &Self, f: impl Fn(&ExactScalar, &ExactScalar) -> ExactScalar) -> Self {
        ExactMatrix {
            m: self.m,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn scale(&self, c: &ExactScalar) -> Self {
        ExactMatrix { m: self.m, entries: self.entries.iter().map(|x| x * c).collect() }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.m, |i, j| self.get(j, i).clone())
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.m).all(|i| (i + 1..self.m).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Largest absolute entry of `self - other`.
    pub fn max_deviation(&self, other: &Self) -> Result<ExactScalar> {
        Ok(self
            .sub(other)?
            .entries
            .into_iter()
            .map(|x| x.abs())
            .max()
            .unwrap_or_default())
    }

    /// `xᵀ M x` for a rational vector.
    pub fn quadratic_form(&self, x: &[Rational]) -> Result<ExactScalar> {
        if x.len() != self.m {
            return Err(Error::PreconditionViolated(format!(
                "vector of length {} for a {}x{} matrix",
                x.len(),
                self.m,
                self.m
            )));
        }
        let mut acc = ExactScalar::zero();
        for i in 0..self.m {
            for j in 0..self.m {
                let e = self.get(i, j);
                if !e.is_zero() {
                    acc = acc + e * &ExactScalar::rational(&x[i] * &x[j]);
                }
            }
        }
        Ok(acc)
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.m {
            let row: Vec<String> = (0..self.m).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
