use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::algebra::{fmt_rational, int, Rational};

/// Univariate polynomial with rational coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Integer coefficients, lowest degree first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn x() -> Self {
        Self::from_ints(&[0, 1])
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::constant(Rational::one()), |acc, _| &acc * self)
    }

    /// `p(a + t)` as a polynomial in `t`.
    pub fn taylor_shift(&self, a: &Rational) -> Self {
        let base = Poly::new(vec![a.clone(), Rational::one()]);
        let mut out = Poly::default();
        let mut power = Poly::constant(Rational::one());
        for c in &self.coeffs {
            out = &out + &power.scale(c);
            power = &power * &base;
        }
        out
    }

    /// An upper bound for `p` on `[lo, hi]`, valid when `0 ≤ lo ≤ hi`:
    /// positive terms are bounded at `hi`, negative ones at `lo`.
    pub fn upper_bound_on(&self, lo: &Rational, hi: &Rational) -> Rational {
        debug_assert!(!lo.is_negative() && lo <= hi);
        let mut acc = Rational::zero();
        let (mut plo, mut phi) = (Rational::one(), Rational::one());
        for c in &self.coeffs {
            acc += if c.is_positive() { c * &phi } else { c * &plo };
            plo *= lo;
            phi *= hi;
        }
        acc
    }

    /// Tries to certify `p < 0` on `[lo, hi]` (with `lo ≥ 0`) by bisecting
    /// until the interval upper bound is negative, never going below
    /// `min_width`.
    pub fn certify_negative(&self, lo: &Rational, hi: &Rational, min_width: &Rational) -> Negativity {
        let mut stack = vec![(lo.clone(), hi.clone())];
        let mut cert = Negativity {
            holds: true,
            intervals: Vec::new(),
            worst_bound: None,
        };
        while let Some((l, r)) = stack.pop() {
            let bound = self.upper_bound_on(&l, &r);
            if bound.is_negative() {
                if cert.worst_bound.as_ref().is_none_or(|w| &bound > w) {
                    cert.worst_bound = Some(bound);
                }
                cert.intervals.push((l, r));
                continue;
            }
            if &r - &l <= *min_width {
                cert.holds = false;
                cert.intervals.push((l, r));
                return cert;
            }
            let mid = (&l + &r) / int(2);
            stack.push((mid.clone(), r));
            stack.push((l, mid));
        }
        cert.intervals.sort();
        cert
    }
}

/// Outcome of [`Poly::certify_negative`].
#[derive(Clone, Debug)]
pub struct Negativity {
    pub holds: bool,
    /// The covering intervals, or the offending interval when `holds` is false.
    pub intervals: Vec<(Rational, Rational)>,
    /// Largest interval upper bound among the certified pieces.
    pub worst_bound: Option<Rational>,
}

/// Square root of a rational that is a perfect square.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let root = |n: &BigInt| {
        let r = n.sqrt();
        (&r * &r == *n).then_some(r)
    };
    Some(Rational::new(root(q.numer())?, root(q.denom())?))
}

/// Rational roots `r1 ≤ r2` of `a x² + b x + c` when the discriminant is a
/// rational square.
pub fn quadratic_roots(p: &Poly) -> Option<(Rational, Rational)> {
    if p.degree() != Some(2) {
        return None;
    }
    let (c, b, a) = (p.coeff(0), p.coeff(1), p.coeff(2));
    let disc = &b * &b - int(4) * &a * &c;
    let s = rational_sqrt(&disc)?;
    let two_a = int(2) * &a;
    let r1 = (-&b - &s) / &two_a;
    let r2 = (-&b + &s) / &two_a;
    Some(if r1 <= r2 { (r1, r2) } else { (r2, r1) })
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        self + &(-o)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::default();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            let show_coeff = k == 0 || !mag.is_one();
            if show_coeff {
                let s = fmt_rational(&mag);
                if k > 0 && !mag.is_integer() {
                    write!(f, "({s})")?;
                } else {
                    f.write_str(&s)?;
                }
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn arithmetic_and_display() {
        let cubic = Poly::from_ints(&[-16, 96, -225, 135]);
        assert_eq!(cubic.to_string(), "135x^3 - 225x^2 + 96x - 16");
        assert_eq!(cubic.eval(&int(0)), int(-16));
        assert_eq!(cubic.eval(&int(1)), int(-10));
        let p = &Poly::from_ints(&[1, 1]) * &Poly::from_ints(&[-1, 1]);
        assert_eq!(p, Poly::from_ints(&[-1, 0, 1]));
        assert_eq!(Poly::from_ints(&[0, 0]).degree(), None);
    }

    #[test]
    fn taylor_shift_matches_evaluation() {
        let p = Poly::from_ints(&[7, -3, 0, 2]);
        let a = rat(5, 3);
        let q = p.taylor_shift(&a);
        for t in [-2, 0, 1, 4] {
            assert_eq!(q.eval(&int(t)), p.eval(&(&a + int(t))));
        }
    }

    #[test]
    fn negativity_certificates() {
        let cubic = Poly::from_ints(&[-16, 96, -225, 135]);
        let w = rat(1, 1 << 20);
        let cert = cubic.certify_negative(&int(0), &int(1), &w);
        assert!(cert.holds);
        // x - 1/2 changes sign inside [0, 1]
        let bad = Poly::new(vec![rat(-1, 2), int(1)]);
        assert!(!bad.certify_negative(&int(0), &int(1), &w).holds);
    }

    #[test]
    fn roots_of_quadratics() {
        // -x² + x - 2/9 = -(x - 1/3)(x - 2/3)
        let p = Poly::new(vec![rat(-2, 9), int(1), int(-1)]);
        assert_eq!(quadratic_roots(&p), Some((rat(1, 3), rat(2, 3))));
        assert_eq!(quadratic_roots(&Poly::from_ints(&[-2, 0, 1])), None);
        assert_eq!(rational_sqrt(&rat(9, 49)), Some(rat(3, 7)));
    }
}
