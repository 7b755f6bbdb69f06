//! Canonical finite continued fractions for slopes in [0,1] and their
//! convergents.
//!
//! A slope is written `[0, u1, ..., un]` with every `u_i >= 1` and the last
//! coefficient at least two, except for slope 1 = `[0,1]`. The flat slope 0/1
//! is the depth-zero fraction `[0]`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Parity {
    Even,
    Odd,
}

/// A canonical continued fraction with value in [0, 1].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ContinuedFraction {
    coeffs: Vec<i64>,
}

impl ContinuedFraction {
    /// The flat slope 0/1 = `[0]`.
    pub fn flat() -> Self {
        Self { coeffs: vec![0] }
    }

    /// Canonical development of the reduced fraction a/b in [0, 1].
    pub fn from_fraction(a: i64, b: i64) -> Result<Self> {
        if b < 1 || !(0..=b).contains(&a) || gcd(a, b) != 1 {
            return Err(Error::InvalidSlope { a, b });
        }
        if a == 0 {
            return Ok(Self::flat());
        }
        // plain Euclid yields the canonical form (last coefficient >= 2,
        // except 1/1 -> [0,1])
        let mut coeffs = vec![0];
        let (mut num, mut den) = (b, a);
        while den != 0 {
            coeffs.push(num / den);
            (num, den) = (den, num % den);
        }
        Ok(Self { coeffs })
    }

    /// Canonicalize raw coefficients: a trailing 1 merges into its
    /// predecessor, `[.., u, 1] -> [.., u+1]`.
    pub fn canonicalize(coeffs: Vec<i64>) -> Result<Self> {
        if coeffs.first() != Some(&0) {
            return Err(Error::InvalidCoefficients(format!(
                "leading coefficient must be 0, got {coeffs:?}"
            )));
        }
        if coeffs.iter().skip(1).any(|&u| u < 1) {
            return Err(Error::InvalidCoefficients(format!(
                "coefficients after the first must be positive, got {coeffs:?}"
            )));
        }
        let mut coeffs = coeffs;
        if coeffs.len() > 2 && *coeffs.last().unwrap() == 1 {
            coeffs.pop();
            *coeffs.last_mut().unwrap() += 1;
        }
        Ok(Self { coeffs })
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Depth n of `[0, u1, ..., un]`; the flat slope has depth 0.
    pub fn depth(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn parity(&self) -> Parity {
        if self.depth() % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_flat(&self) -> bool {
        self.depth() == 0
    }

    /// The reduced fraction (p, q) this development denotes.
    pub fn value(&self) -> (i64, i64) {
        let t = self.convergents();
        *t.pairs().last().unwrap()
    }

    /// The full convergent table (p_k, q_k) for k = -1 ..= depth.
    pub fn convergents(&self) -> ConvergentTable {
        let mut pairs = Vec::with_capacity(self.coeffs.len() + 1);
        pairs.push((1i64, 0i64)); // k = -1
        pairs.push((0, 1)); // k = 0
        for &u in &self.coeffs[1..] {
            let n = pairs.len();
            let (p1, q1) = pairs[n - 1];
            let (p2, q2) = pairs[n - 2];
            let p = u
                .checked_mul(p1)
                .and_then(|t| t.checked_add(p2))
                .expect("convergent numerator overflow");
            let q = u
                .checked_mul(q1)
                .and_then(|t| t.checked_add(q2))
                .expect("convergent denominator overflow");
            pairs.push((p, q));
        }
        ConvergentTable { pairs }
    }
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, u) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{u}")?;
        }
        write!(f, "]")
    }
}

/// Convergents (p_k, q_k) of a continued fraction, indexed from k = -1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvergentTable {
    pairs: Vec<(i64, i64)>,
}

impl ConvergentTable {
    /// Pairs for k = -1, 0, ..., n in order.
    pub fn pairs(&self) -> &[(i64, i64)] {
        &self.pairs[1..]
    }

    /// (p_k, q_k) for k in [-1, depth].
    pub fn pair(&self, k: isize) -> (i64, i64) {
        self.pairs[(k + 1) as usize]
    }

    pub fn depth(&self) -> usize {
        self.pairs.len() - 2
    }

    /// Final convergent (p_n, q_n) = the value.
    pub fn last(&self) -> (i64, i64) {
        *self.pairs.last().unwrap()
    }

    /// Next-to-last convergent (p_{n-1}, q_{n-1}).
    pub fn previous(&self) -> (i64, i64) {
        self.pairs[self.pairs.len() - 2]
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
