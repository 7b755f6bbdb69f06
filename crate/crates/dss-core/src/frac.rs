//! Minimal exact fractions for slope comparisons.
//!
//! Slope-bound endpoints can be negative or projectively infinite (a zero
//! denominator stands for +/- infinity, which appears as the open end of a
//! degenerate bound), so this is a signed projective fraction rather than a
//! plain rational: the denominator is kept nonnegative and values compare by
//! cross-multiplication.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

/// An exact fraction `num/den` with `den >= 0`; `den == 0` encodes a signed
/// infinity. Stored reduced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Frac {
    num: i128,
    den: i128,
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Frac {
    pub fn new(num: i128, den: i128) -> Self {
        assert!(num != 0 || den != 0, "0/0 is not a fraction");
        let (mut num, mut den) = if den < 0 { (-num, -den) } else { (num, den) };
        let g = gcd(num, den);
        if g > 1 {
            num /= g;
            den /= g;
        }
        Self { num, den }
    }

    pub const ZERO: Frac = Frac { num: 0, den: 1 };

    pub fn num(&self) -> i128 {
        self.num
    }

    pub fn den(&self) -> i128 {
        self.den
    }

    pub fn is_infinite(&self) -> bool {
        self.den == 0
    }

    pub fn abs(self) -> Self {
        Self {
            num: self.num.abs(),
            den: self.den,
        }
    }

    /// Difference; panics on inf - inf of equal sign (never formed here).
    pub fn sub(self, other: Self) -> Self {
        if self.is_infinite() || other.is_infinite() {
            assert!(
                !(self.is_infinite() && other.is_infinite() && self.num.signum() == other.num.signum()),
                "inf - inf"
            );
            return if self.is_infinite() {
                self
            } else {
                Self::new(-other.num, 0)
            };
        }
        Self::new(self.num * other.den - other.num * self.den, self.den * other.den)
    }
}

impl PartialOrd for Frac {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Frac {
    fn cmp(&self, other: &Self) -> Ordering {
        // valid for nonnegative denominators, not both zero unless signs differ
        (self.num * other.den).cmp(&(other.num * self.den))
    }
}

impl fmt::Display for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl From<(i64, i64)> for Frac {
    fn from((n, d): (i64, i64)) -> Self {
        Self::new(n as i128, d as i128)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_and_reduction() {
        assert_eq!(Frac::new(2, 4), Frac::new(1, 2));
        assert_eq!(Frac::new(1, -2), Frac::new(-1, 2));
        assert!(Frac::new(-1, 2) < Frac::ZERO);
        assert!(Frac::new(1, 3) < Frac::new(2, 5));
        assert!(Frac::new(5, 13) < Frac::new(1, 0));
        assert!(Frac::new(-1, 0) < Frac::new(-1000, 1));
    }

    #[test]
    fn subtraction_with_infinities() {
        assert_eq!(Frac::new(1, 2).sub(Frac::new(1, 3)), Frac::new(1, 6));
        assert!(Frac::new(1, 0).sub(Frac::new(7, 2)).is_infinite());
        assert_eq!(Frac::new(1, 2).sub(Frac::new(1, 0)), Frac::new(-1, 0));
    }
}
