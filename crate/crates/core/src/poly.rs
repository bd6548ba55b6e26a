//! Univariate polynomials over an exact signed scalar.
//!
//! The coefficient type is generic via `num-traits`; the crate root
//! fixes the concrete alias `IntPoly = Poly<i64>` used for all weights
//! and expansion coefficients.  Coefficients are stored densely from
//! degree 0 with trailing zeros trimmed, so derived equality is
//! polynomial equality.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_traits::Signed;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Exact signed scalars usable as polynomial coefficients.
pub trait Coeff: Signed + Copy + Ord + fmt::Debug + fmt::Display + 'static {}

impl<T> Coeff for T where T: Signed + Copy + Ord + fmt::Debug + fmt::Display + 'static {}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Poly<C> {
    coeffs: Vec<C>,
}

impl<C: Coeff> Poly<C> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Poly { coeffs: vec![c] }.trimmed()
    }

    /// The monomial `t^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![C::zero(); k + 1];
        coeffs[k] = C::one();
        Poly { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        Poly { coeffs }.trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.coeffs.last().map(|c| c.is_zero()) == Some(true) {
            self.coeffs.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `t^k`.
    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).copied().unwrap_or_else(C::zero)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Value at `t = 1`: the sum of the coefficients.
    pub fn eval_at_one(&self) -> C {
        self.coeffs.iter().fold(C::zero(), |acc, &c| acc + c)
    }

    pub fn scale(&self, c: C) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(|&a| a * c).collect(),
        }
        .trimmed()
    }
}

impl<C: Coeff> Add for &Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: &Poly<C>) -> Poly<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        Poly { coeffs }.trimmed()
    }
}

impl<C: Coeff> Sub for &Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: &Poly<C>) -> Poly<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        Poly { coeffs }.trimmed()
    }
}

impl<C: Coeff> Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        Poly {
            coeffs: self.coeffs.iter().map(|&c| C::zero() - c).collect(),
        }
    }
}

impl<C: Coeff> Mul for &Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: &Poly<C>) -> Poly<C> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j] + a * b;
            }
        }
        Poly { coeffs }.trimmed()
    }
}

impl<C: Coeff> AddAssign<&Poly<C>> for Poly<C> {
    fn add_assign(&mut self, rhs: &Poly<C>) {
        *self = &*self + rhs;
    }
}

impl<C: Coeff> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = mag.is_one();
            match (k, unit_coeff) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag}t")?,
                (_, true) => write!(f, "t^{k}")?,
                (_, false) => write!(f, "{mag}t^{k}")?,
            }
        }
        Ok(())
    }
}

impl<C: Coeff + Serialize> Serialize for Poly<C> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs.serialize(s)
    }
}

impl<'de, C: Coeff + Deserialize<'de>> Deserialize<'de> for Poly<C> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(Poly::from_coeffs(Vec::<C>::deserialize(d)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = Poly<i64>;

    #[test]
    fn arithmetic() {
        let a = P::from_coeffs(vec![1, 2]); // 1 + 2t
        let b = P::from_coeffs(vec![0, 1]); // t
        assert_eq!(&a + &b, P::from_coeffs(vec![1, 3]));
        assert_eq!(&a - &a, P::zero());
        assert_eq!(&a * &b, P::from_coeffs(vec![0, 1, 2]));
        assert_eq!(P::monomial(2), P::from_coeffs(vec![0, 0, 1]));
        assert_eq!(a.eval_at_one(), 3);
    }

    #[test]
    fn trims_trailing_zeros() {
        assert_eq!(P::from_coeffs(vec![1, 0, 0]), P::constant(1));
        assert!(P::from_coeffs(vec![0, 0]).is_zero());
        assert_eq!(P::from_coeffs(vec![0, 1]).degree(), Some(1));
    }

    #[test]
    fn display() {
        assert_eq!(P::zero().to_string(), "0");
        assert_eq!(P::one().to_string(), "1");
        assert_eq!(P::monomial(1).to_string(), "t");
        assert_eq!(P::from_coeffs(vec![1, 0, 2]).to_string(), "1 + 2t^2");
        assert_eq!(P::from_coeffs(vec![-1, 1]).to_string(), "-1 + t");
        assert_eq!(P::from_coeffs(vec![1, -3]).to_string(), "1 - 3t");
    }
}
