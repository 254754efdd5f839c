use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{format_terms, int, power_string, Rational, RingElement};
use crate::error::{EngineError, Result};

/// Element `c0 + c1*T + c2*T^2` of `Q[T]/(T^3)`, the classes on `Pic^3(C)`
/// generated by the theta divisor `T`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ThetaPoly {
    coeffs: [Rational; 3],
}

impl ThetaPoly {
    pub fn new(c0: Rational, c1: Rational, c2: Rational) -> Self {
        Self {
            coeffs: [c0, c1, c2],
        }
    }

    pub fn from_ints(c0: i64, c1: i64, c2: i64) -> Self {
        Self::new(int(c0), int(c1), int(c2))
    }

    pub fn zero() -> Self {
        Self::from_ints(0, 0, 0)
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(c, Rational::zero(), Rational::zero())
    }

    /// The theta class `T`.
    pub fn theta() -> Self {
        Self::from_ints(0, 1, 0)
    }

    /// Coefficient of `T^k`; zero for `k >= 3`.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational; 3] {
        &self.coeffs
    }

    /// Degree-`k` graded piece `c_k * T^k`.
    pub fn graded_part(&self, k: usize) -> Self {
        let mut out = Self::zero();
        if k < 3 {
            out.coeffs[k] = self.coeffs[k].clone();
        }
        out
    }

    pub fn constant_term(&self) -> &Rational {
        &self.coeffs[0]
    }

    /// Inverse of a unit (nonzero constant term); the nilpotent part makes
    /// the geometric series terminate after the `T^2` term.
    pub fn try_inverse(&self) -> Result<Self> {
        let [a, b, c] = &self.coeffs;
        if a.is_zero() {
            return Err(EngineError::NotInvertible(self.to_string()));
        }
        let inv = a.recip();
        // (a + bT + cT^2)^-1 = 1/a - b/a^2 T + (b^2/a^3 - c/a^2) T^2
        let inv2 = &inv * &inv;
        Ok(Self::new(
            inv.clone(),
            -(b * &inv2),
            b * b * &inv2 * &inv - c * &inv2,
        ))
    }
}

impl RingElement for ThetaPoly {
    fn zero_like(&self) -> Self {
        Self::zero()
    }

    fn one_like(&self) -> Self {
        Self::one()
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn check_compatible(&self, _other: &Self) -> Result<()> {
        Ok(())
    }

    fn plus(&self, other: &Self) -> Self {
        let [a0, a1, a2] = &self.coeffs;
        let [b0, b1, b2] = &other.coeffs;
        Self::new(a0 + b0, a1 + b1, a2 + b2)
    }

    fn times(&self, other: &Self) -> Self {
        let [a0, a1, a2] = &self.coeffs;
        let [b0, b1, b2] = &other.coeffs;
        Self::new(a0 * b0, a0 * b1 + a1 * b0, a0 * b2 + a1 * b1 + a2 * b0)
    }

    fn scaled(&self, c: &Rational) -> Self {
        let [a0, a1, a2] = &self.coeffs;
        Self::new(a0 * c, a1 * c, a2 * c)
    }
}

impl fmt::Display for ThetaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = (0..3).map(|k| (&self.coeffs[k], power_string("T", k)));
        f.write_str(&format_terms(terms))
    }
}

impl fmt::Debug for ThetaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ThetaPoly({self})")
    }
}

impl Add for &ThetaPoly {
    type Output = ThetaPoly;
    fn add(self, rhs: Self) -> ThetaPoly {
        self.plus(rhs)
    }
}

impl Sub for &ThetaPoly {
    type Output = ThetaPoly;
    fn sub(self, rhs: Self) -> ThetaPoly {
        self.minus(rhs)
    }
}

impl Mul for &ThetaPoly {
    type Output = ThetaPoly;
    fn mul(self, rhs: Self) -> ThetaPoly {
        self.times(rhs)
    }
}

impl Neg for &ThetaPoly {
    type Output = ThetaPoly;
    fn neg(self) -> ThetaPoly {
        self.negated()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::frac;

    #[test]
    fn theta_cubed_vanishes() {
        let t = ThetaPoly::theta();
        let t2 = &t * &t;
        assert_eq!(t2, ThetaPoly::from_ints(0, 0, 1));
        assert!((&t2 * &t).is_zero());
    }

    #[test]
    fn inverse_of_unit() {
        let x = ThetaPoly::new(frac(3, 2), int(-2), frac(1, 7));
        let inv = x.try_inverse().unwrap();
        assert!((&x * &inv).is_one());
        assert!(ThetaPoly::theta().try_inverse().is_err());
    }

    #[test]
    fn display() {
        assert_eq!(ThetaPoly::from_ints(2, -1, 0).to_string(), "2 - T");
        assert_eq!(
            ThetaPoly::new(int(0), int(0), frac(1, 2)).to_string(),
            "1/2*T^2"
        );
        assert_eq!(ThetaPoly::zero().to_string(), "0");
    }
}
