use std::fmt;

use num_traits::One;

use super::{int, Rational, RingElement};
use crate::error::{EngineError, Result};

/// Polynomial in a formal variable `t` truncated after `t^order`, with
/// coefficients in a commutative ring `R`. Used for Chern polynomials
/// `c_t(E)` and the series manipulations around them.
#[derive(Clone, PartialEq)]
pub struct ChernSeries<R> {
    order: usize,
    coeffs: Vec<R>,
}

impl<R: RingElement> ChernSeries<R> {
    /// Builds a series from leading coefficients. Missing coefficients up to
    /// `order` are zero; coefficients past `order` are dropped.
    pub fn new(mut coeffs: Vec<R>, order: usize) -> Result<Self> {
        let Some(first) = coeffs.first() else {
            return Err(EngineError::IndexOutOfRange(
                "a series needs at least one coefficient to fix its ring".into(),
            ));
        };
        for c in &coeffs[1..] {
            first.check_compatible(c)?;
        }
        let zero = first.zero_like();
        coeffs.resize(order + 1, zero);
        Ok(Self { order, coeffs })
    }

    pub fn constant(c: R, order: usize) -> Self {
        let zero = c.zero_like();
        let mut coeffs = vec![zero; order + 1];
        coeffs[0] = c;
        Self { order, coeffs }
    }

    /// The unit series `1` in the ring of `like`.
    pub fn one(like: &R, order: usize) -> Self {
        Self::constant(like.one_like(), order)
    }

    /// `c * t^power`, zero if `power > order`.
    pub fn monomial(c: R, power: usize, order: usize) -> Self {
        let mut out = Self::constant(c.zero_like(), order);
        if power <= order {
            out.coeffs[power] = c;
        }
        out
    }

    /// The formal variable `t`.
    pub fn variable(like: &R, order: usize) -> Self {
        Self::monomial(like.one_like(), 1, order)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficient of `t^k`, `None` past the truncation order.
    pub fn coeff(&self, k: usize) -> Option<&R> {
        self.coeffs.get(k)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn constant_term(&self) -> &R {
        &self.coeffs[0]
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        Self {
            order,
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn check_compatible(&self, other: &Self) -> Result<()> {
        self.coeffs[0].check_compatible(&other.coeffs[0])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(RingElement::is_zero)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let order = self.order.min(other.order);
        let coeffs = (0..=order)
            .map(|k| self.coeffs[k].plus(&other.coeffs[k]))
            .collect();
        Ok(Self { order, coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            order: self.order,
            coeffs: self.coeffs.iter().map(|x| x.scaled(c)).collect(),
        }
    }

    /// Multiplies every coefficient by a ring element.
    pub fn scale_by(&self, c: &R) -> Result<Self> {
        self.coeffs[0].check_compatible(c)?;
        Ok(Self {
            order: self.order,
            coeffs: self.coeffs.iter().map(|x| x.times(c)).collect(),
        })
    }

    /// Cauchy product truncated at the smaller of the two orders.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let order = self.order.min(other.order);
        let mut coeffs = vec![self.coeffs[0].zero_like(); order + 1];
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] = coeffs[i + j].plus(&a.times(b));
                }
            }
        }
        Ok(Self { order, coeffs })
    }

    /// Multiplicative inverse of a series with constant term `1`.
    pub fn inv(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(EngineError::NonUnitConstant(format!(
                "{:?}",
                self.coeffs[0]
            )));
        }
        let mut out: Vec<R> = Vec::with_capacity(self.order + 1);
        out.push(self.coeffs[0].one_like());
        for k in 1..=self.order {
            let mut acc = self.coeffs[0].zero_like();
            for i in 1..=k {
                if !self.coeffs[i].is_zero() {
                    acc = acc.plus(&self.coeffs[i].times(&out[k - i]));
                }
            }
            out.push(acc.negated());
        }
        Ok(Self {
            order: self.order,
            coeffs: out,
        })
    }

    pub fn pow(&self, mut exp: u32) -> Result<Self> {
        let mut acc = Self::one(&self.coeffs[0], self.order);
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Integer power; negative exponents go through [`ChernSeries::inv`].
    pub fn powi(&self, exp: i64) -> Result<Self> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let e = u32::try_from(exp.unsigned_abs())
            .map_err(|_| EngineError::Overflow(format!("series exponent {exp}")))?;
        base.pow(e)
    }

    /// `exp(x)` for `x` with zero constant term. Since `x^j` starts at `t^j`,
    /// at most `order` powers contribute.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(EngineError::NonzeroConstant(format!(
                "{:?}",
                self.coeffs[0]
            )));
        }
        let mut sum = Self::one(&self.coeffs[0], self.order);
        let mut power = sum.clone();
        let mut factorial = Rational::one();
        for j in 1..=self.order {
            power = power.mul(self)?;
            if power.is_zero() {
                break;
            }
            factorial *= int(j as i64);
            sum = sum.add(&power.scale(&factorial.recip()))?;
        }
        Ok(sum)
    }

    /// Composition `self(g(t))` for `g` with zero constant term, truncated at
    /// the smaller order.
    pub fn subst(&self, g: &Self) -> Result<Self> {
        self.check_compatible(g)?;
        if !g.coeffs[0].is_zero() {
            return Err(EngineError::NonzeroConstant(format!("{:?}", g.coeffs[0])));
        }
        let order = self.order.min(g.order);
        let g = g.truncate(order);
        let last = (0..=order)
            .rev()
            .find(|&k| !self.coeffs[k].is_zero())
            .unwrap_or(0);
        let mut acc = Self::constant(self.coeffs[0].clone(), order);
        let mut power = Self::one(&self.coeffs[0], order);
        for k in 1..=last {
            power = power.mul(&g)?;
            if !self.coeffs[k].is_zero() {
                acc = acc.add(&power.scale_by(&self.coeffs[k])?)?;
            }
        }
        Ok(acc)
    }

    /// `t -> -t`, i.e. `c_t(E) -> c_t(E^*)` for a Chern polynomial.
    pub fn reflect(&self) -> Self {
        let minus_one = -Rational::one();
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| {
                if k % 2 == 1 {
                    c.scaled(&minus_one)
                } else {
                    c.clone()
                }
            })
            .collect();
        Self {
            order: self.order,
            coeffs,
        }
    }

    /// Applies a ring map coefficientwise.
    pub fn map<S, F>(&self, f: F) -> Result<ChernSeries<S>>
    where
        S: RingElement,
        F: Fn(&R) -> Result<S>,
    {
        let coeffs = self.coeffs.iter().map(f).collect::<Result<Vec<_>>>()?;
        ChernSeries::new(coeffs, self.order)
    }
}

impl<R: RingElement + fmt::Display> fmt::Display for ChernSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*t")?,
                _ => write!(f, "({c})*t^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(t^{})", self.order + 1)
    }
}

impl<R: RingElement + fmt::Display> fmt::Debug for ChernSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ChernSeries({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{frac, AmbientClass, ThetaPoly};

    fn theta_series(coeffs: &[ThetaPoly], order: usize) -> ChernSeries<ThetaPoly> {
        ChernSeries::new(coeffs.to_vec(), order).unwrap()
    }

    fn amb(d: u32, terms: &[(usize, usize, i64)]) -> AmbientClass {
        AmbientClass::from_terms(d, terms.iter().map(|&(a, b, c)| (a, b, int(c)))).unwrap()
    }

    fn one_minus_ht(d: u32, order: usize) -> ChernSeries<AmbientClass> {
        ChernSeries::new(vec![amb(d, &[(0, 0, 1)]), amb(d, &[(0, 1, -1)])], order).unwrap()
    }

    #[test]
    fn product_of_conjugates() {
        let t = ThetaPoly::theta();
        let a = theta_series(&[ThetaPoly::one(), t.clone()], 4);
        let b = theta_series(&[ThetaPoly::one(), -&t], 4);
        let expected = theta_series(
            &[
                ThetaPoly::one(),
                ThetaPoly::zero(),
                ThetaPoly::from_ints(0, 0, -1),
            ],
            4,
        );
        assert_eq!(a.mul(&b).unwrap(), expected);
        assert_eq!(a.mul(&ChernSeries::one(&t, 4)).unwrap(), a);
    }

    #[test]
    fn telescoping_product() {
        // (1 + ht)(1 - ht + h^2t^2) = 1 + h^3t^3
        let d = 10;
        let a = ChernSeries::new(vec![amb(d, &[(0, 0, 1)]), amb(d, &[(0, 1, 1)])], 5).unwrap();
        let b = ChernSeries::new(
            vec![
                amb(d, &[(0, 0, 1)]),
                amb(d, &[(0, 1, -1)]),
                amb(d, &[(0, 2, 1)]),
            ],
            5,
        )
        .unwrap();
        let expected = ChernSeries::new(
            vec![
                amb(d, &[(0, 0, 1)]),
                amb(d, &[]),
                amb(d, &[]),
                amb(d, &[(0, 3, 1)]),
            ],
            5,
        )
        .unwrap();
        assert_eq!(a.mul(&b).unwrap(), expected);
    }

    #[test]
    fn mul_truncates_at_smaller_order() {
        let a = ChernSeries::constant(ThetaPoly::one(), 5);
        let b = ChernSeries::constant(ThetaPoly::one(), 2);
        assert_eq!(a.mul(&b).unwrap().order(), 2);
    }

    #[test]
    fn mixed_contexts_rejected() {
        let a = ChernSeries::constant(amb(8, &[(0, 0, 1)]), 3);
        let b = ChernSeries::constant(amb(9, &[(0, 0, 1)]), 3);
        assert!(matches!(
            a.mul(&b),
            Err(EngineError::ContextMismatch { .. })
        ));
        assert!(ChernSeries::new(vec![amb(8, &[]), amb(9, &[])], 2).is_err());
    }

    #[test]
    fn geometric_series_inverse() {
        let d = 9;
        let order = d as usize - 2;
        let inv = one_minus_ht(d, order).inv().unwrap();
        for k in 0..=order {
            assert_eq!(inv.coeff(k).unwrap(), &amb(d, &[(0, k, 1)]), "t^{k}");
        }
    }

    #[test]
    fn nilpotent_inverse_terminates() {
        let t = ThetaPoly::theta();
        let a = theta_series(&[ThetaPoly::one(), t.clone()], 6);
        let expected = theta_series(&[ThetaPoly::one(), -&t, &t * &t], 6);
        assert_eq!(a.inv().unwrap(), expected);
        assert_eq!(
            ChernSeries::one(&t, 3).inv().unwrap(),
            ChernSeries::one(&t, 3)
        );
    }

    #[test]
    fn inverse_needs_unit_constant() {
        let a = theta_series(&[ThetaPoly::from_ints(2, 0, 0)], 3);
        assert!(matches!(a.inv(), Err(EngineError::NonUnitConstant(_))));
    }

    #[test]
    fn exponential_of_theta() {
        let t = ThetaPoly::theta();
        let x = ChernSeries::monomial(-&t, 1, 5);
        let e = x.exp().unwrap();
        let expected = theta_series(
            &[
                ThetaPoly::one(),
                -&t,
                ThetaPoly::new(int(0), int(0), frac(1, 2)),
            ],
            5,
        );
        assert_eq!(e, expected);
        let back = ChernSeries::monomial(t.clone(), 1, 5).exp().unwrap();
        assert!(e
            .mul(&back)
            .unwrap()
            .sub(&ChernSeries::one(&t, 5))
            .unwrap()
            .is_zero());
        let zero = ChernSeries::constant(ThetaPoly::zero(), 4);
        assert_eq!(zero.exp().unwrap(), ChernSeries::one(&t, 4));
        assert!(ChernSeries::constant(ThetaPoly::one(), 3).exp().is_err());
    }

    #[test]
    fn substitution() {
        let d = 10;
        let order = 6;
        let unit = amb(d, &[(0, 0, 1)]);
        let t = ChernSeries::variable(&unit, order);
        let one_plus_t = ChernSeries::one(&unit, order).add(&t).unwrap();
        assert_eq!(one_plus_t.subst(&t).unwrap(), one_plus_t);

        // t/(1-ht) = sum h^k t^(k+1)
        let g = t.mul(&one_minus_ht(d, order).inv().unwrap()).unwrap();
        let s = one_plus_t.subst(&g).unwrap();
        assert_eq!(s.coeff(0).unwrap(), &unit);
        for k in 1..=order {
            assert_eq!(s.coeff(k).unwrap(), &amb(d, &[(0, k - 1, 1)]));
        }

        // e^{-Tt} at t/(1-ht): t^2 coefficient is -Th + 1/2 T^2
        let theta = AmbientClass::theta(d).unwrap();
        let e = ChernSeries::monomial(-&theta, 1, order).exp().unwrap();
        let s = e.subst(&g).unwrap();
        let expected = AmbientClass::from_terms(d, [(1, 1, int(-1)), (2, 0, frac(1, 2))]).unwrap();
        assert_eq!(s.coeff(2).unwrap(), &expected);

        assert!(matches!(
            s.subst(&one_plus_t),
            Err(EngineError::NonzeroConstant(_))
        ));
    }

    #[test]
    fn reflect_and_powi() {
        let d = 8;
        let a = one_minus_ht(d, 4);
        let r = a.reflect();
        assert_eq!(r.coeff(1).unwrap(), &amb(d, &[(0, 1, 1)]));
        let sq = a.powi(2).unwrap();
        assert_eq!(sq.coeff(2).unwrap(), &amb(d, &[(0, 2, 1)]));
        let inv2 = a.powi(-2).unwrap();
        assert!(inv2
            .mul(&sq)
            .unwrap()
            .sub(&ChernSeries::one(&amb(d, &[]), 4))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn new_pads_and_truncates() {
        let s = ChernSeries::new(vec![ThetaPoly::one(); 5], 2).unwrap();
        assert_eq!(s.coeffs().len(), 3);
        let s = ChernSeries::new(vec![ThetaPoly::one()], 3).unwrap();
        assert!(s.coeff(3).unwrap().is_zero());
        assert!(s.coeff(4).is_none());
        assert!(ChernSeries::<ThetaPoly>::new(vec![], 3).is_err());
    }
}
