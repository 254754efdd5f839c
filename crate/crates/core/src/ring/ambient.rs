use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{
    add_rational, format_terms, join_monomial, mul_rational, power_string, Rational, RingElement,
    ThetaPoly,
};
use crate::error::{EngineError, Result};
use crate::MIN_DEGREE;

const THETA_LEVELS: usize = 3;

/// Element of `Q[T,h]/(T^3, h^(d-1))`, the classes on `Pic^3(C) x P^(d-2)`
/// spanned by `T^a h^b` with `a <= 2`, `b <= d-2`.
///
/// Storage is a dense `3 x (d-1)` grid. Products skip zero entries, so
/// homogeneous operands (the common case) cost a handful of multiplications.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AmbientClass {
    d: u32,
    coeffs: Vec<Rational>,
}

impl AmbientClass {
    pub fn zero(d: u32) -> Result<Self> {
        if d < MIN_DEGREE {
            return Err(EngineError::DegreeTooSmall(d));
        }
        Ok(Self {
            d,
            coeffs: vec![Rational::zero(); THETA_LEVELS * (d as usize - 1)],
        })
    }

    pub fn one(d: u32) -> Result<Self> {
        Self::monomial(d, 0, 0, Rational::one())
    }

    /// `c * T^theta_pow * h^h_pow`. Monomials beyond the truncation are
    /// rejected rather than silently zeroed.
    pub fn monomial(d: u32, theta_pow: usize, h_pow: usize, c: Rational) -> Result<Self> {
        let mut out = Self::zero(d)?;
        let idx = out.index(theta_pow, h_pow)?;
        out.coeffs[idx] = c;
        Ok(out)
    }

    pub fn theta(d: u32) -> Result<Self> {
        Self::monomial(d, 1, 0, Rational::one())
    }

    /// Pullback `h` of the hyperplane class of `P^(d-2)`.
    pub fn h(d: u32) -> Result<Self> {
        Self::monomial(d, 0, 1, Rational::one())
    }

    /// Builds a class from `(theta_pow, h_pow, coefficient)` triples; repeated
    /// monomials are summed.
    pub fn from_terms<I>(d: u32, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Rational)>,
    {
        let mut out = Self::zero(d)?;
        for (a, b, c) in terms {
            let idx = out.index(a, b)?;
            out.coeffs[idx] += c;
        }
        Ok(out)
    }

    /// Pullback `p1^*` of a class on `Pic^3(C)`.
    pub fn from_theta(d: u32, x: &ThetaPoly) -> Result<Self> {
        Self::from_terms(d, (0..THETA_LEVELS).map(|a| (a, 0, x.coeff(a))))
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    /// Largest `h` exponent that survives truncation, `d - 2`.
    pub fn max_h_power(&self) -> usize {
        self.d as usize - 2
    }

    fn width(&self) -> usize {
        self.d as usize - 1
    }

    fn index(&self, theta_pow: usize, h_pow: usize) -> Result<usize> {
        if theta_pow >= THETA_LEVELS || h_pow > self.max_h_power() {
            return Err(EngineError::IndexOutOfRange(format!(
                "T^{theta_pow} h^{h_pow} with d = {}",
                self.d
            )));
        }
        Ok(theta_pow * self.width() + h_pow)
    }

    /// Exact coefficient of `T^theta_pow h^h_pow`.
    pub fn coefficient(&self, theta_pow: usize, h_pow: usize) -> Result<&Rational> {
        Ok(&self.coeffs[self.index(theta_pow, h_pow)?])
    }

    /// Nonzero `(theta_pow, h_pow, coefficient)` entries in storage order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &Rational)> + '_ {
        let w = self.width();
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (i / w, i % w, c))
    }

    /// Total degree `a + b` when every nonzero term shares it; `None` for zero
    /// or mixed-degree classes.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degrees = self.terms().map(|(a, b, _)| a + b);
        let first = degrees.next()?;
        degrees.all(|k| k == first).then_some(first)
    }

    /// Zero counts as homogeneous of every degree.
    pub fn is_homogeneous_of(&self, degree: usize) -> bool {
        self.terms().all(|(a, b, _)| a + b == degree)
    }

    /// Sum of the terms of total degree `degree`.
    pub fn graded_part(&self, degree: usize) -> Self {
        let mut out = self.zero_like();
        for (a, b, c) in self.terms() {
            if a + b == degree {
                out.coeffs[a * self.width() + b] = c.clone();
            }
        }
        out
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.times(other))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.plus(other))
    }

    fn assert_compatible(&self, other: &Self) {
        if let Err(e) = self.check_compatible(other) {
            panic!("{e}");
        }
    }
}

impl RingElement for AmbientClass {
    fn zero_like(&self) -> Self {
        Self {
            d: self.d,
            coeffs: vec![Rational::zero(); self.coeffs.len()],
        }
    }

    fn one_like(&self) -> Self {
        let mut out = self.zero_like();
        out.coeffs[0] = Rational::one();
        out
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.d == other.d {
            Ok(())
        } else {
            Err(EngineError::ContextMismatch {
                left: self.d,
                right: other.d,
            })
        }
    }

    fn plus(&self, other: &Self) -> Self {
        self.assert_compatible(other);
        let mut out = self.clone();
        for (slot, c) in out.coeffs.iter_mut().zip(&other.coeffs) {
            if !c.is_zero() {
                add_rational(slot, c);
            }
        }
        out
    }

    fn minus(&self, other: &Self) -> Self {
        self.assert_compatible(other);
        let mut out = self.clone();
        for (slot, c) in out.coeffs.iter_mut().zip(&other.coeffs) {
            if !c.is_zero() {
                add_rational(slot, &-c);
            }
        }
        out
    }

    fn times(&self, other: &Self) -> Self {
        self.assert_compatible(other);
        let w = self.width();
        let max_h = self.max_h_power();
        let mut out = self.zero_like();
        let rhs: Vec<_> = other.terms().collect();
        for (a1, b1, c1) in self.terms() {
            for &(a2, b2, c2) in &rhs {
                if a1 + a2 < THETA_LEVELS && b1 + b2 <= max_h {
                    add_rational(
                        &mut out.coeffs[(a1 + a2) * w + b1 + b2],
                        &mul_rational(c1, c2),
                    );
                }
            }
        }
        out
    }

    fn scaled(&self, c: &Rational) -> Self {
        Self {
            d: self.d,
            coeffs: self
                .coeffs
                .iter()
                .map(|x| {
                    if x.is_zero() {
                        x.clone()
                    } else {
                        mul_rational(x, c)
                    }
                })
                .collect(),
        }
    }
}

impl fmt::Display for AmbientClass {
    /// Descending `h` power, then descending `T` power, e.g.
    /// `4*h^3 + 9*T*h^2 + 6*T^2*h`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = self.width();
        let terms = (0..w).rev().flat_map(|b| {
            (0..THETA_LEVELS).rev().map(move |a| {
                let mono = join_monomial(&[power_string("T", a), power_string("h", b)]);
                (&self.coeffs[a * w + b], mono)
            })
        });
        f.write_str(&format_terms(terms))
    }
}

impl fmt::Debug for AmbientClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AmbientClass[d={}]({self})", self.d)
    }
}

impl Add for &AmbientClass {
    type Output = AmbientClass;
    fn add(self, rhs: Self) -> AmbientClass {
        self.plus(rhs)
    }
}

impl Sub for &AmbientClass {
    type Output = AmbientClass;
    fn sub(self, rhs: Self) -> AmbientClass {
        self.minus(rhs)
    }
}

impl Mul for &AmbientClass {
    type Output = AmbientClass;
    fn mul(self, rhs: Self) -> AmbientClass {
        self.times(rhs)
    }
}

impl Neg for &AmbientClass {
    type Output = AmbientClass;
    fn neg(self) -> AmbientClass {
        self.negated()
    }
}
