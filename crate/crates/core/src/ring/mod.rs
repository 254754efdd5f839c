//! Exact coefficient arithmetic and the two truncated polynomial rings the
//! engine computes in.

mod ambient;
mod series;
mod theta;

pub use ambient::AmbientClass;
pub use series::ChernSeries;
pub use theta::ThetaPoly;

use std::fmt::Debug;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{EngineError, Result};

/// Exact arbitrary-precision fraction, always kept in lowest terms.
pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num / den`, reduced. Panics if `den == 0`.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn big(n: &BigInt) -> Rational {
    Rational::from_integer(n.clone())
}

/// Product with a gcd-free path for integer operands, which dominate the
/// Chern-class computations.
pub(crate) fn mul_rational(a: &Rational, b: &Rational) -> Rational {
    if a.is_integer() && b.is_integer() {
        Rational::from_integer(a.numer() * b.numer())
    } else {
        a * b
    }
}

/// `slot += c` with the same integer fast path.
pub(crate) fn add_rational(slot: &mut Rational, c: &Rational) {
    if slot.is_integer() && c.is_integer() {
        *slot = Rational::from_integer(slot.numer() + c.numer());
    } else {
        *slot += c;
    }
}

/// Commutative ring element with an optional ambient context (the curve
/// degree for [`AmbientClass`]). Binary operations assume compatible
/// operands and panic otherwise; callers that cannot guarantee this check
/// [`RingElement::check_compatible`] first.
pub trait RingElement: Clone + PartialEq + Debug + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn check_compatible(&self, other: &Self) -> Result<()>;

    fn plus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn scaled(&self, c: &Rational) -> Self;

    fn negated(&self) -> Self {
        self.scaled(&-Rational::one())
    }

    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negated())
    }

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }

    fn pow(&self, exp: u32) -> Self {
        let mut acc = self.one_like();
        for _ in 0..exp {
            acc = acc.times(self);
        }
        acc
    }
}

/// `exp(x) = sum x^j / j!` for a nilpotent `x`. Stops once a power vanishes;
/// errors if `x^(max_terms + 1)` is still nonzero.
pub fn nilpotent_exp<R: RingElement>(x: &R, max_terms: usize) -> Result<R> {
    let mut sum = x.one_like();
    let mut power = x.one_like();
    let mut factorial = Rational::one();
    for j in 1..=max_terms {
        power = power.times(x);
        if power.is_zero() {
            return Ok(sum);
        }
        factorial *= int(j as i64);
        sum = sum.plus(&power.scaled(&factorial.recip()));
    }
    if power.times(x).is_zero() {
        Ok(sum)
    } else {
        Err(EngineError::NotNilpotent(max_terms))
    }
}

/// Renders `sum coeff * monomial` as plain ASCII, e.g. `4*h^3 - 1/2*T^2`.
/// Terms are emitted in the order given; zero coefficients are skipped.
pub(crate) fn format_terms<'a, I>(terms: I) -> String
where
    I: IntoIterator<Item = (&'a Rational, String)>,
{
    let mut out = String::new();
    for (c, mono) in terms {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        let body = match (mag.is_one(), mono.is_empty()) {
            (_, true) => mag.to_string(),
            (true, false) => mono,
            (false, false) => format!("{mag}*{mono}"),
        };
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub(crate) fn power_string(var: &str, exp: usize) -> String {
    match exp {
        0 => String::new(),
        1 => var.to_string(),
        e => format!("{var}^{e}"),
    }
}

pub(crate) fn join_monomial(parts: &[String]) -> String {
    parts
        .iter()
        .filter(|p| !p.is_empty())
        .cloned()
        .collect::<Vec<_>>()
        .join("*")
}
