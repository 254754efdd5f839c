//! Cohomology of `C x Pic^3(C)`, Todd classes and the
//! Grothendieck-Riemann-Roch pushforward along `q: C x Pic^3(C) -> Pic^3(C)`.
//!
//! Classes upstairs are written `u1 + uf*f + ug*g` over `Q[T]/(T^3)`, where
//! `f` is the pullback of a point class of `C` and `g` is the Kunneth class
//! of the Poincare bundle, subject to `f^2 = f*g = 0` and `g^2 = -2 f T`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use crate::error::{EngineError, Result};
use crate::ring::{frac, int, nilpotent_exp, ChernSeries, Rational, RingElement, ThetaPoly};
use crate::MIN_DEGREE;

/// Every product of four degree-one classes vanishes on the threefold.
const UPSTREAM_NILPOTENCY: usize = 3;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UpstreamClass {
    pub u1: ThetaPoly,
    pub uf: ThetaPoly,
    pub ug: ThetaPoly,
}

impl UpstreamClass {
    pub fn new(u1: ThetaPoly, uf: ThetaPoly, ug: ThetaPoly) -> Self {
        Self { u1, uf, ug }
    }

    pub fn zero() -> Self {
        Self::new(ThetaPoly::zero(), ThetaPoly::zero(), ThetaPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_base(ThetaPoly::one())
    }

    /// Pullback `q^*` of a class on `Pic^3(C)`.
    pub fn from_base(x: ThetaPoly) -> Self {
        Self::new(x, ThetaPoly::zero(), ThetaPoly::zero())
    }

    pub fn f() -> Self {
        Self::new(ThetaPoly::zero(), ThetaPoly::one(), ThetaPoly::zero())
    }

    pub fn gamma() -> Self {
        Self::new(ThetaPoly::zero(), ThetaPoly::zero(), ThetaPoly::one())
    }

    pub fn theta() -> Self {
        Self::from_base(ThetaPoly::theta())
    }

    /// `a*1 + b*f + c*g` with rational coefficients.
    pub fn linear(a: Rational, b: Rational, c: Rational) -> Self {
        Self::new(
            ThetaPoly::constant(a),
            ThetaPoly::constant(b),
            ThetaPoly::constant(c),
        )
    }
}

impl RingElement for UpstreamClass {
    fn zero_like(&self) -> Self {
        Self::zero()
    }

    fn one_like(&self) -> Self {
        Self::one()
    }

    fn is_zero(&self) -> bool {
        self.u1.is_zero() && self.uf.is_zero() && self.ug.is_zero()
    }

    fn check_compatible(&self, _other: &Self) -> Result<()> {
        Ok(())
    }

    fn plus(&self, other: &Self) -> Self {
        Self::new(
            &self.u1 + &other.u1,
            &self.uf + &other.uf,
            &self.ug + &other.ug,
        )
    }

    fn times(&self, other: &Self) -> Self {
        let g_squared = &self.ug * &other.ug;
        let minus_two_theta = ThetaPoly::from_ints(0, -2, 0);
        Self::new(
            &self.u1 * &other.u1,
            &(&(&self.u1 * &other.uf) + &(&self.uf * &other.u1)) + &(&g_squared * &minus_two_theta),
            &(&self.u1 * &other.ug) + &(&self.ug * &other.u1),
        )
    }

    fn scaled(&self, c: &Rational) -> Self {
        Self::new(self.u1.scaled(c), self.uf.scaled(c), self.ug.scaled(c))
    }
}

impl fmt::Display for UpstreamClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (coeff, name) in [(&self.u1, ""), (&self.uf, "f"), (&self.ug, "g")] {
            if coeff.is_zero() {
                continue;
            }
            parts.push(match (name, coeff.is_one()) {
                ("", _) => coeff.to_string(),
                (n, true) => n.to_string(),
                (n, false) => format!("({coeff})*{n}"),
            });
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

impl fmt::Debug for UpstreamClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UpstreamClass({self})")
    }
}

impl Add for &UpstreamClass {
    type Output = UpstreamClass;
    fn add(self, rhs: Self) -> UpstreamClass {
        self.plus(rhs)
    }
}

impl Sub for &UpstreamClass {
    type Output = UpstreamClass;
    fn sub(self, rhs: Self) -> UpstreamClass {
        self.minus(rhs)
    }
}

impl Mul for &UpstreamClass {
    type Output = UpstreamClass;
    fn mul(self, rhs: Self) -> UpstreamClass {
        self.times(rhs)
    }
}

impl Neg for &UpstreamClass {
    type Output = UpstreamClass;
    fn neg(self) -> UpstreamClass {
        self.negated()
    }
}

/// A vector bundle on `Pic^3(C)` known through its Chern character.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BundleData {
    pub label: String,
    pub rank: i64,
    pub chern_character: ThetaPoly,
}

impl BundleData {
    /// Reads the rank off the degree-0 part, which must be an integer.
    pub fn from_character(label: impl Into<String>, chern_character: ThetaPoly) -> Result<Self> {
        let c0 = chern_character.constant_term();
        if !c0.is_integer() {
            return Err(EngineError::NonIntegral(format!("rank {c0}")));
        }
        let rank = c0
            .to_integer()
            .to_i64()
            .ok_or_else(|| EngineError::Overflow(c0.to_string()))?;
        Ok(Self {
            label: label.into(),
            rank,
            chern_character,
        })
    }

    /// Chern polynomial `c_t` truncated at `order`.
    pub fn chern_polynomial(&self, order: usize) -> Result<ChernSeries<ThetaPoly>> {
        chern_polynomial(&self.chern_character, order)
    }
}

/// `c_t(E)` from `ch(E)` via `log c_t = sum_k (-1)^(k-1) (k-1)! ch_k t^k`,
/// the Newton identities in generating-function form.
pub fn chern_polynomial(ch: &ThetaPoly, order: usize) -> Result<ChernSeries<ThetaPoly>> {
    let mut log_coeffs = vec![ThetaPoly::zero(); order + 1];
    let mut factorial = Rational::one();
    for (k, slot) in log_coeffs.iter_mut().enumerate().take(3).skip(1) {
        if k > 1 {
            factorial *= int(k as i64 - 1);
        }
        let sign = if k % 2 == 1 { int(1) } else { int(-1) };
        *slot = ch.graded_part(k).scaled(&(sign * &factorial));
    }
    ChernSeries::new(log_coeffs, order)?.exp()
}

/// `u1 + uf*f + ug*g` as `q_*`: only the fibre-degree-one part survives, and
/// `q_*(f) = 1`, `q_*(1) = q_*(g) = 0`, linear over `q^*` by projection.
pub fn pushforward_q(a: &UpstreamClass) -> ThetaPoly {
    a.uf.clone()
}

/// Todd class through degree two, `1 + c1/2 + (c1^2 + c2)/12`.
pub fn todd_from_chern<R: RingElement>(c1: &R, c2: &R) -> R {
    let quadratic = c1.times(c1).plus(c2).scaled(&frac(1, 12));
    c1.one_like().plus(&c1.scaled(&frac(1, 2))).plus(&quadratic)
}

/// `td(Pic^3(C))`: an abelian surface has trivial tangent bundle.
pub fn todd_base() -> ThetaPoly {
    todd_from_chern(&ThetaPoly::zero(), &ThetaPoly::zero())
}

/// `td(C x Pic^3(C))`. The total Chern class of the tangent bundle is
/// `p^*c(T_C) = 1 + (2 - 2*2) f`, so `c1 = -2f`, `c2 = 0`.
pub fn todd_total() -> UpstreamClass {
    let c1 = UpstreamClass::linear(int(0), int(-2), int(0));
    todd_from_chern(&c1, &UpstreamClass::zero())
}

/// First Chern class of the Poincare bundle, `3f + g`.
pub fn poincare_c1() -> UpstreamClass {
    UpstreamClass::linear(int(0), int(3), int(1))
}

/// `ch(L) = exp(c1(L))`.
pub fn ch_poincare() -> Result<UpstreamClass> {
    nilpotent_exp(&poincare_c1(), UPSTREAM_NILPOTENCY)
}

/// `ch(q_* E) = q_*(ch(E) td(C x Pic^3)) / td(Pic^3)`.
pub fn grr_pushforward(ch: &UpstreamClass) -> Result<ThetaPoly> {
    let c0 = ch.u1.constant_term();
    if !c0.is_integer() {
        return Err(EngineError::NonIntegral(format!("rank of {ch}: {c0}")));
    }
    let pushed = pushforward_q(&(ch * &todd_total()));
    Ok(&pushed * &todd_base().try_inverse()?)
}

/// `ch(p^* O_C(H) (x) L^-1) = exp(d f) exp(-c1(L))`, using `p^* H = d f`.
pub fn ch_twisted_dual_poincare(d: u32) -> Result<UpstreamClass> {
    let hyperplane = UpstreamClass::linear(int(0), int(d.into()), int(0));
    let ch_h = nilpotent_exp(&hyperplane, UPSTREAM_NILPOTENCY)?;
    let ch_dual = nilpotent_exp(&poincare_c1().negated(), UPSTREAM_NILPOTENCY)?;
    Ok(&ch_h * &ch_dual)
}

/// The bundles `H = q_* L` and `G = q_*(p^* O_C(H) (x) L^-1)` on `Pic^3(C)`,
/// both obtained by pushing forward through GRR.
pub fn compute_bundle_characters(d: u32) -> Result<(BundleData, BundleData)> {
    if d < MIN_DEGREE {
        return Err(EngineError::DegreeTooSmall(d));
    }
    let ch_h = grr_pushforward(&ch_poincare()?)?;
    let ch_g = grr_pushforward(&ch_twisted_dual_poincare(d)?)?;
    Ok((
        BundleData::from_character("H", ch_h)?,
        BundleData::from_character("G", ch_g)?,
    ))
}

/// Expected `ch(G) = (d - 4) - T`, for checks only.
pub fn expected_ch_g(d: u32) -> ThetaPoly {
    ThetaPoly::constant(Rational::from_integer(BigInt::from(d) - 4)).minus(&ThetaPoly::theta())
}
