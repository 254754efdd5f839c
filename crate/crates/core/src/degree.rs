//! Degree extraction, the Berzolari cross-check and the binomial toolkit.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{EngineError, Result};
use crate::porteous::{porteous_class, Method, PorteousResult};
use crate::ring::{int, AmbientClass, Rational, RingElement};
use crate::MIN_DEGREE;

/// `deg(T^2 h^(d-2))`: the theta divisor of a genus-2 Jacobian has
/// self-intersection 2, and `h^(d-2)` is a point on `P^(d-2)`.
pub const THETA_SQUARED: i64 = 2;

/// `Sec_3(C)` is 5-dimensional, so its degree is read off against `h^5`.
pub const SECANT_DIMENSION: u32 = 5;

/// Generalized binomial coefficient `n (n-1) ... (n-k+1) / k!` for any
/// integer `n`; zero for `k < 0`. For negative `n` this agrees with upper
/// negation, `C(-r, m) = (-1)^m C(r+m-1, m)`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || (n >= 0 && k > n) {
        return BigInt::zero();
    }
    let k = if n >= 0 { k.min(n - k) } else { k };
    let mut acc = BigInt::one();
    for j in 0..k {
        // acc = C(n, j) here, and C(n, j) (n - j) = (j + 1) C(n, j + 1)
        acc = acc * (n - j) / (j + 1);
    }
    acc
}

fn sign(m: i64) -> BigInt {
    if m % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

pub fn upper_negation_holds(r: i64, m: i64) -> bool {
    binomial(-r, m) == sign(m) * binomial(r + m - 1, m)
}

pub fn vandermonde_holds(m: i64, s: i64, r: i64) -> bool {
    let lhs: BigInt = (0..=r).map(|k| binomial(m, k) * binomial(s, r - k)).sum();
    lhs == binomial(m + s, r)
}

/// Exhaustively checks upper negation for `0 <= r, m <= bound` and
/// Vandermonde for `|m|, |s| <= bound`, `0 <= r <= bound`.
pub fn verify_binomial_identities(bound: u32) -> bool {
    let b = i64::from(bound);
    let negation = (0..=b).all(|r| (0..=b).all(|m| upper_negation_holds(r, m)));
    let vandermonde =
        (-b..=b).all(|m| (-b..=b).all(|s| (0..=b).all(|r| vandermonde_holds(m, s, r))));
    negation && vandermonde
}

/// Pairs a top-degree class against the fundamental class: reads the
/// `T^2 h^(d-2)` coefficient and multiplies by `deg(T^2 h^(d-2)) = 2`.
pub fn degree_pairing(x: &AmbientClass) -> Rational {
    let top = x
        .coefficient(2, x.max_h_power())
        .expect("T^2 h^(d-2) is always in range");
    top * int(THETA_SQUARED)
}

/// `deg(x1 . h^5)`, checking that the product is a top-degree class and the
/// result is an integer.
pub fn degree_of_porteous_class(result: &PorteousResult) -> Result<BigInt> {
    let d = result.x1.d();
    let h5 = AmbientClass::h(d)?.pow(SECANT_DIMENSION);
    let top = result.x1.try_mul(&h5)?;
    if !top.is_homogeneous_of(d as usize) {
        return Err(EngineError::Inhomogeneous {
            expected: d as usize,
            class: top.to_string(),
        });
    }
    let deg = degree_pairing(&top);
    if !deg.is_integer() {
        return Err(EngineError::NonIntegral(format!(
            "degree {deg} from {} with d = {d}",
            result.method
        )));
    }
    Ok(deg.to_integer())
}

/// Degree of the third secant variety of a genus-2 curve of degree `d`.
pub fn secant3_degree(d: u32, method: Method) -> Result<BigInt> {
    if d < MIN_DEGREE {
        return Err(EngineError::DegreeTooSmall(d));
    }
    degree_of_porteous_class(&porteous_class(d, method)?)
}

/// Berzolari's trisecant count `C(d-2, 3) - g (d-4)`, from binomials alone.
pub fn berzolari(d: u32, g: u32) -> BigInt {
    let d = i64::from(d);
    binomial(d - 2, 3) - BigInt::from(g) * (d - 4)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeReport {
    pub d: u32,
    /// From the cofactor determinant.
    pub degree_porteous: i64,
    pub degree_recurrence: i64,
    pub degree_closed_form: i64,
    pub degree_berzolari: i64,
    pub methods_agree: bool,
}

impl DegreeReport {
    pub fn compute(d: u32) -> Result<Self> {
        let small = |x: BigInt| {
            x.to_i64()
                .ok_or_else(|| EngineError::Overflow(x.to_string()))
        };
        let degree_porteous = small(secant3_degree(d, Method::Cofactor)?)?;
        let degree_recurrence = small(secant3_degree(d, Method::Recurrence)?)?;
        let degree_closed_form = small(secant3_degree(d, Method::ClosedForm)?)?;
        let degree_berzolari = small(berzolari(d, 2))?;
        let methods_agree = degree_porteous == degree_recurrence
            && degree_porteous == degree_closed_form
            && degree_porteous == degree_berzolari;
        Ok(Self {
            d,
            degree_porteous,
            degree_recurrence,
            degree_closed_form,
            degree_berzolari,
            methods_agree,
        })
    }

    pub fn degree(&self, method: Method) -> i64 {
        match method {
            Method::Cofactor => self.degree_porteous,
            Method::Recurrence => self.degree_recurrence,
            Method::ClosedForm => self.degree_closed_form,
        }
    }
}
