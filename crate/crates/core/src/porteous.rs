//! Chern series of the bundles `E = G (x) O(-1)` and `F = H^* (x) O` on
//! `Pic^3(C) x P^(d-2)`, and the Porteous class
//! `x1 = det(c_{j-i+1}(F - E))`, the locus where `E -> F` has rank at most 1.
//!
//! The class is evaluated three independent ways: first-column cofactor
//! expansion of the Toeplitz-Hessenberg matrix, the alternating recurrence
//! `d_n = sum (-1)^(i-1) c_i d_(n-i)`, and the binomial closed form.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::degree::binomial;
use crate::error::{EngineError, Result};
use crate::grr::{compute_bundle_characters, BundleData};
use crate::ring::{big, frac, AmbientClass, ChernSeries, Rational, RingElement};
use crate::MIN_DEGREE;

fn check_degree(d: u32) -> Result<()> {
    if d < MIN_DEGREE {
        Err(EngineError::DegreeTooSmall(d))
    } else {
        Ok(())
    }
}

/// Size `d - 5` of the Porteous matrix; also the default truncation order.
pub fn matrix_size(d: u32) -> usize {
    d as usize - 5
}

/// A bundle on `Pic^3(C)` pulled back to `Pic^3(C) x P^(d-2)`, optionally
/// dualised, then tensored with `O(-twist_power)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedBundle {
    pub base: BundleData,
    pub twist_power: i64,
    pub dual: bool,
}

impl TwistedBundle {
    pub fn rank(&self) -> i64 {
        self.base.rank
    }

    pub fn chern_series(&self, d: u32, order: usize) -> Result<ChernSeries<AmbientClass>> {
        let mut c = self.base.chern_polynomial(order)?;
        if self.dual {
            c = c.reflect();
        }
        let lifted = c.map(|x| AmbientClass::from_theta(d, x))?;
        if self.twist_power == 0 {
            Ok(lifted)
        } else {
            twist_by_hyperplane(&lifted, self.rank(), self.twist_power)
        }
    }
}

/// `E = G (x) O(-1)` and `F = H^* (x) O`.
pub fn bundles(d: u32) -> Result<(TwistedBundle, TwistedBundle)> {
    check_degree(d)?;
    let (h, g) = compute_bundle_characters(d)?;
    let e = TwistedBundle {
        base: g,
        twist_power: 1,
        dual: false,
    };
    let f = TwistedBundle {
        base: h,
        twist_power: 0,
        dual: true,
    };
    Ok((e, f))
}

/// Chern polynomial of `bundle (x) O(-sign)`. With Chern roots `a_i`, the
/// twisted roots are `a_i - sign*h`, so
/// `c_t = (1 - sign*h*t)^rank * c(t / (1 - sign*h*t))`.
pub fn twist_by_hyperplane(
    c: &ChernSeries<AmbientClass>,
    rank: i64,
    sign: i64,
) -> Result<ChernSeries<AmbientClass>> {
    let unit = c.constant_term();
    if !unit.is_one() {
        return Err(EngineError::NonUnitConstant(unit.to_string()));
    }
    if sign == 0 {
        return Ok(c.clone());
    }
    let d = unit.d();
    let order = c.order();
    let shifted_h = AmbientClass::monomial(d, 0, 1, Rational::from_integer(BigInt::from(-sign)))?;
    let one_minus = ChernSeries::new(vec![unit.clone(), shifted_h], order)?;
    let g = ChernSeries::variable(unit, order).mul(&one_minus.inv()?)?;
    one_minus.powi(rank)?.mul(&c.subst(&g)?)
}

/// `c_t(F) = c_(-t)(H) = exp(T t)`.
pub fn chern_series_f(d: u32, order: usize) -> Result<ChernSeries<AmbientClass>> {
    bundles(d)?.1.chern_series(d, order)
}

/// `c_t(E) = (1 - ht)^(d-4) exp(-T t / (1 - ht))`.
pub fn chern_series_e(d: u32, order: usize) -> Result<ChernSeries<AmbientClass>> {
    bundles(d)?.0.chern_series(d, order)
}

/// `c_t(F - E) = c_t(F) / c_t(E)`, truncated at `order >= d - 5`.
pub fn chern_difference(d: u32, order: usize) -> Result<ChernSeries<AmbientClass>> {
    check_degree(d)?;
    if order < matrix_size(d) {
        return Err(EngineError::OrderTooSmall {
            got: order,
            required: matrix_size(d),
        });
    }
    let (e, f) = bundles(d)?;
    f.chern_series(d, order)?
        .mul(&e.chern_series(d, order)?.inv()?)
}

/// `c_t(F - E)` from the exponential closed form
/// `(1 - ht)^(4-d) exp((2Tt - Th t^2) / (1 - ht))`.
pub fn chern_difference_exponential(d: u32, order: usize) -> Result<ChernSeries<AmbientClass>> {
    check_degree(d)?;
    let unit = AmbientClass::one(d)?;
    let one_minus = ChernSeries::new(vec![unit, -&AmbientClass::h(d)?], order)?;
    let numerator = ChernSeries::new(
        vec![
            AmbientClass::zero(d)?,
            AmbientClass::monomial(d, 1, 0, frac(2, 1))?,
            AmbientClass::monomial(d, 1, 1, frac(-1, 1))?,
        ],
        order,
    )?;
    let exponent = numerator.mul(&one_minus.inv()?)?;
    one_minus.powi(4 - i64::from(d))?.mul(&exponent.exp()?)
}

type Group<'a> = (i64, &'a [(usize, i64, Rational)]);

/// `c_t(F - E)` from the grouped expansion with `(1 - ht)^(2-d)` factored
/// out, summed term by term with binomial coefficients.
pub fn chern_difference_expansion(d: u32, order: usize) -> Result<ChernSeries<AmbientClass>> {
    check_degree(d)?;
    let dd = i64::from(d);
    let max_h = d as usize - 2;
    let mut coeffs = Vec::with_capacity(order + 1);
    for i in 0..=order {
        let i = i as i64;
        // (k offset, [(theta power, h offset from k, weight)])
        let groups: [Group; 5] = [
            (0, &[(0, 0, frac(1, 1))]),
            (1, &[(1, 0, frac(2, 1)), (0, 1, frac(-2, 1))]),
            (
                2,
                &[(2, 0, frac(2, 1)), (1, 1, frac(-3, 1)), (0, 2, frac(1, 1))],
            ),
            (3, &[(1, 2, frac(1, 1)), (2, 1, frac(-2, 1))]),
            (4, &[(2, 2, frac(1, 2))]),
        ];
        let mut terms = Vec::new();
        for (shift, monomials) in groups {
            let k = i - shift;
            if k < 0 {
                continue;
            }
            let b = big(&binomial(dd + k - 3, k));
            for (a, h_off, w) in monomials {
                let h_pow = (k + h_off) as usize;
                if h_pow <= max_h {
                    terms.push((*a, h_pow, &b * w));
                }
            }
        }
        coeffs.push(AmbientClass::from_terms(d, terms)?);
    }
    ChernSeries::new(coeffs, order)
}

/// Closed form of `c_i(F - E)`:
/// `C(d-5+i, i) h^i + (C(d-5+i, i-1) + C(d-6+i, i-1)) T h^(i-1)
///  + (2 C(d-6+i, i-2) + C(d-7+i, i-4)/2) T^2 h^(i-2)`.
pub fn ci_closed_form(i: usize, d: u32) -> Result<AmbientClass> {
    check_degree(d)?;
    if i < 1 || i > matrix_size(d) {
        return Err(EngineError::IndexOutOfRange(format!(
            "c_{i} with d = {d}; need 1 <= i <= {}",
            matrix_size(d)
        )));
    }
    let (d, i) = (i64::from(d), i as i64);
    let h_coeff = big(&binomial(d - 5 + i, i));
    let t_coeff = big(&(binomial(d - 5 + i, i - 1) + binomial(d - 6 + i, i - 1)));
    let t2_coeff =
        big(&(binomial(d - 6 + i, i - 2) * 2)) + big(&binomial(d - 7 + i, i - 4)) * frac(1, 2);
    graded_class(d as u32, i as usize, [h_coeff, t_coeff, t2_coeff])
}

/// `coeffs[a] * T^a * h^(degree - a)`, skipping terms whose `h` power would
/// be negative (their coefficients are zero).
fn graded_class(d: u32, degree: usize, coeffs: [Rational; 3]) -> Result<AmbientClass> {
    let terms = coeffs
        .into_iter()
        .enumerate()
        .filter(|(a, c)| *a <= degree && !c.is_zero())
        .map(|(a, c)| (a, degree - a, c));
    AmbientClass::from_terms(d, terms)
}

/// `[c_0, c_1, ..., c_n]` read off a Chern series.
pub fn chern_classes(series: &ChernSeries<AmbientClass>, n: usize) -> Result<Vec<AmbientClass>> {
    if series.order() < n {
        return Err(EngineError::OrderTooSmall {
            got: series.order(),
            required: n,
        });
    }
    Ok(series.coeffs()[..=n].to_vec())
}

/// `[c_0 = 1, c_1, ..., c_(d-5)]` from the closed form.
pub fn chern_classes_closed_form(d: u32) -> Result<Vec<AmbientClass>> {
    let mut cs = vec![AmbientClass::one(d)?];
    for i in 1..=matrix_size(d) {
        cs.push(ci_closed_form(i, d)?);
    }
    Ok(cs)
}

/// The `n x n` Toeplitz-Hessenberg matrix with entry `(r, c) = c_(c-r+1)`:
/// `c_1` on the diagonal, ones on the subdiagonal, zeros below.
#[derive(Clone, Debug, PartialEq)]
pub struct PorteousMatrix {
    n: usize,
    entries: Vec<Vec<AmbientClass>>,
}

impl PorteousMatrix {
    /// `cs = [c_0, c_1, ..., c_n]`; `c_0` must be `1`.
    pub fn from_chern_classes(cs: &[AmbientClass]) -> Result<Self> {
        let Some((c0, rest)) = cs.split_first() else {
            return Err(EngineError::IndexOutOfRange(
                "empty Chern class list".into(),
            ));
        };
        if !c0.is_one() {
            return Err(EngineError::NonUnitConstant(c0.to_string()));
        }
        let n = rest.len();
        let zero = c0.zero_like();
        let entries = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| {
                        if c + 1 >= r {
                            cs[c + 1 - r].clone()
                        } else {
                            zero.clone()
                        }
                    })
                    .collect()
            })
            .collect();
        Ok(Self { n, entries })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn entry(&self, row: usize, col: usize) -> &AmbientClass {
        &self.entries[row][col]
    }

    /// Subdiagonal all ones and everything below it zero.
    pub fn is_hessenberg_normalised(&self) -> bool {
        (0..self.n).all(|r| {
            (0..r).all(|c| {
                let x = &self.entries[r][c];
                if c + 1 == r {
                    x.is_one()
                } else {
                    x.is_zero()
                }
            })
        })
    }

    /// Division-free determinant by first-column cofactor expansion, using
    /// only that entries below the subdiagonal vanish.
    ///
    /// `trailing[k]` is the determinant of rows/cols `k..n`. `bordered(k, j)`
    /// is the determinant on rows `{k} + (j+1..n)`, cols `j..n`, which
    /// expands as `M[k][j] * trailing[j+1] - M[j+1][j] * bordered(k, j+1)`.
    pub fn determinant(&self) -> Result<AmbientClass> {
        let n = self.n;
        if n == 0 {
            return Err(EngineError::IndexOutOfRange("empty matrix".into()));
        }
        for r in 0..n {
            for c in 0..r.saturating_sub(1) {
                if !self.entries[r][c].is_zero() {
                    return Err(EngineError::Domain(format!(
                        "entry ({r}, {c}) below the subdiagonal is nonzero"
                    )));
                }
            }
        }
        let m = &self.entries;
        let mut trailing = vec![m[0][0].zero_like(); n + 1];
        trailing[n] = m[0][0].one_like();
        for k in (0..n).rev() {
            let mut bordered = m[k][n - 1].clone();
            for j in (k..n - 1).rev() {
                bordered = m[k][j]
                    .times(&trailing[j + 1])
                    .minus(&m[j + 1][j].times(&bordered));
            }
            trailing[k] = bordered;
        }
        Ok(trailing.swap_remove(0))
    }
}

/// `[d_0, ..., d_n]` with `d_0 = 1` and `d_m = sum_(i=1..m) (-1)^(i-1) c_i d_(m-i)`.
pub fn recurrence(cs: &[AmbientClass]) -> Result<Vec<AmbientClass>> {
    let Some(c0) = cs.first() else {
        return Err(EngineError::IndexOutOfRange(
            "empty Chern class list".into(),
        ));
    };
    let mut ds = vec![c0.one_like()];
    for m in 1..cs.len() {
        let mut acc = c0.zero_like();
        for i in 1..=m {
            let term = cs[i].times(&ds[m - i]);
            acc = if i % 2 == 1 {
                acc.plus(&term)
            } else {
                acc.minus(&term)
            };
        }
        ds.push(acc);
    }
    Ok(ds)
}

/// Closed form of the leading minor `d_n`, valid for `n >= 3`:
/// `C(d-4, n) h^n + (C(d-3, n) - C(d-5, n)) T h^(n-1)
///  + (C(d-2, n)/2 - C(d-4, n) + C(d-6, n)/2) T^2 h^(n-2)`.
pub fn dn_closed_form(n: usize, d: u32) -> Result<AmbientClass> {
    check_degree(d)?;
    if n < 3 || n > matrix_size(d) {
        return Err(EngineError::Domain(format!(
            "d_{n} closed form needs 3 <= n <= {} (use the recurrence for n < 3)",
            matrix_size(d)
        )));
    }
    let (dd, k) = (i64::from(d), n as i64);
    let half = frac(1, 2);
    let h_coeff = big(&binomial(dd - 4, k));
    let t_coeff = big(&(binomial(dd - 3, k) - binomial(dd - 5, k)));
    let t2_coeff = big(&binomial(dd - 2, k)) * &half - big(&binomial(dd - 4, k))
        + big(&binomial(dd - 6, k)) * &half;
    graded_class(d, n, [h_coeff, t_coeff, t2_coeff])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Cofactor,
    Recurrence,
    ClosedForm,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Cofactor, Method::Recurrence, Method::ClosedForm];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::Cofactor => "cofactor",
            Method::Recurrence => "recurrence",
            Method::ClosedForm => "closed-form",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = EngineError;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| EngineError::Domain(format!("unknown method {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PorteousResult {
    pub x1: AmbientClass,
    pub method: Method,
}

impl PorteousResult {
    /// Wraps `x1` after checking it is homogeneous of degree `d - 5`.
    pub fn new(x1: AmbientClass, method: Method) -> Result<Self> {
        let expected = matrix_size(x1.d());
        if !x1.is_homogeneous_of(expected) {
            return Err(EngineError::Inhomogeneous {
                expected,
                class: x1.to_string(),
            });
        }
        Ok(Self { x1, method })
    }
}

/// Cofactor determinant with the `c_i` taken from the divided series.
pub fn porteous_det_cofactor(d: u32) -> Result<PorteousResult> {
    let n = matrix_size(d);
    let cs = chern_classes(&chern_difference(d, n)?, n)?;
    let x1 = PorteousMatrix::from_chern_classes(&cs)?.determinant()?;
    PorteousResult::new(x1, Method::Cofactor)
}

/// Recurrence with the `c_i` taken from their closed form.
pub fn porteous_det_recurrence(d: u32) -> Result<PorteousResult> {
    check_degree(d)?;
    let cs = chern_classes_closed_form(d)?;
    let x1 = recurrence(&cs)?.pop().expect("recurrence yields d_0..d_n");
    PorteousResult::new(x1, Method::Recurrence)
}

pub fn porteous_closed_form(d: u32) -> Result<PorteousResult> {
    PorteousResult::new(dn_closed_form(matrix_size(d), d)?, Method::ClosedForm)
}

pub fn porteous_class(d: u32, method: Method) -> Result<PorteousResult> {
    match method {
        Method::Cofactor => porteous_det_cofactor(d),
        Method::Recurrence => porteous_det_recurrence(d),
        Method::ClosedForm => porteous_closed_form(d),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::int;

    /// Terms `(theta_pow, h_pow, num, den)`.
    fn amb(d: u32, terms: &[(usize, usize, i64, i64)]) -> AmbientClass {
        AmbientClass::from_terms(d, terms.iter().map(|&(a, b, n, m)| (a, b, frac(n, m)))).unwrap()
    }

    /// Leibniz expansion over all permutations; test-only oracle.
    fn leibniz(m: &PorteousMatrix) -> AmbientClass {
        fn permutations(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in permutations(n - 1) {
                for pos in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(pos, n - 1);
                    out.push(q);
                }
            }
            out
        }
        let n = m.size();
        let mut acc = m.entry(0, 0).zero_like();
        for p in permutations(n) {
            let inversions = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| p[i] > p[j])
                .count();
            let mut term = m.entry(0, 0).one_like();
            for (r, &c) in p.iter().enumerate() {
                term = term.times(m.entry(r, c));
            }
            acc = if inversions % 2 == 0 {
                acc.plus(&term)
            } else {
                acc.minus(&term)
            };
        }
        acc
    }

    // Frozen from an independent symbolic computation of
    // exp(Tt) / ((1-ht)^(d-4) exp(-Tt/(1-ht))) and a Berkowitz determinant.
    fn oracle_c(d: u32) -> Vec<AmbientClass> {
        let raw: &[&[(usize, usize, i64, i64)]] = match d {
            8 => &[
                &[(1, 0, 2, 1), (0, 1, 4, 1)],
                &[(2, 0, 2, 1), (1, 1, 9, 1), (0, 2, 10, 1)],
                &[(2, 1, 10, 1), (1, 2, 25, 1), (0, 3, 20, 1)],
            ],
            9 => &[
                &[(1, 0, 2, 1), (0, 1, 5, 1)],
                &[(2, 0, 2, 1), (1, 1, 11, 1), (0, 2, 15, 1)],
                &[(2, 1, 12, 1), (1, 2, 36, 1), (0, 3, 35, 1)],
                &[(2, 2, 85, 2), (1, 3, 91, 1), (0, 4, 70, 1)],
            ],
            10 => &[
                &[(1, 0, 2, 1), (0, 1, 6, 1)],
                &[(2, 0, 2, 1), (1, 1, 13, 1), (0, 2, 21, 1)],
                &[(2, 1, 14, 1), (1, 2, 49, 1), (0, 3, 56, 1)],
                &[(2, 2, 113, 2), (1, 3, 140, 1), (0, 4, 126, 1)],
                &[(2, 3, 172, 1), (1, 4, 336, 1), (0, 5, 252, 1)],
            ],
            _ => unreachable!(),
        };
        raw.iter().map(|t| amb(d, t)).collect()
    }

    fn oracle_x1(d: u32) -> AmbientClass {
        match d {
            8 => amb(8, &[(0, 3, 4, 1), (1, 2, 9, 1), (2, 1, 6, 1)]),
            9 => amb(9, &[(0, 4, 5, 1), (1, 3, 14, 1), (2, 2, 25, 2)]),
            10 => amb(10, &[(0, 5, 6, 1), (1, 4, 20, 1), (2, 3, 22, 1)]),
            _ => unreachable!(),
        }
    }

    #[test]
    fn chern_series_of_f() {
        let f = chern_series_f(8, 3).unwrap();
        assert!(f.coeff(0).unwrap().is_one());
        assert_eq!(f.coeff(1).unwrap(), &AmbientClass::theta(8).unwrap());
        assert_eq!(f.coeff(2).unwrap(), &amb(8, &[(2, 0, 1, 2)]));
        assert!(f.coeff(3).unwrap().is_zero());
    }

    #[test]
    fn twist_examples() {
        let d = 9;
        let order = 4;
        let one = ChernSeries::one(&AmbientClass::one(d).unwrap(), order);
        let one_minus_ht = ChernSeries::new(
            vec![AmbientClass::one(d).unwrap(), -&AmbientClass::h(d).unwrap()],
            order,
        )
        .unwrap();
        assert_eq!(
            twist_by_hyperplane(&one, 3, 1).unwrap(),
            one_minus_ht.pow(3).unwrap()
        );

        let e_minus = ChernSeries::monomial(-&AmbientClass::theta(d).unwrap(), 1, order)
            .exp()
            .unwrap();
        assert_eq!(twist_by_hyperplane(&e_minus, 5, 0).unwrap(), e_minus);

        // (1-ht)^(d-4) exp(-Tt/(1-ht)) assembled directly
        let g = ChernSeries::variable(&AmbientClass::one(d).unwrap(), order)
            .mul(&one_minus_ht.inv().unwrap())
            .unwrap();
        let direct = one_minus_ht
            .pow(d - 4)
            .unwrap()
            .mul(&e_minus.subst(&g).unwrap())
            .unwrap();
        assert_eq!(
            twist_by_hyperplane(&e_minus, i64::from(d) - 4, 1).unwrap(),
            direct
        );
        assert_eq!(chern_series_e(d, order).unwrap(), direct);

        let two = one.scale(&int(2));
        assert!(matches!(
            twist_by_hyperplane(&two, 1, 1),
            Err(EngineError::NonUnitConstant(_))
        ));
    }

    #[test]
    fn difference_matches_oracle() {
        for d in [8, 9, 10] {
            let n = matrix_size(d);
            let series = chern_difference(d, n).unwrap();
            let expected = oracle_c(d);
            for i in 1..=n {
                assert_eq!(series.coeff(i).unwrap(), &expected[i - 1], "d={d} c_{i}");
                assert_eq!(
                    ci_closed_form(i, d).unwrap(),
                    expected[i - 1],
                    "d={d} closed c_{i}"
                );
            }
        }
    }

    #[test]
    fn first_chern_class() {
        for d in [8, 15, 31] {
            let c1 = chern_difference(d, matrix_size(d))
                .unwrap()
                .coeff(1)
                .unwrap()
                .clone();
            let expected = amb(d, &[(0, 1, i64::from(d) - 4, 1), (1, 0, 2, 1)]);
            assert_eq!(c1, expected);
        }
    }

    #[test]
    fn division_contract() {
        let d = 12;
        let n = matrix_size(d);
        let diff = chern_difference(d, n).unwrap();
        let back = diff.mul(&chern_series_e(d, n).unwrap()).unwrap();
        assert_eq!(back, chern_series_f(d, n).unwrap());
    }

    #[test]
    fn order_guard() {
        assert!(matches!(
            chern_difference(10, 4),
            Err(EngineError::OrderTooSmall { .. })
        ));
        assert!(chern_difference(10, 9).is_ok());
        assert_eq!(chern_difference(7, 5), Err(EngineError::DegreeTooSmall(7)));
    }

    #[test]
    fn ci_range() {
        assert!(ci_closed_form(0, 10).is_err());
        assert!(ci_closed_form(6, 10).is_err());
        assert!(ci_closed_form(5, 10).is_ok());
    }

    #[test]
    fn three_routes_for_difference() {
        for d in [8, 11, 17] {
            let n = matrix_size(d);
            let division = chern_difference(d, n).unwrap();
            assert_eq!(chern_difference_exponential(d, n).unwrap(), division);
            assert_eq!(chern_difference_expansion(d, n).unwrap(), division);
        }
    }

    #[test]
    fn matrix_shape() {
        let cs = chern_classes_closed_form(11).unwrap();
        let m = PorteousMatrix::from_chern_classes(&cs).unwrap();
        assert_eq!(m.size(), 6);
        assert!(m.is_hessenberg_normalised());
        assert_eq!(m.entry(0, 5), &cs[6]);
        assert_eq!(m.entry(2, 1), &cs[0]);
        assert!(m.entry(4, 1).is_zero());
        let bad = [cs[1].clone(), cs[1].clone()];
        assert!(PorteousMatrix::from_chern_classes(&bad).is_err());
    }

    #[test]
    fn hessenberg_determinant_matches_leibniz() {
        for d in [8, 9, 10, 11] {
            let m =
                PorteousMatrix::from_chern_classes(&chern_classes_closed_form(d).unwrap()).unwrap();
            assert_eq!(m.determinant().unwrap(), leibniz(&m), "d={d}");
        }
    }

    #[test]
    fn porteous_oracle_values() {
        for d in [8, 9, 10] {
            for method in Method::ALL {
                let r = porteous_class(d, method).unwrap();
                assert_eq!(r.x1, oracle_x1(d), "d={d} {method}");
                assert_eq!(r.method, method);
            }
        }
    }

    #[test]
    fn low_order_minors() {
        let d = 13;
        let cs = chern_classes_closed_form(d).unwrap();
        let ds = recurrence(&cs).unwrap();
        assert!(ds[0].is_one());
        assert_eq!(ds[1], cs[1]);
        assert_eq!(ds[2], &(&cs[1] * &cs[1]) - &cs[2]);
        assert_eq!(ds[1], amb(d, &[(0, 1, 9, 1), (1, 0, 2, 1)]));
    }

    #[test]
    fn dn_closed_form_domain() {
        assert!(matches!(dn_closed_form(2, 10), Err(EngineError::Domain(_))));
        assert!(matches!(dn_closed_form(6, 10), Err(EngineError::Domain(_))));
        assert_eq!(dn_closed_form(3, 8).unwrap(), oracle_x1(8));
    }

    #[test]
    fn dn_closed_form_at_top_index() {
        // (d-4) h^(d-5) + (C(d-3,2) - 1) T h^(d-6) + (C(d-2,3)/2 - (d-4)) T^2 h^(d-7)
        for d in 8u32..=30 {
            let dd = i64::from(d);
            let n = matrix_size(d);
            let expected = AmbientClass::from_terms(
                d,
                [
                    (0, n, int(dd - 4)),
                    (1, n - 1, int((dd - 3) * (dd - 4) / 2 - 1)),
                    (
                        2,
                        n - 2,
                        frac((dd - 2) * (dd - 3) * (dd - 4), 12) - int(dd - 4),
                    ),
                ],
            )
            .unwrap();
            assert_eq!(dn_closed_form(n, d).unwrap(), expected, "d={d}");
        }
    }

    #[test]
    fn method_names_round_trip() {
        for m in Method::ALL {
            assert_eq!(m.as_str().parse::<Method>().unwrap(), m);
        }
        assert!("gauss".parse::<Method>().is_err());
    }
}
