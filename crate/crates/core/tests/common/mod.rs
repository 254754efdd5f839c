#![allow(dead_code)]

use proptest::prelude::*;
use sec3_core::grr::UpstreamClass;
use sec3_core::ring::{frac, AmbientClass, ChernSeries, Rational, RingElement, ThetaPoly};

pub fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| frac(n, d))
}

/// Mostly-zero coefficients keep products cheap while covering every slot.
pub fn sparse_rational() -> impl Strategy<Value = Rational> {
    prop_oneof![3 => Just(frac(0, 1)), 1 => rational()]
}

pub fn theta_poly() -> impl Strategy<Value = ThetaPoly> {
    (rational(), rational(), rational()).prop_map(|(a, b, c)| ThetaPoly::new(a, b, c))
}

pub fn upstream() -> impl Strategy<Value = UpstreamClass> {
    (theta_poly(), theta_poly(), theta_poly()).prop_map(|(a, b, c)| UpstreamClass::new(a, b, c))
}

pub fn ambient_in(d: u32) -> impl Strategy<Value = AmbientClass> {
    let width = d as usize - 1;
    proptest::collection::vec(sparse_rational(), 3 * width).prop_map(move |cs| {
        let terms = cs
            .into_iter()
            .enumerate()
            .map(|(i, c)| (i / width, i % width, c));
        AmbientClass::from_terms(d, terms).unwrap()
    })
}

pub fn ambient_triple() -> impl Strategy<Value = (AmbientClass, AmbientClass, AmbientClass)> {
    (8u32..=11).prop_flat_map(|d| (ambient_in(d), ambient_in(d), ambient_in(d)))
}

pub fn series_in(
    d: u32,
    order: usize,
    unit_constant: bool,
) -> impl Strategy<Value = ChernSeries<AmbientClass>> {
    proptest::collection::vec(ambient_in(d), order + 1).prop_map(move |mut cs| {
        cs[0] = if unit_constant {
            AmbientClass::one(d).unwrap()
        } else {
            AmbientClass::zero(d).unwrap()
        };
        ChernSeries::new(cs, order).unwrap()
    })
}

pub fn series_case<F, S>(max_order: usize, f: F) -> impl Strategy<Value = S::Value>
where
    F: Fn(u32, usize) -> S,
    S: Strategy,
{
    (8u32..=10, 0usize..=max_order).prop_flat_map(move |(d, n)| f(d, n))
}

pub fn check_axioms<R: RingElement>(
    a: &R,
    b: &R,
    c: &R,
    x: &Rational,
) -> Result<(), TestCaseError> {
    prop_assert_eq!(a.times(b).times(c), a.times(&b.times(c)), "associativity");
    prop_assert_eq!(a.times(b), b.times(a), "commutativity");
    prop_assert_eq!(
        a.times(&b.plus(c)),
        a.times(b).plus(&a.times(c)),
        "distributivity"
    );
    prop_assert_eq!(
        a.plus(b).plus(c),
        a.plus(&b.plus(c)),
        "additive associativity"
    );
    prop_assert_eq!(a.plus(b), b.plus(a), "additive commutativity");
    prop_assert_eq!(a.times(&a.one_like()), a.clone(), "unit");
    prop_assert_eq!(a.plus(&a.zero_like()), a.clone(), "zero");
    prop_assert!(a.minus(a).is_zero(), "additive inverse");
    prop_assert_eq!(
        a.scaled(x).times(b),
        a.times(b).scaled(x),
        "scalar compatibility"
    );
    Ok(())
}

pub fn check_ambient_nilpotency(a: &AmbientClass) -> Result<(), TestCaseError> {
    let d = a.d();
    let theta = AmbientClass::theta(d).unwrap();
    prop_assert!(a.times(&theta.pow(3)).is_zero());
    let h = AmbientClass::h(d).unwrap();
    prop_assert!(a.times(&h.pow(2)).times(&h.pow(d - 3)).is_zero());
    Ok(())
}

pub fn check_inverse(a: &ChernSeries<AmbientClass>) -> Result<(), TestCaseError> {
    let inv = a.inv().unwrap();
    let one = ChernSeries::one(a.constant_term(), a.order());
    prop_assert_eq!(a.mul(&inv).unwrap(), one);
    prop_assert_eq!(&inv.inv().unwrap(), a);
    Ok(())
}

pub fn check_exp(
    x: &ChernSeries<AmbientClass>,
    y: &ChernSeries<AmbientClass>,
) -> Result<(), TestCaseError> {
    let lhs = x.add(y).unwrap().exp().unwrap();
    let rhs = x.exp().unwrap().mul(&y.exp().unwrap()).unwrap();
    prop_assert_eq!(lhs, rhs);
    Ok(())
}

pub fn check_identity_subst(a: &ChernSeries<AmbientClass>) -> Result<(), TestCaseError> {
    let t = ChernSeries::variable(a.constant_term(), a.order());
    prop_assert_eq!(&a.subst(&t).unwrap(), a);
    Ok(())
}
