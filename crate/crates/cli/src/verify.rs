use std::fmt::Write;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use sec3_core::degree::{verify_binomial_identities, DegreeReport};
use sec3_core::grr::{self, UpstreamClass};
use sec3_core::porteous::{self, matrix_size, PorteousMatrix};
use sec3_core::ring::{frac, nilpotent_exp, AmbientClass, Rational, RingElement, ThetaPoly};
use sec3_core::EngineError;

use crate::config::Format;

const RING_SAMPLES: usize = 200;
const BINOMIAL_BOUND: u32 = 12;
const SEED: u64 = 0x5ec3;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub d: Option<u32>,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub passed: bool,
    pub d_min: u32,
    pub d_max: u32,
    pub checks: Vec<CheckResult>,
}

/// Deliberate corruption of one pipeline stage, for exercising the checks.
#[doc(hidden)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// Adds `h^2` to `c_2` before the cofactor determinant.
    PerturbC2,
}

#[derive(Debug, Clone, Default)]
pub struct VerifyOptions {
    #[doc(hidden)]
    pub fault: Option<Fault>,
}

type CheckOutcome = Result<(), Counterexample>;
type Check = dyn Fn() -> CheckOutcome + Sync;

fn mismatch(d: Option<u32>, expected: impl ToString, actual: impl ToString) -> Counterexample {
    Counterexample {
        d,
        expected: expected.to_string(),
        actual: actual.to_string(),
    }
}

fn engine(d: Option<u32>) -> impl Fn(EngineError) -> Counterexample {
    move |e| mismatch(d, "no error", e)
}

fn expect_eq<T: PartialEq + ToString>(d: Option<u32>, expected: &T, actual: &T) -> CheckOutcome {
    if expected == actual {
        Ok(())
    } else {
        Err(mismatch(d, expected.to_string(), actual.to_string()))
    }
}

fn random_rational(rng: &mut StdRng) -> Rational {
    frac(rng.gen_range(-9..=9), rng.gen_range(1..=5))
}

fn random_theta(rng: &mut StdRng) -> ThetaPoly {
    ThetaPoly::new(
        random_rational(rng),
        random_rational(rng),
        random_rational(rng),
    )
}

fn random_ambient(rng: &mut StdRng, d: u32) -> AmbientClass {
    let mut terms = Vec::new();
    for a in 0..3 {
        for b in 0..=d as usize - 2 {
            if rng.gen_bool(0.25) {
                terms.push((a, b, random_rational(rng)));
            }
        }
    }
    AmbientClass::from_terms(d, terms).expect("d validated")
}

fn axioms_hold<R: RingElement>(a: &R, b: &R, c: &R) -> bool {
    a.times(b).times(c) == a.times(&b.times(c))
        && a.times(b) == b.times(a)
        && a.times(&b.plus(c)) == a.times(b).plus(&a.times(c))
        && a.plus(b).plus(c) == a.plus(&b.plus(c))
        && a.times(&a.one_like()) == *a
        && a.minus(a).is_zero()
}

fn check_ring_axioms(d_min: u32) -> CheckOutcome {
    let mut rng = StdRng::seed_from_u64(SEED);
    for _ in 0..RING_SAMPLES {
        let (a, b, c) = (
            random_theta(&mut rng),
            random_theta(&mut rng),
            random_theta(&mut rng),
        );
        if !axioms_hold(&a, &b, &c) {
            return Err(mismatch(None, "ring axioms", format!("{a}, {b}, {c}")));
        }
        let up = |rng: &mut StdRng| {
            UpstreamClass::new(random_theta(rng), random_theta(rng), random_theta(rng))
        };
        let (a, b, c) = (up(&mut rng), up(&mut rng), up(&mut rng));
        if !axioms_hold(&a, &b, &c) {
            return Err(mismatch(None, "ring axioms", format!("{a}, {b}, {c}")));
        }
        let d = d_min + rng.gen_range(0..4);
        let (a, b, c) = (
            random_ambient(&mut rng, d),
            random_ambient(&mut rng, d),
            random_ambient(&mut rng, d),
        );
        if !axioms_hold(&a, &b, &c) {
            return Err(mismatch(Some(d), "ring axioms", format!("{a}, {b}, {c}")));
        }
    }
    Ok(())
}

fn check_gamma_relations() -> CheckOutcome {
    let f = UpstreamClass::f();
    let g = UpstreamClass::gamma();
    let minus_two_f_theta = (&f * &UpstreamClass::theta()).scaled(&frac(-2, 1));
    expect_eq(None, &minus_two_f_theta, &(&g * &g))?;
    expect_eq(None, &UpstreamClass::zero(), &(&f * &g))?;
    expect_eq(None, &UpstreamClass::zero(), &g.pow(3))?;
    let c1 = grr::poincare_c1();
    expect_eq(None, &minus_two_f_theta, &c1.pow(2))?;
    expect_eq(None, &UpstreamClass::zero(), &c1.pow(3))?;
    let expected_ch = &(&UpstreamClass::one() + &c1) - &(&f * &UpstreamClass::theta());
    let ch = nilpotent_exp(&c1, 3).map_err(engine(None))?;
    expect_eq(None, &expected_ch, &ch)
}

fn check_ch_h(d: u32) -> CheckOutcome {
    let (h, _) = grr::compute_bundle_characters(d).map_err(engine(Some(d)))?;
    expect_eq(Some(d), &ThetaPoly::from_ints(2, -1, 0), &h.chern_character)
}

fn check_ch_g(d: u32) -> CheckOutcome {
    let (_, g) = grr::compute_bundle_characters(d).map_err(engine(Some(d)))?;
    expect_eq(Some(d), &grr::expected_ch_g(d), &g.chern_character)
}

fn check_ci(d: u32) -> CheckOutcome {
    let n = matrix_size(d);
    let series = porteous::chern_difference(d, n).map_err(engine(Some(d)))?;
    for i in 1..=n {
        let closed = porteous::ci_closed_form(i, d).map_err(engine(Some(d)))?;
        expect_eq(Some(d), &closed, &series.coeffs()[i])?;
    }
    Ok(())
}

fn check_exponential_form(d: u32) -> CheckOutcome {
    let n = matrix_size(d);
    let division = porteous::chern_difference(d, n).map_err(engine(Some(d)))?;
    let closed = porteous::chern_difference_exponential(d, n).map_err(engine(Some(d)))?;
    expect_eq(Some(d), &closed.to_string(), &division.to_string())
}

fn check_expansion(d: u32) -> CheckOutcome {
    let n = matrix_size(d);
    let division = porteous::chern_difference(d, n).map_err(engine(Some(d)))?;
    let expanded = porteous::chern_difference_expansion(d, n).map_err(engine(Some(d)))?;
    expect_eq(Some(d), &expanded.to_string(), &division.to_string())
}

fn check_three_way(d: u32, fault: Option<Fault>) -> CheckOutcome {
    let n = matrix_size(d);
    let series = porteous::chern_difference(d, n).map_err(engine(Some(d)))?;
    let mut cs = porteous::chern_classes(&series, n).map_err(engine(Some(d)))?;
    if fault == Some(Fault::PerturbC2) {
        let h2 = AmbientClass::h(d).map_err(engine(Some(d)))?.pow(2);
        cs[2] = &cs[2] + &h2;
    }
    let cofactor = PorteousMatrix::from_chern_classes(&cs)
        .and_then(|m| m.determinant())
        .map_err(engine(Some(d)))?;
    let recurrence = porteous::porteous_det_recurrence(d)
        .map_err(engine(Some(d)))?
        .x1;
    let closed = porteous::porteous_closed_form(d)
        .map_err(engine(Some(d)))?
        .x1;
    expect_eq(Some(d), &closed, &recurrence)?;
    expect_eq(Some(d), &closed, &cofactor)
}

fn check_lemma(d: u32) -> CheckOutcome {
    let cs = porteous::chern_classes_closed_form(d).map_err(engine(Some(d)))?;
    let ds = porteous::recurrence(&cs).map_err(engine(Some(d)))?;
    for (n, dn) in ds.iter().enumerate().skip(3) {
        let closed = porteous::dn_closed_form(n, d).map_err(engine(Some(d)))?;
        expect_eq(Some(d), &closed, dn)?;
    }
    Ok(())
}

fn check_binomials() -> CheckOutcome {
    if verify_binomial_identities(BINOMIAL_BOUND) {
        Ok(())
    } else {
        Err(mismatch(None, "upper negation and Vandermonde", "violated"))
    }
}

fn check_berzolari(d: u32) -> CheckOutcome {
    let r = DegreeReport::compute(d).map_err(engine(Some(d)))?;
    for got in [r.degree_porteous, r.degree_recurrence, r.degree_closed_form] {
        expect_eq(Some(d), &r.degree_berzolari, &got)?;
    }
    Ok(())
}

/// Runs a per-`d` check over the range in parallel; reports the smallest
/// failing `d`.
fn sweep(lo: u32, hi: u32, check: impl Fn(u32) -> CheckOutcome + Sync + Send) -> CheckOutcome {
    let outcomes: Vec<CheckOutcome> = (lo..=hi).into_par_iter().map(check).collect();
    outcomes.into_iter().find(Result::is_err).unwrap_or(Ok(()))
}

pub fn run_checks(d_min: u32, d_max: u32, options: &VerifyOptions) -> VerifyReport {
    let fault = options.fault;
    let checks: Vec<(&str, Box<Check>)> = vec![
        ("ring axioms", Box::new(move || check_ring_axioms(d_min))),
        ("gamma relations", Box::new(check_gamma_relations)),
        (
            "ch(H) = 2 - T",
            Box::new(move || sweep(d_min, d_max, check_ch_h)),
        ),
        (
            "ch(G) = (d-4) - T",
            Box::new(move || sweep(d_min, d_max, check_ch_g)),
        ),
        (
            "c_i closed form vs division",
            Box::new(move || sweep(d_min, d_max, check_ci)),
        ),
        (
            "exponential form vs division",
            Box::new(move || sweep(d_min, d_max, check_exponential_form)),
        ),
        (
            "five-sum expansion vs division",
            Box::new(move || sweep(d_min, d_max, check_expansion)),
        ),
        (
            "determinant three-way agreement",
            Box::new(move || sweep(d_min, d_max, |d| check_three_way(d, fault))),
        ),
        (
            "lemma d_n vs recurrence",
            Box::new(move || sweep(d_min, d_max, check_lemma)),
        ),
        ("binomial identities", Box::new(check_binomials)),
        (
            "degree vs berzolari",
            Box::new(move || sweep(d_min, d_max, check_berzolari)),
        ),
    ];
    let results: Vec<CheckResult> = checks
        .into_iter()
        .map(|(name, check)| {
            let outcome = check();
            CheckResult {
                name: name.to_string(),
                passed: outcome.is_ok(),
                counterexample: outcome.err(),
            }
        })
        .collect();
    VerifyReport {
        passed: results.iter().all(|c| c.passed),
        d_min,
        d_max,
        checks: results,
    }
}

impl VerifyReport {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string(self).expect("plain struct serializes") + "\n",
            Format::Csv => {
                let mut out = String::from("check,passed,d,expected,actual\n");
                for c in &self.checks {
                    let (d, exp, act) = match &c.counterexample {
                        Some(x) => (
                            x.d.map(|d| d.to_string()).unwrap_or_default(),
                            x.expected.as_str(),
                            x.actual.as_str(),
                        ),
                        None => (String::new(), "", ""),
                    };
                    writeln!(
                        out,
                        "{},{},{d},{},{}",
                        csv_field(&c.name),
                        c.passed,
                        csv_field(exp),
                        csv_field(act)
                    )
                    .unwrap();
                }
                out
            }
            Format::Text => {
                let mut out = String::new();
                for c in &self.checks {
                    match &c.counterexample {
                        None => writeln!(out, "PASS {}", c.name).unwrap(),
                        Some(x) => {
                            let at = x.d.map(|d| format!(" at d = {d}")).unwrap_or_default();
                            writeln!(
                                out,
                                "FAIL {}{at}: expected {}, got {}",
                                c.name, x.expected, x.actual
                            )
                            .unwrap()
                        }
                    }
                }
                let status = if self.passed { "pass" } else { "fail" };
                writeln!(
                    out,
                    "verify d in [{}, {}]: {status}",
                    self.d_min, self.d_max
                )
                .unwrap();
                out
            }
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
