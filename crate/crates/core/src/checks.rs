//! Named suites of end-to-end checks with pass/fail results, shared by the
//! `verify` command and the acceptance tests.

use std::collections::BTreeSet;
use std::fmt;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;

use crate::coeff::{Coeff, Domain};
use crate::error::Result;
use crate::groebner::{buchberger_with, tau, tau_formula, GroebnerOptions, MonomialOrder};
use crate::hilbert::{hironaka_numerator, molien, MultiSeries};
use crate::invariants::{basis_transition, bracket, is_decomposable, GroupContext, ProductMode};
use crate::poly::Poly;
use crate::presentation::{
    finite_presentation, hironaka_identity, minimize_presentation, presentation_degree, primary_generators,
    secondary_generators, verify_presentation, Presentation,
};
use crate::relations::{evaluate, fundamental_relation, multilinear_basis_check, normal_form, verify_trace_identity};
use crate::sigma::{
    amitsur_component, bounded_generators, characteristic_component_direct, generator_degree, generators_span,
    newton_polynomial, relation_family,
};
use crate::trace::TracePoly;
use crate::word::{multidegrees_up_to, Word, WordMultiset};

pub const SUITES: [&str; 6] = ["section6", "trace-identity", "basis", "multilinear", "sigma", "presentation"];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    fn new(name: &str, passed: bool, detail: impl Into<String>) -> CheckResult {
        CheckResult {
            name: name.to_string(),
            passed,
            detail: detail.into(),
        }
    }

    fn from_result(name: &str, r: Result<(bool, String)>) -> CheckResult {
        match r {
            Ok((passed, detail)) => CheckResult::new(name, passed, detail),
            Err(e) => CheckResult::new(name, false, format!("error: {e}")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            writeln!(f, "{tag} {}/{}: {}", self.suite, c.name, c.detail)?;
        }
        let ok = self.checks.iter().filter(|c| c.passed).count();
        write!(f, "{}: {ok}/{} passed", self.suite, self.checks.len())
    }
}

type Check = fn() -> CheckResult;

fn suite_checks(name: &str) -> Option<Vec<Check>> {
    let checks: Vec<Check> = match name {
        "section6" => vec![
            two_point_molien,
            two_point_identities,
            two_point_secondaries,
            three_point_numerator_check,
            three_point_congruences,
            three_point_minimal_relations,
            two_point_minimal_relations,
        ],
        "trace-identity" => vec![trace_identity, fundamental_relation_sample],
        "basis" => vec![transition_matrices, normal_form_sample],
        "multilinear" => vec![multilinear_small_fields, indecomposable_mod_two],
        "sigma" => vec![amitsur_direct, newton_squares, family_vanishes, bounded_generators_span],
        "presentation" => vec![
            tau_table,
            degree_identity,
            presentation_dimensions,
            mutation_two_points,
            mutation_three_points,
            mutation_signed,
        ],
        _ => return None,
    };
    Some(checks)
}

/// Runs one suite; `None` for an unknown name. Checks run in parallel and
/// are reported in a fixed order.
pub fn run_suite(name: &str) -> Option<SuiteReport> {
    let checks = suite_checks(name)?;
    let results = checks.par_iter().map(|c| c()).collect();
    Some(SuiteReport {
        suite: name.to_string(),
        checks: results,
    })
}

fn word(text: &str, m: usize) -> Word {
    Word::parse(text, m).expect("valid word literal")
}

fn rational(v: i64) -> Coeff {
    Coeff::from_i64(Domain::Rational, v)
}

/// A random word of `M(q)` over `m` series with degree at most `max_degree`.
pub fn random_word(rng: &mut impl Rng, m: usize, q: u32, max_degree: u32) -> Word {
    let d = q * rng.gen_range(1..=max_degree / q);
    let mut exps = vec![0u32; m];
    for _ in 0..d {
        exps[rng.gen_range(0..m)] += 1;
    }
    Word::new(exps).expect("nonzero word")
}

fn series_closed_form_two_points(m: usize, truncation: u32) -> MultiSeries {
    // Σ_i e_{2i}(t) / Π (1 − t_j)(1 − t_j²)
    let mut terms = Vec::new();
    for mask in 0u32..(1 << m) {
        if mask.count_ones() % 2 == 0 {
            terms.push(((0..m).map(|j| (mask >> j) & 1).collect::<Vec<u32>>(), 1));
        }
    }
    let mut s = MultiSeries::from_terms(m, truncation, terms);
    for j in 0..m {
        for k in 1..=2 {
            let mut e = vec![0; m];
            e[j] = k;
            s = s.div_one_minus(&e);
        }
    }
    s
}

fn two_point_molien() -> CheckResult {
    let r = (|| -> Result<(bool, String)> {
        let mut ok = true;
        for m in [2, 3] {
            let table = molien(2, 1, m, 8)?;
            ok &= table.series() == series_closed_form_two_points(m, 8);
        }
        Ok((ok, "S2 Molien series for m=2,3 equals the closed form through degree 8".into()))
    })();
    CheckResult::from_result("two-point-molien", r)
}

const TWO_POINT_IDENTITIES: [(&str, usize, &str); 5] = [
    (
        "three-letter",
        3,
        "2*t(x1*x2*x3) - t(x1*x2)*t(x3) - t(x1*x3)*t(x2) - t(x2*x3)*t(x1) + t(x1)*t(x2)*t(x3)",
    ),
    (
        "four-letter",
        4,
        "4*t(x1*x2*x3*x4) - t(x1*x3)*t(x2)*t(x4) - t(x1*x4)*t(x2)*t(x3) - t(x2*x3)*t(x1)*t(x4) \
         - t(x2*x4)*t(x1)*t(x3) - 2*t(x1*x2)*t(x3*x4) + 2*t(x1)*t(x2)*t(x3)*t(x4)",
    ),
    (
        "four-letter-swapped",
        4,
        "4*t(x1*x3*x2*x4) - t(x1*x2)*t(x3)*t(x4) - t(x1*x4)*t(x2)*t(x3) - t(x2*x3)*t(x1)*t(x4) \
         - t(x3*x4)*t(x1)*t(x2) - 2*t(x1*x3)*t(x2*x4) + 2*t(x1)*t(x2)*t(x3)*t(x4)",
    ),
    (
        "exchange",
        4,
        "2*t(x1*x3)*t(x2*x4) - 2*t(x1*x2)*t(x3*x4) - t(x1*x3)*t(x2)*t(x4) - t(x2*x4)*t(x1)*t(x3) \
         + t(x1*x2)*t(x3)*t(x4) + t(x3*x4)*t(x1)*t(x2)",
    ),
    (
        "square",
        4,
        "2*t(x1*x3)*t(x2*x3) - 2*t(x1*x2)*t(x3^2) - t(x1*x3)*t(x2)*t(x3) - t(x2*x3)*t(x1)*t(x3) \
         + t(x1*x2)*t(x3)^2 + t(x3^2)*t(x1)*t(x2)",
    ),
];

// the exchange identity with the opposite sign on its degree-four
// products; it is not an identity
const EXCHANGE_OPPOSITE_SIGN: &str = "2*t(x1*x3)*t(x2*x4) - 2*t(x1*x2)*t(x3*x4) - t(x1*x2)*t(x3)*t(x4) \
     - t(x3*x4)*t(x1)*t(x2) + t(x1*x3)*t(x2)*t(x4) + t(x2*x4)*t(x1)*t(x3)";

/// Outcome of [`two_point_identities_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoPointIdentities {
    /// Each identity with whether it evaluates to zero for two points.
    pub vanishing: Vec<(&'static str, bool)>,
    /// The exchange identity is the difference of the two four-letter ones.
    pub exchange_is_difference: bool,
    /// The square identity is the exchange identity at `x4 = x3`.
    pub square_is_specialization: bool,
    /// Whether the opposite-sign exchange variant vanishes (it must not).
    pub opposite_sign_vanishes: bool,
}

impl TwoPointIdentities {
    pub fn passed(&self) -> bool {
        self.vanishing.iter().all(|(_, ok)| *ok)
            && self.exchange_is_difference
            && self.square_is_specialization
            && !self.opposite_sign_vanishes
    }
}

/// The low-degree identities among power sums of two points, written with
/// integer coefficients, together with how they derive from each other.
pub fn two_point_identities_check() -> Result<TwoPointIdentities> {
    let z = Domain::Integer;
    let mut parsed = Vec::new();
    let mut vanishing = Vec::new();
    for (name, m, text) in TWO_POINT_IDENTITIES {
        let tp = TracePoly::parse(text, 1, m, z)?;
        vanishing.push((name, evaluate(&tp, 2).is_zero()));
        parsed.push(tp);
    }
    let exchange_is_difference = parsed[1].try_sub(&parsed[2])? == parsed[3];
    let mut collapse = |w: &Word| {
        let e = w.exponents();
        let folded = Word::new(vec![e[0], e[1], e[2] + e[3], 0]).ok()?;
        TracePoly::t(1, &folded, z).ok()
    };
    let square_is_specialization = parsed[3].substitute(&mut collapse)? == parsed[4];
    let opposite = TracePoly::parse(EXCHANGE_OPPOSITE_SIGN, 1, 4, z)?;
    Ok(TwoPointIdentities {
        vanishing,
        exchange_is_difference,
        square_is_specialization,
        opposite_sign_vanishes: evaluate(&opposite, 2).is_zero(),
    })
}

fn two_point_identities() -> CheckResult {
    let r = two_point_identities_check().map(|t| {
        let names: Vec<String> = t
            .vanishing
            .iter()
            .map(|(n, ok)| format!("{n}={}", if *ok { "0" } else { "nonzero" }))
            .collect();
        (
            t.passed(),
            format!(
                "n=2 identities: {}; exchange = four-letter − swapped: {}; square = exchange at w=z: {}; \
                 opposite-sign exchange vanishes: {}",
                names.join(", "),
                t.exchange_is_difference,
                t.square_is_specialization,
                t.opposite_sign_vanishes
            ),
        )
    });
    CheckResult::from_result("two-point-identities", r)
}

fn two_point_secondaries() -> CheckResult {
    let r = (|| -> Result<(bool, String)> {
        let mut ok = true;
        let mut shown = String::new();
        for m in [2, 3] {
            let p = primary_generators(2, 1, m);
            let s = secondary_generators(2, 1, m)?;
            ok &= hironaka_identity(2, 1, m, &p, &s, 8);
            if m == 2 {
                ok &= s.display() == ["1", "[x1*x2]"];
                shown = s.display().join(", ");
            }
        }
        Ok((ok, format!("secondaries {{{shown}}} for m=2; free-module series identity through degree 8 for m=2,3")))
    })();
    CheckResult::from_result("two-point-secondaries", r)
}

/// The numerator `H · Π_{k≤3}(1 − t1^k)(1 − t2^k)` for three points in two
/// series, from the Molien series, inside the box `(6,6)`.
pub fn three_point_numerator() -> Result<Vec<(Vec<u32>, i64)>> {
    let table = molien(3, 1, 2, 12)?;
    let num = hironaka_numerator(&table, &primary_generators(3, 1, 2).multidegrees());
    Ok(num
        .restrict_box(&[6, 6])
        .into_iter()
        .filter(|(_, c)| c != &num_bigint::BigInt::from(0))
        .map(|(a, c)| (a, i64::try_from(c).expect("small coefficient")))
        .collect())
}

fn three_point_numerator_check() -> CheckResult {
    let expect: Vec<(Vec<u32>, i64)> = [[0, 0], [1, 1], [2, 1], [1, 2], [2, 2], [3, 3]]
        .iter()
        .map(|a| (a.to_vec(), 1))
        .collect();
    let r = three_point_numerator().map(|mut got| {
        got.sort();
        let mut want = expect.clone();
        want.sort();
        (got == want, "numerator 1+t1t2+t1²t2+t1t2²+t1²t2²+t1³t2³ through (6,6)".to_string())
    });
    CheckResult::from_result("three-point-numerator", r)
}

/// The congruences modulo the ideal generated by the primary invariants
/// `[x^k], [y^k]`, `k ≤ 3`, for three points in two series.
pub const THREE_POINT_CONGRUENCES: [&str; 17] = [
    "t(x1^4)",
    "t(x2^4)",
    "t(x1^3*x2)",
    "t(x1*x2^3)",
    "t(x1^4*x2)",
    "t(x1*x2^4)",
    "t(x1^2*x2^2) - 1/3*t(x1*x2)^2",
    "t(x1^3*x2^2)",
    "t(x1^2*x2^3)",
    "t(x1^3*x2^3)",
    "t(x1^4*x2^2)",
    "t(x1^2*x2^4)",
    "t(x1^3*x2^2) - 1/3*t(x1^2*x2)*t(x1*x2)",
    "t(x1^2*x2^3) - 1/3*t(x1*x2^2)*t(x1*x2)",
    "t(x1^4*x2^2) - 1/3*t(x1^2*x2)^2",
    "t(x1^2*x2^4) - 1/3*t(x1*x2^2)^2",
    "t(x1^3*x2^3) - 1/6*t(x1^2*x2)*t(x1*x2^2) - 1/6*t(x1^2*x2^2)*t(x1*x2)",
];

/// Membership of each of [`THREE_POINT_CONGRUENCES`] in the primary ideal.
pub fn three_point_congruences_hold() -> Result<Vec<bool>> {
    let q = Domain::Rational;
    let primary = primary_generators(3, 1, 2);
    let gens: Vec<Poly> = primary.words.iter().map(|w| bracket(w, 3, q)).collect();
    let opts = GroebnerOptions {
        degree_cap: None,
        num_vars: Some(6),
        verify: false,
    };
    let gb = buchberger_with(&gens, &MonomialOrder::grevlex(), &opts)?;
    let polys = THREE_POINT_CONGRUENCES
        .iter()
        .map(|t| TracePoly::parse(t, 1, 2, q).map(|tp| evaluate(&tp, 3)))
        .collect::<Result<Vec<_>>>()?;
    gb.contains_all(&polys)
}

fn three_point_congruences() -> CheckResult {
    let r = three_point_congruences_hold().map(|v| {
        let bad: Vec<String> = v
            .iter()
            .enumerate()
            .filter(|(_, ok)| !**ok)
            .map(|(i, _)| THREE_POINT_CONGRUENCES[i].to_string())
            .collect();
        let n = v.len();
        (
            bad.is_empty(),
            if bad.is_empty() {
                format!("all {n} congruences lie in the primary ideal")
            } else {
                format!("not in the ideal: {}", bad.join("; "))
            },
        )
    });
    CheckResult::from_result("three-point-congruences", r)
}

fn minimal(n: usize, q: u32, m: usize) -> Result<Presentation> {
    minimize_presentation(&finite_presentation(n, q, m)?)
}

fn three_point_minimal_relations() -> CheckResult {
    let r = minimal(3, 1, 2).map(|p| {
        let got: Vec<Vec<u32>> = p.relation_multidegrees();
        let mut sorted = got.clone();
        sorted.sort();
        let mut want = vec![vec![3, 2], vec![2, 3], vec![4, 2], vec![2, 4], vec![3, 3]];
        want.sort();
        (sorted == want, format!("{} minimal relations, bidegrees {got:?}", got.len()))
    });
    CheckResult::from_result("three-point-minimal-relations", r)
}

fn two_point_minimal_relations() -> CheckResult {
    let r = minimal(2, 1, 2).map(|p| {
        let degrees: BTreeSet<u32> = p.relations.iter().map(|r| r.degree()).collect();
        (
            !p.relations.is_empty() && degrees == BTreeSet::from([4]),
            format!("{} minimal relations, degrees {degrees:?}", p.relations.len()),
        )
    });
    CheckResult::from_result("two-point-minimal-relations", r)
}

fn trace_identity() -> CheckResult {
    let ok: Vec<bool> = (1..=3).map(verify_trace_identity).collect();
    CheckResult::new(
        "trace-identity",
        ok.iter().all(|&b| b),
        format!("alternating trace sum of n+1 generic n×n matrices vanishes for n=1..3: {ok:?}"),
    )
}

/// Evaluates `Ψ` at `samples` random word tuples (`n ≤ 3`, `q ≤ 3`,
/// `m ≤ 3`, word degrees at most 6) and returns the number that vanish.
pub fn fundamental_relation_samples(seed: u64, samples: usize) -> Result<usize> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut zero = 0;
    for _ in 0..samples {
        let n = rng.gen_range(1..=3);
        let q = rng.gen_range(1..=3);
        let m = rng.gen_range(1..=3);
        let ws: Vec<Word> = (0..=n).map(|_| random_word(&mut rng, m, q, 6)).collect();
        let tp = fundamental_relation(&ws, n, q, Domain::Rational)?;
        if evaluate(&tp, n).is_zero() {
            zero += 1;
        }
    }
    Ok(zero)
}

fn fundamental_relation_sample() -> CheckResult {
    let r = fundamental_relation_samples(0x5eed, 200).map(|k| (k == 200, format!("{k}/200 random relations evaluate to zero")));
    CheckResult::from_result("fundamental-relation-sample", r)
}

fn transition_matrices() -> CheckResult {
    let mut cases = 0;
    let mut bad = Vec::new();
    for n in 1..=3 {
        for q in 1..=2 {
            for m in 1..=2 {
                for alpha in multidegrees_up_to(m, 8) {
                    for mode in [ProductMode::Bracket, ProductMode::Sigma] {
                        cases += 1;
                        match basis_transition(n, q, &alpha, mode) {
                            Ok(r) if r.passed() => {}
                            Ok(_) | Err(_) => bad.push(format!("n={n} q={q} {alpha:?} {mode:?}")),
                        }
                    }
                }
            }
        }
    }
    CheckResult::new(
        "transition-matrices",
        bad.is_empty(),
        if bad.is_empty() {
            format!("{cases} product-to-orbit matrices square, triangular, invertible; sigma unimodular")
        } else {
            format!("failed: {}", bad.join("; "))
        },
    )
}

/// Outcome of [`normal_form_samples`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalFormSample {
    pub ideal_elements: usize,
    pub ideal_reduced_to_zero: usize,
    pub basis_combinations: usize,
    pub basis_fixed: usize,
}

/// Random elements `Σ c_i g_i Ψ(w_i)` of the relation ideal and random
/// combinations of products of at most two power sums, for two points.
/// Ideal elements must have zero normal form with a certificate that
/// reproduces them; basis combinations must be their own normal form.
pub fn normal_form_samples(seed: u64, count: usize) -> Result<NormalFormSample> {
    let mut rng = StdRng::seed_from_u64(seed);
    let (n, m) = (2usize, 2usize);
    let domain = Domain::Rational;
    let mut out = NormalFormSample {
        ideal_elements: count,
        ideal_reduced_to_zero: 0,
        basis_combinations: count,
        basis_fixed: 0,
    };
    for _ in 0..count {
        let q = rng.gen_range(1..=2);
        let mut tp = TracePoly::zero(q, m, domain);
        for _ in 0..rng.gen_range(1..=3) {
            let ws: Vec<Word> = (0..=n).map(|_| random_word(&mut rng, m, q, 2 * q)).collect();
            let mult: Vec<Word> = (0..rng.gen_range(0..=2)).map(|_| random_word(&mut rng, m, q, 2 * q)).collect();
            let c = rational(rng.gen_range(-5..=5));
            let psi = fundamental_relation(&ws, n, q, domain)?;
            tp = tp.try_add(&psi.mul_monomial(&WordMultiset::new(mult)).scale(&c))?;
        }
        let (nf, cert) = normal_form(&tp, n);
        if nf.is_zero() && tp.try_sub(&nf)? == cert.combination(n, q, m, domain)? {
            out.ideal_reduced_to_zero += 1;
        }
    }
    for _ in 0..count {
        let q = rng.gen_range(1..=2);
        let mut tp = TracePoly::zero(q, m, domain);
        for _ in 0..rng.gen_range(1..=4) {
            let h = rng.gen_range(0..=n);
            let ws: Vec<Word> = (0..h).map(|_| random_word(&mut rng, m, q, 3 * q)).collect();
            tp.add_term(WordMultiset::new(ws), rational(rng.gen_range(-5..=5)))?;
        }
        let (nf, cert) = normal_form(&tp, n);
        if nf == tp && cert.is_empty() {
            out.basis_fixed += 1;
        }
    }
    Ok(out)
}

fn normal_form_sample() -> CheckResult {
    let r = normal_form_samples(0xbeef, 100).map(|s| {
        (
            s.ideal_reduced_to_zero == s.ideal_elements && s.basis_fixed == s.basis_combinations,
            format!(
                "{}/{} ideal elements reduce to zero with valid certificates; {}/{} basis combinations fixed",
                s.ideal_reduced_to_zero, s.ideal_elements, s.basis_fixed, s.basis_combinations
            ),
        )
    });
    CheckResult::from_result("normal-form-sample", r)
}

fn multilinear_small_fields() -> CheckResult {
    let r = (|| -> Result<(bool, String)> {
        let mut cases = 0;
        let mut bad = Vec::new();
        for p in [2, 3] {
            let domain = Domain::prime(p)?;
            for n in 1..=3 {
                for q in 1..=2 {
                    for m in 1..=4 {
                        cases += 1;
                        if !multilinear_basis_check(n, q, m, domain)?.basis_confirmed {
                            bad.push(format!("F{p} n={n} q={q} m={m}"));
                        }
                    }
                }
            }
        }
        Ok((
            bad.is_empty(),
            if bad.is_empty() {
                format!("multilinear products form a basis in all {cases} cases over F2 and F3")
            } else {
                format!("failed: {}", bad.join("; "))
            },
        ))
    })();
    CheckResult::from_result("multilinear-small-fields", r)
}

fn indecomposable_mod_two() -> CheckResult {
    let r = (|| -> Result<(bool, String)> {
        let f2 = Domain::prime(2)?;
        let f = bracket(&word("x1*x2", 2), 2, f2);
        let dec = is_decomposable(&f, GroupContext::new(2, 1, 2))?;
        Ok((!dec, "[x1*x2] is indecomposable over F2 for n=2".into()))
    })();
    CheckResult::from_result("indecomposable-mod-two", r)
}

fn amitsur_direct() -> CheckResult {
    let r = (|| -> Result<(bool, String)> {
        let mut cases = 0;
        let mut bad = Vec::new();
        for n in 1..=3 {
            for s in 1..=2usize {
                for l in 1..=4u32 {
                    for alpha in multidegrees_up_to(s, l) {
                        if alpha.iter().sum::<u32>() != l {
                            continue;
                        }
                        cases += 1;
                        let formula = amitsur_component(l as usize, &alpha, n)?.evaluate();
                        if formula != characteristic_component_direct(l as usize, &alpha, n) {
                            bad.push(format!("n={n} alpha={alpha:?}"));
                        }
                    }
                }
            }
        }
        Ok((
            bad.is_empty(),
            if bad.is_empty() {
                format!("formula agrees with direct expansion in {cases} components")
            } else {
                format!("differ: {}", bad.join("; "))
            },
        ))
    })();
    CheckResult::from_result("amitsur-direct", r)
}

/// `e_r(x²) = Σ_{i=max(0,2r−n)}^{min(2r,n)} (−1)^{r+i} e_i e_{2r−i}` in the
/// variables `e_1..e_n`, with `e_0 = 1`.
pub fn squares_closed_form(r: usize, n: usize) -> Poly {
    let z = Domain::Integer;
    let e = |i: usize| if i == 0 { Poly::one(z) } else { Poly::var(z, i as u32 - 1) };
    let mut out = Poly::zero(z);
    for i in (2 * r).saturating_sub(n)..=(2 * r).min(n) {
        let sign = if (r + i) % 2 == 0 { 1 } else { -1 };
        out = &out + &(&e(i) * &e(2 * r - i)).scale(&Coeff::from_i64(z, sign));
    }
    out
}

fn newton_squares() -> CheckResult {
    let r = (|| -> Result<(bool, String)> {
        let mut ok = true;
        for n in 1..=5 {
            for r in 1..=n {
                ok &= newton_polynomial(r, 2, n)? == squares_closed_form(r, n);
            }
        }
        Ok((ok, "e_r(x²) matches the alternating closed form for n ≤ 5, r ≤ n".into()))
    })();
    CheckResult::from_result("newton-squares", r)
}

fn family_vanishes() -> CheckResult {
    let r = (|| -> Result<(bool, String)> {
        let mut total = 0;
        let mut bad = Vec::new();
        for n in 1..=2 {
            for m in 1..=2 {
                for f in relation_family(n, m, 6)? {
                    total += 1;
                    if !f.relation.evaluate().is_zero() {
                        bad.push(format!("n={n} m={m} {}", f.relation));
                    }
                }
            }
        }
        Ok((
            bad.is_empty(),
            if bad.is_empty() {
                format!("{total} family members of degree ≤ 6 evaluate to zero")
            } else {
                format!("nonzero: {}", bad.join("; "))
            },
        ))
    })();
    CheckResult::from_result("family-vanishes", r)
}

fn bounded_generators_span() -> CheckResult {
    let r = (|| -> Result<(bool, String)> {
        let mut ok = true;
        let mut notes = Vec::new();
        for (n, m) in [(2usize, 2usize), (3, 2)] {
            let top = bounded_generators(n, m).iter().map(generator_degree).max().unwrap_or(0);
            let bound = (m * (n - 1)).max(n) as u32;
            ok &= top <= bound;
            for beta in multidegrees_up_to(m, 6) {
                if beta.iter().any(|&e| e > 0) {
                    ok &= generators_span(n, &beta, Domain::Rational)?;
                }
            }
            notes.push(format!("(n,m)=({n},{m}) top degree {top} ≤ {bound}"));
        }
        Ok((ok, format!("generators span through degree 6; {}", notes.join(", "))))
    })();
    CheckResult::from_result("bounded-generators-span", r)
}

/// The cases whose coinvariant top degree is compared with `tau_formula`.
pub const TAU_CASES: [(usize, u32, usize); 6] = [(2, 1, 1), (2, 1, 2), (2, 2, 1), (2, 2, 2), (3, 1, 1), (3, 1, 2)];

fn tau_table() -> CheckResult {
    let r = (|| -> Result<(bool, String)> {
        let mut ok = true;
        let mut rows = Vec::new();
        for (n, q, m) in TAU_CASES {
            let t = tau(n, q, m)?;
            ok &= t == tau_formula(n, q);
            rows.push(format!("({n},{q},{m})→{t}"));
        }
        Ok((ok, format!("computed τ equals 1+Σ(qj−1): {}", rows.join(" "))))
    })();
    CheckResult::from_result("tau-table", r)
}

fn degree_identity() -> CheckResult {
    let ok = (1..=10).all(|n| (1..=10).all(|q| presentation_degree(n, q) == 2 * tau_formula(n, q)));
    CheckResult::new("degree-identity", ok, "qn(n+1)−2n+2 = 2τ for n,q ≤ 10")
}

fn presentation_dimensions() -> CheckResult {
    let r = (|| -> Result<(bool, String)> {
        let mut ok = true;
        let mut notes = Vec::new();
        for (n, q, m) in [(2, 1, 2), (2, 2, 2)] {
            let full = finite_presentation(n, q, m)?;
            let min = minimize_presentation(&full)?;
            for p in [&full, &min] {
                let rep = verify_presentation(p, 6)?;
                ok &= rep.passed();
                notes.push(format!(
                    "({n},{q},{m}) {} rels: {} components",
                    p.relations.len(),
                    rep.components.len()
                ));
            }
        }
        Ok((ok, format!("quotient dimensions equal counts through degree 6; {}", notes.join(", "))))
    })();
    CheckResult::from_result("presentation-dimensions", r)
}

/// Removes each relation of the minimized presentation in turn and
/// reports, for each, whether verification at `truncation` still passes.
pub fn mutation_survivors(n: usize, q: u32, m: usize, truncation: u32) -> Result<(usize, Vec<usize>)> {
    let min = minimal(n, q, m)?;
    if !verify_presentation(&min, truncation)?.passed() {
        return Err(crate::error::Error::Inconclusive("minimized presentation fails verification".into()));
    }
    let survivors = (0..min.relations.len())
        .into_par_iter()
        .map(|i| verify_presentation(&min.without_relation(i), truncation).map(|r| (i, r.passed())))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|(_, passed)| *passed)
        .map(|(i, _)| i)
        .collect();
    Ok((min.relations.len(), survivors))
}

fn mutation(name: &str, n: usize, q: u32, m: usize, truncation: u32) -> CheckResult {
    let r = mutation_survivors(n, q, m, truncation).map(|(total, survivors)| {
        (
            survivors.is_empty(),
            format!(
                "({n},{q},{m}) at degree {truncation}: {}/{total} single-relation deletions detected",
                total - survivors.len()
            ),
        )
    });
    CheckResult::from_result(name, r)
}

fn mutation_two_points() -> CheckResult {
    mutation("mutation-two-points", 2, 1, 2, 6)
}

fn mutation_three_points() -> CheckResult {
    mutation("mutation-three-points", 3, 1, 2, 6)
}

// the minimal relations reach degree 8 here, so a deletion can only show
// up with truncation at least 8
fn mutation_signed() -> CheckResult {
    mutation("mutation-signed", 2, 2, 2, 8)
}
