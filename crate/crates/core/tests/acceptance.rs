//! The ten acceptance criteria. Runs without the test harness so every
//! criterion prints one PASS/FAIL line; exits nonzero if any fails.

use std::collections::BTreeSet;

use rayon::prelude::*;

use invforge::checks::{
    fundamental_relation_samples, mutation_survivors, normal_form_samples, squares_closed_form, three_point_congruences_hold,
    three_point_numerator, two_point_identities_check, TAU_CASES, THREE_POINT_CONGRUENCES,
};
use invforge::groebner::tau;
use invforge::hilbert::{hilbert_count, molien};
use invforge::invariants::{basis_transition, bracket, is_decomposable, GroupContext, ProductMode};
use invforge::presentation::{
    finite_presentation, hironaka_identity, minimize_presentation, primary_generators, secondary_generators,
    verify_presentation,
};
use invforge::relations::{multilinear_basis_check, trace_identity_sum, verify_trace_identity};
use invforge::sigma::{
    amitsur_component, bounded_generators, characteristic_component_direct, generator_degree, generators_span,
    newton_polynomial, relation_family,
};
use invforge::word::multidegrees_up_to;
use invforge::{Domain, Word};

type Outcome = Result<String, String>;

fn ensure(ok: bool, pass: String, fail: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(pass)
    } else {
        Err(fail())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    format!("error: {e}")
}

fn trace_identity() -> Outcome {
    let results: Vec<bool> = (1..=3).map(verify_trace_identity).collect();
    let n3_terms = trace_identity_sum(3).len();
    ensure(
        results.iter().all(|&b| b) && n3_terms == 0,
        "alternating trace sum is the zero polynomial for n=1,2,3".into(),
        || format!("results {results:?}, n=3 leaves {n3_terms} terms"),
    )
}

fn relation_soundness() -> Outcome {
    let mut total = 0;
    let mut zero = 0;
    for seed in [11u64, 12] {
        zero += fundamental_relation_samples(seed, 100).map_err(err)?;
        total += 100;
    }
    ensure(zero == total, format!("{zero}/{total} random relations (n≤3, q≤3, m≤3, deg≤6) evaluate to 0"), || {
        format!("only {zero}/{total} vanish")
    })
}

// counts multisets of nonzero exponent vectors directly, as an oracle for
// the component dimensions
fn dimension_oracle(n: usize, q: u32, alpha: &[u32]) -> usize {
    fn words(alpha: &[u32], q: u32) -> Vec<Vec<u32>> {
        let mut out = vec![vec![]];
        for &a in alpha {
            out = out.into_iter().flat_map(|p| (0..=a).map(move |e| [p.clone(), vec![e]].concat())).collect();
        }
        out.retain(|w: &Vec<u32>| w.iter().sum::<u32>() > 0 && w.iter().sum::<u32>() % q == 0);
        out.sort();
        out
    }
    fn rec(left: Vec<u32>, start: usize, slots: usize, ws: &[Vec<u32>]) -> usize {
        if left.iter().all(|&e| e == 0) {
            return 1;
        }
        if slots == 0 {
            return 0;
        }
        (start..ws.len())
            .filter(|&k| ws[k].iter().zip(&left).all(|(a, b)| a <= b))
            .map(|k| rec(left.iter().zip(&ws[k]).map(|(a, b)| a - b).collect(), k, slots - 1, ws))
            .sum()
    }
    rec(alpha.to_vec(), 0, n, &words(alpha, q))
}

fn basis_theorem() -> Outcome {
    let mut cases = 0;
    for n in 1..=3 {
        for q in 1..=2 {
            for m in 1..=2 {
                for alpha in multidegrees_up_to(m, 8) {
                    let oracle = dimension_oracle(n, q, &alpha);
                    for mode in [ProductMode::Bracket, ProductMode::Sigma] {
                        let r = basis_transition(n, q, &alpha, mode).map_err(err)?;
                        cases += 1;
                        if !(r.passed() && r.size == oracle) {
                            return Err(format!("n={n} q={q} alpha={alpha:?} {mode:?}: {r:?}, oracle {oracle}"));
                        }
                    }
                }
            }
        }
    }
    Ok(format!("{cases} transition matrices square, triangular with factorial/unit diagonal; sigma unimodular"))
}

fn normal_forms() -> Outcome {
    let s = normal_form_samples(2024, 100).map_err(err)?;
    ensure(
        s.ideal_reduced_to_zero == 100 && s.basis_fixed == 100,
        "100/100 ideal elements reduce to 0 with valid certificates; 100/100 basis combinations fixed".into(),
        || format!("{s:?}"),
    )
}

fn tau_values() -> Outcome {
    let mut rows = Vec::new();
    let mut ok = true;
    for (n, q, m) in TAU_CASES {
        let expect = 1 + (1..=n as u32).map(|j| q * j - 1).sum::<u32>();
        let got = tau(n, q, m).map_err(err)?;
        ok &= got == expect;
        rows.push(format!("({n},{q},{m})={got}/{expect}"));
    }
    ensure(ok, format!("computed/formula: {}", rows.join(" ")), || rows.join(" "))
}

// coefficient of t^alpha in Σ_{|S| even} t^S / Π_j (1 − t_j)(1 − t_j²)
fn two_point_closed_form(alpha: &[u32]) -> u64 {
    let m = alpha.len();
    let ways = |d: u32| (d / 2 + 1) as u64;
    (0u32..1 << m)
        .filter(|s| s.count_ones() % 2 == 0)
        .map(|s| {
            (0..m)
                .map(|j| {
                    let bit = (s >> j) & 1;
                    if alpha[j] >= bit {
                        ways(alpha[j] - bit)
                    } else {
                        0
                    }
                })
                .product::<u64>()
        })
        .sum()
}

fn two_points() -> Outcome {
    for m in [2, 3] {
        let table = molien(2, 1, m, 8).map_err(err)?;
        for alpha in multidegrees_up_to(m, 8) {
            let want = two_point_closed_form(&alpha);
            if table.get(&alpha) != Some(want) {
                return Err(format!("m={m} alpha={alpha:?}: Molien {:?}, closed form {want}", table.get(&alpha)));
            }
        }
    }
    let ids = two_point_identities_check().map_err(err)?;
    if !ids.passed() {
        return Err(format!("identities: {ids:?}"));
    }
    let s = secondary_generators(2, 1, 2).map_err(err)?;
    let free = hironaka_identity(2, 1, 2, &primary_generators(2, 1, 2), &s, 8);
    ensure(
        s.display() == ["1", "[x1*x2]"] && free,
        "Molien = closed form through degree 8 (m=2,3); five identities exact (exchange sign as derived, printed sign refuted); secondaries {1,[x1*x2]} free".into(),
        || format!("secondaries {:?}, free {free}", s.display()),
    )
}

fn three_points() -> Outcome {
    let mut num = three_point_numerator().map_err(err)?;
    num.sort();
    let mut want: Vec<(Vec<u32>, i64)> =
        [[0, 0], [1, 1], [2, 1], [1, 2], [2, 2], [3, 3]].iter().map(|a| (a.to_vec(), 1)).collect();
    want.sort();
    if num != want {
        return Err(format!("numerator {num:?}"));
    }
    let cong = three_point_congruences_hold().map_err(err)?;
    if let Some(i) = cong.iter().position(|ok| !ok) {
        return Err(format!("congruence fails: {}", THREE_POINT_CONGRUENCES[i]));
    }
    let min = minimize_presentation(&finite_presentation(3, 1, 2).map_err(err)?).map_err(err)?;
    let mut got = min.relation_multidegrees();
    got.sort();
    let mut expect = vec![vec![3, 2], vec![2, 3], vec![4, 2], vec![2, 4], vec![3, 3]];
    expect.sort();
    ensure(
        got == expect,
        format!("numerator through (6,6) exact; {}/17 congruences in <P>; 5 minimal relations {got:?}", cong.len()),
        || format!("minimal relation bidegrees {got:?}"),
    )
}

fn presentations() -> Outcome {
    let mut notes = Vec::new();
    for (n, q, m) in [(2, 1, 2), (2, 2, 2)] {
        let full = finite_presentation(n, q, m).map_err(err)?;
        let min = minimize_presentation(&full).map_err(err)?;
        for p in [&full, &min] {
            let r = verify_presentation(p, 6).map_err(err)?;
            let count = hilbert_count(n, q, m, 6);
            let matches = r.components.len() == count.dims.len()
                && r.components.iter().all(|c| count.get(&c.multidegree) == Some(c.quotient));
            if !(r.passed() && matches) {
                return Err(format!("({n},{q},{m}) with {} relations: mismatches {:?}", p.relations.len(), r.mismatches));
            }
        }
        let top = min.relations.iter().map(|r| r.degree()).max().unwrap_or(0);
        let truncation = top.max(6);
        let (total, survivors) = mutation_survivors(n, q, m, truncation).map_err(err)?;
        if !survivors.is_empty() {
            return Err(format!("({n},{q},{m}): deleting relations {survivors:?} goes undetected at degree {truncation}"));
        }
        notes.push(format!("({n},{q},{m}) {total}/{total} deletions detected at degree {truncation}"));
    }
    Ok(format!("quotient dims = counts through degree 6 for full and minimal presentations; {}", notes.join(", ")))
}

fn sigma_suite() -> Outcome {
    for n in 1..=3 {
        for s in 1..=2 {
            for l in 1..=4u32 {
                for alpha in multidegrees_up_to(s, l).into_iter().filter(|a| a.iter().sum::<u32>() == l) {
                    let f = amitsur_component(l as usize, &alpha, n).map_err(err)?.evaluate();
                    if f != characteristic_component_direct(l as usize, &alpha, n) {
                        return Err(format!("formula differs at n={n} alpha={alpha:?}"));
                    }
                }
            }
        }
    }
    for n in 1..=5 {
        for r in 1..=n {
            if newton_polynomial(r, 2, n).map_err(err)? != squares_closed_form(r, n) {
                return Err(format!("e_{r}(x²) differs for n={n}"));
            }
        }
    }
    let mut members = 0;
    for n in 1..=2 {
        for m in 1..=2 {
            for f in relation_family(n, m, 6).map_err(err)? {
                members += 1;
                if !f.relation.evaluate().is_zero() {
                    return Err(format!("family member {} does not vanish", f.relation));
                }
            }
        }
    }
    for (n, m) in [(2usize, 2usize), (3, 2)] {
        let top = bounded_generators(n, m).iter().map(generator_degree).max().unwrap_or(0);
        if top as usize > (m * (n - 1)).max(n) {
            return Err(format!("generator degree {top} too large for (n,m)=({n},{m})"));
        }
        for beta in multidegrees_up_to(m, 6).into_iter().filter(|b| b.iter().any(|&e| e > 0)) {
            if !generators_span(n, &beta, Domain::Rational).map_err(err)? {
                return Err(format!("generators do not span {beta:?} for n={n}"));
            }
        }
    }
    Ok(format!("formula = direct expansion (l≤4, s≤2, n≤3); squares closed form n≤5; {members} family members vanish; generators span through degree 6"))
}

fn arbitrary_rings() -> Outcome {
    let mut cases = 0;
    for p in [2, 3] {
        let d = Domain::prime(p).map_err(err)?;
        for n in 1..=3 {
            for q in 1..=2 {
                for m in 1..=4 {
                    let r = multilinear_basis_check(n, q, m, d).map_err(err)?;
                    cases += 1;
                    if !r.basis_confirmed {
                        return Err(format!("F{p} n={n} q={q} m={m}: {r:?}"));
                    }
                }
            }
        }
    }
    let f2 = Domain::prime(2).map_err(err)?;
    let xy = Word::parse("x1*x2", 2).map_err(err)?;
    let dec = is_decomposable(&bracket(&xy, 2, f2), GroupContext::new(2, 1, 2)).map_err(err)?;
    ensure(
        !dec,
        format!("multilinear basis confirmed in {cases} cases over F2, F3; [x1*x2] indecomposable over F2 (n=2)"),
        || "[x1*x2] reported decomposable over F2".into(),
    )
}

fn main() {
    let criteria: Vec<(&str, fn() -> Outcome)> = vec![
        ("trace identity", trace_identity),
        ("relation soundness", relation_soundness),
        ("basis theorem", basis_theorem),
        ("normal forms", normal_forms),
        ("coinvariant top degree", tau_values),
        ("two points", two_points),
        ("three points in two series", three_points),
        ("finite presentation", presentations),
        ("characteristic coefficients", sigma_suite),
        ("arbitrary rings", arbitrary_rings),
    ];
    let results: Vec<Outcome> = criteria.par_iter().map(|(_, f)| f()).collect();
    let mut failed = BTreeSet::new();
    for (i, ((name, _), r)) in criteria.iter().zip(&results).enumerate() {
        match r {
            Ok(detail) => println!("PASS criterion {} ({name}): {detail}", i + 1),
            Err(detail) => {
                failed.insert(i + 1);
                println!("FAIL criterion {} ({name}): {detail}", i + 1);
            }
        }
    }
    if failed.is_empty() {
        println!("acceptance: 10/10 criteria passed");
    } else {
        println!("acceptance: failed criteria {failed:?}");
        std::process::exit(1);
    }
}
