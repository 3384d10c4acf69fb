//! Acceptance criteria, one pass/fail line each. Runs as a plain binary
//! (`harness = false`) so the report is always printed.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use monadj::{
    adjoint, briancon_skoda_check, check_rees_necessity, check_subadditivity, integral_closure,
    lp_member, projective_equivalence, rees_valuations, AdjointMethod, Exponent, MonomialIdeal,
    MonomialValuation, NewtonPolyhedron, ReesValuation,
};
use rand::Rng;

type Outcome = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Same-dimension pairs drawn from a dedicated stream.
fn pairs(seed: u64, count: usize) -> Vec<(MonomialIdeal, MonomialIdeal)> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| {
            let d = r.gen_range(2..=4);
            (random_ideal(&mut r, d, 6, 8), random_ideal(&mut r, d, 6, 8))
        })
        .collect()
}

fn criterion_1() -> Outcome {
    let i = ideal(&[&[5, 0], &[0, 7]]);
    let ic = integral_closure(&i, 1).map_err(|e| e.to_string())?;
    ensure(
        entries(&ic) == vec![vec![0, 7], vec![1, 6], vec![2, 5], vec![3, 3], vec![4, 2], vec![5, 0]],
        || format!("ic(x^5, y^7) = {ic}"),
    )?;
    let adj = adjoint(&ic, 1, AdjointMethod::Facets).map_err(|e| e.to_string())?;
    ensure(
        entries(&adj) == vec![vec![0, 5], vec![1, 4], vec![2, 2], vec![3, 1], vec![4, 0]],
        || format!("adj = {adj}"),
    )?;
    let rees_i = rees_valuations(&i).map_err(|e| e.to_string())?;
    ensure(rees_i.len() == 1, || format!("{} Rees valuations of I", rees_i.len()))?;
    let rees_adj = rees_valuations(&adj).map_err(|e| e.to_string())?;
    let expected = vec![
        ReesValuation { valuation: MonomialValuation::new(vec![1, 1]).unwrap(), value: 4 },
        ReesValuation { valuation: MonomialValuation::new(vec![3, 2]).unwrap(), value: 10 },
    ];
    ensure(rees_adj == expected, || format!("Rees valuations of adj: {rees_adj:?}"))
}

fn criterion_2(corpus: &[MonomialIdeal]) -> Outcome {
    for i in corpus {
        for n in 1..=3 {
            let reference = adjoint(i, n, AdjointMethod::BruteForce).map_err(|e| e.to_string())?;
            for method in [AdjointMethod::Facets, AdjointMethod::Valuations] {
                let other = adjoint(i, n, method).map_err(|e| e.to_string())?;
                ensure(other == reference, || {
                    format!("{method} differs from bruteforce on {i}, n = {n}")
                })?;
            }
        }
    }
    Ok(())
}

fn criterion_3(corpus: &[MonomialIdeal]) -> Outcome {
    let mut r = rng(303);
    for i in corpus {
        let p = NewtonPolyhedron::of(i).map_err(|e| e.to_string())?;
        let upper = i.max_exponents();
        for _ in 0..1000 {
            let x = random_rational_point(&mut r, &upper);
            let weak = p.contains(&x, false).map_err(|e| e.to_string())?;
            let lp = lp_member(&x, i.generators()).map_err(|e| e.to_string())?;
            ensure(weak == lp, || format!("{i}: point {x:?} np_member {weak}, lp_member {lp}"))?;
        }
    }
    Ok(())
}

fn criterion_4(corpus: &[MonomialIdeal], pairs: &[(MonomialIdeal, MonomialIdeal)]) -> Outcome {
    let err = |e: monadj::Error| e.to_string();
    let mut r = rng(404);
    for i in corpus {
        let ic = integral_closure(i, 1).map_err(err)?;
        ensure(integral_closure(&ic, 1).map_err(err)? == ic, || format!("ic not idempotent on {i}"))?;
        let adj = adjoint(i, 1, AdjointMethod::Facets).map_err(err)?;
        ensure(
            i.is_contained_in(&ic).map_err(err)? && ic.is_contained_in(&adj).map_err(err)?,
            || format!("I ⊆ ic(I) ⊆ adj(I) fails on {i}"),
        )?;
        let base = NewtonPolyhedron::of(i).map_err(err)?;
        for n in 1..=3 {
            let direct = NewtonPolyhedron::of(&i.power(n).map_err(err)?).map_err(err)?;
            ensure(base.scale(n).map_err(err)?.facets() == direct.facets(), || {
                format!("facets of I^{n} differ from scaled facets on {i}")
            })?;
        }
        let l = i.len() as u32;
        for n in [l, l + 1] {
            ensure(briancon_skoda_check(i, n).map_err(err)?, || {
                format!("adj(I^{n}) ⊄ ic(I^{}) on {i}", n - l + 1)
            })?;
        }
        let t = Exponent::new((0..i.dim()).map(|_| r.gen_range(0..=3)).collect());
        let lhs = adjoint(&i.shift(&t).map_err(err)?, 1, AdjointMethod::Facets).map_err(err)?;
        ensure(lhs == adj.shift(&t).map_err(err)?, || format!("adj(x^{t} I) ≠ x^{t} adj(I) on {i}"))?;
        let principal = MonomialIdeal::principal(
            i.generators()[r.gen_range(0..i.len())].clone(),
        )
        .map_err(err)?;
        ensure(
            adjoint(&principal, 1, AdjointMethod::Facets).map_err(err)? == principal,
            || format!("adjoint of principal {principal} differs"),
        )?;
    }
    for (i, j) in pairs {
        let ij = i.product(j).map_err(err)?;
        for _ in 0..5 {
            let mut w: Vec<u64> = (0..i.dim()).map(|_| r.gen_range(0..=9)).collect();
            if w.iter().all(|&x| x == 0) {
                w[0] = 1;
            }
            let v = MonomialValuation::new(w).map_err(err)?;
            ensure(
                v.value_of_ideal(&ij).map_err(err)?
                    == v.value_of_ideal(i).map_err(err)? + v.value_of_ideal(j).map_err(err)?,
                || format!("v(IJ) ≠ v(I) + v(J) for {v:?} on {i}, {j}"),
            )?;
        }
        let report = check_subadditivity(i, j).map_err(err)?;
        let adj_i = adjoint(i, 1, AdjointMethod::BruteForce).map_err(err)?;
        let adj_j = adjoint(j, 1, AdjointMethod::BruteForce).map_err(err)?;
        let np_i = NewtonPolyhedron::of(i).map_err(err)?;
        let np_j = NewtonPolyhedron::of(j).map_err(err)?;
        ensure(report.holds && report.witnesses.len() == report.adjoint_of_product.len(), || {
            format!("subadditivity report incomplete on {i}, {j}")
        })?;
        for w in &report.witnesses {
            ensure(w.verify(&adj_i, &adj_j, &np_i, &np_j).map_err(err)?, || {
                format!("witness {w:?} fails on {i}, {j}")
            })?;
        }
    }
    Ok(())
}

fn criterion_5(corpus: &[MonomialIdeal]) -> Outcome {
    for i in corpus {
        let rees = rees_valuations(i).map_err(|e| e.to_string())?;
        let witnesses = check_rees_necessity(i).map_err(|e| e.to_string())?;
        ensure(witnesses.len() == rees.len(), || format!("missing witnesses on {i}"))?;
        for (w, dropped) in witnesses.iter().zip(&rees) {
            ensure(w.dropped_valuation == dropped.valuation, || format!("witness order on {i}"))?;
            let n = u128::from(w.n);
            for r in &rees {
                let value = r.valuation.value_of_monomial(&w.e).map_err(|e| e.to_string())?;
                let ok = if r.valuation == w.dropped_valuation {
                    value < n * r.value
                } else {
                    value >= n * r.value
                };
                ensure(ok, || format!("witness {w:?} fails against {r:?} on {i}"))?;
            }
        }
    }
    Ok(())
}

fn criterion_6(corpus: &[MonomialIdeal], pairs: &[(MonomialIdeal, MonomialIdeal)]) -> Outcome {
    let err = |e: monadj::Error| e.to_string();
    for i in corpus {
        for k in 1..=3u32 {
            let ik = i.power(k).map_err(err)?;
            let r = projective_equivalence(i, &ik).map_err(err)?;
            ensure(r.equivalent && r.powers == Some((u64::from(k), 1)), || {
                format!("projective_equivalence(I, I^{k}) = {r:?} on {i}")
            })?;
            ensure(
                integral_closure(i, k).map_err(err)? == integral_closure(&ik, 1).map_err(err)?,
                || format!("ic(I^{k}) ≠ ic((I^{k})^1) on {i}"),
            )?;
        }
    }
    let mut checked = 0;
    for (i, j) in pairs {
        let fi = oracle_facets(i.generators(), i.dim());
        let fj = oracle_facets(j.generators(), j.dim());
        let normals_i: Vec<_> = fi.iter().map(|(h, _)| h.clone()).collect();
        let normals_j: Vec<_> = fj.iter().map(|(h, _)| h.clone()).collect();
        let proportional = normals_i == normals_j && {
            let ratios: Vec<_> = fi
                .iter()
                .zip(&fj)
                .map(|((_, a), (_, b))| monadj::Rational::new(a.clone(), b.clone()))
                .collect();
            ratios.windows(2).all(|w| w[0] == w[1])
        };
        if proportional {
            continue;
        }
        let r = projective_equivalence(i, j).map_err(err)?;
        ensure(!r.equivalent, || format!("non-proportional {i}, {j} reported equivalent"))?;
        checked += 1;
        if checked == 50 {
            return Ok(());
        }
    }
    Err(format!("only {checked} non-proportional pairs in the corpus"))
}

fn main() -> ExitCode {
    let corpus = corpus(2024, 200);
    let pair_corpus = pairs(2025, 60);

    type Check<'a> = (&'static str, Duration, Box<dyn Fn() -> Outcome + 'a>);
    let checks: Vec<Check> = vec![
        ("C1 worked example: closure, adjoint, Rees valuations", Duration::from_secs(1), Box::new(criterion_1)),
        ("C2 triple-route adjoint agreement (200 ideals, n ≤ 3)", Duration::from_secs(60), Box::new(|| criterion_2(&corpus))),
        ("C3 np_member ⇔ lp_member (100 ideals × 1000 points)", Duration::from_secs(30), Box::new(|| criterion_3(&corpus[..100]))),
        ("C4 structural property suite", Duration::MAX, Box::new(|| criterion_4(&corpus, &pair_corpus))),
        ("C5 Rees-valuation necessity witnesses (50 ideals)", Duration::from_secs(30), Box::new(|| criterion_5(&corpus[..50]))),
        ("C6 projective equivalence (50 + 50)", Duration::MAX, Box::new(|| criterion_6(&corpus[..50], &pairs(2026, 200)))),
    ];

    let mut failed = 0;
    for (name, budget, check) in &checks {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            ensure(elapsed <= *budget, || format!("took {elapsed:.2?}, budget {budget:?}"))
        });
        match outcome {
            Ok(()) => println!("PASS  {name}  ({elapsed:.2?})"),
            Err(msg) => {
                failed += 1;
                println!("FAIL  {name}  ({elapsed:.2?}): {msg}");
            }
        }
    }
    println!("{} of {} acceptance criteria passed", checks.len() - failed, checks.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
