use super::*;
use crate::builders::{build_sl, SlBasis};
use crate::exact::{int, sub};
use crate::parabolic::grade;

fn random_chain(cx: &ChainComplex<'_>, degree: usize, seed: u64) -> Chain {
    let n = cx.grading().system().dim();
    let p = cx.p_plus().to_vec();
    let mut state = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
    let mut next = |m: usize| {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        ((state >> 33) as usize) % m
    };
    let mut c = Chain::zero(degree);
    for _ in 0..4 {
        let slots: Vec<usize> = (0..degree).map(|_| p[next(p.len())]).collect();
        let v = next(n);
        let coeff = int(next(7) as i64 - 3);
        c.add_term(slots, v, coeff);
    }
    c
}

/// Chevalley-Eilenberg formula on 𝔤₋ arguments.
fn ce_oracle(cx: &ChainComplex<'_>, c: &Chain, args: &[Vector]) -> Vector {
    let alg = cx.grading().system().algebra();
    let k = args.len();
    let mut out = zero_vec(alg.dim());
    for i in 0..k {
        let rest: Vec<Vector> = args.iter().enumerate().filter(|(l, _)| *l != i).map(|(_, x)| x.clone()).collect();
        let v = alg.bracket(&args[i], &cx.evaluate(c, &rest));
        out = if i % 2 == 0 { crate::exact::add(&out, &v) } else { sub(&out, &v) };
    }
    for i in 0..k {
        for j in i + 1..k {
            let mut rest = vec![alg.bracket(&args[i], &args[j])];
            rest.extend(args.iter().enumerate().filter(|(l, _)| *l != i && *l != j).map(|(_, x)| x.clone()));
            let v = cx.evaluate(c, &rest);
            out = if (i + j) % 2 == 0 { crate::exact::add(&out, &v) } else { sub(&out, &v) };
        }
    }
    out
}

#[test]
fn differential_matches_ce_formula() {
    let g = grade(build_sl(4).unwrap(), &[1, 2, 3]).unwrap();
    let cx = ChainComplex::new(&g).unwrap();
    let duals: Vec<Vector> = cx.p_plus().iter().map(|&y| cx.dual_of(y).clone()).collect();
    for degree in 0..=2 {
        for seed in 0..6 {
            let c = random_chain(&cx, degree, seed);
            let d = cx.differential(&c);
            for args in subsets(&(0..duals.len()).collect::<Vec<_>>(), degree + 1) {
                let xs: Vec<Vector> = args.iter().map(|&a| duals[a].clone()).collect();
                assert_eq!(cx.evaluate(&d, &xs), ce_oracle(&cx, &c, &xs));
            }
        }
    }
}

#[test]
fn squares_vanish() {
    let g = grade(build_sl(4).unwrap(), &[2]).unwrap();
    let cx = ChainComplex::new(&g).unwrap();
    for seed in 0..10 {
        for degree in 0..=1 {
            let c = random_chain(&cx, degree, seed);
            assert!(cx.differential(&cx.differential(&c)).is_zero());
        }
        for degree in 2..=3 {
            let c = random_chain(&cx, degree, seed);
            assert!(cx.codifferential(&cx.codifferential(&c)).is_zero());
        }
    }
}

#[test]
fn grassmannian_seed_is_harmonic_lowest_weight() {
    let g = grade(build_sl(4).unwrap(), &[2]).unwrap();
    let cx = ChainComplex::new(&g).unwrap();
    let b = SlBasis::new(4);
    let omega = Chain::monomial(vec![b.e(1, 2), b.e(1, 3)], b.e(1, 0), int(1));
    assert!(cx.laplacian(&omega).is_zero());
    assert!(cx.differential(&omega).is_zero());
    assert!(cx.codifferential(&omega).is_zero());
    assert!(cx.is_lowest_weight(&omega));
    let cands = enumerate_candidates(&cx);
    assert!(cands.iter().any(|c| c.chain == omega));
    // E_gr acts by the homogeneity
    let e = g.grading_element();
    assert_eq!(cx.g0_action(&e, &omega), omega.scale(&int(2)));
}

#[test]
fn swapped_slot_is_not_lowest_weight() {
    let g = grade(build_sl(4).unwrap(), &[2]).unwrap();
    let cx = ChainComplex::new(&g).unwrap();
    let b = SlBasis::new(4);
    let c = Chain::monomial(vec![b.e(0, 2), b.e(1, 3)], b.e(1, 0), int(1));
    assert!(!cx.is_lowest_weight(&c));
}

#[test]
fn hodge_on_grassmannian_degree_two() {
    let g = grade(build_sl(4).unwrap(), &[2]).unwrap();
    let cx = ChainComplex::new(&g).unwrap();
    let mut total = 0;
    for h in -1..=4 {
        let r = hodge_audit(&cx, 2, &int(h)).unwrap();
        assert!(r.ok, "{r:?}");
        total += r.dim;
    }
    assert_eq!(total, 6 * 15);
}
