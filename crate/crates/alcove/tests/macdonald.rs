mod common;

use alcove::macdonald::{
    e_tilde, eigenvalues, ion_demazure, min_coset_rep, specialize, MacdonaldConfig, Specialization, WalkSum,
};
use alcove::par::Exec;
use alcove::walks::classify;
use common::*;

#[test]
fn a1_full_and_specialized_tables() {
    let g = a(1);
    let cfg = MacdonaldConfig::default();
    for t in a1_tables() {
        let mu = w(&t.mu);
        assert_eq!(e_tilde(&g, &mu, cfg).unwrap(), t.full, "Ẽ_{mu}");
        for (s, want) in &t.specs {
            assert_eq!(&specialize(&g, &mu, *s, cfg).unwrap(), want, "Ẽ_{mu} at {s}");
        }
    }
}

#[test]
fn a2_minus_rho_at_t_zero_and_infinity() {
    let g = a(2);
    let cfg = MacdonaldConfig::default();
    let (t0, tinf) = a2_minus_rho_tables();
    let mu = w(&[-1, -1]);
    assert_eq!(specialize(&g, &mu, Specialization::T0, cfg).unwrap(), t0);
    assert_eq!(specialize(&g, &mu, Specialization::TInf, cfg).unwrap(), tinf);
}

#[test]
fn top_coefficient_is_one() {
    let g = a(2);
    let cfg = MacdonaldConfig::default();
    for mu in [[1, 0], [0, -1], [-1, 1], [2, -1], [-1, -1]] {
        let f = e_tilde(&g, &w(&mu), cfg).unwrap();
        assert!(f.coeff(&w(&mu)).is_one(), "Ẽ_{mu:?}");
    }
}

#[test]
fn sequential_and_parallel_agree() {
    let g = a(2);
    let mu = w(&[-2, 1]);
    let s = e_tilde(&g, &mu, MacdonaldConfig { exec: Exec::Sequential, ..Default::default() }).unwrap();
    let p = e_tilde(&g, &mu, MacdonaldConfig { exec: Exec::Parallel, ..Default::default() }).unwrap();
    assert_eq!(s, p);
}

#[test]
fn ion_matches_t_zero_a1() {
    let g = a(1);
    let cfg = MacdonaldConfig::default();
    for k in -5..=5 {
        let mu = w(&[k]);
        assert_eq!(ion_demazure(&g, &mu).unwrap(), specialize(&g, &mu, Specialization::T0, cfg).unwrap(), "μ = {k}");
    }
}

#[test]
fn eigenvectors_a1() {
    let g = a(1);
    let cfg = MacdonaldConfig::default();
    for k in -4..=4 {
        let f = e_tilde(&g, &w(&[k]), cfg).unwrap();
        eigenvalues(&g, &f).unwrap();
    }
}

#[test]
fn walk_classes_match_leading_terms_in_rank_one() {
    // Every fold has ht > 0 here, so the displayed class identities select
    // exactly the walks that survive at t = 0 and t = ∞.
    let g = a(1);
    for k in -4..=4i64 {
        let ws = WalkSum::new(&g, &w(&[k]), MacdonaldConfig::default()).unwrap();
        assert!(ws.betas.iter().all(|b| b.ht > 0));
        let idx = min_coset_rep(&g, &w(&[k])).unwrap();
        let len_m = idx.len_fin(&g);
        let walks = alcove::walks::enumerate_walks(&g, idx.omega, &idx.m_word, 22, Exec::Sequential).unwrap();
        let t0 = ws.survivors(&g, Specialization::T0);
        let tinf = ws.survivors(&g, Specialization::TInf);
        let mut c0 = Vec::new();
        let mut cinf = Vec::new();
        for wk in &walks {
            let c = classify(&g, wk, &ws.betas, len_m);
            let key = (wk.wt.clone(), wk.f_pos.len() + wk.f_neg.len());
            if c.neg_semi_infinite {
                c0.push(key.clone());
            }
            if c.pos_semi_infinite {
                cinf.push(key);
            }
        }
        let keyed = |ids: &[usize]| {
            let mut v: Vec<_> = ids.iter().map(|&i| (ws.leaves[i].wt.clone(), ws.leaves[i].folds.len())).collect();
            v.sort();
            v
        };
        c0.sort();
        cinf.sort();
        assert_eq!(keyed(&t0), c0, "t = 0, μ = {k}");
        assert_eq!(keyed(&tinf), cinf, "t = ∞, μ = {k}");
    }
}

#[test]
fn e_is_unnormalized_by_length_of_m() {
    let g = a(1);
    let cfg = MacdonaldConfig::default();
    let mu = w(&[-1]);
    let e = alcove::macdonald::e(&g, &mu, cfg).unwrap();
    let et = e_tilde(&g, &mu, cfg).unwrap();
    let len = min_coset_rep(&g, &mu).unwrap().len_fin(&g);
    assert_eq!(e, et.scale(&alcove::xring::CoeffRF::monomial(0, len as i32)));
}
