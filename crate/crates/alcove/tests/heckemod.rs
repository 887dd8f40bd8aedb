mod common;

use alcove::heckemod::{act, act_word, crosscheck, enumerate_labeled, mass, Basis, Color, ModuleElt};
use alcove::weyl::{AffineWeyl, WeylElt};
use alcove::xring::Poly;
use common::a;
use num_bigint::BigInt;
use proptest::prelude::*;

const BASES: [Basis; 3] = [Basis::T, Basis::X, Basis::L];
const COLORS: [Color; 3] = [Color::Blue, Color::Red, Color::Green];

fn random_elt(g: &AffineWeyl, word: &[usize]) -> WeylElt {
    g.from_word(word)
}

/// Greedily drops letters that would make the word non-reduced.
fn reduce(g: &AffineWeyl, raw: &[usize]) -> Vec<usize> {
    let mut w = Vec::new();
    for &i in raw {
        w.push(i);
        if !g.is_reduced(&w) {
            w.pop();
        }
    }
    w
}

#[test]
fn quadratic_relation_on_the_unit() {
    let g = a(1);
    let q = Poly::q();
    let qm1 = &q - &Poly::one();
    for j in 0..=1 {
        let s = g.s(j);
        let tt = act(&g, &ModuleElt::basis_elt(Basis::T, s.clone()), j).unwrap();
        let want = ModuleElt::basis_elt(Basis::T, s.clone())
            .scale(&qm1)
            .add(&ModuleElt::basis_elt(Basis::T, g.identity()).scale(&q));
        assert_eq!(tt, want);
        let x = act(&g, &ModuleElt::basis_elt(Basis::X, g.identity()), j).unwrap();
        if g.steps_up(alcove::weyl::OrderTag::Zero, &g.identity(), j) {
            assert_eq!(x, ModuleElt::basis_elt(Basis::X, s));
        }
    }
}

#[test]
fn crosschecks_hold() {
    let cases: Vec<(usize, Vec<usize>)> = vec![
        (1, vec![0, 1]),
        (1, vec![1, 0, 1, 0]),
        (2, vec![0, 1, 2]),
        (2, vec![1, 2, 1, 0]),
        (2, vec![0, 1, 2, 0, 1, 2]),
        (3, vec![0, 1, 2, 3, 0]),
    ];
    for (n, word) in cases {
        let g = a(n);
        for c in COLORS {
            let r = crosscheck(&g, c, &word).unwrap();
            assert!(r.ok(), "{c:?} {word:?}: {:?}", r.mismatches);
        }
    }
}

#[test]
fn blue_walks_have_one_endpoint() {
    let g = a(2);
    let word = [0, 1, 2, 0, 1];
    let m = enumerate_labeled(&g, Color::Blue, &word, 22).unwrap();
    assert_eq!(m.len(), 1);
    assert_eq!(m[&g.from_word(&word)], Poly::q_pow(word.len() as i32));
}

#[test]
fn red_single_letter() {
    let g = a(1);
    for j in 0..=1 {
        let m = enumerate_labeled(&g, Color::Red, &[j], 22).unwrap();
        let total = m.values().fold(Poly::zero(), |acc, p| &acc + p);
        assert_eq!(total, Poly::q());
    }
}

#[test]
fn braid_relations_on_modules() {
    let g = a(2);
    let pairs = [(0, 1), (1, 2), (0, 2)];
    let starts: Vec<WeylElt> = [vec![], vec![0], vec![1, 2], vec![2, 0, 1], vec![0, 1, 2, 0]]
        .iter()
        .map(|w| random_elt(&g, w))
        .collect();
    for b in BASES {
        for s in &starts {
            for &(i, j) in &pairs {
                let e = ModuleElt::basis_elt(b, s.clone());
                let l = act_word(&g, &e, &[i, j, i]).unwrap();
                let r = act_word(&g, &e, &[j, i, j]).unwrap();
                assert_eq!(l, r, "{b:?} {i}{j}");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn quadratic_relation(raw in prop::collection::vec(0usize..3, 0..7), j in 0usize..3, bi in 0usize..3) {
        let g = a(2);
        let b = BASES[bi];
        let e = ModuleElt::basis_elt(b, g.from_word(&raw));
        let once = act(&g, &e, j).unwrap();
        let twice = act(&g, &once, j).unwrap();
        let q = Poly::q();
        let want = once.scale(&(&q - &Poly::one())).add(&e.scale(&q));
        prop_assert_eq!(twice, want);
    }

    #[test]
    fn mass_is_q_to_the_length(raw in prop::collection::vec(0usize..3, 0..9), ci in 0usize..3, q in 2i64..6) {
        let g = a(2);
        let word = reduce(&g, &raw);
        let m = enumerate_labeled(&g, COLORS[ci], &word, 22).unwrap();
        prop_assert_eq!(mass(&m, q), BigInt::from(q).pow(word.len() as u32));
    }

    #[test]
    fn random_crosscheck(raw in prop::collection::vec(0usize..3, 0..8), ci in 0usize..3) {
        let g = a(2);
        let word = reduce(&g, &raw);
        let r = crosscheck(&g, COLORS[ci], &word).unwrap();
        prop_assert!(r.ok(), "{:?}", r.mismatches);
    }
}
