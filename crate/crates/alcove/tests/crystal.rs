mod common;

use std::collections::{BTreeMap, BTreeSet};

use alcove::crystal::{
    b2omega_components, char, component, demazure_subcrystal, finite_quotient, fundamental_crystal, gchar_fin,
    period, tensor, CrystalGraph,
};
use alcove::macdonald::{qpoly_series, specialize, w0, MacdonaldConfig, Specialization};
use alcove::rootdata::{build_affine_data, AffineType};
use alcove::xring::{FormalSeries, XPoly};
use common::*;

type Arrow = (Vec<i64>, i64, usize, Vec<i64>, i64);

fn rho_arrow_fixture() -> BTreeSet<Arrow> {
    let v: serde_json::Value = serde_json::from_str(include_str!("../fixtures/rho_arrows_a2.json")).unwrap();
    let wts: BTreeMap<String, Vec<i64>> = serde_json::from_value(v["weights"].clone()).unwrap();
    v["arrows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|a| {
            let w = |k: usize| wts[a[k].as_str().unwrap()].clone();
            (w(0), a[1].as_i64().unwrap(), a[2].as_u64().unwrap() as usize, w(3), a[4].as_i64().unwrap())
        })
        .collect()
}

/// Arrows of `c` between δ-levels in `[−1, 1]`, with vertices identified by weight.
fn projected_arrows(c: &CrystalGraph) -> BTreeSet<Arrow> {
    c.edges()
        .into_iter()
        .map(|(a, i, b)| {
            let (x, y) = (&c.vertices[a], &c.vertices[b]);
            (x.weight.omega.clone(), x.delta(), i, y.weight.omega.clone(), y.delta())
        })
        .filter(|a| a.1.abs() <= 1 && a.4.abs() <= 1)
        .collect()
}

fn a2_rho_component(window: i64) -> CrystalGraph {
    let d = build_affine_data(AffineType::A, 2).unwrap();
    let t = tensor(&fundamental_crystal(&d, 1, window).unwrap(), &fundamental_crystal(&d, 2, window).unwrap()).unwrap();
    let seed = t.find(&["ω1", "ω2"], &[0, 0]).unwrap();
    component(&t, seed).unwrap()
}

#[test]
fn rho_component_arrow_set() {
    let c = a2_rho_component(3);
    assert_eq!(projected_arrows(&c), rho_arrow_fixture());
}

#[test]
fn tensor_is_connected_and_checked() {
    let d = build_affine_data(AffineType::A, 2).unwrap();
    let t = tensor(&fundamental_crystal(&d, 1, 2).unwrap(), &fundamental_crystal(&d, 2, 2).unwrap()).unwrap();
    t.check(&d).unwrap();
    let c = a2_rho_component(2);
    let inner = (0..t.len()).filter(|v| !t.boundary.contains(v)).count();
    assert!(c.len() >= inner && c.len() <= t.len());
}

#[test]
fn finite_quotients_and_graded_characters() {
    let cfg = MacdonaldConfig::default();
    // (rank, factors, seed names)
    let cases: Vec<(usize, Vec<usize>, Vec<&str>)> = vec![
        (1, vec![1], vec!["ω1"]),
        (1, vec![1, 1], vec!["ω1", "ω1"]),
        (2, vec![1], vec!["ω1"]),
        (2, vec![2], vec!["ω2"]),
        (2, vec![1, 2], vec!["ω1", "ω2"]),
    ];
    for (n, factors, seed) in cases {
        let d = build_affine_data(AffineType::A, n).unwrap();
        let g = a(n);
        let mut c = fundamental_crystal(&d, factors[0], 4).unwrap();
        for &i in &factors[1..] {
            c = tensor(&c, &fundamental_crystal(&d, i, 4).unwrap()).unwrap();
        }
        let s = c.find(&seed, &vec![0; seed.len()]).unwrap();
        let comp = component(&c, s).unwrap();
        let s2 = comp.find(&seed, &vec![0; seed.len()]).unwrap();
        let lam = comp.vertices[s2].weight.clone();
        let gch = gchar_fin(&comp, s2).unwrap();
        let want = specialize(&g, &w0(&lam), Specialization::T0, cfg).unwrap().subs_q_inv();
        assert_eq!(gch, want, "rank {n}, factors {factors:?}");
    }
}

#[test]
fn rho_component_graded_character() {
    let c = a2_rho_component(3);
    let s = c.find(&["ω1", "ω2"], &[0, 0]).unwrap();
    let mut want = XPoly::zero();
    for x in a2_rho_orbit() {
        want.add_term(x, alcove::xring::CoeffRF::one());
    }
    want.add_term(w(&[0, 0]), cp(&[(2, 0, 0), (1, -1, 0)]));
    assert_eq!(gchar_fin(&c, s).unwrap(), want);
    assert_eq!(finite_quotient(&c).unwrap().len(), 9);
}

#[test]
fn periods() {
    let d1 = build_affine_data(AffineType::A, 1).unwrap();
    let b = fundamental_crystal(&d1, 1, 4).unwrap();
    assert_eq!(period(&b), Some(1));
    let t = tensor(&b, &b).unwrap();
    let s = t.find(&["ω1", "ω1"], &[0, 0]).unwrap();
    assert_eq!(period(&component(&t, s).unwrap()), Some(2));
    assert_eq!(period(&a2_rho_component(3)), Some(1));
}

#[test]
fn b2omega_components_are_classified() {
    let d = build_affine_data(AffineType::A, 1).unwrap();
    let mut counts = Vec::new();
    for window in 3..=5 {
        let comps = b2omega_components(&d, window).unwrap();
        let kappas: BTreeSet<i64> = comps.iter().filter_map(|c| c.kappa).collect();
        // Only window corners cut off from every string escape the classification.
        assert!(comps.iter().all(|c| c.kappa.is_some() || c.boundary == c.size));
        for k in 0..=2 {
            assert!(kappas.contains(&k), "κ = {k} at window {window}");
        }
        counts.push(comps.iter().filter(|c| c.kappa.is_some_and(|k| k >= 0)).count() as i64);
    }
    // Seed of κ = 0.
    let b = fundamental_crystal(&d, 1, 3).unwrap();
    let t = tensor(&b, &b).unwrap();
    let s = t.find(&["ω1", "ω1"], &[0, 0]).unwrap();
    let c = component(&t, s).unwrap();
    assert!(c.vertices.iter().all(|v| {
        let x = alcove::crystal::a1_chain_position(&v.names[0], v.shifts[0]);
        let y = alcove::crystal::a1_chain_position(&v.names[1], v.shifts[1]);
        x - y == 0 || x - y == 1
    }));
    // Per-factor windows |k| ≤ D see κ = 0..=2D.
    assert_eq!(counts, vec![7, 9, 11]);
}

#[test]
fn windowed_character_of_b_omega1() {
    let d = build_affine_data(AffineType::A, 1).unwrap();
    let b = fundamental_crystal(&d, 1, 6).unwrap();
    let got = char(&b, 6).unwrap();
    let want = FormalSeries::zero_q(6, 1, w(&[1])).unwrap().plus(&FormalSeries::zero_q(6, 1, w(&[-1])).unwrap());
    assert!(got.same_coefficients(&want));
}

#[test]
fn demazure_closure_is_idempotent_in_its_last_letter() {
    let c = a2_rho_component(2);
    let s = c.find(&["ω1", "ω2"], &[0, 0]).unwrap();
    let a = demazure_subcrystal(&c, s, &[0, 1, 2]).unwrap();
    let b = demazure_subcrystal(&c, s, &[0, 1, 2, 2]).unwrap();
    assert_eq!(a.vertices, b.vertices);
    assert!(demazure_subcrystal(&c, s, &[]).unwrap().len() == 1);
}

/// The literal product `0_q·(1/(1−q))·Ẽ_{−2ω₁}(q^{−1},0)` as a candidate for
/// `char L(2ω₁)`: its windowed coefficients would have to be window-independent.
#[test]
#[ignore = "known deviation: 0_q·1/(1−q) has infinite coefficients"]
fn literal_extremal_character_of_2omega1() {
    let g = a(1);
    let literal = |window: i64| {
        let z = w(&[0]);
        let e = specialize(&g, &w(&[-2]), Specialization::T0, MacdonaldConfig::default()).unwrap().subs_q_inv();
        FormalSeries::zero_q(window, 1, z.clone())
            .unwrap()
            .mul(&FormalSeries::geometric(window, 1, z).unwrap())
            .mul(&qpoly_series(&e, window).unwrap())
            .restrict(3)
    };
    assert!(literal(6).same_coefficients(&literal(8)));
}
