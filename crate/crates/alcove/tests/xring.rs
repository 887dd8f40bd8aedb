mod common;

use alcove::rootdata::{CorootVec, Weight};
use alcove::xring::ops::{demazure_d, demazure_delta, reflect_poly, ti_action, y_action};
use alcove::xring::{CoeffRF, Poly, XPoly};
use common::{a, xp};
use proptest::prelude::*;

/// Random level-zero polynomial with integer coefficients.
fn poly_strategy(n: usize, level: i64) -> impl Strategy<Value = XPoly> {
    prop::collection::vec((prop::collection::vec(-3i64..4, n), -4i64..5), 1..5).prop_map(move |terms| {
        xp(terms
            .into_iter()
            .map(|(om, c)| (Weight::new(0, om, level), CoeffRF::from_poly(Poly::constant(c))))
            .collect())
    })
}

fn sub(f: &XPoly, g: &XPoly) -> XPoly {
    let mut out = f.clone();
    out.add_assign_ref(&g.scale(&CoeffRF::from_poly(Poly::constant(-1))));
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hecke_quadratic_relation(f in poly_strategy(2, 0), i in 0usize..3) {
        let g = a(2);
        let tf = ti_action(&g, i, &f, 1);
        let ttf = ti_action(&g, i, &tf, 1);
        let vv = CoeffRF::from_poly(&Poly::v() - &Poly::v_pow(-1));
        let mut want = tf.scale(&vv);
        want.add_assign_ref(&f);
        prop_assert_eq!(ttf, want);
        prop_assert_eq!(ti_action(&g, i, &tf, -1), f);
    }

    #[test]
    fn y_elements_commute(f in poly_strategy(1, 0), a1 in -2i64..3, b1 in -2i64..3) {
        let g = a(1);
        let h1 = CorootVec { k: vec![a1], k_k: 0 };
        let h2 = CorootVec { k: vec![b1], k_k: 0 };
        let l = y_action(&g, &h1, &y_action(&g, &h2, &f).unwrap()).unwrap();
        let r = y_action(&g, &h2, &y_action(&g, &h1, &f).unwrap()).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn y_elements_commute_a2(f in poly_strategy(2, 0), h1 in prop::collection::vec(-1i64..2, 2), h2 in prop::collection::vec(-1i64..2, 2)) {
        let g = a(2);
        let h1 = CorootVec { k: h1, k_k: 0 };
        let h2 = CorootVec { k: h2, k_k: 0 };
        let l = y_action(&g, &h1, &y_action(&g, &h2, &f).unwrap()).unwrap();
        let r = y_action(&g, &h2, &y_action(&g, &h1, &f).unwrap()).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn demazure_idempotent(f in poly_strategy(2, 1), i in 0usize..3) {
        let g = a(2);
        let d = demazure_d(&g, i, &f);
        prop_assert_eq!(demazure_d(&g, i, &d), d);
    }

    #[test]
    fn demazure_minus_delta_is_reflection(f in poly_strategy(2, 1), i in 0usize..3) {
        let g = a(2);
        let diff = sub(&demazure_d(&g, i, &f), &demazure_delta(&g, i, &f));
        prop_assert_eq!(diff, reflect_poly(&g, i, &f));
    }

    #[test]
    fn demazure_braid(f in poly_strategy(2, 0)) {
        let g = a(2);
        let d = |i: usize, h: &XPoly| demazure_d(&g, i, h);
        prop_assert_eq!(d(1, &d(2, &d(1, &f))), d(2, &d(1, &d(2, &f))));
    }
}
