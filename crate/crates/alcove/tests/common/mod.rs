#![allow(dead_code)]

use alcove::macdonald::Specialization;
use alcove::rootdata::{build_affine_data, AffineType, Weight};
use alcove::weyl::AffineWeyl;
use alcove::xring::{one_minus, CoeffRF, Poly, XPoly};
use num_bigint::BigInt;

pub fn a(n: usize) -> AffineWeyl {
    AffineWeyl::new(build_affine_data(AffineType::A, n).unwrap())
}

pub fn w(omega: &[i64]) -> Weight {
    Weight::fin(omega.to_vec())
}

/// `c·q^a t^b`.
pub fn m(c: i64, a: i32, b: i32) -> Poly {
    Poly::monomial(BigInt::from(c), a, 2 * b)
}

pub fn p(terms: &[(i64, i32, i32)]) -> Poly {
    terms.iter().fold(Poly::zero(), |acc, &(c, a, b)| &acc + &m(c, a, b))
}

pub fn r(num: Poly, den: Poly) -> CoeffRF {
    CoeffRF::new(num, den)
}

pub fn cp(terms: &[(i64, i32, i32)]) -> CoeffRF {
    CoeffRF::from_poly(p(terms))
}

pub fn xp(terms: Vec<(Weight, CoeffRF)>) -> XPoly {
    let mut f = XPoly::zero();
    for (w, c) in terms {
        f.add_term(w, c);
    }
    f
}

/// `(1 − t)/(1 − q^a t)`.
pub fn frac1(a: i32) -> CoeffRF {
    r(one_minus(0, 1), one_minus(a, 1))
}

pub struct Table {
    pub mu: Vec<i64>,
    pub full: XPoly,
    pub specs: Vec<(Specialization, XPoly)>,
}

/// Rank-one tables of normalized polynomials and their four specializations.
pub fn a1_tables() -> Vec<Table> {
    use Specialization::*;
    let x = |k: i64| w(&[k]);
    let one = CoeffRF::one;
    vec![
        Table {
            mu: vec![1],
            full: xp(vec![(x(1), one())]),
            specs: [Q0, QInf, T0, TInf].into_iter().map(|s| (s, xp(vec![(x(1), one())]))).collect(),
        },
        Table {
            mu: vec![-1],
            full: xp(vec![(x(-1), one()), (x(1), frac1(1))]),
            specs: vec![
                (Q0, xp(vec![(x(-1), one()), (x(1), cp(&[(1, 0, 0), (-1, 0, 1)]))])),
                (QInf, xp(vec![(x(-1), one())])),
                (T0, xp(vec![(x(-1), one()), (x(1), one())])),
                (TInf, xp(vec![(x(-1), one()), (x(1), cp(&[(1, -1, 0)]))])),
            ],
        },
        Table {
            mu: vec![2],
            full: xp(vec![(x(2), one()), (x(0), &frac1(1) * &CoeffRF::q())]),
            specs: vec![
                (Q0, xp(vec![(x(2), one())])),
                (QInf, xp(vec![(x(2), one()), (x(0), cp(&[(1, 0, 0), (-1, 0, -1)]))])),
                (T0, xp(vec![(x(2), one()), (x(0), CoeffRF::q())])),
                (TInf, xp(vec![(x(2), one()), (x(0), one())])),
            ],
        },
        Table {
            mu: vec![-2],
            full: xp(vec![
                (x(-2), one()),
                (x(0), &frac1(1) + &(&frac1(2) * &(&frac1(1) * &CoeffRF::q()))),
                (x(2), frac1(2)),
            ]),
            specs: vec![
                (
                    Q0,
                    xp(vec![(x(-2), one()), (x(2), cp(&[(1, 0, 0), (-1, 0, 1)])), (x(0), cp(&[(1, 0, 0), (-1, 0, 1)]))]),
                ),
                (QInf, xp(vec![(x(-2), one())])),
                (T0, xp(vec![(x(-2), one()), (x(2), one()), (x(0), cp(&[(1, 0, 0), (1, 1, 0)]))])),
                (TInf, xp(vec![(x(-2), one()), (x(2), cp(&[(1, -2, 0)])), (x(0), cp(&[(1, -1, 0), (1, -2, 0)]))])),
            ],
        },
    ]
}

/// `Σ_{u ∈ W_fin} X^{uρ}` for `A_2`.
pub fn a2_rho_orbit() -> Vec<Weight> {
    vec![w(&[1, 1]), w(&[2, -1]), w(&[-1, 2]), w(&[1, -2]), w(&[-2, 1]), w(&[-1, -1])]
}

/// `Ẽ_{−ρ}(q, 0)` and `Ẽ_{−ρ}(q, ∞)` for `A_2`.
pub fn a2_minus_rho_tables() -> (XPoly, XPoly) {
    let one = CoeffRF::one;
    let mut t0: Vec<(Weight, CoeffRF)> = a2_rho_orbit().into_iter().map(|x| (x, one())).collect();
    t0.push((w(&[0, 0]), cp(&[(2, 0, 0), (1, 1, 0)])));
    let s1s2_rho = w(&[-2, 1]);
    let s2s1_rho = w(&[1, -2]);
    let tinf = vec![
        (w(&[-1, -1]), one()),
        (s1s2_rho, cp(&[(1, -1, 0)])),
        (s2s1_rho, cp(&[(1, -1, 0)])),
        (w(&[-1, 2]), cp(&[(1, -2, 0)])),
        (w(&[2, -1]), cp(&[(1, -2, 0)])),
        (w(&[1, 1]), cp(&[(1, -2, 0)])),
        (w(&[0, 0]), cp(&[(2, -2, 0), (1, -1, 0)])),
    ];
    (xp(t0), xp(tinf))
}
