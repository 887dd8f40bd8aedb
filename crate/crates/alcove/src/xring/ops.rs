//! Demazure operators, the Demazure–Lusztig operators `T_i^{±1}` on the
//! polynomial representation, and `Y^{λ∨}`.
//!
//! The polynomial representation uses `X^δ = q`. `Y^{t_λ}` is expanded along
//! the lex-least reduced word `i_1 … i_ℓ` of `t_λ`: the factor for letter `k`
//! is `T_{i_k}` when the prefix steps up in the level-zero order and
//! `T_{i_k}^{-1}` otherwise, and `T_{i_1}^{±1}` is applied first. `Y^K` acts
//! as `q`.

use num_bigint::BigInt;
use num_traits::One;

use super::coeff::CoeffRF;
use super::poly::Poly;
use super::xpoly::XPoly;
use crate::error::{Error, Result};
use crate::rootdata::{CorootVec, Weight};
use crate::weyl::{AffineWeyl, OrderTag, Orientation};

/// `D_i f = (f − X^{−α_i} s_i f)/(1 − X^{−α_i})`, keeping δ explicit.
pub fn demazure_d(g: &AffineWeyl, i: usize, f: &XPoly) -> XPoly {
    let alpha = g.data.simple_root(i);
    let mut out = XPoly::zero();
    for (mu, c) in f.terms() {
        let m = g.data.pair_i(mu, i);
        if m >= 0 {
            for k in 0..=m {
                out.add_term(mu - &(&alpha * k), c.clone());
            }
        } else {
            for k in 1..=(-m - 1) {
                out.add_term(mu + &(&alpha * k), -c);
            }
        }
    }
    out
}

/// `Δ_i f = (f − s_i f)/(1 − X^{−α_i})`.
pub fn demazure_delta(g: &AffineWeyl, i: usize, f: &XPoly) -> XPoly {
    let alpha = g.data.simple_root(i);
    let mut out = XPoly::zero();
    for (mu, c) in f.terms() {
        let m = g.data.pair_i(mu, i);
        if m > 0 {
            for k in 0..m {
                out.add_term(mu - &(&alpha * k), c.clone());
            }
        } else {
            for k in 1..=(-m) {
                out.add_term(mu + &(&alpha * k), -c);
            }
        }
    }
    out
}

pub fn reflect_poly(g: &AffineWeyl, i: usize, f: &XPoly) -> XPoly {
    let mut out = XPoly::zero();
    for (mu, c) in f.terms() {
        out.add_term(g.reflect(i, mu), c.clone());
    }
    out
}

fn v_minus_vinv() -> Poly {
    &Poly::v() - &Poly::v_pow(-1)
}

fn fold(w: Weight) -> (Weight, i32) {
    let d = w.delta_int().expect("integral δ in the polynomial representation") as i32;
    (w.without_delta(), d)
}

/// `T_i^{sign}` on the polynomial representation.
pub fn ti_action(g: &AffineWeyl, i: usize, f: &XPoly, sign: i32) -> XPoly {
    let alpha = g.data.simple_root(i);
    let vv = v_minus_vinv();
    let mut out = XPoly::zero();
    let mut push = |w: Weight, c: &CoeffRF, p: Poly| {
        let (w, d) = fold(w);
        let p = if d == 0 { p } else { &p * &Poly::q_pow(d) };
        out.add_term(w, c.mul_poly(&p));
    };
    for (mu, c) in f.terms() {
        let m = g.data.pair_i(mu, i);
        push(mu - &(&alpha * m), c, Poly::v());
        if m > 0 {
            for k in 1..=m {
                push(mu - &(&alpha * k), c, -&vv);
            }
        } else {
            for k in 0..(-m) {
                push(mu + &(&alpha * k), c, vv.clone());
            }
        }
        if sign < 0 {
            push(mu.clone(), c, -&vv);
        }
    }
    out
}

/// The `T_i^{±1}` factors of `Y^{λ∨}` in application order, with the `q`-power
/// contributed by `K`.
pub fn y_factors(g: &AffineWeyl, h: &CorootVec) -> Result<(Vec<(usize, i32)>, i64)> {
    let t = g.coroot_translation(h);
    let (j, word) = g.reduced_word(&t);
    if j != 0 {
        return Err(Error::Internal("coroot translation outside W^ad".into()));
    }
    let mut z = g.identity();
    let mut factors = Vec::with_capacity(word.len());
    for &i in &word {
        let up = g.steps_up(OrderTag::Zero, &z, i);
        factors.push((i, if up { 1 } else { -1 }));
        z = g.mul(&z, &g.s(i));
    }
    Ok((factors, h.k_k))
}

pub fn y_action(g: &AffineWeyl, h: &CorootVec, f: &XPoly) -> Result<XPoly> {
    let (factors, kk) = y_factors(g, h)?;
    let mut out = f.clone();
    for (i, s) in factors {
        out = ti_action(g, i, &out, s);
    }
    if kk != 0 {
        out = out.scale_poly(&Poly::q_pow(kk as i32));
    }
    Ok(out)
}

/// Checks `Y^{−α_i∨} 𝟏 = t 𝟏` for every finite `i`.
pub fn y_calibrated(g: &AffineWeyl) -> bool {
    let n = g.n();
    let one = XPoly::one(n);
    (1..=n).all(|i| {
        let mut h = g.data.coroot(i);
        h.k.iter_mut().for_each(|x| *x = -*x);
        match y_action(g, &h, &one) {
            Ok(r) => r == one.scale_poly(&Poly::t()),
            Err(_) => false,
        }
    })
}

/// Picks the level-zero orientation for which `Y^{−α_i∨} 𝟏 = t 𝟏`.
pub fn calibrate(g: &AffineWeyl) -> Result<Orientation> {
    for o in [Orientation::Calibrated, Orientation::Flipped] {
        let h = g.clone().with_orientation(o);
        if y_calibrated(&h) {
            return Ok(o);
        }
    }
    Err(Error::Calibration("neither orientation gives Y^{-α_i∨}𝟏 = t𝟏".into()))
}

/// If `f = c·𝟏` with `c` a monomial `q^a v^b`, returns `(a, b)`.
pub fn monomial_eigenvalue(f: &XPoly, n: usize) -> Option<(i32, i32)> {
    if f.len() != 1 {
        return None;
    }
    let c = f.coeff(&Weight::zero(n));
    let (x, m) = c.as_monomial()?;
    (x == BigInt::one()).then_some(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{build_affine_data, AffineType};

    fn a(n: usize) -> AffineWeyl {
        AffineWeyl::new(build_affine_data(AffineType::A, n).unwrap())
    }

    #[test]
    fn demazure_examples() {
        let g = a(1);
        let f = XPoly::monomial(Weight::new(0, vec![1], 1));
        let r = demazure_d(&g, 1, &f);
        let e = &f + &XPoly::monomial(Weight::new(0, vec![-1], 1));
        assert_eq!(r, e);
        let l0 = XPoly::monomial(Weight::new(0, vec![0], 1));
        let r0 = demazure_d(&g, 0, &l0);
        assert_eq!(r0, &l0 + &XPoly::monomial(Weight::new(-1, vec![2], 1)));
        let neg = XPoly::monomial(Weight::new(0, vec![-1], 0));
        assert!(demazure_d(&g, 1, &neg).is_zero());
    }

    #[test]
    fn t_on_one() {
        let g = a(2);
        let one = XPoly::one(2);
        for i in 0..=2 {
            assert_eq!(ti_action(&g, i, &one, 1), one.scale_poly(&Poly::v()));
        }
    }

    #[test]
    fn calibration_default() {
        for n in 1..=3 {
            let g = a(n);
            assert_eq!(calibrate(&g).unwrap(), Orientation::Calibrated, "rank {n}");
        }
    }

    #[test]
    fn y_k_is_q() {
        let g = a(1);
        let h = CorootVec { k: vec![0], k_k: 1 };
        let r = y_action(&g, &h, &XPoly::one(1)).unwrap();
        assert_eq!(monomial_eigenvalue(&r, 1), Some((1, 0)));
    }
}
