//! Nonsymmetric Macdonald polynomials from alcove walks, their four
//! specializations, the Demazure-operator route at `t = 0`, and level-zero
//! character assembly.
//!
//! `E_μ` sums over all walks of the lex-least reduced word of the minimal
//! coset representative `m_μ = π_j s_{i_1}⋯s_{i_ℓ}` of `t_μ W_fin`:
//!
//! ```text
//! X^{wt(p)} t^{ℓ(φ(p))/2} Π_{f⁺} t^{-1/2}(1−t)/(1−q^{sh}t^{ht})
//!                         Π_{f⁻} t^{-1/2}(1−t) q^{sh}t^{ht}/(1−q^{sh}t^{ht})
//! ```
//!
//! and `Ẽ_μ = t^{−ℓ(m)/2} E_μ` where `m_μ = t_μ m`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::par::{self, Exec};
use crate::rootdata::Weight;
use crate::walks::{beta_sequence, BetaData, DEFAULT_WALK_BOUND};
use crate::weyl::{permutations, AffineWeyl, OrderTag, WeylElt};
use crate::xring::ops::{demazure_d, y_action};
use crate::xring::{char_q, gchar_rg, gchar_rg_plus, one_minus, CoeffRF, FormalSeries, Poly, Var, XPoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MuIndex {
    pub mu: Weight,
    pub m_mu: WeylElt,
    pub omega: usize,
    pub m_word: Vec<usize>,
    pub m_fin: WeylElt,
}

impl MuIndex {
    pub fn len_fin(&self, g: &AffineWeyl) -> i64 {
        g.length_pos(&self.m_fin)
    }
}

pub fn min_coset_rep(g: &AffineWeyl, mu: &Weight) -> Result<MuIndex> {
    let n = g.n();
    if mu.rank() != n {
        return Err(Error::RankMismatch { expected: n, got: mu.rank() });
    }
    if mu.level != 0 || !mu.delta.is_zero() {
        return Err(Error::Unsupported(format!("{mu} is not a finite weight")));
    }
    let m_mu = permutations(n + 1)
        .into_iter()
        .map(|u| WeylElt::from_parts(mu.omega.clone(), u))
        .min_by_key(|w| g.length_pos(w))
        .expect("nonempty coset");
    let (omega, m_word) = g.reduced_word(&m_mu);
    let m_fin = m_mu.fin_elt();
    Ok(MuIndex { mu: mu.clone(), m_mu, omega, m_word, m_fin })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Specialization {
    Q0,
    T0,
    QInf,
    TInf,
}

impl Specialization {
    pub const ALL: [Specialization; 4] =
        [Specialization::T0, Specialization::TInf, Specialization::Q0, Specialization::QInf];

    fn var(self) -> Var {
        match self {
            Specialization::Q0 | Specialization::QInf => Var::Q,
            Specialization::T0 | Specialization::TInf => Var::V,
        }
    }

    fn at_infinity(self) -> bool {
        matches!(self, Specialization::QInf | Specialization::TInf)
    }
}

impl FromStr for Specialization {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "q0" => Ok(Specialization::Q0),
            "t0" => Ok(Specialization::T0),
            "qinf" => Ok(Specialization::QInf),
            "tinf" => Ok(Specialization::TInf),
            _ => Err(Error::Parse(format!("unknown specialization {s:?} (q0|t0|qinf|tinf)"))),
        }
    }
}

impl fmt::Display for Specialization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Specialization::Q0 => "q0",
            Specialization::T0 => "t0",
            Specialization::QInf => "qinf",
            Specialization::TInf => "tinf",
        })
    }
}

/// One walk reduced to what the coefficient formula needs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Leaf {
    pub wt: Weight,
    pub len_phi: i64,
    /// `(positive?, step index)` for each fold.
    pub folds: Vec<(bool, usize)>,
}

/// Walk sums for one `μ`.
#[derive(Clone, Debug)]
pub struct WalkSum {
    pub index: MuIndex,
    pub betas: Vec<BetaData>,
    pub leaves: Vec<Leaf>,
}

#[derive(Clone, Copy, Debug)]
pub struct MacdonaldConfig {
    pub walk_bound: usize,
    pub exec: Exec,
}

impl Default for MacdonaldConfig {
    fn default() -> Self {
        MacdonaldConfig { walk_bound: DEFAULT_WALK_BOUND, exec: Exec::Parallel }
    }
}

const SHARD_BITS: usize = 6;

fn walk_leaves(g: &AffineWeyl, start: &WeylElt, word: &[usize], exec: Exec) -> Vec<Leaf> {
    let s = word.len().min(SHARD_BITS);
    let shards = par::map_range(exec, 1usize << s, |mask| {
        let mut z = start.clone();
        let mut folds = Vec::new();
        for (k, &i) in word[..s].iter().enumerate() {
            let pos = g.steps_up(OrderTag::Zero, &z, i);
            if mask >> k & 1 == 1 {
                folds.push((pos, k));
            } else {
                z = g.mul(&z, &g.s(i));
            }
        }
        let mut out = Vec::new();
        dfs(g, word, s, z, &mut folds, &mut out);
        out
    });
    shards.into_iter().flatten().collect()
}

fn dfs(g: &AffineWeyl, word: &[usize], k: usize, z: WeylElt, folds: &mut Vec<(bool, usize)>, out: &mut Vec<Leaf>) {
    if k == word.len() {
        let phi = z.fin_elt();
        out.push(Leaf {
            wt: Weight::fin(z.translation().to_vec()),
            len_phi: g.length_pos(&phi),
            folds: folds.clone(),
        });
        return;
    }
    let i = word[k];
    let pos = g.steps_up(OrderTag::Zero, &z, i);
    let zs = g.mul(&z, &g.s(i));
    dfs(g, word, k + 1, zs, folds, out);
    folds.push((pos, k));
    dfs(g, word, k + 1, z, folds, out);
    folds.pop();
}

impl WalkSum {
    pub fn new(g: &AffineWeyl, mu: &Weight, cfg: MacdonaldConfig) -> Result<Self> {
        let index = min_coset_rep(g, mu)?;
        let len = index.m_word.len();
        if len > cfg.walk_bound {
            return Err(Error::WalkTooLong { len, bound: cfg.walk_bound });
        }
        let betas = beta_sequence(g, &index.m_word)?;
        if let Some(b) = betas.iter().find(|b| b.sh == 0 && b.ht == 0) {
            return Err(Error::Internal(format!("vanishing denominator at β∨ = {:?}", b.beta)));
        }
        let start = g.pi(index.omega);
        let leaves = walk_leaves(g, &start, &index.m_word, cfg.exec);
        Ok(WalkSum { index, betas, leaves })
    }

    /// `v`-power shift applied to every term: `0` for `E`, `−ℓ(m)` for `Ẽ`.
    fn sum(&self, g: &AffineWeyl, vshift: i64, exec: Exec) -> XPoly {
        // (v-exponent, q-exponent, #f, sorted fold factors) → multiplicity, per weight.
        type Key = (i64, i64, usize, Vec<(i32, i32)>);
        let mut groups: BTreeMap<Weight, BTreeMap<Key, i64>> = BTreeMap::new();
        for leaf in &self.leaves {
            let mut vexp = leaf.len_phi - leaf.folds.len() as i64 + vshift;
            let mut qexp = 0i64;
            let mut fac = Vec::with_capacity(leaf.folds.len());
            for &(pos, k) in &leaf.folds {
                let b = &self.betas[k];
                if !pos {
                    vexp += 2 * b.ht as i64;
                    qexp += b.sh as i64;
                }
                fac.push((b.sh, b.ht));
            }
            fac.sort_unstable();
            *groups.entry(leaf.wt.clone()).or_default().entry((vexp, qexp, leaf.folds.len(), fac)).or_default() +=
                1;
        }
        let groups: Vec<_> = groups.into_iter().collect();
        let coeffs = par::map(exec, &groups, |(_, terms)| {
            let mut maxmult: BTreeMap<(i32, i32), usize> = BTreeMap::new();
            for (_, _, _, fac) in terms.keys() {
                let mut m: BTreeMap<(i32, i32), usize> = BTreeMap::new();
                fac.iter().for_each(|f| *m.entry(*f).or_default() += 1);
                for (f, c) in m {
                    let e = maxmult.entry(f).or_default();
                    *e = (*e).max(c);
                }
            }
            let den = maxmult
                .iter()
                .fold(Poly::one(), |acc, (&(a, b), &c)| &acc * &one_minus(a, b).pow(c as u32));
            let one_minus_t = one_minus(0, 1);
            let mut num = Poly::zero();
            for ((vexp, qexp, nf, fac), mult) in terms {
                let mut rest = maxmult.clone();
                fac.iter().for_each(|f| *rest.get_mut(f).unwrap() -= 1);
                let mut term = Poly::monomial(BigInt::from(*mult), *qexp as i32, *vexp as i32);
                term = &term * &one_minus_t.pow(*nf as u32);
                for (&(a, b), &c) in &rest {
                    if c > 0 {
                        term = &term * &one_minus(a, b).pow(c as u32);
                    }
                }
                num.add_assign_ref(&term);
            }
            CoeffRF::new(num, den)
        });
        let mut out = XPoly::zero();
        for ((w, _), c) in groups.into_iter().zip(coeffs) {
            out.add_term(w, c);
        }
        let _ = g;
        out
    }

    pub fn e(&self, g: &AffineWeyl, exec: Exec) -> XPoly {
        self.sum(g, 0, exec)
    }

    pub fn e_tilde(&self, g: &AffineWeyl, exec: Exec) -> XPoly {
        self.sum(g, -self.index.len_fin(g), exec)
    }

    /// Specialization as a restricted sum over walks: each walk term is
    /// replaced by its leading monomial in the vanishing/exploding variable,
    /// and exactly the walks whose leading exponent is zero survive.
    pub fn specialize_walks(&self, g: &AffineWeyl, which: Specialization) -> Result<XPoly> {
        let len_m = self.index.len_fin(g);
        let mut kept: BTreeMap<(Weight, i64), CoeffRF> = BTreeMap::new();
        for leaf in &self.leaves {
            let (e, c) = leaf_limit(leaf, &self.betas, len_m, which);
            let vanishes = if which.at_infinity() { e < 0 } else { e > 0 };
            if !vanishes {
                let slot = kept.entry((leaf.wt.clone(), e)).or_insert_with(CoeffRF::zero);
                *slot = &*slot + &c;
            }
        }
        let mut out = XPoly::zero();
        for ((w, e), c) in kept {
            if c.is_zero() {
                continue;
            }
            if e != 0 {
                return Err(Error::NoLimit(format!("walks at X^[{w}] diverge like x^{e} with coefficient {c}")));
            }
            out.add_term(w, c);
        }
        Ok(out)
    }

    /// Which walks survive a specialization under the leading-term rule.
    pub fn survivors(&self, g: &AffineWeyl, which: Specialization) -> Vec<usize> {
        let len_m = self.index.len_fin(g);
        (0..self.leaves.len()).filter(|&k| leaf_limit(&self.leaves[k], &self.betas, len_m, which).0 == 0).collect()
    }
}

/// Leading behaviour of one walk term in the specialized variable `x`:
/// returns `(e, c)` with the term `~ c·x^e`.
fn leaf_limit(leaf: &Leaf, betas: &[BetaData], len_m: i64, which: Specialization) -> (i64, CoeffRF) {
    let on_v = which.var() == Var::V;
    let inf = which.at_infinity();
    let mut e = 0i64;
    let mut c = CoeffRF::one();
    // Multiply by the monomial q^a v^b.
    let mono = |e: &mut i64, c: &mut CoeffRF, a: i64, b: i64| {
        if on_v {
            *e += b;
            *c = &*c * &CoeffRF::monomial(a as i32, 0);
        } else {
            *e += a;
            *c = &*c * &CoeffRF::monomial(0, b as i32);
        }
    };
    mono(&mut e, &mut c, 0, leaf.len_phi - len_m);
    for &(pos, k) in &leaf.folds {
        let BetaData { sh, ht, .. } = betas[k];
        let (sh, ht) = (sh as i64, ht as i64);
        // t^{-1/2}(1 − t)
        if on_v {
            if inf {
                mono(&mut e, &mut c, 0, 1);
                c = -c;
            } else {
                mono(&mut e, &mut c, 0, -1);
            }
        } else {
            c = &c * &CoeffRF::from_poly(&Poly::v_pow(-1) * &one_minus(0, 1));
        }
        // 1/(1 − u) or u/(1 − u) with u = q^{sh} t^{ht}
        let d = if on_v { 2 * ht } else { sh };
        let u_small = (d > 0) != inf;
        if d == 0 {
            let u = CoeffRF::monomial(sh as i32, 2 * ht as i32);
            let g = (&CoeffRF::one() - &u).inv();
            c = if pos { &c * &g } else { &(&c * &g) * &u };
        } else if u_small {
            if !pos {
                mono(&mut e, &mut c, sh, 2 * ht);
            }
        } else if pos {
            mono(&mut e, &mut c, -sh, -2 * ht);
            c = -c;
        } else {
            c = -c;
        }
    }
    (e, c)
}

pub fn e(g: &AffineWeyl, mu: &Weight, cfg: MacdonaldConfig) -> Result<XPoly> {
    Ok(WalkSum::new(g, mu, cfg)?.e(g, cfg.exec))
}

pub fn e_tilde(g: &AffineWeyl, mu: &Weight, cfg: MacdonaldConfig) -> Result<XPoly> {
    Ok(WalkSum::new(g, mu, cfg)?.e_tilde(g, cfg.exec))
}

/// Both routes, asserted equal.
pub fn specialize(g: &AffineWeyl, mu: &Weight, which: Specialization, cfg: MacdonaldConfig) -> Result<XPoly> {
    let ws = WalkSum::new(g, mu, cfg)?;
    let a = ws.specialize_walks(g, which)?;
    let b = ws.e_tilde(g, cfg.exec).limit(which.var(), which.at_infinity())?;
    if a != b {
        let diff = &a - &b;
        return Err(Error::RouteMismatch(format!(
            "Ẽ_[{mu}] at {which}: walk route {a} vs limit route {b}; difference {diff}"
        )));
    }
    Ok(a)
}

/// `(ν, j, word)` with `μ + Λ₀ = s_{i_1}⋯s_{i_r}(ν + Λ₀ + jδ)` and `ν + Λ₀` dominant.
pub fn ion_data(g: &AffineWeyl, mu: &Weight) -> Result<(Weight, i64, Vec<usize>)> {
    let n = g.n();
    let mut lam = mu + &g.data.lambda0();
    let mut word = Vec::new();
    let bound = 10_000;
    while let Some(i) = (0..=n).find(|&i| g.data.pair_i(&lam, i) < 0) {
        if word.len() >= bound {
            return Err(Error::Internal(format!("dominance loop for {mu} exceeded {bound} steps")));
        }
        lam = g.reflect(i, &lam);
        word.push(i);
    }
    let j = lam.delta_int().ok_or_else(|| Error::Internal("fractional δ".into()))?;
    Ok((lam.without_delta() - g.data.lambda0(), j, word))
}

/// `q^{j}·X^{−Λ₀} D_{i_1}⋯D_{i_r} X^{ν+Λ₀}` with `X^δ = q`.
pub fn ion_demazure(g: &AffineWeyl, mu: &Weight) -> Result<XPoly> {
    let (nu, j, word) = ion_data(g, mu)?;
    let l0 = g.data.lambda0();
    let mut f = XPoly::monomial(&nu + &l0);
    for &i in word.iter().rev() {
        f = demazure_d(g, i, &f);
    }
    Ok(f.shift(&-&l0).daha_q()?.scale(&CoeffRF::monomial(j as i32, 0)))
}

pub fn is_dominant_weight(g: &AffineWeyl, lam: &Weight) -> bool {
    lam.level >= 0 && (0..=g.n()).all(|i| g.data.pair_i(lam, i) >= 0)
}

/// `D_{i_1}⋯D_{i_ℓ} X^Λ` with δ kept explicit.
pub fn demazure_poly(g: &AffineWeyl, lam: &Weight, word: &[usize]) -> Result<XPoly> {
    if !is_dominant_weight(g, lam) {
        return Err(Error::Unsupported(format!("{lam} is not dominant")));
    }
    let mut f = XPoly::monomial(lam.clone());
    for &i in word.iter().rev() {
        f = demazure_d(g, i, &f);
    }
    Ok(f)
}

pub fn demazure_char(g: &AffineWeyl, lam: &Weight, word: &[usize], window: i64) -> Result<FormalSeries> {
    char_q(&demazure_poly(g, lam, word)?, window)
}

/// Series with `X^μ` coefficients read off a Laurent polynomial in `q`.
pub fn qpoly_series(f: &XPoly, window: i64) -> Result<FormalSeries> {
    let mut s = FormalSeries::new(window)?;
    for (w, c) in f.terms() {
        let p = c.as_poly().ok_or_else(|| Error::Window(format!("coefficient {c} is not a polynomial")))?;
        for ((a, b), x) in p.terms() {
            if *b != 0 {
                return Err(Error::Window(format!("coefficient {c} depends on t")));
            }
            s.add(*a as i64, w.clone(), x.clone());
        }
    }
    Ok(s)
}

/// `w₀λ` for type A: `ω_i ↦ −ω_{n+1−i}`.
pub fn w0(lam: &Weight) -> Weight {
    Weight { delta: lam.delta, omega: lam.omega.iter().rev().map(|x| -x).collect(), level: lam.level }
}

fn check_level_zero_dominant(g: &AffineWeyl, lam: &Weight) -> Result<()> {
    if lam.rank() != g.n() {
        return Err(Error::RankMismatch { expected: g.n(), got: lam.rank() });
    }
    if lam.level != 0 || !lam.delta.is_zero() || lam.omega.iter().any(|m| *m < 0) {
        return Err(Error::Unsupported(format!("{lam} is not a dominant level-zero weight")));
    }
    Ok(())
}

/// `Ẽ_{w₀λ}(q^{−1}, 0)` as a series.
pub fn lowest_t0_series(g: &AffineWeyl, lam: &Weight, window: i64, cfg: MacdonaldConfig) -> Result<FormalSeries> {
    let low = specialize(g, &w0(lam), Specialization::T0, cfg)?;
    qpoly_series(&low.subs_q_inv(), window)
}

/// `gchar(RG_λ)·Ẽ_{w₀λ}(q^{−1}, 0)` in the window `|k| ≤ window`.
pub fn extremal_char(g: &AffineWeyl, lam: &Weight, window: i64, cfg: MacdonaldConfig) -> Result<FormalSeries> {
    check_level_zero_dominant(g, lam)?;
    let e = lowest_t0_series(g, lam, window, cfg)?;
    Ok(gchar_rg(&lam.omega, window, Weight::zero(g.n()))?.mul(&e))
}

/// `gchar(RG_λ⁺)·Ẽ_{w₀λ}(q^{−1}, 0)`.
pub fn bounded_char(g: &AffineWeyl, lam: &Weight, window: i64, cfg: MacdonaldConfig) -> Result<FormalSeries> {
    check_level_zero_dominant(g, lam)?;
    let e = lowest_t0_series(g, lam, window, cfg)?;
    Ok(gchar_rg_plus(&lam.omega, window, Weight::zero(g.n()))?.mul(&e))
}

/// `Y^{α_i∨} f = c_i f` for every finite `i`, with each `c_i` a monomial `q^a t^{b/2}`.
pub fn eigenvalues(g: &AffineWeyl, f: &XPoly) -> Result<Vec<(i32, i32)>> {
    let (w, lead) = f.terms().next().ok_or_else(|| Error::Internal("zero polynomial".into()))?;
    let (w, lead) = (w.clone(), lead.clone());
    (1..=g.n())
        .map(|i| {
            let r = y_action(g, &g.data.coroot(i), f)?;
            let c = &r.coeff(&w) / &lead;
            let (x, m) = c.as_monomial().ok_or_else(|| Error::NotMonomial(format!("Y^α{i}∨ ratio {c}")))?;
            if x != BigInt::from(1) || r != f.scale(&c) {
                return Err(Error::NotMonomial(format!("Y^α{i}∨ does not act by a scalar")));
            }
            Ok(m)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{build_affine_data, AffineType};

    fn a(n: usize) -> AffineWeyl {
        AffineWeyl::new(build_affine_data(AffineType::A, n).unwrap())
    }

    fn frac(num: Poly, den: Poly) -> CoeffRF {
        CoeffRF::new(num, den)
    }

    #[test]
    fn coset_reps() {
        let g = a(1);
        let m = min_coset_rep(&g, &Weight::fin(vec![2])).unwrap();
        assert_eq!(m.m_word, vec![0]);
        assert_eq!(m.omega, 0);
        let m = min_coset_rep(&g, &Weight::fin(vec![1])).unwrap();
        assert_eq!((m.omega, m.m_word.len()), (1, 0));
        let g2 = a(2);
        let m = min_coset_rep(&g2, &Weight::fin(vec![-1, -1])).unwrap();
        assert_eq!(g2.length_pos(&m.m_mu), 4);
        assert!(m.m_fin.is_identity());
    }

    #[test]
    fn a1_tables() {
        let g = a(1);
        let cfg = MacdonaldConfig::default();
        let x = |k: i64| Weight::fin(vec![k]);
        let e1 = e_tilde(&g, &x(1), cfg).unwrap();
        assert_eq!(e1, XPoly::monomial(x(1)));
        let em1 = e_tilde(&g, &x(-1), cfg).unwrap();
        let mut want = XPoly::monomial(x(-1));
        want.add_term(x(1), frac(one_minus(0, 1), one_minus(1, 1)));
        assert_eq!(em1, want);
        let em2 = e_tilde(&g, &x(-2), cfg).unwrap();
        let mut want = XPoly::monomial(x(-2));
        let c1 = frac(one_minus(0, 1), one_minus(1, 1));
        let c2 = frac(one_minus(0, 1), one_minus(2, 1));
        want.add_term(x(2), c2.clone());
        want.add_term(x(0), &c1 + &(&c2 * &(&c1 * &CoeffRF::q())));
        assert_eq!(em2, want);
    }

    #[test]
    fn a1_specializations() {
        let g = a(1);
        let cfg = MacdonaldConfig::default();
        let x = |k: i64| Weight::fin(vec![k]);
        let t0 = specialize(&g, &x(-2), Specialization::T0, cfg).unwrap();
        let mut want = XPoly::monomial(x(-2));
        want.add_term(x(2), CoeffRF::one());
        want.add_term(x(0), &CoeffRF::one() + &CoeffRF::q());
        assert_eq!(t0, want);
        let p2 = specialize(&g, &x(2), Specialization::T0, cfg).unwrap();
        let mut want = XPoly::monomial(x(2));
        want.add_term(x(0), CoeffRF::q());
        assert_eq!(p2, want);
        for mu in -4..=4 {
            for s in Specialization::ALL {
                specialize(&g, &x(mu), s, cfg).unwrap();
            }
        }
    }

    #[test]
    fn ion_examples() {
        let g = a(1);
        let x = |k: i64| Weight::fin(vec![k]);
        let (nu, j, w) = ion_data(&g, &x(2)).unwrap();
        assert_eq!((nu, j, w), (Weight::zero(1), 1, vec![0]));
        let r = ion_demazure(&g, &x(2)).unwrap();
        let mut want = XPoly::monomial(x(2));
        want.add_term(x(0), CoeffRF::q());
        assert_eq!(r, want);
        assert_eq!(ion_demazure(&g, &x(0)).unwrap(), XPoly::one(1));
    }

    #[test]
    fn demazure_char_examples() {
        let g = a(1);
        let l0 = g.data.lambda0();
        let s = demazure_char(&g, &l0, &[1, 0], 4).unwrap();
        assert_eq!(s.entries().len(), 4);
        assert_eq!(s.coeff(1, &Weight::new(0, vec![2], 1)), BigInt::from(1));
        assert_eq!(s.coeff(1, &Weight::new(0, vec![-2], 1)), BigInt::from(1));
        assert_eq!(s.coeff(1, &l0), BigInt::from(1));
        assert_eq!(s.coeff(0, &l0), BigInt::from(1));
    }
}
