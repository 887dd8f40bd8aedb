//! Alcove walks: fold/cross patterns along a reduced word, their endpoints,
//! the `β∨` sequence with `(sh, ht)` exponents, and the walk classes used by
//! the specializations.
//!
//! A step at alcove `z` with letter `i` is positive when `z s_i` lies above
//! `z` in the level-zero order. Crossing moves to `z s_i`, folding stays.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::par::{self, Exec};
use crate::rootdata::{CorootVec, Weight};
use crate::weyl::{AffineWeyl, OrderTag, WeylElt};
use crate::xring::ops::{monomial_eigenvalue, y_action};
use crate::xring::XPoly;

pub const DEFAULT_WALK_BOUND: usize = 22;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StepKind {
    PosCross,
    NegCross,
    PosFold,
    NegFold,
}

impl StepKind {
    pub fn is_fold(self) -> bool {
        matches!(self, StepKind::PosFold | StepKind::NegFold)
    }
    pub fn is_positive(self) -> bool {
        matches!(self, StepKind::PosCross | StepKind::PosFold)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct WalkStep {
    pub index: usize,
    pub kind: StepKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BetaData {
    pub beta: CorootVec,
    /// `Y^{β∨} 𝟏 = q^{sh} t^{ht} 𝟏`.
    pub sh: i32,
    pub ht: i32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlcoveWalk {
    pub word: Vec<usize>,
    pub omega_prefix: usize,
    pub steps: Vec<WalkStep>,
    pub end: WeylElt,
    /// δ-free weight with `end = t_wt · φ`.
    pub wt: Weight,
    pub phi: WeylElt,
    pub f_pos: Vec<usize>,
    pub f_neg: Vec<usize>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct WalkClass {
    pub pos_folded: bool,
    pub neg_folded: bool,
    pub pos_semi_infinite: bool,
    pub neg_semi_infinite: bool,
}

/// Affine root `β_k = s_{i_ℓ}⋯s_{i_{k+1}} α_{i_k}` as a level-zero weight.
pub fn beta_roots(g: &AffineWeyl, word: &[usize]) -> Vec<Weight> {
    (0..word.len())
        .map(|k| {
            let mut b = g.data.simple_root(word[k]);
            for &i in &word[k + 1..] {
                b = g.reflect(i, &b);
            }
            b
        })
        .collect()
}

pub fn root_to_coroot(g: &AffineWeyl, beta: &Weight) -> Result<CorootVec> {
    let k = g
        .data
        .simple_coeffs(&beta.omega)
        .ok_or_else(|| Error::Internal(format!("{beta} is not in the root lattice")))?;
    let kk = beta.delta_int().ok_or_else(|| Error::Internal(format!("{beta} has fractional δ")))?;
    Ok(CorootVec { k, k_k: kk })
}

pub fn beta_sequence(g: &AffineWeyl, word: &[usize]) -> Result<Vec<BetaData>> {
    if !g.is_reduced(word) {
        return Err(Error::NotReduced(word.to_vec()));
    }
    let n = g.n();
    beta_roots(g, word)
        .iter()
        .map(|b| {
            let beta = root_to_coroot(g, b)?;
            let r = y_action(g, &beta, &XPoly::one(n))?;
            let (sh, v) = monomial_eigenvalue(&r, n).ok_or_else(|| Error::NotMonomial(format!("{r}")))?;
            if v % 2 != 0 {
                return Err(Error::NotMonomial(format!("odd power of t^(1/2) in {r}")));
            }
            Ok(BetaData { beta, sh, ht: v / 2 })
        })
        .collect()
}

fn split_end(end: &WeylElt) -> (Weight, WeylElt) {
    (Weight::fin(end.translation().to_vec()), end.fin_elt())
}

/// Walk for a fold pattern: bit `k` of `mask` set means step `k` folds.
pub fn walk_for_mask(g: &AffineWeyl, omega_prefix: usize, word: &[usize], mask: u64) -> AlcoveWalk {
    let mut z = g.pi(omega_prefix);
    let mut steps = Vec::with_capacity(word.len());
    let (mut f_pos, mut f_neg) = (Vec::new(), Vec::new());
    for (k, &i) in word.iter().enumerate() {
        let pos = g.steps_up(OrderTag::Zero, &z, i);
        let fold = mask >> k & 1 == 1;
        let kind = match (pos, fold) {
            (true, false) => StepKind::PosCross,
            (false, false) => StepKind::NegCross,
            (true, true) => StepKind::PosFold,
            (false, true) => StepKind::NegFold,
        };
        if fold {
            if pos { f_pos.push(k) } else { f_neg.push(k) }
        } else {
            z = g.mul(&z, &g.s(i));
        }
        steps.push(WalkStep { index: i, kind });
    }
    let (wt, phi) = split_end(&z);
    AlcoveWalk { word: word.to_vec(), omega_prefix, steps, end: z, wt, phi, f_pos, f_neg }
}

pub fn enumerate_walks(
    g: &AffineWeyl,
    omega_prefix: usize,
    word: &[usize],
    bound: usize,
    exec: Exec,
) -> Result<Vec<AlcoveWalk>> {
    if word.len() > bound || word.len() > 62 {
        return Err(Error::WalkTooLong { len: word.len(), bound });
    }
    if !g.is_reduced(word) {
        return Err(Error::NotReduced(word.to_vec()));
    }
    let total = 1usize << word.len();
    Ok(par::map_range(exec, total, |m| walk_for_mask(g, omega_prefix, word, m as u64)))
}

impl AlcoveWalk {
    pub fn folds(&self) -> usize {
        self.f_pos.len() + self.f_neg.len()
    }

    /// Recomputes the endpoint from the step kinds.
    pub fn replay(&self, g: &AffineWeyl) -> WeylElt {
        let mut z = g.pi(self.omega_prefix);
        for s in &self.steps {
            if !s.kind.is_fold() {
                z = g.mul(&z, &g.s(s.index));
            }
        }
        z
    }

    pub fn to_json(&self, g: &AffineWeyl) -> serde_json::Value {
        serde_json::json!({
            "steps": self.steps,
            "end": g.word_string(&self.end),
            "wt": self.wt,
            "folds": { "pos": self.f_pos, "neg": self.f_neg },
        })
    }
}

/// Walk classes with `ℓ(m)` the length of the finite part of `m_μ`.
pub fn classify(g: &AffineWeyl, walk: &AlcoveWalk, betas: &[BetaData], len_m: i64) -> WalkClass {
    let lphi = g.length_pos(&walk.phi);
    let nf = walk.folds() as i64;
    let ht_pos: i64 = walk.f_pos.iter().map(|&k| betas[k].ht as i64).sum();
    let ht_neg: i64 = walk.f_neg.iter().map(|&k| betas[k].ht as i64).sum();
    WalkClass {
        pos_folded: walk.f_neg.is_empty(),
        neg_folded: walk.f_pos.is_empty(),
        pos_semi_infinite: len_m - lphi - nf + 2 * ht_pos == 0,
        neg_semi_infinite: lphi - len_m - nf + 2 * ht_neg == 0,
    }
}

/// JSON lines, one walk per line.
pub fn walks_jsonl(g: &AffineWeyl, walks: &[AlcoveWalk]) -> String {
    let mut out = String::new();
    for w in walks {
        out.push_str(&w.to_json(g).to_string());
        out.push('\n');
    }
    out
}

/// Number of walks per endpoint, for quick summaries.
pub fn endpoint_histogram(walks: &[AlcoveWalk]) -> BTreeMap<WeylElt, usize> {
    let mut h = BTreeMap::new();
    for w in walks {
        *h.entry(w.end.clone()).or_insert(0) += 1;
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{build_affine_data, AffineType};

    fn a(n: usize) -> AffineWeyl {
        AffineWeyl::new(build_affine_data(AffineType::A, n).unwrap())
    }

    #[test]
    fn finite_letter_has_ht_minus_one() {
        let g = a(2);
        for i in 1..=2 {
            let b = beta_sequence(&g, &[i]).unwrap();
            assert_eq!((b[0].sh, b[0].ht), (0, -1));
        }
    }

    #[test]
    fn a1_betas() {
        let g = a(1);
        let b = beta_sequence(&g, &[1, 0]).unwrap();
        assert_eq!((b[0].sh, b[0].ht), (2, 1));
        assert_eq!((b[1].sh, b[1].ht), (1, 1));
    }

    #[test]
    fn counts_and_unique_unfolded() {
        let g = a(2);
        let word = [0, 1, 2, 0];
        let ws = enumerate_walks(&g, 0, &word, 22, Exec::Sequential).unwrap();
        assert_eq!(ws.len(), 16);
        let unfolded: Vec<_> = ws.iter().filter(|w| w.folds() == 0).collect();
        assert_eq!(unfolded.len(), 1);
        assert_eq!(unfolded[0].end, g.from_word(&word));
        for w in &ws {
            assert_eq!(w.replay(&g), w.end);
        }
    }
}
