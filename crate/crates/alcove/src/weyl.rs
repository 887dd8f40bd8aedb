//! Extended affine Weyl group of type `A_n^{(1)}`.
//!
//! An element is stored as `t_μ u` with `μ` a finite weight (ω-coordinates,
//! so the extended lattice is covered) and `u` a permutation of `{0..n}`
//! acting on ε-coordinates by `ε_a ↦ ε_{u(a)}`.
//!
//! The level-zero length is taken as `ℓ⁰(t_μ u) = ℓ(u) − 2⟨ρ, μ⟩`. This is the
//! closed formula `ℓ(u) + 2⟨ρ, μ∨⟩` for the presentation `u' t_{μ'}` applied to
//! `w⁻¹`; in this form adjacent elements differ by exactly one and
//! `ℓ⁰(t_ν x) − ℓ⁰(t_ν y) = ℓ⁰(x) − ℓ⁰(y)`.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt::Write as _;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootdata::{AffineCartanData, CorootVec, Weight, Q};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElt {
    trans: Vec<i64>,
    perm: Vec<u8>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderTag {
    Positive,
    Negative,
    Zero,
}

impl std::str::FromStr for OrderTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "positive" | "+" | "pos" => Ok(OrderTag::Positive),
            "negative" | "-" | "neg" => Ok(OrderTag::Negative),
            "zero" | "0" => Ok(OrderTag::Zero),
            _ => Err(Error::Parse(format!("unknown order {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    /// `ℓ⁰`-increasing is greater.
    Calibrated,
    Flipped,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AdjRel {
    WLess,
    WGreater,
}

impl WeylElt {
    pub fn identity(n: usize) -> Self {
        WeylElt { trans: vec![0; n], perm: (0..=n as u8).collect() }
    }

    pub fn from_parts(trans: Vec<i64>, perm: Vec<u8>) -> Self {
        WeylElt { trans, perm }
    }

    pub fn rank(&self) -> usize {
        self.trans.len()
    }

    /// Translation part `μ` in ω-coordinates (`w = t_μ u`).
    pub fn translation(&self) -> &[i64] {
        &self.trans
    }

    pub fn fin_part(&self) -> &[u8] {
        &self.perm
    }

    pub fn fin_elt(&self) -> WeylElt {
        WeylElt { trans: vec![0; self.trans.len()], perm: self.perm.clone() }
    }

    pub fn is_finite(&self) -> bool {
        self.trans.iter().all(|x| *x == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.is_finite() && self.perm.iter().enumerate().all(|(a, b)| a == *b as usize)
    }
}

/// Group context: root data plus cached Ω generators and the level-zero
/// orientation.
#[derive(Clone, Debug)]
pub struct AffineWeyl {
    pub data: AffineCartanData,
    pub orientation: Orientation,
    omega_gens: Vec<WeylElt>,
}

impl AffineWeyl {
    pub fn new(data: AffineCartanData) -> Self {
        let mut g = AffineWeyl { data, orientation: Orientation::Calibrated, omega_gens: Vec::new() };
        g.omega_gens = (0..=g.n()).map(|j| g.find_pi(j)).collect();
        g
    }

    pub fn with_orientation(mut self, o: Orientation) -> Self {
        self.orientation = o;
        self
    }

    pub fn n(&self) -> usize {
        self.data.rank
    }

    fn eps(&self, omega: &[i64]) -> Vec<i64> {
        self.data.to_eps(omega)
    }

    pub fn identity(&self) -> WeylElt {
        WeylElt::identity(self.n())
    }

    pub fn s(&self, i: usize) -> WeylElt {
        let n = self.n();
        assert!(i <= n, "generator index {i} out of range");
        let mut perm: Vec<u8> = (0..=n as u8).collect();
        if i == 0 {
            perm.swap(0, n);
            WeylElt { trans: self.data.theta().omega, perm }
        } else {
            perm.swap(i - 1, i);
            WeylElt { trans: vec![0; n], perm }
        }
    }

    pub fn translation(&self, mu: &[i64]) -> WeylElt {
        WeylElt { trans: mu.to_vec(), perm: (0..=self.n() as u8).collect() }
    }

    /// The length-zero element of `t_{ω_j} W_fin` (`π_0 = 1`).
    fn find_pi(&self, j: usize) -> WeylElt {
        let n = self.n();
        if j == 0 {
            return self.identity();
        }
        let mut mu = vec![0; n];
        mu[j - 1] = 1;
        for perm in permutations(n + 1) {
            let w = WeylElt { trans: mu.clone(), perm };
            if self.length_pos(&w) == 0 {
                return w;
            }
        }
        unreachable!("every class of P/Q has a length-zero element")
    }

    pub fn pi(&self, j: usize) -> WeylElt {
        self.omega_gens[j % (self.n() + 1)].clone()
    }

    pub fn omega_part(&self, w: &WeylElt) -> usize {
        self.data.omega_class(&w.trans)
    }

    pub fn mul(&self, a: &WeylElt, b: &WeylElt) -> WeylElt {
        let ub = self.act_fin_omega(&a.perm, &b.trans);
        let trans = a.trans.iter().zip(&ub).map(|(x, y)| x + y).collect();
        let perm = b.perm.iter().map(|&v| a.perm[v as usize]).collect();
        WeylElt { trans, perm }
    }

    pub fn inv(&self, w: &WeylElt) -> WeylElt {
        let mut pinv = vec![0u8; w.perm.len()];
        for (a, &b) in w.perm.iter().enumerate() {
            pinv[b as usize] = a as u8;
        }
        let m = self.act_fin_omega(&pinv, &w.trans);
        WeylElt { trans: m.iter().map(|x| -x).collect(), perm: pinv }
    }

    pub fn from_word(&self, word: &[usize]) -> WeylElt {
        self.from_prefixed_word(0, word)
    }

    pub fn from_prefixed_word(&self, omega: usize, word: &[usize]) -> WeylElt {
        let mut w = self.pi(omega);
        for &i in word {
            w = self.mul(&w, &self.s(i));
        }
        w
    }

    pub fn act_fin_omega(&self, perm: &[u8], omega: &[i64]) -> Vec<i64> {
        let e = self.eps(omega);
        let mut out = vec![0; e.len()];
        for (a, &b) in perm.iter().enumerate() {
            out[b as usize] = e[a];
        }
        self.data.from_eps(&out)
    }

    pub fn act(&self, w: &WeylElt, lam: &Weight) -> Weight {
        let l = lam.level;
        let fin = self.act_fin_omega(&w.perm, &lam.omega);
        let mu = &w.trans;
        let pair = self.data.form(&fin, mu);
        let mm = self.data.form(mu, mu);
        let delta = lam.delta - pair - mm * Q::new(l, 2);
        let omega = fin.iter().zip(mu).map(|(x, m)| x + l * m).collect();
        Weight { delta, omega, level: l }
    }

    pub fn act_word(&self, word: &[usize], lam: &Weight) -> Weight {
        let mut out = lam.clone();
        for &i in word.iter().rev() {
            out = self.reflect(i, &out);
        }
        out
    }

    /// `s_i λ = λ − ⟨λ, h_i⟩ α_i`.
    pub fn reflect(&self, i: usize, lam: &Weight) -> Weight {
        let m = self.data.pair_i(lam, i);
        lam - &(&self.data.simple_root(i) * m)
    }

    /// Image of the affine root `ε_a − ε_b + kδ`: returns `(a', b', k')`.
    fn apply_root(&self, w: &WeylElt, a: usize, b: usize, k: i64) -> (usize, usize, i64) {
        let e = self.eps(&w.trans);
        let (ua, ub) = (w.perm[a] as usize, w.perm[b] as usize);
        (ua, ub, k - (e[ua] - e[ub]))
    }

    fn simple_affine_root(&self, i: usize) -> (usize, usize, i64) {
        if i == 0 {
            (self.n(), 0, 1)
        } else {
            (i - 1, i, 0)
        }
    }

    /// True when `w(α_i)` is a negative affine root.
    pub fn sends_negative(&self, w: &WeylElt, i: usize) -> bool {
        let (a, b, k) = self.simple_affine_root(i);
        let (a2, b2, k2) = self.apply_root(w, a, b, k);
        k2 < 0 || (k2 == 0 && a2 > b2)
    }

    pub fn is_right_descent(&self, w: &WeylElt, i: usize) -> bool {
        self.sends_negative(w, i)
    }

    pub fn is_left_descent(&self, w: &WeylElt, i: usize) -> bool {
        self.sends_negative(&self.inv(w), i)
    }

    /// `ℓ⁺`: number of positive affine roots sent to negative roots.
    pub fn length_pos(&self, w: &WeylElt) -> i64 {
        let e = self.eps(&w.trans);
        let n1 = self.n() + 1;
        let mut total = 0;
        for a in 0..n1 {
            for b in 0..n1 {
                if a == b {
                    continue;
                }
                let (ua, ub) = (w.perm[a] as usize, w.perm[b] as usize);
                let k0 = if a < b { 0 } else { 1 };
                let m = e[ua] - e[ub];
                let k1 = m - 1 + i64::from(ua > ub);
                total += (k1 - k0 + 1).max(0);
            }
        }
        total
    }

    pub fn fin_length(&self, perm: &[u8]) -> i64 {
        let mut c = 0;
        for a in 0..perm.len() {
            for b in a + 1..perm.len() {
                if perm[a] > perm[b] {
                    c += 1;
                }
            }
        }
        c
    }

    /// `2⟨ρ, μ⟩` for a finite weight in ω-coordinates.
    pub fn two_rho_pair(&self, mu: &[i64]) -> i64 {
        let e = self.eps(mu);
        let mut s = 0;
        for a in 0..e.len() {
            for b in a + 1..e.len() {
                s += e[a] - e[b];
            }
        }
        s
    }

    pub fn length_zero(&self, w: &WeylElt) -> i64 {
        self.fin_length(&w.perm) - self.two_rho_pair(&w.trans)
    }

    pub fn length(&self, order: OrderTag, w: &WeylElt) -> i64 {
        match order {
            OrderTag::Positive => self.length_pos(w),
            OrderTag::Negative => -self.length_pos(w),
            OrderTag::Zero => self.length_zero(w),
        }
    }

    /// Relative order of `w` and `w s_j`.
    pub fn compare_adjacent(&self, order: OrderTag, w: &WeylElt, j: usize) -> Result<AdjRel> {
        let up_pos = !self.sends_negative(w, j);
        let rel = |up: bool| if up { AdjRel::WLess } else { AdjRel::WGreater };
        match order {
            OrderTag::Positive => Ok(rel(up_pos)),
            OrderTag::Negative => Ok(rel(!up_pos)),
            OrderTag::Zero => {
                let ws = self.mul(w, &self.s(j));
                let d = self.length_zero(&ws) - self.length_zero(w);
                if d.abs() != 1 {
                    return Err(Error::Internal(format!("level-zero length jump {d} at s_{j}")));
                }
                let up = (d == 1) == (self.orientation == Orientation::Calibrated);
                Ok(rel(up))
            }
        }
    }

    /// `zs_j` is above `z` in the given order.
    pub fn steps_up(&self, order: OrderTag, z: &WeylElt, j: usize) -> bool {
        matches!(self.compare_adjacent(order, z, j), Ok(AdjRel::WLess))
    }

    /// Lex-least reduced word of `π_j^{-1} w`, with `j` the Ω-class.
    pub fn reduced_word(&self, w: &WeylElt) -> (usize, Vec<usize>) {
        let j = self.omega_part(w);
        let mut v = self.mul(&self.inv(&self.pi(j)), w);
        let mut word = Vec::new();
        while !v.is_identity() {
            let i = (0..=self.n())
                .find(|&i| self.is_left_descent(&v, i))
                .expect("non-identity element of W^ad has a left descent");
            word.push(i);
            v = self.mul(&self.s(i), &v);
        }
        (j, word)
    }

    pub fn is_reduced(&self, word: &[usize]) -> bool {
        self.length_pos(&self.from_word(word)) == word.len() as i64
    }

    /// `x ≤⁺ w` by the right-descent recursion.
    pub fn bruhat_leq_positive(&self, x: &WeylElt, w: &WeylElt) -> bool {
        let (mut x, mut w) = (x.clone(), w.clone());
        loop {
            let lw = self.length_pos(&w);
            if lw == 0 {
                return x == w;
            }
            if self.length_pos(&x) > lw {
                return false;
            }
            let s = (0..=self.n()).find(|&i| self.is_right_descent(&w, i)).unwrap();
            let si = self.s(s);
            if self.is_right_descent(&x, s) {
                x = self.mul(&x, &si);
            }
            w = self.mul(&w, &si);
        }
    }

    /// Alcove of `w` lies in the dominant chamber modulo `δ`.
    pub fn is_dominant(&self, w: &WeylElt) -> bool {
        let h = (self.n() + 1) as i64;
        let p = Weight { delta: Q::zero(), omega: vec![1; self.n()], level: h };
        self.act(w, &p).omega.iter().all(|x| *x >= 0)
    }

    /// Orbit points reachable by words of length at most `radius`, each with a
    /// shortest witness.
    pub fn orbit(&self, lam: &Weight, radius: usize) -> Vec<(WeylElt, Weight)> {
        let mut seen: BTreeMap<Weight, WeylElt> = BTreeMap::new();
        seen.insert(lam.clone(), self.identity());
        let mut frontier = vec![(self.identity(), lam.clone())];
        for _ in 0..radius {
            let mut next = Vec::new();
            for (w, mu) in &frontier {
                for i in 0..=self.n() {
                    let nu = self.reflect(i, mu);
                    if !seen.contains_key(&nu) {
                        let w2 = self.mul(&self.s(i), w);
                        seen.insert(nu.clone(), w2.clone());
                        next.push((w2, nu));
                    }
                }
            }
            frontier = next;
        }
        seen.into_iter().map(|(mu, w)| (w, mu)).collect()
    }

    pub fn orbit_csv(&self, pts: &[(WeylElt, Weight)]) -> String {
        let mut out = String::from("delta");
        for i in 1..=self.n() {
            let _ = write!(out, ",omega{i}");
        }
        out.push_str(",level,word\n");
        for (w, mu) in pts {
            let _ = write!(out, "{}", mu.delta);
            for c in &mu.omega {
                let _ = write!(out, ",{c}");
            }
            let _ = writeln!(out, ",{},{}", mu.level, self.word_string(w));
        }
        out
    }

    pub fn word_string(&self, w: &WeylElt) -> String {
        let (j, word) = self.reduced_word(w);
        let mut s = String::new();
        if j != 0 {
            let _ = write!(s, "pi{j}");
        }
        for i in word {
            let _ = write!(s, "s{i}");
        }
        if s.is_empty() {
            s.push('1');
        }
        s
    }

    /// Elements of `W^ad` with `ℓ⁺ ≤ max_len`.
    pub fn ball(&self, max_len: usize) -> Vec<WeylElt> {
        let mut seen: BTreeSet<WeylElt> = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(self.identity());
        queue.push_back((self.identity(), 0usize));
        let mut out = vec![self.identity()];
        while let Some((w, d)) = queue.pop_front() {
            if d == max_len {
                continue;
            }
            for i in 0..=self.n() {
                let ws = self.mul(&w, &self.s(i));
                if self.length_pos(&ws) as usize == d + 1 && seen.insert(ws.clone()) {
                    out.push(ws.clone());
                    queue.push_back((ws, d + 1));
                }
            }
        }
        out
    }

    /// Hasse diagram of adjacent covers `w → ws_j` (with `w < ws_j`) in a ball.
    pub fn hasse_dot(&self, order: OrderTag, max_len: usize) -> Result<String> {
        let elts = self.ball(max_len);
        let index: HashMap<&WeylElt, usize> = elts.iter().enumerate().map(|(k, w)| (w, k)).collect();
        let mut out = String::from("digraph hasse {\n  rankdir=BT;\n");
        for (k, w) in elts.iter().enumerate() {
            let _ = writeln!(
                out,
                "  n{k} [label=\"{}\\nl={}\"];",
                self.word_string(w),
                self.length(order, w)
            );
        }
        for (k, w) in elts.iter().enumerate() {
            for j in 0..=self.n() {
                let ws = self.mul(w, &self.s(j));
                if let Some(&k2) = index.get(&ws) {
                    if self.compare_adjacent(order, w, j)? == AdjRel::WLess {
                        let color = if j == 0 { "red" } else { "blue" };
                        let _ = writeln!(out, "  n{k} -> n{k2} [label=\"s{j}\", color={color}];");
                    }
                }
            }
        }
        out.push_str("}\n");
        Ok(out)
    }

    /// `t_{λ∨}` for a coroot vector (the `K` part is ignored).
    pub fn coroot_translation(&self, h: &CorootVec) -> WeylElt {
        self.translation(&self.data.coroot_to_weight(h).omega)
    }

    pub fn delta_free(w: &Weight) -> bool {
        w.delta.is_zero()
    }
}

pub fn permutations(k: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut cur: Vec<u8> = (0..k as u8).collect();
    heap_permute(k, &mut cur, &mut out);
    out.sort();
    out
}

fn heap_permute(k: usize, a: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
    if k <= 1 {
        out.push(a.clone());
        return;
    }
    for i in 0..k {
        heap_permute(k - 1, a, out);
        if k % 2 == 0 {
            a.swap(i, k - 1);
        } else {
            a.swap(0, k - 1);
        }
    }
}
