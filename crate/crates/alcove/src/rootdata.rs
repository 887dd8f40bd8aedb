//! Affine root data for untwisted simply-laced types.
//!
//! Only `A_n^{(1)}` is built. Weights are stored in the basis
//! `{δ, ω_1, …, ω_n, Λ_0}` dual to `{d, h_1, …, h_n, K}`.
//!
//! Matrix convention: `cartan[i][j] = α_j(h_i)`. For simply-laced types the
//! matrix is symmetric, so `pair(simple_root(i), coroot(j)) = cartan[j][i]`
//! holds for either reading; the tests pin the transpose form anyway.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Q = Ratio<i64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AffineType {
    A,
    D,
    E,
}

impl std::str::FromStr for AffineType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(AffineType::A),
            "D" | "d" => Ok(AffineType::D),
            "E" | "e" => Ok(AffineType::E),
            other => Err(Error::Unsupported(format!(
                "type {other}: only simply-laced untwisted types are modelled; \
                 non-simply-laced types need symmetrizers d_i != 1"
            ))),
        }
    }
}

impl fmt::Display for AffineType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            AffineType::A => "A",
            AffineType::D => "D",
            AffineType::E => "E",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineCartanData {
    #[serde(rename = "type")]
    pub type_label: AffineType,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    /// `a_1..a_n` with `θ = Σ a_i α_i`.
    pub marks: Vec<i64>,
    /// `a_1∨..a_n∨` with `h_θ = Σ a_i∨ h_i`.
    pub comarks: Vec<i64>,
    #[serde(skip)]
    pub omega_order: usize,
}

/// Affine weight in `(δ, ω, Λ_0)` coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    pub delta: Q,
    pub omega: Vec<i64>,
    pub level: i64,
}

/// Coroot vector `Σ k_i h_i + kK·K`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CorootVec {
    pub k: Vec<i64>,
    #[serde(rename = "kK")]
    pub k_k: i64,
}

pub fn build_affine_data(type_label: AffineType, n: usize) -> Result<AffineCartanData> {
    match type_label {
        AffineType::A => {}
        AffineType::D if n < 4 => {
            return Err(Error::Unsupported(format!(
                "unsupported rank {n} for type D (needs n >= 4)"
            )))
        }
        AffineType::E if !(6..=8).contains(&n) => {
            return Err(Error::Unsupported(format!(
                "unsupported rank {n} for type E (needs 6 <= n <= 8)"
            )))
        }
        _ => {
            return Err(Error::Unsupported(format!(
                "type {type_label}{n}: only A_n^(1) is implemented; the D/E cases and all \
                 non-simply-laced types (symmetrizers d_i != 1) are not built"
            )))
        }
    }
    if n == 0 {
        return Err(Error::Unsupported("rank must be at least 1".into()));
    }
    let size = n + 1;
    let mut cartan = vec![vec![0i64; size]; size];
    for (i, row) in cartan.iter_mut().enumerate() {
        row[i] = 2;
        if n == 1 {
            row[1 - i] = -2;
        } else {
            row[(i + 1) % size] = -1;
            row[(i + n) % size] = -1;
        }
    }
    let data = AffineCartanData {
        type_label,
        rank: n,
        cartan,
        marks: vec![1; n],
        comarks: vec![1; n],
        omega_order: size,
    };
    data.check_invariants()?;
    Ok(data)
}

impl AffineCartanData {
    pub fn n(&self) -> usize {
        self.rank
    }

    fn check_invariants(&self) -> Result<()> {
        let size = self.rank + 1;
        for i in 0..size {
            if self.cartan[i][i] != 2 {
                return Err(Error::Internal("cartan diagonal".into()));
            }
            for j in 0..size {
                if i != j && self.cartan[i][j] > 0 {
                    return Err(Error::Internal("cartan off-diagonal".into()));
                }
            }
        }
        for j in 0..size {
            let p = self.pair(&self.simple_root(0), &self.coroot(j));
            if p != Q::from(self.cartan[j][0]) {
                return Err(Error::Internal("row 0 disagrees with marks".into()));
            }
        }
        Ok(())
    }

    fn check_rank(&self, len: usize) -> Result<()> {
        if len != self.rank {
            Err(Error::RankMismatch { expected: self.rank, got: len })
        } else {
            Ok(())
        }
    }

    /// `⟨λ, h⟩`. The `d` component is not carried by coroot vectors.
    pub fn pair(&self, lambda: &Weight, h: &CorootVec) -> Q {
        debug_assert_eq!(lambda.omega.len(), h.k.len());
        let s: i64 = lambda.omega.iter().zip(&h.k).map(|(a, b)| a * b).sum();
        Q::from(s + lambda.level * h.k_k)
    }

    pub fn try_pair(&self, lambda: &Weight, h: &CorootVec) -> Result<Q> {
        self.check_rank(lambda.omega.len())?;
        self.check_rank(h.k.len())?;
        Ok(self.pair(lambda, h))
    }

    /// Integer pairing with `h_i` (for `i = 0`, `h_0 = K − h_θ`).
    pub fn pair_i(&self, lambda: &Weight, i: usize) -> i64 {
        if i == 0 {
            lambda.level - lambda.omega.iter().zip(&self.comarks).map(|(a, c)| a * c).sum::<i64>()
        } else {
            lambda.omega[i - 1]
        }
    }

    pub fn coroot(&self, i: usize) -> CorootVec {
        let n = self.rank;
        if i == 0 {
            CorootVec { k: self.comarks.iter().map(|c| -c).collect(), k_k: 1 }
        } else {
            let mut k = vec![0; n];
            k[i - 1] = 1;
            CorootVec { k, k_k: 0 }
        }
    }

    pub fn try_simple_root(&self, i: usize) -> Result<Weight> {
        if i > self.rank {
            return Err(Error::IndexOutOfRange { index: i, rank: self.rank });
        }
        Ok(self.simple_root(i))
    }

    /// `α_i` in ω-coordinates; `α_0 = δ − θ`.
    pub fn simple_root(&self, i: usize) -> Weight {
        let n = self.rank;
        if i == 0 {
            let th = self.theta();
            return Weight { delta: Q::one(), omega: th.omega.iter().map(|x| -x).collect(), level: 0 };
        }
        let omega = (1..=n).map(|j| self.cartan[j][i]).collect();
        Weight { delta: Q::zero(), omega, level: 0 }
    }

    pub fn theta(&self) -> Weight {
        let mut w = Weight::zero(self.rank);
        for (i, a) in self.marks.iter().enumerate() {
            w = &w + &(&self.simple_root(i + 1) * *a);
        }
        w
    }

    pub fn omega_weight(&self, i: usize) -> Weight {
        let mut w = Weight::zero(self.rank);
        w.omega[i - 1] = 1;
        w
    }

    pub fn lambda0(&self) -> Weight {
        Weight { delta: Q::zero(), omega: vec![0; self.rank], level: 1 }
    }

    pub fn delta(&self) -> Weight {
        Weight { delta: Q::one(), omega: vec![0; self.rank], level: 0 }
    }

    pub fn rho(&self) -> Weight {
        Weight { delta: Q::zero(), omega: vec![1; self.rank], level: 0 }
    }

    /// `(ω_i list, Λ_i list, ρ, 2ρ∨)`. `2ρ∨` is the sum of positive coroots in
    /// h-coordinates; `ρ∨` itself is only used through `⟨ρ, μ∨⟩`.
    pub fn fundamental_weights(&self) -> (Vec<Weight>, Vec<Weight>, Weight, CorootVec) {
        let n = self.rank;
        let omegas: Vec<Weight> = (1..=n).map(|i| self.omega_weight(i)).collect();
        let mut lambdas = vec![self.lambda0()];
        for (i, w) in omegas.iter().enumerate() {
            let mut l = w.clone();
            l.level = self.comarks[i];
            lambdas.push(l);
        }
        let two_rho_vee = CorootVec { k: (1..=n).map(|i| (i * (n + 1 - i)) as i64).collect(), k_k: 0 };
        (omegas, lambdas, self.rho(), two_rho_vee)
    }

    /// ε-coordinates `e_1..e_{n+1}` of a finite weight, normalized `e_{n+1} = 0`.
    pub fn to_eps(&self, omega: &[i64]) -> Vec<i64> {
        let n = self.rank;
        let mut e = vec![0; n + 1];
        for a in (0..n).rev() {
            e[a] = e[a + 1] + omega[a];
        }
        e
    }

    pub fn from_eps(&self, e: &[i64]) -> Vec<i64> {
        (0..self.rank).map(|i| e[i] - e[i + 1]).collect()
    }

    /// Normalized invariant form on finite weights, `(α|α) = 2`.
    pub fn form(&self, a: &[i64], b: &[i64]) -> Q {
        let (x, y) = (self.to_eps(a), self.to_eps(b));
        let n1 = (self.rank + 1) as i64;
        let dot: i64 = x.iter().zip(&y).map(|(p, q)| p * q).sum();
        let sx: i64 = x.iter().sum();
        let sy: i64 = y.iter().sum();
        Q::from(dot) - Q::new(sx * sy, n1)
    }

    /// Coefficients of a finite weight on simple roots, if it lies in the root lattice.
    pub fn simple_coeffs(&self, omega: &[i64]) -> Option<Vec<i64>> {
        let e = self.to_eps(omega);
        let n1 = (self.rank + 1) as i64;
        let total: i64 = e.iter().sum();
        let mut out = Vec::with_capacity(self.rank);
        let mut partial = 0;
        for (i, x) in e.iter().take(self.rank).enumerate() {
            partial += x;
            let num = partial * n1 - (i as i64 + 1) * total;
            if !num.is_multiple_of(&n1) {
                return None;
            }
            out.push(num / n1);
        }
        Some(out)
    }

    /// Finite weight `Σ k_i α_i` attached to a coroot vector (simply-laced
    /// identification); the `K` part is dropped.
    pub fn coroot_to_weight(&self, h: &CorootVec) -> Weight {
        let mut w = Weight::zero(self.rank);
        for (i, k) in h.k.iter().enumerate() {
            w = &w + &(&self.simple_root(i + 1) * *k);
        }
        w
    }

    pub fn weight_to_coroot(&self, w: &Weight) -> Option<CorootVec> {
        self.simple_coeffs(&w.omega).map(|k| CorootVec { k, k_k: 0 })
    }

    /// Class of a finite weight in `P/Q ≅ Z/(n+1)`.
    pub fn omega_class(&self, omega: &[i64]) -> usize {
        let n1 = (self.rank + 1) as i64;
        let s: i64 = omega.iter().enumerate().map(|(i, m)| (i as i64 + 1) * m).sum();
        s.rem_euclid(n1) as usize
    }

    pub fn parse_weight(&self, s: &str) -> Result<Weight> {
        Weight::parse(s, self.rank)
    }
}

impl Weight {
    pub fn zero(n: usize) -> Self {
        Weight { delta: Q::zero(), omega: vec![0; n], level: 0 }
    }

    pub fn fin(omega: Vec<i64>) -> Self {
        Weight { delta: Q::zero(), omega, level: 0 }
    }

    pub fn new(delta: i64, omega: Vec<i64>, level: i64) -> Self {
        Weight { delta: Q::from(delta), omega, level }
    }

    pub fn rank(&self) -> usize {
        self.omega.len()
    }

    pub fn is_zero(&self) -> bool {
        self.delta.is_zero() && self.level == 0 && self.omega.iter().all(|x| *x == 0)
    }

    pub fn without_delta(&self) -> Weight {
        Weight { delta: Q::zero(), omega: self.omega.clone(), level: self.level }
    }

    pub fn delta_int(&self) -> Option<i64> {
        if self.delta.is_integer() {
            Some(self.delta.to_integer())
        } else {
            None
        }
    }

    /// Parses `"a,b,..."` (ω-coordinates), or the long form
    /// `"<lev>Λ+<ω1>ω[,<ω2>...][+<d>δ]"`, e.g. `"2Λ+1ω"`.
    pub fn parse(s: &str, n: usize) -> Result<Weight> {
        let s = s.trim();
        let bad = || Error::Parse(format!("cannot parse weight {s:?}"));
        if !s.contains('Λ') && !s.contains('ω') && !s.contains('δ') && !s.contains('L') {
            let omega: Vec<i64> = s
                .split(|c| c == ',' || c == ' ')
                .filter(|t| !t.is_empty())
                .map(|t| t.trim().parse::<i64>().map_err(|_| bad()))
                .collect::<Result<_>>()?;
            if omega.len() != n {
                return Err(Error::RankMismatch { expected: n, got: omega.len() });
            }
            return Ok(Weight::fin(omega));
        }
        let mut w = Weight::zero(n);
        let norm = s.replace('L', "Λ").replace('w', "ω").replace('d', "δ");
        let mut rest = norm.as_str();
        while !rest.is_empty() {
            let end = rest.find(['Λ', 'ω', 'δ']).ok_or_else(bad)?;
            let sym = rest[end..].chars().next().ok_or_else(bad)?;
            let coeff = rest[..end].trim().trim_start_matches('+');
            rest = &rest[end + sym.len_utf8()..];
            match sym {
                'Λ' => w.level = parse_int(coeff).ok_or_else(bad)?,
                'δ' => {
                    let c = coeff.trim();
                    w.delta = if c.is_empty() || c == "-" {
                        Q::from(if c == "-" { -1 } else { 1 })
                    } else {
                        c.parse::<Q>().map_err(|_| bad())?
                    }
                }
                _ => {
                    let parts: Vec<&str> = coeff.split(',').collect();
                    if parts.len() == n {
                        for (i, p) in parts.iter().enumerate() {
                            w.omega[i] = parse_int(p).ok_or_else(bad)?;
                        }
                    } else if parts.len() == 1 && n >= 1 {
                        w.omega[0] = parse_int(parts[0]).ok_or_else(bad)?;
                    } else {
                        return Err(Error::RankMismatch { expected: n, got: parts.len() });
                    }
                }
            }
            rest = rest.trim_start();
            if rest.starts_with('+') {
                rest = &rest[1..];
            }
        }
        Ok(w)
    }
}

fn parse_int(s: &str) -> Option<i64> {
    let s = s.trim();
    match s {
        "" | "+" => Some(1),
        "-" => Some(-1),
        _ => s.parse().ok(),
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.delta.is_zero() {
            parts.push(format!("{}δ", self.delta));
        }
        for (i, c) in self.omega.iter().enumerate() {
            if *c != 0 {
                parts.push(format!("{c}ω{}", i + 1));
            }
        }
        if self.level != 0 {
            parts.push(format!("{}Λ0", self.level));
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join("+").replace("+-", "-"))
        }
    }
}

impl Serialize for Weight {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Weight", 3)?;
        st.serialize_field("delta", &self.delta.to_string())?;
        st.serialize_field("omega", &self.omega)?;
        st.serialize_field("level", &self.level)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            delta: serde_json::Value,
            omega: Vec<i64>,
            level: i64,
        }
        let r = Raw::deserialize(d)?;
        let delta = match &r.delta {
            serde_json::Value::String(s) => s.parse::<Q>().map_err(serde::de::Error::custom)?,
            serde_json::Value::Number(n) => {
                Q::from(n.as_i64().ok_or_else(|| serde::de::Error::custom("delta"))?)
            }
            _ => return Err(serde::de::Error::custom("delta must be a rational string")),
        };
        Ok(Weight { delta, omega: r.omega, level: r.level })
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, o: &Weight) -> Weight {
        Weight {
            delta: self.delta + o.delta,
            omega: self.omega.iter().zip(&o.omega).map(|(a, b)| a + b).collect(),
            level: self.level + o.level,
        }
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, o: &Weight) -> Weight {
        Weight {
            delta: self.delta - o.delta,
            omega: self.omega.iter().zip(&o.omega).map(|(a, b)| a - b).collect(),
            level: self.level - o.level,
        }
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight { delta: -self.delta, omega: self.omega.iter().map(|a| -a).collect(), level: -self.level }
    }
}

impl Mul<i64> for &Weight {
    type Output = Weight;
    fn mul(self, k: i64) -> Weight {
        Weight {
            delta: self.delta * k,
            omega: self.omega.iter().map(|a| a * k).collect(),
            level: self.level * k,
        }
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, o: Weight) -> Weight {
        &self + &o
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, o: Weight) -> Weight {
        &self - &o
    }
}
