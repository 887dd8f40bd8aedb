//! Formal series in `q` truncated to a window `[−D, D]`, with coefficients
//! that are finite integer sums of δ-free `X^μ`.
//!
//! Products truncate both operands to the window, multiply, and truncate again;
//! any dropped term sets `truncated`. Under `char_q` a weight `μ + mδ` lands on
//! `q^{−m}`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::poly::Poly;
use super::xpoly::XPoly;
use crate::error::{Error, Result};
use crate::rootdata::Weight;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FormalSeries {
    pub window: i64,
    /// q-exponent → (δ-free weight → coefficient).
    pub terms: BTreeMap<i64, BTreeMap<Weight, BigInt>>,
    pub truncated: bool,
}

impl FormalSeries {
    pub fn new(window: i64) -> Result<Self> {
        if window < 1 {
            return Err(Error::Window("window must be at least 1".into()));
        }
        Ok(FormalSeries { window, terms: BTreeMap::new(), truncated: false })
    }

    fn empty(window: i64) -> Self {
        FormalSeries { window, terms: BTreeMap::new(), truncated: false }
    }

    /// The scalar series `1`, attached to the weight `0` of the given rank and level.
    pub fn unit(window: i64, zero: Weight) -> Self {
        let mut s = FormalSeries::empty(window);
        s.add(0, zero, BigInt::one());
        s
    }

    pub fn add(&mut self, k: i64, w: Weight, c: BigInt) {
        if c.is_zero() {
            return;
        }
        if k.abs() > self.window {
            self.truncated = true;
            return;
        }
        let row = self.terms.entry(k).or_default();
        let e = row.entry(w.clone()).or_default();
        *e += c;
        if e.is_zero() {
            row.remove(&w);
            if row.is_empty() {
                self.terms.remove(&k);
            }
        }
    }

    pub fn coeff(&self, k: i64, w: &Weight) -> BigInt {
        self.terms.get(&k).and_then(|r| r.get(w)).cloned().unwrap_or_default()
    }

    /// `Σ_{k ∈ step·Z, |k| ≤ D} q^k` on the weight `zero`.
    pub fn zero_q(window: i64, step: i64, zero: Weight) -> Result<Self> {
        let mut s = FormalSeries::new(window)?;
        let step = step.abs().max(1);
        let mut k = -(window / step) * step;
        while k <= window {
            s.add(k, zero.clone(), BigInt::one());
            k += step;
        }
        s.truncated = true;
        Ok(s)
    }

    /// `1/(1 − q^k)` expanded in powers of `q^k`.
    pub fn geometric(window: i64, k: i64, zero: Weight) -> Result<Self> {
        if k == 0 {
            return Err(Error::Window("1/(1 - q^0) is undefined".into()));
        }
        let mut s = FormalSeries::new(window)?;
        let mut e = 0;
        while e.abs() <= window {
            s.add(e, zero.clone(), BigInt::one());
            e += k;
        }
        s.truncated = true;
        Ok(s)
    }

    pub fn from_qpoly(window: i64, p: &Poly, zero: Weight) -> Result<Self> {
        let mut s = FormalSeries::new(window)?;
        for ((a, b), c) in p.terms() {
            if *b != 0 {
                return Err(Error::Window(format!("coefficient {p} is not a polynomial in q alone")));
            }
            s.add(*a as i64, zero.clone(), c.clone());
        }
        Ok(s)
    }

    pub fn mul(&self, o: &FormalSeries) -> FormalSeries {
        let window = self.window.min(o.window);
        let mut out = FormalSeries::empty(window);
        out.truncated = self.truncated || o.truncated;
        for (k1, r1) in self.terms.range(-window..=window) {
            for (k2, r2) in o.terms.range(-window..=window) {
                for (w1, c1) in r1 {
                    for (w2, c2) in r2 {
                        out.add(k1 + k2, w1 + w2, c1 * c2);
                    }
                }
            }
        }
        out
    }

    pub fn plus(&self, o: &FormalSeries) -> FormalSeries {
        let mut out = self.clone();
        out.window = self.window.min(o.window);
        out.truncated |= o.truncated;
        for (k, r) in &o.terms {
            for (w, c) in r {
                out.add(*k, w.clone(), c.clone());
            }
        }
        out.terms.retain(|k, _| k.abs() <= out.window);
        out
    }

    pub fn shift_q(&self, e: i64) -> FormalSeries {
        let mut out = FormalSeries::empty(self.window);
        out.truncated = self.truncated;
        for (k, r) in &self.terms {
            for (w, c) in r {
                out.add(k + e, w.clone(), c.clone());
            }
        }
        out
    }

    pub fn subs_q_inv(&self) -> FormalSeries {
        let mut out = FormalSeries::empty(self.window);
        out.truncated = self.truncated;
        for (k, r) in &self.terms {
            for (w, c) in r {
                out.add(-k, w.clone(), c.clone());
            }
        }
        out
    }

    /// Multiply every coefficient by `X^λ`.
    pub fn shift_weight(&self, lam: &Weight) -> FormalSeries {
        let mut out = FormalSeries::empty(self.window);
        out.truncated = self.truncated;
        for (k, r) in &self.terms {
            for (w, c) in r {
                out.add(*k, w + lam, c.clone());
            }
        }
        out
    }

    /// Nonzero coefficients as `(q-exponent, weight, coefficient)`.
    pub fn entries(&self) -> Vec<(i64, Weight, BigInt)> {
        let mut v = Vec::new();
        for (k, r) in &self.terms {
            for (w, c) in r {
                v.push((*k, w.clone(), c.clone()));
            }
        }
        v
    }

    pub fn restrict(&self, window: i64) -> FormalSeries {
        let mut out = self.clone();
        out.window = window.min(self.window);
        if out.terms.keys().any(|k| k.abs() > out.window) {
            out.truncated = true;
        }
        let w = out.window;
        out.terms.retain(|k, _| k.abs() <= w);
        out
    }

    pub fn same_coefficients(&self, o: &FormalSeries) -> bool {
        self.terms == o.terms
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Entry {
            q: i64,
            omega: Vec<i64>,
            level: i64,
            coeff: String,
        }
        let entries: Vec<Entry> = self
            .entries()
            .into_iter()
            .map(|(k, w, c)| Entry { q: k, omega: w.omega, level: w.level, coeff: c.to_string() })
            .collect();
        serde_json::json!({ "window": self.window, "truncated": self.truncated, "terms": entries })
    }
}

/// `X^δ ↦ q^{−1}` into a windowed series (character convention).
pub fn char_q(f: &XPoly, window: i64) -> Result<FormalSeries> {
    let mut s = FormalSeries::new(window)?;
    for (w, c) in f.terms() {
        let m = w.delta_int().ok_or_else(|| Error::Window(format!("non-integral δ in {w}")))?;
        let p = c
            .as_poly()
            .ok_or_else(|| Error::Window(format!("coefficient {c} is not a Laurent polynomial")))?;
        for ((a, b), x) in p.terms() {
            if *b != 0 {
                return Err(Error::Window(format!("coefficient {c} depends on t")));
            }
            s.add(*a as i64 - m, w.without_delta(), x.clone());
        }
    }
    Ok(s)
}

/// `gchar(RG_λ) = Π_i 0_{q^{m_i}} Π_{k<m_i} 1/(1 − q^k)`.
pub fn gchar_rg(m: &[i64], window: i64, zero: Weight) -> Result<FormalSeries> {
    FormalSeries::new(window)?;
    let mut s = FormalSeries::unit(window, zero.clone());
    for &mi in m {
        if mi < 0 {
            return Err(Error::Window("m_i must be nonnegative".into()));
        }
        if mi == 0 {
            continue;
        }
        s = s.mul(&FormalSeries::zero_q(window, mi, zero.clone())?);
        for k in 1..mi {
            s = s.mul(&FormalSeries::geometric(window, k, zero.clone())?);
        }
    }
    Ok(s)
}

/// `gchar(RG_λ⁺) = Π_i Π_{k ≤ m_i} 1/(1 − q^k)`.
pub fn gchar_rg_plus(m: &[i64], window: i64, zero: Weight) -> Result<FormalSeries> {
    FormalSeries::new(window)?;
    let mut s = FormalSeries::unit(window, zero.clone());
    for &mi in m {
        for k in 1..=mi {
            s = s.mul(&FormalSeries::geometric(window, k, zero.clone())?);
        }
    }
    Ok(s)
}

impl fmt::Display for FormalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, r) in &self.terms {
            for (w, c) in r {
                if !first {
                    f.write_str(if c.is_negative() { " - " } else { " + " })?;
                } else if c.is_negative() {
                    f.write_str("-")?;
                }
                first = false;
                let abs = c.abs();
                let mut parts = Vec::new();
                if !abs.is_one() {
                    parts.push(abs.to_string());
                }
                if *k != 0 {
                    parts.push(if *k == 1 { "q".into() } else { format!("q^{k}") });
                }
                if !w.is_zero() {
                    parts.push(format!("X^[{w}]"));
                }
                if parts.is_empty() {
                    parts.push("1".into());
                }
                f.write_str(&parts.join("*"))?;
            }
        }
        if self.truncated {
            write!(f, " + O(|q|>{})", self.window)?;
        }
        Ok(())
    }
}
