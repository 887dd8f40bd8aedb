//! Finite sums `Σ c_μ X^μ` over the affine weight lattice.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::coeff::{CoeffRF, Var};
use super::poly::Poly;
use crate::error::{Error, Result};
use crate::rootdata::Weight;

#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct XPoly {
    terms: BTreeMap<Weight, CoeffRF>,
}

impl XPoly {
    pub fn zero() -> Self {
        XPoly::default()
    }

    pub fn monomial(w: Weight) -> Self {
        XPoly::term(w, CoeffRF::one())
    }

    pub fn term(w: Weight, c: CoeffRF) -> Self {
        let mut p = XPoly::zero();
        p.add_term(w, c);
        p
    }

    /// The unit `X^0 = 𝟏` of rank `n`.
    pub fn one(n: usize) -> Self {
        XPoly::monomial(Weight::zero(n))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, &CoeffRF)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Weight) -> CoeffRF {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, w: Weight, c: CoeffRF) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(e) => {
                let s = &*e + &c;
                if s.is_zero() {
                    self.terms.remove(&w);
                } else {
                    *e = s;
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn add_assign_ref(&mut self, o: &XPoly) {
        for (w, c) in &o.terms {
            self.add_term(w.clone(), c.clone());
        }
    }

    pub fn scale(&self, c: &CoeffRF) -> XPoly {
        if c.is_zero() {
            return XPoly::zero();
        }
        XPoly { terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect() }
    }

    pub fn scale_poly(&self, p: &Poly) -> XPoly {
        if p.is_zero() {
            return XPoly::zero();
        }
        XPoly { terms: self.terms.iter().map(|(w, x)| (w.clone(), x.mul_poly(p))).collect() }
    }

    /// Multiplication by `X^λ`.
    pub fn shift(&self, lam: &Weight) -> XPoly {
        XPoly { terms: self.terms.iter().map(|(w, c)| (w + lam, c.clone())).collect() }
    }

    pub fn map_coeffs<F: FnMut(&CoeffRF) -> Result<CoeffRF>>(&self, mut f: F) -> Result<XPoly> {
        let mut out = XPoly::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c)?);
        }
        Ok(out)
    }

    /// `X^δ ↦ q` (DAHA convention).
    pub fn daha_q(&self) -> Result<XPoly> {
        let mut out = XPoly::zero();
        for (w, c) in &self.terms {
            let m = w.delta_int().ok_or_else(|| Error::Window(format!("non-integral δ in {w}")))?;
            out.add_term(w.without_delta(), c * &CoeffRF::monomial(m as i32, 0));
        }
        Ok(out)
    }

    pub fn subs_q_inv(&self) -> XPoly {
        XPoly { terms: self.terms.iter().map(|(w, c)| (w.clone(), c.subs_q_inv())).collect() }
    }

    /// Coefficientwise limit; the result has Laurent-polynomial coefficients.
    pub fn limit(&self, var: Var, at_infinity: bool) -> Result<XPoly> {
        self.map_coeffs(|c| Ok(CoeffRF::from_poly(c.limit(var, at_infinity)?)))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let items: Vec<XTermJson> = self
            .terms
            .iter()
            .map(|(w, c)| XTermJson {
                delta: w.delta.to_string(),
                omega: w.omega.clone(),
                level: w.level,
                num: key_map_json(c.num()),
                den: key_map_json(c.den()),
            })
            .collect();
        serde_json::to_value(items).expect("serializable")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<XPoly> {
        let items: Vec<XTermJson> =
            serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let mut out = XPoly::zero();
        for it in items {
            let delta = it.delta.parse().map_err(|_| Error::Parse(format!("delta {:?}", it.delta)))?;
            let w = Weight { delta, omega: it.omega, level: it.level };
            let num = parse_key_map(&it.num)?;
            let den = parse_key_map(&it.den)?;
            out.add_term(w, CoeffRF::new(num, den));
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct XTermJson {
    delta: String,
    omega: Vec<i64>,
    level: i64,
    num: BTreeMap<String, serde_json::Value>,
    den: BTreeMap<String, serde_json::Value>,
}

fn key_map_json(p: &Poly) -> BTreeMap<String, serde_json::Value> {
    p.to_key_map()
        .into_iter()
        .map(|(k, c)| {
            let v = match i64::try_from(&c) {
                Ok(x) => serde_json::Value::from(x),
                Err(_) => serde_json::Value::from(c.to_string()),
            };
            (k, v)
        })
        .collect()
}

fn parse_key_map(m: &BTreeMap<String, serde_json::Value>) -> Result<Poly> {
    let mut out = BTreeMap::new();
    for (k, v) in m {
        let c: BigInt = match v {
            serde_json::Value::Number(n) => {
                BigInt::from(n.as_i64().ok_or_else(|| Error::Parse(format!("coefficient {n}")))?)
            }
            serde_json::Value::String(s) => s.parse().map_err(|_| Error::Parse(format!("coefficient {s}")))?,
            _ => return Err(Error::Parse("coefficient must be an integer".into())),
        };
        out.insert(k.clone(), c);
    }
    Poly::from_key_map(&out).ok_or_else(|| Error::Parse("bad monomial key".into()))
}

impl Add for &XPoly {
    type Output = XPoly;
    fn add(self, o: &XPoly) -> XPoly {
        let mut out = self.clone();
        out.add_assign_ref(o);
        out
    }
}

impl Sub for &XPoly {
    type Output = XPoly;
    fn sub(self, o: &XPoly) -> XPoly {
        self + &(-o)
    }
}

impl Neg for &XPoly {
    type Output = XPoly;
    fn neg(self) -> XPoly {
        XPoly { terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect() }
    }
}

impl Mul for &XPoly {
    type Output = XPoly;
    fn mul(self, o: &XPoly) -> XPoly {
        let mut out = XPoly::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &o.terms {
                out.add_term(w1 + w2, c1 * c2);
            }
        }
        out
    }
}

pub fn xpoly_mul(f: &XPoly, g: &XPoly) -> XPoly {
    f * g
}

impl fmt::Display for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (w, c) in self.terms.iter().rev() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let x = if w.is_zero() { "1".to_string() } else { format!("X^[{w}]") };
            if c.is_one() {
                f.write_str(&x)?;
            } else {
                write!(f, "({c})*{x}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl XPoly {
    /// All coefficients are Laurent polynomials (no denominators).
    pub fn has_poly_coeffs(&self) -> bool {
        self.terms.values().all(|c| c.is_poly())
    }
}
