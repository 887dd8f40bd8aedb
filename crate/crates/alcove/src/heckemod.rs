//! Right actions of the affine Hecke algebra on the double-coset bases
//! `T_w`, `X^w`, `L^w`, and point counts of labeled walks over `F_q`.
//!
//! A labeled walk of color blue, red or green is driven by the positive,
//! level-zero or negative order. A step that goes up in its order is a
//! forward crossing with label space `k` (size `q`). A step that would go down
//! is either a backward crossing labeled `0` (size 1) or a fold labeled by
//! `k^×` (size `q − 1`).
//!
//! The module action weights the same three cases by `1`, `q` and `q − 1`, so
//! the walk count at `v` equals `q^{ℓ(v) − ℓ(1)}` times the module coefficient,
//! with `ℓ` the length function of the order.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::par::{self, Exec};
use crate::weyl::{AdjRel, AffineWeyl, OrderTag, WeylElt};
use crate::xring::Poly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Basis {
    T,
    X,
    L,
}

impl Basis {
    pub fn order(self) -> OrderTag {
        match self {
            Basis::T => OrderTag::Positive,
            Basis::X => OrderTag::Zero,
            Basis::L => OrderTag::Negative,
        }
    }

    pub fn color(self) -> Color {
        match self {
            Basis::T => Color::Blue,
            Basis::X => Color::Red,
            Basis::L => Color::Green,
        }
    }
}

impl FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "T" | "t" => Ok(Basis::T),
            "X" | "x" => Ok(Basis::X),
            "L" | "l" => Ok(Basis::L),
            _ => Err(Error::Parse(format!("unknown basis {s:?}"))),
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Blue,
    Red,
    Green,
}

impl Color {
    pub fn order(self) -> OrderTag {
        match self {
            Color::Blue => OrderTag::Positive,
            Color::Red => OrderTag::Zero,
            Color::Green => OrderTag::Negative,
        }
    }

    pub fn basis(self) -> Basis {
        match self {
            Color::Blue => Basis::T,
            Color::Red => Basis::X,
            Color::Green => Basis::L,
        }
    }
}

impl FromStr for Color {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "blue" => Ok(Color::Blue),
            "red" => Ok(Color::Red),
            "green" => Ok(Color::Green),
            _ => Err(Error::Parse(format!("unknown color {s:?}"))),
        }
    }
}

/// Element of `C(I^±\G/I⁺)` or `C(I^0\G/I⁺)` with coefficients in `Z[q^{±1}]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleElt {
    pub basis: Basis,
    terms: BTreeMap<WeylElt, Poly>,
}

impl ModuleElt {
    pub fn zero(basis: Basis) -> Self {
        ModuleElt { basis, terms: BTreeMap::new() }
    }

    pub fn basis_elt(basis: Basis, w: WeylElt) -> Self {
        let mut e = ModuleElt::zero(basis);
        e.add_term(w, &Poly::one());
        e
    }

    pub fn add_term(&mut self, w: WeylElt, c: &Poly) {
        let slot = self.terms.entry(w.clone()).or_insert_with(Poly::zero);
        slot.add_assign_ref(c);
        if slot.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn terms(&self) -> &BTreeMap<WeylElt, Poly> {
        &self.terms
    }

    pub fn coeff(&self, w: &WeylElt) -> Poly {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Poly) -> Self {
        let mut out = ModuleElt::zero(self.basis);
        for (w, p) in &self.terms {
            out.add_term(w.clone(), &(p * c));
        }
        out
    }

    pub fn add(&self, o: &ModuleElt) -> Self {
        assert_eq!(self.basis, o.basis, "mixed bases");
        let mut out = self.clone();
        for (w, p) in &o.terms {
            out.add_term(w.clone(), p);
        }
        out
    }

    pub fn to_json(&self, g: &AffineWeyl) -> serde_json::Value {
        let terms: serde_json::Map<String, serde_json::Value> =
            self.terms.iter().map(|(w, p)| (g.word_string(w), serde_json::Value::String(q_string(p)))).collect();
        serde_json::json!({ "basis": self.basis, "terms": terms })
    }
}

/// `elt · T_{s_j}`.
pub fn act(g: &AffineWeyl, elt: &ModuleElt, j: usize) -> Result<ModuleElt> {
    let order = elt.basis.order();
    let s = g.s(j);
    let q = Poly::q();
    let qm1 = &q - &Poly::one();
    let mut out = ModuleElt::zero(elt.basis);
    for (w, c) in &elt.terms {
        let ws = g.mul(w, &s);
        match g.compare_adjacent(order, w, j)? {
            AdjRel::WLess => out.add_term(ws, c),
            AdjRel::WGreater => {
                out.add_term(ws, &(c * &q));
                out.add_term(w.clone(), &(c * &qm1));
            }
        }
    }
    Ok(out)
}

/// `elt · T_{s_{i_1}} ⋯ T_{s_{i_ℓ}}`.
pub fn act_word(g: &AffineWeyl, elt: &ModuleElt, word: &[usize]) -> Result<ModuleElt> {
    word.iter().try_fold(elt.clone(), |e, &j| act(g, &e, j))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LabeledKind {
    Forward,
    Backward,
    Fold,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LabelSpace {
    /// All of `k`.
    Field,
    /// `{0}`.
    Zero,
    /// `k^×`.
    Units,
}

impl LabelSpace {
    pub fn size(self) -> Poly {
        match self {
            LabelSpace::Field => Poly::q(),
            LabelSpace::Zero => Poly::one(),
            LabelSpace::Units => &Poly::q() - &Poly::one(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LabeledStep {
    pub index: usize,
    pub kind: LabeledKind,
    pub space: LabelSpace,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledWalk {
    pub color: Color,
    pub steps: Vec<LabeledStep>,
    pub end: WeylElt,
    pub count: Poly,
}

/// All step-kind patterns of the given color along `word`, starting at `1`.
pub fn labeled_walks(g: &AffineWeyl, color: Color, word: &[usize], bound: usize) -> Result<Vec<LabeledWalk>> {
    check_word(g, word, bound)?;
    let order = color.order();
    let mut out = Vec::new();
    let mut stack = vec![LabeledWalk { color, steps: Vec::new(), end: g.identity(), count: Poly::one() }];
    while let Some(w) = stack.pop() {
        let k = w.steps.len();
        if k == word.len() {
            out.push(w);
            continue;
        }
        let i = word[k];
        let up = match g.compare_adjacent(order, &w.end, i)? {
            AdjRel::WLess => true,
            AdjRel::WGreater => false,
        };
        let crossed = g.mul(&w.end, &g.s(i));
        let mut push = |kind, space: LabelSpace, end: WeylElt| {
            let mut steps = w.steps.clone();
            steps.push(LabeledStep { index: i, kind, space });
            stack.push(LabeledWalk { color, steps, end, count: &w.count * &space.size() });
        };
        if up {
            push(LabeledKind::Forward, LabelSpace::Field, crossed);
        } else {
            push(LabeledKind::Fold, LabelSpace::Units, w.end.clone());
            push(LabeledKind::Backward, LabelSpace::Zero, crossed);
        }
    }
    Ok(out)
}

/// Point counts per endpoint: `v ↦ #(I^∗ v I⁺ ∩ I⁺ w I⁺)/I⁺` as a polynomial in `q`.
pub fn enumerate_labeled(
    g: &AffineWeyl,
    color: Color,
    word: &[usize],
    bound: usize,
) -> Result<BTreeMap<WeylElt, Poly>> {
    let mut out: BTreeMap<WeylElt, Poly> = BTreeMap::new();
    for w in labeled_walks(g, color, word, bound)? {
        out.entry(w.end).or_default().add_assign_ref(&w.count);
    }
    out.retain(|_, p| !p.is_zero());
    Ok(out)
}

/// Counts for a batch of words, one per entry.
pub fn enumerate_batch(
    g: &AffineWeyl,
    color: Color,
    words: &[Vec<usize>],
    bound: usize,
    exec: Exec,
) -> Vec<Result<BTreeMap<WeylElt, Poly>>> {
    par::map(exec, words, |w| enumerate_labeled(g, color, w, bound))
}

fn check_word(g: &AffineWeyl, word: &[usize], bound: usize) -> Result<()> {
    if word.len() > bound {
        return Err(Error::WalkTooLong { len: word.len(), bound });
    }
    if let Some(&i) = word.iter().find(|&&i| i > g.n()) {
        return Err(Error::IndexOutOfRange { index: i, rank: g.n() });
    }
    if !g.is_reduced(word) {
        return Err(Error::NotReduced(word.to_vec()));
    }
    Ok(())
}

#[derive(Clone, Debug, Serialize)]
pub struct CrosscheckEntry {
    pub end: String,
    pub walks: String,
    pub module: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CrosscheckReport {
    pub color: Color,
    pub basis: Basis,
    pub word: Vec<usize>,
    pub entries: Vec<CrosscheckEntry>,
    pub mismatches: Vec<CrosscheckEntry>,
}

impl CrosscheckReport {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares walk counts with `b^1 · T_{s_{i_1}} ⋯ T_{s_{i_ℓ}}` after the
/// `q^{ℓ(v) − ℓ(1)}` rescaling.
pub fn crosscheck(g: &AffineWeyl, color: Color, word: &[usize]) -> Result<CrosscheckReport> {
    check_word(g, word, 8)?;
    let basis = color.basis();
    let order = color.order();
    let counts = enumerate_labeled(g, color, word, 8)?;
    let module = act_word(g, &ModuleElt::basis_elt(basis, g.identity()), word)?;
    let base = g.length(order, &g.identity());
    let mut ends: Vec<&WeylElt> = counts.keys().chain(module.terms.keys()).collect();
    ends.sort();
    ends.dedup();
    let mut report = CrosscheckReport { color, basis, word: word.to_vec(), entries: Vec::new(), mismatches: Vec::new() };
    for v in ends {
        let lhs = counts.get(v).cloned().unwrap_or_default();
        let shift = (g.length(order, v) - base) as i32;
        let rhs = module.coeff(v).shift(shift, 0);
        let e = CrosscheckEntry { end: g.word_string(v), walks: q_string(&lhs), module: q_string(&rhs) };
        if lhs != rhs {
            report.mismatches.push(e.clone());
        }
        report.entries.push(e);
    }
    Ok(report)
}

pub fn crosscheck_x(g: &AffineWeyl, word: &[usize]) -> Result<CrosscheckReport> {
    crosscheck(g, Color::Red, word)
}

pub fn crosscheck_l(g: &AffineWeyl, word: &[usize]) -> Result<CrosscheckReport> {
    crosscheck(g, Color::Green, word)
}

pub fn crosscheck_t(g: &AffineWeyl, word: &[usize]) -> Result<CrosscheckReport> {
    crosscheck(g, Color::Blue, word)
}

/// Sum of the coefficients at an integer `q`.
pub fn mass(counts: &BTreeMap<WeylElt, Poly>, q: i64) -> BigInt {
    counts.values().fold(BigInt::from(0), |acc, p| {
        let (n, d) = p.eval(q, 1);
        acc + n / d
    })
}

/// Polynomial in `q` alone, printed with `q` as the variable.
pub fn q_string(p: &Poly) -> String {
    format!("{p}")
}
