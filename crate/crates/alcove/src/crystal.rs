//! Level-zero crystal graphs on a δ-window: fundamental atlases, tensor
//! products, components, Demazure-type closures, finite quotients and
//! characters.
//!
//! A vertex is a tuple of atlas names with one δ-shift per tensor factor.
//! `f̃_i` tables are stored per vertex; an arrow whose target falls outside
//! the window is recorded as cut, and tensor vertices whose string lengths
//! depend on a cut arrow are marked as boundary and get no arrow.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootdata::{AffineCartanData, Weight};
use crate::xring::{CoeffRF, FormalSeries, XPoly};

const A1_OMEGA1: &str = include_str!("../fixtures/a1_omega1.json");
const A2_OMEGA1: &str = include_str!("../fixtures/a2_omega1.json");
const A2_OMEGA2: &str = include_str!("../fixtures/a2_omega2.json");

#[derive(Clone, Debug, Deserialize)]
pub struct AtlasPoint {
    pub name: String,
    pub omega: Vec<i64>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct AtlasArrow {
    pub from: String,
    pub i: usize,
    pub to: String,
    pub delta_drop: i64,
}

/// Transcribed finite data of a fundamental level-zero crystal.
#[derive(Clone, Debug, Deserialize)]
pub struct Atlas {
    #[serde(rename = "type")]
    pub type_label: String,
    pub rank: usize,
    pub node: usize,
    pub orbit: Vec<AtlasPoint>,
    pub arrows: Vec<AtlasArrow>,
}

pub fn atlas(data: &AffineCartanData, i: usize) -> Result<Atlas> {
    let src = match (data.n(), i) {
        (1, 1) => A1_OMEGA1,
        (2, 1) => A2_OMEGA1,
        (2, 2) => A2_OMEGA2,
        (n, i) => {
            return Err(Error::Unsupported(format!(
                "fundamental crystal atlas only for A1 (i = 1) and A2 (i = 1, 2); got rank {n}, i = {i}"
            )))
        }
    };
    serde_json::from_str(src).map_err(|e| Error::Crystal(format!("bad atlas fixture: {e}")))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Vertex {
    pub names: Vec<String>,
    pub shifts: Vec<i64>,
    pub weight: Weight,
}

impl Vertex {
    pub fn display(&self) -> String {
        self.names
            .iter()
            .zip(&self.shifts)
            .map(|(n, k)| match k {
                0 => n.clone(),
                k => format!("{n}{k:+}δ"),
            })
            .collect::<Vec<_>>()
            .join("⊗")
    }

    pub fn delta(&self) -> i64 {
        self.weight.delta_int().expect("integral δ")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
enum Slot {
    #[default]
    None,
    To(usize),
    Cut,
}

#[derive(Clone, Debug)]
pub struct CrystalGraph {
    pub n: usize,
    pub vertices: Vec<Vertex>,
    f: Vec<Vec<Slot>>,
    e: Vec<Vec<Slot>>,
    pub boundary: BTreeSet<usize>,
    index: HashMap<(Vec<String>, Vec<i64>), usize>,
}

impl CrystalGraph {
    fn with_vertices(n: usize, vertices: Vec<Vertex>) -> Self {
        let index = vertices.iter().enumerate().map(|(k, v)| ((v.names.clone(), v.shifts.clone()), k)).collect();
        let len = vertices.len();
        CrystalGraph {
            n,
            vertices,
            f: vec![vec![Slot::None; n + 1]; len],
            e: vec![vec![Slot::None; n + 1]; len],
            boundary: BTreeSet::new(),
            index,
        }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn find(&self, names: &[&str], shifts: &[i64]) -> Option<usize> {
        let key = (names.iter().map(|s| s.to_string()).collect(), shifts.to_vec());
        self.index.get(&key).copied()
    }

    pub fn f(&self, v: usize, i: usize) -> Option<usize> {
        match self.f[v][i] {
            Slot::To(w) => Some(w),
            _ => None,
        }
    }

    pub fn e(&self, v: usize, i: usize) -> Option<usize> {
        match self.e[v][i] {
            Slot::To(w) => Some(w),
            _ => None,
        }
    }

    /// `(source, i, target)` for every `f̃_i` arrow.
    pub fn edges(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for v in 0..self.len() {
            for i in 0..=self.n {
                if let Slot::To(w) = self.f[v][i] {
                    out.push((v, i, w));
                }
            }
        }
        out
    }

    /// `(d_i⁺, exact)`: length of the `f̃_i`-string from `v`.
    fn d_plus(&self, v: usize, i: usize) -> (usize, bool) {
        let (mut d, mut v) = (0, v);
        loop {
            match self.f[v][i] {
                Slot::To(w) => {
                    d += 1;
                    v = w;
                }
                Slot::None => return (d, true),
                Slot::Cut => return (d, false),
            }
        }
    }

    fn d_minus(&self, v: usize, i: usize) -> (usize, bool) {
        let (mut d, mut v) = (0, v);
        loop {
            match self.e[v][i] {
                Slot::To(w) => {
                    d += 1;
                    v = w;
                }
                Slot::None => return (d, true),
                Slot::Cut => return (d, false),
            }
        }
    }

    fn set_f(&mut self, v: usize, i: usize, w: usize) {
        self.f[v][i] = Slot::To(w);
        self.e[w][i] = Slot::To(v);
    }

    pub fn dot(&self) -> String {
        let mut out = String::from("digraph crystal {\n");
        for (k, v) in self.vertices.iter().enumerate() {
            let shape = if self.boundary.contains(&k) { ", style=dashed" } else { "" };
            let _ = writeln!(out, "  v{k} [label=\"{}\\n{}\"{shape}];", v.display(), v.weight);
        }
        for (a, i, b) in self.edges() {
            let color = if i == 0 { "red" } else { "blue" };
            let _ = writeln!(out, "  v{a} -> v{b} [label=\"f~{i}\", color={color}];");
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let vs: Vec<_> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(k, v)| {
                serde_json::json!({
                    "id": k,
                    "name": v.display(),
                    "weight": v.weight,
                    "boundary": self.boundary.contains(&k),
                })
            })
            .collect();
        let es: Vec<_> = self.edges().into_iter().map(|(a, i, b)| serde_json::json!([a, i, b])).collect();
        serde_json::json!({ "vertices": vs, "edges": es })
    }

    /// Checks string shape, weight drops and `f̃`/`ẽ` adjointness.
    pub fn check(&self, data: &AffineCartanData) -> Result<()> {
        for v in 0..self.len() {
            for i in 0..=self.n {
                if let Slot::To(w) = self.f[v][i] {
                    if self.e[w][i] != Slot::To(v) {
                        return Err(Error::Crystal(format!("f̃_{i} and ẽ_{i} not adjoint at {}", self.vertices[v].display())));
                    }
                    let want = &self.vertices[v].weight - &data.simple_root(i);
                    if self.vertices[w].weight != want {
                        return Err(Error::Crystal(format!("f̃_{i} at {} does not drop α_{i}", self.vertices[v].display())));
                    }
                }
                if let Slot::To(w) = self.e[v][i] {
                    if self.f[w][i] != Slot::To(v) {
                        return Err(Error::Crystal(format!("ẽ_{i} and f̃_{i} not adjoint at {}", self.vertices[v].display())));
                    }
                }
            }
        }
        Ok(())
    }
}

/// `B(ω_i)` on the window `|k| ≤ window`.
pub fn fundamental_crystal(data: &AffineCartanData, i: usize, window: i64) -> Result<CrystalGraph> {
    if window < 0 {
        return Err(Error::Window("window must be nonnegative".into()));
    }
    let at = atlas(data, i)?;
    let n = data.n();
    let mut vs = Vec::new();
    for k in -window..=window {
        for p in &at.orbit {
            vs.push(Vertex { names: vec![p.name.clone()], shifts: vec![k], weight: Weight::new(k, p.omega.clone(), 0) });
        }
    }
    let mut g = CrystalGraph::with_vertices(n, vs);
    for k in -window..=window {
        for a in &at.arrows {
            let src = g.find(&[&a.from], &[k]).ok_or_else(|| Error::Crystal(format!("unknown atlas point {}", a.from)))?;
            match g.find(&[&a.to], &[k - a.delta_drop]) {
                Some(dst) => g.set_f(src, a.i, dst),
                None => {
                    g.f[src][a.i] = Slot::Cut;
                    g.boundary.insert(src);
                }
            }
        }
        for a in &at.arrows {
            if g.find(&[&a.from], &[k + a.delta_drop]).is_none() {
                let dst = g.find(&[&a.to], &[k]).unwrap();
                g.e[dst][a.i] = Slot::Cut;
                g.boundary.insert(dst);
            }
        }
    }
    Ok(g)
}

/// Tensor product with `f̃_i(p₁⊗p₂) = f̃_i p₁ ⊗ p₂` when `d_i⁺(p₁) > d_i⁻(p₂)`
/// and `p₁ ⊗ f̃_i p₂` otherwise; `ẽ_i` acts on `p₁` when `d_i⁺(p₁) ≥ d_i⁻(p₂)`.
pub fn tensor(c1: &CrystalGraph, c2: &CrystalGraph) -> Result<CrystalGraph> {
    if c1.n != c2.n {
        return Err(Error::RankMismatch { expected: c1.n, got: c2.n });
    }
    let n = c1.n;
    let mut vs = Vec::with_capacity(c1.len() * c2.len());
    for a in &c1.vertices {
        for b in &c2.vertices {
            let mut names = a.names.clone();
            names.extend(b.names.iter().cloned());
            let mut shifts = a.shifts.clone();
            shifts.extend(b.shifts.iter().copied());
            vs.push(Vertex { names, shifts, weight: &a.weight + &b.weight });
        }
    }
    let m = c2.len();
    let mut g = CrystalGraph::with_vertices(n, vs);
    for x in 0..c1.len() {
        for y in 0..m {
            let v = x * m + y;
            for i in 0..=n {
                let (dp, ok1) = c1.d_plus(x, i);
                let (dm, ok2) = c2.d_minus(y, i);
                if !(ok1 && ok2) {
                    g.boundary.insert(v);
                    g.f[v][i] = Slot::Cut;
                    g.e[v][i] = Slot::Cut;
                    continue;
                }
                let fs = if dp > dm {
                    match c1.f[x][i] {
                        Slot::To(x2) => Slot::To(x2 * m + y),
                        s => s,
                    }
                } else {
                    match c2.f[y][i] {
                        Slot::To(y2) => Slot::To(x * m + y2),
                        s => s,
                    }
                };
                let es = if dp >= dm {
                    match c1.e[x][i] {
                        Slot::To(x2) => Slot::To(x2 * m + y),
                        s => s,
                    }
                } else {
                    match c2.e[y][i] {
                        Slot::To(y2) => Slot::To(x * m + y2),
                        s => s,
                    }
                };
                if fs == Slot::Cut || es == Slot::Cut {
                    g.boundary.insert(v);
                }
                g.f[v][i] = fs;
                g.e[v][i] = es;
            }
        }
    }
    // A boundary vertex may have lost an arrow its neighbour still records.
    for v in 0..g.len() {
        for i in 0..=n {
            if let Slot::To(w) = g.f[v][i] {
                if g.e[w][i] != Slot::To(v) {
                    g.f[v][i] = Slot::Cut;
                    g.boundary.insert(v);
                    g.boundary.insert(w);
                }
            }
            if let Slot::To(w) = g.e[v][i] {
                if g.f[w][i] != Slot::To(v) {
                    g.e[v][i] = Slot::Cut;
                    g.boundary.insert(v);
                    g.boundary.insert(w);
                }
            }
        }
    }
    Ok(g)
}

fn induced(c: &CrystalGraph, keep: &[usize]) -> CrystalGraph {
    let pos: HashMap<usize, usize> = keep.iter().enumerate().map(|(k, &v)| (v, k)).collect();
    let mut g = CrystalGraph::with_vertices(c.n, keep.iter().map(|&v| c.vertices[v].clone()).collect());
    for (k, &v) in keep.iter().enumerate() {
        for i in 0..=c.n {
            g.f[k][i] = match c.f[v][i] {
                Slot::To(w) => pos.get(&w).map_or(Slot::Cut, |&w2| Slot::To(w2)),
                s => s,
            };
            g.e[k][i] = match c.e[v][i] {
                Slot::To(w) => pos.get(&w).map_or(Slot::Cut, |&w2| Slot::To(w2)),
                s => s,
            };
        }
        if c.boundary.contains(&v) {
            g.boundary.insert(k);
        }
    }
    g
}

/// Closure of `seed` under all `ẽ_i` and `f̃_i`.
pub fn component(c: &CrystalGraph, seed: usize) -> Result<CrystalGraph> {
    Ok(induced(c, &component_ids(c, seed)?))
}

pub fn component_ids(c: &CrystalGraph, seed: usize) -> Result<Vec<usize>> {
    if seed >= c.len() {
        return Err(Error::Crystal(format!("seed {seed} outside the window")));
    }
    let mut seen = BTreeSet::from([seed]);
    let mut queue = VecDeque::from([seed]);
    while let Some(v) = queue.pop_front() {
        for i in 0..=c.n {
            for w in [c.f(v, i), c.e(v, i)].into_iter().flatten() {
                if seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// All components, each as a sorted vertex list.
pub fn components(c: &CrystalGraph) -> Vec<Vec<usize>> {
    let mut done = vec![false; c.len()];
    let mut out = Vec::new();
    for v in 0..c.len() {
        if !done[v] {
            let ids = component_ids(c, v).expect("in range");
            ids.iter().for_each(|&w| done[w] = true);
            out.push(ids);
        }
    }
    out
}

/// Iterated full `f̃`-string closure along the reversed word.
pub fn demazure_subcrystal(c: &CrystalGraph, seed: usize, word: &[usize]) -> Result<CrystalGraph> {
    if seed >= c.len() {
        return Err(Error::Crystal(format!("seed {seed} outside the window")));
    }
    let mut set = BTreeSet::from([seed]);
    for &i in word.iter().rev() {
        let mut next = set.clone();
        for &v in &set {
            let mut w = v;
            while let Some(u) = c.f(w, i) {
                next.insert(u);
                w = u;
            }
        }
        set = next;
    }
    Ok(induced(c, &set.into_iter().collect::<Vec<_>>()))
}

/// `f̃`-reachable vertices from `seed`.
pub fn f_reachable(c: &CrystalGraph, seed: usize) -> Vec<usize> {
    let mut seen = BTreeSet::from([seed]);
    let mut queue = VecDeque::from([seed]);
    while let Some(v) = queue.pop_front() {
        for i in 0..=c.n {
            if let Some(w) = c.f(v, i) {
                if seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
    }
    seen.into_iter().collect()
}

/// A crystal modulo δ-shifts of its factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteQuotient {
    pub n: usize,
    pub classes: Vec<Vec<String>>,
    pub weights: Vec<Weight>,
    /// `(class, i, class, δ-drop)`.
    pub arrows: BTreeSet<(usize, usize, usize, i64)>,
}

pub fn finite_quotient(c: &CrystalGraph) -> Result<FiniteQuotient> {
    let mut class_of: BTreeMap<Vec<String>, usize> = BTreeMap::new();
    let mut classes = Vec::new();
    let mut weights = Vec::new();
    for v in &c.vertices {
        if !class_of.contains_key(&v.names) {
            class_of.insert(v.names.clone(), classes.len());
            classes.push(v.names.clone());
            weights.push(v.weight.without_delta());
        }
    }
    let mut pattern: Vec<Option<Vec<Option<(usize, i64)>>>> = vec![None; classes.len()];
    let mut arrows = BTreeSet::new();
    for (k, v) in c.vertices.iter().enumerate() {
        if c.boundary.contains(&k) {
            continue;
        }
        let cl = class_of[&v.names];
        if v.weight.without_delta() != weights[cl] {
            return Err(Error::Crystal(format!("class {} has two finite weights", v.display())));
        }
        let pat: Vec<Option<(usize, i64)>> = (0..=c.n)
            .map(|i| c.f(k, i).map(|w| (class_of[&c.vertices[w].names], v.delta() - c.vertices[w].delta())))
            .collect();
        match &pattern[cl] {
            None => {
                for (i, p) in pat.iter().enumerate() {
                    if let Some((t, d)) = p {
                        arrows.insert((cl, i, *t, *d));
                    }
                }
                pattern[cl] = Some(pat);
            }
            Some(old) if *old != pat => {
                return Err(Error::Crystal(format!("aperiodic: arrow pattern at {} differs from its class", v.display())))
            }
            Some(_) => {}
        }
    }
    Ok(FiniteQuotient { n: c.n, classes, weights, arrows })
}

impl FiniteQuotient {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn name(&self, k: usize) -> String {
        self.classes[k].join("⊗")
    }

    /// Ungraded character `Σ X^{wt}`.
    pub fn char(&self) -> XPoly {
        let mut f = XPoly::zero();
        for w in &self.weights {
            f.add_term(w.clone(), CoeffRF::one());
        }
        f
    }
}

/// Smallest positive δ-difference between two vertices of one class.
pub fn period(c: &CrystalGraph) -> Option<i64> {
    let mut by_class: BTreeMap<&Vec<String>, BTreeSet<i64>> = BTreeMap::new();
    for v in &c.vertices {
        by_class.entry(&v.names).or_default().insert(v.delta());
    }
    by_class
        .values()
        .flat_map(|ds| ds.iter().zip(ds.iter().skip(1)).map(|(a, b)| b - a))
        .filter(|d| *d > 0)
        .min()
}

/// Graded character of the finite quotient: each class contributes
/// `q^m X^{wt}` where `wt + mδ` is its highest `f̃`-reachable vertex from `seed`.
pub fn gchar_fin(c: &CrystalGraph, seed: usize) -> Result<XPoly> {
    let mut best: BTreeMap<&Vec<String>, (i64, &Weight)> = BTreeMap::new();
    for v in f_reachable(c, seed) {
        let x = &c.vertices[v];
        let d = x.delta();
        let e = best.entry(&x.names).or_insert((d, &x.weight));
        if d > e.0 {
            *e = (d, &x.weight);
        }
    }
    let q = finite_quotient(c)?;
    if best.len() != q.len() {
        return Err(Error::Crystal(format!(
            "only {} of {} classes are f̃-reachable from the seed in this window",
            best.len(),
            q.len()
        )));
    }
    let mut f = XPoly::zero();
    for (d, w) in best.values() {
        f.add_term(w.without_delta(), CoeffRF::monomial(*d as i32, 0));
    }
    Ok(f)
}

/// `Σ_v X^{wt(v)}` with `X^{mδ} ↦ q^{−m}`.
pub fn char(c: &CrystalGraph, window: i64) -> Result<FormalSeries> {
    let mut s = FormalSeries::new(window)?;
    for v in &c.vertices {
        s.add(-v.delta(), v.weight.without_delta(), BigInt::one());
    }
    Ok(s)
}

/// Signed position of a `B(ω₁)` vertex of `A₁` along its single `f̃`-chain:
/// `ω₁ + kδ ↦ −2k`, `−ω₁ + kδ ↦ 1 − 2k`.
pub fn a1_chain_position(name: &str, k: i64) -> i64 {
    if name.starts_with('-') {
        1 - 2 * k
    } else {
        -2 * k
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct B2Component {
    pub kappa: Option<i64>,
    pub size: usize,
    pub position_gaps: BTreeSet<i64>,
    pub boundary: usize,
    pub seed: String,
}

/// Components of `B(ω₁)⊗B(ω₁)` for `A₁` on a window, with the chain-position
/// gap `x − y` of their vertices. Component `κ ≥ 0` has gaps `{2κ, 2κ+1}` and
/// contains `p_{ω₁} ⊗ p_{ω₁+κδ}`.
pub fn b2omega_components(data: &AffineCartanData, window: i64) -> Result<Vec<B2Component>> {
    if data.n() != 1 {
        return Err(Error::Unsupported("B(2ω1) components are computed for A1 only".into()));
    }
    let b = fundamental_crystal(data, 1, window)?;
    let t = tensor(&b, &b)?;
    let mut out = Vec::new();
    for ids in components(&t) {
        let gaps: BTreeSet<i64> = ids
            .iter()
            .map(|&v| {
                let x = &t.vertices[v];
                a1_chain_position(&x.names[0], x.shifts[0]) - a1_chain_position(&x.names[1], x.shifts[1])
            })
            .collect();
        let lo = *gaps.iter().next().unwrap();
        let kappa = (lo % 2 == 0 && gaps.iter().all(|g| *g == lo || *g == lo + 1)).then_some(lo / 2);
        let seed = ids.iter().map(|&v| &t.vertices[v]).max_by_key(|x| (x.delta(), x.weight.omega.clone())).unwrap();
        out.push(B2Component {
            kappa,
            size: ids.len(),
            position_gaps: gaps,
            boundary: ids.iter().filter(|v| t.boundary.contains(v)).count(),
            seed: seed.display(),
        });
    }
    out.sort_by_key(|c| (c.kappa.is_none(), c.kappa, c.position_gaps.iter().next().copied()));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{build_affine_data, AffineType};

    #[test]
    fn a1_window_one() {
        let d = build_affine_data(AffineType::A, 1).unwrap();
        let b = fundamental_crystal(&d, 1, 1).unwrap();
        assert_eq!(b.len(), 6);
        assert_eq!(b.edges().len(), 5);
        b.check(&d).unwrap();
        let top = b.find(&["-ω1"], &[1]).unwrap();
        assert_eq!(b.f(top, 0), b.find(&["ω1"], &[0]));
    }

    #[test]
    fn a2_quotient_is_a_triangle() {
        let d = build_affine_data(AffineType::A, 2).unwrap();
        let b = fundamental_crystal(&d, 1, 2).unwrap();
        let q = finite_quotient(&b).unwrap();
        assert_eq!(q.len(), 3);
        assert_eq!(q.arrows.len(), 3);
        assert_eq!(q.arrows.iter().filter(|a| a.1 == 0 && a.3 == 1).count(), 1);
    }
}
