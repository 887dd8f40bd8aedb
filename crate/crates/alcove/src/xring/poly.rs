//! Laurent polynomials in `(q, v)` over `Z`, plus a primitive-PRS gcd.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Exponent pair `(q, v)`.
pub type Mono = (i32, i32);

#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Poly {
    terms: BTreeMap<Mono, BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Poly::monomial(BigInt::from(c), 0, 0)
    }

    pub fn monomial(c: BigInt, a: i32, b: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((a, b), c);
        }
        Poly { terms }
    }

    pub fn q_pow(a: i32) -> Self {
        Poly::monomial(BigInt::one(), a, 0)
    }

    pub fn v_pow(b: i32) -> Self {
        Poly::monomial(BigInt::one(), 0, b)
    }

    pub fn q() -> Self {
        Poly::q_pow(1)
    }

    pub fn v() -> Self {
        Poly::v_pow(1)
    }

    pub fn t() -> Self {
        Poly::v_pow(2)
    }

    pub fn from_terms<I: IntoIterator<Item = (Mono, BigInt)>>(it: I) -> Self {
        let mut p = Poly::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(|c| c.is_one())
    }

    pub fn as_monomial(&self) -> Option<(&BigInt, Mono)> {
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            Some((c, *m))
        } else {
            None
        }
    }

    pub fn coeff(&self, m: Mono) -> BigInt {
        self.terms.get(&m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: Mono, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add_assign_ref(&mut self, o: &Poly) {
        for (m, c) in &o.terms {
            self.add_term(*m, c.clone());
        }
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect() }
    }

    pub fn div_scalar_exact(&self, c: &BigInt) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, x)| (*m, x / c)).collect() }
    }

    pub fn shift(&self, a: i32, b: i32) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, x)| ((m.0 + a, m.1 + b), x.clone())).collect() }
    }

    pub fn min_exps(&self) -> Option<Mono> {
        let a = self.terms.keys().map(|m| m.0).min()?;
        let b = self.terms.keys().map(|m| m.1).min()?;
        Some((a, b))
    }

    pub fn max_exps(&self) -> Option<Mono> {
        let a = self.terms.keys().map(|m| m.0).max()?;
        let b = self.terms.keys().map(|m| m.1).max()?;
        Some((a, b))
    }

    pub fn content(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Leading term under graded-lex order on `(q, v)` exponents.
    pub fn leading(&self) -> Option<(Mono, &BigInt)> {
        self.terms.iter().max_by_key(|(m, _)| (m.0 + m.1, m.0, m.1)).map(|(m, c)| (*m, c))
    }

    pub fn subs_q_inv(&self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, x)| ((-m.0, m.1), x.clone())).collect() }
    }

    pub fn subs_v_inv(&self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, x)| ((m.0, -m.1), x.clone())).collect() }
    }

    /// Coefficient of `q^e`, as a polynomial in `v` (q-exponent 0).
    pub fn q_slice(&self, e: i32) -> Poly {
        Poly { terms: self.terms.iter().filter(|(m, _)| m.0 == e).map(|(m, x)| ((0, m.1), x.clone())).collect() }
    }

    pub fn v_slice(&self, e: i32) -> Poly {
        Poly { terms: self.terms.iter().filter(|(m, _)| m.1 == e).map(|(m, x)| ((m.0, 0), x.clone())).collect() }
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut out = Poly::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Value at integers `q, v` (both must be nonzero when negative
    /// exponents occur); exact rational result returned as `(num, den)`.
    pub fn eval(&self, q: i64, v: i64) -> (BigInt, BigInt) {
        let (mut num, mut den) = (BigInt::zero(), BigInt::one());
        for ((a, b), c) in &self.terms {
            let (mut tn, mut td) = (c.clone(), BigInt::one());
            let qb = BigInt::from(q);
            let vb = BigInt::from(v);
            if *a >= 0 {
                tn *= num_traits::pow(qb, *a as usize);
            } else {
                td *= num_traits::pow(qb, (-*a) as usize);
            }
            if *b >= 0 {
                tn *= num_traits::pow(vb, *b as usize);
            } else {
                td *= num_traits::pow(vb, (-*b) as usize);
            }
            num = num * &td + tn * &den;
            den *= td;
        }
        let g = num.gcd(&den);
        if !g.is_zero() && !g.is_one() {
            num /= &g;
            den /= &g;
        }
        (num, den)
    }

    pub fn only_q(&self) -> bool {
        self.terms.keys().all(|m| m.1 == 0)
    }

    pub fn only_v(&self) -> bool {
        self.terms.keys().all(|m| m.0 == 0)
    }

    fn fmt_with(&self, f: &mut fmt::Formatter<'_>, use_t: bool) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for ((a, b), c) in self.terms.iter().rev() {
            let mono = mono_string(*a, *b, use_t);
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }

    pub fn to_key_map(&self) -> BTreeMap<String, BigInt> {
        self.terms.iter().map(|((a, b), c)| (format!("q^{a} v^{b}"), c.clone())).collect()
    }

    pub fn from_key_map(m: &BTreeMap<String, BigInt>) -> Option<Poly> {
        let mut p = Poly::zero();
        for (k, c) in m {
            let mut parts = k.split_whitespace();
            let a = parts.next()?.strip_prefix("q^")?.parse().ok()?;
            let b = parts.next()?.strip_prefix("v^")?.parse().ok()?;
            p.add_term((a, b), c.clone());
        }
        Some(p)
    }
}

fn mono_string(a: i32, b: i32, use_t: bool) -> String {
    let mut s = Vec::new();
    match a {
        0 => {}
        1 => s.push("q".to_string()),
        _ => s.push(format!("q^{a}")),
    }
    if b != 0 {
        if use_t && b % 2 == 0 {
            let e = b / 2;
            s.push(if e == 1 { "t".into() } else { format!("t^{e}") });
        } else {
            s.push(if b == 1 { "v".into() } else { format!("v^{b}") });
        }
    }
    s.join("*")
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(f, true)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(f, false)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let mut out = self.clone();
        out.add_assign_ref(o);
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                out.add_term((m1.0 + m2.0, m1.1 + m2.1), c1 * c2);
            }
        }
        out
    }
}

// Dense helpers. `UPoly` is a polynomial in q (index = exponent); `BPoly` is a
// polynomial in v with `UPoly` coefficients. Exponents must be nonnegative.

type UPoly = Vec<BigInt>;
type BPoly = Vec<UPoly>;

fn u_trim(p: &mut UPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn u_content(p: &UPoly) -> BigInt {
    p.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn u_scale(p: &UPoly, c: &BigInt) -> UPoly {
    let mut out: UPoly = p.iter().map(|x| x * c).collect();
    u_trim(&mut out);
    out
}

fn u_div_scalar(p: &UPoly, c: &BigInt) -> UPoly {
    p.iter().map(|x| x / c).collect()
}

fn u_sub(a: &UPoly, b: &UPoly) -> UPoly {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] -= x;
    }
    u_trim(&mut out);
    out
}

fn u_mul(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    u_trim(&mut out);
    out
}

/// Exact quotient `a / b` in `Z[q]`, or `None`.
fn u_div_exact(a: &UPoly, b: &UPoly) -> Option<UPoly> {
    if b.is_empty() {
        return None;
    }
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let mut r = a.clone();
    let lb = b.last().unwrap();
    let mut quo = vec![BigInt::zero(); a.len() - b.len() + 1];
    while r.len() >= b.len() {
        let lr = r.last().unwrap();
        let (c, rem) = lr.div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        let k = r.len() - b.len();
        for (j, y) in b.iter().enumerate() {
            r[k + j] -= &c * y;
        }
        quo[k] = c;
        u_trim(&mut r);
    }
    if r.is_empty() {
        u_trim(&mut quo);
        Some(quo)
    } else {
        None
    }
}

fn u_prem(a: &UPoly, b: &UPoly) -> UPoly {
    let mut r = a.clone();
    let lb = b.last().unwrap().clone();
    while r.len() >= b.len() && !r.is_empty() {
        let lr = r.last().unwrap().clone();
        let k = r.len() - b.len();
        let mut nr: UPoly = r.iter().map(|x| x * &lb).collect();
        for (j, y) in b.iter().enumerate() {
            nr[k + j] -= &lr * y;
        }
        u_trim(&mut nr);
        r = nr;
    }
    r
}

fn u_primitive(p: &UPoly) -> UPoly {
    let c = u_content(p);
    if c.is_zero() || c.is_one() {
        p.clone()
    } else {
        u_div_scalar(p, &c)
    }
}

fn u_gcd(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() {
        return u_normalize_sign(b.clone());
    }
    if b.is_empty() {
        return u_normalize_sign(a.clone());
    }
    let c = u_content(a).gcd(&u_content(b));
    let (mut x, mut y) = (u_primitive(a), u_primitive(b));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = u_prem(&x, &y);
        x = y;
        y = u_primitive(&r);
    }
    u_normalize_sign(u_scale(&u_primitive(&x), &c))
}

fn u_normalize_sign(mut p: UPoly) -> UPoly {
    if p.last().is_some_and(|c| c.is_negative()) {
        for c in p.iter_mut() {
            *c = -c.clone();
        }
    }
    p
}

fn b_trim(p: &mut BPoly) {
    while p.last().is_some_and(|c| c.is_empty()) {
        p.pop();
    }
}

fn b_content(p: &BPoly) -> UPoly {
    let mut g: UPoly = Vec::new();
    for c in p {
        g = u_gcd(&g, c);
        if g.len() == 1 && g[0].is_one() {
            break;
        }
    }
    g
}

fn b_div_u(p: &BPoly, c: &UPoly) -> BPoly {
    p.iter().map(|x| u_div_exact(x, c).expect("content divides")).collect()
}

fn b_primitive(p: &BPoly) -> BPoly {
    let c = b_content(p);
    if c.len() == 1 && c[0].is_one() {
        p.clone()
    } else {
        b_div_u(p, &c)
    }
}

fn b_prem(a: &BPoly, b: &BPoly) -> BPoly {
    let mut r = a.clone();
    let lb = b.last().unwrap().clone();
    while r.len() >= b.len() && !r.is_empty() {
        let lr = r.last().unwrap().clone();
        let k = r.len() - b.len();
        let mut nr: BPoly = r.iter().map(|x| u_mul(x, &lb)).collect();
        for (j, y) in b.iter().enumerate() {
            nr[k + j] = u_sub(&nr[k + j], &u_mul(&lr, y));
        }
        b_trim(&mut nr);
        r = nr;
    }
    r
}

fn b_gcd(a: &BPoly, b: &BPoly) -> BPoly {
    if a.is_empty() {
        return b.clone();
    }
    if b.is_empty() {
        return a.clone();
    }
    let c = u_gcd(&b_content(a), &b_content(b));
    let (mut x, mut y) = (b_primitive(a), b_primitive(b));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        if y.len() == 1 {
            // y is free of v, and primitive over Z[q]: unit in the quotient.
            x = vec![vec![BigInt::one()]];
            break;
        }
        let r = b_prem(&x, &y);
        x = y;
        y = if r.is_empty() { r } else { b_primitive(&r) };
    }
    let g = b_primitive(&x);
    g.iter().map(|u| u_mul(u, &c)).collect()
}

fn b_div_exact(a: &BPoly, b: &BPoly) -> Option<BPoly> {
    if b.is_empty() {
        return None;
    }
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let mut r = a.clone();
    let lb = b.last().unwrap();
    let mut quo: BPoly = vec![Vec::new(); a.len() - b.len() + 1];
    while r.len() >= b.len() {
        let c = u_div_exact(r.last().unwrap(), lb)?;
        let k = r.len() - b.len();
        for (j, y) in b.iter().enumerate() {
            r[k + j] = u_sub(&r[k + j], &u_mul(&c, y));
        }
        quo[k] = c;
        b_trim(&mut r);
    }
    if r.is_empty() {
        b_trim(&mut quo);
        Some(quo)
    } else {
        None
    }
}

fn to_dense(p: &Poly) -> BPoly {
    let (mq, mv) = p.min_exps().unwrap_or((0, 0));
    debug_assert!(mq >= 0 && mv >= 0);
    let mut out: BPoly = Vec::new();
    for ((a, b), c) in &p.terms {
        let (a, b) = (*a as usize, *b as usize);
        if out.len() <= b {
            out.resize(b + 1, Vec::new());
        }
        if out[b].len() <= a {
            out[b].resize(a + 1, BigInt::zero());
        }
        out[b][a] = c.clone();
    }
    out
}

fn from_dense(p: &BPoly) -> Poly {
    let mut out = Poly::zero();
    for (b, u) in p.iter().enumerate() {
        for (a, c) in u.iter().enumerate() {
            out.add_term((a as i32, b as i32), c.clone());
        }
    }
    out
}

/// Gcd of two polynomials with nonnegative exponents (up to sign).
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    from_dense(&b_gcd(&to_dense(a), &to_dense(b)))
}

/// Exact quotient of polynomials with nonnegative exponents.
pub fn div_exact(a: &Poly, b: &Poly) -> Option<Poly> {
    b_div_exact(&to_dense(a), &to_dense(b)).map(|d| from_dense(&d))
}

/// Exact Laurent quotient: shifts both operands to nonnegative exponents.
pub fn laurent_div_exact(a: &Poly, b: &Poly) -> Option<Poly> {
    if b.is_zero() {
        return None;
    }
    if a.is_zero() {
        return Some(Poly::zero());
    }
    let (aq, av) = a.min_exps().unwrap();
    let (bq, bv) = b.min_exps().unwrap();
    let q = div_exact(&a.shift(-aq, -av), &b.shift(-bq, -bv))?;
    Some(q.shift(aq - bq, av - bv))
}

pub fn lcm(a: &Poly, b: &Poly) -> Poly {
    let g = gcd(a, b);
    let q = div_exact(a, &g).expect("gcd divides");
    &q * b
}
