//! Exact elements of `Q(q, v)`, `t = v²`, kept as reduced fractions.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::{self, Poly};
use crate::error::{Error, Result};

/// Canonical form: denominator has no monomial factor, the pair has trivial
/// integer content and polynomial gcd, and the denominator's graded-lex
/// leading coefficient is positive.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoeffRF {
    num: Poly,
    den: Poly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    Q,
    V,
}

impl CoeffRF {
    pub fn zero() -> Self {
        CoeffRF { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        CoeffRF::from_poly(Poly::one())
    }

    pub fn from_int(c: i64) -> Self {
        CoeffRF::from_poly(Poly::constant(c))
    }

    pub fn from_poly(p: Poly) -> Self {
        CoeffRF { num: p, den: Poly::one() }
    }

    pub fn q() -> Self {
        CoeffRF::from_poly(Poly::q())
    }

    pub fn v() -> Self {
        CoeffRF::from_poly(Poly::v())
    }

    pub fn t() -> Self {
        CoeffRF::from_poly(Poly::t())
    }

    pub fn monomial(a: i32, b: i32) -> Self {
        CoeffRF::from_poly(Poly::monomial(BigInt::one(), a, b))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_poly(&self) -> Option<&Poly> {
        self.den.is_one().then_some(&self.num)
    }

    /// `(c, (a, b))` when the value is `c·q^a v^b`.
    pub fn as_monomial(&self) -> Option<(BigInt, (i32, i32))> {
        if !self.den.is_one() {
            return None;
        }
        self.num.as_monomial().map(|(c, m)| (c.clone(), m))
    }

    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        normalize(num, den)
    }

    pub fn inv(&self) -> CoeffRF {
        assert!(!self.is_zero(), "division by zero");
        normalize(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, k: i32) -> CoeffRF {
        let base = if k < 0 { self.inv() } else { self.clone() };
        let mut out = CoeffRF::one();
        for _ in 0..k.unsigned_abs() {
            out = &out * &base;
        }
        out
    }

    pub fn mul_poly(&self, p: &Poly) -> CoeffRF {
        if self.den.is_one() {
            CoeffRF::from_poly(&self.num * p)
        } else {
            normalize(&self.num * p, self.den.clone())
        }
    }

    pub fn subs_q_inv(&self) -> CoeffRF {
        normalize(self.num.subs_q_inv(), self.den.subs_q_inv())
    }

    pub fn subs_v_inv(&self) -> CoeffRF {
        normalize(self.num.subs_v_inv(), self.den.subs_v_inv())
    }

    /// Exact limit of the fraction as `var → 0` (or `∞`), which must be a
    /// Laurent polynomial in the other variable.
    pub fn limit(&self, var: Var, at_infinity: bool) -> Result<Poly> {
        if self.is_zero() {
            return Ok(Poly::zero());
        }
        let orders = |p: &Poly| -> Vec<i32> {
            p.terms().map(|(m, _)| if var == Var::Q { m.0 } else { m.1 }).collect()
        };
        let pick = |v: Vec<i32>| if at_infinity { *v.iter().max().unwrap() } else { *v.iter().min().unwrap() };
        let on = pick(orders(&self.num));
        let od = pick(orders(&self.den));
        let diverges = if at_infinity { on > od } else { on < od };
        if on != od {
            if diverges {
                return Err(Error::NoLimit(format!("{self} diverges")));
            }
            return Ok(Poly::zero());
        }
        let slice = |p: &Poly, e: i32| if var == Var::Q { p.q_slice(e) } else { p.v_slice(e) };
        let (n, d) = (slice(&self.num, on), slice(&self.den, od));
        poly::laurent_div_exact(&n, &d)
            .ok_or_else(|| Error::NoLimit(format!("leading ratio of {self} is not a Laurent polynomial")))
    }

    /// Value at integers; `None` on a vanishing denominator.
    pub fn eval(&self, q: i64, v: i64) -> Option<(BigInt, BigInt)> {
        let (a, b) = self.num.eval(q, v);
        let (c, d) = self.den.eval(q, v);
        if c.is_zero() {
            return None;
        }
        let (mut n, mut m) = (a * d, b * c);
        let g = n.gcd(&m);
        if !g.is_zero() {
            n /= &g;
            m /= &g;
        }
        if m.is_negative() {
            n = -n;
            m = -m;
        }
        Some((n, m))
    }
}

fn normalize(mut num: Poly, mut den: Poly) -> CoeffRF {
    if num.is_zero() {
        return CoeffRF::zero();
    }
    let (mq, mv) = den.min_exps().expect("nonzero denominator");
    if mq != 0 || mv != 0 {
        den = den.shift(-mq, -mv);
        num = num.shift(-mq, -mv);
    }
    if den.len() > 1 {
        let (nq, nv) = num.min_exps().unwrap();
        let shifted = num.shift(-nq, -nv);
        let g = poly::gcd(&shifted, &den);
        if !g.is_one() {
            let n2 = poly::div_exact(&shifted, &g).expect("gcd divides numerator");
            let d2 = poly::div_exact(&den, &g).expect("gcd divides denominator");
            num = n2.shift(nq, nv);
            den = d2;
        }
    }
    let c = num.content().gcd(&den.content());
    if !c.is_one() && !c.is_zero() {
        num = num.div_scalar_exact(&c);
        den = den.div_scalar_exact(&c);
    }
    if den.leading().is_some_and(|(_, c)| c.is_negative()) {
        num = -&num;
        den = -&den;
    }
    CoeffRF { num, den }
}

impl Add for &CoeffRF {
    type Output = CoeffRF;
    fn add(self, o: &CoeffRF) -> CoeffRF {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && o.den.is_one() {
            return CoeffRF::from_poly(&self.num + &o.num);
        }
        if self.den == o.den {
            return normalize(&self.num + &o.num, self.den.clone());
        }
        normalize(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den)
    }
}

impl Sub for &CoeffRF {
    type Output = CoeffRF;
    fn sub(self, o: &CoeffRF) -> CoeffRF {
        self + &(-o)
    }
}

impl Neg for &CoeffRF {
    type Output = CoeffRF;
    fn neg(self) -> CoeffRF {
        CoeffRF { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &CoeffRF {
    type Output = CoeffRF;
    fn mul(self, o: &CoeffRF) -> CoeffRF {
        if self.is_zero() || o.is_zero() {
            return CoeffRF::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return CoeffRF::from_poly(&self.num * &o.num);
        }
        normalize(&self.num * &o.num, &self.den * &o.den)
    }
}

impl Div for &CoeffRF {
    type Output = CoeffRF;
    fn div(self, o: &CoeffRF) -> CoeffRF {
        self * &o.inv()
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for CoeffRF {
            type Output = CoeffRF;
            fn $f(self, o: CoeffRF) -> CoeffRF { (&self).$f(&o) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul, Div div);

impl Neg for CoeffRF {
    type Output = CoeffRF;
    fn neg(self) -> CoeffRF {
        -&self
    }
}

impl Default for CoeffRF {
    fn default() -> Self {
        CoeffRF::zero()
    }
}

impl fmt::Display for CoeffRF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            let wrap = |p: &Poly| if p.len() > 1 { format!("({p})") } else { format!("{p}") };
            write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
        }
    }
}

impl fmt::Debug for CoeffRF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `(1 − q^a t^b)` with `t = v²`.
pub fn one_minus(a: i32, b: i32) -> Poly {
    &Poly::one() - &Poly::monomial(BigInt::one(), a, 2 * b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn frac(n: Poly, d: Poly) -> CoeffRF {
        CoeffRF::new(n, d)
    }

    #[test]
    fn reduces() {
        let x = frac(&one_minus(0, 1) * &one_minus(1, 1), one_minus(1, 1));
        assert_eq!(x, CoeffRF::from_poly(one_minus(0, 1)));
    }

    #[test]
    fn field_laws() {
        let a = frac(one_minus(0, 1), one_minus(1, 1));
        let b = frac(Poly::q(), one_minus(2, 1));
        let s = &a + &b;
        assert_eq!(&s - &b, a);
        assert_eq!(&(&a * &b) / &b, a);
        assert!((&a - &a).is_zero());
        assert_eq!(&a / &a, CoeffRF::one());
    }

    #[test]
    fn sign_and_content() {
        let x = frac(Poly::constant(2), Poly::constant(-4));
        assert_eq!(x, frac(Poly::constant(-1), Poly::constant(2)));
        let y = frac(Poly::q(), &Poly::q() * &Poly::q());
        assert_eq!(y, CoeffRF::monomial(-1, 0));
    }

    #[test]
    fn limits() {
        let x = frac(one_minus(0, 1), one_minus(1, 1));
        assert_eq!(x.limit(Var::V, false).unwrap(), Poly::one());
        assert_eq!(x.limit(Var::V, true).unwrap(), Poly::q_pow(-1));
        assert_eq!(x.limit(Var::Q, false).unwrap(), one_minus(0, 1));
        assert_eq!(x.limit(Var::Q, true).unwrap(), Poly::zero());
    }
}
