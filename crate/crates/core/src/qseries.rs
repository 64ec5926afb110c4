//! Truncated Fourier-Laurent series in q^{1/N} over a pluggable exact
//! coefficient ring, with the standard building blocks eta, E_2, sigma_1 and
//! the weight-raising theta operator D(g) = q dg/dq - (k/12) g E_2.
//!
//! Every series carries a certified truncation bound T: all exponents e with
//! e_min <= e < T are exactly correct. Products and inverses propagate T
//! pessimistically, so no silently wrong coefficient can be emitted.

use crate::error::{Error, Result};
use crate::rings::{parse_rational, CycElem, EllipticGroupElem, GroupAlgebraElem, Rational};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt::Debug;

/// Exact exponent in (1/N)Z.
pub type Exp = num_rational::Rational64;

pub fn exp_int(n: i64) -> Exp {
    Exp::from_integer(n)
}

pub fn exp_frac(n: i64, d: i64) -> Exp {
    Exp::new(n, d)
}

/// Coefficient-ring dispatch: the same series engine runs over rationals,
/// the cyclotomic group algebra, and elliptic-monomial group algebras.
pub trait CoeffRing: Clone + PartialEq + Debug {
    type Elem: Clone + PartialEq + Debug;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn scale_rat(&self, a: &Self::Elem, r: &Rational) -> Self::Elem;
    fn try_inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn ring_tag(&self) -> String;
    fn ser_elem(&self, a: &Self::Elem) -> String;
    fn de_elem(&self, s: &str) -> Result<Self::Elem>;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RationalRing;

impl CoeffRing for RationalRing {
    type Elem = Rational;
    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn one(&self) -> Rational {
        Rational::one()
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn neg(&self, a: &Rational) -> Rational {
        -a
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn scale_rat(&self, a: &Rational, r: &Rational) -> Rational {
        a * r
    }
    fn try_inv(&self, a: &Rational) -> Option<Rational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
    fn ring_tag(&self) -> String {
        "rational".into()
    }
    fn ser_elem(&self, a: &Rational) -> String {
        format!("{}/{}", a.numer(), a.denom())
    }
    fn de_elem(&self, s: &str) -> Result<Rational> {
        parse_rational(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CycRing {
    pub order: usize,
}

impl CoeffRing for CycRing {
    type Elem = CycElem;
    fn zero(&self) -> CycElem {
        CycElem::zero(self.order)
    }
    fn one(&self) -> CycElem {
        CycElem::one(self.order)
    }
    fn add(&self, a: &CycElem, b: &CycElem) -> CycElem {
        a.add(b).expect("order checked by ring")
    }
    fn neg(&self, a: &CycElem) -> CycElem {
        a.neg()
    }
    fn mul(&self, a: &CycElem, b: &CycElem) -> CycElem {
        a.mul(b).expect("order checked by ring")
    }
    fn scale_rat(&self, a: &CycElem, r: &Rational) -> CycElem {
        a.scale(r)
    }
    fn try_inv(&self, a: &CycElem) -> Option<CycElem> {
        a.inv()
    }
    fn is_zero(&self, a: &CycElem) -> bool {
        a.is_zero()
    }
    fn ring_tag(&self) -> String {
        format!("cyc:{}", self.order)
    }
    fn ser_elem(&self, a: &CycElem) -> String {
        a.serialize()
    }
    fn de_elem(&self, s: &str) -> Result<CycElem> {
        let e = CycElem::deserialize(s)?;
        if e.order() != self.order {
            return Err(Error::OrderMismatch(e.order(), self.order));
        }
        Ok(e)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroupAlgRing {
    pub rank: usize,
    pub order: usize,
}

impl CoeffRing for GroupAlgRing {
    type Elem = GroupAlgebraElem;
    fn zero(&self) -> GroupAlgebraElem {
        GroupAlgebraElem::zero(self.rank, self.order)
    }
    fn one(&self) -> GroupAlgebraElem {
        GroupAlgebraElem::one(self.rank, self.order)
    }
    fn add(&self, a: &GroupAlgebraElem, b: &GroupAlgebraElem) -> GroupAlgebraElem {
        a.add(b).expect("rank/order checked by ring")
    }
    fn neg(&self, a: &GroupAlgebraElem) -> GroupAlgebraElem {
        a.neg()
    }
    fn mul(&self, a: &GroupAlgebraElem, b: &GroupAlgebraElem) -> GroupAlgebraElem {
        a.mul(b).expect("rank/order checked by ring")
    }
    fn scale_rat(&self, a: &GroupAlgebraElem, r: &Rational) -> GroupAlgebraElem {
        a.scale(r)
    }
    fn try_inv(&self, a: &GroupAlgebraElem) -> Option<GroupAlgebraElem> {
        // invertible iff a single monomial with invertible rational coefficient
        if a.terms.len() != 1 {
            return None;
        }
        let (m, c) = a.terms.iter().next().unwrap();
        if c.is_zero() {
            return None;
        }
        Some(GroupAlgebraElem::monomial(
            self.rank,
            self.order,
            m.inverse(self.order),
            c.recip(),
        ))
    }
    fn is_zero(&self, a: &GroupAlgebraElem) -> bool {
        a.is_zero()
    }
    fn ring_tag(&self) -> String {
        format!("groupalg:{}:{}", self.rank, self.order)
    }
    fn ser_elem(&self, a: &GroupAlgebraElem) -> String {
        if a.terms.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = a
            .terms
            .iter()
            .map(|(m, c)| {
                let exps: Vec<String> = m.exps.iter().map(|(x, y)| format!("{x},{y}")).collect();
                format!("[{}]@{}*{}/{}", exps.join(";"), m.torsion, c.numer(), c.denom())
            })
            .collect();
        parts.join(" + ")
    }
    fn de_elem(&self, s: &str) -> Result<GroupAlgebraElem> {
        let s = s.trim();
        let mut out = GroupAlgebraElem::zero(self.rank, self.order);
        if s == "0" {
            return Ok(out);
        }
        for part in s.split(" + ") {
            let part = part.trim();
            let rest = part
                .strip_prefix('[')
                .ok_or_else(|| Error::Parse(format!("bad monomial {part:?}")))?;
            let (exps_s, rest) = rest
                .split_once(']')
                .ok_or_else(|| Error::Parse("missing ]".into()))?;
            let rest = rest
                .strip_prefix('@')
                .ok_or_else(|| Error::Parse("missing @".into()))?;
            let (t_s, c_s) = rest
                .split_once('*')
                .ok_or_else(|| Error::Parse("missing *".into()))?;
            let mut exps = Vec::new();
            if !exps_s.is_empty() {
                for pair in exps_s.split(';') {
                    let (x, y) = pair
                        .split_once(',')
                        .ok_or_else(|| Error::Parse(format!("bad exponent pair {pair:?}")))?;
                    exps.push((
                        x.parse().map_err(|_| Error::Parse("bad exponent".into()))?,
                        y.parse().map_err(|_| Error::Parse("bad exponent".into()))?,
                    ));
                }
            }
            if exps.len() != self.rank {
                return Err(Error::Parse(format!(
                    "expected rank {}, got {}",
                    self.rank,
                    exps.len()
                )));
            }
            let torsion: i64 = t_s.parse().map_err(|_| Error::Parse("bad torsion".into()))?;
            let c = parse_rational(c_s)?;
            out.add_term(EllipticGroupElem { exps, torsion }, c);
        }
        Ok(out)
    }
}

/// Truncated series sum_{e} c_e q^e with exponents in (1/N)Z, all stored
/// exponents below the certified bound `trunc`.
#[derive(Clone, Debug, PartialEq)]
pub struct QExp<R: CoeffRing> {
    pub ring: R,
    /// exponent denominator N
    pub n: i64,
    /// certified truncation bound: coefficients are exact for e < trunc
    pub trunc: Exp,
    pub terms: BTreeMap<Exp, R::Elem>,
}

impl<R: CoeffRing> QExp<R> {
    pub fn zero(ring: R, n: i64, trunc: Exp) -> Self {
        QExp {
            ring,
            n,
            trunc,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: R, trunc: Exp) -> Self {
        let mut s = Self::zero(ring, 1, trunc);
        let one = s.ring.one();
        s.set(exp_int(0), one);
        s
    }

    pub fn monomial(ring: R, e: Exp, c: R::Elem, trunc: Exp) -> Self {
        let mut s = Self::zero(ring, (*e.denom()).max(1), trunc);
        s.set(e, c);
        s
    }

    pub fn set(&mut self, e: Exp, c: R::Elem) {
        debug_assert!(self.n % e.denom() == 0 || {
            self.n = num_integer::lcm(self.n, *e.denom());
            true
        });
        self.n = num_integer::lcm(self.n, *e.denom());
        if e < self.trunc && !self.ring.is_zero(&c) {
            self.terms.insert(e, c);
        }
    }

    pub fn coeff(&self, e: Exp) -> R::Elem {
        self.terms.get(&e).cloned().unwrap_or_else(|| self.ring.zero())
    }

    /// Least stored exponent, or the truncation bound when no terms exist
    /// (the first possibly-nonzero exponent).
    pub fn min_exp_eff(&self) -> Exp {
        self.terms.keys().next().copied().unwrap_or(self.trunc)
    }

    pub fn leading(&self) -> Option<(Exp, &R::Elem)> {
        self.terms.iter().next().map(|(e, c)| (*e, c))
    }

    pub fn is_zero_series(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn truncate(&self, to: Exp) -> Self {
        let mut out = self.clone();
        if to < out.trunc {
            out.trunc = to;
            out.terms.retain(|e, _| *e < to);
        }
        out
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(format!(
                "{} vs {}",
                self.ring.ring_tag(),
                other.ring.ring_tag()
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let trunc = self.trunc.min(other.trunc);
        let mut out = Self::zero(self.ring.clone(), num_integer::lcm(self.n, other.n), trunc);
        for (e, c) in self.terms.iter().chain(other.terms.iter()) {
            if *e >= trunc {
                continue;
            }
            let cur = out.coeff(*e);
            let s = out.ring.add(&cur, c);
            if out.ring.is_zero(&s) {
                out.terms.remove(e);
            } else {
                out.terms.insert(*e, s);
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = self.ring.neg(c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        let mut out = Self::zero(self.ring.clone(), self.n, self.trunc);
        for (e, a) in &self.terms {
            let v = self.ring.mul(a, c);
            if !self.ring.is_zero(&v) {
                out.terms.insert(*e, v);
            }
        }
        out
    }

    pub fn scale_rat(&self, r: &Rational) -> Self {
        let mut out = Self::zero(self.ring.clone(), self.n, self.trunc);
        if r.is_zero() {
            return out;
        }
        for (e, a) in &self.terms {
            out.terms.insert(*e, self.ring.scale_rat(a, r));
        }
        out
    }

    /// Shift all exponents by delta (multiplication by q^delta).
    pub fn shift(&self, delta: Exp) -> Self {
        let mut out = Self::zero(
            self.ring.clone(),
            num_integer::lcm(self.n, *delta.denom()),
            self.trunc + delta,
        );
        for (e, c) in &self.terms {
            out.terms.insert(*e + delta, c.clone());
        }
        out
    }

    /// Cauchy product with exact truncation bookkeeping: the result is
    /// certified up to min(T_a + e_min(b), T_b + e_min(a)).
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let trunc = (self.trunc + other.min_exp_eff()).min(other.trunc + self.min_exp_eff());
        let mut out = Self::zero(self.ring.clone(), num_integer::lcm(self.n, other.n), trunc);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = *e1 + *e2;
                if e >= trunc {
                    break; // BTreeMap keys ascending: later e2 only larger
                }
                let prod = out.ring.mul(c1, c2);
                if out.ring.is_zero(&prod) {
                    continue;
                }
                let cur = out.coeff(e);
                let s = out.ring.add(&cur, &prod);
                if out.ring.is_zero(&s) {
                    out.terms.remove(&e);
                } else {
                    out.terms.insert(e, s);
                }
            }
        }
        Ok(out)
    }

    /// Multiplicative inverse. Requires a unit leading coefficient; the
    /// result is certified up to T - 2*e_min.
    pub fn invert(&self) -> Result<Self> {
        let (e0, c0) = self
            .leading()
            .map(|(e, c)| (e, c.clone()))
            .ok_or(Error::NonUnitLeading)?;
        let c0_inv = self.ring.try_inv(&c0).ok_or(Error::NonUnitLeading)?;
        // u = self / (c0 q^{e0}) - 1, supported on positive relative exponents
        let rel_trunc = self.trunc - e0;
        let mut u = self.shift(-e0).scale(&c0_inv);
        u.trunc = rel_trunc;
        u.terms.remove(&exp_int(0));
        // geometric series sum (-u)^j
        let mut acc = Self::one(self.ring.clone(), rel_trunc);
        acc.n = self.n;
        let mut term = Self::one(self.ring.clone(), rel_trunc);
        term.n = self.n;
        let neg_u = u.neg();
        loop {
            term = term.mul(&neg_u)?;
            term.trunc = rel_trunc;
            term.terms.retain(|e, _| *e < rel_trunc);
            if term.is_zero_series() {
                break;
            }
            acc = acc.add(&term)?;
            acc.trunc = rel_trunc;
        }
        let mut out = acc.scale(&c0_inv).shift(-e0);
        out.trunc = rel_trunc - e0;
        out.terms.retain(|e, _| *e < rel_trunc - e0);
        Ok(out)
    }

    /// Integer power via repeated squaring; negative powers invert first.
    pub fn pow(&self, k: i64) -> Result<Self> {
        if k == 0 {
            let mut one = Self::one(self.ring.clone(), self.trunc);
            one.n = self.n;
            return Ok(one);
        }
        let base = if k < 0 { self.invert()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut result: Option<Self> = None;
        let mut power = base;
        loop {
            if e & 1 == 1 {
                result = Some(match result {
                    None => power.clone(),
                    Some(r) => r.mul(&power)?,
                });
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            power = power.mul(&power)?;
        }
        Ok(result.expect("nonzero exponent"))
    }

    /// q d/dq: multiply each coefficient by its exponent.
    pub fn q_derivative(&self) -> Self {
        let mut out = Self::zero(self.ring.clone(), self.n, self.trunc);
        for (e, c) in &self.terms {
            let r = Rational::new(BigInt::from(*e.numer()), BigInt::from(*e.denom()));
            let v = self.ring.scale_rat(c, &r);
            if !self.ring.is_zero(&v) {
                out.terms.insert(*e, v);
            }
        }
        out
    }

    pub fn map_coeffs<S: CoeffRing>(
        &self,
        ring: S,
        f: impl Fn(&R::Elem) -> S::Elem,
    ) -> QExp<S> {
        let mut out = QExp::zero(ring, self.n, self.trunc);
        for (e, c) in &self.terms {
            let v = f(c);
            if !out.ring.is_zero(&v) {
                out.terms.insert(*e, v);
            }
        }
        out
    }

    /// Line-oriented interchange format. Bit-exact round-trip.
    pub fn serialize(&self) -> String {
        let mut out = format!(
            "qexp N={} T={}/{} ring={}\n",
            self.n,
            self.trunc.numer(),
            self.trunc.denom(),
            self.ring.ring_tag()
        );
        for (e, c) in &self.terms {
            out.push_str(&format!(
                "{}/{} : {}\n",
                e.numer(),
                e.denom(),
                self.ring.ser_elem(c)
            ));
        }
        out
    }

    pub fn deserialize(ring: R, s: &str) -> Result<Self> {
        let mut lines = s.lines();
        let header = lines.next().ok_or_else(|| Error::Parse("empty input".into()))?;
        let header = header
            .strip_prefix("qexp ")
            .ok_or_else(|| Error::Parse("missing qexp header".into()))?;
        let mut n: Option<i64> = None;
        let mut t: Option<Exp> = None;
        let mut tag: Option<String> = None;
        for field in header.split_whitespace() {
            if let Some(v) = field.strip_prefix("N=") {
                n = Some(v.parse().map_err(|_| Error::Parse("bad N".into()))?);
            } else if let Some(v) = field.strip_prefix("T=") {
                let (a, b) = v
                    .split_once('/')
                    .ok_or_else(|| Error::Parse("bad T".into()))?;
                t = Some(Exp::new(
                    a.parse().map_err(|_| Error::Parse("bad T".into()))?,
                    b.parse().map_err(|_| Error::Parse("bad T".into()))?,
                ));
            } else if let Some(v) = field.strip_prefix("ring=") {
                tag = Some(v.to_string());
            }
        }
        let n = n.ok_or_else(|| Error::Parse("missing N=".into()))?;
        let trunc = t.ok_or_else(|| Error::Parse("missing T=".into()))?;
        let tag = tag.ok_or_else(|| Error::Parse("missing ring=".into()))?;
        if tag != ring.ring_tag() {
            return Err(Error::RingMismatch(format!(
                "file has ring={tag}, expected {}",
                ring.ring_tag()
            )));
        }
        let mut out = Self::zero(ring, n, trunc);
        for line in lines {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let (es, cs) = line
                .split_once(" : ")
                .ok_or_else(|| Error::Parse(format!("bad term line {line:?}")))?;
            let (a, b) = es
                .split_once('/')
                .ok_or_else(|| Error::Parse("bad exponent".into()))?;
            let e = Exp::new(
                a.trim().parse().map_err(|_| Error::Parse("bad exponent".into()))?,
                b.trim().parse().map_err(|_| Error::Parse("bad exponent".into()))?,
            );
            if n % e.denom() != 0 {
                return Err(Error::Parse(format!("exponent {e} incompatible with N={n}")));
            }
            let c = out.ring.de_elem(cs)?;
            out.set(e, c);
        }
        Ok(out)
    }
}

/// Dedekind eta: q^{1/24} prod_{n>=1} (1 - q^n), certified below `order`.
pub fn eta(order: i64) -> QExp<RationalRing> {
    assert!(order >= 1);
    let trunc = exp_int(order);
    let mut s = QExp::monomial(RationalRing, exp_frac(1, 24), Rational::one(), trunc);
    for n in 1..=order {
        // factor (1 - q^n)
        let mut f = QExp::one(RationalRing, trunc);
        f.set(exp_int(n), -Rational::one());
        s = s.mul(&f).expect("same ring");
        s.trunc = trunc; // factors are exact, no truncation loss from them
        s.terms.retain(|e, _| *e < trunc);
    }
    s
}

/// eta with q -> q^t (i.e. eta(t tau)), certified below `order`.
pub fn eta_scaled(t: i64, order: i64) -> QExp<RationalRing> {
    assert!(t >= 1 && order >= 1);
    let trunc = exp_int(order);
    let mut s = QExp::monomial(RationalRing, exp_frac(t, 24), Rational::one(), trunc);
    let mut n = 1i64;
    while t * n < order + 24 {
        let mut f = QExp::one(RationalRing, trunc);
        f.set(exp_int(t * n), -Rational::one());
        s = s.mul(&f).expect("same ring");
        s.trunc = trunc;
        s.terms.retain(|e, _| *e < trunc);
        n += 1;
    }
    s
}

/// sigma_1 extended to rational arguments: divisor sum on positive integers,
/// -1/24 at zero, 0 elsewhere.
pub fn sigma1(m: &Rational) -> Rational {
    if m.is_zero() {
        return crate::rings::rat(-1, 24);
    }
    if !m.is_integer() || m.is_negative() {
        return Rational::zero();
    }
    let m = m.to_integer();
    let mi: i64 = i64::try_from(&m).expect("sigma1 argument fits i64");
    Rational::from_integer(BigInt::from(sigma1_int(mi)))
}

fn sigma1_int(m: i64) -> i64 {
    let mut s = 0i64;
    let mut d = 1i64;
    while d * d <= m {
        if m % d == 0 {
            s += d;
            if d != m / d {
                s += m / d;
            }
        }
        d += 1;
    }
    s
}

/// Memoized sigma_1 table.
#[derive(Default)]
pub struct SigmaOne {
    memo: std::collections::HashMap<i64, Rational>,
}

impl SigmaOne {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, m: &Rational) -> Rational {
        if m.is_integer() && !m.is_negative() && !m.is_zero() {
            let mi: i64 = i64::try_from(&m.to_integer()).expect("fits");
            return self
                .memo
                .entry(mi)
                .or_insert_with(|| Rational::from_integer(BigInt::from(sigma1_int(mi))))
                .clone();
        }
        sigma1(m)
    }
}

/// E_2 = 1 - 24 sum_{m>=1} sigma_1(m) q^m (equivalently -24 sum_{m>=0}).
pub fn e2_series(order: i64) -> QExp<RationalRing> {
    assert!(order >= 1);
    let mut s = QExp::zero(RationalRing, 1, exp_int(order));
    for m in 0..order {
        let c = sigma1(&crate::rings::rat_i(m)).scale_neg24();
        s.set(exp_int(m), c);
    }
    s
}

trait Scale24 {
    fn scale_neg24(self) -> Rational;
}

impl Scale24 for Rational {
    fn scale_neg24(self) -> Rational {
        self * crate::rings::rat_i(-24)
    }
}

/// Theta operator D(g) = q dg/dq - (k/12) g E_2 on integer-exponent series;
/// sends weight k to weight k+2.
pub fn theta_operator(g: &QExp<RationalRing>, k: &Rational) -> Result<QExp<RationalRing>> {
    if g.terms.keys().any(|e| !e.is_integer()) {
        return Err(Error::InvalidInput(
            "theta operator requires integer exponents".into(),
        ));
    }
    let order = *g.trunc.numer() / *g.trunc.denom() + 1;
    let e2 = e2_series(order.max(1));
    let correction = g.mul(&e2)?.scale_rat(&(-(k / crate::rings::rat_i(12))));
    g.q_derivative().add(&correction)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::{rat, rat_i};

    #[test]
    fn geometric_series_inverse() {
        // invert(1 - q) = sum q^m
        let mut a = QExp::one(RationalRing, exp_int(12));
        a.set(exp_int(1), -Rational::one());
        let inv = a.invert().unwrap();
        for m in 0..12 {
            assert_eq!(inv.coeff(exp_int(m)), Rational::one());
        }
        let prod = a.mul(&inv).unwrap();
        assert_eq!(prod.coeff(exp_int(0)), Rational::one());
        for m in 1..11 {
            assert!(prod.coeff(exp_int(m)).is_zero());
        }
    }

    #[test]
    fn eta_leading_terms() {
        let e = eta(12);
        assert_eq!(e.leading().unwrap().0, exp_frac(1, 24));
        assert_eq!(e.coeff(exp_frac(1, 24)), Rational::one());
        // coefficient of q^{1/24 + 1} is -1 (product expansion oracle)
        assert_eq!(e.coeff(exp_frac(25, 24)), -Rational::one());
        // pentagonal numbers: exponents 1/24 + {0,1,2,5,7} with signs + - - + +
        assert_eq!(e.coeff(exp_frac(1, 24) + exp_int(2)), -Rational::one());
        assert!(e.coeff(exp_frac(1, 24) + exp_int(3)).is_zero());
        assert_eq!(e.coeff(exp_frac(1, 24) + exp_int(5)), Rational::one());
        assert_eq!(e.coeff(exp_frac(1, 24) + exp_int(7)), Rational::one());
    }

    #[test]
    fn eta24_is_tau_series() {
        let e24 = eta(8).pow(24).unwrap();
        assert_eq!(e24.coeff(exp_int(1)), Rational::one());
        assert_eq!(e24.coeff(exp_int(2)), rat_i(-24));
        assert_eq!(e24.coeff(exp_int(3)), rat_i(252));
        assert_eq!(e24.coeff(exp_int(4)), rat_i(-1472));
        // invert(eta)^24 has leading term q^{-1}
        let inv24 = eta(8).invert().unwrap().pow(24).unwrap();
        assert_eq!(inv24.leading().unwrap().0, exp_int(-1));
        assert_eq!(*inv24.leading().unwrap().1, Rational::one());
    }

    #[test]
    fn eta_times_eta_matches_direct_expansion() {
        // eta * eta vs direct expansion of q^{1/12} prod (1-q^n)^2 to order 10
        let lhs = eta(11).mul(&eta(11)).unwrap();
        let trunc = exp_int(10);
        let mut rhs = QExp::monomial(RationalRing, exp_frac(1, 12), Rational::one(), trunc);
        for n in 1..=10 {
            let mut f = QExp::one(RationalRing, trunc);
            f.set(exp_int(n), -Rational::one());
            rhs = rhs.mul(&f).unwrap().mul(&f).unwrap();
            rhs.trunc = trunc;
            rhs.terms.retain(|e, _| *e < trunc);
        }
        let lhs10 = lhs.truncate(trunc);
        assert_eq!(lhs10.terms, rhs.terms);
    }

    #[test]
    fn eta_unit() {
        let e = eta(10);
        let prod = e.mul(&e.invert().unwrap()).unwrap();
        assert_eq!(prod.coeff(exp_int(0)), Rational::one());
        assert_eq!(prod.terms.len(), 1);
    }

    #[test]
    fn exponent_addition_and_denominators() {
        let a = QExp::monomial(RationalRing, exp_frac(1, 2), Rational::one(), exp_int(5));
        let b = QExp::monomial(RationalRing, exp_frac(1, 3), Rational::one(), exp_int(5));
        let p = a.mul(&b).unwrap();
        assert_eq!(p.leading().unwrap().0, exp_frac(5, 6));
        assert_eq!(p.n % 6, 0);
        // a * 1 = a
        let one = QExp::one(RationalRing, exp_int(5));
        assert_eq!(a.mul(&one).unwrap().terms, a.terms);
    }

    #[test]
    fn sigma1_values() {
        assert_eq!(sigma1(&rat_i(0)), rat(-1, 24));
        assert_eq!(sigma1(&rat_i(6)), rat_i(12));
        assert_eq!(sigma1(&rat(1, 2)), rat_i(0));
        assert_eq!(sigma1(&rat_i(-3)), rat_i(0));
        assert_eq!(sigma1(&rat_i(1)), rat_i(1));
    }

    #[test]
    fn e2_coefficients() {
        let e2 = e2_series(5);
        assert_eq!(e2.coeff(exp_int(0)), Rational::one());
        assert_eq!(e2.coeff(exp_int(1)), rat_i(-24));
        assert_eq!(e2.coeff(exp_int(2)), rat_i(-72));
        assert_eq!(e2.coeff(exp_int(3)), rat_i(-96));
    }

    #[test]
    fn theta_operator_basics() {
        // D(1, k=0) = 0
        let one = QExp::one(RationalRing, exp_int(6));
        let d = theta_operator(&one, &rat_i(0)).unwrap();
        assert!(d.is_zero_series());
        // linearity on a couple of series
        let mut g1 = QExp::one(RationalRing, exp_int(6));
        g1.set(exp_int(2), rat_i(5));
        let mut g2 = QExp::zero(RationalRing, 1, exp_int(6));
        g2.set(exp_int(1), rat_i(-3));
        let k = rat_i(4);
        let lhs = theta_operator(&g1.add(&g2).unwrap(), &k).unwrap();
        let rhs = theta_operator(&g1, &k)
            .unwrap()
            .add(&theta_operator(&g2, &k).unwrap())
            .unwrap();
        let t = lhs.trunc.min(rhs.trunc);
        assert_eq!(lhs.truncate(t).terms, rhs.truncate(t).terms);
        // fractional exponents rejected
        let frac = QExp::monomial(RationalRing, exp_frac(1, 2), Rational::one(), exp_int(3));
        assert!(theta_operator(&frac, &rat_i(1)).is_err());
    }

    #[test]
    fn truncation_soundness_recompute_higher() {
        let low = eta(6).pow(3).unwrap();
        let high = eta(12).pow(3).unwrap();
        let t = low.trunc;
        assert_eq!(high.truncate(t).terms, low.terms);
    }

    #[test]
    fn serialization_roundtrip_rational() {
        let e = eta(7).pow(2).unwrap();
        let s = e.serialize();
        let back = QExp::deserialize(RationalRing, &s).unwrap();
        assert_eq!(back, e);
        assert_eq!(back.serialize(), s);
    }

    #[test]
    fn serialization_roundtrip_cyc() {
        let ring = CycRing { order: 12 };
        let mut s = QExp::zero(ring, 12, exp_int(3));
        s.set(exp_frac(1, 12), CycElem::monomial(12, 2));
        s.set(exp_int(1), CycElem::monomial(12, 7).scale(&rat(3, 5)));
        let text = s.serialize();
        let back = QExp::deserialize(ring, &text).unwrap();
        assert_eq!(back, s);
        assert_eq!(back.serialize(), text);
    }
}
