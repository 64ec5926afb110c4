//! Exact scalar arithmetic: arbitrary-precision rationals, the cyclotomic
//! group algebra Q[X]/(X^{4D}-1), fourth roots of unity, and group algebras
//! of elliptic-exponent monomials.
//!
//! The group algebra is deliberately *not* the cyclotomic field: it has zero
//! divisors but needs no polynomial factorization. Rationality of an element
//! means that every primitive embedding X -> exp(2 pi i j/(4D)), gcd(j,4D)=1,
//! takes the same rational value; this is tested exactly with the averaging
//! idempotent of the primitive component.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

pub type Rational = num_rational::BigRational;

/// Rational from an i64.
pub fn rat_i(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational n/d.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// i^exponent, exponent mod 4. Multiplication adds exponents.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FourthRoot {
    exp: u8,
}

impl FourthRoot {
    pub fn new(exp: i64) -> Self {
        FourthRoot {
            exp: (exp.rem_euclid(4)) as u8,
        }
    }

    pub fn one() -> Self {
        FourthRoot { exp: 0 }
    }

    pub fn i() -> Self {
        FourthRoot { exp: 1 }
    }

    /// -1 as a fourth root.
    pub fn minus_one() -> Self {
        FourthRoot { exp: 2 }
    }

    pub fn exponent(&self) -> u8 {
        self.exp
    }

    pub fn mul(self, other: Self) -> Self {
        FourthRoot::new(self.exp as i64 + other.exp as i64)
    }

    pub fn pow(self, e: i64) -> Self {
        FourthRoot::new(self.exp as i64 * e.rem_euclid(4))
    }

    pub fn inv(self) -> Self {
        FourthRoot::new(-(self.exp as i64))
    }

    /// Lift from {+1, -1}; anything else is rejected by the caller.
    pub fn from_sign(s: i64) -> Self {
        debug_assert!(s == 1 || s == -1);
        if s == 1 {
            FourthRoot::one()
        } else {
            FourthRoot::minus_one()
        }
    }

    /// Is this +1 or -1, and which?
    pub fn as_sign(&self) -> Option<i64> {
        match self.exp {
            0 => Some(1),
            2 => Some(-1),
            _ => None,
        }
    }

    /// Image in the order-4D group algebra: X^{D * exp}.
    pub fn to_cyc(&self, order: usize) -> CycElem {
        debug_assert!(order % 4 == 0);
        CycElem::monomial(order, (order as i64 / 4) * self.exp as i64)
    }

    pub fn to_complex(&self) -> (f64, f64) {
        match self.exp {
            0 => (1.0, 0.0),
            1 => (0.0, 1.0),
            2 => (-1.0, 0.0),
            _ => (0.0, -1.0),
        }
    }
}

impl fmt::Display for FourthRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exp {
            0 => write!(f, "1"),
            1 => write!(f, "i"),
            2 => write!(f, "-1"),
            _ => write!(f, "-i"),
        }
    }
}

/// Element of Q[X]/(X^order - 1), coordinate t representing exp(2 pi i t/order).
///
/// The order is 4D throughout this crate, so the algebra houses i = X^D,
/// zeta_D = X^4, and Gauss sums for every divisor of D.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycElem {
    order: usize,
    coords: Vec<Rational>,
}

impl CycElem {
    pub fn zero(order: usize) -> Self {
        assert!(order >= 1);
        CycElem {
            order,
            coords: vec![Rational::zero(); order],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(order, 0)
    }

    pub fn constant(order: usize, c: Rational) -> Self {
        let mut z = Self::zero(order);
        z.coords[0] = c;
        z
    }

    /// X^t (t taken mod order).
    pub fn monomial(order: usize, t: i64) -> Self {
        let mut z = Self::zero(order);
        let idx = t.rem_euclid(order as i64) as usize;
        z.coords[idx] = Rational::one();
        z
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn coord(&self, t: usize) -> &Rational {
        &self.coords[t % self.order]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order != other.order {
            return Err(Error::OrderMismatch(self.order, other.order));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a + b)
            .collect();
        Ok(CycElem {
            order: self.order,
            coords,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a - b)
            .collect();
        Ok(CycElem {
            order: self.order,
            coords,
        })
    }

    pub fn neg(&self) -> Self {
        CycElem {
            order: self.order,
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        CycElem {
            order: self.order,
            coords: self.coords.iter().map(|a| a * c).collect(),
        }
    }

    /// Convolution product reduced mod X^order - 1.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n = self.order;
        let mut coords = vec![Rational::zero(); n];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coords.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let k = (i + j) % n;
                coords[k] += a * b;
            }
        }
        Ok(CycElem {
            order: n,
            coords,
        })
    }

    pub fn pow(&self, e: u64) -> Result<Self> {
        let mut result = Self::one(self.order);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(result)
    }

    /// Galois-style involution X -> X^{-1} (complex conjugation on every embedding).
    pub fn conj(&self) -> Self {
        let n = self.order;
        let mut coords = vec![Rational::zero(); n];
        for (i, a) in self.coords.iter().enumerate() {
            coords[(n - i) % n] = a.clone();
        }
        CycElem {
            order: n,
            coords,
        }
    }

    /// Complex embedding X -> exp(2 pi i * embedding_index / order).
    ///
    /// Requires gcd(embedding_index, order) = 1 so the image is a primitive
    /// root of unity.
    pub fn to_complex(&self, embedding_index: i64) -> Result<(f64, f64)> {
        let n = self.order as i64;
        if num_integer::gcd(embedding_index.rem_euclid(n), n) != 1 {
            return Err(Error::InvalidEmbedding {
                index: embedding_index,
                order: self.order,
            });
        }
        let mut re = 0.0;
        let mut im = 0.0;
        for (t, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cf = rational_to_f64(c);
            let ang = 2.0 * std::f64::consts::PI * ((t as i64 * embedding_index).rem_euclid(n) as f64)
                / (n as f64);
            re += cf * ang.cos();
            im += cf * ang.sin();
        }
        Ok((re, im))
    }

    /// Idempotent of the primitive component (the faithful factor
    /// Q(zeta_order) of the group algebra): coordinates are Ramanujan sums
    /// c_order(t) / order.
    pub fn primitive_idempotent(order: usize) -> Self {
        let coords = (0..order)
            .map(|t| {
                Rational::new(
                    BigInt::from(ramanujan_sum(order as i64, t as i64)),
                    BigInt::from(order as i64),
                )
            })
            .collect();
        CycElem {
            order,
            coords,
        }
    }

    /// Projection onto the primitive component (multiplication by the idempotent).
    pub fn project_primitive(&self) -> Self {
        let e = Self::primitive_idempotent(self.order);
        self.mul(&e).expect("same order")
    }

    /// The rational value of this element if it lies on the rational line of
    /// the primitive component: all primitive embeddings agree and are rational.
    ///
    /// Tested exactly: project with the averaging idempotent e and check that
    /// the projection equals q*e for a rational q.
    pub fn is_rational(&self) -> Option<Rational> {
        let e = Self::primitive_idempotent(self.order);
        let proj = self.mul(&e).expect("same order");
        // e's coordinate at 0 is phi(order)/order, never zero.
        let q = proj.coords[0].clone() / e.coords[0].clone();
        if proj == e.scale(&q) {
            Some(q)
        } else {
            None
        }
    }

    /// Exact inverse in the full group algebra, when one exists.
    ///
    /// Multiplication by `self` is a circulant linear map; solve it exactly
    /// against 1. Returns None when the element is a zero divisor.
    pub fn inv(&self) -> Option<Self> {
        let n = self.order;
        // columns of the circulant: column j is X^j * self
        let mut mat = vec![vec![Rational::zero(); n + 1]; n];
        for j in 0..n {
            for (i, c) in self.coords.iter().enumerate() {
                mat[(i + j) % n][j] = c.clone();
            }
        }
        mat[0][n] = Rational::one();
        let sol = crate::linalg::solve_square(mat)?;
        Some(CycElem {
            order: n,
            coords: sol,
        })
    }

    /// Inverse within the primitive component: the unique y in e*A with
    /// self*y = e, when the primitive embeddings of self are all nonzero.
    pub fn inv_primitive(&self) -> Option<Self> {
        let n = self.order;
        let e = Self::primitive_idempotent(n);
        // Solve (self * y = e) restricted to y in e*A: parametrize y = e*z and
        // solve the n x n system self*e*z = e in plain coordinates via least
        // structure: the circulant of self*e on the component is invertible
        // iff all primitive embeddings are nonzero.
        let se = self.mul(&e).expect("same order");
        let mut mat = vec![vec![Rational::zero(); n + 1]; n];
        for j in 0..n {
            for (i, c) in se.coords.iter().enumerate() {
                mat[(i + j) % n][j] = c.clone();
            }
        }
        // Right-hand side e; the system is singular on the complement of the
        // component, so solve in the least-squares-free way: add the
        // complement projector rows by requiring y = e*y, i.e. (1-e)y = 0.
        for i in 0..n {
            mat[i][n] = e.coords[i].clone();
        }
        let sol = crate::linalg::solve_consistent(mat, n)?;
        let y = CycElem {
            order: n,
            coords: sol,
        };
        let y = y.project_primitive();
        // verify
        if self.mul(&y).expect("order") == e {
            Some(y)
        } else {
            None
        }
    }

    /// Serialization: "cyc:<order>:" then order rationals "num/den" comma-separated.
    pub fn serialize(&self) -> String {
        let body: Vec<String> = self
            .coords
            .iter()
            .map(|c| format!("{}/{}", c.numer(), c.denom()))
            .collect();
        format!("cyc:{}:{}", self.order, body.join(","))
    }

    pub fn deserialize(s: &str) -> Result<Self> {
        let rest = s
            .strip_prefix("cyc:")
            .ok_or_else(|| Error::Parse(format!("missing cyc: prefix in {s:?}")))?;
        let (ord_s, body) = rest
            .split_once(':')
            .ok_or_else(|| Error::Parse("missing order separator".into()))?;
        let order: usize = ord_s
            .parse()
            .map_err(|_| Error::Parse(format!("bad order {ord_s:?}")))?;
        let coords: Result<Vec<Rational>> = body.split(',').map(parse_rational).collect();
        let coords = coords?;
        if coords.len() != order {
            return Err(Error::Parse(format!(
                "expected {} coordinates, got {}",
                order,
                coords.len()
            )));
        }
        Ok(CycElem { order, coords })
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = n
        .parse()
        .map_err(|_| Error::Parse(format!("bad numerator {n:?}")))?;
    let den: BigInt = d
        .parse()
        .map_err(|_| Error::Parse(format!("bad denominator {d:?}")))?;
    if den.is_zero() {
        return Err(Error::Parse("zero denominator".into()));
    }
    Ok(Rational::new(num, den))
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    // good enough for cross-checks: split to avoid overflow on big ints
    let n = r.numer();
    let d = r.denom();
    match (n.to_string().parse::<f64>(), d.to_string().parse::<f64>()) {
        (Ok(nf), Ok(df)) => nf / df,
        _ => f64::NAN,
    }
}

/// Moebius function of n >= 1.
pub fn moebius(n: i64) -> i64 {
    debug_assert!(n >= 1);
    let mut n = n;
    let mut mu = 1i64;
    let mut p = 2i64;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            mu = -mu;
        }
        p += 1;
    }
    if n > 1 {
        mu = -mu;
    }
    mu
}

/// Ramanujan sum c_n(t) = sum over gcd(j,n)=1 of exp(2 pi i j t / n), an integer.
pub fn ramanujan_sum(n: i64, t: i64) -> i64 {
    let g = num_integer::gcd(t.rem_euclid(n), n);
    // c_n(t) = mu(n/g) * phi(n) / phi(n/g)
    let m = n / g;
    moebius(m) * euler_phi(n) / euler_phi(m)
}

pub fn euler_phi(n: i64) -> i64 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Monomial of a group algebra over (a free-abelian elliptic part) x (torsion).
///
/// The elliptic exponents are stored doubled (and delta-cleared where a
/// lattice context applies), so the true exponents live in (1/2)Z per slot
/// while storage is integral. The torsion slot is the exponent of X in the
/// order-4D cyclotomic group.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EllipticGroupElem {
    /// pairs (a, b) per elliptic slot; in lattice contexts the pair encodes
    /// the O_k-coordinate (a + b*omega)/(2*delta), in the free rank-1 context
    /// it encodes the half-integer a/2 with b unused
    pub exps: Vec<(i64, i64)>,
    /// torsion exponent mod the ambient cyclotomic order
    pub torsion: i64,
}

impl EllipticGroupElem {
    pub fn identity(rank: usize) -> Self {
        EllipticGroupElem {
            exps: vec![(0, 0); rank],
            torsion: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.exps.len()
    }

    pub fn combine(&self, other: &Self, order: usize) -> Self {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&(a1, b1), &(a2, b2))| (a1 + a2, b1 + b2))
            .collect();
        EllipticGroupElem {
            exps,
            torsion: (self.torsion + other.torsion).rem_euclid(order as i64),
        }
    }

    pub fn inverse(&self, order: usize) -> Self {
        EllipticGroupElem {
            exps: self.exps.iter().map(|&(a, b)| (-a, -b)).collect(),
            torsion: (-self.torsion).rem_euclid(order as i64),
        }
    }

    /// Negate only the elliptic part (z -> -z on the elliptic variables).
    pub fn negate_elliptic(&self) -> Self {
        EllipticGroupElem {
            exps: self.exps.iter().map(|&(a, b)| (-a, -b)).collect(),
            torsion: self.torsion,
        }
    }

    /// Scale the elliptic exponents by an integer (z -> d*z).
    pub fn scale_elliptic(&self, d: i64) -> Self {
        EllipticGroupElem {
            exps: self.exps.iter().map(|&(a, b)| (d * a, d * b)).collect(),
            torsion: self.torsion,
        }
    }
}

/// Finite Q-linear combination of EllipticGroupElem monomials.
///
/// Equivalently a module over the order-4D cyclotomic group algebra: the
/// CycElem coefficient of a pure elliptic monomial is spread over the torsion
/// slots of its terms. No zero coefficients are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAlgebraElem {
    pub rank: usize,
    pub order: usize,
    pub terms: BTreeMap<EllipticGroupElem, Rational>,
}

impl GroupAlgebraElem {
    pub fn zero(rank: usize, order: usize) -> Self {
        GroupAlgebraElem {
            rank,
            order,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rank: usize, order: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(EllipticGroupElem::identity(rank), Rational::one());
        GroupAlgebraElem {
            rank,
            order,
            terms,
        }
    }

    pub fn monomial(rank: usize, order: usize, m: EllipticGroupElem, c: Rational) -> Self {
        let mut z = Self::zero(rank, order);
        z.add_term(m, c);
        z
    }

    pub fn from_cyc(rank: usize, c: &CycElem) -> Self {
        let mut z = Self::zero(rank, c.order());
        for (t, a) in c.coords().iter().enumerate() {
            if !a.is_zero() {
                let mut m = EllipticGroupElem::identity(rank);
                m.torsion = t as i64;
                z.add_term(m, a.clone());
            }
        }
        z
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: EllipticGroupElem, c: Rational) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(m.exps.len(), self.rank);
        let became_zero = {
            let entry = self.terms.entry(m.clone()).or_insert_with(Rational::zero);
            *entry += c;
            entry.is_zero()
        };
        if became_zero {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        GroupAlgebraElem {
            rank: self.rank,
            order: self.order,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.rank, self.order);
        }
        GroupAlgebraElem {
            rank: self.rank,
            order: self.order,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let mut out = Self::zero(self.rank, self.order);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.combine(m2, self.order), c1 * c2);
            }
        }
        Ok(out)
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if self.rank != other.rank || self.order != other.order {
            return Err(Error::RingMismatch(format!(
                "group algebra rank/order ({},{}) vs ({},{})",
                self.rank, self.order, other.rank, other.order
            )));
        }
        Ok(())
    }

    /// Negate all elliptic exponents (the underlying z -> -z).
    pub fn negate_elliptic(&self) -> Self {
        GroupAlgebraElem {
            rank: self.rank,
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.negate_elliptic(), c.clone()))
                .collect(),
        }
    }

    pub fn scale_elliptic(&self, d: i64) -> Self {
        GroupAlgebraElem {
            rank: self.rank,
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.scale_elliptic(d), c.clone()))
                .collect(),
        }
    }

    /// CycElem coefficient attached to a given elliptic exponent vector.
    pub fn coefficient_cyc(&self, exps: &[(i64, i64)]) -> CycElem {
        let mut c = CycElem::zero(self.order);
        for (m, a) in &self.terms {
            if m.exps == exps {
                let t = m.torsion.rem_euclid(self.order as i64) as usize;
                c.coords[t] += a;
            }
        }
        c
    }

    /// Sum of all coefficients after substituting every elliptic variable by 1
    /// and X by 1 as well (used for divisor-order checks at zeta = 1).
    pub fn eval_all_ones(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |acc, c| acc + c)
    }

    /// Substitute the elliptic variables away at zeta = 1, keeping torsion:
    /// the image in the cyclotomic group algebra.
    pub fn eval_elliptic_one(&self) -> CycElem {
        let mut c = CycElem::zero(self.order);
        for (m, a) in &self.terms {
            let t = m.torsion.rem_euclid(self.order as i64) as usize;
            c.coords[t] += a;
        }
        c
    }
}
