//! Exact sparse polynomials in two variables `q`, `t` with big-integer
//! coefficients, plus the q-analogues used throughout the crate.
//!
//! `[n]_q = 1 + q + ... + q^(n-1)`, Gaussian binomials via the Pascal
//! recursion, and `(a;q)_s = (1-a)(1-qa)...(1-q^(s-1)a)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};
use once_cell::sync::Lazy;
use parking_lot::RwLock;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Exponent pair `(deg_q, deg_t)`.
pub type Exp = (u32, u32);

/// Sparse polynomial in `q` and `t`. Zero coefficients are never stored, so
/// structural equality is polynomial equality.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct QtPoly {
    terms: BTreeMap<Exp, BigInt>,
}

impl QtPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, 1)
    }

    /// `c * q^a * t^b`.
    pub fn monomial(a: u32, b: u32, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term((a, b), c.into());
        p
    }

    pub fn q() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn t() -> Self {
        Self::monomial(0, 1, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(0, 0, c)
    }

    /// `(qt)^e`.
    pub fn qt_pow(e: u32) -> Self {
        Self::monomial(e, e, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exp, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, a: u32, b: u32) -> BigInt {
        self.terms.get(&(a, b)).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, e: Exp, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Multiply by `q^a t^b`.
    pub fn shift(&self, a: u32, b: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(x, y), c)| ((x + a, y + b), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&e, v)| (e, v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Maximum exponent of `q` (0 for the zero polynomial).
    pub fn deg_q(&self) -> u32 {
        self.terms.keys().map(|e| e.0).max().unwrap_or(0)
    }

    pub fn deg_t(&self) -> u32 {
        self.terms.keys().map(|e| e.1).max().unwrap_or(0)
    }

    /// Exchange the roles of `q` and `t`.
    pub fn swap_qt(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| ((b, a), c.clone()))
                .collect(),
        }
    }

    /// Exact substitution `q = q0`, `t = t0`.
    pub fn eval(&self, pt: &EvalPoint) -> BigRational {
        self.eval_at(&pt.q0, &pt.t0)
    }

    /// Substitution at arbitrary rationals (no admissibility check).
    pub fn eval_at(&self, q0: &BigRational, t0: &BigRational) -> BigRational {
        if q0.is_integer() && t0.is_integer() {
            return BigRational::from_integer(self.eval_int(q0.numer(), t0.numer()));
        }
        let mut qpow: HashMap<u32, BigRational> = HashMap::new();
        let mut tpow: HashMap<u32, BigRational> = HashMap::new();
        let mut acc = BigRational::zero();
        for (&(a, b), c) in &self.terms {
            let qa = qpow.entry(a).or_insert_with(|| Pow::pow(q0, a)).clone();
            let tb = tpow.entry(b).or_insert_with(|| Pow::pow(t0, b)).clone();
            acc += BigRational::from_integer(c.clone()) * qa * tb;
        }
        acc
    }

    /// Substitution at integers, staying in `BigInt`.
    pub fn eval_int(&self, q0: &BigInt, t0: &BigInt) -> BigInt {
        let powers = |x: &BigInt, d: u32| {
            let mut v = Vec::with_capacity(d as usize + 1);
            let mut cur = BigInt::one();
            for _ in 0..=d {
                v.push(cur.clone());
                cur *= x;
            }
            v
        };
        let qp = powers(q0, self.deg_q());
        let tp = powers(t0, self.deg_t());
        let mut acc = BigInt::zero();
        for (&(a, b), c) in &self.terms {
            acc += c * &qp[a as usize] * &tp[b as usize];
        }
        acc
    }

    /// Set `q = 1`; returns coefficients of `t^j` (no trailing zeros).
    pub fn specialize_q1(&self) -> Vec<BigInt> {
        let mut out: Vec<BigInt> = Vec::new();
        for (&(_, b), c) in &self.terms {
            let b = b as usize;
            if out.len() <= b {
                out.resize(b + 1, BigInt::zero());
            }
            out[b] += c;
        }
        while out.last().is_some_and(|c| c.is_zero()) {
            out.pop();
        }
        out
    }

    /// Value at `q = t = 1`.
    pub fn at_one(&self) -> BigInt {
        self.terms.values().sum()
    }
}

impl fmt::Debug for QtPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for QtPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(a, b), c) in &self.terms {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let mono = match (a, b) {
                (0, 0) => String::new(),
                _ => {
                    let mut s = Vec::new();
                    match a {
                        0 => {}
                        1 => s.push("q".to_string()),
                        _ => s.push(format!("q^{a}")),
                    }
                    match b {
                        0 => {}
                        1 => s.push("t".to_string()),
                        _ => s.push(format!("t^{b}")),
                    }
                    s.join("*")
                }
            };
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for QtPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<(u32, u32, String)> = self
            .terms
            .iter()
            .map(|(&(a, b), c)| (a, b, c.to_string()))
            .collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for QtPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v: Vec<(u32, u32, String)> = Vec::deserialize(d)?;
        let mut p = QtPoly::zero();
        let mut prev: Option<Exp> = None;
        for (a, b, c) in v {
            if prev.is_some_and(|e| e >= (a, b)) {
                return Err(D::Error::custom(
                    "terms must be strictly sorted by (deg_q, deg_t)",
                ));
            }
            prev = Some((a, b));
            let c: BigInt = c.parse().map_err(D::Error::custom)?;
            if c.is_zero() {
                return Err(D::Error::custom("zero coefficient in polynomial"));
            }
            p.add_term((a, b), c);
        }
        Ok(p)
    }
}

impl<'a> Add<&'a QtPoly> for &QtPoly {
    type Output = QtPoly;
    fn add(self, rhs: &'a QtPoly) -> QtPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for QtPoly {
    type Output = QtPoly;
    fn add(mut self, rhs: QtPoly) -> QtPoly {
        self += &rhs;
        self
    }
}

impl<'a> AddAssign<&'a QtPoly> for QtPoly {
    fn add_assign(&mut self, rhs: &'a QtPoly) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c.clone());
        }
    }
}

impl AddAssign for QtPoly {
    fn add_assign(&mut self, rhs: QtPoly) {
        *self += &rhs;
    }
}

impl<'a> SubAssign<&'a QtPoly> for QtPoly {
    fn sub_assign(&mut self, rhs: &'a QtPoly) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, -c.clone());
        }
    }
}

impl<'a> Sub<&'a QtPoly> for &QtPoly {
    type Output = QtPoly;
    fn sub(self, rhs: &'a QtPoly) -> QtPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for QtPoly {
    type Output = QtPoly;
    fn sub(mut self, rhs: QtPoly) -> QtPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &QtPoly {
    type Output = QtPoly;
    fn neg(self) -> QtPoly {
        QtPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Neg for QtPoly {
    type Output = QtPoly;
    fn neg(self) -> QtPoly {
        -&self
    }
}

impl<'a> Mul<&'a QtPoly> for &QtPoly {
    type Output = QtPoly;
    fn mul(self, rhs: &'a QtPoly) -> QtPoly {
        let mut out = QtPoly::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.add_term((a1 + a2, b1 + b2), c1 * c2);
            }
        }
        out
    }
}

impl Mul for QtPoly {
    type Output = QtPoly;
    fn mul(self, rhs: QtPoly) -> QtPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for QtPoly {
    fn sum<I: Iterator<Item = QtPoly>>(iter: I) -> QtPoly {
        let mut acc = QtPoly::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}

/// Point at which polynomials and oracle sums are evaluated.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EvalPoint {
    #[serde(with = "rational_str")]
    pub q0: BigRational,
    #[serde(with = "rational_str")]
    pub t0: BigRational,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
#[error("evaluation point must avoid q,t in {{0, 1}}")]
pub struct DegeneratePoint;

impl EvalPoint {
    pub fn new(q0: BigRational, t0: BigRational) -> Result<Self, DegeneratePoint> {
        let bad = |x: &BigRational| x.is_zero() || x.is_one();
        if bad(&q0) || bad(&t0) {
            return Err(DegeneratePoint);
        }
        Ok(Self { q0, t0 })
    }

    pub fn ints(q0: i64, t0: i64) -> Result<Self, DegeneratePoint> {
        Self::new(
            BigRational::from_integer(q0.into()),
            BigRational::from_integer(t0.into()),
        )
    }
}

impl fmt::Display for EvalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(q={}, t={})", self.q0, self.t0)
    }
}

pub(crate) mod rational_str {
    use num_rational::BigRational;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&x.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(D::Error::custom)
    }
}

/// `[n]_q = 1 + q + ... + q^(n-1)`; `[0]_q = 0`.
pub fn q_int(n: u32) -> QtPoly {
    let mut p = QtPoly::zero();
    for i in 0..n {
        p.add_term((i, 0), BigInt::one());
    }
    p
}

/// `[n]_q! = [1]_q [2]_q ... [n]_q`.
pub fn q_factorial(n: u32) -> QtPoly {
    (1..=n).fold(QtPoly::one(), |acc, i| &acc * &q_int(i))
}

/// `q^e` as a polynomial.
pub fn q_pow(e: u32) -> QtPoly {
    QtPoly::monomial(e, 0, 1)
}

/// `t^e` as a polynomial.
pub fn t_pow(e: u32) -> QtPoly {
    QtPoly::monomial(0, e, 1)
}

/// `binom(n, 2)` for nonnegative `n`.
pub fn choose2(n: i64) -> u32 {
    if n < 2 {
        0
    } else {
        (n * (n - 1) / 2) as u32
    }
}

static QBINOM: Lazy<RwLock<HashMap<(u32, u32), QtPoly>>> = Lazy::new(Default::default);

/// Gaussian binomial `[n choose k]_q`, zero when `k < 0` or `n < k`.
///
/// Memoized through `[n,k] = [n-1,k-1] + q^k [n-1,k]`; the cache is shared
/// across threads.
pub fn q_binom(n: i64, k: i64) -> QtPoly {
    if k < 0 || n < 0 || n < k {
        return QtPoly::zero();
    }
    if k == 0 || k == n {
        return QtPoly::one();
    }
    let key = (n as u32, k as u32);
    if let Some(p) = QBINOM.read().get(&key) {
        return p.clone();
    }
    let p = &q_binom(n - 1, k - 1) + &q_binom(n - 1, k).shift(k as u32, 0);
    QBINOM.write().entry(key).or_insert(p).clone()
}

/// The other Pascal form `[n,k] = q^(n-k)[n-1,k-1] + [n-1,k]`, unmemoized.
/// Kept as an independent route for cross-checking `q_binom`.
pub fn q_binom_alt(n: i64, k: i64) -> QtPoly {
    if k < 0 || n < 0 || n < k {
        return QtPoly::zero();
    }
    if k == 0 || k == n {
        return QtPoly::one();
    }
    &q_binom_alt(n - 1, k - 1).shift((n - k) as u32, 0) + &q_binom_alt(n - 1, k)
}

/// `(a;q)_s = (1-a)(1-qa)...(1-q^(s-1)a)`.
pub fn q_rising(a: &QtPoly, s: u32) -> QtPoly {
    let one = QtPoly::one();
    (0..s).fold(QtPoly::one(), |acc, i| &acc * &(&one - &a.shift(i, 0)))
}
