//! Integer partitions, cell geometry and plethystic evaluation of `e_k`, `h_k`
//! at finite signed monomial alphabets such as `B_mu`, `B_mu - 1` and
//! `(1-t) B_mu`.
//!
//! A cell is `(coarm, coleg)` = (column, row), both 0-based, with row 0 the
//! longest part. For a cell `c`:
//! `arm = mu_row - 1 - col`, `leg = mu'_col - 1 - row`.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::qt_algebra::QtPoly;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("parts must be positive and weakly decreasing: {0:?}")]
    Invalid(Vec<u32>),
    #[error("the product over non-corner cells is undefined for the empty partition")]
    Empty,
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = PartitionError;
    fn try_from(parts: Vec<u32>) -> Result<Self, Self::Error> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.parts
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.parts)
    }
}

/// Cell of a Ferrers diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Cell {
    pub coarm: u32,
    pub coleg: u32,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::Invalid(parts));
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let w = self.parts.first().copied().unwrap_or(0);
        let parts = (0..w)
            .map(|j| self.parts.iter().filter(|&&p| p > j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Cells in row-major order, row 0 first.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts.iter().enumerate().flat_map(|(row, &p)| {
            (0..p).map(move |col| Cell {
                coarm: col,
                coleg: row as u32,
            })
        })
    }

    pub fn arm(&self, c: Cell) -> u32 {
        self.parts[c.coleg as usize] - 1 - c.coarm
    }

    pub fn leg(&self, c: Cell) -> u32 {
        let col_len = self.parts.iter().filter(|&&p| p > c.coarm).count() as u32;
        col_len - 1 - c.coleg
    }
}

/// All partitions of `n` in reverse lexicographic order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn go(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            go(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// `B_mu = sum over cells of q^coarm t^coleg`.
pub fn b_mu(mu: &Partition) -> QtPoly {
    let mut p = QtPoly::zero();
    for c in mu.cells() {
        p.add_term((c.coarm, c.coleg), 1.into());
    }
    p
}

/// `T_mu = product over cells of q^coarm t^coleg`.
pub fn t_mu(mu: &Partition) -> QtPoly {
    let (a, b) = mu
        .cells()
        .fold((0, 0), |(a, b), c| (a + c.coarm, b + c.coleg));
    QtPoly::monomial(a, b, 1)
}

/// `Pi_mu = product over cells other than (0,0) of (1 - q^coarm t^coleg)`.
pub fn pi_mu(mu: &Partition) -> Result<QtPoly, PartitionError> {
    if mu.is_empty() {
        return Err(PartitionError::Empty);
    }
    let one = QtPoly::one();
    Ok(mu
        .cells()
        .filter(|c| (c.coarm, c.coleg) != (0, 0))
        .fold(QtPoly::one(), |acc, c| {
            &acc * &(&one - &QtPoly::monomial(c.coarm, c.coleg, 1))
        }))
}

/// `w_mu = product over cells of (q^arm - t^(leg+1)) (t^leg - q^(arm+1))`.
pub fn w_mu(mu: &Partition) -> QtPoly {
    mu.cells().fold(QtPoly::one(), |acc, c| {
        let (a, l) = (mu.arm(c), mu.leg(c));
        let f1 = &QtPoly::monomial(a, 0, 1) - &QtPoly::monomial(0, l + 1, 1);
        let f2 = &QtPoly::monomial(0, l, 1) - &QtPoly::monomial(a + 1, 0, 1);
        &(&acc * &f1) * &f2
    })
}

/// `M = (1-q)(1-t)`.
pub fn m_factor() -> QtPoly {
    let one = QtPoly::one();
    &(&one - &QtPoly::q()) * &(&one - &QtPoly::t())
}

/// `D_mu = M B_mu - 1`.
pub fn d_mu(mu: &Partition) -> QtPoly {
    &(&m_factor() * &b_mu(mu)) - &QtPoly::one()
}

/// Finite multiset of signed monomials `±q^a t^b`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MonomialAlphabet {
    /// `(sign, a, b)` with `sign` in `{1, -1}`.
    letters: Vec<(i8, u32, u32)>,
}

impl MonomialAlphabet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Alphabet of a polynomial whose coefficients are read as signed
    /// multiplicities, e.g. `B_mu` or `(1-t) B_mu`.
    pub fn from_poly(p: &QtPoly) -> Self {
        let mut letters = Vec::new();
        for (&(a, b), c) in p.terms() {
            let sign: i8 = if c.sign() == num_bigint::Sign::Minus {
                -1
            } else {
                1
            };
            let mult: u64 = num_traits::ToPrimitive::to_u64(&num_traits::Signed::abs(c))
                .expect("alphabet multiplicity fits in u64");
            for _ in 0..mult {
                letters.push((sign, a, b));
            }
        }
        Self { letters }
    }

    /// `{1, q, ..., q^(n-1)}`, i.e. `[n]_q`.
    pub fn q_int(n: u32) -> Self {
        Self {
            letters: (0..n).map(|i| (1, i, 0)).collect(),
        }
    }

    pub fn push(&mut self, sign: i8, a: u32, b: u32) {
        assert!(sign == 1 || sign == -1);
        self.letters.push((sign, a, b));
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Self { letters }
    }

    pub fn negate(&self) -> Self {
        Self {
            letters: self.letters.iter().map(|&(s, a, b)| (-s, a, b)).collect(),
        }
    }

    /// The alphabet as a polynomial (sum of its signed letters).
    pub fn as_poly(&self) -> QtPoly {
        let mut p = QtPoly::zero();
        for &(s, a, b) in &self.letters {
            p.add_term((a, b), BigInt::from(s));
        }
        p
    }

    fn series(&self, k: usize, elementary: bool) -> Vec<QtPoly> {
        // Truncated generating series in z. A positive letter x contributes
        // (1 + xz) to E and 1/(1 - xz) to H; a negative letter the inverses.
        let mut s = vec![QtPoly::zero(); k + 1];
        s[0] = QtPoly::one();
        for &(sign, a, b) in &self.letters {
            let polynomial_factor = (sign == 1) == elementary;
            let step_sign: i64 = if elementary { 1 } else { -1 };
            // factor is (1 + c x z) or its inverse, with c = step_sign
            if polynomial_factor {
                for d in (1..=k).rev() {
                    let add = s[d - 1].shift(a, b).scale(&BigInt::from(step_sign));
                    s[d] += &add;
                }
            } else {
                // 1/(1 + c x z): s[d] -= c x s[d-1], in increasing d
                for d in 1..=k {
                    let sub = s[d - 1].shift(a, b).scale(&BigInt::from(step_sign));
                    s[d] -= &sub;
                }
            }
        }
        s
    }

    /// `e_k` evaluated at the alphabet.
    pub fn e(&self, k: i64) -> QtPoly {
        if k < 0 {
            return QtPoly::zero();
        }
        self.series(k as usize, true).pop().unwrap()
    }

    /// `h_k` evaluated at the alphabet.
    pub fn h(&self, k: i64) -> QtPoly {
        if k < 0 {
            return QtPoly::zero();
        }
        self.series(k as usize, false).pop().unwrap()
    }
}

pub fn e_pleth(k: i64, a: &MonomialAlphabet) -> QtPoly {
    a.e(k)
}

pub fn h_pleth(k: i64, a: &MonomialAlphabet) -> QtPoly {
    a.h(k)
}

/// Alphabet `B_mu - 1`.
pub fn b_mu_minus_one(mu: &Partition) -> MonomialAlphabet {
    MonomialAlphabet::from_poly(&(&b_mu(mu) - &QtPoly::one()))
}

/// Alphabet `(1-t) B_mu`.
pub fn one_minus_t_b_mu(mu: &Partition) -> MonomialAlphabet {
    MonomialAlphabet::from_poly(&(&b_mu(mu) - &b_mu(mu).shift(0, 1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qt_algebra::{choose2, q_binom};

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    /// Euler's pentagonal recurrence, independent of the generator.
    fn pentagonal_count(n: usize) -> Vec<i64> {
        let mut pn = vec![0i64; n + 1];
        pn[0] = 1;
        for i in 1..=n {
            let mut k: i64 = 1;
            loop {
                let g1 = (k * (3 * k - 1) / 2) as usize;
                if g1 > i {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                pn[i] += sign * pn[i - g1];
                let g2 = (k * (3 * k + 1) / 2) as usize;
                if g2 <= i {
                    pn[i] += sign * pn[i - g2];
                }
                k += 1;
            }
        }
        pn
    }

    #[test]
    fn partition_counts() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(4).len(), 5);
        assert_eq!(partitions_of(10).len(), 42);
        let pn = pentagonal_count(15);
        for n in 0..=15 {
            assert_eq!(partitions_of(n as u32).len() as i64, pn[n]);
        }
    }

    #[test]
    fn reverse_lex_order() {
        let got: Vec<Vec<u32>> = partitions_of(4).into_iter().map(Vec::from).collect();
        assert_eq!(
            got,
            vec![
                vec![4],
                vec![3, 1],
                vec![2, 2],
                vec![2, 1, 1],
                vec![1, 1, 1, 1]
            ]
        );
    }

    #[test]
    fn invalid_partitions_rejected() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
        assert_eq!(serde_json::to_string(&p(&[3, 1])).unwrap(), "[3,1]");
    }

    #[test]
    fn invariants_small() {
        assert_eq!(b_mu(&p(&[1])), QtPoly::one());
        let mut expect = QtPoly::one();
        expect += &QtPoly::q();
        expect += &QtPoly::t();
        assert_eq!(b_mu(&p(&[2, 1])), expect);
        assert_eq!(t_mu(&p(&[1])), QtPoly::one());
        assert_eq!(pi_mu(&p(&[1])).unwrap(), QtPoly::one());
        assert_eq!(pi_mu(&Partition::empty()), Err(PartitionError::Empty));
        assert_eq!(w_mu(&p(&[1])), m_factor());
        assert_eq!(t_mu(&p(&[2, 2])), QtPoly::monomial(2, 2, 1));
        assert_eq!(b_mu(&p(&[3, 1]).conjugate()), b_mu(&p(&[3, 1])).swap_qt());
    }

    #[test]
    fn conjugation_swaps_q_and_t() {
        for n in 1..=8 {
            for mu in partitions_of(n) {
                let c = mu.conjugate();
                assert_eq!(b_mu(&c), b_mu(&mu).swap_qt());
                assert_eq!(t_mu(&c), t_mu(&mu).swap_qt());
                assert_eq!(pi_mu(&c).unwrap(), pi_mu(&mu).unwrap().swap_qt());
                assert_eq!(w_mu(&c), w_mu(&mu).swap_qt());
            }
        }
    }

    #[test]
    fn e1_and_top_e_of_b_mu() {
        for n in 1..=8 {
            for mu in partitions_of(n) {
                let a = MonomialAlphabet::from_poly(&b_mu(&mu));
                assert_eq!(a.e(1), b_mu(&mu));
                assert_eq!(a.e(n as i64), t_mu(&mu));
                assert!(a.e(n as i64 + 1).is_zero());
            }
        }
        let a = MonomialAlphabet::from_poly(&b_mu(&p(&[3, 2])));
        assert_eq!(a.e(5), t_mu(&p(&[3, 2])));
    }

    #[test]
    fn e_h_of_q_integers() {
        for n in 0..=8u32 {
            let a = MonomialAlphabet::q_int(n);
            for k in 0..=8i64 {
                assert_eq!(a.e(k), q_binom(n as i64, k).shift(choose2(k), 0));
                if n > 0 {
                    assert_eq!(a.h(k), q_binom(n as i64 + k - 1, k));
                }
            }
        }
    }

    #[test]
    fn negation_rules() {
        let a = MonomialAlphabet::from_poly(&b_mu(&p(&[2, 1])));
        let neg = a.negate();
        for r in 0..=5i64 {
            let sign = BigInt::from(if r % 2 == 0 { 1 } else { -1 });
            assert_eq!(neg.e(r), a.h(r).scale(&sign));
            assert_eq!(neg.h(r), a.e(r).scale(&sign));
        }
        assert_eq!(a.e(0), QtPoly::one());
        assert!(a.h(-1).is_zero());
        assert!(b_mu_minus_one(&p(&[1])).e(1).is_zero());
    }

    #[test]
    fn sum_rule_for_unions() {
        let x = MonomialAlphabet::from_poly(&b_mu(&p(&[2, 1])));
        let y = one_minus_t_b_mu(&p(&[2]));
        let u = x.union(&y);
        for n in 0..=5i64 {
            let mut e = QtPoly::zero();
            let mut h = QtPoly::zero();
            for i in 0..=n {
                e += &(&x.e(n - i) * &y.e(i));
                h += &(&x.h(n - i) * &y.h(i));
            }
            assert_eq!(u.e(n), e);
            assert_eq!(u.h(n), h);
        }
    }

    #[test]
    fn w_mu_nonzero_at_primes() {
        let pt = crate::qt_algebra::EvalPoint::ints(2, 3).unwrap();
        for n in 1..=10 {
            for mu in partitions_of(n) {
                assert!(!num_traits::Zero::is_zero(&w_mu(&mu).eval(&pt)), "{mu:?}");
            }
        }
    }

    #[test]
    fn delta_prime_additivity() {
        for n in 1..=7 {
            for mu in partitions_of(n) {
                let b = MonomialAlphabet::from_poly(&b_mu(&mu));
                let b1 = b_mu_minus_one(&mu);
                for k in 0..=n as i64 + 1 {
                    assert_eq!(b.e(k), &b1.e(k) + &b1.e(k - 1));
                }
            }
        }
    }
}
