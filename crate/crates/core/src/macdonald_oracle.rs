//! Symmetric-function side of the identities: modified Macdonald
//! polynomials in finitely many variables from the fillings formula, the
//! partition sums for the scalar products, and certification of equality
//! with a combinatorial polynomial on a grid of integer points.
//!
//! Conventions for fillings: French diagram, row 0 at the bottom. A descent
//! is a cell whose entry exceeds the entry directly below it and weighs
//! `leg + 1`. Two cells attack when they share a row, or when they sit in
//! adjacent rows with the upper one strictly to the right. Cells are read
//! top row first, left to right; `inv` counts attacking pairs read in
//! decreasing order, minus the arms of the descents.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use once_cell::sync::Lazy;
use parking_lot::RwLock;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::labelled_objects::{all_labellings, all_pdp, monomial, LabelledPolyomino};
use crate::partition_core::{
    b_mu, b_mu_minus_one, e_pleth, h_pleth, m_factor, one_minus_t_b_mu, partitions_of, pi_mu, t_mu,
    w_mu, MonomialAlphabet, Partition,
};
use crate::polyomino_core::all_polyominoes;
use crate::qt_algebra::{EvalPoint, QtPoly};

/// Largest diagram handled by the fillings formula.
pub const FILLING_CAP: u32 = 8;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("|mu| = {0} exceeds the fillings cap {FILLING_CAP}")]
    Cap(u32),
    #[error("denominator vanishes at {0}")]
    Pole(String),
    #[error("combinatorial degree ({dq}, {dt}) exceeds the declared bound ({bq}, {bt})")]
    Bound { dq: u32, dt: u32, bq: u32, bt: u32 },
    #[error("no admissible grid point left")]
    Grid,
}

/// Polynomials with coefficients in `Z[q,t]`, keyed by exponent vectors.
pub type MultiSeries = BTreeMap<Vec<u32>, QtPoly>;

struct Diagram {
    rows: Vec<usize>,
    /// `(row, col)` in reading order: top row first, left to right.
    reading: Vec<(usize, usize)>,
}

impl Diagram {
    fn new(mu: &Partition) -> Self {
        let rows: Vec<usize> = mu.parts().iter().map(|&p| p as usize).collect();
        let mut reading = Vec::new();
        for i in (0..rows.len()).rev() {
            for j in 0..rows[i] {
                reading.push((i, j));
            }
        }
        Self { rows, reading }
    }

    fn arm(&self, (i, j): (usize, usize)) -> u32 {
        (self.rows[i] - 1 - j) as u32
    }

    fn leg(&self, (i, j): (usize, usize)) -> u32 {
        self.rows[i + 1..].iter().filter(|&&r| r > j).count() as u32
    }

    /// `(inv, maj)` of a filling given in reading order.
    fn stats(&self, fill: &[u32]) -> (u32, u32) {
        let pos: HashMap<(usize, usize), usize> = self
            .reading
            .iter()
            .enumerate()
            .map(|(p, &c)| (c, p))
            .collect();
        let mut maj = 0;
        let mut arms = 0;
        for (p, &(i, j)) in self.reading.iter().enumerate() {
            if i > 0 && fill[p] > fill[pos[&(i - 1, j)]] {
                maj += self.leg((i, j)) + 1;
                arms += self.arm((i, j));
            }
        }
        let mut inv = 0;
        for (p, &(i, j)) in self.reading.iter().enumerate() {
            for (p2, &(i2, j2)) in self.reading.iter().enumerate().skip(p + 1) {
                let attack = i2 == i || (i2 + 1 == i && j > j2);
                if attack && fill[p] > fill[p2] {
                    inv += 1;
                }
            }
        }
        (inv - arms, maj)
    }
}

/// `H~_mu[x_1 + ... + x_N; q, t]` as a sum over all fillings.
pub fn hhl_macdonald(mu: &Partition, n_vars: usize) -> Result<MultiSeries, OracleError> {
    if mu.size() > FILLING_CAP {
        return Err(OracleError::Cap(mu.size()));
    }
    let d = Diagram::new(mu);
    let cells = d.reading.len();
    let mut out = MultiSeries::new();
    let mut fill = vec![1u32; cells];
    loop {
        let (inv, maj) = d.stats(&fill);
        let key = monomial(&fill, n_vars).expect("entries within range");
        out.entry(key)
            .or_insert_with(QtPoly::zero)
            .add_term((inv, maj), BigInt::one());
        let mut p = 0;
        while p < cells && fill[p] == n_vars as u32 {
            fill[p] = 1;
            p += 1;
        }
        if p == cells {
            break;
        }
        fill[p] += 1;
    }
    out.retain(|_, v| !v.is_zero());
    Ok(out)
}

static COEFF: Lazy<RwLock<HashMap<(Partition, Vec<u32>), QtPoly>>> = Lazy::new(Default::default);

/// Coefficient of `x^alpha` in `H~_mu`, summing only fillings of that
/// content.
pub fn hhl_coeff(mu: &Partition, alpha: &[u32]) -> Result<QtPoly, OracleError> {
    if mu.size() > FILLING_CAP {
        return Err(OracleError::Cap(mu.size()));
    }
    if alpha.iter().sum::<u32>() != mu.size() {
        return Ok(QtPoly::zero());
    }
    let key = (mu.clone(), alpha.to_vec());
    if let Some(v) = COEFF.read().get(&key) {
        return Ok(v.clone());
    }
    let d = Diagram::new(mu);
    let mut content: Vec<u32> = Vec::new();
    for (i, &a) in alpha.iter().enumerate() {
        content.extend(std::iter::repeat_n(i as u32 + 1, a as usize));
    }
    let mut total = QtPoly::zero();
    // content is sorted, so this walks every distinct arrangement once
    loop {
        let (inv, maj) = d.stats(&content);
        total.add_term((inv, maj), BigInt::one());
        if !next_permutation(&mut content) {
            break;
        }
    }
    COEFF.write().insert(key, total.clone());
    Ok(total)
}

fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// `<H~_mu, s_lambda>` through Jacobi-Trudi:
/// `sum_w sgn(w) [x^(lambda + delta - w(delta))] H~_mu`.
pub fn schur_pairing(mu: &Partition, lambda: &Partition) -> Result<QtPoly, OracleError> {
    let l = lambda.len();
    let parts = lambda.parts();
    let mut total = QtPoly::zero();
    let mut perm: Vec<usize> = (0..l).collect();
    loop {
        let alpha: Option<Vec<u32>> = (0..l)
            .map(|i| {
                let v = parts[i] as i64 - i as i64 + perm[i] as i64;
                (v >= 0).then_some(v as u32)
            })
            .collect();
        if let Some(alpha) = alpha {
            let c = hhl_coeff(mu, &alpha)?;
            if sign(&perm) > 0 {
                total += c;
            } else {
                total -= &c;
            }
        }
        if !next_perm_usize(&mut perm) {
            break;
        }
    }
    Ok(total)
}

fn sign(p: &[usize]) -> i32 {
    let mut s = 1;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                s = -s;
            }
        }
    }
    s
}

fn next_perm_usize(v: &mut [usize]) -> bool {
    let mut w: Vec<u32> = v.iter().map(|&x| x as u32).collect();
    let more = next_permutation(&mut w);
    for (a, b) in v.iter_mut().zip(w) {
        *a = b as usize;
    }
    more
}

/// Hook partition `(n - r, 1^r)`.
pub fn hook(n: u32, r: u32) -> Partition {
    let mut parts = vec![n - r];
    parts.extend(std::iter::repeat_n(1, r as usize));
    Partition::new(parts).expect("hook shape")
}

/// Finite sum of `numerator / denominator` evaluated exactly at points.
#[derive(Clone, Debug, Default)]
pub struct PartitionSum {
    pub terms: Vec<(QtPoly, QtPoly)>,
}

impl PartitionSum {
    pub fn constant(p: QtPoly) -> Self {
        Self {
            terms: vec![(p, QtPoly::one())],
        }
    }

    pub fn push(&mut self, num: QtPoly, den: QtPoly) {
        if !num.is_zero() {
            self.terms.push((num, den));
        }
    }

    pub fn eval(&self, pt: &EvalPoint) -> Result<BigRational, OracleError> {
        if pt.q0.is_integer() && pt.t0.is_integer() {
            // common-denominator accumulation, one reduction at the end
            let (q0, t0) = (pt.q0.numer(), pt.t0.numer());
            let mut acc_n = BigInt::zero();
            let mut acc_d = BigInt::one();
            for (num, den) in &self.terms {
                let d = den.eval_int(q0, t0);
                if d.is_zero() {
                    return Err(OracleError::Pole(pt.to_string()));
                }
                let n = num.eval_int(q0, t0);
                acc_n = acc_n * &d + n * &acc_d;
                acc_d *= d;
            }
            return Ok(BigRational::new(acc_n, acc_d));
        }
        let mut acc = BigRational::zero();
        for (num, den) in &self.terms {
            let d = den.eval(pt);
            if d.is_zero() {
                return Err(OracleError::Pole(pt.to_string()));
            }
            acc += num.eval(pt) / d;
        }
        Ok(acc)
    }

    pub fn add(mut self, other: PartitionSum) -> Self {
        self.terms.extend(other.terms);
        self
    }
}

fn generic_term(mu: &Partition) -> QtPoly {
    &(&m_factor() * &b_mu(mu)) * &pi_mu(mu).expect("nonempty partition")
}

fn b_alphabet(mu: &Partition) -> MonomialAlphabet {
    MonomialAlphabet::from_poly(&b_mu(mu))
}

/// `<Delta_{h_m} e_{n+1}, s_{(k+1, 1^(n-k))}>`
/// `= sum_{mu |- n+1} M B_mu Pi_mu h_m[B_mu] e_{n-k}[B_mu - 1] / w_mu`.
pub fn scalar_hook(m: u32, n: u32, k: u32) -> PartitionSum {
    let mut s = PartitionSum::default();
    if k > n {
        return s;
    }
    for mu in partitions_of(n + 1) {
        let num = &(&generic_term(&mu) * &h_pleth(m as i64, &b_alphabet(&mu)))
            * &e_pleth((n - k) as i64, &b_mu_minus_one(&mu));
        s.push(num, w_mu(&mu));
    }
    s
}

/// `<Delta'_{e_{m+n-k-1}} e_{m+n}, h_m h_n>`, with `<H~_mu, h_m h_n>` read
/// off the fillings as the coefficient of `x_1^m x_2^n`.
pub fn delta_hh(m: u32, n: u32, k: u32) -> Result<PartitionSum, OracleError> {
    let mut s = PartitionSum::default();
    let d = m as i64 + n as i64 - k as i64 - 1;
    if m + n == 0 || d < 0 {
        return Ok(s);
    }
    for mu in partitions_of(m + n) {
        let c = hhl_coeff(&mu, &[m, n])?;
        let num = &(&generic_term(&mu) * &e_pleth(d, &b_mu_minus_one(&mu))) * &c;
        s.push(num, w_mu(&mu));
    }
    Ok(s)
}

/// `t^l <Delta_{h_l} Delta_{e_k} e_n[X [r]_q], e_n>` with `l = m - k - r + 1`:
/// `t^l (1 - q^r) sum_{mu |- n} h_r[(1-t) B_mu] Pi_mu h_l[B_mu] e_k[B_mu] T_mu / w_mu`.
/// For `n = 0` the pairing is `h_l[0] e_k[0]`.
pub fn sf_sum_term(m: u32, n: u32, k: u32, r: u32) -> PartitionSum {
    let l = m as i64 - k as i64 - r as i64 + 1;
    let mut s = PartitionSum::default();
    if l < 0 {
        return s;
    }
    if n == 0 {
        if l == 0 && k == 0 {
            s.push(QtPoly::one(), QtPoly::one());
        }
        return s;
    }
    let prefactor =
        &QtPoly::monomial(0, l as u32, 1) * &(QtPoly::one() - QtPoly::monomial(r, 0, 1));
    for mu in partitions_of(n) {
        let b = b_alphabet(&mu);
        let num = [
            h_pleth(r as i64, &one_minus_t_b_mu(&mu)),
            pi_mu(&mu).expect("nonempty partition"),
            h_pleth(l, &b),
            e_pleth(k as i64, &b),
            t_mu(&mu),
        ]
        .iter()
        .fold(prefactor.clone(), |acc, f| &acc * f);
        s.push(num, w_mu(&mu));
    }
    s
}

/// Which conjectural identity to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConjectureKind {
    /// `Delta_{h_{m-1}} e_n` against labelled `m x n` polyominoes, `q^area t^pmaj`.
    LpPmaj,
    /// As `LpPmaj` with area lowered by `m + n - 1`.
    LpPmajShifted,
    /// `Delta_{h_m} Delta'_{e_{n-k}} e_{n+1}` against `q^uarea t^pmaj` on
    /// partially labelled Dyck paths.
    PdpPmaj,
    /// Same symmetric function against `q^dinv t^uarea`.
    PdpDinv,
}

impl ConjectureKind {
    pub const ALL: [ConjectureKind; 4] = [
        ConjectureKind::LpPmaj,
        ConjectureKind::LpPmajShifted,
        ConjectureKind::PdpPmaj,
        ConjectureKind::PdpDinv,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ConjectureKind::LpPmaj => "lp_pmaj",
            ConjectureKind::LpPmajShifted => "lp_pmaj_shifted",
            ConjectureKind::PdpPmaj => "pdp_pmaj",
            ConjectureKind::PdpDinv => "pdp_dinv",
        }
    }

    /// Degree of the symmetric function.
    pub fn degree(self, n: u32) -> u32 {
        match self {
            ConjectureKind::LpPmaj | ConjectureKind::LpPmajShifted => n,
            _ => n + 1,
        }
    }
}

/// Coefficient of `x^alpha` on the symmetric-function side.
pub fn conjecture_lhs(
    kind: ConjectureKind,
    m: u32,
    n: u32,
    k: u32,
    alpha: &[u32],
) -> Result<PartitionSum, OracleError> {
    let mut s = PartitionSum::default();
    let size = kind.degree(n);
    if size == 0 {
        return Ok(s);
    }
    for mu in partitions_of(size) {
        let c = hhl_coeff(&mu, alpha)?;
        if c.is_zero() {
            continue;
        }
        let b = b_alphabet(&mu);
        let f = match kind {
            ConjectureKind::LpPmaj | ConjectureKind::LpPmajShifted => h_pleth(m as i64 - 1, &b),
            _ => &h_pleth(m as i64, &b) * &e_pleth(n as i64 - k as i64, &b_mu_minus_one(&mu)),
        };
        s.push(&(&generic_term(&mu) * &f) * &c, w_mu(&mu));
    }
    Ok(s)
}

/// Combinatorial side, labels at most `n_vars`.
pub fn conjecture_rhs(kind: ConjectureKind, m: u32, n: u32, k: u32, n_vars: usize) -> MultiSeries {
    let mut out = MultiSeries::new();
    let mut add = |mono: Vec<u32>, a: u32, b: u32| {
        out.entry(mono)
            .or_insert_with(QtPoly::zero)
            .add_term((a, b), BigInt::one());
    };
    match kind {
        ConjectureKind::LpPmaj | ConjectureKind::LpPmajShifted => {
            let shift = if kind == ConjectureKind::LpPmaj {
                0
            } else {
                m + n - 1
            };
            for p in all_polyominoes(m as usize, n as usize) {
                for lp in all_labellings(&p, n_vars as u32) {
                    let lp: LabelledPolyomino = lp;
                    add(lp.monomial(n_vars).unwrap(), p.area() - shift, lp.pmaj());
                }
            }
        }
        ConjectureKind::PdpPmaj | ConjectureKind::PdpDinv => {
            for d in all_pdp(m as usize, n as usize, k as usize, n_vars as u32) {
                let mono = d.obj.monomial(n_vars).unwrap();
                let uarea = d.uarea().unwrap();
                if kind == ConjectureKind::PdpPmaj {
                    add(mono, uarea, d.obj.pmaj());
                } else {
                    add(mono, d.obj.dinv(), uarea);
                }
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// All exponent vectors of length `n_vars` summing to `total`.
pub fn compositions(total: u32, n_vars: usize) -> Vec<Vec<u32>> {
    if n_vars == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=total).rev() {
        for mut rest in compositions(total - first, n_vars - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Outcome of a grid certification.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Verdict {
    pub identity: String,
    pub params: Vec<i64>,
    pub pass: bool,
    pub bounds: (u32, u32),
    pub points: usize,
    /// Points where the two sides differ, with the difference.
    pub residuals: Vec<(EvalPoint, String)>,
}

fn primes_from(start: u64, count: usize, skip: &[u64]) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut x = start.max(2);
    while out.len() < count {
        if (2..)
            .take_while(|d| d * d <= x)
            .all(|d| !x.is_multiple_of(d))
            && !skip.contains(&x)
        {
            out.push(x);
        }
        x += 1;
    }
    out
}

/// Grid values: `q` from the primes 2, 3, 5, ... and `t` from primes from 11
/// upward that are not used for `q`.
pub fn grid(bounds: (u32, u32)) -> (Vec<u64>, Vec<u64>) {
    let qs = primes_from(2, bounds.0 as usize + 1, &[]);
    let ts = primes_from(11, bounds.1 as usize + 1, &qs);
    (qs, ts)
}

/// Degree bound used when none is given: the combinatorial degree or
/// `(size + 1)^2`, whichever is larger.
pub fn default_bounds(p: &QtPoly, size: u32) -> (u32, u32) {
    let base = (size + 1) * (size + 1);
    (p.deg_q().max(base), p.deg_t().max(base))
}

/// Compare a polynomial against an oracle on a `(D_q + 1) x (D_t + 1)` grid
/// of prime points. Agreement everywhere certifies equality as long as the
/// oracle is a polynomial within the same bounds.
pub fn certify_equal<F>(
    identity: &str,
    params: &[i64],
    combinatorial: &QtPoly,
    oracle: F,
    bounds: (u32, u32),
) -> Result<Verdict, OracleError>
where
    F: Fn(&EvalPoint) -> Result<BigRational, OracleError> + Sync,
{
    if combinatorial.deg_q() > bounds.0 || combinatorial.deg_t() > bounds.1 {
        return Err(OracleError::Bound {
            dq: combinatorial.deg_q(),
            dt: combinatorial.deg_t(),
            bq: bounds.0,
            bt: bounds.1,
        });
    }
    let (qs, ts) = grid(bounds);
    let spare = primes_from(ts.last().copied().unwrap_or(11) + 1, 8, &qs);
    let pairs: Vec<(u64, u64)> = qs
        .iter()
        .flat_map(|&q| ts.iter().map(move |&t| (q, t)))
        .collect();
    let results: Vec<Result<Option<(EvalPoint, String)>, OracleError>> = pairs
        .par_iter()
        .map(|&(q, t)| {
            // a pole moves the point to a spare t value
            for t in std::iter::once(t).chain(spare.iter().copied()) {
                let pt = EvalPoint::ints(q as i64, t as i64).expect("primes are admissible");
                match oracle(&pt) {
                    Ok(v) => {
                        let diff = combinatorial.eval(&pt) - v;
                        return Ok((!diff.is_zero()).then(|| (pt, diff.to_string())));
                    }
                    Err(OracleError::Pole(_)) => continue,
                    Err(e) => return Err(e),
                }
            }
            Err(OracleError::Grid)
        })
        .collect();
    let mut residuals = Vec::new();
    for r in results {
        if let Some(x) = r? {
            residuals.push(x);
        }
    }
    Ok(Verdict {
        identity: identity.to_string(),
        params: params.to_vec(),
        pass: residuals.is_empty(),
        bounds,
        points: pairs.len(),
        residuals,
    })
}

/// Certify against a partition sum with the default bounds.
pub fn certify_sum(
    identity: &str,
    params: &[i64],
    combinatorial: &QtPoly,
    oracle: &PartitionSum,
    size: u32,
) -> Result<Verdict, OracleError> {
    let bounds = default_bounds(combinatorial, size);
    certify_equal(
        identity,
        params,
        combinatorial,
        |pt| oracle.eval(pt),
        bounds,
    )
}

/// Per-monomial outcome of a conjecture check.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MonomialVerdict {
    pub kind: ConjectureKind,
    pub m: u32,
    pub n: u32,
    pub k: u32,
    pub monomial: Vec<u32>,
    pub pass: bool,
    pub combinatorial: QtPoly,
}

/// Check a conjecture on every monomial of degree `deg` in `n_vars`
/// variables.
pub fn check_conjecture(
    kind: ConjectureKind,
    m: u32,
    n: u32,
    k: u32,
    n_vars: usize,
) -> Result<Vec<MonomialVerdict>, OracleError> {
    let rhs = conjecture_rhs(kind, m, n, k, n_vars);
    let size = m + n;
    let mut out = Vec::new();
    for alpha in compositions(kind.degree(n), n_vars) {
        let comb = rhs.get(&alpha).cloned().unwrap_or_else(QtPoly::zero);
        let lhs = conjecture_lhs(kind, m, n, k, &alpha)?;
        let v = certify_sum(
            kind.name(),
            &[m as i64, n as i64, k as i64],
            &comb,
            &lhs,
            size,
        )?;
        out.push(MonomialVerdict {
            kind,
            m,
            n,
            k,
            monomial: alpha,
            pass: v.pass,
            combinatorial: comb,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qt_algebra::q_int;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn small_macdonald() {
        let h1 = hhl_macdonald(&p(&[1]), 3).unwrap();
        assert_eq!(h1.len(), 3);
        assert!(h1.values().all(|v| *v == QtPoly::one()));
        assert_eq!(hhl_coeff(&p(&[2]), &[1, 1]).unwrap(), q_int(2));
        assert_eq!(
            hhl_coeff(&p(&[1, 1]), &[1, 1]).unwrap(),
            QtPoly::one() + QtPoly::t()
        );
        let s21 = schur_pairing(&p(&[2, 1]), &hook(3, 1)).unwrap();
        assert_eq!(s21, QtPoly::q() + QtPoly::t());
    }

    #[test]
    fn h_pairing_is_one() {
        for n in 1..=5 {
            for mu in partitions_of(n) {
                assert_eq!(hhl_coeff(&mu, &[n]).unwrap(), QtPoly::one());
            }
        }
    }

    #[test]
    fn coefficient_matches_full_expansion() {
        let mu = p(&[2, 1]);
        let full = hhl_macdonald(&mu, 3).unwrap();
        for (alpha, c) in &full {
            assert_eq!(&hhl_coeff(&mu, alpha).unwrap(), c);
        }
    }

    #[test]
    fn tiny_oracle_values() {
        let pt = EvalPoint::ints(2, 11).unwrap();
        assert_eq!(scalar_hook(0, 1, 0).eval(&pt).unwrap(), BigRational::one());
        assert_eq!(
            delta_hh(0, 1, 0).unwrap().eval(&pt).unwrap(),
            BigRational::one()
        );
        assert_eq!(
            sf_sum_term(0, 0, 0, 1).eval(&pt).unwrap(),
            BigRational::one()
        );
    }

    #[test]
    fn certification_detects_differences() {
        let f = q_int(3);
        let oracle = PartitionSum::constant(f.clone());
        assert!(certify_sum("same", &[], &f, &oracle, 1).unwrap().pass);
        let g = &f + &QtPoly::monomial(4, 4, 1);
        let v = certify_sum("diff", &[], &g, &oracle, 1).unwrap();
        assert!(!v.pass);
        let big = QtPoly::monomial(30, 0, 1);
        assert!(matches!(
            certify_equal("b", &[], &big, |pt| oracle.eval(pt), (2, 2)),
            Err(OracleError::Bound { .. })
        ));
    }

    #[test]
    fn grid_is_disjoint() {
        let (qs, ts) = grid((5, 5));
        assert_eq!(qs, vec![2, 3, 5, 7, 11, 13]);
        assert!(ts.iter().all(|t| !qs.contains(t) && *t >= 11));
    }

    #[test]
    fn compositions_count() {
        assert_eq!(
            compositions(3, 2),
            vec![vec![3, 0], vec![2, 1], vec![1, 2], vec![0, 3]]
        );
        assert_eq!(compositions(2, 3).len(), 6);
    }
}
