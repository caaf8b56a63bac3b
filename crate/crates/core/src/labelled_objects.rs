//! Parking functions, two-car parking functions, partially labelled Dyck
//! paths and labelled parallelogram polyominoes, with `pmaj`, the map `psi`
//! from reduced polyominoes to two-car parking functions and the map `eta`
//! from fully rise-decorated partially labelled Dyck paths to labelled
//! polyominoes.
//!
//! A Dyck path of size `N` is a 0-1 sequence with `N` north (`1`) and `N`
//! east (`0`) steps staying weakly above the diagonal. Row `i` holds the
//! `i`-th north step; its area letter `b_i` is `i - x_i`, where `x_i` is the
//! column of that step.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::polyomino_core::{
    Alphabet, Decorated, Decoration, DecorationKind, PathError, Polyomino, ReducedPolyomino, Word,
};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum LabelError {
    #[error("not a Dyck path")]
    NotDyck,
    #[error("need one label per north step")]
    LabelCount,
    #[error("labels must strictly increase up each column (row {0})")]
    ColumnOrder(usize),
    #[error("label 0 is not allowed here (row {0})")]
    ZeroLabel(usize),
    #[error("label {0} exceeds the number of variables")]
    TooLarge(u32),
    #[error("two-car labels must be 1 or 2")]
    NotTwoCar,
    #[error("invalid decoration: {0}")]
    BadDecoration(String),
    #[error("not in the fully decorated class: {0}")]
    WrongClass(String),
    #[error(transparent)]
    Path(#[from] PathError),
}

/// Area sequence of a Dyck path.
pub fn dyck_area(path: &[u8]) -> Vec<u32> {
    let (mut x, mut y) = (0u32, 0u32);
    let mut out = Vec::new();
    for &s in path {
        if s == 1 {
            out.push(y - x);
            y += 1;
        } else {
            x += 1;
        }
    }
    out
}

/// Dyck path with the given area sequence.
pub fn dyck_from_area(area: &[u32]) -> Result<Vec<u8>, LabelError> {
    if area.first().is_some_and(|&b| b != 0) {
        return Err(LabelError::NotDyck);
    }
    let mut path = Vec::with_capacity(2 * area.len());
    let mut x = 0u32;
    for (i, &b) in area.iter().enumerate() {
        if i > 0 && b > area[i - 1] + 1 {
            return Err(LabelError::NotDyck);
        }
        let xi = i as u32 - b;
        while x < xi {
            path.push(0);
            x += 1;
        }
        path.push(1);
    }
    while (x as usize) < area.len() {
        path.push(0);
        x += 1;
    }
    Ok(path)
}

fn is_dyck(path: &[u8]) -> bool {
    let mut h: i64 = 0;
    for &s in path {
        if s > 1 {
            return false;
        }
        h += if s == 1 { 1 } else { -1 };
        if h < 0 {
            return false;
        }
    }
    h == 0
}

/// All Dyck paths of size `n`, lexicographic (east before north).
pub fn all_dyck_paths(n: usize) -> Vec<Vec<u8>> {
    fn go(n: usize, up: usize, down: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if up == n && down == n {
            out.push(cur.clone());
            return;
        }
        if down < up {
            cur.push(0);
            go(n, up, down + 1, cur, out);
            cur.pop();
        }
        if up < n {
            cur.push(1);
            go(n, up + 1, down, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, 0, 0, &mut Vec::new(), &mut out);
    out
}

/// Major index: sum of 1-based positions `i` with `a_i > a_{i+1}`.
pub fn maj(word: &[u32]) -> u32 {
    word.windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] > w[1])
        .map(|(i, _)| i as u32 + 1)
        .sum()
}

/// `pmaj` word and the multisets it was drawn from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PmajTrace {
    pub w: Vec<u32>,
    /// Sorted contents of `C_i` at the moment `w_i` was chosen.
    pub multisets: Vec<Vec<u32>>,
    pub pmaj: u32,
}

impl PmajTrace {
    pub fn word_string(&self) -> String {
        self.w.iter().map(|d| d.to_string()).collect()
    }
}

fn choose(c: &[u32], prev: Option<u32>) -> u32 {
    let below = prev.and_then(|p| c.iter().copied().filter(|&a| a <= p).max());
    below.unwrap_or_else(|| c.iter().copied().max().expect("nonempty multiset"))
}

fn remove_one(c: &mut Vec<u32>, v: u32) {
    let i = c
        .iter()
        .position(|&a| a == v)
        .expect("chosen value present");
    c.swap_remove(i);
}

fn finish(w: Vec<u32>, multisets: Vec<Vec<u32>>) -> PmajTrace {
    let rev: Vec<u32> = w.iter().rev().copied().collect();
    PmajTrace {
        pmaj: maj(&rev),
        w,
        multisets,
    }
}

/// Dyck path with a label on every north step, strictly increasing up
/// columns. Label 0 is allowed only through `PartiallyLabelledDyckPath`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ParkingFunction {
    path: Vec<u8>,
    labels: Vec<u32>,
}

impl ParkingFunction {
    pub fn new(path: Vec<u8>, labels: Vec<u32>) -> Result<Self, LabelError> {
        let pf = Self::new_allow_zero(path, labels)?;
        if let Some(i) = pf.labels.iter().position(|&a| a == 0) {
            return Err(LabelError::ZeroLabel(i));
        }
        Ok(pf)
    }

    fn new_allow_zero(path: Vec<u8>, labels: Vec<u32>) -> Result<Self, LabelError> {
        if !is_dyck(&path) {
            return Err(LabelError::NotDyck);
        }
        if labels.len() != path.len() / 2 {
            return Err(LabelError::LabelCount);
        }
        let area = dyck_area(&path);
        for i in 1..area.len() {
            if area[i] == area[i - 1] + 1 && labels[i] <= labels[i - 1] {
                return Err(LabelError::ColumnOrder(i));
            }
        }
        Ok(Self { path, labels })
    }

    pub fn from_area(area: &[u32], labels: Vec<u32>) -> Result<Self, LabelError> {
        Self::new(dyck_from_area(area)?, labels)
    }

    pub fn path(&self) -> &[u8] {
        &self.path
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn area_word(&self) -> Vec<u32> {
        dyck_area(&self.path)
    }

    pub fn area(&self) -> u32 {
        self.area_word().iter().sum()
    }

    /// Rows `i >= 1` whose north step directly follows another north step.
    pub fn rises(&self) -> Vec<usize> {
        let b = self.area_word();
        (1..b.len()).filter(|&i| b[i] == b[i - 1] + 1).collect()
    }

    /// Rows whose north step follows an east step.
    pub fn valleys(&self) -> Vec<usize> {
        let b = self.area_word();
        (1..b.len()).filter(|&i| b[i] <= b[i - 1]).collect()
    }

    /// Area ignoring the letters of the top rows of decorated rises.
    pub fn uarea(&self, rises: &[usize]) -> Result<u32, LabelError> {
        let allowed = self.rises();
        let mut seen = HashSet::new();
        for &r in rises {
            if !allowed.contains(&r) || !seen.insert(r) {
                return Err(LabelError::BadDecoration(format!("rise at row {r}")));
            }
        }
        let b = self.area_word();
        Ok(b.iter().sum::<u32>() - rises.iter().map(|&r| b[r]).sum::<u32>())
    }

    pub fn dinv(&self) -> u32 {
        let b = self.area_word();
        let a = &self.labels;
        let mut c = 0;
        for i in 0..b.len() {
            for j in i + 1..b.len() {
                if (b[i] == b[j] && a[i] < a[j]) || (b[i] == b[j] + 1 && a[i] > a[j]) {
                    c += 1;
                }
            }
        }
        c
    }

    /// Labels in each of the `N` columns, bottom to top.
    pub fn columns(&self) -> Vec<Vec<u32>> {
        let mut cols = vec![Vec::new(); self.size()];
        let mut x = 0usize;
        let mut row = 0usize;
        for &s in &self.path {
            if s == 1 {
                cols[x].push(self.labels[row]);
                row += 1;
            } else {
                x += 1;
            }
        }
        cols
    }

    /// `pmaj` by the greedy service word over column multisets.
    pub fn pmaj_trace(&self) -> PmajTrace {
        let cols = self.columns();
        let mut c: Vec<u32> = Vec::new();
        let mut w: Vec<u32> = Vec::new();
        let mut hist = Vec::new();
        for col in cols {
            if let Some(&prev) = w.last() {
                remove_one(&mut c, prev);
            }
            c.extend(col);
            let wi = choose(&c, w.last().copied());
            let mut snap = c.clone();
            snap.sort_unstable();
            hist.push(snap);
            w.push(wi);
        }
        finish(w, hist)
    }

    pub fn pmaj(&self) -> u32 {
        self.pmaj_trace().pmaj
    }

    /// Exponent vector of `x^P` in `n_vars` variables; label 0 is ignored.
    pub fn monomial(&self, n_vars: usize) -> Result<Vec<u32>, LabelError> {
        monomial(&self.labels, n_vars)
    }

    /// Domino text `a/b a/b ...` (label over area letter).
    pub fn dominoes(&self) -> String {
        self.labels
            .iter()
            .zip(self.area_word())
            .map(|(a, b)| format!("{a}/{b}"))
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Number of rows with label `label` on the main diagonal.
    pub fn diagonal_count(&self, label: u32) -> usize {
        self.area_word()
            .iter()
            .zip(&self.labels)
            .filter(|(&b, &a)| b == 0 && a == label)
            .count()
    }
}

impl fmt::Display for ParkingFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.dominoes())
    }
}

/// Exponent vector of the product of `x_a` over nonzero labels `a`.
pub fn monomial(labels: &[u32], n_vars: usize) -> Result<Vec<u32>, LabelError> {
    let mut v = vec![0u32; n_vars];
    for &a in labels {
        if a == 0 {
            continue;
        }
        if a as usize > n_vars {
            return Err(LabelError::TooLarge(a));
        }
        v[a as usize - 1] += 1;
    }
    Ok(v)
}

fn check_rises(allowed: &[usize], pos: &[usize]) -> Result<(), LabelError> {
    let mut seen = HashSet::new();
    for &p in pos {
        if !allowed.contains(&p) || !seen.insert(p) {
            return Err(LabelError::BadDecoration(format!("rise at row {p}")));
        }
    }
    Ok(())
}

fn rise_decorations(mut pos: Vec<usize>) -> Vec<Decoration> {
    pos.sort_unstable();
    pos.into_iter()
        .map(|pos| Decoration {
            kind: DecorationKind::Rise,
            pos,
        })
        .collect()
}

impl Decorated<ParkingFunction> {
    pub fn new(obj: ParkingFunction, rises: Vec<usize>) -> Result<Self, LabelError> {
        check_rises(&obj.rises(), &rises)?;
        Ok(Self {
            obj,
            decorations: rise_decorations(rises),
        })
    }

    pub fn uarea(&self) -> Result<u32, LabelError> {
        self.obj.uarea(&self.positions())
    }
}

/// Parking function with labels in `{1, 2}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "ParkingFunction", into = "ParkingFunction")]
pub struct TwoCarPF(ParkingFunction);

impl TryFrom<ParkingFunction> for TwoCarPF {
    type Error = LabelError;
    fn try_from(pf: ParkingFunction) -> Result<Self, LabelError> {
        if pf.labels.iter().any(|&a| a != 1 && a != 2) {
            return Err(LabelError::NotTwoCar);
        }
        Ok(Self(pf))
    }
}

impl From<TwoCarPF> for ParkingFunction {
    fn from(p: TwoCarPF) -> Self {
        p.0
    }
}

impl TwoCarPF {
    pub fn new(path: Vec<u8>, labels: Vec<u32>) -> Result<Self, LabelError> {
        ParkingFunction::new(path, labels)?.try_into()
    }

    pub fn pf(&self) -> &ParkingFunction {
        &self.0
    }

    /// `(m, n)`: number of 2's and of 1's.
    pub fn mn(&self) -> (usize, usize) {
        let ones = self.0.labels.iter().filter(|&&a| a == 1).count();
        (self.0.size() - ones, ones)
    }

    /// Class index `r`: one more than the number of 2's on the diagonal.
    pub fn class_r(&self) -> usize {
        self.0.diagonal_count(2) + 1
    }
}

/// Every two-car parking function with `m` 2's and `n` 1's.
pub fn all_two_car(m: usize, n: usize) -> Vec<TwoCarPF> {
    let size = m + n;
    let mut out = Vec::new();
    for path in all_dyck_paths(size) {
        for mask in 0u32..(1 << size) {
            if mask.count_ones() as usize != n {
                continue;
            }
            let labels: Vec<u32> = (0..size)
                .map(|i| if mask >> i & 1 == 1 { 1 } else { 2 })
                .collect();
            if let Ok(pf) = TwoCarPF::new(path.clone(), labels) {
                out.push(pf);
            }
        }
    }
    out
}

/// `psi`: area word of a reduced polyomino, artificial 0 removed, read as a
/// two-car parking function (barred letter -> label 1, unbarred -> 2).
/// A rise decoration on word position `j` moves to row `j - 1`.
pub fn psi(p: &Decorated<ReducedPolyomino>) -> Result<Decorated<ParkingFunction>, LabelError> {
    let w = p.obj.area_word();
    let area: Vec<u32> = w.values().skip(1).collect();
    let labels: Vec<u32> = w.letters[1..]
        .iter()
        .map(|&x| if w.alphabet.is_barred(x) { 1 } else { 2 })
        .collect();
    let pf = ParkingFunction::from_area(&area, labels)?;
    let mut rows = Vec::new();
    for d in &p.decorations {
        if d.kind != DecorationKind::Rise || d.pos == 0 {
            return Err(LabelError::BadDecoration(format!("{d:?}")));
        }
        rows.push(d.pos - 1);
    }
    Decorated::<ParkingFunction>::new(pf, rows)
}

/// Inverse of `psi`.
pub fn psi_inv(p: &Decorated<ParkingFunction>) -> Result<Decorated<ReducedPolyomino>, LabelError> {
    let pf = &p.obj;
    let mut letters = vec![0u32];
    for (b, &a) in pf.area_word().into_iter().zip(&pf.labels) {
        let idx = match a {
            1 => Alphabet::Reduced.index(b, true),
            2 => Alphabet::Reduced.index(b, false),
            _ => None,
        }
        .ok_or(LabelError::NotTwoCar)?;
        letters.push(idx);
    }
    let rp = ReducedPolyomino::from_area_word(&Word {
        alphabet: Alphabet::Reduced,
        letters,
    })?;
    let pos = p.positions().iter().map(|&r| r + 1).collect();
    Ok(Decorated::<ReducedPolyomino>::new(
        rp,
        DecorationKind::Rise,
        pos,
    )?)
}

/// Parking function whose labels may be 0 except in row 0; zeros sit on
/// valleys.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "ParkingFunction", into = "ParkingFunction")]
pub struct PartiallyLabelledDyckPath(ParkingFunction);

impl TryFrom<ParkingFunction> for PartiallyLabelledDyckPath {
    type Error = LabelError;
    fn try_from(pf: ParkingFunction) -> Result<Self, LabelError> {
        Self::new(pf.path, pf.labels)
    }
}

impl From<PartiallyLabelledDyckPath> for ParkingFunction {
    fn from(p: PartiallyLabelledDyckPath) -> Self {
        p.0
    }
}

impl PartiallyLabelledDyckPath {
    pub fn new(path: Vec<u8>, labels: Vec<u32>) -> Result<Self, LabelError> {
        let pf = ParkingFunction::new_allow_zero(path, labels)?;
        if pf.labels.first() == Some(&0) {
            return Err(LabelError::ZeroLabel(0));
        }
        let valleys = pf.valleys();
        if let Some(i) = (0..pf.size()).find(|&i| pf.labels[i] == 0 && !valleys.contains(&i)) {
            return Err(LabelError::ZeroLabel(i));
        }
        Ok(Self(pf))
    }

    pub fn pf(&self) -> &ParkingFunction {
        &self.0
    }

    /// `(m, n)` with `m` zero labels and `n + 1` nonzero ones.
    pub fn mn(&self) -> (usize, usize) {
        let zeros = self.0.labels.iter().filter(|&&a| a == 0).count();
        (zeros, self.0.size() - zeros - 1)
    }

    /// Diagonal bounce: north until the start of an east step of the path,
    /// then through each column diagonally if it holds a blank valley and
    /// horizontally otherwise, bouncing when about to leave the diagonal.
    /// Every row is crossed by one north or diagonal step; the statistic is
    /// the sum of their run indices. Returns `(statistic, bounce steps)` with
    /// steps `b'N'`, `b'E'`, `b'D'`.
    pub fn bounce_trace(&self) -> (u32, Vec<u8>) {
        let n = self.0.size() as u32;
        let path = &self.0.path;
        let mut east_start: HashSet<(u32, u32)> = HashSet::new();
        let mut blank_cols: HashSet<u32> = HashSet::new();
        let (mut x, mut y, mut row) = (0u32, 0u32, 0usize);
        for &s in path {
            if s == 0 {
                east_start.insert((x, y));
                x += 1;
            } else {
                if self.0.labels[row] == 0 {
                    blank_cols.insert(x);
                }
                row += 1;
                y += 1;
            }
        }
        let (mut x, mut y) = (0u32, 0u32);
        let mut steps = Vec::new();
        let mut stat = 0u32;
        let mut run = 0u32;
        while y < n {
            while y < n && !east_start.contains(&(x, y)) {
                steps.push(b'N');
                stat += run;
                y += 1;
            }
            loop {
                if blank_cols.contains(&x) && y < n {
                    steps.push(b'D');
                    stat += run;
                    x += 1;
                    y += 1;
                } else if x < y {
                    steps.push(b'E');
                    x += 1;
                } else {
                    break;
                }
            }
            run += 1;
        }
        while x < n {
            steps.push(b'E');
            x += 1;
        }
        (stat, steps)
    }

    pub fn bounce(&self) -> u32 {
        self.bounce_trace().0
    }
}

/// Every partially labelled Dyck path of size `m + n + 1` with `m` zero
/// labels, nonzero labels in `1..=max_label`, and `k` decorated rises.
pub fn all_pdp(m: usize, n: usize, k: usize, max_label: u32) -> Vec<Decorated<ParkingFunction>> {
    let size = m + n + 1;
    let mut out = Vec::new();
    for path in all_dyck_paths(size) {
        let probe = ParkingFunction {
            path: path.clone(),
            labels: vec![1; size],
        };
        let valleys = probe.valleys();
        let rises = probe.rises();
        for zeros in crate::polyomino_core::subsets(&valleys, m) {
            let mut labels = vec![0u32; size];
            fill_labels(&path, &zeros, max_label, 0, &mut labels, &mut |labels| {
                let Ok(pdp) = PartiallyLabelledDyckPath::new(path.clone(), labels.to_vec()) else {
                    return;
                };
                for dec in crate::polyomino_core::subsets(&rises, k) {
                    out.push(Decorated {
                        obj: pdp.0.clone(),
                        decorations: rise_decorations(dec),
                    });
                }
            });
        }
    }
    out
}

/// Assign labels `1..=max` to every row not in `zeros`, strictly increasing
/// up columns.
fn fill_labels(
    path: &[u8],
    zeros: &[usize],
    max: u32,
    row: usize,
    labels: &mut Vec<u32>,
    emit: &mut dyn FnMut(&[u32]),
) {
    let area = dyck_area(path);
    if row == area.len() {
        emit(labels);
        return;
    }
    if zeros.contains(&row) {
        labels[row] = 0;
        fill_labels(path, zeros, max, row + 1, labels, emit);
        return;
    }
    let lo = if row > 0 && area[row] == area[row - 1] + 1 {
        labels[row - 1] + 1
    } else {
        1
    };
    for a in lo..=max {
        labels[row] = a;
        fill_labels(path, zeros, max, row + 1, labels, emit);
    }
}

/// Standard parallelogram polyomino with a label on each red north step,
/// strictly increasing up columns.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LabelledPolyomino {
    #[serde(flatten)]
    poly: Polyomino,
    labels: Vec<u32>,
}

impl LabelledPolyomino {
    pub fn new(poly: Polyomino, labels: Vec<u32>) -> Result<Self, LabelError> {
        if labels.len() != poly.n() {
            return Err(LabelError::LabelCount);
        }
        if let Some(i) = labels.iter().position(|&a| a == 0) {
            return Err(LabelError::ZeroLabel(i));
        }
        let red = poly.red();
        let mut row = 0;
        for i in 0..red.len() {
            if red[i] == 1 {
                if i > 0 && red[i - 1] == 1 && labels[row] <= labels[row - 1] {
                    return Err(LabelError::ColumnOrder(row));
                }
                row += 1;
            }
        }
        Ok(Self { poly, labels })
    }

    /// Label in row `i` equal to `i + 1`.
    pub fn canonical(poly: Polyomino) -> Self {
        let labels = (1..=poly.n() as u32).collect();
        Self { poly, labels }
    }

    pub fn poly(&self) -> &Polyomino {
        &self.poly
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    /// Labels of the red north steps in each column.
    pub fn columns(&self) -> Vec<Vec<u32>> {
        let mut cols = vec![Vec::new(); self.poly.m() + 1];
        let (mut x, mut row) = (0usize, 0usize);
        for &s in self.poly.red() {
            if s == 1 {
                cols[x].push(self.labels[row]);
                row += 1;
            } else {
                x += 1;
            }
        }
        cols
    }

    /// `pmaj` word of length `m + n - 1` driven by the green path: a north
    /// green step drops the previous choice, an east green step replaces it
    /// with 0 and adds the labels of its column.
    pub fn pmaj_trace(&self) -> PmajTrace {
        let cols = self.columns();
        let green = self.poly.green();
        let steps = green.len() - 1;
        let mut c: Vec<u32> = Vec::new();
        let mut w: Vec<u32> = Vec::new();
        let mut hist = Vec::new();
        let mut x = 0usize;
        for &g in green.iter().take(steps) {
            if let Some(&prev) = w.last() {
                remove_one(&mut c, prev);
                if g == 0 {
                    c.push(0);
                }
            }
            if g == 0 {
                c.extend(cols[x].iter().copied());
                x += 1;
            }
            let wi = choose(&c, w.last().copied());
            let mut snap = c.clone();
            snap.sort_unstable();
            hist.push(snap);
            w.push(wi);
        }
        finish(w, hist)
    }

    pub fn pmaj(&self) -> u32 {
        self.pmaj_trace().pmaj
    }

    pub fn monomial(&self, n_vars: usize) -> Result<Vec<u32>, LabelError> {
        monomial(&self.labels, n_vars)
    }

    /// Coloured area word of the preimage under `eta`: `(value, is_red)`,
    /// one letter per red step except the final east step.
    pub fn eta_word(&self) -> Vec<(u32, bool)> {
        let red = self.poly.red();
        let green = self.poly.green();
        let red_h = column_heights(red);
        let green_h = column_heights(green);
        let mut out = Vec::with_capacity(red.len() - 1);
        let mut prev: Option<u32> = None;
        let mut x = 0usize;
        for &s in &red[..red.len() - 1] {
            if s == 1 {
                let v = prev.map_or(0, |p| p + 1);
                out.push((v, true));
                prev = Some(v);
            } else {
                let v = red_h[x] - green_h[x + 1] - 1;
                out.push((v, false));
                prev = Some(v);
                x += 1;
            }
        }
        out
    }

    /// Inversions on the coloured word: pairs with `a_i` red and either
    /// `i > j, a_i = a_j` or `i < j, a_i = a_j + 1`, where `a_j` is green or
    /// carries a smaller label.
    pub fn dinv(&self) -> u32 {
        let word = self.eta_word();
        let mut lab = Vec::with_capacity(word.len());
        let mut row = 0;
        for &(_, red) in &word {
            if red {
                lab.push(Some(self.labels[row]));
                row += 1;
            } else {
                lab.push(None);
            }
        }
        count_lp_inversions(&word, &lab)
    }
}

fn count_lp_inversions(word: &[(u32, bool)], lab: &[Option<u32>]) -> u32 {
    let mut c = 0;
    for i in 0..word.len() {
        let (ai, red) = word[i];
        let Some(li) = lab[i].filter(|_| red) else {
            continue;
        };
        for j in 0..word.len() {
            let (aj, _) = word[j];
            let third = lab[j].is_none_or(|lj| li > lj);
            if !third {
                continue;
            }
            if (i > j && ai == aj) || (i < j && ai == aj + 1) {
                c += 1;
            }
        }
    }
    c
}

/// Dinv of an unlabelled polyomino on the coloured word, with the label
/// condition taken as always true.
pub fn lp_dinv_unlabelled(p: &Polyomino) -> u32 {
    let word = LabelledPolyomino::canonical(p.clone()).eta_word();
    let mut c = 0;
    for i in 0..word.len() {
        if !word[i].1 {
            continue;
        }
        for j in 0..word.len() {
            if (i > j && word[i].0 == word[j].0) || (i < j && word[i].0 == word[j].0 + 1) {
                c += 1;
            }
        }
    }
    c
}

/// Height of the path on entering each column (`heights[x]` is the height
/// of its east step in column `x`).
fn column_heights(path: &[u8]) -> Vec<u32> {
    let mut h = 0u32;
    let mut out = Vec::new();
    for &s in path {
        if s == 1 {
            h += 1;
        } else {
            out.push(h);
        }
    }
    out
}

/// Canonical labels for `lp_dinv`: 1.. from the red 0, then the red 1's,
/// and so on, left to right within a level.
pub fn level_canonical(p: &Polyomino) -> LabelledPolyomino {
    let word = LabelledPolyomino::canonical(p.clone()).eta_word();
    let mut reds: Vec<(u32, usize, usize)> = Vec::new();
    let mut row = 0;
    for (i, &(v, red)) in word.iter().enumerate() {
        if red {
            reds.push((v, i, row));
            row += 1;
        }
    }
    let mut order = reds.clone();
    order.sort();
    let mut labels = vec![0u32; row];
    for (rank, &(_, _, r)) in order.iter().enumerate() {
        labels[r] = rank as u32 + 1;
    }
    LabelledPolyomino {
        poly: p.clone(),
        labels,
    }
}

/// Every labelling of `p` with labels in `1..=max`, increasing in columns.
pub fn all_labellings(p: &Polyomino, max: u32) -> Vec<LabelledPolyomino> {
    let red = p.red();
    let mut same_col = Vec::new();
    for i in 0..red.len() {
        if red[i] == 1 {
            same_col.push(i > 0 && red[i - 1] == 1);
        }
    }
    let mut out = Vec::new();
    let mut labels = vec![0u32; same_col.len()];
    fn go(
        row: usize,
        same_col: &[bool],
        max: u32,
        labels: &mut Vec<u32>,
        p: &Polyomino,
        out: &mut Vec<LabelledPolyomino>,
    ) {
        if row == same_col.len() {
            out.push(LabelledPolyomino {
                poly: p.clone(),
                labels: labels.clone(),
            });
            return;
        }
        let lo = if same_col[row] {
            labels[row - 1] + 1
        } else {
            1
        };
        for a in lo..=max {
            labels[row] = a;
            go(row + 1, same_col, max, labels, p, out);
        }
    }
    go(0, &same_col, max, &mut labels, p, &mut out);
    out
}

/// `eta`: fully rise-decorated partially labelled Dyck path to a labelled
/// polyomino. Valley rows (green) give red east steps, the other rows red
/// north steps carrying their labels; a green east step sits `x + 1` rows
/// below each red east step, `x` being the green letter.
pub fn eta(p: &Decorated<ParkingFunction>) -> Result<LabelledPolyomino, LabelError> {
    let pdp = PartiallyLabelledDyckPath::new(p.obj.path.clone(), p.obj.labels.clone())?;
    let pf = pdp.pf();
    let valleys = pf.valleys();
    let (m, n) = pdp.mn();
    if valleys.len() != m {
        return Err(LabelError::WrongClass(
            "every valley must carry label 0".into(),
        ));
    }
    let mut decorated = p.positions();
    decorated.sort_unstable();
    if decorated != pf.rises() {
        return Err(LabelError::WrongClass(
            "every rise must be decorated".into(),
        ));
    }
    let b = pf.area_word();
    let mut red = Vec::with_capacity(m + n + 2);
    let mut labels = Vec::new();
    let mut green_h = vec![0u32];
    let mut h = 0u32;
    for (i, &bi) in b.iter().enumerate() {
        if valleys.contains(&i) {
            red.push(0);
            if h < bi + 1 {
                return Err(LabelError::WrongClass("green step below the origin".into()));
            }
            green_h.push(h - bi - 1);
        } else {
            red.push(1);
            labels.push(pf.labels[i]);
            h += 1;
        }
    }
    red.push(0);
    let mut green = Vec::with_capacity(red.len());
    let mut gh = 0u32;
    for &target in &green_h {
        if target < gh {
            return Err(LabelError::WrongClass("green path not monotone".into()));
        }
        green.extend(std::iter::repeat_n(1u8, (target - gh) as usize));
        green.push(0);
        gh = target;
    }
    green.extend(std::iter::repeat_n(1u8, (h - gh) as usize));
    let poly = Polyomino::new(red, green)?;
    LabelledPolyomino::new(poly, labels)
}

/// Inverse of `eta`.
pub fn eta_inv(lp: &LabelledPolyomino) -> Result<Decorated<ParkingFunction>, LabelError> {
    let word = lp.eta_word();
    let area: Vec<u32> = word.iter().map(|&(v, _)| v).collect();
    let mut labels = Vec::with_capacity(word.len());
    let mut row = 0;
    for &(_, red) in &word {
        if red {
            labels.push(lp.labels[row]);
            row += 1;
        } else {
            labels.push(0);
        }
    }
    let path = dyck_from_area(&area)?;
    let pdp = PartiallyLabelledDyckPath::new(path, labels)?;
    let rises = pdp.pf().rises();
    Decorated::<ParkingFunction>::new(pdp.0, rises)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyomino_core::path_from_points;

    fn two_car_sample() -> ParkingFunction {
        let path = path_from_points(&[
            (0, 0),
            (0, 2),
            (1, 2),
            (1, 4),
            (3, 4),
            (3, 5),
            (5, 5),
            (5, 7),
            (6, 7),
            (6, 9),
            (7, 9),
            (7, 10),
            (8, 10),
            (8, 11),
            (11, 11),
        ]);
        ParkingFunction::new(path, vec![1, 2, 1, 2, 2, 1, 2, 1, 2, 2, 1]).unwrap()
    }

    fn sample_pf() -> ParkingFunction {
        ParkingFunction::from_area(&[0, 1, 2, 2, 1, 1, 2, 3], vec![1, 2, 5, 8, 7, 3, 4, 6]).unwrap()
    }

    fn sample_pdp() -> PartiallyLabelledDyckPath {
        let path = path_from_points(&[
            (0, 0),
            (0, 3),
            (1, 3),
            (1, 4),
            (2, 4),
            (2, 5),
            (4, 5),
            (4, 8),
            (6, 8),
            (6, 10),
            (7, 10),
            (7, 11),
            (8, 11),
            (8, 12),
            (12, 12),
        ]);
        PartiallyLabelledDyckPath::new(path, vec![1, 2, 5, 0, 0, 0, 4, 6, 0, 3, 0, 0]).unwrap()
    }

    #[test]
    fn two_car_pmaj_sample() {
        let pf = two_car_sample();
        let tr = pf.pmaj_trace();
        assert_eq!(tr.word_string(), "22112222111");
        assert_eq!(tr.pmaj, 7);
        assert!(TwoCarPF::try_from(pf).is_ok());
    }

    #[test]
    fn parking_function_sample() {
        let pf = sample_pf();
        assert_eq!(pf.dominoes(), "1/0 2/1 5/2 8/2 7/1 3/1 4/2 6/3");
        assert_eq!(pf.area(), 12);
        // pairs with equal letters and increasing labels, or letters
        // differing by one with decreasing labels, counted by hand
        assert_eq!(pf.dinv(), 6);
    }

    #[test]
    fn trivial_objects() {
        let pf = ParkingFunction::new(vec![1, 0], vec![1]).unwrap();
        assert_eq!((pf.area(), pf.dinv(), pf.pmaj()), (0, 0, 0));
        assert_eq!(monomial(&[1, 2, 2], 2).unwrap(), vec![1, 2]);
        assert_eq!(monomial(&[0, 2, 0], 2).unwrap(), vec![0, 1]);
        assert_eq!(monomial(&[], 3).unwrap(), vec![0, 0, 0]);
        assert_eq!(monomial(&[3], 2), Err(LabelError::TooLarge(3)));
    }

    #[test]
    fn column_order_enforced() {
        assert!(ParkingFunction::new(vec![1, 1, 0, 0], vec![2, 1]).is_err());
        assert!(ParkingFunction::new(vec![1, 1, 0, 0], vec![1, 1]).is_err());
        assert!(ParkingFunction::new(vec![1, 0, 1, 0], vec![2, 1]).is_ok());
        assert!(PartiallyLabelledDyckPath::new(vec![1, 0, 1, 0], vec![0, 1]).is_err());
        assert!(PartiallyLabelledDyckPath::new(vec![1, 1, 0, 0], vec![1, 0]).is_err());
        assert!(PartiallyLabelledDyckPath::new(vec![1, 0, 1, 0], vec![1, 0]).is_ok());
    }

    #[test]
    fn lp_pmaj_sample() {
        let poly = Polyomino::from_points(
            &[
                (0, 0),
                (0, 3),
                (3, 3),
                (3, 4),
                (5, 4),
                (5, 5),
                (8, 5),
                (8, 7),
                (12, 7),
            ],
            &[
                (0, 0),
                (3, 0),
                (3, 1),
                (5, 1),
                (5, 3),
                (7, 3),
                (7, 4),
                (10, 4),
                (10, 5),
                (12, 5),
                (12, 7),
            ],
        )
        .unwrap();
        let lp = LabelledPolyomino::new(poly.clone(), vec![1, 2, 4, 7, 3, 6, 8]).unwrap();
        let tr = lp.pmaj_trace();
        assert_eq!(tr.word_string(), "421000073000008600");
        // descents of the reversed word 006800000370000124
        assert_eq!(
            tr.pmaj,
            maj(&[0, 0, 6, 8, 0, 0, 0, 0, 0, 3, 7, 0, 0, 0, 0, 1, 2, 4])
        );
        assert_eq!(tr.pmaj, 4 + 11);
        let canon = LabelledPolyomino::canonical(poly.clone());
        assert_eq!(canon.pmaj(), poly.bounce() - (12 + 7 - 1));
    }

    #[test]
    fn eta_sample() {
        let pdp = sample_pdp();
        let pf = pdp.pf().clone();
        assert_eq!(pf.area_word(), vec![0, 1, 2, 2, 2, 1, 2, 3, 2, 3, 3, 3]);
        let d = Decorated::<ParkingFunction>::new(pf.clone(), pf.rises()).unwrap();
        let lp = eta(&d).unwrap();
        let expect = Polyomino::from_points(
            &[(0, 0), (0, 3), (3, 3), (3, 5), (4, 5), (4, 6), (7, 6)],
            &[(0, 0), (3, 0), (3, 1), (4, 1), (4, 2), (7, 2), (7, 6)],
        )
        .unwrap();
        assert_eq!(lp.poly(), &expect);
        assert_eq!(lp.labels(), &[1, 2, 5, 4, 6, 3]);
        let colours: String = lp
            .eta_word()
            .iter()
            .map(|&(_, r)| if r { 'r' } else { 'g' })
            .collect();
        assert_eq!(colours, "rrrgggrrgrgg");
        assert_eq!(eta_inv(&lp).unwrap(), d);
        assert_eq!(d.uarea().unwrap() + (7 + 6 - 1), lp.poly().area());
        assert_eq!(pf.pmaj(), lp.pmaj());
    }

    #[test]
    fn pdp_bounce_sample() {
        let pdp = sample_pdp();
        let (stat, steps) = pdp.bounce_trace();
        let count = |c: u8| steps.iter().filter(|&&s| s == c).count();
        assert_eq!((count(b'N'), count(b'D'), count(b'E')), (6, 6, 6));
        assert_eq!(String::from_utf8(steps).unwrap(), "NNNEDDEDEDDDNNNEEE");
        assert_eq!(stat, 3);
    }

    #[test]
    fn json_forms() {
        let pf = two_car_sample();
        let s = serde_json::to_string(&pf).unwrap();
        let back: TwoCarPF = serde_json::from_str(&s).unwrap();
        assert_eq!(back.pf(), &pf);
        assert!(serde_json::from_str::<TwoCarPF>(r#"{"path":[1,0],"labels":[3]}"#).is_err());
        assert!(serde_json::from_str::<PartiallyLabelledDyckPath>(
            r#"{"path":[1,0],"labels":[0]}"#
        )
        .is_err());
    }
}
