//! Parallelogram polyominoes (strict dominance) and reduced parallelogram
//! polyominoes (weak dominance), their area and bounce words, statistics,
//! decorations, and the maps `zeta`, `phi` and `s`.
//!
//! Paths are 0-1 step sequences, `1` = north, `0` = east. An `m x n` object
//! has `m` east and `n` north steps on each path.
//!
//! Letters are stored as indices into the doubled alphabet:
//! - standard `0b < 1 < 1b < 2 < ...`: index `x`, barred iff `x` even,
//!   value `ceil(x/2)`;
//! - reduced `0 < 0b < 1 < 1b < ...`: index `y`, barred iff `y` odd,
//!   value `floor(y/2)`.
//!
//! In both alphabets the successor of index `i` is `i + 1`.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum PathError {
    #[error("paths must have equal length")]
    LengthMismatch,
    #[error("steps must be 0 or 1")]
    BadStep,
    #[error("paths must have the same number of north steps")]
    EndpointMismatch,
    #[error("green path rises above the red path at step {0}")]
    Dominance(usize),
    #[error("standard polyominoes need m, n >= 1")]
    Degenerate,
    #[error("not a valid area word: {0}")]
    BadWord(String),
    #[error("invalid decoration: {0}")]
    BadDecoration(String),
}

/// Which doubled alphabet a word lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Alphabet {
    Standard,
    Reduced,
}

impl Alphabet {
    pub fn is_barred(self, idx: u32) -> bool {
        match self {
            Alphabet::Standard => idx.is_multiple_of(2),
            Alphabet::Reduced => idx % 2 == 1,
        }
    }

    pub fn value(self, idx: u32) -> u32 {
        match self {
            Alphabet::Standard => idx.div_ceil(2),
            Alphabet::Reduced => idx / 2,
        }
    }

    /// Inverse of `(value, barred)`; `None` if the letter does not exist
    /// (the standard alphabet has no unbarred 0).
    pub fn index(self, value: u32, barred: bool) -> Option<u32> {
        match (self, barred) {
            (Alphabet::Standard, true) => Some(2 * value),
            (Alphabet::Standard, false) => (value > 0).then(|| 2 * value - 1),
            (Alphabet::Reduced, true) => Some(2 * value + 1),
            (Alphabet::Reduced, false) => Some(2 * value),
        }
    }

    pub fn token(self, idx: u32) -> String {
        if self.is_barred(idx) {
            format!("{}b", self.value(idx))
        } else {
            self.value(idx).to_string()
        }
    }

    pub fn parse_token(self, tok: &str) -> Result<u32, PathError> {
        let bad = || PathError::BadWord(format!("bad token {tok:?}"));
        let (num, barred) = match tok.strip_suffix('b') {
            Some(s) => (s, true),
            None => (tok, false),
        };
        let v: u32 = num.parse().map_err(|_| bad())?;
        self.index(v, barred).ok_or_else(bad)
    }
}

/// A word over one of the doubled alphabets.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word {
    pub alphabet: Alphabet,
    pub letters: Vec<u32>,
}

impl Word {
    pub fn values(&self) -> impl Iterator<Item = u32> + '_ {
        self.letters.iter().map(|&x| self.alphabet.value(x))
    }

    pub fn sum(&self) -> u32 {
        self.values().sum()
    }

    pub fn count_value(&self, v: u32, barred: bool) -> usize {
        match self.alphabet.index(v, barred) {
            Some(i) => self.letters.iter().filter(|&&x| x == i).count(),
            None => 0,
        }
    }

    /// Space separated tokens, `*` marking positions in `decorated`.
    pub fn render(&self, decorated: &[usize]) -> String {
        self.letters
            .iter()
            .enumerate()
            .map(|(i, &x)| {
                let mut t = self.alphabet.token(x);
                if decorated.contains(&i) {
                    t.push('*');
                }
                t
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Parse the text form; returns the word and the starred positions.
    pub fn parse(alphabet: Alphabet, s: &str) -> Result<(Word, Vec<usize>), PathError> {
        let mut letters = Vec::new();
        let mut deco = Vec::new();
        for (i, tok) in s.split_whitespace().enumerate() {
            let (tok, star) = match tok.strip_suffix('*') {
                Some(t) => (t, true),
                None => (tok, false),
            };
            if star {
                deco.push(i);
            }
            letters.push(alphabet.parse_token(tok)?);
        }
        Ok((Word { alphabet, letters }, deco))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(&[]))
    }
}

/// Bounce path with one letter per step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BounceWord {
    pub word: Word,
    /// Bounce path steps, `1` = north.
    pub steps: Vec<u8>,
}

impl BounceWord {
    /// Index into `word` of the horizontal bounce step in column `col`.
    pub fn column_letter(&self, col: usize) -> Option<usize> {
        self.steps
            .iter()
            .enumerate()
            .filter(|(_, &s)| s == 0)
            .nth(col)
            .map(|(i, _)| i)
    }

    /// Index into `word` of the vertical bounce step in row `row`.
    pub fn row_letter(&self, row: usize) -> Option<usize> {
        self.steps
            .iter()
            .enumerate()
            .filter(|(_, &s)| s == 1)
            .nth(row)
            .map(|(i, _)| i)
    }
}

/// Lattice path from a list of corner points, e.g. `[(0,0),(0,3),(3,3)]`.
pub fn path_from_points(points: &[(u32, u32)]) -> Vec<u8> {
    let mut out = Vec::new();
    for w in points.windows(2) {
        let ((x0, y0), (x1, y1)) = (w[0], w[1]);
        assert!(x0 == x1 || y0 == y1, "segments must be axis-parallel");
        assert!(x1 >= x0 && y1 >= y0, "paths are monotone");
        out.extend(std::iter::repeat_n(1u8, (y1 - y0) as usize));
        out.extend(std::iter::repeat_n(0u8, (x1 - x0) as usize));
    }
    out
}

/// Lattice point reached after each step: `pts[i]` is the start of step `i`,
/// `pts[len]` the end.
fn points(path: &[u8]) -> Vec<(u32, u32)> {
    let mut pts = Vec::with_capacity(path.len() + 1);
    let (mut x, mut y) = (0u32, 0u32);
    pts.push((x, y));
    for &s in path {
        if s == 1 {
            y += 1;
        } else {
            x += 1;
        }
        pts.push((x, y));
    }
    pts
}

/// Column of each east step / row of each north step.
fn step_coords(path: &[u8]) -> Vec<u32> {
    points(path)
        .iter()
        .zip(path)
        .map(|(&(x, y), &s)| if s == 1 { y } else { x })
        .collect()
}

fn validate(red: &[u8], green: &[u8], strict: bool) -> Result<(usize, usize), PathError> {
    if red.len() != green.len() {
        return Err(PathError::LengthMismatch);
    }
    if red.iter().chain(green).any(|&s| s > 1) {
        return Err(PathError::BadStep);
    }
    let n_red: usize = red.iter().map(|&s| s as usize).sum();
    let n_green: usize = green.iter().map(|&s| s as usize).sum();
    if n_red != n_green {
        return Err(PathError::EndpointMismatch);
    }
    let len = red.len();
    let (mut sr, mut sg) = (0usize, 0usize);
    for i in 0..len {
        sr += red[i] as usize;
        sg += green[i] as usize;
        let ok = if strict && i + 1 < len {
            sg < sr
        } else {
            sg <= sr
        };
        if !ok {
            return Err(PathError::Dominance(i + 1));
        }
    }
    Ok((len - n_red, n_red))
}

/// Letters produced by reading the interlacing `(r1, 1-g1, r2, 1-g2, ...)`
/// starting from level `start`.
fn read_interlacing(red: &[u8], green: &[u8], start: u32) -> Vec<u32> {
    let mut level = start as i64;
    let mut out = Vec::with_capacity(red.len());
    for (&r, &g) in red.iter().zip(green) {
        for d in [r, 1 - g] {
            if d == 1 {
                out.push(level as u32);
                level += 1;
            } else {
                level -= 1;
                debug_assert!(level >= 0);
            }
        }
    }
    out
}

/// Inverse of the letter reading: the 0-1 walk that writes `letters`
/// starting at level `start` and ending at level `end`.
fn decode_walk(letters: &[u32], start: u32, end: u32) -> Result<Vec<u8>, PathError> {
    if letters.first().is_some_and(|&a| a != start) {
        return Err(PathError::BadWord(format!(
            "first letter must be index {start}"
        )));
    }
    if letters.is_empty() && start != end {
        return Err(PathError::BadWord("empty word".into()));
    }
    let mut d: Vec<u8> = Vec::with_capacity(2 * letters.len());
    for (i, &a) in letters.iter().enumerate() {
        d.push(1);
        let next = letters.get(i + 1).copied().unwrap_or(end) as i64;
        let drops = a as i64 + 1 - next;
        if drops < 0 {
            return Err(PathError::BadWord(format!(
                "letter {i} is not followed by its successor or a smaller letter"
            )));
        }
        d.extend(std::iter::repeat_n(0u8, drops as usize));
    }
    Ok(d)
}

/// Split a walk `(r1, 1-g1, r2, 1-g2, ...)` back into `(red, green)`.
fn split_interlacing(d: &[u8]) -> Result<(Vec<u8>, Vec<u8>), PathError> {
    if !d.len().is_multiple_of(2) {
        return Err(PathError::BadWord("odd interlacing length".into()));
    }
    let red = d.iter().step_by(2).copied().collect();
    let green = d.iter().skip(1).step_by(2).map(|&s| 1 - s).collect();
    Ok((red, green))
}

fn red_peak_positions(path: &[u8]) -> Vec<usize> {
    (1..path.len())
        .filter(|&i| path[i - 1] == 1 && path[i] == 0)
        .collect()
}

/// Kind of decorated spot.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DecorationKind {
    Rise,
    RedPeak,
    GreenPeak,
}

/// A decoration: for rises `pos` is the decorated letter of the area word,
/// for peaks it is the index of the horizontal step of the peak in the path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Decoration {
    pub kind: DecorationKind,
    pub pos: usize,
}

fn check_subset(chosen: &[usize], allowed: &[usize], what: &str) -> Result<(), PathError> {
    let mut seen = HashSet::new();
    for &p in chosen {
        if !allowed.contains(&p) || !seen.insert(p) {
            return Err(PathError::BadDecoration(format!("{what} at {p}")));
        }
    }
    Ok(())
}

/// `m x n` parallelogram polyomino: red strictly above green except at the
/// endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PathPairJson", into = "PathPairJson")]
pub struct Polyomino {
    red: Vec<u8>,
    green: Vec<u8>,
}

/// Reduced `m x n` parallelogram polyomino: red weakly above green.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PathPairJson", into = "PathPairJson")]
pub struct ReducedPolyomino {
    red: Vec<u8>,
    green: Vec<u8>,
}

#[derive(Clone, Serialize, Deserialize)]
struct PathPairJson {
    red: Vec<u8>,
    green: Vec<u8>,
}

impl TryFrom<PathPairJson> for Polyomino {
    type Error = PathError;
    fn try_from(j: PathPairJson) -> Result<Self, PathError> {
        Polyomino::new(j.red, j.green)
    }
}

impl From<Polyomino> for PathPairJson {
    fn from(p: Polyomino) -> Self {
        PathPairJson {
            red: p.red,
            green: p.green,
        }
    }
}

impl TryFrom<PathPairJson> for ReducedPolyomino {
    type Error = PathError;
    fn try_from(j: PathPairJson) -> Result<Self, PathError> {
        ReducedPolyomino::new(j.red, j.green)
    }
}

impl From<ReducedPolyomino> for PathPairJson {
    fn from(p: ReducedPolyomino) -> Self {
        PathPairJson {
            red: p.red,
            green: p.green,
        }
    }
}

impl Polyomino {
    pub fn new(red: Vec<u8>, green: Vec<u8>) -> Result<Self, PathError> {
        let (m, n) = validate(&red, &green, true)?;
        if m == 0 || n == 0 {
            return Err(PathError::Degenerate);
        }
        Ok(Self { red, green })
    }

    pub fn from_points(red: &[(u32, u32)], green: &[(u32, u32)]) -> Result<Self, PathError> {
        Self::new(path_from_points(red), path_from_points(green))
    }

    pub fn red(&self) -> &[u8] {
        &self.red
    }

    pub fn green(&self) -> &[u8] {
        &self.green
    }

    /// Width (east steps).
    pub fn m(&self) -> usize {
        self.red.iter().filter(|&&s| s == 0).count()
    }

    /// Height (north steps).
    pub fn n(&self) -> usize {
        self.red.len() - self.m()
    }

    pub fn area_word(&self) -> Word {
        Word {
            alphabet: Alphabet::Standard,
            letters: read_interlacing(&self.red, &self.green, 0),
        }
    }

    /// Inverse of `area_word`.
    pub fn from_area_word(w: &Word) -> Result<Self, PathError> {
        if w.alphabet != Alphabet::Standard {
            return Err(PathError::BadWord("expected the standard alphabet".into()));
        }
        let (red, green) = split_interlacing(&decode_walk(&w.letters, 0, 0)?)?;
        Self::new(red, green)
    }

    pub fn area(&self) -> u32 {
        self.area_word().sum()
    }

    /// Pairs `i < j` of area-word letters with `a_j` the successor of `a_i`.
    pub fn dinv(&self) -> u32 {
        let w = self.area_word().letters;
        let mut c = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[j] == w[i] + 1 {
                    c += 1;
                }
            }
        }
        c
    }

    /// Decorable rises: positions `i > 0` of a barred letter followed by its
    /// successor.
    pub fn rises(&self) -> Vec<usize> {
        let w = self.area_word().letters;
        (1..w.len().saturating_sub(1))
            .filter(|&i| w[i].is_multiple_of(2) && w[i + 1] == w[i] + 1)
            .collect()
    }

    pub fn uarea(&self, rises: &[usize]) -> Result<u32, PathError> {
        check_subset(rises, &self.rises(), "rise")?;
        let w = self.area_word();
        let skipped: u32 = rises.iter().map(|&i| w.alphabet.value(w.letters[i])).sum();
        Ok(w.sum() - skipped)
    }

    /// Bounce path: one east step, then alternately north until the end of a
    /// red east step and east until the end of a green north step.
    pub fn bounce_word(&self) -> BounceWord {
        let (m, n) = (self.m() as u32, self.n() as u32);
        let red_pts = points(&self.red);
        let green_pts = points(&self.green);
        let red_h_end: HashSet<(u32, u32)> = (0..self.red.len())
            .filter(|&i| self.red[i] == 0)
            .map(|i| red_pts[i + 1])
            .collect();
        let green_v_end: HashSet<(u32, u32)> = (0..self.green.len())
            .filter(|&i| self.green[i] == 1)
            .map(|i| green_pts[i + 1])
            .collect();
        let mut letters = vec![0u32];
        let mut steps = vec![0u8];
        let (mut x, mut y, mut level) = (1u32, 0u32, 0u32);
        while (x, y) != (m, n) {
            level += 1;
            loop {
                y += 1;
                letters.push(level);
                steps.push(1);
                if y == n || red_h_end.contains(&(x, y)) {
                    break;
                }
            }
            if (x, y) == (m, n) {
                break;
            }
            level += 1;
            loop {
                x += 1;
                letters.push(level);
                steps.push(0);
                if x == m || green_v_end.contains(&(x, y)) {
                    break;
                }
            }
        }
        BounceWord {
            word: Word {
                alphabet: Alphabet::Standard,
                letters,
            },
            steps,
        }
    }

    pub fn bounce(&self) -> u32 {
        self.bounce_word().word.sum()
    }

    /// Decorable red peaks (index of the horizontal step), leftmost excluded.
    pub fn red_peaks(&self) -> Vec<usize> {
        red_peak_positions(&self.red).into_iter().skip(1).collect()
    }

    pub fn ubounce(&self, peaks: &[usize]) -> Result<u32, PathError> {
        check_subset(peaks, &self.red_peaks(), "red peak")?;
        let bw = self.bounce_word();
        let cols = step_coords(&self.red);
        let skipped: u32 = peaks
            .iter()
            .map(|&i| {
                let j = bw.column_letter(cols[i] as usize).expect("column in range");
                bw.word.alphabet.value(bw.word.letters[j])
            })
            .sum();
        Ok(bw.word.sum() - skipped)
    }

    /// Remove the first and last step of both paths.
    pub fn phi(&self) -> ReducedPolyomino {
        let l = self.red.len();
        ReducedPolyomino {
            red: self.red[1..l - 1].to_vec(),
            green: self.green[1..l - 1].to_vec(),
        }
    }

    /// Reflection in `x = y`.
    pub fn s_reflect(&self) -> Polyomino {
        let (red, green) = reflect(&self.red, &self.green);
        Polyomino { red, green }
    }
}

fn reflect(red: &[u8], green: &[u8]) -> (Vec<u8>, Vec<u8>) {
    (
        green.iter().map(|&s| 1 - s).collect(),
        red.iter().map(|&s| 1 - s).collect(),
    )
}

impl ReducedPolyomino {
    pub fn new(red: Vec<u8>, green: Vec<u8>) -> Result<Self, PathError> {
        validate(&red, &green, false)?;
        Ok(Self { red, green })
    }

    pub fn from_points(red: &[(u32, u32)], green: &[(u32, u32)]) -> Result<Self, PathError> {
        Self::new(path_from_points(red), path_from_points(green))
    }

    pub fn empty() -> Self {
        Self {
            red: Vec::new(),
            green: Vec::new(),
        }
    }

    pub fn red(&self) -> &[u8] {
        &self.red
    }

    pub fn green(&self) -> &[u8] {
        &self.green
    }

    pub fn m(&self) -> usize {
        self.red.iter().filter(|&&s| s == 0).count()
    }

    pub fn n(&self) -> usize {
        self.red.len() - self.m()
    }

    /// Area word with the artificial leading `0`.
    pub fn area_word(&self) -> Word {
        let mut letters = vec![0u32];
        letters.extend(read_interlacing(&self.red, &self.green, 1));
        Word {
            alphabet: Alphabet::Reduced,
            letters,
        }
    }

    pub fn from_area_word(w: &Word) -> Result<Self, PathError> {
        if w.alphabet != Alphabet::Reduced {
            return Err(PathError::BadWord("expected the reduced alphabet".into()));
        }
        // The artificial 0 is the letter written by a leading north step.
        let d = decode_walk(&w.letters, 0, 1)?;
        let (red, green) = split_interlacing(&d[1..])?;
        Self::new(red, green)
    }

    pub fn area(&self) -> u32 {
        self.area_word().sum()
    }

    /// Pairs `i < j` of area-word letters with `a_i` the successor of `a_j`.
    pub fn dinv(&self) -> u32 {
        let w = self.area_word().letters;
        let mut c = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] == w[j] + 1 {
                    c += 1;
                }
            }
        }
        c
    }

    /// Decorable rises: positions of an unbarred letter preceded by the
    /// barred letter it succeeds.
    pub fn rises(&self) -> Vec<usize> {
        let w = self.area_word().letters;
        (1..w.len())
            .filter(|&j| w[j - 1] % 2 == 1 && w[j] == w[j - 1] + 1)
            .collect()
    }

    pub fn uarea(&self, rises: &[usize]) -> Result<u32, PathError> {
        check_subset(rises, &self.rises(), "rise")?;
        let w = self.area_word();
        let skipped: u32 = rises.iter().map(|&i| w.alphabet.value(w.letters[i])).sum();
        Ok(w.sum() - skipped)
    }

    /// Bounce path: alternately east until the beginning of a green north
    /// step and north until the beginning of a red east step. The first run
    /// may be empty.
    pub fn bounce_word(&self) -> BounceWord {
        let (m, n) = (self.m() as u32, self.n() as u32);
        let red_pts = points(&self.red);
        let green_pts = points(&self.green);
        let red_h_begin: HashSet<(u32, u32)> = (0..self.red.len())
            .filter(|&i| self.red[i] == 0)
            .map(|i| red_pts[i])
            .collect();
        let green_v_begin: HashSet<(u32, u32)> = (0..self.green.len())
            .filter(|&i| self.green[i] == 1)
            .map(|i| green_pts[i])
            .collect();
        let mut letters = Vec::new();
        let mut steps = Vec::new();
        let (mut x, mut y, mut level) = (0u32, 0u32, 0u32);
        loop {
            let before = (x, y);
            while x < m && !green_v_begin.contains(&(x, y)) {
                letters.push(level);
                steps.push(0);
                x += 1;
            }
            if (x, y) == (m, n) {
                break;
            }
            level += 1;
            while y < n && !red_h_begin.contains(&(x, y)) {
                letters.push(level);
                steps.push(1);
                y += 1;
            }
            if (x, y) == (m, n) {
                break;
            }
            level += 1;
            assert_ne!(before, (x, y), "bounce path stalled");
        }
        BounceWord {
            word: Word {
                alphabet: Alphabet::Reduced,
                letters,
            },
            steps,
        }
    }

    pub fn bounce(&self) -> u32 {
        self.bounce_word().word.sum()
    }

    /// Green peaks (index of the horizontal step); all are decorable.
    pub fn green_peaks(&self) -> Vec<usize> {
        red_peak_positions(&self.green)
    }

    pub fn ubounce(&self, peaks: &[usize]) -> Result<u32, PathError> {
        check_subset(peaks, &self.green_peaks(), "green peak")?;
        let bw = self.bounce_word();
        let cols = step_coords(&self.green);
        let skipped: u32 = peaks
            .iter()
            .map(|&i| {
                let j = bw.column_letter(cols[i] as usize).expect("column in range");
                bw.word.alphabet.value(bw.word.letters[j])
            })
            .sum();
        Ok(bw.word.sum() - skipped)
    }

    /// Reflection in `x = y`: the reflected green path becomes the red one.
    pub fn s_reflect(&self) -> ReducedPolyomino {
        let (red, green) = reflect(&self.red, &self.green);
        ReducedPolyomino { red, green }
    }

    /// Inverse of `Polyomino::phi`.
    pub fn unphi(&self) -> Polyomino {
        let mut red = vec![1u8];
        red.extend_from_slice(&self.red);
        red.push(0);
        let mut green = vec![0u8];
        green.extend_from_slice(&self.green);
        green.push(1);
        Polyomino { red, green }
    }
}

/// Path pair plus a set of decorations of a single kind.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Decorated<P> {
    #[serde(flatten)]
    pub obj: P,
    pub decorations: Vec<Decoration>,
}

impl<P> Decorated<P> {
    pub fn positions(&self) -> Vec<usize> {
        self.decorations.iter().map(|d| d.pos).collect()
    }

    pub fn k(&self) -> usize {
        self.decorations.len()
    }
}

fn make_decorations(kind: DecorationKind, mut pos: Vec<usize>) -> Vec<Decoration> {
    pos.sort_unstable();
    pos.into_iter()
        .map(|pos| Decoration { kind, pos })
        .collect()
}

fn single_kind(decos: &[Decoration], kind: DecorationKind) -> Result<Vec<usize>, PathError> {
    decos
        .iter()
        .map(|d| {
            if d.kind == kind {
                Ok(d.pos)
            } else {
                Err(PathError::BadDecoration(format!("unexpected {:?}", d.kind)))
            }
        })
        .collect()
}

impl Decorated<Polyomino> {
    pub fn new(obj: Polyomino, kind: DecorationKind, pos: Vec<usize>) -> Result<Self, PathError> {
        match kind {
            DecorationKind::Rise => check_subset(&pos, &obj.rises(), "rise")?,
            DecorationKind::RedPeak => check_subset(&pos, &obj.red_peaks(), "red peak")?,
            DecorationKind::GreenPeak => {
                return Err(PathError::BadDecoration(
                    "standard polyominoes decorate rises or red peaks".into(),
                ))
            }
        }
        Ok(Self {
            obj,
            decorations: make_decorations(kind, pos),
        })
    }

    pub fn plain(obj: Polyomino) -> Self {
        Self {
            obj,
            decorations: Vec::new(),
        }
    }

    pub fn uarea(&self) -> Result<u32, PathError> {
        self.obj
            .uarea(&single_kind(&self.decorations, DecorationKind::Rise)?)
    }

    pub fn ubounce(&self) -> Result<u32, PathError> {
        self.obj
            .ubounce(&single_kind(&self.decorations, DecorationKind::RedPeak)?)
    }

    /// `phi` carrying a rise decoration on the barred letter at `i` to the
    /// unbarred letter that follows it. The reduced word drops the leading
    /// `0b`, so that letter is again at position `i`.
    pub fn phi_rises(&self) -> Result<Decorated<ReducedPolyomino>, PathError> {
        let pos = single_kind(&self.decorations, DecorationKind::Rise)?;
        Decorated::<ReducedPolyomino>::new(self.obj.phi(), DecorationKind::Rise, pos)
    }

    /// `phi(s(P))` for a red-peak decorated `P`. A red peak reflects to a
    /// green valley; its decoration moves to the green peak whose horizontal
    /// step lies in the same row as the valley's horizontal step.
    pub fn phi_s_peaks(&self) -> Result<Decorated<ReducedPolyomino>, PathError> {
        let pos = single_kind(&self.decorations, DecorationKind::RedPeak)?;
        let s = self.obj.s_reflect();
        let g = &s.green;
        let mut new_pos = Vec::new();
        for &i in &pos {
            // reflected: green[i-1] = 0 (east), green[i] = 1 (north); walk
            // back over the east run to the peak that starts it
            let mut j = i - 1;
            while j > 0 && g[j - 1] == 0 {
                j -= 1;
            }
            if j == 0 || g[j - 1] != 1 {
                return Err(PathError::BadDecoration(format!(
                    "no green peak for valley {i}"
                )));
            }
            // phi drops the first step
            new_pos.push(j - 1);
        }
        Decorated::<ReducedPolyomino>::new(s.phi(), DecorationKind::GreenPeak, new_pos)
    }
}

impl Decorated<ReducedPolyomino> {
    pub fn new(
        obj: ReducedPolyomino,
        kind: DecorationKind,
        pos: Vec<usize>,
    ) -> Result<Self, PathError> {
        match kind {
            DecorationKind::Rise => check_subset(&pos, &obj.rises(), "rise")?,
            DecorationKind::GreenPeak => check_subset(&pos, &obj.green_peaks(), "green peak")?,
            DecorationKind::RedPeak => {
                return Err(PathError::BadDecoration(
                    "reduced polyominoes decorate rises or green peaks".into(),
                ))
            }
        }
        Ok(Self {
            obj,
            decorations: make_decorations(kind, pos),
        })
    }

    pub fn plain(obj: ReducedPolyomino) -> Self {
        Self {
            obj,
            decorations: Vec::new(),
        }
    }

    pub fn uarea(&self) -> Result<u32, PathError> {
        self.obj
            .uarea(&single_kind(&self.decorations, DecorationKind::Rise)?)
    }

    pub fn ubounce(&self) -> Result<u32, PathError> {
        self.obj
            .ubounce(&single_kind(&self.decorations, DecorationKind::GreenPeak)?)
    }
}

// ---------------------------------------------------------------------------
// zeta

/// Letter carried through the zeta construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Tagged {
    idx: u32,
    deco: bool,
}

/// Labels projected from the bounce path onto a path, read in path order.
fn project(path: &[u8], bw: &BounceWord, deco_cols: &HashSet<u32>) -> Vec<Tagged> {
    step_coords(path)
        .iter()
        .zip(path)
        .map(|(&c, &s)| {
            let j = if s == 1 {
                bw.row_letter(c as usize)
            } else {
                bw.column_letter(c as usize)
            }
            .expect("bounce path covers every row and column");
            Tagged {
                idx: bw.word.letters[j],
                deco: s == 0 && deco_cols.contains(&c),
            }
        })
        .collect()
}

/// Insert the `lo + 1` letters of `seg` into `w`, each right after the
/// `c`-th `lo` letter of `w`, where `c` is the number of `lo` letters that
/// precede it in `seg`.
fn insert_level(w: &[Tagged], seg: &[Tagged], lo: u32) -> Result<Vec<Tagged>, PathError> {
    let n_lo_w = w.iter().filter(|l| l.idx == lo).count();
    let mut groups: Vec<Vec<Tagged>> = vec![Vec::new()];
    for &l in seg {
        if l.idx == lo {
            groups.push(Vec::new());
        } else {
            groups.last_mut().unwrap().push(l);
        }
    }
    if groups.len() - 1 != n_lo_w || !groups[0].is_empty() {
        return Err(PathError::BadWord(format!(
            "segment for level {lo} does not interlace"
        )));
    }
    let mut out = Vec::with_capacity(w.len() + seg.len());
    let mut c = 0;
    for &l in w {
        out.push(l);
        if l.idx == lo {
            c += 1;
            out.extend_from_slice(&groups[c]);
        }
    }
    Ok(out)
}

/// Build the image word: the first segment comes from the red path, then
/// levels `(lo, lo+1)` alternate green (odd `lo`) and red (even `lo`).
fn zeta_word(
    mut w: Vec<Tagged>,
    red_labels: &[Tagged],
    green_labels: &[Tagged],
    max_idx: u32,
) -> Result<Vec<Tagged>, PathError> {
    let pick = |labels: &[Tagged], lo: u32| -> Vec<Tagged> {
        labels
            .iter()
            .copied()
            .filter(|l| l.idx == lo || l.idx == lo + 1)
            .collect()
    };
    w.extend(pick(red_labels, 0));
    for lo in 1..max_idx {
        let seg = if lo % 2 == 1 {
            pick(green_labels, lo)
        } else {
            pick(red_labels, lo)
        };
        w = insert_level(&w, &seg, lo)?;
    }
    Ok(w)
}

/// `zeta` on a red-peak decorated polyomino: the image has rise
/// decorations, size `n x m`, and `(dinv, uarea)` of the image equals
/// `(area, ubounce)` of the input.
pub fn zeta(p: &Decorated<Polyomino>) -> Result<Decorated<Polyomino>, PathError> {
    let peaks = single_kind(&p.decorations, DecorationKind::RedPeak)?;
    check_subset(&peaks, &p.obj.red_peaks(), "red peak")?;
    let bw = p.obj.bounce_word();
    let red_cols = step_coords(&p.obj.red);
    let deco_cols: HashSet<u32> = peaks.iter().map(|&i| red_cols[i]).collect();
    let mut red_labels = project(&p.obj.red, &bw, &deco_cols);
    let mut green_labels = project(&p.obj.green, &bw, &deco_cols);
    red_labels.reverse();
    green_labels.reverse();
    let max_idx = bw.word.letters.iter().copied().max().unwrap_or(0) + 1;
    let w = zeta_word(Vec::new(), &red_labels, &green_labels, max_idx)?;
    if w.first().map(|l| l.idx) != Some(0) {
        return Err(PathError::BadWord("zeta image must start with 0b".into()));
    }
    let word = Word {
        alphabet: Alphabet::Standard,
        letters: w.iter().map(|l| l.idx).collect(),
    };
    let img = Polyomino::from_area_word(&word)?;
    let rises = w
        .iter()
        .enumerate()
        .filter(|(_, l)| l.deco)
        .map(|(i, _)| i)
        .collect();
    Decorated::<Polyomino>::new(img, DecorationKind::Rise, rises)
}

/// Turn the level-pair subsequences of `w` back into a path. `pairs` lists
/// the lower levels whose `(lo, lo+1)` subsequences are concatenated, each
/// read in `reverse` order if requested; barred letters become `barred_step`.
/// Returns the path and, for every word position used, its step index.
fn path_from_subsequences(
    w: &[u32],
    alphabet: Alphabet,
    pairs: impl Iterator<Item = u32>,
    reverse: bool,
    barred_step: u8,
    skip_first: usize,
) -> (Vec<u8>, Vec<(usize, usize)>) {
    let mut path = Vec::new();
    let mut owner = Vec::new();
    let mut first = true;
    for lo in pairs {
        let mut seq: Vec<usize> = (0..w.len())
            .filter(|&i| w[i] == lo || w[i] == lo + 1)
            .collect();
        if first {
            seq.drain(..skip_first.min(seq.len()));
            first = false;
        }
        if reverse {
            seq.reverse();
        }
        for i in seq {
            owner.push((i, path.len()));
            path.push(if alphabet.is_barred(w[i]) {
                barred_step
            } else {
                1 - barred_step
            });
        }
    }
    (path, owner)
}

/// Inverse of `zeta`: from a rise-decorated polyomino to a red-peak
/// decorated one, rebuilding the paths from the level-pair subsequences of
/// the area word.
pub fn zeta_inv(p: &Decorated<Polyomino>) -> Result<Decorated<Polyomino>, PathError> {
    let rises = single_kind(&p.decorations, DecorationKind::Rise)?;
    check_subset(&rises, &p.obj.rises(), "rise")?;
    let w = p.obj.area_word().letters;
    let top = w.iter().copied().max().unwrap_or(0);
    let (red, _) = path_from_subsequences(&w, Alphabet::Standard, (0..=top).step_by(2), true, 0, 0);
    // green starts with the east step labelled 0b
    let (g_rest, owner) =
        path_from_subsequences(&w, Alphabet::Standard, (1..=top).step_by(2), true, 0, 0);
    let mut green = vec![0u8];
    green.extend(g_rest);
    let pre = Polyomino::new(red, green)?;
    let green_cols = step_coords(&pre.green);
    let red_cols = step_coords(&pre.red);
    let mut peaks = Vec::new();
    for &i in &rises {
        let &(_, step) = owner
            .iter()
            .find(|(pos, _)| *pos == i)
            .ok_or_else(|| PathError::BadDecoration(format!("rise {i} has no green step")))?;
        let col = green_cols[step + 1];
        let hi = (0..pre.red.len())
            .find(|&j| pre.red[j] == 0 && red_cols[j] == col)
            .expect("every column has a red east step");
        peaks.push(hi);
    }
    Decorated::<Polyomino>::new(pre, DecorationKind::RedPeak, peaks)
}

/// Reduced `zeta`: green-peak decorated to rise decorated, same size; the
/// image's `(dinv, uarea)` equals the input's `(area, ubounce)`.
pub fn rp_zeta(p: &Decorated<ReducedPolyomino>) -> Result<Decorated<ReducedPolyomino>, PathError> {
    let peaks = single_kind(&p.decorations, DecorationKind::GreenPeak)?;
    check_subset(&peaks, &p.obj.green_peaks(), "green peak")?;
    let bw = p.obj.bounce_word();
    let green_cols = step_coords(&p.obj.green);
    let deco_cols: HashSet<u32> = peaks.iter().map(|&i| green_cols[i]).collect();
    let red_labels = project(&p.obj.red, &bw, &deco_cols);
    let green_labels: Vec<Tagged> = project(&p.obj.green, &bw, &deco_cols);
    // decorations live on the green copies only
    let red_labels: Vec<Tagged> = red_labels
        .into_iter()
        .map(|l| Tagged { deco: false, ..l })
        .collect();
    let max_idx = bw.word.letters.iter().copied().max().unwrap_or(0) + 1;
    let artificial = Tagged {
        idx: 0,
        deco: false,
    };
    let w = zeta_word(vec![artificial], &red_labels, &green_labels, max_idx)?;
    // the 0 letters themselves never carry decorations, so the first segment
    // taken from red is harmless
    let word = Word {
        alphabet: Alphabet::Reduced,
        letters: w.iter().map(|l| l.idx).collect(),
    };
    let img = ReducedPolyomino::from_area_word(&word)?;
    let rises = w
        .iter()
        .enumerate()
        .filter(|(_, l)| l.deco)
        .map(|(i, _)| i)
        .collect();
    Decorated::<ReducedPolyomino>::new(img, DecorationKind::Rise, rises)
}

/// Inverse of `rp_zeta`.
pub fn rp_zeta_inv(
    p: &Decorated<ReducedPolyomino>,
) -> Result<Decorated<ReducedPolyomino>, PathError> {
    let rises = single_kind(&p.decorations, DecorationKind::Rise)?;
    check_subset(&rises, &p.obj.rises(), "rise")?;
    let w = p.obj.area_word().letters;
    let top = w.iter().copied().max().unwrap_or(0);
    // red: pairs (0,0b), (1,1b), ... read upwards, unbarred = east; drop the
    // artificial 0
    let (red, _) = path_from_subsequences(&w, Alphabet::Reduced, (0..=top).step_by(2), false, 1, 1);
    // green: the 0 letters (east), then pairs (0b,1), (1b,2), ...
    let zeros = w.iter().filter(|&&x| x == 0).count() - 1;
    let (g_rest, owner) =
        path_from_subsequences(&w, Alphabet::Reduced, (1..=top).step_by(2), false, 1, 0);
    let mut green = vec![0u8; zeros];
    green.extend(g_rest);
    let pre = ReducedPolyomino::new(red, green)?;
    let mut peaks = Vec::new();
    for &i in &rises {
        let &(_, step) = owner
            .iter()
            .find(|(pos, _)| *pos == i)
            .ok_or_else(|| PathError::BadDecoration(format!("rise {i} has no green step")))?;
        peaks.push(step + zeros);
    }
    Decorated::<ReducedPolyomino>::new(pre, DecorationKind::GreenPeak, peaks)
}

// ---------------------------------------------------------------------------
// enumeration

/// All pairs of paths with `m` east and `n` north steps satisfying the
/// (strict or weak) dominance condition, in lexicographic order.
fn all_pairs(m: usize, n: usize, strict: bool) -> Vec<(Vec<u8>, Vec<u8>)> {
    let len = m + n;
    let mut out = Vec::new();
    let mut red = Vec::with_capacity(len);
    let mut green = Vec::with_capacity(len);
    #[allow(clippy::too_many_arguments)]
    fn go(
        len: usize,
        n: usize,
        strict: bool,
        sr: usize,
        sg: usize,
        red: &mut Vec<u8>,
        green: &mut Vec<u8>,
        out: &mut Vec<(Vec<u8>, Vec<u8>)>,
    ) {
        let i = red.len();
        if i == len {
            if sr == n && sg == n {
                out.push((red.clone(), green.clone()));
            }
            return;
        }
        for r in 0..=1u8 {
            let nr = sr + r as usize;
            if nr > n || (i + 1 - nr) > len - n {
                continue;
            }
            for g in 0..=1u8 {
                let ng = sg + g as usize;
                if ng > n || (i + 1 - ng) > len - n {
                    continue;
                }
                let ok = if strict && i + 1 < len {
                    ng < nr
                } else {
                    ng <= nr
                };
                if !ok {
                    continue;
                }
                red.push(r);
                green.push(g);
                go(len, n, strict, nr, ng, red, green, out);
                red.pop();
                green.pop();
            }
        }
    }
    go(len, n, strict, 0, 0, &mut red, &mut green, &mut out);
    out
}

/// Every `m x n` parallelogram polyomino.
pub fn all_polyominoes(m: usize, n: usize) -> Vec<Polyomino> {
    if m == 0 || n == 0 {
        return Vec::new();
    }
    all_pairs(m, n, true)
        .into_iter()
        .map(|(red, green)| Polyomino { red, green })
        .collect()
}

/// Every `m x n` reduced parallelogram polyomino.
pub fn all_reduced(m: usize, n: usize) -> Vec<ReducedPolyomino> {
    all_pairs(m, n, false)
        .into_iter()
        .map(|(red, green)| ReducedPolyomino { red, green })
        .collect()
}

/// All `k`-subsets of `items`, lexicographic.
pub fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn go(
        items: &[usize],
        k: usize,
        start: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            go(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(items, k, 0, &mut Vec::new(), &mut out);
    out
}
