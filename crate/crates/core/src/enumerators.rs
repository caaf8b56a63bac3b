//! Brute-force q,t-enumerators for the decorated families and the memoized
//! recursions that compute the same polynomials.
//!
//! Families and their statistics:
//!
//! | family | objects | class | decorations | (q, t) |
//! |---|---|---|---|---|
//! | `PP★` | `m x n` polyominoes | `r` = #1 in area word | rises | (dinv, uarea) |
//! | `PP•` | `m x n` polyominoes | `s` = #1 in bounce word | red peaks | (area, ubounce) |
//! | `RP★` | reduced `m x n` | `r` = #0 in area word | rises | (dinv, uarea) |
//! | `RP•` | reduced `m x n` | `r` = #0 in bounce word + 1 | green peaks | (area, ubounce) |
//! | `PF²★` | two-car PFs, `m` 2's, `n` 1's | `r` = #2 on diagonal + 1 | rises | (dinv, uarea) |

use std::collections::HashMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use once_cell::sync::Lazy;
use parking_lot::RwLock;
use serde::{Deserialize, Serialize};

use crate::labelled_objects::{all_two_car, ParkingFunction};
use crate::polyomino_core::{
    all_polyominoes, all_reduced, subsets, Decorated, DecorationKind, Polyomino, ReducedPolyomino,
};
use crate::qt_algebra::{choose2, q_binom, q_pow, QtPoly};

/// Default upper bound on `m + n` for brute-force enumeration.
pub const DEFAULT_CAP: usize = 12;

/// Version tag of the on-disk memo format.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "PP★")]
    PpStar,
    #[serde(rename = "PP•")]
    PpBullet,
    #[serde(rename = "RP★")]
    RpStar,
    #[serde(rename = "RP•")]
    RpBullet,
    #[serde(rename = "PF²★")]
    Pf2Star,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::PpStar,
        Family::PpBullet,
        Family::RpStar,
        Family::RpBullet,
        Family::Pf2Star,
    ];

    pub fn is_reduced(self) -> bool {
        matches!(self, Family::RpStar | Family::RpBullet | Family::Pf2Star)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::PpStar => "PP★",
            Family::PpBullet => "PP•",
            Family::RpStar => "RP★",
            Family::RpBullet => "RP•",
            Family::Pf2Star => "PF²★",
        })
    }
}

impl FromStr for Family {
    type Err = EnumError;
    fn from_str(s: &str) -> Result<Self, EnumError> {
        let s = s.to_ascii_lowercase();
        Ok(match s.as_str() {
            "pp★" | "pp-star" | "ppstar" | "pp*" => Family::PpStar,
            "pp•" | "pp-bullet" | "ppbullet" | "pp." => Family::PpBullet,
            "rp★" | "rp-star" | "rpstar" | "rp*" => Family::RpStar,
            "rp•" | "rp-bullet" | "rpbullet" | "rp." => Family::RpBullet,
            "pf²★" | "pf2-star" | "pf2star" | "pf2*" | "pf2" => Family::Pf2Star,
            _ => return Err(EnumError::UnknownFamily(s)),
        })
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum EnumError {
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("class index {class} out of range {lo}..={hi}")]
    ClassRange { class: usize, lo: usize, hi: usize },
    #[error("standard families need m, n >= 1")]
    EmptyStandard,
    #[error("m + n = {size} exceeds the brute-force cap {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error("recursion index out of range: {0}")]
    Domain(String),
}

/// Family, dimensions, class index and number of decorations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EnumKey {
    pub family: Family,
    pub m: usize,
    pub n: usize,
    pub class: usize,
    pub k: usize,
}

impl EnumKey {
    pub fn new(
        family: Family,
        m: usize,
        n: usize,
        class: usize,
        k: usize,
    ) -> Result<Self, EnumError> {
        let key = Self {
            family,
            m,
            n,
            class,
            k,
        };
        key.validate()?;
        Ok(key)
    }

    pub fn class_range(&self) -> (usize, usize) {
        match self.family {
            Family::PpStar => (1, self.m),
            Family::PpBullet => (1, self.n),
            _ => (1, self.m + 1),
        }
    }

    pub fn validate(&self) -> Result<(), EnumError> {
        if !self.family.is_reduced() && (self.m == 0 || self.n == 0) {
            return Err(EnumError::EmptyStandard);
        }
        let (lo, hi) = self.class_range();
        if self.class < lo || self.class > hi {
            return Err(EnumError::ClassRange {
                class: self.class,
                lo,
                hi,
            });
        }
        Ok(())
    }
}

impl fmt::Display for EnumKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (m, n, c, k) = (self.m, self.n, self.class, self.k);
        let star = if matches!(self.family, Family::PpBullet | Family::RpBullet) {
            '•'
        } else {
            '★'
        };
        let base = match self.family {
            Family::PpStar | Family::PpBullet => "PP",
            Family::RpStar | Family::RpBullet => "RP",
            Family::Pf2Star => "PF²",
        };
        match self.family {
            Family::PpBullet => write!(f, "{base}({m},{n}\\{c}){star}{k}"),
            _ => write!(f, "{base}({m}\\{c},{n}){star}{k}"),
        }
    }
}

/// One enumerated object.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum EnumObject {
    Polyomino(Decorated<Polyomino>),
    Reduced(Decorated<ReducedPolyomino>),
    TwoCar(Decorated<ParkingFunction>),
}

impl EnumObject {
    /// The (q, t) statistic pair used for the object's family.
    pub fn bistat(&self, family: Family) -> (u32, u32) {
        match (self, family) {
            (EnumObject::Polyomino(d), Family::PpStar) => (d.obj.dinv(), d.uarea().unwrap()),
            (EnumObject::Polyomino(d), _) => (d.obj.area(), d.ubounce().unwrap()),
            (EnumObject::Reduced(d), Family::RpStar) => (d.obj.dinv(), d.uarea().unwrap()),
            (EnumObject::Reduced(d), _) => (d.obj.area(), d.ubounce().unwrap()),
            (EnumObject::TwoCar(d), _) => (d.obj.dinv(), d.uarea().unwrap()),
        }
    }
}

/// Every object of the class, each with every valid decoration set.
pub fn enumerate(key: &EnumKey) -> Result<Vec<EnumObject>, EnumError> {
    key.validate()?;
    let (m, n, c, k) = (key.m, key.n, key.class, key.k);
    let mut out = Vec::new();
    match key.family {
        Family::PpStar => {
            for p in all_polyominoes(m, n) {
                if p.area_word().count_value(1, false) != c {
                    continue;
                }
                for s in subsets(&p.rises(), k) {
                    let d =
                        Decorated::<Polyomino>::new(p.clone(), DecorationKind::Rise, s).unwrap();
                    out.push(EnumObject::Polyomino(d));
                }
            }
        }
        Family::PpBullet => {
            for p in all_polyominoes(m, n) {
                if p.bounce_word().word.count_value(1, false) != c {
                    continue;
                }
                for s in subsets(&p.red_peaks(), k) {
                    let d =
                        Decorated::<Polyomino>::new(p.clone(), DecorationKind::RedPeak, s).unwrap();
                    out.push(EnumObject::Polyomino(d));
                }
            }
        }
        Family::RpStar => {
            for p in all_reduced(m, n) {
                if p.area_word().count_value(0, false) != c {
                    continue;
                }
                for s in subsets(&p.rises(), k) {
                    let d = Decorated::<ReducedPolyomino>::new(p.clone(), DecorationKind::Rise, s)
                        .unwrap();
                    out.push(EnumObject::Reduced(d));
                }
            }
        }
        Family::RpBullet => {
            for p in all_reduced(m, n) {
                if p.bounce_word().word.count_value(0, false) + 1 != c {
                    continue;
                }
                for s in subsets(&p.green_peaks(), k) {
                    let d =
                        Decorated::<ReducedPolyomino>::new(p.clone(), DecorationKind::GreenPeak, s)
                            .unwrap();
                    out.push(EnumObject::Reduced(d));
                }
            }
        }
        Family::Pf2Star => {
            for p in all_two_car(m, n) {
                if p.class_r() != c {
                    continue;
                }
                for s in subsets(&p.pf().rises(), k) {
                    let d = Decorated::<ParkingFunction>::new(p.pf().clone(), s).unwrap();
                    out.push(EnumObject::TwoCar(d));
                }
            }
        }
    }
    Ok(out)
}

/// Sum of `q^stat1 t^stat2` over the class, refusing sizes above `cap`.
pub fn qt_brute(key: &EnumKey, cap: usize) -> Result<QtPoly, EnumError> {
    let size = key.m + key.n;
    if size > cap {
        return Err(EnumError::CapExceeded { size, cap });
    }
    let mut p = QtPoly::zero();
    for obj in enumerate(key)? {
        let (a, b) = obj.bistat(key.family);
        p.add_term((a, b), 1.into());
    }
    Ok(p)
}

fn t_signed(e: i64, inner: QtPoly) -> QtPoly {
    if inner.is_zero() {
        return inner;
    }
    assert!(e >= 0, "negative t exponent {e} on a nonzero term");
    inner.shift(0, e as u32)
}

/// Memo key of a recursion cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "rec", rename_all = "snake_case")]
pub enum RecKey {
    PpDinv {
        m: usize,
        r: usize,
        n: usize,
        k: usize,
    },
    PpBounce {
        m: usize,
        n: usize,
        s: usize,
        k: usize,
    },
    Reduced {
        m: usize,
        r: usize,
        n: usize,
        k: usize,
    },
    F {
        n: i64,
        k: i64,
        d: i64,
        l: i64,
    },
}

#[derive(Serialize, Deserialize)]
struct Snapshot {
    schema_version: u32,
    entries: Vec<(RecKey, QtPoly)>,
}

#[derive(Debug, thiserror::Error)]
pub enum CacheError {
    #[error("cache schema version {found}, expected {SCHEMA_VERSION}")]
    Schema { found: u32 },
    #[error("cache entry {0:?} disagrees with recomputation")]
    Mismatch(RecKey),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

/// Publish-once table of recursion values.
#[derive(Default)]
pub struct MemoTable {
    cells: RwLock<HashMap<RecKey, QtPoly>>,
}

impl MemoTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, key: &RecKey) -> Option<QtPoly> {
        self.cells.read().get(key).cloned()
    }

    /// Store a value; a second write of a different value is a bug.
    pub fn publish(&self, key: RecKey, value: QtPoly) -> QtPoly {
        let mut cells = self.cells.write();
        let entry = cells.entry(key).or_insert_with(|| value.clone());
        assert_eq!(*entry, value, "conflicting memo values for {key:?}");
        value
    }

    pub fn len(&self) -> usize {
        self.cells.read().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn clear(&self) {
        self.cells.write().clear();
    }

    pub fn to_json(&self) -> String {
        let mut entries: Vec<_> = self
            .cells
            .read()
            .iter()
            .map(|(k, v)| (*k, v.clone()))
            .collect();
        entries.sort_by_key(|a| a.0);
        serde_json::to_string(&Snapshot {
            schema_version: SCHEMA_VERSION,
            entries,
        })
        .expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self, CacheError> {
        let snap: Snapshot = serde_json::from_str(s)?;
        if snap.schema_version != SCHEMA_VERSION {
            return Err(CacheError::Schema {
                found: snap.schema_version,
            });
        }
        let table = Self::new();
        table.cells.write().extend(snap.entries);
        Ok(table)
    }

    pub fn save(&self, path: &Path) -> Result<(), CacheError> {
        if let Some(dir) = path.parent() {
            std::fs::create_dir_all(dir)?;
        }
        std::fs::write(path, self.to_json())?;
        Ok(())
    }

    /// Load a snapshot; a missing file gives an empty table.
    pub fn load(path: &Path) -> Result<Self, CacheError> {
        match std::fs::read_to_string(path) {
            Ok(s) => Self::from_json(&s),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(Self::new()),
            Err(e) => Err(e.into()),
        }
    }

    pub fn keys(&self) -> Vec<RecKey> {
        let mut v: Vec<_> = self.cells.read().keys().copied().collect();
        v.sort();
        v
    }

    /// Recompute every stored entry in a fresh table and compare.
    pub fn verify(&self) -> Result<usize, CacheError> {
        let fresh = Recursions::new();
        let entries: Vec<_> = self
            .cells
            .read()
            .iter()
            .map(|(k, v)| (*k, v.clone()))
            .collect();
        for (k, v) in &entries {
            if fresh.eval(k) != *v {
                return Err(CacheError::Mismatch(*k));
            }
        }
        Ok(entries.len())
    }

    /// Drop entries that are not needed by any of `roots`.
    pub fn retain_reachable(&self, roots: &[RecKey]) -> usize {
        let fresh = Recursions::new();
        for r in roots {
            fresh.eval(r);
        }
        let keep = fresh.memo.cells.read();
        let mut cells = self.cells.write();
        let before = cells.len();
        cells.retain(|k, _| keep.contains_key(k));
        before - cells.len()
    }
}

/// The five recursions over a shared memo table.
#[derive(Default)]
pub struct Recursions {
    pub memo: MemoTable,
}

impl Recursions {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_memo(memo: MemoTable) -> Self {
        Self { memo }
    }

    pub fn eval(&self, key: &RecKey) -> QtPoly {
        match *key {
            RecKey::PpDinv { m, r, n, k } => self.pp_dinv(m, r, n, k),
            RecKey::PpBounce { m, n, s, k } => self.pp_bounce(m, n, s, k),
            RecKey::Reduced { m, r, n, k } => self.rp(m, r, n, k),
            RecKey::F { n, k, d, l } => self.f(n, k, d, l),
        }
    }

    /// Value of the recursion for a family key.
    pub fn for_key(&self, key: &EnumKey) -> Result<QtPoly, EnumError> {
        key.validate()?;
        let (m, n, c, k) = (key.m, key.n, key.class, key.k);
        Ok(match key.family {
            Family::PpStar => self.pp_dinv(m, c, n, k),
            Family::PpBullet => self.pp_bounce(m, n, c, k),
            Family::RpStar => self.rp(m, c, n, k),
            Family::RpBullet => self.rp_bullet(m, c, n, k),
            Family::Pf2Star => self.pf2(m, c, n, k),
        })
    }

    /// `PP(m\r,n)★k` by splitting off the 1's and 1̄'s of the area word.
    pub fn pp_dinv(&self, m: usize, r: usize, n: usize, k: usize) -> QtPoly {
        let key = RecKey::PpDinv { m, r, n, k };
        if let Some(v) = self.memo.get(&key) {
            return v;
        }
        let (mi, ni, ri, ki) = (m as i64, n as i64, r as i64, k as i64);
        let v = if m == 0 || n == 0 || r == 0 || r > m {
            QtPoly::zero()
        } else if n == 1 {
            if r == m && k == 0 {
                QtPoly::qt_pow(m as u32)
            } else {
                QtPoly::zero()
            }
        } else if r == m && k == 0 {
            QtPoly::qt_pow((m + n - 1) as u32) * q_binom(mi + ni - 2, ni - 1)
        } else {
            let mut sum = QtPoly::zero();
            for s in 1..n {
                let si = s as i64;
                let outer = q_pow((r + s) as u32) * q_binom(ri + si - 1, si);
                for h in 0..=k {
                    let hi = h as i64;
                    let mid = &outer * &(q_pow(choose2(hi)) * q_binom(si, hi));
                    let mut inner = QtPoly::zero();
                    for u in 1..=(m - r) {
                        let ui = u as i64;
                        let sub = self.pp_dinv(m - r, u, n - s, k - h);
                        if !sub.is_zero() {
                            inner += q_binom(si + ui - hi - 1, si - 1) * sub;
                        }
                    }
                    sum += &mid * &inner;
                }
            }
            t_signed(mi + ni - ki - 1, sum)
        };
        self.memo.publish(key, v)
    }

    /// `PP(m,n\s)•k` by splitting off the first two bounce runs.
    pub fn pp_bounce(&self, m: usize, n: usize, s: usize, k: usize) -> QtPoly {
        let key = RecKey::PpBounce { m, n, s, k };
        if let Some(v) = self.memo.get(&key) {
            return v;
        }
        let (mi, ni, si, ki) = (m as i64, n as i64, s as i64, k as i64);
        let v = if m == 0 || n == 0 || s == 0 || s > n {
            QtPoly::zero()
        } else if m == 1 {
            if s == n && k == 0 {
                QtPoly::qt_pow(n as u32)
            } else {
                QtPoly::zero()
            }
        } else if s == n && k == 0 {
            QtPoly::qt_pow((m + n - 1) as u32) * q_binom(mi + ni - 2, mi - 1)
        } else {
            let mut sum = QtPoly::zero();
            for r in 1..m {
                let ri = r as i64;
                let outer = q_pow((r + s) as u32) * q_binom(ri + si - 1, ri);
                for h in 0..=k {
                    let hi = h as i64;
                    let mid = &outer * &(q_pow(choose2(hi)) * q_binom(ri, hi));
                    let mut inner = QtPoly::zero();
                    for v in 1..=(n - s) {
                        let vi = v as i64;
                        let sub = self.pp_bounce(m - r, n - s, v, k - h);
                        if !sub.is_zero() {
                            inner += q_binom(ri + vi - hi - 1, ri - 1) * sub;
                        }
                    }
                    sum += &mid * &inner;
                }
            }
            t_signed(mi + ni - ki - 1, sum)
        };
        self.memo.publish(key, v)
    }

    /// Shared recursion of `RP★`, `RP•` and `PF²★`.
    pub fn rp(&self, m: usize, r: usize, n: usize, k: usize) -> QtPoly {
        let key = RecKey::Reduced { m, r, n, k };
        if let Some(v) = self.memo.get(&key) {
            return v;
        }
        let (mi, ni, ri, ki) = (m as i64, n as i64, r as i64, k as i64);
        let v = if r == 0 || r > m + 1 {
            QtPoly::zero()
        } else if n == 0 {
            if k == 0 && r == m + 1 {
                QtPoly::one()
            } else {
                QtPoly::zero()
            }
        } else if r == m + 1 && k == 0 {
            q_binom(mi + ni, mi)
        } else {
            let mut sum = QtPoly::zero();
            for s in 1..=n {
                let si = s as i64;
                let mut acc = QtPoly::zero();
                for h in 0..=k {
                    let hi = h as i64;
                    let mut inner = QtPoly::zero();
                    for u in 1..=(m + 1 - r) {
                        let ui = u as i64;
                        let sub = self.rp(m - r, u, n - s, k - h);
                        if !sub.is_zero() {
                            inner += q_binom(si + ui - hi - 1, si - 1) * sub;
                        }
                    }
                    acc += q_pow(choose2(hi)) * q_binom(si, hi) * inner;
                }
                sum += t_signed(mi + ni + 1 - ri - si - ki, q_binom(ri + si - 1, si) * acc);
            }
            sum
        };
        self.memo.publish(key, v)
    }

    pub fn rp_bullet(&self, m: usize, r: usize, n: usize, k: usize) -> QtPoly {
        self.rp(m, r, n, k)
    }

    pub fn pf2(&self, m: usize, r: usize, n: usize, k: usize) -> QtPoly {
        self.rp(m, r, n, k)
    }

    /// `F_{n,k}^{(d,l)}`; zero outside `k, l, d >= 0`, `n >= k + l`, `n >= d`.
    pub fn f(&self, n: i64, k: i64, d: i64, l: i64) -> QtPoly {
        if n < 0 || k < 0 || d < 0 || l < 0 || n < k + l || n < d {
            return QtPoly::zero();
        }
        let key = RecKey::F { n, k, d, l };
        if let Some(v) = self.memo.get(&key) {
            return v;
        }
        let v = if n == 0 {
            if k == 0 && l == 0 && d == 0 {
                QtPoly::one()
            } else {
                QtPoly::zero()
            }
        } else if k == 0 {
            QtPoly::zero()
        } else if k == n {
            if l == 0 {
                q_pow(choose2(n - d)) * q_binom(n, d)
            } else {
                QtPoly::zero()
            }
        } else {
            let mut sum = if n == k + l {
                q_pow(choose2(k - d)) * q_binom(n - 1, l) * q_binom(k, d)
            } else {
                QtPoly::zero()
            };
            for j in 0..=(n - k) {
                let mut acc = QtPoly::zero();
                for s in 0..=k {
                    let outer = q_pow(choose2(s)) * q_binom(k, s) * q_binom(k + j - 1, j);
                    for h in 1..=(n - k - j) {
                        let sub = self.f(n - k - j, h, d - k + s, l - j);
                        if !sub.is_zero() {
                            acc += &outer * &(q_binom(s + j - 1 + h, h) * sub);
                        }
                    }
                }
                sum += acc.shift(0, (n - k - j) as u32);
            }
            sum
        };
        self.memo.publish(key, v)
    }

    /// `RP(m\r,n)★k` reassembled from the `F` table:
    /// `t^l sum_s [s+r-1, s]_q F_{n+l,s}^{(n-k,l)}` with `l = m-k-r+1`.
    pub fn rp_via_f(&self, m: usize, r: usize, n: usize, k: usize) -> QtPoly {
        let l = m as i64 - k as i64 - r as i64 + 1;
        if l < 0 || r == 0 {
            return QtPoly::zero();
        }
        let (ni, ri, ki) = (n as i64, r as i64, k as i64);
        if n == 0 {
            return if l == 0 && k == 0 {
                QtPoly::one()
            } else {
                QtPoly::zero()
            };
        }
        let mut sum = QtPoly::zero();
        for s in 1..=ni {
            sum += q_binom(s + ri - 1, s) * self.f(ni + l, s, ni - ki, l);
        }
        sum.shift(0, l as u32)
    }
}

static GLOBAL: Lazy<Recursions> = Lazy::new(Recursions::new);

/// Process-wide recursion tables.
pub fn global() -> &'static Recursions {
    &GLOBAL
}

pub fn pp_dinv_rec(m: usize, r: usize, n: usize, k: usize) -> QtPoly {
    global().pp_dinv(m, r, n, k)
}

pub fn pp_bounce_rec(m: usize, n: usize, s: usize, k: usize) -> QtPoly {
    global().pp_bounce(m, n, s, k)
}

pub fn rp_rec(m: usize, r: usize, n: usize, k: usize) -> QtPoly {
    global().rp(m, r, n, k)
}

pub fn rp_bullet_rec(m: usize, r: usize, n: usize, k: usize) -> QtPoly {
    global().rp_bullet(m, r, n, k)
}

pub fn pf2_rec(m: usize, r: usize, n: usize, k: usize) -> QtPoly {
    global().pf2(m, r, n, k)
}

pub fn f_rec(n: i64, k: i64, d: i64, l: i64) -> QtPoly {
    global().f(n, k, d, l)
}

/// `sum_r RP(m\r,n)★k`.
pub fn rp_total(m: usize, n: usize, k: usize) -> QtPoly {
    (1..=m + 1).map(|r| rp_rec(m, r, n, k)).sum()
}
