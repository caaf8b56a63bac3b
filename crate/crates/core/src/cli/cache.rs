//! On-disk cache: one schema-versioned JSON file per `EnumKey`.

use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::{usage, CacheAction, CliError, CliResult, RunConfig};
use crate::enumerators::{EnumKey, Family, Recursions, SCHEMA_VERSION};
use crate::qt_algebra::QtPoly;

#[derive(Serialize, Deserialize)]
pub struct CacheEntry {
    pub schema: u32,
    pub key: EnumKey,
    pub poly: QtPoly,
}

fn slug(f: Family) -> &'static str {
    match f {
        Family::PpStar => "pp-star",
        Family::PpBullet => "pp-bullet",
        Family::RpStar => "rp-star",
        Family::RpBullet => "rp-bullet",
        Family::Pf2Star => "pf2-star",
    }
}

pub fn entry_path(dir: &Path, key: &EnumKey) -> PathBuf {
    dir.join(format!(
        "{}_m{}_n{}_c{}_k{}.json",
        slug(key.family),
        key.m,
        key.n,
        key.class,
        key.k
    ))
}

/// Cached polynomial for `key`. Unreadable or stale entries count as misses.
pub fn load_entry(dir: &Path, key: &EnumKey) -> CliResult<Option<QtPoly>> {
    let path = entry_path(dir, key);
    let Ok(text) = std::fs::read_to_string(&path) else {
        return Ok(None);
    };
    match serde_json::from_str::<CacheEntry>(&text) {
        Ok(e) if e.schema == SCHEMA_VERSION && e.key == *key => Ok(Some(e.poly)),
        _ => Ok(None),
    }
}

pub fn store_entry(dir: &Path, key: &EnumKey, poly: &QtPoly) -> CliResult<()> {
    std::fs::create_dir_all(dir)?;
    let entry = CacheEntry {
        schema: SCHEMA_VERSION,
        key: *key,
        poly: poly.clone(),
    };
    let text = serde_json::to_string(&entry).map_err(usage)?;
    let path = entry_path(dir, key);
    let tmp = path.with_extension("json.tmp");
    std::fs::write(&tmp, text)?;
    std::fs::rename(tmp, path)?;
    Ok(())
}

enum Status {
    Ok(EnumKey),
    Stale(String),
    Wrong(EnumKey, String),
}

fn inspect(path: &Path) -> Status {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return Status::Stale(e.to_string()),
    };
    let entry: CacheEntry = match serde_json::from_str(&text) {
        Ok(e) => e,
        Err(e) => return Status::Stale(format!("unparseable: {e}")),
    };
    if entry.schema != SCHEMA_VERSION {
        return Status::Stale(format!(
            "schema {} (current {SCHEMA_VERSION})",
            entry.schema
        ));
    }
    if entry_path(path.parent().unwrap_or(Path::new(".")), &entry.key) != path {
        return Status::Stale("file name does not match key".into());
    }
    match Recursions::new().for_key(&entry.key) {
        Ok(p) if p == entry.poly => Status::Ok(entry.key),
        Ok(p) => Status::Wrong(
            entry.key,
            format!("stored {} but recomputed {p}", entry.poly),
        ),
        Err(e) => Status::Stale(e.to_string()),
    }
}

fn entries(dir: &Path) -> CliResult<Vec<PathBuf>> {
    let mut files = Vec::new();
    if !dir.exists() {
        return Ok(files);
    }
    for e in std::fs::read_dir(dir)? {
        let p = e?.path();
        if p.extension().is_some_and(|x| x == "json") {
            files.push(p);
        }
    }
    files.sort();
    Ok(files)
}

/// `gc` deletes stale and wrong entries; `verify` recomputes every entry and
/// fails on any mismatch.
pub fn run_cache(cfg: &RunConfig, action: CacheAction, out: &mut dyn Write) -> CliResult<()> {
    let dir = cfg
        .cache_dir
        .as_ref()
        .ok_or_else(|| CliError::Usage("cache commands need --cache-dir".into()))?;
    let mut bad = 0usize;
    for path in entries(dir)? {
        let name = path
            .file_name()
            .and_then(|s| s.to_str())
            .unwrap_or("?")
            .to_string();
        let (ok, msg) = match inspect(&path) {
            Status::Ok(key) => (true, format!("{key}")),
            Status::Stale(m) => (false, m),
            Status::Wrong(key, m) => (false, format!("{key}: {m}")),
        };
        match action {
            CacheAction::Gc if !ok => {
                std::fs::remove_file(&path)?;
                writeln!(
                    out,
                    "{}",
                    serde_json::json!({"file": name, "removed": true, "reason": msg})
                )?;
            }
            CacheAction::Gc => {}
            CacheAction::Verify => {
                bad += usize::from(!ok);
                writeln!(
                    out,
                    "{}",
                    serde_json::json!({"file": name, "pass": ok, "detail": msg})
                )?;
            }
        }
    }
    if bad > 0 {
        return Err(CliError::Disagreement(format!(
            "{bad} cache entries failed verification"
        )));
    }
    Ok(())
}
