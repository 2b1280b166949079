//! Append-only JSONL value cache.
//!
//! One record per line keyed by `(k, beta, n, method)`.  Every write rewrites
//! the file through a temporary sibling followed by a rename, so readers never
//! observe a torn record.  Re-running a cached computation must reproduce the
//! stored value exactly; a mismatch is reported as corruption.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

pub const CACHE_DIR_ENV: &str = "MOM_CACHE_DIR";
pub const DEFAULT_CACHE_DIR: &str = ".mom-cache";
const CACHE_FILE: &str = "records.jsonl";

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CacheRecord {
    pub k: u32,
    pub beta: u32,
    pub n: u32,
    pub method: String,
    pub value: String,
    pub tool_version: String,
}

#[derive(Debug, PartialEq, Eq)]
pub enum CacheOutcome {
    /// No prior record; the new one was appended.
    Stored,
    /// A prior record existed and its value matches.
    Confirmed,
    /// A prior record existed with a different value (corruption).
    Mismatch { stored: String },
}

pub fn cache_dir() -> PathBuf {
    std::env::var_os(CACHE_DIR_ENV)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(DEFAULT_CACHE_DIR))
}

fn cache_path(dir: &Path) -> PathBuf {
    dir.join(CACHE_FILE)
}

fn load(dir: &Path) -> io::Result<Vec<CacheRecord>> {
    let path = cache_path(dir);
    let text = match fs::read_to_string(&path) {
        Ok(t) => t,
        Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(Vec::new()),
        Err(e) => return Err(e),
    };
    let mut records = Vec::new();
    for line in text.lines() {
        if line.trim().is_empty() {
            continue;
        }
        let rec: CacheRecord = serde_json::from_str(line)
            .map_err(|e| io::Error::new(io::ErrorKind::InvalidData, e))?;
        records.push(rec);
    }
    Ok(records)
}

/// Check `record` against the cache and append it if new.
pub fn check_and_store(dir: &Path, record: &CacheRecord) -> io::Result<CacheOutcome> {
    let existing = load(dir)?;
    if let Some(prior) = existing.iter().find(|r| {
        r.k == record.k && r.beta == record.beta && r.n == record.n && r.method == record.method
    }) {
        if prior.value == record.value {
            return Ok(CacheOutcome::Confirmed);
        }
        return Ok(CacheOutcome::Mismatch {
            stored: prior.value.clone(),
        });
    }
    fs::create_dir_all(dir)?;
    let mut text = String::new();
    for rec in &existing {
        text.push_str(&serde_json::to_string(rec).expect("record serializes"));
        text.push('\n');
    }
    text.push_str(&serde_json::to_string(record).expect("record serializes"));
    text.push('\n');
    let tmp = dir.join(format!("{CACHE_FILE}.tmp.{}", std::process::id()));
    fs::write(&tmp, text)?;
    fs::rename(&tmp, cache_path(dir))?;
    Ok(CacheOutcome::Stored)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record(n: u32, value: &str) -> CacheRecord {
        CacheRecord {
            k: 2,
            beta: 1,
            n,
            method: "dp".into(),
            value: value.into(),
            tool_version: "test".into(),
        }
    }

    #[test]
    fn store_then_confirm_then_mismatch() {
        let dir = tempfile::tempdir().unwrap();
        let rec = record(3, "20");
        assert_eq!(
            check_and_store(dir.path(), &rec).unwrap(),
            CacheOutcome::Stored
        );
        assert_eq!(
            check_and_store(dir.path(), &rec).unwrap(),
            CacheOutcome::Confirmed
        );
        let bad = record(3, "21");
        assert_eq!(
            check_and_store(dir.path(), &bad).unwrap(),
            CacheOutcome::Mismatch {
                stored: "20".into()
            }
        );
        // Distinct keys coexist.
        assert_eq!(
            check_and_store(dir.path(), &record(4, "35")).unwrap(),
            CacheOutcome::Stored
        );
        assert_eq!(load(dir.path()).unwrap().len(), 2);
    }

    #[test]
    fn no_torn_records_after_write() {
        let dir = tempfile::tempdir().unwrap();
        check_and_store(dir.path(), &record(0, "1")).unwrap();
        check_and_store(dir.path(), &record(1, "4")).unwrap();
        let text = fs::read_to_string(dir.path().join(CACHE_FILE)).unwrap();
        assert!(text.ends_with('\n'));
        assert_eq!(text.lines().count(), 2);
        for line in text.lines() {
            serde_json::from_str::<CacheRecord>(line).unwrap();
        }
    }
}
