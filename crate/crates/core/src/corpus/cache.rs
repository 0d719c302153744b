//! JSON-lines cache of per-ring results, keyed by generator sequence.
//!
//! The first line is the header `{"format":"cdeg-cache","version":1}`; each
//! further line is one [`CacheRecord`]. Records are written in key order, so
//! loading and storing again reproduces the file byte for byte.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::PropertyCheckResult;
use crate::idealization::IndexExperiment;
use crate::invariants::InvariantReport;

pub const CACHE_FORMAT: &str = "cdeg-cache";
pub const CACHE_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum CacheError {
    #[error("cache I/O")]
    Io(#[from] io::Error),
    #[error("cache format version {found} is not supported (expected {expected})")]
    FormatVersionMismatch { found: u64, expected: u32 },
    #[error("corrupt cache record on line {line}: {message}")]
    CorruptRecord { line: usize, message: String },
}

#[derive(Serialize, Deserialize)]
struct Header {
    format: String,
    version: u64,
}

/// Everything remembered about one ring.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CacheRecord {
    pub gens: Vec<i64>,
    pub report: Option<InvariantReport>,
    #[serde(default)]
    pub checks: BTreeMap<String, PropertyCheckResult>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub experiment: Option<IndexExperiment>,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct CorpusCache {
    records: BTreeMap<Vec<i64>, CacheRecord>,
}

impl CorpusCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn get(&self, gens: &[i64]) -> Option<&CacheRecord> {
        self.records.get(gens)
    }

    pub fn insert(&mut self, record: CacheRecord) {
        self.records.insert(record.gens.clone(), record);
    }

    pub fn records(&self) -> impl Iterator<Item = &CacheRecord> {
        self.records.values()
    }

    pub fn write_to(&self, mut w: impl Write) -> io::Result<()> {
        let header = Header {
            format: CACHE_FORMAT.into(),
            version: CACHE_VERSION.into(),
        };
        serde_json::to_writer(&mut w, &header)?;
        w.write_all(b"\n")?;
        for rec in self.records.values() {
            serde_json::to_writer(&mut w, rec)?;
            w.write_all(b"\n")?;
        }
        w.flush()
    }

    pub fn read_from(r: impl BufRead) -> Result<Self, CacheError> {
        let mut lines = r.lines();
        let corrupt = |line: usize, message: String| CacheError::CorruptRecord { line, message };
        let first = lines
            .next()
            .transpose()?
            .ok_or_else(|| corrupt(1, "missing header".into()))?;
        let header: Header =
            serde_json::from_str(&first).map_err(|e| corrupt(1, format!("bad header: {e}")))?;
        if header.format != CACHE_FORMAT {
            return Err(corrupt(1, format!("unknown format {:?}", header.format)));
        }
        if header.version != u64::from(CACHE_VERSION) {
            return Err(CacheError::FormatVersionMismatch {
                found: header.version,
                expected: CACHE_VERSION,
            });
        }
        let mut cache = CorpusCache::new();
        for (i, line) in lines.enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let rec: CacheRecord =
                serde_json::from_str(&line).map_err(|e| corrupt(i + 2, e.to_string()))?;
            cache.insert(rec);
        }
        Ok(cache)
    }
}

pub fn cache_store(path: &Path, cache: &CorpusCache) -> Result<(), CacheError> {
    let file = File::create(path)?;
    cache.write_to(BufWriter::new(file))?;
    Ok(())
}

pub fn cache_load(path: &Path) -> Result<CorpusCache, CacheError> {
    let file = File::open(path)?;
    CorpusCache::read_from(BufReader::new(file))
}
