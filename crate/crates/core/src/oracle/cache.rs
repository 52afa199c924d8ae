//! File-backed JSON-lines store for oracle results.
//!
//! One line per query: `{"key", "value", "witnesses", "explored", "timestamp"}`
//! with witnesses in graph6. Later lines for the same key replace earlier ones.

use std::collections::HashMap;
use std::fs::{self, OpenOptions};
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Mutex;
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};

use super::{exact_ex, exact_nim_g, nim_edges, verify_free, NimResult, OracleResult};
use crate::error::{Error, Result};
use crate::graph::canon::canonical_form;
use crate::graph::graph6;
use crate::graph::subgraph::Matcher;
use crate::graph::{Graph, GraphFamily};

/// Environment variable naming the cache directory.
pub const CACHE_ENV: &str = "BLOWUP_CACHE_DIR";

const FILE: &str = "oracle.jsonl";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub key: String,
    pub value: u64,
    pub witnesses: Vec<String>,
    pub explored: u64,
    pub timestamp: u64,
}

/// Parse one cache line. Errors report the byte offset within the line.
pub fn parse_line(line: &str) -> Result<CacheEntry> {
    let entry: CacheEntry = serde_json::from_str(line).map_err(|e| {
        let offset = line
            .split_inclusive('\n')
            .take(e.line().saturating_sub(1))
            .map(str::len)
            .sum::<usize>()
            + e.column().saturating_sub(1);
        Error::parse(offset, e.to_string())
    })?;
    for w in &entry.witnesses {
        graph6::decode(w)?;
    }
    Ok(entry)
}

pub struct Cache {
    path: PathBuf,
    entries: Mutex<HashMap<String, CacheEntry>>,
}

impl Cache {
    /// Open (creating if needed) the store in `dir`.
    pub fn open(dir: &Path) -> Result<Cache> {
        fs::create_dir_all(dir)?;
        let path = dir.join(FILE);
        let mut entries = HashMap::new();
        if path.exists() {
            let text = fs::read_to_string(&path)?;
            let mut offset = 0;
            for line in text.split_inclusive('\n') {
                let trimmed = line.trim_end();
                if !trimmed.is_empty() {
                    let entry = parse_line(trimmed).map_err(|e| match e {
                        Error::Parse { offset: o, reason } => Error::Parse {
                            offset: offset + o,
                            reason: format!("{}: {reason}", path.display()),
                        },
                        other => other,
                    })?;
                    entries.insert(entry.key.clone(), entry);
                }
                offset += line.len();
            }
        }
        Ok(Cache {
            path,
            entries: Mutex::new(entries),
        })
    }

    pub fn get(&self, key: &str) -> Option<CacheEntry> {
        self.entries.lock().unwrap().get(key).cloned()
    }

    pub fn put(&self, entry: CacheEntry) -> Result<()> {
        let mut entries = self.entries.lock().unwrap();
        let mut line = serde_json::to_string(&entry).map_err(|e| Error::Io(e.to_string()))?;
        line.push('\n');
        OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)?
            .write_all(line.as_bytes())?;
        entries.insert(entry.key.clone(), entry);
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.entries.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

fn now() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}

/// Oracle calls routed through an optional cache.
///
/// With `paranoid` set, cached answers are replayed before use: every witness
/// must have the right order and size, be family-free, and be saturated (any
/// added edge creates a member). NIM answers are replayed by recounting the
/// NIM edges of the stored colouring.
pub struct CachedOracle {
    pub cache: Option<Cache>,
    pub paranoid: bool,
}

impl CachedOracle {
    pub fn uncached() -> Self {
        CachedOracle {
            cache: None,
            paranoid: false,
        }
    }

    pub fn ex(&self, n: usize, family: &GraphFamily) -> Result<OracleResult> {
        let key = format!("ex:{n}:{}", family.key());
        if let Some(entry) = self.cache.as_ref().and_then(|c| c.get(&key)) {
            let witnesses = entry.witnesses.iter().map(|w| graph6::decode(w)).collect::<Result<Vec<_>>>()?;
            let result = OracleResult {
                n,
                family_key: family.key(),
                value: entry.value,
                witnesses,
                explored: entry.explored,
            };
            if self.paranoid {
                replay_ex(&result, family)?;
            }
            return Ok(result);
        }
        let result = exact_ex(n, family)?;
        if let Some(c) = &self.cache {
            c.put(CacheEntry {
                key,
                value: result.value,
                witnesses: result.witnesses.iter().map(graph6::encode).collect(),
                explored: result.explored,
                timestamp: now(),
            })?;
        }
        Ok(result)
    }

    pub fn nim(&self, n: usize, h: &Graph) -> Result<NimResult> {
        let key = format!("nim:{n}:{}", canonical_form(h).to_hex());
        if let Some(entry) = self.cache.as_ref().and_then(|c| c.get(&key)) {
            let red = match entry.witnesses.as_slice() {
                [w] => graph6::decode(w)?,
                _ => return Err(Error::Invariant(format!("cache entry {key} needs one colouring"))),
            };
            let nim = nim_edges(&red, &Matcher::new(h));
            if self.paranoid && (nim.len() as u64 != entry.value || red.order() != n) {
                return Err(Error::Invariant(format!("cache entry {key} failed replay")));
            }
            return Ok(NimResult {
                n,
                pattern: h.clone(),
                value: entry.value,
                red,
                nim_edges: nim,
                explored: entry.explored,
            });
        }
        let result = exact_nim_g(n, h)?;
        if let Some(c) = &self.cache {
            c.put(CacheEntry {
                key,
                value: result.value,
                witnesses: vec![graph6::encode(&result.red)],
                explored: result.explored,
                timestamp: now(),
            })?;
        }
        Ok(result)
    }
}

fn replay_ex(r: &OracleResult, family: &GraphFamily) -> Result<()> {
    let fail = |why: &str| Err(Error::Invariant(format!("cached ex({}, ·) failed replay: {why}", r.n)));
    if r.witnesses.is_empty() {
        return fail("no witnesses");
    }
    for w in &r.witnesses {
        if w.order() != r.n || w.size() as u64 != r.value {
            return fail("witness order or size");
        }
        if !verify_free(w, family).free {
            return fail("witness contains a member");
        }
        for (u, v) in w.non_edges() {
            let mut g = w.clone();
            g.add_edge(u, v);
            if verify_free(&g, family).free {
                return fail("witness is not saturated");
            }
        }
    }
    Ok(())
}
