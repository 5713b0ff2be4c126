//! File-backed memo table.
//!
//! ```text
//! bdcomplex-sphere-cache v1
//! <hex canonical key>\t<sphere counts json>
//! ```
//!
//! Records are only ever appended. A file that fails to parse anywhere is
//! ignored as a whole and left untouched.

use std::collections::HashSet;
use std::fs::{self, OpenOptions};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use crate::error::Result;
use crate::graph::CanonicalKey;
use crate::recursion::SphereCache;
use crate::spheres::SphereCountVector;

pub const HEADER: &str = "bdcomplex-sphere-cache v1";

/// Environment variable naming the default cache file.
pub const CACHE_ENV: &str = "BDC_CACHE";

#[derive(Debug)]
pub struct PersistentCache {
    path: PathBuf,
    pub cache: SphereCache,
    on_disk: HashSet<CanonicalKey>,
    writable: bool,
    pub warnings: Vec<String>,
}

impl PersistentCache {
    /// Loads `path` if it exists. Never fails: unreadable or corrupt files
    /// give an empty table and a warning.
    pub fn open(path: impl AsRef<Path>) -> Self {
        let path = path.as_ref().to_path_buf();
        let mut out = PersistentCache {
            path,
            cache: SphereCache::new(),
            on_disk: HashSet::new(),
            writable: true,
            warnings: Vec::new(),
        };
        let text = match fs::read_to_string(&out.path) {
            Ok(text) => text,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return out,
            Err(e) => {
                out.warn(format!("cannot read: {e}"));
                return out;
            }
        };
        match parse(&text) {
            Ok(records) => {
                for (key, value) in records {
                    out.on_disk.insert(key.clone());
                    out.cache.insert(key, value);
                }
            }
            Err(reason) => out.warn(reason),
        }
        out
    }

    fn warn(&mut self, reason: String) {
        self.writable = false;
        self.warnings.push(format!(
            "ignoring cache file {}: {reason}",
            self.path.display()
        ));
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    /// Appends entries not yet on disk and returns how many were written.
    pub fn save(&mut self) -> Result<usize> {
        if !self.writable {
            return Ok(0);
        }
        let fresh: Vec<_> = self
            .cache
            .entries()
            .into_iter()
            .filter(|(k, _)| !self.on_disk.contains(k))
            .collect();
        if fresh.is_empty() {
            return Ok(0);
        }
        let new_file = !self.path.exists() || fs::metadata(&self.path)?.len() == 0;
        let file = OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)?;
        let mut w = BufWriter::new(file);
        if new_file {
            writeln!(w, "{HEADER}")?;
        }
        for (key, value) in &fresh {
            writeln!(
                w,
                "{}\t{}",
                hex::encode(key.as_bytes()),
                serde_json::to_string(value)?
            )?;
        }
        w.flush()?;
        self.on_disk.extend(fresh.iter().map(|(k, _)| k.clone()));
        Ok(fresh.len())
    }
}

fn parse(text: &str) -> std::result::Result<Vec<(CanonicalKey, SphereCountVector)>, String> {
    let mut lines = text.lines();
    match lines.next() {
        Some(HEADER) => {}
        Some(other) => return Err(format!("unknown header {other:?}")),
        None => return Ok(Vec::new()),
    }
    let mut out = Vec::new();
    for (i, line) in lines.enumerate() {
        let bad = |what: &str| format!("line {}: {what}", i + 2);
        let (key, value) = line.split_once('\t').ok_or_else(|| bad("missing tab"))?;
        let key = hex::decode(key).map_err(|_| bad("bad key"))?;
        let value: SphereCountVector =
            serde_json::from_str(value).map_err(|_| bad("bad counts"))?;
        if value.iter().any(|(d, _)| d < -1) {
            return Err(bad("dimension below -1"));
        }
        out.push((CanonicalKey::from_bytes(key), value));
    }
    Ok(out)
}
