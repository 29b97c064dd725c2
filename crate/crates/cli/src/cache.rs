//! On-disk result cache: one JSON file, replaced atomically on every write.

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Environment variable naming the default cache file.
pub const CACHE_ENV: &str = "CASIMIR_CACHE";

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CacheKey {
    pub command: String,
    pub n: usize,
    pub lambda: Vec<i64>,
    /// Extra arguments that change the result, already normalized.
    pub extra: String,
}

impl CacheKey {
    pub fn new(command: &str, n: usize, lambda: &[i64], extra: &str) -> Self {
        Self { command: command.to_string(), n, lambda: lambda.to_vec(), extra: extra.to_string() }
    }

    fn encode(&self) -> String {
        let lambda: Vec<String> = self.lambda.iter().map(i64::to_string).collect();
        format!("{}|n={}|lambda={}|{}", self.command, self.n, lambda.join(","), self.extra)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct Entry {
    version: String,
    value: Value,
}

pub struct CacheStore {
    path: PathBuf,
    version: String,
}

impl CacheStore {
    pub fn new(path: impl Into<PathBuf>) -> Self {
        Self::with_version(path, casimir_core::ENGINE_VERSION)
    }

    pub fn with_version(path: impl Into<PathBuf>, version: &str) -> Self {
        Self { path: path.into(), version: version.to_string() }
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    /// Raw entries; unreadable entries (or an unreadable file) are skipped
    /// with a warning rather than failing the run.
    fn load(&self) -> io::Result<BTreeMap<String, Value>> {
        let text = match fs::read_to_string(&self.path) {
            Ok(t) => t,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(BTreeMap::new()),
            Err(e) => return Err(e),
        };
        match serde_json::from_str::<BTreeMap<String, Value>>(&text) {
            Ok(map) => Ok(map),
            Err(e) => {
                log::warn!("cache file {} is corrupt ({e}); ignoring it", self.path.display());
                Ok(BTreeMap::new())
            }
        }
    }

    pub fn get(&self, key: &CacheKey) -> io::Result<Option<Value>> {
        let k = key.encode();
        let Some(raw) = self.load()?.remove(&k) else { return Ok(None) };
        match serde_json::from_value::<Entry>(raw) {
            Ok(e) if e.version == self.version => Ok(Some(e.value)),
            Ok(e) => {
                log::info!("cache entry {k} has version {}, want {}", e.version, self.version);
                Ok(None)
            }
            Err(err) => {
                log::warn!("skipping corrupt cache entry {k}: {err}");
                Ok(None)
            }
        }
    }

    /// Inserts `value` and rewrites the file through a temporary sibling.
    pub fn put(&self, key: &CacheKey, value: &Value) -> io::Result<()> {
        let mut map = self.load()?;
        let entry = Entry { version: self.version.clone(), value: value.clone() };
        map.insert(key.encode(), serde_json::to_value(entry)?);
        let dir = self.path.parent().filter(|p| !p.as_os_str().is_empty()).unwrap_or(Path::new("."));
        fs::create_dir_all(dir)?;
        let file_name = self.path.file_name().and_then(|s| s.to_str()).unwrap_or("cache");
        let tmp = dir.join(format!(".{file_name}.{}.tmp", std::process::id()));
        {
            let mut f = fs::File::create(&tmp)?;
            f.write_all(serde_json::to_string(&map)?.as_bytes())?;
            f.sync_all()?;
        }
        fs::rename(&tmp, &self.path)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn key_encoding_is_stable() {
        let k = CacheKey::new("sdet", 2, &[2, 0], "hc");
        assert_eq!(k.encode(), "sdet|n=2|lambda=2,0|hc");
    }
}
