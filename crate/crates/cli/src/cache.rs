//! Content-addressed result cache.
//!
//! An entry lives at `DIR/ab/abcdef...json`, where the hex name is the
//! SHA-256 of the convention version, presentation digest, module name and
//! bi-arity. Entries are written to a temporary file and renamed into place.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};

use serde::de::DeserializeOwned;
use serde::Serialize;
use sha2::{Digest, Sha256};

/// Bumped whenever a sign or basis convention changes.
pub const CONVENTION_VERSION: u32 = 1;

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Debug)]
pub struct Cache {
    dir: Option<PathBuf>,
    hits: AtomicUsize,
    misses: AtomicUsize,
}

static TMP_COUNTER: AtomicUsize = AtomicUsize::new(0);

impl Cache {
    pub fn new(dir: Option<PathBuf>) -> Self {
        Cache { dir, hits: AtomicUsize::new(0), misses: AtomicUsize::new(0) }
    }

    pub fn disabled() -> Self {
        Cache::new(None)
    }

    pub fn hits(&self) -> usize {
        self.hits.load(Ordering::Relaxed)
    }

    pub fn misses(&self) -> usize {
        self.misses.load(Ordering::Relaxed)
    }

    fn path(&self, digest: &str, module: &str, arity: (usize, usize)) -> Option<PathBuf> {
        let dir = self.dir.as_ref()?;
        let key = format!("v{CONVENTION_VERSION}|{digest}|{module}|{},{}", arity.0, arity.1);
        let h = sha256_hex(key.as_bytes());
        Some(dir.join(&h[..2]).join(format!("{h}.json")))
    }

    /// Returns the cached value or computes and stores it.
    pub fn get_or_compute<T, E>(
        &self,
        digest: &str,
        module: &str,
        arity: (usize, usize),
        f: impl FnOnce() -> Result<T, E>,
    ) -> Result<T, E>
    where
        T: Serialize + DeserializeOwned,
    {
        let Some(path) = self.path(digest, module, arity) else {
            return f();
        };
        if let Some(v) = fs::read(&path).ok().and_then(|b| serde_json::from_slice(&b).ok()) {
            self.hits.fetch_add(1, Ordering::Relaxed);
            return Ok(v);
        }
        self.misses.fetch_add(1, Ordering::Relaxed);
        let v = f()?;
        if let Err(e) = store(&path, &v) {
            eprintln!("warning: cache write to {} failed: {e}", path.display());
        }
        Ok(v)
    }
}

fn store<T: Serialize>(path: &Path, v: &T) -> std::io::Result<()> {
    let parent = path.parent().expect("cache entries live in a subdirectory");
    fs::create_dir_all(parent)?;
    let n = TMP_COUNTER.fetch_add(1, Ordering::Relaxed);
    let tmp = parent.join(format!(".tmp-{}-{n}", std::process::id()));
    let mut f = fs::File::create(&tmp)?;
    f.write_all(&serde_json::to_vec(v)?)?;
    f.sync_all()?;
    fs::rename(&tmp, path)
}
