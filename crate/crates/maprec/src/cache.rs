//! On-disk cache of table rows: one JSON file per `(family, genus, lengths)`,
//! named after a hash of the curve the row is computed from.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use maprec_core::exactnum::BigRational;
use sha2::{Digest, Sha256};

use crate::render::RowJson;
use crate::table::{curve_fingerprint, Row, TableFamily};

pub const CACHE_ENV: &str = "MAPREC_CACHE";

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    /// `MAPREC_CACHE` if set and nonempty, else `dir`; `None` disables caching.
    pub fn from_env_or(dir: Option<PathBuf>) -> Option<Self> {
        match std::env::var_os(CACHE_ENV) {
            Some(v) if !v.is_empty() => Some(Cache::new(v)),
            _ => dir.map(Cache::new),
        }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn key(family: TableFamily, genus: usize, lengths: &[usize]) -> String {
        let mut h = Sha256::new();
        h.update(curve_fingerprint(family.mode()).as_bytes());
        h.update(format!("|{}|{}|{:?}", family.name(), genus, lengths).as_bytes());
        format!("{:x}", h.finalize())
    }

    pub fn path(&self, family: TableFamily, genus: usize, lengths: &[usize]) -> PathBuf {
        let ls: Vec<String> = lengths.iter().map(|l| l.to_string()).collect();
        let key = Self::key(family, genus, lengths);
        self.dir.join(format!("{}-g{}-{}-{}.json", family.name(), genus, ls.join("_"), &key[..16]))
    }

    /// Cached coefficients up to `q_max`, if a deep enough entry exists.
    pub fn load(&self, family: TableFamily, genus: usize, lengths: &[usize], q_max: usize) -> Option<Vec<BigRational>> {
        let text = fs::read_to_string(self.path(family, genus, lengths)).ok()?;
        let row: RowJson = serde_json::from_str(&text).ok()?;
        if row.family != family.name() || row.genus != genus || row.lengths != lengths || row.truncation < q_max {
            return None;
        }
        let mut c = row.to_row().ok()?.coefficients;
        c.truncate(q_max + 1);
        Some(c)
    }

    /// Writes the row unless a deeper one is already stored.
    pub fn store(&self, family: TableFamily, genus: usize, lengths: &[usize], coefficients: &[BigRational]) -> io::Result<()> {
        let q_max = coefficients.len() - 1;
        if self.load(family, genus, lengths, q_max).is_some() {
            return Ok(());
        }
        fs::create_dir_all(&self.dir)?;
        let row = Row { lengths: lengths.to_vec(), coefficients: coefficients.to_vec() };
        let text = serde_json::to_string(&RowJson::new(family, genus, &row)).expect("plain data serializes");
        let path = self.path(family, genus, lengths);
        let tmp = path.with_extension("json.tmp");
        fs::write(&tmp, text)?;
        fs::rename(tmp, path)
    }
}
