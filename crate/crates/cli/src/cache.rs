//! Plain-file cache of exact forest counts.
//!
//! Layout: `DIR/<sha256 of the family key>/n-<n>.txt` holding the decimal
//! count, plus `spec.json` with the family key itself for inspection.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use bicirc_core::laurent::forest_count_formula_at;
use bicirc_core::{BicirculantSpec, ForestCount, LaurentError};
use num_bigint::BigUint;
use sha2::{Digest, Sha256};

use crate::CliError;

pub struct CountCache {
    dir: Option<PathBuf>,
}

fn family_dir(root: &Path, spec: &BicirculantSpec) -> PathBuf {
    let digest = Sha256::digest(spec.family_key().as_bytes());
    root.join(hex::encode(digest))
}

impl CountCache {
    pub fn new(dir: Option<PathBuf>) -> Self {
        CountCache { dir }
    }

    pub fn disabled() -> Self {
        CountCache { dir: None }
    }

    fn read(&self, spec: &BicirculantSpec, n: u64) -> Option<ForestCount> {
        let path = family_dir(self.dir.as_ref()?, spec).join(format!("n-{n}.txt"));
        let text = fs::read_to_string(path).ok()?;
        text.trim().parse::<BigUint>().ok().map(ForestCount::new)
    }

    fn write(&self, spec: &BicirculantSpec, n: u64, f: &ForestCount) -> io::Result<()> {
        let Some(root) = &self.dir else { return Ok(()) };
        let dir = family_dir(root, spec);
        fs::create_dir_all(&dir)?;
        let key = dir.join("spec.json");
        if !key.exists() {
            fs::write(key, spec.family_key())?;
        }
        fs::write(dir.join(format!("n-{n}.txt")), format!("{f}\n"))
    }

    /// Exact count at order `n`, from the cache when present.
    pub fn count(&self, spec: &BicirculantSpec, n: u64) -> Result<ForestCount, CliError> {
        if let Some(f) = self.read(spec, n) {
            return Ok(f);
        }
        let f = forest_count_formula_at(spec, n).map_err(|e: LaurentError| CliError::Core(e.to_string()))?;
        self.write(spec, n, &f).map_err(|e| CliError::Io(format!("cache: {e}")))?;
        Ok(f)
    }
}
