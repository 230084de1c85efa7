//! Resumable per-cell results on disk, keyed by a hash of the canonical job.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use lyubeznik_core::lyubeznik::CellStore;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::CliError;

#[derive(Serialize, Deserialize)]
struct Ledger {
    job: String,
    cells: Vec<(usize, usize, u64)>,
}

pub struct FileStore {
    path: PathBuf,
    job: String,
    cells: Mutex<BTreeMap<(usize, usize), u64>>,
}

/// Hex SHA-256 of `text` plus a label, so local and projective runs of one
/// job keep separate files.
pub fn job_key(text: &str, label: &str) -> String {
    let mut h = Sha256::new();
    h.update(label.as_bytes());
    h.update([0]);
    h.update(text.as_bytes());
    hex::encode(h.finalize())
}

impl FileStore {
    /// Opens `path`, reusing its cells when it was written for `job`.
    pub fn open(path: &Path, job: String) -> Result<FileStore, CliError> {
        let mut cells = BTreeMap::new();
        if path.exists() {
            let text = fs::read_to_string(path).map_err(|source| CliError::Io {
                path: path.display().to_string(),
                source,
            })?;
            let ledger: Ledger = serde_json::from_str(&text).map_err(|e| CliError::CheckpointCorrupt {
                path: path.display().to_string(),
                message: e.to_string(),
            })?;
            if ledger.job != job {
                return Err(CliError::CheckpointMismatch(path.display().to_string()));
            }
            cells.extend(ledger.cells.into_iter().map(|(i, j, v)| ((i, j), v)));
        }
        Ok(FileStore {
            path: path.to_path_buf(),
            job,
            cells: Mutex::new(cells),
        })
    }

    pub fn len(&self) -> usize {
        self.cells.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn flush(&self, cells: &BTreeMap<(usize, usize), u64>) -> std::io::Result<()> {
        let ledger = Ledger {
            job: self.job.clone(),
            cells: cells.iter().map(|(&(i, j), &v)| (i, j, v)).collect(),
        };
        let tmp = self.path.with_extension("tmp");
        fs::write(&tmp, serde_json::to_string(&ledger).expect("ledger serializes"))?;
        fs::rename(&tmp, &self.path)
    }
}

impl CellStore for FileStore {
    fn load(&self, i: usize, j: usize) -> Option<u64> {
        self.cells.lock().unwrap().get(&(i, j)).copied()
    }

    fn store(&self, i: usize, j: usize, value: u64) {
        let mut cells = self.cells.lock().unwrap();
        cells.insert((i, j), value);
        // a lost write only costs recomputation
        let _ = self.flush(&cells);
    }
}
