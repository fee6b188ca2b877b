//! On-disk character-table cache keyed by a hash of the element list.

use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use crate::chartab::CharacterTable;
use crate::error::Result;
use crate::perm::GroupTable;

pub const DEFAULT_CACHE_DIR: &str = ".camina-cache";

pub fn table_key(g: &GroupTable) -> String {
    let mut h = Sha256::new();
    h.update((g.degree() as u64).to_le_bytes());
    for e in g.elements() {
        for &p in e.images() {
            h.update(p.to_le_bytes());
        }
    }
    hex::encode(h.finalize())
}

#[derive(Clone, Debug)]
pub struct CharTableCache {
    dir: PathBuf,
}

impl CharTableCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        CharTableCache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.jsonl"))
    }

    /// A missing or unreadable entry is a miss.
    pub fn get(&self, g: &GroupTable) -> Option<CharacterTable> {
        let text = std::fs::read_to_string(self.path(&table_key(g))).ok()?;
        let line = text.lines().next()?;
        let t: CharacterTable = serde_json::from_str(line).ok()?;
        (t.order == g.order()).then_some(t)
    }

    pub fn put(&self, g: &GroupTable, t: &CharacterTable) -> Result<()> {
        std::fs::create_dir_all(&self.dir)?;
        let key = table_key(g);
        let tmp = self.dir.join(format!("{key}.tmp{}", std::process::id()));
        let mut line = serde_json::to_string(t)?;
        line.push('\n');
        std::fs::write(&tmp, line)?;
        std::fs::rename(tmp, self.path(&key))?;
        Ok(())
    }
}
