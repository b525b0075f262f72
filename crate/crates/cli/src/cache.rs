//! On-disk character-table cache keyed by a SHA-256 of the multiplication table.

use std::fs;
use std::path::{Path, PathBuf};

use relfrob::numeric::parse_rational;
use relfrob::{CharacterTable, Config, Cyclo, FiniteGroup};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub const CACHE_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct CachedValue {
    conductor: u32,
    coefficients: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct CachedTable {
    version: u32,
    hash: String,
    order: usize,
    conductor: u32,
    dims: Vec<u64>,
    values: Vec<Vec<CachedValue>>,
}

pub fn table_hash(g: &FiniteGroup) -> String {
    let mut h = Sha256::new();
    h.update((g.order() as u64).to_le_bytes());
    for &x in g.table() {
        h.update(x.to_le_bytes());
    }
    hex::encode(h.finalize())
}

/// `--cache-dir`, then `RELFROB_CACHE_DIR`, then `$HOME/.cache/relfrob`.
pub fn default_dir() -> Option<PathBuf> {
    std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache").join("relfrob"))
}

pub struct TableCache {
    dir: Option<PathBuf>,
}

impl TableCache {
    pub fn new(dir: Option<PathBuf>) -> Self {
        TableCache { dir }
    }

    fn path(&self, hash: &str) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(format!("{}.json", hash)))
    }

    /// Loads a cached table if present, well-formed and valid; otherwise
    /// computes and stores it. Cache failures never change the result.
    pub fn get(&self, g: &FiniteGroup, config: &Config) -> relfrob::Result<CharacterTable> {
        let hash = table_hash(g);
        if let Some(path) = self.path(&hash) {
            if let Some(t) = load(&path, &hash, g) {
                return Ok(t);
            }
        }
        let t = CharacterTable::compute_with(g, config)?;
        if let Some(path) = self.path(&hash) {
            let _ = store(&path, &hash, &t);
        }
        Ok(t)
    }
}

fn load(path: &Path, hash: &str, g: &FiniteGroup) -> Option<CharacterTable> {
    let data = fs::read_to_string(path).ok()?;
    let c: CachedTable = serde_json::from_str(&data).ok()?;
    if c.version != CACHE_VERSION || c.hash != hash || c.order != g.order() {
        return None;
    }
    let r = g.conjugacy().count();
    if c.values.len() != r || c.dims.len() != r || c.values.iter().any(|row| row.len() != r) {
        return None;
    }
    let mut values = Vec::with_capacity(r);
    for row in &c.values {
        let mut out = Vec::with_capacity(r);
        for v in row {
            let coeffs = v.coefficients.iter().map(|s| parse_rational(s)).collect::<Option<Vec<_>>>()?;
            if v.conductor == 0 || coeffs.len() != relfrob::numeric::euler_phi(v.conductor) as usize {
                return None;
            }
            out.push(Cyclo::from_powers(v.conductor, coeffs));
        }
        values.push(out);
    }
    let t = CharacterTable::from_parts(g, c.conductor, values, c.dims);
    t.validate().ok()?;
    Some(t)
}

fn store(path: &Path, hash: &str, t: &CharacterTable) -> std::io::Result<()> {
    let c = CachedTable {
        version: CACHE_VERSION,
        hash: hash.to_string(),
        order: t.group_order(),
        conductor: t.conductor(),
        dims: t.dims().to_vec(),
        values: t
            .rows()
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| CachedValue {
                        conductor: v.conductor(),
                        coefficients: v.coeffs().iter().map(|r| r.to_string()).collect(),
                    })
                    .collect()
            })
            .collect(),
    };
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir)?;
    }
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    fs::write(&tmp, serde_json::to_vec(&c)?)?;
    fs::rename(&tmp, path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use relfrob::group::{alternating, symmetric};

    #[test]
    fn round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let cache = TableCache::new(Some(dir.path().to_path_buf()));
        let g = alternating(4).group;
        let fresh = cache.get(&g, &Config::default()).unwrap();
        let path = cache.path(&table_hash(&g)).unwrap();
        assert!(path.exists());
        let loaded = load(&path, &table_hash(&g), &g).unwrap();
        assert_eq!(loaded, fresh);
        assert_eq!(cache.get(&g, &Config::default()).unwrap(), fresh);
    }

    #[test]
    fn corrupted_or_foreign_entries_are_ignored() {
        let dir = tempfile::tempdir().unwrap();
        let cache = TableCache::new(Some(dir.path().to_path_buf()));
        let g = symmetric(3).group;
        let fresh = cache.get(&g, &Config::default()).unwrap();
        let path = cache.path(&table_hash(&g)).unwrap();
        let text = fs::read_to_string(&path).unwrap().replace("\"version\":1", "\"version\":99");
        fs::write(&path, text).unwrap();
        assert!(load(&path, &table_hash(&g), &g).is_none());
        fs::write(&path, "not json").unwrap();
        assert_eq!(cache.get(&g, &Config::default()).unwrap(), fresh);
        // a table for a different group under this hash fails validation
        let other = alternating(4).group;
        let t = CharacterTable::compute(&other).unwrap();
        store(&path, &table_hash(&g), &t).unwrap();
        assert!(load(&path, &table_hash(&g), &g).is_none());
    }

    #[test]
    fn hash_depends_on_the_table() {
        assert_ne!(table_hash(&symmetric(3).group), table_hash(&alternating(4).group));
        assert_eq!(table_hash(&symmetric(3).group).len(), 64);
    }
}
