//! On-disk module cache. Files are written atomically (temp file plus
//! rename) and embed the construction key, so a stale or corrupt entry is
//! detected on load and recomputation takes over.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};

use crate::gf2::GF2Matrix;
use crate::module::{Group, Module};

pub const CACHE_ENV: &str = "SGW_CACHE_DIR";
const MAGIC: &[u8; 4] = b"SGWM";
const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CacheKey {
    pub n: usize,
    pub expr: String,
    pub version: String,
}

impl CacheKey {
    pub fn new(n: usize, expr: impl Into<String>) -> CacheKey {
        CacheKey {
            n,
            expr: expr.into(),
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    fn file_name(&self) -> String {
        let mut hash = 0xcbf29ce484222325u64; // FNV-1a over the whole key
        for b in format!("{}|{}|{}", self.n, self.expr, self.version).bytes() {
            hash ^= b as u64;
            hash = hash.wrapping_mul(0x100000001b3);
        }
        let safe: String = self
            .expr
            .chars()
            .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
            .take(48)
            .collect();
        format!("n{}_{}_{:016x}.sgwm", self.n, safe, hash)
    }
}

pub fn cache_dir_from_env() -> Option<PathBuf> {
    std::env::var_os(CACHE_ENV).map(PathBuf::from)
}

fn write_str<W: Write>(w: &mut W, s: &str) -> io::Result<()> {
    w.write_all(&(s.len() as u64).to_le_bytes())?;
    w.write_all(s.as_bytes())
}

fn read_str<R: Read>(r: &mut R) -> io::Result<String> {
    let mut b8 = [0u8; 8];
    r.read_exact(&mut b8)?;
    let len = u64::from_le_bytes(b8) as usize;
    if len > 1 << 20 {
        return Err(io::Error::new(io::ErrorKind::InvalidData, "string too long"));
    }
    let mut buf = vec![0u8; len];
    r.read_exact(&mut buf)?;
    String::from_utf8(buf).map_err(|_| io::Error::new(io::ErrorKind::InvalidData, "utf8"))
}

fn write_group<W: Write>(w: &mut W, g: &Group) -> io::Result<()> {
    match g {
        Group::Symmetric(n) => {
            w.write_all(&[0u8])?;
            w.write_all(&(*n as u64).to_le_bytes())
        }
        Group::Alternating(n) => {
            w.write_all(&[2u8])?;
            w.write_all(&(*n as u64).to_le_bytes())
        }
        Group::Young(alpha) => {
            w.write_all(&[1u8])?;
            w.write_all(&(alpha.len() as u64).to_le_bytes())?;
            for &a in alpha {
                w.write_all(&(a as u64).to_le_bytes())?;
            }
            Ok(())
        }
    }
}

fn read_group<R: Read>(r: &mut R) -> io::Result<Group> {
    let mut tag = [0u8; 1];
    r.read_exact(&mut tag)?;
    let mut b8 = [0u8; 8];
    match tag[0] {
        0 => {
            r.read_exact(&mut b8)?;
            Ok(Group::Symmetric(u64::from_le_bytes(b8) as usize))
        }
        2 => {
            r.read_exact(&mut b8)?;
            Ok(Group::Alternating(u64::from_le_bytes(b8) as usize))
        }
        1 => {
            r.read_exact(&mut b8)?;
            let len = u64::from_le_bytes(b8) as usize;
            if len > 64 {
                return Err(io::Error::new(io::ErrorKind::InvalidData, "bad alpha"));
            }
            let mut alpha = Vec::with_capacity(len);
            for _ in 0..len {
                r.read_exact(&mut b8)?;
                alpha.push(u64::from_le_bytes(b8) as u32);
            }
            Ok(Group::Young(alpha))
        }
        _ => Err(io::Error::new(io::ErrorKind::InvalidData, "bad group tag")),
    }
}

/// Store a module under a key; atomic via temp file + rename, so
/// concurrent writers of the same key leave exactly one valid file.
pub fn cache_store(dir: &Path, key: &CacheKey, m: &Module) -> io::Result<PathBuf> {
    fs::create_dir_all(dir)?;
    let path = dir.join(key.file_name());
    static COUNTER: AtomicU64 = AtomicU64::new(0);
    let tmp = dir.join(format!(
        ".tmp-{}-{}-{}",
        std::process::id(),
        COUNTER.fetch_add(1, Ordering::Relaxed),
        key.file_name()
    ));
    {
        let mut f = io::BufWriter::new(fs::File::create(&tmp)?);
        f.write_all(MAGIC)?;
        f.write_all(&FORMAT_VERSION.to_le_bytes())?;
        write_str(&mut f, &key.version)?;
        f.write_all(&(key.n as u64).to_le_bytes())?;
        write_str(&mut f, &key.expr)?;
        write_group(&mut f, &m.group)?;
        write_str(&mut f, &m.label)?;
        f.write_all(&(m.dim as u64).to_le_bytes())?;
        f.write_all(&(m.gens.len() as u32).to_le_bytes())?;
        for g in &m.gens {
            g.write_to(&mut f)?;
        }
        f.flush()?;
    }
    fs::rename(&tmp, &path)?;
    Ok(path)
}

/// Load a module; None on missing file, corrupt payload, or key/version
/// mismatch (the caller recomputes).
pub fn cache_load(dir: &Path, key: &CacheKey) -> Option<Module> {
    let path = dir.join(key.file_name());
    let f = fs::File::open(path).ok()?;
    let mut r = io::BufReader::new(f);
    let mut magic = [0u8; 4];
    r.read_exact(&mut magic).ok()?;
    if &magic != MAGIC {
        return None;
    }
    let mut b4 = [0u8; 4];
    r.read_exact(&mut b4).ok()?;
    if u32::from_le_bytes(b4) != FORMAT_VERSION {
        return None;
    }
    let version = read_str(&mut r).ok()?;
    let mut b8 = [0u8; 8];
    r.read_exact(&mut b8).ok()?;
    let n = u64::from_le_bytes(b8) as usize;
    let expr = read_str(&mut r).ok()?;
    if version != key.version || n != key.n || expr != key.expr {
        return None;
    }
    let group = read_group(&mut r).ok()?;
    let label = read_str(&mut r).ok()?;
    r.read_exact(&mut b8).ok()?;
    let dim = u64::from_le_bytes(b8) as usize;
    r.read_exact(&mut b4).ok()?;
    let count = u32::from_le_bytes(b4) as usize;
    if count != group.generator_count() {
        return None;
    }
    let mut gens = Vec::with_capacity(count);
    for _ in 0..count {
        let g = GF2Matrix::read_from(&mut r).ok()?;
        if g.rows() != dim || g.cols() != dim {
            return None;
        }
        gens.push(g);
    }
    Some(Module::new(group, gens, label))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::ptn;
    use crate::specht::irreducible_module;

    #[test]
    fn round_trip_bit_exact() {
        let dir = tempfile::tempdir().unwrap();
        let d = irreducible_module(&ptn(&[5, 1])).unwrap();
        let key = CacheKey::new(6, "D(5,1)");
        cache_store(dir.path(), &key, &d).unwrap();
        let back = cache_load(dir.path(), &key).unwrap();
        assert_eq!(back.gens, d.gens);
        assert_eq!(back.dim, d.dim);
        assert_eq!(back.group, d.group);
    }

    #[test]
    fn corrupt_file_is_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let d = irreducible_module(&ptn(&[4, 1])).unwrap();
        let key = CacheKey::new(5, "D(4,1)");
        let path = cache_store(dir.path(), &key, &d).unwrap();
        let mut bytes = std::fs::read(&path).unwrap();
        let mid = bytes.len() / 2;
        bytes[mid] ^= 0xFF;
        bytes.truncate(bytes.len() - 3);
        std::fs::write(&path, bytes).unwrap();
        assert!(cache_load(dir.path(), &key).is_none());
    }

    #[test]
    fn version_mismatch_misses() {
        let dir = tempfile::tempdir().unwrap();
        let d = irreducible_module(&ptn(&[4, 1])).unwrap();
        let key = CacheKey::new(5, "D(4,1)");
        cache_store(dir.path(), &key, &d).unwrap();
        let other = CacheKey {
            version: "0.0.0-other".into(),
            ..key.clone()
        };
        assert!(cache_load(dir.path(), &other).is_none());
    }

    #[test]
    fn concurrent_writers_leave_one_valid_file() {
        let dir = tempfile::tempdir().unwrap();
        let d = irreducible_module(&ptn(&[4, 1])).unwrap();
        let key = CacheKey::new(5, "D(4,1)");
        std::thread::scope(|s| {
            for _ in 0..8 {
                let dir = dir.path().to_path_buf();
                let d = d.clone();
                let key = key.clone();
                s.spawn(move || {
                    cache_store(&dir, &key, &d).unwrap();
                });
            }
        });
        let survivors: Vec<_> = std::fs::read_dir(dir.path())
            .unwrap()
            .filter(|e| {
                !e.as_ref()
                    .unwrap()
                    .file_name()
                    .to_string_lossy()
                    .starts_with(".tmp")
            })
            .collect();
        assert_eq!(survivors.len(), 1);
        let back = cache_load(dir.path(), &key).unwrap();
        assert_eq!(back.gens, d.gens);
    }
}
