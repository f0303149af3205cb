use std::fs;
use std::io::Write;
use std::path::PathBuf;

use super::{reduced_twist_complex, twist_complex_above, TwistSpec};
use crate::chain::{read_complex, write_complex, Complex};
use crate::error::Result;

/// Tag written into every cache file; a mismatch forces a rebuild.
pub const ENGINE_TAG: &str = concat!("khmr-", env!("CARGO_PKG_VERSION"), "-twist1");

/// Disk cache of reduced twist complexes under `<root>/twist/`.
#[derive(Clone, Debug)]
pub struct TwistCache {
    root: Option<PathBuf>,
}

impl TwistCache {
    /// Cache rooted at `root`; `None` disables caching.
    pub fn new(root: Option<PathBuf>) -> Self {
        Self { root }
    }

    /// Root taken from `KHMR_CACHE`, if set.
    pub fn from_env() -> Self {
        Self::new(std::env::var_os("KHMR_CACHE").map(PathBuf::from))
    }

    pub fn path(&self, spec: &TwistSpec) -> Option<PathBuf> {
        self.root
            .as_ref()
            .map(|r| r.join("twist").join(format!("n{}_k{}_{}.cx", spec.n, spec.k, spec.orient_tag())))
    }

    /// `C(k)` restricted to degrees that can reach `floor`. Without a cache
    /// root this is built truncated; with one, the full complex is cached.
    pub fn get_above(&self, spec: &TwistSpec, floor: i32) -> Result<Complex> {
        if self.root.is_none() {
            return Ok(twist_complex_above(spec.n, spec.k, Some(floor)));
        }
        Ok(self.get(spec)?.truncate(floor - 1))
    }

    pub fn get(&self, spec: &TwistSpec) -> Result<Complex> {
        let Some(path) = self.path(spec) else {
            return Ok(reduced_twist_complex(spec.n, spec.k));
        };
        if let Ok(text) = fs::read_to_string(&path) {
            if let Ok((c, tag)) = read_complex(&text) {
                if tag == ENGINE_TAG {
                    return Ok(c);
                }
            }
        }
        let c = reduced_twist_complex(spec.n, spec.k);
        let dir = path.parent().expect("cache path has a parent");
        fs::create_dir_all(dir)?;
        // Write to a temporary name, then rename into place.
        let tmp = dir.join(format!(".{}.{}.tmp", path.file_name().unwrap().to_string_lossy(), std::process::id()));
        let mut f = fs::File::create(&tmp)?;
        f.write_all(write_complex(&c, ENGINE_TAG).as_bytes())?;
        f.sync_all()?;
        fs::rename(&tmp, &path)?;
        Ok(c)
    }
}
