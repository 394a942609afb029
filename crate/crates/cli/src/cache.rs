//! Content-addressed result cache. Each entry is
//! `<dir>/<sha256(key)>.json` holding the key, the envelope and a checksum
//! of the envelope's compact serialization.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::envelope::Envelope;
use crate::job::JobSpec;

#[derive(Serialize, Deserialize)]
struct Entry {
    key: String,
    checksum: String,
    envelope: Envelope,
}

#[derive(Debug)]
pub enum Lookup {
    Miss,
    Hit(Envelope),
    /// The file exists but fails validation. The envelope is kept when it
    /// still parses so callers can say what changed.
    Corrupt { reason: String, envelope: Option<Envelope> },
}

pub struct Cache {
    dir: PathBuf,
}

fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

fn checksum(env: &Envelope) -> String {
    sha256_hex(serde_json::to_string(env).expect("envelope serializes").as_bytes())
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Cache {
        Cache { dir: dir.into() }
    }

    pub fn path_for(&self, job: &JobSpec) -> PathBuf {
        self.dir.join(format!("{}.json", sha256_hex(job.cache_key().as_bytes())))
    }

    pub fn get(&self, job: &JobSpec) -> Lookup {
        let path = self.path_for(job);
        let bytes = match fs::read(&path) {
            Ok(b) => b,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Lookup::Miss,
            Err(e) => {
                return Lookup::Corrupt {
                    reason: format!("cannot read {}: {e}", path.display()),
                    envelope: None,
                }
            }
        };
        let entry: Entry = match serde_json::from_slice(&bytes) {
            Ok(e) => e,
            Err(e) => {
                return Lookup::Corrupt {
                    reason: format!("cannot parse {}: {e}", path.display()),
                    envelope: None,
                }
            }
        };
        let reason = if entry.key != job.cache_key() {
            Some("key does not match the requested job")
        } else if entry.checksum != checksum(&entry.envelope) {
            Some("checksum mismatch")
        } else if entry.envelope.job != *job {
            Some("job echo does not match the requested job")
        } else {
            None
        };
        match reason {
            None => Lookup::Hit(entry.envelope),
            Some(r) => Lookup::Corrupt {
                reason: format!("{}: {r}", path.display()),
                envelope: Some(entry.envelope),
            },
        }
    }

    /// Write through a temporary file in the same directory and rename, so
    /// readers see either the old entry or the complete new one.
    pub fn put(&self, env: &Envelope) -> std::io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let entry = Entry {
            key: env.job.cache_key(),
            checksum: checksum(env),
            envelope: env.clone(),
        };
        let body = serde_json::to_vec_pretty(&entry).expect("cache entry serializes");
        let target = self.path_for(&env.job);
        let nanos = SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_nanos());
        let tmp = self.dir.join(format!(".tmp-{}-{nanos}", std::process::id()));
        let result = write_file(&tmp, &body).and_then(|()| fs::rename(&tmp, &target));
        if result.is_err() {
            let _ = fs::remove_file(&tmp);
        }
        result
    }
}

fn write_file(path: &Path, body: &[u8]) -> std::io::Result<()> {
    let mut f = fs::File::create(path)?;
    f.write_all(body)?;
    f.sync_all()
}
