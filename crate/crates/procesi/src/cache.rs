//! On-disk fiber cache: one JSON document per partition, written atomically.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex};

use anyhow::{anyhow, bail, Context};
use num_bigint::BigInt;
use serde_json::{json, Value};

use procesi_core::macdonald::{macdonald_bounded, ProcesiFiber};
use procesi_core::verify::FiberSource;
use procesi_core::{Basis, Error, LaurentQT, Partition, SymFunc};

pub const CACHE_ENV: &str = "PROCESI_CACHE";

/// Picks the cache directory: `--no-cache` disables it, then the explicit
/// flag, then `$PROCESI_CACHE`, then `.procesi-cache` next to the output.
pub fn resolve_cache_dir(
    flag: Option<&Path>,
    no_cache: bool,
    output: Option<&Path>,
) -> Option<PathBuf> {
    if no_cache {
        return None;
    }
    if let Some(dir) = flag {
        return Some(dir.to_path_buf());
    }
    if let Some(dir) = std::env::var_os(CACHE_ENV).filter(|v| !v.is_empty()) {
        return Some(PathBuf::from(dir));
    }
    let base = output
        .and_then(Path::parent)
        .filter(|p| !p.as_os_str().is_empty())
        .unwrap_or_else(|| Path::new("."));
    Some(base.join(".procesi-cache"))
}

pub(crate) fn int_value(c: &BigInt) -> Value {
    match i64::try_from(c) {
        Ok(v) => json!(v),
        Err(_) => json!(c.to_string()),
    }
}

fn parse_int(v: &Value) -> anyhow::Result<BigInt> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| anyhow!("non-integer coefficient {n}")),
        Value::String(s) => s.parse().with_context(|| format!("bad integer {s:?}")),
        other => bail!("expected an integer, found {other}"),
    }
}

fn parse_i64(v: &Value) -> anyhow::Result<i64> {
    v.as_i64()
        .ok_or_else(|| anyhow!("expected an exponent, found {v}"))
}

fn parse_partition(v: &Value) -> anyhow::Result<Partition> {
    let parts = v
        .as_array()
        .ok_or_else(|| anyhow!("partition must be an array"))?
        .iter()
        .map(|x| {
            x.as_u64()
                .map(|p| p as usize)
                .ok_or_else(|| anyhow!("bad part {x}"))
        })
        .collect::<anyhow::Result<Vec<_>>>()?;
    Ok(Partition::new(parts)?)
}

pub fn fiber_to_json(f: &ProcesiFiber) -> Value {
    let coefficients: Vec<Value> = f
        .schur_expansion()
        .terms()
        .map(|(mu, c)| {
            let terms: Vec<Value> = c
                .terms()
                .map(|((a, b), v)| json!([a, b, int_value(v)]))
                .collect();
            json!({ "mu": mu.parts(), "terms": terms })
        })
        .collect();
    json!({ "partition": f.lambda().parts(), "coefficients": coefficients })
}

pub fn fiber_from_json(v: &Value) -> anyhow::Result<ProcesiFiber> {
    let lambda = parse_partition(
        v.get("partition")
            .ok_or_else(|| anyhow!("missing partition"))?,
    )?;
    let mut schur = SymFunc::zero(lambda.size(), Basis::Schur);
    let coeffs = v
        .get("coefficients")
        .and_then(Value::as_array)
        .ok_or_else(|| anyhow!("missing coefficients"))?;
    for entry in coeffs {
        let mu = parse_partition(entry.get("mu").ok_or_else(|| anyhow!("missing mu"))?)?;
        let mut c = LaurentQT::zero();
        for t in entry
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| anyhow!("missing terms"))?
        {
            match t.as_array().map(Vec::as_slice) {
                Some([a, b, x]) => c.add_term(parse_i64(a)?, parse_i64(b)?, &parse_int(x)?),
                _ => bail!("term must be [a, b, c]"),
            }
        }
        schur.add_term(&mu, c);
    }
    Ok(ProcesiFiber::from_parts(lambda, schur)?)
}

/// Fibers memoized in memory and, when a directory is configured, on disk.
/// Unreadable or inconsistent cache files are recomputed and overwritten.
pub struct DiskCache {
    dir: Option<PathBuf>,
    max_n: usize,
    memo: Mutex<BTreeMap<Partition, Arc<ProcesiFiber>>>,
}

impl DiskCache {
    pub fn new(dir: Option<PathBuf>, max_n: usize) -> Self {
        Self {
            dir,
            max_n,
            memo: Mutex::new(BTreeMap::new()),
        }
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    pub fn path_for(dir: &Path, lambda: &Partition) -> PathBuf {
        let stem = if lambda.is_empty() {
            "empty".to_string()
        } else {
            lambda
                .parts()
                .iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join("-")
        };
        dir.join(format!("fiber-{stem}.json"))
    }

    fn load(&self, dir: &Path, lambda: &Partition) -> Option<ProcesiFiber> {
        let text = fs::read_to_string(Self::path_for(dir, lambda)).ok()?;
        let value: Value = serde_json::from_str(&text).ok()?;
        let fiber = fiber_from_json(&value).ok()?;
        (fiber.lambda() == lambda).then_some(fiber)
    }

    /// Writes to a temporary file in the cache directory and renames it into
    /// place, so concurrent writers never expose a partial document.
    pub fn store(dir: &Path, fiber: &ProcesiFiber) -> anyhow::Result<()> {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
        serde_json::to_writer(&mut tmp, &fiber_to_json(fiber))?;
        tmp.write_all(b"\n")?;
        tmp.persist(Self::path_for(dir, fiber.lambda()))?;
        Ok(())
    }
}

impl FiberSource for DiskCache {
    fn fiber(&self, lambda: &Partition) -> Result<Arc<ProcesiFiber>, Error> {
        if let Some(f) = self.memo.lock().expect("cache lock").get(lambda) {
            return Ok(f.clone());
        }
        let fiber = match self.dir.as_deref().and_then(|d| self.load(d, lambda)) {
            Some(f) => f,
            None => {
                let f = macdonald_bounded(lambda, self.max_n)?;
                if let Some(dir) = &self.dir {
                    if let Err(e) = Self::store(dir, &f) {
                        eprintln!("warning: could not cache {lambda}: {e:#}");
                    }
                }
                f
            }
        };
        let fiber = Arc::new(fiber);
        self.memo
            .lock()
            .expect("cache lock")
            .insert(lambda.clone(), fiber.clone());
        Ok(fiber)
    }
}
