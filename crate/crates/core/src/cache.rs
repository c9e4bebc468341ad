//! Persistence of the dimension, structure-constant and Murphy-trace memos
//! as a versioned JSON file. Every entry is revalidated when loaded.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::diagrams::{dimension_memo, seed_dimension_memo, YoungDiagram};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::symgroup::{built_class_algebras, class_algebra, CycleType, MAX_CLASS_N};
use crate::traces::{seed_trace_memo, trace_memo};

/// Bumped whenever the layout below changes.
pub const CACHE_VERSION: u32 = 1;

pub const CACHE_FILE: &str = "heckeq-memo.json";

#[derive(Debug, Default, Serialize, Deserialize)]
struct CacheDoc {
    version: u32,
    dimensions: BTreeMap<String, u64>,
    // n -> [(class a, class b, coefficients on every class)]
    structure_constants: BTreeMap<usize, Vec<ProductEntry>>,
    murphy_traces: BTreeMap<String, BTreeMap<usize, LaurentPoly>>,
}

#[derive(Debug, Serialize, Deserialize)]
struct ProductEntry {
    a: String,
    b: String,
    coeffs: Vec<String>,
}

/// How many entries were accepted on load.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CacheStats {
    pub dimensions: usize,
    pub structure_constants: usize,
    pub murphy_traces: usize,
}

pub fn cache_path(dir: &Path) -> PathBuf {
    dir.join(CACHE_FILE)
}

fn parts_string(c: &CycleType) -> String {
    c.parts()
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// Seeds the memos from `dir`. A missing file or one written by another
/// version loads nothing.
pub fn load(dir: &Path) -> Result<CacheStats> {
    let path = cache_path(dir);
    let text = match fs::read_to_string(&path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(CacheStats::default()),
        Err(e) => return Err(Error::Cache(format!("{}: {e}", path.display()))),
    };
    let doc: CacheDoc = serde_json::from_str(&text)
        .map_err(|e| Error::Cache(format!("{}: {e}", path.display())))?;
    if doc.version != CACHE_VERSION {
        return Ok(CacheStats::default());
    }

    let dims = doc
        .dimensions
        .iter()
        .filter_map(|(g, &d)| g.parse::<YoungDiagram>().ok().map(|g| (g, d)));
    let mut stats = CacheStats {
        dimensions: seed_dimension_memo(dims),
        ..CacheStats::default()
    };

    for (n, entries) in doc.structure_constants {
        if n == 0 || n > MAX_CLASS_N {
            continue;
        }
        let parsed: Vec<_> = entries
            .into_iter()
            .filter_map(|e| {
                let a = e.a.parse::<CycleType>().ok()?;
                let b = e.b.parse::<CycleType>().ok()?;
                let coeffs = e
                    .coeffs
                    .iter()
                    .map(|c| c.parse::<BigInt>().ok())
                    .collect::<Option<Vec<_>>>()?;
                Some((a, b, coeffs))
            })
            .collect();
        stats.structure_constants += class_algebra(n)?.seed_memo(parsed);
    }

    let traces = doc
        .murphy_traces
        .into_iter()
        .filter_map(|(g, e)| g.parse::<YoungDiagram>().ok().map(|g| (g, e)));
    stats.murphy_traces = seed_trace_memo(traces);
    Ok(stats)
}

/// Writes the current memos to `dir`, creating it if needed.
pub fn save(dir: &Path) -> Result<PathBuf> {
    let io = |e: std::io::Error| Error::Cache(format!("{}: {e}", dir.display()));
    fs::create_dir_all(dir).map_err(io)?;
    let mut doc = CacheDoc {
        version: CACHE_VERSION,
        ..CacheDoc::default()
    };
    doc.dimensions = dimension_memo()
        .into_iter()
        .map(|(g, d)| (g.to_string(), d))
        .collect();
    for alg in built_class_algebras() {
        let entries: Vec<ProductEntry> = alg
            .memo_entries()
            .into_iter()
            .map(|(a, b, v)| ProductEntry {
                a: parts_string(&a),
                b: parts_string(&b),
                coeffs: v.iter().map(BigInt::to_string).collect(),
            })
            .collect();
        if !entries.is_empty() {
            doc.structure_constants.insert(alg.n(), entries);
        }
    }
    doc.murphy_traces = trace_memo()
        .into_iter()
        .map(|(g, e)| (g.to_string(), e))
        .collect();

    let path = cache_path(dir);
    let tmp = dir.join(format!("{CACHE_FILE}.tmp"));
    let text = serde_json::to_string(&doc).map_err(|e| Error::Cache(e.to_string()))?;
    fs::write(&tmp, text).map_err(io)?;
    fs::rename(&tmp, &path).map_err(io)?;
    Ok(path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symgroup::{class_product, ClassVector};
    use crate::traces::murphy_traces;

    fn scratch(tag: &str) -> PathBuf {
        let d = std::env::temp_dir().join(format!("heckeq-cache-{tag}-{}", std::process::id()));
        let _ = fs::remove_dir_all(&d);
        d
    }

    #[test]
    fn roundtrip_through_disk() {
        let dir = scratch("roundtrip");
        let t = ClassVector::cycle_sum(4, 2).unwrap();
        class_product(&t, &t).unwrap();
        murphy_traces(&"3,1".parse().unwrap());
        let path = save(&dir).unwrap();
        assert!(path.exists());
        let stats = load(&dir).unwrap();
        assert!(stats.dimensions > 0);
        assert!(stats.structure_constants > 0);
        assert!(stats.murphy_traces > 0);
        fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn missing_stale_and_corrupt_files() {
        let dir = scratch("edge");
        assert_eq!(load(&dir).unwrap(), CacheStats::default());
        fs::create_dir_all(&dir).unwrap();
        fs::write(cache_path(&dir), r#"{"version":999,"dimensions":{},"structure_constants":{},"murphy_traces":{}}"#).unwrap();
        assert_eq!(load(&dir).unwrap(), CacheStats::default());
        fs::write(cache_path(&dir), "not json").unwrap();
        assert!(matches!(load(&dir), Err(Error::Cache(_))));
        let bogus = r#"{"version":1,"dimensions":{"2,1":5},"structure_constants":{},"murphy_traces":{"2,1":{"2":"q","3":"q"}}}"#;
        fs::write(cache_path(&dir), bogus).unwrap();
        assert_eq!(load(&dir).unwrap(), CacheStats::default());
        fs::remove_dir_all(&dir).unwrap();
    }
}
