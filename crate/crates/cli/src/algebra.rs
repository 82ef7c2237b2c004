//! Candidate algebras on `k^d`, read from JSON.
//!
//! ```json
//! { "dim": 2, "maps": { "l": [[0, 1, -1, 0], [0, 0, 0, 0]], "d": [[0, 0], [0, 1], [0, -1], [0, 0]] } }
//! ```
//!
//! Keys are generator names (`NAME.k` for blocks of dimension `K > 1`).
//! Entries are integers or strings `"p/q"`.

use std::collections::BTreeMap;

use diopkit_core::dioperad::Algebra;
use diopkit_core::{Mat, Rat};
use serde::Deserialize;

use crate::{CliError, Document};

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum Entry {
    Int(i64),
    Text(String),
}

#[derive(Debug, Deserialize)]
struct AlgebraFile {
    dim: usize,
    maps: BTreeMap<String, Vec<Vec<Entry>>>,
}

fn entry(e: &Entry) -> Result<Rat, CliError> {
    match e {
        Entry::Int(v) => Ok(Rat::from_int(*v)),
        Entry::Text(s) => s.trim().parse().map_err(|_| CliError::Usage(format!("bad matrix entry `{s}`"))),
    }
}

pub fn parse_algebra(text: &str, doc: &Document) -> Result<Algebra, CliError> {
    let file: AlgebraFile = serde_json::from_str(text).map_err(|e| CliError::Usage(format!("algebra file: {e}")))?;
    let mut maps: BTreeMap<(usize, usize), Vec<Mat>> = BTreeMap::new();
    for g in &doc.gens {
        let (m, n) = g.arity();
        let slot = maps.entry((m, n)).or_default();
        for k in 1..=g.space.dim() {
            let key = if g.space.dim() == 1 { g.name.clone() } else { format!("{}.{k}", g.name) };
            let rows =
                file.maps.get(&key).ok_or_else(|| CliError::Usage(format!("algebra file has no map for `{key}`")))?;
            let (r, c) = (file.dim.pow(m as u32), file.dim.pow(n as u32));
            if rows.len() != r || rows.iter().any(|row| row.len() != c) {
                return Err(CliError::Usage(format!("map `{key}` must be {r}x{c}")));
            }
            let dense = rows.iter().map(|row| row.iter().map(entry).collect()).collect::<Result<Vec<Vec<Rat>>, _>>()?;
            slot.push(Mat::from_dense(c, &dense)?);
        }
    }
    for key in file.maps.keys() {
        let base = key.rsplit_once('.').map_or(key.as_str(), |(b, _)| b);
        if !doc.gens.iter().any(|g| g.name == *key || g.name == base) {
            return Err(CliError::Usage(format!("unknown generator `{key}` in algebra file")));
        }
    }
    Ok(Algebra { dim: file.dim, maps })
}
