//! On-disk cache of Verma expansions: one JSON file per (family, m, weight).
//!
//! Entries with another version, another key or an unreadable body are
//! ignored and overwritten.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::Result;
use ospchar::expansion::ExpansionJson;
use ospchar::{Algebra, Family, VermaExpansion, Weight};
use serde::{Deserialize, Serialize};

pub const VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct Entry {
    version: u32,
    family: Family,
    m: usize,
    weight: String,
    expansion: ExpansionJson,
}

pub fn path(dir: &Path, alg: Algebra, lambda: &Weight) -> PathBuf {
    let name: String = lambda
        .to_string()
        .chars()
        .map(|c| match c {
            ';' => '_',
            ',' => '_',
            '-' => 'm',
            '/' => 'h',
            c => c,
        })
        .collect();
    dir.join(format!("{}{}_{name}.json", alg.family(), alg.m()))
}

fn load(dir: &Path, alg: Algebra, lambda: &Weight) -> Option<VermaExpansion> {
    let text = fs::read_to_string(path(dir, alg, lambda)).ok()?;
    let entry: Entry = serde_json::from_str(&text).ok()?;
    let fresh = entry.version == VERSION
        && entry.family == alg.family()
        && entry.m == alg.m()
        && entry.weight == lambda.to_string()
        && entry.expansion.algebra == alg;
    if !fresh {
        return None;
    }
    VermaExpansion::from_json(&entry.expansion)
        .ok()
        .filter(|e| e.lambda == *lambda)
}

fn store(dir: &Path, alg: Algebra, lambda: &Weight, e: &VermaExpansion) -> std::io::Result<()> {
    fs::create_dir_all(dir)?;
    let entry = Entry {
        version: VERSION,
        family: alg.family(),
        m: alg.m(),
        weight: lambda.to_string(),
        expansion: e.to_json(),
    };
    let target = path(dir, alg, lambda);
    let tmp = dir.join(format!(
        ".tmp-{}-{}",
        std::process::id(),
        target.file_name().unwrap().to_string_lossy()
    ));
    let mut f = fs::File::create(&tmp)?;
    f.write_all(serde_json::to_string_pretty(&entry)?.as_bytes())?;
    f.sync_all()?;
    fs::rename(&tmp, &target)
}

/// The expansion of λ, read from the cache when a valid entry exists.
pub fn expansion(dir: Option<&Path>, alg: Algebra, lambda: &Weight) -> Result<VermaExpansion> {
    if let Some(hit) = dir.and_then(|d| load(d, alg, lambda)) {
        return Ok(hit);
    }
    let e = (*ospchar::verma_expansion(alg, lambda)?).clone();
    if let Some(d) = dir {
        if let Err(err) = store(d, alg, lambda, &e) {
            eprintln!("warning: could not write cache in {}: {err}", d.display());
        }
    }
    Ok(e)
}
