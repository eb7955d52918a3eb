//! Generating functions computed on the worker pool, with an optional
//! on-disk cache for `W`.

use std::fs;
use std::io::Write;
use std::ops::ControlFlow;
use std::path::{Path, PathBuf};

use anyhow::Context;
use ratcat::{
    enumerate_paths, stat_triple, BqtPolynomial, CoprimePair, Exponents, RankWord, StatTriple,
};

use crate::config::RunConfig;
use crate::failure::Failure;
use crate::sweep;

fn accumulate<F>(cfg: &RunConfig, pair: CoprimePair, stats: F) -> Result<BqtPolynomial, Failure>
where
    F: Fn(&ratcat::DyckPath) -> StatTriple + Sync,
{
    cfg.admit_all(pair)?;
    let pool = cfg.pool()?;
    let mut poly = BqtPolynomial::zero();
    let mut err = None;
    sweep::ordered(&pool, enumerate_paths(pair), stats, |_, st| {
        match poly.add_term(Exponents::new(st.skips, st.dinv, st.area), 1) {
            Ok(()) => ControlFlow::Continue(()),
            Err(e) => {
                err = Some(e);
                ControlFlow::Break(())
            }
        }
    });
    match err {
        Some(e) => Err(e.into()),
        None => Ok(poly),
    }
}

/// `W_{m,n}` from the rank-word statistics.
pub fn compute_w(cfg: &RunConfig, pair: CoprimePair) -> Result<BqtPolynomial, Failure> {
    accumulate(cfg, pair, |p| RankWord::from_path(p).stats())
}

/// `C_{m,n}` from the path statistics.
pub fn compute_c(cfg: &RunConfig, pair: CoprimePair) -> Result<BqtPolynomial, Failure> {
    accumulate(cfg, pair, |p| StatTriple {
        skips: 0,
        ..stat_triple(p)
    })
}

pub fn cache_path(dir: &Path, pair: CoprimePair) -> PathBuf {
    dir.join(format!("W_{}_{}.json", pair.m(), pair.n()))
}

/// The bytes stored in a cache file for `poly`.
pub fn cache_bytes(poly: &BqtPolynomial) -> Result<Vec<u8>, Failure> {
    let mut bytes = serde_json::to_vec_pretty(poly)?;
    bytes.push(b'\n');
    Ok(bytes)
}

/// `W_{m,n}`, read from or written to the cache directory when one is set.
pub fn w_cached(cfg: &RunConfig, pair: CoprimePair) -> Result<BqtPolynomial, Failure> {
    let Some(dir) = &cfg.cache_dir else {
        return compute_w(cfg, pair);
    };
    let file = cache_path(dir, pair);
    if let Ok(bytes) = fs::read(&file) {
        match serde_json::from_slice::<BqtPolynomial>(&bytes) {
            Ok(poly) => return Ok(poly),
            Err(e) => eprintln!(
                "warning: ignoring unreadable cache file {}: {e}",
                file.display()
            ),
        }
    }
    let poly = compute_w(cfg, pair)?;
    store(dir, &file, &cache_bytes(&poly)?)
        .with_context(|| format!("writing cache file {}", file.display()))?;
    Ok(poly)
}

fn store(dir: &Path, file: &Path, bytes: &[u8]) -> anyhow::Result<()> {
    fs::create_dir_all(dir)?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(bytes)?;
    tmp.persist(file)?;
    Ok(())
}
