//! Parallel map over the path stream with results consumed in enumeration
//! order, so output never depends on the worker count.

use std::ops::ControlFlow;

use ratcat::DyckPath;
use rayon::prelude::*;

const CHUNK: usize = 1 << 14;

pub fn ordered<I, T, F, G>(pool: &rayon::ThreadPool, paths: I, map: F, mut consume: G)
where
    I: IntoIterator<Item = DyckPath>,
    T: Send,
    F: Fn(&DyckPath) -> T + Sync,
    G: FnMut(DyckPath, T) -> ControlFlow<()>,
{
    let mut paths = paths.into_iter();
    loop {
        let chunk: Vec<DyckPath> = paths.by_ref().take(CHUNK).collect();
        if chunk.is_empty() {
            return;
        }
        let mapped: Vec<T> = pool.install(|| chunk.par_iter().map(&map).collect());
        for (p, t) in chunk.into_iter().zip(mapped) {
            if consume(p, t).is_break() {
                return;
            }
        }
    }
}
