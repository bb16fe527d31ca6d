//! Deterministic chunked map-reduce.
//!
//! An index range is split into chunks of [`CHUNK`] consecutive indices. Each
//! chunk is reduced sequentially, then the chunk results are combined by
//! pairwise tree reduction in index order. Chunk boundaries never depend on
//! the thread count, so the result is the same with or without rayon.

use alloc::vec::Vec;
use core::ops::Range;

pub(crate) const CHUNK: usize = 1024;

fn chunk_ranges(len: usize) -> impl Iterator<Item = Range<usize>> + Clone {
    let n = len.div_ceil(CHUNK);
    (0..n).map(move |c| c * CHUNK..((c + 1) * CHUNK).min(len))
}

#[cfg(feature = "parallel")]
fn map_chunks<T, M>(len: usize, map: M) -> Vec<T>
where
    T: Send,
    M: Fn(Range<usize>) -> T + Sync,
{
    use rayon::prelude::*;
    let ranges: Vec<Range<usize>> = chunk_ranges(len).collect();
    let map = &map;
    ranges.into_par_iter().map(map).collect()
}

#[cfg(not(feature = "parallel"))]
fn map_chunks<T, M>(len: usize, map: M) -> Vec<T>
where
    T: Send,
    M: Fn(Range<usize>) -> T + Sync,
{
    chunk_ranges(len).map(map).collect()
}

/// Reduces `len` indices: `map` folds one chunk, `merge` combines two partials.
pub(crate) fn chunked<T, M, R>(len: usize, identity: T, map: M, merge: R) -> T
where
    T: Send + Clone,
    M: Fn(Range<usize>) -> T + Sync,
    R: Fn(T, T) -> T,
{
    let mut level = map_chunks(len, map);
    if level.is_empty() {
        return identity;
    }
    while level.len() > 1 {
        let mut next = Vec::with_capacity(level.len().div_ceil(2));
        let mut it = level.into_iter();
        while let Some(a) = it.next() {
            match it.next() {
                Some(b) => next.push(merge(a, b)),
                None => next.push(a),
            }
        }
        level = next;
    }
    level.pop().unwrap_or(identity)
}

/// Evaluates `f` at every index and collects the results in order.
pub(crate) fn collect<T, F>(len: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    let parts = map_chunks(len, |r| r.map(&f).collect::<Vec<T>>());
    let mut out = Vec::with_capacity(len);
    for p in parts {
        out.extend(p);
    }
    out
}
