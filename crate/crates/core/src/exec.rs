//! Data-parallel execution helpers.
//!
//! Every reduction is split into fixed-size chunks. Chunks may be evaluated
//! on any thread, but their partial sums are always folded left to right,
//! so the parallel and sequential paths return the same bits.

use crate::numerics::C64;

/// Number of terms folded sequentially inside one chunk.
pub const CHUNK: usize = 4096;

fn chunk_sum<F>(start: usize, end: usize, term: &F) -> C64
where
    F: Fn(usize) -> C64,
{
    let mut acc = C64::new(0.0, 0.0);
    for k in start..end {
        acc += term(k);
    }
    acc
}

/// Sums `term(0) + ... + term(n - 1)` on the calling thread.
pub fn sum_sequential<F>(n: usize, term: F) -> C64
where
    F: Fn(usize) -> C64,
{
    let chunks = n.div_ceil(CHUNK);
    (0..chunks)
        .map(|c| chunk_sum(c * CHUNK, ((c + 1) * CHUNK).min(n), &term))
        .fold(C64::new(0.0, 0.0), |a, b| a + b)
}

/// Sums `term(0) + ... + term(n - 1)` with chunks spread over the rayon pool.
#[cfg(feature = "parallel")]
pub fn sum_parallel<F>(n: usize, term: F) -> C64
where
    F: Fn(usize) -> C64 + Sync,
{
    use rayon::prelude::*;
    let chunks = n.div_ceil(CHUNK);
    let partials: Vec<C64> = (0..chunks)
        .into_par_iter()
        .map(|c| chunk_sum(c * CHUNK, ((c + 1) * CHUNK).min(n), &term))
        .collect();
    partials.into_iter().fold(C64::new(0.0, 0.0), |a, b| a + b)
}

/// Chunked sum, parallel when the `parallel` feature is on.
pub fn sum<F>(n: usize, term: F) -> C64
where
    F: Fn(usize) -> C64 + Sync,
{
    #[cfg(feature = "parallel")]
    {
        if n > CHUNK {
            return sum_parallel(n, term);
        }
    }
    sum_sequential(n, term)
}

/// Order-preserving map over `0..n`.
pub fn map_sequential<T, F>(n: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    (0..n).map(f).collect()
}

#[cfg(feature = "parallel")]
pub fn map_parallel<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    use rayon::prelude::*;
    (0..n).into_par_iter().map(f).collect()
}

/// Order-preserving map, parallel when the `parallel` feature is on.
pub fn map<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if n > 1 {
            return map_parallel(n, f);
        }
    }
    map_sequential(n, f)
}
