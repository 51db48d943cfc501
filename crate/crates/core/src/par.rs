//! Work distribution. With the `parallel` feature, jobs run on a rayon pool
//! sized by the caller; without it (or with one worker) they run in order
//! on the calling thread. Results always come back in job order, so callers
//! that fold them sequentially get identical output for any worker count.

/// Worker count meaning "whatever rayon picks".
pub const AUTO: usize = 0;

/// Evaluates `f(0), f(1), ..., f(jobs - 1)` and returns the results in
/// index order.
#[cfg(feature = "parallel")]
pub fn map_indexed<T, F>(jobs: usize, workers: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    use rayon::prelude::*;
    if workers == 1 || jobs <= 1 {
        return (0..jobs).map(f).collect();
    }
    if workers == AUTO {
        return (0..jobs).into_par_iter().map(f).collect();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(workers).build() {
        Ok(pool) => pool.install(|| (0..jobs).into_par_iter().map(&f).collect()),
        Err(_) => (0..jobs).map(f).collect(),
    }
}

#[cfg(not(feature = "parallel"))]
pub fn map_indexed<T, F>(jobs: usize, _workers: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..jobs).map(f).collect()
}

/// Whether this build can actually run jobs concurrently.
pub const fn is_parallel() -> bool {
    cfg!(feature = "parallel")
}
