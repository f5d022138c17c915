//! Data-parallel sweeps over index ranges.
//!
//! With the `parallel` feature (default) the sweeps run on rayon's pool;
//! without it, or after [`set_parallel(false)`](set_parallel), they run on the
//! calling thread. Results are always returned in index order, so reports do
//! not depend on scheduling.

use std::sync::atomic::{AtomicBool, Ordering};

static PARALLEL: AtomicBool = AtomicBool::new(true);

/// Enables or disables the rayon path at runtime (no effect without the
/// `parallel` feature). Used by the benches to compare both paths.
pub fn set_parallel(on: bool) {
    PARALLEL.store(on, Ordering::SeqCst);
}

pub fn parallel_enabled() -> bool {
    cfg!(feature = "parallel") && PARALLEL.load(Ordering::SeqCst)
}

/// `(0..n).map(f)` collected in index order.
pub fn map_range<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel_enabled() {
        use rayon::prelude::*;
        return (0..n).into_par_iter().map(f).collect();
    }
    (0..n).map(f).collect()
}

/// The lowest index `i < n` for which `f(i)` is `Some`, with its value.
pub fn first_some<T, F>(n: usize, f: F) -> Option<T>
where
    T: Send,
    F: Fn(usize) -> Option<T> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel_enabled() {
        use rayon::prelude::*;
        return (0..n).into_par_iter().filter_map(f).find_first(|_| true);
    }
    (0..n).find_map(f)
}

/// Splits a flat index over a grid of the given extents (row-major).
pub fn unflatten<const N: usize>(mut idx: usize, extents: [usize; N]) -> [usize; N] {
    let mut out = [0; N];
    for k in (0..N).rev() {
        out[k] = idx % extents[k];
        idx /= extents[k];
    }
    out
}
