//! Data-parallel helpers. With the `parallel` feature these fan out over
//! rayon's pool unless sequential mode has been requested at runtime; without
//! the feature they are plain loops.

use std::sync::atomic::{AtomicBool, Ordering};

static SEQUENTIAL: AtomicBool = AtomicBool::new(false);

/// Forces (or releases) sequential execution process-wide.
pub fn set_sequential(on: bool) {
    SEQUENTIAL.store(on, Ordering::SeqCst);
}

pub fn is_parallel() -> bool {
    cfg!(feature = "parallel") && !SEQUENTIAL.load(Ordering::Relaxed)
}

pub fn map_range<T: Send>(n: usize, f: impl Fn(usize) -> T + Sync + Send) -> Vec<T> {
    #[cfg(feature = "parallel")]
    if is_parallel() && n > 1 {
        use rayon::prelude::*;
        return (0..n).into_par_iter().map(f).collect();
    }
    (0..n).map(f).collect()
}

pub fn map<S: Sync, T: Send>(items: &[S], f: impl Fn(&S) -> T + Sync + Send) -> Vec<T> {
    #[cfg(feature = "parallel")]
    if is_parallel() && items.len() > 1 {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    items.iter().map(f).collect()
}

/// Runs two closures, concurrently when parallel.
pub fn join<A: Send, B: Send>(a: impl FnOnce() -> A + Send, b: impl FnOnce() -> B + Send) -> (A, B) {
    #[cfg(feature = "parallel")]
    if is_parallel() {
        return rayon::join(a, b);
    }
    (a(), b())
}
