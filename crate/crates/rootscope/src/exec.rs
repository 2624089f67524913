//! Execution-mode plumbing for the trial loops.
//!
//! With the `parallel` feature (default) trial batches run on the rayon
//! pool; without it they run sequentially. The benchmark harness flips
//! `set_serial_override` to compare both paths in one build.

use std::sync::atomic::{AtomicBool, Ordering};

static SERIAL_OVERRIDE: AtomicBool = AtomicBool::new(false);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExecMode {
    Parallel,
    Serial,
}

/// Force sequential execution even when the `parallel` feature is on.
pub fn set_serial_override(on: bool) {
    SERIAL_OVERRIDE.store(on, Ordering::SeqCst);
}

pub fn current_mode() -> ExecMode {
    if cfg!(feature = "parallel") && !SERIAL_OVERRIDE.load(Ordering::SeqCst) {
        ExecMode::Parallel
    } else {
        ExecMode::Serial
    }
}

/// Maps `f` over `0..n`, collecting results in index order. Trials are
/// independent by construction (each derives its own RNG stream), so the
/// output is identical in both modes.
pub fn map_trials<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if current_mode() == ExecMode::Parallel {
            use rayon::prelude::*;
            return (0..n).into_par_iter().map(f).collect();
        }
    }
    (0..n).map(f).collect()
}
