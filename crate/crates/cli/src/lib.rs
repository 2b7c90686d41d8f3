//! Library side of the `hypergruss` command-line tool: grid parsing, sweep
//! execution, report writing and golden-file maintenance.

pub mod eval;
pub mod golden;
pub mod grid;
pub mod report;
pub mod sweep;

use hypergruss::HgError;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const FAILURE: i32 = 1;
    pub const DOMAIN: i32 = 2;
    pub const CONVERGENCE: i32 = 3;
    pub const IO: i32 = 4;
}

/// Environment variable capping the worker pool.
pub const THREADS_ENV: &str = "HYPERGRUSS_THREADS";

/// Exit code for a library error.
pub fn exit_code_for(err: &HgError) -> i32 {
    match err {
        HgError::NonConvergence { .. } => exit::CONVERGENCE,
        HgError::Golden(_) => exit::IO,
        HgError::Domain(_) | HgError::Hypothesis { .. } | HgError::Overflow(_) => exit::DOMAIN,
    }
}

/// Size the global rayon pool from `HYPERGRUSS_THREADS` when it is set.
pub fn init_thread_pool() -> Result<(), String> {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| format!("{THREADS_ENV} must be a positive integer, got {raw:?}"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| e.to_string())
}

/// Format a real with 17 significant digits.
pub fn fmt17(v: f64) -> String {
    format!("{v:.16e}")
}
