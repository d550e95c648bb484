//! Multi-threaded exact ply.

use rayon::prelude::*;

use plyforge_core::ply::{DiskArrangement, Evaluation};
use plyforge_core::{Drawing, Error, PlyResult, Result};

/// Environment variable capping the number of worker threads.
pub const THREADS_ENV: &str = "PLYFORGE_THREADS";

const CHUNK: usize = 2048;

/// Worker count from `PLYFORGE_THREADS`, or rayon's default when unset or
/// not a positive integer.
pub fn thread_limit() -> Option<usize> {
    std::env::var(THREADS_ENV)
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
}

/// Same result as [`plyforge_core::ply::ply_number_exact`], computed on a
/// thread pool.
pub fn ply_number_exact_parallel(d: &Drawing) -> Result<PlyResult> {
    let arrangement = DiskArrangement::from_drawing(d);
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = thread_limit() {
        builder = builder.num_threads(n);
    }
    let evaluate = || {
        let candidates = arrangement.candidates();
        candidates
            .par_chunks(CHUNK)
            .filter_map(|chunk| arrangement.evaluate(chunk))
            .reduce_with(Evaluation::merge)
    };
    let best = match builder.build() {
        Ok(pool) => pool.install(evaluate),
        Err(_) => evaluate(),
    };
    best.map(|b| arrangement.result(b)).ok_or(Error::NoDisks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use plyforge_core::logply::assemble_heavy_path_drawing;
    use plyforge_core::ply::ply_number_exact;
    use plyforge_core::TreeFamily;

    #[test]
    fn matches_sequential() {
        for seed in 0..4 {
            let t = TreeFamily::Random {
                n: 300,
                max_degree: 4,
                seed,
            }
            .generate()
            .unwrap();
            let d = assemble_heavy_path_drawing(&t).unwrap();
            assert_eq!(
                ply_number_exact_parallel(&d).unwrap(),
                ply_number_exact(&d).unwrap()
            );
        }
    }
}
