//! Exhaustive search for k-page critical graphs among small connected ones.

use rayon::prelude::*;

use super::{is_k_page_critical_with, OracleError, OracleOptions};
use crate::graph::{enumerate_connected_unchecked, OrientedGraph};

/// Largest vertex count [`mine_critical`] accepts for `k >= 2`.
pub const MINE_MAX_N_MULTI: usize = 6;
/// Largest vertex count [`mine_critical`] accepts for `k <= 1`.
pub const MINE_MAX_N_SINGLE: usize = 7;

/// Connected k-page critical graphs on at most `n_max` vertices, one per
/// isomorphism class, ordered by vertex count and then canonical code.
pub fn mine_critical(n_max: usize, k: usize) -> Result<Vec<OrientedGraph>, OracleError> {
    let limit = if k >= 2 { MINE_MAX_N_MULTI } else { MINE_MAX_N_SINGLE };
    if n_max > limit {
        return Err(OracleError::SizeGuard {
            what: "mining vertex count",
            actual: n_max,
            limit,
        });
    }
    mine_critical_with(n_max, k, &OracleOptions::default())
}

/// As [`mine_critical`] without the mining guard; `opts.max_n` still applies
/// to each oracle call.
pub fn mine_critical_with(n_max: usize, k: usize, opts: &OracleOptions) -> Result<Vec<OrientedGraph>, OracleError> {
    let inner = OracleOptions { jobs: 1, ..*opts };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs.max(1))
        .build()
        .map_err(|e| OracleError::Pool(e.to_string()))?;
    let mut found = Vec::new();
    for n in 1..=n_max {
        let graphs = enumerate_connected_unchecked(n);
        let verdicts: Vec<Result<bool, OracleError>> =
            pool.install(|| graphs.par_iter().map(|g| is_k_page_critical_with(g, k, &inner)).collect());
        for (g, v) in graphs.into_iter().zip(verdicts) {
            if v? {
                found.push(g);
            }
        }
    }
    Ok(found)
}
