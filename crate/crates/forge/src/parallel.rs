use std::num::NonZeroUsize;
use std::thread;

use taxicab_forge_core::oracle::{
    merge_sums, positive_sums_for_range, smallest_in_sums, OracleError, Representations,
    MAX_SEARCH_BOUND,
};

pub const WORKERS_ENV: &str = "TAXICAB_FORGE_WORKERS";

/// The environment variable wins over the flag; both fall back to the machine's parallelism.
pub fn resolve_workers(flag: Option<usize>, env: Option<&str>) -> Result<usize, String> {
    if let Some(raw) = env.map(str::trim).filter(|s| !s.is_empty()) {
        return match raw.parse::<usize>() {
            Ok(n) if n > 0 => Ok(n),
            _ => Err(format!(
                "{WORKERS_ENV} must be a positive integer, got {raw:?}"
            )),
        };
    }
    match flag {
        Some(0) => Err("--workers must be positive".to_string()),
        Some(n) => Ok(n),
        None => Ok(thread::available_parallelism().map_or(1, NonZeroUsize::get)),
    }
}

// pairs (a, b) with a ≤ b and a³ + b³ ≤ bound³, for one a
fn pairs_for(a: u64, bound: u64) -> u64 {
    let rest = u128::from(bound).pow(3) - u128::from(a).pow(3);
    // largest b with b³ ≤ rest
    let mut b = (rest as f64).cbrt() as u64;
    while u128::from(b + 1).pow(3) <= rest {
        b += 1;
    }
    while b > 0 && u128::from(b).pow(3) > rest {
        b -= 1;
    }
    b.min(bound).saturating_sub(a) + u64::from(b >= a)
}

/// Contiguous ranges of `a` with roughly equal numbers of pairs.
pub fn split_ranges(bound: u64, workers: usize) -> Vec<std::ops::Range<u64>> {
    let counts: Vec<u64> = (1..=bound).map(|a| pairs_for(a, bound)).collect();
    let total: u64 = counts.iter().sum();
    let share = total.div_ceil(workers.max(1) as u64).max(1);
    let mut out = Vec::new();
    let mut start = 1;
    let mut acc = 0;
    for (i, c) in counts.iter().enumerate() {
        acc += c;
        let a = i as u64 + 1;
        if acc >= share {
            out.push(start..a + 1);
            start = a + 1;
            acc = 0;
        }
    }
    if start <= bound {
        out.push(start..bound + 1);
    }
    out
}

/// [`taxicab_forge_core::oracle::taxicab`] with the pair enumeration spread over threads.
///
/// The merged table is sorted, so the answer does not depend on `workers`.
pub fn taxicab_parallel(
    k: usize,
    bound: u64,
    workers: usize,
) -> Result<Representations, OracleError> {
    if bound == 0 {
        return Err(OracleError::InvalidArgument("bound must be positive"));
    }
    if bound > MAX_SEARCH_BOUND {
        return Err(OracleError::BoundTooLarge(bound));
    }
    let ranges = split_ranges(bound, workers);
    let parts = thread::scope(|s| {
        let handles: Vec<_> = ranges
            .into_iter()
            .map(|r| s.spawn(move || positive_sums_for_range(r, bound)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .collect::<Vec<_>>()
    });
    smallest_in_sums(&merge_sums(parts), k, bound)
}
