//! Parallel search driver.
//!
//! Partitions (keyed by the first canonical branch) are processed on a rayon
//! pool and their [`SignatureTable`]s reduced with the associative merge, so
//! the report is identical for every thread count.

use rayon::prelude::*;

use bicover_core::search::{
    enumerate_partition, partition_keys, SearchConfig, SearchReport, SignatureTable,
};

use crate::Error;

/// Runs the search on `threads` workers (rayon's default when `None`).
pub fn run_search(cfg: &SearchConfig, threads: Option<usize>) -> Result<SearchReport, Error> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = threads {
        builder = builder.num_threads(n);
    }
    let pool = builder
        .build()
        .map_err(|e| Error::ThreadPool(e.to_string()))?;
    Ok(pool.install(|| search_in_current_pool(cfg)))
}

fn search_in_current_pool(cfg: &SearchConfig) -> SearchReport {
    partition_keys(cfg)
        .into_par_iter()
        .map(|first| {
            let mut table = SignatureTable::new();
            table.extend(cfg, enumerate_partition(cfg, first));
            table
        })
        .reduce(SignatureTable::new, |mut a, b| {
            a.merge(b);
            a
        })
        .finish(cfg)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_sequential_for_any_thread_count() {
        let cfg = SearchConfig::new(9, 6);
        let expected = bicover_core::search::run_search(&cfg);
        for threads in [1, 2, 5] {
            assert_eq!(run_search(&cfg, Some(threads)).unwrap(), expected);
        }
    }
}
