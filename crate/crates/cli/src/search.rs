//! Parallel driver for the exhaustive weight search.

use prm_core::prm::{partition, prepare_search, PrmError};
use prm_core::{ProjectiveSpace, WeightSearch};
use rayon::prelude::*;

/// Minimum weight with the class range split into `partitions` pieces searched
/// on the rayon pool. The answer does not depend on `partitions`.
pub fn min_weight_parallel(search: &WeightSearch<'_>, partitions: usize) -> Option<usize> {
    let total = search.class_count()?;
    partition(total, partitions)
        .into_par_iter()
        .filter_map(|r| search.min_weight_in(r))
        .min()
}

pub fn default_partitions() -> usize {
    rayon::current_num_threads() * 8
}

/// Parallel counterpart of `prm_core::prm::min_weight_exhaustive`.
pub fn min_weight_exhaustive(
    space: &ProjectiveSpace<'_>,
    nu: u32,
    budget: u64,
) -> Result<usize, PrmError> {
    let search = prepare_search(space, nu, budget)?;
    Ok(min_weight_parallel(&search, default_partitions()).expect("codes in range are nonzero"))
}

/// Parallel counterpart of `prm_core::prm::min_weights_all_degrees`.
pub fn min_weights_all_degrees(
    space: &ProjectiveSpace<'_>,
    budget: u64,
) -> Result<Vec<(u32, usize)>, PrmError> {
    let top = space.dim() as u32 * (space.field().order() - 1);
    (1..=top)
        .map(|nu| min_weight_exhaustive(space, nu, budget).map(|w| (nu, w)))
        .collect()
}
