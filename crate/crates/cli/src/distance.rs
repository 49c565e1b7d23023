//! Minimum distance with the enumeration split across threads.

use circforge_core::codes::Enumerator;
use circforge_core::{AdditiveCode, LinearCode};
use rayon::prelude::*;

use crate::CliError;

fn prefix_len(e: &Enumerator) -> usize {
    e.dimension().min(3)
}

fn par_min(e: &Enumerator) -> Result<usize, CliError> {
    e.blocks(prefix_len(e))
        .par_iter()
        .filter_map(|prefix| e.block_min_weight(prefix))
        .min()
        .ok_or(CliError::Core(circforge_core::Error::EmptyCode))
}

pub fn min_distance(code: &LinearCode, budget: u128) -> Result<usize, CliError> {
    par_min(&code.enumerator(budget)?)
}

pub fn additive_min_distance(code: &AdditiveCode, budget: u128) -> Result<usize, CliError> {
    par_min(&code.enumerator(budget)?)
}
