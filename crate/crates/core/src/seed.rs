//! Deterministic seed derivation.
//!
//! Every random decision in the pipeline is seeded through [`derive_seed`],
//! a splitmix64-based mix of a base seed and a stream index. The same
//! (base, stream) pair always yields the same child seed, so any part of a
//! run can be regenerated in isolation.

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// One splitmix64 output step.
pub fn splitmix64(state: u64) -> u64 {
    let mut z = state.wrapping_add(GOLDEN_GAMMA);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Derive the `stream`-th child seed of `base`.
pub fn derive_seed(base: u64, stream: u64) -> u64 {
    splitmix64(splitmix64(base).wrapping_add(stream.wrapping_mul(GOLDEN_GAMMA)))
}

/// Stream index for a model's epoch-shuffle RNG.
pub const STREAM_SHUFFLE: u64 = 1;
/// Stream index for the logistic-regression baseline inside metric evaluation.
pub const STREAM_BASELINE: u64 = 2;
/// Stream index for the learning-rate sweep inside metric evaluation.
pub const STREAM_SWEEP: u64 = 3;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derive_is_deterministic() {
        assert_eq!(derive_seed(42, 7), derive_seed(42, 7));
    }

    #[test]
    fn streams_differ() {
        let base = 123;
        let seeds: Vec<u64> = (0..32).map(|s| derive_seed(base, s)).collect();
        let mut uniq = seeds.clone();
        uniq.sort_unstable();
        uniq.dedup();
        assert_eq!(uniq.len(), seeds.len());
    }

    #[test]
    fn bases_differ() {
        assert_ne!(derive_seed(1, 0), derive_seed(2, 0));
    }
}
