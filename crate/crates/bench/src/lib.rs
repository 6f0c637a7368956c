//! Shared inputs for the criterion benches.

pub use gdgap_core::fixtures::{example1_config, example2_config};
use gdgap_core::fuzz::{trial_config, Bounds};
pub use gdgap_core::BaseConfig;

/// `n` seeded random configurations with the default fuzz bounds.
pub fn sample_configs(n: u64, seed: u64) -> Vec<BaseConfig> {
    (0..n).map(|i| trial_config(seed, i, Bounds::default()).expect("default bounds are valid").cfg).collect()
}
