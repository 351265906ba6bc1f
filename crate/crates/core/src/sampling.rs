//! Seeded random sampling shared by the law checkers.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::scalars::{sample_with, Backend, RingValue};
use crate::vector::Vector;

/// The generator used throughout; the stream is fixed by the seed.
pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Which parameter values a sampler may produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamMode {
    Zero,
    Unit,
    /// Zero with probability 1/3, otherwise a unit.
    Mixed,
}

pub fn scalar(rng: &mut SampleRng, backend: &Backend) -> RingValue {
    sample_with(rng, backend, false)
}

pub fn unit(rng: &mut SampleRng, backend: &Backend) -> RingValue {
    sample_with(rng, backend, true)
}

pub fn param(rng: &mut SampleRng, backend: &Backend, mode: ParamMode) -> RingValue {
    match mode {
        ParamMode::Zero => backend.zero(),
        ParamMode::Unit => unit(rng, backend),
        ParamMode::Mixed => {
            if rng.random_range(0..3) == 0 {
                backend.zero()
            } else {
                unit(rng, backend)
            }
        }
    }
}

pub fn vector(rng: &mut SampleRng, backend: &Backend, d: usize) -> Vector {
    (0..d).map(|_| scalar(rng, backend)).collect()
}
