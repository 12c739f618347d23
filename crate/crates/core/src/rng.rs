//! Seeded randomness for equivalence searches and test batteries.
//!
//! Every randomized operation takes an explicit seed and is deterministic
//! given it; reports record the seed they ran with.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::field::{FieldSpec, Scalar};

pub struct SeededRng {
    inner: ChaCha8Rng,
}

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        SeededRng {
            inner: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn index(&mut self, n: usize) -> usize {
        assert!(n > 0);
        self.inner.gen_range(0..n)
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        self.inner.gen_range(lo..=hi)
    }

    /// A small scalar in `[-4, 4]`, biased away from zero so random
    /// combinations rarely collapse.
    pub fn small_scalar(&mut self, field: FieldSpec) -> Scalar {
        let v = self.inner.gen_range(-4i64..=4);
        let v = if v == 0 { 1 } else { v };
        field.from_i64(v)
    }

    pub fn scalar_allow_zero(&mut self, field: FieldSpec) -> Scalar {
        field.from_i64(self.inner.gen_range(-3i64..=3))
    }

    pub fn fork(&mut self) -> SeededRng {
        SeededRng::new(self.inner.gen())
    }
}
