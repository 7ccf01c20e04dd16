//! Seeded generation of random rational elements for the sampled identity
//! suites.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Algebra, Element};
use crate::exact::Scalar;

pub const DEFAULT_SEED: u64 = 0x4b49_4e47;

/// Deterministic source of small random rationals.
pub struct Sampler {
    rng: ChaCha8Rng,
    max_numer: i64,
    max_denom: i64,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            max_numer: 7,
            max_denom: 4,
        }
    }

    pub fn with_bounds(mut self, max_numer: i64, max_denom: i64) -> Self {
        assert!(max_numer > 0 && max_denom > 0);
        self.max_numer = max_numer;
        self.max_denom = max_denom;
        self
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.random_range(lo..=hi)
    }

    pub fn scalar(&mut self) -> Scalar {
        let n = self.rng.random_range(-self.max_numer..=self.max_numer);
        let d = self.rng.random_range(1..=self.max_denom);
        Scalar::new(n, d)
    }

    pub fn coeffs(&mut self, dim: usize) -> Vec<Scalar> {
        (0..dim).map(|_| self.scalar()).collect()
    }

    pub fn element(&mut self, algebra: &Arc<Algebra>) -> Element {
        Element::new(algebra, self.coeffs(algebra.dim())).expect("length matches")
    }

    pub fn nonzero_element(&mut self, algebra: &Arc<Algebra>) -> Element {
        loop {
            let x = self.element(algebra);
            if !x.is_zero() {
                return x;
            }
        }
    }
}
