//! Seeded randomness used to realize generic choices.
//!
//! The generator is ChaCha8 seeded through `seed_from_u64`, whose output is
//! fixed across platforms. Independent trials use child seeds
//! `seed + trial_index` (wrapping).

use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::field::PrimeField;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VectorConstraint {
    None,
    /// Not the zero vector.
    Nonzero,
    /// Last entry nonzero.
    LastNonzero,
}

#[derive(Debug, Clone)]
pub struct SeededRng {
    seed: u64,
    inner: ChaCha8Rng,
}

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        Self { seed, inner: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Fresh generator for trial `index`.
    pub fn child(&self, index: u64) -> Self {
        Self::new(self.seed.wrapping_add(index))
    }

    /// Uniform residue in `[0, p)`.
    pub fn element(&mut self, field: &PrimeField) -> u64 {
        self.inner.gen_range(0..field.modulus())
    }

    pub fn nonzero_element(&mut self, field: &PrimeField) -> u64 {
        self.inner.gen_range(1..field.modulus())
    }

    pub fn below(&mut self, bound: u64) -> u64 {
        self.inner.gen_range(0..bound)
    }

    /// Uniform vector of length `len`; constrained entries are resampled until
    /// the constraint holds.
    pub fn random_vector(&mut self, field: &PrimeField, len: usize, constraint: VectorConstraint) -> Vec<u64> {
        let mut v: Vec<u64> = (0..len).map(|_| self.element(field)).collect();
        match constraint {
            VectorConstraint::None => {}
            VectorConstraint::Nonzero => {
                while len > 0 && v.iter().all(|&x| x == 0) {
                    v = (0..len).map(|_| self.element(field)).collect();
                }
            }
            VectorConstraint::LastNonzero => {
                if let Some(last) = v.last_mut() {
                    while *last == 0 {
                        *last = self.inner.gen_range(0..field.modulus());
                    }
                }
            }
        }
        v
    }
}
