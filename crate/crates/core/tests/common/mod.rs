#![allow(dead_code)]

use desargues::construct::LineCoordinate;
use desargues::{FieldSpec, Scalar};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const BACKENDS: [&str; 7] = ["Q", "F:2", "F:3", "F:5", "F:2^2", "F:3^2", "HQ"];

pub fn field(s: &str) -> FieldSpec {
    s.parse().expect("backend parses")
}

pub fn backend(i: usize) -> FieldSpec {
    field(BACKENDS[i % BACKENDS.len()])
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn lc(x: &Scalar) -> LineCoordinate {
    LineCoordinate::new(x.clone())
}

pub fn draw<const N: usize>(spec: FieldSpec, rng: &mut ChaCha8Rng) -> [Scalar; N] {
    std::array::from_fn(|_| spec.random(rng))
}

pub fn draw_nonzero<const N: usize>(spec: FieldSpec, rng: &mut ChaCha8Rng) -> [Scalar; N] {
    std::array::from_fn(|_| spec.random_nonzero(rng))
}
