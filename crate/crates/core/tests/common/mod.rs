#![allow(dead_code)]

use qlat::formula::{Assignment, Formula};
use qlat::lattice::{random_subspace_with, Subspace};
use qlat::linalg::GaussianRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random formula over `vars` with depth at most `depth`.
pub fn random_formula(rng: &mut ChaCha8Rng, vars: &[&str], depth: usize) -> Formula {
    let leaf = depth == 0 || rng.random_bool(0.25);
    if leaf {
        return match rng.random_range(0..10) {
            0 => Formula::Zero,
            1 => Formula::One,
            _ => Formula::var(vars[rng.random_range(0..vars.len())]),
        };
    }
    match rng.random_range(0..3) {
        0 => random_formula(rng, vars, depth - 1).not(),
        1 => random_formula(rng, vars, depth - 1).and(random_formula(rng, vars, depth - 1)),
        _ => random_formula(rng, vars, depth - 1).or(random_formula(rng, vars, depth - 1)),
    }
}

/// Each variable gets a uniformly random dimension in 0..=ambient.
pub fn random_assignment(rng: &mut ChaCha8Rng, vars: &[&str], ambient: usize) -> Assignment {
    let mut a = Assignment::new(ambient).unwrap();
    for v in vars {
        let dim = rng.random_range(0..=ambient);
        a.insert(*v, random_subspace_with(rng, ambient, dim, 3).unwrap()).unwrap();
    }
    a
}

pub fn random_subspace(rng: &mut ChaCha8Rng, ambient: usize) -> Subspace {
    let dim = rng.random_range(0..=ambient);
    random_subspace_with(rng, ambient, dim, 3).unwrap()
}

pub fn line2(x: (i64, i64), y: (i64, i64)) -> Subspace {
    Subspace::span(&[vec![GaussianRational::from_integers(x.0, x.1), GaussianRational::from_integers(y.0, y.1)]], 2)
        .unwrap()
}

/// The standard triple of lines in ℂ²: (1,0), (0,1), (1,1).
pub fn standard_triple() -> Assignment {
    Assignment::from_pairs(2, [("p", line2((1, 0), (0, 0))), ("q", line2((0, 0), (1, 0))), ("r", line2((1, 0), (1, 0)))])
        .unwrap()
}
