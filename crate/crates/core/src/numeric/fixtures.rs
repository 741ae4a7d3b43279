//! Reproducible matrix fixtures.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::matrix::{Assignment, DenseMatrix};

pub const FIXTURE_SEED: u64 = 0x5A55_E4A0;

fn random_matrix<F>(rng: &mut ChaCha8Rng, dim: usize, norm: f64, keep: F) -> DenseMatrix
where
    F: Fn(usize, usize) -> bool,
{
    let raw = DenseMatrix::from_fn(dim, |i, j| {
        let x: f64 = rng.random_range(-1.0..1.0);
        if keep(i, j) {
            x
        } else {
            0.0
        }
    });
    let f = raw.frobenius_norm();
    if f == 0.0 {
        raw
    } else {
        raw.scale(norm / f)
    }
}

/// Dense `dim x dim` pair, each matrix scaled to Frobenius norm `norm`.
pub fn random_assignment(dim: usize, norm: f64, seed: u64) -> Assignment {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a = random_matrix(&mut rng, dim, norm, |_, _| true);
    let b = random_matrix(&mut rng, dim, norm, |_, _| true);
    Assignment::new(a, b).expect("same dimension")
}

/// Symmetric pair, each scaled to Frobenius norm `norm`.
pub fn random_symmetric_assignment(dim: usize, norm: f64, seed: u64) -> Assignment {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sym = || {
        let m = random_matrix(&mut rng, dim, 1.0, |_, _| true);
        let s = &m + &m.transpose();
        s.scale(norm / s.frobenius_norm())
    };
    let a = sym();
    let b = sym();
    Assignment::new(a, b).expect("same dimension")
}

/// `A = diag(1, 2)`, `B = e_{12}`.
pub fn triangular_assignment() -> Assignment {
    Assignment::new(DenseMatrix::diag(&[1.0, 2.0]), DenseMatrix::unit(2, 0, 1))
        .expect("same dimension")
}

/// Upper triangular `A` and strictly upper triangular `B`.
pub fn triangular_pair(dim: usize, norm: f64, seed: u64) -> Assignment {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a = random_matrix(&mut rng, dim, norm, |i, j| i <= j);
    let b = random_matrix(&mut rng, dim, norm, |i, j| i < j);
    Assignment::new(a, b).expect("same dimension")
}

/// Two diagonal (hence commuting) matrices of Frobenius norm `norm`.
pub fn commuting_diagonal(dim: usize, norm: f64, seed: u64) -> Assignment {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a = random_matrix(&mut rng, dim, norm, |i, j| i == j);
    let b = random_matrix(&mut rng, dim, norm, |i, j| i == j);
    Assignment::new(a, b).expect("same dimension")
}
