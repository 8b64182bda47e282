//! Seeded random states for property sweeps. Every generator draws from a
//! caller-owned [`ChaCha8Rng`], so a seed replays a sweep exactly.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Exp1, StandardNormal};

use crate::classical::ProbabilityVector;
use crate::partition::Factorization;
use crate::probrep::QubitProbabilities;
use crate::quantum::DensityMatrix;
use crate::tomography::Direction;

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform on the simplex (Dirichlet with all concentrations 1).
pub fn dirichlet_uniform<R: Rng + ?Sized>(rng: &mut R, n: usize) -> ProbabilityVector {
    let w: Vec<f64> = (0..n).map(|_| rng.sample::<f64, _>(Exp1)).collect();
    ProbabilityVector::from_weights(w).expect("exponential weights are positive")
}

fn complex_normal<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// Haar-random unit vector.
pub fn haar_pure<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<Complex64> {
    let v: Vec<Complex64> = (0..n).map(|_| complex_normal(rng)).collect();
    let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    v.into_iter().map(|z| z / norm).collect()
}

pub fn haar_pure_state<R: Rng + ?Sized>(rng: &mut R, n: usize) -> DensityMatrix {
    DensityMatrix::from_pure(&haar_pure(rng, n)).expect("Haar vector is normalized")
}

/// `G G† / Tr(G G†)` with a square complex Ginibre `G` (full rank a.s.).
pub fn ginibre_state<R: Rng + ?Sized>(rng: &mut R, n: usize) -> DensityMatrix {
    let g = DMatrix::from_fn(n, n, |_, _| complex_normal(rng));
    let w = &g * g.adjoint();
    let tr = w.trace();
    let mut m = w / tr;
    // exact Hermitian symmetry before validation
    for i in 0..n {
        m[(i, i)].im = 0.0;
        for j in 0..i {
            m[(j, i)] = m[(i, j)].conj();
        }
    }
    DensityMatrix::validate(m).expect("Ginibre product is a density matrix")
}

/// Uniform point of the Bloch ball as spin-projection probabilities.
pub fn bloch_ball<R: Rng + ?Sized>(rng: &mut R) -> QubitProbabilities {
    loop {
        let v: [f64; 3] = std::array::from_fn(|_| rng.random_range(-1.0..=1.0));
        if v.iter().map(|x| x * x).sum::<f64>() <= 1.0 {
            return QubitProbabilities {
                p1: (1.0 + v[0]) / 2.0,
                p2: (1.0 + v[1]) / 2.0,
                p3: (1.0 + v[2]) / 2.0,
            };
        }
    }
}

/// Random ordered factorization with `2 ≤ M ≤ 4`, factors in `2..=4`, and
/// total at most `max_total`.
pub fn factorization<R: Rng + ?Sized>(rng: &mut R, max_total: usize) -> Factorization {
    assert!(max_total >= 4, "need room for at least two factors of 2");
    loop {
        let m = rng.random_range(2..=4);
        let dims: Vec<usize> = (0..m).map(|_| rng.random_range(2..=4)).collect();
        if dims.iter().product::<usize>() <= max_total {
            return Factorization::new(dims).expect("positive factors");
        }
    }
}

/// Direction uniform on the sphere, `psi` uniform on the circle.
pub fn direction<R: Rng + ?Sized>(rng: &mut R) -> Direction {
    let cos_theta: f64 = rng.random_range(-1.0..=1.0);
    let phi = rng.random_range(0.0..std::f64::consts::TAU);
    let psi = rng.random_range(0.0..std::f64::consts::TAU);
    Direction::new(cos_theta.acos(), phi).with_psi(psi)
}
