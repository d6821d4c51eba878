//! Helpers shared by the integration suites: seeded random states and
//! independent closed-form oracles. Nothing here calls back into the
//! code paths under test.

#![allow(dead_code)]

use entdist::{ComplexMatrix, DensityMatrix};
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

/// Binary entropy in bits, written out directly as the test-side
/// oracle.
pub fn h2(x: f64) -> f64 {
    let mut h = 0.0;
    for v in [x, 1.0 - x] {
        if v > 0.0 {
            h -= v * v.log2();
        }
    }
    h
}

/// Entanglement of formation from a concurrence value, closed form.
pub fn eof_from_concurrence(c: f64) -> f64 {
    h2((1.0 + (1.0 - c * c).max(0.0).sqrt()) / 2.0)
}

/// Entropy of a Werner state with fidelity `f`, closed form.
pub fn werner_entropy(f: f64) -> f64 {
    let rest = 1.0 - f;
    let mut s = 0.0;
    if f > 0.0 {
        s -= f * f.log2();
    }
    if rest > 0.0 {
        s -= rest * (rest / 3.0).log2();
    }
    s
}

pub fn random_complex(rng: &mut impl Rng) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// Ginibre matrix with standard-normal entries.
pub fn random_ginibre(rng: &mut impl Rng, n: usize) -> ComplexMatrix {
    let mut g = ComplexMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            g.set(i, j, random_complex(rng));
        }
    }
    g
}

/// Random two-qubit density matrix from the Hilbert-Schmidt ensemble.
pub fn random_density(rng: &mut impl Rng) -> DensityMatrix {
    loop {
        let g = random_ginibre(rng, 4);
        let h = &g * &g.adjoint();
        let tr = h.trace().re;
        if tr < 1e-6 {
            continue;
        }
        let rho = (&h.scale_re(1.0 / tr) + &h.scale_re(1.0 / tr).adjoint()).scale_re(0.5);
        if let Ok(dm) = DensityMatrix::new(rho) {
            return dm;
        }
    }
}

/// Random normalized two-qubit pure state.
pub fn random_pure_state(rng: &mut impl Rng) -> ComplexMatrix {
    loop {
        let mut v = ComplexMatrix::zeros(4, 1);
        for i in 0..4 {
            v.set(i, 0, random_complex(rng));
        }
        let norm = v.vector_norm();
        if norm > 1e-6 {
            return v.scale_re(1.0 / norm);
        }
    }
}

/// Haar-random 2x2 special unitary [[a, b], [-conj(b), conj(a)]].
pub fn random_su2(rng: &mut impl Rng) -> ComplexMatrix {
    loop {
        let a = random_complex(rng);
        let b = random_complex(rng);
        let norm = (a.norm_sqr() + b.norm_sqr()).sqrt();
        if norm < 1e-6 {
            continue;
        }
        let (a, b) = (a / norm, b / norm);
        return ComplexMatrix::new(2, 2, vec![a, b, -b.conj(), a.conj()]).unwrap();
    }
}
