//! Dense complex linear algebra for matrices up to 4x4.
//!
//! Everything here is sized for two-qubit work: products, Kronecker
//! products, partial traces, Hermitian eigendecomposition and the
//! positive-semidefinite square root. Values are immutable after
//! construction and safe to share across threads.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Hermiticity check tolerance (max |a_ij - conj(a_ji)|).
pub const HERMITICITY_TOL: f64 = 1e-10;
/// Eigenvalues in [-PSD_CLAMP_TOL, 0) are treated as zero.
pub const PSD_CLAMP_TOL: f64 = 1e-10;
/// Frobenius-norm tolerance for eigendecomposition reconstruction.
pub const RECONSTRUCTION_TOL: f64 = 1e-10;

const JACOBI_OFF_TOL: f64 = 1e-13;
const JACOBI_MAX_SWEEPS: usize = 100;

/// Dense complex matrix in row-major order.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Complex64>,
}

impl ComplexMatrix {
    /// Builds a matrix from row-major entries, rejecting NaN/Inf.
    pub fn new(rows: usize, cols: usize, entries: Vec<Complex64>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: format!("{} entries", rows * cols),
                actual: format!("{} entries", entries.len()),
            });
        }
        if entries.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFiniteEntries);
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Complex64::new(1.0, 0.0));
        }
        m
    }

    /// Square matrix with the given real numbers on the diagonal.
    pub fn from_real_diag(diag: &[f64]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n, n);
        for (i, &d) in diag.iter().enumerate() {
            m.set(i, i, Complex64::new(d, 0.0));
        }
        m
    }

    /// Column vector from real amplitudes.
    pub fn col_from_real(amps: &[f64]) -> Self {
        let entries = amps.iter().map(|&a| Complex64::new(a, 0.0)).collect();
        Self {
            rows: amps.len(),
            cols: 1,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).conj());
            }
        }
        out
    }

    /// Entrywise complex conjugate (no transpose).
    pub fn conjugate(&self) -> Self {
        let entries = self.entries.iter().map(|z| z.conj()).collect();
        Self {
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        let entries = self.entries.iter().map(|z| z * factor).collect();
        Self {
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn scale_re(&self, factor: f64) -> Self {
        self.scale(Complex64::new(factor, 0.0))
    }

    pub fn trace(&self) -> Complex64 {
        debug_assert!(self.is_square());
        (0..self.rows).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Largest entrywise |a_ij - b_ij|.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        debug_assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Largest entrywise |a_ij - conj(a_ji)|.
    pub fn hermiticity_deviation(&self) -> f64 {
        debug_assert!(self.is_square());
        let mut dev: f64 = 0.0;
        for i in 0..self.rows {
            for j in 0..self.cols {
                dev = dev.max((self.get(i, j) - self.get(j, i).conj()).norm());
            }
        }
        dev
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.is_square() && self.hermiticity_deviation() <= tol
    }

    /// Euclidean norm of a column vector.
    pub fn vector_norm(&self) -> f64 {
        debug_assert_eq!(self.cols, 1);
        self.frobenius_norm()
    }

    /// Outer product |self><self| of a column vector.
    pub fn outer(&self) -> Self {
        debug_assert_eq!(self.cols, 1);
        let n = self.rows;
        let mut out = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, self.get(i, 0) * self.get(j, 0).conj());
            }
        }
        out
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                let z = self.get(i, j);
                write!(f, "{:+.6}{:+.6}i  ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "add: shape mismatch");
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect();
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "sub: shape mismatch");
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect();
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.cols, rhs.rows, "mul: inner dimension mismatch");
        let mut out = ComplexMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = out.get(i, j) + a * rhs.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }
}

/// Kronecker product; output dimensions multiply.
pub fn tensor(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let mut out = ComplexMatrix::zeros(a.rows * b.rows, a.cols * b.cols);
    for ia in 0..a.rows {
        for ja in 0..a.cols {
            let f = a.get(ia, ja);
            for ib in 0..b.rows {
                for jb in 0..b.cols {
                    out.set(ia * b.rows + ib, ja * b.cols + jb, f * b.get(ib, jb));
                }
            }
        }
    }
    out
}

/// Traces out one qubit of a 4x4 two-qubit operator.
///
/// `keep` selects the surviving subsystem: 1 for the first qubit
/// (most significant bit of the basis index), 2 for the second.
pub fn partial_trace(rho: &ComplexMatrix, keep: usize) -> Result<ComplexMatrix> {
    if rho.rows != 4 || rho.cols != 4 {
        return Err(Error::DimensionMismatch {
            expected: "4x4".into(),
            actual: format!("{}x{}", rho.rows, rho.cols),
        });
    }
    if keep != 1 && keep != 2 {
        return Err(Error::OutOfRange {
            name: "keep",
            value: keep as f64,
            requirement: "1 or 2",
        });
    }
    let mut out = ComplexMatrix::zeros(2, 2);
    for i in 0..2 {
        for j in 0..2 {
            let mut s = Complex64::new(0.0, 0.0);
            for k in 0..2 {
                s += if keep == 1 {
                    rho.get(2 * i + k, 2 * j + k)
                } else {
                    rho.get(2 * k + i, 2 * k + j)
                };
            }
            out.set(i, j, s);
        }
    }
    Ok(out)
}

/// Spectral factorization of a Hermitian matrix.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    /// Real eigenvalues in ascending order.
    pub eigenvalues: Vec<f64>,
    /// Unitary matrix whose k-th column is the eigenvector of
    /// `eigenvalues[k]`.
    pub eigenvectors: ComplexMatrix,
}

impl EigenDecomposition {
    /// Rebuilds V diag(f(lambda)) V-dagger.
    pub fn apply_to_spectrum(&self, f: impl Fn(f64) -> f64) -> ComplexMatrix {
        let d = ComplexMatrix::from_real_diag(&self.eigenvalues.iter().map(|&l| f(l)).collect::<Vec<_>>());
        &(&self.eigenvectors * &d) * &self.eigenvectors.adjoint()
    }
}

fn off_diagonal_norm(a: &ComplexMatrix) -> f64 {
    let n = a.rows;
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a.get(i, j).norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
/// rotations.
///
/// Converges when the off-diagonal Frobenius norm drops below 1e-13,
/// capped at 100 sweeps. Robustness over speed: inputs are at most 4x4.
pub fn hermitian_eigen(h: &ComplexMatrix) -> Result<EigenDecomposition> {
    if !h.is_square() {
        return Err(Error::DimensionMismatch {
            expected: "square".into(),
            actual: format!("{}x{}", h.rows, h.cols),
        });
    }
    let dev = h.hermiticity_deviation();
    if dev > HERMITICITY_TOL {
        return Err(Error::NotHermitian { deviation: dev });
    }
    let n = h.rows;
    // Symmetrize once so roundoff in the input cannot bias the iteration.
    let mut a = (h + &h.adjoint()).scale_re(0.5);
    let mut v = ComplexMatrix::identity(n);

    let mut sweeps = 0;
    while off_diagonal_norm(&a) >= JACOBI_OFF_TOL {
        if sweeps >= JACOBI_MAX_SWEEPS {
            return Err(Error::EigenNoConvergence {
                sweeps,
                off: off_diagonal_norm(&a),
            });
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a.get(p, q);
                let alpha = apq.norm();
                if alpha == 0.0 {
                    continue;
                }
                let phase = apq / alpha;
                let app = a.get(p, p).re;
                let aqq = a.get(q, q).re;
                let tau = (aqq - app) / (2.0 * alpha);
                // Smaller-angle root of t^2 + 2 tau t - 1 = 0.
                let t = tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;

                let mut r = ComplexMatrix::identity(n);
                r.set(p, p, Complex64::new(c, 0.0));
                r.set(q, q, Complex64::new(c, 0.0));
                r.set(p, q, phase * s);
                r.set(q, p, -phase.conj() * s);

                a = &(&r.adjoint() * &a) * &r;
                v = &v * &r;
            }
        }
        // Keep the iterate exactly Hermitian against roundoff drift.
        a = (&a + &a.adjoint()).scale_re(0.5);
        sweeps += 1;
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a.get(i, i).re.partial_cmp(&a.get(j, j).re).unwrap());

    let eigenvalues = order.iter().map(|&i| a.get(i, i).re).collect();
    let mut eigenvectors = ComplexMatrix::zeros(n, n);
    for (col, &src) in order.iter().enumerate() {
        for row in 0..n {
            eigenvectors.set(row, col, v.get(row, src));
        }
    }

    Ok(EigenDecomposition {
        eigenvalues,
        eigenvectors,
    })
}

/// Principal square root of a positive-semidefinite Hermitian matrix.
///
/// Eigenvalues in [-1e-10, 0) are clamped to zero; anything more
/// negative is rejected.
pub fn mat_sqrt_psd(h: &ComplexMatrix) -> Result<ComplexMatrix> {
    let eig = hermitian_eigen(h)?;
    if let Some(&min) = eig.eigenvalues.first() {
        if min < -PSD_CLAMP_TOL {
            return Err(Error::NegativeEigenvalue { value: min });
        }
    }
    Ok(eig.apply_to_spectrum(|l| l.max(0.0).sqrt()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn new_rejects_wrong_length_and_non_finite() {
        assert!(ComplexMatrix::new(2, 2, vec![c(1.0, 0.0); 3]).is_err());
        assert!(ComplexMatrix::new(1, 1, vec![c(f64::NAN, 0.0)]).is_err());
        assert!(ComplexMatrix::new(1, 1, vec![c(0.0, f64::INFINITY)]).is_err());
    }

    #[test]
    fn tensor_of_identities_is_identity() {
        let i2 = ComplexMatrix::identity(2);
        assert_eq!(tensor(&i2, &i2), ComplexMatrix::identity(4));
    }

    #[test]
    fn tensor_of_projectors() {
        let p = ComplexMatrix::from_real_diag(&[1.0, 0.0]);
        let expect = ComplexMatrix::from_real_diag(&[1.0, 0.0, 0.0, 0.0]);
        assert_eq!(tensor(&p, &p), expect);
    }

    #[test]
    fn tensor_sigma_x_fixes_phi_plus() {
        let sx = ComplexMatrix::new(2, 2, vec![c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)]).unwrap();
        let xx = tensor(&sx, &sx);
        let phi = ComplexMatrix::col_from_real(&[1.0 / 2f64.sqrt(), 0.0, 0.0, 1.0 / 2f64.sqrt()]);
        let out = &xx * &phi;
        assert!(out.max_abs_diff(&phi) < 1e-15);
    }

    #[test]
    fn partial_trace_of_bell_state_is_maximally_mixed() {
        let phi = ComplexMatrix::col_from_real(&[1.0 / 2f64.sqrt(), 0.0, 0.0, 1.0 / 2f64.sqrt()]);
        let rho = phi.outer();
        for keep in [1, 2] {
            let red = partial_trace(&rho, keep).unwrap();
            assert!(red.max_abs_diff(&ComplexMatrix::from_real_diag(&[0.5, 0.5])) < 1e-15);
        }
    }

    #[test]
    fn partial_trace_of_product_state() {
        let rho = ComplexMatrix::from_real_diag(&[1.0, 0.0, 0.0, 0.0]); // |00><00|
        let red = partial_trace(&rho, 2).unwrap();
        assert!(red.max_abs_diff(&ComplexMatrix::from_real_diag(&[1.0, 0.0])) < 1e-15);
    }

    #[test]
    fn partial_trace_of_conditional_state_at_half_decay() {
        // (|00> + 1/2 |11>) normalized; amplitudes^2 = (4/5, 1/5).
        let norm = (1.0f64 + 0.25).sqrt();
        let vec = ComplexMatrix::col_from_real(&[1.0 / norm, 0.0, 0.0, 0.5 / norm]);
        let red = partial_trace(&vec.outer(), 1).unwrap();
        assert_abs_diff_eq!(red.get(0, 0).re, 0.8, epsilon = 1e-14);
        assert_abs_diff_eq!(red.get(1, 1).re, 0.2, epsilon = 1e-14);
    }

    #[test]
    fn partial_trace_rejects_wrong_dims() {
        let m = ComplexMatrix::identity(2);
        assert!(partial_trace(&m, 1).is_err());
        let m4 = ComplexMatrix::identity(4);
        assert!(partial_trace(&m4, 3).is_err());
    }

    #[test]
    fn eigen_diagonal_matrix() {
        let m = ComplexMatrix::from_real_diag(&[0.75, 0.25]);
        let eig = hermitian_eigen(&m).unwrap();
        assert_abs_diff_eq!(eig.eigenvalues[0], 0.25, epsilon = 1e-14);
        assert_abs_diff_eq!(eig.eigenvalues[1], 0.75, epsilon = 1e-14);
    }

    #[test]
    fn eigen_pauli_x_spectrum() {
        let sx = ComplexMatrix::new(2, 2, vec![c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)]).unwrap();
        let eig = hermitian_eigen(&sx).unwrap();
        assert_abs_diff_eq!(eig.eigenvalues[0], -1.0, epsilon = 1e-13);
        assert_abs_diff_eq!(eig.eigenvalues[1], 1.0, epsilon = 1e-13);
    }

    #[test]
    fn eigen_pauli_y_complex_entries() {
        let sy = ComplexMatrix::new(2, 2, vec![c(0.0, 0.0), c(0.0, -1.0), c(0.0, 1.0), c(0.0, 0.0)]).unwrap();
        let eig = hermitian_eigen(&sy).unwrap();
        assert_abs_diff_eq!(eig.eigenvalues[0], -1.0, epsilon = 1e-13);
        assert_abs_diff_eq!(eig.eigenvalues[1], 1.0, epsilon = 1e-13);
        // reconstruction
        let rebuilt = eig.apply_to_spectrum(|l| l);
        assert!(rebuilt.max_abs_diff(&sy) < RECONSTRUCTION_TOL);
    }

    #[test]
    fn eigen_mixture_with_orthogonal_support() {
        // 0.5 |psi+><psi+| + 0.5 |00><00| has spectrum {0, 0, 0.5, 0.5}.
        let s = 1.0 / 2f64.sqrt();
        let psi = ComplexMatrix::col_from_real(&[0.0, s, s, 0.0]);
        let zz = ComplexMatrix::col_from_real(&[1.0, 0.0, 0.0, 0.0]);
        let rho = &psi.outer().scale_re(0.5) + &zz.outer().scale_re(0.5);
        let eig = hermitian_eigen(&rho).unwrap();
        let expect = [0.0, 0.0, 0.5, 0.5];
        for (got, want) in eig.eigenvalues.iter().zip(expect) {
            assert_abs_diff_eq!(*got, want, epsilon = 1e-13);
        }
    }

    #[test]
    fn eigen_rejects_non_hermitian() {
        let m = ComplexMatrix::new(2, 2, vec![c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]).unwrap();
        assert!(matches!(hermitian_eigen(&m), Err(Error::NotHermitian { .. })));
    }

    #[test]
    fn eigenvectors_are_orthonormal() {
        let m = ComplexMatrix::new(
            4,
            4,
            vec![
                c(2.0, 0.0), c(0.3, 0.1), c(0.0, -0.2), c(0.5, 0.0),
                c(0.3, -0.1), c(1.0, 0.0), c(0.4, 0.0), c(0.0, 0.3),
                c(0.0, 0.2), c(0.4, 0.0), c(-1.0, 0.0), c(0.1, -0.1),
                c(0.5, 0.0), c(0.0, -0.3), c(0.1, 0.1), c(0.5, 0.0),
            ],
        )
        .unwrap();
        let eig = hermitian_eigen(&m).unwrap();
        let gram = &eig.eigenvectors.adjoint() * &eig.eigenvectors;
        assert!(gram.max_abs_diff(&ComplexMatrix::identity(4)) < RECONSTRUCTION_TOL);
        let rebuilt = eig.apply_to_spectrum(|l| l);
        assert!((&rebuilt - &m).frobenius_norm() < RECONSTRUCTION_TOL);
    }

    #[test]
    fn sqrt_of_identity() {
        let i4 = ComplexMatrix::identity(4);
        let s = mat_sqrt_psd(&i4).unwrap();
        assert!(s.max_abs_diff(&i4) < 1e-12);
    }

    #[test]
    fn sqrt_of_diagonal() {
        let m = ComplexMatrix::from_real_diag(&[4.0, 9.0, 0.0, 1.0]);
        let s = mat_sqrt_psd(&m).unwrap();
        assert!(s.max_abs_diff(&ComplexMatrix::from_real_diag(&[2.0, 3.0, 0.0, 1.0])) < 1e-12);
    }

    #[test]
    fn sqrt_of_scalar_matrix() {
        let m = ComplexMatrix::from_real_diag(&[0.5, 0.5]);
        let s = mat_sqrt_psd(&m).unwrap();
        let expect = ComplexMatrix::from_real_diag(&[std::f64::consts::FRAC_1_SQRT_2, std::f64::consts::FRAC_1_SQRT_2]);
        assert!(s.max_abs_diff(&expect) < 1e-14);
    }

    #[test]
    fn sqrt_rejects_indefinite() {
        let m = ComplexMatrix::from_real_diag(&[1.0, -0.5]);
        assert!(matches!(mat_sqrt_psd(&m), Err(Error::NegativeEigenvalue { .. })));
    }

    #[test]
    fn sqrt_clamps_tiny_negative() {
        let m = ComplexMatrix::from_real_diag(&[1.0, -5e-11]);
        let s = mat_sqrt_psd(&m).unwrap();
        assert_abs_diff_eq!(s.get(1, 1).re, 0.0, epsilon = 1e-12);
    }

    #[test]
    fn trace_of_tensor_multiplies() {
        let a = ComplexMatrix::new(2, 2, vec![c(1.0, 0.5), c(0.0, 1.0), c(2.0, 0.0), c(0.5, -0.5)]).unwrap();
        let b = ComplexMatrix::new(2, 2, vec![c(0.3, 0.0), c(1.0, 2.0), c(0.0, 0.0), c(-1.0, 0.1)]).unwrap();
        let lhs = tensor(&a, &b).trace();
        let rhs = a.trace() * b.trace();
        assert!((lhs - rhs).norm() < 1e-13);
    }
}
