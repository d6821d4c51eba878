//! Entropic and algebraic entanglement quantities.
//!
//! All entropies are in bits (log base 2), so a Bell pair carries
//! exactly one unit of every measure computed here.

use crate::channels::{sigma_y, BellState, DensityMatrix};
use crate::error::{Error, Result};
use crate::smallmat::{hermitian_eigen, partial_trace, tensor, ComplexMatrix};

/// Spectrum values below this contribute nothing to an entropy
/// (0 log 0 := 0).
const ENTROPY_EIGENVALUE_FLOOR: f64 = 1e-15;

/// Tolerance for recognizing structure (purity, Bell diagonality) that
/// makes the distillable entanglement exactly known.
const STRUCTURE_TOL: f64 = 1e-10;

/// Upper and lower bounds on the distillable entanglement of a
/// two-qubit state, with the exact value where it is known.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundsReport {
    /// Entanglement of formation (ebits per pair); upper bound.
    pub e_formation: f64,
    /// S(rho_1) - S(rho_12).
    pub coherent_info_1: f64,
    /// S(rho_2) - S(rho_12).
    pub coherent_info_2: f64,
    /// The smaller coherent information; conjectured lower bound. May
    /// be negative.
    pub lower_bound: f64,
    /// Exact distillable entanglement, present for pure states and for
    /// mixtures of two Bell states.
    pub exact_distillable: Option<f64>,
}

impl BoundsReport {
    /// The tightest statement available: the exact value when known,
    /// otherwise the conjectured lower bound.
    pub fn authoritative(&self) -> f64 {
        self.exact_distillable.unwrap_or(self.lower_bound)
    }

    pub fn entangled(&self) -> bool {
        self.authoritative() > 1e-12
    }
}

/// Von Neumann entropy -Tr(rho log2 rho) in bits.
pub fn von_neumann_entropy(rho: &DensityMatrix) -> f64 {
    rho.eigenvalues()
        .iter()
        .filter(|&&l| l >= ENTROPY_EIGENVALUE_FLOOR)
        .map(|&l| -l * l.log2())
        .sum()
}

/// Binary entropy h(x) = -x log2 x - (1-x) log2(1-x).
pub fn binary_entropy(x: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&x) || !x.is_finite() {
        return Err(Error::OutOfRange {
            name: "x",
            value: x,
            requirement: "in [0, 1]",
        });
    }
    let mut h = 0.0;
    for v in [x, 1.0 - x] {
        if v >= ENTROPY_EIGENVALUE_FLOOR {
            h -= v * v.log2();
        }
    }
    Ok(h)
}

fn require_two_qubit(rho: &DensityMatrix) -> Result<()> {
    if rho.dim() != 4 {
        return Err(Error::DimensionMismatch {
            expected: "4x4".into(),
            actual: format!("{0}x{0}", rho.dim()),
        });
    }
    Ok(())
}

/// Square roots of near-zero eigenvalues amplify eigensolver residue
/// (a zero computed as 1e-16 turns into 1e-8), so spectra are floored
/// to exact zero below this before taking roots in the concurrence.
const SQRT_SPECTRUM_FLOOR: f64 = 1e-12;

fn clamped_spectrum(values: &[f64]) -> Result<Vec<f64>> {
    if let Some(&min) = values.first() {
        if min < -crate::smallmat::PSD_CLAMP_TOL {
            return Err(Error::NegativeEigenvalue { value: min });
        }
    }
    Ok(values
        .iter()
        .map(|&l| if l < SQRT_SPECTRUM_FLOOR { 0.0 } else { l })
        .collect())
}

/// Wootters concurrence of a two-qubit state.
///
/// C = max(0, l1 - l2 - l3 - l4), where the l_i are the descending
/// square roots of the eigenvalues of sqrt(rho) rho~ sqrt(rho) and
/// rho~ = (sy (x) sy) rho* (sy (x) sy). Routing through two PSD square
/// roots keeps the whole computation inside the Hermitian eigensolver.
pub fn concurrence(rho: &DensityMatrix) -> Result<f64> {
    require_two_qubit(rho)?;
    let yy = tensor(&sigma_y(), &sigma_y());
    let rho_tilde = &(&yy * &rho.matrix().conjugate()) * &yy;

    let rho_eig = hermitian_eigen(rho.matrix())?;
    let spectrum = clamped_spectrum(&rho_eig.eigenvalues)?;
    let mut root = ComplexMatrix::zeros(4, 4);
    for (idx, l) in spectrum.iter().enumerate() {
        let mut col = ComplexMatrix::zeros(4, 1);
        for r in 0..4 {
            col.set(r, 0, rho_eig.eigenvectors.get(r, idx));
        }
        root = &root + &col.outer().scale_re(l.sqrt());
    }

    let inner = &(&root * &rho_tilde) * &root;
    let inner_eig = hermitian_eigen(&inner)?;
    let mut lams = clamped_spectrum(&inner_eig.eigenvalues)?;
    lams.iter_mut().for_each(|l| *l = l.sqrt());
    lams.sort_by(|a, b| b.partial_cmp(a).unwrap());
    Ok((lams[0] - lams[1] - lams[2] - lams[3]).max(0.0))
}

/// Entanglement of formation from the concurrence:
/// E_F = h((1 + sqrt(1 - C^2))/2).
pub fn entanglement_of_formation(rho: &DensityMatrix) -> Result<f64> {
    let c = concurrence(rho)?.min(1.0);
    binary_entropy((1.0 + (1.0 - c * c).max(0.0).sqrt()) / 2.0)
}

/// The pair (S(rho_1) - S(rho_12), S(rho_2) - S(rho_12)); either may be
/// negative.
pub fn coherent_info_pair(rho: &DensityMatrix) -> Result<(f64, f64)> {
    require_two_qubit(rho)?;
    let s12 = von_neumann_entropy(rho);
    let r1 = DensityMatrix::new(partial_trace(rho.matrix(), 1)?)?;
    let r2 = DensityMatrix::new(partial_trace(rho.matrix(), 2)?)?;
    Ok((
        von_neumann_entropy(&r1) - s12,
        von_neumann_entropy(&r2) - s12,
    ))
}

/// Distillable entanglement of a normalized two-qubit pure state: the
/// entropy of either reduced density matrix.
pub fn distill_pure(state: &ComplexMatrix) -> Result<f64> {
    if state.cols() != 1 || state.rows() != 4 {
        return Err(Error::DimensionMismatch {
            expected: "4x1 state vector".into(),
            actual: format!("{}x{}", state.rows(), state.cols()),
        });
    }
    let rho = DensityMatrix::from_pure(state)?;
    let reduced = DensityMatrix::new(partial_trace(rho.matrix(), 1)?)?;
    Ok(von_neumann_entropy(&reduced))
}

/// Distillable entanglement 1 - h(lambda) of a mixture of two Bell
/// states with weights lambda and 1 - lambda.
pub fn distill_two_bell_mixture(lambda: f64) -> Result<f64> {
    if !(0.5..=1.0).contains(&lambda) || !lambda.is_finite() {
        return Err(Error::OutOfRange {
            name: "lambda",
            value: lambda,
            requirement: "in [0.5, 1]",
        });
    }
    Ok(1.0 - binary_entropy(lambda)?)
}

/// Weights of a state in the Bell basis if it is Bell diagonal, i.e.
/// if the four Bell projectors reconstruct it entrywise.
fn bell_diagonal_weights(rho: &DensityMatrix) -> Option<[f64; 4]> {
    let mut weights = [0.0; 4];
    let mut rebuilt = ComplexMatrix::zeros(4, 4);
    for (w, bell) in weights.iter_mut().zip(BellState::ALL) {
        let v = bell.vector();
        let overlap = (&(&v.adjoint() * rho.matrix()) * &v).get(0, 0);
        *w = overlap.re;
        rebuilt = &rebuilt + &v.outer().scale_re(*w);
    }
    if rebuilt.max_abs_diff(rho.matrix()) <= STRUCTURE_TOL {
        Some(weights)
    } else {
        None
    }
}

/// Full bounds report for a two-qubit state.
///
/// The exact distillable entanglement is filled in when the state has
/// one of the two structures for which it is known: a pure state
/// (entropy of the reduced state) or a mixture of at most two Bell
/// states (1 - S(rho)).
pub fn bounds_report(rho: &DensityMatrix) -> Result<BoundsReport> {
    require_two_qubit(rho)?;
    let (coherent_info_1, coherent_info_2) = coherent_info_pair(rho)?;
    let e_formation = entanglement_of_formation(rho)?;
    let lower_bound = coherent_info_1.min(coherent_info_2);

    let exact_distillable = if rho.is_pure() {
        let reduced = DensityMatrix::new(partial_trace(rho.matrix(), 1)?)?;
        Some(von_neumann_entropy(&reduced))
    } else if let Some(weights) = bell_diagonal_weights(rho) {
        let nonzero = weights.iter().filter(|&&w| w > STRUCTURE_TOL).count();
        if nonzero <= 2 {
            Some((1.0 - von_neumann_entropy(rho)).max(0.0))
        } else {
            None
        }
    } else {
        None
    };

    Ok(BoundsReport {
        e_formation,
        coherent_info_1,
        coherent_info_2,
        lower_bound,
        exact_distillable,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channels::{propagate_bell, watched_conditional, BellInput, ChannelKind};
    use approx::assert_abs_diff_eq;

    fn diag_dm(d: &[f64]) -> DensityMatrix {
        DensityMatrix::new(ComplexMatrix::from_real_diag(d)).unwrap()
    }

    fn mixture(a: f64) -> DensityMatrix {
        let psi = BellState::PsiPlus.vector().outer().scale_re(a);
        let vac = ComplexMatrix::from_real_diag(&[1.0 - a, 0.0, 0.0, 0.0]);
        DensityMatrix::new(&psi + &vac).unwrap()
    }

    #[test]
    fn entropy_basics() {
        assert_abs_diff_eq!(von_neumann_entropy(&diag_dm(&[0.5, 0.5])), 1.0, epsilon = 1e-14);
        let pure = DensityMatrix::from_pure(&BellState::PhiMinus.vector()).unwrap();
        assert_abs_diff_eq!(von_neumann_entropy(&pure), 0.0, epsilon = 1e-12);
        // fixed point: h(0.25) by direct -sum lambda log2 lambda
        assert_abs_diff_eq!(
            von_neumann_entropy(&diag_dm(&[0.25, 0.75])),
            0.811278124459133,
            epsilon = 1e-12
        );
    }

    #[test]
    fn binary_entropy_basics() {
        assert_abs_diff_eq!(binary_entropy(0.5).unwrap(), 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(binary_entropy(0.0).unwrap(), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(binary_entropy(1.0).unwrap(), 0.0, epsilon = 1e-15);
        // symmetric about 1/2
        assert_abs_diff_eq!(
            binary_entropy(0.3).unwrap(),
            binary_entropy(0.7).unwrap(),
            epsilon = 1e-15
        );
        // value at the bit-flip mixture weight for gamma = 1.5
        let lambda = (1.0 + (-1.5f64).exp()) / 2.0;
        assert_abs_diff_eq!(binary_entropy(lambda).unwrap(), 0.963782116603464, epsilon = 1e-12);
        assert!(binary_entropy(-0.1).is_err());
        assert!(binary_entropy(1.1).is_err());
    }

    #[test]
    fn concurrence_extremes() {
        let bell = DensityMatrix::from_pure(&BellState::PhiPlus.vector()).unwrap();
        assert_abs_diff_eq!(concurrence(&bell).unwrap(), 1.0, epsilon = 1e-10);
        let product = diag_dm(&[1.0, 0.0, 0.0, 0.0]);
        assert_abs_diff_eq!(concurrence(&product).unwrap(), 0.0, epsilon = 1e-10);
    }

    #[test]
    fn concurrence_of_damped_mixture_equals_weight() {
        // a |psi+><psi+| + (1-a)|00><00| has C = a: rho rho~ has the
        // single nonzero eigenvalue a^2.
        for a in [0.1, 0.5, 0.9] {
            assert_abs_diff_eq!(concurrence(&mixture(a)).unwrap(), a, epsilon = 1e-10);
        }
    }

    #[test]
    fn concurrence_requires_two_qubits() {
        assert!(concurrence(&diag_dm(&[0.5, 0.5])).is_err());
    }

    #[test]
    fn formation_extremes() {
        let bell = DensityMatrix::from_pure(&BellState::PsiMinus.vector()).unwrap();
        assert_abs_diff_eq!(entanglement_of_formation(&bell).unwrap(), 1.0, epsilon = 1e-10);
        let product = diag_dm(&[0.0, 1.0, 0.0, 0.0]);
        assert_abs_diff_eq!(entanglement_of_formation(&product).unwrap(), 0.0, epsilon = 1e-10);
    }

    #[test]
    fn formation_of_conditional_state_matches_reduced_entropy() {
        // pure-state cross-check: E_F = S(reduced) for the watched
        // conditional state, evaluated through independent routes
        for gamma in [0.2, 0.5, 1.0, 2.0] {
            let out = watched_conditional(BellInput::PhiPlus, gamma).unwrap();
            let rho = DensityMatrix::from_pure(&out.conditional_state).unwrap();
            let ef = entanglement_of_formation(&rho).unwrap();
            let s = distill_pure(&out.conditional_state).unwrap();
            assert_abs_diff_eq!(ef, s, epsilon = 1e-9);
            // concurrence closed form 2 e^{-2G} / (1 + e^{-4G})
            let e2 = (-2.0 * gamma).exp();
            let c_expect = 2.0 * e2 / (1.0 + e2 * e2);
            assert_abs_diff_eq!(concurrence(&rho).unwrap(), c_expect, epsilon = 1e-10);
        }
    }

    #[test]
    fn coherent_info_trivial_cases() {
        let bell = DensityMatrix::from_pure(&BellState::PhiPlus.vector()).unwrap();
        let (c1, c2) = coherent_info_pair(&bell).unwrap();
        assert_abs_diff_eq!(c1, 1.0, epsilon = 1e-10);
        assert_abs_diff_eq!(c2, 1.0, epsilon = 1e-10);
        let mixed = diag_dm(&[0.25, 0.25, 0.25, 0.25]);
        let (c1, c2) = coherent_info_pair(&mixed).unwrap();
        assert_abs_diff_eq!(c1, -1.0, epsilon = 1e-10);
        assert_abs_diff_eq!(c2, -1.0, epsilon = 1e-10);
    }

    #[test]
    fn coherent_info_of_damped_psi_plus_closed_form() {
        // spectra {1-a/2, a/2} and {a, 1-a} give h(a/2) - h(a) on both sides
        let gamma = 0.3f64;
        let a = (-2.0 * gamma).exp();
        let rho = propagate_bell(ChannelKind::AmplitudeDamping, BellInput::PsiPlus, gamma).unwrap();
        let (c1, c2) = coherent_info_pair(&rho).unwrap();
        let expect = binary_entropy(a / 2.0).unwrap() - binary_entropy(a).unwrap();
        assert_abs_diff_eq!(c1, expect, epsilon = 1e-10);
        assert_abs_diff_eq!(c2, expect, epsilon = 1e-10);
        // frozen from an independent evaluation
        assert_abs_diff_eq!(c1, -0.145398470359796, epsilon = 1e-12);
    }

    #[test]
    fn distill_pure_basics() {
        assert_abs_diff_eq!(
            distill_pure(&BellState::PsiPlus.vector()).unwrap(),
            1.0,
            epsilon = 1e-12
        );
        let product = ComplexMatrix::col_from_real(&[1.0, 0.0, 0.0, 0.0]);
        assert_abs_diff_eq!(distill_pure(&product).unwrap(), 0.0, epsilon = 1e-12);
        // conditional state at e^{-2G} = 1/2: reduced spectrum (4/5, 1/5)
        let n = (1.25f64).sqrt();
        let v = ComplexMatrix::col_from_real(&[1.0 / n, 0.0, 0.0, 0.5 / n]);
        assert_abs_diff_eq!(distill_pure(&v).unwrap(), 0.721928094887362, epsilon = 1e-12);
        // unnormalized input rejected
        let bad = ComplexMatrix::col_from_real(&[1.0, 1.0, 0.0, 0.0]);
        assert!(distill_pure(&bad).is_err());
    }

    #[test]
    fn distill_two_bell_mixture_basics() {
        assert_abs_diff_eq!(distill_two_bell_mixture(1.0).unwrap(), 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(distill_two_bell_mixture(0.5).unwrap(), 0.0, epsilon = 1e-15);
        let lambda = (1.0 + (-1.5f64).exp()) / 2.0;
        assert_abs_diff_eq!(
            distill_two_bell_mixture(lambda).unwrap(),
            0.036217883396536,
            epsilon = 1e-12
        );
        assert!(distill_two_bell_mixture(0.4).is_err());
        assert!(distill_two_bell_mixture(1.1).is_err());
    }

    #[test]
    fn bounds_report_pure_state() {
        let bell = DensityMatrix::from_pure(&BellState::PhiPlus.vector()).unwrap();
        let report = bounds_report(&bell).unwrap();
        assert_abs_diff_eq!(report.e_formation, 1.0, epsilon = 1e-10);
        assert_abs_diff_eq!(report.lower_bound, 1.0, epsilon = 1e-10);
        assert_abs_diff_eq!(report.exact_distillable.unwrap(), 1.0, epsilon = 1e-10);
        assert!(report.entangled());
    }

    #[test]
    fn bounds_report_two_bell_mixture() {
        let gamma = 1.5;
        let rho = propagate_bell(ChannelKind::BitFlip, BellInput::PsiPlus, gamma).unwrap();
        let report = bounds_report(&rho).unwrap();
        let lambda = (1.0 + (-gamma).exp()) / 2.0;
        let expect = distill_two_bell_mixture(lambda).unwrap();
        assert_abs_diff_eq!(report.exact_distillable.unwrap(), expect, epsilon = 1e-12);
        // lower bound coincides with the exact value for Bell mixtures
        assert_abs_diff_eq!(report.lower_bound, expect, epsilon = 1e-10);
        assert!(report.lower_bound <= report.exact_distillable.unwrap() + 1e-9);
        assert!(report.exact_distillable.unwrap() <= report.e_formation + 1e-9);
    }

    #[test]
    fn bounds_report_werner_has_no_exact_value() {
        let rho = propagate_bell(ChannelKind::Depolarizing, BellInput::PhiPlus, 0.3).unwrap();
        let report = bounds_report(&rho).unwrap();
        assert!(report.exact_distillable.is_none());
        assert!(report.lower_bound <= report.e_formation + 1e-9);
    }

    #[test]
    fn bounds_report_damped_state_has_no_exact_value() {
        let rho = propagate_bell(ChannelKind::AmplitudeDamping, BellInput::PhiPlus, 0.5).unwrap();
        let report = bounds_report(&rho).unwrap();
        assert!(report.exact_distillable.is_none());
    }
}
