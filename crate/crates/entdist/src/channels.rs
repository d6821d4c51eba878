//! The five qubit noise-channel models, their length parameterizations
//! and their action on Bell-state inputs.
//!
//! Each channel is driven by a single dimensionless length parameter
//! `gamma`. The per-qubit error probability follows a fixed table:
//!
//! | channel                    | p(gamma)              |
//! |----------------------------|-----------------------|
//! | amplitude damping, watched | 1 - exp(-2 gamma)     |
//! | phase damping              | 1 - exp(-gamma)       |
//! | depolarizing               | 3 (1 - exp(-gamma))/4 |
//! | bit/phase/bit-phase flip   | (1 - exp(-gamma/2))/2 |
//!
//! The flip parameterization is chosen per qubit so that the composite
//! two-qubit state of a Bell input is exactly the mixture
//! `lambda |b><b| + (1 - lambda) |b'><b'|` with
//! `lambda = (1 + exp(-gamma))/2`; the identity
//! `lambda = (1-q)^2 + q^2` ties the two forms together.
//!
//! All operations are pure functions over immutable values.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::smallmat::{hermitian_eigen, tensor, ComplexMatrix, HERMITICITY_TOL, PSD_CLAMP_TOL};

const FRAC_1_SQRT_2: f64 = std::f64::consts::FRAC_1_SQRT_2;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Pauli X.
pub fn sigma_x() -> ComplexMatrix {
    ComplexMatrix::new(2, 2, vec![c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)]).unwrap()
}

/// Pauli Y.
pub fn sigma_y() -> ComplexMatrix {
    ComplexMatrix::new(2, 2, vec![c(0.0, 0.0), c(0.0, -1.0), c(0.0, 1.0), c(0.0, 0.0)]).unwrap()
}

/// Pauli Z.
pub fn sigma_z() -> ComplexMatrix {
    ComplexMatrix::new(2, 2, vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(-1.0, 0.0)]).unwrap()
}

/// The supported channel models.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChannelKind {
    AmplitudeDamping,
    WatchedAmplitudeDamping,
    BitFlip,
    PhaseFlip,
    BitPhaseFlip,
    PhaseDamping,
    Depolarizing,
}

impl ChannelKind {
    pub const ALL: [ChannelKind; 7] = [
        ChannelKind::AmplitudeDamping,
        ChannelKind::WatchedAmplitudeDamping,
        ChannelKind::BitFlip,
        ChannelKind::PhaseFlip,
        ChannelKind::BitPhaseFlip,
        ChannelKind::PhaseDamping,
        ChannelKind::Depolarizing,
    ];

    /// Stable lowercase token used on the command line.
    pub fn token(&self) -> &'static str {
        match self {
            ChannelKind::AmplitudeDamping => "amplitude-damping",
            ChannelKind::WatchedAmplitudeDamping => "watched-amplitude-damping",
            ChannelKind::BitFlip => "bit-flip",
            ChannelKind::PhaseFlip => "phase-flip",
            ChannelKind::BitPhaseFlip => "bit-phase-flip",
            ChannelKind::PhaseDamping => "phase-damping",
            ChannelKind::Depolarizing => "depolarizing",
        }
    }

    /// False only for the watched channel, whose conditional evolution
    /// is trace decreasing.
    pub fn is_trace_preserving(&self) -> bool {
        !matches!(self, ChannelKind::WatchedAmplitudeDamping)
    }

    pub fn is_flip(&self) -> bool {
        matches!(self, ChannelKind::BitFlip | ChannelKind::PhaseFlip | ChannelKind::BitPhaseFlip)
    }
}

impl fmt::Display for ChannelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for ChannelKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ChannelKind::ALL
            .into_iter()
            .find(|k| k.token() == s)
            .ok_or_else(|| Error::UnknownToken {
                what: "channel",
                token: s.to_string(),
            })
    }
}

/// The four Bell states.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BellState {
    PhiPlus,
    PhiMinus,
    PsiPlus,
    PsiMinus,
}

impl BellState {
    pub const ALL: [BellState; 4] = [
        BellState::PhiPlus,
        BellState::PhiMinus,
        BellState::PsiPlus,
        BellState::PsiMinus,
    ];

    /// The normalized state vector in the computational basis
    /// |00>, |01>, |10>, |11>.
    pub fn vector(&self) -> ComplexMatrix {
        let s = FRAC_1_SQRT_2;
        let amps = match self {
            BellState::PhiPlus => [s, 0.0, 0.0, s],
            BellState::PhiMinus => [s, 0.0, 0.0, -s],
            BellState::PsiPlus => [0.0, s, s, 0.0],
            BellState::PsiMinus => [0.0, s, -s, 0.0],
        };
        ComplexMatrix::col_from_real(&amps)
    }
}

/// The two Bell states used as channel inputs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BellInput {
    /// (|01> + |10>)/sqrt(2)
    PsiPlus,
    /// (|00> + |11>)/sqrt(2)
    PhiPlus,
}

impl BellInput {
    pub const ALL: [BellInput; 2] = [BellInput::PsiPlus, BellInput::PhiPlus];

    pub fn token(&self) -> &'static str {
        match self {
            BellInput::PsiPlus => "psi-plus",
            BellInput::PhiPlus => "phi-plus",
        }
    }

    pub fn bell_state(&self) -> BellState {
        match self {
            BellInput::PsiPlus => BellState::PsiPlus,
            BellInput::PhiPlus => BellState::PhiPlus,
        }
    }

    pub fn state_vector(&self) -> ComplexMatrix {
        self.bell_state().vector()
    }
}

impl fmt::Display for BellInput {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for BellInput {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BellInput::ALL
            .into_iter()
            .find(|b| b.token() == s)
            .ok_or_else(|| Error::UnknownToken {
                what: "bell input",
                token: s.to_string(),
            })
    }
}

/// A validated one- or two-qubit quantum state.
///
/// Construction checks Hermiticity (1e-10), unit trace (1e-10) and
/// positive semidefiniteness (eigenvalues >= -1e-10) and caches the
/// spectrum for downstream entropy evaluations.
#[derive(Debug, Clone)]
pub struct DensityMatrix {
    mat: ComplexMatrix,
    eigenvalues: Vec<f64>,
}

impl DensityMatrix {
    pub fn new(mat: ComplexMatrix) -> Result<Self> {
        let n = mat.rows();
        if !mat.is_square() || (n != 2 && n != 4) {
            return Err(Error::InvalidDensityMatrix {
                reason: format!("expected 2x2 or 4x4, got {}x{}", mat.rows(), mat.cols()),
            });
        }
        let dev = mat.hermiticity_deviation();
        if dev > HERMITICITY_TOL {
            return Err(Error::InvalidDensityMatrix {
                reason: format!("not Hermitian (deviation {dev:.3e})"),
            });
        }
        let tr = mat.trace();
        if (tr.re - 1.0).abs() > HERMITICITY_TOL || tr.im.abs() > HERMITICITY_TOL {
            return Err(Error::InvalidDensityMatrix {
                reason: format!("trace = {tr} instead of 1"),
            });
        }
        let eig = hermitian_eigen(&mat)?;
        if eig.eigenvalues[0] < -PSD_CLAMP_TOL {
            return Err(Error::InvalidDensityMatrix {
                reason: format!("negative eigenvalue {:.3e}", eig.eigenvalues[0]),
            });
        }
        Ok(Self {
            mat,
            eigenvalues: eig.eigenvalues,
        })
    }

    /// Projector onto a normalized pure state.
    pub fn from_pure(state: &ComplexMatrix) -> Result<Self> {
        let norm = state.vector_norm();
        if (norm - 1.0).abs() > 1e-10 {
            return Err(Error::NotNormalized { norm });
        }
        Self::new(state.outer())
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.mat
    }

    pub fn dim(&self) -> usize {
        self.mat.rows()
    }

    /// Cached spectrum, ascending.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// Tr(rho^2).
    pub fn purity(&self) -> f64 {
        self.eigenvalues.iter().map(|l| l * l).sum()
    }

    pub fn is_pure(&self) -> bool {
        self.purity() >= 1.0 - 1e-10
    }
}

/// Result of the watched channel conditioned on no decay.
#[derive(Debug, Clone)]
pub struct WatchedOutcome {
    /// Normalized two-qubit pure state after post-selection.
    pub conditional_state: ComplexMatrix,
    /// Probability of observing the no-decay environment record.
    pub survival_probability: f64,
}

fn check_gamma(gamma: f64) -> Result<()> {
    if !gamma.is_finite() || gamma < 0.0 {
        return Err(Error::OutOfRange {
            name: "gamma",
            value: gamma,
            requirement: "finite and >= 0",
        });
    }
    Ok(())
}

/// Maps the channel length `gamma` to the per-qubit error parameter.
///
/// For the flip channels this is the per-qubit flip probability
/// `q = (1 - exp(-gamma/2))/2`, which composes across both qubits of a
/// pair to the mixture weight `lambda = (1 + exp(-gamma))/2`.
pub fn param_from_gamma(kind: ChannelKind, gamma: f64) -> Result<f64> {
    check_gamma(gamma)?;
    let p = match kind {
        ChannelKind::AmplitudeDamping | ChannelKind::WatchedAmplitudeDamping => {
            1.0 - (-2.0 * gamma).exp()
        }
        ChannelKind::PhaseDamping => 1.0 - (-gamma).exp(),
        ChannelKind::Depolarizing => 3.0 * (1.0 - (-gamma).exp()) / 4.0,
        ChannelKind::BitFlip | ChannelKind::PhaseFlip | ChannelKind::BitPhaseFlip => {
            (1.0 - (-gamma / 2.0).exp()) / 2.0
        }
    };
    Ok(p)
}

/// Single-qubit Kraus operators of a channel at error parameter `p`.
///
/// Trace-preserving kinds satisfy sum K-dagger K = I. The watched
/// channel instead returns the single conditional (trace-decreasing)
/// operator `diag(1, sqrt(1-p))`.
pub fn kraus_ops(kind: ChannelKind, p: f64) -> Result<Vec<ComplexMatrix>> {
    if !(0.0..=1.0).contains(&p) || !p.is_finite() {
        return Err(Error::OutOfRange {
            name: "p",
            value: p,
            requirement: "in [0, 1]",
        });
    }
    let ops = match kind {
        ChannelKind::AmplitudeDamping => vec![
            ComplexMatrix::from_real_diag(&[1.0, (1.0 - p).sqrt()]),
            ComplexMatrix::new(
                2,
                2,
                vec![c(0.0, 0.0), c(p.sqrt(), 0.0), c(0.0, 0.0), c(0.0, 0.0)],
            )?,
        ],
        ChannelKind::WatchedAmplitudeDamping => {
            vec![ComplexMatrix::from_real_diag(&[1.0, (1.0 - p).sqrt()])]
        }
        ChannelKind::PhaseDamping => vec![
            ComplexMatrix::identity(2).scale_re((1.0 - p).sqrt()),
            ComplexMatrix::from_real_diag(&[p.sqrt(), 0.0]),
            ComplexMatrix::from_real_diag(&[0.0, p.sqrt()]),
        ],
        ChannelKind::Depolarizing => vec![
            ComplexMatrix::identity(2).scale_re((1.0 - p).sqrt()),
            sigma_x().scale_re((p / 3.0).sqrt()),
            sigma_y().scale_re((p / 3.0).sqrt()),
            sigma_z().scale_re((p / 3.0).sqrt()),
        ],
        ChannelKind::BitFlip => vec![
            ComplexMatrix::identity(2).scale_re((1.0 - p).sqrt()),
            sigma_x().scale_re(p.sqrt()),
        ],
        ChannelKind::PhaseFlip => vec![
            ComplexMatrix::identity(2).scale_re((1.0 - p).sqrt()),
            sigma_z().scale_re(p.sqrt()),
        ],
        ChannelKind::BitPhaseFlip => vec![
            ComplexMatrix::identity(2).scale_re((1.0 - p).sqrt()),
            sigma_y().scale_re(p.sqrt()),
        ],
    };
    Ok(ops)
}

/// Sends each qubit of a Bell pair through an independent copy of the
/// channel at per-qubit length `gamma_per_qubit` and returns the joint
/// output state.
///
/// The watched channel has no trace-preserving representation and is
/// rejected; use [`watched_conditional`] for it.
pub fn propagate_bell(
    kind: ChannelKind,
    input: BellInput,
    gamma_per_qubit: f64,
) -> Result<DensityMatrix> {
    if !kind.is_trace_preserving() {
        return Err(Error::UnsupportedChannel {
            kind: kind.to_string(),
            reason: "trace decreasing; use watched_conditional",
        });
    }
    let p = param_from_gamma(kind, gamma_per_qubit)?;
    let ops = kraus_ops(kind, p)?;
    let rho0 = input.state_vector().outer();
    let mut out = ComplexMatrix::zeros(4, 4);
    for ki in &ops {
        for kj in &ops {
            let k = tensor(ki, kj);
            let term = &(&k * &rho0) * &k.adjoint();
            out = &out + &term;
        }
    }
    DensityMatrix::new(out)
}

/// Conditional (no-decay) evolution of a Bell input through the watched
/// amplitude damping channel.
///
/// Applies the conditional operator to both qubits; the survival
/// probability is the squared norm of the unnormalized outcome.
pub fn watched_conditional(input: BellInput, gamma_per_qubit: f64) -> Result<WatchedOutcome> {
    let p = param_from_gamma(ChannelKind::WatchedAmplitudeDamping, gamma_per_qubit)?;
    let ops = kraus_ops(ChannelKind::WatchedAmplitudeDamping, p)?;
    let m2 = tensor(&ops[0], &ops[0]);
    let raw = &m2 * &input.state_vector();
    let norm = raw.vector_norm();
    let survival_probability = norm * norm;
    let conditional_state = raw.scale_re(1.0 / norm);
    Ok(WatchedOutcome {
        conditional_state,
        survival_probability,
    })
}

/// Mixture weight `lambda = (1 + exp(-gamma))/2` of the two-Bell-state
/// output of a flip channel.
pub fn bell_mixture_lambda(kind: ChannelKind, gamma: f64) -> Result<f64> {
    if !kind.is_flip() {
        return Err(Error::UnsupportedChannel {
            kind: kind.to_string(),
            reason: "lambda mixture form applies to flip channels only",
        });
    }
    check_gamma(gamma)?;
    Ok((1.0 + (-gamma).exp()) / 2.0)
}

/// The Bell state that a flip channel mixes into a given input.
pub fn flip_partner(kind: ChannelKind, input: BellInput) -> Result<BellState> {
    let partner = match (kind, input) {
        (ChannelKind::BitFlip, BellInput::PsiPlus) => BellState::PhiPlus,
        (ChannelKind::BitFlip, BellInput::PhiPlus) => BellState::PsiPlus,
        (ChannelKind::PhaseFlip, BellInput::PsiPlus) => BellState::PsiMinus,
        (ChannelKind::PhaseFlip, BellInput::PhiPlus) => BellState::PhiMinus,
        (ChannelKind::BitPhaseFlip, BellInput::PsiPlus) => BellState::PhiMinus,
        (ChannelKind::BitPhaseFlip, BellInput::PhiPlus) => BellState::PsiMinus,
        (kind, _) => {
            return Err(Error::UnsupportedChannel {
                kind: kind.to_string(),
                reason: "lambda mixture form applies to flip channels only",
            })
        }
    };
    Ok(partner)
}
