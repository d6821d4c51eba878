//! Yields and resource-reduction ratios for segmented channels.
//!
//! A channel of length `gamma` split into `m` equal sections runs each
//! qubit through the single-qubit channel at parameter `gamma / m`;
//! the stations between sections connect pairs one-for-one, so the
//! end-to-end pair count equals the per-section count and an m-section
//! channel pays a factor 1/m in sources. All quantities are per-source
//! ratios; the absolute source count never appears.
//!
//! Channels whose output states have exactly known distillable
//! entanglement (watched amplitude damping, the flip channels) are
//! scored exactly and their eta compares yields directly. The rest
//! (amplitude damping, phase damping, depolarizing) are scored by the
//! coherent-information lower bound for the segmented channel against
//! the entanglement-of-formation upper bound for the undivided one, so
//! the comparison never favors repeaters.

use crate::channels::{propagate_bell, watched_conditional, BellInput, ChannelKind};
use crate::entmeasures::{coherent_info_pair, distill_pure, entanglement_of_formation, von_neumann_entropy};
use crate::error::{Error, Result};

/// Lower bounds above this are reported as genuine entanglement.
pub const ENTANGLEMENT_EPS: f64 = 1e-12;

/// Default section-count ceiling for exactly scored channels.
pub const DEFAULT_M_MAX_EXACT: usize = 20;
/// Default section-count ceiling for bound-scored channels, whose
/// peaks sit further out.
pub const DEFAULT_M_MAX_CONJECTURE: usize = 60;

const BISECTION_TOL: f64 = 1e-9;
const BISECTION_MAX_ITER: usize = 200;

/// How the per-section states are scored.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundMode {
    /// Distillable entanglement exactly known (pure or two-Bell-mixture
    /// outputs).
    Exact,
    /// Coherent-information lower bound against the E_F upper bound.
    ConjectureBased,
}

impl BoundMode {
    pub fn for_kind(kind: ChannelKind) -> BoundMode {
        match kind {
            ChannelKind::WatchedAmplitudeDamping
            | ChannelKind::BitFlip
            | ChannelKind::PhaseFlip
            | ChannelKind::BitPhaseFlip => BoundMode::Exact,
            ChannelKind::AmplitudeDamping | ChannelKind::PhaseDamping | ChannelKind::Depolarizing => {
                BoundMode::ConjectureBased
            }
        }
    }

    pub fn default_m_max(&self) -> usize {
        match self {
            BoundMode::Exact => DEFAULT_M_MAX_EXACT,
            BoundMode::ConjectureBased => DEFAULT_M_MAX_CONJECTURE,
        }
    }
}

/// A channel model, input state and full-channel length.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Scenario {
    pub kind: ChannelKind,
    pub input: BellInput,
    /// Per-qubit damping parameter of the undivided channel.
    pub gamma: f64,
    pub bound_mode: BoundMode,
}

impl Scenario {
    /// Builds a scenario; the bound mode follows from the channel kind.
    pub fn new(kind: ChannelKind, input: BellInput, gamma: f64) -> Result<Self> {
        if !gamma.is_finite() || gamma < 0.0 {
            return Err(Error::OutOfRange {
                name: "gamma",
                value: gamma,
                requirement: "finite and >= 0",
            });
        }
        Ok(Self {
            kind,
            input,
            gamma,
            bound_mode: BoundMode::for_kind(kind),
        })
    }

    fn with_gamma(&self, gamma: f64) -> Result<Self> {
        Scenario::new(self.kind, self.input, gamma)
    }
}

/// One row of an eta scan.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EtaPoint {
    pub m: usize,
    /// Resource-reduction ratio; 0 when the segmented channel cannot be
    /// shown to deliver entanglement.
    pub eta: f64,
    /// Distillable entanglement per source pair across one section:
    /// exact where known, otherwise the coherent-information lower
    /// bound (which may be negative).
    pub lower_bound_value: f64,
    pub entangled: bool,
}

/// Eta over m = 1..=m_max for one scenario.
#[derive(Debug, Clone)]
pub struct EtaScan {
    pub scenario: Scenario,
    pub points: Vec<EtaPoint>,
}

/// Yield-per-source curves over a gamma grid, one column per section
/// count.
#[derive(Debug, Clone)]
pub struct YieldScan {
    pub scenario: Scenario,
    pub sections: Vec<usize>,
    /// (gamma, yield per source for each entry of `sections`).
    pub rows: Vec<(f64, Vec<f64>)>,
}

fn check_sections(m: usize) -> Result<()> {
    if m == 0 {
        return Err(Error::ZeroSections);
    }
    Ok(())
}

/// Distillable entanglement per source pair across one section of
/// length `gamma / m`, scored per the scenario's bound mode. For the
/// bound-scored channels this is the raw lower bound and may be
/// negative.
pub fn section_distillable(s: &Scenario, m: usize) -> Result<f64> {
    check_sections(m)?;
    let seg_gamma = s.gamma / m as f64;
    match s.bound_mode {
        BoundMode::Exact => match s.kind {
            ChannelKind::WatchedAmplitudeDamping => {
                let out = watched_conditional(s.input, seg_gamma)?;
                Ok(out.survival_probability * distill_pure(&out.conditional_state)?)
            }
            _ => {
                // flip channels: exactly 1 - S for the two-Bell mixture
                let rho = propagate_bell(s.kind, s.input, seg_gamma)?;
                Ok(1.0 - von_neumann_entropy(&rho))
            }
        },
        BoundMode::ConjectureBased => {
            let rho = propagate_bell(s.kind, s.input, seg_gamma)?;
            let (c1, c2) = coherent_info_pair(&rho)?;
            Ok(c1.min(c2))
        }
    }
}

/// Ebits delivered across the full channel per initial source pair,
/// with the channel split into `m` sections.
pub fn yield_per_source(s: &Scenario, m: usize) -> Result<f64> {
    Ok(section_distillable(s, m)?.max(0.0) / m as f64)
}

/// Resource-reduction ratio at section count `m`.
///
/// Exact mode compares like with like: eta = yield(m) / yield(1), so
/// m = 1 gives exactly 1. Bound mode deliberately compares the
/// segmented channel's lower bound against the undivided channel's
/// upper bound E_F; a non-positive lower bound reports eta = 0 rather
/// than a meaningless negative ratio.
pub fn eta(s: &Scenario, m: usize) -> Result<EtaPoint> {
    check_sections(m)?;
    match s.bound_mode {
        BoundMode::Exact => {
            let lower = section_distillable(s, m)?;
            let y_m = lower.max(0.0) / m as f64;
            let y_1 = yield_per_source(s, 1)?;
            if y_1 <= 0.0 {
                return Err(Error::ZeroReferenceYield);
            }
            Ok(EtaPoint {
                m,
                eta: y_m / y_1,
                lower_bound_value: lower,
                entangled: lower > ENTANGLEMENT_EPS,
            })
        }
        BoundMode::ConjectureBased => {
            let lower = section_distillable(s, m)?;
            let rho_full = propagate_bell(s.kind, s.input, s.gamma)?;
            let e_f = entanglement_of_formation(&rho_full)?;
            if e_f <= 0.0 {
                return Err(Error::SeparableReference);
            }
            let eta = if lower > 0.0 { lower / (m as f64 * e_f) } else { 0.0 };
            Ok(EtaPoint {
                m,
                eta,
                lower_bound_value: lower,
                entangled: lower > ENTANGLEMENT_EPS,
            })
        }
    }
}

/// Eta for every m in 1..=m_max.
///
/// Every cell is a pure function of the scenario, so grid evaluation
/// order is free; results are assembled by index.
pub fn scan(s: &Scenario, m_max: usize) -> Result<EtaScan> {
    check_sections(m_max)?;
    let points = (1..=m_max).map(|m| eta(s, m)).collect::<Result<Vec<_>>>()?;
    Ok(EtaScan { scenario: *s, points })
}

/// The section count maximizing eta over 1..=m_max, ties broken toward
/// smaller m.
pub fn optimal_sections(s: &Scenario, m_max: usize) -> Result<(usize, f64)> {
    let scan = scan(s, m_max)?;
    let mut best = (1, f64::NEG_INFINITY);
    for p in &scan.points {
        if p.eta > best.1 {
            best = (p.m, p.eta);
        }
    }
    Ok(best)
}

/// The smallest section counts at which (a) the lower bound turns
/// positive and (b) eta exceeds 1, up to m_max. Only meaningful for
/// bound-scored scenarios.
pub fn threshold_sections(s: &Scenario, m_max: usize) -> Result<(Option<usize>, Option<usize>)> {
    if s.bound_mode != BoundMode::ConjectureBased {
        return Err(Error::UnsupportedChannel {
            kind: s.kind.to_string(),
            reason: "thresholds apply to bound-scored channels only",
        });
    }
    let scan = scan(s, m_max)?;
    let m_entangled = scan.points.iter().find(|p| p.entangled).map(|p| p.m);
    let m_eta_gt_1 = scan.points.iter().find(|p| p.eta > 1.0).map(|p| p.m);
    Ok((m_entangled, m_eta_gt_1))
}

/// The channel length at which the yields for `m_a` and `m_b` sections
/// coincide, located by bisection on the bracket to 1e-9 absolute.
///
/// The scenario's own gamma is not used; the bracket defines the
/// search interval.
pub fn crossover_gamma(s: &Scenario, m_a: usize, m_b: usize, bracket: (f64, f64)) -> Result<f64> {
    if s.bound_mode != BoundMode::Exact {
        return Err(Error::UnsupportedChannel {
            kind: s.kind.to_string(),
            reason: "yield crossovers are defined for exactly scored channels",
        });
    }
    check_sections(m_a)?;
    check_sections(m_b)?;
    let (mut lo, mut hi) = bracket;
    if !(lo.is_finite() && hi.is_finite()) || lo < 0.0 || lo >= hi {
        return Err(Error::OutOfRange {
            name: "bracket",
            value: lo,
            requirement: "0 <= lo < hi, both finite",
        });
    }
    let f = |gamma: f64| -> Result<f64> {
        let sc = s.with_gamma(gamma)?;
        Ok(yield_per_source(&sc, m_a)? - yield_per_source(&sc, m_b)?)
    };
    let mut f_lo = f(lo)?;
    let f_hi = f(hi)?;
    if f_lo == 0.0 {
        return Ok(lo);
    }
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if f_lo.signum() == f_hi.signum() {
        return Err(Error::NoSignChange { lo, hi });
    }
    for _ in 0..BISECTION_MAX_ITER {
        let mid = 0.5 * (lo + hi);
        let f_mid = f(mid)?;
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
        if hi - lo < BISECTION_TOL {
            break;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Yield-per-source table over a gamma grid for several section
/// counts. The grid must be non-empty and strictly ascending.
pub fn scan_yield(s: &Scenario, sections: &[usize], gamma_grid: &[f64]) -> Result<YieldScan> {
    if sections.is_empty() || gamma_grid.is_empty() {
        return Err(Error::InvalidGrid);
    }
    if gamma_grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidGrid);
    }
    for &m in sections {
        check_sections(m)?;
    }
    let mut rows = Vec::with_capacity(gamma_grid.len());
    for &gamma in gamma_grid {
        let sc = s.with_gamma(gamma)?;
        let yields = sections
            .iter()
            .map(|&m| yield_per_source(&sc, m))
            .collect::<Result<Vec<_>>>()?;
        rows.push((gamma, yields));
    }
    Ok(YieldScan {
        scenario: *s,
        sections: sections.to_vec(),
        rows,
    })
}

/// Evenly spaced grid from `lo` to `hi` inclusive.
pub fn linspace(lo: f64, hi: f64, steps: usize) -> Result<Vec<f64>> {
    if steps < 2 || !lo.is_finite() || !hi.is_finite() || lo >= hi {
        return Err(Error::InvalidGrid);
    }
    let h = (hi - lo) / (steps - 1) as f64;
    Ok((0..steps)
        .map(|i| if i == steps - 1 { hi } else { lo + i as f64 * h })
        .collect())
}
