//! Entanglement yields and repeater resource-reduction ratios for
//! qubit noise channels.
//!
//! The crate models the distribution of Bell pairs through five noisy
//! channel families (amplitude damping — watched and unwatched, the
//! flip channels, phase damping and depolarizing), scores the delivered
//! entanglement with exact asymptotic distillation results where they
//! exist and with entropic bounds where they do not, and compares an
//! undivided channel against the same channel split into m sections
//! with repeater stations at the junctions. The headline quantity is
//! the resource-reduction ratio eta: how many times fewer entangled
//! sources the segmented channel needs to deliver the same end-to-end
//! entanglement.
//!
//! Start from [`repeater::Scenario`], or see the `examples/` directory
//! for one runnable program per capability. The `repeaterc` binary
//! exposes the same machinery on the command line and emits
//! figure-ready CSV datasets.

pub mod channels;
pub mod cli;
pub mod entmeasures;
pub mod error;
pub mod repeater;
pub mod smallmat;

pub use channels::{BellInput, BellState, ChannelKind, DensityMatrix, WatchedOutcome};
pub use entmeasures::BoundsReport;
pub use error::{Error, Result};
pub use repeater::{BoundMode, EtaPoint, EtaScan, Scenario, YieldScan};
pub use smallmat::{ComplexMatrix, EigenDecomposition};
