//! For bound-scored channels, finds how many sections a channel must
//! be divided into before any entanglement can be certified, and where
//! the division starts saving resources.
//!
//! Run with: cargo run --example onset_thresholds

use entdist::channels::{BellInput, ChannelKind};
use entdist::repeater::{optimal_sections, threshold_sections, Scenario};

fn main() -> entdist::Result<()> {
    let cases = [
        (ChannelKind::AmplitudeDamping, BellInput::PsiPlus, 2.0),
        (ChannelKind::AmplitudeDamping, BellInput::PhiPlus, 1.0),
        (ChannelKind::PhaseDamping, BellInput::PhiPlus, 1.0),
        (ChannelKind::Depolarizing, BellInput::PhiPlus, 0.545),
    ];
    for (kind, input, gamma) in cases {
        let s = Scenario::new(kind, input, gamma)?;
        let (m_ent, m_eta) = threshold_sections(&s, 60)?;
        let (m_star, eta_star) = optimal_sections(&s, 60)?;
        println!("{kind}, {input}, gamma = {gamma}");
        match m_ent {
            Some(m) => println!("  entanglement certified from  m = {m} sections"),
            None => println!("  no entanglement certified up to m = 60"),
        }
        match m_eta {
            Some(m) => println!("  resource reduction (eta > 1) from  m = {m}"),
            None => println!("  no resource reduction up to m = 60"),
        }
        println!("  peak eta = {eta_star:.3} at m = {m_star}");
        println!();
    }
    Ok(())
}
