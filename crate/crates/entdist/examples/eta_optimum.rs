//! Resource-reduction ratio against section count, and the optimal
//! number of repeater stations, for the exactly scored channels.
//!
//! Run with: cargo run --example eta_optimum

use entdist::channels::{BellInput, ChannelKind};
use entdist::repeater::{optimal_sections, scan, Scenario};

fn print_scan(label: &str, s: &Scenario, m_max: usize) -> entdist::Result<()> {
    println!("{label}");
    println!("{:>3}  {:>12}  {:>14}", "m", "eta", "per-pair ebits");
    for p in scan(s, m_max)?.points {
        println!("{:>3}  {:>12.6}  {:>14.6}", p.m, p.eta, p.lower_bound_value);
    }
    let (m_star, eta_star) = optimal_sections(s, m_max)?;
    println!("best: m = {m_star} sections ({} repeaters), eta = {eta_star:.6}", m_star - 1);
    println!();
    Ok(())
}

fn main() -> entdist::Result<()> {
    print_scan(
        "watched amplitude damping, psi+, gamma = 1.5",
        &Scenario::new(ChannelKind::WatchedAmplitudeDamping, BellInput::PsiPlus, 1.5)?,
        8,
    )?;
    print_scan(
        "watched amplitude damping, phi+, gamma = 1.0",
        &Scenario::new(ChannelKind::WatchedAmplitudeDamping, BellInput::PhiPlus, 1.0)?,
        8,
    )?;
    print_scan(
        "bit-flip, psi+, gamma = 1.5",
        &Scenario::new(ChannelKind::BitFlip, BellInput::PsiPlus, 1.5)?,
        10,
    )?;
    Ok(())
}
