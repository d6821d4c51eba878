//! Yield curves for the watched amplitude damping channel and the
//! channel lengths where adding a repeater starts to pay off.
//!
//! Run with: cargo run --example watched_crossover

use entdist::channels::{BellInput, ChannelKind};
use entdist::repeater::{crossover_gamma, linspace, scan_yield, Scenario};

fn main() -> entdist::Result<()> {
    let s = Scenario::new(ChannelKind::WatchedAmplitudeDamping, BellInput::PsiPlus, 0.0)?;

    println!("yield per source, psi+ through the watched channel");
    println!("{:>6}  {:>12}  {:>12}  {:>12}", "gamma", "m=1", "m=2", "m=3");
    let grid = linspace(0.0, 3.0, 13)?;
    let table = scan_yield(&s, &[1, 2, 3], &grid)?;
    for (gamma, yields) in &table.rows {
        println!(
            "{gamma:>6.2}  {:>12.6}  {:>12.6}  {:>12.6}",
            yields[0], yields[1], yields[2]
        );
    }

    let g12 = crossover_gamma(&s, 1, 2, (0.01, 10.0))?;
    let g23 = crossover_gamma(&s, 2, 3, (0.01, 10.0))?;
    println!();
    println!("one repeater beats none beyond   gamma = {g12:.9}  (ln 2 = {:.9})", std::f64::consts::LN_2);
    println!("two repeaters beat one beyond    gamma = {g23:.9}  (3 ln 3/2 = {:.9})", 3.0 * 1.5f64.ln());
    Ok(())
}
