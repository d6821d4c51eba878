//! Propagates Bell pairs through each channel model and prints the
//! resulting two-qubit states.
//!
//! Run with: cargo run --example channel_states

use entdist::channels::{propagate_bell, watched_conditional, BellInput, ChannelKind};
use entdist::smallmat::ComplexMatrix;

fn print_matrix(m: &ComplexMatrix) {
    for i in 0..m.rows() {
        print!("   ");
        for j in 0..m.cols() {
            let z = m.get(i, j);
            if z.im.abs() < 1e-12 {
                print!(" {:>8.4}        ", z.re);
            } else {
                print!(" {:>8.4}{:+.4}i ", z.re, z.im);
            }
        }
        println!();
    }
}

fn main() -> entdist::Result<()> {
    let gamma = 0.7;
    let input = BellInput::PhiPlus;

    for kind in ChannelKind::ALL {
        if !kind.is_trace_preserving() {
            continue;
        }
        let rho = propagate_bell(kind, input, gamma)?;
        println!("{kind}  ({input}, gamma = {gamma})");
        print_matrix(rho.matrix());
        let eigs: Vec<String> = rho.eigenvalues().iter().map(|l| format!("{l:.4}")).collect();
        println!("   trace = {:.6}, spectrum = [{}]", rho.matrix().trace().re, eigs.join(", "));
        println!();
    }

    for input in BellInput::ALL {
        let out = watched_conditional(input, gamma)?;
        println!("watched-amplitude-damping  ({input}, gamma = {gamma}, no-decay record)");
        print_matrix(&out.conditional_state.transpose());
        println!("   survival probability = {:.6}", out.survival_probability);
        println!();
    }
    Ok(())
}
