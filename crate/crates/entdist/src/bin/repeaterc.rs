use std::process::exit;

fn main() {
    exit(entdist::cli::run(std::env::args_os()));
}
