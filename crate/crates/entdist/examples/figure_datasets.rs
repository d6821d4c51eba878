//! Regenerates every figure-preset dataset into target/figures/.
//! The same files are produced by `repeaterc figure <name>`.
//!
//! Run with: cargo run --example figure_datasets

use std::fs;
use std::path::Path;

use entdist::cli::{figure_files, FigureName};

fn main() -> std::io::Result<()> {
    let dir = Path::new("target/figures");
    fs::create_dir_all(dir)?;
    for name in FigureName::ALL {
        for (file, content) in figure_files(name).expect("preset renders") {
            let path = dir.join(&file);
            fs::write(&path, &content)?;
            println!("{}  ({} rows)", path.display(), content.lines().count() - 1);
        }
    }
    Ok(())
}
