//! Produces the same JSON run files as the `cqt` binary, from library code.
//!
//!     cargo run --example run_files -- /tmp/teleport.json

use std::fs::File;
use std::io::{self, BufWriter};

use cqt::cli::{cmd_teleport, write_run_file, TeleportConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let file = cmd_teleport(&TeleportConfig { trials: 8, seed: 42 })?;
    match std::env::args().nth(1) {
        Some(path) => write_run_file(BufWriter::new(File::create(&path)?), &file)?,
        None => write_run_file(io::stdout().lock(), &file)?,
    }
    eprintln!("mean fidelity {:.17}, {} failures", file.summary.mean_fidelity, file.summary.failures);
    Ok(())
}
