//! Checks closed-form levels against the finite-difference discretization.
//!
//! Usage: `cargo run --release --example oracle_check -- [n_points]`

use spectra::numerics::{default_domain, verify_levels, Grid, DEFAULT_MATCH_TOL};
use spectra::{analyze, PotentialSpec, ScarfSpec};

fn main() -> spectra::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1000);
    let spec = PotentialSpec::Scarf2(ScarfSpec::new(0.0, 5.0)?);
    let levels = analyze(&spec)?.levels_vec();
    let (a, b) = default_domain(&spec, &levels);
    let grid = Grid::new(a, b, n)?;
    let report = verify_levels(&spec, &levels, &grid, DEFAULT_MATCH_TOL)?;
    println!("grid [{a:.2}, {b:.2}] with {n} interior points");
    for l in &report.levels {
        println!(
            "eps = {:+}  closed {:.8}  numeric {:.8}  error {:.1e}  edge decay {:.1e}  matched {}",
            l.epsilon,
            l.closed,
            l.numeric.unwrap_or_default(),
            l.abs_error,
            l.boundary_decay,
            l.matched
        );
    }
    println!("all matched: {}", report.all_matched());
    Ok(())
}
