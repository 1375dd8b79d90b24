//! Generalized Pöschl-Teller on two shifted contours: same closed form, and
//! oracle eigenvalues that do not depend on the shift.

use std::f64::consts::PI;

use spectra::numerics::{default_domain, verify_levels, Grid, DEFAULT_MATCH_TOL};
use spectra::{analyze, PoschlTellerSpec, PotentialSpec};

fn main() -> spectra::Result<()> {
    for gamma in [PI / 8.0, PI / 16.0] {
        let spec = PotentialSpec::PoschlTeller(PoschlTellerSpec::new(9.75, 6.0, 0.0, gamma)?);
        let report = analyze(&spec)?;
        let levels = report.levels_vec();
        let (a, b) = default_domain(&spec, &levels);
        let matches = verify_levels(&spec, &levels, &Grid::new(a, b, 2000)?, DEFAULT_MATCH_TOL)?;
        println!("gamma = {gamma:.5}  PT symmetric: {}", report.pt_symmetric);
        for l in &matches.levels {
            println!("  E = {:+.4}  numeric {:.8}  error {:.1e}", l.closed.re, l.numeric.unwrap_or_default(), l.abs_error);
        }
    }
    Ok(())
}
