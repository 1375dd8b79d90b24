//! Builds the Scarf II tower from its ground state with the ladder operator
//! and prints the Schrödinger residual of each level.

use spectra::numerics::residual;
use spectra::{analyze, excited_state, PotentialSpec, ScarfSpec};

fn main() -> spectra::Result<()> {
    let spec = PotentialSpec::Scarf2(ScarfSpec::new(9.75, 6.0)?);
    let report = analyze(&spec)?;
    let xs: Vec<f64> = (0..=3000).map(|i| -15.0 + 0.01 * i as f64).collect();
    for branch in &report.branches {
        let s = &branch.solution;
        for level in &branch.levels {
            let psi = excited_state(&s.realization, s.m(), level.n, &xs)?;
            let r = residual(&psi, |x| spec.potential(x), level.energy)?;
            let at_zero = psi.value_near(0.0).unwrap_or_default();
            println!("eps = {:+} n = {}  E = {:.4}  psi(0) = {:.4}  residual {:.1e}", level.epsilon, level.n, level.energy.re, at_zero, r);
        }
    }
    Ok(())
}
