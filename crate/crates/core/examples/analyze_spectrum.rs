//! Closed-form levels and branch data for the Scarf II potential in both phases.

use spectra::{analyze, PotentialSpec, ScarfSpec};

fn main() -> spectra::Result<()> {
    for (v1, v2) in [(9.75, 6.0), (0.0, 5.0)] {
        let spec = PotentialSpec::Scarf2(ScarfSpec::new(v1, v2)?);
        let report = analyze(&spec)?;
        println!("V1 = {v1}, V2 = {v2}: {}", report.classification.name());
        for branch in &report.branches {
            let s = &branch.solution;
            println!("  eps = {:+}  m = {:.6}  b = {:.6}  {:?}", s.epsilon.as_i8(), s.m(), s.realization.b(), s.branch_kind);
            for level in &branch.levels {
                println!("    n = {}  E = {:.6}", level.n, level.energy);
            }
        }
    }
    Ok(())
}
