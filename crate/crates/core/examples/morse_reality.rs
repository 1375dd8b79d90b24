//! The complexified Morse potential: real spectrum on the pseudo-Hermitian
//! line delta = gamma, complex levels off it.

use spectra::{analyze, morse_from_ab, MorseAbSpec, PotentialSpec};

fn main() -> spectra::Result<()> {
    for delta in [2.0, 2.5, 3.0, 3.5, 5.0] {
        let ab = MorseAbSpec::new(1.0, 1.0, 3.0, delta)?;
        let direct = morse_from_ab(&ab)?;
        let report = analyze(&PotentialSpec::MorseAb(ab))?;
        println!(
            "delta = {delta}: V1 = {:.3}, V2 = {:.3} -> {}",
            direct.v1(),
            direct.v2(),
            report.classification.name()
        );
        for branch in &report.branches {
            if let Some(r) = branch.solution.reality_condition_residual {
                println!("  reality residual {r:.1e}");
            }
            for level in &branch.levels {
                println!("  n = {}  E = {:.4}", level.n, level.energy);
            }
        }
    }
    Ok(())
}
