//! Sweeps V2 through the merge point V1 + 1/4 and prints where the real
//! series turn into conjugate pairs.

use spectra::{scan, PotentialSpec, ScarfSpec, SweepParameter};

fn main() -> spectra::Result<()> {
    let base = PotentialSpec::Scarf2(ScarfSpec::new(1.0, 0.1)?);
    let rows = scan(&base, SweepParameter::V2, 0.1, 2.5, 0.05)?;
    println!("{:>8} {:>5} {:>5}  classification", "V2", "real", "pairs");
    for row in &rows {
        println!("{:>8.2} {:>5} {:>5}  {}", row.value, row.real_level_count, row.complex_pair_count, row.classification.name());
    }
    Ok(())
}
