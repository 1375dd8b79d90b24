//! Machine-readable output: the same documents the CLI writes.

use spectra::{analyze, report, MorseSpec, PotentialSpec};

fn main() -> spectra::Result<()> {
    let spec = PotentialSpec::Morse(MorseSpec::new(1.0, 1.0, 3.0, 5.0)?);
    let r = analyze(&spec)?;
    print!("{}", report::to_json_string(&report::report_json(&r)));
    print!("{}", report::report_csv(&r));
    Ok(())
}
