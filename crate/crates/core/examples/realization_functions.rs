//! The sl(2,C) realization functions F, G for each class, and the potential
//! they induce compared with the closed-form family.

use num_complex::Complex64;
use spectra::{potential_closed_form, potential_from_algebra, solve, PotentialClass, PotentialSpec, RealizationParams, ScarfSpec};

fn main() -> spectra::Result<()> {
    let b = Complex64::new(0.5, 1.0);
    for class in [PotentialClass::I, PotentialClass::II, PotentialClass::IIIUpper, PotentialClass::IIILower] {
        let r = RealizationParams::new(class, 0.0, 0.3, b)?;
        println!("class {:<9} F(0.5) = {:.5}  G(0.5) = {:.5}", class.label(), r.f(0.5)?, r.g(0.5)?);
    }

    let spec = PotentialSpec::Scarf2(ScarfSpec::new(9.75, 6.0)?);
    for s in solve(&spec)? {
        let worst = (-100..=100)
            .map(|i| {
                let x = 0.1 * i as f64;
                let alg = potential_from_algebra(&s.realization, s.m(), x)?;
                Ok((alg - potential_closed_form(&spec, x)?).norm())
            })
            .collect::<spectra::Result<Vec<f64>>>()?
            .into_iter()
            .fold(0.0, f64::max);
        println!("eps = {:+}: max |V_m - V| on [-10, 10] = {worst:.1e}", s.epsilon.as_i8());
    }
    Ok(())
}
