//! The irregular root at the Wolfes wall lowers every level.

use wolfes4::model::{exponents_line, Branch, Couplings};
use wolfes4::spectrum::{closed_form_energy, energy_irregular, QuantumNumbers};

fn main() -> wolfes4::Result<()> {
    let c = Couplings::new(0.5, 1.0, 0.0, 1.0);
    let regular = exponents_line(&c, &Branch::regular())?;
    let irregular = exponents_line(&c, &Branch::irregular())?;
    println!("a: regular {:.6}, irregular {:.6}", regular.a, irregular.a);

    for n in 0..4 {
        let qn = QuantumNumbers::new(0, 0, 0, n);
        println!(
            "n = {n}: E = {:.6}  E< = {:.6}",
            closed_form_energy(&c, &regular, qn)?,
            energy_irregular(&c, &irregular, qn)?
        );
    }
    Ok(())
}
