//! Lowest levels of the line model with their degeneracies.

use wolfes4::model::{Branch, Couplings, Model};
use wolfes4::spectrum::enumerate_levels;

fn main() -> wolfes4::Result<()> {
    let model = Model::line(Couplings::new(2.0, 6.0, 0.0, 1.0), Branch::regular())?;
    let table = enumerate_levels(&model.couplings, &model.exponents, 3, 1)?;

    println!("{:>10}  {:>8}  mult", "energy", "kappa");
    for level in &table.levels {
        println!(
            "{:>10.6}  {:>8.4}  {}",
            level.energy, level.kappa, level.multiplicity
        );
    }
    Ok(())
}
