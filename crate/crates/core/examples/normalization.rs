//! Norms and overlaps of the lowest eigenstates under the hyperspherical
//! measure.

use wolfes4::model::{Branch, Couplings, Model};
use wolfes4::spectrum::{enumerate_levels, QuantumNumbers};
use wolfes4::wavefunction::{gram_matrix, norm_constant, EigenState, QuadratureOrders};

fn main() -> wolfes4::Result<()> {
    let model = Model::line(Couplings::new(2.0, 6.0, 0.0, 1.0), Branch::regular())?;
    let orders = QuadratureOrders::default();

    let ground = EigenState::new(&model, QuantumNumbers::GROUND)?;
    let n = norm_constant(&ground, orders)?;
    println!(
        "ground state norm {:.12e} (change on refinement {:.1e})",
        n.value, n.refinement_change
    );

    let table = enumerate_levels(&model.couplings, &model.exponents, 2, 1)?;
    let states = table
        .levels
        .iter()
        .flat_map(|l| &l.qn)
        .take(6)
        .map(|&qn| EigenState::new(&model, qn))
        .collect::<wolfes4::Result<Vec<_>>>()?;
    let g = gram_matrix(&states, orders)?;
    for row in &g {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>10.2e}")).collect();
        println!("{}", cells.join(" "));
    }
    Ok(())
}
