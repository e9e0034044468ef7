//! Apply the four-body Hamiltonian by finite differences and compare
//! (H psi) / psi with the closed-form energy.

use wolfes4::coordinates::CartesianPoint;
use wolfes4::model::{Branch, Couplings, Model};
use wolfes4::oracle::{local_energy, LAPLACIAN_STEP};
use wolfes4::spectrum::QuantumNumbers;
use wolfes4::wavefunction::EigenState;

fn main() -> wolfes4::Result<()> {
    let model = Model::line(Couplings::new(2.0, 6.0, 0.0, 1.0), Branch::regular())?;
    let points = [
        [1.0, -0.5, 0.6, 0.3],
        [1.2, -0.4, 0.2, -0.7],
        [0.1, 0.9, -1.3, 0.4],
    ];

    for qn in [QuantumNumbers::GROUND, QuantumNumbers::new(1, 1, 1, 2)] {
        let s = EigenState::new(&model, qn)?;
        println!("{:?}  E = {}", qn.as_array(), s.energy());
        for p in points {
            let e = local_energy(&s, &CartesianPoint(p), LAPLACIAN_STEP)?;
            println!("    {p:?}  H psi / psi = {e:.9}");
        }
    }
    Ok(())
}
