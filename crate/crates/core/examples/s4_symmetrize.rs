//! Bosonic projection over all 24 particle orderings. Some states survive,
//! others sum to zero.

use wolfes4::coordinates::CartesianPoint;
use wolfes4::model::{Branch, Couplings, Model};
use wolfes4::spectrum::QuantumNumbers;
use wolfes4::wavefunction::{symmetrize, EigenState};

fn main() -> wolfes4::Result<()> {
    let model = Model::line(Couplings::new(2.0, 6.0, 0.0, 1.0), Branch::regular())?;
    let x = CartesianPoint([1.0, -0.5, 0.6, 0.3]);

    for (m, n) in [(0, 0), (0, 1), (1, 0), (0, 2), (2, 0), (1, 2), (3, 0)] {
        let s = EigenState::new(&model, QuantumNumbers::new(0, 0, m, n))?;
        let sym = symmetrize(&s, &x)?;
        println!(
            "(m, n) = ({m}, {n}): sum {:+.6e}  |terms| {:.3e}  {}",
            sym.value,
            sym.abs_sum,
            if sym.cancelled { "cancels" } else { "survives" }
        );
    }
    Ok(())
}
