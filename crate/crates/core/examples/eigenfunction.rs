//! Evaluate one eigenfunction at a Cartesian configuration, both through
//! the hyperspherical product and the Cartesian closed form.

use wolfes4::coordinates::{to_collective, to_hyperspherical, AngleRange, CartesianPoint};
use wolfes4::model::{Branch, Couplings, Model};
use wolfes4::spectrum::QuantumNumbers;
use wolfes4::wavefunction::{psi_cartesian, psi_hyperspherical, EigenState};

fn main() -> wolfes4::Result<()> {
    let model = Model::line(Couplings::new(2.0, 6.0, 0.0, 1.0), Branch::regular())?;
    let state = EigenState::new(&model, QuantumNumbers::new(1, 0, 1, 2))?;

    let x = CartesianPoint([1.0, -0.5, 0.6, 0.3]);
    let h = to_hyperspherical(&to_collective(&x), AngleRange::Full);
    let v = psi_hyperspherical(&state, &h);

    println!("E = {}", state.energy());
    println!(
        "r = {:.6}  alpha = {:.6}  theta = {:.6}  phi = {:.6}",
        h.r, h.alpha, h.theta, h.phi
    );
    println!(
        "factors: R {:.6e}  A {:.6e}  T {:.6e}  P {:.6e}",
        v.radial, v.alpha, v.theta, v.phi
    );
    println!("psi (hyperspherical) = {:.12e}", v.psi);
    // the Cartesian form carries its own overall constant
    println!("psi (cartesian)      = {:.12e}", psi_cartesian(&state, &x)?);
    Ok(())
}
