//! The model in D dimensions: channel momenta raise the effective
//! couplings, and D = 3 with all channels at zero is the line model.

use wolfes4::model::{exponents_ddim, exponents_line, Branch, Channels, Couplings};
use wolfes4::spectrum::{chain, QuantumNumbers};

fn main() -> wolfes4::Result<()> {
    let c = Couplings::new(2.0, 6.0, 0.0, 1.0);
    let ground = QuantumNumbers::GROUND;

    let line = chain(&c, &exponents_line(&c, &Branch::regular())?, ground)?;
    println!("line          E0 = {}", line.energy);

    for dim in 2..=5 {
        for ch in [Channels::default(), Channels::new(0, 1, 1, 1)] {
            let e = exponents_ddim(&c, dim, ch)?;
            println!("D = {dim} {ch:?}  E0 = {}", chain(&c, &e, ground)?.energy);
        }
    }
    Ok(())
}
