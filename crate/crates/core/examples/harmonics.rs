//! Unnormalized hyperspherical harmonics in a few dimensions.

use wolfes4::wavefunction::hyperspherical_harmonic;

fn main() -> wolfes4::Result<()> {
    let y = hyperspherical_harmonic(3, 2, &[1], &[0.5], 0.3, false)?;
    println!("D=3 l=2 m=1         {:.6} {:+.6}i", y.re, y.im);

    let y = hyperspherical_harmonic(4, 3, &[2, 1], &[0.4, 1.1], 0.7, false)?;
    println!("D=4 l=3 m=(2,1)     {:.6} {:+.6}i", y.re, y.im);

    let y = hyperspherical_harmonic(5, 2, &[2, 1, 1], &[0.4, 0.9, 1.2], -0.2, true)?;
    println!("D=5 l=2 m=(2,1,1)*  {:.6} {:+.6}i", y.re, y.im);
    Ok(())
}
