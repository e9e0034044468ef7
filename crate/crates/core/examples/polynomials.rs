//! Recurrence values of the three polynomial families next to the exact
//! series.

use wolfes4::polynomials::{series::series_oracle, PolyFamily};

fn main() -> wolfes4::Result<()> {
    let cases = [
        (PolyFamily::gegenbauer(6, 1.5)?, 0.3),
        (PolyFamily::jacobi(12, 2.5, -0.5)?, -0.7),
        (PolyFamily::laguerre(20, 4.0)?, 9.5),
    ];
    for (family, x) in cases {
        let r = family.eval(x)?;
        let s = series_oracle(&family, x)?;
        println!("{family:?} at {x}: {r:.15e} (series {s:.15e})");
    }
    Ok(())
}
