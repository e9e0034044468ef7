//! Run the finite-difference oracle against the closed forms and print a
//! per-equation summary.

use std::collections::BTreeMap;
use wolfes4::model::{Branch, Couplings};
use wolfes4::oracle::verify_all;

fn main() -> wolfes4::Result<()> {
    let report = verify_all(Couplings::new(0.5, 0.25, 0.0, 1.0), Branch::regular(), 1)?;

    let mut worst: BTreeMap<String, (usize, f64)> = BTreeMap::new();
    for c in &report.checks {
        let entry = worst.entry(format!("{:?}", c.kind)).or_default();
        entry.0 += 1;
        entry.1 = entry.1.max(c.error);
    }
    for (kind, (n, err)) in &worst {
        println!("{kind:<12} {n:>4} checks, worst error {err:.2e}");
    }
    println!("passed: {} ({} failures)", report.passed, report.failures);
    Ok(())
}
