//! Which couplings and branches admit the closed-form solution.

use wolfes4::model::{validate_domain, Branch, Couplings};

fn main() {
    let cases = [
        (
            "regular",
            Couplings::new(2.0, 6.0, 0.0, 1.0),
            Branch::regular(),
        ),
        (
            "regular, lambda = 0",
            Couplings::new(0.0, 6.0, 0.0, 1.0),
            Branch::regular(),
        ),
        (
            "regular, lambda = -0.3",
            Couplings::new(-0.3, 6.0, 0.0, 1.0),
            Branch::regular(),
        ),
        (
            "irregular, lambda = 0.5",
            Couplings::new(0.5, 1.0, 0.0, 1.0),
            Branch::irregular(),
        ),
        (
            "irregular, lambda = 0.8",
            Couplings::new(0.8, 1.0, 0.0, 1.0),
            Branch::irregular(),
        ),
        (
            "regular, beta = -200",
            Couplings::new(2.0, 6.0, -200.0, 1.0),
            Branch::regular(),
        ),
    ];
    for (label, c, br) in cases {
        let report = validate_domain(&c, &br);
        println!("{label}: {}", if report.ok { "ok" } else { "rejected" });
        for f in report.violations.iter().chain(&report.warnings) {
            println!("    {f}");
        }
    }
}
