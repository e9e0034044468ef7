use proptest::prelude::*;

use wolfes4::coordinates::{from_collective, to_collective, CartesianPoint};
use wolfes4::model::{
    exponents_ddim, exponents_line, validate_domain, Branch, Channels, Couplings, Parity,
};
use wolfes4::polynomials::{gegenbauer, jacobi, laguerre, series::series_oracle, PolyFamily};
use wolfes4::quadrature::GaussRule;
use wolfes4::spectrum::{chain, closed_form_energy, QuantumNumbers};

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1.0)
}

fn regular_couplings() -> impl Strategy<Value = Couplings> {
    (-0.24..8.0f64, -0.24..8.0f64, -5.0..20.0f64, 0.2..4.0f64)
        .prop_map(|(l, m, b, w)| Couplings::new(l, m, b, w))
        .prop_filter("valid regular domain", |c| {
            validate_domain(c, &Branch::regular()).ok
        })
}

fn quantum_numbers() -> impl Strategy<Value = QuantumNumbers> {
    (0..6u32, 0..6u32, 0..6u32, 0..6u32).prop_map(|(k, l, m, n)| QuantumNumbers::new(k, l, m, n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn recurrence_matches_series(
        degree in 0..=20u32,
        p in -0.45..6.0f64,
        q in -0.95..6.0f64,
        x in -1.0..1.0f64,
        y in 0.0..10.0f64,
    ) {
        for (family, at) in [
            (PolyFamily::gegenbauer(degree, p).unwrap(), x),
            (PolyFamily::jacobi(degree, p, q).unwrap(), x),
            (PolyFamily::laguerre(degree, q).unwrap(), y),
        ] {
            let s = series_oracle(&family, at).unwrap();
            prop_assert!(rel(family.eval(at).unwrap(), s) <= 1e-10, "{family:?} at {at}");
        }
    }

    #[test]
    fn gegenbauer_parity(n in 0..=20u32, alpha in -0.45..6.0f64, x in -1.0..1.0f64) {
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        let (a, b) = (gegenbauer(n, alpha, -x).unwrap(), gegenbauer(n, alpha, x).unwrap());
        prop_assert!((a - sign * b).abs() <= 1e-12 * b.abs().max(1.0));
    }

    #[test]
    fn collective_map_is_an_isometric_involution(x in prop::array::uniform4(-50.0..50.0f64)) {
        let p = CartesianPoint(x);
        let q = to_collective(&p);
        let back = from_collective(&q);
        let twice = to_collective(&CartesianPoint(q.as_array()));
        let scale = p.norm_sq().sqrt().max(1e-300);
        for i in 0..4 {
            prop_assert!((back.0[i] - x[i]).abs() <= 1e-14 * scale);
            prop_assert!((twice.as_array()[i] - x[i]).abs() <= 1e-14 * scale);
        }
        prop_assert!((q.norm_sq() - p.norm_sq()).abs() <= 1e-14 * p.norm_sq());
    }

    #[test]
    fn regular_exponents_are_nonnegative(c in regular_couplings()) {
        let e = exponents_line(&c, &Branch::regular()).unwrap();
        prop_assert_eq!(e.a, e.c);
        prop_assert!(e.a >= 0.0 && e.c >= 0.0 && e.d >= 0.0);
        prop_assert!(e.a.is_finite() && e.d.is_finite());
    }

    #[test]
    fn ddim_at_three_reduces_to_line(c in regular_couplings(), qn in quantum_numbers()) {
        let line = exponents_line(&c, &Branch::regular()).unwrap();
        let d3 = exponents_ddim(&c, 3, Channels::default()).unwrap();
        for (x, y) in [(line.a, d3.a), (line.c, d3.c), (line.d, d3.d)] {
            prop_assert!((x - y).abs() <= 1e-15 * x.abs().max(1.0));
        }
        let a = chain(&c, &line, qn).unwrap().energy;
        let b = chain(&c, &d3, qn).unwrap().energy;
        prop_assert!((a - b).abs() <= 1e-13 * a);
    }

    #[test]
    fn validation_is_monotone_in_beta(
        lambda in -0.3..2.0f64,
        mu in -0.3..2.0f64,
        beta in -20.0..5.0f64,
        raise in 0.0..30.0f64,
        irregular in any::<bool>(),
    ) {
        let br = if irregular { Branch::irregular() } else { Branch::regular() };
        let low = validate_domain(&Couplings::new(lambda, mu, beta, 1.0), &br);
        let high = validate_domain(&Couplings::new(lambda, mu, beta + raise, 1.0), &br);
        prop_assert!(!low.ok || high.ok);
        // warnings never decide the outcome
        prop_assert_eq!(low.ok, low.violations.is_empty());
    }

    #[test]
    fn cascade_matches_closed_form(c in regular_couplings(), qn in quantum_numbers()) {
        let e = exponents_line(&c, &Branch::regular()).unwrap();
        let ch = chain(&c, &e, qn).unwrap();
        let closed = closed_form_energy(&c, &e, qn).unwrap();
        prop_assert!((ch.energy - closed).abs() <= 1e-13 * closed);
        prop_assert!(ch.kappa > 0.0);
        prop_assert!(ch.energy > 2.0 * c.omega);
    }

    #[test]
    fn energy_depends_on_angular_sum_only(
        c in regular_couplings(),
        k in 0..4u32,
        (l, m, n) in (0..5u32, 0..5u32, 0..5u32),
    ) {
        let e = exponents_line(&c, &Branch::regular()).unwrap();
        let total = l + m + n;
        let reference = chain(&c, &e, QuantumNumbers::new(k, total, 0, 0)).unwrap().energy;
        let energy = chain(&c, &e, QuantumNumbers::new(k, l, m, n)).unwrap().energy;
        prop_assert!((energy - reference).abs() <= 1e-13 * reference);
    }

    #[test]
    fn antisymmetric_flags_do_not_change_validity(lambda in 0.01..3.0f64, mu in 0.01..3.0f64) {
        let c = Couplings::new(lambda, mu, 0.0, 1.0);
        let flipped = Branch::regular().with_parities(
            Parity::Antisymmetric,
            Parity::Antisymmetric,
            Parity::Antisymmetric,
        );
        prop_assert_eq!(validate_domain(&c, &Branch::regular()).ok, validate_domain(&c, &flipped).ok);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn polynomials_are_orthogonal_under_gauss_rules(p in -0.45..4.0f64, q in -0.9..4.0f64) {
        const N: u32 = 8;
        let check = |gram: &dyn Fn(u32, u32) -> f64| -> Result<(), TestCaseError> {
            for i in 0..=N {
                for j in 0..i {
                    let scale = (gram(i, i) * gram(j, j)).sqrt();
                    prop_assert!(gram(i, j).abs() <= 1e-9 * scale, "({i}, {j})");
                }
            }
            Ok(())
        };
        let geg = GaussRule::jacobi(16, p - 0.5, p - 0.5).unwrap();
        check(&|i, j| geg.integrate(|x| gegenbauer(i, p, x).unwrap() * gegenbauer(j, p, x).unwrap()))?;
        let jac = GaussRule::jacobi(16, p, q).unwrap();
        check(&|i, j| jac.integrate(|x| jacobi(i, p, q, x).unwrap() * jacobi(j, p, q, x).unwrap()))?;
        let lag = GaussRule::laguerre(16, q).unwrap();
        check(&|i, j| lag.integrate(|x| laguerre(i, q, x).unwrap() * laguerre(j, q, x).unwrap()))?;
    }
}
