use iso_euler::eos::{ModifiedTait, PolytropicCaseI};
use iso_euler::scaling::{
    classify, ks_determining_residual, shock_trajectory, ScalingExponents, SymmetryCase,
};
use proptest::prelude::*;

/// Nonzero constant bounded away from zero.
fn constant() -> impl Strategy<Value = f64> {
    prop_oneof![0.2f64..3.0, -3.0f64..-0.2]
}

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn table_identities(a1 in constant(), a2 in constant(), a3 in constant()) {
        let e = ScalingExponents::new(a1, a2, a3).unwrap();
        prop_assert_eq!(e.a4(), a2 - a1);
        prop_assert_eq!(e.a5(), a3 + 2.0 * a2 - 2.0 * a1);
        prop_assert_eq!(e.a6(), 2.0 * a2 - 2.0 * a1);
        let p = e.power_laws();
        let (beta, zeta, lambda, tau) = (p.beta.unwrap(), p.zeta.unwrap(), p.lambda.unwrap(), p.tau.unwrap());
        prop_assert!(close(beta, 1.0 - 1.0 / p.alpha, 1e-14));
        prop_assert!(close(tau, 2.0 * beta, 1e-14));
        prop_assert!(close(lambda, zeta + tau, 1e-14));
        prop_assert!(close(p.sigma, p.alpha - 1.0, 1e-14));
    }

    #[test]
    fn inverse_time_identity(
        a1 in constant(), a2 in constant(), r in 0.1f64..10.0, t in 0.1f64..10.0,
    ) {
        let p = ScalingExponents::new(a1, a2, 1.0).unwrap().power_laws();
        let xi = r / t.powf(p.alpha);
        let lhs = xi.powf(1.0 / p.alpha) * r.powf(p.beta.unwrap() - 1.0);
        prop_assert!((lhs * t - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn classification_is_scale_free(
        a1 in constant(), a2 in constant(), a3 in prop_oneof![Just(0.0), constant()],
        k in prop_oneof![0.01f64..100.0, -100.0f64..-0.01],
        tie in any::<bool>(),
    ) {
        let a2 = if tie { a1 } else { a2 };
        prop_assert_eq!(classify(a1, a2, a3).unwrap(), classify(k * a1, k * a2, k * a3).unwrap());
    }

    #[test]
    fn classification_is_total(a1 in constant(), a2 in constant(), a3 in prop_oneof![Just(0.0), constant()]) {
        let case = classify(a1, a2, a3).unwrap();
        let expected = match ((a1 - a2).abs() <= 1e-12 * a1.abs().max(a2.abs()), a3 == 0.0) {
            (true, true) => SymmetryCase::IV,
            (true, false) => SymmetryCase::II,
            (false, true) => SymmetryCase::III,
            (false, false) => SymmetryCase::I,
        };
        prop_assert_eq!(case, expected);
    }

    #[test]
    fn power_law_eos_satisfies_determining_equation(
        a1 in 0.2f64..3.0, gap in prop_oneof![0.05f64..2.0, -2.0f64..-0.05], psi in 1.05f64..20.0,
        amp in 0.1f64..10.0, rho in 1e-3f64..1e3,
    ) {
        // pick a3 so that the group's pressure exponent equals psi
        let a2 = a1 + gap;
        let e = ScalingExponents::new(a1, a2, 2.0 * gap / (psi - 1.0)).unwrap();
        prop_assert!((e.power_laws().psi.unwrap() - psi).abs() <= 1e-12 * psi);
        let eos = PolytropicCaseI::new(amp, psi).unwrap();
        let k = amp * rho.powf(psi);
        let residual = ks_determining_residual(&eos, &e, rho).unwrap();
        prop_assert!(residual.abs() <= 1e-8 * (e.a5() * k).abs(), "residual {residual}");
    }

    #[test]
    fn kinematic_group_admits_any_eos(rho in 1e-3f64..1e3) {
        let e = ScalingExponents::kinematic();
        prop_assert_eq!(ks_determining_residual(&ModifiedTait::water(), &e, rho).unwrap(), 0.0);
    }

    #[test]
    fn shock_position_is_integral_of_speed(a1 in 0.5f64..2.0, a2 in 0.5f64..2.0, t in 0.1f64..5.0) {
        let s = shock_trajectory(a1, a2, 0.3, t).unwrap();
        let h = 1e-5 * t;
        let fd = (shock_trajectory(a1, a2, 0.3, t + h).unwrap().position
            - shock_trajectory(a1, a2, 0.3, t - h).unwrap().position) / (2.0 * h);
        prop_assert!((fd - s.velocity).abs() <= 1e-7 * s.velocity.abs());
    }
}
