use legendre_nu::verify::{self, GridSpec, IdentityId, Spacing, Tolerances};
use legendre_nu::*;
use proptest::prelude::*;

#[test]
fn reports_are_bit_identical_across_runs() {
    let t = Tolerances::new();
    let a = verify::run_extended::<f64>(&t);
    let b = verify::run_extended::<f64>(&t);
    assert_eq!(a.len(), 9);
    for (x, y) in a.iter().zip(&b) {
        assert_eq!(x.identity_id, y.identity_id);
        assert_eq!(x.max_residual.to_bits(), y.max_residual.to_bits());
        assert_eq!(x.mean_residual.to_bits(), y.mean_residual.to_bits());
        assert_eq!(x.argmax_location.to_bits(), y.argmax_location.to_bits());
    }
}

#[test]
fn integer_degrees_are_fd_limited() {
    let grid = GridSpec::uniform(-0.9, 0.9, 61).unwrap();
    for n in 0..=3 {
        let r = verify::check_ode_base(Degree::new(n as f64).unwrap(), &grid, 1e-6).unwrap();
        assert!(r.passed, "ν = {n}: {:e}", r.max_residual);
    }
}

#[test]
fn chebyshev_grids_probe_endpoints() {
    let grid = GridSpec::new(-0.95, 0.95, 41, Spacing::Chebyshev).unwrap();
    assert!(verify::check_ode_deriv3(&grid, 1e-6).unwrap().passed);
    let grid = GridSpec::new(0.001, 0.999, 41, Spacing::Chebyshev).unwrap();
    assert!(verify::check_euler_reflection(&grid, 1e-12).unwrap().passed);
}

#[test]
fn quadrature_identities_stable_under_refinement() {
    let tol = 1e-9;
    for count in [6, 11, 21] {
        let coarse = GridSpec::uniform(0.05, 0.95, count).unwrap();
        let fine = GridSpec::uniform(0.05, 0.95, 2 * count).unwrap();
        for check in [verify::check_dilog_antiderivative::<f64>, verify::check_li2_over_1mz_integral::<f64>] {
            let a = check(&coarse, tol).unwrap();
            let b = check(&fine, tol).unwrap();
            assert!(
                b.max_residual <= 2.0 * a.max_residual,
                "{}: {:e} -> {:e}",
                a.identity_id,
                a.max_residual,
                b.max_residual
            );
        }
    }
}

#[test]
fn overall_pass_requires_every_report() {
    let t = Tolerances::new().with(IdentityId::OdeDeriv3, 1e-12).unwrap();
    let reports = verify::run_all::<f64>(&t);
    assert_eq!(reports.len(), 6);
    assert!(!verify::all_passed(&reports));
    assert_eq!(reports.iter().filter(|r| !r.passed).count(), 1);
}

#[test]
fn concurrent_checks_agree() {
    let serial = verify::run_all::<f64>(&Tolerances::new());
    let handles: Vec<_> = IdentityId::CORE
        .iter()
        .map(|&id| std::thread::spawn(move || verify::run_one::<f64>(id, &Tolerances::new()).unwrap()))
        .collect();
    let parallel: Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
    assert_eq!(serial, parallel);
}

#[test]
fn single_precision_aliases() {
    let z = Argument32::new(0.25).unwrap();
    let nu = Degree32::new(0.1).unwrap();
    let p: EvalResult32 = legendre_p(nu, z, 1e-6).unwrap();
    let m = maclaurin_p(nu, z, MaclaurinTruncation::new(3).unwrap());
    assert!((p.value - m).abs() < 1e-5);
    let li = dilog(PolylogArg32::new(0.75).unwrap());
    assert!((li.value - 0.978_469_4).abs() < 1e-6);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn closed_forms_match_oracle(x in -0.9f64..=1.0) {
        let a = Argument::new(x).unwrap();
        let o2 = nu_derivative_oracle(a, 2, 0.02).unwrap();
        let o3 = nu_derivative_oracle(a, 3, 0.02).unwrap();
        let o1 = nu_derivative_oracle(a, 1, 0.02).unwrap();
        prop_assert!((o1.value - dp_dnu0(a)).abs() <= 1e-9);
        prop_assert!((o2.value - d2p_dnu2_0(a)).abs() <= 1e-7);
        prop_assert!((o3.value - d3p_dnu3_0(a)).abs() <= 1e-5);
    }

    #[test]
    fn series_and_quadrature_agree(x in 0.0f64..=0.99) {
        let arg = PolylogArg::new(x).unwrap();
        let q = dilog_integral_oracle(arg, 1e-12).unwrap();
        prop_assert!(q.converged);
        prop_assert!((q.value - dilog(arg).value).abs() <= 1e-11);
    }
}
