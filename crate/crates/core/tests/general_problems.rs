use biharm_core::regression::close;
use biharm_core::*;
use proptest::prelude::*;

const METHODS: [Method; 4] = [
    Method::Adm1d,
    Method::Ladm1d,
    Method::AdmRadial,
    Method::LadmRadial,
];

fn general(geometry: Geometry, alpha: f64, omega: f64, b2: f64, y: [f64; 4]) -> Problem {
    let mut p = Problem::new(geometry, "0.5*y^2+-0.25*y^3".parse().unwrap());
    p.alpha = alpha;
    p.omega = omega;
    p.b2 = b2;
    p.forcing = parse_forcing("0.3-0.2*x+0.1*x^2").unwrap();
    p.y0 = y[0];
    p.y2 = y[2];
    if geometry == Geometry::Line {
        p.y1 = y[1];
        p.y3 = y[3];
    }
    p
}

fn assert_components_match(method: Method, p: &Problem, terms: usize, order: usize) {
    let e = method.solve(p, terms, order).unwrap();
    let oracle = component_oracle(method, p, terms, order).unwrap();
    assert_eq!(oracle.len(), terms + 1);
    for (k, (got, want)) in e.components.iter().zip(&oracle).enumerate() {
        let bad = first_mismatch_scaled(got, want, &got.abs(), order, 1e-10);
        assert_eq!(bad, None, "{method} component {k}: {got:?} vs {want:?}");
    }
}

#[test]
fn components_match_oracle_for_general_equation() {
    for method in METHODS {
        let p = general(method.geometry(), 0.7, -1.3, 0.4, [0.9, -0.6, 0.35, 1.1]);
        assert_components_match(method, &p, 3, 30);
    }
}

#[test]
fn degenerate_operator_parameters() {
    for method in METHODS {
        let p = general(method.geometry(), 0.0, 0.0, 0.0, [1.0, 0.5, -0.5, 0.25]);
        assert_components_match(method, &p, 2, 24);
    }
}

#[test]
fn adm_and_ladm_agree_on_window() {
    for geometry in [Geometry::Line, Geometry::Radial3d] {
        let p = general(geometry, -0.4, 1.0, 0.2, [0.8, 0.3, -0.7, 0.1]);
        let adm = Method::for_geometry(geometry, false)
            .solve(&p, 3, 30)
            .unwrap();
        let ladm = Method::for_geometry(geometry, true)
            .solve(&p, 3, 30)
            .unwrap();
        let oracle = taylor_oracle(&p, 30).unwrap();
        for k in 0..=3 {
            // the ADM term alpha y_k'' only raises the degree by two per step
            let top = 2 * k + 1;
            let (a, b) = (adm.partial_sum(k).unwrap(), ladm.partial_sum(k).unwrap());
            let scale = &adm.magnitude(k).unwrap() + &ladm.magnitude(k).unwrap();
            assert_eq!(
                first_mismatch_scaled(&a, &b, &scale, top, 1e-9),
                None,
                "{geometry} K={k}"
            );
            assert_eq!(first_mismatch_scaled(&a, &oracle, &scale, top, 1e-9), None);
        }
    }
}

#[test]
fn ladm_seed_solves_linear_equation() {
    for geometry in [Geometry::Line, Geometry::Radial3d] {
        let mut p = general(geometry, 0.6, 2.0, -0.3, [0.5, 0.2, 0.9, -0.4]);
        p.g = NonlinearitySpec::monomial(0.0, 2).unwrap();
        let e = Method::for_geometry(geometry, true)
            .solve(&p, 0, 30)
            .unwrap();
        let y = &e.components[0];
        let floor = residual_floor_degree(&p, y, 1e-10).unwrap();
        assert_eq!(floor, None, "{geometry}");
    }
}

#[test]
fn fixed_point_of_standing_wave() {
    // the ADM seed is already the constant; LADM seeds are not
    for method in [Method::Adm1d, Method::AdmRadial] {
        let p = Problem::standing_wave(method.geometry(), 1, 1.0, 0.0);
        let e = method.solve(&p, 3, DEFAULT_ORDER).unwrap();
        let sum = e.sum();
        assert!(close(sum.coeff(0), 1.0, 1e-15));
        let table = integrate_numeric(&p, 2.0, 1e-2).unwrap();
        assert!(compare(&sum, &table).max_abs_error < 1e-12, "{method}");
    }
}

#[test]
fn numeric_integration_tracks_oracle_in_both_geometries() {
    for geometry in [Geometry::Line, Geometry::Radial3d] {
        let p = general(geometry, 0.5, 1.0, 0.1, [0.3, 0.1, -0.2, 0.05]);
        let series = taylor_oracle(&p, 60).unwrap();
        let table = integrate_numeric(&p, 1.5, 1e-3).unwrap();
        let report = compare(&series, &table);
        assert!(
            report.max_abs_error < 1e-10,
            "{geometry}: {}",
            report.max_abs_error
        );
    }
}

#[test]
fn irregular_radial_data_is_accepted_on_request() {
    let mut p = Problem::standing_wave(Geometry::Radial3d, 1, 0.5, 0.2);
    p.y1 = 0.3;
    p.alpha = 0.4;
    for method in [Method::AdmRadial, Method::LadmRadial] {
        assert!(matches!(
            method.solve(&p, 1, 12),
            Err(Error::RegularityViolation(_))
        ));
    }
    p.allow_irregular = true;
    for method in [Method::AdmRadial, Method::LadmRadial] {
        assert_components_match(method, &p, 2, 20);
    }
    let oracle = taylor_oracle_radial(&p, 10).unwrap();
    assert!(close(oracle.coeff(1), 0.3, 1e-15));
    assert!(close(oracle.coeff(3), -0.4 * 0.3 / 12.0, 1e-15));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_problems_match_component_oracle(
        m in 0usize..4,
        alpha in -2.0f64..2.0,
        omega in -2.0f64..2.0,
        b2 in -1.0f64..1.0,
        y in prop::array::uniform4(-1.5f64..1.5),
    ) {
        let method = METHODS[m];
        let p = general(method.geometry(), alpha, omega, b2, y);
        assert_components_match(method, &p, 3, 24);
    }
}
