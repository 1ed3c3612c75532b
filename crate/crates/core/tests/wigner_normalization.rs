//! The Gaussian Wigner function integrates to one, checked by brute-force
//! quadrature over a box, before and after canonical transformations.

use nalgebra::Vector4;
use oscsym::catalog::{GeneratorCatalog, GeneratorName, Ordering};
use oscsym::phasespace::{transform_state, GaussianState, GroupElement};

/// Tensor trapezoid rule on `[-half, half]^4` about the mean.
fn integrate(s: &GaussianState, half: f64, points: usize) -> f64 {
    let h = 2.0 * half / (points - 1) as f64;
    let grid: Vec<f64> = (0..points).map(|k| -half + k as f64 * h).collect();
    let weight = |k: usize| if k == 0 || k == points - 1 { 0.5 } else { 1.0 };
    let mut total = 0.0;
    for (a, &x1) in grid.iter().enumerate() {
        for (b, &p1) in grid.iter().enumerate() {
            for (c, &x2) in grid.iter().enumerate() {
                for (d, &p2) in grid.iter().enumerate() {
                    let w = weight(a) * weight(b) * weight(c) * weight(d);
                    let z = s.mean() + Vector4::new(x1, p1, x2, p2);
                    total += w * s.wigner_eval(&z).unwrap();
                }
            }
        }
    }
    total * h.powi(4)
}

#[test]
fn vacuum_and_transformed_states_are_normalized() {
    let cat = GeneratorCatalog::consistent();
    let vac = GaussianState::vacuum(Ordering::Interleaved);
    let word = [
        (GeneratorName::K3, 0.4),
        (GeneratorName::L1, 1.2),
        (GeneratorName::Q2, -0.3),
    ]
    .iter()
    .fold(
        GroupElement::identity(Ordering::Interleaved),
        |acc, &(g, t)| {
            GroupElement::exp_generator(&cat, g, t, Ordering::Interleaved)
                .compose(&acc)
                .unwrap()
        },
    );
    let shifted = GaussianState::new(
        Vector4::new(0.3, -0.2, 0.1, 0.4),
        *vac.cov(),
        Ordering::Interleaved,
    )
    .unwrap();
    let states = [
        vac.clone(),
        GaussianState::coupled_ground_state(-0.4, 0.9),
        transform_state(&shifted, &word).unwrap(),
        transform_state(
            &vac,
            &GroupElement::exp_generator(&cat, GeneratorName::G3, 0.3, Ordering::Interleaved),
        )
        .unwrap(),
    ];
    for s in &states {
        let total = integrate(s, 7.0, 33);
        assert!((total - 1.0).abs() <= 1e-6, "{total}");
    }
}

#[test]
fn peak_value_matches_closed_form() {
    // (2 pi)^-2 det(cov)^-1/2 with det = 1/16 for a pure state
    let s = GaussianState::coupled_ground_state(0.7, -1.3);
    let peak = s.wigner_eval(s.mean()).unwrap();
    assert!((peak - 1.0 / std::f64::consts::PI.powi(2)).abs() < 1e-13);
}
