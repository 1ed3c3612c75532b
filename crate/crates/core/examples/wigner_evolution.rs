// Squeeze the vacuum with a canonical and a noncanonical generator and
// watch the symplectic eigenvalues.

use nalgebra::Vector4;
use oscsym::catalog::{GeneratorCatalog, GeneratorName, Ordering};
use oscsym::phasespace::{transform_state, GaussianState, GroupElement};

pub fn run_example() -> [(f64, f64); 3] {
    let cat = GeneratorCatalog::consistent();
    let vac = GaussianState::vacuum(Ordering::Interleaved);
    let coupled = GaussianState::coupled_ground_state(-0.4, 0.9);
    let squeeze = |g, s: &GaussianState| {
        let m = GroupElement::exp_generator(&cat, g, 0.3, Ordering::Interleaved);
        transform_state(s, &m).expect("same ordering")
    };
    let states = [
        ("coupled ground state", coupled.clone()),
        ("exp(0.3i Q1) vacuum", squeeze(GeneratorName::Q1, &vac)),
        ("exp(0.3i G3) vacuum", squeeze(GeneratorName::G3, &vac)),
    ];
    let mut out = [(0.0, 0.0); 3];
    for (k, (label, s)) in states.iter().enumerate() {
        let (n1, n2) = s.symplectic_eigenvalues();
        let peak = s.wigner_eval(&Vector4::zeros()).expect("nonsingular");
        println!(
            "{label:<22} nu = ({n1:.6}, {n2:.6})  W(0) = {peak:.6}  {}",
            if s.uncertainty_ok() {
                "admissible"
            } else {
                "below the uncertainty bound"
            }
        );
        out[k] = (n1, n2);
    }
    out
}

fn main() {
    run_example();
}
