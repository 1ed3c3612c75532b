// Exponentiate every generator and test `M J M^T = J`.

use oscsym::catalog::{GeneratorCatalog, GeneratorName, Ordering};
use oscsym::phasespace::{canonical_deviation, GroupElement, SymplecticForm};

pub fn run_example() -> Vec<GeneratorName> {
    let cat = GeneratorCatalog::consistent();
    let form = SymplecticForm::j_matrix(Ordering::Interleaved);
    let mut passing = Vec::new();
    for g in GeneratorName::ALL {
        let m = GroupElement::exp_generator(&cat, g, 0.7, Ordering::Interleaved);
        let dev = canonical_deviation(&m, &form).expect("same ordering");
        println!(
            "{g:<3} det = {:+.6}  |M J M^T - J| = {dev:.3e}",
            m.det(),
            g = g.to_string()
        );
        if dev <= 1e-12 {
            passing.push(g);
        }
    }
    passing
}

fn main() {
    run_example();
}
