// Search all subsets of the fifteen generators for ten-element closed
// subalgebras and mark the canonical one.

use oscsym::algebra::enumerate_sp4_subgroups;
use oscsym::catalog::{GeneratorCatalog, GeneratorName, Ordering};
use oscsym::phasespace::{classify_generators, SymplecticForm};

pub fn run_example() -> Vec<GeneratorName> {
    let cat = GeneratorCatalog::consistent();
    let classes = classify_generators(&cat, &SymplecticForm::j_matrix(Ordering::Interleaved));
    let mut canonical = Vec::new();
    for s in enumerate_sp4_subgroups(&cat).expect("table closes") {
        let bad: Vec<_> = s
            .members
            .iter()
            .filter(|g| classes.noncanonical.contains(g))
            .collect();
        println!(
            "pivot {:<3} {:?} noncanonical members: {bad:?}",
            s.pivot.to_string(),
            s.kind
        );
        if bad.is_empty() {
            canonical.push(s.pivot);
        }
    }
    canonical
}

fn main() {
    run_example();
}
