// Compare structure constants of the 4x4 and 6x6 realizations.

use oscsym::algebra::{check_isomorphism, o33_basis, sl4_basis, structure_constants};
use oscsym::catalog::{GeneratorCatalog, GeneratorName, Ordering};

pub fn run_example() -> bool {
    let cat = GeneratorCatalog::consistent();
    let four = sl4_basis(&cat, Ordering::Interleaved);
    let six = o33_basis(&cat);
    let report = check_isomorphism(&four, &six).expect("same labels");
    let table = structure_constants(&six).expect("closed");
    let show = |a, b| oscsym::algebra::format_terms(&table.bracket(a, b).unwrap_or_default());
    use GeneratorName::*;
    println!("[K1, K2] = {}", show(K1, K2));
    println!("[G1, G2] = {}", show(G1, G2));
    println!("[Q3, G3] = {}", show(Q3, G3));
    println!(
        "{} of {} brackets agree",
        report.pairs_checked - report.mismatches.len(),
        report.pairs_checked
    );
    report.isomorphic()
}

fn main() {
    run_example();
}
