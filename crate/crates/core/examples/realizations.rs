// Ladder-operator and differential-operator versions of the generators.

use oscsym::catalog::{Edition, GeneratorName};
use oscsym::realizations::{diffop, FockChecker};

pub fn run_example() -> (f64, usize) {
    for g in [GeneratorName::L1, GeneratorName::K2, GeneratorName::G3] {
        println!("{g}: {}", diffop(g, Edition::Consistent).op_form());
    }
    let mut worst = 0.0;
    let mut literal_failures = 0;
    for edition in [Edition::Consistent, Edition::Literal] {
        let rows = FockChecker::new(10, edition)
            .expect("N >= 4")
            .all()
            .expect("sp4 names");
        let max = rows.iter().map(|r| r.residual).fold(0.0, f64::max);
        let bad = rows.iter().filter(|r| r.residual > 1e-10).count();
        println!(
            "{edition}: {} brackets, max residual {max:.2e}, {bad} above 1e-10",
            rows.len()
        );
        match edition {
            Edition::Consistent => worst = max,
            Edition::Literal => literal_failures = bad,
        }
    }
    (worst, literal_failures)
}

fn main() {
    run_example();
}
