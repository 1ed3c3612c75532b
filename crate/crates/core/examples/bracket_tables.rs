// Verify the ten- and fifteen-generator bracket tables in both editions.

use oscsym::algebra::{sl4_basis, sp4_basis, tables, verify_table};
use oscsym::catalog::{Edition, GeneratorCatalog, Ordering};

pub fn run_example() -> Vec<(Edition, usize)> {
    let mut failures = Vec::new();
    for edition in [Edition::Consistent, Edition::Literal] {
        let cat = GeneratorCatalog::new(edition);
        for ordering in [Ordering::Interleaved, Ordering::Traditional] {
            let report = verify_table(&sp4_basis(&cat, ordering), &tables::sp4());
            println!(
                "{edition} {ordering}: {}",
                report.to_text().lines().next().unwrap_or("")
            );
        }
        let report = verify_table(
            &sl4_basis(&cat, Ordering::Interleaved),
            &tables::sl4(edition),
        );
        print!(
            "{}",
            report
                .to_text()
                .lines()
                .next()
                .map(|l| format!("{l}\n"))
                .unwrap_or_default()
        );
        for (a, b) in report.failed_pairs() {
            println!("  mismatch at [{a}, {b}]");
        }
        failures.push((edition, report.failures().len()));
    }
    failures
}

fn main() {
    run_example();
}
