// Print the fifteen generators in both orderings and check that reordering
// round-trips.

use oscsym::catalog::{reorder, GeneratorCatalog, GeneratorName, Ordering};

pub fn run_example() -> usize {
    let cat = GeneratorCatalog::consistent();
    let mut round_trips = 0;
    for g in GeneratorName::ALL {
        let m = cat.generator(g, Ordering::Interleaved);
        println!("{g} (interleaved):\n{}", m.pretty());
        let t = reorder(&m, Ordering::Interleaved, Ordering::Traditional);
        if reorder(&t, Ordering::Traditional, Ordering::Interleaved) == m {
            round_trips += 1;
        }
    }
    println!("{round_trips}/15 reorder round trips are exact");
    round_trips
}

fn main() {
    run_example();
}
