mod common;

use common::printed::{half_matrix, six_matrix, INTERLEAVED, MODES, SIX, TRADITIONAL};
use oscsym::catalog::{permutation, reorder, GeneratorCatalog, GeneratorName, Ordering, SecIIName};

#[test]
fn literal_catalog_matches_typed_entries() {
    let cat = GeneratorCatalog::literal();
    let mut compared = 0;
    for (name, entries) in INTERLEAVED {
        let g: GeneratorName = name.parse().unwrap();
        assert_eq!(
            cat.generator(g, Ordering::Interleaved),
            half_matrix(entries),
            "{name}"
        );
        compared += 1;
    }
    for (name, entries) in TRADITIONAL {
        let g: GeneratorName = name.parse().unwrap();
        assert_eq!(
            cat.sp4_generator(g, Ordering::Traditional).unwrap(),
            &half_matrix(entries),
            "{name}"
        );
        compared += 1;
    }
    for (name, entries) in SIX {
        let g: GeneratorName = name.parse().unwrap();
        assert_eq!(cat.o33_generator(g), &six_matrix(entries), "{name}");
        compared += 1;
    }
    for (name, entries) in MODES {
        let g: SecIIName = name.parse().unwrap();
        assert_eq!(cat.secii_generator(g), &half_matrix(entries), "{name}");
        compared += 1;
    }
    assert_eq!(compared, 56);
}

#[test]
fn consistent_catalog_differs_only_in_s2() {
    let (lit, con) = (GeneratorCatalog::literal(), GeneratorCatalog::consistent());
    for g in GeneratorName::ALL {
        let (a, b) = (
            lit.generator(g, Ordering::Interleaved),
            con.generator(g, Ordering::Interleaved),
        );
        if g == GeneratorName::S2 {
            assert_eq!(a.neg(), b);
        } else {
            assert_eq!(a, b, "{g}");
        }
        assert_eq!(lit.o33_generator(g), con.o33_generator(g));
    }
}

#[test]
fn typed_traditional_forms_are_reorderings() {
    for ((name, t), (iname, i)) in TRADITIONAL.iter().zip(INTERLEAVED) {
        assert_eq!(name, iname);
        let m = reorder(
            &half_matrix(i),
            Ordering::Interleaved,
            Ordering::Traditional,
        );
        assert_eq!(m, half_matrix(t), "{name}");
    }
    let p = permutation(Ordering::Interleaved, Ordering::Traditional);
    let q = permutation(Ordering::Traditional, Ordering::Interleaved);
    assert_eq!(
        p.mat_mul(&q).unwrap(),
        oscsym::exactnum::ExactMatrix::identity(4)
    );
}
