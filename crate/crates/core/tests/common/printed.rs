//! Printed generator matrices, typed in entry by entry. Each 4x4 entry is
//! listed as `(row, col, z)` where the matrix element is `z / 2`; each 6x6
//! entry is the element itself. Unlisted entries are zero.

use oscsym::exactnum::{ExactMatrix, GaussRational};

/// `(re, im)` Gaussian integers.
type Z = (i64, i64);
const I: Z = (0, 1);
const MI: Z = (0, -1);

type Entries = &'static [(usize, usize, Z)];

fn build(n: usize, denom: i64, entries: Entries) -> ExactMatrix {
    let items: Vec<_> = entries
        .iter()
        .map(|&(r, c, (re, im))| {
            (
                r,
                c,
                &GaussRational::ratio(re, denom) + &GaussRational::i_ratio(im, denom),
            )
        })
        .collect();
    ExactMatrix::from_entries(n, &items)
}

/// Interleaved `(x1, p1, x2, p2)`, as printed (literal S2).
pub const INTERLEAVED: &[(&str, Entries)] = &[
    ("L1", &[(0, 3, I), (1, 2, MI), (2, 1, I), (3, 0, MI)]),
    ("L2", &[(0, 2, MI), (1, 3, MI), (2, 0, I), (3, 1, I)]),
    ("L3", &[(0, 1, I), (1, 0, MI), (2, 3, MI), (3, 2, I)]),
    ("S3", &[(0, 1, MI), (1, 0, I), (2, 3, MI), (3, 2, I)]),
    ("K1", &[(0, 1, I), (1, 0, I), (2, 3, MI), (3, 2, MI)]),
    ("K2", &[(0, 0, I), (1, 1, MI), (2, 2, I), (3, 3, MI)]),
    ("K3", &[(0, 3, MI), (1, 2, MI), (2, 1, MI), (3, 0, MI)]),
    ("Q1", &[(0, 0, MI), (1, 1, I), (2, 2, I), (3, 3, MI)]),
    ("Q2", &[(0, 1, I), (1, 0, I), (2, 3, I), (3, 2, I)]),
    ("Q3", &[(0, 2, I), (1, 3, MI), (2, 0, I), (3, 1, MI)]),
    ("S1", &[(0, 2, I), (1, 3, MI), (2, 0, MI), (3, 1, I)]),
    ("S2", &[(0, 3, MI), (1, 2, MI), (2, 1, I), (3, 0, I)]),
    ("G1", &[(0, 2, I), (1, 3, I), (2, 0, I), (3, 1, I)]),
    ("G2", &[(0, 3, I), (1, 2, MI), (2, 1, MI), (3, 0, I)]),
    ("G3", &[(0, 0, I), (1, 1, I), (2, 2, MI), (3, 3, MI)]),
];

/// Traditional `(x1, x2, p1, p2)`, the ten canonical generators.
pub const TRADITIONAL: &[(&str, Entries)] = &[
    ("L1", &[(0, 3, I), (1, 2, I), (2, 1, MI), (3, 0, MI)]),
    ("L2", &[(0, 1, MI), (1, 0, I), (2, 3, MI), (3, 2, I)]),
    ("L3", &[(0, 2, I), (1, 3, MI), (2, 0, MI), (3, 1, I)]),
    ("S3", &[(0, 2, MI), (1, 3, MI), (2, 0, I), (3, 1, I)]),
    ("K1", &[(0, 2, I), (1, 3, MI), (2, 0, I), (3, 1, MI)]),
    ("K2", &[(0, 0, I), (1, 1, I), (2, 2, MI), (3, 3, MI)]),
    ("K3", &[(0, 3, MI), (1, 2, MI), (2, 1, MI), (3, 0, MI)]),
    ("Q1", &[(0, 0, MI), (1, 1, I), (2, 2, I), (3, 3, MI)]),
    ("Q2", &[(0, 2, I), (1, 3, I), (2, 0, I), (3, 1, I)]),
    ("Q3", &[(0, 1, I), (1, 0, I), (2, 3, MI), (3, 2, MI)]),
];

/// Six-dimensional `(x, y, z, s, t, u)`.
pub const SIX: &[(&str, Entries)] = &[
    ("L1", &[(1, 2, MI), (2, 1, I)]),
    ("L2", &[(0, 2, I), (2, 0, MI)]),
    ("L3", &[(0, 1, MI), (1, 0, I)]),
    ("S3", &[(3, 4, MI), (4, 3, I)]),
    ("K1", &[(0, 3, I), (3, 0, I)]),
    ("K2", &[(1, 3, I), (3, 1, I)]),
    ("K3", &[(2, 3, I), (3, 2, I)]),
    ("Q1", &[(0, 4, I), (4, 0, I)]),
    ("Q2", &[(1, 4, I), (4, 1, I)]),
    ("Q3", &[(2, 4, I), (4, 2, I)]),
    ("S1", &[(4, 5, MI), (5, 4, I)]),
    ("S2", &[(3, 5, I), (5, 3, MI)]),
    ("G1", &[(0, 5, I), (5, 0, I)]),
    ("G2", &[(1, 5, I), (5, 1, I)]),
    ("G3", &[(2, 5, I), (5, 2, I)]),
];

/// Single-mode generators and their combinations, interleaved.
pub const MODES: &[(&str, Entries)] = &[
    ("A1", &[(0, 1, MI), (1, 0, I)]),
    ("B1", &[(0, 0, I), (1, 1, MI)]),
    ("C1", &[(0, 1, I), (1, 0, I)]),
    ("A2", &[(2, 3, MI), (3, 2, I)]),
    ("B2", &[(2, 2, I), (3, 3, MI)]),
    ("C2", &[(2, 3, I), (3, 2, I)]),
    ("A+", &[(0, 1, MI), (1, 0, I), (2, 3, MI), (3, 2, I)]),
    ("B+", &[(0, 0, I), (1, 1, MI), (2, 2, I), (3, 3, MI)]),
    ("C+", &[(0, 1, I), (1, 0, I), (2, 3, I), (3, 2, I)]),
    ("A-", &[(0, 1, MI), (1, 0, I), (2, 3, I), (3, 2, MI)]),
    ("B-", &[(0, 0, I), (1, 1, MI), (2, 2, MI), (3, 3, I)]),
    ("C-", &[(0, 1, I), (1, 0, I), (2, 3, MI), (3, 2, MI)]),
    ("A0", &[(0, 2, MI), (1, 3, MI), (2, 0, I), (3, 1, I)]),
    ("A3", &[(0, 3, MI), (1, 2, I), (2, 1, MI), (3, 0, I)]),
    ("B3", &[(0, 2, I), (1, 3, MI), (2, 0, I), (3, 1, MI)]),
    ("C3", &[(0, 3, I), (1, 2, I), (2, 1, I), (3, 0, I)]),
];

pub fn half_matrix(entries: Entries) -> ExactMatrix {
    build(4, 2, entries)
}

pub fn six_matrix(entries: Entries) -> ExactMatrix {
    build(6, 1, entries)
}
