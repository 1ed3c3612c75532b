//! Named generator matrices of the coupled-oscillator symmetry groups.
//!
//! Fifteen 4x4 generators act on two-mode phase space (in either coordinate
//! ordering), fifteen 6x6 generators act on `(x, y, z, s, t, u)`, and sixteen
//! 4x4 mode-by-mode generators (`A1 ... C3`) build the same algebra from two
//! single-oscillator `Sp(2)` copies.
//!
//! Every 4x4 generator `X` is such that `i X` is real, so `exp(i theta X)` is a
//! real phase-space transformation.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::errata::{Correction, CORRECTIONS};
use crate::error::{Error, Result};
use crate::exactnum::{ExactMatrix, GaussRational};

/// Phase-space coordinate ordering.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Ordering {
    /// `(x1, p1, x2, p2)`
    Interleaved,
    /// `(x1, x2, p1, p2)`
    Traditional,
}

impl Ordering {
    pub fn other(self) -> Ordering {
        match self {
            Ordering::Interleaved => Ordering::Traditional,
            Ordering::Traditional => Ordering::Interleaved,
        }
    }

    /// Coordinate labels in this ordering.
    pub fn labels(self) -> [&'static str; 4] {
        match self {
            Ordering::Interleaved => ["x1", "p1", "x2", "p2"],
            Ordering::Traditional => ["x1", "x2", "p1", "p2"],
        }
    }
}

impl fmt::Display for Ordering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Ordering::Interleaved => "interleaved",
            Ordering::Traditional => "traditional",
        })
    }
}

impl FromStr for Ordering {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "interleaved" => Ok(Ordering::Interleaved),
            "traditional" => Ok(Ordering::Traditional),
            _ => Err(Error::Parse(format!("unknown ordering {s:?}"))),
        }
    }
}

/// Which transcription of the generator tables to use.
///
/// `Literal` reproduces the tabulated forms verbatim, sign slips included.
/// `Consistent` applies the corrections listed in [`crate::errata`], after
/// which every table, realization and isomorphism agrees exactly.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Edition {
    Literal,
    #[default]
    Consistent,
}

impl fmt::Display for Edition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Edition::Literal => "literal",
            Edition::Consistent => "consistent",
        })
    }
}

impl FromStr for Edition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "literal" => Ok(Edition::Literal),
            "consistent" => Ok(Edition::Consistent),
            _ => Err(Error::Parse(format!("unknown edition {s:?}"))),
        }
    }
}

/// Generator families: rotations `L` (space-like) and `S` (time-like), and
/// the three boost/squeeze triplets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    L,
    S,
    K,
    Q,
    G,
}

impl Family {
    pub const ALL: [Family; 5] = [Family::L, Family::S, Family::K, Family::Q, Family::G];

    pub fn is_rotation(self) -> bool {
        matches!(self, Family::L | Family::S)
    }
}

/// The fifteen generator names.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GeneratorName {
    L1,
    L2,
    L3,
    S1,
    S2,
    S3,
    K1,
    K2,
    K3,
    Q1,
    Q2,
    Q3,
    G1,
    G2,
    G3,
}

impl GeneratorName {
    pub const ALL: [GeneratorName; 15] = {
        use GeneratorName::*;
        [L1, L2, L3, S1, S2, S3, K1, K2, K3, Q1, Q2, Q3, G1, G2, G3]
    };

    /// The ten canonical (`Sp(4)`) generators in the interleaved frame.
    pub const SP4: [GeneratorName; 10] = {
        use GeneratorName::*;
        [L1, L2, L3, S3, K1, K2, K3, Q1, Q2, Q3]
    };

    /// The five generators outside `Sp(4)`.
    pub const EXTRA: [GeneratorName; 5] = {
        use GeneratorName::*;
        [S1, S2, G1, G2, G3]
    };

    pub fn is_sp4_member(self) -> bool {
        Self::SP4.contains(&self)
    }

    pub fn family(self) -> Family {
        Family::ALL[self as usize / 3]
    }

    /// Index `1..=3` within the family.
    pub fn index(self) -> usize {
        self as usize % 3 + 1
    }

    /// Inverse of `(family, index)`; `index` in `1..=3`.
    pub fn of(family: Family, index: usize) -> GeneratorName {
        assert!(
            (1..=3).contains(&index),
            "generator index {index} out of range"
        );
        let pos = Family::ALL.iter().position(|f| *f == family).unwrap();
        Self::ALL[pos * 3 + index - 1]
    }
}

impl fmt::Display for GeneratorName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for GeneratorName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .iter()
            .copied()
            .find(|g| g.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown generator {s:?}")))
    }
}

/// Generators built from two independent single-mode `Sp(2)` algebras.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SecIIName {
    A1,
    B1,
    C1,
    A2,
    B2,
    C2,
    Aplus,
    Bplus,
    Cplus,
    Aminus,
    Bminus,
    Cminus,
    A0,
    A3,
    B3,
    C3,
}

impl SecIIName {
    pub const ALL: [SecIIName; 16] = {
        use SecIIName::*;
        [
            A1, B1, C1, A2, B2, C2, Aplus, Bplus, Cplus, Aminus, Bminus, Cminus, A0, A3, B3, C3,
        ]
    };

    /// The ten combinations that coincide (up to sign) with single generators.
    pub const COMBINED: [SecIIName; 10] = {
        use SecIIName::*;
        [Aplus, Bplus, Cplus, Aminus, Bminus, Cminus, A0, A3, B3, C3]
    };
}

impl fmt::Display for SecIIName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use SecIIName::*;
        let s = match self {
            Aplus => "A+",
            Bplus => "B+",
            Cplus => "C+",
            Aminus => "A-",
            Bminus => "B-",
            Cminus => "C-",
            other => return fmt::Debug::fmt(other, f),
        };
        f.write_str(s)
    }
}

impl FromStr for SecIIName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .iter()
            .copied()
            .find(|g| {
                g.to_string().eq_ignore_ascii_case(s) || format!("{g:?}").eq_ignore_ascii_case(s)
            })
            .ok_or_else(|| Error::Parse(format!("unknown mode generator {s:?}")))
    }
}

/// 2x2 building blocks.
#[derive(Clone, Copy, Debug)]
enum Pauli {
    Zero,
    Id,
    X,
    Y,
    Z,
}

/// Entries of a signed 2x2 block. Convention: `sigma2 = [[0, -i], [i, 0]]`.
fn pauli(p: Pauli, sign: i64) -> [[GaussRational; 2]; 2] {
    let r = |v: i64| GaussRational::from_int(v * sign);
    let i = |v: i64| GaussRational::i_ratio(v * sign, 1);
    let z = GaussRational::zero;
    match p {
        Pauli::Zero => [[z(), z()], [z(), z()]],
        Pauli::Id => [[r(1), z()], [z(), r(1)]],
        Pauli::X => [[z(), r(1)], [r(1), z()]],
        Pauli::Y => [[z(), i(-1)], [i(1), z()]],
        Pauli::Z => [[r(1), z()], [z(), r(-1)]],
    }
}

type Block = (i64, Pauli);

const O: Block = (1, Pauli::Zero);

/// `scale * [[tl, tr], [bl, br]]` with 2x2 blocks.
fn block4(scale: GaussRational, tl: Block, tr: Block, bl: Block, br: Block) -> ExactMatrix {
    let blocks = [
        [pauli(tl.1, tl.0), pauli(tr.1, tr.0)],
        [pauli(bl.1, bl.0), pauli(br.1, br.0)],
    ];
    ExactMatrix::from_fn(4, |r, c| &scale * &blocks[r / 2][c / 2][r % 2][c % 2])
}

fn half() -> GaussRational {
    GaussRational::ratio(1, 2)
}

fn i_half() -> GaussRational {
    GaussRational::i_ratio(1, 2)
}

fn interleaved_literal(name: GeneratorName) -> ExactMatrix {
    use GeneratorName::*;
    use Pauli::{Id, X, Y, Z};
    let mhalf = -half();
    let mi_half = -i_half();
    match name {
        L1 => block4(mhalf, O, (1, Y), (1, Y), O),
        L2 => block4(i_half(), O, (-1, Id), (1, Id), O),
        L3 => block4(mhalf, (1, Y), O, O, (-1, Y)),
        S3 => block4(half(), (1, Y), O, O, (1, Y)),
        K1 => block4(i_half(), (1, X), O, O, (-1, X)),
        K2 => block4(i_half(), (1, Z), O, O, (1, Z)),
        K3 => block4(mi_half, O, (1, X), (1, X), O),
        Q1 => block4(i_half(), (-1, Z), O, O, (1, Z)),
        Q2 => block4(i_half(), (1, X), O, O, (1, X)),
        Q3 => block4(i_half(), O, (1, Z), (1, Z), O),
        G3 => block4(i_half(), (1, Id), O, O, (-1, Id)),
        G1 => block4(i_half(), O, (1, Id), (1, Id), O),
        G2 => block4(half(), O, (-1, Y), (1, Y), O),
        S1 => block4(mi_half, O, (-1, Z), (1, Z), O),
        S2 => block4(i_half(), O, (-1, X), (1, X), O),
    }
}

/// The ten `Sp(4)` generators as tabulated in the `(x1, x2, p1, p2)` frame.
fn traditional_literal(name: GeneratorName) -> Option<ExactMatrix> {
    use GeneratorName::*;
    use Pauli::{Id, X, Y, Z};
    let mi_half = -i_half();
    Some(match name {
        L1 => block4(i_half(), O, (1, X), (-1, X), O),
        L2 => block4(half(), (1, Y), O, O, (1, Y)),
        L3 => block4(i_half(), O, (1, Z), (-1, Z), O),
        S3 => block4(i_half(), O, (-1, Id), (1, Id), O),
        K1 => block4(i_half(), O, (1, Z), (1, Z), O),
        K2 => block4(i_half(), (1, Id), O, O, (-1, Id)),
        K3 => block4(mi_half, O, (1, X), (1, X), O),
        Q1 => block4(i_half(), (-1, Z), O, O, (1, Z)),
        Q2 => block4(i_half(), O, (1, Id), (1, Id), O),
        Q3 => block4(i_half(), (1, X), O, O, (-1, X)),
        S1 | S2 | G1 | G2 | G3 => return None,
    })
}

/// 6x6 generators on `(x, y, z, s, t, u)`: each is `±i` at one symmetric
/// (boost) or antisymmetric (rotation) pair of positions.
fn o33_literal(name: GeneratorName) -> ExactMatrix {
    use GeneratorName::*;
    // (row, col, sign of the i at (row, col)), 1-based like the tables; the
    // mirrored entry is +i for boosts and the negation for rotations
    let (r, c, s, boost) = match name {
        L1 => (2, 3, -1, false),
        L2 => (1, 3, 1, false),
        L3 => (1, 2, -1, false),
        S1 => (5, 6, -1, false),
        S2 => (4, 6, 1, false),
        S3 => (4, 5, -1, false),
        K1 => (1, 4, 1, true),
        K2 => (2, 4, 1, true),
        K3 => (3, 4, 1, true),
        Q1 => (1, 5, 1, true),
        Q2 => (2, 5, 1, true),
        Q3 => (3, 5, 1, true),
        G1 => (1, 6, 1, true),
        G2 => (2, 6, 1, true),
        G3 => (3, 6, 1, true),
    };
    let mirror = if boost { s } else { -s };
    ExactMatrix::from_entries(
        6,
        &[
            (r - 1, c - 1, GaussRational::i_ratio(s, 1)),
            (c - 1, r - 1, GaussRational::i_ratio(mirror, 1)),
        ],
    )
}

fn secii_literal(name: SecIIName) -> ExactMatrix {
    use Pauli::{Id, X, Y, Z};
    use SecIIName::*;
    let half_sum = |a: ExactMatrix, b: ExactMatrix, sign: i64| {
        a.mat_add(&b.scalar_mul(&GaussRational::from_int(sign)))
            .unwrap()
    };
    match name {
        A1 => block4(half(), (1, Y), O, O, O),
        B1 => block4(i_half(), (1, Z), O, O, O),
        C1 => block4(i_half(), (1, X), O, O, O),
        A2 => block4(half(), O, O, O, (1, Y)),
        B2 => block4(i_half(), O, O, O, (1, Z)),
        C2 => block4(i_half(), O, O, O, (1, X)),
        Aplus => half_sum(secii_literal(A1), secii_literal(A2), 1),
        Bplus => half_sum(secii_literal(B1), secii_literal(B2), 1),
        Cplus => half_sum(secii_literal(C1), secii_literal(C2), 1),
        Aminus => half_sum(secii_literal(A1), secii_literal(A2), -1),
        Bminus => half_sum(secii_literal(B1), secii_literal(B2), -1),
        Cminus => half_sum(secii_literal(C1), secii_literal(C2), -1),
        A0 => block4(i_half(), O, (-1, Id), (1, Id), O),
        A3 => block4(half(), O, (1, Y), (1, Y), O),
        B3 => block4(i_half(), O, (1, Z), (1, Z), O),
        C3 => block4(i_half(), O, (1, X), (1, X), O),
    }
}

/// Permutation `P` with `zeta_to = P zeta_from`.
pub fn permutation(from: Ordering, to: Ordering) -> ExactMatrix {
    if from == to {
        return ExactMatrix::identity(4);
    }
    // swapping p1 <-> x2 is its own inverse
    ExactMatrix::from_int_rows(&[&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]])
        .unwrap()
}

/// Re-express a 4x4 phase-space matrix in another coordinate ordering
/// (`P m P^-1`).
pub fn reorder(m: &ExactMatrix, from: Ordering, to: Ordering) -> ExactMatrix {
    let p = permutation(from, to);
    p.mat_mul(m)
        .and_then(|pm| pm.mat_mul(&p.transpose()))
        .expect("reorder takes a 4x4 matrix")
}

/// All named generator matrices for one [`Edition`]. Built once, read-only.
#[derive(Clone, Debug)]
pub struct GeneratorCatalog {
    edition: Edition,
    interleaved: BTreeMap<GeneratorName, ExactMatrix>,
    traditional: BTreeMap<GeneratorName, ExactMatrix>,
    o33: BTreeMap<GeneratorName, ExactMatrix>,
    secii: BTreeMap<SecIIName, ExactMatrix>,
}

impl GeneratorCatalog {
    pub fn new(edition: Edition) -> Self {
        let mut interleaved: BTreeMap<_, _> = GeneratorName::ALL
            .iter()
            .map(|&g| (g, interleaved_literal(g)))
            .collect();
        if edition == Edition::Consistent {
            let s2 = interleaved[&GeneratorName::S2].neg();
            interleaved.insert(GeneratorName::S2, s2);
        }
        let traditional = GeneratorName::SP4
            .iter()
            .map(|&g| (g, traditional_literal(g).unwrap()))
            .collect();
        let o33 = GeneratorName::ALL
            .iter()
            .map(|&g| (g, o33_literal(g)))
            .collect();
        let secii = SecIIName::ALL
            .iter()
            .map(|&g| (g, secii_literal(g)))
            .collect();
        GeneratorCatalog {
            edition,
            interleaved,
            traditional,
            o33,
            secii,
        }
    }

    pub fn literal() -> Self {
        Self::new(Edition::Literal)
    }

    pub fn consistent() -> Self {
        Self::new(Edition::Consistent)
    }

    pub fn edition(&self) -> Edition {
        self.edition
    }

    /// Tabulated 4x4 generator. In the traditional ordering only the ten
    /// `Sp(4)` members are tabulated; the rest are a catalog miss (use
    /// [`GeneratorCatalog::generator`] to obtain them by reordering).
    pub fn sp4_generator(&self, name: GeneratorName, ordering: Ordering) -> Result<&ExactMatrix> {
        let table = match ordering {
            Ordering::Interleaved => &self.interleaved,
            Ordering::Traditional => &self.traditional,
        };
        table.get(&name).ok_or_else(|| Error::CatalogMiss {
            name: name.to_string(),
            ordering: ordering.to_string(),
        })
    }

    /// Any of the fifteen 4x4 generators in either ordering.
    pub fn generator(&self, name: GeneratorName, ordering: Ordering) -> ExactMatrix {
        match self.sp4_generator(name, ordering) {
            Ok(m) => m.clone(),
            Err(_) => reorder(&self.interleaved[&name], Ordering::Interleaved, ordering),
        }
    }

    pub fn o33_generator(&self, name: GeneratorName) -> &ExactMatrix {
        &self.o33[&name]
    }

    pub fn secii_generator(&self, name: SecIIName) -> &ExactMatrix {
        &self.secii[&name]
    }

    /// Corrections in force for the catalog's matrices.
    pub fn corrections(&self) -> Vec<&'static Correction> {
        match self.edition {
            Edition::Literal => Vec::new(),
            Edition::Consistent => CORRECTIONS.iter().filter(|c| c.id == "S2-MATRIX").collect(),
        }
    }
}

/// Sign and generator such that `secii_generator(name) = sign * sp4_generator(g)`
/// in the interleaved frame.
pub fn identification(name: SecIIName) -> Result<(i8, GeneratorName)> {
    use GeneratorName as G;
    use SecIIName::*;
    Ok(match name {
        Aplus => (1, G::S3),
        Aminus => (-1, G::L3),
        A3 => (-1, G::L1),
        A0 => (1, G::L2),
        Bplus => (1, G::K2),
        Bminus => (-1, G::Q1),
        B3 => (1, G::Q3),
        Cplus => (1, G::Q2),
        Cminus => (1, G::K1),
        C3 => (-1, G::K3),
        A1 | B1 | C1 | A2 | B2 | C2 => return Err(Error::NoSingleGenerator(name.to_string())),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iq(p: i64, d: i64) -> GaussRational {
        GaussRational::i_ratio(p, d)
    }

    #[test]
    fn s3_interleaved() {
        let cat = GeneratorCatalog::literal();
        let s3 = cat
            .sp4_generator(GeneratorName::S3, Ordering::Interleaved)
            .unwrap();
        let expected = ExactMatrix::from_entries(
            4,
            &[
                (0, 1, iq(-1, 2)),
                (1, 0, iq(1, 2)),
                (2, 3, iq(-1, 2)),
                (3, 2, iq(1, 2)),
            ],
        );
        assert_eq!(s3, &expected);
    }

    #[test]
    fn g3_interleaved() {
        let cat = GeneratorCatalog::literal();
        let g3 = cat
            .sp4_generator(GeneratorName::G3, Ordering::Interleaved)
            .unwrap();
        let expected = ExactMatrix::from_entries(
            4,
            &[
                (0, 0, iq(1, 2)),
                (1, 1, iq(1, 2)),
                (2, 2, iq(-1, 2)),
                (3, 3, iq(-1, 2)),
            ],
        );
        assert_eq!(g3, &expected);
    }

    #[test]
    fn s3_traditional() {
        let cat = GeneratorCatalog::literal();
        let s3 = cat
            .sp4_generator(GeneratorName::S3, Ordering::Traditional)
            .unwrap();
        let expected = ExactMatrix::from_entries(
            4,
            &[
                (0, 2, iq(-1, 2)),
                (1, 3, iq(-1, 2)),
                (2, 0, iq(1, 2)),
                (3, 1, iq(1, 2)),
            ],
        );
        assert_eq!(s3, &expected);
    }

    #[test]
    fn traditional_extras_are_catalog_misses() {
        let cat = GeneratorCatalog::literal();
        for g in GeneratorName::EXTRA {
            assert!(matches!(
                cat.sp4_generator(g, Ordering::Traditional),
                Err(Error::CatalogMiss { .. })
            ));
            let via_reorder = cat.generator(g, Ordering::Traditional);
            assert_eq!(
                reorder(&via_reorder, Ordering::Traditional, Ordering::Interleaved),
                cat.generator(g, Ordering::Interleaved)
            );
        }
    }

    #[test]
    fn o33_samples() {
        let cat = GeneratorCatalog::literal();
        let l3 = cat.o33_generator(GeneratorName::L3);
        assert_eq!(
            l3,
            &ExactMatrix::from_entries(6, &[(0, 1, iq(-1, 1)), (1, 0, iq(1, 1))])
        );
        let k1 = cat.o33_generator(GeneratorName::K1);
        assert_eq!(
            k1,
            &ExactMatrix::from_entries(6, &[(0, 3, iq(1, 1)), (3, 0, iq(1, 1))])
        );
        let s1 = cat.o33_generator(GeneratorName::S1);
        assert_eq!(
            s1,
            &ExactMatrix::from_entries(6, &[(4, 5, iq(-1, 1)), (5, 4, iq(1, 1))])
        );
    }

    #[test]
    fn secii_samples() {
        let cat = GeneratorCatalog::literal();
        let a1 = cat.secii_generator(SecIIName::A1);
        assert_eq!(
            a1,
            &ExactMatrix::from_entries(4, &[(0, 1, iq(-1, 2)), (1, 0, iq(1, 2))])
        );
        let a0 = cat.secii_generator(SecIIName::A0);
        assert_eq!(
            a0,
            &ExactMatrix::from_entries(
                4,
                &[
                    (0, 2, iq(-1, 2)),
                    (1, 3, iq(-1, 2)),
                    (2, 0, iq(1, 2)),
                    (3, 1, iq(1, 2))
                ]
            )
        );
        let a3 = cat.secii_generator(SecIIName::A3);
        assert_eq!(
            a3,
            &ExactMatrix::from_entries(
                4,
                &[
                    (0, 3, iq(-1, 2)),
                    (1, 2, iq(1, 2)),
                    (2, 1, iq(-1, 2)),
                    (3, 0, iq(1, 2))
                ]
            )
        );
        let plus = cat
            .secii_generator(SecIIName::A1)
            .mat_add(cat.secii_generator(SecIIName::A2))
            .unwrap();
        assert_eq!(&plus, cat.secii_generator(SecIIName::Aplus));
    }

    #[test]
    fn identification_is_exact_bijection() {
        let cat = GeneratorCatalog::literal();
        let mut targets = Vec::new();
        for name in SecIIName::COMBINED {
            let (sign, g) = identification(name).unwrap();
            let x = cat.sp4_generator(g, Ordering::Interleaved).unwrap();
            assert_eq!(
                cat.secii_generator(name),
                &x.scalar_mul(&GaussRational::from_int(sign as i64)),
                "{name}"
            );
            targets.push(g);
        }
        targets.sort();
        let mut sp4 = GeneratorName::SP4.to_vec();
        sp4.sort();
        assert_eq!(targets, sp4);
        assert_eq!(
            identification(SecIIName::Aplus).unwrap(),
            (1, GeneratorName::S3)
        );
        assert_eq!(
            identification(SecIIName::Aminus).unwrap(),
            (-1, GeneratorName::L3)
        );
        assert_eq!(
            identification(SecIIName::C3).unwrap(),
            (-1, GeneratorName::K3)
        );
        assert!(matches!(
            identification(SecIIName::B2),
            Err(Error::NoSingleGenerator(_))
        ));
    }

    #[test]
    fn reorder_matches_tabulated_traditional_forms() {
        for cat in [GeneratorCatalog::literal(), GeneratorCatalog::consistent()] {
            for g in GeneratorName::SP4 {
                let int = cat.sp4_generator(g, Ordering::Interleaved).unwrap();
                let tra = cat.sp4_generator(g, Ordering::Traditional).unwrap();
                assert_eq!(
                    &reorder(int, Ordering::Interleaved, Ordering::Traditional),
                    tra,
                    "{g}"
                );
            }
        }
    }

    #[test]
    fn reorder_round_trip() {
        let cat = GeneratorCatalog::literal();
        for g in GeneratorName::ALL {
            let x = cat.generator(g, Ordering::Interleaved);
            let there = reorder(&x, Ordering::Interleaved, Ordering::Traditional);
            assert_eq!(
                reorder(&there, Ordering::Traditional, Ordering::Interleaved),
                x
            );
        }
    }

    #[test]
    fn realness_and_tracelessness() {
        for cat in [GeneratorCatalog::literal(), GeneratorCatalog::consistent()] {
            for g in GeneratorName::ALL {
                for o in [Ordering::Interleaved, Ordering::Traditional] {
                    let x = cat.generator(g, o);
                    assert!(x.times_i().is_real(), "{g} {o}");
                    assert!(x.trace().is_zero());
                }
                assert!(cat.o33_generator(g).trace().is_zero());
            }
        }
    }

    #[test]
    fn consistent_edition_flips_only_s2() {
        let lit = GeneratorCatalog::literal();
        let con = GeneratorCatalog::consistent();
        for g in GeneratorName::ALL {
            let a = lit.generator(g, Ordering::Interleaved);
            let b = con.generator(g, Ordering::Interleaved);
            if g == GeneratorName::S2 {
                assert_eq!(a.neg(), b);
            } else {
                assert_eq!(a, b);
            }
            assert_eq!(lit.o33_generator(g), con.o33_generator(g));
        }
        assert!(lit.corrections().is_empty());
        assert_eq!(con.corrections().len(), 1);
    }

    #[test]
    fn generator_name_round_trip() {
        for g in GeneratorName::ALL {
            assert_eq!(g.to_string().parse::<GeneratorName>().unwrap(), g);
            assert_eq!(GeneratorName::of(g.family(), g.index()), g);
        }
        for s in SecIIName::ALL {
            assert_eq!(s.to_string().parse::<SecIIName>().unwrap(), s);
        }
        assert_eq!("aplus".parse::<SecIIName>().unwrap(), SecIIName::Aplus);
        assert!("X9".parse::<GeneratorName>().is_err());
    }
}
