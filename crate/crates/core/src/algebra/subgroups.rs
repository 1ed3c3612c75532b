//! Bracket-closed subsets of the fifteen generators.

use serde::Serialize;

use super::{sl4_basis, structure_constants, BasisSet, StructureTable};
use crate::catalog::{Family, GeneratorCatalog, GeneratorName, Ordering};
use crate::error::Result;

/// Bit `i` stands for `GeneratorName::ALL[i]`.
type Mask = u16;

#[cfg(test)]
fn mask_of(names: &[GeneratorName]) -> Mask {
    names.iter().fold(0, |m, &g| m | 1 << g as usize)
}

fn names_of(mask: Mask) -> Vec<GeneratorName> {
    GeneratorName::ALL
        .iter()
        .copied()
        .filter(|&g| mask & (1 << g as usize) != 0)
        .collect()
}

/// Support of every bracket, indexed `[i * 15 + j]`.
fn support_masks(table: &StructureTable<GeneratorName>) -> Vec<Mask> {
    let n = table.len();
    let mut out = vec![0; n * n];
    for i in 0..n {
        for j in 0..n {
            out[i * n + j] = table
                .coeffs(i, j)
                .iter()
                .zip(table.labels())
                .filter(|(c, _)| !c.is_zero())
                .fold(0, |m, (_, &g)| m | 1 << g as usize);
        }
    }
    out
}

fn is_closed(mask: Mask, support: &[Mask]) -> bool {
    let n = GeneratorName::ALL.len();
    (0..n).filter(|i| mask & (1 << i) != 0).all(|i| {
        (i + 1..n)
            .filter(|j| mask & (1 << j) != 0)
            .all(|j| support[i * n + j] & !mask == 0)
    })
}

/// Every bracket-closed subset of exactly `size` generators, given the
/// fifteen-generator structure table (labels in `GeneratorName::ALL` order).
pub fn closed_subsets(
    table: &StructureTable<GeneratorName>,
    size: usize,
) -> Vec<Vec<GeneratorName>> {
    assert_eq!(
        table.labels(),
        GeneratorName::ALL,
        "table must cover all fifteen generators"
    );
    let support = support_masks(table);
    (0..1u32 << 15)
        .map(|m| m as Mask)
        .filter(|m| m.count_ones() as usize == size && is_closed(*m, &support))
        .map(names_of)
        .collect()
}

/// Number of closed subsets of each size `1..=15`.
pub fn census(table: &StructureTable<GeneratorName>) -> Vec<usize> {
    assert_eq!(
        table.labels(),
        GeneratorName::ALL,
        "table must cover all fifteen generators"
    );
    let support = support_masks(table);
    let mut counts = vec![0; 15];
    for m in 1..1u32 << 15 {
        let m = m as Mask;
        if is_closed(m, &support) {
            counts[m.count_ones() as usize - 1] += 1;
        }
    }
    counts
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum SubgroupKind {
    /// Three `L` rotations plus one `S`: `O(3,2)`-like.
    O32Like,
    /// Three `S` rotations plus one `L`: `O(2,3)`-like.
    O23Like,
}

/// A ten-element closed subalgebra, identified by its lone rotation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Sp4Subgroup {
    pub pivot: GeneratorName,
    pub kind: SubgroupKind,
    pub members: Vec<GeneratorName>,
}

impl Sp4Subgroup {
    pub fn contains(&self, g: GeneratorName) -> bool {
        self.members.contains(&g)
    }
}

/// Classify a ten-element set by its rotation content, if it has the
/// three-plus-one form.
fn pivot_form(members: &[GeneratorName]) -> Option<(GeneratorName, SubgroupKind)> {
    let of = |f: Family| members.iter().copied().filter(move |g| g.family() == f);
    let ls: Vec<_> = of(Family::L).collect();
    let ss: Vec<_> = of(Family::S).collect();
    match (ls.len(), ss.len()) {
        (3, 1) => Some((ss[0], SubgroupKind::O32Like)),
        (1, 3) => Some((ls[0], SubgroupKind::O23Like)),
        _ => None,
    }
}

/// The ten-element closed subalgebras of the catalog's fifteen generators,
/// found by exhaustive search and re-verified by exact expansion.
pub fn enumerate_sp4_subgroups(catalog: &GeneratorCatalog) -> Result<Vec<Sp4Subgroup>> {
    let basis = sl4_basis(catalog, Ordering::Interleaved);
    let table = structure_constants(&basis)?;
    let mut out = Vec::new();
    for members in closed_subsets(&table, 10) {
        let Some((pivot, kind)) = pivot_form(&members) else {
            continue;
        };
        structure_constants(&basis.restrict(&members)?)?;
        out.push(Sp4Subgroup {
            pivot,
            kind,
            members,
        });
    }
    // S pivots first, then L, each by index
    out.sort_by_key(|s| (s.kind, s.pivot));
    Ok(out)
}

/// A basis is a fifteen-dimensional algebra when it has fifteen independent
/// elements and every bracket stays in their span.
pub fn fifteen_dim_check<L: super::Label>(basis: &BasisSet<L>) -> bool {
    basis.len() == 15 && structure_constants(basis).is_ok()
}
