//! Expected bracket tables, written the way they are tabulated: Levi-Civita
//! and Kronecker rules over generator families plus individual entries.

use std::collections::BTreeMap;

use super::{Label, Term};
use crate::catalog::{Edition, Family, GeneratorName, SecIIName};
use crate::exactnum::GaussRational;

/// A (possibly partial) table of expected brackets.
#[derive(Clone, Debug)]
pub struct ExpectedTable<L> {
    title: String,
    entries: BTreeMap<(L, L), Vec<Term<L>>>,
}

impl<L: Label> ExpectedTable<L> {
    pub fn new(title: impl Into<String>) -> Self {
        ExpectedTable {
            title: title.into(),
            entries: BTreeMap::new(),
        }
    }

    pub fn title(&self) -> &str {
        &self.title
    }

    /// Number of stored ordered entries.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `[a, b] = terms`. A later rule for the same pair replaces an earlier one.
    pub fn fixed(mut self, a: L, b: L, terms: Vec<Term<L>>) -> Self {
        self.entries.remove(&(b, a));
        self.entries.insert((a, b), terms);
        self
    }

    pub fn zero(self, a: L, b: L) -> Self {
        self.fixed(a, b, Vec::new())
    }

    /// Expected `[a, b]`, using antisymmetry when only `[b, a]` is stored.
    pub fn bracket(&self, a: L, b: L) -> Option<Vec<Term<L>>> {
        if let Some(t) = self.entries.get(&(a, b)) {
            return Some(t.clone());
        }
        self.entries
            .get(&(b, a))
            .map(|t| t.iter().map(|(c, l)| (-c, *l)).collect())
    }
}

fn i_times(sign: i64) -> GaussRational {
    GaussRational::i_ratio(sign, 1)
}

/// Levi-Civita symbol on `1..=3`.
fn eps(i: usize, j: usize, k: usize) -> i64 {
    match (i, j, k) {
        (1, 2, 3) | (2, 3, 1) | (3, 1, 2) => 1,
        (1, 3, 2) | (3, 2, 1) | (2, 1, 3) => -1,
        _ => 0,
    }
}

impl ExpectedTable<GeneratorName> {
    /// `[X_i, Y_j] = (sign * i) eps_ijk Z_k`.
    pub fn eps_rule(mut self, x: Family, y: Family, sign: i64, z: Family) -> Self {
        for i in 1..=3 {
            for j in 1..=3 {
                if x == y && i >= j {
                    continue;
                }
                let terms = (1..=3)
                    .filter(|&k| eps(i, j, k) != 0)
                    .map(|k| (i_times(sign * eps(i, j, k)), GeneratorName::of(z, k)))
                    .collect();
                self = self.fixed(GeneratorName::of(x, i), GeneratorName::of(y, j), terms);
            }
        }
        self
    }

    /// `[X_i, Y_j] = (sign * i) delta_ij z`.
    pub fn delta_rule(mut self, x: Family, y: Family, sign: i64, z: GeneratorName) -> Self {
        for i in 1..=3 {
            for j in 1..=3 {
                let terms = if i == j {
                    vec![(i_times(sign), z)]
                } else {
                    Vec::new()
                };
                self = self.fixed(GeneratorName::of(x, i), GeneratorName::of(y, j), terms);
            }
        }
        self
    }

    /// `[X_i, g] = (sign * i) Z_i`, or zero when `sign == 0`.
    pub fn family_rule(mut self, x: Family, g: GeneratorName, sign: i64, z: Family) -> Self {
        for i in 1..=3 {
            let terms = if sign == 0 {
                Vec::new()
            } else {
                vec![(i_times(sign), GeneratorName::of(z, i))]
            };
            self = self.fixed(GeneratorName::of(x, i), g, terms);
        }
        self
    }

    /// `[X_i, Y_j] = 0` for all `i, j`.
    pub fn commuting(mut self, x: Family, y: Family) -> Self {
        for i in 1..=3 {
            for j in 1..=3 {
                if x != y || i < j {
                    self = self.zero(GeneratorName::of(x, i), GeneratorName::of(y, j));
                }
            }
        }
        self
    }
}

/// The `Sp(2)` pattern `[a, b] = ic, [b, c] = -ia, [c, a] = ib`.
pub fn sp2<L: Label>(title: &str, a: L, b: L, c: L) -> ExpectedTable<L> {
    ExpectedTable::new(title)
        .fixed(a, b, vec![(i_times(1), c)])
        .fixed(b, c, vec![(i_times(-1), a)])
        .fixed(c, a, vec![(i_times(1), b)])
}

/// Coupling brackets of the parallel rotation `A0`: it commutes with the
/// `+` combinations and turns the `-` combinations into `A3, B3, C3`.
pub fn coupling() -> ExpectedTable<SecIIName> {
    use SecIIName::*;
    let mut t = ExpectedTable::new("A0 coupling");
    for (minus, three) in [(Aminus, A3), (Bminus, B3), (Cminus, C3)] {
        t = t.fixed(A0, minus, vec![(i_times(1), three)]);
    }
    for plus in [Aplus, Bplus, Cplus] {
        t = t.zero(A0, plus);
    }
    t
}

/// Rules shared by the ten-generator table.
fn sp4_rules(t: ExpectedTable<GeneratorName>) -> ExpectedTable<GeneratorName> {
    use Family::*;
    use GeneratorName::S3;
    t.eps_rule(L, L, 1, L)
        .family_rule(L, S3, 0, L)
        .eps_rule(L, K, 1, K)
        .eps_rule(L, Q, 1, Q)
        .eps_rule(K, K, -1, L)
        .eps_rule(Q, Q, -1, L)
        .delta_rule(K, Q, -1, S3)
        .family_rule(K, S3, -1, Q)
        .family_rule(Q, S3, 1, K)
}

/// The ten-generator `Sp(4)` table.
pub fn sp4() -> ExpectedTable<GeneratorName> {
    sp4_rules(ExpectedTable::new("Sp(4) ten-generator table"))
}

/// The fifteen-generator table. The literal edition has no `[G_i, G_j]`
/// row (it repeats `[Q_i, Q_j]` instead); the consistent edition adds it.
pub fn sl4(edition: Edition) -> ExpectedTable<GeneratorName> {
    use Family::*;
    use GeneratorName::{S1, S2, S3};
    let mut t = sp4_rules(ExpectedTable::new(format!(
        "SL(4,r) fifteen-generator table ({edition})"
    )))
    .eps_rule(S, S, 1, S)
    .commuting(L, S)
    .eps_rule(L, G, 1, G)
    .delta_rule(Q, G, -1, S1)
    .delta_rule(G, K, -1, S2)
    .family_rule(G, S3, 0, G)
    .family_rule(K, S1, 0, K)
    .family_rule(Q, S1, -1, G)
    .family_rule(G, S1, 1, Q)
    .family_rule(K, S2, 1, G)
    .family_rule(Q, S2, 0, Q)
    .family_rule(G, S2, -1, K);
    if edition == Edition::Consistent {
        t = t.eps_rule(G, G, -1, L);
    }
    t
}

/// Brackets of `G3` with the ten `Sp(4)` generators.
pub fn g3_line(edition: Edition) -> ExpectedTable<GeneratorName> {
    use GeneratorName::*;
    let (k3, q3) = match edition {
        Edition::Literal => (1, -1),
        Edition::Consistent => (-1, 1),
    };
    let mut t = ExpectedTable::new(format!("G3 brackets ({edition})"))
        .fixed(G3, L1, vec![(i_times(1), G2)])
        .fixed(G3, L2, vec![(i_times(-1), G1)])
        .fixed(G3, K3, vec![(i_times(k3), S2)])
        .fixed(G3, Q3, vec![(i_times(q3), S1)]);
    for g in [S3, L3, K1, K2, Q1, Q2] {
        t = t.zero(G3, g);
    }
    t
}
