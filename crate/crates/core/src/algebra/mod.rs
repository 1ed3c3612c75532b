//! Commutator engine: exact structure constants, table verification,
//! isomorphism checks and the `Sp(4)`-like subalgebras.
//!
//! Structure constants are stored with the convention
//! `[X_i, X_j] = sum_k f_ij^k X_k`, where the `f` are Gaussian rationals (the
//! explicit factors of `i` in the tables are folded into `f`).

mod linear;
pub mod subgroups;
pub mod tables;

use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;

use serde_json::{json, Value};

use crate::catalog::{GeneratorCatalog, GeneratorName, Ordering, SecIIName};
use crate::error::{Error, Result};
use crate::exactnum::{mat_linear, ExactMatrix, GaussRational};

pub use subgroups::{
    closed_subsets, enumerate_sp4_subgroups, fifteen_dim_check, Sp4Subgroup, SubgroupKind,
};
pub use tables::ExpectedTable;

/// Anything usable as a basis label.
pub trait Label: Copy + Ord + Eq + Hash + fmt::Debug + fmt::Display {}

impl<T: Copy + Ord + Eq + Hash + fmt::Debug + fmt::Display> Label for T {}

/// `xy - yx`.
pub fn commutator(x: &ExactMatrix, y: &ExactMatrix) -> Result<ExactMatrix> {
    x.mat_mul(y)?.mat_sub(&y.mat_mul(x)?)
}

/// A linearly independent, labelled list of same-size matrices.
#[derive(Clone, Debug)]
pub struct BasisSet<L> {
    labels: Vec<L>,
    matrices: Vec<ExactMatrix>,
    // k entry positions where the basis is invertible, plus that k x k inverse
    pivots: Vec<usize>,
    pivot_inverse: Vec<Vec<GaussRational>>,
}

impl<L: Label> BasisSet<L> {
    pub fn new(labels: Vec<L>, matrices: Vec<ExactMatrix>) -> Result<Self> {
        if labels.len() != matrices.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} labels for {} matrices",
                labels.len(),
                matrices.len()
            )));
        }
        if labels.is_empty() {
            return Err(Error::DimensionMismatch("empty basis".into()));
        }
        let n = matrices[0].n();
        if let Some(bad) = matrices.iter().position(|m| m.n() != n) {
            return Err(Error::DimensionMismatch(format!(
                "{} is {}x{1}, expected {n}x{n}",
                labels[bad],
                matrices[bad].n()
            )));
        }
        let mut seen = labels.clone();
        seen.sort();
        seen.dedup();
        if seen.len() != labels.len() {
            return Err(Error::LabelMismatch("duplicate labels in basis".into()));
        }

        let mut rows: Vec<Vec<GaussRational>> =
            matrices.iter().map(|m| m.entries().to_vec()).collect();
        let pivots = linear::rref(&mut rows);
        if pivots.len() < labels.len() {
            return Err(Error::LinearlyDependent {
                rank: pivots.len(),
                len: labels.len(),
            });
        }
        // square block: row p of the (entries x basis) matrix
        let square: Vec<Vec<GaussRational>> = pivots
            .iter()
            .map(|&p| matrices.iter().map(|m| m.entries()[p].clone()).collect())
            .collect();
        let pivot_inverse = linear::invert(&square).expect("pivot block is invertible");
        Ok(BasisSet {
            labels,
            matrices,
            pivots,
            pivot_inverse,
        })
    }

    pub fn labels(&self) -> &[L] {
        &self.labels
    }

    pub fn matrices(&self) -> &[ExactMatrix] {
        &self.matrices
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Matrix dimension.
    pub fn dim(&self) -> usize {
        self.matrices[0].n()
    }

    pub fn index_of(&self, label: L) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    pub fn matrix(&self, label: L) -> Option<&ExactMatrix> {
        self.index_of(label).map(|i| &self.matrices[i])
    }

    /// Expansion coefficients of `m` in this basis, or `None` when `m` lies
    /// outside the span.
    pub fn coordinates(&self, m: &ExactMatrix) -> Option<Vec<GaussRational>> {
        if m.n() != self.dim() {
            return None;
        }
        let rhs: Vec<&GaussRational> = self.pivots.iter().map(|&p| &m.entries()[p]).collect();
        let coeffs: Vec<GaussRational> = self
            .pivot_inverse
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&rhs)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(GaussRational::zero(), |acc, (a, b)| acc + a * *b)
            })
            .collect();
        let mats: Vec<&ExactMatrix> = self.matrices.iter().collect();
        let rebuilt = mat_linear(&coeffs, &mats).ok()?;
        (rebuilt == *m).then_some(coeffs)
    }

    /// The sub-basis with the given labels (in the given order).
    pub fn restrict(&self, labels: &[L]) -> Result<BasisSet<L>> {
        let mats = labels
            .iter()
            .map(|&l| {
                self.matrix(l)
                    .cloned()
                    .ok_or_else(|| Error::LabelMismatch(format!("{l} is not in the basis")))
            })
            .collect::<Result<Vec<_>>>()?;
        BasisSet::new(labels.to_vec(), mats)
    }

    /// Same labels, matrices transformed by `f`.
    pub fn map_matrices(&self, f: impl Fn(&ExactMatrix) -> ExactMatrix) -> Result<BasisSet<L>> {
        BasisSet::new(self.labels.clone(), self.matrices.iter().map(f).collect())
    }
}

/// The fifteen 4x4 generators of a catalog in one ordering.
pub fn sl4_basis(catalog: &GeneratorCatalog, ordering: Ordering) -> BasisSet<GeneratorName> {
    let labels = GeneratorName::ALL.to_vec();
    let mats = labels
        .iter()
        .map(|&g| catalog.generator(g, ordering))
        .collect();
    BasisSet::new(labels, mats).expect("the fifteen generators are independent")
}

/// The ten `Sp(4)` generators of a catalog in one ordering.
pub fn sp4_basis(catalog: &GeneratorCatalog, ordering: Ordering) -> BasisSet<GeneratorName> {
    sl4_basis(catalog, ordering)
        .restrict(&GeneratorName::SP4)
        .expect("Sp(4) members are independent")
}

/// The fifteen 6x6 generators.
pub fn o33_basis(catalog: &GeneratorCatalog) -> BasisSet<GeneratorName> {
    let labels = GeneratorName::ALL.to_vec();
    let mats = labels
        .iter()
        .map(|&g| catalog.o33_generator(g).clone())
        .collect();
    BasisSet::new(labels, mats).expect("the fifteen 6x6 generators are independent")
}

/// Mode-generator basis over the listed names.
pub fn secii_basis(catalog: &GeneratorCatalog, names: &[SecIIName]) -> Result<BasisSet<SecIIName>> {
    let mats = names
        .iter()
        .map(|&n| catalog.secii_generator(n).clone())
        .collect();
    BasisSet::new(names.to_vec(), mats)
}

/// Exact bracket expansions for every ordered pair of a basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureTable<L> {
    labels: Vec<L>,
    coeffs: Vec<Vec<GaussRational>>,
}

/// One term `coefficient * label` of a bracket expansion.
pub type Term<L> = (GaussRational, L);

impl<L: Label> StructureTable<L> {
    pub fn labels(&self) -> &[L] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Coefficients `f_ij^k` for all `k`.
    pub fn coeffs(&self, i: usize, j: usize) -> &[GaussRational] {
        &self.coeffs[i * self.labels.len() + j]
    }

    /// Nonzero terms of `[a, b]`, or `None` for unknown labels.
    pub fn bracket(&self, a: L, b: L) -> Option<Vec<Term<L>>> {
        let i = self.labels.iter().position(|&l| l == a)?;
        let j = self.labels.iter().position(|&l| l == b)?;
        Some(self.terms(i, j))
    }

    fn terms(&self, i: usize, j: usize) -> Vec<Term<L>> {
        self.coeffs(i, j)
            .iter()
            .zip(&self.labels)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, &l)| (c.clone(), l))
            .collect()
    }

    /// `f_ij = -f_ji` and `f_ii = 0`.
    pub fn is_antisymmetric(&self) -> bool {
        let n = self.len();
        (0..n).all(|i| {
            (0..n).all(|j| {
                self.coeffs(i, j)
                    .iter()
                    .zip(self.coeffs(j, i))
                    .all(|(a, b)| (a + b).is_zero())
            })
        })
    }

    /// Jacobi identity at the level of structure constants, for all triples.
    pub fn satisfies_jacobi(&self) -> bool {
        let n = self.len();
        // [[X_i, X_j], X_k] expanded in the basis
        let nested = |i: usize, j: usize, k: usize| -> Vec<GaussRational> {
            let mut out = vec![GaussRational::zero(); n];
            for (m, f) in self.coeffs(i, j).iter().enumerate() {
                if f.is_zero() {
                    continue;
                }
                for (l, g) in self.coeffs(m, k).iter().enumerate() {
                    if !g.is_zero() {
                        out[l] = &out[l] + &(f * g);
                    }
                }
            }
            out
        };
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let a = nested(i, j, k);
                    let b = nested(j, k, i);
                    let c = nested(k, i, j);
                    if (0..n).any(|l| !(&(&a[l] + &b[l]) + &c[l]).is_zero()) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `i,j,k,re,im` rows for every nonzero `f_ij^k` with `i < j`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("i,j,k,re,im\n");
        let n = self.len();
        for i in 0..n {
            for j in i + 1..n {
                for (c, k) in self.terms(i, j) {
                    out.push_str(&format!(
                        "{},{},{},{},{}\n",
                        self.labels[i], self.labels[j], k, c.re, c.im
                    ));
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let n = self.len();
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                brackets.push(json!({
                    "i": self.labels[i].to_string(),
                    "j": self.labels[j].to_string(),
                    "terms": terms_json(&self.terms(i, j)),
                }));
            }
        }
        json!({
            "labels": self.labels.iter().map(|l| l.to_string()).collect::<Vec<_>>(),
            "brackets": brackets,
        })
    }
}

fn terms_json<L: Label>(terms: &[Term<L>]) -> Value {
    Value::Array(
        terms
            .iter()
            .map(|(c, l)| json!({"k": l.to_string(), "re": c.re.to_string(), "im": c.im.to_string()}))
            .collect(),
    )
}

/// Render `[(i, L3), (-1/2, K1)]` as `iL3 - (1/2)K1`.
pub fn format_terms<L: Label>(terms: &[Term<L>]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (n, (c, l)) in terms.iter().enumerate() {
        let s = c.to_string();
        let (neg, body) = match s.strip_prefix('-') {
            Some(rest) if c.re.is_zero() || c.im.is_zero() => (true, rest.to_string()),
            _ => (false, s),
        };
        if n > 0 {
            out.push_str(if neg { " - " } else { " + " });
        } else if neg {
            out.push('-');
        }
        match body.as_str() {
            "1" => {}
            b if b.contains(['+', '/']) || (b.contains('-') && b.len() > 1) => {
                out.push_str(&format!("({b})"))
            }
            b => out.push_str(b),
        }
        out.push_str(&l.to_string());
    }
    out
}

/// Expand every bracket of the basis in the basis itself.
pub fn structure_constants<L: Label>(basis: &BasisSet<L>) -> Result<StructureTable<L>> {
    let n = basis.len();
    let mut coeffs = vec![Vec::new(); n * n];
    for i in 0..n {
        coeffs[i * n + i] = vec![GaussRational::zero(); n];
        for j in i + 1..n {
            let c = commutator(&basis.matrices[i], &basis.matrices[j])?;
            let f = basis.coordinates(&c).ok_or_else(|| Error::NotClosed {
                left: basis.labels[i].to_string(),
                right: basis.labels[j].to_string(),
            })?;
            coeffs[j * n + i] = f.iter().map(|v| -v).collect();
            coeffs[i * n + j] = f;
        }
    }
    Ok(StructureTable {
        labels: basis.labels.clone(),
        coeffs,
    })
}

/// Outcome for one pair in a table verification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PairStatus {
    Match,
    Mismatch,
    /// The computed bracket is not in the span of the basis.
    OutsideSpan,
    /// The expected table says nothing about this pair.
    Unspecified,
}

#[derive(Clone, Debug)]
pub struct PairCheck<L> {
    pub left: L,
    pub right: L,
    pub status: PairStatus,
    pub computed: Option<Vec<Term<L>>>,
    pub expected: Option<Vec<Term<L>>>,
}

/// Per-pair verification of a basis against an expected table.
#[derive(Clone, Debug)]
pub struct TableReport<L> {
    pub title: String,
    pub pairs: Vec<PairCheck<L>>,
}

impl<L: Label> TableReport<L> {
    fn count(&self, status: PairStatus) -> usize {
        self.pairs.iter().filter(|p| p.status == status).count()
    }

    /// Pairs compared against an expected value.
    pub fn checked(&self) -> usize {
        self.pairs.len() - self.count(PairStatus::Unspecified)
    }

    pub fn matched(&self) -> usize {
        self.count(PairStatus::Match)
    }

    pub fn failures(&self) -> Vec<&PairCheck<L>> {
        self.pairs
            .iter()
            .filter(|p| matches!(p.status, PairStatus::Mismatch | PairStatus::OutsideSpan))
            .collect()
    }

    pub fn unspecified(&self) -> Vec<&PairCheck<L>> {
        self.pairs
            .iter()
            .filter(|p| p.status == PairStatus::Unspecified)
            .collect()
    }

    /// No compared pair disagrees.
    pub fn passed(&self) -> bool {
        self.failures().is_empty()
    }

    /// Every pair of the basis was compared.
    pub fn complete(&self) -> bool {
        self.unspecified().is_empty()
    }

    /// Unordered label pairs that failed.
    pub fn failed_pairs(&self) -> Vec<(L, L)> {
        self.failures().iter().map(|p| (p.left, p.right)).collect()
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{}: {} pairs checked, {} matched, {} failed, {} unspecified -> {}\n",
            self.title,
            self.checked(),
            self.matched(),
            self.failures().len(),
            self.unspecified().len(),
            if self.passed() { "PASS" } else { "FAIL" }
        );
        for p in &self.pairs {
            let tag = match p.status {
                PairStatus::Match => "ok  ",
                PairStatus::Mismatch => "FAIL",
                PairStatus::OutsideSpan => "SPAN",
                PairStatus::Unspecified => "--  ",
            };
            let computed = p
                .computed
                .as_ref()
                .map_or_else(|| "outside span".to_string(), |t| format_terms(t));
            out.push_str(&format!("  {tag} [{}, {}] = {computed}", p.left, p.right));
            if p.status == PairStatus::Mismatch {
                out.push_str(&format!(
                    "   (expected {})",
                    format_terms(p.expected.as_deref().unwrap_or(&[]))
                ));
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let pairs: Vec<Value> = self
            .pairs
            .iter()
            .map(|p| {
                json!({
                    "left": p.left.to_string(),
                    "right": p.right.to_string(),
                    "status": format!("{:?}", p.status).to_lowercase(),
                    "computed": p.computed.as_ref().map(|t| terms_json(t)),
                    "expected": p.expected.as_ref().map(|t| terms_json(t)),
                })
            })
            .collect();
        json!({
            "title": self.title,
            "checked": self.checked(),
            "matched": self.matched(),
            "failed": self.failures().len(),
            "unspecified": self.unspecified().len(),
            "pass": self.passed(),
            "complete": self.complete(),
            "pairs": pairs,
        })
    }
}

fn normalize<L: Label>(mut terms: Vec<Term<L>>) -> BTreeMap<L, GaussRational> {
    terms.retain(|(c, _)| !c.is_zero());
    let mut out = BTreeMap::new();
    for (c, l) in terms {
        let e = out.entry(l).or_insert_with(GaussRational::zero);
        *e = &*e + &c;
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Compare every bracket of `basis` with `expected`. Mismatches are data,
/// not errors.
pub fn verify_table<L: Label>(basis: &BasisSet<L>, expected: &ExpectedTable<L>) -> TableReport<L> {
    let n = basis.len();
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = (basis.labels[i], basis.labels[j]);
            let computed = commutator(&basis.matrices[i], &basis.matrices[j])
                .ok()
                .and_then(|c| basis.coordinates(&c))
                .map(|f| {
                    f.into_iter()
                        .zip(basis.labels.iter().copied())
                        .filter(|(c, _)| !c.is_zero())
                        .collect::<Vec<_>>()
                });
            let want = expected.bracket(a, b);
            let status = match (&computed, &want) {
                (_, None) => PairStatus::Unspecified,
                (None, Some(_)) => PairStatus::OutsideSpan,
                (Some(c), Some(w)) => {
                    if normalize(c.clone()) == normalize(w.clone()) {
                        PairStatus::Match
                    } else {
                        PairStatus::Mismatch
                    }
                }
            };
            pairs.push(PairCheck {
                left: a,
                right: b,
                status,
                computed,
                expected: want,
            });
        }
    }
    TableReport {
        title: expected.title().to_string(),
        pairs,
    }
}

/// A bracket `[a, b]` that expands differently in two realizations.
pub type Mismatch<L> = (L, L, Vec<Term<L>>, Vec<Term<L>>);

/// Result of comparing two realizations' structure constants.
#[derive(Clone, Debug)]
pub struct IsomorphismReport<L> {
    pub pairs_checked: usize,
    pub mismatches: Vec<Mismatch<L>>,
}

impl<L: Label> IsomorphismReport<L> {
    pub fn isomorphic(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "pairs_checked": self.pairs_checked,
            "pairs_matched": self.pairs_checked - self.mismatches.len(),
            "isomorphic": self.isomorphic(),
            "mismatches": self.mismatches.iter().map(|(a, b, x, y)| json!({
                "left": a.to_string(),
                "right": b.to_string(),
                "first": format_terms(x),
                "second": format_terms(y),
            })).collect::<Vec<_>>(),
        })
    }
}

/// Do two bases with identical label lists have identical structure
/// constants under the label-identity map?
pub fn check_isomorphism<L: Label>(
    first: &BasisSet<L>,
    second: &BasisSet<L>,
) -> Result<IsomorphismReport<L>> {
    if first.labels != second.labels {
        return Err(Error::LabelMismatch(format!(
            "{:?} vs {:?}",
            first.labels, second.labels
        )));
    }
    let t1 = structure_constants(first)?;
    let t2 = structure_constants(second)?;
    let n = first.len();
    let mut mismatches = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if t1.coeffs(i, j) != t2.coeffs(i, j) {
                mismatches.push((
                    first.labels[i],
                    first.labels[j],
                    t1.terms(i, j),
                    t2.terms(i, j),
                ));
            }
        }
    }
    Ok(IsomorphismReport {
        pairs_checked: n * (n - 1) / 2,
        mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{Edition, GeneratorName as G, SecIIName as S};

    fn lit() -> GeneratorCatalog {
        GeneratorCatalog::literal()
    }

    #[test]
    fn commutator_examples() {
        let cat = lit();
        let x = |n| cat.secii_generator(n);
        let c = commutator(x(S::A1), x(S::B1)).unwrap();
        assert_eq!(c, x(S::C1).times_i());
        assert!(commutator(x(S::A1), x(S::A1)).unwrap().is_zero());
        let c = commutator(x(S::A0), x(S::Aminus)).unwrap();
        assert_eq!(c, x(S::A3).times_i());
        assert!(commutator(&ExactMatrix::identity(4), &ExactMatrix::identity(6)).is_err());
    }

    #[test]
    fn sp2_structure_constants() {
        let basis = secii_basis(&lit(), &[S::A1, S::B1, S::C1]).unwrap();
        let table = structure_constants(&basis).unwrap();
        let i = GaussRational::i();
        assert_eq!(
            table.bracket(S::A1, S::B1).unwrap(),
            vec![(i.clone(), S::C1)]
        );
        assert_eq!(table.bracket(S::B1, S::C1).unwrap(), vec![(-&i, S::A1)]);
        assert_eq!(table.bracket(S::C1, S::A1).unwrap(), vec![(i, S::B1)]);
    }

    #[test]
    fn so3_in_six_dimensions() {
        let basis = o33_basis(&lit()).restrict(&[G::L1, G::L2, G::L3]).unwrap();
        let table = structure_constants(&basis).unwrap();
        let i = GaussRational::i();
        assert_eq!(
            table.bracket(G::L1, G::L2).unwrap(),
            vec![(i.clone(), G::L3)]
        );
        assert_eq!(
            table.bracket(G::L2, G::L3).unwrap(),
            vec![(i.clone(), G::L1)]
        );
        assert_eq!(table.bracket(G::L3, G::L1).unwrap(), vec![(i, G::L2)]);
    }

    #[test]
    fn escaping_bracket_is_not_closed() {
        let basis = sl4_basis(&lit(), Ordering::Interleaved)
            .restrict(&[G::L1, G::G3])
            .unwrap();
        match structure_constants(&basis) {
            Err(Error::NotClosed { left, right }) => {
                assert_eq!((left.as_str(), right.as_str()), ("L1", "G3"))
            }
            other => panic!("expected NotClosed, got {other:?}"),
        }
    }

    #[test]
    fn dependent_basis_rejected() {
        let cat = lit();
        let s3 = cat.generator(G::S3, Ordering::Interleaved);
        let err = BasisSet::new(vec![G::S3, G::L1], vec![s3.clone(), s3.neg()]).unwrap_err();
        assert_eq!(err, Error::LinearlyDependent { rank: 1, len: 2 });
        assert!(matches!(
            BasisSet::new(vec![G::S3, G::S3], vec![s3.clone(), s3.times_i()]),
            Err(Error::LabelMismatch(_))
        ));
    }

    #[test]
    fn coordinates_reject_outside_span() {
        let basis = sl4_basis(&lit(), Ordering::Interleaved)
            .restrict(&[G::L1, G::L2])
            .unwrap();
        assert!(basis.coordinates(&ExactMatrix::identity(4)).is_none());
        let m = basis
            .matrix(G::L1)
            .unwrap()
            .scalar_mul(&GaussRational::ratio(3, 7));
        assert_eq!(
            basis.coordinates(&m).unwrap(),
            vec![GaussRational::ratio(3, 7), GaussRational::zero()]
        );
    }

    #[test]
    fn tables_are_antisymmetric_and_jacobi() {
        for edition in [Edition::Literal, Edition::Consistent] {
            let cat = GeneratorCatalog::new(edition);
            for basis in [sl4_basis(&cat, Ordering::Interleaved), o33_basis(&cat)] {
                let t = structure_constants(&basis).unwrap();
                assert!(t.is_antisymmetric());
                assert!(t.satisfies_jacobi());
            }
        }
    }

    #[test]
    fn csv_and_json_shapes() {
        let basis = sl4_basis(&lit(), Ordering::Interleaved)
            .restrict(&[G::L1, G::L2, G::L3])
            .unwrap();
        let t = structure_constants(&basis).unwrap();
        let csv = t.to_csv();
        assert_eq!(
            csv,
            "i,j,k,re,im\nL1,L2,L3,0,1\nL1,L3,L2,0,-1\nL2,L3,L1,0,1\n"
        );
        let j = t.to_json();
        assert_eq!(j["brackets"].as_array().unwrap().len(), 3);
        assert_eq!(j["brackets"][0]["terms"][0]["k"], "L3");
    }

    #[test]
    fn term_formatting() {
        let i = GaussRational::i();
        assert_eq!(format_terms::<G>(&[]), "0");
        assert_eq!(format_terms(&[(i.clone(), G::L3)]), "iL3");
        assert_eq!(format_terms(&[(-&i, G::L3)]), "-iL3");
        assert_eq!(
            format_terms(&[(i.clone(), G::L3), (GaussRational::ratio(-1, 2), G::K1)]),
            "iL3 - (1/2)K1"
        );
    }

    #[test]
    fn isomorphism_label_mismatch() {
        let cat = lit();
        let a = sl4_basis(&cat, Ordering::Interleaved)
            .restrict(&[G::L1, G::L2, G::L3])
            .unwrap();
        let b = o33_basis(&cat).restrict(&[G::L2, G::L1, G::L3]).unwrap();
        assert!(matches!(
            check_isomorphism(&a, &b),
            Err(Error::LabelMismatch(_))
        ));
    }

    #[test]
    fn rotation_triples_are_isomorphic() {
        let cat = lit();
        let labels = [G::L1, G::L2, G::L3];
        let a = sl4_basis(&cat, Ordering::Interleaved)
            .restrict(&labels)
            .unwrap();
        let b = o33_basis(&cat).restrict(&labels).unwrap();
        assert!(check_isomorphism(&a, &b).unwrap().isomorphic());
    }

    /// The brackets the literal S2 sign breaks.
    fn s2_pairs() -> Vec<(G, G)> {
        use G::*;
        vec![
            (S1, S2),
            (S1, S3),
            (S2, S3),
            (S2, K1),
            (S2, K2),
            (S2, K3),
            (S2, G1),
            (S2, G2),
            (S2, G3),
            (K1, G1),
            (K2, G2),
            (K3, G3),
        ]
    }

    #[test]
    fn fifteen_generator_table_by_edition() {
        let con = GeneratorCatalog::consistent();
        let report = verify_table(
            &sl4_basis(&con, Ordering::Interleaved),
            &tables::sl4(Edition::Consistent),
        );
        assert!(report.passed() && report.complete(), "{}", report.to_text());
        assert_eq!(report.checked(), 105);
        let report = verify_table(&o33_basis(&con), &tables::sl4(Edition::Consistent));
        assert!(report.passed() && report.complete());

        let lit = lit();
        let report = verify_table(
            &sl4_basis(&lit, Ordering::Interleaved),
            &tables::sl4(Edition::Literal),
        );
        assert_eq!(report.failed_pairs(), s2_pairs());
        let unspecified: Vec<_> = report
            .unspecified()
            .iter()
            .map(|p| (p.left, p.right))
            .collect();
        assert_eq!(
            unspecified,
            vec![(G::G1, G::G2), (G::G1, G::G3), (G::G2, G::G3)]
        );
    }

    #[test]
    fn sp4_table_both_orderings() {
        for cat in [lit(), GeneratorCatalog::consistent()] {
            for o in [Ordering::Interleaved, Ordering::Traditional] {
                let report = verify_table(&sp4_basis(&cat, o), &tables::sp4());
                assert!(report.passed() && report.complete(), "{o}");
                assert_eq!(report.checked(), 45);
            }
        }
    }

    #[test]
    fn corrupted_k2_localizes() {
        let cat = GeneratorCatalog::consistent();
        let basis = sp4_basis(&cat, Ordering::Interleaved)
            .map_matrices(|m| m.clone())
            .unwrap();
        let labels = basis.labels().to_vec();
        let mats = labels
            .iter()
            .map(|&l| {
                let m = basis.matrix(l).unwrap();
                if l == G::K2 {
                    m.neg()
                } else {
                    m.clone()
                }
            })
            .collect();
        let corrupted = BasisSet::new(labels, mats).unwrap();
        let report = verify_table(&corrupted, &tables::sp4());
        // K2 as an operand or in the expected result; vanishing brackets of
        // K2 are unaffected
        let involves = |p: &&PairCheck<G>| {
            p.left == G::K2
                || p.right == G::K2
                || p.expected
                    .as_ref()
                    .unwrap()
                    .iter()
                    .any(|(_, l)| *l == G::K2)
        };
        let failed: Vec<_> = report
            .failures()
            .into_iter()
            .map(|p| (p.left, p.right))
            .collect();
        let expected: Vec<_> = report
            .pairs
            .iter()
            .filter(|p| involves(p) && !p.expected.as_ref().unwrap().is_empty())
            .map(|p| (p.left, p.right))
            .collect();
        assert_eq!(failed, expected);
        assert!(!failed.is_empty());
    }

    #[test]
    fn g3_line_by_edition() {
        let lit_report = verify_table(
            &sl4_basis(&lit(), Ordering::Interleaved),
            &tables::g3_line(Edition::Literal),
        );
        assert_eq!(lit_report.failed_pairs(), vec![(G::Q3, G::G3)]);
        let con = GeneratorCatalog::consistent();
        let con_report = verify_table(
            &sl4_basis(&con, Ordering::Interleaved),
            &tables::g3_line(Edition::Consistent),
        );
        assert!(con_report.passed());
        assert_eq!(con_report.checked(), 10);
    }

    #[test]
    fn full_isomorphism_by_edition() {
        let con = GeneratorCatalog::consistent();
        let report =
            check_isomorphism(&sl4_basis(&con, Ordering::Interleaved), &o33_basis(&con)).unwrap();
        assert!(report.isomorphic());
        assert_eq!(report.pairs_checked, 105);
        let lit = lit();
        let report =
            check_isomorphism(&sl4_basis(&lit, Ordering::Interleaved), &o33_basis(&lit)).unwrap();
        let pairs: Vec<_> = report
            .mismatches
            .iter()
            .map(|(a, b, _, _)| (*a, *b))
            .collect();
        assert_eq!(pairs, s2_pairs());
    }

    #[test]
    fn swapped_s1_s2_breaks_isomorphism() {
        let con = GeneratorCatalog::consistent();
        let b6 = o33_basis(&con);
        let mats = b6
            .labels()
            .iter()
            .map(|&l| {
                let src = match l {
                    G::S1 => G::S2,
                    G::S2 => G::S1,
                    other => other,
                };
                b6.matrix(src).unwrap().clone()
            })
            .collect();
        let swapped = BasisSet::new(b6.labels().to_vec(), mats).unwrap();
        let report = check_isomorphism(&sl4_basis(&con, Ordering::Interleaved), &swapped).unwrap();
        assert!(!report.isomorphic());
        let s12 = |g: &G| matches!(g, G::S1 | G::S2);
        assert!(report
            .mismatches
            .iter()
            .all(|(a, b, x, y)| { s12(a) || s12(b) || x.iter().chain(y).any(|(_, l)| s12(l)) }));
    }

    #[test]
    fn mode_generator_tables() {
        let cat = lit();
        for (a, b, c) in [
            (S::A1, S::B1, S::C1),
            (S::A2, S::B2, S::C2),
            (S::Aplus, S::Bplus, S::Cplus),
            (S::Aplus, S::Bminus, S::Cminus),
            (S::Aminus, S::Bplus, S::Cminus),
            (S::Aminus, S::Bminus, S::Cplus),
            (S::Aplus, S::B3, S::C3),
        ] {
            let basis = secii_basis(&cat, &[a, b, c]).unwrap();
            let report = verify_table(&basis, &tables::sp2("sp2", a, b, c));
            assert!(report.passed() && report.complete(), "{a} {b} {c}");
        }
        let basis = secii_basis(&cat, &SecIIName::COMBINED).unwrap();
        assert!(verify_table(&basis, &tables::coupling()).passed());
        // the claimed triple (A+, B1, C1) does not close: [B1, C1] = -iA1
        let basis = secii_basis(&cat, &[S::Aplus, S::B1, S::C1]).unwrap();
        let report = verify_table(&basis, &tables::sp2("sp2", S::Aplus, S::B1, S::C1));
        assert_eq!(report.failed_pairs(), vec![(S::B1, S::C1)]);
        assert_eq!(report.failures()[0].status, PairStatus::OutsideSpan);
    }
}
