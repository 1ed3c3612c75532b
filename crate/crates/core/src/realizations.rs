//! Two further realizations of the algebra, used to cross-check the matrix
//! tables: ladder-operator combinations on a truncated two-mode Fock space,
//! and first-order differential operators on phase space.

use std::collections::BTreeMap;
use std::fmt;

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::Serialize;

use crate::algebra::{sp4_basis, structure_constants, BasisSet};
use crate::catalog::{Edition, GeneratorCatalog, GeneratorName, Ordering};
use crate::errata::{correction, Correction};
use crate::error::{Error, Result};
use crate::exactnum::{ExactMatrix, GaussRational};

/// Levels `0..n` per mode; basis state `|n1, n2>` sits at `n1 * n + n2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FockTruncation {
    n: usize,
}

impl FockTruncation {
    pub fn new(n: usize) -> Result<Self> {
        if n < 4 {
            return Err(Error::TruncationTooSmall(n));
        }
        Ok(FockTruncation { n })
    }

    pub fn levels(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.n * self.n
    }

    pub fn index(&self, n1: usize, n2: usize) -> usize {
        n1 * self.n + n2
    }

    /// States with `n1 + n2 <= N - 3`, on which products of two of the
    /// quadratic operators are unaffected by the cutoff.
    pub fn guarded_states(&self) -> Vec<usize> {
        let top = self.n - 3;
        (0..self.n)
            .flat_map(|n1| (0..self.n).map(move |n2| (n1, n2)))
            .filter(|(n1, n2)| n1 + n2 <= top)
            .map(|(n1, n2)| self.index(n1, n2))
            .collect()
    }
}

/// A dense operator on the truncated space.
#[derive(Clone, Debug, PartialEq)]
pub struct OperatorMatrix {
    pub label: String,
    pub matrix: DMatrix<Complex64>,
}

impl OperatorMatrix {
    fn new(label: impl Into<String>, matrix: DMatrix<Complex64>) -> Self {
        OperatorMatrix {
            label: label.into(),
            matrix,
        }
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        (&self.matrix - self.matrix.adjoint())
            .iter()
            .all(|z| z.norm() <= tol)
    }

    /// `<n1', n2'| self |n1, n2>`.
    pub fn element(
        &self,
        trunc: &FockTruncation,
        out: (usize, usize),
        inp: (usize, usize),
    ) -> Complex64 {
        self.matrix[(trunc.index(out.0, out.1), trunc.index(inp.0, inp.1))]
    }
}

/// `(a1, a1+, a2, a2+)`.
#[derive(Clone, Debug)]
pub struct Ladder {
    pub trunc: FockTruncation,
    pub a1: OperatorMatrix,
    pub a1_dag: OperatorMatrix,
    pub a2: OperatorMatrix,
    pub a2_dag: OperatorMatrix,
}

/// Truncated annihilation and creation operators, `a|n> = sqrt(n)|n-1>`.
pub fn ladder(n: usize) -> Result<Ladder> {
    let trunc = FockTruncation::new(n)?;
    let dim = trunc.dim();
    let lower = |mode: usize| {
        let mut m = DMatrix::<Complex64>::zeros(dim, dim);
        for n1 in 0..n {
            for n2 in 0..n {
                let k = if mode == 1 { n1 } else { n2 };
                if k == 0 {
                    continue;
                }
                let to = if mode == 1 {
                    (n1 - 1, n2)
                } else {
                    (n1, n2 - 1)
                };
                m[(trunc.index(to.0, to.1), trunc.index(n1, n2))] =
                    Complex64::new((k as f64).sqrt(), 0.0);
            }
        }
        m
    };
    let (a1, a2) = (lower(1), lower(2));
    Ok(Ladder {
        trunc,
        a1_dag: OperatorMatrix::new("a1+", a1.adjoint()),
        a2_dag: OperatorMatrix::new("a2+", a2.adjoint()),
        a1: OperatorMatrix::new("a1", a1),
        a2: OperatorMatrix::new("a2", a2),
    })
}

/// The ladder-operator form of a canonical generator. Only the ten `Sp(4)`
/// members have one. Products are formed two levels above the cutoff, so
/// every retained matrix element is exact.
pub fn hatted(name: GeneratorName, n: usize, edition: Edition) -> Result<OperatorMatrix> {
    let trunc = FockTruncation::new(n)?;
    hatted_with(&ladder(n + 2)?, trunc, name, edition)
}

/// Keep the rows and columns of states below the cutoff of `trunc`.
fn compress(
    m: &DMatrix<Complex64>,
    big: FockTruncation,
    trunc: FockTruncation,
) -> DMatrix<Complex64> {
    let n = trunc.levels();
    let keep: Vec<usize> = (0..n)
        .flat_map(|n1| (0..n).map(move |n2| big.index(n1, n2)))
        .collect();
    DMatrix::from_fn(keep.len(), keep.len(), |r, c| m[(keep[r], keep[c])])
}

fn hatted_with(
    l: &Ladder,
    trunc: FockTruncation,
    name: GeneratorName,
    edition: Edition,
) -> Result<OperatorMatrix> {
    use GeneratorName::*;
    let (a1, d1, a2, d2) = (
        &l.a1.matrix,
        &l.a1_dag.matrix,
        &l.a2.matrix,
        &l.a2_dag.matrix,
    );
    let c = |re: f64, im: f64| Complex64::new(re, im);
    let m = match name {
        L1 => (d1 * a2 + d2 * a1) * c(0.5, 0.0),
        L2 => (d1 * a2 - d2 * a1) * c(0.0, -0.5),
        L3 => (d1 * a1 - d2 * a2) * c(0.5, 0.0),
        S3 => {
            let sign = match edition {
                Edition::Literal => 0.5,
                Edition::Consistent => -0.5,
            };
            (d1 * a1 + a2 * d2) * c(sign, 0.0)
        }
        K1 => (d1 * d1 + a1 * a1 - d2 * d2 - a2 * a2) * c(-0.25, 0.0),
        K2 => (d1 * d1 - a1 * a1 + d2 * d2 - a2 * a2) * c(0.0, 0.25),
        K3 => (d1 * d2 + a1 * a2) * c(0.5, 0.0),
        Q1 => (d1 * d1 - a1 * a1 - d2 * d2 + a2 * a2) * c(0.0, -0.25),
        Q2 => (d1 * d1 + a1 * a1 + d2 * d2 + a2 * a2) * c(-0.25, 0.0),
        Q3 => (d1 * d2 - a1 * a2) * c(0.0, 0.5),
        S1 | S2 | G1 | G2 | G3 => return Err(Error::NoQuantumRealization(name.to_string())),
    };
    Ok(OperatorMatrix::new(
        format!("{name}^"),
        compress(&m, l.trunc, trunc),
    ))
}

/// Nonzeros of each column.
type SparseCols = Vec<Vec<(usize, Complex64)>>;

fn sparse_cols(m: &DMatrix<Complex64>) -> SparseCols {
    (0..m.ncols())
        .map(|c| {
            m.column(c)
                .iter()
                .enumerate()
                .filter(|(_, z)| z.norm() > 0.0)
                .map(|(r, z)| (r, *z))
                .collect()
        })
        .collect()
}

/// `(X Y - Y X) e_col` as a dense vector.
fn commutator_column(x: &SparseCols, y: &SparseCols, col: usize, dim: usize) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); dim];
    for (first, second, sign) in [(y, x, 1.0), (x, y, -1.0)] {
        for &(k, v) in &first[col] {
            for &(r, w) in &second[k] {
                out[r] += v * w * sign;
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FockResidual {
    pub left: GeneratorName,
    pub right: GeneratorName,
    pub residual: f64,
}

/// Ladder realization of all ten generators plus the exact structure
/// constants they should reproduce.
pub struct FockChecker {
    trunc: FockTruncation,
    basis: BasisSet<GeneratorName>,
    ops: BTreeMap<GeneratorName, (DMatrix<Complex64>, SparseCols)>,
}

impl FockChecker {
    pub fn new(n: usize, edition: Edition) -> Result<Self> {
        let trunc = FockTruncation::new(n)?;
        let l = ladder(n + 2)?;
        let mut ops = BTreeMap::new();
        for g in GeneratorName::SP4 {
            let m = hatted_with(&l, trunc, g, edition)?.matrix;
            let s = sparse_cols(&m);
            ops.insert(g, (m, s));
        }
        Ok(FockChecker {
            trunc,
            basis: sp4_basis(&GeneratorCatalog::consistent(), Ordering::Interleaved),
            ops,
        })
    }

    /// `max |[X^, Y^] - sum_k f_k Z_k^|` over the guarded block.
    pub fn residual(&self, x: GeneratorName, y: GeneratorName) -> Result<f64> {
        let op = |g: GeneratorName| {
            self.ops
                .get(&g)
                .ok_or_else(|| Error::NoQuantumRealization(g.to_string()))
        };
        let (ox, oy) = (op(x)?, op(y)?);
        let c = crate::algebra::commutator(
            self.basis.matrix(x).unwrap(),
            self.basis.matrix(y).unwrap(),
        )?;
        let f = self.basis.coordinates(&c).expect("Sp(4) is closed");
        let dim = self.trunc.dim();
        let mut worst: f64 = 0.0;
        for col in self.trunc.guarded_states() {
            let mut v = commutator_column(&ox.1, &oy.1, col, dim);
            for (coef, g) in f.iter().zip(self.basis.labels()) {
                if coef.is_zero() {
                    continue;
                }
                let z = coef.to_c64();
                for &(r, w) in &self.ops[g].1[col] {
                    v[r] -= z * w;
                }
            }
            worst = v.iter().fold(worst, |m, z| m.max(z.norm()));
        }
        Ok(worst)
    }

    /// Residuals of all 45 pairs.
    pub fn all(&self) -> Result<Vec<FockResidual>> {
        let names = GeneratorName::SP4;
        let mut out = Vec::new();
        for (i, &x) in names.iter().enumerate() {
            for &y in &names[i + 1..] {
                out.push(FockResidual {
                    left: x,
                    right: y,
                    residual: self.residual(x, y)?,
                });
            }
        }
        Ok(out)
    }

    pub fn operator(&self, g: GeneratorName) -> Option<&DMatrix<Complex64>> {
        self.ops.get(&g).map(|(m, _)| m)
    }

    pub fn truncation(&self) -> FockTruncation {
        self.trunc
    }
}

/// One bracket checked on the guarded block of an `n`-level truncation.
pub fn fock_commutator_check(
    x: GeneratorName,
    y: GeneratorName,
    n: usize,
    edition: Edition,
) -> Result<f64> {
    FockChecker::new(n, edition)?.residual(x, y)
}

/// Phase-space coordinates, interleaved order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    X1,
    P1,
    X2,
    P2,
}

impl Var {
    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Var::X1 => "x1",
            Var::P1 => "p1",
            Var::X2 => "x2",
            Var::P2 => "p2",
        })
    }
}

/// `sign * var d/d(wrt)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DiffTerm {
    pub sign: i64,
    pub var: Var,
    pub wrt: Var,
}

/// `sign * (first + second)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DiffGroup {
    pub sign: i64,
    pub terms: [DiffTerm; 2],
}

/// `sign * (i/2) { group + group }`, as tabulated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffOp {
    pub name: GeneratorName,
    pub edition: Edition,
    pub sign: i64,
    pub groups: [DiffGroup; 2],
}

/// Coefficients `C` of `D = sum_ab zeta_a C_ab d/d(zeta_b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffOpCoeff(ExactMatrix);

impl DiffOpCoeff {
    pub fn new(c: ExactMatrix) -> Result<Self> {
        if c.n() != 4 {
            return Err(Error::DimensionMismatch(format!(
                "{}x{0} coefficient matrix",
                c.n()
            )));
        }
        Ok(DiffOpCoeff(c))
    }

    pub fn matrix(&self) -> &ExactMatrix {
        &self.0
    }

    pub fn is_trace_free(&self) -> bool {
        self.0.trace().is_zero()
    }
}

impl DiffOp {
    pub fn coeff(&self) -> DiffOpCoeff {
        let scale = GaussRational::i_ratio(self.sign, 2);
        let mut entries: Vec<(usize, usize, GaussRational)> = Vec::new();
        for g in &self.groups {
            for t in &g.terms {
                let v = &scale * &GaussRational::from_int(g.sign * t.sign);
                entries.push((t.var.index(), t.wrt.index(), v));
            }
        }
        // accumulate repeated positions
        let mut c = ExactMatrix::zeros(4);
        for (r, col, v) in entries {
            c = c
                .mat_add(&ExactMatrix::from_entries(4, &[(r, col, v)]))
                .expect("4x4");
        }
        DiffOpCoeff(c)
    }

    /// Text rendering, e.g. `-(i/2){(x1 d/dp1 - p1 d/dx1) + (x2 d/dp2 - p2 d/dx2)}`.
    pub fn op_form(&self) -> String {
        let term = |t: &DiffTerm| format!("{} d/d{}", t.var, t.wrt);
        let group = |g: &DiffGroup| {
            let [a, b] = &g.terms;
            let lead = if a.sign < 0 { "-" } else { "" };
            let mid = if b.sign < 0 { " - " } else { " + " };
            format!("({lead}{}{mid}{})", term(a), term(b))
        };
        let [g1, g2] = &self.groups;
        let lead = if g1.sign < 0 { "-" } else { "" };
        let mid = if g2.sign < 0 { " - " } else { " + " };
        format!(
            "{}(i/2){{{lead}{}{mid}{}}}",
            if self.sign < 0 { "-" } else { "" },
            group(g1),
            group(g2)
        )
    }

    /// The correction applied to this operator, if any.
    pub fn correction(&self) -> Option<&'static Correction> {
        if self.edition == Edition::Literal {
            return None;
        }
        let id = match self.name {
            GeneratorName::S2 => "S2-DIFFOP",
            GeneratorName::G2 => "G2-DIFFOP",
            GeneratorName::G3 => "G3-DIFFOP",
            _ => return None,
        };
        correction(id)
    }
}

/// The differential operator of a generator.
pub fn diffop(name: GeneratorName, edition: Edition) -> DiffOp {
    use GeneratorName::*;
    use Var::*;
    let t = |sign, var, wrt| DiffTerm { sign, var, wrt };
    let g = |sign, a: DiffTerm, b: DiffTerm| DiffGroup {
        sign,
        terms: [a, b],
    };
    let lit = edition == Edition::Literal;
    let (sign, groups) = match name {
        L1 => (
            1,
            [
                g(1, t(1, X1, P2), t(-1, P2, X1)),
                g(1, t(1, X2, P1), t(-1, P1, X2)),
            ],
        ),
        L2 => (
            -1,
            [
                g(1, t(1, X1, X2), t(-1, X2, X1)),
                g(1, t(1, P1, P2), t(-1, P2, P1)),
            ],
        ),
        L3 => (
            1,
            [
                g(1, t(1, X1, P1), t(-1, P1, X1)),
                g(-1, t(1, X2, P2), t(-1, P2, X2)),
            ],
        ),
        S3 => (
            -1,
            [
                g(1, t(1, X1, P1), t(-1, P1, X1)),
                g(1, t(1, X2, P2), t(-1, P2, X2)),
            ],
        ),
        K1 => (
            -1,
            [
                g(1, t(1, X1, P1), t(1, P1, X1)),
                g(-1, t(1, X2, P2), t(1, P2, X2)),
            ],
        ),
        K2 => (
            -1,
            [
                g(1, t(1, X1, X1), t(-1, P1, P1)),
                g(1, t(1, X2, X2), t(-1, P2, P2)),
            ],
        ),
        K3 => (
            1,
            [
                g(1, t(1, X1, P2), t(1, P2, X1)),
                g(1, t(1, X2, P1), t(1, P1, X2)),
            ],
        ),
        Q1 => (
            1,
            [
                g(1, t(1, X1, X1), t(-1, P1, P1)),
                g(-1, t(1, X2, X2), t(-1, P2, P2)),
            ],
        ),
        Q2 => (
            -1,
            [
                g(1, t(1, X1, P1), t(1, P1, X1)),
                g(1, t(1, X2, P2), t(1, P2, X2)),
            ],
        ),
        Q3 => (
            -1,
            [
                g(1, t(1, X2, X1), t(1, X1, X2)),
                g(-1, t(1, P2, P1), t(1, P1, P2)),
            ],
        ),
        S1 => (
            1,
            [
                g(1, t(1, X1, X2), t(-1, X2, X1)),
                g(-1, t(1, P1, P2), t(-1, P2, P1)),
            ],
        ),
        S2 if lit => (
            -1,
            [
                g(1, t(1, X1, P2), t(-1, P2, X1)),
                g(1, t(1, X2, P1), t(-1, P1, X2)),
            ],
        ),
        S2 => (
            1,
            [
                g(1, t(1, X1, P2), t(-1, P2, X1)),
                g(-1, t(1, X2, P1), t(-1, P1, X2)),
            ],
        ),
        G1 => (
            -1,
            [
                g(1, t(1, X1, X2), t(1, X2, X1)),
                g(1, t(1, P1, P2), t(1, P2, P1)),
            ],
        ),
        G2 => (
            if lit { 1 } else { -1 },
            [
                g(1, t(1, X1, P2), t(1, P2, X1)),
                g(-1, t(1, X2, P1), t(1, P1, X2)),
            ],
        ),
        G3 if lit => (
            -1,
            [
                g(1, t(1, X1, X1), t(1, P1, P1)),
                g(1, t(1, X2, P1), t(1, P1, X2)),
            ],
        ),
        G3 => (
            -1,
            [
                g(1, t(1, X1, X1), t(1, P1, P1)),
                g(-1, t(1, X2, X2), t(1, P2, P2)),
            ],
        ),
    };
    DiffOp {
        name,
        edition,
        sign,
        groups,
    }
}

pub fn diffop_to_matrix(d: &DiffOpCoeff) -> ExactMatrix {
    d.0.clone()
}

/// `[D_C, D_C'] = D_{C C' - C' C}`.
pub fn diffop_commutator(a: &DiffOpCoeff, b: &DiffOpCoeff) -> DiffOpCoeff {
    DiffOpCoeff(crate::algebra::commutator(&a.0, &b.0).expect("4x4"))
}

/// The fifteen coefficient matrices as a basis.
pub fn diffop_basis(edition: Edition) -> Result<BasisSet<GeneratorName>> {
    let mats = GeneratorName::ALL
        .iter()
        .map(|&g| diffop(g, edition).coeff().0)
        .collect();
    BasisSet::new(GeneratorName::ALL.to_vec(), mats)
}

/// Names whose coefficient matrix is not `-X^T` for the catalog generator.
pub fn diffop_transpose_failures(
    catalog: &GeneratorCatalog,
    edition: Edition,
) -> Vec<GeneratorName> {
    GeneratorName::ALL
        .iter()
        .copied()
        .filter(|&g| {
            let x = catalog.generator(g, Ordering::Interleaved);
            diffop(g, edition).coeff().0 != x.transpose().neg()
        })
        .collect()
}

/// Structure constants of the differential realization, for comparison with
/// the matrix catalog.
pub fn diffop_structure_check(
    catalog: &GeneratorCatalog,
    edition: Edition,
) -> Result<crate::algebra::IsomorphismReport<GeneratorName>> {
    let ops = diffop_basis(edition)?;
    crate::algebra::check_isomorphism(
        &crate::algebra::sl4_basis(catalog, Ordering::Interleaved),
        &ops,
    )
}

/// Structure constants of the ten hatted operators' matrix counterparts.
pub fn sp4_structure() -> Result<crate::algebra::StructureTable<GeneratorName>> {
    structure_constants(&sp4_basis(
        &GeneratorCatalog::consistent(),
        Ordering::Interleaved,
    ))
}
