//! Symplectic forms, one-parameter group elements, the canonical test and
//! Gaussian Wigner states.
//!
//! Group elements are `M(theta) = exp(i theta X)`, which is real for every
//! catalog generator. Units are those of the dimensionless Hamiltonian, so
//! the vacuum covariance is `I/2` and the uncertainty floor for symplectic
//! eigenvalues is `1/2`.

use std::fmt;

use nalgebra::{Matrix4, SymmetricEigen, Vector4};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::catalog::{GeneratorCatalog, GeneratorName, Ordering};
use crate::error::{Error, Result};
use crate::exactnum::{ExactMatrix, GaussRational};

/// Tolerance on the uncertainty gate; the boundary counts as passing.
pub const UNCERTAINTY_TOL: f64 = 1e-12;

/// Default tolerance of the canonical test for floating-point elements.
pub const CANONICAL_TOL: f64 = 1e-12;

/// A real antisymmetric `J` with `J^2 = -I`, tied to an ordering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymplecticForm {
    j: ExactMatrix,
    ordering: Ordering,
}

impl SymplecticForm {
    /// Validate a candidate form.
    pub fn new(j: ExactMatrix, ordering: Ordering) -> Result<Self> {
        if j.n() != 4 {
            return Err(Error::InvalidSymplecticForm(format!(
                "{}x{0} matrix",
                j.n()
            )));
        }
        if !j.is_real() {
            return Err(Error::InvalidSymplecticForm("entries must be real".into()));
        }
        if !j.is_antisymmetric() {
            return Err(Error::InvalidSymplecticForm("J^T != -J".into()));
        }
        if j.mat_mul(&j)? != ExactMatrix::identity(4).neg() {
            return Err(Error::InvalidSymplecticForm("J^2 != -I".into()));
        }
        Ok(SymplecticForm { j, ordering })
    }

    /// The physical form: `diag(e, e)` interleaved, `[[0, I], [-I, 0]]`
    /// traditional, with `e = [[0, 1], [-1, 0]]`.
    pub fn j_matrix(ordering: Ordering) -> Self {
        let rows: &[&[i64]] = match ordering {
            Ordering::Interleaved => {
                &[&[0, 1, 0, 0], &[-1, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, -1, 0]]
            }
            Ordering::Traditional => {
                &[&[0, 0, 1, 0], &[0, 0, 0, 1], &[-1, 0, 0, 0], &[0, -1, 0, 0]]
            }
        };
        let j = ExactMatrix::from_int_rows(rows).expect("4x4 literal");
        SymplecticForm::new(j, ordering).expect("physical form is valid")
    }

    /// The form `2i X` built from a rotation generator (`2i S3` is the
    /// physical interleaved form).
    pub fn from_generator(
        catalog: &GeneratorCatalog,
        name: GeneratorName,
        ordering: Ordering,
    ) -> Result<Self> {
        let j = catalog
            .generator(name, ordering)
            .scalar_mul(&GaussRational::i_ratio(2, 1));
        SymplecticForm::new(j, ordering)
    }

    pub fn matrix(&self) -> &ExactMatrix {
        &self.j
    }

    pub fn ordering(&self) -> Ordering {
        self.ordering
    }

    pub fn to_f64(&self) -> Matrix4<f64> {
        to_matrix4(&self.j).expect("J is real 4x4")
    }
}

fn to_matrix4(m: &ExactMatrix) -> Result<Matrix4<f64>> {
    if m.n() != 4 {
        return Err(Error::DimensionMismatch(format!(
            "expected 4x4, got {}x{0}",
            m.n()
        )));
    }
    Ok(Matrix4::from_row_slice(&m.to_real_f64()?))
}

/// `i X` as a real matrix.
fn real_generator(
    catalog: &GeneratorCatalog,
    name: GeneratorName,
    ordering: Ordering,
) -> Matrix4<f64> {
    to_matrix4(&catalog.generator(name, ordering).times_i()).expect("i X is real")
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Generator { name: GeneratorName, theta: f64 },
    Composite(Vec<(GeneratorName, f64)>),
    Supplied,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Generator { name, theta } => write!(f, "exp(i*{theta}*{name})"),
            Provenance::Composite(word) => {
                let parts: Vec<String> = word
                    .iter()
                    .map(|(g, t)| format!("exp(i*{t}*{g})"))
                    .collect();
                f.write_str(&parts.join(" "))
            }
            Provenance::Supplied => f.write_str("supplied"),
        }
    }
}

/// A real 4x4 phase-space transformation.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupElement {
    m: Matrix4<f64>,
    ordering: Ordering,
    provenance: Provenance,
}

impl GroupElement {
    pub fn identity(ordering: Ordering) -> Self {
        GroupElement {
            m: Matrix4::identity(),
            ordering,
            provenance: Provenance::Composite(Vec::new()),
        }
    }

    pub fn from_matrix(m: Matrix4<f64>, ordering: Ordering) -> Self {
        GroupElement {
            m,
            ordering,
            provenance: Provenance::Supplied,
        }
    }

    /// `exp(i theta X)`.
    pub fn exp_generator(
        catalog: &GeneratorCatalog,
        name: GeneratorName,
        theta: f64,
        ordering: Ordering,
    ) -> Self {
        let m = (real_generator(catalog, name, ordering) * theta).exp();
        GroupElement {
            m,
            ordering,
            provenance: Provenance::Generator { name, theta },
        }
    }

    /// `self * other` (apply `other` first).
    pub fn compose(&self, other: &GroupElement) -> Result<GroupElement> {
        if self.ordering != other.ordering {
            return Err(Error::OrderingMismatch(
                self.ordering.to_string(),
                other.ordering.to_string(),
            ));
        }
        let word = |p: &Provenance| match p {
            Provenance::Generator { name, theta } => Some(vec![(*name, *theta)]),
            Provenance::Composite(w) => Some(w.clone()),
            Provenance::Supplied => None,
        };
        let provenance = match (word(&self.provenance), word(&other.provenance)) {
            (Some(mut a), Some(b)) => {
                a.extend(b);
                Provenance::Composite(a)
            }
            _ => Provenance::Supplied,
        };
        Ok(GroupElement {
            m: self.m * other.m,
            ordering: self.ordering,
            provenance,
        })
    }

    pub fn matrix(&self) -> &Matrix4<f64> {
        &self.m
    }

    pub fn ordering(&self) -> Ordering {
        self.ordering
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn det(&self) -> f64 {
        self.m.determinant()
    }
}

/// `max |M J M^T - J|`.
pub fn canonical_deviation(m: &GroupElement, form: &SymplecticForm) -> Result<f64> {
    if m.ordering != form.ordering {
        return Err(Error::OrderingMismatch(
            m.ordering.to_string(),
            form.ordering.to_string(),
        ));
    }
    let j = form.to_f64();
    Ok((m.m * j * m.m.transpose() - j).amax())
}

/// `M J M^T = J` within `tol`.
pub fn is_canonical(m: &GroupElement, form: &SymplecticForm, tol: f64) -> Result<bool> {
    Ok(canonical_deviation(m, form)? <= tol)
}

/// Same test on a bare matrix assumed to be in the form's ordering.
pub fn is_canonical_matrix(m: &Matrix4<f64>, form: &SymplecticForm, tol: f64) -> bool {
    let j = form.to_f64();
    (m * j * m.transpose() - j).amax() <= tol
}

/// Exact test for an exact matrix: `M J M^T = J`.
pub fn is_canonical_exact(m: &ExactMatrix, form: &SymplecticForm) -> Result<bool> {
    let lhs = m.mat_mul(form.matrix())?.mat_mul(&m.transpose())?;
    Ok(&lhs == form.matrix())
}

/// Infinitesimal version, exact: `(iX) J + J (iX)^T = 0`.
pub fn generator_is_canonical(
    catalog: &GeneratorCatalog,
    name: GeneratorName,
    form: &SymplecticForm,
) -> bool {
    let ix = catalog.generator(name, form.ordering).times_i();
    let j = form.matrix();
    let lhs = ix
        .mat_mul(j)
        .and_then(|a| a.mat_add(&j.mat_mul(&ix.transpose())?))
        .expect("4x4 products");
    lhs.is_zero()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub canonical: Vec<GeneratorName>,
    pub noncanonical: Vec<GeneratorName>,
}

/// Split the fifteen generators by whether they preserve `form`.
pub fn classify_generators(catalog: &GeneratorCatalog, form: &SymplecticForm) -> Classification {
    let (canonical, noncanonical) = GeneratorName::ALL
        .iter()
        .partition(|&&g| generator_is_canonical(catalog, g, form));
    Classification {
        canonical,
        noncanonical,
    }
}

/// A random product of `len` one-parameter elements drawn from the ten
/// canonical generators, with angles in `[-2, 2]`.
pub fn random_canonical_word<R: Rng + ?Sized>(
    rng: &mut R,
    catalog: &GeneratorCatalog,
    len: usize,
    ordering: Ordering,
) -> GroupElement {
    (0..len).fold(GroupElement::identity(ordering), |acc, _| {
        let g = GeneratorName::SP4[rng.random_range(0..GeneratorName::SP4.len())];
        let theta = rng.random_range(-2.0..=2.0);
        GroupElement::exp_generator(catalog, g, theta, ordering)
            .compose(&acc)
            .expect("same ordering")
    })
}

/// A Gaussian Wigner function: mean and covariance.
#[derive(Clone, Debug, PartialEq)]
pub struct GaussianState {
    mean: Vector4<f64>,
    cov: Matrix4<f64>,
    ordering: Ordering,
}

impl GaussianState {
    pub fn new(mean: Vector4<f64>, cov: Matrix4<f64>, ordering: Ordering) -> Result<Self> {
        if (cov - cov.transpose()).amax() > 1e-14 * cov.amax().max(1.0) {
            return Err(Error::NotSymmetric("covariance".into()));
        }
        if !mean.iter().chain(cov.iter()).all(|v| v.is_finite()) || cov.cholesky().is_none() {
            return Err(Error::NotPositiveDefinite);
        }
        Ok(GaussianState {
            mean,
            cov,
            ordering,
        })
    }

    /// Ground state of two uncoupled oscillators: `cov = I/2`.
    pub fn vacuum(ordering: Ordering) -> Self {
        GaussianState {
            mean: Vector4::zeros(),
            cov: Matrix4::identity() * 0.5,
            ordering,
        }
    }

    /// Ground state of the coupled system, interleaved ordering.
    pub fn coupled_ground_state(eta: f64, alpha: f64) -> Self {
        let (s, c) = (0.5 * alpha).sin_cos();
        // (y1, q1, y2, q2) = R (x1, p1, x2, p2), rotating x's and p's alike
        let r = Matrix4::new(
            c, 0.0, -s, 0.0, //
            0.0, c, 0.0, -s, //
            s, 0.0, c, 0.0, //
            0.0, s, 0.0, c,
        );
        let (e, ie) = (eta.exp(), (-eta).exp());
        let d = Matrix4::from_diagonal(&Vector4::new(ie, e, e, ie)) * 0.5;
        let cov = r.transpose() * d * r;
        GaussianState {
            mean: Vector4::zeros(),
            cov: symmetrize(&cov),
            ordering: Ordering::Interleaved,
        }
    }

    pub fn mean(&self) -> &Vector4<f64> {
        &self.mean
    }

    pub fn cov(&self) -> &Matrix4<f64> {
        &self.cov
    }

    pub fn ordering(&self) -> Ordering {
        self.ordering
    }

    /// `(nu1, nu2)`, `nu1 <= nu2`, with respect to the physical form.
    pub fn symplectic_eigenvalues(&self) -> (f64, f64) {
        symplectic_eigenvalues(&self.cov, self.ordering)
            .expect("state covariance is positive-definite")
    }

    /// Both symplectic eigenvalues at least `1/2`.
    pub fn uncertainty_ok(&self) -> bool {
        self.symplectic_eigenvalues().0 >= 0.5 - UNCERTAINTY_TOL
    }

    /// Normalized Gaussian Wigner function at `point`.
    pub fn wigner_eval(&self, point: &Vector4<f64>) -> Result<f64> {
        let det = self.cov.determinant();
        let inv = self.cov.try_inverse().ok_or(Error::SingularCovariance)?;
        if det <= 0.0 {
            return Err(Error::SingularCovariance);
        }
        let d = point - self.mean;
        let q = (d.transpose() * inv * d)[0];
        Ok((-0.5 * q).exp() / (4.0 * std::f64::consts::PI.powi(2) * det.sqrt()))
    }

    /// The same state in the other ordering.
    pub fn reordered(&self, to: Ordering) -> GaussianState {
        if to == self.ordering {
            return self.clone();
        }
        let p = to_matrix4(&crate::catalog::permutation(self.ordering, to)).expect("permutation");
        GaussianState {
            mean: p * self.mean,
            cov: p * self.cov * p.transpose(),
            ordering: to,
        }
    }
}

fn symmetrize(m: &Matrix4<f64>) -> Matrix4<f64> {
    (m + m.transpose()) * 0.5
}

/// Williamson invariants of a positive-definite covariance: the moduli of
/// the eigenvalues of `J cov`, computed from the symmetric matrix
/// `-(S J S)^2` with `S = cov^(1/2)`.
pub fn symplectic_eigenvalues(cov: &Matrix4<f64>, ordering: Ordering) -> Result<(f64, f64)> {
    if cov.cholesky().is_none() {
        return Err(Error::NotPositiveDefinite);
    }
    let eig = SymmetricEigen::new(symmetrize(cov));
    let sqrt_d = Matrix4::from_diagonal(&eig.eigenvalues.map(f64::sqrt));
    let s = eig.eigenvectors * sqrt_d * eig.eigenvectors.transpose();
    let a = s * SymplecticForm::j_matrix(ordering).to_f64() * s;
    let mut nu2: Vec<f64> = SymmetricEigen::new(symmetrize(&(-(a * a))))
        .eigenvalues
        .iter()
        .copied()
        .collect();
    nu2.sort_by(f64::total_cmp);
    Ok((
        (0.5 * (nu2[0] + nu2[1])).max(0.0).sqrt(),
        (0.5 * (nu2[2] + nu2[3])).max(0.0).sqrt(),
    ))
}

/// `mean -> M mean`, `cov -> M cov M^T`.
pub fn transform_state(s: &GaussianState, m: &GroupElement) -> Result<GaussianState> {
    if s.ordering != m.ordering {
        return Err(Error::OrderingMismatch(
            s.ordering.to_string(),
            m.ordering.to_string(),
        ));
    }
    let cov = symmetrize(&(m.m * s.cov * m.m.transpose()));
    GaussianState::new(m.m * s.mean, cov, s.ordering)
}

#[derive(Serialize, Deserialize)]
struct StateJson {
    mean: Vec<f64>,
    cov: Vec<Vec<f64>>,
    ordering: Ordering,
}

impl Serialize for GaussianState {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        StateJson {
            mean: self.mean.iter().copied().collect(),
            cov: (0..4)
                .map(|r| self.cov.row(r).iter().copied().collect())
                .collect(),
            ordering: self.ordering,
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for GaussianState {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = StateJson::deserialize(de)?;
        if raw.mean.len() != 4 || raw.cov.len() != 4 || raw.cov.iter().any(|r| r.len() != 4) {
            return Err(D::Error::custom(
                "state needs a 4-vector mean and a 4x4 cov",
            ));
        }
        let cov = Matrix4::from_fn(|r, c| raw.cov[r][c]);
        GaussianState::new(Vector4::from_column_slice(&raw.mean), cov, raw.ordering)
            .map_err(D::Error::custom)
    }
}
