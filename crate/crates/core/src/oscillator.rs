//! Two coupled oscillators: mass reduction, the `(K, eta, alpha)` normal
//! form, its inverse, energy levels and the quadratic forms of the
//! Hamiltonians in normal-mode coordinates.

use nalgebra::Matrix4;
use serde::Serialize;

use crate::catalog::Ordering;
use crate::error::{Error, Result};
use crate::phasespace::SymplecticForm;

/// `H = p1^2/2m1 + p2^2/2m2 + (A' x1^2 + B' x2^2 + C' x1 x2)/2`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RawParams {
    pub m1: f64,
    pub m2: f64,
    pub a_prime: f64,
    pub b_prime: f64,
    pub c_prime: f64,
}

/// Equal-mass form with `m = sqrt(m1 m2)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ReducedParams {
    pub m: f64,
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct NormalForm {
    #[serde(rename = "K")]
    pub k: f64,
    pub eta: f64,
    pub alpha: f64,
    pub omega: f64,
}

fn check_potential(a: f64, b: f64, c: f64) -> Result<()> {
    let finite = [a, b, c].iter().all(|v| v.is_finite());
    if !finite || a <= 0.0 || b <= 0.0 || 4.0 * a * b - c * c <= 0.0 {
        return Err(Error::InadmissibleParameters(format!(
            "need A > 0, B > 0, 4AB - C^2 > 0 (A = {a}, B = {b}, C = {c})"
        )));
    }
    Ok(())
}

fn check_mass(name: &str, m: f64) -> Result<()> {
    if !(m.is_finite() && m > 0.0) {
        return Err(Error::InadmissibleParameters(format!(
            "{name} = {m} must be positive"
        )));
    }
    Ok(())
}

impl RawParams {
    pub fn new(m1: f64, m2: f64, a_prime: f64, b_prime: f64, c_prime: f64) -> Result<Self> {
        check_mass("m1", m1)?;
        check_mass("m2", m2)?;
        check_potential(a_prime, b_prime, c_prime)?;
        Ok(RawParams {
            m1,
            m2,
            a_prime,
            b_prime,
            c_prime,
        })
    }
}

impl ReducedParams {
    pub fn new(m: f64, a: f64, b: f64, c: f64) -> Result<Self> {
        check_mass("m", m)?;
        check_potential(a, b, c)?;
        Ok(ReducedParams { m, a, b, c })
    }
}

/// Pass to the coordinates `(m1/m2)^(1/4) x1` and `(m2/m1)^(1/4) x2`, in which
/// both masses become `sqrt(m1 m2)`.
pub fn reduce(raw: &RawParams) -> Result<ReducedParams> {
    let r = RawParams::new(raw.m1, raw.m2, raw.a_prime, raw.b_prime, raw.c_prime)?;
    let ratio = (r.m2 / r.m1).sqrt();
    ReducedParams::new(
        (r.m1 * r.m2).sqrt(),
        r.a_prime * ratio,
        r.b_prime / ratio,
        r.c_prime,
    )
}

/// Decouple by the rotation `tan(alpha) = C / (B - A)` and read off the
/// coupling strength and squeeze parameter.
pub fn normal_form(p: &ReducedParams) -> Result<NormalForm> {
    let ReducedParams { m, a, b, c } = ReducedParams::new(p.m, p.a, p.b, p.c)?;
    let s = (4.0 * a * b - c * c).sqrt();
    let r = (a - b).hypot(c);
    // (A + B + r)/s - 1 without cancellation: A + B - s = r^2 / (A + B + s)
    let eta = -0.5 * ((r + r * r / (a + b + s)) / s).ln_1p();
    let alpha = if c == 0.0 && a == b {
        0.0
    } else {
        c.atan2(b - a)
    };
    let k = 0.5 * s;
    Ok(NormalForm {
        k,
        eta,
        alpha,
        omega: (k / m).sqrt(),
    })
}

/// `(A, B, C)` from a normal form.
pub fn reconstruct(nf: &NormalForm) -> (f64, f64, f64) {
    let (sh, ch) = (0.5 * nf.alpha).sin_cos();
    let (up, down) = ((2.0 * nf.eta).exp(), (-2.0 * nf.eta).exp());
    let a = nf.k * (up * ch * ch + down * sh * sh);
    let b = nf.k * (up * sh * sh + down * ch * ch);
    // e^{-2 eta} - e^{2 eta}
    let c = nf.k * 2.0 * (-2.0 * nf.eta).sinh() * nf.alpha.sin();
    (a, b, c)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SpectrumVariant {
    /// Coupled system, levels `e^eta n1 + e^-eta n2 + 1`.
    CoupledH,
    /// `n1 + n2 + 1`.
    Uncoupled,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumSpec {
    pub n1: u32,
    pub n2: u32,
    pub variant: SpectrumVariant,
}

/// Energy in units of `omega`. The coupled variant needs a normal form.
pub fn spectrum(nf: Option<&NormalForm>, spec: SpectrumSpec) -> Result<f64> {
    let (n1, n2) = (f64::from(spec.n1), f64::from(spec.n2));
    match spec.variant {
        SpectrumVariant::Uncoupled => Ok(n1 + n2 + 1.0),
        SpectrumVariant::CoupledH => {
            let nf = nf.ok_or_else(|| {
                Error::InadmissibleParameters("coupled spectrum needs a normal form".into())
            })?;
            Ok(nf.eta.exp() * n1 + (-nf.eta).exp() * n2 + 1.0)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum QuadraticVariant {
    /// The coupled Hamiltonian in normal-mode coordinates.
    H,
    /// `e^eta (y1^2 + q2^2) + e^-eta (q1^2 + y2^2)`, halved.
    HPrime,
    /// Two unit oscillators.
    Decoupled,
}

/// Symmetric `Q` with `H = zeta^T Q zeta / 2` over `(y1, q1, y2, q2)`
/// (or `(y1, y2, q1, q2)` for the traditional ordering).
pub fn quadratic_form(variant: QuadraticVariant, eta: f64, ordering: Ordering) -> Matrix4<f64> {
    let (e, ie) = (eta.exp(), (-eta).exp());
    let d = match variant {
        QuadraticVariant::H => [e * e, 1.0, ie * ie, 1.0],
        QuadraticVariant::HPrime => [e, ie, ie, e],
        QuadraticVariant::Decoupled => [1.0; 4],
    };
    let d = match ordering {
        Ordering::Interleaved => d,
        Ordering::Traditional => [d[0], d[2], d[1], d[3]],
    };
    Matrix4::from_diagonal(&d.into())
}

/// `J Q`: Hamilton's equations `dzeta/dt = J Q zeta` for a quadratic
/// Hamiltonian.
pub fn flow_generator(q: &Matrix4<f64>, form: &SymplecticForm) -> Result<Matrix4<f64>> {
    if (q - q.transpose()).amax() > 1e-14 * q.amax().max(1.0) {
        return Err(Error::NotSymmetric("quadratic form".into()));
    }
    Ok(form.to_f64() * q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::phasespace::is_canonical_matrix;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * b.abs().max(1.0)
    }

    #[test]
    fn reduce_examples() {
        let r = reduce(&RawParams::new(1.0, 1.0, 1.0, 1.0, 0.0).unwrap()).unwrap();
        assert_eq!(
            r,
            ReducedParams {
                m: 1.0,
                a: 1.0,
                b: 1.0,
                c: 0.0
            }
        );
        let r = reduce(&RawParams::new(4.0, 1.0, 1.0, 1.0, 1.0).unwrap()).unwrap();
        assert_eq!(
            r,
            ReducedParams {
                m: 2.0,
                a: 0.5,
                b: 2.0,
                c: 1.0
            }
        );
        assert!(matches!(
            RawParams::new(1.0, 1.0, 1.0, 1.0, 2.0),
            Err(Error::InadmissibleParameters(_))
        ));
        assert!(RawParams::new(0.0, 1.0, 1.0, 1.0, 0.0).is_err());
    }

    #[test]
    fn reduction_preserves_the_potential() {
        // oracle: substitute the scaled coordinates into the raw potential
        let raw = RawParams::new(3.0, 0.7, 1.3, 2.9, -0.4).unwrap();
        let red = reduce(&raw).unwrap();
        // raw coordinates in terms of the rescaled ones
        let (s1, s2) = ((raw.m2 / raw.m1).powf(0.25), (raw.m1 / raw.m2).powf(0.25));
        let (x1, x2) = (0.37, -1.21);
        let v_raw = raw.a_prime * (s1 * x1).powi(2)
            + raw.b_prime * (s2 * x2).powi(2)
            + raw.c_prime * (s1 * x1) * (s2 * x2);
        let v_red = red.a * x1 * x1 + red.b * x2 * x2 + red.c * x1 * x2;
        assert!(close(v_raw, v_red, 1e-14));
        // kinetic: p1^2/m1 with p1 -> p1/s1 equals p1^2/m
        assert!(close(1.0 / (raw.m1 * s1 * s1), 1.0 / red.m, 1e-14));
    }

    #[test]
    fn normal_form_examples() {
        let nf = normal_form(&ReducedParams::new(1.0, 1.0, 1.0, 0.0).unwrap()).unwrap();
        assert_eq!((nf.k, nf.eta, nf.alpha, nf.omega), (1.0, 0.0, 0.0, 1.0));

        let nf = normal_form(&ReducedParams::new(1.0, 1.0, 2.0, 1.0).unwrap()).unwrap();
        assert!(close(nf.alpha, FRAC_PI_4, 1e-15));
        assert!(close(nf.k, 7f64.sqrt() / 2.0, 1e-15));
        let eta = -0.5 * ((3.0 + 2f64.sqrt()) / 7f64.sqrt()).ln();
        assert!(close(nf.eta, eta, 1e-14));
        assert!(close(nf.eta, -0.2554, 1e-3));

        let nf = normal_form(&ReducedParams::new(1.0, 1.0, 1.0, 1.0).unwrap()).unwrap();
        assert!(close(nf.alpha, FRAC_PI_2, 1e-15));
        assert!(close(nf.k, 3f64.sqrt() / 2.0, 1e-15));
        assert!(close(nf.eta, -0.25 * 3f64.ln(), 1e-14));
    }

    #[test]
    fn reconstruct_examples() {
        let (a, b, c) = reconstruct(&NormalForm {
            k: 1.0,
            eta: 0.0,
            alpha: 1.234,
            omega: 1.0,
        });
        assert!(close(a, 1.0, 1e-15) && close(b, 1.0, 1e-15) && c == 0.0);
        let nf = NormalForm {
            k: 3f64.sqrt() / 2.0,
            eta: -0.25 * 3f64.ln(),
            alpha: FRAC_PI_2,
            omega: 1.0,
        };
        let (a, b, c) = reconstruct(&nf);
        assert!(close(a, 1.0, 1e-14) && close(b, 1.0, 1e-14) && close(c, 1.0, 1e-14));
    }

    #[test]
    fn decoupling_rotation_diagonalizes() {
        // oracle: rotate the potential matrix [[A, C/2], [C/2, B]] by alpha/2
        // and check it becomes diagonal with eigenvalues K e^{+-2 eta}
        let p = ReducedParams::new(1.0, 2.3, 0.8, -1.1).unwrap();
        let nf = normal_form(&p).unwrap();
        let (s, c) = (0.5 * nf.alpha).sin_cos();
        let rot = nalgebra::Matrix2::new(c, -s, s, c);
        let v = nalgebra::Matrix2::new(p.a, p.c / 2.0, p.c / 2.0, p.b);
        let d = rot * v * rot.transpose();
        assert!(d[(0, 1)].abs() < 1e-14);
        assert!(close(d[(0, 0)], nf.k * (2.0 * nf.eta).exp(), 1e-14));
        assert!(close(d[(1, 1)], nf.k * (-2.0 * nf.eta).exp(), 1e-14));
    }

    #[test]
    fn spectrum_values() {
        let unc = |n1, n2| SpectrumSpec {
            n1,
            n2,
            variant: SpectrumVariant::Uncoupled,
        };
        let cpl = |n1, n2| SpectrumSpec {
            n1,
            n2,
            variant: SpectrumVariant::CoupledH,
        };
        assert_eq!(spectrum(None, unc(0, 0)).unwrap(), 1.0);
        assert!(spectrum(None, cpl(0, 0)).is_err());
        let flat = NormalForm {
            k: 1.0,
            eta: 0.0,
            alpha: 0.0,
            omega: 1.0,
        };
        for n1 in 0..=5 {
            for n2 in 0..=5 {
                assert_eq!(
                    spectrum(Some(&flat), cpl(n1, n2)).unwrap(),
                    spectrum(None, unc(n1, n2)).unwrap()
                );
            }
        }
        let nf = NormalForm {
            eta: -0.25 * 3f64.ln(),
            ..flat
        };
        let e10 = spectrum(Some(&nf), cpl(1, 0)).unwrap();
        assert!(close(e10, 3f64.powf(-0.25) + 1.0, 1e-15));
        assert!(close(e10, 1.7598, 1e-4));
        assert!(e10 < spectrum(Some(&nf), cpl(0, 1)).unwrap());
    }

    #[test]
    fn quadratic_forms() {
        for o in [Ordering::Interleaved, Ordering::Traditional] {
            assert_eq!(
                quadratic_form(QuadraticVariant::Decoupled, 0.4, o),
                Matrix4::identity()
            );
            assert_eq!(
                quadratic_form(QuadraticVariant::HPrime, 0.0, o),
                Matrix4::identity()
            );
        }
        let eta: f64 = -0.3;
        let h = quadratic_form(QuadraticVariant::H, eta, Ordering::Interleaved);
        // (1/2) e^eta (e^-eta q1^2 + e^eta y1^2) + (1/2) e^-eta (e^eta q2^2 + e^-eta y2^2)
        let (y1, q1, y2, q2) = (0.3, -0.8, 1.1, 0.5);
        let z = nalgebra::Vector4::new(y1, q1, y2, q2);
        let direct = 0.5 * eta.exp() * ((-eta).exp() * q1 * q1 + eta.exp() * y1 * y1)
            + 0.5 * (-eta).exp() * (eta.exp() * q2 * q2 + (-eta).exp() * y2 * y2);
        assert!(close(0.5 * (z.transpose() * h * z)[0], direct, 1e-15));
        let t = quadratic_form(QuadraticVariant::H, eta, Ordering::Traditional);
        assert_eq!(t[(1, 1)], h[(2, 2)]);
    }

    #[test]
    fn flows() {
        let j = SymplecticForm::j_matrix(Ordering::Interleaved);
        let f = flow_generator(&Matrix4::identity(), &j).unwrap();
        assert_eq!(f, j.to_f64());
        let q = quadratic_form(QuadraticVariant::HPrime, 0.7, Ordering::Interleaved);
        let f = flow_generator(&q, &j).unwrap();
        assert_eq!(f.trace(), 0.0);
        for t in [0.1, 1.0] {
            assert!(is_canonical_matrix(&(f * t).exp(), &j, 1e-12));
        }
        let mut bad = Matrix4::identity();
        bad[(0, 1)] = 1.0;
        assert!(matches!(
            flow_generator(&bad, &j),
            Err(Error::NotSymmetric(_))
        ));
    }
}
