//! Exact rational and Gaussian-rational arithmetic.
//!
//! Every generator matrix in the crate is an [`ExactMatrix`] whose entries are
//! [`GaussRational`]s, i.e. `p/q + i r/s` with arbitrary-precision integers.
//! Products, sums and brackets never round.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(BigRational);

impl Rational {
    /// `numer/denom`; panics if `denom == 0`.
    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Rational(BigRational::new(numer.into(), denom.into()))
    }

    pub fn from_int(value: i64) -> Self {
        Rational(BigRational::from_integer(value.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn half() -> Self {
        Rational::new(1, 2)
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::zero()
    }
}

impl From<i64> for Rational {
    fn from(value: i64) -> Self {
        Rational::from_int(value)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("invalid rational {s:?}"));
        match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                Ok(Rational(BigRational::new(n, d)))
            }
            None => {
                let n: BigInt = s.parse().map_err(|_| bad())?;
                Ok(Rational(BigRational::from_integer(n)))
            }
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! forward_binop {
    ($ty:ident, $trait:ident, $method:ident) => {
        impl $trait<$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a $ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: &'a $ty) -> $ty {
                (&self).$method(rhs)
            }
        }
        impl<'a> $trait<$ty> for &'a $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                self.$method(&rhs)
            }
        }
    };
}

impl<'b> Add<&'b Rational> for &Rational {
    type Output = Rational;
    fn add(self, rhs: &'b Rational) -> Rational {
        Rational(&self.0 + &rhs.0)
    }
}

impl<'b> Sub<&'b Rational> for &Rational {
    type Output = Rational;
    fn sub(self, rhs: &'b Rational) -> Rational {
        Rational(&self.0 - &rhs.0)
    }
}

impl<'b> Mul<&'b Rational> for &Rational {
    type Output = Rational;
    fn mul(self, rhs: &'b Rational) -> Rational {
        Rational(&self.0 * &rhs.0)
    }
}

/// Panics on division by zero, like the integer types.
impl<'b> Div<&'b Rational> for &Rational {
    type Output = Rational;
    fn div(self, rhs: &'b Rational) -> Rational {
        Rational(&self.0 / &rhs.0)
    }
}

forward_binop!(Rational, Add, add);
forward_binop!(Rational, Sub, sub);
forward_binop!(Rational, Mul, mul);
forward_binop!(Rational, Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

/// Complex number with rational real and imaginary parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GaussRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussRational { re, im }
    }

    pub fn zero() -> Self {
        GaussRational::default()
    }

    pub fn one() -> Self {
        GaussRational::real(Rational::one())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussRational::new(Rational::zero(), Rational::one())
    }

    pub fn real(re: Rational) -> Self {
        GaussRational::new(re, Rational::zero())
    }

    pub fn imag(im: Rational) -> Self {
        GaussRational::new(Rational::zero(), im)
    }

    /// `p/q` as a real Gaussian rational.
    pub fn ratio(p: i64, q: i64) -> Self {
        GaussRational::real(Rational::new(p, q))
    }

    /// `i p/q`.
    pub fn i_ratio(p: i64, q: i64) -> Self {
        GaussRational::imag(Rational::new(p, q))
    }

    pub fn from_int(value: i64) -> Self {
        GaussRational::real(Rational::from_int(value))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRational::new(self.re.clone(), -&self.im)
    }

    /// Multiplication by `i`.
    pub fn times_i(&self) -> Self {
        GaussRational::new(-&self.im, self.re.clone())
    }

    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Self> {
        let n = self.norm_sqr().recip()?;
        Some(GaussRational::new(&self.re * &n, -(&self.im * &n)))
    }

    pub fn to_c64(&self) -> num_complex::Complex64 {
        num_complex::Complex64::new(self.re.to_f64(), self.im.to_f64())
    }
}

impl From<Rational> for GaussRational {
    fn from(re: Rational) -> Self {
        GaussRational::real(re)
    }
}

impl From<i64> for GaussRational {
    fn from(value: i64) -> Self {
        GaussRational::from_int(value)
    }
}

impl fmt::Display for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // compact forms used by the pretty printers: "1/2", "-i/2", "1+2i/3"
        let imag = |f: &mut fmt::Formatter<'_>, im: &Rational, lead: bool| -> fmt::Result {
            let sign = if im.is_negative() {
                "-"
            } else if lead {
                ""
            } else {
                "+"
            };
            let a = im.abs();
            let numer = a.numer().to_string();
            let numer = if numer == "1" { String::new() } else { numer };
            if a.denom().is_one() {
                write!(f, "{sign}{numer}i")
            } else {
                write!(f, "{sign}{numer}i/{}", a.denom())
            }
        };
        match (self.re.is_zero(), self.im.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", self.re),
            (true, false) => imag(f, &self.im, true),
            (false, false) => {
                write!(f, "{}", self.re)?;
                imag(f, &self.im, false)
            }
        }
    }
}

impl<'b> Add<&'b GaussRational> for &GaussRational {
    type Output = GaussRational;
    fn add(self, rhs: &'b GaussRational) -> GaussRational {
        GaussRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl<'b> Sub<&'b GaussRational> for &GaussRational {
    type Output = GaussRational;
    fn sub(self, rhs: &'b GaussRational) -> GaussRational {
        GaussRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl<'b> Mul<&'b GaussRational> for &GaussRational {
    type Output = GaussRational;
    fn mul(self, rhs: &'b GaussRational) -> GaussRational {
        // skip bigint work for the very common zero entries
        if self.is_zero() || rhs.is_zero() {
            return GaussRational::zero();
        }
        GaussRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

/// Panics on division by zero.
#[allow(clippy::suspicious_arithmetic_impl)]
impl<'b> Div<&'b GaussRational> for &GaussRational {
    type Output = GaussRational;
    fn div(self, rhs: &'b GaussRational) -> GaussRational {
        self * &rhs.inv().expect("division by zero")
    }
}

forward_binop!(GaussRational, Add, add);
forward_binop!(GaussRational, Sub, sub);
forward_binop!(GaussRational, Mul, mul);
forward_binop!(GaussRational, Div, div);

impl Neg for GaussRational {
    type Output = GaussRational;
    fn neg(self) -> GaussRational {
        GaussRational::new(-self.re, -self.im)
    }
}

impl Neg for &GaussRational {
    type Output = GaussRational;
    fn neg(self) -> GaussRational {
        GaussRational::new(-&self.re, -&self.im)
    }
}

/// Square `n x n` matrix of Gaussian rationals, stored row-major.
///
/// Values are immutable; every operation returns a fresh matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    n: usize,
    entries: Vec<GaussRational>,
}

impl ExactMatrix {
    pub fn zeros(n: usize) -> Self {
        ExactMatrix {
            n,
            entries: vec![GaussRational::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |r, c| {
            if r == c {
                GaussRational::one()
            } else {
                GaussRational::zero()
            }
        })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> GaussRational) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                entries.push(f(r, c));
            }
        }
        ExactMatrix { n, entries }
    }

    pub fn from_rows(rows: Vec<Vec<GaussRational>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::DimensionMismatch("empty matrix".into()));
        }
        if let Some(bad) = rows.iter().position(|r| r.len() != n) {
            return Err(Error::DimensionMismatch(format!(
                "row {bad} has {} entries, expected {n}",
                rows[bad].len()
            )));
        }
        Ok(ExactMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Integer-entried real matrix, handy for permutations and `J` forms.
    pub fn from_int_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| GaussRational::from_int(v)).collect())
                .collect(),
        )
    }

    /// Sparse constructor: zero except for the listed `(row, col, value)` entries.
    pub fn from_entries(n: usize, items: &[(usize, usize, GaussRational)]) -> Self {
        let mut m = Self::zeros(n);
        for (r, c, v) in items {
            m.entries[r * n + c] = v.clone();
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> &GaussRational {
        &self.entries[row * self.n + col]
    }

    pub fn entries(&self) -> &[GaussRational] {
        &self.entries
    }

    pub fn rows(&self) -> impl Iterator<Item = &[GaussRational]> {
        self.entries.chunks(self.n)
    }

    fn check_dim(&self, other: &ExactMatrix, op: &str) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(format!(
                "{op}: {}x{0} vs {}x{1}",
                self.n, other.n
            )));
        }
        Ok(())
    }

    pub fn mat_mul(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        self.check_dim(other, "mat_mul")?;
        let n = self.n;
        Ok(Self::from_fn(n, |r, c| {
            let mut acc = GaussRational::zero();
            for k in 0..n {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                let b = other.get(k, c);
                if b.is_zero() {
                    continue;
                }
                acc = acc + a * b;
            }
            acc
        }))
    }

    pub fn mat_add(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        self.check_dim(other, "mat_add")?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn mat_sub(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        self.check_dim(other, "mat_sub")?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    fn zip_with(
        &self,
        other: &ExactMatrix,
        f: impl Fn(&GaussRational, &GaussRational) -> GaussRational,
    ) -> ExactMatrix {
        ExactMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    pub fn map(&self, f: impl Fn(&GaussRational) -> GaussRational) -> ExactMatrix {
        ExactMatrix {
            n: self.n,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn scalar_mul(&self, s: &GaussRational) -> ExactMatrix {
        self.map(|e| s * e)
    }

    pub fn neg(&self) -> ExactMatrix {
        self.map(|e| -e)
    }

    pub fn times_i(&self) -> ExactMatrix {
        self.map(GaussRational::times_i)
    }

    pub fn transpose(&self) -> ExactMatrix {
        Self::from_fn(self.n, |r, c| self.get(c, r).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(GaussRational::is_zero)
    }

    pub fn is_real(&self) -> bool {
        self.entries.iter().all(GaussRational::is_real)
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }

    pub fn is_antisymmetric(&self) -> bool {
        *self == self.transpose().neg()
    }

    pub fn trace(&self) -> GaussRational {
        (0..self.n).fold(GaussRational::zero(), |acc, k| acc + self.get(k, k))
    }

    /// Real entries as `f64`, row-major; fails when any entry has an
    /// imaginary part.
    pub fn to_real_f64(&self) -> Result<Vec<f64>> {
        if let Some(k) = self.entries.iter().position(|e| !e.is_real()) {
            return Err(Error::NotReal(format!(
                "entry ({}, {}) = {}",
                k / self.n,
                k % self.n,
                self.entries[k]
            )));
        }
        Ok(self.entries.iter().map(|e| e.re.to_f64()).collect())
    }

    pub fn to_c64(&self) -> Vec<num_complex::Complex64> {
        self.entries.iter().map(GaussRational::to_c64).collect()
    }

    /// Column-aligned text rendering.
    pub fn pretty(&self) -> String {
        let cells: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        let width = cells.iter().map(|s| s.len()).max().unwrap_or(1);
        let mut out = String::new();
        for row in cells.chunks(self.n) {
            out.push('[');
            let line: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
            out.push_str(&line.join("  "));
            out.push_str("]\n");
        }
        out
    }
}

/// `sum_i coeffs[i] * mats[i]`, exactly.
pub fn mat_linear(coeffs: &[GaussRational], mats: &[&ExactMatrix]) -> Result<ExactMatrix> {
    if coeffs.len() != mats.len() {
        return Err(Error::DimensionMismatch(format!(
            "mat_linear: {} coefficients for {} matrices",
            coeffs.len(),
            mats.len()
        )));
    }
    let first = mats
        .first()
        .ok_or_else(|| Error::DimensionMismatch("mat_linear: empty input".into()))?;
    let mut acc = ExactMatrix::zeros(first.n);
    for (c, m) in coeffs.iter().zip(mats) {
        if c.is_zero() {
            acc.check_dim(m, "mat_linear")?;
            continue;
        }
        acc = acc.mat_add(&m.scalar_mul(c))?;
    }
    Ok(acc)
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    n: usize,
    entries: Vec<Vec<GaussRational>>,
}

impl Serialize for ExactMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixJson {
            n: self.n,
            entries: self.rows().map(|r| r.to_vec()).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ExactMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = MatrixJson::deserialize(deserializer)?;
        let m = ExactMatrix::from_rows(raw.entries).map_err(serde::de::Error::custom)?;
        if m.n != raw.n {
            return Err(serde::de::Error::custom(format!(
                "declared n = {} but entries are {}x{}",
                raw.n, m.n, m.n
            )));
        }
        Ok(m)
    }
}
