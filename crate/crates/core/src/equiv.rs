//! Equivalence, inverse periods and self-inverse periods for the family
//! `x_m = m/q + √v`, `gcd(m, q) = 1`.
//!
//! All three questions reduce to one divisibility test against the invariant
//! `q0` from [`crate::pell`]: `x_m ~ x_n` iff `q0 | m - n`, the periods are
//! mutually inverse iff `q0 | gcd(m + n, q)`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{euler_phi, mod_inverse};
use crate::error::{Error, Result};
use crate::pell::{self, UnitGroupData};
use crate::surd::{make_surd, Surd};

/// An integer 2×2 matrix `[[a, b], [c, d]]` acting by `x ↦ (ax + b)/(cx + d)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl Mat2 {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>, d: impl Into<BigInt>) -> Self {
        Mat2 {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
        }
    }

    pub fn identity() -> Self {
        Mat2::new(1, 0, 0, 1)
    }

    /// `[[1, j], [0, 1]]`, i.e. `x ↦ x + j`.
    pub fn translation(j: impl Into<BigInt>) -> Self {
        Mat2::new(1, j, 0, 1)
    }

    /// `[[a, 1], [1, 0]]`, i.e. `x ↦ a + 1/x`.
    pub fn partial_quotient(a: impl Into<BigInt>) -> Self {
        Mat2::new(a, 1, 1, 0)
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    /// Matrix product; as Möbius maps, `(self * rhs)(x) = self(rhs(x))`.
    pub fn mul(&self, rhs: &Mat2) -> Mat2 {
        Mat2 {
            a: &self.a * &rhs.a + &self.b * &rhs.c,
            b: &self.a * &rhs.b + &self.b * &rhs.d,
            c: &self.c * &rhs.a + &self.d * &rhs.c,
            d: &self.c * &rhs.b + &self.d * &rhs.d,
        }
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

/// A [`Mat2`] with determinant `±1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GlMatrix(Mat2);

impl GlMatrix {
    pub fn new(m: Mat2) -> Result<Self> {
        let det = m.det();
        if det.abs().is_one() {
            Ok(GlMatrix(m))
        } else {
            Err(Error::NotUnimodular(det.to_string()))
        }
    }

    pub fn as_mat2(&self) -> &Mat2 {
        &self.0
    }

    pub fn into_mat2(self) -> Mat2 {
        self.0
    }

    pub fn det(&self) -> BigInt {
        self.0.det()
    }
}

impl TryFrom<Mat2> for GlMatrix {
    type Error = Error;

    fn try_from(m: Mat2) -> Result<Self> {
        GlMatrix::new(m)
    }
}

impl std::ops::Deref for GlMatrix {
    type Target = Mat2;

    fn deref(&self) -> &Mat2 {
        &self.0
    }
}

impl fmt::Display for GlMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `(ax + b)/(cx + d)` evaluated exactly in `Q(√D)`.
pub fn apply_moebius(m: &Mat2, x: &Surd) -> Result<Surd> {
    if m.c.is_zero() && m.d.is_zero() {
        return Err(Error::DegenerateRow);
    }
    // numerator α + β√D, denominator γ + δ√D
    let alpha = &m.a * x.p() + &m.b * x.q();
    let beta = &m.a;
    let gamma = &m.c * x.p() + &m.d * x.q();
    let delta = &m.c;
    let norm = &gamma * &gamma - delta * delta * x.d();
    let rational = &alpha * &gamma - beta * delta * x.d();
    let irrational = beta * &gamma - &alpha * delta;
    if irrational.is_zero() {
        return Err(Error::SingularMatrix);
    }
    // (rational + irrational·√D)/norm with irrational·√D = ±√(irrational²·D)
    let radicand = &irrational * &irrational * x.d();
    if irrational.is_positive() {
        Surd::new(rational, norm, radicand)
    } else {
        Surd::new(-rational, -norm, radicand)
    }
}

/// Grouping of `{m : gcd(m, q) = 1, 0 <= m < q}` into equivalence classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassReport {
    pub v: u64,
    pub q: u64,
    pub q0: u64,
    pub num_classes: u64,
    pub class_size: u64,
    pub classes: Vec<Vec<u64>>,
}

/// The numbers `m/q + √v` for fixed `v` and `q`, with their unit data computed once.
#[derive(Clone, Debug)]
pub struct Family {
    data: UnitGroupData,
}

impl Family {
    pub fn new(v: u64, q: u64) -> Result<Self> {
        Ok(Family {
            data: pell::unit_group_data(v, q)?,
        })
    }

    pub fn from_data(data: UnitGroupData) -> Self {
        Family { data }
    }

    pub fn v(&self) -> u64 {
        self.data.v
    }

    pub fn q(&self) -> u64 {
        self.data.q
    }

    pub fn q0(&self) -> u64 {
        self.data.q0
    }

    pub fn unit_data(&self) -> &UnitGroupData {
        &self.data
    }

    /// `m mod q` in `[0, q)`.
    pub fn reduce(&self, m: i64) -> u64 {
        (m as i128).rem_euclid(self.q() as i128) as u64
    }

    fn coprime_residue(&self, m: i64) -> Result<u64> {
        let r = self.reduce(m);
        if r.gcd(&self.q()) != 1 {
            return Err(Error::NotCoprime { m, q: self.q() });
        }
        Ok(r)
    }

    /// `m/q + √v`.
    pub fn member(&self, m: i64) -> Surd {
        make_surd(m, self.q(), self.v()).expect("family radicand is not a square")
    }

    /// Coprime residues `0 <= m < q`.
    pub fn residues(&self) -> Vec<u64> {
        let q = self.q();
        (0..q).filter(|m| m.gcd(&q) == 1).collect()
    }

    pub fn equivalent(&self, m: i64, n: i64) -> Result<bool> {
        let m = self.coprime_residue(m)?;
        let n = self.coprime_residue(n)?;
        let diff = (m as i128 - n as i128).unsigned_abs() as u64;
        Ok(diff.gcd(&self.q()).is_multiple_of(self.q0()))
    }

    pub fn inverse_periods(&self, m: i64, n: i64) -> Result<bool> {
        let m = self.coprime_residue(m)?;
        let n = self.coprime_residue(n)?;
        Ok((m + n).gcd(&self.q()).is_multiple_of(self.q0()))
    }

    pub fn self_inverse(&self, m: i64) -> Result<bool> {
        self.coprime_residue(m)?;
        let q1: u64 = if self.q().is_multiple_of(2) { 2 } else { 1 };
        Ok(q1.is_multiple_of(self.q0()))
    }

    pub fn class_summary(&self) -> ClassReport {
        let q0 = self.q0();
        let mut classes: Vec<Vec<u64>> = Vec::new();
        for m in self.residues() {
            match classes.iter_mut().find(|c| c[0] % q0 == m % q0) {
                Some(class) => class.push(m),
                None => classes.push(vec![m]),
            }
        }
        let phi_q0 = euler_phi(q0);
        ClassReport {
            v: self.v(),
            q: self.q(),
            q0,
            num_classes: phi_q0,
            class_size: euler_phi(self.q()) / phi_q0,
            classes,
        }
    }

    /// A matrix in `GL(2, Z)` carrying `m/q + √v` to `n/q + √v`.
    pub fn witness_matrix(&self, m: i64, n: i64) -> Result<GlMatrix> {
        if !self.equivalent(m, n)? {
            return Err(Error::NotEquivalent {
                v: self.v(),
                q: self.q(),
                m,
                n,
            });
        }
        let (m_red, n_red) = (self.reduce(m), self.reduce(n));
        let core = self.reduced_witness(m_red, n_red);
        // x_m = x_{m_red} + shift_m, likewise for n
        let q = self.q() as i128;
        let shift_m = (m as i128 - m_red as i128) / q;
        let shift_n = (n as i128 - n_red as i128) / q;
        let full = Mat2::translation(shift_n)
            .mul(&core)
            .mul(&Mat2::translation(-shift_m));
        GlMatrix::new(full)
    }

    /// Witness for reduced residues, following the constructive proof:
    /// pick a unit `r + c√v` with `gcd(c, q²) = q·q1`, raise it to a power `k`
    /// prime to `q` that makes the integrality congruence hold, then read off
    /// `d`, `a`, `b`.
    fn reduced_witness(&self, m: u64, n: u64) -> Mat2 {
        if m == n {
            return Mat2::identity();
        }
        let q = self.q();
        let (mb, nb, qb) = (BigInt::from(m), BigInt::from(n), BigInt::from(q));
        let diff = &mb - &nb;
        let q1 = diff.abs().gcd(&qb);
        let m1 = &diff / &q1;
        let q1_u: u64 = (&q1).try_into().expect("q1 divides q");
        let base = pell::solution_from_data(&self.data, q1_u)
            .expect("q1 divides q")
            .expect("equivalence guarantees a unit with gcd(c, q^2) = q*q1");
        let modulus = &qb / &q1;
        let c1 = base.c() / (&qb * &q1);

        // k·c1·n·m + r·m1 ≡ 0 (mod q/q1); every factor is a unit mod q/q1.
        let coeff = (&c1 * &nb * &mb).mod_floor(&modulus);
        let inv = mod_inverse(&coeff, &modulus).expect("c1·n·m is invertible mod q/q1");
        let target = (-(base.r() * &m1)).mod_floor(&modulus);
        let mut k = (target * inv).mod_floor(&modulus);
        if k.is_zero() {
            k = modulus.clone();
        }
        while !k.gcd(&qb).is_one() {
            k += &modulus;
        }
        let k: u64 = (&k).try_into().expect("k is below 2q");
        let unit = base.pow(k);
        let (r, c) = (unit.r(), unit.c());

        let d = r - c * &mb / &qb;
        let a = c * (&mb + &nb) / &qb + &d;
        let numerator = -(&d * &diff * &qb) - c * &mb * &mb + c * BigInt::from(self.v()) * &qb * &qb;
        let q2 = &qb * &qb;
        debug_assert!(numerator.is_multiple_of(&q2));
        let b = numerator / q2;
        Mat2 {
            a,
            b,
            c: c.clone(),
            d,
        }
    }
}

pub fn equivalent(v: u64, q: u64, m: i64, n: i64) -> Result<bool> {
    Family::new(v, q)?.equivalent(m, n)
}

pub fn inverse_periods_decide(v: u64, q: u64, m: i64, n: i64) -> Result<bool> {
    Family::new(v, q)?.inverse_periods(m, n)
}

pub fn self_inverse_decide(v: u64, q: u64, m: i64) -> Result<bool> {
    Family::new(v, q)?.self_inverse(m)
}

pub fn class_summary(v: u64, q: u64) -> Result<ClassReport> {
    Ok(Family::new(v, q)?.class_summary())
}

pub fn witness_matrix(v: u64, q: u64, m: i64, n: i64) -> Result<GlMatrix> {
    Family::new(v, q)?.witness_matrix(m, n)
}
