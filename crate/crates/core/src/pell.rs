//! Units of `Z[√v]`, i.e. solutions of `r² - c²v = ±1`.
//!
//! The invariant `q0` of a family `m/q + √v` only depends on the first power
//! `ε^k0` of the fundamental unit `ε` whose `√v`-coefficient is divisible by
//! `q`. Every other unit with `q | c` is `±(ε^k0)^j` up to conjugation, and
//! for those
//!
//! ```text
//! c_j ≡ j · r0^(j-1) · c0  (mod q²)
//! ```
//!
//! so `gcd(c_j, q²) = gcd(j·c0, q²)`, which is smallest at `j = 1`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::is_perfect_square;
use crate::error::{Error, Result};
use crate::surd::make_surd;

/// Sign of `r² - c²v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Norm {
    Plus,
    Minus,
}

impl Norm {
    pub fn as_i32(self) -> i32 {
        match self {
            Norm::Plus => 1,
            Norm::Minus => -1,
        }
    }

    fn times(self, other: Norm) -> Norm {
        if self == other {
            Norm::Plus
        } else {
            Norm::Minus
        }
    }
}

impl fmt::Display for Norm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Norm::Plus => "+1",
            Norm::Minus => "-1",
        })
    }
}

/// A unit `r + c√v` of `Z[√v]`, stored with `r, c >= 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Unit {
    v: u64,
    r: BigInt,
    c: BigInt,
    norm: Norm,
}

impl Unit {
    /// Checks `r² - c²v = ±1`. Signs of `r` and `c` are dropped, which maps
    /// the unit to `±` itself or its conjugate.
    pub fn new(v: u64, r: BigInt, c: BigInt) -> Result<Self> {
        let (r, c) = (r.abs(), c.abs());
        let n = &r * &r - &c * &c * BigInt::from(v);
        let norm = if n.is_one() {
            Norm::Plus
        } else if n == -BigInt::one() {
            Norm::Minus
        } else {
            return Err(Error::NotAUnit {
                v,
                r: r.to_string(),
                c: c.to_string(),
            });
        };
        Ok(Unit { v, r, c, norm })
    }

    pub fn one(v: u64) -> Unit {
        Unit {
            v,
            r: BigInt::one(),
            c: BigInt::zero(),
            norm: Norm::Plus,
        }
    }

    pub fn v(&self) -> u64 {
        self.v
    }

    pub fn r(&self) -> &BigInt {
        &self.r
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }

    pub fn norm(&self) -> Norm {
        self.norm
    }

    /// Exact product in `Z[√v]`.
    pub fn mul(&self, other: &Unit) -> Unit {
        assert_eq!(self.v, other.v, "units from different rings");
        let v = BigInt::from(self.v);
        Unit {
            v: self.v,
            r: &self.r * &other.r + &self.c * &other.c * &v,
            c: &self.r * &other.c + &self.c * &other.r,
            norm: self.norm.times(other.norm),
        }
    }

    /// Exact `(r + c√v)^k` by square-and-multiply.
    pub fn pow(&self, k: u64) -> Unit {
        let mut acc = Unit::one(self.v);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// `(r', c') mod modulus` where `r' + c'√v = (r + c√v)^k`, computed in `Z[√v]/modulus`.
    pub fn pow_mod(&self, k: u64, modulus: &BigInt) -> (BigInt, BigInt) {
        let v = BigInt::from(self.v);
        let mulmod = |(a, b): (&BigInt, &BigInt), (x, y): (&BigInt, &BigInt)| {
            (
                (a * x + b * y * &v).mod_floor(modulus),
                (a * y + b * x).mod_floor(modulus),
            )
        };
        let mut acc = (BigInt::one().mod_floor(modulus), BigInt::zero());
        let mut base = (self.r.mod_floor(modulus), self.c.mod_floor(modulus));
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = mulmod((&acc.0, &acc.1), (&base.0, &base.1));
            }
            k >>= 1;
            if k > 0 {
                base = mulmod((&base.0, &base.1), (&base.0, &base.1));
            }
        }
        acc
    }
}

impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}*sqrt({}) (norm {})", self.r, self.c, self.v, self.norm)
    }
}

/// The smallest unit `s + t√v` with `s, t >= 1`.
///
/// Taken from the convergent `p/q` of `√v` just before the end of the first
/// period; `p² - v q² = (-1)^ℓ` for period length `ℓ`.
pub fn fundamental_unit(v: u64) -> Result<Unit> {
    let x = make_surd(0, 1, v)?;
    let expansion = x.expand();
    let period = expansion.period();
    let quotients = expansion
        .preperiod()
        .iter()
        .chain(period[..period.len() - 1].iter());
    let (mut h_prev, mut h) = (BigInt::zero(), BigInt::one());
    let (mut k_prev, mut k) = (BigInt::one(), BigInt::zero());
    for a in quotients {
        let h_next = a * &h + &h_prev;
        let k_next = a * &k + &k_prev;
        h_prev = std::mem::replace(&mut h, h_next);
        k_prev = std::mem::replace(&mut k, k_next);
    }
    Unit::new(v, h, k)
}

/// Default number of powers examined when searching for `k0`.
pub fn default_scan_bound(q: u64) -> u64 {
    4 * q * q
}

/// Fundamental unit together with the data `k0`, `(r0, c0) mod q²` and `q0` for the modulus `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitGroupData {
    pub v: u64,
    pub q: u64,
    pub fundamental: Unit,
    /// Smallest `k >= 1` with `q | c_k` for `ε^k = r_k + c_k√v`.
    pub k0: u64,
    pub r0_mod: BigInt,
    pub c0_mod: BigInt,
    /// `gcd(c0, q²)/q`; the smallest divisor `q1` of `q` for which some unit has `gcd(c, q²) = q·q1`.
    pub q0: u64,
}

impl UnitGroupData {
    pub fn s(&self) -> &BigInt {
        self.fundamental.r()
    }

    pub fn t(&self) -> &BigInt {
        self.fundamental.c()
    }

    /// The exact unit `ε^k0`.
    pub fn base_unit(&self) -> Unit {
        self.fundamental.pow(self.k0)
    }
}

pub fn unit_group_data(v: u64, q: u64) -> Result<UnitGroupData> {
    unit_group_data_with_bound(v, q, default_scan_bound(q))
}

/// As [`unit_group_data`], with an explicit cap on the `k0` scan.
pub fn unit_group_data_with_bound(v: u64, q: u64, bound: u64) -> Result<UnitGroupData> {
    if q == 0 {
        return Err(Error::ZeroDenominator);
    }
    if is_perfect_square(&BigInt::from(v)) {
        return Err(Error::PerfectSquareRadicand(v.to_string()));
    }
    let fundamental = fundamental_unit(v)?;
    let modulus = BigInt::from(q);
    let vb = BigInt::from(v);
    let s = fundamental.r().mod_floor(&modulus);
    let t = fundamental.c().mod_floor(&modulus);
    let (mut r, mut c) = (s.clone(), t.clone());
    let mut k0 = 1u64;
    while !c.is_zero() {
        if k0 >= bound {
            return Err(Error::ScanBoundExceeded { q, bound });
        }
        let next_r = (&r * &s + &c * &t * &vb).mod_floor(&modulus);
        let next_c = (&r * &t + &c * &s).mod_floor(&modulus);
        r = next_r;
        c = next_c;
        k0 += 1;
    }
    let q2 = &modulus * &modulus;
    let (r0_mod, c0_mod) = fundamental.pow_mod(k0, &q2);
    let g = c0_mod.gcd(&q2);
    let q0 = (g / &modulus)
        .try_into()
        .expect("q0 divides q and fits in u64");
    Ok(UnitGroupData {
        v,
        q,
        fundamental,
        k0,
        r0_mod,
        c0_mod,
        q0,
    })
}

/// A unit with `gcd(c, q²) = q·q1`, or `None` when no such unit exists.
pub fn solution_with_gcd(v: u64, q: u64, q1: u64) -> Result<Option<Unit>> {
    let data = unit_group_data(v, q)?;
    solution_from_data(&data, q1)
}

/// [`solution_with_gcd`] reusing precomputed unit data.
pub fn solution_from_data(data: &UnitGroupData, q1: u64) -> Result<Option<Unit>> {
    let q = data.q;
    if q1 == 0 || !q.is_multiple_of(q1) {
        return Err(Error::InvalidDivisor { q, q1 });
    }
    if !q1.is_multiple_of(data.q0) {
        return Ok(None);
    }
    if q1 == q {
        return Ok(Some(Unit::one(data.v)));
    }
    // gcd(j·c0, q²) = q·q0·gcd(j, q/q0), and j = q1/q0 divides q/q0.
    let unit = data.fundamental.pow(data.k0 * (q1 / data.q0));
    debug_assert_eq!(
        unit.c().gcd(&BigInt::from(q * q)),
        BigInt::from(q * q1)
    );
    Ok(Some(unit))
}
