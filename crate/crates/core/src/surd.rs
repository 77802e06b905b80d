//! Exact quadratic irrationals `(P + √D)/Q` and their continued fractions.
//!
//! A [`Surd`] always satisfies `Q | D - P²`. With that invariant the
//! complete-quotient recurrence
//!
//! ```text
//! a  = floor((P + √D)/Q)
//! P' = a·Q - P
//! Q' = (D - P'²)/Q
//! ```
//!
//! stays in the integers, and the pair `(P, Q)` identifies each complete
//! quotient, so the period shows up as the first repeated state.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::is_perfect_square;
use crate::error::{Error, Result};

/// The quadratic irrational `(P + √D)/Q`.
///
/// Equality compares values, not representations: `(1 + √2)/1` equals
/// `(2 + √8)/2`.
#[derive(Clone, Debug)]
pub struct Surd {
    p: BigInt,
    q: BigInt,
    d: BigInt,
}

impl Surd {
    /// Builds `(p + √d)/q`, rescaling by `|q|` when `q` does not divide `d - p²`.
    pub fn new(p: BigInt, q: BigInt, d: BigInt) -> Result<Self> {
        if q.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if d.is_negative() {
            return Err(Error::NegativeRadicand(d.to_string()));
        }
        if is_perfect_square(&d) {
            return Err(Error::PerfectSquareRadicand(d.to_string()));
        }
        let mut s = Surd { p, q, d };
        if !s.is_normalized() {
            let scale = s.q.abs();
            s.d *= &scale * &scale;
            s.p *= &scale;
            s.q *= &scale;
        }
        debug_assert!(s.is_normalized());
        Ok(s)
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn d(&self) -> &BigInt {
        &self.d
    }

    fn is_normalized(&self) -> bool {
        (&self.d - &self.p * &self.p).is_multiple_of(&self.q)
    }

    /// `⌊(P + √D)/Q⌋`, exact for either sign of `Q`.
    pub fn floor(&self) -> BigInt {
        let root = self.d.sqrt();
        if self.q.is_positive() {
            (&self.p + root).div_floor(&self.q)
        } else {
            // √D is irrational, so ⌊-√D⌋ = -⌊√D⌋ - 1.
            (-&self.p - root - BigInt::one()).div_floor(&-&self.q)
        }
    }

    /// One step of the continued-fraction recurrence: returns `a = ⌊x⌋` and `1/(x - a)`.
    pub fn cf_step(&self) -> (BigInt, Surd) {
        let a = self.floor();
        let p = &a * &self.q - &self.p;
        let q = (&self.d - &p * &p) / &self.q;
        let next = Surd {
            p,
            q,
            d: self.d.clone(),
        };
        debug_assert!(next.is_normalized());
        (a, next)
    }

    /// Full expansion: minimal pre-period plus primitive period.
    pub fn expand(&self) -> CfExpansion {
        let (quotients, start) = self.expand_raw();
        let period = quotients[start..].to_vec();
        let mut pre = quotients;
        pre.truncate(start);
        CfExpansion::new(pre, period).expect("state cycle is nonempty")
    }

    /// Partial quotients up to the first repeated state, and the index where the cycle starts.
    fn expand_raw(&self) -> (Vec<BigInt>, usize) {
        let mut seen: HashMap<(BigInt, BigInt), usize> = HashMap::new();
        let mut quotients = Vec::new();
        let mut state = self.clone();
        loop {
            let key = (state.p.clone(), state.q.clone());
            if let Some(&start) = seen.get(&key) {
                return (quotients, start);
            }
            seen.insert(key, quotients.len());
            let (a, next) = state.cf_step();
            quotients.push(a);
            state = next;
        }
    }

    /// The complete quotient reached after `steps` applications of [`Surd::cf_step`].
    pub fn complete_quotient(&self, steps: usize) -> Surd {
        let mut x = self.clone();
        for _ in 0..steps {
            x = x.cf_step().1;
        }
        x
    }

    /// `b² - 4ac` for the primitive integral minimal polynomial `ax² + bx + c`.
    pub fn discriminant(&self) -> BigInt {
        // Q x - P = √D  ⇒  Q²x² - 2PQ x + (P² - D) = 0
        let a = &self.q * &self.q;
        let b = -(BigInt::from(2) * &self.p * &self.q);
        let c = &self.p * &self.p - &self.d;
        let g = a.gcd(&b).gcd(&c);
        (&b * &b - BigInt::from(4) * &a * &c) / (&g * &g)
    }

    /// `x + j`.
    pub fn add_integer(&self, j: &BigInt) -> Surd {
        Surd {
            p: &self.p + j * &self.q,
            q: self.q.clone(),
            d: self.d.clone(),
        }
    }
}

impl PartialEq for Surd {
    fn eq(&self, other: &Self) -> bool {
        self.q.is_positive() == other.q.is_positive()
            && &self.p * &other.q == &other.p * &self.q
            && &self.d * &other.q * &other.q == &other.d * &self.q * &self.q
    }
}

impl Eq for Surd {}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + sqrt({}))/{}", self.p, self.d, self.q)
    }
}

/// `m/q + √v` as the normalized surd `(m + √(q²v))/q`.
pub fn make_surd(m: i64, q: u64, v: u64) -> Result<Surd> {
    if q == 0 {
        return Err(Error::ZeroDenominator);
    }
    let v = BigInt::from(v);
    if is_perfect_square(&v) {
        return Err(Error::PerfectSquareRadicand(v.to_string()));
    }
    let q = BigInt::from(q);
    let d = &q * &q * v;
    Surd::new(BigInt::from(m), q, d)
}

/// Eventually periodic continued fraction `[a_0, …, a_{j-1}, (b_1, …, b_k)]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CfExpansion {
    preperiod: Vec<BigInt>,
    period: Vec<BigInt>,
}

impl CfExpansion {
    /// Canonicalizes: the period is shrunk to its primitive block and the
    /// pre-period to its shortest length.
    pub fn new(mut preperiod: Vec<BigInt>, period: Vec<BigInt>) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::EmptyPeriod);
        }
        let mut period = primitive_period(&period).to_vec();
        while preperiod.last().is_some() && preperiod.last() == period.last() {
            preperiod.pop();
            period.rotate_right(1);
        }
        Ok(CfExpansion { preperiod, period })
    }

    pub fn preperiod(&self) -> &[BigInt] {
        &self.preperiod
    }

    pub fn period(&self) -> &[BigInt] {
        &self.period
    }
}

impl fmt::Display for CfExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: &[BigInt]| {
            xs.iter()
                .map(|a| a.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        };
        if self.preperiod.is_empty() {
            write!(f, "[[{}]]", join(&self.period))
        } else {
            write!(f, "[{}, [{}]]", join(&self.preperiod), join(&self.period))
        }
    }
}

/// Shortest block whose repetition gives `period`.
pub fn primitive_period<T: PartialEq>(period: &[T]) -> &[T] {
    let n = period.len();
    for len in 1..n {
        if n.is_multiple_of(len) && (len..n).all(|i| period[i] == period[i - len]) {
            return &period[..len];
        }
    }
    period
}

/// How two periods compare up to rotation and reversal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PeriodRelation {
    EqualRotation,
    InverseRotation,
    Both,
    None,
}

impl PeriodRelation {
    pub fn is_equal(self) -> bool {
        matches!(self, PeriodRelation::EqualRotation | PeriodRelation::Both)
    }

    pub fn is_inverse(self) -> bool {
        matches!(self, PeriodRelation::InverseRotation | PeriodRelation::Both)
    }

    pub fn name(self) -> &'static str {
        match self {
            PeriodRelation::EqualRotation => "EqualRotation",
            PeriodRelation::InverseRotation => "InverseRotation",
            PeriodRelation::Both => "Both",
            PeriodRelation::None => "None",
        }
    }
}

fn is_rotation<T: PartialEq>(a: &[T], b: &[T]) -> bool {
    let n = a.len();
    n == b.len() && (0..n).any(|shift| (0..n).all(|i| a[(i + shift) % n] == b[i]))
}

pub fn period_relation<T: PartialEq + Clone>(p1: &[T], p2: &[T]) -> Result<PeriodRelation> {
    if p1.is_empty() || p2.is_empty() {
        return Err(Error::EmptyPeriod);
    }
    let reversed: Vec<T> = p1.iter().rev().cloned().collect();
    let relation = match (is_rotation(p1, p2), is_rotation(&reversed, p2)) {
        (true, true) => PeriodRelation::Both,
        (true, false) => PeriodRelation::EqualRotation,
        (false, true) => PeriodRelation::InverseRotation,
        (false, false) => PeriodRelation::None,
    };
    Ok(relation)
}

/// Convenience for tests and examples: a list of small integers as `BigInt`s.
pub fn big_vec(xs: &[i64]) -> Vec<BigInt> {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn surd(p: i64, q: i64, d: i64) -> Surd {
        Surd::new(b(p), b(q), b(d)).unwrap()
    }

    #[test]
    fn make_surd_values() {
        // (1 + √1008)/12 is not normalized (1007 is not a multiple of 12); the
        // stored triple is the same number scaled by 12.
        let x = make_surd(1, 12, 7).unwrap();
        assert_eq!(x, Surd { p: b(1), q: b(12), d: b(1008) });
        assert_eq!((x.p(), x.q(), x.d()), (&b(12), &b(144), &b(1008 * 144)));

        let r2 = make_surd(0, 1, 2).unwrap();
        assert_eq!((r2.p(), r2.q(), r2.d()), (&b(0), &b(1), &b(2)));

        let y = make_surd(5, 12, 979).unwrap();
        assert_eq!(y, Surd { p: b(5), q: b(12), d: b(140976) });
    }

    #[test]
    fn make_surd_errors() {
        assert_eq!(make_surd(1, 0, 7), Err(Error::ZeroDenominator));
        assert!(matches!(make_surd(1, 3, 9), Err(Error::PerfectSquareRadicand(_))));
        assert!(matches!(Surd::new(b(0), b(1), b(-2)), Err(Error::NegativeRadicand(_))));
        assert!(matches!(Surd::new(b(0), b(1), b(0)), Err(Error::PerfectSquareRadicand(_))));
    }

    #[test]
    fn floor_values() {
        assert_eq!(make_surd(1, 12, 7).unwrap().floor(), b(2));
        assert_eq!(surd(0, 1, 2).floor(), b(1));
        assert_eq!(make_surd(5, 12, 979).unwrap().floor(), b(31));
        // negative denominator: (1 + √2)/(-1) = -2.414…
        assert_eq!(Surd::new(b(1), b(-1), b(2)).unwrap().floor(), b(-3));
        // (0 + √2)/(-2) = -0.707…
        assert_eq!(Surd::new(b(0), b(-2), b(2)).unwrap().floor(), b(-1));
    }

    #[test]
    fn cf_step_values() {
        let (a, next) = surd(0, 1, 2).cf_step();
        assert_eq!(a, b(1));
        assert_eq!(next, surd(1, 1, 2));

        let (a, next) = make_surd(1, 12, 7).unwrap().cf_step();
        assert_eq!(a, b(2));
        assert_eq!(next.floor(), b(1));

        let fixed = surd(1, 1, 2);
        let (a, next) = fixed.cf_step();
        assert_eq!(a, b(2));
        assert_eq!(next, fixed);
    }

    #[test]
    fn expand_paper_fixtures() {
        let e = make_surd(1, 12, 7).unwrap().expand();
        assert_eq!(e.preperiod(), big_vec(&[2]).as_slice());
        assert_eq!(
            e.period(),
            big_vec(&[1, 2, 1, 2, 4, 5, 16, 47, 1, 1, 3, 1, 1, 4]).as_slice()
        );

        let e = make_surd(5, 12, 979).unwrap().expand();
        assert_eq!(e.preperiod(), big_vec(&[31]).as_slice());
        assert_eq!(
            e.period(),
            big_vec(&[1, 2, 2, 1, 1, 13, 1, 4, 1, 6, 1, 61]).as_slice()
        );

        let e = surd(0, 1, 2).expand();
        assert_eq!(e.preperiod(), big_vec(&[1]).as_slice());
        assert_eq!(e.period(), big_vec(&[2]).as_slice());
    }

    #[test]
    fn purely_periodic_has_empty_preperiod() {
        let e = surd(1, 1, 2).expand();
        assert!(e.preperiod().is_empty());
        assert_eq!(e.period(), big_vec(&[2]).as_slice());
    }

    #[test]
    fn negative_surd_expansion() {
        // -√2 = [-2, 1, 1, 2, 2, …]
        let e = Surd::new(b(0), b(-1), b(2)).unwrap().expand();
        assert_eq!(e.preperiod(), big_vec(&[-2, 1, 1]).as_slice());
        assert_eq!(e.period(), big_vec(&[2]).as_slice());
    }

    #[test]
    fn discriminant_values() {
        assert_eq!(make_surd(1, 12, 7).unwrap().discriminant(), b(580608));
        assert_eq!(surd(0, 1, 2).discriminant(), b(8));
        assert_eq!(make_surd(1, 3, 2).unwrap().discriminant(), b(648));
        // (1 + √5)/2 has x² - x - 1
        assert_eq!(surd(1, 2, 5).discriminant(), b(5));
    }

    #[test]
    fn canonicalize_expansion() {
        let e = CfExpansion::new(big_vec(&[3, 1, 2]), big_vec(&[1, 2, 1, 2])).unwrap();
        assert_eq!(e.preperiod(), big_vec(&[3]).as_slice());
        assert_eq!(e.period(), big_vec(&[1, 2]).as_slice());
        assert_eq!(CfExpansion::new(vec![], vec![]), Err(Error::EmptyPeriod));
    }

    #[test]
    fn primitive_block() {
        assert_eq!(primitive_period(&[1, 2, 1, 2, 1, 2]), &[1, 2]);
        assert_eq!(primitive_period(&[1, 2, 1]), &[1, 2, 1]);
        assert_eq!(primitive_period(&[5, 5, 5]), &[5]);
    }

    #[test]
    fn relation_examples() {
        let p = big_vec(&[1, 2, 1, 2, 4, 5, 16, 47, 1, 1, 3, 1, 1, 4]);
        let q = big_vec(&[16, 47, 1, 1, 3, 1, 1, 4, 1, 2, 1, 2, 4, 5]);
        assert_eq!(period_relation(&p, &q).unwrap(), PeriodRelation::EqualRotation);
        assert_eq!(period_relation(&[2], &[2]).unwrap(), PeriodRelation::Both);
        let a = big_vec(&[2, 1, 2, 5, 2, 3, 6, 1, 4, 62]);
        let c = big_vec(&[1, 2, 2, 1, 1, 13, 1, 4, 1, 6, 1, 61]);
        assert_eq!(period_relation(&a, &c).unwrap(), PeriodRelation::None);
        assert_eq!(period_relation(&[1, 2, 3], &[2, 1, 3]).unwrap(), PeriodRelation::InverseRotation);
        let empty: [i64; 0] = [];
        assert_eq!(period_relation(&empty, &[1]), Err(Error::EmptyPeriod));
    }

    #[test]
    fn value_equality_ignores_scaling() {
        assert_eq!(surd(1, 1, 2), surd(2, 2, 8));
        assert_ne!(surd(1, 1, 2), surd(-1, -1, 2));
        assert_ne!(surd(1, 1, 2), surd(1, 1, 3));
    }

    #[test]
    fn translation() {
        let x = make_surd(1, 12, 7).unwrap();
        assert_eq!(x.add_integer(&b(2)), make_surd(25, 12, 7).unwrap());
    }
}
