//! Brute-force checks that share nothing with the Pell shortcut except the
//! continued-fraction engine and exact unit arithmetic.
//!
//! Equivalence is read off the periods directly, unit gcds come from
//! enumerating exact powers, and matrices are checked by evaluation.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::arith::divisors;
use crate::equiv::{apply_moebius, Family, Mat2};
use crate::error::Result;
use crate::pell::{self, fundamental_unit, Unit};
use crate::surd::{period_relation, CfExpansion, PeriodRelation, Surd};

/// `x ~ y` iff the primitive periods agree up to rotation.
pub fn oracle_equivalent(x: &Surd, y: &Surd) -> bool {
    oracle_period_relation(x, y).is_equal()
}

pub fn oracle_period_relation(x: &Surd, y: &Surd) -> PeriodRelation {
    relation_of(&x.expand(), &y.expand())
}

fn relation_of(x: &CfExpansion, y: &CfExpansion) -> PeriodRelation {
    period_relation(x.period(), y.period()).expect("expansions have nonempty periods")
}

/// For each `q1` reached by some power `ε^k`, `1 <= k <= max_power`, with
/// `gcd(c_k, q²) = q·q1`, the smallest such `k`.
///
/// The trivial unit `1 + 0√v` contributes `q1 = q` with exponent `0` when no
/// positive power reaches it within the bound. A missing key means "not found
/// within the bound", nothing more.
pub fn oracle_unit_scan(v: u64, q: u64, max_power: u64) -> Result<BTreeMap<u64, u64>> {
    let eps = fundamental_unit(v)?;
    let qb = BigInt::from(q);
    let q2 = &qb * &qb;
    let mut found = BTreeMap::new();
    let mut power = Unit::one(v);
    for k in 1..=max_power {
        power = power.mul(&eps);
        if !power.c().is_multiple_of(&qb) {
            continue;
        }
        let q1: u64 = (power.c().gcd(&q2) / &qb)
            .try_into()
            .expect("gcd(c, q^2)/q divides q");
        found.entry(q1).or_insert(k);
    }
    found.entry(q).or_insert(0);
    Ok(found)
}

/// `|det M| = 1` and `M·x = y` exactly.
pub fn verify_matrix(m: &Mat2, x: &Surd, y: &Surd) -> bool {
    if m.det().abs() != BigInt::from(1) {
        return false;
    }
    match apply_moebius(m, x) {
        Ok(image) => image == *y,
        Err(_) => false,
    }
}

/// One decision procedure disagreeing with its oracle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Disagreement {
    pub check: String,
    pub v: u64,
    pub q: u64,
    pub m: u64,
    pub n: Option<u64>,
    pub decided: String,
    pub oracle: String,
}

/// Outcome of cross-checking a whole family `m/q + √v`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossCheck {
    pub pairs: u64,
    pub witnesses: u64,
    pub disagreements: Vec<Disagreement>,
}

impl CrossCheck {
    pub fn passed(&self) -> bool {
        self.disagreements.is_empty()
    }

    pub fn merge(&mut self, other: CrossCheck) {
        self.pairs += other.pairs;
        self.witnesses += other.witnesses;
        self.disagreements.extend(other.disagreements);
    }
}

/// Runs every decision procedure for the family against the oracles:
/// equivalence, inverse and self-inverse periods, class partition, the
/// achievable `q1` set, and witness matrices for every equivalent pair.
pub fn cross_check(v: u64, q: u64, max_power: Option<u64>) -> Result<CrossCheck> {
    let family = Family::new(v, q)?;
    let residues = family.residues();
    let expansions: Vec<CfExpansion> = residues
        .iter()
        .map(|&m| family.member(m as i64).expand())
        .collect();
    let mut report = CrossCheck::default();
    let disagree = |check: &str, m: u64, n: Option<u64>, decided: String, oracle: String| {
        Disagreement {
            check: check.to_string(),
            v,
            q,
            m,
            n,
            decided,
            oracle,
        }
    };
    let mut found = Vec::new();

    for (i, &m) in residues.iter().enumerate() {
        let decided = family.self_inverse(m as i64)?;
        let oracle = relation_of(&expansions[i], &expansions[i]).is_inverse();
        if decided != oracle {
            found.push(disagree("selfinv", m, None, decided.to_string(), oracle.to_string()));
        }
        for (j, &n) in residues.iter().enumerate() {
            report.pairs += 1;
            let relation = relation_of(&expansions[i], &expansions[j]);
            let eq = family.equivalent(m as i64, n as i64)?;
            if eq != relation.is_equal() {
                found.push(disagree("equiv", m, Some(n), eq.to_string(), relation.name().into()));
            }
            let inv = family.inverse_periods(m as i64, n as i64)?;
            if inv != relation.is_inverse() {
                found.push(disagree("inverse", m, Some(n), inv.to_string(), relation.name().into()));
            }
            if eq {
                report.witnesses += 1;
                let x = family.member(m as i64);
                let y = family.member(n as i64);
                let ok = family
                    .witness_matrix(m as i64, n as i64)
                    .map(|w| verify_matrix(&w, &x, &y))
                    .unwrap_or(false);
                if !ok {
                    found.push(disagree("matrix", m, Some(n), "invalid".into(), "expected valid".into()));
                }
            }
        }
    }

    let summary = family.class_summary();
    let mut oracle_classes: Vec<Vec<u64>> = Vec::new();
    for (i, &m) in residues.iter().enumerate() {
        let slot = oracle_classes.iter_mut().find(|class| {
            let rep = residues.iter().position(|&r| r == class[0]).unwrap();
            relation_of(&expansions[rep], &expansions[i]).is_equal()
        });
        match slot {
            Some(class) => class.push(m),
            None => oracle_classes.push(vec![m]),
        }
    }
    if summary.classes != oracle_classes {
        found.push(disagree(
            "classes",
            0,
            None,
            format!("{:?}", summary.classes),
            format!("{:?}", oracle_classes),
        ));
    }

    let bound = max_power.unwrap_or_else(|| pell::default_scan_bound(q));
    let scanned: Vec<u64> = oracle_unit_scan(v, q, bound)?.into_keys().collect();
    let predicted: Vec<u64> = divisors(q)
        .into_iter()
        .filter(|q1| q1 % family.q0() == 0)
        .collect();
    if scanned != predicted {
        found.push(disagree(
            "unitscan",
            0,
            None,
            format!("{:?}", predicted),
            format!("{:?}", scanned),
        ));
    }

    report.disagreements = found;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surd::make_surd;

    fn x(m: i64, q: u64, v: u64) -> Surd {
        make_surd(m, q, v).unwrap()
    }

    #[test]
    fn equivalence_examples() {
        assert!(oracle_equivalent(&x(1, 12, 7), &x(5, 12, 7)));
        assert!(!oracle_equivalent(&x(1, 12, 979), &x(5, 12, 979)));
        assert!(oracle_equivalent(&x(1, 12, 979), &x(1, 12, 979)));
    }

    #[test]
    fn relation_examples() {
        assert!(oracle_period_relation(&x(7, 12, 979), &x(5, 12, 979)).is_inverse());
        assert!(oracle_period_relation(&x(11, 12, 979), &x(1, 12, 979)).is_inverse());
        assert_eq!(oracle_period_relation(&x(0, 1, 2), &x(0, 1, 2)), PeriodRelation::Both);
    }

    #[test]
    fn unit_scan_examples() {
        let scan = oracle_unit_scan(7, 12, 8).unwrap();
        assert_eq!(scan.get(&4), Some(&2));
        assert_eq!(scan.get(&12), Some(&6));
        assert_eq!(oracle_unit_scan(979, 12, 6).unwrap(), BTreeMap::from([(12, 1)]));
        assert_eq!(oracle_unit_scan(2, 1, 3).unwrap(), BTreeMap::from([(1, 1)]));
        // too small a bound leaves only the trivial unit
        assert_eq!(oracle_unit_scan(7, 12, 1).unwrap(), BTreeMap::from([(12, 0)]));
    }

    #[test]
    fn verify_matrix_examples() {
        let m = Mat2::new(37337, 95673, 12192, 31241);
        assert!(verify_matrix(&m, &x(1, 12, 7), &x(5, 12, 7)));
        assert!(verify_matrix(&Mat2::identity(), &x(1, 12, 7), &x(1, 12, 7)));
        assert!(!verify_matrix(&Mat2::new(1, 0, 0, 2), &x(1, 12, 7), &x(1, 24, 7)));
        assert!(!verify_matrix(&m, &x(1, 12, 7), &x(7, 12, 7)));
    }

    #[test]
    fn cross_check_small_families() {
        for (v, q) in [(7, 12), (979, 12), (2, 1), (3, 8)] {
            let report = cross_check(v, q, None).unwrap();
            assert!(report.passed(), "{:?}", report.disagreements);
        }
    }
}
