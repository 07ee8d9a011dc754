//! Statistics on canonical u-parking distributions and a checker for
//! statistics that split along the first-return decomposition.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::decomposition::{decompose_raw, fixed_point_raw};
use crate::enumerate::{canonical_iter, is_u_pk};
use crate::error::{Error, Result};
use crate::sequence::{BoundFamily, ParkingSeq};

/// Positions `i` with `p_i = m(i - 1) + 1`.
pub fn u_luck(seq: &ParkingSeq, m: u32) -> usize {
    seq.values()
        .iter()
        .enumerate()
        .filter(|&(i, &v)| u64::from(v) == u64::from(m) * i as u64 + 1)
        .count()
}

/// Entries equal to `j`.
pub fn u_omega(seq: &ParkingSeq, j: u32) -> usize {
    seq.multiplicity(j)
}

fn require_canonical(seq: &ParkingSeq, m: u32) -> Result<()> {
    if seq.is_empty() || !is_u_pk(seq, &BoundFamily::canonical(m)?) {
        return Err(Error::NotUParking {
            seq: seq.to_string(),
            m,
        });
    }
    Ok(())
}

/// Index of the first fixed point of type 1.
pub fn f_stat(seq: &ParkingSeq, m: u32) -> Result<usize> {
    require_canonical(seq, m)?;
    Ok(fixed_point_raw(seq.values(), m, 1))
}

/// Index of the first fixed point of type `m`.
pub fn g_stat(seq: &ParkingSeq, m: u32) -> Result<usize> {
    require_canonical(seq, m)?;
    Ok(fixed_point_raw(seq.values(), m, m))
}

/// A sequence whose statistic does not differ from its component's by the
/// common constant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstantViolation {
    pub seq: ParkingSeq,
    pub component: ParkingSeq,
    pub difference: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompatibilityReport {
    pub m: u32,
    /// 0-based statistic index `i`; the relevant component is `p_{i+1}`.
    pub const_index: usize,
    pub n_max: usize,
    /// The common difference `S(p) - S(p_{i+1})`, if there is one.
    pub constant: Option<i64>,
    pub violations: Vec<ConstantViolation>,
    /// Lengths at which the value distribution differs from that of luck.
    pub equidistribution_failures: Vec<usize>,
}

impl CompatibilityReport {
    pub fn is_compatible(&self) -> bool {
        self.constant.is_some() && self.equidistribution_failures.is_empty()
    }
}

const MAX_REPORTED_VIOLATIONS: usize = 8;

/// Tests `S(p) = S(p_{i+1}) + C` over all lengths `1..=n_max`, and whether `S`
/// has the same distribution as luck at each length.
pub fn check_statistic_compatibility<F>(
    stat: F,
    const_index: usize,
    m: u32,
    n_max: usize,
) -> Result<CompatibilityReport>
where
    F: Fn(&ParkingSeq) -> i64,
{
    if const_index > m as usize {
        return Err(Error::InvalidFixedPointType {
            ell: const_index as u32,
            m,
        });
    }
    let mut constant: Option<i64> = None;
    let mut consistent = true;
    let mut violations = Vec::new();
    let mut equidistribution_failures = Vec::new();
    for n in 1..=n_max {
        let mut stat_hist: BTreeMap<i64, u64> = BTreeMap::new();
        let mut luck_hist: BTreeMap<i64, u64> = BTreeMap::new();
        for p in canonical_iter(m, n)? {
            let value = stat(&p);
            *stat_hist.entry(value).or_default() += 1;
            *luck_hist.entry(u_luck(&p, m) as i64).or_default() += 1;

            let d = decompose_raw(p.values(), m);
            let component = &d.components[const_index];
            let diff = value - stat(component);
            match constant {
                None if consistent => constant = Some(diff),
                Some(c) if c == diff => {}
                _ => {
                    consistent = false;
                    if violations.len() < MAX_REPORTED_VIOLATIONS {
                        violations.push(ConstantViolation {
                            seq: p.clone(),
                            component: component.clone(),
                            difference: diff,
                        });
                    }
                }
            }
        }
        if stat_hist != luck_hist {
            equidistribution_failures.push(n);
        }
    }
    Ok(CompatibilityReport {
        m,
        const_index,
        n_max,
        constant: if consistent { constant } else { None },
        violations,
        equidistribution_failures,
    })
}
