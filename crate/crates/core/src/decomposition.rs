//! Fixed points and the first-return decomposition of canonical u-parking
//! distributions.
//!
//! For `p` with `p_i <= m(i - 1) + 1`, the first fixed point of type `ℓ` is the
//! smallest `k > 1` with `m(k - 2) + 1 + ℓ <= p_k <= m(k - 1) + 1`, or `n + 1`
//! when no such `k` exists. The windows shrink as `ℓ` grows, so
//! `i_1 <= i_2 <= … <= i_m`, and the type-`m` window is the single value
//! `m(k - 1) + 1` (a lucky position).
//!
//! Cutting `p` after its leading 1 at the indices `i_1, …, i_m` and shifting
//! each block down so that it starts at 1 gives `m + 1` smaller canonical
//! u-parking distributions. The shift of each block is forced:
//!
//! | block | positions | shift |
//! |-------|-----------|-------|
//! | `p_1` | `2 .. i_1 - 1` | `0` |
//! | `p_ℓ` (`2 <= ℓ <= m`) | `i_{ℓ-1} .. i_ℓ - 1` | `m(i_{ℓ-1} - 2) + ℓ - 1` |
//! | `p_{m+1}` | `i_m .. n` | `m(i_m - 1)` |

use serde::{Deserialize, Serialize};

use crate::enumerate::is_u_pk;
use crate::error::{Error, Result};
use crate::sequence::{BoundFamily, ParkingSeq};

/// `(i_1, …, i_m)`, each in `2..=n+1`; `n + 1` means "absent".
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FixedPointIndices(Vec<usize>);

impl FixedPointIndices {
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// Index of the first fixed point of type `ell` (1-based type).
    pub fn of_type(&self, ell: usize) -> usize {
        self.0[ell - 1]
    }

    pub fn is_monotone(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FirstReturnDecomposition {
    /// `p_1, …, p_{m+1}`.
    pub components: Vec<ParkingSeq>,
    pub fixed_points: FixedPointIndices,
}

impl FirstReturnDecomposition {
    pub fn m(&self) -> u32 {
        self.fixed_points.0.len() as u32
    }

    /// Component `p_j` for 1-based `j` in `1..=m+1`.
    pub fn component(&self, j: usize) -> &ParkingSeq {
        &self.components[j - 1]
    }
}

fn require_canonical(seq: &ParkingSeq, m: u32) -> Result<()> {
    if !is_u_pk(seq, &BoundFamily::canonical(m)?) {
        return Err(Error::NotUParking {
            seq: seq.to_string(),
            m,
        });
    }
    Ok(())
}

pub(crate) fn fixed_point_raw(values: &[u32], m: u32, ell: u32) -> usize {
    let n = values.len();
    let m = u64::from(m);
    (2..=n)
        .find(|&k| {
            let v = u64::from(values[k - 1]);
            let k = k as u64;
            m * (k - 2) + 1 + u64::from(ell) <= v && v <= m * (k - 1) + 1
        })
        .unwrap_or(n + 1)
}

/// First fixed point of type `ell` in `1..=m`.
pub fn first_fixed_point(seq: &ParkingSeq, m: u32, ell: u32) -> Result<usize> {
    require_canonical(seq, m)?;
    if ell == 0 || ell > m {
        return Err(Error::InvalidFixedPointType { ell, m });
    }
    Ok(fixed_point_raw(seq.values(), m, ell))
}

pub fn fixed_points(seq: &ParkingSeq, m: u32) -> Result<FixedPointIndices> {
    require_canonical(seq, m)?;
    Ok(FixedPointIndices(
        (1..=m)
            .map(|ell| fixed_point_raw(seq.values(), m, ell))
            .collect(),
    ))
}

pub(crate) fn decompose_raw(values: &[u32], m: u32) -> FirstReturnDecomposition {
    debug_assert!(!values.is_empty());
    let n = values.len();
    let idx: Vec<usize> = (1..=m).map(|ell| fixed_point_raw(values, m, ell)).collect();
    let block = |from: usize, to_exclusive: usize| {
        // 1-based positions from..to_exclusive, shifted to start at 1
        if from >= to_exclusive {
            return ParkingSeq::empty();
        }
        let slice = &values[from - 1..to_exclusive - 1];
        let shift = slice[0] - 1;
        ParkingSeq::from_vec_unchecked(slice.iter().map(|v| v - shift).collect())
    };
    let mut components = Vec::with_capacity(m as usize + 1);
    components.push(block(2, idx[0]));
    for ell in 1..m as usize {
        components.push(block(idx[ell - 1], idx[ell]));
    }
    components.push(block(idx[m as usize - 1], n + 1));
    FirstReturnDecomposition {
        components,
        fixed_points: FixedPointIndices(idx),
    }
}

/// Splits a nonempty canonical u-parking distribution into its `m + 1`
/// components. ε has no decomposition.
pub fn decompose(seq: &ParkingSeq, m: u32) -> Result<FirstReturnDecomposition> {
    require_canonical(seq, m)?;
    if seq.is_empty() {
        return Err(Error::InvalidComposition(
            "the empty sequence has no first-return decomposition".into(),
        ));
    }
    Ok(decompose_raw(seq.values(), m))
}

pub(crate) fn recompose_raw(components: &[ParkingSeq], m: u32) -> Vec<u32> {
    let m_us = m as usize;
    let mut idx = Vec::with_capacity(m_us);
    idx.push(components[0].len() + 2);
    for ell in 2..=m_us {
        idx.push(idx[ell - 2] + components[ell - 1].len());
    }
    let n = idx[m_us - 1] - 1 + components[m_us].len();
    let mut values = Vec::with_capacity(n);
    values.push(1);
    values.extend_from_slice(components[0].values());
    for ell in 2..=m_us {
        let shift = m * (idx[ell - 2] as u32 - 2) + ell as u32 - 1;
        values.extend(components[ell - 1].values().iter().map(|v| v + shift));
    }
    let shift = m * (idx[m_us - 1] as u32 - 1);
    values.extend(components[m_us].values().iter().map(|v| v + shift));
    values
}

/// Inverse of [`decompose`]. Every component must be a canonical u-parking
/// distribution; the result is re-decomposed and compared before returning.
pub fn recompose(components: &[ParkingSeq], m: u32) -> Result<ParkingSeq> {
    let family = BoundFamily::canonical(m)?;
    if components.len() != m as usize + 1 {
        return Err(Error::InvalidComposition(format!(
            "expected {} components, got {}",
            m + 1,
            components.len()
        )));
    }
    if let Some(bad) = components.iter().find(|c| !is_u_pk(c, &family)) {
        return Err(Error::InvalidComposition(format!(
            "component {bad} is not a u-parking distribution"
        )));
    }
    let values = recompose_raw(components, m);
    let seq = ParkingSeq::new(values).map_err(|e| Error::InvalidComposition(e.to_string()))?;
    if !is_u_pk(&seq, &family) {
        return Err(Error::InvalidComposition(format!(
            "{seq} violates the bounds"
        )));
    }
    let back = decompose_raw(seq.values(), m);
    if back.components != components {
        return Err(Error::InvalidComposition(format!(
            "{seq} decomposes differently"
        )));
    }
    Ok(seq)
}
