//! Membership, enumeration and counting of u-parking distributions.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::sequence::{BoundFamily, ParkingSeq};

/// Default ceiling on the number of objects an enumeration may yield.
pub const DEFAULT_CAP: u64 = 100_000_000;

/// True iff `seq[i] <= u_i` for every position. ε is always accepted.
pub fn is_u_pk(seq: &ParkingSeq, family: &BoundFamily) -> bool {
    fits_bounds(seq.values(), family)
}

pub(crate) fn fits_bounds(values: &[u32], family: &BoundFamily) -> bool {
    values
        .iter()
        .enumerate()
        .all(|(i, &v)| u64::from(v) <= family.bound(i + 1))
}

/// Number of u-parking distributions of length `n`, `h_{n,k,r}^{(m)}`.
///
/// Dynamic programme over (position, last value). Row `i` holds, for each
/// admissible last value `v <= u_i`, the number of valid prefixes of length
/// `i` ending in `v`; each row is a prefix sum of the previous one.
pub fn count_u_pk(n: usize, family: &BoundFamily) -> BigUint {
    if n == 0 {
        return BigUint::one();
    }
    let width = |i: usize| family.bound(i) as usize;
    let mut row = vec![BigUint::one(); width(1)];
    for i in 2..=n {
        let mut next = Vec::with_capacity(width(i));
        let mut running = BigUint::zero();
        for v in 0..width(i) {
            if let Some(c) = row.get(v) {
                running += c;
            }
            next.push(running.clone());
        }
        row = next;
    }
    row.into_iter().sum()
}

/// `C_n^{(m)} = binom(mn + n, n) / (mn + 1)`.
pub fn fuss_catalan(m: u32, n: usize) -> BigUint {
    let mn = u64::from(m) * n as u64;
    let binom = binomial(mn + n as u64, n as u64);
    binom / BigUint::from(mn + 1)
}

pub(crate) fn binomial(top: u64, k: u64) -> BigUint {
    if k > top {
        return BigUint::zero();
    }
    let k = k.min(top - k);
    let mut acc = BigUint::one();
    for j in 0..k {
        // exact at every step: acc is binom(top, j) * ... / j!
        acc = acc * BigUint::from(top - j) / BigUint::from(j + 1);
    }
    acc
}

/// Lexicographic stream of all u-parking distributions of a given length.
#[derive(Clone, Debug)]
pub struct UParkingIter {
    family: BoundFamily,
    current: Vec<u32>,
    state: IterState,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum IterState {
    Fresh,
    Running,
    Done,
}

impl UParkingIter {
    fn new(n: usize, family: BoundFamily) -> Self {
        UParkingIter {
            family,
            current: vec![1; n],
            state: IterState::Fresh,
        }
    }

    fn advance(&mut self) -> bool {
        let fam = self.family;
        let pos = (0..self.current.len())
            .rev()
            .find(|&i| u64::from(self.current[i]) < fam.bound(i + 1));
        match pos {
            Some(i) => {
                let v = self.current[i] + 1;
                // bounds increase with the position, so the tail fits
                self.current[i..].iter_mut().for_each(|x| *x = v);
                true
            }
            None => false,
        }
    }
}

impl Iterator for UParkingIter {
    type Item = ParkingSeq;

    fn next(&mut self) -> Option<ParkingSeq> {
        match self.state {
            IterState::Done => return None,
            IterState::Fresh => self.state = IterState::Running,
            IterState::Running => {
                if !self.advance() {
                    self.state = IterState::Done;
                    return None;
                }
            }
        }
        Some(ParkingSeq::from_vec_unchecked(self.current.clone()))
    }
}

/// Enumerates with the [`DEFAULT_CAP`].
pub fn enumerate_u_pk(n: usize, family: &BoundFamily) -> Result<UParkingIter> {
    enumerate_u_pk_with_cap(n, family, DEFAULT_CAP)
}

/// Fails with [`Error::CapExceeded`] when the count exceeds `cap`.
pub fn enumerate_u_pk_with_cap(n: usize, family: &BoundFamily, cap: u64) -> Result<UParkingIter> {
    let projected = count_u_pk(n, family);
    if projected.to_u64().map_or(true, |c| c > cap) {
        return Err(Error::CapExceeded {
            projected: projected.to_string(),
            cap,
        });
    }
    Ok(UParkingIter::new(n, *family))
}

/// Shorthand for the canonical family `(m, 1, m - 1)`.
pub(crate) fn canonical_iter(m: u32, n: usize) -> Result<UParkingIter> {
    enumerate_u_pk(n, &BoundFamily::canonical(m)?)
}
