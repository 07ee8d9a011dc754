//! Nondecreasing preference sequences and the bound families that constrain them.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A nondecreasing sequence of positive integers, indexed from 1.
///
/// Both u-parking distributions and parking distributions on caterpillar trees
/// are stored as `ParkingSeq`. The empty sequence ε is allowed.
///
/// The derived ordering is lexicographic, which is the enumeration order.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct ParkingSeq(Vec<u32>);

impl ParkingSeq {
    pub fn new(values: Vec<u32>) -> Result<Self> {
        if values.contains(&0) {
            return Err(Error::NonPositiveEntry);
        }
        if let Some(i) = values.windows(2).position(|w| w[0] > w[1]) {
            return Err(Error::NotNondecreasing { position: i + 2 });
        }
        Ok(ParkingSeq(values))
    }

    /// Sorts `values` first, so any multiset of positive integers is accepted.
    pub fn from_multiset(mut values: Vec<u32>) -> Result<Self> {
        values.sort_unstable();
        Self::new(values)
    }

    pub(crate) fn from_vec_unchecked(values: Vec<u32>) -> Self {
        debug_assert!(values.windows(2).all(|w| w[0] <= w[1]));
        debug_assert!(values.iter().all(|&v| v > 0));
        ParkingSeq(values)
    }

    /// The empty sequence ε.
    pub fn empty() -> Self {
        ParkingSeq(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }

    /// Entry at 1-based position `i`.
    ///
    /// Panics if `i` is 0 or past the end.
    pub fn get(&self, i: usize) -> u32 {
        assert!(i >= 1, "positions are 1-based");
        self.0[i - 1]
    }

    /// Number of entries equal to `value`.
    pub fn multiplicity(&self, value: u32) -> usize {
        // entries are sorted, so a range search suffices
        let lo = self.0.partition_point(|&v| v < value);
        let hi = self.0.partition_point(|&v| v <= value);
        hi - lo
    }

    /// Comma-separated rendering without brackets, `ε` for the empty sequence.
    pub fn to_csv(&self) -> String {
        if self.0.is_empty() {
            return "ε".to_string();
        }
        join(&self.0, ",")
    }
}

fn join(values: &[u32], sep: &str) -> String {
    values
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

impl fmt::Display for ParkingSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            f.write_str("ε")
        } else {
            write!(f, "({})", join(&self.0, ", "))
        }
    }
}

/// Accepts `1,1,4`, `(1, 1, 4)`, `ε`, `eps` or the empty string.
impl FromStr for ParkingSeq {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .trim();
        if trimmed.is_empty() || trimmed == "ε" || trimmed.eq_ignore_ascii_case("eps") {
            return Ok(ParkingSeq::empty());
        }
        let values = trimmed
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(s.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        ParkingSeq::new(values)
    }
}

impl TryFrom<Vec<u32>> for ParkingSeq {
    type Error = Error;

    fn try_from(values: Vec<u32>) -> Result<Self> {
        ParkingSeq::new(values)
    }
}

impl From<ParkingSeq> for Vec<u32> {
    fn from(seq: ParkingSeq) -> Self {
        seq.0
    }
}

impl AsRef<[u32]> for ParkingSeq {
    fn as_ref(&self) -> &[u32] {
        &self.0
    }
}

/// The bound sequence `u_i = m(i + k - 1) - r`.
///
/// `(m, 1, m - 1)` is the canonical family `1, m + 1, 2m + 1, …` whose
/// u-parking distributions are counted by the Fuss-Catalan numbers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BoundFamily {
    m: u32,
    k: u32,
    r: u32,
}

impl BoundFamily {
    pub fn new(m: u32, k: u32, r: u32) -> Result<Self> {
        if m == 0 || k == 0 || r >= m {
            return Err(Error::InvalidFamily { m, k, r });
        }
        Ok(BoundFamily { m, k, r })
    }

    /// The family `(m, 1, m - 1)`, i.e. bounds `m(i - 1) + 1`.
    pub fn canonical(m: u32) -> Result<Self> {
        Self::new(m, 1, m.saturating_sub(1))
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    /// Bound on the entry at 1-based position `i >= 1`.
    pub fn bound(&self, i: usize) -> u64 {
        debug_assert!(i >= 1);
        u64::from(self.m) * (i as u64 + u64::from(self.k) - 1) - u64::from(self.r)
    }

    /// Exponent `mk - r` of the Fuss-Catalan series counting this family.
    pub fn series_exponent(&self) -> u32 {
        self.m * self.k - self.r
    }
}

/// Free-function form of [`BoundFamily::bound`].
pub fn bound(family: &BoundFamily, i: usize) -> u64 {
    family.bound(i)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bound_values() {
        assert_eq!(bound(&BoundFamily::new(2, 1, 1).unwrap(), 3), 5);
        assert_eq!(bound(&BoundFamily::new(1, 1, 0).unwrap(), 7), 7);
        assert_eq!(bound(&BoundFamily::new(3, 2, 0).unwrap(), 2), 9);
    }

    #[test]
    fn canonical_family_is_one_mod_m() {
        for m in 1..5 {
            let fam = BoundFamily::canonical(m).unwrap();
            let bounds: Vec<u64> = (1..5).map(|i| fam.bound(i)).collect();
            let expected: Vec<u64> = (0..4).map(|j| u64::from(m) * j + 1).collect();
            assert_eq!(bounds, expected);
        }
    }

    #[test]
    fn rejects_bad_families() {
        assert!(BoundFamily::new(0, 1, 0).is_err());
        assert!(BoundFamily::new(2, 0, 0).is_err());
        assert!(BoundFamily::new(2, 1, 2).is_err());
    }

    #[test]
    fn seq_validation() {
        assert!(ParkingSeq::new(vec![1, 2, 2]).is_ok());
        assert_eq!(
            ParkingSeq::new(vec![1, 3, 2]),
            Err(Error::NotNondecreasing { position: 3 })
        );
        assert_eq!(ParkingSeq::new(vec![0, 1]), Err(Error::NonPositiveEntry));
    }

    #[test]
    fn parse_and_display() {
        let s: ParkingSeq = "1,1,4".parse().unwrap();
        assert_eq!(s.to_string(), "(1, 1, 4)");
        assert_eq!(s.to_csv(), "1,1,4");
        assert_eq!("(1, 1, 4)".parse::<ParkingSeq>().unwrap(), s);
        assert!("ε".parse::<ParkingSeq>().unwrap().is_empty());
        assert!("".parse::<ParkingSeq>().unwrap().is_empty());
        assert!("1,x".parse::<ParkingSeq>().is_err());
        assert_eq!(ParkingSeq::empty().to_string(), "ε");
    }

    #[test]
    fn multiplicity_counts() {
        let s = ParkingSeq::new(vec![1, 1, 2, 4, 4, 4]).unwrap();
        assert_eq!(s.multiplicity(1), 2);
        assert_eq!(s.multiplicity(3), 0);
        assert_eq!(s.multiplicity(4), 3);
    }
}
