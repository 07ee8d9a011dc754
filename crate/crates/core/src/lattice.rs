//! Lattice-path encoding of canonical u-parking distributions.
//!
//! A sequence `p` of length `n` maps to the unit-step word
//! `E^{p_1-1} N E^{p_2-p_1} N … E^{p_n-p_{n-1}} N E^{m(n-1)+1-p_n}`
//! from `(0, 0)` to `(m(n - 1), n)`. The bound `p_i <= m(i - 1) + 1` is the
//! condition `x <= m·y` just before every north step.

use std::fmt;
use std::str::FromStr;

use crate::enumerate::is_u_pk;
use crate::error::{Error, Result};
use crate::sequence::{BoundFamily, ParkingSeq};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    North,
    East,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LatticePath(Vec<Step>);

impl LatticePath {
    pub fn new(steps: Vec<Step>) -> Self {
        LatticePath(steps)
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    pub fn endpoint(&self) -> (u64, u64) {
        self.0.iter().fold((0, 0), |(x, y), s| match s {
            Step::North => (x, y + 1),
            Step::East => (x + 1, y),
        })
    }

    /// Run-length form, e.g. `E^0 N E^0 N E^2 N E^2`.
    pub fn run_notation(&self) -> String {
        let mut parts = Vec::new();
        let mut run = 0usize;
        for s in &self.0 {
            match s {
                Step::East => run += 1,
                Step::North => {
                    parts.push(format!("E^{run}"));
                    parts.push("N".to_string());
                    run = 0;
                }
            }
        }
        if !self.0.is_empty() {
            parts.push(format!("E^{run}"));
        }
        parts.join(" ")
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            f.write_str(match s {
                Step::North => "N",
                Step::East => "E",
            })?;
        }
        Ok(())
    }
}

impl FromStr for LatticePath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                'N' | 'n' => Ok(Step::North),
                'E' | 'e' => Ok(Step::East),
                other => Err(Error::InvalidPath(format!("unexpected step {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(LatticePath)
    }
}

pub fn to_lattice_path(seq: &ParkingSeq, m: u32) -> Result<LatticePath> {
    if !is_u_pk(seq, &BoundFamily::canonical(m)?) {
        return Err(Error::NotUParking {
            seq: seq.to_string(),
            m,
        });
    }
    if seq.is_empty() {
        return Ok(LatticePath::default());
    }
    let n = seq.len() as u32;
    let mut steps = Vec::new();
    let mut x = 1u32;
    for &p in seq.values() {
        steps.extend(std::iter::repeat(Step::East).take((p - x) as usize));
        steps.push(Step::North);
        x = p;
    }
    let end = m * (n - 1) + 1;
    steps.extend(std::iter::repeat(Step::East).take((end - x) as usize));
    Ok(LatticePath(steps))
}

pub fn from_lattice_path(path: &LatticePath, m: u32) -> Result<ParkingSeq> {
    if m == 0 {
        return Err(Error::InvalidFamily { m, k: 1, r: 0 });
    }
    let mut values = Vec::new();
    let (mut x, mut y) = (0u64, 0u64);
    for s in path.steps() {
        match s {
            Step::East => x += 1,
            Step::North => {
                if x > u64::from(m) * y {
                    return Err(Error::InvalidPath(format!(
                        "north step from ({x}, {y}) crosses x = {m}y"
                    )));
                }
                values.push(x as u32 + 1);
                y += 1;
            }
        }
    }
    let expected_x = if y == 0 { 0 } else { u64::from(m) * (y - 1) };
    if x != expected_x {
        return Err(Error::InvalidPath(format!(
            "path ends at ({x}, {y}), expected ({expected_x}, {y})"
        )));
    }
    Ok(ParkingSeq::from_vec_unchecked(values))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::enumerate_u_pk;

    fn seq(s: &str) -> ParkingSeq {
        s.parse().unwrap()
    }

    #[test]
    fn encodes_examples() {
        let w = to_lattice_path(&seq("1,1,3"), 2).unwrap();
        assert_eq!(w.run_notation(), "E^0 N E^0 N E^2 N E^2");
        assert_eq!(w.to_string(), "NNEENEE");
        assert_eq!(w.endpoint(), (4, 3));

        let w = to_lattice_path(&seq("1,2,3"), 1).unwrap();
        assert_eq!(w.run_notation(), "E^0 N E^1 N E^1 N E^0");
        assert_eq!(w.endpoint(), (2, 3));
    }

    #[test]
    fn roundtrip_table_corpus() {
        let fam = BoundFamily::canonical(2).unwrap();
        for p in enumerate_u_pk(3, &fam).unwrap() {
            let w = to_lattice_path(&p, 2).unwrap();
            assert_eq!(from_lattice_path(&w, 2).unwrap(), p);
        }
    }

    #[test]
    fn rejects_bad_words() {
        // first north step from x = 1 > 0
        assert!(from_lattice_path(&"ENEE".parse().unwrap(), 2).is_err());
        // wrong number of east steps
        assert!(from_lattice_path(&"NNE".parse().unwrap(), 2).is_err());
        assert!("NXE".parse::<LatticePath>().is_err());
        assert!(to_lattice_path(&seq("1,4"), 2).is_err());
        assert_eq!(
            from_lattice_path(&LatticePath::default(), 3).unwrap(),
            ParkingSeq::empty()
        );
    }
}
