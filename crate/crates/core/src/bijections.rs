//! The involution τ and the bijection η on canonical u-parking distributions.

use crate::decomposition::{decompose_raw, recompose};
use crate::enumerate::is_u_pk;
use crate::error::{Error, Result};
use crate::sequence::{BoundFamily, ParkingSeq};

fn require_canonical(seq: &ParkingSeq, m: u32) -> Result<()> {
    if !is_u_pk(seq, &BoundFamily::canonical(m)?) {
        return Err(Error::NotUParking {
            seq: seq.to_string(),
            m,
        });
    }
    Ok(())
}

/// `τ(ε) = ε`, and otherwise
/// `τ(p) = recompose(τ(p_{m+1}), p_2, …, p_m, τ(p_1))`.
///
/// Exchanges luck and the number of 1s: `luck(p) = ω_1(τ(p))`.
pub fn tau(seq: &ParkingSeq, m: u32) -> Result<ParkingSeq> {
    require_canonical(seq, m)?;

    enum Frame {
        Visit(ParkingSeq),
        /// Middle components `p_2, …, p_m`, waiting for the two recursive images.
        Assemble(Vec<ParkingSeq>),
    }

    let mut work = vec![Frame::Visit(seq.clone())];
    let mut done: Vec<ParkingSeq> = Vec::new();
    while let Some(frame) = work.pop() {
        match frame {
            Frame::Visit(p) if p.is_empty() => done.push(p),
            Frame::Visit(p) => {
                let mut comps = decompose_raw(p.values(), m).components;
                let last = comps.pop().expect("m + 1 components");
                let first = comps.remove(0);
                work.push(Frame::Assemble(comps));
                // popped in reverse: τ(p_{m+1}) is computed first
                work.push(Frame::Visit(first));
                work.push(Frame::Visit(last));
            }
            Frame::Assemble(middle) => {
                let image_first = done.pop().expect("τ(p_1)");
                let image_last = done.pop().expect("τ(p_{m+1})");
                let mut comps = Vec::with_capacity(middle.len() + 2);
                comps.push(image_last);
                comps.extend(middle);
                comps.push(image_first);
                done.push(recompose(&comps, m)?);
            }
        }
    }
    Ok(done.pop().expect("one result"))
}

/// Builds `η(p)` from the decomposition: one leading 1, then `ω_1(p_j)`
/// copies of `j` for each component, then every non-1 entry `e` of `p_j`
/// lifted to `e + m(1 + |p_{j+1}| + … + |p_{m+1}|)`.
pub fn eta(seq: &ParkingSeq, m: u32) -> Result<ParkingSeq> {
    require_canonical(seq, m)?;
    if seq.is_empty() {
        return Ok(ParkingSeq::empty());
    }
    let comps = decompose_raw(seq.values(), m).components;
    let mut values = vec![1u32];
    for (j, c) in comps.iter().enumerate() {
        values.extend(std::iter::repeat(j as u32 + 1).take(c.multiplicity(1)));
    }
    let mut tail_len = 0u32;
    for c in comps.iter().rev() {
        let lift = m * (1 + tail_len);
        values.extend(c.values().iter().filter(|&&e| e != 1).map(|e| e + lift));
        tail_len += c.len() as u32;
    }
    values.sort_unstable();
    Ok(ParkingSeq::from_vec_unchecked(values))
}

/// Inverse of [`eta`].
///
/// Values `1..=m+1` give the number of 1s in each component (and so which
/// components are nonempty). Lifted entries of `p_j` fall in
/// `[m·L + m + 2, m·(L + |p_j|) + 1]` with `L = |p_{j+1}| + … + |p_{m+1}|`;
/// these ranges are disjoint and increase as `j` decreases, so reading the
/// remaining values in ascending order fills `p_{m+1}` first, then `p_m`, and
/// so on, each component taking a value exactly when its bound still admits it.
pub fn eta_inv(seq: &ParkingSeq, m: u32) -> Result<ParkingSeq> {
    require_canonical(seq, m)?;
    if seq.is_empty() {
        return Ok(ParkingSeq::empty());
    }
    let not_image = || Error::NotInImage {
        seq: seq.to_string(),
        m,
    };
    let values = seq.values();
    if values[0] != 1 {
        return Err(not_image());
    }
    let m_us = m as usize;
    let ones: Vec<usize> = (1..=m + 1)
        .map(|j| seq.multiplicity(j) - usize::from(j == 1))
        .collect();
    let mut lifted = values.iter().copied().filter(|&v| v > m + 1).peekable();

    let mut comps: Vec<Vec<u32>> = vec![Vec::new(); m_us + 1];
    let mut tail_len = 0u64;
    for j in (0..=m_us).rev() {
        if ones[j] == 0 {
            continue;
        }
        let lift = u64::from(m) * (1 + tail_len);
        let mut comp = vec![1u32; ones[j]];
        while let Some(&v) = lifted.peek() {
            // next position in the component is comp.len() + 1
            let cap = u64::from(m) * comp.len() as u64 + 1 + lift;
            if u64::from(v) > cap {
                break;
            }
            if u64::from(v) <= lift + 1 {
                return Err(not_image());
            }
            comp.push((u64::from(v) - lift) as u32);
            lifted.next();
        }
        tail_len += comp.len() as u64;
        comps[j] = comp;
    }
    if lifted.next().is_some() {
        return Err(not_image());
    }
    let comps: Vec<ParkingSeq> = comps
        .into_iter()
        .map(ParkingSeq::new)
        .collect::<Result<_>>()
        .map_err(|_| not_image())?;
    let p = recompose(&comps, m).map_err(|_| not_image())?;
    if eta(&p, m)? != *seq {
        return Err(not_image());
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::decompose;
    use crate::enumerate::enumerate_u_pk;
    use crate::statistics::{u_luck, u_omega};

    fn seq(s: &str) -> ParkingSeq {
        s.parse().unwrap()
    }

    #[test]
    fn tau_examples() {
        assert_eq!(tau(&seq("1,1,4"), 2).unwrap(), seq("1,2,5"));
        assert_eq!(tau(&ParkingSeq::empty(), 2).unwrap(), ParkingSeq::empty());
        // ((1,1), ε, ε) ↦ (ε, ε, τ(1,1)) with τ(1,1) = (1,3); the last block
        // is lifted by m(i_m - 1) = 2
        assert_eq!(tau(&seq("1,1"), 2).unwrap(), seq("1,3"));
        assert_eq!(tau(&seq("1,1,1"), 2).unwrap(), seq("1,3,5"));
        assert!(tau(&seq("1,4"), 2).is_err());
    }

    /// Oracle: the full τ table for m = 2, n = 3, checked against the
    /// exchange of luck and ω_1.
    #[test]
    fn tau_table_m2_n3() {
        let table = [
            ("1,1,1", "1,3,5"),
            ("1,1,2", "1,3,4"),
            ("1,1,3", "1,3,3"),
            ("1,1,4", "1,2,5"),
            ("1,1,5", "1,1,5"),
            ("1,2,2", "1,2,2"),
            ("1,2,3", "1,2,3"),
            ("1,2,4", "1,2,4"),
            ("1,2,5", "1,1,4"),
            ("1,3,3", "1,1,3"),
            ("1,3,4", "1,1,2"),
            ("1,3,5", "1,1,1"),
        ];
        for (p, t) in table {
            let (p, t) = (seq(p), seq(t));
            assert_eq!(tau(&p, 2).unwrap(), t);
            assert_eq!(u_luck(&p, 2), u_omega(&t, 1));
            assert_eq!(u_omega(&p, 1), u_luck(&t, 2));
        }
    }

    #[test]
    fn eta_table() {
        let table = [
            ("1,1,1", "1,1,1"),
            ("1,1,2", "1,1,4"),
            ("1,1,3", "1,1,5"),
            ("1,1,4", "1,1,2"),
            ("1,1,5", "1,1,3"),
            ("1,2,2", "1,2,2"),
            ("1,2,3", "1,2,4"),
            ("1,2,4", "1,2,5"),
            ("1,2,5", "1,2,3"),
            ("1,3,3", "1,3,3"),
            ("1,3,4", "1,3,4"),
            ("1,3,5", "1,3,5"),
        ];
        for (p, e) in table {
            assert_eq!(eta(&seq(p), 2).unwrap(), seq(e), "{p}");
            assert_eq!(eta_inv(&seq(e), 2).unwrap(), seq(p), "{e}");
        }
    }

    #[test]
    fn eta_is_a_bijection_small() {
        for m in 1..=3u32 {
            let fam = BoundFamily::canonical(m).unwrap();
            for n in 0..=5 {
                let mut images = Vec::new();
                for p in enumerate_u_pk(n, &fam).unwrap() {
                    let e = eta(&p, m).unwrap();
                    assert!(is_u_pk(&e, &fam));
                    assert_eq!(eta_inv(&e, m).unwrap(), p);
                    if n > 0 {
                        let d = decompose(&p, m).unwrap();
                        assert_eq!(u_omega(&e, 1), 1 + u_omega(d.component(1), 1));
                        for j in 2..=m as usize + 1 {
                            assert_eq!(u_omega(&e, j as u32), u_omega(d.component(j), 1));
                        }
                    }
                    images.push(e);
                }
                images.sort();
                images.dedup();
                assert_eq!(images.len(), enumerate_u_pk(n, &fam).unwrap().count());
            }
        }
    }
}
