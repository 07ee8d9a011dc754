//! Labeled m-regular caterpillar trees and the parking process on them.
//!
//! `Cat_m(n)` has a backbone `v_1 → v_2 → … → v_n` (edges point toward the
//! sink `v_n`), `m` children on `v_2` (counting `v_1`) and `m - 1` leaves on
//! every later backbone vertex, for `mn - m + 1` nodes in total. Labels grow
//! from the deepest nodes toward the sink: backbone vertex `v_j` carries label
//! `m(j - 1) + 1`, and the `m - 1` leaves hanging off `v_j` take the labels
//! strictly between `v_{j-1}` and `v_j`.
//!
//! Preference sequences are sorted, so cars arrive in nondecreasing order of
//! preferred label. A car drives from its preferred node toward the sink and
//! parks at the first free node; passing the sink means it exits.

use std::collections::BTreeSet;

use crate::enumerate::{canonical_iter, is_u_pk, UParkingIter};
use crate::error::{Error, Result};
use crate::sequence::{BoundFamily, ParkingSeq};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaterpillarTree {
    m: u32,
    n: u32,
    /// `parent[label]`; index 0 is unused and the sink has no parent.
    parent: Vec<Option<u32>>,
}

impl CaterpillarTree {
    pub fn new(m: u32, n: u32) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::InvalidTree { m, n });
        }
        let nodes = (m * (n - 1) + 1) as usize;
        let mut parent = vec![None; nodes + 1];
        for (label, slot) in parent.iter_mut().enumerate().skip(1) {
            let label = label as u32;
            if label == m * (n - 1) + 1 {
                continue;
            }
            // next backbone label strictly above `label`
            let j = (label - 1) / m + 1;
            *slot = Some(m * j + 1);
        }
        Ok(CaterpillarTree { m, n, parent })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn node_count(&self) -> usize {
        self.parent.len() - 1
    }

    pub fn sink(&self) -> u32 {
        self.m * (self.n - 1) + 1
    }

    pub fn parent(&self, label: u32) -> Option<u32> {
        self.parent.get(label as usize).copied().flatten()
    }

    pub fn is_backbone(&self, label: u32) -> bool {
        label >= 1 && (label as usize) <= self.node_count() && (label - 1) % self.m == 0
    }

    /// `v_1, …, v_n` in order.
    pub fn backbone_labels(&self) -> impl Iterator<Item = u32> + '_ {
        (0..self.n).map(move |j| self.m * j + 1)
    }

    /// Every label that is not on the backbone, ascending.
    pub fn leaf_labels(&self) -> impl Iterator<Item = u32> + '_ {
        (1..=self.node_count() as u32).filter(move |&l| !self.is_backbone(l))
    }

    pub fn children(&self, label: u32) -> Vec<u32> {
        (1..=self.node_count() as u32)
            .filter(|&c| self.parent(c) == Some(label))
            .collect()
    }

    /// Subtree sizes indexed by label. Children always carry smaller labels
    /// than their parent, so one ascending pass accumulates everything.
    fn subtree_totals(&self, weight: impl Fn(u32) -> u64) -> Vec<u64> {
        let mut acc = vec![0u64; self.node_count() + 1];
        for label in 1..=self.node_count() as u32 {
            acc[label as usize] += weight(label);
            if let Some(p) = self.parent(label) {
                let own = acc[label as usize];
                acc[p as usize] += own;
            }
        }
        acc
    }

    fn check_labels(&self, seq: &ParkingSeq) -> Result<()> {
        match seq.values().last() {
            Some(&last) if last as usize > self.node_count() => Err(Error::LabelOutOfRange {
                label: last,
                node_count: self.node_count(),
            }),
            _ => Ok(()),
        }
    }
}

/// Free-function constructor.
pub fn build_caterpillar(m: u32, n: u32) -> Result<CaterpillarTree> {
    CaterpillarTree::new(m, n)
}

/// Subtree criterion: every subtree receives at least as many preferences as
/// it has nodes.
pub fn is_tree_pk(tree: &CaterpillarTree, seq: &ParkingSeq) -> Result<bool> {
    if seq.len() != tree.node_count() {
        return Err(Error::LengthMismatch {
            expected: tree.node_count(),
            found: seq.len(),
        });
    }
    tree.check_labels(seq)?;
    let sizes = tree.subtree_totals(|_| 1);
    let demand = tree.subtree_totals(|l| seq.multiplicity(l) as u64);
    Ok((1..=tree.node_count()).all(|l| demand[l] >= sizes[l]))
}

/// Result of running the parking process.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParkingOutcome {
    /// Node where car `i + 1` parked, `None` if it left through the sink.
    pub assignment: Vec<Option<u32>>,
    /// 1-based indices of cars that preferred a backbone node and parked there.
    pub lucky: BTreeSet<usize>,
}

impl ParkingOutcome {
    pub fn all_parked(&self) -> bool {
        self.assignment.iter().all(Option::is_some)
    }

    pub fn luck(&self) -> usize {
        self.lucky.len()
    }

    pub fn exited(&self) -> usize {
        self.assignment.iter().filter(|a| a.is_none()).count()
    }
}

pub fn simulate(tree: &CaterpillarTree, seq: &ParkingSeq) -> Result<ParkingOutcome> {
    tree.check_labels(seq)?;
    let mut occupied = vec![false; tree.node_count() + 1];
    let mut assignment = Vec::with_capacity(seq.len());
    let mut lucky = BTreeSet::new();
    for (car, &pref) in seq.values().iter().enumerate() {
        let mut node = Some(pref);
        while let Some(v) = node {
            if !occupied[v as usize] {
                break;
            }
            node = tree.parent(v);
        }
        if let Some(v) = node {
            occupied[v as usize] = true;
            if v == pref && tree.is_backbone(pref) {
                lucky.insert(car + 1);
            }
        }
        assignment.push(node);
    }
    Ok(ParkingOutcome { assignment, lucky })
}

/// Number of lucky cars in the parking process.
pub fn luck_tree(tree: &CaterpillarTree, seq: &ParkingSeq) -> Result<usize> {
    Ok(simulate(tree, seq)?.luck())
}

/// Number of cars preferring node `j`.
pub fn omega_tree(tree: &CaterpillarTree, seq: &ParkingSeq, j: u32) -> Result<usize> {
    tree.check_labels(seq)?;
    Ok(seq.multiplicity(j))
}

/// Adds one copy of every leaf label of `Cat_m(n)` to a canonical
/// u-parking distribution of length `n`.
pub fn theta(seq: &ParkingSeq, m: u32) -> Result<ParkingSeq> {
    let family = BoundFamily::canonical(m)?;
    if seq.is_empty() || !is_u_pk(seq, &family) {
        return Err(Error::NotUParking {
            seq: seq.to_string(),
            m,
        });
    }
    let tree = CaterpillarTree::new(m, seq.len() as u32)?;
    Ok(theta_on(&tree, seq))
}

pub(crate) fn theta_on(tree: &CaterpillarTree, seq: &ParkingSeq) -> ParkingSeq {
    let mut values = Vec::with_capacity(tree.node_count());
    let mut leaves = tree.leaf_labels().peekable();
    for &v in seq.values() {
        while let Some(&l) = leaves.peek() {
            if l > v {
                break;
            }
            values.push(l);
            leaves.next();
        }
        values.push(v);
    }
    values.extend(leaves);
    ParkingSeq::from_vec_unchecked(values)
}

/// Inverse of [`theta`]: removes one copy of each leaf label.
pub fn theta_inv(seq: &ParkingSeq, m: u32) -> Result<ParkingSeq> {
    if m == 0 {
        return Err(Error::InvalidTree { m, n: 0 });
    }
    let len = seq.len();
    if len == 0 || (len - 1) % m as usize != 0 {
        return Err(Error::NotTreeParking {
            seq: seq.to_string(),
            m,
            n: 0,
        });
    }
    let n = ((len - 1) / m as usize + 1) as u32;
    let tree = CaterpillarTree::new(m, n)?;
    let not_member = || Error::NotTreeParking {
        seq: seq.to_string(),
        m,
        n,
    };
    if !is_tree_pk(&tree, seq)? {
        return Err(not_member());
    }
    let mut values = seq.values().to_vec();
    for leaf in tree.leaf_labels() {
        let pos = values.binary_search(&leaf).map_err(|_| not_member())?;
        values.remove(pos);
    }
    Ok(ParkingSeq::from_vec_unchecked(values))
}

/// All parking distributions on `Cat_m(n)`, in the order of their u-preimages.
pub fn enumerate_caterpillar_pk(m: u32, n: u32) -> Result<CaterpillarIter> {
    let tree = CaterpillarTree::new(m, n)?;
    let inner = canonical_iter(m, n as usize)?;
    Ok(CaterpillarIter { tree, inner })
}

#[derive(Clone, Debug)]
pub struct CaterpillarIter {
    tree: CaterpillarTree,
    inner: UParkingIter,
}

impl CaterpillarIter {
    pub fn tree(&self) -> &CaterpillarTree {
        &self.tree
    }
}

impl Iterator for CaterpillarIter {
    type Item = ParkingSeq;

    fn next(&mut self) -> Option<ParkingSeq> {
        self.inner.next().map(|p| theta_on(&self.tree, &p))
    }
}
