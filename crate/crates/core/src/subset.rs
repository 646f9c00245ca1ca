use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A set of carrier elements, stored sorted and duplicate-free.
///
/// Subsets order by size first, then lexicographically, which is the
/// canonical order for every set-valued output in this crate.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subset {
    order: usize,
    members: Vec<usize>,
}

impl Subset {
    pub fn new(order: usize, elements: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut members: Vec<usize> = elements.into_iter().collect();
        if let Some(&bad) = members.iter().find(|&&x| x >= order) {
            return Err(Error::ElementOutOfRange {
                element: bad,
                order,
            });
        }
        members.sort_unstable();
        members.dedup();
        Ok(Subset { order, members })
    }

    pub(crate) fn from_mask(mask: &[bool]) -> Self {
        Subset {
            order: mask.len(),
            members: mask
                .iter()
                .enumerate()
                .filter(|(_, &m)| m)
                .map(|(i, _)| i)
                .collect(),
        }
    }

    /// The zero ideal `{0}`.
    pub fn zero(order: usize) -> Self {
        Subset {
            order,
            members: vec![0],
        }
    }

    pub fn full(order: usize) -> Self {
        Subset {
            order,
            members: (0..order).collect(),
        }
    }

    pub fn empty(order: usize) -> Self {
        Subset {
            order,
            members: Vec::new(),
        }
    }

    pub fn carrier_order(&self) -> usize {
        self.order
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_full(&self) -> bool {
        self.members.len() == self.order
    }

    pub fn is_trivial(&self) -> bool {
        self.members == [0]
    }

    pub fn mask(&self) -> Vec<bool> {
        let mut mask = vec![false; self.order];
        for &x in &self.members {
            mask[x] = true;
        }
        mask
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    pub fn union(&self, other: &Subset) -> Subset {
        let mut members = self.members.clone();
        members.extend_from_slice(&other.members);
        members.sort_unstable();
        members.dedup();
        Subset {
            order: self.order,
            members,
        }
    }

    pub fn intersection(&self, other: &Subset) -> Subset {
        Subset {
            order: self.order,
            members: self
                .members
                .iter()
                .copied()
                .filter(|&x| other.contains(x))
                .collect(),
        }
    }

    pub(crate) fn check_order(&self, order: usize) -> Result<()> {
        if self.order != order {
            return Err(Error::CarrierMismatch {
                expected: order,
                found: self.order,
            });
        }
        Ok(())
    }

    /// Comma-separated members, e.g. `0,3,4`.
    pub fn to_csv(&self) -> String {
        self.members
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.members
            .len()
            .cmp(&other.members.len())
            .then_with(|| self.members.cmp(&other.members))
            .then_with(|| self.order.cmp(&other.order))
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.to_csv())
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_csv())
    }
}
