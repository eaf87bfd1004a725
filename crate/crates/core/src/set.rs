use crate::error::{Error, Result};

/// A subset of the elements of a group of known order, kept both as a sorted
/// index list and as a bitmask so that membership tests and deduplication by
/// content are cheap.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    parent_order: usize,
    members: Vec<usize>,
    mask: Vec<u64>,
}

impl ElementSet {
    /// Builds a set from arbitrary indices. Duplicates collapse; indices are
    /// validated against `parent_order`.
    pub fn new(parent_order: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut set = Self::empty(parent_order);
        for index in members {
            if index >= parent_order {
                return Err(Error::IndexOutOfRange {
                    index,
                    order: parent_order,
                });
            }
            set.insert(index);
        }
        Ok(set)
    }

    pub fn empty(parent_order: usize) -> Self {
        Self {
            parent_order,
            members: Vec::new(),
            mask: vec![0; parent_order.div_ceil(64)],
        }
    }

    /// The set 0..n of all elements.
    pub fn full(parent_order: usize) -> Self {
        Self::new(parent_order, 0..parent_order).expect("range is in bounds")
    }

    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, index: usize) -> bool {
        index < self.parent_order && self.mask[index / 64] & (1 << (index % 64)) != 0
    }

    /// Members in ascending order.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    /// Inserts an in-range index, keeping the member list sorted.
    pub(crate) fn insert(&mut self, index: usize) {
        debug_assert!(index < self.parent_order);
        if !self.contains(index) {
            self.mask[index / 64] |= 1 << (index % 64);
            let pos = self.members.partition_point(|&m| m < index);
            self.members.insert(pos, index);
        }
    }

    pub(crate) fn remove(&mut self, index: usize) {
        if self.contains(index) {
            self.mask[index / 64] &= !(1 << (index % 64));
            let pos = self.members.partition_point(|&m| m < index);
            self.members.remove(pos);
        }
    }

    pub fn is_subset_of(&self, other: &ElementSet) -> bool {
        self.iter().all(|m| other.contains(m))
    }

    pub fn intersection_size(&self, other: &ElementSet) -> usize {
        self.iter().filter(|&m| other.contains(m)).count()
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        debug_assert_eq!(self.parent_order, other.parent_order);
        let mut out = self.clone();
        for m in other.iter() {
            out.insert(m);
        }
        out
    }

    pub fn difference(&self, other: &ElementSet) -> ElementSet {
        let mut out = self.clone();
        for m in other.iter() {
            out.remove(m);
        }
        out
    }
}
