use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Largest graph order representable by a [`VertexSet`].
pub const MAX_ORDER: usize = 64;

/// A subset of the vertices `0..order` of some graph, stored as a single
/// 64-bit word.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: u64,
    order: usize,
}

#[inline]
pub(crate) fn full_mask(order: usize) -> u64 {
    if order >= 64 {
        u64::MAX
    } else {
        (1u64 << order) - 1
    }
}

impl VertexSet {
    pub fn empty(order: usize) -> Self {
        assert!(order <= MAX_ORDER, "order {order} exceeds {MAX_ORDER}");
        VertexSet { bits: 0, order }
    }

    pub fn full(order: usize) -> Self {
        assert!(order <= MAX_ORDER, "order {order} exceeds {MAX_ORDER}");
        VertexSet { bits: full_mask(order), order }
    }

    /// Builds a set from raw bits; bits at or above `order` are dropped.
    pub fn from_bits(order: usize, bits: u64) -> Self {
        assert!(order <= MAX_ORDER, "order {order} exceeds {MAX_ORDER}");
        VertexSet { bits: bits & full_mask(order), order }
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(order: usize, vertices: I) -> Self {
        let mut s = VertexSet::empty(order);
        for v in vertices {
            s.insert(v);
        }
        s
    }

    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.order && self.bits >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.order, "vertex {v} out of range for order {}", self.order);
        self.bits |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        if v < self.order {
            self.bits &= !(1 << v);
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        debug_assert_eq!(self.order, other.order);
        VertexSet { bits: self.bits | other.bits, order: self.order }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        debug_assert_eq!(self.order, other.order);
        VertexSet { bits: self.bits & other.bits, order: self.order }
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        debug_assert_eq!(self.order, other.order);
        VertexSet { bits: self.bits & !other.bits, order: self.order }
    }

    pub fn complement(&self) -> VertexSet {
        VertexSet { bits: !self.bits & full_mask(self.order), order: self.order }
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.bits & !other.bits == 0
    }

    /// Members in increasing order.
    pub fn iter(&self) -> Members {
        Members { bits: self.bits }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// Iterator over the members of a [`VertexSet`].
pub struct Members {
    bits: u64,
}

impl Iterator for Members {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.bits == 0 {
            return None;
        }
        let v = self.bits.trailing_zeros() as usize;
        self.bits &= self.bits - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.bits.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Members {}

impl IntoIterator for &VertexSet {
    type Item = usize;
    type IntoIter = Members;

    fn into_iter(self) -> Members {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

// Serialized as the sorted member list; the order travels with the graph.
impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let members = Vec::<usize>::deserialize(deserializer)?;
        if let Some(&bad) = members.iter().find(|&&v| v >= MAX_ORDER) {
            return Err(serde::de::Error::custom(format!("vertex {bad} out of range")));
        }
        let order = members.iter().map(|&v| v + 1).max().unwrap_or(0);
        Ok(VertexSet::from_vertices(order, members))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_algebra() {
        let a = VertexSet::from_vertices(6, [0, 2, 4]);
        let b = VertexSet::from_vertices(6, [2, 3]);
        assert_eq!(a.union(&b).to_vec(), vec![0, 2, 3, 4]);
        assert_eq!(a.intersection(&b).to_vec(), vec![2]);
        assert_eq!(a.difference(&b).to_vec(), vec![0, 4]);
        assert_eq!(a.complement().to_vec(), vec![1, 3, 5]);
        assert_eq!(a.len(), 3);
        assert!(VertexSet::from_vertices(6, [2]).is_subset(&a));
        assert!(!b.is_subset(&a));
    }

    #[test]
    fn full_word() {
        let s = VertexSet::full(64);
        assert_eq!(s.len(), 64);
        assert!(s.complement().is_empty());
        assert!(s.contains(63));
    }

    #[test]
    fn from_bits_masks_high_bits() {
        let s = VertexSet::from_bits(3, 0b11111);
        assert_eq!(s.to_vec(), vec![0, 1, 2]);
    }
}
