//! Finite-support multisets of positive integers.
//!
//! Splitting types live here: the residue degrees of the primes above `p`
//! form a [`Multiset`], and every splitting statistic is a reduction of one.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MultisetError {
    #[error("reduction over an empty multiset")]
    EmptyMultiset,
    #[error("multiset elements must be positive, got 0")]
    ZeroElement,
}

/// A multiset over the positive integers.
///
/// Stored as value -> multiplicity with no zero multiplicities, so the derived
/// equality, ordering and hashing agree with the sorted-sequence canonical form.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multiset {
    entries: BTreeMap<u64, usize>,
}

impl Multiset {
    pub fn new() -> Self {
        Self::default()
    }

    /// The embedding `n -> {n}`.
    pub fn singleton(n: u64) -> Result<Self, MultisetError> {
        let mut m = Self::new();
        m.insert(n)?;
        Ok(m)
    }

    pub fn from_elements<I: IntoIterator<Item = u64>>(elements: I) -> Result<Self, MultisetError> {
        let mut m = Self::new();
        for e in elements {
            m.insert(e)?;
        }
        Ok(m)
    }

    pub fn insert(&mut self, element: u64) -> Result<(), MultisetError> {
        self.insert_many(element, 1)
    }

    pub fn insert_many(&mut self, element: u64, count: usize) -> Result<(), MultisetError> {
        if element == 0 {
            return Err(MultisetError::ZeroElement);
        }
        if count > 0 {
            *self.entries.entry(element).or_insert(0) += count;
        }
        Ok(())
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn multiplicity(&self, element: u64) -> usize {
        self.entries.get(&element).copied().unwrap_or(0)
    }

    pub fn contains(&self, element: u64) -> bool {
        self.multiplicity(element) > 0
    }

    /// Sum of multiplicities.
    pub fn cardinality(&self) -> usize {
        self.entries.values().sum()
    }

    /// Distinct elements with their multiplicities, ascending.
    pub fn iter(&self) -> impl Iterator<Item = (u64, usize)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    /// Canonical form: sorted elements with repetition.
    pub fn to_sorted_vec(&self) -> Vec<u64> {
        self.entries
            .iter()
            .flat_map(|(&k, &v)| std::iter::repeat_n(k, v))
            .collect()
    }

    pub fn gcd_of(&self) -> Result<u64, MultisetError> {
        self.entries
            .keys()
            .copied()
            .reduce(|a, b| a.gcd(&b))
            .ok_or(MultisetError::EmptyMultiset)
    }

    pub fn lcm_of(&self) -> Result<u64, MultisetError> {
        self.entries
            .keys()
            .copied()
            .reduce(|a, b| a.lcm(&b))
            .ok_or(MultisetError::EmptyMultiset)
    }

    pub fn min_of(&self) -> Result<u64, MultisetError> {
        self.entries
            .keys()
            .next()
            .copied()
            .ok_or(MultisetError::EmptyMultiset)
    }

    pub fn max_of(&self) -> Result<u64, MultisetError> {
        self.entries
            .keys()
            .next_back()
            .copied()
            .ok_or(MultisetError::EmptyMultiset)
    }

    /// Sum of the elements counted with multiplicity.
    pub fn total(&self) -> u64 {
        self.entries.iter().map(|(&k, &v)| k * v as u64).sum()
    }
}

impl From<u64> for Multiset {
    /// Panics on zero; use [`Multiset::singleton`] for fallible construction.
    fn from(n: u64) -> Self {
        Self::singleton(n).expect("multiset elements are positive")
    }
}

impl fmt::Display for Multiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.to_sorted_vec().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Multiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Multiset {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_sorted_vec().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Multiset {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = Vec::<u64>::deserialize(deserializer)?;
        Multiset::from_elements(raw).map_err(serde::de::Error::custom)
    }
}
