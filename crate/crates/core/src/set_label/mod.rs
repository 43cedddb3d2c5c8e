//! Finite sets of non-negative integers, their sumsets, and set-labelings of
//! graphs together with the IASI and weak IASI checks.

mod labeling;
mod verify;

pub use labeling::Labeling;
pub use verify::{
    induced_edge_label, is_k_uniform, mono_indexed_stats, verify_iasi, verify_weak_iasi,
    MonoStats, VerificationReport, Violation,
};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest element accepted from external input. Any two such elements can
/// be added without overflowing `u64`.
pub const MAX_ELEMENT: u64 = 1 << 62;

/// A finite, nonempty set of non-negative integers, stored sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct IntegerSet(Vec<u64>);

impl IntegerSet {
    /// Sorts and dedups `elements`. Fails on an empty input or on elements
    /// above [`MAX_ELEMENT`].
    pub fn new(elements: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut v: Vec<u64> = elements.into_iter().collect();
        if v.is_empty() {
            return Err(Error::invalid("a set-label must be nonempty"));
        }
        if let Some(&x) = v.iter().find(|&&x| x > MAX_ELEMENT) {
            return Err(Error::invalid(format!(
                "element {x} exceeds the supported maximum {MAX_ELEMENT}"
            )));
        }
        v.sort_unstable();
        v.dedup();
        Ok(IntegerSet(v))
    }

    pub fn singleton(x: u64) -> Self {
        IntegerSet(vec![x])
    }

    /// `{start, start + 1, ..., start + len - 1}`.
    pub fn interval(start: u64, len: usize) -> Self {
        assert!(len > 0, "an interval set needs at least one element");
        IntegerSet((start..start + len as u64).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; kept for the usual `len`/`is_empty` pairing.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_singleton(&self) -> bool {
        self.0.len() == 1
    }

    pub fn elements(&self) -> &[u64] {
        &self.0
    }

    pub fn min(&self) -> u64 {
        self.0[0]
    }

    pub fn max(&self) -> u64 {
        self.0[self.0.len() - 1]
    }
}

impl TryFrom<Vec<u64>> for IntegerSet {
    type Error = Error;

    fn try_from(v: Vec<u64>) -> Result<Self> {
        IntegerSet::new(v)
    }
}

impl From<IntegerSet> for Vec<u64> {
    fn from(s: IntegerSet) -> Self {
        s.0
    }
}

impl fmt::Display for IntegerSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

/// `A + B = {a + b : a ∈ A, b ∈ B}`, by pairwise enumeration.
///
/// # Panics
///
/// Panics if a pairwise sum overflows `u64`, which cannot happen for sets
/// whose elements are at most [`MAX_ELEMENT`].
pub fn sumset(a: &IntegerSet, b: &IntegerSet) -> IntegerSet {
    let mut sums = Vec::with_capacity(a.len() * b.len());
    for &x in a.elements() {
        for &y in b.elements() {
            sums.push(x.checked_add(y).expect("sumset element overflows u64"));
        }
    }
    sums.sort_unstable();
    sums.dedup();
    IntegerSet(sums)
}

/// Elementwise multiple `r·A`. Rejects `r = 0` (it collapses every set to
/// `{0}`) and results above [`MAX_ELEMENT`].
pub fn scale_set(r: u64, a: &IntegerSet) -> Result<IntegerSet> {
    if r == 0 {
        return Err(Error::invalid("scale factor must be at least 1"));
    }
    let scaled = a
        .elements()
        .iter()
        .map(|&x| x.checked_mul(r).filter(|&y| y <= MAX_ELEMENT))
        .collect::<Option<Vec<u64>>>()
        .ok_or_else(|| Error::invalid(format!("{r}·{a} exceeds {MAX_ELEMENT}")))?;
    Ok(IntegerSet(scaled))
}
