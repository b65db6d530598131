//! Finite sets of non-negative integers and their sumsets.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite set of non-negative integers, stored strictly ascending.
///
/// Ordering is shortlex: smaller sets first, equal sizes compared element
/// by element. Every family of sets this crate returns is sorted this way.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(from = "Vec<u64>", into = "Vec<u64>")]
pub struct IntegerSet(Vec<u64>);

impl IntegerSet {
    /// Builds a set from arbitrary elements; duplicates are dropped.
    pub fn new(elements: impl IntoIterator<Item = u64>) -> Self {
        let mut v: Vec<u64> = elements.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        IntegerSet(v)
    }

    /// Wraps an already strictly increasing vector.
    pub(crate) fn from_sorted(v: Vec<u64>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        IntegerSet(v)
    }

    pub fn zero() -> Self {
        IntegerSet(vec![0])
    }

    pub fn elements(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0 == [0]
    }

    pub fn min_element(&self) -> Option<u64> {
        self.0.first().copied()
    }

    pub fn max_element(&self) -> Option<u64> {
        self.0.last().copied()
    }

    pub fn contains(&self, x: u64) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn is_subset(&self, other: &IntegerSet) -> bool {
        // both sorted: merge walk
        let mut it = other.0.iter();
        'outer: for &x in &self.0 {
            for &y in it.by_ref() {
                match y.cmp(&x) {
                    Ordering::Less => continue,
                    Ordering::Equal => continue 'outer,
                    Ordering::Greater => return false,
                }
            }
            return false;
        }
        true
    }

    /// Multiplies every element by `c`.
    pub fn scale(&self, c: u64) -> Result<IntegerSet> {
        let v = self
            .0
            .iter()
            .map(|&x| x.checked_mul(c).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(IntegerSet::new(v))
    }

    /// Divides every element by `c`; `c` must divide all of them.
    pub(crate) fn divide(&self, c: u64) -> IntegerSet {
        debug_assert!(c > 0 && self.0.iter().all(|x| x % c == 0));
        IntegerSet::from_sorted(self.0.iter().map(|x| x / c).collect())
    }

    pub fn sumset(&self, other: &IntegerSet) -> Result<IntegerSet> {
        sumset(self, other)
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.0.iter().copied()
    }
}

/// `a + b = { x + y : x in a, y in b }`, computed in the non-negative
/// integers without truncation.
pub fn sumset(a: &IntegerSet, b: &IntegerSet) -> Result<IntegerSet> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptySet);
    }
    let mut out = Vec::with_capacity(a.len() * b.len());
    for &x in &a.0 {
        for &y in &b.0 {
            out.push(x.checked_add(y).ok_or(Error::Overflow)?);
        }
    }
    Ok(IntegerSet::new(out))
}

impl Ord for IntegerSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for IntegerSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Vec<u64>> for IntegerSet {
    fn from(v: Vec<u64>) -> Self {
        IntegerSet::new(v)
    }
}

impl From<IntegerSet> for Vec<u64> {
    fn from(s: IntegerSet) -> Self {
        s.0
    }
}

impl<const N: usize> From<[u64; N]> for IntegerSet {
    fn from(a: [u64; N]) -> Self {
        IntegerSet::new(a)
    }
}

impl fmt::Display for IntegerSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for IntegerSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s<const N: usize>(a: [u64; N]) -> IntegerSet {
        IntegerSet::from(a)
    }

    #[test]
    fn sumset_examples() {
        assert_eq!(sumset(&s([0]), &s([5])).unwrap(), s([5]));
        assert_eq!(sumset(&s([0, 1]), &s([0, 2])).unwrap(), s([0, 1, 2, 3]));
        assert_eq!(sumset(&s([1, 2]), &s([0, 3])).unwrap(), s([1, 2, 4, 5]));
    }

    #[test]
    fn sumset_rejects_empty_operand() {
        assert_eq!(sumset(&IntegerSet::default(), &s([1])), Err(Error::EmptySet));
        assert_eq!(sumset(&s([1]), &IntegerSet::default()), Err(Error::EmptySet));
    }

    #[test]
    fn sumset_overflow_is_an_error() {
        assert_eq!(sumset(&s([u64::MAX]), &s([1])), Err(Error::Overflow));
    }

    #[test]
    fn shortlex_order() {
        let mut v = vec![s([0, 1, 3]), s([0, 3]), s([2]), s([0, 2, 3]), s([1])];
        v.sort();
        assert_eq!(v, vec![s([1]), s([2]), s([0, 3]), s([0, 1, 3]), s([0, 2, 3])]);
    }

    #[test]
    fn subset_and_display() {
        assert!(s([1, 3]).is_subset(&s([0, 1, 2, 3])));
        assert!(!s([1, 4]).is_subset(&s([0, 1, 2, 3])));
        assert!(!s([5]).is_subset(&s([0, 1])));
        assert_eq!(s([0, 1, 3]).to_string(), "{0,1,3}");
        assert_eq!(serde_json::to_string(&s([3, 1, 1])).unwrap(), "[1,3]");
        let back: IntegerSet = serde_json::from_str("[4,0,2]").unwrap();
        assert_eq!(back, s([0, 2, 4]));
    }

    fn small_set() -> impl Strategy<Value = IntegerSet> {
        prop::collection::btree_set(0u64..40, 1..7).prop_map(IntegerSet::new)
    }

    proptest! {
        #[test]
        fn identity_and_commutativity(a in small_set(), b in small_set()) {
            prop_assert_eq!(sumset(&IntegerSet::zero(), &a).unwrap(), a.clone());
            prop_assert_eq!(sumset(&a, &b).unwrap(), sumset(&b, &a).unwrap());
        }

        #[test]
        fn associativity(a in small_set(), b in small_set(), c in small_set()) {
            let left = sumset(&sumset(&a, &b).unwrap(), &c).unwrap();
            let right = sumset(&a, &sumset(&b, &c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn scaling_and_bounds(a in small_set(), b in small_set(), c in 1u64..9) {
            let ab = sumset(&a, &b).unwrap();
            let scaled = sumset(&a.scale(c).unwrap(), &b.scale(c).unwrap()).unwrap();
            prop_assert_eq!(scaled, ab.scale(c).unwrap());
            prop_assert!(ab.len() >= a.len().max(b.len()));
            prop_assert!(ab.len() <= a.len() * b.len());
            prop_assert_eq!(ab.contains(0), a.contains(0) && b.contains(0));
        }
    }
}
