//! Ground sets and the bitmask view of their power sets.
//!
//! Subsets of a ground set `X` are mirrored as masks over `X`'s sorted
//! elements: bit `i` stands for the `i`-th smallest element. Because every
//! graceful ground set contains 0 and 0 is the smallest element, the set
//! `{0}` is always mask `1`.

use std::sync::{Arc, OnceLock};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::classify::{self, Classification, SummandMode};
use crate::error::{Error, Result};
use crate::set::IntegerSet;

pub type Mask = u32;

/// Largest ground set whose power set we are willing to enumerate.
pub const ENUMERATION_CAP: usize = 20;
/// Largest ground set for which the shift table (and hence classification)
/// is built. The table holds `2^n * n` entries.
pub const TABLE_CAP: usize = 16;

const ESCAPED: Mask = Mask::MAX;

/// For each subset `A` and element index `j`, the mask of `A + x_j`, or
/// `ESCAPED` when that translate leaves the ground set.
#[derive(Debug)]
pub struct ShiftTable {
    n: usize,
    shifts: Vec<Mask>,
}

impl ShiftTable {
    fn build(elements: &[u64]) -> ShiftTable {
        let n = elements.len();
        let full = 1usize << n;
        let mut shifts = vec![ESCAPED; full * n];
        for j in 0..n {
            // index of x_i + x_j in X, if present
            let target: Vec<Option<u32>> = elements
                .iter()
                .map(|&x| {
                    x.checked_add(elements[j])
                        .and_then(|s| elements.binary_search(&s).ok())
                        .map(|k| k as u32)
                })
                .collect();
            for a in 1..full {
                // extend from a with its lowest bit removed
                let low = a.trailing_zeros() as usize;
                let rest = a & (a - 1);
                let Some(t) = target[low] else { continue };
                let prev = if rest == 0 { 0 } else { shifts[rest * n + j] };
                if prev != ESCAPED {
                    shifts[a * n + j] = prev | (1 << t);
                }
            }
        }
        ShiftTable { n, shifts }
    }

    #[inline]
    pub fn shift(&self, a: Mask, j: usize) -> Option<Mask> {
        let m = self.shifts[a as usize * self.n + j];
        (m != ESCAPED).then_some(m)
    }

    /// Mask of the sumset of `a` and `b`, or `None` if it escapes `X`.
    pub fn sum(&self, a: Mask, b: Mask) -> Option<Mask> {
        let mut out = 0;
        let mut rest = b;
        while rest != 0 {
            let j = rest.trailing_zeros() as usize;
            out |= self.shift(a, j)?;
            rest &= rest - 1;
        }
        Some(out)
    }

    /// Indices `j` with `a + x_j` inside `X`: the subsets `B` keeping
    /// `a + B` inside `X` are exactly the non-empty submasks of this.
    pub fn compatible(&self, a: Mask) -> Mask {
        (0..self.n)
            .filter(|&j| self.shift(a, j).is_some())
            .fold(0, |m, j| m | (1 << j))
    }
}

/// A distinguished finite set `X` of non-negative integers whose power set
/// supplies all labels.
#[derive(Clone, Serialize, Deserialize)]
#[serde(try_from = "IntegerSet", into = "IntegerSet")]
pub struct GroundSet {
    base: IntegerSet,
    #[serde(skip)]
    shifts: OnceLock<Arc<ShiftTable>>,
    #[serde(skip)]
    classes: [OnceLock<Arc<Classification>>; 2],
}

impl GroundSet {
    pub fn new(base: IntegerSet) -> Result<GroundSet> {
        if base.is_empty() {
            return Err(Error::GroundSetTooSmall { n: 0, min: 1 });
        }
        Ok(GroundSet {
            base,
            shifts: OnceLock::new(),
            classes: Default::default(),
        })
    }

    pub fn from_elements(elements: impl IntoIterator<Item = u64>) -> Result<GroundSet> {
        GroundSet::new(IntegerSet::new(elements))
    }

    pub fn base(&self) -> &IntegerSet {
        &self.base
    }

    pub fn elements(&self) -> &[u64] {
        self.base.elements()
    }

    /// `|X|`
    pub fn n(&self) -> usize {
        self.base.len()
    }

    pub fn max_element(&self) -> u64 {
        self.base.max_element().expect("ground set is non-empty")
    }

    pub fn contains_zero(&self) -> bool {
        self.base.contains(0)
    }

    pub fn require_zero(&self) -> Result<()> {
        if self.contains_zero() {
            Ok(())
        } else {
            Err(Error::MissingZero)
        }
    }

    pub fn full_mask(&self) -> Mask {
        if self.n() >= 32 {
            Mask::MAX
        } else {
            (1 << self.n()) - 1
        }
    }

    /// Mask of `{0}`; only meaningful when `0` is in `X`.
    pub fn zero_mask(&self) -> Mask {
        1
    }

    pub fn mask_of(&self, set: &IntegerSet) -> Result<Mask> {
        if self.n() > ENUMERATION_CAP {
            return Err(Error::GroundSetTooLarge { n: self.n(), cap: ENUMERATION_CAP });
        }
        let mut m = 0;
        for x in set.iter() {
            match self.elements().binary_search(&x) {
                Ok(i) => m |= 1 << i,
                Err(_) => {
                    return Err(Error::NotSubset {
                        set: set.clone(),
                        ground: self.base.clone(),
                    })
                }
            }
        }
        Ok(m)
    }

    pub fn set_of(&self, mask: Mask) -> IntegerSet {
        let el = self.elements();
        IntegerSet::from_sorted(
            (0..el.len())
                .filter(|&i| mask & (1 << i) != 0)
                .map(|i| el[i])
                .collect(),
        )
    }

    pub fn check_subset(&self, set: &IntegerSet) -> Result<()> {
        if set.is_empty() {
            return Err(Error::EmptySet);
        }
        if set.is_subset(&self.base) {
            Ok(())
        } else {
            Err(Error::NotSubset { set: set.clone(), ground: self.base.clone() })
        }
    }

    /// All `2^n - 1` non-empty subsets, ascending by mask value.
    pub fn enumerate_nonempty_subsets(&self) -> Result<Vec<IntegerSet>> {
        self.enumerate_nonempty_subsets_capped(ENUMERATION_CAP)
    }

    pub fn enumerate_nonempty_subsets_capped(&self, cap: usize) -> Result<Vec<IntegerSet>> {
        if self.n() > cap {
            return Err(Error::GroundSetTooLarge { n: self.n(), cap });
        }
        Ok((1..=self.full_mask()).map(|m| self.set_of(m)).collect())
    }

    /// The lazily built shift table for mask arithmetic.
    pub fn shift_table(&self) -> Result<&ShiftTable> {
        if self.n() > TABLE_CAP {
            return Err(Error::GroundSetTooLarge { n: self.n(), cap: TABLE_CAP });
        }
        Ok(self
            .shifts
            .get_or_init(|| Arc::new(ShiftTable::build(self.elements()))))
    }

    /// Cached classification of the subsets of this ground set.
    pub fn classification(&self, mode: SummandMode) -> Result<Arc<Classification>> {
        let slot = &self.classes[mode as usize];
        if let Some(c) = slot.get() {
            return Ok(c.clone());
        }
        let computed = Arc::new(classify::compute_classification(self, mode)?);
        // racing writers compute identical values; first one wins
        Ok(slot.get_or_init(|| computed).clone())
    }

    /// `X` divided by the gcd of its nonzero elements.
    pub fn canonicalize(&self) -> Result<GroundSet> {
        self.require_zero()?;
        if self.n() < 2 {
            return Err(Error::GroundSetTooSmall { n: self.n(), min: 2 });
        }
        let g = nonzero_gcd(self.elements());
        GroundSet::new(self.base.divide(g))
    }

    pub fn is_canonical(&self) -> bool {
        self.contains_zero() && self.n() >= 2 && nonzero_gcd(self.elements()) == 1
    }

    /// Multiplies `X` by `c > 0`.
    pub fn scale(&self, c: u64) -> Result<GroundSet> {
        GroundSet::new(self.base.scale(c)?)
    }
}

fn nonzero_gcd(elements: &[u64]) -> u64 {
    elements.iter().filter(|&&x| x > 0).fold(0, |g, &x| g.gcd(&x))
}

/// Every canonical ground set `X` with `|X| = n`, `0` in `X` and
/// `max(X) <= max_element`, in lexicographic order of elements.
pub fn canonical_ground_sets(n: usize, max_element: u64) -> Result<Vec<GroundSet>> {
    if n < 2 {
        return Err(Error::GroundSetTooSmall { n, min: 2 });
    }
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(n - 1);
    fn rec(next: u64, max: u64, k: usize, chosen: &mut Vec<u64>, out: &mut Vec<GroundSet>) {
        if chosen.len() == k {
            let mut el = Vec::with_capacity(k + 1);
            el.push(0);
            el.extend_from_slice(chosen);
            if nonzero_gcd(&el) == 1 {
                out.push(GroundSet::new(IntegerSet::from_sorted(el)).expect("non-empty"));
            }
            return;
        }
        let remaining = (k - chosen.len()) as u64;
        let mut x = next;
        while x + remaining - 1 <= max {
            chosen.push(x);
            rec(x + 1, max, k, chosen, out);
            chosen.pop();
            x += 1;
        }
    }
    rec(1, max_element, n - 1, &mut chosen, &mut out);
    if out.is_empty() {
        return Err(Error::EmptySweep { n, max_element });
    }
    Ok(out)
}

impl PartialEq for GroundSet {
    fn eq(&self, other: &Self) -> bool {
        self.base == other.base
    }
}

impl Eq for GroundSet {}

impl PartialOrd for GroundSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GroundSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.base.cmp(&other.base)
    }
}

impl std::hash::Hash for GroundSet {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.base.hash(state)
    }
}

impl std::fmt::Debug for GroundSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GroundSet({})", self.base)
    }
}

impl std::fmt::Display for GroundSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.base.fmt(f)
    }
}

impl TryFrom<IntegerSet> for GroundSet {
    type Error = Error;
    fn try_from(s: IntegerSet) -> Result<Self> {
        GroundSet::new(s)
    }
}

impl From<GroundSet> for IntegerSet {
    fn from(g: GroundSet) -> Self {
        g.base
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(el: &[u64]) -> GroundSet {
        GroundSet::from_elements(el.iter().copied()).unwrap()
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(x(&[0]).enumerate_nonempty_subsets().unwrap(), vec![IntegerSet::zero()]);
        assert_eq!(
            x(&[0, 1]).enumerate_nonempty_subsets().unwrap(),
            vec![IntegerSet::from([0]), IntegerSet::from([1]), IntegerSet::from([0, 1])]
        );
        assert_eq!(x(&[0, 1, 2]).enumerate_nonempty_subsets().unwrap().len(), 7);
    }

    #[test]
    fn enumeration_cap() {
        let big = x(&(0..21).collect::<Vec<_>>());
        assert!(matches!(
            big.enumerate_nonempty_subsets(),
            Err(Error::GroundSetTooLarge { n: 21, cap: 20 })
        ));
    }

    #[test]
    fn mask_round_trip() {
        let g = x(&[0, 2, 5, 9]);
        for m in 1..=g.full_mask() {
            assert_eq!(g.mask_of(&g.set_of(m)).unwrap(), m);
        }
        assert!(g.mask_of(&IntegerSet::from([3])).is_err());
        assert_eq!(g.zero_mask(), g.mask_of(&IntegerSet::zero()).unwrap());
    }

    #[test]
    fn shift_table_matches_sumset() {
        let g = x(&[0, 1, 3, 4, 6]);
        let t = g.shift_table().unwrap();
        for a in 1..=g.full_mask() {
            for b in 1..=g.full_mask() {
                let s = g.set_of(a).sumset(&g.set_of(b)).unwrap();
                let expect = s.is_subset(g.base()).then(|| g.mask_of(&s).unwrap());
                assert_eq!(t.sum(a, b), expect, "{} + {}", g.set_of(a), g.set_of(b));
            }
        }
    }

    #[test]
    fn canonicalize_examples() {
        assert_eq!(x(&[0, 2, 4]).canonicalize().unwrap(), x(&[0, 1, 2]));
        assert_eq!(x(&[0, 1, 3]).canonicalize().unwrap(), x(&[0, 1, 3]));
        assert_eq!(x(&[0, 3, 6, 9]).canonicalize().unwrap(), x(&[0, 1, 2, 3]));
        assert_eq!(x(&[1, 2]).canonicalize(), Err(Error::MissingZero));
    }

    #[test]
    fn canonical_family() {
        let fam = canonical_ground_sets(3, 4).unwrap();
        let bases: Vec<Vec<u64>> = fam.iter().map(|g| g.elements().to_vec()).collect();
        // {0,2,4} is the scaled copy of {0,1,2}
        assert_eq!(
            bases,
            vec![
                vec![0, 1, 2],
                vec![0, 1, 3],
                vec![0, 1, 4],
                vec![0, 2, 3],
                vec![0, 3, 4]
            ]
        );
        assert!(fam.iter().all(GroundSet::is_canonical));
        assert!(canonical_ground_sets(4, 2).is_err());
    }
}
