//! Non-trivial sumsets and summands over a ground set.
//!
//! A set `C` is a *non-trivial sumset* when `C = A + B` for subsets
//! `A, B` of `X` with neither equal to `{0}`. A set `A` is a *non-trivial
//! summand* when some `B != {0}` keeps `A + B` inside `X`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ground::{GroundSet, Mask};
use crate::set::IntegerSet;

/// Whether a decomposition `A + B` may use `A = B`.
///
/// Edges join distinct vertices and vertex labels are injective, so only
/// `DistinctLabels` decompositions can be realised by an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[repr(usize)]
pub enum SummandMode {
    #[default]
    DistinctLabels = 0,
    AllowEqual = 1,
}

impl SummandMode {
    fn admits(self, a: Mask, b: Mask) -> bool {
        self == SummandMode::AllowEqual || a != b
    }
}

const NON_SUMSET: u8 = 1;
const NON_SUMMAND: u8 = 2;

/// Partition of the non-empty subsets of `X` other than `{0}` by
/// sumset/summand status. Families are shortlex sorted.
#[derive(Debug, Clone, Serialize)]
pub struct Classification {
    pub ground: IntegerSet,
    pub mode: SummandMode,
    pub non_sumsets: Vec<IntegerSet>,
    pub non_summands: Vec<IntegerSet>,
    pub neither: Vec<IntegerSet>,
    #[serde(skip)]
    flags: Vec<u8>,
}

impl Classification {
    pub fn is_non_sumset_mask(&self, m: Mask) -> bool {
        self.flags[m as usize] & NON_SUMSET != 0
    }

    pub fn is_non_summand_mask(&self, m: Mask) -> bool {
        self.flags[m as usize] & NON_SUMMAND != 0
    }

    pub fn is_neither_mask(&self, m: Mask) -> bool {
        self.flags[m as usize] == NON_SUMSET | NON_SUMMAND
    }
}

/// Iterates the non-empty submasks of `m`, largest first.
fn submasks(m: Mask) -> impl Iterator<Item = Mask> {
    let mut cur = m;
    let mut done = m == 0;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out = cur;
        cur = (cur - 1) & m;
        done = cur == 0;
        Some(out)
    })
}

pub(crate) fn compute_classification(x: &GroundSet, mode: SummandMode) -> Result<Classification> {
    x.require_zero()?;
    if x.n() < 2 {
        return Err(Error::GroundSetTooSmall { n: x.n(), min: 2 });
    }
    let table = x.shift_table()?;
    let full = x.full_mask();
    let zero = x.zero_mask();
    let mut sumset = vec![false; full as usize + 1];
    let mut summand = vec![false; full as usize + 1];

    for a in 1..=full {
        if a == zero {
            continue;
        }
        let compat = table.compatible(a);
        // 0 is always compatible; any nonzero compatible x_j yields two
        // distinct co-operands {x_j} and {0, x_j}, so the mode never matters
        summand[a as usize] = compat & !zero != 0;
        for b in submasks(compat) {
            if b == zero || b < a || !mode.admits(a, b) {
                continue;
            }
            if let Some(c) = table.sum(a, b) {
                sumset[c as usize] = true;
            }
        }
    }

    let mut flags = vec![0u8; full as usize + 1];
    let mut non_sumsets = Vec::new();
    let mut non_summands = Vec::new();
    let mut neither = Vec::new();
    for m in 1..=full {
        if m == zero {
            continue;
        }
        let set = x.set_of(m);
        if !sumset[m as usize] {
            flags[m as usize] |= NON_SUMSET;
            non_sumsets.push(set.clone());
        }
        if !summand[m as usize] {
            flags[m as usize] |= NON_SUMMAND;
            non_summands.push(set.clone());
        }
        if flags[m as usize] == NON_SUMSET | NON_SUMMAND {
            neither.push(set);
        }
    }
    non_sumsets.sort();
    non_summands.sort();
    neither.sort();
    Ok(Classification {
        ground: x.base().clone(),
        mode,
        non_sumsets,
        non_summands,
        neither,
        flags,
    })
}

/// Cached classification of `x` under `mode`.
pub fn classify_ground_set(x: &GroundSet, mode: SummandMode) -> Result<std::sync::Arc<Classification>> {
    x.classification(mode)
}

/// Every unordered pair `{A, B}` with `A, B != {0}` and `A + B = c`,
/// ordered by `(A, B)` with `A <= B`.
pub fn nontrivial_sumset_decompositions(
    c: &IntegerSet,
    x: &GroundSet,
    mode: SummandMode,
) -> Result<Vec<(IntegerSet, IntegerSet)>> {
    x.check_subset(c)?;
    let target = x.mask_of(c)?;
    Ok(decomposition_masks(x, target, mode, false)?
        .into_iter()
        .map(|(a, b)| {
            let (sa, sb) = (x.set_of(a), x.set_of(b));
            if sa <= sb {
                (sa, sb)
            } else {
                (sb, sa)
            }
        })
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect())
}

/// Mask pairs `(a, b)`, `a <= b` as masks, with `a + b = target`.
/// `include_trivial` admits `{0}` as an operand.
pub(crate) fn decomposition_masks(
    x: &GroundSet,
    target: Mask,
    mode: SummandMode,
    include_trivial: bool,
) -> Result<Vec<(Mask, Mask)>> {
    let table = x.shift_table()?;
    let zero = if x.contains_zero() { x.zero_mask() } else { 0 };
    let mut out = Vec::new();
    // a + b = target forces a + min(b) inside target, so a is a submask of
    // target shifted down; scanning submasks of X is simpler and small
    for a in 1..=x.full_mask() {
        if a == zero && !include_trivial {
            continue;
        }
        for b in submasks(table.compatible(a)) {
            if b < a || (b == zero && !include_trivial) || !mode.admits(a, b) {
                continue;
            }
            if table.sum(a, b) == Some(target) {
                out.push((a, b));
            }
        }
    }
    Ok(out)
}

/// Every mask pair `(a, b)`, `a <= b`, grouped by the mask of `a + b`.
/// Same pairs and order as [`decomposition_masks`], in one pass.
pub(crate) fn decomposition_table(
    x: &GroundSet,
    mode: SummandMode,
    include_trivial: bool,
) -> Result<Vec<Vec<(Mask, Mask)>>> {
    let table = x.shift_table()?;
    let zero = if x.contains_zero() { x.zero_mask() } else { 0 };
    let full = x.full_mask();
    let mut out = vec![Vec::new(); full as usize + 1];
    for a in 1..=full {
        if a == zero && !include_trivial {
            continue;
        }
        for b in submasks(table.compatible(a)) {
            if b < a || (b == zero && !include_trivial) || !mode.admits(a, b) {
                continue;
            }
            if let Some(c) = table.sum(a, b) {
                out[c as usize].push((a, b));
            }
        }
    }
    Ok(out)
}

pub fn is_nontrivial_sumset(c: &IntegerSet, x: &GroundSet, mode: SummandMode) -> Result<bool> {
    x.check_subset(c)?;
    if x.contains_zero() && x.n() >= 2 && x.n() <= crate::ground::TABLE_CAP {
        let cls = x.classification(mode)?;
        let m = x.mask_of(c)?;
        return Ok(m != x.zero_mask() && !cls.is_non_sumset_mask(m));
    }
    Ok(!nontrivial_sumset_decompositions(c, x, mode)?.is_empty())
}

pub fn is_nontrivial_summand(a: &IntegerSet, x: &GroundSet, mode: SummandMode) -> Result<bool> {
    x.check_subset(a)?;
    let table = x.shift_table()?;
    let am = x.mask_of(a)?;
    let zero = if x.contains_zero() { x.zero_mask() } else { 0 };
    Ok(submasks(table.compatible(am)).any(|b| b != zero && mode.admits(am, b)))
}
