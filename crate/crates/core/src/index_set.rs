//! Blade labels as bit masks.

use std::cmp::Ordering;
use std::fmt;

use crate::error::AlgebraError;

/// Largest supported dimension of the generating space.
pub const MAX_DIM: usize = 16;

/// An ascending subset of `{1..n}`; bit `b - 1` set means index `b` is present.
///
/// Ordering is by grade first, then by mask value, which is the display
/// order of terms everywhere in the crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct IndexSet(u32);

impl IndexSet {
    /// The label of the identity element `e`.
    pub const EMPTY: IndexSet = IndexSet(0);

    pub fn from_mask(mask: u32) -> Self {
        IndexSet(mask)
    }

    pub fn singleton(index: usize) -> Self {
        debug_assert!((1..=MAX_DIM).contains(&index));
        IndexSet(1 << (index - 1))
    }

    /// Builds a set from distinct indices in any order. Returns `None` on a
    /// repeated index or an index outside `1..=MAX_DIM`.
    pub fn from_indices(indices: &[usize]) -> Option<Self> {
        let mut mask = 0u32;
        for &i in indices {
            if i == 0 || i > MAX_DIM {
                return None;
            }
            let bit = 1u32 << (i - 1);
            if mask & bit != 0 {
                return None;
            }
            mask |= bit;
        }
        Some(IndexSet(mask))
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, index: usize) -> bool {
        (1..=MAX_DIM).contains(&index) && self.0 & (1 << (index - 1)) != 0
    }

    pub fn is_valid_for(self, n: usize) -> bool {
        n >= MAX_DIM || self.0 >> n == 0
    }

    pub fn check_valid(self, n: usize) -> Result<(), AlgebraError> {
        if self.is_valid_for(n) {
            Ok(())
        } else {
            let top = 32 - self.0.leading_zeros() as usize;
            Err(AlgebraError::IndexOutOfRange { index: top, n })
        }
    }

    /// Indices in ascending order, 1-based.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        let mut mask = self.0;
        std::iter::from_fn(move || {
            if mask == 0 {
                return None;
            }
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(b + 1)
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.indices().collect()
    }

    pub fn with(self, index: usize) -> Self {
        IndexSet(self.0 | (1 << (index - 1)))
    }

    pub fn without(self, index: usize) -> Self {
        IndexSet(self.0 & !(1 << (index - 1)))
    }

    /// Number of elements strictly below `index`.
    pub fn count_below(self, index: usize) -> usize {
        (self.0 & ((1u32 << (index - 1)) - 1)).count_ones() as usize
    }

    /// All `2^n` blade labels for dimension `n`, in mask order.
    pub fn all(n: usize) -> impl Iterator<Item = IndexSet> {
        (0..(1u32 << n)).map(IndexSet)
    }
}

impl Ord for IndexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.grade()
            .cmp(&other.grade())
            .then(self.0.cmp(&other.0))
    }
}

impl PartialOrd for IndexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.indices().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

/// Exterior product of two basis blades.
///
/// Returns `(0, EMPTY)` when the blades share an index, otherwise the union
/// and `(-1)^inv` with `inv` the number of pairs `p ∈ a`, `q ∈ b`, `p > q`.
pub fn wedge_blades(a: IndexSet, b: IndexSet) -> (i8, IndexSet) {
    if a.0 & b.0 != 0 {
        return (0, IndexSet::EMPTY);
    }
    let mut inversions = 0u32;
    let mut rest = b.0;
    while rest != 0 {
        let bit = rest.trailing_zeros();
        rest &= rest - 1;
        inversions += (a.0 >> (bit + 1)).count_ones();
    }
    let sign = if inversions.is_multiple_of(2) { 1 } else { -1 };
    (sign, IndexSet(a.0 | b.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(ix: &[usize]) -> IndexSet {
        IndexSet::from_indices(ix).unwrap()
    }

    /// Sort the concatenation by adjacent transpositions, counting swaps.
    fn bubble_sign(a: &[usize], b: &[usize]) -> (i8, Vec<usize>) {
        let mut w: Vec<usize> = a.iter().chain(b).copied().collect();
        let mut swaps = 0;
        for i in 0..w.len() {
            for j in 0..w.len() - 1 - i {
                if w[j] == w[j + 1] {
                    return (0, vec![]);
                }
                if w[j] > w[j + 1] {
                    w.swap(j, j + 1);
                    swaps += 1;
                }
            }
        }
        if w.windows(2).any(|p| p[0] == p[1]) {
            return (0, vec![]);
        }
        (if swaps % 2 == 0 { 1 } else { -1 }, w)
    }

    #[test]
    fn wedge_examples() {
        assert_eq!(wedge_blades(set(&[1]), set(&[2])), (1, set(&[1, 2])));
        assert_eq!(wedge_blades(set(&[2]), set(&[1])), (-1, set(&[1, 2])));
        assert_eq!(wedge_blades(set(&[1]), set(&[1])), (0, IndexSet::EMPTY));
        assert_eq!(wedge_blades(set(&[1, 3]), set(&[2])), (-1, set(&[1, 2, 3])));
    }

    #[test]
    fn wedge_matches_transposition_count() {
        for a in IndexSet::all(5) {
            for b in IndexSet::all(5) {
                let (s, w) = bubble_sign(&a.to_vec(), &b.to_vec());
                let (sign, c) = wedge_blades(a, b);
                assert_eq!(sign, s, "{a} {b}");
                if s != 0 {
                    assert_eq!(c.to_vec(), w);
                }
            }
        }
    }

    #[test]
    fn ordering_is_grade_then_mask() {
        let mut v = vec![set(&[1, 2]), set(&[3]), IndexSet::EMPTY, set(&[1])];
        v.sort();
        assert_eq!(v, vec![IndexSet::EMPTY, set(&[1]), set(&[3]), set(&[1, 2])]);
    }

    #[test]
    fn validity_and_helpers() {
        assert!(set(&[1, 4]).is_valid_for(4));
        assert_eq!(
            set(&[5]).check_valid(4),
            Err(AlgebraError::IndexOutOfRange { index: 5, n: 4 })
        );
        assert_eq!(IndexSet::from_indices(&[2, 2]), None);
        assert_eq!(IndexSet::from_indices(&[0]), None);
        assert_eq!(set(&[1, 3, 5]).count_below(4), 2);
        assert_eq!(set(&[3, 1]).to_vec(), vec![1, 3]);
        assert_eq!(set(&[1, 3]).to_string(), "{1,3}");
    }
}
