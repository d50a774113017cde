//! Sparse multivectors over exact scalars.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::AlgebraError;
use crate::index_set::{IndexSet, MAX_DIM};
use crate::scalar::Scalar;

/// Which basis the coefficients of a [`Multivector`] refer to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisTag {
    /// Iterated exterior products of generators.
    Grassmann,
    /// Ordered Clifford products of generators; depends on the metric.
    Clifford,
}

impl fmt::Display for BasisTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BasisTag::Grassmann => "grassmann",
            BasisTag::Clifford => "clifford",
        })
    }
}

/// A finite linear combination of basis blades.
///
/// Zero coefficients are never stored, so derived equality is equality of
/// the represented element (given equal `n` and tag). Terms iterate by grade,
/// then by mask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multivector {
    n: usize,
    tag: BasisTag,
    terms: BTreeMap<IndexSet, Scalar>,
}

impl Multivector {
    pub fn zero(n: usize, tag: BasisTag) -> Self {
        debug_assert!(n <= MAX_DIM);
        Multivector {
            n,
            tag,
            terms: BTreeMap::new(),
        }
    }

    /// `s·e`.
    pub fn scalar(n: usize, tag: BasisTag, s: Scalar) -> Self {
        let mut m = Self::zero(n, tag);
        m.add_term(IndexSet::EMPTY, &s);
        m
    }

    pub fn one(n: usize, tag: BasisTag) -> Self {
        Self::scalar(n, tag, Scalar::one())
    }

    pub fn blade(n: usize, tag: BasisTag, blade: IndexSet, coeff: Scalar) -> Result<Self, AlgebraError> {
        blade.check_valid(n)?;
        let mut m = Self::zero(n, tag);
        m.add_term(blade, &coeff);
        Ok(m)
    }

    /// Unit blade from ascending 1-based indices.
    pub fn basis(n: usize, tag: BasisTag, indices: &[usize]) -> Result<Self, AlgebraError> {
        if let Some(&i) = indices.iter().find(|&&i| i == 0 || i > n) {
            return Err(AlgebraError::IndexOutOfRange { index: i, n });
        }
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(AlgebraError::NotAscending);
        }
        let set = IndexSet::from_indices(indices).ok_or(AlgebraError::NotAscending)?;
        Self::blade(n, tag, set, Scalar::one())
    }

    /// Collects `(blade, coefficient)` pairs, summing duplicates.
    pub fn from_terms<I>(n: usize, tag: BasisTag, terms: I) -> Result<Self, AlgebraError>
    where
        I: IntoIterator<Item = (IndexSet, Scalar)>,
    {
        let mut m = Self::zero(n, tag);
        for (b, c) in terms {
            b.check_valid(n)?;
            m.add_term(b, &c);
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn tag(&self) -> BasisTag {
        self.tag
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (IndexSet, &Scalar)> {
        self.terms.iter().map(|(&b, c)| (b, c))
    }

    pub fn coeff(&self, blade: IndexSet) -> Scalar {
        self.terms.get(&blade).cloned().unwrap_or_else(Scalar::zero)
    }

    /// The scalar part when this is a multiple of `e` (or zero).
    pub fn as_scalar(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.get(&IndexSet::EMPTY).cloned(),
            _ => None,
        }
    }

    /// Adds `coeff` to the coefficient of `blade`, pruning a resulting zero.
    /// The blade must be valid for this dimension.
    pub(crate) fn add_term(&mut self, blade: IndexSet, coeff: &Scalar) {
        if coeff.is_zero() {
            return;
        }
        debug_assert!(blade.is_valid_for(self.n));
        use std::collections::btree_map::Entry;
        match self.terms.entry(blade) {
            Entry::Vacant(v) => {
                v.insert(coeff.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Adds `factor · other` into `self`, ignoring tags.
    pub(crate) fn add_scaled(&mut self, other: &Multivector, factor: &Scalar) {
        if factor.is_zero() {
            return;
        }
        for (b, c) in other.terms() {
            if factor.is_one() {
                self.add_term(b, c);
            } else {
                self.add_term(b, &(c * factor));
            }
        }
    }

    pub(crate) fn with_tag(mut self, tag: BasisTag) -> Self {
        self.tag = tag;
        self
    }

    fn check_compatible(&self, other: &Multivector) -> Result<(), AlgebraError> {
        if self.n != other.n {
            return Err(AlgebraError::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        if self.tag != other.tag {
            return Err(AlgebraError::TagMismatch {
                expected: self.tag,
                found: other.tag,
            });
        }
        Ok(())
    }

    pub(crate) fn check_tag(&self, expected: BasisTag) -> Result<(), AlgebraError> {
        if self.tag != expected {
            return Err(AlgebraError::TagMismatch {
                expected,
                found: self.tag,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Multivector) -> Result<Multivector, AlgebraError> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        out.add_scaled(other, &Scalar::one());
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Multivector) -> Result<Multivector, AlgebraError> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        out.add_scaled(other, &Scalar::from_i64(-1));
        Ok(out)
    }

    pub fn neg(&self) -> Multivector {
        self.scale(&Scalar::from_i64(-1))
    }

    pub fn scale(&self, s: &Scalar) -> Multivector {
        let mut out = Multivector::zero(self.n, self.tag);
        out.add_scaled(self, s);
        out
    }

    /// Keeps the terms whose blade satisfies `keep`.
    pub fn filter(&self, mut keep: impl FnMut(IndexSet) -> bool) -> Multivector {
        Multivector {
            n: self.n,
            tag: self.tag,
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| keep(**b))
                .map(|(b, c)| (*b, c.clone()))
                .collect(),
        }
    }

    /// Applies `f` to each coefficient.
    pub fn map_coeffs(&self, mut f: impl FnMut(IndexSet, &Scalar) -> Scalar) -> Multivector {
        let mut out = Multivector::zero(self.n, self.tag);
        for (b, c) in self.terms() {
            out.add_term(b, &f(b, c));
        }
        out
    }
}
