//! Clifford product computed in the Grassmann basis.
//!
//! A generator acts on a Grassmann blade as `e^i ∨ B = e^i ∧ B + (e^i ⌋ B)`,
//! where the contraction deletes one factor at a time with alternating sign
//! and weight `g^{i j_p}`. Products `e^A ∨ v` for the left operand's blades
//! are built from shorter blades and memoized by mask.

use std::collections::HashMap;

use crate::conversion::convert_basis;
use crate::error::AlgebraError;
use crate::index_set::IndexSet;
use crate::metric::Metric;
use crate::multivector::{BasisTag, Multivector};
use crate::scalar::Scalar;

/// `e^i ∨ u` for a Grassmann-tagged `u`.
pub fn vector_times_multivector(i: usize, u: &Multivector, g: &Metric) -> Result<Multivector, AlgebraError> {
    let n = g.dim();
    if i == 0 || i > n {
        return Err(AlgebraError::IndexOutOfRange { index: i, n });
    }
    if u.dim() != n {
        return Err(AlgebraError::DimensionMismatch { left: u.dim(), right: n });
    }
    u.check_tag(BasisTag::Grassmann)?;
    Ok(apply_generator(i, u, g))
}

fn apply_generator(i: usize, u: &Multivector, g: &Metric) -> Multivector {
    let n = u.dim();
    let terms: Vec<(u32, Scalar)> = u.terms().map(|(b, c)| (b.mask(), c.clone())).collect();
    let mut acc = Accumulator::new(n);
    act(i, &terms, g, &mut acc);
    collect(n, acc.drain())
}

/// Accumulates `e^i ∨ Σ c_m e^m` into `acc`.
fn act(i: usize, terms: &[(u32, Scalar)], g: &Metric, acc: &mut Accumulator) {
    let bit = 1u32 << (i - 1);
    let row: Vec<(u32, &Scalar)> = (1..=g.dim())
        .map(|j| (1u32 << (j - 1), g.get(i, j)))
        .filter(|(_, x)| !x.is_zero())
        .collect();
    for (m, c) in terms {
        if m & bit == 0 {
            acc.add(m | bit, c, odd(m & (bit - 1)));
        }
        for &(jbit, entry) in &row {
            if m & jbit != 0 {
                acc.add(m ^ jbit, &(c * entry), odd(m & (jbit - 1)));
            }
        }
    }
}

fn odd(mask: u32) -> bool {
    mask.count_ones() % 2 == 1
}

fn collect(n: usize, terms: Vec<(u32, Scalar)>) -> Multivector {
    let mut out = Multivector::zero(n, BasisTag::Grassmann);
    for (m, c) in terms {
        out.add_term(IndexSet::from_mask(m), &c);
    }
    out
}

/// Largest dimension for which accumulation uses a dense slot per blade.
const DENSE_LIMIT: usize = 12;

/// Scratch space for summing terms keyed by blade mask.
enum Accumulator {
    Dense { slots: Vec<Option<Scalar>>, touched: Vec<u32> },
    Sparse(HashMap<u32, Scalar>),
}

impl Accumulator {
    fn new(n: usize) -> Self {
        if n <= DENSE_LIMIT {
            Accumulator::Dense {
                slots: vec![None; 1 << n],
                touched: Vec::new(),
            }
        } else {
            Accumulator::Sparse(HashMap::new())
        }
    }

    fn add(&mut self, mask: u32, c: &Scalar, negate: bool) {
        let slot = match self {
            Accumulator::Dense { slots, touched } => {
                let slot = &mut slots[mask as usize];
                if slot.is_none() {
                    touched.push(mask);
                }
                slot
            }
            Accumulator::Sparse(map) => {
                use std::collections::hash_map::Entry;
                match map.entry(mask) {
                    Entry::Occupied(o) => {
                        let x = o.into_mut();
                        if negate { *x -= c } else { *x += c }
                        return;
                    }
                    Entry::Vacant(v) => {
                        v.insert(if negate { -c } else { c.clone() });
                        return;
                    }
                }
            }
        };
        match slot {
            Some(x) if negate => *x -= c,
            Some(x) => *x += c,
            None => *slot = Some(if negate { -c } else { c.clone() }),
        }
    }

    /// Nonzero terms, leaving the accumulator empty.
    fn drain(&mut self) -> Vec<(u32, Scalar)> {
        match self {
            Accumulator::Dense { slots, touched } => touched
                .drain(..)
                .filter_map(|m| slots[m as usize].take().filter(|c| !c.is_zero()).map(|c| (m, c)))
                .collect(),
            Accumulator::Sparse(map) => map.drain().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

/// `u ∨ v` under metric `g`. Operands may carry either tag; the result is
/// Grassmann-tagged.
pub fn clifford_product(u: &Multivector, v: &Multivector, g: &Metric) -> Result<Multivector, AlgebraError> {
    let n = g.dim();
    for m in [u, v] {
        if m.dim() != n {
            return Err(AlgebraError::DimensionMismatch { left: m.dim(), right: n });
        }
    }
    let u = convert_basis(u, g, BasisTag::Grassmann)?;
    let v = convert_basis(v, g, BasisTag::Grassmann)?;

    let mut acc = Accumulator::new(n);
    // Grassmann blade mask -> blade ∨ v
    let mut cache: HashMap<u32, Vec<(u32, Scalar)>> = HashMap::new();
    cache.insert(0, v.terms().map(|(b, c)| (b.mask(), c.clone())).collect());
    let mut result: Vec<(u32, Scalar)> = Vec::new();
    for (blade, coeff) in u.terms() {
        blade_action(blade.mask(), g, &mut cache, &mut acc);
        result.extend(cache[&blade.mask()].iter().map(|(m, c)| (*m, c * coeff)));
    }
    for (m, c) in &result {
        acc.add(*m, c, false);
    }
    Ok(collect(n, acc.drain()))
}

/// Ensures `e^A ∨ v` is cached for the blade `A = mask`, using
/// `e^a ∧ X = e^a ∨ X − e^a ⌋ X` with `a` the lowest index of `A`.
fn blade_action(mask: u32, g: &Metric, cache: &mut HashMap<u32, Vec<(u32, Scalar)>>, acc: &mut Accumulator) {
    if cache.contains_key(&mask) {
        return;
    }
    let a = mask.trailing_zeros() as usize + 1;
    let rest = mask & (mask - 1);
    // (A minus a and j_p, g^{a j_p}, subtract?) for each j_p in A minus a
    let contractions: Vec<(u32, &Scalar, bool)> = IndexSet::from_mask(rest)
        .indices()
        .enumerate()
        .map(|(p, j)| (rest & !(1 << (j - 1)), g.get(a, j), p % 2 == 0))
        .filter(|(_, entry, _)| !entry.is_zero())
        .collect();
    blade_action(rest, g, cache, acc);
    for &(sub, _, _) in &contractions {
        blade_action(sub, g, cache, acc);
    }
    act(a, &cache[&rest], g, acc);
    for &(sub, entry, negate) in &contractions {
        for (m, c) in &cache[&sub] {
            acc.add(*m, &(c * entry), negate);
        }
    }
    let acted = acc.drain();
    cache.insert(mask, acted);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: i64) -> Scalar {
        Scalar::from_i64(v)
    }

    fn set(ix: &[usize]) -> IndexSet {
        IndexSet::from_indices(ix).unwrap()
    }

    fn g3() -> Metric {
        Metric::from_i64_rows(&[&[2, 3, 5], &[3, 7, 11], &[5, 11, 13]]).unwrap()
    }

    fn grass(n: usize, terms: &[(i64, &[usize])]) -> Multivector {
        Multivector::from_terms(n, BasisTag::Grassmann, terms.iter().map(|(c, ix)| (set(ix), s(*c)))).unwrap()
    }

    #[test]
    fn generator_on_identity() {
        let g = g3();
        let one = Multivector::one(3, BasisTag::Grassmann);
        assert_eq!(vector_times_multivector(2, &one, &g).unwrap(), grass(3, &[(1, &[2])]));
    }

    #[test]
    fn generator_on_generator() {
        let g = g3();
        let e1 = grass(3, &[(1, &[1])]);
        assert_eq!(
            vector_times_multivector(2, &e1, &g).unwrap(),
            grass(3, &[(-1, &[1, 2]), (3, &[])])
        );
        assert_eq!(
            vector_times_multivector(1, &grass(3, &[(1, &[2])]), &g).unwrap(),
            grass(3, &[(1, &[1, 2]), (3, &[])])
        );
    }

    #[test]
    fn generator_on_bivector() {
        let g = g3();
        assert_eq!(
            vector_times_multivector(1, &grass(3, &[(1, &[2, 3])]), &g).unwrap(),
            grass(3, &[(1, &[1, 2, 3]), (3, &[3]), (-5, &[2])])
        );
    }

    #[test]
    fn generator_errors() {
        let g = g3();
        let one = Multivector::one(3, BasisTag::Grassmann);
        assert!(matches!(
            vector_times_multivector(4, &one, &g),
            Err(AlgebraError::IndexOutOfRange { index: 4, n: 3 })
        ));
        let c = Multivector::one(3, BasisTag::Clifford);
        assert!(vector_times_multivector(1, &c, &g).is_err());
    }

    #[test]
    fn anticommutator() {
        let g = g3();
        for i in 1..=3 {
            for j in 1..=3 {
                let ei = grass(3, &[(1, &[i])]);
                let ej = grass(3, &[(1, &[j])]);
                let sum = clifford_product(&ei, &ej, &g)
                    .unwrap()
                    .checked_add(&clifford_product(&ej, &ei, &g).unwrap())
                    .unwrap();
                assert_eq!(sum, Multivector::scalar(3, BasisTag::Grassmann, g.get(i, j).scale_i64(2)));
            }
        }
    }

    #[test]
    fn wedge_pair_product() {
        // (e1∧e3)(e2∧e3) with g13 = 5, g23 = 11, g12 = 3, g33 = 13
        let g = g3();
        let lhs = grass(3, &[(1, &[1, 3])]);
        let rhs = grass(3, &[(1, &[2, 3])]);
        let expected = grass(3, &[(-13, &[1, 2]), (11, &[1, 3]), (-5, &[2, 3]), (5 * 11 - 3 * 13, &[])]);
        assert_eq!(clifford_product(&lhs, &rhs, &g).unwrap(), expected);
    }

    #[test]
    fn accepts_clifford_operands() {
        let g = g3();
        let a = Multivector::basis(3, BasisTag::Clifford, &[1, 2]).unwrap();
        let one = Multivector::one(3, BasisTag::Grassmann);
        let prod = clifford_product(&a, &one, &g).unwrap();
        assert_eq!(prod, grass(3, &[(1, &[1, 2]), (3, &[])]));
    }
}
