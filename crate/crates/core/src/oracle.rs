//! Ground-truth engine built only from the defining rules of the Clifford
//! product.
//!
//! Generator words are rewritten with two rules until every word is strictly
//! ascending:
//!
//! * `… e^i e^i …` → `g^{ii} · (… …)`
//! * `… e^i e^j …` with `i > j` → `2 g^{ij} · (… …) − (… e^j e^i …)`
//!
//! An ascending word then names a Clifford basis blade. Nothing here shares
//! code with the Q-operator series in [`crate::conversion`]; that is what
//! makes it usable as an oracle.

use itertools::Itertools;

use crate::error::AlgebraError;
use crate::index_set::IndexSet;
use crate::metric::Metric;
use crate::multivector::{BasisTag, Multivector};
use crate::scalar::Scalar;

/// Default bound on word length for [`alternation_wedge`].
pub const DEFAULT_ALTERNATION_BOUND: usize = 7;

/// Which reducible adjacent pair to rewrite first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Strategy {
    #[default]
    Leftmost,
    Rightmost,
}

/// Normalizes a generator word (1-based indices, any order, repeats allowed)
/// into the Clifford basis, reducing the leftmost pair first.
pub fn normalize_word(word: &[usize], g: &Metric) -> Result<Multivector, AlgebraError> {
    normalize_word_with(word, g, Strategy::Leftmost)
}

pub fn normalize_word_with(word: &[usize], g: &Metric, strategy: Strategy) -> Result<Multivector, AlgebraError> {
    let n = g.dim();
    if let Some(&i) = word.iter().find(|&&i| i == 0 || i > n) {
        return Err(AlgebraError::IndexOutOfRange { index: i, n });
    }
    let mut out = Multivector::zero(n, BasisTag::Clifford);
    let mut queue: Vec<(Scalar, Vec<usize>)> = vec![(Scalar::one(), word.to_vec())];
    while let Some((coeff, w)) = queue.pop() {
        if coeff.is_zero() {
            continue;
        }
        let reducible = |p: &usize| w[*p] >= w[*p + 1];
        let pair = match strategy {
            Strategy::Leftmost => (0..w.len().saturating_sub(1)).find(reducible),
            Strategy::Rightmost => (0..w.len().saturating_sub(1)).rev().find(reducible),
        };
        let Some(p) = pair else {
            let blade = IndexSet::from_indices(&w).expect("ascending word has distinct indices");
            out.add_term(blade, &coeff);
            continue;
        };
        let (i, j) = (w[p], w[p + 1]);
        let mut contracted = w.clone();
        contracted.drain(p..p + 2);
        if i == j {
            queue.push((&coeff * g.get(i, i), contracted));
        } else {
            queue.push((coeff.scale_i64(2) * g.get(i, j), contracted));
            let mut swapped = w;
            swapped.swap(p, p + 1);
            queue.push((-coeff, swapped));
        }
    }
    Ok(out)
}

/// Bilinear product of Clifford-tagged operands by word concatenation.
pub fn oracle_clifford_product(u: &Multivector, v: &Multivector, g: &Metric) -> Result<Multivector, AlgebraError> {
    let n = g.dim();
    for m in [u, v] {
        if m.dim() != n {
            return Err(AlgebraError::DimensionMismatch { left: m.dim(), right: n });
        }
        m.check_tag(BasisTag::Clifford)?;
    }
    let mut out = Multivector::zero(n, BasisTag::Clifford);
    for (a, ca) in u.terms() {
        for (b, cb) in v.terms() {
            let word: Vec<usize> = a.indices().chain(b.indices()).collect();
            out.add_scaled(&normalize_word(&word, g)?, &(ca * cb));
        }
    }
    Ok(out)
}

/// `(1/k!) Σ_σ sign(σ) · normalize(σ(w))`, in the Clifford basis.
pub fn alternation_wedge(word: &[usize], g: &Metric) -> Result<Multivector, AlgebraError> {
    alternation_wedge_bounded(word, g, DEFAULT_ALTERNATION_BOUND)
}

pub fn alternation_wedge_bounded(word: &[usize], g: &Metric, max_len: usize) -> Result<Multivector, AlgebraError> {
    let k = word.len();
    if k > max_len {
        return Err(AlgebraError::WordTooLong { len: k, max: max_len });
    }
    let mut out = Multivector::zero(g.dim(), BasisTag::Clifford);
    for perm in (0..k).permutations(k) {
        let inversions = perm
            .iter()
            .tuple_combinations()
            .filter(|(a, b)| a > b)
            .count();
        let permuted: Vec<usize> = perm.iter().map(|&p| word[p]).collect();
        let sign = Scalar::from_i64(if inversions % 2 == 0 { 1 } else { -1 });
        out.add_scaled(&normalize_word(&permuted, g)?, &sign);
    }
    let factorial: i64 = (1..=k as i64).product();
    Ok(out.scale(&Scalar::ratio(1, factorial)))
}
