//! Exact rationals with an `i64` fast path.
//!
//! Values that fit are held as `Ratio<i64>` and combined with checked
//! arithmetic; an overflowing operation is redone in `BigRational` and the
//! result demoted again when it fits. The representation is canonical, so
//! derived equality and hashing agree with numeric equality.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) enum Rational {
    /// Numerator is never `i64::MIN`, so negation and `abs` cannot overflow.
    Small(Ratio<i64>),
    /// Only values that `Small` cannot hold.
    Big(BigRational),
}

impl Rational {
    pub(crate) fn zero() -> Self {
        Rational::Small(Ratio::from_integer(0))
    }

    pub(crate) fn one() -> Self {
        Rational::Small(Ratio::from_integer(1))
    }

    pub(crate) fn from_i64(v: i64) -> Self {
        Rational::small(Ratio::from_integer(v)).unwrap_or_else(|| Rational::Big(BigRational::from_integer(v.into())))
    }

    fn small(r: Ratio<i64>) -> Option<Self> {
        (*r.numer() != i64::MIN).then_some(Rational::Small(r))
    }

    pub(crate) fn from_big(b: BigRational) -> Self {
        match (b.numer().to_i64(), b.denom().to_i64()) {
            (Some(n), Some(d)) if n != i64::MIN => Rational::Small(Ratio::new_raw(n, d)),
            _ => Rational::Big(b),
        }
    }

    pub(crate) fn to_big(&self) -> BigRational {
        match self {
            Rational::Small(r) => BigRational::new_raw(BigInt::from(*r.numer()), BigInt::from(*r.denom())),
            Rational::Big(b) => b.clone(),
        }
    }

    pub(crate) fn is_zero(&self) -> bool {
        match self {
            Rational::Small(r) => r.is_zero(),
            Rational::Big(_) => false,
        }
    }

    pub(crate) fn is_one(&self) -> bool {
        match self {
            Rational::Small(r) => r.is_one(),
            Rational::Big(_) => false,
        }
    }

    pub(crate) fn is_negative(&self) -> bool {
        match self {
            Rational::Small(r) => r.is_negative(),
            Rational::Big(b) => b.is_negative(),
        }
    }

    pub(crate) fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Panics on zero.
    pub(crate) fn recip(&self) -> Self {
        match self {
            Rational::Small(r) => Rational::small(r.recip()).expect("denominator is positive and fits"),
            Rational::Big(b) => Rational::from_big(b.recip()),
        }
    }

    pub(crate) fn to_i64(&self) -> Option<i64> {
        match self {
            Rational::Small(r) if r.is_integer() => Some(*r.numer()),
            _ => None,
        }
    }

    fn combine(
        &self,
        rhs: &Rational,
        small: impl FnOnce(&Ratio<i64>, &Ratio<i64>) -> Option<Ratio<i64>>,
        big: impl FnOnce(BigRational, BigRational) -> BigRational,
    ) -> Rational {
        if let (Rational::Small(a), Rational::Small(b)) = (self, rhs) {
            if let Some(r) = small(a, b).and_then(Rational::small) {
                return r;
            }
        }
        Rational::from_big(big(self.to_big(), rhs.to_big()))
    }
}

impl<'a> Add<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn add(self, rhs: &Rational) -> Rational {
        self.combine(rhs, |a, b| a.checked_add(b), |a, b| a + b)
    }
}

impl<'a> Sub<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn sub(self, rhs: &Rational) -> Rational {
        self.combine(rhs, |a, b| a.checked_sub(b), |a, b| a - b)
    }
}

impl<'a> Mul<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn mul(self, rhs: &Rational) -> Rational {
        self.combine(rhs, |a, b| a.checked_mul(b), |a, b| a * b)
    }
}

/// Panics on division by zero.
impl<'a> Div<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero");
        // via the reciprocal: `Ratio::new` would negate an `i64::MIN` numerator
        self.combine(rhs, |a, b| a.checked_mul(&b.recip()), |a, b| a / b)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        match self {
            Rational::Small(r) => Rational::Small(-r),
            Rational::Big(b) => Rational::from_big(-b),
        }
    }
}

/// `p` or `p/q` in lowest terms.
impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rational::Small(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Rational::Small(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Rational::Big(b) if b.is_integer() => write!(f, "{}", b.numer()),
            Rational::Big(b) => write!(f, "{}/{}", b.numer(), b.denom()),
        }
    }
}
