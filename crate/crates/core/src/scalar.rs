//! Exact field elements.
//!
//! A [`Scalar`] is a Gaussian rational `re + im·i`. In rational mode the
//! imaginary part is always zero and every operation stays on the real fast
//! path.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::AlgebraError;
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar {
    re: Rational,
    im: Rational,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar {
            re: Rational::zero(),
            im: Rational::zero(),
        }
    }

    pub fn one() -> Self {
        Scalar::from_i64(1)
    }

    pub fn imaginary_unit() -> Self {
        Scalar {
            re: Rational::zero(),
            im: Rational::one(),
        }
    }

    pub fn from_i64(v: i64) -> Self {
        Scalar::from_parts(Rational::from_i64(v), Rational::zero())
    }

    /// `numer / denom` reduced to lowest terms.
    ///
    /// Panics if `denom` is zero.
    pub fn ratio(numer: i64, denom: i64) -> Self {
        Scalar::real(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn real(re: BigRational) -> Self {
        Scalar::from_parts(Rational::from_big(re), Rational::zero())
    }

    pub fn complex(re: BigRational, im: BigRational) -> Self {
        Scalar::from_parts(Rational::from_big(re), Rational::from_big(im))
    }

    fn from_parts(re: Rational, im: Rational) -> Self {
        Scalar { re, im }
    }

    pub fn re(&self) -> BigRational {
        self.re.to_big()
    }

    pub fn im(&self) -> BigRational {
        self.im.to_big()
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// The integer value, if this scalar is a real integer that fits in `i64`.
    pub fn to_i64(&self) -> Option<i64> {
        if self.is_real() {
            self.re.to_i64()
        } else {
            None
        }
    }

    pub fn conj(&self) -> Self {
        Scalar::from_parts(self.re.clone(), -&self.im)
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.is_real() {
            return Some(Scalar::from_parts(self.re.recip(), Rational::zero()));
        }
        let norm = &(&self.re * &self.re) + &(&self.im * &self.im);
        Some(Scalar::from_parts(&self.re / &norm, -&(&self.im / &norm)))
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Option<Self> {
        rhs.recip().map(|r| self * &r)
    }

    pub fn scale_i64(&self, k: i64) -> Self {
        let k = Rational::from_i64(k);
        Scalar::from_parts(&self.re * &k, &self.im * &k)
    }

    /// Display sign used when joining terms: the sign of the real part, or of
    /// the imaginary part for pure imaginary values. Mixed values count as
    /// positive.
    pub fn display_negative(&self) -> bool {
        if self.im.is_zero() {
            self.re.is_negative()
        } else if self.re.is_zero() {
            self.im.is_negative()
        } else {
            false
        }
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(BigRational::new(num, den))
}

/// Canonical text: `p`, `p/q`, `r/s i`, or `p/q+r/s i` / `p/q-r/s i`.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        if self.re.is_zero() {
            return write!(f, "{} i", self.im);
        }
        let sign = if self.im.is_negative() { '-' } else { '+' };
        write!(f, "{}{}{} i", self.re, sign, self.im.abs())
    }
}

impl FromStr for Scalar {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || AlgebraError::InvalidScalar(s.to_string());
        let t = s.trim();
        let Some(body) = t.strip_suffix('i') else {
            return parse_rational(t).map(Scalar::real).ok_or_else(bad);
        };
        let body = body.trim_end();
        // split at the last sign that is not the leading one
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i)
            .last();
        match split {
            Some(i) => {
                let re = parse_rational(&body[..i]).ok_or_else(bad)?;
                let im_text = &body[i..];
                let im = parse_rational(im_text.trim_start_matches('+')).ok_or_else(bad)?;
                Ok(Scalar::complex(re, im))
            }
            None => {
                let im = parse_rational(body).ok_or_else(bad)?;
                Ok(Scalar::complex(BigRational::zero(), im))
            }
        }
    }
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Self {
        Scalar::from_i64(v)
    }
}

impl From<BigRational> for Scalar {
    fn from(v: BigRational) -> Self {
        Scalar::real(v)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar::from_parts(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar::from_parts(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.im.is_zero() && rhs.im.is_zero() {
            return Scalar::from_parts(&self.re * &rhs.re, Rational::zero());
        }
        Scalar::from_parts(
            &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
            &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
        )
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::from_parts(-&self.re, -&self.im)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.re = &self.re + &rhs.re;
        if !rhs.im.is_zero() {
            self.im = &self.im + &rhs.im;
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.re = &self.re - &rhs.re;
        if !rhs.im.is_zero() {
            self.im = &self.im - &rhs.im;
        }
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn canonical_form() {
        assert_eq!(Scalar::ratio(2, 4), Scalar::ratio(1, 2));
        assert_eq!(Scalar::ratio(3, -6), Scalar::ratio(-1, 2));
        assert_eq!(Scalar::ratio(3, -6).to_string(), "-1/2");
        assert_eq!(Scalar::from_i64(-7).to_string(), "-7");
    }

    #[test]
    fn gaussian_arithmetic() {
        let i = Scalar::imaginary_unit();
        assert_eq!(&i * &i, Scalar::from_i64(-1));
        let z = Scalar::from_i64(3) + Scalar::imaginary_unit().scale_i64(4);
        let w = z.recip().unwrap();
        assert_eq!(&z * &w, Scalar::one());
        assert_eq!(z.conj().conj(), z);
        assert!(Scalar::zero().recip().is_none());
    }

    #[test]
    fn display_and_parse() {
        let cases = [
            Scalar::ratio(5, 3),
            Scalar::from_i64(-4),
            Scalar::complex(BigRational::new(1.into(), 2.into()), BigRational::new((-3).into(), 4.into())),
            Scalar::complex(BigRational::zero(), BigRational::new((-2).into(), 1.into())),
            Scalar::complex(BigRational::new((-1).into(), 1.into()), BigRational::new(1.into(), 1.into())),
        ];
        for c in cases {
            let text = c.to_string();
            assert_eq!(text.parse::<Scalar>().unwrap(), c, "{text}");
        }
        assert_eq!(
            Scalar::complex(BigRational::new(1.into(), 2.into()), BigRational::new(3.into(), 1.into())).to_string(),
            "1/2+3 i"
        );
        assert!("1/0".parse::<Scalar>().is_err());
        assert!("abc".parse::<Scalar>().is_err());
    }

    #[test]
    fn display_sign() {
        assert!(Scalar::from_i64(-2).display_negative());
        assert!(Scalar::imaginary_unit().scale_i64(-1).display_negative());
        assert!(!Scalar::complex(BigRational::from_integer((-1).into()), BigRational::one()).display_negative());
    }
}
