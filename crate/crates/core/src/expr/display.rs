//! Text rendering of multivectors in expression syntax.
//!
//! Terms are `[-]c*e(i,j,...)` joined by ` + ` / ` - `, the scalar blade is
//! `c*e`, and unit coefficients are elided on non-scalar blades. A lone
//! `+1` scalar renders as `e`. Clifford-basis blades use `E(...)`. Complex
//! coefficients are written with `*i` so the output parses back.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::index_set::IndexSet;
use crate::multivector::{BasisTag, Multivector};
use crate::scalar::Scalar;

pub fn format_text(mv: &Multivector) -> String {
    if mv.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (blade, coeff)) in mv.terms().enumerate() {
        let negative = coeff.display_negative();
        let magnitude = if negative { -coeff } else { coeff.clone() };
        match (k, negative) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        out.push_str(&term_text(blade, &magnitude, mv.tag(), !negative));
    }
    out
}

fn blade_text(blade: IndexSet, tag: BasisTag) -> String {
    let head = match tag {
        BasisTag::Grassmann => 'e',
        BasisTag::Clifford => 'E',
    };
    if blade.is_empty() {
        return "e".to_string();
    }
    let list: Vec<String> = blade.indices().map(|i| i.to_string()).collect();
    format!("{head}({})", list.join(","))
}

fn rational_text(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// `magnitude` is already sign-adjusted by [`Scalar::display_negative`].
fn term_text(blade: IndexSet, magnitude: &Scalar, tag: BasisTag, positive: bool) -> String {
    let b = blade_text(blade, tag);
    if magnitude.is_one() && (!blade.is_empty() || positive) {
        return b;
    }
    format!("{}*{b}", coeff_text(magnitude))
}

fn coeff_text(c: &Scalar) -> String {
    let (re, im) = (c.re(), c.im());
    if im.is_zero() {
        return rational_text(&re);
    }
    let imag = |v: &BigRational| {
        if v.abs().is_one() {
            "i".to_string()
        } else {
            format!("{}*i", rational_text(&v.abs()))
        }
    };
    if re.is_zero() {
        // sign was stripped by the caller
        return imag(&im);
    }
    let sign = if im.is_negative() { '-' } else { '+' };
    format!("({}{sign}{})", rational_text(&re), imag(&im))
}
