//! Arbitrary-precision rationals and their text forms.
//!
//! Rationals travel through JSON as strings `"p/q"` in lowest terms with a
//! positive denominator (`"0/1"`, `"-3/4"`). CSV output instead carries
//! decimal approximations, formatted to a fixed number of significant digits
//! so repeated runs are byte-identical.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Parses `"p/q"` or a bare integer `"p"`. Rejects a zero denominator.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let err = || Error::InvalidRational { text: text.to_owned() };
    let (num_text, den_text) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let numer: BigInt = num_text.parse().map_err(|_| err())?;
    let denom: BigInt = match den_text {
        Some(d) => d.parse().map_err(|_| err())?,
        None => BigInt::from(1),
    };
    if denom.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(numer, denom))
}

/// Renders in lowest terms with an explicit positive denominator, e.g. `5/4`,
/// `0/1`. Inverse of [`parse_rational`] up to reduction.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Fixed-significant-digit decimal form, plain notation (no exponent).
/// `format_significant(1.0 / 72.0, 12)` is `"0.0138888888889"`.
pub fn format_significant(x: f64, digits: usize) -> String {
    assert!(digits > 0);
    if x == 0.0 {
        return "0".to_owned();
    }
    let magnitude = x.abs().log10().floor() as i64;
    let decimals = (digits as i64 - 1 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use proptest::prelude::*;

    #[test]
    fn parses_fractions_and_integers() {
        assert_eq!(parse_rational("5/4").unwrap(), Rational::new(5.into(), 4.into()));
        assert_eq!(parse_rational("-7").unwrap(), Rational::from_integer((-7).into()));
        assert_eq!(parse_rational("6/-4").unwrap(), Rational::new((-3).into(), 2.into()));
    }

    #[test]
    fn rejects_zero_denominator_and_junk() {
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("").is_err());
        assert!(parse_rational("1/2/3").is_err());
        assert!(parse_rational("a/2").is_err());
        assert!(parse_rational("1.5").is_err());
    }

    #[test]
    fn formats_in_lowest_terms_with_positive_denominator() {
        assert_eq!(format_rational(&Rational::zero()), "0/1");
        assert_eq!(format_rational(&Rational::one()), "1/1");
        assert_eq!(format_rational(&Rational::new(10.into(), (-8).into())), "-5/4");
    }

    #[test]
    fn significant_digit_formatting() {
        assert_eq!(format_significant(1.0 / 72.0, 12), "0.0138888888889");
        assert_eq!(format_significant(0.25, 12), "0.250000000000");
        assert_eq!(format_significant(144.0, 12), "144.000000000");
        assert_eq!(format_significant(0.0, 12), "0");
    }

    proptest! {
        #[test]
        fn parse_inverts_format(n in -1000i64..1000, d in 1i64..1000) {
            let r = Rational::new(n.into(), d.into());
            prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
        }
    }
}
