//! Arbitrary-precision rational scalars.
//!
//! Everything downstream is exact: a value is either a `Rat` in lowest terms
//! with positive denominator (guaranteed by `num_rational::Ratio`) or it does
//! not exist. Rationals serialize as plain decimal strings (`-3`, `5/2`).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

pub type Rat = BigRational;

/// Integer as a rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `a/b` as a rational; `b` must be nonzero.
pub fn ratio(a: i64, b: i64) -> Rat {
    Rat::new(BigInt::from(a), BigInt::from(b))
}

/// Parse `"n"` or `"n/d"` with optional sign. Decimal points are rejected:
/// all inputs must be exact.
pub fn parse_rat(s: &str) -> Result<Rat, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty rational".into());
    }
    let parse_int = |part: &str| -> Result<BigInt, String> {
        part.trim()
            .parse::<BigInt>()
            .map_err(|_| format!("`{part}` is not an exact integer"))
    };
    match s.split_once('/') {
        None => Ok(Rat::from_integer(parse_int(s)?)),
        Some((num, den)) => {
            let num = parse_int(num)?;
            let den = parse_int(den)?;
            if den.is_zero() {
                return Err(format!("zero denominator in `{s}`"));
            }
            Ok(Rat::new(num, den))
        }
    }
}

/// `true` when `r` is a (possibly negative) integer.
pub fn is_integer(r: &Rat) -> bool {
    r.is_integer()
}

/// Sign-split for pretty-printers: `(|r|, r < 0)`.
pub fn abs_parts(r: &Rat) -> (Rat, bool) {
    (r.abs(), r.is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_normalizes() {
        assert_eq!(parse_rat("6/4").unwrap(), ratio(3, 2));
        assert_eq!(parse_rat("-6/4").unwrap(), ratio(-3, 2));
        assert_eq!(parse_rat("6/-4").unwrap(), ratio(-3, 2));
        assert_eq!(parse_rat(" 7 ").unwrap(), rat(7));
        assert!(parse_rat("1.5").is_err());
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("").is_err());
    }

    #[test]
    fn display_is_decimal_string() {
        assert_eq!(ratio(-3, 2).to_string(), "-3/2");
        assert_eq!(rat(263671875).to_string(), "263671875");
    }
}
