//! Exact rational scalars.
//!
//! Everything in the crate is computed over `BigRational`, which keeps
//! values in lowest terms with a positive denominator.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{parse_err, Result};

pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

pub fn one() -> Scalar {
    Scalar::one()
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn factorial(n: usize) -> Scalar {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    Scalar::from_integer(acc)
}

/// Serialisation form used by every file format: always `num/den`.
pub fn to_fraction_string(s: &Scalar) -> String {
    format!("{}/{}", s.numer(), s.denom())
}

/// Short human form: `3`, `-1/2`.
pub fn to_short_string(s: &Scalar) -> String {
    if s.is_integer() {
        s.numer().to_string()
    } else {
        format!("{}/{}", s.numer(), s.denom())
    }
}

pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let t = text.trim();
    if t.is_empty() {
        return Err(parse_err("empty scalar"));
    }
    let value = if let Some((n, d)) = t.split_once('/') {
        let n = BigInt::from_str(n.trim()).map_err(|e| parse_err(format!("`{t}`: {e}")))?;
        let d = BigInt::from_str(d.trim()).map_err(|e| parse_err(format!("`{t}`: {e}")))?;
        if d.is_zero() {
            return Err(parse_err(format!("`{t}`: zero denominator")));
        }
        Scalar::new(n, d)
    } else {
        Scalar::from_integer(BigInt::from_str(t).map_err(|e| parse_err(format!("`{t}`: {e}")))?)
    };
    Ok(value)
}

pub(crate) fn is_negative(s: &Scalar) -> bool {
    s.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn lowest_terms() {
        let s = frac(6, -4);
        assert_eq!(to_fraction_string(&s), "-3/2");
        assert_eq!(to_short_string(&int(7)), "7");
        assert_eq!(to_fraction_string(&int(7)), "7/1");
    }

    #[test]
    fn parse_round_trip() {
        for t in ["0", "5", "-3/9", "12/4"] {
            let s = parse_scalar(t).unwrap();
            assert_eq!(parse_scalar(&to_fraction_string(&s)).unwrap(), s);
        }
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("x").is_err());
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), int(1));
        assert_eq!(factorial(5), int(120));
    }

    proptest! {
        #[test]
        fn addition_matches_integer_cross_multiplication(
            a in -1000i64..1000, b in 1i64..1000, c in -1000i64..1000, d in 1i64..1000
        ) {
            let sum = frac(a, b) + frac(c, d);
            prop_assert_eq!(sum.clone(), frac(a * d + c * b, b * d));
            let g = num_integer::Integer::gcd(sum.numer(), sum.denom());
            prop_assert!(g == BigInt::one());
            prop_assert!(sum.denom() > &BigInt::zero());
        }
    }
}
