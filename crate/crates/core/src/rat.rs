//! Thin helpers around `BigRational`.

use num_bigint::BigInt;
use num_integer::Integer;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// The exact scalar type used throughout the library.
pub type Rat = BigRational;

pub fn rat_i(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rat {
    assert!(d != 0, "zero denominator");
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn is_int(x: &Rat) -> bool {
    x.denom().is_one()
}

/// Floor of a rational number as a `BigInt`.
pub fn floor_int(x: &Rat) -> BigInt {
    x.floor().to_integer()
}

/// Ceiling of a rational number as a `BigInt`.
pub fn ceil_int(x: &Rat) -> BigInt {
    x.ceil().to_integer()
}

/// Render as `p` or `p/q`, matching the JSON wire format for cycles.
pub fn rat_str(x: &Rat) -> String {
    if is_int(x) {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parse `p` or `p/q`.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
        Some((p, q)) => {
            let p = p.trim().parse::<BigInt>().ok()?;
            let q = q.trim().parse::<BigInt>().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(BigRational::new(p, q))
            }
        }
    }
}

/// Integer square root (floor) of a nonnegative `BigInt`.
pub fn isqrt(n: &BigInt) -> BigInt {
    assert!(!n.is_negative(), "isqrt of negative number");
    n.sqrt()
}

/// Smallest integer `>= sqrt(x)` for a nonnegative rational `x`.
pub fn sqrt_ceil(x: &Rat) -> BigInt {
    assert!(!x.is_negative());
    // sqrt(p/q) <= (isqrt(p*q) + 1) / q, so the ceiling of the left side is
    // at most ceil of the right side; tighten by decrementing while valid.
    let p = x.numer();
    let q = x.denom();
    let mut c = Integer::div_ceil(&(isqrt(&(p * q)) + 1u32), q);
    while c > BigInt::zero() {
        let m = &c - 1u32;
        if BigRational::from_integer(m.clone()) * BigRational::from_integer(m.clone()) >= *x {
            c = m;
        } else {
            break;
        }
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        assert_eq!(rat_str(&parse_rat("3/6").unwrap()), "1/2");
        assert_eq!(rat_str(&parse_rat("-4").unwrap()), "-4");
        assert_eq!(rat_str(&parse_rat(" 7 / 2 ").unwrap()), "7/2");
        assert!(parse_rat("1/0").is_none());
        assert!(parse_rat("x").is_none());
    }

    #[test]
    fn sqrt_bounds() {
        assert_eq!(sqrt_ceil(&rat_i(0)), BigInt::from(0));
        assert_eq!(sqrt_ceil(&rat_i(16)), BigInt::from(4));
        assert_eq!(sqrt_ceil(&rat_i(17)), BigInt::from(5));
        assert_eq!(sqrt_ceil(&rat(1, 4)), BigInt::from(1));
        assert_eq!(sqrt_ceil(&rat(9, 4)), BigInt::from(2));
        assert_eq!(sqrt_ceil(&rat(10, 4)), BigInt::from(2));
    }
}
