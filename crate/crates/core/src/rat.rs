//! Exact rational scalars.
//!
//! All arithmetic in this crate is exact: scalars are arbitrary-precision
//! rationals kept in lowest terms with a positive denominator, so results
//! never depend on evaluation order and equality is decidable.

use num_bigint::BigInt;
use num_rational::BigRational;

/// Exact rational scalar. Always reduced, denominator always positive.
pub type Rat = BigRational;

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational `n / d`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Renders a rational as `n` or `n/d`.
pub fn render_rat(r: &Rat) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn reduced_and_positive_denominator() {
        let r = rat(4, -6);
        assert_eq!(r, rat(-2, 3));
        assert_eq!(render_rat(&r), "-2/3");
        assert!(rat(0, 5).is_zero());
    }

    #[test]
    fn arithmetic_is_exact() {
        let third = rat(1, 3);
        let sum = &third + &third + &third;
        assert_eq!(sum, rat_int(1));
    }
}
