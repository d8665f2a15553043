//! Small helpers around exact rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

pub fn int(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

pub fn ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> BigRational {
    BigRational::new(num.into(), den.into())
}

pub fn pow_int(base: u128, exp: u32) -> BigInt {
    num_traits::pow(BigInt::from(base), exp as usize)
}

/// `p/q` with an explicit denominator, even when it is 1.
pub fn rat_string(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub fn rat_f64(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

/// Smallest integer `>= q`.
pub fn ceil(q: &BigRational) -> BigInt {
    q.ceil().to_integer()
}

pub fn clamp_zero(q: &BigRational) -> BigRational {
    if q.is_negative() {
        BigRational::zero()
    } else {
        q.clone()
    }
}

/// A rational as it appears in reports: authoritative `p/q` string plus a
/// convenience float.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RatValue {
    pub exact: String,
    pub approx: f64,
}

impl From<&BigRational> for RatValue {
    fn from(q: &BigRational) -> Self {
        RatValue {
            exact: rat_string(q),
            approx: rat_f64(q),
        }
    }
}

/// A rational strictly below `e`.
pub fn e_lower() -> BigRational {
    ratio(BigInt::from(271_828_182_845_904_523_536u128), pow_int(10, 20))
}

/// A rational strictly above `e`.
pub fn e_upper() -> BigRational {
    e_lower() + ratio(1, pow_int(10, 20))
}

/// A rational strictly below `π`.
pub fn pi_lower() -> BigRational {
    ratio(BigInt::from(314_159_265_358_979_323_846u128), pow_int(10, 20))
}

/// A rational strictly above `π`.
pub fn pi_upper() -> BigRational {
    pi_lower() + ratio(1, pow_int(10, 20))
}

pub fn one() -> BigRational {
    BigRational::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_brackets() {
        assert!(rat_f64(&e_lower()) <= std::f64::consts::E);
        assert!(rat_f64(&e_upper()) >= std::f64::consts::E);
        assert!(rat_f64(&pi_lower()) <= std::f64::consts::PI);
        assert!(rat_f64(&pi_upper()) >= std::f64::consts::PI);
    }

    #[test]
    fn formatting() {
        assert_eq!(rat_string(&int(3)), "3/1");
        assert_eq!(rat_string(&ratio(6, 4)), "3/2");
        assert_eq!(ceil(&ratio(1, 6)), BigInt::from(1));
        assert_eq!(ceil(&ratio(-7, 2)), BigInt::from(-3));
    }
}
