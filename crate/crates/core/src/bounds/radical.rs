use crate::rational::{int, rat_string};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;
use std::cmp::Ordering;

/// `rational + coeff·√radicand` with exact rational parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Radical {
    pub rational: BigRational,
    pub coeff: BigRational,
    pub radicand: BigInt,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RadicalValue {
    pub rational: String,
    pub coeff: String,
    pub radicand: String,
    pub approx: f64,
}

impl Radical {
    pub fn new(rational: BigRational, coeff: BigRational, radicand: impl Into<BigInt>) -> Self {
        let radicand = radicand.into();
        assert!(!radicand.is_negative(), "negative radicand");
        Radical {
            rational,
            coeff,
            radicand,
        }
    }

    pub fn from_rational(q: BigRational) -> Self {
        Radical::new(q, BigRational::zero(), 0)
    }

    /// -1, 0 or 1 — decided exactly by squaring through the sign cases.
    pub fn signum(&self) -> Ordering {
        let (a, b) = (&self.rational, &self.coeff);
        let b2n = b * b * int(self.radicand.clone());
        let sa = a.cmp(&BigRational::zero());
        let sb = if b2n.is_zero() { Ordering::Equal } else { b.cmp(&BigRational::zero()) };
        match (sa, sb) {
            (Ordering::Equal, s) | (s, Ordering::Equal) => s,
            (x, y) if x == y => x,
            // opposite signs: the larger magnitude wins
            (sa, _) => match (a * a).cmp(&b2n) {
                Ordering::Greater => sa,
                Ordering::Less => sa.reverse(),
                Ordering::Equal => Ordering::Equal,
            },
        }
    }

    /// Exact comparison with a rational.
    pub fn cmp_rational(&self, q: &BigRational) -> Ordering {
        Radical::new(&self.rational - q, self.coeff.clone(), self.radicand.clone()).signum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.signum() != Ordering::Less
    }

    pub fn to_f64(&self) -> f64 {
        let r = self.radicand.to_f64().unwrap_or(f64::NAN).sqrt();
        self.rational.to_f64().unwrap_or(f64::NAN) + self.coeff.to_f64().unwrap_or(f64::NAN) * r
    }

    pub fn value(&self) -> RadicalValue {
        RadicalValue {
            rational: rat_string(&self.rational),
            coeff: rat_string(&self.coeff),
            radicand: self.radicand.to_string(),
            approx: self.to_f64(),
        }
    }
}

/// `q <= r`, exactly.
pub fn rational_ge_radical(q: &BigRational, r: &Radical) -> bool {
    r.cmp_rational(q) != Ordering::Greater
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn signs() {
        let r = |a: i64, b: i64, n: i64| Radical::new(int(a), int(b), n).signum();
        assert_eq!(r(0, 0, 5), Ordering::Equal);
        assert_eq!(r(-3, 1, 9), Ordering::Equal);
        assert_eq!(r(-3, 1, 10), Ordering::Greater);
        assert_eq!(r(-3, 1, 8), Ordering::Less);
        assert_eq!(r(3, -1, 8), Ordering::Greater);
        assert_eq!(r(3, -1, 10), Ordering::Less);
        assert_eq!(r(-1, -1, 2), Ordering::Less);
        assert_eq!(r(5, 7, 0), Ordering::Greater);
        // √2304/16 - 3 = 0
        let z = Radical::new(int(-3), ratio(1, 16), 2304);
        assert_eq!(z.signum(), Ordering::Equal);
    }
}
