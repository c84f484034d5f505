//! The scalar interface shared by the two numeric modes.
//!
//! Float mode (`f64`) covers everything built from trigonometric functions;
//! exact mode (`Rat`, arbitrary-precision rationals) backs the reachable-set
//! search, where tie detection must be decidable. All engine code is generic
//! over [`Scalar`] so both modes run through the same iteration logic.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

/// Arbitrary-precision rational scalar.
pub type Rat = num_rational::BigRational;

pub trait Scalar: Clone + PartialEq + PartialOrd + std::fmt::Debug + Send + Sync + 'static {
    /// True when arithmetic is exact (no rounding, decidable equality).
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(v: i64) -> Self;
    fn from_ratio(num: i64, den: i64) -> Self;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn is_zero_val(&self) -> bool;
    fn to_f64(&self) -> f64;

    /// Default tie tolerance for farthest-point selection in this mode.
    fn default_tie_tol() -> Self;
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_int(v: i64) -> Self {
        v as f64
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn is_zero_val(&self) -> bool {
        *self == 0.0
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn default_tie_tol() -> Self {
        crate::tol::TIE_FLOAT
    }
}

impl Scalar for Rat {
    const EXACT: bool = true;

    fn zero() -> Self {
        Rat::from_integer(BigInt::from(0))
    }
    fn one() -> Self {
        Rat::from_integer(BigInt::from(1))
    }
    fn from_int(v: i64) -> Self {
        Rat::from_integer(BigInt::from(v))
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        Rat::new(BigInt::from(num), BigInt::from(den))
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn is_zero_val(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn to_f64(&self) -> f64 {
        let n = self.numer().to_f64().unwrap_or(f64::NAN);
        let d = self.denom().to_f64().unwrap_or(f64::NAN);
        let direct = n / d;
        if direct.is_finite() {
            direct
        } else {
            big_ratio_to_f64(self.numer(), self.denom())
        }
    }
    fn default_tie_tol() -> Self {
        <Rat as Scalar>::zero()
    }
}

/// Conversion for ratios whose parts individually overflow f64: shift the
/// numerator so the integer quotient fits in ~64 bits, then scale back.
fn big_ratio_to_f64(n: &BigInt, d: &BigInt) -> f64 {
    if num_traits::Zero::is_zero(n) {
        return 0.0;
    }
    let sign = if n.is_negative() != d.is_negative() {
        -1.0
    } else {
        1.0
    };
    let (na, da) = (n.abs(), d.abs());
    let shift: i64 = na.bits() as i64 - da.bits() as i64 - 64;
    let scaled = if shift >= 0 {
        &na >> (shift as usize)
    } else {
        &na << ((-shift) as usize)
    };
    let q = scaled / &da;
    sign * q.to_f64().unwrap_or(f64::NAN) * 2f64.powi(shift as i32)
}

/// Parse a scalar in point-set file syntax: a bare integer or an exact
/// `p/q` string.
pub fn parse_rat(text: &str) -> Option<Rat> {
    let t = text.trim();
    if let Some((p, q)) = t.split_once('/') {
        let num: BigInt = p.trim().parse().ok()?;
        let den: BigInt = q.trim().parse().ok()?;
        if num_traits::Zero::is_zero(&den) {
            return None;
        }
        Some(Rat::new(num, den))
    } else {
        let num: BigInt = t.parse().ok()?;
        Some(Rat::from_integer(num))
    }
}

/// Render a rational in `p/q` syntax (integers stay bare).
pub fn format_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_round_trip() {
        let r = parse_rat("-3/7").unwrap();
        assert_eq!(r, <Rat as Scalar>::from_ratio(-3, 7));
        assert_eq!(format_rat(&r), "-3/7");
        assert_eq!(format_rat(&parse_rat("5").unwrap()), "5");
        assert!(parse_rat("1/0").is_none());
    }

    #[test]
    fn exact_arithmetic_stays_exact() {
        // (1/3 + 1/6) * 2 = 1 with decidable equality.
        let third = <Rat as Scalar>::from_ratio(1, 3);
        let sixth = <Rat as Scalar>::from_ratio(1, 6);
        let sum = third.add_ref(&sixth).mul_ref(&<Rat as Scalar>::from_int(2));
        assert_eq!(sum, <Rat as Scalar>::one());
    }

    #[test]
    fn big_ratio_conversion() {
        let huge = BigInt::from(10).pow(400u32);
        let r = Rat::new(huge.clone() * 3, huge);
        assert!((Scalar::to_f64(&r) - 3.0).abs() < 1e-12);
    }
}
