use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{format_rational, ExactField, Sign};

/// An element `rational + sqrt2 * √2` of the quadratic field Q(√2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Sqrt2Number {
    rational: BigRational,
    sqrt2: BigRational,
}

impl Sqrt2Number {
    pub fn new(rational: BigRational, sqrt2: BigRational) -> Self {
        Sqrt2Number { rational, sqrt2 }
    }

    pub fn from_ints(rational: i64, sqrt2: i64) -> Self {
        Sqrt2Number::new(BigRational::from_integer(rational.into()), BigRational::from_integer(sqrt2.into()))
    }

    pub fn from_rational(rational: BigRational) -> Self {
        Sqrt2Number::new(rational, BigRational::zero())
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.rational
    }

    pub fn sqrt2_part(&self) -> &BigRational {
        &self.sqrt2
    }

    /// Galois conjugate `a - b√2`.
    pub fn conjugate(&self) -> Self {
        Sqrt2Number::new(self.rational.clone(), -&self.sqrt2)
    }

    /// Field norm `a² - 2b²`; zero exactly when the element is zero.
    pub fn norm(&self) -> BigRational {
        &self.rational * &self.rational - BigRational::from_integer(2.into()) * &self.sqrt2 * &self.sqrt2
    }

    pub fn inverse(&self) -> Option<Self> {
        let norm = self.norm();
        if norm.is_zero() {
            return None;
        }
        let conj = self.conjugate();
        Some(Sqrt2Number::new(conj.rational / &norm, conj.sqrt2 / norm))
    }

    pub fn signum(&self) -> Sign {
        sign_sqrt2(self)
    }

    /// Floating-point approximation, for display only.
    pub fn approx(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.rational.to_f64().unwrap_or(f64::NAN) + self.sqrt2.to_f64().unwrap_or(f64::NAN) * std::f64::consts::SQRT_2
    }
}

fn rational_sign(x: &BigRational) -> Sign {
    if x.is_positive() {
        Sign::Positive
    } else if x.is_negative() {
        Sign::Negative
    } else {
        Sign::Zero
    }
}

/// Exact sign of `a + b√2`.
///
/// When `a` and `b` disagree in sign the result follows whichever of `a²` and
/// `2b²` is larger; they cannot be equal because √2 is irrational.
pub fn sign_sqrt2(x: &Sqrt2Number) -> Sign {
    let sa = rational_sign(&x.rational);
    let sb = rational_sign(&x.sqrt2);
    match (sa, sb) {
        (Sign::Zero, s) | (s, Sign::Zero) => s,
        (a, b) if a == b => a,
        (a, b) => {
            let a2 = &x.rational * &x.rational;
            let b2 = BigRational::from_integer(2.into()) * &x.sqrt2 * &x.sqrt2;
            match a2.cmp(&b2) {
                Ordering::Greater => a,
                Ordering::Less => b,
                Ordering::Equal => unreachable!("a^2 = 2b^2 has no nonzero rational solution"),
            }
        }
    }
}

impl PartialOrd for Sqrt2Number {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Sqrt2Number {
    fn cmp(&self, other: &Self) -> Ordering {
        match sign_sqrt2(&(self - other)) {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        }
    }
}

impl fmt::Debug for Sqrt2Number {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Sqrt2Number {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.rational.is_zero(), self.sqrt2.is_zero()) {
            (_, true) => write!(f, "{}", format_rational(&self.rational)),
            (true, false) => write!(f, "{}*sqrt2", format_rational(&self.sqrt2)),
            (false, false) => write!(f, "{} + {}*sqrt2", format_rational(&self.rational), format_rational(&self.sqrt2)),
        }
    }
}

impl<'a> Add<&'a Sqrt2Number> for &'a Sqrt2Number {
    type Output = Sqrt2Number;
    fn add(self, rhs: &Sqrt2Number) -> Sqrt2Number {
        Sqrt2Number::new(&self.rational + &rhs.rational, &self.sqrt2 + &rhs.sqrt2)
    }
}

impl<'a> Sub<&'a Sqrt2Number> for &'a Sqrt2Number {
    type Output = Sqrt2Number;
    fn sub(self, rhs: &Sqrt2Number) -> Sqrt2Number {
        Sqrt2Number::new(&self.rational - &rhs.rational, &self.sqrt2 - &rhs.sqrt2)
    }
}

impl<'a> Mul<&'a Sqrt2Number> for &'a Sqrt2Number {
    type Output = Sqrt2Number;
    fn mul(self, rhs: &Sqrt2Number) -> Sqrt2Number {
        let two = BigRational::from_integer(2.into());
        Sqrt2Number::new(
            &self.rational * &rhs.rational + two * &self.sqrt2 * &rhs.sqrt2,
            &self.rational * &rhs.sqrt2 + &self.sqrt2 * &rhs.rational,
        )
    }
}

impl<'a> Div<&'a Sqrt2Number> for &'a Sqrt2Number {
    type Output = Sqrt2Number;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &Sqrt2Number) -> Sqrt2Number {
        let inv = rhs.inverse().expect("division by zero in Q(sqrt2)");
        self * &inv
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for Sqrt2Number {
            type Output = Sqrt2Number;
            fn $m(self, rhs: Sqrt2Number) -> Sqrt2Number {
                (&self).$m(&rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul, Div::div);

impl Neg for Sqrt2Number {
    type Output = Sqrt2Number;
    fn neg(self) -> Sqrt2Number {
        Sqrt2Number::new(-self.rational, -self.sqrt2)
    }
}

impl Neg for &Sqrt2Number {
    type Output = Sqrt2Number;
    fn neg(self) -> Sqrt2Number {
        Sqrt2Number::new(-&self.rational, -&self.sqrt2)
    }
}

impl Zero for Sqrt2Number {
    fn zero() -> Self {
        Sqrt2Number::new(BigRational::zero(), BigRational::zero())
    }

    fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.sqrt2.is_zero()
    }
}

impl One for Sqrt2Number {
    fn one() -> Self {
        Sqrt2Number::new(BigRational::one(), BigRational::zero())
    }
}

impl ExactField for Sqrt2Number {
    fn from_int(value: &BigInt) -> Self {
        Sqrt2Number::from_rational(BigRational::from_integer(value.clone()))
    }

    fn sign(&self) -> Sign {
        sign_sqrt2(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use proptest::prelude::*;

    #[test]
    fn sign_examples() {
        assert_eq!(sign_sqrt2(&Sqrt2Number::from_ints(0, 0)), Sign::Zero);
        assert_eq!(sign_sqrt2(&Sqrt2Number::from_ints(1, -1)), Sign::Negative);
        assert_eq!(sign_sqrt2(&Sqrt2Number::from_ints(-4, 3)), Sign::Positive);
        assert_eq!(sign_sqrt2(&Sqrt2Number::from_ints(-3, 2)), Sign::Negative);
    }

    #[test]
    fn inverse_via_norm() {
        let x = Sqrt2Number::new(rat(3, 2), rat(-1, 3));
        let inv = x.inverse().unwrap();
        assert_eq!(&x * &inv, Sqrt2Number::one());
        assert!(Sqrt2Number::zero().inverse().is_none());
    }

    #[test]
    fn half_sqrt2_squared_is_half() {
        let h = Sqrt2Number::new(rat(0, 1), rat(1, 2));
        assert_eq!(&h * &h, Sqrt2Number::from_rational(rat(1, 2)));
    }

    fn small() -> impl Strategy<Value = Sqrt2Number> {
        (-20i64..20, 1i64..6, -20i64..20, 1i64..6).prop_map(|(a, b, c, d)| Sqrt2Number::new(rat(a, b), rat(c, d)))
    }

    proptest! {
        #[test]
        fn sign_is_multiplicative(x in small(), y in small()) {
            prop_assert_eq!(sign_sqrt2(&x) * sign_sqrt2(&y), sign_sqrt2(&(&x * &y)));
        }

        #[test]
        fn sign_matches_float(x in small()) {
            let f = x.approx();
            let expected = if f > 1e-9 { Sign::Positive } else if f < -1e-9 { Sign::Negative } else { Sign::Zero };
            prop_assume!(f.abs() > 1e-9 || x.is_zero());
            prop_assert_eq!(sign_sqrt2(&x), expected);
        }

        #[test]
        fn division_roundtrip(x in small(), y in small()) {
            prop_assume!(!y.is_zero());
            prop_assert_eq!(&(&x / &y) * &y, x);
        }
    }
}
