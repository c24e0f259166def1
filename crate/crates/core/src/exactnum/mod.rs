//! Exact scalars and small dense linear algebra.
//!
//! Everything here is exact: rationals are arbitrary precision, the quadratic
//! field Q(√2) decides signs by integer comparison, and elimination never
//! rounds. Instances in this crate are tiny, so all matrices are dense.

mod gf2;
mod intmat;
mod linalg;
mod lp;
mod sqrt2;

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

pub use gf2::{gf2_solve, Gf2Equation, Gf2Outcome, Gf2System};
pub use intmat::{det_int, IntMatrix};
pub use linalg::{determinant, nullspace, rank, solve_linear};
pub use lp::{strict_feasibility, Feasibility, LinearEquation};
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use sqrt2::{sign_sqrt2, Sqrt2Number};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }

    pub fn of_i64(x: i64) -> Sign {
        match x.cmp(&0) {
            std::cmp::Ordering::Less => Sign::Negative,
            std::cmp::Ordering::Equal => Sign::Zero,
            std::cmp::Ordering::Greater => Sign::Positive,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        match self.as_i8() * rhs.as_i8() {
            -1 => Sign::Negative,
            0 => Sign::Zero,
            _ => Sign::Positive,
        }
    }
}

/// An ordered field with exact arithmetic and exact sign.
pub trait ExactField:
    Clone
    + PartialEq
    + Debug
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Zero
    + One
{
    fn from_int(value: &BigInt) -> Self;
    fn sign(&self) -> Sign;

    fn gt_zero(&self) -> bool {
        self.sign() == Sign::Positive
    }
}

impl ExactField for BigRational {
    fn from_int(value: &BigInt) -> Self {
        BigRational::from_integer(value.clone())
    }

    fn sign(&self) -> Sign {
        use num_traits::Signed;
        if Signed::is_positive(self) {
            Sign::Positive
        } else if Signed::is_negative(self) {
            Sign::Negative
        } else {
            Sign::Zero
        }
    }
}

/// Parses `"p/q"` or `"p"` into a rational in lowest terms.
pub fn parse_rational(text: &str) -> Option<BigRational> {
    let text = text.trim();
    match text.split_once('/') {
        Some((num, den)) => {
            let num: BigInt = num.trim().parse().ok()?;
            let den: BigInt = den.trim().parse().ok()?;
            if den.is_zero() {
                return None;
            }
            Some(BigRational::new(num, den))
        }
        None => Some(BigRational::from_integer(text.parse().ok()?)),
    }
}

pub fn format_rational(value: &BigRational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

#[cfg(test)]
pub(crate) fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}
