//! Exact scalar arithmetic: arbitrary-precision rationals, multivariate
//! polynomials over a declared parameter list, and normalized polynomial
//! quotients.
//!
//! Everything in this module is immutable after construction and every
//! operation is pure.

mod poly;
mod quotient;

pub use poly::{Poly, PolyOp};
pub use quotient::RingQuotient;

use crate::error::{Error, Result};
use num::bigint::Sign as BigSign;
use num::{BigInt, BigRational, One, Signed, Zero};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

/// Exact rational number. Backed by an arbitrary-precision ratio kept in
/// lowest terms with a positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Rational(BigRational);

/// Sign of an exactly evaluated scalar.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Negative => write!(f, "negative"),
            Sign::Zero => write!(f, "zero"),
            Sign::Positive => write!(f, "positive"),
        }
    }
}

impl Rational {
    pub fn new(numer: i64, denom: i64) -> Result<Self> {
        if denom == 0 {
            return Err(Error::ZeroRationalDenominator);
        }
        Ok(Rational(BigRational::new(BigInt::from(numer), BigInt::from(denom))))
    }

    pub fn from_big(numer: BigInt, denom: BigInt) -> Result<Self> {
        if denom.is_zero() {
            return Err(Error::ZeroRationalDenominator);
        }
        Ok(Rational(BigRational::new(numer, denom)))
    }

    pub fn int(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn sign(&self) -> Sign {
        match self.0.numer().sign() {
            BigSign::Minus => Sign::Negative,
            BigSign::NoSign => Sign::Zero,
            BigSign::Plus => Sign::Positive,
        }
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroRationalDenominator);
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// Approximate value, used only by the numerical oracle.
    pub fn to_f64(&self) -> f64 {
        let n = self.0.numer();
        let d = self.0.denom();
        str_to_f64(n) / str_to_f64(d)
    }
}

fn str_to_f64(x: &BigInt) -> f64 {
    // Exact for everything the fixtures produce; falls back to string
    // conversion for very large integers.
    x.to_string().parse::<f64>().unwrap_or(f64::NAN)
}

macro_rules! rational_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl std::ops::$trait for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(&self.0 $op &rhs.0)
            }
        }
        impl std::ops::$trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0 $op rhs.0)
            }
        }
    };
}

rational_binop!(Add, add, +);
rational_binop!(Sub, sub, -);
rational_binop!(Mul, mul, *);

impl std::ops::Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl std::ops::Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Rational {
    pub fn checked_div(&self, rhs: &Rational) -> Result<Rational> {
        if rhs.is_zero() {
            return Err(Error::ZeroRationalDenominator);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `-3`, `12`, `3/4`, `-3/4`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Presentation(format!("cannot parse rational `{s}`"));
        match s.split_once('/') {
            None => {
                let n = BigInt::from_str(s.trim()).map_err(|_| bad())?;
                Ok(Rational(BigRational::from_integer(n)))
            }
            Some((a, b)) => {
                let n = BigInt::from_str(a.trim()).map_err(|_| bad())?;
                let d = BigInt::from_str(b.trim()).map_err(|_| bad())?;
                Rational::from_big(n, d)
            }
        }
    }
}

/// Ordered list of symbolic parameter names shared by all polynomials of a
/// presentation. Cheap to clone; compared by content.
#[derive(Clone, Debug)]
pub struct ParamRing(Arc<Vec<String>>);

impl PartialEq for ParamRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for ParamRing {}

impl ParamRing {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(Error::DuplicateParameter(n.clone()));
            }
        }
        Ok(ParamRing(Arc::new(names)))
    }

    pub fn empty() -> Self {
        ParamRing(Arc::new(Vec::new()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    pub fn describe(&self) -> String {
        self.0.join(", ")
    }
}
