//! Normalized polynomial quotients.
//!
//! A quotient is a lazy numerator/denominator pair. Normalization removes
//! coefficient content, keeps the denominator's leading coefficient
//! positive, and cancels the pair when one side exactly divides the other.
//! Full multivariate gcd simplification is deliberately out of scope;
//! equality is decided by cross-multiplication.

use super::{ParamRing, Poly, Rational, Sign};
use crate::error::{Error, Result};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Debug)]
pub struct RingQuotient {
    num: Poly,
    den: Poly,
}

impl RingQuotient {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(RingQuotient { num, den }.normalized())
    }

    pub fn from_poly(p: Poly) -> Self {
        let one = Poly::one(p.ring());
        RingQuotient { num: p, den: one }
    }

    pub fn from_rational(ring: &ParamRing, r: Rational) -> Self {
        Self::from_poly(Poly::constant(ring, r))
    }

    pub fn zero(ring: &ParamRing) -> Self {
        Self::from_poly(Poly::zero(ring))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn ring(&self) -> &ParamRing {
        self.num.ring()
    }

    /// Canonical representative. Zero numerators normalize to 0/1; shared
    /// coefficient content is removed; a denominator that exactly divides
    /// the numerator (or vice versa) is cancelled.
    pub fn normalize(q: &RingQuotient) -> Result<RingQuotient> {
        if q.den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(q.clone().normalized())
    }

    fn normalized(self) -> RingQuotient {
        let ring = self.num.ring().clone();
        if self.num.is_zero() {
            return RingQuotient {
                num: Poly::zero(&ring),
                den: Poly::one(&ring),
            };
        }
        // exact cancellation when one side divides the other
        if let Some(q) = self.num.try_div_exact(&self.den) {
            return RingQuotient { num: q, den: Poly::one(&ring) }.sign_fixed();
        }
        if let Some(q) = self.den.try_div_exact(&self.num) {
            return RingQuotient { num: Poly::one(&ring), den: q }.sign_fixed();
        }
        // content removal: make the denominator primitive, fold the ratio of
        // contents into the numerator
        let cd = self.den.content();
        let inv_cd = cd.recip().expect("nonzero denominator has nonzero content");
        let den = self.den.scale(&inv_cd);
        let num = self.num.scale(&inv_cd);
        let cn = num.content();
        let (num, den) = if !cn.is_zero() && cn.denom() != &num::BigInt::from(1) {
            // keep numerator coefficients integral when cheap
            (num, den)
        } else {
            (num, den)
        };
        RingQuotient { num, den }.sign_fixed()
    }

    fn sign_fixed(self) -> RingQuotient {
        if self.den.leading_coeff().sign() == Sign::Negative {
            RingQuotient { num: self.num.neg(), den: self.den.neg() }
        } else {
            self
        }
    }

    pub fn add(&self, other: &RingQuotient) -> RingQuotient {
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        RingQuotient { num, den }.normalized()
    }

    pub fn sub(&self, other: &RingQuotient) -> RingQuotient {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RingQuotient {
        RingQuotient { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, other: &RingQuotient) -> RingQuotient {
        RingQuotient {
            num: self.num.mul(&other.num),
            den: self.den.mul(&other.den),
        }
        .normalized()
    }

    pub fn div(&self, other: &RingQuotient) -> Result<RingQuotient> {
        if other.num.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        RingQuotient::new(self.num.mul(&other.den), self.den.mul(&other.num))
    }

    /// Mathematical equality by cross-multiplication.
    pub fn equals(&self, other: &RingQuotient) -> bool {
        self.num.mul(&other.den).sub(&other.num.mul(&self.den)).is_zero()
    }

    /// Exact evaluation; errors when the denominator vanishes at the point.
    pub fn eval(&self, assignment: &BTreeMap<String, Rational>) -> Result<Rational> {
        let n = self.num.eval(assignment)?;
        let d = self.den.eval(assignment)?;
        n.checked_div(&d)
    }

    /// The underlying polynomial when the denominator is a constant.
    pub fn as_poly(&self) -> Option<Poly> {
        let c = self.den.constant_value()?;
        let inv = c.recip().ok()?;
        Some(self.num.scale(&inv))
    }
}

impl PartialEq for RingQuotient {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

impl fmt::Display for RingQuotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(p) = self.as_poly() {
            return write!(f, "{p}");
        }
        write!(f, "({}) / ({})", self.num, self.den)
    }
}
