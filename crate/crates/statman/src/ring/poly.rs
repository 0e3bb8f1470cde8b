//! Multivariate polynomials with exact rational coefficients.
//!
//! Terms are kept in a canonical graded-lexicographic order with no zero
//! coefficients stored, so structural equality coincides with mathematical
//! equality.

use super::{ParamRing, Rational, Sign};
use crate::error::{Error, Result};
use num::{BigInt, Integer, One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Exponent vector, ordered graded-lexicographically (total degree first,
/// then lexicographic on exponents).
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn is_unit(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise division; `None` when some exponent would go negative.
    fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            if a < b {
                return None;
            }
            out.push(a - b);
        }
        Some(Monomial(out))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Operation selector for the checked arithmetic entry point.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
    Neg,
}

/// A multivariate polynomial over a fixed parameter ring.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    ring: ParamRing,
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero(ring: &ParamRing) -> Self {
        Poly { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(ring: &ParamRing, value: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !value.is_zero() {
            terms.insert(Monomial(vec![0; ring.len()]), value);
        }
        Poly { ring: ring.clone(), terms }
    }

    pub fn int(ring: &ParamRing, value: i64) -> Self {
        Self::constant(ring, Rational::int(value))
    }

    pub fn one(ring: &ParamRing) -> Self {
        Self::int(ring, 1)
    }

    pub fn var(ring: &ParamRing, name: &str) -> Result<Self> {
        let idx = ring
            .index_of(name)
            .ok_or_else(|| Error::MissingParameter(name.to_string()))?;
        let mut exps = vec![0; ring.len()];
        exps[idx] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(Monomial(exps), Rational::one());
        Ok(Poly { ring: ring.clone(), terms })
    }

    pub fn ring(&self) -> &ParamRing {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().is_unit())
    }

    /// Constant value when the polynomial has no parameter dependence.
    pub fn constant_value(&self) -> Option<Rational> {
        if self.terms.is_empty() {
            return Some(Rational::zero());
        }
        if self.is_constant() {
            return self.terms.values().next().cloned();
        }
        None
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    fn same_ring(&self, other: &Poly) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch {
                left: self.ring.describe(),
                right: other.ring.describe(),
            })
        }
    }

    fn assert_same_ring(&self, other: &Poly) {
        if self.same_ring(other).is_err() {
            panic!(
                "polynomial ring mismatch: [{}] vs [{}]",
                self.ring.describe(),
                other.ring.describe()
            );
        }
    }

    fn insert_term(terms: &mut BTreeMap<Monomial, Rational>, mono: Monomial, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match terms.remove(&mono) {
            None => {
                terms.insert(mono, coeff);
            }
            Some(old) => {
                let sum = &old + &coeff;
                if !sum.is_zero() {
                    terms.insert(mono, sum);
                }
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.assert_same_ring(other);
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            Self::insert_term(&mut terms, m.clone(), c.clone());
        }
        Poly { ring: self.ring.clone(), terms }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        Poly { ring: self.ring.clone(), terms }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        self.assert_same_ring(other);
        let mut terms = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                Self::insert_term(&mut terms, m1.mul(m2), c1 * c2);
            }
        }
        Poly { ring: self.ring.clone(), terms }
    }

    pub fn scale(&self, factor: &Rational) -> Poly {
        if factor.is_zero() {
            return Poly::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), c * factor)).collect();
        Poly { ring: self.ring.clone(), terms }
    }

    pub fn pow(&self, exp: u32) -> Poly {
        let mut out = Poly::one(&self.ring);
        for _ in 0..exp {
            out = out.mul(self);
        }
        out
    }

    /// Checked arithmetic: the public operation surface that reports a
    /// structural error on a parameter-list mismatch instead of panicking.
    pub fn arith(op: PolyOp, p: &Poly, q: &Poly) -> Result<Poly> {
        if op != PolyOp::Neg {
            p.same_ring(q)?;
        }
        Ok(match op {
            PolyOp::Add => p.add(q),
            PolyOp::Sub => p.sub(q),
            PolyOp::Mul => p.mul(q),
            PolyOp::Neg => p.neg(),
        })
    }

    /// Exact substitution of every parameter appearing in the polynomial.
    pub fn eval(&self, assignment: &BTreeMap<String, Rational>) -> Result<Rational> {
        let names = self.ring.names();
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (idx, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let v = assignment
                    .get(&names[idx])
                    .ok_or_else(|| Error::MissingParameter(names[idx].clone()))?;
                for _ in 0..e {
                    term = &term * v;
                }
            }
            acc = &acc + &term;
        }
        Ok(acc)
    }

    /// Exact sign at an assignment covering all appearing parameters.
    pub fn sign_at(&self, assignment: &BTreeMap<String, Rational>) -> Result<Sign> {
        Ok(self.eval(assignment)?.sign())
    }

    /// Partial substitution: parameters present in the map are replaced by
    /// rationals, others are kept symbolic.
    pub fn substitute(&self, assignment: &BTreeMap<String, Rational>) -> Poly {
        let names = self.ring.names();
        let mut out = Poly::zero(&self.ring);
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut exps = vec![0u32; names.len()];
            for (idx, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match assignment.get(&names[idx]) {
                    Some(v) => {
                        for _ in 0..e {
                            coeff = &coeff * v;
                        }
                    }
                    None => exps[idx] = e,
                }
            }
            Self::insert_term(&mut out.terms, Monomial(exps), coeff);
        }
        out
    }

    /// Substitution of parameters by polynomials of the same ring.
    pub fn substitute_polys(&self, map: &BTreeMap<String, Poly>) -> Poly {
        let names = self.ring.names();
        let mut out = Poly::zero(&self.ring);
        for (m, c) in &self.terms {
            let mut term = Poly::constant(&self.ring, c.clone());
            for (idx, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let factor = match map.get(&names[idx]) {
                    Some(p) => p.clone(),
                    None => Poly::var(&self.ring, &names[idx]).expect("name from own ring"),
                };
                term = term.mul(&factor.pow(e));
            }
            out = out.add(&term);
        }
        out
    }

    /// Names of the parameters that actually appear.
    pub fn used_parameters(&self) -> Vec<String> {
        let names = self.ring.names();
        let mut used = Vec::new();
        for m in self.terms.keys() {
            for (idx, &e) in m.0.iter().enumerate() {
                if e > 0 && !used.contains(&names[idx]) {
                    used.push(names[idx].clone());
                }
            }
        }
        used.sort();
        used
    }

    /// Content of the coefficient list: gcd of numerators over lcm of
    /// denominators, always positive. Content of 0 is 0.
    pub fn content(&self) -> Rational {
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(&c.numer().abs());
            den_lcm = den_lcm.lcm(c.denom());
        }
        if num_gcd.is_zero() {
            return Rational::zero();
        }
        Rational::from_big(num_gcd, den_lcm).expect("lcm of denominators is nonzero")
    }

    /// Leading coefficient in graded-lex order.
    pub fn leading_coeff(&self) -> Rational {
        self.terms
            .iter()
            .next_back()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    /// Exact single-divisor polynomial division. `None` when the division
    /// leaves a remainder.
    pub fn try_div_exact(&self, divisor: &Poly) -> Option<Poly> {
        self.assert_same_ring(divisor);
        if divisor.is_zero() {
            return None;
        }
        let (lead_m, lead_c) = divisor.terms.iter().next_back().expect("nonzero divisor");
        let mut rem = self.clone();
        let mut quot = Poly::zero(&self.ring);
        while !rem.is_zero() {
            let (rm, rc) = {
                let (m, c) = rem.terms.iter().next_back().expect("nonzero remainder");
                (m.clone(), c.clone())
            };
            let qm = rm.try_div(lead_m)?;
            let qc = rc.checked_div(lead_c).expect("leading coefficient nonzero");
            let mut qterm = Poly::zero(&self.ring);
            Self::insert_term(&mut qterm.terms, qm, qc);
            rem = rem.sub(&qterm.mul(divisor));
            quot = quot.add(&qterm);
        }
        Some(quot)
    }

    /// Terms in descending canonical order, exposed for printing.
    fn terms_desc(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }
}

impl fmt::Display for Poly {
    /// Canonical printing: descending graded-lex term order, explicit `*`
    /// between coefficient and parameters, integer-fraction coefficients.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let names = self.ring.names();
        for (pos, (m, c)) in self.terms_desc().enumerate() {
            let neg = c.sign() == Sign::Negative;
            if pos == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mono: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        names[i].clone()
                    } else {
                        format!("{}^{}", names[i], e)
                    }
                })
                .collect();
            let abs = c.abs();
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", abs, mono.join("*"))?;
            }
        }
        Ok(())
    }
}
