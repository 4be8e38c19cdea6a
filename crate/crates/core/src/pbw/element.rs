use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use super::ring::{add_term, Terms};
use super::{Monomial, Ring};
use crate::error::{Error, Result};
use crate::rational::{coeff_prefix, Q};
use crate::superalg::{LieSuperalgebra, Parity};

/// Degree in the canonical filtration; the zero element sits at minus infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FiltrationDegree {
    NegInfinity,
    Finite(usize),
}

impl fmt::Display for FiltrationDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiltrationDegree::NegInfinity => f.write_str("-inf"),
            FiltrationDegree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// An element of the universal enveloping algebra in PBW normal form.
#[derive(Clone)]
pub struct EnvElement {
    alg: Arc<LieSuperalgebra>,
    terms: Terms,
}

impl EnvElement {
    pub(crate) fn from_terms_unchecked(alg: Arc<LieSuperalgebra>, terms: Terms) -> Self {
        debug_assert!(terms.values().all(|c| !c.is_zero()));
        EnvElement { alg, terms }
    }

    /// Builds an element from monomials that are already ordered; zero coefficients are
    /// dropped and repeated monomials summed. Odd exponents above one are rejected.
    pub fn from_terms(
        alg: Arc<LieSuperalgebra>,
        terms: impl IntoIterator<Item = (Monomial, Q)>,
    ) -> Result<Self> {
        let mut acc = Terms::new();
        for (m, c) in terms {
            if m.len() != alg.dim() {
                return Err(Error::AlgebraMismatch);
            }
            if (0..alg.dim()).any(|i| alg.is_odd(i) && m.exponent(i) > 1) {
                return Err(Error::Parse("odd generator with exponent above one".into()));
            }
            add_term(&mut acc, m, c);
        }
        Ok(EnvElement { alg, terms: acc })
    }

    pub fn zero(alg: &Arc<LieSuperalgebra>) -> Self {
        EnvElement {
            alg: alg.clone(),
            terms: Terms::new(),
        }
    }

    pub fn scalar(alg: &Arc<LieSuperalgebra>, c: Q) -> Self {
        let mut terms = Terms::new();
        add_term(&mut terms, Monomial::one(alg.dim()), c);
        EnvElement {
            alg: alg.clone(),
            terms,
        }
    }

    pub fn one(alg: &Arc<LieSuperalgebra>) -> Self {
        Self::scalar(alg, Q::one())
    }

    pub fn generator(alg: &Arc<LieSuperalgebra>, i: usize) -> Self {
        Self::monomial(alg, Monomial::generator(alg.dim(), i))
    }

    pub fn monomial(alg: &Arc<LieSuperalgebra>, m: Monomial) -> Self {
        let mut terms = Terms::new();
        terms.insert(m, Q::one());
        EnvElement {
            alg: alg.clone(),
            terms,
        }
    }

    /// Looks up a generator by name.
    pub fn named(alg: &Arc<LieSuperalgebra>, name: &str) -> Result<Self> {
        alg.index_of(name)
            .map(|i| Self::generator(alg, i.0))
            .ok_or_else(|| Error::Parse(format!("unknown generator `{name}`")))
    }

    pub fn algebra(&self) -> &Arc<LieSuperalgebra> {
        &self.alg
    }

    pub(crate) fn same_algebra(&self, alg: &Arc<LieSuperalgebra>) -> bool {
        Arc::ptr_eq(&self.alg, alg) || *self.alg == **alg
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Q> {
        &self.terms
    }

    pub fn coeff(&self, m: &Monomial) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn degree(&self) -> FiltrationDegree {
        self.terms
            .keys()
            .map(Monomial::degree)
            .max()
            .map_or(FiltrationDegree::NegInfinity, FiltrationDegree::Finite)
    }

    /// Leading (largest) monomial and its coefficient.
    pub fn leading(&self) -> Option<(&Monomial, &Q)> {
        self.terms.iter().next_back()
    }

    fn odd_flags(&self) -> Vec<bool> {
        (0..self.alg.dim()).map(|i| self.alg.is_odd(i)).collect()
    }

    /// Parity of a homogeneous nonzero element; `None` for zero or mixed elements.
    pub fn parity(&self) -> Option<Parity> {
        let odd = self.odd_flags();
        let mut it = self.terms.keys().map(|m| m.is_odd(&odd));
        let first = it.next()?;
        it.all(|p| p == first).then_some(Parity::from_odd(first))
    }

    pub fn parity_part(&self, p: Parity) -> EnvElement {
        let odd = self.odd_flags();
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.is_odd(&odd) == p.is_odd())
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        EnvElement::from_terms_unchecked(self.alg.clone(), terms)
    }

    /// Terms of exactly the given degree.
    pub fn homogeneous_part(&self, degree: usize) -> EnvElement {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.degree() == degree)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        EnvElement::from_terms_unchecked(self.alg.clone(), terms)
    }

    pub fn scale(&self, c: &Q) -> EnvElement {
        if c.is_zero() {
            return EnvElement::zero(&self.alg);
        }
        let terms = self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect();
        EnvElement::from_terms_unchecked(self.alg.clone(), terms)
    }

    pub fn try_add(&self, other: &EnvElement) -> Result<EnvElement> {
        if !other.same_algebra(&self.alg) {
            return Err(Error::AlgebraMismatch);
        }
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            add_term(&mut terms, m.clone(), c.clone());
        }
        Ok(EnvElement::from_terms_unchecked(self.alg.clone(), terms))
    }

    /// PBW normal form of `self * other`.
    pub fn mul(&self, other: &EnvElement) -> Result<EnvElement> {
        multiply(self, other)
    }

    pub fn pow(&self, k: u32) -> EnvElement {
        let ring = Ring::new(self.alg.clone());
        let mut acc = EnvElement::one(&self.alg);
        for _ in 0..k {
            acc = ring.mul(&acc, self).expect("same algebra");
        }
        acc
    }

    /// Renders a monomial with the algebra's generator names (`e^2*x`, or `1`).
    pub fn monomial_string(alg: &LieSuperalgebra, m: &Monomial) -> String {
        let parts: Vec<String> = (0..alg.dim())
            .filter(|&i| m.exponent(i) > 0)
            .map(|i| match m.exponent(i) {
                1 => alg.generator_name(i).to_string(),
                e => format!("{}^{}", alg.generator_name(i), e),
            })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

/// PBW normal form of the product; both factors must come from the same algebra.
pub fn multiply(a: &EnvElement, b: &EnvElement) -> Result<EnvElement> {
    if !b.same_algebra(&a.alg) {
        return Err(Error::AlgebraMismatch);
    }
    Ring::new(a.alg.clone()).mul(a, b)
}

pub fn filtration_degree(u: &EnvElement) -> FiltrationDegree {
    u.degree()
}

impl PartialEq for EnvElement {
    fn eq(&self, other: &Self) -> bool {
        other.same_algebra(&self.alg) && self.terms == other.terms
    }
}

impl Eq for EnvElement {}

impl fmt::Debug for EnvElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EnvElement({self})")
    }
}

impl fmt::Display for EnvElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c < &Q::zero();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                f.write_str(&coeff_prefix(c, false))?;
            } else {
                f.write_str(&coeff_prefix(c, true))?;
                f.write_str(&Self::monomial_string(&self.alg, m))?;
            }
        }
        Ok(())
    }
}

impl Add for &EnvElement {
    type Output = EnvElement;
    fn add(self, rhs: &EnvElement) -> EnvElement {
        self.try_add(rhs)
            .expect("adding elements of different algebras")
    }
}

impl Sub for &EnvElement {
    type Output = EnvElement;
    fn sub(self, rhs: &EnvElement) -> EnvElement {
        self.try_add(&-rhs)
            .expect("subtracting elements of different algebras")
    }
}

impl Neg for &EnvElement {
    type Output = EnvElement;
    fn neg(self) -> EnvElement {
        self.scale(&-Q::one())
    }
}
