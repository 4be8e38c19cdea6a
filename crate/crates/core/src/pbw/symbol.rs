use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::Zero;

use super::ring::{add_term, Terms};
use super::{EnvElement, Monomial};
use crate::error::{Error, Result};
use crate::rational::Q;
use crate::superalg::LieSuperalgebra;

/// An element of the supersymmetric algebra `S(g)`: polynomial in the even generators
/// tensored with the exterior algebra on the odd ones.
#[derive(Clone)]
pub struct SymElement {
    alg: Arc<LieSuperalgebra>,
    terms: Terms,
}

impl SymElement {
    pub fn from_terms(alg: Arc<LieSuperalgebra>, terms: BTreeMap<Monomial, Q>) -> Self {
        let terms = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        SymElement { alg, terms }
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Q> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Q) -> SymElement {
        let terms = self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect();
        SymElement::from_terms(self.alg.clone(), terms)
    }

    /// Supercommutative product; odd generators anticommute and square to zero.
    pub fn mul(&self, other: &SymElement) -> SymElement {
        let n = self.alg.dim();
        let odd: Vec<bool> = (0..n).map(|i| self.alg.is_odd(i)).collect();
        let mut acc = Terms::new();
        for (a, ca) in &self.terms {
            'pairs: for (b, cb) in &other.terms {
                let mut swaps = 0usize;
                let mut exps = a.0.clone();
                for j in 0..n {
                    if b.exponent(j) == 0 {
                        continue;
                    }
                    if odd[j] {
                        if a.exponent(j) > 0 {
                            continue 'pairs;
                        }
                        // b's x_j moves left past the odd letters of a that follow it
                        swaps += (j + 1..n).filter(|&i| odd[i] && a.exponent(i) > 0).count();
                    }
                    exps[j] += b.exponent(j);
                }
                let mut c = ca * cb;
                if swaps % 2 == 1 {
                    c = -c;
                }
                add_term(&mut acc, Monomial(exps), c);
            }
        }
        SymElement {
            alg: self.alg.clone(),
            terms: acc,
        }
    }
}

/// Top-degree part of a nonzero element, read as a supercommutative polynomial.
pub fn symbol(u: &EnvElement) -> Result<SymElement> {
    let top = match u.degree() {
        super::FiltrationDegree::NegInfinity => return Err(Error::ZeroElement),
        super::FiltrationDegree::Finite(d) => d,
    };
    let part = u.homogeneous_part(top);
    Ok(SymElement {
        alg: u.algebra().clone(),
        terms: part.terms().clone(),
    })
}

impl PartialEq for SymElement {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && *self.alg == *other.alg
    }
}

impl fmt::Debug for SymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let u = EnvElement::from_terms_unchecked(self.alg.clone(), self.terms.clone());
        write!(f, "SymElement({u})")
    }
}

impl fmt::Display for SymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let u = EnvElement::from_terms_unchecked(self.alg.clone(), self.terms.clone());
        write!(f, "{u}")
    }
}

impl From<&EnvElement> for SymElement {
    fn from(u: &EnvElement) -> Self {
        SymElement {
            alg: u.algebra().clone(),
            terms: u.terms().clone(),
        }
    }
}
