use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::rational::{coeff_prefix, Q};

/// A polynomial function on `h*`, in the coordinates `lambda_i = lambda(h_i)` of the
/// Cartan generators `h_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HPolynomial {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Q>,
}

impl HPolynomial {
    pub fn zero(nvars: usize) -> Self {
        HPolynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Q) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Q::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.terms.insert(e, Q::one());
        p
    }

    /// `sum_i coeffs[i] * lambda_i + constant`.
    pub fn linear(coeffs: &[Q], constant: Q) -> Self {
        let n = coeffs.len();
        let mut p = Self::constant(n, constant);
        for (i, c) in coeffs.iter().enumerate() {
            p = &p + &Self::var(n, i).scale(c);
        }
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, Q)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars);
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: Vec<u32>, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Q> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        HPolynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(self.nvars), |acc, _| &acc * self)
    }

    pub fn eval(&self, point: &[Q]) -> Q {
        assert_eq!(point.len(), self.nvars, "point has the wrong dimension");
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter()
                    .zip(point)
                    .fold(c.clone(), |acc, (&k, x)| acc * pow_q(x, k))
            })
            .sum()
    }

    /// `lambda -> p(M lambda + b)`.
    pub fn compose_affine(&self, matrix: &[Vec<Q>], shift: &[Q]) -> Self {
        let n = self.nvars;
        let images: Vec<HPolynomial> = (0..n)
            .map(|i| HPolynomial::linear(&matrix[i], shift[i].clone()))
            .collect();
        let mut out = Self::zero(n);
        for (e, c) in &self.terms {
            let mut t = Self::constant(n, c.clone());
            for (i, &k) in e.iter().enumerate() {
                t = &t * &images[i].pow(k);
            }
            out = &out + &t;
        }
        out
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &HPolynomial) -> Option<HPolynomial> {
        let (lead_d, lead_c) = divisor.terms.iter().next_back()?;
        let mut rem = self.clone();
        let mut quot = Self::zero(self.nvars);
        while let Some((lead_r, c)) = rem.terms.iter().next_back() {
            if lead_r.iter().zip(lead_d).any(|(a, b)| a < b) {
                return None;
            }
            let e: Vec<u32> = lead_r.iter().zip(lead_d).map(|(a, b)| a - b).collect();
            let coef = c / lead_c;
            let t = HPolynomial::from_terms(self.nvars, [(e, coef)]);
            rem = &rem - &(&t * divisor);
            quot = &quot + &t;
        }
        Some(quot)
    }

    /// The scalar `c` with `self = c * other`, if `other` is nonzero and one exists.
    pub fn ratio_to(&self, other: &HPolynomial) -> Option<Q> {
        let (e, c) = other.terms.iter().next_back()?;
        let r = self.terms.get(e).cloned().unwrap_or_else(Q::zero) / c;
        (*self == other.scale(&r)).then_some(r)
    }

    pub fn display_with<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        HDisplay { p: self, names }
    }
}

fn pow_q(x: &Q, k: u32) -> Q {
    (0..k).fold(Q::one(), |acc, _| acc * x)
}

struct HDisplay<'a> {
    p: &'a HPolynomial,
    names: &'a [String],
}

impl fmt::Display for HDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.p.terms.iter().rev().enumerate() {
            let neg = c < &Q::zero();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let body: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    let name = self
                        .names
                        .get(i)
                        .cloned()
                        .unwrap_or_else(|| format!("l{}", i + 1));
                    if k == 1 {
                        name
                    } else {
                        format!("{name}^{k}")
                    }
                })
                .collect();
            f.write_str(&coeff_prefix(c, !body.is_empty()))?;
            f.write_str(&body.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Display for HPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&[]))
    }
}

impl Add for &HPolynomial {
    type Output = HPolynomial;
    fn add(self, rhs: &HPolynomial) -> HPolynomial {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &HPolynomial {
    type Output = HPolynomial;
    fn sub(self, rhs: &HPolynomial) -> HPolynomial {
        self + &-rhs
    }
}

impl Neg for &HPolynomial {
    type Output = HPolynomial;
    fn neg(self) -> HPolynomial {
        self.scale(&-Q::one())
    }
}

impl Mul for &HPolynomial {
    type Output = HPolynomial;
    fn mul(self, rhs: &HPolynomial) -> HPolynomial {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = HPolynomial::zero(self.nvars);
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                let e = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}
