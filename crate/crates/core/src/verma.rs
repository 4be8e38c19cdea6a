//! Degree-truncated Verma modules `M(lambda)`, the supercharacter action of the ghost
//! centre, singular vectors and Shapovalov Gram matrices.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::invariants::{anticentre_basis, centre_basis};
use crate::linalg::{self, SparseVec};
use crate::pbw::{monomials_in, EnvElement, FiltrationDegree, Monomial, Ring};
use crate::rational::{fmt_q, parse_q, Q};
use crate::roothc::{compute_t, hc_projection, HPolynomial, RootDatum, Weight};
use crate::superalg::{LieSuperalgebra, Parity};

/// A vector of a slice: coefficients on `x_P v` for monomials `x_P` in negative generators.
pub type VermaVector = BTreeMap<Monomial, Q>;

/// Coefficients that are polynomials in the highest weight.
pub type SymbolicVector = BTreeMap<Monomial, HPolynomial>;

fn add_w(a: &[Q], b: &[Q]) -> Weight {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub_w(a: &[Q], b: &[Q]) -> Weight {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn scale_w(a: &[Q], c: &Q) -> Weight {
    a.iter().map(|x| x * c).collect()
}

/// Straightens `u * x_n` and lets the result act on the highest-weight vector: terms
/// containing a positive generator vanish, Cartan generators become coordinates of lambda.
fn act_symbolic(ring: &Ring, rd: &RootDatum, u: &EnvElement, n: &Monomial) -> SymbolicVector {
    let g = ring.algebra();
    let prod = ring
        .mul(u, &EnvElement::monomial(g, n.clone()))
        .expect("same algebra");
    let mut out = SymbolicVector::new();
    for (m, c) in prod.terms() {
        if (0..g.dim()).any(|i| m.exponent(i) > 0 && rd.is_positive(i)) {
            continue;
        }
        let exps: Vec<u32> = rd
            .cartan()
            .iter()
            .map(|&h| u32::from(m.exponent(h)))
            .collect();
        let mut neg = m.clone();
        for &h in rd.cartan() {
            neg = neg.with_exponent(h, 0);
        }
        let term = HPolynomial::from_terms(rd.rank(), [(exps, c.clone())]);
        let slot = out
            .entry(neg)
            .or_insert_with(|| HPolynomial::zero(rd.rank()));
        *slot = &*slot + &term;
    }
    out.retain(|_, p| !p.is_zero());
    out
}

fn evaluate(v: &SymbolicVector, lambda: &[Q]) -> VermaVector {
    v.iter()
        .map(|(m, p)| (m.clone(), p.eval(lambda)))
        .filter(|(_, c)| !c.is_zero())
        .collect()
}

/// `M(lambda)` truncated to PBW monomials of degree at most `depth` in the negative
/// generators. The highest-weight vector is even.
pub struct VermaSlice {
    alg: Arc<LieSuperalgebra>,
    ring: Ring,
    lambda: Weight,
    depth: usize,
    basis: Vec<Monomial>,
}

impl VermaSlice {
    pub fn new(g: &Arc<LieSuperalgebra>, lambda: Weight, depth: usize) -> Result<Self> {
        let rd = g.require_root_datum()?;
        if lambda.len() != rd.rank() {
            return Err(Error::RootDatum(format!(
                "highest weight needs {} coordinates, got {}",
                rd.rank(),
                lambda.len()
            )));
        }
        let basis = monomials_in(g, &negative_generators(g, rd), depth);
        Ok(VermaSlice {
            alg: g.clone(),
            ring: Ring::new(g.clone()),
            lambda,
            depth,
            basis,
        })
    }

    pub fn algebra(&self) -> &Arc<LieSuperalgebra> {
        &self.alg
    }

    fn rd(&self) -> &RootDatum {
        self.alg.root_datum().expect("checked at construction")
    }

    pub fn highest_weight(&self) -> &[Q] {
        &self.lambda
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn highest_weight_vector(&self) -> VermaVector {
        [(Monomial::one(self.alg.dim()), Q::one())]
            .into_iter()
            .collect()
    }

    pub fn basis_vector(&self, m: &Monomial) -> VermaVector {
        [(m.clone(), Q::one())].into_iter().collect()
    }

    /// Weight of `x_m v`.
    pub fn weight(&self, m: &Monomial) -> Weight {
        add_w(&self.lambda, &self.rd().monomial_weight(m))
    }

    pub fn parity(&self, m: &Monomial) -> Parity {
        let odd = (0..self.alg.dim())
            .filter(|&i| self.alg.is_odd(i))
            .map(|i| m.exponent(i) as usize)
            .sum::<usize>();
        Parity::from_odd(odd % 2 == 1)
    }

    /// `u * x_n v` with coefficients as polynomials in lambda (the slice's own lambda is
    /// not used).
    pub fn act_symbolic(&self, u: &EnvElement, n: &Monomial) -> SymbolicVector {
        act_symbolic(&self.ring, self.rd(), u, n)
    }

    /// `u * x_n v` at this slice's highest weight, with no depth limit.
    pub fn act_unbounded(&self, u: &EnvElement, n: &Monomial) -> VermaVector {
        evaluate(&self.act_symbolic(u, n), &self.lambda)
    }

    /// `u * m`; fails if the result leaves the slice.
    pub fn apply(&self, u: &EnvElement, m: &VermaVector) -> Result<VermaVector> {
        if !u.same_algebra(&self.alg) {
            return Err(Error::AlgebraMismatch);
        }
        let mut out = VermaVector::new();
        for (n, c) in m {
            for (k, v) in self.act_unbounded(u, n) {
                if k.degree() > self.depth {
                    return Err(Error::DepthExceeded(self.depth));
                }
                let slot = out.entry(k).or_insert_with(Q::zero);
                *slot += v * c;
            }
        }
        out.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    pub fn format(&self, v: &VermaVector) -> String {
        format_vector(&self.alg, v)
    }
}

fn negative_generators(g: &LieSuperalgebra, rd: &RootDatum) -> Vec<usize> {
    (0..g.dim()).filter(|&i| rd.is_negative(i)).collect()
}

/// Text form of a vector, e.g. `F*y*v - 2*v`.
pub fn format_vector(g: &LieSuperalgebra, v: &VermaVector) -> String {
    if v.is_empty() {
        return "0".into();
    }
    let mut s = String::new();
    for (k, (m, c)) in v.iter().rev().enumerate() {
        let neg = c < &Q::zero();
        s.push_str(match (k, neg) {
            (0, true) => "-",
            (0, false) => "",
            (_, true) => " - ",
            (_, false) => " + ",
        });
        let a = if neg { -c.clone() } else { c.clone() };
        if !a.is_one() {
            s.push_str(&fmt_q(&a));
            s.push('*');
        }
        if !m.is_one() {
            s.push_str(&EnvElement::monomial_string(g, m));
            s.push('*');
        }
        s.push('v');
    }
    s
}

pub fn verma_apply(slice: &VermaSlice, u: &EnvElement, m: &VermaVector) -> Result<VermaVector> {
    slice.apply(u, m)
}

/// Parse `"c1,c2,..."` into a weight.
pub fn parse_lambda(s: &str) -> Result<Weight> {
    s.split(',').map(|p| parse_q(p.trim())).collect()
}

/// Splits a ghost-centre element as `z + y` with `z` central and `y` anticentral.
pub fn decompose_ghost(a: &EnvElement) -> Result<(EnvElement, EnvElement)> {
    let g = a.algebra();
    let d = match a.degree() {
        FiltrationDegree::NegInfinity => return Ok((a.clone(), a.clone())),
        FiltrationDegree::Finite(d) => d,
    };
    let z = centre_basis(g, d);
    let y = anticentre_basis(g, d);
    let all: Vec<&EnvElement> = z.elements().iter().chain(y.elements()).collect();
    let mut index: BTreeMap<Monomial, usize> = BTreeMap::new();
    for e in all.iter().copied().chain([a]) {
        for m in e.terms().keys() {
            let n = index.len();
            index.entry(m.clone()).or_insert(n);
        }
    }
    let coords = |e: &EnvElement| -> SparseVec {
        e.terms()
            .iter()
            .map(|(m, c)| (index[m], c.clone()))
            .collect()
    };
    let cols: Vec<SparseVec> = all.iter().map(|e| coords(e)).collect();
    let sol = linalg::solve_combination(&cols, &coords(a)).ok_or(Error::NotInGhostCentre)?;
    let combine = |range: std::ops::Range<usize>| {
        range.fold(EnvElement::zero(g), |acc, i| &acc + &all[i].scale(&sol[i]))
    };
    let nz = z.dim();
    Ok((combine(0..nz), combine(nz..all.len())))
}

#[derive(Debug, Clone, PartialEq)]
pub struct SupercharacterReport {
    pub lambda: Weight,
    pub even_scalar: Q,
    pub odd_scalar: Q,
    pub vectors_checked: usize,
}

/// Checks that `z + y` (central plus anticentral) acts on every even basis vector of
/// the slice by `hc(z+y)(lambda)` and on every odd one by `hc(z-y)(lambda)`.
pub fn supercharacter_check_parts(
    slice: &VermaSlice,
    z: &EnvElement,
    y: &EnvElement,
) -> Result<SupercharacterReport> {
    let lambda = slice.highest_weight();
    let pz = hc_projection(z)?.eval(lambda);
    let py = hc_projection(y)?.eval(lambda);
    let even_scalar = &pz + &py;
    let odd_scalar = &pz - &py;
    let a = z + y;
    for m in slice.basis() {
        let want = match slice.parity(m) {
            Parity::Even => &even_scalar,
            Parity::Odd => &odd_scalar,
        };
        let got = slice.act_unbounded(&a, m);
        let expect: VermaVector = if want.is_zero() {
            VermaVector::new()
        } else {
            [(m.clone(), want.clone())].into_iter().collect()
        };
        if got != expect {
            let bv = slice.basis_vector(m);
            return Err(Error::ActionMismatch(format!(
                "on {}: expected {}, got {}",
                slice.format(&bv),
                slice.format(&expect),
                slice.format(&got)
            )));
        }
    }
    Ok(SupercharacterReport {
        lambda: lambda.to_vec(),
        even_scalar,
        odd_scalar,
        vectors_checked: slice.basis().len(),
    })
}

pub fn supercharacter_check(
    a: &EnvElement,
    lambda: &[Q],
    depth: usize,
) -> Result<SupercharacterReport> {
    let (z, y) = decompose_ghost(a)?;
    let slice = VermaSlice::new(a.algebra(), lambda.to_vec(), depth)?;
    supercharacter_check_parts(&slice, &z, &y)
}

/// A singular vector predicted by the root condition on `lambda + rho`.
#[derive(Debug, Clone, PartialEq)]
pub struct Prediction {
    pub root: Weight,
    pub n: u64,
    pub weight: Weight,
    pub in_slice: bool,
    pub found: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SingularReport {
    pub vectors: Vec<(Weight, VermaVector)>,
    pub predictions: Vec<Prediction>,
}

impl SingularReport {
    pub fn predictions_met(&self) -> bool {
        self.predictions.iter().all(|p| !p.in_slice || p.found)
    }
}

fn positive_integer(c: &Q) -> Option<u64> {
    (c.is_integer() && c > &Q::zero())
        .then(|| c.to_integer().try_into().ok())
        .flatten()
}

/// Vectors of the slice, of weight other than lambda, killed by every positive generator.
pub fn singular_vectors(
    g: &Arc<LieSuperalgebra>,
    lambda: &[Q],
    depth: usize,
) -> Result<SingularReport> {
    let slice = VermaSlice::new(g, lambda.to_vec(), depth)?;
    let rd = g.require_root_datum()?;
    let mut by_weight: BTreeMap<Weight, Vec<Monomial>> = BTreeMap::new();
    for m in slice.basis() {
        by_weight
            .entry(slice.weight(m))
            .or_default()
            .push(m.clone());
    }
    let positives: Vec<EnvElement> = (0..g.dim())
        .filter(|&i| rd.is_positive(i))
        .map(|i| EnvElement::generator(g, i))
        .collect();
    let mut vectors = Vec::new();
    for (w, cols) in &by_weight {
        if w.as_slice() == lambda {
            continue;
        }
        let mut rows: BTreeMap<(usize, Monomial), SparseVec> = BTreeMap::new();
        for (j, m) in cols.iter().enumerate() {
            for (k, p) in positives.iter().enumerate() {
                for (out, c) in slice.act_unbounded(p, m) {
                    rows.entry((k, out)).or_default().insert(j, c);
                }
            }
        }
        let rows: Vec<SparseVec> = rows.into_values().collect();
        for v in linalg::nullspace(&rows, cols.len()) {
            let vec: VermaVector = v.into_iter().map(|(j, c)| (cols[j].clone(), c)).collect();
            let lead = vec
                .values()
                .next_back()
                .cloned()
                .expect("kernel vectors are nonzero");
            let vec = vec.into_iter().map(|(m, c)| (m, c / &lead)).collect();
            vectors.push((w.clone(), vec));
        }
    }

    let shifted = add_w(lambda, &rd.rho());
    let mut predictions = Vec::new();
    let mut predict = |root: &Weight, n: u64| {
        let weight = sub_w(lambda, &scale_w(root, &Q::from_integer(n.into())));
        predictions.push(Prediction {
            root: root.clone(),
            n,
            in_slice: by_weight.contains_key(&weight),
            found: vectors.iter().any(|(w, _)| w == &weight),
            weight,
        });
    };
    for a in rd.even_positive_bar() {
        if let Some(n) = positive_integer(&rd.form(&shifted, &a)) {
            predict(&a, n);
        }
    }
    for a in rd.odd_positive_nonisotropic() {
        if let Some(n) = positive_integer(&rd.form(&shifted, &a)).filter(|n| n % 2 == 1) {
            predict(&a, n);
        }
    }
    for a in rd.odd_positive_bar() {
        if rd.form(&shifted, &a).is_zero() {
            predict(&a, 1);
        }
    }
    Ok(SingularReport {
        vectors,
        predictions,
    })
}

/// Contravariant-form Gram matrix on `M(lambda)_{lambda - eta}`, entries polynomial in lambda.
#[derive(Debug, Clone, PartialEq)]
pub struct GramMatrix {
    pub eta: Weight,
    pub basis: Vec<Monomial>,
    pub entries: Vec<Vec<HPolynomial>>,
}

impl GramMatrix {
    pub fn size(&self) -> usize {
        self.basis.len()
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| (0..n).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    pub fn at(&self, lambda: &[Q]) -> Vec<Vec<Q>> {
        self.entries
            .iter()
            .map(|row| row.iter().map(|p| p.eval(lambda)).collect())
            .collect()
    }

    pub fn determinant_at(&self, lambda: &[Q]) -> Q {
        linalg::determinant(&self.at(lambda))
    }

    /// Fraction-free (Bareiss) determinant over the polynomial ring.
    pub fn determinant(&self) -> HPolynomial {
        let n = self.size();
        let r = self.eta.len();
        if n == 0 {
            return HPolynomial::one(r);
        }
        let mut m = self.entries.clone();
        let mut prev = HPolynomial::one(r);
        let mut negate = false;
        for k in 0..n {
            if m[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                    return HPolynomial::zero(r);
                };
                m.swap(k, p);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                    m[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
                }
            }
            prev = m[k][k].clone();
        }
        let det = m[n - 1][n - 1].clone();
        if negate {
            -&det
        } else {
            det
        }
    }
}

/// Anti-automorphism fixing the Cartan and exchanging each root generator with the
/// generator of the opposite root.
fn partner(rd: &RootDatum, g: usize) -> usize {
    let root = rd.root_of(g).expect("root generator");
    let opposite = scale_w(&root.coords, &-Q::one());
    rd.roots()
        .iter()
        .find(|r| r.coords == opposite && r.positive != root.positive)
        .map(|r| r.generator)
        .expect("every root generator has an opposite partner")
}

/// Height of `eta` in simple-root coordinates, if it is a nonnegative integral combination.
fn height(rd: &RootDatum, eta: &[Q]) -> Option<usize> {
    let c = rd.simple_coordinates(eta)?;
    if c.iter().any(|x| !x.is_integer() || x < &Q::zero()) {
        return None;
    }
    let h: Q = c.iter().sum();
    h.to_integer().try_into().ok()
}

/// The negative PBW monomials spanning `M(lambda)_{lambda - eta}`.
pub fn weight_space_basis(g: &Arc<LieSuperalgebra>, eta: &[Q]) -> Result<Vec<Monomial>> {
    let rd = g.require_root_datum()?;
    let Some(h) = height(rd, eta) else {
        return Ok(Vec::new());
    };
    let target: Weight = scale_w(eta, &-Q::one());
    Ok(monomials_in(g, &negative_generators(g, rd), h)
        .into_iter()
        .filter(|m| rd.monomial_weight(m) == target)
        .collect())
}

pub fn shapovalov_gram(g: &Arc<LieSuperalgebra>, eta: &[Q]) -> Result<GramMatrix> {
    let rd = g.require_root_datum()?;
    let ring = Ring::new(g.clone());
    let basis = weight_space_basis(g, eta)?;
    let one = Monomial::one(g.dim());
    let transpose = |m: &Monomial| -> EnvElement {
        let word = m.word(&(0..g.dim()).collect::<Vec<_>>());
        word.iter().rev().fold(EnvElement::one(g), |acc, &x| {
            ring.mul(&acc, &EnvElement::generator(g, partner(rd, x)))
                .expect("same algebra")
        })
    };
    let entries = basis
        .iter()
        .map(|p| {
            let tp = transpose(p);
            basis
                .iter()
                .map(|q| {
                    act_symbolic(&ring, rd, &tp, q)
                        .remove(&one)
                        .unwrap_or_else(|| HPolynomial::zero(rd.rank()))
                })
                .collect()
        })
        .collect();
    Ok(GramMatrix {
        eta: eta.to_vec(),
        basis,
        entries,
    })
}

/// The product `A * B * C` predicted for `det S_eta`.
pub fn shapovalov_formula(rd: &RootDatum, eta: &[Q]) -> HPolynomial {
    let r = rd.rank();
    let rho = rd.rho();
    let Some(ht) = height(rd, eta) else {
        return HPolynomial::one(r);
    };
    let factor = |gamma: &Weight, shift: Q| {
        &rd.h_of(gamma) + &HPolynomial::constant(r, rd.form(&rho, gamma) - shift)
    };
    let mut out = HPolynomial::one(r);
    for gamma in rd.even_positive_bar() {
        let half = rd.form(&gamma, &gamma) / Q::from_integer(2.into());
        for n in 1..=ht {
            let nq = Q::from_integer(n.into());
            let p = rd.partition_count(&sub_w(eta, &scale_w(&gamma, &nq)), &[]);
            out = &out * &factor(&gamma, &nq * &half).pow(p as u32);
        }
    }
    for gamma in rd.odd_positive_nonisotropic() {
        let half = rd.form(&gamma, &gamma) / Q::from_integer(2.into());
        for n in 1..=ht {
            let k = Q::from_integer((2 * n - 1).into());
            let p = rd.partition_count(&sub_w(eta, &scale_w(&gamma, &k)), &[]);
            out = &out * &factor(&gamma, &k * &half).pow(p as u32);
        }
    }
    for gamma in rd.odd_positive_bar() {
        let p = rd.partition_count(&sub_w(eta, &gamma), std::slice::from_ref(&gamma));
        out = &out * &factor(&gamma, Q::zero()).pow(p as u32);
    }
    out
}

/// Parse `"n1*alpha1 + n2*alpha2"` into a weight, with `alpha_i` the simple roots.
pub fn parse_eta(rd: &RootDatum, s: &str) -> Result<Weight> {
    let simple = rd.simple_roots();
    let mut coeffs = vec![Q::zero(); simple.len()];
    let bad = || Error::Parse(format!("bad weight `{s}`: expected terms like 2*alpha1"));
    for term in s.split('+').map(str::trim) {
        if term == "0" {
            continue;
        }
        let (n, name) = match term.split_once('*') {
            Some((n, name)) => (parse_q(n.trim())?, name.trim()),
            None => (Q::one(), term),
        };
        let i: usize = name
            .strip_prefix("alpha")
            .and_then(|k| k.parse().ok())
            .filter(|&k| k >= 1 && k <= simple.len())
            .ok_or_else(bad)?;
        coeffs[i - 1] += n;
    }
    Ok(rd.from_simple_coordinates(&coeffs))
}

/// Elements of `F^d` killing every slice vector for each listed highest weight.
pub fn common_annihilator(
    g: &Arc<LieSuperalgebra>,
    d: usize,
    lambdas: &[Weight],
    depth: usize,
) -> Result<Vec<EnvElement>> {
    let rd = g.require_root_datum()?;
    let ring = Ring::new(g.clone());
    let cols = crate::pbw::pbw_basis(g, d);
    let vecs = monomials_in(g, &negative_generators(g, rd), depth);
    let mut rows: BTreeMap<(usize, usize, Monomial), SparseVec> = BTreeMap::new();
    for (j, m) in cols.iter().enumerate() {
        let u = EnvElement::monomial(g, m.clone());
        for (b, n) in vecs.iter().enumerate() {
            let sym = act_symbolic(&ring, rd, &u, n);
            for (l, lambda) in lambdas.iter().enumerate() {
                for (out, c) in evaluate(&sym, lambda) {
                    rows.entry((l, b, out)).or_default().insert(j, c);
                }
            }
        }
    }
    let rows: Vec<SparseVec> = rows.into_values().collect();
    Ok(linalg::nullspace(&rows, cols.len())
        .into_iter()
        .map(|v| {
            EnvElement::from_terms(g.clone(), v.into_iter().map(|(j, c)| (cols[j].clone(), c)))
                .expect("normal monomials")
        })
        .collect())
}

/// `t` evaluated at lambda, for reports.
pub fn t_at(rd: &RootDatum, lambda: &[Q]) -> Q {
    compute_t(rd).eval(lambda)
}
