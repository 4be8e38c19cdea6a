//! Adjoint and twisted adjoint actions, the projection onto the top odd component,
//! the associated pairing, biorthogonal families, and the ghost element `T`.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::pbw::{EnvElement, Monomial, Ring};
use crate::rational::Q;
use crate::superalg::{LieSuperalgebra, Parity};

/// A subset of the odd generators, as a bitset over their positions in the list of
/// odd generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OddSubset {
    bits: u64,
    n: usize,
}

impl OddSubset {
    pub fn empty(n: usize) -> Self {
        assert!(n < 64, "too many odd generators");
        OddSubset { bits: 0, n }
    }

    pub fn full(n: usize) -> Self {
        assert!(n < 64, "too many odd generators");
        OddSubset {
            bits: (1u64 << n) - 1,
            n,
        }
    }

    pub fn from_positions(n: usize, positions: &[usize]) -> Self {
        let mut s = Self::empty(n);
        for &p in positions {
            assert!(p < n, "odd position out of range");
            s.bits |= 1 << p;
        }
        s
    }

    /// Parses a comma-separated list of odd generator names (empty string = empty set).
    pub fn parse(g: &LieSuperalgebra, list: &str) -> Result<Self> {
        let odd = g.odd_indices();
        let mut positions = Vec::new();
        for name in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let idx = g
                .index_of(name)
                .ok_or_else(|| Error::Parse(format!("unknown generator `{name}`")))?;
            let pos = odd
                .iter()
                .position(|&i| i == idx.0)
                .ok_or_else(|| Error::Parse(format!("`{name}` is not odd")))?;
            positions.push(pos);
        }
        Ok(Self::from_positions(odd.len(), &positions))
    }

    /// All subsets, largest first; equal sizes in increasing bit order.
    pub fn all_by_decreasing_size(n: usize) -> Vec<Self> {
        let mut v: Vec<Self> = (0..1u64 << n).map(|bits| OddSubset { bits, n }).collect();
        v.sort_by(|a, b| b.len().cmp(&a.len()).then(a.bits.cmp(&b.bits)));
        v
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn complement(&self) -> Self {
        OddSubset {
            bits: !self.bits & ((1u64 << self.n) - 1),
            n: self.n,
        }
    }

    pub fn positions(&self) -> Vec<usize> {
        (0..self.n).filter(|p| self.bits >> p & 1 == 1).collect()
    }

    /// `x_J`, the ordered product of the members.
    pub fn element(&self, g: &Arc<LieSuperalgebra>) -> EnvElement {
        let odd = g.odd_indices();
        let mut m = Monomial::one(g.dim());
        for p in self.positions() {
            m = Monomial::generator(g.dim(), odd[p]).times(&m);
        }
        EnvElement::monomial(g, m)
    }

    pub fn names(&self, g: &LieSuperalgebra) -> Vec<String> {
        let odd = g.odd_indices();
        self.positions()
            .into_iter()
            .map(|p| g.generator_name(odd[p]).to_string())
            .collect()
    }
}

/// `(ad a) u = a u - (-1)^{d(a) d(u)} u a`, extended linearly over homogeneous parts.
pub fn ad(a: usize, u: &EnvElement) -> EnvElement {
    Ring::new(u.algebra().clone()).gen_commutator(a, u, false)
}

/// `(ad' a) u = a u - (-1)^{d(a)(d(u)+1)} u a`.
pub fn ad_prime(a: usize, u: &EnvElement) -> EnvElement {
    Ring::new(u.algebra().clone()).gen_commutator(a, u, true)
}

pub fn ad_with(ring: &Ring, a: usize, u: &EnvElement) -> EnvElement {
    ring.gen_commutator(a, u, false)
}

pub fn ad_prime_with(ring: &Ring, a: usize, u: &EnvElement) -> EnvElement {
    ring.gen_commutator(a, u, true)
}

/// Twisted adjoint action of an arbitrary element `v` of `U(g)` on `z`.
pub fn ad_prime_element(ring: &Ring, v: &EnvElement, z: &EnvElement) -> EnvElement {
    let order: Vec<usize> = (0..z.algebra().dim()).collect();
    let mut acc = EnvElement::zero(z.algebra());
    for (m, c) in v.terms() {
        let mut cur = z.clone();
        for &g in m.word(&order).iter().rev() {
            cur = ring.gen_commutator(g, &cur, true);
        }
        acc = &acc + &cur.scale(c);
    }
    acc
}

pub fn lambda_top_trivial(g: &LieSuperalgebra) -> bool {
    g.lambda_top_trivial()
}

fn require_top_trivial(g: &LieSuperalgebra) -> Result<()> {
    if g.lambda_top_trivial() {
        Ok(())
    } else {
        Err(Error::TopNotTrivial)
    }
}

/// Projection of `U(g)` onto `U(g_0)`: expands `u` as `sum_J u_J x_J` with the odd part on
/// the right and returns the coefficient of the full odd monomial `x_I`.
pub fn iota(u: &EnvElement) -> Result<EnvElement> {
    let g = u.algebra();
    require_top_trivial(g)?;
    let ring = Ring::odd_rightmost(g.clone());
    iota_with(&ring, u)
}

fn iota_with(odd_right: &Ring, u: &EnvElement) -> Result<EnvElement> {
    let g = u.algebra();
    let odd = g.odd_indices();
    let expanded = odd_right.reexpress(u)?;
    let mut out = BTreeMap::new();
    for (m, c) in expanded {
        if odd.iter().all(|&i| m.exponent(i) == 1) {
            let mut even = m.clone();
            for &i in &odd {
                even = even.with_exponent(i, 0);
            }
            out.insert(even, c);
        }
    }
    EnvElement::from_terms(g.clone(), out)
}

/// `(u | v) = iota(u v)`.
pub fn pairing(u: &EnvElement, v: &EnvElement) -> Result<EnvElement> {
    let g = u.algebra();
    require_top_trivial(g)?;
    let prod = Ring::new(g.clone()).mul(u, v)?;
    iota(&prod)
}

/// Elements `u_J`, `v_J` with `(u_J | x_J') = (x_J' | v_J) = delta_{J,J'}`, for every
/// subset `J` of the odd generators.
#[derive(Debug, Clone)]
pub struct BiorthogonalFamily {
    pub u: BTreeMap<OddSubset, EnvElement>,
    pub v: BTreeMap<OddSubset, EnvElement>,
}

fn as_scalar(u: &EnvElement) -> Option<Q> {
    match u.num_terms() {
        0 => Some(Q::zero()),
        1 => {
            let (m, c) = u.terms().iter().next()?;
            m.is_one().then(|| c.clone())
        }
        _ => None,
    }
}

/// Builds `u_J` and `v_J` by downward recursion on `|J|`, starting from `u_I = v_I = 1`.
pub fn biorthogonal_family(g: &Arc<LieSuperalgebra>) -> Result<BiorthogonalFamily> {
    require_top_trivial(g)?;
    let n = g.odd_dim();
    let ring = Ring::new(g.clone());
    let odd_right = Ring::odd_rightmost(g.clone());
    let pair = |a: &EnvElement, b: &EnvElement| -> Result<EnvElement> {
        iota_with(&odd_right, &ring.mul(a, b)?)
    };
    let mut us: BTreeMap<OddSubset, EnvElement> = BTreeMap::new();
    let mut vs: BTreeMap<OddSubset, EnvElement> = BTreeMap::new();
    for j in OddSubset::all_by_decreasing_size(n) {
        let xc = j.complement().element(g);
        let xj = j.element(g);
        let mut v = xc.clone();
        let mut u = xc.clone();
        for (jp, vjp) in &vs {
            if jp.len() > j.len() {
                let c = pair(&jp.element(g), &xc)?;
                v = &v - &ring.mul(vjp, &c)?;
            }
        }
        for (jp, ujp) in &us {
            if jp.len() > j.len() {
                let c = pair(&xc, &jp.element(g))?;
                u = &u - &ring.mul(&c, ujp)?;
            }
        }
        let sv = as_scalar(&pair(&xj, &v)?).filter(|s| !s.is_zero());
        let su = as_scalar(&pair(&u, &xj)?).filter(|s| !s.is_zero());
        let (Some(sv), Some(su)) = (sv, su) else {
            return Err(Error::AxiomViolation(
                "pairing with the complementary odd monomial is not a nonzero scalar".into(),
            ));
        };
        vs.insert(j, v.scale(&(Q::one() / sv)));
        us.insert(j, u.scale(&(Q::one() / su)));
    }
    Ok(BiorthogonalFamily { u: us, v: vs })
}

pub fn construct_vj(g: &Arc<LieSuperalgebra>, j: OddSubset) -> Result<EnvElement> {
    Ok(biorthogonal_family(g)?
        .v
        .remove(&j)
        .expect("all subsets built"))
}

pub fn construct_uj(g: &Arc<LieSuperalgebra>, j: OddSubset) -> Result<EnvElement> {
    Ok(biorthogonal_family(g)?
        .u
        .remove(&j)
        .expect("all subsets built"))
}

/// Checks that `z` lies in `U(g_0)` and commutes with every even generator.
pub fn check_g0_central(z: &EnvElement) -> Result<()> {
    let g = z.algebra();
    if let Some(m) = z
        .terms()
        .keys()
        .find(|m| g.odd_indices().iter().any(|&i| m.exponent(i) > 0))
    {
        return Err(Error::NotG0Central(format!(
            "term {} involves an odd generator",
            EnvElement::monomial_string(g, m)
        )));
    }
    let ring = Ring::new(g.clone());
    for a in g.even_indices() {
        if !ad_with(&ring, a, z).is_zero() {
            return Err(Error::NotG0Central(format!(
                "does not commute with {}",
                g.generator_name(a)
            )));
        }
    }
    Ok(())
}

/// The map `z -> (ad' v_empty) z` from the centre of `U(g_0)` into the anticentre.
pub fn phi(z: &EnvElement) -> Result<EnvElement> {
    let g = z.algebra();
    require_top_trivial(g)?;
    check_g0_central(z)?;
    let v_empty = construct_vj(g, OddSubset::empty(g.odd_dim()))?;
    let ring = Ring::new(g.clone());
    Ok(ad_prime_element(&ring, &v_empty, z))
}

/// The Casimir ghost: the twisted-invariant element generated from `1`, normalized so
/// that the full odd monomial `x_I` has coefficient one.
#[derive(Debug, Clone, PartialEq)]
pub struct GhostElement {
    value: EnvElement,
}

impl GhostElement {
    pub fn value(&self) -> &EnvElement {
        &self.value
    }

    pub fn into_value(self) -> EnvElement {
        self.value
    }

    /// Re-checks invariance, the top symbol and the parity; returns a description of the
    /// first failure.
    pub fn verify(&self) -> std::result::Result<(), String> {
        let g = self.value.algebra();
        let ring = Ring::new(g.clone());
        for a in 0..g.dim() {
            if !ad_prime_with(&ring, a, &self.value).is_zero() {
                return Err(format!("ad'({}) T != 0", g.generator_name(a)));
            }
        }
        let top = OddSubset::full(g.odd_dim()).element(g);
        let (top_m, _) = top.terms().iter().next().expect("monomial");
        let d = top_m.degree();
        let top_part = self.value.homogeneous_part(d);
        if self.value.degree() != crate::pbw::FiltrationDegree::Finite(d)
            || top_part.num_terms() != 1
            || top_part.coeff(top_m) != Q::one()
        {
            return Err("symbol of T is not the top odd monomial".into());
        }
        let want = Parity::from_odd(g.odd_dim() % 2 == 1);
        if self.value.parity() != Some(want) {
            return Err(format!("T is not {want}"));
        }
        Ok(())
    }
}

pub fn construct_t(g: &Arc<LieSuperalgebra>) -> Result<GhostElement> {
    require_top_trivial(g)?;
    let raw = phi(&EnvElement::one(g))?;
    let top = OddSubset::full(g.odd_dim()).element(g);
    let (m, _) = top.terms().iter().next().expect("monomial");
    let c = raw.coeff(m);
    if c.is_zero() {
        return Err(Error::AxiomViolation(
            "phi(1) has no component along the top odd monomial".into(),
        ));
    }
    Ok(GhostElement {
        value: raw.scale(&(Q::one() / c)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin;
    use crate::pbw::parse_element;
    use crate::rational::q;

    fn p(g: &Arc<LieSuperalgebra>, s: &str) -> EnvElement {
        parse_element(g, s).unwrap()
    }

    fn idx(g: &LieSuperalgebra, s: &str) -> usize {
        g.index_of(s).unwrap().0
    }

    #[test]
    fn adjoint_examples() {
        let q1 = builtin::q1();
        assert!(ad(idx(&q1, "e"), &p(&q1, "x")).is_zero());
        let w1 = builtin::w1();
        assert_eq!(ad(idx(&w1, "g"), &p(&w1, "x")), p(&w1, "x"));
        for g in builtin::all() {
            for a in 0..g.dim() {
                assert!(ad(a, &EnvElement::one(&g)).is_zero());
            }
        }
    }

    #[test]
    fn twisted_adjoint_examples() {
        let q1 = builtin::q1();
        let x = idx(&q1, "x");
        assert_eq!(ad_prime(x, &EnvElement::one(&q1)), p(&q1, "2*x"));
        assert!(ad_prime(x, &p(&q1, "x")).is_zero());
        let w1 = builtin::w1();
        assert_eq!(ad_prime(idx(&w1, "g"), &p(&w1, "x")), p(&w1, "x"));
    }

    #[test]
    fn iota_and_pairing_on_q1() {
        let q1 = builtin::q1();
        assert_eq!(iota(&p(&q1, "x")).unwrap(), p(&q1, "1"));
        assert!(iota(&p(&q1, "e")).unwrap().is_zero());
        assert_eq!(iota(&p(&q1, "e*x")).unwrap(), p(&q1, "e"));
        assert_eq!(pairing(&p(&q1, "1"), &p(&q1, "x")).unwrap(), p(&q1, "1"));
        assert!(pairing(&p(&q1, "x"), &p(&q1, "x")).unwrap().is_zero());
        assert_eq!(pairing(&p(&q1, "e"), &p(&q1, "x")).unwrap(), p(&q1, "e"));
        let w1 = builtin::w1();
        assert_eq!(iota(&p(&w1, "x")), Err(Error::TopNotTrivial));
    }

    #[test]
    fn biorthogonal_on_q1() {
        let q1 = builtin::q1();
        let n = q1.odd_dim();
        assert_eq!(construct_vj(&q1, OddSubset::full(n)).unwrap(), p(&q1, "1"));
        assert_eq!(construct_vj(&q1, OddSubset::empty(n)).unwrap(), p(&q1, "x"));
    }

    #[test]
    fn phi_on_q1() {
        let q1 = builtin::q1();
        assert_eq!(phi(&p(&q1, "1")).unwrap(), p(&q1, "2*x"));
        assert_eq!(phi(&p(&q1, "e")).unwrap(), p(&q1, "2*e*x"));
        assert!(matches!(phi(&p(&q1, "x")), Err(Error::NotG0Central(_))));
    }

    #[test]
    fn ghost_elements() {
        let q1 = builtin::q1();
        let t = construct_t(&q1).unwrap();
        assert_eq!(t.value(), &p(&q1, "x"));
        t.verify().unwrap();
        assert_eq!(construct_t(&builtin::w1()), Err(Error::TopNotTrivial));
        let osp = builtin::osp12();
        let t = construct_t(&osp).unwrap();
        t.verify().unwrap();
        assert_eq!(t.value().parity(), Some(Parity::Even));
    }

    #[test]
    fn phi_needs_g0_central_input() {
        let osp = builtin::osp12();
        assert!(matches!(phi(&p(&osp, "H")), Err(Error::NotG0Central(_))));
        let casimir = p(&osp, "E*F + F*E + 1/2*H^2");
        let a = phi(&casimir).unwrap();
        assert!(!a.is_zero());
        assert_eq!(a.scale(&q(1)), a);
    }

    #[test]
    fn subsets_parse_and_order() {
        let osp = builtin::osp12();
        let s = OddSubset::parse(&osp, "x, y").unwrap();
        assert_eq!(s, OddSubset::full(2));
        assert_eq!(s.names(&osp), ["y", "x"]);
        assert!(OddSubset::parse(&osp, "H").is_err());
        let order = OddSubset::all_by_decreasing_size(2);
        assert_eq!(
            order.iter().map(OddSubset::len).collect::<Vec<_>>(),
            [2, 1, 1, 0]
        );
    }
}
