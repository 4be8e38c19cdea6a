//! Degree-truncated centre, anticentre, ghost centre, associative centre and the
//! centralizer of the even part, computed as kernels of exact linear conditions.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::actions::{ad_prime_with, ad_with};
use crate::error::{Error, Result};
use crate::linalg::{self, SparseVec};
use crate::pbw::{monomials_in, pbw_basis, EnvElement, Monomial, Ring};
use crate::rational::Q;
use crate::superalg::{LieSuperalgebra, Parity};

pub use crate::linalg::nullspace;

/// Echelon basis of a subspace of `F^d`: leading monomials distinct and increasing,
/// each leading coefficient one, and no element has a term at another's leading monomial.
#[derive(Debug, Clone, PartialEq)]
pub struct SubspaceBasis {
    pub degree_bound: usize,
    elements: Vec<EnvElement>,
}

impl SubspaceBasis {
    pub fn new(degree_bound: usize, elements: Vec<EnvElement>) -> Self {
        SubspaceBasis {
            degree_bound,
            elements: echelon(&elements),
        }
    }

    pub fn elements(&self) -> &[EnvElement] {
        &self.elements
    }

    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// True iff `u` lies in the span.
    pub fn contains(&self, u: &EnvElement) -> bool {
        let mut r = u.terms().clone();
        for b in &self.elements {
            let (lead, _) = b.leading().expect("basis elements are nonzero");
            if let Some(c) = r.get(lead).cloned() {
                subtract_scaled(&mut r, b.terms(), &c);
            }
        }
        r.is_empty()
    }

    /// Same span as `other`.
    pub fn same_span(&self, other: &SubspaceBasis) -> bool {
        self.dim() == other.dim() && other.elements.iter().all(|u| self.contains(u))
    }

    /// Echelon basis of the sum of two subspaces.
    pub fn sum(&self, other: &SubspaceBasis) -> SubspaceBasis {
        let mut all = self.elements.clone();
        all.extend(other.elements.iter().cloned());
        SubspaceBasis::new(self.degree_bound.max(other.degree_bound), all)
    }
}

fn subtract_scaled(r: &mut BTreeMap<Monomial, Q>, b: &BTreeMap<Monomial, Q>, c: &Q) {
    for (m, v) in b {
        let e = r.entry(m.clone()).or_insert_with(Q::zero);
        *e -= v * c;
        if e.is_zero() {
            r.remove(m);
        }
    }
}

/// Reduced echelon form of a family of elements, leading monomial = largest monomial.
pub fn echelon(elements: &[EnvElement]) -> Vec<EnvElement> {
    let Some(alg) = elements.first().map(|e| e.algebra().clone()) else {
        return Vec::new();
    };
    let mut basis: Vec<BTreeMap<Monomial, Q>> = Vec::new();
    for e in elements {
        let mut r = e.terms().clone();
        for b in &basis {
            let (lead, _) = b.iter().next_back().expect("nonzero");
            if let Some(c) = r.get(lead).cloned() {
                subtract_scaled(&mut r, b, &c);
            }
        }
        let Some((lead, lc)) = r.iter().next_back().map(|(m, c)| (m.clone(), c.clone())) else {
            continue;
        };
        let inv = Q::one() / lc;
        for v in r.values_mut() {
            *v *= &inv;
        }
        for b in basis.iter_mut() {
            if let Some(c) = b.get(&lead).cloned() {
                subtract_scaled(b, &r, &c);
            }
        }
        basis.push(r);
    }
    basis.sort_by(|a, b| a.keys().next_back().cmp(&b.keys().next_back()));
    basis
        .into_iter()
        .map(|t| EnvElement::from_terms(alg.clone(), t).expect("terms come from normal forms"))
        .collect()
}

/// Rows of the linear map `c -> sum_j c_j f(m_j)` with one column per monomial `m_j`.
/// `f` returns one element per condition.
pub fn condition_rows<F>(g: &Arc<LieSuperalgebra>, columns: &[Monomial], f: F) -> Vec<SparseVec>
where
    F: Fn(&EnvElement) -> Vec<EnvElement>,
{
    let mut rows: HashMap<(usize, Monomial), SparseVec> = HashMap::new();
    for (j, m) in columns.iter().enumerate() {
        let u = EnvElement::monomial(g, m.clone());
        for (k, img) in f(&u).into_iter().enumerate() {
            for (mm, c) in img.terms() {
                rows.entry((k, mm.clone()))
                    .or_default()
                    .insert(j, c.clone());
            }
        }
    }
    let mut keyed: Vec<((usize, Monomial), SparseVec)> = rows.into_iter().collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.into_iter().map(|(_, r)| r).collect()
}

/// Kernel of a condition map, returned as an echelon basis of elements.
pub fn solve_invariants<F>(
    g: &Arc<LieSuperalgebra>,
    degree_bound: usize,
    columns: &[Monomial],
    f: F,
) -> SubspaceBasis
where
    F: Fn(&EnvElement) -> Vec<EnvElement>,
{
    let rows = condition_rows(g, columns, f);
    let kernel = nullspace(&rows, columns.len());
    let elements = kernel
        .into_iter()
        .map(|v| {
            EnvElement::from_terms(
                g.clone(),
                v.into_iter().map(|(j, c)| (columns[j].clone(), c)),
            )
            .expect("columns are normal monomials")
        })
        .collect();
    SubspaceBasis::new(degree_bound, elements)
}

/// `Z(g) ∩ F^d`: elements killed by `ad a` for every generator `a`.
pub fn centre_basis(g: &Arc<LieSuperalgebra>, d: usize) -> SubspaceBasis {
    let ring = Ring::new(g.clone());
    solve_invariants(g, d, &pbw_basis(g, d), |u| {
        (0..g.dim()).map(|a| ad_with(&ring, a, u)).collect()
    })
}

/// `A(g) ∩ F^d`: elements killed by `ad' a` for every generator `a`.
pub fn anticentre_basis(g: &Arc<LieSuperalgebra>, d: usize) -> SubspaceBasis {
    let ring = Ring::new(g.clone());
    solve_invariants(g, d, &pbw_basis(g, d), |u| {
        (0..g.dim()).map(|a| ad_prime_with(&ring, a, u)).collect()
    })
}

fn commutators(ring: &Ring, ws: &[EnvElement], u: &EnvElement) -> Vec<EnvElement> {
    ws.iter()
        .map(|w| &ring.mul(w, u).expect("same algebra") - &ring.mul(u, w).expect("same algebra"))
        .collect()
}

/// Generators of the even subalgebra `U(g)_0`: even generators and products of two odd ones.
fn even_part_generators(g: &Arc<LieSuperalgebra>, ring: &Ring) -> Vec<EnvElement> {
    let mut ws: Vec<EnvElement> = g
        .even_indices()
        .into_iter()
        .map(|a| EnvElement::generator(g, a))
        .collect();
    for i in g.odd_indices() {
        for j in g.odd_indices() {
            let xi = EnvElement::generator(g, i);
            let xj = EnvElement::generator(g, j);
            ws.push(ring.mul(&xi, &xj).expect("same algebra"));
        }
    }
    ws
}

/// Centralizer of `U(g)_0` in `U(g)`, truncated to `F^d` (ungraded commutators).
pub fn centralizer_even_basis(g: &Arc<LieSuperalgebra>, d: usize) -> SubspaceBasis {
    let ring = Ring::new(g.clone());
    let ws = even_part_generators(g, &ring);
    solve_invariants(g, d, &pbw_basis(g, d), |u| commutators(&ring, &ws, u))
}

/// Centre of `U(g)` as an ungraded associative algebra, truncated to `F^d`.
pub fn associative_centre_basis(g: &Arc<LieSuperalgebra>, d: usize) -> SubspaceBasis {
    let ring = Ring::new(g.clone());
    let ws: Vec<EnvElement> = (0..g.dim()).map(|a| EnvElement::generator(g, a)).collect();
    solve_invariants(g, d, &pbw_basis(g, d), |u| commutators(&ring, &ws, u))
}

/// `Z(g_0) ∩ F^r`: the centre of the enveloping algebra of the even part.
pub fn even_centre_basis(g: &Arc<LieSuperalgebra>, r: usize) -> SubspaceBasis {
    let ring = Ring::new(g.clone());
    let even = g.even_indices();
    solve_invariants(g, r, &monomials_in(g, &even, r), |u| {
        even.iter().map(|&a| ad_with(&ring, a, u)).collect()
    })
}

/// Parity of the elements of an anticentre basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParitySummary {
    Empty,
    AllEven,
    AllOdd,
}

/// Every anticentre element must be homogeneous of parity `dim g_1 mod 2`.
pub fn parity_audit(g: &LieSuperalgebra, b: &SubspaceBasis) -> Result<ParitySummary> {
    if b.is_empty() {
        return Ok(ParitySummary::Empty);
    }
    let want = Parity::from_odd(g.odd_dim() % 2 == 1);
    for e in b.elements() {
        match e.parity() {
            Some(p) if p == want => {}
            Some(p) => return Err(Error::MixedParity(format!("{e} is {p}, expected {want}"))),
            None => return Err(Error::MixedParity(format!("{e} is not homogeneous"))),
        }
    }
    Ok(match want {
        Parity::Even => ParitySummary::AllEven,
        Parity::Odd => ParitySummary::AllOdd,
    })
}

/// Coordinates of elements against a monomial list, for rank computations.
pub fn coordinate_rows(elements: &[EnvElement]) -> Vec<SparseVec> {
    let mut index: BTreeMap<Monomial, usize> = BTreeMap::new();
    for e in elements {
        for m in e.terms().keys() {
            let n = index.len();
            index.entry(m.clone()).or_insert(n);
        }
    }
    elements
        .iter()
        .map(|e| {
            e.terms()
                .iter()
                .map(|(m, c)| (index[m], c.clone()))
                .collect()
        })
        .collect()
}

pub fn rank_of(elements: &[EnvElement]) -> usize {
    linalg::rank(&coordinate_rows(elements))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin;
    use crate::pbw::parse_element;

    fn strings(b: &SubspaceBasis) -> Vec<String> {
        b.elements().iter().map(ToString::to_string).collect()
    }

    #[test]
    fn q1_small_degree() {
        let g = builtin::q1();
        assert_eq!(strings(&centre_basis(&g, 2)), ["1", "e", "e^2"]);
        assert_eq!(strings(&anticentre_basis(&g, 2)), ["x", "e*x"]);
        // U(q1) is commutative
        let all = ["1", "e", "x", "e^2", "e*x"];
        assert_eq!(strings(&centralizer_even_basis(&g, 2)), all);
        assert_eq!(strings(&associative_centre_basis(&g, 2)), all);
    }

    #[test]
    fn q1_twisted_matrix_on_f1() {
        let g = builtin::q1();
        let ring = Ring::new(g.clone());
        let cols = pbw_basis(&g, 1);
        let rows = condition_rows(&g, &cols, |u| {
            (0..g.dim()).map(|a| ad_prime_with(&ring, a, u)).collect()
        });
        let ker = nullspace(&rows, cols.len());
        assert_eq!(ker.len(), 1);
        let only: Vec<usize> = ker[0].keys().copied().collect();
        assert_eq!(only, vec![2]);
        assert_eq!(EnvElement::monomial_string(&g, &cols[2]), "x");
    }

    #[test]
    fn w1_and_sl2() {
        let w1 = builtin::w1();
        assert_eq!(strings(&centre_basis(&w1, 2)), ["1"]);
        assert!(anticentre_basis(&w1, 4).is_empty());
        assert_eq!(strings(&associative_centre_basis(&w1, 3)), ["1"]);
        let sl2 = builtin::sl2();
        let z = centre_basis(&sl2, 2);
        assert_eq!(z.dim(), 2);
        let casimir = parse_element(&sl2, "E*F + F*E + 1/2*H^2").unwrap();
        assert!(z.contains(&casimir));
        assert!(z.same_span(&centralizer_even_basis(&sl2, 2)));
    }

    #[test]
    fn osp12_anticentre_starts_at_degree_two() {
        let g = builtin::osp12();
        assert!(anticentre_basis(&g, 1).is_empty());
        let a2 = anticentre_basis(&g, 2);
        assert_eq!(a2.dim(), 1);
        let t = crate::actions::construct_t(&g).unwrap();
        assert!(a2.contains(t.value()));
        assert_eq!(parity_audit(&g, &a2), Ok(ParitySummary::AllEven));
        let assoc = associative_centre_basis(&g, 2);
        let z = centre_basis(&g, 2);
        let even_z: Vec<EnvElement> = z
            .elements()
            .iter()
            .map(|e| e.parity_part(Parity::Even))
            .collect();
        assert!(assoc.same_span(&SubspaceBasis::new(2, even_z)));
    }

    #[test]
    fn parity_audit_cases() {
        let q1 = builtin::q1();
        assert_eq!(
            parity_audit(&q1, &anticentre_basis(&q1, 3)),
            Ok(ParitySummary::AllOdd)
        );
        assert_eq!(
            parity_audit(&q1, &SubspaceBasis::new(0, vec![])),
            Ok(ParitySummary::Empty)
        );
        let mixed = SubspaceBasis::new(1, vec![parse_element(&q1, "x + e").unwrap()]);
        assert!(matches!(
            parity_audit(&q1, &mixed),
            Err(Error::MixedParity(_))
        ));
    }

    #[test]
    fn echelon_is_canonical() {
        let g = builtin::q1();
        let a = parse_element(&g, "e*x + 2*x").unwrap();
        let b = parse_element(&g, "3*x").unwrap();
        let e = echelon(&[a.clone(), b.clone()]);
        assert_eq!(e, echelon(&[b, &a + &a]));
        assert_eq!(
            e.iter().map(ToString::to_string).collect::<Vec<_>>(),
            ["x", "e*x"]
        );
    }
}
