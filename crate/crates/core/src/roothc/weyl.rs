use num_traits::{One, Zero};

use super::{compute_t, HPolynomial, RootDatum, Weight};
use crate::rational::Q;

pub type Matrix = Vec<Vec<Q>>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Symmetry {
    Invariant,
    AntiInvariant,
    Neither,
}

/// Behaviour of a polynomial under the translated action `w.lambda = w(lambda+rho)-rho`.
#[derive(Debug, Clone, PartialEq)]
pub struct WeylReport {
    /// One entry per reflection in a positive even root.
    pub reflections: Vec<(Weight, Symmetry)>,
    pub group_order: usize,
    /// Invariant under every element of the (enumerated) Weyl group.
    pub group_invariant: bool,
    pub divisible_by_t: bool,
    /// `p / t` is invariant under the whole group (false when `t` does not divide `p`).
    pub quotient_invariant: bool,
}

/// Reflection `lambda -> lambda - 2 (lambda, a)/(a, a) a` as a matrix on coordinates.
pub fn reflection_matrix(rd: &RootDatum, a: &[Q]) -> Matrix {
    let r = rd.rank();
    let aa = rd.form(a, a);
    assert!(!aa.is_zero(), "cannot reflect in an isotropic root");
    let ba: Vec<Q> = (0..r)
        .map(|j| (0..r).map(|k| &rd.form_matrix()[j][k] * &a[k]).sum())
        .collect();
    let two = Q::from_integer(2.into());
    (0..r)
        .map(|i| {
            (0..r)
                .map(|j| {
                    let delta = if i == j { Q::one() } else { Q::zero() };
                    delta - &two * &a[i] * &ba[j] / &aa
                })
                .collect()
        })
        .collect()
}

fn mat_vec(m: &Matrix, v: &[Q]) -> Vec<Q> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| &a[i][k] * &b[k][j]).sum())
                .collect()
        })
        .collect()
}

/// The translated action of `w` as an affine map `lambda -> M lambda + shift`.
pub fn dot_action(rd: &RootDatum, w: &Matrix) -> (Matrix, Vec<Q>) {
    let rho = rd.rho();
    let w_rho = mat_vec(w, &rho);
    let shift = w_rho.iter().zip(&rho).map(|(a, b)| a - b).collect();
    (w.clone(), shift)
}

/// All elements of the Weyl group of the even roots, by closure under the reflections.
pub fn weyl_group(rd: &RootDatum) -> Vec<Matrix> {
    const LIMIT: usize = 4096;
    let r = rd.rank();
    let identity: Matrix = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| if i == j { Q::one() } else { Q::zero() })
                .collect()
        })
        .collect();
    let gens: Vec<Matrix> = rd
        .even_positive()
        .iter()
        .filter(|a| !rd.form(a, a).is_zero())
        .map(|a| reflection_matrix(rd, a))
        .collect();
    let mut group = vec![identity];
    let mut frontier = group.clone();
    while !frontier.is_empty() && group.len() < LIMIT {
        let mut next = Vec::new();
        for w in &frontier {
            for s in &gens {
                let ws = mat_mul(s, w);
                if !group.contains(&ws) {
                    group.push(ws.clone());
                    next.push(ws);
                }
            }
        }
        frontier = next;
    }
    group
}

fn translate(p: &HPolynomial, rd: &RootDatum, w: &Matrix) -> HPolynomial {
    let (m, shift) = dot_action(rd, w);
    p.compose_affine(&m, &shift)
}

fn classify(p: &HPolynomial, image: &HPolynomial) -> Symmetry {
    if image == p {
        Symmetry::Invariant
    } else if *image == -p {
        Symmetry::AntiInvariant
    } else {
        Symmetry::Neither
    }
}

/// Checks invariance of `p` under the translated Weyl action, and whether `p / t` is
/// translated-invariant (the expected shape of the image of an anticentre element).
pub fn weyl_dot_orbit_check(p: &HPolynomial, rd: &RootDatum) -> WeylReport {
    let reflections = rd
        .even_positive()
        .into_iter()
        .filter(|a| !rd.form(a, a).is_zero())
        .map(|a| {
            let s = reflection_matrix(rd, &a);
            let sym = classify(p, &translate(p, rd, &s));
            (a, sym)
        })
        .collect();
    let group = weyl_group(rd);
    let group_invariant = group.iter().all(|w| translate(p, rd, w) == *p);
    let t = compute_t(rd);
    let quotient = p.div_exact(&t);
    let quotient_invariant = quotient
        .as_ref()
        .is_some_and(|q| group.iter().all(|w| translate(q, rd, w) == *q));
    WeylReport {
        reflections,
        group_order: group.len(),
        group_invariant,
        divisible_by_t: quotient.is_some(),
        quotient_invariant,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin;
    use crate::rational::q;

    #[test]
    fn t_is_anti_invariant_for_osp12() {
        let rd = builtin::osp12().root_datum().unwrap().clone();
        let t = compute_t(&rd);
        let rep = weyl_dot_orbit_check(&t, &rd);
        assert_eq!(rep.reflections, vec![(vec![q(2)], Symmetry::AntiInvariant)]);
        assert_eq!(rep.group_order, 2);
        assert!(rep.divisible_by_t && rep.quotient_invariant);
        assert!(!rep.group_invariant);
    }

    #[test]
    fn constants_are_invariant() {
        for g in [builtin::sl2(), builtin::osp12()] {
            let rd = g.root_datum().unwrap();
            let rep = weyl_dot_orbit_check(&HPolynomial::constant(1, q(7)), rd);
            assert!(rep.group_invariant);
            assert!(rep
                .reflections
                .iter()
                .all(|(_, s)| *s == Symmetry::Invariant));
        }
    }

    #[test]
    fn reflections_preserve_form() {
        let rd = builtin::osp12().root_datum().unwrap().clone();
        let s = reflection_matrix(&rd, &[q(2)]);
        let v = vec![q(3)];
        let w = mat_vec(&s, &v);
        assert_eq!(rd.form(&w, &w), rd.form(&v, &v));
        assert_eq!(w, vec![q(-3)]);
    }
}
