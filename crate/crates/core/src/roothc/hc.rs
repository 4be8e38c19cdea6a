use num_traits::Zero;

use super::{HPolynomial, RootDatum, Weight};
use crate::error::{Error, Result};
use crate::pbw::EnvElement;

/// Weight of a homogeneous-weight element under the adjoint Cartan action, or `None`
/// if its terms carry different weights.
pub fn weight_of(u: &EnvElement, rd: &RootDatum) -> Option<Weight> {
    let mut ws = u.terms().keys().map(|m| rd.monomial_weight(m));
    let first = ws.next().unwrap_or_else(|| rd.zero_weight());
    ws.all(|w| w == first).then_some(first)
}

/// Harish-Chandra projection of a weight-zero element onto `U(h) = S(h)`.
///
/// With generators ordered negative / Cartan / positive, the projection along
/// `U(g)n+ + n-U(g)` keeps exactly the normal-form terms built from Cartan generators.
pub fn hc_projection(u: &EnvElement) -> Result<HPolynomial> {
    let alg = u.algebra();
    let rd = alg.require_root_datum()?;
    let r = rd.rank();
    let mut out = HPolynomial::zero(r);
    for (m, c) in u.terms() {
        if rd.monomial_weight(m).iter().any(|x| !x.is_zero()) {
            return Err(Error::NotZeroWeight);
        }
        let only_cartan =
            (0..alg.dim()).all(|g| m.exponent(g) == 0 || rd.cartan_position(g).is_some());
        if !only_cartan {
            continue;
        }
        let exps: Vec<u32> = rd
            .cartan()
            .iter()
            .map(|&h| u32::from(m.exponent(h)))
            .collect();
        out = &out + &HPolynomial::from_terms(r, [(exps, c.clone())]);
    }
    Ok(out)
}

/// `t = prod over positive odd roots a of (h_a + (rho, a))`.
pub fn compute_t(rd: &RootDatum) -> HPolynomial {
    let rho = rd.rho();
    rd.odd_positive()
        .iter()
        .fold(HPolynomial::one(rd.rank()), |acc, a| {
            let factor = &rd.h_of(a) + &HPolynomial::constant(rd.rank(), rd.form(&rho, a));
            &acc * &factor
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin;
    use crate::pbw::parse_element;
    use crate::rational::{q, qf};

    #[test]
    fn sl2_projection() {
        let g = builtin::sl2();
        let ef = parse_element(&g, "E*F").unwrap();
        assert_eq!(hc_projection(&ef).unwrap(), HPolynomial::var(1, 0));
        assert_eq!(
            hc_projection(&parse_element(&g, "1").unwrap()).unwrap(),
            HPolynomial::one(1)
        );
        let e = parse_element(&g, "E").unwrap();
        assert_eq!(hc_projection(&e), Err(Error::NotZeroWeight));
        assert_eq!(
            hc_projection(&parse_element(&builtin::q1(), "x").unwrap()),
            Err(Error::NoRootDatum("q1".into()))
        );
    }

    #[test]
    fn t_polynomials() {
        assert_eq!(
            compute_t(builtin::sl2().root_datum().unwrap()),
            HPolynomial::one(1)
        );
        // osp(1,2): (lambda, alpha) + (rho, alpha) = 2 l + 1
        let t = compute_t(builtin::osp12().root_datum().unwrap());
        assert_eq!(t, HPolynomial::linear(&[q(2)], q(1)));
        assert_eq!(t.eval(&[qf(-1, 2)]), q(0));
    }
}
