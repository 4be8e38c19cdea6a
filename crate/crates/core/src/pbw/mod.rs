//! Arithmetic in the universal enveloping algebra `U(g)` via PBW normal forms.

mod basis;
mod element;
mod monomial;
mod parse;
mod ring;
mod symbol;

pub use basis::{monomials_in, pbw_basis};
pub use element::{filtration_degree, multiply, EnvElement, FiltrationDegree};
pub use monomial::Monomial;
pub use parse::{parse_element, parse_with};
pub use ring::Ring;
pub use symbol::{symbol, SymElement};

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::builtin;
    use crate::rational::{q, qf};

    fn p(g: &Arc<crate::LieSuperalgebra>, s: &str) -> EnvElement {
        parse_element(g, s).unwrap()
    }

    #[test]
    fn odd_square_is_half_bracket() {
        let g = builtin::q1();
        let x = p(&g, "x");
        assert_eq!(multiply(&x, &x).unwrap(), p(&g, "1/2*e"));
        assert_eq!(p(&g, "x*x").to_string(), "1/2*e");
    }

    #[test]
    fn w1_swap() {
        let g = builtin::w1();
        let prod = multiply(&p(&g, "x"), &p(&g, "g")).unwrap();
        assert_eq!(prod.to_string(), "g*x - x");
    }

    #[test]
    fn unit_law_and_mismatch() {
        let g = builtin::osp12();
        let u = p(&g, "3*F*y*H - 2/3*x*E + 5");
        let one = EnvElement::one(&g);
        assert_eq!(multiply(&one, &u).unwrap(), u);
        assert_eq!(multiply(&u, &one).unwrap(), u);
        let other = builtin::q1();
        assert_eq!(
            multiply(&u, &EnvElement::one(&other)),
            Err(crate::Error::AlgebraMismatch)
        );
    }

    #[test]
    fn degrees() {
        let g = builtin::q1();
        assert_eq!(p(&g, "e*x").degree(), FiltrationDegree::Finite(2));
        assert_eq!(p(&g, "1").degree(), FiltrationDegree::Finite(0));
        assert_eq!(p(&g, "x*x").degree(), FiltrationDegree::Finite(1));
        assert_eq!(EnvElement::zero(&g).degree(), FiltrationDegree::NegInfinity);
        assert!(FiltrationDegree::NegInfinity < FiltrationDegree::Finite(0));
    }

    #[test]
    fn symbols() {
        let g = builtin::q1();
        let s = symbol(&p(&g, "e*x + x")).unwrap();
        assert_eq!(s, SymElement::from(&p(&g, "e*x")));
        let s = symbol(&p(&g, "x*x")).unwrap();
        assert_eq!(s, SymElement::from(&p(&g, "1/2*e")));
        assert_eq!(symbol(&p(&g, "5")).unwrap(), SymElement::from(&p(&g, "5")));
        assert_eq!(
            symbol(&EnvElement::zero(&g)),
            Err(crate::Error::ZeroElement)
        );
    }

    #[test]
    fn exterior_signs() {
        let g = builtin::osp12();
        let x = SymElement::from(&p(&g, "x"));
        let y = SymElement::from(&p(&g, "y"));
        assert_eq!(x.mul(&y), y.mul(&x).scale(&q(-1)));
        assert!(x.mul(&x).is_zero());
    }

    #[test]
    fn basis_sizes() {
        let q1 = builtin::q1();
        let b = pbw_basis(&q1, 1);
        let names: Vec<String> = b
            .iter()
            .map(|m| EnvElement::monomial_string(&q1, m))
            .collect();
        assert_eq!(names, ["1", "e", "x"]);
        let names: Vec<String> = pbw_basis(&q1, 2)
            .iter()
            .map(|m| EnvElement::monomial_string(&q1, m))
            .collect();
        assert_eq!(names, ["1", "e", "x", "e^2", "e*x"]);
        assert_eq!(pbw_basis(&builtin::w1(), 2).len(), 5);
        // 3 even and 2 odd generators, degree <= 4
        assert_eq!(pbw_basis(&builtin::osp12(), 4).len(), 85);
    }

    #[test]
    fn supercommutator_matches_bracket() {
        for g in builtin::all() {
            let ring = Ring::new(g.clone());
            for a in 0..g.dim() {
                for b in 0..g.dim() {
                    let ea = EnvElement::generator(&g, a);
                    let eb = EnvElement::generator(&g, b);
                    let s = if g.is_odd(a) && g.is_odd(b) {
                        q(-1)
                    } else {
                        q(1)
                    };
                    let lhs = &ring.mul(&ea, &eb).unwrap() - &ring.mul(&eb, &ea).unwrap().scale(&s);
                    let rhs = EnvElement::from_terms(
                        g.clone(),
                        g.bracket(a, b)
                            .iter()
                            .map(|(k, c)| (Monomial::generator(g.dim(), *k), c.clone())),
                    )
                    .unwrap();
                    assert_eq!(lhs, rhs, "{} [{a},{b}]", g.name());
                }
            }
        }
    }

    #[test]
    fn alternate_order_round_trip() {
        let g = builtin::osp12();
        let u = p(&g, "x*F*y + H*E - 1/2*y");
        let ring = Ring::odd_rightmost(g.clone());
        let re = ring.reexpress(&u).unwrap();
        assert_eq!(ring.to_canonical(&re), u);
        let v = p(&g, "E*y - F");
        assert_eq!(ring.mul(&u, &v).unwrap(), multiply(&u, &v).unwrap());
    }

    #[test]
    fn parser_forms() {
        let g = builtin::q1();
        assert_eq!(p(&g, "3/2*e^2*x - x").to_string(), "3/2*e^2*x - x");
        assert_eq!(p(&g, "2x"), p(&g, "2*x"));
        assert_eq!(p(&g, "(e + 1)*(e - 1)"), p(&g, "e^2 - 1"));
        assert_eq!(p(&g, "-x"), p(&g, "0 - x"));
        assert_eq!(p(&g, "1/2"), EnvElement::scalar(&g, qf(1, 2)));
        assert!(parse_element(&g, "z").is_err());
        assert!(parse_element(&g, "x +").is_err());
        assert!(parse_element(&g, "1/0").is_err());
        assert!(parse_element(&g, "(x").is_err());
    }
}
