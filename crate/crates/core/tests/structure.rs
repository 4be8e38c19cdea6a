//! Structural properties of the centre, anticentre and ghost element on the bundled algebras.

use ghostcentre::actions::{ad_prime_element, ad_prime_with, ad_with, construct_t, OddSubset};
use ghostcentre::builtin;
use ghostcentre::invariants::{anticentre_basis, centre_basis, rank_of, SubspaceBasis};
use ghostcentre::pbw::{monomials_in, pbw_basis, symbol, Ring};
use ghostcentre::roothc::{hc_projection, weyl_dot_orbit_check, Symmetry};
use ghostcentre::suite::{random_element, random_weight, rng};
use ghostcentre::verma::common_annihilator;
use ghostcentre::{EnvElement, Parity};
use rand::Rng;

#[test]
fn product_laws() {
    for (g, d) in [(builtin::q1(), 2), (builtin::osp12(), 2)] {
        let ring = Ring::new(g.clone());
        let z = centre_basis(&g, d);
        let a = anticentre_basis(&g, d);
        let z2 = centre_basis(&g, 2 * d);
        let a2 = anticentre_basis(&g, 2 * d);
        for x in a.elements() {
            for y in a.elements() {
                assert!(
                    z2.contains(&ring.mul(x, y).unwrap()),
                    "{}: ({x})({y})",
                    g.name()
                );
            }
            for c in z.elements() {
                assert!(
                    a2.contains(&ring.mul(c, x).unwrap()),
                    "{}: ({c})({x})",
                    g.name()
                );
            }
        }
    }
}

#[test]
fn centre_and_anticentre_meet_trivially_for_osp12() {
    let g = builtin::osp12();
    for d in 0..=4 {
        let z = centre_basis(&g, d);
        let a = anticentre_basis(&g, d);
        assert_eq!(z.sum(&a).dim(), z.dim() + a.dim(), "degree {d}");
    }
}

#[test]
fn ghost_symbol_kills_anticentre_symbols() {
    let g = builtin::osp12();
    let t = construct_t(&g).unwrap().into_value();
    let st = symbol(&t).unwrap();
    for z in anticentre_basis(&g, 4).elements() {
        assert!(st.mul(&symbol(z).unwrap()).is_zero(), "{z}");
    }
}

#[test]
fn ghost_is_not_a_zero_divisor() {
    let g = builtin::osp12();
    let ring = Ring::new(g.clone());
    let t = construct_t(&g).unwrap().into_value();
    let basis = pbw_basis(&g, 3);
    let images: Vec<EnvElement> = basis
        .iter()
        .map(|m| ring.mul(&t, &EnvElement::monomial(&g, m.clone())).unwrap())
        .collect();
    assert_eq!(rank_of(&images), basis.len());
}

#[test]
fn twisted_action_through_ad() {
    let mut r = rng(3);
    for g in [builtin::q1(), builtin::w1(), builtin::osp12()] {
        let ring = Ring::new(g.clone());
        for _ in 0..20 {
            let p = Parity::from_odd(r.gen_bool(0.5));
            let u = random_element(&mut r, &g, 3, 3, Some(p));
            for x in g.odd_indices() {
                let xu = ring.mul(&EnvElement::generator(&g, x), &u).unwrap();
                let rhs = &xu.scale(&ghostcentre::rational::q(2)) - &ad_with(&ring, x, &u);
                assert_eq!(ad_prime_with(&ring, x, &u), rhs);
            }
        }
    }
}

#[test]
fn twisted_images_of_even_monomials_are_independent() {
    for (g, r) in [(builtin::q1(), 3), (builtin::osp12(), 2)] {
        let ring = Ring::new(g.clone());
        let n = g.odd_dim();
        let even = monomials_in(&g, &g.even_indices(), r);
        let mut images = Vec::new();
        for j in OddSubset::all_by_decreasing_size(n) {
            let xj = j.element(&g);
            for m in &even {
                images.push(ad_prime_element(
                    &ring,
                    &xj,
                    &EnvElement::monomial(&g, m.clone()),
                ));
            }
        }
        assert_eq!(rank_of(&images), images.len(), "{}", g.name());
    }
}

#[test]
fn hc_images_of_anticentre() {
    let g = builtin::osp12();
    let rd = g.root_datum().unwrap();
    let a = anticentre_basis(&g, 4);
    let mut images = Vec::new();
    for x in a.elements() {
        let p = hc_projection(x).unwrap();
        let rep = weyl_dot_orbit_check(&p, rd);
        assert!(rep.divisible_by_t && rep.quotient_invariant, "{x}");
        assert!(rep
            .reflections
            .iter()
            .all(|(_, s)| *s == Symmetry::AntiInvariant));
        images.push(p);
    }
    // injectivity: the images are independent, checked by evaluation at generic points
    let mut r = rng(7);
    let pts: Vec<_> = (0..6).map(|_| random_weight(&mut r, 1)).collect();
    let matrix: Vec<Vec<_>> = images
        .iter()
        .map(|p| pts.iter().map(|x| p.eval(x)).collect())
        .collect();
    let sparse: Vec<_> = matrix
        .iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
                .map(|(i, c)| (i, c.clone()))
                .collect()
        })
        .collect();
    assert_eq!(ghostcentre::linalg::rank(&sparse), images.len());
}

#[test]
fn sl2_casimir_is_weyl_invariant() {
    let g = builtin::sl2();
    let c = ghostcentre::pbw::parse_element(&g, "E*F + F*E + 1/2*H^2").unwrap();
    let rep = weyl_dot_orbit_check(&hc_projection(&c).unwrap(), g.root_datum().unwrap());
    assert!(rep.group_invariant);
}

#[test]
fn annihilators_of_verma_modules_vanish() {
    for g in [builtin::sl2(), builtin::osp12()] {
        let mut r = rng(11);
        let lambdas: Vec<_> = (0..25).map(|_| random_weight(&mut r, 1)).collect();
        let ann = common_annihilator(&g, 3, &lambdas, 3).unwrap();
        assert!(
            ann.is_empty(),
            "{}: {} annihilating elements",
            g.name(),
            ann.len()
        );
    }
}

#[test]
fn anticentre_basis_is_reduced() {
    let g = builtin::q1();
    let a = anticentre_basis(&g, 4);
    let again = SubspaceBasis::new(4, a.elements().iter().rev().cloned().collect());
    assert_eq!(a, again);
}
