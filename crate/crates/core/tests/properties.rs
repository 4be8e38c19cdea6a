use proptest::prelude::*;

use ghostcentre::builtin;
use ghostcentre::pbw::{parse_element, symbol, Ring};
use ghostcentre::roothc::hc_projection;
use ghostcentre::suite::{random_element, random_weight, rng};
use ghostcentre::superalg::load_algebra;
use ghostcentre::EnvElement;

fn algebra(i: usize) -> std::sync::Arc<ghostcentre::LieSuperalgebra> {
    builtin::all()[i % 4].clone()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn associativity(seed in any::<u64>(), i in 0usize..4) {
        let g = algebra(i);
        let mut r = rng(seed);
        let ring = Ring::new(g.clone());
        let (u, v, w) = (
            random_element(&mut r, &g, 3, 3, None),
            random_element(&mut r, &g, 3, 3, None),
            random_element(&mut r, &g, 3, 3, None),
        );
        let l = ring.mul(&ring.mul(&u, &v).unwrap(), &w).unwrap();
        let rr = ring.mul(&u, &ring.mul(&v, &w).unwrap()).unwrap();
        prop_assert_eq!(l, rr);
    }

    #[test]
    fn printing_round_trips(seed in any::<u64>(), i in 0usize..4) {
        let g = algebra(i);
        let u = random_element(&mut rng(seed), &g, 4, 4, None);
        prop_assert_eq!(parse_element(&g, &u.to_string()).unwrap(), u);
    }

    #[test]
    fn symbol_is_multiplicative(seed in any::<u64>(), i in 0usize..4) {
        let g = algebra(i);
        let mut r = rng(seed);
        let u = random_element(&mut r, &g, 2, 2, None);
        let v = random_element(&mut r, &g, 2, 2, None);
        let top = symbol(&u).unwrap().mul(&symbol(&v).unwrap());
        if !top.is_zero() {
            prop_assert_eq!(symbol(&u.mul(&v).unwrap()).unwrap(), top);
        }
    }

    #[test]
    fn hc_is_multiplicative_on_weight_zero(seed in any::<u64>(), osp in any::<bool>()) {
        let g = if osp { builtin::osp12() } else { builtin::sl2() };
        let rd = g.root_datum().unwrap();
        let mut r = rng(seed);
        let zero_weight = |u: EnvElement| {
            let terms: Vec<_> = u
                .terms()
                .iter()
                .filter(|(m, _)| rd.monomial_weight(m).iter().all(num_traits::Zero::is_zero))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect();
            EnvElement::from_terms(g.clone(), terms).unwrap()
        };
        let u = zero_weight(random_element(&mut r, &g, 3, 6, None));
        let v = zero_weight(random_element(&mut r, &g, 3, 6, None));
        let lhs = hc_projection(&u.mul(&v).unwrap()).unwrap();
        let rhs = &hc_projection(&u).unwrap() * &hc_projection(&v).unwrap();
        prop_assert_eq!(&lhs, &rhs);
        let lambda = random_weight(&mut r, rd.rank());
        prop_assert_eq!(lhs.eval(&lambda), rhs.eval(&lambda));
    }
}

#[test]
fn serialization_round_trips() {
    for g in builtin::all() {
        let back = load_algebra(&g.to_json()).unwrap();
        assert_eq!(&back, g.as_ref());
        assert_eq!(back.to_json(), g.to_json());
    }
}
