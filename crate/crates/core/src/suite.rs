//! The acceptance checks, runnable from the library, the CLI and the test harness.

use std::sync::Arc;

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::actions::{ad_prime_with, ad_with, biorthogonal_family, construct_t, OddSubset};
use crate::builtin;
use crate::error::Error;
use crate::invariants::{
    anticentre_basis, centralizer_even_basis, centre_basis, even_centre_basis, parity_audit,
};
use crate::pbw::{pbw_basis, symbol, EnvElement, FiltrationDegree, Ring};
use crate::rational::{fmt_q, Q};
use crate::roothc::{compute_t, hc_projection, Weight};
use crate::superalg::{LieSuperalgebra, Parity};
use crate::verma::{
    parse_eta, shapovalov_formula, shapovalov_gram, supercharacter_check_parts, VermaSlice,
};

pub const DEFAULT_SEED: u64 = 0x0067_686f_7374;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

type Outcome = std::result::Result<String, String>;

fn check(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: Error) -> String {
    e.to_string()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A small random rational `p/q` with `|p| <= 9`, `1 <= q <= 7`.
pub fn random_rational(rng: &mut impl Rng) -> Q {
    Q::new(
        rng.gen_range(-9i64..=9).into(),
        rng.gen_range(1i64..=7).into(),
    )
}

pub fn random_nonzero_rational(rng: &mut impl Rng) -> Q {
    loop {
        let c = random_rational(rng);
        if !c.is_zero() {
            return c;
        }
    }
}

/// A random combination of at most `terms` PBW monomials of degree at most `d`,
/// optionally restricted to one parity.
pub fn random_element(
    rng: &mut impl Rng,
    g: &Arc<LieSuperalgebra>,
    d: usize,
    terms: usize,
    parity: Option<Parity>,
) -> EnvElement {
    let odd: Vec<bool> = (0..g.dim()).map(|i| g.is_odd(i)).collect();
    let pool: Vec<_> = pbw_basis(g, d)
        .into_iter()
        .filter(|m| parity.is_none_or(|p| m.is_odd(&odd) == p.is_odd()))
        .collect();
    let k = rng.gen_range(1..=terms);
    EnvElement::from_terms(
        g.clone(),
        pool.choose_multiple(rng, k)
            .map(|m| (m.clone(), random_nonzero_rational(rng))),
    )
    .expect("monomials from the PBW basis")
}

pub fn random_weight(rng: &mut impl Rng, rank: usize) -> Weight {
    (0..rank).map(|_| random_rational(rng)).collect()
}

fn strings(es: &[EnvElement]) -> Vec<String> {
    es.iter().map(ToString::to_string).collect()
}

fn q1_fixture() -> Outcome {
    let g = builtin::q1();
    let z = centre_basis(&g, 4);
    let want_z: Vec<String> = (0..=4)
        .map(|a| EnvElement::named(&g, "e").unwrap().pow(a).to_string())
        .collect();
    check(strings(z.elements()) == want_z, || {
        format!("centre at degree 4 is {:?}", strings(z.elements()))
    })?;
    for d in 1..=5 {
        let a = anticentre_basis(&g, d);
        let want: Vec<String> = (0..d)
            .map(|k| {
                let e = EnvElement::named(&g, "e").unwrap().pow(k as u32);
                e.mul(&EnvElement::named(&g, "x").unwrap())
                    .unwrap()
                    .to_string()
            })
            .collect();
        check(strings(a.elements()) == want, || {
            format!("anticentre at degree {d} is {:?}", strings(a.elements()))
        })?;
    }
    Ok("Z∩F^4 = <1,e,...,e^4>; A∩F^d = <x,...,e^(d-1)*x>, dim d for d=1..5".into())
}

fn w1_fixture() -> Outcome {
    let g = builtin::w1();
    for d in 0..=6 {
        check(anticentre_basis(&g, d).is_empty(), || {
            format!("anticentre nonzero at degree {d}")
        })?;
    }
    for d in 0..=3 {
        let z = centre_basis(&g, d);
        check(strings(z.elements()) == ["1"], || {
            format!("centre at degree {d} is {:?}", strings(z.elements()))
        })?;
    }
    check(construct_t(&g) == Err(Error::TopNotTrivial), || {
        "construct_T did not report TopNotTrivial".into()
    })?;
    Ok("A∩F^d = 0 for d<=6; Z∩F^d = <1> for d<=3; T undefined".into())
}

fn osp_ghost() -> Outcome {
    let g = builtin::osp12();
    let t = construct_t(&g).map_err(err)?.into_value();
    let ring = Ring::new(g.clone());
    for a in 0..g.dim() {
        check(ad_prime_with(&ring, a, &t).is_zero(), || {
            format!("ad'({}) T != 0", g.generator_name(a))
        })?;
    }
    check(t.parity() == Some(Parity::Even), || "T is not even".into())?;
    let t2 = ring.mul(&t, &t).map_err(err)?;
    check(centre_basis(&g, 4).contains(&t2), || {
        "T^2 not central".into()
    })?;
    check(t2.degree() == FiltrationDegree::Finite(2), || {
        format!("deg T^2 = {:?}", t2.degree())
    })?;
    Ok(format!("T = {t}; T^2 = {t2}"))
}

fn osp_hc() -> Outcome {
    let g = builtin::osp12();
    let rd = g.require_root_datum().map_err(err)?;
    let t = construct_t(&g).map_err(err)?.into_value();
    let p = hc_projection(&t).map_err(err)?;
    let tp = compute_t(rd);
    match p.ratio_to(&tp) {
        Some(c) if !c.is_zero() => Ok(format!("P(T) = {p} = {} * t, t = {tp}", fmt_q(&c))),
        _ => Err(format!("P(T) = {p} is not a multiple of t = {tp}")),
    }
}

fn phi_dimensions() -> Outcome {
    let mut out = Vec::new();
    for (g, rmax) in [(builtin::q1(), 4), (builtin::osp12(), 2)] {
        let n = g.odd_dim();
        for r in 0..=rmax {
            let a = anticentre_basis(&g, n + r).dim();
            let z = even_centre_basis(&g, r).dim();
            check(a == z, || {
                format!(
                    "{}: dim A∩F^{} = {a} but dim Z(g0)∩F^{r} = {z}",
                    g.name(),
                    n + r
                )
            })?;
            out.push(a.to_string());
        }
        out.push("|".into());
    }
    Ok(format!("dimensions {}", out.join(" ")))
}

fn biorthogonality() -> Outcome {
    let g = builtin::osp12();
    let fam = biorthogonal_family(&g).map_err(err)?;
    let n = g.odd_dim();
    let subsets = OddSubset::all_by_decreasing_size(n);
    let one = EnvElement::one(&g);
    let zero = EnvElement::zero(&g);
    for j in &subsets {
        for jp in &subsets {
            let want = if j == jp { &one } else { &zero };
            let xjp = jp.element(&g);
            let right = crate::actions::pairing(&xjp, &fam.v[j]).map_err(err)?;
            let left = crate::actions::pairing(&fam.u[j], &xjp).map_err(err)?;
            check(&right == want, || {
                format!("(x_{:?}|v_{:?}) = {right}", jp.names(&g), j.names(&g))
            })?;
            check(&left == want, || {
                format!("(u_{:?}|x_{:?}) = {left}", j.names(&g), jp.names(&g))
            })?;
        }
    }
    Ok(format!(
        "{0}x{0} pairing matrices are the identity",
        subsets.len()
    ))
}

fn ghost_is_centralizer() -> Outcome {
    let g = builtin::osp12();
    for d in 0..=4 {
        let ghost = centre_basis(&g, d).sum(&anticentre_basis(&g, d));
        let c = centralizer_even_basis(&g, d);
        check(ghost.same_span(&c), || {
            format!(
                "degree {d}: Z+A has dim {}, centralizer dim {}",
                ghost.dim(),
                c.dim()
            )
        })?;
    }
    Ok("Z+A = centralizer of U_0 in F^d for d<=4".into())
}

fn shapovalov() -> Outcome {
    let g = builtin::osp12();
    let rd = g.require_root_datum().map_err(err)?;
    let mut notes = Vec::new();
    for k in 1..=3 {
        let eta = parse_eta(rd, &format!("{k}*alpha1")).map_err(err)?;
        let gram = shapovalov_gram(&g, &eta).map_err(err)?;
        check(gram.is_symmetric(), || format!("S_{k}alpha not symmetric"))?;
        check(gram.size() as u64 == rd.partition_count(&eta, &[]), || {
            format!("S_{k}alpha has size {}", gram.size())
        })?;
        let det = gram.determinant();
        let formula = shapovalov_formula(rd, &eta);
        match det.ratio_to(&formula) {
            Some(c) if !c.is_zero() => notes.push(format!("det S_{k}a = {det}")),
            _ => return Err(format!("det S_{k}alpha = {det}, formula {formula}")),
        }
    }
    Ok(notes.join("; "))
}

fn supercharacter(seed: u64) -> Outcome {
    let g = builtin::osp12();
    let rd = g.require_root_datum().map_err(err)?;
    let t = construct_t(&g).map_err(err)?.into_value();
    let p = hc_projection(&t).map_err(err)?;
    let zero = EnvElement::zero(&g);
    let mut rng = rng(seed ^ 9);
    let mut vectors = 0;
    for _ in 0..20 {
        let lambda = random_weight(&mut rng, rd.rank());
        let slice = VermaSlice::new(&g, lambda.clone(), 3).map_err(err)?;
        let rep = supercharacter_check_parts(&slice, &zero, &t).map_err(err)?;
        let value = p.eval(&lambda);
        check(
            rep.even_scalar == value && rep.odd_scalar == -value.clone(),
            || format!("scalars at {lambda:?} disagree with P(T)"),
        )?;
        vectors += rep.vectors_checked;
    }
    Ok(format!(
        "20 weights, {vectors} basis vectors: T acts by ±P(T)(lambda)"
    ))
}

fn properties(seed: u64) -> Outcome {
    let mut rng = rng(seed ^ 10);
    let mut counts = [0usize; 3];
    for g in builtin::all() {
        let name = g.name().to_string();
        let viol = g.validate_jacobi();
        check(viol.is_empty(), || {
            format!("{name}: {} Jacobi violations", viol.len())
        })?;
        let ring = Ring::new(g.clone());
        for _ in 0..100 {
            let u = random_element(&mut rng, &g, 3, 2, None);
            let v = random_element(&mut rng, &g, 3, 2, None);
            let w = random_element(&mut rng, &g, 3, 2, None);
            let l = ring.mul(&ring.mul(&u, &v).map_err(err)?, &w).map_err(err)?;
            let r = ring.mul(&u, &ring.mul(&v, &w).map_err(err)?).map_err(err)?;
            check(l == r, || {
                format!("{name}: ({u})({v})({w}) not associative")
            })?;
        }
        let d = if g.odd_dim() == 1 { 3 } else { 2 };
        let a = anticentre_basis(&g, d);
        parity_audit(&g, &a).map_err(err)?;
        for m in a.elements() {
            for _ in 0..20 {
                let p = Parity::from_odd(rng.gen_bool(0.5));
                let m1 = random_element(&mut rng, &g, 3, 2, Some(p));
                let m1m = ring.mul(&m1, m).map_err(err)?;
                for x in 0..g.dim() {
                    let l1 = ad_prime_with(&ring, x, &m1m);
                    let r1 = ring.mul(&ad_with(&ring, x, &m1), m).map_err(err)?;
                    let l2 = ad_with(&ring, x, &m1m);
                    let r2 = ring.mul(&ad_prime_with(&ring, x, &m1), m).map_err(err)?;
                    check(l1 == r1 && l2 == r2, || {
                        format!(
                            "{name}: theta fails for m = {m}, m1 = {m1}, a = {}",
                            g.generator_name(x)
                        )
                    })?;
                }
                counts[0] += 1;
            }
        }
        let odd = g.odd_indices();
        if odd.is_empty() {
            continue;
        }
        let mut tested = 0;
        let mut attempts = 0;
        while tested < 20 {
            attempts += 1;
            if attempts > 2000 {
                return Err(format!(
                    "{name}: could not sample pairs with gr(xu) = gr x gr u"
                ));
            }
            let xi = *odd.choose(&mut rng).expect("nonempty");
            let p = Parity::from_odd(rng.gen_bool(0.5));
            let u = random_element(&mut rng, &g, 3, 2, Some(p));
            let x = EnvElement::generator(&g, xi);
            let sx = symbol(&x).map_err(err)?;
            let su = symbol(&u).map_err(err)?;
            let prod = sx.mul(&su);
            if prod.is_zero() || symbol(&ring.mul(&x, &u).map_err(err)?).map_err(err)? != prod {
                continue;
            }
            let lhs = symbol(&ad_prime_with(&ring, xi, &u)).map_err(err)?;
            check(lhs == prod.scale(&Q::from_integer(2.into())), || {
                format!(
                    "{name}: gr(ad'x u) != 2 gr x gr u for x = {}, u = {u}",
                    g.generator_name(xi)
                )
            })?;
            tested += 1;
        }
        counts[1] += tested;
        counts[2] += 1;
    }
    Ok(format!(
        "Jacobi ok; 400 associativity triples; {} theta instances; {} grad pairs on {} algebras; parity audit ok",
        counts[0], counts[1], counts[2]
    ))
}

pub const CRITERIA: [&str; 10] = [
    "q1 centre and anticentre",
    "w1 has trivial anticentre",
    "osp(1,2) ghost element T",
    "osp(1,2) Harish-Chandra image of T",
    "phi dimension identity",
    "biorthogonal families",
    "ghost centre equals the centralizer of U_0",
    "Shapovalov determinants",
    "supercharacter action of T",
    "property suites",
];

/// Runs acceptance criterion `n` (1-based).
pub fn criterion(n: usize, seed: u64) -> CheckResult {
    let outcome = match n {
        1 => q1_fixture(),
        2 => w1_fixture(),
        3 => osp_ghost(),
        4 => osp_hc(),
        5 => phi_dimensions(),
        6 => biorthogonality(),
        7 => ghost_is_centralizer(),
        8 => shapovalov(),
        9 => supercharacter(seed),
        10 => properties(seed),
        _ => Err(format!("no criterion {n}")),
    };
    let (passed, detail) = match outcome {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    CheckResult {
        id: n.to_string(),
        name: CRITERIA
            .get(n.wrapping_sub(1))
            .copied()
            .unwrap_or("unknown")
            .into(),
        passed,
        detail,
    }
}

pub fn acceptance(seed: u64, parallel: bool) -> Vec<CheckResult> {
    let ids: Vec<usize> = (1..=CRITERIA.len()).collect();
    if !parallel {
        return ids.into_iter().map(|n| criterion(n, seed)).collect();
    }
    std::thread::scope(|s| {
        let handles: Vec<_> = ids
            .into_iter()
            .map(|n| s.spawn(move || criterion(n, seed)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("check thread panicked"))
            .collect()
    })
}

/// Structural checks on an arbitrary algebra: Jacobi, associativity, anticentre parity,
/// and, when the hypotheses hold, the ghost element and its Harish-Chandra image.
pub fn algebra_checks(g: &Arc<LieSuperalgebra>, seed: u64) -> Vec<CheckResult> {
    let name = g.name().to_string();
    let mut out = Vec::new();
    let mut push = |id: &str, title: &str, o: Outcome| {
        let (passed, detail) = match o {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        out.push(CheckResult {
            id: format!("{name}.{id}"),
            name: title.into(),
            passed,
            detail,
        });
    };
    let viol = g.validate_jacobi();
    push(
        "jacobi",
        "super-Jacobi identity",
        check(viol.is_empty(), || format!("{} violations", viol.len())).map(|_| "ok".into()),
    );
    let ring = Ring::new(g.clone());
    let mut rng = rng(seed);
    let assoc = (|| -> Outcome {
        for _ in 0..100 {
            let u = random_element(&mut rng, g, 3, 2, None);
            let v = random_element(&mut rng, g, 3, 2, None);
            let w = random_element(&mut rng, g, 3, 2, None);
            let l = ring.mul(&ring.mul(&u, &v).map_err(err)?, &w).map_err(err)?;
            let r = ring.mul(&u, &ring.mul(&v, &w).map_err(err)?).map_err(err)?;
            check(l == r, || format!("({u})({v})({w})"))?;
        }
        Ok("100 random triples".into())
    })();
    push("assoc", "associativity", assoc);
    let d = g.odd_dim().max(1) + 1;
    let a = anticentre_basis(g, d);
    push(
        "parity",
        "anticentre parity",
        parity_audit(g, &a)
            .map(|p| format!("degree {d}: dim {}, {p:?}", a.dim()))
            .map_err(err),
    );
    if g.lambda_top_trivial() {
        let ghost = (|| -> Outcome {
            let t = construct_t(g).map_err(err)?;
            t.verify()?;
            Ok(format!("T = {}", t.value()))
        })();
        push("ghost", "ghost element T", ghost);
        if let Some(rd) = g.root_datum() {
            let hc = (|| -> Outcome {
                let t = construct_t(g).map_err(err)?.into_value();
                let p = hc_projection(&t).map_err(err)?;
                let tp = compute_t(rd);
                match p.ratio_to(&tp) {
                    Some(c) if !c.is_zero() => Ok(format!("P(T) = {} * t", fmt_q(&c))),
                    _ => Err(format!("P(T) = {p}, t = {tp}")),
                }
            })();
            push("hc", "P(T) proportional to t", hc);
        }
    }
    out
}

/// True iff every result passed.
pub fn all_passed(results: &[CheckResult]) -> bool {
    results.iter().all(|r| r.passed)
}
