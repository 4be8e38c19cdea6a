use num_traits::{One, Zero};

use super::HPolynomial;
use crate::error::{Error, Result};
use crate::linalg;
use crate::pbw::Monomial;
use crate::rational::{fmt_q, qf, Q};
use crate::superalg::{LieSuperalgebra, RatDef, RootDatumDef, RootDef};

/// A weight in `h*`, in the coordinates `mu(h_i)` of the Cartan generators.
pub type Weight = Vec<Q>;

#[derive(Debug, Clone, PartialEq)]
pub struct Root {
    pub generator: usize,
    pub coords: Weight,
    pub positive: bool,
    pub odd: bool,
}

/// Cartan data attached to an algebra: Cartan generators, the invariant form on `h*`,
/// and the root carried by every other generator.
#[derive(Debug, Clone, PartialEq)]
pub struct RootDatum {
    cartan: Vec<usize>,
    form: Vec<Vec<Q>>,
    roots: Vec<Root>,
}

fn add(a: &[Q], b: &[Q]) -> Weight {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn scaled(a: &[Q], c: &Q) -> Weight {
    a.iter().map(|x| x * c).collect()
}

fn dedup(mut v: Vec<Weight>) -> Vec<Weight> {
    v.sort();
    v.dedup();
    v
}

impl RootDatum {
    /// Validates a root datum against the algebra's structure constants and PBW order.
    pub fn build(alg: &LieSuperalgebra, def: &RootDatumDef) -> Result<Self> {
        let bad = |s: String| Error::RootDatum(s);
        let idx = |name: &str| {
            alg.index_of(name)
                .map(|i| i.0)
                .ok_or_else(|| bad(format!("unknown generator `{name}`")))
        };
        let cartan = def
            .cartan
            .iter()
            .map(|n| idx(n))
            .collect::<Result<Vec<_>>>()?;
        let r = cartan.len();
        if let Some(&h) = cartan.iter().find(|&&h| alg.is_odd(h)) {
            return Err(bad(format!(
                "Cartan generator `{}` is odd",
                alg.generator_name(h)
            )));
        }
        let form = def
            .form
            .iter()
            .map(|row| row.iter().map(RatDef::value).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        if form.len() != r || form.iter().any(|row| row.len() != r) {
            return Err(bad(format!("form must be {r} x {r}")));
        }
        for i in 0..r {
            for j in 0..r {
                if form[i][j] != form[j][i] {
                    return Err(bad("form is not symmetric".into()));
                }
            }
        }
        let mut roots = Vec::new();
        let mut assigned = vec![false; alg.dim()];
        for &h in &cartan {
            assigned[h] = true;
        }
        for rd in &def.roots {
            let g = idx(&rd.gen)?;
            if assigned[g] {
                return Err(bad(format!("generator `{}` assigned twice", rd.gen)));
            }
            assigned[g] = true;
            let coords = rd
                .coords
                .iter()
                .map(RatDef::value)
                .collect::<Result<Vec<_>>>()?;
            if coords.len() != r {
                return Err(bad(format!("root of `{}` needs {r} coordinates", rd.gen)));
            }
            roots.push(Root {
                generator: g,
                coords,
                positive: rd.positive,
                odd: alg.is_odd(g),
            });
        }
        if let Some(g) = assigned.iter().position(|a| !a) {
            return Err(bad(format!(
                "generator `{}` has no root",
                alg.generator_name(g)
            )));
        }
        let datum = RootDatum {
            cartan,
            form,
            roots,
        };
        datum.check_weights(alg)?;
        datum.check_order(alg)?;
        Ok(datum)
    }

    fn check_weights(&self, alg: &LieSuperalgebra) -> Result<()> {
        for (i, &h) in self.cartan.iter().enumerate() {
            for g in 0..alg.dim() {
                let w = self.generator_weight(g);
                let expect: Vec<(usize, Q)> = if w[i].is_zero() {
                    vec![]
                } else {
                    vec![(g, w[i].clone())]
                };
                if alg.bracket(h, g) != &expect {
                    return Err(Error::RootDatum(format!(
                        "ad({}) does not act on `{}` by its assigned weight",
                        alg.generator_name(h),
                        alg.generator_name(g)
                    )));
                }
            }
        }
        Ok(())
    }

    /// Negative-root generators, then Cartan generators, then positive-root generators.
    fn check_order(&self, alg: &LieSuperalgebra) -> Result<()> {
        let class = |g: usize| -> u8 {
            if self.cartan.contains(&g) {
                1
            } else if self.root_of(g).is_some_and(|r| r.positive) {
                2
            } else {
                0
            }
        };
        let classes: Vec<u8> = (0..alg.dim()).map(class).collect();
        if classes.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::RootDatum(
                "generator order must list negative roots, then the Cartan, then positive roots"
                    .into(),
            ));
        }
        Ok(())
    }

    pub fn to_def(&self, alg: &LieSuperalgebra) -> RootDatumDef {
        let rat = |c: &Q| RatDef::Str(fmt_q(c));
        RootDatumDef {
            cartan: self
                .cartan
                .iter()
                .map(|&h| alg.generator_name(h).to_string())
                .collect(),
            form: self
                .form
                .iter()
                .map(|r| r.iter().map(rat).collect())
                .collect(),
            roots: self
                .roots
                .iter()
                .map(|r| RootDef {
                    gen: alg.generator_name(r.generator).to_string(),
                    coords: r.coords.iter().map(rat).collect(),
                    positive: r.positive,
                })
                .collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan(&self) -> &[usize] {
        &self.cartan
    }

    pub fn cartan_position(&self, g: usize) -> Option<usize> {
        self.cartan.iter().position(|&h| h == g)
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root_of(&self, g: usize) -> Option<&Root> {
        self.roots.iter().find(|r| r.generator == g)
    }

    pub fn is_positive(&self, g: usize) -> bool {
        self.root_of(g).is_some_and(|r| r.positive)
    }

    pub fn is_negative(&self, g: usize) -> bool {
        self.root_of(g).is_some_and(|r| !r.positive)
    }

    pub fn zero_weight(&self) -> Weight {
        vec![Q::zero(); self.rank()]
    }

    /// Weight of a generator (zero for Cartan generators).
    pub fn generator_weight(&self, g: usize) -> Weight {
        self.root_of(g)
            .map(|r| r.coords.clone())
            .unwrap_or_else(|| self.zero_weight())
    }

    pub fn monomial_weight(&self, m: &Monomial) -> Weight {
        let mut w = self.zero_weight();
        for g in 0..m.len() {
            let e = m.exponent(g);
            if e > 0 {
                w = add(
                    &w,
                    &scaled(&self.generator_weight(g), &Q::from_integer(e.into())),
                );
            }
        }
        w
    }

    /// The invariant form `(a, b)` on `h*`.
    pub fn form(&self, a: &[Q], b: &[Q]) -> Q {
        let mut s = Q::zero();
        for i in 0..self.rank() {
            for j in 0..self.rank() {
                s += &a[i] * &self.form[i][j] * &b[j];
            }
        }
        s
    }

    pub fn form_matrix(&self) -> &[Vec<Q>] {
        &self.form
    }

    fn root_set(&self, odd: bool, positive: bool) -> Vec<Weight> {
        dedup(
            self.roots
                .iter()
                .filter(|r| r.odd == odd && r.positive == positive)
                .map(|r| r.coords.clone())
                .collect(),
        )
    }

    pub fn even_positive(&self) -> Vec<Weight> {
        self.root_set(false, true)
    }

    pub fn odd_positive(&self) -> Vec<Weight> {
        self.root_set(true, true)
    }

    fn is_odd_root(&self, w: &[Q]) -> bool {
        self.roots.iter().any(|r| r.odd && r.coords == w)
    }

    fn is_even_root(&self, w: &[Q]) -> bool {
        self.roots.iter().any(|r| !r.odd && r.coords == w)
    }

    /// Positive even roots `a` with `a/2` not an odd root.
    pub fn even_positive_bar(&self) -> Vec<Weight> {
        self.even_positive()
            .into_iter()
            .filter(|a| !self.is_odd_root(&scaled(a, &qf(1, 2))))
            .collect()
    }

    /// Positive odd roots `b` with `2b` not an even root (the isotropic ones).
    pub fn odd_positive_bar(&self) -> Vec<Weight> {
        self.odd_positive()
            .into_iter()
            .filter(|b| !self.is_even_root(&scaled(b, &Q::from_integer(2.into()))))
            .collect()
    }

    /// Positive odd roots whose double is an even root.
    pub fn odd_positive_nonisotropic(&self) -> Vec<Weight> {
        let bar = self.odd_positive_bar();
        self.odd_positive()
            .into_iter()
            .filter(|b| !bar.contains(b))
            .collect()
    }

    pub fn rho0(&self) -> Weight {
        let s = self
            .even_positive()
            .iter()
            .fold(self.zero_weight(), |acc, a| add(&acc, a));
        scaled(&s, &qf(1, 2))
    }

    pub fn rho1(&self) -> Weight {
        let s = self
            .odd_positive()
            .iter()
            .fold(self.zero_weight(), |acc, a| add(&acc, a));
        scaled(&s, &qf(1, 2))
    }

    pub fn rho(&self) -> Weight {
        let r1 = self.rho1();
        add(&self.rho0(), &scaled(&r1, &-Q::one()))
    }

    /// `h_beta` as the linear function `lambda -> (lambda, beta)`.
    pub fn h_of(&self, beta: &[Q]) -> HPolynomial {
        let coeffs: Vec<Q> = (0..self.rank())
            .map(|i| (0..self.rank()).map(|j| &self.form[i][j] * &beta[j]).sum())
            .collect();
        HPolynomial::linear(&coeffs, Q::zero())
    }

    /// Positive roots that are not sums of two positive roots.
    pub fn simple_roots(&self) -> Vec<Weight> {
        let pos: Vec<Weight> = dedup(
            self.roots
                .iter()
                .filter(|r| r.positive)
                .map(|r| r.coords.clone())
                .collect(),
        );
        pos.iter()
            .filter(|a| !pos.iter().any(|b| pos.iter().any(|c| &add(b, c) == *a)))
            .cloned()
            .collect()
    }

    /// Coordinates of `w` in the basis of simple roots, if `w` lies in their span.
    pub fn simple_coordinates(&self, w: &[Q]) -> Option<Vec<Q>> {
        let simple = self.simple_roots();
        let cols: Vec<linalg::SparseVec> = simple
            .iter()
            .map(|s| {
                s.iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(i, c)| (i, c.clone()))
                    .collect()
            })
            .collect();
        let target = w
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i, c.clone()))
            .collect();
        linalg::solve_combination(&cols, &target)
    }

    /// `sum_i n_i * simple_i`.
    pub fn from_simple_coordinates(&self, n: &[Q]) -> Weight {
        self.simple_roots()
            .iter()
            .zip(n)
            .fold(self.zero_weight(), |acc, (s, c)| add(&acc, &scaled(s, c)))
    }

    /// Number of ways to write `eta` as a sum of positive roots, odd roots used at most
    /// once. Roots in `exclude` are not available.
    pub fn partition_count(&self, eta: &[Q], exclude: &[Weight]) -> u64 {
        let pos: Vec<(Weight, bool)> = {
            let mut v: Vec<(Weight, bool)> = self
                .roots
                .iter()
                .filter(|r| r.positive && !exclude.contains(&r.coords))
                .map(|r| (r.coords.clone(), r.odd))
                .collect();
            v.sort();
            v
        };
        // Work in simple-root coordinates, where positive roots are nonnegative.
        let Some(target) = self.simple_coordinates(eta) else {
            return 0;
        };
        let pos_s: Vec<(Vec<Q>, bool)> = pos
            .iter()
            .filter_map(|(w, odd)| self.simple_coordinates(w).map(|c| (c, *odd)))
            .collect();
        fn go(i: usize, rest: &[Q], roots: &[(Vec<Q>, bool)]) -> u64 {
            if rest.iter().any(|c| c < &Q::zero()) {
                return 0;
            }
            if i == roots.len() {
                return u64::from(rest.iter().all(Zero::is_zero));
            }
            let (root, odd) = &roots[i];
            let mut total = 0;
            let mut cur: Vec<Q> = rest.to_vec();
            let max = if *odd { 1 } else { u32::MAX };
            let mut k = 0;
            loop {
                if cur.iter().any(|c| c < &Q::zero()) {
                    break;
                }
                total += go(i + 1, &cur, roots);
                k += 1;
                if k > max || root.iter().all(Zero::is_zero) {
                    break;
                }
                cur = cur.iter().zip(root).map(|(a, b)| a - b).collect();
            }
            total
        }
        go(0, &target, &pos_s)
    }
}

#[cfg(test)]
mod tests {
    use crate::builtin;
    use crate::rational::{q, qf};

    #[test]
    fn osp12_root_data() {
        let g = builtin::osp12();
        let rd = g.root_datum().unwrap();
        assert_eq!(rd.odd_positive(), vec![vec![q(1)]]);
        assert_eq!(rd.even_positive(), vec![vec![q(2)]]);
        assert!(rd.even_positive_bar().is_empty());
        assert!(rd.odd_positive_bar().is_empty());
        assert_eq!(rd.rho0(), vec![q(1)]);
        assert_eq!(rd.rho1(), vec![qf(1, 2)]);
        assert_eq!(rd.rho(), vec![qf(1, 2)]);
        assert_eq!(rd.simple_roots(), vec![vec![q(1)]]);
        assert_eq!(rd.form(&[q(1)], &[q(1)]), q(2));
        for k in 0..6 {
            assert_eq!(rd.partition_count(&[q(k)], &[]), 1, "eta = {k} alpha");
        }
    }

    #[test]
    fn sl2_root_data() {
        let g = builtin::sl2();
        let rd = g.root_datum().unwrap();
        assert_eq!(rd.even_positive_bar(), vec![vec![q(2)]]);
        assert_eq!(rd.rho(), vec![q(1)]);
        assert_eq!(rd.form(&[q(2)], &[q(2)]), q(2));
        assert_eq!(rd.partition_count(&[q(4)], &[]), 1);
        assert_eq!(rd.partition_count(&[q(3)], &[]), 0);
    }
}
