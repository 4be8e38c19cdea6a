use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;
use std::sync::Arc;

use num_traits::{One, Zero};

use super::{EnvElement, Monomial};
use crate::error::{Error, Result};
use crate::rational::{qf, sign, Q};
use crate::superalg::LieSuperalgebra;

pub(crate) type Terms = BTreeMap<Monomial, Q>;

pub(crate) fn add_term(acc: &mut Terms, m: Monomial, c: Q) {
    if c.is_zero() {
        return;
    }
    match acc.entry(m) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

/// Straightening context for `U(g)` under a fixed generator order.
///
/// Products are reduced to ordered monomials by repeatedly swapping adjacent
/// out-of-order generators (`ab = ±ba + [a,b]`) and replacing squares of odd
/// generators by half their bracket. Results of `generator * monomial` are memoized;
/// the memo lives only as long as this value.
pub struct Ring {
    alg: Arc<LieSuperalgebra>,
    rank: Vec<usize>,
    by_rank: Vec<usize>,
    odd: Vec<bool>,
    cache: RefCell<HashMap<(usize, Monomial), Rc<Vec<(Monomial, Q)>>>>,
}

impl Ring {
    /// The ring in the algebra's own PBW order (the generator list order).
    pub fn new(alg: Arc<LieSuperalgebra>) -> Self {
        let order = (0..alg.dim()).collect();
        Self::with_order(alg, order)
    }

    /// A ring whose ordered monomials list generators in the sequence `by_rank`.
    pub fn with_order(alg: Arc<LieSuperalgebra>, by_rank: Vec<usize>) -> Self {
        let n = alg.dim();
        assert_eq!(
            by_rank.len(),
            n,
            "order must be a permutation of the generators"
        );
        let mut rank = vec![usize::MAX; n];
        for (r, &g) in by_rank.iter().enumerate() {
            rank[g] = r;
        }
        assert!(rank.iter().all(|&r| r < n), "order must be a permutation");
        let odd = (0..n).map(|i| alg.is_odd(i)).collect();
        Ring {
            alg,
            rank,
            by_rank,
            odd,
            cache: RefCell::new(HashMap::new()),
        }
    }

    /// Order listing even generators first and odd generators last, each in list order.
    pub fn odd_rightmost(alg: Arc<LieSuperalgebra>) -> Self {
        let mut order = alg.even_indices();
        order.extend(alg.odd_indices());
        Self::with_order(alg, order)
    }

    pub fn algebra(&self) -> &Arc<LieSuperalgebra> {
        &self.alg
    }

    pub fn order(&self) -> &[usize] {
        &self.by_rank
    }

    pub fn is_canonical(&self) -> bool {
        self.by_rank.iter().enumerate().all(|(r, &g)| r == g)
    }

    fn check(&self, u: &EnvElement) -> Result<()> {
        if u.same_algebra(&self.alg) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    /// `g * m` in normal form, where `m` is ordered with respect to this ring.
    fn left_gen(&self, g: usize, m: &Monomial) -> Rc<Vec<(Monomial, Q)>> {
        let key = (g, m.clone());
        if let Some(r) = self.cache.borrow().get(&key) {
            return r.clone();
        }
        let first = self.by_rank.iter().copied().find(|&h| m.exponent(h) > 0);
        let result: Vec<(Monomial, Q)> = match first {
            Some(h) if self.rank[g] > self.rank[h] => {
                let rest = m.with_exponent(h, m.exponent(h) - 1);
                let mut acc = Terms::new();
                let s = sign(self.odd[g] && self.odd[h]);
                let moved = self.left_gen(g, &rest);
                for (mx, cx) in moved.iter() {
                    for (my, cy) in self.left_gen(h, mx).iter() {
                        add_term(&mut acc, my.clone(), &s * cx * cy);
                    }
                }
                for (k, c) in self.alg.bracket(g, h) {
                    for (my, cy) in self.left_gen(*k, &rest).iter() {
                        add_term(&mut acc, my.clone(), c * cy);
                    }
                }
                acc.into_iter().collect()
            }
            Some(h) if h == g && self.odd[g] => {
                let rest = m.with_exponent(g, 0);
                let mut acc = Terms::new();
                let half = qf(1, 2);
                for (k, c) in self.alg.bracket(g, g) {
                    for (my, cy) in self.left_gen(*k, &rest).iter() {
                        add_term(&mut acc, my.clone(), &half * c * cy);
                    }
                }
                acc.into_iter().collect()
            }
            _ => vec![(m.with_exponent(g, m.exponent(g) + 1), Q::one())],
        };
        let result = Rc::new(result);
        self.cache.borrow_mut().insert(key, result.clone());
        result
    }

    /// Left-multiplies the ordered terms `x` by the word `word` (leftmost letter first).
    pub(crate) fn word_times(&self, word: &[usize], x: &Terms) -> Terms {
        let mut cur = x.clone();
        for &g in word.iter().rev() {
            let mut next = Terms::new();
            for (m, c) in &cur {
                for (my, cy) in self.left_gen(g, m).iter() {
                    add_term(&mut next, my.clone(), c * cy);
                }
            }
            cur = next;
        }
        cur
    }

    /// Normal form of an arbitrary word of generators.
    pub(crate) fn normalize_word(&self, word: &[usize]) -> Terms {
        let mut one = Terms::new();
        one.insert(Monomial::one(self.alg.dim()), Q::one());
        self.word_times(word, &one)
    }

    /// Product of two sets of terms that are ordered with respect to this ring.
    pub(crate) fn mul_terms(&self, a: &Terms, b: &Terms) -> Terms {
        let mut acc = Terms::new();
        for (ma, ca) in a {
            let prod = self.word_times(&ma.word(&self.by_rank), b);
            for (m, c) in prod {
                add_term(&mut acc, m, ca * c);
            }
        }
        acc
    }

    /// PBW normal form of `a * b`.
    pub fn mul(&self, a: &EnvElement, b: &EnvElement) -> Result<EnvElement> {
        self.check(a)?;
        self.check(b)?;
        if self.is_canonical() {
            let terms = self.mul_terms(a.terms(), b.terms());
            Ok(EnvElement::from_terms_unchecked(self.alg.clone(), terms))
        } else {
            let ta = self.reexpress(a)?;
            let tb = self.reexpress(b)?;
            let terms = self.mul_terms(&ta, &tb);
            Ok(self.to_canonical(&terms))
        }
    }

    /// Expands a canonically ordered element in this ring's order.
    pub(crate) fn reexpress(&self, u: &EnvElement) -> Result<Terms> {
        self.check(u)?;
        if self.is_canonical() {
            return Ok(u.terms().clone());
        }
        let canonical: Vec<usize> = (0..self.alg.dim()).collect();
        let mut acc = Terms::new();
        for (m, c) in u.terms() {
            for (mm, cc) in self.normalize_word(&m.word(&canonical)) {
                add_term(&mut acc, mm, c * cc);
            }
        }
        Ok(acc)
    }

    /// Converts terms ordered in this ring back to a canonical element.
    pub(crate) fn to_canonical(&self, terms: &Terms) -> EnvElement {
        if self.is_canonical() {
            return EnvElement::from_terms_unchecked(self.alg.clone(), terms.clone());
        }
        let canon = Ring::new(self.alg.clone());
        let mut acc = Terms::new();
        for (m, c) in terms {
            for (mm, cc) in canon.normalize_word(&m.word(&self.by_rank)) {
                add_term(&mut acc, mm, c * cc);
            }
        }
        EnvElement::from_terms_unchecked(self.alg.clone(), acc)
    }

    /// Super-commutator `a*b - (-1)^{d(a)(d(b)+twist)} b*a` for a generator `a`,
    /// applied homogeneous component by component.
    pub(crate) fn gen_commutator(&self, a: usize, u: &EnvElement, twist: bool) -> EnvElement {
        let n = self.alg.dim();
        let mut acc = Terms::new();
        let word = [a];
        let gen: Terms = std::iter::once((Monomial::generator(n, a), Q::one())).collect();
        for (m, c) in u.terms() {
            let single: Terms = std::iter::once((m.clone(), Q::one())).collect();
            let left = self.word_times(&word, &single);
            let right = self.mul_terms(&single, &gen);
            let du = m.is_odd(&self.odd);
            let s = sign(self.odd[a] && (du ^ twist));
            for (mm, cc) in left {
                add_term(&mut acc, mm, c * cc);
            }
            for (mm, cc) in right {
                add_term(&mut acc, mm, -(&s * c * cc));
            }
        }
        EnvElement::from_terms_unchecked(self.alg.clone(), acc)
    }
}
