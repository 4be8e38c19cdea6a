use std::cmp::Ordering;

use smallvec::SmallVec;

/// An ordered PBW monomial, stored as an exponent vector indexed by generator.
///
/// The word it stands for lists generators in the PBW order of the ring that produced
/// it; odd generators never carry an exponent above one.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub(crate) SmallVec<[u16; 8]>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(SmallVec::from_elem(0, n))
    }

    pub fn generator(n: usize, i: usize) -> Self {
        let mut m = Self::one(n);
        m.0[i] = 1;
        m
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn exponent(&self, i: usize) -> u16 {
        self.0[i]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Number of odd generators in the word.
    pub fn odd_degree(&self, odd: &[bool]) -> usize {
        self.0
            .iter()
            .zip(odd)
            .filter(|(_, &o)| o)
            .map(|(&e, _)| e as usize)
            .sum()
    }

    pub fn is_odd(&self, odd: &[bool]) -> bool {
        self.odd_degree(odd) % 2 == 1
    }

    /// Generator indices of the word, in the order given by `by_rank`.
    pub fn word(&self, by_rank: &[usize]) -> Vec<usize> {
        let mut w = Vec::with_capacity(self.degree());
        for &g in by_rank {
            for _ in 0..self.0[g] {
                w.push(g);
            }
        }
        w
    }

    pub fn with_exponent(&self, i: usize, e: u16) -> Self {
        let mut m = self.clone();
        m.0[i] = e;
        m
    }

    /// Exponent-wise sum (the commutative product).
    pub fn times(&self, other: &Monomial) -> Self {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }
}

/// Graded order; within a degree, larger powers of earlier generators come first.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
