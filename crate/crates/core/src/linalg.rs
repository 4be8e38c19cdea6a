//! Exact sparse linear algebra over the rationals.
//!
//! Rows are cleared of denominators and eliminated fraction-free over the integers;
//! after every elimination step the row is divided by the gcd of its entries, which
//! keeps entries small without ever forming a rational.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::rational::Q;

/// Sparse vector: column index to nonzero value.
pub type SparseVec = BTreeMap<usize, Q>;

type IntRow = BTreeMap<usize, BigInt>;

fn to_primitive(row: &SparseVec) -> IntRow {
    let lcm = row
        .values()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut out: IntRow = row
        .iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(&j, c)| (j, c.numer() * (&lcm / c.denom())))
        .collect();
    make_primitive(&mut out);
    out
}

fn make_primitive(row: &mut IntRow) {
    let g = row.values().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if g.is_zero() || g.is_one() {
        return;
    }
    for v in row.values_mut() {
        *v /= &g;
    }
}

/// Row echelon form built incrementally from inserted rows.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    pivots: BTreeMap<usize, IntRow>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    fn reduce(&self, mut row: IntRow) -> IntRow {
        loop {
            let Some((&lead, _)) = row.iter().next() else {
                return row;
            };
            let Some(piv) = self.pivots.get(&lead) else {
                return row;
            };
            let a = row[&lead].clone();
            let p = piv[&lead].clone();
            let g = a.gcd(&p);
            let (ma, mp) = (&p / &g, &a / &g);
            let mut next = IntRow::new();
            for (j, v) in &row {
                next.insert(*j, v * &ma);
            }
            for (j, v) in piv {
                let e = next.entry(*j).or_insert_with(BigInt::zero);
                *e -= v * &mp;
            }
            next.retain(|_, v| !v.is_zero());
            make_primitive(&mut next);
            row = next;
        }
    }

    /// Adds a row; returns false if it was already in the span.
    pub fn insert(&mut self, row: &SparseVec) -> bool {
        let r = self.reduce(to_primitive(row));
        match r.keys().next().copied() {
            None => false,
            Some(lead) => {
                self.pivots.insert(lead, r);
                true
            }
        }
    }

    pub fn contains(&self, row: &SparseVec) -> bool {
        self.reduce(to_primitive(row)).is_empty()
    }

    /// Basis of `{v : row . v = 0 for all rows}` in `ncols` unknowns.
    ///
    /// One vector per free column `f`, with `v[f] = 1` and zeros at the other free
    /// columns (the reduced-echelon kernel basis).
    pub fn kernel(&self, ncols: usize) -> Vec<SparseVec> {
        let free: Vec<usize> = (0..ncols)
            .filter(|c| !self.pivots.contains_key(c))
            .collect();
        free.iter()
            .map(|&f| {
                let mut v = SparseVec::new();
                v.insert(f, Q::one());
                for (&p, row) in self.pivots.iter().rev() {
                    let mut s = Q::zero();
                    for (j, a) in row.range(p + 1..) {
                        if let Some(x) = v.get(j) {
                            s += x * Q::from_integer(a.clone());
                        }
                    }
                    if !s.is_zero() {
                        v.insert(p, -s / Q::from_integer(row[&p].clone()));
                    }
                }
                v
            })
            .collect()
    }
}

/// Kernel of the matrix whose rows are given, with `ncols` columns.
pub fn nullspace(rows: &[SparseVec], ncols: usize) -> Vec<SparseVec> {
    let mut e = Echelon::new();
    for r in rows {
        debug_assert!(r.keys().all(|&j| j < ncols), "row exceeds column count");
        e.insert(r);
    }
    e.kernel(ncols)
}

pub fn rank(rows: &[SparseVec]) -> usize {
    let mut e = Echelon::new();
    rows.iter().filter(|r| e.insert(r)).count()
}

/// True iff both families span the same subspace.
pub fn same_span(a: &[SparseVec], b: &[SparseVec]) -> bool {
    let ra = rank(a);
    let rb = rank(b);
    let mut all = a.to_vec();
    all.extend(b.iter().cloned());
    ra == rb && rank(&all) == ra
}

/// Some solution `x` of `sum_k x_k * columns[k] = target`, if one exists.
pub fn solve_combination(columns: &[SparseVec], target: &SparseVec) -> Option<Vec<Q>> {
    // Unknowns are the coefficients plus one slot for -target; each coordinate is a row.
    let k = columns.len();
    let mut rows: BTreeMap<usize, SparseVec> = BTreeMap::new();
    for (i, col) in columns.iter().enumerate() {
        for (&r, c) in col {
            rows.entry(r).or_default().insert(i, c.clone());
        }
    }
    for (&r, c) in target {
        rows.entry(r).or_default().insert(k, -c.clone());
    }
    let rows: Vec<SparseVec> = rows.into_values().collect();
    let ker = nullspace(&rows, k + 1);
    let v = ker.into_iter().find(|v| v.contains_key(&k))?;
    let scale = v[&k].clone();
    Some(
        (0..k)
            .map(|i| v.get(&i).cloned().unwrap_or_else(Q::zero) / &scale)
            .collect(),
    )
}

/// Determinant of a dense square rational matrix.
pub fn determinant(m: &[Vec<Q>]) -> Q {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m.to_vec();
    let mut det = Q::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
            return Q::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        let piv = a[c][c].clone();
        det *= &piv;
        for r in c + 1..n {
            if a[r][c].is_zero() {
                continue;
            }
            let f = &a[r][c] / &piv;
            for j in c..n {
                let t = &f * &a[c][j];
                a[r][j] -= t;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qf};

    fn row(entries: &[(usize, Q)]) -> SparseVec {
        entries.iter().cloned().collect()
    }

    #[test]
    fn identity_has_trivial_kernel() {
        let rows: Vec<SparseVec> = (0..3).map(|i| row(&[(i, q(1))])).collect();
        assert!(nullspace(&rows, 3).is_empty());
    }

    #[test]
    fn zero_row_kernel_is_everything() {
        let ker = nullspace(&[SparseVec::new()], 4);
        assert_eq!(ker.len(), 4);
        assert_eq!(rank(&ker), 4);
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let rows = vec![
            row(&[(0, q(2)), (1, qf(1, 3)), (3, q(-1))]),
            row(&[(1, q(3)), (2, q(5))]),
            row(&[(0, q(4)), (1, qf(11, 3)), (2, q(5)), (3, q(-2))]),
        ];
        let ker = nullspace(&rows, 4);
        assert_eq!(ker.len(), 2);
        for v in &ker {
            for r in &rows {
                let dot: Q = r
                    .iter()
                    .map(|(j, a)| a * v.get(j).cloned().unwrap_or_else(Q::zero))
                    .sum();
                assert_eq!(dot, q(0));
            }
        }
    }

    #[test]
    fn combination_and_span() {
        let a = row(&[(0, q(1)), (1, q(1))]);
        let b = row(&[(1, q(2))]);
        let t = row(&[(0, q(3)), (1, q(7))]);
        let x = solve_combination(&[a.clone(), b.clone()], &t).unwrap();
        assert_eq!(x, vec![q(3), q(2)]);
        assert!(solve_combination(&[a.clone()], &b).is_none());
        assert!(same_span(&[a.clone(), b.clone()], &[t.clone(), b.clone()]));
        assert!(!same_span(&[a], &[b]));
    }

    #[test]
    fn determinants() {
        let m = vec![vec![q(2), q(1)], vec![q(4), q(3)]];
        assert_eq!(determinant(&m), q(2));
        let s = vec![vec![q(0), q(1)], vec![q(1), q(0)]];
        assert_eq!(determinant(&s), q(-1));
        assert_eq!(determinant(&[]), q(1));
    }
}
