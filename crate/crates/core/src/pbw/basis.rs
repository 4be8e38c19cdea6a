use super::Monomial;
use crate::superalg::LieSuperalgebra;

/// All ordered monomials of degree at most `d`, sorted by the monomial order.
pub fn pbw_basis(g: &LieSuperalgebra, d: usize) -> Vec<Monomial> {
    let gens: Vec<usize> = (0..g.dim()).collect();
    monomials_in(g, &gens, d)
}

/// Ordered monomials of degree at most `d` involving only the generators in `gens`.
pub fn monomials_in(g: &LieSuperalgebra, gens: &[usize], d: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u16; g.dim()];
    fill(g, gens, 0, d, &mut exps, &mut out);
    out.sort();
    out
}

fn fill(
    g: &LieSuperalgebra,
    gens: &[usize],
    pos: usize,
    budget: usize,
    exps: &mut Vec<u16>,
    out: &mut Vec<Monomial>,
) {
    if pos == gens.len() {
        out.push(Monomial::from_exponents(exps));
        return;
    }
    let i = gens[pos];
    let max = if g.is_odd(i) { budget.min(1) } else { budget };
    for e in 0..=max {
        exps[i] = e as u16;
        fill(g, gens, pos + 1, budget - e, exps, out);
    }
    exps[i] = 0;
}
