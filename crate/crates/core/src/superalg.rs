//! Lie superalgebras given by structure constants, and their JSON definition files.

use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{fmt_q, parse_q, sign, Q};
use crate::roothc::RootDatum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn from_odd(odd: bool) -> Self {
        if odd {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    pub fn add(self, other: Parity) -> Parity {
        Parity::from_odd(self.is_odd() ^ other.is_odd())
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// Position of a generator in the ordered generator list (which is also the PBW order).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneratorIndex(pub usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub parity: Parity,
}

/// Sparse linear combination of generators, sorted by index, without zero coefficients.
pub type LinComb = Vec<(usize, Q)>;

fn lin_add_scaled(acc: &mut LinComb, other: &LinComb, scale: &Q) {
    if scale.is_zero() {
        return;
    }
    let mut map: std::collections::BTreeMap<usize, Q> = acc.drain(..).collect();
    for (i, c) in other {
        let e = map.entry(*i).or_insert_with(Q::zero);
        *e += c * scale;
    }
    acc.extend(map.into_iter().filter(|(_, c)| !c.is_zero()));
}

#[derive(Debug, Clone, PartialEq)]
pub struct LieSuperalgebra {
    name: String,
    generators: Vec<Generator>,
    bracket: Vec<Vec<LinComb>>,
    root_datum: Option<RootDatum>,
}

/// A generator triple on which the super Jacobi identity fails, with the nonzero residual.
#[derive(Debug, Clone, PartialEq)]
pub struct JacobiViolation {
    pub triple: (usize, usize, usize),
    pub residual: LinComb,
}

impl LieSuperalgebra {
    /// Builds an algebra from generators and brackets `[left, right] = result`.
    ///
    /// Each unordered pair may be given at most once; the other orientation is filled
    /// in by super anticommutativity. Axioms are checked before returning.
    pub fn new(
        name: impl Into<String>,
        generators: Vec<Generator>,
        brackets: Vec<(usize, usize, LinComb)>,
    ) -> Result<Self> {
        let n = generators.len();
        let mut seen = HashMap::new();
        for (i, g) in generators.iter().enumerate() {
            if seen.insert(g.name.clone(), i).is_some() {
                return Err(Error::DuplicateGenerator(g.name.clone()));
            }
        }
        let mut table = vec![vec![LinComb::new(); n]; n];
        let mut given = vec![vec![false; n]; n];
        for (i, j, result) in brackets {
            if i >= n || j >= n || result.iter().any(|(k, _)| *k >= n) {
                return Err(Error::Parse(
                    "bracket refers to an unknown generator".into(),
                ));
            }
            if given[i][j] || given[j][i] {
                return Err(Error::Parse(format!(
                    "bracket of `{}` and `{}` is listed more than once",
                    generators[i].name, generators[j].name
                )));
            }
            given[i][j] = true;
            let mut clean = LinComb::new();
            lin_add_scaled(&mut clean, &result, &Q::one());
            let pi = generators[i].parity;
            let pj = generators[j].parity;
            if i == j && !pi.is_odd() && !clean.is_empty() {
                return Err(Error::AxiomViolation(format!(
                    "anticommutativity: [{0},{0}] must vanish for an even generator",
                    generators[i].name
                )));
            }
            let want = pi.add(pj);
            if let Some((k, _)) = clean.iter().find(|(k, _)| generators[*k].parity != want) {
                return Err(Error::AxiomViolation(format!(
                    "parity: [{},{}] has a component along {} which is not {}",
                    generators[i].name, generators[j].name, generators[*k].name, want
                )));
            }
            let s = -sign(pi.is_odd() && pj.is_odd());
            let mut flipped = LinComb::new();
            lin_add_scaled(&mut flipped, &clean, &s);
            table[j][i] = flipped;
            table[i][j] = clean;
        }
        let alg = LieSuperalgebra {
            name: name.into(),
            generators,
            bracket: table,
            root_datum: None,
        };
        if let Some(v) = alg.validate_jacobi().first() {
            let (a, b, c) = v.triple;
            return Err(Error::AxiomViolation(format!(
                "super Jacobi identity fails on ({}, {}, {})",
                alg.generators[a].name, alg.generators[b].name, alg.generators[c].name
            )));
        }
        Ok(alg)
    }

    pub fn with_root_datum(mut self, rd: RootDatum) -> Self {
        self.root_datum = Some(rd);
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn generator_name(&self, i: usize) -> &str {
        &self.generators[i].name
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.generators[i].parity
    }

    pub fn is_odd(&self, i: usize) -> bool {
        self.generators[i].parity.is_odd()
    }

    pub fn index_of(&self, name: &str) -> Option<GeneratorIndex> {
        self.generators
            .iter()
            .position(|g| g.name == name)
            .map(GeneratorIndex)
    }

    pub fn odd_indices(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.is_odd(i)).collect()
    }

    pub fn even_indices(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| !self.is_odd(i)).collect()
    }

    pub fn odd_dim(&self) -> usize {
        self.odd_indices().len()
    }

    pub fn bracket(&self, i: usize, j: usize) -> &LinComb {
        &self.bracket[i][j]
    }

    pub fn root_datum(&self) -> Option<&RootDatum> {
        self.root_datum.as_ref()
    }

    pub fn require_root_datum(&self) -> Result<&RootDatum> {
        self.root_datum
            .as_ref()
            .ok_or_else(|| Error::NoRootDatum(self.name.clone()))
    }

    /// Bilinear extension of the bracket to homogeneous linear combinations.
    pub fn bracket_lin(&self, a: &LinComb, b: &LinComb) -> LinComb {
        let mut out = LinComb::new();
        for (i, ci) in a {
            for (j, cj) in b {
                lin_add_scaled(&mut out, &self.bracket[*i][*j], &(ci * cj));
            }
        }
        out
    }

    /// Every generator triple (up to reordering) on which the super Jacobi identity fails.
    pub fn validate_jacobi(&self) -> Vec<JacobiViolation> {
        let n = self.dim();
        let unit = |i: usize| vec![(i, Q::one())];
        let mut out = Vec::new();
        for a in 0..n {
            for b in a..n {
                for c in b..n {
                    let (da, db, dc) = (self.is_odd(a), self.is_odd(b), self.is_odd(c));
                    let mut res = LinComb::new();
                    let t1 = self.bracket_lin(&unit(a), self.bracket(b, c));
                    let t2 = self.bracket_lin(&unit(b), self.bracket(c, a));
                    let t3 = self.bracket_lin(&unit(c), self.bracket(a, b));
                    lin_add_scaled(&mut res, &t1, &sign(da && dc));
                    lin_add_scaled(&mut res, &t2, &sign(db && da));
                    lin_add_scaled(&mut res, &t3, &sign(dc && db));
                    if !res.is_empty() {
                        out.push(JacobiViolation {
                            triple: (a, b, c),
                            residual: res,
                        });
                    }
                }
            }
        }
        out
    }

    /// Trace of `ad(a)` restricted to the odd part.
    pub fn odd_trace(&self, a: usize) -> Q {
        self.odd_indices()
            .into_iter()
            .filter_map(|i| {
                self.bracket(a, i)
                    .iter()
                    .find(|(k, _)| *k == i)
                    .map(|(_, c)| c.clone())
            })
            .sum()
    }

    /// True iff every even generator acts tracelessly on the odd part, i.e. the top
    /// exterior power of the odd part is a trivial module over the even part.
    pub fn lambda_top_trivial(&self) -> bool {
        self.even_indices()
            .into_iter()
            .all(|a| self.odd_trace(a).is_zero())
    }

    pub fn to_file(&self) -> AlgebraFile {
        let mut brackets = Vec::new();
        for i in 0..self.dim() {
            for j in i..self.dim() {
                if !self.bracket[i][j].is_empty() {
                    brackets.push(BracketDef {
                        left: self.generators[i].name.clone(),
                        right: self.generators[j].name.clone(),
                        result: self.bracket[i][j]
                            .iter()
                            .map(|(k, c)| TermDef {
                                gen: self.generators[*k].name.clone(),
                                coeff: RatDef::Str(fmt_q(c)),
                            })
                            .collect(),
                    });
                }
            }
        }
        AlgebraFile {
            name: self.name.clone(),
            generators: self
                .generators
                .iter()
                .map(|g| GeneratorDef {
                    name: g.name.clone(),
                    parity: g.parity,
                })
                .collect(),
            brackets,
            root_datum: self.root_datum.as_ref().map(|rd| rd.to_def(self)),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("algebra file serializes")
    }
}

impl fmt::Display for LieSuperalgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let even = self.even_indices().len();
        write!(
            f,
            "{} (dim g0 = {}, dim g1 = {})",
            self.name,
            even,
            self.dim() - even
        )
    }
}

/// A rational in a definition file: a string `"p/q"`/`"n"` or a bare JSON integer.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RatDef {
    Str(String),
    Int(i64),
}

impl RatDef {
    pub fn value(&self) -> Result<Q> {
        match self {
            RatDef::Str(s) => parse_q(s),
            RatDef::Int(n) => Ok(crate::rational::q(*n)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorDef {
    pub name: String,
    pub parity: Parity,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDef {
    pub gen: String,
    pub coeff: RatDef,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketDef {
    pub left: String,
    pub right: String,
    pub result: Vec<TermDef>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RootDef {
    pub gen: String,
    pub coords: Vec<RatDef>,
    pub positive: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RootDatumDef {
    pub cartan: Vec<String>,
    pub form: Vec<Vec<RatDef>>,
    pub roots: Vec<RootDef>,
}

/// On-disk layout of an algebra definition file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    pub generators: Vec<GeneratorDef>,
    #[serde(default)]
    pub brackets: Vec<BracketDef>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub root_datum: Option<RootDatumDef>,
}

/// Parses and validates an algebra definition (JSON text).
pub fn load_algebra(source: &str) -> Result<LieSuperalgebra> {
    let file: AlgebraFile =
        serde_json::from_str(source).map_err(|e| Error::Parse(e.to_string()))?;
    from_file(&file)
}

pub fn from_file(file: &AlgebraFile) -> Result<LieSuperalgebra> {
    let generators: Vec<Generator> = file
        .generators
        .iter()
        .map(|g| Generator {
            name: g.name.clone(),
            parity: g.parity,
        })
        .collect();
    let mut index = HashMap::new();
    for (i, g) in generators.iter().enumerate() {
        if index.insert(g.name.as_str(), i).is_some() {
            return Err(Error::DuplicateGenerator(g.name.clone()));
        }
    }
    let lookup = |name: &str| {
        index
            .get(name)
            .copied()
            .ok_or_else(|| Error::Parse(format!("unknown generator `{name}`")))
    };
    let mut brackets = Vec::new();
    for b in &file.brackets {
        let mut result = LinComb::new();
        for t in &b.result {
            result.push((lookup(&t.gen)?, t.coeff.value()?));
        }
        brackets.push((lookup(&b.left)?, lookup(&b.right)?, result));
    }
    let alg = LieSuperalgebra::new(file.name.clone(), generators, brackets)?;
    match &file.root_datum {
        None => Ok(alg),
        Some(def) => {
            let rd = RootDatum::build(&alg, def)?;
            Ok(alg.with_root_datum(rd))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q1: &str = r#"{"name":"q1","generators":[{"name":"e","parity":"even"},{"name":"x","parity":"odd"}],
        "brackets":[{"left":"x","right":"x","result":[{"gen":"e","coeff":"1"}]}]}"#;

    #[test]
    fn loads_q1() {
        let g = load_algebra(Q1).unwrap();
        assert_eq!(g.even_indices().len(), 1);
        assert_eq!(g.odd_dim(), 1);
        assert!(g.validate_jacobi().is_empty());
        assert!(g.lambda_top_trivial());
    }

    #[test]
    fn odd_square_must_be_even() {
        let bad = Q1.replace(r#"{"gen":"e","coeff":"1"}"#, r#"{"gen":"x","coeff":"1"}"#);
        assert!(matches!(load_algebra(&bad), Err(Error::AxiomViolation(_))));
    }

    #[test]
    fn duplicate_generator_rejected() {
        let bad = Q1.replace(
            r#"{"name":"x","parity":"odd"}"#,
            r#"{"name":"e","parity":"odd"}"#,
        );
        assert!(matches!(
            load_algebra(&bad),
            Err(Error::DuplicateGenerator(_))
        ));
    }

    #[test]
    fn malformed_and_repeated_pairs() {
        assert!(matches!(load_algebra("{"), Err(Error::Parse(_))));
        let twice = r#"{"name":"a","generators":[{"name":"g","parity":"even"},{"name":"x","parity":"odd"}],
            "brackets":[{"left":"g","right":"x","result":[{"gen":"x","coeff":"1"}]},
                        {"left":"x","right":"g","result":[{"gen":"x","coeff":"-1"}]}]}"#;
        assert!(matches!(load_algebra(twice), Err(Error::Parse(_))));
    }

    #[test]
    fn even_self_bracket_must_vanish() {
        let bad = r#"{"name":"a","generators":[{"name":"g","parity":"even"}],
            "brackets":[{"left":"g","right":"g","result":[{"gen":"g","coeff":"1"}]}]}"#;
        assert!(matches!(load_algebra(bad), Err(Error::AxiomViolation(_))));
    }

    #[test]
    fn jacobi_failure_is_reported() {
        // [a,b]=c with [c,a]=b fails Jacobi on the even triple (a,b,c) unless [b,c] is set.
        let bad = r#"{"name":"bad","generators":[{"name":"a","parity":"even"},{"name":"b","parity":"even"},{"name":"c","parity":"even"}],
            "brackets":[{"left":"a","right":"b","result":[{"gen":"c","coeff":"1"}]},
                        {"left":"c","right":"a","result":[{"gen":"b","coeff":"1"}]},
                        {"left":"b","right":"c","result":[{"gen":"b","coeff":"1"}]}]}"#;
        assert!(matches!(load_algebra(bad), Err(Error::AxiomViolation(_))));
    }

    #[test]
    fn anticommutativity_is_derived() {
        let g = load_algebra(
            r#"{"name":"w1","generators":[{"name":"g","parity":"even"},{"name":"x","parity":"odd"}],
            "brackets":[{"left":"g","right":"x","result":[{"gen":"x","coeff":1}]}]}"#,
        )
        .unwrap();
        assert_eq!(g.bracket(1, 0), &vec![(1, -Q::one())]);
        assert_eq!(g.odd_trace(0), Q::one());
        assert!(!g.lambda_top_trivial());
    }
}
