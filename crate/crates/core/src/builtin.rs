//! Bundled algebra definitions.

use std::sync::Arc;

use crate::superalg::{load_algebra, LieSuperalgebra};

pub const Q1_JSON: &str = include_str!("../data/q1.json");
pub const W1_JSON: &str = include_str!("../data/w1.json");
pub const SL2_JSON: &str = include_str!("../data/sl2.json");
pub const OSP12_JSON: &str = include_str!("../data/osp12.json");

pub const NAMES: [&str; 4] = ["q1", "w1", "sl2", "osp12"];

fn load(src: &str) -> Arc<LieSuperalgebra> {
    Arc::new(load_algebra(src).expect("bundled algebra definitions are valid"))
}

/// Odd `x` and even `e` with `[x,x] = e`.
pub fn q1() -> Arc<LieSuperalgebra> {
    load(Q1_JSON)
}

/// Even `g` and odd `x` with `[g,x] = x`, `[x,x] = 0`.
pub fn w1() -> Arc<LieSuperalgebra> {
    load(W1_JSON)
}

pub fn sl2() -> Arc<LieSuperalgebra> {
    load(SL2_JSON)
}

pub fn osp12() -> Arc<LieSuperalgebra> {
    load(OSP12_JSON)
}

pub fn source(name: &str) -> Option<&'static str> {
    match name {
        "q1" => Some(Q1_JSON),
        "w1" => Some(W1_JSON),
        "sl2" => Some(SL2_JSON),
        "osp12" | "osp(1,2)" => Some(OSP12_JSON),
        _ => None,
    }
}

pub fn by_name(name: &str) -> Option<Arc<LieSuperalgebra>> {
    source(name).map(load)
}

pub fn all() -> Vec<Arc<LieSuperalgebra>> {
    vec![q1(), w1(), sl2(), osp12()]
}
