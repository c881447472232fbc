//! Helpers shared by the integration suites. Everything here is written
//! directly from definitions, not from the library's own shortcuts.

#![allow(dead_code)]

use cascade_lab::cascade::Cascade;
use cascade_lab::nilradical::Nilradical;
use cascade_lab::rootsys::{RootSet, RootSystem, SimpleSet, SimpleType};

pub fn setup(label: &str) -> (RootSystem, Cascade) {
    let rs = RootSystem::new(label.parse::<SimpleType>().unwrap());
    let c = Cascade::new(&rs);
    (rs, c)
}

pub fn set(labels: &[usize]) -> SimpleSet {
    labels.iter().map(|l| l - 1).collect()
}

pub fn mask_set(rank: usize, mask: u64) -> SimpleSet {
    (0..rank).filter(|i| mask >> i & 1 == 1).collect()
}

/// Roots given as digit strings, e.g. `"011000"`.
pub fn roots(rs: &RootSystem, digits: &[&str]) -> RootSet {
    digits
        .iter()
        .map(|d| {
            let v: Vec<i32> = d.chars().map(|c| c.to_digit(10).unwrap() as i32).collect();
            rs.find(&v).unwrap_or_else(|| panic!("{d} is not a root"))
        })
        .collect()
}

/// `[α_a, α_b]`: the type A root `α_a + … + α_b` (1-based, inclusive).
pub fn interval(rs: &RootSystem, a: usize, b: usize) -> usize {
    let v: Vec<i32> = (1..=rs.rank()).map(|i| i32::from(a <= i && i <= b)).collect();
    rs.find(&v).unwrap()
}

/// The non-genericity criterion read off the cascade: some child `β_j` of
/// `β_i`, some `α ∈ Φ(β_i) \ T` and some `ν ∈ T` with
/// `[β_i:ν] > [β_j:ν] > 0`.
pub fn descendant_obstruction(rs: &RootSystem, c: &Cascade, t: &SimpleSet) -> bool {
    c.hasse_edges().into_iter().any(|(i, j)| {
        let (bi, bj) = (rs.root(c.root(i)), rs.root(c.root(j)));
        c.get(i).phi.iter().any(|a| !t.contains(a))
            && t.iter().any(|&nu| bi.coeff(nu) > bj.coeff(nu) && bj.coeff(nu) > 0)
    })
}

/// Upper closure in the root order, by brute force over all pairs.
pub fn upper_closure(rs: &RootSystem, seed: &RootSet) -> RootSet {
    (0..rs.len()).filter(|&g| seed.iter().any(|&s| rs.leq(s, g))).collect()
}

/// Centre of `n` straight from the bracket: roots `γ` of `n` with no
/// `γ + δ` a root for `δ ∈ Δ(n)`.
pub fn centre_by_brackets(rs: &RootSystem, n: &Nilradical) -> RootSet {
    n.roots
        .iter()
        .copied()
        .filter(|&g| n.roots.iter().all(|&d| rs.sum(g, d).is_none()))
        .collect()
}
