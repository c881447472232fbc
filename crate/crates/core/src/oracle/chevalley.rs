//! Chevalley basis structure constants.
//!
//! Constants are fixed on extraspecial pairs and propagated height by height
//! with the standard quadratic and quartic relations. The basis is
//! `{e_γ, e_{-γ} : γ ∈ Δ⁺} ∪ {h_1, …, h_r}` with `[e_γ, e_{-γ}] = h_γ`
//! (the coroot) and `N_{-γ,-δ} = -N_{γ,δ}`.

use std::collections::HashMap;

use num_integer::Integer;

use crate::rootsys::{RootId, RootSystem};

/// A root of the full system: positive root `id`, negated when `neg`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signed {
    pub id: RootId,
    pub neg: bool,
}

impl Signed {
    pub fn pos(id: RootId) -> Signed {
        Signed { id, neg: false }
    }

    pub fn neg(id: RootId) -> Signed {
        Signed { id, neg: true }
    }

    pub fn opposite(self) -> Signed {
        Signed {
            id: self.id,
            neg: !self.neg,
        }
    }
}

/// How the free signs on extraspecial pairs are chosen. Every choice gives a
/// valid Chevalley basis; results of the oracle must not depend on it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignChoice {
    /// Extraspecial pair uses the first admissible simple root; sign `+`.
    Standard,
    /// Signs alternate with the root's position in the canonical order.
    Alternating,
    /// Extraspecial pair uses the last admissible simple root; sign `+`.
    LastSimple,
}

#[derive(Debug, Clone)]
pub struct StructureConstants {
    rank: usize,
    coeffs: Vec<Vec<i32>>,
    norms: Vec<i64>,
    index_of: HashMap<Vec<i32>, RootId>,
    cartan: Vec<Vec<i32>>,
    symmetrizer: Vec<i32>,
    /// `pos[a][b] = N_{a,b}` for positive roots with `a + b` a root, else 0.
    pos: Vec<Vec<i64>>,
}

impl StructureConstants {
    pub fn new(rs: &RootSystem) -> StructureConstants {
        StructureConstants::with_signs(rs, SignChoice::Standard)
    }

    pub fn with_signs(rs: &RootSystem, choice: SignChoice) -> StructureConstants {
        let p = rs.len();
        let coeffs: Vec<Vec<i32>> = rs.roots().iter().map(|r| r.coeffs().to_vec()).collect();
        let norms: Vec<i64> = (0..p).map(|g| rs.norm(g) as i64).collect();
        let index_of = coeffs.iter().enumerate().map(|(k, v)| (v.clone(), k)).collect();
        let mut sc = StructureConstants {
            rank: rs.rank(),
            coeffs,
            norms,
            index_of,
            cartan: rs.cartan().to_vec(),
            symmetrizer: rs.symmetrizer().to_vec(),
            pos: vec![vec![0; p]; p],
        };
        let simples: Vec<RootId> = (0..rs.rank()).map(|i| rs.simple(i)).collect();

        // Roots are in height order, so every smaller sum is already done.
        for xi in 0..p {
            if rs.root(xi).height() == 1 {
                continue;
            }
            let mut admissible = simples.iter().copied().filter(|&a| rs.difference(xi, a).is_some());
            let a0 = match choice {
                SignChoice::LastSimple => admissible.next_back(),
                _ => admissible.next(),
            }
            .expect("non-simple root has a simple predecessor");
            let b0 = rs.difference(xi, a0).expect("admissible");
            let sign = match choice {
                SignChoice::Alternating if xi % 2 == 1 => -1,
                _ => 1,
            };
            let n0 = sign * (sc.string_below(b0, a0) + 1);
            sc.pos[a0][b0] = n0;
            sc.pos[b0][a0] = -n0;

            let xi_norm = sc.norms[xi];
            for a in 0..p {
                let Some(b) = rs.difference(xi, a) else {
                    continue;
                };
                if a == a0 || a == b0 {
                    continue;
                }
                // Quartic relation on (a, b, -a0, -b0).
                let (sa, sb) = (Signed::pos(a), Signed::pos(b));
                let (ma0, mb0) = (Signed::neg(a0), Signed::neg(b0));
                let mut terms: Vec<(i64, i64)> = Vec::new();
                if let Some(s) = sc.add(sb, ma0) {
                    terms.push((sc.n(sb, ma0) * sc.n(sa, mb0) * xi_norm, sc.norm(s)));
                }
                if let Some(s) = sc.add(ma0, sa) {
                    terms.push((sc.n(ma0, sa) * sc.n(sb, mb0) * xi_norm, sc.norm(s)));
                }
                let den = terms.iter().fold(1i64, |l, &(_, d)| l.lcm(&d));
                let acc: i64 = terms.iter().map(|&(t, d)| t * (den / d)).sum();
                // N_{a,b} N_{-a0,-b0} + acc/den = 0 with N_{-a0,-b0} = -n0.
                assert!(acc % (den * n0) == 0, "non-integral structure constant");
                sc.pos[a][b] = acc / (den * n0);
            }
        }
        sc
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn root_count(&self) -> usize {
        self.coeffs.len()
    }

    fn vector(&self, s: Signed) -> Vec<i32> {
        let v = &self.coeffs[s.id];
        if s.neg {
            v.iter().map(|c| -c).collect()
        } else {
            v.clone()
        }
    }

    fn lookup(&self, v: &[i32]) -> Option<Signed> {
        if let Some(&id) = self.index_of.get(v) {
            return Some(Signed::pos(id));
        }
        let neg: Vec<i32> = v.iter().map(|c| -c).collect();
        self.index_of.get(&neg).map(|&id| Signed::neg(id))
    }

    /// `a + b` when it is a root.
    pub fn add(&self, a: Signed, b: Signed) -> Option<Signed> {
        let v: Vec<i32> = self.vector(a).iter().zip(self.vector(b)).map(|(x, y)| x + y).collect();
        self.lookup(&v)
    }

    fn norm(&self, s: Signed) -> i64 {
        self.norms[s.id]
    }

    /// Largest `q` with `b - q·a` a root.
    fn string_below(&self, b: RootId, a: RootId) -> i64 {
        let mut cur = Signed::pos(b);
        let mut q = 0;
        while let Some(next) = self.add(cur, Signed::neg(a)) {
            cur = next;
            q += 1;
        }
        q
    }

    /// `N_{a,b}`; zero when `a + b` is not a root.
    pub fn n(&self, a: Signed, b: Signed) -> i64 {
        let Some(sum) = self.add(a, b) else {
            return 0;
        };
        match (a.neg, b.neg) {
            (false, false) => self.pos[a.id][b.id],
            (true, true) => -self.pos[a.id][b.id],
            _ => {
                // a + b + c = 0: N_{a,b}/(c,c) = N_{b,c}/(a,a) = N_{c,a}/(b,b).
                let c = sum.opposite();
                let (num, den) = if c.neg == a.neg {
                    (self.n(c, a) * self.norm(c), self.norm(b))
                } else {
                    (self.n(b, c) * self.norm(c), self.norm(a))
                };
                debug_assert!(num % den == 0);
                num / den
            }
        }
    }

    /// Coroot `h_γ` of a positive root in the basis of simple coroots.
    pub fn coroot(&self, g: RootId) -> Vec<i64> {
        let n = self.norms[g];
        self.coeffs[g]
            .iter()
            .zip(&self.symmetrizer)
            .map(|(&c, &d)| c as i64 * 2 * d as i64 / n)
            .collect()
    }

    /// `⟨γ, α_i^∨⟩`: the eigenvalue of `h_i` on `e_γ`.
    fn pairing(&self, s: Signed, i: usize) -> i64 {
        let v: i64 = self.coeffs[s.id]
            .iter()
            .zip(&self.cartan[i])
            .map(|(&c, &a)| (c * a) as i64)
            .sum();
        if s.neg {
            -v
        } else {
            v
        }
    }

    pub fn basis_len(&self) -> usize {
        2 * self.coeffs.len() + self.rank
    }

    /// Basis index of a root vector: positives first, then negatives, then
    /// the Cartan part.
    pub fn basis_index(&self, s: Signed) -> usize {
        s.id + if s.neg { self.coeffs.len() } else { 0 }
    }

    fn basis_element(&self, k: usize) -> Result<Signed, usize> {
        let p = self.coeffs.len();
        if k < p {
            Ok(Signed::pos(k))
        } else if k < 2 * p {
            Ok(Signed::neg(k - p))
        } else {
            Err(k - 2 * p)
        }
    }

    /// Bracket of two basis vectors as a sparse combination.
    pub fn bracket_basis(&self, x: usize, y: usize) -> Vec<(usize, i64)> {
        let p = self.coeffs.len();
        match (self.basis_element(x), self.basis_element(y)) {
            (Ok(a), Ok(b)) => {
                if a == b.opposite() {
                    let h = self.coroot(a.id);
                    let s = if a.neg { -1 } else { 1 };
                    h.into_iter()
                        .enumerate()
                        .filter(|(_, c)| *c != 0)
                        .map(|(i, c)| (2 * p + i, s * c))
                        .collect()
                } else {
                    match self.add(a, b) {
                        Some(sum) => vec![(self.basis_index(sum), self.n(a, b))],
                        None => Vec::new(),
                    }
                }
            }
            (Err(i), Ok(b)) => vec![(y, self.pairing(b, i))].into_iter().filter(|t| t.1 != 0).collect(),
            (Ok(a), Err(i)) => vec![(x, -self.pairing(a, i))].into_iter().filter(|t| t.1 != 0).collect(),
            (Err(_), Err(_)) => Vec::new(),
        }
    }

    fn bracket(&self, u: &HashMap<usize, i64>, v: &HashMap<usize, i64>) -> HashMap<usize, i64> {
        let mut out: HashMap<usize, i64> = HashMap::new();
        for (&x, &cx) in u {
            for (&y, &cy) in v {
                for (z, cz) in self.bracket_basis(x, y) {
                    *out.entry(z).or_insert(0) += cx * cy * cz;
                }
            }
        }
        out.retain(|_, c| *c != 0);
        out
    }

    /// Jacobiator of three basis vectors; empty when the identity holds.
    pub fn jacobiator(&self, x: usize, y: usize, z: usize) -> HashMap<usize, i64> {
        let unit = |k: usize| HashMap::from([(k, 1i64)]);
        let mut total: HashMap<usize, i64> = HashMap::new();
        for (a, b, c) in [(x, y, z), (y, z, x), (z, x, y)] {
            let inner = self.bracket(&unit(b), &unit(c));
            for (k, v) in self.bracket(&unit(a), &inner) {
                *total.entry(k).or_insert(0) += v;
            }
        }
        total.retain(|_, c| *c != 0);
        total
    }

    /// Checks antisymmetry and `|N_{a,b}| = q + 1` on every positive pair.
    pub fn check_root_strings(&self) -> bool {
        let p = self.coeffs.len();
        for a in 0..p {
            for b in 0..p {
                let (sa, sb) = (Signed::pos(a), Signed::pos(b));
                let v = self.n(sa, sb);
                if self.add(sa, sb).is_none() {
                    if v != 0 {
                        return false;
                    }
                    continue;
                }
                if v != -self.n(sb, sa) || v.abs() != self.string_below(b, a) + 1 {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{Family, SimpleType};

    fn sc(f: Family, n: usize, choice: SignChoice) -> (RootSystem, StructureConstants) {
        let rs = RootSystem::new(SimpleType::new(f, n).unwrap());
        let sc = StructureConstants::with_signs(&rs, choice);
        (rs, sc)
    }

    #[test]
    fn a2_and_g2_magnitudes() {
        let (rs, s) = sc(Family::A, 2, SignChoice::Standard);
        let (a1, a2) = (Signed::pos(rs.simple(0)), Signed::pos(rs.simple(1)));
        assert_eq!(s.n(a1, a2).abs(), 1);

        let (rs, s) = sc(Family::G, 2, SignChoice::Standard);
        let (a1, a2) = (rs.simple(0), rs.simple(1));
        let a12 = rs.find(&[1, 1]).unwrap();
        assert_eq!(s.n(Signed::pos(a2), Signed::pos(a1)).abs(), 1);
        assert_eq!(s.n(Signed::pos(a1), Signed::pos(a12)).abs(), 2);
    }

    #[test]
    fn jacobi_small_triple_closes() {
        let (rs, s) = sc(Family::A, 2, SignChoice::Standard);
        let x = s.basis_index(Signed::pos(rs.simple(0)));
        let y = s.basis_index(Signed::pos(rs.simple(1)));
        let z = s.basis_index(Signed::neg(rs.find(&[1, 1]).unwrap()));
        assert!(s.jacobiator(x, y, z).is_empty());
    }

    #[test]
    fn root_strings_all_types() {
        for t in SimpleType::all_up_to(8) {
            let rs = RootSystem::new(t);
            for choice in [SignChoice::Standard, SignChoice::Alternating, SignChoice::LastSimple] {
                let s = StructureConstants::with_signs(&rs, choice);
                assert!(s.check_root_strings(), "{t} {choice:?}");
            }
        }
    }

    #[test]
    fn jacobi_exhaustive_rank_two() {
        for (f, n) in [(Family::A, 2), (Family::B, 2), (Family::C, 2), (Family::G, 2)] {
            for choice in [SignChoice::Standard, SignChoice::Alternating, SignChoice::LastSimple] {
                let (_, s) = sc(f, n, choice);
                let m = s.basis_len();
                for x in 0..m {
                    for y in 0..m {
                        for z in 0..m {
                            assert!(s.jacobiator(x, y, z).is_empty(), "{f}{n} {choice:?} ({x},{y},{z})");
                        }
                    }
                }
            }
        }
    }
}
