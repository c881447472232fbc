//! The Kostant cascade: a maximal family of strongly orthogonal positive
//! roots, obtained by repeatedly taking highest roots of orthogonal
//! complements.
//!
//! Each cascade element `β` owns a Heisenberg subset: the roots of its
//! irreducible subsystem that are not orthogonal to `β`. These subsets
//! partition the positive roots, and the simple roots inside them (the `Φ`
//! labels) partition the simple roots.

use std::collections::BTreeSet;

use crate::rootsys::{RootId, RootSet, RootSystem, SimpleSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CascadeElement {
    pub root: RootId,
    pub parent: Option<usize>,
    /// Support of the root; the simple roots of its irreducible subsystem.
    pub subsystem_simples: SimpleSet,
    /// Simple roots lying in the Heisenberg subset (one or two of them).
    pub phi: SimpleSet,
    pub heisenberg: RootSet,
}

/// Cascade elements numbered depth first from `θ`, siblings ordered by the
/// lexicographic order of their supports. Parents always precede children.
#[derive(Debug, Clone)]
pub struct Cascade {
    elements: Vec<CascadeElement>,
    /// `owner[γ]` is the cascade index whose Heisenberg subset contains `γ`.
    owner: Vec<usize>,
    /// `phi_inverse[α]` is the cascade index with `α ∈ Φ(β)`.
    phi_inverse: Vec<usize>,
}

impl Cascade {
    pub fn new(rs: &RootSystem) -> Cascade {
        let mut elements = Vec::new();
        let all: SimpleSet = (0..rs.rank()).collect();
        for comp in rs.components(&all) {
            descend(rs, comp, None, &mut elements);
        }

        let mut owner = vec![usize::MAX; rs.len()];
        let mut phi_inverse = vec![usize::MAX; rs.rank()];
        for (k, el) in elements.iter().enumerate() {
            for &g in &el.heisenberg {
                owner[g] = k;
            }
            for &a in &el.phi {
                phi_inverse[a] = k;
            }
        }
        Cascade {
            elements,
            owner,
            phi_inverse,
        }
    }

    pub fn elements(&self) -> &[CascadeElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn get(&self, i: usize) -> &CascadeElement {
        &self.elements[i]
    }

    pub fn root(&self, i: usize) -> RootId {
        self.elements[i].root
    }

    /// The cascade index `j` with `α ∈ Φ(β_j)`.
    pub fn phi_inverse(&self, alpha: usize) -> usize {
        self.phi_inverse[alpha]
    }

    /// The cascade index whose Heisenberg subset contains `γ`.
    pub fn owner(&self, g: RootId) -> usize {
        self.owner[g]
    }

    pub fn index_of_root(&self, g: RootId) -> Option<usize> {
        self.elements.iter().position(|el| el.root == g)
    }

    pub fn roots(&self) -> RootSet {
        self.elements.iter().map(|el| el.root).collect()
    }

    /// `(parent, child)` pairs of the Hasse diagram, in child order.
    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        self.elements
            .iter()
            .enumerate()
            .filter_map(|(j, el)| el.parent.map(|i| (i, j)))
            .collect()
    }

    pub fn children(&self, i: usize) -> Vec<usize> {
        self.elements
            .iter()
            .enumerate()
            .filter(|(_, el)| el.parent == Some(i))
            .map(|(j, _)| j)
            .collect()
    }

    /// `β_j ≼ β_i` in the cascade poset, i.e. `β_i` is `β_j` or one of its
    /// ancestors.
    pub fn below(&self, j: usize, i: usize) -> bool {
        let mut cur = Some(j);
        while let Some(k) = cur {
            if k == i {
                return true;
            }
            cur = self.elements[k].parent;
        }
        false
    }

    /// Structural checks: strong orthogonality, the Heisenberg subsets
    /// partition `Δ⁺`, the `Φ` labels partition `Π` with one or two labels
    /// each, and parents strictly dominate children.
    pub fn check_invariants(&self, rs: &RootSystem) -> Result<(), String> {
        let ty = rs.stype();
        for (i, a) in self.elements.iter().enumerate() {
            for b in &self.elements[i + 1..] {
                let (x, y) = (rs.root(a.root).coeffs(), rs.root(b.root).coeffs());
                let plus: Vec<i32> = x.iter().zip(y).map(|(p, q)| p + q).collect();
                let minus: Vec<i32> = x.iter().zip(y).map(|(p, q)| p - q).collect();
                if rs.inner(x, y) != 0 || rs.is_root(&plus) || rs.is_root(&minus) {
                    return Err(format!("{ty}: {} and {} are not strongly orthogonal", rs.root(a.root), rs.root(b.root)));
                }
            }
        }
        let mut seen = vec![0usize; rs.len()];
        for el in &self.elements {
            for &g in &el.heisenberg {
                seen[g] += 1;
            }
        }
        if let Some(g) = seen.iter().position(|&k| k != 1) {
            return Err(format!("{ty}: {} lies in {} Heisenberg subsets", rs.root(g), seen[g]));
        }
        let mut labels = vec![0usize; rs.rank()];
        for (i, el) in self.elements.iter().enumerate() {
            if !(1..=2).contains(&el.phi.len()) {
                return Err(format!("{ty}: β_{} has {} Φ labels", i + 1, el.phi.len()));
            }
            for &a in &el.phi {
                labels[a] += 1;
            }
            if let Some(p) = el.parent {
                if p >= i || !rs.leq(el.root, self.elements[p].root) {
                    return Err(format!("{ty}: β_{} does not dominate β_{}", p + 1, i + 1));
                }
            }
        }
        if let Some(a) = labels.iter().position(|&k| k != 1) {
            return Err(format!("{ty}: α{} carries {} Φ labels", a + 1, labels[a]));
        }
        Ok(())
    }

    /// Minimal elements of a subset of cascade indices.
    pub fn minimal(&self, subset: &BTreeSet<usize>) -> BTreeSet<usize> {
        subset
            .iter()
            .copied()
            .filter(|&j| !subset.iter().any(|&k| k != j && self.below(k, j)))
            .collect()
    }
}

fn descend(rs: &RootSystem, simples: SimpleSet, parent: Option<usize>, out: &mut Vec<CascadeElement>) {
    if simples.is_empty() {
        return;
    }
    let sub = rs.roots_supported_in(&simples);
    // Highest root of the irreducible subsystem: the unique one of maximal height.
    let beta = *sub
        .iter()
        .max_by_key(|&&g| rs.root(g).height())
        .expect("nonempty subsystem");
    let beta_coeffs = rs.root(beta).coeffs().to_vec();
    let heisenberg: RootSet = sub
        .iter()
        .copied()
        .filter(|&g| rs.inner(rs.root(g).coeffs(), &beta_coeffs) != 0)
        .collect();
    let phi: SimpleSet = simples
        .iter()
        .copied()
        .filter(|&a| heisenberg.contains(&rs.simple(a)))
        .collect();
    let me = out.len();
    out.push(CascadeElement {
        root: beta,
        parent,
        subsystem_simples: simples.clone(),
        phi: phi.clone(),
        heisenberg,
    });
    let rest: SimpleSet = simples.difference(&phi).copied().collect();
    for comp in rs.components(&rest) {
        descend(rs, comp, Some(me), out);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{Family, SimpleType};

    fn build(f: Family, n: usize) -> (RootSystem, Cascade) {
        let rs = RootSystem::new(SimpleType::new(f, n).unwrap());
        let c = Cascade::new(&rs);
        (rs, c)
    }

    #[test]
    fn a6_chain() {
        let (rs, c) = build(Family::A, 6);
        assert_eq!(c.len(), 3);
        let want = [[1, 1, 1, 1, 1, 1], [0, 1, 1, 1, 1, 0], [0, 0, 1, 1, 0, 0]];
        for (i, w) in want.iter().enumerate() {
            assert_eq!(rs.root(c.root(i)).coeffs(), w);
            assert_eq!(c.get(i).phi, SimpleSet::from([i, 5 - i]));
        }
        assert_eq!(c.hasse_edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(c.phi_inverse(0), 0);
    }

    #[test]
    fn c_chain() {
        let (rs, c) = build(Family::C, 4);
        assert_eq!(c.len(), 4);
        for i in 0..4 {
            assert_eq!(c.get(i).phi, SimpleSet::from([i]));
            assert_eq!(c.get(i).parent, i.checked_sub(1));
        }
        assert_eq!(rs.root(c.root(3)).coeffs(), &[0, 0, 0, 1]);
    }

    #[test]
    fn rank_one_has_no_edges() {
        let (_, c) = build(Family::A, 1);
        assert_eq!(c.len(), 1);
        assert!(c.hasse_edges().is_empty());
        let (_, c) = build(Family::C, 1);
        assert!(c.hasse_edges().is_empty());
    }

    #[test]
    fn e7_hasse_and_labels() {
        let (_, c) = build(Family::E, 7);
        assert_eq!(c.hasse_edges(), vec![(0, 1), (1, 2), (1, 3), (3, 4), (3, 5), (3, 6)]);
        let phis: Vec<Vec<usize>> = c.elements().iter().map(|e| e.phi.iter().map(|a| a + 1).collect()).collect();
        assert_eq!(phis, vec![vec![6], vec![2], vec![1], vec![4], vec![3], vec![5], vec![7]]);
    }

    #[test]
    fn e8_hasse() {
        let (_, c) = build(Family::E, 8);
        assert_eq!(
            c.hasse_edges(),
            vec![(0, 1), (1, 2), (2, 3), (2, 4), (4, 5), (4, 6), (4, 7)]
        );
    }

    #[test]
    fn phi_inverse_examples() {
        let (rs, c) = build(Family::E, 6);
        let j = c.phi_inverse(2);
        assert_eq!(j, 3);
        assert_eq!(c.root(j), rs.simple(2));
        let (rs, c) = build(Family::B, 5);
        let j = c.phi_inverse(4);
        assert_eq!(c.root(j), rs.simple(4));
    }

    #[test]
    fn minimal_elements() {
        let (_, c) = build(Family::E, 7);
        let all: BTreeSet<usize> = (0..7).collect();
        assert_eq!(c.minimal(&all), BTreeSet::from([2, 4, 5, 6]));
    }

    #[test]
    fn invariants_hold_everywhere() {
        for t in SimpleType::all_up_to(8) {
            let rs = RootSystem::new(t);
            let c = Cascade::new(&rs);
            assert_eq!(c.check_invariants(&rs), Ok(()), "{t}");
        }
    }
}
