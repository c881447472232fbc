//! Nilradicals `n_T` of standard parabolic subalgebras, keyed by the set
//! `T` of simple roots they contain.

use std::collections::BTreeSet;

use crate::cascade::Cascade;
use crate::error::{Error, Result};
use crate::rootsys::{RootId, RootSet, RootSystem, SimpleSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Nilradical {
    pub t_set: SimpleSet,
    /// Roots with a positive coefficient on some element of `T`.
    pub roots: RootSet,
    /// `grading[i - 1]` holds the roots of `T`-degree `i`.
    pub grading: Vec<RootSet>,
    pub depth: usize,
    pub centre_roots: RootSet,
    /// Cascade indices of `K_T`, in cascade order.
    pub cascade_indices: Vec<usize>,
    /// Support `T̃` of the optimisation.
    pub tilde_t: SimpleSet,
    /// `|Δ(n_{T̃})|`.
    pub tilde_dim: usize,
    pub dim: usize,
    pub index: usize,
    pub b: usize,
}

/// `Σ_{α∈T} [γ : α]`.
pub fn t_degree(rs: &RootSystem, t_set: &SimpleSet, g: RootId) -> usize {
    let r = rs.root(g);
    t_set.iter().map(|&a| r.coeff(a) as usize).sum()
}

/// Converts 1-based labels to a 0-based simple-root set, checking the range.
pub fn simple_set_from_labels(rs: &RootSystem, labels: &[usize]) -> Result<SimpleSet> {
    let rank = rs.rank();
    labels
        .iter()
        .map(|&l| {
            if (1..=rank).contains(&l) {
                Ok(l - 1)
            } else {
                Err(Error::SimpleRootOutOfRange { index: l, rank })
            }
        })
        .collect()
}

pub fn labels(set: &SimpleSet) -> Vec<usize> {
    set.iter().map(|a| a + 1).collect()
}

/// Root set of `n_T` without any of the derived data.
pub fn nilradical_roots(rs: &RootSystem, t_set: &SimpleSet) -> RootSet {
    (0..rs.len()).filter(|&g| t_degree(rs, t_set, g) >= 1).collect()
}

impl Nilradical {
    pub fn new(rs: &RootSystem, cascade: &Cascade, t_set: &SimpleSet) -> Result<Nilradical> {
        if t_set.is_empty() {
            return Err(Error::EmptyT);
        }
        if let Some(&bad) = t_set.iter().find(|&&a| a >= rs.rank()) {
            return Err(Error::SimpleRootOutOfRange {
                index: bad + 1,
                rank: rs.rank(),
            });
        }
        let depth = t_degree(rs, t_set, rs.highest_root());
        let mut grading = vec![RootSet::new(); depth];
        let mut roots = RootSet::new();
        for g in 0..rs.len() {
            let d = t_degree(rs, t_set, g);
            if d >= 1 {
                roots.insert(g);
                grading[d - 1].insert(g);
            }
        }
        let centre_roots = grading[depth - 1].clone();
        let cascade_indices: Vec<usize> = (0..cascade.len())
            .filter(|&j| roots.contains(&cascade.root(j)))
            .collect();
        let tilde_t: SimpleSet = cascade_indices
            .iter()
            .flat_map(|&j| cascade.get(j).phi.iter().copied())
            .collect();
        let tilde_dim = nilradical_roots(rs, &tilde_t).len();
        let dim = roots.len();
        if tilde_dim < dim {
            return Err(Error::InternalInconsistency(format!(
                "optimisation of T = {:?} is smaller than the nilradical",
                labels(t_set)
            )));
        }
        let index = tilde_dim - dim + cascade_indices.len();
        if !(dim + index).is_multiple_of(2) {
            return Err(Error::InternalInconsistency(format!(
                "dim + ind is odd for T = {:?}",
                labels(t_set)
            )));
        }
        Ok(Nilradical {
            t_set: t_set.clone(),
            roots,
            grading,
            depth,
            centre_roots,
            cascade_indices,
            tilde_t,
            tilde_dim,
            dim,
            index,
            b: (dim + index) / 2,
        })
    }

    /// Builds `n_T` from 1-based simple-root labels.
    pub fn from_labels(rs: &RootSystem, cascade: &Cascade, labels: &[usize]) -> Result<Nilradical> {
        let t = simple_set_from_labels(rs, labels)?;
        Nilradical::new(rs, cascade, &t)
    }

    pub fn labels(&self) -> Vec<usize> {
        labels(&self.t_set)
    }

    pub fn is_optimal(&self) -> bool {
        self.t_set == self.tilde_t
    }

    pub fn optimisation(&self, rs: &RootSystem, cascade: &Cascade) -> Nilradical {
        Nilradical::new(rs, cascade, &self.tilde_t).expect("T̃ contains T and is nonempty")
    }

    pub fn depth_and_centre(&self) -> (usize, &RootSet) {
        (self.depth, &self.centre_roots)
    }

    pub fn is_abelian(&self) -> bool {
        self.depth == 1
    }

    pub fn cascade_set(&self) -> BTreeSet<usize> {
        self.cascade_indices.iter().copied().collect()
    }

    pub fn cascade_roots(&self, cascade: &Cascade) -> RootSet {
        self.cascade_indices.iter().map(|&j| cascade.root(j)).collect()
    }

    pub fn contains(&self, g: RootId) -> bool {
        self.roots.contains(&g)
    }

    /// Graded degree of a root of `n`, or 0 when the root is outside `n`.
    pub fn degree(&self, rs: &RootSystem, g: RootId) -> usize {
        t_degree(rs, &self.t_set, g)
    }
}

/// Every nonempty subset of the simple roots, in increasing bitmask order.
pub fn all_t_sets(rank: usize) -> impl Iterator<Item = SimpleSet> {
    (1u64..(1u64 << rank)).map(move |mask| (0..rank).filter(|i| mask >> i & 1 == 1).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{Family, SimpleType};

    fn setup(f: Family, n: usize) -> (RootSystem, Cascade) {
        let rs = RootSystem::new(SimpleType::new(f, n).unwrap());
        let c = Cascade::new(&rs);
        (rs, c)
    }

    #[test]
    fn sl7_worked_example() {
        let (rs, c) = setup(Family::A, 6);
        let n = Nilradical::from_labels(&rs, &c, &[2, 6]).unwrap();
        assert_eq!(n.dim, 14);
        assert_eq!(n.cascade_indices, vec![0, 1]);
        assert_eq!(labels(&n.tilde_t), vec![1, 2, 5, 6]);
        assert_eq!(n.index, 6);
        assert_eq!(n.b, 10);
        assert!(!n.is_optimal());
        let opt = n.optimisation(&rs, &c);
        assert_eq!(opt.index, 2);
        assert_eq!(opt.b, 10);
        assert!(opt.is_optimal());
        assert_eq!(n.depth, 2);
    }

    #[test]
    fn sl5_and_e6_examples() {
        let (rs, c) = setup(Family::A, 4);
        let n = Nilradical::from_labels(&rs, &c, &[3, 4]).unwrap();
        assert_eq!((n.dim, n.cascade_indices.len(), n.index), (7, 2, 5));
        assert_eq!(n.tilde_dim, rs.len());

        let (rs, c) = setup(Family::E, 6);
        let n = Nilradical::from_labels(&rs, &c, &[2]).unwrap();
        assert_eq!((n.dim, n.cascade_indices.len(), n.index), (25, 3, 13));
    }

    #[test]
    fn empty_and_out_of_range() {
        let (rs, c) = setup(Family::A, 3);
        assert!(matches!(Nilradical::new(&rs, &c, &SimpleSet::new()), Err(Error::EmptyT)));
        assert!(matches!(
            Nilradical::from_labels(&rs, &c, &[4]),
            Err(Error::SimpleRootOutOfRange { index: 4, rank: 3 })
        ));
        assert!(Nilradical::from_labels(&rs, &c, &[0]).is_err());
    }

    #[test]
    fn optimisation_examples() {
        let (rs, c) = setup(Family::C, 3);
        let n = Nilradical::from_labels(&rs, &c, &[2]).unwrap();
        assert_eq!(labels(&n.tilde_t), vec![1, 2]);
        assert_eq!(n.cascade_indices, vec![0, 1]);

        let (rs, c) = setup(Family::A, 6);
        let n = Nilradical::from_labels(&rs, &c, &[1, 2, 5, 6]).unwrap();
        assert!(n.is_optimal());
        assert_eq!(n.optimisation(&rs, &c), n);

        // Heisenberg nilradical: T = Φ(θ).
        for t in SimpleType::all_up_to(6) {
            let rs = RootSystem::new(t);
            let c = Cascade::new(&rs);
            let n = Nilradical::new(&rs, &c, &c.get(0).phi).unwrap();
            assert!(n.is_optimal(), "{t}");
            assert_eq!(n.roots, c.get(0).heisenberg);
        }
    }

    #[test]
    fn depth_examples() {
        let (rs, c) = setup(Family::G, 2);
        let n = Nilradical::from_labels(&rs, &c, &[2]).unwrap();
        assert_eq!(n.depth, 2);
        let (rs, c) = setup(Family::A, 4);
        let n = Nilradical::from_labels(&rs, &c, &[2]).unwrap();
        let (d, z) = n.depth_and_centre();
        assert_eq!(d, 1);
        assert_eq!(z, &n.roots);
        assert!(n.is_abelian());
    }

    #[test]
    fn subsets_enumeration() {
        assert_eq!(all_t_sets(3).count(), 7);
        assert_eq!(all_t_sets(3).next().unwrap(), SimpleSet::from([0]));
    }
}
