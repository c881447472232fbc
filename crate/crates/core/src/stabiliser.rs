//! Stabiliser of a cascade point in the coadjoint representation, the
//! generic-stabiliser test, and the Frobenius semiradical.
//!
//! Everything here is combinatorial: the stabiliser at a cascade point is a
//! sum of root spaces, so it is described by its root set. The oracle module
//! checks these root sets against honest linear algebra.

use std::collections::BTreeMap;

use crate::cascade::Cascade;
use crate::error::{Error, Result};
use crate::nilradical::Nilradical;
use crate::rootsys::{RootId, RootSet, RootSystem};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabiliserReport {
    /// `C_n(j) = Δ(h_j) \ Δ(n)` for every `β_j ∈ K(n)`.
    pub complements: BTreeMap<usize, RootSet>,
    pub stab_roots: RootSet,
    pub generic: bool,
    /// First pair `(δ, δ')` of stabiliser roots with `δ - δ' ∈ Δ(n)`.
    pub witness: Option<(RootId, RootId)>,
    pub frobenius_roots: RootSet,
    pub quasi_quadratic: bool,
}

impl StabiliserReport {
    pub fn new(rs: &RootSystem, cascade: &Cascade, n: &Nilradical) -> Result<StabiliserReport> {
        let (complements, stab_roots) = cascade_stabiliser(rs, cascade, n)?;
        let witness = generic_witness(rs, n, &stab_roots);
        let frobenius_roots = frobenius_semiradical(rs, &stab_roots);
        let quasi_quadratic = frobenius_roots == n.roots;
        let by_criterion = quasi_quadratic_criterion(rs, cascade, n);
        if by_criterion != quasi_quadratic {
            return Err(Error::CriterionMismatch { t: n.labels() });
        }
        Ok(StabiliserReport {
            complements,
            stab_roots,
            generic: witness.is_none(),
            witness,
            frobenius_roots,
            quasi_quadratic,
        })
    }

    pub fn frobenius_dim(&self) -> usize {
        self.frobenius_roots.len()
    }
}

/// Root set of the stabiliser `n^ξ̄` of a cascade point, together with the
/// complements `C_n(j)`.
///
/// It is `{β_j - γ : γ ∈ C_n(j)} ⊔ K(n)`. Each `β_j - γ` must be a root of
/// `n`, the union must be disjoint, and its size must equal `ind n`; any
/// violation is reported as [`Error::InternalInconsistency`].
pub fn cascade_stabiliser(
    rs: &RootSystem,
    cascade: &Cascade,
    n: &Nilradical,
) -> Result<(BTreeMap<usize, RootSet>, RootSet)> {
    let mut complements = BTreeMap::new();
    let mut stab: RootSet = n.cascade_roots(cascade);
    for &j in &n.cascade_indices {
        let beta = cascade.root(j);
        let missing: RootSet = cascade
            .get(j)
            .heisenberg
            .difference(&n.roots)
            .copied()
            .collect();
        for &g in &missing {
            let d = rs.difference(beta, g).ok_or_else(|| {
                Error::InternalInconsistency(format!(
                    "β_{} - {} is not a positive root",
                    j + 1,
                    rs.root(g)
                ))
            })?;
            if !n.contains(d) {
                return Err(Error::InternalInconsistency(format!(
                    "β_{} - {} lies outside n",
                    j + 1,
                    rs.root(g)
                )));
            }
            if !stab.insert(d) {
                return Err(Error::InternalInconsistency(format!(
                    "stabiliser root {} counted twice",
                    rs.root(d)
                )));
            }
        }
        complements.insert(j, missing);
    }
    if stab.len() != n.index {
        return Err(Error::InternalInconsistency(format!(
            "stabiliser has {} roots but ind n = {}",
            stab.len(),
            n.index
        )));
    }
    Ok((complements, stab))
}

/// The first ordered pair `(δ, δ')` of distinct stabiliser roots whose
/// difference is a root of `n`, scanning in canonical root order. `None`
/// means the stabiliser is generic.
pub fn generic_witness(rs: &RootSystem, n: &Nilradical, stab_roots: &RootSet) -> Option<(RootId, RootId)> {
    for &d in stab_roots {
        for &e in stab_roots {
            if d == e {
                continue;
            }
            if let Some(diff) = rs.difference(d, e) {
                if n.contains(diff) {
                    return Some((d, e));
                }
            }
        }
    }
    None
}

pub fn has_generic_stabiliser(rs: &RootSystem, n: &Nilradical, stab_roots: &RootSet) -> bool {
    generic_witness(rs, n, stab_roots).is_none()
}

/// Upper closure of `seed` in the root order, built by adding simple roots
/// one at a time.
pub fn frobenius_semiradical(rs: &RootSystem, seed: &RootSet) -> RootSet {
    let mut closure = seed.clone();
    let mut frontier: Vec<RootId> = seed.iter().copied().collect();
    while let Some(g) = frontier.pop() {
        for i in 0..rs.rank() {
            if let Some(h) = rs.sum(g, rs.simple(i)) {
                if closure.insert(h) {
                    frontier.push(h);
                }
            }
        }
    }
    closure
}

/// Direct test of the quasi-quadratic criterion: every `α ∈ T` is either a
/// cascade root, or `Φ(Φ^{-1}(α)) = {α, α'}` and the Dynkin chain from `α`
/// to `α'` inside `supp(Φ^{-1}(α))` meets `T` only in `α`.
pub fn quasi_quadratic_criterion(rs: &RootSystem, cascade: &Cascade, n: &Nilradical) -> bool {
    n.t_set.iter().all(|&a| {
        let j = cascade.phi_inverse(a);
        let el = cascade.get(j);
        if el.root == rs.simple(a) {
            return true;
        }
        if el.phi.len() != 2 {
            return false;
        }
        let other = *el.phi.iter().find(|&&x| x != a).expect("two labels");
        match rs.diagram_path(a, other, &el.subsystem_simples) {
            Some(chain) => chain.iter().all(|v| *v == a || !n.t_set.contains(v)),
            None => false,
        }
    })
}

/// Evaluates the criterion and the closure independently and insists they
/// agree.
pub fn is_quasi_quadratic(rs: &RootSystem, cascade: &Cascade, n: &Nilradical) -> Result<bool> {
    let (_, stab) = cascade_stabiliser(rs, cascade, n)?;
    let closure = frobenius_semiradical(rs, &stab);
    let by_closure = closure == n.roots;
    if by_closure != quasi_quadratic_criterion(rs, cascade, n) {
        return Err(Error::CriterionMismatch { t: n.labels() });
    }
    Ok(by_closure)
}
