//! Classification predicates built on top of the nilradical and stabiliser
//! data: square integrability, commutative polarisations, freeness status,
//! transcendence degrees and census counts.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cascade::Cascade;
use crate::error::{Error, Result};
use crate::nilradical::{all_t_sets, nilradical_roots, Nilradical};
use crate::rootsys::{Family, RootSet, RootSystem, SimpleSet};
use crate::stabiliser::{cascade_stabiliser, has_generic_stabiliser};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "alpha")]
pub enum CpWitness {
    /// `n` is the Heisenberg nilradical `n_θ`.
    Heisenberg,
    /// `n` lies in the optimisation of the abelian nilradical `n_α`
    /// (1-based label).
    Abelian(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Freeness {
    #[serde(rename = "proven_type_AC")]
    ProvenTypeAC,
    #[serde(rename = "proven_cp")]
    ProvenCp,
    #[serde(rename = "proven_small_cascade")]
    ProvenSmallCascade,
    #[serde(rename = "proven_abelian_sandwich")]
    ProvenAbelianSandwich,
    #[serde(rename = "conjectured")]
    Conjectured,
}

impl Freeness {
    pub fn as_str(self) -> &'static str {
        match self {
            Freeness::ProvenTypeAC => "proven_type_AC",
            Freeness::ProvenCp => "proven_cp",
            Freeness::ProvenSmallCascade => "proven_small_cascade",
            Freeness::ProvenAbelianSandwich => "proven_abelian_sandwich",
            Freeness::Conjectured => "conjectured",
        }
    }
}

impl std::str::FromStr for Freeness {
    type Err = Error;

    fn from_str(s: &str) -> Result<Freeness> {
        [
            Freeness::ProvenTypeAC,
            Freeness::ProvenCp,
            Freeness::ProvenSmallCascade,
            Freeness::ProvenAbelianSandwich,
            Freeness::Conjectured,
        ]
        .into_iter()
        .find(|f| f.as_str() == s)
        .ok_or_else(|| Error::Parse(format!("unknown freeness status {s:?}")))
    }
}

impl std::fmt::Display for Freeness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub square_integrable: bool,
    pub has_cp: bool,
    pub cp_witness: Option<CpWitness>,
    pub freeness: Freeness,
    pub trdeg_su: usize,
    pub trdeg_sn: usize,
    /// Finite generation of the Poisson centre holds in general; carried as
    /// a flag, not computed.
    pub finitely_generated: bool,
    /// Likewise for rational singularities of the Poisson centre.
    pub rational_singularities: bool,
}

impl ClassificationReport {
    pub fn new(rs: &RootSystem, cascade: &Cascade, n: &Nilradical) -> ClassificationReport {
        let cp_witness = has_cp(rs, cascade, n);
        ClassificationReport {
            square_integrable: is_square_integrable(cascade, n),
            has_cp: cp_witness.is_some(),
            cp_witness,
            freeness: freeness_status(rs, cascade, n),
            trdeg_su: n.cascade_indices.len(),
            trdeg_sn: n.index,
            finitely_generated: true,
            rational_singularities: true,
        }
    }
}

/// Depth at most two, with every cascade root of `n` in the top graded piece.
pub fn is_square_integrable(cascade: &Cascade, n: &Nilradical) -> bool {
    n.depth <= 2
        && n
            .cascade_indices
            .iter()
            .all(|&j| n.centre_roots.contains(&cascade.root(j)))
}

/// Square-integrable `T`, split into depth 1 and depth 2.
pub fn square_integrable_census(rs: &RootSystem, cascade: &Cascade) -> (Vec<SimpleSet>, Vec<SimpleSet>) {
    let mut shallow = Vec::new();
    let mut deep = Vec::new();
    for t in all_t_sets(rs.rank()) {
        let n = Nilradical::new(rs, cascade, &t).expect("valid subset");
        if is_square_integrable(cascade, &n) {
            if n.depth == 1 {
                shallow.push(t);
            } else {
                deep.push(t);
            }
        }
    }
    (shallow, deep)
}

/// Simple roots with `[θ:α] = 1`, i.e. those giving abelian nilradicals.
pub fn abelian_simple_roots(rs: &RootSystem) -> Vec<usize> {
    let theta = rs.root(rs.highest_root());
    (0..rs.rank()).filter(|&a| theta.coeff(a) == 1).collect()
}

/// Root set of the optimisation of `n_{α}`.
fn optimised_abelian(rs: &RootSystem, cascade: &Cascade, alpha: usize) -> Nilradical {
    Nilradical::new(rs, cascade, &SimpleSet::from([alpha]))
        .expect("single simple root")
        .optimisation(rs, cascade)
}

/// CP existence: either `n` is the Heisenberg nilradical, or it sits inside
/// the optimisation of some abelian nilradical `n_α`. Returns the first
/// clause that fires, scanning `α` in index order.
pub fn has_cp(rs: &RootSystem, cascade: &Cascade, n: &Nilradical) -> Option<CpWitness> {
    if n.roots == cascade.get(0).heisenberg {
        return Some(CpWitness::Heisenberg);
    }
    abelian_simple_roots(rs)
        .into_iter()
        .find(|&a| n.roots.is_subset(&optimised_abelian(rs, cascade, a).roots))
        .map(|a| CpWitness::Abelian(a + 1))
}

/// A simple root `α̌` for which `n ∩ n_{α̌}` is a CP-ideal of `n`, if the
/// abelian clause applies. Candidates follow the usual precautions: when
/// `Φ(Φ^{-1}(α)) = {α}` take `α`; otherwise try `α` and its partner `α'`;
/// in type A only those `α` with `K(n) = K(n_α)` are admissible. Each
/// candidate is accepted only if the intersection has dimension `b(n)`.
pub fn cp_ideal(rs: &RootSystem, cascade: &Cascade, n: &Nilradical) -> Option<(usize, RootSet)> {
    let type_a = rs.stype().family() == Family::A;
    let k = n.cascade_set();
    for a in abelian_simple_roots(rs) {
        let opt = optimised_abelian(rs, cascade, a);
        if !n.roots.is_subset(&opt.roots) {
            continue;
        }
        if type_a && opt.cascade_set() != k {
            continue;
        }
        let owner = cascade.get(cascade.phi_inverse(a));
        let mut candidates = vec![a];
        candidates.extend(owner.phi.iter().copied().filter(|&x| x != a));
        for c in candidates {
            let ab = nilradical_roots(rs, &SimpleSet::from([c]));
            let ideal: RootSet = n.roots.intersection(&ab).copied().collect();
            if ideal.len() == n.b {
                return Some((c + 1, ideal));
            }
        }
    }
    None
}

/// Which result, if any, proves that `S(n)` is free over `S(n)^U`. The
/// first matching case in priority order is reported.
pub fn freeness_status(rs: &RootSystem, cascade: &Cascade, n: &Nilradical) -> Freeness {
    if matches!(rs.stype().family(), Family::A | Family::C) {
        return Freeness::ProvenTypeAC;
    }
    if has_cp(rs, cascade, n).is_some() {
        return Freeness::ProvenCp;
    }
    if n.cascade_indices.len() <= 3 {
        return Freeness::ProvenSmallCascade;
    }
    let sandwich = abelian_simple_roots(rs).into_iter().any(|a| {
        n.t_set.contains(&a) && n.roots.is_subset(&optimised_abelian(rs, cascade, a).roots)
    });
    if sandwich {
        return Freeness::ProvenAbelianSandwich;
    }
    Freeness::Conjectured
}

/// Number of nonempty `T` whose nilradical has a generic stabiliser.
pub fn generic_census(rs: &RootSystem, cascade: &Cascade) -> Result<usize> {
    let sets: Vec<SimpleSet> = all_t_sets(rs.rank()).collect();
    let flags: Result<Vec<bool>> = sets
        .par_iter()
        .map(|t| {
            let n = Nilradical::new(rs, cascade, t)?;
            let (_, stab) = cascade_stabiliser(rs, cascade, &n)?;
            Ok(has_generic_stabiliser(rs, &n, &stab))
        })
        .collect();
    Ok(flags?.into_iter().filter(|&g| g).count())
}

/// Closed form for the generic census in type `A_n`.
pub fn sl_generic_count(n: usize) -> usize {
    if n % 2 == 1 {
        (1 << (n.div_ceil(2) + 1)) - 3
    } else {
        3 * ((1 << (n / 2)) - 1)
    }
}

/// The symmetry test for `sl_{n+1}`: with `k = |K(n)|`,
/// `σ(T ∩ {α_1..α_{k-1}}) = T ∩ {α_{n+2-k}..α_n}` where `σ(i) = n+1-i`.
pub fn sl_symmetry_predicate(rs: &RootSystem, n: &Nilradical) -> Result<bool> {
    if rs.stype().family() != Family::A {
        return Err(Error::WrongType(rs.stype().to_string()));
    }
    let rank = rs.rank();
    let k = n.cascade_indices.len();
    // 1-based labels throughout.
    let t: Vec<usize> = n.labels();
    let left: SimpleSet = t.iter().copied().filter(|&i| i < k).map(|i| rank + 1 - i).collect();
    let right: SimpleSet = t.iter().copied().filter(|&i| i + k >= rank + 2).collect();
    Ok(left == right)
}

/// `Σ_{j=1}^{k} C(N-k, j)`: the number of generators of the Poisson centre
/// of `n_T ⊂ sl_N` with `T = {α_{N-k}, …, α_{N-1}}`.
pub fn sl_generator_count(big_n: u64, k: u64) -> u64 {
    let m = big_n - k;
    (1..=k).map(|j| binomial(m, j)).sum()
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::SimpleType;

    fn setup(f: Family, n: usize) -> (RootSystem, Cascade) {
        let rs = RootSystem::new(SimpleType::new(f, n).unwrap());
        let c = Cascade::new(&rs);
        (rs, c)
    }

    fn nil(rs: &RootSystem, c: &Cascade, t: &[usize]) -> Nilradical {
        Nilradical::from_labels(rs, c, t).unwrap()
    }

    #[test]
    fn square_integrable_examples() {
        let (rs, c) = setup(Family::B, 3);
        assert!(is_square_integrable(&c, &nil(&rs, &c, &[2])));
        let (rs, c) = setup(Family::D, 4);
        let n = nil(&rs, &c, &[3, 4]);
        assert!(!is_square_integrable(&c, &n));
        assert_eq!((n.index, n.centre_roots.len()), (5, 3));
        let (rs, c) = setup(Family::A, 5);
        for a in abelian_simple_roots(&rs) {
            let n = Nilradical::new(&rs, &c, &SimpleSet::from([a])).unwrap();
            assert!(is_square_integrable(&c, &n));
        }
    }

    #[test]
    fn square_integrable_depth_two_lists() {
        let labels = |v: Vec<SimpleSet>| -> Vec<Vec<usize>> {
            v.iter().map(crate::nilradical::labels).collect()
        };
        let (rs, c) = setup(Family::C, 4);
        assert_eq!(labels(square_integrable_census(&rs, &c).1), vec![vec![1], vec![2], vec![3]]);
        let (rs, c) = setup(Family::E, 6);
        assert_eq!(labels(square_integrable_census(&rs, &c).1), vec![vec![1, 5], vec![6]]);
        let (rs, c) = setup(Family::A, 4);
        assert_eq!(labels(square_integrable_census(&rs, &c).1), vec![vec![2, 3], vec![1, 4]]);
    }

    #[test]
    fn cp_in_types_a_and_c() {
        for (f, r) in [(Family::A, 5), (Family::C, 4)] {
            let (rs, c) = setup(f, r);
            for t in all_t_sets(r) {
                let n = Nilradical::new(&rs, &c, &t).unwrap();
                assert!(has_cp(&rs, &c, &n).is_some(), "{f}{r} {t:?}");
                let (_, ideal) = cp_ideal(&rs, &c, &n).expect("CP-ideal");
                assert_eq!(ideal.len(), n.b);
            }
        }
    }

    #[test]
    fn cp_only_heisenberg_without_abelian_nilradicals() {
        for (f, r) in [(Family::G, 2), (Family::F, 4), (Family::E, 8)] {
            let (rs, c) = setup(f, r);
            for t in all_t_sets(r) {
                let n = Nilradical::new(&rs, &c, &t).unwrap();
                let w = has_cp(&rs, &c, &n);
                if t == c.get(0).phi {
                    assert_eq!(w, Some(CpWitness::Heisenberg));
                } else {
                    assert_eq!(w, None, "{f}{r} {t:?}");
                }
            }
        }
    }

    #[test]
    fn no_cp_spot_checks() {
        // Square-integrable B_n, T = {α_2k} with k ≥ 2.
        for r in 4..=8 {
            let (rs, c) = setup(Family::B, r);
            for a in (4..=r).step_by(2) {
                assert_eq!(has_cp(&rs, &c, &nil(&rs, &c, &[a])), None, "B{r} α{a}");
            }
        }
        let (rs, c) = setup(Family::E, 8);
        assert_eq!(has_cp(&rs, &c, &nil(&rs, &c, &[7])), None);
        let (rs, c) = setup(Family::F, 4);
        assert_eq!(has_cp(&rs, &c, &nil(&rs, &c, &[1])), None);
    }

    #[test]
    fn freeness_examples() {
        let (rs, c) = setup(Family::C, 5);
        for t in all_t_sets(5) {
            let n = Nilradical::new(&rs, &c, &t).unwrap();
            assert_eq!(freeness_status(&rs, &c, &n), Freeness::ProvenTypeAC);
        }
        let (rs, c) = setup(Family::E, 8);
        assert_eq!(freeness_status(&rs, &c, &nil(&rs, &c, &[1])), Freeness::ProvenCp);
        let n = nil(&rs, &c, &[4]);
        let want = if n.cascade_indices.len() <= 3 {
            Freeness::ProvenSmallCascade
        } else {
            Freeness::Conjectured
        };
        assert_eq!(freeness_status(&rs, &c, &n), want);
    }

    #[test]
    fn generic_census_counts() {
        for (r, want) in [(3, 5), (4, 9), (5, 13), (6, 21)] {
            let (rs, c) = setup(Family::A, r);
            assert_eq!(generic_census(&rs, &c).unwrap(), want);
            assert_eq!(sl_generic_count(r), want);
        }
        let (rs, c) = setup(Family::C, 4);
        assert_eq!(generic_census(&rs, &c).unwrap(), 15);
    }

    #[test]
    fn symmetry_predicate() {
        let (rs, c) = setup(Family::A, 3);
        assert!(!sl_symmetry_predicate(&rs, &nil(&rs, &c, &[1, 2])).unwrap());
        assert!(sl_symmetry_predicate(&rs, &nil(&rs, &c, &[1, 2, 3])).unwrap());
        let (rs, c) = setup(Family::C, 3);
        assert!(matches!(
            sl_symmetry_predicate(&rs, &nil(&rs, &c, &[1])),
            Err(Error::WrongType(_))
        ));
    }

    #[test]
    fn symmetry_agrees_with_generic() {
        for r in 1..=8 {
            let (rs, c) = setup(Family::A, r);
            for t in all_t_sets(r) {
                let n = Nilradical::new(&rs, &c, &t).unwrap();
                let (_, stab) = cascade_stabiliser(&rs, &c, &n).unwrap();
                assert_eq!(
                    sl_symmetry_predicate(&rs, &n).unwrap(),
                    has_generic_stabiliser(&rs, &n, &stab),
                    "A{r} {:?}",
                    n.labels()
                );
            }
        }
    }

    #[test]
    fn generator_counts() {
        assert_eq!(sl_generator_count(5, 2), 6);
        for big_n in 2..10 {
            assert_eq!(sl_generator_count(big_n, 1), big_n - 1);
        }
        assert_eq!(sl_generator_count(4, 2), 3);
        let (rs, c) = setup(Family::A, 3);
        assert_eq!(nil(&rs, &c, &[2, 3]).index, 3);
    }

    #[test]
    fn report_transcendence_degrees() {
        let (rs, c) = setup(Family::E, 6);
        let n = nil(&rs, &c, &[2]);
        let rep = ClassificationReport::new(&rs, &c, &n);
        assert_eq!((rep.trdeg_su, rep.trdeg_sn), (3, 13));
        assert!(rep.finitely_generated && rep.rational_singularities);
    }
}
