//! A root system with its cascade (and, on demand, structure constants),
//! plus the batch operations behind the command line: analysis records,
//! enumeration with filters, and verification sweeps.

use std::sync::OnceLock;

use rayon::prelude::*;

use crate::cascade::Cascade;
use crate::classify::ClassificationReport;
use crate::error::{Error, Result};
use crate::golden;
use crate::nilradical::{all_t_sets, labels, simple_set_from_labels, Nilradical};
use crate::oracle::{self, chevalley::StructureConstants};
use crate::report::{AnalysisRecord, EpsilonBlock, OracleBlock};
use crate::rootsys::{Root, RootId, RootSet, RootSystem, SimpleSet, SimpleType};
use crate::stabiliser::{is_quasi_quadratic, StabiliserReport};

pub const DEFAULT_MAX_SUBSETS: usize = 4095;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Filter {
    All,
    Generic,
    SquareIntegrable,
    QuasiQuadratic,
    HasCp,
    Optimal,
}

impl Filter {
    pub fn accepts(self, r: &AnalysisRecord) -> bool {
        match self {
            Filter::All => true,
            Filter::Generic => r.generic,
            Filter::SquareIntegrable => r.square_integrable,
            Filter::QuasiQuadratic => r.quasi_quadratic,
            Filter::HasCp => r.has_cp,
            Filter::Optimal => r.optimal,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Scope {
    Cascade,
    Stabiliser,
    Index,
    All,
}

#[derive(Debug, Clone, Copy)]
pub struct AnalyzeOptions {
    pub oracle: bool,
    pub epsilon: bool,
    pub samples: usize,
    pub seed: u64,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            oracle: false,
            epsilon: false,
            samples: oracle::DEFAULT_SAMPLES,
            seed: oracle::DEFAULT_SEED,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerifySummary {
    pub nilradicals: usize,
    pub passed: usize,
    pub failed: usize,
    /// Failure messages in canonical order; the first names the first
    /// failing `T`.
    pub failures: Vec<String>,
}

impl VerifySummary {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }

    fn record(&mut self, outcome: std::result::Result<(), String>) {
        match outcome {
            Ok(()) => self.passed += 1,
            Err(msg) => {
                self.failed += 1;
                self.failures.push(msg);
            }
        }
    }
}

pub struct Lab {
    rs: RootSystem,
    cascade: Cascade,
    sc: OnceLock<StructureConstants>,
}

impl Lab {
    pub fn new(stype: SimpleType) -> Lab {
        let rs = RootSystem::new(stype);
        let cascade = Cascade::new(&rs);
        Lab {
            rs,
            cascade,
            sc: OnceLock::new(),
        }
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn cascade(&self) -> &Cascade {
        &self.cascade
    }

    pub fn structure_constants(&self) -> &StructureConstants {
        self.sc.get_or_init(|| StructureConstants::new(&self.rs))
    }

    pub fn nilradical(&self, labels: &[usize]) -> Result<Nilradical> {
        Nilradical::from_labels(&self.rs, &self.cascade, labels)
    }

    fn roots(&self, set: &RootSet) -> Vec<Root> {
        set.iter().map(|&g| self.rs.root(g).clone()).collect()
    }

    pub fn analyze(&self, t: &SimpleSet, opts: &AnalyzeOptions) -> Result<AnalysisRecord> {
        let (rs, c) = (&self.rs, &self.cascade);
        let n = Nilradical::new(rs, c, t)?;
        let stab = StabiliserReport::new(rs, c, &n)?;
        let class = ClassificationReport::new(rs, c, &n);
        let oracle = if opts.oracle {
            let o = oracle::run_oracle(self.structure_constants(), rs, c, &n, opts.samples, opts.seed)?;
            Some(OracleBlock {
                stab_dim: o.stab_dim,
                index_estimate: o.index_estimate,
                saturation_dim: o.saturation_dim,
                agrees: o.agrees,
            })
        } else {
            None
        };
        let cascade_roots: Vec<RootId> = n.cascade_indices.iter().map(|&j| c.root(j)).collect();
        let epsilon = if opts.epsilon && rs.stype().family().is_classical() {
            let show = |set: &mut dyn Iterator<Item = &RootId>| -> Vec<String> {
                set
                    .filter_map(|&g| rs.epsilon_string(rs.root(g).coeffs()))
                    .collect()
            };
            Some(EpsilonBlock {
                cascade: show(&mut cascade_roots.iter()),
                stab_roots: show(&mut stab.stab_roots.iter()),
            })
        } else {
            None
        };
        Ok(AnalysisRecord {
            lie_type: rs.stype().to_string(),
            rank: rs.rank(),
            t: n.labels(),
            dim: n.dim,
            depth: n.depth,
            dim_centre: n.centre_roots.len(),
            // Cascade order, not root order, so β_1 = θ comes first.
            cascade: cascade_roots.iter().map(|&g| rs.root(g).clone()).collect(),
            tilde_t: labels(&n.tilde_t),
            optimal: n.is_optimal(),
            index: n.index,
            b: n.b,
            stab_roots: self.roots(&stab.stab_roots),
            generic: stab.generic,
            witness: stab
                .witness
                .map(|(d, e)| (rs.root(d).clone(), rs.root(e).clone())),
            frobenius_roots: self.roots(&stab.frobenius_roots),
            frobenius_dim: stab.frobenius_dim(),
            quasi_quadratic: stab.quasi_quadratic,
            square_integrable: class.square_integrable,
            has_cp: class.has_cp,
            cp_witness: class.cp_witness,
            freeness: class.freeness,
            trdeg_su: class.trdeg_su,
            trdeg_sn: class.trdeg_sn,
            finitely_generated: class.finitely_generated,
            rational_singularities: class.rational_singularities,
            oracle,
            epsilon,
        })
    }

    pub fn analyze_labels(&self, t: &[usize], opts: &AnalyzeOptions) -> Result<AnalysisRecord> {
        let set = simple_set_from_labels(&self.rs, t)?;
        if set.is_empty() {
            return Err(Error::EmptyT);
        }
        self.analyze(&set, opts)
    }

    fn subsets(&self, max_subsets: usize) -> Result<Vec<SimpleSet>> {
        let count = (1usize << self.rs.rank()) - 1;
        if count > max_subsets {
            return Err(Error::TooManySubsets {
                count,
                cap: max_subsets,
            });
        }
        Ok(all_t_sets(self.rs.rank()).collect())
    }

    /// One record per nonempty `T` passing the filter, in canonical order.
    pub fn enumerate(&self, filter: Filter, max_subsets: usize, opts: &AnalyzeOptions) -> Result<Vec<AnalysisRecord>> {
        let sets = self.subsets(max_subsets)?;
        if opts.oracle {
            self.structure_constants();
        }
        let records: Result<Vec<AnalysisRecord>> = sets.par_iter().map(|t| self.analyze(t, opts)).collect();
        Ok(records?.into_iter().filter(|r| filter.accepts(r)).collect())
    }

    fn check_cascade(&self) -> std::result::Result<(), String> {
        golden::compare_cascade(&self.rs, &self.cascade)?;
        let want = golden::expected_cascade_size(self.rs.stype());
        if self.cascade.len() != want {
            return Err(format!("{}: |K| = {}, expected {want}", self.rs.stype(), self.cascade.len()));
        }
        self.cascade.check_invariants(&self.rs)
    }

    fn check_stabiliser(&self, n: &Nilradical) -> std::result::Result<(), String> {
        let (rs, c) = (&self.rs, &self.cascade);
        let tag = format!("{} T={:?}", rs.stype(), n.labels());
        let rep = StabiliserReport::new(rs, c, n).map_err(|e| format!("{tag}: {e}"))?;
        is_quasi_quadratic(rs, c, n).map_err(|e| format!("{tag}: {e}"))?;
        let (dim, support) = oracle::stabiliser_oracle(self.structure_constants(), rs, c, n);
        if support != rep.stab_roots || dim != n.index {
            return Err(format!(
                "{tag}: oracle stabiliser (dim {dim}, {} roots) differs from the cascade formula ({} roots)",
                support.len(),
                rep.stab_roots.len()
            ));
        }
        Ok(())
    }

    fn check_index(&self, n: &Nilradical, samples: usize, seed: u64) -> std::result::Result<(), String> {
        let (rs, c, sc) = (&self.rs, &self.cascade, self.structure_constants());
        let tag = format!("{} T={:?}", rs.stype(), n.labels());
        let ind = oracle::index_oracle(sc, rs, n, samples, seed);
        if ind != n.index {
            return Err(format!("{tag}: oracle index {ind}, formula {}", n.index));
        }
        let sat = oracle::saturation_oracle(sc, rs, c, n);
        if sat + n.tilde_dim != 2 * n.dim {
            return Err(format!("{tag}: saturation {sat}, expected {}", 2 * n.dim - n.tilde_dim));
        }
        if !oracle::tilde_stabiliser_oracle(sc, rs, c, n) {
            return Err(format!("{tag}: ñ-stabiliser differs from the n-stabiliser"));
        }
        Ok(())
    }

    /// Golden comparisons (cascade scope) and oracle agreement for every `T`
    /// (stabiliser and index scopes).
    pub fn verify(&self, scope: Scope, max_subsets: usize, samples: usize, seed: u64) -> Result<VerifySummary> {
        let mut summary = VerifySummary::default();
        if matches!(scope, Scope::Cascade | Scope::All) {
            summary.record(self.check_cascade());
        }
        if matches!(scope, Scope::Cascade) {
            return Ok(summary);
        }
        let sets = self.subsets(max_subsets)?;
        self.structure_constants();
        let outcomes: Vec<std::result::Result<(), String>> = sets
            .par_iter()
            .map(|t| {
                let n = Nilradical::new(&self.rs, &self.cascade, t).map_err(|e| e.to_string())?;
                if matches!(scope, Scope::Stabiliser | Scope::All) {
                    self.check_stabiliser(&n)?;
                }
                if matches!(scope, Scope::Index | Scope::All) {
                    self.check_index(&n, samples, seed)?;
                }
                Ok(())
            })
            .collect();
        summary.nilradicals = sets.len();
        for o in outcomes {
            summary.record(o);
        }
        Ok(summary)
    }
}
