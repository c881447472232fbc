//! Independent verification by exact linear algebra over a Chevalley basis.
//!
//! Nothing here uses the combinatorial stabiliser formula: the coadjoint
//! action is written down as an integer matrix from the structure constants
//! and its kernel, rank and column space are computed exactly.

pub mod chevalley;
pub mod linalg;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::cascade::Cascade;
use crate::error::{Error, Result};
use crate::nilradical::{nilradical_roots, Nilradical};
use crate::rootsys::{RootId, RootSet, RootSystem};
use crate::stabiliser::cascade_stabiliser;
use chevalley::{Signed, StructureConstants};
use linalg::IntMatrix;

pub const DEFAULT_SEED: u64 = 42;
pub const SEED_ENV: &str = "CASCADE_LAB_SEED";
pub const DEFAULT_SAMPLES: usize = 5;
const COORD_RANGE: i64 = 1_000_000;

/// Base seed from `CASCADE_LAB_SEED`, or 42 when unset.
pub fn base_seed() -> Result<u64> {
    match std::env::var(SEED_ENV) {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("{SEED_ENV} must be a decimal integer, got {s:?}"))),
        Err(_) => Ok(DEFAULT_SEED),
    }
}

/// Per-task seed derived from `(type, rank, T, sample)`, so results do not
/// depend on scheduling.
pub fn sample_seed(base: u64, rs: &RootSystem, n: &Nilradical, sample: usize) -> u64 {
    let key = format!("{}|{:?}|{}|{}", rs.stype(), n.labels(), sample, base);
    // FNV-1a.
    key.bytes()
        .fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub stab_dim: usize,
    pub stab_root_support: RootSet,
    pub index_estimate: usize,
    pub saturation_dim: usize,
    /// The `ñ`-stabiliser of the cascade point has the same support.
    pub tilde_agrees: bool,
    pub agrees: bool,
}

fn row_lookup(rs: &RootSystem, n: &Nilradical) -> Vec<Option<usize>> {
    let mut rows = vec![None; rs.len()];
    for (k, &g) in n.roots.iter().enumerate() {
        rows[g] = Some(k);
    }
    rows
}

/// Matrix of `x ↦ pr_{n⁻}[x, ξ̄]` for `x` ranging over the root vectors in
/// `columns`, where `ξ̄ = Σ w_j e_{-β_j}` over `K(n)`. Rows are indexed by
/// `Δ(n)` (row `δ` stands for `e_{-δ}`).
pub fn coadjoint_matrix(
    sc: &StructureConstants,
    rs: &RootSystem,
    cascade: &Cascade,
    n: &Nilradical,
    columns: &[RootId],
    weights: &[i64],
) -> IntMatrix {
    let rows = row_lookup(rs, n);
    let mut m = IntMatrix::zeros(n.dim, columns.len());
    for (&j, &w) in n.cascade_indices.iter().zip(weights) {
        let beta = cascade.root(j);
        for (col, &g) in columns.iter().enumerate() {
            // [e_γ, e_{-β}] lands in g_{γ-β}; keep it when β - γ ∈ Δ(n).
            let Some(d) = rs.difference(beta, g) else {
                continue;
            };
            if let Some(r) = rows[d] {
                m.add_to(r, col, w * sc.n(Signed::pos(g), Signed::neg(beta)));
            }
        }
    }
    m
}

fn kernel_support(m: &IntMatrix, columns: &[RootId]) -> (usize, RootSet) {
    let kernel = m.kernel();
    let mut support = RootSet::new();
    for v in &kernel {
        for (k, x) in v.iter().enumerate() {
            if *x != num_bigint::BigInt::from(0) {
                support.insert(columns[k]);
            }
        }
    }
    (kernel.len(), support)
}

fn unit_weights(n: &Nilradical) -> Vec<i64> {
    vec![1; n.cascade_indices.len()]
}

/// Dimension and root support of the stabiliser of `ξ̄ = Σ e_{-β}` in `n`.
pub fn stabiliser_oracle(sc: &StructureConstants, rs: &RootSystem, cascade: &Cascade, n: &Nilradical) -> (usize, RootSet) {
    stabiliser_oracle_weighted(sc, rs, cascade, n, &unit_weights(n))
}

/// As [`stabiliser_oracle`], with `ξ̄ = Σ w_j e_{-β_j}`.
pub fn stabiliser_oracle_weighted(
    sc: &StructureConstants,
    rs: &RootSystem,
    cascade: &Cascade,
    n: &Nilradical,
    weights: &[i64],
) -> (usize, RootSet) {
    let columns: Vec<RootId> = n.roots.iter().copied().collect();
    let m = coadjoint_matrix(sc, rs, cascade, n, &columns, weights);
    kernel_support(&m, &columns)
}

/// `dim n − max_ξ rank B_ξ` over random integer points `ξ ∈ n*`.
pub fn index_oracle(sc: &StructureConstants, rs: &RootSystem, n: &Nilradical, samples: usize, seed: u64) -> usize {
    let roots: Vec<RootId> = n.roots.iter().copied().collect();
    let mut best = 0;
    for s in 0..samples.max(1) {
        let mut rng = ChaCha8Rng::seed_from_u64(sample_seed(seed, rs, n, s));
        let xi: Vec<i64> = (0..rs.len()).map(|_| rng.gen_range(-COORD_RANGE..=COORD_RANGE)).collect();
        let mut b = IntMatrix::zeros(roots.len(), roots.len());
        for (i, &g) in roots.iter().enumerate() {
            for (j, &h) in roots.iter().enumerate() {
                if let Some(s) = rs.sum(g, h) {
                    b.add_to(i, j, sc.n(Signed::pos(g), Signed::pos(h)) * xi[s]);
                }
            }
        }
        best = best.max(b.rank());
    }
    n.dim - best
}

/// Dimension of `n·ξ̄ + span{e_{-β} : β ∈ K(n)}` inside `n*`.
pub fn saturation_oracle(sc: &StructureConstants, rs: &RootSystem, cascade: &Cascade, n: &Nilradical) -> usize {
    let columns: Vec<RootId> = n.roots.iter().copied().collect();
    let mut m = coadjoint_matrix(sc, rs, cascade, n, &columns, &unit_weights(n));
    let rows = row_lookup(rs, n);
    let first = m.widen(n.cascade_indices.len());
    for (k, &j) in n.cascade_indices.iter().enumerate() {
        let r = rows[cascade.root(j)].expect("cascade roots of n lie in n");
        m.add_to(r, first + k, 1);
    }
    m.rank()
}

/// Whether the stabiliser of `ξ̄` under `ñ` has the same support as under `n`.
pub fn tilde_stabiliser_oracle(sc: &StructureConstants, rs: &RootSystem, cascade: &Cascade, n: &Nilradical) -> bool {
    let tilde: Vec<RootId> = nilradical_roots(rs, &n.tilde_t).into_iter().collect();
    let m = coadjoint_matrix(sc, rs, cascade, n, &tilde, &unit_weights(n));
    let (_, tilde_support) = kernel_support(&m, &tilde);
    tilde_support == stabiliser_oracle(sc, rs, cascade, n).1
}

/// Runs every oracle check for `n` and compares with the combinatorial
/// answers.
pub fn run_oracle(
    sc: &StructureConstants,
    rs: &RootSystem,
    cascade: &Cascade,
    n: &Nilradical,
    samples: usize,
    seed: u64,
) -> Result<OracleReport> {
    let (_, stab) = cascade_stabiliser(rs, cascade, n)?;
    let (stab_dim, stab_root_support) = stabiliser_oracle(sc, rs, cascade, n);
    let index_estimate = index_oracle(sc, rs, n, samples, seed);
    let saturation_dim = saturation_oracle(sc, rs, cascade, n);
    let tilde_agrees = tilde_stabiliser_oracle(sc, rs, cascade, n);
    let agrees = stab_root_support == stab
        && stab_dim == n.index
        && index_estimate == n.index
        && saturation_dim + n.tilde_dim == 2 * n.dim
        && tilde_agrees;
    Ok(OracleReport {
        stab_dim,
        stab_root_support,
        index_estimate,
        saturation_dim,
        tilde_agrees,
        agrees,
    })
}
