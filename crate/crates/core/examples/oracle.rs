//! Independent check of the combinatorial formulas by exact linear algebra
//! over Chevalley structure constants.
//!
//!     cargo run --release --example oracle -- F4

use cascade_lab::cascade::Cascade;
use cascade_lab::nilradical::{all_t_sets, Nilradical};
use cascade_lab::oracle::{self, chevalley::StructureConstants};
use cascade_lab::rootsys::{RootSystem, SimpleType};

fn main() -> cascade_lab::Result<()> {
    let stype: SimpleType = std::env::args().nth(1).unwrap_or_else(|| "F4".into()).parse()?;
    let rs = RootSystem::new(stype);
    let c = Cascade::new(&rs);
    let sc = StructureConstants::new(&rs);
    assert!(sc.check_root_strings());
    let seed = oracle::base_seed()?;

    let mut disagreements = 0;
    for t in all_t_sets(rs.rank()) {
        let n = Nilradical::new(&rs, &c, &t)?;
        let rep = oracle::run_oracle(&sc, &rs, &c, &n, oracle::DEFAULT_SAMPLES, seed)?;
        println!(
            "T = {:<14} dim {:>3}  ind {:>3}  oracle: stab {:>3}, random-point rank gives {:>3}, saturation {:>3}  {}",
            format!("{:?}", n.labels()),
            n.dim,
            n.index,
            rep.stab_dim,
            rep.index_estimate,
            rep.saturation_dim,
            if rep.agrees { "ok" } else { "DISAGREES" }
        );
        disagreements += usize::from(!rep.agrees);
    }
    println!("{stype}: {disagreements} disagreements (seed {seed})");
    Ok(())
}
