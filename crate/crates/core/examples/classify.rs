//! Classification census for one type: square integrability, the
//! codim-2 property, freeness of invariants, and generic stabilisers.
//!
//!     cargo run --example classify -- C4

use cascade_lab::cascade::Cascade;
use cascade_lab::classify::{generic_census, square_integrable_census, ClassificationReport};
use cascade_lab::nilradical::{all_t_sets, labels, Nilradical};
use cascade_lab::rootsys::{RootSystem, SimpleType};

fn main() -> cascade_lab::Result<()> {
    let stype: SimpleType = std::env::args().nth(1).unwrap_or_else(|| "C4".into()).parse()?;
    let rs = RootSystem::new(stype);
    let c = Cascade::new(&rs);

    let (depth1, depth2) = square_integrable_census(&rs, &c);
    let show = |v: &[_]| v.iter().map(labels).map(|l| format!("{l:?}")).collect::<Vec<_>>().join(" ");
    println!("{stype}: square integrable, depth 1: {}", show(&depth1));
    println!("{stype}: square integrable, depth 2: {}", show(&depth2));
    println!(
        "{stype}: {} of {} nilradicals have a generic stabiliser",
        generic_census(&rs, &c)?,
        (1usize << rs.rank()) - 1
    );

    println!("\n{:<14} {:>4} {:>4}  {:<10} {:<24} trdeg S(n)^U", "T", "ind", "b", "CP", "freeness");
    for t in all_t_sets(rs.rank()) {
        let n = Nilradical::new(&rs, &c, &t)?;
        let r = ClassificationReport::new(&rs, &c, &n);
        let cp = r.cp_witness.map(|w| format!("{w:?}")).unwrap_or_else(|| "-".into());
        println!(
            "{:<14} {:>4} {:>4}  {cp:<10} {:<24} {}",
            format!("{:?}", n.labels()),
            n.index,
            n.b,
            r.freeness.to_string(),
            r.trdeg_su
        );
    }
    Ok(())
}
