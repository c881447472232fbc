//! Generic stabiliser of the cascade point and the genericity witness.
//!
//!     cargo run --example stabiliser -- A6 2,6

use cascade_lab::cascade::Cascade;
use cascade_lab::nilradical::Nilradical;
use cascade_lab::rootsys::{RootSystem, SimpleType};
use cascade_lab::stabiliser::StabiliserReport;

fn main() -> cascade_lab::Result<()> {
    let mut args = std::env::args().skip(1);
    let stype: SimpleType = args.next().unwrap_or_else(|| "A6".into()).parse()?;
    let t_arg = args.next().unwrap_or_else(|| "2,6".into());
    let t: Vec<usize> = t_arg.split(',').filter_map(|s| s.trim().parse().ok()).collect();

    let rs = RootSystem::new(stype);
    let c = Cascade::new(&rs);
    let n = Nilradical::from_labels(&rs, &c, &t)?;
    let rep = StabiliserReport::new(&rs, &c, &n)?;

    println!("{stype}, T = {:?}: ind n = {}", n.labels(), n.index);
    for (j, comp) in &rep.complements {
        let roots: Vec<String> = comp.iter().map(|&g| rs.root(g).to_string()).collect();
        println!("  C({}) = {}", j + 1, roots.join(" "));
    }
    let stab: Vec<String> = rep.stab_roots.iter().map(|&g| rs.root(g).to_string()).collect();
    println!("  stabiliser roots: {}", stab.join(" "));
    match rep.witness {
        None => println!("  the stabiliser is generic"),
        Some((d, e)) => {
            let diff = rs.difference(d, e).expect("witness difference is a root");
            println!(
                "  not generic: {} - {} = {} is a root of n",
                rs.root(d),
                rs.root(e),
                rs.root(diff)
            );
        }
    }
    Ok(())
}
