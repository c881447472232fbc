//! Cascade of a simple type and its Hasse diagram.
//!
//!     cargo run --example cascade_hasse -- E8

use cascade_lab::cascade::Cascade;
use cascade_lab::report::hasse_ascii;
use cascade_lab::rootsys::{RootSystem, SimpleType};

fn main() -> cascade_lab::Result<()> {
    let label = std::env::args().nth(1).unwrap_or_else(|| "E8".into());
    let rs = RootSystem::new(label.parse::<SimpleType>()?);
    let c = Cascade::new(&rs);

    println!("{}: {} positive roots, θ = {}, |K| = {}", rs.stype(), rs.len(), rs.root(rs.highest_root()), c.len());
    print!("{}", hasse_ascii(&rs, &c));

    // Heisenberg subsets partition the positive roots.
    let sizes: Vec<usize> = c.elements().iter().map(|el| el.heisenberg.len()).collect();
    println!("Heisenberg subset sizes {sizes:?}, total {}", sizes.iter().sum::<usize>());
    Ok(())
}
