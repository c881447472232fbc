//! Invariants of a parabolic nilradical `n_T`.
//!
//!     cargo run --example nilradical -- A6 2,6

use cascade_lab::cascade::Cascade;
use cascade_lab::nilradical::{labels, Nilradical};
use cascade_lab::rootsys::{RootSystem, SimpleType};

fn main() -> cascade_lab::Result<()> {
    let mut args = std::env::args().skip(1);
    let stype: SimpleType = args.next().unwrap_or_else(|| "A6".into()).parse()?;
    let t: Vec<usize> = args
        .next()
        .unwrap_or_else(|| "2,6".into())
        .split(',')
        .map(|s| s.trim().parse().map_err(|_| cascade_lab::Error::Parse(format!("bad index {s:?}"))))
        .collect::<cascade_lab::Result<_>>()?;

    let rs = RootSystem::new(stype);
    let c = Cascade::new(&rs);
    let n = Nilradical::from_labels(&rs, &c, &t)?;

    println!("{stype}, T = {:?}", n.labels());
    println!("  dim n       = {}", n.dim);
    println!("  depth       = {} (centre has {} roots)", n.depth, n.centre_roots.len());
    let k: Vec<String> = n.cascade_indices.iter().map(|&j| format!("β_{}", j + 1)).collect();
    println!("  K(n)        = {{{}}}", k.join(", "));
    println!("  T̃           = {:?} (dim ñ = {})", labels(&n.tilde_t), n.tilde_dim);
    println!("  optimal     = {}", n.is_optimal());
    println!("  ind n       = {}", n.index);
    println!("  b(n)        = {}", n.b);
    if !n.is_optimal() {
        let opt = n.optimisation(&rs, &c);
        println!("  optimisation: T = {:?}, dim {}", opt.labels(), opt.dim);
    }
    Ok(())
}
