//! Frobenius semiradicals across type A, against the closed forms in `k = |K(n)|`.
//!
//!     cargo run --example frobenius -- 6

use cascade_lab::cascade::Cascade;
use cascade_lab::nilradical::{all_t_sets, Nilradical};
use cascade_lab::rootsys::{Family, RootSystem, SimpleType};
use cascade_lab::stabiliser::StabiliserReport;

fn main() -> cascade_lab::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    let rs = RootSystem::new(SimpleType::new(Family::A, n)?);
    let c = Cascade::new(&rs);

    println!("{:<16} {:>3} {:>6} {:>10}  quasi-quadratic", "T", "k", "dim F", "closed form");
    for t in all_t_sets(n) {
        let nil = Nilradical::new(&rs, &c, &t)?;
        let rep = StabiliserReport::new(&rs, &c, &nil)?;
        let k = nil.cascade_indices.len();
        // Both ends of the innermost cascade root lie in T, or not.
        let (a, b) = (k - 1, n - k);
        let closed = if t.contains(&a) && t.contains(&b) { k * k } else { k * (n + 1 - k) };
        println!(
            "{:<16} {k:>3} {:>6} {closed:>10}  {}",
            format!("{:?}", nil.labels()),
            rep.frobenius_dim(),
            rep.quasi_quadratic
        );
    }
    Ok(())
}
