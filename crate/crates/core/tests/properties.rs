//! Randomised invariants over types and subsets `T`.

mod common;

use std::sync::OnceLock;

use proptest::prelude::*;

use cascade_lab::cascade::Cascade;
use cascade_lab::classify::ClassificationReport;
use cascade_lab::golden;
use cascade_lab::lab::{AnalyzeOptions, Lab};
use cascade_lab::nilradical::{nilradical_roots, Nilradical};
use cascade_lab::oracle::{self, chevalley::StructureConstants};
use cascade_lab::report::{read_csv, read_json, write_csv, write_json};
use cascade_lab::rootsys::{RootSystem, SimpleType};
use cascade_lab::stabiliser::StabiliserReport;

use common::*;

struct Fixture {
    rs: RootSystem,
    c: Cascade,
    sc: StructureConstants,
}

fn fixtures() -> &'static [Fixture] {
    static CELL: OnceLock<Vec<Fixture>> = OnceLock::new();
    CELL.get_or_init(|| {
        golden::table_types()
            .into_iter()
            .map(|t| {
                let rs = RootSystem::new(t);
                let c = Cascade::new(&rs);
                let sc = StructureConstants::new(&rs);
                Fixture { rs, c, sc }
            })
            .collect()
    })
}

/// A type index and a nonempty subset mask for it.
fn type_and_mask() -> impl Strategy<Value = (usize, u64)> {
    (0..fixtures().len()).prop_flat_map(|i| {
        let rank = fixtures()[i].rs.rank();
        (Just(i), 1u64..(1u64 << rank))
    })
}

fn small_type_and_mask() -> impl Strategy<Value = (usize, u64)> {
    type_and_mask().prop_filter("rank ≤ 6", |&(i, _)| fixtures()[i].rs.rank() <= 6)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn nilradical_basics((i, mask) in type_and_mask()) {
        let f = &fixtures()[i];
        let t = mask_set(f.rs.rank(), mask);
        let n = Nilradical::new(&f.rs, &f.c, &t).unwrap();
        prop_assert_eq!(&n.roots, &nilradical_roots(&f.rs, &t));
        prop_assert_eq!(upper_closure(&f.rs, &n.roots), n.roots.clone());
        prop_assert_eq!((n.dim + n.index) % 2, 0);
        prop_assert_eq!(&n.centre_roots, &centre_by_brackets(&f.rs, &n));
        // The optimisation contains n, is optimal, and has the same cascade part.
        let opt = n.optimisation(&f.rs, &f.c);
        prop_assert!(t.is_subset(&opt.t_set));
        prop_assert!(n.roots.is_subset(&opt.roots));
        prop_assert!(opt.is_optimal());
        prop_assert_eq!(&opt.cascade_indices, &n.cascade_indices);
        prop_assert!(n.index >= n.cascade_indices.len());
    }

    #[test]
    fn stabiliser_shape((i, mask) in type_and_mask()) {
        let f = &fixtures()[i];
        let n = Nilradical::new(&f.rs, &f.c, &mask_set(f.rs.rank(), mask)).unwrap();
        let rep = StabiliserReport::new(&f.rs, &f.c, &n).unwrap();
        prop_assert_eq!(rep.stab_roots.len(), n.index);
        prop_assert!(rep.stab_roots.is_subset(&n.roots));
        prop_assert!(n.cascade_roots(&f.c).is_subset(&rep.stab_roots));
        prop_assert!(rep.stab_roots.is_subset(&rep.frobenius_roots));
        prop_assert!(rep.frobenius_roots.is_subset(&n.roots));
        prop_assert_eq!(&upper_closure(&f.rs, &rep.stab_roots), &rep.frobenius_roots);
        prop_assert!(!n.is_optimal() || rep.generic);
        if descendant_obstruction(&f.rs, &f.c, &n.t_set) {
            prop_assert!(!rep.generic);
        }
        if let Some((d, e)) = rep.witness {
            let diff = f.rs.difference(d, e);
            prop_assert!(diff.is_some_and(|g| n.contains(g)));
        }
    }

    #[test]
    fn square_integrability((i, mask) in type_and_mask()) {
        let f = &fixtures()[i];
        let n = Nilradical::new(&f.rs, &f.c, &mask_set(f.rs.rank(), mask)).unwrap();
        let r = ClassificationReport::new(&f.rs, &f.c, &n);
        prop_assert_eq!(r.square_integrable, n.index == n.centre_roots.len());
        if r.square_integrable {
            prop_assert!(n.depth <= 2);
        }
        for j in f.c.minimal(&n.cascade_set()) {
            prop_assert!((1..=2).contains(&n.degree(&f.rs, f.c.root(j))));
        }
    }

    #[test]
    fn oracle_agrees((i, mask) in small_type_and_mask()) {
        let f = &fixtures()[i];
        let n = Nilradical::new(&f.rs, &f.c, &mask_set(f.rs.rank(), mask)).unwrap();
        let rep = oracle::run_oracle(&f.sc, &f.rs, &f.c, &n, 2, oracle::DEFAULT_SEED).unwrap();
        prop_assert!(rep.agrees, "{} T={:?}: {:?}", f.rs.stype(), n.labels(), rep);
    }

    #[test]
    fn jacobi_on_random_triples(i in 0..fixtures().len(), seed in any::<[usize; 3]>()) {
        let sc = &fixtures()[i].sc;
        let m = sc.basis_len();
        let (x, y, z) = (seed[0] % m, seed[1] % m, seed[2] % m);
        prop_assert!(sc.jacobiator(x, y, z).is_empty());
    }

    #[test]
    fn records_round_trip((i, mask) in small_type_and_mask(), with_oracle in any::<bool>()) {
        let stype: SimpleType = fixtures()[i].rs.stype();
        let lab = Lab::new(stype);
        let opts = AnalyzeOptions { oracle: with_oracle, ..AnalyzeOptions::default() };
        let rec = lab.analyze(&mask_set(stype.rank(), mask), &opts).unwrap();
        let recs = vec![rec];
        let mut json = Vec::new();
        write_json(&recs, &mut json).unwrap();
        prop_assert_eq!(&read_json(json.as_slice()).unwrap(), &recs);
        let mut csv = Vec::new();
        write_csv(&recs, &mut csv).unwrap();
        prop_assert_eq!(&read_csv(csv.as_slice()).unwrap(), &recs);
    }
}
