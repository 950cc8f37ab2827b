//! Invariant lattices against the character criterion.

mod common;

use common::{all_cases, case};
use fmrep::chartab::VirtualRep;
use fmrep::fusion::is_invariant;
use fmrep::repring::difference_matrix;
use proptest::prelude::*;

#[test]
fn rank_is_fusion_class_count() {
    for c in all_cases() {
        assert_eq!(c.lattice.rank(), c.fusion.class_count(), "{}", c.name);
        assert!(c.lattice.contains(&c.table.trivial()).unwrap());
        assert!(c.lattice.contains(&c.table.regular()).unwrap());
        for v in c.lattice.basis_reps().unwrap() {
            assert!(is_invariant(&v, &c.fusion, &c.table).unwrap(), "{}: {v:?}", c.name);
        }
    }
}

#[test]
fn difference_rows_annihilate_the_lattice() {
    for c in all_cases() {
        let d = difference_matrix(&c.fusion, &c.table).unwrap();
        let product = c.lattice.basis().mul(&d.transpose()).unwrap();
        assert!(product.is_zero(), "{}", c.name);
    }
}

#[test]
fn lattice_is_saturated() {
    // k·v ∈ L with v ∉ L would mean L is not the full invariant lattice
    for name in ["S4", "S6", "A6", "SL2_3", "M10"] {
        let c = case(name);
        for v in c.lattice.basis_reps().unwrap() {
            let doubled = VirtualRep::new(v.mult.iter().map(|x| 2 * x).collect());
            assert!(c.lattice.contains(&doubled).unwrap());
        }
        let r = c.table.irr_count();
        for i in 0..r {
            let mut e = vec![0i64; r];
            e[i] = 3;
            let three = VirtualRep::new(e.clone());
            e[i] = 1;
            let one = VirtualRep::new(e);
            assert_eq!(c.lattice.contains(&three).unwrap(), c.lattice.contains(&one).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn membership_is_invariance(
        which in 0usize..5,
        seed in prop::collection::vec(-3i64..=3, 20),
    ) {
        let name = ["S4", "S6", "A6", "SL2_3", "PSL2_17"][which];
        let c = case(name);
        let v = VirtualRep::new(seed[..c.table.irr_count()].to_vec());
        prop_assert_eq!(c.lattice.contains(&v).unwrap(), is_invariant(&v, &c.fusion, &c.table).unwrap());
        // sums of members stay members
        let basis = c.lattice.basis_reps().unwrap();
        let combo: Vec<i64> = (0..v.mult.len())
            .map(|i| basis.iter().zip(&seed).map(|(b, s)| b.mult[i] * s).sum())
            .collect();
        let combo = VirtualRep::new(combo);
        prop_assert!(c.lattice.contains(&combo).unwrap());
        prop_assert!(is_invariant(&combo, &c.fusion, &c.table).unwrap());
    }
}
