use proptest::prelude::*;
use torinv::reference::adjacent_by_enumeration;
use torinv::weights::{
    is_root_adjacent, is_uncramped, weight_equal, GroupKind, LatticeFactor, Weight, WeightLattice,
};

fn small_lattice() -> impl Strategy<Value = WeightLattice> {
    proptest::collection::vec((any::<bool>(), 1usize..=3), 1..=2).prop_map(|factors| {
        WeightLattice::new(
            factors
                .into_iter()
                .map(|(sl, size)| LatticeFactor {
                    kind: if sl { GroupKind::Sl } else { GroupKind::Gl },
                    size,
                })
                .collect(),
        )
    })
}

fn weight_in(lattice: WeightLattice) -> impl Strategy<Value = Weight> {
    let dim = lattice.dim();
    proptest::collection::vec(-4i64..=4, dim)
        .prop_map(move |coords| Weight::new(lattice.clone(), coords).unwrap())
}

fn weight_pair() -> impl Strategy<Value = (Weight, Weight)> {
    small_lattice().prop_flat_map(|l| (weight_in(l.clone()), weight_in(l)))
}

fn weight_list() -> impl Strategy<Value = Vec<Weight>> {
    small_lattice().prop_flat_map(|l| proptest::collection::vec(weight_in(l), 1..=4))
}

/// Adds the all-ones vector of block `block` to the coordinates.
fn shift_block(w: &Weight, block: usize) -> Weight {
    let lattice = w.lattice().clone();
    let mut offset = 0;
    let mut coords = w.coords().to_vec();
    for (k, factor) in lattice.factors().iter().enumerate() {
        if k == block {
            for c in coords.iter_mut().skip(offset).take(factor.size) {
                *c += 1;
            }
        }
        offset += factor.size;
    }
    Weight::new(lattice, coords).unwrap()
}

proptest! {
    #[test]
    fn adjacency_matches_exhaustive_root_enumeration((a, b) in weight_pair()) {
        prop_assert_eq!(
            is_root_adjacent(&a, &b).unwrap(),
            adjacent_by_enumeration(&a, &b).unwrap()
        );
    }

    #[test]
    fn adjacency_is_symmetric_and_irreflexive((a, b) in weight_pair()) {
        prop_assert_eq!(
            is_root_adjacent(&a, &b).unwrap(),
            is_root_adjacent(&b, &a).unwrap()
        );
        prop_assert!(!is_root_adjacent(&a, &a).unwrap());
    }

    #[test]
    fn sl_blocks_ignore_all_ones_shifts((a, b) in weight_pair()) {
        for (block, factor) in a.lattice().factors().iter().enumerate() {
            if factor.kind == GroupKind::Sl {
                let shifted = shift_block(&b, block);
                prop_assert!(weight_equal(&b, &shifted).unwrap());
                prop_assert_eq!(
                    is_root_adjacent(&a, &b).unwrap(),
                    is_root_adjacent(&a, &shifted).unwrap()
                );
            }
        }
    }

    #[test]
    fn equal_weights_are_never_adjacent((a, _) in weight_pair()) {
        for (block, factor) in a.lattice().factors().iter().enumerate() {
            if factor.kind == GroupKind::Sl {
                let shifted = shift_block(&a, block);
                prop_assert!(!is_root_adjacent(&a, &shifted).unwrap());
            }
        }
    }

    #[test]
    fn uncramped_is_invariant_under_reordering(mut weights in weight_list()) {
        let base = is_uncramped(&weights).unwrap().uncramped;
        weights.reverse();
        prop_assert_eq!(is_uncramped(&weights).unwrap().uncramped, base);
        weights.rotate_left(1);
        prop_assert_eq!(is_uncramped(&weights).unwrap().uncramped, base);
    }

    #[test]
    fn cramped_witnesses_point_at_adjacent_pairs(weights in weight_list()) {
        let report = is_uncramped(&weights).unwrap();
        if let Some((i, j)) = report.witness {
            prop_assert!(!report.uncramped);
            prop_assert!(is_root_adjacent(&weights[i], &weights[j]).unwrap());
        } else {
            prop_assert!(report.uncramped);
        }
    }
}
