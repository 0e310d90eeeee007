//! Property-based invariants over randomly drawn groups and point sets.

mod common;

use common::set_of_ranks;
use proptest::collection::vec;
use proptest::prelude::*;

use cubespectra::cli::parse_set;
use cubespectra::fourier::{autocorrelation, zero_set};
use cubespectra::group::{subgroup_closure, subgroup_generated};
use cubespectra::spectra::is_spectrum;
use cubespectra::tiling::{check_tiling, enumerate_tiling_complements};
use cubespectra::{Group, PointSet};

prop_compose! {
    /// A group with 1..=3 factors and order at most 64.
    fn arb_group()(moduli in vec(1u64..=8, 1..=3).prop_filter(
        "order <= 64",
        |m| m.iter().product::<u64>() <= 64,
    )) -> Group {
        Group::new(&moduli).unwrap()
    }
}

prop_compose! {
    /// A group together with a nonempty subset drawn by rank mask.
    fn arb_group_and_set()(group in arb_group())(
        mask in 1u64..(1u64 << std::cmp::min(group.order(), 63)),
        group in Just(group),
    ) -> (Group, PointSet) {
        let order = group.order();
        let ranks: Vec<usize> = (0..order as usize)
            .filter(|&r| r < 63 && mask & (1 << r) != 0)
            .collect();
        let ranks = if ranks.is_empty() { vec![0] } else { ranks };
        let set = set_of_ranks(&group, &ranks);
        (group, set)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn add_then_sub_roundtrips((group, _) in arb_group_and_set(),
                               a in 0u64..64, b in 0u64..64) {
        let order = group.order();
        let x = group.element_at(a % order);
        let y = group.element_at(b % order);
        prop_assert_eq!(x.add(&y).unwrap().sub(&y).unwrap(), x);
        prop_assert_eq!(x.sub(&y).unwrap().add(&y).unwrap(), x);
    }

    #[test]
    fn self_difference_set_is_symmetric_with_identity((group, set) in arb_group_and_set()) {
        let d = set.difference_set(&set).unwrap();
        prop_assert!(d.contains(&group.zero()));
        prop_assert_eq!(d.negated(), d.clone());
    }

    #[test]
    fn autocorrelation_support_is_the_difference_set((_, set) in arb_group_and_set()) {
        let corr = autocorrelation(&set).unwrap();
        prop_assert_eq!(corr.support(), set.difference_set(&set).unwrap());
    }

    #[test]
    fn zero_set_is_negation_symmetric_and_misses_identity((group, set) in arb_group_and_set()) {
        let zeros = zero_set(&set).unwrap();
        prop_assert!(!zeros.contains(&group.zero()));
        prop_assert_eq!(zeros.negated(), zeros.clone());
    }

    #[test]
    fn subgroup_generation_respects_lagrange((group, set) in arb_group_and_set()) {
        let closure = subgroup_closure(&set).unwrap();
        prop_assert_eq!(group.order() % closure.len() as u64, 0);
        match subgroup_generated(&set) {
            Ok((sub, embedding)) => {
                prop_assert_eq!(sub.order(), closure.len() as u64);
                prop_assert_eq!(embedding.image(), closure);
            }
            Err(_) => {
                // not coordinatewise-product form: the closure is strictly
                // smaller than the per-coordinate product
                prop_assert!(closure.len() as u64 != per_coordinate_product(&group, &set));
            }
        }
    }

    #[test]
    fn set_grammar_roundtrips_through_display((group, set) in arb_group_and_set()) {
        let (reparsed, notes) = parse_set(&set.to_string(), &group).unwrap();
        prop_assert!(notes.is_empty());
        prop_assert_eq!(reparsed, set);
    }
}

fn per_coordinate_product(group: &Group, set: &PointSet) -> u64 {
    use num_integer::Integer;
    let mut steps: Vec<u64> = group.moduli().to_vec();
    for x in set.iter() {
        for (s, &c) in steps.iter_mut().zip(x.coords()) {
            *s = s.gcd(&c);
        }
    }
    steps
        .iter()
        .zip(group.moduli())
        .map(|(&s, &m)| m / m.gcd(&s))
        .product()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// Every enumerated complement passes the tiling check, the counting
    /// identity holds, and the verdict is translation invariant.
    #[test]
    fn enumerated_complements_verify(moduli in vec(1u64..=4, 1..=2), seed in 0u64..16) {
        let group = Group::new(&moduli).unwrap();
        let order = group.order();
        prop_assume!(order <= 16);
        // a tile of size dividing the order, derived from the seed
        let size = [1u64, 2, 4][(seed % 3) as usize].min(order);
        prop_assume!(order % size == 0);
        let ranks: Vec<usize> = (0..order as usize).collect();
        let tile = set_of_ranks(&group, &ranks[..size as usize]);
        for t in enumerate_tiling_complements(&tile).unwrap() {
            prop_assert!(check_tiling(&tile, &t, 1).unwrap());
            prop_assert_eq!(tile.len() * t.len(), order as usize);
            let g = group.element_at(seed % order);
            prop_assert!(check_tiling(&tile, &t.translate(&g).unwrap(), 1).unwrap());
        }
    }

    /// Spectrum verdicts are symmetric on enumerated spectra of small cubes.
    #[test]
    fn spectral_symmetry_on_small_groups(a_mod in 1u64..=4, b_mod in 1u64..=4, a in 1u64..=4) {
        prop_assume!(a <= a_mod && a_mod % a == 0);
        let group = Group::new(&[a_mod, b_mod]).unwrap();
        let cube = cubespectra::Cube::new(&group, &[a, 1]).unwrap();
        let tile = cube.point_set();
        for lam in cubespectra::spectra::enumerate_spectra(&tile).unwrap() {
            prop_assert!(is_spectrum(&lam, &tile).unwrap());
        }
    }
}
