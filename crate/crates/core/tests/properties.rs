use blockperm::bijections::{majorize_inject, majorize_inject_untraced, reorder_blocks, reorder_blocks_untraced};
use blockperm::tableaux::{perm_to_skew_tableau, perm_to_tableau, tableau_to_perm};
use blockperm::{
    descent_set, lis_length, map_v, map_w, standardize, substitute, swap_adjacent, BlockPermutation, Composition,
    TwoBlockView,
};
use proptest::prelude::*;

/// A random block-ascending permutation: shuffle `1..=N`, then sort every block.
fn block_perm(max_blocks: usize, max_part: usize, allow_empty: bool) -> impl Strategy<Value = BlockPermutation> {
    let lo = usize::from(!allow_empty);
    prop::collection::vec(lo..=max_part, 1..=max_blocks)
        .prop_flat_map(|parts| {
            let n = parts.iter().sum::<usize>() as u32;
            (Just(parts), Just((1..=n).collect::<Vec<u32>>()).prop_shuffle())
        })
        .prop_map(|(parts, values)| {
            let mut blocks = Vec::new();
            let mut start = 0;
            for a in parts {
                let mut block = values[start..start + a].to_vec();
                block.sort_unstable();
                blocks.push(block);
                start += a;
            }
            BlockPermutation::from_blocks(&blocks).unwrap()
        })
}

fn lis_by_subsets(values: &[u32]) -> usize {
    let n = values.len();
    (0u32..1 << n)
        .filter(|mask| {
            let chosen: Vec<u32> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| values[i]).collect();
            chosen.windows(2).all(|w| w[0] < w[1])
        })
        .map(u32::count_ones)
        .max()
        .unwrap_or(0) as usize
}

fn descending(comp: &Composition) -> Composition {
    comp.sorted_descending()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn text_round_trip(pi in block_perm(5, 4, true)) {
        prop_assume!(pi.size() > 0);
        let text = pi.to_string();
        prop_assert_eq!(text.parse::<BlockPermutation>().unwrap(), pi);
    }

    #[test]
    fn json_round_trip(pi in block_perm(5, 4, true)) {
        let json = serde_json::to_string(&pi).unwrap();
        prop_assert_eq!(serde_json::from_str::<BlockPermutation>(&json).unwrap(), pi);
    }

    #[test]
    fn lis_matches_subset_search(pi in block_perm(4, 4, false)) {
        prop_assume!(pi.size() <= 12);
        prop_assert_eq!(lis_length(pi.values()), lis_by_subsets(pi.values()));
    }

    #[test]
    fn descents_sit_on_boundaries(pi in block_perm(6, 4, true)) {
        prop_assert!(descent_set(&pi).is_subset(&pi.comp().boundaries()));
    }

    #[test]
    fn standardize_then_substitute(pi in block_perm(5, 4, true), pick in 0usize..4) {
        prop_assume!(pi.block_count() >= 2);
        let index = 1 + pick % (pi.block_count() - 1);
        let (pattern, map) = standardize(&pi, index).unwrap();
        let blocks = substitute(&pattern, &map).unwrap();
        prop_assert_eq!(blocks[0].as_slice(), pi.block(index).unwrap());
        prop_assert_eq!(blocks[1].as_slice(), pi.block(index + 1).unwrap());
    }

    #[test]
    fn w_and_v_invert_each_other(pi in block_perm(2, 7, true)) {
        prop_assume!(pi.block_count() == 2);
        let view = TwoBlockView::try_from(&pi).unwrap();
        if let Ok(w) = map_w(&view) {
            prop_assert_eq!(w.lis_length(), view.lis_length());
            prop_assert_eq!(map_v(&w).unwrap(), view.clone());
        }
        if let Ok(v) = map_v(&view) {
            prop_assert_eq!(map_w(&v).unwrap(), view);
        }
    }

    #[test]
    fn swap_is_an_involution(pi in block_perm(5, 5, true), pick in 0usize..4) {
        prop_assume!(pi.block_count() >= 2);
        let l = 1 + pick % (pi.block_count() - 1);
        let once = swap_adjacent(&pi, l).unwrap();
        prop_assert_eq!(once.lis_length(), pi.lis_length());
        prop_assert_eq!(once.comp().parts()[l - 1], pi.comp().parts()[l]);
        prop_assert_eq!(swap_adjacent(&once, l).unwrap(), pi);
    }

    #[test]
    fn traced_and_untraced_agree(pi in block_perm(4, 4, true)) {
        let target = descending(pi.comp());
        let (traced, trace) = reorder_blocks(&pi, &target).unwrap();
        prop_assert!(trace.is_connected());
        prop_assert_eq!(&traced, &reorder_blocks_untraced(&pi, &target).unwrap());

        // Flatten towards the most balanced composition of the same length.
        let (n, len) = (pi.size(), pi.block_count());
        let balanced = Composition::new((0..len).map(|i| n / len + usize::from(i < n % len)).collect());
        let (out, trace) = majorize_inject(&pi, &balanced).unwrap();
        prop_assert!(trace.is_connected());
        prop_assert_eq!(out.comp(), &balanced);
        prop_assert_eq!(out.lis_length(), pi.lis_length());
        prop_assert_eq!(out, majorize_inject_untraced(&pi, &balanced).unwrap());
    }

    #[test]
    fn tableau_round_trip(pi in block_perm(4, 3, false)) {
        // Only rectangular layouts (p, k+1, ..., k+1) with k + 1 = 3 qualify.
        prop_assume!(pi.comp().parts()[1..].iter().all(|&a| a == 3) && pi.comp().parts()[0] <= 3);
        match perm_to_tableau(&pi, 2) {
            Ok(t) => {
                prop_assert!(pi.lis_length() <= 3);
                prop_assert_eq!(tableau_to_perm(&t).unwrap(), pi);
            }
            Err(_) => prop_assert!(pi.lis_length() > 3),
        }
    }

    #[test]
    fn skew_tableau_round_trip(pi in block_perm(4, 3, false)) {
        let parts = pi.comp().parts();
        prop_assume!(parts.len() >= 2);
        let (p, q) = (parts[0], parts[parts.len() - 1]);
        prop_assume!(p <= q && q <= 3 && parts[1..parts.len() - 1].iter().all(|&a| a == 3));
        match perm_to_skew_tableau(&pi, 2) {
            Ok(t) => {
                prop_assert!(pi.lis_length() <= 3);
                prop_assert_eq!(tableau_to_perm(&t).unwrap(), pi);
            }
            Err(_) => prop_assert!(pi.lis_length() > 3),
        }
    }
}
