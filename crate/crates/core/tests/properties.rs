use proptest::prelude::*;

use palfact::naive::SuffixPalindromes;
use palfact::{
    decode_gap_list, factorize, pl_fast, pl_oracle, pl_quadratic, pl_values, validate_gap_list, verify_factorization,
    FastState, GapList, Text, DEFAULT_ORACLE_CAP,
};

fn text_strategy(max_len: usize) -> impl Strategy<Value = Text<u8>> {
    (1u8..=4).prop_flat_map(move |sigma| prop::collection::vec(0..sigma, 0..=max_len).prop_map(Text::new))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn engines_agree_on_every_prefix(t in text_strategy(120)) {
        let fast = pl_values(&pl_fast(&t));
        prop_assert_eq!(&fast, &pl_values(&pl_quadratic(&t)));
        prop_assert_eq!(&fast, &pl_values(&pl_oracle(&t, DEFAULT_ORACLE_CAP).unwrap()));
    }

    #[test]
    fn gap_list_tracks_suffix_palindromes(t in text_strategy(80)) {
        let mut state = FastState::new();
        let mut naive = SuffixPalindromes::new();
        for &c in t.as_slice() {
            state.push(c);
            let set = naive.push(c).to_vec();
            let g = state.gap_list();
            prop_assert_eq!(decode_gap_list(&g).unwrap(), set);
            prop_assert_eq!(validate_gap_list(&g, &t), Ok(()));
        }
    }

    #[test]
    fn pl_bounds_and_unit_steps(t in text_strategy(300)) {
        let pl = pl_values(&pl_fast(&t));
        prop_assert_eq!(pl[0], 0);
        for j in 1..pl.len() {
            prop_assert!(pl[j] >= 1 && pl[j] <= j);
            prop_assert!(pl[j].abs_diff(pl[j - 1]) <= 1);
        }
    }

    #[test]
    fn online_matches_batch(t in text_strategy(300)) {
        let batch = pl_values(&pl_quadratic(&t));
        let mut state = FastState::new();
        let online: Vec<usize> = t.as_slice().iter().map(|&c| state.push(c)).collect();
        prop_assert_eq!(&online[..], &batch[1..]);
    }

    #[test]
    fn factorizations_verify(t in text_strategy(300)) {
        let n = t.len();
        let fast = pl_fast(&t);
        let quad = pl_quadratic(&t);
        let f_fast = factorize(&t, &fast).unwrap();
        let f_quad = factorize(&t, &quad).unwrap();
        prop_assert!(verify_factorization(&t, &f_fast, fast[n].pl));
        prop_assert!(verify_factorization(&t, &f_quad, quad[n].pl));
        prop_assert_eq!(f_fast.len(), f_quad.len());
    }

    #[test]
    fn decode_is_sorted_and_unique(t in text_strategy(60)) {
        let mut g = GapList::empty();
        for j in 1..=t.len() {
            g = palfact::update::update(&g, &t, j).unwrap();
            let d = decode_gap_list(&g).unwrap();
            prop_assert!(d.windows(2).all(|w| w[0] < w[1]));
            prop_assert_eq!(d.last().copied(), Some(j));
            prop_assert_eq!(d.len(), g.position_count());
        }
    }
}
