mod common;

use closest_core::*;
use common::*;
use proptest::prelude::*;

fn row(l: usize) -> impl Strategy<Value = Vec<Symbol>> {
    prop::collection::vec((1u8..=4).prop_map(|c| Symbol::new(c).unwrap()), l)
}

proptest! {
    #[test]
    fn hamming_is_a_metric((a, b, c) in (1usize..12).prop_flat_map(|l| (row(l), row(l), row(l)))) {
        let d = |x: &[Symbol], y: &[Symbol]| hamming_distance(x, y).unwrap();
        prop_assert_eq!(d(&a, &a), 0);
        prop_assert_eq!(d(&a, &b) == 0, a == b);
        prop_assert_eq!(d(&a, &b), d(&b, &a));
        prop_assert!(d(&a, &c) <= d(&a, &b) + d(&b, &c));
        prop_assert!(d(&a, &b) <= a.len());
    }

    #[test]
    fn pwm_columns_match_domains(s in instance(1..=8, 1..=12)) {
        let pwm = build_pwm(&s);
        let doms = position_domains(&s);
        for (j, dom) in doms.iter().enumerate() {
            prop_assert_eq!(pwm.column(j).iter().sum::<u32>() as usize, s.count());
            prop_assert_eq!(pwm.support(j), *dom);
            prop_assert!(dom.len() <= s.count().min(4));
        }
        let mut order = pwm_variable_order(&pwm, TieBreak::LeastIndex);
        prop_assert!(order.windows(2).all(|w| pwm.column_max(w[0]) >= pwm.column_max(w[1])));
        order.sort_unstable();
        prop_assert_eq!(order, (0..s.len()).collect::<Vec<_>>());
    }

    #[test]
    fn variable_order_ignores_non_maximal_counts(
        cols in prop::collection::vec(prop::collection::vec(0u32..6, 4), 1..10),
        bump in 1u32..4,
    ) {
        let refs: Vec<&[u32]> = cols.iter().map(|c| c.as_slice()).collect();
        let base = pwm_variable_order(&Pwm::from_columns(4, &refs), TieBreak::LeastIndex);
        // raising every entry of every column by the same amount keeps the order
        let raised: Vec<Vec<u32>> = cols.iter().map(|c| c.iter().map(|x| x + bump).collect()).collect();
        let refs: Vec<&[u32]> = raised.iter().map(|c| c.as_slice()).collect();
        prop_assert_eq!(pwm_variable_order(&Pwm::from_columns(4, &refs), TieBreak::LeastIndex), base);
    }

    #[test]
    fn projection_into_column_symbols_never_hurts(s in instance(1..=6, 1..=10), cand in prop::collection::vec(1u8..=4, 10)) {
        let doms = position_domains(&s);
        let mut c: Vec<Symbol> = cand[..s.len()].iter().map(|&x| Symbol::new(x).unwrap()).collect();
        let before = max_distance(&c, &s);
        for j in 0..s.len() {
            if !doms[j].contains(c[j]) {
                for v in doms[j].iter() {
                    let mut p = c.clone();
                    p[j] = v;
                    prop_assert!(max_distance(&p, &s) <= before);
                }
                c[j] = doms[j].first().unwrap();
            }
        }
        prop_assert!(max_distance(&c, &s) <= before);
    }

    #[test]
    fn value_order_is_a_permutation_of_the_domain(
        col in prop::collection::vec(0u32..5, 4),
        mask in 1u64..16,
        seed in any::<u64>(),
    ) {
        let pwm = Pwm::from_columns(4, &[col.as_slice()]);
        let dom = SymbolSet::from_bits(mask);
        for tie in [TieBreak::LeastIndex, TieBreak::Seeded(seed)] {
            let order = pwm_value_order(&pwm, 0, dom, tie);
            prop_assert_eq!(order.iter().copied().collect::<SymbolSet>(), dom);
            prop_assert_eq!(order.len(), dom.len());
            let counts: Vec<u32> = order.iter().map(|&v| pwm.count(v, 0)).collect();
            prop_assert!(counts.windows(2).all(|w| w[0] >= w[1]));
        }
    }
}
