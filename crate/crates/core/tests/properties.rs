mod common;

use clans_core::involution::enumerate_involutions;
use clans_core::linalg::{rat, SquareMatrix, Vector};
use clans_core::{
    compare, covering_moves, dim_projection_sum, enumerate_clans, involution_leq_rank,
    involution_leq_sn, leq, orbit_of, parse_clan, rank_profile, yamamoto_representative, Clan,
    Flag, Signature, SplitSpaces,
};
use common::*;
use proptest::prelude::*;

fn signature_strategy(max_n: usize) -> impl Strategy<Value = Signature> {
    (1..=max_n).prop_flat_map(|n| (0..=n).prop_map(move |p| sig(p, n - p)))
}

fn clans_of(max_n: usize, count: usize) -> impl Strategy<Value = Vec<Clan>> {
    (
        signature_strategy(max_n),
        proptest::collection::vec(any::<prop::sample::Index>(), count),
    )
        .prop_map(|(s, picks)| {
            let all = enumerate_clans(s);
            picks.iter().map(|ix| ix.get(&all).clone()).collect()
        })
}

fn small_rational() -> impl Strategy<Value = i64> {
    -3i64..=3
}

fn matrix(n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    proptest::collection::vec(proptest::collection::vec(small_rational(), n), n)
}

fn to_vectors(rows: &[Vec<i64>]) -> Vec<Vector> {
    rows.iter()
        .map(|r| r.iter().map(|&x| rat(x)).collect())
        .collect()
}

/// Random element of `K`: independent blocks on `1..=p` and `p+1..=n`.
fn block_matrix(s: Signature, entries: &[Vec<i64>]) -> SquareMatrix {
    let n = s.n();
    let rows = (0..n)
        .map(|r| {
            (0..n)
                .map(|c| {
                    if (r < s.p()) == (c < s.p()) {
                        rat(entries[r][c])
                    } else {
                        rat(0)
                    }
                })
                .collect()
        })
        .collect();
    SquareMatrix::from_rows(rows).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn order_is_a_partial_order(cs in clans_of(7, 3)) {
        let (a, b, c) = (&cs[0], &cs[1], &cs[2]);
        prop_assert!(leq(a, a).unwrap());
        if leq(a, b).unwrap() && leq(b, a).unwrap() {
            prop_assert_eq!(a, b);
        }
        if leq(a, b).unwrap() && leq(b, c).unwrap() {
            prop_assert!(leq(a, c).unwrap());
        }
    }

    #[test]
    fn compare_is_consistent_with_leq(cs in clans_of(7, 2)) {
        let (a, b) = (&cs[0], &cs[1]);
        let ord = compare(a, b).unwrap();
        prop_assert_eq!(ord.map(|o| o.is_le()).unwrap_or(false), leq(a, b).unwrap());
        prop_assert_eq!(ord.map(|o| o.reverse()), compare(b, a).unwrap());
    }

    #[test]
    fn moves_go_strictly_up(cs in clans_of(7, 1)) {
        let c = &cs[0];
        for (m, next) in covering_moves(c) {
            prop_assert!(leq(c, &next).unwrap(), "{} on {}", m, c);
            prop_assert_ne!(c, &next);
        }
    }

    #[test]
    fn format_parse_roundtrip(cs in clans_of(8, 1)) {
        let c = &cs[0];
        prop_assert_eq!(&parse_clan(&c.to_string(), c.signature()).unwrap(), c);
    }

    #[test]
    fn relabeling_gives_same_clan(cs in clans_of(7, 1), shift in 1usize..50) {
        let c = &cs[0];
        let relabeled: Vec<String> = c.labels().iter().zip(c.symbols()).map(|(l, s)| match l {
            Some(l) => (l + shift).to_string(),
            None => if *s == clans_core::Symbol::Plus { "+".into() } else { "-".into() },
        }).collect();
        prop_assert_eq!(&parse_clan(&relabeled.join(" "), c.signature()).unwrap(), c);
    }

    #[test]
    fn involution_criteria_agree_on_random_pairs(n in 1usize..=8, i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>()) {
        let all = enumerate_involutions(n);
        let (a, b) = (i.get(&all), j.get(&all));
        prop_assert_eq!(involution_leq_rank(a, b).unwrap(), involution_leq_sn(a, b).unwrap());
    }

    #[test]
    fn orbit_is_k_invariant(cs in clans_of(5, 1), entries in matrix(5)) {
        let c = &cs[0];
        let s = c.signature();
        let k = block_matrix(s, &entries[..s.n()].iter().map(|r| r[..s.n()].to_vec()).collect::<Vec<_>>());
        prop_assume!(k.is_invertible());
        let split = SplitSpaces::new(s);
        let moved = yamamoto_representative(c).act(&k).unwrap();
        prop_assert_eq!(&orbit_of(&moved, &split).unwrap(), c);
    }

    #[test]
    fn random_flags_have_consistent_orbits(s in signature_strategy(5), basis in matrix(5), entries in matrix(5)) {
        let n = s.n();
        let trim = |m: &[Vec<i64>]| m[..n].iter().map(|r| r[..n].to_vec()).collect::<Vec<_>>();
        let flag = Flag::new(to_vectors(&trim(&basis)));
        prop_assume!(flag.is_ok());
        let flag = flag.unwrap();
        let k = block_matrix(s, &trim(&entries));
        prop_assume!(k.is_invertible());
        let split = SplitSpaces::new(s);
        let orbit = orbit_of(&flag, &split).unwrap();
        prop_assert_eq!(&orbit_of(&flag.act(&k).unwrap(), &split).unwrap(), &orbit);
        prop_assert!(clans_core::in_closure(&flag, &orbit, &split).unwrap());
        for i in 1..n {
            for j in i + 1..=n {
                let d = dim_projection_sum(&flag, i, j, &split);
                prop_assert!(j <= d && d <= n.min(i + j), "dim {} at ({}, {})", d, i, j);
                prop_assert_eq!(d - j, rank_profile(&orbit).pair(i, j));
            }
        }
    }
}
