mod common;

use clans_core::involution::enumerate_involutions;
use clans_core::{
    clan_from_rank_profile, covering_moves, enumerate_clans, involution_leq_rank,
    involution_leq_sn, leq, rank_profile, underlying_involution, RankProfile,
};
use common::*;

#[test]
fn counts_match_closed_form_and_brute_force() {
    for s in signatures(6) {
        let found = enumerate_clans(s).len();
        assert_eq!(found as u64, closed_form_count(s.p(), s.q()), "{s}");
        assert_eq!(found, brute_force_count(s.p(), s.q()), "{s}");
    }
    assert_eq!(enumerate_clans(sig(2, 1)).len(), 6);
    assert_eq!(enumerate_clans(sig(4, 4)).len(), 2835);
}

#[test]
fn enumeration_is_sorted_and_distinct() {
    for s in signatures(6) {
        let clans = enumerate_clans(s);
        let mut sorted = clans.clone();
        sorted.dedup();
        assert_eq!(sorted.len(), clans.len());
        for c in &clans {
            assert_eq!(c.signature(), s);
            assert_eq!(&clan(&c.to_string()), c);
        }
    }
}

#[test]
fn profiles_match_definition() {
    for s in signatures(6) {
        for c in enumerate_clans(s) {
            let naive = naive_profile(&c.to_string());
            let r = rank_profile(&c);
            let plus: Vec<usize> = r.plus_row().iter().map(|&x| x as usize).collect();
            let minus: Vec<usize> = r.minus_row().iter().map(|&x| x as usize).collect();
            let pairs: Vec<usize> = r.pairs_row_major().iter().map(|&x| x as usize).collect();
            assert_eq!(plus, naive.plus, "{c}");
            assert_eq!(minus, naive.minus, "{c}");
            assert_eq!(pairs, naive.pairs, "{c}");
        }
    }
}

#[test]
fn worked_rank_numbers() {
    let r = rank_profile(&clan("1+1-"));
    assert_eq!(r.plus_row(), &[0, 1, 2, 2]);
    assert_eq!(r.minus_row(), &[0, 0, 1, 2]);
    assert_eq!(r.pairs_row_major(), &[1, 0, 0, 0, 0, 0]);
}

#[test]
fn reconstruction_example() {
    let mut pairs = vec![0u16; 15];
    pairs[0] = 1;
    pairs[1] = 1;
    pairs[5] = 1;
    let profile = RankProfile::new(
        sig(3, 3),
        vec![0, 0, 1, 2, 2, 3],
        vec![0, 0, 1, 2, 2, 3],
        pairs,
    )
    .unwrap();
    assert_eq!(
        clan_from_rank_profile(&profile).unwrap().to_string(),
        "122133"
    );
}

#[test]
fn reconstruction_roundtrip() {
    for s in signatures(7) {
        for c in enumerate_clans(s) {
            assert_eq!(clan_from_rank_profile(&rank_profile(&c)).unwrap(), c);
        }
    }
}

#[test]
fn move_closure_equals_order() {
    for s in signatures(6) {
        let clans = enumerate_clans(s);
        for start in &clans {
            let mut reached = vec![start.clone()];
            let mut frontier = vec![start.clone()];
            while let Some(c) = frontier.pop() {
                for (_, next) in covering_moves(&c) {
                    if !reached.contains(&next) {
                        reached.push(next.clone());
                        frontier.push(next);
                    }
                }
            }
            for other in &clans {
                assert_eq!(
                    reached.contains(other),
                    leq(start, other).unwrap(),
                    "{start} vs {other}"
                );
            }
        }
    }
}

#[test]
fn involution_criteria_agree() {
    for n in 1..=7 {
        let all = enumerate_involutions(n);
        for a in &all {
            for b in &all {
                assert_eq!(
                    involution_leq_rank(a, b).unwrap(),
                    involution_leq_sn(a, b).unwrap(),
                    "{a} vs {b}"
                );
            }
        }
    }
}

#[test]
fn order_through_involutions() {
    for s in signatures(6) {
        let clans = enumerate_clans(s);
        for a in &clans {
            let (ra, ia) = (rank_profile(a), underlying_involution(a));
            for b in &clans {
                let (rb, ib) = (rank_profile(b), underlying_involution(b));
                let signs =
                    (1..=s.n()).all(|i| ra.plus(i) >= rb.plus(i) && ra.minus(i) >= rb.minus(i));
                let inv = involution_leq_rank(&ia, &ib).unwrap();
                let le = leq(a, b).unwrap();
                assert!(!le || inv, "{a} <= {b} but not for involutions");
                assert_eq!(le, inv && signs, "{a} vs {b}");
            }
        }
    }
}
