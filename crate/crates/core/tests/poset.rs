mod common;

use clans_core::{build_poset, covering_moves, interval, leq, poset_properties, Error};
use common::*;

#[test]
fn structure_up_to_seven() {
    for s in signatures(7) {
        let poset = build_poset(s).unwrap();
        let props = poset_properties(&poset);
        assert!(props.pure, "{s}");
        assert_eq!(props.maximal.len(), 1, "{s}");
        let sign_only: Vec<_> = poset
            .nodes()
            .iter()
            .filter(|c| c.is_sign_only())
            .cloned()
            .collect();
        assert_eq!(props.minimal, sign_only, "{s}");
        assert!(poset.unrealized_covers().is_empty(), "{s}");
    }
}

#[test]
fn covers_are_order_covers() {
    for s in signatures(5) {
        let poset = build_poset(s).unwrap();
        let nodes = poset.nodes();
        for &(a, b) in poset.covers() {
            assert!(leq(&nodes[a], &nodes[b]).unwrap());
            let between = (0..nodes.len())
                .filter(|&c| c != a && c != b)
                .any(|c| leq(&nodes[a], &nodes[c]).unwrap() && leq(&nodes[c], &nodes[b]).unwrap());
            assert!(!between, "{} < {} is not a cover", nodes[a], nodes[b]);
            assert_eq!(poset.rank(b), poset.rank(a) + 1);
        }
        for (a, c) in nodes.iter().enumerate() {
            for (_, t) in covering_moves(c) {
                assert!(poset.move_targets(a).contains(&poset.index_of(&t).unwrap()));
            }
        }
    }
}

#[test]
fn paper_intervals() {
    let p22 = build_poset(sig(2, 2)).unwrap();
    let r = interval(&p22, &clan("1122"), &clan("1221")).unwrap();
    assert_eq!(r.elements.len(), 5);
    assert_eq!(r.length, 2);
    assert!(!r.eulerian);
    let p21 = build_poset(sig(2, 1)).unwrap();
    let r = interval(&p21, &clan("++-"), &clan("1+1")).unwrap();
    assert!(r.is_chain);
    assert_eq!(r.elements.len(), r.length + 1);
}

#[test]
fn not_thin_not_eulerian_with_bottom() {
    let props = poset_properties(&build_poset(sig(2, 2)).unwrap());
    assert!(props.ranked_with_bottom);
    assert!(!props.thin_with_bottom.holds);
    assert!(!props.eulerian_with_bottom.holds);
    let w = props.thin_with_bottom.witness.unwrap();
    assert!(w.length == 2 && w.size != 4);
    let w = props.eulerian_with_bottom.witness.unwrap();
    assert_ne!(w.even, w.odd);
}

#[test]
fn interval_errors() {
    let p = build_poset(sig(2, 1)).unwrap();
    assert!(matches!(
        interval(&p, &clan("11+"), &clan("+11")),
        Err(Error::NotComparable { .. })
    ));
    assert!(matches!(
        interval(&p, &clan("+-"), &clan("11")),
        Err(Error::UnknownClan(_))
    ));
}

#[test]
fn one_sided_signature() {
    let p = build_poset(sig(3, 0)).unwrap();
    assert_eq!(p.len(), 1);
    assert!(p.covers().is_empty());
}
