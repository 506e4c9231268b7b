//! The full poset of clans of one signature: relation, Hasse diagram, ranks,
//! intervals and the structural diagnostics (purity, thinness, Eulerian).

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::BitSet;
use crate::clan::{enumerate_clans, Clan, Signature};
use crate::error::{Error, Result};
use crate::moves::covering_moves;
use crate::order::profile_leq;
use crate::rank::{rank_profile, RankProfile};

#[derive(Debug, Clone)]
pub struct ClanPoset {
    signature: Signature,
    nodes: Vec<Clan>,
    index: BTreeMap<Clan, usize>,
    profiles: Vec<RankProfile>,
    /// `up[a]` holds every `b` with `a <= b` (reflexive).
    up: Vec<BitSet>,
    down: Vec<BitSet>,
    covers: Vec<(usize, usize)>,
    upper_covers: Vec<Vec<usize>>,
    lower_covers: Vec<Vec<usize>>,
    /// Distinct move targets per node.
    move_targets: Vec<Vec<usize>>,
    rank: Vec<usize>,
}

/// Builds the poset of all clans of `signature`.
///
/// The relation comes from the rank-number criterion. The reflexive-transitive
/// closure of the covering moves is computed alongside and must coincide with
/// it exactly; any disagreement is returned as [`Error::OrderMismatch`].
pub fn build_poset(signature: Signature) -> Result<ClanPoset> {
    let nodes = enumerate_clans(signature);
    let n = nodes.len();
    let index: BTreeMap<Clan, usize> = nodes
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, c)| (c, i))
        .collect();
    let profiles: Vec<RankProfile> = nodes.iter().map(rank_profile).collect();

    let mut up = vec![BitSet::new(n); n];
    let mut down = vec![BitSet::new(n); n];
    for a in 0..n {
        for b in 0..n {
            if profile_leq(&profiles[a], &profiles[b]) {
                up[a].insert(b);
                down[b].insert(a);
            }
        }
    }

    let mut move_targets = Vec::with_capacity(n);
    for (a, clan) in nodes.iter().enumerate() {
        let mut targets: Vec<usize> = Vec::new();
        for (m, target) in covering_moves(clan) {
            let b = *index.get(&target).ok_or_else(|| {
                Error::OrderMismatch(format!("move {m} on {clan} left the signature"))
            })?;
            if b == a || !up[a].contains(b) {
                return Err(Error::OrderMismatch(format!(
                    "move {m} takes {clan} to {target}, which is not strictly above it"
                )));
            }
            targets.push(b);
        }
        targets.sort_unstable();
        targets.dedup();
        move_targets.push(targets);
    }

    // Higher elements have strictly smaller up-sets, so this order visits
    // every move target before its source.
    let mut by_height: Vec<usize> = (0..n).collect();
    by_height.sort_by_key(|&a| up[a].count());
    let mut reach = vec![BitSet::new(n); n];
    for &a in &by_height {
        let mut r = BitSet::new(n);
        r.insert(a);
        for &b in &move_targets[a] {
            r.union_with(&reach[b]);
        }
        reach[a] = r;
    }
    for a in 0..n {
        if reach[a] != up[a] {
            let mut extra = up[a].clone();
            extra.difference_with(&reach[a]);
            let mut missing = reach[a].clone();
            missing.difference_with(&up[a]);
            let witness = extra.iter().chain(missing.iter()).next().unwrap_or(a);
            return Err(Error::OrderMismatch(format!(
                "{} <= {} is {} by rank numbers but {} by moves",
                nodes[a],
                nodes[witness],
                up[a].contains(witness),
                reach[a].contains(witness)
            )));
        }
    }

    let mut covers = Vec::new();
    let mut upper_covers = vec![Vec::new(); n];
    let mut lower_covers = vec![Vec::new(); n];
    for a in 0..n {
        let mut strict = up[a].clone();
        strict.remove(a);
        let mut candidates = strict.clone();
        for c in strict.iter() {
            let mut above = up[c].clone();
            above.remove(c);
            candidates.difference_with(&above);
        }
        for b in candidates.iter() {
            covers.push((a, b));
            upper_covers[a].push(b);
            lower_covers[b].push(a);
        }
    }

    let mut by_depth: Vec<usize> = (0..n).collect();
    by_depth.sort_by_key(|&a| down[a].count());
    let mut rank = vec![0usize; n];
    for &b in &by_depth {
        rank[b] = lower_covers[b]
            .iter()
            .map(|&a| rank[a] + 1)
            .max()
            .unwrap_or(0);
    }

    Ok(ClanPoset {
        signature,
        nodes,
        index,
        profiles,
        up,
        down,
        covers,
        upper_covers,
        lower_covers,
        move_targets,
        rank,
    })
}

impl ClanPoset {
    pub fn signature(&self) -> Signature {
        self.signature
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Nodes in canonical enumeration order; indices below refer to this list.
    pub fn nodes(&self) -> &[Clan] {
        &self.nodes
    }

    pub fn index_of(&self, clan: &Clan) -> Option<usize> {
        self.index.get(clan).copied()
    }

    pub fn profile(&self, a: usize) -> &RankProfile {
        &self.profiles[a]
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    pub fn up_set(&self, a: usize) -> &BitSet {
        &self.up[a]
    }

    pub fn down_set(&self, a: usize) -> &BitSet {
        &self.down[a]
    }

    /// Cover edges `(lower, upper)`, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn upper_covers(&self, a: usize) -> &[usize] {
        &self.upper_covers[a]
    }

    pub fn lower_covers(&self, a: usize) -> &[usize] {
        &self.lower_covers[a]
    }

    pub fn move_targets(&self, a: usize) -> &[usize] {
        &self.move_targets[a]
    }

    /// Length of a longest chain from a minimal element.
    pub fn rank(&self, a: usize) -> usize {
        self.rank[a]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.rank
    }

    pub fn minimal(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&a| self.lower_covers[a].is_empty())
            .collect()
    }

    pub fn maximal(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&a| self.upper_covers[a].is_empty())
            .collect()
    }

    /// Cover edges not produced by any single move.
    pub fn unrealized_covers(&self) -> Vec<(usize, usize)> {
        self.covers
            .iter()
            .copied()
            .filter(|&(a, b)| self.move_targets[a].binary_search(&b).is_err())
            .collect()
    }

    fn lookup(&self, clan: &Clan) -> Result<usize> {
        self.index_of(clan)
            .ok_or_else(|| Error::UnknownClan(clan.to_string()))
    }

    fn interval_set(&self, a: usize, b: usize) -> BitSet {
        let mut s = self.up[a].clone();
        s.intersect_with(&self.down[b]);
        s
    }

    fn parity_sets(&self) -> [BitSet; 2] {
        let mut sets = [BitSet::new(self.len()), BitSet::new(self.len())];
        for (a, &r) in self.rank.iter().enumerate() {
            sets[r % 2].insert(a);
        }
        sets
    }
}

/// An interval `[bottom, top]`; `bottom == None` is the adjoined minimum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalWitness {
    pub bottom: Option<Clan>,
    pub top: Clan,
    pub length: usize,
    pub size: usize,
    pub even: usize,
    pub odd: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalReport {
    pub bottom: Clan,
    pub top: Clan,
    /// Elements ordered by rank, then by enumeration order.
    pub elements: Vec<Clan>,
    /// Rank of each element relative to `bottom`.
    pub element_ranks: Vec<usize>,
    pub length: usize,
    pub is_chain: bool,
    /// Number of elements at each relative rank `0..=length`.
    pub rank_histogram: Vec<usize>,
    /// Every subinterval of length >= 1 has as many even-rank as odd-rank elements.
    pub eulerian: bool,
    pub eulerian_violations: Vec<IntervalWitness>,
    /// Length-2 subintervals whose size is not 4.
    pub thin_violations: Vec<IntervalWitness>,
}

pub fn interval(poset: &ClanPoset, bottom: &Clan, top: &Clan) -> Result<IntervalReport> {
    let (b, t) = (poset.lookup(bottom)?, poset.lookup(top)?);
    if !poset.leq(b, t) {
        return Err(Error::NotComparable {
            bottom: bottom.to_string(),
            top: top.to_string(),
        });
    }
    let members = poset.interval_set(b, t);
    let mut order: Vec<usize> = members.iter().collect();
    order.sort_by_key(|&x| (poset.rank(x), x));

    let mut rel = BTreeMap::new();
    for &x in &order {
        let r = poset
            .lower_covers(x)
            .iter()
            .filter_map(|y| rel.get(y).map(|r: &usize| r + 1))
            .max()
            .unwrap_or(0);
        rel.insert(x, r);
    }
    let length = rel[&t];
    let mut rank_histogram = vec![0; length + 1];
    for r in rel.values() {
        rank_histogram[*r] += 1;
    }
    let is_chain = order.iter().all(|&x| {
        members.intersection_count(&poset.up[x]) + members.intersection_count(&poset.down[x])
            == members.count() + 1
    });

    let parity = poset.parity_sets();
    let mut eulerian_violations = Vec::new();
    let mut thin_violations = Vec::new();
    for &x in &order {
        for &y in &order {
            if x == y || !poset.leq(x, y) {
                continue;
            }
            let w = witness(poset, Some(x), y, &parity);
            if w.even != w.odd {
                eulerian_violations.push(w.clone());
            }
            if w.length == 2 && w.size != 4 {
                thin_violations.push(w);
            }
        }
    }

    Ok(IntervalReport {
        bottom: bottom.clone(),
        top: top.clone(),
        elements: order.iter().map(|&x| poset.nodes[x].clone()).collect(),
        element_ranks: order.iter().map(|x| rel[x]).collect(),
        length,
        is_chain,
        rank_histogram,
        eulerian: eulerian_violations.is_empty(),
        eulerian_violations,
        thin_violations,
    })
}

fn witness(
    poset: &ClanPoset,
    bottom: Option<usize>,
    top: usize,
    parity: &[BitSet; 2],
) -> IntervalWitness {
    match bottom {
        Some(x) => {
            let s = poset.interval_set(x, top);
            IntervalWitness {
                bottom: Some(poset.nodes[x].clone()),
                top: poset.nodes[top].clone(),
                length: poset.rank(top) - poset.rank(x),
                size: s.count(),
                even: s.intersection_count(&parity[0]),
                odd: s.intersection_count(&parity[1]),
            }
        }
        None => {
            // The adjoined minimum sits one rank below every minimal element.
            let s = &poset.down[top];
            IntervalWitness {
                bottom: None,
                top: poset.nodes[top].clone(),
                length: poset.rank(top) + 1,
                size: s.count() + 1,
                even: s.intersection_count(&parity[1]) + 1,
                odd: s.intersection_count(&parity[0]),
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub violations: usize,
    pub witness: Option<IntervalWitness>,
}

impl Verdict {
    fn from_witnesses(mut ws: impl Iterator<Item = IntervalWitness>) -> Self {
        let first = ws.next();
        let violations = usize::from(first.is_some()) + ws.count();
        Verdict {
            holds: first.is_none(),
            violations,
            witness: first,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PosetProperties {
    pub signature: Signature,
    pub elements: usize,
    pub cover_edges: usize,
    /// All maximal chains have the same length.
    pub pure: bool,
    pub shortest_maximal_chain: usize,
    pub longest_maximal_chain: usize,
    pub minimal: Vec<Clan>,
    pub maximal: Vec<Clan>,
    /// With a formally adjoined minimum: pure and bounded.
    pub ranked_with_bottom: bool,
    pub thin_with_bottom: Verdict,
    pub eulerian_with_bottom: Verdict,
}

pub fn poset_properties(poset: &ClanPoset) -> PosetProperties {
    let n = poset.len();
    let minimal = poset.minimal();
    let maximal = poset.maximal();

    // Path lengths from each node up to a maximal element along covers.
    let mut by_height: Vec<usize> = (0..n).collect();
    by_height.sort_by_key(|&a| poset.up[a].count());
    let mut longest = vec![0usize; n];
    let mut shortest = vec![0usize; n];
    for &a in &by_height {
        let ups = poset.upper_covers(a);
        if !ups.is_empty() {
            longest[a] = 1 + ups.iter().map(|&b| longest[b]).max().unwrap_or(0);
            shortest[a] = 1 + ups.iter().map(|&b| shortest[b]).min().unwrap_or(0);
        }
    }
    let shortest_chain = minimal.iter().map(|&a| shortest[a]).min().unwrap_or(0);
    let longest_chain = minimal.iter().map(|&a| longest[a]).max().unwrap_or(0);
    let pure = shortest_chain == longest_chain;

    let parity = poset.parity_sets();
    let mut pairs: Vec<(Option<usize>, usize)> = Vec::new();
    for x in 0..n {
        pairs.extend(poset.up[x].iter().filter(|&y| y != x).map(|y| (Some(x), y)));
    }
    pairs.extend((0..n).map(|y| (None, y)));
    let all = || pairs.iter().map(|&(x, y)| witness(poset, x, y, &parity));

    let thin = Verdict::from_witnesses(all().filter(|w| w.length == 2 && w.size != 4));
    let eulerian = Verdict::from_witnesses(all().filter(|w| w.even != w.odd));

    PosetProperties {
        signature: poset.signature,
        elements: n,
        cover_edges: poset.covers.len(),
        pure,
        shortest_maximal_chain: shortest_chain,
        longest_maximal_chain: longest_chain,
        ranked_with_bottom: pure && maximal.len() == 1,
        minimal: minimal.iter().map(|&a| poset.nodes[a].clone()).collect(),
        maximal: maximal.iter().map(|&a| poset.nodes[a].clone()).collect(),
        thin_with_bottom: thin,
        eulerian_with_bottom: eulerian,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::String;

    fn sig(p: usize, q: usize) -> Signature {
        Signature::new(p, q).unwrap()
    }

    fn clan(s: &str) -> Clan {
        s.parse().unwrap()
    }

    fn names(cs: &[Clan]) -> Vec<String> {
        cs.iter().map(|c| c.to_string()).collect()
    }

    #[test]
    fn one_one() {
        let p = build_poset(sig(1, 1)).unwrap();
        assert_eq!(names(p.nodes()), ["+-", "-+", "11"]);
        assert_eq!(p.covers(), &[(0, 2), (1, 2)]);
        assert_eq!(p.ranks(), &[0, 0, 1]);
    }

    #[test]
    fn two_one_extremes() {
        let p = build_poset(sig(2, 1)).unwrap();
        assert_eq!(p.len(), 6);
        let max: Vec<Clan> = p
            .maximal()
            .into_iter()
            .map(|a| p.nodes()[a].clone())
            .collect();
        assert_eq!(names(&max), ["1+1"]);
        let min: Vec<Clan> = p
            .minimal()
            .into_iter()
            .map(|a| p.nodes()[a].clone())
            .collect();
        assert_eq!(names(&min), ["++-", "+-+", "-++"]);
        assert!(p.unrealized_covers().is_empty());
    }

    #[test]
    fn degenerate_signature() {
        let p = build_poset(sig(3, 0)).unwrap();
        assert_eq!(p.len(), 1);
        assert!(p.covers().is_empty());
        let props = poset_properties(&p);
        assert!(props.pure);
        assert_eq!((props.minimal.len(), props.maximal.len()), (1, 1));
    }

    #[test]
    fn chain_interval() {
        let p = build_poset(sig(2, 1)).unwrap();
        let r = interval(&p, &clan("++-"), &clan("1+1")).unwrap();
        assert_eq!(names(&r.elements), ["++-", "+11", "1+1"]);
        assert!(r.is_chain);
        assert_eq!(r.length, 2);
        assert_eq!(r.rank_histogram, [1, 1, 1]);
        assert_eq!(r.thin_violations.len(), 1);
    }

    #[test]
    fn five_element_interval() {
        let p = build_poset(sig(2, 2)).unwrap();
        let r = interval(&p, &clan("1122"), &clan("1221")).unwrap();
        assert_eq!(r.elements.len(), 5);
        assert_eq!(r.length, 2);
        assert_eq!(r.rank_histogram, [1, 3, 1]);
        assert!(!r.is_chain);
        assert!(!r.eulerian);
        assert_eq!(r.thin_violations[0].size, 5);
    }

    #[test]
    fn trivial_interval_and_errors() {
        let p = build_poset(sig(2, 1)).unwrap();
        let r = interval(&p, &clan("+11"), &clan("+11")).unwrap();
        assert_eq!((r.elements.len(), r.length), (1, 0));
        assert!(r.is_chain && r.eulerian);
        assert!(matches!(
            interval(&p, &clan("1+1"), &clan("++-")),
            Err(Error::NotComparable { .. })
        ));
        assert!(matches!(
            interval(&p, &clan("+-"), &clan("11")),
            Err(Error::UnknownClan(_))
        ));
    }

    #[test]
    fn properties_two_one() {
        let props = poset_properties(&build_poset(sig(2, 1)).unwrap());
        assert!(props.pure && props.ranked_with_bottom);
        assert_eq!(props.minimal.len(), 3);
        assert!(!props.thin_with_bottom.holds);
        let w = props.thin_with_bottom.witness.unwrap();
        assert_eq!(w.bottom, Some(clan("++-")));
        assert_eq!(w.top, clan("1+1"));
        assert_eq!(w.size, 3);
    }

    #[test]
    fn properties_two_two() {
        let props = poset_properties(&build_poset(sig(2, 2)).unwrap());
        assert!(props.pure);
        assert!(!props.thin_with_bottom.holds);
        assert!(!props.eulerian_with_bottom.holds);
        assert_eq!(names(&props.maximal), ["1221"]);
    }
}
