#![allow(dead_code)]

use clans_core::{Clan, Signature};

pub fn sig(p: usize, q: usize) -> Signature {
    Signature::new(p, q).unwrap()
}

pub fn clan(s: &str) -> Clan {
    s.parse().unwrap()
}

/// All signatures with `1 <= p + q <= max_n`.
pub fn signatures(max_n: usize) -> Vec<Signature> {
    (1..=max_n)
        .flat_map(|n| (0..=n).map(move |p| sig(p, n - p)))
        .collect()
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn double_factorial_odd(k: u64) -> u64 {
    (1..=k).map(|i| 2 * i - 1).product()
}

/// Choose the `2k` arc positions, pair them, then place the `p - k` plus signs.
pub fn closed_form_count(p: usize, q: usize) -> u64 {
    let n = (p + q) as u64;
    (0..=p.min(q) as u64)
        .map(|k| binomial(n, 2 * k) * double_factorial_odd(k) * binomial(n - 2 * k, p as u64 - k))
        .sum()
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for perm in permutations(n - 1) {
        for slot in 0..n {
            let mut next = perm.clone();
            next.insert(slot, n);
            out.push(next);
        }
    }
    out
}

/// Signed involutions counted from scratch: involutions of `S_n` with the
/// fixed points split into `p - k` pluses and `q - k` minuses.
pub fn brute_force_count(p: usize, q: usize) -> usize {
    let n = p + q;
    permutations(n)
        .into_iter()
        .filter(|w| (1..=n).all(|i| w[w[i - 1] - 1] == i))
        .map(|w| {
            let fixed = (1..=n).filter(|&i| w[i - 1] == i).count();
            let k = (n - fixed) / 2;
            if k > p || k > q {
                return 0;
            }
            (0u32..1 << fixed)
                .filter(|m| m.count_ones() as usize == p - k)
                .count()
        })
        .sum()
}

/// Rank numbers straight from the definition on the raw string.
pub struct NaiveProfile {
    pub plus: Vec<usize>,
    pub minus: Vec<usize>,
    pub pairs: Vec<usize>,
}

pub fn naive_profile(text: &str) -> NaiveProfile {
    let chars: Vec<char> = text.chars().collect();
    let n = chars.len();
    let mate =
        |i: usize| (0..n).find(|&j| j != i && chars[j] == chars[i] && chars[i].is_ascii_digit());
    let complete_arcs = |i: usize| {
        (0..i)
            .filter(|&s| mate(s).is_some_and(|t| s < t && t < i))
            .count()
    };
    let plus = (1..=n)
        .map(|i| chars[..i].iter().filter(|&&c| c == '+').count() + complete_arcs(i))
        .collect();
    let minus = (1..=n)
        .map(|i| chars[..i].iter().filter(|&&c| c == '-').count() + complete_arcs(i))
        .collect();
    let mut pairs = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            pairs.push(
                (1..=i)
                    .filter(|&s| mate(s - 1).is_some_and(|t| t + 1 > j && s < t + 1))
                    .count(),
            );
        }
    }
    NaiveProfile { plus, minus, pairs }
}
