//! Rank numbers of a clan and the reconstruction of a clan from them.
//!
//! For a clan `c` of length `n` and `1 <= i < j <= n`:
//! - `plus(i)`: plus signs and complete arcs among `c_1..c_i`,
//! - `minus(i)`: minus signs and complete arcs among `c_1..c_i`,
//! - `pair(i, j)`: arcs `s <-> t` with `s <= i < j < t`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::clan::{Clan, Signature, Symbol};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RankProfile {
    signature: Signature,
    plus: Vec<u16>,
    minus: Vec<u16>,
    /// Upper triangle in row-major `(i, j)` order: (1,2), (1,3), ..., (n-1,n).
    pairs: Vec<u16>,
}

/// Position of `(i, j)` in the row-major upper triangle of an `n x n` array.
#[inline]
pub(crate) fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(1 <= i && i < j && j <= n);
    (i - 1) * n - (i - 1) * i / 2 + (j - i - 1)
}

impl RankProfile {
    /// Assembles a profile from the three families, `pairs` listed in the
    /// row-major order `(1,2), (1,3), ..., (n-1,n)`.
    pub fn new(
        signature: Signature,
        plus: Vec<u16>,
        minus: Vec<u16>,
        pairs: Vec<u16>,
    ) -> Result<Self> {
        let n = signature.n();
        for (name, len, want) in [
            ("plus", plus.len(), n),
            ("minus", minus.len(), n),
            ("pairs", pairs.len(), n * (n - 1) / 2),
        ] {
            if len != want {
                return Err(Error::InconsistentProfile(format!(
                    "{name} has {len} entries, expected {want}"
                )));
            }
        }
        Ok(Self {
            signature,
            plus,
            minus,
            pairs,
        })
    }

    pub fn signature(&self) -> Signature {
        self.signature
    }

    pub fn n(&self) -> usize {
        self.plus.len()
    }

    /// `γ(i;+)` for `1 <= i <= n`; `plus(0)` is 0.
    pub fn plus(&self, i: usize) -> usize {
        if i == 0 {
            0
        } else {
            self.plus[i - 1] as usize
        }
    }

    pub fn minus(&self, i: usize) -> usize {
        if i == 0 {
            0
        } else {
            self.minus[i - 1] as usize
        }
    }

    /// `γ(i;j)` for `1 <= i < j <= n`.
    pub fn pair(&self, i: usize, j: usize) -> usize {
        self.pairs[pair_index(self.n(), i, j)] as usize
    }

    pub fn plus_row(&self) -> &[u16] {
        &self.plus
    }

    pub fn minus_row(&self) -> &[u16] {
        &self.minus
    }

    pub fn pairs_row_major(&self) -> &[u16] {
        &self.pairs
    }
}

pub fn rank_profile(clan: &Clan) -> RankProfile {
    let n = clan.n();
    let mut plus = vec![0u16; n];
    let mut minus = vec![0u16; n];
    let (mut p, mut m) = (0u16, 0u16);
    for i in 1..=n {
        match clan.symbol(i) {
            Symbol::Plus => p += 1,
            Symbol::Minus => m += 1,
            Symbol::Arc(mate) if mate < i => {
                p += 1;
                m += 1;
            }
            Symbol::Arc(_) => {}
        }
        plus[i - 1] = p;
        minus[i - 1] = m;
    }
    let mut pairs = vec![0u16; n * n.saturating_sub(1) / 2];
    for (s, t) in clan.arcs() {
        for i in s..t {
            for j in i + 1..t {
                pairs[pair_index(n, i, j)] += 1;
            }
        }
    }
    RankProfile {
        signature: clan.signature(),
        plus,
        minus,
        pairs,
    }
}

/// Rebuilds the unique clan with the given rank numbers.
///
/// The jumps of `plus` and `minus` locate the signs and the first and second
/// arc ends. A second end at `k` is matched with the first unmated first end
/// `i_l` (in left-to-right order) with `pair(i_l, k) < l`.
pub fn clan_from_rank_profile(profile: &RankProfile) -> Result<Clan> {
    let n = profile.n();
    let sig = profile.signature();
    if profile.plus(n) != sig.p() || profile.minus(n) != sig.q() {
        return Err(Error::InconsistentProfile(format!(
            "totals ({}, {}) do not match signature {sig}",
            profile.plus(n),
            profile.minus(n)
        )));
    }
    let mut symbols = vec![Symbol::Plus; n];
    let mut unmated: Vec<usize> = Vec::new();
    for k in 1..=n {
        let dp = profile.plus(k).checked_sub(profile.plus(k - 1));
        let dm = profile.minus(k).checked_sub(profile.minus(k - 1));
        match (dp, dm) {
            (Some(1), Some(0)) => symbols[k - 1] = Symbol::Plus,
            (Some(0), Some(1)) => symbols[k - 1] = Symbol::Minus,
            (Some(0), Some(0)) => unmated.push(k),
            (Some(1), Some(1)) => {
                let l = (1..=unmated.len())
                    .find(|&l| profile.pair(unmated[l - 1], k) < l)
                    .ok_or_else(|| {
                        Error::InconsistentProfile(format!("no mate for second occurrence at {k}"))
                    })?;
                let first = unmated.remove(l - 1);
                symbols[first - 1] = Symbol::Arc(k);
                symbols[k - 1] = Symbol::Arc(first);
            }
            _ => {
                return Err(Error::InconsistentProfile(format!(
                    "invalid jump pattern at position {k}"
                )))
            }
        }
    }
    if !unmated.is_empty() {
        return Err(Error::InconsistentProfile(format!(
            "first occurrences {unmated:?} never closed"
        )));
    }
    let clan =
        Clan::from_symbols(sig, symbols).map_err(|e| Error::InconsistentProfile(format!("{e}")))?;
    if rank_profile(&clan) != *profile {
        return Err(Error::InconsistentProfile(format!(
            "pair counts disagree with reconstructed clan {clan}"
        )));
    }
    Ok(clan)
}
