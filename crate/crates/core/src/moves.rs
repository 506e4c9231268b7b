//! The ten local moves that generate the clan order upward.
//!
//! Patterns sit at scattered positions `i < j (< k < l)`; the symbols between
//! them are untouched.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::clan::{Clan, Symbol};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MoveKind {
    /// `+- -> 11`
    PlusMinusToArc,
    /// `-+ -> 11`
    MinusPlusToArc,
    /// `11+ -> 1+1`
    ArcPastPlus,
    /// `11- -> 1-1`
    ArcPastMinus,
    /// `+11 -> 1+1`
    PlusPastArc,
    /// `-11 -> 1-1`
    MinusPastArc,
    /// `1122 -> 1212`
    DisjointToCrossing,
    /// `1122 -> 1+-1`
    DisjointToPlusMinus,
    /// `1122 -> 1-+1`
    DisjointToMinusPlus,
    /// `1212 -> 1221`
    CrossingToNested,
}

impl MoveKind {
    pub const ALL: [MoveKind; 10] = [
        MoveKind::PlusMinusToArc,
        MoveKind::MinusPlusToArc,
        MoveKind::ArcPastPlus,
        MoveKind::ArcPastMinus,
        MoveKind::PlusPastArc,
        MoveKind::MinusPastArc,
        MoveKind::DisjointToCrossing,
        MoveKind::DisjointToPlusMinus,
        MoveKind::DisjointToMinusPlus,
        MoveKind::CrossingToNested,
    ];

    /// Number of pattern positions.
    pub fn arity(self) -> usize {
        use MoveKind::*;
        match self {
            PlusMinusToArc | MinusPlusToArc => 2,
            ArcPastPlus | ArcPastMinus | PlusPastArc | MinusPastArc => 3,
            DisjointToCrossing | DisjointToPlusMinus | DisjointToMinusPlus | CrossingToNested => 4,
        }
    }

    /// `(source, target)` patterns, e.g. `("1122", "1+-1")`.
    pub fn patterns(self) -> (&'static str, &'static str) {
        use MoveKind::*;
        match self {
            PlusMinusToArc => ("+-", "11"),
            MinusPlusToArc => ("-+", "11"),
            ArcPastPlus => ("11+", "1+1"),
            ArcPastMinus => ("11-", "1-1"),
            PlusPastArc => ("+11", "1+1"),
            MinusPastArc => ("-11", "1-1"),
            DisjointToCrossing => ("1122", "1212"),
            DisjointToPlusMinus => ("1122", "1+-1"),
            DisjointToMinusPlus => ("1122", "1-+1"),
            CrossingToNested => ("1212", "1221"),
        }
    }

    /// Parses `"1122->1+-1"` style names (spaces ignored).
    pub fn from_pattern(text: &str) -> Option<MoveKind> {
        let compact: alloc::string::String = text.chars().filter(|c| !c.is_whitespace()).collect();
        MoveKind::ALL.into_iter().find(|k| {
            let (a, b) = k.patterns();
            compact == format!("{a}->{b}")
        })
    }
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.patterns();
        write!(f, "{a} -> {b}")
    }
}

/// A move kind applied at concrete 1-based positions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MoveInstance {
    pub kind: MoveKind,
    pub positions: Vec<usize>,
}

impl MoveInstance {
    pub fn new(kind: MoveKind, positions: &[usize]) -> Self {
        Self {
            kind,
            positions: positions.to_vec(),
        }
    }
}

impl fmt::Display for MoveInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at (", self.kind)?;
        for (idx, p) in self.positions.iter().enumerate() {
            if idx > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

fn matches_source(clan: &Clan, kind: MoveKind, pos: &[usize]) -> bool {
    use MoveKind::*;
    use Symbol::*;
    if pos.len() != kind.arity()
        || pos.windows(2).any(|w| w[0] >= w[1])
        || pos.first() == Some(&0)
        || pos.last().is_some_and(|&p| p > clan.n())
    {
        return false;
    }
    let s = |i: usize| clan.symbol(pos[i]);
    let arc = |a: usize, b: usize| s(a) == Arc(pos[b]);
    match kind {
        PlusMinusToArc => s(0) == Plus && s(1) == Minus,
        MinusPlusToArc => s(0) == Minus && s(1) == Plus,
        ArcPastPlus => arc(0, 1) && s(2) == Plus,
        ArcPastMinus => arc(0, 1) && s(2) == Minus,
        PlusPastArc => s(0) == Plus && arc(1, 2),
        MinusPastArc => s(0) == Minus && arc(1, 2),
        DisjointToCrossing | DisjointToPlusMinus | DisjointToMinusPlus => arc(0, 1) && arc(2, 3),
        CrossingToNested => arc(0, 2) && arc(1, 3),
    }
}

/// Applies a move, checking that the source pattern is present.
pub fn apply_move(clan: &Clan, instance: &MoveInstance) -> Result<Clan> {
    use MoveKind::*;
    use Symbol::*;
    let pos = &instance.positions;
    if !matches_source(clan, instance.kind, pos) {
        return Err(Error::MoveNotApplicable(format!("{instance} on {clan}")));
    }
    let mut sym = clan.symbols().to_vec();
    let link = |sym: &mut [Symbol], a: usize, b: usize| {
        sym[a - 1] = Arc(b);
        sym[b - 1] = Arc(a);
    };
    match instance.kind {
        PlusMinusToArc | MinusPlusToArc => link(&mut sym, pos[0], pos[1]),
        ArcPastPlus | ArcPastMinus => {
            link(&mut sym, pos[0], pos[2]);
            sym[pos[1] - 1] = clan.symbol(pos[2]);
        }
        PlusPastArc | MinusPastArc => {
            link(&mut sym, pos[0], pos[2]);
            sym[pos[1] - 1] = clan.symbol(pos[0]);
        }
        DisjointToCrossing => {
            link(&mut sym, pos[0], pos[2]);
            link(&mut sym, pos[1], pos[3]);
        }
        DisjointToPlusMinus => {
            link(&mut sym, pos[0], pos[3]);
            sym[pos[1] - 1] = Plus;
            sym[pos[2] - 1] = Minus;
        }
        DisjointToMinusPlus => {
            link(&mut sym, pos[0], pos[3]);
            sym[pos[1] - 1] = Minus;
            sym[pos[2] - 1] = Plus;
        }
        CrossingToNested => {
            link(&mut sym, pos[0], pos[3]);
            link(&mut sym, pos[1], pos[2]);
        }
    }
    Clan::from_symbols(clan.signature(), sym)
}

/// Every application of every move to `clan`, ordered by kind and then
/// positions. Different instances reaching the same clan are all kept.
pub fn covering_moves(clan: &Clan) -> Vec<(MoveInstance, Clan)> {
    use MoveKind::*;
    use Symbol::*;
    let n = clan.n();
    let signs: Vec<(usize, Symbol)> = (1..=n)
        .filter(|&i| !matches!(clan.symbol(i), Arc(_)))
        .map(|i| (i, clan.symbol(i)))
        .collect();
    let arcs: Vec<(usize, usize)> = clan.arcs().collect();
    let mut found: Vec<MoveInstance> = Vec::new();

    for &(i, si) in &signs {
        for &(j, sj) in signs.iter().filter(|(j, _)| *j > i) {
            match (si, sj) {
                (Plus, Minus) => found.push(MoveInstance::new(PlusMinusToArc, &[i, j])),
                (Minus, Plus) => found.push(MoveInstance::new(MinusPlusToArc, &[i, j])),
                _ => {}
            }
        }
    }
    for &(a, b) in &arcs {
        for &(k, sk) in &signs {
            if k > b {
                let kind = if sk == Plus {
                    ArcPastPlus
                } else {
                    ArcPastMinus
                };
                found.push(MoveInstance::new(kind, &[a, b, k]));
            }
            if k < a {
                let kind = if sk == Plus {
                    PlusPastArc
                } else {
                    MinusPastArc
                };
                found.push(MoveInstance::new(kind, &[k, a, b]));
            }
        }
    }
    for &(a, b) in &arcs {
        for &(c, d) in &arcs {
            if b < c {
                for kind in [DisjointToCrossing, DisjointToPlusMinus, DisjointToMinusPlus] {
                    found.push(MoveInstance::new(kind, &[a, b, c, d]));
                }
            }
            if a < c && c < b && b < d {
                found.push(MoveInstance::new(CrossingToNested, &[a, c, b, d]));
            }
        }
    }
    found.sort();
    found
        .into_iter()
        .map(|m| {
            let target = apply_move(clan, &m).expect("enumerated move matches its pattern");
            (m, target)
        })
        .collect()
}
