//! Text, JSON and DOT renderings, and the rational flag-file format.

use std::fmt::Write as _;

use clans_core::flag::Flag;
use clans_core::poset::{ClanPoset, IntervalReport, IntervalWitness, PosetProperties, Verdict};
use clans_core::{Clan, RankProfile, Rational, Signature, Vector};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

/// On-disk flag: `columns[i]` holds the coordinates of `v_{i+1}` as rational
/// literals such as `"3"` or `"-1/2"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagFile {
    pub n: usize,
    pub columns: Vec<Vec<String>>,
}

#[derive(Debug, thiserror::Error)]
pub enum FlagFileError {
    #[error("malformed flag file: {0}")]
    Json(#[from] serde_json::Error),
    #[error("flag file declares n = {n} but has {found} column(s)")]
    ColumnCount { n: usize, found: usize },
    #[error("column {column} has {found} entries, expected {n}")]
    ColumnLength {
        column: usize,
        n: usize,
        found: usize,
    },
    #[error("column {column}: {text:?} is not a rational number")]
    Entry { column: usize, text: String },
    #[error(transparent)]
    Flag(#[from] clans_core::Error),
}

impl FlagFile {
    pub fn from_flag(flag: &Flag) -> Self {
        Self {
            n: flag.n(),
            columns: flag
                .basis()
                .iter()
                .map(|v| v.iter().map(ToString::to_string).collect())
                .collect(),
        }
    }

    pub fn to_flag(&self) -> Result<Flag, FlagFileError> {
        if self.columns.len() != self.n {
            return Err(FlagFileError::ColumnCount {
                n: self.n,
                found: self.columns.len(),
            });
        }
        let mut basis = Vec::with_capacity(self.n);
        for (idx, col) in self.columns.iter().enumerate() {
            if col.len() != self.n {
                return Err(FlagFileError::ColumnLength {
                    column: idx + 1,
                    n: self.n,
                    found: col.len(),
                });
            }
            let v = col
                .iter()
                .map(|s| {
                    parse_rational(s).ok_or_else(|| FlagFileError::Entry {
                        column: idx + 1,
                        text: s.clone(),
                    })
                })
                .collect::<Result<Vector, _>>()?;
            basis.push(v);
        }
        Ok(Flag::new(basis)?)
    }
}

pub fn parse_rational(text: &str) -> Option<Rational> {
    text.trim().parse().ok()
}

pub fn read_flag(text: &str) -> Result<Flag, FlagFileError> {
    serde_json::from_str::<FlagFile>(text)?.to_flag()
}

pub fn write_flag(flag: &Flag) -> String {
    serde_json::to_string_pretty(&FlagFile::from_flag(flag)).expect("flag file serializes")
}

fn signature_json(sig: Signature) -> Value {
    json!({ "p": sig.p(), "q": sig.q() })
}

/// `e1 + e4`, `-1/2 e3`, ...
pub fn vector_text(v: &Vector) -> String {
    let mut out = String::new();
    for (idx, c) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        let negative = c.is_negative();
        let magnitude = c.abs();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if !magnitude.is_one() {
            let _ = write!(out, "{magnitude} ");
        }
        let _ = write!(out, "e{}", idx + 1);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn flag_text(flag: &Flag) -> String {
    let parts: Vec<String> = flag.basis().iter().map(vector_text).collect();
    format!("⟨{}⟩", parts.join(", "))
}

pub fn enumeration_text(clans: &[Clan]) -> String {
    clans.iter().map(|c| format!("{c}\n")).collect()
}

pub fn enumeration_json(sig: Signature, clans: &[Clan]) -> Value {
    json!({
        "signature": signature_json(sig),
        "count": clans.len(),
        "clans": clans.iter().map(ToString::to_string).collect::<Vec<_>>(),
    })
}

fn joined(values: &[u16]) -> String {
    values
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn index_list(n: usize) -> String {
    (1..=n).map(|i| i.to_string()).collect::<Vec<_>>().join(",")
}

/// The three rank-number families, one line each.
pub fn profile_text(clan: &Clan, profile: &RankProfile) -> String {
    let n = profile.n();
    let pairs: Vec<String> = (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| format!("({i},{j})")))
        .collect();
    let mut out = format!("clan {clan} of signature {}\n", clan.signature());
    let _ = writeln!(
        out,
        "γ(i;+) = {} for i = {}",
        joined(profile.plus_row()),
        index_list(n)
    );
    let _ = writeln!(
        out,
        "γ(i;-) = {} for i = {}",
        joined(profile.minus_row()),
        index_list(n)
    );
    if !pairs.is_empty() {
        let _ = writeln!(
            out,
            "γ(i;j) = {} for (i,j) = {}",
            joined(profile.pairs_row_major()),
            pairs.join(", ")
        );
    }
    out
}

pub fn profile_json(clan: &Clan, profile: &RankProfile) -> Value {
    let n = profile.n();
    let pairs: Vec<Value> = (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .map(|(i, j)| json!({ "i": i, "j": j, "value": profile.pair(i, j) }))
        .collect();
    json!({
        "clan": clan.to_string(),
        "signature": signature_json(clan.signature()),
        "plus": profile.plus_row(),
        "minus": profile.minus_row(),
        "pairs": pairs,
    })
}

pub fn hasse_dot(poset: &ClanPoset) -> String {
    let sig = poset.signature();
    let mut out = format!("digraph clans_{}_{} {{\n", sig.p(), sig.q());
    out.push_str("  rankdir=BT;\n  node [shape=plaintext];\n");
    let top = poset.ranks().iter().copied().max().unwrap_or(0);
    for r in 0..=top {
        let _ = write!(out, "  {{ rank=same;");
        for (idx, clan) in poset.nodes().iter().enumerate() {
            if poset.rank(idx) == r {
                let _ = write!(out, " n{idx} [label=\"{clan}\"];");
            }
        }
        out.push_str(" }\n");
    }
    for &(lo, hi) in poset.covers() {
        let _ = writeln!(out, "  n{lo} -> n{hi};");
    }
    out.push_str("}\n");
    out
}

pub fn hasse_json(poset: &ClanPoset) -> Value {
    json!({
        "signature": signature_json(poset.signature()),
        "nodes": poset.nodes().iter().map(ToString::to_string).collect::<Vec<_>>(),
        "covers": poset.covers().iter().map(|&(a, b)| [a, b]).collect::<Vec<_>>(),
        "rank": poset.ranks(),
    })
}

pub fn hasse_text(poset: &ClanPoset) -> String {
    let mut out = format!(
        "poset of signature {}: {} clans, {} cover edges\n",
        poset.signature(),
        poset.len(),
        poset.covers().len()
    );
    let top = poset.ranks().iter().copied().max().unwrap_or(0);
    for r in 0..=top {
        let row: Vec<String> = (0..poset.len())
            .filter(|&i| poset.rank(i) == r)
            .map(|i| poset.nodes()[i].to_string())
            .collect();
        let _ = writeln!(out, "rank {r}: {}", row.join(" "));
    }
    for &(lo, hi) in poset.covers() {
        let _ = writeln!(out, "{} < {}", poset.nodes()[lo], poset.nodes()[hi]);
    }
    out
}

fn witness_text(w: &IntervalWitness) -> String {
    let bottom = w
        .bottom
        .as_ref()
        .map_or("0̂".to_string(), ToString::to_string);
    format!(
        "[{bottom}, {}] length {} with {} elements ({} even rank, {} odd rank)",
        w.top, w.length, w.size, w.even, w.odd
    )
}

fn witness_json(w: &IntervalWitness) -> Value {
    json!({
        "bottom": w.bottom.as_ref().map(ToString::to_string),
        "top": w.top.to_string(),
        "length": w.length,
        "size": w.size,
        "even": w.even,
        "odd": w.odd,
    })
}

pub fn interval_text(report: &IntervalReport) -> String {
    let mut out = format!(
        "interval [{}, {}]: {} elements, length {}\n",
        report.bottom,
        report.top,
        report.elements.len(),
        report.length
    );
    let _ = writeln!(out, "chain: {}", report.is_chain);
    let _ = writeln!(out, "eulerian: {}", report.eulerian);
    let _ = writeln!(
        out,
        "rank histogram: {}",
        report
            .rank_histogram
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    );
    for (clan, r) in report.elements.iter().zip(&report.element_ranks) {
        let _ = writeln!(out, "  {r} {clan}");
    }
    for w in &report.thin_violations {
        let _ = writeln!(out, "not thin: {}", witness_text(w));
    }
    for w in &report.eulerian_violations {
        let _ = writeln!(out, "not eulerian: {}", witness_text(w));
    }
    out
}

pub fn interval_json(report: &IntervalReport) -> Value {
    json!({
        "bottom": report.bottom.to_string(),
        "top": report.top.to_string(),
        "elements": report.elements.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "element_ranks": report.element_ranks,
        "size": report.elements.len(),
        "length": report.length,
        "is_chain": report.is_chain,
        "rank_histogram": report.rank_histogram,
        "eulerian": report.eulerian,
        "eulerian_violations": report.eulerian_violations.iter().map(witness_json).collect::<Vec<_>>(),
        "thin_violations": report.thin_violations.iter().map(witness_json).collect::<Vec<_>>(),
    })
}

fn verdict_text(name: &str, v: &Verdict) -> String {
    match &v.witness {
        Some(w) if !v.holds => format!(
            "{name}: no ({} violating intervals, e.g. {})\n",
            v.violations,
            witness_text(w)
        ),
        _ => format!("{name}: yes\n"),
    }
}

fn verdict_json(v: &Verdict) -> Value {
    json!({
        "holds": v.holds,
        "violations": v.violations,
        "witness": v.witness.as_ref().map(witness_json),
    })
}

fn clan_list(clans: &[Clan]) -> String {
    clans
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn properties_text(props: &PosetProperties) -> String {
    let mut out = format!(
        "signature {}: {} clans, {} cover edges\n",
        props.signature, props.elements, props.cover_edges
    );
    let _ = writeln!(
        out,
        "pure: {} (maximal chains of length {}..{})",
        if props.pure { "yes" } else { "no" },
        props.shortest_maximal_chain,
        props.longest_maximal_chain
    );
    let _ = writeln!(out, "minimal: {}", clan_list(&props.minimal));
    let _ = writeln!(out, "maximal: {}", clan_list(&props.maximal));
    let _ = writeln!(
        out,
        "ranked with adjoined bottom: {}",
        if props.ranked_with_bottom {
            "yes"
        } else {
            "no"
        }
    );
    out.push_str(&verdict_text(
        "thin with adjoined bottom",
        &props.thin_with_bottom,
    ));
    out.push_str(&verdict_text(
        "eulerian with adjoined bottom",
        &props.eulerian_with_bottom,
    ));
    out
}

pub fn properties_json(props: &PosetProperties) -> Value {
    json!({
        "signature": signature_json(props.signature),
        "elements": props.elements,
        "cover_edges": props.cover_edges,
        "pure": props.pure,
        "shortest_maximal_chain": props.shortest_maximal_chain,
        "longest_maximal_chain": props.longest_maximal_chain,
        "minimal": props.minimal.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "maximal": props.maximal.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "ranked_with_bottom": props.ranked_with_bottom,
        "thin_with_bottom": verdict_json(&props.thin_with_bottom),
        "eulerian_with_bottom": verdict_json(&props.eulerian_with_bottom),
    })
}
