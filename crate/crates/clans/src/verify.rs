//! Exhaustive cross-validation of one signature: combinatorial order, move
//! closure, involution reformulation and the exact flag geometry.

use std::fmt;

use clans_core::curves::{curve_check, default_samples, CurveCase};
use clans_core::flag::{
    closure_holds, measured_profile, orbit_of, yamamoto_representative, SplitSpaces,
};
use clans_core::involution::{involution_leq_rank, underlying_involution};
use clans_core::poset::{build_poset, poset_properties, ClanPoset};
use clans_core::{covering_moves, Clan, Signature};
use rayon::prelude::*;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub passed: bool,
    pub checks: usize,
    pub detail: String,
}

impl fmt::Display for SuiteResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {:<24} {:>10} checks", self.name, self.checks)?;
        if !self.detail.is_empty() {
            write!(f, "  {}", self.detail)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub signature: Signature,
    pub suites: Vec<SuiteResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(|s| s.passed)
    }
}

fn suite(name: &'static str, checks: usize, failure: Option<String>) -> SuiteResult {
    SuiteResult {
        name,
        passed: failure.is_none(),
        checks,
        detail: failure.unwrap_or_default(),
    }
}

pub const SUITES: [&str; 9] = [
    "move-closure",
    "order-axioms",
    "move-monotonicity",
    "cover-realizability",
    "purity-and-extremes",
    "involution-order",
    "orbit-roundtrip",
    "geometric-agreement",
    "degeneration-curves",
];

/// Runs every suite for `signature`. Suites after a failed poset build are
/// reported as failed without running.
pub fn verify(signature: Signature) -> VerifyReport {
    let poset =
        match build_poset(signature) {
            Ok(p) => p,
            Err(e) => {
                let mut suites = vec![suite(SUITES[0], 0, Some(e.to_string()))];
                suites.extend(SUITES[1..].iter().map(|&name| {
                    suite(name, 0, Some("not run: poset construction failed".into()))
                }));
                return VerifyReport { signature, suites };
            }
        };
    let n = poset.len();
    let suites = vec![
        suite(SUITES[0], n * n, None),
        order_axioms(&poset),
        move_monotonicity(&poset),
        cover_realizability(&poset),
        purity_and_extremes(&poset),
        involution_order(&poset),
        orbit_roundtrip(&poset),
        geometric_agreement(&poset),
        degeneration_curves(&poset),
    ];
    VerifyReport { signature, suites }
}

fn order_axioms(poset: &ClanPoset) -> SuiteResult {
    let n = poset.len();
    let failure = (0..n).into_par_iter().find_map_any(|a| {
        if !poset.leq(a, a) {
            return Some(format!("{} is not <= itself", poset.nodes()[a]));
        }
        for b in poset.up_set(a).iter() {
            if b != a && poset.leq(b, a) {
                return Some(format!(
                    "{} and {} are mutually <=",
                    poset.nodes()[a],
                    poset.nodes()[b]
                ));
            }
            if let Some(c) = poset.up_set(b).iter().find(|&c| !poset.leq(a, c)) {
                return Some(format!(
                    "{} <= {} <= {} but not transitively",
                    poset.nodes()[a],
                    poset.nodes()[b],
                    poset.nodes()[c]
                ));
            }
        }
        None
    });
    suite("order-axioms", n * n, failure)
}

fn move_monotonicity(poset: &ClanPoset) -> SuiteResult {
    let mut checks = 0;
    let mut failure = None;
    for (a, clan) in poset.nodes().iter().enumerate() {
        for (m, target) in covering_moves(clan) {
            checks += 1;
            let b = poset
                .index_of(&target)
                .expect("move stays in the signature");
            if a == b || !poset.leq(a, b) {
                failure.get_or_insert_with(|| {
                    format!("{m} on {clan} gives {target}, not strictly above")
                });
            }
        }
    }
    suite("move-monotonicity", checks, failure)
}

fn cover_realizability(poset: &ClanPoset) -> SuiteResult {
    let failure = poset.unrealized_covers().first().map(|&(a, b)| {
        format!(
            "cover {} < {} is not a single move",
            poset.nodes()[a],
            poset.nodes()[b]
        )
    });
    suite("cover-realizability", poset.covers().len(), failure)
}

fn purity_and_extremes(poset: &ClanPoset) -> SuiteResult {
    let props = poset_properties(poset);
    let sign_only: Vec<Clan> = poset
        .nodes()
        .iter()
        .filter(|c| c.is_sign_only())
        .cloned()
        .collect();
    let failure = if !props.pure {
        Some(format!(
            "maximal chains have lengths {}..{}",
            props.shortest_maximal_chain, props.longest_maximal_chain
        ))
    } else if props.maximal.len() != 1 {
        Some(format!("{} maximal elements", props.maximal.len()))
    } else if props.minimal != sign_only {
        Some("minimal elements differ from the sign-only clans".to_string())
    } else {
        None
    };
    suite("purity-and-extremes", poset.len(), failure)
}

fn involution_order(poset: &ClanPoset) -> SuiteResult {
    let n = poset.len();
    let underlying: Vec<_> = poset.nodes().iter().map(underlying_involution).collect();
    let failure = (0..n).into_par_iter().find_map_any(|a| {
        let pa = poset.profile(a);
        (0..n).find_map(|b| {
            let pb = poset.profile(b);
            let signs = pa.plus_row().iter().zip(pb.plus_row()).all(|(x, y)| x >= y)
                && pa
                    .minus_row()
                    .iter()
                    .zip(pb.minus_row())
                    .all(|(x, y)| x >= y);
            let inv = involution_leq_rank(&underlying[a], &underlying[b]).expect("equal lengths");
            let leq = poset.leq(a, b);
            if (leq && !inv) || leq != (inv && signs) {
                Some(format!(
                    "{} vs {}: order {leq}, involution order {inv}, sign ranks {signs}",
                    poset.nodes()[a],
                    poset.nodes()[b]
                ))
            } else {
                None
            }
        })
    });
    suite("involution-order", n * n, failure)
}

fn orbit_roundtrip(poset: &ClanPoset) -> SuiteResult {
    let split = SplitSpaces::new(poset.signature());
    let failure = poset.nodes().par_iter().find_map_any(|clan| {
        match orbit_of(&yamamoto_representative(clan), &split) {
            Ok(found) if &found == clan => None,
            Ok(found) => Some(format!(
                "representative of {clan} lies in the orbit of {found}"
            )),
            Err(e) => Some(format!("representative of {clan}: {e}")),
        }
    });
    suite("orbit-roundtrip", poset.len(), failure)
}

fn geometric_agreement(poset: &ClanPoset) -> SuiteResult {
    let n = poset.len();
    let split = SplitSpaces::new(poset.signature());
    let failure = (0..n).into_par_iter().find_map_any(|a| {
        let measured = measured_profile(&yamamoto_representative(&poset.nodes()[a]), &split)
            .expect("dimensions match");
        (0..n).find_map(|b| {
            let tau = &poset.nodes()[b];
            let geometric = closure_holds(&measured, poset.profile(b));
            (geometric != poset.leq(a, b)).then(|| {
                format!(
                    "representative of {} in closure of {tau}: {geometric}, order says {}",
                    poset.nodes()[a],
                    poset.leq(a, b)
                )
            })
        })
    });
    suite("geometric-agreement", n * n, failure)
}

fn degeneration_curves(poset: &ClanPoset) -> SuiteResult {
    let instances: Vec<(Clan, clans_core::MoveInstance)> = poset
        .nodes()
        .iter()
        .flat_map(|c| {
            covering_moves(c)
                .into_iter()
                .map(move |(m, _)| (c.clone(), m))
        })
        .collect();
    let samples = default_samples();
    let failure = instances.par_iter().find_map_any(|(clan, m)| {
        CurveCase::new(clan, m.clone())
            .and_then(|case| curve_check(&case, &samples))
            .err()
            .map(|e| e.to_string())
    });
    suite("degeneration-curves", instances.len(), failure)
}
