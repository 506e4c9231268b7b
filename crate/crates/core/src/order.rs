//! The rank-number order on clans of one signature.

use core::cmp::Ordering;

use crate::clan::Clan;
use crate::error::{Error, Result};
use crate::rank::{rank_profile, RankProfile};

/// `γ <= τ` iff `γ(i;±) >= τ(i;±)` for all `i` and `γ(i;j) <= τ(i;j)` for all `i < j`.
pub fn leq(gamma: &Clan, tau: &Clan) -> Result<bool> {
    same_signature(gamma, tau)?;
    Ok(profile_leq(&rank_profile(gamma), &rank_profile(tau)))
}

/// Order test on precomputed profiles of the same signature.
#[inline]
pub fn profile_leq(gamma: &RankProfile, tau: &RankProfile) -> bool {
    debug_assert_eq!(gamma.signature(), tau.signature());
    gamma
        .plus_row()
        .iter()
        .zip(tau.plus_row())
        .all(|(g, t)| g >= t)
        && gamma
            .minus_row()
            .iter()
            .zip(tau.minus_row())
            .all(|(g, t)| g >= t)
        && gamma
            .pairs_row_major()
            .iter()
            .zip(tau.pairs_row_major())
            .all(|(g, t)| g <= t)
}

/// `None` when the clans are incomparable.
pub fn compare(a: &Clan, b: &Clan) -> Result<Option<Ordering>> {
    same_signature(a, b)?;
    let (ra, rb) = (rank_profile(a), rank_profile(b));
    Ok(match (profile_leq(&ra, &rb), profile_leq(&rb, &ra)) {
        (true, true) => Some(Ordering::Equal),
        (true, false) => Some(Ordering::Less),
        (false, true) => Some(Ordering::Greater),
        (false, false) => None,
    })
}

fn same_signature(a: &Clan, b: &Clan) -> Result<()> {
    if a.signature() != b.signature() {
        return Err(Error::SignatureMismatch {
            signature: a.signature(),
            plus: b.plus_count(),
            minus: b.minus_count(),
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn clan(s: &str) -> Clan {
        s.parse().unwrap()
    }

    #[test]
    fn chain_endpoints_related() {
        assert!(leq(&clan("++-"), &clan("1+1")).unwrap());
        assert!(!leq(&clan("1+1"), &clan("++-")).unwrap());
    }

    #[test]
    fn incomparable_pair() {
        assert!(!leq(&clan("11+"), &clan("+11")).unwrap());
        assert!(!leq(&clan("+11"), &clan("11+")).unwrap());
        assert_eq!(compare(&clan("11+"), &clan("+11")).unwrap(), None);
    }

    #[test]
    fn reflexive_and_compare() {
        let c = clan("1-+1");
        assert!(leq(&c, &c).unwrap());
        assert_eq!(compare(&c, &c).unwrap(), Some(Ordering::Equal));
        assert_eq!(
            compare(&clan("+-"), &clan("11")).unwrap(),
            Some(Ordering::Less)
        );
        assert_eq!(
            compare(&clan("11"), &clan("-+")).unwrap(),
            Some(Ordering::Greater)
        );
    }

    #[test]
    fn signature_mismatch() {
        assert!(matches!(
            leq(&clan("+-"), &clan("++")),
            Err(Error::SignatureMismatch { .. })
        ));
    }
}
