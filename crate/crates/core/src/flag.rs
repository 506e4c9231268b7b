//! Complete flags in `Q^n`, orbit recovery and closure membership.
//!
//! `E_p` is spanned by `e_1..e_p`, `~E_q` by `e_{p+1}..e_n`, and `π` projects
//! onto `E_p` along `~E_q`. A flag lies in the orbit of `γ` exactly when
//! `dim(F_i ∩ E_p) = γ(i;+)`, `dim(F_i ∩ ~E_q) = γ(i;-)` and
//! `dim(π(F_i) + F_j) = j + γ(i;j)`; its closure relaxes these to
//! `>=`, `>=`, `<=`.

use alloc::format;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::clan::{Clan, Signature, Symbol};
use crate::error::{Error, Result};
use crate::linalg::{rank, unit, Rational, SquareMatrix, Vector};
use crate::rank::{clan_from_rank_profile, rank_profile, RankProfile};

/// A complete flag given by an ordered basis `v_1, ..., v_n`; `F_i` is the span
/// of the first `i` vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flag {
    basis: Vec<Vector>,
}

impl Flag {
    pub fn new(basis: Vec<Vector>) -> Result<Self> {
        let n = basis.len();
        if let Some(bad) = basis.iter().find(|v| v.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: bad.len(),
            });
        }
        if rank(&basis) != n {
            return Err(Error::SingularFlag);
        }
        Ok(Self { basis })
    }

    pub fn standard(n: usize) -> Self {
        Self {
            basis: (1..=n).map(|i| unit(n, i)).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    /// `v_i`, 1-based.
    pub fn vector(&self, i: usize) -> &Vector {
        &self.basis[i - 1]
    }

    /// Spanning vectors of `F_i`.
    pub fn subspace(&self, i: usize) -> &[Vector] {
        &self.basis[..i]
    }

    /// `k · F` for an invertible `k`.
    pub fn act(&self, k: &SquareMatrix) -> Result<Flag> {
        if k.n() != self.n() {
            return Err(Error::DimensionMismatch {
                expected: self.n(),
                found: k.n(),
            });
        }
        Flag::new(self.basis.iter().map(|v| k.mul_vec(v)).collect())
    }

    /// Same point of the flag variety: every `F_i` coincides.
    pub fn same_flag(&self, other: &Flag) -> bool {
        self.n() == other.n()
            && (1..=self.n()).all(|i| rank(self.subspace(i).iter().chain(other.subspace(i))) == i)
    }
}

/// The decomposition `Q^n = E_p ⊕ ~E_q` for a signature.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SplitSpaces {
    signature: Signature,
}

impl SplitSpaces {
    pub fn new(signature: Signature) -> Self {
        Self { signature }
    }

    pub fn signature(&self) -> Signature {
        self.signature
    }

    pub fn plus_basis(&self) -> Vec<Vector> {
        let n = self.signature.n();
        (1..=self.signature.p()).map(|i| unit(n, i)).collect()
    }

    pub fn minus_basis(&self) -> Vec<Vector> {
        let n = self.signature.n();
        (self.signature.p() + 1..=n).map(|i| unit(n, i)).collect()
    }

    /// `π(v)`: keep the first `p` coordinates.
    pub fn project(&self, v: &Vector) -> Vector {
        v.iter()
            .enumerate()
            .map(|(idx, x)| {
                if idx < self.signature.p() {
                    x.clone()
                } else {
                    Rational::zero()
                }
            })
            .collect()
    }

    fn check(&self, flag: &Flag) -> Result<()> {
        if flag.n() != self.signature.n() {
            return Err(Error::DimensionMismatch {
                expected: self.signature.n(),
                found: flag.n(),
            });
        }
        Ok(())
    }
}

/// `dim(F_i ∩ W) = i + dim W - dim(F_i + W)`.
pub fn dim_intersection(flag: &Flag, i: usize, w: &[Vector]) -> usize {
    let dim_w = rank(w);
    let dim_sum = rank(flag.subspace(i).iter().chain(w));
    i + dim_w - dim_sum
}

/// `dim(π(F_i) + F_j)`.
pub fn dim_projection_sum(flag: &Flag, i: usize, j: usize, split: &SplitSpaces) -> usize {
    let projected: Vec<Vector> = flag.subspace(i).iter().map(|v| split.project(v)).collect();
    rank(projected.iter().chain(flag.subspace(j)))
}

/// The rank numbers a flag exhibits, in the same layout as a clan's profile.
pub fn measured_profile(flag: &Flag, split: &SplitSpaces) -> Result<RankProfile> {
    split.check(flag)?;
    let n = flag.n();
    let (plus_w, minus_w) = (split.plus_basis(), split.minus_basis());
    let plus = (1..=n)
        .map(|i| dim_intersection(flag, i, &plus_w) as u16)
        .collect();
    let minus = (1..=n)
        .map(|i| dim_intersection(flag, i, &minus_w) as u16)
        .collect();
    let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
    for i in 1..=n {
        for j in i + 1..=n {
            pairs.push((dim_projection_sum(flag, i, j, split) - j) as u16);
        }
    }
    RankProfile::new(split.signature(), plus, minus, pairs)
}

/// The clan whose orbit contains `flag`.
pub fn orbit_of(flag: &Flag, split: &SplitSpaces) -> Result<Clan> {
    clan_from_rank_profile(&measured_profile(flag, split)?)
}

/// Whether `flag` lies in the closure of the orbit of `tau`.
pub fn in_closure(flag: &Flag, tau: &Clan, split: &SplitSpaces) -> Result<bool> {
    if tau.signature() != split.signature() {
        return Err(Error::SignatureMismatch {
            signature: split.signature(),
            plus: tau.plus_count(),
            minus: tau.minus_count(),
        });
    }
    Ok(closure_holds(
        &measured_profile(flag, split)?,
        &rank_profile(tau),
    ))
}

/// The closure inequalities between measured flag dimensions and the rank
/// numbers of `tau`.
pub fn closure_holds(measured: &RankProfile, tau: &RankProfile) -> bool {
    let n = measured.n();
    (1..=n).all(|i| {
        measured.plus(i) >= tau.plus(i)
            && measured.minus(i) >= tau.minus(i)
            && (i + 1..=n).all(|j| measured.pair(i, j) <= tau.pair(i, j))
    })
}

/// Default orbit representative: the first end of each arc gets signature
/// `+`, the second `-`; `σ` sends the `+` class to `1..=p` and the `-` class
/// to `p+1..=n`, both in left-to-right order.
pub fn yamamoto_representative(clan: &Clan) -> Flag {
    let plus_ends: Vec<usize> = clan.arcs().map(|(a, _)| a).collect();
    build_representative(clan, &sign_classes(clan, &plus_ends), &default_sigma(clan))
}

/// The order-preserving `σ` used by [`yamamoto_representative`], as
/// `σ(1), ..., σ(n)`.
pub fn default_sigma(clan: &Clan) -> Vec<usize> {
    let plus_ends: Vec<usize> = clan.arcs().map(|(a, _)| a).collect();
    let (mut next_plus, mut next_minus) = (1, clan.signature().p() + 1);
    sign_classes(clan, &plus_ends)
        .into_iter()
        .map(|plus| {
            let slot = if plus {
                &mut next_plus
            } else {
                &mut next_minus
            };
            *slot += 1;
            *slot - 1
        })
        .collect()
}

/// Representative for explicit choices: `plus_ends` names, for every arc,
/// the end that carries signature `+`; `sigma` gives `σ(1), ..., σ(n)`.
pub fn yamamoto_representative_with(
    clan: &Clan,
    plus_ends: &[usize],
    sigma: &[usize],
) -> Result<Flag> {
    let n = clan.n();
    let p = clan.signature().p();
    for (a, b) in clan.arcs() {
        if plus_ends.contains(&a) == plus_ends.contains(&b) {
            return Err(Error::InvalidRepresentative(format!(
                "arc {a}-{b} needs exactly one '+' end"
            )));
        }
    }
    if let Some(bad) = plus_ends
        .iter()
        .find(|&&i| i == 0 || i > n || clan.mate(i).is_none())
    {
        return Err(Error::InvalidRepresentative(format!(
            "{bad} is not an arc end"
        )));
    }
    let mut seen = alloc::vec![false; n + 1];
    if sigma.len() != n
        || sigma
            .iter()
            .any(|&s| s == 0 || s > n || core::mem::replace(&mut seen[s], true))
    {
        return Err(Error::InvalidRepresentative(
            "sigma is not a permutation".into(),
        ));
    }
    let classes = sign_classes(clan, plus_ends);
    for i in 1..=n {
        if classes[i - 1] != (sigma[i - 1] <= p) {
            return Err(Error::InvalidRepresentative(format!(
                "sigma({i}) = {} lies in the wrong block",
                sigma[i - 1]
            )));
        }
    }
    Ok(build_representative(clan, &classes, sigma))
}

/// `true` for positions in the `+` class.
fn sign_classes(clan: &Clan, plus_ends: &[usize]) -> Vec<bool> {
    (1..=clan.n())
        .map(|i| match clan.symbol(i) {
            Symbol::Plus => true,
            Symbol::Minus => false,
            Symbol::Arc(_) => plus_ends.contains(&i),
        })
        .collect()
}

fn build_representative(clan: &Clan, classes: &[bool], sigma: &[usize]) -> Flag {
    let n = clan.n();
    let basis = (1..=n)
        .map(|i| {
            let own = unit(n, sigma[i - 1]);
            match clan.symbol(i) {
                Symbol::Arc(j) => {
                    let mate = &unit(n, sigma[j - 1]);
                    let sign = if classes[i - 1] {
                        Rational::one()
                    } else {
                        -Rational::one()
                    };
                    own.iter().zip(mate).map(|(a, b)| &sign * a + b).collect()
                }
                _ => own,
            }
        })
        .collect();
    Flag { basis }
}
