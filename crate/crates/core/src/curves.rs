//! One-parameter degenerations realizing each covering move.
//!
//! For a move `γ -> τ`, `F` lies in `Q_τ`, `k(t)` is a block matrix in `K`,
//! and a normalized basis `N(t)` spans the same flag as `k(t)·F`; at `t = 0`
//! it becomes `E ∈ Q_γ`. Every formula is written in four roles `P1, P2`
//! (inside `E_p`) and `Q1, Q2` (inside `~E_q`), which are bound to the basis
//! indices the pattern positions occupy in the default representative of `γ`.

use alloc::format;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::clan::{enumerate_clans, Clan, Signature};
use crate::error::{Error, Result};
use crate::flag::{default_sigma, orbit_of, yamamoto_representative, Flag, SplitSpaces};
use crate::linalg::{rat, ratio, Rational, SquareMatrix, Vector};
use crate::moves::{apply_move, covering_moves, MoveInstance, MoveKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Role {
    P1,
    P2,
    Q1,
    Q2,
}

use Role::*;

type Term = (Rational, Role);

/// A covering move at concrete positions together with its degeneration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveCase {
    instance: MoveInstance,
    source: Clan,
    target: Clan,
    /// Basis index bound to each role, `[P1, P2, Q1, Q2]`.
    roles: [Option<usize>; 4],
    background: Vec<Vector>,
}

/// Outcome of a successful [`curve_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveReport {
    pub instance: MoveInstance,
    pub source: Clan,
    pub target: Clan,
    pub lower: Flag,
    pub upper: Flag,
    pub samples: Vec<Rational>,
}

/// `{1, 1/2, 1/3, -1}`.
pub fn default_samples() -> Vec<Rational> {
    alloc::vec![rat(1), ratio(1, 2), ratio(1, 3), rat(-1)]
}

fn minimal_source(kind: MoveKind) -> &'static str {
    kind.patterns().0
}

fn role_lists(kind: MoveKind) -> (&'static [Role], &'static [Role]) {
    use MoveKind::*;
    match kind {
        PlusMinusToArc | MinusPlusToArc => (&[P1], &[Q2]),
        ArcPastPlus | PlusPastArc => (&[P1, P2], &[Q2]),
        ArcPastMinus | MinusPastArc => (&[P1], &[Q1, Q2]),
        _ => (&[P1, P2], &[Q1, Q2]),
    }
}

impl CurveCase {
    pub fn new(source: &Clan, instance: MoveInstance) -> Result<Self> {
        let target = apply_move(source, &instance)?;
        let p = source.signature().p();
        let sigma = default_sigma(source);
        let mut held: Vec<usize> = instance.positions.iter().map(|&i| sigma[i - 1]).collect();
        held.sort_unstable();
        let (p_roles, q_roles) = role_lists(instance.kind);
        let (low, high): (Vec<usize>, Vec<usize>) = held.iter().partition(|&&s| s <= p);
        if low.len() != p_roles.len() || high.len() != q_roles.len() {
            return Err(Error::CaseMismatch(format!(
                "{instance} on {source}: pattern occupies {} + {} basis slots",
                low.len(),
                high.len()
            )));
        }
        let mut roles = [None; 4];
        for (role, idx) in p_roles.iter().chain(q_roles).zip(low.iter().chain(&high)) {
            roles[*role as usize] = Some(*idx);
        }
        Ok(Self {
            background: yamamoto_representative(source).basis().to_vec(),
            instance,
            source: source.clone(),
            target,
            roles,
        })
    }

    /// The move applied at positions `1..=arity` of its own source pattern.
    pub fn minimal(kind: MoveKind) -> Self {
        let source: Clan = minimal_source(kind).parse().expect("pattern is a clan");
        let positions: Vec<usize> = (1..=kind.arity()).collect();
        Self::new(&source, MoveInstance::new(kind, &positions))
            .expect("minimal case is well formed")
    }

    /// The first instance, over growing signatures in enumeration order, that
    /// starts after position 1 and is not contiguous.
    pub fn offset(kind: MoveKind) -> Self {
        for n in kind.arity() + 2.. {
            for p in 1..n {
                let sig = Signature::new(p, n - p).expect("positive size");
                for clan in enumerate_clans(sig) {
                    for (m, _) in covering_moves(&clan) {
                        let pos = &m.positions;
                        if m.kind == kind && pos[0] > 1 && pos[pos.len() - 1] - pos[0] >= pos.len()
                        {
                            return Self::new(&clan, m).expect("enumerated move is well formed");
                        }
                    }
                }
            }
        }
        unreachable!()
    }

    pub fn instance(&self) -> &MoveInstance {
        &self.instance
    }

    pub fn source(&self) -> &Clan {
        &self.source
    }

    pub fn target(&self) -> &Clan {
        &self.target
    }

    pub fn signature(&self) -> Signature {
        self.source.signature()
    }

    fn index(&self, role: Role) -> usize {
        self.roles[role as usize].expect("formula uses only bound roles")
    }

    fn vector(&self, terms: &[Term]) -> Vector {
        let mut v = crate::linalg::zero_vector(self.source.n());
        for (c, role) in terms {
            v[self.index(*role) - 1] += c;
        }
        v
    }

    /// Replace the pattern positions of the background basis.
    fn assemble(&self, pattern: Vec<Vec<Term>>) -> Result<Flag> {
        let mut basis = self.background.clone();
        for (&pos, terms) in self.instance.positions.iter().zip(pattern) {
            basis[pos - 1] = self.vector(&terms);
        }
        Flag::new(basis)
    }

    /// `E`, the point of `Q_γ` the curve degenerates to.
    pub fn lower(&self) -> Result<Flag> {
        self.assemble(lower_pattern(self.instance.kind))
    }

    /// `F ∈ Q_τ`.
    pub fn upper(&self) -> Result<Flag> {
        self.assemble(upper_pattern(self.instance.kind))
    }

    /// The normalized basis of `k(t)·F`; at `t = 0` it is `E`.
    pub fn normalized(&self, t: &Rational) -> Result<Flag> {
        self.assemble(normalized_pattern(self.instance.kind, t))
    }

    /// `k(t)`: identity away from the role indices.
    pub fn k(&self, t: &Rational) -> Result<SquareMatrix> {
        if t.is_zero() {
            return Err(Error::ZeroSample);
        }
        let mut k = SquareMatrix::identity(self.source.n());
        for (row, col, value) in k_entries(self.instance.kind, t) {
            k.set(self.index(row), self.index(col), value);
        }
        Ok(k)
    }
}

fn one() -> Rational {
    Rational::one()
}

fn term(c: Rational, r: Role) -> Term {
    (c, r)
}

fn unit_terms(roles: &[Role]) -> Vec<Term> {
    roles.iter().map(|&r| term(one(), r)).collect()
}

fn basis_of(rows: &[&[Role]]) -> Vec<Vec<Term>> {
    rows.iter().map(|r| unit_terms(r)).collect()
}

fn lower_pattern(kind: MoveKind) -> Vec<Vec<Term>> {
    use MoveKind::*;
    match kind {
        PlusMinusToArc => basis_of(&[&[P1], &[Q2]]),
        MinusPlusToArc => basis_of(&[&[Q2], &[P1]]),
        ArcPastPlus => basis_of(&[&[P1, Q2], &[P1], &[P2]]),
        ArcPastMinus => basis_of(&[&[Q2, P1], &[Q2], &[Q1]]),
        PlusPastArc => basis_of(&[&[P1], &[P2, Q2], &[Q2]]),
        MinusPastArc => basis_of(&[&[Q2], &[Q1, P1], &[P1]]),
        DisjointToCrossing | DisjointToPlusMinus | DisjointToMinusPlus => {
            basis_of(&[&[P1, Q1], &[Q1], &[P2, Q2], &[Q2]])
        }
        CrossingToNested => basis_of(&[&[P1, Q1], &[P2, Q2], &[Q1], &[Q2]]),
    }
}

fn upper_pattern(kind: MoveKind) -> Vec<Vec<Term>> {
    use MoveKind::*;
    match kind {
        PlusMinusToArc => basis_of(&[&[P1, Q2], &[Q2]]),
        MinusPlusToArc => basis_of(&[&[Q2, P1], &[P1]]),
        ArcPastPlus => basis_of(&[&[P1, Q2], &[P2], &[P1]]),
        ArcPastMinus => basis_of(&[&[Q2, P1], &[Q1], &[Q2]]),
        PlusPastArc => basis_of(&[&[P1, Q2], &[P2], &[Q2]]),
        MinusPastArc => basis_of(&[&[Q2, P1], &[Q1], &[P1]]),
        DisjointToCrossing => basis_of(&[&[P1, Q1], &[P2, Q2], &[Q1], &[Q2]]),
        DisjointToPlusMinus => basis_of(&[&[P1, Q2], &[P2], &[Q1], &[Q2]]),
        DisjointToMinusPlus => basis_of(&[&[P1, Q2], &[Q1], &[P2], &[Q2]]),
        CrossingToNested => basis_of(&[&[P1, Q2], &[P2, Q1], &[Q1], &[Q2]]),
    }
}

fn normalized_pattern(kind: MoveKind, t: &Rational) -> Vec<Vec<Term>> {
    use MoveKind::*;
    let t = t.clone();
    match kind {
        PlusMinusToArc => alloc::vec![alloc::vec![term(one(), P1), term(t, Q2)], unit_terms(&[Q2])],
        MinusPlusToArc => alloc::vec![alloc::vec![term(one(), Q2), term(t, P1)], unit_terms(&[P1])],
        ArcPastPlus => alloc::vec![
            unit_terms(&[P1, Q2]),
            alloc::vec![term(one(), P1), term(t, P2)],
            unit_terms(&[P2]),
        ],
        ArcPastMinus => alloc::vec![
            unit_terms(&[Q2, P1]),
            alloc::vec![term(one(), Q2), term(t, Q1)],
            unit_terms(&[Q1]),
        ],
        PlusPastArc => alloc::vec![
            alloc::vec![term(one(), P1), term(t, Q2)],
            unit_terms(&[P1, P2, Q2]),
            unit_terms(&[Q2]),
        ],
        MinusPastArc => alloc::vec![
            alloc::vec![term(one(), Q2), term(t, P1)],
            unit_terms(&[Q2, Q1, P1]),
            unit_terms(&[P1]),
        ],
        DisjointToCrossing => alloc::vec![
            unit_terms(&[P1, Q1]),
            alloc::vec![term(one(), Q1), term(t.clone(), P2), term(t, Q2)],
            unit_terms(&[P2, Q2]),
            unit_terms(&[Q2]),
        ],
        DisjointToPlusMinus => alloc::vec![
            alloc::vec![
                term(one(), P1),
                term(one(), Q1),
                term(t.clone(), P2),
                term(t.clone(), Q2)
            ],
            alloc::vec![term(one(), Q1), term(t.clone(), P2), term(t, Q2)],
            unit_terms(&[P2, Q2]),
            unit_terms(&[Q2]),
        ],
        DisjointToMinusPlus => alloc::vec![
            alloc::vec![term(one(), P1), term(one(), Q1), term(-t, Q2)],
            unit_terms(&[Q1]),
            unit_terms(&[P2, Q2]),
            unit_terms(&[Q2]),
        ],
        CrossingToNested => alloc::vec![
            alloc::vec![
                term(one(), P1),
                term(one(), Q1),
                term(t.clone(), P2),
                term(t, Q2)
            ],
            unit_terms(&[P2, Q2]),
            unit_terms(&[Q1]),
            unit_terms(&[Q2]),
        ],
    }
}

/// Non-identity entries `(row, col, value)` of `k(t)`.
fn k_entries(kind: MoveKind, t: &Rational) -> Vec<(Role, Role, Rational)> {
    use MoveKind::*;
    let inv = t.recip();
    match kind {
        PlusMinusToArc => alloc::vec![(P1, P1, inv)],
        MinusPlusToArc => alloc::vec![(Q2, Q2, inv)],
        ArcPastPlus => alloc::vec![(P1, P2, inv)],
        ArcPastMinus => alloc::vec![(Q2, Q1, inv)],
        PlusPastArc => alloc::vec![(P1, P1, inv.clone()), (P1, P2, one() - inv)],
        MinusPastArc => alloc::vec![(Q2, Q2, inv.clone()), (Q2, Q1, one() - inv)],
        DisjointToCrossing => alloc::vec![(Q1, Q2, inv)],
        DisjointToPlusMinus | CrossingToNested => alloc::vec![
            (P1, P1, inv.clone()),
            (P1, P2, -inv.clone()),
            (P2, P1, one()),
            (P2, P2, Rational::zero()),
            (Q1, Q1, -inv.clone()),
            (Q1, Q2, inv),
            (Q2, Q1, Rational::zero()),
            (Q2, Q2, one()),
        ],
        DisjointToMinusPlus => alloc::vec![
            (P1, P2, one()),
            (P2, P2, t.clone()),
            (Q1, Q2, one()),
            (Q2, Q2, -t.clone()),
        ],
    }
}

/// Replays the degeneration of `case` at the sampled parameters.
///
/// Checks that `E ∈ Q_γ`, `F ∈ Q_τ`, that `k(t)` is block diagonal and keeps
/// `F` in `Q_τ`, that `N(t)` and `k(t)·F` are the same flag, and that `N(0)`
/// equals `E`.
pub fn curve_check(case: &CurveCase, samples: &[Rational]) -> Result<CurveReport> {
    if samples.iter().any(Zero::is_zero) {
        return Err(Error::ZeroSample);
    }
    let label = format!("{} on {}", case.instance, case.source);
    let fail = |what: &str| Error::CaseMismatch(format!("{label}: {what}"));
    let wrap = |what: &str, e: Error| Error::CaseMismatch(format!("{label}: {what}: {e}"));
    let split = SplitSpaces::new(case.signature());
    let p = case.signature().p();

    let lower = case.lower().map_err(|e| wrap("E", e))?;
    let upper = case.upper().map_err(|e| wrap("F", e))?;
    if orbit_of(&lower, &split).map_err(|e| wrap("orbit of E", e))? != case.source {
        return Err(fail("E is not in the source orbit"));
    }
    if orbit_of(&upper, &split).map_err(|e| wrap("orbit of F", e))? != case.target {
        return Err(fail("F is not in the target orbit"));
    }
    for t in samples {
        let k = case.k(t)?;
        if !k.is_block_diagonal(p) || !k.is_invertible() {
            return Err(fail(&format!("k({t}) is not in K")));
        }
        let moved = upper.act(&k).map_err(|e| wrap("k(t)F", e))?;
        if orbit_of(&moved, &split).map_err(|e| wrap("orbit of k(t)F", e))? != case.target {
            return Err(fail(&format!("k({t})F left the target orbit")));
        }
        let normal = case.normalized(t).map_err(|e| wrap("N(t)", e))?;
        if !normal.same_flag(&moved) {
            return Err(fail(&format!("N({t}) differs from k({t})F")));
        }
    }
    let limit = case
        .normalized(&Rational::zero())
        .map_err(|e| wrap("N(0)", e))?;
    if orbit_of(&limit, &split).map_err(|e| wrap("orbit of N(0)", e))? != case.source {
        return Err(fail("N(0) is not in the source orbit"));
    }
    if !limit.same_flag(&lower) {
        return Err(fail("N(0) differs from E"));
    }
    Ok(CurveReport {
        instance: case.instance.clone(),
        source: case.source.clone(),
        target: case.target.clone(),
        lower,
        upper,
        samples: samples.to_vec(),
    })
}

/// Minimal and offset instances of all ten moves.
pub fn standard_cases() -> Vec<CurveCase> {
    MoveKind::ALL
        .into_iter()
        .flat_map(|k| [CurveCase::minimal(k), CurveCase::offset(k)])
        .collect()
}
