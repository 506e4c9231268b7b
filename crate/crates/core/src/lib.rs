#![no_std]
extern crate alloc;

pub mod bitset;
pub mod clan;
pub mod curves;
pub mod error;
pub mod flag;
pub mod involution;
pub mod linalg;
pub mod moves;
pub mod order;
pub mod poset;
pub mod rank;

pub use clan::{enumerate_clans, format_clan, parse_clan, Clan, Signature, Symbol};
pub use curves::{curve_check, default_samples, standard_cases, CurveCase, CurveReport};
pub use error::{Error, Result};
pub use flag::{
    closure_holds, default_sigma, dim_intersection, dim_projection_sum, in_closure,
    measured_profile, orbit_of, yamamoto_representative, yamamoto_representative_with, Flag,
    SplitSpaces,
};
pub use involution::{
    involution_leq_rank, involution_leq_sn, underlying_involution, InvolutionString,
};
pub use linalg::{Rational, SquareMatrix, Vector};
pub use moves::{apply_move, covering_moves, MoveInstance, MoveKind};
pub use order::{compare, leq};
pub use poset::{
    build_poset, interval, poset_properties, ClanPoset, IntervalReport, IntervalWitness,
    PosetProperties, Verdict,
};
pub use rank::{clan_from_rank_profile, rank_profile, RankProfile};
