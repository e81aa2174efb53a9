//! Exact symbolic calculus for linearly normal special scrolls.
//!
//! A *scroll* is a non-degenerate surface `R ⊂ P^N` of minimal sectional
//! genus swept out by a one-parameter family of lines; equivalently, the
//! image of a geometrically ruled surface `S = P(E) → X` over a smooth curve
//! `X` of genus `g` under the map given by a unisecant linear system `|H|`.
//! The scroll is *special* when `h¹(O_R(1)) = i > 0` and *linearly normal*
//! when it is not a projection of a scroll of the same degree spanning a
//! larger ambient space.  Three integer identities control the whole theory:
//!
//! * Riemann–Roch on the base curve: `h⁰(D) − h¹(D) = deg D − g + 1`;
//! * the scroll relation `d − 2g + 1 + i = N` for a linearly normal scroll
//!   of degree `d` and speciality `i` spanning `P^N`;
//! * the speciality bound `d ≤ 2g + N − 2` (equivalent to `i ≥ 1`).
//!
//! Everything in this crate is exact integer arithmetic on symbolic divisor
//! classes — there is no floating point and no coordinate geometry.  The
//! crate models:
//!
//! * divisor classes on an abstract curve with generic-position semantics
//!   and an exact `h⁰`/`h¹` calculus ([`curve_divisors`]);
//! * geometrically ruled surfaces `S_𝔟 = P(O ⊕ O(𝔟 − K))` with their
//!   numerical intersection theory and unisecant curve families
//!   ([`ruled_surface`]);
//! * elementary transformations (point-by-point modifications of the ruled
//!   surface matching projections of the scroll) ([`elem_transform`]);
//! * the classification of generic special scrolls and the complete tables
//!   of special scrolls of genus 2 and 3 in `P³` ([`classifier`]);
//! * genus/degree bookkeeping for scrolls viewed as curves in the
//!   Grassmannian of lines `G(1,3)` on a quadric ([`grassmannian`]);
//! * a reporting layer that renders every query as text or a stable,
//!   machine-readable JSON document ([`cli_report`]).
//!
//! The intended entry points are the `run_*` functions in [`cli_report`]
//! (which the command-line front end wraps) and the individual operations
//! in each module for programmatic use.

pub mod classifier;
pub mod cli_report;
pub mod curve_divisors;
pub mod elem_transform;
pub mod grassmannian;
pub mod ruled_surface;

use serde::{Deserialize, Serialize};

/// Three-valued logic for geometric predicates that may be undecidable from
/// the symbolic data alone (e.g. decomposability of a ruled surface whose
/// curve tracking is incomplete).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TriState {
    /// The predicate provably holds.
    Yes,
    /// The predicate provably fails.
    No,
    /// The symbolic data does not decide the predicate.
    Unknown,
}

impl TriState {
    /// `true` exactly for [`TriState::Yes`].
    pub fn is_yes(self) -> bool {
        self == TriState::Yes
    }
}

impl From<bool> for TriState {
    fn from(b: bool) -> Self {
        if b {
            TriState::Yes
        } else {
            TriState::No
        }
    }
}

/// Errors reported by the calculus.
///
/// All variants describe *domain* failures: mathematically meaningless or
/// out-of-range inputs, infeasible geometric configurations, or internal
/// consistency violations.  Malformed command-line syntax is handled by the
/// front end, not here.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A genus outside the range supported by the requested operation.
    #[error("genus {got} out of range: {reason}")]
    GenusOutOfRange {
        /// The offending genus.
        got: i64,
        /// Why it is rejected.
        reason: String,
    },

    /// Scroll numerology with `N < 3` (a scroll spans at least `P³`).
    #[error("ambient dimension N = {0} is too small: a non-degenerate scroll spans at least P^3")]
    AmbientTooSmall(i64),

    /// The inverse scroll relation produced a negative speciality.
    #[error(
        "inconsistent scroll data (g = {g}, d = {d}, N = {n}): \
         speciality i = N - d + 2g - 1 = {i} is negative"
    )]
    NegativeSpeciality {
        /// Base-curve genus.
        g: i64,
        /// Scroll degree.
        d: i64,
        /// Ambient dimension.
        n: i64,
        /// The (negative) speciality implied by the other three values.
        i: i64,
    },

    /// A divisor class whose stated invariants contradict Riemann–Roch or
    /// the curve context.
    #[error("inconsistent divisor data: {0}")]
    InconsistentDivisor(String),

    /// A degree precondition failed (e.g. `deg 𝔟 < 2g − 2` in `S_𝔟`).
    #[error("degree out of range: {0}")]
    DegreeOutOfRange(String),

    /// A point configuration violating the incidence rules of the surface
    /// (two centers on one fiber, more shared points than the intersection
    /// number allows, ...).
    #[error("invalid point configuration: {0}")]
    InvalidPoints(String),

    /// The requested operation is not defined for this surface's provenance
    /// (e.g. unisecant family data on a surface not built as `S_𝔟`).
    #[error("operation not available: {0}")]
    NotAvailable(String),

    /// A classification table that the engine does not contain.
    #[error("unsupported classification target: {0}")]
    UnsupportedTable(String),

    /// An unknown verification suite name.
    #[error("unknown verification suite `{0}`")]
    UnknownSuite(String),

    /// An internal invariant failed.  This is a bug in the engine, never a
    /// user error: stored and recomputed values are cross-checked at every
    /// step and must agree.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
