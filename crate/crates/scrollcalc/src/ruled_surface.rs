//! Geometrically ruled surfaces over a curve and their scroll models.
//!
//! A geometrically ruled surface `S = P(E) → X` over a smooth curve `X` of
//! genus `g` has `Num(S) = Z·X₀ ⊕ Z·f`, where `X₀` is a section of minimal
//! self-intersection and `f` a fiber, with
//!
//! ```text
//!     X₀² = −e,    X₀·f = 1,    f² = 0,
//! ```
//!
//! `e = −deg 𝔢` the invariant of the normalized bundle `E₀` and `𝔢 = ∧²E₀`.
//! A curve is *unisecant* when its class is `X₀ + b·f` (it meets every
//! fiber once).
//!
//! The central construction here is the decomposable surface
//!
//! ```text
//!     S_𝔟 = P(O ⊕ O(𝔟 − K)),        deg 𝔟 ≥ 2g − 2,
//! ```
//!
//! with invariant `𝔢 = K − 𝔟`, `e = deg 𝔟 − (2g − 2) ≥ 0`.  It carries two
//! distinguished sections: `X₀` (self-intersection `−e`, plane divisor `K`)
//! and `X₁ ≡ X₀ + e·f` (self-intersection `e`, plane divisor `𝔟`), and for
//! each `c ≥ 0` an algebraic family `F_c` of irreducible unisecant curves
//! `Y_c ≡ X₁ + c·f` with
//!
//! ```text
//!     Y_c² = e + 2c,        dim F_c = c + h⁰(O_X(−𝔢 + 𝔠)),
//! ```
//!
//! the generic member irreducible (for `deg 𝔟 = 3g − 3` this is the
//! familiar `dim F_c = 2c`).  The unisecant system `|H| = |X₀ + 𝔟f|` maps
//! `S_𝔟` onto a linearly normal special scroll `R_𝔟 ⊂ P^N` of degree
//! `d = 2g − 2 + deg 𝔟`, speciality `i = 1`, `N = deg 𝔟`; every linearly
//! normal special scroll with a special *unisecant* curve arises from some
//! `S_𝔟` by elementary transformations (see [`crate::elem_transform`]).

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::curve_divisors::{h0_generic_class, h0_h1, CurveContext, DivisorClass};
use crate::{Error, Result, TriState};

/// A numerical class `a·X₀ + b·f` on a ruled surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NumClass {
    /// Coefficient of the minimal section `X₀`.
    pub a: i64,
    /// Coefficient of the fiber `f`.
    pub b: i64,
}

impl NumClass {
    /// The class `a·X₀ + b·f`.
    pub fn new(a: i64, b: i64) -> Self {
        NumClass { a, b }
    }

    /// The fiber class `f`.
    pub fn fiber() -> Self {
        NumClass { a: 0, b: 1 }
    }
}

/// Label of a tracked curve on a ruled surface.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TrackedLabel {
    /// The minimal section `X₀` (or its strict transform).
    X0,
    /// The second distinguished section `X₁ ≡ X₀ + e·f` of a decomposable
    /// surface (or its strict transform).
    X1,
    /// A tracked member of the unisecant family `F_c` (class `X₁ + c·f`).
    Yc(i64),
    /// Any other tracked curve.
    Custom(String),
}

impl std::fmt::Display for TrackedLabel {
    fn fmt(&self, fm: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TrackedLabel::X0 => write!(fm, "X0"),
            TrackedLabel::X1 => write!(fm, "X1"),
            TrackedLabel::Yc(c) => write!(fm, "Y{c}"),
            TrackedLabel::Custom(s) => write!(fm, "{s}"),
        }
    }
}

/// A curve on a ruled surface whose class, self-intersection and plane
/// divisor (the pushforward `π_*(C ∩ H)` cut by the unisecant system) are
/// tracked through constructions and transformations.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrackedCurve {
    /// Identity of the curve.
    pub label: TrackedLabel,
    /// Numerical class in the current `(X₀, f)` basis.
    pub num_class: NumClass,
    /// Stored self-intersection.  Always equal to the value recomputed from
    /// `num_class` and the surface's `e`; a mismatch is a hard internal
    /// error, never silently repaired.
    pub self_int: i64,
    /// Whether the curve is irreducible.
    pub irreducible: bool,
    /// The divisor class on the base curve cut by the scroll's hyperplanes,
    /// when a scroll model is attached.
    pub plane_divisor: Option<DivisorClass>,
}

/// How the surface was built — this determines how much the engine knows
/// about its unisecant curves.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "provenance")]
pub enum SurfaceKind {
    /// `S_𝔟 = P(O ⊕ O(𝔟 − K))` with full knowledge of every unisecant
    /// family.
    SB {
        /// The defining divisor `𝔟`.
        b: DivisorClass,
    },
    /// An `S_𝔟` modified by elementary transformations at the recorded
    /// points; knowledge stays complete because everything is recomputed
    /// from the `S_𝔟` root.
    SBTransformed {
        /// The defining divisor `𝔟` of the root surface.
        b: DivisorClass,
        /// All transformation centers applied so far (on pairwise distinct
        /// fibers).
        points: Vec<crate::elem_transform::PointSpec>,
    },
    /// A surface assembled directly from invariants (e.g. a classification
    /// table row).  Only the tracked curves are known.
    Assembled,
}

/// A geometrically ruled surface with tracked numerical data.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RuledSurface {
    /// The base curve.
    pub base: CurveContext,
    /// The invariant `e = −deg 𝔢`.
    pub e_invariant: i64,
    /// The divisor class `𝔢` on the base (degree `−e_invariant`; enforced).
    pub e_divisor: DivisorClass,
    /// Whether the surface is decomposable (`E = O ⊕ L`).
    pub decomposable: TriState,
    /// Tracked curves, in insertion order.
    pub tracked_curves: Vec<TrackedCurve>,
    /// Provenance (drives how much the engine can recompute).
    pub kind: SurfaceKind,
    /// Labels of *special fibers*: fibers lying over the support of the
    /// unique divisor of `|−𝔢|` when that system is zero-dimensional.  The
    /// `c = 0` unisecant family degenerates over these fibers (its member
    /// through such a point is reducible), which matters to projection
    /// analysis.
    pub special_fibers: BTreeSet<String>,
    /// Non-fatal diagnostics accumulated during construction.
    pub warnings: Vec<String>,
}

impl RuledSurface {
    /// Intersection number of two numerical classes on this surface:
    /// `(a₁X₀ + b₁f)·(a₂X₀ + b₂f) = −e·a₁a₂ + a₁b₂ + a₂b₁`.
    pub fn intersect(&self, c1: NumClass, c2: NumClass) -> i64 {
        intersect(self, c1, c2)
    }

    /// Recompute the self-intersection of `class` from the invariant.
    pub fn self_intersection(&self, class: NumClass) -> i64 {
        intersect(self, class, class)
    }

    /// Find a tracked curve by label.
    pub fn tracked(&self, label: &TrackedLabel) -> Option<&TrackedCurve> {
        self.tracked_curves.iter().find(|c| &c.label == label)
    }

    /// The defining divisor `𝔟` when the surface is rooted in an `S_𝔟`.
    pub fn b_divisor(&self) -> Option<&DivisorClass> {
        match &self.kind {
            SurfaceKind::SB { b } | SurfaceKind::SBTransformed { b, .. } => Some(b),
            SurfaceKind::Assembled => None,
        }
    }

    /// Whether the engine has complete knowledge of the unisecant curves
    /// (true exactly for `S_𝔟`-rooted surfaces).
    pub fn knowledge_complete(&self) -> bool {
        !matches!(self.kind, SurfaceKind::Assembled)
    }

    /// Cross-check every tracked curve's stored self-intersection against
    /// the value recomputed from its numerical class.  A mismatch is an
    /// internal error.
    pub fn check_tracked_consistency(&self) -> Result<()> {
        for c in &self.tracked_curves {
            let recomputed = self.self_intersection(c.num_class);
            if recomputed != c.self_int {
                return Err(Error::Internal(format!(
                    "tracked curve {} stores self-intersection {} but its class \
                     ({}, {}) on a surface with e = {} gives {}",
                    c.label, c.self_int, c.num_class.a, c.num_class.b, self.e_invariant, recomputed
                )));
            }
        }
        Ok(())
    }

    /// Mark the given fiber labels as special (see
    /// [`RuledSurface::special_fibers`]).
    pub fn with_special_fibers<I, S>(mut self, labels: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        self.special_fibers
            .extend(labels.into_iter().map(Into::into));
        self
    }

    /// Assemble a surface directly from invariants (classification-table
    /// style).  Tracked self-intersections are validated against `e`.
    pub fn assembled(
        base: CurveContext,
        e_invariant: i64,
        e_divisor: DivisorClass,
        decomposable: TriState,
        tracked_curves: Vec<TrackedCurve>,
    ) -> Result<Self> {
        if e_divisor.degree != -e_invariant {
            return Err(Error::InconsistentDivisor(format!(
                "e-divisor degree {} must be minus the invariant e = {}",
                e_divisor.degree, e_invariant
            )));
        }
        let s = RuledSurface {
            base,
            e_invariant,
            e_divisor,
            decomposable,
            tracked_curves,
            kind: SurfaceKind::Assembled,
            special_fibers: BTreeSet::new(),
            warnings: Vec::new(),
        };
        s.check_tracked_consistency()?;
        Ok(s)
    }
}

/// Intersection form on a ruled surface:
/// `(a₁X₀ + b₁f)·(a₂X₀ + b₂f) = −e·a₁a₂ + a₁b₂ + a₂b₁`.
pub fn intersect(surface: &RuledSurface, c1: NumClass, c2: NumClass) -> i64 {
    -surface.e_invariant * c1.a * c2.a + c1.a * c2.b + c2.a * c1.b
}

/// Build the decomposable ruled surface `S_𝔟 = P(O ⊕ O(𝔟 − K))`.
///
/// Requires `deg 𝔟 ≥ 2g − 2`.  The surface has `𝔢 = K − 𝔟`,
/// `e = deg 𝔟 − (2g − 2)`, and tracks the two distinguished sections:
/// `X₀` (self-intersection `−e`, plane divisor `K`) and `X₁` (class
/// `X₀ + e·f`, self-intersection `e`, plane divisor `𝔟`).
///
/// When `g = 2` and `𝔟 ∼ K` the associated scroll map is not birational
/// (the image is rational); the surface is still built, with a warning.
pub fn make_s_b(curve: &CurveContext, b: DivisorClass) -> Result<RuledSurface> {
    let g = curve.genus;
    let can_deg = curve.canonical_degree;
    if b.degree < can_deg {
        return Err(Error::DegreeOutOfRange(format!(
            "S_b requires deg b >= 2g - 2 = {} (got {})",
            can_deg, b.degree
        )));
    }
    let e = b.degree - can_deg;
    let e_divisor = DivisorClass::canonical_shift(curve, b.clone(), 0);
    debug_assert_eq!(e_divisor.degree, -e);

    let mut warnings = Vec::new();
    if g == 2 && b.is_canonical() {
        warnings.push(
            "degenerate: for genus 2 with b ~ K the unisecant map is not birational \
             (the image scroll is rational)"
                .to_string(),
        );
    }

    let x0 = TrackedCurve {
        label: TrackedLabel::X0,
        num_class: NumClass::new(1, 0),
        self_int: -e,
        irreducible: true,
        plane_divisor: Some(DivisorClass::canonical(curve)),
    };
    let x1 = TrackedCurve {
        label: TrackedLabel::X1,
        num_class: NumClass::new(1, e),
        self_int: e,
        irreducible: true,
        plane_divisor: Some(b.clone()),
    };

    let surface = RuledSurface {
        base: *curve,
        e_invariant: e,
        e_divisor,
        decomposable: TriState::Yes,
        tracked_curves: vec![x0, x1],
        kind: SurfaceKind::SB { b },
        special_fibers: BTreeSet::new(),
        warnings,
    };
    surface.check_tracked_consistency()?;
    Ok(surface)
}

/// Dimension of the unisecant family `F_c = {Y ≡ X₁ + c·f irreducible}`
/// on an `S_𝔟`-rooted surface, for `c ≥ 1`:
///
/// ```text
///     dim F_c = c + h⁰(O_X(−𝔢 + 𝔠)) = c + max(0, e + c − g + 1),
/// ```
///
/// which equals `2c` in the pivotal case `deg 𝔟 = 3g − 3` (`e = g − 1`).
/// The generic member of `F_c` is irreducible.
pub fn family_y_dim(surface: &RuledSurface, c: i64) -> Result<i64> {
    if c < 1 {
        return Err(Error::DegreeOutOfRange(format!(
            "unisecant family index c must be >= 1 (got {c})"
        )));
    }
    family_dim_general(surface, c)
}

/// Family dimension for any `c ≥ 0` (internal: `c = 0` is the residual
/// system of curves numerically equivalent to `X₁`, of dimension
/// `h⁰(−𝔢)`; it is empty of *moving* curves exactly when `h⁰(−𝔢) = 0`).
pub(crate) fn family_dim_general(surface: &RuledSurface, c: i64) -> Result<i64> {
    if surface.b_divisor().is_none() {
        return Err(Error::NotAvailable(
            "unisecant family data requires an S_b-rooted surface".into(),
        ));
    }
    let e = surface.e_invariant;
    Ok(c + h0_generic_class(&surface.base, e + c)?.max(0))
}

/// Result of asking for family members through `k` general points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "outcome")]
pub enum FamilyThroughPoints {
    /// Members through the points form a family of this dimension (`0`
    /// means finitely many).
    FamilyDim {
        /// Dimension of the sub-family.
        dim: i64,
    },
    /// No member passes through `k` points in general position (special
    /// positions may still admit finitely many).
    NoneGeneric,
}

/// Members of `F_c` through `k` general points, in the pivotal regime
/// `deg 𝔟 = 3g − 3` where `dim F_c = 2c`: a `(2c − k)`-dimensional family
/// when `k ≤ 2c`, none for points in general position when `k > 2c`.
pub fn family_through_points(c: i64, k: i64) -> Result<FamilyThroughPoints> {
    if c < 1 {
        return Err(Error::DegreeOutOfRange(format!(
            "unisecant family index c must be >= 1 (got {c})"
        )));
    }
    if k < 0 {
        return Err(Error::InvalidPoints(format!(
            "point count must be non-negative (got {k})"
        )));
    }
    if k <= 2 * c {
        Ok(FamilyThroughPoints::FamilyDim { dim: 2 * c - k })
    } else {
        Ok(FamilyThroughPoints::NoneGeneric)
    }
}

/// Track a generic member `Y_c` of the unisecant family `F_c` on an
/// `S_𝔟`-rooted surface (class `X₁ + c·f`, self-intersection `e + 2c`,
/// plane divisor `𝔟 + 𝔠` with `𝔠` a generic group of `c` points).
pub fn track_family_member(surface: &RuledSurface, c: i64) -> Result<RuledSurface> {
    let b = match surface.b_divisor() {
        Some(b) => b.clone(),
        None => {
            return Err(Error::NotAvailable(
                "unisecant family members require an S_b-rooted surface".into(),
            ))
        }
    };
    if !matches!(surface.kind, SurfaceKind::SB { .. }) {
        return Err(Error::NotAvailable(
            "track family members on the untransformed S_b, before transforming".into(),
        ));
    }
    if c < 1 {
        return Err(Error::DegreeOutOfRange(format!(
            "unisecant family index c must be >= 1 (got {c})"
        )));
    }
    let label = TrackedLabel::Yc(c);
    if surface.tracked(&label).is_some() {
        return Err(Error::InvalidPoints(format!(
            "family member Y{c} is already tracked"
        )));
    }
    let e = surface.e_invariant;
    let mut out = surface.clone();
    out.tracked_curves.push(TrackedCurve {
        label,
        num_class: NumClass::new(1, e + c),
        self_int: e + 2 * c,
        irreducible: true,
        plane_divisor: Some(DivisorClass::generic_effective(b.degree + c)),
    });
    out.check_tracked_consistency()?;
    Ok(out)
}

/// Decide decomposability from the tracked unisecant curves: a ruled
/// surface is decomposable exactly when it carries two disjoint sections,
/// i.e. two irreducible unisecant curves with self-intersection sum `0`
/// (then `C·D = 0` follows for their classes).
///
/// Returns [`TriState::Yes`] on a witness pair; otherwise [`TriState::No`]
/// when the engine has complete knowledge of the unisecant families
/// (`S_𝔟`-rooted surfaces, where the stored `decomposable` field was
/// computed from the full family sweep), and [`TriState::Unknown`] when
/// tracking may be incomplete.
pub fn decomposable_witness(surface: &RuledSurface) -> TriState {
    let sections: Vec<&TrackedCurve> = surface
        .tracked_curves
        .iter()
        .filter(|c| c.irreducible && c.num_class.a == 1)
        .collect();
    for (i, c) in sections.iter().enumerate() {
        for d in &sections[i + 1..] {
            if c.self_int + d.self_int == 0 {
                return TriState::Yes;
            }
        }
    }
    if surface.knowledge_complete() {
        surface.decomposable
    } else {
        TriState::Unknown
    }
}

/// A scroll model: a ruled surface together with a unisecant linear system
/// `|H|` mapping it to `P^N`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScrollModel {
    /// The underlying ruled surface.
    pub surface: RuledSurface,
    /// Numerical class of the hyperplane system `H`.
    pub h_class: NumClass,
    /// The divisor `𝔡` with `H ≡ X₀ + 𝔡·f` (fiber part of `H`).
    pub h_fiber_divisor: DivisorClass,
    /// Scroll degree `d = H·H`.
    pub degree: i64,
    /// Speciality `i = h¹(O_R(1))`.
    pub speciality: i64,
    /// Ambient dimension `N = h⁰(H) − 1`.
    pub ambient_dim: i64,
}

impl ScrollModel {
    /// Verify the scroll relation `d − 2g + 1 + i == N` on this model.
    pub fn rr_identity_holds(&self) -> bool {
        let g = self.surface.base.genus;
        self.degree - 2 * g + 1 + self.speciality == self.ambient_dim
    }
}

/// The scroll `R_𝔟 ⊂ P^N` of an `S_𝔟`: the image under `|H| = |X₀ + 𝔟f|`.
///
/// Exact values, computed from the decomposition
/// `h^q(S, H) = h^q(X, 𝔟) + h^q(X, 𝔟 + 𝔢) = h^q(𝔟) + h^q(K)`:
/// degree `d = H² = 2g − 2 + deg 𝔟`, ambient `N = deg 𝔟`, speciality
/// `i = h¹(𝔟) + 1`.
pub fn scroll_r_b(surface: &RuledSurface) -> Result<ScrollModel> {
    let b = match &surface.kind {
        SurfaceKind::SB { b } => b.clone(),
        _ => {
            return Err(Error::NotAvailable(
                "R_b is the scroll of an untransformed S_b".into(),
            ))
        }
    };
    let curve = &surface.base;
    let g = curve.genus;
    let h_class = NumClass::new(1, b.degree);
    let degree = surface.self_intersection(h_class);
    debug_assert_eq!(degree, 2 * g - 2 + b.degree);

    // h^q(S, O(H)) = h^q(X, 𝔟) + h^q(X, 𝔟 + 𝔢), and 𝔟 + 𝔢 = K on S_𝔟.
    let (h0_b, h1_b) = h0_h1(curve, &b)?;
    let k = DivisorClass::canonical(curve);
    let (h0_k, h1_k) = h0_h1(curve, &k)?;
    let ambient_dim = h0_b + h0_k - 1;
    let speciality = h1_b + h1_k;

    let model = ScrollModel {
        surface: surface.clone(),
        h_class,
        h_fiber_divisor: b,
        degree,
        speciality,
        ambient_dim,
    };
    if !model.rr_identity_holds() {
        return Err(Error::Internal(format!(
            "scroll relation violated for R_b: d = {}, g = {}, i = {}, N = {}",
            model.degree, g, model.speciality, model.ambient_dim
        )));
    }
    Ok(model)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn curve(g: i64) -> CurveContext {
        CurveContext::new(g, false).unwrap()
    }

    fn s_b(g: i64, deg_b: i64) -> RuledSurface {
        make_s_b(&curve(g), DivisorClass::generic_effective(deg_b)).unwrap()
    }

    #[test]
    fn intersection_form() {
        let s = s_b(3, 6); // e = 2
        assert_eq!(s.e_invariant, 2);
        let x0 = NumClass::new(1, 0);
        let f = NumClass::fiber();
        assert_eq!(s.intersect(x0, x0), -2);
        assert_eq!(s.intersect(x0, f), 1);
        assert_eq!(s.intersect(f, f), 0);
        // H = X₀ + 𝔟f: H² = −e + 2·deg 𝔟 = −2 + 12 = 10.
        let h = NumClass::new(1, 6);
        assert_eq!(s.intersect(h, h), 10);
    }

    #[test]
    fn s_b_distinguished_sections() {
        // deg 𝔟 = 3g − 3 = 6 on genus 3: e = g − 1 = 2, X₀² = 1 − g = −2,
        // X₁² = g − 1 = 2.
        let s = s_b(3, 6);
        let x0 = s.tracked(&TrackedLabel::X0).unwrap();
        let x1 = s.tracked(&TrackedLabel::X1).unwrap();
        assert_eq!(x0.self_int, -2);
        assert_eq!(x1.self_int, 2);
        assert_eq!(x0.self_int + x1.self_int, 0);
        assert_eq!(x0.plane_divisor.as_ref().unwrap().degree, 4);
        assert_eq!(x1.plane_divisor.as_ref().unwrap().degree, 6);
        assert_eq!(s.e_divisor.degree, -2);
        assert_eq!(decomposable_witness(&s), TriState::Yes);
    }

    #[test]
    fn s_b_degree_guard() {
        let x = curve(3);
        assert!(make_s_b(&x, DivisorClass::generic_effective(3)).is_err());
        assert!(make_s_b(&x, DivisorClass::generic_effective(4)).is_ok());
    }

    #[test]
    fn s_b_genus2_canonical_is_degenerate() {
        let x = curve(2);
        let s = make_s_b(&x, DivisorClass::canonical(&x)).unwrap();
        assert_eq!(s.warnings.len(), 1);
        assert!(s.warnings[0].contains("not birational"));
        // Generic 𝔟 of the same degree: no warning.
        let s2 = make_s_b(&x, DivisorClass::generic_effective(2)).unwrap();
        assert!(s2.warnings.is_empty());
    }

    #[test]
    fn family_dimensions_pivotal_regime() {
        // deg 𝔟 = 3g − 3: dim F_c = 2c.
        for g in 2..=8 {
            let s = s_b(g, 3 * g - 3);
            for c in 1..=20 {
                assert_eq!(family_y_dim(&s, c).unwrap(), 2 * c, "g = {g}, c = {c}");
            }
            // c = 0: h⁰(−𝔢) = 0 in this regime — no moving curves ≡ X₁.
            assert_eq!(family_dim_general(&s, 0).unwrap(), 0, "g = {g}");
        }
    }

    #[test]
    fn family_dimensions_off_pivotal_regime() {
        // Genus 2, deg 𝔟 = 4 (e = 2 = g): dim F_c = 2c + 1, and the c = 0
        // family is a pencil of curves numerically equivalent to X₁.
        let s = s_b(2, 4);
        assert_eq!(family_dim_general(&s, 0).unwrap(), 1);
        for c in 1..=6 {
            assert_eq!(family_y_dim(&s, c).unwrap(), 2 * c + 1, "c = {c}");
        }
    }

    #[test]
    fn family_self_intersections() {
        let s = s_b(4, 9); // e = g − 1 = 3
        let mut t = s;
        for c in 1..=4 {
            t = track_family_member(&t, c).unwrap();
            let yc = t.tracked(&TrackedLabel::Yc(c)).unwrap().clone();
            assert_eq!(yc.self_int, t.e_invariant + 2 * c);
            assert_eq!(yc.self_int, 4 - 1 + 2 * c); // g − 1 + 2c
            assert_eq!(yc.plane_divisor.as_ref().unwrap().degree, 9 + c);
        }
    }

    #[test]
    fn family_through_points_rule() {
        assert_eq!(
            family_through_points(3, 2).unwrap(),
            FamilyThroughPoints::FamilyDim { dim: 4 }
        );
        assert_eq!(
            family_through_points(2, 4).unwrap(),
            FamilyThroughPoints::FamilyDim { dim: 0 }
        );
        assert_eq!(
            family_through_points(1, 3).unwrap(),
            FamilyThroughPoints::NoneGeneric
        );
        assert!(family_through_points(0, 1).is_err());
    }

    #[test]
    fn scroll_r_b_numerics() {
        // Genus 3, deg 𝔟 = 6: R_𝔟 ⊂ P⁶ of degree 10, speciality 1.
        let s = s_b(3, 6);
        let r = scroll_r_b(&s).unwrap();
        assert_eq!(r.degree, 10);
        assert_eq!(r.ambient_dim, 6);
        assert_eq!(r.speciality, 1);
        assert!(r.rr_identity_holds());
        // Genus 2, deg 𝔟 = 4: degree 6 in P⁴.
        let s2 = s_b(2, 4);
        let r2 = scroll_r_b(&s2).unwrap();
        assert_eq!((r2.degree, r2.ambient_dim, r2.speciality), (6, 4, 1));
    }

    #[test]
    fn assembled_surface_consistency_check() {
        let x = curve(3);
        let ok = RuledSurface::assembled(
            x,
            -1,
            DivisorClass::generic_effective(1),
            TriState::No,
            vec![TrackedCurve {
                label: TrackedLabel::X0,
                num_class: NumClass::new(1, 0),
                self_int: 1,
                irreducible: true,
                plane_divisor: None,
            }],
        );
        assert!(ok.is_ok());
        let bad = RuledSurface::assembled(
            x,
            -1,
            DivisorClass::generic_effective(1),
            TriState::No,
            vec![TrackedCurve {
                label: TrackedLabel::X0,
                num_class: NumClass::new(1, 0),
                self_int: -1,
                irreducible: true,
                plane_divisor: None,
            }],
        );
        assert!(matches!(bad, Err(Error::Internal(_))));
    }

    #[test]
    fn witness_unknown_on_incomplete_tracking() {
        let x = curve(3);
        // An assembled surface with only X₀ tracked: no pair, unknown.
        let s = RuledSurface::assembled(
            x,
            1,
            DivisorClass::generic_effective(-1),
            TriState::Unknown,
            vec![TrackedCurve {
                label: TrackedLabel::X0,
                num_class: NumClass::new(1, 0),
                self_int: -1,
                irreducible: true,
                plane_divisor: None,
            }],
        )
        .unwrap();
        assert_eq!(decomposable_witness(&s), TriState::Unknown);
    }

    #[test]
    fn witness_yes_on_assembled_pair() {
        // The genus-3 degree-6 decomposable model P(O ⊕ O(Q − P)):
        // X₀² = X₁² = 0, disjoint sections.
        let x = curve(3);
        let s = RuledSurface::assembled(
            x,
            0,
            DivisorClass::nontrivial_degree_zero(),
            TriState::Yes,
            vec![
                TrackedCurve {
                    label: TrackedLabel::X0,
                    num_class: NumClass::new(1, 0),
                    self_int: 0,
                    irreducible: true,
                    plane_divisor: None,
                },
                TrackedCurve {
                    label: TrackedLabel::X1,
                    num_class: NumClass::new(1, 0),
                    self_int: 0,
                    irreducible: true,
                    plane_divisor: None,
                },
            ],
        )
        .unwrap();
        assert_eq!(decomposable_witness(&s), TriState::Yes);
    }
}
