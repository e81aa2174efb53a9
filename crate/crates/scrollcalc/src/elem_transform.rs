//! Elementary transformations of ruled surfaces.
//!
//! The elementary transformation of a ruled surface `S → X` at a point `x`
//! blows up `x` and contracts the strict transform of the fiber through it.
//! Numerically, for a unisecant curve `C` and centers on `k` pairwise
//! distinct fibers, `l` of which lie on `C`:
//!
//! ```text
//!     C'² = C² − l + (k − l) = C² + k − 2l,
//! ```
//!
//! each center on `C` costing 1 and each center off `C` adding 1 (after
//! the fiber contraction).  The invariant `e` therefore flips parity once
//! per center.  On the scroll side an elementary transformation is exactly
//! a projection of the scroll from a point, so chains of transformations
//! connect any linearly normal special scroll with a special unisecant
//! directrix to a canonical model `R_𝔟` (see [`reduce_to_rb`] and
//! [`explicit_rb_points`]).
//!
//! For `S_𝔟`-rooted surfaces the engine recomputes everything atomically
//! from the root after each transformation: tracked self-intersections,
//! plane divisors, the new invariant `e′ = −min{C² : C irreducible
//! unisecant}` (the minimum ranges over tracked sections *and* the
//! unisecant families `F_c`, whose members through eligible centers
//! achieve `Y² = e + 2c + k − 2l` for `0 ≤ l ≤ min(dim F_c, eligible)`),
//! and decomposability (two disjoint sections exist iff two irreducible
//! unisecant curves have self-intersection sum `0`).

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::curve_divisors::DivisorClass;
use crate::ruled_surface::{
    family_dim_general, make_s_b, track_family_member, NumClass, RuledSurface, ScrollModel,
    SurfaceKind, TrackedCurve, TrackedLabel,
};
use crate::{Error, Result, TriState};

/// A transformation center on a ruled surface.
///
/// Each center lives on its own fiber.  `fiber` optionally names the fiber
/// (named fibers must be pairwise distinct; anonymous centers are taken on
/// pairwise distinct generic fibers).  `on_curves` lists the tracked curves
/// through the center; `generic` asserts the center is in general position
/// (and hence on no tracked curve and no special fiber).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointSpec {
    /// Optional fiber label.
    pub fiber: Option<String>,
    /// Tracked curves passing through the center.
    pub on_curves: BTreeSet<TrackedLabel>,
    /// Whether the center is in general position.
    pub generic: bool,
}

impl PointSpec {
    /// A center in general position.
    pub fn generic() -> Self {
        PointSpec {
            fiber: None,
            on_curves: BTreeSet::new(),
            generic: true,
        }
    }

    /// A center on the given tracked curve (otherwise generic on it).
    pub fn on_curve(label: TrackedLabel) -> Self {
        PointSpec {
            fiber: None,
            on_curves: BTreeSet::from([label]),
            generic: false,
        }
    }

    /// A center on the named fiber, on no tracked curve.
    pub fn on_fiber(label: impl Into<String>) -> Self {
        PointSpec {
            fiber: Some(label.into()),
            on_curves: BTreeSet::new(),
            generic: false,
        }
    }

    /// A center on the given tracked curve and the named fiber.
    pub fn on_curve_and_fiber(label: TrackedLabel, fiber: impl Into<String>) -> Self {
        PointSpec {
            fiber: Some(fiber.into()),
            on_curves: BTreeSet::from([label]),
            generic: false,
        }
    }

    fn is_on(&self, label: &TrackedLabel) -> bool {
        self.on_curves.contains(label)
    }
}

/// Validate a combined set of centers against a surface.
fn validate_points(surface: &RuledSurface, points: &[PointSpec]) -> Result<()> {
    // Named fibers must be pairwise distinct (one center per fiber).
    let mut seen = BTreeSet::new();
    for p in points {
        if let Some(f) = &p.fiber {
            if !seen.insert(f.clone()) {
                return Err(Error::InvalidPoints(format!(
                    "two centers on the fiber `{f}`: an elementary transformation \
                     admits at most one center per fiber"
                )));
            }
        }
        if p.generic && !p.on_curves.is_empty() {
            return Err(Error::InvalidPoints(
                "a center cannot be both generic and on a tracked curve".into(),
            ));
        }
        for label in &p.on_curves {
            if surface.tracked(label).is_none() {
                return Err(Error::InvalidPoints(format!(
                    "center placed on untracked curve {label}; track it first"
                )));
            }
        }
    }
    // Incidence vs intersection numbers: centers on two curves at once
    // cannot outnumber the curves' intersection.
    let labels: Vec<TrackedLabel> = surface
        .tracked_curves
        .iter()
        .map(|c| c.label.clone())
        .collect();
    for (i, a) in labels.iter().enumerate() {
        for b in &labels[i + 1..] {
            let shared = points.iter().filter(|p| p.is_on(a) && p.is_on(b)).count() as i64;
            if shared == 0 {
                continue;
            }
            let ca = surface.tracked(a).unwrap();
            let cb = surface.tracked(b).unwrap();
            let max = surface.intersect(ca.num_class, cb.num_class);
            if shared > max {
                return Err(Error::InvalidPoints(format!(
                    "{shared} centers on both {a} and {b}, but {a}·{b} = {max}"
                )));
            }
        }
    }
    Ok(())
}

/// Achievable self-intersections of irreducible unisecant family curves
/// after transforming at `points`, together with the dimension of the
/// sub-family realizing each value.  Only meaningful for `S_𝔟`-rooted
/// surfaces (`root` must be the untransformed `S_𝔟`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct FamilyValue {
    c: i64,
    l: i64,
    self_int: i64,
    /// Dimension of the family of members through the `l` chosen centers.
    dim_through: i64,
}

fn family_values(
    root: &RuledSurface,
    points: &[PointSpec],
    c_max: i64,
) -> Result<Vec<FamilyValue>> {
    let e = root.e_invariant;
    let k = points.len() as i64;

    // Sort each center into exactly one eligibility bucket.  A member of
    // F_c through a center on several tracked curves must meet each of
    // them there, so the binding cap is the smallest one; the buckets are
    // ordered accordingly (Y_c·X₀ = c ≤ Y_c·X₁ = e + c ≤ Y_c·Y_{c′}).
    let mut on_x0 = 0i64;
    let mut on_x1 = 0i64;
    let mut per_yc: std::collections::BTreeMap<i64, i64> = std::collections::BTreeMap::new();
    let mut special_fiber_only = 0i64;
    let mut free = 0i64;
    for p in points {
        if p.is_on(&TrackedLabel::X0) {
            on_x0 += 1;
        } else if p.is_on(&TrackedLabel::X1) {
            on_x1 += 1;
        } else if let Some(cp) = p
            .on_curves
            .iter()
            .filter_map(|l| match l {
                TrackedLabel::Yc(c) => Some(*c),
                _ => None,
            })
            .min()
        {
            *per_yc.entry(cp).or_insert(0) += 1;
        } else if p
            .fiber
            .as_ref()
            .is_some_and(|f| root.special_fibers.contains(f))
        {
            special_fiber_only += 1;
        } else {
            free += 1;
        }
    }

    let mut values = Vec::new();
    for c in 0..=c_max {
        let dim = family_dim_general(root, c)?;
        if c == 0 && dim == 0 {
            // No moving curves numerically equivalent to X₁; the single
            // curve X₁ is tracked separately.
            continue;
        }
        // How many centers an irreducible member of F_c can pass through:
        // capped per bucket by the intersection numbers above.  The only
        // member of the c = 0 family through a point of a special fiber is
        // the reducible one, so those centers are ineligible at c = 0.
        let mut eligible = free + on_x0.min(c) + on_x1.min(e + c);
        for (&cp, &n) in &per_yc {
            eligible += n.min(e + c + cp);
        }
        if c >= 1 {
            eligible += special_fiber_only;
        }
        let l_max = dim.min(eligible).min(k);
        for l in 0..=l_max {
            values.push(FamilyValue {
                c,
                l,
                self_int: e + 2 * c + k - 2 * l,
                dim_through: dim - l,
            });
        }
    }
    Ok(values)
}

/// Apply elementary transformations at `points` (in addition to any already
/// recorded on the surface).
///
/// For `S_𝔟`-rooted surfaces everything is recomputed atomically from the
/// root, so the result is independent of how the centers are batched:
/// tracked curves get `C′² = C² + k − 2l` and lose the centers from their
/// plane divisors, the invariant becomes `e′ = −min{C′²}` over all
/// irreducible unisecant curves (tracked and family), numerical classes are
/// rewritten in the new `(X₀′, f)` basis, and decomposability is decided by
/// searching for two curves with self-intersection sum `0`.
///
/// For assembled surfaces only the tracked curves can be updated; the
/// result's decomposability is unknown unless witnessed, and a warning is
/// recorded.
pub fn transform(surface: &RuledSurface, points: &[PointSpec]) -> Result<RuledSurface> {
    surface.check_tracked_consistency()?;
    match &surface.kind {
        SurfaceKind::SB { b } => {
            let all: Vec<PointSpec> = points.to_vec();
            recompute_from_root(surface, b.clone(), all)
        }
        SurfaceKind::SBTransformed { b, points: prior } => {
            let mut all = prior.clone();
            all.extend_from_slice(points);
            recompute_from_root(surface, b.clone(), all)
        }
        SurfaceKind::Assembled => transform_assembled(surface, points),
    }
}

fn recompute_from_root(
    surface: &RuledSurface,
    b: DivisorClass,
    all_points: Vec<PointSpec>,
) -> Result<RuledSurface> {
    // Rebuild the untransformed root with the same tracked family members.
    let mut root = make_s_b(&surface.base, b.clone())?;
    root.special_fibers = surface.special_fibers.clone();
    let mut yc_labels: Vec<i64> = surface
        .tracked_curves
        .iter()
        .filter_map(|t| match t.label {
            TrackedLabel::Yc(c) => Some(c),
            _ => None,
        })
        .collect();
    // Centers may also reference family members; make sure they exist on
    // the root before validation.
    for p in &all_points {
        for l in &p.on_curves {
            if let TrackedLabel::Yc(c) = l {
                if !yc_labels.contains(c) {
                    yc_labels.push(*c);
                }
            }
        }
    }
    yc_labels.sort_unstable();
    for c in &yc_labels {
        root = track_family_member(&root, *c)?;
    }

    validate_points(&root, &all_points)?;

    let k = all_points.len() as i64;
    let curve = root.base;

    // Tracked curves: new self-intersections and plane divisors.
    struct Updated {
        label: TrackedLabel,
        self_int: i64,
        irreducible: bool,
        plane_divisor: Option<DivisorClass>,
    }
    let mut updated = Vec::new();
    for t in &root.tracked_curves {
        let l = all_points.iter().filter(|p| p.is_on(&t.label)).count() as i64;
        let self_int = t.self_int + k - 2 * l;
        let plane_divisor = t
            .plane_divisor
            .as_ref()
            .map(|d| divisor_minus_points(&curve, d, l));
        updated.push(Updated {
            label: t.label.clone(),
            self_int,
            irreducible: t.irreducible,
            plane_divisor,
        });
    }

    // Unisecant family sweep.
    let max_tracked_c = yc_labels.iter().copied().max().unwrap_or(0);
    let c_max = 2 * k + 2 * max_tracked_c + 16;
    let fam = family_values(&root, &all_points, c_max)?;
    let family_min = fam.iter().map(|v| v.self_int).min();

    // New invariant: e′ = −min over all irreducible unisecant curves.
    let tracked_min = updated
        .iter()
        .filter(|u| u.irreducible)
        .map(|u| u.self_int)
        .min()
        .ok_or_else(|| Error::Internal("surface with no tracked curves".into()))?;
    let global_min = match family_min {
        Some(fm) => tracked_min.min(fm),
        None => tracked_min,
    };
    let e_new = -global_min;

    // Parity: every unisecant self-intersection is ≡ e + k (mod 2).
    for u in &updated {
        if (u.self_int - (root.e_invariant + k)).rem_euclid(2) != 0 {
            return Err(Error::Internal(format!(
                "parity violation: {} has self-intersection {} after {} centers on a \
                 surface with e = {}",
                u.label, u.self_int, k, root.e_invariant
            )));
        }
    }

    // Decomposability: two distinct irreducible unisecant curves with
    // self-intersection sum 0.
    let tracked_vals: Vec<i64> = updated
        .iter()
        .filter(|u| u.irreducible)
        .map(|u| u.self_int)
        .collect();
    let mut decomposable = false;
    'outer: for (i, a) in tracked_vals.iter().enumerate() {
        for bv in &tracked_vals[i + 1..] {
            if a + bv == 0 {
                decomposable = true;
                break 'outer;
            }
        }
    }
    if !decomposable {
        // Tracked + family.  Two sections over the same base coincide only
        // if they have the same self-intersection, so a pair summing to 0
        // is suspect only when both values vanish; it then needs a second
        // family member through the same centers.
        for v in &fam {
            if tracked_vals
                .iter()
                .any(|t| t + v.self_int == 0 && (*t != 0 || v.dim_through >= 1))
            {
                decomposable = true;
                break;
            }
        }
    }
    if !decomposable {
        // Family + family.
        'ff: for (i, v) in fam.iter().enumerate() {
            for w in fam.iter().skip(i) {
                if v.self_int + w.self_int != 0 {
                    continue;
                }
                let distinct = if (v.c, v.l) == (w.c, w.l) {
                    v.dim_through >= 1
                } else {
                    true
                };
                if distinct {
                    decomposable = true;
                    break 'ff;
                }
            }
        }
    }

    // Rewrite numerical classes in the new basis: a section with
    // self-intersection s has class X₀′ + ((s + e′)/2)·f.
    let tracked_curves = updated
        .into_iter()
        .map(|u| {
            let twice_b = u.self_int + e_new;
            if twice_b.rem_euclid(2) != 0 {
                return Err(Error::Internal(format!(
                    "non-integral fiber coefficient for {} (self-intersection {}, e' = {})",
                    u.label, u.self_int, e_new
                )));
            }
            Ok(TrackedCurve {
                label: u.label,
                num_class: NumClass::new(1, twice_b / 2),
                self_int: u.self_int,
                irreducible: u.irreducible,
                plane_divisor: u.plane_divisor,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let e_divisor = generic_class_of_degree(&curve, -e_new);
    let out = RuledSurface {
        base: curve,
        e_invariant: e_new,
        e_divisor,
        decomposable: TriState::from(decomposable),
        tracked_curves,
        kind: SurfaceKind::SBTransformed {
            b,
            points: all_points,
        },
        special_fibers: root.special_fibers.clone(),
        warnings: root.warnings.clone(),
    };
    out.check_tracked_consistency()?;
    Ok(out)
}

fn transform_assembled(surface: &RuledSurface, points: &[PointSpec]) -> Result<RuledSurface> {
    validate_points(surface, points)?;
    let k = points.len() as i64;
    let curve = surface.base;
    let mut tracked = Vec::new();
    for t in &surface.tracked_curves {
        let l = points.iter().filter(|p| p.is_on(&t.label)).count() as i64;
        tracked.push(TrackedCurve {
            label: t.label.clone(),
            num_class: t.num_class,
            self_int: t.self_int + k - 2 * l,
            irreducible: t.irreducible,
            plane_divisor: t
                .plane_divisor
                .as_ref()
                .map(|d| divisor_minus_points(&curve, d, l)),
        });
    }
    let tracked_min = tracked
        .iter()
        .filter(|u| u.irreducible && u.num_class.a == 1)
        .map(|u| u.self_int)
        .min()
        .ok_or_else(|| Error::Internal("surface with no tracked sections".into()))?;
    let e_new = -tracked_min;
    let tracked = tracked
        .into_iter()
        .map(|mut t| {
            if t.num_class.a == 1 {
                let twice_b = t.self_int + e_new;
                if twice_b.rem_euclid(2) != 0 {
                    return Err(Error::Internal(format!(
                        "non-integral fiber coefficient for {}",
                        t.label
                    )));
                }
                t.num_class = NumClass::new(1, twice_b / 2);
            }
            Ok(t)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut warnings = surface.warnings.clone();
    warnings.push(
        "transformed an assembled surface: unisecant family data unavailable, \
         e and decomposability reflect tracked curves only"
            .to_string(),
    );
    let out = RuledSurface {
        base: curve,
        e_invariant: e_new,
        e_divisor: generic_class_of_degree(&curve, -e_new),
        decomposable: TriState::Unknown,
        tracked_curves: tracked,
        kind: SurfaceKind::Assembled,
        special_fibers: surface.special_fibers.clone(),
        warnings,
    };
    out.check_tracked_consistency()?;
    Ok(out)
}

/// `D − (l general points)` as a divisor class, via the double shift
/// `K − (K − D + E_l)`.
fn divisor_minus_points(
    curve: &crate::curve_divisors::CurveContext,
    d: &DivisorClass,
    l: i64,
) -> DivisorClass {
    if l == 0 {
        return d.clone();
    }
    let inner = DivisorClass::canonical_shift(curve, d.clone(), l);
    DivisorClass::canonical_shift(curve, inner, 0)
}

/// A generic class of the given degree (used for the transformed `𝔢`,
/// whose linear-equivalence class is generic for generic centers): h⁰ is
/// `max(0, degree − g + 1)`, one less condition than an effective class
/// imposes in the range `0 ≤ degree ≤ g − 1`.
fn generic_class_of_degree(
    curve: &crate::curve_divisors::CurveContext,
    degree: i64,
) -> DivisorClass {
    if degree == 0 {
        return DivisorClass::nontrivial_degree_zero();
    }
    let h0 = (degree - curve.genus + 1).max(0);
    DivisorClass::explicit_special(degree, h0)
}

/// One case line of a minimum-self-intersection report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinCurveCase {
    /// Self-intersection achieved by this class of curves.
    pub self_int: i64,
    /// Dimension of the family realizing it (`0` = finitely many curves).
    pub family_dim: i64,
    /// Whether this value is the minimum over all unisecant curves.
    pub is_minimum: bool,
}

/// Report on the minimum-self-intersection unisecant curves of a generic
/// transformation of `S_𝔟` (`deg 𝔟 = 3g − 3`) at `k` general points.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinCurveReport {
    /// Parity class `j = k mod 2`.
    pub j: i64,
    /// The candidate minima (the transformed `X₀` and the best family
    /// curves).
    pub cases: Vec<MinCurveCase>,
    /// Whether the transformed surface is decomposable (`true` only for
    /// `k = 0`).
    pub decomposable_after: bool,
}

impl MinCurveReport {
    /// The minimum self-intersection over all cases.
    pub fn minimum(&self) -> i64 {
        self.cases
            .iter()
            .filter(|c| c.is_minimum)
            .map(|c| c.self_int)
            .min()
            .expect("report always has a minimum case")
    }
}

/// Minimum-self-intersection analysis for the transformation of `S_𝔟`
/// (`deg 𝔟 = 3g − 3`, genus `g ≥ 2`) at `k ≥ 0` points in general
/// position, with `j = k mod 2`:
///
/// * `k ≤ 2g − 2`: the transformed `X₀` is a minimum with
///   `X₀′² = 1 − g + k`; the families contribute a `j`-dimensional family
///   of curves with self-intersection `g − 1 + j` (tying the minimum
///   exactly at `k = 2g − 2`).
/// * `k > 2g − 2`: the minimum is `g − 1 + j`, achieved by a
///   `j`-dimensional family (obtained from `F_c`, `k = 2c − j`).
///
/// The result is never decomposable for `k ≥ 1` (no two curves reach
/// self-intersection sum `0`); for `k = 0` the surface is `S_𝔟` itself.
pub fn generic_transform_report(g: i64, k: i64) -> Result<MinCurveReport> {
    if g < 2 {
        return Err(Error::GenusOutOfRange {
            got: g,
            reason: "the generic transformation analysis requires genus >= 2".into(),
        });
    }
    if k < 0 {
        return Err(Error::InvalidPoints(format!(
            "center count must be non-negative (got {k})"
        )));
    }
    let j = k.rem_euclid(2);
    let x0_val = 1 - g + k;
    let fam_val = g - 1 + j;
    let cases = vec![
        MinCurveCase {
            self_int: x0_val,
            family_dim: 0,
            is_minimum: k <= 2 * g - 2,
        },
        MinCurveCase {
            self_int: fam_val,
            family_dim: j,
            is_minimum: x0_val >= fam_val,
        },
    ];
    Ok(MinCurveReport {
        j,
        cases,
        decomposable_after: k == 0,
    })
}

/// The reduction data connecting a linearly normal special scroll of
/// degree `d`, genus `g ≥ 2`, speciality `i ≥ 1` in `P^N` to its canonical
/// model `R_𝔟`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionPlan {
    /// Degree of the divisor `𝔟` (always `2g + N − 3`).
    pub deg_b: i64,
    /// Number of projection centers (`4g + N − 5 − d`), all lying on the
    /// scroll `R_𝔟`.
    pub num_points: i64,
    /// Dimension of the linear span of the centers (`2g − 4`).
    pub span_dim: i64,
}

/// Compute the [`ReductionPlan`] exhibiting the degree-`d` special scroll
/// in `P^N` over a genus-`g` curve as a projection of `R_𝔟` (degree
/// `4g + N − 5` in `P^{2g + N − 3}`) from `4g + N − 5 − d` points spanning
/// a `P^{2g−4}`.
pub fn reduce_to_rb(g: i64, n: i64, d: i64) -> Result<ReductionPlan> {
    if g < 2 {
        return Err(Error::GenusOutOfRange {
            got: g,
            reason: "the reduction to R_b requires genus >= 2".into(),
        });
    }
    if n < 3 {
        return Err(Error::AmbientTooSmall(n));
    }
    let i = n - d + 2 * g - 1;
    if i < 1 {
        return Err(Error::DegreeOutOfRange(format!(
            "the reduction applies to special scrolls: (g, d, N) = ({g}, {d}, {n}) \
             gives speciality i = {i} < 1"
        )));
    }
    let num_points = 4 * g + n - 5 - d;
    if num_points < 0 {
        return Err(Error::DegreeOutOfRange(format!(
            "negative center count {num_points} for (g, d, N) = ({g}, {d}, {n})"
        )));
    }
    Ok(ReductionPlan {
        deg_b: 2 * g + n - 3,
        num_points,
        span_dim: 2 * g - 4,
    })
}

/// The explicit center recipe on a scroll model with a special directrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RbPointPlan {
    /// Centers at the intersection points `X_a ∩ X_b` (`= X_a·X_b`).
    pub on_xa_xb: i64,
    /// Centers on `X_a` at the fibers `Q₁, …, Q_m` with
    /// `Q₁ + ⋯ + Q_m ∈ |𝔟 − 𝔞₂|` (`m = 2g + N − 3 − deg 𝔞₂`).
    pub on_xa_fibers: i64,
    /// Centers on `X_b` at the fibers `P₁, …, P_l` with
    /// `P₁ + ⋯ + P_l ∈ |K − 𝔞₁|` (`l = 2g − 2 − deg 𝔞₁`).
    pub on_xb_fibers: i64,
    /// Total center count; always `4g + N − 5 − d`.
    pub total: i64,
    /// `X_a′·X_b′` after transforming at all centers; always `0` (the
    /// transformed sections are the disjoint sections of `S_𝔟`).
    pub xa_xb_after: i64,
    /// Degree of `π_*(X_a′ ∩ H′)`; always `2g − 2` (the class becomes `K`).
    pub xa_pushforward_degree: i64,
    /// Degree of `π_*(X_b′ ∩ H′)`; always `2g + N − 3` (the class becomes
    /// `𝔟`).
    pub xb_pushforward_degree: i64,
}

/// Compute the explicit centers transforming a scroll model with special
/// directrix `xa` (plane divisor `𝔞₁`, `h¹(𝔞₁) ≥ 1`) and a unisecant
/// `xb` (plane divisor `𝔞₂`, `deg 𝔞₂ ≤ 2g + N − 3`) into `R_𝔟`:
///
/// * `X_a·X_b` centers at the points of `X_a ∩ X_b`,
/// * `m = 2g + N − 3 − deg 𝔞₂` centers on `X_a` (fibers `Q_j`),
/// * `l = 2g − 2 − deg 𝔞₁` centers on `X_b` (fibers `P_i`),
///
/// after which `X_a′·X_b′ = 0`, `π_*(X_a′ ∩ H′) ∼ 𝔞₁ + ΣP_i ∼ K` (using
/// `h⁰(K − 𝔞₁) ≥ 1`, i.e. the speciality of `𝔞₁`) and
/// `π_*(X_b′ ∩ H′) ∼ 𝔞₂ + ΣQ_j ∼ 𝔟`.
pub fn explicit_rb_points(
    scroll: &ScrollModel,
    xa: &TrackedLabel,
    xb: &TrackedLabel,
) -> Result<RbPointPlan> {
    let g = scroll.surface.base.genus;
    let n = scroll.ambient_dim;
    let d = scroll.degree;
    let curve = scroll.surface.base;

    let a = scroll
        .surface
        .tracked(xa)
        .ok_or_else(|| Error::NotAvailable(format!("no tracked curve {xa}")))?;
    let b = scroll
        .surface
        .tracked(xb)
        .ok_or_else(|| Error::NotAvailable(format!("no tracked curve {xb}")))?;
    let a1 = a
        .plane_divisor
        .as_ref()
        .ok_or_else(|| Error::NotAvailable(format!("{xa} has no plane divisor")))?;
    let a2 = b
        .plane_divisor
        .as_ref()
        .ok_or_else(|| Error::NotAvailable(format!("{xb} has no plane divisor")))?;

    let (_, h1_a1) = crate::curve_divisors::h0_h1(&curve, a1)?;
    if h1_a1 < 1 {
        return Err(Error::InconsistentDivisor(format!(
            "X_a must be a special directrix: h1 of its plane divisor is {h1_a1}"
        )));
    }
    let l = curve.canonical_degree - a1.degree;
    if l < 0 {
        return Err(Error::DegreeOutOfRange(format!(
            "special directrix degree {} exceeds 2g - 2 = {}",
            a1.degree, curve.canonical_degree
        )));
    }
    let m = (2 * g + n - 3) - a2.degree;
    if m < 0 {
        return Err(Error::DegreeOutOfRange(format!(
            "unisecant degree {} exceeds 2g + N - 3 = {}",
            a2.degree,
            2 * g + n - 3
        )));
    }
    let n_ab = scroll.surface.intersect(a.num_class, b.num_class);
    if n_ab < 0 {
        return Err(Error::InvalidPoints(format!(
            "X_a·X_b = {n_ab} is negative: the chosen curves cannot be distinct \
             irreducible unisecants"
        )));
    }
    let total = l + m + n_ab;
    let expected = 4 * g + n - 5 - d;
    if total != expected {
        return Err(Error::Internal(format!(
            "center count {total} does not match 4g + N - 5 - d = {expected}"
        )));
    }
    Ok(RbPointPlan {
        on_xa_xb: n_ab,
        on_xa_fibers: m,
        on_xb_fibers: l,
        total,
        // Every intersection point of the two unisecants is a center, so
        // their proper transforms are disjoint.
        xa_xb_after: 0,
        xa_pushforward_degree: a1.degree + l,
        xb_pushforward_degree: a2.degree + m,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve_divisors::CurveContext;
    use crate::ruled_surface::scroll_r_b;

    fn curve(g: i64) -> CurveContext {
        CurveContext::new(g, false).unwrap()
    }

    fn s_b(g: i64, deg_b: i64) -> RuledSurface {
        make_s_b(&curve(g), DivisorClass::generic_effective(deg_b)).unwrap()
    }

    #[test]
    fn single_generic_center_on_pivotal_surface() {
        // Genus 3, deg 𝔟 = 6: X₀² = −2 → −1, X₁² = 2 → 3, e′ = 1,
        // not decomposable.
        let s = s_b(3, 6);
        let t = transform(&s, &[PointSpec::generic()]).unwrap();
        assert_eq!(t.e_invariant, 1);
        assert_eq!(t.tracked(&TrackedLabel::X0).unwrap().self_int, -1);
        assert_eq!(t.tracked(&TrackedLabel::X1).unwrap().self_int, 3);
        assert_eq!(t.decomposable, TriState::No);
        assert_eq!(crate::ruled_surface::decomposable_witness(&t), TriState::No);
    }

    #[test]
    fn center_on_x0() {
        let s = s_b(3, 6);
        let t = transform(&s, &[PointSpec::on_curve(TrackedLabel::X0)]).unwrap();
        assert_eq!(t.tracked(&TrackedLabel::X0).unwrap().self_int, -3);
        assert_eq!(t.tracked(&TrackedLabel::X1).unwrap().self_int, 3);
        assert_eq!(t.e_invariant, 3);
        // X₀ lost a point from its plane divisor: K − P of degree 3.
        let pd = t
            .tracked(&TrackedLabel::X0)
            .unwrap()
            .plane_divisor
            .clone()
            .unwrap();
        assert_eq!(pd.degree, 3);
        let (h0, h1) = crate::curve_divisors::h0_h1(&curve(3), &pd).unwrap();
        assert_eq!((h0, h1), (2, 1)); // K − P is special on genus 3
    }

    #[test]
    fn batching_is_immaterial() {
        let s = s_b(4, 9);
        let pts = vec![
            PointSpec::generic(),
            PointSpec::on_curve(TrackedLabel::X0),
            PointSpec::on_curve(TrackedLabel::X1),
            PointSpec::generic(),
            PointSpec::on_curve(TrackedLabel::X0),
        ];
        let once = transform(&s, &pts).unwrap();
        let mut stepwise = s.clone();
        for p in &pts {
            stepwise = transform(&stepwise, std::slice::from_ref(p)).unwrap();
        }
        assert_eq!(once.e_invariant, stepwise.e_invariant);
        for t in &once.tracked_curves {
            let u = stepwise.tracked(&t.label).unwrap();
            assert_eq!(t.self_int, u.self_int, "curve {}", t.label);
            assert_eq!(t.num_class, u.num_class);
        }
        assert_eq!(once.decomposable, stepwise.decomposable);
    }

    #[test]
    fn two_centers_on_one_fiber_rejected() {
        let s = s_b(3, 6);
        let pts = vec![PointSpec::on_fiber("A"), PointSpec::on_fiber("A")];
        assert!(matches!(transform(&s, &pts), Err(Error::InvalidPoints(_))));
    }

    #[test]
    fn center_on_disjoint_pair_rejected() {
        // X₀·X₁ = 0 on S_𝔟: no center can lie on both.
        let s = s_b(3, 6);
        let p = PointSpec {
            fiber: None,
            on_curves: BTreeSet::from([TrackedLabel::X0, TrackedLabel::X1]),
            generic: false,
        };
        assert!(matches!(transform(&s, &[p]), Err(Error::InvalidPoints(_))));
    }

    #[test]
    fn incidence_caps_respect_intersection_numbers() {
        // Y₁·X₀ = 1 on S_𝔟: two centers on both is impossible.
        let s = track_family_member(&s_b(3, 6), 1).unwrap();
        let p = PointSpec {
            fiber: None,
            on_curves: BTreeSet::from([TrackedLabel::X0, TrackedLabel::Yc(1)]),
            generic: false,
        };
        assert!(transform(&s, std::slice::from_ref(&p)).is_ok());
        assert!(matches!(
            transform(&s, &[p.clone(), p]),
            Err(Error::InvalidPoints(_))
        ));
    }

    #[test]
    fn genus2_deg4_generic_center_gives_decomposable() {
        // Genus 2, deg 𝔟 = 4 (e = 2): the c = 0 pencil supplies a curve of
        // self-intersection +1 through a generic center, pairing with
        // X₀′² = −1: the transform is decomposable (it is S_{𝔟−P}).
        let s = s_b(2, 4);
        let t = transform(&s, &[PointSpec::generic()]).unwrap();
        assert_eq!(t.e_invariant, 1);
        assert_eq!(t.tracked(&TrackedLabel::X0).unwrap().self_int, -1);
        assert_eq!(t.decomposable, TriState::Yes);
    }

    #[test]
    fn genus2_deg4_special_fiber_center_gives_indecomposable() {
        // A center on a special fiber (over the support of the unique
        // divisor of |−𝔢|) is ineligible for the c = 0 pencil: no
        // +1-curve, and the transform is indecomposable.
        let s = s_b(2, 4).with_special_fibers(["A1", "A2"]);
        let t = transform(&s, &[PointSpec::on_fiber("A1")]).unwrap();
        assert_eq!(t.e_invariant, 1);
        assert_eq!(t.decomposable, TriState::No);
    }

    #[test]
    fn genus2_deg4_center_on_x1_gives_decomposable() {
        let s = s_b(2, 4);
        let t = transform(&s, &[PointSpec::on_curve(TrackedLabel::X1)]).unwrap();
        assert_eq!(t.tracked(&TrackedLabel::X1).unwrap().self_int, 1);
        assert_eq!(t.tracked(&TrackedLabel::X0).unwrap().self_int, -1);
        assert_eq!(t.e_invariant, 1);
        assert_eq!(t.decomposable, TriState::Yes);
    }

    #[test]
    fn generic_report_small_k() {
        // g = 3: k ≤ 2g−2 = 4 keeps X₀′ minimal.
        for k in 0..=4 {
            let r = generic_transform_report(3, k).unwrap();
            assert_eq!(r.minimum(), -2 + k, "k = {k}");
            assert_eq!(r.decomposable_after, k == 0);
        }
        // k = 5 (j = 1): family minimum g − 1 + j = 3.
        let r = generic_transform_report(3, 5).unwrap();
        assert_eq!(r.minimum(), 3);
        assert_eq!(r.j, 1);
        // k = 6 (j = 0): minimum 2.
        let r = generic_transform_report(3, 6).unwrap();
        assert_eq!(r.minimum(), 2);
    }

    #[test]
    fn engine_matches_generic_report() {
        for g in 2..=5 {
            for k in 0..=8 {
                let s = s_b(g, 3 * g - 3);
                let pts: Vec<PointSpec> = (0..k).map(|_| PointSpec::generic()).collect();
                let t = transform(&s, &pts).unwrap();
                let report = generic_transform_report(g, k).unwrap();
                assert_eq!(
                    -t.e_invariant,
                    report.minimum(),
                    "g = {g}, k = {k}: engine minimum vs report"
                );
                assert_eq!(t.decomposable.is_yes(), report.decomposable_after);
            }
        }
    }

    #[test]
    fn reduction_plan_values() {
        let r = reduce_to_rb(2, 3, 5).unwrap();
        assert_eq!((r.deg_b, r.num_points, r.span_dim), (4, 1, 0));
        let r = reduce_to_rb(3, 3, 7).unwrap();
        assert_eq!((r.deg_b, r.num_points, r.span_dim), (6, 3, 2));
        let r = reduce_to_rb(3, 3, 4).unwrap();
        assert_eq!((r.deg_b, r.num_points, r.span_dim), (6, 6, 2));
        // Non-special data is rejected.
        assert!(reduce_to_rb(2, 3, 8).is_err());
        assert!(reduce_to_rb(2, 2, 4).is_err());
    }

    #[test]
    fn explicit_centers_on_p3_model() {
        // The genus-3 degree-7 models in P³ with X₀² = 1 (e = −1): the
        // special directrix is the canonical quartic (plane divisor K),
        // the second unisecant has degree 6, and all three centers sit at
        // X_a ∩ X_b.
        let x = curve(3);
        let surface = RuledSurface::assembled(
            x,
            -1,
            DivisorClass::generic_effective(1),
            TriState::No,
            vec![
                TrackedCurve {
                    label: TrackedLabel::X0,
                    num_class: NumClass::new(1, 0),
                    self_int: 1,
                    irreducible: true,
                    plane_divisor: Some(DivisorClass::canonical(&x)),
                },
                TrackedCurve {
                    label: TrackedLabel::Custom("Xb".into()),
                    num_class: NumClass::new(1, 2),
                    self_int: 5,
                    irreducible: true,
                    plane_divisor: Some(DivisorClass::generic_effective(6)),
                },
            ],
        )
        .unwrap();
        let h_class = NumClass::new(1, 3);
        let degree = surface.self_intersection(h_class);
        assert_eq!(degree, 7);
        let scroll = ScrollModel {
            surface,
            h_class,
            h_fiber_divisor: DivisorClass::generic_effective(3),
            degree,
            speciality: 1,
            ambient_dim: 3,
        };
        let plan = explicit_rb_points(
            &scroll,
            &TrackedLabel::X0,
            &TrackedLabel::Custom("Xb".into()),
        )
        .unwrap();
        assert_eq!(plan.on_xa_xb, 3);
        assert_eq!(plan.on_xa_fibers, 0);
        assert_eq!(plan.on_xb_fibers, 0);
        assert_eq!(plan.total, 3);
        assert_eq!(plan.xa_xb_after, 0);
        assert_eq!(plan.xa_pushforward_degree, 4); // becomes K (degree 2g − 2)
        assert_eq!(plan.xb_pushforward_degree, 6); // becomes 𝔟 (degree 2g + N − 3)
    }

    #[test]
    fn r_b_scroll_after_reduction_has_the_right_numerics() {
        // Round trip: reduce (g, N, d) to R_𝔟 data, build S_𝔟, check the
        // scroll numerics, transform back down at num_points generic
        // centers and confirm the degree drop.
        for (g, n, d) in [(2, 3, 5), (3, 3, 7), (3, 4, 8), (4, 3, 9)] {
            let plan = reduce_to_rb(g, n, d).unwrap();
            let s = s_b(g, plan.deg_b);
            let r = scroll_r_b(&s).unwrap();
            assert_eq!(r.degree, 4 * g + n - 5);
            assert_eq!(r.ambient_dim, 2 * g + n - 3);
            assert_eq!(r.speciality, 1);
            assert_eq!(r.degree - plan.num_points, d);
        }
    }
}
