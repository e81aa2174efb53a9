//! Divisor-class arithmetic on an abstract smooth curve.
//!
//! This module implements an exact `h⁰`/`h¹` calculus for the divisor
//! classes that scroll theory actually needs, under *generic position*
//! semantics: every class is reduced to an internal normal form
//!
//! ```text
//!     n·K + E_m − F_p
//! ```
//!
//! where `K` is the canonical class and `E_m`, `F_p` are groups of `m`
//! (respectively `p`) points in general position, mutually independent.
//! On such classes cohomology is computable in closed form:
//!
//! * general points impose independent conditions, so
//!   `h⁰(A − F_p) = max(0, h⁰(A) − p)`;
//! * `h⁰(n·K + E_m)` follows from Riemann–Roch plus the classical values
//!   of the pluricanonical systems `h⁰(jK)` (`1`, `g`, `(2j−1)(g−1)` for
//!   `j = 0, 1, ≥2` on a curve of genus `g ≥ 2`);
//! * `h¹` always comes from Riemann–Roch,
//!   `h¹ = h⁰ − (deg − g + 1)`, and Serre duality `h¹(D) = h⁰(K − D)`
//!   corresponds to negating the normal form: `(n, m, p) ↦ (1−n, p, m)`.
//!
//! The same normal form expresses the divisor classes occurring on ruled
//! surfaces over the curve: `𝔢 = K − 𝔟`, `−𝔢 + 𝔠 = 𝔟 − K + 𝔠`, plane
//! divisors of unisecant curves after projection (`K − P₁ − ⋯ − P_l`), and
//! so on.  Note the crucial distinction between a *generic effective*
//! divisor of degree `m` (which has `h⁰ ≥ 1` by definition) and a *generic
//! class* of degree `m` (not effective at all when `0 ≤ m < g`); the latter
//! is represented here with a canonical twist, e.g. `𝔟 − K` as
//! `(n, m, p) = (−1, deg 𝔟, 0)`.

use serde::{Deserialize, Serialize};

use crate::{Error, Result, TriState};

/// An abstract smooth projective curve, described by the invariants the
/// calculus depends on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveContext {
    /// Genus `g ≥ 0`.
    pub genus: i64,
    /// Whether the curve is hyperelliptic.  Only meaningful for `g ≥ 2`
    /// (constructor-enforced); it changes the geometry of canonical images
    /// (a double line for `g = 2`, a double conic for hyperelliptic
    /// `g = 3`, ...) and which classification table applies.
    pub hyperelliptic: bool,
    /// Degree of the canonical class, always `2g − 2`.
    pub canonical_degree: i64,
}

impl CurveContext {
    /// Build a curve context.  Rejects negative genus and the hyperelliptic
    /// flag on `g < 2` (where the notion is vacuous or automatic).
    pub fn new(genus: i64, hyperelliptic: bool) -> Result<Self> {
        if genus < 0 {
            return Err(Error::GenusOutOfRange {
                got: genus,
                reason: "genus must be non-negative".into(),
            });
        }
        if hyperelliptic && genus < 2 {
            return Err(Error::GenusOutOfRange {
                got: genus,
                reason: "the hyperelliptic flag is only meaningful for genus >= 2".into(),
            });
        }
        Ok(CurveContext {
            genus,
            hyperelliptic,
            canonical_degree: 2 * genus - 2,
        })
    }

    /// Degree of the canonical class `K`, i.e. `2g − 2`.
    pub fn canonical_degree(&self) -> i64 {
        self.canonical_degree
    }
}

/// The symbolic kind of a divisor class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum DivisorKind {
    /// A group of points in general position (degree ≥ 1), the zero class
    /// (degree 0, `nontrivial = false`), a generic non-trivial degree-zero
    /// class (`nontrivial = true`), or minus a group of general points
    /// (degree ≤ −1).
    GenericEffective {
        /// For degree 0 only: distinguishes a generic element of `Pic⁰`
        /// (`h⁰ = 0`) from the trivial class (`h⁰ = 1`).
        nontrivial: bool,
    },
    /// The canonical class `K` (degree `2g − 2`, `h⁰ = g`).
    Canonical,
    /// `K − base + δ`, where `δ ≥ 0` adds `δ` general points and `δ < 0`
    /// subtracts `|δ|` general points.  This expresses the invariant
    /// `𝔢 ∼ K − 𝔟` of the decomposable surfaces `S_𝔟` and all its shifts;
    /// nesting two shifts expresses differences like `𝔟 − P₁ − P₂ =
    /// K − (K − 𝔟 + P₁ + P₂)`.
    CanonicalShift {
        /// The subtracted class `base`.
        base: Box<DivisorClass>,
        /// Signed number of additional general points.
        delta_degree: i64,
    },
    /// A special divisor class declared by its `h⁰` (for inputs whose
    /// speciality is part of the data, e.g. the `g¹₂` of a hyperelliptic
    /// curve as `h⁰ = 2` in degree 2).  Rejected at evaluation time if the
    /// implied `h¹` is negative.
    ExplicitSpecial {
        /// Declared number of independent global sections.
        h0: i64,
    },
}

/// A divisor class on a [`CurveContext`], with optional geometric
/// annotations used by the classification layer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisorClass {
    /// Degree of the class.
    pub degree: i64,
    /// Symbolic kind (drives the cohomology computation).
    #[serde(flatten)]
    pub kind: DivisorKind,
    /// Whether the class is known to be base-point-free.
    pub base_point_free: TriState,
    /// Whether the associated map is known to be birational onto its image.
    pub birationally_very_ample: TriState,
}

impl DivisorClass {
    /// A group of `degree` general points (`degree ≥ 1`), the trivial class
    /// (`degree = 0`) or minus a group of general points (`degree < 0`).
    pub fn generic_effective(degree: i64) -> Self {
        DivisorClass {
            degree,
            kind: DivisorKind::GenericEffective { nontrivial: false },
            base_point_free: TriState::Unknown,
            birationally_very_ample: TriState::Unknown,
        }
    }

    /// A generic non-trivial degree-zero class (`h⁰ = 0`).
    pub fn nontrivial_degree_zero() -> Self {
        DivisorClass {
            degree: 0,
            kind: DivisorKind::GenericEffective { nontrivial: true },
            base_point_free: TriState::No,
            birationally_very_ample: TriState::No,
        }
    }

    /// The canonical class of `curve`.
    pub fn canonical(curve: &CurveContext) -> Self {
        DivisorClass {
            degree: curve.canonical_degree,
            kind: DivisorKind::Canonical,
            base_point_free: if curve.genus >= 1 {
                TriState::Yes
            } else {
                TriState::No
            },
            birationally_very_ample: if curve.genus >= 2 && !curve.hyperelliptic {
                TriState::Yes
            } else {
                TriState::No
            },
        }
    }

    /// `K − base + delta_degree` general points on `curve`.
    pub fn canonical_shift(curve: &CurveContext, base: DivisorClass, delta_degree: i64) -> Self {
        DivisorClass {
            degree: curve.canonical_degree - base.degree + delta_degree,
            kind: DivisorKind::CanonicalShift {
                base: Box::new(base),
                delta_degree,
            },
            base_point_free: TriState::Unknown,
            birationally_very_ample: TriState::Unknown,
        }
    }

    /// A special class of the given degree with a declared `h⁰`.
    pub fn explicit_special(degree: i64, h0: i64) -> Self {
        DivisorClass {
            degree,
            kind: DivisorKind::ExplicitSpecial { h0 },
            base_point_free: TriState::Unknown,
            birationally_very_ample: TriState::Unknown,
        }
    }

    /// Mark the class base-point-free (builder style).
    pub fn with_base_point_free(mut self, v: TriState) -> Self {
        self.base_point_free = v;
        self
    }

    /// Mark the class birationally very ample (builder style).
    pub fn with_birationally_very_ample(mut self, v: TriState) -> Self {
        self.birationally_very_ample = v;
        self
    }

    /// `true` if this is the canonical class kind.
    pub fn is_canonical(&self) -> bool {
        matches!(self.kind, DivisorKind::Canonical)
    }
}

/// Internal normal form `n·K + E_m − F_p` with `E_m`, `F_p` groups of
/// general points, mutually independent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct NormalForm {
    /// Canonical multiple.
    pub n: i64,
    /// Number of added general points.
    pub m: i64,
    /// Number of subtracted general points.
    pub p: i64,
}

impl NormalForm {
    pub(crate) fn degree(&self, curve: &CurveContext) -> i64 {
        self.n * curve.canonical_degree + self.m - self.p
    }

    /// The Serre-dual form: `K − (nK + E_m − F_p) = (1−n)K + F_p − E_m`.
    #[cfg(test)]
    pub(crate) fn dual(&self) -> NormalForm {
        NormalForm {
            n: 1 - self.n,
            m: self.p,
            p: self.m,
        }
    }
}

/// Reduce a divisor class to normal form.  `ExplicitSpecial` has no normal
/// form (its cohomology is declared, not derived) and is handled separately
/// by [`h0_h1`].
pub(crate) fn normal_form(curve: &CurveContext, div: &DivisorClass) -> Result<NormalForm> {
    let nf = match &div.kind {
        DivisorKind::GenericEffective { nontrivial } => {
            if div.degree > 0 {
                NormalForm {
                    n: 0,
                    m: div.degree,
                    p: 0,
                }
            } else if div.degree == 0 {
                if *nontrivial {
                    // A generic degree-zero class: one general point minus
                    // another, independent, general point.
                    NormalForm { n: 0, m: 1, p: 1 }
                } else {
                    NormalForm { n: 0, m: 0, p: 0 }
                }
            } else {
                NormalForm {
                    n: 0,
                    m: 0,
                    p: -div.degree,
                }
            }
        }
        DivisorKind::Canonical => {
            if div.degree != curve.canonical_degree {
                return Err(Error::InconsistentDivisor(format!(
                    "canonical class must have degree 2g - 2 = {} (got {})",
                    curve.canonical_degree, div.degree
                )));
            }
            NormalForm { n: 1, m: 0, p: 0 }
        }
        DivisorKind::CanonicalShift { base, delta_degree } => {
            let delta = *delta_degree;
            let b = normal_form(curve, base)?;
            // K − (bn·K + E_bm − F_bp) + δ  =  (1−bn)·K + F_bp − E_bm + δ.
            // Added and subtracted general points stay independent; a
            // positive δ joins the added group, a negative δ the subtracted
            // group.
            NormalForm {
                n: 1 - b.n,
                m: b.p + delta.max(0),
                p: b.m + (-delta).max(0),
            }
        }
        DivisorKind::ExplicitSpecial { .. } => {
            return Err(Error::Internal(
                "ExplicitSpecial classes have no normal form".into(),
            ));
        }
    };
    let nf_degree = nf.degree(curve);
    if nf_degree != div.degree {
        return Err(Error::InconsistentDivisor(format!(
            "stored degree {} does not match the degree {} implied by the class structure",
            div.degree, nf_degree
        )));
    }
    Ok(nf)
}

/// `h⁰(jK)` for `j ≥ 0`: the pluricanonical dimensions.
fn pluricanonical_h0(genus: i64, j: i64) -> i64 {
    debug_assert!(j >= 0);
    match genus {
        0 => {
            if j == 0 {
                1
            } else {
                0
            }
        }
        1 => 1,
        g => match j {
            0 => 1,
            1 => g,
            _ => (2 * j - 1) * (g - 1),
        },
    }
}

/// `h⁰(n·K + E_m)` for `m ≥ 0` general points on a curve of genus `g ≥ 1`.
fn h0_nk_plus_points(curve: &CurveContext, n: i64, m: i64) -> i64 {
    let g = curve.genus;
    debug_assert!(m >= 0 && g >= 1);
    if g == 1 {
        // K is trivial: h⁰(E_m) = max(1, m).
        return m.max(1);
    }
    if n == 0 {
        // A generic effective group of points: h⁰ = max(1, m − g + 1).
        return (m - g + 1).max(1);
    }
    if n == 1 {
        // |K + E_m|: g for m = 0, non-special of degree 2g−2+m otherwise.
        return if m == 0 { g } else { g - 1 + m };
    }
    if n >= 2 {
        // Degree n(2g−2)+m > 2g−2: non-special.
        return n * (2 * g - 2) + m - g + 1;
    }
    // n ≤ −1: h⁰(E_m − |n|·K).  Riemann–Roch plus duality:
    //   h⁰ = deg − g + 1 + h⁰((1−n)K − E_m),
    // and the m general points impose independent conditions on the
    // pluricanonical system |(1−n)K|.
    let deg = n * (2 * g - 2) + m;
    let dual = (pluricanonical_h0(g, 1 - n) - m).max(0);
    (deg - g + 1 + dual).max(0)
}

/// `h⁰` of a normal form on `curve` (genus ≥ 1): the `p` subtracted general
/// points impose independent conditions.
fn h0_of_form(curve: &CurveContext, nf: &NormalForm) -> i64 {
    (h0_nk_plus_points(curve, nf.n, nf.m) - nf.p).max(0)
}

/// Compute `(h⁰, h¹)` of a divisor class on a curve.
///
/// For genus 0 every class is determined by its degree:
/// `h⁰ = max(0, deg + 1)`.  For `ExplicitSpecial` the declared `h⁰` is
/// used and validated.  Otherwise the class is reduced to normal form and
/// evaluated under generic-position semantics.  In every case
/// `h¹ = h⁰ − (deg − g + 1)` by Riemann–Roch; a negative `h¹` is rejected
/// as inconsistent input (`ExplicitSpecial`) or an internal error.
///
/// # Examples
///
/// ```
/// use scrollcalc::curve_divisors::{h0_h1, CurveContext, DivisorClass};
///
/// let curve = CurveContext::new(3, false).unwrap();
/// let k = DivisorClass::canonical(&curve);
/// assert_eq!(h0_h1(&curve, &k).unwrap(), (3, 1));
///
/// let b6 = DivisorClass::generic_effective(6);
/// assert_eq!(h0_h1(&curve, &b6).unwrap(), (4, 0));
/// ```
pub fn h0_h1(curve: &CurveContext, div: &DivisorClass) -> Result<(i64, i64)> {
    let g = curve.genus;
    let chi = div.degree - g + 1;
    if let DivisorKind::ExplicitSpecial { h0 } = div.kind {
        if h0 < 0 {
            return Err(Error::InconsistentDivisor(format!(
                "declared h0 = {h0} is negative"
            )));
        }
        let h1 = h0 - chi;
        if h1 < 0 {
            return Err(Error::InconsistentDivisor(format!(
                "declared h0 = {} in degree {} on genus {} implies h1 = {} < 0",
                h0, div.degree, g, h1
            )));
        }
        return Ok((h0, h1));
    }
    if g == 0 {
        let h0 = (div.degree + 1).max(0);
        return Ok((h0, h0 - chi));
    }
    let nf = normal_form(curve, div)?;
    let h0 = h0_of_form(curve, &nf);
    let h1 = h0 - chi;
    if h1 < 0 {
        return Err(Error::Internal(format!(
            "normal form ({}, {}, {}) on genus {} produced negative h1 = {}",
            nf.n, nf.m, nf.p, g, h1
        )));
    }
    Ok((h0, h1))
}

/// `h⁰` of a *generic class* of degree `m` on `curve`: `0` for
/// `0 ≤ m ≤ g − 1` (a generic class of small degree is not effective),
/// `m − g + 1` for `m ≥ g`, `0` for negative `m`.  This is the correct
/// count for classes like `−𝔢 + 𝔠 = 𝔟 − K + 𝔠` with everything generic,
/// as opposed to a generic *effective* group of points.
pub fn h0_generic_class(curve: &CurveContext, m: i64) -> Result<i64> {
    if curve.genus == 0 {
        return Ok((m + 1).max(0));
    }
    // Represent as E_{m + 2g−2} − K, i.e. normal form (−1, m + 2g−2, 0),
    // which evaluates with generic-class (not generic-effective) semantics.
    let nf = NormalForm {
        n: -1,
        m: m + curve.canonical_degree,
        p: 0,
    };
    if nf.m < 0 {
        // Degree too negative to express; h⁰ is certainly 0.
        return Ok(0);
    }
    Ok(h0_of_form(curve, &nf))
}

/// The scroll relation: a linearly normal scroll of degree `d` and
/// speciality `i` over a genus-`g` curve spans `P^N` with
/// `N = d − 2g + 1 + i`.
pub fn scroll_numerics(g: i64, d: i64, i: i64) -> Result<i64> {
    if g < 0 {
        return Err(Error::GenusOutOfRange {
            got: g,
            reason: "genus must be non-negative".into(),
        });
    }
    if d < 1 {
        return Err(Error::DegreeOutOfRange(format!(
            "scroll degree must be positive (got {d})"
        )));
    }
    if i < 0 {
        return Err(Error::NegativeSpeciality {
            g,
            d,
            n: d - 2 * g + 1 + i,
            i,
        });
    }
    Ok(d - 2 * g + 1 + i)
}

/// Inverse scroll relation: the speciality `i = N − d + 2g − 1` of a
/// linearly normal degree-`d` scroll spanning `P^N`.  Errors when the data
/// forces `i < 0` or when `N < 3`.
pub fn speciality_from(g: i64, d: i64, n: i64) -> Result<i64> {
    if n < 3 {
        return Err(Error::AmbientTooSmall(n));
    }
    let i = n - d + 2 * g - 1;
    if i < 0 {
        return Err(Error::NegativeSpeciality { g, d, n, i });
    }
    Ok(i)
}

/// The maximal degree of a special linearly normal scroll over a genus-`g`
/// curve in `P^N`: `d ≤ 2g + N − 2` (speciality `i ≥ 1` forces it).
pub fn speciality_degree_bound(g: i64, n: i64) -> Result<i64> {
    if g < 1 {
        return Err(Error::GenusOutOfRange {
            got: g,
            reason: "special scrolls require genus >= 1".into(),
        });
    }
    if n < 3 {
        return Err(Error::AmbientTooSmall(n));
    }
    Ok(2 * g + n - 2)
}
