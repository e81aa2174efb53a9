//! Genus and degree arithmetic for scroll directrix curves in the
//! Grassmannian `G(1,3)`.
//!
//! `G(1,3)`, the lines of `P³`, is the Plücker quadric in `P⁵`.  A scroll
//! `R ⊂ P³` of degree `d` over a curve of genus `g` corresponds to a curve
//! `Γ ⊂ G(1,3)` of the same degree and (geometric) genus, parameterizing
//! the generators.  For the scrolls of interest `Γ` lies in a small linear
//! section of `G(1,3)`, which leaves exactly four kinds of locus:
//!
//! * a **smooth quadric surface** `G ∩ P³`: `Γ` has a bidegree `(a₁, a₂)`
//!   with `a₁ + a₂ = d` and `n` double points, and
//!   `g = (a₁−1)(a₂−1) − n`;
//! * a **quadric cone** `G ∩ P³` (tangent hyperplane section): `Γ` has
//!   type `(a, d−a)` with `2 ≤ a ≤ d/2`, `n` double points,
//!   `g = (a−1)(d−a−1) − n`, and passes through the vertex with
//!   multiplicity `d − 2a` when `2a < d − 1` (and misses it otherwise);
//! * an **α-plane** (the lines through a fixed point): `Γ` is a plane
//!   curve of degree `d` with `n = (d−1)(d−2)/2 − g` double points, and
//!   the scroll is a cone;
//! * a **β-plane** (the lines inside a fixed plane): every generator lies
//!   in one plane, so the image is that plane — this never produces a
//!   scroll and is enumerated by no query.
//!
//! [`enumerate_candidates`] lists every locus compatible with a given
//! `(g, d)`.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Genus of a curve of bidegree `(a₁, a₂)` with `n` double points on a
/// smooth quadric surface: `(a₁ − 1)(a₂ − 1) − n`.
pub fn quadric_genus(a1: i64, a2: i64, n: i64) -> Result<i64> {
    if a1 < 1 || a2 < 1 {
        return Err(Error::DegreeOutOfRange(format!(
            "bidegree components must be >= 1 (got ({a1}, {a2}))"
        )));
    }
    if n < 0 {
        return Err(Error::InvalidPoints(format!(
            "double point count must be non-negative (got {n})"
        )));
    }
    Ok((a1 - 1) * (a2 - 1) - n)
}

/// Genus of a degree-`d` curve of type `(a, d−a)` with `n` double points
/// on a quadric cone: `(a − 1)(d − a − 1) − n`.  Requires `2 ≤ a ≤ d/2`.
pub fn cone_genus(d: i64, a: i64, n: i64) -> Result<i64> {
    if a < 2 {
        return Err(Error::DegreeOutOfRange(format!(
            "cone curve type requires a >= 2 (got a = {a})"
        )));
    }
    if 2 * a > d {
        return Err(Error::DegreeOutOfRange(format!(
            "cone curve type requires a <= d/2 (got a = {a}, d = {d})"
        )));
    }
    if n < 0 {
        return Err(Error::InvalidPoints(format!(
            "double point count must be non-negative (got {n})"
        )));
    }
    Ok((a - 1) * (d - a - 1) - n)
}

/// Multiplicity with which a degree-`d` type-`(a, d−a)` curve on a quadric
/// cone passes through the vertex: `d − 2a` when `2a < d − 1`, and `0`
/// otherwise.  Requires `a ≥ 2`.
pub fn vertex_multiplicity(d: i64, a: i64) -> Result<i64> {
    if a < 2 {
        return Err(Error::DegreeOutOfRange(format!(
            "cone curve type requires a >= 2 (got a = {a})"
        )));
    }
    if 2 * a < d - 1 {
        Ok(d - 2 * a)
    } else {
        Ok(0)
    }
}

/// A locus in `G(1,3)` that can contain the Grassmann curve of a scroll.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "locus")]
pub enum GrassLocus {
    /// Bidegree-`(a₁, a₂)` curve with `double_points` double points on a
    /// smooth quadric surface `G ∩ P³`.
    Quadric {
        /// Smaller bidegree component.
        a1: i64,
        /// Larger bidegree component.
        a2: i64,
        /// Number of double points.
        double_points: i64,
    },
    /// Type-`(a, d−a)` curve with `double_points` double points on a
    /// quadric cone `G ∩ P³`, through the vertex with the stated
    /// multiplicity.
    Cone {
        /// Smaller type component (`2 ≤ a ≤ d/2`).
        a: i64,
        /// Number of double points.
        double_points: i64,
        /// Multiplicity of the curve at the cone's vertex.
        vertex_multiplicity: i64,
    },
    /// Degree-`d` plane curve with `double_points` double points in an
    /// α-plane (lines through a fixed point); the scroll is a cone.
    AlphaPlane {
        /// Number of double points.
        double_points: i64,
    },
    /// A curve in a β-plane (lines inside a fixed plane).  The generators
    /// then sweep out that plane, never a scroll; no enumeration emits
    /// this variant.
    BetaPlane,
}

/// One compatible Grassmann-curve locus for a `(g, d)` pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrassCandidate {
    /// Scroll (and curve) degree.
    pub degree: i64,
    /// Scroll (and curve) genus.
    pub genus: i64,
    /// Where the Grassmann curve lies.
    pub locus: GrassLocus,
}

impl GrassCandidate {
    /// A human-readable description of the locus.
    pub fn interpretation(&self) -> String {
        match self.locus {
            GrassLocus::Quadric {
                a1,
                a2,
                double_points,
            } => format!(
                "type ({a1}, {a2}) curve with {double_points} double points on a smooth \
                 quadric surface G(1,3) ∩ P³; the two rulings cut the two unisecant \
                 pencils of the scroll"
            ),
            GrassLocus::Cone {
                a,
                double_points,
                vertex_multiplicity,
            } => {
                let d = self.degree;
                let b = d - a;
                let vertex = if vertex_multiplicity > 0 {
                    format!(
                        "passing through the vertex with multiplicity {vertex_multiplicity} \
                         (the scroll has a generator of that multiplicity)"
                    )
                } else {
                    "missing the vertex".to_string()
                };
                format!(
                    "type ({a}, {b}) curve with {double_points} double points on a quadric \
                     cone G(1,3) ∩ P³, {vertex}"
                )
            }
            GrassLocus::AlphaPlane { double_points } => format!(
                "plane curve of degree {} with {double_points} double points in an α-plane \
                 (the lines through a fixed point): the scroll is a cone with that point \
                 as vertex",
                self.degree
            ),
            GrassLocus::BetaPlane => "curve in a β-plane (the lines inside a fixed plane): \
                 the generators sweep out that plane, not a scroll"
                .to_string(),
        }
    }
}

/// Enumerate every locus in `G(1,3)` compatible with a Grassmann curve of
/// genus `g ≥ 1` and degree `d ≥ 3`, in a fixed deterministic order
/// (quadric types by ascending `a₁`, then cone types by ascending `a`,
/// then the α-plane when admissible).
///
/// The α-plane participates exactly when a degree-`d` plane curve of
/// genus `g` exists (`g ≤ (d−1)(d−2)/2`) and the resulting cone is a
/// linearly normal special scroll, which singles out `d ≤ g + 2` with
/// either `d = g + 2` or `d ≥ 4`.  β-planes never participate.
pub fn enumerate_candidates(g: i64, d: i64) -> Result<Vec<GrassCandidate>> {
    if g < 1 {
        return Err(Error::GenusOutOfRange {
            got: g,
            reason: "Grassmann-curve enumeration requires genus >= 1".into(),
        });
    }
    if d < 3 {
        return Err(Error::DegreeOutOfRange(format!(
            "Grassmann-curve enumeration requires degree >= 3 (got {d})"
        )));
    }
    let mut out = Vec::new();
    for a1 in 1..=d / 2 {
        let a2 = d - a1;
        let n = (a1 - 1) * (a2 - 1) - g;
        if n >= 0 {
            out.push(GrassCandidate {
                degree: d,
                genus: g,
                locus: GrassLocus::Quadric {
                    a1,
                    a2,
                    double_points: n,
                },
            });
        }
    }
    for a in 2..=d / 2 {
        let n = (a - 1) * (d - a - 1) - g;
        if n >= 0 {
            out.push(GrassCandidate {
                degree: d,
                genus: g,
                locus: GrassLocus::Cone {
                    a,
                    double_points: n,
                    vertex_multiplicity: vertex_multiplicity(d, a)?,
                },
            });
        }
    }
    let plane_max = (d - 1) * (d - 2) / 2;
    if g <= plane_max && d <= g + 2 && (d == g + 2 || d >= 4) {
        out.push(GrassCandidate {
            degree: d,
            genus: g,
            locus: GrassLocus::AlphaPlane {
                double_points: plane_max - g,
            },
        });
    }
    Ok(out)
}
