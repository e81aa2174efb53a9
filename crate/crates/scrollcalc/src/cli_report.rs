//! Command drivers and report assembly for the command-line front end.
//!
//! Each driver returns a [`CommandOutput`]: a structured [`Report`]
//! (schema-versioned, suitable for golden-file testing) plus a
//! human-readable text rendering.  All output is deterministic — the
//! underlying library is pure integer arithmetic with no randomness — so
//! identical invocations produce byte-identical output.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::classifier::{
    classify_generic, classify_p3, genus2_projection, genus3_d7_projection, ClassificationTable,
    GenericClassification, Genus2Center, MinCurveEntry, ProjectionOutcome, TableRow,
    TrichotomyCase,
};
use crate::curve_divisors::{h0_h1, CurveContext, DivisorClass};
use crate::elem_transform::{
    explicit_rb_points, generic_transform_report, reduce_to_rb, transform, PointSpec,
};
use crate::grassmannian::{enumerate_candidates, vertex_multiplicity, GrassCandidate, GrassLocus};
use crate::ruled_surface::{
    make_s_b, track_family_member, NumClass, RuledSurface, ScrollModel, TrackedCurve, TrackedLabel,
};
use crate::{Error, Result, TriState};

/// Version of the structured-output schema.
pub const SCHEMA_VERSION: &str = "1";

/// Output format selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    /// Human-readable text (the default).
    Text,
    /// Canonical structured JSON document.
    Structured,
}

/// The structured document emitted once per invocation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    /// Schema version of this document.
    pub schema_version: String,
    /// The query being answered, echoed back in canonical form.
    pub query_echo: String,
    /// One entry per result; every scroll-like result carries an inline
    /// `rr_check` field with the status of the relation
    /// `d − 2g + 1 + i = N`.
    pub results: Vec<Value>,
    /// Degenerate cases, rejections, and flagged-row notes.
    pub warnings: Vec<String>,
    /// How each result was computed, one entry per result.
    pub provenance: Vec<String>,
}

/// A rendered command: structured report plus text rendering.
#[derive(Debug, Clone, PartialEq)]
pub struct CommandOutput {
    /// The structured document.
    pub report: Report,
    /// The human-readable rendering.
    pub text: String,
    /// False when a verification suite found failures (the process should
    /// then exit nonzero).
    pub success: bool,
}

impl CommandOutput {
    /// Render in the requested format (both end with a newline).
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => {
                let mut t = self.text.clone();
                if !t.ends_with('\n') {
                    t.push('\n');
                }
                t
            }
            Format::Structured => {
                let mut s = serde_json::to_string_pretty(&self.report)
                    .expect("report serialization cannot fail");
                s.push('\n');
                s
            }
        }
    }
}

fn rr_check(g: i64, d: i64, i: i64, n: i64) -> Value {
    json!({
        "identity": "d - 2g + 1 + i = N",
        "values": { "d": d, "g": g, "i": i, "N": n },
        "holds": d - 2 * g + 1 + i == n,
    })
}

fn superscript(n: i64) -> String {
    let digits = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string()
        .chars()
        .map(|c| match c {
            '-' => '⁻',
            d => digits[d.to_digit(10).unwrap() as usize],
        })
        .collect()
}

fn tristate_text(t: TriState) -> &'static str {
    match t {
        TriState::Yes => "yes",
        TriState::No => "no",
        TriState::Unknown => "unknown",
    }
}

// ---------------------------------------------------------------------------
// classify
// ---------------------------------------------------------------------------

/// How the classification query fixes the ambient dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassifyQuery {
    /// Directly by `N`.
    ByAmbient {
        /// Ambient dimension.
        n: i64,
    },
    /// By degree and speciality; `N` is resolved via `d − 2g + 1 + i = N`.
    ByDegreeSpeciality {
        /// Scroll degree.
        d: i64,
        /// Speciality (`≥ 1`).
        i: i64,
    },
}

fn case_text(case: TrichotomyCase) -> &'static str {
    match case {
        TrichotomyCase::DecomposableLarge => "1 — decomposable (N ≥ 3g − 3)",
        TrichotomyCase::IndecomposableMiddle => "2 — indecomposable (g − 1 ≤ N < 3g − 3)",
        TrichotomyCase::IndecomposableSmall => "3 — indecomposable (3 ≤ N < g − 1)",
    }
}

fn yesno(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Classify the speciality-1 scroll over a generic genus-`g` curve.
pub fn cmd_classify(g: i64, query: ClassifyQuery) -> Result<CommandOutput> {
    let (n, echo) = match query {
        ClassifyQuery::ByAmbient { n } => (n, format!("classify --g {g} --N {n}")),
        ClassifyQuery::ByDegreeSpeciality { d, i } => {
            if i < 1 {
                return Err(Error::NegativeSpeciality {
                    g,
                    d,
                    n: d - 2 * g + 1 + i,
                    i,
                });
            }
            (
                d - 2 * g + 1 + i,
                format!("classify --g {g} --d {d} --i {i}"),
            )
        }
    };
    let c: GenericClassification = classify_generic(g, n)?;

    let mut result = serde_json::to_value(&c).expect("serializable");
    result["rr_check"] = rr_check(g, c.degree, c.speciality, c.ambient_dim);

    let mut text = String::new();
    text.push_str(&format!(
        "classify: genus {g}, N = {n}  →  degree {}, speciality {}\n",
        c.degree, c.speciality
    ));
    text.push_str(&format!("  case: {}\n", case_text(c.case)));
    text.push_str(&format!("  e = {}\n", c.e_invariant));
    if let Some(bundle) = &c.bundle {
        text.push_str(&format!("  bundle: {bundle}\n"));
    }
    text.push_str(&format!("  hyperplane system: {}\n", c.hyperplane_system));
    text.push_str(&format!(
        "  special unisecant: degree {}, self-intersection {}\n",
        c.special_curve_degree, c.special_curve_self_int
    ));
    text.push_str(&format!(
        "  minimal unisecant self-intersection: {}\n",
        c.min_self_int
    ));
    text.push_str(&format!(
        "  linearly normal: {}   minimal degree: {}\n",
        yesno(c.linearly_normal),
        yesno(c.min_degree)
    ));
    for w in &c.warnings {
        text.push_str(&format!("  warning: {w}\n"));
    }

    Ok(CommandOutput {
        report: Report {
            schema_version: SCHEMA_VERSION.to_string(),
            query_echo: echo,
            results: vec![result],
            warnings: c.warnings.clone(),
            provenance: vec!["generic trichotomy, exact integer arithmetic".to_string()],
        },
        text,
        success: true,
    })
}

// ---------------------------------------------------------------------------
// table
// ---------------------------------------------------------------------------

fn min_curve_text(m: &MinCurveEntry) -> String {
    let mut s = String::new();
    if let Some(src) = &m.source {
        s.push_str(&format!("φ({src}) = "));
    }
    s.push_str(&m.notation());
    if m.family_dim > 0 {
        s.push_str(&format!(" (∞{})", superscript(m.family_dim)));
    }
    s
}

fn row_kind(r: &TableRow) -> String {
    if r.is_cone {
        "cone".to_string()
    } else if r.decomposable {
        "dec".to_string()
    } else {
        "indec".to_string()
    }
}

fn grass_text(gc: &GrassCandidate) -> String {
    match gc.locus {
        GrassLocus::Quadric {
            a1,
            a2,
            double_points,
        } => format!("quadric ({a1},{a2}), n = {double_points}"),
        GrassLocus::Cone {
            a,
            double_points,
            vertex_multiplicity,
        } => format!("cone a = {a}, n = {double_points}, vertex ×{vertex_multiplicity}"),
        GrassLocus::AlphaPlane { double_points } => format!("α-plane, n = {double_points}"),
        GrassLocus::BetaPlane => "β-plane".to_string(),
    }
}

fn render_row(r: &TableRow) -> String {
    let flag = if r.flagged_inconsistent { " ⚠" } else { "" };
    let structure = r.bundle.clone().unwrap_or_else(|| {
        if r.e_class.contains('𝔢') {
            r.e_class.clone()
        } else {
            format!("𝔢: {}", r.e_class)
        }
    });
    let mins = r
        .min_curves
        .iter()
        .map(min_curve_text)
        .collect::<Vec<_>>()
        .join(", ");
    let grass = r
        .grass
        .as_ref()
        .map(|gc| format!("   [G(1,3): {}]", grass_text(gc)))
        .unwrap_or_default();
    format!(
        "  {:<6} d {}  i {}  e {:>2}  {:<6} {:<58} H = {:<20} min: {mins}{grass}{flag}\n",
        r.id,
        r.degree,
        r.speciality,
        r.e_invariant,
        row_kind(r),
        structure,
        r.hyperplane_system
    )
}

/// Emit the `P³` classification table for the given genus, optionally
/// restricted to rows over hyperelliptic curves.
pub fn cmd_table(genus: i64, hyperelliptic_only: bool) -> Result<CommandOutput> {
    let table: ClassificationTable = classify_p3(genus)?;
    let rows: Vec<&TableRow> = table
        .rows
        .iter()
        .filter(|r| !hyperelliptic_only || r.hyperelliptic)
        .collect();

    let mut results = Vec::new();
    let mut provenance = Vec::new();
    let mut warnings = Vec::new();
    for r in &rows {
        let mut v = serde_json::to_value(r).expect("serializable");
        v["rr_check"] = rr_check(r.genus, r.degree, r.speciality, r.ambient_dim);
        results.push(v);
        provenance.push(format!("classification table, genus {genus}, row {}", r.id));
        if let Some(note) = &r.flag_note {
            warnings.push(format!("row {}: {note}", r.id));
        }
    }

    let mut text = format!("linearly normal special scrolls in P³ — genus {genus}\n");
    let hyper_rows: Vec<&&TableRow> = rows.iter().filter(|r| r.hyperelliptic).collect();
    let plain_rows: Vec<&&TableRow> = rows.iter().filter(|r| !r.hyperelliptic).collect();
    if !plain_rows.is_empty() {
        text.push_str(&format!(
            "\nnon-hyperelliptic curves ({} rows)\n",
            plain_rows.len()
        ));
        for r in &plain_rows {
            text.push_str(&render_row(r));
        }
    }
    if !hyper_rows.is_empty() {
        text.push_str(&format!(
            "\nhyperelliptic curves ({} rows)\n",
            hyper_rows.len()
        ));
        for r in &hyper_rows {
            text.push_str(&render_row(r));
        }
    }
    if !warnings.is_empty() {
        text.push('\n');
        for w in &warnings {
            text.push_str(&format!("warning: {w}\n"));
        }
    }

    let echo = if hyperelliptic_only {
        format!("table --g {genus} --hyperelliptic")
    } else {
        format!("table --g {genus}")
    };
    Ok(CommandOutput {
        report: Report {
            schema_version: SCHEMA_VERSION.to_string(),
            query_echo: echo,
            results,
            warnings,
            provenance,
        },
        text,
        success: true,
    })
}

// ---------------------------------------------------------------------------
// project
// ---------------------------------------------------------------------------

/// Which divisor `𝔟` the projection setup uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BKind {
    /// A generic effective divisor of the degree the setup requires.
    Generic,
    /// The canonical class (genus 2 only; the construction degenerates).
    Canonical,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
struct PointToken {
    on_x0: bool,
    on_x1: bool,
    yc: Option<i64>,
    fiber: Option<String>,
    generic: bool,
}

fn parse_point_token(token: &str) -> Result<PointToken> {
    let mut t = PointToken::default();
    for part in token.split('+') {
        let part = part.trim();
        if part == "X0" {
            t.on_x0 = true;
        } else if part == "X1" {
            t.on_x1 = true;
        } else if part == "generic" {
            t.generic = true;
        } else if let Some(label) = part.strip_prefix("fiber:") {
            if label.is_empty() {
                return Err(Error::InvalidPoints(format!(
                    "empty fiber label in token '{token}'"
                )));
            }
            t.fiber = Some(label.to_string());
        } else if let Some(c) = part.strip_prefix("Yc:") {
            let c: i64 = c.parse().map_err(|_| {
                Error::InvalidPoints(format!("bad family index in token '{token}'"))
            })?;
            t.yc = Some(c);
        } else {
            return Err(Error::InvalidPoints(format!(
                "unknown point token '{part}' (expected X0, X1, Yc:<c>, generic, or fiber:<label>)"
            )));
        }
    }
    if t.generic && (t.on_x0 || t.on_x1 || t.yc.is_some() || t.fiber.is_some()) {
        return Err(Error::InvalidPoints(format!(
            "'generic' cannot be combined with other constraints in '{token}'"
        )));
    }
    if t.on_x0 && t.on_x1 {
        return Err(Error::InvalidPoints(
            "a center cannot lie on both X₀ and X₁ (they are disjoint)".into(),
        ));
    }
    Ok(t)
}

fn parse_points(points: &str) -> Result<Vec<PointToken>> {
    if points.trim().is_empty() {
        return Err(Error::InvalidPoints("empty point list".into()));
    }
    points.split(',').map(parse_point_token).collect()
}

fn genus2_center_from(tokens: &[PointToken]) -> Result<Genus2Center> {
    if tokens.len() != 1 {
        return Err(Error::InvalidPoints(format!(
            "the genus-2 projection takes exactly one center (got {})",
            tokens.len()
        )));
    }
    let t = &tokens[0];
    if t.yc.is_some() {
        return Err(Error::InvalidPoints(
            "centers on family curves are not part of the genus-2 analysis".into(),
        ));
    }
    if let Some(label) = &t.fiber {
        if label != "A1" && label != "A2" {
            return Err(Error::InvalidPoints(format!(
                "unknown fiber label '{label}': the genus-2 surface has special fibers A1 and A2"
            )));
        }
    }
    Ok(if t.generic {
        Genus2Center::Generic
    } else if t.on_x0 {
        if t.fiber.is_some() {
            return Err(Error::InvalidPoints(
                "a center on X̄₀ over a special fiber is not a separate case: X̄₀ \
                 is the double line; use X0 or fiber:<label>"
                    .into(),
            ));
        }
        Genus2Center::OnX0Bar
    } else if t.on_x1 {
        if t.fiber.is_some() {
            Genus2Center::SingularX1Bar
        } else {
            Genus2Center::OnX1Generic
        }
    } else if t.fiber.is_some() {
        Genus2Center::OnSpecialFiber
    } else {
        Genus2Center::Generic
    })
}

fn outcome_to_output(
    echo: String,
    header: String,
    outcome: ProjectionOutcome,
    provenance: String,
) -> CommandOutput {
    let mut warnings = Vec::new();
    let mut text = header;
    let result = match &outcome {
        ProjectionOutcome::Model { model } => {
            text.push_str(&format!(
                "outcome: model — row {}\n  degree {}, ambient P{}, speciality {}\n  e = {}, \
                 decomposable: {}\n",
                model.table_row.as_deref().unwrap_or("—"),
                model.degree,
                superscript(model.ambient_dim),
                model.speciality,
                model.e_invariant,
                tristate_text(model.decomposable),
            ));
            let mut v = serde_json::to_value(&outcome).expect("serializable");
            v["rr_check"] = rr_check(
                model.surface.base.genus,
                model.degree,
                model.speciality,
                model.ambient_dim,
            );
            v
        }
        ProjectionOutcome::Degenerate { reason } => {
            text.push_str(&format!("outcome: degenerate — {reason}\n"));
            warnings.push(format!("degenerate: {reason}"));
            serde_json::to_value(&outcome).expect("serializable")
        }
        ProjectionOutcome::Rejected { reason } => {
            text.push_str(&format!("outcome: rejected — {reason}\n"));
            warnings.push(format!("rejected: {reason}"));
            serde_json::to_value(&outcome).expect("serializable")
        }
    };
    CommandOutput {
        report: Report {
            schema_version: SCHEMA_VERSION.to_string(),
            query_echo: echo,
            results: vec![result],
            warnings,
            provenance: vec![provenance],
        },
        text,
        success: true,
    }
}

/// Project a scroll `R_𝔟` into `P³` from centers described by the point
/// grammar (comma-separated tokens `X0`, `X1`, `generic`,
/// `fiber:<label>`, compounds joined by `+`).  Supported setups: genus 2
/// with `deg 𝔟 = 4` (one center; `--b-kind canonical` selects the
/// degenerate `𝔟 ∼ K` construction) and genus 3 with `deg 𝔟 = 6` (three
/// centers).
pub fn cmd_project(
    g: i64,
    deg_b: Option<i64>,
    b_kind: BKind,
    hyperelliptic: bool,
    points: &str,
) -> Result<CommandOutput> {
    let tokens = parse_points(points)?;
    match g {
        2 => {
            let expected_deg = if b_kind == BKind::Canonical { 2 } else { 4 };
            if let Some(db) = deg_b {
                if db != expected_deg {
                    return Err(Error::DegreeOutOfRange(format!(
                        "the genus-2 projection uses deg 𝔟 = {expected_deg} (got {db})"
                    )));
                }
            }
            let center = genus2_center_from(&tokens)?;
            let outcome = genus2_projection(center, b_kind == BKind::Canonical)?;
            let echo = format!(
                "project --g 2 --deg-b {expected_deg}{} --points {points}",
                if b_kind == BKind::Canonical {
                    " --b-kind canonical"
                } else {
                    ""
                }
            );
            let header = format!("project: genus 2, deg 𝔟 = {expected_deg}, center [{points}]\n");
            Ok(outcome_to_output(
                echo,
                header,
                outcome,
                "elementary transformation of S_𝔟, genus 2".to_string(),
            ))
        }
        3 => {
            if b_kind == BKind::Canonical {
                return Err(Error::DegreeOutOfRange(
                    "the degree-7 analysis requires deg 𝔟 = 6; the canonical class has \
                     degree 4"
                        .into(),
                ));
            }
            if let Some(db) = deg_b {
                if db != 6 {
                    return Err(Error::DegreeOutOfRange(format!(
                        "the genus-3 projection uses deg 𝔟 = 6 (got {db})"
                    )));
                }
            }
            if tokens.len() != 3 {
                return Err(Error::InvalidPoints(format!(
                    "the genus-3 projection takes exactly three centers (got {})",
                    tokens.len()
                )));
            }
            let mut n0 = 0;
            let mut n1 = 0;
            for t in &tokens {
                if t.yc.is_some() || t.fiber.is_some() {
                    return Err(Error::InvalidPoints(
                        "the degree-7 analysis distinguishes centers only by incidence \
                         with X₀ and X₁ (use X0, X1, or generic)"
                            .into(),
                    ));
                }
                if t.on_x0 {
                    n0 += 1;
                } else if t.on_x1 {
                    n1 += 1;
                }
            }
            let outcome = genus3_d7_projection(hyperelliptic, n0, n1)?;
            let echo = format!(
                "project --g 3 --deg-b 6{} --points {points}",
                if hyperelliptic {
                    " --hyperelliptic"
                } else {
                    ""
                }
            );
            let header = format!(
                "project: genus 3{}, deg 𝔟 = 6, centers [{points}]\n",
                if hyperelliptic {
                    " (hyperelliptic)"
                } else {
                    ""
                }
            );
            Ok(outcome_to_output(
                echo,
                header,
                outcome,
                "elementary transformation of S_𝔟, genus 3".to_string(),
            ))
        }
        _ => Err(Error::UnsupportedTable(format!(
            "projection analyses cover genus 2 and 3 (got {g})"
        ))),
    }
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct SuiteOutcome {
    suite: String,
    cases: u64,
    failures: Vec<String>,
}

fn suite_rr_closure(g_max: i64) -> Result<SuiteOutcome> {
    let mut cases = 0u64;
    let mut failures = Vec::new();
    for g in 0..=g_max {
        for hyper in [false, true] {
            if hyper && g < 2 {
                continue;
            }
            let x = CurveContext::new(g, hyper)?;
            let mut divisors = vec![
                DivisorClass::canonical(&x),
                DivisorClass::nontrivial_degree_zero(),
            ];
            for m in 0..=12 {
                divisors.push(DivisorClass::generic_effective(m));
            }
            for base in 0..=6 {
                for delta in -3..=3 {
                    divisors.push(DivisorClass::canonical_shift(
                        &x,
                        DivisorClass::generic_effective(base),
                        delta,
                    ));
                }
            }
            for div in &divisors {
                let (h0, h1) = h0_h1(&x, div)?;
                cases += 1;
                if h0 - h1 != div.degree - g + 1 || h0 < 0 || h1 < 0 {
                    failures.push(format!(
                        "g = {g}, hyperelliptic = {hyper}, degree {}: h0 = {h0}, h1 = {h1}",
                        div.degree
                    ));
                }
            }
        }
    }
    Ok(SuiteOutcome {
        suite: "rr-closure".into(),
        cases,
        failures,
    })
}

/// All compositions of `k` into `buckets` non-negative parts.
fn compositions(k: i64, buckets: usize) -> Vec<Vec<i64>> {
    if buckets == 1 {
        return vec![vec![k]];
    }
    let mut out = Vec::new();
    for first in 0..=k {
        for mut rest in compositions(k - first, buckets - 1) {
            let mut v = Vec::with_capacity(buckets);
            v.push(first);
            v.append(&mut rest);
            out.push(v);
        }
    }
    out
}

fn suite_transform_oracle(g_max: i64, k_max: i64) -> Result<SuiteOutcome> {
    let mut cases = 0u64;
    let mut failures = Vec::new();
    for g in 2..=g_max.max(2) {
        let x = CurveContext::new(g, false)?;
        let deg_b = 3 * g - 3;
        let mut s = make_s_b(&x, DivisorClass::generic_effective(deg_b))?;
        for c in 1..=4 {
            s = track_family_member(&s, c)?;
        }
        let e = s.e_invariant;
        let labels = [
            Some(TrackedLabel::X0),
            Some(TrackedLabel::X1),
            Some(TrackedLabel::Yc(1)),
            Some(TrackedLabel::Yc(2)),
            Some(TrackedLabel::Yc(3)),
            Some(TrackedLabel::Yc(4)),
            None,
        ];
        let initial = |label: &TrackedLabel| -> i64 {
            match label {
                TrackedLabel::X0 => -e,
                TrackedLabel::X1 => e,
                TrackedLabel::Yc(c) => e + 2 * c,
                TrackedLabel::Custom(_) => unreachable!(),
            }
        };
        for k in 0..=k_max.max(0) {
            for assignment in compositions(k, labels.len()) {
                let mut points = Vec::with_capacity(k as usize);
                for (slot, &count) in assignment.iter().enumerate() {
                    for _ in 0..count {
                        points.push(match &labels[slot] {
                            Some(l) => PointSpec::on_curve(l.clone()),
                            None => PointSpec::generic(),
                        });
                    }
                }
                let t = transform(&s, &points)?;
                cases += 1;
                // Oracle: apply the centers one at a time; each center adds
                // +1 to the self-intersection of every unisecant missing it
                // and −1 to every unisecant through it.
                for (slot, label) in labels.iter().enumerate() {
                    let Some(label) = label else { continue };
                    let expected = initial(label) + k - 2 * assignment[slot];
                    let got = t
                        .tracked(label)
                        .ok_or_else(|| Error::Internal(format!("lost {label}")))?
                        .self_int;
                    if got != expected {
                        failures.push(format!(
                            "g = {g}, k = {k}, assignment {assignment:?}, {label}: \
                             engine {got}, oracle {expected}"
                        ));
                    }
                }
                if assignment[..labels.len() - 1].iter().all(|&t| t == 0) {
                    let report = generic_transform_report(g, k)?;
                    if t.e_invariant != -report.minimum() {
                        failures.push(format!(
                            "g = {g}, k = {k} all-generic: engine e′ = {}, report minimum \
                             self-intersection {}",
                            t.e_invariant,
                            report.minimum()
                        ));
                    }
                    if t.decomposable.is_yes() != report.decomposable_after {
                        failures.push(format!(
                            "g = {g}, k = {k} all-generic: engine decomposable {:?}, report \
                             {}",
                            t.decomposable, report.decomposable_after
                        ));
                    }
                }
            }
        }
    }
    Ok(SuiteOutcome {
        suite: "transform-oracle".into(),
        cases,
        failures,
    })
}

fn suite_generica_boundaries(g_max: i64) -> Result<SuiteOutcome> {
    let mut cases = 0u64;
    let mut failures = Vec::new();
    for g in 2..=g_max.max(2) {
        for n in 3..=60 {
            let c = classify_generic(g, n)?;
            cases += 1;
            let mut complain = |msg: String| failures.push(format!("g = {g}, N = {n}: {msg}"));
            if c.degree != n + 2 * g - 2 {
                complain(format!("degree {}", c.degree));
            }
            if c.speciality != 1 {
                complain(format!("speciality {}", c.speciality));
            }
            if (c.e_invariant - n).rem_euclid(2) != 0 {
                complain(format!("e = {} has wrong parity", c.e_invariant));
            }
            if c.min_self_int != -c.e_invariant {
                complain(format!(
                    "min self-intersection {} ≠ −e = {}",
                    c.min_self_int, -c.e_invariant
                ));
            }
            // d-form agreement: resolving N back from (d, i) reproduces the
            // same classification.
            let n_resolved = c.degree - 2 * g + 1 + c.speciality;
            if n_resolved != n {
                complain(format!("N resolved from (d, i) is {n_resolved}"));
            } else if classify_generic(g, n_resolved)? != c {
                complain("d-form and N-form disagree".to_string());
            }
            // Boundary values.
            if n == 3 * g - 3 && (!c.decomposable || c.e_invariant != g - 1) {
                complain(format!(
                    "boundary N = 3g − 3: decomposable = {}, e = {}",
                    c.decomposable, c.e_invariant
                ));
            }
            if n == g - 1 && c.e_invariant != -(g - 1) {
                complain(format!("boundary N = g − 1: e = {}", c.e_invariant));
            }
            if n < g - 1 && c.e_invariant != -(g - 1) && c.e_invariant != -g {
                complain(format!("small-N regime: e = {}", c.e_invariant));
            }
        }
    }
    Ok(SuiteOutcome {
        suite: "generica-boundaries".into(),
        cases,
        failures,
    })
}

fn suite_grassmann_enumeration() -> Result<SuiteOutcome> {
    let mut cases = 0u64;
    let mut failures = Vec::new();
    for g in 1..=6 {
        for d in 3..=10 {
            let got = enumerate_candidates(g, d)?;
            cases += 1;
            // Independent exhaustive reconstruction.
            let mut expected = Vec::new();
            for a1 in 1..=d / 2 {
                let a2 = d - a1;
                let n = (a1 - 1) * (a2 - 1) - g;
                if n >= 0 {
                    expected.push(GrassCandidate {
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
                    expected.push(GrassCandidate {
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
            let plane_genus = (d - 1) * (d - 2) / 2;
            if g <= plane_genus && d <= g + 2 && (d == g + 2 || d >= 4) {
                expected.push(GrassCandidate {
                    degree: d,
                    genus: g,
                    locus: GrassLocus::AlphaPlane {
                        double_points: plane_genus - g,
                    },
                });
            }
            if got != expected {
                failures.push(format!(
                    "g = {g}, d = {d}: enumerated {got:?}, expected {expected:?}"
                ));
            }
            if got.iter().any(|c| matches!(c.locus, GrassLocus::BetaPlane)) {
                failures.push(format!("g = {g}, d = {d}: β-plane emitted"));
            }
        }
    }
    Ok(SuiteOutcome {
        suite: "grassmann-enumeration".into(),
        cases,
        failures,
    })
}

/// An assembled degree-`d` scroll model in `P³` with `X₀` special
/// (plane divisor `K`) and a second unisecant of class `X₀ + t·f`.
fn p3_model(g: i64, e: i64, t: i64) -> Result<(ScrollModel, TrackedLabel, TrackedLabel)> {
    let x = CurveContext::new(g, false)?;
    let d = 3 + 2 * g - 2; // N = 3, i = 1
    let h = (d + e) / 2; // H = X₀ + h·f, so H² = −e + 2h = d
    debug_assert_eq!(-e + 2 * h, d);
    // A representative of degree −e: effective for e ≤ 0, of the form
    // K − 𝔟 with deg 𝔟 = 2g − 2 + e otherwise.
    let e_divisor = if e <= 0 {
        DivisorClass::generic_effective(-e)
    } else {
        DivisorClass::canonical_shift(&x, DivisorClass::generic_effective(2 * g - 2 + e), 0)
    };
    let xb = TrackedLabel::Custom("Xb".into());
    let surface = RuledSurface::assembled(
        x,
        e,
        e_divisor,
        TriState::No,
        vec![
            TrackedCurve {
                label: TrackedLabel::X0,
                num_class: NumClass::new(1, 0),
                self_int: -e,
                irreducible: true,
                plane_divisor: Some(DivisorClass::canonical(&x)),
            },
            TrackedCurve {
                label: xb.clone(),
                num_class: NumClass::new(1, t),
                self_int: -e + 2 * t,
                irreducible: true,
                plane_divisor: Some(DivisorClass::generic_effective(-e + t + h)),
            },
        ],
    )?;
    let h_class = NumClass::new(1, h);
    let degree = surface.self_intersection(h_class);
    let scroll = ScrollModel {
        surface,
        h_class,
        h_fiber_divisor: DivisorClass::generic_effective(h),
        degree,
        speciality: 1,
        ambient_dim: 3,
    };
    Ok((scroll, TrackedLabel::X0, xb))
}

fn suite_reduction_identities() -> Result<SuiteOutcome> {
    let mut cases = 0u64;
    let mut failures = Vec::new();

    // Reduction plans.
    for (g, d_range, deg_b, span) in [(2, 4..=5, 4, 0), (3, 6..=7, 6, 2)] {
        for d in d_range {
            let plan = reduce_to_rb(g, 3, d)?;
            cases += 1;
            let expected_points = 4 * g + 3 - 5 - d;
            if plan.deg_b != deg_b || plan.num_points != expected_points || plan.span_dim != span {
                failures.push(format!(
                    "g = {g}, d = {d}: plan ({}, {}, {}), expected ({deg_b}, \
                     {expected_points}, {span})",
                    plan.deg_b, plan.num_points, plan.span_dim
                ));
            }
        }
    }

    // Explicit centers on assembled P³ models: the center count always
    // matches 4g + N − 5 − d, the transformed sections are disjoint, and
    // the pushforward degrees are 2g − 2 and 2g + N − 3.
    for (g, e, t_range) in [(2, 1, 1..=2), (3, -1, 0..=2)] {
        for t in t_range {
            let (scroll, xa, xb) = p3_model(g, e, t)?;
            let plan = explicit_rb_points(&scroll, &xa, &xb)?;
            cases += 1;
            let expected_total = 4 * g + 3 - 5 - scroll.degree;
            if plan.total != expected_total {
                failures.push(format!(
                    "g = {g}, t = {t}: total {} ≠ {expected_total}",
                    plan.total
                ));
            }
            if plan.xa_xb_after != 0 {
                failures.push(format!(
                    "g = {g}, t = {t}: X_a′·X_b′ = {}",
                    plan.xa_xb_after
                ));
            }
            if plan.xa_pushforward_degree != 2 * g - 2
                || plan.xb_pushforward_degree != 2 * g + 3 - 3
            {
                failures.push(format!(
                    "g = {g}, t = {t}: pushforward degrees ({}, {})",
                    plan.xa_pushforward_degree, plan.xb_pushforward_degree
                ));
            }
        }
    }

    Ok(SuiteOutcome {
        suite: "reduction-identities".into(),
        cases,
        failures,
    })
}

/// Run a named verification suite.  Known suites: `rr-closure`
/// (`--g-max`, default 12), `transform-oracle` (`--g-max`, default 6;
/// `--k-max`, default 10), `generica-boundaries` (`--g-max`, default 20),
/// `grassmann-enumeration`, `reduction-identities`.
pub fn cmd_verify(suite: &str, g_max: Option<i64>, k_max: Option<i64>) -> Result<CommandOutput> {
    let outcome = match suite {
        "rr-closure" => suite_rr_closure(g_max.unwrap_or(12))?,
        "transform-oracle" => suite_transform_oracle(g_max.unwrap_or(6), k_max.unwrap_or(10))?,
        "generica-boundaries" => suite_generica_boundaries(g_max.unwrap_or(20))?,
        "grassmann-enumeration" => suite_grassmann_enumeration()?,
        "reduction-identities" => suite_reduction_identities()?,
        other => return Err(Error::UnknownSuite(other.to_string())),
    };

    let passed = outcome.failures.is_empty();
    let shown: Vec<&String> = outcome.failures.iter().take(5).collect();
    let result = json!({
        "suite": outcome.suite,
        "cases": outcome.cases,
        "passed": passed,
        "failures": shown,
        "failure_count": outcome.failures.len(),
    });

    let mut text = format!(
        "verify {}: {} — {} cases\n",
        outcome.suite,
        if passed { "PASS" } else { "FAIL" },
        outcome.cases
    );
    if !passed {
        for f in &shown {
            text.push_str(&format!("  counterexample: {f}\n"));
        }
        if outcome.failures.len() > shown.len() {
            text.push_str(&format!(
                "  … and {} more\n",
                outcome.failures.len() - shown.len()
            ));
        }
    }

    let mut echo = format!("verify --suite {suite}");
    if let Some(g) = g_max {
        echo.push_str(&format!(" --g-max {g}"));
    }
    if let Some(k) = k_max {
        echo.push_str(&format!(" --k-max {k}"));
    }
    Ok(CommandOutput {
        report: Report {
            schema_version: SCHEMA_VERSION.to_string(),
            query_echo: echo,
            results: vec![result],
            warnings: outcome.failures,
            provenance: vec![format!("invariant sweep, {} cases", outcome.cases)],
        },
        text,
        success: passed,
    })
}
