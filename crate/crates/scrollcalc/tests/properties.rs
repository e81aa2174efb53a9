//! Randomized invariant checks over the public API.

use proptest::prelude::*;

use scrollcalc::classifier::{classify_generic, classify_p3, stability_possible, TrichotomyCase};
use scrollcalc::curve_divisors::{
    h0_generic_class, h0_h1, scroll_numerics, speciality_degree_bound, speciality_from,
    CurveContext, DivisorClass,
};
use scrollcalc::elem_transform::{generic_transform_report, reduce_to_rb, transform, PointSpec};
use scrollcalc::grassmannian::{cone_genus, enumerate_candidates, quadric_genus, GrassLocus};
use scrollcalc::ruled_surface::{
    family_through_points, make_s_b, scroll_r_b, track_family_member, FamilyThroughPoints,
    NumClass, TrackedLabel,
};

fn curve_strategy() -> impl Strategy<Value = CurveContext> {
    (0i64..=12, any::<bool>())
        .prop_map(|(g, hyper)| CurveContext::new(g, hyper && g >= 2).expect("valid curve"))
}

fn divisor_strategy() -> impl Strategy<Value = (CurveContext, DivisorClass)> {
    (curve_strategy(), 0i64..=4, -10i64..=14, 0i64..=8).prop_map(|(x, pick, m, base)| {
        let div = match pick {
            0 => DivisorClass::generic_effective(m.max(0)),
            1 => DivisorClass::canonical(&x),
            2 => DivisorClass::nontrivial_degree_zero(),
            _ => DivisorClass::canonical_shift(&x, DivisorClass::generic_effective(base), m),
        };
        (x, div)
    })
}

proptest! {
    /// `h⁰ − h¹ = deg − g + 1` for every constructible divisor class,
    /// with both cohomology numbers non-negative.
    #[test]
    fn rr_identity_closure((x, div) in divisor_strategy()) {
        let (h0, h1) = h0_h1(&x, &div).unwrap();
        prop_assert!(h0 >= 0 && h1 >= 0);
        prop_assert_eq!(h0 - h1, div.degree - x.genus + 1);
    }

    /// The dual shift `K − D` swaps the two cohomology numbers of `D`.
    #[test]
    fn canonical_shift_swaps_cohomology(x in curve_strategy(), m in 0i64..=10) {
        let d = DivisorClass::generic_effective(m);
        let shifted = DivisorClass::canonical_shift(&x, d.clone(), 0);
        let (h0, h1) = h0_h1(&x, &d).unwrap();
        let (s0, s1) = h0_h1(&x, &shifted).unwrap();
        prop_assert_eq!((s0, s1), (h1, h0));
    }

    /// Adding a generic point to a generic class raises `h⁰` by 0 or 1,
    /// never decreases it.
    #[test]
    fn h0_generic_is_monotone_with_unit_steps(x in curve_strategy(), m in -5i64..=25) {
        let a = h0_generic_class(&x, m).unwrap();
        let b = h0_generic_class(&x, m + 1).unwrap();
        prop_assert!(b >= a);
        prop_assert!(b - a <= 1);
    }

    /// The speciality solved from `(g, d, N)` satisfies the scroll relation,
    /// and the degree bound `d ≤ 2g + N − 2` marks exactly the classes with
    /// speciality at least one.
    #[test]
    fn speciality_resolution_round_trips(g in 1i64..=15, n in 3i64..=40, d in 1i64..=80) {
        let bound = speciality_degree_bound(g, n).unwrap();
        prop_assert_eq!(bound, 2 * g + n - 2);
        match speciality_from(g, d, n) {
            Ok(i) => {
                prop_assert!(i >= 0);
                // Speciality ≥ 1 exactly on the bounded degree range.
                prop_assert_eq!(i >= 1, d <= bound);
                prop_assert_eq!(d - 2 * g + 1 + i, n);
                prop_assert_eq!(scroll_numerics(g, d, i).unwrap(), n);
            }
            // Only degrees beyond even the nonspecial boundary d = 2g+N−1
            // are rejected outright.
            Err(_) => prop_assert!(d > bound + 1),
        }
    }

    /// The intersection form is symmetric and bilinear.
    #[test]
    fn intersection_form_is_symmetric_bilinear(
        g in 2i64..=8,
        extra in 0i64..=6,
        (a1, b1, a2, b2, a3, b3) in (-5i64..=5, -5i64..=5, -5i64..=5, -5i64..=5, -5i64..=5, -5i64..=5),
        s in -3i64..=3,
    ) {
        let x = CurveContext::new(g, false).unwrap();
        let surf = make_s_b(&x, DivisorClass::generic_effective(2 * g - 2 + extra)).unwrap();
        let c1 = NumClass::new(a1, b1);
        let c2 = NumClass::new(a2, b2);
        let c3 = NumClass::new(a3, b3);
        prop_assert_eq!(surf.intersect(c1, c2), surf.intersect(c2, c1));
        let sum = NumClass::new(a2 + s * a3, b2 + s * b3);
        prop_assert_eq!(
            surf.intersect(c1, sum),
            surf.intersect(c1, c2) + s * surf.intersect(c1, c3)
        );
    }

    /// On `S_𝔟` the two distinguished sections balance: `X₀² = −e`,
    /// `X₁² = e` (so their self-intersections cancel), and they are
    /// disjoint; every tracked family member has `Y_c² = e + 2c`.
    #[test]
    fn distinguished_sections_balance(g in 2i64..=8, extra in 0i64..=6, c in 1i64..=4) {
        let x = CurveContext::new(g, false).unwrap();
        let surf = make_s_b(&x, DivisorClass::generic_effective(2 * g - 2 + extra)).unwrap();
        let e = surf.e_invariant;
        prop_assert_eq!(e, extra);
        let x0 = surf.tracked(&TrackedLabel::X0).unwrap();
        let x1 = surf.tracked(&TrackedLabel::X1).unwrap();
        prop_assert_eq!(x0.self_int + x1.self_int, 0);
        prop_assert_eq!(surf.intersect(x0.num_class, x1.num_class), 0);
        prop_assert_eq!(surf.intersect(x0.num_class, NumClass::fiber()), 1);
        prop_assert_eq!(surf.self_intersection(NumClass::fiber()), 0);
        let tracked = track_family_member(&surf, c).unwrap();
        prop_assert_eq!(tracked.tracked(&TrackedLabel::Yc(c)).unwrap().self_int, e + 2 * c);
    }

    /// The scroll `R_𝔟` has degree `2g − 2 + deg 𝔟` and satisfies the
    /// relation `d − 2g + 1 + i = N`.
    #[test]
    fn scroll_degree_and_identity(g in 2i64..=10, extra in 0i64..=8) {
        let x = CurveContext::new(g, false).unwrap();
        let deg_b = 2 * g - 2 + extra;
        let surf = make_s_b(&x, DivisorClass::generic_effective(deg_b)).unwrap();
        let scroll = scroll_r_b(&surf).unwrap();
        prop_assert_eq!(scroll.degree, 2 * g - 2 + deg_b);
        prop_assert!(scroll.rr_identity_holds());
    }

    /// Members of the pivotal family `F_c` (dimension `2c`) pass through
    /// `k` general points exactly when `k ≤ 2c`, with residual dimension
    /// `2c − k`.
    #[test]
    fn family_through_points_consistency(c in 1i64..=6, k in 0i64..=14) {
        match family_through_points(c, k).unwrap() {
            FamilyThroughPoints::FamilyDim { dim } => {
                prop_assert!(k <= 2 * c);
                prop_assert_eq!(dim, 2 * c - k);
            }
            FamilyThroughPoints::NoneGeneric => prop_assert!(k > 2 * c),
        }
    }

    /// Elementary transformation flips the parity of `e` per center and is
    /// independent of the order in which centers are listed.
    #[test]
    fn transform_parity_and_order_independence(
        g in 2i64..=5,
        choices in prop::collection::vec(0usize..=4, 0..=6),
    ) {
        let x = CurveContext::new(g, false).unwrap();
        let mut surf = make_s_b(&x, DivisorClass::generic_effective(3 * g - 3)).unwrap();
        for c in 1..=2 {
            surf = track_family_member(&surf, c).unwrap();
        }
        let make_point = |i: usize| match i {
            0 => PointSpec::on_curve(TrackedLabel::X0),
            1 => PointSpec::on_curve(TrackedLabel::X1),
            2 => PointSpec::on_curve(TrackedLabel::Yc(1)),
            3 => PointSpec::on_curve(TrackedLabel::Yc(2)),
            _ => PointSpec::generic(),
        };
        let points: Vec<PointSpec> = choices.iter().map(|&i| make_point(i)).collect();
        let forward = transform(&surf, &points).unwrap();
        let k = points.len() as i64;
        prop_assert_eq!(
            (forward.e_invariant - surf.e_invariant - k).rem_euclid(2),
            0
        );
        // The construction record keeps the centers as given; everything
        // geometric must be independent of their order.
        let geometry = |s: &scrollcalc::ruled_surface::RuledSurface| {
            (
                s.e_invariant,
                s.e_divisor.clone(),
                s.decomposable,
                s.tracked_curves.clone(),
                s.warnings.clone(),
            )
        };
        let mut reversed: Vec<PointSpec> = points.clone();
        reversed.reverse();
        prop_assert_eq!(geometry(&transform(&surf, &reversed).unwrap()), geometry(&forward));
        let mut rotated = points;
        if !rotated.is_empty() {
            rotated.rotate_left(1);
        }
        prop_assert_eq!(geometry(&transform(&surf, &rotated).unwrap()), geometry(&forward));
    }

    /// After transforming `S_𝔟` (`deg 𝔟 = 3g − 3`) in `k` generic points,
    /// the engine's minimal self-intersection agrees with the closed-form
    /// minimum `min(1 − g + k, g − 1 + (k mod 2))`.
    #[test]
    fn generic_transform_minimum_closed_form(g in 2i64..=5, k in 0i64..=8) {
        let report = generic_transform_report(g, k).unwrap();
        let closed_form = (1 - g + k).min(g - 1 + k.rem_euclid(2));
        prop_assert_eq!(report.minimum(), closed_form);
        let x = CurveContext::new(g, false).unwrap();
        let surf = make_s_b(&x, DivisorClass::generic_effective(3 * g - 3)).unwrap();
        let points: Vec<PointSpec> = (0..k).map(|_| PointSpec::generic()).collect();
        let after = transform(&surf, &points).unwrap();
        prop_assert_eq!(after.e_invariant, -closed_form);
    }

    /// Generic classification: the scroll relation, the parity of `e`, and
    /// the case boundaries agree between the `N`-form and the `d`-form.
    #[test]
    fn classification_identities(g in 2i64..=20, n in 3i64..=60) {
        let c = classify_generic(g, n).unwrap();
        prop_assert_eq!(c.degree, n + 2 * g - 2);
        prop_assert_eq!(c.speciality, 1);
        prop_assert_eq!((c.e_invariant - n).rem_euclid(2), 0);
        let d = c.degree;
        let expected_case = if d >= 5 * g - 5 {
            TrichotomyCase::DecomposableLarge
        } else if d >= 3 * g - 3 {
            TrichotomyCase::IndecomposableMiddle
        } else {
            TrichotomyCase::IndecomposableSmall
        };
        prop_assert_eq!(c.case, expected_case);
        prop_assert_eq!(c.decomposable, c.case == TrichotomyCase::DecomposableLarge);
    }

    /// The stability predicate is exactly `d < 4g − 4`.
    #[test]
    fn stability_predicate(g in 2i64..=20, d in 1i64..=100) {
        prop_assert_eq!(stability_possible(g, d).unwrap(), d < 4 * g - 4);
    }

    /// Both Grassmannian genus formulas are exact inverses of the
    /// double-point counts used by the enumeration, and the quadric form
    /// is symmetric in the two directrix degrees.
    #[test]
    fn grassmann_genus_formulas(g in 1i64..=6, d in 3i64..=10) {
        for cand in enumerate_candidates(g, d).unwrap() {
            prop_assert_eq!(cand.degree, d);
            prop_assert_eq!(cand.genus, g);
            match cand.locus {
                GrassLocus::Quadric { a1, a2, double_points } => {
                    prop_assert_eq!(a1 + a2, d);
                    prop_assert_eq!(quadric_genus(a1, a2, double_points).unwrap(), g);
                    prop_assert_eq!(quadric_genus(a2, a1, double_points).unwrap(), g);
                }
                GrassLocus::Cone { a, double_points, .. } => {
                    prop_assert_eq!(cone_genus(d, a, double_points).unwrap(), g);
                }
                GrassLocus::AlphaPlane { double_points } => {
                    prop_assert_eq!((d - 1) * (d - 2) / 2 - g, double_points);
                }
                GrassLocus::BetaPlane => prop_assert!(false, "β-plane emitted"),
            }
        }
    }

    /// Reduction plans satisfy the degree bookkeeping: starting from
    /// `R_𝔟` of degree `2g − 2 + deg 𝔟` and projecting from one point per
    /// center recovers the target degree.
    #[test]
    fn reduction_plan_arithmetic(g in 2i64..=10, n in 3i64..=12, extra in 0i64..=6) {
        // Choose d inside the speciality-one window: i = N − d + 2g − 1 ≥ 1.
        let d = (2 * g + n - 2 - extra).max(2 * g - 1);
        match reduce_to_rb(g, n, d) {
            Ok(plan) => {
                prop_assert_eq!(plan.deg_b, 2 * g + n - 3);
                prop_assert_eq!(plan.num_points, 4 * g + n - 5 - d);
                prop_assert_eq!(plan.span_dim, 2 * g - 4);
                prop_assert!(plan.num_points >= 0);
                let rb_degree = 2 * g - 2 + plan.deg_b;
                prop_assert_eq!(rb_degree - plan.num_points, d);
            }
            Err(_) => {
                let i = n - d + 2 * g - 1;
                prop_assert!(i < 1 || 4 * g + n - 5 - d < 0 || g < 2);
            }
        }
    }
}

#[test]
fn table_rows_are_classification_fixed_points() {
    // Every table row in P³ satisfies the defining numerics.
    for g in [2, 3] {
        let table = classify_p3(g).unwrap();
        for row in &table.rows {
            assert_eq!(
                row.degree - 2 * row.genus + 1 + row.speciality,
                3,
                "{}",
                row.id
            );
            assert_eq!(
                (row.e_invariant - row.degree).rem_euclid(2),
                0,
                "{}",
                row.id
            );
            assert!(row.degree < 2 * row.genus + 2, "{}", row.id);
        }
    }
}
