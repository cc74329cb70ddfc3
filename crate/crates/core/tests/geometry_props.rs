//! Hull, caliper and shape-descriptor invariants on randomized regions,
//! cross-checked against quadratic brute-force oracles.

use proptest::prelude::*;

use carpo_core::morphfeat::hull::{convex_hull, feret_and_breadth, polygon_area};
use carpo_core::morphfeat::{extract_morph, MorphFeatures};
use carpo_core::synth::{binary_ellipse, single_region};

fn lattice_points() -> impl Strategy<Value = Vec<(f64, f64)>> {
    prop::collection::vec((0u16..100, 0u16..100), 1..40).prop_map(|v| {
        v.into_iter()
            .map(|(x, y)| (f64::from(x), f64::from(y)))
            .collect()
    })
}

/// Largest pairwise distance by checking every pair of input points.
fn feret_oracle(points: &[(f64, f64)]) -> f64 {
    let mut best = 0.0f64;
    for (i, a) in points.iter().enumerate() {
        for b in &points[i + 1..] {
            let d = (a.0 - b.0).powi(2) + (a.1 - b.1).powi(2);
            best = best.max(d);
        }
    }
    best.sqrt()
}

proptest! {
    /// Calipers agree exactly with the all-pairs maximum distance.
    #[test]
    fn feret_equals_brute_force(points in lattice_points()) {
        let hull = convex_hull(&points);
        let fb = feret_and_breadth(&hull);
        prop_assert_eq!(fb.feret, feret_oracle(&points));
    }

    /// No input point falls outside the hull.
    #[test]
    fn hull_contains_every_point(points in lattice_points()) {
        let hull = convex_hull(&points);
        if hull.len() < 3 {
            return Ok(());
        }
        let cross = |o: (f64, f64), a: (f64, f64), b: (f64, f64)| {
            (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
        };
        for &p in &points {
            for i in 0..hull.len() {
                let a = hull[i];
                let b = hull[(i + 1) % hull.len()];
                // CCW hull: interior points sit on the left of every edge.
                prop_assert!(cross(a, b, p) >= 0.0, "{p:?} outside edge {a:?}->{b:?}");
            }
        }
    }

    /// Breadth never exceeds the feret, and both are nonnegative.
    #[test]
    fn breadth_at_most_feret(points in lattice_points()) {
        let fb = feret_and_breadth(&convex_hull(&points));
        prop_assert!(fb.breadth >= 0.0);
        prop_assert!(fb.breadth <= fb.feret + 1e-9);
    }

    /// The hull of the hull is the hull itself (idempotence).
    #[test]
    fn hull_is_idempotent(points in lattice_points()) {
        let hull = convex_hull(&points);
        let again = convex_hull(&hull);
        prop_assert_eq!(hull, again);
    }

    /// Dropping interior points does not change the hull area.
    #[test]
    fn hull_area_ignores_interior_points(points in lattice_points()) {
        let hull = convex_hull(&points);
        let mut doubled = points.clone();
        doubled.extend_from_slice(&points);
        let hull2 = convex_hull(&doubled);
        prop_assert_eq!(polygon_area::<f64>(&hull), polygon_area::<f64>(&hull2));
    }
}

fn ellipse_strategy() -> impl Strategy<Value = (f64, f64, f64)> {
    (8.0f64..30.0, 4.0f64..25.0, 0.0f64..180.0)
        .prop_map(|(a, b, t)| if b > a { (b, a, t) } else { (a, b, t) })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Bounds that hold for every well-formed region, checked on randomized
    /// digitized ellipses.
    #[test]
    fn shape_descriptor_bounds((a, b, theta) in ellipse_strategy()) {
        let mask = binary_ellipse(a, b, theta);
        let region = single_region(&mask);
        let f: MorphFeatures<f64> = extract_morph(&mask, &region).unwrap();

        prop_assert!(f.area > 0.0);
        prop_assert!(f.perimeter > 0.0);
        // Near-circular shapes can report breadth a few ulps past the feret
        // because the two come from differently rounded projections.
        prop_assert!(f.feret >= f.breadth - 1e-9 && f.breadth > 0.0);
        prop_assert!(f.min_r <= f.avg_radius && f.avg_radius <= f.max_r);
        prop_assert!(f.solidity > 0.0 && f.solidity <= 1.0 + 1e-9);
        prop_assert!(f.convexity > 0.0 && f.convexity <= 1.0 + 1e-9);
        prop_assert!(f.concavity >= 0.0);
        prop_assert!(f.rectangularity > 0.0 && f.rectangularity <= 1.0 + 1e-9);
        prop_assert!(f.sphericity > 0.0 && f.sphericity <= 1.0 + 1e-9);
        prop_assert!(f.asp_ratio >= 1.0 - 1e-9);
        // Digitized near-circles can nudge past 1, but never dramatically.
        prop_assert!(f.circularity > 0.0 && f.circularity < 1.2);
        prop_assert!((f.circularity * f.elongation - 1.0).abs() <= 1e-9);
        prop_assert!(f.bending_energy >= 0.0);
        prop_assert!(!f.flags.degenerate_bending);
    }

    /// The feret axis length reported by morphology equals the calipers run
    /// directly on the region's contour hull.
    #[test]
    fn morph_feret_matches_direct_calipers((a, b, theta) in ellipse_strategy()) {
        let mask = binary_ellipse(a, b, theta);
        let region = single_region(&mask);
        let f: MorphFeatures<f64> = extract_morph(&mask, &region).unwrap();
        let pts: Vec<(f64, f64)> = region
            .contour
            .iter()
            .map(|&(x, y)| (x as f64, y as f64))
            .collect();
        let fb = feret_and_breadth(&convex_hull(&pts));
        prop_assert_eq!(f.feret, fb.feret);
        prop_assert_eq!(f.breadth, fb.breadth);
    }
}
