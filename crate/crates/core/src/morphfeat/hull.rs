//! Convex hull and caliper measurements over contour pixel centers.

use crate::num::Real;

/// Strictly convex hull (collinear points dropped) in counter-clockwise
/// order by the shoelace convention, via the monotone chain.
///
/// Degenerate inputs collapse: one distinct point → 1 vertex, collinear
/// points → the 2 extreme vertices.
pub fn convex_hull<F: Real>(points: &[(F, F)]) -> Vec<(F, F)> {
    let mut pts: Vec<(F, F)> = points.to_vec();
    pts.sort_by(|a, b| a.partial_cmp(b).expect("finite coordinates"));
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    fn cross<F: Real>(o: (F, F), a: (F, F), b: (F, F)) -> F {
        (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
    }
    let build = |iter: &mut dyn Iterator<Item = (F, F)>| {
        let mut chain: Vec<(F, F)> = Vec::new();
        for p in iter {
            while chain.len() >= 2
                && cross(chain[chain.len() - 2], chain[chain.len() - 1], p) <= F::zero()
            {
                chain.pop();
            }
            chain.push(p);
        }
        chain.pop();
        chain
    };
    let lower = build(&mut pts.iter().copied());
    let upper = build(&mut pts.iter().rev().copied());
    let mut hull = lower;
    hull.extend(upper);
    if hull.is_empty() {
        // All points collapsed (can only happen with exact duplicates).
        hull.push(pts[0]);
    }
    hull
}

/// Shoelace area of a polygon; 0 for degenerate (≤ 2 vertex) input.
pub fn polygon_area<F: Real>(poly: &[(F, F)]) -> F {
    if poly.len() < 3 {
        return F::zero();
    }
    let mut twice = F::zero();
    for i in 0..poly.len() {
        let (x1, y1) = poly[i];
        let (x2, y2) = poly[(i + 1) % poly.len()];
        twice += x1 * y2 - x2 * y1;
    }
    (twice / F::of(2.0)).abs()
}

/// Closed edge-length sum of a polygon; 0 for a single vertex.
pub fn polygon_perimeter<F: Real>(poly: &[(F, F)]) -> F {
    match poly.len() {
        0 | 1 => F::zero(),
        2 => {
            let d = dist(poly[0], poly[1]);
            d + d
        }
        _ => (0..poly.len())
            .map(|i| dist(poly[i], poly[(i + 1) % poly.len()]))
            .sum(),
    }
}

fn dist<F: Real>(a: (F, F), b: (F, F)) -> F {
    let dx = a.0 - b.0;
    let dy = a.1 - b.1;
    (dx * dx + dy * dy).sqrt()
}

fn dist_sq<F: Real>(a: (F, F), b: (F, F)) -> F {
    let dx = a.0 - b.0;
    let dy = a.1 - b.1;
    dx * dx + dy * dy
}

/// Caliper measurements of a hull polygon.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FeretBreadth<F: Real> {
    /// Longest distance between two hull vertices.
    pub feret: F,
    /// Extent of the hull projected perpendicular to the feret axis;
    /// exactly 0 for degenerate (≤ 2 vertex) hulls.
    pub breadth: F,
    /// The vertex pair realizing the feret.
    pub feret_axis: ((F, F), (F, F)),
    /// The vertices realizing the min/max perpendicular projection.
    pub breadth_axis: ((F, F), (F, F)),
}

/// Feret (max pairwise vertex distance, by rotating calipers) and the
/// perpendicular breadth, with the axis endpoints used downstream.
pub fn feret_and_breadth<F: Real>(hull: &[(F, F)]) -> FeretBreadth<F> {
    assert!(!hull.is_empty(), "hull must have at least one vertex");
    let (feret_sq, pair) = match hull.len() {
        1 => (F::zero(), (hull[0], hull[0])),
        2 => (dist_sq(hull[0], hull[1]), (hull[0], hull[1])),
        _ => calipers_max_pair(hull),
    };
    let feret = feret_sq.sqrt();
    if hull.len() <= 2 {
        return FeretBreadth {
            feret,
            breadth: F::zero(),
            feret_axis: pair,
            breadth_axis: (hull[0], hull[0]),
        };
    }
    // Unit direction of the feret axis and its perpendicular.
    let (a, b) = pair;
    let (ux, uy) = ((b.0 - a.0) / feret, (b.1 - a.1) / feret);
    let (vx, vy) = (-uy, ux);
    let mut lo = (F::infinity(), hull[0]);
    let mut hi = (F::neg_infinity(), hull[0]);
    for &p in hull {
        let t = vx * p.0 + vy * p.1;
        if t < lo.0 {
            lo = (t, p);
        }
        if t > hi.0 {
            hi = (t, p);
        }
    }
    FeretBreadth {
        feret,
        breadth: hi.0 - lo.0,
        feret_axis: pair,
        breadth_axis: (lo.1, hi.1),
    }
}

/// Squared length of a candidate diameter together with its endpoints.
type DiameterCandidate<F> = (F, ((F, F), (F, F)));

/// Rotating calipers over a strictly convex CCW polygon: enumerate antipodal
/// vertex pairs and keep the farthest.
fn calipers_max_pair<F: Real>(hull: &[(F, F)]) -> DiameterCandidate<F> {
    let n = hull.len();
    let area2 = |o: (F, F), a: (F, F), b: (F, F)| -> F {
        ((a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)).abs()
    };
    let mut best = (F::neg_infinity(), (hull[0], hull[0]));
    let consider = |a: (F, F), b: (F, F), best: &mut DiameterCandidate<F>| {
        let d = dist_sq(a, b);
        if d > best.0 {
            *best = (d, (a, b));
        }
    };
    let mut j = 1usize;
    for i in 0..n {
        let edge_a = hull[i];
        let edge_b = hull[(i + 1) % n];
        // Advance the caliper while the triangle on the next vertex grows.
        while area2(edge_a, edge_b, hull[(j + 1) % n]) > area2(edge_a, edge_b, hull[j]) {
            j = (j + 1) % n;
        }
        consider(edge_a, hull[j], &mut best);
        consider(edge_b, hull[j], &mut best);
        // Parallel-edge case: the next vertex forms an equal-area triangle.
        let jn = (j + 1) % n;
        if area2(edge_a, edge_b, hull[jn]) == area2(edge_a, edge_b, hull[j]) {
            consider(edge_a, hull[jn], &mut best);
            consider(edge_b, hull[jn], &mut best);
        }
    }
    best
}

/// Intersection of the infinite lines (a1,a2) and (b1,b2); when the lines are
/// (numerically) parallel, falls back to projecting the midpoint of (b1,b2)
/// onto the first line.
pub fn line_intersection<F: Real>(a1: (F, F), a2: (F, F), b1: (F, F), b2: (F, F)) -> (F, F) {
    let d1 = (a2.0 - a1.0, a2.1 - a1.1);
    let d2 = (b2.0 - b1.0, b2.1 - b1.1);
    let denom = d1.0 * d2.1 - d1.1 * d2.0;
    let scale = (d1.0.abs() + d1.1.abs()) * (d2.0.abs() + d2.1.abs());
    if denom.abs() <= F::of(1e-12) * scale {
        // Parallel axes: project the breadth midpoint onto the feret line.
        let m = ((b1.0 + b2.0) / F::of(2.0), (b1.1 + b2.1) / F::of(2.0));
        let len_sq = d1.0 * d1.0 + d1.1 * d1.1;
        if len_sq == F::zero() {
            return a1;
        }
        let t = ((m.0 - a1.0) * d1.0 + (m.1 - a1.1) * d1.1) / len_sq;
        return (a1.0 + t * d1.0, a1.1 + t * d1.1);
    }
    let t = ((b1.0 - a1.0) * d2.1 - (b1.1 - a1.1) * d2.0) / denom;
    (a1.0 + t * d1.0, a1.1 + t * d1.1)
}
