//! Slow, independent reference implementations used to check the fast
//! predicates.
//!
//! The crossing oracle draws every diagonal as an explicit polyline in the
//! universal cover and intersects segments with exact rational arithmetic:
//!
//! * a type-1 diagonal is the straight segment between its two lift points;
//! * a type-2 (type-3) arc is a shallow "tent" hanging below the outer line
//!   (standing above the inner line): two segments meeting at an apex over
//!   the midpoint of the cut-off interval.
//!
//! Tent depths grow quadratically with the interval width, which keeps
//! nested tents strictly nested, and are scaled down so that every tent is
//! shallower than any type-1 segment leaving the same boundary line. None of
//! this shares code with [`crate::geometry::crosses`].

use std::cmp::Ordering;

use crate::angulation::Angulation;
use crate::geometry::{lift, AnnulusConfig, Boundary, MDiagonal, Rational};

/// A point of the cover strip: `y = 1` is the outer line, `y = 0` the inner.
pub type Point = (Rational, Rational);

/// A diagonal lift drawn as a polyline in the cover strip.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SegmentLift {
    pub points: Vec<Point>,
}

impl SegmentLift {
    /// Draws the lift of `d` translated by `shift`, using tents of steepness
    /// `depth_scale` (depth = `depth_scale · half_width²`).
    pub fn new(config: &AnnulusConfig, d: &MDiagonal, shift: i64, depth_scale: Rational) -> Self {
        let arc = lift(config, d, shift);
        let height = |b: Boundary| match b {
            Boundary::Outer => Rational::from_integer(1),
            Boundary::Inner => Rational::from_integer(0),
        };
        let a = (arc.start.x, height(arc.start.line));
        let b = (arc.end.x, height(arc.end.line));
        if d.is_type1() {
            return SegmentLift { points: vec![a, b] };
        }
        let two = Rational::from_integer(2);
        let width = if b.0 > a.0 { b.0 - a.0 } else { a.0 - b.0 };
        let half = width / two;
        let depth = depth_scale * half * half;
        let apex_y = if arc.start.line == Boundary::Outer {
            a.1 - depth
        } else {
            a.1 + depth
        };
        SegmentLift {
            points: vec![a, ((a.0 + b.0) / two, apex_y), b],
        }
    }

    fn segments(&self) -> impl Iterator<Item = (Point, Point)> + '_ {
        self.points.windows(2).map(|w| (w[0], w[1]))
    }
}

/// Sign of the cross product `(b - a) × (c - a)`.
fn orient(a: Point, b: Point, c: Point) -> Ordering {
    let cross = (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0);
    cross.cmp(&Rational::from_integer(0))
}

/// For `p` collinear with `a`–`b`: does it lie on the closed segment?
fn within(p: Point, a: Point, b: Point) -> bool {
    p.0 >= a.0.min(b.0) && p.0 <= a.0.max(b.0) && p.1 >= a.1.min(b.1) && p.1 <= a.1.max(b.1)
}

/// Strictly between the two cover lines.
fn interior(p: Point) -> bool {
    p.1 > Rational::from_integer(0) && p.1 < Rational::from_integer(1)
}

/// Do two closed segments meet at a point strictly inside the strip?
fn segments_meet_inside(a1: Point, a2: Point, b1: Point, b2: Point) -> bool {
    let o1 = orient(a1, a2, b1);
    let o2 = orient(a1, a2, b2);
    let o3 = orient(b1, b2, a1);
    let o4 = orient(b1, b2, a2);
    let eq = Ordering::Equal;
    if [o1, o2, o3, o4].iter().all(|&o| o == eq) {
        // Collinear: intersect the two ranges in lexicographic order.
        let (alo, ahi) = if a1 <= a2 { (a1, a2) } else { (a2, a1) };
        let (blo, bhi) = if b1 <= b2 { (b1, b2) } else { (b2, b1) };
        let lo = alo.max(blo);
        let hi = ahi.min(bhi);
        return match lo.cmp(&hi) {
            Ordering::Less => true,
            Ordering::Equal => interior(lo),
            Ordering::Greater => false,
        };
    }
    if o1 != eq && o2 != eq && o3 != eq && o4 != eq {
        // A proper crossing lies in the interior of both segments, and no
        // segment runs along a cover line.
        return o1 != o2 && o3 != o4;
    }
    let touches = [
        (o1 == eq && within(b1, a1, a2), b1),
        (o2 == eq && within(b2, a1, a2), b2),
        (o3 == eq && within(a1, b1, b2), a1),
        (o4 == eq && within(a2, b1, b2), a2),
    ];
    touches.iter().any(|&(hit, p)| hit && interior(p))
}

/// Do two polylines meet anywhere strictly inside the strip?
pub fn lifts_meet(a: &SegmentLift, b: &SegmentLift) -> bool {
    a.segments().any(|(a1, a2)| {
        b.segments()
            .any(|(b1, b2)| segments_meet_inside(a1, a2, b1, b2))
    })
}

/// A shift window that is wide enough for the pair `a`, `b`.
pub fn default_window(config: &AnnulusConfig, a: &MDiagonal, b: &MDiagonal) -> i64 {
    (config.outer_count() + config.inner_count()) as i64 + max_winding(a, b) + 2
}

fn max_winding(a: &MDiagonal, b: &MDiagonal) -> i64 {
    [a, b]
        .iter()
        .map(|d| match d {
            MDiagonal::Type1 { winding, .. } => winding.abs(),
            _ => 0,
        })
        .max()
        .unwrap_or(0)
}

/// Brute-force crossing test: draws `a` once and `b` at every integer
/// translate in `-shift_window..=shift_window`, and reports whether any pair
/// of polylines meets strictly inside the strip. The translate of `b` that
/// coincides with `a` itself is skipped.
///
/// ```
/// use angulator::{oracle::crossing_oracle, AnnulusConfig, MDiagonal};
/// let c = AnnulusConfig::new(2, 2, 2).unwrap();
/// let a = MDiagonal::Type2 { start: 0, level: 1 };
/// let b = MDiagonal::Type3 { start: 0, level: 1 };
/// assert!(!crossing_oracle(&c, &a, &b, 10));
/// assert!(!crossing_oracle(&c, &a, &a, 10));
/// ```
pub fn crossing_oracle(
    config: &AnnulusConfig,
    a: &MDiagonal,
    b: &MDiagonal,
    shift_window: i64,
) -> bool {
    // Type-1 segments move at most `r` horizontally between the lines.
    let r = max_winding(a, b) + 2;
    let depth_scale = Rational::new(1, 4 * (r + 1));
    let la = SegmentLift::new(config, a, 0, depth_scale);
    (-shift_window..=shift_window).any(|t| {
        if a == b && t == 0 {
            return false;
        }
        lifts_meet(&la, &SegmentLift::new(config, b, t, depth_scale))
    })
}

/// Number of faces predicted by the Euler characteristic of the annulus,
/// `V - E + F = 0`, with `V` the marked vertices and `E` the boundary edges
/// plus the diagonals.
///
/// ```
/// use angulator::{delta_p, oracle::face_count_oracle, AnnulusConfig};
/// let c = AnnulusConfig::new(2, 2, 1).unwrap();
/// assert_eq!(face_count_oracle(&delta_p(&c)), 4);
/// ```
pub fn face_count_oracle(angulation: &Angulation) -> usize {
    let config = angulation.config();
    let vertices = config.outer_count() + config.inner_count();
    let edges = config.outer_count() + config.inner_count() + angulation.diagonals().len();
    edges - vertices
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn segment_touching_rules() {
        let r = |n: i64, d: i64| Rational::new(n, d);
        let p = |x: Rational, y: Rational| (x, y);
        let zero = r(0, 1);
        let one = r(1, 1);
        // Crossing in the middle.
        assert!(segments_meet_inside(
            p(zero, one),
            p(one, zero),
            p(one, one),
            p(zero, zero)
        ));
        // Shared endpoint on the outer line does not count.
        assert!(!segments_meet_inside(
            p(zero, one),
            p(one, zero),
            p(zero, one),
            p(-one, zero)
        ));
        // Touching at an interior point counts.
        assert!(segments_meet_inside(
            p(zero, one),
            p(zero, zero),
            p(zero, r(1, 2)),
            p(one, r(1, 2))
        ));
        // Collinear overlap counts.
        assert!(segments_meet_inside(
            p(zero, one),
            p(zero, zero),
            p(zero, r(1, 2)),
            p(zero, r(1, 4))
        ));
    }

    #[test]
    fn nested_tents_stay_apart() {
        let c = AnnulusConfig::new(4, 2, 2).unwrap();
        let outer = MDiagonal::Type2 { start: 0, level: 3 };
        let inner = MDiagonal::Type2 { start: 1, level: 1 };
        let flush = MDiagonal::Type2 { start: 0, level: 1 };
        assert!(!crossing_oracle(&c, &outer, &inner, 12));
        assert!(!crossing_oracle(&c, &outer, &flush, 12));
    }

    #[test]
    fn loops_touch_their_translates_only_at_the_boundary() {
        let c = AnnulusConfig::new(3, 2, 1).unwrap();
        let d = MDiagonal::Type2 { start: 0, level: 2 };
        assert!(!crossing_oracle(&c, &d, &d, 8));
    }
}
