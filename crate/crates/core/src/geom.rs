//! Planar primitives, the orientation predicate and convex hulls.
//!
//! All regions are open sets. Membership tests use strict inequalities.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: impl Into<Rational>, y: impl Into<Rational>) -> Point {
        Point { x: x.into(), y: y.into() }
    }

    /// Reflection across the base-line `y = 0`.
    pub fn mirrored(&self) -> Point {
        Point { x: self.x.clone(), y: -&self.y }
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// The open region `{(x, y) : a < x < b, y < c}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BottomlessRect {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
}

impl BottomlessRect {
    /// Fails when `a >= b`.
    pub fn new(
        a: impl Into<Rational>,
        b: impl Into<Rational>,
        c: impl Into<Rational>,
    ) -> Result<BottomlessRect, GeomError> {
        let r = BottomlessRect { a: a.into(), b: b.into(), c: c.into() };
        if r.a < r.b {
            Ok(r)
        } else {
            Err(GeomError::EmptyInterval)
        }
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.a < p.x && p.x < self.b && p.y < self.c
    }
}

/// The open axis-parallel rectangle `a < x < b, bottom < y < top`, crossing
/// the base-line `y = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BaselineRect {
    pub a: Rational,
    pub b: Rational,
    pub bottom: Rational,
    pub top: Rational,
}

impl BaselineRect {
    /// Fails unless `a < b` and `bottom < 0 < top`.
    pub fn new(
        a: impl Into<Rational>,
        b: impl Into<Rational>,
        bottom: impl Into<Rational>,
        top: impl Into<Rational>,
    ) -> Result<BaselineRect, GeomError> {
        let r = BaselineRect { a: a.into(), b: b.into(), bottom: bottom.into(), top: top.into() };
        if r.a >= r.b {
            return Err(GeomError::EmptyInterval);
        }
        if r.bottom.signum() != Ordering::Less || r.top.signum() != Ordering::Greater {
            return Err(GeomError::MissesBaseline);
        }
        Ok(r)
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.a < p.x && p.x < self.b && self.bottom < p.y && p.y < self.top
    }

    /// The part above the base-line, as a bottomless rectangle.
    pub fn upper(&self) -> BottomlessRect {
        BottomlessRect { a: self.a.clone(), b: self.b.clone(), c: self.top.clone() }
    }

    /// The part below the base-line, mirrored to a bottomless rectangle.
    pub fn lower_mirrored(&self) -> BottomlessRect {
        BottomlessRect { a: self.a.clone(), b: self.b.clone(), c: -&self.bottom }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    /// `y > slope * x + intercept`
    Above,
    /// `y < slope * x + intercept`
    Below,
}

/// An open half-plane bounded by the non-vertical line `y = slope * x + intercept`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HalfPlane {
    pub slope: Rational,
    pub intercept: Rational,
    pub region: Side,
}

impl HalfPlane {
    pub fn new(slope: impl Into<Rational>, intercept: impl Into<Rational>, region: Side) -> HalfPlane {
        HalfPlane { slope: slope.into(), intercept: intercept.into(), region }
    }

    /// Height of the boundary line at `x`.
    pub fn boundary_at(&self, x: &Rational) -> Rational {
        &(&self.slope * x) + &self.intercept
    }

    pub fn contains(&self, p: &Point) -> bool {
        let h = self.boundary_at(&p.x);
        match self.region {
            Side::Above => p.y > h,
            Side::Below => p.y < h,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Heading {
    North,
    South,
}

/// A point with a vertical viewing direction; the dual of a half-plane.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DirectedPoint {
    pub x: Rational,
    pub y: Rational,
    pub orientation: Heading,
}

impl DirectedPoint {
    pub fn point(&self) -> Point {
        Point { x: self.x.clone(), y: self.y.clone() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeomError {
    /// Left edge not strictly left of the right edge.
    EmptyInterval,
    /// Base-line rectangle not satisfying `bottom < 0 < top`.
    MissesBaseline,
}

impl fmt::Display for GeomError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeomError::EmptyInterval => f.write_str("left edge must be strictly left of right edge"),
            GeomError::MissesBaseline => f.write_str("rectangle must satisfy bottom < 0 < top"),
        }
    }
}

impl core::error::Error for GeomError {}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    /// Counter-clockwise turn.
    Left,
    /// Clockwise turn.
    Right,
    Collinear,
}

impl Orientation {
    fn from_sign(s: Ordering) -> Orientation {
        match s {
            Ordering::Greater => Orientation::Left,
            Ordering::Less => Orientation::Right,
            Ordering::Equal => Orientation::Collinear,
        }
    }
}

/// Sign of the determinant of `(q - p, r - p)`.
pub fn orient(p: &Point, q: &Point, r: &Point) -> Orientation {
    if let (Some(px), Some(py), Some(qx), Some(qy), Some(rx), Some(ry)) =
        (p.x.as_i64(), p.y.as_i64(), q.x.as_i64(), q.y.as_i64(), r.x.as_i64(), r.y.as_i64())
    {
        let (ax, ay) = (qx as i128 - px as i128, qy as i128 - py as i128);
        let (bx, by) = (rx as i128 - px as i128, ry as i128 - py as i128);
        if let (Some(l), Some(rr)) = (ax.checked_mul(by), ay.checked_mul(bx)) {
            if let Some(d) = l.checked_sub(rr) {
                return Orientation::from_sign(d.cmp(&0));
            }
        }
    }
    let det = &(&q.x - &p.x) * &(&r.y - &p.y) - &(&q.y - &p.y) * &(&r.x - &p.x);
    Orientation::from_sign(det.signum())
}

/// Indices of the distinct points sorted lexicographically by `(x, y)`;
/// of equal points only the first index is kept.
fn sorted_unique(points: &[Point]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..points.len()).collect();
    idx.sort_by(|&i, &j| points[i].cmp(&points[j]).then(i.cmp(&j)));
    idx.dedup_by(|j, i| points[*i] == points[*j]);
    idx
}

fn chain(points: &[Point], order: &[usize], keep: Orientation) -> Vec<usize> {
    let mut out: Vec<usize> = Vec::with_capacity(order.len());
    for &i in order {
        while out.len() >= 2
            && orient(&points[out[out.len() - 2]], &points[out[out.len() - 1]], &points[i]) != keep
        {
            out.pop();
        }
        out.push(i);
    }
    out
}

/// Indices of the lower hull chain, x-increasing, from the lexicographically
/// smallest to the largest point. Collinear boundary points are dropped.
pub fn lower_hull_indices(points: &[Point]) -> Vec<usize> {
    chain(points, &sorted_unique(points), Orientation::Left)
}

/// Indices of the upper hull chain, x-increasing.
pub fn upper_hull_indices(points: &[Point]) -> Vec<usize> {
    chain(points, &sorted_unique(points), Orientation::Right)
}

/// Indices of the convex hull vertices in clockwise order, starting at the
/// lexicographically smallest point.
pub fn convex_hull_indices(points: &[Point]) -> Vec<usize> {
    let order = sorted_unique(points);
    if order.len() <= 2 {
        return order;
    }
    let upper = chain(points, &order, Orientation::Right);
    let lower = chain(points, &order, Orientation::Left);
    let mut hull = upper;
    hull.extend(lower[1..lower.len() - 1].iter().rev());
    hull
}

pub fn convex_hull(points: &[Point]) -> Vec<Point> {
    convex_hull_indices(points).into_iter().map(|i| points[i].clone()).collect()
}

pub fn lower_hull(points: &[Point]) -> Vec<Point> {
    lower_hull_indices(points).into_iter().map(|i| points[i].clone()).collect()
}

pub fn upper_hull(points: &[Point]) -> Vec<Point> {
    upper_hull_indices(points).into_iter().map(|i| points[i].clone()).collect()
}

/// Whether `p` lies strictly inside triangle `abc` (any orientation).
pub fn strictly_inside_triangle(p: &Point, a: &Point, b: &Point, c: &Point) -> bool {
    let o1 = orient(a, b, p);
    let o2 = orient(b, c, p);
    let o3 = orient(c, a, p);
    o1 != Orientation::Collinear && o1 == o2 && o2 == o3
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    fn p(x: i64, y: i64) -> Point {
        Point::new(x, y)
    }

    #[test]
    fn orient_examples() {
        assert_eq!(orient(&p(0, 0), &p(1, 0), &p(0, 1)), Orientation::Left);
        assert_eq!(orient(&p(0, 0), &p(1, 1), &p(2, 2)), Orientation::Collinear);
        assert_eq!(orient(&p(0, 0), &p(0, 1), &p(1, 0)), Orientation::Right);
    }

    #[test]
    fn orient_rational_and_huge() {
        let a = Point::new(Rational::new(1, 3), Rational::new(1, 3));
        let b = Point::new(Rational::new(2, 3), Rational::new(2, 3));
        assert_eq!(orient(&p(0, 0), &a, &b), Orientation::Collinear);
        let m = i64::MAX;
        assert_eq!(orient(&p(-m, -m), &p(m, m), &p(0, 1)), Orientation::Left);
        assert_eq!(orient(&p(-m, -m), &p(m, m), &p(1, 1)), Orientation::Collinear);
    }

    #[test]
    fn hull_examples() {
        let pts = vec![p(0, 0), p(2, 0), p(1, 3), p(1, 1)];
        assert_eq!(convex_hull(&pts), vec![p(0, 0), p(1, 3), p(2, 0)]);
        assert_eq!(convex_hull(&[p(0, 0)]), vec![p(0, 0)]);
        assert_eq!(convex_hull(&[p(3, 0), p(0, 0)]), vec![p(0, 0), p(3, 0)]);
        assert_eq!(convex_hull(&[p(0, 0), p(0, 0)]), vec![p(0, 0)]);
        assert_eq!(lower_hull(&[p(0, 0), p(1, -1), p(2, 0)]), vec![p(0, 0), p(1, -1), p(2, 0)]);
        assert_eq!(lower_hull(&[p(0, 0), p(1, 1), p(2, 0)]), vec![p(0, 0), p(2, 0)]);
        assert_eq!(upper_hull(&[p(0, 0), p(1, 1), p(2, 0)]), vec![p(0, 0), p(1, 1), p(2, 0)]);
        // collinear boundary points are not vertices
        assert_eq!(convex_hull(&[p(0, 0), p(1, 0), p(2, 0), p(1, 5)]), vec![p(0, 0), p(1, 5), p(2, 0)]);
    }

    fn arb_points(max: usize) -> impl Strategy<Value = Vec<Point>> {
        proptest::collection::vec((-50i64..50, -50i64..50), 1..max)
            .prop_map(|v| v.into_iter().map(|(x, y)| p(x, y)).collect())
    }

    proptest! {
        #[test]
        fn orient_matches_bigint(c in proptest::array::uniform6(-1_000_000_000i64..=1_000_000_000)) {
            let (a, b, d) = (p(c[0], c[1]), p(c[2], c[3]), p(c[4], c[5]));
            let det = (num_bigint::BigInt::from(c[2] - c[0]) * num_bigint::BigInt::from(c[5] - c[1]))
                - (num_bigint::BigInt::from(c[3] - c[1]) * num_bigint::BigInt::from(c[4] - c[0]));
            let expected = Orientation::from_sign(det.cmp(&num_bigint::BigInt::from(0)));
            prop_assert_eq!(orient(&a, &b, &d), expected);
            // cyclic symmetry, swap antisymmetry
            prop_assert_eq!(orient(&b, &d, &a), expected);
            let swapped = match expected {
                Orientation::Left => Orientation::Right,
                Orientation::Right => Orientation::Left,
                Orientation::Collinear => Orientation::Collinear,
            };
            prop_assert_eq!(orient(&b, &a, &d), swapped);
        }

        #[test]
        fn every_point_inside_or_on_hull(pts in arb_points(30)) {
            let hull = convex_hull(&pts);
            if hull.len() >= 3 {
                for q in &pts {
                    for i in 0..hull.len() {
                        let (a, b) = (&hull[i], &hull[(i + 1) % hull.len()]);
                        // clockwise hull: interior is to the right of each edge
                        prop_assert_ne!(orient(a, b, q), Orientation::Left);
                    }
                }
            }
        }

        #[test]
        fn hull_invariant_under_permutation(pts in arb_points(25), seed in any::<u64>()) {
            use rand::seq::SliceRandom;
            use rand::SeedableRng;
            let mut shuffled = pts.clone();
            shuffled.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
            prop_assert_eq!(convex_hull(&pts), convex_hull(&shuffled));
        }

        #[test]
        fn chains_cover_hull(pts in arb_points(30)) {
            let mut from_chains: Vec<Point> = lower_hull(&pts);
            from_chains.extend(upper_hull(&pts));
            from_chains.sort();
            from_chains.dedup();
            let mut hull = convex_hull(&pts);
            hull.sort();
            prop_assert_eq!(from_chains, hull);
        }
    }
}
