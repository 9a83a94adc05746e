//! Coloring points against half-planes through their convex hull.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::geom::{convex_hull_indices, strictly_inside_triangle, Point};
use crate::hypergraph::{Coloring, Hypergraph};
use crate::instance::{validate_general_position, Family, Instance, InstanceError};
use crate::oracle::enumerate_of_size;

pub const RED: usize = 0;
pub const BLUE: usize = 1;

fn validate(points: &[Point]) -> Result<(), InstanceError> {
    validate_general_position(&Instance::Points(points.to_vec()), Family::HalfplanePoints)
}

/// Colors around a cycle of length `len` with no two neighbors equal:
/// alternating 0 and 1, with a closing 2 when the length is odd.
fn hull_colors(len: usize) -> Vec<usize> {
    (0..len).map(|i| if len % 2 == 1 && len > 1 && i == len - 1 { 2 } else { i % 2 }).collect()
}

/// Four points, one strictly inside the triangle of the other three.
pub fn is_p_star(points: &[Point]) -> bool {
    points.len() == 4
        && (0..4).any(|i| {
            let o: Vec<&Point> = (0..4).filter(|&j| j != i).map(|j| &points[j]).collect();
            strictly_inside_triangle(&points[i], o[0], o[1], o[2])
        })
}

/// Hull vertices proper-colored with three colors, everything else gets the
/// fourth color. Every half-plane with two or more points sees two colors.
pub fn color_points_h_k2_simple(points: &[Point]) -> Result<Coloring, InstanceError> {
    validate(points)?;
    let hull = convex_hull_indices(points);
    let mut colors = vec![3; points.len()];
    for (&v, c) in hull.iter().zip(hull_colors(hull.len())) {
        colors[v] = c;
    }
    Ok(Coloring::new(4, colors))
}

/// For every point, the hull vertices that can be cut off together with it
/// by a half-plane containing nothing else: deleting hull vertex `q` makes
/// exactly those points new hull vertices.
pub fn cut_partners(points: &[Point]) -> Vec<Vec<usize>> {
    let hull = convex_hull_indices(points);
    let on_hull: BTreeSet<usize> = hull.iter().copied().collect();
    let mut partners = vec![Vec::new(); points.len()];
    for &q in &hull {
        let rest: Vec<usize> = (0..points.len()).filter(|&i| i != q).collect();
        let sub: Vec<Point> = rest.iter().map(|&i| points[i].clone()).collect();
        for v in convex_hull_indices(&sub) {
            let v = rest[v];
            if !on_hull.contains(&v) {
                partners[v].push(q);
            }
        }
    }
    partners
}

/// Result of the three-color algorithm, which needs a fourth color exactly
/// on the four-point configuration with one point inside the others'
/// triangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HullColoring {
    pub coloring: Coloring,
    pub exceptional: bool,
}

/// At most three colors (four on the exceptional configuration) such that
/// every half-plane with two or more points sees two colors.
pub fn color_points_h_k2(points: &[Point]) -> Result<HullColoring, InstanceError> {
    validate(points)?;
    let hull = convex_hull_indices(points);
    let mut colors = vec![usize::MAX; points.len()];
    for (&v, c) in hull.iter().zip(hull_colors(hull.len())) {
        colors[v] = c;
    }
    let partners = cut_partners(points);
    for p in 0..points.len() {
        if colors[p] != usize::MAX {
            continue;
        }
        let taken: Vec<usize> = partners[p].iter().map(|&q| colors[q]).collect();
        colors[p] = (0..4).find(|c| !taken.contains(c)).unwrap();
    }
    let exceptional = is_p_star(points);
    debug_assert_eq!(exceptional, colors.contains(&3));
    Ok(HullColoring { coloring: Coloring::new(4, colors), exceptional })
}

/// Whether the triangle `q_{i-1} q_i q_{i+1}` at each hull vertex contains a
/// point, decided by deleting the vertex and looking for new hull vertices.
pub fn nonempty_ears_by_deletion(points: &[Point], hull: &[usize]) -> Vec<bool> {
    let on_hull: BTreeSet<usize> = hull.iter().copied().collect();
    hull.iter()
        .map(|&q| {
            if hull.len() < 3 {
                return false;
            }
            let rest: Vec<usize> = (0..points.len()).filter(|&i| i != q).collect();
            let sub: Vec<Point> = rest.iter().map(|&i| points[i].clone()).collect();
            convex_hull_indices(&sub).into_iter().any(|v| !on_hull.contains(&rest[v]))
        })
        .collect()
}

/// Same as [`nonempty_ears_by_deletion`] with a direct point-in-triangle scan.
pub fn nonempty_ears_by_scan(points: &[Point], hull: &[usize]) -> Vec<bool> {
    let h = hull.len();
    (0..h)
        .map(|i| {
            if h < 3 {
                return false;
            }
            let (a, b, c) = (&points[hull[(i + h - 1) % h]], &points[hull[i]], &points[hull[(i + 1) % h]]);
            points.iter().any(|p| strictly_inside_triangle(p, a, b, c))
        })
        .collect()
}

/// Two colors (red, blue) such that every half-plane with three or more
/// points sees both; additionally no half-plane holds exactly two points that
/// are both blue, and no two hull neighbors are both blue.
pub fn color_points_h_k3(points: &[Point]) -> Result<Coloring, InstanceError> {
    validate(points)?;
    let hull = convex_hull_indices(points);
    let h = hull.len();
    let ears = nonempty_ears_by_deletion(points, &hull);
    let mut colors = vec![BLUE; points.len()];
    let mut around = vec![BLUE; h];
    if let Some(first) = ears.iter().position(|&e| e) {
        // walk once around the hull from a red vertex; each run of empty
        // ears between reds alternates starting with blue
        let mut run = 0;
        for step in 0..h {
            let i = (first + step) % h;
            if ears[i] {
                around[i] = RED;
                run = 0;
            } else {
                around[i] = if run % 2 == 0 { BLUE } else { RED };
                run += 1;
            }
        }
    } else {
        for (i, c) in around.iter_mut().enumerate() {
            *c = if i % 2 == 0 { RED } else { BLUE };
        }
    }
    for (&v, &c) in hull.iter().zip(&around) {
        colors[v] = c;
    }
    assert!(
        h < 2 || (0..h).all(|i| !(around[i] == BLUE && around[(i + 1) % h] == BLUE)),
        "two neighboring hull vertices are blue"
    );
    let col = Coloring::new(2, colors);
    debug_assert!(check_obs20(points, &col));
    Ok(col)
}

/// No half-plane contains exactly two of the points with both blue.
pub fn check_obs20(points: &[Point], col: &Coloring) -> bool {
    match enumerate_of_size(points, Family::HalfplanePoints, 2) {
        Ok(h) => h.edges().all(|e| e.iter().any(|&v| col.colors[v] != BLUE)),
        Err(_) => false,
    }
}

/// Every hyperedge holds a hull vertex, and its hull vertices are
/// consecutive around the hull.
pub fn hull_consecutive(points: &[Point], h: &Hypergraph) -> bool {
    let hull = convex_hull_indices(points);
    let mut pos = vec![usize::MAX; points.len()];
    for (i, &v) in hull.iter().enumerate() {
        pos[v] = i;
    }
    let len = hull.len();
    h.edges().all(|e| {
        let mut inside = vec![false; len];
        e.iter().filter(|&&v| pos[v] != usize::MAX).for_each(|&v| inside[pos[v]] = true);
        let count = inside.iter().filter(|&&b| b).count();
        if count == 0 {
            return false;
        }
        // consecutive on a cycle: exactly one place where membership starts
        count == len || (0..len).filter(|&i| inside[i] && !inside[(i + len - 1) % len]).count() == 1
    })
}
