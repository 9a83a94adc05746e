//! Coloring points against bottomless rectangles with upward sweeps.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::geom::Point;
use crate::hypergraph::Coloring;
use crate::instance::{validate_general_position, Family, Instance, InstanceError};

/// Indices sorted by y, and the x-rank of every point.
fn sweep_order(points: &[Point]) -> (Vec<usize>, Vec<usize>) {
    let n = points.len();
    let mut by_y: Vec<usize> = (0..n).collect();
    by_y.sort_by(|&i, &j| points[i].y.cmp(&points[j].y));
    let mut by_x: Vec<usize> = (0..n).collect();
    by_x.sort_by(|&i, &j| points[i].x.cmp(&points[j].x));
    let mut rank = vec![0; n];
    for (r, &i) in by_x.iter().enumerate() {
        rank[i] = r;
    }
    (by_y, rank)
}

fn validate(points: &[Point]) -> Result<(), InstanceError> {
    validate_general_position(&Instance::Points(points.to_vec()), Family::BottomlessPoints)
}

/// Three colors such that every bottomless rectangle with at least two of
/// the points sees two colors. Each point, taken upwards, gets the smallest
/// color not used by its current x-neighbors.
pub fn color_points_b_k2(points: &[Point]) -> Result<Coloring, InstanceError> {
    validate(points)?;
    let (by_y, rank) = sweep_order(points);
    let mut colors = vec![0; points.len()];
    // x-rank -> color of the points swept so far
    let mut line: BTreeMap<usize, usize> = BTreeMap::new();
    for &p in &by_y {
        let r = rank[p];
        let left = line.range(..r).next_back().map(|(_, &c)| c);
        let right = line.range(r + 1..).next().map(|(_, &c)| c);
        let c = (0..3).find(|&c| Some(c) != left && Some(c) != right).unwrap();
        colors[p] = c;
        line.insert(r, c);
    }
    Ok(Coloring::new(3, colors))
}

/// Result of the two-color sweep with the sweep step (position in upward
/// order) at which each point got its color; `None` marks points colored in
/// the final fill.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepTrace {
    pub coloring: Coloring,
    pub colored_at: Vec<Option<usize>>,
    /// Points in upward order.
    pub order: Vec<usize>,
}

/// Two colors such that every bottomless rectangle with at least four of the
/// points sees both colors.
pub fn color_points_b_k4(points: &[Point]) -> Result<Coloring, InstanceError> {
    Ok(color_points_b_k4_traced(points)?.coloring)
}

/// [`color_points_b_k4`] with the sweep history, for replaying the sweep
/// invariant: among swept points no two x-adjacent ones are uncolored and
/// the colored ones alternate in x-order.
pub fn color_points_b_k4_traced(points: &[Point]) -> Result<SweepTrace, InstanceError> {
    validate(points)?;
    let n = points.len();
    let (by_y, rank) = sweep_order(points);
    let mut colored_at: Vec<Option<usize>> = vec![None; n];
    let mut colors = vec![0; n];
    // x-rank -> (point, color if colored)
    let mut line: BTreeMap<usize, (usize, Option<usize>)> = BTreeMap::new();
    for (step, &p) in by_y.iter().enumerate() {
        let r = rank[p];
        if step == 0 {
            colors[p] = 0;
            colored_at[p] = Some(0);
            line.insert(r, (p, Some(0)));
            continue;
        }
        let left = line.range(..r).next_back().map(|(&k, &v)| (k, v));
        let right = line.range(r + 1..).next().map(|(&k, &v)| (k, v));
        // the uncolored neighbor, if any, and the pair in x-order
        let (lo, hi) = match (left, right) {
            (Some((lr, (_, None))), _) => (lr, r),
            (_, Some((rr, (_, None)))) => (r, rr),
            _ => {
                line.insert(r, (p, None));
                continue;
            }
        };
        line.insert(r, (p, None));
        let outer_left = line.range(..lo).next_back().and_then(|(_, &(_, c))| c);
        let outer_right = line.range(hi + 1..).next().and_then(|(_, &(_, c))| c);
        let (a, b) = match (outer_left, outer_right) {
            (Some(a), Some(b)) => {
                debug_assert_ne!(a, b, "colored points must alternate");
                (1 - a, 1 - b)
            }
            (Some(a), None) => (1 - a, a),
            (None, Some(b)) => (b, 1 - b),
            (None, None) => (0, 1),
        };
        for (key, c) in [(lo, a), (hi, b)] {
            let entry = line.get_mut(&key).unwrap();
            entry.1 = Some(c);
            colors[entry.0] = c;
            colored_at[entry.0] = Some(step);
        }
    }
    Ok(SweepTrace { coloring: Coloring::new(2, colors), colored_at, order: by_y })
}
