//! Rectangles crossing the base-line `y = 0`, colored by splitting at the
//! line and mirroring the lower half onto the bottomless setting.

use alloc::vec::Vec;

use crate::bottomless_dual::color_rects_b_k3;
use crate::bottomless_primal::{color_points_b_k2, color_points_b_k4};
use crate::geom::{BaselineRect, BottomlessRect, Point};
use crate::hypergraph::Coloring;
use crate::instance::{validate_general_position, Family, Instance, InstanceError};

fn validate_points(points: &[Point]) -> Result<(), InstanceError> {
    validate_general_position(&Instance::Points(points.to_vec()), Family::BaselinePoints)
}

/// Four colors such that every point covered by three or more rectangles
/// sees two colors: the pair of two-colorings of the upper parts and of the
/// mirrored lower parts, encoded as `2 * upper + lower`.
pub fn color_rects_bprime_k3(rects: &[BaselineRect]) -> Result<Coloring, InstanceError> {
    validate_general_position(&Instance::BaselineRects(rects.to_vec()), Family::BaselineRects)?;
    let upper: Vec<BottomlessRect> = rects.iter().map(BaselineRect::upper).collect();
    let lower: Vec<BottomlessRect> = rects.iter().map(BaselineRect::lower_mirrored).collect();
    let up = color_rects_b_k3(&upper)?;
    let down = color_rects_b_k3(&lower)?;
    let colors = up.colors.iter().zip(&down.colors).map(|(&u, &d)| 2 * u + d).collect();
    Ok(Coloring::new(4, colors))
}

/// The points above the line and the lower points mirrored to above it,
/// each with its original index.
fn split(points: &[Point]) -> [(Vec<usize>, Vec<Point>); 2] {
    let mut up = (Vec::new(), Vec::new());
    let mut down = (Vec::new(), Vec::new());
    for (i, p) in points.iter().enumerate() {
        if p.y.signum() == core::cmp::Ordering::Greater {
            up.0.push(i);
            up.1.push(p.clone());
        } else {
            down.0.push(i);
            down.1.push(p.mirrored());
        }
    }
    [up, down]
}

/// Colors the two sides independently; the lower side's colors are shifted
/// by `lower_offset`.
fn by_sides(
    points: &[Point],
    palette: usize,
    lower_offset: usize,
    side: impl Fn(&[Point]) -> Result<Coloring, InstanceError>,
) -> Result<Coloring, InstanceError> {
    validate_points(points)?;
    let mut colors = alloc::vec![0; points.len()];
    for (s, (idx, pts)) in split(points).into_iter().enumerate() {
        let offset = if s == 0 { 0 } else { lower_offset };
        for (&i, &c) in idx.iter().zip(&side(&pts)?.colors) {
            colors[i] = c + offset;
        }
    }
    Ok(Coloring::new(palette, colors))
}

/// Six colors, two-proper: three per side with disjoint palettes.
pub fn color_points_bprime_k2(points: &[Point]) -> Result<Coloring, InstanceError> {
    by_sides(points, 6, 3, color_points_b_k2)
}

/// Three colors, three-proper: both sides share the palette.
pub fn color_points_bprime_k3(points: &[Point]) -> Result<Coloring, InstanceError> {
    by_sides(points, 3, 0, color_points_b_k2)
}

/// Two colors, seven-proper: both sides use the four-proper two-coloring.
pub fn color_points_bprime_k7(points: &[Point]) -> Result<Coloring, InstanceError> {
    by_sides(points, 2, 0, color_points_b_k4)
}
