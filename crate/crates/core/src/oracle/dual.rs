//! Structured enumeration of dual hyperedges: one sample point per cell of
//! the arrangement, covering sets by direct membership.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::ControlFlow;

use super::Visit;

use crate::geom::{HalfPlane, Point, Side};
use crate::hypergraph::{Hypergraph, Realizer};
use crate::instance::Instance;
use crate::rational::Rational;

/// Sorted distinct values with one midpoint between each consecutive pair.
fn midpoints(mut values: Vec<Rational>) -> Vec<Rational> {
    values.sort();
    values.dedup();
    values.windows(2).map(|w| w[0].midpoint(&w[1])).collect()
}

fn grid(xs: &[Rational], ys: &[Rational]) -> Vec<Point> {
    xs.iter().flat_map(|x| ys.iter().map(move |y| Point { x: x.clone(), y: y.clone() })).collect()
}

/// Sample points of the structured dual enumeration, at least one in every
/// cell of the arrangement that lies inside some region.
pub fn dual_sample_points(instance: &Instance) -> Vec<Point> {
    match instance {
        Instance::BottomlessRects(rs) => {
            let xs = midpoints(rs.iter().flat_map(|r| [r.a.clone(), r.b.clone()]).collect());
            let mut ys = midpoints(rs.iter().map(|r| r.c.clone()).collect());
            if let Some(low) = rs.iter().map(|r| &r.c).min() {
                ys.push(low - &Rational::ONE);
            }
            grid(&xs, &ys)
        }
        Instance::BaselineRects(rs) => {
            let xs = midpoints(rs.iter().flat_map(|r| [r.a.clone(), r.b.clone()]).collect());
            let ys = midpoints(
                rs.iter()
                    .flat_map(|r| [r.top.clone(), r.bottom.clone()])
                    .chain([Rational::ZERO])
                    .collect(),
            );
            grid(&xs, &ys)
        }
        Instance::HalfPlanes(hs) => halfplane_arrangement_samples(hs),
        Instance::Points(_) => Vec::new(),
    }
}

fn vertex(hi: &HalfPlane, hj: &HalfPlane) -> Point {
    let x = &(&hj.intercept - &hi.intercept) / &(&hi.slope - &hj.slope);
    let y = hi.boundary_at(&x);
    Point { x, y }
}

/// The point `v + eps * (si * (1, a_i) + sj * (1, a_j))` next to the vertex
/// `v` of lines `i` and `j`, with `eps` small enough that every other line
/// keeps its side.
fn vertex_sample(hs: &[HalfPlane], i: usize, j: usize, v: &Point, si: i64, sj: i64) -> Point {
    let (hi, hj) = (&hs[i], &hs[j]);
    let eps = (0..hs.len())
        .filter(|&m| m != i && m != j)
        .map(|m| {
            let hm = &hs[m];
            let gap = (&v.y - &hm.boundary_at(&v.x)).abs();
            let reach = &(&hi.slope - &hm.slope).abs() + &(&hj.slope - &hm.slope).abs();
            gap / (&(&reach + &Rational::ONE) * &Rational::from_integer(2))
        })
        .min()
        .unwrap_or(Rational::ONE);
    let (di, dj) = (Rational::from_integer(si), Rational::from_integer(sj));
    let dx = &di + &dj;
    let dy = &(&di * &hi.slope) + &(&dj * &hj.slope);
    Point { x: &v.x + &(&eps * &dx), y: &v.y + &(&eps * &dy) }
}

/// Samples on `x = 0` between and beyond parallel lines.
fn parallel_samples(hs: &[HalfPlane]) -> Vec<Point> {
    let mut ys: Vec<Rational> = hs.iter().map(|h| h.intercept.clone()).collect();
    ys.sort();
    ys.dedup();
    let mut samples = midpoints(ys.clone());
    samples.push(&ys[0] - &Rational::ONE);
    samples.push(&ys[ys.len() - 1] + &Rational::ONE);
    samples.into_iter().map(|y| Point { x: Rational::ZERO, y }).collect()
}

/// Points next to every vertex of the line arrangement, one in each of the
/// four incident cells. Without vertices (all boundaries parallel) the
/// samples sit on `x = 0` between and beyond the lines.
pub fn halfplane_arrangement_samples(hs: &[HalfPlane]) -> Vec<Point> {
    let n = hs.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if hs[i].slope == hs[j].slope {
                continue;
            }
            let v = vertex(&hs[i], &hs[j]);
            for si in [-1i64, 1] {
                for sj in [-1i64, 1] {
                    out.push(vertex_sample(hs, i, j, &v, si, sj));
                }
            }
        }
    }
    if out.is_empty() && n > 0 {
        out = parallel_samples(hs);
    }
    out
}

fn side_holds(h: &HalfPlane, offset: Ordering) -> bool {
    match h.region {
        Side::Above => offset == Ordering::Greater,
        Side::Below => offset == Ordering::Less,
    }
}

/// Covering sets of the cells around each arrangement vertex, read off
/// combinatorially: other lines are judged at the vertex itself, the two
/// lines through it by the direction of the step. Sample points are only
/// built when the visitor asks for a realizer.
fn halfplane_cells(hs: &[HalfPlane], visit: &mut Visit) -> ControlFlow<()> {
    let n = hs.len();
    let mut any_vertex = false;
    let mut edge = Vec::with_capacity(n);
    for i in 0..n {
        for j in i + 1..n {
            if hs[i].slope == hs[j].slope {
                continue;
            }
            any_vertex = true;
            let v = vertex(&hs[i], &hs[j]);
            let base: Vec<usize> = (0..n).filter(|&m| m != i && m != j && hs[m].contains(&v)).collect();
            // height above line i of the step is sj * (a_j - a_i) * eps
            let dij = (&hs[j].slope - &hs[i].slope).signum();
            for si in [-1i64, 1] {
                for sj in [-1i64, 1] {
                    let flip = |o: Ordering, s: i64| if s < 0 { o.reverse() } else { o };
                    edge.clear();
                    edge.extend_from_slice(&base);
                    if side_holds(&hs[i], flip(dij, sj)) {
                        edge.push(i);
                    }
                    if side_holds(&hs[j], flip(dij.reverse(), si)) {
                        edge.push(j);
                    }
                    if !edge.is_empty() {
                        visit(&edge, &|| Realizer::Point(vertex_sample(hs, i, j, &v, si, sj)))?;
                    }
                }
            }
        }
    }
    if !any_vertex && n > 0 {
        for q in parallel_samples(hs) {
            let e: Vec<usize> = (0..n).filter(|&m| hs[m].contains(&q)).collect();
            if !e.is_empty() {
                visit(&e, &|| Realizer::Point(q.clone()))?;
            }
        }
    }
    ControlFlow::Continue(())
}

pub(crate) fn covered_by(instance: &Instance, q: &Point) -> Vec<usize> {
    match instance {
        Instance::BottomlessRects(rs) => (0..rs.len()).filter(|&i| rs[i].contains(q)).collect(),
        Instance::BaselineRects(rs) => (0..rs.len()).filter(|&i| rs[i].contains(q)).collect(),
        Instance::HalfPlanes(hs) => (0..hs.len()).filter(|&i| hs[i].contains(q)).collect(),
        Instance::Points(_) => vec![],
    }
}

pub(crate) fn covering_sets_at(instance: &Instance, samples: Vec<Point>) -> Hypergraph {
    let mut h = Hypergraph::new(instance.len());
    for q in samples {
        let edge = covered_by(instance, &q);
        if !edge.is_empty() && !h.contains(&edge) {
            h.insert(edge, Realizer::Point(q));
        }
    }
    h
}

/// Streams the covering set of every cell (with repeats).
pub(crate) fn covering_cells(instance: &Instance, visit: &mut Visit) -> ControlFlow<()> {
    if let Instance::HalfPlanes(hs) = instance {
        return halfplane_cells(hs, visit);
    }
    for q in dual_sample_points(instance) {
        let edge = covered_by(instance, &q);
        if !edge.is_empty() {
            visit(&edge, &|| Realizer::Point(q.clone()))?;
        }
    }
    ControlFlow::Continue(())
}

pub(crate) fn covering_sets(instance: &Instance) -> Hypergraph {
    let mut h = Hypergraph::new(instance.len());
    let _ = covering_cells(instance, &mut |e: &[usize], r: &dyn Fn() -> Realizer| {
        let mut e = e.to_vec();
        e.sort_unstable();
        if !h.contains(&e) {
            h.insert(e, r());
        }
        ControlFlow::Continue(())
    });
    h
}
