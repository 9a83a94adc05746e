//! Structured enumeration of primal hyperedges.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::ControlFlow;

use super::Visit;
use crate::geom::{orient, BaselineRect, BottomlessRect, HalfPlane, Orientation, Point, Side};
use crate::hypergraph::{ColorCounts, Coloring, Realizer, Verdict};
use crate::rational::Rational;

fn by_x(points: &[Point]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&i, &j| points[i].x.cmp(&points[j].x));
    order
}

/// An x-value strictly between the window start and its left neighbor.
fn left_of(points: &[Point], order: &[usize], l: usize) -> Rational {
    let x = &points[order[l]].x;
    if l == 0 {
        x - &Rational::ONE
    } else {
        points[order[l - 1]].x.midpoint(x)
    }
}

fn right_of(points: &[Point], order: &[usize], r: usize) -> Rational {
    let x = &points[order[r]].x;
    match order.get(r + 1) {
        Some(&next) => x.midpoint(&points[next].x),
        None => x + &Rational::ONE,
    }
}

/// A value strictly between `values[m]` and the next entry, or above the last.
fn just_above(points: &[Point], sorted_by_y: &[usize], m: usize) -> Rational {
    let y = &points[sorted_by_y[m]].y;
    match sorted_by_y.get(m + 1) {
        Some(&next) => y.midpoint(&points[next].y),
        None => y + &Rational::ONE,
    }
}

fn insert_by_y(points: &[Point], window: &mut Vec<usize>, v: usize) {
    let pos = window.partition_point(|&w| points[w].y < points[v].y);
    window.insert(pos, v);
}

/// Every bottomless-rectangle cut is an x-window of consecutive points
/// intersected with a prefix of the window in y-order.
pub(crate) fn bottomless_cuts(points: &[Point], size: Option<usize>, visit: &mut Visit) -> ControlFlow<()> {
    let n = points.len();
    let order = by_x(points);
    for l in 0..n {
        let a = left_of(points, &order, l);
        let mut window = Vec::with_capacity(n - l);
        for r in l..n {
            insert_by_y(points, &mut window, order[r]);
            let b = right_of(points, &order, r);
            let thresholds = match size {
                Some(k) if k >= 1 && k <= window.len() => k - 1..k,
                Some(_) => 0..0,
                None => 0..window.len(),
            };
            for m in thresholds {
                let w = &window;
                let realize = || {
                    Realizer::Bottomless(BottomlessRect { a: a.clone(), b: b.clone(), c: just_above(points, w, m) })
                };
                visit(&window[..=m], &realize)?;
            }
        }
    }
    ControlFlow::Continue(())
}

/// Conflict-free check over all bottomless-rectangle cuts, tallying colors
/// incrementally along each window's y-order.
pub(crate) fn bottomless_cf(points: &[Point], col: &Coloring, k: usize) -> Verdict {
    let n = points.len();
    let order = by_x(points);
    let mut counts = ColorCounts::new(col.palette, k);
    for l in 0..n {
        let mut window = Vec::with_capacity(n - l);
        for r in l..n {
            insert_by_y(points, &mut window, order[r]);
            let mut bad = None;
            for (m, &v) in window.iter().enumerate() {
                counts.add(col.colors[v]);
                if bad.is_none() && !counts.has_rare() {
                    bad = Some(m);
                }
            }
            window.iter().for_each(|&v| counts.remove(col.colors[v]));
            if let Some(m) = bad {
                let mut edge = window[..=m].to_vec();
                edge.sort_unstable();
                let rect = BottomlessRect {
                    a: left_of(points, &order, l),
                    b: right_of(points, &order, r),
                    c: just_above(points, &window, m),
                };
                return Verdict::invalid(edge, Realizer::Bottomless(rect));
            }
        }
    }
    Verdict::VALID
}

/// Cuts by rectangles crossing `y = 0`: an x-window, the lowest few points
/// above the line and the highest few below it.
pub(crate) fn baseline_cuts(points: &[Point], size: Option<usize>, visit: &mut Visit) -> ControlFlow<()> {
    let n = points.len();
    let order = by_x(points);
    let mut buf = Vec::new();
    for l in 0..n {
        let a = left_of(points, &order, l);
        // `above` ascending in y; `below` ascending in -y
        let mut above: Vec<usize> = Vec::new();
        let mut below: Vec<usize> = Vec::new();
        for r in l..n {
            let v = order[r];
            if points[v].y.signum() == Ordering::Greater {
                insert_by_y(points, &mut above, v);
            } else {
                let pos = below.partition_point(|&w| points[w].y > points[v].y);
                below.insert(pos, v);
            }
            let b = right_of(points, &order, r);
            for i in 0..=above.len() {
                let js = match size {
                    Some(k) if k < i || k - i > below.len() => continue,
                    Some(k) => k - i..=k - i,
                    None => 0..=below.len(),
                };
                for j in js {
                    if i + j == 0 {
                        continue;
                    }
                    buf.clear();
                    buf.extend_from_slice(&above[..i]);
                    buf.extend_from_slice(&below[..j]);
                    let (above, below) = (&above, &below);
                    let realize = || {
                        let top = match (i, above.get(i)) {
                            (0, Some(&w)) => Rational::ZERO.midpoint(&points[w].y),
                            (0, None) => Rational::ONE,
                            (_, Some(&w)) => points[above[i - 1]].y.midpoint(&points[w].y),
                            (_, None) => &points[above[i - 1]].y + &Rational::ONE,
                        };
                        let bottom = match (j, below.get(j)) {
                            (0, Some(&w)) => Rational::ZERO.midpoint(&points[w].y),
                            (0, None) => -Rational::ONE,
                            (_, Some(&w)) => points[below[j - 1]].y.midpoint(&points[w].y),
                            (_, None) => &points[below[j - 1]].y - &Rational::ONE,
                        };
                        Realizer::Baseline(BaselineRect { a: a.clone(), b: b.clone(), bottom, top })
                    };
                    visit(&buf, &realize)?;
                }
            }
        }
    }
    ControlFlow::Continue(())
}

fn upper_half(v: &Point, pivot: &Point) -> bool {
    v.y > pivot.y || (v.y == pivot.y && v.x > pivot.x)
}

/// The other points sorted counter-clockwise around `pivot`, starting from
/// the direction of the positive x-axis.
fn angular_order(points: &[Point], pivot: usize) -> Vec<usize> {
    let p = &points[pivot];
    let mut order: Vec<usize> = (0..points.len()).filter(|&i| i != pivot).collect();
    order.sort_by(|&a, &b| {
        let (qa, qb) = (&points[a], &points[b]);
        upper_half(qb, p).cmp(&upper_half(qa, p)).then_with(|| match orient(p, qa, qb) {
            Orientation::Left => Ordering::Less,
            Orientation::Right => Ordering::Greater,
            Orientation::Collinear => Ordering::Equal,
        })
    });
    order
}

/// For each position `qi` of the angular order around `pivot`, the end `e`
/// (exclusive, counted cyclically past the array) of the run `qi+1..e` of
/// points strictly left of the directed line `pivot -> order[qi]`.
fn left_runs(points: &[Point], pivot: usize, order: &[usize]) -> Vec<usize> {
    let m = order.len();
    let p = &points[pivot];
    let mut ends = Vec::with_capacity(m);
    let mut j = 0;
    for qi in 0..m {
        j = j.max(qi + 1);
        let q = &points[order[qi]];
        while j < qi + m && orient(p, q, &points[order[j % m]]) == Orientation::Left {
            j += 1;
        }
        ends.push(j);
    }
    ends
}

fn dot(n: &(Rational, Rational), v: &Point) -> Rational {
    &(&n.0 * &v.x) + &(&n.1 * &v.y)
}

/// A non-vertical half-plane containing exactly the points with
/// `<normal, x> > offset`; no point may lie on that boundary.
pub(crate) fn halfplane_of(normal: (Rational, Rational), offset: Rational, points: &[Point]) -> HalfPlane {
    let (nx, mut ny) = normal;
    if ny.is_zero() {
        // tilt the vertical boundary without crossing a point
        let n = (nx.clone(), Rational::ZERO);
        let tilt = points
            .iter()
            .map(|p| (&dot(&n, p) - &offset).abs() / (&p.y.abs() + &Rational::ONE))
            .min()
            .unwrap_or(Rational::ONE);
        ny = tilt / Rational::from_integer(2);
    }
    let slope = -&(&nx / &ny);
    let intercept = &offset / &ny;
    let region = if ny.signum() == Ordering::Greater { Side::Above } else { Side::Below };
    HalfPlane { slope, intercept, region }
}

/// A half-plane containing the points strictly left of the directed line
/// `p -> q`, together with `p` and/or `q` as requested.
pub fn halfplane_realizer(points: &[Point], p: usize, q: usize, take_p: bool, take_q: bool) -> HalfPlane {
    let (pp, qq) = (&points[p], &points[q]);
    let d = (&qq.x - &pp.x, &qq.y - &pp.y);
    let n = (-&d.1, d.0.clone());
    let others = || (0..points.len()).filter(move |&i| i != p && i != q).map(|i| &points[i]);
    let two = Rational::from_integer(2);
    if take_p == take_q {
        let base = dot(&n, pp);
        let gap = others().map(|x| (&dot(&n, x) - &base).abs()).min().unwrap_or(Rational::ONE) / two.clone();
        let offset = if take_p { &base - &gap } else { &base + &gap };
        halfplane_of(n, offset, points)
    } else {
        let mid = Point { x: pp.x.midpoint(&qq.x), y: pp.y.midpoint(&qq.y) };
        let rel = |x: &Point| Point { x: &x.x - &mid.x, y: &x.y - &mid.y };
        let eta = others()
            .map(|x| {
                let r = rel(x);
                dot(&n, &r).abs() / (&dot(&d, &r).abs() + &Rational::ONE)
            })
            .min()
            .unwrap_or(Rational::ONE)
            / two;
        let eta = if take_p { -eta } else { eta };
        let normal = (&n.0 + &(&eta * &d.0), &n.1 + &(&eta * &d.1));
        let offset = dot(&normal, &mid);
        halfplane_of(normal, offset, points)
    }
}

fn lone_point_realizer(p: &Point) -> Realizer {
    Realizer::HalfPlane(HalfPlane { slope: Rational::ZERO, intercept: &p.y - &Rational::ONE, region: Side::Above })
}

/// Every half-plane cut is, for some ordered pair `(p, q)`, the set of
/// points strictly left of `p -> q` plus a subset of `{p, q}`.
pub(crate) fn halfplane_cuts(points: &[Point], size: Option<usize>, visit: &mut Visit) -> ControlFlow<()> {
    let n = points.len();
    if n == 1 {
        if size.map_or(true, |k| k == 1) {
            visit(&[0], &|| lone_point_realizer(&points[0]))?;
        }
        return ControlFlow::Continue(());
    }
    let mut buf = Vec::new();
    for p in 0..n {
        let order = angular_order(points, p);
        let m = order.len();
        let ends = left_runs(points, p, &order);
        for qi in 0..m {
            let q = order[qi];
            let len = ends[qi] - qi - 1;
            if size.is_some_and(|k| len > k || len + 2 < k) {
                continue;
            }
            for (take_p, take_q) in [(false, false), (true, false), (false, true), (true, true)] {
                let total = len + take_p as usize + take_q as usize;
                if total == 0 || size.is_some_and(|k| total != k) {
                    continue;
                }
                buf.clear();
                buf.extend((qi + 1..ends[qi]).map(|j| order[j % m]));
                if take_p {
                    buf.push(p);
                }
                if take_q {
                    buf.push(q);
                }
                visit(&buf, &|| Realizer::HalfPlane(halfplane_realizer(points, p, q, take_p, take_q)))?;
            }
        }
    }
    ControlFlow::Continue(())
}

/// Conflict-free check over all half-plane cuts with a rotational sweep
/// around each point, tallying the left run incrementally.
pub(crate) fn halfplane_cf(points: &[Point], col: &Coloring, k: usize) -> Verdict {
    let n = points.len();
    if n == 1 {
        return Verdict::VALID;
    }
    let mut counts = ColorCounts::new(col.palette, k);
    for p in 0..n {
        let order = angular_order(points, p);
        let m = order.len();
        let ends = left_runs(points, p, &order);
        let (mut s, mut e) = (1, 1);
        for qi in 0..m {
            let q = order[qi];
            while e < ends[qi] {
                counts.add(col.colors[order[e % m]]);
                e += 1;
            }
            while s < qi + 1 {
                counts.remove(col.colors[order[s % m]]);
                s += 1;
            }
            let len = e - s;
            for (take_p, take_q) in [(false, false), (true, false), (false, true), (true, true)] {
                if len + take_p as usize + take_q as usize == 0 {
                    continue;
                }
                if take_p {
                    counts.add(col.colors[p]);
                }
                if take_q {
                    counts.add(col.colors[q]);
                }
                let ok = counts.has_rare();
                if take_p {
                    counts.remove(col.colors[p]);
                }
                if take_q {
                    counts.remove(col.colors[q]);
                }
                if !ok {
                    let mut edge: Vec<usize> = (s..e).map(|j| order[j % m]).collect();
                    edge.extend(take_p.then_some(p));
                    edge.extend(take_q.then_some(q));
                    edge.sort_unstable();
                    let h = halfplane_realizer(points, p, q, take_p, take_q);
                    return Verdict::invalid(edge, Realizer::HalfPlane(h));
                }
            }
        }
        while s < e {
            counts.remove(col.colors[order[s % m]]);
            s += 1;
        }
    }
    Verdict::VALID
}
