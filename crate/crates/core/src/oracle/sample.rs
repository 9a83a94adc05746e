//! Definition-level samplers: candidate regions (primal) or candidate points
//! (dual) drawn from a grid, with hyperedges read off by membership alone.

use alloc::vec::Vec;
use core::cmp::Ordering;

use super::dual::covering_sets_at;
use crate::geom::{BaselineRect, BottomlessRect, HalfPlane, Point};
use crate::hypergraph::{Hypergraph, Realizer};
use crate::instance::{Family, Instance};
use crate::rational::Rational;

fn sorted_distinct(mut v: Vec<Rational>) -> Vec<Rational> {
    v.sort();
    v.dedup();
    v
}

/// A value below, between each consecutive pair of, and above `values`.
fn gaps(values: Vec<Rational>) -> Vec<Rational> {
    let v = sorted_distinct(values);
    let Some(first) = v.first() else { return Vec::new() };
    let mut out = Vec::with_capacity(v.len() + 1);
    out.push(first - &Rational::ONE);
    out.extend(v.windows(2).map(|w| w[0].midpoint(&w[1])));
    out.push(&v[v.len() - 1] + &Rational::ONE);
    out
}

/// Like [`gaps`] but with two values, at thirds, inside each gap.
fn thirds(values: Vec<Rational>) -> Vec<Rational> {
    let v = sorted_distinct(values);
    let Some(first) = v.first() else { return Vec::new() };
    let three = Rational::from_integer(3);
    let mut out = Vec::with_capacity(2 * v.len());
    out.push(first - &Rational::ONE);
    for w in v.windows(2) {
        let step = &(&w[1] - &w[0]) / &three;
        out.push(&w[0] + &step);
        out.push(&w[1] - &step);
    }
    out.push(&v[v.len() - 1] + &Rational::ONE);
    out
}

fn members(points: &[Point], inside: impl Fn(&Point) -> bool) -> Vec<usize> {
    (0..points.len()).filter(|&i| inside(&points[i])).collect()
}

pub fn sample_primal_bottomless(points: &[Point]) -> Hypergraph {
    let xs = gaps(points.iter().map(|p| p.x.clone()).collect());
    let cs = gaps(points.iter().map(|p| p.y.clone()).collect());
    let mut h = Hypergraph::new(points.len());
    for (ia, a) in xs.iter().enumerate() {
        for b in &xs[ia + 1..] {
            for c in &cs {
                let r = BottomlessRect { a: a.clone(), b: b.clone(), c: c.clone() };
                let e = members(points, |p| r.contains(p));
                if !e.is_empty() && !h.contains(&e) {
                    h.insert(e, Realizer::Bottomless(r));
                }
            }
        }
    }
    h
}

pub fn sample_primal_baseline(points: &[Point]) -> Hypergraph {
    let xs = gaps(points.iter().map(|p| p.x.clone()).collect());
    let ys = gaps(points.iter().map(|p| p.y.clone()).chain([Rational::ZERO]).collect());
    let tops: Vec<&Rational> = ys.iter().filter(|y| y.signum() == Ordering::Greater).collect();
    let bottoms: Vec<&Rational> = ys.iter().filter(|y| y.signum() == Ordering::Less).collect();
    let mut h = Hypergraph::new(points.len());
    for (ia, a) in xs.iter().enumerate() {
        for b in &xs[ia + 1..] {
            for &top in &tops {
                for &bottom in &bottoms {
                    let r = BaselineRect { a: a.clone(), b: b.clone(), bottom: bottom.clone(), top: top.clone() };
                    let e = members(points, |p| r.contains(p));
                    if !e.is_empty() && !h.contains(&e) {
                        h.insert(e, Realizer::Baseline(r));
                    }
                }
            }
        }
    }
    h
}

fn half(v: &(Rational, Rational)) -> u8 {
    match (v.1.signum(), v.0.signum()) {
        (Ordering::Greater, _) | (Ordering::Equal, Ordering::Greater) => 0,
        _ => 1,
    }
}

fn cross(u: &(Rational, Rational), v: &(Rational, Rational)) -> Rational {
    &(&u.0 * &v.1) - &(&u.1 * &v.0)
}

fn by_angle(u: &(Rational, Rational), v: &(Rational, Rational)) -> Ordering {
    half(u).cmp(&half(v)).then_with(|| cross(v, u).signum())
}

/// Half-planes `<u, x> < t` for directions `u` strictly between consecutive
/// critical directions (normals of lines through two points); every prefix
/// of the points sorted by `<u, x>` is a cut.
pub fn sample_primal_halfplane(points: &[Point]) -> Hypergraph {
    let n = points.len();
    let mut h = Hypergraph::new(n);
    let mut dirs: Vec<(Rational, Rational)> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let (dx, dy) = (&points[j].x - &points[i].x, &points[j].y - &points[i].y);
            dirs.push((-&dy, dx.clone()));
            dirs.push((dy, -&dx));
        }
    }
    dirs.sort_by(by_angle);
    dirs.dedup_by(|a, b| by_angle(a, b) == Ordering::Equal);
    let l1 = |v: &(Rational, Rational)| &v.0.abs() + &v.1.abs();
    let mut probes: Vec<(Rational, Rational)> = Vec::new();
    for (i, u) in dirs.iter().enumerate() {
        let v = &dirs[(i + 1) % dirs.len()];
        if cross(u, v).is_zero() {
            // opposite directions: take the quarter turn after u
            probes.push((-&u.1, u.0.clone()));
        } else {
            let (nu, nv) = (l1(u), l1(v));
            probes.push((&(&u.0 / &nu) + &(&v.0 / &nv), &(&u.1 / &nu) + &(&v.1 / &nv)));
        }
    }
    if probes.is_empty() {
        probes.push((Rational::ZERO, Rational::ONE));
    }
    for u in probes {
        let proj: Vec<Rational> = points.iter().map(|p| &(&u.0 * &p.x) + &(&u.1 * &p.y)).collect();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| proj[a].cmp(&proj[b]));
        for len in 1..=n {
            let t = match order.get(len) {
                Some(&next) => proj[order[len - 1]].midpoint(&proj[next]),
                None => &proj[order[n - 1]] + &Rational::ONE,
            };
            let mut e = order[..len].to_vec();
            e.sort_unstable();
            if !h.contains(&e) {
                h.insert(e, Realizer::HalfPlane(cut_to_halfplane(&u, &t, points)));
            }
        }
    }
    h
}

/// The half-plane `<u, x> < t`, expressed with a non-vertical boundary.
fn cut_to_halfplane(u: &(Rational, Rational), t: &Rational, points: &[Point]) -> HalfPlane {
    super::primal::halfplane_of((-&u.0, -&u.1), -t, points)
}

pub fn sample_dual(instance: &Instance) -> Hypergraph {
    let samples = match instance {
        Instance::BottomlessRects(rs) => {
            let xs = thirds(rs.iter().flat_map(|r| [r.a.clone(), r.b.clone()]).collect());
            let ys = thirds(rs.iter().map(|r| r.c.clone()).collect());
            product(&xs, &ys)
        }
        Instance::BaselineRects(rs) => {
            let xs = thirds(rs.iter().flat_map(|r| [r.a.clone(), r.b.clone()]).collect());
            let ys = thirds(rs.iter().flat_map(|r| [r.top.clone(), r.bottom.clone()]).chain([Rational::ZERO]).collect());
            product(&xs, &ys)
        }
        Instance::HalfPlanes(hs) => slab_samples(hs),
        Instance::Points(_) => Vec::new(),
    };
    covering_sets_at(instance, samples)
}

fn product(xs: &[Rational], ys: &[Rational]) -> Vec<Point> {
    xs.iter().flat_map(|x| ys.iter().map(move |y| Point { x: x.clone(), y: y.clone() })).collect()
}

/// Vertical slab decomposition: one x between consecutive vertex
/// x-coordinates, then one y between consecutive lines at that x.
fn slab_samples(hs: &[HalfPlane]) -> Vec<Point> {
    let mut vx = Vec::new();
    for i in 0..hs.len() {
        for j in i + 1..hs.len() {
            if hs[i].slope != hs[j].slope {
                vx.push(&(&hs[j].intercept - &hs[i].intercept) / &(&hs[i].slope - &hs[j].slope));
            }
        }
    }
    let xs = if vx.is_empty() { alloc::vec![Rational::ZERO] } else { gaps(vx) };
    let mut out = Vec::new();
    for x in xs {
        let ys = gaps(hs.iter().map(|h| h.boundary_at(&x)).collect());
        out.extend(ys.into_iter().map(|y| Point { x: x.clone(), y }));
    }
    out
}

/// Naive enumeration for any setting.
pub fn sample(instance: &Instance, family: Family) -> Hypergraph {
    match (instance, family) {
        (Instance::Points(p), Family::BottomlessPoints) => sample_primal_bottomless(p),
        (Instance::Points(p), Family::BaselinePoints) => sample_primal_baseline(p),
        (Instance::Points(p), _) => sample_primal_halfplane(p),
        _ => sample_dual(instance),
    }
}
