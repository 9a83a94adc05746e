//! Half-planes through point-line duality.
//!
//! The half-plane `y > ax + b` becomes the north-looking point `(a, b)`, a
//! point `(c, d)` becomes the line `y = -cx + d`, and membership turns into
//! the directed point seeing the line along its vertical ray.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::geom::{lower_hull_indices, upper_hull_indices, DirectedPoint, HalfPlane, Heading, Point, Side};
use crate::halfplane_primal::color_points_h_k3;
use crate::hypergraph::Coloring;
use crate::instance::{validate_general_position, Family, Instance, InstanceError};
use crate::rational::Rational;

/// Maps `y > ax + b` to the north-looking point `(a, b)` and `y < ax + b`
/// to the south-looking one.
pub fn dualize(hs: &[HalfPlane]) -> Vec<DirectedPoint> {
    hs.iter()
        .map(|h| DirectedPoint {
            x: h.slope.clone(),
            y: h.intercept.clone(),
            orientation: match h.region {
                Side::Above => Heading::North,
                Side::Below => Heading::South,
            },
        })
        .collect()
}

/// The line `y = slope * x + intercept` dual to `p`.
pub fn dual_line(p: &Point) -> (Rational, Rational) {
    (-&p.x, p.y.clone())
}

/// Whether the vertical ray from `d` in its orientation meets the line.
pub fn dual_sees(d: &DirectedPoint, line: &(Rational, Rational)) -> bool {
    let h = &(&line.0 * &d.x) + &line.1;
    match d.orientation {
        Heading::North => d.y < h,
        Heading::South => d.y > h,
    }
}

/// A strict linear constraint `a * s + b * t + c > 0` in two unknowns.
pub type Strict = [Rational; 3];

/// Whether a system of strict linear inequalities in two unknowns has a
/// solution, by Fourier-Motzkin elimination of `t` and then `s`.
pub fn strictly_feasible(cs: &[Strict]) -> bool {
    // t > m * s + q (lower) or t < m * s + q (upper); m, q from -(a s + c) / b
    let mut lower = Vec::new();
    let mut upper = Vec::new();
    // constraints on s alone: u * s + v > 0
    let mut on_s: Vec<(Rational, Rational)> = Vec::new();
    for [a, b, c] in cs {
        match b.signum() {
            Ordering::Equal => on_s.push((a.clone(), c.clone())),
            sign => {
                let bound = (-&(a / b), -&(c / b));
                if sign == Ordering::Greater {
                    lower.push(bound);
                } else {
                    upper.push(bound);
                }
            }
        }
    }
    for (ml, ql) in &lower {
        for (mu, qu) in &upper {
            on_s.push((mu - ml, qu - ql));
        }
    }
    let mut lo: Option<Rational> = None;
    let mut hi: Option<Rational> = None;
    for (u, v) in on_s {
        match u.signum() {
            Ordering::Equal => {
                if v.signum() != Ordering::Greater {
                    return false;
                }
            }
            Ordering::Greater => {
                let x = -&(&v / &u);
                if lo.as_ref().map_or(true, |l| x > *l) {
                    lo = Some(x);
                }
            }
            Ordering::Less => {
                let x = -&(&v / &u);
                if hi.as_ref().map_or(true, |h| x < *h) {
                    hi = Some(x);
                }
            }
        }
    }
    match (lo, hi) {
        (Some(l), Some(h)) => l < h,
        _ => true,
    }
}

/// Constraint on the line `y = s x + t` to see (or miss) `d`.
fn sight(d: &DirectedPoint, see: bool) -> Strict {
    // north d is seen iff s * d.x + t - d.y > 0
    let north = [d.x.clone(), Rational::ONE, -&d.y];
    let looks_up = d.orientation == Heading::North;
    if looks_up == see {
        north
    } else {
        north.map(|v| -&v)
    }
}

/// The lower hull of the north-looking points (`p_path`), the upper hull of
/// the south-looking ones (`q_path`), both x-increasing and holding indices
/// into the dual points, and the edges `(i, j)` between `p_path[i]` and
/// `q_path[j]` for which some line sees these two and no other path vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaterpillarGraph {
    pub p_path: Vec<usize>,
    pub q_path: Vec<usize>,
    pub cross_edges: BTreeSet<(usize, usize)>,
}

impl CaterpillarGraph {
    /// No two cross edges `(i, j)`, `(i', j')` with `i < i'` and `j < j'`;
    /// with the q-path drawn reversed above the p-path, no two edges cross.
    pub fn is_noncrossing(&self) -> bool {
        let e: Vec<&(usize, usize)> = self.cross_edges.iter().collect();
        e.iter().all(|&&(i, j)| e.iter().all(|&&(i2, j2)| !(i < i2 && j < j2)))
    }

    fn vertex_count(&self) -> usize {
        self.p_path.len() + self.q_path.len()
    }

    /// Adjacency over vertices `0..|p|` (p-path) then `|p|..` (q-path).
    fn adjacency(&self) -> Vec<BTreeSet<usize>> {
        let np = self.p_path.len();
        let mut adj = vec![BTreeSet::new(); self.vertex_count()];
        let mut link = |u: usize, v: usize| {
            adj[u].insert(v);
            adj[v].insert(u);
        };
        for i in 1..np {
            link(i - 1, i);
        }
        for j in 1..self.q_path.len() {
            link(np + j - 1, np + j);
        }
        for &(i, j) in &self.cross_edges {
            link(i, np + j);
        }
        adj
    }
}

fn hull_path(duals: &[DirectedPoint], heading: Heading) -> (Vec<usize>, Vec<usize>) {
    let members: Vec<usize> = (0..duals.len()).filter(|&i| duals[i].orientation == heading).collect();
    let pts: Vec<Point> = members.iter().map(|&i| duals[i].point()).collect();
    let hull = match heading {
        Heading::North => lower_hull_indices(&pts),
        Heading::South => upper_hull_indices(&pts),
    };
    (hull.into_iter().map(|i| members[i]).collect(), members)
}

/// Builds the graph whose proper colorings handle every line that sees only
/// path vertices. Cross edges are decided by the strict system for a line
/// seeing `p_i` and `q_j` but not their path neighbors.
pub fn build_caterpillar(duals: &[DirectedPoint]) -> CaterpillarGraph {
    let (p_path, _) = hull_path(duals, Heading::North);
    let (q_path, _) = hull_path(duals, Heading::South);
    let mut cross_edges = BTreeSet::new();
    let around = |path: &[usize], i: usize| -> Vec<Strict> {
        let mut cs = vec![sight(&duals[path[i]], true)];
        if i > 0 {
            cs.push(sight(&duals[path[i - 1]], false));
        }
        if i + 1 < path.len() {
            cs.push(sight(&duals[path[i + 1]], false));
        }
        cs
    };
    for i in 0..p_path.len() {
        let ci = around(&p_path, i);
        for j in 0..q_path.len() {
            let mut cs = ci.clone();
            cs.extend(around(&q_path, j));
            if strictly_feasible(&cs) {
                cross_edges.insert((i, j));
            }
        }
    }
    CaterpillarGraph { p_path, q_path, cross_edges }
}

/// Three-colors the graph by repeatedly removing a vertex of degree at most
/// two and coloring greedily in reverse order.
fn peel_color(g: &CaterpillarGraph) -> Vec<usize> {
    let adj = g.adjacency();
    let n = adj.len();
    let mut degree: Vec<usize> = adj.iter().map(|a| a.len()).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .find(|&v| !removed[v] && degree[v] <= 2)
            .expect("every subgraph has a vertex of degree at most two");
        removed[v] = true;
        order.push(v);
        for &u in &adj[v] {
            if !removed[u] {
                degree[u] -= 1;
            }
        }
    }
    let mut color = vec![usize::MAX; n];
    for &v in order.iter().rev() {
        color[v] = (0..3).find(|&c| adj[v].iter().all(|&u| color[u] != c)).unwrap();
    }
    color
}

/// Path vertices such that every line seeing `d` sees one of them: the path
/// vertex with the same x if there is one, otherwise the two consecutive
/// vertices bracketing `d` in x.
fn bracket(duals: &[DirectedPoint], path: &[usize], d: &DirectedPoint) -> (usize, usize) {
    let i = path.partition_point(|&v| duals[v].x < d.x);
    if i < path.len() && duals[path[i]].x == d.x {
        return (path[i], path[i]);
    }
    assert!(i > 0 && i < path.len(), "non-hull point outside its hull's x-range");
    (path[i - 1], path[i])
}

fn validate(hs: &[HalfPlane]) -> Result<Vec<DirectedPoint>, InstanceError> {
    validate_general_position(&Instance::HalfPlanes(hs.to_vec()), Family::HalfPlanes)?;
    Ok(dualize(hs))
}

/// Three colors such that every point of the plane covered by two or more of
/// the half-planes sees two colors.
pub fn color_halfplanes_k2(hs: &[HalfPlane]) -> Result<Coloring, InstanceError> {
    let duals = validate(hs)?;
    let g = build_caterpillar(&duals);
    debug_assert!(g.is_noncrossing());
    let path_colors = peel_color(&g);
    let mut colors = vec![usize::MAX; hs.len()];
    for (i, &v) in g.p_path.iter().chain(&g.q_path).enumerate() {
        colors[v] = path_colors[i];
    }
    for v in 0..hs.len() {
        if colors[v] != usize::MAX {
            continue;
        }
        let path = match duals[v].orientation {
            Heading::North => &g.p_path,
            Heading::South => &g.q_path,
        };
        let (a, b) = bracket(&duals, path, &duals[v]);
        colors[v] = (0..3).find(|&c| c != colors[a] && c != colors[b]).unwrap();
    }
    Ok(Coloring::new(3, colors))
}

/// Two colors such that every point of the plane covered by four or more of
/// the half-planes sees both. North duals use the point coloring for three,
/// south duals the same with the colors swapped.
pub fn color_halfplanes_k4(hs: &[HalfPlane]) -> Result<Coloring, InstanceError> {
    let duals = validate(hs)?;
    let mut colors = vec![0; hs.len()];
    for (heading, flip) in [(Heading::North, false), (Heading::South, true)] {
        let members: Vec<usize> = (0..duals.len()).filter(|&i| duals[i].orientation == heading).collect();
        let pts: Vec<Point> = members.iter().map(|&i| duals[i].point()).collect();
        let side = color_points_h_k3(&pts)?;
        for (&i, &c) in members.iter().zip(&side.colors) {
            colors[i] = if flip { 1 - c } else { c };
        }
    }
    Ok(Coloring::new(2, colors))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{enumerate_dual_halfplane, verify_instance};
    use crate::testgen;
    use proptest::prelude::*;

    fn valid(hs: &[HalfPlane], col: &Coloring, k: usize) -> bool {
        verify_instance(&Instance::HalfPlanes(hs.to_vec()), Family::HalfPlanes, col, k).unwrap().is_valid()
    }

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn dualize_examples() {
        let d = dualize(&[HalfPlane::new(2, 1, Side::Above)]);
        assert_eq!((d[0].x.clone(), d[0].y.clone(), d[0].orientation), (r(2, 1), r(1, 1), Heading::North));
        let h = HalfPlane::new(0, 0, Side::Above);
        let p = Point::new(1, 1);
        assert!(h.contains(&p));
        assert!(dual_sees(&dualize(&[h])[0], &dual_line(&p)));
    }

    proptest! {
        #[test]
        fn membership_survives_duality(a in -50i64..50, b in -50i64..50, above in any::<bool>(),
                                       x in -50i64..50, y in -50i64..50, den in 1i64..7) {
            let side = if above { Side::Above } else { Side::Below };
            let h = HalfPlane::new(r(a, den), b, side);
            let p = Point::new(r(x, den), y);
            prop_assert_eq!(h.contains(&p), dual_sees(&dualize(&[h])[0], &dual_line(&p)));
        }
    }

    #[test]
    fn strict_lp_examples() {
        let c = |a: i64, b: i64, k: i64| [Rational::from_integer(a), Rational::from_integer(b), Rational::from_integer(k)];
        assert!(strictly_feasible(&[]));
        // s > 0, s < 1
        assert!(strictly_feasible(&[c(1, 0, 0), c(-1, 0, 1)]));
        // s > 0, s < 0
        assert!(!strictly_feasible(&[c(1, 0, 0), c(-1, 0, 0)]));
        // t > s, t < s
        assert!(!strictly_feasible(&[c(-1, 1, 0), c(1, -1, 0)]));
        // t > s, t < s + 1, s > 5
        assert!(strictly_feasible(&[c(-1, 1, 0), c(1, -1, 1), c(1, 0, -5)]));
        // t > 0, t < -s, s > 0
        assert!(!strictly_feasible(&[c(0, 1, 0), c(-1, -1, 0), c(1, 0, 0)]));
        assert!(!strictly_feasible(&[c(0, 0, 0)]));
    }

    #[test]
    fn strict_lp_matches_grid_search() {
        // a grid of rational candidates finds every feasible system whose
        // solution set contains a grid point; infeasible systems never pass
        let mut rng = testgen::rng(17);
        use rand::Rng;
        for _ in 0..300 {
            let m = rng.gen_range(1..5);
            let cs: Vec<Strict> = (0..m)
                .map(|_| [0, 0, 0].map(|_: i32| Rational::from_integer(rng.gen_range(-4..=4))))
                .collect();
            let holds = |s: &Rational, t: &Rational| {
                cs.iter().all(|[a, b, c]| (&(&(a * s) + &(b * t)) + c).signum() == Ordering::Greater)
            };
            let grid_hit = (-40..=40).any(|i| (-40..=40).any(|j| holds(&r(i, 4), &r(j, 4))));
            if grid_hit {
                assert!(strictly_feasible(&cs), "{cs:?}");
            }
            if !strictly_feasible(&cs) {
                assert!(!grid_hit);
            }
        }
    }

    #[test]
    fn single_cross_edge() {
        let duals = dualize(&[HalfPlane::new(0, 0, Side::Above), HalfPlane::new(0, 5, Side::Below)]);
        let g = build_caterpillar(&duals);
        assert_eq!(g.cross_edges.into_iter().collect::<Vec<_>>(), vec![(0, 0)]);
    }

    #[test]
    fn no_cross_edges_when_lines_cannot_fit() {
        // a line above the north point and below the south one at the same x
        let hs = [HalfPlane::new(0, 10, Side::Above), HalfPlane::new(0, -10, Side::Below)];
        let g = build_caterpillar(&dualize(&hs));
        assert!(g.cross_edges.is_empty());
        assert_eq!(cross_edges_by_oracle(&hs, &g), g.cross_edges);
    }

    /// Cross edges read off the hyperedges of the path half-planes alone.
    fn cross_edges_by_oracle(hs: &[HalfPlane], g: &CaterpillarGraph) -> BTreeSet<(usize, usize)> {
        let path: Vec<usize> = g.p_path.iter().chain(&g.q_path).copied().collect();
        let sub: Vec<HalfPlane> = path.iter().map(|&i| hs[i].clone()).collect();
        let h = enumerate_dual_halfplane(&sub).unwrap();
        let np = g.p_path.len();
        let mut out = BTreeSet::new();
        for i in 0..np {
            for j in 0..g.q_path.len() {
                if h.contains(&[i, np + j]) {
                    out.insert((i, j));
                }
            }
        }
        out
    }

    #[test]
    fn three_halfplane_gadget() {
        let hs = [
            HalfPlane::new(1, 0, Side::Above),
            HalfPlane::new(-1, 0, Side::Above),
            HalfPlane::new(0, 1, Side::Below),
        ];
        let col = color_halfplanes_k2(&hs).unwrap();
        assert_eq!(col.used(), 3);
        assert!(valid(&hs, &col, 2));
        assert_eq!(color_halfplanes_k2(&hs[..1]).unwrap().colors, vec![0]);
    }

    #[test]
    fn one_sided_families() {
        let north: Vec<HalfPlane> =
            [(0, 0), (1, 3), (2, 1), (3, 7), (4, 3), (-2, 5)].iter().map(|&(a, b)| HalfPlane::new(a, b, Side::Above)).collect();
        let g = build_caterpillar(&dualize(&north));
        assert!(g.q_path.is_empty() && g.cross_edges.is_empty());
        assert!(valid(&north, &color_halfplanes_k2(&north).unwrap(), 2));
        let south: Vec<HalfPlane> = north.iter().map(|h| HalfPlane::new(h.slope.clone(), h.intercept.clone(), Side::Below)).collect();
        let col = color_halfplanes_k4(&south).unwrap();
        let pts: Vec<Point> = dualize(&south).iter().map(|d| d.point()).collect();
        let plain = color_points_h_k3(&pts).unwrap();
        assert_eq!(col.colors, plain.colors.iter().map(|c| 1 - c).collect::<Vec<_>>());
        assert!(valid(&south, &col, 4));
        assert!(valid(&north[..3], &color_halfplanes_k4(&north[..3]).unwrap(), 4));
    }

    #[test]
    fn random_families() {
        for seed in 0..100 {
            let n = 1 + (seed as usize * 7) % 40;
            let Instance::HalfPlanes(hs) = testgen::instance(seed, Family::HalfPlanes, n, 30) else { unreachable!() };
            let duals = dualize(&hs);
            let g = build_caterpillar(&duals);
            assert!(g.is_noncrossing(), "seed {seed}");
            if n <= 20 {
                assert_eq!(cross_edges_by_oracle(&hs, &g), g.cross_edges, "seed {seed}");
            }
            assert!(valid(&hs, &color_halfplanes_k2(&hs).unwrap(), 2), "k2 seed {seed}");
            assert!(valid(&hs, &color_halfplanes_k4(&hs).unwrap(), 4), "k4 seed {seed}");
        }
    }
}
