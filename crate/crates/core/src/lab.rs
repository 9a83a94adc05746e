//! Exhaustive chromatic-number search, the small constructions that force
//! extra colors, and conflict-free colorings peeled off proper ones.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;

use crate::dispatch::{color, route, ColorError};
use crate::geom::{BaselineRect, BottomlessRect, HalfPlane, Point, Side};
use crate::hypergraph::{verify_kproper, Coloring, Hypergraph};
use crate::instance::{Family, Instance, InstanceError};
use crate::oracle::enumerate;
use crate::rational::Rational;

/// Largest number of canonical colorings a search may visit.
pub const SEARCH_BUDGET: u128 = 1_000_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BudgetExceeded {
    pub vertices: usize,
    pub colors: usize,
}

impl fmt::Display for BudgetExceeded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "search over {} vertices with up to {} colors exceeds the budget", self.vertices, self.colors)
    }
}

impl core::error::Error for BudgetExceeded {}

/// Number of colorings of `n` vertices with at most `c` colors up to
/// renaming colors: the sum of Stirling numbers `S(n, j)`, `j <= c`.
pub fn canonical_colorings(n: usize, c: usize) -> u128 {
    // s[j] = S(i, j) for the current i
    let mut s = vec![0u128; c + 1];
    s[0] = 1;
    for _ in 0..n {
        for j in (1..=c).rev() {
            s[j] = s[j].saturating_mul(j as u128).saturating_add(s[j - 1]);
        }
        s[0] = 0;
    }
    s.iter().fold(0u128, |a, &b| a.saturating_add(b))
}

struct Search<'a> {
    edges_by_last: &'a [Vec<&'a [usize]>],
    colors: Vec<usize>,
    palette: usize,
}

impl Search<'_> {
    /// Colors vertices `v..`; each vertex gets a used color or the next new one.
    fn extend(&mut self, v: usize, used: usize) -> bool {
        if v == self.colors.len() {
            return true;
        }
        for c in 0..(used + 1).min(self.palette) {
            self.colors[v] = c;
            let mono = self.edges_by_last[v].iter().any(|e| e.iter().all(|&u| self.colors[u] == c));
            if !mono && self.extend(v + 1, used.max(c + 1)) {
                return true;
            }
        }
        false
    }
}

/// The smallest `c <= max_colors` admitting a `k`-proper coloring of `h`,
/// returned as a witness coloring with palette `c`, or `None` if there is
/// none. Colorings are searched in canonical form (each new color is the
/// next unused one) and a branch is cut as soon as a hyperedge with at least
/// `k` vertices is fully colored with one color.
pub fn exact_chromatic(h: &Hypergraph, k: usize, max_colors: usize) -> Result<Option<Coloring>, BudgetExceeded> {
    let n = h.vertex_count();
    if canonical_colorings(n, max_colors) > SEARCH_BUDGET {
        return Err(BudgetExceeded { vertices: n, colors: max_colors });
    }
    let mut edges_by_last: Vec<Vec<&[usize]>> = vec![Vec::new(); n];
    for e in h.edges().filter(|e| e.len() >= k.max(1)) {
        edges_by_last[*e.last().unwrap()].push(e);
    }
    for c in 1..=max_colors {
        let mut s = Search { edges_by_last: &edges_by_last, colors: vec![0; n], palette: c };
        if s.extend(0, 0) {
            return Ok(Some(Coloring::new(c, s.colors)));
        }
    }
    Ok(None)
}

/// [`exact_chromatic`] without canonical forms or pruning: every coloring
/// with `c` colors is checked against the whole hypergraph.
pub fn reference_chromatic(h: &Hypergraph, k: usize, max_colors: usize) -> Option<usize> {
    let n = h.vertex_count();
    (1..=max_colors).find(|&c| {
        let total = (c as u64).pow(n as u32);
        (0..total).any(|mut code| {
            let colors: Vec<usize> = (0..n)
                .map(|_| {
                    let d = (code % c as u64) as usize;
                    code /= c as u64;
                    d
                })
                .collect();
            verify_kproper(h, &Coloring::new(c, colors), k).unwrap().is_valid()
        })
    })
}

/// `ceil(log n / log(c / (c - 1))) + 1`: the number of colors of a
/// conflict-free coloring peeled off `c`-colorings.
pub fn cf_bound(n: usize, c: usize) -> usize {
    assert!(c >= 2, "need at least two colors");
    // smallest t with c^t >= n (c-1)^t
    let (mut lhs, mut rhs) = (BigUint::from(1u32), BigUint::from(n));
    let mut t = 0;
    while lhs < rhs {
        lhs *= c;
        rhs *= c - 1;
        t += 1;
    }
    t + 1
}

/// Conflict-free coloring with parameter `k - 1`: repeatedly color the
/// remaining objects `k`-properly, give a largest color class (the smallest
/// color among equal sizes) the next fresh color and remove it.
pub fn cf_from_proper(instance: &Instance, family: Family, k: usize) -> Result<Coloring, ColorError> {
    route(family, k)?;
    let n = instance.len();
    let mut out = vec![usize::MAX; n];
    let mut remaining: Vec<usize> = (0..n).collect();
    let mut round = 0;
    while !remaining.is_empty() {
        let col = color(&instance.select(&remaining), family, k)?;
        let mut size = vec![0usize; col.palette];
        col.colors.iter().for_each(|&c| size[c] += 1);
        let best = (0..col.palette).max_by(|&a, &b| size[a].cmp(&size[b]).then(b.cmp(&a))).unwrap();
        let mut rest = Vec::with_capacity(remaining.len());
        for (&v, &c) in remaining.iter().zip(&col.colors) {
            if c == best {
                out[v] = round;
            } else {
                rest.push(v);
            }
        }
        remaining = rest;
        round += 1;
    }
    Ok(Coloring::new(round.max(1), out))
}

/// What a construction shows about its chromatic number.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bound {
    Exactly(usize),
    AtLeast(usize),
    AtMost(usize),
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::Exactly(c) => write!(f, "= {c}"),
            Bound::AtLeast(c) => write!(f, ">= {c}"),
            Bound::AtMost(c) => write!(f, "<= {c}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Construction {
    pub name: &'static str,
    pub family: Family,
    pub k: usize,
    pub bound: Bound,
    pub instance: Instance,
}

fn points(v: &[(i64, i64)]) -> Instance {
    Instance::Points(v.iter().map(|&(x, y)| Point::new(x, y)).collect())
}

/// Small instances whose chromatic numbers meet the lower bounds.
pub fn constructions() -> Vec<Construction> {
    let twelve_y = [10, 11, 12, 2, 6, 1, 9, 8, 7, 5, 4, 3];
    let half = Rational::new(1, 2);
    let baseline = |a: Rational, b: i64, bottom: i64, top: Rational| BaselineRect {
        a,
        b: b.into(),
        bottom: bottom.into(),
        top,
    };
    vec![
        Construction {
            name: "bottomless-points-triangle",
            family: Family::BottomlessPoints,
            k: 2,
            bound: Bound::Exactly(3),
            instance: points(&[(0, 0), (1, 2), (2, 1)]),
        },
        Construction {
            name: "bottomless-points-twelve",
            family: Family::BottomlessPoints,
            k: 3,
            bound: Bound::AtLeast(3),
            instance: points(&(1..=12).zip(twelve_y).collect::<Vec<_>>()),
        },
        Construction {
            name: "bottomless-rects-triangle",
            family: Family::BottomlessRects,
            k: 2,
            bound: Bound::Exactly(3),
            instance: Instance::BottomlessRects(vec![
                BottomlessRect::new(1, 5, 3).unwrap(),
                BottomlessRect::new(4, 8, 2).unwrap(),
                BottomlessRect::new(0, 10, 1).unwrap(),
            ]),
        },
        Construction {
            name: "halfplane-points-star",
            family: Family::HalfplanePoints,
            k: 2,
            bound: Bound::Exactly(4),
            instance: points(&[(0, 0), (4, 0), (2, 4), (2, 1)]),
        },
        Construction {
            name: "halfplane-points-quadrilateral",
            family: Family::HalfplanePoints,
            k: 2,
            bound: Bound::AtMost(3),
            instance: points(&[(0, 0), (4, 1), (5, 5), (1, 4)]),
        },
        Construction {
            name: "halfplanes-triangle",
            family: Family::HalfPlanes,
            k: 2,
            bound: Bound::Exactly(3),
            instance: Instance::HalfPlanes(vec![
                HalfPlane::new(1, 0, Side::Above),
                HalfPlane::new(-1, 0, Side::Above),
                HalfPlane::new(0, 1, Side::Below),
            ]),
        },
        Construction {
            name: "baseline-rects-four",
            family: Family::BaselineRects,
            k: 2,
            bound: Bound::AtLeast(4),
            instance: Instance::BaselineRects(vec![
                baseline(1.into(), 5, -3, 3.into()),
                baseline(4.into(), 8, -2, 2.into()),
                baseline(0.into(), 10, -1, 1.into()),
                baseline(half.clone(), 9, -4, half),
            ]),
        },
        Construction {
            name: "baseline-points-triangle",
            family: Family::BaselinePoints,
            k: 2,
            bound: Bound::Exactly(3),
            instance: points(&[(0, 1), (1, 3), (2, 2)]),
        },
    ]
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertifyError {
    Instance(InstanceError),
    Budget(BudgetExceeded),
}

impl fmt::Display for CertifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertifyError::Instance(e) => e.fmt(f),
            CertifyError::Budget(e) => e.fmt(f),
        }
    }
}

impl core::error::Error for CertifyError {}

/// Outcome of checking one construction's bound by exhaustive search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub name: &'static str,
    pub bound: Bound,
    /// Smallest number of colors found, up to the bound (or one below it
    /// for lower bounds, where `None` is the expected outcome).
    pub found: Option<usize>,
    pub holds: bool,
}

pub fn certify(c: &Construction) -> Result<Certificate, CertifyError> {
    let h = enumerate(&c.instance, c.family).map_err(CertifyError::Instance)?;
    let search = |max| exact_chromatic(&h, c.k, max).map_err(CertifyError::Budget);
    let (found, holds) = match c.bound {
        Bound::Exactly(b) => {
            let f = search(b)?.map(|w| w.palette);
            (f, f == Some(b))
        }
        Bound::AtLeast(b) => {
            let f = search(b - 1)?.map(|w| w.palette);
            (f, f.is_none())
        }
        Bound::AtMost(b) => {
            let f = search(b)?.map(|w| w.palette);
            (f, f.is_some())
        }
    };
    Ok(Certificate { name: c.name, bound: c.bound, found, holds })
}

pub fn certify_constructions() -> Result<Vec<Certificate>, CertifyError> {
    constructions().iter().map(certify).collect()
}

/// The first instance that admits no `k`-proper coloring with `colors`
/// colors, if any.
pub fn find_obstruction(
    instances: impl IntoIterator<Item = Instance>,
    family: Family,
    k: usize,
    colors: usize,
) -> Result<Option<Instance>, CertifyError> {
    for inst in instances {
        let h = enumerate(&inst, family).map_err(CertifyError::Instance)?;
        if exact_chromatic(&h, k, colors).map_err(CertifyError::Budget)?.is_none() {
            return Ok(Some(inst));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{verify_instance, verify_instance_cf};
    use crate::testgen;

    #[test]
    fn stirling_sums() {
        assert_eq!(canonical_colorings(3, 3), 5);
        assert_eq!(canonical_colorings(12, 2), 2048);
        assert_eq!(canonical_colorings(4, 1), 1);
        assert!(canonical_colorings(30, 5) > SEARCH_BUDGET);
        let h = Hypergraph::new(30);
        assert!(exact_chromatic(&h, 2, 5).is_err());
    }

    #[test]
    fn constructions_certify() {
        for c in constructions() {
            let cert = certify(&c).unwrap();
            assert!(cert.holds, "{}: found {:?}, claimed {}", c.name, cert.found, c.bound);
        }
    }

    #[test]
    fn construction_structure() {
        let all = constructions();
        let get = |name: &str| all.iter().find(|c| c.name == name).unwrap();
        let twelve = enumerate(&get("bottomless-points-twelve").instance, Family::BottomlessPoints).unwrap();
        // indices are x-order minus one: p1 is 0
        for (a, b, rest) in [(3, 4, [0, 1, 2]), (3, 5, [9, 10, 11]), (4, 5, [6, 7, 8])] {
            for x in rest {
                let mut e = vec![a, b, x];
                e.sort_unstable();
                assert!(twelve.contains(&e), "{e:?}");
            }
            assert!(twelve.contains(&rest));
        }
        // every pair of regions has a point covered by exactly those two
        for name in ["bottomless-rects-triangle", "halfplanes-triangle", "baseline-rects-four"] {
            let c = get(name);
            let h = enumerate(&c.instance, c.family).unwrap();
            let n = c.instance.len();
            for i in 0..n {
                for j in i + 1..n {
                    assert!(h.contains(&[i, j]), "{name}: {i} {j}");
                }
            }
        }
    }

    #[test]
    fn chromatic_examples() {
        let all = constructions();
        let h = enumerate(&all[0].instance, Family::BottomlessPoints).unwrap();
        assert_eq!(exact_chromatic(&h, 2, 5).unwrap().unwrap().palette, 3);
        let twelve = enumerate(&all[1].instance, Family::BottomlessPoints).unwrap();
        assert_eq!(exact_chromatic(&twelve, 3, 2).unwrap(), None);
        assert_eq!(exact_chromatic(&twelve, 3, 3).unwrap().unwrap().palette, 3);
        assert_eq!(exact_chromatic(&twelve, 4, 3).unwrap().unwrap().palette, 2);
    }

    #[test]
    fn search_matches_reference() {
        for family in Family::ALL {
            for seed in 0..15 {
                let n = 1 + seed as usize % 6;
                let inst = testgen::instance(seed, family, n, 10);
                let h = enumerate(&inst, family).unwrap();
                let mut last = usize::MAX;
                for k in 1..=4 {
                    let fast = exact_chromatic(&h, k, 3).unwrap();
                    if let Some(w) = &fast {
                        assert!(verify_kproper(&h, w, k).unwrap().is_valid());
                    }
                    let fast = fast.map(|w| w.palette);
                    assert_eq!(fast, reference_chromatic(&h, k, 3), "{family} seed {seed} k {k}");
                    // nonincreasing in k
                    let now = fast.unwrap_or(usize::MAX);
                    assert!(now <= last || last == usize::MAX);
                    last = now;
                }
            }
        }
    }

    #[test]
    fn cf_bounds() {
        assert_eq!(cf_bound(1, 3), 1);
        assert_eq!(cf_bound(27, 3), 10);
        assert_eq!(cf_bound(50, 2), 7);
        assert_eq!(cf_bound(64, 2), 7);
    }

    #[test]
    fn cf_examples() {
        let one = Instance::Points(vec![Point::new(0, 0)]);
        assert_eq!(cf_from_proper(&one, Family::BottomlessPoints, 2).unwrap().colors, vec![0]);
        let stair = Instance::Points((0..27).map(|i| Point::new(i, i)).collect());
        let col = cf_from_proper(&stair, Family::BottomlessPoints, 2).unwrap();
        assert!(col.palette <= cf_bound(27, 3));
        assert!(verify_instance_cf(&stair, Family::BottomlessPoints, &col, 1).unwrap().is_valid());
        let p = Instance::Points(testgen::points(5, Family::HalfplanePoints, 50));
        let col = cf_from_proper(&p, Family::HalfplanePoints, 3).unwrap();
        assert!(col.palette <= cf_bound(50, 2));
        assert!(verify_instance_cf(&p, Family::HalfplanePoints, &col, 2).unwrap().is_valid());
        assert!(verify_instance(&p, Family::HalfplanePoints, &col, 3).unwrap().is_valid());
    }

    #[test]
    fn cf_on_random_instances() {
        for family in Family::ALL {
            for k in [3, 4] {
                for seed in 0..5 {
                    let inst = testgen::instance(seed, family, 12, 200);
                    let col = cf_from_proper(&inst, family, k).unwrap();
                    let c = route(family, k).unwrap().palette();
                    assert!(col.palette <= cf_bound(12, c));
                    assert!(verify_instance_cf(&inst, family, &col, k - 1).unwrap().is_valid(), "{family} {k} {seed}");
                    assert!(verify_instance(&inst, family, &col, k).unwrap().is_valid());
                }
            }
        }
    }

    #[test]
    fn obstruction_experiment_runs() {
        // small half-plane families: at k = 3 two colors sufficed in every case tried
        let families = (0..30).map(|seed| testgen::instance(seed, Family::HalfPlanes, 6, 20));
        assert_eq!(find_obstruction(families, Family::HalfPlanes, 3, 2).unwrap(), None);
        let gadget = constructions().into_iter().find(|c| c.name == "halfplanes-triangle").unwrap();
        let found = find_obstruction([gadget.instance.clone()], Family::HalfPlanes, 2, 2).unwrap();
        assert_eq!(found, Some(gadget.instance));
    }
}
