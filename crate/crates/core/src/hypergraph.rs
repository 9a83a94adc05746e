//! Hypergraphs, colorings and their verification.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::geom::{BaselineRect, BottomlessRect, HalfPlane, Point};

/// What realizes a hyperedge: the region cutting it out of a point set, or
/// the point whose covering set it is.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Realizer {
    Bottomless(BottomlessRect),
    Baseline(BaselineRect),
    HalfPlane(HalfPlane),
    Point(Point),
}

impl fmt::Display for Realizer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Realizer::Bottomless(r) => write!(f, "bottomless rectangle {} < x < {}, y < {}", r.a, r.b, r.c),
            Realizer::Baseline(r) => {
                write!(f, "rectangle {} < x < {}, {} < y < {}", r.a, r.b, r.bottom, r.top)
            }
            Realizer::HalfPlane(h) => {
                let rel = match h.region {
                    crate::geom::Side::Above => ">",
                    crate::geom::Side::Below => "<",
                };
                write!(f, "half-plane y {rel} {}x + {}", h.slope, h.intercept)
            }
            Realizer::Point(p) => write!(f, "point ({}, {})", p.x, p.y),
        }
    }
}

/// A hypergraph on `0..vertex_count`, each hyperedge stored as a sorted index
/// list together with one realizer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    vertex_count: usize,
    edges: BTreeMap<Vec<usize>, Realizer>,
}

impl Hypergraph {
    pub fn new(vertex_count: usize) -> Hypergraph {
        Hypergraph { vertex_count, edges: BTreeMap::new() }
    }

    /// Adds a hyperedge; the first realizer of a repeated edge is kept.
    /// Empty edges are ignored.
    pub fn insert(&mut self, mut edge: Vec<usize>, realizer: Realizer) {
        if edge.is_empty() {
            return;
        }
        edge.sort_unstable();
        edge.dedup();
        assert!(*edge.last().unwrap() < self.vertex_count, "hyperedge index out of range");
        self.edges.entry(edge).or_insert(realizer);
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, edge: &[usize]) -> bool {
        self.edges.contains_key(edge)
    }

    pub fn realizer(&self, edge: &[usize]) -> Option<&Realizer> {
        self.edges.get(edge)
    }

    pub fn edges(&self) -> impl Iterator<Item = &Vec<usize>> + '_ {
        self.edges.keys()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<usize>, &Realizer)> + '_ {
        self.edges.iter()
    }

    /// Same hyperedge sets, ignoring realizers.
    pub fn same_edges(&self, other: &Hypergraph) -> bool {
        self.vertex_count == other.vertex_count && self.edges.keys().eq(other.edges.keys())
    }

    /// Hyperedges of `self` missing from `other`.
    pub fn missing_from<'a>(&'a self, other: &'a Hypergraph) -> impl Iterator<Item = &'a Vec<usize>> + 'a {
        self.edges.keys().filter(move |e| !other.contains(e))
    }

    pub fn max_edge_size(&self) -> usize {
        self.edges.keys().map(Vec::len).max().unwrap_or(0)
    }
}

/// A coloring of `0..colors.len()` with colors from `0..palette`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coloring {
    pub palette: usize,
    pub colors: Vec<usize>,
}

impl Coloring {
    /// Panics if a color is outside the palette.
    pub fn new(palette: usize, colors: Vec<usize>) -> Coloring {
        assert!(colors.iter().all(|&c| c < palette), "color outside palette");
        Coloring { palette, colors }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Number of distinct colors actually used.
    pub fn used(&self) -> usize {
        let mut seen = alloc::vec![false; self.palette];
        self.colors.iter().for_each(|&c| seen[c] = true);
        seen.into_iter().filter(|&s| s).count()
    }

    pub fn get(&self, v: usize) -> usize {
        self.colors[v]
    }
}

/// A violating hyperedge and its realizer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub edge: Vec<usize>,
    pub realizer: Realizer,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub witness: Option<Witness>,
}

impl Verdict {
    pub const VALID: Verdict = Verdict { witness: None };

    pub fn invalid(edge: Vec<usize>, realizer: Realizer) -> Verdict {
        Verdict { witness: Some(Witness { edge, realizer }) }
    }

    pub fn is_valid(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LengthMismatch {
    pub vertices: usize,
    pub colors: usize,
}

impl fmt::Display for LengthMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "coloring has {} colors for {} vertices", self.colors, self.vertices)
    }
}

impl core::error::Error for LengthMismatch {}

pub fn check_len(vertices: usize, col: &Coloring) -> Result<(), LengthMismatch> {
    if vertices == col.len() {
        Ok(())
    } else {
        Err(LengthMismatch { vertices, colors: col.len() })
    }
}

pub fn is_monochromatic(edge: &[usize], col: &Coloring) -> bool {
    edge.windows(2).all(|w| col.colors[w[0]] == col.colors[w[1]])
}

/// Valid iff no hyperedge with at least `k` vertices is monochromatic.
pub fn verify_kproper(h: &Hypergraph, col: &Coloring, k: usize) -> Result<Verdict, LengthMismatch> {
    check_len(h.vertex_count(), col)?;
    Ok(h
        .iter()
        .find(|(e, _)| e.len() >= k && is_monochromatic(e, col))
        .map_or(Verdict::VALID, |(e, r)| Verdict::invalid(e.clone(), r.clone())))
}

/// Per-color tallies of a multiset of vertices, tracking how many colors
/// occur between 1 and `k` times.
#[derive(Clone, Debug)]
pub struct ColorCounts {
    counts: Vec<u32>,
    k: u32,
    unique: usize,
}

impl ColorCounts {
    pub fn new(palette: usize, k: usize) -> ColorCounts {
        ColorCounts { counts: alloc::vec![0; palette], k: k as u32, unique: 0 }
    }

    fn in_range(&self, n: u32) -> bool {
        n >= 1 && n <= self.k
    }

    pub fn add(&mut self, color: usize) {
        let before = self.in_range(self.counts[color]);
        self.counts[color] += 1;
        let after = self.in_range(self.counts[color]);
        self.unique = self.unique + after as usize - before as usize;
    }

    pub fn remove(&mut self, color: usize) {
        let before = self.in_range(self.counts[color]);
        self.counts[color] -= 1;
        let after = self.in_range(self.counts[color]);
        self.unique = self.unique + after as usize - before as usize;
    }

    /// Whether some color occurs between 1 and `k` times.
    pub fn has_rare(&self) -> bool {
        self.unique > 0
    }
}

pub fn is_conflict_free(edge: &[usize], col: &Coloring, k: usize) -> bool {
    let mut counts = ColorCounts::new(col.palette, k);
    edge.iter().for_each(|&v| counts.add(col.colors[v]));
    counts.has_rare()
}

/// Valid iff every hyperedge has a color occurring between 1 and `k` times in it.
pub fn verify_cf(h: &Hypergraph, col: &Coloring, k: usize) -> Result<Verdict, LengthMismatch> {
    check_len(h.vertex_count(), col)?;
    Ok(h
        .iter()
        .find(|(e, _)| !is_conflict_free(e, col, k))
        .map_or(Verdict::VALID, |(e, r)| Verdict::invalid(e.clone(), r.clone())))
}

/// Whether every hyperedge of size `s >= 2` contains a hyperedge of size
/// `s - 1`; by induction this gives sub-hyperedges of every smaller size.
pub fn check_monotonicity(h: &Hypergraph) -> bool {
    h.edges().filter(|e| e.len() >= 2).all(|e| {
        (0..e.len()).any(|skip| {
            let sub: Vec<usize> = e.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect();
            h.contains(&sub)
        })
    })
}
