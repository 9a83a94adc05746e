//! Instances, the six coloring settings, general-position validation and
//! deterministic perturbation.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use crate::geom::{orient, BaselineRect, BottomlessRect, DirectedPoint, HalfPlane, Orientation, Point};
use crate::halfplane_dual::dualize;
use crate::rational::Rational;

/// A coloring setting: which objects are colored and which regions induce
/// the hyperedges.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// Points against bottomless rectangles.
    BottomlessPoints,
    /// Bottomless rectangles against points of the plane.
    BottomlessRects,
    /// Points against rectangles crossing the base-line.
    BaselinePoints,
    /// Rectangles crossing the base-line against points of the plane.
    BaselineRects,
    /// Points against half-planes.
    HalfplanePoints,
    /// Half-planes against points of the plane.
    HalfPlanes,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::BottomlessPoints,
        Family::BottomlessRects,
        Family::BaselinePoints,
        Family::BaselineRects,
        Family::HalfplanePoints,
        Family::HalfPlanes,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::BottomlessPoints => "b-points",
            Family::BottomlessRects => "b-rects",
            Family::BaselinePoints => "bprime-points",
            Family::BaselineRects => "bprime-rects",
            Family::HalfplanePoints => "h-points",
            Family::HalfPlanes => "h-rects",
        }
    }

    /// Whether points are the colored objects.
    pub fn is_primal(self) -> bool {
        matches!(self, Family::BottomlessPoints | Family::BaselinePoints | Family::HalfplanePoints)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnknownFamily(pub String);

impl fmt::Display for UnknownFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown family `{}`", self.0)
    }
}

impl core::error::Error for UnknownFamily {}

impl FromStr for Family {
    type Err = UnknownFamily;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| UnknownFamily(s.into()))
    }
}

/// The objects of one instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    Points(Vec<Point>),
    BottomlessRects(Vec<BottomlessRect>),
    BaselineRects(Vec<BaselineRect>),
    HalfPlanes(Vec<HalfPlane>),
}

impl Instance {
    pub fn len(&self) -> usize {
        match self {
            Instance::Points(v) => v.len(),
            Instance::BottomlessRects(v) => v.len(),
            Instance::BaselineRects(v) => v.len(),
            Instance::HalfPlanes(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Whether this kind of object is what `family` colors.
    pub fn fits(&self, family: Family) -> bool {
        matches!(
            (self, family),
            (Instance::Points(_), Family::BottomlessPoints | Family::BaselinePoints | Family::HalfplanePoints)
                | (Instance::BottomlessRects(_), Family::BottomlessRects)
                | (Instance::BaselineRects(_), Family::BaselineRects)
                | (Instance::HalfPlanes(_), Family::HalfPlanes)
        )
    }

    /// Sub-instance made of the objects at `keep`, in that order.
    pub fn select(&self, keep: &[usize]) -> Instance {
        fn pick<T: Clone>(v: &[T], keep: &[usize]) -> Vec<T> {
            keep.iter().map(|&i| v[i].clone()).collect()
        }
        match self {
            Instance::Points(v) => Instance::Points(pick(v, keep)),
            Instance::BottomlessRects(v) => Instance::BottomlessRects(pick(v, keep)),
            Instance::BaselineRects(v) => Instance::BaselineRects(pick(v, keep)),
            Instance::HalfPlanes(v) => Instance::HalfPlanes(pick(v, keep)),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    EqualX,
    EqualY,
    DuplicatePoint,
    Collinear,
    /// Two vertical rectangle sides on the same line.
    EqualSide,
    EqualTop,
    EqualBottom,
    /// A rectangle with `a >= b`.
    EmptyInterval,
    /// A base-line rectangle not satisfying `bottom < 0 < top`.
    MissesBaseline,
    /// A point on the base-line.
    OnBaseline,
    /// Two half-planes whose dual points coincide.
    DuplicateDual,
    /// Three half-planes whose dual points are collinear.
    CollinearDual,
}

/// The first general-position violation found, with the offending indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub indices: Vec<usize>,
}

impl Violation {
    fn new(kind: ViolationKind, indices: Vec<usize>) -> Violation {
        Violation { kind, indices }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self.kind {
            ViolationKind::EqualX => "equal x at indices",
            ViolationKind::EqualY => "equal y at indices",
            ViolationKind::DuplicatePoint => "duplicate points at indices",
            ViolationKind::Collinear => "collinear",
            ViolationKind::EqualSide => "overlapping vertical sides at indices",
            ViolationKind::EqualTop => "equal top edges at indices",
            ViolationKind::EqualBottom => "equal bottom edges at indices",
            ViolationKind::EmptyInterval => "left edge not left of right edge at index",
            ViolationKind::MissesBaseline => "rectangle not crossing the base-line at index",
            ViolationKind::OnBaseline => "point on the base-line at index",
            ViolationKind::DuplicateDual => "identical boundary lines at indices",
            ViolationKind::CollinearDual => "collinear dual points",
        };
        f.write_str(what)?;
        for (n, i) in self.indices.iter().enumerate() {
            if n == 0 {
                write!(f, " {i}")?;
            } else {
                write!(f, ",{i}")?;
            }
        }
        Ok(())
    }
}

impl core::error::Error for Violation {}

/// Reasons an instance cannot be processed for a family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InstanceError {
    /// The instance holds objects the family does not color.
    Mismatch { family: Family },
    GeneralPosition(Violation),
}

impl fmt::Display for InstanceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InstanceError::Mismatch { family } => {
                write!(f, "instance objects do not match family {family}")
            }
            InstanceError::GeneralPosition(v) => write!(f, "general position violated: {v}"),
        }
    }
}

impl core::error::Error for InstanceError {}

impl From<Violation> for InstanceError {
    fn from(v: Violation) -> Self {
        InstanceError::GeneralPosition(v)
    }
}

/// Lexicographically smallest pair of labels carrying equal values, if any.
fn first_equal_pair<T: Ord>(values: &[(T, usize)]) -> Option<(usize, usize)> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&i, &j| values[i].cmp(&values[j]));
    let mut best: Option<(usize, usize)> = None;
    let mut start = 0;
    while start < order.len() {
        let mut end = start + 1;
        while end < order.len() && values[order[end]].0 == values[order[start]].0 {
            end += 1;
        }
        if end - start >= 2 {
            // labels are sorted inside a group of equal values
            let mut labels: Vec<usize> = order[start..end].iter().map(|&i| values[i].1).collect();
            labels.dedup();
            let pair = if labels.len() >= 2 { (labels[0], labels[1]) } else { (labels[0], labels[0]) };
            if best.map_or(true, |b| pair < b) {
                best = Some(pair);
            }
        }
        start = end;
    }
    best
}

fn check_distinct<T: Ord>(values: Vec<(T, usize)>, kind: ViolationKind) -> Result<(), Violation> {
    match first_equal_pair(&values) {
        Some((i, j)) => Err(Violation::new(kind, vec![i, j])),
        None => Ok(()),
    }
}

fn labelled<T: Clone>(values: impl Iterator<Item = T>) -> Vec<(T, usize)> {
    values.enumerate().map(|(i, v)| (v, i)).collect()
}

/// Smallest index triple `i < j < k` of collinear points, assuming the points
/// are pairwise distinct. Runs in `O(n^2 log n)`.
fn first_collinear_triple(points: &[Point]) -> Option<[usize; 3]> {
    let n = points.len();
    for i in 0..n {
        let p = &points[i];
        // directions from p, folded onto a half-turn so that opposite rays match
        let mut others: Vec<usize> = (0..n).filter(|&j| j != i).collect();
        let upper = |q: &Point| q.y > p.y || (q.y == p.y && q.x > p.x);
        let folded = |a: usize, b: usize| -> Ordering {
            let (qa, qb) = (&points[a], &points[b]);
            // reflect lower rays through p
            let ra = if upper(qa) { qa.clone() } else { Point { x: &(&p.x + &p.x) - &qa.x, y: &(&p.y + &p.y) - &qa.y } };
            let rb = if upper(qb) { qb.clone() } else { Point { x: &(&p.x + &p.x) - &qb.x, y: &(&p.y + &p.y) - &qb.y } };
            match orient(p, &ra, &rb) {
                Orientation::Left => Ordering::Less,
                Orientation::Right => Ordering::Greater,
                Orientation::Collinear => Ordering::Equal,
            }
        };
        others.sort_by(|&a, &b| folded(a, b).then(a.cmp(&b)));
        let mut best: Option<[usize; 3]> = None;
        let mut start = 0;
        while start < others.len() {
            let mut end = start + 1;
            while end < others.len() && folded(others[start], others[end]) == Ordering::Equal {
                end += 1;
            }
            if end - start >= 2 {
                let mut t = [i, others[start], others[start + 1]];
                t.sort_unstable();
                if best.map_or(true, |b| t < b) {
                    best = Some(t);
                }
            }
            start = end;
        }
        if best.is_some() {
            return best;
        }
    }
    None
}

fn validate_points_distinct_xy(points: &[Point]) -> Result<(), Violation> {
    check_distinct(labelled(points.iter().map(|p| p.x.clone())), ViolationKind::EqualX)?;
    check_distinct(labelled(points.iter().map(|p| p.y.clone())), ViolationKind::EqualY)
}

fn rect_sides<'a>(sides: impl Iterator<Item = (&'a Rational, &'a Rational)>) -> Vec<(Rational, usize)> {
    let mut v = Vec::new();
    for (i, (a, b)) in sides.enumerate() {
        v.push((a.clone(), i));
        v.push((b.clone(), i));
    }
    v
}

fn validate_halfplane_duals(duals: &[DirectedPoint]) -> Result<(), Violation> {
    let pts: Vec<Point> = duals.iter().map(|d| d.point()).collect();
    check_distinct(labelled(pts.iter().cloned()), ViolationKind::DuplicateDual)?;
    if let Some(t) = first_collinear_triple(&pts) {
        return Err(Violation::new(ViolationKind::CollinearDual, t.to_vec()));
    }
    Ok(())
}

/// Checks the general-position assumptions each algorithm relies on.
pub fn validate_general_position(instance: &Instance, family: Family) -> Result<(), InstanceError> {
    if !instance.fits(family) {
        return Err(InstanceError::Mismatch { family });
    }
    match instance {
        Instance::Points(points) => match family {
            Family::BottomlessPoints => validate_points_distinct_xy(points)?,
            Family::BaselinePoints => {
                if let Some(i) = points.iter().position(|p| p.y.is_zero()) {
                    return Err(Violation::new(ViolationKind::OnBaseline, vec![i]).into());
                }
                validate_points_distinct_xy(points)?
            }
            _ => {
                check_distinct(labelled(points.iter().cloned()), ViolationKind::DuplicatePoint)?;
                if let Some(t) = first_collinear_triple(points) {
                    return Err(Violation::new(ViolationKind::Collinear, t.to_vec()).into());
                }
            }
        },
        Instance::BottomlessRects(rects) => {
            if let Some(i) = rects.iter().position(|r| r.a >= r.b) {
                return Err(Violation::new(ViolationKind::EmptyInterval, vec![i]).into());
            }
            check_distinct(rect_sides(rects.iter().map(|r| (&r.a, &r.b))), ViolationKind::EqualSide)?;
            check_distinct(labelled(rects.iter().map(|r| r.c.clone())), ViolationKind::EqualTop)?;
        }
        Instance::BaselineRects(rects) => {
            if let Some(i) = rects.iter().position(|r| r.a >= r.b) {
                return Err(Violation::new(ViolationKind::EmptyInterval, vec![i]).into());
            }
            if let Some(i) = rects
                .iter()
                .position(|r| r.bottom.signum() != Ordering::Less || r.top.signum() != Ordering::Greater)
            {
                return Err(Violation::new(ViolationKind::MissesBaseline, vec![i]).into());
            }
            check_distinct(rect_sides(rects.iter().map(|r| (&r.a, &r.b))), ViolationKind::EqualSide)?;
            check_distinct(labelled(rects.iter().map(|r| r.top.clone())), ViolationKind::EqualTop)?;
            check_distinct(labelled(rects.iter().map(|r| r.bottom.clone())), ViolationKind::EqualBottom)?;
        }
        Instance::HalfPlanes(hs) => validate_halfplane_duals(&dualize(hs))?,
    }
    Ok(())
}

/// Smallest positive difference between distinct values, or 1 if there is none.
fn min_gap<'a>(values: impl Iterator<Item = &'a Rational>) -> Rational {
    let mut v: Vec<&Rational> = values.collect();
    v.sort();
    v.dedup();
    v.windows(2)
        .map(|w| w[1] - w[0])
        .min()
        .unwrap_or(Rational::ONE)
}

/// Breaks ties in a coordinate multiset: the `j`-th repeat (in input order)
/// of a value moves up by `j * eps`, where `eps` is a quarter of the smallest
/// gap divided by `n + 1`.
fn break_ties(values: &mut [&mut Rational], pinned: Option<&Rational>) {
    let n = values.len();
    let eps = {
        let gap = min_gap(values.iter().map(|v| &**v).chain(pinned));
        gap / Rational::from_integer(4 * (n as i64 + 1))
    };
    let mut seen: BTreeMap<Rational, i64> = BTreeMap::new();
    if let Some(p) = pinned {
        seen.insert(p.clone(), 1);
    }
    for v in values.iter_mut() {
        let count = seen.entry((**v).clone()).or_insert(0);
        if *count > 0 {
            let shift = &eps * &Rational::from_integer(*count);
            **v = &**v + &shift;
        }
        *count += 1;
    }
}

/// Moves point `i` by `(i * d, i^2 * d)`, halving `d` until no duplicates or
/// collinear triples remain.
fn perturb_along_moment_curve(points: &[Point]) -> Vec<Point> {
    let n = points.len() as i64;
    let gap = core::cmp::min(min_gap(points.iter().map(|p| &p.x)), min_gap(points.iter().map(|p| &p.y)));
    let eps = gap / Rational::from_integer(4 * (n + 1));
    let mut d = eps / Rational::from_integer(n * n + 1);
    loop {
        let moved: Vec<Point> = points
            .iter()
            .enumerate()
            .map(|(i, p)| {
                let i = i as i64;
                Point { x: &p.x + &(&d * &Rational::from_integer(i)), y: &p.y + &(&d * &Rational::from_integer(i * i)) }
            })
            .collect();
        let distinct = first_equal_pair(&labelled(moved.iter().cloned())).is_none();
        if distinct && first_collinear_triple(&moved).is_none() {
            return moved;
        }
        d = d / Rational::from_integer(2);
    }
}

/// Returns an instance in general position for `family`, moving coordinates
/// by less than a quarter of the smallest gap between distinct coordinate
/// values. Valid input is returned unchanged. Structural defects that no small
/// move can repair (`a > b`, a rectangle not crossing the base-line) are
/// reported as errors.
pub fn perturb(instance: &Instance, family: Family) -> Result<Instance, InstanceError> {
    match validate_general_position(instance, family) {
        Ok(()) => return Ok(instance.clone()),
        Err(InstanceError::Mismatch { family }) => return Err(InstanceError::Mismatch { family }),
        Err(InstanceError::GeneralPosition(_)) => {}
    }
    let out = match instance {
        Instance::Points(points) => match family {
            Family::BottomlessPoints | Family::BaselinePoints => {
                let mut pts = points.clone();
                let zero = Rational::ZERO;
                let pinned = (family == Family::BaselinePoints).then_some(&zero);
                break_ties(&mut pts.iter_mut().map(|p| &mut p.x).collect::<Vec<_>>(), None);
                break_ties(&mut pts.iter_mut().map(|p| &mut p.y).collect::<Vec<_>>(), pinned);
                Instance::Points(pts)
            }
            _ => Instance::Points(perturb_along_moment_curve(points)),
        },
        Instance::BottomlessRects(rects) => {
            if let Some(i) = rects.iter().position(|r| r.a > r.b) {
                return Err(Violation::new(ViolationKind::EmptyInterval, vec![i]).into());
            }
            let mut rs = rects.clone();
            break_ties(&mut rs.iter_mut().flat_map(|r| [&mut r.a, &mut r.b]).collect::<Vec<_>>(), None);
            break_ties(&mut rs.iter_mut().map(|r| &mut r.c).collect::<Vec<_>>(), None);
            Instance::BottomlessRects(rs)
        }
        Instance::BaselineRects(rects) => {
            if let Some(i) = rects.iter().position(|r| r.a > r.b) {
                return Err(Violation::new(ViolationKind::EmptyInterval, vec![i]).into());
            }
            if let Some(i) = rects
                .iter()
                .position(|r| r.bottom.signum() != Ordering::Less || r.top.signum() != Ordering::Greater)
            {
                return Err(Violation::new(ViolationKind::MissesBaseline, vec![i]).into());
            }
            let mut rs = rects.clone();
            break_ties(&mut rs.iter_mut().flat_map(|r| [&mut r.a, &mut r.b]).collect::<Vec<_>>(), None);
            break_ties(&mut rs.iter_mut().map(|r| &mut r.top).collect::<Vec<_>>(), None);
            break_ties(&mut rs.iter_mut().map(|r| &mut r.bottom).collect::<Vec<_>>(), None);
            Instance::BaselineRects(rs)
        }
        Instance::HalfPlanes(hs) => {
            let duals: Vec<Point> = hs.iter().map(|h| Point { x: h.slope.clone(), y: h.intercept.clone() }).collect();
            let moved = perturb_along_moment_curve(&duals);
            Instance::HalfPlanes(
                hs.iter()
                    .zip(moved)
                    .map(|(h, d)| HalfPlane { slope: d.x, intercept: d.y, region: h.region })
                    .collect(),
            )
        }
    };
    validate_general_position(&out, family)?;
    Ok(out)
}
