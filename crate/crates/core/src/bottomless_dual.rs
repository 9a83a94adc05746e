//! Coloring bottomless rectangles: three colors so that every point in two
//! or more rectangles sees two colors, and two colors for points in three or
//! more.
//!
//! All x-coordinates are replaced by ranks among the `2n` vertical sides up
//! front; the base-line is cut by the sides into elementary intervals
//! `j = (side_j, side_{j+1})`.

use alloc::vec;
use alloc::vec::Vec;

use crate::geom::BottomlessRect;
use crate::hypergraph::Coloring;
use crate::instance::{validate_general_position, Family, Instance, InstanceError};

pub const RED: usize = 0;
pub const BLUE: usize = 1;
pub const GREEN: usize = 2;

/// Ranks of the left and right sides among all `2n` sides.
fn side_ranks(rects: &[BottomlessRect]) -> Vec<(usize, usize)> {
    let mut sides: Vec<(usize, bool)> = (0..rects.len()).flat_map(|i| [(i, false), (i, true)]).collect();
    let x = |&(i, right): &(usize, bool)| if right { &rects[i].b } else { &rects[i].a };
    sides.sort_by(|s, t| x(s).cmp(x(t)));
    let mut ranks = vec![(0, 0); rects.len()];
    for (r, &(i, right)) in sides.iter().enumerate() {
        if right {
            ranks[i].1 = r;
        } else {
            ranks[i].0 = r;
        }
    }
    ranks
}

fn validate(rects: &[BottomlessRect]) -> Result<(), InstanceError> {
    validate_general_position(&Instance::BottomlessRects(rects.to_vec()), Family::BottomlessRects)
}

/// Per elementary interval: how many of `rects` cover it and the sum of
/// their indices (the covering rectangle itself when the depth is one).
struct BaseLine {
    depth: Vec<usize>,
    id_sum: Vec<usize>,
}

impl BaseLine {
    fn new(intervals: usize) -> BaseLine {
        BaseLine { depth: vec![0; intervals], id_sum: vec![0; intervals] }
    }

    fn insert(&mut self, id: usize, (a, b): (usize, usize)) {
        for j in a..b {
            self.depth[j] += 1;
            self.id_sum[j] += id;
        }
    }

    /// The rectangle alone over interval `j`, if exactly one covers it.
    fn single(&self, j: usize) -> Option<usize> {
        (self.depth[j] == 1).then_some(self.id_sum[j])
    }
}

fn swap_colors(colors: &mut [usize], ids: impl Iterator<Item = usize>, c1: usize, c2: usize) {
    for i in ids {
        if colors[i] == c1 {
            colors[i] = c2;
        } else if colors[i] == c2 {
            colors[i] = c1;
        }
    }
}

/// Three colors (red, blue, green) such that every point covered by at
/// least two of the rectangles is covered by two of different colors.
///
/// Rectangles are inserted from the highest top edge down. Afterwards no
/// base-line point covered by a single rectangle sees red.
pub fn color_rects_b_k2(rects: &[BottomlessRect]) -> Result<Coloring, InstanceError> {
    validate(rects)?;
    let n = rects.len();
    let ranks = side_ranks(rects);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| rects[j].c.cmp(&rects[i].c));
    let intervals = (2 * n).saturating_sub(1);
    let mut line = BaseLine::new(intervals);
    let mut colors = vec![RED; n];
    let mut inserted: Vec<usize> = Vec::with_capacity(n);
    for (step, &b) in order.iter().enumerate() {
        line.insert(b, ranks[b]);
        inserted.push(b);
        if step == 0 {
            colors[b] = BLUE;
            continue;
        }
        colors[b] = RED;
        let (ba, bb) = ranks[b];
        let Some(q) = (ba..bb).find(|&j| line.single(j) == Some(b)) else { continue };
        // left of q: intervals q-1 down to 0; right: q+1 up
        for left in [true, false] {
            let side: Vec<usize> = if left { (0..q).rev().collect() } else { (q + 1..intervals).collect() };
            let singles: Vec<(usize, usize)> =
                side.iter().filter_map(|&j| line.single(j).filter(|&r| r != b).map(|r| (j, r))).collect();
            if !singles.iter().any(|&(_, r)| colors[r] == GREEN) {
                continue;
            }
            let (s, nearest) = singles[0];
            let beyond_q = |i: &usize| if left { ranks[*i].1 <= q } else { ranks[*i].0 > q };
            if colors[nearest] == GREEN {
                swap_colors(&mut colors, inserted.iter().copied().filter(beyond_q), BLUE, GREEN);
            }
            let beyond_s = |i: &usize| if left { ranks[*i].1 <= s } else { ranks[*i].0 > s };
            swap_colors(&mut colors, inserted.iter().copied().filter(beyond_s), RED, GREEN);
        }
        swap_colors(&mut colors, inserted.iter().copied(), GREEN, RED);
    }
    Ok(Coloring::new(3, colors))
}

/// Side ranks of a sub-family, renumbered to `0..2m`.
fn local_ranks(ids: &[usize], ranks: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut sides: Vec<(usize, usize, bool)> =
        ids.iter().enumerate().flat_map(|(k, &i)| [(ranks[i].0, k, false), (ranks[i].1, k, true)]).collect();
    sides.sort_unstable();
    let mut local = vec![(0, 0); ids.len()];
    for (r, &(_, k, right)) in sides.iter().enumerate() {
        if right {
            local[k].1 = r;
        } else {
            local[k].0 = r;
        }
    }
    local
}

fn covering(ids: &[usize], local: &[(usize, usize)], j: usize) -> Vec<usize> {
    (0..ids.len()).filter(|&k| local[k].0 <= j && j < local[k].1).map(|k| ids[k]).collect()
}

enum Step {
    Solve(Vec<usize>),
    /// The left part is colored; remember the shared rectangles' colors and
    /// color the right part.
    AfterLeft { shared: Vec<usize>, right: Vec<usize> },
    /// Flip the right part if the shared rectangles disagree with the left.
    AfterRight { shared: Vec<usize>, saved: Vec<usize>, right: Vec<usize> },
    /// Color removed low rectangles once the rest is colored.
    Finish(Finish),
}

enum Finish {
    /// `b` gets the other color than `other`, or red without one.
    Differ { b: usize, other: Option<usize> },
    Same { b2: usize, b: usize },
    Pair { b: usize, b2: usize, third: Option<usize> },
}

fn other_color(c: usize) -> usize {
    1 - c
}

/// Two colors (red, blue) such that every point covered by at least three of
/// the rectangles sees both colors; base-line points covered by exactly two
/// rectangles see both as well.
pub fn color_rects_b_k3(rects: &[BottomlessRect]) -> Result<Coloring, InstanceError> {
    validate(rects)?;
    let n = rects.len();
    let ranks = side_ranks(rects);
    let mut colors = vec![RED; n];
    let mut stack = vec![Step::Solve((0..n).collect())];
    while let Some(step) = stack.pop() {
        match step {
            Step::Solve(ids) => solve(&ids, rects, &ranks, &mut colors, &mut stack),
            Step::AfterLeft { shared, right } => {
                let saved: Vec<usize> = shared.iter().map(|&i| colors[i]).collect();
                if let [c1, c2] = saved[..] {
                    assert_ne!(c1, c2, "two rectangles alone over a base-line point got one color");
                }
                stack.push(Step::AfterRight { shared, saved, right: right.clone() });
                stack.push(Step::Solve(right));
            }
            Step::AfterRight { shared, saved, right } => {
                if let [b1, b2] = shared[..] {
                    assert_ne!(colors[b1], colors[b2], "two rectangles alone over a base-line point got one color");
                }
                if colors[shared[0]] != saved[0] {
                    right.iter().for_each(|&i| colors[i] = other_color(colors[i]));
                }
            }
            Step::Finish(f) => match f {
                Finish::Differ { b, other } => colors[b] = other.map_or(RED, |o| other_color(colors[o])),
                Finish::Same { b2, b } => colors[b2] = colors[b],
                Finish::Pair { b, b2, third } => {
                    colors[b] = third.map_or(RED, |t| other_color(colors[t]));
                    colors[b2] = other_color(colors[b]);
                }
            },
        }
    }
    Ok(Coloring::new(2, colors))
}

fn solve(ids: &[usize], rects: &[BottomlessRect], ranks: &[(usize, usize)], colors: &mut [usize], stack: &mut Vec<Step>) {
    let m = ids.len();
    if m == 0 {
        return;
    }
    if m == 1 {
        colors[ids[0]] = RED;
        return;
    }
    let local = local_ranks(ids, ranks);
    let intervals = 2 * m - 1;
    let mut delta = vec![0isize; 2 * m];
    for &(a, b) in &local {
        delta[a] += 1;
        delta[b] -= 1;
    }
    let depth: Vec<usize> = delta[..intervals]
        .iter()
        .scan(0isize, |open, d| {
            *open += d;
            Some(*open as usize)
        })
        .collect();
    let min_right = local.iter().map(|r| r.1).min().unwrap();
    let max_left = local.iter().map(|r| r.0).max().unwrap();
    // first base-line split with rectangles strictly on both sides
    let split = (0..intervals).find(|&j| depth[j] <= 2 && min_right <= j && max_left > j);
    if let Some(j) = split {
        let shared = covering(ids, &local, j);
        let left: Vec<usize> = (0..m).filter(|&k| local[k].1 <= j).map(|k| ids[k]).chain(shared.iter().copied()).collect();
        let right: Vec<usize> = (0..m).filter(|&k| local[k].0 > j).map(|k| ids[k]).chain(shared.iter().copied()).collect();
        if shared.is_empty() {
            stack.push(Step::Solve(right));
            stack.push(Step::Solve(left));
        } else {
            stack.push(Step::AfterLeft { shared, right });
            stack.push(Step::Solve(left));
        }
        return;
    }
    let mut by_top: Vec<usize> = ids.to_vec();
    by_top.sort_by(|&i, &j| rects[i].c.cmp(&rects[j].c));
    let (b, b2) = (by_top[0], by_top[1]);
    let kb = ids.iter().position(|&i| i == b).unwrap();
    let kb2 = ids.iter().position(|&i| i == b2).unwrap();
    let covers = |k: usize, j: usize| local[k].0 <= j && j < local[k].1;
    let (l1, l2, r1, r2) = (0, 1, intervals - 1, intervals - 2);
    let on_left = |k: usize| covers(k, l1) || covers(k, l2);
    let on_right = |k: usize| covers(k, r1) || covers(k, r2);
    let without = |drop: &[usize]| ids.iter().copied().filter(|i| !drop.contains(i)).collect::<Vec<_>>();
    // the rectangle other than `skip` covering interval `j` together with b
    let partner = |j: usize, skip: &[usize]| covering(ids, &local, j).into_iter().find(|i| !skip.contains(i));
    if !on_left(kb) && !on_right(kb) {
        stack.push(Step::Finish(Finish::Differ { b, other: None }));
        stack.push(Step::Solve(without(&[b])));
    } else if !covers(kb, l2) || !covers(kb, r2) {
        // b reaches one end only
        let j = if on_left(kb) { l2 } else { r2 };
        let other = if covers(kb, j) { partner(j, &[b]) } else { None };
        stack.push(Step::Finish(Finish::Differ { b, other }));
        stack.push(Step::Solve(without(&[b])));
    } else if !on_left(kb2) && !on_right(kb2) {
        stack.push(Step::Finish(Finish::Same { b2, b }));
        stack.push(Step::Solve(without(&[b2])));
    } else {
        let target = if on_left(kb2) { r2 } else { l2 };
        let third = partner(target, &[b, b2]);
        stack.push(Step::Finish(Finish::Pair { b, b2, third }));
        stack.push(Step::Solve(without(&[b, b2])));
    }
}

/// Elementary base-line intervals with their covering rectangles.
pub fn baseline_cover(rects: &[BottomlessRect]) -> Vec<Vec<usize>> {
    let ranks = side_ranks(rects);
    let intervals = (2 * rects.len()).saturating_sub(1);
    (0..intervals)
        .map(|j| (0..rects.len()).filter(|&i| ranks[i].0 <= j && j < ranks[i].1).collect())
        .collect()
}

/// No base-line point covered by exactly one rectangle sees red.
pub fn singles_not_red(rects: &[BottomlessRect], col: &Coloring) -> bool {
    baseline_cover(rects).iter().all(|c| c.len() != 1 || col.colors[c[0]] != RED)
}

/// Every base-line point covered by exactly two rectangles sees two colors.
pub fn doubles_bichromatic(rects: &[BottomlessRect], col: &Coloring) -> bool {
    baseline_cover(rects).iter().all(|c| c.len() != 2 || col.colors[c[0]] != col.colors[c[1]])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::verify_instance;
    use crate::testgen;

    fn rect(a: i64, b: i64, c: i64) -> BottomlessRect {
        BottomlessRect::new(a, b, c).unwrap()
    }

    fn valid(rs: &[BottomlessRect], col: &Coloring, k: usize) -> bool {
        verify_instance(&Instance::BottomlessRects(rs.to_vec()), Family::BottomlessRects, col, k)
            .unwrap()
            .is_valid()
    }

    #[test]
    fn gadget_needs_three() {
        let rs = [rect(1, 5, 3), rect(4, 8, 2), rect(0, 10, 1)];
        let c = color_rects_b_k2(&rs).unwrap();
        assert_eq!(c.used(), 3);
        assert!(valid(&rs, &c, 2));
        assert!(singles_not_red(&rs, &c));
    }

    #[test]
    fn singletons() {
        assert_eq!(color_rects_b_k2(&[rect(0, 1, 1)]).unwrap().colors, vec![BLUE]);
        assert_eq!(color_rects_b_k3(&[rect(0, 1, 1)]).unwrap().colors, vec![RED]);
    }

    #[test]
    fn nested_triple() {
        let rs = [rect(0, 10, 3), rect(1, 9, 2), rect(2, 8, 1)];
        let c = color_rects_b_k2(&rs).unwrap();
        assert!(valid(&rs, &c, 2));
        let c = color_rects_b_k3(&rs).unwrap();
        assert!(valid(&rs, &c, 3));
        assert!(doubles_bichromatic(&rs, &c));
        assert_ne!(c.used(), 1);
    }

    #[test]
    fn disjoint_pair() {
        let rs = [rect(0, 1, 1), rect(2, 3, 2)];
        assert!(valid(&rs, &color_rects_b_k3(&rs).unwrap(), 3));
    }

    #[test]
    fn random_families() {
        for seed in 0..60 {
            let n = 1 + seed as usize % 25;
            let Instance::BottomlessRects(rs) = testgen::instance(seed, Family::BottomlessRects, n, 40) else {
                unreachable!()
            };
            let c2 = color_rects_b_k2(&rs).unwrap();
            assert!(valid(&rs, &c2, 2), "k=2 seed {seed}");
            assert!(singles_not_red(&rs, &c2), "seed {seed}");
            let c3 = color_rects_b_k3(&rs).unwrap();
            assert!(valid(&rs, &c3, 3), "k=3 seed {seed}");
            assert!(doubles_bichromatic(&rs, &c3), "seed {seed}");
        }
    }

    #[test]
    fn deep_chains_do_not_overflow() {
        // staircase of overlapping rectangles forces many fourth-case steps
        let rs: Vec<BottomlessRect> = (0..2000).map(|i| rect(2 * i, 2 * i + 5, 10_000 - i)).collect();
        let c = color_rects_b_k3(&rs).unwrap();
        assert!(doubles_bichromatic(&rs, &c));
    }
}
