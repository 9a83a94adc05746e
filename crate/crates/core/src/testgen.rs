//! Seeded random instances in general position for unit tests.

use alloc::vec::Vec;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::geom::{orient, BaselineRect, BottomlessRect, HalfPlane, Orientation, Point, Side};
use crate::instance::{validate_general_position, Family, Instance};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `count` distinct integers from `lo..=hi`, in random order.
fn distinct(rng: &mut ChaCha8Rng, count: usize, lo: i64, hi: i64) -> Vec<i64> {
    let len = (hi - lo + 1) as usize;
    assert!(count <= len, "range too small for {count} distinct values");
    sample(rng, len, count).into_iter().map(|i| lo + i as i64).collect()
}

/// Distinct points of the grid `[-span, span]^2`, no three collinear; each
/// candidate is redrawn until it avoids every line through two earlier ones.
fn no_three_collinear(rng: &mut ChaCha8Rng, n: usize, span: i64) -> Vec<Point> {
    let mut out: Vec<Point> = Vec::with_capacity(n);
    while out.len() < n {
        let p = Point::new(rng.gen_range(-span..=span), rng.gen_range(-span..=span));
        let clash = out.iter().any(|q| *q == p)
            || (0..out.len()).any(|i| (i + 1..out.len()).any(|j| orient(&out[i], &out[j], &p) == Orientation::Collinear));
        if !clash {
            out.push(p);
        }
    }
    out
}

fn draw(rng: &mut ChaCha8Rng, family: Family, n: usize, span: i64) -> Instance {
    match family {
        Family::BottomlessPoints | Family::BaselinePoints => {
            let xs = distinct(rng, n, -span, span);
            let ys = distinct(rng, n, -span, span - 1);
            // shift the nonnegative half up by one so that nothing lands on y = 0
            let ys = ys.into_iter().map(|y| if y >= 0 { y + 1 } else { y });
            Instance::Points(xs.into_iter().zip(ys).map(|(x, y)| Point::new(x, y)).collect())
        }
        Family::HalfplanePoints => Instance::Points(no_three_collinear(rng, n, span)),
        Family::BottomlessRects => {
            let sides = distinct(rng, 2 * n, -span, span);
            let tops = distinct(rng, n, -span, span);
            Instance::BottomlessRects(
                (0..n)
                    .map(|i| {
                        let (a, b) = (sides[2 * i], sides[2 * i + 1]);
                        BottomlessRect { a: a.min(b).into(), b: a.max(b).into(), c: tops[i].into() }
                    })
                    .collect(),
            )
        }
        Family::BaselineRects => {
            let sides = distinct(rng, 2 * n, -span, span);
            let tops = distinct(rng, n, 1, span.max(n as i64));
            let bottoms = distinct(rng, n, 1, span.max(n as i64));
            Instance::BaselineRects(
                (0..n)
                    .map(|i| {
                        let (a, b) = (sides[2 * i], sides[2 * i + 1]);
                        BaselineRect {
                            a: a.min(b).into(),
                            b: a.max(b).into(),
                            bottom: (-bottoms[i]).into(),
                            top: tops[i].into(),
                        }
                    })
                    .collect(),
            )
        }
        Family::HalfPlanes => Instance::HalfPlanes(
            no_three_collinear(rng, n, span)
                .into_iter()
                .map(|p| {
                    let side = if rng.gen_bool(0.5) { Side::Above } else { Side::Below };
                    HalfPlane { slope: p.x, intercept: p.y, region: side }
                })
                .collect(),
        ),
    }
}

/// A random instance of `n` objects with integer data in `[-span, span]`,
/// redrawn until it is in general position. `span` must leave room for `2n`
/// distinct values.
pub fn instance(seed: u64, family: Family, n: usize, span: i64) -> Instance {
    let mut rng = rng(seed);
    loop {
        let inst = draw(&mut rng, family, n, span);
        if validate_general_position(&inst, family).is_ok() {
            return inst;
        }
    }
}

pub fn points(seed: u64, family: Family, n: usize) -> Vec<Point> {
    match instance(seed, family, n, 10 * n as i64 * n as i64 + 10) {
        Instance::Points(p) => p,
        _ => unreachable!(),
    }
}
