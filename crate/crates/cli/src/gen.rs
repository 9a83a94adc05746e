//! Seeded random instances in general position.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use regioncolor_core::geom::{BaselineRect, BottomlessRect, HalfPlane, Point, Side};
use regioncolor_core::instance::validate_general_position;
use regioncolor_core::{Family, Instance};

/// Draws per seed before giving up.
pub const MAX_ATTEMPTS: usize = 100;

#[derive(Debug, thiserror::Error)]
pub enum GenError {
    #[error("n must be at least 1")]
    Empty,
    #[error("no instance in general position after {MAX_ATTEMPTS} draws (seed {seed})")]
    Exhausted { seed: u64 },
}

/// `count` distinct integers from `lo..=hi` in random order.
fn distinct(rng: &mut ChaCha8Rng, count: usize, lo: i64, hi: i64) -> Vec<i64> {
    sample(rng, (hi - lo + 1) as usize, count).into_iter().map(|i| lo + i as i64).collect()
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// Points `(t, t^2 mod p)` for distinct random `t < p`, with `p` the largest
/// prime not above `limit`. No three of them are collinear.
fn modular_parabola(rng: &mut ChaCha8Rng, n: usize, limit: i64) -> Vec<(i64, i64)> {
    let p = (2..=limit as u64).rev().find(|&p| is_prime(p)).expect("limit is at least 2");
    assert!(p as usize >= n, "not enough room for {n} points");
    sample(rng, p as usize, n)
        .into_iter()
        .map(|t| (t as i64, ((t as u128 * t as u128) % p as u128) as i64))
        .collect()
}

fn draw(rng: &mut ChaCha8Rng, family: Family, n: usize) -> Instance {
    let range = 10 * (n as i64) * (n as i64);
    match family {
        Family::BottomlessPoints => {
            let (xs, ys) = (distinct(rng, n, 0, range), distinct(rng, n, 0, range));
            Instance::Points(xs.into_iter().zip(ys).map(|(x, y)| Point::new(x, y)).collect())
        }
        Family::BaselinePoints => {
            // heights on both sides of the base-line, never on it
            let xs = distinct(rng, n, 0, range);
            let ys = distinct(rng, n, -range / 2, range / 2 - 1).into_iter().map(|y| if y >= 0 { y + 1 } else { y });
            Instance::Points(xs.into_iter().zip(ys).map(|(x, y)| Point::new(x, y)).collect())
        }
        Family::HalfplanePoints => {
            Instance::Points(modular_parabola(rng, n, range).into_iter().map(|(x, y)| Point::new(x, y)).collect())
        }
        Family::BottomlessRects => {
            let sides = distinct(rng, 2 * n, 0, range);
            let tops = distinct(rng, n, 0, range);
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
            let sides = distinct(rng, 2 * n, 0, range);
            let tops = distinct(rng, n, 1, range);
            let bottoms = distinct(rng, n, 1, range);
            Instance::BaselineRects(
                (0..n)
                    .map(|i| {
                        let (a, b) = (sides[2 * i], sides[2 * i + 1]);
                        BaselineRect { a: a.min(b).into(), b: a.max(b).into(), bottom: (-bottoms[i]).into(), top: tops[i].into() }
                    })
                    .collect(),
            )
        }
        Family::HalfPlanes => Instance::HalfPlanes(
            modular_parabola(rng, n, range)
                .into_iter()
                .map(|(a, b)| HalfPlane::new(a, b, if rng.gen_bool(0.5) { Side::Above } else { Side::Below }))
                .collect(),
        ),
    }
}

/// A random instance of `n` objects for `family`, determined by `seed`.
pub fn generate(family: Family, n: usize, seed: u64) -> Result<Instance, GenError> {
    if n == 0 {
        return Err(GenError::Empty);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        let inst = draw(&mut rng, family, n);
        if validate_general_position(&inst, family).is_ok() {
            return Ok(inst);
        }
    }
    Err(GenError::Exhausted { seed })
}
