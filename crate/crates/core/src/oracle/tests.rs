use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;

use super::sample::{sample, sample_dual};
use super::*;
use crate::geom::{BaselineRect, BottomlessRect, HalfPlane, Side};
use crate::hypergraph::{check_monotonicity, verify_cf, verify_kproper};
use crate::rational::Rational;
use crate::testgen;

fn pts(v: &[(i64, i64)]) -> Vec<Point> {
    v.iter().map(|&(x, y)| Point::new(x, y)).collect()
}

fn edges(h: &Hypergraph) -> Vec<Vec<usize>> {
    h.edges().cloned().collect()
}

fn all_realizers_sound(instance: &Instance, h: &Hypergraph) {
    for (e, r) in h.iter() {
        assert!(realizes(instance, e, r), "{r} does not cut out {e:?}");
    }
}

#[test]
fn bottomless_three_points() {
    let p = pts(&[(0, 0), (1, 2), (2, 1)]);
    let h = enumerate_primal_bottomless(&p).unwrap();
    assert_eq!(
        edges(&h),
        vec![vec![0], vec![0, 1], vec![0, 1, 2], vec![0, 2], vec![1], vec![1, 2], vec![2]]
    );
    assert!(h.same_edges(&sample::sample_primal_bottomless(&p)));
    let h = enumerate_primal_bottomless(&pts(&[(0, 1), (1, 0), (2, 2)])).unwrap();
    assert!(!h.contains(&[0, 2]));
}

#[test]
fn bottomless_singleton_and_staircase() {
    let h = enumerate_primal_bottomless(&pts(&[(3, 4)])).unwrap();
    assert_eq!(edges(&h), vec![vec![0]]);
    let stair = pts(&[(0, 0), (1, 1), (2, 2), (3, 3)]);
    let h = enumerate_primal_bottomless(&stair).unwrap();
    for i in 0..4 {
        for j in i..4 {
            assert!(h.contains(&(i..=j).collect::<Vec<_>>()));
        }
    }
    assert!(h.same_edges(&sample::sample_primal_bottomless(&stair)));
}

#[test]
fn halfplane_triangle_and_p_star() {
    let tri = pts(&[(0, 0), (4, 0), (2, 3)]);
    let h = enumerate_primal_halfplane(&tri).unwrap();
    assert_eq!(h.len(), 7);
    let p_star = pts(&[(0, 0), (4, 0), (2, 4), (2, 1)]);
    let h = enumerate_primal_halfplane(&p_star).unwrap();
    for i in 0..3 {
        let mut e = vec![i, 3];
        e.sort_unstable();
        assert!(h.contains(&e));
    }
    // the outer triangle cannot be cut off without its interior point
    assert!(!h.contains(&[0, 1, 2]));
    assert!(h.contains(&[0, 1, 2, 3]));
    assert!(h.contains(&[0, 2]));
    assert!(!h.contains(&[3]));
    assert!(h.same_edges(&sample::sample_primal_halfplane(&p_star)));
    all_realizers_sound(&Instance::Points(p_star), &h);
}

#[test]
fn dual_bottomless_examples() {
    let nested = vec![
        BottomlessRect::new(0, 10, 3).unwrap(),
        BottomlessRect::new(1, 9, 2).unwrap(),
        BottomlessRect::new(2, 8, 1).unwrap(),
    ];
    let h = enumerate_dual_bottomless(&nested).unwrap();
    assert_eq!(edges(&h), vec![vec![0], vec![0, 1], vec![0, 1, 2]]);
    let disjoint = vec![BottomlessRect::new(0, 1, 1).unwrap(), BottomlessRect::new(2, 3, 2).unwrap()];
    assert_eq!(edges(&enumerate_dual_bottomless(&disjoint).unwrap()), vec![vec![0], vec![1]]);
}

#[test]
fn dual_halfplane_examples() {
    let two = vec![HalfPlane::new(1, 0, Side::Above), HalfPlane::new(-1, 0, Side::Above)];
    let h = enumerate_dual_halfplane(&two).unwrap();
    assert_eq!(edges(&h), vec![vec![0], vec![0, 1], vec![1]]);
    let parallel = vec![HalfPlane::new(0, 0, Side::Above), HalfPlane::new(0, 1, Side::Below)];
    let h = enumerate_dual_halfplane(&parallel).unwrap();
    assert_eq!(edges(&h), vec![vec![0], vec![0, 1], vec![1]]);
    assert!(h.same_edges(&sample_dual(&Instance::HalfPlanes(parallel))));
}

#[test]
fn baseline_examples() {
    let one = vec![BaselineRect::new(0, 2, -1, 1).unwrap()];
    let h = enumerate_dual_baseline(&one).unwrap();
    assert_eq!(edges(&h), vec![vec![0]]);
    let h = enumerate_primal_baseline(&pts(&[(1, 1)])).unwrap();
    assert_eq!(edges(&h), vec![vec![0]]);
    // only points above the line: same cuts as bottomless rectangles
    for seed in 0..10 {
        let p: Vec<Point> = testgen::points(seed, Family::BottomlessPoints, 7)
            .into_iter()
            .map(|p| Point { x: p.x, y: &p.y.abs() + &Rational::from_integer(1000) })
            .collect();
        if validate_general_position(&Instance::Points(p.clone()), Family::BottomlessPoints).is_err() {
            continue;
        }
        let a = enumerate_primal_baseline(&p).unwrap();
        let b = enumerate_primal_bottomless(&p).unwrap();
        assert!(a.same_edges(&b));
    }
}

#[test]
fn rejects_degenerate_input() {
    assert!(enumerate_primal_bottomless(&pts(&[(0, 0), (1, 0)])).is_err());
    assert!(enumerate_primal_halfplane(&pts(&[(0, 0), (1, 1), (2, 2)])).is_err());
}

#[test]
fn strategies_agree() {
    for family in Family::ALL {
        for seed in 0..25 {
            let n = 1 + (seed as usize % 8);
            let inst = testgen::instance(seed, family, n, 12);
            let a = enumerate(&inst, family).unwrap();
            let b = sample(&inst, family);
            assert!(
                a.same_edges(&b),
                "{family} seed {seed}: structured-only {:?}, sampled-only {:?}",
                a.missing_from(&b).collect::<Vec<_>>(),
                b.missing_from(&a).collect::<Vec<_>>()
            );
            all_realizers_sound(&inst, &a);
            all_realizers_sound(&inst, &b);
        }
    }
}

#[test]
fn sized_enumeration_matches_full() {
    for family in [Family::BottomlessPoints, Family::BaselinePoints, Family::HalfplanePoints] {
        for seed in 0..10 {
            let inst = testgen::instance(seed, family, 9, 40);
            let Instance::Points(p) = &inst else { unreachable!() };
            let full = enumerate(&inst, family).unwrap();
            assert!(check_monotonicity(&full), "{family} seed {seed}");
            for k in 1..=4 {
                let sized = enumerate_of_size(p, family, k).unwrap();
                let expected: Vec<&Vec<usize>> = full.edges().filter(|e| e.len() == k).collect();
                assert_eq!(sized.edges().collect::<Vec<_>>(), expected, "{family} seed {seed} k {k}");
                all_realizers_sound(&inst, &sized);
            }
        }
    }
}

fn random_coloring(seed: u64, n: usize, palette: usize) -> Coloring {
    let mut rng = testgen::rng(seed ^ 0x5eed);
    Coloring::new(palette, (0..n).map(|_| rng.gen_range(0..palette)).collect())
}

#[test]
fn instance_verification_matches_full_enumeration() {
    for family in Family::ALL {
        for seed in 0..20 {
            let inst = testgen::instance(seed, family, 8, 30);
            let full = enumerate(&inst, family).unwrap();
            for k in 1..=4 {
                let col = random_coloring(seed * 7 + k as u64, inst.len(), 2);
                let fast = verify_instance(&inst, family, &col, k).unwrap();
                let slow = verify_kproper(&full, &col, k).unwrap();
                assert_eq!(fast.is_valid(), slow.is_valid(), "{family} seed {seed} k {k}");
                if let Some(w) = fast.witness {
                    assert!(w.edge.len() >= k && crate::hypergraph::is_monochromatic(&w.edge, &col));
                    assert!(realizes(&inst, &w.edge, &w.realizer));
                }
                let cf_fast = verify_instance_cf(&inst, family, &col, k).unwrap();
                let cf_slow = verify_cf(&full, &col, k).unwrap();
                assert_eq!(cf_fast.is_valid(), cf_slow.is_valid(), "cf {family} seed {seed} k {k}");
                if let Some(w) = cf_fast.witness {
                    assert!(!crate::hypergraph::is_conflict_free(&w.edge, &col, k));
                    assert!(realizes(&inst, &w.edge, &w.realizer));
                }
            }
        }
    }
}

#[test]
fn verification_rejects_wrong_length() {
    let inst = Instance::Points(pts(&[(0, 0), (1, 2)]));
    let err = verify_instance(&inst, Family::BottomlessPoints, &Coloring::new(1, vec![0]), 2).unwrap_err();
    assert!(matches!(err, VerifyError::Length(_)));
}
