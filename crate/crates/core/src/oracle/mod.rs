//! Brute-force hyperedge enumeration for all six settings, two independent
//! strategies each, and instance-level verification built on them.
//!
//! The structured enumerators walk the combinatorial description of the
//! realizable sets; the samplers in [`sample`] probe regions or points on a
//! grid and only use membership tests. Agreement of the two is tested.

mod dual;
mod primal;
pub mod sample;

use alloc::vec::Vec;
use core::fmt;
use core::ops::ControlFlow;

use crate::geom::Point;
use crate::hypergraph::{check_len, Coloring, Hypergraph, LengthMismatch, Realizer, Verdict};
use crate::instance::{validate_general_position, Family, Instance, InstanceError};

pub use dual::{dual_sample_points, halfplane_arrangement_samples};
pub use primal::halfplane_realizer;

/// Receives each enumerated set with a lazily evaluated realizer. Sets may
/// repeat and are not sorted.
pub(crate) type Visit<'a> = dyn FnMut(&[usize], &dyn Fn() -> Realizer) -> ControlFlow<()> + 'a;

fn collect(n: usize, run: impl FnOnce(&mut Visit) -> ControlFlow<()>) -> Hypergraph {
    let mut h = Hypergraph::new(n);
    let _ = run(&mut |e: &[usize], r: &dyn Fn() -> Realizer| {
        h.insert(e.to_vec(), r());
        ControlFlow::Continue(())
    });
    h
}

fn check(instance: &Instance, family: Family) -> Result<(), InstanceError> {
    validate_general_position(instance, family)
}

pub fn enumerate_primal_bottomless(points: &[Point]) -> Result<Hypergraph, InstanceError> {
    check(&Instance::Points(points.to_vec()), Family::BottomlessPoints)?;
    Ok(collect(points.len(), |v| primal::bottomless_cuts(points, None, v)))
}

pub fn enumerate_primal_halfplane(points: &[Point]) -> Result<Hypergraph, InstanceError> {
    check(&Instance::Points(points.to_vec()), Family::HalfplanePoints)?;
    Ok(collect(points.len(), |v| primal::halfplane_cuts(points, None, v)))
}

pub fn enumerate_primal_baseline(points: &[Point]) -> Result<Hypergraph, InstanceError> {
    check(&Instance::Points(points.to_vec()), Family::BaselinePoints)?;
    Ok(collect(points.len(), |v| primal::baseline_cuts(points, None, v)))
}

pub fn enumerate_dual_bottomless(rects: &[crate::geom::BottomlessRect]) -> Result<Hypergraph, InstanceError> {
    let inst = Instance::BottomlessRects(rects.to_vec());
    check(&inst, Family::BottomlessRects)?;
    Ok(dual::covering_sets(&inst))
}

pub fn enumerate_dual_baseline(rects: &[crate::geom::BaselineRect]) -> Result<Hypergraph, InstanceError> {
    let inst = Instance::BaselineRects(rects.to_vec());
    check(&inst, Family::BaselineRects)?;
    Ok(dual::covering_sets(&inst))
}

pub fn enumerate_dual_halfplane(hs: &[crate::geom::HalfPlane]) -> Result<Hypergraph, InstanceError> {
    let inst = Instance::HalfPlanes(hs.to_vec());
    check(&inst, Family::HalfPlanes)?;
    Ok(dual::covering_sets(&inst))
}

/// Structured enumeration for any setting.
pub fn enumerate(instance: &Instance, family: Family) -> Result<Hypergraph, InstanceError> {
    check(instance, family)?;
    Ok(match (instance, family) {
        (Instance::Points(p), Family::BottomlessPoints) => {
            collect(p.len(), |v| primal::bottomless_cuts(p, None, v))
        }
        (Instance::Points(p), Family::BaselinePoints) => collect(p.len(), |v| primal::baseline_cuts(p, None, v)),
        (Instance::Points(p), _) => collect(p.len(), |v| primal::halfplane_cuts(p, None, v)),
        _ => dual::covering_sets(instance),
    })
}

/// Hyperedges of exactly `size` vertices of a primal setting.
pub fn enumerate_of_size(points: &[Point], family: Family, size: usize) -> Result<Hypergraph, InstanceError> {
    let inst = Instance::Points(points.to_vec());
    check(&inst, family)?;
    Ok(collect(points.len(), |v| primal_cuts(points, family, Some(size), v)))
}

fn primal_cuts(points: &[Point], family: Family, size: Option<usize>, v: &mut Visit) -> ControlFlow<()> {
    match family {
        Family::BottomlessPoints => primal::bottomless_cuts(points, size, v),
        Family::BaselinePoints => primal::baseline_cuts(points, size, v),
        Family::HalfplanePoints => primal::halfplane_cuts(points, size, v),
        _ => unreachable!("not a primal family"),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VerifyError {
    Instance(InstanceError),
    Length(LengthMismatch),
}

impl fmt::Display for VerifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerifyError::Instance(e) => e.fmt(f),
            VerifyError::Length(e) => e.fmt(f),
        }
    }
}

impl core::error::Error for VerifyError {}

impl From<InstanceError> for VerifyError {
    fn from(e: InstanceError) -> Self {
        VerifyError::Instance(e)
    }
}

impl From<LengthMismatch> for VerifyError {
    fn from(e: LengthMismatch) -> Self {
        VerifyError::Length(e)
    }
}

fn sorted(edge: &[usize]) -> Vec<usize> {
    let mut e = edge.to_vec();
    e.sort_unstable();
    e
}

/// Checks that `col` is `k`-proper for `instance` under `family`.
///
/// The primal families are monotone, so only hyperedges of exactly `k`
/// vertices are generated; the dual families are enumerated in full.
pub fn verify_instance(instance: &Instance, family: Family, col: &Coloring, k: usize) -> Result<Verdict, VerifyError> {
    check(instance, family)?;
    check_len(instance.len(), col)?;
    match instance {
        Instance::Points(points) => {
            let k = k.max(1);
            let mut verdict = Verdict::VALID;
            let _ = primal_cuts(points, family, Some(k), &mut |e, r| {
                if crate::hypergraph::is_monochromatic(e, col) {
                    verdict = Verdict::invalid(sorted(e), r());
                    ControlFlow::Break(())
                } else {
                    ControlFlow::Continue(())
                }
            });
            Ok(verdict)
        }
        _ => {
            let mut verdict = Verdict::VALID;
            let _ = dual::covering_cells(instance, &mut |e, r| {
                if e.len() >= k && crate::hypergraph::is_monochromatic(e, col) {
                    verdict = Verdict::invalid(sorted(e), r());
                    ControlFlow::Break(())
                } else {
                    ControlFlow::Continue(())
                }
            });
            Ok(verdict)
        }
    }
}

/// Checks that `col` is conflict-free with parameter `k` for `instance`.
pub fn verify_instance_cf(instance: &Instance, family: Family, col: &Coloring, k: usize) -> Result<Verdict, VerifyError> {
    check(instance, family)?;
    check_len(instance.len(), col)?;
    match (instance, family) {
        (Instance::Points(p), Family::BottomlessPoints) => Ok(primal::bottomless_cf(p, col, k)),
        (Instance::Points(p), Family::HalfplanePoints) => Ok(primal::halfplane_cf(p, col, k)),
        (Instance::Points(p), _) => {
            let mut verdict = Verdict::VALID;
            let _ = primal::baseline_cuts(p, None, &mut |e, r| {
                if crate::hypergraph::is_conflict_free(e, col, k) {
                    ControlFlow::Continue(())
                } else {
                    verdict = Verdict::invalid(sorted(e), r());
                    ControlFlow::Break(())
                }
            });
            Ok(verdict)
        }
        _ => {
            let mut verdict = Verdict::VALID;
            let _ = dual::covering_cells(instance, &mut |e, r| {
                if crate::hypergraph::is_conflict_free(e, col, k) {
                    ControlFlow::Continue(())
                } else {
                    verdict = Verdict::invalid(sorted(e), r());
                    ControlFlow::Break(())
                }
            });
            Ok(verdict)
        }
    }
}

/// Whether `r` realizes exactly `edge` for the objects of `instance`.
pub fn realizes(instance: &Instance, edge: &[usize], r: &Realizer) -> bool {
    let inside: Vec<usize> = match (instance, r) {
        (Instance::Points(p), Realizer::Bottomless(rect)) => {
            (0..p.len()).filter(|&i| rect.contains(&p[i])).collect()
        }
        (Instance::Points(p), Realizer::Baseline(rect)) => (0..p.len()).filter(|&i| rect.contains(&p[i])).collect(),
        (Instance::Points(p), Realizer::HalfPlane(h)) => (0..p.len()).filter(|&i| h.contains(&p[i])).collect(),
        (Instance::BottomlessRects(rs), Realizer::Point(q)) => {
            (0..rs.len()).filter(|&i| rs[i].contains(q)).collect()
        }
        (Instance::BaselineRects(rs), Realizer::Point(q)) => (0..rs.len()).filter(|&i| rs[i].contains(q)).collect(),
        (Instance::HalfPlanes(hs), Realizer::Point(q)) => (0..hs.len()).filter(|&i| hs[i].contains(q)).collect(),
        _ => return false,
    };
    inside == sorted(edge)
}

#[cfg(test)]
mod tests;
