//! Picks the coloring algorithm for a setting and a threshold `k`.

use core::fmt;

use crate::baseline::{color_points_bprime_k2, color_points_bprime_k3, color_points_bprime_k7, color_rects_bprime_k3};
use crate::bottomless_dual::{color_rects_b_k2, color_rects_b_k3};
use crate::bottomless_primal::{color_points_b_k2, color_points_b_k4};
use crate::halfplane_dual::{color_halfplanes_k2, color_halfplanes_k4};
use crate::halfplane_primal::{color_points_h_k2, color_points_h_k3};
use crate::hypergraph::Coloring;
use crate::instance::{Family, Instance, InstanceError};

/// The algorithms behind [`color`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algorithm {
    /// Three colors, upward sweep avoiding both x-neighbors.
    BottomlessPointsThree,
    /// Two colors, upward sweep coloring x-adjacent pairs.
    BottomlessPointsTwo,
    /// Three colors, insertion by decreasing top with side swaps.
    BottomlessRectsThree,
    /// Two colors, recursive split along the base-line.
    BottomlessRectsTwo,
    /// At most four colors, hull cycle plus cut partners.
    HalfplanePointsHull,
    /// Two colors, hull ears and chains.
    HalfplanePointsTwo,
    /// Three colors on the dual hull paths and their cross edges.
    HalfPlanesThree,
    /// Two colors, the point algorithm on each orientation.
    HalfPlanesTwo,
    /// Pairs of two-colorings of the upper and mirrored lower parts.
    BaselineRectsPairs,
    /// Disjoint three-color palettes on the two sides.
    BaselinePointsSix,
    /// One shared three-color palette on both sides.
    BaselinePointsThree,
    /// One shared two-color palette on both sides.
    BaselinePointsTwo,
}

impl Algorithm {
    /// Largest number of colors the algorithm may use.
    pub fn palette(self) -> usize {
        match self {
            Algorithm::BottomlessPointsThree
            | Algorithm::BottomlessRectsThree
            | Algorithm::HalfPlanesThree
            | Algorithm::BaselinePointsThree => 3,
            Algorithm::BottomlessPointsTwo
            | Algorithm::BottomlessRectsTwo
            | Algorithm::HalfplanePointsTwo
            | Algorithm::HalfPlanesTwo
            | Algorithm::BaselinePointsTwo => 2,
            Algorithm::HalfplanePointsHull | Algorithm::BaselineRectsPairs => 4,
            Algorithm::BaselinePointsSix => 6,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::BottomlessPointsThree => "bottomless-points-3",
            Algorithm::BottomlessPointsTwo => "bottomless-points-2",
            Algorithm::BottomlessRectsThree => "bottomless-rects-3",
            Algorithm::BottomlessRectsTwo => "bottomless-rects-2",
            Algorithm::HalfplanePointsHull => "halfplane-points-hull",
            Algorithm::HalfplanePointsTwo => "halfplane-points-2",
            Algorithm::HalfPlanesThree => "halfplanes-3",
            Algorithm::HalfPlanesTwo => "halfplanes-2",
            Algorithm::BaselineRectsPairs => "baseline-rects-4",
            Algorithm::BaselinePointsSix => "baseline-points-6",
            Algorithm::BaselinePointsThree => "baseline-points-3",
            Algorithm::BaselinePointsTwo => "baseline-points-2",
        }
    }
}

/// No algorithm is available for the setting at this `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Unsupported {
    pub family: Family,
    pub k: usize,
}

impl fmt::Display for Unsupported {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "no coloring algorithm for {} at k={}", self.family, self.k)
    }
}

impl core::error::Error for Unsupported {}

/// The algorithm used for `family` at threshold `k`: the one with the
/// smallest palette among those proven for some `k' <= k`.
pub fn route(family: Family, k: usize) -> Result<Algorithm, Unsupported> {
    use Algorithm::*;
    let alg = match (family, k) {
        (_, 0 | 1) => None,
        (Family::BottomlessPoints, 2 | 3) => Some(BottomlessPointsThree),
        (Family::BottomlessPoints, _) => Some(BottomlessPointsTwo),
        (Family::BottomlessRects, 2) => Some(BottomlessRectsThree),
        (Family::BottomlessRects, _) => Some(BottomlessRectsTwo),
        (Family::HalfplanePoints, 2) => Some(HalfplanePointsHull),
        (Family::HalfplanePoints, _) => Some(HalfplanePointsTwo),
        (Family::HalfPlanes, 2 | 3) => Some(HalfPlanesThree),
        (Family::HalfPlanes, _) => Some(HalfPlanesTwo),
        (Family::BaselineRects, 2) => None,
        (Family::BaselineRects, _) => Some(BaselineRectsPairs),
        (Family::BaselinePoints, 2) => Some(BaselinePointsSix),
        (Family::BaselinePoints, 3..=6) => Some(BaselinePointsThree),
        (Family::BaselinePoints, _) => Some(BaselinePointsTwo),
    };
    alg.ok_or(Unsupported { family, k })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ColorError {
    Unsupported(Unsupported),
    Instance(InstanceError),
}

impl fmt::Display for ColorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColorError::Unsupported(u) => u.fmt(f),
            ColorError::Instance(e) => e.fmt(f),
        }
    }
}

impl core::error::Error for ColorError {}

impl From<InstanceError> for ColorError {
    fn from(e: InstanceError) -> Self {
        ColorError::Instance(e)
    }
}

impl From<Unsupported> for ColorError {
    fn from(u: Unsupported) -> Self {
        ColorError::Unsupported(u)
    }
}

/// A `k`-proper coloring of the instance, by the algorithm of [`route`].
pub fn color(instance: &Instance, family: Family, k: usize) -> Result<Coloring, ColorError> {
    let alg = route(family, k)?;
    if !instance.fits(family) {
        return Err(InstanceError::Mismatch { family }.into());
    }
    let col = match instance {
        Instance::Points(p) => match alg {
            Algorithm::BottomlessPointsThree => color_points_b_k2(p)?,
            Algorithm::BottomlessPointsTwo => color_points_b_k4(p)?,
            Algorithm::HalfplanePointsHull => color_points_h_k2(p)?.coloring,
            Algorithm::HalfplanePointsTwo => color_points_h_k3(p)?,
            Algorithm::BaselinePointsSix => color_points_bprime_k2(p)?,
            Algorithm::BaselinePointsThree => color_points_bprime_k3(p)?,
            Algorithm::BaselinePointsTwo => color_points_bprime_k7(p)?,
            _ => unreachable!("routed to a region algorithm"),
        },
        Instance::BottomlessRects(r) => match alg {
            Algorithm::BottomlessRectsThree => color_rects_b_k2(r)?,
            _ => color_rects_b_k3(r)?,
        },
        Instance::HalfPlanes(h) => match alg {
            Algorithm::HalfPlanesThree => color_halfplanes_k2(h)?,
            _ => color_halfplanes_k4(h)?,
        },
        Instance::BaselineRects(r) => color_rects_bprime_k3(r)?,
    };
    Ok(col)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::verify_instance;
    use crate::testgen;

    #[test]
    fn routes() {
        assert_eq!(route(Family::BottomlessPoints, 3), Ok(Algorithm::BottomlessPointsThree));
        assert_eq!(route(Family::HalfPlanes, 3), Ok(Algorithm::HalfPlanesThree));
        assert_eq!(route(Family::BaselinePoints, 6), Ok(Algorithm::BaselinePointsThree));
        assert_eq!(route(Family::BaselinePoints, 7), Ok(Algorithm::BaselinePointsTwo));
        assert!(route(Family::BaselineRects, 2).is_err());
        assert!(route(Family::BottomlessRects, 1).is_err());
    }

    #[test]
    fn every_route_verifies() {
        for family in Family::ALL {
            for k in 2..=8 {
                let Ok(alg) = route(family, k) else { continue };
                for seed in 0..5 {
                    let n = if family.is_primal() { 30 } else { 15 };
                    let inst = testgen::instance(seed, family, n, 400);
                    let col = color(&inst, family, k).unwrap();
                    assert!(col.palette <= alg.palette() && col.used() <= alg.palette());
                    assert!(verify_instance(&inst, family, &col, k).unwrap().is_valid(), "{family} k={k} seed {seed}");
                }
            }
        }
    }

    #[test]
    fn mismatched_objects() {
        let inst = Instance::Points(alloc::vec![crate::geom::Point::new(0, 1)]);
        assert!(matches!(color(&inst, Family::HalfPlanes, 2), Err(ColorError::Instance(InstanceError::Mismatch { .. }))));
    }
}
