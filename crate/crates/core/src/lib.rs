//! Exact algorithms for coloring points and regions so that every large
//! enough hyperedge induced by bottomless rectangles, rectangles crossing a
//! common base-line, or half-planes is not monochromatic, together with
//! brute-force oracles and an exhaustive search lab.
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod baseline;
pub mod bottomless_dual;
pub mod bottomless_primal;
pub mod dispatch;
pub mod geom;
pub mod halfplane_dual;
pub mod halfplane_primal;
pub mod hypergraph;
pub mod instance;
pub mod lab;
pub mod oracle;
pub mod rational;

#[cfg(test)]
mod testgen;

pub use dispatch::{color, route, Algorithm, ColorError, Unsupported};
pub use geom::{BaselineRect, BottomlessRect, DirectedPoint, HalfPlane, Heading, Orientation, Point, Side};
pub use hypergraph::{Coloring, Hypergraph, Realizer, Verdict, Witness};
pub use instance::{Family, Instance, InstanceError, Violation};
pub use rational::Rational;
