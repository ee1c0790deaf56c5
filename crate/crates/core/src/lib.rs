// Copyright 2026 the descartes-core Authors
// SPDX-License-Identifier: Apache-2.0

//! Tessellations and Descartes circle configurations.
//!
//! Two spinors `a`, `b` (with `c = −a − b`) generate a fifteen-tile
//! dodecagonal tessellation whose tile areas are the curvatures of a
//! Descartes configuration and of its mid-circles. This crate builds the
//! tessellation in exact rational arithmetic, derives the integral
//! quadruples directly from the spinors, realizes configurations as placed
//! circles, and checks the tangency-spinor laws numerically.

pub mod enumerate;
pub mod error;
pub mod geometry;
pub mod quadruple;
pub mod rational;
pub mod spinor;
pub mod svg;
pub mod tessellation;

pub use error::{Error, Result};
pub use rational::Rational;
pub use spinor::{cross, dot, euclid_square, norm_sq, star, PythTriple, Spinor};
