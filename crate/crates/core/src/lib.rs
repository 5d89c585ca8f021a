//! Core algorithms for studying 1-resonant singularities of analytic
//! dynamical systems and their unfoldings: truncated series algebra,
//! parabolic germs and their formal invariants, polynomial vector fields
//! with degenerate equilibria, orbital resummation, and Stokes data of
//! confluent linear systems.

pub mod coeff;
pub mod formal;
pub mod numeric;
pub mod series;
