//! Exact-arithmetic invariants of resolution graphs of normal surface
//! singularities.
//!
//! Everything here is computed over arbitrary-precision rationals; there is
//! no floating point anywhere in the library.  The main entry points are:
//!
//! * [`graph`] — resolution graphs, the intersection lattice, dual basis,
//!   canonical cycle and Riemann–Roch function `chi`;
//! * [`lattice`] — Laufer computation sequences, quadratic minimization over
//!   lattice boxes and orthants, dominance and vanishing semigroups;
//! * [`zeta`] — the multivariable topological Poincaré series, its counting
//!   functions and periodic constants;
//! * [`seifert`] — star-shaped graphs, Seifert data, continued fractions,
//!   Pinkham's formula and the weighted-homogeneous closed forms;
//! * [`chart`] — truncated-series Abel-map computations in a local chart:
//!   delta polynomials, pairing integrals, Leray residues and constraint
//!   ranks;
//! * [`si`] — superisolated germs: monomial evaluation ranks and
//!   order-of-vanishing constraint systems;
//! * [`corpus`] — a bundled set of named example graphs used by the test
//!   suite and the command line tool.

pub mod chart;
pub mod corpus;
pub mod field;
pub mod graph;
pub mod lattice;
pub mod linalg;
pub mod mpoly;
pub mod rat;
pub mod seifert;
pub mod series;
pub mod si;
pub mod zeta;

pub use graph::{GraphError, IntCycle, RatCycle, ResolutionGraph};
pub use rat::Rat;
