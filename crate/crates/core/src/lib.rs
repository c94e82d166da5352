//! Scale-invariant solutions of the homentropic Euler equations.
//!
//! The flow is one-dimensional (planar, cylindrical or spherical) and the
//! fluid obeys an isentropic closure `P = f(rho)`, so the energy equation
//! decouples and only mass and momentum are evolved.

// `!(x > 0.0)` is used on purpose so that NaN fails positivity checks
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod eos;
pub mod export;
pub mod fvcheck;
pub mod geometry;
pub mod rh;
pub mod roots;
pub mod scaling;
pub mod similarity;
pub mod solutions;

pub use eos::{
    Eos, EosError, EosSpec, IsentropicEos, ModifiedTait, ModifiedTaitParams, PolytropicCaseI,
    Validity, ZeroPressure,
};
pub use geometry::{Geometry, InvalidGeometry};

pub use scaling::{classify, derive_exponents, PowerLawExponents, ScalingExponents, SymmetryCase};
pub use similarity::{SimilarityError, SimilarityMap, SimilarityState};

pub use fvcheck::{Boundary, FvError, Grid1D};
pub use rh::{
    ideal_gas_noh_reference, jump_residuals, solve_noh_shock, solve_noh_shock_tait, JumpState,
    NohShock, RhError,
};
pub use solutions::{
    bubble_solution, BubbleSolution, FlowSample, NohSolution, Region, SolutionError,
};
