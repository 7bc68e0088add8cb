//! Lie bialgebra structures on the Heisenberg-Weyl algebra: the constraints on
//! a general cocommutator, normalization into families, and coboundaries.

pub mod automorphism;
pub mod classify;
pub mod cocommutator;
pub mod lie;
pub mod rmatrix;

pub use automorphism::{apply_automorphism, BasisChange};
pub use classify::{classify, BialgebraClass, ClassTag};
pub use cocommutator::{
    cocycle_residuals, cojacobi_residuals, dual_bracket, is_bialgebra, residual_conditions,
    Cocommutator, CocommutatorJson, CLASSICAL_ORDER,
};
pub use lie::LieStructure;
pub use rmatrix::{
    alternating_coefficient, coboundary_delta, find_rmatrix, mcybe_check, render_trivector,
    schouten, schouten_in, wedge3, CoboundarySolution, RMatrix, RMatrixJson,
};
