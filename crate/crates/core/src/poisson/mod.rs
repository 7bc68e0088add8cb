//! The group side: the Heisenberg group law, the Poisson–Lie bracket dual to a
//! cocommutator, and checks that the bracket is Jacobi and the group law a
//! Poisson map.

pub mod bracket;
pub mod chart;
pub mod group;
pub mod poly;

pub use bracket::{
    all_zero, jacobi_check, linear_part_check, poisson_homomorphism_check, PoissonResidual,
    PoissonStructure,
};
pub use chart::{chart_change, chart_inverse};
pub use group::{
    group_compose, group_inverse, group_pullback, matrix_mul, GroupCoords, GroupJson, Matrix3,
};
pub use poly::{Coord, CoordMonomial, CoordPoly};
