//! Exact arithmetic foundation: truncated parameter polynomials, the free
//! algebra on `{M, A+, A-}`, PBW rewriting, tensors and truncated exponentials.

pub mod free;
pub mod param;
pub mod rational;
pub mod render;
pub mod rewrite;
pub mod series;
pub mod tensor;
pub mod word;

pub use free::{nc_mul, FreeElement};
pub use param::{poly_mul, Monomial, Param, ParamPoly};
pub use rational::Rational;
pub use rewrite::{commutator, normal_form, RewriteSystem, Strategy};
pub use series::{exp_difference_quotient, exp_element, exp_matrix2, Matrix2};
pub use tensor::{flip, tensor_commutator, tensor_mul, TensorElement};
pub use word::{Gen, Word};
