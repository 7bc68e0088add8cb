//! Quantization of the Lie bialgebra families into Hopf algebras, with every
//! axiom checked at the truncation order.

pub mod antipode;
pub mod central;
pub mod closed;
pub mod coproduct;
pub mod family;
pub mod presentation;
pub mod transport;
pub mod verify;

pub use antipode::solve_antipode;
pub use central::{central_element, check_centrality, check_realization, RealizationReport, XPoly};
pub use closed::{dehomogenize, ClosedExpr, ClosedForms, ClosedTensor, Factor};
pub use coproduct::{
    build_coproduct, coproduct_matrix, family_matrix_delta, first_order_defect, matrix_delta,
    MatrixDelta,
};
pub use family::{FamilyParams, FamilyRegistry, QuantizationFamily, TypeII, TypeIMinus, TypeIPlus};
pub use presentation::{quantize, swap_type_i_plus, GeneratorMap, HopfDocument, HopfPresentation};
pub use transport::SignedRelabel;
pub use verify::{
    verify_antipode, verify_axiom, verify_coassoc, verify_counit, verify_homomorphism, verify_hopf,
    Axiom, AxiomReport, Residual,
};
