//! Tensor operators built from the adjoint action: the orbit basis
//! `λ_m^l`, equivariance checkers, reduced matrix elements and central
//! elements.

mod center;
mod operator;
mod orbit;
mod wigner;

pub use center::{
    central_element, central_element_from_table, central_element_literal, central_report,
    verify_central, CentralReport,
};
pub use operator::{
    check_elements, check_epsilon_invariance, check_hat_intertwiner, check_tensor_operator,
    hat_matrix, tensor_operator_from_rep, TensorOperator,
};
pub use orbit::{
    adjoint_orbit, adjoint_orbit_closed_form, compare_orbit_constructions, orbit_closed_form_term,
    orbit_prefactor, verify_orbit_relations, AdjointBasis, Construction, OrbitComparison,
    OrbitRelations,
};
pub use wigner::{
    alpha_from_highest_component, reduced_matrix_element, reduced_me_closed_form,
    reduced_me_corrected, ReducedME, Witness, WitnessKind,
};
