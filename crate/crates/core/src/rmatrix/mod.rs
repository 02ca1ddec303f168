//! r-matrices, the twisted commutator formula and the quasi Yang-Baxter conditions.

mod conditions;
mod formal;
#[allow(clippy::module_inception)]
mod rmatrix;
mod twisted;

pub use conditions::{
    check_qybe_one, check_qybe_two, check_qybe_two_transposed, check_r_conditions, check_rho, check_skew,
    qybe_one_lhs, qybe_two_lhs, qybe_two_lhs_transposed, rho_cases, rho_identity, RHO_CASES,
};
pub use formal::{
    cyclic_sum, formal_triple_bracket, nested_bracket, quasi_jacobi_check, FormalLabels, FormalLaxContext,
    TripleIndex,
};
pub use rmatrix::{at, disk_r, disk_rho, trig_r, trig_rho, RMatrix, RhoMatrix};
pub use twisted::{
    rmatrix_sides, table_defects, twisted_commutator, twisted_commutator_pair, verify_rmatrix_theorem,
};
