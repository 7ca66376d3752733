//! Exact workbench for twist equivalence of finite-group representations.
//!
//! Everything here is exact: character values live in cyclotomic fields
//! Q(zeta_N) with arbitrary-precision rational coefficients, densities are
//! rationals, and weight multiplicities are big integers. The main pipelines:
//!
//! * power characters (tensor, symmetric, exterior, adjoint, Asai) computed
//!   from class data alone ([`powerops`]);
//! * twist-equivalence decisions, Clifford decomposition of restrictions and
//!   twist extension from normal subgroups ([`equivalence`]);
//! * weight-multiset power constructions and the inverse recovery algorithms
//!   ([`weights`]);
//! * exact agreement densities of character pairs with the associated
//!   mean-square trace bounds ([`density`]).

pub mod cyclo;
pub mod density;
pub mod equivalence;
pub mod groups;
pub mod powerops;
pub mod reports;
pub mod weights;
