//! Linear algebra over finite-dimensional restricted Lie algebras:
//! closures, quotients, ideal-generation checks and the derived p-series.

pub mod closure;
pub mod fdalgebra;
pub mod generation;
pub mod series;
pub mod subspace;

pub use closure::{
    closure, ideal_closure, ideal_of_subalgebra_closure, is_ideal, is_ideal_exhaustive, is_subalgebra, subalgebra_closure,
    ClosureMode, TrackedClosure,
};
pub use fdalgebra::{quotient_algebra, FdAlgebra};
pub use generation::{
    check_l991, check_zp, complement_vectors, filtration_ideal, l991_closures, zp_generators, zp_drop_breaks, zp_top_element_needed, zp_top_index, InclusionWitness,
};
pub use series::{derived_p_series, find_d_for_subspace, is_nilpotent, lower_central_series, nil_index, NilIndex};
pub use subspace::FdSubspace;
