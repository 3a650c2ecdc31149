//! Searches for Boolean functions with prescribed resiliency and dual
//! sensitivity order: exhaustive counts for `n <= 6`, a pruned search over
//! rotation-symmetric functions for `n <= 10`, and reverse concatenation.

mod counts;
mod query;
mod rotsym;
pub mod small;

pub use counts::{
    balanced_n4_histogram, count_profiles_n4, count_profiles_n4_via_duals, count_profiles_n5, resilient_n5,
    resilient_n5_histogram, search_n6, HalfCaseSplit, N6Search,
};
pub use query::{run_query, ProfileQuery, QueryResult};
pub use rotsym::{
    is_rotation_symmetric, reverse_concat, rotate, rotsym_orbits, rotsym_search, rotsym_solutions, RotSymClass,
};
