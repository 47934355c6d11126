//! Theorem engines. Each identity is computed on both sides by independent
//! routes and compared coefficient by coefficient.

mod atkinson;
mod bch;
mod bogoliubov;
mod bohnenblust;
mod fixed_point;
mod flows;
mod magnus;
mod spitzer;
pub mod trees;

pub use atkinson::{check_atkinson, check_atkinson_lemma, ATKINSON_ANCHOR};
pub use bch::{bch_of_series, bch_series, bch_series_of, BchProduct, BCH_ANCHOR};
pub use bogoliubov::{bogoliubov_decompose, check_bogoliubov, BOGOLIUBOV_ANCHOR};
pub use bohnenblust::{
    bs_lhs, bs_rhs, check_bohnenblust_spitzer, d_theta_sigma, BsForm, DVariant, BS_ANCHOR,
    BS_MAX_ARITY,
};
pub use fixed_point::{solve_fixed_point, solve_fixed_point_series, Side};
pub use flows::{check_flows_bch, check_flows_product_law, flows_product, FLOWS_ANCHOR};
pub use magnus::{
    bernoulli_recursion, check_magnus_terms, check_nc_spitzer, magnus_reference_terms,
    prelie_magnus, prelie_magnus_series, Magma, PreLie, RbPreLie, MAGNUS_ANCHOR, NC_SPITZER_ANCHOR,
};
pub use spitzer::{
    check_spitzer_commutative, spitzer_closed_form, SPITZER_ANCHOR,
};
