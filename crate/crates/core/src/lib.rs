//! Exact analysis of the p-adic valuation of `gcd(f(n), g(n))` for monic
//! integer polynomials `f`, `g` with nonzero resultant.
//!
//! The crate computes resultants (Bareiss) and Smith forms of Sylvester
//! matrices, the full attained range of `v_p(gcd(f(n), g(n)))` by residue-class
//! refinement, the lower bounds on `v_p(r) - max v_p(gcd)`, explicit sharpness
//! constructions, and brute-force counts of polynomial functions mod `p^s`.
//!
//! Data-parallel loops run on rayon when the `parallel` feature is enabled
//! (the default); see [`Execution`].

pub mod bounds;
pub mod constructions;
pub mod error;
pub mod exec;
pub mod harness;
mod json;
pub mod kempner;
pub mod lattice;
pub mod padic;
pub mod poly;
pub mod range;

pub use bounds::{
    analyze, analyze_with, lb_general, lb_small, Analysis, BoundReport, GeneralBound,
};
pub use constructions::{
    certify, construct_large, construct_small, Certificate, Construction, ConstructionSpec,
};
pub use error::{Error, Result};
pub use exec::Execution;
pub use harness::{check_pair, random_property_suite, SuiteConfig, SuiteReport};
pub use kempner::{count_poly_functions, count_r, FunctionTable, KempnerCount};
pub use lattice::{
    quotient_group, resultant, smith_normal_form, sylvester_matrix, IntegerMatrix, SmithForm,
};
pub use padic::{alpha, beta, big_b, vp, PadicTables, Prime, Valuation};
pub use poly::{parse_poly, IntPolynomial};
pub use range::{gcd_value_range, valuation_profile, GcdRange, ResidueClass, ValuationProfile};
