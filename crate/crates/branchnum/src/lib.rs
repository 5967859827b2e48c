//! Differential and linear branch numbers of non-singular matrices over
//! finite fields GF(p^m).
//!
//! The branch number of a matrix M is the least total Hamming weight of an
//! input/output pair, min over non-zero x of w(x) + w(Mx); it measures the
//! diffusion of a linear layer, and a matrix of order n is MDS exactly when
//! the value reaches its maximum n + 1. The engine in [`branch`] finds it
//! without touching all q^n - 1 inputs: weights above floor((n+1)/2) are
//! covered through the inverse matrix, scalar multiples collapse into one
//! representative per class, and classes that can no longer improve the
//! bound are filtered out as it tightens. Two independent oracles (the
//! plain definition scan and the minimum distance of the code generated by
//! [I | M]) back every result at small sizes, and [`cost`] provides exact
//! field-multiplication estimates for both approaches.
//!
//! ```
//! use branchnum::{branch_new, samples, Classification};
//!
//! let report = branch_new(&samples::aes_mixcolumns()).unwrap();
//! assert_eq!(report.branch_diff, 5);
//! assert_eq!(report.classification, Some(Classification::Mds));
//! ```
//!
//! The `examples/` directory walks through every major capability; the
//! `branchnum` binary exposes the same machinery for matrix files.

pub mod branch;
pub mod cost;
pub mod field;
pub mod matfile;
pub mod matrix;
pub mod report;
pub mod reps;
pub mod samples;

pub use branch::{
    branch_both, branch_exhaustive, branch_exhaustive_with, branch_linear, branch_new,
    branch_new_with, classify, min_distance_code, min_distance_code_with, Algorithm, BranchAlgo,
    BranchOptions, BranchReport, Classification, EngineError, DEFAULT_EXHAUSTIVE_LIMIT,
};
pub use cost::{
    bound_check, cost_exhaustive, cost_new, cost_new_involutory, gap_f, log2_biguint, CostError,
    CostEstimate,
};
pub use field::{parse_hex, Field, FieldElement, FieldError};
pub use matfile::{parse_matrix_file, parse_matrix_str, ParseError};
pub use matrix::{weight, BoundedWeight, FqMatrix, FqVector, MatrixError};
pub use reps::{rep_count, rep_split, RepError, RepIter, RepVector};
