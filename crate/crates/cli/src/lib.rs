//! Command line front end: material listing and validation, single-point
//! evaluation and d/T sweeps emitting machine-readable tables.

// `!(x > 0.0)` guards deliberately treat NaN as out of range
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod args;
pub mod materials_io;
pub mod quantity;
pub mod run;

/// Process exit codes: 0 success, 1 numerical failure, 2 usage/validation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exit {
    Ok = 0,
    Numerical = 1,
    Usage = 2,
}
