#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod canonical;
pub(crate) mod cover;
pub mod decider;
pub mod error;
pub mod fptas;
pub mod geometry;
pub mod harness;
pub mod instance;
pub mod oned;
pub mod optimizer;
pub mod size_ptas;
