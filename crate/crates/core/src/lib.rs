//! Dimension-free matrix algebra built on the semi-tensor product.

pub mod cli;
pub mod equivalence;
pub mod invariant;
pub mod error;
pub mod kernel;
pub mod lie;
pub mod matrix;
pub mod permgrp;
pub mod poly;
pub mod quotient;
pub mod text;
pub mod vectors;

pub use error::{Error, Result};
