//! Dioperads presented by generators and relations.
//!
//! The crate is `no_std` and only needs `alloc`. It covers exact rational
//! linear algebra ([`ratlin`]), labeled directed trees ([`trees`]),
//! symmetric-group bimodules ([`sbimod`]), free and quadratic dioperads
//! ([`dioperad`]) and Koszul duality ([`koszul`]).

#![no_std]

extern crate alloc;

pub mod dioperad;
pub mod error;
pub mod koszul;
pub mod perm;
pub mod ratlin;
pub mod sbimod;
pub mod trees;

pub use error::{Error, Result};
pub use perm::Perm;
pub use ratlin::{ChainComplex, Mat, Rat, Subspace};
