//! Layered and cubical graphs inside the hypercube.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod c10;
pub mod coloring;
pub mod compression;
pub mod cube;
pub mod embed;
pub mod fixed_distance;
pub mod gallery;
pub mod graph;
pub mod search;
pub mod subdivision;
pub mod tables;
pub mod turan;
