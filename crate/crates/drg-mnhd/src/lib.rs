//! Exact certification of monotone heat-kernel ratios on distance-regular
//! graphs, cross-validated by a floating-point spectral oracle.
//!
//! The crate is organized around one question: for a graph whose Laplacian
//! heat kernel is `H_t`, is the normalized ratio `r_t(u,v) =
//! H_t(u,v)/H_t(u,u)` non-decreasing in `t` for every vertex pair? For
//! diameter-3 distance-regular graphs described by classical parameters, and
//! for antipodal diameter-3 families, the question is decided in exact
//! arithmetic ([`analysis`], [`antipodal`]); for arbitrary graph input a
//! floating-point pipeline ([`spectra`]) scans the same quantity numerically.

#![forbid(unsafe_code)]

pub mod analysis;
pub mod antipodal;
pub mod classical;
pub mod graph;
pub mod quadratic;
pub mod report;
pub mod spectra;
