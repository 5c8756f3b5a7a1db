//! Spectral extremal graph theory on small simple graphs.
//!
//! The crate computes adjacency spectra, evaluates upper bounds on the
//! spectral radius together with their equality cases, counts walks in exact
//! integer arithmetic, searches for cycles of prescribed lengths, and sweeps
//! every statement over exhaustive enumerations or seeded random samples.
//!
//! ```
//! use spectral_extremal::{bounds, generators, spectrum};
//!
//! let g = generators::star(5);
//! let lambda1 = spectrum::spectral_radius(&g, spectrum::DEFAULT_TOL).unwrap();
//! assert!((lambda1 - 2.0).abs() < 1e-9);
//! let hong = bounds::bound_value(&g, bounds::BoundKind::Hong).unwrap();
//! assert!((hong - lambda1).abs() < spectrum::EQ_EPS);
//! ```

pub mod bounds;
pub mod cycles;
pub mod formats;
pub mod generators;
pub mod graph;
pub mod spectrum;
pub mod verdict;
pub mod verify;
pub mod walks;

pub use graph::{Graph, GraphError};
