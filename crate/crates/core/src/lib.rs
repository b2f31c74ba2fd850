//! Integral points on conics `αx² + βxy + γy² + δx + εy + J = 0` whose
//! discriminant β² − 4αγ is a positive perfect square.
//!
//! Such a conic factors as `F₁·F₂ = I` with integer linear forms F₁, F₂ and an
//! integer I. When I ≠ 0 every integral point comes from a divisor pair of I,
//! so the point set is finite and found exactly; when I = 0 the conic is two
//! lines and the result is their integer parametrizations.
//!
//! ```
//! use conic_points::{solve, Conic, LatticePoint, SolutionSet, SolveOptions};
//!
//! let conic = Conic::new(2, -5, 2, -1, 1, -1).unwrap();
//! let points = solve(&conic, &SolveOptions::default()).unwrap();
//! assert_eq!(
//!     points,
//!     SolutionSet::Finite(vec![
//!         LatticePoint::new(-2, -1),
//!         LatticePoint::new(0, -1),
//!         LatticePoint::new(1, 0),
//!         LatticePoint::new(1, 2),
//!     ])
//! );
//! ```

pub mod conic;
pub mod error;
pub mod numeric;
pub mod oracle;
pub mod solver;

pub use conic::{
    content_reduce, factor_forms, validate, Coefficients, Conic, FactorForm, Invariants,
    LatticePoint, Reduction,
};
pub use error::{Error, Result};
pub use solver::{solve, SolutionSet, SolveOptions};
