//! Every solving path: divisor pairs when I ≠ 0, line decomposition when I = 0,
//! and the closed-form families.

mod finite;
mod lines;
mod special;

pub use finite::{candidate_point, solve_finite, DivisorAssignment, UnitSign};
pub use lines::{
    solve_degenerate, solve_homogeneous, solve_linear_diophantine, Direction, ParamLine,
    Parametrization,
};
pub use special::{
    solve_difference_of_squares, theorem1_conic, theorem1_points, Obstruction, SumFormOutcome,
};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::conic::{Conic, LatticePoint};
use crate::error::Result;
use crate::numeric::{Natural, DEFAULT_DIVISOR_CAP};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveOptions {
    /// Cancel the contents of the factor forms before enumerating divisors.
    pub reduce: bool,
    /// Largest |I| the divisor enumeration accepts.
    pub divisor_cap: Natural,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            reduce: true,
            divisor_cap: Natural::from(DEFAULT_DIVISOR_CAP),
        }
    }
}

/// All integral points of a conic.
#[allow(clippy::large_enum_variant)]
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolutionSet {
    /// I ≠ 0: sorted, duplicate-free.
    Finite(Vec<LatticePoint>),
    /// I = 0: the lines `F₁ = 0` and `F₂ = 0`, in that order.
    Lines(ParamLine, ParamLine),
}

impl SolutionSet {
    pub fn points(&self) -> Option<&[LatticePoint]> {
        match self {
            SolutionSet::Finite(points) => Some(points),
            SolutionSet::Lines(..) => None,
        }
    }
}

/// Dispatches on I computed from the unreduced coefficients.
pub fn solve(conic: &Conic, options: &SolveOptions) -> Result<SolutionSet> {
    if conic.invariants().big_i.is_zero() {
        let (first, second) = solve_degenerate(conic)?;
        Ok(SolutionSet::Lines(first, second))
    } else {
        solve_finite(conic, options).map(SolutionSet::Finite)
    }
}

pub(crate) fn two() -> BigInt {
    BigInt::from(2)
}
