//! Cross-checks a solver result against the brute-force oracle.

use std::collections::BTreeSet;

use conic_points::oracle::{brute_force, solution_bound, SearchBound};
use conic_points::solver::{ParamLine, SolutionSet};
use conic_points::{Conic, LatticePoint};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

/// Box half-width used for `--check` on a pair of lines when none is given.
pub const DEFAULT_LINE_CHECK_BOUND: i64 = 50;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckOutcome {
    Agree,
    Mismatch {
        /// Found by the oracle, absent from the solver result.
        missing: Vec<LatticePoint>,
        /// Reported by the solver, not found by the oracle.
        extra: Vec<LatticePoint>,
    },
}

/// Integer points of `line` inside the square `|x|, |y| ≤ bound`.
fn line_points_in_box(line: &ParamLine, bound: &BigInt) -> Vec<LatticePoint> {
    if !line.is_solvable() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut x = -bound.clone();
    while &x <= bound {
        if line.b.is_zero() {
            if &line.a * &x == line.c {
                let mut y = -bound.clone();
                while &y <= bound {
                    out.push(LatticePoint {
                        x: x.clone(),
                        y: y.clone(),
                    });
                    y += 1;
                }
            }
        } else {
            let (y, r) = (&line.c - &line.a * &x).div_rem(&line.b);
            if r.is_zero() && y.magnitude() <= bound.magnitude() {
                out.push(LatticePoint { x: x.clone(), y });
            }
        }
        x += 1;
    }
    out
}

/// Compares `set` with the oracle inside the search box.
///
/// Finite results use the derived bound unless one is given; with the derived
/// bound any solver point outside it also counts as a mismatch. Line pairs are
/// compared on the box `|x|, |y| ≤ bound` (default [`DEFAULT_LINE_CHECK_BOUND`]).
pub fn check_solution(conic: &Conic, set: &SolutionSet, bound: Option<&BigInt>) -> CheckOutcome {
    let (search, solver): (SearchBound, BTreeSet<LatticePoint>) = match set {
        SolutionSet::Finite(points) => {
            let search = match bound {
                Some(b) => SearchBound::square(b.clone()),
                None => solution_bound(conic).expect("finite results have I ≠ 0"),
            };
            (search, points.iter().cloned().collect())
        }
        SolutionSet::Lines(first, second) => {
            let b = bound
                .cloned()
                .unwrap_or_else(|| BigInt::from(DEFAULT_LINE_CHECK_BOUND));
            let points = line_points_in_box(first, &b)
                .into_iter()
                .chain(line_points_in_box(second, &b))
                .collect();
            (SearchBound::square(b), points)
        }
    };
    let oracle: BTreeSet<LatticePoint> = brute_force(conic, &search).into_iter().collect();

    let missing: Vec<_> = oracle.difference(&solver).cloned().collect();
    let extra: Vec<_> = solver
        .iter()
        .filter(|p| !oracle.contains(p) && (bound.is_none() || search.contains(p)))
        .cloned()
        .collect();
    if missing.is_empty() && extra.is_empty() {
        CheckOutcome::Agree
    } else {
        CheckOutcome::Mismatch { missing, extra }
    }
}
