use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::{two, SolveOptions};
use crate::conic::{content_reduce, factor_forms, Conic, FactorForm, LatticePoint, Reduction};
use crate::error::{Error, Result};
use crate::numeric::positive_divisors;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UnitSign {
    Plus,
    Minus,
}

impl UnitSign {
    pub const BOTH: [UnitSign; 2] = [UnitSign::Plus, UnitSign::Minus];

    pub fn apply(self, v: &BigInt) -> BigInt {
        match self {
            UnitSign::Plus => v.clone(),
            UnitSign::Minus => -v,
        }
    }
}

/// Fixes `F₁ = e·d` and `F₂ = e·I/d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorAssignment {
    pub d: BigInt,
    pub e: UnitSign,
}

impl DivisorAssignment {
    pub fn new(d: impl Into<BigInt>, e: UnitSign) -> Self {
        DivisorAssignment { d: d.into(), e }
    }
}

/// Closed-form solution of `F₁ = e·d, F₂ = e·I/d` on the unreduced factors:
///
/// ```text
/// x = [e·d(β+k) − e·(I/d)(β−k) − 2δk² − 2βM] / (4αk²)
/// y = [e·(I/d) − e·d + 2M] / (2k²)
/// ```
///
/// `None` when either quotient is not an integer, or when `d ∤ I`.
pub fn candidate_point(conic: &Conic, assign: &DivisorAssignment) -> Option<LatticePoint> {
    let inv = conic.invariants();
    if assign.d.is_zero() || !inv.big_i.is_multiple_of(&assign.d) {
        return None;
    }
    let k2 = &inv.k * &inv.k;
    let first = assign.e.apply(&assign.d);
    let second = assign.e.apply(&(&inv.big_i / &assign.d));
    let beta = conic.beta();

    let x_num = &first * (beta + &inv.k)
        - &second * (beta - &inv.k)
        - two() * conic.delta() * &k2
        - two() * beta * &inv.m;
    let x_den = BigInt::from(4) * conic.alpha() * &k2;
    let y_num = &second - &first + two() * &inv.m;
    let y_den = two() * &k2;

    let x = exact_quotient(&x_num, &x_den)?;
    let y = exact_quotient(&y_num, &y_den)?;
    Some(LatticePoint { x, y })
}

fn exact_quotient(num: &BigInt, den: &BigInt) -> Option<BigInt> {
    let (q, r) = num.div_rem(den);
    r.is_zero().then_some(q)
}

/// Cramer's rule on `first = v1, second = v2`; `None` for a singular or
/// non-integral system.
fn solve_form_system(
    first: &FactorForm,
    second: &FactorForm,
    v1: &BigInt,
    v2: &BigInt,
) -> Option<LatticePoint> {
    let det = &first.cx * &second.cy - &first.cy * &second.cx;
    if det.is_zero() {
        return None;
    }
    let r1 = v1 - &first.c0;
    let r2 = v2 - &second.c0;
    let x = exact_quotient(&(&r1 * &second.cy - &first.cy * &r2), &det)?;
    let y = exact_quotient(&(&first.cx * &r2 - &r1 * &second.cx), &det)?;
    Some(LatticePoint { x, y })
}

/// Every integral point of a conic with I ≠ 0, sorted by `(x, y)`.
///
/// Without reduction this runs the closed form of [`candidate_point`] over all
/// 2N divisor assignments of |I|. With reduction the contents of both factor
/// forms are cancelled first and each smaller system is solved by Cramer's rule.
pub fn solve_finite(conic: &Conic, options: &SolveOptions) -> Result<Vec<LatticePoint>> {
    let big_i = &conic.invariants().big_i;
    if big_i.is_zero() {
        return Err(Error::DegenerateConic);
    }

    let mut found = BTreeSet::new();
    if options.reduce {
        let (f1, f2) = factor_forms(conic);
        match content_reduce(&f1, &f2, big_i) {
            Reduction::Infeasible { .. } => {}
            Reduction::Reduced {
                first,
                second,
                big_i,
            } => {
                for d in positive_divisors(&big_i.magnitude().clone().into(), &options.divisor_cap)?
                {
                    let cofactor = &big_i / &d;
                    for e in UnitSign::BOTH {
                        if let Some(p) =
                            solve_form_system(&first, &second, &e.apply(&d), &e.apply(&cofactor))
                        {
                            found.insert(p);
                        }
                    }
                }
            }
        }
    } else {
        for d in positive_divisors(&big_i.magnitude().clone().into(), &options.divisor_cap)? {
            for e in UnitSign::BOTH {
                if let Some(p) = candidate_point(conic, &DivisorAssignment { d: d.clone(), e }) {
                    found.insert(p);
                }
            }
        }
    }

    for p in &found {
        assert!(
            conic.contains(p),
            "solver produced {p}, which is not on the conic"
        );
    }
    Ok(found.into_iter().collect())
}
