use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::two;
use crate::conic::{Conic, LatticePoint};
use crate::error::{Error, Result};
use crate::numeric::{extended_gcd, gcd};

/// Primitive step between consecutive integer points of a line.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Direction {
    pub dx: BigInt,
    pub dy: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Parametrization {
    pub base: LatticePoint,
    pub dir: Direction,
}

/// Integer solutions of `a·x + b·y = c`: either none, or
/// `{ base + t·dir : t ∈ ℤ }`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParamLine {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub solution: Option<Parametrization>,
}

impl ParamLine {
    pub fn is_solvable(&self) -> bool {
        self.solution.is_some()
    }

    pub fn contains(&self, p: &LatticePoint) -> bool {
        &self.a * &p.x + &self.b * &p.y == self.c
    }

    pub fn point_at(&self, t: &BigInt) -> Option<LatticePoint> {
        self.solution.as_ref().map(|s| LatticePoint {
            x: &s.base.x + t * &s.dir.dx,
            y: &s.base.y + t * &s.dir.dy,
        })
    }
}

impl fmt::Display for ParamLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*x + {}*y = {} ", self.a, self.b, self.c)?;
        match &self.solution {
            Some(s) => write!(
                f,
                "[solvable: base=({},{}) dir=({},{})]",
                s.base.x, s.base.y, s.dir.dx, s.dir.dy
            ),
            None => f.write_str("[no integer solutions]"),
        }
    }
}

/// Solves `a·x + b·y = c` over the integers.
///
/// The direction is `±(b/g, −a/g)` with its first nonzero component positive,
/// and the base point is shifted along it so that its x (or, for vertical
/// directions, its y) lies in `[0, |step|)`.
pub fn solve_linear_diophantine(a: &BigInt, b: &BigInt, c: &BigInt) -> Result<ParamLine> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::ZeroLinearForm);
    }
    let (g, u, v) = extended_gcd(a, b);
    let solution = c.is_multiple_of(&g).then(|| {
        let scale = c / &g;
        let (mut dx, mut dy) = (b / &g, -(a / &g));
        if dx.is_negative() || (dx.is_zero() && dy.is_negative()) {
            dx = -dx;
            dy = -dy;
        }
        let (mut x0, mut y0) = (u * &scale, v * &scale);
        let shift = if dx.is_zero() {
            y0.div_floor(&dy)
        } else {
            x0.div_floor(&dx)
        };
        x0 -= &shift * &dx;
        y0 -= &shift * &dy;
        Parametrization {
            base: LatticePoint { x: x0, y: y0 },
            dir: Direction { dx, dy },
        }
    });
    Ok(ParamLine {
        a: a.clone(),
        b: b.clone(),
        c: c.clone(),
        solution,
    })
}

/// Divides `a·x + b·y = c` by gcd(a, b, c), keeping a positive leading coefficient.
fn primitive_line(a: BigInt, b: BigInt, c: BigInt) -> (BigInt, BigInt, BigInt) {
    let mut g = gcd(&gcd(&a, &b), &c);
    if a.is_negative() || (a.is_zero() && b.is_negative()) {
        g = -g;
    }
    (a / &g, b / &g, c / g)
}

/// The two lines of a conic with I = 0:
/// `2αk·x + k(β−k)·y = −δk − M` and `2αk·x + k(β+k)·y = −δk + M`.
///
/// Each is reported in primitive form (common factor of a, b, c cancelled);
/// either may have no integer points.
pub fn solve_degenerate(conic: &Conic) -> Result<(ParamLine, ParamLine)> {
    let inv = conic.invariants();
    if !inv.big_i.is_zero() {
        return Err(Error::NonDegenerateConic);
    }
    let k = &inv.k;
    let a = two() * conic.alpha() * k;
    let delta_k = conic.delta() * k;
    let first = primitive_line(a.clone(), k * (conic.beta() - k), -&delta_k - &inv.m);
    let second = primitive_line(a, k * (conic.beta() + k), -&delta_k + &inv.m);
    Ok((
        solve_linear_diophantine(&first.0, &first.1, &first.2)?,
        solve_linear_diophantine(&second.0, &second.1, &second.2)?,
    ))
}

/// Lines through the origin for δ = ε = J = 0.
///
/// With `g = gcd(2α, β±k)`, `ρ = 2α/g` and `v = (β±k)/g` the two families are
/// `(x, y) = (−v·t, ρ·t)`; the `β+k` line comes first.
pub fn solve_homogeneous(conic: &Conic) -> Result<(ParamLine, ParamLine)> {
    if !conic.is_homogeneous() {
        return Err(Error::Precondition("δ = ε = J = 0 required".into()));
    }
    let k = &conic.invariants().k;
    let two_alpha = two() * conic.alpha();
    let through_origin = |slope: BigInt| {
        let g = gcd(&two_alpha, &slope);
        let rho = &two_alpha / &g;
        let v = slope / &g;
        let (mut dx, mut dy) = (-v.clone(), rho.clone());
        if dx.is_negative() || (dx.is_zero() && dy.is_negative()) {
            dx = -dx;
            dy = -dy;
        }
        ParamLine {
            a: rho,
            b: v,
            c: BigInt::zero(),
            solution: Some(Parametrization {
                base: LatticePoint::new(0, 0),
                dir: Direction { dx, dy },
            }),
        }
    };
    Ok((
        through_origin(conic.beta() + k),
        through_origin(conic.beta() - k),
    ))
}
