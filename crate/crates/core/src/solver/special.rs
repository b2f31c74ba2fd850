use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{solve_finite, two, SolveOptions};
use crate::conic::{Conic, LatticePoint};
use crate::error::{Error, Result};
use crate::numeric::is_prime;

/// Why `l²x² − m²y² = −J` has no integer solutions without searching.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Obstruction {
    /// −J ≡ 2 (mod 4), while a difference of two squares is 0, 1 or 3 mod 4.
    Mod4,
}

impl Obstruction {
    pub fn code(self) -> &'static str {
        match self {
            Obstruction::Mod4 => "Mod4Obstruction",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SumFormOutcome {
    /// Sorted point list, possibly empty.
    Points(Vec<LatticePoint>),
    Unsolvable(Obstruction),
}

/// Integral points of `l²x² − m²y² + J = 0`, i.e. `(lx − my)(lx + my) = −J`.
///
/// −J = 1 and −J = p (odd prime) use closed forms, −J ≡ 2 (mod 4) is rejected
/// outright, and everything else goes through [`solve_finite`].
pub fn solve_difference_of_squares(
    l: &BigInt,
    m: &BigInt,
    j: &BigInt,
    options: &SolveOptions,
) -> Result<SumFormOutcome> {
    if !l.is_positive() {
        return Err(Error::NonPositive("l"));
    }
    if !m.is_positive() {
        return Err(Error::NonPositive("m"));
    }
    let rhs = -j;
    if rhs.is_zero() {
        return Err(Error::DegenerateConic);
    }

    if rhs.mod_floor(&BigInt::from(4)) == two() {
        return Ok(SumFormOutcome::Unsolvable(Obstruction::Mod4));
    }

    if rhs.is_one() {
        let points = if l.is_one() {
            vec![LatticePoint::new(-1, 0), LatticePoint::new(1, 0)]
        } else {
            Vec::new()
        };
        return Ok(SumFormOutcome::Points(points));
    }

    if rhs.is_odd() && is_prime(&rhs) {
        let p = rhs;
        let x_num: BigInt = &p + 1;
        let y_num: BigInt = &p - 1;
        let (x_den, y_den) = (two() * l, two() * m);
        if !x_num.is_multiple_of(&x_den) || !y_num.is_multiple_of(&y_den) {
            return Ok(SumFormOutcome::Points(Vec::new()));
        }
        let x = x_num / x_den;
        let y = y_num / y_den;
        let mut points = vec![
            LatticePoint {
                x: x.clone(),
                y: y.clone(),
            },
            LatticePoint {
                x: x.clone(),
                y: -&y,
            },
            LatticePoint { x: -&x, y: -&y },
            LatticePoint { x: -x, y },
        ];
        points.sort();
        return Ok(SumFormOutcome::Points(points));
    }

    let conic = Conic::new(
        l * l,
        BigInt::zero(),
        -(m * m),
        BigInt::zero(),
        BigInt::zero(),
        j.clone(),
    )?;
    solve_finite(&conic, options).map(SumFormOutcome::Points)
}

fn theorem1_j(beta: &BigInt, delta: &BigInt, epsilon: &BigInt, n: u32) -> Result<BigInt> {
    if n < 2 {
        return Err(Error::Precondition(format!(
            "n must be at least 2, got {n}"
        )));
    }
    if beta.is_even() {
        return Err(Error::Precondition(format!("β must be odd, got {beta}")));
    }
    if beta.abs().is_one() {
        return Err(Error::Precondition("β = ±1 makes γ zero".into()));
    }
    let m = two() * epsilon - beta * delta;
    let numerator = delta * delta - &m * &m - (BigInt::one() << n);
    if !numerator.is_multiple_of(&BigInt::from(4)) {
        return Err(Error::Precondition("J is not an integer".into()));
    }
    Ok(numerator / 4)
}

/// The conic `x² + βxy + γy² + δx + εy + J = 0` with γ = (β² − 1)/4 and J
/// chosen so that I = 2ⁿ.
pub fn theorem1_conic(beta: &BigInt, delta: &BigInt, epsilon: &BigInt, n: u32) -> Result<Conic> {
    let j = theorem1_j(beta, delta, epsilon, n)?;
    let gamma = (beta * beta - 1) / 4;
    Conic::new(
        BigInt::one(),
        beta.clone(),
        gamma,
        delta.clone(),
        epsilon.clone(),
        j,
    )
}

/// Closed-form integral points when α = k = 1 and I = 2ⁿ, sorted.
///
/// For i = 2..=n and e = ±1, with M = 2ε − βδ:
///
/// ```text
/// x = [e·2^(i−2)(β+1) − e·2^(n−i)(β−1) − δ − Mβ] / 2
/// y = e·2^(n−i) − e·2^(i−2) + M
/// ```
///
/// These are the divisors d = 2^(i−1) of 2ⁿ; d = 1 and d = 2ⁿ leave y a
/// half-integer. The result has exactly 2(n − 1) distinct points.
pub fn theorem1_points(
    beta: &BigInt,
    delta: &BigInt,
    epsilon: &BigInt,
    n: u32,
) -> Result<Vec<LatticePoint>> {
    theorem1_j(beta, delta, epsilon, n)?;
    let m = two() * epsilon - beta * delta;
    let mut points = Vec::with_capacity(2 * (n as usize - 1));
    for i in 2..=n {
        let low = BigInt::one() << (i - 2);
        let high = BigInt::one() << (n - i);
        for sign in [1, -1] {
            let (low, high) = (&low * sign, &high * sign);
            let x_num: BigInt = &low * (beta + 1) - &high * (beta - 1) - delta - &m * beta;
            debug_assert!(x_num.is_even());
            points.push(LatticePoint {
                x: x_num / 2,
                y: high - low + &m,
            });
        }
    }
    points.sort();
    Ok(points)
}
