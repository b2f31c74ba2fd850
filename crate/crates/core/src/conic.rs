//! Validated conic coefficients, their invariants and the two linear factor
//! forms whose product equals I on the conic.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::numeric::{gcd, integer_sqrt};

/// An integer pair.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePoint {
    pub x: BigInt,
    pub y: BigInt,
}

impl LatticePoint {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Self {
        LatticePoint {
            x: x.into(),
            y: y.into(),
        }
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Raw coefficients of `αx² + βxy + γy² + δx + εy + J`, before validation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coefficients {
    pub alpha: BigInt,
    pub beta: BigInt,
    pub gamma: BigInt,
    pub delta: BigInt,
    pub epsilon: BigInt,
    pub j: BigInt,
}

impl Coefficients {
    pub fn new<T: Into<BigInt>>(alpha: T, beta: T, gamma: T, delta: T, epsilon: T, j: T) -> Self {
        Coefficients {
            alpha: alpha.into(),
            beta: beta.into(),
            gamma: gamma.into(),
            delta: delta.into(),
            epsilon: epsilon.into(),
            j: j.into(),
        }
    }

    /// Exact value of the quadratic at `p`.
    pub fn evaluate(&self, p: &LatticePoint) -> BigInt {
        let (x, y) = (&p.x, &p.y);
        &self.alpha * x * x
            + &self.beta * x * y
            + &self.gamma * y * y
            + &self.delta * x
            + &self.epsilon * y
            + &self.j
    }
}

impl fmt::Display for Coefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {} {} {} {}",
            self.alpha, self.beta, self.gamma, self.delta, self.epsilon, self.j
        )
    }
}

/// Quantities derived once from validated coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Invariants {
    /// Positive square root of β² − 4αγ.
    pub k: BigInt,
    /// I = k²·Δ − M². Zero exactly when the conic splits into two lines.
    pub big_i: BigInt,
    /// Δ = δ² − 4αJ.
    pub delta_q: BigInt,
    /// M = 2αε − βδ.
    pub m: BigInt,
}

impl Invariants {
    fn compute(c: &Coefficients, k: BigInt) -> Self {
        let delta_q = &c.delta * &c.delta - BigInt::from(4) * &c.alpha * &c.j;
        let m = BigInt::from(2) * &c.alpha * &c.epsilon - &c.beta * &c.delta;
        let big_i = &k * &k * &delta_q - &m * &m;
        Invariants {
            k,
            big_i,
            delta_q,
            m,
        }
    }
}

/// A conic whose discriminant β² − 4αγ is a positive perfect square and whose
/// α and γ are nonzero. Only obtainable through [`validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Conic {
    coeffs: Coefficients,
    invariants: Invariants,
}

/// Checks admissibility and computes the invariants.
pub fn validate(raw: Coefficients) -> Result<Conic> {
    if raw.alpha.is_zero() {
        return Err(Error::DegenerateAlpha);
    }
    if raw.gamma.is_zero() {
        return Err(Error::DegenerateGamma);
    }
    let discriminant = &raw.beta * &raw.beta - BigInt::from(4) * &raw.alpha * &raw.gamma;
    let k = if discriminant.is_positive() {
        integer_sqrt(&discriminant)
    } else {
        None
    };
    let Some(k) = k else {
        return Err(Error::NotFactorable { discriminant });
    };
    let invariants = Invariants::compute(&raw, k);
    Ok(Conic {
        coeffs: raw,
        invariants,
    })
}

impl Conic {
    pub fn new<T: Into<BigInt>>(
        alpha: T,
        beta: T,
        gamma: T,
        delta: T,
        epsilon: T,
        j: T,
    ) -> Result<Self> {
        validate(Coefficients::new(alpha, beta, gamma, delta, epsilon, j))
    }

    pub fn coefficients(&self) -> &Coefficients {
        &self.coeffs
    }

    pub fn invariants(&self) -> &Invariants {
        &self.invariants
    }

    pub fn alpha(&self) -> &BigInt {
        &self.coeffs.alpha
    }
    pub fn beta(&self) -> &BigInt {
        &self.coeffs.beta
    }
    pub fn gamma(&self) -> &BigInt {
        &self.coeffs.gamma
    }
    pub fn delta(&self) -> &BigInt {
        &self.coeffs.delta
    }
    pub fn epsilon(&self) -> &BigInt {
        &self.coeffs.epsilon
    }
    pub fn j(&self) -> &BigInt {
        &self.coeffs.j
    }

    pub fn evaluate(&self, p: &LatticePoint) -> BigInt {
        self.coeffs.evaluate(p)
    }

    pub fn contains(&self, p: &LatticePoint) -> bool {
        self.evaluate(p).is_zero()
    }

    /// True when δ = ε = J = 0.
    pub fn is_homogeneous(&self) -> bool {
        self.coeffs.delta.is_zero() && self.coeffs.epsilon.is_zero() && self.coeffs.j.is_zero()
    }
}

/// The linear form `cx·x + cy·y + c0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FactorForm {
    pub cx: BigInt,
    pub cy: BigInt,
    pub c0: BigInt,
}

impl FactorForm {
    pub fn eval(&self, p: &LatticePoint) -> BigInt {
        &self.cx * &p.x + &self.cy * &p.y + &self.c0
    }

    /// gcd of the three coefficients.
    pub fn content(&self) -> BigInt {
        gcd(&gcd(&self.cx, &self.cy), &self.c0)
    }

    fn divided_by(&self, c: &BigInt) -> FactorForm {
        FactorForm {
            cx: &self.cx / c,
            cy: &self.cy / c,
            c0: &self.c0 / c,
        }
    }
}

impl fmt::Display for FactorForm {
    /// Renders like `12x - 24y - 4`, dropping zero terms and unit coefficients.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (coef, var) in [(&self.cx, "x"), (&self.cy, "y"), (&self.c0, "")] {
            if coef.is_zero() {
                continue;
            }
            let mag = coef.abs();
            match (wrote, coef.is_negative()) {
                (false, true) => f.write_str("-")?,
                (true, true) => f.write_str(" - ")?,
                (true, false) => f.write_str(" + ")?,
                (false, false) => {}
            }
            if !mag.is_one() || var.is_empty() {
                write!(f, "{mag}")?;
            }
            f.write_str(var)?;
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// The two factors `F₁ = 2αk·x + k(β−k)·y + (δk + M)` and
/// `F₂ = 2αk·x + k(β+k)·y + (δk − M)`.
///
/// They satisfy `F₁·F₂ − I = 4αk²·Q` identically, so on the conic `F₁·F₂ = I`.
pub fn factor_forms(conic: &Conic) -> (FactorForm, FactorForm) {
    let inv = conic.invariants();
    let k = &inv.k;
    let two_alpha_k = BigInt::from(2) * conic.alpha() * k;
    let delta_k = conic.delta() * k;
    let first = FactorForm {
        cx: two_alpha_k.clone(),
        cy: k * (conic.beta() - k),
        c0: &delta_k + &inv.m,
    };
    let second = FactorForm {
        cx: two_alpha_k,
        cy: k * (conic.beta() + k),
        c0: &delta_k - &inv.m,
    };
    (first, second)
}

/// Result of cancelling the contents of both factor forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reduction {
    /// Forms divided by their contents and I divided by the product of contents.
    Reduced {
        first: FactorForm,
        second: FactorForm,
        big_i: BigInt,
    },
    /// c₁·c₂ does not divide I. Every integer point makes F₁·F₂ a multiple of
    /// c₁·c₂, so the factored equation has no integer solutions.
    Infeasible { content_product: BigInt },
}

/// Cancels the content of each form from both sides of `F₁·F₂ = I`.
pub fn content_reduce(first: &FactorForm, second: &FactorForm, big_i: &BigInt) -> Reduction {
    let c1 = first.content();
    let c2 = second.content();
    if c1.is_zero() || c2.is_zero() {
        // A zero form; nothing to cancel.
        return Reduction::Reduced {
            first: first.clone(),
            second: second.clone(),
            big_i: big_i.clone(),
        };
    }
    let product = &c1 * &c2;
    if !big_i.is_multiple_of(&product) {
        return Reduction::Infeasible {
            content_product: product,
        };
    }
    Reduction::Reduced {
        first: first.divided_by(&c1),
        second: second.divided_by(&c2),
        big_i: big_i / product,
    }
}
