//! Brute-force ground truth for the solver, plus a seeded generator of valid
//! conics for property tests.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::conic::{Coefficients, Conic, LatticePoint};
use crate::error::{Error, Result};
use crate::numeric::{integer_sqrt, positive_divisors, Natural, DEFAULT_DIVISOR_CAP};

/// Search box `|x| ≤ bx`, `|y| ≤ by`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchBound {
    pub bx: BigInt,
    pub by: BigInt,
}

impl SearchBound {
    pub fn square(b: impl Into<BigInt>) -> Self {
        let b = b.into();
        SearchBound {
            bx: b.clone(),
            by: b,
        }
    }

    pub fn contains(&self, p: &LatticePoint) -> bool {
        p.x.abs() <= self.bx && p.y.abs() <= self.by
    }
}

fn ceil_div(num: BigInt, den: BigInt) -> BigInt {
    num.div_ceil(&den)
}

/// A box that contains every integral point of a conic with I ≠ 0.
///
/// At an integral point the two factor forms take values `f₁ = e·d` and
/// `f₂ = e·I/d` for some divisor d of |I|, so `|f₁|, |f₂| ≤ |I|`. Solving the
/// factor system for the point gives
///
/// ```text
/// y = (f₂ − f₁ + 2M) / (2k²)
/// x = (f₁(β+k) − f₂(β−k) − 2δk² − 2βM) / (4αk²)
/// ```
///
/// and the triangle inequality bounds both:
///
/// ```text
/// |y| ≤ (2|I| + 2|M|) / (2k²)
/// |x| ≤ (|I|(|β+k| + |β−k|) + 2|δ|k² + 2|β||M|) / (4|α|k²)
/// ```
///
/// Both are rounded up.
pub fn solution_bound(conic: &Conic) -> Result<SearchBound> {
    let inv = conic.invariants();
    if inv.big_i.is_zero() {
        return Err(Error::DegenerateConic);
    }
    let abs_i = inv.big_i.abs();
    let abs_m = inv.m.abs();
    let k2 = &inv.k * &inv.k;
    let beta = conic.beta();

    let by = ceil_div(
        BigInt::from(2) * &abs_i + BigInt::from(2) * &abs_m,
        BigInt::from(2) * &k2,
    );
    let bx = ceil_div(
        &abs_i * ((beta + &inv.k).abs() + (beta - &inv.k).abs())
            + BigInt::from(2) * conic.delta().abs() * &k2
            + BigInt::from(2) * beta.abs() * &abs_m,
        BigInt::from(4) * conic.alpha().abs() * &k2,
    );
    Ok(SearchBound { bx, by })
}

/// Every integral point inside `bound`, sorted by `(x, y)`.
///
/// Scans y and solves the quadratic in x through its discriminant
/// `(βy + δ)² − 4α(γy² + εy + J)`, so the cost is linear in `by`.
pub fn brute_force(conic: &Conic, bound: &SearchBound) -> Vec<LatticePoint> {
    let c = conic.coefficients();
    let two_alpha = BigInt::from(2) * &c.alpha;
    let four_alpha = BigInt::from(4) * &c.alpha;
    let mut found = Vec::new();

    let mut y = -bound.by.clone();
    while y <= bound.by {
        let linear = &c.beta * &y + &c.delta;
        let constant = (&c.gamma * &y + &c.epsilon) * &y + &c.j;
        let disc = &linear * &linear - &four_alpha * constant;
        if !disc.is_negative() {
            if let Some(root) = integer_sqrt(&disc) {
                let mut roots = vec![-&linear + &root];
                if !root.is_zero() {
                    roots.push(-&linear - &root);
                }
                for num in roots {
                    let (x, r) = num.div_rem(&two_alpha);
                    if r.is_zero() && x.abs() <= bound.bx {
                        found.push(LatticePoint { x, y: y.clone() });
                    }
                }
            }
        }
        y += 1;
    }
    found.sort();
    found
}

/// Magnitude caps for [`random_valid_conic`].
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientRanges {
    pub beta_max: i64,
    pub k_max: i64,
    pub delta_max: i64,
    pub epsilon_max: i64,
    pub j_max: i64,
    /// Probability of forcing δ = ε = J = 0.
    pub homogeneous_rate: f64,
}

impl Default for CoefficientRanges {
    fn default() -> Self {
        CoefficientRanges {
            beta_max: 30,
            k_max: 30,
            delta_max: 50,
            epsilon_max: 50,
            j_max: 50,
            homogeneous_rate: 0.05,
        }
    }
}

fn random_quadratic_part(
    rng: &mut ChaCha8Rng,
    ranges: &CoefficientRanges,
) -> (BigInt, BigInt, BigInt) {
    let cap = Natural::from(DEFAULT_DIVISOR_CAP);
    loop {
        let k = rng.gen_range(1..=ranges.k_max);
        let beta = rng.gen_range(-ranges.beta_max..=ranges.beta_max);
        if (beta - k).rem_euclid(2) != 0 || beta.abs() == k {
            continue;
        }
        // β² − 4αγ = k² ⇔ αγ = (β − k)(β + k)/4, nonzero because β ≠ ±k.
        let product = BigInt::from((beta - k) * (beta + k) / 4);
        let divisors = positive_divisors(&product.abs(), &cap).expect("small product");
        let mut alpha = divisors.choose(rng).expect("at least one divisor").clone();
        if rng.gen_bool(0.5) {
            alpha = -alpha;
        }
        let gamma = &product / &alpha;
        return (alpha, BigInt::from(beta), gamma);
    }
}

/// A conic satisfying the admissibility conditions, fully determined by `seed`.
pub fn random_valid_conic(seed: u64, ranges: &CoefficientRanges) -> Conic {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (alpha, beta, gamma) = random_quadratic_part(&mut rng, ranges);
    let (delta, epsilon, j) = if rng.gen_bool(ranges.homogeneous_rate) {
        (BigInt::zero(), BigInt::zero(), BigInt::zero())
    } else {
        (
            BigInt::from(rng.gen_range(-ranges.delta_max..=ranges.delta_max)),
            BigInt::from(rng.gen_range(-ranges.epsilon_max..=ranges.epsilon_max)),
            BigInt::from(rng.gen_range(-ranges.j_max..=ranges.j_max)),
        )
    };
    crate::conic::validate(Coefficients {
        alpha,
        beta,
        gamma,
        delta,
        epsilon,
        j,
    })
    .expect("generator only emits admissible coefficients")
}

/// Like [`random_valid_conic`] but with δ = ε = J = 0 always.
pub fn random_homogeneous_conic(seed: u64, ranges: &CoefficientRanges) -> Conic {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (alpha, beta, gamma) = random_quadratic_part(&mut rng, ranges);
    Conic::new(
        alpha,
        beta,
        gamma,
        BigInt::zero(),
        BigInt::zero(),
        BigInt::zero(),
    )
    .expect("generator only emits admissible coefficients")
}
