//! Exit criteria. Each test prints one `PASS`/`FAIL` line.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use conic_points::conic::{content_reduce, factor_forms, Reduction};
use conic_points::numeric::gcd;
use conic_points::oracle::{
    brute_force, random_homogeneous_conic, random_valid_conic, solution_bound, CoefficientRanges,
};
use conic_points::solver::{
    solve_degenerate, solve_difference_of_squares, solve_finite, theorem1_conic, theorem1_points,
    Obstruction, SumFormOutcome,
};
use conic_points::{Conic, LatticePoint, SolveOptions};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn report(id: u32, name: &str, ok: bool, detail: String) {
    println!(
        "criterion {id} [{}] {name}: {detail}",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "criterion {id} failed: {detail}");
}

fn b(v: i64) -> BigInt {
    BigInt::from(v)
}

fn pts(v: &[(i64, i64)]) -> Vec<LatticePoint> {
    let mut v: Vec<_> = v.iter().map(|&(x, y)| LatticePoint::new(x, y)).collect();
    v.sort();
    v
}

/// Seeds whose conic has 0 < |I| ≤ 10⁶.
fn finite_conics(count: usize) -> Vec<Conic> {
    let ranges = CoefficientRanges::default();
    let limit = b(1_000_000);
    (0u64..)
        .map(|seed| random_valid_conic(seed, &ranges))
        .filter(|c| {
            let i = &c.invariants().big_i;
            !i.is_zero() && i.magnitude() <= limit.magnitude()
        })
        .take(count)
        .collect()
}

#[test]
fn criterion_1_worked_example() {
    let start = Instant::now();
    let conic = Conic::new(2, -5, 2, -1, 1, -1).unwrap();
    let inv = conic.invariants().clone();
    let (f1, f2) = factor_forms(&conic);
    let reduced = content_reduce(&f1, &f2, &inv.big_i);
    let points = solve_finite(&conic, &SolveOptions::default()).unwrap();
    let elapsed = start.elapsed();

    let Reduction::Reduced {
        first,
        second,
        big_i,
    } = reduced
    else {
        return report(
            1,
            "worked example",
            false,
            "content reduction infeasible".into(),
        );
    };
    let rendered = format!(
        "({f1})({f2}) = {}; ({first})({second}) = {big_i}",
        inv.big_i
    );
    let ok = inv.k == b(3)
        && inv.big_i == b(80)
        && rendered == "(12x - 24y - 4)(12x - 6y - 2) = 80; (3x - 6y - 1)(6x - 3y - 1) = 10"
        && points == pts(&[(-2, -1), (0, -1), (1, 0), (1, 2)])
        && elapsed < Duration::from_millis(10);
    report(
        1,
        "worked example",
        ok,
        format!(
            "k={} I={} {rendered}; {} points in {elapsed:?}",
            inv.k,
            inv.big_i,
            points.len()
        ),
    );
}

#[test]
fn criterion_2_i_multiple_of_four() {
    let start = Instant::now();
    let ranges = CoefficientRanges::default();
    let violations = (0..10_000u64)
        .filter(|&seed| {
            !random_valid_conic(seed, &ranges)
                .invariants()
                .big_i
                .is_multiple_of(&b(4))
        })
        .count();
    let elapsed = start.elapsed();
    report(
        2,
        "I ≡ 0 (mod 4)",
        violations == 0 && elapsed < Duration::from_secs(5),
        format!("{violations} violations over 10000 conics in {elapsed:?}"),
    );
}

#[test]
fn criterion_3_oracle_equivalence() {
    let start = Instant::now();
    let conics = finite_conics(1000);
    let mut mismatches = Vec::new();
    let mut total_points = 0;
    for conic in &conics {
        let solved = solve_finite(conic, &SolveOptions::default()).unwrap();
        let bound = solution_bound(conic).unwrap();
        let oracle = brute_force(conic, &bound);
        total_points += solved.len();
        if solved != oracle {
            mismatches.push(conic.coefficients().to_string());
        }
    }
    let elapsed = start.elapsed();
    report(
        3,
        "solver = brute force",
        conics.len() == 1000 && mismatches.is_empty() && elapsed < Duration::from_secs(60),
        format!(
            "{} conics, {total_points} points, mismatches {mismatches:?}, {elapsed:?}",
            conics.len()
        ),
    );
}

#[test]
fn criterion_4_factorization_identity() {
    let ranges = CoefficientRanges::default();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut violations = 0;
    for seed in 0..100u64 {
        let conic = random_valid_conic(seed, &ranges);
        let inv = conic.invariants();
        let (f1, f2) = factor_forms(&conic);
        let scale = BigInt::from(4) * conic.alpha() * &inv.k * &inv.k;
        for _ in 0..1000 {
            let p = LatticePoint::new(
                rng.gen_range(-1000i64..=1000),
                rng.gen_range(-1000i64..=1000),
            );
            if f1.eval(&p) * f2.eval(&p) - &inv.big_i != &scale * conic.evaluate(&p) {
                violations += 1;
            }
        }
    }
    report(
        4,
        "F₁·F₂ − I = 4αk²·Q",
        violations == 0,
        format!("{violations} violations over 100 conics × 1000 points"),
    );
}

#[test]
fn criterion_5_theorem1() {
    let (beta, delta, epsilon) = (b(3), b(0), b(1));
    let conic = theorem1_conic(&beta, &delta, &epsilon, 4).unwrap();
    let points = theorem1_points(&beta, &delta, &epsilon, 4).unwrap();
    let distinct: BTreeSet<_> = points.iter().collect();
    let oracle = brute_force(&conic, &solution_bound(&conic).unwrap());
    let mut ok = conic.j() == &b(-5)
        && points.len() == 6
        && distinct.len() == 6
        && points == oracle
        && points == pts(&[(-5, 5), (-1, -1), (-1, 2), (-5, 2), (4, -1), (-10, 5)]);
    let mut detail = format!(
        "n=4 instance (J={}) gives {} points; ",
        conic.j(),
        points.len()
    );

    let mut checked = 0;
    let mut failures = Vec::new();
    for beta in (-9i64..=9).filter(|v| v % 2 != 0 && v.abs() != 1) {
        for delta in -2i64..=2 {
            for epsilon in -2i64..=2 {
                for n in 2..=10u32 {
                    let (beta, delta, epsilon) = (b(beta), b(delta), b(epsilon));
                    let points = theorem1_points(&beta, &delta, &epsilon, n).unwrap();
                    let conic = theorem1_conic(&beta, &delta, &epsilon, n).unwrap();
                    let distinct: BTreeSet<_> = points.iter().collect();
                    let general = solve_finite(&conic, &SolveOptions::default()).unwrap();
                    checked += 1;
                    if points.len() != 2 * (n as usize - 1)
                        || distinct.len() != points.len()
                        || points != general
                    {
                        failures.push(format!("β={beta} δ={delta} ε={epsilon} n={n}"));
                    }
                }
            }
        }
    }
    ok &= failures.is_empty();
    detail += &format!("{checked} (β,δ,ε,n) families checked, failures {failures:?}");
    report(5, "closed-form family, 2(n−1) points", ok, detail);
}

#[test]
fn criterion_6_difference_of_squares() {
    let opts = SolveOptions::default();
    let mut failures = Vec::new();

    let unit = solve_difference_of_squares(&b(1), &b(1), &b(-1), &opts).unwrap();
    if unit != SumFormOutcome::Points(pts(&[(1, 0), (-1, 0)])) {
        failures.push(format!("−J=1: {unit:?}"));
    }

    for p in [3i64, 5, 13] {
        let expected = {
            let (x, y) = ((p + 1) / 2, (p - 1) / 2);
            pts(&[(x, y), (x, -y), (-x, -y), (-x, y)])
        };
        let closed = solve_difference_of_squares(&b(1), &b(1), &b(-p), &opts).unwrap();
        let general = solve_finite(&Conic::new(1, 0, -1, 0, 0, -p).unwrap(), &opts).unwrap();
        if closed != SumFormOutcome::Points(expected.clone()) || general != expected {
            failures.push(format!("p={p}: closed {closed:?}, general {general:?}"));
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..100 {
        let l = rng.gen_range(1i64..=20);
        let m = rng.gen_range(1i64..=20);
        // −J = 4q + 2
        let j = -(4 * rng.gen_range(-250i64..=250) + 2);
        let out = solve_difference_of_squares(&b(l), &b(m), &b(j), &opts).unwrap();
        let brute = brute_force(
            &Conic::new(l * l, 0, -m * m, 0, 0, j).unwrap(),
            &conic_points::oracle::SearchBound::square(60),
        );
        if out != SumFormOutcome::Unsolvable(Obstruction::Mod4) || !brute.is_empty() {
            failures.push(format!("l={l} m={m} J={j}: {out:?}"));
        }
    }
    report(
        6,
        "difference of squares closed forms",
        failures.is_empty(),
        format!("p ∈ {{3,5,13}}, 100 mod-4 samples; failures {failures:?}"),
    );
}

#[test]
fn criterion_7_homogeneous_lines() {
    let ranges = CoefficientRanges::default();
    let mut failures = Vec::new();
    for seed in 0..100u64 {
        let conic = random_homogeneous_conic(seed, &ranges);
        let (l1, l2) = solve_degenerate(&conic).unwrap();
        for line in [&l1, &l2] {
            let Some(s) = &line.solution else {
                failures.push(format!("seed {seed}: unsolvable line"));
                continue;
            };
            let origin_on_line = line.contains(&LatticePoint::new(0, 0));
            let coprime = gcd(&s.dir.dx, &s.dir.dy).is_one();
            let all_on_conic =
                (-100i64..=100).all(|t| conic.contains(&line.point_at(&b(t)).unwrap()));
            if !(origin_on_line && coprime && all_on_conic) {
                failures.push(format!("seed {seed}: {line}"));
            }
        }
        let (h1, h2) = conic_points::solver::solve_homogeneous(&conic).unwrap();
        for line in [&h1, &h2] {
            let ok = line.point_at(&b(0)) == Some(LatticePoint::new(0, 0))
                && (-100i64..=100).all(|t| conic.contains(&line.point_at(&b(t)).unwrap()));
            if !ok {
                failures.push(format!("seed {seed}: homogeneous {line}"));
            }
        }
    }
    report(
        7,
        "homogeneous conics split into lines through the origin",
        failures.is_empty(),
        format!("100 conics; failures {failures:?}"),
    );
}

#[test]
fn criterion_8_reduction_equivalence() {
    let plain = SolveOptions {
        reduce: false,
        ..Default::default()
    };
    let reduced = SolveOptions::default();
    let conics = finite_conics(1000);
    let mismatches: Vec<_> = conics
        .iter()
        .filter(|c| solve_finite(c, &plain).unwrap() != solve_finite(c, &reduced).unwrap())
        .map(|c| c.coefficients().to_string())
        .collect();
    report(
        8,
        "content reduction does not change answers",
        conics.len() == 1000 && mismatches.is_empty(),
        format!("{} conics; mismatches {mismatches:?}", conics.len()),
    );
}
