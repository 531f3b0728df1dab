use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{EquationSystem, Kernel};
use crate::framework::ValidationReport;
use crate::ALGEBRA_TOLERANCE;

fn close(x: f64, y: f64) -> bool {
    (x - y).abs() <= ALGEBRA_TOLERANCE
}

/// Checks the function-tuple axioms of the system's kernel at every arity the
/// system uses.
///
/// For the outer function h: h(1, …, 1) = 1, h vanishes once any argument is
/// 0, and h is symmetric. For each inner function h_i: h_i(1, …, 1) = 0,
/// h_i = 1 once any argument is 0, and h_i is symmetric. Zeros are inserted at
/// sampled positions of sampled points. The converse directions (h = 0 or
/// h_i = 1 only through a zero argument) are probed at the same points and
/// reported as warnings.
pub fn validate_tuple_axioms(system: &EquationSystem, samples: usize, seed: u64) -> ValidationReport {
    let mut report = ValidationReport::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let kernel = system.kernel();
    let mut outer_arities = BTreeSet::new();
    let mut inner_arities = BTreeSet::new();
    for beta in 0..system.len() {
        let tuples = system.tuples(beta);
        if !tuples.is_empty() {
            outer_arities.insert(tuples.len());
        }
        inner_arities.extend(tuples.iter().map(Vec::len));
    }
    for &k in &outer_arities {
        check(&mut report, &mut rng, samples, k, Role::Outer, kernel);
    }
    for &k in &inner_arities {
        check(&mut report, &mut rng, samples, k, Role::Inner, kernel);
    }
    report
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Role {
    Outer,
    Inner,
}

type Eval<'a> = &'a dyn Fn(&[f64]) -> f64;

fn check(report: &mut ValidationReport, rng: &mut ChaCha8Rng, samples: usize, k: usize, role: Role, kernel: &Kernel) {
    let (name, eval, at_ones, absorbed): (&str, Eval<'_>, f64, f64) = match role {
        Role::Outer => ("h", &|xs| kernel.outer(xs), 1.0, 0.0),
        Role::Inner => ("h_i", &|xs| kernel.inner(xs), 0.0, 1.0),
    };
    let codes = match role {
        Role::Outer => ["outer-at-ones", "outer-zero", "outer-symmetry"],
        Role::Inner => ["inner-at-ones", "inner-zero", "inner-symmetry"],
    };
    let kname = kernel.name();

    let ones = vec![1.0; k];
    let v = eval(&ones);
    if !close(v, at_ones) {
        report.violation(codes[0], format!("{kname}: {name}(1, …, 1) = {v} with {k} arguments, expected {at_ones}"), vec![]);
    }

    let mut zero_failed = false;
    let mut symmetry_failed = false;
    let mut interior_hit = None;
    for _ in 0..samples {
        let point: Vec<f64> = (0..k).map(|_| rng.gen_range(f64::EPSILON..=1.0)).collect();
        let value = eval(&point);
        if interior_hit.is_none() && close(value, absorbed) {
            interior_hit = Some(point.clone());
        }

        let mut zeroed = point.clone();
        zeroed[rng.gen_range(0..k)] = 0.0;
        let z = eval(&zeroed);
        if !zero_failed && !close(z, absorbed) {
            zero_failed = true;
            report.violation(codes[1], format!("{kname}: {name}{zeroed:?} = {z}, expected {absorbed}"), vec![]);
        }

        let mut shuffled = point.clone();
        shuffled.shuffle(rng);
        let s = eval(&shuffled);
        if !symmetry_failed && !close(s, value) {
            symmetry_failed = true;
            report.violation(codes[2], format!("{kname}: {name}{point:?} = {value} but {name}{shuffled:?} = {s}"), vec![]);
        }
    }
    if let Some(point) = interior_hit {
        report
            .warnings
            .push(format!("{kname}: {name}{point:?} = {absorbed} although no argument is 0"));
    }
}
