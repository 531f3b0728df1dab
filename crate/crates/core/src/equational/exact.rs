use num_rational::Ratio;
use num_traits::{One, Zero};

use super::{EquationSystem, Kernel};
use crate::error::Result;
use crate::fuzzy::{Family, Negation};
use crate::logic::{check_cap, for_each_point, Truth3};
use crate::semantics::{labelling_of, Labelling3};

/// Arithmetic needed to evaluate the named kernels with the standard negation.
pub(crate) trait Scalar: Clone + PartialOrd {
    fn zero() -> Self;
    fn one() -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn of_truth(t: Truth3) -> Self;
}

impl Scalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn of_truth(t: Truth3) -> Self {
        t.to_f64()
    }
}

type Rational = Ratio<i64>;

impl Scalar for Rational {
    fn zero() -> Self {
        <Rational as Zero>::zero()
    }
    fn one() -> Self {
        <Rational as One>::one()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn of_truth(t: Truth3) -> Self {
        match t {
            Truth3::Zero => <Rational as Zero>::zero(),
            Truth3::Half => Rational::new(1, 2),
            Truth3::One => <Rational as One>::one(),
        }
    }
}

fn tnorm<S: Scalar>(family: Family, xs: &[S]) -> S {
    match family {
        Family::Godel => xs.iter().fold(S::one(), |acc, x| if *x < acc { x.clone() } else { acc }),
        Family::Product => xs.iter().fold(S::one(), |acc, x| acc.times(x)),
        Family::Lukasiewicz => {
            let sum = xs.iter().fold(S::zero(), |acc, x| acc.plus(x));
            let count = xs.iter().fold(S::zero(), |acc, _| acc.plus(&S::one()));
            let excess = sum.minus(&count.minus(&S::one()));
            if excess > S::zero() {
                excess
            } else {
                S::zero()
            }
        }
    }
}

/// F_β over any scalar, for a named family with the standard negation.
pub(crate) fn update_exact<S: Scalar>(system: &EquationSystem, family: Family, x: &[S], beta: usize) -> S {
    let inner: Vec<S> = system
        .tuples(beta)
        .iter()
        .map(|t| {
            let us: Vec<S> = t.iter().map(|&i| x[i].clone()).collect();
            S::one().minus(&tnorm(family, &us))
        })
        .collect();
    tnorm(family, &inner)
}

/// Every point of {0, ½, 1}^n with residual exactly 0, in lexicographic order.
///
/// The named families are evaluated over exact rationals; other kernels are
/// evaluated in double precision and must hit the point exactly.
pub fn enumerate_3valued_solutions(system: &EquationSystem, cap: u128) -> Result<Vec<Labelling3>> {
    let n = system.len();
    check_cap(n, cap)?;
    let exact_family = match system.kernel() {
        Kernel::Algebra(alg) if alg.negation == Negation::Standard => Some(alg.family),
        _ => None,
    };
    let mut out = Vec::new();
    for_each_point(n, |values| {
        let is_solution = match exact_family {
            Some(family) => {
                let x: Vec<Rational> = values.iter().map(|&t| Rational::of_truth(t)).collect();
                (0..n).all(|beta| update_exact(system, family, &x, beta) == x[beta])
            }
            None => {
                let x: Vec<f64> = values.iter().map(|t| t.to_f64()).collect();
                (0..n).all(|beta| system.update(&x, beta) == x[beta])
            }
        };
        if is_solution {
            out.push(labelling_of(system.layout(), values));
        }
    });
    Ok(out)
}
