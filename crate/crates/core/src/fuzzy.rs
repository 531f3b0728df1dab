//! [0,1]-valued evaluation under a continuous t-norm, its residuum and a
//! negation.
//!
//! Conjunction is read as the algebra's t-norm (not as `min`), which is what
//! makes the encoded formulas line up with the equational systems.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::framework::ElementId;
use crate::logic::Formula;

pub type AssignmentR = BTreeMap<ElementId, f64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Godel,
    Product,
    Lukasiewicz,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Godel, Family::Product, Family::Lukasiewicz];

    pub fn name(self) -> &'static str {
        match self {
            Self::Godel => "godel",
            Self::Product => "product",
            Self::Lukasiewicz => "lukasiewicz",
        }
    }

    /// Name of the induced equational system (`eqG`, `eqP`, `eqL`).
    pub fn system_name(self) -> &'static str {
        match self {
            Self::Godel => "eqG",
            Self::Product => "eqP",
            Self::Lukasiewicz => "eqL",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Self::ALL
            .into_iter()
            .find(|f| f.name() == s || f.system_name() == s)
            .ok_or_else(|| format!("unknown algebra `{s}`"))
    }
}

/// A continuous negation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Negation {
    /// N(x) = 1 − x.
    Standard,
    /// N(x) = (1 − x) / (1 + λx) with λ > −1.
    Sugeno { lambda: f64 },
}

impl Negation {
    pub fn apply(self, x: f64) -> f64 {
        match self {
            Self::Standard => 1.0 - x,
            Self::Sugeno { lambda } => (1.0 - x) / (1.0 + lambda * x),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Algebra {
    pub family: Family,
    pub negation: Negation,
}

impl Algebra {
    pub fn new(family: Family) -> Self {
        Self { family, negation: Negation::Standard }
    }

    pub fn godel() -> Self {
        Self::new(Family::Godel)
    }

    pub fn product() -> Self {
        Self::new(Family::Product)
    }

    pub fn lukasiewicz() -> Self {
        Self::new(Family::Lukasiewicz)
    }

    pub fn with_negation(self, negation: Negation) -> Self {
        Self { negation, ..self }
    }

    pub fn negate(&self, x: f64) -> f64 {
        self.negation.apply(x)
    }

    pub fn tnorm(&self, x: f64, y: f64) -> f64 {
        match self.family {
            Family::Godel => x.min(y),
            Family::Product => x * y,
            Family::Lukasiewicz => (x + y - 1.0).max(0.0),
        }
    }

    /// Left fold of the binary t-norm; 1 for an empty sequence.
    pub fn tnorm_fold(&self, xs: impl IntoIterator<Item = f64>) -> f64 {
        let mut iter = xs.into_iter();
        match iter.next() {
            None => 1.0,
            Some(first) => iter.fold(first, |acc, x| self.tnorm(acc, x)),
        }
    }

    /// Dual t-conorm S(x, y) = 1 − T(1 − x, 1 − y).
    pub fn tconorm(&self, x: f64, y: f64) -> f64 {
        1.0 - self.tnorm(1.0 - x, 1.0 - y)
    }

    /// Residuum sup{z | T(x, z) ≤ y} in closed form.
    pub fn residuum(&self, x: f64, y: f64) -> f64 {
        match self.family {
            Family::Godel => {
                if x <= y {
                    1.0
                } else {
                    y
                }
            }
            Family::Product => {
                if x <= y {
                    1.0
                } else {
                    y / x
                }
            }
            Family::Lukasiewicz => (1.0 - x + y).min(1.0),
        }
    }
}

fn check_unit(what: &str, x: f64) -> Result<f64> {
    if (0.0..=1.0).contains(&x) {
        Ok(x)
    } else {
        Err(Error::OutOfRange { id: what.to_string(), value: x })
    }
}

/// I_T(x, y) for the algebra's t-norm.
pub fn implication_value(algebra: &Algebra, x: f64, y: f64) -> Result<f64> {
    Ok(algebra.residuum(check_unit("x", x)?, check_unit("y", y)?))
}

/// n-ary Łukasiewicz t-norm: max(0, Σx − n + 1).
pub fn luk_nary_closed_form(xs: &[f64]) -> Result<f64> {
    if xs.is_empty() {
        return Err(Error::Empty("the n-ary Łukasiewicz t-norm"));
    }
    for &x in xs {
        check_unit("x", x)?;
    }
    Ok(luk_closed(xs.iter().copied()))
}

pub(crate) fn luk_closed(xs: impl IntoIterator<Item = f64>) -> f64 {
    let (sum, n) = xs.into_iter().fold((0.0, 0usize), |(s, n), x| (s + x, n + 1));
    let excess = sum - (n as f64 - 1.0);
    if excess > 0.0 {
        excess
    } else {
        0.0
    }
}

/// Evaluates `formula` under `algebra`. `Or` uses the dual t-conorm and `Iff`
/// evaluates as T(I(x, y), I(y, x)).
pub fn eval_fuzzy(formula: &Formula, assignment: &AssignmentR, algebra: &Algebra) -> Result<f64> {
    Ok(match formula {
        Formula::Var(v) => {
            let x = *assignment.get(v).ok_or_else(|| Error::Unbound(v.clone()))?;
            if !(0.0..=1.0).contains(&x) {
                return Err(Error::OutOfRange { id: v.to_string(), value: x });
            }
            x
        }
        Formula::Const(c) => c.to_f64(),
        Formula::Neg(f) => algebra.negate(eval_fuzzy(f, assignment, algebra)?),
        Formula::And(fs) => {
            let values = fs.iter().map(|f| eval_fuzzy(f, assignment, algebra)).collect::<Result<Vec<_>>>()?;
            algebra.tnorm_fold(values)
        }
        Formula::Or(fs) => {
            let mut acc = 0.0;
            for f in fs {
                acc = algebra.tconorm(acc, eval_fuzzy(f, assignment, algebra)?);
            }
            acc
        }
        Formula::Imp(a, b) => algebra.residuum(eval_fuzzy(a, assignment, algebra)?, eval_fuzzy(b, assignment, algebra)?),
        Formula::Iff(a, b) => {
            let x = eval_fuzzy(a, assignment, algebra)?;
            let y = eval_fuzzy(b, assignment, algebra)?;
            algebra.tnorm(algebra.residuum(x, y), algebra.residuum(y, x))
        }
    })
}
