//! Equational semantics: per-element fixed-point equations x_β = F_β(x).
//!
//! Every F_β has the shape h(h_1(u_1…), …, h_k(u_k…)) with one inner function
//! per attacker of β. For the three named families, h is the t-norm and
//! h_i(u) = N(T(u)), the value the encoded conjunct forces on β. Unattacked
//! elements get F_β = 1.

mod axioms;
mod exact;
mod solver;

pub use axioms::validate_tuple_axioms;
pub use exact::enumerate_3valued_solutions;
pub use solver::{solve_fixed_point, SolveConfig, SolveResult, SolveStatus};

use std::fmt;

use crate::error::{Error, Result};
use crate::framework::{ElementId, Framework, FrameworkKind, Layout};
use crate::fuzzy::{luk_closed, Algebra, AssignmentR, Family};
use crate::logic::Truth3;
use crate::semantics::Labelling3;
use crate::MODEL_TOLERANCE;

/// A hand-written function tuple, mainly for probing the axiom checker.
#[derive(Clone, Copy)]
pub struct CustomKernel {
    pub name: &'static str,
    pub outer: fn(&[f64]) -> f64,
    pub inner: fn(&[f64]) -> f64,
}

impl fmt::Debug for CustomKernel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CustomKernel").field("name", &self.name).finish_non_exhaustive()
    }
}

/// The outer and inner functions (h, h_i) shared by every equation.
#[derive(Debug, Clone, Copy)]
pub enum Kernel {
    Algebra(Algebra),
    Custom(CustomKernel),
}

impl Kernel {
    /// h over the inner values; 1 when there are none.
    pub fn outer(&self, xs: &[f64]) -> f64 {
        match self {
            Kernel::Algebra(alg) => match alg.family {
                Family::Lukasiewicz if !xs.is_empty() => luk_closed(xs.iter().copied()),
                _ => alg.tnorm_fold(xs.iter().copied()),
            },
            Kernel::Custom(c) => (c.outer)(xs),
        }
    }

    /// h_i over one attacker's members.
    pub fn inner(&self, us: &[f64]) -> f64 {
        match self {
            Kernel::Algebra(alg) => {
                let t = match alg.family {
                    Family::Lukasiewicz => luk_closed(us.iter().copied()),
                    _ => alg.tnorm_fold(us.iter().copied()),
                };
                alg.negate(t)
            }
            Kernel::Custom(c) => (c.inner)(us),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Kernel::Algebra(alg) => alg.family.system_name(),
            Kernel::Custom(c) => c.name,
        }
    }
}

/// The equation system of one framework under one kernel.
#[derive(Debug, Clone)]
pub struct EquationSystem {
    framework: Framework,
    layout: Layout,
    kernel: Kernel,
    /// Per element, per attacker: member positions in encoding order.
    tuples: Vec<Vec<Vec<usize>>>,
}

/// Eq_G, Eq_P or Eq_L of `framework`, depending on the algebra's family.
pub fn build_system(framework: &Framework, algebra: &Algebra) -> Result<EquationSystem> {
    EquationSystem::with_kernel(framework, Kernel::Algebra(*algebra))
}

impl EquationSystem {
    pub fn with_kernel(framework: &Framework, kernel: Kernel) -> Result<Self> {
        let layout = framework.layout()?;
        let kind = framework.kind();
        let tuples = layout
            .attackers
            .iter()
            .map(|attackers| {
                attackers
                    .iter()
                    .map(|atk| match (kind, atk.label) {
                        (FrameworkKind::Hsaf, Some(label)) => {
                            std::iter::once(label).chain(atk.sources.iter().copied()).collect()
                        }
                        (FrameworkKind::Setaf, _) | (_, None) => atk.sources.clone(),
                        (_, Some(label)) => atk.sources.iter().copied().chain(std::iter::once(label)).collect(),
                    })
                    .collect()
            })
            .collect();
        Ok(Self { framework: framework.clone(), layout, kernel, tuples })
    }

    pub fn variables(&self) -> &[ElementId] {
        &self.layout.elements
    }

    pub fn len(&self) -> usize {
        self.layout.len()
    }

    pub fn is_empty(&self) -> bool {
        self.layout.is_empty()
    }

    pub fn kernel(&self) -> &Kernel {
        &self.kernel
    }

    pub fn framework(&self) -> &Framework {
        &self.framework
    }

    pub(crate) fn layout(&self) -> &Layout {
        &self.layout
    }

    /// Member positions of each attacker of the element at `beta`.
    pub fn tuples(&self, beta: usize) -> &[Vec<usize>] {
        &self.tuples[beta]
    }

    /// F_β at the point `x` (indexed like [`EquationSystem::variables`]).
    pub fn update(&self, x: &[f64], beta: usize) -> f64 {
        let tuples = &self.tuples[beta];
        if tuples.is_empty() {
            return 1.0;
        }
        let mut members = Vec::new();
        let inner: Vec<f64> = tuples
            .iter()
            .map(|t| {
                members.clear();
                members.extend(t.iter().map(|&i| x[i]));
                self.kernel.inner(&members)
            })
            .collect();
        self.kernel.outer(&inner)
    }

    pub(crate) fn apply(&self, x: &[f64], out: &mut [f64]) {
        for (beta, slot) in out.iter_mut().enumerate() {
            *slot = self.update(x, beta);
        }
    }

    pub(crate) fn residual_at(&self, x: &[f64]) -> f64 {
        (0..x.len()).map(|beta| (x[beta] - self.update(x, beta)).abs()).fold(0.0, f64::max)
    }

    /// Orders an assignment by the system variables.
    pub fn point(&self, assignment: &AssignmentR) -> Result<Vec<f64>> {
        if let Some(extra) = assignment.keys().find(|k| self.layout.position(k).is_none()) {
            return Err(Error::NotLabellable(extra.clone()));
        }
        self.layout
            .elements
            .iter()
            .map(|e| {
                let x = *assignment.get(e).ok_or_else(|| Error::Partial(e.clone()))?;
                if (0.0..=1.0).contains(&x) {
                    Ok(x)
                } else {
                    Err(Error::OutOfRange { id: e.to_string(), value: x })
                }
            })
            .collect()
    }

    pub fn assignment(&self, x: &[f64]) -> AssignmentR {
        self.layout.elements.iter().cloned().zip(x.iter().copied()).collect()
    }
}

/// max over β of |x_β − F_β(x)|.
pub fn residual(system: &EquationSystem, assignment: &AssignmentR) -> Result<f64> {
    Ok(system.residual_at(&system.point(assignment)?))
}

/// Maps 0 to 0, 1 to 1 and everything strictly between to ½, snapping values
/// within [`MODEL_TOLERANCE`] of an endpoint onto it.
pub fn ternarize(assignment: &AssignmentR) -> Result<Labelling3> {
    assignment
        .iter()
        .map(|(k, &x)| {
            if !(0.0..=1.0).contains(&x) {
                return Err(Error::OutOfRange { id: k.to_string(), value: x });
            }
            let t = if x <= MODEL_TOLERANCE {
                Truth3::Zero
            } else if x >= 1.0 - MODEL_TOLERANCE {
                Truth3::One
            } else {
                Truth3::Half
            };
            Ok((k.clone(), t))
        })
        .collect()
}
