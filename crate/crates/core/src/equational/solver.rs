use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{EquationSystem, Kernel};
use crate::error::{Error, Result};
use crate::fuzzy::{AssignmentR, Family};
use crate::MODEL_TOLERANCE;

#[derive(Debug, Clone, PartialEq)]
pub struct SolveConfig {
    pub tolerance: f64,
    pub max_iterations: usize,
    /// λ in x ← (1 − λ)x + λF(x).
    pub damping: f64,
    pub restarts: usize,
    pub seed: u64,
}

impl Default for SolveConfig {
    fn default() -> Self {
        Self { tolerance: 1e-9, max_iterations: 100_000, damping: 1.0, restarts: 8, seed: 0 }
    }
}

impl SolveConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.tolerance > 0.0 && self.tolerance.is_finite()) {
            return Err(Error::Config(format!("tolerance must be positive, got {}", self.tolerance)));
        }
        if !(self.damping > 0.0 && self.damping <= 1.0) {
            return Err(Error::Config(format!("damping must lie in (0, 1], got {}", self.damping)));
        }
        if self.max_iterations == 0 {
            return Err(Error::Config("max_iterations must be positive".into()));
        }
        Ok(())
    }

    /// Damping of run `run`: the configured value on even runs, and on odd
    /// runs a fallback that starts at min(λ, ½) and halves each time.
    fn damping_for(&self, run: usize) -> f64 {
        if run.is_multiple_of(2) {
            self.damping
        } else {
            self.damping.min(0.5) / f64::from(1u32 << (run / 2).min(30))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveStatus {
    Converged,
    Failed,
}

impl SolveStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            SolveStatus::Converged => "converged",
            SolveStatus::Failed => "failed",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveResult {
    pub status: SolveStatus,
    /// Present exactly when converged.
    pub assignment: Option<AssignmentR>,
    /// Residual of the returned point, or the best residual seen on failure.
    pub residual: f64,
    /// Iterations of the successful run, or of all runs on failure.
    pub iterations: usize,
    /// Index of the successful run (0 is the initial run), or of the last run.
    pub restart: usize,
}

impl SolveResult {
    pub fn converged(&self) -> bool {
        self.status == SolveStatus::Converged
    }
}

/// Damped fixed-point iteration with restarts.
///
/// Run 0 starts at all-½ with the configured damping; run 1 repeats it with
/// damping min(λ, ½); later runs start at seeded uniform points, with even
/// runs using λ and odd runs halving the fallback again (¼, ⅛, …). Strongly
/// negative slopes such as x ↦ 1 − 4x repel every damping above 2/5, which is
/// why the fallback keeps shrinking. The first run to reach the tolerance wins, and
/// its point is then polished toward an exact fixed point. Only an invalid
/// configuration is an error; non-convergence is reported as a status.
pub fn solve_fixed_point(system: &EquationSystem, config: &SolveConfig) -> Result<SolveResult> {
    config.validate()?;
    let n = system.len();
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut best = f64::INFINITY;
    let mut total = 0;
    for run in 0..=config.restarts {
        let start: Vec<f64> = if run < 2 { vec![0.5; n] } else { (0..n).map(|_| rng.gen::<f64>()).collect() };
        let damping = config.damping_for(run);
        let (x, res, iterations) = iterate(system, start, damping, config);
        total += iterations;
        if res <= config.tolerance {
            let x = polish(system, x, damping, config.tolerance);
            let residual = system.residual_at(&x);
            return Ok(SolveResult {
                status: SolveStatus::Converged,
                assignment: Some(system.assignment(&x)),
                residual,
                iterations,
                restart: run,
            });
        }
        best = best.min(res);
    }
    Ok(SolveResult { status: SolveStatus::Failed, assignment: None, residual: best, iterations: total, restart: config.restarts })
}

fn step(system: &EquationSystem, x: &mut [f64], fx: &mut [f64], damping: f64) -> f64 {
    system.apply(x, fx);
    let mut res: f64 = 0.0;
    for (xi, &fi) in x.iter_mut().zip(fx.iter()) {
        res = res.max((*xi - fi).abs());
        *xi = if damping == 1.0 { fi } else { ((1.0 - damping) * *xi + damping * fi).clamp(0.0, 1.0) };
    }
    res
}

const SNAP_LADDER: [f64; 4] = [1e-6, 1e-4, 1e-3, 1e-2];
const PROBE_EVERY: usize = 1024;

/// Returns the last point whose residual was measured, that residual and the
/// iteration count.
///
/// Every [`PROBE_EVERY`] iterations the run also tries moving near-endpoint
/// coordinates onto 0 or 1, which finishes runs that crawl toward a double
/// root.
fn iterate(system: &EquationSystem, mut x: Vec<f64>, damping: f64, config: &SolveConfig) -> (Vec<f64>, f64, usize) {
    let mut fx = vec![0.0; x.len()];
    let mut res = f64::INFINITY;
    for it in 0..config.max_iterations {
        let before = x.clone();
        res = step(system, &mut x, &mut fx, damping);
        if res <= config.tolerance {
            return (before, res, it);
        }
        if (it + 1) % PROBE_EVERY == 0 && res < 1e-2 {
            if let Some((p, r)) = endpoint_probe(system, &before, res, damping, config.tolerance) {
                return (p, r, it + 1);
            }
        }
    }
    let res_end = system.residual_at(&x);
    if res_end <= config.tolerance {
        return (x, res_end, config.max_iterations);
    }
    (x, res.min(res_end), config.max_iterations)
}

/// Snaps coordinates within growing distances of an endpoint, iterates a
/// little from there, and returns the best point if it beats `target`.
fn endpoint_probe(system: &EquationSystem, x: &[f64], current: f64, damping: f64, target: f64) -> Option<(Vec<f64>, f64)> {
    let mut fx = vec![0.0; x.len()];
    let mut best: Option<(Vec<f64>, f64)> = None;
    let mut best_res = current;
    for threshold in SNAP_LADDER {
        let mut cur: Vec<f64> = x.iter().map(|&v| snap_within(v, threshold)).collect();
        if cur == x {
            continue;
        }
        for _ in 0..1_000 {
            let res = system.residual_at(&cur);
            if res < best_res {
                best_res = res;
                best = Some((cur.clone(), res));
            }
            if res <= 1e-15 {
                break;
            }
            step(system, &mut cur, &mut fx, damping);
        }
        if best_res <= 1e-15 {
            break;
        }
    }
    best.filter(|(_, r)| *r <= target)
}

/// Pushes a converged point toward an exact fixed point: keep iterating while
/// the residual shrinks, snap near-endpoint values, and for the Gödel family
/// round to a dyadic grid where min/max/1−x are exact. Each stage is kept only
/// if it does not worsen the residual beyond `tolerance`.
fn polish(system: &EquationSystem, x: Vec<f64>, damping: f64, tolerance: f64) -> Vec<f64> {
    let mut best_res = system.residual_at(&x);
    let mut best = x;
    if best_res == 0.0 {
        return best;
    }

    let mut cur = best.clone();
    let mut fx = vec![0.0; cur.len()];
    for _ in 0..10_000 {
        step(system, &mut cur, &mut fx, damping);
        let res = system.residual_at(&cur);
        if res < best_res {
            best_res = res;
            best.clone_from(&cur);
        }
        if best_res <= 1e-15 {
            break;
        }
    }

    let snapped: Vec<f64> = best.iter().map(|&v| snap(v)).collect();
    let res = system.residual_at(&snapped);
    if res <= best_res.max(tolerance) {
        best_res = res;
        best = snapped;
    }

    // Fixed points at a double root (x = x/(1 + x) under the product family)
    // are approached sublinearly, so a run can stop at values like 4e-5 that
    // should be 0.
    if best_res > 1e-15 {
        if let Some((p, r)) = endpoint_probe(system, &best, best_res, damping, best_res) {
            best = p;
            best_res = r;
        }
    }

    if best_res > 0.0 && matches!(system.kernel(), Kernel::Algebra(a) if a.family == Family::Godel) {
        if let Some(exact) = dyadic_fixed_point(system, &best) {
            return exact;
        }
    }
    best
}

fn snap(v: f64) -> f64 {
    snap_within(v, MODEL_TOLERANCE)
}

fn snap_within(v: f64, threshold: f64) -> f64 {
    if v <= threshold {
        0.0
    } else if v >= 1.0 - threshold {
        1.0
    } else {
        v
    }
}

fn dyadic_fixed_point(system: &EquationSystem, x: &[f64]) -> Option<Vec<f64>> {
    let mut fx = vec![0.0; x.len()];
    for bits in [20, 16, 12, 8, 4, 2, 1] {
        let scale = f64::from(1u32 << bits);
        let mut cur: Vec<f64> = x.iter().map(|&v| snap(v)).map(|v| (v * scale).round() / scale).collect();
        for _ in 0..=x.len() {
            if system.residual_at(&cur) == 0.0 {
                return Some(cur);
            }
            system.apply(&cur, &mut fx);
            cur.clone_from(&fx);
        }
    }
    None
}
