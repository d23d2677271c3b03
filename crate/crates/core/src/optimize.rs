//! Multistart Nelder–Mead search for the largest `|Tr(ρ·𝔹)|` over all
//! measurement schemes, used as an oracle independent of the closed forms.

use core::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI, TAU};

use crate::bell::{chsh_value, MeasurementScheme};
use crate::numerics::{rng_substream, sort_small_by};
use crate::states::DensityMatrix;
use crate::{Error, Result};

/// Number of angles: `(polar, azimuth)` for each of `a, a′, b, b′`.
pub const DIM: usize = 8;

const INITIAL_STEP: f64 = 0.5;
const REFLECT: f64 = 1.0;
const EXPAND: f64 = 2.0;
const CONTRACT: f64 = 0.5;
const SHRINK: f64 = 0.5;

/// Fixed starting schemes in the z/x plane, tried before random starts:
/// `a = ẑ`, `a′ = x̂` against the four sign arrangements of Bob's diagonal
/// pair.
const FIXED_STARTS: [[f64; DIM]; 4] = [
    [0.0, 0.0, FRAC_PI_2, 0.0, FRAC_PI_4, 0.0, -FRAC_PI_4, 0.0],
    [0.0, 0.0, FRAC_PI_2, 0.0, 3.0 * FRAC_PI_4, 0.0, -3.0 * FRAC_PI_4, 0.0],
    [0.0, 0.0, FRAC_PI_2, 0.0, -FRAC_PI_4, 0.0, FRAC_PI_4, 0.0],
    [0.0, 0.0, FRAC_PI_2, 0.0, -3.0 * FRAC_PI_4, 0.0, 3.0 * FRAC_PI_4, 0.0],
];

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OptimizerConfig {
    pub restarts: usize,
    pub max_iters: usize,
    /// Converged once the simplex function-value spread drops below this.
    pub ftol: f64,
    pub seed: u64,
}

impl Default for OptimizerConfig {
    fn default() -> Self {
        OptimizerConfig {
            restarts: 32,
            max_iters: 2000,
            ftol: 1e-12,
            seed: 0,
        }
    }
}

impl OptimizerConfig {
    pub fn with_seed(seed: u64) -> Self {
        OptimizerConfig {
            seed,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.restarts == 0 {
            return Err(Error::InvalidConfig {
                what: "restarts must be at least 1",
            });
        }
        if self.max_iters == 0 {
            return Err(Error::InvalidConfig {
                what: "max_iters must be at least 1",
            });
        }
        if !(self.ftol > 0.0 && self.ftol.is_finite()) {
            return Err(Error::InvalidConfig {
                what: "ftol must be positive",
            });
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LocalSearchResult {
    /// Objective value at `angles` (the maximized quantity, not negated).
    pub value: f64,
    pub angles: [f64; DIM],
    pub iterations: usize,
    pub converged: bool,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OptResult {
    pub best_value: f64,
    pub scheme: MeasurementScheme,
    pub restarts_used: usize,
    /// True if at least one restart met `ftol` before `max_iters`.
    pub converged: bool,
}

fn lerp(from: &[f64; DIM], to: &[f64; DIM], t: f64) -> [f64; DIM] {
    core::array::from_fn(|k| from[k] + t * (to[k] - from[k]))
}

/// Nelder–Mead maximization of `objective` from `start`.
///
/// Runs the simplex on the negated objective with reflection 1, expansion
/// 2, contraction ½ and shrink ½, starting from the axis-aligned simplex
/// of edge 0.5 at `start`. Stops when the spread of function values across
/// the simplex falls below `cfg.ftol`, or after `cfg.max_iters` iterations.
pub fn local_search<F>(mut objective: F, start: [f64; DIM], cfg: &OptimizerConfig) -> LocalSearchResult
where
    F: FnMut(&[f64; DIM]) -> f64,
{
    let mut cost = |x: &[f64; DIM]| -objective(x);
    let mut pts = [start; DIM + 1];
    for (k, p) in pts.iter_mut().skip(1).enumerate() {
        p[k] += INITIAL_STEP;
    }
    let mut vals = [0.0; DIM + 1];
    for (v, p) in vals.iter_mut().zip(&pts) {
        *v = cost(p);
    }

    let mut order: [usize; DIM + 1] = core::array::from_fn(|i| i);
    let mut iterations = 0;
    let mut converged = false;
    loop {
        // Stable sort: ties keep the lower vertex index, so a flat
        // objective returns `start`.
        sort_small_by(&mut order, |&i, &j| vals[i].total_cmp(&vals[j]));
        let (best, worst, second) = (order[0], order[DIM], order[DIM - 1]);
        if vals[worst] - vals[best] < cfg.ftol {
            converged = true;
            break;
        }
        if iterations == cfg.max_iters {
            break;
        }
        iterations += 1;

        let mut centroid = [0.0; DIM];
        for &i in &order[..DIM] {
            for k in 0..DIM {
                centroid[k] += pts[i][k];
            }
        }
        centroid.iter_mut().for_each(|c| *c /= DIM as f64);

        let xr = lerp(&centroid, &pts[worst], -REFLECT);
        let fr = cost(&xr);
        if fr < vals[best] {
            let xe = lerp(&centroid, &xr, EXPAND);
            let fe = cost(&xe);
            if fe < fr {
                pts[worst] = xe;
                vals[worst] = fe;
            } else {
                pts[worst] = xr;
                vals[worst] = fr;
            }
            continue;
        }
        if fr < vals[second] {
            pts[worst] = xr;
            vals[worst] = fr;
            continue;
        }
        let (xc, fc, accept) = if fr < vals[worst] {
            let xc = lerp(&centroid, &xr, CONTRACT);
            let fc = cost(&xc);
            (xc, fc, fc <= fr)
        } else {
            let xc = lerp(&centroid, &pts[worst], CONTRACT);
            let fc = cost(&xc);
            (xc, fc, fc < vals[worst])
        };
        if accept {
            pts[worst] = xc;
            vals[worst] = fc;
            continue;
        }
        let anchor = pts[best];
        for &i in &order[1..] {
            pts[i] = lerp(&anchor, &pts[i], SHRINK);
            vals[i] = cost(&pts[i]);
        }
    }

    sort_small_by(&mut order, |&i, &j| vals[i].total_cmp(&vals[j]));
    let best = order[0];
    LocalSearchResult {
        value: -vals[best],
        angles: pts[best],
        iterations,
        converged,
    }
}

/// Starting angles for restart `k`: the fixed z/x-plane schemes first, then
/// uniform draws from substream `k` of `cfg.seed`.
pub fn restart_start(cfg: &OptimizerConfig, k: usize) -> [f64; DIM] {
    if let Some(s) = FIXED_STARTS.get(k) {
        return *s;
    }
    let mut rng = rng_substream(cfg.seed, k as u64);
    core::array::from_fn(|i| {
        if i % 2 == 0 {
            rng.uniform(0.0, PI)
        } else {
            rng.uniform(0.0, TAU)
        }
    })
}

/// `|Tr(ρ·𝔹)|` at the scheme encoded by `angles`.
pub fn chsh_objective(rho: &DensityMatrix, angles: &[f64; DIM]) -> f64 {
    chsh_value(&MeasurementScheme::from_angles(angles), rho).abs()
}

/// One restart of [`maximize_chsh`]. Independent of every other restart.
pub fn run_restart(rho: &DensityMatrix, cfg: &OptimizerConfig, k: usize) -> LocalSearchResult {
    local_search(|p| chsh_objective(rho, p), restart_start(cfg, k), cfg)
}

/// Reduces per-restart results (in restart order) to the overall best;
/// ties go to the lowest restart index.
pub fn select_best<I>(rho: &DensityMatrix, results: I) -> Option<OptResult>
where
    I: IntoIterator<Item = LocalSearchResult>,
{
    let mut best: Option<LocalSearchResult> = None;
    let mut used = 0;
    let mut converged = false;
    for r in results {
        used += 1;
        converged |= r.converged;
        if best.map_or(true, |b| r.value > b.value) {
            best = Some(r);
        }
    }
    let best = best?;
    let scheme = MeasurementScheme::from_angles(&best.angles);
    Some(OptResult {
        best_value: chsh_value(&scheme, rho).abs(),
        scheme,
        restarts_used: used,
        converged,
    })
}

/// Largest `|Tr(ρ·𝔹)|` found over `cfg.restarts` Nelder–Mead runs.
///
/// Deterministic for a fixed config. A result with `converged == false`
/// means every restart ran out of iterations; the best point is still
/// returned.
pub fn maximize_chsh(rho: &DensityMatrix, cfg: &OptimizerConfig) -> Result<OptResult> {
    cfg.validate()?;
    let results = (0..cfg.restarts).map(|k| run_restart(rho, cfg, k));
    Ok(select_best(rho, results).expect("at least one restart"))
}
