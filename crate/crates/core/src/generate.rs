//! Seeded random instance generation.
//!
//! Generation is a pure function of (config, seed): a fixed ChaCha stream
//! drives matrix entries (each a_ij is 1 with probability `density`, rows
//! outer, columns inner) and then the coefficient draws. With
//! `require_admissible` set, draws violating the standing admissibility
//! assumption (some feasible pack with d·x + beta <= 0) are resampled
//! within a bounded retry budget, so every emitted instance is solvable by
//! all three fractional solvers; without it the instance is only validated.

use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::solvers::solve_lspp;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Sign/shape condition imposed on the coefficient draws.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GenCondition {
    /// Coefficients drawn straight from the configured ranges.
    #[default]
    None,
    /// Strictly positive costs and strictly negative weights (the ranges are
    /// clamped to c_j >= 1 and d_j <= -1); alpha is forced to 0.
    Thm2a,
    /// One cost and one weight drawn once and shared by every column;
    /// alpha is forced to 0.
    Uniform,
}

#[derive(Debug, Clone)]
pub struct GenConfig {
    pub n: usize,
    pub m: usize,
    /// Probability that a_ij = 1.
    pub density: f64,
    /// Inclusive cost range.
    pub c_range: (i64, i64),
    /// Inclusive weight range.
    pub d_range: (i64, i64),
    pub alpha: i64,
    pub beta: i64,
    pub condition: GenCondition,
    /// Resample until every feasible pack has a positive denominator.
    pub require_admissible: bool,
    /// Attempt budget when `require_admissible` is set.
    pub max_retries: u32,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            n: 3,
            m: 2,
            density: 0.3,
            c_range: (-5, 5),
            d_range: (-5, 5),
            alpha: 0,
            beta: 1,
            condition: GenCondition::None,
            require_admissible: true,
            max_retries: 1000,
        }
    }
}

fn validate_range(what: &str, (lo, hi): (i64, i64)) -> Result<()> {
    if lo > hi {
        return Err(Error::ConditionNotSatisfied(format!(
            "{what} range [{lo}, {hi}] is empty"
        )));
    }
    Ok(())
}

/// Smallest denominator d·x + beta over all feasible packs, found exactly
/// by maximizing -d·x. Positive iff the instance is admissible.
pub fn min_denominator(inst: &Instance) -> i64 {
    let negated: Vec<i128> = inst.d().iter().map(|&v| -(v as i128)).collect();
    let report = solve_lspp(inst, &negated).expect("weights match the instance width");
    inst.beta() - report.optimal_value as i64
}

/// Generates one admissible instance; deterministic in (config, seed).
pub fn generate(config: &GenConfig, seed: u64) -> Result<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    generate_with_rng(config, &mut rng)
}

/// Same as [`generate`] but drawing from a caller-provided stream, so a
/// fuzzing loop can keep one stream per seed across retries.
pub fn generate_with_rng<R: Rng>(config: &GenConfig, rng: &mut R) -> Result<Instance> {
    if config.n < 1 || config.n > Instance::MAX_COLUMNS || config.m < 1 {
        return Err(Error::ConditionNotSatisfied(format!(
            "dimensions n={} m={} out of range",
            config.n, config.m
        )));
    }
    if !(0.0..=1.0).contains(&config.density) {
        return Err(Error::ConditionNotSatisfied(format!(
            "density {} outside [0, 1]",
            config.density
        )));
    }
    if config.beta < 1 {
        return Err(Error::NonPositiveBeta { beta: config.beta });
    }
    validate_range("c", config.c_range)?;
    validate_range("d", config.d_range)?;
    let (c_range, d_range, alpha) = match config.condition {
        GenCondition::None => (config.c_range, config.d_range, config.alpha),
        GenCondition::Thm2a => {
            let c = (config.c_range.0.max(1), config.c_range.1);
            let d = (config.d_range.0, config.d_range.1.min(-1));
            if c.0 > c.1 || d.0 > d.1 {
                // the configured ranges leave no admissible draw at all
                return Err(Error::ConditionUnmet { attempts: 0 });
            }
            (c, d, 0)
        }
        GenCondition::Uniform => (config.c_range, config.d_range, 0),
    };

    for _ in 0..config.max_retries.max(1) {
        let a: Vec<Vec<i64>> = (0..config.m)
            .map(|_| {
                (0..config.n)
                    .map(|_| i64::from(rng.random_bool(config.density)))
                    .collect()
            })
            .collect();
        let (c, d) = match config.condition {
            GenCondition::Uniform => {
                let c = rng.random_range(c_range.0..=c_range.1);
                let d = rng.random_range(d_range.0..=d_range.1);
                (vec![c; config.n], vec![d; config.n])
            }
            _ => {
                let c = (0..config.n)
                    .map(|_| rng.random_range(c_range.0..=c_range.1))
                    .collect();
                let d = (0..config.n)
                    .map(|_| rng.random_range(d_range.0..=d_range.1))
                    .collect();
                (c, d)
            }
        };
        let inst = Instance::new(&a, &c, &d, alpha, config.beta)?;
        if !config.require_admissible || min_denominator(&inst) > 0 {
            return Ok(inst);
        }
    }
    Err(Error::ConditionUnmet {
        attempts: config.max_retries.max(1),
    })
}
