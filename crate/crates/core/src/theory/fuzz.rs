//! Seeded property fuzzing over random instances.
//!
//! Each seed deterministically yields one admissible instance (dimensions,
//! matrix, coefficients all drawn from one ChaCha stream per seed, with the
//! requested hypothesis enforced by resampling); the selected property is
//! then evaluated exactly. Violations are shrunk by greedy single
//! column/row removal to a local minimum that still violates the property.

use crate::error::{Error, Result};
use crate::generate::{generate_with_rng, GenCondition, GenConfig};
use crate::instance::Instance;
use crate::pack::{classify, Pack, PackKind};
use crate::solvers::{solve_bnb, solve_dinkelbach, solve_oracle};
use crate::theory::check_thm2b_condition;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;

/// Property evaluated on each generated instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FuzzProperty {
    /// Every optimal pack is prime. Fails unconditionally in general — that
    /// is the point of the built-in counterexample.
    AllOptimaPrime,
    /// At least one optimal pack is prime.
    ExistsPrimeOptimum,
    /// Oracle, branch-and-bound, and parametric solver return the same
    /// optimal value, and each witness attains it.
    SolverAgreement,
}

impl fmt::Display for FuzzProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FuzzProperty::AllOptimaPrime => write!(f, "all-optima-prime"),
            FuzzProperty::ExistsPrimeOptimum => write!(f, "exists-prime-optimum"),
            FuzzProperty::SolverAgreement => write!(f, "solver-agreement"),
        }
    }
}

/// Hypothesis imposed on generated instances.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FuzzCondition {
    #[default]
    None,
    /// c > 0 and d < 0 componentwise (alpha pinned to 0).
    Thm2a,
    /// Instances must pass the extension-ratio condition.
    Thm2b,
    /// Uniform costs and weights (alpha pinned to 0).
    Uniform,
}

impl fmt::Display for FuzzCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FuzzCondition::None => write!(f, "none"),
            FuzzCondition::Thm2a => write!(f, "2a"),
            FuzzCondition::Thm2b => write!(f, "2b"),
            FuzzCondition::Uniform => write!(f, "uniform"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct FuzzConfig {
    pub property: FuzzProperty,
    pub condition: FuzzCondition,
    /// Number of seeds to run; seed i uses stream `base_seed + i`.
    pub seeds: u64,
    pub base_seed: u64,
    pub n_range: (usize, usize),
    pub m_range: (usize, usize),
    pub density: f64,
    pub c_range: (i64, i64),
    pub d_range: (i64, i64),
    pub alpha_range: (i64, i64),
    pub beta_range: (i64, i64),
    /// Resampling budget per seed for admissibility and the hypothesis.
    pub retries: u32,
    /// Shrink violating instances before reporting.
    pub minimize: bool,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        FuzzConfig {
            property: FuzzProperty::AllOptimaPrime,
            condition: FuzzCondition::None,
            seeds: 1000,
            base_seed: 0,
            n_range: (2, 8),
            m_range: (1, 5),
            density: 0.5,
            c_range: (0, 6),
            d_range: (0, 6),
            alpha_range: (0, 0),
            beta_range: (1, 6),
            retries: 1000,
            minimize: true,
        }
    }
}

/// One property violation with a shrunk witness instance.
#[derive(Debug, Clone)]
pub struct FuzzViolation {
    pub seed: u64,
    pub instance: Instance,
    pub witness: Option<Pack>,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct FuzzReport {
    pub property: FuzzProperty,
    pub condition: FuzzCondition,
    pub seeds: u64,
    /// Instances actually evaluated.
    pub evaluated: u64,
    /// Seeds abandoned because the hypothesis could not be met in budget.
    pub skipped: u64,
    pub violations: Vec<FuzzViolation>,
}

impl FuzzReport {
    /// Line-oriented log: tallies, then one `violation ...` line per finding
    /// with the instance inlined in the text format after a `---` marker.
    pub fn render_log(&self) -> String {
        use std::fmt::Write as _;
        let mut out = String::new();
        let _ = writeln!(out, "property = {}", self.property);
        let _ = writeln!(out, "condition = {}", self.condition);
        let _ = writeln!(out, "seeds = {}", self.seeds);
        let _ = writeln!(out, "evaluated = {}", self.evaluated);
        let _ = writeln!(out, "skipped = {}", self.skipped);
        let _ = writeln!(out, "violations = {}", self.violations.len());
        for v in &self.violations {
            let witness = v
                .witness
                .map(|p| p.to_string())
                .unwrap_or_else(|| "-".to_string());
            let _ = writeln!(
                out,
                "violation property={} seed={} witness={} detail={}",
                self.property, v.seed, witness, v.detail
            );
            let _ = writeln!(out, "---");
            out.push_str(&crate::format::write_instance(&v.instance));
        }
        out
    }
}

/// Evaluates `property` on one admissible instance. `Ok(None)` means the
/// property holds; `Ok(Some(..))` carries the violation evidence.
pub fn evaluate_property(
    inst: &Instance,
    property: FuzzProperty,
) -> Result<Option<(Option<Pack>, String)>> {
    match property {
        FuzzProperty::AllOptimaPrime | FuzzProperty::ExistsPrimeOptimum => {
            let report = solve_oracle(inst, true)?;
            let optima = report.all_optima.as_ref().unwrap();
            let mut prime_seen = false;
            let mut redundant: Option<Pack> = None;
            for pack in optima {
                match classify(inst, pack)?.kind {
                    PackKind::Prime => prime_seen = true,
                    PackKind::Redundant => {
                        if redundant.is_none() {
                            redundant = Some(*pack);
                        }
                    }
                }
            }
            match property {
                FuzzProperty::AllOptimaPrime => Ok(redundant.map(|pack| {
                    (
                        Some(pack),
                        format!(
                            "redundant pack attains the optimum {}",
                            report.optimal_value
                        ),
                    )
                })),
                _ => {
                    if prime_seen {
                        Ok(None)
                    } else {
                        Ok(Some((
                            Some(report.witness),
                            format!("no prime pack attains the optimum {}", report.optimal_value),
                        )))
                    }
                }
            }
        }
        FuzzProperty::SolverAgreement => {
            let oracle = solve_oracle(inst, false)?;
            let bnb = solve_bnb(inst)?;
            let dink = solve_dinkelbach(inst)?;
            for (name, report) in [("bnb", &bnb), ("dinkelbach", &dink)] {
                if report.optimal_value != oracle.optimal_value {
                    return Ok(Some((
                        Some(report.witness),
                        format!(
                            "{name} returned {} but the oracle returned {}",
                            report.optimal_value, oracle.optimal_value
                        ),
                    )));
                }
                if inst.objective(&report.witness)? != oracle.optimal_value {
                    return Ok(Some((
                        Some(report.witness),
                        format!("{name} witness does not attain the optimum"),
                    )));
                }
            }
            Ok(None)
        }
    }
}

fn violates(inst: &Instance, property: FuzzProperty) -> bool {
    matches!(evaluate_property(inst, property), Ok(Some(_)))
}

/// Copy of `inst` without column `j` (0-based).
pub fn remove_column(inst: &Instance, j: usize) -> Result<Instance> {
    let keep: Vec<usize> = (0..inst.n()).filter(|&k| k != j).collect();
    let a: Vec<Vec<i64>> = (0..inst.m())
        .map(|i| keep.iter().map(|&k| inst.entry(i, k)).collect())
        .collect();
    let c: Vec<i64> = keep.iter().map(|&k| inst.c()[k]).collect();
    let d: Vec<i64> = keep.iter().map(|&k| inst.d()[k]).collect();
    Instance::new(&a, &c, &d, inst.alpha(), inst.beta())
}

/// Copy of `inst` without row `i` (0-based).
pub fn remove_row(inst: &Instance, i: usize) -> Result<Instance> {
    let a: Vec<Vec<i64>> = (0..inst.m())
        .filter(|&r| r != i)
        .map(|r| (0..inst.n()).map(|j| inst.entry(r, j)).collect())
        .collect();
    Instance::new(&a, inst.c(), inst.d(), inst.alpha(), inst.beta())
}

/// Greedy shrinking: repeatedly drop the first single column or row whose
/// removal preserves the violation, until no single removal does.
pub fn minimize_violation(inst: &Instance, property: FuzzProperty) -> Instance {
    let mut current = inst.clone();
    loop {
        let mut reduced = false;
        if current.n() > 1 {
            for j in 0..current.n() {
                if let Ok(candidate) = remove_column(&current, j) {
                    if violates(&candidate, property) {
                        current = candidate;
                        reduced = true;
                        break;
                    }
                }
            }
        }
        if !reduced && current.m() > 1 {
            for i in 0..current.m() {
                if let Ok(candidate) = remove_row(&current, i) {
                    if violates(&candidate, property) {
                        current = candidate;
                        reduced = true;
                        break;
                    }
                }
            }
        }
        if !reduced {
            return current;
        }
    }
}

fn gen_condition_for(condition: FuzzCondition) -> GenCondition {
    match condition {
        FuzzCondition::Thm2a => GenCondition::Thm2a,
        FuzzCondition::Uniform => GenCondition::Uniform,
        _ => GenCondition::None,
    }
}

/// One instance for seed `seed`, satisfying the config's hypothesis, or
/// `None` when the retry budget runs out.
pub fn instance_for_seed(config: &FuzzConfig, seed: u64) -> Option<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.base_seed.wrapping_add(seed));
    let mut budget = config.retries.max(1);
    while budget > 0 {
        let gen = GenConfig {
            n: rng.random_range(config.n_range.0..=config.n_range.1),
            m: rng.random_range(config.m_range.0..=config.m_range.1),
            density: config.density,
            c_range: config.c_range,
            d_range: config.d_range,
            alpha: rng.random_range(config.alpha_range.0..=config.alpha_range.1),
            beta: rng.random_range(config.beta_range.0..=config.beta_range.1),
            condition: gen_condition_for(config.condition),
            require_admissible: true,
            max_retries: 1,
        };
        budget -= 1;
        let inst = match generate_with_rng(&gen, &mut rng) {
            Ok(inst) => inst,
            Err(Error::ConditionUnmet { .. }) => continue,
            Err(e) => unreachable!("fuzz generation config is valid: {e:?}"),
        };
        if config.condition == FuzzCondition::Thm2b {
            match check_thm2b_condition(&inst) {
                Ok(report) if report.holds => return Some(inst),
                _ => continue,
            }
        }
        return Some(inst);
    }
    None
}

/// Runs the configured property over `config.seeds` seeded instances.
pub fn fuzz_properties(config: &FuzzConfig) -> FuzzReport {
    let mut report = FuzzReport {
        property: config.property,
        condition: config.condition,
        seeds: config.seeds,
        evaluated: 0,
        skipped: 0,
        violations: Vec::new(),
    };
    for seed in 0..config.seeds {
        let Some(inst) = instance_for_seed(config, seed) else {
            report.skipped += 1;
            continue;
        };
        report.evaluated += 1;
        let outcome = evaluate_property(&inst, config.property)
            .expect("generated instances are admissible");
        if outcome.is_some() {
            let shrunk = if config.minimize {
                minimize_violation(&inst, config.property)
            } else {
                inst
            };
            // re-derive the witness on the shrunk instance
            let (witness, detail) = evaluate_property(&shrunk, config.property)
                .expect("shrunk instance stays admissible")
                .expect("shrinking preserves the violation");
            report.violations.push(FuzzViolation {
                seed,
                instance: shrunk,
                witness,
                detail,
            });
        }
    }
    report
}
