//! Exact solvers.
//!
//! Three independent exact methods for the fractional objective — exhaustive
//! enumeration (`solve_oracle`), depth-first branch-and-bound (`solve_bnb`),
//! and the parametric reduction to a sequence of linear subproblems
//! (`solve_dinkelbach`) — plus branch-and-bound for the linear objective
//! (`solve_lspp`). All three fractional solvers return exactly equal optimal
//! values on every admissible instance; the test suites enforce this.
//!
//! Branch-and-bound node order is fixed: branch "include" before "exclude"
//! at the lowest-index free column, so node counts are deterministic and
//! usable in regression tests.

use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::pack::{enumerate_packs, Pack};
use crate::rational::Rational;

/// Result of a fractional solve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveReport {
    pub optimal_value: Rational,
    /// One optimal pack. The oracle returns the canonical one (smallest in
    /// the enumeration order); the search-based solvers return the first
    /// optimum their fixed node order discovers.
    pub witness: Pack,
    /// Every optimal pack, in canonical order (oracle collect-all mode only).
    pub all_optima: Option<Vec<Pack>>,
    pub nodes_explored: u64,
    /// Parametric iterations (Dinkelbach only; 0 for the other solvers).
    pub iterations: u64,
}

/// Result of a linear solve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSolveReport {
    pub optimal_value: i128,
    pub witness: Pack,
    pub nodes_explored: u64,
}

/// Exhaustive exact maximization of the fractional objective.
///
/// Enumerates every feasible pack, so it also proves admissibility: any
/// feasible pack with a non-positive denominator is reported as an error
/// together with the offending pack.
pub fn solve_oracle(inst: &Instance, collect_all: bool) -> Result<SolveReport> {
    let mut best: Option<(Rational, Pack)> = None;
    let mut all: Vec<Pack> = Vec::new();
    let mut nodes = 0u64;
    for pack in enumerate_packs(inst)? {
        nodes += 1;
        let value = inst.objective(&pack)?;
        match &best {
            Some((incumbent, _)) if value < *incumbent => {}
            Some((incumbent, _)) if value == *incumbent => {
                if collect_all {
                    all.push(pack);
                }
            }
            _ => {
                best = Some((value, pack));
                if collect_all {
                    all.clear();
                    all.push(pack);
                }
            }
        }
    }
    let (optimal_value, witness) = best.expect("the empty pack is always feasible");
    Ok(SolveReport {
        optimal_value,
        witness,
        all_optima: collect_all.then_some(all),
        nodes_explored: nodes,
        iterations: 0,
    })
}

struct LinearSearch<'a> {
    inst: &'a Instance,
    weights: &'a [i128],
    best: i128,
    witness: u64,
    nodes: u64,
}

impl LinearSearch<'_> {
    fn dfs(&mut self, bits: u64, start: usize, sum: i128) {
        self.nodes += 1;
        if sum > self.best {
            self.best = sum;
            self.witness = bits;
        }
        // bound: current sum plus every positive weight still addable
        let mut bound = sum;
        for j in start..self.inst.n() {
            if self.weights[j] > 0 && self.inst.conflict_mask(j) & bits == 0 {
                bound += self.weights[j];
            }
        }
        if bound <= self.best {
            return;
        }
        for j in start..self.inst.n() {
            if self.inst.conflict_mask(j) & bits == 0 {
                self.dfs(bits | (1 << j), j + 1, sum + self.weights[j]);
            }
        }
    }
}

/// Exact maximization of a linear objective over feasible packs.
pub fn solve_lspp(inst: &Instance, weights: &[i128]) -> Result<LinearSolveReport> {
    if weights.len() != inst.n() {
        return Err(Error::LengthMismatch {
            expected: inst.n(),
            got: weights.len(),
        });
    }
    if inst.n() > Instance::MAX_COLUMNS {
        return Err(Error::InstanceTooLarge {
            n: inst.n(),
            max: Instance::MAX_COLUMNS,
        });
    }
    let mut search = LinearSearch {
        inst,
        weights,
        best: i128::MIN,
        witness: 0,
        nodes: 0,
    };
    search.dfs(0, 0, 0);
    Ok(LinearSolveReport {
        optimal_value: search.best,
        witness: Pack::from_bits(inst.n(), search.witness),
        nodes_explored: search.nodes,
    })
}

/// Upper bound on the fractional objective over every pack extending `bits`
/// with columns `>= start`; `None` means unbounded (never prune).
///
/// With Nmax the largest reachable numerator and Dmin/Dmax the smallest and
/// largest reachable denominators: if Nmax >= 0 the value is at most
/// Nmax/Dmin (unless Dmin <= 0, where no finite bound is claimed); if
/// Nmax < 0 every value in the subtree is negative and at most Nmax/Dmax.
fn node_bound(inst: &Instance, bits: u64, start: usize) -> Option<Rational> {
    let n0 = inst.numerator_sum(bits);
    let d0 = inst.denominator_sum(bits);
    debug_assert!(d0 > 0);
    let mut n_max = n0;
    let mut d_min = d0;
    let mut d_max = d0;
    for j in start..inst.n() {
        if inst.conflict_mask(j) & bits == 0 {
            n_max += inst.c()[j].max(0);
            d_min += inst.d()[j].min(0);
            d_max += inst.d()[j].max(0);
        }
    }
    if n_max >= 0 {
        if d_min <= 0 {
            None
        } else {
            Some(Rational::new(n_max, d_min))
        }
    } else {
        Some(Rational::new(n_max, d_max))
    }
}

struct FractionalSearch<'a> {
    inst: &'a Instance,
    best: Option<(Rational, u64)>,
    nodes: u64,
}

impl FractionalSearch<'_> {
    fn dfs(&mut self, bits: u64, start: usize) -> Result<()> {
        self.nodes += 1;
        let den = self.inst.denominator_sum(bits);
        if den <= 0 {
            return Err(Error::NonPositiveDenominator {
                pack: Pack::from_bits(self.inst.n(), bits),
                denominator: den,
            });
        }
        let value = Rational::new(self.inst.numerator_sum(bits), den);
        match &self.best {
            Some((incumbent, _)) if value <= *incumbent => {}
            _ => self.best = Some((value, bits)),
        }
        if let Some(bound) = node_bound(self.inst, bits, start) {
            let (incumbent, _) = self.best.as_ref().unwrap();
            if bound <= *incumbent {
                return Ok(());
            }
        }
        for j in start..self.inst.n() {
            if self.inst.conflict_mask(j) & bits == 0 {
                self.dfs(bits | (1 << j), j + 1)?;
            }
        }
        Ok(())
    }
}

/// Depth-first branch-and-bound for the fractional objective.
///
/// Admissibility is checked lazily: the first visited pack whose denominator
/// is non-positive aborts the search and is reported.
pub fn solve_bnb(inst: &Instance) -> Result<SolveReport> {
    if inst.n() > Instance::MAX_COLUMNS {
        return Err(Error::InstanceTooLarge {
            n: inst.n(),
            max: Instance::MAX_COLUMNS,
        });
    }
    let mut search = FractionalSearch {
        inst,
        best: None,
        nodes: 0,
    };
    search.dfs(0, 0)?;
    let (optimal_value, bits) = search.best.unwrap();
    Ok(SolveReport {
        optimal_value,
        witness: Pack::from_bits(inst.n(), bits),
        all_optima: None,
        nodes_explored: search.nodes,
        iterations: 0,
    })
}

/// Parametric exact solver.
///
/// Maintains lambda = p/q as an exact fraction, always the value of some
/// feasible pack (starting from the empty pack at alpha/beta). Each round
/// maximizes the integer objective sum_j (c_j q - p d_j) x_j + (alpha q -
/// p beta) via `solve_lspp`; a zero maximum certifies lambda is optimal,
/// otherwise the maximizing pack strictly raises lambda. Termination is
/// finite because successive lambdas are strictly increasing pack values.
pub fn solve_dinkelbach(inst: &Instance) -> Result<SolveReport> {
    let mut lambda = Rational::new(inst.alpha(), inst.beta());
    let witness;
    let mut iterations = 0u64;
    let mut nodes = 0u64;
    // previous (scaled F, q), for the monotonicity debug check
    let mut previous: Option<(i128, i128)> = None;
    loop {
        iterations += 1;
        let p = lambda.numer() as i128;
        let q = lambda.denom() as i128;
        let weights: Vec<i128> = (0..inst.n())
            .map(|j| inst.c()[j] as i128 * q - p * inst.d()[j] as i128)
            .collect();
        let constant = inst.alpha() as i128 * q - p * inst.beta() as i128;
        let sub = solve_lspp(inst, &weights)?;
        nodes += sub.nodes_explored;
        // f = q * F(lambda) where F(lambda) = max_x [N(x) - lambda * D(x)]
        let f = sub.optimal_value + constant;
        debug_assert!(f >= 0, "parametric value must be attained from below");
        if let Some((prev_f, prev_q)) = previous {
            debug_assert!(f * prev_q <= prev_f * q, "F must not increase in lambda");
        }
        previous = Some((f, q));
        if f == 0 {
            witness = sub.witness;
            break;
        }
        let den = inst.denominator_sum(sub.witness.bits());
        if den <= 0 {
            return Err(Error::NonPositiveDenominator {
                pack: sub.witness,
                denominator: den,
            });
        }
        let next = Rational::new(inst.numerator_sum(sub.witness.bits()), den);
        debug_assert!(next > lambda, "lambda sequence must strictly increase");
        lambda = next;
    }
    // the final subproblem argmax attains lambda exactly
    let den = inst.denominator_sum(witness.bits());
    if den <= 0 {
        return Err(Error::NonPositiveDenominator {
            pack: witness,
            denominator: den,
        });
    }
    debug_assert_eq!(Rational::new(inst.numerator_sum(witness.bits()), den), lambda);
    Ok(SolveReport {
        optimal_value: lambda,
        witness,
        all_optima: None,
        nodes_explored: nodes,
        iterations,
    })
}
