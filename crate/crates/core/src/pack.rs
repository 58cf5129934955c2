//! Packs (column selections) and their prime/redundant taxonomy.
//!
//! A pack is a set of columns whose union covers every ground element at
//! most once. Packs are stored as bitmasks over the columns, which is why
//! instances are capped at 63 columns. The canonical order used everywhere
//! (enumeration, tie-breaking, golden output) is ascending bitmask value
//! with column 1 as the least significant bit; the paper-style listing
//! `{}, {1}, {2}, {3}, {2,3}` for a 3-column instance is exactly that order.

use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::rational::Rational;
use std::fmt;

/// A subset of column indices with its incidence bit-vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Pack {
    bits: u64,
    n: usize,
}

impl Pack {
    pub fn empty(n: usize) -> Pack {
        Pack { bits: 0, n }
    }

    /// Pack from a raw bitmask; bit `j` set means column `j` (0-based) is in.
    pub fn from_bits(n: usize, bits: u64) -> Pack {
        debug_assert!(n == 64 || bits < (1u64 << n));
        Pack { bits, n }
    }

    /// Pack from 0-based member indices. Panics on out-of-range indices.
    pub fn from_members(n: usize, members: &[usize]) -> Pack {
        let mut bits = 0u64;
        for &j in members {
            assert!(j < n, "column index {j} out of range for n = {n}");
            bits |= 1 << j;
        }
        Pack { bits, n }
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, j: usize) -> bool {
        j < self.n && self.bits & (1 << j) != 0
    }

    /// The pack extended by column `j`.
    pub fn with(&self, j: usize) -> Pack {
        debug_assert!(j < self.n);
        Pack {
            bits: self.bits | (1 << j),
            n: self.n,
        }
    }

    pub fn is_superset_of(&self, other: &Pack) -> bool {
        self.bits & other.bits == other.bits
    }

    /// 0-based member indices, ascending.
    pub fn members(&self) -> Vec<usize> {
        (0..self.n).filter(|&j| self.bits & (1 << j) != 0).collect()
    }

    /// Incidence string `x_1 x_2 ... x_n`, e.g. `001` for `{3}` when n = 3.
    pub fn bitstring(&self) -> String {
        (0..self.n)
            .map(|j| if self.bits & (1 << j) != 0 { '1' } else { '0' })
            .collect()
    }
}

impl fmt::Display for Pack {
    /// Brace notation with 1-based columns, e.g. `{2,3}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for j in self.members() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{}", j + 1)?;
            first = false;
        }
        write!(f, "}}")
    }
}

/// Prime/redundant classification with the witnessing addable columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PackClass {
    pub kind: PackKind,
    /// Columns `j` not in the pack with `H + {j}` still feasible (0-based,
    /// ascending). Empty exactly when the pack is prime.
    pub redundant_columns: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PackKind {
    Prime,
    Redundant,
}

impl fmt::Display for PackKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PackKind::Prime => write!(f, "prime"),
            PackKind::Redundant => write!(f, "redundant"),
        }
    }
}

/// Column-selection rule used by [`complete_to_prime`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CompletionRule {
    /// Always add the lowest-index addable column. Deterministic default.
    #[default]
    LowestIndex,
    /// Add the addable column maximizing c_j/d_j among those with d_j > 0
    /// (ties by lowest index); falls back to lowest index when no addable
    /// column has positive weight.
    BestRatio,
    /// Uniform choice among addable columns from a seeded stream.
    SeededRandom(u64),
}

fn ensure_same_width(inst: &Instance, pack: &Pack) -> Result<()> {
    if pack.n() != inst.n() {
        return Err(Error::LengthMismatch {
            expected: inst.n(),
            got: pack.n(),
        });
    }
    Ok(())
}

fn ensure_feasible(inst: &Instance, pack: &Pack) -> Result<()> {
    ensure_same_width(inst, pack)?;
    if !inst.mask_is_feasible(pack.bits()) {
        return Err(Error::InfeasiblePack { pack: *pack });
    }
    Ok(())
}

/// Columns addable to `pack` without breaking feasibility (0-based, ascending).
pub fn redundant_columns(inst: &Instance, pack: &Pack) -> Result<Vec<usize>> {
    ensure_feasible(inst, pack)?;
    Ok((0..inst.n())
        .filter(|&j| !pack.contains(j) && inst.conflict_mask(j) & pack.bits() == 0)
        .collect())
}

/// Classifies a feasible pack as prime or redundant, with witnesses.
pub fn classify(inst: &Instance, pack: &Pack) -> Result<PackClass> {
    let redundant = redundant_columns(inst, pack)?;
    let kind = if redundant.is_empty() {
        PackKind::Prime
    } else {
        PackKind::Redundant
    };
    Ok(PackClass {
        kind,
        redundant_columns: redundant,
    })
}

/// Extends a feasible pack by addable columns until it is prime.
pub fn complete_to_prime(inst: &Instance, pack: &Pack, rule: CompletionRule) -> Result<Pack> {
    ensure_feasible(inst, pack)?;
    let mut rng = match rule {
        CompletionRule::SeededRandom(seed) => {
            use rand::SeedableRng;
            Some(rand_chacha::ChaCha8Rng::seed_from_u64(seed))
        }
        _ => None,
    };
    let mut current = *pack;
    loop {
        let candidates = redundant_columns(inst, &current)?;
        if candidates.is_empty() {
            return Ok(current);
        }
        let chosen = match rule {
            CompletionRule::LowestIndex => candidates[0],
            CompletionRule::BestRatio => pick_best_ratio(inst, &candidates),
            CompletionRule::SeededRandom(_) => {
                use rand::Rng;
                let rng = rng.as_mut().unwrap();
                candidates[rng.random_range(0..candidates.len())]
            }
        };
        current = current.with(chosen);
    }
}

fn pick_best_ratio(inst: &Instance, candidates: &[usize]) -> usize {
    let mut best: Option<usize> = None;
    for &j in candidates {
        if inst.d()[j] <= 0 {
            continue;
        }
        best = match best {
            None => Some(j),
            Some(b) => {
                // c_j/d_j > c_b/d_b by cross-multiplication, both d > 0
                let lhs = inst.c()[j] as i128 * inst.d()[b] as i128;
                let rhs = inst.c()[b] as i128 * inst.d()[j] as i128;
                if lhs > rhs {
                    Some(j)
                } else {
                    Some(b)
                }
            }
        };
    }
    best.unwrap_or(candidates[0])
}

/// Streams every feasible pack in canonical (ascending bitmask) order.
///
/// The search never extends an infeasible prefix: a column is only added
/// when it conflicts with none of the already selected columns.
pub fn enumerate_packs(inst: &Instance) -> Result<PackEnumeration<'_>> {
    if inst.n() > Instance::MAX_COLUMNS {
        return Err(Error::InstanceTooLarge {
            n: inst.n(),
            max: Instance::MAX_COLUMNS,
        });
    }
    Ok(PackEnumeration {
        inst,
        // (next column to decide, bits chosen so far); columns are decided
        // from the highest index down so leaves appear in ascending mask order
        stack: vec![(inst.n() as isize - 1, 0u64)],
    })
}

pub struct PackEnumeration<'a> {
    inst: &'a Instance,
    stack: Vec<(isize, u64)>,
}

impl Iterator for PackEnumeration<'_> {
    type Item = Pack;

    fn next(&mut self) -> Option<Pack> {
        while let Some((col, bits)) = self.stack.pop() {
            if col < 0 {
                return Some(Pack::from_bits(self.inst.n(), bits));
            }
            let j = col as usize;
            if self.inst.conflict_mask(j) & bits == 0 {
                self.stack.push((col - 1, bits | (1 << j)));
            }
            self.stack.push((col - 1, bits));
        }
        None
    }
}

/// A feasible pack of maximum cardinality; ties broken by the canonical order.
pub fn max_cardinality_pack(inst: &Instance) -> Result<Pack> {
    let mut best = Pack::empty(inst.n());
    for pack in enumerate_packs(inst)? {
        if pack.len() > best.len() {
            best = pack;
        }
    }
    Ok(best)
}

/// Marginal ratio c_j/d_j used by the best-ratio rule, exposed for tests.
#[allow(dead_code)]
pub(crate) fn ratio(inst: &Instance, j: usize) -> Option<Rational> {
    if inst.d()[j] > 0 {
        Some(Rational::new(inst.c()[j], inst.d()[j]))
    } else {
        None
    }
}
