//! Problem instances: a binary incidence matrix plus integer cost data.
//!
//! An instance is the tuple (A, c, d, alpha, beta) of the fractional set
//! packing objective (c·x + alpha)/(d·x + beta) over A x <= 1, x binary.
//! Instances are immutable after construction, and construction enforces
//! the envelope that keeps all downstream arithmetic exact: at most 63
//! columns and coefficient magnitudes at most 2^30, so every numerator,
//! denominator, and cross-multiplication fits signed 128-bit arithmetic.

use crate::error::{Error, Result};
use crate::pack::Pack;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    m: usize,
    n: usize,
    /// Row i of A as a bitmask over columns (bit j = a_ij).
    rows: Vec<u64>,
    /// For each column j, the mask of other columns sharing at least one row.
    conflicts: Vec<u64>,
    c: Vec<i64>,
    d: Vec<i64>,
    alpha: i64,
    beta: i64,
}

impl Instance {
    /// Bitmask representation caps the column count.
    pub const MAX_COLUMNS: usize = 63;
    /// Coefficient magnitude cap keeping cross-products within i128.
    pub const MAX_COEFF: i64 = 1 << 30;

    /// Validates raw instance data and builds an immutable instance.
    ///
    /// `a` holds the m rows of the incidence matrix; `c` and `d` are the
    /// per-column cost and weight vectors; `beta` must be positive.
    pub fn new(a: &[Vec<i64>], c: &[i64], d: &[i64], alpha: i64, beta: i64) -> Result<Instance> {
        let m = a.len();
        let n = c.len();
        if m == 0 {
            return Err(Error::DimensionMismatch {
                what: "matrix rows",
                expected: 1,
                got: 0,
            });
        }
        if n == 0 {
            return Err(Error::DimensionMismatch {
                what: "cost vector",
                expected: 1,
                got: 0,
            });
        }
        if n > Self::MAX_COLUMNS {
            return Err(Error::InstanceTooLarge {
                n,
                max: Self::MAX_COLUMNS,
            });
        }
        if d.len() != n {
            return Err(Error::DimensionMismatch {
                what: "weight vector",
                expected: n,
                got: d.len(),
            });
        }
        for (i, row) in a.iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    what: "matrix row",
                    expected: n,
                    got: row.len(),
                });
            }
            for (j, &v) in row.iter().enumerate() {
                if v != 0 && v != 1 {
                    return Err(Error::NonBinaryMatrix {
                        row: i,
                        col: j,
                        value: v,
                    });
                }
            }
        }
        if beta <= 0 {
            return Err(Error::NonPositiveBeta { beta });
        }
        let check_magnitude = |what: String, value: i64| -> Result<()> {
            if value.abs() > Self::MAX_COEFF {
                Err(Error::MagnitudeOverflow {
                    what,
                    value,
                    limit: Self::MAX_COEFF,
                })
            } else {
                Ok(())
            }
        };
        for (j, &v) in c.iter().enumerate() {
            check_magnitude(format!("c_{}", j + 1), v)?;
        }
        for (j, &v) in d.iter().enumerate() {
            check_magnitude(format!("d_{}", j + 1), v)?;
        }
        check_magnitude("alpha".to_string(), alpha)?;
        check_magnitude("beta".to_string(), beta)?;

        let rows: Vec<u64> = a
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .fold(0u64, |mask, (j, &v)| mask | ((v as u64) << j))
            })
            .collect();
        let mut conflicts = vec![0u64; n];
        for &row in &rows {
            // every pair of columns present in this row conflicts
            for (j, mask) in conflicts.iter_mut().enumerate() {
                if row & (1 << j) != 0 {
                    *mask |= row & !(1 << j);
                }
            }
        }
        Ok(Instance {
            m,
            n,
            rows,
            conflicts,
            c: c.to_vec(),
            d: d.to_vec(),
            alpha,
            beta,
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn c(&self) -> &[i64] {
        &self.c
    }

    pub fn d(&self) -> &[i64] {
        &self.d
    }

    pub fn alpha(&self) -> i64 {
        self.alpha
    }

    pub fn beta(&self) -> i64 {
        self.beta
    }

    /// Row i of A as a bitmask over columns.
    pub fn row_mask(&self, i: usize) -> u64 {
        self.rows[i]
    }

    /// Entry a_ij.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        ((self.rows[i] >> j) & 1) as i64
    }

    /// Mask of columns conflicting with column j (sharing at least one row).
    pub fn conflict_mask(&self, j: usize) -> u64 {
        self.conflicts[j]
    }

    /// Feasibility of an arbitrary incidence vector: every row sum <= 1.
    pub fn is_feasible(&self, x: &[bool]) -> Result<bool> {
        if x.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: x.len(),
            });
        }
        let mask = x
            .iter()
            .enumerate()
            .fold(0u64, |acc, (j, &on)| if on { acc | (1 << j) } else { acc });
        Ok(self.mask_is_feasible(mask))
    }

    /// Same feasibility test on the bitmask representation.
    pub fn mask_is_feasible(&self, mask: u64) -> bool {
        self.rows.iter().all(|&row| (row & mask).count_ones() <= 1)
    }

    /// c·x + alpha for the packed columns. Fits i64 under the envelope.
    pub fn numerator_sum(&self, mask: u64) -> i64 {
        let mut sum = self.alpha;
        for j in 0..self.n {
            if mask & (1 << j) != 0 {
                sum += self.c[j];
            }
        }
        sum
    }

    /// d·x + beta for the packed columns.
    pub fn denominator_sum(&self, mask: u64) -> i64 {
        let mut sum = self.beta;
        for j in 0..self.n {
            if mask & (1 << j) != 0 {
                sum += self.d[j];
            }
        }
        sum
    }

    /// Exact objective value (c·x + alpha)/(d·x + beta) of a feasible pack.
    ///
    /// A non-positive denominator violates the standing admissibility
    /// assumption and is reported as an error, never as a sentinel value.
    pub fn objective(&self, pack: &Pack) -> Result<Rational> {
        if pack.n() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: pack.n(),
            });
        }
        debug_assert!(self.mask_is_feasible(pack.bits()));
        let den = self.denominator_sum(pack.bits());
        if den <= 0 {
            return Err(Error::NonPositiveDenominator {
                pack: *pack,
                denominator: den,
            });
        }
        Ok(Rational::new(self.numerator_sum(pack.bits()), den))
    }

    /// Sum of `weights` over the packed columns (the linear objective).
    pub fn linear_objective(&self, pack: &Pack, weights: &[i128]) -> Result<i128> {
        if weights.len() != self.n || pack.n() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: if weights.len() != self.n {
                    weights.len()
                } else {
                    pack.n()
                },
            });
        }
        debug_assert!(self.mask_is_feasible(pack.bits()));
        Ok((0..self.n)
            .filter(|&j| pack.contains(j))
            .map(|j| weights[j])
            .sum())
    }
}

/// Widens instance coefficients for use as linear-objective weights.
pub fn widen(values: &[i64]) -> Vec<i128> {
    values.iter().map(|&v| v as i128).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::paper_instance;

    #[test]
    fn accepts_the_worked_example() {
        let inst = paper_instance();
        assert_eq!(inst.m(), 2);
        assert_eq!(inst.n(), 3);
        assert_eq!(inst.c(), &[1, 2, 5]);
        assert_eq!(inst.d(), &[4, 4, 6]);
        assert_eq!(inst.alpha(), 0);
        assert_eq!(inst.beta(), 2);
        assert_eq!(inst.row_mask(0), 0b011);
        assert_eq!(inst.row_mask(1), 0b101);
    }

    #[test]
    fn rejects_non_positive_beta() {
        let err = Instance::new(
            &[vec![1, 1, 0], vec![1, 0, 1]],
            &[1, 2, 5],
            &[4, 4, 6],
            0,
            0,
        )
        .unwrap_err();
        assert_eq!(err, Error::NonPositiveBeta { beta: 0 });
    }

    #[test]
    fn rejects_non_binary_matrix() {
        let err = Instance::new(
            &[vec![2, 1, 0], vec![1, 0, 1]],
            &[1, 2, 5],
            &[4, 4, 6],
            0,
            2,
        )
        .unwrap_err();
        assert_eq!(
            err,
            Error::NonBinaryMatrix {
                row: 0,
                col: 0,
                value: 2
            }
        );
    }

    #[test]
    fn rejects_dimension_mismatches() {
        assert!(matches!(
            Instance::new(&[vec![1, 0]], &[1, 2, 3], &[1, 1, 1], 0, 1),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(matches!(
            Instance::new(&[vec![1, 0]], &[1, 2], &[1], 0, 1),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(matches!(
            Instance::new(&[], &[1], &[1], 0, 1),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn rejects_oversized_magnitudes_and_widths() {
        let big = Instance::MAX_COEFF + 1;
        assert!(matches!(
            Instance::new(&[vec![1]], &[big], &[1], 0, 1),
            Err(Error::MagnitudeOverflow { .. })
        ));
        assert!(matches!(
            Instance::new(&[vec![1]], &[1], &[1], -big, 1),
            Err(Error::MagnitudeOverflow { .. })
        ));
        let n = Instance::MAX_COLUMNS + 1;
        assert!(matches!(
            Instance::new(&[vec![0; n]], &vec![1; n], &vec![1; n], 0, 1),
            Err(Error::InstanceTooLarge { .. })
        ));
    }

    #[test]
    fn feasibility_on_worked_example() {
        let inst = paper_instance();
        assert!(inst.is_feasible(&[false, true, true]).unwrap());
        assert!(!inst.is_feasible(&[true, true, false]).unwrap());
        assert!(inst.is_feasible(&[false, false, false]).unwrap());
        assert!(matches!(
            inst.is_feasible(&[true, true]),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn objective_matches_worked_example_values() {
        let inst = paper_instance();
        let val = |members: &[usize]| {
            let zero: Vec<usize> = members.iter().map(|&j| j - 1).collect();
            inst.objective(&Pack::from_members(3, &zero)).unwrap()
        };
        assert_eq!(val(&[3]), Rational::new(5, 8));
        assert_eq!(val(&[]), Rational::ZERO);
        assert_eq!(val(&[2, 3]), Rational::new(7, 12));
        assert_eq!(val(&[1]), Rational::new(1, 6));
        assert_eq!(val(&[2]), Rational::new(1, 3));
    }

    #[test]
    fn objective_reports_non_positive_denominator() {
        let inst = Instance::new(&[vec![1]], &[1], &[-5], 0, 2).unwrap();
        let err = inst.objective(&Pack::from_members(1, &[0])).unwrap_err();
        assert_eq!(
            err,
            Error::NonPositiveDenominator {
                pack: Pack::from_members(1, &[0]),
                denominator: -3
            }
        );
    }

    #[test]
    fn linear_objective_examples() {
        let inst = paper_instance();
        let c = widen(inst.c());
        let d = widen(inst.d());
        let p23 = Pack::from_members(3, &[1, 2]);
        assert_eq!(inst.linear_objective(&p23, &c).unwrap(), 7);
        assert_eq!(inst.linear_objective(&Pack::empty(3), &d).unwrap(), 0);
        let p1 = Pack::from_members(3, &[0]);
        assert_eq!(inst.linear_objective(&p1, &d).unwrap(), 4);
        assert!(matches!(
            inst.linear_objective(&p1, &[1, 2]),
            Err(Error::LengthMismatch { .. })
        ));
    }
}
