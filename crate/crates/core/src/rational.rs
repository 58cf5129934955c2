//! Exact fractions for objective values.
//!
//! The instance magnitude bounds keep every numerator and denominator that
//! the library produces below 2^37, so components fit an `i64` and every
//! cross-multiplication fits an `i128` with room to spare. Comparison never
//! divides: `p1/q1 < p2/q2` iff `p1*q2 < p2*q1` with both products widened
//! to `i128`.

use std::cmp::Ordering;
use std::fmt;

/// A fraction in lowest terms with a strictly positive denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: i64,
    den: i64,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a
}

impl Rational {
    pub const ZERO: Rational = Rational { num: 0, den: 1 };
    pub const ONE: Rational = Rational { num: 1, den: 1 };

    /// Builds `num/den` reduced to lowest terms, sign carried by the numerator.
    ///
    /// Panics if `den == 0` or if normalization would overflow (only possible
    /// for `i64::MIN` inputs, far outside the instance coefficient envelope).
    pub fn new(num: i64, den: i64) -> Rational {
        assert!(den != 0, "rational denominator must not be zero");
        let g = gcd(num.unsigned_abs(), den.unsigned_abs()) as i64;
        let (mut num, mut den) = (num / g, den / g);
        if den < 0 {
            num = num.checked_neg().expect("rational numerator overflow");
            den = den.checked_neg().expect("rational denominator overflow");
        }
        Rational { num, den }
    }

    pub fn from_integer(value: i64) -> Rational {
        Rational { num: value, den: 1 }
    }

    pub fn numer(&self) -> i64 {
        self.num
    }

    pub fn denom(&self) -> i64 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn signum(&self) -> i64 {
        self.num.signum()
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// Sign of `self - other`, computed exactly by cross-multiplication.
    pub fn cmp_sign(&self, other: &Rational) -> i64 {
        let lhs = self.num as i128 * other.den as i128;
        let rhs = other.num as i128 * self.den as i128;
        match lhs.cmp(&rhs) {
            Ordering::Less => -1,
            Ordering::Equal => 0,
            Ordering::Greater => 1,
        }
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = self.num as i128 * other.den as i128;
        let rhs = other.num as i128 * self.den as i128;
        lhs.cmp(&rhs)
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn reduces_and_normalizes_sign() {
        assert_eq!(Rational::new(0, 2), Rational::ZERO);
        assert_eq!(Rational::new(7, 12).numer(), 7);
        assert_eq!(Rational::new(10, 16), Rational::new(5, 8));
        assert_eq!(Rational::new(3, -6), Rational::new(-1, 2));
        assert_eq!(Rational::new(-3, -6), Rational::new(1, 2));
        assert!(Rational::new(-4, 8).denom() > 0);
    }

    #[test]
    fn displays_integers_without_denominator() {
        assert_eq!(Rational::new(0, 2).to_string(), "0");
        assert_eq!(Rational::new(5, 8).to_string(), "5/8");
        assert_eq!(Rational::new(-6, 3).to_string(), "-2");
        assert_eq!(Rational::new(-1, 3).to_string(), "-1/3");
    }

    #[test]
    fn ordering_matches_paper_example_values() {
        let values = [
            Rational::new(0, 2),
            Rational::new(1, 6),
            Rational::new(1, 3),
            Rational::new(7, 12),
            Rational::new(5, 8),
        ];
        for w in values.windows(2) {
            assert!(w[0] < w[1]);
        }
    }

    #[test]
    #[should_panic(expected = "denominator must not be zero")]
    fn zero_denominator_panics() {
        let _ = Rational::new(1, 0);
    }

    // Magnitude envelope from the instance bounds: |p|, q <= 2^37.
    const B: i64 = 1 << 37;

    proptest! {
        #[test]
        fn total_order_is_antisymmetric_and_sign_consistent(
            p1 in -B..=B, q1 in 1..=B, p2 in -B..=B, q2 in 1..=B,
        ) {
            let a = Rational::new(p1, q1);
            let b = Rational::new(p2, q2);
            // antisymmetry
            prop_assert_eq!(a.cmp(&b), b.cmp(&a).reverse());
            // consistency with the sign of the cross difference
            let diff = p1 as i128 * q2 as i128 - p2 as i128 * q1 as i128;
            prop_assert_eq!(a.cmp_sign(&b), diff.signum() as i64);
            // equality agrees with comparison
            prop_assert_eq!(a == b, a.cmp(&b).is_eq());
        }

        #[test]
        fn total_order_is_transitive(
            p1 in -B..=B, q1 in 1..=B,
            p2 in -B..=B, q2 in 1..=B,
            p3 in -B..=B, q3 in 1..=B,
        ) {
            let mut v = [
                Rational::new(p1, q1),
                Rational::new(p2, q2),
                Rational::new(p3, q3),
            ];
            v.sort();
            prop_assert!(v[0] <= v[1] && v[1] <= v[2] && v[0] <= v[2]);
        }

        #[test]
        fn float_comparison_never_contradicts_exact_order(
            p1 in -B..=B, q1 in 1..=B, p2 in -B..=B, q2 in 1..=B,
        ) {
            let a = Rational::new(p1, q1);
            let b = Rational::new(p2, q2);
            // f64 rounding is monotone, so floats may tie but never invert.
            let (fa, fb) = (a.to_f64(), b.to_f64());
            if fa < fb {
                prop_assert!(a < b);
            } else if fa > fb {
                prop_assert!(a > b);
            }
        }
    }
}
