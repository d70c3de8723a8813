//! Dedekind–Rademacher sums `s(alpha, beta)`.
//!
//! Argument order: the **first** argument is the modulus, so
//! `s(alpha, beta) = (1/4 alpha) sum_j cot(pi j / alpha) cot(pi j beta / alpha)`.
//! In the classical `s(h, k)` notation, where `k` is the modulus, this is
//! `s(k = alpha, h = beta)`, i.e. `s(alpha, beta) = s_classical(beta, alpha)`.
//!
//! Two evaluation paths are provided. [`dedekind_sum_direct`] walks the
//! sawtooth sum in `O(alpha)` steps and serves as the oracle;
//! [`dedekind_sum_fast`] uses reciprocity along the Euclidean algorithm in
//! `O(log alpha)` steps.

use alloc::format;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use crate::seifert::Cone;

/// A modulus `alpha >= 1` and a residue `beta` coprime to it, reduced into
/// `[0, alpha)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DedekindArgs {
    alpha: i64,
    beta: i64,
}

impl DedekindArgs {
    pub fn new(alpha: i64, beta: i64) -> Result<Self> {
        if alpha < 1 {
            return Err(Error::Domain(format!(
                "Dedekind modulus {alpha} must be at least 1"
            )));
        }
        if rational::gcd_i64(alpha, beta) != 1 {
            return Err(Error::Domain(format!("gcd({alpha}, {beta}) != 1")));
        }
        Ok(DedekindArgs {
            alpha,
            beta: beta.rem_euclid(alpha),
        })
    }

    pub fn alpha(&self) -> i64 {
        self.alpha
    }

    /// The reduced residue in `[0, alpha)`.
    pub fn beta(&self) -> i64 {
        self.beta
    }
}

impl From<Cone> for DedekindArgs {
    fn from(c: Cone) -> Self {
        DedekindArgs {
            alpha: c.alpha,
            beta: c.beta.rem_euclid(c.alpha),
        }
    }
}

/// `sum_{j=1}^{alpha-1} ((j/alpha)) ((j beta/alpha))`, where
/// `((x)) = x - floor(x) - 1/2` off the integers and `0` on them.
///
/// For `0 < j < alpha` the first factor is `(2j - alpha)/(2 alpha)`, and since
/// `gcd(alpha, beta) = 1` the second is `(2r - alpha)/(2 alpha)` with
/// `r = j beta mod alpha` nonzero. The whole sum therefore has the integer
/// numerator `sum (2j - alpha)(2r - alpha)` over `4 alpha^2`.
pub fn dedekind_sum_direct(a: DedekindArgs) -> Rational {
    let alpha = i128::from(a.alpha);
    let beta = i128::from(a.beta);
    let mut numer: i128 = 0;
    let mut r: i128 = 0;
    for j in 1..alpha {
        r += beta;
        if r >= alpha {
            r -= alpha;
        }
        numer += (2 * j - alpha) * (2 * r - alpha);
    }
    Rational::new(BigInt::from(numer), BigInt::from(4 * alpha * alpha))
}

/// Same value as [`dedekind_sum_direct`] via the reciprocity law
/// `s(a, b) + s(b, a) = (a^2 + b^2 + 1) / (12ab) - 1/4` for coprime `a, b >= 1`
/// together with periodicity in the second argument.
pub fn dedekind_sum_fast(a: DedekindArgs) -> Rational {
    let quarter = rational::ratio(1, 4);
    let mut acc = rational::int(0);
    let mut negate = false;
    let (mut modulus, mut residue) = (i128::from(a.alpha), i128::from(a.beta));
    // s(1, .) = 0 ends the recursion.
    while modulus > 1 {
        let term = Rational::new(
            BigInt::from(modulus * modulus + residue * residue + 1),
            BigInt::from(12 * modulus * residue),
        ) - &quarter;
        if negate {
            acc -= term;
        } else {
            acc += term;
        }
        negate = !negate;
        (modulus, residue) = (residue, modulus % residue);
    }
    acc
}

#[cfg(test)]
mod tests {
    extern crate std;

    use super::*;
    use num_traits::Zero;
    use proptest::prelude::*;

    fn args(a: i64, b: i64) -> DedekindArgs {
        DedekindArgs::new(a, b).unwrap()
    }

    /// The defining cotangent sum in f64; only used to check the sawtooth
    /// identity at small moduli.
    fn cot_sum_f64(alpha: i64, beta: i64) -> f64 {
        let pi = core::f64::consts::PI;
        let a = alpha as f64;
        let mut total = 0.0;
        for j in 1..alpha {
            let j = j as f64;
            total += 1.0 / (pi * j / a).tan() / (pi * j * beta as f64 / a).tan();
        }
        total / (4.0 * a)
    }

    #[test]
    fn direct_examples() {
        assert!(dedekind_sum_direct(args(1, 5)).is_zero());
        assert!(dedekind_sum_direct(args(1, -3)).is_zero());
        assert!(dedekind_sum_direct(args(2, 1)).is_zero());
        assert_eq!(dedekind_sum_direct(args(3, 1)), rational::ratio(1, 18));
        assert!(dedekind_sum_direct(args(5, 3)).is_zero());
        assert_eq!(dedekind_sum_direct(args(5, 1)), rational::ratio(1, 5));
    }

    #[test]
    fn fast_examples() {
        assert_eq!(dedekind_sum_fast(args(3, 1)), rational::ratio(1, 18));
        assert!(dedekind_sum_fast(args(5, 3)).is_zero());
        assert!(dedekind_sum_fast(args(1, 7)).is_zero());
        assert_eq!(dedekind_sum_fast(args(5, 1)), rational::ratio(1, 5));
    }

    #[test]
    fn sawtooth_matches_cotangent_sum() {
        for alpha in 1..40 {
            for beta in 0..alpha {
                if rational::gcd_i64(alpha, beta) != 1 {
                    continue;
                }
                let exact = dedekind_sum_direct(args(alpha, beta));
                let approx = num_traits::ToPrimitive::to_f64(&exact).unwrap();
                assert!(
                    (approx - cot_sum_f64(alpha, beta)).abs() < 1e-9,
                    "s({alpha},{beta})"
                );
            }
        }
    }

    #[test]
    fn classical_dictionary() {
        // Classical s(1, k) = (k-1)(k-2)/(12k), k the modulus.
        for k in 1..30i64 {
            assert_eq!(
                dedekind_sum_fast(args(k, 1)),
                rational::ratio((k - 1) * (k - 2), 12 * k)
            );
        }
    }

    #[test]
    fn rejects_invalid_args() {
        assert!(DedekindArgs::new(0, 1).is_err());
        assert!(DedekindArgs::new(6, 4).is_err());
        assert_eq!(args(7, -2).beta(), 5);
    }

    fn coprime_pair(max_alpha: i64) -> impl Strategy<Value = (i64, i64)> {
        (1..=max_alpha, -10_000_000i64..10_000_000)
            .prop_filter("coprime", |&(a, b)| rational::gcd_i64(a, b) == 1)
    }

    proptest! {
        #[test]
        fn fast_equals_direct((a, b) in coprime_pair(1_000_000)) {
            prop_assert_eq!(dedekind_sum_fast(args(a, b)), dedekind_sum_direct(args(a, b)));
        }

        #[test]
        fn periodic_and_odd((a, b) in coprime_pair(5_000)) {
            let s = dedekind_sum_fast(args(a, b));
            prop_assert_eq!(dedekind_sum_fast(args(a, b + a)), s.clone());
            prop_assert_eq!(dedekind_sum_fast(args(a, -b)), -s.clone());
            prop_assert_eq!(dedekind_sum_fast(args(a, a - b)), -s);
        }

        #[test]
        fn denominator_divides_twelve_alpha_squared((a, b) in coprime_pair(100_000)) {
            let s = dedekind_sum_fast(args(a, b));
            let bound = BigInt::from(12) * BigInt::from(a) * BigInt::from(a);
            prop_assert!((bound % s.denom()).is_zero());
        }
    }
}
