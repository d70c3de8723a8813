//! Finite-spectrum model of the zeta/eta regularization identities.
//!
//! Genuine Laplacians have infinite spectra; here a spectrum is a finite
//! multiset of nonzero rationals plus a kernel dimension. That is enough to
//! check the algebra the regularized determinants obey: the scaling law
//! `det'(c L) = c^zeta(0) det'(L)`, sign sums, the zeta-regularized constant
//! product, and the bookkeeping of powers of the level `k`.

use alloc::format;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::invariants::m_exponent_from_betti;
use crate::phase::SqrtRational;
use crate::rational::{self, Rational};
use crate::seifert::TorusRank;

/// Nonzero eigenvalues (with multiplicity) and the kernel dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spectrum {
    nonzero: Vec<Rational>,
    kernel_dim: u64,
}

impl Spectrum {
    pub fn new(nonzero: Vec<Rational>, kernel_dim: u64) -> Result<Self> {
        if nonzero.iter().any(Zero::is_zero) {
            return Err(Error::Domain(
                "zero listed among the nonzero eigenvalues".into(),
            ));
        }
        Ok(Spectrum {
            nonzero,
            kernel_dim,
        })
    }

    pub fn nonzero_eigenvalues(&self) -> &[Rational] {
        &self.nonzero
    }

    pub fn kernel_dim(&self) -> u64 {
        self.kernel_dim
    }

    /// `c * L`; the kernel is unchanged.
    pub fn scaled(&self, c: &Rational) -> Result<Self> {
        if !c.is_positive() {
            return Err(Error::Domain(format!(
                "scale {} must be positive",
                rational::render(c)
            )));
        }
        Ok(Spectrum {
            nonzero: self.nonzero.iter().map(|l| l * c).collect(),
            kernel_dim: self.kernel_dim,
        })
    }

    /// Spectrum of the direct sum `L (+) L'`.
    pub fn direct_sum(&self, other: &Spectrum) -> Spectrum {
        let mut nonzero = self.nonzero.clone();
        nonzero.extend(other.nonzero.iter().cloned());
        Spectrum {
            nonzero,
            kernel_dim: self.kernel_dim + other.kernel_dim,
        }
    }
}

/// `det'(L) = exp(-zeta'(0))`, which for a finite positive spectrum is the
/// product of the nonzero eigenvalues.
pub fn det_prime(s: &Spectrum) -> Result<Rational> {
    if let Some(bad) = s.nonzero.iter().find(|l| !l.is_positive()) {
        return Err(Error::Domain(format!(
            "det' needs a positive spectrum, found eigenvalue {}",
            rational::render(bad)
        )));
    }
    Ok(s.nonzero.iter().fold(Rational::one(), |acc, l| acc * l))
}

/// Which value of `zeta(0)` enters the scaling law.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZetaZeroMode {
    /// `zeta(0) = #nonzero eigenvalues`, the exact value for a finite spectrum.
    FiniteCount,
    /// `zeta(0) = -dim ker`, the heat-kernel value for a Laplacian on a closed
    /// manifold. Reproduces the bookkeeping; not an identity of finite models.
    HeatKernel,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalingCheck {
    /// `det'(c L)`
    pub lhs: Rational,
    /// `c^zeta(0) det'(L)`
    pub rhs: Rational,
    pub zeta0: i64,
}

impl ScalingCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

pub fn zeta_at_zero(s: &Spectrum, mode: ZetaZeroMode) -> i64 {
    match mode {
        ZetaZeroMode::FiniteCount => s.nonzero.len() as i64,
        ZetaZeroMode::HeatKernel => -(s.kernel_dim as i64),
    }
}

/// Both sides of `det'(c L) = c^zeta(0) det'(L)`.
pub fn scaling_check(s: &Spectrum, c: &Rational, mode: ZetaZeroMode) -> Result<ScalingCheck> {
    let lhs = det_prime(&s.scaled(c)?)?;
    let zeta0 = zeta_at_zero(s, mode);
    let rhs = rational::pow(c, zeta0) * det_prime(s)?;
    Ok(ScalingCheck { lhs, rhs, zeta0 })
}

/// `sgn(L) = sum sign(lambda)` over the nonzero spectrum.
pub fn eta_finite(s: &Spectrum) -> i64 {
    s.nonzero
        .iter()
        .map(|l| if l.is_positive() { 1 } else { -1 })
        .sum()
}

/// `prod_{l >= 1} p`, regularized as `exp(ln p * zeta_R(0)) = p^(-1/2)`.
pub fn regularized_constant_product(p: &Rational) -> Result<SqrtRational> {
    Ok(SqrtRational::new(p.clone())?.recip())
}

/// The three contributions to the power of `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KPowerLedger {
    /// `-dim H^0 / 2`, from the isotropy-volume factor.
    pub isotropy: Rational,
    /// `-dim H^0`, from the gauge-fixing ghost normalization.
    pub ghost: Rational,
    /// `(dim H^1 + dim H^0) / 2`, from stationary phase with `det'(kL)`.
    pub stationary_phase: Rational,
}

impl KPowerLedger {
    pub fn total(&self) -> Rational {
        &self.isotropy + &self.ghost + &self.stationary_phase
    }
}

/// Ledger of `k`-exponents with `dim H^0(X, t) = N` and `dim H^1(X, t) = 2gN`.
///
/// Its total equals `m_X = (N/2)(2g - 2)`; a mismatch is reported as
/// [`Error::Inconsistent`].
pub fn k_power_ledger(genus: u32, rank: TorusRank) -> Result<KPowerLedger> {
    let h0 = rank.as_rational();
    let h1 = rational::int(2 * i64::from(genus)) * &h0;
    let half = rational::ratio(1, 2);
    let ledger = KPowerLedger {
        isotropy: -(&h0 * &half),
        ghost: -h0.clone(),
        stationary_phase: (h1 + h0) * half,
    };
    let m = m_exponent_from_betti(2 * u64::from(genus), rank);
    if ledger.total() != m {
        return Err(Error::Inconsistent(format!(
            "k-exponent ledger {} differs from m_X {}",
            rational::render(&ledger.total()),
            rational::render(&m)
        )));
    }
    Ok(ledger)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};
    use alloc::vec;
    use proptest::prelude::*;

    fn spec(v: &[(i64, i64)], ker: u64) -> Spectrum {
        Spectrum::new(v.iter().map(|&(n, d)| ratio(n, d)).collect(), ker).unwrap()
    }

    #[test]
    fn det_prime_examples() {
        assert_eq!(
            det_prime(&spec(&[(1, 1), (2, 1), (3, 1)], 0)).unwrap(),
            int(6)
        );
        assert_eq!(det_prime(&spec(&[(5, 1)], 7)).unwrap(), int(5));
        assert_eq!(det_prime(&spec(&[(1, 2), (2, 1)], 0)).unwrap(), int(1));
        assert_eq!(det_prime(&spec(&[], 3)).unwrap(), int(1));
        assert!(det_prime(&spec(&[(-1, 1)], 0)).is_err());
        assert!(Spectrum::new(vec![int(0)], 0).is_err());
    }

    #[test]
    fn scaling_examples() {
        let c = scaling_check(
            &spec(&[(1, 1), (2, 1), (3, 1)], 0),
            &int(2),
            ZetaZeroMode::FiniteCount,
        )
        .unwrap();
        assert_eq!(
            (c.lhs.clone(), c.rhs.clone(), c.zeta0),
            (int(48), int(48), 3)
        );
        let c =
            scaling_check(&spec(&[(4, 1)], 0), &ratio(1, 2), ZetaZeroMode::FiniteCount).unwrap();
        assert_eq!((c.lhs.clone(), c.rhs.clone()), (int(2), int(2)));
        let c = scaling_check(
            &spec(&[(3, 7), (9, 2)], 4),
            &int(1),
            ZetaZeroMode::HeatKernel,
        )
        .unwrap();
        assert!(c.holds());
        assert_eq!(c.zeta0, -4);
        assert!(scaling_check(&spec(&[(1, 1)], 0), &int(0), ZetaZeroMode::FiniteCount).is_err());
    }

    #[test]
    fn heat_kernel_mode_reports_bookkeeping_value() {
        let c = scaling_check(&spec(&[(2, 1)], 1), &int(3), ZetaZeroMode::HeatKernel).unwrap();
        assert_eq!(c.zeta0, -1);
        assert_eq!(c.lhs, int(6));
        assert_eq!(c.rhs, ratio(2, 3));
        assert!(!c.holds());
    }

    #[test]
    fn eta_examples() {
        assert_eq!(eta_finite(&spec(&[(-2, 1), (1, 1), (3, 1)], 0)), 1);
        assert_eq!(eta_finite(&spec(&[(-2, 1), (2, 1), (5, 3), (-5, 3)], 2)), 0);
        let s = spec(&[(1, 1), (2, 1), (3, 1)], 0);
        assert_eq!(eta_finite(&s.scaled(&ratio(7, 3)).unwrap()), 3);
    }

    #[test]
    fn constant_product_examples() {
        assert_eq!(
            regularized_constant_product(&int(4)).unwrap().to_rational(),
            Some(ratio(1, 2))
        );
        assert_eq!(
            regularized_constant_product(&int(1)).unwrap().to_rational(),
            Some(int(1))
        );
        assert_eq!(
            regularized_constant_product(&int(9)).unwrap().to_rational(),
            Some(ratio(1, 3))
        );
        assert_eq!(
            regularized_constant_product(&int(2)).unwrap().render(),
            "sqrt(1/2)"
        );
        assert!(regularized_constant_product(&int(0)).is_err());
    }

    #[test]
    fn ledger_examples() {
        let r = |n| TorusRank::new(n).unwrap();
        assert_eq!(k_power_ledger(0, r(1)).unwrap().total(), int(-1));
        assert!(k_power_ledger(1, r(5)).unwrap().total().is_zero());
        assert_eq!(k_power_ledger(2, r(3)).unwrap().total(), int(3));
        let l = k_power_ledger(0, r(2)).unwrap();
        assert_eq!(
            (l.isotropy, l.ghost, l.stationary_phase),
            (int(-1), int(-2), int(1))
        );
    }

    fn arb_spectrum(positive: bool) -> impl Strategy<Value = Spectrum> {
        let eig = (1i64..50, 1i64..20, any::<bool>()).prop_map(move |(n, d, neg)| {
            if neg && !positive {
                ratio(-n, d)
            } else {
                ratio(n, d)
            }
        });
        (proptest::collection::vec(eig, 0..12), 0u64..5)
            .prop_map(|(v, k)| Spectrum::new(v, k).unwrap())
    }

    proptest! {
        #[test]
        fn scaling_law_is_exact(s in arb_spectrum(true), n in 1i64..40, d in 1i64..40) {
            prop_assert!(scaling_check(&s, &ratio(n, d), ZetaZeroMode::FiniteCount).unwrap().holds());
        }

        #[test]
        fn sign_sum_scale_invariant(s in arb_spectrum(false), n in 1i64..40, d in 1i64..40) {
            prop_assert_eq!(eta_finite(&s.scaled(&ratio(n, d)).unwrap()), eta_finite(&s));
        }

        #[test]
        fn det_prime_multiplicative(a in arb_spectrum(true), b in arb_spectrum(true)) {
            prop_assert_eq!(
                det_prime(&a.direct_sum(&b)).unwrap(),
                det_prime(&a).unwrap() * det_prime(&b).unwrap()
            );
        }
    }
}
