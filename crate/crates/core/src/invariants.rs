//! Closed-form invariants: the adiabatic eta invariant, the k-exponent
//! `m_X`, the torsion normalization `K_X`, and framing phases.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::dedekind::{dedekind_sum_fast, DedekindArgs};
use crate::error::{Error, Result};
use crate::phase::{PhaseRatPi, SqrtRational};
use crate::rational::{self, Rational};
use crate::seifert::{chern_number, SeifertData, TorusRank};

/// Adiabatic eta invariant `eta_0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EtaZero {
    value: Rational,
}

impl EtaZero {
    pub fn new(value: Rational) -> Self {
        EtaZero { value }
    }

    pub fn value(&self) -> &Rational {
        &self.value
    }
}

/// `eta_0 = N (c1/6 - 2 sum_j s(alpha_j, beta_j))`.
pub fn eta0(d: &SeifertData, rank: TorusRank) -> EtaZero {
    let dedekind_total = d.cones().iter().fold(Rational::zero(), |acc, &c| {
        acc + dedekind_sum_fast(DedekindArgs::from(c))
    });
    let per_unit = chern_number(d) / rational::int(6) - dedekind_total * rational::int(2);
    EtaZero::new(per_unit * rank.as_rational())
}

/// `eta_0 = -d N / 6` for the unit circle bundle of a degree-`d` line bundle
/// over the sphere, as quoted in the Seifert-framing computation.
///
/// The sign is opposite to [`eta0`] applied to `[0, d;]`; the two inputs use
/// different orientation conventions. Only orientation-independent
/// identities are built on this value.
pub fn circle_bundle_eta0(rank: TorusRank, degree: i64) -> EtaZero {
    EtaZero::new(rational::ratio(-degree, 6) * rank.as_rational())
}

/// `(N/2)(b1 - 2 b0)` with `b0 = 1`, the exponent of `k` in terms of the
/// real first Betti number.
pub fn m_exponent_from_betti(first_betti: u64, rank: TorusRank) -> Rational {
    let b1 = Rational::from_integer(BigInt::from(first_betti));
    rank.as_rational() / rational::int(2) * (b1 - rational::int(2))
}

/// `m_X = N (g - 1)`. Only defined when `c1 != 0`, where `b1 = 2g`.
pub fn m_exponent(d: &SeifertData, rank: TorusRank) -> Result<Rational> {
    if chern_number(d).is_zero() {
        return Err(Error::ZeroChernNumber);
    }
    Ok(m_exponent_from_betti(2 * u64::from(d.genus()), rank))
}

/// `|c1 * prod alpha|`, a positive integer whenever `c1 != 0`.
pub(crate) fn chern_alpha_product(d: &SeifertData) -> Result<BigInt> {
    let c1 = chern_number(d);
    if c1.is_zero() {
        return Err(Error::ZeroChernNumber);
    }
    let cleared = (c1 * Rational::from_integer(d.alpha_product())).abs();
    debug_assert!(cleared.is_integer());
    Ok(cleared.to_integer())
}

/// `K_X = 1 / |c1 * prod alpha|^(N/2)`.
pub fn k_normalization(d: &SeifertData, rank: TorusRank) -> Result<SqrtRational> {
    let base = chern_alpha_product(d)?;
    let order = num_traits::pow(base, rank.get() as usize);
    SqrtRational::new(Rational::from_integer(order).recip())
}

/// `exp(2 pi i N F / 24)`, the change of the partition function when the
/// 2-framing is twisted by `F` units.
pub fn framing_twist(rank: TorusRank, framing: i64) -> PhaseRatPi {
    PhaseRatPi::new(rank.as_rational() * rational::ratio(framing, 12))
}

/// Seifert-framing correction `exp(i (pi N / 4 + pi eta_0 / 2))` for a torus
/// group, where the dual-Coxeter term is absent.
pub fn seifert_framing_phase(rank: TorusRank, eta: &EtaZero) -> PhaseRatPi {
    PhaseRatPi::new(rank.as_rational() / rational::int(4) + eta.value() / rational::int(2))
}
