//! Assembly of the symplectic abelian Chern–Simons partition function
//!
//! `Z(X, k) = sum_[P] k^m_X exp(i k CS(A_P)) exp(-i pi eta_0 / 2) K_X`
//!
//! over the flat bundle classes `[P]` in `Tors H^2(X, Z^N)`, with the moduli
//! volume `int omega_P` normalized to 1. Chern–Simons values are inputs:
//! each class carries `q` with `CS(A_P) = 2 pi q mod 2 pi`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::cyclotomic;
use crate::error::{Error, Result};
use crate::hp::{bits_for_digits, Complex, Real, Trig};
use crate::invariants::{self, EtaZero};
use crate::phase::{PhaseRatPi, SqrtRational};
use crate::rational::{self, Rational};
use crate::seifert::{SeifertData, TorusRank};
use crate::torsion::{homology_report, TorsionReport};

/// Bundle classes are enumerated explicitly; past this count the caller has
/// to reduce the problem first.
pub const MAX_CLASSES: u64 = 1 << 22;

/// Residues indexing an element of `(+)_i Z/d_i`, one per cyclic factor of
/// [`TorsionReport::group_structure`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ClassLabel(pub Vec<u64>);

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, r) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{r}")?;
        }
        f.write_str(")")
    }
}

/// Chern–Simons value of one flat bundle class, `CS = 2 pi q`, `q` in `[0, 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BundleClassPhase {
    class: ClassLabel,
    cs_value: Rational,
}

impl BundleClassPhase {
    pub fn new(class: ClassLabel, cs_value: Rational) -> Self {
        BundleClassPhase {
            class,
            cs_value: rational::rem_euclid(&cs_value, &Rational::one()),
        }
    }

    pub fn class(&self) -> &ClassLabel {
        &self.class
    }

    pub fn cs_value(&self) -> &Rational {
        &self.cs_value
    }
}

fn factor_sizes(report: &TorsionReport) -> Result<Vec<u64>> {
    report
        .group_structure
        .iter()
        .map(|d| {
            d.to_u64()
                .ok_or_else(|| Error::Domain(format!("cyclic factor Z/{d} too large to enumerate")))
        })
        .collect()
}

/// All elements of the torsion group in lexicographic order.
pub fn enumerate_bundle_classes(report: &TorsionReport) -> Result<Vec<ClassLabel>> {
    if report.order_closed > BigInt::from(MAX_CLASSES) {
        return Err(Error::Domain(format!(
            "{} bundle classes exceed the enumeration limit {MAX_CLASSES}",
            report.order_closed
        )));
    }
    let sizes = factor_sizes(report)?;
    let mut labels = Vec::with_capacity(report.order_closed.to_usize().unwrap_or(0));
    let mut current = alloc::vec![0u64; sizes.len()];
    loop {
        labels.push(ClassLabel(current.clone()));
        // Odometer increment, last residue fastest.
        let mut i = sizes.len();
        loop {
            if i == 0 {
                return Ok(labels);
            }
            i -= 1;
            current[i] += 1;
            if current[i] < sizes[i] {
                break;
            }
            current[i] = 0;
        }
    }
}

/// `q = 0` on every class.
pub fn trivial_phases(report: &TorsionReport) -> Result<Vec<BundleClassPhase>> {
    Ok(enumerate_bundle_classes(report)?
        .into_iter()
        .map(|c| BundleClassPhase::new(c, Rational::zero()))
        .collect())
}

/// One summand: the weight `k^m_X K_X` and the phase
/// `exp(2 pi i k q) exp(-i pi eta_0 / 2) exp(2 pi i N F / 24)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentTerm {
    pub magnitude: SqrtRational,
    pub phase: PhaseRatPi,
}

struct Shared {
    report: TorsionReport,
    eta: EtaZero,
    m_exponent: Rational,
    k_power: Rational,
    k_normalization: SqrtRational,
    prefactor: PhaseRatPi,
}

fn shared(d: &SeifertData, rank: TorusRank, level: u64, framing: i64) -> Result<Shared> {
    if level == 0 {
        return Err(Error::ZeroLevel);
    }
    let report = homology_report(d, rank)?;
    let eta = invariants::eta0(d, rank);
    let m_exponent = invariants::m_exponent(d, rank)?;
    let m = m_exponent
        .to_integer()
        .to_i64()
        .ok_or_else(|| Error::Domain("k-exponent out of range".into()))?;
    let k_power = rational::pow(&Rational::from_integer(BigInt::from(level)), m);
    let k_normalization = invariants::k_normalization(d, rank)?;
    let prefactor = &PhaseRatPi::new(-eta.value() / rational::int(2))
        * &invariants::framing_twist(rank, framing);
    Ok(Shared {
        report,
        eta,
        m_exponent,
        k_power,
        k_normalization,
        prefactor,
    })
}

fn cs_phase(level: u64, q: &Rational) -> PhaseRatPi {
    PhaseRatPi::from_turns(&(q * Rational::from_integer(BigInt::from(level))))
}

/// A single bundle-class contribution with its exact weight and phase.
pub fn partition_component(
    d: &SeifertData,
    rank: TorusRank,
    level: u64,
    phase: &BundleClassPhase,
    framing: i64,
) -> Result<ComponentTerm> {
    let s = shared(d, rank, level, framing)?;
    let weight = SqrtRational::from_rational(&s.k_power)? * s.k_normalization;
    Ok(ComponentTerm {
        magnitude: weight,
        phase: &cs_phase(level, &phase.cs_value) * &s.prefactor,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassTerm {
    pub class: ClassLabel,
    pub cs_value: Rational,
    pub phase: PhaseRatPi,
    /// `K_X`, the same for every class.
    pub weight: SqrtRational,
}

/// Exactly known `|Z|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExactMagnitude {
    Zero,
    Sqrt(SqrtRational),
}

impl ExactMagnitude {
    pub fn render(&self) -> String {
        match self {
            ExactMagnitude::Zero => "0".into(),
            ExactMagnitude::Sqrt(s) => s.render(),
        }
    }

    pub fn to_real(&self, bits: u32) -> Real {
        match self {
            ExactMagnitude::Zero => Real::zero(bits),
            ExactMagnitude::Sqrt(s) => Real::from_rational(s.radicand(), bits + 8)
                .sqrt()
                .with_bits(bits),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionResult {
    pub level: u64,
    pub rank: TorusRank,
    pub framing_units: i64,
    pub torsion: TorsionReport,
    pub eta0: EtaZero,
    pub m_exponent: Rational,
    /// `k^m_X`
    pub k_power: Rational,
    pub k_normalization: SqrtRational,
    /// `exp(-i pi eta_0 / 2) exp(2 pi i N F / 24)`, common to all classes.
    pub common_phase: PhaseRatPi,
    /// Sorted by class label.
    pub per_class: Vec<ClassTerm>,
    /// `int omega_P` over each moduli component.
    pub moduli_volume: Rational,
    /// `Z` itself.
    pub value: Complex,
    /// `|Z|` at the working precision.
    pub magnitude: Real,
    /// `|Z|` in closed form when the root-of-unity sum has rational modulus.
    pub magnitude_exact: Option<ExactMagnitude>,
    pub digits: u32,
}

impl PartitionResult {
    /// `|Z|` to the requested number of significant digits.
    pub fn magnitude_decimal(&self) -> String {
        let bits = self.magnitude.bits();
        match &self.magnitude_exact {
            Some(exact) => exact.to_real(bits).to_decimal(self.digits),
            None => self.magnitude.to_decimal(self.digits),
        }
    }
}

fn validate(report: &TorsionReport, phases: &[BundleClassPhase]) -> Result<Vec<BundleClassPhase>> {
    let sizes = factor_sizes(report)?;
    if BigInt::from(phases.len()) != report.order_closed {
        return Err(Error::PhaseMismatch(format!(
            "{} phases supplied for {} bundle classes",
            phases.len(),
            report.order_closed
        )));
    }
    let mut seen = BTreeSet::new();
    for p in phases {
        let label = &p.class.0;
        if label.len() != sizes.len() || label.iter().zip(&sizes).any(|(r, n)| r >= n) {
            return Err(Error::PhaseMismatch(format!(
                "class {} is not an element of {}",
                p.class,
                report.render_group()
            )));
        }
        if !seen.insert(&p.class) {
            return Err(Error::PhaseMismatch(format!(
                "class {} listed twice",
                p.class
            )));
        }
    }
    let mut sorted = phases.to_vec();
    sorted.sort_by(|a, b| a.class.cmp(&b.class));
    Ok(sorted)
}

fn working_bits(digits: u32, terms: usize) -> u32 {
    let log_terms = usize::BITS - terms.leading_zeros();
    bits_for_digits(digits) + 64 + log_terms
}

/// Exact `|sum_j exp(2 pi i k q_j)|^2` when it is rational.
fn exact_sum_modulus_sq(level: u64, phases: &[BundleClassPhase]) -> Option<Rational> {
    let k = Rational::from_integer(BigInt::from(level));
    let turns: Vec<Rational> = phases
        .iter()
        .map(|p| rational::rem_euclid(&(&p.cs_value * &k), &Rational::one()))
        .collect();
    let order = turns
        .iter()
        .fold(BigInt::one(), |acc, t| acc.lcm(t.denom()));
    let order_u64 = order.to_u64().filter(|&o| o <= cyclotomic::MAX_ORDER)?;
    let exponents: Vec<u64> = turns
        .iter()
        .map(|t| {
            (t * Rational::from_integer(order.clone()))
                .to_integer()
                .to_u64()
        })
        .collect::<Option<_>>()?;
    cyclotomic::squared_modulus(&exponents, order_u64)
}

/// Sums the per-class components of `Z`. `phases` must list every bundle
/// class exactly once; `digits` sets the significant digits of the
/// magnitude.
pub fn partition_sum(
    d: &SeifertData,
    rank: TorusRank,
    level: u64,
    phases: &[BundleClassPhase],
    framing: i64,
    digits: u32,
) -> Result<PartitionResult> {
    let s = shared(d, rank, level, framing)?;
    let phases = validate(&s.report, phases)?;
    let bits = working_bits(digits, phases.len());

    let per_class: Vec<ClassTerm> = phases
        .iter()
        .map(|p| ClassTerm {
            class: p.class.clone(),
            cs_value: p.cs_value.clone(),
            phase: &cs_phase(level, &p.cs_value) * &s.prefactor,
            weight: s.k_normalization.clone(),
        })
        .collect();

    let weight_sq = &s.k_power * &s.k_power * s.k_normalization.square();
    let weight = Real::from_rational(&weight_sq, bits + 8)
        .sqrt()
        .with_bits(bits);
    let trig = Trig::new(bits);
    let mut units: BTreeMap<&Rational, Complex> = BTreeMap::new();
    let mut value = Complex::zero(bits);
    for term in &per_class {
        let unit = units
            .entry(term.phase.q())
            .or_insert_with(|| trig.unit_pi(term.phase.q()));
        value = &value + &unit.scale(&weight);
    }
    let magnitude = value.norm();

    let magnitude_exact = exact_sum_modulus_sq(level, &phases).map(|sum_sq| {
        if sum_sq.is_zero() {
            ExactMagnitude::Zero
        } else {
            ExactMagnitude::Sqrt(SqrtRational::new(sum_sq * &weight_sq).expect("positive"))
        }
    });

    Ok(PartitionResult {
        level,
        rank,
        framing_units: framing,
        torsion: s.report,
        eta0: s.eta,
        m_exponent: s.m_exponent,
        k_power: s.k_power,
        k_normalization: s.k_normalization,
        common_phase: s.prefactor,
        per_class,
        moduli_volume: Rational::one(),
        value,
        magnitude,
        magnitude_exact,
        digits,
    })
}

/// `|Z| = k^m_X |sum_[P] exp(i k CS(A_P))| / sqrt|Tors H^2(X, Z^N)|`,
/// evaluated directly without the unit-modulus prefactors.
pub fn magnitude_formula(
    d: &SeifertData,
    rank: TorusRank,
    level: u64,
    phases: &[BundleClassPhase],
    digits: u32,
) -> Result<Real> {
    let s = shared(d, rank, level, 0)?;
    let phases = validate(&s.report, phases)?;
    let bits = working_bits(digits, phases.len());
    let trig = Trig::new(bits);
    let mut sum = Complex::zero(bits);
    for p in &phases {
        sum = &sum + &trig.unit_pi(cs_phase(level, &p.cs_value).q());
    }
    let inv_sqrt_order = Real::from_rational(
        &Rational::from_integer(s.report.order_closed.clone()).recip(),
        bits + 8,
    )
    .sqrt()
    .with_bits(bits);
    let k_power = Real::from_rational(&s.k_power, bits);
    Ok(&(&k_power * &sum.norm()) * &inv_sqrt_order)
}

/// `k^m_X sqrt|Tors|`, the magnitude when every class has the same phase
/// and an upper bound in general.
pub fn trivial_phase_magnitude(
    d: &SeifertData,
    rank: TorusRank,
    level: u64,
) -> Result<SqrtRational> {
    let s = shared(d, rank, level, 0)?;
    let order = Rational::from_integer(s.report.order_closed.clone());
    SqrtRational::new(&s.k_power * &s.k_power * order)
}
