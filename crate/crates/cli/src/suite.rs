//! Internal-consistency suites run by `chern-seifert check`.
//!
//! Each suite returns one [`Check`] per property; a check records how many
//! cases it covered and the first counterexample, if any.

use std::time::Instant;

use chern_seifert::dedekind::{dedekind_sum_direct, dedekind_sum_fast, DedekindArgs};
use chern_seifert::hp::Real;
use chern_seifert::invariants::{
    circle_bundle_eta0, framing_twist, k_normalization, m_exponent, seifert_framing_phase,
};
use chern_seifert::partition::{
    self, enumerate_bundle_classes, magnitude_formula, partition_sum, BundleClassPhase,
};
use chern_seifert::rational::{self, Rational};
use chern_seifert::regularization::{
    det_prime, eta_finite, k_power_ledger, scaling_check, Spectrum, ZetaZeroMode,
};
use chern_seifert::seifert::{chern_number, render_seifert};
use chern_seifert::torsion::{homology_report, presentation_matrix, torsion_order_closed};
use chern_seifert::{SeifertData, TorusRank};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Dedekind,
    Torsion,
    Regularization,
    Framing,
    Partition,
    All,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub cases: usize,
    pub failure: Option<String>,
    pub millis: u128,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    pub fn line(&self) -> String {
        match &self.failure {
            None => format!(
                "PASS {} ({} cases, {} ms)",
                self.name, self.cases, self.millis
            ),
            Some(f) => format!("FAIL {} ({} cases): {f}", self.name, self.cases),
        }
    }
}

/// Runs `cases` in parallel, keeping the first failure in input order.
fn run<T, F>(name: &str, cases: Vec<T>, f: F) -> Check
where
    T: Send + Sync,
    F: Fn(&T) -> Result<(), String> + Sync,
{
    let start = Instant::now();
    let failure = cases
        .par_iter()
        .map(&f)
        .filter_map(Result::err)
        .collect::<Vec<_>>()
        .into_iter()
        .next();
    Check {
        name: name.to_string(),
        cases: cases.len(),
        failure,
        millis: start.elapsed().as_millis(),
    }
}

fn rank(n: u32) -> TorusRank {
    TorusRank::new(n).expect("positive rank")
}

fn coprime_pairs(max_alpha: i64) -> Vec<(i64, i64)> {
    (1..=max_alpha)
        .flat_map(|a| {
            (0..a)
                .filter(move |&b| rational::gcd_i64(a, b) == 1)
                .map(move |b| (a, b))
        })
        .collect()
}

pub fn dedekind_suite() -> Vec<Check> {
    let args = |a, b| DedekindArgs::new(a, b).expect("coprime");
    let pairs = coprime_pairs(200);
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let mut sample = Vec::new();
    while sample.len() < 64 {
        let a: i64 = rng.gen_range(1..=1_000_000);
        let b: i64 = rng.gen_range(-1_000_000_000..1_000_000_000);
        if rational::gcd_i64(a, b) == 1 {
            sample.push((a, b));
        }
    }
    vec![
        run(
            "dedekind: fast = direct, all coprime pairs alpha <= 200",
            pairs.clone(),
            |&(a, b)| {
                let (f, d) = (
                    dedekind_sum_fast(args(a, b)),
                    dedekind_sum_direct(args(a, b)),
                );
                (f == d)
                    .then_some(())
                    .ok_or_else(|| format!("s({a},{b}): fast {f}, direct {d}"))
            },
        ),
        run(
            "dedekind: fast = direct, random alpha <= 10^6",
            sample,
            |&(a, b)| {
                let (f, d) = (
                    dedekind_sum_fast(args(a, b)),
                    dedekind_sum_direct(args(a, b)),
                );
                (f == d)
                    .then_some(())
                    .ok_or_else(|| format!("s({a},{b}): fast {f}, direct {d}"))
            },
        ),
        run(
            "dedekind: periodicity and oddness",
            pairs.clone(),
            |&(a, b)| {
                let s = dedekind_sum_fast(args(a, b));
                let ok = dedekind_sum_fast(args(a, b + a)) == s
                    && dedekind_sum_fast(args(a, -b)) == -s.clone()
                    && dedekind_sum_fast(args(a, a - b)) == -s;
                ok.then_some(()).ok_or_else(|| format!("s({a},{b})"))
            },
        ),
        run(
            "dedekind: denominator divides 12 alpha^2",
            pairs,
            |&(a, b)| {
                let s = dedekind_sum_fast(args(a, b));
                let bound = BigInt::from(12 * a * a);
                (bound % s.denom())
                    .is_zero()
                    .then_some(())
                    .ok_or_else(|| format!("s({a},{b}) = {s}"))
            },
        ),
    ]
}

fn manifold_rank_pairs(catalog: &[SeifertData]) -> Vec<(SeifertData, TorusRank)> {
    catalog
        .iter()
        .flat_map(|d| (1..=3).map(move |n| (d.clone(), rank(n))))
        .collect()
}

/// Per-manifold agreement of the two torsion-order routes.
pub fn torsion_rows(catalog: &[SeifertData]) -> Vec<(String, Result<String, String>)> {
    manifold_rank_pairs(catalog)
        .par_iter()
        .map(|(d, n)| {
            let label = format!("{} N={n}", render_seifert(d));
            let outcome = homology_report(d, *n)
                .map(|r| {
                    format!(
                        "order {} (snf {}), betti {}",
                        r.order_closed, r.order_snf, r.betti
                    )
                })
                .map_err(|e| e.to_string());
            (label, outcome)
        })
        .collect()
}

pub fn torsion_suite(catalog: &[SeifertData]) -> Vec<Check> {
    let pairs = manifold_rank_pairs(catalog);
    vec![
        run(
            "torsion: Smith form order = |c1 prod alpha|^N, betti = 2g",
            pairs.clone(),
            |(d, n)| {
                let r = homology_report(d, *n).map_err(|e| e.to_string())?;
                let ok = r.order_snf == r.order_closed && r.betti == 2 * u64::from(d.genus());
                ok.then_some(()).ok_or_else(|| render_seifert(d))
            },
        ),
        run(
            "torsion: |det presentation| = |c1| prod alpha",
            catalog.to_vec(),
            |d| {
                let det = presentation_matrix(d)
                    .determinant()
                    .map_err(|e| e.to_string())?
                    .abs();
                let expected = (chern_number(d) * Rational::from_integer(d.alpha_product())).abs();
                (Rational::from_integer(det) == expected)
                    .then_some(())
                    .ok_or_else(|| render_seifert(d))
            },
        ),
        run("torsion: K_X^2 |Tors| = 1", pairs, |(d, n)| {
            let k = k_normalization(d, *n).map_err(|e| e.to_string())?;
            let t = torsion_order_closed(d, *n).map_err(|e| e.to_string())?;
            (k.square() * Rational::from_integer(t) == Rational::from(BigInt::from(1)))
                .then_some(())
                .ok_or_else(|| render_seifert(d))
        }),
    ]
}

fn random_spectrum(rng: &mut ChaCha8Rng, allow_negative: bool) -> Spectrum {
    let len = rng.gen_range(0..16);
    let eigenvalues = (0..len)
        .map(|_| {
            let num: i64 = rng.gen_range(1..1000);
            let den: i64 = rng.gen_range(1..100);
            let sign = if allow_negative && rng.gen_bool(0.5) {
                -1
            } else {
                1
            };
            rational::ratio(sign * num, den)
        })
        .collect();
    Spectrum::new(eigenvalues, rng.gen_range(0..6)).expect("nonzero eigenvalues")
}

fn random_scale(rng: &mut ChaCha8Rng) -> Rational {
    rational::ratio(rng.gen_range(1..500), rng.gen_range(1..500))
}

pub fn regularization_suite(catalog: &[SeifertData]) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let scaling: Vec<_> = (0..1000)
        .map(|_| (random_spectrum(&mut rng, false), random_scale(&mut rng)))
        .collect();
    let signed: Vec<_> = (0..500)
        .map(|_| (random_spectrum(&mut rng, true), random_scale(&mut rng)))
        .collect();
    let unions: Vec<_> = (0..500)
        .map(|_| {
            (
                random_spectrum(&mut rng, false),
                random_spectrum(&mut rng, false),
            )
        })
        .collect();
    let ledger: Vec<(u32, u32)> = (0..=10)
        .flat_map(|g| (1..=5).map(move |n| (g, n)))
        .collect();
    let with_genus: Vec<_> = manifold_rank_pairs(catalog);
    vec![
        run(
            "regularization: det'(cL) = c^zeta(0) det'(L)",
            scaling,
            |(s, c)| {
                let check =
                    scaling_check(s, c, ZetaZeroMode::FiniteCount).map_err(|e| e.to_string())?;
                check
                    .holds()
                    .then_some(())
                    .ok_or_else(|| format!("{:?} vs {:?}", check.lhs, check.rhs))
            },
        ),
        run(
            "regularization: sign sum invariant under positive scaling",
            signed,
            |(s, c)| {
                let scaled = s.scaled(c).map_err(|e| e.to_string())?;
                (eta_finite(&scaled) == eta_finite(s))
                    .then_some(())
                    .ok_or_else(|| "sign sum changed".into())
            },
        ),
        run(
            "regularization: det' multiplicative over direct sums",
            unions,
            |(a, b)| {
                let lhs = det_prime(&a.direct_sum(b)).map_err(|e| e.to_string())?;
                let rhs = det_prime(a).map_err(|e| e.to_string())?
                    * det_prime(b).map_err(|e| e.to_string())?;
                (lhs == rhs)
                    .then_some(())
                    .ok_or_else(|| "product mismatch".into())
            },
        ),
        run(
            "regularization: k-power ledger = N(g-1), g <= 10, N <= 5",
            ledger,
            |&(g, n)| {
                let total = k_power_ledger(g, rank(n))
                    .map_err(|e| e.to_string())?
                    .total();
                let d = SeifertData::from_pairs(g, 1, &[]).expect("valid");
                let m = m_exponent(&d, rank(n)).map_err(|e| e.to_string())?;
                let expected = rational::int(i64::from(n) * (i64::from(g) - 1));
                (total == m && m == expected)
                    .then_some(())
                    .ok_or_else(|| format!("g={g}, N={n}: {total} vs {m}"))
            },
        ),
        run(
            "regularization: ledger = m_X across catalog",
            with_genus,
            |(d, n)| {
                let total = k_power_ledger(d.genus(), *n)
                    .map_err(|e| e.to_string())?
                    .total();
                let m = m_exponent(d, *n).map_err(|e| e.to_string())?;
                (total == m).then_some(()).ok_or_else(|| render_seifert(d))
            },
        ),
    ]
}

pub fn framing_suite() -> Vec<Check> {
    let grid: Vec<(u32, i64)> = (1..=4)
        .flat_map(|n| (-12..=12).map(move |d| (n, d)))
        .collect();
    let compose: Vec<(u32, i64, i64)> = (1..=4)
        .flat_map(|n| {
            (-24..=24)
                .step_by(5)
                .flat_map(move |a| (-30..=30).step_by(7).map(move |b| (n, a, b)))
        })
        .collect();
    vec![
        run(
            "framing: Seifert-framing phase of degree-d bundle = twist by 3-d",
            grid,
            |&(n, d)| {
                let r = rank(n);
                let lhs = seifert_framing_phase(r, &circle_bundle_eta0(r, d));
                let rhs = framing_twist(r, 3 - d);
                (lhs == rhs)
                    .then_some(())
                    .ok_or_else(|| format!("N={n}, d={d}: {lhs} vs {rhs}"))
            },
        ),
        run(
            "framing: twists compose additively",
            compose,
            |&(n, a, b)| {
                let r = rank(n);
                (&framing_twist(r, a) * &framing_twist(r, b) == framing_twist(r, a + b))
                    .then_some(())
                    .ok_or_else(|| format!("N={n}, F={a}+{b}"))
            },
        ),
    ]
}

/// `|a - b| <= 10^-40 * scale`.
fn within(a: &Real, b: &Real, scale: &Rational) -> bool {
    let diff = (a - b).abs();
    let tol = Real::from_rational(
        &(rational::pow(&rational::int(10), -40) * scale),
        diff.bits(),
    );
    diff <= tol
}

fn random_phases(
    rng: &mut ChaCha8Rng,
    d: &SeifertData,
    n: TorusRank,
) -> Result<Vec<BundleClassPhase>, String> {
    let report = homology_report(d, n).map_err(|e| e.to_string())?;
    let den: i64 = rng.gen_range(1..40);
    Ok(enumerate_bundle_classes(&report)
        .map_err(|e| e.to_string())?
        .into_iter()
        .map(|c| BundleClassPhase::new(c, rational::ratio(rng.gen_range(0..den), den)))
        .collect())
}

pub fn partition_suite(catalog: &[SeifertData]) -> Vec<Check> {
    let small: Vec<SeifertData> = catalog
        .iter()
        .filter(|d| torsion_order_closed(d, rank(1)).is_ok_and(|t| t <= BigInt::from(400)))
        .cloned()
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let random_cases: Vec<(SeifertData, u64, i64, Vec<BundleClassPhase>)> = (0..200)
        .map(|i| {
            let d = small[i % small.len()].clone();
            let k = rng.gen_range(1..12);
            let framing = rng.gen_range(-30..30);
            let phases = random_phases(&mut rng, &d, rank(1)).expect("catalog manifold");
            (d, k, framing, phases)
        })
        .collect();
    let trivial: Vec<(SeifertData, u64)> = small
        .iter()
        .flat_map(|d| [1u64, 2, 5].map(|k| (d.clone(), k)))
        .collect();
    vec![
        run(
            "partition: trivial phases give k^m_X sqrt|Tors|",
            trivial,
            |(d, k)| {
                let report = homology_report(d, rank(1)).map_err(|e| e.to_string())?;
                let phases = partition::trivial_phases(&report).map_err(|e| e.to_string())?;
                let r = partition_sum(d, rank(1), *k, &phases, 0, 50).map_err(|e| e.to_string())?;
                let expected = partition::trivial_phase_magnitude(d, rank(1), *k)
                    .map_err(|e| e.to_string())?;
                let exact = Real::from_rational(expected.radicand(), r.magnitude.bits()).sqrt();
                within(&r.magnitude, &exact, &Rational::from(BigInt::from(1)))
                    .then_some(())
                    .ok_or_else(|| render_seifert(d))
            },
        ),
        run(
            "partition: sum and closed-form magnitude agree, random phases",
            random_cases,
            |(d, k, f, phases)| {
                let r = partition_sum(d, rank(1), *k, phases, *f, 50).map_err(|e| e.to_string())?;
                let m = magnitude_formula(d, rank(1), *k, phases, 50).map_err(|e| e.to_string())?;
                let base =
                    partition_sum(d, rank(1), *k, phases, 0, 50).map_err(|e| e.to_string())?;
                if !within(&r.magnitude, &m, &Rational::from(BigInt::from(1))) {
                    return Err(format!(
                        "{} k={k}: {} vs {}",
                        render_seifert(d),
                        r.magnitude.to_decimal(50),
                        m.to_decimal(50)
                    ));
                }
                if !within(
                    &r.magnitude,
                    &base.magnitude,
                    &Rational::from(BigInt::from(1)),
                ) {
                    return Err(format!("{} framing {f} changed |Z|", render_seifert(d)));
                }
                let shift = &base.common_phase * &framing_twist(rank(1), *f);
                (r.common_phase == shift)
                    .then_some(())
                    .ok_or_else(|| format!("{} framing {f} phase", render_seifert(d)))
            },
        ),
    ]
}

pub fn run_suite(suite: Suite, catalog: &[SeifertData]) -> Vec<Check> {
    match suite {
        Suite::Dedekind => dedekind_suite(),
        Suite::Torsion => torsion_suite(catalog),
        Suite::Regularization => regularization_suite(catalog),
        Suite::Framing => framing_suite(),
        Suite::Partition => partition_suite(catalog),
        Suite::All => {
            let mut all = dedekind_suite();
            all.extend(torsion_suite(catalog));
            all.extend(regularization_suite(catalog));
            all.extend(framing_suite());
            all.extend(partition_suite(catalog));
            all
        }
    }
}
