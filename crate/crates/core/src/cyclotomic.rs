//! Exact squared modulus of a sum of roots of unity.
//!
//! For `S = sum_j zeta^(a_j)` with `zeta = exp(2 pi i / L)`, the quantity
//! `|S|^2 = sum_d r_d zeta^d` (with `r` the cyclic autocorrelation of the
//! exponent counts) lies in `Q(zeta)`. Reducing it modulo the cyclotomic
//! polynomial `Phi_L` gives its coordinates in the power basis
//! `1, zeta, ..., zeta^(phi(L)-1)`; it is rational exactly when only the
//! constant coordinate survives.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::rational::Rational;

/// Largest order handled; bigger orders return `None` from
/// [`squared_modulus`].
pub const MAX_ORDER: u64 = 4096;

/// Integer coefficients of `Phi_n`, lowest degree first.
pub fn cyclotomic_polynomial(n: u64) -> Vec<i64> {
    assert!(n >= 1);
    let divisors: Vec<u64> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    let mut known: BTreeMap<u64, Vec<i64>> = BTreeMap::new();
    for &m in &divisors {
        // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d
        let mut poly = vec![0i64; m as usize + 1];
        poly[0] = -1;
        poly[m as usize] = 1;
        for (&d, phi_d) in &known {
            if m % d == 0 {
                poly = exact_divide(&poly, phi_d);
            }
        }
        known.insert(m, poly);
    }
    known.remove(&n).unwrap_or_default()
}

/// Quotient of `num` by the monic `den`; the division must be exact.
fn exact_divide(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = rem.len() - 1 - dd;
    let mut quot = vec![0i64; qd + 1];
    for k in (0..=qd).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        if c != 0 {
            for (i, &dc) in den.iter().enumerate() {
                rem[k + i] -= c * dc;
            }
        }
    }
    debug_assert!(rem.iter().all(|&x| x == 0));
    quot
}

/// `|sum_j exp(2 pi i a_j / order)|^2` when it is rational, else `None`.
/// Also `None` when `order` exceeds [`MAX_ORDER`].
pub fn squared_modulus(exponents: &[u64], order: u64) -> Option<Rational> {
    if order == 0 || order > MAX_ORDER {
        return None;
    }
    let l = order as usize;
    let mut counts = vec![0i128; l];
    for &a in exponents {
        counts[(a % order) as usize] += 1;
    }
    // r_d = sum_a c_a c_(a-d)
    let support: Vec<usize> = (0..l).filter(|&a| counts[a] != 0).collect();
    let mut autocorr = vec![BigInt::zero(); l];
    for &a in &support {
        for &b in &support {
            let d = (a + l - b) % l;
            autocorr[d] += BigInt::from(counts[a] * counts[b]);
        }
    }
    let phi = cyclotomic_polynomial(order);
    let deg = phi.len() - 1;
    // Reduce sum_d r_d x^d modulo the monic Phi_L.
    for k in (deg..l).rev() {
        let c = core::mem::take(&mut autocorr[k]);
        if c.is_zero() {
            continue;
        }
        for (i, &pc) in phi.iter().enumerate().take(deg) {
            if pc != 0 {
                autocorr[k - deg + i] -= &c * pc;
            }
        }
    }
    if autocorr[1..deg].iter().all(Zero::is_zero) {
        Some(Rational::from_integer(autocorr[0].clone()))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(105).len() - 1, 48);
        assert!(cyclotomic_polynomial(105).contains(&-2));
    }

    #[test]
    fn modulus_examples() {
        // All equal: |S| = count.
        assert_eq!(squared_modulus(&[0, 0, 0, 0], 1), Some(int(16)));
        assert_eq!(squared_modulus(&[3, 3, 3], 5), Some(int(9)));
        // Complete set of 4th roots cancels.
        assert_eq!(squared_modulus(&[0, 1, 2, 3], 4), Some(int(0)));
        // 1 + i has |.|^2 = 2.
        assert_eq!(squared_modulus(&[0, 1], 4), Some(int(2)));
        // 1 + zeta_3 = -zeta_3^2, modulus 1.
        assert_eq!(squared_modulus(&[0, 1], 3), Some(int(1)));
        // Quadratic Gauss sum for p = 5: |sum exp(2 pi i j^2/5)|^2 = 5.
        let g: Vec<u64> = (0..5).map(|j| j * j).collect();
        assert_eq!(squared_modulus(&g, 5), Some(int(5)));
        // 1 + zeta_5 is not of rational modulus.
        assert_eq!(squared_modulus(&[0, 1], 5), None);
        assert_eq!(squared_modulus(&[0], MAX_ORDER + 1), None);
    }
}
