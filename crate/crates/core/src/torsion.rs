//! Component count of the moduli space of flat torus connections.
//!
//! The torsion order `|Tors H^2(X, Z^N)| = |c1 * prod alpha_j|^N` is computed
//! from the closed form and, independently, from the Smith normal form of a
//! presentation matrix of `H_1(X, Z)`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::invariants::chern_alpha_product;
use crate::seifert::{SeifertData, TorusRank};

/// Dense row-major integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    /// Builds a matrix from rows; every row must have the same length.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::Domain(format!(
                    "row {i} has {} entries, expected {cols}",
                    r.len()
                )));
            }
            entries.extend(r.iter().map(|&x| BigInt::from(x)));
        }
        Ok(IntegerMatrix {
            rows: rows.len(),
            cols,
            entries,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: BigInt) {
        self.entries[r * self.cols + c] = value;
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.entries.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for r in 0..self.rows {
                self.entries.swap(r * self.cols + a, r * self.cols + b);
            }
        }
    }

    /// row[target] -= factor * row[source]
    fn sub_row(&mut self, target: usize, source: usize, factor: &BigInt) {
        for c in 0..self.cols {
            let delta = factor * self.get(source, c);
            self.entries[target * self.cols + c] -= delta;
        }
    }

    /// col[target] -= factor * col[source]
    fn sub_col(&mut self, target: usize, source: usize, factor: &BigInt) {
        for r in 0..self.rows {
            let delta = factor * self.get(r, source);
            self.entries[r * self.cols + target] -= delta;
        }
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<BigInt> {
        if self.rows != self.cols {
            return Err(Error::Domain(format!(
                "determinant of non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a.get(k, k).is_zero() {
                match (k + 1..n).find(|&r| !a.get(r, k).is_zero()) {
                    Some(r) => {
                        a.swap_rows(k, r);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j)) / &prev;
                    a.set(i, j, v);
                }
            }
            prev = a.get(k, k).clone();
        }
        Ok(if n == 0 { sign } else { sign * prev })
    }
}

impl fmt::Display for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for r in 0..self.rows {
            if r > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for c in 0..self.cols {
                if c > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

/// Relation matrix of `H_1(X, Z)` on the generators `(x_1, ..., x_M, h)`:
/// row `j` is `alpha_j x_j + beta_j h`, the last row is `sum_j x_j - n h`.
///
/// The `2g` genus generators appear in no relation after abelianizing, so
/// they contribute free rank only and are left out.
pub fn presentation_matrix(d: &SeifertData) -> IntegerMatrix {
    let m = d.cones().len();
    let mut mat = IntegerMatrix::zeros(m + 1, m + 1);
    for (j, c) in d.cones().iter().enumerate() {
        mat.set(j, j, BigInt::from(c.alpha));
        mat.set(j, m, BigInt::from(c.beta));
        mat.set(m, j, BigInt::one());
    }
    mat.set(m, m, BigInt::from(-d.euler_int()));
    mat
}

/// Smith normal form diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    /// `min(rows, cols)` non-negative entries with `d_i | d_(i+1)`; zeros last.
    pub diagonal: Vec<BigInt>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diagonal.iter().filter(|d| !d.is_zero()).count()
    }

    /// Product of the nonzero diagonal entries.
    pub fn nonzero_product(&self) -> BigInt {
        self.diagonal.iter().filter(|d| !d.is_zero()).product()
    }
}

/// Unimodular row/column elimination, pivoting on the entry of smallest
/// absolute value.
pub fn smith_normal_form(m: &IntegerMatrix) -> SmithForm {
    let mut a = m.clone();
    let size = a.rows.min(a.cols);
    for t in 0..size {
        loop {
            let Some((pr, pc)) = smallest_nonzero(&a, t) else {
                // The remaining block is zero.
                return finish(a, size);
            };
            a.swap_rows(t, pr);
            a.swap_cols(t, pc);

            let mut reduced = true;
            for r in t + 1..a.rows {
                if !a.get(r, t).is_zero() {
                    let q = a.get(r, t).div_floor(a.get(t, t));
                    a.sub_row(r, t, &q);
                    reduced &= a.get(r, t).is_zero();
                }
            }
            for c in t + 1..a.cols {
                if !a.get(t, c).is_zero() {
                    let q = a.get(t, c).div_floor(a.get(t, t));
                    a.sub_col(c, t, &q);
                    reduced &= a.get(t, c).is_zero();
                }
            }
            if !reduced {
                continue;
            }
            // Pivot row and column are clear; enforce divisibility.
            let pivot = a.get(t, t).clone();
            let offender = (t + 1..a.rows)
                .find(|&r| (t + 1..a.cols).any(|c| !a.get(r, c).is_multiple_of(&pivot)));
            match offender {
                Some(r) => {
                    let neg_one = -BigInt::one();
                    a.sub_row(t, r, &neg_one);
                }
                None => break,
            }
        }
    }
    finish(a, size)
}

fn smallest_nonzero(a: &IntegerMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for r in t..a.rows {
        for c in t..a.cols {
            let v = a.get(r, c);
            if v.is_zero() {
                continue;
            }
            if best.is_none_or(|(br, bc)| v.abs() < a.get(br, bc).abs()) {
                best = Some((r, c));
                if v.is_one() || (-v).is_one() {
                    return best;
                }
            }
        }
    }
    best
}

fn finish(a: IntegerMatrix, size: usize) -> SmithForm {
    let diagonal: Vec<BigInt> = (0..size).map(|i| a.get(i, i).abs()).collect();
    // Nonzero pivots come first, already in a divisibility chain.
    debug_assert!(diagonal
        .windows(2)
        .all(|w| w[1].is_zero() || w[1].is_multiple_of(&w[0])));
    SmithForm { diagonal }
}

/// `|c1 * prod alpha_j|^N`.
pub fn torsion_order_closed(d: &SeifertData, rank: TorusRank) -> Result<BigInt> {
    let base = chern_alpha_product(d)?;
    Ok(num_traits::pow(base, rank.get() as usize))
}

/// `H_1(X, Z) = Z^betti + (+)_i Z/d_i` from the Smith form, valid for any `c1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FirstHomology {
    pub betti: u64,
    pub snf: SmithForm,
}

impl FirstHomology {
    /// Nontrivial cyclic torsion factors `d_i > 1`.
    pub fn torsion_factors(&self) -> Vec<BigInt> {
        self.snf
            .diagonal
            .iter()
            .filter(|d| **d > BigInt::one())
            .cloned()
            .collect()
    }
}

pub fn first_homology(d: &SeifertData) -> FirstHomology {
    let snf = smith_normal_form(&presentation_matrix(d));
    let free = (snf.diagonal.len() - snf.rank()) as u64;
    FirstHomology {
        betti: 2 * u64::from(d.genus()) + free,
        snf,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorsionReport {
    pub rank: TorusRank,
    pub betti: u64,
    /// Smith form diagonal of the `H_1` presentation.
    pub snf_diagonal: Vec<BigInt>,
    /// `(prod nonzero d_i)^N`.
    pub order_snf: BigInt,
    /// `|c1 * prod alpha_j|^N`.
    pub order_closed: BigInt,
    /// Cyclic factors of `Tors H^2(X, Z^N)`: the nontrivial `d_i`, the whole
    /// list repeated `N` times.
    pub group_structure: Vec<BigInt>,
}

impl TorsionReport {
    pub fn order(&self) -> &BigInt {
        &self.order_closed
    }

    /// `"Z/4 + Z/4"`, or `"0"` for the trivial group.
    pub fn render_group(&self) -> alloc::string::String {
        if self.group_structure.is_empty() {
            return "0".into();
        }
        let parts: Vec<_> = self
            .group_structure
            .iter()
            .map(|d| format!("Z/{d}"))
            .collect();
        parts.join(" + ")
    }
}

/// Both torsion orders, the Betti number and the cyclic decomposition.
/// Requires `c1 != 0`; fails with [`Error::Inconsistent`] if the Smith-form
/// route and the closed form disagree.
pub fn homology_report(d: &SeifertData, rank: TorusRank) -> Result<TorsionReport> {
    let order_closed = torsion_order_closed(d, rank)?;
    let h1 = first_homology(d);
    let n = rank.get() as usize;
    let order_snf = num_traits::pow(h1.snf.nonzero_product(), n);
    if order_snf != order_closed {
        return Err(Error::Inconsistent(format!(
            "torsion order {order_snf} from Smith form, {order_closed} from closed form for {d}"
        )));
    }
    if h1.betti != 2 * u64::from(d.genus()) {
        return Err(Error::Inconsistent(format!(
            "Betti number {} for {d} with nonzero Chern number",
            h1.betti
        )));
    }
    let factors = h1.torsion_factors();
    let group_structure = factors
        .iter()
        .cycle()
        .take(factors.len() * n)
        .cloned()
        .collect();
    Ok(TorsionReport {
        rank,
        betti: h1.betti,
        snf_diagonal: h1.snf.diagonal,
        order_snf,
        order_closed,
        group_structure,
    })
}
