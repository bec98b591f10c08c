//! Sylvester matrices, exact resultants and Smith normal forms.
//!
//! The Sylvester matrix of monic `f` (degree k) and `g` (degree l) is the
//! (k+l)-square matrix whose first l rows are shifted copies of the
//! coefficients of `f` (leading coefficient first) and whose last k rows are
//! shifted copies of `g`. Its determinant is the resultant, and the cokernel
//! `Z^{k+l} / <rows>` is isomorphic to `Z[x]/(f, g)`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::json;
use crate::poly::IntPolynomial;

/// Dense row-major integer matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    #[serde(with = "json::bigint_vec")]
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

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.as_ref().len(), cols, "ragged matrix");
            entries.extend(r.as_ref().iter().map(|&v| BigInt::from(v)));
        }
        IntegerMatrix {
            rows: rows.len(),
            cols,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.entries.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.entries.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[dst] -= q * row[src]
    fn sub_row_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        for j in 0..self.cols {
            let delta = q * &self[(src, j)];
            self[(dst, j)] -= delta;
        }
    }

    /// col[dst] -= q * col[src]
    fn sub_col_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        for i in 0..self.rows {
            let delta = q * &self[(i, src)];
            self[(i, dst)] -= delta;
        }
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    ///
    /// Panics on non-square input.
    pub fn determinant(&self) -> BigInt {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut negate = false;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                let Some(i) = (k + 1..n).find(|&i| !a[(i, k)].is_zero()) else {
                    return BigInt::zero();
                };
                a.swap_rows(i, k);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)];
                    // Sylvester's identity guarantees exactness.
                    debug_assert!(num.is_multiple_of(&prev));
                    a[(i, j)] = num / &prev;
                }
                a[(i, k)] = BigInt::zero();
            }
            prev = a[(k, k)].clone();
        }
        let det = a[(n - 1, n - 1)].clone();
        if negate {
            -det
        } else {
            det
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntegerMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntegerMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Display for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Invariant factors `d1 | d2 | ... | dr` of an integer matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmithForm {
    pub rows: usize,
    pub cols: usize,
    pub rank: usize,
    #[serde(with = "json::bigint_vec")]
    pub invariant_factors: Vec<BigInt>,
}

impl SmithForm {
    pub fn product(&self) -> BigInt {
        self.invariant_factors.iter().product()
    }

    /// The nontrivial cyclic factors of the cokernel (torsion part only).
    pub fn nontrivial_factors(&self) -> Vec<BigInt> {
        self.invariant_factors
            .iter()
            .filter(|d| !d.is_one())
            .cloned()
            .collect()
    }
}

/// Sylvester matrix of two monic polynomials.
///
/// When either polynomial is the constant 1 the result is the empty 0x0
/// matrix (determinant 1, trivial cokernel).
pub fn sylvester_matrix(f: &IntPolynomial, g: &IntPolynomial) -> Result<IntegerMatrix> {
    f.require_monic()?;
    g.require_monic()?;
    let k = f.degree().unwrap_or(0);
    let l = g.degree().unwrap_or(0);
    if k == 0 || l == 0 {
        return Ok(IntegerMatrix::zeros(0, 0));
    }
    let n = k + l;
    let mut m = IntegerMatrix::zeros(n, n);
    // Descending coefficients: a_0 = leading.
    let fa: Vec<&BigInt> = f.coefficients().iter().rev().collect();
    let gb: Vec<&BigInt> = g.coefficients().iter().rev().collect();
    for i in 0..l {
        for (j, a) in fa.iter().enumerate() {
            m[(i, i + j)] = (*a).clone();
        }
    }
    for i in 0..k {
        for (j, b) in gb.iter().enumerate() {
            m[(l + i, i + j)] = (*b).clone();
        }
    }
    Ok(m)
}

/// Signed resultant `det(sylvester_matrix(f, g))`.
pub fn resultant(f: &IntPolynomial, g: &IntPolynomial) -> Result<BigInt> {
    Ok(sylvester_matrix(f, g)?.determinant())
}

/// Smith normal form by unimodular row and column operations.
///
/// The pivot is always a smallest nonzero entry of the active block; a
/// remainder left behind by elimination becomes the next pivot, and a pivot
/// that fails to divide the rest of the block absorbs the offending row.
pub fn smith_normal_form(matrix: &IntegerMatrix) -> SmithForm {
    let mut a = matrix.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pi, pj)) = smallest_nonzero(&a, t..rows, t..cols) else {
            break;
        };
        a.swap_rows(t, pi);
        a.swap_cols(t, pj);
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if !a[(i, t)].is_zero() {
                    let q = &a[(i, t)] / &a[(t, t)];
                    a.sub_row_multiple(i, t, &q);
                    clean &= a[(i, t)].is_zero();
                }
            }
            for j in t + 1..cols {
                if !a[(t, j)].is_zero() {
                    let q = &a[(t, j)] / &a[(t, t)];
                    a.sub_col_multiple(j, t, &q);
                    clean &= a[(t, j)].is_zero();
                }
            }
            if !clean {
                // A remainder smaller than the pivot survives in row or column t.
                let (pi, pj) = smallest_in_cross(&a, t);
                a.swap_rows(t, pi);
                a.swap_cols(t, pj);
                continue;
            }
            let offender = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !a[(i, j)].is_multiple_of(&a[(t, t)])));
            match offender {
                Some(i) => {
                    let minus_one = -BigInt::one();
                    a.sub_row_multiple(t, i, &minus_one);
                }
                None => break,
            }
        }
        if a[(t, t)].is_negative() {
            a[(t, t)] = -&a[(t, t)];
        }
        t += 1;
    }
    SmithForm {
        rows,
        cols,
        rank: t,
        invariant_factors: (0..t).map(|i| a[(i, i)].clone()).collect(),
    }
}

fn smallest_nonzero(
    a: &IntegerMatrix,
    rows: std::ops::Range<usize>,
    cols: std::ops::Range<usize>,
) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in rows {
        for j in cols.clone() {
            let v = &a[(i, j)];
            if v.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| v.abs() < a[(bi, bj)].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

/// Smallest nonzero entry among row t and column t (the pivot included).
fn smallest_in_cross(a: &IntegerMatrix, t: usize) -> (usize, usize) {
    let col = (t..a.rows).map(|i| (i, t));
    let row = (t + 1..a.cols).map(|j| (t, j));
    col.chain(row)
        .filter(|&(i, j)| !a[(i, j)].is_zero())
        .min_by(|&x, &y| a[x].abs().cmp(&a[y].abs()))
        .expect("pivot is nonzero")
}

/// `Z[x]/(f, g)` as its nontrivial invariant factors; their product is
/// `|resultant(f, g)|`.
pub fn quotient_group(f: &IntPolynomial, g: &IntPolynomial) -> Result<Vec<BigInt>> {
    let m = sylvester_matrix(f, g)?;
    if m.determinant().is_zero() {
        return Err(Error::ZeroResultant);
    }
    Ok(smith_normal_form(&m).nontrivial_factors())
}
