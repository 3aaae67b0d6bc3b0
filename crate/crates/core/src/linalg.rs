//! Exact Gaussian elimination over the rationals.
//!
//! Only what the rest of the crate needs: reduced row echelon form and a
//! nullspace basis.  Pivots are chosen by smallest numerator+denominator
//! bit length within the column, which keeps intermediate swell manageable
//! for the small dense systems that arise here.

use num_traits::{One, Zero};

use crate::poly::{rat_bits, Rational};

/// Dense rational matrix, row major.
#[derive(Clone, Debug)]
pub struct QMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Rational>,
}

impl QMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        QMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn at(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

/// Basis of the right nullspace `{ x : M x = 0 }`.
///
/// The basis is the standard one read off the reduced row echelon form:
/// one vector per free column, with a 1 in the free position.  The order of
/// the returned vectors follows the column order of the matrix, so the
/// result is deterministic for a given input.
pub fn nullspace(m: &QMatrix) -> Vec<Vec<Rational>> {
    let mut a = m.clone();
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut row = 0;
    for col in 0..a.cols {
        if row == a.rows {
            break;
        }
        // Smallest nonzero entry by bit size.
        let mut best: Option<(usize, u64)> = None;
        for r in row..a.rows {
            let v = a.at(r, col);
            if !v.is_zero() {
                let bits = rat_bits(v);
                if best.is_none_or(|(_, b)| bits < b) {
                    best = Some((r, bits));
                }
            }
        }
        let Some((prow, _)) = best else { continue };
        a.swap_rows(row, prow);
        let inv = a.at(row, col).recip();
        for c in col..a.cols {
            let v = a.at(row, c) * &inv;
            a.set(row, c, v);
        }
        for r in 0..a.rows {
            if r == row || a.at(r, col).is_zero() {
                continue;
            }
            let factor = a.at(r, col).clone();
            for c in col..a.cols {
                let v = a.at(r, c) - &factor * a.at(row, c);
                a.set(r, c, v);
            }
        }
        pivot_cols.push(col);
        row += 1;
    }

    let mut basis = Vec::new();
    let mut pivot_iter = pivot_cols.iter().copied().peekable();
    let free_cols: Vec<usize> = (0..a.cols)
        .filter(|c| {
            if pivot_iter.peek() == Some(c) {
                pivot_iter.next();
                false
            } else {
                true
            }
        })
        .collect();
    for &fc in &free_cols {
        let mut v = vec![Rational::zero(); a.cols];
        v[fc] = Rational::one();
        for (r, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = -a.at(r, fc).clone();
        }
        basis.push(v);
    }
    basis
}

/// `M x` for a vector `x`.
pub fn mat_vec(m: &QMatrix, x: &[Rational]) -> Vec<Rational> {
    assert_eq!(m.cols, x.len());
    (0..m.rows)
        .map(|r| {
            let mut acc = Rational::zero();
            for (c, xc) in x.iter().enumerate() {
                acc += m.at(r, c) * xc;
            }
            acc
        })
        .collect()
}
