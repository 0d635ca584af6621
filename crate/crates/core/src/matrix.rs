//! Dense exact matrices over the rationals: RREF, rank, kernel bases.

use num_traits::Zero;

use crate::rat::{normalize_vec, Rat};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

/// Result of a reduction: the RREF matrix, its rank and pivot columns.
#[derive(Debug, Clone)]
pub struct Rref {
    pub matrix: QMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl QMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rat>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must be rows*cols");
        QMatrix { rows, cols, data }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::from_integer(1.into());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|v| v.len()).unwrap_or(0);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        QMatrix { rows: r, cols: c, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> QMatrix {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self[(i, j)].clone());
            }
        }
        QMatrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn mul(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = QMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a * &other[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .map(|(a, b)| a * b)
                    .sum::<Rat>()
            })
            .collect()
    }

    /// Reduced row echelon form by exact Gauss-Jordan elimination.
    /// Pivot choice is the first nonzero entry in column order, which makes
    /// the output deterministic.
    pub fn rref(&self) -> Rref {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0usize;
        for col in 0..a.cols {
            if pivot_row >= a.rows {
                break;
            }
            let src = match (pivot_row..a.rows).find(|&r| !a[(r, col)].is_zero()) {
                Some(r) => r,
                None => continue,
            };
            a.swap_rows(pivot_row, src);
            let inv = a[(pivot_row, col)].recip();
            for j in col..a.cols {
                let v = &a[(pivot_row, j)] * &inv;
                a[(pivot_row, j)] = v;
            }
            for r in 0..a.rows {
                if r == pivot_row || a[(r, col)].is_zero() {
                    continue;
                }
                let factor = a[(r, col)].clone();
                for j in col..a.cols {
                    let sub = &factor * &a[(pivot_row, j)];
                    a[(r, j)] -= sub;
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        Rref {
            matrix: a,
            rank: pivots.len(),
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of { v : self * v = 0 }, normalized to coprime integer entries
    /// with positive first nonzero entry. Length is cols - rank.
    pub fn right_kernel_basis(&self) -> Vec<Vec<Rat>> {
        let red = self.rref();
        let pivot_of_col: Vec<Option<usize>> = {
            let mut m = vec![None; self.cols];
            for (r, &c) in red.pivots.iter().enumerate() {
                m[c] = Some(r);
            }
            m
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut v = vec![Rat::zero(); self.cols];
            v[free] = Rat::from_integer(1.into());
            for (r, &pc) in red.pivots.iter().enumerate() {
                v[pc] = -red.matrix[(r, free)].clone();
            }
            basis.push(normalize_vec(&v));
        }
        basis
    }

    /// Basis of { u : u * self = 0 }; length is rows - rank.
    pub fn left_kernel_basis(&self) -> Vec<Vec<Rat>> {
        self.transpose().right_kernel_basis()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl std::ops::Index<(usize, usize)> for QMatrix {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }
}
