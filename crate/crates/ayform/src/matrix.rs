//! Dense matrices and the sparse generator shapes that act on them.

use crate::scalar::Scalar;

/// A dense row-major matrix. Columns index the source basis vector, so
/// `ρ(v_c) = Σ_r M[r][c]·v_r` and words multiply left to right.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, S::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c));
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &S {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: S) {
        self.data[r * self.cols + c] = v;
    }

    pub fn mul(&self, rhs: &Matrix<S>) -> Matrix<S> {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        let mut out = Matrix::<S>::zero(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let add = a.mul(rhs.get(k, c));
                    out.set(r, c, out.get(r, c).add(&add));
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Matrix<S> {
        let mut out = Matrix::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn trace(&self) -> S {
        assert_eq!(self.rows, self.cols);
        let mut t = S::zero();
        for i in 0..self.rows {
            t = t.add(self.get(i, i));
        }
        t
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let want = if r == c { S::one() } else { S::zero() };
                    *self.get(r, c) == want
                })
            })
    }

    /// Max-norm distance, through f64.
    pub fn max_abs_diff(&self, rhs: &Matrix<S>) -> f64 {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        self.data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| (a.to_f64() - b.to_f64()).abs())
            .fold(0.0, f64::max)
    }

    pub fn residual_from_identity(&self) -> f64 {
        self.max_abs_diff(&Matrix::identity(self.rows))
    }

    /// Row-major nested vectors, for serialization.
    pub fn to_rows(&self) -> Vec<Vec<S>> {
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c).clone()).collect())
            .collect()
    }
}

/// A generator matrix in one of the sparse shapes the constructions emit.
#[derive(Debug, Clone, PartialEq)]
pub enum GenMatrix<S> {
    /// At most two nonzero entries per column: the diagonal plus one partner.
    Coupled(CoupledGen<S>),
    /// Block permutation with one inner block per source block (induced
    /// representations).
    Blocks(BlockGen<S>),
}

/// `ρ(v_k) = diag[k]·v_k + b·v_j` for `partner[k] = Some((j, b))`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoupledGen<S> {
    pub diag: Vec<S>,
    pub partner: Vec<Option<(usize, S)>>,
}

/// Source block `a` maps into target block `target[a]` through `mats[a]`.
#[derive(Debug, Clone, PartialEq)]
pub struct BlockGen<S> {
    pub inner_dim: usize,
    pub target: Vec<usize>,
    pub mats: Vec<Matrix<S>>,
}

impl<S: Scalar> GenMatrix<S> {
    pub fn dim(&self) -> usize {
        match self {
            GenMatrix::Coupled(g) => g.diag.len(),
            GenMatrix::Blocks(g) => g.inner_dim * g.target.len(),
        }
    }

    pub fn dense(&self) -> Matrix<S> {
        let n = self.dim();
        let mut m = Matrix::zero(n, n);
        match self {
            GenMatrix::Coupled(g) => {
                for k in 0..n {
                    m.set(k, k, g.diag[k].clone());
                    if let Some((j, b)) = &g.partner[k] {
                        m.set(*j, k, b.clone());
                    }
                }
            }
            GenMatrix::Blocks(g) => {
                let d = g.inner_dim;
                for (a, (b, mat)) in g.target.iter().zip(&g.mats).enumerate() {
                    for r in 0..d {
                        for c in 0..d {
                            m.set(b * d + r, a * d + c, mat.get(r, c).clone());
                        }
                    }
                }
            }
        }
        m
    }

    /// `x · G`, exploiting the sparsity of G.
    pub fn right_mul(&self, x: &Matrix<S>) -> Matrix<S> {
        let n = self.dim();
        assert_eq!(x.cols(), n);
        let rows = x.rows();
        let mut out = Matrix::zero(rows, n);
        match self {
            GenMatrix::Coupled(g) => {
                for c in 0..n {
                    for r in 0..rows {
                        let mut v = x.get(r, c).mul(&g.diag[c]);
                        if let Some((j, b)) = &g.partner[c] {
                            v = v.add(&x.get(r, *j).mul(b));
                        }
                        out.set(r, c, v);
                    }
                }
            }
            GenMatrix::Blocks(g) => {
                let d = g.inner_dim;
                for (a, (bk, mat)) in g.target.iter().zip(&g.mats).enumerate() {
                    for r in 0..rows {
                        for c in 0..d {
                            let mut v = S::zero();
                            for j in 0..d {
                                let coeff = mat.get(j, c);
                                if !coeff.is_zero() {
                                    v = v.add(&x.get(r, bk * d + j).mul(coeff));
                                }
                            }
                            out.set(r, a * d + c, v);
                        }
                    }
                }
            }
        }
        out
    }
}
