use super::NumError;

/// Dense real matrix, row-major storage.
#[derive(Clone, PartialEq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl std::fmt::Debug for Mat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{:>12.6} ", self.at(i, j))?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl Mat {
    /// Builds a matrix from row-major entries, rejecting non-finite values
    /// and zero-sized shapes.
    pub fn new(rows: usize, cols: usize, data: Vec<f64>) -> Result<Mat, NumError> {
        if rows == 0 || cols == 0 {
            return Err(NumError::EmptyMatrix);
        }
        if data.len() != rows * cols {
            return Err(NumError::DimensionMismatch(format!(
                "expected {} entries for a {}x{} matrix, got {}",
                rows * cols,
                rows,
                cols,
                data.len()
            )));
        }
        if data.iter().any(|x| !x.is_finite()) {
            return Err(NumError::NonFinite);
        }
        Ok(Mat { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Mat {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        Mat {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Mat {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1.0);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Mat, NumError> {
        if rows.is_empty() || rows[0].is_empty() {
            return Err(NumError::EmptyMatrix);
        }
        let cols = rows[0].len();
        if rows.iter().any(|r| r.len() != cols) {
            return Err(NumError::DimensionMismatch(
                "rows have unequal lengths".into(),
            ));
        }
        let data: Vec<f64> = rows.iter().flatten().copied().collect();
        Mat::new(rows.len(), cols, data)
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

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> f64 {
        debug_assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        debug_assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<f64> {
        (0..self.rows).map(|i| self.at(i, j)).collect()
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.at(i, j));
            }
        }
        t
    }

    pub fn matmul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "matmul dimension mismatch");
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let aik = self.at(i, k);
                if aik == 0.0 {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i * other.cols + j] += aik * other.at(k, j);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[f64]) -> Vec<f64> {
        assert_eq!(self.cols, v.len(), "mul_vec dimension mismatch");
        let mut out = vec![0.0; self.rows];
        for i in 0..self.rows {
            out[i] = self.row(i).iter().zip(v).map(|(a, b)| a * b).sum();
        }
        out
    }

    pub fn add(&self, other: &Mat) -> Mat {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        self.zip_with(other, |a, b| a - b)
    }

    fn zip_with(&self, other: &Mat, f: impl Fn(f64, f64) -> f64) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f(a, b))
            .collect();
        Mat {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, c: f64) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| c * x).collect(),
        }
    }

    pub fn trace(&self) -> f64 {
        assert!(self.is_square());
        (0..self.rows).map(|i| self.at(i, i)).sum()
    }

    pub fn norm_fro(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    /// Maximum absolute column sum.
    pub fn norm_one(&self) -> f64 {
        (0..self.cols)
            .map(|j| (0..self.rows).map(|i| self.at(i, j).abs()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, x| f64::max(m, x.abs()))
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|x| x.is_finite())
    }

    /// Commutator `self * other - other * self`.
    pub fn commutator(&self, other: &Mat) -> Mat {
        self.matmul(other).sub(&other.matmul(self))
    }

    /// Row-major flattening.
    pub fn flatten(&self) -> &[f64] {
        &self.data
    }
}

/// Cholesky factorization of a symmetric positive-definite matrix.
pub struct Cholesky {
    l: Mat,
}

impl Cholesky {
    pub fn new(a: &Mat) -> Result<Cholesky, NumError> {
        assert!(a.is_square(), "Cholesky requires a square matrix");
        let n = a.rows();
        let mut l = Mat::zeros(n, n);
        for j in 0..n {
            let mut d = a.at(j, j);
            for k in 0..j {
                d -= l.at(j, k) * l.at(j, k);
            }
            if d <= 0.0 {
                return Err(NumError::NotPD);
            }
            let ljj = d.sqrt();
            l.set(j, j, ljj);
            for i in j + 1..n {
                let mut s = a.at(i, j);
                for k in 0..j {
                    s -= l.at(i, k) * l.at(j, k);
                }
                l.set(i, j, s / ljj);
            }
        }
        Ok(Cholesky { l })
    }

    pub fn solve(&self, b: &[f64]) -> Vec<f64> {
        let n = self.l.rows();
        assert_eq!(b.len(), n, "solve dimension mismatch");
        // forward: L y = b
        let mut y = vec![0.0; n];
        for i in 0..n {
            let mut s = b[i];
            for k in 0..i {
                s -= self.l.at(i, k) * y[k];
            }
            y[i] = s / self.l.at(i, i);
        }
        // backward: L^T x = y
        let mut x = vec![0.0; n];
        for i in (0..n).rev() {
            let mut s = y[i];
            for k in i + 1..n {
                s -= self.l.at(k, i) * x[k];
            }
            x[i] = s / self.l.at(i, i);
        }
        x
    }
}

/// Solves `A x = b` for symmetric positive-definite `A`.
pub fn solve_spd(a: &Mat, b: &[f64]) -> Result<Vec<f64>, NumError> {
    Ok(Cholesky::new(a)?.solve(b))
}

/// Solves `A X = B` by LU with partial pivoting.
pub fn lu_solve(a: &Mat, b: &Mat) -> Result<Mat, NumError> {
    assert!(a.is_square(), "lu_solve requires a square matrix");
    assert_eq!(a.rows(), b.rows(), "lu_solve dimension mismatch");
    let n = a.rows();
    let mut lu = a.clone();
    let mut x = b.clone();
    let scale = a.max_abs().max(1.0);
    for k in 0..n {
        // partial pivot
        let mut piv = k;
        for i in k + 1..n {
            if lu.at(i, k).abs() > lu.at(piv, k).abs() {
                piv = i;
            }
        }
        if lu.at(piv, k).abs() <= 1e-14 * scale {
            return Err(NumError::Singular);
        }
        if piv != k {
            for j in 0..n {
                let t = lu.at(k, j);
                lu.set(k, j, lu.at(piv, j));
                lu.set(piv, j, t);
            }
            for j in 0..x.cols() {
                let t = x.at(k, j);
                x.set(k, j, x.at(piv, j));
                x.set(piv, j, t);
            }
        }
        let pivot = lu.at(k, k);
        for i in k + 1..n {
            let f = lu.at(i, k) / pivot;
            lu.set(i, k, f);
            for j in k + 1..n {
                lu.set(i, j, lu.at(i, j) - f * lu.at(k, j));
            }
            for j in 0..x.cols() {
                x.set(i, j, x.at(i, j) - f * x.at(k, j));
            }
        }
    }
    // back substitution
    for j in 0..x.cols() {
        for i in (0..n).rev() {
            let mut s = x.at(i, j);
            for k in i + 1..n {
                s -= lu.at(i, k) * x.at(k, j);
            }
            x.set(i, j, s / lu.at(i, i));
        }
    }
    Ok(x)
}

pub fn inverse(a: &Mat) -> Result<Mat, NumError> {
    lu_solve(a, &Mat::identity(a.rows()))
}

pub fn det(a: &Mat) -> f64 {
    assert!(a.is_square());
    let n = a.rows();
    let mut lu = a.clone();
    let mut sign = 1.0;
    for k in 0..n {
        let mut piv = k;
        for i in k + 1..n {
            if lu.at(i, k).abs() > lu.at(piv, k).abs() {
                piv = i;
            }
        }
        if lu.at(piv, k) == 0.0 {
            return 0.0;
        }
        if piv != k {
            sign = -sign;
            for j in 0..n {
                let t = lu.at(k, j);
                lu.set(k, j, lu.at(piv, j));
                lu.set(piv, j, t);
            }
        }
        for i in k + 1..n {
            let f = lu.at(i, k) / lu.at(k, k);
            for j in k + 1..n {
                lu.set(i, j, lu.at(i, j) - f * lu.at(k, j));
            }
        }
    }
    (0..n).map(|i| lu.at(i, i)).product::<f64>() * sign
}

/// Numerical rank by Gaussian elimination with full pivoting.
///
/// A pivot counts while its magnitude exceeds `tol * (1 + ||A||_F)`; the
/// same norm-scaled threshold is used by `nullspace` so that
/// `rank + nullity = cols` holds for both.
pub fn rank(a: &Mat, tol: f64) -> usize {
    let mut w = a.clone();
    let (r, c) = (w.rows(), w.cols());
    let tau = tol * (1.0 + a.norm_fro());
    let mut row_perm: Vec<usize> = (0..r).collect();
    let mut col_perm: Vec<usize> = (0..c).collect();
    let mut rank = 0;
    while rank < r.min(c) {
        // locate the largest remaining entry
        let (mut bi, mut bj, mut best) = (rank, rank, 0.0f64);
        for i in rank..r {
            for j in rank..c {
                let v = w.at(row_perm[i], col_perm[j]).abs();
                if v > best {
                    best = v;
                    bi = i;
                    bj = j;
                }
            }
        }
        if best <= tau {
            break;
        }
        row_perm.swap(rank, bi);
        col_perm.swap(rank, bj);
        let pr = row_perm[rank];
        let pc = col_perm[rank];
        let pivot = w.at(pr, pc);
        for i in rank + 1..r {
            let ri = row_perm[i];
            let f = w.at(ri, pc) / pivot;
            if f == 0.0 {
                continue;
            }
            for j in rank..c {
                let cj = col_perm[j];
                w.set(ri, cj, w.at(ri, cj) - f * w.at(pr, cj));
            }
        }
        rank += 1;
    }
    rank
}

// vector helpers shared across the crate

pub fn vdot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn vnorm(a: &[f64]) -> f64 {
    vdot(a, a).sqrt()
}

pub fn vadd(a: &[f64], b: &[f64]) -> Vec<f64> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vsub(a: &[f64], b: &[f64]) -> Vec<f64> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vscale(a: &[f64], c: f64) -> Vec<f64> {
    a.iter().map(|x| c * x).collect()
}

/// `a + c * b` in place.
pub fn vaxpy(a: &mut [f64], c: f64, b: &[f64]) {
    debug_assert_eq!(a.len(), b.len());
    for (x, y) in a.iter_mut().zip(b) {
        *x += c * y;
    }
}
