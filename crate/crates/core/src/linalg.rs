//! Exact elimination over a [`Scalar`] field plus small integer helpers.

use num_integer::Integer;

use crate::scalar::Scalar;

/// Row echelon data of a matrix.
#[derive(Clone, Debug)]
pub struct Echelon<T> {
    /// Reduced rows (only the first `rank` are meaningful).
    pub rows: Vec<Vec<T>>,
    /// Pivot column of each reduced row.
    pub pivots: Vec<usize>,
    /// Original index of the row that produced each pivot.
    pub pivot_rows: Vec<usize>,
}

impl<T> Echelon<T> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Gauss-Jordan elimination, scanning rows in order. `pivot_rows` lists the
/// first maximal independent subset of the input rows.
pub fn echelon<T: Scalar>(rows: &[Vec<T>]) -> Echelon<T> {
    let mut basis: Vec<Vec<T>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    let mut pivot_rows = Vec::new();
    for (idx, row) in rows.iter().enumerate() {
        let mut r = row.clone();
        for (b, &p) in basis.iter().zip(&pivots) {
            if !r[p].is_zero() {
                let f = r[p].clone();
                for (x, y) in r.iter_mut().zip(b) {
                    *x = x.clone() - f.clone() * y.clone();
                }
            }
        }
        if let Some(p) = r.iter().position(|x| !x.is_zero()) {
            let inv = T::one() / r[p].clone();
            for x in r.iter_mut() {
                *x = x.clone() * inv.clone();
            }
            for b in basis.iter_mut() {
                if !b[p].is_zero() {
                    let f = b[p].clone();
                    for (x, y) in b.iter_mut().zip(&r) {
                        *x = x.clone() - f.clone() * y.clone();
                    }
                }
            }
            basis.push(r);
            pivots.push(p);
            pivot_rows.push(idx);
        }
    }
    Echelon {
        rows: basis,
        pivots,
        pivot_rows,
    }
}

pub fn rank<T: Scalar>(rows: &[Vec<T>]) -> usize {
    echelon(rows).rank()
}

/// Determinant of a square matrix.
pub fn determinant<T: Scalar>(m: &[Vec<T>]) -> T {
    let n = m.len();
    let mut a: Vec<Vec<T>> = m.to_vec();
    let mut det = T::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return T::zero();
        };
        if piv != col {
            a.swap(piv, col);
            det = -det;
        }
        let p = a[col][col].clone();
        det = det * p.clone();
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone() / p.clone();
            for c in col..n {
                let v = a[col][c].clone();
                a[r][c] = a[r][c].clone() - f.clone() * v;
            }
        }
    }
    det
}

/// Solves the square system `m x = b`; `None` when singular.
pub fn solve<T: Scalar>(m: &[Vec<T>], b: &[T]) -> Option<Vec<T>> {
    let n = m.len();
    let mut a: Vec<Vec<T>> = m
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(piv, col);
        let inv = T::one() / a[col][col].clone();
        for c in col..=n {
            a[col][c] = a[col][c].clone() * inv.clone();
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in col..=n {
                    let v = a[col][c].clone();
                    a[r][c] = a[r][c].clone() - f.clone() * v;
                }
            }
        }
    }
    Some(a.into_iter().map(|mut r| r.pop().unwrap()).collect())
}

/// A basis of `{x : rows · x = 0}`.
pub fn nullspace<T: Scalar>(rows: &[Vec<T>], ncols: usize) -> Vec<Vec<T>> {
    let e = echelon(rows);
    let free: Vec<usize> = (0..ncols).filter(|c| !e.pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![T::zero(); ncols];
            v[f] = T::one();
            for (row, &p) in e.rows.iter().zip(&e.pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

pub fn gcd_all(v: &[i64]) -> i64 {
    v.iter().fold(0i64, |g, &x| g.gcd(&x))
}

pub fn is_primitive(v: &[i64]) -> bool {
    gcd_all(v) == 1
}

/// Flips sign so the first nonzero coordinate is positive.
pub fn sign_normalize(v: &[i64]) -> Vec<i64> {
    match v.iter().find(|&&x| x != 0) {
        Some(&x) if x < 0 => v.iter().map(|c| -c).collect(),
        _ => v.to_vec(),
    }
}

pub fn int_dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Integer determinant by fraction-free (Bareiss) elimination.
pub fn int_determinant(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            let Some(s) = (k + 1..n).find(|&r| a[r][k] != 0) else {
                return 0;
            };
            a.swap(k, s);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// Generalised cross product of `n - 1` integer vectors in `Z^n`: the vector
/// of signed maximal minors, orthogonal to every input. Zero iff the inputs
/// are dependent.
pub fn int_cross(vectors: &[&[i64]]) -> Vec<i64> {
    let n = vectors.len() + 1;
    (0..n)
        .map(|col| {
            let minor: Vec<Vec<i64>> = vectors
                .iter()
                .map(|v| {
                    v.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != col)
                        .map(|(_, &x)| x)
                        .collect()
                })
                .collect();
            let d = int_determinant(&minor);
            let d = if col % 2 == 0 { d } else { -d };
            i64::try_from(d).expect("minor overflows i64")
        })
        .collect()
}

pub fn int_rank(rows: &[Vec<i64>]) -> usize {
    let q: Vec<Vec<num_rational::Ratio<i128>>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| num_rational::Ratio::from_integer(x as i128)).collect())
        .collect();
    rank(&q)
}
