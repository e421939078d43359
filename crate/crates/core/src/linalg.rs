//! Exact rational linear algebra: row reduction, kernels, ranks, solving and
//! subspace operations over arbitrary-precision rationals.
//!
//! Everything here is pure and exact; floating point is banned repo-wide.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational scalar, always in lowest terms with a
/// positive denominator (zero is `0/1`).
pub type Rat = BigRational;

/// Integer-valued rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational from numerator and denominator. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"n"` or `"n/d"` into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rat> {
    let err = || Error::InvalidParameter(format!("cannot parse rational {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = num.trim().parse().map_err(|_| err())?;
    let den: BigInt = den.trim().parse().map_err(|_| err())?;
    if den.is_zero() {
        return Err(err());
    }
    Ok(Rat::new(num, den))
}

/// Exact dot product.
pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    assert_eq!(a.len(), b.len(), "dot: length mismatch");
    let mut acc = Rat::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

pub fn vec_is_zero(v: &[Rat]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Dense row-major matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            entries: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        RatMatrix { rows, cols, entries }
    }

    pub fn from_rows(rows_data: Vec<Vec<Rat>>) -> Result<Self> {
        let rows = rows_data.len();
        let cols = rows_data.first().map_or(0, Vec::len);
        if rows_data.iter().any(|r| r.len() != cols) {
            return Err(Error::SizeMismatch("rows of unequal length".into()));
        }
        Ok(RatMatrix {
            rows,
            cols,
            entries: rows_data.into_iter().flatten().collect(),
        })
    }

    /// Test and construction helper for integer-valued matrices.
    pub fn from_int_rows(rows_data: &[&[i64]]) -> Self {
        let rows = rows_data.len();
        let cols = rows_data.first().map_or(0, |r| r.len());
        assert!(rows_data.iter().all(|r| r.len() == cols));
        RatMatrix {
            rows,
            cols,
            entries: rows_data.iter().flat_map(|r| r.iter().map(|&x| rat(x))).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// Row-major flattening, e.g. an n x n matrix as a vector of length n^2.
    pub fn flatten(&self) -> Vec<Rat> {
        self.entries.clone()
    }

    pub fn from_flat(rows: usize, cols: usize, entries: Vec<Rat>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::SizeMismatch(format!(
                "expected {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(RatMatrix { rows, cols, entries })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul(&self, other: &RatMatrix) -> Result<RatMatrix> {
        if self.cols != other.rows {
            return Err(Error::SizeMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = RatMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Result<Vec<Rat>> {
        if v.len() != self.cols {
            return Err(Error::SizeMismatch(format!(
                "{}x{} * vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows).map(|i| dot(self.row(i), v)).collect())
    }

    /// Reduced row echelon form together with its pivot columns.
    ///
    /// Deterministic: the pivot in each column is the first nonzero candidate
    /// row; there is no magnitude pivoting since arithmetic is exact.
    pub fn rref(&self) -> (RatMatrix, Vec<usize>) {
        let mut data: Vec<Vec<Rat>> = (0..self.rows).map(|r| self.row(r).to_vec()).collect();
        let pivots = rref_rows(&mut data);
        let m = RatMatrix::from_rows(data).expect("rows stay rectangular");
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{x : self * x = 0}`, echelonized with leading coordinate 1
    /// and sorted by pivot position.
    pub fn kernel_basis(&self) -> Subspace {
        let (rr, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut vecs = Vec::new();
        for f in 0..self.cols {
            if is_pivot[f] {
                continue;
            }
            let mut v = vec![Rat::zero(); self.cols];
            v[f] = Rat::one();
            for (k, &p) in pivots.iter().enumerate() {
                let a = &rr[(k, f)];
                if !a.is_zero() {
                    v[p] = -a.clone();
                }
            }
            vecs.push(v);
        }
        Subspace::from_vectors(self.cols, vecs).expect("kernel vectors have ambient length")
    }

    /// One exact solution of `self * x = b` if the system is consistent,
    /// with free variables set to 0 for determinism.
    pub fn solve(&self, b: &[Rat]) -> Result<Option<Vec<Rat>>> {
        if b.len() != self.rows {
            return Err(Error::SizeMismatch(format!(
                "solve: rhs length {} for {} rows",
                b.len(),
                self.rows
            )));
        }
        let aug = RatMatrix::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                b[i].clone()
            }
        });
        let (rr, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![Rat::zero(); self.cols];
        for (k, &p) in pivots.iter().enumerate() {
            x[p] = rr[(k, self.cols)].clone();
        }
        Ok(Some(x))
    }
}

impl std::ops::Index<(usize, usize)> for RatMatrix {
    type Output = Rat;
    fn index(&self, (r, c): (usize, usize)) -> &Rat {
        assert!(r < self.rows && c < self.cols, "index out of range");
        &self.entries[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rat {
        assert!(r < self.rows && c < self.cols, "index out of range");
        &mut self.entries[r * self.cols + c]
    }
}

impl std::fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// In-place RREF on a list of rows; returns pivot columns.
fn rref_rows(data: &mut [Vec<Rat>]) -> Vec<usize> {
    let nrows = data.len();
    let ncols = data.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r >= nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !data[i][c].is_zero()) else {
            continue;
        };
        data.swap(r, p);
        let pivot_row = std::mem::take(&mut data[r]);
        let mut pivot_row = {
            let inv = pivot_row[c].recip();
            let mut row = pivot_row;
            if !row[c].is_one() {
                for x in row[c..].iter_mut() {
                    if !x.is_zero() {
                        *x *= &inv;
                    }
                }
            }
            row
        };
        pivot_row[c] = Rat::one();
        for (i, row) in data.iter_mut().enumerate() {
            if i == r || row.is_empty() || row[c].is_zero() {
                continue;
            }
            let f = std::mem::replace(&mut row[c], Rat::zero());
            for j in c + 1..ncols {
                if !pivot_row[j].is_zero() {
                    let t = &f * &pivot_row[j];
                    row[j] -= t;
                }
            }
        }
        data[r] = pivot_row;
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// A linear subspace of Q^ambient, stored as an echelonized (RREF) basis
/// with its pivot columns. Canonical: equal spans give equal values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    /// Span of the given vectors; dependent inputs are fine, the stored basis
    /// is the echelonized independent set.
    pub fn from_vectors(ambient: usize, vecs: Vec<Vec<Rat>>) -> Result<Self> {
        if let Some(v) = vecs.iter().find(|v| v.len() != ambient) {
            return Err(Error::SizeMismatch(format!(
                "vector of length {} in ambient dimension {}",
                v.len(),
                ambient
            )));
        }
        let mut data = vecs;
        let pivots = rref_rows(&mut data);
        data.truncate(pivots.len());
        Ok(Subspace {
            ambient,
            basis: data,
            pivots,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rat>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Membership test: true iff `v` lies in the span.
    pub fn contains(&self, v: &[Rat]) -> bool {
        assert_eq!(v.len(), self.ambient, "membership: length mismatch");
        let mut w = v.to_vec();
        for (k, &p) in self.pivots.iter().enumerate() {
            if w[p].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut w[p], Rat::zero());
            for (j, e) in self.basis[k].iter().enumerate() {
                if j != p && !e.is_zero() {
                    let t = &c * e;
                    w[j] -= t;
                }
            }
        }
        vec_is_zero(&w)
    }

    /// Coordinates of `v` in the stored basis, or None if `v` is outside.
    pub fn coordinates(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(v.len(), self.ambient, "coordinates: length mismatch");
        let coords: Vec<Rat> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut w = v.to_vec();
        for (k, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, e) in self.basis[k].iter().enumerate() {
                if !e.is_zero() {
                    let t = c * e;
                    w[j] -= t;
                }
            }
        }
        vec_is_zero(&w).then_some(coords)
    }

    /// Intersection with the coordinate subspace spanned by the given
    /// coordinates: all members whose support lies inside `support`.
    ///
    /// Because the stored basis is in RREF, a member x = sum c_k b_k has
    /// x[p_k] = c_k, so rows with pivots outside the support are excluded
    /// outright and only the non-pivot coordinates outside the support
    /// impose linear constraints on the remaining coefficients.
    pub fn coordinate_section(&self, support: &[usize]) -> Subspace {
        let mut in_support = vec![false; self.ambient];
        for &c in support {
            in_support[c] = true;
        }
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let kept: Vec<usize> = (0..self.dim())
            .filter(|&k| in_support[self.pivots[k]])
            .collect();
        let constraints: Vec<usize> = (0..self.ambient)
            .filter(|&c| !in_support[c] && !is_pivot[c])
            .collect();
        let m = RatMatrix::from_fn(constraints.len(), kept.len(), |a, b| {
            self.basis[kept[b]][constraints[a]].clone()
        });
        let ker = m.kernel_basis();
        let vecs: Vec<Vec<Rat>> = ker
            .basis()
            .iter()
            .map(|coeffs| {
                let mut x = vec![Rat::zero(); self.ambient];
                for (b, coef) in coeffs.iter().enumerate() {
                    if coef.is_zero() {
                        continue;
                    }
                    for (j, e) in self.basis[kept[b]].iter().enumerate() {
                        if !e.is_zero() {
                            x[j] += coef * e;
                        }
                    }
                }
                x
            })
            .collect();
        Subspace::from_vectors(self.ambient, vecs).expect("section vectors have ambient length")
    }
}
