//! Matrix Lie algebras inside gl(n): spans closed under the commutator,
//! stabilizer subalgebras of vectors in a representation, and the
//! intersection with the diagonal Cartan subalgebra.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{Rat, RatMatrix, Subspace};
use crate::rep::{act, RepVector, WeightRep};

/// Commutator xy - yx of two square matrices of equal size.
pub fn bracket(x: &RatMatrix, y: &RatMatrix) -> Result<RatMatrix> {
    if !x.is_square() || x.rows() != y.rows() || x.cols() != y.cols() {
        return Err(Error::SizeMismatch(format!(
            "bracket of {}x{} and {}x{}",
            x.rows(),
            x.cols(),
            y.rows(),
            y.cols()
        )));
    }
    let xy = x.mul(y)?;
    let yx = y.mul(x)?;
    Ok(RatMatrix::from_fn(x.rows(), x.cols(), |i, j| {
        &xy[(i, j)] - &yx[(i, j)]
    }))
}

/// A Lie subalgebra of gl(n), stored canonically: the echelonized basis of
/// its row-major flattening in Q^(n^2). Equal subalgebras compare equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixLieAlgebra {
    n: usize,
    basis: Vec<RatMatrix>,
    flat: Subspace,
}

impl MatrixLieAlgebra {
    /// Builds the span of the given matrices, after checking that they are
    /// linearly independent and that the span is closed under the bracket.
    /// Dependence and non-closure are reported as distinct errors.
    pub fn new(n: usize, candidate: Vec<RatMatrix>) -> Result<Self> {
        check_shapes(n, &candidate)?;
        let flat = Subspace::from_vectors(n * n, candidate.iter().map(RatMatrix::flatten).collect())?;
        if flat.dim() != candidate.len() {
            return Err(Error::LinearlyDependent);
        }
        for i in 0..candidate.len() {
            for j in i + 1..candidate.len() {
                let b = bracket(&candidate[i], &candidate[j])?;
                if !flat.contains(&b.flatten()) {
                    return Err(Error::NotASubalgebra { i, j });
                }
            }
        }
        Ok(Self::from_flat(n, flat))
    }

    /// The full gl(n).
    pub fn gl(n: usize) -> Self {
        let mut basis = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut m = RatMatrix::zeros(n, n);
                m[(i, j)] = Rat::one();
                basis.push(m);
            }
        }
        let flat = Subspace::from_vectors(n * n, basis.iter().map(RatMatrix::flatten).collect())
            .expect("unit matrices flatten to ambient length");
        MatrixLieAlgebra { n, basis, flat }
    }

    /// The stabilizer of v: all x in gl(n) with x.v = 0. Always a
    /// subalgebra, since [x, y].v = x.(y.v) - y.(x.v); the closure check is
    /// still run on the computed kernel as an arithmetic self-check.
    pub fn stabilizer(rep: &WeightRep, v: &RepVector) -> Result<Self> {
        let n = rep.n();
        // columns indexed by the flattened matrix entry, rows by the
        // representation basis: column (i,j) holds E_ij . v
        let mut action = RatMatrix::zeros(rep.dim(), n * n);
        for i in 0..n {
            for j in 0..n {
                let mut e = RatMatrix::zeros(n, n);
                e[(i, j)] = Rat::one();
                let image = act(rep, &e, v)?;
                for (row, c) in image.terms() {
                    action[(row, i * n + j)] = c.clone();
                }
            }
        }
        let flat = action.kernel_basis();
        let alg = Self::from_flat(n, flat);
        for i in 0..alg.dim() {
            for j in i + 1..alg.dim() {
                let b = bracket(&alg.basis[i], &alg.basis[j])?;
                if !act(rep, &b, v)?.is_zero() {
                    return Err(Error::NotASubalgebra { i, j });
                }
            }
        }
        Ok(alg)
    }

    fn from_flat(n: usize, flat: Subspace) -> Self {
        let basis = flat
            .basis()
            .iter()
            .map(|row| {
                RatMatrix::from_flat(n, n, row.clone()).expect("flat rows have length n^2")
            })
            .collect();
        MatrixLieAlgebra { n, basis, flat }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Canonical (echelonized) basis.
    pub fn basis(&self) -> &[RatMatrix] {
        &self.basis
    }

    /// The underlying subspace of Q^(n^2), row-major.
    pub fn flat(&self) -> &Subspace {
        &self.flat
    }

    pub fn contains(&self, x: &RatMatrix) -> Result<bool> {
        if x.rows() != self.n || x.cols() != self.n {
            return Err(Error::SizeMismatch(format!(
                "matrix is {}x{}, expected {n}x{n}",
                x.rows(),
                x.cols(),
                n = self.n
            )));
        }
        Ok(self.flat.contains(&x.flatten()))
    }

    /// Intersection with the diagonal matrices, as a subspace of Q^n of
    /// diagonal entries.
    pub fn cartan_intersection(&self) -> CartanSlice {
        let support: Vec<usize> = (0..self.n).map(|i| i * self.n + i).collect();
        let section = self.flat.coordinate_section(&support);
        let diag_vectors = section
            .basis()
            .iter()
            .map(|row| (0..self.n).map(|i| row[i * self.n + i].clone()).collect())
            .collect();
        let space = Subspace::from_vectors(self.n, diag_vectors)
            .expect("diagonal extraction keeps length n");
        CartanSlice { space }
    }
}

/// A subspace of the diagonal Cartan subalgebra, in diagonal-entry
/// coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanSlice {
    space: Subspace,
}

impl CartanSlice {
    pub fn n(&self) -> usize {
        self.space.ambient_dim()
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Echelonized basis of diagonal vectors.
    pub fn basis(&self) -> &[Vec<Rat>] {
        self.space.basis()
    }

    pub fn contains(&self, t: &[Rat]) -> bool {
        self.space.contains(t)
    }
}

/// Decides whether the span of the candidate matrices is closed under the
/// bracket. The candidates must be linearly independent; dependence is an
/// error, not a "false".
pub fn is_subalgebra(n: usize, candidate: &[RatMatrix]) -> Result<bool> {
    check_shapes(n, candidate)?;
    let flat = Subspace::from_vectors(n * n, candidate.iter().map(RatMatrix::flatten).collect())?;
    if flat.dim() != candidate.len() {
        return Err(Error::LinearlyDependent);
    }
    for i in 0..candidate.len() {
        for j in i + 1..candidate.len() {
            let b = bracket(&candidate[i], &candidate[j])?;
            if !flat.contains(&b.flatten()) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn check_shapes(n: usize, mats: &[RatMatrix]) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter("gl(n) needs n >= 1".into()));
    }
    if let Some(m) = mats.iter().find(|m| m.rows() != n || m.cols() != n) {
        return Err(Error::SizeMismatch(format!(
            "matrix is {}x{}, expected {n}x{n}",
            m.rows(),
            m.cols()
        )));
    }
    Ok(())
}

/// Trace of ad(diag t) acting on the algebra: the coefficient sum of
/// [diag t, x_k] along each canonical basis element x_k. Errors if some
/// bracket leaves the algebra (then diag t does not normalize it).
pub fn ad_diag_trace(alg: &MatrixLieAlgebra, t: &[Rat]) -> Result<Rat> {
    let n = alg.n();
    if t.len() != n {
        return Err(Error::SizeMismatch(format!(
            "diagonal of length {} for gl({n})",
            t.len()
        )));
    }
    let mut trace = Rat::zero();
    for (k, x) in alg.basis().iter().enumerate() {
        // [diag t, x] has entries (t_i - t_j) x_ij
        let b = RatMatrix::from_fn(n, n, |i, j| {
            let e = &x[(i, j)];
            if e.is_zero() {
                Rat::zero()
            } else {
                (&t[i] - &t[j]) * e
            }
        });
        let flat_b = b.flatten();
        if !alg.flat().contains(&flat_b) {
            return Err(Error::NotInRestrictedCartan);
        }
        // in the echelonized basis the coefficient of x_k is read off at
        // x_k's pivot coordinate
        trace += &flat_b[alg.flat().pivots()[k]];
    }
    Ok(trace)
}
