//! Integer lattices and finitely generated abelian quotients: Hermite and
//! Smith normal forms, canonical lattice storage, Z^n / L with torsion, and
//! congruence solving for "is one class an integer multiple of another".

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::Rat;

pub type Int = BigInt;

pub fn int(n: i64) -> Int {
    Int::from(n)
}

pub fn int_vec(v: &[i64]) -> Vec<Int> {
    v.iter().map(|&x| Int::from(x)).collect()
}

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Int>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![Int::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Int::one();
        }
        m
    }

    pub fn from_rows(rows_data: Vec<Vec<Int>>) -> Result<Self> {
        let rows = rows_data.len();
        let cols = rows_data.first().map_or(0, Vec::len);
        if rows_data.iter().any(|r| r.len() != cols) {
            return Err(Error::SizeMismatch("rows of unequal length".into()));
        }
        Ok(IntMatrix {
            rows,
            cols,
            entries: rows_data.into_iter().flatten().collect(),
        })
    }

    pub fn from_int_rows(rows_data: &[&[i64]]) -> Self {
        let rows = rows_data.len();
        let cols = rows_data.first().map_or(0, |r| r.len());
        assert!(rows_data.iter().all(|r| r.len() == cols));
        IntMatrix {
            rows,
            cols,
            entries: rows_data
                .iter()
                .flat_map(|r| r.iter().map(|&x| Int::from(x)))
                .collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[Int] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::SizeMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        let t = a * b;
                        out[(i, j)] += t;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[Int]) -> Result<Vec<Int>> {
        if v.len() != self.rows {
            return Err(Error::SizeMismatch(format!(
                "vector of length {} * {}x{}",
                v.len(),
                self.rows,
                self.cols
            )));
        }
        let mut out = vec![Int::zero(); self.cols];
        for (i, a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in self.row(i).iter().enumerate() {
                if !b.is_zero() {
                    let t = a * b;
                    out[j] += t;
                }
            }
        }
        Ok(out)
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in 0..self.rows {
            self.entries.swap(r * self.cols + i, r * self.cols + j);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for c in 0..self.cols {
            let e = &mut self[(i, c)];
            if !e.is_zero() {
                *e = -std::mem::take(e);
            }
        }
    }

    /// row_i -= q * row_r
    fn row_sub_mul(&mut self, i: usize, r: usize, q: &Int) {
        assert_ne!(i, r);
        for c in 0..self.cols {
            let v = &self[(r, c)];
            if !v.is_zero() {
                let t = q * v;
                self[(i, c)] -= t;
            }
        }
    }

    /// row_i += row_r
    fn row_add(&mut self, i: usize, r: usize) {
        assert_ne!(i, r);
        for c in 0..self.cols {
            let v = self[(r, c)].clone();
            if !v.is_zero() {
                self[(i, c)] += v;
            }
        }
    }

    /// col_j -= q * col_t
    fn col_sub_mul(&mut self, j: usize, t: usize, q: &Int) {
        assert_ne!(j, t);
        for r in 0..self.rows {
            let v = &self[(r, t)];
            if !v.is_zero() {
                let s = q * v;
                self[(r, j)] -= s;
            }
        }
    }

    /// row_t += q * row_j (used to track inverses of column operations)
    fn row_add_mul(&mut self, t: usize, j: usize, q: &Int) {
        assert_ne!(t, j);
        for c in 0..self.cols {
            let v = &self[(j, c)];
            if !v.is_zero() {
                let s = q * v;
                self[(t, c)] += s;
            }
        }
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<Int> {
        if !self.is_square() {
            return Err(Error::SizeMismatch(format!(
                "determinant of {}x{}",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Int::one());
        }
        let mut a = self.clone();
        let mut sign = 1i32;
        let mut prev = Int::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[(i, k)].is_zero()) else {
                    return Ok(Int::zero());
                };
                a.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = &a[(k, k)] * &a[(i, j)] - &a[(i, k)] * &a[(k, j)];
                    let (q, r) = t.div_rem(&prev);
                    debug_assert!(r.is_zero(), "Bareiss division is exact");
                    a[(i, j)] = q;
                }
                a[(i, k)] = Int::zero();
            }
            prev = a[(k, k)].clone();
        }
        let d = a[(n - 1, n - 1)].clone();
        Ok(if sign < 0 { -d } else { d })
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Row-style Hermite normal form: returns (h, u) with u unimodular,
    /// h = u * self, pivots positive, entries above each pivot reduced into
    /// [0, pivot), and zero rows at the bottom.
    pub fn hnf(&self) -> (IntMatrix, IntMatrix) {
        let mut h = self.clone();
        let mut u = IntMatrix::identity(self.rows);
        let mut r = 0;
        for c in 0..self.cols {
            if r >= self.rows {
                break;
            }
            if (r..self.rows).all(|i| h[(i, c)].is_zero()) {
                continue;
            }
            loop {
                let imin = (r..self.rows)
                    .filter(|&i| !h[(i, c)].is_zero())
                    .min_by_key(|&i| h[(i, c)].abs())
                    .expect("column has a nonzero entry");
                h.swap_rows(r, imin);
                u.swap_rows(r, imin);
                if h[(r, c)].is_negative() {
                    h.negate_row(r);
                    u.negate_row(r);
                }
                let p = h[(r, c)].clone();
                let mut cleared = true;
                for i in r + 1..self.rows {
                    if h[(i, c)].is_zero() {
                        continue;
                    }
                    let q = h[(i, c)].div_floor(&p);
                    if !q.is_zero() {
                        h.row_sub_mul(i, r, &q);
                        u.row_sub_mul(i, r, &q);
                    }
                    if !h[(i, c)].is_zero() {
                        cleared = false;
                    }
                }
                if cleared {
                    break;
                }
            }
            let p = h[(r, c)].clone();
            for i in 0..r {
                let q = h[(i, c)].div_floor(&p);
                if !q.is_zero() {
                    h.row_sub_mul(i, r, &q);
                    u.row_sub_mul(i, r, &q);
                }
            }
            r += 1;
        }
        (h, u)
    }

    /// Smith normal form: returns (d, u, v) with u, v unimodular and
    /// u * self * v = d diagonal, d_1 | d_2 | ... , all d_i >= 0.
    pub fn snf(&self) -> (IntMatrix, IntMatrix, IntMatrix) {
        let (d, u, v, _) = self.snf_full();
        (d, u, v)
    }

    /// Smith normal form together with the inverse of the right transform:
    /// (d, u, v, vinv) with u * self * v = d and v * vinv = identity.
    pub fn snf_full(&self) -> (IntMatrix, IntMatrix, IntMatrix, IntMatrix) {
        let (m, n) = (self.rows, self.cols);
        let mut d = self.clone();
        let mut u = IntMatrix::identity(m);
        let mut v = IntMatrix::identity(n);
        let mut vinv = IntMatrix::identity(n);
        let mut t = 0;
        'outer: while t < m.min(n) {
            loop {
                // smallest-magnitude nonzero entry of the trailing block
                let mut pivot: Option<(usize, usize)> = None;
                for i in t..m {
                    for j in t..n {
                        if d[(i, j)].is_zero() {
                            continue;
                        }
                        if pivot
                            .as_ref()
                            .is_none_or(|&(pi, pj)| d[(i, j)].abs() < d[(pi, pj)].abs())
                        {
                            pivot = Some((i, j));
                        }
                    }
                }
                let Some((pi, pj)) = pivot else {
                    break 'outer;
                };
                d.swap_rows(t, pi);
                u.swap_rows(t, pi);
                d.swap_cols(t, pj);
                v.swap_cols(t, pj);
                vinv.swap_rows(t, pj);
                'reduce: loop {
                    if d[(t, t)].is_negative() {
                        d.negate_row(t);
                        u.negate_row(t);
                    }
                    let p = d[(t, t)].clone();
                    for i in t + 1..m {
                        if d[(i, t)].is_zero() {
                            continue;
                        }
                        let q = d[(i, t)].div_floor(&p);
                        if !q.is_zero() {
                            d.row_sub_mul(i, t, &q);
                            u.row_sub_mul(i, t, &q);
                        }
                        if !d[(i, t)].is_zero() {
                            d.swap_rows(t, i);
                            u.swap_rows(t, i);
                            continue 'reduce;
                        }
                    }
                    for j in t + 1..n {
                        if d[(t, j)].is_zero() {
                            continue;
                        }
                        let q = d[(t, j)].div_floor(&p);
                        if !q.is_zero() {
                            d.col_sub_mul(j, t, &q);
                            v.col_sub_mul(j, t, &q);
                            vinv.row_add_mul(t, j, &q);
                        }
                        if !d[(t, j)].is_zero() {
                            d.swap_cols(t, j);
                            v.swap_cols(t, j);
                            vinv.swap_rows(t, j);
                            continue 'reduce;
                        }
                    }
                    break;
                }
                // fold in any entry the pivot does not divide, then redo
                let p = d[(t, t)].clone();
                let offender = (t + 1..m)
                    .flat_map(|i| (t + 1..n).map(move |j| (i, j)))
                    .find(|&(i, j)| !d[(i, j)].mod_floor(&p).is_zero());
                match offender {
                    Some((i, _)) => {
                        d.row_add(t, i);
                        u.row_add(t, i);
                    }
                    None => break,
                }
            }
            t += 1;
        }
        (d, u, v, vinv)
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = Int;
    fn index(&self, (r, c): (usize, usize)) -> &Int {
        assert!(r < self.rows && c < self.cols, "index out of range");
        &self.entries[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Int {
        assert!(r < self.rows && c < self.cols, "index out of range");
        &mut self.entries[r * self.cols + c]
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// A sublattice of Z^n in canonical form: the nonzero rows of the Hermite
/// normal form of any generating set. Equal lattices compare equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lattice {
    ambient: usize,
    rows: Vec<Vec<Int>>,
    pivots: Vec<usize>,
}

impl Lattice {
    pub fn new(ambient: usize, generators: Vec<Vec<Int>>) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.len() != ambient) {
            return Err(Error::SizeMismatch(format!(
                "generator of length {} in ambient rank {}",
                g.len(),
                ambient
            )));
        }
        if generators.is_empty() {
            return Ok(Lattice {
                ambient,
                rows: Vec::new(),
                pivots: Vec::new(),
            });
        }
        let m = IntMatrix::from_rows(generators)?;
        let (h, _) = m.hnf();
        let mut rows = Vec::new();
        let mut pivots = Vec::new();
        for r in 0..h.rows() {
            let row = h.row(r).to_vec();
            if let Some(p) = row.iter().position(|x| !x.is_zero()) {
                rows.push(row);
                pivots.push(p);
            }
        }
        Ok(Lattice {
            ambient,
            rows,
            pivots,
        })
    }

    pub fn zero(ambient: usize) -> Self {
        Lattice {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Canonical basis: nonzero HNF rows.
    pub fn basis(&self) -> &[Vec<Int>] {
        &self.rows
    }

    pub fn generator_matrix(&self) -> IntMatrix {
        IntMatrix::from_rows(self.rows.clone()).expect("canonical rows are rectangular")
    }

    /// Integer membership by back-substitution along HNF pivots.
    pub fn is_member(&self, v: &[Int]) -> Result<bool> {
        if v.len() != self.ambient {
            return Err(Error::SizeMismatch(format!(
                "vector of length {} in ambient rank {}",
                v.len(),
                self.ambient
            )));
        }
        let mut w = v.to_vec();
        for (k, &p) in self.pivots.iter().enumerate() {
            if w[..p].iter().any(|x| !x.is_zero()) {
                return Ok(false);
            }
            let (q, r) = w[p].div_rem(&self.rows[k][p]);
            if !r.is_zero() {
                return Ok(false);
            }
            if !q.is_zero() {
                for (j, e) in self.rows[k].iter().enumerate() {
                    if !e.is_zero() {
                        let t = &q * e;
                        w[j] -= t;
                    }
                }
            }
        }
        Ok(w.iter().all(Zero::is_zero))
    }

    /// The saturation {x in Z^n : k*x in L for some k >= 1}; same rank,
    /// torsion-free quotient.
    pub fn saturation(&self) -> Lattice {
        if self.rank() == 0 {
            return self.clone();
        }
        let (_, _, _, vinv) = self.generator_matrix().snf_full();
        let gens: Vec<Vec<Int>> = (0..self.rank()).map(|i| vinv.row(i).to_vec()).collect();
        Lattice::new(self.ambient, gens).expect("saturation generators have ambient length")
    }

}

/// Exact pairing of an integer vector with a rational vector.
pub fn pairing(l: &[Int], t: &[Rat]) -> Rat {
    assert_eq!(l.len(), t.len(), "pairing: length mismatch");
    let mut acc = Rat::zero();
    for (a, b) in l.iter().zip(t) {
        if !a.is_zero() && !b.is_zero() {
            acc += Rat::from_integer(a.clone()) * b;
        }
    }
    acc
}

/// The integer vector on the same ray: multiplies through by the least
/// common denominator.
pub fn scale_to_integers(v: &[Rat]) -> Vec<Int> {
    let mut l = Int::one();
    for x in v {
        l = l.lcm(x.denom());
    }
    v.iter().map(|x| x.numer() * (&l / x.denom())).collect()
}

/// An element of a quotient Z^n / L, in the coordinates fixed by the
/// quotient's Smith decomposition: `torsion[i]` lies in [0, d_i) for the
/// i-th invariant factor d_i, `free` is unconstrained.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CharClass {
    pub torsion: Vec<Int>,
    pub free: Vec<Int>,
}

impl CharClass {
    pub fn is_zero(&self) -> bool {
        self.torsion.iter().all(Zero::is_zero) && self.free.iter().all(Zero::is_zero)
    }
}

impl fmt::Display for CharClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[Int]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "t[{}] f[{}]", join(&self.torsion), join(&self.free))
    }
}

/// The finitely generated abelian group Z^n / L with explicit torsion:
/// isomorphic to Z/d_1 x ... x Z/d_k x Z^free_rank where the d_i >= 2 form
/// a divisibility chain. Carries the change of basis needed to reduce
/// vectors to canonical class coordinates and to lift classes back.
#[derive(Debug, Clone)]
pub struct AbelianQuotient {
    ambient: usize,
    lattice: Lattice,
    invariant_factors: Vec<Int>,
    free_rank: usize,
    rank: usize,
    torsion_positions: Vec<usize>,
    v: IntMatrix,
    vinv: IntMatrix,
}

impl AbelianQuotient {
    pub fn new(lattice: &Lattice) -> Self {
        let n = lattice.ambient_rank();
        if lattice.rank() == 0 {
            return AbelianQuotient {
                ambient: n,
                lattice: lattice.clone(),
                invariant_factors: Vec::new(),
                free_rank: n,
                rank: 0,
                torsion_positions: Vec::new(),
                v: IntMatrix::identity(n),
                vinv: IntMatrix::identity(n),
            };
        }
        let g = lattice.generator_matrix();
        let (d, _, v, vinv) = g.snf_full();
        let rank = lattice.rank();
        debug_assert!((0..rank).all(|i| !d[(i, i)].is_zero()), "canonical rows are independent");
        let mut invariant_factors = Vec::new();
        let mut torsion_positions = Vec::new();
        for i in 0..rank {
            let di = d[(i, i)].clone();
            if di > Int::one() {
                torsion_positions.push(i);
                invariant_factors.push(di);
            }
        }
        AbelianQuotient {
            ambient: n,
            lattice: lattice.clone(),
            invariant_factors,
            free_rank: n - rank,
            rank,
            torsion_positions,
            v,
            vinv,
        }
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    /// Invariant factors d_1 | d_2 | ..., each >= 2.
    pub fn invariant_factors(&self) -> &[Int] {
        &self.invariant_factors
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion_rank(&self) -> usize {
        self.invariant_factors.len()
    }

    /// Columns of the Smith basis change that carry the class coordinates:
    /// reduce(z) reads off z * projection, then takes torsion entries mod
    /// their invariant factors.
    pub fn projection(&self) -> IntMatrix {
        let mut positions = self.torsion_positions.clone();
        positions.extend(self.rank..self.ambient);
        let mut m = IntMatrix::zeros(self.ambient, positions.len());
        for (out, &pos) in positions.iter().enumerate() {
            for i in 0..self.ambient {
                m[(i, out)] = self.v[(i, pos)].clone();
            }
        }
        m
    }

    pub fn zero_class(&self) -> CharClass {
        CharClass {
            torsion: vec![Int::zero(); self.torsion_rank()],
            free: vec![Int::zero(); self.free_rank],
        }
    }

    /// Canonical class of an integer vector.
    pub fn reduce(&self, z: &[Int]) -> Result<CharClass> {
        if z.len() != self.ambient {
            return Err(Error::SizeMismatch(format!(
                "vector of length {} in ambient rank {}",
                z.len(),
                self.ambient
            )));
        }
        let y = self.v.vec_mul(z)?;
        let torsion = self
            .torsion_positions
            .iter()
            .zip(&self.invariant_factors)
            .map(|(&pos, d)| y[pos].mod_floor(d))
            .collect();
        let free = y[self.rank..].to_vec();
        Ok(CharClass { torsion, free })
    }

    /// A representative in Z^n of the given class; reduce(lift(c)) == c.
    pub fn lift(&self, c: &CharClass) -> Result<Vec<Int>> {
        if c.torsion.len() != self.torsion_rank() || c.free.len() != self.free_rank {
            return Err(Error::SizeMismatch(
                "class coordinates do not match the quotient".into(),
            ));
        }
        let mut y = vec![Int::zero(); self.ambient];
        for (&pos, t) in self.torsion_positions.iter().zip(&c.torsion) {
            y[pos] = t.clone();
        }
        for (j, x) in c.free.iter().enumerate() {
            y[self.rank + j] = x.clone();
        }
        self.vinv.vec_mul(&y)
    }

    pub fn add(&self, a: &CharClass, b: &CharClass) -> CharClass {
        assert_eq!(a.torsion.len(), b.torsion.len());
        assert_eq!(a.free.len(), b.free.len());
        let torsion = a
            .torsion
            .iter()
            .zip(&b.torsion)
            .zip(&self.invariant_factors)
            .map(|((x, y), d)| (x + y).mod_floor(d))
            .collect();
        let free = a.free.iter().zip(&b.free).map(|(x, y)| x + y).collect();
        CharClass { torsion, free }
    }

    pub fn scale(&self, a: &CharClass, m: &Int) -> CharClass {
        let torsion = a
            .torsion
            .iter()
            .zip(&self.invariant_factors)
            .map(|(x, d)| (x * m).mod_floor(d))
            .collect();
        let free = a.free.iter().map(|x| x * m).collect();
        CharClass { torsion, free }
    }

    /// Solves `delta = m * chi` over the quotient. Returns the solution set
    /// as Some((m0, period)): all m with m = m0 + period * Z, where
    /// period = 0 encodes a unique solution; None if no integer m works.
    pub fn solve_multiple(&self, delta: &CharClass, chi: &CharClass) -> Option<(Int, Int)> {
        assert_eq!(delta.torsion.len(), self.torsion_rank());
        assert_eq!(delta.free.len(), self.free_rank);
        assert_eq!(chi.torsion.len(), self.torsion_rank());
        assert_eq!(chi.free.len(), self.free_rank);
        // free coordinates force m exactly (or not at all)
        let mut forced: Option<Int> = None;
        for (c, d) in chi.free.iter().zip(&delta.free) {
            if c.is_zero() {
                if !d.is_zero() {
                    return None;
                }
                continue;
            }
            let (q, r) = d.div_rem(c);
            if !r.is_zero() {
                return None;
            }
            match &forced {
                Some(m) if *m != q => return None,
                Some(_) => {}
                None => forced = Some(q),
            }
        }
        // torsion coordinates: chi_i * m = delta_i (mod d_i), combined by CRT
        let mut cong = (Int::zero(), Int::one());
        for ((c, d), f) in chi
            .torsion
            .iter()
            .zip(&delta.torsion)
            .zip(&self.invariant_factors)
        {
            let next = solve_congruence(c, d, f)?;
            cong = crt_combine(&cong, &next)?;
        }
        match forced {
            Some(m) => {
                let (a, p) = cong;
                if (&m - &a).mod_floor(&p).is_zero() {
                    Some((m, Int::zero()))
                } else {
                    None
                }
            }
            None => {
                let (a, p) = cong;
                Some((a.mod_floor(&p), p))
            }
        }
    }
}

/// All x with a*x = b (mod m), m >= 1, as Some((x0, m')) meaning
/// x = x0 + m' * Z; None if none exist.
fn solve_congruence(a: &Int, b: &Int, m: &Int) -> Option<(Int, Int)> {
    debug_assert!(m.is_positive());
    let a = a.mod_floor(m);
    let b = b.mod_floor(m);
    let g = a.gcd(m); // m for a = 0, so the b-divisibility test covers that case
    if !b.mod_floor(&g).is_zero() {
        return None;
    }
    let a1 = &a / &g;
    let b1 = &b / &g;
    let m1 = m / &g;
    if m1.is_one() {
        return Some((Int::zero(), Int::one()));
    }
    let e = a1.extended_gcd(&m1);
    debug_assert!(e.gcd.is_one());
    let inv = e.x.mod_floor(&m1);
    Some(((b1 * inv).mod_floor(&m1), m1))
}

/// Intersection of x = a1 (mod m1) and x = a2 (mod m2); moduli need not be
/// coprime. None if incompatible.
fn crt_combine(c1: &(Int, Int), c2: &(Int, Int)) -> Option<(Int, Int)> {
    let (a1, m1) = c1;
    let (a2, m2) = c2;
    let e = m1.extended_gcd(m2);
    let g = &e.gcd;
    let diff = a2 - a1;
    let (q, r) = diff.div_rem(g);
    if !r.is_zero() {
        return None;
    }
    let m = m1 / g * m2;
    // a1 + m1 * x * q solves both, where x = e.x with m1*x + m2*y = g
    let x = a1 + m1 * &e.x * q;
    Some((x.mod_floor(&m), m))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn im(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_int_rows(rows)
    }

    fn lat(ambient: usize, gens: &[&[i64]]) -> Lattice {
        Lattice::new(ambient, gens.iter().map(|g| int_vec(g)).collect()).unwrap()
    }

    fn check_hnf_shape(h: &IntMatrix) {
        let mut last_pivot: Option<usize> = None;
        let mut seen_zero_row = false;
        for r in 0..h.rows() {
            match (0..h.cols()).find(|&c| !h[(r, c)].is_zero()) {
                None => seen_zero_row = true,
                Some(p) => {
                    assert!(!seen_zero_row, "nonzero row below a zero row");
                    assert!(last_pivot.is_none_or(|lp| lp < p), "pivots not strictly right-moving");
                    assert!(h[(r, p)].is_positive());
                    for i in 0..r {
                        assert!(!h[(i, p)].is_negative() && h[(i, p)] < h[(r, p)]);
                    }
                    last_pivot = Some(p);
                }
            }
        }
    }

    #[test]
    fn hnf_example() {
        let m = im(&[&[4, 2], &[2, 4]]);
        let (h, u) = m.hnf();
        assert_eq!(h, im(&[&[2, 4], &[0, 6]]));
        assert_eq!(u.mul(&m).unwrap(), h);
        assert_eq!(u.det().unwrap().abs(), Int::one());
        check_hnf_shape(&h);
    }

    #[test]
    fn hnf_single_column_gcd() {
        let m = im(&[&[2], &[3]]);
        let (h, u) = m.hnf();
        assert_eq!(h, im(&[&[1], &[0]]));
        assert_eq!(u.mul(&m).unwrap(), h);
        assert_eq!(u.det().unwrap().abs(), Int::one());
    }

    #[test]
    fn hnf_is_canonical_for_the_row_lattice() {
        // same lattice, different generators
        let a = im(&[&[1, 2, 3], &[4, 5, 6]]);
        let b = im(&[&[5, 7, 9], &[-3, -3, -3], &[1, 2, 3]]);
        let (ha, _) = a.hnf();
        let (hb, _) = b.hnf();
        let nonzero = |h: &IntMatrix| -> Vec<Vec<Int>> {
            (0..h.rows())
                .map(|r| h.row(r).to_vec())
                .filter(|r| r.iter().any(|x| !x.is_zero()))
                .collect()
        };
        assert_eq!(nonzero(&ha), nonzero(&hb));
    }

    #[test]
    fn snf_example() {
        let m = im(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
        let (d, u, v) = m.snf();
        assert_eq!(u.mul(&m).unwrap().mul(&v).unwrap(), d);
        assert_eq!(u.det().unwrap().abs(), Int::one());
        assert_eq!(v.det().unwrap().abs(), Int::one());
        let diag: Vec<Int> = (0..3).map(|i| d[(i, i)].clone()).collect();
        assert_eq!(diag, int_vec(&[2, 6, 12]));
    }

    #[test]
    fn snf_tracks_right_inverse() {
        let m = im(&[&[6, 4], &[2, 8], &[4, 2]]);
        let (d, u, v, vinv) = m.snf_full();
        assert_eq!(v.mul(&vinv).unwrap(), IntMatrix::identity(2));
        assert_eq!(u.mul(&m).unwrap().mul(&v).unwrap(), d);
        let (d1, d2) = (d[(0, 0)].clone(), d[(1, 1)].clone());
        assert!(d1.is_positive() && d2.mod_floor(&d1).is_zero());
    }

    #[test]
    fn det_examples() {
        assert_eq!(im(&[&[3, 1], &[1, 3]]).det().unwrap(), int(8));
        assert_eq!(im(&[&[1, 2], &[2, 4]]).det().unwrap(), int(0));
        assert_eq!(IntMatrix::identity(5).det().unwrap(), int(1));
        assert_eq!(
            im(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]).det().unwrap(),
            int(-1)
        );
    }

    #[test]
    fn lattice_canonicalizes_generators() {
        let a = lat(2, &[&[4, 2], &[2, 4]]);
        let b = lat(2, &[&[2, -2], &[2, 4]]);
        assert_eq!(a, b);
        assert_eq!(a.rank(), 2);
        // dependent generators collapse
        let c = lat(2, &[&[1, 0], &[2, 0]]);
        assert_eq!(c.basis(), &[int_vec(&[1, 0])]);
    }

    #[test]
    fn lattice_membership() {
        let l = lat(2, &[&[2, 0], &[0, 3]]);
        assert!(l.is_member(&int_vec(&[4, -3])).unwrap());
        assert!(!l.is_member(&int_vec(&[1, 0])).unwrap());
        assert!(!l.is_member(&int_vec(&[2, 1])).unwrap());
        assert!(l.is_member(&int_vec(&[0, 0])).unwrap());
        assert!(l.is_member(&int_vec(&[0])).is_err());
        // rank-deficient lattice: membership needs exact direction
        let p = lat(3, &[&[1, 1, 1]]);
        assert!(p.is_member(&int_vec(&[5, 5, 5])).unwrap());
        assert!(!p.is_member(&int_vec(&[5, 5, 4])).unwrap());
    }

    #[test]
    fn saturation_examples() {
        let l = lat(2, &[&[2, 0]]);
        assert_eq!(l.saturation(), lat(2, &[&[1, 0]]));
        let p = lat(5, &[&[1, 1, 1, 1, 0]]);
        assert_eq!(p.saturation(), p);
        let skew = lat(3, &[&[2, 4, 6]]);
        assert_eq!(skew.saturation(), lat(3, &[&[1, 2, 3]]));
        // rank preserved, membership grows
        let m = lat(3, &[&[2, 0, 0], &[0, 3, 3]]);
        let s = m.saturation();
        assert_eq!(s.rank(), 2);
        assert!(s.is_member(&int_vec(&[1, 0, 0])).unwrap());
        assert!(s.is_member(&int_vec(&[0, 1, 1])).unwrap());
        assert!(!s.is_member(&int_vec(&[0, 1, 0])).unwrap());
    }

    #[test]
    fn quotient_z2_mod_diag() {
        // Z^2 / <(2,0),(0,3)> = Z/6 after Smith normalization
        let q = AbelianQuotient::new(&lat(2, &[&[2, 0], &[0, 3]]));
        assert_eq!(q.invariant_factors(), &[int(6)]);
        assert_eq!(q.free_rank(), 0);
        let c = q.reduce(&int_vec(&[1, 1])).unwrap();
        assert_eq!(q.reduce(&q.lift(&c).unwrap()).unwrap(), c);
    }

    #[test]
    fn quotient_with_free_part() {
        // Z^2 / <(2,0)> = Z/2 x Z
        let q = AbelianQuotient::new(&lat(2, &[&[2, 0]]));
        assert_eq!(q.invariant_factors(), &[int(2)]);
        assert_eq!(q.free_rank(), 1);
        let one_zero = q.reduce(&int_vec(&[1, 0])).unwrap();
        assert!(!one_zero.is_zero());
        assert!(q.reduce(&int_vec(&[2, 0])).unwrap().is_zero());
        assert!(q.scale(&one_zero, &int(2)).is_zero());
        let anything = q.reduce(&int_vec(&[7, -5])).unwrap();
        let lifted = q.lift(&anything).unwrap();
        assert_eq!(q.reduce(&lifted).unwrap(), anything);
    }

    #[test]
    fn quotient_unit_factors_are_dropped() {
        // Z^2 / <(1,1)> = Z, no torsion
        let q = AbelianQuotient::new(&lat(2, &[&[1, 1]]));
        assert!(q.invariant_factors().is_empty());
        assert_eq!(q.free_rank(), 1);
        assert!(q.reduce(&int_vec(&[1, 1])).unwrap().is_zero());
        assert!(!q.reduce(&int_vec(&[1, 0])).unwrap().is_zero());
    }

    #[test]
    fn quotient_of_zero_lattice() {
        let q = AbelianQuotient::new(&Lattice::zero(3));
        assert!(q.invariant_factors().is_empty());
        assert_eq!(q.free_rank(), 3);
        let c = q.reduce(&int_vec(&[4, -1, 2])).unwrap();
        assert_eq!(c.free, int_vec(&[4, -1, 2]));
        assert_eq!(q.lift(&c).unwrap(), int_vec(&[4, -1, 2]));
    }

    #[test]
    fn reduce_is_zero_iff_member() {
        let l = lat(3, &[&[2, 2, 0], &[0, 4, 4]]);
        let q = AbelianQuotient::new(&l);
        for v in [
            int_vec(&[2, 2, 0]),
            int_vec(&[2, 6, 4]),
            int_vec(&[1, 1, 0]),
            int_vec(&[0, 0, 1]),
            int_vec(&[-2, 2, 4]),
        ] {
            assert_eq!(
                q.reduce(&v).unwrap().is_zero(),
                l.is_member(&v).unwrap(),
                "vector {v:?}"
            );
        }
    }

    #[test]
    fn class_arithmetic_matches_lifts() {
        let q = AbelianQuotient::new(&lat(3, &[&[2, 0, 0], &[0, 3, 0]]));
        let a = q.reduce(&int_vec(&[1, 2, 5])).unwrap();
        let b = q.reduce(&int_vec(&[1, 1, -2])).unwrap();
        let sum = q.add(&a, &b);
        assert_eq!(sum, q.reduce(&int_vec(&[2, 3, 3])).unwrap());
        assert_eq!(q.scale(&a, &int(3)), q.reduce(&int_vec(&[3, 6, 15])).unwrap());
        assert_eq!(q.scale(&a, &int(0)), q.zero_class());
    }

    #[test]
    fn projection_matches_reduce() {
        let q = AbelianQuotient::new(&lat(3, &[&[2, 2, 0]]));
        let z = int_vec(&[3, -1, 4]);
        let y = q.projection().vec_mul(&z).unwrap();
        let c = q.reduce(&z).unwrap();
        // torsion entries agree mod their factors; free entries agree exactly
        assert_eq!(y.len(), q.torsion_rank() + q.free_rank());
        for (i, d) in q.invariant_factors().iter().enumerate() {
            assert_eq!(y[i].mod_floor(d), c.torsion[i]);
        }
        assert_eq!(&y[q.torsion_rank()..], &c.free[..]);
    }

    #[test]
    fn solve_multiple_free_unique() {
        // Z^2, delta = (4,2), chi = (2,1): m = 2 uniquely
        let q = AbelianQuotient::new(&Lattice::zero(2));
        let delta = q.reduce(&int_vec(&[4, 2])).unwrap();
        let chi = q.reduce(&int_vec(&[2, 1])).unwrap();
        assert_eq!(q.solve_multiple(&delta, &chi), Some((int(2), int(0))));
        // incompatible ratios
        let bad = q.reduce(&int_vec(&[4, 3])).unwrap();
        assert_eq!(q.solve_multiple(&bad, &chi), None);
        // non-integer ratio
        let half = q.reduce(&int_vec(&[1, 1])).unwrap();
        assert_eq!(q.solve_multiple(&half, &chi), None);
    }

    #[test]
    fn solve_multiple_zero_cases() {
        let q = AbelianQuotient::new(&Lattice::zero(2));
        let zero = q.zero_class();
        let chi = q.reduce(&int_vec(&[2, 1])).unwrap();
        // delta = 0: m = 0 uniquely for nonzero chi
        assert_eq!(q.solve_multiple(&zero, &chi), Some((int(0), int(0))));
        // delta = chi = 0: every integer works
        assert_eq!(q.solve_multiple(&zero, &zero), Some((int(0), int(1))));
        // delta != 0, chi = 0: none
        let delta = q.reduce(&int_vec(&[1, 0])).unwrap();
        assert_eq!(q.solve_multiple(&delta, &zero), None);
    }

    #[test]
    fn solve_multiple_torsion_period() {
        // Z/4: chi = 2, delta = 2: m odd, i.e. m = 1 (mod 2)
        let q = AbelianQuotient::new(&lat(1, &[&[4]]));
        let chi = q.reduce(&[int(2)]).unwrap();
        let delta = q.reduce(&[int(2)]).unwrap();
        assert_eq!(q.solve_multiple(&delta, &chi), Some((int(1), int(2))));
        // chi = 2, delta = 1: 2m = 1 (mod 4) has no solution
        let one = q.reduce(&[int(1)]).unwrap();
        assert_eq!(q.solve_multiple(&one, &chi), None);
        // chi = 1: m = delta (mod 4)
        assert_eq!(q.solve_multiple(&delta, &one), Some((int(2), int(4))));
    }

    #[test]
    fn solve_multiple_mixed_free_and_torsion() {
        // Z/2 x Z via Z^2 / <(2,0)>
        let q = AbelianQuotient::new(&lat(2, &[&[2, 0]]));
        let chi = q.reduce(&int_vec(&[1, 1])).unwrap();
        let delta = q.reduce(&int_vec(&[3, 3])).unwrap();
        // free part forces m = 3; torsion needs 3*1 = 1 (mod 2): holds
        assert_eq!(q.solve_multiple(&delta, &chi), Some((int(3), int(0))));
        let delta2 = q.reduce(&int_vec(&[2, 3])).unwrap();
        // free part forces m = 3, torsion needs 3 = 0 (mod 2): fails
        assert_eq!(q.solve_multiple(&delta2, &chi), None);
    }

    #[test]
    fn congruence_and_crt() {
        assert_eq!(solve_congruence(&int(2), &int(2), &int(4)), Some((int(1), int(2))));
        assert_eq!(solve_congruence(&int(2), &int(1), &int(4)), None);
        assert_eq!(solve_congruence(&int(0), &int(0), &int(5)), Some((int(0), int(1))));
        assert_eq!(solve_congruence(&int(0), &int(3), &int(5)), None);
        assert_eq!(solve_congruence(&int(3), &int(1), &int(7)), Some((int(5), int(7))));
        assert_eq!(crt_combine(&(int(1), int(2)), &(int(2), int(3))), Some((int(5), int(6))));
        assert_eq!(crt_combine(&(int(1), int(4)), &(int(3), int(6))), Some((int(9), int(12))));
        assert_eq!(crt_combine(&(int(1), int(4)), &(int(2), int(6))), None);
    }

    // randomized postcondition checks live in the acceptance suite; these
    // small fixed cases keep the module self-verifying
    #[test]
    fn snf_of_singular_and_nonsquare() {
        let m = im(&[&[1, 2, 3], &[2, 4, 6]]);
        let (d, u, v) = m.snf();
        assert_eq!(u.mul(&m).unwrap().mul(&v).unwrap(), d);
        assert_eq!(d[(0, 0)], int(1));
        assert_eq!(d[(1, 1)], int(0));
        let wide = im(&[&[0, 0, 7]]);
        let (d2, u2, v2) = wide.snf();
        assert_eq!(u2.mul(&wide).unwrap().mul(&v2).unwrap(), d2);
        assert_eq!(d2[(0, 0)], int(7));
    }
}
