//! Weight representations of gl(n) on spaces with a monomial weight basis:
//! the standard representation, its dual, the second exterior power, and
//! symmetric powers. Each basis vector carries an integer weight (its
//! character under the diagonal torus), and matrices act exactly.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lattice::{Int, Lattice};
use crate::linalg::{Rat, RatMatrix};

/// Which representation of gl(n) to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RepKind {
    /// C^n with X acting as itself; basis e_i, weight e_i.
    Standard,
    /// (C^n)* with X acting as -X^T; basis e_i*, weight -e_i.
    Dual,
    /// Lambda^2 C^n; basis e_i ^ e_j for i < j, weight e_i + e_j.
    Wedge2,
    /// Sym^k C^n as polynomials of degree k; monomial basis, weight = the
    /// exponent vector.
    Sym(u32),
}

impl fmt::Display for RepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepKind::Standard => write!(f, "standard"),
            RepKind::Dual => write!(f, "dual"),
            RepKind::Wedge2 => write!(f, "wedge2"),
            RepKind::Sym(k) => write!(f, "sym^{k}"),
        }
    }
}

/// Name of one monomial basis vector. Indices are 0-based internally and
/// 1-based in the display syntax ("e1", "e2*", "e1^e3", "e1^2*e2").
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasisLabel {
    Vector(usize),
    Covector(usize),
    Wedge(usize, usize),
    Monomial(Vec<u32>),
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisLabel::Vector(i) => write!(f, "e{}", i + 1),
            BasisLabel::Covector(i) => write!(f, "e{}*", i + 1),
            BasisLabel::Wedge(i, j) => write!(f, "e{}^e{}", i + 1, j + 1),
            BasisLabel::Monomial(alpha) => {
                let mut parts = Vec::new();
                for (i, &a) in alpha.iter().enumerate() {
                    match a {
                        0 => {}
                        1 => parts.push(format!("e{}", i + 1)),
                        _ => parts.push(format!("e{}^{}", i + 1, a)),
                    }
                }
                if parts.is_empty() {
                    write!(f, "1")
                } else {
                    write!(f, "{}", parts.join("*"))
                }
            }
        }
    }
}

/// A representation with a fixed ordered monomial basis and the weight of
/// each basis vector as an integer vector in Z^n.
#[derive(Debug, Clone)]
pub struct WeightRep {
    n: usize,
    kind: RepKind,
    labels: Vec<BasisLabel>,
    weights: Vec<Vec<Int>>,
    index: BTreeMap<BasisLabel, usize>,
}

/// Builds the chosen representation of gl(n).
///
/// Basis orders are fixed and documented: standard/dual use e_1..e_n;
/// wedge2 lists pairs (i, j), i < j, lexicographically; sym^k lists exponent
/// vectors in decreasing lexicographic order (so e1^k comes first).
pub fn make_rep(kind: RepKind, n: usize) -> Result<WeightRep> {
    if n == 0 {
        return Err(Error::InvalidParameter("representation needs n >= 1".into()));
    }
    let e = |i: usize| -> Vec<Int> {
        let mut w = vec![Int::zero(); n];
        w[i] = Int::from(1);
        w
    };
    let (labels, weights): (Vec<BasisLabel>, Vec<Vec<Int>>) = match kind {
        RepKind::Standard => (0..n).map(|i| (BasisLabel::Vector(i), e(i))).unzip(),
        RepKind::Dual => (0..n)
            .map(|i| {
                let w = e(i).into_iter().map(|x| -x).collect();
                (BasisLabel::Covector(i), w)
            })
            .unzip(),
        RepKind::Wedge2 => {
            if n < 2 {
                return Err(Error::InvalidParameter(
                    "wedge2 needs n >= 2".into(),
                ));
            }
            let mut out = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    let mut w = vec![Int::zero(); n];
                    w[i] = Int::from(1);
                    w[j] = Int::from(1);
                    out.push((BasisLabel::Wedge(i, j), w));
                }
            }
            out.into_iter().unzip()
        }
        RepKind::Sym(k) => {
            if k == 0 {
                return Err(Error::InvalidParameter("sym power needs k >= 1".into()));
            }
            let mut alphas = Vec::new();
            let mut cur = vec![0u32; n];
            gen_exponents(&mut alphas, &mut cur, 0, k);
            alphas.sort();
            alphas.reverse(); // decreasing lex: e1^k first
            alphas
                .into_iter()
                .map(|alpha| {
                    let w = alpha.iter().map(|&a| Int::from(a)).collect();
                    (BasisLabel::Monomial(alpha), w)
                })
                .unzip()
        }
    };
    let index = labels
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, l)| (l, i))
        .collect();
    Ok(WeightRep {
        n,
        kind,
        labels,
        weights,
        index,
    })
}

fn gen_exponents(out: &mut Vec<Vec<u32>>, cur: &mut Vec<u32>, pos: usize, remaining: u32) {
    if pos + 1 == cur.len() {
        cur[pos] = remaining;
        out.push(cur.clone());
        cur[pos] = 0;
        return;
    }
    for a in 0..=remaining {
        cur[pos] = a;
        gen_exponents(out, cur, pos + 1, remaining - a);
    }
    cur[pos] = 0;
}

impl WeightRep {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> RepKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[BasisLabel] {
        &self.labels
    }

    pub fn label(&self, idx: usize) -> &BasisLabel {
        &self.labels[idx]
    }

    /// Weight of one basis vector, as an integer vector in Z^n.
    pub fn weight_of(&self, idx: usize) -> &[Int] {
        &self.weights[idx]
    }

    pub fn index_of(&self, label: &BasisLabel) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// Parses the display syntax of a basis label for this representation.
    pub fn parse_label(&self, s: &str) -> Result<usize> {
        let label = parse_label_str(self.kind, self.n, s)?;
        self.index_of(&label).ok_or_else(|| {
            Error::InvalidParameter(format!("basis label {s:?} is out of range"))
        })
    }
}

fn parse_index(s: &str, n: usize) -> Result<usize> {
    let err = || Error::InvalidParameter(format!("bad basis index {s:?}"));
    let i: usize = s.strip_prefix('e').ok_or_else(err)?.parse().map_err(|_| err())?;
    if i == 0 || i > n {
        return Err(Error::InvalidParameter(format!(
            "basis index e{i} is out of range 1..={n}"
        )));
    }
    Ok(i - 1)
}

fn parse_label_str(kind: RepKind, n: usize, s: &str) -> Result<BasisLabel> {
    let s = s.trim();
    let err = |msg: &str| Error::InvalidParameter(format!("bad basis label {s:?}: {msg}"));
    match kind {
        RepKind::Standard => Ok(BasisLabel::Vector(parse_index(s, n)?)),
        RepKind::Dual => {
            let body = s.strip_suffix('*').ok_or_else(|| err("expected e<i>*"))?;
            Ok(BasisLabel::Covector(parse_index(body, n)?))
        }
        RepKind::Wedge2 => {
            let (a, b) = s.split_once('^').ok_or_else(|| err("expected e<i>^e<j>"))?;
            let (i, j) = (parse_index(a, n)?, parse_index(b, n)?);
            if i >= j {
                return Err(err("wedge factors must be strictly increasing"));
            }
            Ok(BasisLabel::Wedge(i, j))
        }
        RepKind::Sym(k) => {
            let mut alpha = vec![0u32; n];
            if s != "1" {
                for factor in s.split('*') {
                    let (base, exp) = match factor.split_once('^') {
                        Some((b, e)) => {
                            let e: u32 = e.parse().map_err(|_| err("bad exponent"))?;
                            (b, e)
                        }
                        None => (factor, 1),
                    };
                    if exp == 0 {
                        return Err(err("zero exponent"));
                    }
                    alpha[parse_index(base.trim(), n)?] += exp;
                }
            }
            let total: u32 = alpha.iter().sum();
            if total != k {
                return Err(err(&format!("monomial has degree {total}, expected {k}")));
            }
            Ok(BasisLabel::Monomial(alpha))
        }
    }
}

/// A vector in a representation, stored sparsely as index -> nonzero
/// rational coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RepVector {
    terms: BTreeMap<usize, Rat>,
}

impl RepVector {
    pub fn zero() -> Self {
        RepVector::default()
    }

    pub fn from_terms(rep: &WeightRep, terms: Vec<(usize, Rat)>) -> Result<Self> {
        let mut out = BTreeMap::new();
        for (idx, c) in terms {
            if idx >= rep.dim() {
                return Err(Error::SizeMismatch(format!(
                    "basis index {idx} in a representation of dimension {}",
                    rep.dim()
                )));
            }
            if c.is_zero() {
                continue;
            }
            let entry = out.entry(idx).or_insert_with(Rat::zero);
            *entry += c;
            if entry.is_zero() {
                out.remove(&idx);
            }
        }
        Ok(RepVector { terms: out })
    }

    pub fn single(rep: &WeightRep, idx: usize, c: Rat) -> Result<Self> {
        Self::from_terms(rep, vec![(idx, c)])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero terms in increasing basis order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &Rat)> {
        self.terms.iter().map(|(&i, c)| (i, c))
    }

    pub fn coeff(&self, idx: usize) -> Rat {
        self.terms.get(&idx).cloned().unwrap_or_else(Rat::zero)
    }

    fn add_term(&mut self, idx: usize, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(idx).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&idx);
        }
    }
}

/// Applies x in gl(n) to v, exactly.
///
/// Standard: columns of x. Dual: -x^T. Wedge2: derivation on each factor
/// with e_j ^ e_i = -(e_i ^ e_j). Sym^k: polynomial derivation, so the
/// monomial e^alpha maps to sum_j alpha_j x_ij e^(alpha - d_j + d_i).
pub fn act(rep: &WeightRep, x: &RatMatrix, v: &RepVector) -> Result<RepVector> {
    let n = rep.n;
    if x.rows() != n || x.cols() != n {
        return Err(Error::SizeMismatch(format!(
            "matrix is {}x{}, gl({n}) expected",
            x.rows(),
            x.cols()
        )));
    }
    let mut out = RepVector::zero();
    for (idx, c) in v.terms() {
        if idx >= rep.dim() {
            return Err(Error::SizeMismatch(format!(
                "basis index {idx} in a representation of dimension {}",
                rep.dim()
            )));
        }
        match &rep.labels[idx] {
            BasisLabel::Vector(j) => {
                for i in 0..n {
                    let a = &x[(i, *j)];
                    if !a.is_zero() {
                        out.add_term(i, c * a);
                    }
                }
            }
            BasisLabel::Covector(j) => {
                for i in 0..n {
                    let a = &x[(*j, i)];
                    if !a.is_zero() {
                        out.add_term(i, -(c * a));
                    }
                }
            }
            BasisLabel::Wedge(p, q) => {
                // x.(e_p ^ e_q) = (x e_p) ^ e_q + e_p ^ (x e_q)
                for i in 0..n {
                    let a = &x[(i, *p)];
                    if !a.is_zero() {
                        add_wedge(rep, &mut out, i, *q, c * a)?;
                    }
                    let b = &x[(i, *q)];
                    if !b.is_zero() {
                        add_wedge(rep, &mut out, *p, i, c * b)?;
                    }
                }
            }
            BasisLabel::Monomial(alpha) => {
                for (j, &aj) in alpha.iter().enumerate() {
                    if aj == 0 {
                        continue;
                    }
                    let factor = Rat::from_integer(Int::from(aj));
                    for i in 0..n {
                        let a = &x[(i, j)];
                        if a.is_zero() {
                            continue;
                        }
                        let mut beta = alpha.clone();
                        beta[j] -= 1;
                        beta[i] += 1;
                        let target = rep
                            .index_of(&BasisLabel::Monomial(beta))
                            .expect("shifted exponent stays in the basis");
                        out.add_term(target, c * a * &factor);
                    }
                }
            }
        }
    }
    Ok(out)
}

fn add_wedge(rep: &WeightRep, out: &mut RepVector, i: usize, j: usize, c: Rat) -> Result<()> {
    use std::cmp::Ordering;
    let (label, c) = match i.cmp(&j) {
        Ordering::Equal => return Ok(()),
        Ordering::Less => (BasisLabel::Wedge(i, j), c),
        Ordering::Greater => (BasisLabel::Wedge(j, i), -c),
    };
    let idx = rep
        .index_of(&label)
        .expect("wedge pair stays in the basis");
    out.add_term(idx, c);
    Ok(())
}

/// The distinct weights appearing in v's support, in basis order.
pub fn support_weights(rep: &WeightRep, v: &RepVector) -> Result<Vec<Vec<Int>>> {
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for (idx, _) in v.terms() {
        if idx >= rep.dim() {
            return Err(Error::SizeMismatch(format!(
                "basis index {idx} in a representation of dimension {}",
                rep.dim()
            )));
        }
        let w = rep.weight_of(idx).to_vec();
        if seen.insert(w.clone()) {
            out.push(w);
        }
    }
    Ok(out)
}

/// The lattice of characters vanishing on the stabilizer torus of v: the
/// span of the support weights. A diagonal torus element fixes every
/// monomial line of v exactly when all these characters kill it.
pub fn stabilizer_torus_lattice(rep: &WeightRep, v: &RepVector) -> Result<Lattice> {
    Lattice::new(rep.n, support_weights(rep, v)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::int_vec;
    use crate::linalg::rat;

    fn e(rep: &WeightRep, idx: usize) -> RepVector {
        RepVector::single(rep, idx, rat(1)).unwrap()
    }

    #[test]
    fn dims_and_orders() {
        assert_eq!(make_rep(RepKind::Standard, 4).unwrap().dim(), 4);
        assert_eq!(make_rep(RepKind::Dual, 4).unwrap().dim(), 4);
        assert_eq!(make_rep(RepKind::Wedge2, 5).unwrap().dim(), 10);
        assert_eq!(make_rep(RepKind::Sym(3), 2).unwrap().dim(), 4);
        assert_eq!(make_rep(RepKind::Sym(2), 3).unwrap().dim(), 6);

        let w = make_rep(RepKind::Wedge2, 4).unwrap();
        let pairs: Vec<String> = w.labels().iter().map(|l| l.to_string()).collect();
        assert_eq!(pairs, ["e1^e2", "e1^e3", "e1^e4", "e2^e3", "e2^e4", "e3^e4"]);

        let s = make_rep(RepKind::Sym(3), 2).unwrap();
        let mons: Vec<String> = s.labels().iter().map(|l| l.to_string()).collect();
        assert_eq!(mons, ["e1^3", "e1^2*e2", "e1*e2^2", "e2^3"]);
    }

    #[test]
    fn invalid_parameters() {
        assert!(make_rep(RepKind::Standard, 0).is_err());
        assert!(make_rep(RepKind::Wedge2, 1).is_err());
        assert!(make_rep(RepKind::Sym(0), 3).is_err());
    }

    #[test]
    fn weights_match_kind() {
        let st = make_rep(RepKind::Standard, 3).unwrap();
        assert_eq!(st.weight_of(1), &int_vec(&[0, 1, 0])[..]);
        let du = make_rep(RepKind::Dual, 3).unwrap();
        assert_eq!(du.weight_of(1), &int_vec(&[0, -1, 0])[..]);
        let w = make_rep(RepKind::Wedge2, 3).unwrap();
        let i13 = w.index_of(&BasisLabel::Wedge(0, 2)).unwrap();
        assert_eq!(w.weight_of(i13), &int_vec(&[1, 0, 1])[..]);
        let s = make_rep(RepKind::Sym(3), 2).unwrap();
        let m = s.index_of(&BasisLabel::Monomial(vec![2, 1])).unwrap();
        assert_eq!(s.weight_of(m), &int_vec(&[2, 1])[..]);
    }

    #[test]
    fn standard_action_is_matrix_action() {
        let rep = make_rep(RepKind::Standard, 2).unwrap();
        let x = RatMatrix::from_int_rows(&[&[0, 1], &[0, 0]]); // E_12
        let out = act(&rep, &x, &e(&rep, 1)).unwrap();
        assert_eq!(out, e(&rep, 0));
        assert!(act(&rep, &x, &e(&rep, 0)).unwrap().is_zero());
    }

    #[test]
    fn dual_action_is_negative_transpose() {
        let rep = make_rep(RepKind::Dual, 2).unwrap();
        let x = RatMatrix::from_int_rows(&[&[0, 1], &[0, 0]]); // E_12
        // E_12 . e1* = -e2*, E_12 . e2* = 0
        let out = act(&rep, &x, &e(&rep, 0)).unwrap();
        assert_eq!(out, RepVector::single(&rep, 1, rat(-1)).unwrap());
        assert!(act(&rep, &x, &e(&rep, 1)).unwrap().is_zero());
    }

    #[test]
    fn wedge_action_antisymmetrizes() {
        let rep = make_rep(RepKind::Wedge2, 3).unwrap();
        let i12 = rep.index_of(&BasisLabel::Wedge(0, 1)).unwrap();
        let i13 = rep.index_of(&BasisLabel::Wedge(0, 2)).unwrap();
        // E_32 . (e1 ^ e2) = e1 ^ e3
        let e32 = RatMatrix::from_int_rows(&[&[0, 0, 0], &[0, 0, 0], &[0, 1, 0]]);
        assert_eq!(act(&rep, &e32, &e(&rep, i12)).unwrap(), e(&rep, i13));
        // E_31 . (e1 ^ e3) = e3 ^ e3 + 0 = 0... actually E_31 e1 = e3: (e3 ^ e3) = 0
        let e31 = RatMatrix::from_int_rows(&[&[0, 0, 0], &[0, 0, 0], &[1, 0, 0]]);
        assert!(act(&rep, &e31, &e(&rep, i13)).unwrap().is_zero());
        // E_12 . (e1 ^ e2) = e1 ^ e1 + e1 ^ ... = 0; E_21 . (e1^e2) = e2^e2 = 0
        let e12 = RatMatrix::from_int_rows(&[&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]]);
        assert!(act(&rep, &e12, &e(&rep, i12)).unwrap().is_zero());
        // sign: E_21 . (e1 ^ e3) = e2 ^ e3 with + sign; E_12 . (e2 ^ e3) = e1 ^ e3
        let e21 = RatMatrix::from_int_rows(&[&[0, 0, 0], &[1, 0, 0], &[0, 0, 0]]);
        let i23 = rep.index_of(&BasisLabel::Wedge(1, 2)).unwrap();
        assert_eq!(act(&rep, &e21, &e(&rep, i13)).unwrap(), e(&rep, i23));
        // and the reversed-order wedge picks up the sign:
        // E_32 . (e1 ^ e3) = e1 ^ (E_32 e3) = 0, E_23 . (e1 ^ e3) = e1 ^ e2
        let e23 = RatMatrix::from_int_rows(&[&[0, 0, 0], &[0, 0, 1], &[0, 0, 0]]);
        assert_eq!(act(&rep, &e23, &e(&rep, i13)).unwrap(), e(&rep, i12));
    }

    #[test]
    fn wedge_sign_convention() {
        // E_21 . (e1 ^ e2) = (E_21 e1) ^ e2 = e2 ^ e2 = 0 is covered above;
        // take n = 2, x = E_21, v = e1 ^ e2: (e2 ^ e2) + (e1 ^ 0): zero.
        // The sign shows up via x = diag-free general matrix:
        // X . (e1 ^ e2) with X e1 = e2, X e2 = e1 gives e2^e2 + e1^e1 = 0.
        let rep = make_rep(RepKind::Wedge2, 2).unwrap();
        let x = RatMatrix::from_int_rows(&[&[0, 1], &[1, 0]]);
        let v = e(&rep, 0);
        assert!(act(&rep, &x, &v).unwrap().is_zero());
        // whereas X' e1 = e2, X' e2 = -e1 fixes the line with eigenvalue... :
        // X'.(e1^e2) = e2^e2 + e1^(-e1) = 0 too; use X'' e1 = e1 + e2 instead:
        let x2 = RatMatrix::from_int_rows(&[&[1, 0], &[1, 1]]);
        // X''.(e1^e2) = (e1+e2)^e2 + e1^e2 = 2 e1^e2
        assert_eq!(
            act(&rep, &x2, &v).unwrap(),
            RepVector::single(&rep, 0, rat(2)).unwrap()
        );
    }

    #[test]
    fn sym_action_is_a_derivation() {
        let rep = make_rep(RepKind::Sym(2), 2).unwrap();
        let idx = |a: &[u32]| rep.index_of(&BasisLabel::Monomial(a.to_vec())).unwrap();
        // E_21 . e1^2 = 2 e1 e2
        let e21 = RatMatrix::from_int_rows(&[&[0, 0], &[1, 0]]);
        assert_eq!(
            act(&rep, &e21, &e(&rep, idx(&[2, 0]))).unwrap(),
            RepVector::single(&rep, idx(&[1, 1]), rat(2)).unwrap()
        );
        // E_21 . (e1 e2) = e2^2
        assert_eq!(
            act(&rep, &e21, &e(&rep, idx(&[1, 1]))).unwrap(),
            e(&rep, idx(&[0, 2]))
        );
        // diagonal acts by the weight: diag(3, 5) . e1 e2 = 8 e1 e2
        let d = RatMatrix::from_int_rows(&[&[3, 0], &[0, 5]]);
        assert_eq!(
            act(&rep, &d, &e(&rep, idx(&[1, 1]))).unwrap(),
            RepVector::single(&rep, idx(&[1, 1]), rat(8)).unwrap()
        );
    }

    #[test]
    fn diagonal_acts_by_weight_everywhere() {
        // <weight, t> as the eigenvalue of diag(t), across all kinds
        let t = RatMatrix::from_int_rows(&[&[2, 0, 0], &[0, 3, 0], &[0, 0, -1]]);
        for kind in [RepKind::Standard, RepKind::Dual, RepKind::Wedge2, RepKind::Sym(2)] {
            let rep = make_rep(kind, 3).unwrap();
            for idx in 0..rep.dim() {
                let v = e(&rep, idx);
                let out = act(&rep, &t, &v).unwrap();
                let eig: Rat = rep
                    .weight_of(idx)
                    .iter()
                    .zip([2i64, 3, -1])
                    .map(|(w, ti)| Rat::from_integer(w.clone()) * rat(ti))
                    .sum();
                let mut expect = RepVector::zero();
                expect.add_term(idx, eig);
                assert_eq!(out, expect, "kind {kind:?} index {idx}");
            }
        }
    }

    #[test]
    fn act_respects_brackets() {
        // [X, Y] . v = X.(Y.v) - Y.(X.v) on a generic vector, all kinds
        let x = RatMatrix::from_int_rows(&[&[1, 2, 0], &[0, 0, 3], &[1, 0, 1]]);
        let y = RatMatrix::from_int_rows(&[&[0, 1, 1], &[2, 0, 0], &[0, 5, 0]]);
        let xy = x.mul(&y).unwrap();
        let yx = y.mul(&x).unwrap();
        let bracket = RatMatrix::from_fn(3, 3, |i, j| &xy[(i, j)] - &yx[(i, j)]);
        for kind in [RepKind::Standard, RepKind::Dual, RepKind::Wedge2, RepKind::Sym(3)] {
            let rep = make_rep(kind, 3).unwrap();
            let v = RepVector::from_terms(
                &rep,
                (0..rep.dim()).map(|i| (i, rat(i as i64 + 1))).collect(),
            )
            .unwrap();
            let lhs = act(&rep, &bracket, &v).unwrap();
            let xv = act(&rep, &x, &v).unwrap();
            let yv = act(&rep, &y, &v).unwrap();
            let xyv = act(&rep, &x, &yv).unwrap();
            let yxv = act(&rep, &y, &xv).unwrap();
            let rhs = RepVector::from_terms(
                &rep,
                xyv.terms()
                    .map(|(i, c)| (i, c.clone()))
                    .chain(yxv.terms().map(|(i, c)| (i, -c.clone())))
                    .collect(),
            )
            .unwrap();
            assert_eq!(lhs, rhs, "kind {kind:?}");
        }
    }

    #[test]
    fn support_weights_dedup_and_zero() {
        let rep = make_rep(RepKind::Wedge2, 4).unwrap();
        let i = |a: usize, b: usize| rep.index_of(&BasisLabel::Wedge(a, b)).unwrap();
        let v = RepVector::from_terms(
            &rep,
            vec![(i(0, 2), rat(1)), (i(1, 3), rat(1))],
        )
        .unwrap();
        let ws = support_weights(&rep, &v).unwrap();
        assert_eq!(ws, vec![int_vec(&[1, 0, 1, 0]), int_vec(&[0, 1, 0, 1])]);
        assert!(matches!(
            support_weights(&rep, &RepVector::zero()),
            Err(Error::ZeroVector)
        ));
    }

    #[test]
    fn torus_lattice_of_highest_weight_vector() {
        let rep = make_rep(RepKind::Sym(3), 2).unwrap();
        let top = rep.index_of(&BasisLabel::Monomial(vec![3, 0])).unwrap();
        let l = stabilizer_torus_lattice(&rep, &e(&rep, top)).unwrap();
        assert_eq!(l.basis(), &[int_vec(&[3, 0])]);
    }

    #[test]
    fn label_roundtrip() {
        for (kind, n, s) in [
            (RepKind::Standard, 4, "e3"),
            (RepKind::Dual, 4, "e4*"),
            (RepKind::Wedge2, 5, "e2^e5"),
            (RepKind::Sym(3), 2, "e1^2*e2"),
            (RepKind::Sym(2), 3, "e1*e3"),
            (RepKind::Sym(4), 2, "e2^4"),
        ] {
            let rep = make_rep(kind, n).unwrap();
            let idx = rep.parse_label(s).unwrap();
            assert_eq!(rep.label(idx).to_string(), s);
        }
        let w = make_rep(RepKind::Wedge2, 4).unwrap();
        assert!(w.parse_label("e3^e2").is_err());
        assert!(w.parse_label("e1^e9").is_err());
        assert!(w.parse_label("e1").is_err());
        let s = make_rep(RepKind::Sym(2), 2).unwrap();
        assert!(s.parse_label("e1^3").is_err()); // wrong degree
        assert!(s.parse_label("x1").is_err());
    }
}
