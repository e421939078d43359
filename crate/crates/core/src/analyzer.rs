//! The end-to-end determinant criterion: package (G, H, T_H) data as a
//! Problem, decompose the tangent space g/h into restricted-torus weight
//! spaces, sum them into the determinant character delta, and report the
//! two triviality verdicts. Includes the built-in example families and an
//! independent trace oracle for cross-checking delta.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::{pairing, scale_to_integers, AbelianQuotient, CharClass, Int, Lattice};
use crate::lie::{ad_diag_trace, MatrixLieAlgebra};
use crate::linalg::{Rat, RatMatrix};
use crate::rep::{make_rep, stabilizer_torus_lattice, BasisLabel, RepKind, RepVector, WeightRep};

/// Where a Problem came from; carried through to reports so output files
/// are self-describing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    /// Stabilizer of a vector in a weight representation.
    Orbit {
        kind: RepKind,
        n: usize,
        terms: Vec<(BasisLabel, Rat)>,
    },
    /// User-supplied subalgebra basis, with or without explicit relations.
    Direct {
        n: usize,
        dim_h: usize,
        relations_given: bool,
    },
}

/// One homogeneous-space instance: G = GL(n), H with Lie algebra h, the
/// relation lattice L cutting out the restricted torus T_H = T ∩ H inside
/// the diagonal torus, and the characters of G restricted to T.
#[derive(Debug, Clone)]
pub struct Problem {
    n: usize,
    h: MatrixLieAlgebra,
    relations: Lattice,
    g_character_lattice: Lattice,
    provenance: Provenance,
}

impl Problem {
    /// The orbit of v under GL(n): h is the stabilizer of v, L is spanned
    /// by the support weights of v. For v = 0 the stabilizer is all of
    /// gl(n) and the relation lattice is trivial.
    pub fn from_orbit(rep: &WeightRep, v: &RepVector) -> Result<Problem> {
        let n = rep.n();
        let h = MatrixLieAlgebra::stabilizer(rep, v)?;
        let relations = if v.is_zero() {
            Lattice::zero(n)
        } else {
            stabilizer_torus_lattice(rep, v)?
        };
        let terms = v
            .terms()
            .map(|(idx, c)| (rep.label(idx).clone(), c.clone()))
            .collect();
        let provenance = Provenance::Orbit {
            kind: rep.kind(),
            n,
            terms,
        };
        Problem::assemble(n, h, relations, None, provenance)
    }

    /// A problem from explicit parts. With `relations = None` the lattice
    /// is derived from the Lie algebra alone — the saturated annihilator of
    /// the diagonal part of h — which sees only the identity component of
    /// T_H; the provenance records that assumption.
    pub fn direct(
        h: MatrixLieAlgebra,
        relations: Option<Vec<Vec<Int>>>,
        g_characters: Option<Vec<Vec<Int>>>,
    ) -> Result<Problem> {
        let n = h.n();
        let relations_given = relations.is_some();
        let relations = match relations {
            Some(gens) => Lattice::new(n, gens)?,
            None => connected_relation_lattice(&h),
        };
        let g_character_lattice = match g_characters {
            Some(gens) => Some(Lattice::new(n, gens)?),
            None => None,
        };
        let provenance = Provenance::Direct {
            n,
            dim_h: h.dim(),
            relations_given,
        };
        Problem::assemble(n, h, relations, g_character_lattice, provenance)
    }

    fn assemble(
        n: usize,
        h: MatrixLieAlgebra,
        relations: Lattice,
        g_character_lattice: Option<Lattice>,
        provenance: Provenance,
    ) -> Result<Problem> {
        if relations.ambient_rank() != n {
            return Err(Error::SizeMismatch(format!(
                "relation lattice lives in Z^{}, expected Z^{n}",
                relations.ambient_rank()
            )));
        }
        let g_character_lattice = match g_character_lattice {
            Some(l) => {
                if l.ambient_rank() != n {
                    return Err(Error::SizeMismatch(format!(
                        "character lattice lives in Z^{}, expected Z^{n}",
                        l.ambient_rank()
                    )));
                }
                l
            }
            None => Lattice::new(n, vec![vec![Int::one(); n]])?,
        };
        let t_h = h.cartan_intersection();
        for l in relations.basis() {
            for t in t_h.basis() {
                if !pairing(l, t).is_zero() {
                    return Err(Error::InvalidProblem(
                        "a relation generator does not vanish on the diagonal part of h"
                            .into(),
                    ));
                }
            }
        }
        let expected = n - relations.rank();
        if t_h.dim() != expected {
            return Err(Error::InvalidProblem(format!(
                "diagonal part of h has dimension {}, but n - rank(L) = {expected}",
                t_h.dim()
            )));
        }
        Ok(Problem {
            n,
            h,
            relations,
            g_character_lattice,
            provenance,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn h(&self) -> &MatrixLieAlgebra {
        &self.h
    }

    pub fn relations(&self) -> &Lattice {
        &self.relations
    }

    pub fn g_character_lattice(&self) -> &Lattice {
        &self.g_character_lattice
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }
}

/// Relation lattice visible to Lie data alone: the saturated integer
/// annihilator of the diagonal part of h. Finite components of T_H are
/// invisible at this level, so the result is always a saturated lattice.
fn connected_relation_lattice(h: &MatrixLieAlgebra) -> Lattice {
    let n = h.n();
    let t_h = h.cartan_intersection();
    let mat = RatMatrix::from_fn(t_h.dim(), n, |i, j| t_h.basis()[i][j].clone());
    let kernel = mat.kernel_basis();
    let gens = kernel.basis().iter().map(|v| scale_to_integers(v)).collect();
    Lattice::new(n, gens)
        .expect("annihilator generators have ambient length")
        .saturation()
}

/// Fixed sign-convention note carried verbatim in every report.
pub const KAPPA_NOTE: &str = "delta is the determinant character of the restricted torus \
on the tangent space g/h (the anticanonical direction); the canonical character kappa \
is -delta, and both triviality verdicts are unchanged by the sign.";

/// Everything the determinant criterion produces for one Problem.
#[derive(Debug, Clone)]
pub struct AnalysisReport {
    pub dim_g: usize,
    pub dim_h: usize,
    pub dim_quotient: usize,
    pub character_group: AbelianQuotient,
    pub multiplicities: BTreeMap<CharClass, usize>,
    pub delta: CharClass,
    pub strict_trivial: bool,
    pub det_class: CharClass,
    /// Solutions of delta = m * det_class as (m0, period); None if delta is
    /// no integer multiple of the determinant class.
    pub g_multiple: Option<(Int, Int)>,
    pub kappa_note: &'static str,
}

/// Weight multiplicities of the restricted torus on g/h.
///
/// gl(n) splits under the diagonal torus into the E_ij (weight e_i − e_j)
/// and the diagonal (weight 0); positions are grouped by the class of their
/// weight in Z^n/L, and each class contributes dim gl(n)_c − dim(h ∩ gl(n)_c).
pub fn weight_multiplicities(p: &Problem) -> Result<BTreeMap<CharClass, usize>> {
    multiplicities_in(p, &AbelianQuotient::new(p.relations()))
}

fn multiplicities_in(p: &Problem, q: &AbelianQuotient) -> Result<BTreeMap<CharClass, usize>> {
    let n = p.n();
    let mut groups: BTreeMap<CharClass, Vec<usize>> = BTreeMap::new();
    for i in 0..n {
        for j in 0..n {
            let mut w = vec![Int::zero(); n];
            if i != j {
                w[i] = Int::one();
                w[j] = -Int::one();
            }
            groups.entry(q.reduce(&w)?).or_default().push(i * n + j);
        }
    }
    let flat = p.h().flat();
    let mut mults = BTreeMap::new();
    let mut covered = 0usize;
    for (class, coords) in groups {
        let cell_dim = coords.len();
        let h_dim = flat.coordinate_section(&coords).dim();
        covered += h_dim;
        if cell_dim > h_dim {
            mults.insert(class, cell_dim - h_dim);
        }
    }
    if covered != p.h().dim() {
        // h does not split along the weight cells, so conjugation by T_H
        // does not preserve it: the input is not a homogeneous-space pair
        return Err(Error::Decomposition {
            found: covered,
            expected: p.h().dim(),
        });
    }
    Ok(mults)
}

/// delta = sum of the classes counted with multiplicity, in Z^n/L.
pub fn determinant_character(
    mults: &BTreeMap<CharClass, usize>,
    q: &AbelianQuotient,
) -> CharClass {
    let mut acc = q.zero_class();
    for (class, &m) in mults {
        acc = q.add(&acc, &q.scale(class, &Int::from(m)));
    }
    acc
}

/// Runs the full criterion on one Problem.
pub fn analyze(p: &Problem) -> Result<AnalysisReport> {
    let q = AbelianQuotient::new(p.relations());
    let multiplicities = multiplicities_in(p, &q)?;
    let delta = determinant_character(&multiplicities, &q);
    let det_class = q.reduce(&vec![Int::one(); p.n()])?;
    let g_multiple = q.solve_multiple(&delta, &det_class);
    let dim_h = p.h().dim();
    Ok(AnalysisReport {
        dim_g: p.n() * p.n(),
        dim_h,
        dim_quotient: p.n() * p.n() - dim_h,
        strict_trivial: delta.is_zero(),
        character_group: q,
        multiplicities,
        delta,
        det_class,
        g_multiple,
        kappa_note: KAPPA_NOTE,
    })
}

/// Cone over the second secant variety of the Grassmannian Gr(2, n): the
/// orbit of the rank-2 form e1^e3 + e2^e4 in the second exterior power.
pub fn builtin_secant(n: usize) -> Result<Problem> {
    if n < 5 {
        return Err(Error::InvalidParameter(format!(
            "secant family needs n >= 5, got {n}"
        )));
    }
    let rep = make_rep(RepKind::Wedge2, n)?;
    let i13 = rep
        .index_of(&BasisLabel::Wedge(0, 2))
        .expect("pair in range");
    let i24 = rep
        .index_of(&BasisLabel::Wedge(1, 3))
        .expect("pair in range");
    let v = RepVector::from_terms(&rep, vec![(i13, Rat::one()), (i24, Rat::one())])?;
    Problem::from_orbit(&rep, &v)
}

/// Cone over the degree-k rational normal curve: the orbit of e1^k in
/// Sym^k(C^2).
pub fn builtin_rnc(k: u32) -> Result<Problem> {
    if k < 1 {
        return Err(Error::InvalidParameter(format!(
            "rational normal curve family needs k >= 1, got {k}"
        )));
    }
    let rep = make_rep(RepKind::Sym(k), 2)?;
    let top = rep
        .index_of(&BasisLabel::Monomial(vec![k, 0]))
        .expect("e1^k is a basis monomial");
    let v = RepVector::single(&rep, top, Rat::one())?;
    Problem::from_orbit(&rep, &v)
}

/// Independent check of delta: for diagonal t in the Lie algebra of T_H,
/// the pairing of delta with t equals the trace of ad(t) on g/h, which is
/// -trace(ad(t) on h) since ad(t) is traceless on gl(n). Computed without
/// touching the weight decomposition.
pub fn trace_oracle(p: &Problem, t: &[Rat]) -> Result<Rat> {
    if t.len() != p.n() {
        return Err(Error::SizeMismatch(format!(
            "diagonal vector of length {}, expected {}",
            t.len(),
            p.n()
        )));
    }
    for l in p.relations().basis() {
        if !pairing(l, t).is_zero() {
            return Err(Error::NotInRestrictedCartan);
        }
    }
    Ok(-ad_diag_trace(p.h(), t)?)
}
