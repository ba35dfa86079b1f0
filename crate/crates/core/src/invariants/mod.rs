//! Invariant subspaces of W+ under the vector-field action, the span of the
//! generated vertex algebra, and their graded dimensions.

mod character;
mod oracle;

use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

use crate::action::ActionOperator;
use crate::error::{Error, Result};
use crate::fock::{SpaceCache, State, WeightSpace};
use crate::linalg::{stacked_kernel, Echelon, SparseMatrix, SparseVec, Subspace};
use crate::scalar::Scalar;
use crate::vecfields::{basis_graded, default_g1, lie_derivative, AlgebraType, PolyVectorField};

pub use character::{basis_character, product_character, CharacterTable};
pub use oracle::{generators, oracle_span, OracleSpan};

/// The operators `L+(g_0)` and `L+(g1)` for one algebra, with shared weight spaces.
pub struct InvariantContext<S> {
    pub kind: AlgebraType,
    pub dim: usize,
    pub g1: PolyVectorField<S>,
    cache: Arc<SpaceCache>,
    g0_ops: Vec<ActionOperator<S>>,
    g1_op: ActionOperator<S>,
}

/// Rejects a zero field or one outside degree 1 of the algebra.
pub fn validate_g1<S: Scalar>(kind: AlgebraType, dim: usize, g1: &PolyVectorField<S>) -> Result<()> {
    kind.check_dim(dim)?;
    if g1.dim() != dim || g1.is_zero() || g1.degree() != Some(1) || !lie_derivative(g1, &kind.form(dim)?).is_zero() {
        return Err(Error::InvalidG1);
    }
    Ok(())
}

impl<S: Scalar> InvariantContext<S> {
    pub fn new(kind: AlgebraType, dim: usize, g1: Option<PolyVectorField<S>>) -> Result<Self> {
        Self::with_cache(kind, Arc::new(SpaceCache::plus(dim)), g1)
    }

    pub fn with_cache(kind: AlgebraType, cache: Arc<SpaceCache>, g1: Option<PolyVectorField<S>>) -> Result<Self> {
        let dim = cache.dim_v();
        kind.check_dim(dim)?;
        let g1 = g1.unwrap_or_else(|| default_g1(dim));
        validate_g1(kind, dim, &g1)?;
        let g0_ops = basis_graded::<S>(kind, dim, 0)?.iter().map(ActionOperator::l_plus).collect();
        let g1_op = ActionOperator::l_plus(&g1);
        Ok(InvariantContext { kind, dim, g1, cache, g0_ops, g1_op })
    }

    pub fn cache(&self) -> &Arc<SpaceCache> {
        &self.cache
    }

    pub fn space(&self, k: i64, l: i64) -> Arc<WeightSpace> {
        self.cache.get(k, l)
    }

    /// Basis of `W+[k,l]^{g_0}`.
    pub fn g0_invariants(&self, k: i64, l: i64) -> Result<Vec<SparseVec<S>>> {
        let ws = self.space(k, l);
        let mats: Vec<Arc<SparseMatrix<S>>> = self.g0_ops.iter().map(|op| op.matrix(&ws)).collect::<Result<_>>()?;
        let refs: Vec<&SparseMatrix<S>> = mats.iter().map(|m| m.as_ref()).collect();
        Ok(stacked_kernel(ws.dim(), &refs))
    }

    /// Basis of `(W+[k,l]^{g_0})^{L+(g1)}` in reduced echelon form, together
    /// with the dimension of the `g_0` invariants.
    pub fn full_invariants(&self, k: i64, l: i64) -> Result<(usize, Vec<SparseVec<S>>)> {
        let ws = self.space(k, l);
        let g0 = self.g0_invariants(k, l)?;
        let m = self.g1_op.matrix(&ws)?;
        // columns: images of the g_0-invariant basis vectors
        let restricted = SparseMatrix::from_columns(ws.dim(), g0.iter().map(|v| m.mul_vec(v)).collect());
        let combos = stacked_kernel(g0.len(), &[&restricted]);
        let mut span = Subspace::new(ws.dim());
        for c in combos {
            let mut v: SparseVec<S> = Vec::new();
            for (i, x) in c {
                v = crate::linalg::axpy(&v, &x, &g0[i]);
            }
            span.insert(v);
        }
        Ok((g0.len(), span.basis()))
    }

    /// Joint kernel of `L+` over full bases of `g_0, ..., g_nmax`.
    pub fn graded_invariants(&self, k: i64, l: i64, nmax: u32) -> Result<Vec<SparseVec<S>>> {
        let ws = self.space(k, l);
        let mut ech = Echelon::new(ws.dim());
        for n in 0..=nmax {
            for v in basis_graded::<S>(self.kind, self.dim, n)? {
                for r in ActionOperator::l_plus(&v).matrix(&ws)?.rows() {
                    ech.insert(r);
                }
            }
        }
        Ok(ech.kernel())
    }
}

/// Dimensions and invariant basis at one grade.
#[derive(Clone, Debug)]
pub struct InvariantReport<S> {
    pub kind: AlgebraType,
    pub dim: usize,
    pub grade: (i64, i64),
    pub g1: String,
    pub dim_basis: usize,
    pub dim_g0_invariants: usize,
    pub dim_full_invariants: usize,
    pub dim_oracle_span: Option<usize>,
    pub basis: Vec<State<S>>,
}

/// Invariants at a single grade (no oracle comparison).
pub fn invariant_space<S: Scalar>(
    kind: AlgebraType,
    dim: usize,
    k: i64,
    l: i64,
    g1: Option<PolyVectorField<S>>,
) -> Result<InvariantReport<S>> {
    let ctx = InvariantContext::new(kind, dim, g1)?;
    grade_report(&ctx, k, l)
}

fn grade_report<S: Scalar>(ctx: &InvariantContext<S>, k: i64, l: i64) -> Result<InvariantReport<S>> {
    let ws = ctx.space(k, l);
    let (g0, full) = ctx.full_invariants(k, l)?;
    Ok(InvariantReport {
        kind: ctx.kind,
        dim: ctx.dim,
        grade: (k, l),
        g1: ctx.g1.to_string(),
        dim_basis: ws.dim(),
        dim_g0_invariants: g0,
        dim_full_invariants: full.len(),
        dim_oracle_span: None,
        basis: full.iter().map(|v| ws.state_from_coordinates(v)).collect(),
    })
}

/// Comparison of invariants with the generated algebra at one grade.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Comparison {
    Match,
    Gap { witness: String },
    NotContained { witness: String },
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Comparison::Match => write!(f, "MATCH"),
            Comparison::Gap { .. } => write!(f, "GAP"),
            Comparison::NotContained { .. } => write!(f, "NOT_CONTAINED"),
        }
    }
}

/// One row of a graded invariant table.
#[derive(Clone, Debug)]
pub struct GradeRow<S> {
    pub report: InvariantReport<S>,
    pub comparison: Comparison,
}

/// All grades with weight `<= kmax` (optionally restricted in charge),
/// ordered by `(k, l)`, each compared against the oracle span.
///
/// Grades are computed in parallel on the current rayon pool; the result does
/// not depend on scheduling.
pub fn invariant_table<S: Scalar>(
    ctx: &InvariantContext<S>,
    kmax: i64,
    charges: Option<(i64, i64)>,
) -> Result<Vec<GradeRow<S>>> {
    let grades: Vec<(i64, i64)> = ctx
        .cache
        .grades(kmax)
        .into_iter()
        .filter(|(_, l)| charges.is_none_or(|(lo, hi)| lo <= *l && *l <= hi))
        .collect();
    let oracle = oracle_span::<S>(ctx.kind, &ctx.cache, kmax)?;
    let rows: Vec<Result<GradeRow<S>>> = grades
        .par_iter()
        .map(|&(k, l)| {
            let mut report = grade_report(ctx, k, l)?;
            let ws = ctx.space(k, l);
            let empty = Subspace::new(ws.dim());
            let span = oracle.span(k, l).unwrap_or(&empty);
            report.dim_oracle_span = Some(span.dim());
            let inv = Subspace::spanned_by(
                ws.dim(),
                report.basis.iter().map(|s| ws.coordinates(s)).collect::<Result<Vec<_>>>()?,
            );
            let comparison = compare(&ws, span, &inv);
            Ok(GradeRow { report, comparison })
        })
        .collect();
    rows.into_iter().collect()
}

fn compare<S: Scalar>(ws: &WeightSpace, oracle: &Subspace<S>, inv: &Subspace<S>) -> Comparison {
    if let Some(v) = oracle.basis().into_iter().find(|v| !inv.contains(v.clone())) {
        return Comparison::NotContained { witness: ws.state_from_coordinates::<S>(&v).to_string() };
    }
    if let Some(v) = inv.basis().into_iter().find(|v| !oracle.contains(v.clone())) {
        return Comparison::Gap { witness: ws.state_from_coordinates::<S>(&v).to_string() };
    }
    Comparison::Match
}

/// Graded dimensions of one of the three sources.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CharacterSource {
    WeightSpaces,
    Invariants,
    Oracle,
}

pub fn character<S: Scalar>(
    source: CharacterSource,
    kind: AlgebraType,
    dim: usize,
    kmax: i64,
) -> Result<CharacterTable> {
    match source {
        CharacterSource::WeightSpaces => basis_character(dim, kmax),
        CharacterSource::Invariants => {
            let ctx = InvariantContext::<S>::new(kind, dim, None)?;
            let grades = ctx.cache.grades(kmax);
            let dims: Vec<Result<((i64, i64), u64)>> =
                grades.par_iter().map(|&(k, l)| Ok(((k, l), ctx.full_invariants(k, l)?.1.len() as u64))).collect();
            let mut out = CharacterTable::new();
            for r in dims {
                let (g, d) = r?;
                if d > 0 {
                    out.insert(g, d);
                }
            }
            Ok(out)
        }
        CharacterSource::Oracle => {
            let cache = SpaceCache::plus(dim);
            let span = oracle_span::<S>(kind, &cache, kmax)?;
            Ok(span.dims().into_iter().map(|(g, d)| (g, d as u64)).collect())
        }
    }
}

/// Evidence for the conjectured equality of invariants and the generated
/// algebra: one row per grade, plus the weight cap used.
#[derive(Clone, Debug)]
pub struct ConjectureEvidence<S> {
    pub kind: AlgebraType,
    pub dim: usize,
    pub kmax: i64,
    pub rows: Vec<GradeRow<S>>,
}

impl<S: Scalar> ConjectureEvidence<S> {
    /// The containment (oracle inside invariants) holds at every grade.
    pub fn contained(&self) -> bool {
        self.rows.iter().all(|r| !matches!(r.comparison, Comparison::NotContained { .. }))
    }

    pub fn gaps(&self) -> usize {
        self.rows.iter().filter(|r| matches!(r.comparison, Comparison::Gap { .. })).count()
    }
}

/// Default weight cap for evidence runs at `N = 3`.
pub const DEFAULT_EVIDENCE_KMAX: i64 = 2;

/// Runs the comparison for type A and, when `dim` is even, for type C as well.
pub fn conjecture_evidence<S: Scalar>(dim: usize, kmax: i64) -> Result<Vec<ConjectureEvidence<S>>> {
    let mut kinds = vec![AlgebraType::A];
    if dim.is_multiple_of(2) {
        kinds.push(AlgebraType::C);
    }
    let cache = Arc::new(SpaceCache::plus(dim));
    kinds
        .into_iter()
        .map(|kind| {
            let ctx = InvariantContext::<S>::with_cache(kind, cache.clone(), None)?;
            let rows = invariant_table(&ctx, kmax, None)?;
            Ok(ConjectureEvidence { kind, dim, kmax, rows })
        })
        .collect()
}

#[cfg(test)]
mod tests;
