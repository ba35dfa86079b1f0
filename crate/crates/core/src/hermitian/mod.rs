//! The Hermitian form on W+ in which monomials are orthogonal, and exact
//! checks of the adjunction relations between generator modes.

use std::fmt;

use crate::error::{Error, Result};
use crate::fock::{apply_mode, Flavor, Mode, Monomial, SpaceCache, Species, State, WeightSpace};
use crate::linalg::SparseMatrix;
use crate::scalar::Scalar;
use crate::vertex::{composite_mode, generator_state, state_grade, GeneratorName};

/// `(m, m)` for a canonical PLUS monomial: each bosonic mode with multiplicity
/// `r` contributes `r! w^r`, with `w(beta_(n)) = -n` and `w(gamma_(n)) = 1 / (-n - 1)`.
pub fn norm_squared<S: Scalar>(m: &Monomial) -> S {
    let mut out = S::one();
    let modes = m.modes();
    let mut i = 0;
    while i < modes.len() {
        let mode = modes[i];
        let mut r = 1;
        while i + r < modes.len() && modes[i + r] == mode {
            r += 1;
        }
        let w = match mode.species {
            Species::Beta => S::from_int(-(mode.n as i64)),
            Species::Gamma => S::from_frac(1, -(mode.n as i64) - 1),
            Species::B | Species::C => S::one(),
        };
        for k in 1..=r {
            out *= S::from_int(k as i64);
            out *= &w;
        }
        i += r;
    }
    out
}

/// `(a, b)`; scalars are real so no conjugation is needed.
pub fn inner<S: Scalar>(a: &State<S>, b: &State<S>) -> Result<S> {
    if a.flavor() == Flavor::Full || b.flavor() == Flavor::Full {
        return Err(Error::FullFlavorInner);
    }
    let mut out = S::zero();
    for (m, x) in a.terms() {
        let y = b.coefficient(m);
        if !y.is_zero() {
            out += &(x.clone() * y * norm_squared::<S>(m));
        }
    }
    Ok(out)
}

/// The (diagonal) Gram matrix of a PLUS weight space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramMatrix<S> {
    pub grade: (i64, i64),
    pub diagonal: Vec<S>,
}

impl<S: Scalar> GramMatrix<S> {
    pub fn new(ws: &WeightSpace) -> Result<Self> {
        if ws.flavor == Flavor::Full {
            return Err(Error::FullFlavorInner);
        }
        Ok(GramMatrix { grade: ws.grade(), diagonal: ws.basis().iter().map(norm_squared).collect() })
    }

    pub fn is_positive_definite(&self) -> bool {
        self.diagonal.iter().all(|d| d.is_positive())
    }
}

/// Generator families with a known adjoint.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AdjointFamily {
    Q,
    J,
    L,
    D,
    Dp,
}

impl AdjointFamily {
    pub const ALL: [AdjointFamily; 5] =
        [AdjointFamily::Q, AdjointFamily::J, AdjointFamily::L, AdjointFamily::D, AdjointFamily::Dp];

    pub fn generator(self) -> GeneratorName {
        match self {
            AdjointFamily::Q => GeneratorName::Q,
            AdjointFamily::J => GeneratorName::J,
            AdjointFamily::L => GeneratorName::L,
            AdjointFamily::D => GeneratorName::D,
            AdjointFamily::Dp => GeneratorName::Dp,
        }
    }

    /// The adjoint of the n-th mode as `sum coef * B_(m)`.
    pub fn adjoint(self, n: i64, dim: usize) -> Vec<(i64, GeneratorName, i64)> {
        match self {
            AdjointFamily::Q => vec![(1, GeneratorName::G, 1 - n)],
            AdjointFamily::J => vec![(1, GeneratorName::J, -n)],
            AdjointFamily::L => vec![(1, GeneratorName::L, 2 - n), (-(n - 1), GeneratorName::J, 1 - n)],
            AdjointFamily::D => {
                let nn = dim as i64;
                let sign = if (nn * (nn - 1) / 2) % 2 == 0 { 1 } else { -1 };
                vec![(sign, GeneratorName::E, nn - 2 - n)]
            }
            AdjointFamily::Dp => vec![(-1, GeneratorName::Ep, -n)],
        }
    }

    pub fn relation(self, n: i64, dim: usize) -> String {
        let rhs: Vec<String> = self
            .adjoint(n, dim)
            .iter()
            .map(|(c, g, m)| if *c == 1 { format!("{}_({m})", g.name()) } else { format!("{c} {}_({m})", g.name()) })
            .collect();
        format!("{}*_({n}) = {}", self.generator().name(), rhs.join(" + "))
    }
}

/// The first entry where `M(op)^T Gram_target != Gram_source M(adjoint)`;
/// `row` indexes the source basis and `column` the target basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjointWitness {
    pub relation: String,
    pub source: (i64, i64),
    pub target: (i64, i64),
    pub row: String,
    pub column: String,
    pub lhs: String,
    pub rhs: String,
}

impl fmt::Display for AdjointWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} fails from {:?} to {:?} at ({}, {}): {} != {}",
            self.relation, self.source, self.target, self.row, self.column, self.lhs, self.rhs
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjointReport {
    pub family: AdjointFamily,
    pub dim: usize,
    pub kmax: i64,
    pub checked: usize,
    pub failure: Option<AdjointWitness>,
}

impl AdjointReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Compares `A^T G_t` with `G_s B`, where `A: s -> t` and `B: t -> s`.
fn compare<S: Scalar>(
    a: &SparseMatrix<S>,
    b: &SparseMatrix<S>,
    src: &WeightSpace,
    tgt: &WeightSpace,
) -> Option<(usize, usize, S, S)> {
    let gs = GramMatrix::<S>::new(src).ok()?.diagonal;
    let gt = GramMatrix::<S>::new(tgt).ok()?.diagonal;
    let lhs = a.scale_rows(&gt).transpose();
    let rhs = b.scale_rows(&gs);
    lhs.first_difference(&rhs)
}

/// Verifies one adjunction family on every grade with weight `<= kmax`.
///
/// `inject_sign_flip` negates the adjoint side; it exists only as a negative
/// control for the checker itself.
pub fn adjoint_check<S: Scalar>(
    family: AdjointFamily,
    cache: &SpaceCache,
    kmax: i64,
    inject_sign_flip: bool,
) -> Result<AdjointReport> {
    let dim = cache.dim_v();
    let op = generator_state::<S>(family.generator(), dim)?;
    let (wa, _) = state_grade(&op)?;
    let mut checked = 0;
    for (k, l) in cache.grades(kmax) {
        let src = cache.get(k, l);
        // target weight k + wa - n - 1 must lie in 0..=kmax
        for n in (k + wa - 1 - kmax)..=(k + wa - 1) {
            let (a, tgrade) = composite_mode(&op, n, &src, cache)?;
            let tgt = cache.get(tgrade.0, tgrade.1);
            let mut b = SparseMatrix::zeros(src.dim(), tgt.dim());
            for (c, name, m) in family.adjoint(n, dim) {
                let g = generator_state::<S>(name, dim)?;
                let (mb, back) = composite_mode(&g, m, &tgt, cache)?;
                if mb.nnz() > 0 && back != (k, l) {
                    return Err(Error::Dimension(format!("adjoint of {} lands in {back:?}", family.relation(n, dim))));
                }
                if back == (k, l) {
                    let sign = if inject_sign_flip { -c } else { c };
                    b = b.add_scaled(&mb, &S::from_int(sign));
                }
            }
            checked += 1;
            if let Some((i, j, x, y)) = compare(&a, &b, &src, &tgt) {
                let failure = AdjointWitness {
                    relation: family.relation(n, dim),
                    source: (k, l),
                    target: tgrade,
                    row: src.basis()[i].to_string(),
                    column: tgt.basis()[j].to_string(),
                    lhs: x.to_string(),
                    rhs: y.to_string(),
                };
                return Ok(AdjointReport { family, dim, kmax, checked, failure: Some(failure) });
            }
        }
    }
    Ok(AdjointReport { family, dim, kmax, checked, failure: None })
}

fn mode_matrix<S: Scalar>(mode: Mode, src: &WeightSpace, tgt: &WeightSpace) -> Result<SparseMatrix<S>> {
    let mut cols = Vec::with_capacity(src.dim());
    for i in 0..src.dim() {
        let image = apply_mode(mode, &src.basis_state::<S>(i))?;
        cols.push(tgt.coordinates(&image)?);
    }
    Ok(SparseMatrix::from_columns(tgt.dim(), cols))
}

/// `(beta_(n) A, B) = (A, n gamma_(-n-1) B)` for `n != 0` and
/// `(b_(n) A, B) = (A, c_(-n-1) B)` as matrices on all grades with weight `<= kmax`.
/// Returns a description of the first failure.
pub fn single_mode_check<S: Scalar>(cache: &SpaceCache, kmax: i64) -> Result<Option<String>> {
    let dim = cache.dim_v() as u8;
    for (k, l) in cache.grades(kmax) {
        let src = cache.get(k, l);
        for dir in 1..=dim {
            for n in -(kmax as i32) - 1..=(kmax as i32) + 1 {
                for species in [Species::Beta, Species::B] {
                    if species == Species::Beta && n == 0 {
                        continue;
                    }
                    let mode = Mode::new(species, dir, n);
                    let tk = k + mode.weight_shift();
                    if tk < 0 || tk > kmax {
                        continue;
                    }
                    let tgt = cache.get(tk, l + mode.charge());
                    let a = mode_matrix::<S>(mode, &src, &tgt)?;
                    let (adj, c) = match species {
                        Species::Beta => (Mode::gamma(dir, -n - 1), S::from_int(n as i64)),
                        _ => (Mode::c(dir, -n - 1), S::one()),
                    };
                    let b = SparseMatrix::zeros(src.dim(), tgt.dim()).add_scaled(&mode_matrix(adj, &tgt, &src)?, &c);
                    if let Some((i, j, x, y)) = compare(&a, &b, &src, &tgt) {
                        return Ok(Some(format!(
                            "{mode} on {:?}: entry ({}, {}) {} != {}",
                            (k, l),
                            src.basis()[i],
                            tgt.basis()[j],
                            x,
                            y
                        )));
                    }
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests;
