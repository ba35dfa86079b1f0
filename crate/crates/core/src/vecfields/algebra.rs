use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rand::Rng;

use super::field::PolyVectorField;
use super::forms::{lie_derivative, ConstantForm};
use super::poly::MultiIndex;
use crate::error::{Error, Result};
use crate::linalg::{Echelon, SparseVec, Subspace};
use crate::scalar::{binomial, Scalar};

/// Divergence-free (A) or symplectic (C) vector fields.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AlgebraType {
    A,
    C,
}

impl AlgebraType {
    pub fn check_dim(self, dim: usize) -> Result<()> {
        if self == AlgebraType::C && dim % 2 == 1 {
            return Err(Error::OddSymplectic(dim));
        }
        Ok(())
    }

    /// The constant form whose stabiliser defines the algebra.
    pub fn form<S: Scalar>(self, dim: usize) -> Result<ConstantForm<S>> {
        self.check_dim(dim)?;
        Ok(match self {
            AlgebraType::A => ConstantForm::volume(dim),
            AlgebraType::C => ConstantForm::symplectic(dim),
        })
    }

    /// Closed-form `dim Vect_n` of this type.
    pub fn expected_dim(self, dim: usize, n: u32) -> u64 {
        let (nn, n) = (dim as i64, n as i64);
        let v = match self {
            AlgebraType::A => binomial(nn + n, n + 1) * nn - binomial(nn + n - 1, n),
            AlgebraType::C => binomial(nn + n + 1, n + 2),
        };
        u64::try_from(v).expect("dimension fits in u64")
    }
}

impl fmt::Display for AlgebraType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AlgebraType::A => "A",
            AlgebraType::C => "C",
        })
    }
}

impl FromStr for AlgebraType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(AlgebraType::A),
            "C" | "c" => Ok(AlgebraType::C),
            _ => Err(Error::Parse(format!("unknown algebra type '{s}'"))),
        }
    }
}

/// Coordinates on `Sym^{n+1}(V*) (x) V`, indexed by `(s, dir)`.
#[derive(Clone, Debug)]
pub struct FieldCoordinates {
    dim: usize,
    keys: Vec<(MultiIndex, usize)>,
    index: HashMap<(MultiIndex, usize), usize>,
}

impl FieldCoordinates {
    pub fn new(dim: usize, n: u32) -> Self {
        let mut keys = Vec::new();
        for s in MultiIndex::all_of_degree(dim, n + 1) {
            for dir in 1..=dim {
                keys.push((s.clone(), dir));
            }
        }
        let index = keys.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
        FieldCoordinates { dim, keys, index }
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    /// Coordinates of `v`, which must be homogeneous of this degree.
    pub fn coordinates<S: Scalar>(&self, v: &PolyVectorField<S>) -> SparseVec<S> {
        let mut out: Vec<(usize, S)> = v
            .terms()
            .map(|(s, dir, c)| {
                let i = self.index.get(&(s.clone(), dir)).expect("vector field has the wrong degree");
                (*i, c.clone())
            })
            .collect();
        out.sort_by_key(|(i, _)| *i);
        out
    }

    pub fn field<S: Scalar>(&self, coords: &[(usize, S)]) -> PolyVectorField<S> {
        let mut v = PolyVectorField::zero(self.dim);
        for (i, c) in coords {
            let (s, dir) = &self.keys[*i];
            v.add_term(s.clone(), *dir, c.clone());
        }
        v
    }
}

/// Basis of `Vect_n(V, w)` as the exact kernel of `v -> L_v w` on degree-`n` fields.
pub fn basis_graded<S: Scalar>(kind: AlgebraType, dim: usize, n: u32) -> Result<Vec<PolyVectorField<S>>> {
    let w = kind.form::<S>(dim)?;
    let coords = FieldCoordinates::new(dim, n);
    // rows of the constraint matrix: (form index, monomial) -> row
    let mut row_of: HashMap<(Vec<usize>, MultiIndex), usize> = HashMap::new();
    let mut rows: Vec<Vec<(usize, S)>> = Vec::new();
    for (col, (s, dir)) in coords.keys.iter().enumerate() {
        let v = PolyVectorField::monomial(s.clone(), *dir, S::one());
        for (idx, p) in lie_derivative(&v, &w).components() {
            for (t, c) in p.terms() {
                let next = row_of.len();
                let r = *row_of.entry((idx.clone(), t.clone())).or_insert(next);
                if r == rows.len() {
                    rows.push(Vec::new());
                }
                rows[r].push((col, c.clone()));
            }
        }
    }
    let mut ech = Echelon::new(coords.len());
    for r in rows {
        ech.insert(r);
    }
    Ok(ech.kernel().iter().map(|k| coords.field(k)).collect())
}

/// Outcome of [`generation_check`] at one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeRank {
    pub degree: u32,
    pub achieved: usize,
    pub expected: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenerationReport {
    pub kind: AlgebraType,
    pub dim: usize,
    pub g1: String,
    pub degrees: Vec<DegreeRank>,
}

impl GenerationReport {
    pub fn full_rank(&self) -> bool {
        self.degrees.iter().all(|d| d.achieved == d.expected)
    }
}

/// `x1^2 d/dx2`, which lies in degree 1 of both types.
pub fn default_g1<S: Scalar>(dim: usize) -> PolyVectorField<S> {
    let mut s = MultiIndex::zero(dim);
    let mut exps = s.exponents().to_vec();
    exps[0] = 2;
    s = MultiIndex::new(exps);
    PolyVectorField::monomial(s, 2.min(dim), S::one())
}

/// A random non-zero element of `Vect_n` with small integer coordinates in the kernel basis.
pub fn random_element<S: Scalar, R: Rng>(
    kind: AlgebraType,
    dim: usize,
    n: u32,
    rng: &mut R,
) -> Result<PolyVectorField<S>> {
    let basis = basis_graded::<S>(kind, dim, n)?;
    loop {
        let mut v = PolyVectorField::zero(dim);
        for b in &basis {
            v.add_scaled(b, &S::from_int(rng.gen_range(-3..=3)));
        }
        if !v.is_zero() {
            return Ok(v);
        }
    }
}

/// Checks that `Vect_0` together with `g1` generates every `Vect_n`, `n <= n_max`.
pub fn generation_check<S: Scalar>(
    kind: AlgebraType,
    dim: usize,
    n_max: u32,
    g1: Option<&PolyVectorField<S>>,
) -> Result<GenerationReport> {
    let g1 = g1.cloned().unwrap_or_else(|| default_g1(dim));
    if g1.is_zero() || g1.degree() != Some(1) || !lie_derivative(&g1, &kind.form(dim)?).is_zero() {
        return Err(Error::InvalidG1);
    }
    let g0 = basis_graded::<S>(kind, dim, 0)?;
    let mut generated: Vec<Vec<PolyVectorField<S>>> = vec![g0.clone()];
    let mut degrees = Vec::new();
    for n in 1..=n_max {
        let coords = FieldCoordinates::new(dim, n);
        let mut span = Subspace::new(coords.len());
        let mut basis: Vec<PolyVectorField<S>> = Vec::new();
        let mut queue: Vec<PolyVectorField<S>> = Vec::new();
        let offer = |v: PolyVectorField<S>, span: &mut Subspace<S>, queue: &mut Vec<PolyVectorField<S>>| {
            if !v.is_zero() && span.insert(coords.coordinates(&v)) {
                queue.push(v);
            }
        };
        if n == 1 {
            offer(g1.clone(), &mut span, &mut queue);
        } else {
            for a in 1..n {
                for x in &generated[a as usize] {
                    for y in &generated[(n - a) as usize] {
                        offer(x.bracket(y), &mut span, &mut queue);
                    }
                }
            }
        }
        // close under ad(Vect_0)
        while let Some(v) = queue.pop() {
            for g in &g0 {
                offer(g.bracket(&v), &mut span, &mut queue);
            }
            basis.push(v);
        }
        degrees.push(DegreeRank { degree: n, achieved: span.dim(), expected: basis_graded::<S>(kind, dim, n)?.len() });
        generated.push(basis);
    }
    Ok(GenerationReport { kind, dim, g1: g1.to_string(), degrees })
}
