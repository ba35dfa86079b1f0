use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use crate::error::Result;
use crate::fock::{translate, SpaceCache, State};
use crate::linalg::{SparseVec, Subspace};
use crate::scalar::Scalar;
use crate::vecfields::AlgebraType;
use crate::vertex::{composite_mode, generator_state, state_grade, GeneratorName, GradedMap};

/// Generator index, mode number and source grade.
type ModeKey = (usize, i64, (i64, i64));

/// Generators of the vertex algebra of each type.
pub fn generators(kind: AlgebraType) -> &'static [GeneratorName] {
    match kind {
        AlgebraType::A => &GeneratorName::TYPE_A,
        AlgebraType::C => &GeneratorName::TYPE_C,
    }
}

/// The span of the vertex algebra generated by the type's generators, per
/// grade up to `kmax`.
#[derive(Clone, Debug)]
pub struct OracleSpan<S> {
    pub kind: AlgebraType,
    pub dim: usize,
    pub kmax: i64,
    spans: BTreeMap<(i64, i64), Subspace<S>>,
}

impl<S: Scalar> OracleSpan<S> {
    pub fn dim_at(&self, k: i64, l: i64) -> usize {
        self.spans.get(&(k, l)).map_or(0, Subspace::dim)
    }

    pub fn span(&self, k: i64, l: i64) -> Option<&Subspace<S>> {
        self.spans.get(&(k, l))
    }

    /// Non-zero dimensions keyed by grade.
    pub fn dims(&self) -> BTreeMap<(i64, i64), usize> {
        self.spans.iter().filter(|(_, s)| s.dim() > 0).map(|(g, s)| (*g, s.dim())).collect()
    }
}

/// Closes `{1}` under all modes `g_(n)` of the generators and under the
/// translation, keeping every intermediate vector of weight `<= kmax`.
///
/// Every negative mode raises the weight, so all monomials in negative modes
/// of the generators are reached; non-negative modes are included as well.
pub fn oracle_span<S: Scalar>(kind: AlgebraType, cache: &SpaceCache, kmax: i64) -> Result<OracleSpan<S>> {
    let dim = cache.dim_v();
    kind.check_dim(dim)?;
    let gens: Vec<(State<S>, (i64, i64))> = generators(kind)
        .iter()
        .map(|g| {
            let s = generator_state::<S>(*g, dim)?;
            let grade = state_grade(&s)?;
            Ok((s, grade))
        })
        .collect::<Result<_>>()?;

    let mut spans: BTreeMap<(i64, i64), Subspace<S>> = BTreeMap::new();
    let mut mats: HashMap<ModeKey, Arc<GradedMap<S>>> = HashMap::new();
    let mut queue: Vec<((i64, i64), SparseVec<S>)> = Vec::new();

    let offer = |grade: (i64, i64), v: SparseVec<S>, spans: &mut BTreeMap<_, Subspace<S>>, queue: &mut Vec<_>| {
        if v.is_empty() {
            return;
        }
        let ws = cache.get(grade.0, grade.1);
        let span = spans.entry(grade).or_insert_with(|| Subspace::new(ws.dim()));
        if span.insert(v.clone()) {
            queue.push((grade, v));
        }
    };

    if kmax >= 0 {
        offer((0, 0), vec![(0, S::one())], &mut spans, &mut queue);
    }
    while let Some(((k, l), v)) = queue.pop() {
        let ws = cache.get(k, l);
        for (gi, (_, (wg, _))) in gens.iter().enumerate() {
            for n in (k + wg - 1 - kmax)..=(k + wg - 1) {
                let key = (gi, n, (k, l));
                let entry = match mats.get(&key) {
                    Some(m) => m.clone(),
                    None => {
                        let m = Arc::new(composite_mode(&gens[gi].0, n, &ws, cache)?);
                        mats.insert(key, m.clone());
                        m
                    }
                };
                let (m, target) = &*entry;
                offer(*target, m.mul_vec(&v), &mut spans, &mut queue);
            }
        }
        if k < kmax {
            let t = translate(&ws.state_from_coordinates(&v));
            let tgt = cache.get(k + 1, l);
            offer((k + 1, l), tgt.coordinates(&t)?, &mut spans, &mut queue);
        }
    }
    Ok(OracleSpan { kind, dim, kmax, spans })
}
