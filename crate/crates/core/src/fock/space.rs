use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::mode::{Mode, Species};
use super::monomial::{Monomial, Word};
use super::state::{Flavor, State};

/// All canonical monomials of a fixed (weight, charge), with a reverse index.
#[derive(Clone, Debug)]
pub struct WeightSpace {
    pub flavor: Flavor,
    pub dim_v: usize,
    pub weight: i64,
    pub charge: i64,
    pub gamma_bound: Option<u32>,
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl WeightSpace {
    fn from_basis(
        flavor: Flavor,
        dim_v: usize,
        weight: i64,
        charge: i64,
        gamma_bound: Option<u32>,
        mut basis: Vec<Monomial>,
    ) -> Self {
        basis.sort();
        let index = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        WeightSpace { flavor, dim_v, weight, charge, gamma_bound, basis, index }
    }

    /// The zero-dimensional space, used for grades with negative weight.
    pub fn empty(flavor: Flavor, dim_v: usize, weight: i64, charge: i64) -> Self {
        Self::from_basis(flavor, dim_v, weight, charge, None, Vec::new())
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn grade(&self) -> (i64, i64) {
        (self.weight, self.charge)
    }

    pub fn basis_state<S: Scalar>(&self, i: usize) -> State<S> {
        State::from_monomial(self.basis[i].clone(), self.flavor)
    }

    /// Coordinates of a state in this basis, sorted by index.
    ///
    /// Fails if the state has a term outside the space.
    pub fn coordinates<S: Scalar>(&self, s: &State<S>) -> Result<Vec<(usize, S)>> {
        let mut out = Vec::with_capacity(s.len());
        for (m, c) in s.terms() {
            let i = self.index_of(m).ok_or_else(|| {
                Error::Dimension(format!("monomial {m} is not in W[{}, {}]", self.weight, self.charge))
            })?;
            out.push((i, c.clone()));
        }
        out.sort_by_key(|(i, _)| *i);
        Ok(out)
    }

    pub fn state_from_coordinates<S: Scalar>(&self, coords: &[(usize, S)]) -> State<S> {
        let mut s = State::zero(self.flavor);
        for (i, c) in coords {
            s.add_term(self.basis[*i].clone(), c.clone());
        }
        s
    }
}

/// Creation modes of weight at most `max_weight`, in canonical order.
fn candidate_modes(flavor: Flavor, dim_v: usize, max_weight: i64) -> Vec<Mode> {
    let mut out = Vec::new();
    for species in Species::ALL {
        for dir in 1..=dim_v as u8 {
            for n in (-(max_weight as i32) - 1)..=-1 {
                let m = Mode::new(species, dir, n);
                let w = m.weight_shift();
                if w < 0 || w > max_weight {
                    continue;
                }
                if m.is_gamma_zero_weight() && flavor == Flavor::Plus {
                    continue;
                }
                out.push(m);
            }
        }
    }
    out.sort();
    out
}

/// Every monomial of weight `weight`, grouped by charge.
pub fn enumerate_weight(
    flavor: Flavor,
    dim_v: usize,
    weight: i64,
    gamma_bound: Option<u32>,
) -> Result<BTreeMap<i64, Vec<Monomial>>> {
    if weight < 0 {
        return Err(Error::NegativeWeight(weight));
    }
    let bound = match (flavor, gamma_bound) {
        (Flavor::Full, None) => return Err(Error::MissingDegreeBound),
        (Flavor::Full, Some(d)) => d,
        (Flavor::Plus, _) => 0,
    };
    let cands = candidate_modes(flavor, dim_v, weight);
    let mut out: BTreeMap<i64, Vec<Monomial>> = BTreeMap::new();
    let mut word = Word::new();
    fill(&cands, 0, weight, bound, &mut word, &mut out);
    for v in out.values_mut() {
        v.sort();
    }
    Ok(out)
}

fn fill(
    cands: &[Mode],
    start: usize,
    weight_left: i64,
    gamma_left: u32,
    word: &mut Word,
    out: &mut BTreeMap<i64, Vec<Monomial>>,
) {
    if start == cands.len() {
        if weight_left == 0 {
            let m = Monomial::from_sorted_unchecked(word.clone());
            out.entry(m.charge()).or_default().push(m);
        }
        return;
    }
    let mode = cands[start];
    let w = mode.weight_shift();
    let max_mult = if mode.is_odd() {
        1
    } else if w == 0 {
        gamma_left as i64
    } else {
        weight_left / w
    };
    let mut mult = 0;
    loop {
        fill(
            cands,
            start + 1,
            weight_left - mult * w,
            gamma_left - if w == 0 && !mode.is_odd() { mult as u32 } else { 0 },
            word,
            out,
        );
        if mult == max_mult || (w > 0 && weight_left - (mult + 1) * w < 0) {
            break;
        }
        mult += 1;
        word.push(mode);
    }
    for _ in 0..mult {
        word.pop();
    }
}

/// The basis of W[weight, charge] for the given flavor.
///
/// `gamma_bound` caps the total `gamma_(-1)` degree and is required for
/// [`Flavor::Full`]; it is ignored for [`Flavor::Plus`].
pub fn enumerate_basis(
    flavor: Flavor,
    dim_v: usize,
    weight: i64,
    charge: i64,
    gamma_bound: Option<u32>,
) -> Result<WeightSpace> {
    let mut all = enumerate_weight(flavor, dim_v, weight, gamma_bound)?;
    let basis = all.remove(&charge).unwrap_or_default();
    let bound = if flavor == Flavor::Full { gamma_bound } else { None };
    Ok(WeightSpace::from_basis(flavor, dim_v, weight, charge, bound, basis))
}

/// Lazily built, shared weight spaces for one (flavor, N, bound).
#[derive(Debug)]
pub struct SpaceCache {
    flavor: Flavor,
    dim_v: usize,
    gamma_bound: Option<u32>,
    spaces: Mutex<HashMap<(i64, i64), Arc<WeightSpace>>>,
}

impl SpaceCache {
    pub fn new(flavor: Flavor, dim_v: usize, gamma_bound: Option<u32>) -> Result<Self> {
        if flavor == Flavor::Full && gamma_bound.is_none() {
            return Err(Error::MissingDegreeBound);
        }
        Ok(SpaceCache { flavor, dim_v, gamma_bound, spaces: Mutex::new(HashMap::new()) })
    }

    pub fn plus(dim_v: usize) -> Self {
        Self::new(Flavor::Plus, dim_v, None).unwrap()
    }

    pub fn dim_v(&self) -> usize {
        self.dim_v
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    /// W[weight, charge]; negative weights give the empty space.
    pub fn get(&self, weight: i64, charge: i64) -> Arc<WeightSpace> {
        if let Some(ws) = self.spaces.lock().unwrap().get(&(weight, charge)) {
            return ws.clone();
        }
        let ws = if weight < 0 {
            WeightSpace::empty(self.flavor, self.dim_v, weight, charge)
        } else {
            enumerate_basis(self.flavor, self.dim_v, weight, charge, self.gamma_bound)
                .expect("cache parameters validated at construction")
        };
        let ws = Arc::new(ws);
        self.spaces.lock().unwrap().entry((weight, charge)).or_insert(ws).clone()
    }

    /// The charges with a non-empty space at this weight, ascending.
    pub fn charges(&self, weight: i64) -> Vec<i64> {
        if weight < 0 {
            return Vec::new();
        }
        let all = enumerate_weight(self.flavor, self.dim_v, weight, self.gamma_bound)
            .expect("cache parameters validated at construction");
        all.keys().copied().collect()
    }

    /// All non-empty grades with weight in `0..=max_weight`, ordered by (k, l).
    pub fn grades(&self, max_weight: i64) -> Vec<(i64, i64)> {
        (0..=max_weight).flat_map(|k| self.charges(k).into_iter().map(move |l| (k, l))).collect()
    }
}
