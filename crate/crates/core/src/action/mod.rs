//! Actions of polynomial vector fields on the Fock space: `L` (through the
//! zero mode of `Q_(0) :P_i(gamma) b^i:`), its `gamma_(-1)`-free variant
//! `L+`, and the arc action of `g_0[t]` on SW monomials with the `K_n`
//! operators built from it.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::fock::{apply_mode, Flavor, Mode, Monomial, Species, State, WeightSpace};
use crate::linalg::SparseMatrix;
use crate::scalar::Scalar;
use crate::vecfields::{MultiIndex, PolyVectorField};
use crate::vertex::{generator_state, nth_product, FieldFactor, FieldWord, GeneratorName};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    L,
    LPlus,
}

type MatrixCache<S> = HashMap<(i64, i64), Arc<SparseMatrix<S>>>;

/// `L(v)` or `L+(v)` as the zero mode of a sum of field words, with a
/// per-grade matrix cache.
pub struct ActionOperator<S> {
    field: PolyVectorField<S>,
    variant: Variant,
    words: Vec<(FieldWord, S)>,
    cache: Mutex<MatrixCache<S>>,
}

/// `P(gamma_(-1)) b^i_(-1) 1` summed over the components of `v`.
fn potential_state<S: Scalar>(v: &PolyVectorField<S>) -> State<S> {
    let mut out = State::zero(Flavor::Full);
    for (s, dir, c) in v.terms() {
        let mut modes = vec![Mode::b(dir as u8, -1)];
        for (j, &e) in s.exponents().iter().enumerate() {
            modes.extend(std::iter::repeat_n(Mode::gamma(j as u8 + 1, -1), e as usize));
        }
        out.add_scaled(&State::from_modes(modes, Flavor::Full), c);
    }
    out
}

/// Factors `gamma~^{x_1} ... gamma~^{x_N}` with the multiplicities of `s`.
fn gamma_tilde_factors(s: &MultiIndex) -> Vec<FieldFactor> {
    let mut out = Vec::new();
    for (j, &e) in s.exponents().iter().enumerate() {
        out.extend(std::iter::repeat_n(FieldFactor::gamma_tilde(j as u8 + 1), e as usize));
    }
    out
}

impl<S: Scalar> ActionOperator<S> {
    /// `L(v) = (Q_(0) :P_i(gamma) b^i:)_(0)`.
    pub fn l(v: &PolyVectorField<S>) -> Result<Self> {
        let q = generator_state::<S>(GeneratorName::Q, v.dim())?.with_flavor(Flavor::Full)?;
        let t = nth_product(&q, 0, &potential_state(v))?;
        let words = t.terms().map(|(m, c)| (FieldWord::from_monomial(m), c.clone())).collect();
        Ok(Self::with_words(v, Variant::L, words))
    }

    /// `L+(v) = sum :(dP_i/dx_j)(gamma~) c^j b^i:_(0) + :P_i(gamma~) beta^i:_(0)`.
    pub fn l_plus(v: &PolyVectorField<S>) -> Self {
        let mut words = Vec::new();
        for i in 1..=v.dim() {
            let p = v.component(i);
            for j in 1..=v.dim() {
                for (s, c) in p.derivative(j).terms() {
                    let mut f = gamma_tilde_factors(s);
                    f.push(FieldFactor::new(Species::C, j as u8));
                    f.push(FieldFactor::new(Species::B, i as u8));
                    words.push((FieldWord::new(f), c.clone()));
                }
            }
            for (s, c) in p.terms() {
                let mut f = gamma_tilde_factors(s);
                f.push(FieldFactor::new(Species::Beta, i as u8));
                words.push((FieldWord::new(f), c.clone()));
            }
        }
        Self::with_words(v, Variant::LPlus, words)
    }

    pub fn new(v: &PolyVectorField<S>, variant: Variant) -> Result<Self> {
        match variant {
            Variant::L => Self::l(v),
            Variant::LPlus => Ok(Self::l_plus(v)),
        }
    }

    fn with_words(v: &PolyVectorField<S>, variant: Variant, words: Vec<(FieldWord, S)>) -> Self {
        ActionOperator { field: v.clone(), variant, words, cache: Mutex::new(HashMap::new()) }
    }

    pub fn field(&self) -> &PolyVectorField<S> {
        &self.field
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    /// Output flavor for an input of flavor `f`.
    fn out_flavor(&self, f: Flavor) -> Flavor {
        match self.variant {
            Variant::L => Flavor::Full,
            Variant::LPlus => f,
        }
    }

    /// Applies the operator to a state. `L` always produces a FULL state.
    pub fn apply(&self, s: &State<S>) -> Result<State<S>> {
        let flavor = self.out_flavor(s.flavor());
        let input = s.clone().with_flavor(flavor)?;
        let mut out = State::zero(flavor);
        for (w, c) in &self.words {
            out.add_scaled(&w.evaluator::<S>().apply(0, &input, flavor)?, c);
        }
        Ok(out)
    }

    /// The matrix from `src` to `tgt` (both of the same grade).
    pub fn matrix_between(&self, src: &WeightSpace, tgt: &WeightSpace) -> Result<SparseMatrix<S>> {
        let mut evals: Vec<_> = self.words.iter().map(|(w, c)| (w.evaluator::<S>(), c)).collect();
        let mut cols = Vec::with_capacity(src.dim());
        for m in src.basis() {
            let mut col: HashMap<usize, S> = HashMap::new();
            for (ev, c) in evals.iter_mut() {
                for (r, v) in ev.apply_monomial(0, m) {
                    let i =
                        tgt.index_of(&r).ok_or_else(|| Error::Dimension(format!("{r} is outside the target space")))?;
                    *col.entry(i).or_insert_with(S::zero) += &(v * (*c).clone());
                }
            }
            let mut col: Vec<(usize, S)> = col.into_iter().filter(|(_, v)| !v.is_zero()).collect();
            col.sort_by_key(|(i, _)| *i);
            cols.push(col);
        }
        Ok(SparseMatrix::from_columns(tgt.dim(), cols))
    }

    /// The (cached) grade-preserving matrix on a PLUS weight space.
    pub fn matrix(&self, ws: &WeightSpace) -> Result<Arc<SparseMatrix<S>>> {
        let key = ws.grade();
        if let Some(m) = self.cache.lock().expect("cache lock").get(&key) {
            return Ok(m.clone());
        }
        let m = Arc::new(self.matrix_between(ws, ws)?);
        Ok(self.cache.lock().expect("cache lock").entry(key).or_insert(m).clone())
    }
}

/// `L(v) s`.
pub fn act_l<S: Scalar>(v: &PolyVectorField<S>, s: &State<S>) -> Result<State<S>> {
    ActionOperator::l(v)?.apply(s)
}

/// `L+(v) s`.
pub fn act_l_plus<S: Scalar>(v: &PolyVectorField<S>, s: &State<S>) -> Result<State<S>> {
    ActionOperator::l_plus(v).apply(s)
}

/// `g t^n` for a degree-0 field `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArcActionElement<S> {
    pub g: PolyVectorField<S>,
    pub t_power: u32,
}

impl<S: Scalar> ArcActionElement<S> {
    pub fn new(g: PolyVectorField<S>, t_power: u32) -> Result<Self> {
        if !(g.is_zero() || g.degree() == Some(0)) {
            return Err(Error::Dimension("the arc action needs a linear vector field".into()));
        }
        Ok(ArcActionElement { g, t_power })
    }

    /// `c_{ab}` in `g = sum c_{ab} x_a d/dx_b` (1-based).
    fn entry(&self, a: usize, b: usize) -> S {
        self.g.component(b).coefficient(&MultiIndex::unit(self.g.dim(), a))
    }

    /// Image of one mode: the label is transformed by `g` (dually on beta, b)
    /// and the index shifted by the power of `t`.
    ///
    /// The shift acts on the SW generators beta, b, c and `alpha_(-k) = k gamma_(-k-1)`,
    /// so on gamma it carries the factor `(k - 1 - n) / (k - 1)` for `gamma_(-k)`.
    fn mode_image(&self, m: Mode) -> Vec<(S, Mode)> {
        let n = m.n + self.t_power as i32;
        let cutoff = if m.species == Species::Gamma { -2 } else { -1 };
        if n > cutoff {
            return Vec::new();
        }
        let scale =
            if m.species == Species::Gamma { S::from_frac(-(n as i64) - 1, -(m.n as i64) - 1) } else { S::one() };
        let dim = self.g.dim();
        let j = m.dir as usize;
        let mut out = Vec::new();
        for a in 1..=dim {
            let c = match m.species {
                Species::Gamma | Species::C => self.entry(a, j),
                Species::Beta | Species::B => -self.entry(j, a),
            };
            if !c.is_zero() {
                out.push((c * scale.clone(), Mode::new(m.species, a as u8, n)));
            }
        }
        out
    }

    /// The derivation extending [`Self::mode_image`] to monomials.
    pub fn apply_monomial(&self, m: &Monomial) -> State<S> {
        let mut out = State::zero(Flavor::Plus);
        for (pos, &mode) in m.modes().iter().enumerate() {
            for (c, image) in self.mode_image(mode) {
                if let Some((sign, next)) = m.replace_at(pos, image) {
                    out.add_term(next, c * S::from_int(sign));
                }
            }
        }
        out
    }
}

/// `(g t^n) w` on an SW state (PLUS flavor), identifying SW monomials with
/// PLUS monomials through `a -> a 1`.
pub fn act_arc<S: Scalar>(e: &ArcActionElement<S>, w: &State<S>) -> Result<State<S>> {
    if w.flavor() != Flavor::Plus {
        return Err(Error::ArcOnFull);
    }
    let mut out = State::zero(Flavor::Plus);
    for (m, c) in w.terms() {
        out.add_scaled(&e.apply_monomial(m), c);
    }
    Ok(out)
}

/// Multiplication by a creation mode in the (super)commutative SW algebra.
pub fn multiply<S: Scalar>(mode: Mode, w: &State<S>) -> State<S> {
    let mut out = State::zero(w.flavor());
    for (m, c) in w.terms() {
        if let Some((sign, prod)) = m.mul_creation(mode) {
            out.add_term(prod, c.clone() * S::from_int(sign));
        }
    }
    out
}

fn max_depth<S: Scalar>(w: &State<S>) -> u32 {
    w.monomials().flat_map(|m| m.modes().iter()).map(|m| (-m.n) as u32).max().unwrap_or(0)
}

/// `g1 = x1 d/dx2` and `g0 = x1 d/dx1 - x2 d/dx2` in `sl_2`.
pub fn sl2_pair<S: Scalar>() -> (PolyVectorField<S>, PolyVectorField<S>) {
    let e1 = MultiIndex::unit(2, 1);
    let e2 = MultiIndex::unit(2, 2);
    let g1 = PolyVectorField::monomial(e1.clone(), 2, S::one());
    let mut g0 = PolyVectorField::monomial(e1, 1, S::one());
    g0.add_term(e2, 2, -S::one());
    (g1, g0)
}

/// `sum_{l >= 1} gamma^dir_(-l-1) (g t^l) w`.
fn gamma_weighted_sum<S: Scalar>(dir: u8, g: &PolyVectorField<S>, w: &State<S>) -> Result<State<S>> {
    let mut out = State::zero(Flavor::Plus);
    for l in 1..=max_depth(w) {
        let e = ArcActionElement::new(g.clone(), l)?;
        let shifted = act_arc(&e, w)?;
        out.add_scaled(&multiply(Mode::gamma(dir, -(l as i32) - 1), &shifted), &S::one());
    }
    Ok(out)
}

/// `K_n w` for `N = 2`: `K_1 = sum gamma^1_(-l-1) g1 t^l`,
/// `K_0 = sum gamma^1_(-l-1) g0 t^l - sum gamma^2_(-l-1) g1 t^l`, `K_n = [K_0, K_{n-1}]`.
pub fn k_operator<S: Scalar>(n: i64, w: &State<S>) -> Result<State<S>> {
    if n < 0 || w.flavor() != Flavor::Plus || w.monomials().any(|m| m.max_dir() > 2) {
        return Err(Error::KOperator);
    }
    let (g1, g0) = sl2_pair::<S>();
    match n {
        0 => Ok(gamma_weighted_sum(1, &g0, w)? - gamma_weighted_sum(2, &g1, w)?),
        1 => gamma_weighted_sum(1, &g1, w),
        _ => {
            let a = k_operator(0, &k_operator(n - 1, w)?)?;
            let b = k_operator(n - 1, &k_operator(0, w)?)?;
            Ok(a - b)
        }
    }
}

/// `sum_s sign^{|s|} gamma_(-1)^s / s! op(d^s v, w)` over multi-indices `s`, in FULL flavor.
///
/// With `sign = 1` and `op = L+` this reproduces `L(v) w`; with `sign = -1`
/// and `op = L` it inverts the expansion.
pub fn gamma_expansion<S, F>(v: &PolyVectorField<S>, w: &State<S>, sign: i64, op: F) -> Result<State<S>>
where
    S: Scalar,
    F: Fn(&PolyVectorField<S>, &State<S>) -> Result<State<S>>,
{
    let dim = v.dim();
    let top = v.terms().map(|(t, _, _)| t.degree()).max().unwrap_or(0);
    let mut out = State::zero(Flavor::Full);
    for d in 0..=top {
        for idx in MultiIndex::all_of_degree(dim, d) {
            let dv = v.derivative_multi(&idx);
            if dv.is_zero() {
                continue;
            }
            let mut term = op(&dv, w)?.with_flavor(Flavor::Full)?;
            for (j, &e) in idx.exponents().iter().enumerate() {
                for _ in 0..e {
                    term = apply_mode(Mode::gamma(j as u8 + 1, -1), &term)?;
                }
            }
            let mut c = S::one() / idx.factorial::<S>();
            if sign < 0 && d % 2 == 1 {
                c = -c;
            }
            out.add_scaled(&term, &c);
        }
    }
    Ok(out)
}

/// Whether the top SW-degree part of `a` is killed by `g t` for every `g`
/// in `g0`; returns the first offending `g` otherwise.
pub fn top_component_arc_invariant<S: Scalar>(
    a: &State<S>,
    g0: &[PolyVectorField<S>],
) -> Result<Option<PolyVectorField<S>>> {
    let (_, top) = a.top_sw_component();
    for g in g0 {
        if !act_arc(&ArcActionElement::new(g.clone(), 1)?, &top)?.is_zero() {
            return Ok(Some(g.clone()));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests;
