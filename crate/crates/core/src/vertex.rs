//! n-th products of states and the generator fields.
//!
//! A monomial `u_(-m-1) a'` corresponds to the field `:(d^m u / m!)(z) Y(a', z):`,
//! so every monomial becomes a right-nested normally ordered product of
//! free-field factors (a [`FieldWord`]). Its modes are evaluated by the
//! leftmost-factor recursion
//!
//! ```text
//! :X Y:_(n) = sum_{k<0} X_(k) Y_(n-k-1) + (-1)^{|X||Y|} sum_{k>=0} Y_(n-k-1) X_(k)
//! ```
//!
//! Both sums are finite on a fixed target: the first by weight, the second
//! because `X_(k)`, k >= 0, only acts through a partner mode present in the target.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::fock::{Flavor, Mode, Monomial, SpaceCache, Species, State, WeightSpace};
use crate::linalg::SparseMatrix;
use crate::scalar::{binomial_scalar, Scalar};

/// One factor `(d^deriv u / deriv!)(z)` of a normally ordered product.
///
/// `tilde` drops the `gamma_(-1)` mode, i.e. the factor is `gamma(z) - gamma_(-1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldFactor {
    pub species: Species,
    pub dir: u8,
    pub deriv: u32,
    pub tilde: bool,
}

impl FieldFactor {
    pub fn new(species: Species, dir: u8) -> Self {
        FieldFactor { species, dir, deriv: 0, tilde: false }
    }

    pub fn gamma_tilde(dir: u8) -> Self {
        FieldFactor { species: Species::Gamma, dir, deriv: 0, tilde: true }
    }

    pub fn weight(&self) -> i64 {
        self.species.field_weight() + self.deriv as i64
    }

    /// The k-th mode: `(-1)^m binom(k, m) u_(k-m)`, or `None` if it vanishes.
    pub fn mode<S: Scalar>(&self, k: i64) -> Option<(S, Mode)> {
        let m = self.deriv as i64;
        if k >= 0 && k < m {
            return None;
        }
        let idx = k - m;
        if self.tilde && idx == -1 {
            return None;
        }
        let mut c: S = binomial_scalar(k, m);
        if m % 2 == 1 {
            c = -c;
        }
        Some((c, Mode::new(self.species, self.dir, idx as i32)))
    }
}

/// A right-nested normally ordered product `:F_1 :F_2 ... :F_r 1:...::`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldWord {
    factors: Vec<FieldFactor>,
}

impl FieldWord {
    pub fn new(factors: Vec<FieldFactor>) -> Self {
        FieldWord { factors }
    }

    /// The field of a monomial state.
    pub fn from_monomial(m: &Monomial) -> Self {
        let factors = m
            .modes()
            .iter()
            .map(|x| FieldFactor { species: x.species, dir: x.dir, deriv: (-x.n - 1) as u32, tilde: false })
            .collect();
        FieldWord { factors }
    }

    pub fn factors(&self) -> &[FieldFactor] {
        &self.factors
    }

    pub fn weight(&self) -> i64 {
        self.factors.iter().map(FieldFactor::weight).sum()
    }

    pub fn charge(&self) -> i64 {
        self.factors.iter().map(|f| f.species.charge()).sum()
    }

    pub fn is_odd(&self) -> bool {
        self.factors.iter().filter(|f| f.species.is_odd()).count() % 2 == 1
    }

    pub fn evaluator<S: Scalar>(&self) -> ModeEvaluator<'_, S> {
        ModeEvaluator::new(self)
    }
}

/// Evaluates modes of one [`FieldWord`], memoising sub-results across calls.
pub struct ModeEvaluator<'a, S> {
    factors: &'a [FieldFactor],
    suffix_weight: Vec<i64>,
    suffix_odd: Vec<bool>,
    memo: HashMap<(usize, i64, Monomial), Vec<(Monomial, S)>>,
}

impl<'a, S: Scalar> ModeEvaluator<'a, S> {
    fn new(word: &'a FieldWord) -> Self {
        let r = word.factors.len();
        let mut suffix_weight = vec![0; r + 1];
        let mut suffix_odd = vec![false; r + 1];
        for i in (0..r).rev() {
            suffix_weight[i] = suffix_weight[i + 1] + word.factors[i].weight();
            suffix_odd[i] = suffix_odd[i + 1] ^ word.factors[i].species.is_odd();
        }
        ModeEvaluator { factors: &word.factors, suffix_weight, suffix_odd, memo: HashMap::new() }
    }

    /// `word_(n)` applied to a single monomial.
    pub fn apply_monomial(&mut self, n: i64, target: &Monomial) -> Vec<(Monomial, S)> {
        self.eval(0, n, target)
    }

    /// `word_(n)` applied to a state.
    pub fn apply(&mut self, n: i64, target: &State<S>, flavor: Flavor) -> Result<State<S>> {
        let mut out = State::zero(flavor.join(target.flavor()));
        for (m, c) in target.terms() {
            for (r, v) in self.eval(0, n, m) {
                if out.flavor() == Flavor::Plus && r.has_gamma_zero_weight() {
                    let dir = r.modes().iter().find(|x| x.is_gamma_zero_weight()).unwrap().dir;
                    return Err(Error::PlusViolation(dir));
                }
                out.add_term(r, v * c.clone());
            }
        }
        Ok(out)
    }

    fn eval(&mut self, start: usize, n: i64, target: &Monomial) -> Vec<(Monomial, S)> {
        if start == self.factors.len() {
            return if n == -1 { vec![(target.clone(), S::one())] } else { Vec::new() };
        }
        let tw = target.weight();
        if tw + self.suffix_weight[start] - n - 1 < 0 {
            return Vec::new();
        }
        let key = (start, n, target.clone());
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        let x = self.factors[start];
        let rest_w = self.suffix_weight[start + 1];
        let mut acc: HashMap<Monomial, S> = HashMap::new();
        let push = |acc: &mut HashMap<Monomial, S>, m: Monomial, v: S| {
            let e = acc.entry(m).or_insert_with(S::zero);
            *e += &v;
        };

        // creation part of X on the left
        for k in (n - tw - rest_w)..=-1 {
            let Some((c, mode)) = x.mode::<S>(k) else { continue };
            let inner = self.eval(start + 1, n - k - 1, target);
            for (m, v) in inner {
                if let Some((sign, prod)) = m.mul_creation(mode) {
                    push(&mut acc, prod, v * c.clone() * S::from_int(sign));
                }
            }
        }

        // annihilation part of X on the right: only partners present in the target
        let odd_swap = x.species.is_odd() && self.suffix_odd[start + 1];
        let mut seen: Vec<i32> = Vec::new();
        for p in target.modes() {
            if p.species != x.species.partner() || p.dir != x.dir || seen.contains(&p.n) {
                continue;
            }
            seen.push(p.n);
            let j = -(p.n as i64) - 1;
            let k = j + x.deriv as i64;
            let Some((c, mode)) = x.mode::<S>(k) else { continue };
            let Some((ci, reduced)) = target.contract(mode) else { continue };
            let mut c = c * S::from_int(ci);
            if odd_swap {
                c = -c;
            }
            for (m, v) in self.eval(start + 1, n - k - 1, &reduced) {
                push(&mut acc, m, v * c.clone());
            }
        }

        let mut out: Vec<(Monomial, S)> = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        out.sort_by(|a, b| a.0.cmp(&b.0));
        self.memo.insert(key, out.clone());
        out
    }
}

fn homogeneous<S: Scalar>(a: &State<S>) -> Result<()> {
    if a.is_homogeneous() {
        Ok(())
    } else {
        Err(Error::NonHomogeneous)
    }
}

/// `a_(n) b` for a homogeneous state `a`.
pub fn nth_product<S: Scalar>(a: &State<S>, n: i64, b: &State<S>) -> Result<State<S>> {
    homogeneous(a)?;
    let flavor = a.flavor().join(b.flavor());
    let mut out = State::zero(flavor);
    for (m, c) in a.terms() {
        let word = FieldWord::from_monomial(m);
        let part = word.evaluator::<S>().apply(n, b, flavor)?;
        out.add_scaled(&part, c);
    }
    Ok(out)
}

/// The normally ordered product `:a b: = a_(-1) b`.
pub fn normal_order<S: Scalar>(a: &State<S>, b: &State<S>) -> Result<State<S>> {
    nth_product(a, -1, b)
}

/// Weight and charge of a non-zero homogeneous state.
pub fn state_grade<S: Scalar>(a: &State<S>) -> Result<(i64, i64)> {
    a.homogeneous_grade().ok_or(Error::NonHomogeneous)
}

/// A mode matrix together with the grade it maps into.
pub type GradedMap<S> = (SparseMatrix<S>, (i64, i64));

/// The mode `a_(n)` as a linear map out of `ws`, into the matching space of `cache`.
///
/// Returns the matrix and the target grade. A zero `a` gives a zero map into
/// the source grade.
pub fn composite_mode<S: Scalar>(a: &State<S>, n: i64, ws: &WeightSpace, cache: &SpaceCache) -> Result<GradedMap<S>> {
    homogeneous(a)?;
    let Some((wa, ca)) = a.homogeneous_grade() else {
        let target = cache.get(ws.weight, ws.charge);
        return Ok((SparseMatrix::zeros(target.dim(), ws.dim()), ws.grade()));
    };
    let grade = (ws.weight + wa - n - 1, ws.charge + ca);
    let target = cache.get(grade.0, grade.1);
    let words: Vec<(FieldWord, S)> = a.terms().map(|(m, c)| (FieldWord::from_monomial(m), c.clone())).collect();
    let mut evals: Vec<(ModeEvaluator<'_, S>, &S)> = words.iter().map(|(w, c)| (w.evaluator(), c)).collect();
    let mut cols = Vec::with_capacity(ws.dim());
    for src in ws.basis() {
        let mut col: HashMap<usize, S> = HashMap::new();
        for (ev, c) in evals.iter_mut() {
            for (m, v) in ev.apply_monomial(n, src) {
                let i = target
                    .index_of(&m)
                    .ok_or_else(|| Error::Dimension(format!("{m} lies outside the target space {:?}", grade)))?;
                *col.entry(i).or_insert_with(S::zero) += &(v * (*c).clone());
            }
        }
        let mut col: Vec<(usize, S)> = col.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        col.sort_by_key(|(i, _)| *i);
        cols.push(col);
    }
    Ok((SparseMatrix::from_columns(target.dim(), cols), grade))
}

/// `a_(0)` restricted to `ws`; the target has grade `(k + wt(a) - 1, l + charge(a))`.
pub fn composite_zero_mode<S: Scalar>(a: &State<S>, ws: &WeightSpace, cache: &SpaceCache) -> Result<SparseMatrix<S>> {
    composite_mode(a, 0, ws, cache).map(|(m, _)| m)
}

/// The named generators of the invariant vertex algebras.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GeneratorName {
    Q,
    L,
    J,
    G,
    D,
    E,
    B,
    C,
    Dp,
    Ep,
}

impl GeneratorName {
    pub const ALL: [GeneratorName; 10] = [
        GeneratorName::Q,
        GeneratorName::L,
        GeneratorName::J,
        GeneratorName::G,
        GeneratorName::D,
        GeneratorName::E,
        GeneratorName::B,
        GeneratorName::C,
        GeneratorName::Dp,
        GeneratorName::Ep,
    ];

    /// Generators of the type-A algebra.
    pub const TYPE_A: [GeneratorName; 8] = [
        GeneratorName::Q,
        GeneratorName::L,
        GeneratorName::J,
        GeneratorName::G,
        GeneratorName::D,
        GeneratorName::E,
        GeneratorName::B,
        GeneratorName::C,
    ];

    /// Generators of the type-C algebra (N even).
    pub const TYPE_C: [GeneratorName; 6] =
        [GeneratorName::Q, GeneratorName::L, GeneratorName::J, GeneratorName::G, GeneratorName::Dp, GeneratorName::Ep];

    pub fn name(self) -> &'static str {
        match self {
            GeneratorName::Q => "Q",
            GeneratorName::L => "L",
            GeneratorName::J => "J",
            GeneratorName::G => "G",
            GeneratorName::D => "D",
            GeneratorName::E => "E",
            GeneratorName::B => "B",
            GeneratorName::C => "C",
            GeneratorName::Dp => "D'",
            GeneratorName::Ep => "E'",
        }
    }
}

fn single<S: Scalar>(mode: Mode) -> State<S> {
    State::from_modes([mode], Flavor::Plus)
}

/// The state of a generator field for `dim_v = N`.
pub fn generator_state<S: Scalar>(name: GeneratorName, dim_v: usize) -> Result<State<S>> {
    let dirs = 1..=dim_v as u8;
    let mut out = State::zero(Flavor::Plus);
    match name {
        GeneratorName::Q => {
            for i in dirs {
                out.add_scaled(&normal_order(&single(Mode::beta(i, -1)), &single(Mode::c(i, -1)))?, &S::one());
            }
        }
        GeneratorName::J => {
            for i in dirs {
                out.add_scaled(&normal_order(&single(Mode::b(i, -1)), &single(Mode::c(i, -1)))?, &-S::one());
            }
        }
        GeneratorName::L => {
            // sum :beta d(gamma): - :b d(c):, with d(gamma) = alpha_(-1) 1
            for i in dirs {
                let (ca, ga) = Mode::alpha(i, -1).expect("alpha_(-1) is non-zero");
                let dgamma = single::<S>(ga).scaled(&S::from_int(ca));
                let dc = crate::fock::translate(&single::<S>(Mode::c(i, -1)));
                out.add_scaled(&normal_order(&single(Mode::beta(i, -1)), &dgamma)?, &S::one());
                out.add_scaled(&normal_order(&single(Mode::b(i, -1)), &dc)?, &-S::one());
            }
        }
        GeneratorName::G => {
            for i in dirs {
                let (ca, ga) = Mode::alpha(i, -1).expect("alpha_(-1) is non-zero");
                let dgamma = single::<S>(ga).scaled(&S::from_int(ca));
                out.add_scaled(&normal_order(&single(Mode::b(i, -1)), &dgamma)?, &S::one());
            }
        }
        GeneratorName::D => {
            out = State::vacuum(Flavor::Plus);
            for i in dirs.rev() {
                out = normal_order(&single(Mode::b(i, -1)), &out)?;
            }
        }
        GeneratorName::E => {
            out = State::vacuum(Flavor::Plus);
            for i in dirs.rev() {
                out = normal_order(&single(Mode::c(i, -1)), &out)?;
            }
        }
        GeneratorName::B => {
            let q = generator_state(GeneratorName::Q, dim_v)?;
            out = nth_product(&q, 0, &generator_state(GeneratorName::D, dim_v)?)?;
        }
        GeneratorName::C => {
            let g = generator_state(GeneratorName::G, dim_v)?;
            out = nth_product(&g, 0, &generator_state(GeneratorName::E, dim_v)?)?;
        }
        GeneratorName::Dp | GeneratorName::Ep => {
            if dim_v % 2 == 1 {
                return Err(Error::OddSymplectic(dim_v));
            }
            let species = if name == GeneratorName::Dp { Species::B } else { Species::C };
            for i in 1..=(dim_v / 2) as u8 {
                let first = single::<S>(Mode::new(species, 2 * i - 1, -1));
                let second = single::<S>(Mode::new(species, 2 * i, -1));
                out.add_scaled(&normal_order(&first, &second)?, &S::one());
            }
        }
    }
    Ok(out)
}

/// `(weight, charge)` of every generator at this N.
pub fn generator_grade(name: GeneratorName, dim_v: usize) -> Result<(i64, i64)> {
    let s = generator_state::<crate::Rational>(name, dim_v)?;
    state_grade(&s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::enumerate_weight;
    use crate::Rational;

    type St = State<Rational>;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn vacuum_is_the_unit() {
        let vac = St::vacuum(Flavor::Plus);
        let b = St::from_modes([Mode::beta(1, -2), Mode::c(2, -1)], Flavor::Plus);
        assert_eq!(normal_order(&vac, &b).unwrap(), b);
    }

    #[test]
    fn creation_identity_on_small_basis() {
        let vac = St::vacuum(Flavor::Plus);
        for k in 0..=2 {
            for (_, ms) in enumerate_weight(Flavor::Plus, 2, k, None).unwrap() {
                for m in ms {
                    let a = St::from_monomial(m, Flavor::Plus);
                    assert_eq!(nth_product(&a, -1, &vac).unwrap(), a);
                }
            }
        }
    }

    #[test]
    fn normal_order_without_contractions() {
        let beta = St::from_modes([Mode::beta(1, -1)], Flavor::Plus);
        let c = St::from_modes([Mode::c(1, -1)], Flavor::Plus);
        let expected = St::from_modes([Mode::beta(1, -1), Mode::c(1, -1)], Flavor::Plus);
        assert_eq!(normal_order(&beta, &c).unwrap(), expected);
    }

    #[test]
    fn generator_grades() {
        assert_eq!(generator_grade(GeneratorName::E, 2).unwrap(), (0, 2));
        assert_eq!(generator_grade(GeneratorName::Q, 2).unwrap(), (1, 1));
        assert_eq!(generator_grade(GeneratorName::D, 2).unwrap(), (2, -2));
        assert_eq!(generator_grade(GeneratorName::L, 2).unwrap(), (2, 0));
        assert_eq!(generator_grade(GeneratorName::J, 2).unwrap(), (1, 0));
        assert_eq!(generator_grade(GeneratorName::G, 2).unwrap(), (2, -1));
        assert_eq!(generator_grade(GeneratorName::B, 2).unwrap(), (2, -1));
        assert_eq!(generator_grade(GeneratorName::C, 2).unwrap(), (1, 1));
        assert!(matches!(generator_state::<Rational>(GeneratorName::Dp, 3), Err(Error::OddSymplectic(3))));
    }

    #[test]
    fn explicit_generator_states() {
        let l = generator_state::<Rational>(GeneratorName::L, 1).unwrap();
        let expected = &St::from_modes([Mode::beta(1, -1), Mode::gamma(1, -2)], Flavor::Plus)
            - &St::from_modes([Mode::b(1, -1), Mode::c(1, -2)], Flavor::Plus);
        assert_eq!(l, expected);
        let j = generator_state::<Rational>(GeneratorName::J, 1).unwrap();
        assert_eq!(j, St::from_modes([Mode::b(1, -1), Mode::c(1, -1)], Flavor::Plus).scaled(&q(-1)));
    }

    #[test]
    fn b_is_q_zero_d() {
        let b = generator_state::<Rational>(GeneratorName::B, 2).unwrap();
        // Q_(0) turns one b^i_(-1) of D into beta^i_(-1)
        let expected = &St::from_modes([Mode::beta(1, -1), Mode::b(2, -1)], Flavor::Plus)
            - &St::from_modes([Mode::beta(2, -1), Mode::b(1, -1)], Flavor::Plus);
        assert_eq!(b, expected);
    }

    #[test]
    fn non_homogeneous_left_operand_rejected() {
        let a = &St::from_modes([Mode::beta(1, -1)], Flavor::Plus) + &St::from_modes([Mode::c(1, -1)], Flavor::Plus);
        let vac = St::vacuum(Flavor::Plus);
        assert_eq!(nth_product(&a, 0, &vac), Err(Error::NonHomogeneous));
    }

    #[test]
    fn translation_is_minus_second_mode() {
        let vac = St::vacuum(Flavor::Plus);
        for name in GeneratorName::TYPE_A {
            let a = generator_state::<Rational>(name, 2).unwrap();
            assert_eq!(nth_product(&a, -2, &vac).unwrap(), crate::fock::translate(&a), "{name:?}");
        }
    }

    #[test]
    fn energy_and_charge_operators() {
        let cache = SpaceCache::plus(2);
        let l = generator_state::<Rational>(GeneratorName::L, 2).unwrap();
        let j = generator_state::<Rational>(GeneratorName::J, 2).unwrap();
        for (k, ch) in cache.grades(3) {
            let ws = cache.get(k, ch);
            let (lm, g) = composite_mode(&l, 1, &ws, &cache).unwrap();
            assert_eq!(g, (k, ch));
            let (jm, _) = composite_mode(&j, 0, &ws, &cache).unwrap();
            for i in 0..ws.dim() {
                let expected: Vec<(usize, Rational)> = if k == 0 { vec![] } else { vec![(i, q(k))] };
                assert_eq!(lm.column(i), &expected[..], "L_(1) at {k},{ch}");
                let expected: Vec<(usize, Rational)> = if ch == 0 { vec![] } else { vec![(i, q(ch))] };
                assert_eq!(jm.column(i), &expected[..], "J_(0) at {k},{ch}");
            }
        }
    }
    #[test]
    fn zero_modes_kill_the_vacuum_and_q_kills_e() {
        let cache = SpaceCache::plus(2);
        let vac_space = cache.get(0, 0);
        for name in GeneratorName::TYPE_A {
            let a = generator_state::<Rational>(name, 2).unwrap();
            let m = composite_zero_mode(&a, &vac_space, &cache).unwrap();
            assert!(m.column(0).is_empty(), "{name:?}");
        }
        // Q_(0) E would land in W[0,3], which is empty for N = 2
        let q_state = generator_state::<Rational>(GeneratorName::Q, 2).unwrap();
        let e_space = cache.get(0, 2);
        let (m, grade) = composite_mode(&q_state, 0, &e_space, &cache).unwrap();
        assert_eq!(grade, (0, 3));
        assert_eq!(cache.get(0, 3).dim(), 0);
        assert!(m.is_zero());
    }
}
