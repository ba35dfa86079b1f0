use std::collections::btree_map::{self, BTreeMap, Entry};
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::mode::Mode;
use super::monomial::Monomial;

/// Which part of the Fock space a state lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Flavor {
    /// No `gamma_(-1)` factors: the subspace generated by beta, alpha = d(gamma), b, c.
    Plus,
    /// The full space, polynomial in `gamma_(-1)`.
    Full,
}

impl Flavor {
    pub fn join(self, other: Flavor) -> Flavor {
        self.max(other)
    }
}

/// Result of [`State::grade`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Grade {
    Homogeneous {
        weight: i64,
        charge: i64,
    },
    NonHomogeneous,
    /// The zero state has every grade.
    Zero,
}

/// A finite linear combination of monomials with exact coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct State<S> {
    terms: BTreeMap<Monomial, S>,
    flavor: Flavor,
}

impl<S: Scalar> State<S> {
    pub fn zero(flavor: Flavor) -> Self {
        State { terms: BTreeMap::new(), flavor }
    }

    pub fn vacuum(flavor: Flavor) -> Self {
        Self::from_monomial(Monomial::vacuum(), flavor)
    }

    /// Panics if a PLUS state would hold a `gamma_(-1)` factor.
    pub fn from_monomial(m: Monomial, flavor: Flavor) -> Self {
        let mut s = Self::zero(flavor);
        s.add_term(m, S::one());
        s
    }

    /// The state `m_1 ... m_r |0>` for creation modes in any order.
    pub fn from_modes<I: IntoIterator<Item = Mode>>(modes: I, flavor: Flavor) -> Self {
        let mut s = Self::zero(flavor);
        if let Some((sign, m)) = Monomial::from_modes(modes) {
            s.add_term(m, S::from_int(sign));
        }
        s
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    /// Reinterprets the flavor. Fails if a PLUS relabelling would keep a `gamma_(-1)`.
    pub fn with_flavor(mut self, flavor: Flavor) -> Result<Self> {
        if flavor == Flavor::Plus {
            if let Some(m) = self.terms.keys().find(|m| m.has_gamma_zero_weight()) {
                let dir = m.modes().iter().find(|x| x.is_gamma_zero_weight()).unwrap().dir;
                return Err(Error::PlusViolation(dir));
            }
        }
        self.flavor = flavor;
        Ok(self)
    }

    pub fn add_term(&mut self, m: Monomial, c: S) {
        if c.is_zero() {
            return;
        }
        assert!(self.flavor == Flavor::Full || !m.has_gamma_zero_weight(), "gamma_(-1) in a PLUS state");
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &State<S>, c: &S) {
        if c.is_zero() {
            return;
        }
        self.flavor = self.flavor.join(other.flavor);
        for (m, v) in &other.terms {
            self.add_term(m.clone(), v.clone() * c.clone());
        }
    }

    pub fn scaled(&self, c: &S) -> Self {
        let mut out = Self::zero(self.flavor);
        out.add_scaled(self, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> S {
        self.terms.get(m).cloned().unwrap_or_else(S::zero)
    }

    pub fn terms(&self) -> btree_map::Iter<'_, Monomial, S> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    pub fn grade(&self) -> Grade {
        let mut it = self.terms.keys().map(Monomial::grade);
        let Some(first) = it.next() else {
            return Grade::Zero;
        };
        if it.all(|g| g == first) {
            Grade::Homogeneous { weight: first.0, charge: first.1 }
        } else {
            Grade::NonHomogeneous
        }
    }

    /// The (weight, charge) of a homogeneous non-zero state.
    pub fn homogeneous_grade(&self) -> Option<(i64, i64)> {
        match self.grade() {
            Grade::Homogeneous { weight, charge } => Some((weight, charge)),
            _ => None,
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        !matches!(self.grade(), Grade::NonHomogeneous)
    }

    /// Parity of a state whose terms all share one parity.
    pub fn parity(&self) -> Option<bool> {
        let mut it = self.terms.keys().map(Monomial::is_odd);
        let first = it.next()?;
        it.all(|p| p == first).then_some(first)
    }

    /// Splits into homogeneous pieces keyed by (weight, charge).
    pub fn decompose(&self) -> BTreeMap<(i64, i64), State<S>> {
        let mut out: BTreeMap<(i64, i64), State<S>> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.grade()).or_insert_with(|| State::zero(self.flavor)).add_term(m.clone(), c.clone());
        }
        out
    }

    /// The part of top SW-degree (count of c plus twice the count of gamma).
    pub fn top_sw_component(&self) -> (u32, State<S>) {
        let top = self.terms.keys().map(Monomial::sw_degree).max().unwrap_or(0);
        let mut out = Self::zero(self.flavor);
        for (m, c) in &self.terms {
            if m.sw_degree() == top {
                out.add_term(m.clone(), c.clone());
            }
        }
        (top, out)
    }

    pub fn map_terms<F>(&self, flavor: Flavor, mut f: F) -> Result<State<S>>
    where
        F: FnMut(&Monomial, &S, &mut State<S>) -> Result<()>,
    {
        let mut out = State::zero(flavor);
        for (m, c) in &self.terms {
            f(m, c, &mut out)?;
        }
        Ok(out)
    }
}

impl<S: Scalar> Add for &State<S> {
    type Output = State<S>;
    fn add(self, rhs: &State<S>) -> State<S> {
        let mut out = self.clone();
        out.add_scaled(rhs, &S::one());
        out
    }
}

impl<S: Scalar> Sub for &State<S> {
    type Output = State<S>;
    fn sub(self, rhs: &State<S>) -> State<S> {
        let mut out = self.clone();
        out.add_scaled(rhs, &-S::one());
        out
    }
}

impl<S: Scalar> Neg for &State<S> {
    type Output = State<S>;
    fn neg(self) -> State<S> {
        self.scaled(&-S::one())
    }
}

impl<S: Scalar> Add for State<S> {
    type Output = State<S>;
    fn add(self, rhs: State<S>) -> State<S> {
        &self + &rhs
    }
}

impl<S: Scalar> Sub for State<S> {
    type Output = State<S>;
    fn sub(self, rhs: State<S>) -> State<S> {
        &self - &rhs
    }
}

/// Applies a single mode (any integer index) to a state.
///
/// Creation modes multiply; annihilation modes are (anti)commuted through the
/// word down to the vacuum, which they kill.
pub fn apply_mode<S: Scalar>(mode: Mode, s: &State<S>) -> Result<State<S>> {
    if mode.is_gamma_zero_weight() && s.flavor() == Flavor::Plus {
        return Err(Error::PlusViolation(mode.dir));
    }
    let mut out = State::zero(s.flavor());
    if mode.is_creation() {
        for (m, c) in s.terms() {
            if let Some((sign, prod)) = m.mul_creation(mode) {
                out.add_term(prod, c.clone() * S::from_int(sign));
            }
        }
    } else {
        for (m, c) in s.terms() {
            if let Some((coef, rest)) = m.contract(mode) {
                out.add_term(rest, c.clone() * S::from_int(coef));
            }
        }
    }
    Ok(out)
}

/// The translation operator: the derivation with `d P_(-k) = k P_(-k-1)`.
pub fn translate<S: Scalar>(s: &State<S>) -> State<S> {
    let mut out = State::zero(s.flavor());
    for (m, c) in s.terms() {
        for (pos, mode) in m.modes().iter().enumerate() {
            let k = -(mode.n as i64);
            let shifted = Mode::new(mode.species, mode.dir, mode.n - 1);
            if let Some((sign, next)) = m.replace_at(pos, shifted) {
                out.add_term(next, c.clone() * S::from_int(sign * k));
            }
        }
    }
    out
}
