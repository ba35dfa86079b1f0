use std::collections::BTreeMap;

use super::field::PolyVectorField;
use super::poly::Polynomial;
use crate::scalar::Scalar;

/// Sorts `idx` in place; returns the permutation sign, or `None` on a repeat.
fn sort_with_sign(idx: &mut [usize]) -> Option<i64> {
    let mut sign = 1;
    for i in 1..idx.len() {
        let mut j = i;
        while j > 0 && idx[j - 1] > idx[j] {
            idx.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    idx.windows(2).all(|w| w[0] != w[1]).then_some(sign)
}

/// A constant-coefficient p-form, stored on strictly increasing index tuples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstantForm<S> {
    dim: usize,
    arity: usize,
    comps: BTreeMap<Vec<usize>, S>,
}

impl<S: Scalar> ConstantForm<S> {
    pub fn zero(dim: usize, arity: usize) -> Self {
        ConstantForm { dim, arity, comps: BTreeMap::new() }
    }

    /// Adds `c dx_{i1} ^ ... ^ dx_{ip}` for any order of (1-based) indices.
    pub fn add(&mut self, mut idx: Vec<usize>, c: S) {
        assert_eq!(idx.len(), self.arity, "wrong number of indices");
        assert!(idx.iter().all(|&i| i >= 1 && i <= self.dim), "index out of range");
        let Some(sign) = sort_with_sign(&mut idx) else { return };
        let e = self.comps.entry(idx.clone()).or_insert_with(S::zero);
        *e += &(c * S::from_int(sign));
        if e.is_zero() {
            self.comps.remove(&idx);
        }
    }

    /// `dx_1 ^ ... ^ dx_N`
    pub fn volume(dim: usize) -> Self {
        let mut w = Self::zero(dim, dim);
        w.add((1..=dim).collect(), S::one());
        w
    }

    /// `sum_i dx_{2i-1} ^ dx_{2i}`; `dim` must be even.
    pub fn symplectic(dim: usize) -> Self {
        assert!(dim.is_multiple_of(2), "symplectic form needs even dimension");
        let mut w = Self::zero(dim, 2);
        for i in 1..=dim / 2 {
            w.add(vec![2 * i - 1, 2 * i], S::one());
        }
        w
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Component on a sorted index tuple.
    pub fn get(&self, idx: &[usize]) -> S {
        self.comps.get(idx).cloned().unwrap_or_else(S::zero)
    }

    pub fn components(&self) -> impl Iterator<Item = (&Vec<usize>, &S)> {
        self.comps.iter()
    }
}

/// A p-form with polynomial coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyForm<S> {
    dim: usize,
    arity: usize,
    comps: BTreeMap<Vec<usize>, Polynomial<S>>,
}

impl<S: Scalar> PolyForm<S> {
    pub fn zero(dim: usize, arity: usize) -> Self {
        PolyForm { dim, arity, comps: BTreeMap::new() }
    }

    pub fn from_constant(w: &ConstantForm<S>) -> Self {
        let mut out = Self::zero(w.dim(), w.arity());
        for (idx, c) in w.components() {
            out.add(idx.clone(), &Polynomial::constant(w.dim(), c.clone()));
        }
        out
    }

    pub fn add(&mut self, mut idx: Vec<usize>, p: &Polynomial<S>) {
        let Some(sign) = sort_with_sign(&mut idx) else { return };
        let dim = self.dim;
        let e = self.comps.entry(idx.clone()).or_insert_with(|| Polynomial::zero(dim));
        e.add_scaled(p, &S::from_int(sign));
        if e.is_zero() {
            self.comps.remove(&idx);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn get(&self, idx: &[usize]) -> Polynomial<S> {
        self.comps.get(idx).cloned().unwrap_or_else(|| Polynomial::zero(self.dim))
    }

    pub fn components(&self) -> impl Iterator<Item = (&Vec<usize>, &Polynomial<S>)> {
        self.comps.iter()
    }
}

/// `L_v w` for a constant form `w`: since `dw = 0`, each `dx_i` becomes `dP_i`.
pub fn lie_derivative<S: Scalar>(v: &PolyVectorField<S>, w: &ConstantForm<S>) -> PolyForm<S> {
    let mut out = PolyForm::zero(w.dim(), w.arity());
    for (idx, c) in w.components() {
        for r in 0..idx.len() {
            let p = v.component(idx[r]);
            for j in 1..=w.dim() {
                let dp = p.derivative(j);
                if dp.is_zero() {
                    continue;
                }
                let mut new_idx = idx.clone();
                new_idx[r] = j;
                out.add(new_idx, &dp.scaled(c));
            }
        }
    }
    out
}
