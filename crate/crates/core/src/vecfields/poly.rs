use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::Scalar;

/// Exponent vector `s` of a monomial `x^s`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(exps: Vec<u32>) -> Self {
        MultiIndex(exps)
    }

    pub fn zero(dim: usize) -> Self {
        MultiIndex(vec![0; dim])
    }

    /// `e_i` for a 1-based direction.
    pub fn unit(dim: usize, dir: usize) -> Self {
        let mut e = vec![0; dim];
        e[dir - 1] = 1;
        MultiIndex(e)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    /// Exponent of the 1-based direction `dir`.
    pub fn get(&self, dir: usize) -> u32 {
        self.0[dir - 1]
    }

    /// `|s|`
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `s!`
    pub fn factorial<S: Scalar>(&self) -> S {
        let mut out = S::one();
        for &e in &self.0 {
            for k in 2..=e {
                out *= S::from_int(k as i64);
            }
        }
        out
    }

    pub fn add(&self, other: &MultiIndex) -> MultiIndex {
        MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn checked_sub(&self, other: &MultiIndex) -> Option<MultiIndex> {
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            out.push(a.checked_sub(*b)?);
        }
        Some(MultiIndex(out))
    }

    /// All multi-indices of total degree `d`, in decreasing lexicographic order
    /// (so `x1^d` comes first).
    pub fn all_of_degree(dim: usize, d: u32) -> Vec<MultiIndex> {
        fn rec(dim: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<MultiIndex>) {
            if prefix.len() + 1 == dim {
                prefix.push(d);
                out.push(MultiIndex(prefix.clone()));
                prefix.pop();
                return;
            }
            for e in (0..=d).rev() {
                prefix.push(e);
                rec(dim, d - e, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if dim == 0 {
            if d == 0 {
                out.push(MultiIndex(Vec::new()));
            }
            return out;
        }
        rec(dim, d, &mut Vec::new(), &mut out);
        out
    }

    /// All multi-indices `t <= self` componentwise.
    pub fn divisors(&self) -> Vec<MultiIndex> {
        let mut out = vec![Vec::new()];
        for &e in &self.0 {
            out = out
                .into_iter()
                .flat_map(|p: Vec<u32>| {
                    (0..=e).map(move |k| {
                        let mut q = p.clone();
                        q.push(k);
                        q
                    })
                })
                .collect();
        }
        out.into_iter().map(MultiIndex).collect()
    }
}

impl fmt::Display for MultiIndex {
    /// `x1^2 x3`; the empty monomial prints as nothing.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

/// A polynomial in `dim` commuting variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial<S> {
    dim: usize,
    terms: BTreeMap<MultiIndex, S>,
}

impl<S: Scalar> Polynomial<S> {
    pub fn zero(dim: usize) -> Self {
        Polynomial { dim, terms: BTreeMap::new() }
    }

    pub fn monomial(s: MultiIndex, c: S) -> Self {
        let mut p = Self::zero(s.dim());
        p.add_term(s, c);
        p
    }

    pub fn constant(dim: usize, c: S) -> Self {
        Self::monomial(MultiIndex::zero(dim), c)
    }

    /// The coordinate function `x_dir` (1-based).
    pub fn var(dim: usize, dir: usize) -> Self {
        Self::monomial(MultiIndex::unit(dim, dir), S::one())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn add_term(&mut self, s: MultiIndex, c: S) {
        assert_eq!(s.dim(), self.dim, "multi-index has the wrong length");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(s) {
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

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &S)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, s: &MultiIndex) -> S {
        self.terms.get(s).cloned().unwrap_or_else(S::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The common degree of all terms, or `None` for zero / mixed degrees.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(MultiIndex::degree);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn add_scaled(&mut self, other: &Polynomial<S>, c: &S) {
        for (s, v) in &other.terms {
            self.add_term(s.clone(), v.clone() * c.clone());
        }
    }

    pub fn scaled(&self, c: &S) -> Self {
        let mut out = Self::zero(self.dim);
        out.add_scaled(self, c);
        out
    }

    pub fn mul(&self, other: &Polynomial<S>) -> Self {
        let mut out = Self::zero(self.dim);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a.add(b), x.clone() * y.clone());
            }
        }
        out
    }

    /// `d/dx_dir` (1-based).
    pub fn derivative(&self, dir: usize) -> Self {
        let e = MultiIndex::unit(self.dim, dir);
        let mut out = Self::zero(self.dim);
        for (s, c) in &self.terms {
            if let Some(t) = s.checked_sub(&e) {
                out.add_term(t, c.clone() * S::from_int(s.get(dir) as i64));
            }
        }
        out
    }

    /// `d^s / dx^s`.
    pub fn derivative_multi(&self, s: &MultiIndex) -> Self {
        let mut out = self.clone();
        for (i, &e) in s.exponents().iter().enumerate() {
            for _ in 0..e {
                out = out.derivative(i + 1);
            }
        }
        out
    }
}

impl<S: Scalar> std::ops::Add for &Polynomial<S> {
    type Output = Polynomial<S>;
    fn add(self, rhs: &Polynomial<S>) -> Polynomial<S> {
        let mut out = self.clone();
        out.add_scaled(rhs, &S::one());
        out
    }
}

impl<S: Scalar> std::ops::Sub for &Polynomial<S> {
    type Output = Polynomial<S>;
    fn sub(self, rhs: &Polynomial<S>) -> Polynomial<S> {
        let mut out = self.clone();
        out.add_scaled(rhs, &-S::one());
        out
    }
}
