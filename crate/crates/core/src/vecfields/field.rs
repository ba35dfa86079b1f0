use std::fmt;
use std::str::FromStr;

use super::poly::{MultiIndex, Polynomial};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// `sum_i P_i d/dx_i` with polynomial coefficients; directions are 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyVectorField<S> {
    comps: Vec<Polynomial<S>>,
}

impl<S: Scalar> PolyVectorField<S> {
    pub fn zero(dim: usize) -> Self {
        PolyVectorField { comps: vec![Polynomial::zero(dim); dim] }
    }

    pub fn from_components(comps: Vec<Polynomial<S>>) -> Self {
        let dim = comps.len();
        assert!(comps.iter().all(|p| p.dim() == dim), "component polynomials must have N variables");
        PolyVectorField { comps }
    }

    /// `c x^s d/dx_dir`.
    pub fn monomial(s: MultiIndex, dir: usize, c: S) -> Self {
        let mut v = Self::zero(s.dim());
        v.add_term(s, dir, c);
        v
    }

    pub fn dim(&self) -> usize {
        self.comps.len()
    }

    pub fn add_term(&mut self, s: MultiIndex, dir: usize, c: S) {
        self.comps[dir - 1].add_term(s, c);
    }

    pub fn component(&self, dir: usize) -> &Polynomial<S> {
        &self.comps[dir - 1]
    }

    pub fn components(&self) -> &[Polynomial<S>] {
        &self.comps
    }

    /// `(s, dir, coefficient)` for every stored term.
    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, usize, &S)> {
        self.comps.iter().enumerate().flat_map(|(i, p)| p.terms().map(move |(s, c)| (s, i + 1, c)))
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Polynomial::is_zero)
    }

    /// `n` when every coefficient is homogeneous of degree `n + 1`.
    pub fn degree(&self) -> Option<i64> {
        let mut degs = self.terms().map(|(s, _, _)| s.degree());
        let d = degs.next()?;
        degs.all(|e| e == d).then_some(d as i64 - 1)
    }

    pub fn add_scaled(&mut self, other: &PolyVectorField<S>, c: &S) {
        for (p, q) in self.comps.iter_mut().zip(&other.comps) {
            p.add_scaled(q, c);
        }
    }

    pub fn scaled(&self, c: &S) -> Self {
        let mut out = Self::zero(self.dim());
        out.add_scaled(self, c);
        out
    }

    /// `v(f) = sum_i P_i df/dx_i`.
    pub fn apply(&self, f: &Polynomial<S>) -> Polynomial<S> {
        let mut out = Polynomial::zero(self.dim());
        for (i, p) in self.comps.iter().enumerate() {
            out.add_scaled(&p.mul(&f.derivative(i + 1)), &S::one());
        }
        out
    }

    /// `[u, v] = sum_j (u(Q_j) - v(P_j)) d/dx_j`.
    pub fn bracket(&self, other: &PolyVectorField<S>) -> Self {
        let comps = (0..self.dim()).map(|j| &self.apply(&other.comps[j]) - &other.apply(&self.comps[j])).collect();
        PolyVectorField { comps }
    }

    pub fn divergence(&self) -> Polynomial<S> {
        let mut out = Polynomial::zero(self.dim());
        for (i, p) in self.comps.iter().enumerate() {
            out.add_scaled(&p.derivative(i + 1), &S::one());
        }
        out
    }

    /// `sum_i (d^s P_i) d/dx_i`.
    pub fn derivative_multi(&self, s: &MultiIndex) -> Self {
        PolyVectorField { comps: self.comps.iter().map(|p| p.derivative_multi(s)).collect() }
    }
}

impl<S: Scalar> std::ops::Add for &PolyVectorField<S> {
    type Output = PolyVectorField<S>;
    fn add(self, rhs: &PolyVectorField<S>) -> PolyVectorField<S> {
        let mut out = self.clone();
        out.add_scaled(rhs, &S::one());
        out
    }
}

impl<S: Scalar> std::ops::Sub for &PolyVectorField<S> {
    type Output = PolyVectorField<S>;
    fn sub(self, rhs: &PolyVectorField<S>) -> PolyVectorField<S> {
        let mut out = self.clone();
        out.add_scaled(rhs, &-S::one());
        out
    }
}

impl<S: Scalar> fmt::Display for PolyVectorField<S> {
    /// `2 x1^2 d2 - 1 x1 x2 d1`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (s, dir, c) in self.terms() {
            let mag = if c.is_negative() { -c.clone() } else { c.clone() };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            write!(f, "{mag}")?;
            if s.degree() > 0 {
                write!(f, " {s}")?;
            }
            write!(f, " d{dir}")?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Parses the text form for a given `N`. Coefficients may be omitted
/// (`x1^2 d2`) and may be rationals (`1/2 x1 d1`).
pub fn parse_vector_field<S: Scalar>(text: &str, dim: usize) -> Result<PolyVectorField<S>> {
    let err = |m: String| Error::Parse(m);
    let mut out = PolyVectorField::zero(dim);
    let trimmed = text.trim();
    if trimmed == "0" {
        return Ok(out);
    }
    let mut sign = S::one();
    let mut coef: Option<S> = None;
    let mut exps = vec![0u32; dim];
    let mut pending = false;
    let mut tokens: Vec<String> = Vec::new();
    for raw in trimmed.split_whitespace() {
        // allow "-2" and "-x1" as well as a detached "-"
        if let Some(rest) = raw.strip_prefix('-').filter(|r| !r.is_empty()) {
            tokens.push("-".into());
            tokens.push(rest.into());
        } else {
            tokens.push(raw.into());
        }
    }
    for tok in &tokens {
        match tok.as_str() {
            "+" | "-" => {
                if pending {
                    return Err(err(format!("term before '{tok}' has no d<i>")));
                }
                if tok == "-" {
                    sign = -sign;
                }
            }
            t if t.starts_with('d') => {
                let dir: usize = t[1..].parse().map_err(|_| err(format!("bad direction '{t}'")))?;
                if dir == 0 || dir > dim {
                    return Err(Error::Direction { dir, dim });
                }
                let c = coef.take().unwrap_or_else(S::one) * sign.clone();
                out.add_term(MultiIndex::new(std::mem::replace(&mut exps, vec![0; dim])), dir, c);
                sign = S::one();
                pending = false;
            }
            t if t.starts_with('x') => {
                let (var, pow) = match t[1..].split_once('^') {
                    Some((v, p)) => (v, p.parse::<u32>().map_err(|_| err(format!("bad power in '{t}'")))?),
                    None => (&t[1..], 1),
                };
                let dir: usize = var.parse().map_err(|_| err(format!("bad variable '{t}'")))?;
                if dir == 0 || dir > dim {
                    return Err(Error::Direction { dir, dim });
                }
                exps[dir - 1] += pow;
                pending = true;
            }
            t => {
                if pending || coef.is_some() {
                    return Err(err(format!("unexpected coefficient '{t}'")));
                }
                coef = Some(S::parse(t).ok_or_else(|| err(format!("bad coefficient '{t}'")))?);
                pending = true;
            }
        }
    }
    if pending {
        return Err(err("trailing term has no d<i>".into()));
    }
    Ok(out)
}

impl<S: Scalar> FromStr for PolyVectorField<S> {
    type Err = Error;

    /// Infers `N` from the largest index mentioned.
    fn from_str(text: &str) -> Result<Self> {
        let dim = text
            .split(|c: char| !c.is_ascii_alphanumeric())
            .filter_map(|t| t.strip_prefix('x').or_else(|| t.strip_prefix('d')))
            .filter_map(|t| t.parse::<usize>().ok())
            .max()
            .unwrap_or(1);
        parse_vector_field(text, dim)
    }
}
