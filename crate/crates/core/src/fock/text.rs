//! Canonical text form, e.g. `b{1,-2} c{2,-1} g[0,1]`.
//!
//! Modes print as `species{direction,mode}` with species one of `beta`,
//! `gamma`, `b`, `c`; the `gamma_(-1)` polynomial part prints as `g[e1,..,ed]`
//! (trailing zero exponents omitted). The vacuum is `1`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::mode::{Mode, Species};
use super::monomial::Monomial;
use super::state::{Flavor, State};

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_vacuum() {
            return write!(f, "1");
        }
        let mut first = true;
        for m in self.word() {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{m}")?;
            first = false;
        }
        if self.gamma_degree() > 0 {
            let exps = self.gamma_poly(self.max_dir() as usize);
            let last = exps.iter().rposition(|e| *e > 0).unwrap();
            let body: Vec<String> = exps[..=last].iter().map(|e| e.to_string()).collect();
            if !first {
                write!(f, " ")?;
            }
            write!(f, "g[{}]", body.join(","))?;
        }
        Ok(())
    }
}

fn parse_mode(token: &str) -> Result<Mode> {
    let err = || Error::Parse(format!("bad mode token `{token}`"));
    let open = token.find('{').ok_or_else(err)?;
    let body = token[open + 1..].strip_suffix('}').ok_or_else(err)?;
    let species = match &token[..open] {
        "beta" => Species::Beta,
        "gamma" => Species::Gamma,
        "b" => Species::B,
        "c" => Species::C,
        _ => return Err(err()),
    };
    let (dir, n) = body.split_once(',').ok_or_else(err)?;
    let dir: u8 = dir.trim().parse().map_err(|_| err())?;
    let n: i32 = n.trim().parse().map_err(|_| err())?;
    if dir == 0 || n >= 0 {
        return Err(Error::Parse(format!("`{token}`: monomials hold creation modes with direction >= 1")));
    }
    Ok(Mode::new(species, dir, n))
}

fn parse_gamma_poly(token: &str, out: &mut Vec<Mode>) -> Result<()> {
    let err = || Error::Parse(format!("bad gamma polynomial `{token}`"));
    let body = token.strip_prefix("g[").and_then(|t| t.strip_suffix(']')).ok_or_else(err)?;
    if body.trim().is_empty() {
        return Ok(());
    }
    for (i, e) in body.split(',').enumerate() {
        let e: u32 = e.trim().parse().map_err(|_| err())?;
        for _ in 0..e {
            out.push(Mode::gamma(i as u8 + 1, -1));
        }
    }
    Ok(())
}

/// Parses mode tokens into a canonical monomial and the reordering sign.
pub fn parse_monomial_signed<'a, I: IntoIterator<Item = &'a str>>(tokens: I) -> Result<(i64, Monomial)> {
    let mut modes = Vec::new();
    for tok in tokens {
        if tok == "1" {
            continue;
        } else if tok.starts_with("g[") {
            parse_gamma_poly(tok, &mut modes)?;
        } else {
            modes.push(parse_mode(tok)?);
        }
    }
    Monomial::from_modes(modes).ok_or_else(|| Error::Parse("an odd mode is repeated".into()))
}

impl FromStr for Monomial {
    type Err = Error;

    /// Accepts any order of even modes; odd modes must already be in
    /// canonical order (otherwise the text denotes a signed monomial).
    fn from_str(s: &str) -> Result<Self> {
        let (sign, m) = parse_monomial_signed(s.split_whitespace())?;
        if sign < 0 {
            return Err(Error::Parse(format!("`{s}` is minus a canonical monomial")));
        }
        Ok(m)
    }
}

impl<S: Scalar> fmt::Display for State<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let (neg, abs) = if c.is_negative() { (true, -c.clone()) } else { (false, c.clone()) };
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_vacuum() {
                write!(f, "{abs}")?;
            } else {
                write!(f, "{abs} {m}")?;
            }
        }
        Ok(())
    }
}

/// Parses `2 beta{1,-1} c{1,-1} - 1/2 b{1,-1} c{1,-2} + 3`.
pub fn parse_state<S: Scalar>(text: &str, flavor: Flavor) -> Result<State<S>> {
    let mut out = State::zero(flavor);
    if text.trim() == "0" {
        return Ok(out);
    }
    let mut sign = S::one();
    let mut coef: Option<S> = None;
    let mut tokens: Vec<&str> = Vec::new();
    let flush = |sign: &S, coef: &mut Option<S>, tokens: &mut Vec<&str>, out: &mut State<S>| -> Result<()> {
        if coef.is_none() && tokens.is_empty() {
            return Ok(());
        }
        let (s, m) = parse_monomial_signed(tokens.drain(..))?;
        if flavor == Flavor::Plus && m.has_gamma_zero_weight() {
            return Err(Error::Parse("gamma_(-1) in a PLUS state".into()));
        }
        let c = coef.take().unwrap_or_else(S::one) * sign.clone() * S::from_int(s);
        out.add_term(m, c);
        Ok(())
    };
    for tok in text.split_whitespace() {
        match tok {
            "+" | "-" => {
                flush(&sign, &mut coef, &mut tokens, &mut out)?;
                sign = if tok == "-" { -S::one() } else { S::one() };
            }
            _ if coef.is_none() && tokens.is_empty() && tok != "1" && !tok.contains('{') && !tok.starts_with("g[") => {
                let (neg, body) = match tok.strip_prefix('-') {
                    Some(rest) => (true, rest),
                    None => (false, tok),
                };
                let v = S::parse(body).ok_or_else(|| Error::Parse(format!("bad coefficient `{tok}`")))?;
                coef = Some(if neg { -v } else { v });
            }
            _ if coef.is_none() && tokens.is_empty() && tok == "1" => coef = Some(S::one()),
            _ => tokens.push(tok),
        }
    }
    flush(&sign, &mut coef, &mut tokens, &mut out)?;
    Ok(out)
}
