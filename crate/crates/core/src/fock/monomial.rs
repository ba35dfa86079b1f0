use smallvec::SmallVec;

use super::mode::{Mode, Species};

pub(crate) type Word = SmallVec<[Mode; 8]>;

/// A canonically ordered product of creation modes applied to the vacuum.
///
/// The word is sorted by (species, direction, mode); each odd mode occurs at
/// most once, even modes may repeat. `gamma_(-1)` factors live in the same
/// word (they sort last within their direction) and are exposed through
/// [`Monomial::gamma_poly`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    modes: Word,
}

/// Sorts `modes` into canonical order. Returns the sign picked up by
/// permuting the odd modes, or `None` if an odd mode repeats.
pub(crate) fn canonicalize(mut modes: Word) -> Option<(i64, Monomial)> {
    let mut sign = 1i64;
    // insertion sort; words are short
    for i in 1..modes.len() {
        let mut j = i;
        while j > 0 && modes[j - 1] > modes[j] {
            if modes[j - 1].is_odd() && modes[j].is_odd() {
                sign = -sign;
            }
            modes.swap(j - 1, j);
            j -= 1;
        }
    }
    for pair in modes.windows(2) {
        if pair[0] == pair[1] && pair[0].is_odd() {
            return None;
        }
    }
    Some((sign, Monomial { modes }))
}

impl Monomial {
    pub fn vacuum() -> Self {
        Monomial::default()
    }

    /// Builds the monomial `m_1 m_2 ... m_r |0>` for creation modes given in any
    /// order; returns the reordering sign with it.
    ///
    /// # Panics
    /// If a mode is not a creation mode.
    pub fn from_modes<I: IntoIterator<Item = Mode>>(modes: I) -> Option<(i64, Monomial)> {
        let word: Word = modes.into_iter().collect();
        assert!(word.iter().all(|m| m.is_creation()), "monomials hold creation modes only");
        canonicalize(word)
    }

    pub fn modes(&self) -> &[Mode] {
        &self.modes
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.modes.len()
    }

    pub fn is_vacuum(&self) -> bool {
        self.modes.is_empty()
    }

    pub fn weight(&self) -> i64 {
        self.modes.iter().map(|m| m.weight_shift()).sum()
    }

    pub fn charge(&self) -> i64 {
        self.modes.iter().map(|m| m.charge()).sum()
    }

    pub fn grade(&self) -> (i64, i64) {
        (self.weight(), self.charge())
    }

    pub fn is_odd(&self) -> bool {
        self.modes.iter().filter(|m| m.is_odd()).count() % 2 == 1
    }

    pub fn has_gamma_zero_weight(&self) -> bool {
        self.modes.iter().any(|m| m.is_gamma_zero_weight())
    }

    /// Modes other than `gamma_(-1)`.
    pub fn word(&self) -> impl Iterator<Item = &Mode> {
        self.modes.iter().filter(|m| !m.is_gamma_zero_weight())
    }

    /// Exponents of `gamma^1_(-1), ..., gamma^dim_(-1)`.
    pub fn gamma_poly(&self, dim: usize) -> Vec<u32> {
        let mut exps = vec![0u32; dim];
        for m in self.modes.iter().filter(|m| m.is_gamma_zero_weight()) {
            let idx = m.dir as usize - 1;
            if idx >= exps.len() {
                exps.resize(idx + 1, 0);
            }
            exps[idx] += 1;
        }
        exps
    }

    pub fn gamma_degree(&self) -> u32 {
        self.modes.iter().filter(|m| m.is_gamma_zero_weight()).count() as u32
    }

    /// Largest direction index used, 0 for the vacuum.
    pub fn max_dir(&self) -> u8 {
        self.modes.iter().map(|m| m.dir).max().unwrap_or(0)
    }

    /// Number of c modes plus twice the number of gamma modes.
    pub fn sw_degree(&self) -> u32 {
        self.modes
            .iter()
            .map(|m| match m.species {
                Species::C => 1,
                Species::Gamma => 2,
                _ => 0,
            })
            .sum()
    }

    /// `mode * self` for a creation mode: the sign of moving it into place
    /// and the product, or `None` when an odd mode is repeated.
    pub fn mul_creation(&self, mode: Mode) -> Option<(i64, Monomial)> {
        debug_assert!(mode.is_creation());
        let pos = self.modes.partition_point(|m| *m < mode);
        if mode.is_odd() && self.modes.get(pos) == Some(&mode) {
            return None;
        }
        let sign =
            if mode.is_odd() && self.modes[..pos].iter().filter(|m| m.is_odd()).count() % 2 == 1 { -1 } else { 1 };
        let mut modes = self.modes.clone();
        modes.insert(pos, mode);
        Some((sign, Monomial { modes }))
    }

    /// `mode * self` for an annihilation mode (n >= 0), computed by moving the
    /// mode to the vacuum. Even modes that repeat contribute once per copy, so
    /// the integer coefficient carries the multiplicity.
    pub fn contract(&self, mode: Mode) -> Option<(i64, Monomial)> {
        debug_assert!(!mode.is_creation());
        let partner = mode.partner();
        let pos = self.modes.iter().position(|m| *m == partner)?;
        let mult = self.modes[pos..].iter().take_while(|m| **m == partner).count() as i64;
        let sign =
            if mode.is_odd() && self.modes[..pos].iter().filter(|m| m.is_odd()).count() % 2 == 1 { -1 } else { 1 };
        let mut modes = self.modes.clone();
        modes.remove(pos);
        Some((sign * mult * mode.bracket(partner), Monomial { modes }))
    }

    /// Replaces the mode at `pos` by `with` and re-sorts.
    pub(crate) fn replace_at(&self, pos: usize, with: Mode) -> Option<(i64, Monomial)> {
        let mut modes = self.modes.clone();
        modes[pos] = with;
        canonicalize(modes)
    }

    /// Removes the first mode: `self = first * rest` exactly (no sign), since
    /// the first mode is already leftmost.
    #[cfg(test)]
    pub(crate) fn split_first(&self) -> Option<(Mode, Monomial)> {
        let (first, rest) = self.modes.split_first()?;
        Some((*first, Monomial { modes: rest.iter().copied().collect() }))
    }

    pub(crate) fn from_sorted_unchecked(modes: Word) -> Monomial {
        Monomial { modes }
    }
}
