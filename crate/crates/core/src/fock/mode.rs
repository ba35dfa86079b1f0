use std::fmt;

/// The four free-field species. The declaration order is the canonical
/// order used inside monomials: beta < gamma < b < c.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Species {
    Beta,
    Gamma,
    B,
    C,
}

impl Species {
    pub const ALL: [Species; 4] = [Species::Beta, Species::Gamma, Species::B, Species::C];

    pub fn is_odd(self) -> bool {
        matches!(self, Species::B | Species::C)
    }

    /// Conformal weight of the field: beta and b have weight 1, gamma and c weight 0.
    pub fn field_weight(self) -> i64 {
        match self {
            Species::Beta | Species::B => 1,
            Species::Gamma | Species::C => 0,
        }
    }

    /// Fermionic charge: c carries +1, b carries -1.
    pub fn charge(self) -> i64 {
        match self {
            Species::C => 1,
            Species::B => -1,
            _ => 0,
        }
    }

    /// The species a mode of `self` pairs with.
    pub fn partner(self) -> Species {
        match self {
            Species::Beta => Species::Gamma,
            Species::Gamma => Species::Beta,
            Species::B => Species::C,
            Species::C => Species::B,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Species::Beta => "beta",
            Species::Gamma => "gamma",
            Species::B => "b",
            Species::C => "c",
        }
    }
}

/// A single mode `P^dir_(n)`. Directions are 1-based.
///
/// Ordering is (species, direction, mode), which is the canonical monomial order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mode {
    pub species: Species,
    pub dir: u8,
    pub n: i32,
}

impl Mode {
    pub const fn new(species: Species, dir: u8, n: i32) -> Self {
        Mode { species, dir, n }
    }

    pub const fn beta(dir: u8, n: i32) -> Self {
        Mode::new(Species::Beta, dir, n)
    }

    pub const fn gamma(dir: u8, n: i32) -> Self {
        Mode::new(Species::Gamma, dir, n)
    }

    pub const fn b(dir: u8, n: i32) -> Self {
        Mode::new(Species::B, dir, n)
    }

    pub const fn c(dir: u8, n: i32) -> Self {
        Mode::new(Species::C, dir, n)
    }

    /// `alpha^dir_(m) = -m gamma^dir_(m-1)`; `None` when the coefficient vanishes (m = 0).
    pub fn alpha(dir: u8, m: i32) -> Option<(i64, Mode)> {
        (m != 0).then(|| (-(m as i64), Mode::gamma(dir, m - 1)))
    }

    pub fn is_odd(self) -> bool {
        self.species.is_odd()
    }

    pub fn is_creation(self) -> bool {
        self.n < 0
    }

    /// Change in conformal weight when this mode acts: `-n` for beta and b,
    /// `-n - 1` for gamma and c.
    pub fn weight_shift(self) -> i64 {
        self.species.field_weight() - self.n as i64 - 1
    }

    pub fn charge(self) -> i64 {
        self.species.charge()
    }

    /// The unique mode this one has a non-zero (anti)commutator with.
    pub fn partner(self) -> Mode {
        Mode::new(self.species.partner(), self.dir, -self.n - 1)
    }

    /// Scalar value of the supercommutator `[self, other}` of two modes.
    ///
    /// Conventions: `[beta_(m), gamma_(n)] = delta_{m+n+1,0}`, hence
    /// `[gamma_(m), beta_(n)] = -delta`, and `{b_(m), c_(n)} = {c_(m), b_(n)} = delta`.
    pub fn bracket(self, other: Mode) -> i64 {
        if other != self.partner() {
            return 0;
        }
        match self.species {
            Species::Gamma => -1,
            _ => 1,
        }
    }

    pub fn is_gamma_zero_weight(self) -> bool {
        self.species == Species::Gamma && self.n == -1
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{{{},{}}}", self.species.name(), self.dir, self.n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_shifts() {
        assert_eq!(Mode::beta(1, -2).weight_shift(), 2);
        assert_eq!(Mode::gamma(1, -2).weight_shift(), 1);
        assert_eq!(Mode::gamma(1, -1).weight_shift(), 0);
        assert_eq!(Mode::b(1, -1).weight_shift(), 1);
        assert_eq!(Mode::c(1, -1).weight_shift(), 0);
        assert_eq!(Mode::beta(1, 0).weight_shift(), 0);
    }

    #[test]
    fn alpha_normalization() {
        assert_eq!(Mode::alpha(2, -1), Some((1, Mode::gamma(2, -2))));
        assert_eq!(Mode::alpha(1, -3), Some((3, Mode::gamma(1, -4))));
        assert_eq!(Mode::alpha(1, 2), Some((-2, Mode::gamma(1, 1))));
        assert_eq!(Mode::alpha(1, 0), None);
    }

    #[test]
    fn bracket_signs() {
        assert_eq!(Mode::beta(1, -3).bracket(Mode::gamma(1, 2)), 1);
        assert_eq!(Mode::gamma(1, 2).bracket(Mode::beta(1, -3)), -1);
        assert_eq!(Mode::b(2, 0).bracket(Mode::c(2, -1)), 1);
        assert_eq!(Mode::c(2, 0).bracket(Mode::b(2, -1)), 1);
        assert_eq!(Mode::b(1, 0).bracket(Mode::c(2, -1)), 0);
    }
}
