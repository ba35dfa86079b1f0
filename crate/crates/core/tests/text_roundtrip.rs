//! Randomized round trips through the text formats of monomials, states and
//! vector fields.

use bgbc_core::fock::parse_state;
use bgbc_core::vecfields::{parse_vector_field, MultiIndex, PolyVectorField};
use bgbc_core::{Flavor, Mode, Monomial, Rational, Scalar, Species, State};
use proptest::prelude::*;

const DIM: usize = 3;

fn mode() -> impl Strategy<Value = Mode> {
    let species = prop_oneof![Just(Species::Beta), Just(Species::Gamma), Just(Species::B), Just(Species::C)];
    (species, 1..=DIM as u8, -4..=-1i32).prop_map(|(s, dir, n)| Mode::new(s, dir, n))
}

fn monomial() -> impl Strategy<Value = Option<(i64, Monomial)>> {
    prop::collection::vec(mode(), 0..6).prop_map(Monomial::from_modes)
}

fn coefficient() -> impl Strategy<Value = Rational> {
    (-20..=20i64, 1..=7i64).prop_filter("nonzero", |(n, _)| *n != 0).prop_map(|(n, d)| Rational::from_frac(n, d))
}

fn field() -> impl Strategy<Value = PolyVectorField<Rational>> {
    let term = (prop::collection::vec(0..3u32, DIM), 1..=DIM, coefficient());
    prop::collection::vec(term, 0..5).prop_map(|terms| {
        terms.into_iter().fold(PolyVectorField::zero(DIM), |acc, (exps, dir, c)| {
            &acc + &PolyVectorField::monomial(MultiIndex::new(exps), dir, c)
        })
    })
}

proptest! {
    #[test]
    fn monomials(m in monomial()) {
        if let Some((_, m)) = m {
            let parsed: Monomial = m.to_string().parse().unwrap();
            prop_assert_eq!(parsed, m);
        }
    }

    #[test]
    fn states(terms in prop::collection::vec((monomial(), coefficient()), 0..5)) {
        let mut s = State::<Rational>::zero(Flavor::Full);
        for (m, c) in terms.into_iter() {
            if let Some((sign, m)) = m {
                s.add_term(m, c * Rational::from_int(sign));
            }
        }
        let parsed: State<Rational> = parse_state(&s.to_string(), Flavor::Full).unwrap();
        prop_assert_eq!(parsed, s);
    }

    #[test]
    fn vector_fields(v in field()) {
        let parsed = parse_vector_field::<Rational>(&v.to_string(), DIM).unwrap();
        prop_assert_eq!(parsed, v);
    }
}
