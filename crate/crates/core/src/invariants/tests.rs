use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::action::top_component_arc_invariant;
use crate::fock::{Flavor, Mode};
use crate::vecfields::random_element;
use crate::vertex::{generator_state, GeneratorName};
use crate::Rational;

type St = State<Rational>;

fn ctx(kind: AlgebraType, dim: usize) -> InvariantContext<Rational> {
    InvariantContext::new(kind, dim, None).unwrap()
}

#[test]
fn weight_zero_invariants() {
    let r = invariant_space::<Rational>(AlgebraType::A, 2, 0, 0, None).unwrap();
    assert_eq!(r.dim_full_invariants, 1);
    assert!(r.basis[0].coefficient(&crate::fock::Monomial::vacuum()) != Rational::from_int(0));
    let r = invariant_space::<Rational>(AlgebraType::A, 2, 0, 2, None).unwrap();
    assert_eq!(r.dim_full_invariants, 1);
    let e = generator_state::<Rational>(GeneratorName::E, 2).unwrap();
    assert_eq!(r.basis[0], e);
    assert_eq!(r.g1, "1 x1^2 d2");
}

#[test]
fn g1_validation() {
    let zero = PolyVectorField::<Rational>::zero(2);
    assert_eq!(invariant_space(AlgebraType::A, 2, 0, 0, Some(zero)).err(), Some(Error::InvalidG1));
    let div = crate::vecfields::parse_vector_field::<Rational>("x1^2 d1", 2).unwrap();
    assert_eq!(invariant_space(AlgebraType::A, 2, 0, 0, Some(div)).err(), Some(Error::InvalidG1));
    assert_eq!(invariant_space::<Rational>(AlgebraType::C, 3, 0, 0, None).err(), Some(Error::OddSymplectic(3)));
}

#[test]
fn invariants_match_the_generated_algebra_n2() {
    let c = ctx(AlgebraType::A, 2);
    let rows = invariant_table(&c, 3, None).unwrap();
    assert_eq!(rows.len(), c.cache().grades(3).len());
    for r in &rows {
        assert_eq!(r.comparison, Comparison::Match, "{:?}", r.report.grade);
        assert_eq!(Some(r.report.dim_full_invariants), r.report.dim_oracle_span);
        assert!(r.report.dim_full_invariants <= r.report.dim_g0_invariants);
    }
    let at = |k, l| rows.iter().find(|r| r.report.grade == (k, l)).unwrap().report.dim_full_invariants;
    assert_eq!(at(1, 1), 2);
    assert_eq!(at(2, -2), 1);
}

#[test]
fn charge_window_filters_rows() {
    let c = ctx(AlgebraType::A, 2);
    let rows = invariant_table(&c, 1, Some((0, 1))).unwrap();
    let grades: Vec<_> = rows.iter().map(|r| r.report.grade).collect();
    assert_eq!(grades, vec![(0, 0), (0, 1), (1, 0), (1, 1)]);
    assert!(invariant_table(&c, -1, None).unwrap().is_empty());
}

#[test]
fn reductions_agree() {
    let c = ctx(AlgebraType::A, 2);
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let randoms: Vec<InvariantContext<Rational>> = (0..5)
        .map(|_| {
            let g1 = random_element::<Rational, _>(AlgebraType::A, 2, 1, &mut rng).unwrap();
            InvariantContext::with_cache(AlgebraType::A, c.cache().clone(), Some(g1)).unwrap()
        })
        .collect();
    for (k, l) in c.cache().grades(3) {
        let (_, full) = c.full_invariants(k, l).unwrap();
        let graded = c.graded_invariants(k, l, 2).unwrap();
        assert_eq!(full.len(), graded.len(), "{k},{l}");
        for r in &randoms {
            assert_eq!(r.full_invariants(k, l).unwrap().1, full, "{k},{l} with g1 = {}", r.g1);
        }
    }
}

#[test]
fn generators_are_annihilated() {
    let mut fields = basis_graded::<Rational>(AlgebraType::A, 2, 0).unwrap();
    fields.extend(basis_graded::<Rational>(AlgebraType::A, 2, 1).unwrap());
    for g in GeneratorName::ALL {
        let s = generator_state::<Rational>(g, 2).unwrap();
        for v in &fields {
            assert!(crate::action::act_l_plus(v, &s).unwrap().is_zero(), "{g:?} under {v}");
        }
    }
}

#[test]
fn oracle_contents() {
    let cache = SpaceCache::plus(2);
    let a = oracle_span::<Rational>(AlgebraType::A, &cache, 3).unwrap();
    let c = oracle_span::<Rational>(AlgebraType::C, &cache, 3).unwrap();
    assert_eq!(a.dims(), c.dims());
    let contains = |k: i64, l: i64, s: &St| {
        let ws = cache.get(k, l);
        a.span(k, l).unwrap().contains(ws.coordinates(s).unwrap())
    };
    assert!(contains(0, 2, &generator_state(GeneratorName::E, 2).unwrap()));
    assert!(contains(1, 1, &generator_state(GeneratorName::Q, 2).unwrap()));
    assert!(contains(1, 1, &generator_state(GeneratorName::C, 2).unwrap()));
    assert_eq!(a.dim_at(1, 1), 2);
    assert_eq!(a.dim_at(5, 5), 0);
}

#[test]
fn d_prime_wick_power() {
    // for N = 2 a single copy of D' is already D
    let dp = generator_state::<Rational>(GeneratorName::Dp, 2).unwrap();
    assert_eq!(dp, generator_state(GeneratorName::D, 2).unwrap());
    // N = 4: :D' D': = 2! D
    let dp = generator_state::<Rational>(GeneratorName::Dp, 4).unwrap();
    let sq = crate::vertex::normal_order(&dp, &dp).unwrap();
    assert_eq!(sq, generator_state::<Rational>(GeneratorName::D, 4).unwrap().scaled(&Rational::from_int(2)));
}

#[test]
fn characters() {
    assert_eq!(basis_character(1, 1).unwrap(), product_character(1, 1));
    let t = product_character(1, 1);
    let row: Vec<_> = (-1..=2).map(|l| t.get(&(1, l)).copied().unwrap_or(0)).collect();
    assert_eq!(row, vec![1, 3, 3, 1]);
    assert_eq!(t.keys().filter(|(k, _)| *k == 1).count(), 4);
    let t = product_character(2, 0);
    assert_eq!(t, CharacterTable::from([((0, 0), 1), ((0, 1), 2), ((0, 2), 1)]));
    for dim in 1..=3 {
        assert_eq!(basis_character(dim, 5).unwrap(), product_character(dim, 5), "N = {dim}");
    }
    let inv = character::<Rational>(CharacterSource::Invariants, AlgebraType::A, 2, 0).unwrap();
    assert_eq!(inv, CharacterTable::from([((0, 0), 1), ((0, 2), 1)]));
    let oracle = character::<Rational>(CharacterSource::Oracle, AlgebraType::A, 2, 2).unwrap();
    let inv = character::<Rational>(CharacterSource::Invariants, AlgebraType::A, 2, 2).unwrap();
    assert_eq!(oracle, inv);
}

#[test]
fn top_degree_parts_are_arc_invariant() {
    let c = ctx(AlgebraType::A, 2);
    let g0 = basis_graded::<Rational>(AlgebraType::A, 2, 0).unwrap();
    for (k, l) in c.cache().grades(3) {
        let ws = c.space(k, l);
        for v in c.full_invariants(k, l).unwrap().1 {
            let s = ws.state_from_coordinates(&v);
            assert_eq!(top_component_arc_invariant(&s, &g0).unwrap(), None, "{s}");
        }
    }
    // a non-invariant top part is detected
    let s = St::from_modes([Mode::gamma(2, -3)], Flavor::Plus);
    assert!(top_component_arc_invariant(&s, &g0).unwrap().is_some());
}

#[test]
fn evidence_n3() {
    let ev = conjecture_evidence::<Rational>(3, DEFAULT_EVIDENCE_KMAX).unwrap();
    assert_eq!(ev.len(), 1);
    let e = &ev[0];
    assert!(e.contained());
    let at = |k, l| e.rows.iter().find(|r| r.report.grade == (k, l)).unwrap();
    assert_eq!(at(0, 3).report.dim_full_invariants, 1);
    assert_eq!(at(0, 1).report.dim_full_invariants, 0);
}
