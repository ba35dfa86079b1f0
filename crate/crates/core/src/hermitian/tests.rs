use super::*;
use crate::Rational;

type St = State<Rational>;

fn q(n: i64) -> Rational {
    Rational::from_int(n)
}

/// The adjoint of a single mode, read off from the defining relations of the form.
fn dagger(m: Mode) -> (Rational, Mode) {
    match m.species {
        Species::Beta => (q(m.n as i64), Mode::gamma(m.dir, -m.n - 1)),
        Species::Gamma => (q(1) / q(-(m.n as i64) - 1), Mode::beta(m.dir, -m.n - 1)),
        Species::B => (q(1), Mode::c(m.dir, -m.n - 1)),
        Species::C => (q(1), Mode::b(m.dir, -m.n - 1)),
    }
}

/// `(a, b)` by peeling the leftmost mode off `a` and moving its adjoint onto `b`.
fn recursive_inner(a: &Monomial, b: &St) -> Rational {
    match a.split_first() {
        None => b.coefficient(&Monomial::vacuum()),
        Some((x, rest)) => {
            let (c, y) = dagger(x);
            let moved = apply_mode(y, b).unwrap();
            c * recursive_inner(&rest, &moved)
        }
    }
}

#[test]
fn small_norms() {
    let vac = St::vacuum(Flavor::Plus);
    assert_eq!(inner(&vac, &vac).unwrap(), q(1));
    let b2 = St::from_modes([Mode::beta(1, -2)], Flavor::Plus);
    assert_eq!(inner(&b2, &b2).unwrap(), q(2));
    let bb = St::from_modes([Mode::beta(1, -1), Mode::beta(1, -1)], Flavor::Plus);
    assert_eq!(inner(&bb, &bb).unwrap(), q(2));
    let full = St::vacuum(Flavor::Full);
    assert_eq!(inner(&full, &full), Err(Error::FullFlavorInner));
}

#[test]
fn closed_form_matches_the_recursive_definition() {
    for dim in 1..=2 {
        let cache = SpaceCache::plus(dim);
        for (k, l) in cache.grades(3) {
            let ws = cache.get(k, l);
            for a in ws.basis() {
                for j in 0..ws.dim() {
                    let b: St = ws.basis_state(j);
                    let expected = recursive_inner(a, &b);
                    let got = inner(&St::from_monomial(a.clone(), Flavor::Plus), &b).unwrap();
                    assert_eq!(got, expected, "({a}, {b})");
                }
            }
        }
    }
}

#[test]
fn gram_is_positive_definite() {
    for dim in 1..=3 {
        let cache = SpaceCache::plus(dim);
        for (k, l) in cache.grades(if dim == 3 { 3 } else { 4 }) {
            assert!(GramMatrix::<Rational>::new(&cache.get(k, l)).unwrap().is_positive_definite());
        }
    }
}

#[test]
fn single_modes_are_adjoint() {
    for dim in 1..=2 {
        assert_eq!(single_mode_check::<Rational>(&SpaceCache::plus(dim), 3).unwrap(), None);
    }
}

#[test]
fn adjoint_relations_hold() {
    let cache = SpaceCache::plus(2);
    for family in AdjointFamily::ALL {
        let r = adjoint_check::<Rational>(family, &cache, 3, false).unwrap();
        assert!(r.passed(), "{:?}", r.failure);
        assert!(r.checked > 0);
    }
    for dim in [1, 3] {
        let cache = SpaceCache::plus(dim);
        for family in [AdjointFamily::Q, AdjointFamily::L, AdjointFamily::D] {
            let r = adjoint_check::<Rational>(family, &cache, 2, false).unwrap();
            assert!(r.passed(), "N={dim} {:?}", r.failure);
        }
        assert!(adjoint_check::<Rational>(AdjointFamily::Dp, &cache, 2, false).is_err());
    }
}

#[test]
fn sign_flip_is_detected() {
    let cache = SpaceCache::plus(2);
    let r = adjoint_check::<Rational>(AdjointFamily::Q, &cache, 2, true).unwrap();
    let w = r.failure.expect("the flipped relation must fail");
    assert!(w.relation.starts_with("Q*_("));
    assert_ne!(w.lhs, w.rhs);
}

#[test]
fn empty_range_passes_vacuously() {
    let cache = SpaceCache::plus(2);
    let r = adjoint_check::<Rational>(AdjointFamily::L, &cache, -1, false).unwrap();
    assert!(r.passed());
    assert_eq!(r.checked, 0);
}
