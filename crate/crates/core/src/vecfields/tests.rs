use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::linalg::{SparseMatrix, Subspace};
use crate::scalar::Scalar;
use crate::Rational;

type V = PolyVectorField<Rational>;

fn q(n: i64) -> Rational {
    Rational::from_int(n)
}

fn field(text: &str, dim: usize) -> V {
    parse_vector_field(text, dim).unwrap()
}

fn random_field<R: Rng>(dim: usize, n: u32, rng: &mut R) -> V {
    let mut v = V::zero(dim);
    for s in MultiIndex::all_of_degree(dim, n + 1) {
        for dir in 1..=dim {
            if rng.gen_bool(0.5) {
                v.add_term(s.clone(), dir, q(rng.gen_range(-4..=4)));
            }
        }
    }
    v
}

#[test]
fn multi_index_enumeration() {
    let all = MultiIndex::all_of_degree(3, 2);
    assert_eq!(all.len(), 6);
    assert_eq!(all[0].exponents(), &[2, 0, 0]);
    assert_eq!(MultiIndex::new(vec![2, 1]).factorial::<Rational>(), q(2));
    assert_eq!(MultiIndex::new(vec![2, 1]).divisors().len(), 6);
}

#[test]
fn bracket_examples() {
    let u = field("x1 d2", 2);
    let v = field("x2 d1", 2);
    assert_eq!(u.bracket(&v), field("x1 d1 - x2 d2", 2));
    for n in 1..=4u32 {
        let a = V::monomial(MultiIndex::new(vec![n, 0]), 2, q(1));
        let b = field("x2^2 d1", 2);
        let mut expected = V::zero(2);
        expected.add_term(MultiIndex::new(vec![n, 1]), 1, q(2));
        expected.add_term(MultiIndex::new(vec![n - 1, 2]), 2, q(-(n as i64)));
        assert_eq!(a.bracket(&b), expected, "n = {n}");
    }
}

#[test]
fn bracket_is_antisymmetric_and_satisfies_jacobi() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..20 {
        let v = random_field(3, rng.gen_range(0..=2), &mut rng);
        assert!(v.bracket(&v).is_zero());
    }
    for _ in 0..50 {
        let dim = rng.gen_range(1..=3);
        let x = random_field(dim, rng.gen_range(0..=2), &mut rng);
        let y = random_field(dim, rng.gen_range(0..=2), &mut rng);
        let z = random_field(dim, rng.gen_range(0..=2), &mut rng);
        let mut j = x.bracket(&y.bracket(&z));
        j.add_scaled(&y.bracket(&z.bracket(&x)), &q(1));
        j.add_scaled(&z.bracket(&x.bracket(&y)), &q(1));
        assert!(j.is_zero());
    }
}

#[test]
fn bracket_degree_adds() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let a = random_field(2, 1, &mut rng);
    let b = random_field(2, 2, &mut rng);
    let c = a.bracket(&b);
    assert!(c.is_zero() || c.degree() == Some(3));
}

#[test]
fn lie_derivative_examples() {
    let vol = ConstantForm::<Rational>::volume(2);
    assert!(lie_derivative(&field("x1 d2", 2), &vol).is_zero());
    let l = lie_derivative(&field("x1 d1", 2), &vol);
    assert_eq!(l, PolyForm::from_constant(&vol));
    let sym = ConstantForm::<Rational>::symplectic(2);
    assert_eq!(sym, vol);
    // divergence-free agrees with symplectic at N = 2
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..10 {
        let v = random_field(2, 1, &mut rng);
        assert_eq!(lie_derivative(&v, &vol).is_zero(), v.divergence().is_zero());
    }
}

#[test]
fn volume_lie_derivative_is_divergence() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let vol = ConstantForm::<Rational>::volume(3);
    for _ in 0..10 {
        let v = random_field(3, 1, &mut rng);
        assert_eq!(lie_derivative(&v, &vol).get(&[1, 2, 3]), v.divergence());
    }
}

#[test]
fn small_basis_dimensions() {
    assert_eq!(basis_graded::<Rational>(AlgebraType::A, 2, 0).unwrap().len(), 3);
    assert_eq!(basis_graded::<Rational>(AlgebraType::A, 2, 1).unwrap().len(), 4);
    assert_eq!(basis_graded::<Rational>(AlgebraType::C, 2, 1).unwrap().len(), 4);
    assert_eq!(basis_graded::<Rational>(AlgebraType::C, 3, 1), Err(crate::Error::OddSymplectic(3)));
}

/// `dim Sym^{n+1} (x) V - rank(div)`, with the divergence map assembled directly.
fn type_a_dim_oracle(dim: usize, n: u32) -> usize {
    let coords = FieldCoordinates::new(dim, n);
    let targets = MultiIndex::all_of_degree(dim, n);
    let cols = (0..coords.len())
        .map(|i| {
            let v: V = coords.field(&[(i, q(1))]);
            let d = v.divergence();
            let mut col: Vec<(usize, Rational)> = targets
                .iter()
                .enumerate()
                .filter_map(|(r, t)| {
                    let c = d.coefficient(t);
                    (!c.is_zero()).then_some((r, c))
                })
                .collect();
            col.sort_by_key(|(r, _)| *r);
            col
        })
        .collect();
    coords.len() - SparseMatrix::from_columns(targets.len(), cols).rank()
}

/// Rank of the Hamiltonian fields `X_H`, `H` of degree `n + 2`.
fn type_c_dim_oracle(dim: usize, n: u32) -> usize {
    let coords = FieldCoordinates::new(dim, n);
    let mut span = Subspace::new(coords.len());
    for h in MultiIndex::all_of_degree(dim, n + 2) {
        let hp = Polynomial::monomial(h, q(1));
        let mut x = V::zero(dim);
        for i in 1..=dim / 2 {
            let (a, b) = (2 * i - 1, 2 * i);
            for (s, c) in hp.derivative(b).terms() {
                x.add_term(s.clone(), a, c.clone());
            }
            for (s, c) in hp.derivative(a).terms() {
                x.add_term(s.clone(), b, -c.clone());
            }
        }
        span.insert(coords.coordinates(&x));
    }
    span.dim()
}

#[test]
fn dimension_formulas_against_oracles() {
    for dim in 1..=4 {
        for n in 0..=3 {
            let a = basis_graded::<Rational>(AlgebraType::A, dim, n).unwrap().len();
            assert_eq!(a, type_a_dim_oracle(dim, n), "A N={dim} n={n}");
            assert_eq!(a as u64, AlgebraType::A.expected_dim(dim, n), "A N={dim} n={n}");
        }
    }
    for dim in [2, 4] {
        for n in 0..=3 {
            let c = basis_graded::<Rational>(AlgebraType::C, dim, n).unwrap().len();
            assert_eq!(c, type_c_dim_oracle(dim, n), "C N={dim} n={n}");
            assert_eq!(c as u64, AlgebraType::C.expected_dim(dim, n), "C N={dim} n={n}");
        }
    }
}

#[test]
fn basis_elements_are_in_the_algebra_and_closed() {
    for (kind, dim) in [(AlgebraType::A, 2), (AlgebraType::A, 3), (AlgebraType::C, 4)] {
        let w = kind.form::<Rational>(dim).unwrap();
        let bases: Vec<Vec<V>> = (0..=2).map(|n| basis_graded(kind, dim, n).unwrap()).collect();
        for (n, b) in bases.iter().enumerate() {
            for v in b {
                assert!(lie_derivative(v, &w).is_zero());
                assert_eq!(v.degree(), Some(n as i64));
            }
        }
        let target = FieldCoordinates::new(dim, 2);
        let span = Subspace::spanned_by(target.len(), bases[2].iter().map(|v| target.coordinates(v)));
        for x in &bases[1] {
            for y in &bases[1] {
                let z = x.bracket(y);
                assert!(span.contains(target.coordinates(&z)));
            }
        }
    }
}

#[test]
fn generation() {
    let a = generation_check::<Rational>(AlgebraType::A, 2, 3, None).unwrap();
    assert!(a.full_rank(), "{a:?}");
    let c = generation_check::<Rational>(AlgebraType::C, 2, 3, None).unwrap();
    assert_eq!(a.degrees, c.degrees);
    assert!(generation_check::<Rational>(AlgebraType::A, 3, 2, None).unwrap().full_rank());
    assert!(generation_check::<Rational>(AlgebraType::C, 4, 2, None).unwrap().full_rank());
    let bad = field("x1 d1", 2);
    assert_eq!(generation_check(AlgebraType::A, 2, 2, Some(&bad)), Err(crate::Error::InvalidG1));
}

#[test]
fn text_round_trip() {
    let v = field("2 x1^2 d2 - 1 x1 x2 d1", 2);
    let text = v.to_string();
    assert_eq!(parse_vector_field::<Rational>(&text, 2).unwrap(), v);
    assert_eq!(field("-x1 d1 + 1/2 x2^3 d2", 2).to_string(), "-1 x1 d1 + 1/2 x2^3 d2");
    assert_eq!("x1^2 d2".parse::<V>().unwrap(), default_g1(2));
    assert!(parse_vector_field::<Rational>("x1 x2", 2).is_err());
    assert!(parse_vector_field::<Rational>("x3 d1", 2).is_err());
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..10 {
        let v = random_field(3, 1, &mut rng);
        assert_eq!(parse_vector_field::<Rational>(&v.to_string(), 3).unwrap(), v);
    }
}
