use super::*;
use crate::fock::{SpaceCache, WeightSpace};
use crate::vecfields::{basis_graded, parse_vector_field, AlgebraType};
use crate::Rational;

type St = State<Rational>;
type V = PolyVectorField<Rational>;

fn q(n: i64) -> Rational {
    Rational::from_int(n)
}

fn field(text: &str) -> V {
    parse_vector_field(text, 2).unwrap()
}

fn full_spaces(dim: usize, kmax: i64, bound: u32) -> Vec<std::sync::Arc<WeightSpace>> {
    let cache = SpaceCache::new(Flavor::Full, dim, Some(bound)).unwrap();
    cache.grades(kmax).into_iter().map(|(k, l)| cache.get(k, l)).collect()
}

fn plus_spaces(dim: usize, kmax: i64) -> Vec<std::sync::Arc<WeightSpace>> {
    let cache = SpaceCache::plus(dim);
    cache.grades(kmax).into_iter().map(|(k, l)| cache.get(k, l)).collect()
}

fn g01(kind: AlgebraType, dim: usize) -> Vec<V> {
    let mut out = basis_graded(kind, dim, 0).unwrap();
    out.extend(basis_graded(kind, dim, 1).unwrap());
    out
}

#[test]
fn vacuum_is_killed() {
    let vac = St::vacuum(Flavor::Plus);
    for v in g01(AlgebraType::A, 2) {
        assert!(act_l(&v, &vac).unwrap().is_zero());
        assert!(act_l_plus(&v, &vac).unwrap().is_zero());
    }
}

#[test]
fn l_plus_agrees_with_l_in_degree_zero() {
    let ops: Vec<_> = basis_graded::<Rational>(AlgebraType::A, 2, 0)
        .unwrap()
        .iter()
        .map(|v| (ActionOperator::l(v).unwrap(), ActionOperator::l_plus(v)))
        .collect();
    for ws in plus_spaces(2, 3) {
        for i in 0..ws.dim() {
            let s: St = ws.basis_state(i);
            for (l, lp) in &ops {
                let a = l.apply(&s).unwrap();
                let b = lp.apply(&s).unwrap().with_flavor(Flavor::Full).unwrap();
                assert_eq!(a, b, "{s}");
            }
        }
    }
}

#[test]
fn degree_zero_acts_by_the_linear_substitution() {
    // L+(x1 d2) moves gamma^2 -> gamma^1, c^2 -> c^1, beta^1 -> -beta^2, b^1 -> -b^2
    let v = field("x1 d2");
    let s = St::from_modes([Mode::beta(1, -1), Mode::gamma(2, -2), Mode::c(2, -1)], Flavor::Plus);
    let expected = &(&St::from_modes([Mode::beta(1, -1), Mode::gamma(1, -2), Mode::c(2, -1)], Flavor::Plus)
        + &St::from_modes([Mode::beta(1, -1), Mode::gamma(2, -2), Mode::c(1, -1)], Flavor::Plus))
        - &St::from_modes([Mode::beta(2, -1), Mode::gamma(2, -2), Mode::c(2, -1)], Flavor::Plus);
    assert_eq!(act_l_plus(&v, &s).unwrap(), expected);
}

#[test]
fn l_is_a_lie_homomorphism() {
    let fields = g01(AlgebraType::A, 2);
    let ops: Vec<_> = fields.iter().map(|v| ActionOperator::l(v).unwrap()).collect();
    for ws in full_spaces(2, 2, 2) {
        for i in 0..ws.dim() {
            let s: St = ws.basis_state(i);
            let images: Vec<St> = ops.iter().map(|op| op.apply(&s).unwrap()).collect();
            for a in 0..fields.len() {
                for b in 0..a {
                    let lhs = &ops[a].apply(&images[b]).unwrap() - &ops[b].apply(&images[a]).unwrap();
                    let rhs = act_l(&fields[a].bracket(&fields[b]), &s).unwrap();
                    assert_eq!(lhs, rhs, "[{}, {}] on {s}", fields[a], fields[b]);
                }
            }
        }
    }
}

#[test]
fn gamma_taylor_expansion_relates_l_and_l_plus() {
    let mut fields = g01(AlgebraType::A, 2);
    fields.push(field("x1^2 d2"));
    fields.push(field("x1 x2^2 d1 - 1 x2^3 d2"));
    let lplus = |v: &V, s: &St| act_l_plus(v, s);
    let l = |v: &V, s: &St| act_l(v, s);
    for ws in full_spaces(2, 2, 2) {
        for i in 0..ws.dim() {
            let s: St = ws.basis_state(i);
            for v in &fields {
                assert_eq!(l(v, &s).unwrap(), gamma_expansion(v, &s, 1, lplus).unwrap(), "L({v}) on {s}");
                assert_eq!(lplus(v, &s).unwrap(), gamma_expansion(v, &s, -1, l).unwrap(), "L+({v}) on {s}");
            }
        }
    }
}

#[test]
fn l_plus_preserves_grades() {
    for dim in 1..=3 {
        let mut fields = Vec::new();
        for n in 0..=2 {
            fields.extend(basis_graded::<Rational>(AlgebraType::A, dim, n).unwrap());
        }
        let ops: Vec<_> = fields.iter().map(ActionOperator::l_plus).collect();
        for ws in plus_spaces(dim, if dim == 3 { 2 } else { 3 }) {
            for op in &ops {
                let m = op.matrix(&ws).unwrap();
                assert_eq!((m.nrows(), m.ncols()), (ws.dim(), ws.dim()));
            }
        }
    }
}

#[test]
fn l_plus_kills_j() {
    let j = crate::vertex::generator_state::<Rational>(GeneratorName::J, 2).unwrap();
    assert!(act_l_plus(&field("x1^2 d2"), &j).unwrap().is_zero());
}

#[test]
fn arc_action_rules() {
    let g = field("x1 d2");
    let t0 = ArcActionElement::new(g.clone(), 0).unwrap();
    for ws in plus_spaces(2, 2) {
        for i in 0..ws.dim() {
            let s: St = ws.basis_state(i);
            assert_eq!(act_arc(&t0, &s).unwrap(), act_l_plus(&g, &s).unwrap(), "{s}");
        }
    }
    let t2 = ArcActionElement::new(g.clone(), 2).unwrap();
    assert!(act_arc(&t2, &St::from_modes([Mode::beta(1, -1)], Flavor::Plus)).unwrap().is_zero());
    let t1 = ArcActionElement::new(g.clone(), 1).unwrap();
    assert!(act_arc(&t1, &St::from_modes([Mode::gamma(2, -2)], Flavor::Plus)).unwrap().is_zero());
    // alpha^2_(-2) = 2 gamma^2_(-3) shifts to alpha^1_(-1) = gamma^1_(-2)
    assert_eq!(
        act_arc(&t1, &St::from_modes([Mode::gamma(2, -3)], Flavor::Plus)).unwrap(),
        St::from_modes([Mode::gamma(1, -2)], Flavor::Plus).scaled(&Rational::from_frac(1, 2))
    );
    assert_eq!(
        act_arc(&t1, &St::from_modes([Mode::c(2, -2)], Flavor::Plus)).unwrap(),
        St::from_modes([Mode::c(1, -1)], Flavor::Plus)
    );
    let full = St::vacuum(Flavor::Full);
    assert_eq!(act_arc(&t1, &full), Err(Error::ArcOnFull));
}

/// Term-by-term oracle: a single-mode substitution written out by hand for
/// `g1 = x1 d2` (gamma^2 -> gamma^1, c^2 -> c^1, beta^1 -> -beta^2, b^1 -> -b^2),
/// with the shift of `gamma_(-k)` weighted by `(k - 1 - l) / (k - 1)`.
fn k1_oracle(w: &St) -> St {
    let mut out = St::zero(Flavor::Plus);
    for (m, c) in w.terms() {
        let modes = m.modes().to_vec();
        for pos in 0..modes.len() {
            let md = modes[pos];
            let (sign, dir) = match (md.species, md.dir) {
                (Species::Gamma | Species::C, 2) => (1, 1),
                (Species::Beta | Species::B, 1) => (-1, 2),
                _ => continue,
            };
            for l in 1..=8i32 {
                let n = md.n + l;
                let ok = if md.species == Species::Gamma { n <= -2 } else { n <= -1 };
                if !ok {
                    continue;
                }
                let weight = if md.species == Species::Gamma {
                    Rational::from_frac(-(n as i64) - 1, -(md.n as i64) - 1)
                } else {
                    q(1)
                };
                let mut word = vec![Mode::gamma(1, -l - 1)];
                for (p, x) in modes.iter().enumerate() {
                    word.push(if p == pos { Mode::new(x.species, dir, n) } else { *x });
                }
                // sign from reordering is computed by the state constructor on
                // the unsorted word via repeated creation
                let mut s = St::vacuum(Flavor::Plus);
                for x in word.iter().rev() {
                    s = crate::fock::apply_mode(*x, &s).unwrap();
                }
                out.add_scaled(&s, &(c.clone() * q(sign) * weight));
            }
        }
    }
    out
}

#[test]
fn k1_matches_its_defining_sum() {
    for ws in plus_spaces(2, 2) {
        for i in 0..ws.dim() {
            let s: St = ws.basis_state(i);
            assert_eq!(k_operator(1, &s).unwrap(), k1_oracle(&s), "{s}");
        }
    }
    assert_eq!(k_operator(-1, &St::vacuum(Flavor::Plus)), Err(Error::KOperator));
}

/// `3 sum_{l1, l2 >= 1} gamma^1_(-l1-1) gamma^1_(-l2-1) (g1 t^{l1+l2})`.
fn k2_closed_form(w: &St) -> St {
    let (g1, _) = sl2_pair::<Rational>();
    let mut out = St::zero(Flavor::Plus);
    for l1 in 1..=8 {
        for l2 in 1..=8 {
            let shifted = act_arc(&ArcActionElement::new(g1.clone(), l1 + l2).unwrap(), w).unwrap();
            let a = multiply(Mode::gamma(1, -(l2 as i32) - 1), &shifted);
            let b = multiply(Mode::gamma(1, -(l1 as i32) - 1), &a);
            out.add_scaled(&b, &q(3));
        }
    }
    out
}

#[test]
fn k2_closed_form_holds() {
    for ws in plus_spaces(2, 3) {
        for i in 0..ws.dim() {
            let s: St = ws.basis_state(i);
            assert_eq!(k_operator(2, &s).unwrap(), k2_closed_form(&s), "{s}");
        }
    }
}

#[test]
fn k0_commutator_with_gamma() {
    for ws in plus_spaces(2, 2) {
        for i in 0..ws.dim() {
            let s: St = ws.basis_state(i);
            for l in 2..=6 {
                let g = Mode::gamma(1, -l);
                let lhs = &k_operator(0, &multiply(g, &s)).unwrap() - &multiply(g, &k_operator(0, &s).unwrap());
                let mut rhs = St::zero(Flavor::Plus);
                for t in 2..l {
                    let term = multiply(Mode::gamma(1, -t), &multiply(Mode::gamma(1, -l + t - 1), &s));
                    rhs.add_scaled(&term, &Rational::from_frac(1, 2));
                }
                assert_eq!(lhs, rhs, "l = {l} on {s}");
            }
        }
    }
}

/// SW-degree `d` part of a state.
fn sw_part(w: &St, d: u32) -> St {
    let mut out = St::zero(Flavor::Plus);
    for (m, c) in w.terms() {
        if m.sw_degree() == d {
            out.add_term(m.clone(), c.clone());
        }
    }
    out
}

#[test]
fn k_operators_are_top_parts_of_degree_one_actions() {
    let v1 = field("x1^2 d2");
    let v0 = field("x1^2 d1 - 2 x1 x2 d2");
    for ws in plus_spaces(2, 3) {
        for i in 0..ws.dim() {
            let s: St = ws.basis_state(i);
            let d = s.terms().next().unwrap().0.sw_degree();
            let top1 = sw_part(&act_l_plus(&v1, &s).unwrap(), d + 2);
            assert_eq!(top1, k_operator(1, &s).unwrap().scaled(&q(2)), "{s}");
            let top0 = sw_part(&act_l_plus(&v0, &s).unwrap(), d + 2);
            assert_eq!(top0, k_operator(0, &s).unwrap().scaled(&q(2)), "{s}");
        }
    }
}
