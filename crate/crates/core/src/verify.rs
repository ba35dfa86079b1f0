//! The property suite: every structural identity of the library checked
//! exactly at desk scale, each under a stable dotted name.
//!
//! A property either passes or fails with a witness describing the first
//! counterexample. Randomized properties draw from a ChaCha8 stream seeded by
//! [`SuiteConfig::seed`].

use std::collections::HashMap;
use std::fmt;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::action::{act_l, act_l_plus, gamma_expansion, k_operator, top_component_arc_invariant, ActionOperator};
use crate::error::Result;
use crate::fock::{apply_mode, translate, Flavor, Mode, SpaceCache, Species, State, WeightSpace};
use crate::hermitian::{adjoint_check, single_mode_check, AdjointFamily, GramMatrix};
use crate::invariants::{
    basis_character, conjecture_evidence, invariant_table, product_character, Comparison, InvariantContext,
};
use crate::linalg::{SparseMatrix, Subspace};
use crate::scalar::{binomial, Scalar};
use crate::vecfields::{
    basis_graded, generation_check, random_element, AlgebraType, FieldCoordinates, MultiIndex, PolyVectorField,
};
use crate::vertex::{composite_mode, generator_state, nth_product, GeneratorName, GradedMap};
use crate::Rational;

type St = State<Rational>;
type V = PolyVectorField<Rational>;

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 2024;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Negates the adjoint side of the adjunction checks (negative control).
    pub inject_sign_flip: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self { seed: DEFAULT_SEED, inject_sign_flip: false }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyResult {
    pub name: &'static str,
    pub passed: bool,
    pub witness: Option<String>,
}

impl fmt::Display for PropertyResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", if self.passed { "PASS" } else { "FAIL" }, self.name)?;
        if let Some(w) = &self.witness {
            write!(f, ": {w}")?;
        }
        Ok(())
    }
}

/// `Ok(None)` on success, `Ok(Some(witness))` on a counterexample.
type Check = fn(&SuiteConfig) -> Result<Option<String>>;

const SUITE: &[(&str, Check)] = &[
    ("fock.character", fock_character),
    ("fock.mode_brackets", fock_mode_brackets),
    ("fock.grade_shift", fock_grade_shift),
    ("fock.translate_grade", fock_translate_grade),
    ("vertex.creation_identity", vertex_creation_identity),
    ("vertex.commutator_formula", vertex_commutator_formula),
    ("vertex.derivative", vertex_derivative),
    ("vertex.energy_charge", vertex_energy_charge),
    ("vecfields.jacobi", vecfields_jacobi),
    ("vecfields.closure", vecfields_closure),
    ("vecfields.dimensions", vecfields_dimensions),
    ("vecfields.generation", vecfields_generation),
    ("action.grade_preservation", action_grade_preservation),
    ("action.homomorphism", action_homomorphism),
    ("action.gamma_expansion", action_gamma_expansion),
    ("action.degree_zero", action_degree_zero),
    ("action.k_operators", action_k_operators),
    ("action.top_degree", action_top_degree),
    ("hermitian.positive_definite", hermitian_positive_definite),
    ("hermitian.single_modes", hermitian_single_modes),
    ("hermitian.adjoint.Q", |c| adjoint(AdjointFamily::Q, c)),
    ("hermitian.adjoint.J", |c| adjoint(AdjointFamily::J, c)),
    ("hermitian.adjoint.L", |c| adjoint(AdjointFamily::L, c)),
    ("hermitian.adjoint.D", |c| adjoint(AdjointFamily::D, c)),
    ("hermitian.adjoint.Dp", |c| adjoint(AdjointFamily::Dp, c)),
    ("invariants.reduction", invariants_reduction),
    ("invariants.generated_algebra", invariants_generated_algebra),
    ("invariants.generators_annihilated", invariants_generators_annihilated),
    ("invariants.evidence_containment", invariants_evidence_containment),
];

/// Names of all properties, in suite order.
pub fn property_names() -> Vec<&'static str> {
    SUITE.iter().map(|(n, _)| *n).collect()
}

/// Runs one property by name; `None` if the name is unknown.
pub fn run_property(name: &str, cfg: &SuiteConfig) -> Option<PropertyResult> {
    let (name, check) = SUITE.iter().find(|(n, _)| *n == name)?;
    Some(finish(name, check(cfg)))
}

/// Runs the whole suite; results are in suite order whatever the thread count.
pub fn run_suite(cfg: &SuiteConfig) -> Vec<PropertyResult> {
    SUITE.par_iter().map(|(name, check)| finish(name, check(cfg))).collect()
}

fn finish(name: &'static str, outcome: Result<Option<String>>) -> PropertyResult {
    match outcome {
        Ok(None) => PropertyResult { name, passed: true, witness: None },
        Ok(Some(w)) => PropertyResult { name, passed: false, witness: Some(w) },
        Err(e) => PropertyResult { name, passed: false, witness: Some(format!("error: {e}")) },
    }
}

fn q(n: i64) -> Rational {
    Rational::from_int(n)
}

fn states(ws: &WeightSpace) -> impl Iterator<Item = St> + '_ {
    (0..ws.dim()).map(|i| ws.basis_state(i))
}

/// All PLUS basis states with weight `<= kmax`.
fn plus_states(cache: &SpaceCache, kmax: i64) -> Vec<St> {
    cache.grades(kmax).into_iter().flat_map(|(k, l)| states(&cache.get(k, l)).collect::<Vec<_>>()).collect()
}

fn first_mismatch(lhs: &St, rhs: &St, what: impl FnOnce() -> String) -> Option<String> {
    (lhs != rhs).then(|| format!("{}: {lhs} != {rhs}", what()))
}

fn g01(kind: AlgebraType, dim: usize) -> Result<Vec<V>> {
    let mut out = basis_graded(kind, dim, 0)?;
    out.extend(basis_graded(kind, dim, 1)?);
    Ok(out)
}

fn fock_character(_: &SuiteConfig) -> Result<Option<String>> {
    for dim in 1..=3 {
        let enumerated = basis_character(dim, 5)?;
        let product = product_character(dim, 5);
        if enumerated != product {
            let grade = enumerated.keys().chain(product.keys()).find(|g| enumerated.get(g) != product.get(g)).copied();
            return Ok(Some(format!("N = {dim}: first difference at {grade:?}")));
        }
    }
    Ok(None)
}

/// Single modes with index in `-3..=3` on `dim` directions, without `gamma_(-1)`.
fn small_modes(dim: u8) -> Vec<Mode> {
    let mut out = Vec::new();
    for species in Species::ALL {
        for dir in 1..=dim {
            for n in -3..=3 {
                let m = Mode::new(species, dir, n);
                if !m.is_gamma_zero_weight() {
                    out.push(m);
                }
            }
        }
    }
    out
}

fn fock_mode_brackets(_: &SuiteConfig) -> Result<Option<String>> {
    let cache = SpaceCache::plus(2);
    let modes = small_modes(2);
    for s in plus_states(&cache, 3) {
        let once: Vec<St> = modes.iter().map(|&m| apply_mode(m, &s)).collect::<Result<_>>()?;
        for (i, &a) in modes.iter().enumerate() {
            for (j, &b) in modes.iter().enumerate().skip(i) {
                let ab = apply_mode(a, &once[j])?;
                let ba = apply_mode(b, &once[i])?;
                let lhs = if a.is_odd() && b.is_odd() { &ab + &ba } else { &ab - &ba };
                let rhs = s.scaled(&q(a.bracket(b)));
                if let Some(w) = first_mismatch(&lhs, &rhs, || format!("[{a}, {b}] on {s}")) {
                    return Ok(Some(w));
                }
            }
        }
    }
    Ok(None)
}

fn fock_grade_shift(_: &SuiteConfig) -> Result<Option<String>> {
    let cache = SpaceCache::plus(2);
    let modes = small_modes(2);
    for (k, l) in cache.grades(3) {
        for s in states(&cache.get(k, l)) {
            for &m in &modes {
                let image = apply_mode(m, &s)?;
                let expected = (k + m.weight_shift(), l + m.charge());
                if !image.is_zero() && image.homogeneous_grade() != Some(expected) {
                    return Ok(Some(format!("{m} on {s} gives {image}, expected grade {expected:?}")));
                }
            }
        }
    }
    Ok(None)
}

fn fock_translate_grade(_: &SuiteConfig) -> Result<Option<String>> {
    for dim in 1..=2 {
        let cache = SpaceCache::plus(dim);
        for (k, l) in cache.grades(4) {
            for s in states(&cache.get(k, l)) {
                let image = translate(&s);
                if !image.is_zero() && image.homogeneous_grade() != Some((k + 1, l)) {
                    return Ok(Some(format!("translate({s}) = {image}")));
                }
            }
        }
    }
    Ok(None)
}

fn vertex_creation_identity(_: &SuiteConfig) -> Result<Option<String>> {
    for dim in 1..=2 {
        let cache = SpaceCache::plus(dim);
        let vac = St::vacuum(Flavor::Plus);
        for s in plus_states(&cache, 3) {
            let image = nth_product(&s, -1, &vac)?;
            if let Some(w) = first_mismatch(&image, &s, || format!("a_(-1) 1 for a = {s}")) {
                return Ok(Some(w));
            }
        }
    }
    Ok(None)
}

/// Memoized composite-mode matrices keyed by operator id, mode and source grade.
struct ModeTable<'a> {
    cache: &'a SpaceCache,
    kmax: i64,
    table: HashMap<(usize, i64, (i64, i64)), GradedMap<Rational>>,
}

impl ModeTable<'_> {
    /// `op_(n)` out of `grade`, or `None` when the target weight exceeds `kmax`.
    fn get(&mut self, id: usize, op: &St, n: i64, grade: (i64, i64)) -> Result<Option<GradedMap<Rational>>> {
        let (wa, ca) = crate::vertex::state_grade(op)?;
        let target = (grade.0 + wa - n - 1, grade.1 + ca);
        if target.0 > self.kmax {
            return Ok(None);
        }
        if let Some(hit) = self.table.get(&(id, n, grade)) {
            return Ok(Some(hit.clone()));
        }
        let ws = self.cache.get(grade.0, grade.1);
        let out = composite_mode(op, n, &ws, self.cache)?;
        self.table.insert((id, n, grade), out.clone());
        Ok(Some(out))
    }
}

fn vertex_commutator_formula(_: &SuiteConfig) -> Result<Option<String>> {
    let kmax = 3;
    let cache = SpaceCache::plus(2);
    let gens: Vec<(GeneratorName, St)> =
        GeneratorName::ALL.iter().map(|&g| Ok((g, generator_state(g, 2)?))).collect::<Result<_>>()?;
    let mut table = ModeTable { cache: &cache, kmax, table: HashMap::new() };
    let range = -1..=1i64;
    for (ia, (na, a)) in gens.iter().enumerate() {
        let (wa, _) = crate::vertex::state_grade(a)?;
        for (ib, (nb, b)) in gens.iter().enumerate() {
            let (wb, _) = crate::vertex::state_grade(b)?;
            let sign = if a.parity() == Some(true) && b.parity() == Some(true) { -1 } else { 1 };
            // a_(j) b for the j that can be non-zero
            let products: Vec<St> = (0..wa + wb).map(|j| nth_product(a, j, b)).collect::<Result<_>>()?;
            for (k, l) in cache.grades(kmax) {
                for m in range.clone() {
                    for n in range.clone() {
                        let Some((bn, g1)) = table.get(ib, b, n, (k, l))? else { continue };
                        let Some((am, g2)) = table.get(ia, a, m, g1)? else { continue };
                        let Some((am2, h1)) = table.get(ia, a, m, (k, l))? else { continue };
                        let Some((bn2, _)) = table.get(ib, b, n, h1)? else { continue };
                        let lhs = am.mul(&bn).add_scaled(&bn2.mul(&am2), &q(-sign));
                        let mut rhs = SparseMatrix::zeros(lhs.nrows(), lhs.ncols());
                        let src = cache.get(k, l);
                        for (j, p) in products.iter().enumerate() {
                            let c = Rational::from_integer(binomial(m, j as i64));
                            if p.is_zero() || c.is_zero() {
                                continue;
                            }
                            let (pm, g) = composite_mode(p, m + n - j as i64, &src, &cache)?;
                            if g != g2 {
                                return Ok(Some(format!(
                                    "({}_({j}) {})_({}) lands in {g:?}",
                                    na.name(),
                                    nb.name(),
                                    m + n - j as i64
                                )));
                            }
                            rhs = rhs.add_scaled(&pm, &c);
                        }
                        if let Some((r, col, x, y)) = lhs.first_difference(&rhs) {
                            return Ok(Some(format!(
                                "[{}_({m}), {}_({n})] on W[{k},{l}] at ({r}, {col}): {x} != {y}",
                                na.name(),
                                nb.name()
                            )));
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

fn vertex_derivative(_: &SuiteConfig) -> Result<Option<String>> {
    let cache = SpaceCache::plus(2);
    let targets = plus_states(&cache, 3);
    for g in GeneratorName::ALL {
        let a = generator_state::<Rational>(g, 2)?;
        let da = translate(&a);
        for b in &targets {
            for n in 0..=3 {
                let lhs = nth_product(&da, n, b)?;
                let rhs = nth_product(&a, n - 1, b)?.scaled(&q(-n));
                if let Some(w) = first_mismatch(&lhs, &rhs, || format!("(d{})_({n}) {b}", g.name())) {
                    return Ok(Some(w));
                }
            }
        }
    }
    Ok(None)
}

fn vertex_energy_charge(_: &SuiteConfig) -> Result<Option<String>> {
    for dim in 1..=2 {
        let cache = SpaceCache::plus(dim);
        let l = generator_state::<Rational>(GeneratorName::L, dim)?;
        let j = generator_state::<Rational>(GeneratorName::J, dim)?;
        for (k, ch) in cache.grades(3) {
            let ws = cache.get(k, ch);
            let (lm, _) = composite_mode(&l, 1, &ws, &cache)?;
            let (jm, _) = composite_mode(&j, 0, &ws, &cache)?;
            for i in 0..ws.dim() {
                for (op, m, eig) in [("L_(1)", &lm, k), ("J_(0)", &jm, ch)] {
                    let expected: Vec<(usize, Rational)> = if eig == 0 { vec![] } else { vec![(i, q(eig))] };
                    if m.column(i) != &expected[..] {
                        return Ok(Some(format!("{op} on {} is not {eig} times it", ws.basis()[i])));
                    }
                }
            }
        }
    }
    Ok(None)
}

fn random_homogeneous<R: Rng>(dim: usize, degree: u32, rng: &mut R) -> V {
    let mut v = V::zero(dim);
    for s in MultiIndex::all_of_degree(dim, degree) {
        for dir in 1..=dim {
            if rng.gen_bool(0.5) {
                v.add_term(s.clone(), dir, q(rng.gen_range(-3..=3)));
            }
        }
    }
    v
}

/// The fifty random homogeneous triples used by `vecfields.jacobi`.
pub fn random_triples(seed: u64) -> Vec<[PolyVectorField<Rational>; 3]> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..50)
        .map(|_| {
            let dim = rng.gen_range(1..=3);
            [(); 3].map(|_| {
                let degree = rng.gen_range(0..=2);
                random_homogeneous(dim, degree, &mut rng)
            })
        })
        .collect()
}

fn vecfields_jacobi(cfg: &SuiteConfig) -> Result<Option<String>> {
    for [u, v, w] in random_triples(cfg.seed) {
        let mut sum = u.bracket(&v.bracket(&w));
        sum.add_scaled(&v.bracket(&w.bracket(&u)), &q(1));
        sum.add_scaled(&w.bracket(&u.bracket(&v)), &q(1));
        if !sum.is_zero() {
            return Ok(Some(format!("Jacobi fails for ({u}), ({v}), ({w})")));
        }
    }
    Ok(None)
}

fn vecfields_closure(_: &SuiteConfig) -> Result<Option<String>> {
    let cases =
        [(AlgebraType::A, 1), (AlgebraType::A, 2), (AlgebraType::A, 3), (AlgebraType::C, 2), (AlgebraType::C, 4)];
    for (kind, dim) in cases {
        let bases: Vec<Vec<V>> = (0..=3).map(|n| basis_graded(kind, dim, n)).collect::<Result<_>>()?;
        for n in 0..=3u32 {
            for m in 0..=(3 - n) {
                let coords = FieldCoordinates::new(dim, n + m);
                let span =
                    Subspace::spanned_by(coords.len(), bases[(n + m) as usize].iter().map(|b| coords.coordinates(b)));
                for x in &bases[n as usize] {
                    for y in &bases[m as usize] {
                        let z = x.bracket(y);
                        if !z.is_zero() && !span.contains(coords.coordinates(&z)) {
                            return Ok(Some(format!("{kind}, N = {dim}: [{x}, {y}] leaves degree {}", n + m)));
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

fn binom(n: i64, k: i64) -> i64 {
    i64::try_from(binomial(n, k)).expect("small binomial")
}

fn vecfields_dimensions(_: &SuiteConfig) -> Result<Option<String>> {
    for dim in 1..=4usize {
        for n in 0..=3u32 {
            let (d, ni) = (dim as i64, n as i64);
            let a = d * binom(d + ni, ni + 1) - binom(d + ni - 1, ni);
            let got = basis_graded::<Rational>(AlgebraType::A, dim, n)?.len() as i64;
            if got != a {
                return Ok(Some(format!("dim Vect^A_{n} for N = {dim} is {got}, expected {a}")));
            }
            if dim % 2 == 0 {
                let c = binom(d + ni + 1, ni + 2);
                let got = basis_graded::<Rational>(AlgebraType::C, dim, n)?.len() as i64;
                if got != c {
                    return Ok(Some(format!("dim Vect^C_{n} for N = {dim} is {got}, expected {c}")));
                }
            }
        }
    }
    Ok(None)
}

fn vecfields_generation(_: &SuiteConfig) -> Result<Option<String>> {
    for (kind, dim) in [(AlgebraType::A, 2), (AlgebraType::C, 2), (AlgebraType::A, 3)] {
        let report = generation_check::<Rational>(kind, dim, 3, None)?;
        if !report.full_rank() {
            return Ok(Some(format!("{kind}, N = {dim}: {:?}", report.degrees)));
        }
    }
    Ok(None)
}

fn action_grade_preservation(_: &SuiteConfig) -> Result<Option<String>> {
    for dim in 1..=3 {
        let mut fields = Vec::new();
        for n in 0..=2 {
            fields.extend(basis_graded::<Rational>(AlgebraType::A, dim, n)?);
        }
        let cache = SpaceCache::plus(dim);
        let kmax = if dim == 3 { 2 } else { 3 };
        for v in &fields {
            let op = ActionOperator::l_plus(v);
            for (k, l) in cache.grades(kmax) {
                for s in states(&cache.get(k, l)) {
                    let image = op.apply(&s)?;
                    if !image.is_zero() && image.homogeneous_grade() != Some((k, l)) {
                        return Ok(Some(format!("L+({v}) {s} = {image}")));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// FULL basis states with gamma-degree `<= 2` and weight `<= 2`, `N = 2`.
fn small_full_states() -> Result<Vec<St>> {
    let cache = SpaceCache::new(Flavor::Full, 2, Some(2))?;
    Ok(cache.grades(2).into_iter().flat_map(|(k, l)| states(&cache.get(k, l)).collect::<Vec<_>>()).collect())
}

fn action_homomorphism(_: &SuiteConfig) -> Result<Option<String>> {
    let fields = g01(AlgebraType::A, 2)?;
    let ops: Vec<_> = fields.iter().map(ActionOperator::l).collect::<Result<_>>()?;
    for s in small_full_states()? {
        let images: Vec<St> = ops.iter().map(|op| op.apply(&s)).collect::<Result<_>>()?;
        for a in 0..fields.len() {
            for b in 0..a {
                let lhs = &ops[a].apply(&images[b])? - &ops[b].apply(&images[a])?;
                let rhs = act_l(&fields[a].bracket(&fields[b]), &s)?;
                if let Some(w) = first_mismatch(&lhs, &rhs, || format!("[L({}), L({})] on {s}", fields[a], fields[b])) {
                    return Ok(Some(w));
                }
            }
        }
    }
    Ok(None)
}

fn action_gamma_expansion(_: &SuiteConfig) -> Result<Option<String>> {
    let mut fields = g01(AlgebraType::A, 2)?;
    fields.extend(basis_graded(AlgebraType::A, 2, 2)?);
    for s in small_full_states()? {
        for v in &fields {
            let l = act_l(v, &s)?;
            let expanded = gamma_expansion(v, &s, 1, act_l_plus)?;
            if let Some(w) = first_mismatch(&l, &expanded, || format!("L({v}) on {s}")) {
                return Ok(Some(w));
            }
            let lp = act_l_plus(v, &s)?;
            let inverted = gamma_expansion(v, &s, -1, act_l)?;
            if let Some(w) = first_mismatch(&lp, &inverted, || format!("L+({v}) on {s}")) {
                return Ok(Some(w));
            }
        }
    }
    Ok(None)
}

fn action_degree_zero(_: &SuiteConfig) -> Result<Option<String>> {
    let g0 = basis_graded::<Rational>(AlgebraType::A, 2, 0)?;
    for s in plus_states(&SpaceCache::plus(2), 3) {
        for v in &g0 {
            let lhs = act_l(v, &s)?;
            let rhs = act_l_plus(v, &s)?.with_flavor(Flavor::Full)?;
            if let Some(w) = first_mismatch(&lhs, &rhs, || format!("L({v}) vs L+({v}) on {s}")) {
                return Ok(Some(w));
            }
        }
    }
    Ok(None)
}

fn sw_part(w: &St, d: u32) -> St {
    let mut out = St::zero(w.flavor());
    for (m, c) in w.terms() {
        if m.sw_degree() == d {
            out.add_term(m.clone(), c.clone());
        }
    }
    out
}

fn action_k_operators(_: &SuiteConfig) -> Result<Option<String>> {
    let v1: V = "x1^2 d2".parse()?;
    let v0: V = "x1^2 d1 - 2 x1 x2 d2".parse()?;
    for s in plus_states(&SpaceCache::plus(2), 3) {
        let d = s.monomials().next().map(|m| m.sw_degree()).unwrap_or(0);
        for (v, n) in [(&v1, 1), (&v0, 0)] {
            let top = sw_part(&act_l_plus(v, &s)?, d + 2);
            let k = k_operator(n, &s)?.scaled(&q(2));
            if let Some(w) = first_mismatch(&top, &k, || format!("top part of L+({v}) vs 2 K_{n} on {s}")) {
                return Ok(Some(w));
            }
        }
    }
    Ok(None)
}

fn action_top_degree(_: &SuiteConfig) -> Result<Option<String>> {
    let ctx = InvariantContext::<Rational>::new(AlgebraType::A, 2, None)?;
    let g0 = basis_graded::<Rational>(AlgebraType::A, 2, 0)?;
    for (k, l) in ctx.cache().grades(3) {
        let ws = ctx.space(k, l);
        for v in ctx.full_invariants(k, l)?.1 {
            let s = ws.state_from_coordinates(&v);
            if let Some(g) = top_component_arc_invariant(&s, &g0)? {
                return Ok(Some(format!("({g}) t does not kill the top part of {s}")));
            }
        }
    }
    Ok(None)
}

fn hermitian_positive_definite(_: &SuiteConfig) -> Result<Option<String>> {
    for dim in 1..=3 {
        let cache = SpaceCache::plus(dim);
        for (k, l) in cache.grades(4) {
            if !GramMatrix::<Rational>::new(&cache.get(k, l))?.is_positive_definite() {
                return Ok(Some(format!("Gram matrix of W[{k},{l}] for N = {dim}")));
            }
        }
    }
    Ok(None)
}

fn hermitian_single_modes(_: &SuiteConfig) -> Result<Option<String>> {
    for dim in 1..=2 {
        if let Some(w) = single_mode_check::<Rational>(&SpaceCache::plus(dim), 3)? {
            return Ok(Some(format!("N = {dim}: {w}")));
        }
    }
    Ok(None)
}

fn adjoint(family: AdjointFamily, cfg: &SuiteConfig) -> Result<Option<String>> {
    let report = adjoint_check::<Rational>(family, &SpaceCache::plus(2), 3, cfg.inject_sign_flip)?;
    Ok(report.failure.map(|w| w.to_string()))
}

fn invariants_reduction(cfg: &SuiteConfig) -> Result<Option<String>> {
    let ctx = InvariantContext::<Rational>::new(AlgebraType::A, 2, None)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let randoms: Vec<InvariantContext<Rational>> = (0..5)
        .map(|_| {
            let g1 = random_element(AlgebraType::A, 2, 1, &mut rng)?;
            InvariantContext::with_cache(AlgebraType::A, ctx.cache().clone(), Some(g1))
        })
        .collect::<Result<_>>()?;
    for (k, l) in ctx.cache().grades(3) {
        let (_, full) = ctx.full_invariants(k, l)?;
        let graded = ctx.graded_invariants(k, l, 2)?;
        if graded.len() != full.len() {
            return Ok(Some(format!("W[{k},{l}]: one g1 gives {}, all of g1, g2 give {}", full.len(), graded.len())));
        }
        for r in &randoms {
            if r.full_invariants(k, l)?.1 != full {
                return Ok(Some(format!("W[{k},{l}]: g1 = {} changes the invariants", r.g1)));
            }
        }
    }
    Ok(None)
}

fn invariants_generated_algebra(_: &SuiteConfig) -> Result<Option<String>> {
    let ctx = InvariantContext::<Rational>::new(AlgebraType::A, 2, None)?;
    for row in invariant_table(&ctx, 3, None)? {
        if row.comparison != Comparison::Match {
            return Ok(Some(format!("W[{},{}]: {}", row.report.grade.0, row.report.grade.1, row.comparison)));
        }
    }
    Ok(None)
}

fn invariants_generators_annihilated(_: &SuiteConfig) -> Result<Option<String>> {
    let fields = g01(AlgebraType::A, 2)?;
    for g in GeneratorName::ALL {
        let s = generator_state::<Rational>(g, 2)?;
        for v in &fields {
            if !act_l_plus(v, &s)?.is_zero() {
                return Ok(Some(format!("L+({v}) {} != 0", g.name())));
            }
        }
    }
    Ok(None)
}

fn invariants_evidence_containment(_: &SuiteConfig) -> Result<Option<String>> {
    for ev in conjecture_evidence::<Rational>(3, 2)? {
        for row in &ev.rows {
            if let Comparison::NotContained { .. } = row.comparison {
                return Ok(Some(format!(
                    "{}, N = 3, W[{},{}]: {}",
                    ev.kind, row.report.grade.0, row.report.grade.1, row.comparison
                )));
            }
        }
    }
    Ok(None)
}
