//! The Eakin-Sathaye counting condition as a procedure.
//!
//! Graded form: if `dim R_i < C(i + r, r)` there are linear forms
//! `h_1..h_r` with `(R/(h_1..h_r))_i = 0`.
//!
//! Ideal form, for an ideal `I` generated in a single degree `t`: if
//! `v(I^i) = dim (I^i)_{it} < C(i + r, r)` there are `h_1..h_r` in `I_t` with
//! `I^i = (h_1..h_r) I^{i-1}`. Because `I^i` is generated in degree `it` and
//! `(h) I^{i-1}` is always contained in it, equality is the single linear
//! containment `(I^i)_{it} ⊆ span{h_j w : w a basis of (I^{i-1})_{(i-1)t}}`.
//! For `i = 1` the power `I^0` is the whole ring and `w` ranges over `{1}`.
//!
//! Finders sample forms from a [`SeededRng`]; trial `t` uses the child
//! generator `seed + t`. Every success is returned as a
//! [`ReductionCertificate`] that [`verify_certificate`] re-derives from
//! scratch.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::ToPrimitive;

use crate::algebra::{ideal_rank, Limits, PresentedAlgebra};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::linalg::RowSpace;
use crate::macaulay::{es_threshold, BigCount};
use crate::poly::{MonomialBasis, Polynomial};
use crate::rng::{SeededRng, VectorConstraint};

/// Largest brute-force search space accepted by [`exhaustive_reduction_search`].
pub const MAX_SEARCH_SPACE: u128 = 1_000_000;

/// An ideal whose listed generators all have degree `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquigeneratedIdeal {
    field: PrimeField,
    names: Vec<String>,
    t: u32,
    generators: Vec<Polynomial>,
}

impl EquigeneratedIdeal {
    pub fn new(field: PrimeField, names: Vec<String>, t: u32, generators: Vec<Polynomial>) -> Result<Self> {
        if t == 0 {
            return Err(Error::InvalidArgument("generator degree must be positive".into()));
        }
        if generators.is_empty() {
            return Err(Error::InvalidArgument("an ideal needs at least one generator".into()));
        }
        // reuse the algebra checks for ambient, zero and homogeneity
        PresentedAlgebra::new(field, names.clone(), generators.clone())?;
        for (index, g) in generators.iter().enumerate() {
            let found = g.homogeneous_degree().expect("checked homogeneous");
            if found != t {
                return Err(Error::WrongDegree { index, expected: t, found });
            }
        }
        Ok(Self { field, names, t, generators })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn degree(&self) -> u32 {
        self.t
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// `sum_g coeffs[g] * generator_g`.
    pub fn combination(&self, coeffs: &[u64]) -> Polynomial {
        let mut h = Polynomial::zero(self.nvars(), self.field);
        for (g, &c) in self.generators.iter().zip(coeffs) {
            if c != 0 {
                h = h.add(&g.scale(c)).expect("same ambient");
            }
        }
        h
    }
}

/// Every product of `k` generators (multisets of indices, in lexicographic
/// order of the index tuples). `k = 0` gives the constant `1`.
fn power_products(ideal: &EquigeneratedIdeal, k: u32) -> Vec<Polynomial> {
    let one = Polynomial::constant(ideal.nvars(), ideal.field, 1);
    let mut level: Vec<(usize, Polynomial)> = vec![(0, one)];
    for _ in 0..k {
        let mut next = Vec::new();
        for (start, p) in &level {
            for (g, gen) in ideal.generators.iter().enumerate().skip(*start) {
                next.push((g, p.mul(gen).expect("same ambient")));
            }
        }
        level = next;
    }
    level.into_iter().map(|(_, p)| p).collect()
}

/// A basis of `(I^k)_{kt}` chosen greedily among the `k`-fold products.
fn power_basis(ideal: &EquigeneratedIdeal, k: u32, limits: &Limits) -> Result<(MonomialBasis, Vec<Polynomial>)> {
    limits.check(ideal.nvars(), k * ideal.t)?;
    let basis = MonomialBasis::new(ideal.nvars(), k * ideal.t);
    let mut space = RowSpace::new(ideal.field, basis.len());
    let mut chosen = Vec::new();
    for p in power_products(ideal, k) {
        if space.insert(&basis.coordinates(&p)) {
            chosen.push(p);
        }
        if space.is_full() {
            break;
        }
    }
    Ok((basis, chosen))
}

/// `v(I^i) = dim_K (I^i)_{it}`.
pub fn power_component_dim(ideal: &EquigeneratedIdeal, i: u32, limits: &Limits) -> Result<BigCount> {
    if i == 0 {
        return Err(Error::InvalidArgument("power must be positive".into()));
    }
    Ok(BigCount::from(power_basis(ideal, i, limits)?.1.len()))
}

/// Both sides of a counting condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Condition {
    pub dim: BigCount,
    pub threshold: BigCount,
    pub holds: bool,
}

impl Condition {
    fn new(dim: BigCount, threshold: BigCount) -> Self {
        let holds = dim < threshold;
        Self { dim, threshold, holds }
    }

    fn require(&self) -> Result<()> {
        if self.holds {
            Ok(())
        } else {
            Err(Error::ConditionNotMet { dim: self.dim.clone(), threshold: self.threshold.clone() })
        }
    }
}

fn check_ir(i: u32, r: u32) -> Result<()> {
    if i == 0 || r == 0 {
        return Err(Error::InvalidArgument("i and r must be positive".into()));
    }
    Ok(())
}

/// `dim R_i < C(i + r, r)`.
pub fn es_condition(a: &PresentedAlgebra, i: u32, r: u32, limits: &Limits) -> Result<Condition> {
    check_ir(i, r)?;
    let dim = crate::algebra::component_dimension(a, i, limits)?;
    Ok(Condition::new(dim, es_threshold(i, r)))
}

/// `v(I^i) < C(i + r, r)`.
pub fn ideal_condition(ideal: &EquigeneratedIdeal, i: u32, r: u32, limits: &Limits) -> Result<Condition> {
    check_ir(i, r)?;
    Ok(Condition::new(power_component_dim(ideal, i, limits)?, es_threshold(i, r)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertificateMode {
    Graded,
    Ideal,
}

impl CertificateMode {
    pub fn as_str(&self) -> &'static str {
        match self {
            CertificateMode::Graded => "graded",
            CertificateMode::Ideal => "ideal",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verification {
    /// Measured `dim (R/(h))_i`; zero for a valid certificate.
    Annihilated { dim: BigCount },
    /// For each chosen basis element of `(I^i)_{it}`, its coefficients over
    /// the spanning set `h_j * w_k` (ordered `j` major, `k` minor).
    Membership { witnesses: Vec<Vec<u64>> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionCertificate {
    pub mode: CertificateMode,
    pub i: u32,
    pub r: u32,
    pub forms: Vec<Polynomial>,
    /// Ideal mode: coefficients of each `h_j` over the generators.
    pub combinations: Vec<Vec<u64>>,
    pub verification: Verification,
    pub seed: u64,
    /// Index of the successful trial.
    pub trial: u32,
}

pub enum Subject<'a> {
    Algebra(&'a PresentedAlgebra),
    Ideal(&'a EquigeneratedIdeal),
}

/// Samples `r` linear forms per trial until `(R/(h))_i = 0`.
pub fn find_annihilating_forms(
    a: &PresentedAlgebra,
    i: u32,
    r: u32,
    max_trials: u32,
    rng: &SeededRng,
    limits: &Limits,
) -> Result<ReductionCertificate> {
    es_condition(a, i, r, limits)?.require()?;
    let field = a.field();
    for trial in 0..max_trials {
        let mut child = rng.child(trial as u64);
        let forms: Vec<Polynomial> = (0..r)
            .map(|_| Polynomial::linear(field, &child.random_vector(&field, a.nvars(), VectorConstraint::Nonzero)))
            .collect();
        let mut gens = a.generators().to_vec();
        gens.extend(forms.iter().cloned());
        let (rank, size) = ideal_rank(field, a.nvars(), &gens, i, limits)?;
        if rank == size {
            return Ok(ReductionCertificate {
                mode: CertificateMode::Graded,
                i,
                r,
                forms,
                combinations: Vec::new(),
                verification: Verification::Annihilated { dim: BigCount::from(0u32) },
                seed: rng.seed(),
                trial,
            });
        }
    }
    Err(Error::NotFound { trials: max_trials, seed: rng.seed() })
}

/// Precomputed linear data for `I^i = (h) I^{i-1}` checks.
struct ReductionProblem {
    /// Coordinates of a basis of `(I^i)_{it}`.
    targets: Vec<Vec<u64>>,
    /// `gen_times_lower[g][k]` = coordinates of `generator_g * w_k`.
    gen_times_lower: Vec<Vec<Vec<u64>>>,
    lower: Vec<Polynomial>,
    cols: usize,
    field: PrimeField,
}

impl ReductionProblem {
    fn new(ideal: &EquigeneratedIdeal, i: u32, limits: &Limits) -> Result<Self> {
        let (basis, top) = power_basis(ideal, i, limits)?;
        let (_, lower) = power_basis(ideal, i - 1, limits)?;
        let targets = top.iter().map(|p| basis.coordinates(p)).collect();
        let gen_times_lower = ideal
            .generators
            .iter()
            .map(|g| lower.iter().map(|w| basis.coordinates(&g.mul(w).expect("same ambient"))).collect())
            .collect();
        Ok(Self { targets, gen_times_lower, lower, cols: basis.len(), field: ideal.field })
    }

    /// Spanning vectors `h_j * w_k` for `h_j = sum_g combos[j][g] gen_g`.
    fn spanning(&self, combos: &[Vec<u64>]) -> Vec<Vec<u64>> {
        let f = &self.field;
        let mut out = Vec::with_capacity(combos.len() * self.lower.len());
        for combo in combos {
            for k in 0..self.lower.len() {
                let mut v = vec![0u64; self.cols];
                for (g, &a) in combo.iter().enumerate() {
                    if a == 0 {
                        continue;
                    }
                    for (x, &y) in v.iter_mut().zip(&self.gen_times_lower[g][k]) {
                        if y != 0 {
                            *x = f.add(*x, f.mul(a, y));
                        }
                    }
                }
                out.push(v);
            }
        }
        out
    }

    fn covers(&self, combos: &[Vec<u64>]) -> bool {
        let mut space = RowSpace::new(self.field, self.cols);
        for v in self.spanning(combos) {
            space.insert(&v);
        }
        self.targets.iter().all(|t| space.contains(t))
    }

    fn witnesses(&self, combos: &[Vec<u64>]) -> Option<Vec<Vec<u64>>> {
        let mut space = RowSpace::tracked(self.field, self.cols);
        for v in self.spanning(combos) {
            space.insert(&v);
        }
        self.targets.iter().map(|t| space.express(t)).collect()
    }
}

/// Samples `h_j` as random combinations of the generators until
/// `I^i = (h_1..h_r) I^{i-1}`.
pub fn find_ideal_reduction(
    ideal: &EquigeneratedIdeal,
    i: u32,
    r: u32,
    max_trials: u32,
    rng: &SeededRng,
    limits: &Limits,
) -> Result<ReductionCertificate> {
    ideal_condition(ideal, i, r, limits)?.require()?;
    let problem = ReductionProblem::new(ideal, i, limits)?;
    let field = ideal.field;
    let g = ideal.generators.len();
    for trial in 0..max_trials {
        let mut child = rng.child(trial as u64);
        let combos: Vec<Vec<u64>> =
            (0..r).map(|_| child.random_vector(&field, g, VectorConstraint::Nonzero)).collect();
        if let Some(witnesses) = problem.witnesses(&combos) {
            return Ok(ReductionCertificate {
                mode: CertificateMode::Ideal,
                i,
                r,
                forms: combos.iter().map(|c| ideal.combination(c)).collect(),
                combinations: combos,
                verification: Verification::Membership { witnesses },
                seed: rng.seed(),
                trial,
            });
        }
    }
    Err(Error::NotFound { trials: max_trials, seed: rng.seed() })
}

fn malformed(msg: &str) -> Error {
    Error::MalformedCertificate(msg.into())
}

/// Re-derives a certificate's conclusion from its forms alone. Stored
/// witnesses and combinations are only cross-checked.
pub fn verify_certificate(subject: Subject<'_>, cert: &ReductionCertificate, limits: &Limits) -> Result<bool> {
    if cert.i == 0 {
        return Err(malformed("power must be positive"));
    }
    if cert.forms.len() != cert.r as usize {
        return Err(malformed("form count differs from r"));
    }
    match (subject, cert.mode) {
        (Subject::Algebra(a), CertificateMode::Graded) => verify_graded(a, cert, limits),
        (Subject::Ideal(ideal), CertificateMode::Ideal) => verify_ideal(ideal, cert, limits),
        _ => Err(malformed("certificate mode does not match the subject")),
    }
}

fn check_form_ambient(form: &Polynomial, n: usize, field: PrimeField, degree: u32) -> Result<()> {
    if form.nvars() != n || form.field() != field {
        return Err(malformed("form lives in a different ring"));
    }
    if !form.is_zero() && form.homogeneous_degree() != Some(degree) {
        return Err(malformed("form has the wrong degree"));
    }
    Ok(())
}

fn verify_graded(a: &PresentedAlgebra, cert: &ReductionCertificate, limits: &Limits) -> Result<bool> {
    let Verification::Annihilated { dim: stored } = &cert.verification else {
        return Err(malformed("graded certificate without a dimension"));
    };
    for form in &cert.forms {
        check_form_ambient(form, a.nvars(), a.field(), 1)?;
    }
    let mut gens = a.generators().to_vec();
    gens.extend(cert.forms.iter().filter(|f| !f.is_zero()).cloned());
    let (rank, size) = ideal_rank(a.field(), a.nvars(), &gens, cert.i, limits)?;
    let measured = BigCount::from(size - rank);
    Ok(measured == BigCount::from(0u32) && *stored == measured)
}

fn verify_ideal(ideal: &EquigeneratedIdeal, cert: &ReductionCertificate, limits: &Limits) -> Result<bool> {
    let Verification::Membership { witnesses } = &cert.verification else {
        return Err(malformed("ideal certificate without witnesses"));
    };
    let n = ideal.nvars();
    let field = ideal.field;
    for form in &cert.forms {
        check_form_ambient(form, n, field, ideal.t)?;
    }
    let problem = ReductionProblem::new(ideal, cert.i, limits)?;
    let basis = MonomialBasis::new(n, cert.i * ideal.t);
    let basis = &basis;
    let top_basis = MonomialBasis::new(n, ideal.t);

    // every h_j must lie in I_t, which makes (h) I^{i-1} a subset of I^i
    let mut degree_t = RowSpace::new(field, top_basis.len());
    for g in &ideal.generators {
        degree_t.insert(&top_basis.coordinates(g));
    }
    if !cert.forms.iter().all(|h| degree_t.contains(&top_basis.coordinates(h))) {
        return Ok(false);
    }

    let spanning: Vec<Vec<u64>> = cert
        .forms
        .iter()
        .flat_map(|h| problem.lower.iter().map(move |w| basis.coordinates(&h.mul(w).expect("same ambient"))))
        .collect();
    let mut top = RowSpace::new(field, problem.cols);
    for t in &problem.targets {
        top.insert(t);
    }
    assert!(spanning.iter().all(|s| top.contains(s)), "(h) I^(i-1) must lie in I^i");

    let mut span = RowSpace::new(field, problem.cols);
    for s in &spanning {
        span.insert(s);
    }
    if !problem.targets.iter().all(|t| span.contains(t)) {
        return Ok(false);
    }

    if !cert.combinations.is_empty() {
        if cert.combinations.len() != cert.forms.len()
            || cert.combinations.iter().any(|c| c.len() != ideal.generators.len())
        {
            return Ok(false);
        }
        if cert.combinations.iter().zip(&cert.forms).any(|(c, h)| ideal.combination(c) != *h) {
            return Ok(false);
        }
    }

    if witnesses.len() != problem.targets.len() {
        return Ok(false);
    }
    for (w, target) in witnesses.iter().zip(&problem.targets) {
        if w.len() != spanning.len() {
            return Ok(false);
        }
        let mut acc = vec![0u64; problem.cols];
        for (&c, s) in w.iter().zip(&spanning) {
            for (x, &y) in acc.iter_mut().zip(s) {
                *x = field.add(*x, field.mul(c % field.modulus(), y));
            }
        }
        if acc != *target {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every `r`-tuple of coefficient vectors over GF(q)^g (q the ideal's own
/// prime) whose combinations satisfy `I^i = (h) I^{i-1}`, in lexicographic
/// order of the flattened tuples.
pub fn exhaustive_reduction_search(
    ideal: &EquigeneratedIdeal,
    i: u32,
    r: u32,
    limits: &Limits,
) -> Result<Vec<Vec<Vec<u64>>>> {
    check_ir(i, r)?;
    let q = ideal.field.modulus();
    let g = ideal.generators.len();
    let digits = g * r as usize;
    let size = (q as u128).checked_pow(digits as u32).unwrap_or(u128::MAX);
    if size > MAX_SEARCH_SPACE {
        return Err(Error::SearchSpaceTooLarge { size, cap: MAX_SEARCH_SPACE });
    }
    let problem = ReductionProblem::new(ideal, i, limits)?;
    let mut found = Vec::new();
    let mut flat = vec![0u64; digits];
    for index in 0..size.to_u64().expect("capped") {
        let mut rest = index;
        for slot in flat.iter_mut().rev() {
            *slot = rest % q;
            rest /= q;
        }
        let combos: Vec<Vec<u64>> = flat.chunks(g).map(<[u64]>::to_vec).collect();
        if problem.covers(&combos) {
            found.push(combos);
        }
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{default_names, Monomial};

    fn field(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn mono(f: PrimeField, e: &[u32]) -> Polynomial {
        Polynomial::monomial(f, Monomial::new(e.to_vec()), 1)
    }

    fn quadrics(f: PrimeField) -> EquigeneratedIdeal {
        EquigeneratedIdeal::new(f, default_names(2), 2, vec![mono(f, &[2, 0]), mono(f, &[1, 1]), mono(f, &[0, 2])])
            .unwrap()
    }

    fn xy_algebra(f: PrimeField) -> PresentedAlgebra {
        PresentedAlgebra::new(f, default_names(2), vec![mono(f, &[1, 1])]).unwrap()
    }

    fn big(v: u64) -> BigCount {
        BigCount::from(v)
    }

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn graded_condition_examples() {
        let f = field(32003);
        let c = es_condition(&xy_algebra(f), 2, 1, &lim()).unwrap();
        assert_eq!((c.dim.clone(), c.threshold.clone(), c.holds), (big(2), big(3), true));
        let free = PresentedAlgebra::free(f, 2).unwrap();
        let c = es_condition(&free, 1, 1, &lim()).unwrap();
        assert_eq!((c.dim.clone(), c.threshold.clone(), c.holds), (big(2), big(2), false));
        let killed = PresentedAlgebra::new(f, default_names(1), vec![mono(f, &[1])]).unwrap();
        assert!(es_condition(&killed, 3, 1, &lim()).unwrap().holds);
    }

    #[test]
    fn annihilating_forms() {
        let f = field(32003);
        let a = xy_algebra(f);
        let cert = find_annihilating_forms(&a, 2, 1, 10, &SeededRng::new(0), &lim()).unwrap();
        assert_eq!(cert.forms.len(), 1);
        assert_eq!(cert.forms[0].len(), 2, "both coefficients nonzero");
        assert!(verify_certificate(Subject::Algebra(&a), &cert, &lim()).unwrap());

        let mut zeroed = cert.clone();
        zeroed.forms[0] = Polynomial::zero(2, f);
        assert!(!verify_certificate(Subject::Algebra(&a), &zeroed, &lim()).unwrap());

        let free3 = PresentedAlgebra::free(f, 3).unwrap();
        let cert = find_annihilating_forms(&free3, 1, 3, 10, &SeededRng::new(1), &lim()).unwrap();
        assert!(verify_certificate(Subject::Algebra(&free3), &cert, &lim()).unwrap());
        let mut dropped = cert.clone();
        dropped.forms.pop();
        dropped.r = 2;
        assert!(!verify_certificate(Subject::Algebra(&free3), &dropped, &lim()).unwrap());

        let free2 = PresentedAlgebra::free(f, 2).unwrap();
        assert!(matches!(
            find_annihilating_forms(&free2, 1, 1, 10, &SeededRng::new(0), &lim()),
            Err(Error::ConditionNotMet { .. })
        ));
    }

    #[test]
    fn trivial_piece_succeeds_on_first_trial() {
        let f = field(32003);
        let a = PresentedAlgebra::new(f, default_names(2), vec![mono(f, &[1, 0]), mono(f, &[0, 1])]).unwrap();
        let cert = find_annihilating_forms(&a, 2, 1, 10, &SeededRng::new(5), &lim()).unwrap();
        assert_eq!(cert.trial, 0);
    }

    #[test]
    fn power_dimensions() {
        let f = field(32003);
        assert_eq!(power_component_dim(&quadrics(f), 2, &lim()).unwrap(), big(5));
        let x = EquigeneratedIdeal::new(f, default_names(1), 1, vec![mono(f, &[1])]).unwrap();
        for i in 1..5 {
            assert_eq!(power_component_dim(&x, i, &lim()).unwrap(), big(1));
        }
        let squares =
            EquigeneratedIdeal::new(f, default_names(2), 2, vec![mono(f, &[2, 0]), mono(f, &[0, 2])]).unwrap();
        assert_eq!(power_component_dim(&squares, 2, &lim()).unwrap(), big(3));
    }

    #[test]
    fn rejects_mixed_degrees() {
        let f = field(7);
        assert_eq!(
            EquigeneratedIdeal::new(f, default_names(2), 2, vec![mono(f, &[2, 0]), mono(f, &[0, 1])]),
            Err(Error::WrongDegree { index: 1, expected: 2, found: 1 })
        );
        assert!(EquigeneratedIdeal::new(f, default_names(2), 2, vec![]).is_err());
    }

    fn hand_certificate(f: PrimeField, ideal: &EquigeneratedIdeal, combos: Vec<Vec<u64>>) -> ReductionCertificate {
        let problem = ReductionProblem::new(ideal, 2, &lim()).unwrap();
        let witnesses = problem.witnesses(&combos).unwrap_or_default();
        let _ = f;
        ReductionCertificate {
            mode: CertificateMode::Ideal,
            i: 2,
            r: combos.len() as u32,
            forms: combos.iter().map(|c| ideal.combination(c)).collect(),
            combinations: combos,
            verification: Verification::Membership { witnesses },
            seed: 0,
            trial: 0,
        }
    }

    #[test]
    fn ideal_reduction_examples() {
        let f = field(32003);
        let ideal = quadrics(f);
        let cert = find_ideal_reduction(&ideal, 2, 2, 10, &SeededRng::new(0), &lim()).unwrap();
        assert!(verify_certificate(Subject::Ideal(&ideal), &cert, &lim()).unwrap());

        let hand = hand_certificate(f, &ideal, vec![vec![1, 0, 0], vec![0, 0, 1]]);
        assert!(verify_certificate(Subject::Ideal(&ideal), &hand, &lim()).unwrap());

        let mut dropped = hand.clone();
        dropped.forms.pop();
        dropped.combinations.pop();
        dropped.r = 1;
        assert!(!verify_certificate(Subject::Ideal(&ideal), &dropped, &lim()).unwrap());

        let mut zeroed = hand.clone();
        zeroed.combinations[0][0] = 0;
        zeroed.forms[0] = Polynomial::zero(2, f);
        assert!(!verify_certificate(Subject::Ideal(&ideal), &zeroed, &lim()).unwrap());

        let mut bad_witness = hand.clone();
        if let Verification::Membership { witnesses } = &mut bad_witness.verification {
            witnesses[0][0] = f.add(witnesses[0][0], 1);
        }
        assert!(!verify_certificate(Subject::Ideal(&ideal), &bad_witness, &lim()).unwrap());

        assert!(matches!(
            find_ideal_reduction(&ideal, 1, 2, 10, &SeededRng::new(0), &lim()),
            Err(Error::ConditionNotMet { .. })
        ));

        let x = EquigeneratedIdeal::new(f, default_names(1), 1, vec![mono(f, &[1])]).unwrap();
        let cert = find_ideal_reduction(&x, 2, 1, 10, &SeededRng::new(3), &lim()).unwrap();
        assert!(verify_certificate(Subject::Ideal(&x), &cert, &lim()).unwrap());
    }

    #[test]
    fn first_power_uses_the_whole_ring() {
        let f = field(32003);
        let ideal = EquigeneratedIdeal::new(f, default_names(2), 2, vec![mono(f, &[2, 0]), mono(f, &[0, 2])]).unwrap();
        // v(I) = 2 < C(1 + 2, 2) = 3
        let cert = find_ideal_reduction(&ideal, 1, 2, 10, &SeededRng::new(0), &lim()).unwrap();
        assert!(verify_certificate(Subject::Ideal(&ideal), &cert, &lim()).unwrap());
        let Verification::Membership { witnesses } = &cert.verification else { panic!() };
        assert_eq!(witnesses.len(), 2);
        assert!(witnesses.iter().all(|w| w.len() == 2));
    }

    #[test]
    fn foreign_forms_are_rejected() {
        let f = field(32003);
        let ideal = quadrics(f);
        let squares =
            EquigeneratedIdeal::new(f, default_names(2), 2, vec![mono(f, &[2, 0]), mono(f, &[0, 2])]).unwrap();
        // (x^2, y^2) is valid for (x^2, xy, y^2) but xy is not in (x^2, y^2)
        let mut cert = hand_certificate(f, &ideal, vec![vec![0, 1, 0], vec![1, 0, 1]]);
        cert.combinations.clear();
        assert!(!verify_certificate(Subject::Ideal(&squares), &cert, &lim()).unwrap());
    }

    #[test]
    fn mode_mismatch_is_malformed() {
        let f = field(32003);
        let a = xy_algebra(f);
        let ideal = quadrics(f);
        let cert = find_annihilating_forms(&a, 2, 1, 10, &SeededRng::new(0), &lim()).unwrap();
        assert!(matches!(
            verify_certificate(Subject::Ideal(&ideal), &cert, &lim()),
            Err(Error::MalformedCertificate(_))
        ));
    }

    #[test]
    fn exhaustive_small_fields() {
        let f3 = field(3);
        let ideal = quadrics(f3);
        let found = exhaustive_reduction_search(&ideal, 2, 2, &lim()).unwrap();
        assert!(found.contains(&vec![vec![1, 0, 0], vec![0, 0, 1]]));
        assert!(!found.contains(&vec![vec![1, 0, 0], vec![1, 0, 0]]));
        let mut sorted = found.clone();
        sorted.sort();
        assert_eq!(sorted, found);

        let x = EquigeneratedIdeal::new(f3, default_names(1), 1, vec![mono(f3, &[1])]).unwrap();
        assert_eq!(exhaustive_reduction_search(&x, 2, 1, &lim()).unwrap(), vec![vec![vec![1]], vec![vec![2]]]);

        let big_field = quadrics(field(32003));
        assert!(matches!(
            exhaustive_reduction_search(&big_field, 2, 2, &lim()),
            Err(Error::SearchSpaceTooLarge { .. })
        ));
    }

    #[test]
    fn finder_agrees_with_oracle_over_gf5() {
        let f5 = field(5);
        let ideal = quadrics(f5);
        let found = exhaustive_reduction_search(&ideal, 2, 2, &lim()).unwrap();
        for seed in 0..10 {
            let cert = find_ideal_reduction(&ideal, 2, 2, 10, &SeededRng::new(seed), &lim()).unwrap();
            assert!(found.contains(&cert.combinations));
        }
    }
}
