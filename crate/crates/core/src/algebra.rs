//! Presented standard graded algebras `K[X_1..X_n]/I` and their graded
//! pieces.
//!
//! Dimensions are computed degree by degree: the degree-`d` piece of `I` is
//! spanned by `m * g` for every generator `g` of degree `e <= d` and every
//! monomial `m` of degree `d - e`, so `dim R_d` is the number of degree-`d`
//! monomials minus the rank of those products.

use alloc::string::String;
use alloc::vec::Vec;

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::linalg::RowSpace;
use crate::macaulay::{binomial, BigCount};
use crate::poly::{default_names, monomials_of_degree, Monomial, MonomialBasis, Polynomial};

/// Caps on the size of graded pieces handled by dense elimination.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest accepted number of monomials in one degree.
    pub max_basis: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self { max_basis: 4000 }
    }
}

impl Limits {
    /// Checks the size of the degree-`d` monomial basis in `n` variables.
    pub fn check(&self, n: usize, d: u32) -> Result<()> {
        let size = if n == 0 {
            BigCount::from(u32::from(d == 0))
        } else {
            binomial((n as i64) + d as i64 - 1, d as u64)
        };
        if size > BigCount::from(self.max_basis) {
            return Err(Error::SizeCap { vars: n, degree: d, size, cap: self.max_basis });
        }
        Ok(())
    }
}

/// `l_1 X_1 + ... + l_n X_n`, not identically zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearForm {
    field: PrimeField,
    coeffs: Vec<u64>,
}

impl LinearForm {
    pub fn new(field: PrimeField, coeffs: Vec<u64>) -> Result<Self> {
        let coeffs: Vec<u64> = coeffs.into_iter().map(|c| c % field.modulus()).collect();
        if coeffs.iter().all(|&c| c == 0) {
            return Err(Error::ZeroForm);
        }
        Ok(Self { field, coeffs })
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn nvars(&self) -> usize {
        self.coeffs.len()
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::linear(self.field, &self.coeffs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresentedAlgebra {
    field: PrimeField,
    names: Vec<String>,
    generators: Vec<Polynomial>,
}

impl PresentedAlgebra {
    /// Validates that every generator is a nonzero homogeneous polynomial of
    /// positive degree in `names.len()` variables over `field`.
    pub fn new(field: PrimeField, names: Vec<String>, generators: Vec<Polynomial>) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::InvalidArgument("an algebra needs at least one variable".into()));
        }
        for (index, g) in generators.iter().enumerate() {
            if g.nvars() != n || g.field() != field {
                return Err(Error::AmbientMismatch {
                    expected: n,
                    expected_p: field.modulus(),
                    found: g.nvars(),
                    found_p: g.field().modulus(),
                });
            }
            if g.is_zero() {
                return Err(Error::ZeroForm);
            }
            match g.homogeneous_degree() {
                None => return Err(Error::NotHomogeneous { index }),
                Some(0) => return Err(Error::ConstantGenerator { index }),
                Some(_) => {}
            }
        }
        Ok(Self { field, names, generators })
    }

    /// The polynomial ring itself, with variables `x1..xn`.
    pub fn free(field: PrimeField, n: usize) -> Result<Self> {
        Self::new(field, default_names(n), Vec::new())
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn with_generators(&self, extra: impl IntoIterator<Item = Polynomial>) -> Result<Self> {
        let mut generators = self.generators.clone();
        generators.extend(extra);
        Self::new(self.field, self.names.clone(), generators)
    }

    fn check_form(&self, form: &LinearForm) -> Result<()> {
        if form.nvars() != self.nvars() || form.field() != self.field {
            return Err(Error::AmbientMismatch {
                expected: self.nvars(),
                expected_p: self.field.modulus(),
                found: form.nvars(),
                found_p: form.field().modulus(),
            });
        }
        Ok(())
    }
}

/// Rank of the degree-`d` piece of the ideal generated by `generators`
/// (zero polynomials are skipped), together with the basis size.
pub(crate) fn ideal_rank(
    field: PrimeField,
    n: usize,
    generators: &[Polynomial],
    d: u32,
    limits: &Limits,
) -> Result<(usize, usize)> {
    limits.check(n, d)?;
    let basis = MonomialBasis::new(n, d);
    let mut space = RowSpace::new(field, basis.len());
    'outer: for g in generators {
        let Some(e) = g.homogeneous_degree() else { continue };
        if e > d {
            continue;
        }
        for m in monomials_of_degree(n, d - e) {
            space.insert(&basis.shifted_coordinates(&m, g));
            if space.is_full() {
                break 'outer;
            }
        }
    }
    Ok((space.rank(), basis.len()))
}

/// `dim_K R_d`.
pub fn component_dimension(a: &PresentedAlgebra, d: u32, limits: &Limits) -> Result<BigCount> {
    let (rank, size) = ideal_rank(a.field, a.nvars(), &a.generators, d, limits)?;
    Ok(BigCount::from(size - rank))
}

/// `R/(L_1, ..., L_k)` presented in the same variables.
pub fn quotient_by_forms(a: &PresentedAlgebra, forms: &[LinearForm]) -> Result<PresentedAlgebra> {
    for form in forms {
        a.check_form(form)?;
    }
    a.with_generators(forms.iter().map(LinearForm::to_polynomial))
}

/// `R_L = K[X_1..X_{n-1}]/I_L`, where `I_L` substitutes `X_n` by
/// `(L / l_n) - X_n` in every generator.
pub fn restrict_hyperplane(a: &PresentedAlgebra, form: &LinearForm) -> Result<PresentedAlgebra> {
    a.check_form(form)?;
    let n = a.nvars();
    let field = a.field;
    let l_n = form.coeffs()[n - 1];
    if l_n == 0 {
        return Err(Error::LastCoefficientZero);
    }
    if n == 1 {
        return Err(Error::NoVariablesLeft);
    }
    let last = Polynomial::monomial(field, Monomial::var(n, n - 1), 1);
    let scaled = form.to_polynomial().scale(field.inv(l_n)?);
    let value = scaled.sub(&last)?;
    debug_assert_eq!(value.coefficient(&Monomial::var(n, n - 1)), 0);
    let mut truncated = Polynomial::zero(n - 1, field);
    for (m, &c) in value.terms() {
        truncated.add_term(Monomial::new(m.exponents()[..n - 1].to_vec()), c);
    }
    let mut generators = Vec::with_capacity(a.generators.len());
    for g in &a.generators {
        let r = g.substitute_last(&truncated)?;
        if !r.is_zero() {
            generators.push(r);
        }
    }
    PresentedAlgebra::new(field, a.names[..n - 1].to_vec(), generators)
}

/// `dim_K R_d` as a machine integer; dimensions are bounded by the basis cap.
pub fn component_dimension_usize(a: &PresentedAlgebra, d: u32, limits: &Limits) -> Result<usize> {
    Ok(component_dimension(a, d, limits)?.to_usize().expect("bounded by the basis cap"))
}
