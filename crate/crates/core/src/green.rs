//! Randomized checks of the hyperplane restriction bound
//! `dim S_d <= (dim R_d)_<d>` and of its iterate for `r` cuts.
//!
//! A generic form is emulated by sampling: special forms can only make the
//! restricted dimension larger, so the minimum over the trials is the
//! estimate of the generic value and the check passes when that minimum is
//! within the bound. Trial `t` draws from the child generator `seed + t`.

use alloc::vec::Vec;

use crate::algebra::{component_dimension, quotient_by_forms, restrict_hyperplane, Limits, LinearForm, PresentedAlgebra};
use crate::error::{Error, Result};
use crate::macaulay::{iterated_shadow, BigCount};
use crate::rng::{SeededRng, VectorConstraint};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreenReport {
    pub n: usize,
    pub p: u64,
    pub generators: usize,
    pub d: u32,
    pub r: u32,
    /// `dim_K R_d` of the input.
    pub dim: BigCount,
    pub bound: BigCount,
    pub trial_dims: Vec<BigCount>,
    pub min_dim: BigCount,
    pub pass: bool,
    pub seed: u64,
    /// Forms sampled by each trial, kept for replaying failures.
    pub forms: Vec<Vec<LinearForm>>,
}

fn validate(d: u32, trials: u32) -> Result<()> {
    if d == 0 {
        return Err(Error::InvalidArgument("degree must be at least 1".into()));
    }
    if trials == 0 {
        return Err(Error::InvalidArgument("at least one trial is required".into()));
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn assemble(
    a: &PresentedAlgebra,
    d: u32,
    r: u32,
    dim: BigCount,
    bound: BigCount,
    trial_dims: Vec<BigCount>,
    forms: Vec<Vec<LinearForm>>,
    seed: u64,
) -> GreenReport {
    let min_dim = trial_dims.iter().min().cloned().expect("at least one trial");
    GreenReport {
        n: a.nvars(),
        p: a.field().modulus(),
        generators: a.generators().len(),
        d,
        r,
        pass: min_dim <= bound,
        dim,
        bound,
        trial_dims,
        min_dim,
        seed,
        forms,
    }
}

/// One generic hyperplane: restricts along `trials` random forms with
/// `l_n != 0` and compares the smallest restricted dimension with
/// `(dim R_d)_<d>`.
pub fn check_green(a: &PresentedAlgebra, d: u32, trials: u32, rng: &SeededRng, limits: &Limits) -> Result<GreenReport> {
    validate(d, trials)?;
    let field = a.field();
    let dim = component_dimension(a, d, limits)?;
    let bound = iterated_shadow(&dim, d, 1)?;
    let mut trial_dims = Vec::with_capacity(trials as usize);
    let mut forms = Vec::with_capacity(trials as usize);
    for t in 0..trials {
        let mut child = rng.child(t as u64);
        let form = LinearForm::new(field, child.random_vector(&field, a.nvars(), VectorConstraint::LastNonzero))?;
        let restricted_dim = if a.nvars() == 1 {
            // the restriction is K itself, which vanishes in positive degree
            BigCount::from(0u32)
        } else {
            component_dimension(&restrict_hyperplane(a, &form)?, d, limits)?
        };
        trial_dims.push(restricted_dim);
        forms.push(alloc::vec![form]);
    }
    Ok(assemble(a, d, 1, dim, bound, trial_dims, forms, rng.seed()))
}

/// `r` generic cuts: quotients by `r` random forms per trial and compares
/// with `sum_j C(k_j - r, j)`.
pub fn check_corollary(
    a: &PresentedAlgebra,
    d: u32,
    r: u32,
    trials: u32,
    rng: &SeededRng,
    limits: &Limits,
) -> Result<GreenReport> {
    validate(d, trials)?;
    if r == 0 || r as usize > a.nvars() {
        return Err(Error::InvalidArgument(alloc::format!(
            "cuts must lie in 1..={}, got {r}",
            a.nvars()
        )));
    }
    let field = a.field();
    let dim = component_dimension(a, d, limits)?;
    let bound = iterated_shadow(&dim, d, r as u64)?;
    let mut trial_dims = Vec::with_capacity(trials as usize);
    let mut forms = Vec::with_capacity(trials as usize);
    for t in 0..trials {
        let mut child = rng.child(t as u64);
        let sample = (0..r)
            .map(|_| LinearForm::new(field, child.random_vector(&field, a.nvars(), VectorConstraint::Nonzero)))
            .collect::<Result<Vec<_>>>()?;
        trial_dims.push(component_dimension(&quotient_by_forms(a, &sample)?, d, limits)?);
        forms.push(sample);
    }
    Ok(assemble(a, d, r, dim, bound, trial_dims, forms, rng.seed()))
}
