//! Sparse multivariate polynomials over GF(p).

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::error::{Error, Result};
use crate::field::PrimeField;

/// Exponent vector. The derived order is lexicographic on exponents with
/// `x_1` most significant.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self { exponents }
    }

    pub fn one(n: usize) -> Self {
        Self { exponents: vec![0; n] }
    }

    /// `x_index` in `n` variables.
    pub fn var(n: usize, index: usize) -> Self {
        let mut exponents = vec![0; n];
        exponents[index] = 1;
        Self { exponents }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn nvars(&self) -> usize {
        self.exponents.len()
    }

    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial { exponents: self.exponents.iter().zip(&other.exponents).map(|(a, b)| a + b).collect() }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exponents.iter().zip(&other.exponents).all(|(a, b)| a <= b)
    }
}

/// All monomials of total degree `d` in `n` variables, in descending
/// lexicographic order of exponent vectors (`x_1^d` first).
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn fill(prefix: &mut Vec<u32>, n: usize, left: u32, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == n {
            prefix.push(left);
            out.push(Monomial::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=left).rev() {
            prefix.push(e);
            fill(prefix, n, left - e, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    fill(&mut Vec::with_capacity(n), n, d, &mut out);
    out
}

/// Index of every monomial of one degree, for turning homogeneous
/// polynomials into coefficient vectors.
#[derive(Debug, Clone)]
pub struct MonomialBasis {
    monomials: Vec<Monomial>,
    index: BTreeMap<Monomial, usize>,
}

impl MonomialBasis {
    pub fn new(n: usize, d: u32) -> Self {
        let monomials = monomials_of_degree(n, d);
        let index = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        Self { monomials, index }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Dense coefficient vector of `poly` (all terms must lie in this degree).
    pub fn coordinates(&self, poly: &Polynomial) -> Vec<u64> {
        let mut v = vec![0; self.len()];
        for (m, &c) in poly.terms() {
            let pos = self.position(m).expect("term outside the basis degree");
            v[pos] = c;
        }
        v
    }

    /// Coordinates of `shift * poly`, skipping the intermediate polynomial.
    pub fn shifted_coordinates(&self, shift: &Monomial, poly: &Polynomial) -> Vec<u64> {
        let mut v = vec![0; self.len()];
        for (m, &c) in poly.terms() {
            let pos = self.position(&shift.mul(m)).expect("term outside the basis degree");
            v[pos] = c;
        }
        v
    }

    pub fn polynomial(&self, field: PrimeField, coords: &[u64]) -> Polynomial {
        let n = self.monomials.first().map_or(0, Monomial::nvars);
        let mut p = Polynomial::zero(n, field);
        for (m, &c) in self.monomials.iter().zip(coords) {
            p.add_term(m.clone(), c);
        }
        p
    }
}

/// Polynomial in `n` variables over GF(p); zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    n: usize,
    field: PrimeField,
    terms: BTreeMap<Monomial, u64>,
}

impl Polynomial {
    pub fn zero(n: usize, field: PrimeField) -> Self {
        Self { n, field, terms: BTreeMap::new() }
    }

    pub fn constant(n: usize, field: PrimeField, c: u64) -> Self {
        let mut p = Self::zero(n, field);
        p.add_term(Monomial::one(n), c);
        p
    }

    pub fn monomial(field: PrimeField, m: Monomial, c: u64) -> Self {
        let mut p = Self::zero(m.nvars(), field);
        p.add_term(m, c);
        p
    }

    /// `sum_j coeffs[j] * x_j`.
    pub fn linear(field: PrimeField, coeffs: &[u64]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(n, field);
        for (j, &c) in coeffs.iter().enumerate() {
            p.add_term(Monomial::var(n, j), c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &u64)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> u64 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    /// Adds `c * m` in place.
    pub fn add_term(&mut self, m: Monomial, c: u64) {
        assert_eq!(m.nvars(), self.n, "monomial arity mismatch");
        let c = c % self.field.modulus();
        if c == 0 {
            return;
        }
        let f = self.field;
        let entry = self.terms.entry(m);
        match entry {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                let s = f.add(*o.get(), c);
                if s == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// Total degree of the leading-degree terms; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Degree when every term shares it, `None` for zero or mixed degrees.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    fn check_ambient(&self, other: &Polynomial) -> Result<()> {
        if self.n != other.n || self.field != other.field {
            return Err(Error::AmbientMismatch {
                expected: self.n,
                expected_p: self.field.modulus(),
                found: other.n,
                found_p: other.field.modulus(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ambient(other)?;
        let mut out = self.clone();
        for (m, &c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.scale(self.field.neg(1)))
    }

    pub fn scale(&self, k: u64) -> Polynomial {
        let f = self.field;
        let k = k % f.modulus();
        let mut out = Self::zero(self.n, f);
        if k != 0 {
            out.terms = self.terms.iter().map(|(m, &c)| (m.clone(), f.mul(c, k))).collect();
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        let mut out = Self::zero(self.n, self.field);
        out.terms = self.terms.iter().map(|(t, &c)| (t.mul(m), c)).collect();
        out
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ambient(other)?;
        let f = self.field;
        let mut out = Self::zero(self.n, f);
        for (ma, &ca) in &self.terms {
            for (mb, &cb) in &other.terms {
                out.add_term(ma.mul(mb), f.mul(ca, cb));
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Self::constant(self.n, self.field, 1);
        for _ in 0..e {
            acc = acc.mul(self).expect("same ambient");
        }
        acc
    }

    /// Replaces the last variable by `value` (a polynomial in the first
    /// `n - 1` variables) and drops it from the ambient ring.
    pub fn substitute_last(&self, value: &Polynomial) -> Result<Polynomial> {
        if self.n == 0 || value.n + 1 != self.n || value.field != self.field {
            return Err(Error::AmbientMismatch {
                expected: self.n.saturating_sub(1),
                expected_p: self.field.modulus(),
                found: value.n,
                found_p: value.field.modulus(),
            });
        }
        let f = self.field;
        let mut powers: Vec<Polynomial> = vec![Polynomial::constant(value.n, f, 1)];
        let mut out = Self::zero(value.n, f);
        for (m, &c) in &self.terms {
            let (head, last) = m.exponents.split_at(self.n - 1);
            let e = last[0] as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap().mul(value)?;
                powers.push(next);
            }
            let shift = Monomial::new(head.to_vec());
            for (t, &k) in &powers[e].terms {
                out.add_term(shift.mul(t), f.mul(c, k));
            }
        }
        Ok(out)
    }

    /// Writes the polynomial in the input grammar, highest monomial first.
    /// Coefficients are printed as residues, e.g. `x^2 + 32002*y^2`.
    pub fn format_with(&self, names: &[String]) -> String {
        let mut s = String::new();
        if self.terms.is_empty() {
            s.push('0');
            return s;
        }
        for (idx, (m, &c)) in self.terms.iter().rev().enumerate() {
            if idx > 0 {
                s.push_str(" + ");
            }
            let mut factors: Vec<String> = Vec::new();
            for (j, &e) in m.exponents.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(names[j].clone()),
                    _ => {
                        let mut f = String::new();
                        let _ = write!(f, "{}^{}", names[j], e);
                        factors.push(f);
                    }
                }
            }
            if factors.is_empty() {
                let _ = write!(s, "{c}");
            } else {
                if c != 1 {
                    let _ = write!(s, "{c}*");
                }
                s.push_str(&factors.join("*"));
            }
        }
        s
    }
}

/// Default variable names `x1, ..., xn`.
pub fn default_names(n: usize) -> Vec<String> {
    (1..=n)
        .map(|i| {
            let mut s = String::new();
            let _ = write!(s, "x{i}");
            s
        })
        .collect()
}
