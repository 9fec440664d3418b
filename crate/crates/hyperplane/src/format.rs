//! Text formats for algebras, ideals and polynomials.
//!
//! ```text
//! # comment
//! vars: x y z
//! prime: 32003
//! degree: 2          (ideal files only)
//! 2*x^2*y - 3*y^3
//! x*z
//! ```
//!
//! Header lines (`key: value`) come first, then one generator per nonempty
//! line. A polynomial is a sum of signed terms; a term is `*`-separated
//! factors, each an integer or a power `var^exp` (`^exp` defaults to 1).
//! Whitespace is insignificant and coefficients are reduced mod p.

use std::iter::Peekable;
use std::str::CharIndices;

use hyperplane_core::field::DEFAULT_PRIME;
use hyperplane_core::poly::{Monomial, Polynomial};
use hyperplane_core::{EquigeneratedIdeal, PresentedAlgebra, PrimeField};
use thiserror::Error;

/// Grammar summary printed with parse errors.
pub const GRAMMAR: &str = "\
expected file layout:
  vars: <name> <name> ...     names match [a-zA-Z][a-zA-Z0-9_]*
  prime: <p>                  (defaults to 32003)
  degree: <t>                 (ideal files only)
  <generator>                 one polynomial per line, '#' starts a comment
polynomial grammar:
  poly   := ['+'|'-'] term (('+'|'-') term)*
  term   := factor ('*' factor)*
  factor := integer | name ['^' integer]
example: 2*x^2*y - 3*y^3";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct FormatError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl FormatError {
    fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        Self { line, column, message: message.into() }
    }
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

struct Parser<'a> {
    chars: Peekable<CharIndices<'a>>,
    text: &'a str,
    line: usize,
    names: &'a [String],
    field: PrimeField,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while matches!(self.chars.peek(), Some((_, c)) if c.is_whitespace()) {
            self.chars.next();
        }
    }

    fn column(&mut self) -> usize {
        match self.chars.peek() {
            Some(&(idx, _)) => self.text[..idx].chars().count() + 1,
            None => self.text.chars().count() + 1,
        }
    }

    fn err(&mut self, message: impl Into<String>) -> FormatError {
        let column = self.column();
        FormatError::new(self.line, column, message)
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.peek().map(|&(_, c)| c)
    }

    fn integer_digits(&mut self) -> String {
        let mut s = String::new();
        while let Some(&(_, c)) = self.chars.peek() {
            if c.is_ascii_digit() {
                s.push(c);
                self.chars.next();
            } else {
                break;
            }
        }
        s
    }

    fn residue(&self, digits: &str) -> u64 {
        let p = self.field.modulus();
        digits.bytes().fold(0u64, |acc, b| (acc * 10 + u64::from(b - b'0')) % p)
    }

    fn identifier(&mut self) -> String {
        let mut s = String::new();
        while let Some(&(_, c)) = self.chars.peek() {
            if c.is_ascii_alphanumeric() || c == '_' {
                s.push(c);
                self.chars.next();
            } else {
                break;
            }
        }
        s
    }

    fn factor(&mut self, coeff: &mut u64, exps: &mut [u32]) -> Result<(), FormatError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let digits = self.integer_digits();
                *coeff = self.field.mul(*coeff, self.residue(&digits));
                Ok(())
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let column = self.column();
                let name = self.identifier();
                let Some(index) = self.names.iter().position(|n| *n == name) else {
                    return Err(FormatError::new(self.line, column, format!("unknown variable `{name}`")));
                };
                let mut exp = 1u32;
                if self.peek() == Some('^') {
                    self.chars.next();
                    self.skip_ws();
                    let column = self.column();
                    let digits = self.integer_digits();
                    if digits.is_empty() {
                        return Err(self.err("expected an exponent after `^`"));
                    }
                    exp = digits
                        .parse()
                        .map_err(|_| FormatError::new(self.line, column, "exponent out of range"))?;
                }
                exps[index] = exps[index]
                    .checked_add(exp)
                    .ok_or_else(|| FormatError::new(self.line, column, "exponent out of range"))?;
                Ok(())
            }
            Some(c) => Err(self.err(format!("unexpected `{c}`, expected a coefficient or variable"))),
            None => Err(self.err("unexpected end of line, expected a coefficient or variable")),
        }
    }

    fn term(&mut self, negative: bool, out: &mut Polynomial) -> Result<(), FormatError> {
        let mut coeff = if negative { self.field.neg(1) } else { 1 };
        let mut exps = vec![0u32; self.names.len()];
        self.factor(&mut coeff, &mut exps)?;
        while self.peek() == Some('*') {
            self.chars.next();
            self.factor(&mut coeff, &mut exps)?;
        }
        out.add_term(Monomial::new(exps), coeff);
        Ok(())
    }

    fn polynomial(&mut self) -> Result<Polynomial, FormatError> {
        let mut out = Polynomial::zero(self.names.len(), self.field);
        let mut negative = false;
        match self.peek() {
            Some('-') => {
                negative = true;
                self.chars.next();
            }
            Some('+') => {
                self.chars.next();
            }
            _ => {}
        }
        self.term(negative, &mut out)?;
        loop {
            match self.peek() {
                None => return Ok(out),
                Some(sign @ ('+' | '-')) => {
                    self.chars.next();
                    self.term(sign == '-', &mut out)?;
                }
                Some(c) => return Err(self.err(format!("unexpected `{c}`, expected `+`, `-` or `*`"))),
            }
        }
    }
}

/// Parses one polynomial; `line` is only used for error positions.
pub fn parse_polynomial(text: &str, names: &[String], field: PrimeField, line: usize) -> Result<Polynomial, FormatError> {
    let mut parser = Parser { chars: text.char_indices().peekable(), text, line, names, field };
    parser.polynomial()
}

struct Document {
    names: Vec<String>,
    field: PrimeField,
    degree: Option<u32>,
    generators: Vec<(usize, Polynomial)>,
}

fn parse_document(text: &str, prime_override: Option<u64>) -> Result<Document, FormatError> {
    let mut names: Option<Vec<String>> = None;
    let mut prime: Option<(usize, u64)> = None;
    let mut degree: Option<u32> = None;
    let mut lines: Vec<(usize, &str)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        if let Some((key, value)) = content.split_once(':') {
            if !lines.is_empty() {
                return Err(FormatError::new(line_no, 1, "header lines must precede the generators"));
            }
            let value_col = key.chars().count() + 2;
            match key.trim() {
                "vars" => {
                    let list: Vec<String> = value.split_whitespace().map(str::to_owned).collect();
                    if list.is_empty() {
                        return Err(FormatError::new(line_no, value_col, "no variables declared"));
                    }
                    for (i, n) in list.iter().enumerate() {
                        if !valid_name(n) {
                            return Err(FormatError::new(line_no, value_col, format!("invalid variable name `{n}`")));
                        }
                        if list[..i].contains(n) {
                            return Err(FormatError::new(line_no, value_col, format!("duplicate variable `{n}`")));
                        }
                    }
                    names = Some(list);
                }
                "prime" => {
                    let p = value
                        .trim()
                        .parse()
                        .map_err(|_| FormatError::new(line_no, value_col, "prime must be an integer"))?;
                    prime = Some((line_no, p));
                }
                "degree" => {
                    let t = value
                        .trim()
                        .parse()
                        .map_err(|_| FormatError::new(line_no, value_col, "degree must be an integer"))?;
                    degree = Some(t);
                }
                other => {
                    return Err(FormatError::new(line_no, 1, format!("unknown header `{other}`")));
                }
            }
            continue;
        }
        lines.push((line_no, content));
    }
    let names = names.ok_or_else(|| FormatError::new(1, 1, "missing `vars:` header"))?;
    let (prime_line, file_prime) = prime.unwrap_or((1, DEFAULT_PRIME));
    let p = prime_override.unwrap_or(file_prime);
    let field = PrimeField::new(p).map_err(|e| FormatError::new(prime_line, 1, e.to_string()))?;
    let mut generators = Vec::with_capacity(lines.len());
    for (line_no, content) in lines {
        let poly = parse_polynomial(content, &names, field, line_no)?;
        if poly.is_zero() {
            return Err(FormatError::new(line_no, 1, format!("generator vanishes modulo {p}")));
        }
        match poly.homogeneous_degree() {
            None => return Err(FormatError::new(line_no, 1, "generator is not homogeneous")),
            Some(0) => return Err(FormatError::new(line_no, 1, "generator is a nonzero constant")),
            Some(_) => {}
        }
        generators.push((line_no, poly));
    }
    Ok(Document { names, field, degree, generators })
}

/// Parses an algebra file. `prime_override` replaces the `prime:` header.
pub fn parse_algebra(text: &str, prime_override: Option<u64>) -> Result<PresentedAlgebra, FormatError> {
    let doc = parse_document(text, prime_override)?;
    let generators = doc.generators.into_iter().map(|(_, p)| p).collect();
    PresentedAlgebra::new(doc.field, doc.names, generators).map_err(|e| FormatError::new(1, 1, e.to_string()))
}

/// Parses an ideal file, which additionally needs a `degree:` header that
/// every generator must match.
pub fn parse_ideal(text: &str, prime_override: Option<u64>) -> Result<EquigeneratedIdeal, FormatError> {
    let doc = parse_document(text, prime_override)?;
    let t = doc.degree.ok_or_else(|| FormatError::new(1, 1, "missing `degree:` header"))?;
    if doc.generators.is_empty() {
        return Err(FormatError::new(1, 1, "an ideal needs at least one generator"));
    }
    for (line_no, g) in &doc.generators {
        let found = g.homogeneous_degree().expect("validated");
        if found != t {
            return Err(FormatError::new(*line_no, 1, format!("generator has degree {found}, header says {t}")));
        }
    }
    let generators = doc.generators.into_iter().map(|(_, p)| p).collect();
    EquigeneratedIdeal::new(doc.field, doc.names, t, generators).map_err(|e| FormatError::new(1, 1, e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_simple_algebra() {
        let a = parse_algebra("vars: x y\nprime: 7\nx*y", None).unwrap();
        assert_eq!(a.nvars(), 2);
        assert_eq!(a.field().modulus(), 7);
        assert_eq!(a.generators().len(), 1);
        assert_eq!(a.generators()[0].format_with(a.names()), "x*y");
    }

    #[test]
    fn negative_coefficients_reduce() {
        let a = parse_algebra("vars: x y\nprime: 32003\n3*x^2 - y^2", None).unwrap();
        let g = &a.generators()[0];
        assert_eq!(g.len(), 2);
        assert_eq!(g.coefficient(&Monomial::new(vec![2, 0])), 3);
        assert_eq!(g.coefficient(&Monomial::new(vec![0, 2])), 32002);
        assert_eq!(g.format_with(a.names()), "3*x^2 + 32002*y^2");
    }

    #[test]
    fn rejects_non_homogeneous() {
        let err = parse_algebra("vars: x\nprime: 7\nx + x^2", None).unwrap_err();
        assert_eq!(err.line, 3);
        assert!(err.message.contains("not homogeneous"));
    }

    #[test]
    fn reports_positions() {
        let err = parse_algebra("vars: x y\nprime: 7\nx*y + z", None).unwrap_err();
        assert_eq!((err.line, err.column), (3, 7));
        assert!(err.message.contains("unknown variable `z`"));
        let err = parse_algebra("vars: x y\nprime: 7\nx*^2", None).unwrap_err();
        assert_eq!((err.line, err.column), (3, 3));
        let err = parse_algebra("vars: x y\nprime: 7\nx y", None).unwrap_err();
        assert_eq!((err.line, err.column), (3, 3));
        let err = parse_algebra("vars: x\nprime: 8\nx", None).unwrap_err();
        assert_eq!(err.line, 2);
    }

    #[test]
    fn headers_comments_and_overrides() {
        let text = "# ring\nvars: a b_2\nprime: 7\n\n  2 * a ^ 2 * b_2 - 3*b_2^3   # cubic\n";
        let a = parse_algebra(text, Some(5)).unwrap();
        assert_eq!(a.field().modulus(), 5);
        assert_eq!(a.generators()[0].format_with(a.names()), "2*a^2*b_2 + 2*b_2^3");
        assert!(parse_algebra("prime: 7\nx", None).is_err());
        assert!(parse_algebra("vars: x 1y\nprime: 7\n", None).is_err());
        assert!(parse_algebra("vars: x\nprime: 7\nx\nprime: 5", None).is_err());
        assert!(parse_algebra("vars: x\nprime: 7\n7*x", None).is_err());
        assert!(parse_algebra("vars: x\nprime: 7\n3", None).is_err());
    }

    #[test]
    fn ideal_degree_header() {
        let text = "vars: x y\nprime: 32003\ndegree: 2\nx^2\nx*y\ny^2\n";
        let ideal = parse_ideal(text, None).unwrap();
        assert_eq!(ideal.degree(), 2);
        assert_eq!(ideal.generators().len(), 3);
        assert!(parse_ideal("vars: x y\nprime: 7\nx^2", None).is_err());
        let err = parse_ideal("vars: x y\nprime: 7\ndegree: 2\nx^2\ny", None).unwrap_err();
        assert_eq!(err.line, 5);
    }
}
