//! Arithmetic on residues modulo a prime `p < 2^32`.

use crate::error::{Error, Result};

pub const DEFAULT_PRIME: u64 = 32003;

/// The prime field GF(p). Elements are plain `u64` residues in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut f = 2u64;
    while f * f <= n {
        if n.is_multiple_of(f) {
            return false;
        }
        f += 1;
    }
    true
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p >= 1 << 32 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Self { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Reduces a signed integer into `[0, p)`.
    pub fn reduce(&self, v: i128) -> u64 {
        v.rem_euclid(self.p as i128) as u64
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.p;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Inverse via the extended Euclidean algorithm.
    pub fn inv(&self, a: u64) -> Result<u64> {
        let a = a % self.p;
        if a == 0 {
            return Err(Error::DivisionByZero(self.p));
        }
        let (mut r0, mut r1) = (self.p as i64, a as i64);
        let (mut s0, mut s1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        Ok(self.reduce(s0 as i128))
    }

    /// `a / b`.
    pub fn div(&self, a: u64, b: u64) -> Result<u64> {
        Ok(self.mul(a, self.inv(b)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_field() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.inv(3).unwrap(), 5);
        assert_eq!(f.add(6, 3), 2);
        assert_eq!(f.sub(2, 6), 3);
        assert_eq!(f.neg(0), 0);
        assert_eq!(f.reduce(-1), 6);
        assert_eq!(f.inv(0), Err(Error::DivisionByZero(7)));
        let two = PrimeField::new(2).unwrap();
        assert_eq!(two.inv(1).unwrap(), 1);
    }

    #[test]
    fn inverses_agree_with_fermat() {
        let f = PrimeField::new(DEFAULT_PRIME).unwrap();
        for a in 1..2000 {
            let inv = f.inv(a).unwrap();
            assert_eq!(inv, f.pow(a, DEFAULT_PRIME - 2));
            assert_eq!(f.mul(a, inv), 1);
        }
    }

    #[test]
    fn rejects_composites() {
        for n in [0, 1, 4, 9, 32001, 1 << 32] {
            assert!(PrimeField::new(n).is_err(), "{n}");
        }
        assert!(PrimeField::new(4294967291).is_ok());
    }
}
