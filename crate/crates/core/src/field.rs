//! Exact scalars: arbitrary-precision rationals or residues modulo a prime.

use crate::error::{EngineError, Result};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u64),
}

impl FieldSpec {
    pub fn prime_field(p: u64) -> Result<FieldSpec> {
        if !is_prime(p) {
            return Err(EngineError::Validation(format!("{p} is not prime")));
        }
        Ok(FieldSpec::PrimeField(p))
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Q(BigRational::zero()),
            FieldSpec::PrimeField(p) => Scalar::Fp { p: *p, v: 0 },
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Q(BigRational::one()),
            FieldSpec::PrimeField(p) => Scalar::Fp { p: *p, v: 1 },
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Q(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::PrimeField(p) => {
                let p = *p;
                let m = n.rem_euclid(p as i64) as u64;
                Scalar::Fp { p, v: m }
            }
        }
    }

    /// Parse "n" or "a/b"; in a prime field the fraction is evaluated via modular inverse.
    pub fn parse(&self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        let bad = || EngineError::Parse(format!("cannot read scalar {s:?}"));
        if let Some((a, b)) = s.split_once('/') {
            let num: i64 = a.trim().parse().map_err(|_| bad())?;
            let den: i64 = b.trim().parse().map_err(|_| bad())?;
            let den = self.from_i64(den);
            if den.is_zero() {
                return Err(EngineError::ZeroValue("denominator".into()));
            }
            Ok(self.from_i64(num).mul(&den.inv()?))
        } else {
            let n: i64 = s.parse().map_err(|_| bad())?;
            Ok(self.from_i64(n))
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub enum Scalar {
    Q(BigRational),
    Fp { p: u64, v: u64 },
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Q(_) => FieldSpec::Rationals,
            Scalar::Fp { p, .. } => FieldSpec::PrimeField(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_zero(),
            Scalar::Fp { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_one(),
            Scalar::Fp { v, .. } => *v == 1,
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::Fp { p, v: a }, Scalar::Fp { p: q, v: b }) => {
                assert_eq!(p, q, "mixed moduli");
                Scalar::Fp { p: *p, v: (a + b) % p }
            }
            _ => panic!("mixed scalar kinds"),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::Fp { p, v: a }, Scalar::Fp { p: q, v: b }) => {
                assert_eq!(p, q, "mixed moduli");
                Scalar::Fp { p: *p, v: mul_mod(*a, *b, *p) }
            }
            _ => panic!("mixed scalar kinds"),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Fp { p, v } => Scalar::Fp { p: *p, v: if *v == 0 { 0 } else { p - v } },
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(EngineError::ZeroValue("division by zero".into()));
        }
        Ok(match self {
            Scalar::Q(a) => Scalar::Q(a.recip()),
            Scalar::Fp { p, v } => Scalar::Fp { p: *p, v: pow_mod(*v, p - 2, *p) },
        })
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut acc = self.field().one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else if q.is_negative() && (-q).denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Fp { v, .. } => write!(f, "{v}"),
        }
    }
}

/// Enumerate the m-th roots of unity available in the field, in a fixed order.
/// Over the rationals this is {1} or {1, -1}; over F_p it is the cyclic subgroup
/// of order gcd(m, p-1), listed as consecutive powers of a canonical generator.
pub fn roots_of_unity(field: FieldSpec, m: u64) -> Vec<Scalar> {
    match field {
        FieldSpec::Rationals => {
            if m % 2 == 0 {
                vec![field.one(), field.from_i64(-1)]
            } else {
                vec![field.one()]
            }
        }
        FieldSpec::PrimeField(p) => {
            let d = gcd(m, p - 1);
            let g = primitive_root(p);
            let z = pow_mod(g, (p - 1) / d, p);
            let mut out = Vec::with_capacity(d as usize);
            let mut cur = 1u64;
            for _ in 0..d {
                out.push(Scalar::Fp { p, v: cur });
                cur = mul_mod(cur, z, p);
            }
            out
        }
    }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Smallest primitive root modulo the prime p (p < 2^31 keeps this cheap).
fn primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let mut factors = Vec::new();
    let mut n = p - 1;
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            factors.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        factors.push(n);
    }
    'outer: for g in 2..p {
        for f in &factors {
            if pow_mod(g, (p - 1) / f, p) == 1 {
                continue 'outer;
            }
        }
        return g;
    }
    unreachable!("every prime has a primitive root")
}

/// The multiplicative order of a nonzero scalar, if finite (always finite in F_p;
/// over Q only ±1 have finite order).
pub fn mult_order(s: &Scalar) -> Option<u64> {
    match s {
        Scalar::Q(_) => {
            if s.is_one() {
                Some(1)
            } else if s.neg().is_one() {
                Some(2)
            } else {
                None
            }
        }
        Scalar::Fp { p, v } => {
            if *v == 0 {
                return None;
            }
            let mut acc = *v;
            let mut k = 1;
            while acc != 1 {
                acc = mul_mod(acc, *v, *p);
                k += 1;
            }
            Some(k)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_parse_and_arith() {
        let f = FieldSpec::Rationals;
        let half = f.parse("1/2").unwrap();
        assert_eq!(half.add(&half), f.one());
        assert_eq!(half.mul(&f.from_i64(2)), f.one());
        assert_eq!(f.parse("-3").unwrap().neg(), f.from_i64(3));
    }

    #[test]
    fn prime_field_arith() {
        let f = FieldSpec::prime_field(13).unwrap();
        let a = f.from_i64(7);
        assert_eq!(a.mul(&a.inv().unwrap()), f.one());
        assert_eq!(f.from_i64(-1), f.from_i64(12));
        assert_eq!(f.parse("1/2").unwrap(), f.from_i64(7));
    }

    #[test]
    fn rejects_composite_modulus() {
        assert!(FieldSpec::prime_field(12).is_err());
        assert!(FieldSpec::prime_field(1).is_err());
    }

    #[test]
    fn roots_of_unity_orders() {
        let f13 = FieldSpec::prime_field(13).unwrap();
        let roots = roots_of_unity(f13, 12);
        assert_eq!(roots.len(), 12);
        for r in &roots {
            assert!(r.pow(12).is_one());
        }
        let roots4 = roots_of_unity(f13, 4);
        assert_eq!(roots4.len(), 4);
        assert_eq!(roots_of_unity(FieldSpec::Rationals, 12).len(), 2);
        assert_eq!(roots_of_unity(FieldSpec::Rationals, 3).len(), 1);
    }

    #[test]
    fn orders() {
        let f13 = FieldSpec::prime_field(13).unwrap();
        assert_eq!(mult_order(&f13.from_i64(2)), Some(12));
        assert_eq!(mult_order(&f13.from_i64(12)), Some(2));
        assert_eq!(mult_order(&FieldSpec::Rationals.from_i64(-1)), Some(2));
        assert_eq!(mult_order(&FieldSpec::Rationals.from_i64(2)), None);
    }
}
