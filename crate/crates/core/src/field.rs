//! Exact scalars over the rationals or a prime field.
//!
//! Every scalar in the workbench is either an arbitrary-precision rational
//! or a residue in `[0, p)` for a prime `p`. There is no floating point
//! anywhere; equality of scalars is structural because both forms are kept
//! canonical (lowest-terms fractions with positive denominator, reduced
//! residues).

use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The ground field of an algebra: `ℚ` or `𝔽_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FieldSpec {
    Rationals,
    Prime { p: u64 },
}

impl FieldSpec {
    pub fn rationals() -> Self {
        FieldSpec::Rationals
    }

    /// A prime field; rejects composite or trivial moduli.
    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NonPrime(p));
        }
        Ok(FieldSpec::Prime { p })
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, FieldSpec::Rationals)
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::zero()),
            FieldSpec::Prime { p } => Scalar::Fp { p: *p, val: 0 },
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::one()),
            FieldSpec::Prime { p } => Scalar::Fp { p: *p, val: 1 },
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::Prime { p } => {
                let m = n.rem_euclid(*p as i64) as u64;
                Scalar::Fp { p: *p, val: m }
            }
        }
    }

    /// Parses `"n"` or `"a/b"` into a canonical scalar of this field.
    pub fn parse(&self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        let (num_str, den_str) = match s.split_once('/') {
            Some((a, b)) => (a.trim(), Some(b.trim())),
            None => (s, None),
        };
        let numer: BigInt = num_str
            .parse()
            .map_err(|_| Error::Parse(format!("bad scalar {s:?}")))?;
        let denom: BigInt = match den_str {
            Some(d) => d
                .parse()
                .map_err(|_| Error::Parse(format!("bad scalar {s:?}")))?,
            None => BigInt::one(),
        };
        if denom.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        match self {
            FieldSpec::Rationals => Ok(Scalar::Rat(BigRational::new(numer, denom))),
            FieldSpec::Prime { p } => {
                let pb = BigInt::from(*p);
                let n = ((numer % &pb) + &pb) % &pb;
                let d = ((denom % &pb) + &pb) % &pb;
                let n: u64 = n.try_into().unwrap();
                let d: u64 = d.try_into().unwrap();
                let dinv = mod_inverse(d, *p)
                    .ok_or_else(|| Error::Parse(format!("{s:?} has denominator 0 mod {p}")))?;
                Ok(Scalar::Fp {
                    p: *p,
                    val: mod_mul(n, dinv, *p),
                })
            }
        }
    }
}

/// A canonical field element. Rational values are always in lowest terms
/// with positive denominator; prime-field values always lie in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Fp { p: u64, val: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rat(_) => FieldSpec::Rationals,
            Scalar::Fp { p, .. } => FieldSpec::Prime { p: *p },
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Fp { val, .. } => *val == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Fp { val, .. } => *val == 1,
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Fp { p, val: a }, Scalar::Fp { p: q, val: b }) => {
                assert_eq!(p, q, "scalar field mismatch");
                Scalar::Fp {
                    p: *p,
                    val: (a + b) % p,
                }
            }
            _ => panic!("scalar field mismatch"),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Fp { p, val: a }, Scalar::Fp { p: q, val: b }) => {
                assert_eq!(p, q, "scalar field mismatch");
                Scalar::Fp {
                    p: *p,
                    val: mod_mul(*a, *b, *p),
                }
            }
            _ => panic!("scalar field mismatch"),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Fp { p, val } => Scalar::Fp {
                p: *p,
                val: if *val == 0 { 0 } else { p - val },
            },
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Rat(a) => {
                if a.is_zero() {
                    None
                } else {
                    Some(Scalar::Rat(a.recip()))
                }
            }
            Scalar::Fp { p, val } => mod_inverse(*val, *p).map(|v| Scalar::Fp { p: *p, val: v }),
        }
    }

    pub fn div(&self, other: &Scalar) -> Scalar {
        self.mul(&other.inv().expect("division by zero"))
    }

    /// Numerator/denominator magnitude, used only to rank pivot candidates.
    pub fn complexity(&self) -> usize {
        match self {
            Scalar::Rat(r) => r.numer().bits() as usize + r.denom().bits() as usize,
            Scalar::Fp { .. } => 1,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fp { val, .. } => write!(f, "{val}"),
        }
    }
}

fn is_prime(n: u64) -> bool {
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

fn mod_mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn mod_inverse(a: u64, p: u64) -> Option<u64> {
    if a % p == 0 {
        return None;
    }
    // extended Euclid on (a, p)
    let (mut r0, mut r1) = (a as i128 % p as i128, p as i128);
    let (mut s0, mut s1) = (1i128, 0i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert_eq!(r0, 1);
    Some(s0.rem_euclid(p as i128) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_parse_canonical() {
        let q = FieldSpec::Rationals;
        let a = q.parse("4/6").unwrap();
        let b = q.parse("2/3").unwrap();
        assert_eq!(a, b);
        let c = q.parse("-1/-2").unwrap();
        assert_eq!(c, q.parse("1/2").unwrap());
        assert_eq!(format!("{}", q.parse("-7").unwrap()), "-7");
        assert_eq!(format!("{}", q.parse("3/9").unwrap()), "1/3");
    }

    #[test]
    fn prime_field_arithmetic() {
        let f5 = FieldSpec::prime(5).unwrap();
        let two = f5.from_i64(2);
        let three = f5.from_i64(3);
        assert!(two.add(&three).is_zero());
        assert_eq!(two.mul(&three), f5.one());
        assert_eq!(two.inv().unwrap(), three);
        assert_eq!(f5.from_i64(-1), f5.from_i64(4));
        assert_eq!(f5.parse("7/3").unwrap(), two.mul(&two));
    }

    #[test]
    fn rejects_composite_modulus() {
        assert!(FieldSpec::prime(6).is_err());
        assert!(FieldSpec::prime(1).is_err());
        assert!(FieldSpec::prime(2).is_ok());
    }

    #[test]
    fn zero_has_no_inverse() {
        assert!(FieldSpec::Rationals.zero().inv().is_none());
        assert!(FieldSpec::prime(7).unwrap().zero().inv().is_none());
    }
}
