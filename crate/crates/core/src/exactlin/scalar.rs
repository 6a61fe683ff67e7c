use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// An exact ground field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    pub fn prime(p: u64) -> Result<Field> {
        if p < 2 || p > u32::MAX as u64 || !(2..).take_while(|d| d * d <= p).all(|d| p % d != 0) {
            return Err(Error::Parse(format!("{p} is not a supported prime")));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(self) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::zero()),
            Field::Prime(p) => Scalar::Residue { v: 0, p },
        }
    }

    pub fn one(self) -> Scalar {
        self.int(1)
    }

    pub fn int(self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(n.into())),
            Field::Prime(p) => Scalar::Residue {
                v: n.rem_euclid(p as i64) as u64,
                p,
            },
        }
    }

    /// The image of a (possibly huge) integer, e.g. a binomial coefficient.
    pub fn big_int(self, n: &BigInt) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(n.clone())),
            Field::Prime(p) => {
                let r = n.mod_floor(&BigInt::from(p));
                Scalar::Residue {
                    v: r.to_u64().unwrap(),
                    p,
                }
            }
        }
    }

    /// `Fp:p` or `Q`.
    pub fn parse(text: &str) -> Result<Field> {
        let t = text.trim();
        if t == "Q" {
            return Ok(Field::Rational);
        }
        let digits = t
            .strip_prefix("Fp:")
            .or_else(|| t.strip_prefix('F'))
            .ok_or_else(|| Error::Parse(format!("unknown field {t:?}")))?;
        let p = digits
            .parse::<u64>()
            .map_err(|_| Error::Parse(format!("unknown field {t:?}")))?;
        Field::prime(p)
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }

    pub fn parse_scalar(self, text: &str) -> Result<Scalar> {
        let t = text.trim();
        match self {
            Field::Rational => {
                if t.contains("mod") {
                    return Err(Error::FieldMismatch(format!("{t:?} is a residue, field is Q")));
                }
                let q = BigRational::from_str(t)
                    .map_err(|_| Error::Parse(format!("bad rational {t:?}")))?;
                Ok(Scalar::Rational(q))
            }
            Field::Prime(p) => {
                let (num, modulus) = match t.split_once("mod") {
                    Some((n, m)) => (n.trim(), Some(m.trim())),
                    None => (t, None),
                };
                if let Some(m) = modulus {
                    if m.parse::<u64>().ok() != Some(p) {
                        return Err(Error::FieldMismatch(format!("{t:?} is not mod {p}")));
                    }
                }
                let n = BigInt::from_str(num).map_err(|_| Error::Parse(format!("bad residue {t:?}")))?;
                Ok(self.big_int(&n))
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "Fp:{p}"),
        }
    }
}

/// An exact scalar: a rational number or a residue modulo a prime.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue { v: u64, p: u64 },
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Residue { p, .. } => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Residue { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Residue { v, .. } => *v == 1,
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Residue { v: a, p }, Scalar::Residue { v: b, p: q }) if p == q => {
                Scalar::Residue { v: (a + b) % p, p: *p }
            }
            _ => panic!("mixed fields: {self} + {other}"),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Residue { v, p } => Scalar::Residue {
                v: (p - v) % p,
                p: *p,
            },
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Residue { v: a, p }, Scalar::Residue { v: b, p: q }) if p == q => {
                Scalar::Residue { v: a * b % p, p: *p }
            }
            _ => panic!("mixed fields: {self} * {other}"),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(a) => Scalar::Rational(a.recip()),
            Scalar::Residue { v, p } => Scalar::Residue {
                v: mod_pow(*v, p - 2, *p),
                p: *p,
            },
        })
    }

    pub fn div(&self, other: &Scalar) -> Option<Scalar> {
        other.inv().map(|i| self.mul(&i))
    }
}

impl fmt::Display for Scalar {
    /// Rationals as `3/4` (integers without a denominator), residues as
    /// `2 mod 5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    let sign = if q.is_negative() { "-" } else { "" };
                    write!(f, "{sign}{}/{}", q.numer().abs(), q.denom())
                }
            }
            Scalar::Residue { v, p } => write!(f, "{v} mod {p}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_round_trip() {
        let q = Field::Rational;
        for text in ["3/4", "-2", "0", "-7/3"] {
            assert_eq!(q.parse_scalar(text).unwrap().to_string(), text);
        }
        assert_eq!(q.parse_scalar("6/8").unwrap().to_string(), "3/4");
    }

    #[test]
    fn residues() {
        let f5 = Field::prime(5).unwrap();
        let two = f5.parse_scalar("2 mod 5").unwrap();
        assert_eq!(two.inv().unwrap(), f5.int(3));
        assert_eq!(f5.int(-1).to_string(), "4 mod 5");
        assert!(f5.parse_scalar("2 mod 7").is_err());
        assert!(Field::prime(4).is_err());
        assert_eq!(Field::parse("Fp:2").unwrap(), Field::Prime(2));
        assert_eq!(Field::parse("F2").unwrap(), Field::Prime(2));
    }
}
