use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest modulus accepted for prime fields.
pub const MAX_PRIME: u64 = 1 << 31;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Kind {
    Rationals,
    Prime(u32),
}

/// The ground field: either the rationals or a prime field GF(p).
///
/// Prime fields can only be built through [`Field::prime`], which checks
/// primality, so a `Field` value is always a valid field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Field(Kind);

impl Field {
    pub const Q: Field = Field(Kind::Rationals);

    pub fn rationals() -> Field {
        Field::Q
    }

    pub fn prime(p: u64) -> Result<Field> {
        if !(2..=MAX_PRIME).contains(&p) || !is_prime(p) {
            return Err(Error::InvalidPrime(p));
        }
        Ok(Field(Kind::Prime(p as u32)))
    }

    /// The characteristic `p` for prime fields, `None` for the rationals.
    pub fn modulus(self) -> Option<u32> {
        match self.0 {
            Kind::Rationals => None,
            Kind::Prime(p) => Some(p),
        }
    }

    pub fn is_finite(self) -> bool {
        self.modulus().is_some()
    }

    pub fn characteristic(self) -> u32 {
        self.modulus().unwrap_or(0)
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, value: i64) -> Scalar {
        match self.0 {
            Kind::Rationals => Scalar(Repr::Rational(BigRational::from_integer(value.into()))),
            Kind::Prime(p) => Scalar(Repr::Residue {
                value: value.rem_euclid(p as i64) as u32,
                modulus: p,
            }),
        }
    }

    pub fn from_bigint(self, value: &BigInt) -> Scalar {
        match self.0 {
            Kind::Rationals => Scalar(Repr::Rational(BigRational::from_integer(value.clone()))),
            Kind::Prime(p) => {
                let r = value.mod_floor(&BigInt::from(p));
                Scalar(Repr::Residue {
                    value: r.to_u32().expect("residue below modulus"),
                    modulus: p,
                })
            }
        }
    }

    /// The residue `k` in GF(p); panics on the rationals.
    pub fn residue(self, k: u32) -> Scalar {
        let p = self.modulus().expect("residue() on the rationals");
        Scalar(Repr::Residue {
            value: k % p,
            modulus: p,
        })
    }

    /// All elements of a finite field in increasing residue order.
    pub fn elements(self) -> Option<impl Iterator<Item = Scalar>> {
        let p = self.modulus()?;
        Some((0..p).map(move |k| Scalar(Repr::Residue { value: k, modulus: p })))
    }

    /// Parses `"n"`, `"-n"` or `"n/d"`; over GF(p) the result is reduced mod p.
    pub fn parse(self, text: &str) -> Result<Scalar> {
        let text = text.trim();
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (text, None),
        };
        let parse_int = |s: &str| -> Result<BigInt> {
            let digits = s.strip_prefix('+').unwrap_or(s);
            if digits.is_empty() || !digits.trim_start_matches('-').bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::Malformed(format!("not a scalar: `{text}`")));
            }
            digits
                .parse::<BigInt>()
                .map_err(|_| Error::Malformed(format!("not a scalar: `{text}`")))
        };
        let n = self.from_bigint(&parse_int(num)?);
        match den {
            None => Ok(n),
            Some(d) => n.checked_div(&self.from_bigint(&parse_int(d)?)),
        }
    }

    /// Parses a field name as used on the command line: `q`, `gf5`, `GF(5)`.
    pub fn parse_name(name: &str) -> Result<Field> {
        let lower = name.trim().to_ascii_lowercase();
        if lower == "q" || lower == "rationals" {
            return Ok(Field::Q);
        }
        let digits = lower
            .strip_prefix("gf")
            .map(|s| s.trim_start_matches('(').trim_end_matches(')'))
            .ok_or_else(|| Error::Malformed(format!("unknown field `{name}`")))?;
        let p: u64 = digits
            .parse()
            .map_err(|_| Error::Malformed(format!("unknown field `{name}`")))?;
        Field::prime(p)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Kind::Rationals => write!(f, "Q"),
            Kind::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Repr {
    Rational(BigRational),
    Residue { value: u32, modulus: u32 },
}

/// An exact field element tagged with its field.
///
/// Rationals are kept in lowest terms and residues in `[0, p)`, so
/// structural equality is field equality. The operator impls panic on a
/// field mismatch; the `checked_*` methods report it as an error.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar(Repr);

impl Scalar {
    pub fn field(&self) -> Field {
        match self.0 {
            Repr::Rational(_) => Field::Q,
            Repr::Residue { modulus, .. } => Field(Kind::Prime(modulus)),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Rational(r) => r.is_zero(),
            Repr::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Repr::Rational(r) => r.is_one(),
            Repr::Residue { value, .. } => *value == 1,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.0 {
            Repr::Rational(r) => Some(r),
            Repr::Residue { .. } => None,
        }
    }

    pub fn as_residue(&self) -> Option<u32> {
        match self.0 {
            Repr::Rational(_) => None,
            Repr::Residue { value, .. } => Some(value),
        }
    }

    pub fn from_rational(r: BigRational) -> Scalar {
        Scalar(Repr::Rational(r))
    }

    fn same_field(&self, other: &Scalar) -> Result<()> {
        if self.field() == other.field() {
            Ok(())
        } else {
            Err(Error::FieldMismatch {
                left: self.field(),
                right: other.field(),
            })
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        Ok(match (&self.0, &other.0) {
            (Repr::Rational(a), Repr::Rational(b)) => Scalar(Repr::Rational(a + b)),
            (Repr::Residue { value: a, modulus }, Repr::Residue { value: b, .. }) => {
                let s = (*a as u64 + *b as u64) % *modulus as u64;
                Scalar(Repr::Residue {
                    value: s as u32,
                    modulus: *modulus,
                })
            }
            _ => unreachable!(),
        })
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        Ok(match (&self.0, &other.0) {
            (Repr::Rational(a), Repr::Rational(b)) => Scalar(Repr::Rational(a * b)),
            (Repr::Residue { value: a, modulus }, Repr::Residue { value: b, .. }) => {
                let s = (*a as u64 * *b as u64) % *modulus as u64;
                Scalar(Repr::Residue {
                    value: s as u32,
                    modulus: *modulus,
                })
            }
            _ => unreachable!(),
        })
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        self.checked_mul(&other.inv()?)
    }

    pub fn neg(&self) -> Scalar {
        match &self.0 {
            Repr::Rational(a) => Scalar(Repr::Rational(-a)),
            Repr::Residue { value, modulus } => Scalar(Repr::Residue {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            }),
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match &self.0 {
            Repr::Rational(a) => Scalar(Repr::Rational(a.recip())),
            Repr::Residue { value, modulus } => Scalar(Repr::Residue {
                value: pow_mod(*value as u64, *modulus as u64 - 2, *modulus as u64) as u32,
                modulus: *modulus,
            }),
        })
    }

    pub fn pow(&self, mut exp: u32) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Rational(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Repr::Rational(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Repr::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

impl serde::Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl serde::Serialize for Field {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Rationals order by value, residues by their representative in `[0, p)`.
impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Rational(a), Repr::Rational(b)) => a.cmp(b),
            (Repr::Residue { value: a, modulus: p }, Repr::Residue { value: b, modulus: q }) => {
                p.cmp(q).then(a.cmp(b))
            }
            _ => self.field().cmp(&other.field()),
        }
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);
binop!(Div, div, checked_div);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(self)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(&self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(text: &str) -> Scalar {
        Field::Q.parse(text).unwrap()
    }

    #[test]
    fn fraction_addition() {
        assert_eq!(&q("1/2") + &q("1/3"), q("5/6"));
        assert_eq!(q("2/4").to_string(), "1/2");
        assert_eq!(q("-6/3").to_string(), "-2");
        assert_eq!(q("3/-6").to_string(), "-1/2");
    }

    #[test]
    fn prime_field_inverse() {
        let f5 = Field::prime(5).unwrap();
        assert_eq!(f5.from_i64(3).inv().unwrap(), f5.from_i64(2));
        assert_eq!(f5.parse("-1").unwrap().to_string(), "4");
        assert_eq!(f5.parse("1/2").unwrap().to_string(), "3");
    }

    #[test]
    fn errors() {
        let f5 = Field::prime(5).unwrap();
        assert_eq!(f5.zero().inv(), Err(Error::DivisionByZero));
        assert_eq!(Field::Q.parse("1/0"), Err(Error::DivisionByZero));
        assert!(matches!(
            f5.one().checked_add(&Field::Q.one()),
            Err(Error::FieldMismatch { .. })
        ));
        assert!(Field::prime(4).is_err());
        assert!(Field::prime(1).is_err());
        assert!(Field::Q.parse("x").is_err());
        assert!(Field::Q.parse("").is_err());
        assert!(Field::Q.parse("1/").is_err());
    }

    #[test]
    fn field_names() {
        assert_eq!(Field::parse_name("q").unwrap(), Field::Q);
        assert_eq!(Field::parse_name("gf3").unwrap(), Field::prime(3).unwrap());
        assert_eq!(Field::parse_name("GF(7)").unwrap(), Field::prime(7).unwrap());
        assert!(Field::parse_name("gf9").is_err());
        assert_eq!(Field::prime(5).unwrap().to_string(), "GF(5)");
    }

    #[test]
    fn pow_and_order() {
        let f7 = Field::prime(7).unwrap();
        assert_eq!(f7.from_i64(3).pow(6), f7.one());
        assert!(q("-1/2") < q("1/3"));
        assert!(f7.from_i64(2) < f7.from_i64(5));
    }
}
