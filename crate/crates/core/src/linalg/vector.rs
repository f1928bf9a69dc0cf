use crate::arith::{Field, Scalar};
use crate::error::{Error, Result};

/// Coordinate vector; every entry lives in the same field.
pub type Vector = Vec<Scalar>;

pub fn zero_vector(field: Field, n: usize) -> Vector {
    vec![field.zero(); n]
}

pub fn unit_vector(field: Field, n: usize, i: usize) -> Vector {
    let mut v = zero_vector(field, n);
    v[i] = field.one();
    v
}

pub fn is_zero(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn add(u: &[Scalar], v: &[Scalar]) -> Vector {
    u.iter().zip(v).map(|(a, b)| a + b).collect()
}

pub fn sub(u: &[Scalar], v: &[Scalar]) -> Vector {
    u.iter().zip(v).map(|(a, b)| a - b).collect()
}

pub fn scale(c: &Scalar, v: &[Scalar]) -> Vector {
    v.iter().map(|a| c * a).collect()
}

/// `u += c * v`
pub fn axpy(u: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (a, b) in u.iter_mut().zip(v) {
        if !b.is_zero() {
            *a = &*a + &(c * b);
        }
    }
}

pub(crate) fn check_len(expected: usize, v: &[Scalar]) -> Result<()> {
    if v.len() == expected {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            expected,
            got: v.len(),
        })
    }
}

pub(crate) fn check_field(field: Field, v: &[Scalar]) -> Result<()> {
    match v.iter().find(|s| s.field() != field) {
        Some(s) => Err(Error::FieldMismatch {
            left: field,
            right: s.field(),
        }),
        None => Ok(()),
    }
}

/// Scalar texts separated by commas or whitespace, e.g. `1,0,-1/2` or `1 0 -1/2`.
pub fn parse_vector(field: Field, text: &str) -> Result<Vector> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| field.parse(s))
        .collect()
}

pub fn format_vector(v: &[Scalar]) -> String {
    v.iter().map(Scalar::to_string).collect::<Vec<_>>().join(",")
}
