//! Univariate polynomials as coefficient slices in ascending degree order
//! (`coeffs[k]` multiplies `t^k`).

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Field, Scalar};
use crate::error::{Error, Result};

/// Horner evaluation.
pub fn eval(coeffs: &[Scalar], at: &Scalar) -> Scalar {
    let mut acc = at.field().zero();
    for c in coeffs.iter().rev() {
        acc = &(&acc * at) + c;
    }
    acc
}

fn common_field(coeffs: &[Scalar]) -> Result<Field> {
    let field = coeffs.first().ok_or(Error::ZeroPolynomial)?.field();
    for c in coeffs {
        if c.field() != field {
            return Err(Error::FieldMismatch {
                left: field,
                right: c.field(),
            });
        }
    }
    Ok(field)
}

/// All roots of the polynomial lying in its coefficient field, sorted and
/// without repetition.
///
/// Over GF(p) every residue is tried. Over the rationals the polynomial is
/// scaled to integer coefficients and the rational-root theorem bounds the
/// candidates to `±a/b` with `a | c_low` and `b | c_high`.
pub fn roots_in_field(coeffs: &[Scalar]) -> Result<Vec<Scalar>> {
    let field = common_field(coeffs)?;
    if coeffs.iter().all(Scalar::is_zero) {
        return Err(Error::ZeroPolynomial);
    }
    let mut roots = match field.elements() {
        Some(elements) => elements.filter(|x| eval(coeffs, x).is_zero()).collect(),
        None => rational_roots(coeffs),
    };
    roots.sort();
    roots.dedup();
    Ok(roots)
}

fn rational_roots(coeffs: &[Scalar]) -> Vec<Scalar> {
    let rationals: Vec<&BigRational> = coeffs
        .iter()
        .map(|c| c.as_rational().expect("rational coefficients"))
        .collect();
    let lcm = rationals
        .iter()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let ints: Vec<BigInt> = rationals
        .iter()
        .map(|r| (*r * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();

    let high = ints.iter().rposition(|c| !c.is_zero()).expect("nonzero polynomial");
    let low = ints.iter().position(|c| !c.is_zero()).expect("nonzero polynomial");
    let mut roots = Vec::new();
    if low > 0 {
        roots.push(Field::Q.zero());
    }
    if high == low {
        return roots;
    }
    let numerators = divisors(&ints[low].abs());
    let denominators = divisors(&ints[high].abs());
    for a in &numerators {
        for b in &denominators {
            for candidate in [
                BigRational::new(a.clone(), b.clone()),
                BigRational::new(-a.clone(), b.clone()),
            ] {
                let x = Scalar::from_rational(candidate);
                if eval(coeffs, &x).is_zero() {
                    roots.push(x);
                }
            }
        }
    }
    roots
}

/// Positive divisors by trial division.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let mut rest = n.clone();
    let mut d = BigInt::from(2);
    while &d * &d <= rest {
        let mut e = 0;
        while (&rest % &d).is_zero() {
            rest /= &d;
            e += 1;
        }
        if e > 0 {
            primes.push((d.clone(), e));
        }
        d += 1;
    }
    if rest > BigInt::one() {
        primes.push((rest, 1));
    }
    let mut out = vec![BigInt::one()];
    for (p, e) in primes {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for base in &out {
            let mut power = base.clone();
            next.push(power.clone());
            for _ in 0..e {
                power *= &p;
                next.push(power.clone());
            }
        }
        out = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(field: Field, cs: &[i64]) -> Vec<Scalar> {
        cs.iter().map(|&c| field.from_i64(c)).collect()
    }

    #[test]
    fn difference_of_squares() {
        let roots = roots_in_field(&poly(Field::Q, &[-1, 0, 1])).unwrap();
        assert_eq!(roots, poly(Field::Q, &[-1, 1]));
    }

    #[test]
    fn no_rational_root_of_two() {
        assert!(roots_in_field(&poly(Field::Q, &[-2, 0, 1])).unwrap().is_empty());
    }

    #[test]
    fn minus_one_is_a_square_mod_five() {
        // 2^2 = 4 = -1 and 3^2 = 9 = -1 mod 5, found by trying all residues.
        let f5 = Field::prime(5).unwrap();
        assert_eq!(roots_in_field(&poly(f5, &[1, 0, 1])).unwrap(), poly(f5, &[2, 3]));
    }

    #[test]
    fn fractional_and_zero_roots() {
        // 6t^3 - 5t^2 + t = t(2t - 1)(3t - 1)
        let roots = roots_in_field(&poly(Field::Q, &[0, 1, -5, 6])).unwrap();
        let expect: Vec<Scalar> = ["0", "1/3", "1/2"]
            .iter()
            .map(|s| Field::Q.parse(s).unwrap())
            .collect();
        assert_eq!(roots, expect);
        // non-integer coefficients: t^2 - 1/4
        let half = roots_in_field(&[Field::Q.parse("-1/4").unwrap(), Field::Q.zero(), Field::Q.one()]).unwrap();
        assert_eq!(half.len(), 2);
    }

    #[test]
    fn zero_polynomial_is_an_error() {
        assert_eq!(roots_in_field(&poly(Field::Q, &[0, 0])), Err(Error::ZeroPolynomial));
        assert_eq!(roots_in_field(&[]), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn divisor_lists() {
        let mut d: Vec<i64> = divisors(&BigInt::from(12))
            .iter()
            .map(|x| i64::try_from(x).unwrap())
            .collect();
        d.sort();
        assert_eq!(d, vec![1, 2, 3, 4, 6, 12]);
    }
}
