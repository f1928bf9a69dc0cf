//! Named algebras.
//!
//! A name is `atom(+atom)*` with `atom := ident[(int)]`; `+` is the direct
//! sum, e.g. `heisenberg(3)+abelian(1)`.

use crate::arith::{roots_in_field, Field};
use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{vector, Vector};

/// Every name the parser accepts, with its parameter convention.
pub const FAMILIES: &[(&str, &str)] = &[
    ("abelian(n)", "n-dimensional abelian"),
    ("nonabelian2", "[x,y] = y"),
    ("heisenberg(n)", "n = 2k+1 >= 3; [x_i,y_i] = z; default 3"),
    ("almost_abelian(n)", "n >= 2; [x,y_i] = y_i"),
    ("sl2", "[e,f] = h, [e,h] = -2e, [f,h] = 2f; not over GF(2)"),
    ("upper_triangular(n)", "upper triangular n x n matrices"),
    ("strictly_upper(n)", "strictly upper triangular n x n matrices"),
    ("nonsplit3", "x acting on F^2 without eigenvalues"),
    ("filiform(n)", "n >= 3; [e1,e_i] = e_{i+1}"),
];

/// The standard catalog instances.
pub const CATALOG: &[&str] = &[
    "abelian(1)",
    "abelian(2)",
    "abelian(3)",
    "abelian(4)",
    "nonabelian2",
    "heisenberg(3)",
    "almost_abelian(3)",
    "almost_abelian(4)",
    "sl2",
    "upper_triangular(2)",
    "strictly_upper(2)",
    "strictly_upper(3)",
    "nonsplit3",
    "filiform(4)",
    "heisenberg(3)+abelian(1)",
    "abelian(1)+nonabelian2",
    "nonabelian2+nonabelian2",
    "nonabelian2+abelian(2)",
    "sl2+abelian(1)",
    "nonsplit3+abelian(1)",
    "heisenberg(5)",
    "upper_triangular(3)",
    "strictly_upper(4)",
];

/// Catalog instances that exist over `field` and have dimension at most
/// `max_dim`, as `(name, algebra)`.
pub fn catalog(field: Field, max_dim: usize) -> Vec<(String, LieAlgebra)> {
    CATALOG
        .iter()
        .filter_map(|name| builtin(name, field).ok().map(|l| (name.to_string(), l)))
        .filter(|(_, l)| l.dim() <= max_dim)
        .collect()
}

pub fn builtin(name: &str, field: Field) -> Result<LieAlgebra> {
    let mut parts = name.split('+');
    let first = atom(parts.next().expect("split yields one part").trim(), field)?;
    parts.try_fold(first, |acc, p| acc.direct_sum(&atom(p.trim(), field)?))
}

fn atom(text: &str, field: Field) -> Result<LieAlgebra> {
    let (ident, param) = match text.find('(') {
        Some(open) => {
            let inner = text[open + 1..]
                .strip_suffix(')')
                .ok_or_else(|| Error::UnknownName(text.to_string()))?;
            let k: usize = inner
                .trim()
                .parse()
                .map_err(|_| Error::BadParams(format!("`{inner}` in `{text}` is not a count")))?;
            (&text[..open], Some(k))
        }
        None => (text, None),
    };
    let need = |default: Option<usize>| {
        param
            .or(default)
            .ok_or_else(|| Error::BadParams(format!("`{ident}` needs a parameter")))
    };
    let forbid = || match param {
        Some(_) => Err(Error::BadParams(format!("`{ident}` takes no parameter"))),
        None => Ok(()),
    };
    match ident {
        "abelian" => Ok(LieAlgebra::abelian(field, need(None)?)),
        "nonabelian2" => {
            forbid()?;
            almost_abelian(field, 2)
        }
        "heisenberg" => heisenberg(field, need(Some(3))?),
        "almost_abelian" => almost_abelian(field, need(None)?),
        "sl2" => {
            forbid()?;
            sl2(field)
        }
        "upper_triangular" => matrices(field, need(None)?, false),
        "strictly_upper" => matrices(field, need(None)?, true),
        "nonsplit3" => {
            forbid()?;
            nonsplit3(field)
        }
        "filiform" => filiform(field, need(None)?),
        _ => Err(Error::UnknownName(text.to_string())),
    }
}

fn names(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

fn combo(field: Field, n: usize, terms: &[(usize, i64)]) -> Vector {
    let mut v = vector::zero_vector(field, n);
    for &(k, c) in terms {
        v[k] = &v[k] + &field.from_i64(c);
    }
    v
}

fn heisenberg(field: Field, n: usize) -> Result<LieAlgebra> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::BadParams(format!("heisenberg({n}) needs an odd dimension >= 3")));
    }
    let k = (n - 1) / 2;
    let labels: Vec<String> = if k == 1 {
        names(&["x", "y", "z"])
    } else {
        (1..=k)
            .map(|i| format!("x{i}"))
            .chain((1..=k).map(|i| format!("y{i}")))
            .chain(["z".to_string()])
            .collect()
    };
    let brackets: Vec<_> = (0..k).map(|i| (i, i + k, combo(field, n, &[(n - 1, 1)]))).collect();
    LieAlgebra::from_brackets(field, labels, &brackets)
}

fn almost_abelian(field: Field, n: usize) -> Result<LieAlgebra> {
    if n < 2 {
        return Err(Error::BadParams(format!("almost_abelian({n}) needs dimension >= 2")));
    }
    let labels: Vec<String> = if n == 2 {
        names(&["x", "y"])
    } else {
        ["x".to_string()].into_iter().chain((1..n).map(|i| format!("y{i}"))).collect()
    };
    let brackets: Vec<_> = (1..n).map(|i| (0, i, combo(field, n, &[(i, 1)]))).collect();
    LieAlgebra::from_brackets(field, labels, &brackets)
}

fn sl2(field: Field) -> Result<LieAlgebra> {
    if field.characteristic() == 2 {
        return Err(Error::BadParams("sl2 is not simple in characteristic 2".into()));
    }
    let brackets = [
        (0, 1, combo(field, 3, &[(2, 1)])),
        (0, 2, combo(field, 3, &[(0, -2)])),
        (1, 2, combo(field, 3, &[(1, 2)])),
    ];
    LieAlgebra::from_brackets(field, names(&["e", "f", "h"]), &brackets)
}

/// `t(n)` or `n(n)` on the matrix units `E_ij`, named `e{i}{j}` (1-based).
pub(crate) fn matrices(field: Field, n: usize, strict: bool) -> Result<LieAlgebra> {
    if n == 0 {
        return Err(Error::BadParams("matrix size must be positive".into()));
    }
    let units: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i..n).map(move |j| (i, j)))
        .filter(|&(i, j)| !strict || i < j)
        .collect();
    let index = |p: (usize, usize)| units.iter().position(|&u| u == p);
    let dim = units.len();
    let mut brackets = Vec::new();
    for a in 0..dim {
        for b in a + 1..dim {
            let ((i, j), (k, l)) = (units[a], units[b]);
            // [E_ij, E_kl] = δ_jk E_il − δ_li E_kj
            let mut v = vector::zero_vector(field, dim);
            if j == k {
                let t = index((i, l)).expect("closed");
                v[t] = &v[t] + &field.one();
            }
            if l == i {
                let t = index((k, j)).expect("closed");
                v[t] = &v[t] - &field.one();
            }
            if !vector::is_zero(&v) {
                brackets.push((a, b, v));
            }
        }
    }
    let labels = units.iter().map(|(i, j)| format!("e{}{}", i + 1, j + 1)).collect();
    LieAlgebra::from_brackets(field, labels, &brackets)
}

/// `[x, y1] = y2`, `[x, y2] = c·y1` with `t² − c` irreducible (for
/// characteristic 2, `[x, y2] = y1 + y2` from `t² + t + 1`).
fn nonsplit3(field: Field) -> Result<LieAlgebra> {
    let (c, a) = if field.characteristic() == 2 {
        (field.one(), field.one())
    } else if field.is_finite() {
        let c = field
            .elements()
            .expect("finite")
            .find(|c| {
                let poly = [c.neg(), field.zero(), field.one()];
                !c.is_zero() && roots_in_field(&poly).expect("monic").is_empty()
            })
            .expect("odd primes have non-squares");
        (c, field.zero())
    } else {
        (field.from_i64(-1), field.zero())
    };
    let mut y2 = vector::zero_vector(field, 3);
    y2[1] = c;
    y2[2] = a;
    let brackets = [(0, 1, combo(field, 3, &[(2, 1)])), (0, 2, y2)];
    LieAlgebra::from_brackets(field, names(&["x", "y1", "y2"]), &brackets)
}

fn filiform(field: Field, n: usize) -> Result<LieAlgebra> {
    if n < 3 {
        return Err(Error::BadParams(format!("filiform({n}) needs dimension >= 3")));
    }
    let labels = (1..=n).map(|i| format!("e{i}")).collect();
    let brackets: Vec<_> = (1..n - 1).map(|i| (0, i, combo(field, n, &[(i + 1, 1)]))).collect();
    LieAlgebra::from_brackets(field, labels, &brackets)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Scalar;
    use crate::structure;

    #[test]
    fn abelian_has_no_brackets() {
        let a = builtin("abelian(3)", Field::Q).unwrap();
        assert!(a.nonzero_brackets().is_empty());
        assert_eq!(a.dim(), 3);
    }

    #[test]
    fn almost_abelian_brackets() {
        let l = builtin("almost_abelian(3)", Field::Q).unwrap();
        assert_eq!(l.basis_bracket(0, 1), l.unit(1));
        assert_eq!(l.basis_bracket(0, 2), l.unit(2));
        assert!(l.basis_bracket(1, 2).iter().all(Scalar::is_zero));
    }

    #[test]
    fn sl2_over_five() {
        let s = builtin("sl2", Field::prime(5).unwrap()).unwrap();
        assert!(s.validate().is_empty());
        assert_eq!(s.dim(), 3);
        assert!(s.derived_algebra().is_full());
        assert!(matches!(builtin("sl2", Field::prime(2).unwrap()), Err(Error::BadParams(_))));
    }

    #[test]
    fn heisenberg_golden() {
        let h = builtin("heisenberg(3)", Field::Q).unwrap();
        assert_eq!(h.derived_algebra().dim(), 1);
        assert_eq!(h.lower_central_series().terms.len() - 1, 2);
        let h5 = builtin("heisenberg(5)", Field::Q).unwrap();
        assert_eq!(h5.centre().dim(), 1);
        assert!(matches!(builtin("heisenberg(4)", Field::Q), Err(Error::BadParams(_))));
    }

    #[test]
    fn names_and_errors() {
        assert!(matches!(builtin("nope", Field::Q), Err(Error::UnknownName(_))));
        assert!(matches!(builtin("abelian", Field::Q), Err(Error::BadParams(_))));
        assert!(matches!(builtin("sl2(3)", Field::Q), Err(Error::BadParams(_))));
        let s = builtin("heisenberg+abelian(1)", Field::Q).unwrap();
        assert_eq!(s.dim(), 4);
    }

    #[test]
    fn every_instance_validates() {
        for f in [Field::Q, Field::prime(2).unwrap(), Field::prime(3).unwrap(), Field::prime(5).unwrap()] {
            for (name, l) in catalog(f, usize::MAX) {
                assert!(l.validate().is_empty(), "{name} over {f}");
            }
        }
    }

    #[test]
    fn families_have_expected_shape() {
        let t = builtin("upper_triangular(3)", Field::Q).unwrap();
        assert_eq!(t.dim(), 6);
        assert!(structure::is_solvable(&t) && !structure::is_nilpotent(&t));
        let n = builtin("strictly_upper(4)", Field::Q).unwrap();
        assert!(structure::is_nilpotent(&n));
        let f = builtin("filiform(4)", Field::Q).unwrap();
        assert_eq!(f.lower_central_series().dims(), vec![4, 2, 1, 0]);
        for p in [2u64, 3, 5] {
            let g = builtin("nonsplit3", Field::prime(p).unwrap()).unwrap();
            assert!(crate::lattice::one_dim_ideals(&g).is_empty());
        }
    }
}
