//! Enumeration of all subspaces of `GF(q)^n` in canonical order.
//!
//! Each subspace is produced once, directly as its RREF basis: for every
//! pivot set the free entries (right of a row's pivot and outside the other
//! pivot columns) run through all `q`-ary words. Order is by dimension,
//! then pivot set (lexicographic), then entries row-major; this coincides
//! with `Ord for Subspace`.

use crate::arith::{Field, Scalar};
use crate::error::{Error, Result};
use crate::linalg::{Subspace, Vector};

use super::Budget;

/// Number of `k`-dimensional subspaces of `GF(q)^n`, saturating at `u128::MAX`.
pub fn gaussian_binomial(n: usize, k: usize, q: u64) -> u128 {
    if k > n {
        return 0;
    }
    let q = q as u128;
    let pow = |e: usize| -> Option<u128> { q.checked_pow(e as u32) };
    let mut r: u128 = 1;
    for j in 0..k {
        // r_{j+1} = r_j (q^{n-j} - 1) / (q^{j+1} - 1), each r_j an integer
        let (Some(a), Some(b)) = (pow(n - j), pow(j + 1)) else {
            return u128::MAX;
        };
        let Some(num) = r.checked_mul(a - 1) else {
            return u128::MAX;
        };
        r = num / (b - 1);
    }
    r
}

/// Total number of subspaces of `GF(q)^n` whose dimension passes the filter.
pub fn subspace_count(n: usize, q: u64, dim: Option<usize>) -> u128 {
    match dim {
        Some(k) => gaussian_binomial(n, k, q),
        None => (0..=n).fold(0u128, |acc, k| acc.saturating_add(gaussian_binomial(n, k, q))),
    }
}

/// Lazy canonical-order stream of subspaces.
pub struct SubspaceIter {
    field: Field,
    q: u32,
    n: usize,
    dims: Vec<usize>,
    dim_pos: usize,
    pivots: Vec<usize>,
    free: Vec<(usize, usize)>,
    digits: Vec<u32>,
    done: bool,
}

impl SubspaceIter {
    fn new(field: Field, n: usize, dims: Vec<usize>) -> Result<Self> {
        let q = field.modulus().ok_or(Error::FieldNotFinite(field))?;
        let mut it = SubspaceIter {
            field,
            q,
            n,
            dims,
            dim_pos: 0,
            pivots: Vec::new(),
            free: Vec::new(),
            digits: Vec::new(),
            done: false,
        };
        if it.dims.is_empty() {
            it.done = true;
        } else {
            it.start_dim();
        }
        Ok(it)
    }

    fn start_dim(&mut self) {
        let k = self.dims[self.dim_pos];
        self.pivots = (0..k).collect();
        self.reset_free();
    }

    fn reset_free(&mut self) {
        let k = self.pivots.len();
        let mut is_pivot = vec![false; self.n];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        self.free.clear();
        for r in 0..k {
            for c in self.pivots[r] + 1..self.n {
                if !is_pivot[c] {
                    self.free.push((r, c));
                }
            }
        }
        self.digits = vec![0; self.free.len()];
    }

    /// Next pivot combination of the same size in lexicographic order.
    fn next_pivots(&mut self) -> bool {
        let k = self.pivots.len();
        let n = self.n;
        for i in (0..k).rev() {
            if self.pivots[i] < n - k + i {
                self.pivots[i] += 1;
                for j in i + 1..k {
                    self.pivots[j] = self.pivots[j - 1] + 1;
                }
                return true;
            }
        }
        false
    }

    fn current(&self) -> Subspace {
        let k = self.pivots.len();
        let mut rows: Vec<Vector> = vec![vec![self.field.zero(); self.n]; k];
        for (r, &p) in self.pivots.iter().enumerate() {
            rows[r][p] = self.field.one();
        }
        for (&(r, c), &d) in self.free.iter().zip(&self.digits) {
            if d != 0 {
                rows[r][c] = self.field.residue(d);
            }
        }
        Subspace::from_rref_unchecked(self.field, self.n, rows, self.pivots.clone())
    }

    fn advance(&mut self) {
        for d in self.digits.iter_mut().rev() {
            *d += 1;
            if *d < self.q {
                return;
            }
            *d = 0;
        }
        if self.next_pivots() {
            self.reset_free();
            return;
        }
        self.dim_pos += 1;
        if self.dim_pos == self.dims.len() {
            self.done = true;
        } else {
            self.start_dim();
        }
    }
}

impl Iterator for SubspaceIter {
    type Item = Subspace;

    fn next(&mut self) -> Option<Subspace> {
        if self.done {
            return None;
        }
        let out = self.current();
        self.advance();
        Some(out)
    }
}

/// Every subspace of `field^n` (optionally of one dimension) once, in
/// canonical order. Fails up front when the count exceeds the budget.
pub fn subspaces(field: Field, n: usize, dim: Option<usize>, budget: Budget) -> Result<SubspaceIter> {
    let q = field.modulus().ok_or(Error::FieldNotFinite(field))?;
    budget.check(subspace_count(n, q as u64, dim))?;
    let dims = match dim {
        Some(k) if k > n => Vec::new(),
        Some(k) => vec![k],
        None => (0..=n).collect(),
    };
    SubspaceIter::new(field, n, dims)
}

/// Projective points of `field^n`: one normalized vector per line.
pub fn projective_points(field: Field, n: usize, budget: Budget) -> Result<impl Iterator<Item = Vector>> {
    Ok(subspaces(field, n, Some(1), budget)?.map(|s| s.basis_rows().next().expect("line").to_vec()))
}

/// All vectors of `field^n` as `q`-ary counters; used by the complement search.
pub(crate) fn all_words(field: Field, len: usize) -> impl Iterator<Item = Vec<Scalar>> {
    let q = field.modulus().expect("finite field");
    let total = (q as u128).checked_pow(len as u32).unwrap_or(u128::MAX);
    (0..total).map(move |mut idx| {
        let mut w = vec![field.zero(); len];
        for slot in w.iter_mut().rev() {
            *slot = field.residue((idx % q as u128) as u32);
            idx /= q as u128;
        }
        w
    })
}
