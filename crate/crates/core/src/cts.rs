//! The Catalan's triangle system
//!
//! ```text
//! x_{n+1,k+1} = sum_{j=k}^{n} x_{n,j}      (n >= 1, 1 <= k <= n)
//! ```
//!
//! is determined by its first column `b_n = x_{n,1}`. Two independent
//! solvers are provided: the forward recurrence, and the closed form
//! `x_{n,m} = sum_{h=0}^{n-m} C_{m-1}(h, h+m-2) b_{n-m-h+1}` whose
//! coefficients are Catalan trapezoid entries. Both are generic over the
//! scalar [`Ring`].

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::Ring;
use crate::report::Check;
use crate::trapezoid::{catalan_number, catalan_triangle, trapezoid_entry};

/// First-column data `b_1, ..., b_N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundarySequence<R> {
    entries: Vec<R>,
}

impl<R: Ring> BoundarySequence<R> {
    pub fn new(entries: Vec<R>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::domain("boundary sequence must be nonempty"));
        }
        Ok(BoundarySequence { entries })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `b_n`, 1-based.
    pub fn get(&self, n: usize) -> &R {
        &self.entries[n - 1]
    }

    pub fn entries(&self) -> &[R] {
        &self.entries
    }

    /// The first `depth` entries; never padded.
    pub fn prefix(&self, depth: usize) -> Result<Self> {
        if depth > self.entries.len() {
            return Err(Error::BoundaryTooShort {
                len: self.entries.len(),
                depth,
            });
        }
        Self::new(self.entries[..depth].to_vec())
    }

    pub fn zip_with(&self, other: &Self, f: impl Fn(&R, &R) -> R) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        Self::new(
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| f(a, b))
                .collect(),
        )
    }

    pub fn map(&self, f: impl Fn(&R) -> R) -> Self {
        BoundarySequence {
            entries: self.entries.iter().map(f).collect(),
        }
    }
}

/// Ragged table `x_{n,m}`, `1 <= m <= n <= N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleTable<R> {
    rows: Vec<Vec<R>>,
}

impl<R: Ring> TriangleTable<R> {
    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        for (i, row) in rows.iter().enumerate() {
            if row.len() != i + 1 {
                return Err(Error::DimensionMismatch {
                    expected: i + 1,
                    found: row.len(),
                });
            }
        }
        Ok(TriangleTable { rows })
    }

    pub fn depth(&self) -> usize {
        self.rows.len()
    }

    /// `x_{n,m}`, 1-based.
    pub fn get(&self, n: usize, m: usize) -> &R {
        &self.rows[n - 1][m - 1]
    }

    pub fn rows(&self) -> &[Vec<R>] {
        &self.rows
    }

    pub fn map<S>(&self, f: impl Fn(&R) -> S) -> TriangleTable<S> {
        TriangleTable {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(&f).collect())
                .collect(),
        }
    }

    /// `(n, m, x_{n,m})` in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &R)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().enumerate().map(move |(j, x)| (i + 1, j + 1, x)))
    }

    /// First `(n, m)` where the two tables differ, including a depth
    /// mismatch (reported at the first missing row).
    pub fn first_mismatch(&self, other: &Self) -> Option<(usize, usize)> {
        if let Some((n, m, _)) = self
            .entries()
            .zip(other.entries())
            .find(|((_, _, a), (_, _, b))| a != b)
            .map(|(a, _)| a)
        {
            return Some((n, m));
        }
        (self.depth() != other.depth()).then(|| (self.depth().min(other.depth()) + 1, 1))
    }

    /// First `(n+1, k+1)` at which `x_{n+1,k+1} = sum_{j=k}^{n} x_{n,j}`
    /// fails.
    pub fn recurrence_violation(&self) -> Option<(usize, usize)> {
        for n in 1..self.depth() {
            let mut suffix = R::zero();
            for k in (1..=n).rev() {
                suffix = suffix + self.get(n, k).clone();
                if *self.get(n + 1, k + 1) != suffix {
                    return Some((n + 1, k + 1));
                }
            }
        }
        None
    }
}

/// Forward evaluation of the system row by row.
pub fn solve_recurrence<R: Ring>(b: &BoundarySequence<R>) -> TriangleTable<R> {
    let mut rows: Vec<Vec<R>> = Vec::with_capacity(b.len());
    rows.push(vec![b.get(1).clone()]);
    for n in 1..b.len() {
        let prev = &rows[n - 1];
        let mut row = vec![R::zero(); n + 1];
        row[0] = b.get(n + 1).clone();
        // row[k] = x_{n+1,k+1} = prev[k-1] + ... + prev[n-1]
        let mut suffix = R::zero();
        for k in (1..=n).rev() {
            suffix = suffix + prev[k - 1].clone();
            row[k] = suffix.clone();
        }
        rows.push(row);
    }
    TriangleTable { rows }
}

/// Closed-form evaluation through Catalan trapezoid coefficients.
pub fn solve_closed_form<R: Ring>(b: &BoundarySequence<R>) -> TriangleTable<R> {
    let depth = b.len();
    // coeff[m][h] = C_{m-1}(h, h+m-2) for m >= 2
    let coeff: Vec<Vec<R>> = (0..=depth)
        .map(|m| {
            if m < 2 {
                return Vec::new();
            }
            let order = (m - 1) as u64;
            (0..=depth - m)
                .map(|h| R::from(trapezoid_entry(order, h as u64, (h + m - 2) as u64)))
                .collect()
        })
        .collect();
    let rows = (1..=depth)
        .map(|n| {
            (1..=n)
                .map(|m| {
                    if m == 1 {
                        return b.get(n).clone();
                    }
                    (0..=n - m).fold(R::zero(), |acc, h| {
                        acc + coeff[m][h].clone() * b.get(n - m - h + 1).clone()
                    })
                })
                .collect()
        })
        .collect();
    TriangleTable { rows }
}

/// Runs both solvers and compares them entry by entry.
pub fn check_equivalence<R: Ring>(b: &BoundarySequence<R>) -> Check {
    let mut check = Check::new("cts.recurrence_vs_closed_form");
    let rec = solve_recurrence(b);
    let closed = solve_closed_form(b);
    let mismatch = rec.first_mismatch(&closed);
    check.case(mismatch.is_none(), || {
        let (n, m) = mismatch.expect("mismatch present");
        format!(
            "x_({n},{m}): recurrence {:?} vs closed form {:?}",
            rec.get(n, m),
            closed.get(n, m)
        )
    });
    check
}

/// The system under `b_1 = 1`, `b_n = C_{n-1}`; every entry must equal
/// `C(n-1, n-m)`.
pub fn catalan_boundary_table(depth: usize) -> Result<TriangleTable<BigInt>> {
    if depth == 0 {
        return Err(Error::domain("table depth must be at least 1"));
    }
    let b = BoundarySequence::new(
        (1..=depth)
            .map(|n| {
                if n == 1 {
                    BigInt::one()
                } else {
                    catalan_number(n as u64 - 1)
                }
            })
            .collect(),
    )?;
    let table = solve_closed_form(&b);
    for (n, m, x) in table.entries() {
        let want = catalan_triangle(n as u64 - 1, (n - m) as i64)?;
        if *x != want {
            return Err(Error::Verification(format!(
                "catalan boundary table x_({n},{m}) = {x}, expected {want}"
            )));
        }
    }
    Ok(table)
}

/// `x_{n,2} = sum_{k=0}^{n-2} C_k b_{n-k-1}` for `n >= 3`.
pub fn second_column<R: Ring>(b: &BoundarySequence<R>, n: usize) -> R {
    (0..=n - 2).fold(R::zero(), |acc, k| {
        acc + R::from(catalan_number(k as u64)) * b.get(n - k - 1).clone()
    })
}

/// `x_{n,3} = sum_{h=0}^{n-3} C_2(h, h+1) b_{n-h-2}` for `n >= 3`.
pub fn third_column<R: Ring>(b: &BoundarySequence<R>, n: usize) -> R {
    (0..=n - 3).fold(R::zero(), |acc, h| {
        acc + R::from(trapezoid_entry(2, h as u64, h as u64 + 1)) * b.get(n - h - 2).clone()
    })
}

impl<R: Ring> TriangleTable<R> {
    pub fn is_zero(&self) -> bool {
        self.rows.iter().flatten().all(Zero::is_zero)
    }
}
