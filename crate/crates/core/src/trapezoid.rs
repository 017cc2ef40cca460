//! Catalan numbers, the Catalan triangle `C(n,k)`, the alternative triangle
//! `B(n,k) = (k/n) binom(2n, n-k)`, and Catalan trapezoids `C_m(n,k)`.
//!
//! `C_m(n,k)` counts strings of `n` X's and `k` Y's in which every prefix
//! keeps `#Y - #X <= m - 1`. [`trapezoid`] evaluates the closed form;
//! [`ballot_count_oracle`] counts the strings one by one.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactalg::binomial;
use crate::report::Check;

/// Largest `n + k` the brute-force oracle will enumerate.
pub const ORACLE_MAX_LEN: usize = 24;

pub fn catalan_number(n: u64) -> BigInt {
    binomial(2 * n, n as i64) / BigInt::from(n + 1)
}

/// `C(n,k)` for `0 <= k <= n`.
pub fn catalan_triangle(n: u64, k: i64) -> Result<BigInt> {
    if k < 0 || k as u64 > n {
        return Err(Error::domain(format!(
            "catalan_triangle needs 0 <= k <= n, got n={n} k={k}"
        )));
    }
    let k = k as u64;
    Ok(binomial(n + k, k as i64) * BigInt::from(n + 1 - k) / BigInt::from(n + 1))
}

/// `B(n,k) = (k/n) binom(2n, n-k)` for `1 <= k <= n`.
pub fn shapiro_triangle(n: u64, k: i64) -> Result<BigInt> {
    if n == 0 || k < 1 || k as u64 > n {
        return Err(Error::domain(format!(
            "shapiro_triangle needs 1 <= k <= n, got n={n} k={k}"
        )));
    }
    Ok(binomial(2 * n, n as i64 - k) * BigInt::from(k) / BigInt::from(n))
}

/// Parameters `(m, n, k)` of a trapezoid entry `C_m(n,k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TrapezoidQuery {
    order: u64,
    n: u64,
    k: u64,
}

impl TrapezoidQuery {
    pub fn new(order: u64, n: u64, k: u64) -> Result<Self> {
        if order == 0 {
            return Err(Error::domain("trapezoid order must be at least 1"));
        }
        Ok(TrapezoidQuery { order, n, k })
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    /// Largest `k` with a (possibly) nonzero entry in row `n`.
    pub fn row_width(order: u64, n: u64) -> u64 {
        n + order - 1
    }
}

pub fn trapezoid(query: TrapezoidQuery) -> BigInt {
    trapezoid_entry(query.order, query.n, query.k)
}

/// Closed form of `C_m(n,k)` including the zero convention for `k > n+m-1`.
/// Panics if `m == 0`; use [`TrapezoidQuery`] for checked input.
pub fn trapezoid_entry(m: u64, n: u64, k: u64) -> BigInt {
    assert!(m >= 1, "trapezoid order must be at least 1");
    if k > n + m - 1 {
        BigInt::zero()
    } else if k < m {
        binomial(n + k, k as i64)
    } else {
        binomial(n + k, k as i64) - binomial(n + k, (k - m) as i64)
    }
}

/// Counts X/Y strings with `n` X's and `k` Y's whose every prefix satisfies
/// `#Y - #X <= m - 1`, by walking all `binom(n+k, k)` arrangements.
pub fn ballot_count_oracle(query: TrapezoidQuery) -> Result<BigInt> {
    let len = (query.n + query.k) as usize;
    Error::guard("n + k", len, ORACLE_MAX_LEN)?;
    let k = query.k as u32;
    let limit = query.order as i64 - 1;

    let admissible = |mask: u32| {
        let mut excess = 0i64;
        for pos in 0..len {
            excess += if mask >> pos & 1 == 1 { 1 } else { -1 };
            if excess > limit {
                return false;
            }
        }
        true
    };

    if k == 0 {
        return Ok(BigInt::from(1));
    }
    // Gosper's hack: every `len`-bit mask with exactly `k` bits set, a set
    // bit marking a Y
    let end = 1u64 << len;
    let mut mask: u64 = (1u64 << k) - 1;
    let mut count = 0u64;
    while mask < end {
        if admissible(mask as u32) {
            count += 1;
        }
        let low = mask & mask.wrapping_neg();
        let ripple = mask + low;
        mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
    Ok(BigInt::from(count))
}

/// Checks the three trapezoid identity families over `m <= max_m`,
/// `k <= max_k` (the first family runs over `n <= max_k`):
///
/// * `C_1(n+1,n+1) = C_1(n+1,n) = C_{n+1} = C_2(n,n+1)`
/// * `C_m(k,k+m-1) + C_{m-2}(k+1,k+m-2) = C_{m-1}(k+1,k+m-1)` for `m >= 3`
/// * `sum_{j=0}^{k} C_{j+m-1}(k-j,k+m-2) = C_m(k,k+m-1)` for `m >= 2`
pub fn verify_trapezoid_identities(max_m: u64, max_k: u64) -> Result<Vec<Check>> {
    if max_m < 3 || max_k < 1 {
        return Err(Error::domain(
            "identity check needs max_m >= 3 and max_k >= 1",
        ));
    }
    let c = trapezoid_entry;

    let mut diagonal = Check::new("trapezoid.catalan_diagonal");
    for n in 0..=max_k {
        let values = [
            c(1, n + 1, n + 1),
            c(1, n + 1, n),
            catalan_number(n + 1),
            c(2, n, n + 1),
        ];
        diagonal.case(values.iter().all(|v| *v == values[0]), || {
            format!("n={n}: {values:?}")
        });
    }

    let mut order_step = Check::new("trapezoid.order_step");
    for m in 3..=max_m {
        for k in 0..=max_k {
            let lhs = c(m, k, k + m - 1) + c(m - 2, k + 1, k + m - 2);
            let rhs = c(m - 1, k + 1, k + m - 1);
            order_step.case(lhs == rhs, || format!("m={m} k={k}: {lhs} != {rhs}"));
        }
    }

    let mut convolution = Check::new("trapezoid.order_convolution");
    for m in 2..=max_m {
        for k in 0..=max_k {
            let lhs: BigInt = (0..=k).map(|j| c(j + m - 1, k - j, k + m - 2)).sum();
            let rhs = c(m, k, k + m - 1);
            convolution.case(lhs == rhs, || format!("m={m} k={k}: {lhs} != {rhs}"));
        }
    }

    Ok(vec![diagonal, order_step, convolution])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(m: u64, n: u64, k: u64) -> TrapezoidQuery {
        TrapezoidQuery::new(m, n, k).unwrap()
    }

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn catalan_numbers() {
        assert_eq!(catalan_number(0), big(1));
        assert_eq!(catalan_number(3), big(5));
        assert_eq!(catalan_number(6), big(132));
    }

    #[test]
    fn catalan_triangle_examples() {
        for n in 0..=10 {
            assert_eq!(catalan_triangle(n, 0).unwrap(), big(1));
            assert_eq!(catalan_triangle(n, n as i64).unwrap(), catalan_number(n));
        }
        assert_eq!(catalan_triangle(3, 2).unwrap(), big(5));
        assert!(catalan_triangle(3, 4).is_err());
        assert!(catalan_triangle(3, -1).is_err());
    }

    #[test]
    fn catalan_triangle_row_sums() {
        for n in 1..=9u64 {
            for k in 0..n {
                let sum: BigInt = (0..=k)
                    .map(|h| catalan_triangle(n - 1, h as i64).unwrap())
                    .sum();
                assert_eq!(sum, catalan_triangle(n, k as i64).unwrap(), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn shapiro_examples() {
        assert_eq!(shapiro_triangle(1, 1).unwrap(), big(1));
        assert_eq!(shapiro_triangle(2, 1).unwrap(), big(2));
        for n in 1..=8 {
            assert_eq!(shapiro_triangle(n, n as i64).unwrap(), big(1));
        }
        assert!(shapiro_triangle(3, 0).is_err());
        assert!(shapiro_triangle(0, 0).is_err());
        assert!(shapiro_triangle(2, 3).is_err());
    }

    #[test]
    fn trapezoid_examples() {
        for m in 1..=5 {
            for h in 0..m {
                assert_eq!(trapezoid(q(m, 0, h)), big(1));
            }
        }
        assert_eq!(trapezoid(q(2, 2, 3)), catalan_number(3));
        assert_eq!(trapezoid(q(1, 1, 3)), big(0));
        assert_eq!(trapezoid(q(3, 1, 3)), big(3));
        assert!(TrapezoidQuery::new(0, 1, 1).is_err());
    }

    #[test]
    fn order_one_is_catalan_triangle() {
        for n in 0..=10u64 {
            for k in 0..=n {
                assert_eq!(
                    trapezoid(q(1, n, k)),
                    catalan_triangle(n, k as i64).unwrap()
                );
            }
        }
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(ballot_count_oracle(q(1, 1, 1)).unwrap(), big(1));
        assert_eq!(ballot_count_oracle(q(2, 1, 2)).unwrap(), big(2));
        for m in 1..=4 {
            for n in 0..=6 {
                assert_eq!(ballot_count_oracle(q(m, n, 0)).unwrap(), big(1));
            }
        }
        assert!(matches!(
            ballot_count_oracle(q(1, 13, 12)),
            Err(Error::SizeGuard { .. })
        ));
    }

    #[test]
    fn oracle_matches_closed_form() {
        for m in 1..=4 {
            for n in 0..=8 {
                for k in 0..=n + m - 1 {
                    let query = q(m, n, k);
                    assert_eq!(
                        trapezoid(query),
                        ballot_count_oracle(query).unwrap(),
                        "m={m} n={n} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn identity_examples() {
        // m=3, k=1: 3 + 2 = 5
        assert_eq!(trapezoid_entry(3, 1, 3), big(3));
        assert_eq!(trapezoid_entry(1, 2, 2), big(2));
        assert_eq!(trapezoid_entry(2, 2, 3), big(5));
        // m=2, k=2: 2 + 2 + 1 = 5
        let terms: Vec<BigInt> = (0..=2).map(|j| trapezoid_entry(j + 1, 2 - j, 2)).collect();
        assert_eq!(terms, vec![big(2), big(2), big(1)]);
        // m=2, k=0: single term
        assert_eq!(trapezoid_entry(1, 0, 0), trapezoid_entry(2, 0, 1));
    }

    #[test]
    fn identity_families_hold() {
        let checks = verify_trapezoid_identities(5, 8).unwrap();
        for c in &checks {
            assert!(c.passed(), "{c}");
        }
        assert!(verify_trapezoid_identities(2, 8).is_err());
    }
}
