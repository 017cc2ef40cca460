//! Named identity and invariant checks, grouped into the suites run by the
//! `verify` command. Every random input comes from a fixed seed, so a suite
//! produces the same report on every run.

use std::fmt;
use std::str::FromStr;
use std::thread;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use crate::cts::{
    catalan_boundary_table, check_equivalence, second_column, solve_closed_form, solve_recurrence,
    third_column, BoundarySequence, TriangleTable,
};
use crate::error::{Error, Result};
use crate::exactalg::{binomial, factorial, semifactorial, Poly};
use crate::fock::{
    stratum_polynomials, verify_cts_embedding, verify_sandwich, FockSpace, FockState, OperatorWord,
    TestVector,
};
use crate::partitions::{
    count_strata, enumerate_ncpp, enumerate_plus_signatures, enumerate_pp, enumerate_pp_eps,
    ncpp_counterpart, wick_moment, GramMatrix, Signature, WickMode,
};
use crate::report::{Check, Report};
use crate::sampling;
use crate::trapezoid::{
    ballot_count_oracle, catalan_number, catalan_triangle, shapiro_triangle, trapezoid,
    verify_trapezoid_identities, TrapezoidQuery,
};

type Q = BigRational;
type P = Poly<Q>;

fn q_int(n: impl Into<BigInt>) -> Q {
    Q::from_integer(n.into())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Trapezoid,
    Partitions,
    Cts,
    Fock,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Trapezoid => "trapezoid",
            Suite::Partitions => "partitions",
            Suite::Cts => "cts",
            Suite::Fock => "fock",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [
            Suite::Trapezoid,
            Suite::Partitions,
            Suite::Cts,
            Suite::Fock,
            Suite::All,
        ]
        .into_iter()
        .find(|suite| suite.name() == s)
        .ok_or_else(|| Error::parse(s, "expected trapezoid, partitions, cts, fock or all"))
    }
}

/// Caps every size bound of a suite at `max_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Bounds {
    max_n: Option<usize>,
}

impl Bounds {
    pub fn full() -> Self {
        Bounds { max_n: None }
    }

    pub fn capped(max_n: usize) -> Self {
        Bounds { max_n: Some(max_n) }
    }

    pub fn cap(&self, stated: usize) -> usize {
        self.max_n.map_or(stated, |m| stated.min(m))
    }
}

/// Runs one suite (or all of them, sharded across threads and merged in
/// fixed order).
pub fn run_suite(suite: Suite, bounds: Bounds) -> Result<Report> {
    match suite {
        Suite::Trapezoid => trapezoid_suite(bounds),
        Suite::Partitions => partitions_suite(bounds),
        Suite::Cts => cts_suite(bounds),
        Suite::Fock => fock_suite(bounds),
        Suite::All => {
            let jobs: [fn(Bounds) -> Result<Report>; 5] = [
                exactalg_suite,
                trapezoid_suite,
                partitions_suite,
                cts_suite,
                fock_suite,
            ];
            let results: Vec<Result<Report>> = thread::scope(|scope| {
                let handles: Vec<_> = jobs
                    .iter()
                    .map(|job| scope.spawn(move || job(bounds)))
                    .collect();
                handles
                    .into_iter()
                    .map(|h| h.join().expect("suite thread panicked"))
                    .collect()
            });
            let mut report = Report::default();
            for r in results {
                report.extend(r?);
            }
            Ok(report)
        }
    }
}

pub fn exactalg_suite(bounds: Bounds) -> Result<Report> {
    Ok(exactalg_laws(bounds.cap(30), 200, 1).into())
}

pub fn trapezoid_suite(bounds: Bounds) -> Result<Report> {
    let mut checks = vec![trapezoid_oracle(4, bounds.cap(8))?];
    checks.extend(verify_trapezoid_identities(5, bounds.cap(8).max(1) as u64)?);
    checks.extend(catalan_triangle_laws(bounds.cap(10))?);
    Ok(checks.into())
}

pub fn partitions_suite(bounds: Bounds) -> Result<Report> {
    let mut checks = partition_counts(bounds.cap(6), bounds.cap(7))?;
    checks.extend(fiber_law(bounds.cap(5))?);
    checks.push(wick_laws(bounds.cap(4), 2)?);
    Ok(checks.into())
}

pub fn cts_suite(bounds: Bounds) -> Result<Report> {
    let mut checks = vec![cts_equivalence(100, bounds.cap(10), 50, bounds.cap(8), 3)?];
    checks.extend(catalan_instance(bounds.cap(8))?);
    checks.extend(cts_laws(bounds.cap(10), 4)?);
    Ok(checks.into())
}

pub fn fock_suite(bounds: Bounds) -> Result<Report> {
    let mut checks = fock_polynomials(bounds.cap(5))?;
    checks.extend(fock_specializations(bounds.cap(6))?);
    checks.extend(operator_calculus(
        &OperatorBounds {
            adjoint_cases: 200,
            max_sector: bounds.cap(4),
            max_odd_len: 2 * bounds.cap(4) + 1,
            max_minus_n: bounds.cap(4),
            max_free_n: bounds.cap(4),
        },
        5,
    )?);
    Ok(checks.into())
}

/// Ring axioms and evaluation homomorphism on random polynomials, and
/// Pascal's rule for `n <= max_n`.
pub fn exactalg_laws(max_n: usize, cases: usize, seed: u64) -> Vec<Check> {
    let mut pascal = Check::new("exactalg.pascal_rule");
    for n in 1..=max_n as u64 {
        for k in 1..=n as i64 {
            let lhs = binomial(n, k);
            let rhs = binomial(n - 1, k - 1) + binomial(n - 1, k);
            pascal.case(lhs == rhs, || format!("n={n} k={k}"));
        }
    }
    let mut rng = sampling::rng(seed);
    let mut ring = Check::new("exactalg.ring_axioms");
    let mut eval = Check::new("exactalg.eval_homomorphism");
    for _ in 0..cases {
        let a = sampling::qpoly(&mut rng, 3);
        let b = sampling::qpoly(&mut rng, 3);
        let c = sampling::qpoly(&mut rng, 3);
        let ok = &(&a * &b) * &c == &a * &(&b * &c)
            && &a * &(&b + &c) == &(&a * &b) + &(&a * &c)
            && &a * &b == &b * &a
            && &a + &b == &b + &a
            && &(&a - &b) + &b == a;
        ring.case(ok, || format!("a={a} b={b} c={c}"));
        let x = sampling::rational(&mut rng);
        let ok = (&a * &b).eval(&x) == a.eval(&x) * b.eval(&x)
            && (&a + &b).eval(&x) == a.eval(&x) + b.eval(&x);
        eval.case(ok, || format!("a={a} b={b} x={x}"));
    }
    vec![pascal, ring, eval]
}

/// Closed form against the brute-force string count for every
/// `m <= max_m`, `n <= max_n`, `k <= n+m-1`.
pub fn trapezoid_oracle(max_m: u64, max_n: usize) -> Result<Check> {
    let mut check = Check::new("trapezoid.closed_form_vs_oracle");
    for m in 1..=max_m {
        for n in 0..=max_n as u64 {
            for k in 0..=TrapezoidQuery::row_width(m, n) {
                let query = TrapezoidQuery::new(m, n, k)?;
                let closed = trapezoid(query);
                let counted = ballot_count_oracle(query)?;
                check.case(closed == counted, || {
                    format!("m={m} n={n} k={k}: closed {closed} vs counted {counted}")
                });
            }
        }
    }
    Ok(check)
}

/// Row sums of the Catalan triangle, order one of the trapezoid, and the
/// first column of the alternative triangle.
pub fn catalan_triangle_laws(max_n: usize) -> Result<Vec<Check>> {
    let max_n = max_n as u64;
    let mut rows = Check::new("trapezoid.triangle_row_sums");
    let mut order_one = Check::new("trapezoid.order_one_is_triangle");
    let mut shapiro = Check::new("trapezoid.shapiro_first_column");
    for n in 1..=max_n {
        for k in 0..n {
            let sum: BigInt = (0..=k)
                .map(|h| catalan_triangle(n - 1, h as i64))
                .sum::<Result<BigInt>>()?;
            let want = catalan_triangle(n, k as i64)?;
            rows.case(sum == want, || format!("n={n} k={k}: {sum} != {want}"));
        }
        let b = shapiro_triangle(n, 1)?;
        shapiro.case(b == catalan_number(n), || format!("B({n},1) = {b}"));
    }
    for n in 0..=max_n {
        for k in 0..=n {
            let t = trapezoid(TrapezoidQuery::new(1, n, k)?);
            let c = catalan_triangle(n, k as i64)?;
            order_one.case(t == c, || format!("n={n} k={k}: {t} != {c}"));
        }
    }
    Ok(vec![rows, order_one, shapiro])
}

/// Enumerated sizes of `PP(2n)` (`n <= max_pp`) and `NCPP(2n)` and its
/// strata (`n <= max_ncpp`).
pub fn partition_counts(max_pp: usize, max_ncpp: usize) -> Result<Vec<Check>> {
    let mut pp = Check::new("partitions.pp_count");
    let mut top = Check::new("partitions.top_strata");
    for n in 1..=max_pp {
        let count = enumerate_pp(n)?.len();
        let want = semifactorial(n as u64);
        pp.case(BigInt::from(count) == want, || {
            format!("n={n}: {count} != {want}")
        });

        let strata = count_strata(n)?;
        let last = strata[n - 1].pp;
        top.case(BigInt::from(last) == factorial(n as u64), || {
            format!("|PP_{n}({})| = {last}", 2 * n)
        });
        if n >= 2 {
            let below = strata[n - 2].ncpp;
            top.case(below == n - 1, || {
                format!("|NCPP_{}({})| = {below}", n - 1, 2 * n)
            });
        }
    }

    let mut ncpp = Check::new("partitions.ncpp_count");
    let mut strata = Check::new("partitions.ncpp_strata");
    for n in 1..=max_ncpp {
        let all = enumerate_ncpp(n)?;
        let want = catalan_number(n as u64);
        ncpp.case(BigInt::from(all.len()) == want, || {
            format!("n={n}: {} != {want}", all.len())
        });
        let mut counts = vec![0usize; n + 1];
        for p in &all {
            counts[p.k_class()] += 1;
        }
        for (k, &count) in counts.iter().enumerate().skip(1) {
            let want = Q::new(
                BigInt::from(k) * binomial(2 * n as u64 - k as u64 - 1, n as i64 - 1),
                BigInt::from(n),
            );
            strata.case(q_int(count) == want, || {
                format!("n={n} k={k}: {count} != {want}")
            });
        }
    }
    Ok(vec![pp, ncpp, strata, top])
}

/// For every plus signature of length `2n <= 2 max_n`: the fiber has
/// `prod (2h - l_h)` elements, all mapping back to the signature, exactly
/// one of them non-crossing and equal to the counterpart; the fibers
/// together cover `PP(2n)`.
pub fn fiber_law(max_n: usize) -> Result<Vec<Check>> {
    let mut size = Check::new("partitions.fiber_size");
    let mut unique = Check::new("partitions.fiber_noncrossing_unique");
    let mut cover = Check::new("partitions.fibers_cover_pp");
    for n in 1..=max_n {
        let mut total = BigInt::zero();
        for s in enumerate_plus_signatures(n, None)? {
            let fiber = enumerate_pp_eps(&s)?;
            let want: BigInt = s
                .minus_positions()
                .iter()
                .enumerate()
                .map(|(h, &l)| BigInt::from(2 * (h + 1) - l))
                .product();
            let in_fiber = fiber.iter().all(|p| p.tau() == s);
            size.case(BigInt::from(fiber.len()) == want && in_fiber, || {
                format!("{s}: {} partitions, expected {want}", fiber.len())
            });
            let nc: Vec<_> = fiber.iter().filter(|p| p.is_noncrossing()).collect();
            let counterpart = ncpp_counterpart(&s)?;
            unique.case(nc.len() == 1 && *nc[0] == counterpart, || {
                format!("{s}: {} non-crossing elements", nc.len())
            });
            total += fiber.len();
        }
        let want = semifactorial(n as u64);
        cover.case(total == want, || format!("n={n}: {total} != {want}"));
    }
    Ok(vec![size, unique, cover])
}

/// With every scalar product equal to one, the boson moment counts the
/// fiber and the free moment is one; on random Gram data the free moment
/// is the counterpart's product.
pub fn wick_laws(max_n: usize, seed: u64) -> Result<Check> {
    let mut rng = sampling::rng(seed);
    let mut check = Check::new("partitions.wick_moments");
    for n in 1..=max_n {
        let ones = GramMatrix::<Q>::all_ones(2 * n);
        for s in enumerate_plus_signatures(n, None)? {
            let boson = wick_moment(&s, &ones, WickMode::Boson)?;
            let fiber = enumerate_pp_eps(&s)?.len();
            check.case(boson == q_int(fiber), || {
                format!("{s}: boson {boson} vs {fiber}")
            });
            let free = wick_moment(&s, &ones, WickMode::Free)?;
            check.case(free.is_one(), || format!("{s}: free {free}"));

            let vectors: Vec<Vec<Q>> = (0..2 * n)
                .map(|_| (0..2).map(|_| sampling::rational(&mut rng)).collect())
                .collect();
            let gram = GramMatrix::from_vectors(&vectors)?;
            let free = wick_moment(&s, &gram, WickMode::Free)?;
            let want = ncpp_counterpart(&s)?
                .pairs()
                .iter()
                .fold(Q::one(), |acc, &(l, r)| acc * gram.get(l - 1, r - 1));
            check.case(free == want, || format!("{s}: free {free} vs {want}"));
        }
    }
    Ok(check)
}

fn random_rational_boundary(rng: &mut impl Rng, depth: usize) -> Result<BoundarySequence<Q>> {
    BoundarySequence::new((0..depth).map(|_| sampling::rational(rng)).collect())
}

/// Recurrence and closed form agree on random rational and random
/// polynomial boundaries, and both give the zero table on zero data.
pub fn cts_equivalence(
    rational_cases: usize,
    rational_depth: usize,
    poly_cases: usize,
    poly_depth: usize,
    seed: u64,
) -> Result<Check> {
    let mut rng = sampling::rng(seed);
    let mut check = Check::new("cts.recurrence_vs_closed_form");
    let mut absorb = |c: Check, label: String| {
        check.case(c.passed(), || {
            format!("{label}: {}", c.failure.unwrap_or_default())
        });
    };
    for i in 0..rational_cases {
        let b = random_rational_boundary(&mut rng, rational_depth)?;
        absorb(check_equivalence(&b), format!("rational boundary {i}"));
    }
    for i in 0..poly_cases {
        let b = BoundarySequence::new(
            (0..poly_depth)
                .map(|_| sampling::qpoly(&mut rng, 2))
                .collect(),
        )?;
        absorb(check_equivalence(&b), format!("polynomial boundary {i}"));
    }
    let zero = BoundarySequence::new(vec![Q::zero(); rational_depth])?;
    let zero_ok = solve_recurrence(&zero).is_zero() && solve_closed_form(&zero).is_zero();
    check.case(zero_ok, || "zero boundary gave a nonzero table".into());
    Ok(check)
}

/// The Catalan-boundary table and its two boundary lines.
pub fn catalan_instance(depth: usize) -> Result<Vec<Check>> {
    let mut values = Check::new("cts.catalan_table");
    let mut lines = Check::new("cts.catalan_boundary_lines");
    match catalan_boundary_table(depth) {
        Err(Error::Verification(why)) => {
            values.case(false, || why);
        }
        Err(e) => return Err(e),
        Ok(table) => {
            values.case(true, String::new);
            for n in 1..=depth {
                lines.case(table.get(n, n).is_one(), || {
                    format!("x_({n},{n}) = {}", table.get(n, n))
                });
                if n >= 2 {
                    lines.case(table.get(n, 2) == table.get(n, 1), || {
                        format!("x_({n},2) != x_({n},1)")
                    });
                }
            }
        }
    }
    Ok(vec![values, lines])
}

/// Linearity, the top-diagonal law and the second- and third-column laws on
/// random rational boundaries of the given depth.
pub fn cts_laws(depth: usize, seed: u64) -> Result<Vec<Check>> {
    let mut rng = sampling::rng(seed);
    let mut linear = Check::new("cts.linearity");
    let mut diagonal = Check::new("cts.top_diagonal");
    let mut columns = Check::new("cts.column_laws");
    for _ in 0..20 {
        let b1 = random_rational_boundary(&mut rng, depth)?;
        let b2 = random_rational_boundary(&mut rng, depth)?;
        let c = sampling::rational(&mut rng);
        let t1 = solve_closed_form(&b1);
        let t2 = solve_closed_form(&b2);
        let sum = solve_closed_form(&b1.zip_with(&b2, |x, y| x + y)?);
        let expected = TriangleTable::from_rows(
            t1.rows()
                .iter()
                .zip(t2.rows())
                .map(|(r1, r2)| r1.iter().zip(r2).map(|(x, y)| x + y).collect())
                .collect(),
        )?;
        linear.case(sum == expected, || "additivity fails".into());
        let scaled = solve_closed_form(&b1.map(|x| x * &c));
        linear.case(scaled == t1.map(|x| x * &c), || {
            format!("homogeneity fails for c={c}")
        });

        let rec = solve_recurrence(&b1);
        for n in 1..=depth {
            diagonal.case(rec.get(n, n) == b1.get(1), || format!("x_({n},{n}) != b_1"));
        }
        for n in 3..=depth {
            columns.case(*rec.get(n, 2) == second_column(&b1, n), || {
                format!("x_({n},2)")
            });
            columns.case(*rec.get(n, 3) == third_column(&b1, n), || {
                format!("x_({n},3)")
            });
        }
    }
    Ok(vec![linear, diagonal, columns])
}

fn one_plus_q() -> P {
    P::one() + P::q()
}

/// Stated small values, the stratum recurrences for `n <= max_n`, and the
/// embedding into the Catalan's triangle system at depth `max_n`.
pub fn fock_polynomials(max_n: usize) -> Result<Vec<Check>> {
    let mut small = Check::new("fock.small_values");
    let s1 = stratum_polynomials::<Q>(1)?;
    let s2 = stratum_polynomials::<Q>(2)?;
    small.case(s1[0].is_one(), || format!("P_(1,1) = {}", s1[0]));
    small.case(s2[0].is_one(), || format!("P_(2,1) = {}", s2[0]));
    small.case(s2[1] == one_plus_q(), || format!("P_(2,2) = {}", s2[1]));

    let mut rec = Check::new("fock.stratum_recurrences");
    let mut strata = vec![s1];
    for n in 2..=max_n + 1 {
        strata.push(stratum_polynomials::<Q>(n)?);
    }
    for n in 1..=max_n {
        let cur = &strata[n - 1];
        let next = &strata[n];
        let pn: P = cur.iter().sum();
        rec.case(next[0] == pn, || format!("P_({},1) != P_{n}", n + 1));
        rec.case(next[1] == &one_plus_q() * &pn, || {
            format!("P_({},2) != (1+q)P_{n}", n + 1)
        });
        rec.case(next[n] == one_plus_q(), || {
            format!("P_({0},{0}) = {1}", n + 1, next[n])
        });
        for k in 2..=n {
            let sum: P = cur[k - 1..].iter().sum();
            rec.case(next[k] == sum, || {
                format!("P_({},{}) = {} != {sum}", n + 1, k + 1, next[k])
            });
        }
    }
    let mut checks = vec![small, rec];
    if max_n >= 1 {
        checks.extend(verify_cts_embedding::<Q>(max_n)?);
    }
    Ok(checks)
}

/// `q = 0` reductions for `n <= max_n` and the strict sandwich for
/// `3 <= n <= max_n`.
pub fn fock_specializations(max_n: usize) -> Result<Vec<Check>> {
    let mut catalan = Check::new("fock.q0_catalan_numbers");
    let mut triangle = Check::new("fock.q0_catalan_triangle");
    let zero = Q::zero();
    for n in 1..=max_n {
        let strata = stratum_polynomials::<Q>(n)?;
        let total: P = strata.iter().sum();
        let want = Q::from(catalan_number(n as u64));
        catalan.case(total.eval(&zero) == want, || format!("P_{n}(0) != {want}"));
        for (i, p) in strata.iter().enumerate() {
            let k = i + 1;
            let want = Q::from(catalan_triangle(n as u64 - 1, (n - k) as i64)?);
            triangle.case(p.eval(&zero) == want, || {
                format!("P_({n},{k})(0) != {want}")
            });
        }
    }
    let mut checks = vec![catalan, triangle];
    for n in 3..=max_n.min(6) {
        checks.push(verify_sandwich(n)?);
    }
    Ok(checks)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OperatorBounds {
    /// Random creation/annihilation pairs for the adjointness check.
    pub adjoint_cases: usize,
    /// Largest lower sector `n` in the adjointness check.
    pub max_sector: usize,
    /// Longest odd word in the vanishing check.
    pub max_odd_len: usize,
    /// Largest `n` for minus-class words of length `2n`.
    pub max_minus_n: usize,
    /// Largest `n` in the comparison with the free Wick moment at `q = 0`.
    pub max_free_n: usize,
}

fn random_vector(rng: &mut impl Rng, dim: usize) -> TestVector<Q> {
    loop {
        let f = TestVector::new((0..dim).map(|_| sampling::rational(rng)).collect());
        if !f.is_zero() {
            return f;
        }
    }
}

fn random_state(rng: &mut impl Rng, dim: usize, sector: usize, terms: usize) -> FockState<Q> {
    FockState::from_terms((0..terms).map(|_| {
        let word = (0..sector).map(|_| rng.gen_range(0..dim)).collect();
        (word, sampling::qpoly(rng, 1))
    }))
}

fn words(len: usize) -> impl Iterator<Item = Signature> {
    (0..1u32 << len).map(move |bits| {
        let s: String = (0..len)
            .map(|i| {
                if bits >> (len - 1 - i) & 1 == 1 {
                    '+'
                } else {
                    '-'
                }
            })
            .collect();
        s.parse().expect("word over +/-")
    })
}

/// Adjointness, moment vanishing, the worked moments at `q = 1`, the free
/// reduction at `q = 0`, the isometry facts and positivity at `q = ±1`.
pub fn operator_calculus(b: &OperatorBounds, seed: u64) -> Result<Vec<Check>> {
    let mut rng = sampling::rng(seed);

    let mut adjoint = Check::new("fock.adjointness");
    for case in 0..b.adjoint_cases {
        let dim = 1 + case % 3;
        let n = case % (b.max_sector + 1);
        let space = FockSpace::<Q>::orthonormal(dim);
        let f = random_vector(&mut rng, dim);
        let a = random_state(&mut rng, dim, n, 3);
        let g = random_state(&mut rng, dim, n + 1, 3);
        let lhs = space.deformed_inner(&space.apply_creation(&f, &a)?, &g, n + 1)?;
        let rhs = space.deformed_inner(&a, &space.apply_annihilation(&f, &g)?, n)?;
        adjoint.case(lhs == rhs, || {
            format!("case {case}, sector {n}: {lhs} != {rhs}")
        });
    }

    let mut vanish = Check::new("fock.moment_vanishing");
    let unit_space = FockSpace::<Q>::orthonormal(1);
    let unit = TestVector::basis(1, 0);
    for len in (1..=b.max_odd_len).step_by(2) {
        for s in words(len) {
            let m = unit_space.vacuum_moment(&OperatorWord::uniform(&s, &unit)?)?;
            vanish.case(m.is_zero(), || format!("{s}: {m}"));
        }
    }
    for n in 1..=b.max_minus_n {
        for s in words(2 * n).filter(|s| !s.is_plus()) {
            let m = unit_space.vacuum_moment(&OperatorWord::uniform(&s, &unit)?)?;
            vanish.case(m.is_zero(), || format!("{s}: {m}"));
        }
    }

    let worked = worked_moments(&mut rng)?;

    let mut free = Check::new("fock.q0_free_wick");
    let space = FockSpace::<Q>::orthonormal(2);
    for n in 1..=b.max_free_n {
        for s in enumerate_plus_signatures(n, None)? {
            let f: Vec<_> = (0..2 * n).map(|_| random_vector(&mut rng, 2)).collect();
            let coords: Vec<Vec<Q>> = f.iter().map(|v| v.coords().to_vec()).collect();
            let gram = GramMatrix::from_vectors(&coords)?;
            let m = space.vacuum_moment(&OperatorWord::from_signature(&s, &f)?)?;
            let want = wick_moment(&s, &gram, WickMode::Free)?;
            free.case(m.eval(&Q::zero()) == want, || {
                format!("{s}: {m} at 0 vs {want}")
            });
        }
    }

    let mut isometry = Check::new("fock.isometry");
    for n in 1..=3 {
        let f = random_vector(&mut rng, 2);
        let a = random_state(&mut rng, 2, n, 3);
        let fa = space.apply_creation(&f, &a)?;
        let lhs = space.deformed_inner(&fa, &fa, n + 1)?;
        let ff = space.inner(&f, &f)?;
        if n >= 2 {
            let rhs = space.deformed_inner(&a, &a, n)?.scale(&ff);
            isometry.case(lhs == rhs, || format!("sector {n}: {lhs} != {rhs}"));
        } else {
            let g = random_vector(&mut rng, 2);
            let fg = FockState::tensor(&[f.clone(), g.clone()]);
            let fg_norm = space.deformed_inner(&fg, &fg, 2)?;
            let fgi = space.inner(&f, &g)?;
            let rhs = P::new(vec![ff * space.inner(&g, &g)?, fgi.clone() * fgi]);
            isometry.case(fg_norm == rhs, || format!("f⊗g: {fg_norm} != {rhs}"));
        }
    }

    let mut positive = Check::new("fock.positivity");
    let space3 = FockSpace::<Q>::orthonormal(3);
    for _ in 0..50 {
        let a = FockState::from_terms((0..4).map(|_| {
            let w = vec![rng.gen_range(0..3), rng.gen_range(0..3)];
            (w, P::constant(sampling::rational(&mut rng)))
        }));
        let norm = space3.deformed_inner(&a, &a, 2)?;
        for q in [Q::one(), -Q::one()] {
            let v = norm.eval(&q);
            positive.case(v >= Q::zero(), || format!("<F,F>_2 at q={q} is {v}"));
        }
    }

    Ok(vec![adjoint, vanish, worked, free, isometry, positive])
}

/// The worked moments of lengths 2, 4 and 6 at `q = 1` on random rational
/// test vectors.
fn worked_moments(rng: &mut impl Rng) -> Result<Check> {
    let mut check = Check::new("fock.worked_moments");
    let dim = 3;
    let space = FockSpace::<Q>::orthonormal(dim);
    let one = Q::one();
    for _ in 0..5 {
        let f: Vec<_> = (0..6).map(|_| random_vector(rng, dim)).collect();
        let ip = |i: usize, j: usize| space.inner(&f[i - 1], &f[j - 1]);
        let cases: Vec<(&str, Q)> = vec![
            ("-+", ip(1, 2)?),
            ("-+-+", ip(1, 2)? * ip(3, 4)?),
            ("--++", ip(1, 4)? * ip(2, 3)? + ip(1, 3)? * ip(2, 4)?),
            (
                "---+++",
                ip(1, 6)? * ip(2, 5)? * ip(3, 4)? + ip(1, 5)? * ip(2, 6)? * ip(3, 4)?,
            ),
        ];
        for (word, want) in cases {
            let s: Signature = word.parse()?;
            let m = space.vacuum_moment(&OperatorWord::from_signature(&s, &f[..s.len()])?)?;
            let got = m.eval(&one);
            check.case(got == want, || format!("{word}: {got} != {want}"));
        }
    }
    Ok(check)
}
