//! Values that one module computes and another module, by an independent
//! route, must reproduce.

use catalan_fock::cts::{solve_closed_form, BoundarySequence};
use catalan_fock::exactalg::{binomial, semifactorial, Poly};
use catalan_fock::fock::{p_n, p_nk, FockSpace, OperatorWord, TestVector};
use catalan_fock::partitions::{
    enumerate_ncpp, enumerate_plus_signatures, enumerate_pp, wick_moment, GramMatrix, WickMode,
};
use catalan_fock::trapezoid::{catalan_number, catalan_triangle, shapiro_triangle};
use catalan_fock::{Integer, QPolynomial, Rational};

fn qp(cs: &[i64]) -> QPolynomial {
    Poly::new(
        cs.iter()
            .map(|&c| Rational::from_integer(c.into()))
            .collect(),
    )
}

#[test]
fn catalan_numbers_count_noncrossing_partitions() {
    for n in 1..=7 {
        assert_eq!(
            Integer::from(enumerate_ncpp(n).unwrap().len()),
            catalan_number(n as u64)
        );
    }
}

#[test]
fn noncrossing_strata_are_catalan_triangle_entries() {
    for n in 1..=7usize {
        let mut counts = vec![0usize; n + 1];
        for p in enumerate_ncpp(n).unwrap() {
            counts[p.k_class()] += 1;
        }
        for (k, &count) in counts.iter().enumerate().skip(1) {
            let want = catalan_triangle(n as u64 - 1, (n - k) as i64).unwrap();
            assert_eq!(Integer::from(count), want, "n={n} k={k}");
        }
    }
}

#[test]
fn shapiro_row_sums() {
    for n in 1..=10u64 {
        let total: Integer = (1..=n as i64)
            .map(|k| shapiro_triangle(n, k).unwrap())
            .sum();
        assert_eq!(total, binomial(2 * n - 1, n as i64), "n={n}");
    }
}

#[test]
fn pp_count_is_semifactorial() {
    for n in 1..=6 {
        assert_eq!(
            Integer::from(enumerate_pp(n).unwrap().len()),
            semifactorial(n as u64)
        );
    }
}

#[test]
fn unit_moments_at_q_zero_count_plus_signatures() {
    // every plus signature carries exactly one non-crossing pairing, so at
    // q = 0 the single-vector moments sum to the number of signatures
    let zero = Rational::from_integer(0.into());
    for n in 1..=5 {
        let sigs = enumerate_plus_signatures(n, None).unwrap();
        assert_eq!(
            p_n::<Rational>(n).unwrap().eval(&zero),
            Rational::from_integer(sigs.len().into())
        );
    }
}

#[test]
fn fock_boundary_through_closed_form() {
    let one_plus_q = qp(&[1, 1]);
    let b = BoundarySequence::new(
        (1..=3)
            .map(|n| &one_plus_q * &p_n::<Rational>(n).unwrap())
            .collect(),
    )
    .unwrap();
    let t = solve_closed_form(&b);
    // x_{3,2} = P_{4,3} = (1+q)(3+q), also P_{3,2} + P_{3,3}
    assert_eq!(*t.get(3, 2), &one_plus_q * &qp(&[3, 1]));
    assert_eq!(*t.get(3, 2), p_nk::<Rational>(4, 3).unwrap());
    assert_eq!(
        *t.get(3, 2),
        &p_nk::<Rational>(3, 2).unwrap() + &p_nk::<Rational>(3, 3).unwrap()
    );
}

#[test]
fn sandwich_values() {
    let one = Rational::from_integer(1.into());
    assert_eq!(
        p_n::<Rational>(3).unwrap().eval(&one),
        Rational::from_integer(11.into())
    );
    assert_eq!(
        p_n::<Rational>(4).unwrap().eval(&one),
        Rational::from_integer(43.into())
    );
}

#[test]
fn free_moment_is_q_zero_fock_moment_under_a_general_metric() {
    // basis vectors with a non-orthonormal metric realize any Gram matrix
    let g = [[2, 1, 0, 3], [1, 5, -1, 0], [0, -1, 4, 2], [3, 0, 2, 7]];
    let gram = GramMatrix::new(
        g.iter()
            .map(|r| {
                r.iter()
                    .map(|&x| Rational::from_integer(x.into()))
                    .collect()
            })
            .collect(),
    )
    .unwrap();
    let space = FockSpace::with_metric(gram.clone());
    let zero = Rational::from_integer(0.into());
    for s in enumerate_plus_signatures(2, None).unwrap() {
        let f: Vec<_> = (0..4).map(|i| TestVector::basis(4, i)).collect();
        let m = space
            .vacuum_moment(&OperatorWord::from_signature(&s, &f).unwrap())
            .unwrap();
        assert_eq!(
            m.eval(&zero),
            wick_moment(&s, &gram, WickMode::Free).unwrap(),
            "{s}"
        );
    }
}
