//! Symbolic simulator of the (q,2)-Fock space over a finite-dimensional
//! one-particle space.
//!
//! States are finite sums of basis words with amplitudes in `Poly<T>`, so
//! the deformation parameter `q` stays symbolic through every computation.
//! The one-particle space carries a metric (a Gram matrix of its basis);
//! [`FockSpace::orthonormal`] gives the standard one.
//!
//! The `n`-particle inner product differs from the plain tensor product
//! only in the last two slots:
//!
//! ```text
//! <F, G'⊗f⊗g>_n = <F, G'⊗f⊗g> + q <F, G'⊗g⊗f>     (n >= 2)
//! ```
//!
//! Creation prepends its test vector. Annihilation contracts the first slot,
//! with an extra `q` term only on two-particle words:
//!
//! ```text
//! A(f) Φ           = 0
//! A(f) g           = <f,g> Φ
//! A(f) g1⊗g2       = <f,g1> g2 + q <f,g2> g1
//! A(f) g1⊗g2⊗...   = <f,g1> g2⊗...
//! ```

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::cts::{solve_closed_form, BoundarySequence, TriangleTable};
use crate::error::{Error, Result};
use crate::exactalg::{semifactorial, Poly, Ring};
use crate::partitions::{enumerate_plus_signatures, GramMatrix, Sign, Signature};
use crate::report::Check;
use crate::trapezoid::catalan_number;

/// Largest `n` accepted by [`p_nk`] and [`p_n`].
pub const FOCK_MAX_N: usize = 7;

/// Coordinates of a one-particle vector in the basis of a [`FockSpace`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TestVector<T> {
    coords: Vec<T>,
}

impl<T: Ring> TestVector<T> {
    pub fn new(coords: Vec<T>) -> Self {
        TestVector { coords }
    }

    /// The `i`-th basis vector (0-based) of a `dim`-dimensional space.
    pub fn basis(dim: usize, i: usize) -> Self {
        let mut coords = vec![T::zero(); dim];
        coords[i] = T::one();
        TestVector { coords }
    }

    pub fn coords(&self) -> &[T] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Action {
    Creation,
    Annihilation,
}

impl From<Sign> for Action {
    fn from(s: Sign) -> Self {
        match s {
            Sign::Plus => Action::Creation,
            Sign::Minus => Action::Annihilation,
        }
    }
}

/// A product `A^{e(1)}(f_1) ... A^{e(m)}(f_m)` listed left to right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorWord<T> {
    letters: Vec<(Action, TestVector<T>)>,
}

impl<T: Ring> OperatorWord<T> {
    pub fn new(letters: Vec<(Action, TestVector<T>)>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::domain("operator word must be nonempty"));
        }
        Ok(OperatorWord { letters })
    }

    /// Pairs the `j`-th sign with the `j`-th vector.
    pub fn from_signature(s: &Signature, vectors: &[TestVector<T>]) -> Result<Self> {
        if s.len() != vectors.len() {
            return Err(Error::DimensionMismatch {
                expected: s.len(),
                found: vectors.len(),
            });
        }
        Self::new(
            s.word()
                .iter()
                .zip(vectors)
                .map(|(&sign, f)| (Action::from(sign), f.clone()))
                .collect(),
        )
    }

    /// Every letter uses the same vector.
    pub fn uniform(s: &Signature, f: &TestVector<T>) -> Result<Self> {
        Self::from_signature(s, &vec![f.clone(); s.len()])
    }

    pub fn letters(&self) -> &[(Action, TestVector<T>)] {
        &self.letters
    }

    pub fn signature(&self) -> Signature {
        Signature::new(
            self.letters
                .iter()
                .map(|(a, _)| match a {
                    Action::Creation => Sign::Plus,
                    Action::Annihilation => Sign::Minus,
                })
                .collect(),
        )
    }
}

/// A finite sum of basis words with nonzero polynomial amplitudes. The empty
/// word is the vacuum component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FockState<T> {
    amplitudes: BTreeMap<Vec<usize>, Poly<T>>,
}

impl<T: Ring> FockState<T> {
    pub fn zero() -> Self {
        FockState {
            amplitudes: BTreeMap::new(),
        }
    }

    /// `Φ`.
    pub fn vacuum() -> Self {
        Self::basis(Vec::new())
    }

    /// A single basis word with amplitude one.
    pub fn basis(word: Vec<usize>) -> Self {
        let mut s = Self::zero();
        s.add_term(word, Poly::one());
        s
    }

    /// Sums the given terms, merging repeated words and dropping zeros.
    pub fn from_terms(terms: impl IntoIterator<Item = (Vec<usize>, Poly<T>)>) -> Self {
        let mut s = Self::zero();
        for (word, amp) in terms {
            s.add_term(word, amp);
        }
        s
    }

    /// `f_1 ⊗ ... ⊗ f_n` expanded in the basis.
    pub fn tensor(vectors: &[TestVector<T>]) -> Self {
        vectors
            .iter()
            .rev()
            .fold(Self::vacuum(), |s, f| s.prepend(f))
    }

    fn add_term(&mut self, word: Vec<usize>, amp: Poly<T>) {
        if amp.is_zero() {
            return;
        }
        match self.amplitudes.remove(&word) {
            Some(old) => {
                let sum = &old + &amp;
                if !sum.is_zero() {
                    self.amplitudes.insert(word, sum);
                }
            }
            None => {
                self.amplitudes.insert(word, amp);
            }
        }
    }

    fn prepend(&self, f: &TestVector<T>) -> Self {
        let mut out = Self::zero();
        for (word, amp) in &self.amplitudes {
            for (i, c) in f.coords.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let mut w = Vec::with_capacity(word.len() + 1);
                w.push(i);
                w.extend_from_slice(word);
                out.add_term(w, amp.scale(c));
            }
        }
        out
    }

    pub fn amplitude(&self, word: &[usize]) -> Poly<T> {
        self.amplitudes
            .get(word)
            .cloned()
            .unwrap_or_else(Poly::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &Poly<T>)> {
        self.amplitudes.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.amplitudes.is_empty()
    }

    /// Particle numbers with a nonzero component, increasing.
    pub fn sectors(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.amplitudes.keys().map(Vec::len).collect();
        s.sort_unstable();
        s.dedup();
        s
    }

    /// The component in the `n`-particle sector.
    pub fn restrict(&self, n: usize) -> Self {
        FockState {
            amplitudes: self
                .amplitudes
                .iter()
                .filter(|(w, _)| w.len() == n)
                .map(|(w, a)| (w.clone(), a.clone()))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, a) in &other.amplitudes {
            out.add_term(w.clone(), a.clone());
        }
        out
    }

    pub fn scale(&self, c: &Poly<T>) -> Self {
        Self::from_terms(self.amplitudes.iter().map(|(w, a)| (w.clone(), a * c)))
    }
}

impl<T: Ring + fmt::Display> fmt::Display for FockState<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (word, amp)) in self.amplitudes.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({amp})")?;
            if word.is_empty() {
                f.write_str("Φ")?;
            } else {
                let labels: Vec<String> = word.iter().map(|i| format!("e{}", i + 1)).collect();
                f.write_str(&labels.join("⊗"))?;
            }
        }
        Ok(())
    }
}

/// The one-particle space: its dimension and the scalar products of its
/// basis vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FockSpace<T> {
    metric: GramMatrix<T>,
}

impl<T: Ring> FockSpace<T> {
    pub fn orthonormal(dim: usize) -> Self {
        FockSpace {
            metric: GramMatrix::identity(dim),
        }
    }

    /// Basis vector `i` plays the role of a vector with `<e_i, e_j> = g[i][j]`.
    pub fn with_metric(metric: GramMatrix<T>) -> Self {
        FockSpace { metric }
    }

    pub fn dim(&self) -> usize {
        self.metric.dim()
    }

    pub fn metric(&self) -> &GramMatrix<T> {
        &self.metric
    }

    fn check_vector(&self, f: &TestVector<T>) -> Result<()> {
        if f.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: f.dim(),
            });
        }
        Ok(())
    }

    fn check_state(&self, s: &FockState<T>) -> Result<()> {
        match s.amplitudes.keys().flatten().find(|&&i| i >= self.dim()) {
            Some(&i) => Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: i + 1,
            }),
            None => Ok(()),
        }
    }

    /// `<f, g>`.
    pub fn inner(&self, f: &TestVector<T>, g: &TestVector<T>) -> Result<T> {
        self.check_vector(f)?;
        self.check_vector(g)?;
        let fc = self.contraction(f);
        Ok(fc
            .iter()
            .zip(&g.coords)
            .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone()))
    }

    /// `j -> <f, e_j>`.
    fn contraction(&self, f: &TestVector<T>) -> Vec<T> {
        (0..self.dim())
            .map(|j| {
                f.coords.iter().enumerate().fold(T::zero(), |acc, (i, c)| {
                    acc + c.clone() * self.metric.get(i, j).clone()
                })
            })
            .collect()
    }

    fn word_product(&self, a: &[usize], b: &[usize]) -> T {
        a.iter().zip(b).fold(T::one(), |acc, (&i, &j)| {
            acc * self.metric.get(i, j).clone()
        })
    }

    /// `<F, G>_n`, the deformed inner product on the `n`-particle sector.
    pub fn deformed_inner(
        &self,
        f: &FockState<T>,
        g: &FockState<T>,
        sector: usize,
    ) -> Result<Poly<T>> {
        for s in [f, g] {
            self.check_state(s)?;
            if let Some(w) = s.amplitudes.keys().find(|w| w.len() != sector) {
                return Err(Error::SectorMismatch {
                    expected: sector,
                    found: w.len(),
                });
            }
        }
        let q = Poly::<T>::q();
        let mut total = Poly::zero();
        for (v, a) in &f.amplitudes {
            for (w, b) in &g.amplitudes {
                let mut kernel = Poly::constant(self.word_product(v, w));
                if sector >= 2 {
                    let mut swapped = w.clone();
                    swapped.swap(sector - 2, sector - 1);
                    kernel = &kernel + &q.scale(&self.word_product(v, &swapped));
                }
                total = &total + &(&(a * b) * &kernel);
            }
        }
        Ok(total)
    }

    /// `A⁺(f)`: prepends `f` to every word.
    pub fn apply_creation(&self, f: &TestVector<T>, s: &FockState<T>) -> Result<FockState<T>> {
        self.check_vector(f)?;
        self.check_state(s)?;
        Ok(s.prepend(f))
    }

    /// `A(f)`.
    pub fn apply_annihilation(&self, f: &TestVector<T>, s: &FockState<T>) -> Result<FockState<T>> {
        self.check_vector(f)?;
        self.check_state(s)?;
        let fc = self.contraction(f);
        let q = Poly::<T>::q();
        let mut out = FockState::zero();
        for (word, amp) in &s.amplitudes {
            match word.len() {
                0 => {}
                2 => {
                    let (g1, g2) = (word[0], word[1]);
                    out.add_term(vec![g2], amp.scale(&fc[g1]));
                    out.add_term(vec![g1], (&q * amp).scale(&fc[g2]));
                }
                _ => out.add_term(word[1..].to_vec(), amp.scale(&fc[word[0]])),
            }
        }
        Ok(out)
    }

    /// `<Φ, A^{e(1)}(f_1) ... A^{e(m)}(f_m) Φ>`, applying the letters right
    /// to left.
    pub fn vacuum_moment(&self, word: &OperatorWord<T>) -> Result<Poly<T>> {
        let mut state = FockState::vacuum();
        for (action, f) in word.letters.iter().rev() {
            state = match action {
                Action::Creation => self.apply_creation(f, &state)?,
                Action::Annihilation => self.apply_annihilation(f, &state)?,
            };
        }
        Ok(state.amplitude(&[]))
    }
}

fn check_fock_range(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::domain("n must be positive"));
    }
    Error::guard("n", n, FOCK_MAX_N)
}

/// `[P_{n,1}, ..., P_{n,n}]`: each entry sums the single-vector vacuum
/// moments over the plus signatures of length `2n` in that stratum.
pub fn stratum_polynomials<T: Ring>(n: usize) -> Result<Vec<Poly<T>>> {
    check_fock_range(n)?;
    let space = FockSpace::<T>::orthonormal(1);
    let f = TestVector::basis(1, 0);
    let mut out = vec![Poly::zero(); n];
    for s in enumerate_plus_signatures(n, None)? {
        let k = 2 * n
            - s.minus_positions()
                .last()
                .copied()
                .expect("plus class has a -1");
        let m = space.vacuum_moment(&OperatorWord::uniform(&s, &f)?)?;
        out[k - 1] = &out[k - 1] + &m;
    }
    Ok(out)
}

/// `P_{n,k}` for `1 <= k <= n <= 7`.
pub fn p_nk<T: Ring>(n: usize, k: usize) -> Result<Poly<T>> {
    check_fock_range(n)?;
    if k == 0 || k > n {
        return Err(Error::domain(format!("k={k} outside 1..={n}")));
    }
    Ok(stratum_polynomials::<T>(n)?.swap_remove(k - 1))
}

/// `P_n = sum_k P_{n,k}`.
pub fn p_n<T: Ring>(n: usize) -> Result<Poly<T>> {
    Ok(stratum_polynomials::<T>(n)?.into_iter().sum())
}

/// The table `x_{n,k} = P_{n+1,k+1}` for `1 <= k <= n <= depth`.
pub fn embedded_table<T: Ring>(depth: usize) -> Result<TriangleTable<Poly<T>>> {
    if depth == 0 {
        return Err(Error::domain("table depth must be at least 1"));
    }
    Error::guard("depth", depth, FOCK_MAX_N - 1)?;
    let rows = (1..=depth)
        .map(|n| Ok(stratum_polynomials::<T>(n + 1)?.split_off(1)))
        .collect::<Result<Vec<_>>>()?;
    TriangleTable::from_rows(rows)
}

/// Checks that `x_{n,k} = P_{n+1,k+1}` solves the Catalan's triangle
/// system with `x_{n,n} = 1+q` and `x_{n,1} = (1+q) P_n`, and that it equals
/// the closed-form solution for that boundary. `depth <= 6`.
pub fn verify_cts_embedding<T: Ring>(depth: usize) -> Result<Vec<Check>> {
    let table = embedded_table::<T>(depth)?;
    let one_plus_q = Poly::<T>::one() + Poly::q();
    let pn = (1..=depth).map(p_n::<T>).collect::<Result<Vec<_>>>()?;

    let mut recurrence = Check::new("fock.embedding_recurrence");
    let violation = table.recurrence_violation();
    recurrence.case(violation.is_none(), || {
        let (n, k) = violation.expect("violation present");
        format!(
            "x_({n},{k}) = P_({},{}) breaks the recurrence",
            n + 1,
            k + 1
        )
    });

    let mut boundary = Check::new("fock.embedding_boundary");
    for n in 1..=depth {
        let diag = table.get(n, n);
        boundary.case(*diag == one_plus_q, || format!("x_({n},{n}) = {diag:?}"));
        let first = table.get(n, 1);
        let want = &one_plus_q * &pn[n - 1];
        boundary.case(*first == want, || {
            format!("x_({n},1) = {first:?}, expected {want:?}")
        });
    }

    let mut closed = Check::new("fock.embedding_closed_form");
    let b = BoundarySequence::new(pn.iter().map(|p| &one_plus_q * p).collect())?;
    let solved = solve_closed_form(&b);
    let mismatch = table.first_mismatch(&solved);
    closed.case(mismatch.is_none(), || {
        let (n, k) = mismatch.expect("mismatch present");
        format!(
            "x_({n},{k}): simulated {:?} vs closed form {:?}",
            table.get(n, k),
            solved.get(n, k)
        )
    });

    Ok(vec![recurrence, boundary, closed])
}

/// `C_n < P_n(1) < (2n-1)!!` for `3 <= n <= 6`.
pub fn verify_sandwich(n: usize) -> Result<Check> {
    if !(3..=6).contains(&n) {
        return Err(Error::domain(format!(
            "sandwich check needs 3 <= n <= 6, got {n}"
        )));
    }
    let value = p_n::<BigRational>(n)?.eval(&BigRational::one());
    let lower = BigRational::from(catalan_number(n as u64));
    let upper = BigRational::from(semifactorial(n as u64));
    let mut check = Check::new(format!("fock.sandwich_n{n}"));
    check.case(lower < value && value < upper, || {
        format!("expected {lower} < {value} < {upper}")
    });
    Ok(check)
}
