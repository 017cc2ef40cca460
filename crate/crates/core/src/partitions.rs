//! Pair partitions of `{1,...,2n}`, their non-crossing subset, the map
//! `tau` to `±1` signatures, `tau`-fibers, and Wick-type vacuum moments of
//! the free and symmetric Fock spaces.
//!
//! Indices are 1-based throughout to match the combinatorial conventions;
//! a pair partition stores its pairs by increasing left index.

use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactalg::Ring;

/// Largest `n` for which all of `PP(2n)` is materialized.
pub const PP_MAX_N: usize = 7;
/// Largest `n` for non-crossing and signature enumeration.
pub const NCPP_MAX_N: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PairPartition {
    pairs: Vec<(usize, usize)>,
}

impl PairPartition {
    /// Validates `pairs` as given: every index of `{1,...,2n}` used exactly
    /// once, `l_h < r_h`, and strictly increasing left indices.
    pub fn new(pairs: Vec<(usize, usize)>) -> Result<Self> {
        let n = pairs.len();
        if n == 0 {
            return Err(Error::InvalidPartition("no pairs".into()));
        }
        let mut seen = vec![false; 2 * n + 1];
        for &(l, r) in &pairs {
            for idx in [l, r] {
                if idx == 0 || idx > 2 * n {
                    return Err(Error::InvalidPartition(format!(
                        "index {idx} outside 1..={}",
                        2 * n
                    )));
                }
                if std::mem::replace(&mut seen[idx], true) {
                    return Err(Error::InvalidPartition(format!("index {idx} used twice")));
                }
            }
            if l >= r {
                return Err(Error::InvalidPartition(format!(
                    "pair ({l},{r}) has l >= r"
                )));
            }
        }
        if pairs.windows(2).any(|w| w[0].0 >= w[1].0) {
            return Err(Error::InvalidPartition(
                "left indices not increasing".into(),
            ));
        }
        Ok(PairPartition { pairs })
    }

    /// Like [`PairPartition::new`] but accepts pairs in any order and either
    /// orientation.
    pub fn from_unordered(pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut pairs: Vec<_> = pairs
            .into_iter()
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        pairs.sort_unstable();
        Self::new(pairs)
    }

    /// A pairing of an arbitrary totally ordered set, carried to
    /// `{1,...,2n}` by rank.
    pub fn from_ranked<T: Ord + Clone>(pairs: &[(T, T)]) -> Result<Self> {
        let mut values: Vec<T> = pairs
            .iter()
            .flat_map(|(a, b)| [a.clone(), b.clone()])
            .collect();
        values.sort();
        if values.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidPartition("repeated element".into()));
        }
        let rank = |v: &T| values.binary_search(v).expect("value present") + 1;
        Self::from_unordered(pairs.iter().map(|(a, b)| (rank(a), rank(b))))
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Number of pairs.
    pub fn n(&self) -> usize {
        self.pairs.len()
    }

    pub fn lefts(&self) -> impl Iterator<Item = usize> + '_ {
        self.pairs.iter().map(|p| p.0)
    }

    pub fn rights(&self) -> impl Iterator<Item = usize> + '_ {
        self.pairs.iter().map(|p| p.1)
    }

    /// The pairs reordered by increasing right index, for display.
    pub fn by_right_index(&self) -> Vec<(usize, usize)> {
        let mut v = self.pairs.clone();
        v.sort_unstable_by_key(|p| p.1);
        v
    }

    /// For every `h < k`: `l_k < r_h` iff `r_k < r_h`.
    pub fn is_noncrossing(&self) -> bool {
        self.pairs.iter().enumerate().all(|(h, &(_, rh))| {
            self.pairs[h + 1..]
                .iter()
                .all(|&(lk, rk)| (lk < rh) == (rk < rh))
        })
    }

    /// `2n - l_n`, always in `1..=n`.
    pub fn k_class(&self) -> usize {
        2 * self.n() - self.pairs.last().expect("nonempty").0
    }

    /// Left indices map to `-1`, right indices to `+1`.
    pub fn tau(&self) -> Signature {
        let mut word = vec![Sign::Plus; 2 * self.n()];
        for l in self.lefts() {
            word[l - 1] = Sign::Minus;
        }
        Signature { word }
    }

    pub fn to_json(&self) -> Value {
        json!(self.pairs.iter().map(|&(l, r)| [l, r]).collect::<Vec<_>>())
    }
}

impl fmt::Display for PairPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (l, r)) in self.pairs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "({l},{r})")?;
        }
        f.write_str("}")
    }
}

fn check_n(n: usize, limit: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::domain("n must be positive"));
    }
    Error::guard("n", n, limit)
}

/// All of `PP(2n)`, lexicographic in `(r_1, ..., r_n)`.
///
/// The smallest unmatched index is paired with each admissible partner in
/// increasing order; since the left indices are determined by the earlier
/// right indices this emits the rights in lexicographic order.
pub fn enumerate_pp(n: usize) -> Result<Vec<PairPartition>> {
    check_n(n, PP_MAX_N)?;
    let mut out = Vec::new();
    match_recursive(
        n,
        &mut vec![false; 2 * n + 1],
        &mut Vec::new(),
        &mut out,
        false,
    );
    Ok(out)
}

/// All of `NCPP(2n)`, in the same order as `enumerate_pp` filtered by
/// [`PairPartition::is_noncrossing`].
pub fn enumerate_ncpp(n: usize) -> Result<Vec<PairPartition>> {
    check_n(n, NCPP_MAX_N)?;
    let mut out = Vec::new();
    match_recursive(
        n,
        &mut vec![false; 2 * n + 1],
        &mut Vec::new(),
        &mut out,
        true,
    );
    Ok(out)
}

fn match_recursive(
    n: usize,
    used: &mut [bool],
    pairs: &mut Vec<(usize, usize)>,
    out: &mut Vec<PairPartition>,
    noncrossing: bool,
) {
    let Some(l) = (1..=2 * n).find(|&i| !used[i]) else {
        out.push(PairPartition {
            pairs: pairs.clone(),
        });
        return;
    };
    used[l] = true;
    for r in l + 1..=2 * n {
        if used[r] {
            // under the non-crossing discipline everything inside (l, r)
            // must still be free
            if noncrossing {
                break;
            }
            continue;
        }
        if noncrossing && (r - l - 1) % 2 == 1 {
            continue;
        }
        used[r] = true;
        pairs.push((l, r));
        match_recursive(n, used, pairs, out, noncrossing);
        pairs.pop();
        used[r] = false;
    }
    used[l] = false;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    /// `-1`: a left index, an annihilator position.
    Minus,
    /// `+1`: a right index, a creator position.
    Plus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Minus => -1,
            Sign::Plus => 1,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Minus => '-',
            Sign::Plus => '+',
        }
    }
}

/// A word over `{-1, +1}`, position 1 leftmost.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature {
    word: Vec<Sign>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignatureClass {
    /// Zero total and nonnegative suffix sums; `k = 2n - (last -1 position)`.
    Plus {
        k: usize,
    },
    Minus,
}

impl Signature {
    pub fn new(word: Vec<Sign>) -> Self {
        Signature { word }
    }

    pub fn from_values(values: &[i64]) -> Result<Self> {
        let word = values
            .iter()
            .map(|&v| match v {
                -1 => Ok(Sign::Minus),
                1 => Ok(Sign::Plus),
                other => Err(Error::parse(
                    other.to_string(),
                    "signature entries are -1 or +1",
                )),
            })
            .collect::<Result<_>>()?;
        Ok(Signature { word })
    }

    pub fn word(&self) -> &[Sign] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// 1-based positions of the `-1` entries, increasing.
    pub fn minus_positions(&self) -> Vec<usize> {
        self.positions(Sign::Minus)
    }

    pub fn plus_positions(&self) -> Vec<usize> {
        self.positions(Sign::Plus)
    }

    fn positions(&self, sign: Sign) -> Vec<usize> {
        self.word
            .iter()
            .enumerate()
            .filter(|(_, &s)| s == sign)
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn classify(&self) -> Result<SignatureClass> {
        if self.word.is_empty() || self.word.len() % 2 == 1 {
            return Err(Error::domain(format!(
                "signature must have positive even length, got {}",
                self.word.len()
            )));
        }
        let mut suffix = 0i64;
        for s in self.word.iter().rev() {
            suffix += s.value();
            if suffix < 0 {
                return Ok(SignatureClass::Minus);
            }
        }
        if suffix != 0 {
            return Ok(SignatureClass::Minus);
        }
        let last_minus = self.minus_positions().pop().expect("zero sum implies a -1");
        Ok(SignatureClass::Plus {
            k: self.word.len() - last_minus,
        })
    }

    pub fn is_plus(&self) -> bool {
        matches!(self.classify(), Ok(SignatureClass::Plus { .. }))
    }

    fn require_plus(&self) -> Result<usize> {
        match self.classify()? {
            SignatureClass::Plus { .. } => Ok(self.word.len() / 2),
            SignatureClass::Minus => Err(Error::domain(format!("{self} is not in the plus class"))),
        }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.word
            .iter()
            .try_for_each(|s| write!(f, "{}", s.symbol()))
    }
}

impl FromStr for Signature {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let word = s
            .chars()
            .map(|c| match c {
                '-' => Ok(Sign::Minus),
                '+' => Ok(Sign::Plus),
                other => Err(Error::parse(s, format!("unexpected character `{other}`"))),
            })
            .collect::<Result<_>>()?;
        Ok(Signature { word })
    }
}

/// Classification of a signature word; see [`Signature::classify`].
pub fn classify_signature(s: &Signature) -> Result<SignatureClass> {
    s.classify()
}

/// All plus-class signatures of length `2n` (or the `k`-stratum), in
/// lexicographic order with `-` before `+`.
pub fn enumerate_plus_signatures(n: usize, k: Option<usize>) -> Result<Vec<Signature>> {
    check_n(n, NCPP_MAX_N)?;
    if let Some(k) = k {
        if k == 0 || k > n {
            return Err(Error::domain(format!("stratum k={k} outside 1..={n}")));
        }
    }
    fn grow(n: usize, word: &mut Vec<Sign>, minus: usize, plus: usize, out: &mut Vec<Signature>) {
        if word.len() == 2 * n {
            out.push(Signature { word: word.clone() });
            return;
        }
        if minus < n {
            word.push(Sign::Minus);
            grow(n, word, minus + 1, plus, out);
            word.pop();
        }
        // prefix sums stay <= 0
        if plus < minus {
            word.push(Sign::Plus);
            grow(n, word, minus, plus + 1, out);
            word.pop();
        }
    }
    let mut out = Vec::new();
    grow(n, &mut Vec::with_capacity(2 * n), 0, 0, &mut out);
    if let Some(k) = k {
        out.retain(|s| s.classify().ok() == Some(SignatureClass::Plus { k }));
    }
    Ok(out)
}

/// `PP(2n, eps)`: every pair partition whose `tau` image is `s`, ordered
/// lexicographically by right indices.
pub fn enumerate_pp_eps(s: &Signature) -> Result<Vec<PairPartition>> {
    let n = s.require_plus()?;
    Error::guard("n", n, PP_MAX_N)?;
    let lefts = s.minus_positions();
    let rights = s.plus_positions();
    let mut used = vec![false; n];
    let mut partners = vec![0usize; n];
    let mut out = Vec::new();

    // assign partners from the largest left index down: left l_h then has
    // exactly 2h - l_h free rights to its right
    fn assign(
        h: usize,
        lefts: &[usize],
        rights: &[usize],
        used: &mut [bool],
        partners: &mut [usize],
        out: &mut Vec<PairPartition>,
    ) {
        if h == 0 {
            let pairs = lefts
                .iter()
                .copied()
                .zip(partners.iter().copied())
                .collect();
            out.push(PairPartition { pairs });
            return;
        }
        let l = lefts[h - 1];
        for (j, &r) in rights.iter().enumerate() {
            if r > l && !used[j] {
                used[j] = true;
                partners[h - 1] = r;
                assign(h - 1, lefts, rights, used, partners, out);
                used[j] = false;
            }
        }
    }
    assign(n, &lefts, &rights, &mut used, &mut partners, &mut out);
    out.sort_by(|a, b| a.rights().cmp(b.rights()));
    Ok(out)
}

/// The unique non-crossing element of `PP(2n, eps)`: each `-1` opens, each
/// `+1` closes the most recently opened position.
pub fn ncpp_counterpart(s: &Signature) -> Result<PairPartition> {
    s.require_plus()?;
    let mut stack = Vec::new();
    let mut pairs = Vec::with_capacity(s.len() / 2);
    for (i, sign) in s.word.iter().enumerate() {
        match sign {
            Sign::Minus => stack.push(i + 1),
            Sign::Plus => {
                let l = stack.pop().expect("plus class never closes an empty stack");
                pairs.push((l, i + 1));
            }
        }
    }
    pairs.sort_unstable();
    Ok(PairPartition { pairs })
}

/// Symmetric matrix of scalar products `g[i][j] = <f_i, f_j>` (0-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramMatrix<T> {
    entries: Vec<Vec<T>>,
}

impl<T: Ring> GramMatrix<T> {
    pub fn new(entries: Vec<Vec<T>>) -> Result<Self> {
        let dim = entries.len();
        for row in &entries {
            if row.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: row.len(),
                });
            }
        }
        for (i, row) in entries.iter().enumerate() {
            if let Some(j) = (0..i).find(|&j| row[j] != entries[j][i]) {
                return Err(Error::domain(format!(
                    "gram matrix not symmetric at ({i},{j})"
                )));
            }
        }
        Ok(GramMatrix { entries })
    }

    pub fn identity(dim: usize) -> Self {
        let entries = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| if i == j { T::one() } else { T::zero() })
                    .collect()
            })
            .collect();
        GramMatrix { entries }
    }

    pub fn all_ones(dim: usize) -> Self {
        GramMatrix {
            entries: vec![vec![T::one(); dim]; dim],
        }
    }

    /// Gram matrix of coordinate vectors under the standard inner product.
    pub fn from_vectors(vectors: &[Vec<T>]) -> Result<Self> {
        let dim = vectors.first().map_or(0, Vec::len);
        if let Some(v) = vectors.iter().find(|v| v.len() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: v.len(),
            });
        }
        let dot = |a: &[T], b: &[T]| {
            a.iter()
                .zip(b)
                .fold(T::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
        };
        let entries = vectors
            .iter()
            .map(|a| vectors.iter().map(|b| dot(a, b)).collect())
            .collect();
        Ok(GramMatrix { entries })
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.entries
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WickMode {
    /// Full Fock space: only the non-crossing counterpart contributes.
    Free,
    /// Symmetric Fock space: the whole `tau`-fiber contributes.
    Boson,
}

/// Vacuum moment `<Phi, b^{eps(1)}(f_1) ... b^{eps(m)}(f_m) Phi>` of the
/// free or symmetric Fock space, as a sum over pairings of products of
/// `<f_l, f_r>`.
pub fn wick_moment<T: Ring>(s: &Signature, gram: &GramMatrix<T>, mode: WickMode) -> Result<T> {
    if gram.dim() != s.len() {
        return Err(Error::DimensionMismatch {
            expected: s.len(),
            found: gram.dim(),
        });
    }
    if s.is_empty() || s.len() % 2 == 1 || !s.is_plus() {
        return Ok(T::zero());
    }
    let weight = |p: &PairPartition| {
        p.pairs().iter().fold(T::one(), |acc, &(l, r)| {
            acc * gram.get(l - 1, r - 1).clone()
        })
    };
    Ok(match mode {
        WickMode::Boson => enumerate_pp_eps(s)?
            .iter()
            .fold(T::zero(), |acc, p| acc + weight(p)),
        WickMode::Free => weight(&ncpp_counterpart(s)?),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StratumCount {
    pub k: usize,
    pub pp: usize,
    pub ncpp: usize,
}

/// `|PP_k(2n)|` and `|NCPP_k(2n)|` for every `k`, by exhaustive enumeration.
pub fn count_strata(n: usize) -> Result<Vec<StratumCount>> {
    let all = enumerate_pp(n)?;
    let mut counts: Vec<StratumCount> = (1..=n)
        .map(|k| StratumCount { k, pp: 0, ncpp: 0 })
        .collect();
    for p in &all {
        let c = &mut counts[p.k_class() - 1];
        c.pp += 1;
        if p.is_noncrossing() {
            c.ncpp += 1;
        }
    }
    Ok(counts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::semifactorial;
    use crate::trapezoid::{catalan_number, catalan_triangle};
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn pp(pairs: &[(usize, usize)]) -> PairPartition {
        PairPartition::new(pairs.to_vec()).unwrap()
    }

    fn sig(s: &str) -> Signature {
        s.parse().unwrap()
    }

    #[test]
    fn validation() {
        assert!(PairPartition::new(vec![(1, 2), (3, 4)]).is_ok());
        assert!(PairPartition::new(vec![(3, 4), (1, 2)]).is_err());
        assert!(PairPartition::new(vec![(2, 1)]).is_err());
        assert!(PairPartition::new(vec![(1, 2), (2, 3)]).is_err());
        assert!(PairPartition::new(vec![(1, 5), (2, 3)]).is_err());
        assert!(PairPartition::new(vec![]).is_err());
        assert_eq!(
            PairPartition::from_unordered([(4, 3), (1, 2)]).unwrap(),
            pp(&[(1, 2), (3, 4)])
        );
        assert_eq!(pp(&[(1, 3), (2, 4)]).by_right_index(), vec![(1, 3), (2, 4)]);
        assert_eq!(pp(&[(1, 4), (2, 3)]).by_right_index(), vec![(2, 3), (1, 4)]);
    }

    #[test]
    fn enumerate_small() {
        assert_eq!(enumerate_pp(1).unwrap(), vec![pp(&[(1, 2)])]);
        assert_eq!(enumerate_pp(2).unwrap().len(), 3);
        assert_eq!(enumerate_pp(3).unwrap().len(), 15);
        assert_eq!(enumerate_ncpp(1).unwrap().len(), 1);
        assert_eq!(enumerate_ncpp(2).unwrap().len(), 2);
        assert_eq!(enumerate_ncpp(3).unwrap().len(), 5);
        assert!(matches!(enumerate_pp(8), Err(Error::SizeGuard { .. })));
        assert!(matches!(enumerate_ncpp(9), Err(Error::SizeGuard { .. })));
        assert!(enumerate_pp(0).is_err());
    }

    #[test]
    fn enumeration_counts_and_order() {
        for n in 1..=6 {
            let all = enumerate_pp(n).unwrap();
            assert_eq!(BigInt::from(all.len()), semifactorial(n as u64));
            let keys: Vec<Vec<usize>> = all.iter().map(|p| p.rights().collect()).collect();
            assert!(
                keys.windows(2).all(|w| w[0] < w[1]),
                "n={n} not strictly r-lex"
            );
            let filtered: Vec<_> = all
                .into_iter()
                .filter(PairPartition::is_noncrossing)
                .collect();
            assert_eq!(filtered, enumerate_ncpp(n).unwrap());
            assert_eq!(BigInt::from(filtered.len()), catalan_number(n as u64));
        }
        assert_eq!(enumerate_ncpp(8).unwrap().len(), 1430);
    }

    #[test]
    fn noncrossing_examples() {
        assert!(pp(&[(1, 4), (2, 3)]).is_noncrossing());
        assert!(!pp(&[(1, 3), (2, 4)]).is_noncrossing());
        assert!(pp(&[(1, 2), (3, 4)]).is_noncrossing());
    }

    #[test]
    fn k_class_examples() {
        assert_eq!(pp(&[(1, 2), (3, 4)]).k_class(), 1);
        assert_eq!(pp(&[(1, 3), (2, 4)]).k_class(), 2);
        assert_eq!(pp(&[(1, 6), (2, 5), (3, 4)]).k_class(), 3);
    }

    #[test]
    fn tau_examples() {
        assert_eq!(pp(&[(1, 2)]).tau(), sig("-+"));
        assert_eq!(pp(&[(1, 3), (2, 4)]).tau(), sig("--++"));
        assert_eq!(pp(&[(1, 2), (3, 4)]).tau(), sig("-+-+"));
        assert_eq!(
            Signature::from_values(&[-1, -1, 1, 1]).unwrap(),
            sig("--++")
        );
        assert!(Signature::from_values(&[0]).is_err());
        assert!("-x".parse::<Signature>().is_err());
    }

    #[test]
    fn classify_examples() {
        assert_eq!(sig("-+").classify().unwrap(), SignatureClass::Plus { k: 1 });
        assert_eq!(sig("+-").classify().unwrap(), SignatureClass::Minus);
        assert_eq!(
            sig("--++").classify().unwrap(),
            SignatureClass::Plus { k: 2 }
        );
        assert_eq!(sig("--").classify().unwrap(), SignatureClass::Minus);
        assert!(sig("-+-").classify().is_err());
    }

    #[test]
    fn plus_signature_enumeration() {
        assert_eq!(
            enumerate_plus_signatures(2, None).unwrap(),
            vec![sig("--++"), sig("-+-+")]
        );
        assert_eq!(enumerate_plus_signatures(3, None).unwrap().len(), 5);
        assert_eq!(
            enumerate_plus_signatures(3, Some(3)).unwrap(),
            vec![sig("---+++")]
        );
        assert!(enumerate_plus_signatures(3, Some(4)).is_err());
        for n in 1..=8 {
            let all = enumerate_plus_signatures(n, None).unwrap();
            assert_eq!(BigInt::from(all.len()), catalan_number(n as u64));
            assert!(all.windows(2).all(|w| w[0] < w[1]));
            assert!(all.iter().all(Signature::is_plus));
        }
    }

    #[test]
    fn fiber_examples() {
        assert_eq!(
            enumerate_pp_eps(&sig("--++")).unwrap(),
            vec![pp(&[(1, 3), (2, 4)]), pp(&[(1, 4), (2, 3)])]
        );
        assert_eq!(
            enumerate_pp_eps(&sig("-+-+")).unwrap(),
            vec![pp(&[(1, 2), (3, 4)])]
        );
        let ladder = enumerate_pp_eps(&sig("---+++")).unwrap();
        assert_eq!(ladder.len(), 6);
        assert!(ladder.iter().all(|p| p.lefts().eq(1..=3)));
        assert!(enumerate_pp_eps(&sig("+-")).is_err());
    }

    #[test]
    fn counterpart_examples() {
        assert_eq!(
            ncpp_counterpart(&sig("--++")).unwrap(),
            pp(&[(1, 4), (2, 3)])
        );
        assert_eq!(
            ncpp_counterpart(&sig("-+-+")).unwrap(),
            pp(&[(1, 2), (3, 4)])
        );
        assert_eq!(
            ncpp_counterpart(&sig("---+++")).unwrap(),
            pp(&[(1, 6), (2, 5), (3, 4)])
        );
        assert!(ncpp_counterpart(&sig("+-+-")).is_err());
    }

    #[test]
    fn fiber_product_law_and_unique_noncrossing() {
        for n in 1..=5 {
            for s in enumerate_plus_signatures(n, None).unwrap() {
                let fiber = enumerate_pp_eps(&s).unwrap();
                let expected: usize = s
                    .minus_positions()
                    .iter()
                    .enumerate()
                    .map(|(h, &l)| 2 * (h + 1) - l)
                    .product();
                assert_eq!(fiber.len(), expected, "{s}");
                assert!(fiber.iter().all(|p| p.tau() == s));
                let nc: Vec<_> = fiber.iter().filter(|p| p.is_noncrossing()).collect();
                assert_eq!(nc, vec![&ncpp_counterpart(&s).unwrap()]);
            }
        }
    }

    #[test]
    fn suffix_count_laws() {
        for n in 1..=6 {
            for p in enumerate_pp(n).unwrap() {
                let lefts: Vec<usize> = p.lefts().collect();
                let rights: Vec<usize> = p.rights().collect();
                for (s, &ls) in lefts.iter().enumerate() {
                    let count = rights.iter().filter(|&&r| r >= ls).count();
                    assert!(count >= n - s, "{p} s={}", s + 1);
                }
                for q in 1..=2 * n {
                    let r = rights.iter().filter(|&&r| r >= q).count();
                    let l = lefts.iter().filter(|&&l| l >= q).count();
                    assert!(r >= l);
                }
                assert_eq!(lefts[0], 1);
                assert!(*lefts.last().unwrap() < 2 * n);
            }
        }
    }

    #[test]
    fn tau_image_and_bijection() {
        for n in 1..=6 {
            assert!(enumerate_pp(n).unwrap().iter().all(|p| p.tau().is_plus()));
            let mut images: Vec<Signature> = enumerate_ncpp(n)
                .unwrap()
                .iter()
                .map(PairPartition::tau)
                .collect();
            images.sort();
            assert_eq!(images, enumerate_plus_signatures(n, None).unwrap());
        }
    }

    #[test]
    fn restriction_closure() {
        for n in 1..=5 {
            for p in enumerate_ncpp(n).unwrap() {
                for mask in 1u32..(1 << n) {
                    let sub: Vec<(usize, usize)> = (0..n)
                        .filter(|h| mask >> h & 1 == 1)
                        .map(|h| p.pairs()[h])
                        .collect();
                    let ranked = PairPartition::from_ranked(&sub).unwrap();
                    assert!(ranked.is_noncrossing(), "{p} mask={mask:b}");
                }
            }
        }
    }

    #[test]
    fn strata() {
        let c3 = count_strata(3).unwrap();
        assert_eq!(c3.iter().map(|c| c.ncpp).collect::<Vec<_>>(), vec![2, 2, 1]);
        for n in 1..=6usize {
            let counts = count_strata(n).unwrap();
            assert_eq!(
                BigInt::from(counts[n - 1].pp),
                crate::exactalg::factorial(n as u64)
            );
            let total = counts.iter().map(|c| c.pp).sum::<usize>();
            assert_eq!(BigInt::from(total), semifactorial(n as u64));
            for c in &counts {
                let want = catalan_triangle(n as u64 - 1, (n - c.k) as i64).unwrap();
                assert_eq!(BigInt::from(c.ncpp), want, "n={n} k={}", c.k);
            }
        }
    }

    #[test]
    fn wick_examples() {
        let ones = GramMatrix::<BigRational>::all_ones(4);
        let one = BigRational::from_integer(1.into());
        assert_eq!(
            wick_moment(&sig("--++"), &ones, WickMode::Boson).unwrap(),
            &one + &one
        );
        assert_eq!(
            wick_moment(&sig("-+-+"), &ones, WickMode::Free).unwrap(),
            one
        );
        let ones2 = GramMatrix::<BigRational>::all_ones(2);
        for mode in [WickMode::Free, WickMode::Boson] {
            assert_eq!(
                wick_moment(&sig("+-"), &ones2, mode).unwrap(),
                BigRational::from_integer(0.into())
            );
        }
        let odd = GramMatrix::<BigRational>::all_ones(3);
        assert_eq!(
            wick_moment(&sig("-+-"), &odd, WickMode::Free).unwrap(),
            BigRational::from_integer(0.into())
        );
        assert!(matches!(
            wick_moment(&sig("-+"), &ones, WickMode::Free),
            Err(Error::DimensionMismatch { .. })
        ));
        let id = GramMatrix::<BigRational>::identity(4);
        assert_eq!(
            wick_moment(&sig("-+-+"), &id, WickMode::Free).unwrap(),
            BigRational::from_integer(0.into())
        );
    }

    #[test]
    fn wick_structural_boson_n2() {
        let rows = [[1, 2, 3, 5], [2, 1, 7, 11], [3, 7, 1, 13], [5, 11, 13, 1]];
        let entries: Vec<Vec<BigRational>> = rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&v| BigRational::from_integer(v.into()))
                    .collect()
            })
            .collect();
        let gram = GramMatrix::new(entries).unwrap();
        let expected = gram.get(0, 3).clone() * gram.get(1, 2).clone()
            + gram.get(0, 2).clone() * gram.get(1, 3).clone();
        assert_eq!(
            wick_moment(&sig("--++"), &gram, WickMode::Boson).unwrap(),
            expected
        );
    }

    #[test]
    fn wick_all_ones_counts() {
        for n in 1..=5 {
            let ones = GramMatrix::<BigRational>::all_ones(2 * n);
            for s in enumerate_plus_signatures(n, None).unwrap() {
                let boson = wick_moment(&s, &ones, WickMode::Boson).unwrap();
                let fiber = enumerate_pp_eps(&s).unwrap().len();
                assert_eq!(boson, BigRational::from_integer(fiber.into()));
                assert_eq!(
                    wick_moment(&s, &ones, WickMode::Free).unwrap(),
                    BigRational::from_integer(1.into())
                );
            }
        }
    }

    #[test]
    fn gram_validation() {
        let r = |v: i64| BigRational::from_integer(v.into());
        assert!(GramMatrix::new(vec![vec![r(1), r(2)], vec![r(3), r(1)]]).is_err());
        assert!(GramMatrix::new(vec![vec![r(1), r(2)]]).is_err());
        let g = GramMatrix::from_vectors(&[vec![r(1), r(2)], vec![r(3), r(-1)]]).unwrap();
        assert_eq!(g.rows(), &[vec![r(5), r(1)], vec![r(1), r(10)]]);
    }
}
