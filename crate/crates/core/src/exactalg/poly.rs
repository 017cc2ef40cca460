use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// A univariate polynomial in `q`; `coeffs[i]` is the coefficient of `q^i`.
///
/// Always kept in canonical form: no trailing zero coefficient, and the zero
/// polynomial has no coefficients at all. Structural equality is therefore
/// value equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Clone + Zero + PartialEq> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `c * q^deg`
    pub fn monomial(c: T, deg: usize) -> Self {
        let mut coeffs = vec![T::zero(); deg + 1];
        coeffs[deg] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }
}

impl<T: Clone + Zero + One + PartialEq> Poly<T> {
    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::monomial(T::one(), 1)
    }
}

impl<T> Poly<T>
where
    T: Clone + Zero + PartialEq + Mul<Output = T>,
{
    /// Horner evaluation at `x`.
    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }
}

impl<T: Clone + Zero + PartialEq> Zero for Poly<T> {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Clone + Zero + One + PartialEq> One for Poly<T> {
    fn one() -> Self {
        Self::constant(T::one())
    }
}

impl<T: Clone + Zero + PartialEq + From<BigInt>> From<BigInt> for Poly<T> {
    fn from(n: BigInt) -> Self {
        Self::constant(T::from(n))
    }
}

impl<'a, T: Clone + Zero + PartialEq> Add<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;

    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len)
            .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a.clone() + b.clone(),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Poly::new(coeffs)
    }
}

impl<'a, T> Sub<&'a Poly<T>> for &'a Poly<T>
where
    T: Clone + Zero + PartialEq + Sub<Output = T>,
{
    type Output = Poly<T>;

    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len)
            .map(|i| {
                let a = self.coeffs.get(i).cloned().unwrap_or_else(T::zero);
                let b = rhs.coeffs.get(i).cloned().unwrap_or_else(T::zero);
                a - b
            })
            .collect();
        Poly::new(coeffs)
    }
}

impl<'a, T> Mul<&'a Poly<T>> for &'a Poly<T>
where
    T: Clone + Zero + PartialEq + Mul<Output = T>,
{
    type Output = Poly<T>;

    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(coeffs)
    }
}

impl<T: Clone + Zero + PartialEq + Neg<Output = T>> Neg for Poly<T> {
    type Output = Poly<T>;

    fn neg(self) -> Poly<T> {
        Poly::new(self.coeffs.into_iter().map(Neg::neg).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident, $($bound:tt)*) => {
        impl<T: Clone + Zero + PartialEq + $($bound)*> $tr for Poly<T> {
            type Output = Poly<T>;

            fn $method(self, rhs: Poly<T>) -> Poly<T> {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add, Add<Output = T>);
forward_owned!(Sub, sub, Sub<Output = T>);
forward_owned!(Mul, mul, Mul<Output = T>);

impl<T: Clone + Zero + PartialEq> Sum for Poly<T> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Poly::zero(), |acc, p| &acc + &p)
    }
}

impl<'a, T: Clone + Zero + PartialEq> Sum<&'a Poly<T>> for Poly<T> {
    fn sum<I: Iterator<Item = &'a Poly<T>>>(iter: I) -> Self {
        iter.fold(Poly::zero(), |acc, p| &acc + p)
    }
}

/// Ascending powers, e.g. `5+5q+q^2`, `1-q`, `(1/2)+(3/2)q`.
impl<T: fmt::Display + Zero + One + PartialEq + Clone> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let raw = c.to_string();
            let (neg, mag) = match raw.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, raw),
            };
            if neg {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            let mag = if mag.contains('/') {
                format!("({mag})")
            } else {
                mag
            };
            match i {
                0 => f.write_str(&mag)?,
                _ => {
                    if mag != "1" {
                        f.write_str(&mag)?;
                    }
                    f.write_str("q")?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
