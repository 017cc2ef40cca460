//! Seeded random exact values for property checks. Every caller passes its
//! own seed so reports are reproducible byte for byte.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactalg::Poly;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Numerator in `-9..=9`, denominator in `1..=6`.
pub fn rational<R: Rng>(rng: &mut R) -> BigRational {
    BigRational::new(
        BigInt::from(rng.gen_range(-9i64..=9)),
        BigInt::from(rng.gen_range(1i64..=6)),
    )
}

/// Like [`rational`] but never zero.
pub fn nonzero_rational<R: Rng>(rng: &mut R) -> BigRational {
    loop {
        let r = rational(rng);
        if r != BigRational::from_integer(0.into()) {
            return r;
        }
    }
}

/// Random polynomial of degree at most `max_degree` with [`rational`]
/// coefficients.
pub fn qpoly<R: Rng>(rng: &mut R, max_degree: usize) -> Poly<BigRational> {
    Poly::new((0..=max_degree).map(|_| rational(rng)).collect())
}
