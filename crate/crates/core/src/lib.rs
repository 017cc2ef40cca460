//! Exact Catalan trapezoids, the Catalan's triangle system, pair-partition
//! combinatorics and a symbolic (q,2)-Fock space simulator.
//!
//! Everything is generic over an exact scalar [`exactalg::Ring`]; the
//! aliases below fix the concrete types used by the command line.

pub mod cli;
pub mod cts;
pub mod error;
pub mod exactalg;
pub mod fock;
pub mod partitions;
pub mod report;
pub mod sampling;
pub mod trapezoid;
pub mod verify;

pub use error::{Error, Result};

pub type Integer = num_bigint::BigInt;
pub type Rational = num_rational::BigRational;
pub type QPolynomial = exactalg::Poly<Rational>;
pub type RationalTable = cts::TriangleTable<Rational>;
pub type QPolynomialTable = cts::TriangleTable<QPolynomial>;
pub type RationalGram = partitions::GramMatrix<Rational>;
pub type QFockState = fock::FockState<Rational>;
pub type QFockSpace = fock::FockSpace<Rational>;
