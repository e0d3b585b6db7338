//! Exact symbolic engine for the multiparameter quantum Minkowski flag
//! algebra: Laurent-polynomial coefficients, normal ordering, specialization,
//! conjugation, classical Maxwell operators and their deformed skeleton.
//!
//! Everything is generic over a [`scalar::Scalar`]; the aliases below fix
//! exact big rationals.

pub mod classical;
pub mod coeff;
pub mod flag;
pub mod parse;
pub mod qops;
pub mod repr;
pub mod scalar;
pub mod verify;

use num_complex::Complex;
use num_rational::BigRational;

pub type Rational = BigRational;
pub type Gaussian = Complex<BigRational>;
pub type Laurent = coeff::LaurentPoly<Rational>;
pub type QPoly = flag::NCPoly<Rational>;
pub type QWordPoly = flag::WordPoly<Rational>;
pub type Algebra = flag::FlagAlgebra<Rational>;
pub type Rules = flag::RuleTable<Rational>;
pub type Operator = qops::LinearOperator<Rational>;
pub type Triple = qops::OperatorTriple<Rational>;
pub type Spin = classical::SpinPoly<Gaussian>;
pub type DiffElem = classical::DiffRingElem<Gaussian>;
