//! Exact symbolic computation of torus-equivariant motivic Chern classes.
//!
//! All arithmetic is exact: Laurent polynomials over Z[y], rational
//! expressions with factored denominators, rational-arithmetic linear
//! programming for Newton polytope questions. No floating point anywhere.
//!
//! # Canonical serialization
//!
//! Laurent polynomials print as ` + `-separated terms in ascending graded-lex
//! order of the exponent vector, each term as `(coeff)*v1^e1*...` with the
//! Z[y] coefficient in ascending y-degree, e.g. `(1+y)*a1^1*b1^-1`. Parsing
//! accepts exactly this grammar and round-trips bit-exactly.

pub mod coeff;
pub mod error;
pub mod flag;
pub mod limit;
pub mod matrix;
pub mod parse;
pub mod poly;
pub mod polytope;
pub mod psi;
pub mod ranks;
pub mod rational;
pub mod simplex;
pub mod vars;
pub mod ypoly;

pub use coeff::Coeff;
pub use error::Error;
pub use flag::{CompositionIndex, FixedPointClass, FlagShape, TangentData};
pub use limit::LimitValue;
pub use matrix::OrbitIndex;
pub use poly::{LambdaSign, LaurentPolynomial, Monomial};
pub use polytope::{ConvexPolytope, Direction};
pub use ranks::RankLocus;
pub use rational::RationalExpression;
pub use vars::{Block, VariableTable};
pub use ypoly::{RatPoly, YPoly};

/// Default integer scalar for the concrete aliases below.
pub type Int = i128;
/// Arbitrary-precision scalar for coefficient-growth-heavy workloads.
pub type BigInt = num_bigint::BigInt;

pub type Poly = LaurentPolynomial<Int>;
pub type BigPoly = LaurentPolynomial<BigInt>;
pub type YPolyI = YPoly<Int>;
