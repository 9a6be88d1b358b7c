//! Exact arithmetic over ℚ and ℚ[t]: scalars, dense polynomials, rational
//! functions, linear systems, and the text syntax shared by all of them.

mod linsolve;
mod poly;
mod ratfunc;
mod rational;
mod ring;
pub mod text;

pub use linsolve::{LinearSystem, Solution, SolveOutcome};
pub use poly::{Poly, QPoly, TxPoly, Var};
pub use ratfunc::RatFunc;
pub use rational::{binomial, frac, rat, Rational};
pub use ring::{ExactDivision, Field, Ring};
pub use text::{parse_poly, parse_ratfunc, parse_tx_poly};
