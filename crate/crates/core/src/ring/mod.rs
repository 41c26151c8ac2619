//! Exact arithmetic over the integers in formal indeterminates.

mod monomial;
mod poly;
mod rational;
mod series;
mod var;

pub use monomial::Monomial;
pub use poly::{mono_bindings, Bindings, Int, LaurentPoly, SubstituteError, Term};
pub use rational::{RationalError, RationalFn};
pub use series::{expand_series, Regime, SeriesError};
pub use var::{Alphabet, Var, VarKind};
