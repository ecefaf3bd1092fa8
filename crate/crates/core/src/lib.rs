//! Exact Gelfand-Tsetlin modules of `gl(n)`.
//!
//! Three families share one set of formulas: finite-dimensional modules
//! `L(lambda)` on standard tableaux, generic modules `V(T(v))`, and 1-singular
//! modules `V(T(vbar))` spanned by regular tableaux `T(vbar + w)` and
//! derivative tableaux `DT(vbar + w)`. Coefficients are rational functions of
//! the tableau entries; on the singular family they are evaluated along the
//! line `v_ki = vbar_ki + t`, `v_kj = vbar_kj - t`, where the D-operator is half
//! the `t`-derivative at `t = 0`.
//!
//! - [`ratcalc`]: exact rationals and rational functions in `t`.
//! - [`tableau`]: base vectors, shifts and canonical basis labels.
//! - [`action`]: generators of `gl(n)` and of the Gelfand-Tsetlin subalgebra.
//! - [`structure`]: Omega sets, subquotient bases, separation, reachability
//!   and irreducibility verdicts.

pub mod action;
pub mod error;
pub mod ratcalc;
pub mod structure;
pub mod tableau;

pub use error::{Error, Result};
