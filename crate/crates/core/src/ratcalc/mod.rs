//! Exact rationals and univariate rational functions in the deformation
//! parameter `t`, with the evaluation / half-derivative pair at `t = 0`.

mod poly;
mod rat;
mod ratfun;

pub use poly::Poly;
pub use rat::Rat;
pub use ratfun::{
    rf_arith, rf_d_pair, rf_from_linear_factors, rf_pole_order0, ArithOp, LinearFactor, RatFun,
};
