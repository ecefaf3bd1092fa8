//! Gelfand-Tsetlin tableaux, the base vector `vbar`, classification and the
//! canonical basis labels `Tab(w)`.

mod base;
mod shift;

pub use base::{
    canonicalize, classify, is_standard, tab, tau, BaseVector, Canonical, Classification,
    SingularPair, DEFAULT_MAX_N,
};
pub use shift::{distance, Kind, Shift, TabKey};
