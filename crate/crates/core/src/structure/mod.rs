//! Omega sets, window bases, separation, reachability and verdicts.
//!
//! Bases here are cut down to a finite [`Window`] of shifts; reachability
//! claims are only trusted in its interior.

mod audit;
mod bases;
mod omega;
mod reach;
mod separator;
mod verdict;
mod window;

pub use audit::{
    generator_edges, omega_drop_audit, ClassifiedDrop, DropConfig, DropEdge, DropReport,
    DropTargetCheck,
};
pub use bases::{basis_i_window, basis_ik_window, basis_n_window};
pub use omega::{omega_k_plus, omega_plus, OmegaSet};
pub use reach::{edge_generators, reach_closure, reach_edges, ReachGraph};
pub use separator::{separator, SeparatorAtom, SeparatorRecipe};
pub use verdict::{irreducibility_verdict, Status, Verdict, VerdictAudit};
pub use window::Window;
