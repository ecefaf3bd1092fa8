use serde::{Deserialize, Serialize};

use super::omega::omega_plus;
use super::reach::ReachGraph;
use super::window::Window;
use crate::action::{Family, GtModule};
use crate::error::Error;
use crate::tableau::{Shift, TabKey};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    Irreducible,
    Reducible,
}

/// Empirical check of a verdict by breadth-first search inside the window.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictAudit {
    pub start: TabKey,
    pub closure_size: usize,
    pub interior_size: usize,
    /// An interior key missing from the closure of `start`, preferring the
    /// smallest `|Omega+|`.
    pub omitted: Option<TabKey>,
    /// Whether the audit agrees with the status: full interior coverage for
    /// irreducible modules, an omitted interior key for reducible ones.
    pub consistent: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub status: Status,
    pub witness: Option<Shift>,
    pub witness_omega: usize,
    pub neighbor_integral_pairs: Vec<(usize, usize, usize)>,
    pub audit: VerdictAudit,
}

/// Irreducible exactly when no `vbar_rs - vbar_{r-1,t}` is an integer.
///
/// For reducible modules the witness is the window shift with the largest
/// `|Omega+|` (lexicographically first on ties); the audit confirms that its
/// closure misses part of the window interior. For irreducible modules the
/// audit starts at the window center and must cover the interior.
pub fn irreducibility_verdict(module: &GtModule, win: &Window) -> Result<Verdict, Error> {
    if module.family() == Family::Finite {
        return Err(Error::FamilyMismatch {
            expected: "generic or singular".into(),
            found: "finite".into(),
        });
    }
    let v = module.base();
    let pairs = v.neighbor_integral_pairs();
    let keys = win.keys(module);
    let (status, start, witness, witness_omega) = if pairs.is_empty() {
        (Status::Irreducible, module.tab(&win.center), None, 0)
    } else {
        let mut best: Option<(usize, &TabKey)> = None;
        for key in &keys {
            let size = omega_plus(key, v).len();
            if best.map_or(true, |(b, _)| size > b) {
                best = Some((size, key));
            }
        }
        let (size, key) = best.expect("windows are never empty");
        (Status::Reducible, key.clone(), Some(key.shift.clone()), size)
    };
    let mut graph = ReachGraph::new(module, win);
    let closure = graph.closure(&start)?;
    let interior: Vec<&TabKey> = keys.iter().filter(|k| win.in_interior(k)).collect();
    let omitted = interior
        .iter()
        .filter(|k| !closure.contains(**k))
        .min_by_key(|k| omega_plus(k, v).len())
        .map(|k| (*k).clone());
    let consistent = match status {
        Status::Irreducible => omitted.is_none(),
        Status::Reducible => omitted.is_some(),
    };
    Ok(Verdict {
        status,
        witness,
        witness_omega,
        neighbor_integral_pairs: pairs,
        audit: VerdictAudit {
            start,
            closure_size: closure.len(),
            interior_size: interior.len(),
            omitted,
            consistent,
        },
    })
}
