use std::collections::BTreeSet;

use super::omega::{omega_k_plus, omega_of_shift, omega_plus};
use super::window::Window;
use crate::action::{Family, GtModule};
use crate::error::Error;
use crate::tableau::{Shift, TabKey};

fn require_generic(module: &GtModule) -> Result<(), Error> {
    if module.family() != Family::Generic {
        return Err(Error::FamilyMismatch {
            expected: "generic".into(),
            found: module.family().name().into(),
        });
    }
    Ok(())
}

/// Window part of the submodule generated by `T(vbar + w0)` in a generic
/// module: keys whose `Omega+` contains `Omega+(T(w0))`.
pub fn basis_n_window(
    w0: &Shift,
    module: &GtModule,
    win: &Window,
) -> Result<BTreeSet<TabKey>, Error> {
    require_generic(module)?;
    let v = module.base();
    let target = omega_of_shift(w0, v);
    Ok(win
        .keys(module)
        .into_iter()
        .filter(|k| target.is_subset(&omega_plus(k, v)))
        .collect())
}

/// Window part of the irreducible subquotient containing `T(vbar + w0)` in a
/// generic module: keys with the same `Omega+`.
pub fn basis_i_window(
    w0: &Shift,
    module: &GtModule,
    win: &Window,
) -> Result<BTreeSet<TabKey>, Error> {
    require_generic(module)?;
    let v = module.base();
    let target = omega_of_shift(w0, v);
    Ok(win
        .keys(module)
        .into_iter()
        .filter(|k| omega_plus(k, v) == target)
        .collect())
}

/// Window part of `I_k(key0)` in a 1-singular module whose rows `k+1..n`
/// have no integral difference with the row below.
pub fn basis_ik_window(
    key0: &TabKey,
    module: &GtModule,
    win: &Window,
) -> Result<BTreeSet<TabKey>, Error> {
    let Some(pair) = module.pair() else {
        return Err(Error::FamilyMismatch {
            expected: "singular".into(),
            found: module.family().name().into(),
        });
    };
    let v = module.base();
    if let Some(&(r, s, t)) = v.neighbor_integral_pairs().iter().find(|p| p.0 > pair.k) {
        return Err(Error::HypothesisViolated(format!(
            "vbar_{r}{s} - vbar_{}{t} is an integer with {r} > k = {}",
            r - 1,
            pair.k
        )));
    }
    let target = omega_k_plus(key0, v, pair.k);
    Ok(win
        .keys(module)
        .into_iter()
        .filter(|k| omega_k_plus(k, v, pair.k) == target)
        .collect())
}
