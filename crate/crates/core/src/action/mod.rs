//! Action of `gl(n)` and of the Gelfand-Tsetlin subalgebra on the finite,
//! generic and 1-singular families.

mod coeff;
mod gamma;
mod modvec;
mod module;

pub use coeff::coeff_e;
pub use modvec::ModVec;
pub use module::{Family, GenLabel, GtModule};

use crate::error::Error;
use crate::ratcalc::Rat;
use crate::tableau::{BaseVector, Shift, TabKey};

fn e_indices(g: &GenLabel) -> Result<(usize, usize), Error> {
    match g {
        GenLabel::E { r, s } => Ok((*r, *s)),
        other => Err(Error::InvalidGenerator(format!("{other} is not a GT generator"))),
    }
}

pub fn act_finite(g: &GenLabel, key: &TabKey, v: &BaseVector) -> Result<ModVec, Error> {
    let (r, s) = e_indices(g)?;
    GtModule::new(v.clone())?.act_finite(r, s, key)
}

pub fn act_generic(g: &GenLabel, key: &TabKey, v: &BaseVector) -> Result<ModVec, Error> {
    let (r, s) = e_indices(g)?;
    GtModule::new(v.clone())?.act_generic(r, s, key)
}

pub fn act_singular(g: &GenLabel, key: &TabKey, v: &BaseVector) -> Result<ModVec, Error> {
    let (r, s) = e_indices(g)?;
    GtModule::new(v.clone())?.act_singular(r, s, key)
}

pub fn act_gamma(c: &GenLabel, key: &TabKey, v: &BaseVector) -> Result<ModVec, Error> {
    GtModule::new(v.clone())?.act_gamma(c, key)
}

pub fn gamma_eval(r: usize, s: usize, v: &BaseVector, z: &Shift) -> Result<Rat, Error> {
    GtModule::new(v.clone())?.gamma_eval(r, s, z)
}

pub fn gamma_dvbar(r: usize, s: usize, v: &BaseVector, z: &Shift) -> Result<Rat, Error> {
    let m = GtModule::new(v.clone())?;
    if m.pair().is_none() {
        return Err(Error::FamilyMismatch {
            expected: "singular".into(),
            found: m.family().name().into(),
        });
    }
    m.gamma_dvbar(r, s, z)
}
