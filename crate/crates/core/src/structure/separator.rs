use serde::{Deserialize, Serialize};

use crate::action::{GenLabel, GtModule, ModVec};
use crate::error::Error;
use crate::ratcalc::Rat;
use crate::tableau::{tau, Shift};

/// One factor of a separating element of the Gelfand-Tsetlin subalgebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "atom")]
pub enum SeparatorAtom {
    /// `scalar * C_rs(center)^exponent`
    Power {
        scalar: Rat,
        r: usize,
        s: usize,
        center: Shift,
        exponent: u32,
    },
    /// `scalar * (1 + coeff * C_rs(center))`
    Affine {
        scalar: Rat,
        coeff: Rat,
        r: usize,
        s: usize,
        center: Shift,
    },
}

impl SeparatorAtom {
    fn apply(&self, module: &GtModule, vec: &ModVec) -> Result<ModVec, Error> {
        match self {
            SeparatorAtom::Power {
                scalar,
                r,
                s,
                center,
                exponent,
            } => {
                let g = GenLabel::shifted(*r, *s, center.clone());
                let mut cur = vec.clone();
                for _ in 0..*exponent {
                    cur = module.apply(&g, &cur)?;
                }
                Ok(cur.scale(scalar))
            }
            SeparatorAtom::Affine {
                scalar,
                coeff,
                r,
                s,
                center,
            } => {
                let g = GenLabel::shifted(*r, *s, center.clone());
                let mut cur = vec.clone();
                cur.add_scaled(&module.apply(&g, vec)?, coeff);
                Ok(cur.scale(scalar))
            }
        }
    }
}

/// An element `gamma_z^w` that kills the Gelfand-Tsetlin subspace of `z` and
/// fixes `Tab(w)`; atoms are listed left to right as a product.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparatorRecipe {
    pub z: Shift,
    pub w: Shift,
    /// The separating index pair: first `(r, s)` with distinct `gamma_rs`.
    pub r: usize,
    pub s: usize,
    /// `gamma_rs(vbar + w) - gamma_rs(vbar + z)`
    pub a: Rat,
    pub atoms: Vec<SeparatorAtom>,
}

impl SeparatorRecipe {
    /// Applies the product, rightmost atom first.
    pub fn apply(&self, module: &GtModule, vec: &ModVec) -> Result<ModVec, Error> {
        let mut cur = vec.clone();
        for atom in self.atoms.iter().rev() {
            cur = atom.apply(module, &cur)?;
        }
        Ok(cur)
    }
}

/// Builds `gamma_z^w` for `w` outside `{z, tau(z)}`.
///
/// With `d_rs = D(gamma_rs(v+w))` and `d_k2 = D(gamma_k2(v+w))`:
/// `C_rs(z)^2 / a^2` when `Tab(w)` is regular or `d_rs = 0`, and otherwise
/// `(1 - 2 d_rs C_k2(w) / (a d_k2)) C_rs(z)^2 / a^2`.
pub fn separator(z: &Shift, w: &Shift, module: &GtModule) -> Result<SeparatorRecipe, Error> {
    let n = module.n();
    let pair = module.pair();
    if w == z || pair.is_some_and(|p| *w == tau(z, p)) {
        return Err(Error::NotSeparable(format!("{w} lies in the orbit of {z}")));
    }
    let mut found = None;
    'outer: for r in 1..=n {
        for s in 1..=r {
            let gw = module.gamma_eval(r, s, w)?;
            let gz = module.gamma_eval(r, s, z)?;
            if gw != gz {
                found = Some((r, s, gw - gz));
                break 'outer;
            }
        }
    }
    let Some((r, s, a)) = found else {
        return Err(Error::NotSeparable(format!(
            "{z} and {w} share every gamma value"
        )));
    };
    let inv_a2 = (&a * &a).recip()?;
    let square = SeparatorAtom::Power {
        scalar: inv_a2,
        r,
        s,
        center: z.clone(),
        exponent: 2,
    };
    let mut atoms = vec![square];
    if module.tab(w).is_derivative() {
        let p = pair.expect("derivative labels need a singular pair");
        let d_rs = module.gamma_dvbar(r, s, w)?;
        if !d_rs.is_zero() {
            let d_k2 = module.gamma_dvbar(p.k, 2, w)?;
            if d_k2.is_zero() {
                return Err(Error::NotSeparable(format!(
                    "D(gamma_{}2) vanishes at {w}",
                    p.k
                )));
            }
            let coeff = -(Rat::from_int(2) * &d_rs) / (&a * &d_k2);
            atoms.insert(
                0,
                SeparatorAtom::Affine {
                    scalar: Rat::one(),
                    coeff,
                    r: p.k,
                    s: 2,
                    center: w.clone(),
                },
            );
        }
    }
    Ok(SeparatorRecipe {
        z: z.clone(),
        w: w.clone(),
        r,
        s,
        a,
        atoms,
    })
}
