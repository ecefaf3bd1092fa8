use crate::error::Error;
use crate::ratcalc::{rf_from_linear_factors, LinearFactor, Rat, RatFun};
use crate::tableau::{BaseVector, Shift, SingularPair};

use super::coeff::entry_form;

/// `gamma_{r s}` at `vbar + z` as `(value, D-value)`.
///
/// Row `r` is summed as a reduced rational function along the deformation so
/// that removable poles cancel. On the singular row the deformation is the
/// module's own line and the second component is the D-operator; on other
/// rows entries that collide are separated by `+u t` on the `u`-th entry,
/// which leaves the value unchanged and the D-value zero.
pub(crate) fn gamma_pair(
    r: usize,
    s: u32,
    v: &BaseVector,
    z: &Shift,
    pair: Option<SingularPair>,
) -> Result<(Rat, Rat), Error> {
    let on_singular_row = matches!(pair, Some(p) if p.k == r);
    let forms: Vec<LinearFactor> = if on_singular_row {
        (1..=r).map(|u| entry_form(v, z, r, u, pair)).collect()
    } else {
        let plain: Vec<Rat> = (1..=r).map(|u| v.entry_at(z, r, u)).collect();
        if let Some(value) = gamma_direct(r, s, &plain) {
            return Ok((value, Rat::zero()));
        }
        plain.into_iter().zip(1..).map(|(c, u)| LinearFactor::new(c, u)).collect()
    };
    let shift = LinearFactor::new(Rat::from_int(r as i64 - 1), 0);
    let mut total = RatFun::zero();
    for i in 0..r {
        let li = &forms[i];
        let base = LinearFactor::new(&li.c + &shift.c, li.m);
        let mut num: Vec<LinearFactor> = vec![base; s as usize];
        let mut den = Vec::with_capacity(r - 1);
        for (j, lj) in forms.iter().enumerate() {
            if j == i {
                continue;
            }
            let d = LinearFactor::new(&li.c - &lj.c, li.m - lj.m);
            num.push(LinearFactor::new(&d.c - Rat::one(), d.m));
            den.push(d);
        }
        total = total.add(&rf_from_linear_factors(&num, &den, 1)?);
    }
    if on_singular_row {
        total.d_pair()
    } else {
        Ok((total.eval(&Rat::zero())?, Rat::zero()))
    }
}

fn gamma_direct(r: usize, s: u32, entries: &[Rat]) -> Option<Rat> {
    let offset = Rat::from_int(r as i64 - 1);
    let mut total = Rat::zero();
    for (i, li) in entries.iter().enumerate() {
        let mut term = (li + &offset).pow(s);
        for (j, lj) in entries.iter().enumerate() {
            if i == j {
                continue;
            }
            let d = li - lj;
            if d.is_zero() {
                return None;
            }
            term = term * (&d - Rat::one()) / d;
        }
        total += &term;
    }
    Some(total)
}
