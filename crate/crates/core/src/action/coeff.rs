use crate::error::Error;
use crate::ratcalc::{rf_from_linear_factors, LinearFactor, Poly, Rat, RatFun};
use crate::tableau::{classify, BaseVector, Classification, Shift, SingularPair};

/// Entry `(vbar + z)_rs` as `c + m t`; the deformation puts `+t` on `(k, i)`
/// and `-t` on `(k, j)`.
pub(crate) fn entry_form(
    v: &BaseVector,
    z: &Shift,
    r: usize,
    s: usize,
    deform: Option<SingularPair>,
) -> LinearFactor {
    let m = match deform {
        Some(p) if r == p.k && s == p.i => 1,
        Some(p) if r == p.k && s == p.j => -1,
        _ => 0,
    };
    LinearFactor::new(v.entry_at(z, r, s), m)
}

fn diff(a: &LinearFactor, b: &LinearFactor) -> LinearFactor {
    LinearFactor::new(&a.c - &b.c, a.m - b.m)
}

/// Which Gelfand-Tsetlin generator a coefficient belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) enum Step {
    /// `E_{r,r+1}`: raises an entry of row `r`.
    Raise(usize),
    /// `E_{r+1,r}`: lowers an entry of row `r`.
    Lower(usize),
    /// `E_{rr}`
    Diagonal(usize),
}

impl Step {
    pub(crate) fn from_indices(l: usize, m: usize, n: usize) -> Result<Step, Error> {
        let bad = || Error::InvalidGenerator(format!("E({l},{m}) is not a GT generator of gl({n})"));
        if l == 0 || m == 0 || l > n || m > n {
            return Err(bad());
        }
        if m == l + 1 {
            Ok(Step::Raise(l))
        } else if l == m + 1 {
            Ok(Step::Lower(m))
        } else if l == m {
            Ok(Step::Diagonal(l))
        } else {
            Err(bad())
        }
    }

    /// Row whose entries index the summands.
    pub(crate) fn row(&self) -> usize {
        match *self {
            Step::Raise(r) | Step::Lower(r) | Step::Diagonal(r) => r,
        }
    }
}

/// Coefficient of the `s`-th summand of a Gelfand-Tsetlin generator at `vbar + z`.
pub(crate) fn coeff_fn(
    step: Step,
    s: usize,
    v: &BaseVector,
    z: &Shift,
    deform: Option<SingularPair>,
) -> Result<RatFun, Error> {
    let x = |r: usize, u: usize| entry_form(v, z, r, u, deform);
    match step {
        Step::Diagonal(r) => {
            let mut c = Rat::from_int(r as i64 - 1);
            let mut m = 0i64;
            for u in 1..=r {
                let e = x(r, u);
                c += &e.c;
                m += e.m;
            }
            for u in 1..r {
                let e = x(r - 1, u);
                c -= &e.c;
                m -= e.m;
            }
            Ok(RatFun::from_poly(Poly::linear(c, Rat::from_int(m))))
        }
        Step::Raise(r) | Step::Lower(r) => {
            if s == 0 || s > r {
                return Err(Error::InvalidGenerator(format!("summand {s} outside row {r}")));
            }
            let xs = x(r, s);
            let den: Vec<LinearFactor> = (1..=r).filter(|&u| u != s).map(|u| diff(&xs, &x(r, u))).collect();
            match step {
                Step::Raise(_) => {
                    let num: Vec<LinearFactor> = (1..=r + 1).map(|u| diff(&xs, &x(r + 1, u))).collect();
                    rf_from_linear_factors(&num, &den, -1)
                }
                _ => {
                    let num: Vec<LinearFactor> = (1..r).map(|u| diff(&xs, &x(r - 1, u))).collect();
                    rf_from_linear_factors(&num, &den, 1)
                }
            }
        }
    }
}

/// All summands `(coefficient, target shift)` of a generator applied to
/// `T(v + z)`; the targets are `z + sigma(eps)` for the transpositions
/// `sigma = (1, s)` of the shifted row.
pub(crate) fn summands(
    step: Step,
    v: &BaseVector,
    z: &Shift,
    deform: Option<SingularPair>,
) -> Result<Vec<(RatFun, Shift)>, Error> {
    match step {
        Step::Diagonal(_) => Ok(vec![(coeff_fn(step, 1, v, z, deform)?, z.clone())]),
        Step::Raise(r) => (1..=r)
            .map(|s| Ok((coeff_fn(step, s, v, z, deform)?, z.bumped(r, s, 1))))
            .collect(),
        Step::Lower(r) => (1..=r)
            .map(|s| Ok((coeff_fn(step, s, v, z, deform)?, z.bumped(r, s, -1))))
            .collect(),
    }
}

/// Classical Gelfand-Tsetlin coefficient of the `s`-th summand of `E_{l m}`
/// at `vbar + z`, as a function of the deformation parameter `t`.
///
/// `(l, m)` must be `(r, r+1)`, `(r+1, r)` or `(r, r)` and `1 <= s <= r`.
/// With `deform` the singular pair of a 1-singular `vbar` moves along
/// `v_ki = vbar_ki + t`, `v_kj = vbar_kj - t`; otherwise the result is constant.
pub fn coeff_e(
    l: usize,
    m: usize,
    s: usize,
    v: &BaseVector,
    z: &Shift,
    deform: bool,
) -> Result<RatFun, Error> {
    let step = Step::from_indices(l, m, v.n())?;
    if s == 0 || s > step.row() {
        return Err(Error::InvalidGenerator(format!("summand {s} outside row {}", step.row())));
    }
    let pair = match (deform, classify(v)) {
        (true, Classification::OneSingular(p)) => Some(p),
        _ => None,
    };
    coeff_fn(step, s, v, z, pair)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratcalc::Rat;

    fn rows(spec: &[&[&str]]) -> BaseVector {
        let rows: Vec<Vec<Rat>> = spec
            .iter()
            .map(|row| row.iter().map(|x| x.parse().unwrap()).collect())
            .collect();
        BaseVector::from_rows(&rows).unwrap()
    }

    #[test]
    fn gl2_raising_coefficient() {
        // top row (1, -1), v_11 = 0: -(0 - 1)(0 + 1) = 1
        let v = BaseVector::finite(&[Rat::one(), Rat::from_int(-1)]).unwrap();
        let z: Shift = "-1".parse().unwrap();
        let c = coeff_e(1, 2, 1, &v, &z, false).unwrap();
        assert_eq!(c, RatFun::one());
    }

    #[test]
    fn diagonal_coefficient_formula() {
        let v = rows(&[&["1/2", "1/3", "1/5"], &["1/7", "2/9"], &["3/11"]]);
        let z: Shift = "2,-1|4".parse().unwrap();
        for r in 1..=3usize {
            let mut expected = Rat::from_int(r as i64 - 1);
            for u in 1..=r {
                expected += &v.entry_at(&z, r, u);
            }
            for u in 1..r {
                expected -= &v.entry_at(&z, r - 1, u);
            }
            for s in 1..=r {
                let c = coeff_e(r, r, s, &v, &z, false).unwrap();
                assert_eq!(c.as_constant(), Some(expected.clone()));
            }
        }
    }

    #[test]
    fn singular_denominator_has_2t() {
        let v = rows(&[&["1/2", "1/3", "1/5"], &["1/7", "1/7"], &["3/11"]]);
        let z = Shift::zero(3);
        let c = coeff_e(2, 3, 1, &v, &z, true).unwrap();
        assert_eq!(c.pole_order0(), 1);
        let undeformed = coeff_e(2, 3, 1, &v, &z, false);
        assert_eq!(undeformed, Err(Error::DegenerateFactor));
    }

    #[test]
    fn non_gt_generator_rejected() {
        let v = rows(&[&["1/2", "1/3", "1/5"], &["1/7", "2/9"], &["3/11"]]);
        assert!(coeff_e(1, 3, 1, &v, &Shift::zero(3), false).is_err());
        assert!(coeff_e(2, 3, 3, &v, &Shift::zero(3), false).is_err());
    }
}
