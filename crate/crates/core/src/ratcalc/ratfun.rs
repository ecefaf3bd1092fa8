use std::fmt;

use super::{Poly, Rat};
use crate::error::Error;

/// Reduced univariate rational function `num / den` in the deformation
/// parameter `t`.
///
/// Invariants: `den` is monic and nonzero, `gcd(num, den) = 1`, and the zero
/// function is stored as `0 / 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: Poly,
    den: Poly,
}

/// Which field operation [`rf_arith`] performs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl RatFun {
    pub fn new(num: Poly, den: Poly) -> Result<RatFun, Error> {
        if den.is_zero() {
            return Err(Error::DivisionByZeroFunction);
        }
        Ok(RatFun::reduce(num, den))
    }

    fn reduce(num: Poly, den: Poly) -> RatFun {
        if num.is_zero() {
            return RatFun::zero();
        }
        let g = num.gcd(&den);
        let (num, den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        let lead = den.leading().unwrap().clone();
        if lead.is_one() {
            RatFun { num, den }
        } else {
            let inv = lead.recip().unwrap();
            RatFun {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn zero() -> RatFun {
        RatFun {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> RatFun {
        RatFun::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> RatFun {
        RatFun {
            num: Poly::constant(c),
            den: Poly::one(),
        }
    }

    pub fn from_poly(p: Poly) -> RatFun {
        RatFun {
            num: p,
            den: Poly::one(),
        }
    }

    /// The function `t`.
    pub fn t() -> RatFun {
        RatFun::from_poly(Poly::linear(Rat::zero(), Rat::one()))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `Some(c)` when the function is the constant `c`.
    pub fn as_constant(&self) -> Option<Rat> {
        match (self.num.degree(), self.den.degree()) {
            (None, _) => Some(Rat::zero()),
            (Some(0), Some(0)) => Some(self.num.coeff(0)),
            _ => None,
        }
    }

    pub fn add(&self, other: &RatFun) -> RatFun {
        if self.den == other.den {
            return RatFun::reduce(self.num.add(&other.num), self.den.clone());
        }
        RatFun::reduce(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn sub(&self, other: &RatFun) -> RatFun {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RatFun) -> RatFun {
        RatFun::reduce(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn div(&self, other: &RatFun) -> Result<RatFun, Error> {
        if other.is_zero() {
            return Err(Error::DivisionByZeroFunction);
        }
        Ok(RatFun::reduce(
            self.num.mul(&other.den),
            self.den.mul(&other.num),
        ))
    }

    pub fn neg(&self) -> RatFun {
        RatFun {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn scale(&self, c: &Rat) -> RatFun {
        if c.is_zero() {
            return RatFun::zero();
        }
        RatFun {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Exact value at a point where the denominator does not vanish.
    pub fn eval(&self, t: &Rat) -> Result<Rat, Error> {
        let d = self.den.eval(t);
        if d.is_zero() {
            return Err(Error::PoleAtZero);
        }
        Ok(self.num.eval(t) / d)
    }

    /// `f(-t)`
    pub fn reflect(&self) -> RatFun {
        RatFun::reduce(self.num.reflect(), self.den.reflect())
    }

    /// Multiplicity of `t = 0` as a root of the reduced denominator.
    pub fn pole_order0(&self) -> usize {
        self.den.zero_order()
    }

    /// `(f(0), f'(0) / 2)` for a function smooth at `t = 0`.
    ///
    /// Along the line `v_ki = vbar_ki + t`, `v_kj = vbar_kj - t` this is the
    /// pair (evaluation at vbar, D-operator at vbar).
    pub fn d_pair(&self) -> Result<(Rat, Rat), Error> {
        if self.pole_order0() > 0 {
            return Err(Error::PoleAtZero);
        }
        let n0 = self.num.coeff(0);
        let n1 = self.num.coeff(1);
        let d0 = self.den.coeff(0);
        let d1 = self.den.coeff(1);
        let value = &n0 / &d0;
        let deriv = (&n1 * &d0 - &n0 * &d1) / (&d0 * &d0);
        Ok((value, deriv / Rat::from_int(2)))
    }
}

/// One linear factor `c + m t` of a coefficient function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearFactor {
    pub c: Rat,
    pub m: i64,
}

impl LinearFactor {
    pub fn new(c: Rat, m: i64) -> LinearFactor {
        LinearFactor { c, m }
    }

    pub fn is_identically_zero(&self) -> bool {
        self.c.is_zero() && self.m == 0
    }

    fn to_poly(&self) -> Poly {
        Poly::linear(self.c.clone(), Rat::from_int(self.m))
    }
}

/// Exact field arithmetic on reduced rational functions.
pub fn rf_arith(a: &RatFun, b: &RatFun, op: ArithOp) -> Result<RatFun, Error> {
    Ok(match op {
        ArithOp::Add => a.add(b),
        ArithOp::Sub => a.sub(b),
        ArithOp::Mul => a.mul(b),
        ArithOp::Div => a.div(b)?,
    })
}

/// `sign * prod(c + m t) / prod(c' + m' t)`, reduced.
///
/// Identical factors on both sides are cancelled before multiplying out, so
/// the gcd step only ever sees the genuinely distinct factors.
pub fn rf_from_linear_factors(
    num: &[LinearFactor],
    den: &[LinearFactor],
    sign: i64,
) -> Result<RatFun, Error> {
    if den.iter().any(LinearFactor::is_identically_zero) {
        return Err(Error::DegenerateFactor);
    }
    if num.iter().any(LinearFactor::is_identically_zero) {
        return Ok(RatFun::zero());
    }
    let mut den_left: Vec<&LinearFactor> = den.iter().collect();
    let mut num_left: Vec<&LinearFactor> = Vec::with_capacity(num.len());
    for f in num {
        if let Some(pos) = den_left.iter().position(|g| *g == f) {
            den_left.swap_remove(pos);
        } else {
            num_left.push(f);
        }
    }
    let mut n = Poly::constant(Rat::from_int(sign));
    for f in num_left {
        n = n.mul(&f.to_poly());
    }
    let mut d = Poly::one();
    for f in den_left {
        d = d.mul(&f.to_poly());
    }
    RatFun::new(n, d)
}

pub fn rf_pole_order0(f: &RatFun) -> usize {
    f.pole_order0()
}

pub fn rf_d_pair(f: &RatFun) -> Result<(Rat, Rat), Error> {
    f.d_pair()
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}
