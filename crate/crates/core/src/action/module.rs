use std::collections::HashMap;
use std::fmt;
use std::sync::RwLock;

use serde::{Deserialize, Serialize};

use super::coeff::{summands, Step};
use super::gamma::gamma_pair;
use super::ModVec;
use crate::error::Error;
use crate::ratcalc::{Rat, RatFun};
use crate::tableau::{
    canonicalize, classify, is_standard, tab, BaseVector, Canonical, Classification, Kind, Shift,
    SingularPair, TabKey,
};

/// Which of the three module families a base vector realizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family")]
pub enum Family {
    Finite,
    Generic,
    Singular(SingularPair),
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Finite => "finite",
            Family::Generic => "generic",
            Family::Singular(_) => "singular",
        }
    }
}

/// An element of `gl(n)` or of the Gelfand-Tsetlin subalgebra.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum GenLabel {
    /// `E_rs` with `|r - s| <= 1`.
    E { r: usize, s: usize },
    /// `E_ij` for any `i != j`, realized through commutators.
    GeneralE { i: usize, j: usize },
    /// The central element `c_mk` of `U(gl(m))`.
    Casimir { m: usize, k: usize },
    /// `C_rs(z) = c_rs - gamma_rs(vbar + z)`.
    Shifted { r: usize, s: usize, center: Shift },
}

impl GenLabel {
    pub fn e(r: usize, s: usize) -> GenLabel {
        GenLabel::E { r, s }
    }

    pub fn casimir(m: usize, k: usize) -> GenLabel {
        GenLabel::Casimir { m, k }
    }

    pub fn shifted(r: usize, s: usize, center: Shift) -> GenLabel {
        GenLabel::Shifted { r, s, center }
    }

    pub fn validate(&self, n: usize) -> Result<(), Error> {
        let ok = match self {
            GenLabel::E { r, s } => (1..=n).contains(r) && (1..=n).contains(s) && r.abs_diff(*s) <= 1,
            GenLabel::GeneralE { i, j } => (1..=n).contains(i) && (1..=n).contains(j),
            GenLabel::Casimir { m, k } | GenLabel::Shifted { r: m, s: k, .. } => {
                (1..=n).contains(m) && (1..=*m).contains(k)
            }
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidGenerator(format!("{self} is not defined for gl({n})")))
        }
    }
}

impl fmt::Display for GenLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenLabel::E { r, s } => write!(f, "E{r}{s}"),
            GenLabel::GeneralE { i, j } => write!(f, "E{i}{j}"),
            GenLabel::Casimir { m, k } => write!(f, "c{m}{k}"),
            GenLabel::Shifted { r, s, center } => write!(f, "C{r}{s}({center})"),
        }
    }
}

impl std::str::FromStr for GenLabel {
    type Err = Error;

    /// `E12`, `E13`, `c32`, `C22@1,0|0`; indices may be comma separated
    /// (`E1,2`) for `n >= 10`.
    fn from_str(s: &str) -> Result<GenLabel, Error> {
        let s = s.trim();
        let bad = || Error::Parse(format!("unrecognized generator `{s}`"));
        let (head, center) = match s.split_once('@') {
            Some((h, c)) => (h, Some(c.parse::<Shift>()?)),
            None => (s, None),
        };
        let mut chars = head.chars();
        let letter = chars.next().ok_or_else(bad)?;
        let rest = chars.as_str();
        let (a, b) = if let Some((a, b)) = rest.split_once(',') {
            (a.parse::<usize>().map_err(|_| bad())?, b.parse::<usize>().map_err(|_| bad())?)
        } else if rest.len() == 2 && rest.chars().all(|c| c.is_ascii_digit()) {
            let d: Vec<usize> = rest.chars().map(|c| c.to_digit(10).unwrap() as usize).collect();
            (d[0], d[1])
        } else {
            return Err(bad());
        };
        match (letter, center) {
            ('E', None) if a.abs_diff(b) <= 1 => Ok(GenLabel::E { r: a, s: b }),
            ('E', None) => Ok(GenLabel::GeneralE { i: a, j: b }),
            ('c', None) => Ok(GenLabel::Casimir { m: a, k: b }),
            ('C', Some(center)) => Ok(GenLabel::Shifted { r: a, s: b, center }),
            _ => Err(bad()),
        }
    }
}

type GammaKey = (usize, u32, Vec<i64>);

/// A Gelfand-Tsetlin module `V(T(vbar))` (or `L(lambda)`) with memoized
/// generator actions on basis tableaux.
pub struct GtModule {
    base: BaseVector,
    family: Family,
    actions: RwLock<HashMap<(usize, usize, TabKey), ModVec>>,
    gammas: RwLock<HashMap<GammaKey, (Rat, Rat)>>,
}

impl fmt::Debug for GtModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GtModule")
            .field("base", &self.base)
            .field("family", &self.family)
            .finish()
    }
}

impl Clone for GtModule {
    fn clone(&self) -> GtModule {
        GtModule {
            base: self.base.clone(),
            family: self.family,
            actions: RwLock::new(HashMap::new()),
            gammas: RwLock::new(HashMap::new()),
        }
    }
}

impl GtModule {
    pub fn new(base: BaseVector) -> Result<GtModule, Error> {
        let family = match classify(&base) {
            Classification::FiniteStandardFamily => Family::Finite,
            Classification::Generic => Family::Generic,
            Classification::OneSingular(p) => {
                if base.offset(p.k, p.i) != base.offset(p.k, p.j) {
                    return Err(Error::InvalidBaseVector(format!(
                        "singular pair ({},{}),({},{}) must have equal entries",
                        p.k, p.i, p.k, p.j
                    )));
                }
                Family::Singular(p)
            }
            Classification::Unsupported => {
                return Err(Error::InvalidBaseVector(
                    "more than one same-row integral pair".into(),
                ))
            }
        };
        Ok(GtModule {
            base,
            family,
            actions: RwLock::new(HashMap::new()),
            gammas: RwLock::new(HashMap::new()),
        })
    }

    pub fn base(&self) -> &BaseVector {
        &self.base
    }

    pub fn n(&self) -> usize {
        self.base.n()
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn pair(&self) -> Option<SingularPair> {
        match self.family {
            Family::Singular(p) => Some(p),
            _ => None,
        }
    }

    pub fn canonical(&self, kind: Kind, w: &Shift) -> Canonical {
        canonicalize(kind, w, self.pair())
    }

    /// `Tab(w)`
    pub fn tab(&self, w: &Shift) -> TabKey {
        tab(w, self.pair())
    }

    /// `T(vbar + w)` or `DT(vbar + w)` as a vector in the canonical basis.
    pub fn vector(&self, kind: Kind, w: &Shift) -> ModVec {
        let c = self.canonical(kind, w);
        let mut out = ModVec::zero();
        out.add_term(c.key, &Rat::from_int(c.sign));
        out
    }

    fn check_key(&self, key: &TabKey) -> Result<(), Error> {
        if key.shift.n() != self.n() {
            return Err(Error::InvalidShift(format!(
                "shift {} does not fit gl({})",
                key.shift,
                self.n()
            )));
        }
        if key.is_derivative() && self.pair().is_none() {
            return Err(Error::FamilyMismatch {
                expected: "singular".into(),
                found: self.family.name().into(),
            });
        }
        Ok(())
    }

    fn mismatch(&self, expected: &str) -> Error {
        Error::FamilyMismatch {
            expected: expected.into(),
            found: self.family.name().into(),
        }
    }

    /// `E_rs` (`|r - s| <= 1`) on a finite-dimensional module; summands with
    /// non-standard targets are dropped.
    pub fn act_finite(&self, r: usize, s: usize, key: &TabKey) -> Result<ModVec, Error> {
        if self.family != Family::Finite {
            return Err(self.mismatch("finite"));
        }
        self.act_e(r, s, key)
    }

    /// `E_rs` (`|r - s| <= 1`) on a generic module.
    pub fn act_generic(&self, r: usize, s: usize, key: &TabKey) -> Result<ModVec, Error> {
        if self.family != Family::Generic {
            return Err(self.mismatch("generic"));
        }
        self.act_e(r, s, key)
    }

    /// `E_rs` (`|r - s| <= 1`) on a 1-singular module.
    pub fn act_singular(&self, r: usize, s: usize, key: &TabKey) -> Result<ModVec, Error> {
        if self.pair().is_none() {
            return Err(self.mismatch("singular"));
        }
        self.act_e(r, s, key)
    }

    /// `E_ij` for any `i, j` on one basis tableau (memoized).
    pub fn act_e(&self, i: usize, j: usize, key: &TabKey) -> Result<ModVec, Error> {
        GenLabel::GeneralE { i, j }.validate(self.n())?;
        self.check_key(key)?;
        let c = self.canonical(key.kind, &key.shift);
        if c.sign == 0 {
            return Ok(ModVec::zero());
        }
        let cache_key = (i, j, c.key);
        if let Some(hit) = self.actions.read().unwrap().get(&cache_key) {
            return Ok(hit.scale(&Rat::from_int(c.sign)));
        }
        let out = if i.abs_diff(j) <= 1 {
            self.act_step(Step::from_indices(i, j, self.n())?, &cache_key.2)?
        } else {
            let mid = i.min(j) + 1;
            self.commutator(i, mid, j, &ModVec::basis(cache_key.2.clone()))?
        };
        let scaled = out.scale(&Rat::from_int(c.sign));
        self.actions.write().unwrap().insert(cache_key, out);
        Ok(scaled)
    }

    fn act_step(&self, step: Step, key: &TabKey) -> Result<ModVec, Error> {
        let v = &self.base;
        let z = &key.shift;
        let mut out = ModVec::zero();
        match self.family {
            Family::Finite => {
                if !is_standard(v, z) {
                    return Err(Error::NotStandard(format!("{} at {}", v, z)));
                }
                for (e, target) in summands(step, v, z, None)? {
                    if is_standard(v, &target) {
                        out.add_term(TabKey::regular(target), &constant(&e));
                    }
                }
            }
            Family::Generic => {
                for (e, target) in summands(step, v, z, None)? {
                    out.add_term(TabKey::regular(target), &constant(&e));
                }
            }
            Family::Singular(p) => {
                let two_t = RatFun::t().scale(&Rat::from_int(2));
                for (e, target) in summands(step, v, z, Some(p))? {
                    let g = match key.kind {
                        Kind::Regular => e.mul(&two_t),
                        Kind::Derivative => e,
                    };
                    let (val, half) = g.d_pair()?;
                    self.emit(&mut out, Kind::Regular, &target, &half);
                    self.emit(&mut out, Kind::Derivative, &target, &val);
                }
            }
        }
        Ok(out)
    }

    fn emit(&self, out: &mut ModVec, kind: Kind, w: &Shift, coeff: &Rat) {
        if coeff.is_zero() {
            return;
        }
        let c = self.canonical(kind, w);
        if c.sign != 0 {
            out.add_term(c.key, &(coeff * Rat::from_int(c.sign)));
        }
    }

    /// `[E_{i,mid}, E_{mid,j}] vec`
    fn commutator(&self, i: usize, mid: usize, j: usize, vec: &ModVec) -> Result<ModVec, Error> {
        let a = self.apply_e(i, mid, &self.apply_e(mid, j, vec)?)?;
        let b = self.apply_e(mid, j, &self.apply_e(i, mid, vec)?)?;
        Ok(a.sub(&b))
    }

    /// Linear extension of `E_ij`.
    pub fn apply_e(&self, i: usize, j: usize, vec: &ModVec) -> Result<ModVec, Error> {
        let mut out = ModVec::zero();
        for (key, c) in vec {
            out.add_scaled(&self.act_e(i, j, key)?, c);
        }
        Ok(out)
    }

    /// `E_ij` through the default intermediate `min(i, j) + 1`.
    pub fn apply_general_e(&self, i: usize, j: usize, vec: &ModVec) -> Result<ModVec, Error> {
        if i == j {
            return Err(Error::InvalidGenerator(format!("E{i}{j} is diagonal")));
        }
        self.apply_e(i, j, vec)
    }

    /// `E_ij = [E_ik, E_kj]` with an explicit intermediate row `k` strictly
    /// between `i` and `j`; inner commutators use the default intermediate.
    pub fn apply_general_e_via(
        &self,
        i: usize,
        j: usize,
        k: usize,
        vec: &ModVec,
    ) -> Result<ModVec, Error> {
        GenLabel::GeneralE { i, j }.validate(self.n())?;
        if !(i.min(j) < k && k < i.max(j)) {
            return Err(Error::InvalidGenerator(format!(
                "row {k} is not strictly between {i} and {j}"
            )));
        }
        self.commutator(i, k, j, vec)
    }

    /// `c_mk` as the literal sum of `E_{i1 i2} E_{i2 i3} ... E_{ik i1}` over
    /// all index tuples in `1..=m`.
    pub fn apply_casimir_pbw(&self, m: usize, k: usize, vec: &ModVec) -> Result<ModVec, Error> {
        GenLabel::Casimir { m, k }.validate(self.n())?;
        let mut out = ModVec::zero();
        for i1 in 1..=m {
            self.pbw_chain(m, k, i1, i1, 0, vec, &mut out)?;
        }
        Ok(out)
    }

    /// Applies the rightmost factors first: `cur` is the vector after the
    /// factors `E_{i_{k-depth+1}...} ... E_{ik i1}`, `next` its left index.
    #[allow(clippy::too_many_arguments)]
    fn pbw_chain(
        &self,
        m: usize,
        k: usize,
        i1: usize,
        next: usize,
        depth: usize,
        cur: &ModVec,
        out: &mut ModVec,
    ) -> Result<(), Error> {
        if cur.is_zero() {
            return Ok(());
        }
        if depth + 1 == k {
            let last = self.apply_e(i1, next, cur)?;
            out.add_scaled(&last, &Rat::one());
            return Ok(());
        }
        for left in 1..=m {
            let step = self.apply_e(left, next, cur)?;
            self.pbw_chain(m, k, i1, left, depth + 1, &step, out)?;
        }
        Ok(())
    }

    /// `gamma_rs(vbar + z)`
    pub fn gamma_eval(&self, r: usize, s: usize, z: &Shift) -> Result<Rat, Error> {
        Ok(self.gamma(r, s, z)?.0)
    }

    /// `D(gamma_rs(v + z))` at `vbar`; zero outside the singular family.
    pub fn gamma_dvbar(&self, r: usize, s: usize, z: &Shift) -> Result<Rat, Error> {
        Ok(self.gamma(r, s, z)?.1)
    }

    fn gamma(&self, r: usize, s: usize, z: &Shift) -> Result<(Rat, Rat), Error> {
        GenLabel::Casimir { m: r, k: s }.validate(self.n())?;
        let row: Vec<i64> = (1..=r).map(|u| z.get(r, u)).collect();
        let key = (r, s as u32, row);
        if let Some(hit) = self.gammas.read().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        let value = gamma_pair(r, s as u32, &self.base, z, self.pair())?;
        self.gammas.write().unwrap().insert(key, value.clone());
        Ok(value)
    }

    /// Closed-form action of `c_rs` or `C_rs(z0)` on a basis tableau:
    /// `c T(vbar+z) = gamma T(vbar+z)` and
    /// `c DT(vbar+z) = gamma DT(vbar+z) + D(gamma) T(vbar+z)`.
    pub fn act_gamma(&self, gen: &GenLabel, key: &TabKey) -> Result<ModVec, Error> {
        gen.validate(self.n())?;
        self.check_key(key)?;
        let (r, s, center) = match gen {
            GenLabel::Casimir { m, k } => (*m, *k, None),
            GenLabel::Shifted { r, s, center } => (*r, *s, Some(center)),
            _ => {
                return Err(Error::InvalidGenerator(format!(
                    "{gen} is not an element of the Gelfand-Tsetlin subalgebra"
                )))
            }
        };
        let c = self.canonical(key.kind, &key.shift);
        if c.sign == 0 {
            return Ok(ModVec::zero());
        }
        let sign = Rat::from_int(c.sign);
        let w = &c.key.shift;
        let (mut value, dvalue) = self.gamma(r, s, w)?;
        if let Some(z0) = center {
            value -= &self.gamma_eval(r, s, z0)?;
        }
        let mut out = ModVec::zero();
        out.add_term(c.key.clone(), &(&value * &sign));
        if c.key.is_derivative() {
            self.emit(&mut out, Kind::Regular, w, &(&dvalue * &sign));
        }
        Ok(out)
    }

    /// Action of any label on one basis tableau.
    pub fn act(&self, gen: &GenLabel, key: &TabKey) -> Result<ModVec, Error> {
        gen.validate(self.n())?;
        match gen {
            GenLabel::E { r, s } => self.act_e(*r, *s, key),
            GenLabel::GeneralE { i, j } => {
                if i == j {
                    self.act_e(*i, *j, key)
                } else {
                    self.apply_general_e(*i, *j, &ModVec::basis(key.clone()))
                }
            }
            GenLabel::Casimir { .. } | GenLabel::Shifted { .. } => self.act_gamma(gen, key),
        }
    }

    /// Linear extension of [`GtModule::act`].
    pub fn apply(&self, gen: &GenLabel, vec: &ModVec) -> Result<ModVec, Error> {
        let mut out = ModVec::zero();
        for (key, c) in vec {
            out.add_scaled(&self.act(gen, key)?, c);
        }
        Ok(out)
    }

    /// All standard tableaux of a finite-dimensional module, sorted.
    pub fn finite_basis(&self) -> Result<Vec<TabKey>, Error> {
        if self.family != Family::Finite {
            return Err(self.mismatch("finite"));
        }
        let n = self.n();
        let top: Vec<i64> = (1..=n).map(|s| self.base.offset(n, s)).collect();
        let mut rows: Vec<Vec<i64>> = Vec::new();
        let mut found = Vec::new();
        self.enumerate_rows(&top, &mut rows, &mut found);
        found.sort();
        Ok(found)
    }

    fn enumerate_rows(&self, above: &[i64], rows: &mut Vec<Vec<i64>>, found: &mut Vec<TabKey>) {
        let r = above.len() - 1;
        if r == 0 {
            let n = self.n();
            let shift_rows: Vec<Vec<i64>> = rows
                .iter()
                .enumerate()
                .map(|(idx, row)| {
                    let rr = n - 1 - idx;
                    row.iter().enumerate().map(|(u, x)| x - self.base.offset(rr, u + 1)).collect()
                })
                .collect();
            found.push(TabKey::regular(Shift::from_rows(&shift_rows).unwrap()));
            return;
        }
        let mut row = vec![0i64; r];
        self.fill_row(above, 0, &mut row, rows, found);
    }

    fn fill_row(
        &self,
        above: &[i64],
        u: usize,
        row: &mut Vec<i64>,
        rows: &mut Vec<Vec<i64>>,
        found: &mut Vec<TabKey>,
    ) {
        if u == row.len() {
            rows.push(row.clone());
            let next = row.clone();
            self.enumerate_rows(&next, rows, found);
            rows.pop();
            return;
        }
        for x in (above[u + 1] + 1)..=above[u] {
            row[u] = x;
            self.fill_row(above, u + 1, row, rows, found);
        }
    }
}

fn constant(e: &RatFun) -> Rat {
    e.as_constant()
        .expect("coefficients are constant without a deformation")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn finite(top: &[i64]) -> GtModule {
        let row: Vec<Rat> = top.iter().map(|&x| Rat::from_int(x)).collect();
        GtModule::new(BaseVector::finite(&row).unwrap()).unwrap()
    }

    #[test]
    fn gl2_fundamental() {
        let m = finite(&[1, -1]);
        // base has v_11 = 1 (copied from the top row)
        let low = TabKey::regular("-1".parse().unwrap());
        let high = TabKey::regular(Shift::zero(2));
        assert_eq!(m.finite_basis().unwrap(), vec![low.clone(), high.clone()]);
        assert_eq!(m.act_finite(1, 2, &low).unwrap(), ModVec::basis(high.clone()));
        assert!(m.act_finite(1, 2, &high).unwrap().is_zero());
        assert_eq!(m.act_finite(2, 1, &high).unwrap(), ModVec::basis(low.clone()));
        assert!(m.act_finite(1, 1, &low).unwrap().is_zero());
    }

    #[test]
    fn finite_rejects_nonstandard_input() {
        let m = finite(&[1, -1]);
        let bad = TabKey::regular("-2".parse().unwrap());
        assert!(matches!(m.act_finite(1, 2, &bad), Err(Error::NotStandard(_))));
    }

    #[test]
    fn gen_label_parsing() {
        assert_eq!("E12".parse::<GenLabel>().unwrap(), GenLabel::e(1, 2));
        assert_eq!("E13".parse::<GenLabel>().unwrap(), GenLabel::GeneralE { i: 1, j: 3 });
        assert_eq!("c32".parse::<GenLabel>().unwrap(), GenLabel::casimir(3, 2));
        assert_eq!(
            "C22@1,0|0".parse::<GenLabel>().unwrap(),
            GenLabel::shifted(2, 2, "1,0|0".parse().unwrap())
        );
        assert!("X12".parse::<GenLabel>().is_err());
    }

    #[test]
    fn gl3_dimension_eight() {
        let m = finite(&[2, 0, -2]);
        assert_eq!(m.finite_basis().unwrap().len(), 8);
    }
}
