use std::fmt;

use serde::{Deserialize, Serialize};

use super::shift::{tri_index, Kind, Shift, TabKey};
use crate::error::Error;
use crate::ratcalc::Rat;

/// Largest rank accepted unless a caller raises the cap explicitly.
pub const DEFAULT_MAX_N: usize = 6;

/// The fixed point `vbar` of a Gelfand-Tsetlin module.
///
/// Every entry is `anchors[assignment] + offset`. Anchors have pairwise
/// distinct fractional parts, so two entries differ by an integer exactly when
/// they share an anchor.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "BaseVectorRepr", into = "BaseVectorRepr")]
pub struct BaseVector {
    n: usize,
    anchors: Vec<Rat>,
    assignment: Vec<usize>,
    offsets: Vec<i64>,
}

/// JSON layout: rows listed top-first.
#[derive(Serialize, Deserialize)]
struct BaseVectorRepr {
    n: usize,
    anchors: Vec<Rat>,
    assignment: Vec<Vec<usize>>,
    offsets: Vec<Vec<i64>>,
}

impl TryFrom<BaseVectorRepr> for BaseVector {
    type Error = Error;

    fn try_from(repr: BaseVectorRepr) -> Result<BaseVector, Error> {
        BaseVector::new(repr.n, repr.anchors, &repr.assignment, &repr.offsets)
    }
}

impl From<BaseVector> for BaseVectorRepr {
    fn from(v: BaseVector) -> BaseVectorRepr {
        let rows = |flat: &dyn Fn(usize, usize) -> i64| -> Vec<Vec<i64>> {
            (1..=v.n)
                .rev()
                .map(|r| (1..=r).map(|s| flat(r, s)).collect())
                .collect()
        };
        let assignment = rows(&|r, s| v.anchor_index(r, s) as i64)
            .into_iter()
            .map(|row| row.into_iter().map(|x| x as usize).collect())
            .collect();
        let offsets = rows(&|r, s| v.offset(r, s));
        BaseVectorRepr {
            n: v.n,
            anchors: v.anchors.clone(),
            assignment,
            offsets,
        }
    }
}

fn check_rows<T>(n: usize, rows: &[Vec<T>], what: &str) -> Result<(), Error> {
    if rows.len() != n {
        return Err(Error::InvalidBaseVector(format!(
            "{what}: expected {n} rows, got {}",
            rows.len()
        )));
    }
    for (idx, row) in rows.iter().enumerate() {
        if row.len() != n - idx {
            return Err(Error::InvalidBaseVector(format!(
                "{what}: row {} has {} entries, expected {}",
                n - idx,
                row.len(),
                n - idx
            )));
        }
    }
    Ok(())
}

impl BaseVector {
    /// `assignment` and `offsets` list rows top-first (`n` entries first).
    pub fn new(
        n: usize,
        anchors: Vec<Rat>,
        assignment: &[Vec<usize>],
        offsets: &[Vec<i64>],
    ) -> Result<BaseVector, Error> {
        BaseVector::with_cap(n, anchors, assignment, offsets, DEFAULT_MAX_N)
    }

    pub fn with_cap(
        n: usize,
        anchors: Vec<Rat>,
        assignment: &[Vec<usize>],
        offsets: &[Vec<i64>],
        max_n: usize,
    ) -> Result<BaseVector, Error> {
        if n < 2 || n > max_n {
            return Err(Error::InvalidBaseVector(format!(
                "n = {n} outside the supported range 2..={max_n}"
            )));
        }
        check_rows(n, assignment, "assignment")?;
        check_rows(n, offsets, "offsets")?;
        for (a, x) in anchors.iter().enumerate() {
            for y in &anchors[a + 1..] {
                if x.fract() == y.fract() {
                    return Err(Error::InvalidBaseVector(format!(
                        "anchors {x} and {y} share a fractional part"
                    )));
                }
            }
        }
        let assignment: Vec<usize> = assignment.iter().flatten().copied().collect();
        if let Some(bad) = assignment.iter().find(|&&a| a >= anchors.len()) {
            return Err(Error::InvalidBaseVector(format!(
                "anchor index {bad} out of range ({} anchors)",
                anchors.len()
            )));
        }
        Ok(BaseVector {
            n,
            anchors,
            assignment,
            offsets: offsets.iter().flatten().copied().collect(),
        })
    }

    /// Groups entries by fractional part: each distinct fractional part
    /// becomes one anchor and the integer part becomes the offset.
    pub fn from_rows(rows: &[Vec<Rat>]) -> Result<BaseVector, Error> {
        BaseVector::from_rows_with_cap(rows, DEFAULT_MAX_N)
    }

    pub fn from_rows_with_cap(rows: &[Vec<Rat>], max_n: usize) -> Result<BaseVector, Error> {
        let n = rows.len();
        let mut anchors: Vec<Rat> = Vec::new();
        let mut assignment = Vec::with_capacity(n);
        let mut offsets = Vec::with_capacity(n);
        for row in rows {
            let mut arow = Vec::with_capacity(row.len());
            let mut orow = Vec::with_capacity(row.len());
            for x in row {
                let frac = x.fract();
                let idx = match anchors.iter().position(|a| *a == frac) {
                    Some(idx) => idx,
                    None => {
                        anchors.push(frac.clone());
                        anchors.len() - 1
                    }
                };
                let off = (x - &frac).to_i64().ok_or_else(|| {
                    Error::InvalidBaseVector(format!("entry {x} out of range"))
                })?;
                arow.push(idx);
                orow.push(off);
            }
            assignment.push(arow);
            offsets.push(orow);
        }
        BaseVector::with_cap(n, anchors, &assignment, &offsets, max_n)
    }

    /// Finite-dimensional family with the given tableau top row
    /// (`v_ni = lambda_i - i + 1`). Lower rows start at the highest tableau
    /// `v_rs = v_ns`.
    pub fn finite(top_row: &[Rat]) -> Result<BaseVector, Error> {
        let n = top_row.len();
        if n < 2 {
            return Err(Error::InvalidBaseVector("n must be at least 2".into()));
        }
        for pair in top_row.windows(2) {
            let d = &pair[0] - &pair[1];
            if !d.is_integer() || d < Rat::one() {
                return Err(Error::InvalidBaseVector(format!(
                    "top row {:?} is not dominant integral",
                    top_row
                )));
            }
        }
        let rows: Vec<Vec<Rat>> = (1..=n).rev().map(|r| top_row[..r].to_vec()).collect();
        BaseVector::from_rows(&rows)
    }

    /// Finite-dimensional family of highest weight `lambda`.
    pub fn from_weight(lambda: &[Rat]) -> Result<BaseVector, Error> {
        let top: Vec<Rat> = lambda
            .iter()
            .enumerate()
            .map(|(i, l)| l - &Rat::from_int(i as i64))
            .collect();
        BaseVector::finite(&top)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn anchors(&self) -> &[Rat] {
        &self.anchors
    }

    pub fn anchor_index(&self, r: usize, s: usize) -> usize {
        self.assignment[tri_index(self.n, r, s)]
    }

    pub fn offset(&self, r: usize, s: usize) -> i64 {
        self.offsets[tri_index(self.n, r, s)]
    }

    /// `vbar_rs`
    pub fn entry(&self, r: usize, s: usize) -> Rat {
        &self.anchors[self.anchor_index(r, s)] + &Rat::from_int(self.offset(r, s))
    }

    /// `(vbar + w)_rs`
    pub fn entry_at(&self, w: &Shift, r: usize, s: usize) -> Rat {
        &self.anchors[self.anchor_index(r, s)] + &Rat::from_int(self.offset(r, s) + w.get(r, s))
    }

    /// `(vbar + w)_{r1 s1} - (vbar + w)_{r2 s2}` when it is an integer.
    pub fn int_diff(&self, w: &Shift, p: (usize, usize), q: (usize, usize)) -> Option<i64> {
        if self.anchor_index(p.0, p.1) != self.anchor_index(q.0, q.1) {
            return None;
        }
        Some(self.offset(p.0, p.1) + w.get(p.0, p.1) - self.offset(q.0, q.1) - w.get(q.0, q.1))
    }

    pub fn rows(&self) -> Vec<Vec<Rat>> {
        (1..=self.n)
            .rev()
            .map(|r| (1..=r).map(|s| self.entry(r, s)).collect())
            .collect()
    }

    /// Pairs `(r, s, u)`, `s < u`, `r <= n - 1`, whose entries differ by an integer.
    pub fn same_row_integral_pairs(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for r in 1..self.n {
            for s in 1..=r {
                for u in s + 1..=r {
                    if self.anchor_index(r, s) == self.anchor_index(r, u) {
                        out.push((r, s, u));
                    }
                }
            }
        }
        out
    }

    /// Triples `(r, s, t)` with `vbar_rs - vbar_{r-1,t}` an integer.
    pub fn neighbor_integral_pairs(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for r in 2..=self.n {
            for s in 1..=r {
                for t in 1..r {
                    if self.anchor_index(r, s) == self.anchor_index(r - 1, t) {
                        out.push((r, s, t));
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for BaseVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for BaseVector {
    /// `(v_n1,...,v_nn|...|v_11)`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|row| {
                row.iter()
                    .map(Rat::to_string)
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        write!(f, "({})", rows.join("|"))
    }
}

/// The unique same-row integral pair `(k, i, j)`, `i < j <= k <= n - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SingularPair {
    pub k: usize,
    pub i: usize,
    pub j: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "tag")]
pub enum Classification {
    FiniteStandardFamily,
    Generic,
    OneSingular(SingularPair),
    Unsupported,
}

impl Classification {
    pub fn name(&self) -> &'static str {
        match self {
            Classification::FiniteStandardFamily => "finite",
            Classification::Generic => "generic",
            Classification::OneSingular(_) => "1-singular",
            Classification::Unsupported => "unsupported",
        }
    }
}

pub fn classify(v: &BaseVector) -> Classification {
    let single_anchor = v.assignment.iter().all(|&a| a == v.assignment[0]);
    if single_anchor {
        let dominant = (1..v.n).all(|s| v.offset(v.n, s) - v.offset(v.n, s + 1) >= 1);
        if dominant && is_standard(v, &Shift::zero(v.n)) {
            return Classification::FiniteStandardFamily;
        }
    }
    let pairs = v.same_row_integral_pairs();
    match pairs.as_slice() {
        [] => Classification::Generic,
        [(k, i, j)] => Classification::OneSingular(SingularPair {
            k: *k,
            i: *i,
            j: *j,
        }),
        _ => Classification::Unsupported,
    }
}

/// Interlacing test on the entries of `vbar + w`.
pub fn is_standard(v: &BaseVector, w: &Shift) -> bool {
    for k in 2..=v.n {
        for i in 1..k {
            match v.int_diff(w, (k, i), (k - 1, i)) {
                Some(d) if d >= 0 => {}
                _ => return false,
            }
            match v.int_diff(w, (k - 1, i), (k, i + 1)) {
                Some(d) if d > 0 => {}
                _ => return false,
            }
        }
    }
    true
}

pub fn tau(w: &Shift, pair: SingularPair) -> Shift {
    w.swapped(pair.k, pair.i, pair.j)
}

/// A canonical basis label with the sign relating it to the requested tableau.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Canonical {
    pub key: TabKey,
    /// `-1`, `0` or `1`; `0` means the requested tableau is the zero vector.
    pub sign: i64,
}

/// Resolves `T(vbar + w)` / `DT(vbar + w)` to a basis label using
/// `T(vbar + w) = T(vbar + tau w)` and `DT(vbar + w) = -DT(vbar + tau w)`.
///
/// Without a singular pair every regular label is already canonical and
/// derivative labels do not exist (sign 0).
pub fn canonicalize(kind: Kind, w: &Shift, pair: Option<SingularPair>) -> Canonical {
    let Some(p) = pair else {
        return Canonical {
            key: TabKey { shift: w.clone(), kind },
            sign: if kind == Kind::Regular { 1 } else { 0 },
        };
    };
    let gap = w.get(p.k, p.i) - w.get(p.k, p.j);
    match kind {
        Kind::Regular if gap <= 0 => Canonical {
            key: TabKey::regular(w.clone()),
            sign: 1,
        },
        Kind::Regular => Canonical {
            key: TabKey::regular(tau(w, p)),
            sign: 1,
        },
        Kind::Derivative if gap == 0 => Canonical {
            key: TabKey::derivative(w.clone()),
            sign: 0,
        },
        Kind::Derivative if gap > 0 => Canonical {
            key: TabKey::derivative(w.clone()),
            sign: 1,
        },
        Kind::Derivative => Canonical {
            key: TabKey::derivative(tau(w, p)),
            sign: -1,
        },
    }
}

/// The basis element `Tab(w)`: regular when `w_ki <= w_kj`, derivative otherwise.
pub fn tab(w: &Shift, pair: Option<SingularPair>) -> TabKey {
    match pair {
        Some(p) if w.get(p.k, p.i) > w.get(p.k, p.j) => TabKey::derivative(w.clone()),
        _ => TabKey::regular(w.clone()),
    }
}
