use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::tableau::{BaseVector, Shift, TabKey};

/// Triples `(r, s, t)` with `(vbar+w)_rs - (vbar+w)_{r-1,t}` a non-negative integer.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct OmegaSet {
    triples: BTreeSet<(usize, usize, usize)>,
}

impl OmegaSet {
    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    pub fn contains(&self, triple: &(usize, usize, usize)) -> bool {
        self.triples.contains(triple)
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, usize, usize)> {
        self.triples.iter()
    }

    pub fn is_subset(&self, other: &OmegaSet) -> bool {
        self.triples.is_subset(&other.triples)
    }

    /// Keeps only triples with `r <= k`.
    pub fn restricted(&self, k: usize) -> OmegaSet {
        OmegaSet {
            triples: self.triples.iter().filter(|t| t.0 <= k).copied().collect(),
        }
    }
}

impl FromIterator<(usize, usize, usize)> for OmegaSet {
    fn from_iter<I: IntoIterator<Item = (usize, usize, usize)>>(iter: I) -> OmegaSet {
        OmegaSet {
            triples: iter.into_iter().collect(),
        }
    }
}

impl fmt::Debug for OmegaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.triples.iter()).finish()
    }
}

pub(crate) fn omega_of_shift(w: &Shift, v: &BaseVector) -> OmegaSet {
    let n = v.n();
    let mut out = BTreeSet::new();
    for r in 2..=n {
        for s in 1..=r {
            for t in 1..r {
                if matches!(v.int_diff(w, (r, s), (r - 1, t)), Some(d) if d >= 0) {
                    out.insert((r, s, t));
                }
            }
        }
    }
    OmegaSet { triples: out }
}

/// `Omega+(Tab(w))` on the shift of the given basis label.
pub fn omega_plus(key: &TabKey, v: &BaseVector) -> OmegaSet {
    omega_of_shift(&key.shift, v)
}

/// `Omega_k+(Tab(w))`: the triples of [`omega_plus`] with `r <= k`.
pub fn omega_k_plus(key: &TabKey, v: &BaseVector, k: usize) -> OmegaSet {
    omega_plus(key, v).restricted(k)
}
