use std::collections::btree_map::{self, BTreeMap};
use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Deserialize, Serialize, Serializer};

use crate::ratcalc::Rat;
use crate::tableau::TabKey;

/// Finitely supported linear combination of basis tableaux.
///
/// Zero coefficients are never stored, so two vectors are equal exactly when
/// their term maps are equal.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct ModVec {
    terms: BTreeMap<TabKey, Rat>,
}

impl ModVec {
    pub fn zero() -> ModVec {
        ModVec::default()
    }

    pub fn basis(key: TabKey) -> ModVec {
        let mut v = ModVec::zero();
        v.add_term(key, &Rat::one());
        v
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &TabKey) -> Rat {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, TabKey, Rat> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &TabKey> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, key: TabKey, coeff: &Rat) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            btree_map::Entry::Vacant(e) => {
                e.insert(coeff.clone());
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += scale * other`
    pub fn add_scaled(&mut self, other: &ModVec, scale: &Rat) {
        if scale.is_zero() {
            return;
        }
        for (k, c) in &other.terms {
            self.add_term(k.clone(), &(c * scale));
        }
    }

    pub fn add(&self, other: &ModVec) -> ModVec {
        let mut out = self.clone();
        out.add_scaled(other, &Rat::one());
        out
    }

    pub fn sub(&self, other: &ModVec) -> ModVec {
        let mut out = self.clone();
        out.add_scaled(other, &Rat::from_int(-1));
        out
    }

    pub fn scale(&self, c: &Rat) -> ModVec {
        if c.is_zero() {
            return ModVec::zero();
        }
        ModVec {
            terms: self.terms.iter().map(|(k, x)| (k.clone(), x * c)).collect(),
        }
    }
}

impl FromIterator<(TabKey, Rat)> for ModVec {
    fn from_iter<I: IntoIterator<Item = (TabKey, Rat)>>(iter: I) -> ModVec {
        let mut v = ModVec::zero();
        for (k, c) in iter {
            v.add_term(k, &c);
        }
        v
    }
}

impl<'a> IntoIterator for &'a ModVec {
    type Item = (&'a TabKey, &'a Rat);
    type IntoIter = btree_map::Iter<'a, TabKey, Rat>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl fmt::Debug for ModVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ModVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(k, c)| format!("({c}){k}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Serialize, Deserialize)]
struct Term {
    key: TabKey,
    coeff: Rat,
}

impl Serialize for ModVec {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (key, coeff) in &self.terms {
            seq.serialize_element(&Term {
                key: key.clone(),
                coeff: coeff.clone(),
            })?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for ModVec {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<ModVec, D::Error> {
        let terms = Vec::<Term>::deserialize(deserializer)?;
        Ok(terms.into_iter().map(|t| (t.key, t.coeff)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::Shift;

    #[test]
    fn cancellation_removes_terms() {
        let k = TabKey::regular(Shift::zero(2));
        let mut v = ModVec::basis(k.clone());
        v.add_term(k.clone(), &Rat::from_int(-1));
        assert!(v.is_zero());
        assert_eq!(v, ModVec::zero());
    }

    #[test]
    fn scale_by_zero_is_zero() {
        let v = ModVec::basis(TabKey::regular(Shift::zero(3)));
        assert!(v.scale(&Rat::zero()).is_zero());
        assert_eq!(v.sub(&v), ModVec::zero());
    }
}
