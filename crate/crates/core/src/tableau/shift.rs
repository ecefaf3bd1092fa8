use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// Flat index of position `(r, s)` in a triangle whose rows are stored
/// top-first, starting at row `top` (row `top` has `top` entries).
pub(crate) fn tri_index(top: usize, r: usize, s: usize) -> usize {
    debug_assert!(1 <= s && s <= r && r <= top);
    top * (top + 1) / 2 - r * (r + 1) / 2 + (s - 1)
}

/// Integer shift `w` of the lower rows `1..=n-1`; the top row never moves.
///
/// Stored row-major from row `n-1` down to row `1`, matching the JSON layout.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Shift {
    n: usize,
    values: Vec<i64>,
}

impl Shift {
    pub fn zero(n: usize) -> Shift {
        Shift {
            n,
            values: vec![0; n * (n - 1) / 2],
        }
    }

    /// Builds a shift from rows listed top-first (`n-1` entries, then `n-2`, ...).
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Shift, Error> {
        let n = rows.len() + 1;
        for (idx, row) in rows.iter().enumerate() {
            let expected = n - 1 - idx;
            if row.len() != expected {
                return Err(Error::InvalidShift(format!(
                    "row {} has {} entries, expected {expected}",
                    expected,
                    row.len()
                )));
            }
        }
        Ok(Shift {
            n,
            values: rows.iter().flatten().copied().collect(),
        })
    }

    /// Builds a shift from the flat top-first layout.
    pub fn from_flat(n: usize, values: Vec<i64>) -> Result<Shift, Error> {
        if values.len() != n * (n - 1) / 2 {
            return Err(Error::InvalidShift(format!(
                "expected {} entries for n = {n}, got {}",
                n * (n - 1) / 2,
                values.len()
            )));
        }
        Ok(Shift { n, values })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn flat(&self) -> &[i64] {
        &self.values
    }

    /// `w_rs`; zero on the top row.
    pub fn get(&self, r: usize, s: usize) -> i64 {
        if r == self.n {
            0
        } else {
            self.values[tri_index(self.n - 1, r, s)]
        }
    }

    pub fn set(&mut self, r: usize, s: usize, value: i64) {
        assert!(r < self.n, "the top row is immutable");
        let idx = tri_index(self.n - 1, r, s);
        self.values[idx] = value;
    }

    /// `w + amount * delta^{rs}`
    pub fn bumped(&self, r: usize, s: usize, amount: i64) -> Shift {
        let mut out = self.clone();
        out.set(r, s, self.get(r, s) + amount);
        out
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (1..self.n)
            .rev()
            .map(|r| (1..=r).map(|s| self.get(r, s)).collect())
            .collect()
    }

    /// `w_ki` and `w_kj` swapped.
    pub fn swapped(&self, k: usize, i: usize, j: usize) -> Shift {
        let mut out = self.clone();
        out.set(k, i, self.get(k, j));
        out.set(k, j, self.get(k, i));
        out
    }

    /// L-infinity distance.
    pub fn linf(&self, other: &Shift) -> i64 {
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).abs())
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Debug for Shift {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Shift {
    /// `w21,w22|w11` (rows top-first).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|row| {
                row.iter()
                    .map(i64::to_string)
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        write!(f, "{}", rows.join("|"))
    }
}

impl std::str::FromStr for Shift {
    type Err = Error;

    fn from_str(s: &str) -> Result<Shift, Error> {
        let rows = s
            .split('|')
            .map(|row| {
                row.split(',')
                    .map(|x| {
                        x.trim()
                            .parse::<i64>()
                            .map_err(|_| Error::Parse(format!("invalid shift entry `{x}`")))
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Shift::from_rows(&rows)
    }
}

impl Serialize for Shift {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.rows().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Shift {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Shift, D::Error> {
        let rows = Vec::<Vec<i64>>::deserialize(deserializer)?;
        Shift::from_rows(&rows).map_err(serde::de::Error::custom)
    }
}

/// Regular tableau `T(vbar + w)` or derivative tableau `DT(vbar + w)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Kind {
    #[serde(rename = "T")]
    Regular,
    #[serde(rename = "DT")]
    Derivative,
}

/// Label of a basis tableau.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct TabKey {
    pub shift: Shift,
    pub kind: Kind,
}

impl TabKey {
    pub fn regular(shift: Shift) -> TabKey {
        TabKey {
            shift,
            kind: Kind::Regular,
        }
    }

    pub fn derivative(shift: Shift) -> TabKey {
        TabKey {
            shift,
            kind: Kind::Derivative,
        }
    }

    pub fn is_derivative(&self) -> bool {
        self.kind == Kind::Derivative
    }
}

impl fmt::Debug for TabKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for TabKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            Kind::Regular => write!(f, "T[{}]", self.shift),
            Kind::Derivative => write!(f, "DT[{}]", self.shift),
        }
    }
}

impl std::str::FromStr for TabKey {
    type Err = Error;

    /// `T:0,0|0` or `DT:1,0|0`; a bare shift means a regular tableau.
    fn from_str(s: &str) -> Result<TabKey, Error> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("DT:") {
            Ok(TabKey::derivative(rest.parse()?))
        } else if let Some(rest) = s.strip_prefix("T:") {
            Ok(TabKey::regular(rest.parse()?))
        } else {
            Ok(TabKey::regular(s.parse()?))
        }
    }
}

/// `sum |z_rs - w_rs|`
pub fn distance(z: &Shift, w: &Shift) -> u64 {
    z.values
        .iter()
        .zip(&w.values)
        .map(|(a, b)| (a - b).unsigned_abs())
        .sum()
}
