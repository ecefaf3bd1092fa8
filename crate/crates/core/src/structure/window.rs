use serde::{Deserialize, Serialize};

use crate::action::GtModule;
use crate::error::Error;
use crate::tableau::{is_standard, Shift, TabKey};

/// An `L-infinity` ball of shifts around `center`.
///
/// Keys within `radius - margin` of the center form the interior, the only
/// region where truncated reachability is trusted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Window {
    pub center: Shift,
    pub radius: i64,
    #[serde(default = "default_margin")]
    pub margin: i64,
}

fn default_margin() -> i64 {
    1
}

impl Window {
    pub fn new(center: Shift, radius: i64) -> Result<Window, Error> {
        Window::with_margin(center, radius, 1)
    }

    pub fn with_margin(center: Shift, radius: i64, margin: i64) -> Result<Window, Error> {
        if radius < 1 {
            return Err(Error::InvalidWindow(format!("radius {radius} < 1")));
        }
        if margin < 0 || margin > radius {
            return Err(Error::InvalidWindow(format!(
                "margin {margin} outside 0..={radius}"
            )));
        }
        Ok(Window {
            center,
            radius,
            margin,
        })
    }

    /// Window of the given radius around the zero shift.
    pub fn around_zero(n: usize, radius: i64) -> Result<Window, Error> {
        Window::new(Shift::zero(n), radius)
    }

    pub fn n(&self) -> usize {
        self.center.n()
    }

    pub fn contains_shift(&self, w: &Shift) -> bool {
        w.n() == self.n() && self.center.linf(w) <= self.radius
    }

    pub fn contains(&self, key: &TabKey) -> bool {
        self.contains_shift(&key.shift)
    }

    pub fn in_interior(&self, key: &TabKey) -> bool {
        key.shift.n() == self.n() && self.center.linf(&key.shift) <= self.radius - self.margin
    }

    /// Every shift of the window in lexicographic order.
    pub fn shifts(&self) -> Vec<Shift> {
        let base = self.center.flat().to_vec();
        let len = base.len();
        let mut out = Vec::new();
        let mut offs = vec![-self.radius; len];
        loop {
            let values: Vec<i64> = base.iter().zip(&offs).map(|(c, o)| c + o).collect();
            out.push(Shift::from_flat(self.n(), values).expect("window shift"));
            let mut idx = len;
            loop {
                if idx == 0 {
                    out.sort();
                    return out;
                }
                idx -= 1;
                if offs[idx] < self.radius {
                    offs[idx] += 1;
                    break;
                }
                offs[idx] = -self.radius;
            }
        }
    }

    /// The basis labels `Tab(w)` of the window; on a finite-dimensional module
    /// only standard tableaux are kept.
    pub fn keys(&self, module: &GtModule) -> Vec<TabKey> {
        let finite = module.family() == crate::action::Family::Finite;
        let mut keys: Vec<TabKey> = self
            .shifts()
            .into_iter()
            .filter(|w| !finite || is_standard(module.base(), w))
            .map(|w| module.tab(&w))
            .collect();
        keys.sort();
        keys
    }

    pub fn interior_keys(&self, module: &GtModule) -> Vec<TabKey> {
        self.keys(module)
            .into_iter()
            .filter(|k| self.in_interior(k))
            .collect()
    }
}
