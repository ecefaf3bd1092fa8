use std::collections::{BTreeMap, BTreeSet, VecDeque};

use super::window::Window;
use crate::action::{GenLabel, GtModule};
use crate::error::Error;
use crate::tableau::TabKey;

/// The generators scanned for single-step edges: `E_{r,r+1}`, `E_{r+1,r}`
/// and `E_rr`.
pub fn edge_generators(n: usize) -> Vec<GenLabel> {
    let mut out = Vec::new();
    for r in 1..=n {
        out.push(GenLabel::e(r, r));
        if r < n {
            out.push(GenLabel::e(r, r + 1));
            out.push(GenLabel::e(r + 1, r));
        }
    }
    out
}

/// Window keys with a nonzero coefficient in `g . Tab(key)` for a single
/// generator `g`, plus the `C_k2(w)` edge out of a derivative tableau.
pub fn reach_edges(
    key: &TabKey,
    module: &GtModule,
    win: &Window,
) -> Result<BTreeSet<(TabKey, GenLabel)>, Error> {
    let mut out = BTreeSet::new();
    for g in edge_generators(module.n()) {
        for (target, _) in &module.act(&g, key)? {
            if win.contains(target) {
                out.insert((target.clone(), g.clone()));
            }
        }
    }
    if let (Some(p), true) = (module.pair(), key.is_derivative()) {
        let g = GenLabel::shifted(p.k, 2, key.shift.clone());
        for (target, _) in &module.act(&g, key)? {
            if win.contains(target) {
                out.insert((target.clone(), g.clone()));
            }
        }
    }
    Ok(out)
}

/// Breadth-first closure of [`reach_edges`] inside the window.
pub fn reach_closure(
    key: &TabKey,
    module: &GtModule,
    win: &Window,
) -> Result<BTreeSet<TabKey>, Error> {
    ReachGraph::new(module, win).closure(key)
}

/// Memoized successor lists for repeated closure queries on one window.
pub struct ReachGraph<'a> {
    module: &'a GtModule,
    win: &'a Window,
    succ: BTreeMap<TabKey, Vec<TabKey>>,
}

impl<'a> ReachGraph<'a> {
    pub fn new(module: &'a GtModule, win: &'a Window) -> ReachGraph<'a> {
        ReachGraph {
            module,
            win,
            succ: BTreeMap::new(),
        }
    }

    pub fn successors(&mut self, key: &TabKey) -> Result<&[TabKey], Error> {
        if !self.succ.contains_key(key) {
            let mut targets: Vec<TabKey> = reach_edges(key, self.module, self.win)?
                .into_iter()
                .map(|(t, _)| t)
                .collect();
            targets.dedup();
            self.succ.insert(key.clone(), targets);
        }
        Ok(&self.succ[key])
    }

    pub fn closure(&mut self, key: &TabKey) -> Result<BTreeSet<TabKey>, Error> {
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(key.clone());
        queue.push_back(key.clone());
        while let Some(cur) = queue.pop_front() {
            let next = self.successors(&cur)?.to_vec();
            for t in next {
                if seen.insert(t.clone()) {
                    queue.push_back(t);
                }
            }
        }
        Ok(seen)
    }
}
