#![allow(dead_code)]

use gtmod::action::{GtModule, ModVec};
use gtmod::ratcalc::Rat;
use gtmod::tableau::{BaseVector, Shift, TabKey};

pub fn rat(s: &str) -> Rat {
    s.parse().unwrap()
}

pub fn base(rows: &[&[&str]]) -> BaseVector {
    let rows: Vec<Vec<Rat>> = rows.iter().map(|r| r.iter().map(|x| rat(x)).collect()).collect();
    BaseVector::from_rows(&rows).unwrap()
}

pub fn module(rows: &[&[&str]]) -> GtModule {
    GtModule::new(base(rows)).unwrap()
}

pub fn finite(top: &[i64]) -> GtModule {
    let row: Vec<Rat> = top.iter().map(|&x| Rat::from_int(x)).collect();
    GtModule::new(BaseVector::finite(&row).unwrap()).unwrap()
}

/// Every shift with entries in `-radius..=radius`.
pub fn cube(n: usize, radius: i64) -> Vec<Shift> {
    let len = n * (n - 1) / 2;
    let mut out = Vec::new();
    let mut cur = vec![-radius; len];
    loop {
        out.push(Shift::from_flat(n, cur.clone()).unwrap());
        let mut idx = 0;
        loop {
            if idx == len {
                return out;
            }
            if cur[idx] < radius {
                cur[idx] += 1;
                break;
            }
            cur[idx] = -radius;
            idx += 1;
        }
    }
}

/// Distinct canonical basis keys `Tab(w)` over a cube of shifts.
pub fn window_keys(m: &GtModule, radius: i64) -> Vec<TabKey> {
    let mut keys: Vec<TabKey> = cube(m.n(), radius).iter().map(|w| m.tab(w)).collect();
    keys.sort();
    keys.dedup();
    keys
}

pub fn e(m: &GtModule, i: usize, j: usize, v: &ModVec) -> ModVec {
    m.apply_e(i, j, v).unwrap()
}

/// `[E_ab, E_cd] v`
pub fn bracket(m: &GtModule, a: (usize, usize), b: (usize, usize), v: &ModVec) -> ModVec {
    let x = e(m, a.0, a.1, &e(m, b.0, b.1, v));
    let y = e(m, b.0, b.1, &e(m, a.0, a.1, v));
    x.sub(&y)
}

fn kron(a: usize, b: usize) -> i64 {
    (a == b) as i64
}

/// Checks `[E_ab, E_cd] = d_bc E_ad - d_da E_cb` on `v` for all index pairs
/// with `|a-b| <= 1` and `|c-d| <= 1`; returns the failing brackets.
pub fn relation_failures(m: &GtModule, v: &ModVec) -> Vec<String> {
    let n = m.n();
    let mut gens = Vec::new();
    for a in 1..=n {
        for b in 1..=n {
            if a.abs_diff(b) <= 1 {
                gens.push((a, b));
            }
        }
    }
    let mut bad = Vec::new();
    for &(a, b) in &gens {
        for &(c, d) in &gens {
            if (a, b) >= (c, d) {
                continue;
            }
            let lhs = bracket(m, (a, b), (c, d), v);
            let mut rhs = ModVec::zero();
            if kron(b, c) == 1 {
                rhs = rhs.add(&general(m, a, d, v));
            }
            if kron(d, a) == 1 {
                rhs = rhs.sub(&general(m, c, b, v));
            }
            if lhs != rhs {
                bad.push(format!("[E{a}{b},E{c}{d}] on {v}"));
            }
        }
    }
    bad
}

fn general(m: &GtModule, i: usize, j: usize, v: &ModVec) -> ModVec {
    m.apply_e(i, j, v).unwrap()
}

/// Checks `[X, [X, Y]] = 0` for adjacent simple root vectors `X`, `Y` of the
/// same sign; returns the failing triples.
pub fn serre_failures(m: &GtModule, v: &ModVec) -> Vec<String> {
    let n = m.n();
    let mut bad = Vec::new();
    for i in 1..n {
        for j in 1..n {
            if i.abs_diff(j) != 1 {
                continue;
            }
            for (x, y) in [((i, i + 1), (j, j + 1)), ((i + 1, i), (j + 1, j))] {
                let outer = e(m, x.0, x.1, &bracket(m, x, y, v));
                let inner = bracket(m, x, y, &e(m, x.0, x.1, v));
                if outer != inner {
                    bad.push(format!("[E{}{},[E{}{},E{}{}]] on {v}", x.0, x.1, x.0, x.1, y.0, y.1));
                }
            }
        }
    }
    bad
}
