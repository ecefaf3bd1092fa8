use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use gtmod::action::{Family, GenLabel, GtModule, ModVec};
use gtmod::ratcalc::Rat;
use gtmod::structure::{omega_drop_audit, separator, Window};
use gtmod::tableau::{tau, Kind, TabKey};
use gtmod::Error;

const MAX_EXAMPLES: usize = 5;

#[derive(Debug, Serialize)]
pub struct Property {
    pub name: &'static str,
    pub passed: bool,
    pub checked: usize,
    pub counterexamples: Vec<String>,
}

impl Property {
    fn new(name: &'static str) -> Property {
        Property {
            name,
            passed: true,
            checked: 0,
            counterexamples: Vec::new(),
        }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.passed = false;
            if self.counterexamples.len() < MAX_EXAMPLES {
                self.counterexamples.push(what());
            }
        }
    }
}

fn apply(m: &GtModule, i: usize, j: usize, v: &ModVec) -> Result<ModVec, Error> {
    m.apply_e(i, j, v)
}

fn bracket(m: &GtModule, a: (usize, usize), b: (usize, usize), v: &ModVec) -> Result<ModVec, Error> {
    let x = apply(m, a.0, a.1, &apply(m, b.0, b.1, v)?)?;
    let y = apply(m, b.0, b.1, &apply(m, a.0, a.1, v)?)?;
    Ok(x.sub(&y))
}

/// `[E_ab, E_cd] = d_bc E_ad - d_da E_cb` for all generators with
/// `|a-b| <= 1`, and the Serre relations for adjacent simple root vectors.
fn relations(m: &GtModule, keys: &[TabKey]) -> Result<Property, Error> {
    let n = m.n();
    let mut prop = Property::new("relations");
    let mut gens = Vec::new();
    for a in 1..=n {
        for b in 1..=n {
            if a.abs_diff(b) <= 1 {
                gens.push((a, b));
            }
        }
    }
    for key in keys {
        let v = ModVec::basis(key.clone());
        for &(a, b) in &gens {
            for &(c, d) in &gens {
                if (a, b) >= (c, d) {
                    continue;
                }
                let lhs = bracket(m, (a, b), (c, d), &v)?;
                let mut rhs = ModVec::zero();
                if b == c {
                    rhs = rhs.add(&apply(m, a, d, &v)?);
                }
                if d == a {
                    rhs = rhs.sub(&apply(m, c, b, &v)?);
                }
                prop.record(lhs == rhs, || format!("[E{a}{b},E{c}{d}] on {key}"));
            }
        }
        for i in 1..n {
            for j in 1..n {
                if i.abs_diff(j) != 1 {
                    continue;
                }
                for (x, y) in [((i, i + 1), (j, j + 1)), ((i + 1, i), (j + 1, j))] {
                    let outer = apply(m, x.0, x.1, &bracket(m, x, y, &v)?)?;
                    let inner = bracket(m, x, y, &apply(m, x.0, x.1, &v)?)?;
                    prop.record(outer == inner, || {
                        format!("Serre E{}{} E{}{} on {key}", x.0, x.1, y.0, y.1)
                    });
                }
            }
        }
    }
    Ok(prop)
}

fn gamma_coherence(m: &GtModule, keys: &[TabKey]) -> Result<Property, Error> {
    let mut prop = Property::new("gamma_coherence");
    for key in keys {
        let v = ModVec::basis(key.clone());
        for mm in 1..=m.n() {
            for k in 1..=mm {
                let pbw = m.apply_casimir_pbw(mm, k, &v)?;
                let closed = m.act_gamma(&GenLabel::casimir(mm, k), key)?;
                prop.record(pbw == closed, || format!("c{mm}{k} on {key}"));
            }
        }
    }
    Ok(prop)
}

fn omega_properties(m: &GtModule, win: &Window) -> Result<Vec<Property>, Error> {
    let rep = omega_drop_audit(m, win)?;
    let mut bound = Property::new("omega_drop_bound");
    for e in &rep.violations {
        bound.record(false, || format!("{} -{}-> {}", e.source, e.generator, e.target));
    }
    bound.checked = rep.edges_scanned;
    let mut pictures = Property::new("omega_drop_pictures");
    for d in &rep.drops {
        let e = &d.edge;
        pictures.record(d.strict, || {
            format!("{} -{}-> {} ({:?}, tied to the smaller entry)", e.source, e.generator, e.target, d.config)
        });
    }
    for e in &rep.unclassified {
        pictures.record(false, || format!("{} -{}-> {} (unmatched)", e.source, e.generator, e.target));
    }
    let mut targets = Property::new("omega_drop_targets");
    for c in &rep.target_checks {
        targets.record(c.failures.is_empty(), || {
            format!("edge out of {} lowers |Omega+|", c.target)
        });
    }
    Ok(vec![bound, pictures, targets])
}

fn separation(m: &GtModule, win: &Window) -> Result<Property, Error> {
    let mut prop = Property::new("separation");
    let pair = m.pair().expect("singular module");
    let shifts = win.shifts();
    for z in &shifts {
        for w in &shifts {
            if *w == *z || *w == tau(z, pair) {
                continue;
            }
            let rec = separator(z, w, m)?;
            let kills = [Kind::Regular, Kind::Derivative]
                .iter()
                .map(|&kind| rec.apply(m, &m.vector(kind, z)))
                .collect::<Result<Vec<_>, _>>()?
                .iter()
                .all(ModVec::is_zero);
            let tw = ModVec::basis(m.tab(w));
            let fixes = rec.apply(m, &tw)? == tw;
            prop.record(kills && fixes, || format!("z = {z}, w = {w}"));
        }
    }
    Ok(prop)
}

fn random_vector(keys: &[TabKey], rng: &mut StdRng) -> ModVec {
    let mut v = ModVec::zero();
    let size = rng.gen_range(1..=keys.len().min(6));
    for key in keys.choose_multiple(rng, size) {
        let c = Rat::new(rng.gen_range(-5..=5), rng.gen_range(1..=4));
        v.add_term(key.clone(), &c);
    }
    v
}

/// Independence of the commutator route for long root vectors and
/// commutativity of the Casimir generators on random vectors.
fn sampled(m: &GtModule, keys: &[TabKey], seed: u64, samples: usize) -> Result<Vec<Property>, Error> {
    let n = m.n();
    let mut rng = StdRng::seed_from_u64(seed);
    let mut route = Property::new("long_root_route");
    let mut commute = Property::new("gamma_commutative");
    let casimirs: Vec<GenLabel> = (1..=n).flat_map(|a| (1..=a).map(move |b| GenLabel::casimir(a, b))).collect();
    for _ in 0..samples {
        let v = random_vector(keys, &mut rng);
        if n >= 4 {
            let i = rng.gen_range(1..=n - 3);
            let j = rng.gen_range(i + 3..=n);
            let (i, j) = if rng.gen_bool(0.5) { (i, j) } else { (j, i) };
            let a = m.apply_general_e_via(i, j, i.min(j) + 1, &v)?;
            let b = m.apply_general_e_via(i, j, i.max(j) - 1, &v)?;
            route.record(a == b, || format!("E{i}{j} on {v}"));
        }
        let a = casimirs.choose(&mut rng).unwrap();
        let b = casimirs.choose(&mut rng).unwrap();
        let ab = m.apply(a, &m.apply(b, &v)?)?;
        let ba = m.apply(b, &m.apply(a, &v)?)?;
        commute.record(ab == ba, || format!("[{a},{b}] on {v}"));
    }
    let mut out = vec![commute];
    if n >= 4 {
        out.insert(0, route);
    }
    Ok(out)
}

#[derive(Debug, Serialize)]
pub struct VerifyReport {
    pub keys: usize,
    pub properties: Vec<Property>,
    pub passed: bool,
}

pub fn run(m: &GtModule, win: &Window, seed: u64, samples: usize) -> Result<VerifyReport, Error> {
    let keys = match m.family() {
        Family::Finite => m.finite_basis()?,
        _ => win.keys(m),
    };
    let mut properties = vec![relations(m, &keys)?, gamma_coherence(m, &keys)?];
    if m.family() != Family::Finite {
        properties.extend(omega_properties(m, win)?);
    }
    if m.pair().is_some() {
        properties.push(separation(m, win)?);
    }
    properties.extend(sampled(m, &keys, seed, samples)?);
    let passed = properties.iter().all(|p| p.passed);
    Ok(VerifyReport {
        keys: keys.len(),
        properties,
        passed,
    })
}
