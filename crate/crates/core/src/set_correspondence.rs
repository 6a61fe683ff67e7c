//! The functors `R` (sections) and `L` (coequaliser) between set comodules
//! and set contramodules, with their unit, counit and the equivalence
//! certificate on non-degenerate / non-empty objects.

use rayon::prelude::*;

use crate::budget::{power, Budget};
use crate::error::{Error, Result};
use crate::finset::{
    coequalize_pairs, pair_label, product, FinMap, FinSet, MapTables, QuotPresentation,
};
use crate::report::Report;
use crate::set_comodule::{hom_over, SetComodule};
use crate::set_contramodule::{product_contra, products_with_fibers, ContraTable};

/// `R(M)`: the sections of `φ`, as the product contramodule of the fibers.
/// A degenerate comodule has no sections and gives the empty contramodule.
pub fn r_set(m: &SetComodule) -> ContraTable {
    if m.is_degenerate() {
        return ContraTable::empty(m.base());
    }
    product_contra(m.base(), &m.fibers()).expect("fibers are non-empty")
}

/// The sections `C → X` in the carrier order of [`r_set`].
pub fn sections(m: &SetComodule) -> Vec<FinMap> {
    let r = r_set(m);
    let fibers = m.fibers();
    (0..r.carrier().len())
        .map(|i| {
            let table = match r.coordinates(i) {
                Some(coords) => coords
                    .iter()
                    .zip(&fibers)
                    .map(|(&k, f)| m.carrier().index_of(f.label(k)).unwrap())
                    .collect(),
                None => unreachable!("non-empty R is in product form"),
            };
            FinMap::from_indices(m.base().clone(), m.carrier().clone(), table).unwrap()
        })
        .collect()
}

/// `L(t)` together with the projection `Y × C → L(t)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LSet {
    pub comodule: SetComodule,
    base_len: usize,
    class: Vec<usize>,
}

impl LSet {
    /// The class of `(y, a)`.
    pub fn class_of(&self, y: usize, a: usize) -> usize {
        self.class[y * self.base_len + a]
    }
}

/// `L(t)`. Product input uses the closed form `L(∏ V_a) = ∐ V_a` with
/// carrier labels `(v,a)`; anything else goes through the coequaliser of
/// `η(β,a) = (β(a),a)` and `ν(β,a) = (θβ,a)`.
pub fn l_set(t: &ContraTable, budget: &Budget) -> Result<LSet> {
    let base = t.base();
    let n_c = base.len();
    budget.admit((t.carrier().len() as u128).saturating_mul(n_c as u128))?;
    if let Some(fibers) = t.fibers() {
        let comodule = SetComodule::from_fibers(base, fibers)?;
        let mut class = Vec::with_capacity(t.carrier().len() * n_c);
        for y in 0..t.carrier().len() {
            let coords = t.coordinates(y).unwrap();
            for a in 0..n_c {
                let label = pair_label(fibers[a].label(coords[a]), base.label(a));
                class.push(comodule.carrier().index_of(&label).unwrap());
            }
        }
        return Ok(LSet {
            comodule,
            base_len: n_c,
            class,
        });
    }
    let q = l_set_generic(t, budget)?;
    let p = product(t.carrier(), base);
    let phi: Vec<usize> = q.reps.iter().map(|&r| p.coords(r).1).collect();
    let comodule = SetComodule::new(FinMap::from_indices(q.quotient.clone(), base.clone(), phi)?);
    let class = (0..t.carrier().len())
        .flat_map(|y| (0..n_c).map(move |a| (y, a)))
        .map(|(y, a)| q.project.apply(p.pair_index(y, a)))
        .collect();
    Ok(LSet {
        comodule,
        base_len: n_c,
        class,
    })
}

/// The coequaliser of `η, ν: [C,Y] × C ⇉ Y × C`, computed by enumeration.
pub fn l_set_generic(t: &ContraTable, budget: &Budget) -> Result<QuotPresentation> {
    let base = t.base();
    let n_c = base.len();
    budget.admit(power(t.carrier().len(), n_c).saturating_mul(n_c as u128))?;
    let p = product(t.carrier(), base);
    let mut pairs = Vec::new();
    for beta in MapTables::new(n_c, t.carrier().len()) {
        let th = t.theta(&beta);
        for (a, &b) in beta.iter().enumerate() {
            pairs.push((p.pair_index(b, a), p.pair_index(th, a)));
        }
    }
    Ok(coequalize_pairs(&p.set, pairs))
}

/// `L(R(M))` directly: sections × C modulo `(β,a) ~ (γ,b)` iff `a = b` and
/// `β(a) = γ(b)`.
pub fn lr_explicit(m: &SetComodule) -> QuotPresentation {
    let secs = sections(m);
    let r = r_set(m);
    let p = product(r.carrier(), m.base());
    QuotPresentation::from_keys(&p.set, |i| {
        let (s, a) = p.coords(i);
        (a, secs[s].apply(a))
    })
}

/// Whether [`lr_explicit`] and the generic coequaliser route give the same
/// partition of sections × C.
pub fn lr_matches_generic(m: &SetComodule, budget: &Budget) -> Result<bool> {
    Ok(lr_explicit(m) == l_set_generic(&r_set(m), budget)?)
}

/// The counit `L(R(M)) → M`, `[(β, a)] ↦ β(a)`.
pub fn counit(m: &SetComodule, budget: &Budget) -> Result<FinMap> {
    let r = r_set(m);
    let l = l_set(&r, budget)?;
    let secs = sections(m);
    let mut table = vec![usize::MAX; l.comodule.carrier().len()];
    for (y, s) in secs.iter().enumerate() {
        for a in 0..m.base().len() {
            let k = l.class_of(y, a);
            let v = s.apply(a);
            if table[k] != usize::MAX && table[k] != v {
                return Err(Error::InvalidStructure("counit is not well defined".into()));
            }
            table[k] = v;
        }
    }
    FinMap::from_indices(l.comodule.carrier().clone(), m.carrier().clone(), table)
}

/// The unit `t → R(L(t))`, `y ↦ (a ↦ [(y, a)])`.
pub fn unit(t: &ContraTable, budget: &Budget) -> Result<FinMap> {
    let l = l_set(t, budget)?;
    let rl = r_set(&l.comodule);
    let fibers = l.comodule.fibers();
    let table = (0..t.carrier().len())
        .map(|y| {
            let coords: Vec<usize> = (0..t.base().len())
                .map(|a| {
                    let k = l.class_of(y, a);
                    fibers[a].index_of(l.comodule.carrier().label(k)).unwrap()
                })
                .collect();
            find_tuple(&rl, &coords)
        })
        .collect::<Result<Vec<_>>>()?;
    FinMap::from_indices(t.carrier().clone(), rl.carrier().clone(), table)
}

fn find_tuple(t: &ContraTable, coords: &[usize]) -> Result<usize> {
    t.product_set()
        .and_then(|p| p.index_of_tuple(coords))
        .ok_or_else(|| Error::InvalidStructure("tuple outside the product".into()))
}

/// `R(f)`: sections are pushed forward, `β ↦ f∘β`.
pub fn r_map(m: &SetComodule, n: &SetComodule, f: &FinMap) -> Result<FinMap> {
    if !m.is_morphism(n, f) {
        return Err(Error::Precondition("not a comodule map".into()));
    }
    let rm = r_set(m);
    let rn = r_set(n);
    let ms = sections(m);
    let ns = sections(n);
    let table = ms
        .iter()
        .map(|s| {
            let pushed = f.after(s).unwrap();
            ns.iter()
                .position(|t| *t == pushed)
                .ok_or_else(|| Error::InvalidStructure("pushed section missing".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    FinMap::from_indices(rm.carrier().clone(), rn.carrier().clone(), table)
}

/// `L(g)`: `[(y, a)] ↦ [(g(y), a)]`.
pub fn l_map(s: &ContraTable, t: &ContraTable, g: &FinMap, budget: &Budget) -> Result<FinMap> {
    let ls = l_set(s, budget)?;
    let lt = l_set(t, budget)?;
    let mut table = vec![usize::MAX; ls.comodule.carrier().len()];
    for y in 0..s.carrier().len() {
        for a in 0..s.base().len() {
            let k = ls.class_of(y, a);
            let v = lt.class_of(g.apply(y), a);
            if table[k] != usize::MAX && table[k] != v {
                return Err(Error::Precondition("map does not respect the classes".into()));
            }
            table[k] = v;
        }
    }
    FinMap::from_indices(
        ls.comodule.carrier().clone(),
        lt.comodule.carrier().clone(),
        table,
    )
}

/// `(Rε)∘(ηR) = id_{R(M)}`.
pub fn triangle_r(m: &SetComodule, budget: &Budget) -> Result<bool> {
    let r = r_set(m);
    let eta_r = unit(&r, budget)?;
    let lr = l_set(&r, budget)?;
    let r_eps = r_map(&lr.comodule, m, &counit(m, budget)?)?;
    Ok(r_eps.after(&eta_r)? == FinMap::identity(r.carrier()))
}

/// `(εL)∘(Lη) = id_{L(t)}`.
pub fn triangle_l(t: &ContraTable, budget: &Budget) -> Result<bool> {
    let l = l_set(t, budget)?;
    let rl = r_set(&l.comodule);
    let l_eta = l_map(t, &rl, &unit(t, budget)?, budget)?;
    let eps_l = counit(&l.comodule, budget)?;
    Ok(eps_l.after(&l_eta)? == FinMap::identity(l.comodule.carrier()))
}

/// Enumeration bounds for the certificates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CertBounds {
    /// Largest comodule carrier.
    pub max_carrier: usize,
    pub max_base: usize,
    /// Largest fiber of a product contramodule.
    pub max_fiber: usize,
}

/// All comodules `φ: {1..n} → {1..c}` within bounds.
pub fn all_comodules(bounds: CertBounds) -> Vec<SetComodule> {
    let mut out = Vec::new();
    for c in 0..=bounds.max_base {
        let base = FinSet::numbered(c);
        for n in 0..=bounds.max_carrier {
            let carrier = FinSet::labelled("x", n);
            for phi in MapTables::new(n, c) {
                out.push(SetComodule::new(
                    FinMap::from_indices(carrier.clone(), base.clone(), phi).unwrap(),
                ));
            }
        }
    }
    out
}

/// All product contramodules with fibers of size `1..=max_fiber` over
/// bases within bounds.
pub fn all_product_contramodules(bounds: CertBounds) -> Vec<ContraTable> {
    (0..=bounds.max_base)
        .flat_map(|c| products_with_fibers(&FinSet::numbered(c), bounds.max_fiber))
        .collect()
}

fn comodule_case(m: &SetComodule, budget: &Budget) -> Result<Report> {
    let mut r = Report::new("comodule");
    r.tick(1);
    let eps = counit(m, budget)?;
    let iso = eps.is_bijective();
    // a degenerate comodule has no sections, so its counit is bijective
    // exactly when the carrier is empty too
    let expected = !m.is_degenerate() || m.carrier().is_empty();
    if iso != expected {
        r.fail(format!("counit bijective = {iso} on {}", m.phi()));
    }
    let lr = l_set(&r_set(m), budget)?.comodule;
    if !lr.is_morphism(m, &eps) {
        r.fail(format!("counit is not a comodule map on {}", m.phi()));
    }
    if !m.is_degenerate() && !triangle_r(m, budget)? {
        r.fail(format!("triangle (R eps)(eta R) fails on {}", m.phi()));
    }
    if !lr_matches_generic(m, budget)? {
        r.fail(format!("explicit LR partition differs from the coequaliser on {}", m.phi()));
    }
    Ok(r)
}

fn contramodule_case(t: &ContraTable, budget: &Budget) -> Result<Report> {
    let mut r = Report::new("contramodule");
    r.tick(1);
    let eta = unit(t, budget)?;
    if !eta.is_bijective() {
        r.fail(format!("unit not bijective on {}", t.carrier()));
    }
    let rl = r_set(&l_set(t, budget)?.comodule);
    if !t.is_morphism(&rl, &eta) {
        r.fail(format!("unit is not a contramodule map on {}", t.carrier()));
    }
    if !triangle_l(t, budget)? {
        r.fail(format!("triangle (eps L)(L eta) fails on {}", t.carrier()));
    }
    Ok(r)
}

/// Counit and unit are isomorphisms and both triangle identities hold on
/// every non-degenerate comodule and non-empty product contramodule within
/// bounds. Degenerate comodules are counted and must have a non-iso counit
/// unless their carrier is empty.
pub fn equivalence_certificate(bounds: CertBounds, budget: &Budget) -> Result<Report> {
    let comodules = all_comodules(bounds);
    let contras = all_product_contramodules(bounds);
    let mut report = Report::new("set co-contra equivalence");
    let degenerate = comodules.iter().filter(|m| m.is_degenerate()).count();
    let parts: Vec<Result<Report>> = comodules
        .par_iter()
        .map(|m| comodule_case(m, budget))
        .chain(contras.par_iter().map(|t| contramodule_case(t, budget)))
        .collect();
    for part in parts {
        report.absorb(part?);
    }
    report.note(format!(
        "{} comodules ({} degenerate, excluded from the iso check), {} product contramodules",
        comodules.len(),
        degenerate,
        contras.len()
    ));
    Ok(report)
}

/// Naturality of the counit and unit along every morphism between
/// instances within bounds.
pub fn naturality_certificate(bounds: CertBounds, budget: &Budget) -> Result<Report> {
    let comodules = all_comodules(bounds);
    let contras = all_product_contramodules(bounds);
    let mut report = Report::new("unit and counit naturality");
    let pairs: Vec<(usize, usize)> = (0..comodules.len())
        .flat_map(|i| (0..comodules.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| comodules[i].base() == comodules[j].base())
        .collect();
    let parts: Vec<Result<Report>> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let (m, n) = (&comodules[i], &comodules[j]);
            let mut r = Report::new("counit naturality");
            let em = counit(m, budget)?;
            let en = counit(n, budget)?;
            let (rm, rn) = (r_set(m), r_set(n));
            for f in &hom_over(m, n, budget)?.maps {
                r.tick(1);
                let lrf = l_map(&rm, &rn, &r_map(m, n, f)?, budget)?;
                if en.after(&lrf)? != f.after(&em)? {
                    r.fail(format!("{} -> {} along {f}", m.phi(), n.phi()));
                }
            }
            Ok(r)
        })
        .collect();
    for part in parts {
        report.absorb(part?);
    }
    let pairs: Vec<(usize, usize)> = (0..contras.len())
        .flat_map(|i| (0..contras.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| contras[i].base() == contras[j].base())
        .collect();
    let parts: Vec<Result<Report>> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let (s, t) = (&contras[i], &contras[j]);
            let mut r = Report::new("unit naturality");
            let us = unit(s, budget)?;
            let ut = unit(t, budget)?;
            let (ls, lt) = (l_set(s, budget)?, l_set(t, budget)?);
            for g in &crate::set_contramodule::contra_hom(s, t, budget)?.maps {
                r.tick(1);
                let rlg = r_map(&ls.comodule, &lt.comodule, &l_map(s, t, g, budget)?)?;
                if rlg.after(&us)? != ut.after(g)? {
                    r.fail(format!("{} -> {} along {g}", s.carrier(), t.carrier()));
                }
            }
            Ok(r)
        })
        .collect();
    for part in parts {
        report.absorb(part?);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(labels: &[&str]) -> FinSet {
        FinSet::new(labels.iter().copied()).unwrap()
    }

    fn abc_over_12() -> SetComodule {
        SetComodule::from_pairs(
            &set(&["a", "b", "c"]),
            &set(&["1", "2"]),
            [("a", "1"), ("b", "2"), ("c", "2")],
        )
        .unwrap()
    }

    #[test]
    fn r_counts_sections() {
        let c = set(&["1", "2"]);
        assert_eq!(r_set(&SetComodule::regular(&c)).carrier().len(), 1);
        assert_eq!(r_set(&abc_over_12()).carrier().len(), 2);
        let d = SetComodule::from_pairs(&set(&["x"]), &c, [("x", "1")]).unwrap();
        assert!(r_set(&d).is_empty());
    }

    #[test]
    fn l_of_product_is_coproduct_of_fibers() {
        let b = Budget::default();
        let t = product_contra(&set(&["1", "2"]), &[set(&["p", "q"]), set(&["r", "s"])]).unwrap();
        let l = l_set(&t, &b).unwrap();
        let sizes: Vec<usize> = l.comodule.fibers().iter().map(FinSet::len).collect();
        assert_eq!(sizes, vec![2, 2]);
        let generic = l_set(&t.to_extensional(&b).unwrap(), &b).unwrap();
        assert_eq!(generic.comodule.fibers().iter().map(FinSet::len).sum::<usize>(), 4);

        let c = set(&["1", "2"]);
        assert!(l_set(&ContraTable::empty(&c), &b)
            .unwrap()
            .comodule
            .carrier()
            .is_empty());
        let pt = product_contra(&c, &[set(&["o"]), set(&["o"])]).unwrap();
        let l = l_set(&pt, &b).unwrap();
        assert!(l.comodule.phi().is_bijective());
    }

    #[test]
    fn lr_explicit_classes() {
        let b = Budget::default();
        let m = abc_over_12();
        let q = lr_explicit(&m);
        assert_eq!(q.quotient.len(), 3);
        assert!(lr_matches_generic(&m, &b).unwrap());
        let e = counit(&m, &b).unwrap();
        assert!(e.is_bijective());
        let d = SetComodule::from_pairs(&set(&["x"]), &set(&["1", "2"]), [("x", "1")]).unwrap();
        assert!(lr_explicit(&d).quotient.is_empty());
        assert!(!counit(&d, &b).unwrap().is_surjective());
    }

    #[test]
    fn unit_on_small_contramodules() {
        let b = Budget::default();
        let c = set(&["1", "2"]);
        let t = product_contra(&c, &[set(&["p", "q"]), set(&["r", "s"])]).unwrap();
        assert!(unit(&t, &b).unwrap().is_bijective());
        let e = unit(&ContraTable::empty(&c), &b).unwrap();
        assert!(e.dom().is_empty() && e.cod().is_empty());
    }

    #[test]
    fn certificate_small_bounds() {
        let b = Budget::default();
        let r = equivalence_certificate(
            CertBounds {
                max_carrier: 3,
                max_base: 2,
                max_fiber: 2,
            },
            &b,
        )
        .unwrap();
        assert!(r.passed, "{r:?}");
    }
}
