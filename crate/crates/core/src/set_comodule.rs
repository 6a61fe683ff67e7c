//! Comodules over a finite set `C`. The comonoid structure on `C` is the
//! diagonal, so a comodule is a set over `C`: a carrier `X` with `φ: X → C`.

use crate::budget::{power, Budget};
use crate::error::{Error, Result};
use crate::finset::{
    equalizer, product, pullback, FinMap, FinSet, FunctionSpace, HomSet, MapTables,
    SubPresentation,
};
use crate::report::Report;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetComodule {
    phi: FinMap,
}

impl SetComodule {
    pub fn new(phi: FinMap) -> Self {
        SetComodule { phi }
    }

    pub fn from_pairs<'a>(
        carrier: &FinSet,
        base: &FinSet,
        pairs: impl IntoIterator<Item = (&'a str, &'a str)>,
    ) -> Result<Self> {
        Ok(SetComodule {
            phi: FinMap::from_pairs(carrier.clone(), base.clone(), pairs)?,
        })
    }

    /// The disjoint union of the given fibers, with carrier labels `(v,a)`.
    pub fn from_fibers(base: &FinSet, fibers: &[FinSet]) -> Result<Self> {
        if fibers.len() != base.len() {
            return Err(Error::MismatchedSignature(format!(
                "{} fibers for a base of size {}",
                fibers.len(),
                base.len()
            )));
        }
        let mut labels = Vec::new();
        for (a, fiber) in fibers.iter().enumerate() {
            for v in fiber.elements() {
                labels.push((crate::finset::pair_label(v, base.label(a)), a));
            }
        }
        let carrier = FinSet::new(labels.iter().map(|l| l.0.clone()))?;
        let mut table = vec![0; carrier.len()];
        for (label, a) in &labels {
            table[carrier.index_of(label).unwrap()] = *a;
        }
        Ok(SetComodule {
            phi: FinMap::from_indices(carrier, base.clone(), table)?,
        })
    }

    /// The cofree comodule `C` over itself, `φ = id`.
    pub fn regular(base: &FinSet) -> Self {
        SetComodule {
            phi: FinMap::identity(base),
        }
    }

    pub fn carrier(&self) -> &FinSet {
        self.phi.dom()
    }

    pub fn base(&self) -> &FinSet {
        self.phi.cod()
    }

    pub fn phi(&self) -> &FinMap {
        &self.phi
    }

    /// The coaction `ρ = (id, φ): X → X × C`.
    pub fn rho(&self) -> FinMap {
        let p = product(self.carrier(), self.base());
        let table = (0..self.carrier().len())
            .map(|x| p.pair_index(x, self.phi.apply(x)))
            .collect();
        FinMap::from_indices(self.carrier().clone(), p.set, table).expect("pairs in range")
    }

    /// `X_a = φ⁻¹(a)`, indexed like the base.
    pub fn fibers(&self) -> Vec<FinSet> {
        let mut idx: Vec<Vec<usize>> = vec![Vec::new(); self.base().len()];
        for x in 0..self.carrier().len() {
            idx[self.phi.apply(x)].push(x);
        }
        idx.into_iter().map(|i| self.carrier().subset(i)).collect()
    }

    /// Carrier indices of each fiber.
    pub fn fiber_indices(&self) -> Vec<Vec<usize>> {
        let mut idx: Vec<Vec<usize>> = vec![Vec::new(); self.base().len()];
        for x in 0..self.carrier().len() {
            idx[self.phi.apply(x)].push(x);
        }
        idx
    }

    /// True iff some fiber is empty, i.e. `φ` is not surjective.
    pub fn is_degenerate(&self) -> bool {
        !self.phi.is_surjective()
    }

    /// Whether `f: X → Y` is a map over `C`.
    pub fn is_morphism(&self, target: &SetComodule, f: &FinMap) -> bool {
        f.dom() == self.carrier()
            && f.cod() == target.carrier()
            && (0..f.dom().len()).all(|x| target.phi.apply(f.apply(x)) == self.phi.apply(x))
    }
}

/// Reads a comodule off a coaction `ρ: X → X × C`, checking counitality.
pub fn comodule_of(rho: &FinMap, base: &FinSet) -> Result<SetComodule> {
    let carrier = rho.dom();
    let p = product(carrier, base);
    if rho.cod() != &p.set {
        return Err(Error::MismatchedSignature(format!(
            "coaction must land in {}",
            p.set
        )));
    }
    let mut phi = Vec::with_capacity(carrier.len());
    for x in 0..carrier.len() {
        let (y, a) = p.coords(rho.apply(x));
        if y != x {
            return Err(Error::NotCounital(format!(
                "rho({}) has first component {}",
                carrier.label(x),
                carrier.label(y)
            )));
        }
        phi.push(a);
    }
    let m = SetComodule::new(FinMap::from_indices(carrier.clone(), base.clone(), phi)?);
    debug_assert!(is_coassociative(rho, &p));
    Ok(m)
}

// (ρ × id)∘ρ = (id × Δ)∘ρ, compared on coordinates
fn is_coassociative(rho: &FinMap, p: &crate::finset::Product) -> bool {
    (0..rho.dom().len()).all(|x| {
        let (y, a) = p.coords(rho.apply(x));
        let (y2, a2) = p.coords(rho.apply(y));
        // left: ((y2, a2), a); right: ((y, a), a)
        y2 == y && a2 == a
    })
}

fn check_base(m: &SetComodule, n: &SetComodule) -> Result<()> {
    if m.base() != n.base() {
        return Err(Error::BaseMismatch(format!("{} versus {}", m.base(), n.base())));
    }
    Ok(())
}

/// Comodule maps `M → N`, built fiberwise as `∏_a [X_a, Y_a]`.
pub fn hom_over(m: &SetComodule, n: &SetComodule, budget: &Budget) -> Result<HomSet> {
    check_base(m, n)?;
    let mf = m.fiber_indices();
    let nf = n.fiber_indices();
    let needed = mf
        .iter()
        .zip(&nf)
        .fold(1u128, |acc, (x, y)| acc.saturating_mul(power(y.len(), x.len())));
    budget.admit(needed)?;
    let mut tables: Vec<Vec<usize>> = vec![vec![0; m.carrier().len()]];
    for (xs, ys) in mf.iter().zip(&nf) {
        let mut next = Vec::new();
        for partial in &tables {
            for choice in MapTables::new(xs.len(), ys.len()) {
                let mut t = partial.clone();
                for (k, &x) in xs.iter().enumerate() {
                    t[x] = ys[choice[k]];
                }
                next.push(t);
            }
        }
        tables = next;
    }
    let maps = tables
        .into_iter()
        .map(|t| FinMap::from_indices(m.carrier().clone(), n.carrier().clone(), t))
        .collect::<Result<Vec<_>>>()?;
    Ok(HomSet::new(m.carrier(), n.carrier(), maps))
}

/// The same hom object computed as the equaliser of
/// `f ↦ ρ_N∘f` and `f ↦ (f × id)∘ρ_M` on `[X, Y] ⇉ [X, Y × C]`.
pub fn hom_over_generic(
    m: &SetComodule,
    n: &SetComodule,
    budget: &Budget,
) -> Result<SubPresentation> {
    check_base(m, n)?;
    let p = product(n.carrier(), n.base());
    budget.admit(power(p.set.len(), m.carrier().len()))?;
    let source = FunctionSpace::within(m.carrier(), n.carrier(), budget)?;
    let target = FunctionSpace::within(m.carrier(), &p.set, budget)?;
    let rho_m = m.rho();
    let rho_n = n.rho();
    let pm = product(m.carrier(), m.base());
    let mut phi_t = Vec::with_capacity(source.len());
    let mut psi_t = Vec::with_capacity(source.len());
    for i in 0..source.len() {
        let f = source.decode(i);
        let left = rho_n.after(&f)?;
        let right: Vec<usize> = (0..m.carrier().len())
            .map(|x| {
                let (y, a) = pm.coords(rho_m.apply(x));
                p.pair_index(f.apply(y), a)
            })
            .collect();
        phi_t.push(target.encode(&left)?);
        psi_t.push(target.index_of_table(&right).expect("total table"));
    }
    let phi_t = FinMap::from_indices(source.set().clone(), target.set().clone(), phi_t)?;
    let psi_t = FinMap::from_indices(source.set().clone(), target.set().clone(), psi_t)?;
    equalizer(&phi_t, &psi_t)
}

/// `Res(M) = (X, f∘φ)` along `f: C → Ĉ`.
pub fn restrict_along(f: &FinMap, m: &SetComodule) -> Result<SetComodule> {
    if f.dom() != m.base() {
        return Err(Error::BaseMismatch(format!(
            "map starts at {}, comodule lives over {}",
            f.dom(),
            m.base()
        )));
    }
    Ok(SetComodule::new(f.after(&m.phi)?))
}

/// `Ind(P) = P ×_Ĉ C` with `φ` the second projection.
pub fn induce_along(f: &FinMap, p: &SetComodule) -> Result<SetComodule> {
    if f.cod() != p.base() {
        return Err(Error::BaseMismatch(format!(
            "map lands in {}, comodule lives over {}",
            f.cod(),
            p.base()
        )));
    }
    let pb = pullback(&p.phi, f)?;
    Ok(SetComodule::new(pb.p2))
}

/// The bijection `hom_Ĉ(Res M, P) → hom_C(M, Ind P)`, `g ↦ (g, φ_M)`.
pub fn transpose_to_induced(
    f: &FinMap,
    m: &SetComodule,
    p: &SetComodule,
    g: &FinMap,
) -> Result<FinMap> {
    let ind = induce_along(f, p)?;
    let pb = pullback(&p.phi, f)?;
    let res = restrict_along(f, m)?;
    if !res.is_morphism(p, g) {
        return Err(Error::Precondition("not a map over the target base".into()));
    }
    let lifted = pb
        .mediate(g, &m.phi)
        .ok_or_else(|| Error::Precondition("square does not commute".into()))?;
    debug_assert_eq!(lifted.cod(), ind.carrier());
    Ok(lifted)
}

/// The inverse bijection `h ↦ π₁∘h`.
pub fn transpose_from_induced(f: &FinMap, p: &SetComodule, h: &FinMap) -> Result<FinMap> {
    let pb = pullback(&p.phi, f)?;
    pb.p1.after(h)
}

/// Every counital `ψ: C → C × C` as a table into the product, together with
/// the number of candidates examined.
pub fn counital_comultiplications(base: &FinSet) -> Result<(u64, Vec<Vec<usize>>)> {
    if base.len() > 4 {
        return Err(Error::BoundExceeded(format!(
            "enumeration needs |C| <= 4, got {}",
            base.len()
        )));
    }
    let p = product(base, base);
    let mut candidates = 0;
    let mut valid = Vec::new();
    for psi in MapTables::new(base.len(), p.set.len()) {
        candidates += 1;
        let counital = psi.iter().enumerate().all(|(c, &t)| {
            let (l, r) = p.coords(t);
            l == c && r == c
        });
        if counital {
            valid.push(psi);
        }
    }
    Ok((candidates, valid))
}

/// Enumerates every `ψ: C → C × C` and counts the counital ones, which must
/// be exactly the diagonal.
pub fn unique_comonoid_certificate(base: &FinSet) -> Result<Report> {
    let (candidates, valid) = counital_comultiplications(base)?;
    let mut report = Report::new("unique comonoid structure");
    report.tick(candidates);
    report.note(format!("{candidates} candidates, {} counital", valid.len()));
    let p = product(base, base);
    let diagonal: Vec<usize> = (0..base.len()).map(|c| p.pair_index(c, c)).collect();
    if valid != vec![diagonal] {
        report.fail(format!("{} counital structures", valid.len()));
    }
    Ok(report)
}
