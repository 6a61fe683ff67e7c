//! Change of coalgebra along a morphism `f: C → Ĉ`: restriction, induction
//! by cotensor, coinduction by cohom, and the trifunctor probe.

use super::hom::{comodule_hom_object, contra_hom_object, HomObject};
use super::{Coalgebra, Side, VComodule, VContramodule};
use crate::error::{Error, Result};
use crate::exactlin::{
    equalizer_lin, hom_operator, postcompose, precompose, tensor_map, uncurry,
    GradedVect, LinMap, LinQuot, LinSub,
};
use crate::report::Report;

/// A validated coalgebra morphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoalgebraMorphism {
    pub source: Coalgebra,
    pub target: Coalgebra,
    pub map: LinMap,
}

impl CoalgebraMorphism {
    pub fn new(source: &Coalgebra, target: &Coalgebra, map: LinMap) -> Result<Self> {
        source.check_morphism_to(target, &map)?;
        Ok(CoalgebraMorphism {
            source: source.clone(),
            target: target.clone(),
            map,
        })
    }

    pub fn identity(c: &Coalgebra) -> Self {
        CoalgebraMorphism {
            source: c.clone(),
            target: c.clone(),
            map: LinMap::identity(c.field(), c.space()),
        }
    }

    /// The counit `ε: C → k`.
    pub fn counit(c: &Coalgebra) -> Self {
        CoalgebraMorphism {
            source: c.clone(),
            target: Coalgebra::trivial(c.field()),
            map: c.eps().clone(),
        }
    }

    /// `C` as a left `Ĉ`-comodule via `(f ⊗ id)∘Δ`.
    pub fn source_as_left(&self) -> Result<VComodule> {
        let idc = LinMap::identity(self.source.field(), self.source.space());
        let rho = tensor_map(&self.map, &idc)?.after(self.source.delta())?;
        VComodule::new(&self.target, Side::Left, rho)
    }

    /// `C` as a right `Ĉ`-comodule via `(id ⊗ f)∘Δ`.
    pub fn source_as_right(&self) -> Result<VComodule> {
        let idc = LinMap::identity(self.source.field(), self.source.space());
        let rho = tensor_map(&idc, &self.map)?.after(self.source.delta())?;
        VComodule::new(&self.target, Side::Right, rho)
    }
}

/// The comodule over `Ĉ` with coaction pushed along `f`.
pub fn restrict_comodule(f: &CoalgebraMorphism, m: &VComodule) -> Result<VComodule> {
    if m.coalgebra() != &f.source {
        return Err(Error::CoalgebraMismatch);
    }
    let id = LinMap::identity(m.field(), m.space());
    let rho = match m.side() {
        Side::Right => tensor_map(&id, &f.map)?.after(m.rho())?,
        Side::Left => tensor_map(&f.map, &id)?.after(m.rho())?,
    };
    VComodule::new(&f.target, m.side(), rho)
}

/// The contramodule over `Ĉ` with `θ∘[f, id]`.
pub fn restrict_contramodule(f: &CoalgebraMorphism, p: &VContramodule) -> Result<VContramodule> {
    if p.coalgebra() != &f.source {
        return Err(Error::CoalgebraMismatch);
    }
    let theta = p.theta().after(&precompose(&f.map, p.space())?)?;
    VContramodule::new(&f.target, theta)
}

/// `M □_C N` inside `M ⊗ N`, for a right comodule `M` and a left comodule
/// `N`.
pub fn cotensor(m: &VComodule, n: &VComodule) -> Result<LinSub> {
    if m.coalgebra() != n.coalgebra() {
        return Err(Error::CoalgebraMismatch);
    }
    if m.side() != Side::Right || n.side() != Side::Left {
        return Err(Error::Precondition("cotensor needs a right and a left comodule".into()));
    }
    let idm = LinMap::identity(m.field(), m.space());
    let idn = LinMap::identity(m.field(), n.space());
    equalizer_lin(&tensor_map(m.rho(), &idn)?, &tensor_map(&idm, n.rho())?)
}

/// The two maps `[M, [C, P]] ⇉ [M, P]` whose coequaliser is the cohom:
/// `h ↦ (m ↦ Σ h(m₀)(m₁))` and `h ↦ θ∘h`.
fn cohom_pair(m: &VComodule, p: &VContramodule) -> Result<(LinMap, LinMap)> {
    if m.coalgebra() != p.coalgebra() {
        return Err(Error::CoalgebraMismatch);
    }
    if m.side() != Side::Right {
        return Err(Error::Precondition("cohom needs a right comodule".into()));
    }
    let field = m.field();
    let c = m.coalgebra().space();
    let (x, y) = (m.space(), p.space());
    let cy = c.internal_hom(y);
    let u1 = hom_operator(field, (x, &cy), (x, y), 0, |h| {
        uncurry(h, c, y)?.after(m.rho())
    })?;
    let u2 = postcompose(p.theta(), x)?;
    Ok((u1, u2))
}

/// `Cohom_C(M, P)` as a quotient of `[M, P]`.
pub fn cohom(m: &VComodule, p: &VContramodule) -> Result<LinQuot> {
    let (u1, u2) = cohom_pair(m, p)?;
    crate::exactlin::coequalizer_lin(&u1, &u2)
}

/// `Ind M = M □_Ĉ C` over `C`, with the coaction from `Δ_C`; the subspace
/// embeds it in `M ⊗ C`.
pub fn induce_comodule(f: &CoalgebraMorphism, m: &VComodule) -> Result<(VComodule, LinSub)> {
    if m.coalgebra() != &f.target {
        return Err(Error::CoalgebraMismatch);
    }
    let sub = cotensor(m, &f.source_as_left()?)?;
    let ambient = VComodule::cofree(m.space(), &f.source);
    Ok((ambient.restrict_to(&sub)?, sub))
}

/// `Coind P = Cohom_Ĉ(C, P)` over `C`, as a quotient of the free
/// contramodule `[C, P]`; the map is the projection.
pub fn coinduce_contramodule(
    f: &CoalgebraMorphism,
    p: &VContramodule,
) -> Result<(VContramodule, LinMap)> {
    if p.coalgebra() != &f.target {
        return Err(Error::CoalgebraMismatch);
    }
    let (u1, u2) = cohom_pair(&f.source_as_right()?, p)?;
    let d = u1.sub(&u2)?;
    let field = p.field();
    let columns: Vec<_> = (0..d.matrix().cols()).map(|j| d.matrix().column(j)).collect();
    let relations = LinSub::span(field, d.cod(), &columns)?;
    VContramodule::free(p.space(), &f.source)?.quotient_by(&relations)
}

/// Compares a linear map between two hom objects against being an
/// isomorphism.
fn certify_iso(r: &mut Report, what: &str, from: &HomObject, to: &HomObject, op: &LinMap) {
    r.tick(1);
    let images: Result<Vec<_>> = (0..from.dim())
        .map(|i| op.matrix().apply(&from.sub.basis_vector(i)))
        .collect();
    let images = match images {
        Ok(v) => v,
        Err(e) => return r.fail(format!("{what}: {e}")),
    };
    for (i, v) in images.iter().enumerate() {
        if !to.sub.contains(v) {
            return r.fail(format!("{what}: image of basis element {i} leaves the target"));
        }
    }
    let span = LinSub::span(to.sub.field(), &to.sub.ambient, &images);
    match span {
        Ok(s) if s.dim() == from.dim() && s.dim() == to.dim() => {}
        Ok(s) => r.fail(format!(
            "{what}: dims {} → {} with image of dim {}",
            from.dim(),
            to.dim(),
            s.dim()
        )),
        Err(e) => r.fail(format!("{what}: {e}")),
    }
}

/// `[N, Ind M]_C ≅ [Res N, M]_Ĉ` through `h ↦ (id ⊗ ε)∘h`.
pub fn induction_adjunction_report(
    f: &CoalgebraMorphism,
    n: &VComodule,
    m: &VComodule,
) -> Result<Report> {
    let mut r = Report::new("induction adjunction");
    let (ind, sub) = induce_comodule(f, m)?;
    let res = restrict_comodule(f, n)?;
    let left = comodule_hom_object(n, &ind)?;
    let right = comodule_hom_object(&res, m)?;
    let field = m.field();
    let contract = tensor_map(&LinMap::identity(field, m.space()), f.source.eps())?
        .after(&sub.include)?;
    let op = postcompose(&contract, n.space())?;
    certify_iso(&mut r, "[N, Ind M] → [Res N, M]", &left, &right, &op);
    r.tick(1);
    if !ind.validate().passed {
        r.fail("Ind M fails the comodule axioms");
    }
    Ok(r)
}

/// `[Coind P, Q]_C ≅ [P, Res Q]_Ĉ` through precomposition with
/// `P → [C, P] → Coind P`.
pub fn coinduction_adjunction_report(
    f: &CoalgebraMorphism,
    p: &VContramodule,
    q: &VContramodule,
) -> Result<Report> {
    let mut r = Report::new("coinduction adjunction");
    let (coind, project) = coinduce_contramodule(f, p)?;
    let res = restrict_contramodule(f, q)?;
    let left = contra_hom_object(&coind, q)?;
    let right = contra_hom_object(p, &res)?;
    let unit = project.after(&f.source.unit_map(p.space()))?;
    let op = precompose(&unit, q.space())?;
    certify_iso(&mut r, "[Coind P, Q] → [P, Res Q]", &left, &right, &op);
    r.tick(1);
    if !coind.validate().passed {
        r.fail("Coind P fails the contramodule axioms");
    }
    Ok(r)
}

/// `M ≅ M □_C C` via `ρ_M`, with inverse `(id ⊗ ε)` on the cotensor.
pub fn cotensor_unit_report(m: &VComodule) -> Result<Report> {
    let mut r = Report::new("M □ C ≅ M");
    let c = m.coalgebra();
    let sub = cotensor(m, &VComodule::regular(c, Side::Left))?;
    let to = sub.factor(m.rho())?;
    let back = tensor_map(&LinMap::identity(m.field(), m.space()), c.eps())?.after(&sub.include)?;
    r.tick(2);
    if !to.is_invertible() {
        r.fail(format!("dim M = {}, dim M □ C = {}", m.dim(), sub.dim()));
    }
    if back.after(&to)? != LinMap::identity(m.field(), m.space()) {
        r.fail("(id ⊗ ε)∘ρ is not the identity on M");
    }
    Ok(r)
}

/// `Cohom_C(C, P) ≅ P` via the map induced by `θ`.
pub fn cohom_unit_report(p: &VContramodule) -> Result<Report> {
    let mut r = Report::new("Cohom(C, P) ≅ P");
    let c = p.coalgebra();
    let q = cohom(&VComodule::regular(c, Side::Right), p)?;
    r.tick(1);
    match q.induce(p.theta()) {
        Ok(induced) if induced.is_invertible() => {}
        Ok(induced) => r.fail(format!(
            "dim Cohom = {}, dim P = {}, rank {}",
            q.dim(),
            p.dim(),
            induced.rank()
        )),
        Err(e) => r.fail(format!("θ does not descend: {e}")),
    }
    Ok(r)
}

/// `[N, X]` as a contramodule for a left comodule `N`:
/// `θ(H) = (n ↦ Σ H(n₋₁)(n₀))`.
pub fn hom_contramodule(n: &VComodule, x: &GradedVect) -> Result<VContramodule> {
    if n.side() != Side::Left {
        return Err(Error::Precondition("[N, X] needs a left comodule".into()));
    }
    let c = n.coalgebra();
    let cs = c.space();
    let nx = n.space().internal_hom(x);
    let field = c.field();
    let theta = hom_operator(field, (cs, &nx), (n.space(), x), 0, |h| {
        uncurry(h, n.space(), x)?.after(n.rho())
    })?;
    VContramodule::new(c, theta)
}

/// Outcome of one probe of `[M □ N, X]` against `Cohom(M, [N, X])`.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct ProbeOutcome {
    pub dim_cotensor_hom: usize,
    pub dim_cohom: usize,
    /// Whether uncurrying and restricting to `M □ N` descends to the cohom.
    pub map_descends: bool,
    pub map_is_iso: bool,
}

pub fn trifunctor_probe(m: &VComodule, n: &VComodule, x: &GradedVect) -> Result<ProbeOutcome> {
    let cot = cotensor(m, n)?;
    let nx = hom_contramodule(n, x)?;
    let q = cohom(m, &nx)?;
    let field = m.field();
    let (ms, ns) = (m.space(), n.space());
    let candidate = precompose(&cot.include, x)?.after(&hom_operator(
        field,
        (ms, &ns.internal_hom(x)),
        (&ms.tensor(ns), x),
        0,
        |h| uncurry(h, ns, x),
    )?)?;
    let induced = q.induce(&candidate).ok();
    let dim_cotensor_hom = cot.dim() * x.dim();
    Ok(ProbeOutcome {
        dim_cotensor_hom,
        dim_cohom: q.dim(),
        map_descends: induced.is_some(),
        map_is_iso: induced.is_some_and(|f| f.is_invertible()),
    })
}

impl ProbeOutcome {
    /// The report is internally consistent: an isomorphism forces equal
    /// dimensions and requires the map to descend.
    pub fn consistent(&self) -> bool {
        !self.map_is_iso || (self.map_descends && self.dim_cotensor_hom == self.dim_cohom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{Field, Matrix};

    fn grouplike(field: Field, n: usize) -> Coalgebra {
        let terms: Vec<_> = (0..n).map(|g| (g, g, g, field.one())).collect();
        Coalgebra::from_terms(field, GradedVect::ungraded(n), &terms, &vec![field.one(); n]).unwrap()
    }

    #[test]
    fn identity_change_is_trivial() {
        let q = Field::Rational;
        let c = grouplike(q, 2);
        let id = CoalgebraMorphism::identity(&c);
        let m = VComodule::cofree(&GradedVect::unit(), &c);
        assert_eq!(restrict_comodule(&id, &m).unwrap(), m);
        let (ind, _) = induce_comodule(&id, &m).unwrap();
        assert_eq!(ind.dim(), m.dim());
        let p = VContramodule::free(&GradedVect::unit(), &c).unwrap();
        let (coind, _) = coinduce_contramodule(&id, &p).unwrap();
        assert_eq!(coind.dim(), p.dim());
    }

    #[test]
    fn along_counit_gives_cofree_and_free() {
        let f2 = Field::Prime(2);
        let c = grouplike(f2, 2);
        let eps = CoalgebraMorphism::counit(&c);
        let k = Coalgebra::trivial(f2);
        let x = VComodule::cofree(&GradedVect::ungraded(2), &k);
        let (ind, _) = induce_comodule(&eps, &x).unwrap();
        assert_eq!(ind.dim(), 4);
        let p = VContramodule::free(&GradedVect::ungraded(2), &k).unwrap();
        let (coind, _) = coinduce_contramodule(&eps, &p).unwrap();
        assert_eq!(coind.dim(), 4);
        let n = VComodule::regular(&c, Side::Right);
        assert!(induction_adjunction_report(&eps, &n, &x).unwrap().passed);
        let qq = VContramodule::free(&GradedVect::unit(), &c).unwrap();
        assert!(coinduction_adjunction_report(&eps, &p, &qq).unwrap().passed);
    }

    #[test]
    fn grouplike_inclusion() {
        let q = Field::Rational;
        let c = grouplike(q, 2);
        let k = Coalgebra::trivial(q);
        let inc = CoalgebraMorphism::new(
            &k,
            &c,
            LinMap::new(GradedVect::unit(), GradedVect::ungraded(2), 0, Matrix::from_ints(q, &[&[1], &[0]])).unwrap(),
        )
        .unwrap();
        let m = VComodule::cofree(&GradedVect::ungraded(1), &k);
        let pushed = restrict_comodule(&inc, &m).unwrap();
        assert_eq!(pushed, VComodule::trivial_at(&GradedVect::unit(), &c, 0).unwrap());
        let graded = VComodule::regular(&c, Side::Right);
        let (ind, _) = induce_comodule(&inc, &graded).unwrap();
        assert_eq!(ind.dim(), 1);
    }

    #[test]
    fn unit_isomorphisms_and_probe() {
        let f2 = Field::Prime(2);
        let c = grouplike(f2, 2);
        let m = VComodule::regular(&c, Side::Right);
        assert!(cotensor_unit_report(&m).unwrap().passed);
        let p = VContramodule::free(&GradedVect::unit(), &c).unwrap();
        assert!(cohom_unit_report(&p).unwrap().passed);
        let n = VComodule::regular(&c, Side::Left);
        let out = trifunctor_probe(&m, &n, &GradedVect::unit()).unwrap();
        assert!(out.consistent());
        assert_eq!(out.dim_cotensor_hom, 2);
    }
}
