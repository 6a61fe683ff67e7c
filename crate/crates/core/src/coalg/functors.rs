//! The adjoint pair `L ⊣ R` between contramodules and comodules, its unit
//! and counit, and the certificates built on it.

use super::hom::{comodule_hom_object, contra_hom_object, HomObject};
use super::{compare, Side, VComodule, VContramodule};
use crate::error::{Error, Result};
use crate::exactlin::{
    coequalizer_lin, curry, evaluation, hom_operator, postcompose, precompose, tensor_map,
    GradedVect, LinMap, LinQuot, LinSub,
};
use crate::report::Report;

/// `R M = [C, M]_T` with its contramodule structure; `hom.sub.include`
/// embeds it in `[C, M]`.
#[derive(Debug, Clone)]
pub struct RObject {
    pub contra: VContramodule,
    pub hom: HomObject,
}

/// `L P`, the coequaliser of `δ` and `β` on `[C, P] ⊗ C ⇉ P ⊗ C`, with its
/// coaction; `quot.project` is the projection from `P ⊗ C`.
#[derive(Debug, Clone)]
pub struct LObject {
    pub comodule: VComodule,
    pub quot: LinQuot,
}

impl RObject {
    pub fn include(&self) -> &LinMap {
        &self.hom.sub.include
    }
}

impl LObject {
    pub fn project(&self) -> &LinMap {
        &self.quot.project
    }
}

fn require_right(m: &VComodule) -> Result<()> {
    if m.side() != Side::Right {
        return Err(Error::Precondition("expected a right comodule".into()));
    }
    Ok(())
}

pub fn functor_r(m: &VComodule) -> Result<RObject> {
    require_right(m)?;
    let c = m.coalgebra();
    let reg = VComodule::regular(c, Side::Right);
    let hom = comodule_hom_object(&reg, m)?;
    let g = c.mu(m.space())?.after(&postcompose(&hom.sub.include, c.space())?)?;
    let theta = hom.sub.factor(&g)?;
    Ok(RObject {
        contra: VContramodule::new(c, theta)?,
        hom,
    })
}

pub fn functor_l(p: &VContramodule) -> Result<LObject> {
    let c = p.coalgebra();
    let field = p.field();
    let (cs, y) = (c.space(), p.space());
    let idc = LinMap::identity(field, cs);
    let idcy = LinMap::identity(field, &cs.internal_hom(y));
    let delta = tensor_map(p.theta(), &idc)?;
    let beta = tensor_map(&evaluation(field, cs, y), &idc)?.after(&tensor_map(&idcy, c.delta())?)?;
    let quot = coequalizer_lin(&delta, &beta)?;
    let idy = LinMap::identity(field, y);
    let coaction = tensor_map(&quot.project, &idc)?.after(&tensor_map(&idy, c.delta())?)?;
    let rho = quot.induce(&coaction)?;
    Ok(LObject {
        comodule: VComodule::new(c, Side::Right, rho)?,
        quot,
    })
}

/// `R(f) = [C, f]` restricted to the hom objects.
pub fn r_map(source: &RObject, target: &RObject, f: &LinMap) -> Result<LinMap> {
    let c = source.contra.coalgebra().space();
    target
        .hom
        .sub
        .factor(&postcompose(f, c)?.after(source.include())?)
}

/// `L(g)`, induced by `g ⊗ id` on `P ⊗ C`.
pub fn l_map(source: &LObject, target: &LObject, g: &LinMap) -> Result<LinMap> {
    let idc = LinMap::identity(g.field(), source.comodule.coalgebra().space());
    source
        .quot
        .induce(&target.project().after(&tensor_map(g, &idc)?)?)
}

/// `η_P: P → R L P`, `p ↦ (c ↦ [p ⊗ c])`.
pub fn unit(p: &VContramodule, lp: &LObject, rlp: &RObject) -> Result<LinMap> {
    let c = p.coalgebra().space();
    let curried = curry(lp.project(), p.space(), c)?;
    rlp.hom.sub.factor(&curried)
}

/// `ε_M: L R M → M`, induced by evaluation on `R M ⊗ C`.
pub fn counit(m: &VComodule, rm: &RObject, lrm: &LObject) -> Result<LinMap> {
    let field = m.field();
    let c = m.coalgebra().space();
    let ev = evaluation(field, c, m.space());
    let idc = LinMap::identity(field, c);
    lrm.quot.induce(&ev.after(&tensor_map(rm.include(), &idc)?)?)
}

/// Both triangle identities, and that unit and counit are morphisms.
pub fn triangle_report(p: &VContramodule, m: &VComodule) -> Result<Report> {
    let mut r = Report::new("triangle identities");
    let field = p.field();
    let lp = functor_l(p)?;
    let rlp = functor_r(&lp.comodule)?;
    let eta_p = unit(p, &lp, &rlp)?;
    let lrlp = functor_l(&rlp.contra)?;
    let eps_lp = counit(&lp.comodule, &rlp, &lrlp)?;
    let l_eta = l_map(&lp, &lrlp, &eta_p)?;
    compare(
        &mut r,
        "ε_{LP}∘L(η_P) = id",
        &eps_lp.after(&l_eta)?,
        &LinMap::identity(field, lp.comodule.space()),
    );

    let rm = functor_r(m)?;
    let lrm = functor_l(&rm.contra)?;
    let eps_m = counit(m, &rm, &lrm)?;
    let rlrm = functor_r(&lrm.comodule)?;
    let eta_rm = unit(&rm.contra, &lrm, &rlrm)?;
    let r_eps = r_map(&rlrm, &rm, &eps_m)?;
    compare(
        &mut r,
        "R(ε_M)∘η_{RM} = id",
        &r_eps.after(&eta_rm)?,
        &LinMap::identity(field, rm.contra.space()),
    );

    r.tick(4);
    if !p.is_morphism(&rlp.contra, &eta_p)? {
        r.fail("η_P is not a contramodule morphism");
    }
    if !lrm.comodule.is_morphism(m, &eps_m)? {
        r.fail("ε_M is not a comodule morphism");
    }
    if !rm.contra.validate().passed {
        r.fail("R M fails the contramodule axioms");
    }
    if !lp.comodule.validate().passed {
        r.fail("L P fails the comodule axioms");
    }
    Ok(r)
}

/// Whether unit `η_P` and counit `ε_M` are isomorphisms.
pub fn collapse_report(p: &VContramodule, m: &VComodule) -> Result<Report> {
    let mut r = Report::new("unit and counit invertible");
    let lp = functor_l(p)?;
    let rlp = functor_r(&lp.comodule)?;
    let eta = unit(p, &lp, &rlp)?;
    r.tick(1);
    if !eta.is_invertible() {
        r.fail(format!(
            "η_P: dim P = {}, dim RLP = {}, rank {}",
            p.dim(),
            rlp.contra.dim(),
            eta.rank()
        ));
    }
    let rm = functor_r(m)?;
    let lrm = functor_l(&rm.contra)?;
    let eps = counit(m, &rm, &lrm)?;
    r.tick(1);
    if !eps.is_invertible() {
        r.fail(format!(
            "ε_M: dim LRM = {}, dim M = {}, rank {}",
            lrm.comodule.dim(),
            m.dim(),
            eps.rank()
        ));
    }
    Ok(r)
}

/// The two copies of the adjunction hom inside `[P, [C, M]]`.
#[derive(Debug, Clone)]
pub struct AdjunctionSides {
    /// `[LP, M]_T` and its image under `h ↦ curry(h∘π)`.
    pub comodule_side: HomObject,
    pub s1: LinSub,
    /// `[P, RM]^F` and its image under postcomposition with `RM ⊆ [C, M]`.
    pub contra_side: HomObject,
    pub s2: LinSub,
    /// `Φ: [LP, M]_T → [P, RM]^F` in the two bases.
    pub phi: LinMap,
}

pub fn adjunction_sides(p: &VContramodule, m: &VComodule) -> Result<AdjunctionSides> {
    if p.coalgebra() != m.coalgebra() {
        return Err(Error::CoalgebraMismatch);
    }
    let field = p.field();
    let c = p.coalgebra().space();
    let (y, x) = (p.space(), m.space());
    let lp = functor_l(p)?;
    let rm = functor_r(m)?;
    let pc = y.tensor(c);
    let cm = c.internal_hom(x);
    let ambient = y.internal_hom(&cm);

    let ht = comodule_hom_object(&lp.comodule, m)?;
    let curry_op = hom_operator(field, (&pc, x), (y, &cm), 0, |f| curry(f, y, c))?;
    let embed1 = curry_op.after(&precompose(lp.project(), x)?)?;
    let s1_vectors: Vec<_> = (0..ht.dim())
        .map(|i| embed1.matrix().apply(&ht.sub.basis_vector(i)))
        .collect::<Result<_>>()?;
    let s1 = LinSub::span(field, &ambient, &s1_vectors)?;

    let hf = contra_hom_object(p, &rm.contra)?;
    let embed2 = postcompose(rm.include(), y)?;
    let s2_vectors: Vec<_> = (0..hf.dim())
        .map(|i| embed2.matrix().apply(&hf.sub.basis_vector(i)))
        .collect::<Result<_>>()?;
    let s2 = LinSub::span(field, &ambient, &s2_vectors)?;

    // Φ(h) = the element of [P, RM]^F whose image is curry(h∘π)
    let to_s1 = embed1.after(&ht.sub.include)?;
    let through_rm = LinSub {
        ambient: ambient.clone(),
        sub: hf.sub.sub.clone(),
        include: embed2.after(&hf.sub.include)?,
    };
    let phi = through_rm.factor(&to_s1).map_err(|_| {
        Error::InvalidStructure("comodule side does not land in the contramodule side".into())
    })?;
    Ok(AdjunctionSides {
        comodule_side: ht,
        s1,
        contra_side: hf,
        s2,
        phi,
    })
}

/// Certifies `[LP, M]_T ≅ [P, RM]^F` as equal subspaces of `[P, [C, M]]`,
/// naturality against every pair of basis endomorphisms, and the triangle
/// identities.
pub fn adjunction_certificate(p: &VContramodule, m: &VComodule) -> Result<Report> {
    let mut r = Report::new("adjunction");
    let sides = match adjunction_sides(p, m) {
        Ok(s) => s,
        Err(Error::InvalidStructure(w)) => {
            r.fail(w);
            return Ok(r);
        }
        Err(e) => return Err(e),
    };
    r.tick(1);
    let (s1, s2) = (&sides.s1, &sides.s2);
    if s1.dim() != sides.comodule_side.dim() {
        r.fail(format!(
            "embedding of [LP, M]_T is not injective: {} → {}",
            sides.comodule_side.dim(),
            s1.dim()
        ));
    }
    if !(s1.dim() == s2.dim() && s1.contains_subspace(s2) && s2.contains_subspace(s1)) {
        r.fail(format!("subspaces differ: dim {} vs {}", s1.dim(), s2.dim()));
    }
    r.note(format!("dim [LP, M]_T = dim [P, RM]^F = {}", s1.dim()));

    let endos_p = contra_hom_object(p, p)?.morphisms();
    let endos_m = comodule_hom_object(m, m)?.morphisms();
    let id_p = LinMap::identity(p.field(), p.space());
    let id_m = LinMap::identity(m.field(), m.space());
    let gs: Vec<_> = std::iter::once(id_p).chain(endos_p).collect();
    let fs: Vec<_> = std::iter::once(id_m).chain(endos_m).collect();
    for g in &gs {
        for f in &fs {
            let nat = naturality_report(p, p, g, m, m, f)?;
            r.absorb(nat);
        }
    }
    r.absorb(triangle_report(p, m)?);
    Ok(r)
}

/// Checks `Φ(f∘h∘L(g)) = R(f)∘Φ(h)∘g` for every basis element `h` of
/// `[LP, M]_T`, where `g: P' → P` and `f: M → M'` are morphisms.
pub fn naturality_report(
    p_new: &VContramodule,
    p: &VContramodule,
    g: &LinMap,
    m: &VComodule,
    m_new: &VComodule,
    f: &LinMap,
) -> Result<Report> {
    let mut r = Report::new("adjunction naturality");
    let old = adjunction_sides(p, m)?;
    let new = adjunction_sides(p_new, m_new)?;
    let lp = functor_l(p)?;
    let lp_new = functor_l(p_new)?;
    let rm = functor_r(m)?;
    let rm_new = functor_r(m_new)?;
    let lg = l_map(&lp_new, &lp, g)?;
    let rf = r_map(&rm, &rm_new, f)?;
    for i in 0..old.comodule_side.dim() {
        r.tick(1);
        let h = old.comodule_side.element(i);
        let moved = f.after(&h)?.after(&lg)?;
        let coords = new.comodule_side.coordinates(&moved).ok_or_else(|| {
            Error::InvalidStructure("f∘h∘L(g) is not a comodule map".into())
        })?;
        let lhs = new.phi.matrix().apply(&coords)?;
        let phi_h = old.phi.matrix().apply(&old.comodule_side.coordinates(&h).unwrap())?;
        let phi_h = LinMap::from_hom_vector_in(
            p.field(),
            p.space(),
            rm.contra.space(),
            &old.contra_side.sub.include.matrix().apply(&phi_h)?,
        )?;
        let rhs_map = rf.after(&phi_h)?.after(g)?;
        let rhs = new.contra_side.coordinates(&rhs_map);
        if rhs.as_deref() != Some(&lhs[..]) {
            r.fail(format!("naturality fails on basis element {i}"));
        }
    }
    Ok(r)
}

/// Certifies that `FX → R(TX)`, `h ↦ (h ⊗ id)∘Δ`, is an isomorphism of
/// contramodules and that `dim R(TX) = dim C · dim X`.
pub fn kleisli_certificate(x: &GradedVect, c: &super::Coalgebra) -> Result<Report> {
    let mut r = Report::new("kleisli");
    let field = c.field();
    let cs = c.space();
    let tx = VComodule::cofree(x, c);
    let fx = VContramodule::free(x, c)?;
    let rtx = functor_r(&tx)?;
    let idc = LinMap::identity(field, cs);
    let kappa = hom_operator(field, (cs, x), (cs, tx.space()), 0, |h| {
        tensor_map(h, &idc)?.after(c.delta())
    })?;
    let kappa = rtx.hom.sub.factor(&kappa)?;
    r.tick(3);
    if rtx.contra.dim() != c.dim() * x.dim() {
        r.fail(format!(
            "dim R(TX) = {}, expected {}",
            rtx.contra.dim(),
            c.dim() * x.dim()
        ));
    }
    if !kappa.is_invertible() {
        r.fail(format!("FX → R(TX) has rank {}", kappa.rank()));
    }
    if !fx.is_morphism(&rtx.contra, &kappa)? {
        r.fail("FX → R(TX) is not a contramodule morphism");
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::super::Coalgebra;
    use super::*;
    use crate::exactlin::Field;

    fn grouplike(field: Field, n: usize) -> Coalgebra {
        let terms: Vec<_> = (0..n).map(|g| (g, g, g, field.one())).collect();
        Coalgebra::from_terms(field, GradedVect::ungraded(n), &terms, &vec![field.one(); n]).unwrap()
    }

    #[test]
    fn trivial_coalgebra_functors_are_identity() {
        let q = Field::Rational;
        let c = Coalgebra::trivial(q);
        let m = VComodule::cofree(&GradedVect::ungraded(2), &c);
        let rm = functor_r(&m).unwrap();
        assert_eq!(rm.contra.dim(), 2);
        let l = functor_l(&rm.contra).unwrap();
        assert_eq!(l.comodule.dim(), 2);
    }

    #[test]
    fn free_and_cofree_correspond() {
        let c = grouplike(Field::Prime(2), 2);
        let x = GradedVect::ungraded(2);
        let lfx = functor_l(&VContramodule::free(&x, &c).unwrap()).unwrap();
        assert_eq!(lfx.comodule.dim(), 4);
        assert!(lfx.comodule.validate().passed);
        assert!(kleisli_certificate(&x, &c).unwrap().passed);
    }

    #[test]
    fn adjunction_on_grouplike() {
        let q = Field::Rational;
        let c = grouplike(q, 2);
        let p = VContramodule::free(&GradedVect::unit(), &c).unwrap();
        let m = VComodule::cofree(&GradedVect::unit(), &c);
        let rep = adjunction_certificate(&p, &m).unwrap();
        assert!(rep.passed, "{rep:?}");
        assert!(collapse_report(&p, &m).unwrap().passed);
    }
}
