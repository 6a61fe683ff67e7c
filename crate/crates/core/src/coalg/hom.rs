//! Hom objects as equalisers inside the internal hom, and their enriched
//! composition.

use super::{VComodule, VContramodule};
use crate::error::{Error, Result};
use crate::exactlin::{
    equalizer_lin, hom_operator, postcompose, precompose, GradedVect, LinMap, LinSub, Matrix,
};

/// A sub-object of `[dom, cod]` given by a basis of elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomObject {
    pub dom: GradedVect,
    pub cod: GradedVect,
    pub sub: LinSub,
}

impl HomObject {
    pub fn dim(&self) -> usize {
        self.sub.dim()
    }

    /// The `i`-th basis element as a map `dom → cod`.
    pub fn element(&self, i: usize) -> LinMap {
        let v = self.sub.basis_vector(i);
        LinMap::from_hom_vector_in(self.sub.field(), &self.dom, &self.cod, &v)
            .expect("basis elements are homogeneous")
    }

    pub fn coordinates(&self, f: &LinMap) -> Option<Vec<crate::exactlin::Scalar>> {
        if f.dom() != &self.dom || f.cod() != &self.cod {
            return None;
        }
        self.sub.coordinates(&f.to_hom_vector())
    }

    pub fn contains(&self, f: &LinMap) -> bool {
        self.coordinates(f).is_some()
    }

    /// Basis of the degree-0 part: the honest morphisms.
    pub fn morphisms(&self) -> Vec<LinMap> {
        (0..self.dim())
            .filter(|&i| self.sub.sub.degree(i) == 0)
            .map(|i| self.element(i))
            .collect()
    }

    /// The map `H' → H` sending an element of `self` to a linear
    /// combination of another basis of (a superspace of) the same objects.
    pub fn comparison(&self, other: &HomObject) -> Result<LinMap> {
        if self.dom != other.dom || self.cod != other.cod {
            return Err(Error::MismatchedSignature("hom objects between different ends".into()));
        }
        other.sub.factor(&self.sub.include)
    }
}

/// `[M, N]_T`: the equaliser of `f ↦ ρ_N∘f` and `f ↦ (f⊗id)∘ρ_M`.
pub fn comodule_hom_object(m: &VComodule, n: &VComodule) -> Result<HomObject> {
    if m.coalgebra() != n.coalgebra() || m.side() != n.side() {
        return Err(Error::CoalgebraMismatch);
    }
    let field = m.field();
    let (x, y) = (m.space(), n.space());
    let phi = postcompose(n.rho(), x)?;
    let psi = hom_operator(field, (x, y), (x, n.rho().cod()), 0, |f| m.push_coaction(f))?;
    Ok(HomObject {
        dom: x.clone(),
        cod: y.clone(),
        sub: equalizer_lin(&phi, &psi)?,
    })
}

/// `[P, Q]^F`: the equaliser of `f ↦ θ_Q∘[C, f]` and `f ↦ f∘θ_P`.
pub fn contra_hom_object(p: &VContramodule, q: &VContramodule) -> Result<HomObject> {
    if p.coalgebra() != q.coalgebra() {
        return Err(Error::CoalgebraMismatch);
    }
    let field = p.field();
    let c = p.coalgebra().space();
    let (x, y) = (p.space(), q.space());
    let cx = c.internal_hom(x);
    let phi = hom_operator(field, (x, y), (&cx, y), 0, |f| {
        q.theta().after(&postcompose(f, c)?)
    })?;
    let psi = precompose(p.theta(), y)?;
    Ok(HomObject {
        dom: x.clone(),
        cod: y.clone(),
        sub: equalizer_lin(&phi, &psi)?,
    })
}

/// Internal composition `[Y, Z]_• ⊗ [X, Y]_• → [X, Z]_•`, `g ⊗ f ↦ g∘f`,
/// factored through the target hom object.
pub fn enriched_composition(
    hyz: &HomObject,
    hxy: &HomObject,
    hxz: &HomObject,
) -> Result<LinMap> {
    if hyz.dom != hxy.cod || hxz.dom != hxy.dom || hxz.cod != hyz.cod {
        return Err(Error::IncompatibleTriple("ends do not chain".into()));
    }
    let field = hxz.sub.field();
    let dom = hyz.sub.sub.tensor(&hxy.sub.sub);
    let mut m = Matrix::zeros(field, hxz.dim(), dom.dim());
    for i in 0..hyz.dim() {
        let g = hyz.element(i);
        for j in 0..hxy.dim() {
            let gf = g.after(&hxy.element(j))?;
            let coords = hxz.coordinates(&gf).ok_or_else(|| {
                Error::IncompatibleTriple("composite leaves the target hom object".into())
            })?;
            for (r, s) in coords.into_iter().enumerate() {
                m.set(r, i * hxy.dim() + j, s);
            }
        }
    }
    LinMap::new(dom, hxz.sub.sub.clone(), 0, m)
}

/// The identity element `j_X: k → [X, X]_•`.
pub fn identity_element(hxx: &HomObject) -> Result<LinMap> {
    if hxx.dom != hxx.cod {
        return Err(Error::IncompatibleTriple("identity needs an endomorphism object".into()));
    }
    let field = hxx.sub.field();
    let id = LinMap::identity(field, &hxx.dom);
    let coords = hxx
        .coordinates(&id)
        .ok_or_else(|| Error::InvalidStructure("identity is not a morphism".into()))?;
    let m = Matrix::from_fn(field, hxx.dim(), 1, |i, _| coords[i].clone());
    LinMap::new(GradedVect::unit(), hxx.sub.sub.clone(), 0, m)
}

#[cfg(test)]
mod tests {
    use super::super::{Coalgebra, Side};
    use super::*;
    use crate::exactlin::Field;

    fn grouplike(field: Field, n: usize) -> Coalgebra {
        let terms: Vec<_> = (0..n).map(|g| (g, g, g, field.one())).collect();
        Coalgebra::from_terms(field, GradedVect::ungraded(n), &terms, &vec![field.one(); n]).unwrap()
    }

    #[test]
    fn regular_endomorphisms_have_dim_c() {
        let c = grouplike(Field::Prime(2), 3);
        let reg = VComodule::regular(&c, Side::Right);
        assert_eq!(comodule_hom_object(&reg, &reg).unwrap().dim(), 3);
        let free = VContramodule::free(&GradedVect::unit(), &c).unwrap();
        assert_eq!(contra_hom_object(&free, &free).unwrap().dim(), 3);
    }

    #[test]
    fn grading_preserving_maps() {
        let q = Field::Rational;
        let c = grouplike(q, 2);
        let m = VComodule::trivial_at(&GradedVect::ungraded(2), &c, 0)
            .unwrap()
            .direct_sum(&VComodule::trivial_at(&GradedVect::ungraded(1), &c, 1).unwrap())
            .unwrap();
        // block-diagonal endomorphisms: 2·2 + 1·1
        let h = comodule_hom_object(&m, &m).unwrap();
        assert_eq!(h.dim(), 5);
        let zero = VComodule::zero(&c);
        assert_eq!(comodule_hom_object(&zero, &m).unwrap().dim(), 0);
    }

    #[test]
    fn trivial_coalgebra_hom_is_everything() {
        let q = Field::Rational;
        let c = Coalgebra::trivial(q);
        let p = VContramodule::free(&GradedVect::ungraded(2), &c).unwrap();
        assert_eq!(contra_hom_object(&p, &p).unwrap().dim(), 4);
    }

    #[test]
    fn composition_is_unital() {
        let c = grouplike(Field::Prime(2), 2);
        let reg = VComodule::regular(&c, Side::Right);
        let h = comodule_hom_object(&reg, &reg).unwrap();
        let comp = enriched_composition(&h, &h, &h).unwrap();
        let j = identity_element(&h).unwrap();
        let idh = LinMap::identity(Field::Prime(2), &h.sub.sub);
        let left = comp.after(&crate::exactlin::tensor_map(&j, &idh).unwrap()).unwrap();
        assert_eq!(left.matrix(), idh.matrix());
    }
}
