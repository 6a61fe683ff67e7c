//! Coalgebras over an exact field, their comodules and contramodules, and
//! the constructions between them.
//!
//! `[C, Y]` is realized by the internal-hom basis of [`GradedVect`], so
//! every structure map is an honest matrix. Structure maps always have
//! degree 0.

pub mod bridge;
pub mod catalogue;
pub mod change;
pub mod functors;
pub mod hom;

use crate::error::{Error, Result};
use crate::exactlin::{
    cokernel, hom_operator, postcompose, precompose, tensor_map, uncurry, Field, GradedVect,
    LinMap, LinSub, Matrix, Scalar,
};
use crate::report::Report;

/// A coalgebra `(C, Δ, ε)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coalgebra {
    space: GradedVect,
    delta: LinMap,
    eps: LinMap,
}

/// Which side a coaction lands on: `X → X ⊗ C` or `X → C ⊗ X`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Right,
    Left,
}

/// A comodule: a space with a coaction, on the side given by `side`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VComodule {
    coalgebra: Coalgebra,
    side: Side,
    rho: LinMap,
}

/// A contramodule: a space `Y` with `θ: [C, Y] → Y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VContramodule {
    coalgebra: Coalgebra,
    theta: LinMap,
}

fn check_degree_zero(what: &str, f: &LinMap) -> Result<()> {
    if f.degree() != 0 && !f.is_zero() {
        return Err(Error::InvalidStructure(format!("{what} must have degree 0")));
    }
    Ok(())
}

/// Records a failure if `lhs != rhs`, naming the first basis vector where
/// they differ.
pub(crate) fn compare(report: &mut Report, what: &str, lhs: &LinMap, rhs: &LinMap) {
    report.tick(1);
    if lhs.matrix() == rhs.matrix() {
        return;
    }
    let a = lhs.matrix();
    let b = rhs.matrix();
    let col = (0..a.cols())
        .find(|&j| a.column(j) != b.column(j))
        .unwrap_or(0);
    let show = |v: Vec<Scalar>| {
        v.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(", ")
    };
    report.fail(format!(
        "{what}: basis vector {col} goes to [{}] versus [{}]",
        show(a.column(col)),
        show(b.column(col))
    ));
}

impl Coalgebra {
    pub fn new(space: GradedVect, delta: LinMap, eps: LinMap) -> Result<Self> {
        if delta.dom() != &space || delta.cod() != &space.tensor(&space) {
            return Err(Error::Shape("Δ must map C → C ⊗ C".into()));
        }
        if eps.dom() != &space || eps.cod() != &GradedVect::unit() {
            return Err(Error::Shape("ε must map C → k".into()));
        }
        if delta.field() != eps.field() {
            return Err(Error::FieldMismatch("Δ and ε over different fields".into()));
        }
        check_degree_zero("Δ", &delta)?;
        check_degree_zero("ε", &eps)?;
        let delta = LinMap::new(space.clone(), space.tensor(&space), 0, delta.matrix().clone())?;
        let eps = LinMap::new(space.clone(), GradedVect::unit(), 0, eps.matrix().clone())?;
        Ok(Coalgebra { space, delta, eps })
    }

    /// Builds a coalgebra from `Δ(e_c) = Σ coeff · e_a ⊗ e_b` triples and the
    /// counit values.
    pub fn from_terms(
        field: Field,
        space: GradedVect,
        delta: &[(usize, usize, usize, Scalar)],
        eps: &[Scalar],
    ) -> Result<Self> {
        let n = space.dim();
        let mut d = Matrix::zeros(field, n * n, n);
        for (c, a, b, s) in delta {
            if *c >= n || *a >= n || *b >= n {
                return Err(Error::Shape("Δ term outside the basis".into()));
            }
            let cur = d.get(a * n + b, *c).add(s);
            d.set(a * n + b, *c, cur);
        }
        if eps.len() != n {
            return Err(Error::Shape("ε needs one value per basis vector".into()));
        }
        let e = Matrix::from_rows_with_cols(field, vec![eps.to_vec()], n)?;
        let delta = LinMap::new(space.clone(), space.tensor(&space), 0, d)?;
        let eps = LinMap::new(space.clone(), GradedVect::unit(), 0, e)?;
        Coalgebra::new(space, delta, eps)
    }

    /// The ground field as a coalgebra.
    pub fn trivial(field: Field) -> Self {
        let k = GradedVect::unit();
        Coalgebra {
            space: k.clone(),
            delta: LinMap::identity(field, &k),
            eps: LinMap::identity(field, &k),
        }
    }

    pub fn field(&self) -> Field {
        self.delta.field()
    }

    pub fn space(&self) -> &GradedVect {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn delta(&self) -> &LinMap {
        &self.delta
    }

    pub fn eps(&self) -> &LinMap {
        &self.eps
    }

    fn id(&self) -> LinMap {
        LinMap::identity(self.field(), &self.space)
    }

    pub fn validate(&self) -> Report {
        let mut r = Report::new("coalgebra");
        let run = || -> Result<[(String, LinMap, LinMap); 3]> {
            let id = self.id();
            let left = tensor_map(&self.delta, &id)?.after(&self.delta)?;
            let right = tensor_map(&id, &self.delta)?.after(&self.delta)?;
            let cl = tensor_map(&self.eps, &id)?.after(&self.delta)?;
            let cr = tensor_map(&id, &self.eps)?.after(&self.delta)?;
            Ok([
                ("coassociativity (Δ⊗id)∘Δ = (id⊗Δ)∘Δ".into(), left, right),
                ("left counit (ε⊗id)∘Δ = id".into(), cl, id.clone()),
                ("right counit (id⊗ε)∘Δ = id".into(), cr, id),
            ])
        };
        match run() {
            Ok(checks) => {
                for (what, a, b) in checks {
                    compare(&mut r, &what, &a, &b);
                }
            }
            Err(e) => r.fail(e.to_string()),
        }
        r
    }

    /// Transports the structure along an invertible degree-0 map `g: C → C'`.
    pub fn transport(&self, g: &LinMap) -> Result<Coalgebra> {
        let inv = g
            .inverse()
            .ok_or_else(|| Error::Precondition("transport needs an invertible map".into()))?;
        let space = g.cod().clone();
        let delta = tensor_map(g, g)?.after(&self.delta)?.after(&inv)?;
        let eps = self.eps.after(&inv)?;
        Coalgebra::new(space, delta, eps)
    }

    /// `ε_Y^*: Y → [C, Y]`, `y ↦ (c ↦ ε(c) y)`.
    pub fn unit_map(&self, y: &GradedVect) -> LinMap {
        let field = self.field();
        let dc = self.dim();
        let hom = self.space.internal_hom(y);
        let m = Matrix::from_fn(field, hom.dim(), y.dim(), |row, col| {
            if row / dc == col {
                self.eps.matrix().get(0, row % dc).clone()
            } else {
                field.zero()
            }
        });
        LinMap::new(y.clone(), hom, 0, m).expect("ε is homogeneous of degree 0")
    }

    /// `[C, [C, Y]] → [C ⊗ C, Y]`, the inverse of currying.
    pub fn uncurry_iso(&self, y: &GradedVect) -> Result<LinMap> {
        let c = &self.space;
        let cy = c.internal_hom(y);
        hom_operator(self.field(), (c, &cy), (&c.tensor(c), y), 0, |h| {
            uncurry(h, c, y)
        })
    }

    /// The monad multiplication of `[C, −]`: `H ↦ (c ↦ Σ H(c₁)(c₂))`.
    pub fn mu(&self, y: &GradedVect) -> Result<LinMap> {
        precompose(&self.delta, y)?.after(&self.uncurry_iso(y)?)
    }

    /// Checks that `f: C → D` is a coalgebra morphism.
    pub fn check_morphism_to(&self, target: &Coalgebra, f: &LinMap) -> Result<()> {
        if f.dom() != &self.space || f.cod() != &target.space {
            return Err(Error::NotCoalgebraMorphism("wrong ends".into()));
        }
        if f.degree() != 0 && !f.is_zero() {
            return Err(Error::NotCoalgebraMorphism("degree is not 0".into()));
        }
        if target.delta.after(f)? != tensor_map(f, f)?.after(&self.delta)? {
            return Err(Error::NotCoalgebraMorphism("Δ̂∘f ≠ (f⊗f)∘Δ".into()));
        }
        if target.eps.after(f)?.matrix() != self.eps.matrix() {
            return Err(Error::NotCoalgebraMorphism("ε̂∘f ≠ ε".into()));
        }
        Ok(())
    }
}

impl VComodule {
    pub fn new(coalgebra: &Coalgebra, side: Side, rho: LinMap) -> Result<Self> {
        let x = rho.dom().clone();
        let expected = match side {
            Side::Right => x.tensor(coalgebra.space()),
            Side::Left => coalgebra.space().tensor(&x),
        };
        if rho.cod() != &expected {
            return Err(Error::Shape("coaction has the wrong codomain".into()));
        }
        if rho.field() != coalgebra.field() {
            return Err(Error::FieldMismatch("coaction over a different field".into()));
        }
        check_degree_zero("ρ", &rho)?;
        let rho = LinMap::new(rho.dom().clone(), rho.cod().clone(), 0, rho.matrix().clone())?;
        Ok(VComodule {
            coalgebra: coalgebra.clone(),
            side,
            rho,
        })
    }

    /// The cofree comodule `X ⊗ C` with `ρ = id ⊗ Δ`.
    pub fn cofree(x: &GradedVect, c: &Coalgebra) -> VComodule {
        let rho = tensor_map(&LinMap::identity(c.field(), x), c.delta())
            .expect("same field");
        VComodule {
            coalgebra: c.clone(),
            side: Side::Right,
            rho,
        }
    }

    /// `C` coacting on itself by `Δ`, on either side.
    pub fn regular(c: &Coalgebra, side: Side) -> VComodule {
        VComodule {
            coalgebra: c.clone(),
            side,
            rho: c.delta().clone(),
        }
    }

    /// The zero comodule.
    pub fn zero(c: &Coalgebra) -> VComodule {
        let z = GradedVect::zero();
        VComodule {
            coalgebra: c.clone(),
            side: Side::Right,
            rho: LinMap::zero(c.field(), &z, &z, 0),
        }
    }

    /// `X` with the coaction `x ↦ x ⊗ g` for a group-like `g`, given as a
    /// basis index of `C`.
    pub fn trivial_at(x: &GradedVect, c: &Coalgebra, g: usize) -> Result<VComodule> {
        let field = c.field();
        let dc = c.dim();
        let m = Matrix::from_fn(field, x.dim() * dc, x.dim(), |row, col| {
            if row == col * dc + g {
                field.one()
            } else {
                field.zero()
            }
        });
        VComodule::new(c, Side::Right, LinMap::new(x.clone(), x.tensor(c.space()), 0, m)?)
    }

    pub fn coalgebra(&self) -> &Coalgebra {
        &self.coalgebra
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn space(&self) -> &GradedVect {
        self.rho.dom()
    }

    pub fn dim(&self) -> usize {
        self.space().dim()
    }

    pub fn rho(&self) -> &LinMap {
        &self.rho
    }

    pub fn field(&self) -> Field {
        self.coalgebra.field()
    }

    fn id(&self) -> LinMap {
        LinMap::identity(self.field(), self.space())
    }

    pub fn validate(&self) -> Report {
        let mut r = Report::new("comodule");
        let c = &self.coalgebra;
        let idc = c.id();
        let run = || -> Result<[(String, LinMap, LinMap); 2]> {
            let id = self.id();
            Ok(match self.side {
                Side::Right => [
                    (
                        "counit (id⊗ε)∘ρ = id".into(),
                        tensor_map(&id, c.eps())?.after(&self.rho)?,
                        id.clone(),
                    ),
                    (
                        "coassociativity (ρ⊗id)∘ρ = (id⊗Δ)∘ρ".into(),
                        tensor_map(&self.rho, &idc)?.after(&self.rho)?,
                        tensor_map(&id, c.delta())?.after(&self.rho)?,
                    ),
                ],
                Side::Left => [
                    (
                        "counit (ε⊗id)∘ρ = id".into(),
                        tensor_map(c.eps(), &id)?.after(&self.rho)?,
                        id.clone(),
                    ),
                    (
                        "coassociativity (id⊗ρ)∘ρ = (Δ⊗id)∘ρ".into(),
                        tensor_map(&idc, &self.rho)?.after(&self.rho)?,
                        tensor_map(c.delta(), &id)?.after(&self.rho)?,
                    ),
                ],
            })
        };
        match run() {
            Ok(checks) => {
                for (what, a, b) in checks {
                    compare(&mut r, &what, &a, &b);
                }
            }
            Err(e) => r.fail(e.to_string()),
        }
        r
    }

    /// `(f ⊗ id)∘ρ` (or `(id ⊗ f)∘ρ` on the left) for a map `f: X → Z`.
    pub(crate) fn push_coaction(&self, f: &LinMap) -> Result<LinMap> {
        let idc = self.coalgebra.id();
        match self.side {
            Side::Right => tensor_map(f, &idc)?.after(&self.rho),
            Side::Left => tensor_map(&idc, f)?.after(&self.rho),
        }
    }

    /// Whether a degree-0 map `f: self → other` commutes with the coactions.
    pub fn is_morphism(&self, other: &VComodule, f: &LinMap) -> Result<bool> {
        if self.coalgebra != other.coalgebra || self.side != other.side {
            return Err(Error::CoalgebraMismatch);
        }
        Ok(other.rho.after(f)? == self.push_coaction(f)?)
    }

    /// Transports the coaction along an invertible degree-0 map `g: X → X'`.
    pub fn transport(&self, g: &LinMap) -> Result<VComodule> {
        let inv = g
            .inverse()
            .ok_or_else(|| Error::Precondition("transport needs an invertible map".into()))?;
        let rho = self.push_coaction(g)?.after(&inv)?;
        VComodule::new(&self.coalgebra, self.side, rho)
    }

    /// The component `x_c` of `ρ(x) = Σ_c x_c ⊗ e_c` (right) or
    /// `Σ_c e_c ⊗ x_c` (left).
    pub fn component(&self, x: &[Scalar], c: usize) -> Result<Vec<Scalar>> {
        let image = self.rho.matrix().apply(x)?;
        let (dx, dc) = (self.dim(), self.coalgebra.dim());
        Ok((0..dx)
            .map(|i| match self.side {
                Side::Right => image[i * dc + c].clone(),
                Side::Left => image[c * dx + i].clone(),
            })
            .collect())
    }

    /// The smallest subcomodule containing the given homogeneous vectors.
    pub fn generated(&self, vectors: &[Vec<Scalar>]) -> Result<LinSub> {
        let mut span = Vec::new();
        for v in vectors {
            for c in 0..self.coalgebra.dim() {
                span.push(self.component(v, c)?);
            }
        }
        LinSub::span(self.field(), self.space(), &span)
    }

    /// The coaction restricted to a subcomodule.
    pub fn restrict_to(&self, sub: &LinSub) -> Result<VComodule> {
        if &sub.ambient != self.space() {
            return Err(Error::MismatchedSignature("subspace of another space".into()));
        }
        let idc = self.coalgebra.id();
        let include = match self.side {
            Side::Right => tensor_map(&sub.include, &idc)?,
            Side::Left => tensor_map(&idc, &sub.include)?,
        };
        let target = LinSub {
            ambient: include.cod().clone(),
            sub: include.dom().clone(),
            include,
        };
        let rho = target
            .factor(&self.rho.after(&sub.include)?)
            .map_err(|_| Error::InvalidStructure("subspace is not a subcomodule".into()))?;
        VComodule::new(&self.coalgebra, self.side, rho)
    }

    /// The quotient by a subcomodule, with its projection.
    pub fn quotient_by(&self, sub: &LinSub) -> Result<(VComodule, LinMap)> {
        let q = cokernel(&sub.include)?;
        let rho = q
            .induce(&self.push_coaction(&q.project)?)
            .map_err(|_| Error::InvalidStructure("subspace is not a subcomodule".into()))?;
        Ok((VComodule::new(&self.coalgebra, self.side, rho)?, q.project))
    }

    /// Direct sum; `X ⊕ X'` is listed `X` first.
    pub fn direct_sum(&self, other: &VComodule) -> Result<VComodule> {
        if self.coalgebra != other.coalgebra || self.side != other.side {
            return Err(Error::CoalgebraMismatch);
        }
        let field = self.field();
        let x = self.space().direct_sum(other.space());
        let cod = match self.side {
            Side::Right => x.tensor(self.coalgebra.space()),
            Side::Left => self.coalgebra.space().tensor(&x),
        };
        let (d1, d2, dc) = (self.dim(), other.dim(), self.coalgebra.dim());
        let mut m = Matrix::zeros(field, cod.dim(), x.dim());
        let place = |i: usize, c: usize| match self.side {
            Side::Right => i * dc + c,
            Side::Left => c * (d1 + d2) + i,
        };
        let source = |which: &VComodule, i: usize, c: usize| match which.side {
            Side::Right => i * dc + c,
            Side::Left => c * which.dim() + i,
        };
        for (which, offset) in [(self, 0usize), (other, d1)] {
            for col in 0..which.dim() {
                for i in 0..which.dim() {
                    for c in 0..dc {
                        let v = which.rho.matrix().get(source(which, i, c), col);
                        m.set(place(offset + i, c), offset + col, v.clone());
                    }
                }
            }
        }
        VComodule::new(&self.coalgebra, self.side, LinMap::new(x, cod, 0, m)?)
    }

    /// The same space viewed as a comodule on the other side, using the
    /// symmetry of the base.
    pub fn flip_side(&self) -> Result<VComodule> {
        let field = self.field();
        let (x, c) = (self.space(), self.coalgebra.space());
        let (rho, side) = match self.side {
            Side::Right => (
                crate::exactlin::braiding(field, x, c).after(&self.rho)?,
                Side::Left,
            ),
            Side::Left => (
                crate::exactlin::braiding(field, c, x).after(&self.rho)?,
                Side::Right,
            ),
        };
        Ok(VComodule {
            coalgebra: self.coalgebra.clone(),
            side,
            rho,
        })
    }
}

impl VContramodule {
    pub fn new(coalgebra: &Coalgebra, theta: LinMap) -> Result<Self> {
        let y = theta.cod().clone();
        if theta.dom() != &coalgebra.space().internal_hom(&y) {
            return Err(Error::Shape("θ must map [C, Y] → Y".into()));
        }
        if theta.field() != coalgebra.field() {
            return Err(Error::FieldMismatch("θ over a different field".into()));
        }
        check_degree_zero("θ", &theta)?;
        let theta = LinMap::new(theta.dom().clone(), y, 0, theta.matrix().clone())?;
        Ok(VContramodule {
            coalgebra: coalgebra.clone(),
            theta,
        })
    }

    /// The free contramodule `[C, X]` with `θ = μ_X`.
    pub fn free(x: &GradedVect, c: &Coalgebra) -> Result<VContramodule> {
        let theta = c.mu(x)?;
        Ok(VContramodule {
            coalgebra: c.clone(),
            theta,
        })
    }

    pub fn zero(c: &Coalgebra) -> VContramodule {
        let z = GradedVect::zero();
        VContramodule {
            coalgebra: c.clone(),
            theta: LinMap::zero(c.field(), &c.space().internal_hom(&z), &z, 0),
        }
    }

    pub fn coalgebra(&self) -> &Coalgebra {
        &self.coalgebra
    }

    pub fn space(&self) -> &GradedVect {
        self.theta.cod()
    }

    pub fn dim(&self) -> usize {
        self.space().dim()
    }

    pub fn theta(&self) -> &LinMap {
        &self.theta
    }

    pub fn field(&self) -> Field {
        self.coalgebra.field()
    }

    pub fn validate(&self) -> Report {
        let mut r = Report::new("contramodule");
        let c = &self.coalgebra;
        let y = self.space();
        let run = || -> Result<[(String, LinMap, LinMap); 2]> {
            Ok([
                (
                    "contraunit θ∘ε* = id".into(),
                    self.theta.after(&c.unit_map(y))?,
                    LinMap::identity(self.field(), y),
                ),
                (
                    "contraassociativity θ∘[C,θ] = θ∘μ".into(),
                    self.theta.after(&postcompose(&self.theta, c.space())?)?,
                    self.theta.after(&c.mu(y)?)?,
                ),
            ])
        };
        match run() {
            Ok(checks) => {
                for (what, a, b) in checks {
                    compare(&mut r, &what, &a, &b);
                }
            }
            Err(e) => r.fail(e.to_string()),
        }
        r
    }

    /// Whether a degree-0 map `f: self → other` satisfies
    /// `f∘θ = θ'∘[C, f]`.
    pub fn is_morphism(&self, other: &VContramodule, f: &LinMap) -> Result<bool> {
        if self.coalgebra != other.coalgebra {
            return Err(Error::CoalgebraMismatch);
        }
        Ok(f.after(&self.theta)?
            == other.theta.after(&postcompose(f, self.coalgebra.space())?)?)
    }

    pub fn transport(&self, g: &LinMap) -> Result<VContramodule> {
        let inv = g
            .inverse()
            .ok_or_else(|| Error::Precondition("transport needs an invertible map".into()))?;
        let theta = g
            .after(&self.theta)?
            .after(&postcompose(&inv, self.coalgebra.space())?)?;
        VContramodule::new(&self.coalgebra, theta)
    }

    /// `θ(c ↦ y)` for the elementary map sending basis vector `c` to `y`.
    pub fn act_elementary(&self, y: &[Scalar], c: usize) -> Result<Vec<Scalar>> {
        let dc = self.coalgebra.dim();
        let field = self.field();
        let mut h = vec![field.zero(); self.dim() * dc];
        for (i, s) in y.iter().enumerate() {
            h[i * dc + c] = s.clone();
        }
        self.theta.matrix().apply(&h)
    }

    /// The smallest subcontramodule containing the given homogeneous
    /// vectors.
    pub fn generated(&self, vectors: &[Vec<Scalar>]) -> Result<LinSub> {
        let mut span = Vec::new();
        for v in vectors {
            for c in 0..self.coalgebra.dim() {
                span.push(self.act_elementary(v, c)?);
            }
        }
        LinSub::span(self.field(), self.space(), &span)
    }

    pub fn restrict_to(&self, sub: &LinSub) -> Result<VContramodule> {
        if &sub.ambient != self.space() {
            return Err(Error::MismatchedSignature("subspace of another space".into()));
        }
        let composite = self
            .theta
            .after(&postcompose(&sub.include, self.coalgebra.space())?)?;
        let theta = sub
            .factor(&composite)
            .map_err(|_| Error::InvalidStructure("subspace is not a subcontramodule".into()))?;
        VContramodule::new(&self.coalgebra, theta)
    }

    pub fn quotient_by(&self, sub: &LinSub) -> Result<(VContramodule, LinMap)> {
        let c = self.coalgebra.space();
        let q = cokernel(&sub.include)?;
        let closure = q
            .project
            .after(&self.theta)?
            .after(&postcompose(&sub.include, c)?)?;
        if !closure.is_zero() {
            return Err(Error::InvalidStructure("subspace is not a subcontramodule".into()));
        }
        let theta = q
            .project
            .after(&self.theta)?
            .after(&postcompose(&q.section, c)?)?;
        Ok((VContramodule::new(&self.coalgebra, theta)?, q.project))
    }

    pub fn direct_sum(&self, other: &VContramodule) -> Result<VContramodule> {
        if self.coalgebra != other.coalgebra {
            return Err(Error::CoalgebraMismatch);
        }
        let field = self.field();
        let y = self.space().direct_sum(other.space());
        let dom = self.coalgebra.space().internal_hom(&y);
        let (d1, dc) = (self.dim(), self.coalgebra.dim());
        let mut m = Matrix::zeros(field, y.dim(), dom.dim());
        for (which, offset) in [(self, 0usize), (other, d1)] {
            let t = which.theta.matrix();
            for row in 0..which.dim() {
                for col in 0..t.cols() {
                    m.set(offset + row, offset * dc + col, t.get(row, col).clone());
                }
            }
        }
        VContramodule::new(&self.coalgebra, LinMap::new(dom, y, 0, m)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn grouplike(field: Field, n: usize) -> Coalgebra {
        let terms: Vec<_> = (0..n).map(|g| (g, g, g, field.one())).collect();
        Coalgebra::from_terms(field, GradedVect::ungraded(n), &terms, &vec![field.one(); n]).unwrap()
    }

    #[test]
    fn trivial_and_grouplike_validate() {
        let q = Field::Rational;
        assert!(Coalgebra::trivial(q).validate().passed);
        assert!(grouplike(Field::Prime(2), 2).validate().passed);
    }

    #[test]
    fn broken_counit_has_witness() {
        let q = Field::Rational;
        // Δz = 1⊗z + z⊗1 but ε(z) = 1
        let c = Coalgebra::from_terms(
            q,
            GradedVect::ungraded(2),
            &[(0, 0, 0, q.one()), (1, 0, 1, q.one()), (1, 1, 0, q.one())],
            &[q.one(), q.one()],
        )
        .unwrap();
        let r = c.validate();
        assert!(!r.passed);
        assert!(r.witness.unwrap().contains("counit"));
    }

    #[test]
    fn cofree_and_free_validate() {
        let c = grouplike(Field::Prime(2), 2);
        let x = GradedVect::ungraded(2);
        let t = VComodule::cofree(&x, &c);
        let f = VContramodule::free(&x, &c).unwrap();
        assert!(t.validate().passed);
        assert!(f.validate().passed);
        assert_eq!(t.dim(), 4);
        assert_eq!(f.dim(), 4);
        assert_eq!(VComodule::cofree(&GradedVect::unit(), &c).rho(), c.delta());
    }

    #[test]
    fn sub_and_quotient_of_cofree() {
        let q = Field::Rational;
        let c = grouplike(q, 2);
        let t = VComodule::cofree(&GradedVect::ungraded(1), &c);
        let s = t.generated(&[vec![q.one(), q.zero()]]).unwrap();
        assert_eq!(s.dim(), 1);
        let sub = t.restrict_to(&s).unwrap();
        assert!(sub.validate().passed);
        let (quot, _) = t.quotient_by(&s).unwrap();
        assert!(quot.validate().passed);
        assert_eq!(quot.dim(), 1);
    }
}
