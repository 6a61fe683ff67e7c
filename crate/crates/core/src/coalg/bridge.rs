//! The dual algebra `C* = [C, k]` and the passage between comodules,
//! contramodules and `C*`-modules at finite dimension.
//!
//! With `e_c*` the dual basis, the conversions are
//! - comodule → module: `e_c*·x = ± x_c` where `ρ(x) = Σ x_c ⊗ e_c`;
//! - contramodule → module: `e_c*·y = ± θ(c ↦ y)`;
//!
//! and their inverses, with Koszul signs `(−1)^{|c||x|+|c|}` and
//! `(−1)^{|c||y|}` respectively.

use super::hom::{comodule_hom_object, HomObject};
use super::{compare, Coalgebra, Side, VComodule, VContramodule};
use crate::error::{Error, Result};
use crate::exactlin::{
    equalizer_lin, hom_operator, precompose, tensor_map, Field, GradedVect, LinMap, Matrix,
    Scalar,
};
use crate::report::Report;

fn sign(field: Field, odd: bool) -> Scalar {
    if odd {
        field.int(-1)
    } else {
        field.one()
    }
}

fn odd(d: i32) -> bool {
    d.rem_euclid(2) == 1
}

/// The algebra `C*` with product `(f * g)(c) = Σ f(c₁) g(c₂)` (with the
/// Koszul sign) and unit `ε`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualAlgebra {
    pub coalgebra: Coalgebra,
    pub space: GradedVect,
    pub mult: LinMap,
    pub unit: LinMap,
}

/// A left module over the dual algebra, as `A ⊗ X → X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgModule {
    pub algebra: DualAlgebra,
    pub action: LinMap,
}

pub fn dual_algebra(c: &Coalgebra) -> DualAlgebra {
    let field = c.field();
    let n = c.dim();
    let cs = c.space();
    let space = cs.dual();
    let mult = Matrix::from_fn(field, n, n * n, |target, col| {
        let (a, b) = (col / n, col % n);
        let s = sign(field, odd(cs.degree(a)) && odd(cs.degree(b)));
        c.delta().matrix().get(a * n + b, target).mul(&s)
    });
    let unit = Matrix::from_fn(field, n, 1, |i, _| c.eps().matrix().get(0, i).clone());
    DualAlgebra {
        coalgebra: c.clone(),
        mult: LinMap::new(space.tensor(&space), space.clone(), 0, mult)
            .expect("Δ has degree 0"),
        unit: LinMap::new(GradedVect::unit(), space.clone(), 0, unit).expect("ε has degree 0"),
        space,
    }
}

impl DualAlgebra {
    pub fn validate(&self) -> Report {
        let mut r = Report::new("dual algebra");
        let field = self.coalgebra.field();
        let id = LinMap::identity(field, &self.space);
        let run = || -> Result<[(String, LinMap, LinMap); 3]> {
            Ok([
                (
                    "associativity".into(),
                    self.mult.after(&tensor_map(&self.mult, &id)?)?,
                    self.mult.after(&tensor_map(&id, &self.mult)?)?,
                ),
                (
                    "left unit".into(),
                    self.mult.after(&tensor_map(&self.unit, &id)?)?,
                    id.clone(),
                ),
                (
                    "right unit".into(),
                    self.mult.after(&tensor_map(&id, &self.unit)?)?,
                    id,
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
}

impl AlgModule {
    pub fn space(&self) -> &GradedVect {
        self.action.cod()
    }

    pub fn validate(&self) -> Report {
        let mut r = Report::new("module");
        let a = &self.algebra;
        let field = a.coalgebra.field();
        let ida = LinMap::identity(field, &a.space);
        let idx = LinMap::identity(field, self.space());
        let run = || -> Result<[(String, LinMap, LinMap); 2]> {
            Ok([
                (
                    "associativity".into(),
                    self.action.after(&tensor_map(&a.mult, &idx)?)?,
                    self.action.after(&tensor_map(&ida, &self.action)?)?,
                ),
                (
                    "unit".into(),
                    self.action.after(&tensor_map(&a.unit, &idx)?)?,
                    idx,
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

    /// `e_c*·x` for basis vectors, as a vector.
    fn act(&self, c: usize, x: usize) -> Vec<Scalar> {
        self.action.matrix().column(c * self.space().dim() + x)
    }
}

pub fn comodule_to_module(m: &VComodule) -> Result<AlgModule> {
    if m.side() != Side::Right {
        return Err(Error::Precondition("expected a right comodule".into()));
    }
    let c = m.coalgebra();
    let algebra = dual_algebra(c);
    let field = c.field();
    let (dx, dc) = (m.dim(), c.dim());
    let x = m.space();
    let rho = m.rho().matrix();
    let action = Matrix::from_fn(field, dx, dc * dx, |row, col| {
        let (ci, xi) = (col / dx, col % dx);
        let s = sign(field, odd(c.space().degree(ci) * (x.degree(xi) + 1)));
        rho.get(row * dc + ci, xi).mul(&s)
    });
    Ok(AlgModule {
        action: LinMap::new(algebra.space.tensor(x), x.clone(), 0, action)?,
        algebra,
    })
}

pub fn contramodule_to_module(p: &VContramodule) -> Result<AlgModule> {
    let c = p.coalgebra();
    let algebra = dual_algebra(c);
    let field = c.field();
    let (dy, dc) = (p.dim(), c.dim());
    let y = p.space();
    let theta = p.theta().matrix();
    let action = Matrix::from_fn(field, dy, dc * dy, |row, col| {
        let (ci, yi) = (col / dy, col % dy);
        let s = sign(field, odd(c.space().degree(ci) * y.degree(yi)));
        theta.get(row, yi * dc + ci).mul(&s)
    });
    Ok(AlgModule {
        action: LinMap::new(algebra.space.tensor(y), y.clone(), 0, action)?,
        algebra,
    })
}

pub fn module_to_comodule(module: &AlgModule) -> Result<VComodule> {
    let c = &module.algebra.coalgebra;
    let field = c.field();
    let x = module.space();
    let (dx, dc) = (x.dim(), c.dim());
    let mut rho = Matrix::zeros(field, dx * dc, dx);
    for xi in 0..dx {
        for ci in 0..dc {
            let s = sign(field, odd(c.space().degree(ci) * (x.degree(xi) + 1)));
            for (row, v) in module.act(ci, xi).into_iter().enumerate() {
                rho.set(row * dc + ci, xi, v.mul(&s));
            }
        }
    }
    VComodule::new(c, Side::Right, LinMap::new(x.clone(), x.tensor(c.space()), 0, rho)?)
}

pub fn module_to_contramodule(module: &AlgModule) -> Result<VContramodule> {
    let c = &module.algebra.coalgebra;
    let field = c.field();
    let y = module.space();
    let (dy, dc) = (y.dim(), c.dim());
    let hom = c.space().internal_hom(y);
    let mut theta = Matrix::zeros(field, dy, dy * dc);
    for yi in 0..dy {
        for ci in 0..dc {
            let s = sign(field, odd(c.space().degree(ci) * y.degree(yi)));
            for (row, v) in module.act(ci, yi).into_iter().enumerate() {
                theta.set(row, yi * dc + ci, v.mul(&s));
            }
        }
    }
    VContramodule::new(c, LinMap::new(hom, y.clone(), 0, theta)?)
}

/// Module maps: `f(a·x) = (−1)^{|a||f|} a·f(x)`.
pub fn module_hom_object(m: &AlgModule, n: &AlgModule) -> Result<HomObject> {
    if m.algebra != n.algebra {
        return Err(Error::CoalgebraMismatch);
    }
    let field = m.algebra.coalgebra.field();
    let (x, y) = (m.space(), n.space());
    let ida = LinMap::identity(field, &m.algebra.space);
    let ax = m.algebra.space.tensor(x);
    let phi = precompose(&m.action, y)?;
    let psi = hom_operator(field, (x, y), (&ax, y), 0, |f| {
        n.action.after(&tensor_map(&ida, f)?)
    })?;
    Ok(HomObject {
        dom: x.clone(),
        cod: y.clone(),
        sub: equalizer_lin(&phi, &psi)?,
    })
}

/// Certifies the finite-dimensional collapse through `C*`: the algebra is
/// valid, every conversion produces a valid structure, round trips are the
/// identity, and comodule hom objects agree with module hom objects.
pub fn bridge_certificate(
    c: &Coalgebra,
    comodules: &[VComodule],
    contramodules: &[VContramodule],
) -> Result<Report> {
    let mut r = Report::new("dual algebra bridge");
    r.absorb(dual_algebra(c).validate());
    let mut modules = Vec::new();
    for m in comodules {
        let module = comodule_to_module(m)?;
        r.absorb(module.validate());
        r.tick(2);
        if &module_to_comodule(&module)? != m {
            r.fail("comodule → module → comodule is not the identity");
        }
        let contra = module_to_contramodule(&module)?;
        r.absorb(contra.validate());
        if contramodule_to_module(&contra)? != module {
            r.fail("module → contramodule → module is not the identity");
        }
        modules.push(module);
    }
    for p in contramodules {
        let module = contramodule_to_module(p)?;
        r.absorb(module.validate());
        r.tick(2);
        if &module_to_contramodule(&module)? != p {
            r.fail("contramodule → module → contramodule is not the identity");
        }
        let co = module_to_comodule(&module)?;
        r.absorb(co.validate());
        if comodule_to_module(&co)? != module {
            r.fail("module → comodule → module is not the identity");
        }
    }
    for (i, m) in comodules.iter().enumerate() {
        for (j, n) in comodules.iter().enumerate() {
            r.tick(1);
            let a = comodule_hom_object(m, n)?;
            let b = module_hom_object(&modules[i], &modules[j])?;
            if !a.sub.same_subspace(&b.sub) {
                r.fail(format!(
                    "hom objects differ for comodules {i}, {j}: dims {} and {}",
                    a.dim(),
                    b.dim()
                ));
            }
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_coalgebra_dual_is_k() {
        let q = Field::Rational;
        let c = Coalgebra::trivial(q);
        let a = dual_algebra(&c);
        assert_eq!(a.space.dim(), 1);
        assert!(a.validate().passed);
        let m = VComodule::cofree(&GradedVect::ungraded(2), &c);
        let module = comodule_to_module(&m).unwrap();
        assert_eq!(module.action.matrix(), &Matrix::identity(q, 2));
    }

    #[test]
    fn grouplike_dual_is_product() {
        let f2 = Field::Prime(2);
        let terms: Vec<_> = (0..2).map(|g| (g, g, g, f2.one())).collect();
        let c = Coalgebra::from_terms(f2, GradedVect::ungraded(2), &terms, &[f2.one(), f2.one()]).unwrap();
        let a = dual_algebra(&c);
        // e_0*·e_0* = e_0*, e_0*·e_1* = 0
        assert_eq!(a.mult.matrix().column(0), vec![f2.one(), f2.zero()]);
        assert_eq!(a.mult.matrix().column(1), vec![f2.zero(), f2.zero()]);
        let m = VComodule::regular(&c, Side::Right);
        let p = VContramodule::free(&GradedVect::unit(), &c).unwrap();
        assert!(bridge_certificate(&c, &[m], &[p]).unwrap().passed);
    }
}
