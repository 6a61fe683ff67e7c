use super::graded::GradedVect;
use super::matrix::Matrix;
use super::scalar::{Field, Scalar};
use crate::error::{Error, Result};

/// A homogeneous linear map of a fixed degree: column `j` holds the image of
/// the `j`-th basis vector of `dom`, and a nonzero entry `(i, j)` forces
/// `|cod_i| = |dom_j| + degree`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinMap {
    dom: GradedVect,
    cod: GradedVect,
    degree: i32,
    matrix: Matrix,
}

fn sign(field: Field, odd: bool) -> Scalar {
    if odd {
        field.int(-1)
    } else {
        field.one()
    }
}

fn is_odd(d: i32) -> bool {
    d.rem_euclid(2) == 1
}

impl LinMap {
    pub fn new(dom: GradedVect, cod: GradedVect, degree: i32, matrix: Matrix) -> Result<Self> {
        if matrix.rows() != cod.dim() || matrix.cols() != dom.dim() {
            return Err(Error::Shape(format!(
                "matrix is {}x{}, map needs {}x{}",
                matrix.rows(),
                matrix.cols(),
                cod.dim(),
                dom.dim()
            )));
        }
        for i in 0..cod.dim() {
            for j in 0..dom.dim() {
                if !matrix.get(i, j).is_zero() && cod.degree(i) != dom.degree(j) + degree {
                    return Err(Error::NotHomogeneous(degree));
                }
            }
        }
        Ok(LinMap {
            dom,
            cod,
            degree,
            matrix,
        })
    }

    /// Like [`LinMap::new`], reading the degree off the first nonzero entry
    /// (zero maps get degree 0).
    pub fn infer(dom: GradedVect, cod: GradedVect, matrix: Matrix) -> Result<Self> {
        let mut degree = 0;
        'outer: for i in 0..matrix.rows() {
            for j in 0..matrix.cols() {
                if !matrix.get(i, j).is_zero() {
                    degree = cod.degree(i) - dom.degree(j);
                    break 'outer;
                }
            }
        }
        Self::new(dom, cod, degree, matrix)
    }

    pub fn identity(field: Field, v: &GradedVect) -> Self {
        LinMap {
            dom: v.clone(),
            cod: v.clone(),
            degree: 0,
            matrix: Matrix::identity(field, v.dim()),
        }
    }

    pub fn zero(field: Field, dom: &GradedVect, cod: &GradedVect, degree: i32) -> Self {
        LinMap {
            dom: dom.clone(),
            cod: cod.clone(),
            degree,
            matrix: Matrix::zeros(field, cod.dim(), dom.dim()),
        }
    }

    pub fn dom(&self) -> &GradedVect {
        &self.dom
    }

    pub fn cod(&self) -> &GradedVect {
        &self.cod
    }

    pub fn degree(&self) -> i32 {
        self.degree
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn field(&self) -> Field {
        self.matrix.field()
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    /// `self ∘ inner`; degrees add.
    pub fn after(&self, inner: &LinMap) -> Result<LinMap> {
        if inner.cod != self.dom {
            return Err(Error::MismatchedSignature(format!(
                "cannot compose through {} and {}",
                inner.cod, self.dom
            )));
        }
        Ok(LinMap {
            dom: inner.dom.clone(),
            cod: self.cod.clone(),
            degree: self.degree + inner.degree,
            matrix: self.matrix.mul(&inner.matrix)?,
        })
    }

    fn same_signature(&self, other: &LinMap) -> Result<()> {
        if self.dom != other.dom || self.cod != other.cod {
            return Err(Error::MismatchedSignature("maps have different ends".into()));
        }
        if self.degree != other.degree && !self.is_zero() && !other.is_zero() {
            return Err(Error::MismatchedSignature(format!(
                "degrees {} and {} differ",
                self.degree, other.degree
            )));
        }
        Ok(())
    }

    fn merged_degree(&self, other: &LinMap) -> i32 {
        if self.is_zero() {
            other.degree
        } else {
            self.degree
        }
    }

    pub fn add(&self, other: &LinMap) -> Result<LinMap> {
        self.same_signature(other)?;
        Ok(LinMap {
            degree: self.merged_degree(other),
            matrix: self.matrix.add(&other.matrix)?,
            ..self.clone()
        })
    }

    pub fn sub(&self, other: &LinMap) -> Result<LinMap> {
        self.same_signature(other)?;
        Ok(LinMap {
            degree: self.merged_degree(other),
            matrix: self.matrix.sub(&other.matrix)?,
            ..self.clone()
        })
    }

    pub fn scale(&self, s: &Scalar) -> LinMap {
        LinMap {
            matrix: self.matrix.scale(s),
            ..self.clone()
        }
    }

    /// The element of `[dom, cod]` this map represents (row-major entries).
    pub fn to_hom_vector(&self) -> Vec<Scalar> {
        (0..self.cod.dim())
            .flat_map(|i| self.matrix.row(i).to_vec())
            .collect()
    }

    /// Inverse of [`LinMap::to_hom_vector`] for a homogeneous element.
    pub fn from_hom_vector(dom: &GradedVect, cod: &GradedVect, v: &[Scalar]) -> Result<LinMap> {
        if v.len() != dom.dim() * cod.dim() {
            return Err(Error::Shape(format!(
                "hom vector of length {} for [{dom}, {cod}]",
                v.len()
            )));
        }
        let field = v.first().map_or(Field::Rational, Scalar::field);
        let m = Matrix::from_fn(field, cod.dim(), dom.dim(), |i, j| {
            v[i * dom.dim() + j].clone()
        });
        Self::infer(dom.clone(), cod.clone(), m)
    }

    /// Same as [`LinMap::from_hom_vector`] with the field given, so empty
    /// spaces keep their field.
    pub fn from_hom_vector_in(
        field: Field,
        dom: &GradedVect,
        cod: &GradedVect,
        v: &[Scalar],
    ) -> Result<LinMap> {
        if v.is_empty() {
            return Ok(Self::zero(field, dom, cod, 0));
        }
        Self::from_hom_vector(dom, cod, v)
    }

    /// The element as a map `k → [dom, cod]` of degree `self.degree`.
    pub fn name(&self) -> LinMap {
        let hom = self.dom.internal_hom(&self.cod);
        let v = self.to_hom_vector();
        let m = Matrix::from_fn(self.field(), hom.dim(), 1, |i, _| v[i].clone());
        LinMap {
            dom: GradedVect::unit(),
            cod: hom,
            degree: self.degree,
            matrix: m,
        }
    }

    /// Restricts or reinterprets the map on equal-dimension spaces with the
    /// same degrees (used after re-deriving an object).
    pub fn with_ends(&self, dom: &GradedVect, cod: &GradedVect) -> Result<LinMap> {
        LinMap::new(dom.clone(), cod.clone(), self.degree, self.matrix.clone())
    }

    pub fn is_invertible(&self) -> bool {
        self.matrix.inverse().is_some()
    }

    pub fn inverse(&self) -> Option<LinMap> {
        Some(LinMap {
            dom: self.cod.clone(),
            cod: self.dom.clone(),
            degree: -self.degree,
            matrix: self.matrix.inverse()?,
        })
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }
}

/// `f ⊗ g` with the Koszul sign `(f⊗g)(x⊗y) = (−1)^{|g||x|} f(x) ⊗ g(y)`.
pub fn tensor_map(f: &LinMap, g: &LinMap) -> Result<LinMap> {
    if f.field() != g.field() {
        return Err(Error::FieldMismatch("tensor of maps over different fields".into()));
    }
    let mut m = f.matrix.kron(&g.matrix);
    if is_odd(g.degree) {
        let dg = g.dom.dim();
        for col in 0..m.cols() {
            if is_odd(f.dom.degree(col / dg)) {
                for row in 0..m.rows() {
                    let v = m.get(row, col).neg();
                    m.set(row, col, v);
                }
            }
        }
    }
    Ok(LinMap {
        dom: f.dom.tensor(&g.dom),
        cod: f.cod.tensor(&g.cod),
        degree: f.degree + g.degree,
        matrix: m,
    })
}

/// Symmetry `V ⊗ W → W ⊗ V`, `v ⊗ w ↦ (−1)^{|v||w|} w ⊗ v`.
pub fn braiding(field: Field, v: &GradedVect, w: &GradedVect) -> LinMap {
    let (dv, dw) = (v.dim(), w.dim());
    let mut m = Matrix::zeros(field, dv * dw, dv * dw);
    for i in 0..dv {
        for j in 0..dw {
            let s = sign(field, is_odd(v.degree(i)) && is_odd(w.degree(j)));
            m.set(j * dv + i, i * dw + j, s);
        }
    }
    LinMap {
        dom: v.tensor(w),
        cod: w.tensor(v),
        degree: 0,
        matrix: m,
    }
}

/// Builds the linear map `[v, w] → [v2, w2]` of the given degree induced by
/// `op` on homogeneous elements, by evaluating it on the elementary maps.
pub fn hom_operator(
    field: Field,
    (v, w): (&GradedVect, &GradedVect),
    (v2, w2): (&GradedVect, &GradedVect),
    degree: i32,
    op: impl Fn(&LinMap) -> Result<LinMap>,
) -> Result<LinMap> {
    let source = v.internal_hom(w);
    let target = v2.internal_hom(w2);
    let mut m = Matrix::zeros(field, target.dim(), source.dim());
    for wi in 0..w.dim() {
        for vi in 0..v.dim() {
            let mut e = Matrix::zeros(field, w.dim(), v.dim());
            e.set(wi, vi, field.one());
            let elem = LinMap::new(v.clone(), w.clone(), w.degree(wi) - v.degree(vi), e)?;
            let image = op(&elem)?;
            if image.dom() != v2 || image.cod() != w2 {
                return Err(Error::MismatchedSignature("hom operator changes ends".into()));
            }
            let col = wi * v.dim() + vi;
            for (row, s) in image.to_hom_vector().into_iter().enumerate() {
                m.set(row, col, s);
            }
        }
    }
    LinMap::new(source, target, degree, m)
}

/// `[f, W]: [V, W] → [V', W]` for `f: V' → V`, `h ↦ (−1)^{|f||h|} h∘f`.
pub fn precompose(f: &LinMap, w: &GradedVect) -> Result<LinMap> {
    let field = f.field();
    hom_operator(field, (f.cod(), w), (f.dom(), w), f.degree(), |h| {
        let composed = h.after(f)?;
        Ok(if is_odd(f.degree()) && is_odd(h.degree()) {
            composed.scale(&field.int(-1))
        } else {
            composed
        })
    })
}

/// `[V, g]: [V, W] → [V, W']`, `h ↦ g∘h`.
pub fn postcompose(g: &LinMap, v: &GradedVect) -> Result<LinMap> {
    hom_operator(g.field(), (v, g.dom()), (v, g.cod()), g.degree(), |h| g.after(h))
}

/// Evaluation `[V, W] ⊗ V → W`, `h ⊗ v ↦ h(v)`.
pub fn evaluation(field: Field, v: &GradedVect, w: &GradedVect) -> LinMap {
    let hom = v.internal_hom(w);
    let dom = hom.tensor(v);
    let dv = v.dim();
    let mut m = Matrix::zeros(field, w.dim(), dom.dim());
    for wi in 0..w.dim() {
        for vi in 0..dv {
            // E_{w,v} ⊗ v ↦ w
            m.set(wi, (wi * dv + vi) * dv + vi, field.one());
        }
    }
    LinMap {
        dom,
        cod: w.clone(),
        degree: 0,
        matrix: m,
    }
}

/// `g: U ⊗ V → W` to `U → [V, W]`, `u ↦ (v ↦ g(u ⊗ v))`.
pub fn curry(g: &LinMap, u: &GradedVect, v: &GradedVect) -> Result<LinMap> {
    if g.dom() != &u.tensor(v) {
        return Err(Error::MismatchedSignature("curry: domain is not U ⊗ V".into()));
    }
    let w = g.cod();
    let hom = v.internal_hom(w);
    let (du, dv) = (u.dim(), v.dim());
    let m = Matrix::from_fn(g.field(), hom.dim(), du, |row, ui| {
        let (wi, vi) = (row / dv.max(1), row % dv.max(1));
        g.matrix().get(wi, ui * dv + vi).clone()
    });
    LinMap::new(u.clone(), hom, g.degree(), m)
}

/// Inverse of [`curry`].
pub fn uncurry(h: &LinMap, v: &GradedVect, w: &GradedVect) -> Result<LinMap> {
    if h.cod() != &v.internal_hom(w) {
        return Err(Error::MismatchedSignature("uncurry: codomain is not [V, W]".into()));
    }
    let u = h.dom();
    let dv = v.dim();
    let m = Matrix::from_fn(h.field(), w.dim(), u.dim() * dv, |wi, col| {
        let (ui, vi) = (col / dv, col % dv);
        h.matrix().get(wi * dv + vi, ui).clone()
    });
    LinMap::new(u.tensor(v), w.clone(), h.degree(), m)
}

/// `f*: W* → V*` for `f: V → W`.
pub fn dual_map(f: &LinMap) -> Result<LinMap> {
    precompose(f, &GradedVect::unit())
}

/// The canonical iso `V → V**`, `v ↦ (φ ↦ (−1)^{|φ||v|} φ(v))`.
pub fn double_dual(field: Field, v: &GradedVect) -> LinMap {
    let m = Matrix::from_fn(field, v.dim(), v.dim(), |i, j| {
        if i == j {
            sign(field, is_odd(v.degree(i)))
        } else {
            field.zero()
        }
    });
    LinMap {
        dom: v.clone(),
        cod: v.dual().dual(),
        degree: 0,
        matrix: m,
    }
}

/// Inclusions and projections of `V ⊕ W`.
pub fn direct_sum_maps(field: Field, v: &GradedVect, w: &GradedVect) -> [LinMap; 4] {
    let s = v.direct_sum(w);
    let (dv, dw) = (v.dim(), w.dim());
    let inc1 = Matrix::from_fn(field, dv + dw, dv, |i, j| {
        if i == j { field.one() } else { field.zero() }
    });
    let inc2 = Matrix::from_fn(field, dv + dw, dw, |i, j| {
        if i == dv + j { field.one() } else { field.zero() }
    });
    [
        LinMap { dom: v.clone(), cod: s.clone(), degree: 0, matrix: inc1.clone() },
        LinMap { dom: w.clone(), cod: s.clone(), degree: 0, matrix: inc2.clone() },
        LinMap { dom: s.clone(), cod: v.clone(), degree: 0, matrix: inc1.transpose() },
        LinMap { dom: s, cod: w.clone(), degree: 0, matrix: inc2.transpose() },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> Field {
        Field::Prime(2)
    }

    #[test]
    fn curry_round_trip() {
        let q = Field::Rational;
        let u = GradedVect::ungraded(2);
        let v = GradedVect::ungraded(3);
        let w = GradedVect::ungraded(2);
        let g = LinMap::new(
            u.tensor(&v),
            w.clone(),
            0,
            Matrix::from_fn(q, 2, 6, |i, j| q.int((i * 7 + j * 3) as i64 % 5 - 2)),
        )
        .unwrap();
        let c = curry(&g, &u, &v).unwrap();
        assert_eq!(uncurry(&c, &v, &w).unwrap(), g);
        // ev ∘ (curry(g) ⊗ id) = g
        let ev = evaluation(q, &v, &w);
        let lhs = ev
            .after(&tensor_map(&c, &LinMap::identity(q, &v)).unwrap())
            .unwrap();
        assert_eq!(lhs, g);
    }

    #[test]
    fn koszul_sign_on_odd_maps() {
        let q = Field::Rational;
        let v = GradedVect::new(vec![1]);
        let w = GradedVect::new(vec![0, 1]);
        let g = LinMap::new(w.clone(), w.clone(), 1, Matrix::from_ints(q, &[&[0, 0], &[1, 0]])).unwrap();
        let t = tensor_map(&LinMap::identity(q, &v), &g).unwrap();
        // x odd, |g| odd: id ⊗ g picks up a sign
        assert_eq!(t.matrix().get(1, 0), &q.int(-1));
    }

    #[test]
    fn double_dual_and_dual_map() {
        let v = GradedVect::new(vec![0, 1]);
        let dd = double_dual(f2(), &v);
        assert_eq!(dd.cod(), &v);
        let f = LinMap::new(
            GradedVect::ungraded(2),
            GradedVect::ungraded(3),
            0,
            Matrix::from_ints(f2(), &[&[1, 0], &[1, 1], &[0, 1]]),
        )
        .unwrap();
        assert_eq!(dual_map(&f).unwrap().matrix(), &f.matrix().transpose());
    }

    #[test]
    fn homogeneity_enforced() {
        let v = GradedVect::new(vec![0, 1]);
        let bad = LinMap::new(v.clone(), v.clone(), 0, Matrix::from_ints(f2(), &[&[0, 1], &[0, 0]]));
        assert_eq!(bad, Err(Error::NotHomogeneous(0)));
    }
}
