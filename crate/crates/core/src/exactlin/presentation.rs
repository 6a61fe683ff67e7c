use super::graded::GradedVect;
use super::linmap::LinMap;
use super::matrix::Matrix;
use super::scalar::{Field, Scalar};
use crate::error::{Error, Result};

/// A graded subspace given by a basis, as the inclusion `sub → ambient`.
/// The sub basis is listed degree-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinSub {
    pub ambient: GradedVect,
    pub sub: GradedVect,
    pub include: LinMap,
}

/// A graded quotient with projection and a chosen section; `relations`
/// spans the kernel of the projection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinQuot {
    pub ambient: GradedVect,
    pub quotient: GradedVect,
    pub project: LinMap,
    pub section: LinMap,
    pub relations: Matrix,
}

fn degree_of_vector(ambient: &GradedVect, v: &[Scalar]) -> Result<Option<i32>> {
    let mut deg = None;
    for (i, s) in v.iter().enumerate() {
        if s.is_zero() {
            continue;
        }
        match deg {
            None => deg = Some(ambient.degree(i)),
            Some(d) if d != ambient.degree(i) => return Err(Error::NotHomogeneous(d)),
            _ => {}
        }
    }
    Ok(deg)
}

impl LinSub {
    /// The span of homogeneous vectors (given in ambient coordinates), with a
    /// canonical echelon basis per degree.
    pub fn span(field: Field, ambient: &GradedVect, vectors: &[Vec<Scalar>]) -> Result<LinSub> {
        let mut by_degree: std::collections::BTreeMap<i32, Vec<&Vec<Scalar>>> =
            std::collections::BTreeMap::new();
        for v in vectors {
            if v.len() != ambient.dim() {
                return Err(Error::Shape("span vector of the wrong length".into()));
            }
            if let Some(d) = degree_of_vector(ambient, v)? {
                by_degree.entry(d).or_default().push(v);
            }
        }
        let mut degrees = Vec::new();
        let mut columns: Vec<Vec<Scalar>> = Vec::new();
        for (d, vs) in by_degree {
            let rows: Vec<Vec<Scalar>> = vs.into_iter().cloned().collect();
            let m = Matrix::from_rows_with_cols(field, rows, ambient.dim())?;
            let r = m.rref();
            for i in 0..r.pivots.len() {
                degrees.push(d);
                columns.push(r.matrix.row(i).to_vec());
            }
        }
        Self::from_columns(field, ambient, GradedVect::new(degrees), &columns)
    }

    fn from_columns(
        field: Field,
        ambient: &GradedVect,
        sub: GradedVect,
        columns: &[Vec<Scalar>],
    ) -> Result<LinSub> {
        let m = Matrix::from_fn(field, ambient.dim(), columns.len(), |i, j| columns[j][i].clone());
        Ok(LinSub {
            ambient: ambient.clone(),
            include: LinMap::new(sub.clone(), ambient.clone(), 0, m)?,
            sub,
        })
    }

    pub fn whole(field: Field, ambient: &GradedVect) -> LinSub {
        LinSub {
            ambient: ambient.clone(),
            sub: ambient.clone(),
            include: LinMap::identity(field, ambient),
        }
    }

    pub fn dim(&self) -> usize {
        self.sub.dim()
    }

    pub fn field(&self) -> Field {
        self.include.field()
    }

    /// The `i`-th basis vector in ambient coordinates.
    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        self.include.matrix().column(i)
    }

    /// Coordinates of `v` in the sub basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        self.include.matrix().solve(v)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coordinates(v).is_some()
    }

    /// Whether two subspaces of the same ambient space coincide.
    pub fn same_subspace(&self, other: &LinSub) -> bool {
        self.ambient == other.ambient
            && self.dim() == other.dim()
            && self
                .include
                .matrix()
                .column_space_contains(other.include.matrix())
    }

    pub fn contains_subspace(&self, other: &LinSub) -> bool {
        self.ambient == other.ambient
            && self
                .include
                .matrix()
                .column_space_contains(other.include.matrix())
    }

    /// Factors `h: Z → ambient` through the inclusion, if its image lies in
    /// the subspace.
    pub fn factor(&self, h: &LinMap) -> Result<LinMap> {
        if h.cod() != &self.ambient {
            return Err(Error::MismatchedSignature("factor: wrong codomain".into()));
        }
        let field = self.field();
        let mut m = Matrix::zeros(field, self.dim(), h.dom().dim());
        for j in 0..h.dom().dim() {
            let col = h.matrix().column(j);
            let x = self
                .coordinates(&col)
                .ok_or_else(|| Error::Precondition("map does not land in the subspace".into()))?;
            for (i, s) in x.into_iter().enumerate() {
                m.set(i, j, s);
            }
        }
        LinMap::new(h.dom().clone(), self.sub.clone(), h.degree(), m)
    }
}

impl LinQuot {
    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    /// The map out of the quotient induced by `h: ambient → Z`, when `h`
    /// kills the relations.
    pub fn induce(&self, h: &LinMap) -> Result<LinMap> {
        if h.dom() != &self.ambient {
            return Err(Error::MismatchedSignature("induce: wrong domain".into()));
        }
        if !h.matrix().mul(&self.relations)?.is_zero() {
            return Err(Error::Precondition("map does not vanish on the relations".into()));
        }
        h.after(&self.section)
    }
}

fn check_parallel(f: &LinMap, g: &LinMap) -> Result<()> {
    if f.dom() != g.dom() || f.cod() != g.cod() {
        return Err(Error::MismatchedSignature("maps have different ends".into()));
    }
    if f.field() != g.field() {
        return Err(Error::FieldMismatch("maps over different fields".into()));
    }
    if f.degree() != g.degree() && !f.is_zero() && !g.is_zero() {
        return Err(Error::MismatchedSignature(format!(
            "degrees {} and {} differ",
            f.degree(),
            g.degree()
        )));
    }
    Ok(())
}

/// The degreewise kernel of a homogeneous map.
pub fn kernel(d: &LinMap) -> Result<LinSub> {
    let field = d.field();
    let dom = d.dom();
    let mut degrees = Vec::new();
    let mut columns = Vec::new();
    for deg in dom.dims().keys() {
        let idx = dom.indices_of_degree(*deg);
        let k = d.matrix().select_columns(&idx).kernel();
        for j in 0..k.cols() {
            let mut v = vec![field.zero(); dom.dim()];
            for (r, &i) in idx.iter().enumerate() {
                v[i] = k.get(r, j).clone();
            }
            degrees.push(*deg);
            columns.push(v);
        }
    }
    LinSub::from_columns(field, dom, GradedVect::new(degrees), &columns)
}

/// The degreewise cokernel of a homogeneous map. The quotient basis is the
/// set of ambient basis vectors that are not pivots of the image, so the
/// section is a coordinate inclusion.
pub fn cokernel(d: &LinMap) -> Result<LinQuot> {
    let field = d.field();
    let cod = d.cod();
    let n = cod.dim();
    let mut q_degrees = Vec::new();
    let mut q_positions: Vec<usize> = Vec::new();
    // projection rows, filled per degree
    let mut proj_rows: Vec<Vec<Scalar>> = Vec::new();
    for deg in cod.dims().keys() {
        let rows_idx = cod.indices_of_degree(*deg);
        let image = d.matrix().select_rows(&rows_idx).transpose();
        let r = image.rref();
        let pivots = &r.pivots;
        let free: Vec<usize> = (0..rows_idx.len()).filter(|c| !pivots.contains(c)).collect();
        for &fc in &free {
            let mut row = vec![field.zero(); n];
            row[rows_idx[fc]] = field.one();
            for (pr, &pc) in pivots.iter().enumerate() {
                row[rows_idx[pc]] = r.matrix.get(pr, fc).neg();
            }
            q_degrees.push(*deg);
            q_positions.push(rows_idx[fc]);
            proj_rows.push(row);
        }
    }
    let quotient = GradedVect::new(q_degrees);
    let project = LinMap::new(
        cod.clone(),
        quotient.clone(),
        0,
        Matrix::from_rows_with_cols(field, proj_rows, n)?,
    )?;
    let section_m = Matrix::from_fn(field, n, quotient.dim(), |i, j| {
        if q_positions[j] == i {
            field.one()
        } else {
            field.zero()
        }
    });
    let section = LinMap::new(quotient.clone(), cod.clone(), 0, section_m)?;
    Ok(LinQuot {
        ambient: cod.clone(),
        quotient,
        project,
        section,
        relations: d.matrix().clone(),
    })
}

/// Equaliser of `f, g`: the kernel of `f − g`.
pub fn equalizer_lin(f: &LinMap, g: &LinMap) -> Result<LinSub> {
    check_parallel(f, g)?;
    kernel(&f.sub(g)?)
}

/// Coequaliser of `f, g`: the cokernel of `f − g`.
pub fn coequalizer_lin(f: &LinMap, g: &LinMap) -> Result<LinQuot> {
    check_parallel(f, g)?;
    cokernel(&f.sub(g)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equalizer_examples() {
        let q = Field::Rational;
        let v = GradedVect::ungraded(2);
        let id = LinMap::identity(q, &v);
        assert_eq!(equalizer_lin(&id, &id).unwrap().dim(), 2);
        let zero = LinMap::zero(q, &v, &v, 0);
        assert_eq!(equalizer_lin(&id, &zero).unwrap().dim(), 0);
        let d = LinMap::new(v.clone(), v.clone(), 0, Matrix::from_ints(q, &[&[1, 1], &[0, 0]])).unwrap();
        let e = equalizer_lin(&d, &zero).unwrap();
        assert_eq!(e.dim(), 1);
        assert_eq!(e.basis_vector(0), vec![q.int(-1), q.int(1)]);
    }

    #[test]
    fn coequalizer_examples() {
        let q = Field::Rational;
        let v = GradedVect::ungraded(2);
        let id = LinMap::identity(q, &v);
        let zero = LinMap::zero(q, &v, &v, 0);
        let c = coequalizer_lin(&id, &id).unwrap();
        assert_eq!(c.dim(), 2);
        assert_eq!(coequalizer_lin(&id, &zero).unwrap().dim(), 0);
        let d = LinMap::new(v.clone(), v.clone(), 0, Matrix::from_ints(q, &[&[1, 0], &[1, 0]])).unwrap();
        let c = coequalizer_lin(&d, &zero).unwrap();
        assert_eq!(c.dim(), 1);
        assert_eq!(
            c.project.after(&c.section).unwrap(),
            LinMap::identity(q, &c.quotient)
        );
        assert!(c.project.after(&d).unwrap().is_zero());
    }

    #[test]
    fn graded_kernel_respects_degrees() {
        let f2 = Field::Prime(2);
        let v = GradedVect::new(vec![0, 1, 1]);
        let w = GradedVect::new(vec![0, 1]);
        let d = LinMap::new(v.clone(), w.clone(), 0, Matrix::from_ints(f2, &[&[1, 0, 0], &[0, 1, 1]])).unwrap();
        let k = kernel(&d).unwrap();
        assert_eq!(k.sub.degrees(), &[1]);
        let c = cokernel(&d).unwrap();
        assert_eq!(c.dim(), 0);
    }
}
