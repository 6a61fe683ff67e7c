//! The truncated polynomial coalgebra `span{1, z, …, z^N}` with the binomial
//! coproduct, and (co)modules over it described by families of operators.
//!
//! `z^k` sits in degree `k·d`. A comodule `ρ(v) = Σ ρ_n(v) ⊗ z^n` has
//! degree 0, so `ρ_n` has degree `−n·d`; likewise for `θ_n`.

use num_bigint::BigInt;
use num_traits::One;

use crate::coalg::{Coalgebra, VComodule, VContramodule, Side};
use crate::error::{Error, Result};
use crate::exactlin::{Field, GradedVect, LinMap, Matrix};
use crate::report::Report;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyCoalgebra {
    n: usize,
    d: i32,
    underlying: Coalgebra,
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn build(n: usize, d: i32, field: Field) -> PolyCoalgebra {
    let space = GradedVect::new((0..=n).map(|k| k as i32 * d).collect());
    let mut terms = Vec::new();
    for k in 0..=n {
        for i in 0..=k {
            let b = field.big_int(&binomial(k, i));
            if !b.is_zero() {
                terms.push((k, i, k - i, b));
            }
        }
    }
    let eps: Vec<_> = (0..=n).map(|k| if k == 0 { field.one() } else { field.zero() }).collect();
    let underlying =
        Coalgebra::from_terms(field, space, &terms, &eps).expect("binomial terms are homogeneous");
    PolyCoalgebra { n, d, underlying }
}

impl PolyCoalgebra {
    pub fn truncation(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> i32 {
        self.d
    }

    pub fn field(&self) -> Field {
        self.underlying.field()
    }

    pub fn coalgebra(&self) -> &Coalgebra {
        &self.underlying
    }

    fn check_family(&self, v: &GradedVect, family: &[LinMap]) -> Result<()> {
        if family.len() != self.n + 1 {
            return Err(Error::Shape(format!(
                "need {} operators, got {}",
                self.n + 1,
                family.len()
            )));
        }
        for (k, f) in family.iter().enumerate() {
            if f.dom() != v || f.cod() != v {
                return Err(Error::Shape(format!("operator {k} is not an endomorphism")));
            }
            if f.field() != self.field() {
                return Err(Error::FieldMismatch(format!("operator {k}")));
            }
            if !f.is_zero() && f.degree() != -(k as i32) * self.d {
                return Err(Error::NotHomogeneous(-(k as i32) * self.d));
            }
        }
        if family[0] != LinMap::identity(self.field(), v) {
            return Err(Error::NotCounital("the 0-th operator is not the identity".into()));
        }
        Ok(())
    }

    /// The first `(m, n)` with `ρ_m∘ρ_n ≠ binom(m+n, n)·ρ_{m+n}` (the right
    /// side read as 0 beyond the truncation).
    pub fn relation_failure(&self, family: &[LinMap]) -> Option<(usize, usize)> {
        let field = self.field();
        for m in 1..=self.n {
            for n in 1..=self.n {
                let lhs = family[m].after(&family[n]).ok()?;
                let holds = if m + n <= self.n {
                    let rhs = family[m + n].scale(&field.big_int(&binomial(m + n, n)));
                    lhs.matrix() == rhs.matrix()
                } else {
                    lhs.is_zero()
                };
                if !holds {
                    return Some((m, n));
                }
            }
        }
        None
    }

    /// Assembles `ρ = Σ ρ_n ⊗ z^n` and checks the comodule axioms.
    pub fn comodule_from_family(&self, v: &GradedVect, family: &[LinMap]) -> Result<VComodule> {
        self.check_family(v, family)?;
        let field = self.field();
        let dc = self.n + 1;
        let m = Matrix::from_fn(field, v.dim() * dc, v.dim(), |row, col| {
            family[row % dc].matrix().get(row / dc, col).clone()
        });
        let rho = LinMap::new(v.clone(), v.tensor(self.underlying.space()), 0, m)?;
        let comodule = VComodule::new(&self.underlying, Side::Right, rho)?;
        self.accept(comodule.validate(), family)?;
        Ok(comodule)
    }

    /// Assembles `θ(f) = Σ θ_n(f(z^n))` and checks the contramodule axioms.
    pub fn contramodule_from_family(
        &self,
        x: &GradedVect,
        family: &[LinMap],
    ) -> Result<VContramodule> {
        self.check_family(x, family)?;
        let field = self.field();
        let dc = self.n + 1;
        let hom = self.underlying.space().internal_hom(x);
        let m = Matrix::from_fn(field, x.dim(), hom.dim(), |row, col| {
            family[col % dc].matrix().get(row, col / dc).clone()
        });
        let theta = LinMap::new(hom, x.clone(), 0, m)?;
        let contra = VContramodule::new(&self.underlying, theta)?;
        self.accept(contra.validate(), family)?;
        Ok(contra)
    }

    fn accept(&self, report: Report, family: &[LinMap]) -> Result<()> {
        if report.passed {
            return Ok(());
        }
        match self.relation_failure(family) {
            Some((m, n)) => Err(Error::RelationFailure { m, n }),
            None => Err(Error::InvalidStructure(report.witness.unwrap_or_default())),
        }
    }

    /// Reads the family back off a comodule over this coalgebra.
    pub fn family_of_comodule(&self, m: &VComodule) -> Result<Vec<LinMap>> {
        if m.coalgebra() != &self.underlying || m.side() != Side::Right {
            return Err(Error::CoalgebraMismatch);
        }
        let dc = self.n + 1;
        let v = m.space();
        (0..dc)
            .map(|k| {
                let mat = Matrix::from_fn(self.field(), v.dim(), v.dim(), |i, j| {
                    m.rho().matrix().get(i * dc + k, j).clone()
                });
                LinMap::new(v.clone(), v.clone(), -(k as i32) * self.d, mat)
            })
            .collect()
    }

    /// `ρ_n = ρ_1^n / n!`, defined when `n!` is invertible for `n ≤ N`.
    pub fn family_from_generator(&self, rho1: &LinMap) -> Result<Vec<LinMap>> {
        let field = self.field();
        let v = rho1.dom().clone();
        let mut family = vec![LinMap::identity(field, &v)];
        let mut power = LinMap::identity(field, &v);
        let mut factorial = BigInt::one();
        for k in 1..=self.n {
            power = rho1.after(&power)?;
            factorial *= BigInt::from(k);
            let inv = field
                .big_int(&factorial)
                .inv()
                .ok_or_else(|| Error::Precondition(format!("{k}! vanishes in {field}")))?;
            let next = power.scale(&inv);
            family.push(if next.is_zero() {
                LinMap::zero(field, &v, &v, -(k as i32) * self.d)
            } else {
                next
            });
        }
        Ok(family)
    }

    /// Over `Q`: `ρ_n = ρ_1^n / n!` for all `n ≤ N` and `ρ_1^{N+1} = 0`.
    pub fn divided_power_certificate(&self, family: &[LinMap]) -> Result<Report> {
        if self.field() != Field::Rational {
            return Err(Error::Precondition("divided powers need the rationals".into()));
        }
        let mut r = Report::new("divided powers");
        if family.len() != self.n + 1 {
            return Err(Error::Shape("wrong family length".into()));
        }
        // with N = 0 there is no ρ_1 in the family; it is zero
        let v = family[0].dom();
        let rho1 = match family.get(1) {
            Some(f) => f.clone(),
            None => LinMap::zero(self.field(), v, v, -self.d),
        };
        let expected = self.family_from_generator(&rho1)?;
        for k in 0..=self.n {
            r.tick(1);
            if expected[k].matrix() != family[k].matrix() {
                r.fail(format!("operator {k} is not ρ_1^{k}/{k}!"));
            }
        }
        r.tick(1);
        let mut power = LinMap::identity(self.field(), v);
        for _ in 0..=self.n {
            power = rho1.after(&power)?;
        }
        if !power.is_zero() {
            r.fail(format!("ρ_1^{} ≠ 0", self.n + 1));
        }
        Ok(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_truncations() {
        let q = Field::Rational;
        let c = build(0, 1, q);
        assert_eq!(c.coalgebra(), &Coalgebra::trivial(q));
        let c2 = build(2, 0, q);
        assert!(c2.coalgebra().validate().passed);
        // Δ(z²) = 1⊗z² + 2 z⊗z + z²⊗1
        let col = c2.coalgebra().delta().matrix().column(2);
        assert_eq!(col[2], q.int(1));
        assert_eq!(col[4], q.int(2));
        assert_eq!(col[6], q.int(1));
        let f2 = Field::Prime(2);
        let c3 = build(2, 1, f2);
        assert!(c3.coalgebra().validate().passed);
        assert!(c3.coalgebra().delta().matrix().column(2)[4].is_zero());
    }

    fn ops(field: Field, v: &GradedVect, d: i32, mats: &[&[&[i64]]]) -> Vec<LinMap> {
        mats.iter()
            .enumerate()
            .map(|(k, m)| LinMap::new(v.clone(), v.clone(), -(k as i32) * d, Matrix::from_ints(field, m)).unwrap())
            .collect()
    }

    #[test]
    fn nilpotent_family() {
        let q = Field::Rational;
        let c = build(2, 0, q);
        let v = GradedVect::ungraded(2);
        let fam = ops(q, &v, 0, &[&[&[1, 0], &[0, 1]], &[&[0, 1], &[0, 0]], &[&[0, 0], &[0, 0]]]);
        assert!(c.comodule_from_family(&v, &fam).is_ok());
        assert!(c.contramodule_from_family(&v, &fam).is_ok());
        assert!(c.divided_power_certificate(&fam).unwrap().passed);
        let bad = ops(q, &v, 0, &[&[&[1, 0], &[0, 1]], &[&[1, 0], &[0, 0]], &[&[0, 0], &[0, 0]]]);
        assert_eq!(
            c.comodule_from_family(&v, &bad).unwrap_err(),
            Error::RelationFailure { m: 1, n: 1 }
        );
        assert!(c.divided_power_certificate(&fam).is_ok());
        assert!(build(2, 0, Field::Prime(2)).divided_power_certificate(&fam).is_err());
    }

    #[test]
    fn graded_family() {
        let q = Field::Rational;
        let c = build(1, 1, q);
        let v = GradedVect::new(vec![0, 1]);
        // ρ_1 lowers degree by 1: e₁ ↦ e₀
        let fam = ops(q, &v, 1, &[&[&[1, 0], &[0, 1]], &[&[0, 1], &[0, 0]]]);
        let m = c.comodule_from_family(&v, &fam).unwrap();
        assert_eq!(c.family_of_comodule(&m).unwrap(), fam);
        assert!(c.contramodule_from_family(&v, &fam).is_ok());
    }
}
