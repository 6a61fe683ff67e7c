//! A catalogue of small coalgebras and a seeded family of random instances
//! built from it: each instance carries a coalgebra in a random basis, a few
//! comodules and contramodules, and a coalgebra morphism from `k`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::change::CoalgebraMorphism;
use super::{Coalgebra, VComodule, VContramodule};
use crate::error::Result;
use crate::exactlin::{Field, GradedVect, LinMap, Matrix, Scalar};
use crate::polycoalg;

/// A named coalgebra with known group-like elements (as vectors).
#[derive(Debug, Clone)]
pub struct Entry {
    pub name: String,
    pub coalgebra: Coalgebra,
    pub grouplikes: Vec<Vec<Scalar>>,
}

fn unit_vector(field: Field, n: usize, i: usize) -> Vec<Scalar> {
    (0..n).map(|j| if i == j { field.one() } else { field.zero() }).collect()
}

pub fn grouplike(field: Field, n: usize) -> Coalgebra {
    let terms: Vec<_> = (0..n).map(|g| (g, g, g, field.one())).collect();
    Coalgebra::from_terms(field, GradedVect::ungraded(n), &terms, &vec![field.one(); n])
        .expect("group-like coalgebra")
}

/// The incidence coalgebra of the chain `a < b`: basis `a, b, x` with
/// `Δx = a⊗x + x⊗b`.
pub fn incidence_chain(field: Field) -> Coalgebra {
    let one = field.one();
    Coalgebra::from_terms(
        field,
        GradedVect::ungraded(3),
        &[
            (0, 0, 0, one.clone()),
            (1, 1, 1, one.clone()),
            (2, 0, 2, one.clone()),
            (2, 2, 1, one.clone()),
        ],
        &[one.clone(), one, field.zero()],
    )
    .expect("incidence coalgebra")
}

/// `k ⊕ D` with `D` the dual numbers: basis `g, 1, z`, `Δz = 1⊗z + z⊗1`.
pub fn k_plus_dual_numbers(field: Field) -> Coalgebra {
    let one = field.one();
    Coalgebra::from_terms(
        field,
        GradedVect::ungraded(3),
        &[
            (0, 0, 0, one.clone()),
            (1, 1, 1, one.clone()),
            (2, 1, 2, one.clone()),
            (2, 2, 1, one.clone()),
        ],
        &[one.clone(), one, field.zero()],
    )
    .expect("k ⊕ dual numbers")
}

pub fn catalogue(field: Field) -> Vec<Entry> {
    let e = |n, i| unit_vector(field, n, i);
    let mut out = vec![
        Entry {
            name: "k".into(),
            coalgebra: Coalgebra::trivial(field),
            grouplikes: vec![e(1, 0)],
        },
        Entry {
            name: "group-like 2".into(),
            coalgebra: grouplike(field, 2),
            grouplikes: vec![e(2, 0), e(2, 1)],
        },
        Entry {
            name: "group-like 3".into(),
            coalgebra: grouplike(field, 3),
            grouplikes: vec![e(3, 0), e(3, 1), e(3, 2)],
        },
    ];
    for (n, d) in [(1, 0), (2, 0), (1, 1), (2, 1)] {
        out.push(Entry {
            name: format!("truncated polynomial N={n} d={d}"),
            coalgebra: polycoalg::build(n, d, field).coalgebra().clone(),
            grouplikes: vec![e(n + 1, 0)],
        });
    }
    out.push(Entry {
        name: "incidence a<b".into(),
        coalgebra: incidence_chain(field),
        grouplikes: vec![e(3, 0), e(3, 1)],
    });
    out.push(Entry {
        name: "k ⊕ dual numbers".into(),
        coalgebra: k_plus_dual_numbers(field),
        grouplikes: vec![e(3, 0), e(3, 1)],
    });
    out
}

/// One randomly generated test case.
#[derive(Debug, Clone)]
pub struct Instance {
    pub seed: u64,
    pub entry: String,
    pub coalgebra: Coalgebra,
    pub comodules: Vec<VComodule>,
    pub contramodules: Vec<VContramodule>,
    pub space: GradedVect,
    /// `k → C` picking a group-like element.
    pub point: CoalgebraMorphism,
}

impl Instance {
    pub fn label(&self) -> String {
        format!("seed {} ({})", self.seed, self.entry)
    }
}

pub fn random_scalar(field: Field, rng: &mut impl Rng) -> Scalar {
    match field {
        Field::Rational => field.int(rng.gen_range(-2..=2)),
        Field::Prime(p) => field.int(rng.gen_range(0..p.min(1 << 20)) as i64),
    }
}

/// A random nonzero vector supported in a single degree.
pub fn random_homogeneous(field: Field, v: &GradedVect, rng: &mut impl Rng) -> Vec<Scalar> {
    let mut out = vec![field.zero(); v.dim()];
    if v.dim() == 0 {
        return out;
    }
    let degrees: Vec<i32> = v.dims().keys().copied().collect();
    let d = degrees[rng.gen_range(0..degrees.len())];
    let idx = v.indices_of_degree(d);
    for &i in &idx {
        out[i] = random_scalar(field, rng);
    }
    if out.iter().all(Scalar::is_zero) {
        out[idx[rng.gen_range(0..idx.len())]] = field.one();
    }
    out
}

/// A random invertible map `V → V` of degree 0.
pub fn random_automorphism(field: Field, v: &GradedVect, rng: &mut impl Rng) -> LinMap {
    let n = v.dim();
    loop {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            for j in 0..n {
                if v.degree(i) == v.degree(j) {
                    m.set(i, j, random_scalar(field, rng));
                }
            }
        }
        if m.inverse().is_some() {
            return LinMap::new(v.clone(), v.clone(), 0, m).expect("degree-preserving");
        }
    }
}

fn subspace_vectors(field: Field, v: &GradedVect, rng: &mut impl Rng) -> Vec<Vec<Scalar>> {
    let k = rng.gen_range(1..=2);
    (0..k).map(|_| random_homogeneous(field, v, rng)).collect()
}

/// A random comodule of dimension in `1..=max_dim`: the cofree comodule
/// on `k^m`, one of its subcomodules generated by random vectors, or the
/// corresponding quotient, in a random basis.
pub fn random_comodule(c: &Coalgebra, max_dim: usize, rng: &mut impl Rng) -> Result<VComodule> {
    let field = c.field();
    for _ in 0..64 {
        let m = rng.gen_range(1..=2);
        let t = VComodule::cofree(&GradedVect::ungraded(m), c);
        let candidate = match rng.gen_range(0..3) {
            0 => t,
            1 => t.restrict_to(&t.generated(&subspace_vectors(field, t.space(), rng))?)?,
            _ => t.quotient_by(&t.generated(&subspace_vectors(field, t.space(), rng))?)?.0,
        };
        if (1..=max_dim).contains(&candidate.dim()) {
            let g = random_automorphism(field, candidate.space(), rng);
            return candidate.transport(&g);
        }
    }
    Ok(VComodule::cofree(&GradedVect::unit(), c))
}

/// The contramodule counterpart of [`random_comodule`], built from free
/// contramodules.
pub fn random_contramodule(
    c: &Coalgebra,
    max_dim: usize,
    rng: &mut impl Rng,
) -> Result<VContramodule> {
    let field = c.field();
    for _ in 0..64 {
        let m = rng.gen_range(1..=2);
        let f = VContramodule::free(&GradedVect::ungraded(m), c)?;
        let candidate = match rng.gen_range(0..3) {
            0 => f,
            1 => f.restrict_to(&f.generated(&subspace_vectors(field, f.space(), rng))?)?,
            _ => f.quotient_by(&f.generated(&subspace_vectors(field, f.space(), rng))?)?.0,
        };
        if (1..=max_dim).contains(&candidate.dim()) {
            let g = random_automorphism(field, candidate.space(), rng);
            return candidate.transport(&g);
        }
    }
    VContramodule::free(&GradedVect::unit(), c)
}

/// Builds the instance for one seed, cycling through the catalogue entries
/// of dimension at most `max_dim`.
pub fn instance(field: Field, max_dim: usize, seed: u64) -> Result<Instance> {
    let entries: Vec<Entry> = catalogue(field)
        .into_iter()
        .filter(|e| e.coalgebra.dim() <= max_dim)
        .collect();
    let entry = &entries[(seed % entries.len() as u64) as usize];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = random_automorphism(field, entry.coalgebra.space(), &mut rng);
    let coalgebra = entry.coalgebra.transport(&g)?;
    let gl = &entry.grouplikes[rng.gen_range(0..entry.grouplikes.len())];
    let gl = g.matrix().apply(gl)?;
    let point_map = LinMap::new(
        GradedVect::unit(),
        coalgebra.space().clone(),
        0,
        Matrix::from_fn(field, gl.len(), 1, |i, _| gl[i].clone()),
    )?;
    let point = CoalgebraMorphism::new(&Coalgebra::trivial(field), &coalgebra, point_map)?;
    let comodules = (0..2)
        .map(|_| random_comodule(&coalgebra, max_dim, &mut rng))
        .collect::<Result<_>>()?;
    let contramodules = (0..2)
        .map(|_| random_contramodule(&coalgebra, max_dim, &mut rng))
        .collect::<Result<_>>()?;
    let space = GradedVect::ungraded(rng.gen_range(1..=max_dim.min(2)));
    Ok(Instance {
        seed,
        entry: entry.name.clone(),
        coalgebra,
        comodules,
        contramodules,
        space,
        point,
    })
}

/// Instances for seeds `first_seed .. first_seed + count`.
pub fn family(field: Field, max_dim: usize, first_seed: u64, count: usize) -> Result<Vec<Instance>> {
    (0..count as u64)
        .map(|i| instance(field, max_dim, first_seed + i))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalogue_validates() {
        for field in [Field::Rational, Field::Prime(2), Field::Prime(3)] {
            for e in catalogue(field) {
                assert!(e.coalgebra.validate().passed, "{}", e.name);
            }
        }
    }

    #[test]
    fn family_is_deterministic_and_valid() {
        let a = family(Field::Prime(2), 3, 7, 12).unwrap();
        let b = family(Field::Prime(2), 3, 7, 12).unwrap();
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.coalgebra, y.coalgebra);
            assert_eq!(x.comodules, y.comodules);
            assert!(x.coalgebra.validate().passed, "{}", x.label());
            for m in &x.comodules {
                assert!(m.validate().passed, "{}", x.label());
                assert!((1..=3).contains(&m.dim()));
            }
            for p in &x.contramodules {
                assert!(p.validate().passed, "{}", x.label());
            }
        }
    }
}
