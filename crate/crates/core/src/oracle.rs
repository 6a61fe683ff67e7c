//! Brute-force reference implementations used to certify the fast paths:
//! exhaustive map enumeration, universal properties checked against every
//! competing (co)cone on small test objects, and hom objects obtained by
//! writing out the defining linear equations entry by entry.
//!
//! Nothing in the library calls into this module; it serves the test suites
//! and the command-line `--oracle` mode.

use crate::budget::{power, Budget};
use crate::coalg::{Side, VComodule, VContramodule};
use crate::error::{Error, Result};
use crate::exactlin::{Field, GradedVect, LinMap, LinSub, Matrix, Scalar};
use crate::finset::{
    coequalizer, equalizer, product, pullback, FinMap, FinSet, MapTables,
};
use crate::report::Report;

/// Every total map `a → b` exactly once, in odometer order (first element
/// of `a` slowest).
pub fn all_maps(a: &FinSet, b: &FinSet, budget: &Budget) -> Result<impl Iterator<Item = FinMap>> {
    budget.admit(power(b.len(), a.len()))?;
    let (a, b) = (a.clone(), b.clone());
    Ok(MapTables::new(a.len(), b.len())
        .map(move |t| FinMap::from_indices(a.clone(), b.clone(), t).expect("valid table")))
}

/// Every degree-0 linear map `v → w` over `F_p` exactly once; for ungraded
/// spaces this is every matrix. Entries run through `0..p` in row-major
/// odometer order.
pub fn all_linmaps(
    v: &GradedVect,
    w: &GradedVect,
    field: Field,
    budget: &Budget,
) -> Result<impl Iterator<Item = LinMap>> {
    let p = match field {
        Field::Prime(p) => p as usize,
        Field::Rational => {
            return Err(Error::Precondition("enumeration needs a finite field".into()))
        }
    };
    let slots: Vec<(usize, usize)> = (0..w.dim())
        .flat_map(|i| (0..v.dim()).map(move |j| (i, j)))
        .filter(|&(i, j)| w.degree(i) == v.degree(j))
        .collect();
    budget.admit(power(p, slots.len()))?;
    let (v, w) = (v.clone(), w.clone());
    Ok(MapTables::new(slots.len(), p).map(move |digits| {
        let mut m = Matrix::zeros(field, w.dim(), v.dim());
        for (&(i, j), &d) in slots.iter().zip(&digits) {
            m.set(i, j, field.int(d as i64));
        }
        LinMap::new(v.clone(), w.clone(), 0, m).expect("degree-0 slots")
    }))
}

/// The data of a finite limit or colimit in `Sets`.
#[derive(Debug, Clone)]
pub enum UniversalData {
    Equaliser { f: FinMap, g: FinMap },
    Coequaliser { f: FinMap, g: FinMap },
    Product { a: FinSet, b: FinSet },
    Pullback { f: FinMap, g: FinMap },
}

/// Checks that the library's construction has the universal property
/// against every (co)cone with vertex of size `0..=max_vertex`: exactly one
/// mediating map exists.
pub fn universal_property_check(
    data: &UniversalData,
    max_vertex: usize,
    budget: &Budget,
) -> Result<Report> {
    let mut r = Report::new(match data {
        UniversalData::Equaliser { .. } => "equaliser",
        UniversalData::Coequaliser { .. } => "coequaliser",
        UniversalData::Product { .. } => "product",
        UniversalData::Pullback { .. } => "pullback",
    });
    for n in 0..=max_vertex {
        let z = FinSet::numbered(n);
        match data {
            UniversalData::Equaliser { f, g } => {
                let e = equalizer(f, g)?;
                for h in all_maps(&z, f.dom(), budget)? {
                    if f.after(&h)? != g.after(&h)? {
                        continue;
                    }
                    let count = count_mediating(&z, &e.members, budget, |m| {
                        Ok(e.include.after(m)? == h)
                    })?;
                    tally(&mut r, count, || format!("cone {h}"));
                }
            }
            UniversalData::Coequaliser { f, g } => {
                let q = coequalizer(f, g)?;
                for h in all_maps(f.cod(), &z, budget)? {
                    if h.after(f)? != h.after(g)? {
                        continue;
                    }
                    let count = count_mediating(&q.quotient, &z, budget, |m| {
                        Ok(m.after(&q.project)? == h)
                    })?;
                    tally(&mut r, count, || format!("cocone {h}"));
                }
            }
            UniversalData::Product { a, b } => {
                let p = product(a, b);
                for h1 in all_maps(&z, a, budget)? {
                    for h2 in all_maps(&z, b, budget)? {
                        let count = count_mediating(&z, &p.set, budget, |m| {
                            Ok(p.p1.after(m)? == h1 && p.p2.after(m)? == h2)
                        })?;
                        tally(&mut r, count, || format!("cone ({h1}, {h2})"));
                    }
                }
            }
            UniversalData::Pullback { f, g } => {
                let p = pullback(f, g)?;
                for h1 in all_maps(&z, f.dom(), budget)? {
                    for h2 in all_maps(&z, g.dom(), budget)? {
                        if f.after(&h1)? != g.after(&h2)? {
                            continue;
                        }
                        let count = count_mediating(&z, &p.set, budget, |m| {
                            Ok(p.p1.after(m)? == h1 && p.p2.after(m)? == h2)
                        })?;
                        tally(&mut r, count, || format!("cone ({h1}, {h2})"));
                    }
                }
            }
        }
    }
    Ok(r)
}

fn count_mediating(
    from: &FinSet,
    to: &FinSet,
    budget: &Budget,
    good: impl Fn(&FinMap) -> Result<bool>,
) -> Result<usize> {
    let mut count = 0;
    for m in all_maps(from, to, budget)? {
        if good(&m)? {
            count += 1;
        }
    }
    Ok(count)
}

fn tally(r: &mut Report, count: usize, describe: impl Fn() -> String) {
    r.tick(1);
    if count != 1 {
        r.fail(format!("{} has {count} mediating maps", describe()));
    }
}

/// Number of ordered `k`-tuples of partitions of an `n`-set whose joint
/// quotient map is a bijection onto the product of the blocks: the count of
/// ordered product structures on the set.
pub fn ordered_product_structures(n: usize, k: usize, budget: &Budget) -> Result<u64> {
    let partitions = set_partitions(n);
    budget.admit(power(partitions.len(), k))?;
    let mut count = 0;
    for choice in MapTables::new(k, partitions.len()) {
        let parts: Vec<&Vec<usize>> = choice.iter().map(|&i| &partitions[i]).collect();
        let size: usize = parts
            .iter()
            .map(|p| p.iter().max().map_or(0, |m| m + 1))
            .product();
        if size != n {
            continue;
        }
        let mut seen = std::collections::HashSet::new();
        if (0..n).all(|x| seen.insert(parts.iter().map(|p| p[x]).collect::<Vec<_>>())) {
            count += 1;
        }
    }
    Ok(count)
}

/// All set partitions of `{0..n}` as restricted growth strings.
fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn go(n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        let next = cur.iter().max().map_or(0, |m| m + 1);
        for b in 0..=next {
            cur.push(b);
            go(n, cur, out);
            cur.pop();
        }
    }
    go(n, &mut cur, &mut out);
    out
}

/// Solves a homogeneous system degree by degree: `unknowns` lists the
/// `(row, col)` entries of `F: X → Y` allowed in each degree, `equations`
/// maps an entry to its coefficient rows.
fn solve_entrywise(
    field: Field,
    x: &GradedVect,
    y: &GradedVect,
    n_equations: usize,
    coefficient: impl Fn(usize, usize, usize) -> Scalar,
) -> Result<LinSub> {
    let ambient = x.internal_hom(y);
    let mut basis = Vec::new();
    for d in ambient.dims().keys() {
        let unknowns: Vec<(usize, usize)> = (0..y.dim())
            .flat_map(|i| (0..x.dim()).map(move |j| (i, j)))
            .filter(|&(i, j)| y.degree(i) - x.degree(j) == *d)
            .collect();
        let system = Matrix::from_fn(field, n_equations, unknowns.len(), |e, u| {
            let (i, j) = unknowns[u];
            coefficient(e, i, j)
        });
        let kernel = system.kernel();
        for col in 0..kernel.cols() {
            let mut v = vec![field.zero(); ambient.dim()];
            for (u, &(i, j)) in unknowns.iter().enumerate() {
                v[i * x.dim() + j] = kernel.get(u, col).clone();
            }
            basis.push(v);
        }
    }
    LinSub::span(field, &ambient, &basis)
}

/// The hom object of right comodules from the equations
/// `Σ_n ρ_N[(n',c), n] F[n, m] = Σ_{m'} F[n', m'] ρ_M[(m',c), m]`.
pub fn direct_comodule_hom(m: &VComodule, n: &VComodule) -> Result<LinSub> {
    if m.coalgebra() != n.coalgebra() || m.side() != Side::Right || n.side() != Side::Right {
        return Err(Error::CoalgebraMismatch);
    }
    let field = m.field();
    let dc = m.coalgebra().dim();
    let (dm, dn) = (m.dim(), n.dim());
    let (rm, rn) = (m.rho().matrix(), n.rho().matrix());
    // equation index: (n', c, m) flattened
    solve_entrywise(field, m.space(), n.space(), dn * dc * dm, |e, i, j| {
        let (np, rest) = (e / (dc * dm), e % (dc * dm));
        let (c, mm) = (rest / dm, rest % dm);
        let mut s = field.zero();
        if mm == j {
            s = s.add(rn.get(np * dc + c, i));
        }
        if np == i {
            s = s.sub(rm.get(j * dc + c, mm));
        }
        s
    })
}

/// The hom object of contramodules from the equations
/// `Σ_j F[i, j] θ_P[j, (x,c)] = Σ_y θ_Q[i, (y,c)] F[y, x]`.
pub fn direct_contra_hom(p: &VContramodule, q: &VContramodule) -> Result<LinSub> {
    if p.coalgebra() != q.coalgebra() {
        return Err(Error::CoalgebraMismatch);
    }
    let field = p.field();
    let dc = p.coalgebra().dim();
    let (dp, dq) = (p.dim(), q.dim());
    let (tp, tq) = (p.theta().matrix(), q.theta().matrix());
    // equation index: (i, x, c) flattened
    solve_entrywise(field, p.space(), q.space(), dq * dp * dc, |e, fi, fj| {
        let (i, rest) = (e / (dp * dc), e % (dp * dc));
        let (x, c) = (rest / dc, rest % dc);
        let mut s = field.zero();
        if fi == i {
            s = s.add(tp.get(fj, x * dc + c));
        }
        if fj == x {
            s = s.sub(tq.get(i, fi * dc + c));
        }
        s
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_counts() {
        let b = Budget::default();
        let count = |a, c| all_maps(&FinSet::numbered(a), &FinSet::numbered(c), &b).unwrap().count();
        assert_eq!(count(0, 2), 1);
        assert_eq!(count(2, 2), 4);
        assert_eq!(count(3, 2), 8);
        assert_eq!(count(2, 0), 0);
    }

    #[test]
    fn linmap_counts() {
        let b = Budget::default();
        let f2 = Field::Prime(2);
        let count = |m, n| {
            all_linmaps(&GradedVect::ungraded(m), &GradedVect::ungraded(n), f2, &b)
                .unwrap()
                .count()
        };
        assert_eq!(count(1, 1), 2);
        assert_eq!(count(2, 1), 4);
        assert_eq!(count(2, 2), 16);
        assert!(all_linmaps(&GradedVect::ungraded(3), &GradedVect::ungraded(3), f2, &Budget::new(100)).is_err());
    }

    #[test]
    fn product_structures() {
        let b = Budget::default();
        assert_eq!(ordered_product_structures(1, 2, &b).unwrap(), 1);
        assert_eq!(ordered_product_structures(2, 2, &b).unwrap(), 2);
        assert_eq!(ordered_product_structures(3, 2, &b).unwrap(), 2);
        assert_eq!(ordered_product_structures(4, 2, &b).unwrap(), 8);
    }

    #[test]
    fn universal_properties() {
        let b = Budget::default();
        let a = FinSet::numbered(2);
        let id = FinMap::identity(&a);
        let r = universal_property_check(&UniversalData::Equaliser { f: id.clone(), g: id.clone() }, 2, &b).unwrap();
        // every map Z → A is a cone: 1 + 2 + 4
        assert!(r.passed);
        assert_eq!(r.checked, 7);
        let r = universal_property_check(&UniversalData::Pullback { f: id.clone(), g: id }, 2, &b).unwrap();
        assert!(r.passed);
    }
}
