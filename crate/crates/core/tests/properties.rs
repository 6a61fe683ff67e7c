use cocontra::budget::{power, Budget};
use cocontra::coalg::catalogue::instance;
use cocontra::exactlin::{
    curry, kernel, tensor_map, uncurry, Field, GradedVect, LinMap, Matrix,
};
use cocontra::finset::{function_space, FinSet};
use cocontra::oracle::{all_linmaps, all_maps};
use cocontra::polycoalg;
use proptest::prelude::*;

fn f3_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(0i64..3, rows * cols).prop_map(move |v| {
        let f = Field::Prime(3);
        Matrix::from_fn(f, rows, cols, |i, j| f.int(v[i * cols + j]))
    })
}

fn q_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(-3i64..=3, rows * cols).prop_map(move |v| {
        let q = Field::Rational;
        Matrix::from_fn(q, rows, cols, |i, j| q.int(v[i * cols + j]))
    })
}

fn degrees(max: usize) -> impl Strategy<Value = GradedVect> {
    prop::collection::vec(-1i32..=1, 0..=max).prop_map(|mut d| {
        d.sort();
        GradedVect::new(d)
    })
}

fn homogeneous(field: Field, dom: &GradedVect, cod: &GradedVect, degree: i32, seed: &[i64]) -> LinMap {
    let m = Matrix::from_fn(field, cod.dim(), dom.dim(), |i, j| {
        if cod.degree(i) - dom.degree(j) == degree {
            field.int(seed[(i * 7 + j) % seed.len()])
        } else {
            field.zero()
        }
    });
    LinMap::new(dom.clone(), cod.clone(), degree, m).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_nullity(m in q_matrix(3, 4)) {
        prop_assert_eq!(m.rank() + m.kernel().cols(), 4);
        let zero = Matrix::zeros(Field::Rational, 3, m.kernel().cols());
        prop_assert_eq!(m.mul(&m.kernel()).unwrap(), zero);
    }

    #[test]
    fn inverse_is_two_sided(m in f3_matrix(3, 3)) {
        if let Some(inv) = m.inverse() {
            let id = Matrix::identity(Field::Prime(3), 3);
            prop_assert_eq!(m.mul(&inv).unwrap(), id.clone());
            prop_assert_eq!(inv.mul(&m).unwrap(), id);
        } else {
            prop_assert!(m.rank() < 3);
        }
    }

    #[test]
    fn kernel_is_graded(v in degrees(3), w in degrees(3), seed in prop::collection::vec(-2i64..=2, 1..6)) {
        let f = homogeneous(Field::Rational, &v, &w, 0, &seed);
        let k = kernel(&f).unwrap();
        prop_assert_eq!(k.dim() + f.rank(), v.dim());
        let composite = f.after(&k.include).unwrap();
        prop_assert!(composite.is_zero());
    }

    #[test]
    fn tensor_is_functorial(
        u in degrees(2), v in degrees(2), w in degrees(2),
        d1 in -1i32..=1, d2 in -1i32..=1,
        s in prop::collection::vec(-2i64..=2, 1..6),
    ) {
        let q = Field::Rational;
        let f = homogeneous(q, &u, &v, d1, &s);
        let g = homogeneous(q, &v, &w, d2, &s);
        let h = homogeneous(q, &w, &u, d1, &s);
        let k = homogeneous(q, &u, &w, d2, &s);
        // (g⊗k)(f⊗h) = (−1)^{|k||f|} (gf)⊗(kh)
        let lhs = tensor_map(&g, &k).unwrap().after(&tensor_map(&f, &h).unwrap()).unwrap();
        let rhs = tensor_map(&g.after(&f).unwrap(), &k.after(&h).unwrap()).unwrap();
        let sign = if (d2 * d1).rem_euclid(2) == 1 { q.int(-1) } else { q.one() };
        prop_assert_eq!(lhs.matrix(), &rhs.matrix().scale(&sign));
    }

    #[test]
    fn curry_uncurry_round_trip(u in degrees(2), v in degrees(2), w in degrees(2), s in prop::collection::vec(-2i64..=2, 1..6)) {
        let q = Field::Rational;
        let g = homogeneous(q, &u.tensor(&v), &w, 0, &s);
        let c = curry(&g, &u, &v).unwrap();
        prop_assert_eq!(uncurry(&c, &v, &w).unwrap(), g);
    }

    #[test]
    fn random_instances_validate(seed in 0u64..10_000, rational in any::<bool>()) {
        let (field, max_dim) = if rational { (Field::Rational, 2) } else { (Field::Prime(2), 3) };
        let inst = instance(field, max_dim, seed).unwrap();
        prop_assert!(inst.coalgebra.validate().passed);
        for m in &inst.comodules {
            prop_assert!(m.validate().passed);
        }
        for p in &inst.contramodules {
            prop_assert!(p.validate().passed);
        }
    }

    #[test]
    fn scalar_field_axioms(a in -20i64..20, b in -20i64..20, p in prop::sample::select(vec![2u64, 3, 5, 7])) {
        for field in [Field::Rational, Field::Prime(p)] {
            let (x, y) = (field.int(a), field.int(b));
            prop_assert_eq!(x.add(&y).sub(&y), x.clone());
            if let Some(inv) = y.inv() {
                prop_assert!(y.mul(&inv).is_one());
                prop_assert_eq!(x.mul(&y).div(&y), Some(x.clone()));
            } else {
                prop_assert!(y.is_zero());
            }
            let text = x.to_string();
            prop_assert_eq!(field.parse_scalar(&text).unwrap(), x);
        }
    }
}

#[test]
fn map_streams_are_complete_and_distinct() {
    let b = Budget::default();
    for m in 0..=3 {
        for n in 0..=3 {
            let (a, c) = (FinSet::numbered(m), FinSet::numbered(n));
            let maps: Vec<_> = all_maps(&a, &c, &b).unwrap().collect();
            let distinct: std::collections::HashSet<_> = maps.iter().map(|f| f.table().to_vec()).collect();
            assert_eq!(maps.len() as u128, power(n, m));
            assert_eq!(distinct.len(), maps.len());
            assert_eq!(function_space(&a, &c).len(), maps.len());
        }
    }
}

#[test]
fn linmap_streams_cover_degree_zero_maps() {
    let b = Budget::default();
    let f2 = Field::Prime(2);
    let v = GradedVect::new(vec![0, 1]);
    let w = GradedVect::new(vec![0, 0, 1]);
    // slots: 2 in degree 0, 1 in degree 1
    let maps: Vec<_> = all_linmaps(&v, &w, f2, &b).unwrap().collect();
    assert_eq!(maps.len(), 8);
    assert!(maps.iter().all(|f| f.degree() == 0));
    assert!(all_linmaps(&v, &w, Field::Rational, &b).is_err());
}

/// Every family on `F_2^2` (or `Q^2` with entries in {−1,0,1}) for the
/// truncated polynomial coalgebra: acceptance holds exactly when the
/// relations hold, and over `Q` exactly when the family is divided powers.
#[test]
fn polynomial_families_accepted_iff_relations() {
    let v = GradedVect::ungraded(2);
    for (field, values) in [(Field::Prime(2), vec![0, 1]), (Field::Rational, vec![-1, 0, 1])] {
        let c = polycoalg::build(2, 0, field);
        let entries = values.len();
        let ops: Vec<LinMap> = (0..power(entries, 4) as usize)
            .map(|k| {
                let digits: Vec<i64> = (0..4).map(|i| values[(k / entries.pow(i)) % entries]).collect();
                let m = Matrix::from_fn(field, 2, 2, |i, j| field.int(digits[i * 2 + j]));
                LinMap::new(v.clone(), v.clone(), 0, m).unwrap()
            })
            .collect();
        let id = LinMap::identity(field, &v);
        for r1 in &ops {
            for r2 in &ops {
                let family = vec![id.clone(), r1.clone(), r2.clone()];
                let relations = c.relation_failure(&family).is_none();
                assert_eq!(c.comodule_from_family(&v, &family).is_ok(), relations);
                assert_eq!(c.contramodule_from_family(&v, &family).is_ok(), relations);
                if field == Field::Rational {
                    let dp = c.divided_power_certificate(&family).unwrap().passed;
                    assert_eq!(dp, relations);
                }
            }
        }
    }
}

#[test]
fn polynomial_coalgebras_validate() {
    for field in [Field::Rational, Field::Prime(2)] {
        for n in 0..=6 {
            for d in [0, 1] {
                assert!(polycoalg::build(n, d, field).coalgebra().validate().passed);
            }
        }
    }
}
