use cocontra::budget::Budget;
use cocontra::finset::{coequalizer, FinMap, FinSet};
use cocontra::oracle::{all_maps, ordered_product_structures, universal_property_check, UniversalData};
use cocontra::set_comodule::unique_comonoid_certificate;
use cocontra::set_contramodule::{
    decompose, enumerate_all, induction_adjunction_certificate, noncocontinuity_demo,
};
use cocontra::set_correspondence::{equivalence_certificate, lr_matches_generic, all_comodules, CertBounds};

#[test]
fn comonoid_is_unique_up_to_three() {
    for (n, candidates) in [(1, 1), (2, 16), (3, 729)] {
        let r = unique_comonoid_certificate(&FinSet::numbered(n)).unwrap();
        assert!(r.passed);
        assert_eq!(r.checked, candidates);
    }
}

#[test]
fn survivors_match_product_structures() {
    let b = Budget::default();
    let c = FinSet::numbered(2);
    for n in 1..=3 {
        let x = FinSet::labelled("x", n);
        let all = enumerate_all(&x, &c, &b).unwrap();
        assert_eq!(all.len() as u64, ordered_product_structures(n, 2, &b).unwrap());
        for t in &all {
            for u in x.elements() {
                let d = decompose(t, u).unwrap();
                assert!(d.pi.is_bijective());
                assert_eq!(d.sigma.after(&d.pi).unwrap(), FinMap::identity(&x));
                assert!(t.is_morphism(&d.product, &d.pi));
            }
        }
    }
}

#[test]
fn noncocontinuity_sizes_match_enumeration() {
    for n in [2usize, 3] {
        let c = FinSet::numbered(n);
        let demo = noncocontinuity_demo(&c).unwrap();
        // constant functions C → {a,b} are identified; the rest stay apart
        assert_eq!(demo.coequalizer_size, (1usize << n) - 1);
        assert_eq!(demo.image_size, 1);
    }
}

#[test]
fn constructions_have_their_universal_property() {
    let b = Budget::default();
    let a = FinSet::numbered(3);
    let two = FinSet::numbered(2);
    for f in all_maps(&a, &two, &b).unwrap() {
        for g in all_maps(&a, &two, &b).unwrap() {
            for data in [
                UniversalData::Equaliser { f: f.clone(), g: g.clone() },
                UniversalData::Coequaliser { f: f.clone(), g: g.clone() },
            ] {
                assert!(universal_property_check(&data, 2, &b).unwrap().passed);
            }
        }
    }
    let id = FinMap::identity(&two);
    for f in all_maps(&a, &two, &b).unwrap() {
        let data = UniversalData::Pullback { f, g: id.clone() };
        assert!(universal_property_check(&data, 2, &b).unwrap().passed);
    }
    let data = UniversalData::Product { a: two.clone(), b: a };
    assert!(universal_property_check(&data, 2, &b).unwrap().passed);
}

#[test]
fn coequaliser_partition_matches_hand_count() {
    let pt = FinSet::point();
    let x = FinSet::new(["a", "b", "c"]).unwrap();
    let q = coequalizer(
        &FinMap::constant(&pt, &x, "a").unwrap(),
        &FinMap::constant(&pt, &x, "c").unwrap(),
    )
    .unwrap();
    assert_eq!(q.quotient.elements(), &["a", "b"]);
    assert_eq!(q.project.table(), &[0, 1, 0]);
}

#[test]
fn equivalence_on_small_bounds() {
    let bounds = CertBounds { max_carrier: 3, max_base: 2, max_fiber: 2 };
    let b = Budget::default();
    assert!(equivalence_certificate(bounds, &b).unwrap().passed);
    for m in all_comodules(bounds) {
        assert!(lr_matches_generic(&m, &b).unwrap());
    }
}

#[test]
fn induction_is_left_adjoint_to_restriction() {
    let r = induction_adjunction_certificate(2, 2, &Budget::default()).unwrap();
    assert!(r.passed, "{:?}", r.witness);
}
