use cocontra::coalg::bridge::bridge_certificate;
use cocontra::coalg::catalogue::{family, Instance};
use cocontra::coalg::change::{cohom_unit_report, cotensor_unit_report, trifunctor_probe};
use cocontra::coalg::functors::{adjunction_certificate, kleisli_certificate, naturality_report};
use cocontra::coalg::hom::{
    comodule_hom_object, contra_hom_object, enriched_composition, identity_element, HomObject,
};
use cocontra::exactlin::{tensor_map, Field, LinMap};
use cocontra::oracle::{direct_comodule_hom, direct_contra_hom};

fn f2_family() -> Vec<Instance> {
    family(Field::Prime(2), 3, 100, 16).unwrap()
}

fn q_family() -> Vec<Instance> {
    family(Field::Rational, 2, 100, 12).unwrap()
}

#[test]
fn hom_objects_match_entrywise_solve() {
    for inst in f2_family().iter().chain(&q_family()) {
        for m in &inst.comodules {
            for n in &inst.comodules {
                let h = comodule_hom_object(m, n).unwrap();
                let direct = direct_comodule_hom(m, n).unwrap();
                assert!(h.sub.same_subspace(&direct), "{}", inst.label());
            }
        }
        for p in &inst.contramodules {
            for q in &inst.contramodules {
                let h = contra_hom_object(p, q).unwrap();
                let direct = direct_contra_hom(p, q).unwrap();
                assert!(h.sub.same_subspace(&direct), "{}", inst.label());
            }
        }
    }
}

/// `c∘(b∘a) = (c∘b)∘a` for hom objects `a: [X,Y]`, `b: [Y,Z]`, `c: [Z,W]`.
fn check_associative(
    a: &HomObject,
    b: &HomObject,
    c: &HomObject,
    ab: &HomObject,
    bc: &HomObject,
    abc: &HomObject,
) {
    let field = a.sub.field();
    let comp_ab = enriched_composition(b, a, ab).unwrap();
    let comp_bc = enriched_composition(c, b, bc).unwrap();
    let left = enriched_composition(c, ab, abc).unwrap();
    let right = enriched_composition(bc, a, abc).unwrap();
    let id_c = LinMap::identity(field, &c.sub.sub);
    let id_a = LinMap::identity(field, &a.sub.sub);
    let lhs = left.after(&tensor_map(&id_c, &comp_ab).unwrap()).unwrap();
    let rhs = right.after(&tensor_map(&comp_bc, &id_a).unwrap()).unwrap();
    assert_eq!(lhs.matrix(), rhs.matrix());
}

#[test]
fn enriched_composition_is_associative_and_unital() {
    for inst in f2_family().iter().chain(&q_family()) {
        let ms = &inst.comodules;
        let h = |i: usize, j: usize| comodule_hom_object(&ms[i], &ms[j]).unwrap();
        let (h00, h01, h10, h11) = (h(0, 0), h(0, 1), h(1, 0), h(1, 1));
        check_associative(&h01, &h10, &h01, &h00, &h11, &h01);
        for hxx in [&h00, &h11] {
            let field = hxx.sub.field();
            let j = identity_element(hxx).unwrap();
            let comp = enriched_composition(hxx, hxx, hxx).unwrap();
            let id = LinMap::identity(field, &hxx.sub.sub);
            let left = comp.after(&tensor_map(&j, &id).unwrap()).unwrap();
            let right = comp.after(&tensor_map(&id, &j).unwrap()).unwrap();
            assert_eq!(left.matrix(), id.matrix(), "{}", inst.label());
            assert_eq!(right.matrix(), id.matrix(), "{}", inst.label());
        }
        let ps = &inst.contramodules;
        let g = |i: usize, j: usize| contra_hom_object(&ps[i], &ps[j]).unwrap();
        check_associative(&g(0, 1), &g(1, 0), &g(0, 1), &g(0, 0), &g(1, 1), &g(0, 1));
    }
}

#[test]
fn adjunction_and_naturality_on_family() {
    for inst in f2_family().iter().chain(&q_family()) {
        for p in &inst.contramodules {
            for m in &inst.comodules {
                let r = adjunction_certificate(p, m).unwrap();
                assert!(r.passed, "{}: {:?}", inst.label(), r.witness);
            }
        }
        let (p0, p1) = (&inst.contramodules[0], &inst.contramodules[1]);
        let (m0, m1) = (&inst.comodules[0], &inst.comodules[1]);
        for g in contra_hom_object(p1, p0).unwrap().morphisms() {
            for f in comodule_hom_object(m0, m1).unwrap().morphisms() {
                let r = naturality_report(p1, p0, &g, m0, m1, &f).unwrap();
                assert!(r.passed, "{}: {:?}", inst.label(), r.witness);
            }
        }
    }
}

#[test]
fn kleisli_bridge_and_units_on_family() {
    for inst in f2_family().iter().chain(&q_family()) {
        assert!(kleisli_certificate(&inst.space, &inst.coalgebra).unwrap().passed);
        let b = bridge_certificate(&inst.coalgebra, &inst.comodules, &inst.contramodules).unwrap();
        assert!(b.passed, "{}: {:?}", inst.label(), b.witness);
        for m in &inst.comodules {
            assert!(cotensor_unit_report(m).unwrap().passed);
        }
        for p in &inst.contramodules {
            assert!(cohom_unit_report(p).unwrap().passed);
        }
        let n = inst.comodules[1].flip_side().unwrap();
        let probe = trifunctor_probe(&inst.comodules[0], &n, &inst.space).unwrap();
        assert!(probe.consistent(), "{}", inst.label());
    }
}
