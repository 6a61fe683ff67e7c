//! The acceptance criteria, one line each. Exits non-zero if any fails.

use std::process::Command;
use std::time::{Duration, Instant};

use cocontra::budget::{power, Budget};
use cocontra::coalg::bridge::bridge_certificate;
use cocontra::coalg::catalogue::{family, random_automorphism, random_comodule, Instance};
use cocontra::coalg::change::{
    coinduction_adjunction_report, cotensor_unit_report, cohom_unit_report,
    induction_adjunction_report, trifunctor_probe, CoalgebraMorphism,
};
use cocontra::coalg::functors::{adjunction_certificate, collapse_report, functor_r, kleisli_certificate};
use cocontra::coalg::hom::{
    comodule_hom_object, contra_hom_object, enriched_composition, identity_element, HomObject,
};
use cocontra::coalg::{Coalgebra, VComodule, VContramodule};
use cocontra::exactlin::{tensor_map, Field, GradedVect, LinMap, Matrix};
use cocontra::finset::{coequalizer, product, FinMap, FinSet};
use cocontra::oracle::{all_maps, direct_comodule_hom, direct_contra_hom, ordered_product_structures};
use cocontra::polycoalg::{self, PolyCoalgebra};
use cocontra::set_comodule::counital_comultiplications;
use cocontra::set_contramodule::{decompose, enumerate_all, induction_adjunction_certificate, noncocontinuity_demo};
use cocontra::set_correspondence::{all_comodules, equivalence_certificate, lr_matches_generic, CertBounds};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

const SEEDS: u64 = 50;

fn f2_family() -> Vec<Instance> {
    family(Field::Prime(2), 3, 0, SEEDS as usize).expect("F2 family")
}

fn q_family() -> Vec<Instance> {
    family(Field::Rational, 2, 0, SEEDS as usize).expect("Q family")
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

/// Counital comultiplications on `C`, enumerated independently of the
/// library: every table `C → C × C`, kept when both projections are the
/// identity.
fn criterion_1() -> Outcome {
    let b = Budget::default();
    let mut out = Vec::new();
    for (n, known) in [(1usize, 1u64), (2, 16), (3, 729)] {
        let c = FinSet::numbered(n);
        let p = product(&c, &c);
        let mut counted = 0u64;
        let mut direct = Vec::new();
        for psi in all_maps(&c, &p.set, &b).map_err(err)? {
            counted += 1;
            if (0..n).all(|i| p.coords(psi.apply(i)) == (i, i)) {
                direct.push(psi.table().to_vec());
            }
        }
        ensure(counted == known, || format!("|C| = {n}: {counted} candidates, expected {known}"))?;
        let (candidates, valid) = counital_comultiplications(&c).map_err(err)?;
        ensure(candidates == counted, || format!("|C| = {n}: library examined {candidates}"))?;
        let diagonal: Vec<usize> = (0..n).map(|i| p.pair_index(i, i)).collect();
        ensure(valid == vec![diagonal.clone()] && direct == vec![diagonal], || {
            format!("|C| = {n}: {} counital, expected only the diagonal", valid.len())
        })?;
        out.push(format!("{candidates}/1"));
    }
    Ok(out.join(", "))
}

fn criterion_2() -> Outcome {
    let b = Budget::default();
    let c = FinSet::numbered(2);
    let mut out = Vec::new();
    for (n, known) in [(1usize, 1u128), (2, 16), (3, 19683)] {
        let x = FinSet::labelled("x", n);
        let candidates = power(n, power(n, 2) as usize);
        ensure(candidates == known, || format!("|X| = {n}: {candidates} tables"))?;
        let survivors = enumerate_all(&x, &c, &b).map_err(err)?;
        for t in &survivors {
            for u in x.elements() {
                let d = decompose(t, u).map_err(err)?;
                let iso = d.pi.is_bijective()
                    && d.sigma.after(&d.pi).map_err(err)? == FinMap::identity(&x)
                    && t.is_morphism(&d.product, &d.pi)
                    && d.product.is_morphism(t, &d.sigma);
                ensure(iso, || format!("|X| = {n}: decompose at {u} is not an isomorphism"))?;
            }
        }
        let expected = ordered_product_structures(n, 2, &b).map_err(err)?;
        ensure(survivors.len() as u64 == expected, || {
            format!("|X| = {n}: {} survivors, {expected} product structures", survivors.len())
        })?;
        out.push(format!("{known} → {expected}"));
    }
    Ok(out.join(", "))
}

fn criterion_3() -> Outcome {
    let bounds = CertBounds {
        max_carrier: 4,
        max_base: 2,
        max_fiber: 3,
    };
    let b = Budget::default();
    let r = equivalence_certificate(bounds, &b).map_err(err)?;
    ensure(r.passed, || r.witness.clone().unwrap_or_default())?;
    let mut comodules = 0;
    for m in all_comodules(bounds) {
        comodules += 1;
        ensure(lr_matches_generic(&m, &b).map_err(err)?, || {
            format!("LR partition differs from the coequaliser for {:?}", m.phi().table())
        })?;
    }
    Ok(format!("{} checks, {comodules} comodule partitions", r.checked))
}

/// `F(X) = X^C`; the coequaliser of `F(a), F(b): F(pt) ⇉ F({a,b})` and
/// `F(pt)`, both by enumerating functions.
fn criterion_4() -> Outcome {
    let b = Budget::default();
    let two = FinSet::new(["a", "b"]).map_err(err)?;
    let pt = FinSet::point();
    let mut out = Vec::new();
    for n in [2usize, 3] {
        let c = FinSet::numbered(n);
        let fx: Vec<FinMap> = all_maps(&c, &two, &b).map_err(err)?.collect();
        let fpt: Vec<FinMap> = all_maps(&c, &pt, &b).map_err(err)?.collect();
        let fxs = FinSet::labelled("f", fx.len());
        let fpts = FinSet::labelled("g", fpt.len());
        let lift = |v: &str| -> Result<FinMap, String> {
            let table = fpt
                .iter()
                .map(|g| {
                    let composed: Vec<usize> = g.table().iter().map(|_| two.index_of(v).unwrap()).collect();
                    fx.iter().position(|f| f.table() == composed.as_slice()).unwrap()
                })
                .collect();
            FinMap::from_indices(fpts.clone(), fxs.clone(), table).map_err(err)
        };
        let q = coequalizer(&lift("a")?, &lift("b")?).map_err(err)?;
        let direct = (q.quotient.len(), fpt.len());
        let demo = noncocontinuity_demo(&c).map_err(err)?;
        ensure((demo.coequalizer_size, demo.image_size) == direct, || {
            format!(
                "|C| = {n}: demo {} vs {}, enumeration {} vs {}",
                demo.coequalizer_size, demo.image_size, direct.0, direct.1
            )
        })?;
        out.push(format!("{} vs {}", direct.0, direct.1));
    }
    Ok(out.join(", "))
}

fn criterion_5() -> Outcome {
    let r = induction_adjunction_certificate(3, 2, &Budget::default()).map_err(err)?;
    ensure(r.passed, || r.witness.clone().unwrap_or_default())?;
    Ok(format!("{} checks", r.checked))
}

fn associative(a: &HomObject, b: &HomObject, c: &HomObject, ab: &HomObject, bc: &HomObject, abc: &HomObject) -> Result<bool, String> {
    let field = a.sub.field();
    let comp_ab = enriched_composition(b, a, ab).map_err(err)?;
    let comp_bc = enriched_composition(c, b, bc).map_err(err)?;
    let left = enriched_composition(c, ab, abc).map_err(err)?;
    let right = enriched_composition(bc, a, abc).map_err(err)?;
    let id_c = LinMap::identity(field, &c.sub.sub);
    let id_a = LinMap::identity(field, &a.sub.sub);
    let lhs = left.after(&tensor_map(&id_c, &comp_ab).map_err(err)?).map_err(err)?;
    let rhs = right.after(&tensor_map(&comp_bc, &id_a).map_err(err)?).map_err(err)?;
    Ok(lhs.matrix() == rhs.matrix())
}

fn unital(hxx: &HomObject) -> Result<bool, String> {
    let field = hxx.sub.field();
    let j = identity_element(hxx).map_err(err)?;
    let comp = enriched_composition(hxx, hxx, hxx).map_err(err)?;
    let id = LinMap::identity(field, &hxx.sub.sub);
    let left = comp.after(&tensor_map(&j, &id).map_err(err)?).map_err(err)?;
    let right = comp.after(&tensor_map(&id, &j).map_err(err)?).map_err(err)?;
    Ok(left.matrix() == id.matrix() && right.matrix() == id.matrix())
}

/// Closure, associativity and unitality over all index triples of a 2×2
/// grid of hom objects.
fn enriched_laws(h: &dyn Fn(usize, usize) -> Result<HomObject, String>) -> Result<bool, String> {
    let mut grid = Vec::new();
    for i in 0..2 {
        let mut row = Vec::new();
        for j in 0..2 {
            row.push(h(i, j)?);
        }
        grid.push(row);
    }
    for i in 0..2 {
        if !unital(&grid[i][i])? {
            return Ok(false);
        }
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    let (a, b, c) = (&grid[i][j], &grid[j][k], &grid[k][l]);
                    if !associative(a, b, c, &grid[i][k], &grid[j][l], &grid[i][l])? {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

fn criterion_6() -> Outcome {
    let mut subspaces = 0;
    for inst in f2_family() {
        let (ms, ps) = (&inst.comodules, &inst.contramodules);
        for m in ms {
            for n in ms {
                let h = comodule_hom_object(m, n).map_err(err)?;
                let direct = direct_comodule_hom(m, n).map_err(err)?;
                ensure(h.sub.same_subspace(&direct), || format!("{}: comodule hom object", inst.label()))?;
                subspaces += 1;
            }
        }
        for p in ps {
            for q in ps {
                let h = contra_hom_object(p, q).map_err(err)?;
                let direct = direct_contra_hom(p, q).map_err(err)?;
                ensure(h.sub.same_subspace(&direct), || format!("{}: contramodule hom object", inst.label()))?;
                subspaces += 1;
            }
        }
        let laws = enriched_laws(&|i, j| comodule_hom_object(&ms[i], &ms[j]).map_err(err))?
            && enriched_laws(&|i, j| contra_hom_object(&ps[i], &ps[j]).map_err(err))?;
        ensure(laws, || format!("{}: enriched composition laws", inst.label()))?;
    }
    Ok(format!("{SEEDS} instances, {subspaces} hom objects"))
}

fn criterion_7() -> Outcome {
    let mut checks = 0;
    for (name, fam) in [("F2", f2_family()), ("Q", q_family())] {
        for inst in &fam {
            for p in &inst.contramodules {
                for m in &inst.comodules {
                    let r = adjunction_certificate(p, m).map_err(err)?;
                    ensure(r.passed, || format!("{name} {}: {}", inst.label(), r.witness.clone().unwrap_or_default()))?;
                    checks += r.checked;
                }
            }
        }
    }
    Ok(format!("{} instances, {checks} checks", 2 * SEEDS))
}

fn criterion_8() -> Outcome {
    for inst in f2_family().iter().chain(&q_family()) {
        let (c, x) = (&inst.coalgebra, &inst.space);
        let r = kleisli_certificate(x, c).map_err(err)?;
        ensure(r.passed, || format!("{}: {}", inst.label(), r.witness.clone().unwrap_or_default()))?;
        let rtx = functor_r(&VComodule::cofree(x, c)).map_err(err)?;
        ensure(rtx.contra.dim() == c.dim() * x.dim(), || {
            format!("{}: dim R(TX) = {}, dim C · dim X = {}", inst.label(), rtx.contra.dim(), c.dim() * x.dim())
        })?;
    }
    Ok(format!("{} instances", 2 * SEEDS))
}

fn criterion_9() -> Outcome {
    let mut failing = Vec::new();
    for inst in f2_family().iter().chain(&q_family()) {
        for p in &inst.contramodules {
            for m in &inst.comodules {
                let r = collapse_report(p, m).map_err(err)?;
                if !r.passed {
                    failing.push(format!("{}: {}", inst.label(), r.witness.unwrap_or_default()));
                }
            }
        }
        let b = bridge_certificate(&inst.coalgebra, &inst.comodules, &inst.contramodules).map_err(err)?;
        if !b.passed {
            failing.push(format!("{} bridge: {}", inst.label(), b.witness.unwrap_or_default()));
        }
    }
    ensure(failing.is_empty(), || {
        format!("{} failures, first: {}", failing.len(), failing[0])
    })?;
    Ok(format!("{} instances", 2 * SEEDS))
}

fn binomial(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::from(1), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

/// `ρ_m∘ρ_n = binom(m+n, n) ρ_{m+n}`, zero past the truncation.
fn relations_hold(field: Field, family: &[LinMap]) -> bool {
    let n_max = family.len() - 1;
    (1..=n_max).all(|m| {
        (1..=n_max).all(|n| {
            let lhs = family[m].matrix().mul(family[n].matrix()).unwrap();
            if m + n <= n_max {
                lhs == family[m + n].matrix().scale(&field.big_int(&binomial(m + n, n)))
            } else {
                lhs.is_zero()
            }
        })
    })
}

/// `ρ_n = ρ_1^n / n!` and `ρ_1^{N+1} = 0`.
fn divided_powers(family: &[LinMap]) -> bool {
    let q = Field::Rational;
    let n_max = family.len() - 1;
    let dim = family[0].dom().dim();
    let mut power = Matrix::identity(q, dim);
    let mut factorial = BigInt::from(1);
    let rho1 = if n_max >= 1 { family[1].matrix().clone() } else { Matrix::zeros(q, dim, dim) };
    for k in 1..=n_max + 1 {
        power = rho1.mul(&power).unwrap();
        factorial *= BigInt::from(k);
        let scaled = power.scale(&q.big_int(&factorial).inv().unwrap());
        let expected = if k <= n_max { family[k].matrix().clone() } else { Matrix::zeros(q, dim, dim) };
        if scaled != expected {
            return false;
        }
    }
    true
}

fn random_homogeneous_map(field: Field, v: &GradedVect, degree: i32, rng: &mut ChaCha8Rng) -> LinMap {
    let mut m = Matrix::zeros(field, v.dim(), v.dim());
    for i in 0..v.dim() {
        for j in 0..v.dim() {
            if v.degree(i) - v.degree(j) == degree {
                m.set(i, j, field.int(rng.gen_range(-1..=1)));
            }
        }
    }
    LinMap::new(v.clone(), v.clone(), degree, m).unwrap()
}

/// Families on spaces of dimension at most 3: read off random comodules,
/// generated as divided powers of a random lowering map, and perturbations
/// of both.
fn families(pc: &PolyCoalgebra, rng: &mut ChaCha8Rng) -> Vec<(GradedVect, Vec<LinMap>)> {
    let field = pc.field();
    let (n, d) = (pc.truncation(), pc.degree());
    let mut out = Vec::new();
    for _ in 0..6 {
        if let Ok(m) = random_comodule(pc.coalgebra(), 3, rng) {
            out.push((m.space().clone(), pc.family_of_comodule(&m).unwrap()));
        }
    }
    for dim in 1..=3usize {
        let v = if d == 0 {
            GradedVect::ungraded(dim)
        } else {
            GradedVect::new((0..dim as i32).collect())
        };
        for _ in 0..2 {
            let mut rho1 = random_homogeneous_map(field, &v, -d, rng);
            if d == 0 {
                // strictly lower triangular, hence nilpotent
                let m = Matrix::from_fn(field, dim, dim, |i, j| {
                    if i > j { rho1.matrix().get(i, j).clone() } else { field.zero() }
                });
                rho1 = LinMap::new(v.clone(), v.clone(), 0, m).unwrap();
            }
            if let Ok(f) = pc.family_from_generator(&rho1) {
                out.push((v.clone(), f));
            }
        }
    }
    let perturbed: Vec<_> = out
        .iter()
        .filter(|_| n >= 1)
        .map(|(v, f)| {
            let mut f = f.clone();
            let k = rng.gen_range(1..=n);
            let noise = random_homogeneous_map(field, v, -(k as i32) * d, rng);
            f[k] = f[k].add(&noise).unwrap();
            let g = random_automorphism(field, v, rng);
            let ginv = g.inverse().unwrap();
            let f = f.iter().map(|r| g.after(r).unwrap().after(&ginv).unwrap()).collect();
            (v.clone(), f)
        })
        .collect();
    out.extend(perturbed);
    out
}

fn criterion_10() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let (mut accepted, mut rejected, mut dp_checked) = (0, 0, 0);
    for field in [Field::Rational, Field::Prime(2)] {
        for n in 0..=6 {
            for d in [0, 1] {
                let pc = polycoalg::build(n, d, field);
                ensure(pc.coalgebra().validate().passed, || format!("N = {n}, d = {d} over {field}"))?;
                for (v, family) in families(&pc, &mut rng) {
                    let relations = relations_hold(field, &family);
                    let co = pc.comodule_from_family(&v, &family).is_ok();
                    let contra = pc.contramodule_from_family(&v, &family).is_ok();
                    ensure(co == relations && contra == relations, || {
                        format!("N = {n}, d = {d} over {field}: relations {relations}, comodule {co}, contramodule {contra}")
                    })?;
                    if relations {
                        accepted += 1;
                    } else {
                        rejected += 1;
                    }
                    if field == Field::Rational {
                        dp_checked += 1;
                        let dp = divided_powers(&family);
                        ensure(dp == co, || format!("N = {n}, d = {d}: divided powers {dp}, accepted {co}"))?;
                        let lib = pc.divided_power_certificate(&family).map_err(err)?.passed;
                        ensure(lib == dp, || format!("N = {n}, d = {d}: certificate says {lib}"))?;
                    }
                }
            }
        }
    }
    Ok(format!("{accepted} accepted, {rejected} rejected, {dp_checked} divided-power checks"))
}

fn criterion_11() -> Outcome {
    let mut probes = 0;
    let mut isos = 0;
    for inst in f2_family().iter().chain(&q_family()) {
        let label = inst.label();
        let fail = |r: cocontra::Report| -> Result<(), String> {
            ensure(r.passed, || format!("{label}: {}: {}", r.check, r.witness.clone().unwrap_or_default()))
        };
        for m in &inst.comodules {
            fail(cotensor_unit_report(m).map_err(err)?)?;
        }
        for p in &inst.contramodules {
            fail(cohom_unit_report(p).map_err(err)?)?;
        }
        let k = Coalgebra::trivial(inst.coalgebra.field());
        let eps = CoalgebraMorphism::counit(&inst.coalgebra);
        let free_k = VContramodule::free(&inst.space, &k).map_err(err)?;
        let cofree_k = VComodule::cofree(&inst.space, &k);
        for q in &inst.contramodules {
            fail(coinduction_adjunction_report(&eps, &free_k, q).map_err(err)?)?;
            fail(coinduction_adjunction_report(&inst.point, q, &free_k).map_err(err)?)?;
        }
        for n in &inst.comodules {
            fail(induction_adjunction_report(&eps, n, &cofree_k).map_err(err)?)?;
        }
        let left = inst.comodules[1].flip_side().map_err(err)?;
        let probe = trifunctor_probe(&inst.comodules[0], &left, &inst.space).map_err(err)?;
        ensure(probe.consistent(), || format!("{label}: inconsistent probe {probe:?}"))?;
        probes += 1;
        isos += probe.map_is_iso as usize;
    }
    Ok(format!("{probes} probes, {isos} isomorphisms"))
}

fn criterion_12() -> Outcome {
    let manifest = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data/suite.json");
    let run = |extra: &[&str]| -> Result<Vec<u8>, String> {
        let out = Command::new(env!("CARGO_BIN_EXE_cocontra"))
            .args(["run", manifest, "--oracle"])
            .args(extra)
            .output()
            .map_err(err)?;
        ensure(out.status.code().is_some_and(|c| c <= 1), || {
            String::from_utf8_lossy(&out.stderr).into_owned()
        })?;
        Ok(out.stdout)
    };
    let first = run(&[])?;
    let second = run(&[])?;
    let parallel = run(&["--parallel"])?;
    ensure(first == second, || "two sequential runs differ".into())?;
    ensure(first == parallel, || "parallel run differs".into())?;
    Ok(format!("{} bytes, 3 identical runs", first.len()))
}

fn main() {
    let criteria: [(u32, &str, Option<u64>, fn() -> Outcome); 12] = [
        (1, "unique comonoid on finite sets", Some(1), criterion_1),
        (2, "contramodule decomposition", Some(30), criterion_2),
        (3, "sets equivalence", Some(60), criterion_3),
        (4, "non-cocontinuity", Some(1), criterion_4),
        (5, "set induction adjointness", Some(60), criterion_5),
        (6, "linear hom objects", Some(120), criterion_6),
        (7, "adjunction certificate", Some(120), criterion_7),
        (8, "kleisli", Some(30), criterion_8),
        (9, "finite-dimensional collapse", None, criterion_9),
        (10, "polynomial coalgebra", Some(30), criterion_10),
        (11, "change of coalgebra", Some(120), criterion_11),
        (12, "determinism", None, criterion_12),
    ];
    let mut failed = 0;
    for (n, title, limit, run) in criteria {
        let started = Instant::now();
        let outcome = run();
        let elapsed = started.elapsed();
        let limit = limit.map(Duration::from_secs);
        let in_time = limit.is_none_or(|l| elapsed < l);
        let bound = limit.map(|l| format!(" < {} s", l.as_secs())).unwrap_or_default();
        let (status, detail) = match (&outcome, in_time) {
            (Ok(d), true) => ("PASS", d.clone()),
            (Ok(d), false) => ("FAIL", format!("{d}; over the time limit")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!(
            "criterion {n:>2} {status} {title} [{:.2} s{bound}]: {detail}",
            elapsed.as_secs_f64()
        );
    }
    println!("{} of 12 criteria pass", 12 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
