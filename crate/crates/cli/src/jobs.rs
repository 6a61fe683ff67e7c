//! Job validation and execution: one function per command.

use std::collections::{BTreeMap, BTreeSet};

use cocontra::budget::{power, Budget};
use cocontra::coalg::bridge::bridge_certificate;
use cocontra::coalg::catalogue::{family, Instance};
use cocontra::coalg::change::{
    coinduce_contramodule, coinduction_adjunction_report, cohom, cohom_unit_report, cotensor,
    cotensor_unit_report, induce_comodule, induction_adjunction_report, restrict_comodule,
    restrict_contramodule, trifunctor_probe, CoalgebraMorphism,
};
use cocontra::coalg::functors::{
    adjunction_certificate, collapse_report, counit as lin_counit, functor_l, functor_r,
    kleisli_certificate,
};
use cocontra::coalg::hom::{comodule_hom_object, contra_hom_object, HomObject};
use cocontra::coalg::{Coalgebra, Side, VComodule, VContramodule};
use cocontra::exactlin::{Field, GradedVect, LinSub};
use cocontra::finset::{FinMap, FinSet};
use cocontra::oracle::{direct_comodule_hom, direct_contra_hom, ordered_product_structures};
use cocontra::polycoalg;
use cocontra::report::Report;
use cocontra::set_comodule::{
    counital_comultiplications, hom_over, hom_over_generic, induce_along, restrict_along,
    unique_comonoid_certificate,
};
use cocontra::set_contramodule::{
    self, contra_hom, contra_hom_generic, decompose, enumerate_all, induce_contra,
    induction_adjunction_certificate, noncocontinuity_demo, restrict_contra, restrict_forms_agree,
};
use cocontra::set_correspondence::{
    self as corr, equivalence_certificate, l_set, l_set_generic, lr_explicit, lr_matches_generic,
    naturality_certificate, r_set, CertBounds,
};
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::error::CliError;
use crate::format::{
    comodule_decl, contramodule_decl, kind_error, linmap_value, map_value, set_comodule_decl,
    set_contramodule_decl, Decl, Env, Grading, Object,
};
use crate::manifest::Job;

pub const COMMANDS: &[&str] = &[
    "check",
    "r",
    "l",
    "lr",
    "adjoint",
    "decompose",
    "enumerate",
    "hom",
    "cotensor",
    "cohom",
    "induce",
    "restrict",
    "kleisli",
    "bridge",
    "probe",
    "demo-noncocontinuous",
];

/// Argument keys whose values name declarations.
const REF_KEYS: &[&str] = &[
    "target",
    "comodule",
    "contramodule",
    "source",
    "right",
    "left",
    "morphism",
    "object",
    "space",
    "coalgebra",
    "comodules",
    "contramodules",
    "base",
    "carrier",
];

const SET_CERTIFICATES: &[&str] = &[
    "unique-comonoid",
    "contramodule-decomposition",
    "sets-equivalence",
    "sets-naturality",
    "induction-adjunction",
];

const RANDOM_CERTIFICATES: &[&str] = &["linear-family", "collapse-family"];

const OTHER_CERTIFICATES: &[&str] = &["polynomial"];

/// Positional argument keys of each command, used by the subcommand surface.
pub fn positional_keys(command: &str) -> &'static [&'static str] {
    match command {
        "check" => &["target"],
        "r" | "lr" => &["comodule"],
        "l" | "decompose" => &["contramodule"],
        "adjoint" => &["contramodule", "comodule"],
        "enumerate" => &["base"],
        "hom" => &["source", "target"],
        "cotensor" => &["right", "left"],
        "probe" => &["right", "left", "space"],
        "cohom" => &["comodule", "contramodule"],
        "induce" | "restrict" => &["morphism", "object"],
        "kleisli" => &["space", "coalgebra"],
        "bridge" => &["coalgebra"],
        _ => &[],
    }
}

/// Declaration names in an argument value. `base` and `carrier` also
/// accept inline element lists, so only a plain string names a set there.
fn ref_names<'a>(key: &str, v: &'a Value) -> Vec<&'a str> {
    match v {
        Value::String(s) => vec![s.as_str()],
        Value::Array(items) if key != "base" && key != "carrier" => {
            items.iter().filter_map(Value::as_str).collect()
        }
        _ => Vec::new(),
    }
}

fn is_set_decl(d: &Decl) -> bool {
    matches!(
        d,
        Decl::Set { .. } | Decl::Map { .. } | Decl::SetComodule { .. } | Decl::SetContramodule { .. }
    )
}

fn certificate(job: &Job) -> Option<&str> {
    job.args.get("certificate").and_then(Value::as_str)
}

/// Whether the job enumerates and therefore needs an explicit budget.
pub fn is_enumerative(job: &Job, decls: &[Decl]) -> bool {
    if matches!(job.command.as_str(), "enumerate" | "demo-noncocontinuous") {
        return true;
    }
    if certificate(job).is_some_and(|c| SET_CERTIFICATES.contains(&c)) {
        return true;
    }
    REF_KEYS.iter().filter_map(|k| Some((*k, job.args.get(*k)?))).any(|(k, v)| {
        let inline_set = v
            .get("kind")
            .and_then(Value::as_str)
            .is_some_and(|k| k.starts_with("set") || k == "map");
        inline_set
            || ref_names(k, v)
                .iter()
                .any(|n| decls.iter().any(|d| d.name() == *n && is_set_decl(d)))
    })
}

pub fn is_randomized(job: &Job) -> bool {
    certificate(job).is_some_and(|c| RANDOM_CERTIFICATES.contains(&c))
}

pub fn validate_job(
    job: &Job,
    names: &BTreeSet<&str>,
    decls: &[Decl],
    global_budget: Option<u64>,
    global_seed: Option<u64>,
) -> Result<(), CliError> {
    if !COMMANDS.contains(&job.command.as_str()) {
        return Err(CliError::UnknownJob(format!("{} (job `{}`)", job.command, job.id)));
    }
    for key in REF_KEYS {
        if let Some(v) = job.args.get(*key) {
            for n in ref_names(key, v) {
                if !names.contains(n) {
                    return Err(CliError::Validation(format!(
                        "job `{}`: `{key}` refers to undeclared `{n}`",
                        job.id
                    )));
                }
            }
        }
    }
    if job.command == "check" {
        match (job.args.get("target"), certificate(job)) {
            (Some(_), None) => {}
            (None, Some(c))
                if SET_CERTIFICATES.contains(&c)
                    || RANDOM_CERTIFICATES.contains(&c)
                    || OTHER_CERTIFICATES.contains(&c) => {}
            (None, Some(c)) => {
                return Err(CliError::UnknownJob(format!("certificate `{c}` (job `{}`)", job.id)))
            }
            _ => {
                return Err(CliError::Validation(format!(
                    "job `{}`: check needs exactly one of `target` and `certificate`",
                    job.id
                )))
            }
        }
    }
    if is_enumerative(job, decls) && job.budget.is_none() && global_budget.is_none() {
        return Err(CliError::Validation(format!(
            "job `{}` enumerates and needs a budget",
            job.id
        )));
    }
    if is_randomized(job) && job.seed.is_none() && global_seed.is_none() {
        return Err(CliError::Validation(format!(
            "job `{}` is randomized and needs a seed",
            job.id
        )));
    }
    Ok(())
}

/// Per-job settings after flags and job fields are combined.
#[derive(Debug, Clone)]
pub struct Ctx {
    pub budget: Budget,
    pub seed: Option<u64>,
    pub oracle: bool,
}

#[derive(Debug, Clone, Default)]
pub struct Outcome {
    pub passed: bool,
    pub counts: BTreeMap<String, u64>,
    pub witness: Option<String>,
    pub notes: Vec<String>,
    pub result: Option<Value>,
}

impl Outcome {
    fn pass() -> Self {
        Outcome {
            passed: true,
            ..Outcome::default()
        }
    }

    fn fail(&mut self, witness: impl Into<String>) {
        self.passed = false;
        if self.witness.is_none() {
            self.witness = Some(witness.into());
        }
    }

    fn count(&mut self, key: &str, n: impl TryInto<u64>) {
        self.counts.insert(key.into(), n.try_into().unwrap_or(u64::MAX));
    }

    fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    /// Folds a certificate in, adding its case count under `checked`.
    fn absorb(&mut self, r: Report) {
        *self.counts.entry("checked".into()).or_insert(0) += r.checked;
        if !r.passed {
            self.fail(format!("{}: {}", r.check, r.witness.unwrap_or_default()));
        }
        for n in r.notes {
            if !self.notes.contains(&n) {
                self.notes.push(n);
            }
        }
    }

    fn from_report(r: Report) -> Self {
        let mut o = Outcome::pass();
        o.absorb(r);
        o
    }

    /// An oracle comparison; mismatches fail the job.
    fn oracle(&mut self, what: &str, agrees: bool) {
        *self.counts.entry("oracle_checks".into()).or_insert(0) += 1;
        if !agrees {
            self.fail(format!("oracle disagrees: {what}"));
        }
    }
}

struct Args<'a> {
    map: &'a Map<String, Value>,
    env: &'a Env,
}

impl Args<'_> {
    fn value(&self, key: &str) -> Result<&Value, CliError> {
        self.map
            .get(key)
            .ok_or_else(|| CliError::Validation(format!("missing argument `{key}`")))
    }

    fn object_of(&self, v: &Value) -> Result<Object, CliError> {
        match v {
            Value::String(name) => self.env.get(name).cloned(),
            Value::Object(_) => {
                let decl: Decl = serde_json::from_value(v.clone())
                    .map_err(|e| CliError::Validation(format!("inline declaration: {e}")))?;
                self.env.build(&decl)
            }
            _ => Err(CliError::Validation("expected a name or a declaration".into())),
        }
    }

    fn object(&self, key: &str) -> Result<Object, CliError> {
        self.object_of(self.value(key)?)
    }

    fn objects(&self, key: &str) -> Result<Vec<Object>, CliError> {
        match self.map.get(key) {
            None => Ok(Vec::new()),
            Some(Value::Array(items)) => items.iter().map(|v| self.object_of(v)).collect(),
            Some(v) => Ok(vec![self.object_of(v)?]),
        }
    }

    fn usize(&self, key: &str) -> Result<usize, CliError> {
        self.value(key)?
            .as_u64()
            .map(|n| n as usize)
            .ok_or_else(|| CliError::Validation(format!("`{key}` must be a non-negative integer")))
    }

    fn str(&self, key: &str) -> Result<&str, CliError> {
        self.value(key)?
            .as_str()
            .ok_or_else(|| CliError::Validation(format!("`{key}` must be a string")))
    }

    fn field(&self) -> Result<Field, CliError> {
        match self.map.get("field").and_then(Value::as_str) {
            Some(f) => Ok(Field::parse(f)?),
            None => Ok(self.env.field),
        }
    }

    /// A finite set: a declared set, an inline element list, or `{key}_size`
    /// for a numbered set.
    fn set(&self, key: &str, prefix: &str) -> Result<FinSet, CliError> {
        let size_key = format!("{key}_size");
        match self.map.get(key) {
            Some(Value::Array(items)) => Ok(FinSet::new(
                items
                    .iter()
                    .map(|v| v.as_str().map(String::from).ok_or_else(|| CliError::Validation(format!("`{key}` elements must be strings"))))
                    .collect::<Result<Vec<_>, _>>()?,
            )?),
            Some(v) => match self.object_of(v)? {
                Object::Set(s) => Ok(s),
                other => Err(kind_error(key, "set", &other)),
            },
            None if self.map.contains_key(&size_key) => {
                let n = self.usize(&size_key)?;
                Ok(if prefix.is_empty() {
                    FinSet::numbered(n)
                } else {
                    FinSet::labelled(prefix, n)
                })
            }
            None => Err(CliError::Validation(format!("missing `{key}` or `{size_key}`"))),
        }
    }
}

fn coalgebra_of(obj: Object, key: &str) -> Result<Coalgebra, CliError> {
    match obj {
        Object::Coalgebra(c) => Ok(c),
        Object::Poly(p) => Ok(p.coalgebra.coalgebra().clone()),
        other => Err(kind_error(key, "coalgebra", &other)),
    }
}

fn space_of(obj: Object, key: &str) -> Result<GradedVect, CliError> {
    match obj {
        Object::Space(v) => Ok(v),
        other => Err(kind_error(key, "space", &other)),
    }
}

fn comodule_of(obj: Object, key: &str) -> Result<VComodule, CliError> {
    match obj {
        Object::Comodule(m) => Ok(m),
        Object::Poly(p) if p.as_comodule => {
            Ok(p.coalgebra.comodule_from_family(&p.space, &p.operators)?)
        }
        other => Err(kind_error(key, "comodule", &other)),
    }
}

fn contramodule_of(obj: Object, key: &str) -> Result<VContramodule, CliError> {
    match obj {
        Object::Contramodule(p) => Ok(p),
        Object::Poly(p) if !p.as_comodule => {
            Ok(p.coalgebra.contramodule_from_family(&p.space, &p.operators)?)
        }
        other => Err(kind_error(key, "contramodule", &other)),
    }
}

fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("results serialize")
}

fn subspace_value(s: &LinSub) -> Value {
    json!({
        "dim": s.dim(),
        "dims": Grading::from(&s.sub),
        "basis": linmap_value(&s.include),
    })
}

fn hom_object_value(h: &HomObject) -> Value {
    json!({
        "dim": h.dim(),
        "dims": Grading::from(&h.sub.sub),
        "morphisms": h.morphisms().iter().map(linmap_value).collect::<Vec<_>>(),
    })
}

/// Runs one command. `Err(CliError::Invalid)` means the inputs themselves
/// failed validation and becomes a failed job; other errors become job
/// errors.
pub fn execute(command: &str, args: &Map<String, Value>, env: &Env, ctx: &Ctx) -> Result<Outcome, CliError> {
    let a = Args { map: args, env };
    match command {
        "check" => check(&a, ctx),
        "r" => cmd_r(&a, ctx),
        "l" => cmd_l(&a, ctx),
        "lr" => cmd_lr(&a, ctx),
        "adjoint" => cmd_adjoint(&a, ctx),
        "decompose" => cmd_decompose(&a, ctx),
        "enumerate" => cmd_enumerate(&a, ctx),
        "hom" => cmd_hom(&a, ctx),
        "cotensor" => cmd_cotensor(&a),
        "cohom" => cmd_cohom(&a),
        "induce" => cmd_change(&a, ctx, true),
        "restrict" => cmd_change(&a, ctx, false),
        "kleisli" => {
            let x = space_of(a.object("space")?, "space")?;
            let c = coalgebra_of(a.object("coalgebra")?, "coalgebra")?;
            let mut o = Outcome::from_report(kleisli_certificate(&x, &c)?);
            o.count("dim_rtx", c.dim() * x.dim());
            Ok(o)
        }
        "bridge" => {
            let c = coalgebra_of(a.object("coalgebra")?, "coalgebra")?;
            let ms = a
                .objects("comodules")?
                .into_iter()
                .map(|o| comodule_of(o, "comodules"))
                .collect::<Result<Vec<_>, _>>()?;
            let ps = a
                .objects("contramodules")?
                .into_iter()
                .map(|o| contramodule_of(o, "contramodules"))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Outcome::from_report(bridge_certificate(&c, &ms, &ps)?))
        }
        "probe" => {
            let m = comodule_of(a.object("right")?, "right")?;
            let n = comodule_of(a.object("left")?, "left")?;
            let x = space_of(a.object("space")?, "space")?;
            let out = trifunctor_probe(&m, &n, &x)?;
            let mut o = Outcome::pass();
            if !out.consistent() {
                o.fail(format!("inconsistent probe: {out:?}"));
            }
            o.result = Some(to_value(&out));
            Ok(o)
        }
        "demo-noncocontinuous" => {
            let n = a.usize("c_size")?;
            ctx.budget.admit(power(2, n))?;
            let demo = noncocontinuity_demo(&FinSet::numbered(n))?;
            let mut o = Outcome::from_report(demo.to_report());
            o.note(format!("{} vs {}", demo.coequalizer_size, demo.image_size));
            o.count("coequalizer_size", demo.coequalizer_size);
            o.count("image_size", demo.image_size);
            Ok(o)
        }
        other => Err(CliError::UnknownJob(other.into())),
    }
}

fn check(a: &Args, ctx: &Ctx) -> Result<Outcome, CliError> {
    let Some(cert) = a.map.get("certificate").and_then(Value::as_str) else {
        return check_target(a, ctx);
    };
    let b = &ctx.budget;
    match cert {
        "unique-comonoid" => {
            let base = a.set("base", "")?;
            let n = base.len();
            b.admit(power(n * n, n))?;
            let (candidates, counital) = counital_comultiplications(&base)?;
            let mut o = Outcome::from_report(unique_comonoid_certificate(&base)?);
            o.count("candidates", candidates);
            o.count("counital", counital.len());
            Ok(o)
        }
        "contramodule-decomposition" => {
            let c = a.set("base", "")?;
            let x = a.set("carrier", "x")?;
            decomposition_certificate(&x, &c, ctx)
        }
        "sets-equivalence" | "sets-naturality" => {
            let bounds = CertBounds {
                max_carrier: a.usize("max_carrier")?,
                max_base: a.usize("max_base")?,
                max_fiber: a.usize("max_fiber")?,
            };
            let r = if cert == "sets-equivalence" {
                equivalence_certificate(bounds, b)?
            } else {
                naturality_certificate(bounds, b)?
            };
            let mut o = Outcome::from_report(r);
            if ctx.oracle {
                for m in corr::all_comodules(bounds) {
                    o.oracle("lr_explicit partition", lr_matches_generic(&m, b)?);
                }
            }
            Ok(o)
        }
        "induction-adjunction" => {
            let r = induction_adjunction_certificate(a.usize("max_base")?, a.usize("max_fiber")?, b)?;
            Ok(Outcome::from_report(r))
        }
        "linear-family" | "collapse-family" => {
            let field = a.field()?;
            let max_dim = a.usize("max_dim")?;
            let count = a.usize("count")?;
            let seed = ctx
                .seed
                .ok_or_else(|| CliError::Validation("randomized certificate needs a seed".into()))?;
            let instances = family(field, max_dim, seed, count)?;
            let mut o = Outcome::pass();
            o.count("instances", instances.len());
            for inst in &instances {
                let before = o.passed;
                if cert == "linear-family" {
                    linear_instance(&mut o, inst, ctx.oracle)?;
                } else {
                    collapse_instance(&mut o, inst)?;
                }
                if before && !o.passed {
                    let w = o.witness.take().unwrap_or_default();
                    o.witness = Some(format!("{}: {w}", inst.label()));
                }
            }
            Ok(o)
        }
        "polynomial" => {
            let field = a.field()?;
            let max_n = a.usize("max_truncation")?;
            let mut o = Outcome::pass();
            for n in 0..=max_n {
                for d in [0, 1] {
                    let pc = polycoalg::build(n, d, field);
                    o.absorb(pc.coalgebra().validate());
                    let reg = VComodule::regular(pc.coalgebra(), Side::Right);
                    let fam = pc.family_of_comodule(&reg)?;
                    *o.counts.entry("checked".into()).or_insert(0) += 1;
                    if let Some((i, j)) = pc.relation_failure(&fam) {
                        o.fail(format!("regular comodule, N = {n}, d = {d}: relation fails at ({i}, {j})"));
                    } else if pc.comodule_from_family(reg.space(), &fam)? != reg {
                        o.fail(format!("N = {n}, d = {d}: family does not rebuild the regular comodule"));
                    }
                }
            }
            Ok(o)
        }
        other => Err(CliError::UnknownJob(format!("certificate `{other}`"))),
    }
}

fn decomposition_certificate(x: &FinSet, c: &FinSet, ctx: &Ctx) -> Result<Outcome, CliError> {
    let b = &ctx.budget;
    let survivors = enumerate_all(x, c, b)?;
    let mut o = Outcome::pass();
    o.count("candidates", power(x.len(), power(x.len(), c.len()) as usize));
    o.count("survivors", survivors.len());
    for t in &survivors {
        for u in x.elements() {
            let d = decompose(t, u)?;
            *o.counts.entry("decompositions".into()).or_insert(0) += 1;
            let id = FinMap::identity(x);
            if !(d.pi.is_bijective() && d.sigma.after(&d.pi)? == id && t.is_morphism(&d.product, &d.pi)) {
                o.fail(format!("decompose at `{u}` is not an isomorphism onto a product"));
            }
        }
    }
    let expected = ordered_product_structures(x.len(), c.len(), b)?;
    o.count("product_structures", expected);
    o.oracle("survivor count versus product structures", survivors.len() as u64 == expected);
    Ok(o)
}

fn linear_instance(o: &mut Outcome, inst: &Instance, oracle: bool) -> Result<(), CliError> {
    let (ms, ps) = (&inst.comodules, &inst.contramodules);
    for m in ms {
        for n in ms {
            let h = comodule_hom_object(m, n)?;
            if oracle {
                o.oracle("comodule hom object", h.sub.same_subspace(&direct_comodule_hom(m, n)?));
            }
        }
    }
    for p in ps {
        for q in ps {
            let h = contra_hom_object(p, q)?;
            if oracle {
                o.oracle("contramodule hom object", h.sub.same_subspace(&direct_contra_hom(p, q)?));
            }
        }
    }
    for p in ps {
        for m in ms {
            o.absorb(adjunction_certificate(p, m)?);
        }
    }
    o.absorb(kleisli_certificate(&inst.space, &inst.coalgebra)?);
    for m in ms {
        o.absorb(cotensor_unit_report(m)?);
    }
    for p in ps {
        o.absorb(cohom_unit_report(p)?);
    }
    let k = Coalgebra::trivial(inst.coalgebra.field());
    let eps = CoalgebraMorphism::counit(&inst.coalgebra);
    let over_k = VContramodule::free(&inst.space, &k)?;
    for q in ps {
        o.absorb(coinduction_adjunction_report(&eps, &over_k, q)?);
        o.absorb(coinduction_adjunction_report(&inst.point, q, &VContramodule::free(&inst.space, &k)?)?);
    }
    let cofree_k = VComodule::cofree(&inst.space, &k);
    for n in ms {
        o.absorb(induction_adjunction_report(&eps, n, &cofree_k)?);
    }
    let left = ms[1].flip_side()?;
    let probe = trifunctor_probe(&ms[0], &left, &inst.space)?;
    *o.counts.entry("probes".into()).or_insert(0) += 1;
    if probe.map_is_iso {
        *o.counts.entry("probe_iso".into()).or_insert(0) += 1;
    }
    if !probe.consistent() {
        o.fail(format!("inconsistent probe: {probe:?}"));
    }
    Ok(())
}

fn collapse_instance(o: &mut Outcome, inst: &Instance) -> Result<(), CliError> {
    for p in &inst.contramodules {
        for m in &inst.comodules {
            o.absorb(collapse_report(p, m)?);
        }
    }
    o.absorb(bridge_certificate(&inst.coalgebra, &inst.comodules, &inst.contramodules)?);
    Ok(())
}

fn check_target(a: &Args, ctx: &Ctx) -> Result<Outcome, CliError> {
    let obj = match a.object("target") {
        Ok(obj) => obj,
        Err(CliError::Invalid(w)) => {
            let mut o = Outcome::pass();
            o.fail(w);
            return Ok(o);
        }
        Err(e) => return Err(e),
    };
    let mut o = match obj {
        Object::Coalgebra(c) => Outcome::from_report(c.validate()),
        Object::Comodule(m) => Outcome::from_report(m.validate()),
        Object::Contramodule(p) => Outcome::from_report(p.validate()),
        Object::SetContramodule(t) => Outcome::from_report(set_contramodule::validate(&t, &ctx.budget)?),
        Object::Poly(p) => {
            let mut o = Outcome::pass();
            o.count("checked", 1);
            if let Some((m, n)) = p.coalgebra.relation_failure(&p.operators) {
                o.fail(format!("ρ_{m}∘ρ_{n} ≠ binom({}, {n}) ρ_{}", m + n, m + n));
                return Ok(o);
            }
            if p.as_comodule {
                o.absorb(p.coalgebra.comodule_from_family(&p.space, &p.operators)?.validate());
            } else {
                o.absorb(p.coalgebra.contramodule_from_family(&p.space, &p.operators)?.validate());
            }
            if p.coalgebra.field() == Field::Rational {
                let dp = p.coalgebra.divided_power_certificate(&p.operators)?;
                o.note(if dp.passed {
                    "divided powers of ρ_1"
                } else {
                    "not divided powers of ρ_1"
                });
            }
            o
        }
        Object::SetComodule(_) | Object::Set(_) | Object::Map(_) | Object::Space(_) | Object::Morphism(_) => {
            let mut o = Outcome::pass();
            o.count("checked", 1);
            o
        }
    };
    if o.counts.get("checked") == Some(&0) {
        o.count("checked", 1);
    }
    Ok(o)
}

fn cmd_r(a: &Args, ctx: &Ctx) -> Result<Outcome, CliError> {
    let mut o = Outcome::pass();
    match a.object("comodule")? {
        Object::SetComodule(m) => {
            let t = r_set(&m);
            o.count("carrier", t.carrier().len());
            if ctx.oracle {
                let direct: u128 = m.fibers().iter().map(|f| f.len() as u128).product();
                o.oracle("number of sections", direct == t.carrier().len() as u128);
            }
            o.result = Some(to_value(&set_contramodule_decl("r", &t, &ctx.budget)?));
        }
        other => {
            let m = comodule_of(other, "comodule")?;
            let rm = functor_r(&m)?;
            o.count("dim", rm.contra.dim());
            if ctx.oracle {
                let direct = direct_comodule_hom(&VComodule::regular(m.coalgebra(), Side::Right), &m)?;
                o.oracle("dim [C, M]_T", direct.same_subspace(&rm.hom.sub));
            }
            o.result = Some(to_value(&contramodule_decl("r", &rm.contra)));
        }
    }
    Ok(o)
}

fn cmd_l(a: &Args, ctx: &Ctx) -> Result<Outcome, CliError> {
    let mut o = Outcome::pass();
    match a.object("contramodule")? {
        Object::SetContramodule(t) => {
            let l = l_set(&t, &ctx.budget)?;
            o.count("carrier", l.comodule.carrier().len());
            if ctx.oracle {
                let generic = l_set_generic(&t, &ctx.budget)?;
                o.oracle("coequaliser size", generic.quotient.len() == l.comodule.carrier().len());
            }
            o.result = Some(to_value(&set_comodule_decl("l", &l.comodule)));
        }
        other => {
            let p = contramodule_of(other, "contramodule")?;
            let lp = functor_l(&p)?;
            o.count("dim", lp.comodule.dim());
            o.result = Some(to_value(&comodule_decl("l", &lp.comodule)));
        }
    }
    Ok(o)
}

fn cmd_lr(a: &Args, ctx: &Ctx) -> Result<Outcome, CliError> {
    let mut o = Outcome::pass();
    match a.object("comodule")? {
        Object::SetComodule(m) => {
            let q = lr_explicit(&m);
            o.count("classes", q.quotient.len());
            let eps = corr::counit(&m, &ctx.budget)?;
            if !eps.is_bijective() {
                o.fail(format!("counit LR(M) → M is not bijective: {eps}"));
            }
            if ctx.oracle {
                o.oracle("partition versus generic coequaliser", lr_matches_generic(&m, &ctx.budget)?);
            }
            o.result = Some(json!({ "counit": map_value(&eps) }));
        }
        other => {
            let m = comodule_of(other, "comodule")?;
            let rm = functor_r(&m)?;
            let lrm = functor_l(&rm.contra)?;
            let eps = lin_counit(&m, &rm, &lrm)?;
            o.count("dim", lrm.comodule.dim());
            o.count("counit_rank", eps.rank());
            o.note(if eps.is_invertible() {
                "counit is invertible"
            } else {
                "counit is not invertible"
            });
            o.result = Some(json!({
                "comodule": to_value(&comodule_decl("lr", &lrm.comodule)),
                "counit": linmap_value(&eps),
            }));
        }
    }
    Ok(o)
}

fn cmd_adjoint(a: &Args, ctx: &Ctx) -> Result<Outcome, CliError> {
    match (a.object("contramodule")?, a.object("comodule")?) {
        (Object::SetContramodule(t), Object::SetComodule(m)) => {
            let b = &ctx.budget;
            let lt = l_set(&t, b)?.comodule;
            let left = hom_over(&lt, &m, b)?;
            let right = contra_hom(&t, &r_set(&m), b)?;
            let mut o = Outcome::pass();
            o.count("hom_lt_m", left.len());
            o.count("hom_t_rm", right.len());
            if left.len() != right.len() {
                o.fail(format!("|hom(LT, M)| = {} but |hom(T, RM)| = {}", left.len(), right.len()));
            }
            Ok(o)
        }
        (p, m) => {
            let p = contramodule_of(p, "contramodule")?;
            let m = comodule_of(m, "comodule")?;
            Ok(Outcome::from_report(adjunction_certificate(&p, &m)?))
        }
    }
}

fn cmd_decompose(a: &Args, ctx: &Ctx) -> Result<Outcome, CliError> {
    let t = match a.object("contramodule")? {
        Object::SetContramodule(t) => t,
        other => return Err(kind_error("contramodule", "set_contramodule", &other)),
    };
    let u = a.str("base_point")?;
    let d = decompose(&t, u)?;
    let mut o = Outcome::pass();
    o.count("fibers", d.fibers.len());
    if !(d.pi.is_bijective() && t.is_morphism(&d.product, &d.pi)) {
        o.fail(format!("π is not an isomorphism onto the product: {}", d.pi));
    }
    o.result = Some(json!({
        "product": to_value(&set_contramodule_decl("product", &d.product, &ctx.budget)?),
        "pi": map_value(&d.pi),
        "sigma": map_value(&d.sigma),
    }));
    Ok(o)
}

fn cmd_enumerate(a: &Args, ctx: &Ctx) -> Result<Outcome, CliError> {
    let c = a.set("base", "")?;
    let x = a.set("carrier", "x")?;
    let all = enumerate_all(&x, &c, &ctx.budget)?;
    let mut o = Outcome::pass();
    o.count("candidates", power(x.len(), power(x.len(), c.len()) as usize));
    o.count("survivors", all.len());
    if ctx.oracle {
        let expected = ordered_product_structures(x.len(), c.len(), &ctx.budget)?;
        o.oracle("survivor count versus product structures", all.len() as u64 == expected);
    }
    let decls = all
        .iter()
        .enumerate()
        .map(|(i, t)| Ok(to_value(&set_contramodule_decl(&format!("t{i}"), t, &ctx.budget)?)))
        .collect::<Result<Vec<_>, CliError>>()?;
    o.result = Some(Value::Array(decls));
    Ok(o)
}

fn cmd_hom(a: &Args, ctx: &Ctx) -> Result<Outcome, CliError> {
    let b = &ctx.budget;
    let mut o = Outcome::pass();
    match (a.object("source")?, a.object("target")?) {
        (Object::SetComodule(m), Object::SetComodule(n)) => {
            let h = hom_over(&m, &n, b)?;
            o.count("size", h.len());
            if ctx.oracle {
                o.oracle("generic equaliser", hom_over_generic(&m, &n, b)?.members.len() == h.len());
            }
            o.result = Some(Value::Array(h.maps.iter().map(map_value).collect()));
        }
        (Object::SetContramodule(s), Object::SetContramodule(t)) => {
            let h = contra_hom(&s, &t, b)?;
            o.count("size", h.len());
            if ctx.oracle {
                o.oracle("generic equaliser", contra_hom_generic(&s, &t, b)?.maps == h.maps);
            }
            o.result = Some(Value::Array(h.maps.iter().map(map_value).collect()));
        }
        (s, t) => {
            let comodules = matches!(s, Object::Comodule(_))
                || matches!(&s, Object::Poly(p) if p.as_comodule);
            if comodules {
                let (m, n) = (comodule_of(s, "source")?, comodule_of(t, "target")?);
                let h = comodule_hom_object(&m, &n)?;
                o.count("dim", h.dim());
                if ctx.oracle {
                    o.oracle("direct solve", h.sub.same_subspace(&direct_comodule_hom(&m, &n)?));
                }
                o.result = Some(hom_object_value(&h));
            } else {
                let (p, q) = (contramodule_of(s, "source")?, contramodule_of(t, "target")?);
                let h = contra_hom_object(&p, &q)?;
                o.count("dim", h.dim());
                if ctx.oracle {
                    o.oracle("direct solve", h.sub.same_subspace(&direct_contra_hom(&p, &q)?));
                }
                o.result = Some(hom_object_value(&h));
            }
        }
    }
    Ok(o)
}

fn cmd_cotensor(a: &Args) -> Result<Outcome, CliError> {
    let m = comodule_of(a.object("right")?, "right")?;
    let n = comodule_of(a.object("left")?, "left")?;
    let s = cotensor(&m, &n)?;
    let mut o = Outcome::pass();
    o.count("dim", s.dim());
    o.result = Some(subspace_value(&s));
    Ok(o)
}

fn cmd_cohom(a: &Args) -> Result<Outcome, CliError> {
    let m = comodule_of(a.object("comodule")?, "comodule")?;
    let p = contramodule_of(a.object("contramodule")?, "contramodule")?;
    let q = cohom(&m, &p)?;
    let mut o = Outcome::pass();
    o.count("dim", q.dim());
    o.result = Some(json!({
        "dim": q.dim(),
        "dims": Grading::from(&q.quotient),
        "projection": linmap_value(&q.project),
    }));
    Ok(o)
}

fn cmd_change(a: &Args, ctx: &Ctx, induce: bool) -> Result<Outcome, CliError> {
    let name = if induce { "ind" } else { "res" };
    let mut o = Outcome::pass();
    let result = match (a.object("morphism")?, a.object("object")?) {
        (Object::Map(f), Object::SetComodule(m)) => {
            let out = if induce { induce_along(&f, &m)? } else { restrict_along(&f, &m)? };
            o.count("carrier", out.carrier().len());
            to_value(&set_comodule_decl(name, &out))
        }
        (Object::Map(f), Object::SetContramodule(t)) => {
            let out = if induce {
                induce_contra(&f, &t)?
            } else {
                if ctx.oracle {
                    o.oracle("product and extensional forms", restrict_forms_agree(&f, &t, &ctx.budget)?.passed);
                }
                restrict_contra(&f, &t, &ctx.budget)?
            };
            o.count("carrier", out.carrier().len());
            to_value(&set_contramodule_decl(name, &out, &ctx.budget)?)
        }
        (Object::Morphism(f), obj) => {
            let comodule = matches!(obj, Object::Comodule(_))
                || matches!(&obj, Object::Poly(p) if p.as_comodule);
            if comodule {
                let m = comodule_of(obj, "object")?;
                let out = if induce { induce_comodule(&f, &m)?.0 } else { restrict_comodule(&f, &m)? };
                o.count("dim", out.dim());
                to_value(&comodule_decl(name, &out))
            } else {
                let p = contramodule_of(obj, "object")?;
                let out = if induce {
                    coinduce_contramodule(&f, &p)?.0
                } else {
                    restrict_contramodule(&f, &p)?
                };
                o.count("dim", out.dim());
                to_value(&contramodule_decl(name, &out))
            }
        }
        (f, _) => return Err(kind_error("morphism", "map or coalgebra_morphism", &f)),
    };
    o.result = Some(result);
    Ok(o)
}
