//! The declaration document format and its translation to library objects.
//!
//! Every declaration is a JSON object tagged by `"kind"`. Scalars are
//! strings (`"3/4"`, `"2 mod 5"`; bare integers are accepted on input),
//! matrices are row-major arrays of rows, and graded spaces are maps from
//! degree to dimension with the basis ordered degree-major.

use std::collections::BTreeMap;

use cocontra::budget::Budget;
use cocontra::coalg::catalogue::{grouplike, incidence_chain, k_plus_dual_numbers};
use cocontra::coalg::change::CoalgebraMorphism;
use cocontra::coalg::{Coalgebra, Side, VComodule, VContramodule};
use cocontra::exactlin::{Field, GradedVect, LinMap, Matrix, Scalar};
use cocontra::finset::{FinMap, FinSet};
use cocontra::polycoalg::{self, PolyCoalgebra};
use cocontra::set_comodule::SetComodule;
use cocontra::set_contramodule::{product_contra, ContraTable};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// A scalar entry: canonical form is a string, integers are accepted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarDoc {
    Text(String),
    Int(i64),
}

impl ScalarDoc {
    fn parse(&self, field: Field) -> Result<Scalar, CliError> {
        match self {
            ScalarDoc::Text(t) => Ok(field.parse_scalar(t)?),
            ScalarDoc::Int(n) => Ok(field.int(*n)),
        }
    }
}

impl From<&Scalar> for ScalarDoc {
    fn from(s: &Scalar) -> Self {
        ScalarDoc::Text(s.to_string())
    }
}

pub type MatrixDoc = Vec<Vec<ScalarDoc>>;

/// A graded space: `{"0": 2, "1": 1}`, or a per-basis-vector degree list
/// when the basis is not degree-sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Grading {
    Dims(BTreeMap<i32, usize>),
    Degrees(Vec<i32>),
}

// Written by hand: derived untagged and internally tagged enums buffer their
// input, and the buffered form cannot read integer map keys.
impl<'de> Deserialize<'de> for Grading {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> serde::de::Visitor<'de> for V {
            type Value = Grading;

            fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
                f.write_str("a degree → dimension map or a list of degrees")
            }

            fn visit_map<A: serde::de::MapAccess<'de>>(self, mut a: A) -> Result<Grading, A::Error> {
                let mut dims = BTreeMap::new();
                while let Some((k, v)) = a.next_entry::<String, usize>()? {
                    let deg: i32 = k
                        .parse()
                        .map_err(|_| serde::de::Error::custom(format!("degree `{k}` is not an integer")))?;
                    if dims.insert(deg, v).is_some() {
                        return Err(serde::de::Error::custom(format!("degree {deg} given twice")));
                    }
                }
                Ok(Grading::Dims(dims))
            }

            fn visit_seq<A: serde::de::SeqAccess<'de>>(self, mut a: A) -> Result<Grading, A::Error> {
                let mut degrees = Vec::new();
                while let Some(d) = a.next_element::<i32>()? {
                    degrees.push(d);
                }
                Ok(Grading::Degrees(degrees))
            }
        }
        d.deserialize_any(V)
    }
}

impl Grading {
    pub fn space(&self) -> GradedVect {
        match self {
            Grading::Dims(d) => GradedVect::from_dims(d),
            Grading::Degrees(d) => GradedVect::new(d.clone()),
        }
    }
}

impl From<&GradedVect> for Grading {
    fn from(v: &GradedVect) -> Self {
        if v.is_degree_sorted() {
            Grading::Dims(v.dims())
        } else {
            Grading::Degrees(v.degrees().to_vec())
        }
    }
}

/// A set given by name or inline as its element list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SetRef {
    Name(String),
    Inline(Vec<String>),
}

/// A linear object given by name or as an inline declaration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Ref {
    Name(String),
    Inline(Box<Decl>),
}

fn is_false(b: &bool) -> bool {
    !*b
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Decl {
    Set {
        #[serde(default, skip_serializing_if = "String::is_empty")]
        name: String,
        elements: Vec<String>,
    },
    Map {
        #[serde(default, skip_serializing_if = "String::is_empty")]
        name: String,
        dom: SetRef,
        cod: SetRef,
        pairs: BTreeMap<String, String>,
    },
    /// A set over `base`; the carrier is the key set of `phi`.
    SetComodule {
        #[serde(default, skip_serializing_if = "String::is_empty")]
        name: String,
        base: SetRef,
        phi: BTreeMap<String, String>,
    },
    /// Either product form (`fibers`, one element list per base element) or
    /// extensional (`carrier` and `theta`, the value on every `β: C → X` in
    /// lexicographic order of value tables, first base element slowest).
    SetContramodule {
        #[serde(default, skip_serializing_if = "String::is_empty")]
        name: String,
        base: SetRef,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        fibers: Option<BTreeMap<String, Vec<String>>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        carrier: Option<Vec<String>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        theta: Option<Vec<String>>,
    },
    Space {
        #[serde(default, skip_serializing_if = "String::is_empty")]
        name: String,
        dims: Grading,
    },
    /// A preset (`trivial`, `grouplike` with `size`, `polynomial` with
    /// `truncation` and `degree`, `incidence`, `k_plus_dual_numbers`) or
    /// explicit `dims`, `delta` (`C → C ⊗ C`) and `counit` (a row).
    Coalgebra {
        #[serde(default, skip_serializing_if = "String::is_empty")]
        name: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        field: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        preset: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        size: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        truncation: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        degree: Option<i32>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        dims: Option<Grading>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        delta: Option<MatrixDoc>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        counit: Option<Vec<ScalarDoc>>,
    },
    /// Cofree on `cofree`, the regular comodule, or explicit `dims` and
    /// `coaction` (`X → X ⊗ C`, or `X → C ⊗ X` for `side: "left"`).
    Comodule {
        #[serde(default, skip_serializing_if = "String::is_empty")]
        name: String,
        coalgebra: Ref,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        side: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        cofree: Option<Grading>,
        #[serde(default, skip_serializing_if = "is_false")]
        regular: bool,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        dims: Option<Grading>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        coaction: Option<MatrixDoc>,
    },
    /// Free on `free`, or explicit `dims` and `structure` (`[C, P] → P`).
    Contramodule {
        #[serde(default, skip_serializing_if = "String::is_empty")]
        name: String,
        coalgebra: Ref,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        free: Option<Grading>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        dims: Option<Grading>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        structure: Option<MatrixDoc>,
    },
    /// `preset: "counit"` (to `k`), `"identity"`, or an explicit `matrix`.
    CoalgebraMorphism {
        #[serde(default, skip_serializing_if = "String::is_empty")]
        name: String,
        source: Ref,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        target: Option<Ref>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        preset: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        matrix: Option<MatrixDoc>,
    },
    /// A family `ρ_0, …, ρ_N` of operators on `dims` over the truncated
    /// polynomial coalgebra, read as a comodule or a contramodule.
    PolyFamily {
        #[serde(default, skip_serializing_if = "String::is_empty")]
        name: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        field: Option<String>,
        truncation: usize,
        degree: i32,
        structure: String,
        dims: Grading,
        operators: Vec<MatrixDoc>,
    },
}

impl Decl {
    pub fn name(&self) -> &str {
        match self {
            Decl::Set { name, .. }
            | Decl::Map { name, .. }
            | Decl::SetComodule { name, .. }
            | Decl::SetContramodule { name, .. }
            | Decl::Space { name, .. }
            | Decl::Coalgebra { name, .. }
            | Decl::Comodule { name, .. }
            | Decl::Contramodule { name, .. }
            | Decl::CoalgebraMorphism { name, .. }
            | Decl::PolyFamily { name, .. } => name,
        }
    }

    pub fn set_name(&mut self, new: String) {
        match self {
            Decl::Set { name, .. }
            | Decl::Map { name, .. }
            | Decl::SetComodule { name, .. }
            | Decl::SetContramodule { name, .. }
            | Decl::Space { name, .. }
            | Decl::Coalgebra { name, .. }
            | Decl::Comodule { name, .. }
            | Decl::Contramodule { name, .. }
            | Decl::CoalgebraMorphism { name, .. }
            | Decl::PolyFamily { name, .. } => *name = new,
        }
    }

    /// Names of earlier declarations this one refers to.
    pub fn references(&self) -> Vec<String> {
        fn set(r: &SetRef, out: &mut Vec<String>) {
            if let SetRef::Name(n) = r {
                out.push(n.clone());
            }
        }
        fn lin(r: &Ref, out: &mut Vec<String>) {
            match r {
                Ref::Name(n) => out.push(n.clone()),
                Ref::Inline(d) => out.extend(d.references()),
            }
        }
        let mut out = Vec::new();
        match self {
            Decl::Map { dom, cod, .. } => {
                set(dom, &mut out);
                set(cod, &mut out);
            }
            Decl::SetComodule { base, .. } | Decl::SetContramodule { base, .. } => {
                set(base, &mut out)
            }
            Decl::Comodule { coalgebra, .. } | Decl::Contramodule { coalgebra, .. } => {
                lin(coalgebra, &mut out)
            }
            Decl::CoalgebraMorphism { source, target, .. } => {
                lin(source, &mut out);
                if let Some(t) = target {
                    lin(t, &mut out);
                }
            }
            _ => {}
        }
        out
    }
}

/// A polynomial family with its coalgebra and the structure built from it.
#[derive(Debug, Clone)]
pub struct PolyObject {
    pub coalgebra: PolyCoalgebra,
    pub operators: Vec<LinMap>,
    pub space: GradedVect,
    pub as_comodule: bool,
}

#[derive(Debug, Clone)]
pub enum Object {
    Set(FinSet),
    Map(FinMap),
    SetComodule(SetComodule),
    SetContramodule(ContraTable),
    Space(GradedVect),
    Coalgebra(Coalgebra),
    Comodule(VComodule),
    Contramodule(VContramodule),
    Morphism(CoalgebraMorphism),
    Poly(PolyObject),
}

impl Object {
    pub fn kind(&self) -> &'static str {
        match self {
            Object::Set(_) => "set",
            Object::Map(_) => "map",
            Object::SetComodule(_) => "set_comodule",
            Object::SetContramodule(_) => "set_contramodule",
            Object::Space(_) => "space",
            Object::Coalgebra(_) => "coalgebra",
            Object::Comodule(_) => "comodule",
            Object::Contramodule(_) => "contramodule",
            Object::Morphism(_) => "coalgebra_morphism",
            Object::Poly(_) => "poly_family",
        }
    }

    /// Whether working with the object involves exhaustive enumeration.
    pub fn is_set_side(&self) -> bool {
        matches!(
            self,
            Object::Set(_) | Object::Map(_) | Object::SetComodule(_) | Object::SetContramodule(_)
        )
    }
}

/// The namespace of built objects, in declaration order.
#[derive(Debug, Clone)]
pub struct Env {
    pub field: Field,
    pub budget: Budget,
    objects: BTreeMap<String, Object>,
    /// Declarations whose structure failed validation, kept for `check`.
    invalid: BTreeMap<String, String>,
}

impl Env {
    pub fn new(field: Field, budget: Budget) -> Self {
        Env {
            field,
            budget,
            objects: BTreeMap::new(),
            invalid: BTreeMap::new(),
        }
    }

    pub fn get(&self, name: &str) -> Result<&Object, CliError> {
        if let Some(why) = self.invalid.get(name) {
            return Err(CliError::Invalid(format!("`{name}` is not valid: {why}")));
        }
        self.objects
            .get(name)
            .ok_or_else(|| CliError::Validation(format!("unknown name `{name}`")))
    }

    pub fn contains(&self, name: &str) -> bool {
        self.objects.contains_key(name) || self.invalid.contains_key(name)
    }

    pub fn invalid_reason(&self, name: &str) -> Option<&str> {
        self.invalid.get(name).map(String::as_str)
    }

    /// Builds `decl` and stores it under its name. Structural failures
    /// (axioms that do not hold) are remembered rather than returned, so a
    /// `check` job can report them with a witness.
    pub fn declare(&mut self, decl: &Decl) -> Result<(), CliError> {
        match self.build(decl) {
            Ok(obj) => {
                self.objects.insert(decl.name().to_string(), obj);
                Ok(())
            }
            Err(CliError::Invalid(why)) => {
                self.invalid.insert(decl.name().to_string(), why);
                Ok(())
            }
            Err(e) => Err(e),
        }
    }

    fn set(&self, r: &SetRef) -> Result<FinSet, CliError> {
        match r {
            SetRef::Inline(elements) => Ok(FinSet::new(elements.iter().cloned())?),
            SetRef::Name(n) => match self.get(n)? {
                Object::Set(s) => Ok(s.clone()),
                other => Err(kind_error(n, "set", other)),
            },
        }
    }

    fn resolve(&self, r: &Ref) -> Result<Object, CliError> {
        match r {
            Ref::Name(n) => self.get(n).cloned(),
            Ref::Inline(d) => self.build(d),
        }
    }

    fn coalgebra(&self, r: &Ref) -> Result<Coalgebra, CliError> {
        match self.resolve(r)? {
            Object::Coalgebra(c) => Ok(c),
            Object::Poly(p) => Ok(p.coalgebra.coalgebra().clone()),
            other => Err(kind_error(&ref_label(r), "coalgebra", &other)),
        }
    }

    fn field_of(&self, text: &Option<String>) -> Result<Field, CliError> {
        match text {
            Some(t) => Ok(Field::parse(t)?),
            None => Ok(self.field),
        }
    }

    pub fn build(&self, decl: &Decl) -> Result<Object, CliError> {
        match decl {
            Decl::Set { elements, .. } => Ok(Object::Set(FinSet::new(elements.iter().cloned())?)),
            Decl::Map { dom, cod, pairs, .. } => {
                let (dom, cod) = (self.set(dom)?, self.set(cod)?);
                let map = FinMap::from_pairs(dom, cod, pairs.iter().map(|(a, b)| (a.as_str(), b.as_str())))?;
                Ok(Object::Map(map))
            }
            Decl::SetComodule { base, phi, .. } => {
                let base = self.set(base)?;
                let carrier = FinSet::new(phi.keys().cloned())?;
                let m = SetComodule::from_pairs(
                    &carrier,
                    &base,
                    phi.iter().map(|(a, b)| (a.as_str(), b.as_str())),
                )?;
                Ok(Object::SetComodule(m))
            }
            Decl::SetContramodule {
                base,
                fibers,
                carrier,
                theta,
                ..
            } => {
                let base = self.set(base)?;
                match (fibers, carrier, theta) {
                    (Some(fibers), None, None) => {
                        let mut ordered = Vec::with_capacity(base.len());
                        for a in base.elements() {
                            let fiber = fibers.get(a).ok_or_else(|| {
                                CliError::Validation(format!("no fiber over `{a}`"))
                            })?;
                            ordered.push(FinSet::new(fiber.iter().cloned())?);
                        }
                        if fibers.len() != base.len() {
                            return Err(CliError::Validation("fibers over unknown base elements".into()));
                        }
                        Ok(Object::SetContramodule(product_contra(&base, &ordered)?))
                    }
                    (None, Some(carrier), Some(theta)) => {
                        let carrier = FinSet::new(carrier.iter().cloned())?;
                        let table = theta
                            .iter()
                            .map(|l| carrier.require(l))
                            .collect::<Result<Vec<_>, _>>()?;
                        let t = ContraTable::extensional(&carrier, &base, table)?;
                        let report = cocontra::set_contramodule::validate(&t, &self.budget)?;
                        if !report.passed {
                            return Err(CliError::Invalid(report.witness.unwrap_or_default()));
                        }
                        Ok(Object::SetContramodule(t))
                    }
                    _ => Err(CliError::Validation(
                        "set_contramodule needs either `fibers` or `carrier` with `theta`".into(),
                    )),
                }
            }
            Decl::Space { dims, .. } => Ok(Object::Space(dims.space())),
            Decl::Coalgebra {
                field,
                preset,
                size,
                truncation,
                degree,
                dims,
                delta,
                counit,
                ..
            } => {
                let field = self.field_of(field)?;
                let c = match (preset.as_deref(), dims, delta, counit) {
                    (Some(p), None, None, None) => match p {
                        "trivial" => Coalgebra::trivial(field),
                        "grouplike" => grouplike(field, size.ok_or_else(|| missing("size"))?),
                        "polynomial" => polycoalg::build(
                            truncation.ok_or_else(|| missing("truncation"))?,
                            degree.unwrap_or(0),
                            field,
                        )
                        .coalgebra()
                        .clone(),
                        "incidence" => incidence_chain(field),
                        "k_plus_dual_numbers" => k_plus_dual_numbers(field),
                        other => {
                            return Err(CliError::Validation(format!("unknown coalgebra preset `{other}`")))
                        }
                    },
                    (None, Some(dims), Some(delta), Some(counit)) => {
                        let space = dims.space();
                        let delta = matrix(field, delta, space.dim() * space.dim(), space.dim())?;
                        let eps = matrix(field, &vec![counit.clone()], 1, space.dim())?;
                        let c = Coalgebra::new(
                            space.clone(),
                            LinMap::new(space.clone(), space.tensor(&space), 0, delta)?,
                            LinMap::new(space.clone(), GradedVect::unit(), 0, eps)?,
                        )?;
                        let report = c.validate();
                        if !report.passed {
                            return Err(CliError::Invalid(report.witness.unwrap_or_default()));
                        }
                        c
                    }
                    _ => {
                        return Err(CliError::Validation(
                            "coalgebra needs a `preset` or all of `dims`, `delta`, `counit`".into(),
                        ))
                    }
                };
                Ok(Object::Coalgebra(c))
            }
            Decl::Comodule {
                coalgebra,
                side,
                cofree,
                regular,
                dims,
                coaction,
                ..
            } => {
                let c = self.coalgebra(coalgebra)?;
                let side = match side.as_deref() {
                    None | Some("right") => Side::Right,
                    Some("left") => Side::Left,
                    Some(other) => return Err(CliError::Validation(format!("unknown side `{other}`"))),
                };
                let m = match (cofree, *regular, dims, coaction) {
                    (Some(x), false, None, None) => {
                        let m = VComodule::cofree(&x.space(), &c);
                        if side == Side::Left {
                            m.flip_side()?
                        } else {
                            m
                        }
                    }
                    (None, true, None, None) => VComodule::regular(&c, side),
                    (None, false, Some(dims), Some(coaction)) => {
                        let x = dims.space();
                        let cod = match side {
                            Side::Right => x.tensor(c.space()),
                            Side::Left => c.space().tensor(&x),
                        };
                        let rho = matrix(c.field(), coaction, cod.dim(), x.dim())?;
                        let m = VComodule::new(&c, side, LinMap::new(x, cod, 0, rho)?)?;
                        let report = m.validate();
                        if !report.passed {
                            return Err(CliError::Invalid(report.witness.unwrap_or_default()));
                        }
                        m
                    }
                    _ => {
                        return Err(CliError::Validation(
                            "comodule needs `cofree`, `regular`, or `dims` with `coaction`".into(),
                        ))
                    }
                };
                Ok(Object::Comodule(m))
            }
            Decl::Contramodule {
                coalgebra,
                free,
                dims,
                structure,
                ..
            } => {
                let c = self.coalgebra(coalgebra)?;
                let p = match (free, dims, structure) {
                    (Some(x), None, None) => VContramodule::free(&x.space(), &c)?,
                    (None, Some(dims), Some(structure)) => {
                        let y = dims.space();
                        let hom = c.space().internal_hom(&y);
                        let theta = matrix(c.field(), structure, y.dim(), hom.dim())?;
                        let p = VContramodule::new(&c, LinMap::new(hom, y, 0, theta)?)?;
                        let report = p.validate();
                        if !report.passed {
                            return Err(CliError::Invalid(report.witness.unwrap_or_default()));
                        }
                        p
                    }
                    _ => {
                        return Err(CliError::Validation(
                            "contramodule needs `free`, or `dims` with `structure`".into(),
                        ))
                    }
                };
                Ok(Object::Contramodule(p))
            }
            Decl::CoalgebraMorphism {
                source,
                target,
                preset,
                matrix: m,
                ..
            } => {
                let s = self.coalgebra(source)?;
                let f = match (preset.as_deref(), target, m) {
                    (Some("counit"), None, None) => CoalgebraMorphism::counit(&s),
                    (Some("identity"), None, None) => CoalgebraMorphism::identity(&s),
                    (None, Some(t), Some(m)) => {
                        let t = self.coalgebra(t)?;
                        let mat = matrix(s.field(), m, t.dim(), s.dim())?;
                        let map = LinMap::new(s.space().clone(), t.space().clone(), 0, mat)?;
                        CoalgebraMorphism::new(&s, &t, map)
                            .map_err(|e| CliError::Invalid(e.to_string()))?
                    }
                    _ => {
                        return Err(CliError::Validation(
                            "coalgebra_morphism needs a `preset` or `target` with `matrix`".into(),
                        ))
                    }
                };
                Ok(Object::Morphism(f))
            }
            Decl::PolyFamily {
                field,
                truncation,
                degree,
                structure,
                dims,
                operators,
                ..
            } => {
                let field = self.field_of(field)?;
                let pc = polycoalg::build(*truncation, *degree, field);
                let v = dims.space();
                let ops = operators
                    .iter()
                    .enumerate()
                    .map(|(k, m)| {
                        let mat = matrix(field, m, v.dim(), v.dim())?;
                        Ok(LinMap::new(v.clone(), v.clone(), -(k as i32) * degree, mat)?)
                    })
                    .collect::<Result<Vec<_>, CliError>>()?;
                let as_comodule = match structure.as_str() {
                    "comodule" => true,
                    "contramodule" => false,
                    other => {
                        return Err(CliError::Validation(format!(
                            "poly_family structure must be comodule or contramodule, got `{other}`"
                        )))
                    }
                };
                Ok(Object::Poly(PolyObject {
                    coalgebra: pc,
                    operators: ops,
                    space: v,
                    as_comodule,
                }))
            }
        }
    }
}

fn missing(what: &str) -> CliError {
    CliError::Validation(format!("missing `{what}`"))
}

fn ref_label(r: &Ref) -> String {
    match r {
        Ref::Name(n) => n.clone(),
        Ref::Inline(_) => "<inline>".into(),
    }
}

pub fn kind_error(name: &str, expected: &str, got: &Object) -> CliError {
    CliError::Validation(format!("`{name}` is a {}, expected a {expected}", got.kind()))
}

fn matrix(field: Field, doc: &MatrixDoc, rows: usize, cols: usize) -> Result<Matrix, CliError> {
    if doc.len() != rows || doc.iter().any(|r| r.len() != cols) {
        return Err(CliError::Validation(format!("expected a {rows}×{cols} matrix")));
    }
    let rows = doc
        .iter()
        .map(|r| r.iter().map(|s| s.parse(field)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Matrix::from_rows_with_cols(field, rows, cols)?)
}

pub fn matrix_doc(m: &Matrix) -> MatrixDoc {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(ScalarDoc::from).collect())
        .collect()
}

/// A linear map as `{dom, cod, degree, matrix}`.
pub fn linmap_value(f: &LinMap) -> serde_json::Value {
    serde_json::json!({
        "dom": Grading::from(f.dom()),
        "cod": Grading::from(f.cod()),
        "degree": f.degree(),
        "matrix": matrix_doc(f.matrix()),
    })
}

pub fn map_value(f: &FinMap) -> serde_json::Value {
    let pairs: BTreeMap<&str, &str> = f.pairs().collect();
    serde_json::json!(pairs)
}

pub fn set_comodule_decl(name: &str, m: &SetComodule) -> Decl {
    Decl::SetComodule {
        name: name.into(),
        base: SetRef::Inline(m.base().elements().to_vec()),
        phi: m
            .phi()
            .pairs()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect(),
    }
}

pub fn set_contramodule_decl(name: &str, t: &ContraTable, budget: &Budget) -> Result<Decl, CliError> {
    let base = SetRef::Inline(t.base().elements().to_vec());
    Ok(match t.fibers() {
        Some(fibers) => Decl::SetContramodule {
            name: name.into(),
            base,
            fibers: Some(
                t.base()
                    .elements()
                    .iter()
                    .cloned()
                    .zip(fibers.iter().map(|f| f.elements().to_vec()))
                    .collect(),
            ),
            carrier: None,
            theta: None,
        },
        None => Decl::SetContramodule {
            name: name.into(),
            base,
            fibers: None,
            carrier: Some(t.carrier().elements().to_vec()),
            theta: Some(
                t.theta_table(budget)?
                    .into_iter()
                    .map(|i| t.carrier().label(i).to_string())
                    .collect(),
            ),
        },
    })
}

pub fn coalgebra_decl(name: &str, c: &Coalgebra) -> Decl {
    Decl::Coalgebra {
        name: name.into(),
        field: Some(c.field().to_string()),
        preset: None,
        size: None,
        truncation: None,
        degree: None,
        dims: Some(Grading::from(c.space())),
        delta: Some(matrix_doc(c.delta().matrix())),
        counit: Some(c.eps().matrix().row(0).iter().map(ScalarDoc::from).collect()),
    }
}

/// The coalgebra is written inline so the declaration stands alone.
pub fn comodule_decl(name: &str, m: &VComodule) -> Decl {
    Decl::Comodule {
        name: name.into(),
        coalgebra: Ref::Inline(Box::new(coalgebra_decl("", m.coalgebra()))),
        side: match m.side() {
            Side::Right => None,
            Side::Left => Some("left".into()),
        },
        cofree: None,
        regular: false,
        dims: Some(Grading::from(m.space())),
        coaction: Some(matrix_doc(m.rho().matrix())),
    }
}

pub fn contramodule_decl(name: &str, p: &VContramodule) -> Decl {
    Decl::Contramodule {
        name: name.into(),
        coalgebra: Ref::Inline(Box::new(coalgebra_decl("", p.coalgebra()))),
        free: None,
        dims: Some(Grading::from(p.space())),
        structure: Some(matrix_doc(p.theta().matrix())),
    }
}
