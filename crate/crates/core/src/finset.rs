//! Finite sets with canonical (sorted) labels, total maps between them, and
//! the finite (co)limits the Sets half is built from.
//!
//! Composite labels are fixed: pairs are `(a,b)`, tuples `(a,b,c)`, coproduct
//! tags `L:a` / `R:b`, functions `{a->x,b->y}`. Every construction sorts its
//! output labels, so equal inputs give bit-identical results.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::budget::{power, Budget};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct FinSet {
    elements: Vec<String>,
}

impl FinSet {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut elements: Vec<String> = labels.into_iter().map(Into::into).collect();
        elements.sort();
        if let Some(w) = elements.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateLabel(w[0].clone()));
        }
        Ok(FinSet { elements })
    }

    /// Builds a set from labels already known to be distinct.
    pub(crate) fn from_distinct(mut elements: Vec<String>) -> Self {
        elements.sort();
        debug_assert!(elements.windows(2).all(|w| w[0] != w[1]));
        FinSet { elements }
    }

    pub fn empty() -> Self {
        FinSet { elements: vec![] }
    }

    /// The monoidal unit `{*}`.
    pub fn point() -> Self {
        FinSet {
            elements: vec!["*".to_string()],
        }
    }

    /// `{1, ..., n}`.
    pub fn numbered(n: usize) -> Self {
        FinSet::from_distinct((1..=n).map(|i| i.to_string()).collect())
    }

    /// `{prefix1, ..., prefixn}`.
    pub fn labelled(prefix: &str, n: usize) -> Self {
        FinSet::from_distinct((1..=n).map(|i| format!("{prefix}{i}")).collect())
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn label(&self, i: usize) -> &str {
        &self.elements[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.elements
            .binary_search_by(|e| e.as_str().cmp(label))
            .ok()
    }

    pub fn require(&self, label: &str) -> Result<usize> {
        self.index_of(label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn contains(&self, label: &str) -> bool {
        self.index_of(label).is_some()
    }

    /// The subset on the given element indices.
    pub fn subset(&self, indices: impl IntoIterator<Item = usize>) -> FinSet {
        let mut idx: Vec<usize> = indices.into_iter().collect();
        idx.sort_unstable();
        idx.dedup();
        FinSet {
            elements: idx.into_iter().map(|i| self.elements[i].clone()).collect(),
        }
    }
}

impl fmt::Display for FinSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.elements.join(","))
    }
}

/// A total map between finite sets, stored as an index table.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FinMap {
    dom: FinSet,
    cod: FinSet,
    table: Vec<usize>,
}

impl FinMap {
    pub fn from_indices(dom: FinSet, cod: FinSet, table: Vec<usize>) -> Result<Self> {
        if table.len() != dom.len() {
            return Err(Error::MismatchedSignature(format!(
                "table has {} entries for a domain of size {}",
                table.len(),
                dom.len()
            )));
        }
        if let Some(&bad) = table.iter().find(|&&t| t >= cod.len()) {
            return Err(Error::MismatchedSignature(format!(
                "image index {bad} outside codomain of size {}",
                cod.len()
            )));
        }
        Ok(FinMap { dom, cod, table })
    }

    pub fn from_pairs<'a, I>(dom: FinSet, cod: FinSet, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a str, &'a str)>,
    {
        let mut table = vec![usize::MAX; dom.len()];
        for (x, y) in pairs {
            let i = dom.require(x)?;
            table[i] = cod.require(y)?;
        }
        if let Some(i) = table.iter().position(|&t| t == usize::MAX) {
            return Err(Error::NotTotal(dom.label(i).to_string()));
        }
        Ok(FinMap { dom, cod, table })
    }

    /// Builds a map from a label-valued function.
    pub fn from_fn(dom: FinSet, cod: FinSet, f: impl Fn(&str) -> String) -> Result<Self> {
        let table = dom
            .elements()
            .iter()
            .map(|x| cod.require(&f(x)))
            .collect::<Result<Vec<_>>>()?;
        Ok(FinMap { dom, cod, table })
    }

    pub fn identity(a: &FinSet) -> Self {
        FinMap {
            dom: a.clone(),
            cod: a.clone(),
            table: (0..a.len()).collect(),
        }
    }

    pub fn constant(dom: &FinSet, cod: &FinSet, value: &str) -> Result<Self> {
        let v = cod.require(value)?;
        Ok(FinMap {
            dom: dom.clone(),
            cod: cod.clone(),
            table: vec![v; dom.len()],
        })
    }

    /// The unique map to the point.
    pub fn terminal(dom: &FinSet) -> Self {
        FinMap {
            dom: dom.clone(),
            cod: FinSet::point(),
            table: vec![0; dom.len()],
        }
    }

    pub fn dom(&self) -> &FinSet {
        &self.dom
    }

    pub fn cod(&self) -> &FinSet {
        &self.cod
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn apply(&self, i: usize) -> usize {
        self.table[i]
    }

    pub fn apply_label(&self, x: &str) -> Option<&str> {
        self.dom.index_of(x).map(|i| self.cod.label(self.table[i]))
    }

    /// `self ∘ inner`.
    pub fn after(&self, inner: &FinMap) -> Result<FinMap> {
        if inner.cod != self.dom {
            return Err(Error::MismatchedSignature(format!(
                "cannot compose: {} is not {}",
                inner.cod, self.dom
            )));
        }
        Ok(FinMap {
            dom: inner.dom.clone(),
            cod: self.cod.clone(),
            table: inner.table.iter().map(|&i| self.table[i]).collect(),
        })
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.cod.len()];
        self.table.iter().all(|&t| !std::mem::replace(&mut seen[t], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.cod.len()];
        for &t in &self.table {
            seen[t] = true;
        }
        seen.into_iter().all(|s| s)
    }

    pub fn is_bijective(&self) -> bool {
        self.dom.len() == self.cod.len() && self.is_injective()
    }

    /// Image indices in the codomain, ascending.
    pub fn image(&self) -> Vec<usize> {
        let mut img = self.table.clone();
        img.sort_unstable();
        img.dedup();
        img
    }

    pub fn preimage(&self, y: usize) -> Vec<usize> {
        (0..self.dom.len()).filter(|&i| self.table[i] == y).collect()
    }

    /// Inverse of a bijection.
    pub fn inverse(&self) -> Option<FinMap> {
        if !self.is_bijective() {
            return None;
        }
        let mut table = vec![0; self.cod.len()];
        for (i, &t) in self.table.iter().enumerate() {
            table[t] = i;
        }
        Some(FinMap {
            dom: self.cod.clone(),
            cod: self.dom.clone(),
            table,
        })
    }

    /// Label-level view, in domain order.
    pub fn pairs(&self) -> impl Iterator<Item = (&str, &str)> + '_ {
        self.table
            .iter()
            .enumerate()
            .map(|(i, &t)| (self.dom.label(i), self.cod.label(t)))
    }
}

impl fmt::Display for FinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.pairs().map(|(x, y)| format!("{x}->{y}")).collect();
        write!(f, "{{{}}}", body.join(","))
    }
}

fn tuple_label<'a>(parts: impl IntoIterator<Item = &'a str>) -> String {
    let parts: Vec<&str> = parts.into_iter().collect();
    format!("({})", parts.join(","))
}

pub fn pair_label(a: &str, b: &str) -> String {
    tuple_label([a, b])
}

/// Indexed cartesian product `∏ factors` with tuple labels `(a,b,...)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductSet {
    factors: Vec<FinSet>,
    set: FinSet,
    tuples: Vec<Vec<usize>>,
    lookup: HashMap<Vec<usize>, usize>,
}

impl ProductSet {
    pub fn new(factors: Vec<FinSet>) -> Self {
        let total: usize = factors.iter().map(FinSet::len).product();
        let mut raw: Vec<(String, Vec<usize>)> = Vec::with_capacity(total);
        for mut code in 0..total {
            let mut coords = vec![0usize; factors.len()];
            for (k, f) in factors.iter().enumerate().rev() {
                coords[k] = code % f.len();
                code /= f.len();
            }
            let label = tuple_label(coords.iter().zip(&factors).map(|(&i, f)| f.label(i)));
            raw.push((label, coords));
        }
        raw.sort_by(|a, b| a.0.cmp(&b.0));
        let lookup = raw
            .iter()
            .enumerate()
            .map(|(i, (_, t))| (t.clone(), i))
            .collect();
        let (labels, tuples): (Vec<String>, Vec<Vec<usize>>) = raw.into_iter().unzip();
        ProductSet {
            factors,
            set: FinSet { elements: labels },
            tuples,
            lookup,
        }
    }

    pub fn set(&self) -> &FinSet {
        &self.set
    }

    pub fn factors(&self) -> &[FinSet] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        self.set.is_empty()
    }

    /// Coordinates of the `i`-th element.
    pub fn tuple(&self, i: usize) -> &[usize] {
        &self.tuples[i]
    }

    pub fn index_of_tuple(&self, coords: &[usize]) -> Option<usize> {
        self.lookup.get(coords).copied()
    }

    pub fn projection(&self, k: usize) -> FinMap {
        FinMap {
            dom: self.set.clone(),
            cod: self.factors[k].clone(),
            table: self.tuples.iter().map(|t| t[k]).collect(),
        }
    }
}

/// Binary product with its projections.
#[derive(Debug, Clone)]
pub struct Product {
    pub set: FinSet,
    pub p1: FinMap,
    pub p2: FinMap,
    inner: ProductSet,
}

impl Product {
    pub fn pair_index(&self, a: usize, b: usize) -> usize {
        self.inner.index_of_tuple(&[a, b]).expect("coordinates in range")
    }

    pub fn coords(&self, i: usize) -> (usize, usize) {
        let t = self.inner.tuple(i);
        (t[0], t[1])
    }

    /// The mediating map `x ↦ (f(x), g(x))`.
    pub fn pairing(&self, f: &FinMap, g: &FinMap) -> Result<FinMap> {
        if f.dom != g.dom || f.cod != self.p1.cod || g.cod != self.p2.cod {
            return Err(Error::MismatchedSignature("pairing legs".into()));
        }
        let table = (0..f.dom.len())
            .map(|i| self.pair_index(f.table[i], g.table[i]))
            .collect();
        FinMap::from_indices(f.dom.clone(), self.set.clone(), table)
    }
}

pub fn product(a: &FinSet, b: &FinSet) -> Product {
    let inner = ProductSet::new(vec![a.clone(), b.clone()]);
    Product {
        set: inner.set().clone(),
        p1: inner.projection(0),
        p2: inner.projection(1),
        inner,
    }
}

#[derive(Debug, Clone)]
pub struct Coproduct {
    pub set: FinSet,
    pub i1: FinMap,
    pub i2: FinMap,
}

impl Coproduct {
    /// The mediating map out of the coproduct.
    pub fn copairing(&self, f: &FinMap, g: &FinMap) -> Result<FinMap> {
        if f.cod != g.cod || f.dom != self.i1.dom || g.dom != self.i2.dom {
            return Err(Error::MismatchedSignature("copairing legs".into()));
        }
        let mut table = vec![0; self.set.len()];
        for i in 0..f.dom.len() {
            table[self.i1.table[i]] = f.table[i];
        }
        for j in 0..g.dom.len() {
            table[self.i2.table[j]] = g.table[j];
        }
        FinMap::from_indices(self.set.clone(), f.cod.clone(), table)
    }
}

pub fn coproduct(a: &FinSet, b: &FinSet) -> Coproduct {
    let tagged_a: Vec<String> = a.elements().iter().map(|x| format!("L:{x}")).collect();
    let tagged_b: Vec<String> = b.elements().iter().map(|y| format!("R:{y}")).collect();
    let set = FinSet::from_distinct(tagged_a.iter().chain(&tagged_b).cloned().collect());
    let i1 = FinMap {
        dom: a.clone(),
        cod: set.clone(),
        table: tagged_a.iter().map(|l| set.index_of(l).unwrap()).collect(),
    };
    let i2 = FinMap {
        dom: b.clone(),
        cod: set.clone(),
        table: tagged_b.iter().map(|l| set.index_of(l).unwrap()).collect(),
    };
    Coproduct { set, i1, i2 }
}

/// An equaliser presented as a subset with its inclusion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubPresentation {
    pub ambient: FinSet,
    pub members: FinSet,
    pub include: FinMap,
}

impl SubPresentation {
    pub fn from_indices(ambient: &FinSet, members: Vec<usize>) -> Self {
        let members_set = ambient.subset(members.iter().copied());
        let table = members_set
            .elements()
            .iter()
            .map(|l| ambient.index_of(l).unwrap())
            .collect();
        SubPresentation {
            ambient: ambient.clone(),
            include: FinMap {
                dom: members_set.clone(),
                cod: ambient.clone(),
                table,
            },
            members: members_set,
        }
    }

    /// Factors `h: Z → ambient` through the inclusion, if it lands inside.
    pub fn factor(&self, h: &FinMap) -> Option<FinMap> {
        if h.cod != self.ambient {
            return None;
        }
        let table = h
            .table
            .iter()
            .map(|&t| self.members.index_of(self.ambient.label(t)))
            .collect::<Option<Vec<_>>>()?;
        Some(FinMap {
            dom: h.dom.clone(),
            cod: self.members.clone(),
            table,
        })
    }
}

/// A coequaliser presented as a partition with projection and canonical
/// representatives (least label per class). Classes are labelled by their
/// representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotPresentation {
    pub ambient: FinSet,
    pub quotient: FinSet,
    pub classes: Vec<Vec<usize>>,
    pub project: FinMap,
    pub reps: Vec<usize>,
}

impl QuotPresentation {
    /// Canonical presentation of the partition where `key(i) == key(j)` iff
    /// `i` and `j` are identified.
    pub fn from_keys<K: std::hash::Hash + Eq>(ambient: &FinSet, key: impl Fn(usize) -> K) -> Self {
        let mut first: HashMap<K, usize> = HashMap::new();
        let mut class_rep = vec![0; ambient.len()];
        for i in 0..ambient.len() {
            let r = *first.entry(key(i)).or_insert(i);
            class_rep[i] = r;
        }
        Self::from_rep_table(ambient, &class_rep)
    }

    /// `class_rep[i]` is any canonical member of the class of `i`, shared by
    /// the whole class.
    fn from_rep_table(ambient: &FinSet, class_rep: &[usize]) -> Self {
        let mut reps: Vec<usize> = Vec::new();
        let mut class_index: HashMap<usize, usize> = HashMap::new();
        let mut classes: Vec<Vec<usize>> = Vec::new();
        // ambient is sorted, so the first index seen per class is its least label
        for (i, &r) in class_rep.iter().enumerate() {
            let k = *class_index.entry(r).or_insert_with(|| {
                reps.push(i);
                classes.push(Vec::new());
                reps.len() - 1
            });
            classes[k].push(i);
        }
        // class order = representative order, which is label order
        let quotient = FinSet {
            elements: reps.iter().map(|&r| ambient.label(r).to_string()).collect(),
        };
        let mut table = vec![0; ambient.len()];
        for (k, class) in classes.iter().enumerate() {
            for &i in class {
                table[i] = k;
            }
        }
        QuotPresentation {
            ambient: ambient.clone(),
            project: FinMap {
                dom: ambient.clone(),
                cod: quotient.clone(),
                table,
            },
            quotient,
            classes,
            reps,
        }
    }

    /// The induced map out of the quotient, when `h` is constant on classes.
    pub fn induce(&self, h: &FinMap) -> Option<FinMap> {
        if h.dom != self.ambient {
            return None;
        }
        for class in &self.classes {
            let v = h.table[class[0]];
            if class.iter().any(|&i| h.table[i] != v) {
                return None;
            }
        }
        Some(FinMap {
            dom: self.quotient.clone(),
            cod: h.cod.clone(),
            table: self.reps.iter().map(|&r| h.table[r]).collect(),
        })
    }
}

fn check_parallel(f: &FinMap, g: &FinMap) -> Result<()> {
    if f.dom != g.dom || f.cod != g.cod {
        return Err(Error::MismatchedSignature(format!(
            "{} -> {} versus {} -> {}",
            f.dom, f.cod, g.dom, g.cod
        )));
    }
    Ok(())
}

pub fn equalizer(f: &FinMap, g: &FinMap) -> Result<SubPresentation> {
    check_parallel(f, g)?;
    let members = (0..f.dom.len()).filter(|&i| f.table[i] == g.table[i]).collect();
    Ok(SubPresentation::from_indices(&f.dom, members))
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    // the smaller root wins, so every root is the least index of its class
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

/// Coequaliser of `f, g: A ⇉ B`: the partition of `B` generated by
/// `f(x) ~ g(x)`.
pub fn coequalizer(f: &FinMap, g: &FinMap) -> Result<QuotPresentation> {
    check_parallel(f, g)?;
    Ok(coequalize_pairs(
        &f.cod,
        f.table.iter().copied().zip(g.table.iter().copied()),
    ))
}

/// Quotient of `ambient` by the equivalence relation generated by `pairs`.
pub fn coequalize_pairs(
    ambient: &FinSet,
    pairs: impl IntoIterator<Item = (usize, usize)>,
) -> QuotPresentation {
    let mut uf = UnionFind::new(ambient.len());
    for (a, b) in pairs {
        uf.union(a, b);
    }
    let reps: Vec<usize> = (0..ambient.len()).map(|i| uf.find(i)).collect();
    QuotPresentation::from_rep_table(ambient, &reps)
}

/// The internal hom `[A, B]` of `Sets`: all total maps, labelled
/// `{a->b,...}`, with an exact encode/decode against [`FinMap`].
#[derive(Debug, Clone)]
pub struct FunctionSpace {
    dom: FinSet,
    cod: FinSet,
    set: FinSet,
    tables: Vec<Vec<usize>>,
    lookup: HashMap<Vec<usize>, usize>,
}

impl FunctionSpace {
    pub fn new(dom: &FinSet, cod: &FinSet) -> Self {
        Self::within(dom, cod, &Budget::new(u64::MAX)).expect("unbounded budget")
    }

    pub fn within(dom: &FinSet, cod: &FinSet, budget: &Budget) -> Result<Self> {
        budget.admit(power(cod.len(), dom.len()))?;
        let mut raw: Vec<(String, Vec<usize>)> = Vec::new();
        for table in MapTables::new(dom.len(), cod.len()) {
            let body: Vec<String> = table
                .iter()
                .enumerate()
                .map(|(i, &t)| format!("{}->{}", dom.label(i), cod.label(t)))
                .collect();
            raw.push((format!("{{{}}}", body.join(",")), table));
        }
        raw.sort_by(|a, b| a.0.cmp(&b.0));
        let lookup = raw
            .iter()
            .enumerate()
            .map(|(i, (_, t))| (t.clone(), i))
            .collect();
        let (labels, tables): (Vec<String>, Vec<Vec<usize>>) = raw.into_iter().unzip();
        Ok(FunctionSpace {
            dom: dom.clone(),
            cod: cod.clone(),
            set: FinSet { elements: labels },
            tables,
            lookup,
        })
    }

    pub fn set(&self) -> &FinSet {
        &self.set
    }

    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        self.set.is_empty()
    }

    pub fn encode(&self, f: &FinMap) -> Result<usize> {
        if f.dom != self.dom || f.cod != self.cod {
            return Err(Error::MismatchedSignature(
                "map does not belong to this function space".into(),
            ));
        }
        Ok(self.lookup[&f.table])
    }

    pub fn index_of_table(&self, table: &[usize]) -> Option<usize> {
        self.lookup.get(table).copied()
    }

    pub fn decode(&self, i: usize) -> FinMap {
        FinMap {
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            table: self.tables[i].clone(),
        }
    }

    pub fn table(&self, i: usize) -> &[usize] {
        &self.tables[i]
    }
}

pub fn function_space(a: &FinSet, b: &FinSet) -> FunctionSpace {
    FunctionSpace::new(a, b)
}

/// Odometer over all index tables `dom_len → cod_len`, first coordinate
/// slowest.
#[derive(Debug, Clone)]
pub struct MapTables {
    current: Vec<usize>,
    cod_len: usize,
    done: bool,
}

impl MapTables {
    pub fn new(dom_len: usize, cod_len: usize) -> Self {
        MapTables {
            current: vec![0; dom_len],
            cod_len,
            done: cod_len == 0 && dom_len > 0,
        }
    }
}

impl Iterator for MapTables {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        let mut k = self.current.len();
        loop {
            if k == 0 {
                self.done = true;
                break;
            }
            k -= 1;
            self.current[k] += 1;
            if self.current[k] < self.cod_len {
                break;
            }
            self.current[k] = 0;
        }
        Some(out)
    }
}

/// A set of maps `dom → cod` listed in canonical (label) order: the
/// members of a hom object, kept without materialising the ambient
/// function space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomSet {
    pub dom: FinSet,
    pub cod: FinSet,
    pub maps: Vec<FinMap>,
}

impl HomSet {
    pub fn new(dom: &FinSet, cod: &FinSet, mut maps: Vec<FinMap>) -> Self {
        maps.sort_by_cached_key(|m| m.to_string());
        maps.dedup();
        HomSet {
            dom: dom.clone(),
            cod: cod.clone(),
            maps,
        }
    }

    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    pub fn contains(&self, f: &FinMap) -> bool {
        self.maps.iter().any(|m| m == f)
    }

    /// The same members as a subset of the full function space.
    pub fn to_presentation(&self, budget: &Budget) -> Result<SubPresentation> {
        let space = FunctionSpace::within(&self.dom, &self.cod, budget)?;
        let members = self
            .maps
            .iter()
            .map(|m| space.encode(m))
            .collect::<Result<Vec<_>>>()?;
        Ok(SubPresentation::from_indices(space.set(), members))
    }
}

#[derive(Debug, Clone)]
pub struct Pullback {
    pub set: FinSet,
    pub p1: FinMap,
    pub p2: FinMap,
}

impl Pullback {
    /// The mediating map for a commuting square `f∘u = g∘v`.
    pub fn mediate(&self, u: &FinMap, v: &FinMap) -> Option<FinMap> {
        if u.dom != v.dom {
            return None;
        }
        let table = (0..u.dom.len())
            .map(|i| {
                let label = pair_label(
                    self.p1.cod.label(u.table[i]),
                    self.p2.cod.label(v.table[i]),
                );
                self.set.index_of(&label)
            })
            .collect::<Option<Vec<_>>>()?;
        Some(FinMap {
            dom: u.dom.clone(),
            cod: self.set.clone(),
            table,
        })
    }
}

/// `A ×_C B = {(a,b) | f(a) = g(b)}`.
pub fn pullback(f: &FinMap, g: &FinMap) -> Result<Pullback> {
    if f.cod != g.cod {
        return Err(Error::MismatchedSignature(format!(
            "pullback legs land in {} and {}",
            f.cod, g.cod
        )));
    }
    let mut raw = Vec::new();
    for a in 0..f.dom.len() {
        for b in 0..g.dom.len() {
            if f.table[a] == g.table[b] {
                raw.push((pair_label(f.dom.label(a), g.dom.label(b)), a, b));
            }
        }
    }
    raw.sort();
    let set = FinSet {
        elements: raw.iter().map(|r| r.0.clone()).collect(),
    };
    Ok(Pullback {
        p1: FinMap {
            dom: set.clone(),
            cod: f.dom.clone(),
            table: raw.iter().map(|r| r.1).collect(),
        },
        p2: FinMap {
            dom: set.clone(),
            cod: g.dom.clone(),
            table: raw.iter().map(|r| r.2).collect(),
        },
        set,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(labels: &[&str]) -> FinSet {
        FinSet::new(labels.iter().copied()).unwrap()
    }

    fn map(dom: &FinSet, cod: &FinSet, pairs: &[(&str, &str)]) -> FinMap {
        FinMap::from_pairs(dom.clone(), cod.clone(), pairs.iter().copied()).unwrap()
    }

    #[test]
    fn labels_are_sorted_and_distinct() {
        assert_eq!(set(&["b", "a"]).elements(), &["a", "b"]);
        assert_eq!(
            FinSet::new(["a", "a"]),
            Err(Error::DuplicateLabel("a".into()))
        );
    }

    #[test]
    fn product_examples() {
        let p = product(&set(&["1", "2"]), &set(&["r"]));
        assert_eq!(p.set.elements(), &["(1,r)", "(2,r)"]);
        let p = product(&set(&["1", "2"]), &set(&["r", "s"]));
        assert_eq!(p.set.elements(), &["(1,r)", "(1,s)", "(2,r)", "(2,s)"]);
        assert_eq!(p.p1.table(), &[0, 0, 1, 1]);
        assert_eq!(p.p2.table(), &[0, 1, 0, 1]);
        assert!(product(&FinSet::empty(), &set(&["r", "s"])).set.is_empty());
    }

    #[test]
    fn coproduct_examples() {
        let c = coproduct(&set(&["1"]), &set(&["1"]));
        assert_eq!(c.set.elements(), &["L:1", "R:1"]);
        let c = coproduct(&FinSet::empty(), &set(&["x", "y"]));
        assert_eq!(c.set.elements(), &["R:x", "R:y"]);
        assert!(c.i2.is_bijective());
        assert_eq!(coproduct(&set(&["a", "b"]), &set(&["c"])).set.len(), 3);
    }

    #[test]
    fn equalizer_examples() {
        let a = set(&["a", "b", "c"]);
        let id = FinMap::identity(&a);
        assert_eq!(equalizer(&id, &id).unwrap().members, a);
        let c = FinMap::constant(&a, &a, "c").unwrap();
        assert_eq!(equalizer(&id, &c).unwrap().members.elements(), &["c"]);

        let d = set(&["1", "2", "3"]);
        let xy = set(&["x", "y"]);
        let f = map(&d, &xy, &[("1", "x"), ("2", "x"), ("3", "y")]);
        let g = map(&d, &xy, &[("1", "x"), ("2", "y"), ("3", "y")]);
        assert_eq!(equalizer(&f, &g).unwrap().members.elements(), &["1", "3"]);
        assert!(matches!(
            equalizer(&f, &id),
            Err(Error::MismatchedSignature(_))
        ));
    }

    #[test]
    fn coequalizer_examples() {
        let ab = set(&["a", "b"]);
        let id = FinMap::identity(&ab);
        assert_eq!(coequalizer(&id, &id).unwrap().quotient.len(), 2);

        let pt = FinSet::point();
        let pa = FinMap::constant(&pt, &ab, "a").unwrap();
        let pb = FinMap::constant(&pt, &ab, "b").unwrap();
        let q = coequalizer(&pa, &pb).unwrap();
        assert_eq!(q.classes, vec![vec![0, 1]]);

        let abcd = set(&["a", "b", "c", "d"]);
        let two = set(&["1", "2"]);
        let f = map(&two, &abcd, &[("1", "a"), ("2", "b")]);
        let g = map(&two, &abcd, &[("1", "b"), ("2", "c")]);
        let q = coequalizer(&f, &g).unwrap();
        assert_eq!(q.classes, vec![vec![0, 1, 2], vec![3]]);
        assert_eq!(q.quotient.elements(), &["a", "d"]);
        assert!(q.project.is_surjective());
        for (k, &r) in q.reps.iter().enumerate() {
            assert_eq!(q.project.apply(r), k);
        }
    }

    #[test]
    fn function_space_examples() {
        let b = set(&["a", "b"]);
        assert_eq!(function_space(&FinSet::empty(), &b).len(), 1);
        assert_eq!(function_space(&set(&["1", "2"]), &b).len(), 4);
        let fs = function_space(&set(&["1", "2", "3"]), &b);
        assert_eq!(fs.len(), 8);
        for i in 0..fs.len() {
            assert_eq!(fs.encode(&fs.decode(i)).unwrap(), i);
        }
        assert_eq!(function_space(&set(&["1"]), &FinSet::empty()).len(), 0);
    }

    #[test]
    fn pullback_examples() {
        let c = set(&["1", "2"]);
        let a = set(&["a", "b", "c"]);
        let f = map(&a, &c, &[("a", "1"), ("b", "2"), ("c", "2")]);
        let pb = pullback(&f, &FinMap::identity(&c)).unwrap();
        assert_eq!(pb.set.len(), 3);
        assert!(pb.p1.is_bijective());

        let k1 = FinMap::constant(&a, &c, "1").unwrap();
        let k2 = FinMap::constant(&a, &c, "2").unwrap();
        assert!(pullback(&k1, &k2).unwrap().set.is_empty());

        let uv = set(&["u", "v"]);
        let g = map(&uv, &c, &[("u", "1"), ("v", "2")]);
        let pb = pullback(&f, &g).unwrap();
        assert_eq!(pb.set.elements(), &["(a,u)", "(b,v)", "(c,v)"]);
    }

    #[test]
    fn map_tables_count() {
        assert_eq!(MapTables::new(0, 0).count(), 1);
        assert_eq!(MapTables::new(2, 0).count(), 0);
        assert_eq!(MapTables::new(3, 2).count(), 8);
    }

    #[test]
    fn product_set_zero_factors_is_point() {
        let p = ProductSet::new(vec![]);
        assert_eq!(p.set().elements(), &["()"]);
        let p = ProductSet::new(vec![set(&["a"]), FinSet::empty()]);
        assert!(p.is_empty());
    }
}
