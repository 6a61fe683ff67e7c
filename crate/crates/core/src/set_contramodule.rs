//! Contramodules over a finite set `C`: a carrier `X` with `θ: X^C → X`
//! satisfying contraunitality and the row-diagonal identity.
//!
//! Functions `β: C → X` are encoded as mixed-radix codes with the first base
//! element most significant, so the code order is the lexicographic order of
//! value tables.

use rayon::prelude::*;

use crate::budget::{power, Budget};
use crate::error::{Error, Result};
use crate::finset::{coequalizer, FinMap, FinSet, FunctionSpace, HomSet, MapTables, ProductSet};
use crate::report::Report;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Form {
    /// `θ` listed on every code of `X^C`.
    Extensional(Vec<usize>),
    /// Carrier `∏ V_a`, `θ(β)(a) = β(a)(a)`.
    Product(ProductSet),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContraTable {
    base: FinSet,
    carrier: FinSet,
    form: Form,
}

pub(crate) fn code_of(beta: &[usize], radix: usize) -> usize {
    beta.iter().fold(0, |acc, &b| acc * radix + b)
}

fn decode_into(mut code: usize, radix: usize, out: &mut [usize]) {
    for slot in out.iter_mut().rev() {
        *slot = code % radix;
        code /= radix;
    }
}

impl ContraTable {
    /// An extensional table; axioms are not checked here (see [`validate`]).
    pub fn extensional(carrier: &FinSet, base: &FinSet, theta: Vec<usize>) -> Result<Self> {
        let expected = power(carrier.len(), base.len());
        if theta.len() as u128 != expected {
            return Err(Error::Shape(format!(
                "theta has {} entries, expected |X|^|C| = {expected}",
                theta.len()
            )));
        }
        if let Some(bad) = theta.iter().find(|&&t| t >= carrier.len()) {
            return Err(Error::Shape(format!("theta value {bad} outside the carrier")));
        }
        Ok(ContraTable {
            base: base.clone(),
            carrier: carrier.clone(),
            form: Form::Extensional(theta),
        })
    }

    /// Tabulates `θ` from a function on value tables.
    pub fn from_theta_fn(
        carrier: &FinSet,
        base: &FinSet,
        budget: &Budget,
        theta: impl Fn(&[usize]) -> usize,
    ) -> Result<Self> {
        budget.admit(power(carrier.len(), base.len()))?;
        let table = MapTables::new(base.len(), carrier.len())
            .map(|beta| theta(&beta))
            .collect();
        Self::extensional(carrier, base, table)
    }

    /// The empty contramodule.
    pub fn empty(base: &FinSet) -> Self {
        let theta = if base.is_empty() { vec![0] } else { vec![] };
        ContraTable {
            base: base.clone(),
            carrier: FinSet::empty(),
            // over an empty base the single input has nowhere to go; validate reports it
            form: Form::Extensional(theta),
        }
    }

    pub fn base(&self) -> &FinSet {
        &self.base
    }

    pub fn carrier(&self) -> &FinSet {
        &self.carrier
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn is_product(&self) -> bool {
        matches!(self.form, Form::Product(_))
    }

    /// The fibers `V_a` of a product-form table.
    pub fn fibers(&self) -> Option<&[FinSet]> {
        match &self.form {
            Form::Product(p) => Some(p.factors()),
            Form::Extensional(_) => None,
        }
    }

    pub(crate) fn product_set(&self) -> Option<&ProductSet> {
        match &self.form {
            Form::Product(p) => Some(p),
            Form::Extensional(_) => None,
        }
    }

    /// Fiber coordinates of a product-form carrier element.
    pub fn coordinates(&self, x: usize) -> Option<&[usize]> {
        self.product_set().map(|p| p.tuple(x))
    }

    /// `θ(β)` for `β` given as a table of carrier indices indexed by the base.
    pub fn theta(&self, beta: &[usize]) -> usize {
        match &self.form {
            Form::Extensional(t) => t[code_of(beta, self.carrier.len())],
            Form::Product(p) => {
                let coords: Vec<usize> = beta
                    .iter()
                    .enumerate()
                    .map(|(a, &x)| p.tuple(x)[a])
                    .collect();
                p.index_of_tuple(&coords).expect("coordinates in range")
            }
        }
    }

    pub fn to_extensional(&self, budget: &Budget) -> Result<ContraTable> {
        match &self.form {
            Form::Extensional(_) => Ok(self.clone()),
            Form::Product(_) => {
                Self::from_theta_fn(&self.carrier, &self.base, budget, |b| self.theta(b))
            }
        }
    }

    /// The full `θ` table, in code order.
    pub fn theta_table(&self, budget: &Budget) -> Result<Vec<usize>> {
        match self.to_extensional(budget)?.form {
            Form::Extensional(t) => Ok(t),
            Form::Product(_) => unreachable!(),
        }
    }

    /// Whether `f: X → Y` commutes with the structure maps.
    pub fn is_morphism(&self, target: &ContraTable, f: &FinMap) -> bool {
        if f.dom() != &self.carrier || f.cod() != &target.carrier || self.base != target.base {
            return false;
        }
        let mut image = vec![0; self.base.len()];
        MapTables::new(self.base.len(), self.carrier.len()).all(|beta| {
            for (slot, &b) in image.iter_mut().zip(&beta) {
                *slot = f.apply(b);
            }
            f.apply(self.theta(&beta)) == target.theta(&image)
        })
    }
}

/// The product contramodule `∏ V_a` with `θ(β)(a) = β(a)(a)`.
pub fn product_contra(base: &FinSet, fibers: &[FinSet]) -> Result<ContraTable> {
    if fibers.len() != base.len() {
        return Err(Error::MismatchedSignature(format!(
            "{} fibers for a base of size {}",
            fibers.len(),
            base.len()
        )));
    }
    if let Some(a) = fibers.iter().position(FinSet::is_empty) {
        return Err(Error::EmptyFiber(base.label(a).to_string()));
    }
    let p = ProductSet::new(fibers.to_vec());
    Ok(ContraTable {
        base: base.clone(),
        carrier: p.set().clone(),
        form: Form::Product(p),
    })
}

// first failing γ for contraunitality or the row-diagonal identity
fn axiom_violation(n_x: usize, n_c: usize, theta: impl Fn(&[usize]) -> usize) -> Option<String> {
    for x in 0..n_x {
        let t = theta(&vec![x; n_c]);
        if t != x {
            return Some(format!("contraunitality fails at constant {x}: theta gives {t}"));
        }
    }
    let mut rows = vec![0; n_c];
    let mut diag = vec![0; n_c];
    for gamma in MapTables::new(n_c * n_c, n_x) {
        for a in 0..n_c {
            rows[a] = theta(&gamma[a * n_c..(a + 1) * n_c]);
            diag[a] = gamma[a * n_c + a];
        }
        if theta(&rows) != theta(&diag) {
            return Some(format!("row-diagonal identity fails at gamma {gamma:?}"));
        }
    }
    None
}

/// Checks contraunitality and the row-diagonal identity exhaustively.
pub fn validate(t: &ContraTable, budget: &Budget) -> Result<Report> {
    let n_x = t.carrier.len();
    let n_c = t.base.len();
    let mut report = Report::new("contramodule axioms");
    let needed = power(n_x, n_c * n_c);
    if t.is_product() && budget.admit(needed).is_err() {
        report.note("product form: axioms hold by construction");
        return Ok(report);
    }
    budget.admit(needed)?;
    if n_x == 0 && n_c == 0 {
        report.fail("empty carrier over an empty base has no value for the empty function");
        return Ok(report);
    }
    report.tick(needed as u64 + n_x as u64);
    if let Some(w) = axiom_violation(n_x, n_c, |b| t.theta(b)) {
        report.fail(w);
    }
    Ok(report)
}

/// Output of [`decompose`]: `X ≅ ∏ X_a` as contramodules.
#[derive(Debug, Clone)]
pub struct Decomposition {
    /// `X_a = im π_a`, as subsets of the carrier.
    pub fibers: Vec<FinSet>,
    pub product: ContraTable,
    /// `x ↦ (π_a(x))_a`.
    pub pi: FinMap,
    /// `θ` restricted to the product.
    pub sigma: FinMap,
}

/// The idempotents `π_a(x) = θ(δ_{a,x})`, where `δ_{a,x}` is `x` at `a` and
/// `u` elsewhere.
pub fn projections(t: &ContraTable, u: usize) -> Vec<FinMap> {
    let n_c = t.base.len();
    (0..n_c)
        .map(|a| {
            let table = (0..t.carrier.len())
                .map(|x| {
                    let mut delta = vec![u; n_c];
                    delta[a] = x;
                    t.theta(&delta)
                })
                .collect();
            FinMap::from_indices(t.carrier.clone(), t.carrier.clone(), table)
                .expect("theta lands in the carrier")
        })
        .collect()
}

pub fn decompose(t: &ContraTable, u: &str) -> Result<Decomposition> {
    if t.is_empty() {
        return Err(Error::EmptyCarrier);
    }
    let u = t.carrier.require(u)?;
    let pis = projections(t, u);
    let fibers: Vec<FinSet> = pis.iter().map(|p| t.carrier.subset(p.image())).collect();
    let product = product_contra(&t.base, &fibers)?;
    let p = product.product_set().expect("product form");
    let pi_table = (0..t.carrier.len())
        .map(|x| {
            let coords: Vec<usize> = pis
                .iter()
                .zip(&fibers)
                .map(|(pa, fa)| fa.index_of(t.carrier.label(pa.apply(x))).unwrap())
                .collect();
            p.index_of_tuple(&coords).unwrap()
        })
        .collect();
    let sigma_table = (0..p.len())
        .map(|k| {
            let beta: Vec<usize> = p
                .tuple(k)
                .iter()
                .zip(&fibers)
                .map(|(&i, fa)| t.carrier.index_of(fa.label(i)).unwrap())
                .collect();
            t.theta(&beta)
        })
        .collect();
    Ok(Decomposition {
        pi: FinMap::from_indices(t.carrier.clone(), product.carrier.clone(), pi_table)?,
        sigma: FinMap::from_indices(product.carrier.clone(), t.carrier.clone(), sigma_table)?,
        fibers,
        product,
    })
}

fn check_base(s: &ContraTable, t: &ContraTable) -> Result<()> {
    if s.base != t.base {
        return Err(Error::BaseMismatch(format!("{} versus {}", s.base, t.base)));
    }
    Ok(())
}

/// Contramodule maps `s → t`. Product forms are handled fiberwise as
/// `∏_a [X_a, Y_a]`; anything else goes through [`contra_hom_generic`].
pub fn contra_hom(s: &ContraTable, t: &ContraTable, budget: &Budget) -> Result<HomSet> {
    check_base(s, t)?;
    if s.is_empty() {
        let only = FinMap::from_indices(s.carrier.clone(), t.carrier.clone(), vec![])?;
        return Ok(HomSet::new(&s.carrier, &t.carrier, vec![only]));
    }
    let (Some(ps), Some(pt)) = (s.product_set(), t.product_set()) else {
        return contra_hom_generic(s, t, budget);
    };
    let xs = ps.factors();
    let ys = pt.factors();
    let needed = xs
        .iter()
        .zip(ys)
        .fold(1u128, |acc, (x, y)| acc.saturating_mul(power(y.len(), x.len())));
    budget.admit(needed)?;
    let mut families: Vec<Vec<Vec<usize>>> = vec![vec![]];
    for (x, y) in xs.iter().zip(ys) {
        families = families
            .into_iter()
            .flat_map(|fam| {
                MapTables::new(x.len(), y.len()).map(move |f| {
                    let mut next = fam.clone();
                    next.push(f);
                    next
                })
            })
            .collect();
    }
    let maps = families
        .into_iter()
        .map(|fam| {
            let table = (0..ps.len())
                .map(|i| {
                    let coords: Vec<usize> =
                        ps.tuple(i).iter().zip(&fam).map(|(&c, f)| f[c]).collect();
                    pt.index_of_tuple(&coords).unwrap()
                })
                .collect();
            FinMap::from_indices(s.carrier.clone(), t.carrier.clone(), table)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(HomSet::new(&s.carrier, &t.carrier, maps))
}

/// Contramodule maps by the definition: every `f: X → Y` with
/// `f(θ_X(β)) = θ_Y(f∘β)` for all `β`.
pub fn contra_hom_generic(s: &ContraTable, t: &ContraTable, budget: &Budget) -> Result<HomSet> {
    check_base(s, t)?;
    let n_maps = power(t.carrier.len(), s.carrier.len());
    budget.admit(n_maps.saturating_mul(power(s.carrier.len(), s.base.len())))?;
    let maps = MapTables::new(s.carrier.len(), t.carrier.len())
        .map(|f| FinMap::from_indices(s.carrier.clone(), t.carrier.clone(), f).unwrap())
        .filter(|f| s.is_morphism(t, f))
        .collect();
    Ok(HomSet::new(&s.carrier, &t.carrier, maps))
}

/// All valid extensional structures on `X` over `C`, in lexicographic order
/// of their `θ` tables.
pub fn enumerate_all(x: &FinSet, c: &FinSet, budget: &Budget) -> Result<Vec<ContraTable>> {
    let n_x = x.len();
    let n_c = c.len();
    let inputs = power(n_x, n_c);
    let needed = if inputs >= 128 {
        u128::MAX
    } else {
        power(n_x, inputs as usize)
    };
    budget.admit(needed)?;
    let inputs = inputs as usize;
    if n_x == 0 {
        // X^C is empty unless C is, and then θ has nowhere to send the empty function
        return if inputs == 0 {
            Ok(vec![ContraTable::extensional(x, c, vec![])?])
        } else {
            Ok(vec![])
        };
    }
    let total = power(n_x, inputs) as usize;
    let tables: Vec<Vec<usize>> = (0..total)
        .into_par_iter()
        .filter_map(|k| {
            let mut theta = vec![0; inputs];
            decode_into(k, n_x, &mut theta);
            let ok = axiom_violation(n_x, n_c, |b| theta[code_of(b, n_x)]).is_none();
            ok.then_some(theta)
        })
        .collect();
    tables
        .into_iter()
        .map(|theta| ContraTable::extensional(x, c, theta))
        .collect()
}

fn check_map_base(f: &FinMap, base: &FinSet, side: &str) -> Result<()> {
    let end = if side == "dom" { f.dom() } else { f.cod() };
    if end != base {
        return Err(Error::BaseMismatch(format!(
            "map {side} is {end}, contramodule lives over {base}"
        )));
    }
    Ok(())
}

/// `Res` along `f: C → Ĉ`: `θ̂(g) = θ(g∘f)`. Product forms stay in product
/// form with fibers `P̂_z = ∏_{y ∈ f⁻¹(z)} P_y`; see [`restriction_relabel`]
/// for the identification of carriers.
pub fn restrict_contra(f: &FinMap, t: &ContraTable, budget: &Budget) -> Result<ContraTable> {
    check_map_base(f, &t.base, "dom")?;
    let target = f.cod();
    match &t.form {
        Form::Extensional(_) => {
            ContraTable::from_theta_fn(&t.carrier, target, budget, |g| {
                let composed: Vec<usize> = f.table().iter().map(|&z| g[z]).collect();
                t.theta(&composed)
            })
        }
        Form::Product(p) => {
            let fibers: Vec<FinSet> = (0..target.len())
                .map(|z| {
                    let parts = f.preimage(z).into_iter().map(|y| p.factors()[y].clone());
                    ProductSet::new(parts.collect()).set().clone()
                })
                .collect();
            product_contra(target, &fibers)
        }
    }
}

/// For a product-form `t`, the bijection from `t`'s carrier to the carrier
/// of `restrict_contra(f, t)`: `(p_y)_y ↦ ((p_y)_{y ∈ f⁻¹(z)})_z`.
pub fn restriction_relabel(f: &FinMap, t: &ContraTable, budget: &Budget) -> Result<FinMap> {
    let p = t
        .product_set()
        .ok_or_else(|| Error::Precondition("restriction relabel needs product form".into()))?;
    let res = restrict_contra(f, t, budget)?;
    let rp = res.product_set().unwrap();
    let inner: Vec<ProductSet> = (0..f.cod().len())
        .map(|z| {
            ProductSet::new(
                f.preimage(z)
                    .into_iter()
                    .map(|y| p.factors()[y].clone())
                    .collect(),
            )
        })
        .collect();
    let table = (0..p.len())
        .map(|i| {
            let x = p.tuple(i);
            let coords: Vec<usize> = (0..f.cod().len())
                .map(|z| {
                    let part: Vec<usize> = f.preimage(z).into_iter().map(|y| x[y]).collect();
                    let k = inner[z].index_of_tuple(&part).unwrap();
                    // inner[z] labels are exactly the fiber labels of the restriction
                    rp.factors()[z].index_of(inner[z].set().label(k)).unwrap()
                })
                .collect();
            rp.index_of_tuple(&coords).unwrap()
        })
        .collect();
    FinMap::from_indices(t.carrier.clone(), res.carrier.clone(), table)
}

/// Checks that the two descriptions of a restricted product contramodule
/// agree: `relabel(θ(g∘f)) = θ̂(relabel∘g)` for every `g: Ĉ → X`.
pub fn restrict_forms_agree(f: &FinMap, t: &ContraTable, budget: &Budget) -> Result<Report> {
    let ext = restrict_contra(f, &t.to_extensional(budget)?, budget)?;
    let prod = restrict_contra(f, t, budget)?;
    let relabel = restriction_relabel(f, t, budget)?;
    let mut report = Report::new("restriction forms agree");
    for g in MapTables::new(f.cod().len(), t.carrier.len()) {
        report.tick(1);
        let moved: Vec<usize> = g.iter().map(|&x| relabel.apply(x)).collect();
        if relabel.apply(ext.theta(&g)) != prod.theta(&moved) {
            report.fail(format!("disagreement at {g:?}"));
            break;
        }
    }
    Ok(report)
}

/// `Ind` along `f: C → Ĉ`, left adjoint to restriction: the fiber over
/// `z ∈ C` is `X_{f(z)}`. Extensional input is decomposed first.
pub fn induce_contra(f: &FinMap, t: &ContraTable) -> Result<ContraTable> {
    check_map_base(f, &t.base, "cod")?;
    let source = f.dom();
    if t.is_empty() {
        return if source.is_empty() {
            product_contra(source, &[])
        } else {
            Ok(ContraTable::empty(source))
        };
    }
    let fibers: Vec<FinSet> = match t.fibers() {
        Some(fs) => fs.to_vec(),
        None => decompose(t, t.carrier.label(0))?.fibers,
    };
    let induced: Vec<FinSet> = f.table().iter().map(|&w| fibers[w].clone()).collect();
    product_contra(source, &induced)
}

fn require_product(t: &ContraTable) -> Result<&ProductSet> {
    t.product_set()
        .ok_or_else(|| Error::Precondition("expected a product-form contramodule".into()))
}

/// The unit `t → Res(Ind t)` on carriers, `x ↦ (x_{f(z)})_z` relabelled.
pub fn induction_diagonal(f: &FinMap, t: &ContraTable) -> Result<FinMap> {
    let p = require_product(t)?;
    let ind = induce_contra(f, t)?;
    let ip = require_product(&ind)?;
    let table = (0..p.len())
        .map(|i| {
            let coords: Vec<usize> = f.table().iter().map(|&w| p.tuple(i)[w]).collect();
            ip.index_of_tuple(&coords).unwrap()
        })
        .collect();
    FinMap::from_indices(t.carrier.clone(), ind.carrier.clone(), table)
}

/// `hom_C(Ind t, s) → hom_Ĉ(t, Res s)`, `h ↦ relabel∘h∘diag`.
pub fn induction_transpose(
    f: &FinMap,
    t: &ContraTable,
    s: &ContraTable,
    h: &FinMap,
    budget: &Budget,
) -> Result<FinMap> {
    let diag = induction_diagonal(f, t)?;
    let relabel = restriction_relabel(f, s, budget)?;
    relabel.after(&h.after(&diag)?)
}

/// The inverse of [`induction_transpose`]. Component `z` of `h(y)` is read
/// off `k(x)` for any `x` with `x_{f(z)} = y_z`.
pub fn induction_untranspose(
    f: &FinMap,
    t: &ContraTable,
    s: &ContraTable,
    k: &FinMap,
    budget: &Budget,
) -> Result<FinMap> {
    let p = require_product(t)?;
    let ind = induce_contra(f, t)?;
    let ip = require_product(&ind)?;
    let sp = require_product(s)?;
    let res = restrict_contra(f, s, budget)?;
    let back = restriction_relabel(f, s, budget)?
        .inverse()
        .expect("relabelling is bijective");
    debug_assert_eq!(k.cod(), res.carrier());
    let table = (0..ip.len())
        .map(|i| {
            let y = ip.tuple(i);
            let coords: Vec<usize> = (0..f.dom().len())
                .map(|z| {
                    let mut x = vec![0; p.factors().len()];
                    x[f.apply(z)] = y[z];
                    let xi = p.index_of_tuple(&x).unwrap();
                    sp.tuple(back.apply(k.apply(xi)))[z]
                })
                .collect();
            sp.index_of_tuple(&coords).unwrap()
        })
        .collect();
    FinMap::from_indices(ind.carrier.clone(), s.carrier.clone(), table)
}

/// `Res` on a morphism `φ: s → s2`, transported to the product carriers.
pub fn restrict_map(
    f: &FinMap,
    s: &ContraTable,
    s2: &ContraTable,
    phi: &FinMap,
    budget: &Budget,
) -> Result<FinMap> {
    let from = restriction_relabel(f, s, budget)?.inverse().unwrap();
    let to = restriction_relabel(f, s2, budget)?;
    to.after(&phi.after(&from)?)
}

/// `Ind` on a fiberwise morphism `ψ: t → t2`.
pub fn induce_map(f: &FinMap, t: &ContraTable, t2: &ContraTable, psi: &FinMap) -> Result<FinMap> {
    let p = require_product(t)?;
    let p2 = require_product(t2)?;
    let ind = induce_contra(f, t)?;
    let ind2 = induce_contra(f, t2)?;
    let ip = require_product(&ind)?;
    let ip2 = require_product(&ind2)?;
    let table = (0..ip.len())
        .map(|i| {
            let y = ip.tuple(i);
            let coords: Vec<usize> = (0..f.dom().len())
                .map(|z| {
                    let w = f.apply(z);
                    let mut x = vec![0; p.factors().len()];
                    x[w] = y[z];
                    p2.tuple(psi.apply(p.index_of_tuple(&x).unwrap()))[w]
                })
                .collect();
            ip2.index_of_tuple(&coords).unwrap()
        })
        .collect();
    FinMap::from_indices(ind.carrier.clone(), ind2.carrier.clone(), table)
}

/// Product contramodules over `base` with every fiber of size
/// `1..=max_fiber`, fibers labelled `v1, v2, ...`.
pub fn products_with_fibers(base: &FinSet, max_fiber: usize) -> Vec<ContraTable> {
    MapTables::new(base.len(), max_fiber)
        .map(|sizes| {
            let fibers: Vec<FinSet> = sizes.iter().map(|&s| FinSet::labelled("v", s + 1)).collect();
            product_contra(base, &fibers).expect("non-empty fibers")
        })
        .collect()
}

/// For every `f: C → Ĉ` with `|C|, |Ĉ| ≤ max_base` and product
/// contramodules with fibers of size at most `max_fiber`: the transpose
/// `hom_C(Ind t, s) → hom_Ĉ(t, Res s)` is a bijection with inverse
/// [`induction_untranspose`], natural in `t` and in `s` along every
/// morphism.
pub fn induction_adjunction_certificate(
    max_base: usize,
    max_fiber: usize,
    budget: &Budget,
) -> Result<Report> {
    let mut cases = Vec::new();
    for nc in 0..=max_base {
        for nh in 0..=max_base {
            let (c, ch) = (FinSet::numbered(nc), FinSet::labelled("h", nh));
            for table in MapTables::new(nc, nh) {
                cases.push(FinMap::from_indices(c.clone(), ch.clone(), table)?);
            }
        }
    }
    let parts: Vec<Result<Report>> = cases
        .par_iter()
        .map(|f| induction_case(f, max_fiber, budget))
        .collect();
    let mut report = Report::new("induction adjunction");
    for part in parts {
        report.absorb(part?);
    }
    Ok(report)
}

fn compose(outer: &[usize], inner: &[usize]) -> Vec<usize> {
    inner.iter().map(|&i| outer[i]).collect()
}

fn induction_case(f: &FinMap, max_fiber: usize, budget: &Budget) -> Result<Report> {
    let mut r = Report::new(format!("induction along {f}"));
    let ts = products_with_fibers(f.cod(), max_fiber);
    let ss = products_with_fibers(f.dom(), max_fiber);
    // naturality is checked on tables: transpose(h) = relabel_s∘h∘diag_t
    let diag: Vec<Vec<usize>> = ts
        .iter()
        .map(|t| Ok(induction_diagonal(f, t)?.table().to_vec()))
        .collect::<Result<_>>()?;
    let relabel: Vec<Vec<usize>> = ss
        .iter()
        .map(|s| Ok(restriction_relabel(f, s, budget)?.table().to_vec()))
        .collect::<Result<_>>()?;
    // (ψ, Ind ψ) for ψ: t2 → t, indexed [t2][t]
    let mut ind_maps = vec![vec![Vec::new(); ts.len()]; ts.len()];
    for (i, t2) in ts.iter().enumerate() {
        for (j, t) in ts.iter().enumerate() {
            for psi in contra_hom(t2, t, budget)?.maps {
                let ind_psi = induce_map(f, t2, t, &psi)?.table().to_vec();
                ind_maps[i][j].push((psi.table().to_vec(), ind_psi));
            }
        }
    }
    // (φ, Res φ) for φ: s → s2, indexed [s][s2]
    let mut res_maps = vec![vec![Vec::new(); ss.len()]; ss.len()];
    for (i, s) in ss.iter().enumerate() {
        for (j, s2) in ss.iter().enumerate() {
            for phi in contra_hom(s, s2, budget)?.maps {
                let res_phi = restrict_map(f, s, s2, &phi, budget)?.table().to_vec();
                res_maps[i][j].push((phi.table().to_vec(), res_phi));
            }
        }
    }
    for (ti, t) in ts.iter().enumerate() {
        let ind = induce_contra(f, t)?;
        for (si, s) in ss.iter().enumerate() {
            let res = restrict_contra(f, s, budget)?;
            let left = contra_hom(&ind, s, budget)?;
            let right = contra_hom(t, &res, budget)?;
            r.tick(1);
            if left.len() != right.len() {
                r.fail(format!(
                    "{} maps Ind t → s but {} maps t → Res s",
                    left.len(),
                    right.len()
                ));
                continue;
            }
            let mut transposes = Vec::with_capacity(left.len());
            for h in &left.maps {
                let k = induction_transpose(f, t, s, h, budget)?;
                if !right.contains(&k) {
                    r.fail(format!("transpose of {h} is not a contramodule map"));
                } else if &induction_untranspose(f, t, s, &k, budget)? != h {
                    r.fail(format!("untranspose does not invert the transpose at {h}"));
                }
                transposes.push(k.table().to_vec());
            }
            for (t2i, _) in ts.iter().enumerate() {
                for (psi, ind_psi) in &ind_maps[t2i][ti] {
                    for (h, k) in left.maps.iter().zip(&transposes) {
                        r.tick(1);
                        let lhs = compose(&relabel[si], &compose(&compose(h.table(), ind_psi), &diag[t2i]));
                        if lhs != compose(k, psi) {
                            r.fail(format!("not natural in t along {psi:?}"));
                        }
                    }
                }
            }
            for (s2i, _) in ss.iter().enumerate() {
                for (phi, res_phi) in &res_maps[si][s2i] {
                    for (h, k) in left.maps.iter().zip(&transposes) {
                        r.tick(1);
                        let lhs = compose(&relabel[s2i], &compose(&compose(phi, h.table()), &diag[ti]));
                        if lhs != compose(res_phi, k) {
                            r.fail(format!("not natural in s along {phi:?}"));
                        }
                    }
                }
            }
        }
    }
    Ok(r)
}

/// Sizes witnessing that the free functor `X ↦ X^C` does not preserve
/// coequalisers once `|C| ≥ 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NoncocontinuityReport {
    /// `|coeq(F(α), F(β))|` computed on `F({a,b})`.
    pub coequalizer_size: usize,
    /// `|F(coeq(α, β))| = |F(point)|`.
    pub image_size: usize,
    /// The two constant functions identified by the coequaliser.
    pub witness: (String, String),
}

impl NoncocontinuityReport {
    pub fn cocontinuous_here(&self) -> bool {
        self.coequalizer_size == self.image_size
    }

    pub fn to_report(&self) -> Report {
        let mut r = Report::new("free contramodule functor versus coequaliser");
        r.tick(1);
        r.note(format!(
            "coequaliser of F(alpha), F(beta) has {} elements; F of the coequaliser has {}",
            self.coequalizer_size, self.image_size
        ));
        if self.cocontinuous_here() {
            r.note("cocontinuous here");
        } else {
            r.note(format!("identified {} ~ {}", self.witness.0, self.witness.1));
        }
        r
    }
}

pub fn noncocontinuity_demo(c: &FinSet) -> Result<NoncocontinuityReport> {
    let x = FinSet::new(["a", "b"])?;
    let point = FinSet::point();
    let fx = FunctionSpace::new(c, &x);
    let fpt = FunctionSpace::new(c, &point);
    let lift = |label: &str| -> Result<FinMap> {
        let v = x.require(label)?;
        let table = (0..fpt.len())
            .map(|i| {
                let composed: Vec<usize> = fpt.table(i).iter().map(|_| v).collect();
                fx.index_of_table(&composed).unwrap()
            })
            .collect();
        FinMap::from_indices(fpt.set().clone(), fx.set().clone(), table)
    };
    let fa = lift("a")?;
    let fb = lift("b")?;
    let q = coequalizer(&fa, &fb)?;
    let alpha = FinMap::constant(&point, &x, "a")?;
    let beta = FinMap::constant(&point, &x, "b")?;
    let base_quot = coequalizer(&alpha, &beta)?;
    let image = FunctionSpace::new(c, &base_quot.quotient);
    Ok(NoncocontinuityReport {
        coequalizer_size: q.quotient.len(),
        image_size: image.len(),
        witness: (
            fx.set().label(fa.apply(0)).to_string(),
            fx.set().label(fb.apply(0)).to_string(),
        ),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(labels: &[&str]) -> FinSet {
        FinSet::new(labels.iter().copied()).unwrap()
    }

    fn two_by_two() -> ContraTable {
        product_contra(&set(&["1", "2"]), &[set(&["p", "q"]), set(&["r", "s"])]).unwrap()
    }

    #[test]
    fn product_contra_theta_picks_coordinates() {
        let t = two_by_two();
        assert_eq!(t.carrier().elements(), &["(p,r)", "(p,s)", "(q,r)", "(q,s)"]);
        let b = Budget::default();
        assert!(validate(&t, &b).unwrap().passed);
        assert!(validate(&t.to_extensional(&b).unwrap(), &b).unwrap().passed);
        // θ((p,s),(q,r)) = (p,r)
        let x = |l: &str| t.carrier().index_of(l).unwrap();
        assert_eq!(t.theta(&[x("(p,s)"), x("(q,r)")]), x("(p,r)"));
        assert!(matches!(
            product_contra(&set(&["1", "2"]), &[set(&["p"]), FinSet::empty()]),
            Err(Error::EmptyFiber(_))
        ));
    }

    #[test]
    fn validate_rejects_non_projection_operation() {
        let x = set(&["0", "1"]);
        let c = set(&["1", "2"]);
        let b = Budget::default();
        // θ(β) = β(1) passes
        let first = ContraTable::from_theta_fn(&x, &c, &b, |beta| beta[0]).unwrap();
        assert!(validate(&first, &b).unwrap().passed);
        // the idempotent "or" satisfies contraunitality but not the row-diagonal identity
        let or = ContraTable::from_theta_fn(&x, &c, &b, |beta| beta[0] | beta[1]).unwrap();
        let r = validate(&or, &b).unwrap();
        assert!(!r.passed);
        assert!(r.witness.unwrap().contains("row-diagonal"));
        assert!(matches!(
            validate(&or, &Budget::new(10)),
            Err(Error::BudgetExceeded { needed: 16, .. })
        ));
    }

    #[test]
    fn decompose_two_by_two() {
        let t = two_by_two();
        let d = decompose(&t, "(p,r)").unwrap();
        assert_eq!(d.fibers[0].elements(), &["(p,r)", "(q,r)"]);
        assert_eq!(d.fibers[1].elements(), &["(p,r)", "(p,s)"]);
        assert!(d.sigma.after(&d.pi).unwrap() == FinMap::identity(t.carrier()));
        assert!(d.pi.after(&d.sigma).unwrap() == FinMap::identity(d.product.carrier()));
        assert!(t.is_morphism(&d.product, &d.pi));
        assert!(matches!(
            decompose(&ContraTable::empty(&set(&["1"])), "x"),
            Err(Error::EmptyCarrier)
        ));
    }

    #[test]
    fn enumeration_counts_small_cases() {
        let b = Budget::default();
        let c2 = set(&["1", "2"]);
        assert_eq!(enumerate_all(&FinSet::numbered(1), &c2, &b).unwrap().len(), 1);
        let two = enumerate_all(&FinSet::numbered(2), &c2, &b).unwrap();
        assert_eq!(two.len(), 2);
        for t in &two {
            assert!(validate(t, &b).unwrap().passed);
        }
        assert_eq!(enumerate_all(&FinSet::empty(), &c2, &b).unwrap().len(), 1);
    }

    #[test]
    fn hom_fiberwise_count() {
        let c = set(&["1", "2"]);
        let s = product_contra(&c, &[set(&["a", "b"]), set(&["c"])]).unwrap();
        let t = product_contra(&c, &[set(&["d"]), set(&["e", "f"])]).unwrap();
        let b = Budget::default();
        let h = contra_hom(&s, &t, &b).unwrap();
        assert_eq!(h.len(), 2);
        assert_eq!(h, contra_hom_generic(&s, &t, &b).unwrap());
        let e = ContraTable::empty(&c);
        assert_eq!(contra_hom(&e, &t, &b).unwrap().len(), 1);
    }

    #[test]
    fn restriction_and_induction_shapes() {
        let b = Budget::default();
        let t = two_by_two();
        let collapse = FinMap::terminal(t.base());
        let r = restrict_contra(&collapse, &t, &b).unwrap();
        assert_eq!(r.fibers().unwrap()[0].len(), 4);
        assert!(restrict_forms_agree(&collapse, &t, &b).unwrap().passed);

        let base = set(&["1", "2"]);
        let wide = set(&["1", "2", "3"]);
        let inj = FinMap::from_pairs(base.clone(), wide.clone(), [("1", "1"), ("2", "2")]).unwrap();
        let r = restrict_contra(&inj, &t, &b).unwrap();
        let sizes: Vec<usize> = r.fibers().unwrap().iter().map(FinSet::len).collect();
        assert_eq!(sizes, vec![2, 2, 1]);

        let c = FinMap::constant(&wide, &base, "2").unwrap();
        let ind = induce_contra(&c, &t).unwrap();
        let sizes: Vec<usize> = ind.fibers().unwrap().iter().map(FinSet::len).collect();
        assert_eq!(sizes, vec![2, 2, 2]);
        assert_eq!(
            induce_contra(&FinMap::identity(&base), &t).unwrap(),
            t
        );
    }

    #[test]
    fn noncocontinuity_sizes() {
        for (n, expected) in [(1, 1), (2, 3), (3, 7)] {
            let r = noncocontinuity_demo(&FinSet::numbered(n)).unwrap();
            assert_eq!(r.coequalizer_size, expected);
            assert_eq!(r.image_size, 1);
            assert_eq!(r.cocontinuous_here(), n == 1);
        }
    }
}
