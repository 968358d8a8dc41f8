//! Affine Springer parameters, enhanced L-parameters, Kato's fiberwise
//! characters and the recursive bijection `mu~` from `T//W^s` to parameters.

use std::collections::BTreeSet;

use num_rational::BigRational;
use serde_json::{json, Value};
use thiserror::Error;

use crate::bernstein::BernsteinDatum;
use crate::cyclotomic::Cyclo;
use crate::extquot::{component_of, extended_quotient, ExtQuotComponent};
use crate::lattice::{rational_rank, QVec};
use crate::rootdata::{induce, ClassFunction, FiniteGroup, RootDataError, RootDatum};
use crate::torus::{
    canonical_orbit_rep, qvec_json, stabilizer_subgroup, torsion_orbit_reps, Stabilizer,
    TorusPoint,
};
use crate::unipotent::{
    classify_cocharacter, springer_correspondence_with, unipotent_classes, SpringerData,
    UnipotentClass, UnipotentError, CONV_SPR,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParamError {
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
    #[error("{0} does not fix the point")]
    NotFixed(String),
    #[error("not a pure torsion point: {0}")]
    NotPureTorsion(String),
    #[error("label inconsistency: {0}")]
    LabelInconsistency(String),
    #[error("no admissible assignment on the fiber over {0}")]
    NoAssignment(String),
    #[error(transparent)]
    Unipotent(#[from] UnipotentError),
    #[error(transparent)]
    RootData(#[from] RootDataError),
}

/// `(t, x, rho1)`: `x` a unipotent class of `M° = Z_H(t)°`, `rho1` a geometric
/// character of its component group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSpringerParam {
    pub datum_id: String,
    pub t: TorusPoint,
    pub x: UnipotentClass,
    pub rho1: Vec<String>,
    /// Name of the class of `H` containing `x`.
    pub label: String,
}

/// The `(t, x)` normal form of an enhanced L-parameter `(Phi, rho)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnhancedLParam {
    pub datum_id: String,
    /// `Phi(varpi_F, 1)`.
    pub t: TorusPoint,
    /// Class of `Phi(1, upper unipotent)`.
    pub x: UnipotentClass,
    pub rho: Vec<String>,
    pub label: String,
    /// `h_Phi`, the cocharacter of the `SL2` part.
    pub h_phi: QVec,
}

fn rho_label(r: &[String]) -> String {
    if r.is_empty() {
        "1".into()
    } else {
        r.join(" x ")
    }
}

impl AffineSpringerParam {
    pub fn to_json(&self) -> Value {
        json!({
            "t": self.t.display(),
            "x": self.x.name,
            "x_host": self.x.host,
            "rho1": rho_label(&self.rho1),
            "label": self.label,
        })
    }
}

impl EnhancedLParam {
    pub fn to_json(&self) -> Value {
        json!({
            "t": self.t.display(),
            "x": self.x.name,
            "rho": rho_label(&self.rho),
            "label": self.label,
            "h_phi": qvec_json(&self.h_phi),
        })
    }
}

/// Everything attached to one point `t0` of the evaluation set.
#[derive(Clone, Debug)]
pub struct PointContext {
    pub t0: TorusPoint,
    /// `W_{t0}` (inside `W^s`) and its reflection part `W^{M°}`.
    pub stab: Stabilizer,
    pub m_rd: RootDatum,
    /// Springer data of `M°`, relative to `stab.reflection`.
    pub springer: SpringerData,
    /// For each class of `M°`, the index of its `H`-saturation.
    pub h_class: Vec<usize>,
    /// Kato character of each Springer row, as a class function on `W_{t0}`.
    pub kato: Vec<ClassFunction>,
    /// `W_{t0} = W^{M°}`; otherwise the fiber is not certified.
    pub certified: bool,
}

impl PointContext {
    pub fn new(
        datum: &BernsteinDatum,
        h_classes: &[UnipotentClass],
        t0: &TorusPoint,
    ) -> Result<Self, ParamError> {
        let stab = stabilizer_subgroup(&datum.h, &datum.ws, t0);
        let m_rd = datum
            .h
            .subdatum(&stab.roots, format!("Z({})[{}]", datum.h.label, t0.display()));
        let springer = springer_correspondence_with(&m_rd, &stab.reflection, CONV_SPR)?;
        let h_class = springer
            .classes
            .iter()
            .map(|c| {
                classify_cocharacter(&datum.h, h_classes, &c.h_x).ok_or_else(|| {
                    ParamError::InvalidParam(format!("class {} of {} has no saturation", c.name, m_rd.label))
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        let table = stab.reflection.character_table();
        let kato = springer
            .rows
            .iter()
            .map(|r| induce(&stab.reflection, table.irreducible(r.weyl_char), &stab.full))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(PointContext {
            t0: t0.clone(),
            certified: stab.is_reflection_group(),
            stab,
            m_rd,
            springer,
            h_class,
            kato,
        })
    }

    pub fn param(&self, datum: &BernsteinDatum, h_classes: &[UnipotentClass], row: usize) -> AffineSpringerParam {
        let r = &self.springer.rows[row];
        AffineSpringerParam {
            datum_id: datum.id.clone(),
            t: self.t0.clone(),
            x: self.springer.classes[r.class].clone(),
            rho1: r.rho1.clone(),
            label: h_classes[self.h_class[r.class]].name.clone(),
        }
    }

    /// The Springer row whose Kato character contains the irreducible `tau` of `W_{t0}`.
    pub fn row_of_irreducible(&self, tau: usize) -> Option<usize> {
        let table = self.stab.full.character_table();
        let target = table.irreducible(tau);
        self.kato
            .iter()
            .position(|k| k.inner(target) > BigRational::from_integer(0.into()))
    }

    fn class_of_x(&self, x: &UnipotentClass) -> Option<usize> {
        self.springer
            .classes
            .iter()
            .position(|c| c.name == x.name && c.h_x == x.h_x)
    }
}

fn h_classes_of(datum: &BernsteinDatum) -> Result<Vec<UnipotentClass>, ParamError> {
    Ok(unipotent_classes(&datum.h)?)
}

fn validate(datum: &BernsteinDatum, t: &TorusPoint, x: &UnipotentClass, rho: &[String]) -> Result<PointContext, ParamError> {
    if t.rank() != datum.h.rank {
        return Err(ParamError::InvalidParam(format!("point {} has the wrong rank", t.display())));
    }
    let h_classes = h_classes_of(datum)?;
    let ctx = PointContext::new(datum, &h_classes, t)?;
    let ci = ctx.class_of_x(x).ok_or_else(|| {
        ParamError::InvalidParam(format!("{} is not a unipotent class of Z_H({})°", x.name, t.display()))
    })?;
    if ctx.springer.row(ci, rho).is_none() {
        return Err(ParamError::InvalidParam(format!(
            "{} is not a geometric character for {}",
            rho_label(rho),
            x.name
        )));
    }
    Ok(ctx)
}

/// Affine Springer parameter to enhanced L-parameter. The records carry the same
/// `(t, x)`; `h_Phi = h_x` is recorded.
pub fn affine_to_enhanced(datum: &BernsteinDatum, a: &AffineSpringerParam) -> Result<EnhancedLParam, ParamError> {
    validate(datum, &a.t, &a.x, &a.rho1)?;
    Ok(EnhancedLParam {
        datum_id: a.datum_id.clone(),
        t: a.t.clone(),
        x: a.x.clone(),
        rho: a.rho1.clone(),
        label: a.label.clone(),
        h_phi: a.x.h_x.clone(),
    })
}

pub fn enhanced_to_affine(datum: &BernsteinDatum, e: &EnhancedLParam) -> Result<AffineSpringerParam, ParamError> {
    validate(datum, &e.t, &e.x, &e.rho)?;
    if e.h_phi != e.x.h_x {
        return Err(ParamError::InvalidParam("h_Phi differs from h_x".into()));
    }
    Ok(AffineSpringerParam {
        datum_id: e.datum_id.clone(),
        t: e.t.clone(),
        x: e.x.clone(),
        rho1: e.rho.clone(),
        label: e.label.clone(),
    })
}

/// Canonical representative of `W^s . t h_x(nu)`.
pub fn cuspidal_support(datum: &BernsteinDatum, a: &AffineSpringerParam) -> TorusPoint {
    let t_q = if a.x.h_x.iter().all(|q| q == &BigRational::from_integer(0.into())) {
        a.t.clone()
    } else {
        a.t.times_cocharacter_at_nu(&a.x.h_x)
    };
    canonical_orbit_rep(&datum.ws, &t_q)
}

pub fn is_tempered(a: &AffineSpringerParam) -> bool {
    a.t.is_compact()
}

/// All `(t0, x, rho1)` over a point `t0`.
pub fn enumerate_affine_params_at(
    datum: &BernsteinDatum,
    t0: &TorusPoint,
) -> Result<Vec<AffineSpringerParam>, ParamError> {
    let h_classes = h_classes_of(datum)?;
    let ctx = PointContext::new(datum, &h_classes, t0)?;
    Ok((0..ctx.springer.rows.len())
        .map(|r| ctx.param(datum, &h_classes, r))
        .collect())
}

/// `ind^{W_{t0}}_{Z_W(w) ∩ ...}` of `chi_w`: here `ind_{<w>}^{W_{t0}} chi_w` with
/// `chi_w(w^n) = exp(2 pi i n / |<w>|)`.
pub fn chi_w_character(
    datum: &BernsteinDatum,
    w_index: usize,
    t0: &TorusPoint,
) -> Result<ClassFunction, ParamError> {
    let stab = datum
        .ws
        .filter_subgroup(|g| &t0.act(g) == t0)
        .expect("stabilizer is a subgroup");
    chi_w_on(&datum.ws, &stab, w_index)
}

fn chi_w_on(ws: &FiniteGroup, stab: &FiniteGroup, w_index: usize) -> Result<ClassFunction, ParamError> {
    let elem = ws.element(w_index);
    let local = stab
        .index_of(&elem.matrix)
        .ok_or_else(|| ParamError::NotFixed(elem.word_string()))?;
    let cw = stab.generated_subgroup(&[local]);
    let k = stab.element_order(local);
    // exponent n of each element of <w>
    let mut expo = vec![0i64; cw.order()];
    let mut cur = 0usize;
    let id = (0..stab.order()).find(|&i| stab.element(i).is_identity()).unwrap();
    let mut g = id;
    for n in 0..k {
        let gi = cw.index_of(&stab.element(g).matrix).unwrap();
        expo[gi] = n as i64;
        g = stab.mul(g, local);
        cur += 1;
    }
    debug_assert_eq!(cur, cw.order());
    let phi = ClassFunction::from_element_fn(&cw, |i| Cyclo::root_of_unity(k as u32, expo[i]));
    Ok(induce(&cw, &phi, stab)?)
}

/// Kato's character `ind_{W^{M°}}^{W_{t0}} Spr(x, rho1)` on `W_{t0}`.
pub fn kato_fiber_character(
    datum: &BernsteinDatum,
    t0: &TorusPoint,
    x: &UnipotentClass,
    rho1: &[String],
) -> Result<ClassFunction, ParamError> {
    let ctx = validate(datum, t0, x, rho1)?;
    let ci = ctx.class_of_x(x).expect("validated");
    let row = ctx
        .springer
        .rows
        .iter()
        .position(|r| r.class == ci && r.rho1 == rho1)
        .expect("validated");
    Ok(ctx.kato[row].clone())
}

/// One point `[w, t0]` of a fiber with its assignment.
#[derive(Clone, Debug)]
pub struct PointAssignment {
    pub component: usize,
    /// Index of `w` in `W^s`.
    pub w_index: usize,
    pub dim: usize,
    /// Assigned irreducible of `W_{t0}` (character-table index); `None` when
    /// the fiber admits no assignment.
    pub weyl_char: Option<usize>,
    pub param: Option<AffineSpringerParam>,
    /// Whether the parameter's label equals the component's label.
    pub label_ok: bool,
}

#[derive(Clone, Debug)]
pub struct FiberAssignment {
    pub t0: TorusPoint,
    pub stabilizer_order: usize,
    pub num_irreducibles: usize,
    pub certified: bool,
    /// Rank of the span of the `chi(w, t0)` (equal to `num_irreducibles` when they form a basis).
    pub chi_rank: usize,
    /// Why no assignment exists, if so.
    pub failure: Option<String>,
    pub points: Vec<PointAssignment>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inconsistency {
    pub t0: String,
    pub component: usize,
    pub component_label: String,
    pub param_label: String,
}

impl Inconsistency {
    fn describe(&self) -> String {
        format!(
            "at {} component {} is labelled {} but receives a parameter labelled {}",
            self.t0, self.component, self.component_label, self.param_label
        )
    }
}

#[derive(Clone, Debug)]
pub struct MuTildeAssignment {
    pub datum_id: String,
    pub components: Vec<ExtQuotComponent>,
    pub fibers: Vec<FiberAssignment>,
    pub inconsistencies: Vec<Inconsistency>,
}

impl MuTildeAssignment {
    pub fn failed_fibers(&self) -> impl Iterator<Item = &FiberAssignment> {
        self.fibers.iter().filter(|f| f.failure.is_some())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "datum": self.datum_id,
            "components": self.components.iter().map(|c| json!({"id": c.id, "dim": c.dim, "label": c.label})).collect::<Vec<_>>(),
            "fibers": self.fibers.iter().map(|f| json!({
                "t0": f.t0.display(),
                "stabilizer_order": f.stabilizer_order,
                "certified": f.certified,
                "chi_rank": f.chi_rank,
                "num_irreducibles": f.num_irreducibles,
                "failure": f.failure,
                "assignments": f.points.iter().map(|p| json!({
                    "component": p.component,
                    "dim": p.dim,
                    "weyl_char": p.weyl_char,
                    "param": p.param.as_ref().map(|x| x.to_json()),
                    "label_ok": p.label_ok,
                })).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
            "inconsistencies": self.inconsistencies.iter().map(|i| i.describe()).collect::<Vec<_>>(),
        })
    }

    /// Every parameter produced, in fiber order.
    pub fn params(&self) -> impl Iterator<Item = &AffineSpringerParam> {
        self.fibers
            .iter()
            .flat_map(|f| f.points.iter().filter_map(|p| p.param.as_ref()))
    }
}

/// Options of the `mu~` computation.
#[derive(Clone, Copy, Debug)]
pub struct MuTildeOptions {
    /// Torsion points of order at most this are evaluated.
    pub torsion_bound: u32,
}

impl Default for MuTildeOptions {
    fn default() -> Self {
        MuTildeOptions { torsion_bound: 4 }
    }
}

struct FiberPoint {
    component: usize,
    w_index: usize,
    dim: usize,
    /// Multiplicities of `chi(w, t0)` on the irreducibles of `W_{t0}`.
    chi: Vec<i64>,
}

/// Points `[w, t0]` of the fiber, one per class of `W_{t0}`, sorted by
/// dimension and component.
fn fiber_points(
    ws: &FiniteGroup,
    comps: &[ExtQuotComponent],
    stab: &FiniteGroup,
    t0: &TorusPoint,
) -> Result<Vec<FiberPoint>, ParamError> {
    let table = stab.character_table();
    let mut pts = Vec::new();
    for class in stab.classes() {
        let m = &stab.element(class.representative).matrix;
        let w_index = ws.index_of(m).expect("stabilizer inside W^s");
        let component = component_of(ws, comps, w_index, t0)
            .ok_or_else(|| ParamError::NotFixed(ws.element(w_index).word_string()))?;
        let chi = chi_w_on(ws, stab, w_index)?;
        let chi = table
            .decompose_integral(&chi)
            .ok_or_else(|| ParamError::InvalidParam("chi_w is not a character".into()))?;
        pts.push(FiberPoint {
            component,
            w_index,
            dim: comps[component].dim,
            chi,
        });
    }
    pts.sort_by_key(|p| (p.dim, p.component, p.w_index));
    Ok(pts)
}

fn unit(n: usize, k: usize) -> QVec {
    (0..n)
        .map(|i| BigRational::from_integer(((i == k) as i64).into()))
        .collect()
}

fn to_q(v: &[i64]) -> QVec {
    v.iter().map(|&x| BigRational::from_integer(x.into())).collect()
}

/// The fiberwise recursion: each point receives a constituent
/// of its `chi(w, t0)` so that assigned characters together with the
/// characters of the points still to come stay a basis. `prefer(point, tau)`
/// ranks candidates (lower first); ties go to the lowest index.
fn assign(points: &[FiberPoint], n: usize, prefer: &dyn Fn(usize, usize) -> u8) -> Option<Vec<usize>> {
    fn go(
        k: usize,
        points: &[FiberPoint],
        n: usize,
        chosen: &mut Vec<usize>,
        prefer: &dyn Fn(usize, usize) -> u8,
    ) -> bool {
        if k == points.len() {
            return true;
        }
        let mut cands: Vec<usize> = (0..n)
            .filter(|&tau| points[k].chi[tau] > 0 && !chosen.contains(&tau))
            .collect();
        cands.sort_by_key(|&tau| (prefer(k, tau), tau));
        for tau in cands {
            let mut rows: Vec<QVec> = chosen.iter().map(|&c| unit(n, c)).collect();
            rows.push(unit(n, tau));
            rows.extend(points[k + 1..].iter().map(|p| to_q(&p.chi)));
            if rational_rank(&rows) < points.len() {
                continue;
            }
            chosen.push(tau);
            if go(k + 1, points, n, chosen, prefer) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    if points.len() != n {
        return None;
    }
    let mut chosen = Vec::new();
    go(0, points, n, &mut chosen, prefer).then_some(chosen)
}

/// Label of every component, read at its generic point `t_g`: from the unique
/// irreducible constituent of `chi(w, t_g)` when there is one, otherwise from
/// the recursion on the fiber over `t_g`. `None` when neither applies.
/// Along with the label comes `h_x` of the class of `Z_H(t_g)°` it came
/// from, a Weyl translate of the label's `h_x` centralizing the component.
fn component_labels(
    datum: &BernsteinDatum,
    h_classes: &[UnipotentClass],
    comps: &[ExtQuotComponent],
) -> Result<Vec<Option<(String, QVec)>>, ParamError> {
    let mut labels = Vec::with_capacity(comps.len());
    for c in comps {
        let tg = c.coset.generic_point();
        let ctx = PointContext::new(datum, h_classes, &tg)?;
        let pts = fiber_points(&datum.ws, comps, &ctx.stab.full, &tg)?;
        let n = ctx.stab.full.character_table().num_classes();
        let here = pts
            .iter()
            .position(|p| p.component == c.id && p.w_index == c.w_index)
            .or_else(|| pts.iter().position(|p| p.component == c.id))
            .expect("the component passes through its generic point");
        let constituents: Vec<usize> = (0..n).filter(|&tau| pts[here].chi[tau] > 0).collect();
        let tau = if constituents.len() == 1 {
            Some(constituents[0])
        } else {
            assign(&pts, n, &|_, _| 0).map(|chosen| chosen[here])
        };
        labels.push(
            tau.and_then(|tau| ctx.row_of_irreducible(tau))
                .map(|row| {
                    let p = ctx.param(datum, h_classes, row);
                    (p.label, p.x.h_x)
                }),
        );
    }
    Ok(labels)
}

/// Runs `mu~` and reports label conflicts instead of failing on them.
pub fn mu_tilde_report(datum: &BernsteinDatum, opts: MuTildeOptions) -> Result<MuTildeAssignment, ParamError> {
    let h_classes = h_classes_of(datum)?;
    let mut comps = extended_quotient(&datum.ws);
    let found = component_labels(datum, &h_classes, &comps)?;
    for (c, l) in comps.iter_mut().zip(&found) {
        c.label = l.as_ref().map(|(name, _)| name.clone());
        c.h_c = l.as_ref().map(|(_, h)| h.clone());
    }
    let labels: Vec<Option<String>> = comps.iter().map(|c| c.label.clone()).collect();
    let mut fibers = Vec::new();
    let mut inconsistencies = Vec::new();
    for t0 in torsion_orbit_reps(&datum.ws, datum.h.rank, opts.torsion_bound) {
        let ctx = PointContext::new(datum, &h_classes, &t0)?;
        let pts = fiber_points(&datum.ws, &comps, &ctx.stab.full, &t0)?;
        let n = ctx.stab.full.character_table().num_classes();
        let row_of: Vec<Option<usize>> = (0..n).map(|tau| ctx.row_of_irreducible(tau)).collect();
        let label_of = |tau: usize| row_of[tau].map(|r| h_classes[ctx.h_class[ctx.springer.rows[r].class]].name.clone());
        let prefer = |k: usize, tau: usize| -> u8 {
            let want = labels[pts[k].component].as_ref();
            u8::from(want.is_none() || label_of(tau).as_ref() != want)
        };
        let chi_rank = rational_rank(&pts.iter().map(|p| to_q(&p.chi)).collect::<Vec<_>>());
        let chosen = assign(&pts, n, &prefer);
        let failure = chosen.is_none().then(|| {
            if chi_rank < n {
                format!("the chi(w, t0) span a space of dimension {chi_rank} < {n}")
            } else {
                "no constituent choice keeps the span condition".to_string()
            }
        });
        let mut points = Vec::new();
        for (k, p) in pts.iter().enumerate() {
            let tau = chosen.as_ref().map(|c| c[k]);
            let param = tau.and_then(|tau| row_of[tau]).map(|r| ctx.param(datum, &h_classes, r));
            let want = labels[p.component].clone().unwrap_or_else(|| "unresolved".into());
            let label_ok = labels[p.component].is_some()
                && param.as_ref().map(|x| x.label == want).unwrap_or(false);
            if tau.is_some() && !label_ok {
                inconsistencies.push(Inconsistency {
                    t0: t0.display(),
                    component: p.component,
                    component_label: want,
                    param_label: param.as_ref().map(|x| x.label.clone()).unwrap_or_else(|| "none".into()),
                });
            }
            points.push(PointAssignment {
                component: p.component,
                w_index: p.w_index,
                dim: p.dim,
                weyl_char: tau,
                param,
                label_ok,
            });
        }
        fibers.push(FiberAssignment {
            stabilizer_order: ctx.stab.full.order(),
            num_irreducibles: n,
            certified: ctx.certified,
            chi_rank,
            failure,
            t0,
            points,
        });
    }
    Ok(MuTildeAssignment {
        datum_id: datum.id.clone(),
        components: comps,
        fibers,
        inconsistencies,
    })
}

/// `mu~` with its full contract: fails with `LabelInconsistency` if some
/// fiber point cannot receive a parameter carrying its component's label.
pub fn mu_tilde(datum: &BernsteinDatum, opts: MuTildeOptions) -> Result<MuTildeAssignment, ParamError> {
    let a = mu_tilde_report(datum, opts)?;
    if let Some(f) = a.failed_fibers().next() {
        return Err(ParamError::NoAssignment(format!(
            "{}: {}",
            f.t0.display(),
            f.failure.as_deref().unwrap_or_default()
        )));
    }
    if let Some(first) = a.inconsistencies.first() {
        return Err(ParamError::LabelInconsistency(format!(
            "{} ({} conflicts in total)",
            first.describe(),
            a.inconsistencies.len()
        )));
    }
    Ok(a)
}

/// Distinct labels used by the components.
pub fn labels_in_use(a: &MuTildeAssignment) -> BTreeSet<String> {
    a.components.iter().filter_map(|c| c.label.clone()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bernstein::{centralizer_subdatum, iwahori_datum};
    use crate::rootdata::build_root_datum;

    fn tp(v: &[(i64, i64)]) -> TorusPoint {
        TorusPoint::from_torsion(v.iter().map(|&(a, b)| BigRational::new(a.into(), b.into())).collect())
    }

    #[test]
    fn sl2_iwahori_is_consistent() {
        let d = iwahori_datum(&build_root_datum("SL2").unwrap()).unwrap();
        let a = mu_tilde(&d, MuTildeOptions::default()).unwrap();
        let labels: Vec<String> = a.components.iter().map(|c| c.label.clone().unwrap()).collect();
        assert_eq!(labels, vec!["(1^2)", "(2)", "(2)"]);
    }

    #[test]
    fn chi_w_examples() {
        let d = iwahori_datum(&build_root_datum("SL2").unwrap()).unwrap();
        let one = TorusPoint::identity(1);
        let e = (0..d.ws.order()).find(|&i| d.ws.element(i).is_identity()).unwrap();
        let s = 1 - e;
        assert_eq!(chi_w_character(&d, e, &one).unwrap().degree_int(), 2);
        assert_eq!(chi_w_character(&d, s, &one).unwrap().degree_int(), 1);
        assert!(matches!(chi_w_character(&d, s, &tp(&[(1, 4)])), Err(ParamError::NotFixed(_))));
    }

    #[test]
    fn params_counts() {
        let sl2 = iwahori_datum(&build_root_datum("SL2").unwrap()).unwrap();
        assert_eq!(enumerate_affine_params_at(&sl2, &TorusPoint::identity(1)).unwrap().len(), 2);
        assert_eq!(enumerate_affine_params_at(&sl2, &tp(&[(1, 4)])).unwrap().len(), 1);
        let b = centralizer_subdatum(&build_root_datum("SL2").unwrap(), &[tp(&[(1, 4)])]).unwrap();
        assert!(mu_tilde(&b, MuTildeOptions::default()).is_ok());
    }

    #[test]
    fn invalid_param_is_rejected() {
        let d = iwahori_datum(&build_root_datum("SL2").unwrap()).unwrap();
        let regular = unipotent_classes(&d.h).unwrap()[0].clone();
        let e = EnhancedLParam {
            datum_id: d.id.clone(),
            t: tp(&[(1, 4)]),
            h_phi: regular.h_x.clone(),
            x: regular,
            rho: vec!["1".into()],
            label: "(2)".into(),
        };
        assert!(matches!(enhanced_to_affine(&d, &e), Err(ParamError::InvalidParam(_))));
    }
}
