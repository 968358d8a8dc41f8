//! The extended quotient `T//W` as a finite list of components.
//!
//! `T//W` is the quotient of `{(w, t) : w t = t}` by `W`. Its components are
//! indexed by a conjugacy class `[w]` together with a `Z_W(w)`-orbit of
//! connected components of `T^w`.

use serde_json::{json, Value};

use crate::lattice::QVec;
use crate::rootdata::{FiniteGroup, WeylElement};
use crate::torus::{canonical_orbit_rep, fixed_point_components, qvec_json, TorusCoset, TorusPoint};

#[derive(Clone, Debug)]
pub struct ExtQuotComponent {
    pub id: usize,
    /// Index of the class of `w` in the group's class list.
    pub class_index: usize,
    /// Element index of the class representative.
    pub w_index: usize,
    pub w: WeylElement,
    /// Representative component of `T^w` (least base point in the orbit).
    pub coset: TorusCoset,
    /// The full `Z_W(w)`-orbit of components of `T^w` identified here.
    pub orbit: Vec<TorusCoset>,
    pub dim: usize,
    /// Unipotent label, filled in by the bijection.
    pub label: Option<String>,
    /// Correcting cocharacter, filled in by the packet computation.
    pub h_c: Option<QVec>,
}

impl ExtQuotComponent {
    pub fn to_json(&self) -> Value {
        json!({
            "id": self.id,
            "weyl_class_word": self.w.word_string(),
            "class_index": self.class_index,
            "dim": self.dim,
            "base_point": qvec_json(self.coset.base.torsion()),
            "lattice": self.coset.to_json()["lattice"].clone(),
            "label": self.label,
            "h_c": self.h_c.as_ref().map(|h| qvec_json(h)),
        })
    }
}

/// A point `[w, t]` of the extended quotient.
#[derive(Clone, Debug)]
pub struct ExtQuotPoint {
    pub w_index: usize,
    pub w: WeylElement,
    pub t: TorusPoint,
    pub component: usize,
}

/// Components of `T//W`, ordered by class, then dimension (descending), then base point.
pub fn extended_quotient(w: &FiniteGroup) -> Vec<ExtQuotComponent> {
    let mut comps = Vec::new();
    for (ci, class) in w.classes().iter().enumerate() {
        let x = class.representative;
        let elem = w.element(x);
        let cosets = fixed_point_components(elem);
        let centralizer = w.centralizer(x);
        let mut assigned = vec![false; cosets.len()];
        for start in 0..cosets.len() {
            if assigned[start] {
                continue;
            }
            let mut orbit = Vec::new();
            for &g in &centralizer {
                let image = cosets[start].act(w.element(g));
                if let Some(j) = cosets.iter().position(|c| c.same_coset(&image)) {
                    if !assigned[j] {
                        assigned[j] = true;
                        orbit.push(cosets[j].clone());
                    }
                }
            }
            orbit.sort_by(|a, b| a.base.cmp(&b.base));
            comps.push(ExtQuotComponent {
                id: 0,
                class_index: ci,
                w_index: x,
                w: elem.clone(),
                coset: orbit[0].clone(),
                dim: orbit[0].dim(),
                orbit,
                label: None,
                h_c: None,
            });
        }
    }
    comps.sort_by(|a, b| {
        (a.class_index, std::cmp::Reverse(a.dim), &a.coset.base).cmp(&(
            b.class_index,
            std::cmp::Reverse(b.dim),
            &b.coset.base,
        ))
    });
    for (i, c) in comps.iter_mut().enumerate() {
        c.id = i;
    }
    comps
}

/// The component containing `[w, t]` (requires `w t = t`).
pub fn component_of(
    w: &FiniteGroup,
    comps: &[ExtQuotComponent],
    w_index: usize,
    t: &TorusPoint,
) -> Option<usize> {
    let class = w.class_of(w_index);
    for g in 0..w.order() {
        let conj = w.mul(w.mul(g, w_index), w.inv(g));
        let moved = t.act(w.element(g));
        for c in comps.iter().filter(|c| c.class_index == class && c.w_index == conj) {
            if c.orbit.iter().any(|co| co.contains(&moved)) {
                return Some(c.id);
            }
        }
    }
    None
}

/// The fiber of `T//W -> T/W` over `W t0`: one point per class of `W_{t0}`.
pub fn fiber_over(w: &FiniteGroup, comps: &[ExtQuotComponent], t0: &TorusPoint) -> Vec<ExtQuotPoint> {
    let stab = w
        .filter_subgroup(|g| &t0.act(g) == t0)
        .expect("stabilizer is a subgroup");
    stab.classes()
        .iter()
        .map(|c| {
            let elem = stab.element(c.representative);
            let w_index = w.index_of(&elem.matrix).expect("stabilizer inside W");
            let component = component_of(w, comps, w_index, t0).expect("every fixed pair lies in a component");
            ExtQuotPoint {
                w_index,
                w: w.element(w_index).clone(),
                t: t0.clone(),
                component,
            }
        })
        .collect()
}

/// `rho([w, t]) = W t`, as its canonical representative.
pub fn projection_to_quotient(w: &FiniteGroup, p: &ExtQuotPoint) -> TorusPoint {
    canonical_orbit_rep(w, &p.t)
}
