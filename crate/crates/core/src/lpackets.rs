//! Correcting cocharacters, the maps `theta_z` and the partition of fibers
//! into L-packets.
//!
//! `theta_z[w, t] = W^s t h_c(z)` is kept as the exact pair `(t, h_c)`. Two
//! labelled points lie in one packet when their labels agree and a single
//! `v` in `W^s` carries one pair to the other.

use std::collections::BTreeMap;

use serde_json::{json, Value};
use thiserror::Error;

use crate::extquot::{ExtQuotComponent, ExtQuotPoint};
use crate::lattice::QVec;
use crate::parameters::MuTildeAssignment;
use crate::rootdata::FiniteGroup;
use crate::torus::{qvec_json, TorusPoint};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PacketError {
    #[error("component {0} carries no unipotent label")]
    Unlabelled(usize),
    #[error("point does not lie on component {0}")]
    NotInComponent(usize),
}

/// Canonical form of a labelled point: label plus the least `(v t, v h)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PacketKey {
    pub label: String,
    pub t: TorusPoint,
    pub h: QVec,
}

impl PacketKey {
    pub fn to_json(&self) -> Value {
        json!({"label": self.label, "t": self.t.display(), "h": qvec_json(&self.h)})
    }
}

/// `h_c` of a labelled component.
pub fn correcting_cocharacter(c: &ExtQuotComponent) -> Result<QVec, PacketError> {
    match (&c.label, &c.h_c) {
        (Some(_), Some(h)) => Ok(h.clone()),
        _ => Err(PacketError::Unlabelled(c.id)),
    }
}

fn act_cochar(w: &FiniteGroup, g: usize, h: &[num_rational::BigRational]) -> QVec {
    w.element(g).coaction.apply_rational(h)
}

/// Least `(u s, u h)` over `u` in `W^s`.
fn canonical_pair(w: &FiniteGroup, s: &TorusPoint, h: &[num_rational::BigRational]) -> (TorusPoint, QVec) {
    (0..w.order())
        .map(|u| (s.act(w.element(u)), act_cochar(w, u, h)))
        .min()
        .expect("nonempty group")
}

/// Elements `v` moving `(w, t)` onto the representative `(c.w, c.coset)`.
fn transports(w: &FiniteGroup, c: &ExtQuotComponent, p: &ExtQuotPoint) -> Vec<usize> {
    (0..w.order())
        .filter(|&v| {
            w.mul(w.mul(v, p.w_index), w.inv(v)) == c.w_index
                && c.coset.contains(&p.t.act(w.element(v)))
        })
        .collect()
}

/// `theta_z` at a point as the pair `(t, h)`, with `h` a Weyl translate of
/// `h_c` adapted to `t`. Among the admissible translates the one with the least
/// canonical form is used, which keeps the choice `W^s`-equivariant.
pub fn theta_pair(
    w: &FiniteGroup,
    c: &ExtQuotComponent,
    p: &ExtQuotPoint,
) -> Result<(TorusPoint, QVec), PacketError> {
    let h_c = correcting_cocharacter(c)?;
    let best = transports(w, c, p)
        .into_iter()
        .map(|v| {
            let h = act_cochar(w, w.inv(v), &h_c);
            (canonical_pair(w, &p.t, &h), h)
        })
        .min()
        .ok_or(PacketError::NotInComponent(c.id))?;
    Ok((p.t.clone(), best.1))
}

pub fn packet_key(
    w: &FiniteGroup,
    comps: &[ExtQuotComponent],
    p: &ExtQuotPoint,
) -> Result<PacketKey, PacketError> {
    let c = &comps[p.component];
    let label = c.label.clone().ok_or(PacketError::Unlabelled(c.id))?;
    let (t, h) = theta_pair(w, c, p)?;
    let (t, h) = canonical_pair(w, &t, &h);
    Ok(PacketKey { label, t, h })
}

/// Equal labels and some `v` with `v t = t'` and `v h = h'`, searched directly.
pub fn same_packet(
    w: &FiniteGroup,
    comps: &[ExtQuotComponent],
    p1: &ExtQuotPoint,
    p2: &ExtQuotPoint,
) -> Result<bool, PacketError> {
    let (c1, c2) = (&comps[p1.component], &comps[p2.component]);
    let l1 = c1.label.as_ref().ok_or(PacketError::Unlabelled(c1.id))?;
    let l2 = c2.label.as_ref().ok_or(PacketError::Unlabelled(c2.id))?;
    if l1 != l2 {
        return Ok(false);
    }
    let (t1, h1) = theta_pair(w, c1, p1)?;
    let (t2, h2) = theta_pair(w, c2, p2)?;
    Ok((0..w.order()).any(|v| t1.act(w.element(v)) == t2 && act_cochar(w, v, &h1) == h2))
}

/// Groups points by packet key; each group is a list of indices into `points`.
pub fn packet_partition(
    w: &FiniteGroup,
    comps: &[ExtQuotComponent],
    points: &[ExtQuotPoint],
) -> Result<Vec<(PacketKey, Vec<usize>)>, PacketError> {
    let mut groups: BTreeMap<PacketKey, Vec<usize>> = BTreeMap::new();
    for (i, p) in points.iter().enumerate() {
        groups.entry(packet_key(w, comps, p)?).or_default().push(i);
    }
    let mut out: Vec<(PacketKey, Vec<usize>)> = groups.into_iter().collect();
    out.sort_by_key(|(_, members)| members[0]);
    Ok(out)
}

/// Packets of one evaluated fiber.
#[derive(Clone, Debug)]
pub struct FiberPackets {
    pub t0: TorusPoint,
    pub points: Vec<ExtQuotPoint>,
    pub packets: Vec<(PacketKey, Vec<usize>)>,
}

impl FiberPackets {
    pub fn to_json(&self) -> Value {
        json!({
            "t0": self.t0.display(),
            "packets": self.packets.iter().map(|(k, m)| json!({
                "key": k.to_json(),
                "points": m.iter().map(|&i| json!({
                    "component": self.points[i].component,
                    "w": self.points[i].w.word_string(),
                })).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        })
    }
}

/// The fiber points of a `mu~` run as extended-quotient points.
pub fn fiber_points_of(w: &FiniteGroup, a: &MuTildeAssignment) -> Vec<(TorusPoint, Vec<ExtQuotPoint>)> {
    a.fibers
        .iter()
        .map(|f| {
            let pts = f
                .points
                .iter()
                .map(|p| ExtQuotPoint {
                    w_index: p.w_index,
                    w: w.element(p.w_index).clone(),
                    t: f.t0.clone(),
                    component: p.component,
                })
                .collect();
            (f.t0.clone(), pts)
        })
        .collect()
}

/// Packets on every fiber of a `mu~` run. Fibers whose points touch an
/// unlabelled component are skipped and reported by their base point.
pub fn packets_by_fiber(
    w: &FiniteGroup,
    a: &MuTildeAssignment,
) -> (Vec<FiberPackets>, Vec<(TorusPoint, PacketError)>) {
    let mut ok = Vec::new();
    let mut skipped = Vec::new();
    for (t0, points) in fiber_points_of(w, a) {
        match packet_partition(w, &a.components, &points) {
            Ok(packets) => ok.push(FiberPackets { t0, points, packets }),
            Err(e) => skipped.push((t0, e)),
        }
    }
    (ok, skipped)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bernstein::iwahori_datum;
    use crate::parameters::{mu_tilde_report, MuTildeOptions};
    use crate::rootdata::build_root_datum;

    #[test]
    fn sl2_packets_are_singletons() {
        let d = iwahori_datum(&build_root_datum("SL2").unwrap()).unwrap();
        let a = mu_tilde_report(&d, MuTildeOptions { torsion_bound: 2 }).unwrap();
        let (fibers, skipped) = packets_by_fiber(&d.ws, &a);
        assert!(skipped.is_empty());
        assert_eq!(fibers.len(), 2);
        for f in &fibers {
            assert_eq!(f.packets.len(), 2);
            assert!(f.packets.iter().all(|(_, m)| m.len() == 1));
        }
        // the trivial component [e, T] has h_c = 0, the point components do not
        let zero = num_rational::BigRational::from_integer(0.into());
        let e = a.components.iter().find(|c| c.dim == 1).unwrap();
        assert!(correcting_cocharacter(e).unwrap().iter().all(|x| x == &zero));
    }

    #[test]
    fn keys_are_weyl_invariant() {
        let d = iwahori_datum(&build_root_datum("GL2").unwrap()).unwrap();
        let a = mu_tilde_report(&d, MuTildeOptions { torsion_bound: 2 }).unwrap();
        for (_, pts) in fiber_points_of(&d.ws, &a) {
            for p in &pts {
                let k = packet_key(&d.ws, &a.components, p).unwrap();
                for v in 0..d.ws.order() {
                    let q = ExtQuotPoint {
                        w_index: d.ws.mul(d.ws.mul(v, p.w_index), d.ws.inv(v)),
                        w: d.ws.element(d.ws.mul(d.ws.mul(v, p.w_index), d.ws.inv(v))).clone(),
                        t: p.t.act(d.ws.element(v)),
                        component: p.component,
                    };
                    assert_eq!(packet_key(&d.ws, &a.components, &q).unwrap(), k);
                    assert!(same_packet(&d.ws, &a.components, p, &q).unwrap());
                }
            }
        }
    }
}
