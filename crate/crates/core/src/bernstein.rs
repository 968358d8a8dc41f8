//! Bernstein-point data: the centralizer `H = Z_G(im c^s)`, its Weyl group
//! `W^s`, and the residual-characteristic condition on `p`.

use std::collections::BTreeSet;

use serde_json::{json, Value};
use thiserror::Error;

use crate::rootdata::{
    recognize_components, weyl_group, CartanType, FiniteGroup, RootDataError, RootDatum,
};
use crate::torus::TorusPoint;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BernsteinError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("generator {0} is not a pure torsion point of the right rank")]
    BadGenerator(String),
    #[error(transparent)]
    RootData(#[from] RootDataError),
}

/// A Bernstein point given by the finite image of `c^s`.
#[derive(Clone, Debug)]
pub struct BernsteinDatum {
    pub id: String,
    pub ambient: RootDatum,
    pub gens: Vec<TorusPoint>,
    /// Root datum of `H` (same lattices, roots killed by every generator).
    pub h: RootDatum,
    /// `W^s`, the Weyl group of `H`, as matrices on `X^*`.
    pub ws: FiniteGroup,
    /// Order of `{w in W(G) : w fixes every generator}`.
    pub full_stabilizer_order: usize,
    /// Set when the full stabilizer is strictly larger than `W^s`.
    pub stabilizer_exceeds_ws: bool,
}

impl BernsteinDatum {
    pub fn to_json(&self) -> Value {
        json!({
            "id": self.id,
            "ambient": self.ambient.label,
            "generators": self.gens.iter().map(|g| g.to_json()).collect::<Vec<_>>(),
            "h_types": recognize_components(&self.h).iter().map(|c| c.cartan.to_string()).collect::<Vec<_>>(),
            "h_num_roots": self.h.num_roots(),
            "ws_order": self.ws.order(),
            "full_stabilizer_order": self.full_stabilizer_order,
            "stabilizer_exceeds_ws": self.stabilizer_exceeds_ws,
        })
    }
}

/// `H = Z_G(im c^s)` for the given torsion generators of `im c^s`.
pub fn centralizer_subdatum(
    g: &RootDatum,
    gens: &[TorusPoint],
) -> Result<BernsteinDatum, BernsteinError> {
    for t in gens {
        if !t.is_pure_torsion() || t.rank() != g.rank {
            return Err(BernsteinError::BadGenerator(t.display()));
        }
    }
    let kept: BTreeSet<usize> = (0..g.num_roots())
        .filter(|&i| gens.iter().all(|t| t.kills(&g.roots[i])))
        .collect();
    let gens_label = gens.iter().map(|t| t.display()).collect::<Vec<_>>().join(";");
    let h = if kept.len() == g.num_roots() {
        g.clone()
    } else {
        g.subdatum(&kept, format!("Z({})[{}]", g.label, gens_label))
    };
    let ws = weyl_group(&h)?;
    let wg = weyl_group(g)?;
    let full_stabilizer_order = wg
        .elements()
        .iter()
        .filter(|w| gens.iter().all(|t| &t.act(w) == t))
        .count();
    let id = if gens.is_empty() {
        format!("{}/iwahori", g.label)
    } else {
        format!("{}/{}", g.label, gens_label)
    };
    Ok(BernsteinDatum {
        id,
        ambient: g.clone(),
        gens: gens.to_vec(),
        stabilizer_exceeds_ws: full_stabilizer_order > ws.order(),
        full_stabilizer_order,
        h,
        ws,
    })
}

/// The Iwahori-spherical point: `c^s` trivial, `H = G`.
pub fn iwahori_datum(g: &RootDatum) -> Result<BernsteinDatum, BernsteinError> {
    centralizer_subdatum(g, &[])
}

/// Outcome of the residual-characteristic check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CcVerdict {
    pub ok: bool,
    /// `(factor type, excluded prime)` pairs that fail.
    pub violations: Vec<(CartanType, u64)>,
}

impl CcVerdict {
    pub fn to_json(&self) -> Value {
        json!({
            "ok": self.ok,
            "violations": self.violations.iter().map(|(t, p)| json!({"type": t.to_string(), "p": p})).collect::<Vec<_>>(),
        })
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Whether `p` is allowed for one irreducible factor.
fn factor_allows(t: &CartanType, p: u64) -> bool {
    match t.family {
        'A' => p > t.rank as u64 + 1,
        'B' | 'C' | 'D' => p != 2,
        'F' => p != 2 && p != 3,
        'G' => ![2, 3, 5].contains(&p),
        'E' if t.rank == 6 => ![2, 3, 5].contains(&p),
        'E' => ![2, 3, 5, 7].contains(&p),
        _ => false,
    }
}

/// Checks the residual characteristic `p` against every irreducible factor.
pub fn check_condition_cc(types: &[CartanType], p: u64) -> Result<CcVerdict, BernsteinError> {
    if !is_prime(p) {
        return Err(BernsteinError::NotPrime(p));
    }
    let violations: Vec<(CartanType, u64)> = types
        .iter()
        .filter(|t| !factor_allows(t, p))
        .map(|t| (*t, p))
        .collect();
    Ok(CcVerdict {
        ok: violations.is_empty(),
        violations,
    })
}
