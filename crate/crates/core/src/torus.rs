//! Exact points and subtorus cosets of a complex torus `T = X_* ⊗ C^x`.
//!
//! A point is `exp(2 pi i theta) * prod_s z_s^{c_s}` where `theta` is a
//! rational torsion vector taken modulo `Z^n` and every `z_s` is a formal
//! symbol: compact symbols stand for generic elements of the unit circle,
//! split symbols for generic positive reals. Symbol `0` is reserved for
//! `nu = q^{1/2}`. A character `chi` of `T` takes the value
//! `exp(2 pi i <chi, theta>) * prod_s z_s^{<chi, c_s>}` at such a point.

use std::collections::{BTreeSet, HashSet};
use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::lattice::{
    coinvariant_decomposition, dot_int_rational, frac_part, orthogonal_lattice, reduce_mod_one,
    saturate, to_rational, IntMatrix, QVec,
};
use crate::rootdata::{FiniteGroup, RootDatum, WeylElement};

/// The split symbol reserved for `q^{1/2}`.
pub const NU: u64 = 0;

static NEXT_SYMBOL: AtomicU64 = AtomicU64::new(1);

/// A symbol id never handed out before in this process.
pub fn fresh_symbol() -> u64 {
    NEXT_SYMBOL.fetch_add(1, Ordering::Relaxed)
}

pub type Symbols = Vec<(u64, QVec)>;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorusPoint {
    torsion: QVec,
    compact: Symbols,
    split: Symbols,
}

fn canonical_symbols(mut s: Symbols) -> Symbols {
    s.sort_by_key(|a| a.0);
    let mut out: Symbols = Vec::with_capacity(s.len());
    for (id, c) in s {
        match out.last_mut() {
            Some((last, acc)) if *last == id => {
                for (x, y) in acc.iter_mut().zip(&c) {
                    *x += y;
                }
            }
            _ => out.push((id, c)),
        }
    }
    out.retain(|(_, c)| c.iter().any(|x| !x.is_zero()));
    out
}

fn fmt_fraction(q: &BigRational) -> String {
    if q.is_integer() {
        q.to_integer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub(crate) fn qvec_json(v: &[BigRational]) -> Value {
    Value::Array(v.iter().map(|q| Value::String(fmt_fraction(q))).collect())
}

pub(crate) fn qvec_string(v: &[BigRational]) -> String {
    format!(
        "({})",
        v.iter().map(fmt_fraction).collect::<Vec<_>>().join(",")
    )
}

/// The value of a character at a torus point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharValue {
    /// Angle in `[0, 1)` of the root-of-unity part.
    pub angle: BigRational,
    /// Exponent of each compact symbol.
    pub compact: Vec<(u64, BigRational)>,
    /// Exponent of each split symbol.
    pub split: Vec<(u64, BigRational)>,
}

impl CharValue {
    pub fn is_one(&self) -> bool {
        self.angle.is_zero() && self.compact.is_empty() && self.split.is_empty()
    }
}

impl TorusPoint {
    pub fn new(torsion: QVec, compact: Symbols, split: Symbols) -> Self {
        TorusPoint {
            torsion: reduce_mod_one(&torsion),
            compact: canonical_symbols(compact),
            split: canonical_symbols(split),
        }
    }

    pub fn from_torsion(torsion: QVec) -> Self {
        Self::new(torsion, Vec::new(), Vec::new())
    }

    /// Parses a torsion vector of fractions such as `1/2,0` or `1/4`.
    pub fn parse_torsion(s: &str) -> Option<Self> {
        let v: Option<QVec> = s
            .split(',')
            .map(|x| {
                let x = x.trim();
                match x.split_once('/') {
                    Some((a, b)) => {
                        let a: BigInt = a.trim().parse().ok()?;
                        let b: BigInt = b.trim().parse().ok()?;
                        if b.is_zero() {
                            None
                        } else {
                            Some(BigRational::new(a, b))
                        }
                    }
                    None => x.parse::<BigInt>().ok().map(BigRational::from_integer),
                }
            })
            .collect();
        v.map(Self::from_torsion)
    }

    pub fn identity(rank: usize) -> Self {
        Self::from_torsion(vec![BigRational::zero(); rank])
    }

    pub fn rank(&self) -> usize {
        self.torsion.len()
    }

    pub fn torsion(&self) -> &QVec {
        &self.torsion
    }

    pub fn compact_symbols(&self) -> &Symbols {
        &self.compact
    }

    pub fn split_symbols(&self) -> &Symbols {
        &self.split
    }

    pub fn is_pure_torsion(&self) -> bool {
        self.compact.is_empty() && self.split.is_empty()
    }

    /// All coordinates have modulus one.
    pub fn is_compact(&self) -> bool {
        self.split.is_empty()
    }

    /// Order of the torsion part (lcm of denominators).
    pub fn torsion_order(&self) -> BigInt {
        self.torsion
            .iter()
            .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
    }

    /// Image under a Weyl element (acting on `X_*` by its coaction).
    pub fn act(&self, w: &WeylElement) -> Self {
        self.act_matrix(&w.coaction)
    }

    pub fn act_matrix(&self, coaction: &IntMatrix) -> Self {
        let map = |s: &Symbols| -> Symbols {
            s.iter()
                .map(|(id, c)| (*id, coaction.apply_rational(c)))
                .collect()
        };
        TorusPoint::new(
            coaction.apply_rational(&self.torsion),
            map(&self.compact),
            map(&self.split),
        )
    }

    /// Pointwise product in `T`.
    pub fn mul(&self, other: &TorusPoint) -> Self {
        let mut compact = self.compact.clone();
        compact.extend(other.compact.iter().cloned());
        let mut split = self.split.clone();
        split.extend(other.split.iter().cloned());
        TorusPoint::new(
            self.torsion.iter().zip(&other.torsion).map(|(a, b)| a + b).collect(),
            compact,
            split,
        )
    }

    /// `self * h(nu)` for a rational cocharacter `h`.
    pub fn times_cocharacter_at_nu(&self, h: &[BigRational]) -> Self {
        let mut split = self.split.clone();
        split.push((NU, h.to_vec()));
        TorusPoint::new(self.torsion.clone(), self.compact.clone(), split)
    }

    pub fn eval(&self, chi: &[BigInt]) -> CharValue {
        let exps = |s: &Symbols| -> Vec<(u64, BigRational)> {
            s.iter()
                .map(|(id, c)| (*id, dot_int_rational(chi, c)))
                .filter(|(_, e)| !e.is_zero())
                .collect()
        };
        CharValue {
            angle: frac_part(&dot_int_rational(chi, &self.torsion)),
            compact: exps(&self.compact),
            split: exps(&self.split),
        }
    }

    /// Whether `chi(t) = 1`.
    pub fn kills(&self, chi: &[BigInt]) -> bool {
        self.eval(chi).is_one()
    }

    pub fn to_json(&self) -> Value {
        let syms = |s: &Symbols| -> Value {
            Value::Array(
                s.iter()
                    .map(|(id, c)| json!({"id": id, "coeffs": qvec_json(c)}))
                    .collect(),
            )
        };
        json!({
            "torsion": qvec_json(&self.torsion),
            "compact_symbols": syms(&self.compact),
            "split_symbols": syms(&self.split),
        })
    }

    /// Short human-readable form, e.g. `(1/2,0)` or `(0)*nu^(1)`.
    pub fn display(&self) -> String {
        let mut s = qvec_string(&self.torsion);
        for (id, c) in &self.compact {
            s.push_str(&format!("*z{id}^{}", qvec_string(c)));
        }
        for (id, c) in &self.split {
            if *id == NU {
                s.push_str(&format!("*nu^{}", qvec_string(c)));
            } else {
                s.push_str(&format!("*r{id}^{}", qvec_string(c)));
            }
        }
        s
    }
}

/// `w . t`.
pub fn weyl_action(w: &WeylElement, t: &TorusPoint) -> TorusPoint {
    t.act(w)
}

/// A coset `base * S` of a subtorus `S = exp(lattice ⊗ C)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TorusCoset {
    pub base: TorusPoint,
    /// Saturated integer basis of the lattice spanning `S` inside `X_*`.
    pub lattice: Vec<Vec<BigInt>>,
}

impl TorusCoset {
    pub fn new(base: TorusPoint, lattice: Vec<Vec<BigInt>>) -> Self {
        assert!(base.is_pure_torsion(), "coset base must be a torsion point");
        let n = base.rank();
        TorusCoset {
            base,
            lattice: saturate(&lattice, n),
        }
    }

    pub fn point(base: TorusPoint) -> Self {
        Self::new(base, Vec::new())
    }

    pub fn dim(&self) -> usize {
        self.lattice.len()
    }

    fn annihilator(&self) -> Vec<Vec<BigInt>> {
        orthogonal_lattice(&self.lattice, self.base.rank())
    }

    pub fn contains(&self, p: &TorusPoint) -> bool {
        let diff: QVec = p
            .torsion()
            .iter()
            .zip(self.base.torsion())
            .map(|(a, b)| a - b)
            .collect();
        self.annihilator().iter().all(|chi| {
            dot_int_rational(chi, &diff).is_integer()
                && p
                    .compact_symbols()
                    .iter()
                    .chain(p.split_symbols())
                    .all(|(_, c)| dot_int_rational(chi, c).is_zero())
        })
    }

    pub fn same_coset(&self, other: &TorusCoset) -> bool {
        if self.dim() != other.dim() {
            return false;
        }
        let ann = self.annihilator();
        let same_span = other
            .lattice
            .iter()
            .all(|v| ann.iter().all(|chi| crate::lattice::dot_int(chi, v).is_zero()));
        same_span && self.contains(&other.base)
    }

    pub fn act(&self, w: &WeylElement) -> Self {
        let lattice = self.lattice.iter().map(|v| w.coaction.apply(v)).collect();
        TorusCoset::new(self.base.act(w), lattice)
    }

    /// Whether `w` fixes every point of the coset.
    pub fn fixed_pointwise_by(&self, w: &WeylElement) -> bool {
        self.lattice.iter().all(|v| &w.coaction.apply(v) == v) && self.base.act(w) == self.base
    }

    /// The base point times one fresh compact symbol per lattice direction.
    pub fn generic_point(&self) -> TorusPoint {
        let compact = self
            .lattice
            .iter()
            .map(|v| (fresh_symbol(), to_rational(v)))
            .collect();
        TorusPoint::new(self.base.torsion().clone(), compact, Vec::new())
    }

    pub fn to_json(&self) -> Value {
        let lattice: Vec<Value> = self
            .lattice
            .iter()
            .map(|v| Value::Array(v.iter().map(|x| json!(i64::try_from(x).unwrap())).collect()))
            .collect();
        json!({"base": qvec_json(self.base.torsion()), "lattice": lattice})
    }
}

/// The connected components of `T^w = {t : w t = t}`.
pub fn fixed_point_components(w: &WeylElement) -> Vec<TorusCoset> {
    let n = w.rank();
    let m = &w.matrix - &IntMatrix::identity(n);
    let dec = coinvariant_decomposition(&m).expect("square matrix");
    let mut bases: Vec<QVec> = vec![vec![BigRational::zero(); n]];
    for (d, lift) in dec.torsion.iter().zip(&dec.torsion_lifts) {
        let d = usize::try_from(d).expect("small torsion");
        let mut next = Vec::with_capacity(bases.len() * d);
        for b in &bases {
            for k in 0..d {
                let kq = BigRational::from_integer(BigInt::from(k));
                next.push(b.iter().zip(lift).map(|(x, l)| x + &kq * l).collect());
            }
        }
        bases = next;
    }
    let mut cosets: Vec<TorusCoset> = bases
        .into_iter()
        .map(|b| TorusCoset::new(TorusPoint::from_torsion(b), dec.free_directions.clone()))
        .collect();
    cosets.sort_by(|a, b| a.base.cmp(&b.base));
    cosets
}

/// Stabilizer data of a torus point.
#[derive(Clone, Debug)]
pub struct Stabilizer {
    /// `W_t = {w : w t = t}`.
    pub full: FiniteGroup,
    /// The reflection subgroup `W^{M°}` generated by `s_alpha` with `alpha(t) = 1`.
    pub reflection: FiniteGroup,
    /// Indices of the roots with `alpha(t) = 1`.
    pub roots: BTreeSet<usize>,
}

impl Stabilizer {
    /// `W_t` is generated by reflections (the centralizer is connected at the Weyl level).
    pub fn is_reflection_group(&self) -> bool {
        self.full.order() == self.reflection.order()
    }
}

/// `W_t` and its reflection part, for `W` the Weyl group of `rd`.
pub fn stabilizer_subgroup(rd: &RootDatum, w: &FiniteGroup, t: &TorusPoint) -> Stabilizer {
    let full = w
        .filter_subgroup(|g| &t.act(g) == t)
        .expect("stabilizer is a subgroup");
    let roots: BTreeSet<usize> = (0..rd.num_roots())
        .filter(|&i| t.kills(&rd.roots[i]))
        .collect();
    let gens: Vec<usize> = roots
        .iter()
        .filter(|&&i| rd.positive[i])
        .map(|&i| {
            w.index_of(&rd.reflection_matrix(i))
                .expect("reflection of the datum lies in its Weyl group")
        })
        .collect();
    let reflection = w.generated_subgroup(&gens);
    Stabilizer {
        full,
        reflection,
        roots,
    }
}

/// The orbit `W t`, sorted and without repetitions.
pub fn orbit(w: &FiniteGroup, t: &TorusPoint) -> Vec<TorusPoint> {
    let set: BTreeSet<TorusPoint> = w.elements().iter().map(|g| t.act(g)).collect();
    set.into_iter().collect()
}

/// Canonical representative of `W t`: the least element of the orbit.
pub fn canonical_orbit_rep(w: &FiniteGroup, t: &TorusPoint) -> TorusPoint {
    w.elements()
        .iter()
        .map(|g| t.act(g))
        .min()
        .expect("nonempty group")
}

/// Representatives (canonical, sorted) of the `W`-orbits of torsion points of
/// order at most `bound`.
pub fn torsion_orbit_reps(w: &FiniteGroup, rank: usize, bound: u32) -> Vec<TorusPoint> {
    let l: u64 = (1..=bound.max(1) as u64).fold(1, |acc, k| acc.lcm(&k));
    let mut seen: HashSet<TorusPoint> = HashSet::new();
    let mut reps = Vec::new();
    let total = (l as usize).pow(rank as u32);
    for code in 0..total {
        let mut c = code;
        let mut coords = Vec::with_capacity(rank);
        for _ in 0..rank {
            coords.push((c % l as usize) as u64);
            c /= l as usize;
        }
        let g = coords.iter().fold(l, |acc, &x| acc.gcd(&x));
        if l / g > bound as u64 {
            continue;
        }
        let t = TorusPoint::from_torsion(
            coords
                .iter()
                .map(|&x| BigRational::new(BigInt::from(x), BigInt::from(l)))
                .collect(),
        );
        if seen.contains(&t) {
            continue;
        }
        let orb = orbit(w, &t);
        reps.push(orb[0].clone());
        seen.extend(orb);
    }
    reps.sort();
    reps
}
