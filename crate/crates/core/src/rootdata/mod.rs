//! Root data, explicit Weyl groups and their character theory.

mod cartan;
mod chartable;
mod group;

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lattice::{dot_int, dot_int_rational, IntMatrix, QVec};

pub use cartan::{recognize_components, Component};
pub use chartable::{
    character_table, induce, induce_and_decompose, restrict, CharacterTable, ClassFunction,
};
pub use group::{
    conjugacy_classes, weyl_group, weyl_group_elements, ConjugacyClass, FiniteGroup, WeylElement,
    DEFAULT_GROUP_CAP,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootDataError {
    #[error("cannot parse root datum descriptor `{0}`")]
    Parse(String),
    #[error("unsupported type {0}: supported are products of A1..A4, B2, C2, B3, C3, G2 of total semisimple rank at most 4")]
    UnsupportedType(String),
    #[error("group order {order} exceeds the cap {cap}")]
    GroupTooLarge { order: u64, cap: u64 },
    #[error("not a subgroup: {0}")]
    NotSubgroup(String),
}

/// Family letter and rank of an irreducible Cartan type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CartanType {
    pub family: char,
    pub rank: usize,
}

impl CartanType {
    pub fn new(family: char, rank: usize) -> Self {
        CartanType { family, rank }
    }

    /// Types for which groups, tables and Springer data are materialized.
    pub fn is_materialized(&self) -> bool {
        matches!(
            (self.family, self.rank),
            ('A', 1..=4) | ('B', 2..=3) | ('C', 2..=3) | ('G', 2)
        )
    }

    /// Types that are valid Dynkin types at all (used by the residue checker).
    pub fn is_valid(&self) -> bool {
        match self.family {
            'A' => self.rank >= 1,
            'B' | 'C' => self.rank >= 2,
            'D' => self.rank >= 4,
            'E' => (6..=8).contains(&self.rank),
            'F' => self.rank == 4,
            'G' => self.rank == 2,
            _ => false,
        }
    }

    pub fn weyl_order(&self) -> u64 {
        let fact = |n: usize| (1..=n as u64).product::<u64>();
        match self.family {
            'A' => fact(self.rank + 1),
            'B' | 'C' => (1u64 << self.rank) * fact(self.rank),
            'D' => (1u64 << (self.rank - 1)) * fact(self.rank),
            'E' => match self.rank {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            'F' => 1152,
            'G' => 12,
            _ => 0,
        }
    }

    /// Cartan matrix `a[i][j] = <alpha_j, alpha_i^vee>` in Bourbaki numbering
    /// (for G2, `alpha_1` is short).
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut a = vec![vec![0i64; n]; n];
        for i in 0..n {
            a[i][i] = 2;
            if i + 1 < n {
                a[i][i + 1] = -1;
                a[i + 1][i] = -1;
            }
        }
        match self.family {
            'B' => a[n - 1][n - 2] = -2,
            'C' => a[n - 2][n - 1] = -2,
            'G' => a[0][1] = -3,
            _ => {}
        }
        a
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = RootDataError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut chars = s.chars();
        let family = chars
            .next()
            .ok_or_else(|| RootDataError::Parse(s.to_string()))?
            .to_ascii_uppercase();
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| RootDataError::Parse(s.to_string()))?;
        if !"ABCDEFG".contains(family) {
            return Err(RootDataError::Parse(s.to_string()));
        }
        let t = CartanType::new(family, rank);
        if !t.is_valid() {
            return Err(RootDataError::UnsupportedType(s.to_string()));
        }
        Ok(t)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Isogeny {
    SimplyConnected,
    Adjoint,
    /// `GL_{n+1}`-style lattice for type `A_n`: `X^* = Z^{n+1}`.
    Gl,
}

impl Isogeny {
    pub fn tag(&self) -> &'static str {
        match self {
            Isogeny::SimplyConnected => "sc",
            Isogeny::Adjoint => "ad",
            Isogeny::Gl => "gl",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorDescriptor {
    pub cartan: CartanType,
    pub isogeny: Isogeny,
}

/// Parsed form of a descriptor `TYPE[:isogeny][*TYPE...][+central=k]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DatumDescriptor {
    pub factors: Vec<FactorDescriptor>,
    pub central: usize,
}

impl DatumDescriptor {
    /// Parses a descriptor. Accepts the classical-group aliases
    /// `SLn`, `GLn`, `PGLn`, `Sp4`, `Sp6`, `SO5`, `SO7`.
    pub fn parse(s: &str) -> Result<Self, RootDataError> {
        let s = s.trim();
        if s.is_empty() {
            return Err(RootDataError::Parse(s.to_string()));
        }
        let (body, central) = match s.split_once('+') {
            Some((b, c)) => {
                let k = c
                    .trim()
                    .strip_prefix("central=")
                    .and_then(|k| k.parse::<usize>().ok())
                    .ok_or_else(|| RootDataError::Parse(s.to_string()))?;
                (b, k)
            }
            None => (s, 0),
        };
        let mut factors = Vec::new();
        for part in body.split('*') {
            let part = part.trim();
            if let Some(f) = parse_alias(part)? {
                factors.push(f);
                continue;
            }
            let (ty, iso) = match part.split_once(':') {
                Some((t, i)) => (t, Some(i)),
                None => (part, None),
            };
            let cartan: CartanType = ty.parse()?;
            let isogeny = match iso.map(|i| i.to_ascii_lowercase()) {
                None => Isogeny::SimplyConnected,
                Some(i) if i == "sc" => Isogeny::SimplyConnected,
                Some(i) if i == "ad" => Isogeny::Adjoint,
                Some(i) if i == "gl" && cartan.family == 'A' => Isogeny::Gl,
                Some(_) => return Err(RootDataError::Parse(s.to_string())),
            };
            factors.push(FactorDescriptor { cartan, isogeny });
        }
        Ok(DatumDescriptor { factors, central })
    }

    pub fn semisimple_rank(&self) -> usize {
        self.factors.iter().map(|f| f.cartan.rank).sum()
    }

    pub fn check_supported(&self) -> Result<(), RootDataError> {
        for f in &self.factors {
            if !f.cartan.is_materialized() {
                return Err(RootDataError::UnsupportedType(f.cartan.to_string()));
            }
        }
        if self.semisimple_rank() > 4 {
            return Err(RootDataError::UnsupportedType(format!(
                "semisimple rank {} > 4",
                self.semisimple_rank()
            )));
        }
        Ok(())
    }

    pub fn weyl_order(&self) -> u64 {
        self.factors.iter().map(|f| f.cartan.weyl_order()).product()
    }

    pub fn cartan_types(&self) -> Vec<CartanType> {
        self.factors.iter().map(|f| f.cartan).collect()
    }
}

fn parse_alias(part: &str) -> Result<Option<FactorDescriptor>, RootDataError> {
    let upper = part.to_ascii_uppercase();
    let num = |prefix: &str| upper.strip_prefix(prefix).and_then(|n| n.parse::<usize>().ok());
    let factor = |family, rank, isogeny| {
        Some(FactorDescriptor {
            cartan: CartanType::new(family, rank),
            isogeny,
        })
    };
    let out = if let Some(n) = num("PGL") {
        factor('A', n.saturating_sub(1), Isogeny::Adjoint)
    } else if let Some(n) = num("SL") {
        factor('A', n.saturating_sub(1), Isogeny::SimplyConnected)
    } else if let Some(n) = num("GL") {
        factor('A', n.saturating_sub(1), Isogeny::Gl)
    } else if let Some(n) = num("SP") {
        if n % 2 != 0 || n < 4 {
            return Err(RootDataError::UnsupportedType(part.to_string()));
        }
        factor('C', n / 2, Isogeny::SimplyConnected)
    } else if let Some(n) = num("SO") {
        if n % 2 == 0 || n < 5 {
            return Err(RootDataError::UnsupportedType(part.to_string()));
        }
        factor('B', n / 2, Isogeny::Adjoint)
    } else {
        None
    };
    if let Some(f) = &out {
        if f.cartan.rank == 0 {
            return Err(RootDataError::Parse(part.to_string()));
        }
    }
    Ok(out)
}

/// Root datum on `X^* = Z^rank` and `X_* = Z^rank` with the dot pairing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootDatum {
    pub rank: usize,
    pub roots: Vec<Vec<BigInt>>,
    pub coroots: Vec<Vec<BigInt>>,
    pub positive: Vec<bool>,
    pub simple_indices: Vec<usize>,
    pub label: String,
    /// Declared irreducible components (type and root set), used to keep the
    /// declared name of `B2` versus `C2`.
    pub type_hints: Vec<(CartanType, BTreeSet<Vec<BigInt>>)>,
}

impl RootDatum {
    pub fn root_index(&self, root: &[BigInt]) -> Option<usize> {
        self.roots.iter().position(|r| r.as_slice() == root)
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn positive_indices(&self) -> Vec<usize> {
        (0..self.roots.len()).filter(|&i| self.positive[i]).collect()
    }

    /// Reflection `s_alpha` acting on `X^*`, as a matrix acting on column vectors.
    pub fn reflection_matrix(&self, idx: usize) -> IntMatrix {
        let n = self.rank;
        let (a, c) = (&self.roots[idx], &self.coroots[idx]);
        let mut m = IntMatrix::identity(n);
        // s(x) = x - <x, c> a  => column j: e_j - c_j a
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] -= &a[i] * &c[j];
            }
        }
        m
    }

    /// Pairing `<alpha, lambda>` for a rational cocharacter.
    pub fn pair_root(&self, idx: usize, lambda: &[BigRational]) -> BigRational {
        dot_int_rational(&self.roots[idx], lambda)
    }

    /// The dual datum: roots and coroots exchanged.
    pub fn dual(&self) -> RootDatum {
        let mut d = RootDatum {
            rank: self.rank,
            roots: self.coroots.clone(),
            coroots: self.roots.clone(),
            positive: self.positive.clone(),
            simple_indices: self.simple_indices.clone(),
            label: format!("dual({})", self.label),
            type_hints: Vec::new(),
        };
        d.type_hints = self
            .type_hints
            .iter()
            .map(|(t, set)| {
                let dual_type = match t.family {
                    'B' => CartanType::new('C', t.rank),
                    'C' => CartanType::new('B', t.rank),
                    _ => *t,
                };
                let coset: BTreeSet<Vec<BigInt>> = set
                    .iter()
                    .filter_map(|r| self.root_index(r))
                    .map(|i| self.coroots[i].clone())
                    .collect();
                (dual_type, coset)
            })
            .collect();
        d
    }

    /// Sub-root-datum on the same lattices with the given roots (indices into
    /// `self.roots`). Positivity is inherited; simple roots are recomputed.
    pub fn subdatum(&self, indices: &BTreeSet<usize>, label: String) -> RootDatum {
        let idx: Vec<usize> = indices.iter().copied().collect();
        let roots: Vec<Vec<BigInt>> = idx.iter().map(|&i| self.roots[i].clone()).collect();
        let coroots: Vec<Vec<BigInt>> = idx.iter().map(|&i| self.coroots[i].clone()).collect();
        let positive: Vec<bool> = idx.iter().map(|&i| self.positive[i]).collect();
        let simple_indices = simple_roots_of(&roots, &positive);
        let root_set: BTreeSet<Vec<BigInt>> = roots.iter().cloned().collect();
        let type_hints = self
            .type_hints
            .iter()
            .filter(|(_, set)| set.iter().all(|r| root_set.contains(r)))
            .cloned()
            .collect();
        RootDatum {
            rank: self.rank,
            roots,
            coroots,
            positive,
            simple_indices,
            label,
            type_hints,
        }
    }

    /// The maximal torus alone (empty root system) on the same lattices.
    pub fn torus_part(&self) -> RootDatum {
        self.subdatum(&BTreeSet::new(), format!("T({})", self.label))
    }

    /// Makes a rational cocharacter dominant for this datum's positive system.
    pub fn make_dominant(&self, h: &[BigRational]) -> QVec {
        let mut h = h.to_vec();
        loop {
            let neg = self
                .simple_indices
                .iter()
                .copied()
                .find(|&i| self.pair_root(i, &h).is_negative());
            let Some(i) = neg else { return h };
            let p = self.pair_root(i, &h);
            for (x, c) in h.iter_mut().zip(&self.coroots[i]) {
                *x -= &p * BigRational::from_integer(c.clone());
            }
        }
    }

    /// Structural checks: pairing 2, reflections permute roots, coroots
    /// compatible. Returns a list of violations (empty if valid).
    pub fn validate(&self) -> Vec<String> {
        let mut problems = Vec::new();
        let set: HashMap<&Vec<BigInt>, usize> =
            self.roots.iter().enumerate().map(|(i, r)| (r, i)).collect();
        for (i, (a, c)) in self.roots.iter().zip(&self.coroots).enumerate() {
            if dot_int(a, c) != BigInt::from(2) {
                problems.push(format!("<alpha_{i}, alpha_{i}^vee> != 2"));
            }
            let s = self.reflection_matrix(i);
            for b in &self.roots {
                if !set.contains_key(&s.apply(b)) {
                    problems.push(format!("s_{i} does not preserve the root set"));
                    break;
                }
            }
        }
        problems
    }

    pub fn to_json(&self) -> serde_json::Value {
        let vecs = |v: &Vec<Vec<BigInt>>| -> Vec<Vec<i64>> {
            v.iter()
                .map(|r| r.iter().map(|x| i64::try_from(x).unwrap()).collect())
                .collect()
        };
        serde_json::json!({
            "label": self.label,
            "rank": self.rank,
            "roots": vecs(&self.roots),
            "coroots": vecs(&self.coroots),
            "simple_indices": self.simple_indices,
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<RootDatum, RootDataError> {
        let bad = || RootDataError::Parse("invalid root datum JSON".into());
        let rank = v["rank"].as_u64().ok_or_else(bad)? as usize;
        let read = |key: &str| -> Result<Vec<Vec<BigInt>>, RootDataError> {
            let arr = v[key].as_array().ok_or_else(bad)?;
            arr.iter()
                .map(|r| {
                    let r = r.as_array().ok_or_else(bad)?;
                    if r.len() != rank {
                        return Err(bad());
                    }
                    r.iter()
                        .map(|x| x.as_i64().map(BigInt::from).ok_or_else(bad))
                        .collect()
                })
                .collect()
        };
        let roots = read("roots")?;
        let coroots = read("coroots")?;
        if roots.len() != coroots.len() {
            return Err(bad());
        }
        let simple_indices: Vec<usize> = v["simple_indices"]
            .as_array()
            .ok_or_else(bad)?
            .iter()
            .map(|x| x.as_u64().map(|i| i as usize).ok_or_else(bad))
            .collect::<Result<_, _>>()?;
        // positivity: nonnegative combination of the simple roots
        let positive = positivity_from_simples(&roots, &simple_indices).ok_or_else(bad)?;
        let rd = RootDatum {
            rank,
            roots,
            coroots,
            positive,
            simple_indices,
            label: v["label"].as_str().unwrap_or("json").to_string(),
            type_hints: Vec::new(),
        };
        if !rd.validate().is_empty() {
            return Err(bad());
        }
        Ok(rd)
    }
}

fn positivity_from_simples(roots: &[Vec<BigInt>], simples: &[usize]) -> Option<Vec<bool>> {
    if simples.is_empty() {
        return if roots.is_empty() { Some(Vec::new()) } else { None };
    }
    let n = roots[0].len();
    // least-squares free: solve on a maximal independent set of coordinates
    let basis: Vec<QVec> = simples
        .iter()
        .map(|&i| roots[i].iter().cloned().map(BigRational::from_integer).collect())
        .collect();
    let k = basis.len();
    // pick k coordinates where the simple roots are independent
    let mut coords = Vec::new();
    for c in 0..n {
        let mut trial = coords.clone();
        trial.push(c);
        let rows: Vec<QVec> = basis
            .iter()
            .map(|b| trial.iter().map(|&t| b[t].clone()).collect())
            .collect();
        if crate::lattice::rational_rank(&rows) == trial.len() {
            coords = trial;
        }
        if coords.len() == k {
            break;
        }
    }
    if coords.len() != k {
        return None;
    }
    let a: Vec<QVec> = coords
        .iter()
        .map(|&c| basis.iter().map(|b| b[c].clone()).collect())
        .collect();
    roots
        .iter()
        .map(|r| {
            let rhs: QVec = coords.iter().map(|&c| BigRational::from_integer(r[c].clone())).collect();
            let x = crate::lattice::solve_rational(&a, &rhs)?;
            if x.iter().all(|v| !v.is_negative()) {
                Some(true)
            } else if x.iter().all(|v| !v.is_positive()) {
                Some(false)
            } else {
                None
            }
        })
        .collect()
}

/// Simple roots of a (possibly non-closed) root subsystem with a given positivity:
/// positive roots that are not the sum of two positive roots of the subsystem.
pub(crate) fn simple_roots_of(roots: &[Vec<BigInt>], positive: &[bool]) -> Vec<usize> {
    let pos: Vec<usize> = (0..roots.len()).filter(|&i| positive[i]).collect();
    let pos_set: HashMap<&Vec<BigInt>, usize> = pos.iter().map(|&i| (&roots[i], i)).collect();
    let mut simple = Vec::new();
    'outer: for &i in &pos {
        for &j in &pos {
            if j == i {
                continue;
            }
            let diff: Vec<BigInt> = roots[i].iter().zip(&roots[j]).map(|(a, b)| a - b).collect();
            if pos_set.contains_key(&diff) {
                continue 'outer;
            }
        }
        simple.push(i);
    }
    simple
}

/// Builds the root datum named by a descriptor.
pub fn build_root_datum(descriptor: &str) -> Result<RootDatum, RootDataError> {
    let parsed = DatumDescriptor::parse(descriptor)?;
    parsed.check_supported()?;
    Ok(build_from_descriptor(&parsed, descriptor))
}

/// Dual of the datum named by a descriptor.
pub fn dual_of(descriptor: &str) -> Result<RootDatum, RootDataError> {
    Ok(build_root_datum(descriptor)?.dual())
}

fn build_from_descriptor(parsed: &DatumDescriptor, label: &str) -> RootDatum {
    struct Block {
        dim: usize,
        simple_roots: Vec<Vec<i64>>,
        simple_coroots: Vec<Vec<i64>>,
    }
    let mut blocks = Vec::new();
    for f in &parsed.factors {
        let a = f.cartan.cartan_matrix();
        let r = f.cartan.rank;
        let block = match f.isogeny {
            Isogeny::SimplyConnected => Block {
                dim: r,
                // alpha_j in the fundamental-weight basis: (<alpha_j, alpha_i^vee>)_i
                simple_roots: (0..r).map(|j| (0..r).map(|i| a[i][j]).collect()).collect(),
                simple_coroots: (0..r)
                    .map(|i| (0..r).map(|k| (k == i) as i64).collect())
                    .collect(),
            },
            Isogeny::Adjoint => Block {
                dim: r,
                simple_roots: (0..r)
                    .map(|j| (0..r).map(|k| (k == j) as i64).collect())
                    .collect(),
                simple_coroots: (0..r).map(|i| a[i].clone()).collect(),
            },
            Isogeny::Gl => {
                let e = |i: usize| -> Vec<i64> {
                    (0..=r)
                        .map(|k| {
                            if k == i {
                                1
                            } else if k == i + 1 {
                                -1
                            } else {
                                0
                            }
                        })
                        .collect()
                };
                Block {
                    dim: r + 1,
                    simple_roots: (0..r).map(e).collect(),
                    simple_coroots: (0..r).map(e).collect(),
                }
            }
        };
        blocks.push((f.cartan, block));
    }
    let rank: usize = blocks.iter().map(|(_, b)| b.dim).sum::<usize>() + parsed.central;

    let mut roots = Vec::new();
    let mut coroots = Vec::new();
    let mut positive = Vec::new();
    let mut simple_indices = Vec::new();
    let mut type_hints = Vec::new();
    let mut offset = 0;
    let mut all_pos: Vec<(Vec<BigInt>, Vec<BigInt>, Vec<i64>)> = Vec::new();
    let mut simple_pos_keys = Vec::new();
    for (cartan, b) in &blocks {
        let embed = |v: &Vec<i64>| -> Vec<BigInt> {
            let mut out = vec![BigInt::zero(); rank];
            for (k, x) in v.iter().enumerate() {
                out[offset + k] = BigInt::from(*x);
            }
            out
        };
        let sr: Vec<Vec<BigInt>> = b.simple_roots.iter().map(embed).collect();
        let sc: Vec<Vec<BigInt>> = b.simple_coroots.iter().map(embed).collect();
        let r = sr.len();
        // orbit of the simple (root, coroot, coefficient) triples
        let mut seen: HashMap<Vec<BigInt>, (Vec<BigInt>, Vec<i64>)> = HashMap::new();
        let mut queue = VecDeque::new();
        for i in 0..r {
            let coeff: Vec<i64> = (0..r).map(|k| (k == i) as i64).collect();
            queue.push_back((sr[i].clone(), sc[i].clone(), coeff));
        }
        while let Some((a, c, coeff)) = queue.pop_front() {
            if seen.contains_key(&a) {
                continue;
            }
            seen.insert(a.clone(), (c.clone(), coeff.clone()));
            for i in 0..r {
                let pa = dot_int(&a, &sc[i]);
                let pc = dot_int(&sr[i], &c);
                let na: Vec<BigInt> = a.iter().zip(&sr[i]).map(|(x, y)| x - &pa * y).collect();
                let nc: Vec<BigInt> = c.iter().zip(&sc[i]).map(|(x, y)| x - &pc * y).collect();
                let mut ncoeff = coeff.clone();
                ncoeff[i] -= i64::try_from(&pa).unwrap();
                if !seen.contains_key(&na) {
                    queue.push_back((na, nc, ncoeff));
                }
            }
        }
        let mut block_roots = BTreeSet::new();
        for (a, (c, coeff)) in seen {
            block_roots.insert(a.clone());
            if coeff.iter().all(|&x| x >= 0) {
                all_pos.push((a, c, coeff));
            }
        }
        type_hints.push((*cartan, block_roots));
        simple_pos_keys.extend(sr);
        offset += b.dim;
    }
    // order: positive roots by height then lexicographically, then their negatives
    let height = |c: &Vec<i64>| c.iter().map(|x| x.abs()).sum::<i64>();
    all_pos.sort_by(|x, y| height(&x.2).cmp(&height(&y.2)).then_with(|| y.0.cmp(&x.0)));
    for (a, c, _) in &all_pos {
        roots.push(a.clone());
        coroots.push(c.clone());
        positive.push(true);
    }
    for (a, c, _) in &all_pos {
        roots.push(a.iter().map(|x| -x).collect());
        coroots.push(c.iter().map(|x| -x).collect());
        positive.push(false);
    }
    for s in &simple_pos_keys {
        simple_indices.push(roots.iter().position(|r| r == s).unwrap());
    }
    RootDatum {
        rank,
        roots,
        coroots,
        positive,
        simple_indices,
        label: label.trim().to_string(),
        type_hints,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn sl2_is_the_weight_lattice_datum() {
        let rd = build_root_datum("A1:sc").unwrap();
        assert_eq!(rd.rank, 1);
        assert_eq!(rd.roots, vec![big(&[2]), big(&[-2])]);
        assert_eq!(rd.coroots, vec![big(&[1]), big(&[-1])]);
        assert!(rd.validate().is_empty());
        assert_eq!(build_root_datum("SL2").unwrap().roots, rd.roots);
    }

    #[test]
    fn gl2_roots() {
        let rd = build_root_datum("GL2").unwrap();
        assert_eq!(rd.rank, 2);
        assert_eq!(rd.roots, vec![big(&[1, -1]), big(&[-1, 1])]);
        assert_eq!(rd.coroots, rd.roots);
    }

    #[test]
    fn root_counts() {
        for (d, n) in [("Sp4", 8), ("G2", 12), ("A2", 6), ("B3", 18), ("C3:ad", 18), ("A4", 20)] {
            let rd = build_root_datum(d).unwrap();
            assert_eq!(rd.num_roots(), n, "{d}");
            assert!(rd.validate().is_empty(), "{d}");
            assert_eq!(rd.simple_indices.len(), rd.type_hints.iter().map(|t| t.0.rank).sum::<usize>());
        }
    }

    #[test]
    fn products_and_central_tori() {
        let rd = build_root_datum("A1*A1+central=1").unwrap();
        assert_eq!(rd.rank, 3);
        assert_eq!(rd.num_roots(), 4);
        assert!(rd.validate().is_empty());
    }

    #[test]
    fn unsupported_types() {
        assert!(matches!(build_root_datum("E6"), Err(RootDataError::UnsupportedType(_))));
        assert!(matches!(build_root_datum("F4"), Err(RootDataError::UnsupportedType(_))));
        assert!(matches!(build_root_datum("A5"), Err(RootDataError::UnsupportedType(_))));
        assert!(matches!(build_root_datum("A2*A3"), Err(RootDataError::UnsupportedType(_))));
        assert!(matches!(build_root_datum("Q7"), Err(RootDataError::Parse(_))));
        assert!(matches!(build_root_datum("A2:xx"), Err(RootDataError::Parse(_))));
    }

    #[test]
    fn dual_swaps_roots_and_coroots() {
        let rd = build_root_datum("SL2").unwrap();
        let d = rd.dual();
        assert_eq!(d.roots, vec![big(&[1]), big(&[-1])]);
        assert_eq!(d.dual().roots, rd.roots);
        let sp4 = build_root_datum("Sp4").unwrap().dual();
        assert!(sp4.validate().is_empty());
        assert_eq!(sp4.type_hints[0].0, CartanType::new('B', 2));
    }

    #[test]
    fn json_round_trip() {
        let rd = build_root_datum("G2").unwrap();
        let back = RootDatum::from_json(&rd.to_json()).unwrap();
        assert_eq!(back.roots, rd.roots);
        assert_eq!(back.positive, rd.positive);
        assert_eq!(back.simple_indices, rd.simple_indices);
    }

    #[test]
    fn dominant_conjugate() {
        let rd = build_root_datum("SL3").unwrap();
        let h: QVec = vec![BigRational::from_integer((-1).into()), BigRational::zero()];
        let d = rd.make_dominant(&h);
        for &i in &rd.simple_indices {
            assert!(!rd.pair_root(i, &d).is_negative());
        }
    }
}
