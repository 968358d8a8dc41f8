//! Named irreducible characters of the Weyl groups of the supported types,
//! evaluated through the action of an element on one irreducible component.
//!
//! Names follow Lusztig's labelling: partitions for `A`, bipartitions
//! `alpha.beta` for `B`/`C`, and `phiD,b` for `G2`.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::lattice::IntMatrix;
use crate::rootdata::{Component, RootDatum};

/// Conjugacy data of an element restricted to one component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum LocalShape {
    /// Cycle type of a permutation of `r + 1` letters.
    Perm(Vec<usize>),
    /// Signed permutation: lengths of positive and of negative cycles.
    Signed { pos: Vec<usize>, neg: Vec<usize> },
    G2(G2Elt),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum G2Elt {
    Identity,
    Rot6,
    Rot3,
    MinusOne,
    ShortRefl,
    LongRefl,
}

/// Partitions of `n`, largest first in reverse lexicographic order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for k in (1..=max.min(n)).rev() {
            cur.push(k);
            go(n - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn bipartitions(n: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut out = Vec::new();
    for k in (0..=n).rev() {
        for a in partitions(k) {
            for b in partitions(n - k) {
                out.push((a.clone(), b));
            }
        }
    }
    out
}

/// `(3,2^2,1)` style name.
pub fn partition_name(p: &[usize]) -> String {
    let mut parts = Vec::new();
    let mut i = 0;
    while i < p.len() {
        let j = (i..p.len()).find(|&j| p[j] != p[i]).unwrap_or(p.len());
        if j - i == 1 {
            parts.push(p[i].to_string());
        } else {
            parts.push(format!("{}^{}", p[i], j - i));
        }
        i = j;
    }
    format!("({})", parts.join(","))
}

pub fn bipartition_name(a: &[usize], b: &[usize]) -> String {
    let s = |p: &[usize]| p.iter().map(|x| x.to_string()).collect::<String>();
    format!("{}.{}", s(a), s(b))
}

pub const G2_NAMES: [&str; 6] = ["phi1,0", "phi1,6", "phi'1,3", "phi''1,3", "phi2,1", "phi2,2"];

fn beta_set(p: &[usize]) -> BTreeSet<usize> {
    let m = p.len();
    p.iter().enumerate().map(|(i, &x)| x + (m - 1 - i)).collect()
}

/// Ways of removing a `k`-rim hook from a beta set, with their signs.
fn remove_hooks(beta: &BTreeSet<usize>, k: usize) -> Vec<(BTreeSet<usize>, i64)> {
    let mut out = Vec::new();
    for &b in beta {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let height = beta.range(b - k + 1..b).count();
        let mut nb = beta.clone();
        nb.remove(&b);
        nb.insert(b - k);
        out.push((nb, if height.is_multiple_of(2) { 1 } else { -1 }));
    }
    out
}

fn mn_beta(beta: &BTreeSet<usize>, cycles: &[usize]) -> i64 {
    match cycles.split_first() {
        None => 1,
        Some((&k, rest)) => remove_hooks(beta, k)
            .into_iter()
            .map(|(nb, s)| s * mn_beta(&nb, rest))
            .sum(),
    }
}

/// Murnaghan-Nakayama: `chi^lambda` at cycle type `mu`.
pub fn symmetric_character(lambda: &[usize], mu: &[usize]) -> i64 {
    mn_beta(&beta_set(lambda), mu)
}

fn mn_bi(a: &BTreeSet<usize>, b: &BTreeSet<usize>, cycles: &[(usize, bool)]) -> i64 {
    match cycles.split_first() {
        None => 1,
        Some((&(k, negative), rest)) => {
            let from_a: i64 = remove_hooks(a, k)
                .into_iter()
                .map(|(na, s)| s * mn_bi(&na, b, rest))
                .sum();
            let from_b: i64 = remove_hooks(b, k)
                .into_iter()
                .map(|(nb, s)| s * mn_bi(a, &nb, rest))
                .sum();
            if negative {
                from_a - from_b
            } else {
                from_a + from_b
            }
        }
    }
}

/// Character `(alpha, beta)` of the hyperoctahedral group at a signed cycle type.
pub fn hyperoctahedral_character(alpha: &[usize], beta: &[usize], pos: &[usize], neg: &[usize]) -> i64 {
    let cycles: Vec<(usize, bool)> = pos
        .iter()
        .map(|&k| (k, false))
        .chain(neg.iter().map(|&k| (k, true)))
        .collect();
    mn_bi(&beta_set(alpha), &beta_set(beta), &cycles)
}

pub(crate) fn g2_character(name: &str, e: G2Elt) -> i64 {
    use G2Elt::*;
    let rot = |id: i64, r6: i64, r3: i64, m1: i64| match e {
        Identity => id,
        Rot6 => r6,
        Rot3 => r3,
        MinusOne => m1,
        _ => unreachable!(),
    };
    match (name, e) {
        ("phi1,0", _) => 1,
        ("phi1,6", ShortRefl | LongRefl) => -1,
        ("phi1,6", _) => 1,
        ("phi'1,3", LongRefl) | ("phi''1,3", ShortRefl) => -1,
        ("phi'1,3", ShortRefl) | ("phi''1,3", LongRefl) => 1,
        ("phi'1,3" | "phi''1,3", _) => rot(1, -1, 1, -1),
        ("phi2,1" | "phi2,2", ShortRefl | LongRefl) => 0,
        ("phi2,1", _) => rot(2, 1, -1, -2),
        ("phi2,2", _) => rot(2, -1, -1, 2),
        _ => panic!("unknown G2 character {name}"),
    }
}

/// Local character names of one component, in a fixed order.
pub(crate) fn local_names(c: &Component) -> Vec<String> {
    let r = c.cartan.rank;
    match c.cartan.family {
        'A' => partitions(r + 1).iter().map(|p| partition_name(p)).collect(),
        'B' | 'C' => bipartitions(r)
            .iter()
            .map(|(a, b)| bipartition_name(a, b))
            .collect(),
        'G' => G2_NAMES.iter().map(|s| s.to_string()).collect(),
        _ => Vec::new(),
    }
}

fn parse_digits(s: &str) -> Vec<usize> {
    s.chars().map(|ch| ch.to_digit(10).unwrap() as usize).collect()
}

fn parse_partition(s: &str) -> Vec<usize> {
    let inner = s.trim_start_matches('(').trim_end_matches(')');
    let mut out = Vec::new();
    for part in inner.split(',').filter(|p| !p.is_empty()) {
        match part.split_once('^') {
            Some((v, m)) => {
                let v: usize = v.parse().unwrap();
                out.extend(std::iter::repeat_n(v, m.parse().unwrap()));
            }
            None => out.push(part.parse().unwrap()),
        }
    }
    out
}

/// Value of the named local character at a local shape.
pub(crate) fn local_value(name: &str, shape: &LocalShape) -> i64 {
    match shape {
        LocalShape::Perm(mu) => symmetric_character(&parse_partition(name), mu),
        LocalShape::Signed { pos, neg } => {
            let (a, b) = name.split_once('.').expect("bipartition name");
            hyperoctahedral_character(&parse_digits(a), &parse_digits(b), pos, neg)
        }
        LocalShape::G2(e) => g2_character(name, *e),
    }
}

/// Simple-root coordinates of every root of a component.
pub(crate) struct ComponentCoords<'a> {
    rd: &'a RootDatum,
    comp: &'a Component,
    coords: HashMap<Vec<BigInt>, Vec<i64>>,
}

impl<'a> ComponentCoords<'a> {
    pub fn new(rd: &'a RootDatum, comp: &'a Component) -> Self {
        let simple: Vec<&Vec<BigInt>> = comp.simple.iter().map(|&i| &rd.roots[i]).collect();
        let mut coords = HashMap::new();
        // roots are Z-combinations of simple roots with coefficients of one sign;
        // recover them by pairing against the dual basis computed rationally
        let r = simple.len();
        let n = rd.rank;
        let gram: Vec<Vec<num_rational::BigRational>> = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| {
                        num_rational::BigRational::from_integer(
                            crate::lattice::dot_int(simple[i], simple[j]),
                        )
                    })
                    .collect()
            })
            .collect();
        for &ri in &comp.roots {
            let root = &rd.roots[ri];
            let rhs: Vec<num_rational::BigRational> = (0..r)
                .map(|i| num_rational::BigRational::from_integer(crate::lattice::dot_int(simple[i], root)))
                .collect();
            let c = crate::lattice::solve_rational(&gram, &rhs).expect("simple roots independent");
            let c: Vec<i64> = c
                .iter()
                .map(|x| {
                    assert!(x.is_integer());
                    x.to_integer().to_i64().unwrap()
                })
                .collect();
            debug_assert_eq!(
                (0..n)
                    .map(|k| c.iter().zip(&simple).map(|(ci, s)| BigInt::from(*ci) * &s[k]).sum::<BigInt>())
                    .collect::<Vec<_>>(),
                *root
            );
            coords.insert(root.clone(), c);
        }
        ComponentCoords { rd, comp, coords }
    }

    fn image_coords(&self, m: &IntMatrix, simple_pos: usize) -> &Vec<i64> {
        let img = m.apply(&self.rd.roots[self.comp.simple[simple_pos]]);
        self.coords.get(&img).expect("Weyl group permutes the roots of a component")
    }

    /// Shape of `w` (a matrix on `X^*`) restricted to this component.
    pub fn shape(&self, m: &IntMatrix) -> LocalShape {
        let r = self.comp.simple.len();
        let cols: Vec<Vec<i64>> = (0..r).map(|k| self.image_coords(m, k).clone()).collect();
        match self.comp.cartan.family {
            'A' => {
                let mut sigma = vec![usize::MAX; r + 1];
                for (k, c) in cols.iter().enumerate() {
                    let nz: Vec<usize> = (0..r).filter(|&i| c[i] != 0).collect();
                    let (lo, hi) = (nz[0], *nz.last().unwrap() + 1);
                    let (a, b) = if c[lo] > 0 { (lo, hi) } else { (hi, lo) };
                    sigma[k] = a;
                    sigma[k + 1] = b;
                }
                LocalShape::Perm(cycle_type(&sigma))
            }
            'B' | 'C' => {
                let is_c = self.comp.cartan.family == 'C';
                // e-coordinates (doubled) of the images of the simple roots
                let e2 = |c: &[i64]| -> Vec<i64> {
                    (0..r)
                        .map(|i| {
                            let prev = if i == 0 { 0 } else { c[i - 1] };
                            if is_c && i == r - 1 {
                                2 * (2 * c[i] - prev)
                            } else {
                                2 * (c[i] - prev)
                            }
                        })
                        .collect()
                };
                let imgs: Vec<Vec<i64>> = cols.iter().map(|c| e2(c)).collect();
                // e_i = a_i + ... + a_{r-1} (B) or with the last term halved (C)
                let mut perm = vec![(0usize, 1i64); r];
                for (i, slot) in perm.iter_mut().enumerate() {
                    let mut v = vec![0i64; r];
                    for (k, img) in imgs.iter().enumerate().skip(i) {
                        let w = if is_c && k == r - 1 { 1 } else { 2 };
                        for j in 0..r {
                            v[j] += w * img[j];
                        }
                    }
                    let j = (0..r).find(|&j| v[j] != 0).unwrap();
                    *slot = (j, v[j].signum());
                }
                let mut seen = vec![false; r];
                let (mut pos, mut neg) = (Vec::new(), Vec::new());
                for s in 0..r {
                    if seen[s] {
                        continue;
                    }
                    let (mut len, mut sign, mut i) = (0, 1, s);
                    while !seen[i] {
                        seen[i] = true;
                        len += 1;
                        sign *= perm[i].1;
                        i = perm[i].0;
                    }
                    if sign > 0 {
                        pos.push(len)
                    } else {
                        neg.push(len)
                    }
                }
                pos.sort_unstable_by(|a, b| b.cmp(a));
                neg.sort_unstable_by(|a, b| b.cmp(a));
                LocalShape::Signed { pos, neg }
            }
            'G' => {
                let (a, b, c, d) = (cols[0][0], cols[1][0], cols[0][1], cols[1][1]);
                let (tr, det) = (a + d, a * d - b * c);
                let e = match (det, tr) {
                    (1, 2) => G2Elt::Identity,
                    (1, 1) => G2Elt::Rot6,
                    (1, -1) => G2Elt::Rot3,
                    (1, -2) => G2Elt::MinusOne,
                    _ => {
                        let beta = self
                            .comp
                            .roots
                            .iter()
                            .map(|&i| &self.coords[&self.rd.roots[i]])
                            .find(|x| {
                                a * x[0] + b * x[1] == -x[0] && c * x[0] + d * x[1] == -x[1]
                            })
                            .expect("a reflection negates a root");
                        if beta[0] % 3 == 0 {
                            G2Elt::LongRefl
                        } else {
                            G2Elt::ShortRefl
                        }
                    }
                };
                LocalShape::G2(e)
            }
            f => panic!("no character model for family {f}"),
        }
    }
}

fn cycle_type(sigma: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; sigma.len()];
    let mut out = Vec::new();
    for s in 0..sigma.len() {
        let mut len = 0;
        let mut i = s;
        while !seen[i] {
            seen[i] = true;
            len += 1;
            i = sigma[i];
        }
        if len > 0 {
            out.push(len);
        }
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_group_degrees_are_hook_counts() {
        // degrees of S4 irreducibles: 1, 3, 2, 3, 1
        let degs: Vec<i64> = partitions(4)
            .iter()
            .map(|l| symmetric_character(l, &[1, 1, 1, 1]))
            .collect();
        assert_eq!(degs, vec![1, 3, 2, 3, 1]);
        assert_eq!(symmetric_character(&[1, 1, 1], &[2, 1]), -1);
        assert_eq!(symmetric_character(&[2, 1], &[3]), -1);
    }

    #[test]
    fn hyperoctahedral_linear_characters() {
        // ((n), -) trivial, (-, (1^n)) sign
        for (pos, neg) in [(vec![2], vec![]), (vec![], vec![1, 1]), (vec![1], vec![1])] {
            assert_eq!(hyperoctahedral_character(&[2], &[], &pos, &neg), 1);
            let len: usize = pos.iter().map(|k| k - 1).sum::<usize>() + neg.iter().sum::<usize>();
            let sign = if len.is_multiple_of(2) { 1 } else { -1 };
            assert_eq!(hyperoctahedral_character(&[], &[1, 1], &pos, &neg), sign);
        }
        // the two-dimensional character (1).(1) at the identity
        assert_eq!(hyperoctahedral_character(&[1], &[1], &[1, 1], &[]), 2);
    }

    #[test]
    fn names_round_trip() {
        assert_eq!(partition_name(&[2, 1, 1]), "(2,1^2)");
        assert_eq!(parse_partition("(3,2^2,1)"), vec![3, 2, 2, 1]);
        assert_eq!(bipartition_name(&[1, 1], &[]), "11.");
        assert_eq!(bipartitions(2).len(), 5);
    }
}
