//! Recognition of the Cartan type of a root system given by its simple roots.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::lattice::dot_int;

use super::{CartanType, RootDatum};

/// An irreducible component of a root system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub cartan: CartanType,
    /// Simple roots (indices into the datum's roots) in Bourbaki order.
    pub simple: Vec<usize>,
    /// All roots of the component, in the datum's root order.
    pub roots: Vec<usize>,
}

/// Splits the root system of `rd` into irreducible components and names them.
///
/// `B2` and `C2` have the same Dynkin diagram; the datum's type hints decide,
/// and `C2` is the default.
pub fn recognize_components(rd: &RootDatum) -> Vec<Component> {
    let s = &rd.simple_indices;
    let r = s.len();
    let cartan = |i: usize, j: usize| -> i64 {
        dot_int(&rd.roots[s[j]], &rd.coroots[s[i]])
            .to_i64()
            .expect("small Cartan entry")
    };
    let mut comp_of = vec![usize::MAX; r];
    let mut comps: Vec<Vec<usize>> = Vec::new();
    for start in 0..r {
        if comp_of[start] != usize::MAX {
            continue;
        }
        let id = comps.len();
        let mut members = vec![start];
        comp_of[start] = id;
        let mut k = 0;
        while k < members.len() {
            let i = members[k];
            for j in 0..r {
                if comp_of[j] == usize::MAX && cartan(i, j) != 0 {
                    comp_of[j] = id;
                    members.push(j);
                }
            }
            k += 1;
        }
        comps.push(members);
    }

    comps
        .into_iter()
        .map(|members| {
            let (family, order) = classify(&members, &cartan, rd, s);
            let simple: Vec<usize> = order.iter().map(|&i| s[i]).collect();
            let roots = (0..rd.num_roots())
                .filter(|&b| {
                    members
                        .iter()
                        .any(|&i| !dot_int(&rd.roots[b], &rd.coroots[s[i]]).is_zero())
                })
                .collect();
            Component {
                cartan: CartanType::new(family, members.len()),
                simple,
                roots,
            }
        })
        .collect()
}

fn classify(
    members: &[usize],
    cartan: &dyn Fn(usize, usize) -> i64,
    rd: &RootDatum,
    s: &[usize],
) -> (char, Vec<usize>) {
    let n = members.len();
    if n == 1 {
        return ('A', members.to_vec());
    }
    let neighbours = |i: usize| -> Vec<usize> {
        members
            .iter()
            .copied()
            .filter(|&j| j != i && cartan(i, j) != 0)
            .collect()
    };
    // a[i][j] = -2 or -3 means alpha_i is the short root of the bond
    let mut multi = None;
    for &i in members {
        for &j in members {
            if i != j && cartan(i, j) < -1 {
                multi = Some((i, j, cartan(i, j)));
            }
        }
    }
    if let Some((short, long, -3)) = multi {
        return ('G', vec![short, long]);
    }
    if members.iter().any(|&i| neighbours(i).len() > 2) {
        // branch node: type D (only reachable through symbolic inputs)
        let mut order = members.to_vec();
        order.sort_unstable();
        return ('D', order);
    }
    let ends: Vec<usize> = members
        .iter()
        .copied()
        .filter(|&i| neighbours(i).len() == 1)
        .collect();
    let walk = |start: usize| -> Vec<usize> {
        let mut order = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        loop {
            let next = neighbours(cur).into_iter().find(|&j| j != prev);
            match next {
                Some(j) if !order.contains(&j) => {
                    order.push(j);
                    prev = cur;
                    cur = j;
                }
                _ => break,
            }
        }
        order
    };
    match multi {
        None => {
            let start = *ends.iter().min().unwrap();
            ('A', walk(start))
        }
        Some((short, long, _)) => {
            if n == 2 {
                let roots: BTreeSet<Vec<BigInt>> = [short, long]
                    .iter()
                    .map(|&i| rd.roots[s[i]].clone())
                    .collect();
                let hinted_b = rd.type_hints.iter().any(|(t, set)| {
                    t.family == 'B' && t.rank == 2 && roots.iter().all(|r| set.contains(r))
                });
                if hinted_b {
                    ('B', vec![long, short])
                } else {
                    ('C', vec![short, long])
                }
            } else {
                // the multiple bond sits at one end of the chain; start at the other end
                let bond_end = if neighbours(short).len() == 1 { short } else { long };
                let start = *ends.iter().find(|&&e| e != bond_end).unwrap();
                let order = walk(start);
                if *order.last().unwrap() == short {
                    ('B', order)
                } else {
                    ('C', order)
                }
            }
        }
    }
}
