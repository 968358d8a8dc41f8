//! Character tables by Dixon's modular method, and class-function calculus.
//!
//! The class-algebra structure constants are diagonalized over a prime field
//! `F_p` with `p = 1 mod exponent(G)`, which splits the class algebra; the
//! resulting modular character values are lifted to `Q(zeta_e)` through the
//! eigenvalue multiplicities of each element.

use std::cmp::Reverse;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::cyclotomic::Cyclo;

use super::group::FiniteGroup;
use super::RootDataError;

/// A class function on a finite group, given by its values on the classes
/// in the group's class order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    pub values: Vec<Cyclo>,
    class_sizes: Vec<usize>,
    group_order: usize,
}

impl ClassFunction {
    pub fn new(g: &FiniteGroup, values: Vec<Cyclo>) -> Self {
        assert_eq!(values.len(), g.classes().len());
        ClassFunction {
            values,
            class_sizes: g.classes().iter().map(|c| c.size()).collect(),
            group_order: g.order(),
        }
    }

    /// Class function from its value on each element index (read at class representatives).
    pub fn from_element_fn<F: Fn(usize) -> Cyclo>(g: &FiniteGroup, f: F) -> Self {
        let values = g.classes().iter().map(|c| f(c.representative)).collect();
        Self::new(g, values)
    }

    pub fn trivial(g: &FiniteGroup) -> Self {
        Self::new(g, vec![Cyclo::from_int(1); g.classes().len()])
    }

    pub fn zero(g: &FiniteGroup) -> Self {
        Self::new(g, vec![Cyclo::zero(); g.classes().len()])
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    pub fn degree(&self) -> Cyclo {
        self.values[0].clone()
    }

    /// Degree as an integer; panics if the value at the identity is not integral.
    pub fn degree_int(&self) -> i64 {
        let d = self.values[0].to_integer().expect("non-integral degree");
        i64::try_from(d).expect("degree overflow")
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }

    /// `<self, other> = |G|^-1 sum_g self(g) conj(other(g))`.
    pub fn inner(&self, other: &ClassFunction) -> BigRational {
        assert_eq!(self.values.len(), other.values.len());
        let mut acc = Cyclo::zero();
        for ((a, b), &h) in self.values.iter().zip(&other.values).zip(&self.class_sizes) {
            let term = &(a * &b.conj()) * &Cyclo::from_int(h as i64);
            acc += &term;
        }
        let q = acc
            .to_rational()
            .expect("inner product of class functions is rational");
        q / BigRational::from_integer(BigInt::from(self.group_order))
    }

    pub fn add(&self, other: &ClassFunction) -> ClassFunction {
        ClassFunction {
            values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect(),
            class_sizes: self.class_sizes.clone(),
            group_order: self.group_order,
        }
    }

    pub fn sub(&self, other: &ClassFunction) -> ClassFunction {
        ClassFunction {
            values: self.values.iter().zip(&other.values).map(|(a, b)| a - b).collect(),
            class_sizes: self.class_sizes.clone(),
            group_order: self.group_order,
        }
    }

    pub fn scale(&self, k: i64) -> ClassFunction {
        let q = BigRational::from_integer(BigInt::from(k));
        ClassFunction {
            values: self.values.iter().map(|a| a.scale(&q)).collect(),
            class_sizes: self.class_sizes.clone(),
            group_order: self.group_order,
        }
    }

    /// Pointwise product (tensor product of representations).
    pub fn tensor(&self, other: &ClassFunction) -> ClassFunction {
        ClassFunction {
            values: self.values.iter().zip(&other.values).map(|(a, b)| a * b).collect(),
            class_sizes: self.class_sizes.clone(),
            group_order: self.group_order,
        }
    }
}

/// The full irreducible character table of a finite group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    pub group_order: usize,
    pub class_sizes: Vec<usize>,
    pub class_representatives: Vec<usize>,
    pub exponent: usize,
    /// `irreducibles[i][j]` is the value of the `i`-th irreducible on class `j`.
    /// Ordered by degree; the trivial character is first.
    pub irreducibles: Vec<Vec<Cyclo>>,
    class_fns: Vec<ClassFunction>,
}

impl CharacterTable {
    pub(crate) fn compute(g: &FiniteGroup) -> CharacterTable {
        let k = g.classes().len();
        let n = g.order();
        let e = g.exponent();
        let p = choose_prime(n, e);
        let rows = dixon_modular(g, p);
        let z = primitive_root(p, e);

        let mut lifted: Vec<(usize, Vec<Vec<u64>>, Vec<Cyclo>)> = Vec::with_capacity(k);
        for (deg, chi_p) in rows {
            let mut mults_all = Vec::with_capacity(k);
            let mut values = Vec::with_capacity(k);
            for c in g.classes() {
                let x = c.representative;
                let o = g.element_order(x);
                let zo = pow_mod(z, (e / o) as u64, p);
                let inv_o = inv_mod(o as u64 % p, p);
                let mut mults = vec![0u64; o];
                let mut value = Cyclo::zero();
                for (l, m_l) in mults.iter_mut().enumerate() {
                    let mut s_acc = 0u64;
                    for s in 0..o {
                        let cls = g.class_of(g.pow(x, s));
                        let root = pow_mod(zo, ((o - (s * l) % o) % o) as u64, p);
                        s_acc = (s_acc + chi_p[cls] * root) % p;
                    }
                    *m_l = s_acc * inv_o % p;
                    assert!(*m_l <= deg as u64, "modular lift failed");
                    if *m_l > 0 {
                        let term = &Cyclo::root_of_unity(o as u32, l as i64)
                            * &Cyclo::from_int(*m_l as i64);
                        value += &term;
                    }
                }
                mults_all.push(mults);
                values.push(value.embed(e as u32));
            }
            lifted.push((deg, mults_all, values));
        }
        lifted.sort_by(|a, b| (a.0, Reverse(&a.1)).cmp(&(b.0, Reverse(&b.1))));
        let irreducibles: Vec<Vec<Cyclo>> = lifted.into_iter().map(|(_, _, v)| v).collect();
        let class_fns = irreducibles
            .iter()
            .map(|v| ClassFunction::new(g, v.clone()))
            .collect();
        CharacterTable {
            group_order: n,
            class_sizes: g.classes().iter().map(|c| c.size()).collect(),
            class_representatives: g.classes().iter().map(|c| c.representative).collect(),
            exponent: e,
            irreducibles,
            class_fns,
        }
    }

    pub fn num_classes(&self) -> usize {
        self.class_sizes.len()
    }

    pub fn degrees(&self) -> Vec<i64> {
        self.class_fns.iter().map(|c| c.degree_int()).collect()
    }

    pub fn irreducible(&self, i: usize) -> &ClassFunction {
        &self.class_fns[i]
    }

    pub fn irreducibles_as_class_functions(&self) -> &[ClassFunction] {
        &self.class_fns
    }

    /// Multiplicities `<chi, chi_i>` for every irreducible `chi_i`.
    pub fn decompose(&self, chi: &ClassFunction) -> Vec<BigRational> {
        self.class_fns.iter().map(|x| chi.inner(x)).collect()
    }

    /// Integer multiplicities; `None` if `chi` is not a virtual character.
    pub fn decompose_integral(&self, chi: &ClassFunction) -> Option<Vec<i64>> {
        self.decompose(chi)
            .into_iter()
            .map(|q| {
                if q.is_integer() {
                    i64::try_from(q.to_integer()).ok()
                } else {
                    None
                }
            })
            .collect()
    }

    /// Index of the irreducible equal to `chi`, if any.
    pub fn find(&self, chi: &ClassFunction) -> Option<usize> {
        self.class_fns.iter().position(|x| x.values == chi.values)
    }

    /// Row and column orthogonality, checked exactly.
    pub fn check_orthogonality(&self) -> bool {
        let k = self.num_classes();
        if self.irreducibles.len() != k {
            return false;
        }
        for i in 0..k {
            for j in 0..k {
                let expect = if i == j { BigRational::one() } else { BigRational::zero() };
                if self.class_fns[i].inner(&self.class_fns[j]) != expect {
                    return false;
                }
            }
        }
        // columns: sum_chi chi(g_a) conj(chi(g_b)) = delta_ab |C_G(g_a)|
        for a in 0..k {
            for b in 0..k {
                let mut s = Cyclo::zero();
                for row in &self.irreducibles {
                    s += &(&row[a] * &row[b].conj());
                }
                let expect = if a == b {
                    (self.group_order / self.class_sizes[a]) as i64
                } else {
                    0
                };
                if s != Cyclo::from_int(expect) {
                    return false;
                }
            }
        }
        let sum_sq: i64 = self.degrees().iter().map(|d| d * d).sum();
        sum_sq == self.group_order as i64
    }
}

/// Memoized character table of `g`.
pub fn character_table(g: &FiniteGroup) -> &CharacterTable {
    g.character_table()
}

/// `ind_H^G phi`, where `H` is given as a group of matrices contained in `G`.
pub fn induce(
    h: &FiniteGroup,
    phi: &ClassFunction,
    g: &FiniteGroup,
) -> Result<ClassFunction, RootDataError> {
    let mut sums = vec![Cyclo::zero(); g.classes().len()];
    for (hc_idx, hc) in h.classes().iter().enumerate() {
        for &m in &hc.members {
            let gi = g.index_of(&h.element(m).matrix).ok_or_else(|| {
                RootDataError::NotSubgroup(format!(
                    "element {} is not in the ambient group",
                    h.element(m).word_string()
                ))
            })?;
            sums[g.class_of(gi)] += &phi.values[hc_idx];
        }
    }
    let values = g
        .classes()
        .iter()
        .zip(sums)
        .map(|(c, s)| {
            s.scale(&BigRational::new(
                BigInt::from(c.centralizer_order),
                BigInt::from(h.order()),
            ))
        })
        .collect();
    Ok(ClassFunction::new(g, values))
}

/// Restriction of a class function of `G` to a subgroup `H`.
pub fn restrict(
    chi: &ClassFunction,
    g: &FiniteGroup,
    h: &FiniteGroup,
) -> Result<ClassFunction, RootDataError> {
    let values = h
        .classes()
        .iter()
        .map(|c| {
            let e = h.element(c.representative);
            g.index_of(&e.matrix)
                .map(|gi| chi.values[g.class_of(gi)].clone())
                .ok_or_else(|| {
                    RootDataError::NotSubgroup(format!(
                        "element {} is not in the ambient group",
                        e.word_string()
                    ))
                })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ClassFunction::new(h, values))
}

/// `(irreducible index, multiplicity)` for the nonzero constituents of `ind_H^G chi`.
pub fn induce_and_decompose(
    h: &FiniteGroup,
    chi: &ClassFunction,
    g: &FiniteGroup,
) -> Result<Vec<(usize, i64)>, RootDataError> {
    let ind = induce(h, chi, g)?;
    let mults = g
        .character_table()
        .decompose_integral(&ind)
        .ok_or_else(|| RootDataError::NotSubgroup("argument is not a virtual character".into()))?;
    Ok(mults
        .into_iter()
        .enumerate()
        .filter(|(_, m)| *m != 0)
        .collect())
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Smallest prime `p = 1 mod e` with `p > 2|G|`.
fn choose_prime(order: usize, e: usize) -> u64 {
    let e = e as u64;
    let mut p = (2 * order as u64 / e + 1) * e + 1;
    while !is_prime(p) {
        p += e;
    }
    p
}

fn pow_mod(mut b: u64, mut x: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while x > 0 {
        if x & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        x >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// A primitive `e`-th root of unity in `F_p` (requires `e | p - 1`).
fn primitive_root(p: u64, e: usize) -> u64 {
    let mut factors = Vec::new();
    let mut m = p - 1;
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            factors.push(d);
            while m.is_multiple_of(d) {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    let gen = (2..p)
        .find(|&g| factors.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1))
        .expect("F_p has a generator");
    pow_mod(gen, (p - 1) / e as u64, p)
}

/// Nullspace of a `rows x cols` matrix over `F_p`, as a list of basis vectors.
fn nullspace_mod(mut a: Vec<Vec<u64>>, cols: usize, p: u64) -> Vec<Vec<u64>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..a.len()).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, pr);
        let inv = inv_mod(a[r][c], p);
        for x in a[r].iter_mut() {
            *x = *x * inv % p;
        }
        for i in 0..a.len() {
            if i != r && a[i][c] != 0 {
                let f = a[i][c];
                for j in 0..cols {
                    a[i][j] = (a[i][j] + p * p - f * a[r][j] % p) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == a.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; cols];
            v[f] = 1;
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - a[row][f]) % p;
            }
            v
        })
        .collect()
}

/// Irreducible characters modulo `p` as `(degree, values per class)`.
fn dixon_modular(g: &FiniteGroup, p: u64) -> Vec<(usize, Vec<u64>)> {
    let k = g.classes().len();
    let n = g.order();
    // a[i][j][l] = #{x in C_i : x^-1 z_l in C_j}
    let mut a = vec![vec![vec![0u64; k]; k]; k];
    for (l, cl) in g.classes().iter().enumerate() {
        let z = cl.representative;
        for x in 0..n {
            let y = g.mul(g.inv(x), z);
            a[g.class_of(x)][g.class_of(y)][l] += 1;
        }
    }
    // common eigenvectors of M_i = (a[i][j][l])_{j,l} acting on column vectors
    let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..k)
        .map(|i| (0..k).map(|j| (i == j) as u64).collect())
        .collect()];
    for mi in &a {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mut next = Vec::new();
        for basis in spaces {
            if basis.len() == 1 {
                next.push(basis);
                continue;
            }
            // image of the basis vectors under M_i
            let images: Vec<Vec<u64>> = basis
                .iter()
                .map(|v| {
                    (0..k)
                        .map(|j| (0..k).map(|l| mi[j][l] % p * v[l] % p).sum::<u64>() % p)
                        .collect()
                })
                .collect();
            let mut found = 0;
            for lambda in 0..p {
                // (M - lambda) B c = 0, as a k x d system in c
                let sys: Vec<Vec<u64>> = (0..k)
                    .map(|j| {
                        basis
                            .iter()
                            .zip(&images)
                            .map(|(v, mv)| (mv[j] + p - lambda * v[j] % p) % p)
                            .collect()
                    })
                    .collect();
                let null = nullspace_mod(sys, basis.len(), p);
                if null.is_empty() {
                    continue;
                }
                found += null.len();
                let sub: Vec<Vec<u64>> = null
                    .iter()
                    .map(|c| {
                        (0..k)
                            .map(|j| {
                                basis.iter().zip(c).map(|(v, ci)| v[j] * ci % p).sum::<u64>() % p
                            })
                            .collect()
                    })
                    .collect();
                next.push(sub);
                if found == basis.len() {
                    break;
                }
            }
            assert_eq!(found, basis.len(), "class algebra did not split mod {p}");
        }
        spaces = next;
    }
    assert!(spaces.iter().all(|s| s.len() == 1), "class algebra did not separate characters");

    let sizes: Vec<u64> = g.classes().iter().map(|c| c.size() as u64).collect();
    let inv_class: Vec<usize> = g
        .classes()
        .iter()
        .map(|c| g.class_of(g.inv(c.representative)))
        .collect();
    spaces
        .into_iter()
        .map(|s| {
            let v = &s[0];
            let norm = inv_mod(v[0], p);
            let omega: Vec<u64> = v.iter().map(|x| x * norm % p).collect();
            // |G| / chi(1)^2 = sum_j omega_j omega_j* / h_j
            let mut s = 0u64;
            for j in 0..k {
                s = (s + omega[j] * omega[inv_class[j]] % p * inv_mod(sizes[j] % p, p)) % p;
            }
            let d2 = (n as u64 % p) * inv_mod(s, p) % p;
            let deg = (1..=n).find(|d| (d * d) as u64 == d2).expect("degree is a square root");
            let values = (0..k)
                .map(|j| deg as u64 * omega[j] % p * inv_mod(sizes[j] % p, p) % p)
                .collect();
            (deg, values)
        })
        .collect()
}
