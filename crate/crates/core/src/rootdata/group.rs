//! Explicit finite matrix groups (Weyl groups and their subgroups).

use std::collections::{HashMap, VecDeque};
use std::sync::OnceLock;

use crate::lattice::IntMatrix;

use super::chartable::CharacterTable;
use super::{recognize_components, RootDataError, RootDatum};

/// Default cap on the order of a materialized group (`|W(B6)| = 46080`).
pub const DEFAULT_GROUP_CAP: u64 = 46_080;

/// An element of a Weyl group, acting on `X^*` by `matrix` (on column vectors)
/// and on `X_*` by `coaction = matrix^{-T}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElement {
    pub matrix: IntMatrix,
    pub coaction: IntMatrix,
    /// Word in the simple reflections of the ambient datum; display only.
    pub word: Vec<usize>,
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        WeylElement {
            matrix: IntMatrix::identity(rank),
            coaction: IntMatrix::identity(rank),
            word: Vec::new(),
        }
    }

    /// Builds an element from its matrix on `X^*`; `None` if not unimodular.
    pub fn from_matrix(matrix: IntMatrix, word: Vec<usize>) -> Option<Self> {
        let coaction = matrix.inverse_unimodular()?.transpose();
        Some(WeylElement {
            matrix,
            coaction,
            word,
        })
    }

    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        WeylElement {
            matrix: &self.matrix * &other.matrix,
            coaction: &self.coaction * &other.coaction,
            word,
        }
    }

    pub fn rank(&self) -> usize {
        self.matrix.rows()
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }

    pub fn word_string(&self) -> String {
        if self.word.is_empty() {
            "e".to_string()
        } else {
            self.word
                .iter()
                .map(|i| format!("s{}", i + 1))
                .collect::<Vec<_>>()
                .join("")
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    /// Index of the representative (the smallest index in the class).
    pub representative: usize,
    pub members: Vec<usize>,
    pub centralizer_order: usize,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// A finite group of integer matrices with its multiplication table.
/// Element 0 is always the identity.
#[derive(Debug)]
pub struct FiniteGroup {
    rank: usize,
    elements: Vec<WeylElement>,
    index: HashMap<IntMatrix, usize>,
    mult: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    classes: Vec<ConjugacyClass>,
    class_of: Vec<usize>,
    table: OnceLock<CharacterTable>,
}

impl Clone for FiniteGroup {
    fn clone(&self) -> Self {
        let table = OnceLock::new();
        if let Some(t) = self.table.get() {
            let _ = table.set(t.clone());
        }
        FiniteGroup {
            rank: self.rank,
            elements: self.elements.clone(),
            index: self.index.clone(),
            mult: self.mult.clone(),
            inverse: self.inverse.clone(),
            classes: self.classes.clone(),
            class_of: self.class_of.clone(),
            table,
        }
    }
}

impl FiniteGroup {
    /// Closure of the given generators. Fails with `GroupTooLarge` once more
    /// than `cap` elements have been produced.
    pub fn generate(rank: usize, gens: &[WeylElement], cap: u64) -> Result<Self, RootDataError> {
        let mut elements = vec![WeylElement::identity(rank)];
        let mut index: HashMap<IntMatrix, usize> = HashMap::new();
        index.insert(elements[0].matrix.clone(), 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in gens {
                let prod = elements[i].compose(g);
                if index.contains_key(&prod.matrix) {
                    continue;
                }
                if elements.len() as u64 >= cap {
                    return Err(RootDataError::GroupTooLarge {
                        order: elements.len() as u64 + 1,
                        cap,
                    });
                }
                index.insert(prod.matrix.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(prod);
            }
        }
        Ok(Self::from_closed(rank, elements, index))
    }

    /// Builds a group from a list of elements already closed under products.
    /// The identity is moved to the front; the rest keeps its order.
    pub fn from_elements(rank: usize, elems: Vec<WeylElement>) -> Result<Self, RootDataError> {
        let mut elements = vec![WeylElement::identity(rank)];
        elements.extend(elems.into_iter().filter(|e| !e.is_identity()));
        let mut index = HashMap::new();
        for (i, e) in elements.iter().enumerate() {
            if index.insert(e.matrix.clone(), i).is_some() {
                return Err(RootDataError::NotSubgroup("duplicate elements".into()));
            }
        }
        for a in &elements {
            for b in &elements {
                if !index.contains_key(&(&a.matrix * &b.matrix)) {
                    return Err(RootDataError::NotSubgroup(
                        "element list is not closed under products".into(),
                    ));
                }
            }
        }
        Ok(Self::from_closed(rank, elements, index))
    }

    fn from_closed(rank: usize, elements: Vec<WeylElement>, index: HashMap<IntMatrix, usize>) -> Self {
        let n = elements.len();
        let mult: Vec<Vec<usize>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| index[&(&elements[i].matrix * &elements[j].matrix)])
                    .collect()
            })
            .collect();
        let inverse: Vec<usize> = (0..n)
            .map(|i| (0..n).find(|&j| mult[i][j] == 0).expect("group without inverse"))
            .collect();
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for x in 0..n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let mut members: Vec<usize> = (0..n).map(|g| mult[mult[g][x]][inverse[g]]).collect();
            members.sort_unstable();
            members.dedup();
            for &m in &members {
                class_of[m] = classes.len();
            }
            classes.push(ConjugacyClass {
                representative: x,
                centralizer_order: n / members.len(),
                members,
            });
        }
        FiniteGroup {
            rank,
            elements,
            index,
            mult,
            inverse,
            classes,
            class_of,
            table: OnceLock::new(),
        }
    }

    pub fn trivial(rank: usize) -> Self {
        let e = WeylElement::identity(rank);
        let mut index = HashMap::new();
        index.insert(e.matrix.clone(), 0);
        Self::from_closed(rank, vec![e], index)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &WeylElement {
        &self.elements[i]
    }

    pub fn index_of(&self, m: &IntMatrix) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        let mut r = 0;
        for _ in 0..k {
            r = self.mult[r][a];
        }
        r
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut r = a;
        let mut k = 1;
        while r != 0 {
            r = self.mult[r][a];
            k += 1;
        }
        k
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> usize {
        use num_integer::Integer;
        (0..self.order()).fold(1, |acc, a| acc.lcm(&self.element_order(a)))
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn class_of(&self, a: usize) -> usize {
        self.class_of[a]
    }

    pub fn is_abelian(&self) -> bool {
        self.classes.len() == self.order()
    }

    /// Element indices of the centralizer of `a`.
    pub fn centralizer(&self, a: usize) -> Vec<usize> {
        (0..self.order())
            .filter(|&g| self.mult[g][a] == self.mult[a][g])
            .collect()
    }

    /// The subgroup formed by the given element indices (must be closed).
    pub fn subgroup(&self, members: &[usize]) -> Result<FiniteGroup, RootDataError> {
        let elems = members.iter().map(|&i| self.elements[i].clone()).collect();
        FiniteGroup::from_elements(self.rank, elems)
    }

    /// Subgroup of elements satisfying a predicate (closure is checked).
    pub fn filter_subgroup<F: Fn(&WeylElement) -> bool>(
        &self,
        pred: F,
    ) -> Result<FiniteGroup, RootDataError> {
        let members: Vec<usize> = (0..self.order())
            .filter(|&i| pred(&self.elements[i]))
            .collect();
        self.subgroup(&members)
    }

    /// Subgroup generated by the given element indices.
    pub fn generated_subgroup(&self, gens: &[usize]) -> FiniteGroup {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut members = vec![0usize];
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mult[x][g];
                if !seen[y] {
                    seen[y] = true;
                    members.push(y);
                    queue.push_back(y);
                }
            }
        }
        members.sort_unstable();
        self.subgroup(&members).expect("generated set is closed")
    }

    /// Whether every element of `other` is an element of `self`.
    pub fn contains_group(&self, other: &FiniteGroup) -> bool {
        other.elements.iter().all(|e| self.index.contains_key(&e.matrix))
    }

    pub fn character_table(&self) -> &CharacterTable {
        self.table.get_or_init(|| CharacterTable::compute(self))
    }
}

/// The Weyl group of a root datum, generated by its simple reflections.
pub fn weyl_group(rd: &RootDatum) -> Result<FiniteGroup, RootDataError> {
    weyl_group_with_cap(rd, DEFAULT_GROUP_CAP)
}

pub fn weyl_group_with_cap(rd: &RootDatum, cap: u64) -> Result<FiniteGroup, RootDataError> {
    let predicted: u64 = recognize_components(rd)
        .iter()
        .map(|c| c.cartan.weyl_order())
        .product();
    if predicted > cap {
        return Err(RootDataError::GroupTooLarge {
            order: predicted,
            cap,
        });
    }
    let gens: Vec<WeylElement> = rd
        .simple_indices
        .iter()
        .enumerate()
        .map(|(k, &i)| {
            WeylElement::from_matrix(rd.reflection_matrix(i), vec![k]).expect("reflection")
        })
        .collect();
    FiniteGroup::generate(rd.rank, &gens, cap)
}

/// All elements of `W(rd)`, identity first.
pub fn weyl_group_elements(rd: &RootDatum) -> Result<Vec<WeylElement>, RootDataError> {
    Ok(weyl_group(rd)?.elements().to_vec())
}

/// `(representative, size, centralizer order)` for each class.
pub fn conjugacy_classes(g: &FiniteGroup) -> Vec<(WeylElement, usize, usize)> {
    g.classes()
        .iter()
        .map(|c| {
            (
                g.element(c.representative).clone(),
                c.size(),
                c.centralizer_order,
            )
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::build_root_datum;

    fn order_of(desc: &str) -> usize {
        weyl_group(&build_root_datum(desc).unwrap()).unwrap().order()
    }

    #[test]
    fn weyl_orders() {
        assert_eq!(order_of("A1:sc"), 2);
        assert_eq!(order_of("SL3"), 6);
        assert_eq!(order_of("C2:sc"), 8);
        assert_eq!(order_of("G2"), 12);
        assert_eq!(order_of("B3"), 48);
        assert_eq!(order_of("A4"), 120);
        assert_eq!(order_of("GL2"), 2);
    }

    #[test]
    fn class_counts() {
        let sizes = |desc: &str| -> Vec<usize> {
            let g = weyl_group(&build_root_datum(desc).unwrap()).unwrap();
            let mut s: Vec<usize> = g.classes().iter().map(|c| c.size()).collect();
            s.sort_unstable();
            s
        };
        assert_eq!(sizes("SL3"), vec![1, 2, 3]);
        assert_eq!(sizes("Sp4").len(), 5);
        assert_eq!(sizes("G2").len(), 6);
        assert_eq!(sizes("B3").len(), 10);
        assert_eq!(sizes("A4").len(), 7);
    }

    #[test]
    fn identity_first_and_closed() {
        let g = weyl_group(&build_root_datum("G2").unwrap()).unwrap();
        assert!(g.element(0).is_identity());
        assert_eq!(g.classes()[0].members, vec![0]);
        for c in g.classes() {
            assert_eq!(c.size() * c.centralizer_order, g.order());
        }
    }

    #[test]
    fn cap_is_enforced() {
        let rd = build_root_datum("A4").unwrap();
        assert!(matches!(
            weyl_group_with_cap(&rd, 100),
            Err(RootDataError::GroupTooLarge { order: 120, cap: 100 })
        ));
    }

    #[test]
    fn coaction_is_inverse_transpose() {
        let g = weyl_group(&build_root_datum("G2").unwrap()).unwrap();
        for e in g.elements() {
            assert!((&e.matrix.transpose() * &e.coaction).is_identity());
        }
    }
}
