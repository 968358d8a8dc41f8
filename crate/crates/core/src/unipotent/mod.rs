//! Unipotent classes with Bala-Carter data, the cocharacters `h_x`, component
//! groups `A(x)` and the Springer correspondence.

pub mod tables;
mod weylchar;

use std::fmt;

use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde_json::{json, Value};
use thiserror::Error;

use crate::cyclotomic::Cyclo;
use crate::lattice::{dot_int, solve_rational, QVec};
use crate::rootdata::{
    recognize_components, weyl_group, ClassFunction, Component, FiniteGroup, RootDataError,
    RootDatum,
};
use crate::torus::qvec_json;

pub use weylchar::{
    bipartition_name, bipartitions, hyperoctahedral_character, partition_name, partitions,
    symmetric_character, G2_NAMES,
};
use weylchar::{local_names, local_value, ComponentCoords, LocalShape};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum UnipotentError {
    #[error("no unipotent data for type {0}")]
    UnsupportedType(String),
    #[error("malformed Springer table: {0}")]
    Table(String),
    #[error(transparent)]
    RootData(#[from] RootDataError),
}

/// Orientation of the Springer correspondence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SpringerConvention {
    /// Trivial class with the trivial character, regular class with the sign.
    Kato,
    /// Regular class with the trivial character (the orientation of the stored tables).
    Lusztig,
}

impl SpringerConvention {
    pub fn as_str(&self) -> &'static str {
        match self {
            SpringerConvention::Kato => "kato",
            SpringerConvention::Lusztig => "lusztig",
        }
    }
}

/// The orientation used throughout. Frozen by the SL2 Iwahori consistency
/// test in the parameters module: the other value splits the component
/// `[s, T^s]` of `T//W` between two labels.
pub const CONV_SPR: SpringerConvention = SpringerConvention::Kato;

/// `(Z/2)^k x S3^s`, which covers every component group met here.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct ComponentGroup {
    pub two_rank: u32,
    pub s3: u32,
}

impl ComponentGroup {
    pub fn parse(s: &str) -> Result<Self, UnipotentError> {
        let mut g = ComponentGroup::default();
        for f in s.split(" x ") {
            match f.trim() {
                "1" => {}
                "Z/2" => g.two_rank += 1,
                "S3" => g.s3 += 1,
                other => {
                    let k = other
                        .strip_prefix("(Z/2)^")
                        .and_then(|k| k.parse::<u32>().ok())
                        .ok_or_else(|| UnipotentError::Table(format!("component group `{s}`")))?;
                    g.two_rank += k;
                }
            }
        }
        Ok(g)
    }

    pub fn order(&self) -> u64 {
        (1u64 << self.two_rank) * 6u64.pow(self.s3)
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    fn product(&self, other: &ComponentGroup) -> ComponentGroup {
        ComponentGroup {
            two_rank: self.two_rank + other.two_rank,
            s3: self.s3 + other.s3,
        }
    }
}

impl fmt::Display for ComponentGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for _ in 0..self.s3 {
            parts.push("S3".to_string());
        }
        match self.two_rank {
            0 => {}
            1 => parts.push("Z/2".into()),
            k => parts.push(format!("(Z/2)^{k}")),
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" x "))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnipotentClass {
    pub host: String,
    pub name: String,
    /// Local class names, one per irreducible component.
    pub factors: Vec<String>,
    /// `(root index of a simple root, weight)` in Bourbaki order per component.
    pub weighted_dynkin: Vec<(usize, u8)>,
    /// In the rational span of the coroots.
    pub h_x: QVec,
    pub a_x: ComponentGroup,
    pub dim_bx: usize,
}

impl UnipotentClass {
    pub fn is_trivial(&self) -> bool {
        self.weighted_dynkin.iter().all(|&(_, w)| w == 0)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "host": self.host,
            "name": self.name,
            "weighted_dynkin": self.weighted_dynkin.iter().map(|&(_, w)| w).collect::<Vec<_>>(),
            "h_x": qvec_json(&self.h_x),
            "A_x": self.a_x.to_string(),
            "dim_Bx": self.dim_bx,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpringerRow {
    /// Index into [`SpringerData::classes`].
    pub class: usize,
    /// Character of `A_x`, one local label per component.
    pub rho1: Vec<String>,
    /// Index of the irreducible in the character table of `W`.
    pub weyl_char: usize,
}

impl SpringerRow {
    pub fn rho1_label(&self) -> String {
        join_labels(&self.rho1)
    }

    pub fn rho1_is_trivial(&self) -> bool {
        self.rho1.iter().all(|r| r == "1")
    }
}

fn join_labels(v: &[String]) -> String {
    if v.is_empty() {
        "1".into()
    } else {
        v.join(" x ")
    }
}

/// Classes, Springer rows and character names of one root datum.
#[derive(Clone, Debug)]
pub struct SpringerData {
    pub convention: SpringerConvention,
    pub classes: Vec<UnipotentClass>,
    pub rows: Vec<SpringerRow>,
    /// Name of each irreducible of `W`, in character-table order.
    pub char_names: Vec<String>,
}

impl SpringerData {
    pub fn geometric_rho1(&self, class: usize) -> Vec<Vec<String>> {
        self.rows
            .iter()
            .filter(|r| r.class == class)
            .map(|r| r.rho1.clone())
            .collect()
    }

    pub fn row(&self, class: usize, rho1: &[String]) -> Option<&SpringerRow> {
        self.rows.iter().find(|r| r.class == class && r.rho1 == rho1)
    }

    /// The row whose Weyl character is `chi`.
    pub fn row_of_char(&self, chi: usize) -> Option<&SpringerRow> {
        self.rows.iter().find(|r| r.weyl_char == chi)
    }

    pub fn class_by_name(&self, name: &str) -> Option<usize> {
        self.classes.iter().position(|c| c.name == name)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "convention": self.convention.as_str(),
            "classes": self.classes.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
            "rows": self.rows.iter().map(|r| json!({
                "class": self.classes[r.class].name,
                "rho1": r.rho1_label(),
                "weyl_char": self.char_names[r.weyl_char],
                "weyl_char_index": r.weyl_char,
            })).collect::<Vec<_>>(),
        })
    }
}

/// Solves `<alpha_i, h> = weight_i` with `h` in the span of the given simple coroots.
pub fn cocharacter_from_weights(rd: &RootDatum, weights: &[(usize, u8)]) -> QVec {
    let r = weights.len();
    if r == 0 {
        return vec![BigRational::zero(); rd.rank];
    }
    let a: Vec<QVec> = weights
        .iter()
        .map(|&(i, _)| {
            weights
                .iter()
                .map(|&(j, _)| BigRational::from_integer(dot_int(&rd.roots[i], &rd.coroots[j])))
                .collect()
        })
        .collect();
    let b: QVec = weights
        .iter()
        .map(|&(_, w)| BigRational::from_integer(w.into()))
        .collect();
    let c = solve_rational(&a, &b).expect("Cartan matrix is invertible");
    let mut h = vec![BigRational::zero(); rd.rank];
    for (cj, &(j, _)) in c.iter().zip(weights) {
        for (x, y) in h.iter_mut().zip(&rd.coroots[j]) {
            *x += cj * BigRational::from_integer(y.clone());
        }
    }
    h
}

/// `h_x` of a class: the dominant cocharacter reproducing its weighted Dynkin diagram.
pub fn h_cocharacter(x: &UnipotentClass) -> QVec {
    x.h_x.clone()
}

fn components_with_tables(
    rd: &RootDatum,
) -> Result<Vec<(Component, tables::TableDoc)>, UnipotentError> {
    recognize_components(rd)
        .into_iter()
        .map(|c| {
            if !c.cartan.is_materialized() {
                return Err(UnipotentError::UnsupportedType(c.cartan.to_string()));
            }
            let t = tables::local_table(&c.cartan)?;
            Ok((c, t))
        })
        .collect()
}

/// All index tuples of a product of lists with the given lengths (first factor slowest).
fn product_indices(lens: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &n in lens {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..n).map(move |i| {
                    let mut q = p.clone();
                    q.push(i);
                    q
                })
            })
            .collect();
    }
    out
}

fn build_classes(
    rd: &RootDatum,
    comps: &[(Component, tables::TableDoc)],
) -> Result<Vec<UnipotentClass>, UnipotentError> {
    let lens: Vec<usize> = comps.iter().map(|(_, t)| t.classes.len()).collect();
    let mut out = Vec::new();
    for idx in product_indices(&lens) {
        let mut factors = Vec::new();
        let mut weighted = Vec::new();
        let mut a_x = ComponentGroup::default();
        let mut dim_bx = 0;
        for ((comp, table), &i) in comps.iter().zip(&idx) {
            let c = &table.classes[i];
            if c.weights.len() != comp.simple.len() {
                return Err(UnipotentError::Table(format!("{}: weights of {}", table.cartan, c.name)));
            }
            factors.push(c.name.clone());
            weighted.extend(comp.simple.iter().copied().zip(c.weights.iter().copied()));
            a_x = a_x.product(&ComponentGroup::parse(&c.a_x)?);
            dim_bx += c.dim_bx;
        }
        out.push(UnipotentClass {
            host: rd.label.clone(),
            name: join_labels(&factors),
            h_x: cocharacter_from_weights(rd, &weighted),
            factors,
            weighted_dynkin: weighted,
            a_x,
            dim_bx,
        });
    }
    Ok(out)
}

/// Unipotent classes of the group with root datum `rd`.
pub fn unipotent_classes(rd: &RootDatum) -> Result<Vec<UnipotentClass>, UnipotentError> {
    build_classes(rd, &components_with_tables(rd)?)
}

/// Evaluates products of named local characters on `W(rd)`.
struct CharModel {
    /// `shapes[class][component]`.
    shapes: Vec<Vec<LocalShape>>,
    sign: Vec<i64>,
}

impl CharModel {
    fn new(rd: &RootDatum, comps: &[Component], w: &FiniteGroup) -> Self {
        let coords: Vec<ComponentCoords> = comps.iter().map(|c| ComponentCoords::new(rd, c)).collect();
        let mut shapes = Vec::new();
        let mut sign = Vec::new();
        for class in w.classes() {
            let m = &w.element(class.representative).matrix;
            shapes.push(coords.iter().map(|cc| cc.shape(m)).collect());
            let d = m.determinant().expect("square").to_i64().expect("unit");
            sign.push(d);
        }
        CharModel { shapes, sign }
    }

    fn class_function(&self, w: &FiniteGroup, names: &[&str], twist: bool) -> ClassFunction {
        let values = self
            .shapes
            .iter()
            .zip(&self.sign)
            .map(|(sh, &s)| {
                let v: i64 = names.iter().zip(sh).map(|(n, x)| local_value(n, x)).product();
                Cyclo::from_int(if twist { v * s } else { v })
            })
            .collect();
        ClassFunction::new(w, values)
    }
}

/// Names of the irreducibles of `w = W(rd)`, in character-table order.
pub fn weyl_character_names(rd: &RootDatum, w: &FiniteGroup) -> Result<Vec<String>, UnipotentError> {
    let comps = recognize_components(rd);
    if let Some(c) = comps.iter().find(|c| !c.cartan.is_materialized()) {
        return Err(UnipotentError::UnsupportedType(c.cartan.to_string()));
    }
    let model = CharModel::new(rd, &comps, w);
    let table = w.character_table();
    let local: Vec<Vec<String>> = comps.iter().map(local_names).collect();
    let lens: Vec<usize> = local.iter().map(|l| l.len()).collect();
    let mut names = vec![String::new(); table.num_classes()];
    for idx in product_indices(&lens) {
        let parts: Vec<&str> = idx.iter().zip(&local).map(|(&i, l)| l[i].as_str()).collect();
        let chi = model.class_function(w, &parts, false);
        let k = table
            .find(&chi)
            .ok_or_else(|| UnipotentError::Table(format!("{} is not irreducible", parts.join(" x "))))?;
        names[k] = if parts.is_empty() { "1".into() } else { parts.join(" x ") };
    }
    if names.iter().any(|n| n.is_empty()) {
        return Err(UnipotentError::Table("unnamed irreducible".into()));
    }
    Ok(names)
}

/// Springer correspondence of `rd` under [`CONV_SPR`].
pub fn springer_correspondence(rd: &RootDatum) -> Result<SpringerData, UnipotentError> {
    let w = weyl_group(rd)?;
    springer_correspondence_with(rd, &w, CONV_SPR)
}

/// Springer correspondence with an explicit Weyl group `w = W(rd)` and orientation.
pub fn springer_correspondence_with(
    rd: &RootDatum,
    w: &FiniteGroup,
    convention: SpringerConvention,
) -> Result<SpringerData, UnipotentError> {
    let comps = components_with_tables(rd)?;
    let classes = build_classes(rd, &comps)?;
    let bare: Vec<Component> = comps.iter().map(|(c, _)| c.clone()).collect();
    let model = CharModel::new(rd, &bare, w);
    let table = w.character_table();
    let lens: Vec<usize> = comps.iter().map(|(_, t)| t.springer.len()).collect();
    let twist = convention == SpringerConvention::Kato;
    let mut rows = Vec::new();
    for idx in product_indices(&lens) {
        let local: Vec<&tables::TableRow> =
            comps.iter().zip(&idx).map(|((_, t), &i)| &t.springer[i]).collect();
        let class_name = join_labels(&local.iter().map(|r| r.class.clone()).collect::<Vec<_>>());
        let class = classes
            .iter()
            .position(|c| c.name == class_name)
            .ok_or_else(|| UnipotentError::Table(format!("row for unknown class {class_name}")))?;
        let names: Vec<&str> = local.iter().map(|r| r.weyl_char.as_str()).collect();
        let chi = model.class_function(w, &names, twist);
        let weyl_char = table
            .find(&chi)
            .ok_or_else(|| UnipotentError::Table(format!("{} is not irreducible", names.join(" x "))))?;
        rows.push(SpringerRow {
            class,
            rho1: local.iter().map(|r| r.rho1.clone()).collect(),
            weyl_char,
        });
    }
    Ok(SpringerData {
        convention,
        classes,
        rows,
        char_names: weyl_character_names(rd, w)?,
    })
}

/// Characters of `A_x` that occur in the Springer correspondence.
pub fn geometric_rho1(data: &SpringerData, class: usize) -> Vec<Vec<String>> {
    data.geometric_rho1(class)
}

/// Weights `<alpha_i, h>` on the simple roots of `rd` after making `h` dominant.
pub fn dominant_weights(rd: &RootDatum, h: &[BigRational]) -> Vec<BigRational> {
    let d = rd.make_dominant(h);
    rd.simple_indices.iter().map(|&i| rd.pair_root(i, &d)).collect()
}

/// The class of `rd` whose `h_x` is conjugate to `h`, if any.
pub fn classify_cocharacter(
    rd: &RootDatum,
    classes: &[UnipotentClass],
    h: &[BigRational],
) -> Option<usize> {
    let target = dominant_weights(rd, h);
    classes
        .iter()
        .position(|c| dominant_weights(rd, &c.h_x) == target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::build_root_datum;

    #[test]
    fn sl2_classes_and_h() {
        let rd = build_root_datum("SL2").unwrap();
        let cl = unipotent_classes(&rd).unwrap();
        let names: Vec<&str> = cl.iter().map(|c| c.name.as_str()).collect();
        assert_eq!(names, vec!["(2)", "(1^2)"]);
        // h = alpha^vee for the regular class
        assert_eq!(cl[0].h_x, rd.coroots[rd.simple_indices[0]].iter().map(|x| BigRational::from_integer(x.clone())).collect::<Vec<_>>());
        assert!(cl[1].h_x.iter().all(|x| x.is_zero()));
    }

    #[test]
    fn sp4_has_four_classes_and_five_rows() {
        let rd = build_root_datum("Sp4").unwrap();
        let data = springer_correspondence(&rd).unwrap();
        assert_eq!(data.classes.len(), 4);
        assert_eq!(data.rows.len(), 5);
        let mut seen: Vec<usize> = data.rows.iter().map(|r| r.weyl_char).collect();
        seen.sort_unstable();
        seen.dedup();
        assert_eq!(seen.len(), 5);
        let two = data.class_by_name("(2^2)").unwrap();
        assert_eq!(data.geometric_rho1(two).len(), 2);
    }

    #[test]
    fn kato_orientation_sends_trivial_class_to_trivial_character() {
        for desc in ["SL3", "Sp4", "SO5", "G2", "GL2", "A1*A1"] {
            let rd = build_root_datum(desc).unwrap();
            let data = springer_correspondence(&rd).unwrap();
            let triv = data.classes.iter().position(|c| c.is_trivial()).unwrap();
            let row = data.rows.iter().find(|r| r.class == triv).unwrap();
            assert_eq!(row.weyl_char, 0, "{desc}");
        }
    }

    #[test]
    fn g2_names_cover_the_table() {
        let rd = build_root_datum("G2").unwrap();
        let w = weyl_group(&rd).unwrap();
        let names = weyl_character_names(&rd, &w).unwrap();
        assert_eq!(names.len(), 6);
        assert_eq!(names[0], "phi1,0");
    }

    #[test]
    fn classify_recovers_each_class() {
        let rd = build_root_datum("SL3").unwrap();
        let cl = unipotent_classes(&rd).unwrap();
        for (i, c) in cl.iter().enumerate() {
            let neg: QVec = c.h_x.iter().map(|x| -x).collect();
            assert_eq!(classify_cocharacter(&rd, &cl, &neg), Some(i));
        }
    }
}
