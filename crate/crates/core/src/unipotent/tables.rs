//! Local unipotent data per irreducible type: generated for `A_n`, read from
//! the shipped JSON tables otherwise.

use serde::Deserialize;

use super::weylchar::{partition_name, partitions};
use super::UnipotentError;
use crate::rootdata::CartanType;

pub const TABLE_VERSION: u32 = 1;

#[derive(Clone, Debug, Deserialize)]
pub struct TableDoc {
    pub version: u32,
    #[serde(rename = "type")]
    pub cartan: String,
    pub group: String,
    pub orientation: String,
    pub classes: Vec<TableClass>,
    pub springer: Vec<TableRow>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct TableClass {
    pub name: String,
    pub weights: Vec<u8>,
    #[serde(rename = "A_x")]
    pub a_x: String,
    #[serde(rename = "dim_Bx")]
    pub dim_bx: usize,
    #[serde(default)]
    pub source: String,
}

#[derive(Clone, Debug, Deserialize)]
pub struct TableRow {
    pub class: String,
    pub rho1: String,
    pub weyl_char: String,
    #[serde(default)]
    pub source: String,
}

fn raw_table(t: &CartanType) -> Option<&'static str> {
    Some(match (t.family, t.rank) {
        ('B', 2) => include_str!("../../data/springer/B2.json"),
        ('C', 2) => include_str!("../../data/springer/C2.json"),
        ('B', 3) => include_str!("../../data/springer/B3.json"),
        ('C', 3) => include_str!("../../data/springer/C3.json"),
        ('G', 2) => include_str!("../../data/springer/G2.json"),
        _ => return None,
    })
}

/// Local table of one irreducible type, in the `regular <-> trivial` orientation.
pub fn local_table(t: &CartanType) -> Result<TableDoc, UnipotentError> {
    if t.family == 'A' && (1..=4).contains(&t.rank) {
        return Ok(type_a_table(t.rank));
    }
    let raw = raw_table(t).ok_or_else(|| UnipotentError::UnsupportedType(t.to_string()))?;
    let doc: TableDoc =
        serde_json::from_str(raw).map_err(|e| UnipotentError::Table(format!("{t}: {e}")))?;
    if doc.version != TABLE_VERSION {
        return Err(UnipotentError::Table(format!(
            "{t}: table version {} (expected {TABLE_VERSION})",
            doc.version
        )));
    }
    Ok(doc)
}

/// `A_r`: partitions of `r + 1`, weights read off the eigenvalues of `h`.
fn type_a_table(r: usize) -> TableDoc {
    let n = r + 1;
    let mut classes = Vec::new();
    let mut springer = Vec::new();
    for lambda in partitions(n) {
        let mut h: Vec<i64> = lambda
            .iter()
            .flat_map(|&k| (0..k).map(move |j| k as i64 - 1 - 2 * j as i64))
            .collect();
        h.sort_unstable_by(|a, b| b.cmp(a));
        let weights = (0..r).map(|k| (h[k] - h[k + 1]) as u8).collect();
        let dual: Vec<usize> = (1..=lambda[0])
            .map(|i| lambda.iter().filter(|&&p| p >= i).count())
            .collect();
        let dim_bx = (dual.iter().map(|c| c * c).sum::<usize>() - n) / 2;
        let name = partition_name(&lambda);
        classes.push(TableClass {
            name: name.clone(),
            weights,
            a_x: "1".into(),
            dim_bx,
            source: "partitions".into(),
        });
        springer.push(TableRow {
            class: name.clone(),
            rho1: "1".into(),
            weyl_char: name,
            source: "partitions".into(),
        });
    }
    TableDoc {
        version: TABLE_VERSION,
        cartan: format!("A{r}"),
        group: format!("SL{n}"),
        orientation: "regular<->trivial".into(),
        classes,
        springer,
    }
}
