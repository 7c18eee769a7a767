//! JSON group formats and parsing.
//!
//! Groups are exchanged as a generator list plus ambient data:
//!
//! ```json
//! {"kind":"perm","degree":5,"generators":[[1,2,3,4,0],[0,2,4,1,3]]}
//! {"kind":"mat4","field":{"m":3,"modulus":11},"generators":[[16 bitmasks]]}
//! ```
//!
//! Field elements serialize as decimal bitmask integers next to the field's
//! {m, modulus}. Extra keys (like the certificate block the CLI appends) are
//! ignored on input, so everything the CLI emits re-parses to an equal group.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ff2m::FieldParams;
use crate::groups::{closure, Group, GroupElement, GroupKind};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct FieldJson {
    pub m: u32,
    pub modulus: u64,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum GroupJson {
    Perm { degree: usize, generators: Vec<Vec<u16>> },
    Mat4 { field: FieldJson, generators: Vec<Vec<u64>> },
}

/// Serialize a group as its kind plus generator list.
pub fn group_to_json(g: &Group) -> GroupJson {
    match g.kind() {
        GroupKind::Perm { degree } => GroupJson::Perm {
            degree: *degree,
            generators: g
                .generators()
                .iter()
                .map(|e| match e {
                    GroupElement::Perm(images) => images.clone(),
                    GroupElement::Mat4(_) => unreachable!("perm group"),
                })
                .collect(),
        },
        GroupKind::Mat4 { field } => GroupJson::Mat4 {
            field: FieldJson { m: field.m(), modulus: field.modulus() },
            generators: g
                .generators()
                .iter()
                .map(|e| match e {
                    GroupElement::Mat4(entries) => {
                        entries.iter().map(|x| x.bits() as u64).collect()
                    }
                    GroupElement::Perm(_) => unreachable!("matrix group"),
                })
                .collect(),
        },
    }
}

/// Reconstruct and close a group from its JSON form.
pub fn group_from_json(j: &GroupJson, cap: usize) -> Result<Group> {
    match j {
        GroupJson::Perm { degree, generators } => {
            let gens = generators.iter().map(|im| GroupElement::Perm(im.clone())).collect();
            closure(GroupKind::Perm { degree: *degree }, gens, cap)
        }
        GroupJson::Mat4 { field, generators } => {
            let fp = FieldParams::with_modulus(field.m, field.modulus)?;
            let gens: Result<Vec<GroupElement>> = generators
                .iter()
                .enumerate()
                .map(|(gi, entries)| mat4_from_bits(&fp, gi, entries))
                .collect();
            closure(GroupKind::Mat4 { field: fp }, gens?, cap)
        }
    }
}

fn mat4_from_bits(fp: &FieldParams, gi: usize, entries: &[u64]) -> Result<GroupElement> {
    if entries.len() != 16 {
        return Err(Error::usage(format!(
            "generator {gi}: a 4x4 matrix needs 16 entries, got {}",
            entries.len()
        )));
    }
    let mut out = [fp.zero(); 16];
    for (i, &bits) in entries.iter().enumerate() {
        out[i] = fp.element(bits).map_err(|e| {
            Error::usage(format!("generator {gi}, entry {i}: {e}"))
        })?;
    }
    Ok(GroupElement::Mat4(out))
}

/// Parse a JSON group description (as a string) and close it.
pub fn parse_group_str(s: &str, cap: usize) -> Result<Group> {
    let j: GroupJson = serde_json::from_str(s)
        .map_err(|e| Error::usage(format!("group JSON: {e}")))?;
    group_from_json(&j, cap)
}

/// Parse a JSON array of subgroup generators in the parent's element format:
/// image arrays for a permutation parent, 16-entry bitmask arrays for a
/// matrix parent. Each generator must already lie in the parent.
pub fn parse_subgroup_gens(parent: &Group, s: &str) -> Result<Vec<GroupElement>> {
    let gens: Vec<GroupElement> = match parent.kind() {
        GroupKind::Perm { .. } => {
            let raw: Vec<Vec<u16>> = serde_json::from_str(s)
                .map_err(|e| Error::usage(format!("subgroup generators JSON: {e}")))?;
            raw.into_iter().map(GroupElement::Perm).collect()
        }
        GroupKind::Mat4 { field } => {
            let raw: Vec<Vec<u64>> = serde_json::from_str(s)
                .map_err(|e| Error::usage(format!("subgroup generators JSON: {e}")))?;
            raw.iter()
                .enumerate()
                .map(|(gi, entries)| mat4_from_bits(field, gi, entries))
                .collect::<Result<Vec<_>>>()?
        }
    };
    for (i, g) in gens.iter().enumerate() {
        parent.kind().validate(g)?;
        if !parent.contains(g) {
            return Err(Error::usage(format!(
                "subgroup generator {i} is not an element of the group"
            )));
        }
    }
    Ok(gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perm_round_trip() {
        let g = parse_group_str(
            r#"{"kind":"perm","degree":3,"generators":[[1,0,2],[1,2,0]]}"#,
            100,
        )
        .unwrap();
        assert_eq!(g.order(), 6);
        let j = group_to_json(&g);
        let g2 = group_from_json(&j, 100).unwrap();
        assert!(g.same_element_set(&g2));
    }

    #[test]
    fn rejects_malformed_inputs() {
        // not a bijection
        let r = parse_group_str(r#"{"kind":"perm","degree":3,"generators":[[0,0,1]]}"#, 100);
        assert!(matches!(r, Err(Error::Usage(_))));
        // reducible modulus
        let r = parse_group_str(
            r#"{"kind":"mat4","field":{"m":3,"modulus":9},"generators":[]}"#,
            100,
        );
        assert!(matches!(r, Err(Error::Usage(_))));
        // truncated matrix
        let r = parse_group_str(
            r#"{"kind":"mat4","field":{"m":3,"modulus":11},"generators":[[1,0,0]]}"#,
            100,
        );
        assert!(matches!(r, Err(Error::Usage(_))));
        // garbage
        assert!(parse_group_str("{", 100).is_err());
    }

    #[test]
    fn extra_keys_are_ignored() {
        let g = parse_group_str(
            r#"{"kind":"perm","degree":3,"generators":[[1,2,0]],"certificate":{"order":3}}"#,
            100,
        )
        .unwrap();
        assert_eq!(g.order(), 3);
    }

    #[test]
    fn subgroup_gens_must_lie_in_parent() {
        let g = parse_group_str(
            r#"{"kind":"perm","degree":4,"generators":[[1,2,3,0]]}"#,
            100,
        )
        .unwrap();
        assert!(parse_subgroup_gens(&g, "[[2,3,0,1]]").is_ok());
        // a transposition is not in C4
        let r = parse_subgroup_gens(&g, "[[1,0,2,3]]");
        assert!(matches!(r, Err(Error::Usage(_))));
    }
}
