//! Exhaustive subgroup enumeration for small groups.
//!
//! Strategy: precompute the Cayley table, seed with every cyclic subgroup,
//! then repeatedly adjoin single elements to known subgroups and close until
//! no new subgroup appears. Any subgroup arises this way along a maximal
//! chain, so the enumeration is complete. Subgroups are deduplicated by
//! element set and finally bucketed into conjugacy classes.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::groups::{self, Group, SubgroupEmbedding};

/// Cayley table of a small group, for index-only arithmetic.
pub struct MulTable {
    pub n: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
}

impl MulTable {
    pub fn build(g: &Group, cap: usize) -> Result<MulTable> {
        let n = g.order() as usize;
        if n > cap {
            return Err(Error::resource(format!(
                "group order {n} exceeds the lattice cap of {cap}"
            )));
        }
        let mut mul = vec![0u32; n * n];
        for i in 0..n as u32 {
            for j in 0..n as u32 {
                mul[i as usize * n + j as usize] = g.mul_idx(i, j);
            }
        }
        let mut inv = vec![0u32; n];
        for i in 0..n as u32 {
            inv[i as usize] = g.inv_idx(i);
        }
        Ok(MulTable { n, mul, inv })
    }

    #[inline]
    pub fn mul(&self, i: u32, j: u32) -> u32 {
        self.mul[i as usize * self.n + j as usize]
    }
    #[inline]
    pub fn inv(&self, i: u32) -> u32 {
        self.inv[i as usize]
    }
    #[inline]
    pub fn conj(&self, x: u32, g: u32) -> u32 {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// Closure of a set of generator indices, as a sorted index list.
    pub fn close(&self, gens: &[u32]) -> Vec<u32> {
        let mut seen = vec![false; self.n];
        seen[0] = true;
        let mut out = vec![0u32];
        let mut head = 0;
        while head < out.len() {
            let x = out[head];
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    out.push(y);
                }
            }
            head += 1;
        }
        out.sort_unstable();
        out
    }
}

/// One conjugacy class of subgroups: the representative element set (least in
/// its class), the raw number of conjugate subgroups, and an embedding of the
/// representative.
pub struct SubgroupClass {
    /// Sorted element indices of the representative subgroup.
    pub rep: Vec<u32>,
    pub order: u64,
    /// Number of distinct conjugate subgroups in this class.
    pub conjugates: u64,
    pub embedding: SubgroupEmbedding,
}

/// All subgroups of `g` up to conjugacy, ordered by (order, least element
/// set). Requires |G| within the lattice cap.
pub fn all_subgroups(g: &Group, cap: usize) -> Result<Vec<SubgroupClass>> {
    let table = MulTable::build(g, cap)?;
    let n = table.n;

    let mut known: HashSet<Vec<u32>> = HashSet::new();
    let mut worklist: Vec<Vec<u32>> = Vec::new();
    for x in 0..n as u32 {
        let cyc = table.close(&[x]);
        if known.insert(cyc.clone()) {
            worklist.push(cyc);
        }
    }
    let mut head = 0;
    while head < worklist.len() {
        let base = worklist[head].clone();
        head += 1;
        if base.len() == n {
            continue;
        }
        let in_base: HashSet<u32> = base.iter().copied().collect();
        for x in 0..n as u32 {
            if in_base.contains(&x) {
                continue;
            }
            let mut gens = base.clone();
            gens.push(x);
            let sub = table.close(&gens);
            if known.insert(sub.clone()) {
                worklist.push(sub);
            }
        }
    }

    // Bucket by conjugacy.
    let mut all: Vec<Vec<u32>> = known.into_iter().collect();
    all.sort_unstable_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let mut assigned: HashSet<Vec<u32>> = HashSet::new();
    let mut classes = Vec::new();
    for set in &all {
        if assigned.contains(set) {
            continue;
        }
        let mut orbit: HashSet<Vec<u32>> = HashSet::new();
        for conjugator in 0..n as u32 {
            let mut image: Vec<u32> =
                set.iter().map(|&x| table.conj(x, conjugator)).collect();
            image.sort_unstable();
            orbit.insert(image);
        }
        let mut orbit: Vec<Vec<u32>> = orbit.into_iter().collect();
        orbit.sort_unstable();
        let rep = orbit[0].clone();
        let conjugates = orbit.len() as u64;
        for s in orbit {
            assigned.insert(s);
        }
        let gens = groups::minimal_generating_indices(g, &rep);
        let gen_elems: Vec<_> =
            gens.iter().map(|&i| g.elements()[i as usize].clone()).collect();
        let embedding = groups::subgroup_embed(g, &gen_elems, n + 1)?;
        if embedding.sub().order() != rep.len() as u64 {
            return Err(Error::internal("subgroup closure mismatch in lattice enumeration"));
        }
        classes.push(SubgroupClass { rep, order: set.len() as u64, conjugates, embedding });
    }
    classes.sort_by(|a, b| a.order.cmp(&b.order).then_with(|| a.rep.cmp(&b.rep)));
    Ok(classes)
}

/// Is some conjugate of the subgroup `k` (element indices) contained in the
/// subgroup `h` (element indices)?
pub fn contained_up_to_conjugacy(table: &MulTable, k: &[u32], h: &[u32]) -> bool {
    let h_set: HashSet<u32> = h.iter().copied().collect();
    (0..table.n as u32).any(|g| k.iter().all(|&x| h_set.contains(&table.conj(x, g))))
}

/// Lattice self-consistency: every subgroup of every listed representative
/// appears in the list up to conjugacy. Used by the property suite.
pub fn verify_lattice_closed(g: &Group, classes: &[SubgroupClass], cap: usize) -> Result<()> {
    let table = MulTable::build(g, cap)?;
    let reps: Vec<&Vec<u32>> = classes.iter().map(|c| &c.rep).collect();
    for class in classes {
        let h = groups::group_from_indices(g, &class.rep, cap)?;
        for inner in all_subgroups(&h, cap)? {
            // map the inner subgroup's element indices back to parent indices
            let parent_set: Vec<u32> = inner
                .rep
                .iter()
                .map(|&i| g.element_index(&h.elements()[i as usize]).expect("subgroup element"))
                .collect();
            let found = reps.iter().any(|r| {
                r.len() == parent_set.len() && contained_up_to_conjugacy(&table, &parent_set, r)
            });
            if !found {
                return Err(Error::internal(format!(
                    "subgroup of order {} inside a listed subgroup is missing from the lattice",
                    parent_set.len()
                )));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{closure, GroupElement, GroupKind};

    fn s3() -> Group {
        closure(
            GroupKind::Perm { degree: 3 },
            vec![GroupElement::Perm(vec![1, 0, 2]), GroupElement::Perm(vec![1, 2, 0])],
            100,
        )
        .unwrap()
    }

    #[test]
    fn s3_lattice() {
        let g = s3();
        let classes = all_subgroups(&g, 500).unwrap();
        let orders: Vec<u64> = classes.iter().map(|c| c.order).collect();
        assert_eq!(orders, vec![1, 2, 3, 6]);
        let conjugates: Vec<u64> = classes.iter().map(|c| c.conjugates).collect();
        assert_eq!(conjugates, vec![1, 3, 1, 1]);
    }

    #[test]
    fn c6_lattice_is_divisor_lattice() {
        let c6 = closure(
            GroupKind::Perm { degree: 6 },
            vec![GroupElement::Perm(vec![1, 2, 3, 4, 5, 0])],
            100,
        )
        .unwrap();
        let classes = all_subgroups(&c6, 500).unwrap();
        let orders: Vec<u64> = classes.iter().map(|c| c.order).collect();
        assert_eq!(orders, vec![1, 2, 3, 6]);
        assert!(classes.iter().all(|c| c.conjugates == 1));
    }

    #[test]
    fn s4_lattice_counts() {
        let s4 = closure(
            GroupKind::Perm { degree: 4 },
            vec![
                GroupElement::Perm(vec![1, 0, 2, 3]),
                GroupElement::Perm(vec![1, 2, 3, 0]),
            ],
            100,
        )
        .unwrap();
        let classes = all_subgroups(&s4, 500).unwrap();
        // S4 has 30 subgroups in 11 conjugacy classes.
        assert_eq!(classes.len(), 11);
        let total: u64 = classes.iter().map(|c| c.conjugates).sum();
        assert_eq!(total, 30);
        verify_lattice_closed(&s4, &classes, 500).unwrap();
    }

    #[test]
    fn lattice_cap() {
        let g = s3();
        assert!(matches!(all_subgroups(&g, 2), Err(crate::Error::Resource(_))));
    }
}
