//! Generic finite-group engine over fully enumerated element sets.
//!
//! Elements are either permutations of {0, .., N-1} (arrays of point images)
//! or invertible 4x4 matrices over GF(2^m). Both have an injective canonical
//! byte encoding; the derived `Ord` on [`GroupElement`] agrees with the
//! lexicographic order of that encoding, and every tie-break in the crate
//! uses it. Groups are immutable after construction; conjugacy-class data is
//! computed once on demand and cached.
//!
//! Products compose left to right: `mul(a, b)` means "apply a, then b". For
//! permutations `mul(a, b)[x] = b[a[x]]`; for matrices it is the ordinary
//! matrix product acting on row vectors.

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::ff2m::{FieldElement, FieldParams};

// ---------------------------------------------------------------------------
// Elements
// ---------------------------------------------------------------------------

/// A group element: a permutation given by its point images, or a 4x4 matrix
/// over GF(2^m) in row-major order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum GroupElement {
    Perm(Vec<u16>),
    Mat4([FieldElement; 16]),
}

impl GroupElement {
    /// Injective canonical byte encoding: a kind tag followed by the images
    /// (permutation) or entry bitmasks (matrix) as big-endian u16.
    pub fn encode(&self) -> Vec<u8> {
        match self {
            GroupElement::Perm(images) => {
                let mut out = Vec::with_capacity(1 + 2 * images.len());
                out.push(0u8);
                for &i in images {
                    out.extend_from_slice(&i.to_be_bytes());
                }
                out
            }
            GroupElement::Mat4(entries) => {
                let mut out = Vec::with_capacity(1 + 32);
                out.push(1u8);
                for &e in entries {
                    out.extend_from_slice(&e.bits().to_be_bytes());
                }
                out
            }
        }
    }
}

/// The ambient structure elements live in: a permutation degree or a matrix
/// field. Supplies identity, product, inverse and validation.
#[derive(Clone, Debug, PartialEq)]
pub enum GroupKind {
    Perm { degree: usize },
    Mat4 { field: FieldParams },
}

impl GroupKind {
    pub fn identity(&self) -> GroupElement {
        match self {
            GroupKind::Perm { degree } => GroupElement::Perm((0..*degree as u16).collect()),
            GroupKind::Mat4 { field } => {
                let mut entries = [field.zero(); 16];
                for i in 0..4 {
                    entries[i * 4 + i] = field.one();
                }
                GroupElement::Mat4(entries)
            }
        }
    }

    /// apply `a`, then `b`.
    pub fn mul(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        match (self, a, b) {
            (GroupKind::Perm { .. }, GroupElement::Perm(pa), GroupElement::Perm(pb)) => {
                GroupElement::Perm(pa.iter().map(|&x| pb[x as usize]).collect())
            }
            (GroupKind::Mat4 { field }, GroupElement::Mat4(ma), GroupElement::Mat4(mb)) => {
                let mut out = [field.zero(); 16];
                for i in 0..4 {
                    for k in 0..4 {
                        let a_ik = ma[i * 4 + k];
                        if a_ik.is_zero() {
                            continue;
                        }
                        for j in 0..4 {
                            out[i * 4 + j] = field
                                .add(out[i * 4 + j], field.mul(a_ik, mb[k * 4 + j]));
                        }
                    }
                }
                GroupElement::Mat4(out)
            }
            _ => panic!("usage error: mixed element kinds in group operation"),
        }
    }

    pub fn inv(&self, a: &GroupElement) -> GroupElement {
        match (self, a) {
            (GroupKind::Perm { .. }, GroupElement::Perm(p)) => {
                let mut out = vec![0u16; p.len()];
                for (i, &img) in p.iter().enumerate() {
                    out[img as usize] = i as u16;
                }
                GroupElement::Perm(out)
            }
            (GroupKind::Mat4 { field }, GroupElement::Mat4(m)) => GroupElement::Mat4(
                mat4_inv(field, m).expect("group elements are invertible by construction"),
            ),
            _ => panic!("usage error: mixed element kinds in group operation"),
        }
    }

    /// Check that an element is well formed for this kind: a bijection of the
    /// right degree, or an invertible matrix over the right field.
    pub fn validate(&self, g: &GroupElement) -> Result<()> {
        match (self, g) {
            (GroupKind::Perm { degree }, GroupElement::Perm(images)) => {
                if images.len() != *degree {
                    return Err(Error::usage(format!(
                        "permutation has {} images, expected degree {degree}",
                        images.len()
                    )));
                }
                let mut seen = vec![false; *degree].into_boxed_slice();
                for &img in images {
                    let img = img as usize;
                    if img >= *degree || seen[img] {
                        return Err(Error::usage(format!(
                            "images {images:?} do not form a bijection on {degree} points"
                        )));
                    }
                    seen[img] = true;
                }
                Ok(())
            }
            (GroupKind::Mat4 { field }, GroupElement::Mat4(entries)) => {
                for e in entries {
                    // Reconstructing through the field checks the degree tag.
                    field.element(e.bits() as u64)?;
                    if *e != field.element(e.bits() as u64)? {
                        return Err(Error::usage("matrix entry from a different field".to_string()));
                    }
                }
                if mat4_det(field, entries).is_zero() {
                    return Err(Error::Domain(
                        "matrix generator is singular over GF(2^m)".to_string(),
                    ));
                }
                Ok(())
            }
            _ => Err(Error::usage("element kind does not match group kind")),
        }
    }

    pub fn degree(&self) -> Option<usize> {
        match self {
            GroupKind::Perm { degree } => Some(*degree),
            GroupKind::Mat4 { .. } => None,
        }
    }

    pub fn field(&self) -> Option<&FieldParams> {
        match self {
            GroupKind::Perm { .. } => None,
            GroupKind::Mat4 { field } => Some(field),
        }
    }
}

/// Determinant of a 4x4 matrix over GF(2^m) by elimination.
pub fn mat4_det(field: &FieldParams, entries: &[FieldElement; 16]) -> FieldElement {
    let mut m = *entries;
    let mut det = field.one();
    for col in 0..4 {
        let Some(pivot) = (col..4).find(|&r| !m[r * 4 + col].is_zero()) else {
            return field.zero();
        };
        if pivot != col {
            for j in 0..4 {
                m.swap(pivot * 4 + j, col * 4 + j);
            }
            // char 2: row swaps do not change the determinant sign
        }
        det = field.mul(det, m[col * 4 + col]);
        let inv = field.inv(m[col * 4 + col]).expect("pivot nonzero");
        for r in (col + 1)..4 {
            if m[r * 4 + col].is_zero() {
                continue;
            }
            let f = field.mul(m[r * 4 + col], inv);
            for j in col..4 {
                let s = field.mul(f, m[col * 4 + j]);
                m[r * 4 + j] = field.add(m[r * 4 + j], s);
            }
        }
    }
    det
}

/// Inverse of a 4x4 matrix over GF(2^m) by Gauss-Jordan elimination.
pub fn mat4_inv(field: &FieldParams, entries: &[FieldElement; 16]) -> Result<[FieldElement; 16]> {
    let mut a = *entries;
    let mut b = {
        let mut id = [field.zero(); 16];
        for i in 0..4 {
            id[i * 4 + i] = field.one();
        }
        id
    };
    for col in 0..4 {
        let Some(pivot) = (col..4).find(|&r| !a[r * 4 + col].is_zero()) else {
            return Err(Error::domain("singular matrix over GF(2^m)"));
        };
        if pivot != col {
            for j in 0..4 {
                a.swap(pivot * 4 + j, col * 4 + j);
                b.swap(pivot * 4 + j, col * 4 + j);
            }
        }
        let inv = field.inv(a[col * 4 + col])?;
        for j in 0..4 {
            a[col * 4 + j] = field.mul(a[col * 4 + j], inv);
            b[col * 4 + j] = field.mul(b[col * 4 + j], inv);
        }
        for r in 0..4 {
            if r == col || a[r * 4 + col].is_zero() {
                continue;
            }
            let f = a[r * 4 + col];
            for j in 0..4 {
                let sa = field.mul(f, a[col * 4 + j]);
                let sb = field.mul(f, b[col * 4 + j]);
                a[r * 4 + j] = field.add(a[r * 4 + j], sa);
                b[r * 4 + j] = field.add(b[r * 4 + j], sb);
            }
        }
    }
    Ok(b)
}

// ---------------------------------------------------------------------------
// Groups
// ---------------------------------------------------------------------------

/// A finite group with its full element enumeration, an index from elements
/// to positions, and lazily cached conjugacy-class data.
#[derive(Debug)]
pub struct Group {
    kind: GroupKind,
    generators: Vec<GroupElement>,
    elements: Vec<GroupElement>,
    index: HashMap<GroupElement, u32>,
    classes: OnceLock<ConjClasses>,
}

impl Clone for Group {
    fn clone(&self) -> Self {
        let classes = OnceLock::new();
        if let Some(c) = self.classes.get() {
            let _ = classes.set(c.clone());
        }
        Group {
            kind: self.kind.clone(),
            generators: self.generators.clone(),
            elements: self.elements.clone(),
            index: self.index.clone(),
            classes,
        }
    }
}

impl Group {
    pub fn kind(&self) -> &GroupKind {
        &self.kind
    }
    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }
    pub fn generators(&self) -> &[GroupElement] {
        &self.generators
    }
    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }
    /// Position of an element in the enumeration, if it belongs to the group.
    pub fn element_index(&self, g: &GroupElement) -> Option<u32> {
        self.index.get(g).copied()
    }
    pub fn contains(&self, g: &GroupElement) -> bool {
        self.index.contains_key(g)
    }

    /// Index arithmetic: product of elements given by index.
    pub fn mul_idx(&self, i: u32, j: u32) -> u32 {
        let p = self.kind.mul(&self.elements[i as usize], &self.elements[j as usize]);
        self.index[&p]
    }
    pub fn inv_idx(&self, i: u32) -> u32 {
        let p = self.kind.inv(&self.elements[i as usize]);
        self.index[&p]
    }

    /// Multiplicative order of the element at the given index.
    pub fn element_order_idx(&self, i: u32) -> u64 {
        element_order(&self.kind, &self.elements[i as usize])
    }

    /// Index of the first element (in enumeration order) of the given order.
    pub fn first_element_of_order(&self, order: u64) -> Option<u32> {
        let cc = self.classes();
        (0..self.order() as u32).find(|&i| cc.element_orders[cc.class_of[i as usize] as usize] == order)
    }

    /// Conjugacy classes, computed on first use and cached.
    pub fn classes(&self) -> &ConjClasses {
        self.classes.get_or_init(|| conjugacy_classes(self))
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().enumerate().all(|(i, a)| {
            self.generators[..i]
                .iter()
                .all(|b| self.kind.mul(a, b) == self.kind.mul(b, a))
        })
    }

    /// Exponent: least common multiple of the element orders.
    pub fn exponent(&self) -> u64 {
        self.classes()
            .element_orders
            .iter()
            .fold(1u64, |acc, &o| num_integer::lcm(acc, o))
    }

    /// Same underlying set of elements (the discovery order may differ).
    pub fn same_element_set(&self, other: &Group) -> bool {
        self.kind == other.kind
            && self.elements.len() == other.elements.len()
            && self.elements.iter().all(|e| other.contains(e))
    }
}

/// Breadth-first product closure of a generator list, with a hard cap on the
/// number of elements. Element order is the deterministic BFS discovery
/// order: identity first, then products in schedule order.
pub fn closure(kind: GroupKind, generators: Vec<GroupElement>, cap: usize) -> Result<Group> {
    for g in &generators {
        kind.validate(g)?;
    }
    let identity = kind.identity();
    let mut elements = vec![identity.clone()];
    let mut index = HashMap::new();
    index.insert(identity, 0u32);
    let mut head = 0usize;
    while head < elements.len() {
        for gi in 0..generators.len() {
            let y = kind.mul(&elements[head], &generators[gi]);
            if !index.contains_key(&y) {
                if elements.len() >= cap {
                    return Err(Error::resource(format!(
                        "closure exceeded the cap of {cap} elements"
                    )));
                }
                index.insert(y.clone(), elements.len() as u32);
                elements.push(y);
            }
        }
        head += 1;
    }
    Ok(Group { kind, generators, elements, index, classes: OnceLock::new() })
}

/// Order of a single element by repeated multiplication.
pub fn element_order(kind: &GroupKind, x: &GroupElement) -> u64 {
    let identity = kind.identity();
    let mut acc = x.clone();
    let mut order = 1u64;
    while acc != identity {
        acc = kind.mul(&acc, x);
        order += 1;
    }
    order
}

// ---------------------------------------------------------------------------
// Conjugacy classes
// ---------------------------------------------------------------------------

/// The conjugacy-class partition of a group: representatives (least canonical
/// encoding per class), sizes, membership maps, inverse classes, and element
/// orders per class. Class 0 is always the identity singleton.
#[derive(Clone, Debug)]
pub struct ConjClasses {
    /// Element index of the representative (least element) of each class.
    pub reps: Vec<u32>,
    pub sizes: Vec<u64>,
    /// Members of each class as ascending element indices.
    pub members: Vec<Vec<u32>>,
    /// Class index of every element.
    pub class_of: Vec<u32>,
    /// Class of the inverses of a class's members; an involution on classes.
    pub inverse_class: Vec<u32>,
    /// Order of the elements in each class.
    pub element_orders: Vec<u64>,
}

impl ConjClasses {
    pub fn count(&self) -> usize {
        self.reps.len()
    }
}

/// Orbit partition of the elements under conjugation by the generators.
pub fn conjugacy_classes(g: &Group) -> ConjClasses {
    let n = g.elements.len();
    let gen_invs: Vec<GroupElement> =
        g.generators.iter().map(|x| g.kind.inv(x)).collect();
    let mut class_of = vec![u32::MAX; n];
    let mut members: Vec<Vec<u32>> = Vec::new();
    let mut reps = Vec::new();
    let mut sizes = Vec::new();

    for start in 0..n as u32 {
        if class_of[start as usize] != u32::MAX {
            continue;
        }
        let class_idx = members.len() as u32;
        let mut orbit = vec![start];
        class_of[start as usize] = class_idx;
        let mut head = 0;
        while head < orbit.len() {
            let x = &g.elements[orbit[head] as usize];
            for (gen, gen_inv) in g.generators.iter().zip(gen_invs.iter()) {
                let y = g.kind.mul(&g.kind.mul(gen_inv, x), gen);
                let yi = g.index[&y];
                if class_of[yi as usize] == u32::MAX {
                    class_of[yi as usize] = class_idx;
                    orbit.push(yi);
                }
            }
            head += 1;
        }
        orbit.sort_unstable();
        let rep = *orbit
            .iter()
            .min_by(|&&a, &&b| g.elements[a as usize].cmp(&g.elements[b as usize]))
            .expect("orbit nonempty");
        sizes.push(orbit.len() as u64);
        reps.push(rep);
        members.push(orbit);
    }

    let inverse_class: Vec<u32> = reps
        .iter()
        .map(|&r| {
            let inv = g.kind.inv(&g.elements[r as usize]);
            class_of[g.index[&inv] as usize]
        })
        .collect();
    let element_orders: Vec<u64> = reps
        .iter()
        .map(|&r| element_order(&g.kind, &g.elements[r as usize]))
        .collect();

    let cc = ConjClasses { reps, sizes, members, class_of, inverse_class, element_orders };
    // Structural invariants.
    let total: u64 = cc.sizes.iter().sum();
    assert_eq!(total, n as u64, "class sizes must sum to the group order");
    assert!(cc.sizes.iter().all(|&s| n as u64 % s == 0), "class sizes divide the order");
    assert_eq!(cc.sizes[0], 1, "identity class is a singleton");
    assert_eq!(cc.class_of[0], 0, "identity is in class 0");
    for (c, &ic) in cc.inverse_class.iter().enumerate() {
        assert_eq!(cc.inverse_class[ic as usize] as usize, c, "inverse map is an involution");
    }
    cc
}

/// Order of the centralizer of the element at `idx`: |G| / |class|.
pub fn centralizer_order(g: &Group, idx: u32) -> u64 {
    let cc = g.classes();
    g.order() / cc.sizes[cc.class_of[idx as usize] as usize]
}

// ---------------------------------------------------------------------------
// Subgroups
// ---------------------------------------------------------------------------

/// A subgroup H of a parent group, with the class-fusion map taking each
/// H-class to the parent class containing it. Elements of `sub` are elements
/// of the parent; `parent_index` maps sub positions to parent positions.
#[derive(Clone, Debug)]
pub struct SubgroupEmbedding {
    sub: Group,
    parent_index: Vec<u32>,
    fusion: Vec<u32>,
}

impl SubgroupEmbedding {
    pub fn sub(&self) -> &Group {
        &self.sub
    }
    pub fn parent_index(&self) -> &[u32] {
        &self.parent_index
    }
    /// Map from sub class index to parent class index.
    pub fn fusion(&self) -> &[u32] {
        &self.fusion
    }
}

/// Close `gens` inside the parent and compute the class fusion. Every
/// generator must already be a parent element; the fusion is verified
/// exhaustively (every sub element's parent class equals its sub-class's
/// fused class).
pub fn subgroup_embed(
    parent: &Group,
    gens: &[GroupElement],
    cap: usize,
) -> Result<SubgroupEmbedding> {
    for g in gens {
        if !parent.contains(g) {
            return Err(Error::usage(
                "subgroup generator does not belong to the parent group",
            ));
        }
    }
    let sub = closure(parent.kind.clone(), gens.to_vec(), cap)?;
    let parent_index: Vec<u32> = sub
        .elements
        .iter()
        .map(|e| {
            parent
                .element_index(e)
                .expect("closure of parent elements stays in the parent")
        })
        .collect();
    if parent.order() % sub.order() != 0 {
        return Err(Error::internal("subgroup order does not divide the parent order"));
    }
    let pc = parent.classes();
    let sc = sub.classes();
    let fusion: Vec<u32> = sc
        .reps
        .iter()
        .map(|&r| pc.class_of[parent_index[r as usize] as usize])
        .collect();
    for i in 0..sub.order() as usize {
        let fused = fusion[sc.class_of[i] as usize];
        if pc.class_of[parent_index[i] as usize] != fused {
            return Err(Error::internal("class fusion is not well defined"));
        }
    }
    Ok(SubgroupEmbedding { sub, parent_index, fusion })
}

/// Identity embedding of a group in itself.
pub fn self_embedding(g: &Group, cap: usize) -> Result<SubgroupEmbedding> {
    subgroup_embed(g, &g.generators().to_vec(), cap)
}

/// Elements g with subset^g = subset, by brute-force scan. `sub_gens` must
/// generate the subset (a subgroup); conjugating the generators into the
/// subset is then equivalent to stabilizing it. Returns ascending element
/// indices of the normalizer.
pub fn normalizer_indices(parent: &Group, sub_gens: &[u32], subset: &[u32]) -> Vec<u32> {
    let member: std::collections::HashSet<u32> = subset.iter().copied().collect();
    let gen_elems: Vec<&GroupElement> =
        sub_gens.iter().map(|&i| &parent.elements[i as usize]).collect();
    (0..parent.order() as u32)
        .filter(|&gi| {
            let g = &parent.elements[gi as usize];
            let g_inv = parent.kind.inv(g);
            gen_elems.iter().all(|s| {
                let conj = parent.kind.mul(&parent.kind.mul(&g_inv, s), g);
                member.contains(&parent.index[&conj])
            })
        })
        .collect()
}

/// Greedy minimal generating set for a closed element subset: scan candidates
/// in canonical element order and keep those that enlarge the running
/// closure. Deterministic, and small in practice.
pub fn minimal_generating_indices(parent: &Group, subset: &[u32]) -> Vec<u32> {
    let mut candidates: Vec<u32> = subset.to_vec();
    candidates.sort_by(|&a, &b| parent.elements[a as usize].cmp(&parent.elements[b as usize]));
    let target = subset.len();
    let mut gens: Vec<u32> = Vec::new();
    let mut closed: std::collections::HashSet<u32> = [0u32].into_iter().collect();
    for &c in &candidates {
        if closed.contains(&c) {
            continue;
        }
        gens.push(c);
        // re-close from scratch; subsets here are small
        closed.clear();
        closed.insert(0);
        let mut frontier = vec![0u32];
        while let Some(x) = frontier.pop() {
            for &g in &gens {
                let y = parent.mul_idx(x, g);
                if closed.insert(y) {
                    frontier.push(y);
                }
            }
        }
        if closed.len() == target {
            break;
        }
    }
    gens
}

/// Build a Group from a closed subset of parent elements (deterministic
/// generators found greedily).
pub fn group_from_indices(parent: &Group, subset: &[u32], cap: usize) -> Result<Group> {
    let gens = minimal_generating_indices(parent, subset);
    let gen_elems: Vec<GroupElement> =
        gens.iter().map(|&i| parent.elements[i as usize].clone()).collect();
    let g = closure(parent.kind.clone(), gen_elems, cap)?;
    if g.order() as usize != subset.len() {
        return Err(Error::internal("subset was not closed under the group operation"));
    }
    Ok(g)
}

/// The commutator subgroup [G, G] as the normal closure of the commutators
/// of the generators.
pub fn commutator_subgroup(g: &Group, cap: usize) -> Result<Group> {
    let kind = &g.kind;
    let mut gens: Vec<GroupElement> = Vec::new();
    let identity = kind.identity();
    for a in &g.generators {
        for b in &g.generators {
            let c = kind.mul(
                &kind.mul(&kind.inv(a), &kind.inv(b)),
                &kind.mul(a, b),
            );
            if c != identity && !gens.contains(&c) {
                gens.push(c);
            }
        }
    }
    loop {
        let sub = closure(kind.clone(), gens.clone(), cap)?;
        let mut added = false;
        for s in &gens.clone() {
            for t in &g.generators {
                let conj = kind.mul(&kind.mul(&kind.inv(t), s), t);
                if !sub.contains(&conj) && !gens.contains(&conj) {
                    gens.push(conj);
                    added = true;
                }
            }
        }
        if !added {
            return Ok(sub);
        }
    }
}

// ---------------------------------------------------------------------------
// Structure fingerprints
// ---------------------------------------------------------------------------

/// Cheap isomorphism-invariant statistics used to label subgroups in reports.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct StructureFingerprint {
    pub order: u64,
    pub cyclic: bool,
    pub abelian: bool,
    pub exponent: u64,
    pub class_count: usize,
    pub involutions: u64,
    /// A conventional name when the statistics pin one down (C_n, D_2n, ...).
    pub name: String,
}

pub fn fingerprint(g: &Group) -> StructureFingerprint {
    let cc = g.classes();
    let order = g.order();
    let exponent = g.exponent();
    let abelian = g.is_abelian();
    let cyclic = cc
        .element_orders
        .iter()
        .any(|&o| o == order);
    let involutions: u64 = cc
        .sizes
        .iter()
        .zip(cc.element_orders.iter())
        .filter(|(_, &o)| o == 2)
        .map(|(&s, _)| s)
        .sum();
    let name = if order == 1 {
        "1".to_string()
    } else if cyclic {
        format!("C{order}")
    } else if !abelian && order % 2 == 0 && is_dihedral(g) {
        format!("D{order}")
    } else if abelian {
        format!("Ab{order}")
    } else {
        format!("G{order}")
    };
    StructureFingerprint { order, cyclic, abelian, exponent, class_count: cc.count(), involutions, name }
}

/// Order-2k group with a cyclic subgroup of order k inverted by an outside
/// involution.
fn is_dihedral(g: &Group) -> bool {
    let n = g.order();
    if n % 2 != 0 || n < 4 {
        return false;
    }
    let k = n / 2;
    let Some(ri) = g.first_element_of_order(k) else {
        return false;
    };
    let r = &g.elements()[ri as usize];
    let r_inv = g.kind.inv(r);
    (0..n as u32).any(|ti| {
        let t = &g.elements()[ti as usize];
        element_order(&g.kind, t) == 2 && g.kind.mul(&g.kind.mul(&g.kind.inv(t), r), t) == r_inv
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn s3() -> Group {
        closure(
            GroupKind::Perm { degree: 3 },
            vec![GroupElement::Perm(vec![1, 0, 2]), GroupElement::Perm(vec![1, 2, 0])],
            100,
        )
        .unwrap()
    }

    #[test]
    fn s3_closure_and_classes() {
        let g = s3();
        assert_eq!(g.order(), 6);
        let cc = g.classes();
        assert_eq!(cc.count(), 3);
        let mut sizes = cc.sizes.clone();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);
        // identity class first, singleton
        assert_eq!(cc.sizes[0], 1);
    }

    #[test]
    fn cyclic_closures() {
        let c5 = closure(
            GroupKind::Perm { degree: 5 },
            vec![GroupElement::Perm(vec![1, 2, 3, 4, 0])],
            100,
        )
        .unwrap();
        assert_eq!(c5.order(), 5);
        assert_eq!(c5.classes().count(), 5);
        assert!(c5.is_abelian());
        assert_eq!(fingerprint(&c5).name, "C5");
    }

    #[test]
    fn closure_cap_is_enforced() {
        let err = closure(
            GroupKind::Perm { degree: 5 },
            vec![GroupElement::Perm(vec![1, 2, 3, 4, 0])],
            3,
        )
        .unwrap_err();
        assert!(matches!(err, Error::Resource(_)));
        assert!(err.to_string().contains('3'));
    }

    #[test]
    fn rejects_non_bijections_and_singular_matrices() {
        let bad = closure(
            GroupKind::Perm { degree: 3 },
            vec![GroupElement::Perm(vec![0, 0, 1])],
            100,
        );
        assert!(matches!(bad, Err(Error::Usage(_))));

        let f = FieldParams::new(3).unwrap();
        let zero_mat = GroupElement::Mat4([f.zero(); 16]);
        let bad = closure(GroupKind::Mat4 { field: f }, vec![zero_mat], 100);
        assert!(matches!(bad, Err(Error::Domain(_))));
    }

    #[test]
    fn element_orders_and_centralizers() {
        let g = s3();
        assert_eq!(element_order(g.kind(), &g.kind().identity()), 1);
        let transposition = GroupElement::Perm(vec![1, 0, 2]);
        assert_eq!(element_order(g.kind(), &transposition), 2);
        let idx = g.element_index(&transposition).unwrap();
        assert_eq!(centralizer_order(&g, idx), 2);
    }

    #[test]
    fn a3_in_s3_fusion() {
        let g = s3();
        let emb = subgroup_embed(&g, &[GroupElement::Perm(vec![1, 2, 0])], 100).unwrap();
        assert_eq!(emb.sub().order(), 3);
        assert_eq!(emb.sub().classes().count(), 3);
        // A3's two nontrivial singleton classes fuse into S3's one 3-cycle class.
        let fused: Vec<u32> = emb.fusion().to_vec();
        assert_eq!(fused[0], 0);
        assert_eq!(fused[1], fused[2]);
        assert_ne!(fused[1], 0);
    }

    #[test]
    fn identity_embedding_is_a_bijection_on_classes() {
        let g = s3();
        let emb = self_embedding(&g, 100).unwrap();
        let mut fused = emb.fusion().to_vec();
        fused.sort_unstable();
        assert_eq!(fused, vec![0, 1, 2]);
    }

    #[test]
    fn normalizer_of_normal_subgroup_is_whole_group() {
        let g = s3();
        let a3_gen = g.element_index(&GroupElement::Perm(vec![1, 2, 0])).unwrap();
        let emb = subgroup_embed(&g, &[GroupElement::Perm(vec![1, 2, 0])], 100).unwrap();
        let subset: Vec<u32> = emb.parent_index().to_vec();
        let norm = normalizer_indices(&g, &[a3_gen], &subset);
        assert_eq!(norm.len(), 6);
    }

    #[test]
    fn commutator_subgroup_of_s3_is_a3() {
        let g = s3();
        let derived = commutator_subgroup(&g, 100).unwrap();
        assert_eq!(derived.order(), 3);
    }

    #[test]
    fn dihedral_fingerprint() {
        let d10 = closure(
            GroupKind::Perm { degree: 5 },
            vec![
                GroupElement::Perm(vec![1, 2, 3, 4, 0]),
                GroupElement::Perm(vec![0, 4, 3, 2, 1]),
            ],
            100,
        )
        .unwrap();
        assert_eq!(d10.order(), 10);
        assert_eq!(fingerprint(&d10).name, "D10");
        assert_eq!(fingerprint(&d10).involutions, 5);
    }

    #[test]
    fn encoding_is_injective_on_s3() {
        let g = s3();
        let mut seen = std::collections::HashSet::new();
        for e in g.elements() {
            assert!(seen.insert(e.encode()));
        }
        // Ord agrees with encoding order
        let mut by_ord: Vec<_> = g.elements().to_vec();
        by_ord.sort();
        let mut by_enc: Vec<_> = g.elements().to_vec();
        by_enc.sort_by_key(|e| e.encode());
        assert_eq!(by_ord, by_enc);
    }

    proptest::proptest! {
        /// Random generator sets on 6 points: closure is a group (closed
        /// under product and inverse), class sizes divide the order.
        #[test]
        fn closure_forms_group(seed in proptest::collection::vec(0usize..720, 2)) {
            // enumerate S6 elements lazily via Lehmer-code style decoding
            fn perm_from_code(mut c: usize) -> Vec<u16> {
                let mut pool: Vec<u16> = (0..6).collect();
                let mut out = Vec::new();
                for k in (1..=6).rev() {
                    out.push(pool.remove(c % k));
                    c /= k;
                }
                out
            }
            let gens: Vec<GroupElement> =
                seed.into_iter().map(|c| GroupElement::Perm(perm_from_code(c))).collect();
            let g = closure(GroupKind::Perm { degree: 6 }, gens, 1000).unwrap();
            let cc = g.classes();
            proptest::prop_assert_eq!(cc.sizes.iter().sum::<u64>(), g.order());
            for &s in &cc.sizes {
                proptest::prop_assert_eq!(g.order() % s, 0);
            }
            // spot-check closure under product and inverse
            for i in 0..g.order().min(8) as u32 {
                for j in 0..g.order().min(8) as u32 {
                    let p = g.kind().mul(&g.elements()[i as usize], &g.elements()[j as usize]);
                    proptest::prop_assert!(g.contains(&p));
                }
                proptest::prop_assert!(g.contains(&g.kind().inv(&g.elements()[i as usize])));
            }
        }
    }
}
