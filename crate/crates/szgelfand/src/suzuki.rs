//! The Suzuki groups Sz(q), q = 2^(2n+1), as explicit 4x4 matrix groups over
//! GF(q), their faithful 2-transitive permutation action on the (q^2+1)-point
//! ovoid, and their classical maximal subgroups.
//!
//! The generators are the standard unitriangular family
//!
//! ```text
//!               | 1                    0      0  0 |
//!   S(a, b)  =  | a                    1      0  0 |
//!               | a^(1+t) + b          a^t    1  0 |
//!               | a^(2+t) + ab + b^t   b      a  1 |
//! ```
//!
//! (t the twist x -> x^(2^(n+1)), so S(a,b) S(c,d) = S(a+c, b+d+a c^t)), the
//! torus M(l) = diag(l^(2^n + 1), l^(2^n), l^(-2^n), l^(-2^n - 1)), and the
//! antidiagonal involution. Matrix-entry conventions differ across sources,
//! so the constructor enforces a construction-independent contract and fails
//! loudly if any part of it does not hold: |G| = q^2 (q^2+1) (q-1), exactly
//! q+3 conjugacy classes, every element order divides one of {4, q-1,
//! q-r+1, q+r+1} with r = sqrt(2q), an ovoid of exactly q^2+1 points, a
//! faithful 2-transitive action on it.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ff2m::{FieldElement, FieldParams};
use crate::groups::{
    self, closure, Group, GroupElement, GroupKind, SubgroupEmbedding,
};

/// Numeric parameters of Sz(q) and the field they live over.
#[derive(Clone, Debug)]
pub struct SuzukiParams {
    pub m: u32,
    pub n: u32,
    pub q: u64,
    /// r = sqrt(2q) = 2^(n+1)
    pub r: u64,
    pub expected_order: u64,
    pub field: FieldParams,
}

impl SuzukiParams {
    pub fn new(m: u32) -> Result<SuzukiParams> {
        if m % 2 == 0 || m == 0 || m > 7 {
            return Err(Error::usage(format!(
                "Sz(2^m) construction needs odd m with 1 <= m <= 7, got {m}"
            )));
        }
        let field = FieldParams::new(m)?;
        let n = (m - 1) / 2;
        let q = 1u64 << m;
        let r = 1u64 << (n + 1);
        debug_assert_eq!(r * r, 2 * q);
        let expected_order = q * q * (q * q + 1) * (q - 1);
        Ok(SuzukiParams { m, n, q, r, expected_order, field })
    }

    /// The unitriangular generator S(a, b).
    pub fn mat_s(&self, a: FieldElement, b: FieldElement) -> GroupElement {
        let f = &self.field;
        let at = f.theta(a); // a^t
        let a1t = f.mul(a, at); // a^(1+t)
        let a2t = f.mul(a, a1t); // a^(2+t)
        let mut e = [f.zero(); 16];
        e[0] = f.one();
        e[4] = a;
        e[5] = f.one();
        e[8] = f.add(a1t, b);
        e[9] = at;
        e[10] = f.one();
        e[12] = f.add(f.add(a2t, f.mul(a, b)), f.theta(b));
        e[13] = b;
        e[14] = a;
        e[15] = f.one();
        GroupElement::Mat4(e)
    }

    /// The torus generator M(l) = diag(l^(2^n+1), l^(2^n), l^(-2^n), l^(-2^n-1)).
    pub fn mat_m(&self, lambda: FieldElement) -> Result<GroupElement> {
        if lambda.is_zero() {
            return Err(Error::domain("torus parameter must be nonzero"));
        }
        let f = &self.field;
        let h = 1i64 << self.n;
        let mut e = [f.zero(); 16];
        e[0] = f.pow(lambda, h + 1)?;
        e[5] = f.pow(lambda, h)?;
        e[10] = f.pow(lambda, -h)?;
        e[15] = f.pow(lambda, -h - 1)?;
        Ok(GroupElement::Mat4(e))
    }

    /// The antidiagonal involution.
    pub fn mat_tau(&self) -> GroupElement {
        let f = &self.field;
        let mut e = [f.zero(); 16];
        e[3] = f.one();
        e[6] = f.one();
        e[9] = f.one();
        e[12] = f.one();
        GroupElement::Mat4(e)
    }

    /// Deterministic generator list: S(1,0), S(0,1), M(l0) for l0 the least
    /// primitive element (omitted at q = 2 where the torus is trivial), tau.
    pub fn generators(&self) -> Result<Vec<GroupElement>> {
        let f = &self.field;
        let mut gens = vec![
            self.mat_s(f.one(), f.zero()),
            self.mat_s(f.zero(), f.one()),
        ];
        if self.q > 2 {
            gens.push(self.mat_m(f.primitive_element())?);
        }
        gens.push(self.mat_tau());
        Ok(gens)
    }
}

/// Verification certificate assembled while constructing Sz(q).
#[derive(Clone, Debug, Serialize)]
pub struct SuzukiCertificate {
    pub q: u64,
    pub r: u64,
    pub order: u64,
    pub expected_order: u64,
    pub class_count: usize,
    pub expected_class_count: u64,
    pub element_orders: Vec<u64>,
    pub element_orders_ok: bool,
    pub ovoid_size: u64,
    pub faithful: bool,
    pub pair_orbit: u64,
    pub two_transitive: bool,
}

/// Sz(q) in both matrix and permutation form, with conversion between them.
pub struct Suzuki {
    params: SuzukiParams,
    matrix_group: Group,
    perm_group: Group,
    ovoid: Vec<[u16; 4]>,
    certificate: SuzukiCertificate,
}

/// Normalize a projective row vector: scale so the first nonzero coordinate
/// is 1.
fn normalize_point(field: &FieldParams, v: [FieldElement; 4]) -> [u16; 4] {
    let lead = v.iter().find(|x| !x.is_zero()).expect("nonzero projective point");
    let inv = field.inv(*lead).expect("nonzero");
    let mut out = [0u16; 4];
    for (o, x) in out.iter_mut().zip(v.iter()) {
        *o = field.mul(*x, inv).bits();
    }
    out
}

/// Image of a projective point under a matrix, acting on row vectors.
fn apply_point(field: &FieldParams, point: &[u16; 4], mat: &[FieldElement; 16]) -> [u16; 4] {
    let p: Vec<FieldElement> = point
        .iter()
        .map(|&b| field.element(b as u64).expect("stored point is valid"))
        .collect();
    let mut out = [field.zero(); 4];
    for j in 0..4 {
        for (i, &pi) in p.iter().enumerate() {
            if !pi.is_zero() {
                out[j] = field.add(out[j], field.mul(pi, mat[i * 4 + j]));
            }
        }
    }
    normalize_point(field, out)
}

impl Suzuki {
    /// Build Sz(2^m) with the default closure cap.
    pub fn build(m: u32) -> Result<Suzuki> {
        Self::build_with_cap(m, crate::Caps::default().closure)
    }

    pub fn build_with_cap(m: u32, cap: usize) -> Result<Suzuki> {
        let params = SuzukiParams::new(m)?;
        let gens = params.generators()?;
        let matrix_group =
            closure(GroupKind::Mat4 { field: params.field.clone() }, gens, cap)?;

        if matrix_group.order() != params.expected_order {
            return Err(Error::construction(format!(
                "Sz({}) closure has order {}, expected {} (wrong matrix convention?)",
                params.q,
                matrix_group.order(),
                params.expected_order
            )));
        }
        let cc = matrix_group.classes();
        let expected_classes = params.q + 3;
        if cc.count() as u64 != expected_classes {
            return Err(Error::construction(format!(
                "Sz({}) has {} conjugacy classes, expected {expected_classes}",
                params.q,
                cc.count()
            )));
        }
        let mut element_orders = cc.element_orders.clone();
        element_orders.sort_unstable();
        element_orders.dedup();
        let allowed = [4, params.q - 1, params.q - params.r + 1, params.q + params.r + 1];
        let element_orders_ok = element_orders
            .iter()
            .all(|&o| allowed.iter().any(|&a| a % o == 0));
        if !element_orders_ok {
            return Err(Error::construction(format!(
                "element orders {element_orders:?} escape the allowed divisors {allowed:?}"
            )));
        }

        // Ovoid: orbit of the point fixed by the Borel (the first basis
        // vector under the row action), in BFS discovery order.
        let field = &params.field;
        let base: [u16; 4] = [1, 0, 0, 0];
        let gen_mats: Vec<[FieldElement; 16]> = matrix_group
            .generators()
            .iter()
            .map(|g| match g {
                GroupElement::Mat4(e) => *e,
                GroupElement::Perm(_) => unreachable!("matrix group"),
            })
            .collect();
        let mut ovoid = vec![base];
        let mut point_index = std::collections::HashMap::new();
        point_index.insert(base, 0u16);
        let mut head = 0;
        while head < ovoid.len() {
            let pt = ovoid[head];
            for mat in &gen_mats {
                let img = apply_point(field, &pt, mat);
                if !point_index.contains_key(&img) {
                    point_index.insert(img, ovoid.len() as u16);
                    ovoid.push(img);
                }
            }
            head += 1;
        }
        let expected_ovoid = params.q * params.q + 1;
        if ovoid.len() as u64 != expected_ovoid {
            return Err(Error::construction(format!(
                "ovoid orbit has {} points, expected {expected_ovoid}",
                ovoid.len()
            )));
        }

        // Permutation image of each matrix generator; the BFS schedules of the
        // two closures then correspond element by element.
        let degree = ovoid.len();
        let perm_gens: Vec<GroupElement> = gen_mats
            .iter()
            .map(|mat| {
                GroupElement::Perm(
                    ovoid
                        .iter()
                        .map(|pt| point_index[&apply_point(field, pt, mat)])
                        .collect(),
                )
            })
            .collect();
        let perm_group = closure(GroupKind::Perm { degree }, perm_gens, cap)?;
        let faithful = perm_group.order() == matrix_group.order();
        if !faithful {
            return Err(Error::construction(format!(
                "ovoid action has image order {}, expected {} (kernel nontrivial)",
                perm_group.order(),
                matrix_group.order()
            )));
        }

        // 2-transitivity: the orbit of an ordered pair fills all of them.
        let pair_orbit = {
            let gens: Vec<&Vec<u16>> = perm_group
                .generators()
                .iter()
                .map(|g| match g {
                    GroupElement::Perm(images) => images,
                    GroupElement::Mat4(_) => unreachable!("perm group"),
                })
                .collect();
            let start = (0u16, 1u16);
            let mut seen = std::collections::HashSet::new();
            seen.insert(start);
            let mut queue = vec![start];
            let mut head = 0;
            while head < queue.len() {
                let (a, b) = queue[head];
                for images in &gens {
                    let next = (images[a as usize], images[b as usize]);
                    if seen.insert(next) {
                        queue.push(next);
                    }
                }
                head += 1;
            }
            seen.len() as u64
        };
        let two_transitive = pair_orbit == expected_ovoid * (expected_ovoid - 1);
        if !two_transitive {
            return Err(Error::construction(format!(
                "pair orbit has size {pair_orbit}, expected {}",
                expected_ovoid * (expected_ovoid - 1)
            )));
        }

        let certificate = SuzukiCertificate {
            q: params.q,
            r: params.r,
            order: matrix_group.order(),
            expected_order: params.expected_order,
            class_count: cc.count(),
            expected_class_count: expected_classes,
            element_orders,
            element_orders_ok,
            ovoid_size: ovoid.len() as u64,
            faithful,
            pair_orbit,
            two_transitive,
        };
        Ok(Suzuki { params, matrix_group, perm_group, ovoid, certificate })
    }

    pub fn params(&self) -> &SuzukiParams {
        &self.params
    }
    pub fn matrix_group(&self) -> &Group {
        &self.matrix_group
    }
    /// The degree q^2+1 ovoid action; all class and character work runs here.
    pub fn perm_group(&self) -> &Group {
        &self.perm_group
    }
    pub fn ovoid(&self) -> &[[u16; 4]] {
        &self.ovoid
    }
    pub fn certificate(&self) -> &SuzukiCertificate {
        &self.certificate
    }

    /// The permutation of the ovoid induced by a matrix-group element.
    pub fn perm_image(&self, g: &GroupElement) -> Result<GroupElement> {
        let GroupElement::Mat4(mat) = g else {
            return Err(Error::usage("perm_image expects a matrix element"));
        };
        if !self.matrix_group.contains(g) {
            return Err(Error::usage("element does not belong to this Suzuki group"));
        }
        let field = &self.params.field;
        let mut point_index = std::collections::HashMap::new();
        for (i, pt) in self.ovoid.iter().enumerate() {
            point_index.insert(*pt, i as u16);
        }
        Ok(GroupElement::Perm(
            self.ovoid
                .iter()
                .map(|pt| point_index[&apply_point(field, pt, mat)])
                .collect(),
        ))
    }

    fn embed_perm(&self, mat_gens: Vec<GroupElement>, cap: usize) -> Result<SubgroupEmbedding> {
        let perm_gens: Result<Vec<GroupElement>> =
            mat_gens.iter().map(|g| self.perm_image(g)).collect();
        groups::subgroup_embed(&self.perm_group, &perm_gens?, cap)
    }

    /// The Borel subgroup (point stabilizer) E_q^{1+1} : C_{q-1}, of order
    /// q^2 (q-1) with q+2 conjugacy classes, as a subgroup of the ovoid
    /// action.
    pub fn borel(&self) -> Result<MaximalSubgroup> {
        let f = &self.params.field;
        let mut gens = vec![
            self.params.mat_s(f.one(), f.zero()),
            self.params.mat_s(f.zero(), f.one()),
        ];
        if self.params.q > 2 {
            gens.push(self.params.mat_m(f.primitive_element())?);
        }
        let embedding = self.embed_perm(gens, self.matrix_group.order() as usize + 1)?;
        let expected_order = self.params.q * self.params.q * (self.params.q - 1);
        let expected_classes = Some(self.params.q + 2);
        MaximalSubgroup::checked(MaximalKind::Borel, embedding, expected_order, expected_classes)
    }

    /// The dihedral maximal subgroup D_{2(q-1)} generated by the torus and
    /// the antidiagonal involution.
    pub fn dihedral(&self) -> Result<MaximalSubgroup> {
        let f = &self.params.field;
        let mut gens = Vec::new();
        if self.params.q > 2 {
            gens.push(self.params.mat_m(f.primitive_element())?);
        }
        gens.push(self.params.mat_tau());
        let embedding = self.embed_perm(gens, self.matrix_group.order() as usize + 1)?;
        let expected_order = 2 * (self.params.q - 1);
        MaximalSubgroup::checked(MaximalKind::Dihedral, embedding, expected_order, None)
    }

    /// The normalizer (q + sign*r + 1) : 4 of a cyclic torus of order
    /// q + sign*r + 1, found by a deterministic sweep in element order.
    pub fn torus_normalizer(&self, sign: i64) -> Result<MaximalSubgroup> {
        if sign != 1 && sign != -1 {
            return Err(Error::usage("torus sign must be +1 or -1"));
        }
        let target = (self.params.q as i64 + sign * self.params.r as i64 + 1) as u64;
        if target <= 1 {
            return Err(Error::domain(format!(
                "torus order q{}{}+1 degenerates to {target} at q = {}",
                if sign > 0 { "+" } else { "-" },
                self.params.r,
                self.params.q
            )));
        }
        let g = &self.perm_group;
        let xi = g.first_element_of_order(target).ok_or_else(|| {
            Error::internal(format!("no element of order {target} in Sz({})", self.params.q))
        })?;
        // cyclic subgroup <x> as parent indices
        let mut cyc = vec![0u32];
        let mut cur = xi;
        while cur != 0 {
            cyc.push(cur);
            cur = g.mul_idx(cur, xi);
        }
        let normalizer = groups::normalizer_indices(g, &[xi], &cyc);
        let gen_indices = groups::minimal_generating_indices(g, &normalizer);
        let gens: Vec<GroupElement> =
            gen_indices.iter().map(|&i| g.elements()[i as usize].clone()).collect();
        let embedding =
            groups::subgroup_embed(g, &gens, self.matrix_group.order() as usize + 1)?;
        let expected_order = 4 * target;
        let kind = if sign > 0 { MaximalKind::TorusPlus } else { MaximalKind::TorusMinus };
        MaximalSubgroup::checked(kind, embedding, expected_order, None)
    }

    /// All constructible maximal subgroups in deterministic order:
    /// Borel, dihedral, torus+, torus-. At q = 2 the torus- family
    /// degenerates and is omitted.
    pub fn maximal_subgroups(&self) -> Result<Vec<MaximalSubgroup>> {
        let mut out = vec![self.borel()?, self.dihedral()?, self.torus_normalizer(1)?];
        if self.params.q > 2 {
            out.push(self.torus_normalizer(-1)?);
        }
        Ok(out)
    }
}

/// Which of the classical maximal families a subgroup belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MaximalKind {
    Borel,
    Dihedral,
    TorusPlus,
    TorusMinus,
}

impl MaximalKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            MaximalKind::Borel => "borel",
            MaximalKind::Dihedral => "dihedral",
            MaximalKind::TorusPlus => "torus+",
            MaximalKind::TorusMinus => "torus-",
        }
    }
}

/// A constructed maximal subgroup embedded in the ovoid action, with its
/// verified order.
pub struct MaximalSubgroup {
    pub kind: MaximalKind,
    pub embedding: SubgroupEmbedding,
    pub expected_order: u64,
    pub class_count: usize,
}

impl MaximalSubgroup {
    fn checked(
        kind: MaximalKind,
        embedding: SubgroupEmbedding,
        expected_order: u64,
        expected_classes: Option<u64>,
    ) -> Result<MaximalSubgroup> {
        if embedding.sub().order() != expected_order {
            return Err(Error::construction(format!(
                "{} subgroup has order {}, expected {expected_order}",
                kind.as_str(),
                embedding.sub().order()
            )));
        }
        let class_count = embedding.sub().classes().count();
        if let Some(expected) = expected_classes {
            if class_count as u64 != expected {
                return Err(Error::construction(format!(
                    "{} subgroup has {class_count} classes, expected {expected}",
                    kind.as_str()
                )));
            }
        }
        Ok(MaximalSubgroup { kind, embedding, expected_order, class_count })
    }
}

/// Closed-form degree of the total character of Sz(q0), q0 = 2^(2k+1) with
/// k >= 1: 2^(k+1) (q0 - 1) - q0 (q0 - 1) + q0^3.
pub fn sz_total_degree_formula(q0: u64) -> Result<u64> {
    if !q0.is_power_of_two() {
        return Err(Error::domain(format!("{q0} is not a power of two")));
    }
    let e = q0.trailing_zeros();
    if e % 2 == 0 || e < 3 {
        return Err(Error::domain(format!(
            "{q0} is not an odd power of two >= 8"
        )));
    }
    let k = (e - 1) / 2;
    let v = (1i128 << (k + 1)) * (q0 as i128 - 1) - q0 as i128 * (q0 as i128 - 1)
        + (q0 as i128).pow(3);
    Ok(v as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unipotent_product_law() {
        // S(a,b) S(c,d) = S(a+c, b+d+a*c^t), exhaustively over GF(8).
        let p = SuzukiParams::new(3).unwrap();
        let f = &p.field;
        let kind = GroupKind::Mat4 { field: f.clone() };
        for a in f.elements() {
            for b in f.elements() {
                for c in f.elements() {
                    for d in f.elements() {
                        let lhs = kind.mul(&p.mat_s(a, b), &p.mat_s(c, d));
                        let rhs = p.mat_s(
                            f.add(a, c),
                            f.add(f.add(b, d), f.mul(a, f.theta(c))),
                        );
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn torus_normalizes_unipotent() {
        // M(l)^-1 S(a,b) M(l) = S(a l, b l^(1+t))
        let p = SuzukiParams::new(3).unwrap();
        let f = &p.field;
        let kind = GroupKind::Mat4 { field: f.clone() };
        let l = f.primitive_element();
        let m = p.mat_m(l).unwrap();
        let m_inv = kind.inv(&m);
        for a in f.elements() {
            for b in f.elements() {
                let conj = kind.mul(&kind.mul(&m_inv, &p.mat_s(a, b)), &m);
                let expect =
                    p.mat_s(f.mul(a, l), f.mul(b, f.mul(l, f.theta(l))));
                assert_eq!(conj, expect);
            }
        }
    }

    #[test]
    fn sz2_is_f20() {
        let sz = Suzuki::build(1).unwrap();
        assert_eq!(sz.matrix_group().order(), 20);
        assert_eq!(sz.perm_group().order(), 20);
        let cc = sz.perm_group().classes();
        assert_eq!(cc.count(), 5);
        let mut sizes = cc.sizes.clone();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 4, 5, 5, 5]);
        assert_eq!(sz.certificate().ovoid_size, 5);
        assert!(sz.certificate().two_transitive);
    }

    #[test]
    fn sz2_subgroups() {
        let sz = Suzuki::build(1).unwrap();
        let borel = sz.borel().unwrap();
        assert_eq!(borel.embedding.sub().order(), 4);
        let dihedral = sz.dihedral().unwrap();
        assert_eq!(dihedral.embedding.sub().order(), 2);
        // 4(q + r + 1) = 20: the whole group
        let tp = sz.torus_normalizer(1).unwrap();
        assert_eq!(tp.embedding.sub().order(), 20);
        // q - r + 1 = 1 degenerates
        assert!(matches!(sz.torus_normalizer(-1), Err(Error::Domain(_))));
    }

    #[test]
    fn formula_values() {
        assert_eq!(sz_total_degree_formula(8).unwrap(), 484);
        assert_eq!(sz_total_degree_formula(32).unwrap(), 32024);
        assert!(sz_total_degree_formula(2).is_err());
        assert!(sz_total_degree_formula(4).is_err());
        assert!(sz_total_degree_formula(16).is_err());
        assert!(sz_total_degree_formula(7).is_err());
    }

    #[test]
    fn perm_image_is_a_homomorphism_on_sz2() {
        let sz = Suzuki::build(1).unwrap();
        let kind = sz.matrix_group().kind().clone();
        let pkind = sz.perm_group().kind().clone();
        for a in sz.matrix_group().elements().iter().take(10) {
            for b in sz.matrix_group().elements().iter().take(10) {
                let lhs = sz.perm_image(&kind.mul(a, b)).unwrap();
                let rhs = pkind.mul(&sz.perm_image(a).unwrap(), &sz.perm_image(b).unwrap());
                assert_eq!(lhs, rhs);
            }
        }
    }

    // q = 8: the full construction contract. A couple of seconds, exercised
    // further by the integration suites.
    #[test]
    fn sz8_contract() {
        let sz = Suzuki::build(3).unwrap();
        assert_eq!(sz.matrix_group().order(), 29120);
        assert_eq!(sz.perm_group().classes().count(), 11);
        assert_eq!(sz.certificate().ovoid_size, 65);
        assert_eq!(sz.certificate().pair_orbit, 65 * 64);
        let max_order = sz.perm_group().classes().element_orders.iter().copied().max();
        assert_eq!(max_order, Some(13));

        let borel = sz.borel().unwrap();
        assert_eq!(borel.embedding.sub().order(), 448);
        assert_eq!(borel.class_count, 10);
        let dihedral = sz.dihedral().unwrap();
        assert_eq!(dihedral.embedding.sub().order(), 14);
        let tp = sz.torus_normalizer(1).unwrap();
        assert_eq!(tp.embedding.sub().order(), 52);
        let tm = sz.torus_normalizer(-1).unwrap();
        assert_eq!(tm.embedding.sub().order(), 20);
    }
}
