//! Gelfand and strong Gelfand pair decision procedures, with independent
//! oracles.
//!
//! The central object is the restriction multiplicity matrix m[chi][psi] =
//! <chi|H, psi> over Irr(G) x Irr(H), computed entirely mod the shared Dixon
//! prime and lifted (the lift is the identity on canonical residues because
//! every multiplicity is a rational integer far below p). A pair (G, H) is a
//! strong Gelfand pair iff every entry is at most 1, and a plain Gelfand
//! pair iff the column of the trivial character of H is 0/1 (Frobenius
//! reciprocity).
//!
//! Two cheaper routes cross-check the table-based decisions:
//! * the total-character filter: if the total degree of H is smaller than
//!   some irreducible degree of G, the pair cannot be strong Gelfand;
//! * the Schur-ring oracle: (G, H) is strong Gelfand iff the ring spanned by
//!   the H-conjugation orbit sums of G is commutative, decided here by
//!   counting products into orbit representatives;
//! * the double-coset count, which equals the sum of the squared
//!   multiplicities in the induced trivial character.

use std::collections::HashMap;

use serde::Serialize;

use crate::chartab::{self, CharacterTable};
use crate::error::{Error, Result};
use crate::groups::{self, Group, StructureFingerprint, SubgroupEmbedding};
use crate::lattice::{self, MulTable};
use crate::modlin::Fp;
use crate::Caps;

// ---------------------------------------------------------------------------
// Multiplicity matrices
// ---------------------------------------------------------------------------

/// The integer table <chi|H, psi> over Irr(G) x Irr(H), with the degree
/// bookkeeping identity verified at construction.
#[derive(Clone, Debug)]
pub struct MultiplicityMatrix {
    pub row_degrees: Vec<u64>,
    pub col_degrees: Vec<u64>,
    /// entries[chi][psi]
    pub entries: Vec<Vec<u64>>,
    pub trivial_row: usize,
    pub trivial_col: usize,
}

impl MultiplicityMatrix {
    pub fn max_entry(&self) -> u64 {
        self.entries.iter().flatten().copied().max().unwrap_or(0)
    }

    /// First entry >= 2 in row-major order, if any.
    pub fn witness_at_least_two(&self) -> Option<(usize, usize)> {
        for (r, row) in self.entries.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if v >= 2 {
                    return Some((r, c));
                }
            }
        }
        None
    }

    /// The multiplicities <1_H induced to G, chi> for every chi, i.e. the
    /// trivial-psi column (Frobenius reciprocity).
    pub fn induced_trivial(&self) -> Vec<u64> {
        self.entries.iter().map(|row| row[self.trivial_col]).collect()
    }
}

/// Compute the restriction multiplicity matrix. Both tables must share one
/// Dixon prime (compute the subgroup table with the parent's context).
pub fn restriction_multiplicities(
    tg: &CharacterTable,
    emb: &SubgroupEmbedding,
    th: &CharacterTable,
) -> Result<MultiplicityMatrix> {
    if tg.context().p != th.context().p {
        return Err(Error::usage(format!(
            "tables use different primes {} and {}; recompute the subgroup table \
             with the parent's context",
            tg.context().p,
            th.context().p
        )));
    }
    if th.class_count() != emb.fusion().len() || th.order() != emb.sub().order() {
        return Err(Error::usage(
            "subgroup table does not match the embedding's subgroup",
        ));
    }
    if emb.fusion().iter().any(|&c| c as usize >= tg.class_count()) {
        return Err(Error::usage("fusion map points outside the parent table"));
    }
    let fp = Fp::new(tg.context().p);
    let h_order = th.order();
    let h_order_inv = fp.inv(h_order % fp.p);
    let rows = tg.degrees().len();
    let cols = th.degrees().len();
    let mut entries = vec![vec![0u64; cols]; rows];
    for (r, row) in entries.iter_mut().enumerate() {
        for (c, slot) in row.iter_mut().enumerate() {
            let mut acc = 0u64;
            for d in 0..cols {
                let size = th.class_sizes()[d] % fp.p;
                let chi = tg.values()[r][emb.fusion()[d] as usize];
                let psi = th.values()[c][th.inverse_class()[d] as usize];
                acc = fp.add(acc, fp.mul(size, fp.mul(chi, psi)));
            }
            *slot = fp.mul(acc, h_order_inv);
        }
    }
    let mm = MultiplicityMatrix {
        row_degrees: tg.degrees().to_vec(),
        col_degrees: th.degrees().to_vec(),
        entries,
        trivial_row: tg.trivial_row(),
        trivial_col: th.trivial_row(),
    };
    // Degree bookkeeping: sum_psi m[chi][psi] deg(psi) = deg(chi). This is
    // also what certifies that every residue is a true small integer.
    for r in 0..rows {
        let total: u64 = (0..cols)
            .map(|c| {
                mm.entries[r][c].checked_mul(mm.col_degrees[c]).unwrap_or(u64::MAX)
            })
            .sum();
        if total != mm.row_degrees[r] {
            return Err(Error::internal(format!(
                "degree bookkeeping failed on row {r}: {total} != {}",
                mm.row_degrees[r]
            )));
        }
    }
    // The trivial character restricts to the trivial character.
    if mm.entries[mm.trivial_row][mm.trivial_col] != 1
        || mm.entries[mm.trivial_row].iter().sum::<u64>() != 1
    {
        return Err(Error::internal("trivial row does not restrict to the trivial column"));
    }
    Ok(mm)
}

// ---------------------------------------------------------------------------
// Strong Gelfand predicate
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Filter,
    Full,
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct Witness {
    pub chi: usize,
    pub psi: usize,
    pub chi_degree: u64,
    pub psi_degree: u64,
    pub multiplicity: u64,
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct FilterDetail {
    pub total_degree_h: u64,
    pub max_degree_g: u64,
}

/// Outcome of a strong-Gelfand-pair decision.
#[derive(Clone, Debug, Serialize)]
pub struct SgpReport {
    pub verdict: bool,
    pub method: Method,
    /// Largest entry of the multiplicity matrix, when it was computed.
    pub max_multiplicity: Option<u64>,
    /// A pair with multiplicity >= 2, when the full matrix refuted the pair.
    pub witness: Option<Witness>,
    /// Present when the total-character filter fired (whether or not the
    /// full matrix was also computed).
    pub filter_detail: Option<FilterDetail>,
}

/// Decide whether (G, H) is a strong Gelfand pair. If the total character of
/// H has smaller degree than the largest irreducible degree of G, the pair
/// is refuted outright; `force_full` computes the full matrix regardless, so
/// the filter can be audited against the direct decision.
pub fn is_strong_gelfand(
    tg: &CharacterTable,
    emb: &SubgroupEmbedding,
    th: &CharacterTable,
    force_full: bool,
) -> Result<SgpReport> {
    let total_degree_h = th.total_degree();
    let max_degree_g = tg.degrees().iter().copied().max().unwrap_or(1);
    let filter_fires = total_degree_h < max_degree_g;
    let filter_detail =
        filter_fires.then_some(FilterDetail { total_degree_h, max_degree_g });
    if filter_fires && !force_full {
        return Ok(SgpReport {
            verdict: false,
            method: Method::Filter,
            max_multiplicity: None,
            witness: None,
            filter_detail,
        });
    }
    let mm = restriction_multiplicities(tg, emb, th)?;
    let max = mm.max_entry();
    let witness = mm.witness_at_least_two().map(|(chi, psi)| Witness {
        chi,
        psi,
        chi_degree: mm.row_degrees[chi],
        psi_degree: mm.col_degrees[psi],
        multiplicity: mm.entries[chi][psi],
    });
    if filter_fires && witness.is_none() {
        return Err(Error::internal(
            "total-character filter fired but the full matrix found no repeat",
        ));
    }
    Ok(SgpReport {
        verdict: max <= 1,
        method: Method::Full,
        max_multiplicity: Some(max),
        witness,
        filter_detail,
    })
}

/// Outcome of a plain Gelfand-pair decision (multiplicity-freeness of the
/// induced trivial character, via the trivial-psi column).
#[derive(Clone, Debug, Serialize)]
pub struct GelfandReport {
    pub verdict: bool,
    pub max_multiplicity: u64,
    pub witness: Option<Witness>,
    /// <1_H induced to G, chi> per row of the parent table.
    pub induced_trivial: Vec<u64>,
}

pub fn is_gelfand(
    tg: &CharacterTable,
    emb: &SubgroupEmbedding,
    th: &CharacterTable,
) -> Result<GelfandReport> {
    let mm = restriction_multiplicities(tg, emb, th)?;
    let column = mm.induced_trivial();
    let max = column.iter().copied().max().unwrap_or(0);
    let witness = column.iter().position(|&v| v >= 2).map(|chi| Witness {
        chi,
        psi: mm.trivial_col,
        chi_degree: mm.row_degrees[chi],
        psi_degree: 1,
        multiplicity: column[chi],
    });
    Ok(GelfandReport { verdict: max <= 1, max_multiplicity: max, witness, induced_trivial: column })
}

// ---------------------------------------------------------------------------
// Oracles
// ---------------------------------------------------------------------------

/// Decide commutativity of the Schur ring spanned by the H-conjugation orbit
/// sums of G, by direct structure-constant comparison: for every ordered
/// pair of orbits (A, B) and every orbit representative t,
/// #{(a,b) in A x B : ab = t} must equal #{(b,a) in B x A : ba = t}.
pub fn schur_ring_commutes(g: &Group, h_indices: &[u32], cap: usize) -> Result<bool> {
    let n = g.order() as usize;
    if n > cap {
        return Err(Error::resource(format!(
            "group order {n} exceeds the oracle cap of {cap}"
        )));
    }
    for &h in h_indices {
        if h as usize >= n {
            return Err(Error::usage("subgroup element index out of range"));
        }
    }
    // H-conjugation orbits of G.
    let h_invs: Vec<u32> = h_indices.iter().map(|&h| g.inv_idx(h)).collect();
    let mut orbit_of = vec![u32::MAX; n];
    let mut reps = Vec::new();
    for start in 0..n as u32 {
        if orbit_of[start as usize] != u32::MAX {
            continue;
        }
        let orbit_idx = reps.len() as u32;
        reps.push(start);
        orbit_of[start as usize] = orbit_idx;
        let mut queue = vec![start];
        while let Some(x) = queue.pop() {
            for (&h, &h_inv) in h_indices.iter().zip(h_invs.iter()) {
                let y = g.mul_idx(g.mul_idx(h_inv, x), h);
                if orbit_of[y as usize] == u32::MAX {
                    orbit_of[y as usize] = orbit_idx;
                    queue.push(y);
                }
            }
        }
    }
    // For each representative t, count (orbit(a), orbit(a^-1 t)) pairs.
    let inv_of: Vec<u32> = (0..n as u32).map(|i| g.inv_idx(i)).collect();
    for &t in &reps {
        let mut counts: HashMap<(u32, u32), u64> = HashMap::new();
        for a in 0..n as u32 {
            let b = g.mul_idx(inv_of[a as usize], t);
            *counts.entry((orbit_of[a as usize], orbit_of[b as usize])).or_insert(0) += 1;
        }
        for (&(x, y), &c) in &counts {
            if counts.get(&(y, x)).copied().unwrap_or(0) != c {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Number of distinct double cosets H g H in G.
pub fn double_coset_count(g: &Group, h_indices: &[u32]) -> Result<u64> {
    let n = g.order() as usize;
    if n > 100_000 {
        return Err(Error::resource(format!(
            "group order {n} exceeds the double-coset cap of 100000"
        )));
    }
    let mut marked = vec![false; n];
    let mut count = 0u64;
    for x in 0..n as u32 {
        if marked[x as usize] {
            continue;
        }
        count += 1;
        // mark H x H
        let left: Vec<u32> = h_indices.iter().map(|&h| g.mul_idx(h, x)).collect();
        for &y in &left {
            for &h in h_indices {
                marked[g.mul_idx(y, h) as usize] = true;
            }
        }
    }
    Ok(count)
}

/// Sum of the squared multiplicities of the induced trivial character; by
/// orbit counting this equals the number of double cosets.
pub fn induced_trivial_square_sum(mm: &MultiplicityMatrix) -> u64 {
    mm.induced_trivial().iter().map(|&v| v * v).sum()
}

// ---------------------------------------------------------------------------
// Full-lattice scans
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, Serialize)]
pub struct ScanEntry {
    pub fingerprint: StructureFingerprint,
    pub order: u64,
    /// Raw number of conjugate subgroups in this class.
    pub conjugates: u64,
    pub report: SgpReport,
}

/// Scan of a whole subgroup lattice up to conjugacy, ordered by descending
/// subgroup order. Every verdict is computed independently; the stack
/// monotonicity of the strong Gelfand property (if K <= H and (G,H) fails,
/// (G,K) fails) is audited afterwards, never used to skip work.
#[derive(Clone, Debug, Serialize)]
pub struct ScanReport {
    pub group_order: u64,
    pub group_class_count: usize,
    pub entries: Vec<ScanEntry>,
    /// Number of strong Gelfand subgroup classes, and raw subgroup count.
    pub sgp_class_count: u64,
    pub sgp_raw_count: u64,
    pub monotonicity_ok: bool,
}

pub fn sgp_scan(g: &Group, caps: &Caps, force_full: bool) -> Result<ScanReport> {
    let classes = lattice::all_subgroups(g, caps.lattice)?;
    let ctx = chartab::dixon_context(g.order(), chartab::exponent(g));
    let tg = chartab::character_table_with(g, &ctx)?;
    let mut items: Vec<(Vec<u32>, ScanEntry)> = Vec::new();
    for class in &classes {
        let th = chartab::character_table_with(class.embedding.sub(), &ctx)?;
        let report = is_strong_gelfand(&tg, &class.embedding, &th, force_full)?;
        let entry = ScanEntry {
            fingerprint: groups::fingerprint(class.embedding.sub()),
            order: class.order,
            conjugates: class.conjugates,
            report,
        };
        items.push((class.rep.clone(), entry));
    }
    // Deterministic order: descending subgroup order, then representative set.
    items.sort_by(|a, b| b.1.order.cmp(&a.1.order).then_with(|| a.0.cmp(&b.0)));

    let table = MulTable::build(g, caps.lattice)?;
    let mut monotonicity_ok = true;
    for (i, (k_rep, k_entry)) in items.iter().enumerate() {
        for (j, (h_rep, h_entry)) in items.iter().enumerate() {
            if i == j || k_entry.order > h_entry.order {
                continue;
            }
            if lattice::contained_up_to_conjugacy(&table, k_rep, h_rep)
                && !h_entry.report.verdict
                && k_entry.report.verdict
            {
                monotonicity_ok = false;
            }
        }
    }
    let sgp_class_count = items.iter().filter(|(_, e)| e.report.verdict).count() as u64;
    let sgp_raw_count: u64 =
        items.iter().filter(|(_, e)| e.report.verdict).map(|(_, e)| e.conjugates).sum();
    Ok(ScanReport {
        group_order: g.order(),
        group_class_count: g.classes().count(),
        entries: items.into_iter().map(|(_, e)| e).collect(),
        sgp_class_count,
        sgp_raw_count,
        monotonicity_ok,
    })
}

// ---------------------------------------------------------------------------
// Prime-independent comparison of multiplicity matrices
// ---------------------------------------------------------------------------

/// Canonical form of a multiplicity matrix under degree-preserving row and
/// column permutations.
///
/// Characters that are algebraically conjugate have no intrinsic order; the
/// table sorts their rows by residue tuples, which depend on the prime. Two
/// matrices computed over different primes therefore agree only up to
/// simultaneous degree-preserving permutations, and this form is what the
/// prime-independence property compares. Rows and columns are sorted by
/// (degree, profile) keys and then refined against the current matrix until
/// stable.
pub fn canonical_multiplicity_form(mm: &MultiplicityMatrix) -> Vec<Vec<u64>> {
    let rows = mm.entries.len();
    let cols = mm.col_degrees.len();
    let mut row_order: Vec<usize> = (0..rows).collect();
    let mut col_order: Vec<usize> = (0..cols).collect();
    let row_profile = |r: usize| {
        let mut p: Vec<(u64, u64)> =
            (0..cols).map(|c| (mm.col_degrees[c], mm.entries[r][c])).collect();
        p.sort_unstable();
        (mm.row_degrees[r], p)
    };
    let col_profile = |c: usize| {
        let mut p: Vec<(u64, u64)> =
            (0..rows).map(|r| (mm.row_degrees[r], mm.entries[r][c])).collect();
        p.sort_unstable();
        (mm.col_degrees[c], p)
    };
    row_order.sort_by_key(|&r| row_profile(r));
    col_order.sort_by_key(|&c| col_profile(c));
    for _ in 0..3 {
        let co = col_order.clone();
        row_order.sort_by_key(|&r| {
            (mm.row_degrees[r], co.iter().map(|&c| mm.entries[r][c]).collect::<Vec<_>>())
        });
        let ro = row_order.clone();
        col_order.sort_by_key(|&c| {
            (mm.col_degrees[c], ro.iter().map(|&r| mm.entries[r][c]).collect::<Vec<_>>())
        });
    }
    row_order
        .iter()
        .map(|&r| col_order.iter().map(|&c| mm.entries[r][c]).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::{character_table, character_table_with, dixon_context, exponent};
    use crate::groups::{closure, subgroup_embed, GroupElement, GroupKind};

    fn perm_group(degree: usize, gens: Vec<Vec<u16>>) -> Group {
        closure(
            GroupKind::Perm { degree },
            gens.into_iter().map(GroupElement::Perm).collect(),
            10_000,
        )
        .unwrap()
    }

    fn s3() -> Group {
        perm_group(3, vec![vec![1, 0, 2], vec![1, 2, 0]])
    }

    fn f20() -> Group {
        perm_group(5, vec![vec![1, 2, 3, 4, 0], vec![0, 2, 4, 1, 3]])
    }

    /// Shared-prime pair of tables for (G, <gens>).
    fn tables_for(
        g: &Group,
        gens: Vec<GroupElement>,
    ) -> (CharacterTable, SubgroupEmbedding, CharacterTable) {
        let ctx = dixon_context(g.order(), exponent(g));
        let tg = character_table_with(g, &ctx).unwrap();
        let emb = subgroup_embed(g, &gens, 10_000).unwrap();
        let th = character_table_with(emb.sub(), &ctx).unwrap();
        (tg, emb, th)
    }

    #[test]
    fn s3_over_a3_restriction() {
        let g = s3();
        let (tg, emb, th) = tables_for(&g, vec![GroupElement::Perm(vec![1, 2, 0])]);
        let mm = restriction_multiplicities(&tg, &emb, &th).unwrap();
        // trivial row restricts to (1, 0, 0)
        assert_eq!(mm.entries[mm.trivial_row][mm.trivial_col], 1);
        assert_eq!(mm.entries[mm.trivial_row].iter().sum::<u64>(), 1);
        // the 2-dimensional character restricts to the two nontrivial linears
        let two_dim = mm.row_degrees.iter().position(|&d| d == 2).unwrap();
        let mut row = mm.entries[two_dim].clone();
        row.sort_unstable();
        assert_eq!(row, vec![0, 1, 1]);
        assert_eq!(mm.entries[two_dim][mm.trivial_col], 0);
    }

    #[test]
    fn f20_over_c5_restriction() {
        let g = f20();
        let (tg, emb, th) = tables_for(&g, vec![GroupElement::Perm(vec![1, 2, 3, 4, 0])]);
        assert_eq!(emb.sub().order(), 5);
        let mm = restriction_multiplicities(&tg, &emb, &th).unwrap();
        let four_dim = mm.row_degrees.iter().position(|&d| d == 4).unwrap();
        // multiplicity 1 on each nontrivial psi, 0 on the trivial one
        for (c, &v) in mm.entries[four_dim].iter().enumerate() {
            assert_eq!(v, u64::from(c != mm.trivial_col));
        }
    }

    #[test]
    fn self_pair_is_strong_gelfand() {
        let g = s3();
        let (tg, emb, th) = tables_for(&g, g.generators().to_vec());
        let r = is_strong_gelfand(&tg, &emb, &th, false).unwrap();
        assert!(r.verdict);
        assert_eq!(r.max_multiplicity, Some(1));
        assert!(r.witness.is_none());
    }

    #[test]
    fn f20_subgroup_verdicts() {
        let g = f20();
        // C5: strong Gelfand
        let (tg, emb, th) = tables_for(&g, vec![GroupElement::Perm(vec![1, 2, 3, 4, 0])]);
        assert!(is_strong_gelfand(&tg, &emb, &th, false).unwrap().verdict);
        // C2 (an involution): not strong Gelfand, and the filter alone
        // already refutes it (total degree 2 < 4).
        let inv = g.first_element_of_order(2).unwrap();
        let (tg, emb, th) = tables_for(&g, vec![g.elements()[inv as usize].clone()]);
        let r = is_strong_gelfand(&tg, &emb, &th, false).unwrap();
        assert!(!r.verdict);
        assert_eq!(r.method, Method::Filter);
        let detail = r.filter_detail.unwrap();
        assert_eq!((detail.total_degree_h, detail.max_degree_g), (2, 4));
        // force-full agrees and produces a witness
        let r = is_strong_gelfand(&tg, &emb, &th, true).unwrap();
        assert!(!r.verdict);
        assert!(r.witness.unwrap().multiplicity >= 2);
    }

    #[test]
    fn gelfand_s3_over_c2() {
        let g = s3();
        let (tg, emb, th) = tables_for(&g, vec![GroupElement::Perm(vec![1, 0, 2])]);
        let r = is_gelfand(&tg, &emb, &th).unwrap();
        assert!(r.verdict);
        // 1 induced from C2 is 1 + standard: multiplicities (1, 0, 1) up to order
        let mut col = r.induced_trivial.clone();
        col.sort_unstable();
        assert_eq!(col, vec![0, 1, 1]);
    }

    #[test]
    fn schur_oracle_on_f20() {
        let g = f20();
        // C4 = stabilizer-like Sylow 2: strong Gelfand, so the ring commutes
        let c4 = g.first_element_of_order(4).unwrap();
        let emb = subgroup_embed(&g, &[g.elements()[c4 as usize].clone()], 100).unwrap();
        let h: Vec<u32> = emb.parent_index().to_vec();
        assert!(schur_ring_commutes(&g, &h, 5000).unwrap());
        // C2: not strong Gelfand, ring does not commute
        let c2 = g.first_element_of_order(2).unwrap();
        let emb = subgroup_embed(&g, &[g.elements()[c2 as usize].clone()], 100).unwrap();
        let h: Vec<u32> = emb.parent_index().to_vec();
        assert!(!schur_ring_commutes(&g, &h, 5000).unwrap());
        // H = G: the center of the group algebra always commutes
        let all: Vec<u32> = (0..20).collect();
        assert!(schur_ring_commutes(&g, &all, 5000).unwrap());
    }

    #[test]
    fn double_cosets() {
        let g = s3();
        let c2 = subgroup_embed(&g, &[GroupElement::Perm(vec![1, 0, 2])], 100).unwrap();
        assert_eq!(double_coset_count(&g, c2.parent_index()).unwrap(), 2);
        let whole = subgroup_embed(&g, &g.generators().to_vec(), 100).unwrap();
        assert_eq!(double_coset_count(&g, whole.parent_index()).unwrap(), 1);
        // F20 over C5: 4 double cosets (C5 is normal of index 4), matching
        // the sum of squared induced-trivial multiplicities.
        let g = f20();
        let (tg, emb, th) = tables_for(&g, vec![GroupElement::Perm(vec![1, 2, 3, 4, 0])]);
        let mm = restriction_multiplicities(&tg, &emb, &th).unwrap();
        let count = double_coset_count(&g, emb.parent_index()).unwrap();
        assert_eq!(count, 4);
        assert_eq!(count, induced_trivial_square_sum(&mm));
    }

    #[test]
    fn scan_s3() {
        let g = s3();
        let scan = sgp_scan(&g, &Caps::default(), false).unwrap();
        assert!(scan.monotonicity_ok);
        // strong Gelfand subgroups of S3: S3, C3, C2 (not the trivial one)
        let yes: Vec<(u64, bool)> = scan
            .entries
            .iter()
            .filter(|e| e.report.verdict)
            .map(|e| (e.order, e.fingerprint.cyclic))
            .collect();
        assert_eq!(yes, vec![(6, false), (3, true), (2, true)]);
        assert_eq!(scan.sgp_class_count, 3);
        // C2 has three conjugates
        assert_eq!(scan.sgp_raw_count, 1 + 1 + 3);
    }

    #[test]
    fn canonical_form_is_permutation_invariant() {
        let mm = MultiplicityMatrix {
            row_degrees: vec![1, 2, 2],
            col_degrees: vec![1, 1],
            entries: vec![vec![1, 0], vec![0, 2], vec![2, 0]],
            trivial_row: 0,
            trivial_col: 0,
        };
        // swap the two degree-2 rows and the two degree-1 columns
        let swapped = MultiplicityMatrix {
            row_degrees: vec![1, 2, 2],
            col_degrees: vec![1, 1],
            entries: vec![vec![1, 0], vec![0, 2], vec![2, 0]]
                .into_iter()
                .map(|r| vec![r[1], r[0]])
                .collect(),
            trivial_row: 0,
            trivial_col: 1,
        };
        assert_eq!(
            canonical_multiplicity_form(&mm),
            canonical_multiplicity_form(&swapped)
        );
    }
}
