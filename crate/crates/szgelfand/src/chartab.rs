//! Exact character tables by the Dixon-Schneider method.
//!
//! All character values are represented as residues modulo a prime p chosen
//! with p ≡ 1 (mod exp G) and p > 2|G|. Under those constraints the class
//! algebra over Z/p is split semisimple, the common eigenvectors of the
//! class matrices are in bijection with the irreducible characters, and
//! every integer quantity read off a table (degrees, total degrees,
//! restriction multiplicities) is a rational integer below p, so lifting is
//! the identity on canonical residues. No cyclotomic arithmetic anywhere.
//!
//! References: Dixon, *High speed computation of group characters*, Numer.
//! Math. 10 (1967); Schneider, *Dixon's character table algorithm
//! revisited*, J. Symbolic Comput. 9 (1990).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groups::{ConjClasses, Group};
use crate::modlin::{self, Fp, MatFp};

/// Desk-scale caps for table computation.
pub const MAX_CLASSES: usize = 60;
pub const MAX_ORDER: u64 = 100_000;

// ---------------------------------------------------------------------------
// Dixon context
// ---------------------------------------------------------------------------

/// The prime field a table is computed over: p ≡ 1 (mod e), p > 2|G|, and a
/// fixed residue omega of multiplicative order exactly e.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DixonContext {
    pub p: u64,
    pub e: u64,
    pub omega: u64,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Exponent of the group: lcm of its element orders.
pub fn exponent(g: &Group) -> u64 {
    g.exponent()
}

/// Ascending stream of admissible Dixon primes for the given order and
/// exponent: p prime, p ≡ 1 (mod e), p > 2 * order.
pub fn dixon_primes(order: u64, e: u64) -> impl Iterator<Item = u64> {
    (1u64..).map(move |t| t * e + 1).filter(move |&p| p > 2 * order && is_prime(p))
}

/// Least residue of multiplicative order exactly e modulo p.
fn least_of_order(fp: Fp, e: u64) -> u64 {
    let factors = prime_factors(e);
    (1..fp.p)
        .find(|&w| fp.pow(w, e) == 1 && factors.iter().all(|&l| fp.pow(w, e / l) != 1))
        .expect("an element of order e exists since e divides p - 1")
}

/// Least admissible context for a group of the given order and exponent.
pub fn dixon_context(order: u64, e: u64) -> DixonContext {
    let p = dixon_primes(order, e).next().expect("Dirichlet guarantees a prime");
    DixonContext { p, e, omega: least_of_order(Fp::new(p), e) }
}

/// Context with a caller-chosen prime; the prime must satisfy the same
/// admissibility constraints or the call is rejected.
pub fn dixon_context_with_prime(order: u64, e: u64, p: u64) -> Result<DixonContext> {
    if !is_prime(p) || p <= 2 * order || (p - 1) % e != 0 {
        return Err(Error::usage(format!(
            "prime {p} is not admissible: need p prime, p > {}, p = 1 mod {e}",
            2 * order
        )));
    }
    Ok(DixonContext { p, e, omega: least_of_order(Fp::new(p), e) })
}

// ---------------------------------------------------------------------------
// Class matrices (structure constants)
// ---------------------------------------------------------------------------

/// The class-algebra structure constants a[i][j][l] = #{(x, y) in C_i x C_j :
/// xy = z_l} for the fixed class representatives z_l.
pub struct ClassMatrices {
    pub k: usize,
    /// data[i][j * k + l] = a_{ijl}
    data: Vec<Vec<u64>>,
}

impl ClassMatrices {
    pub fn a(&self, i: usize, j: usize, l: usize) -> u64 {
        self.data[i][j * self.k + l]
    }
}

/// Compute all structure constants by one sweep per class: for x in C_i the
/// product partner with target z_l is forced to be y = x^-1 z_l.
pub fn class_matrices(g: &Group, cc: &ConjClasses) -> ClassMatrices {
    let k = cc.count();
    let mut data = vec![vec![0u64; k * k]; k];
    for i in 0..k {
        for &xi in &cc.members[i] {
            let x_inv = g.inv_idx(xi);
            for l in 0..k {
                let y = g.mul_idx(x_inv, cc.reps[l]);
                let j = cc.class_of[y as usize] as usize;
                data[i][j * k + l] += 1;
            }
        }
    }
    ClassMatrices { k, data }
}

// ---------------------------------------------------------------------------
// Character table
// ---------------------------------------------------------------------------

/// An exact character table: one row per irreducible character, values as
/// residues mod p, integer degrees, and the class metadata needed to use the
/// table (sizes, element orders, inverse classes). Rows are sorted by degree
/// and then by value tuple, so tables are deterministic.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    context: DixonContext,
    order: u64,
    class_sizes: Vec<u64>,
    element_orders: Vec<u64>,
    inverse_class: Vec<u32>,
    degrees: Vec<u64>,
    values: Vec<Vec<u64>>,
}

impl CharacterTable {
    pub fn context(&self) -> &DixonContext {
        &self.context
    }
    pub fn order(&self) -> u64 {
        self.order
    }
    pub fn class_count(&self) -> usize {
        self.class_sizes.len()
    }
    pub fn class_sizes(&self) -> &[u64] {
        &self.class_sizes
    }
    pub fn element_orders(&self) -> &[u64] {
        &self.element_orders
    }
    pub fn inverse_class(&self) -> &[u32] {
        &self.inverse_class
    }
    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }
    /// values()[row][class], canonical residues mod p.
    pub fn values(&self) -> &[Vec<u64>] {
        &self.values
    }

    /// Index of the trivial character (the all-ones row).
    pub fn trivial_row(&self) -> usize {
        self.values
            .iter()
            .position(|row| row.iter().all(|&v| v == 1))
            .expect("every table contains the trivial character")
    }

    /// A row is real-valued iff it agrees with itself on inverse classes.
    pub fn is_real_row(&self, r: usize) -> bool {
        (0..self.class_count())
            .all(|j| self.values[r][j] == self.values[r][self.inverse_class[j] as usize])
    }

    pub fn real_row_count(&self) -> usize {
        (0..self.degrees.len()).filter(|&r| self.is_real_row(r)).count()
    }

    pub fn linear_count(&self) -> usize {
        self.degrees.iter().filter(|&&d| d == 1).count()
    }

    /// Degree of the total character: the sum of the irreducible degrees.
    pub fn total_degree(&self) -> u64 {
        self.degrees.iter().sum()
    }
}

/// Sum of irreducible degrees of a table.
pub fn total_character_degree(t: &CharacterTable) -> u64 {
    t.total_degree()
}

/// Character table over the least admissible prime for this group.
pub fn character_table(g: &Group) -> Result<CharacterTable> {
    let ctx = dixon_context(g.order(), exponent(g));
    character_table_with(g, &ctx)
}

/// Character table over a caller-supplied context (used to share one prime
/// between a group and its subgroups). The context must be admissible for
/// this group: p ≡ 1 (mod exp G) and p > 2|G|.
pub fn character_table_with(g: &Group, ctx: &DixonContext) -> Result<CharacterTable> {
    if g.order() > MAX_ORDER {
        return Err(Error::resource(format!(
            "group order {} exceeds the table cap of {MAX_ORDER}",
            g.order()
        )));
    }
    let e = exponent(g);
    if (ctx.p - 1) % e != 0 || ctx.p <= 2 * g.order() {
        return Err(Error::usage(format!(
            "Dixon prime {} not admissible for order {} exponent {e}",
            ctx.p,
            g.order()
        )));
    }
    let cc = g.classes();
    let k = cc.count();
    if k > MAX_CLASSES {
        return Err(Error::resource(format!(
            "class count {k} exceeds the table cap of {MAX_CLASSES}"
        )));
    }
    let fp = Fp::new(ctx.p);
    let cm = class_matrices(g, cc);
    let mats: Vec<MatFp> = (0..k)
        .map(|i| MatFp::from_fn(fp, k, k, |j, l| cm.a(i, j, l)))
        .collect();

    let eigvecs = split_to_lines(&mats, fp, k)?;

    // Normalize each common eigenvector to a character row.
    let sizes_mod: Vec<u64> = cc.sizes.iter().map(|&s| s % fp.p).collect();
    let isqrt = |n: u64| -> u64 {
        let mut r = (n as f64).sqrt() as u64 + 1;
        while r * r > n {
            r -= 1;
        }
        r
    };
    let max_degree = isqrt(g.order());
    let order_mod = g.order() % fp.p;
    let mut rows: Vec<(u64, Vec<u64>)> = Vec::with_capacity(k);
    for v in eigvecs {
        if v[0] == 0 {
            return Err(Error::internal("eigenvector vanishes at the identity class"));
        }
        let v0_inv = fp.inv(v[0]);
        let u: Vec<u64> = v.iter().map(|&x| fp.mul(x, v0_inv)).collect();
        // S = sum_j u_j u_{j*} / |C_j| = |G| / d^2 (mod p)
        let mut s = 0u64;
        for j in 0..k {
            let term = fp.mul(u[j], u[cc.inverse_class[j] as usize]);
            s = fp.add(s, fp.mul(term, fp.inv(sizes_mod[j])));
        }
        if s == 0 {
            return Err(Error::internal("degenerate norm in character normalization"));
        }
        let d_squared = fp.mul(order_mod, fp.inv(s));
        let d = (1..=max_degree)
            .find(|&d| fp.mul(d % fp.p, d % fp.p) == d_squared)
            .ok_or_else(|| Error::internal("no integer degree matches the eigenvector norm"))?;
        let row: Vec<u64> = (0..k)
            .map(|j| fp.mul(fp.mul(d % fp.p, u[j]), fp.inv(sizes_mod[j])))
            .collect();
        rows.push((d, row));
    }
    rows.sort();
    let degrees: Vec<u64> = rows.iter().map(|(d, _)| *d).collect();
    let values: Vec<Vec<u64>> = rows.into_iter().map(|(_, r)| r).collect();

    let table = CharacterTable {
        context: *ctx,
        order: g.order(),
        class_sizes: cc.sizes.clone(),
        element_orders: cc.element_orders.clone(),
        inverse_class: cc.inverse_class.clone(),
        degrees,
        values,
    };
    validate_table(&table)?;
    Ok(table)
}

/// Split the common eigenspaces of the class matrices down to lines.
/// Deterministic: class matrices in index order, then sums of pairs in
/// lexicographic order; eigenvalues in ascending residue order.
fn split_to_lines(mats: &[MatFp], fp: Fp, k: usize) -> Result<Vec<Vec<u64>>> {
    let full: Vec<Vec<u64>> = (0..k)
        .map(|j| (0..k).map(|i| u64::from(i == j)).collect())
        .collect();
    let mut subspaces: Vec<Vec<Vec<u64>>> = vec![full];

    let split_by = |mat: &MatFp, subspaces: &mut Vec<Vec<Vec<u64>>>| -> Result<()> {
        let mut next: Vec<Vec<Vec<u64>>> = Vec::new();
        for basis in subspaces.drain(..) {
            if basis.len() == 1 {
                next.push(basis);
                continue;
            }
            let restricted = modlin::restrict_operator(mat, &basis)?;
            let eigs = modlin::eigenspaces(&restricted);
            let total: usize = eigs.iter().map(|(_, vs)| vs.len()).sum();
            if total != basis.len() {
                return Err(Error::internal(
                    "class matrix failed to act diagonalizably on an invariant subspace",
                ));
            }
            for (_, vecs) in eigs {
                let lifted: Vec<Vec<u64>> =
                    vecs.iter().map(|v| modlin::combine(fp, &basis, v)).collect();
                next.push(lifted);
            }
        }
        *subspaces = next;
        Ok(())
    };

    for mat in mats.iter().skip(1) {
        if subspaces.iter().all(|b| b.len() == 1) {
            break;
        }
        split_by(mat, &mut subspaces)?;
    }
    // Exact splitting by single class matrices always succeeds for a split
    // semisimple class algebra; sums of pairs are kept as a fallback.
    if !subspaces.iter().all(|b| b.len() == 1) {
        'outer: for i in 1..mats.len() {
            for j in (i + 1)..mats.len() {
                let sum = mats[i].add(&mats[j]);
                split_by(&sum, &mut subspaces)?;
                if subspaces.iter().all(|b| b.len() == 1) {
                    break 'outer;
                }
            }
        }
    }
    if !subspaces.iter().all(|b| b.len() == 1) {
        return Err(Error::internal(
            "eigenspace splitting did not reach dimension one; the class algebra \
             could not be diagonalized over the chosen prime",
        ));
    }
    Ok(subspaces.into_iter().map(|mut b| b.pop().expect("one vector")).collect())
}

/// All CharacterTable invariants: row and column orthogonality mod p, degree
/// squares summing to the order, degree bounds, row count.
fn validate_table(t: &CharacterTable) -> Result<()> {
    let fp = Fp::new(t.context.p);
    let k = t.class_count();
    if t.values.len() != k {
        return Err(Error::internal("row count differs from class count"));
    }
    let sum_sq: u64 = t.degrees.iter().map(|&d| d * d).sum();
    if sum_sq != t.order {
        return Err(Error::internal(format!(
            "degree squares sum to {sum_sq}, expected the group order {}",
            t.order
        )));
    }
    let max_degree = {
        let mut r = (t.order as f64).sqrt() as u64 + 1;
        while r * r > t.order {
            r -= 1;
        }
        r
    };
    if t.degrees.iter().any(|&d| d < 1 || d > max_degree) {
        return Err(Error::internal("a degree falls outside [1, sqrt(|G|)]"));
    }
    let order_mod = t.order % fp.p;
    for r in 0..k {
        for s in 0..k {
            let mut acc = 0u64;
            for j in 0..k {
                let term = fp.mul(
                    t.values[r][j],
                    t.values[s][t.inverse_class[j] as usize],
                );
                acc = fp.add(acc, fp.mul(t.class_sizes[j] % fp.p, term));
            }
            let expected = if r == s { order_mod } else { 0 };
            if acc != expected {
                return Err(Error::internal(format!(
                    "row orthogonality fails for rows {r}, {s}"
                )));
            }
        }
    }
    for j in 0..k {
        for j2 in 0..k {
            let mut acc = 0u64;
            for r in 0..k {
                acc = fp.add(
                    acc,
                    fp.mul(t.values[r][j], t.values[r][t.inverse_class[j2] as usize]),
                );
            }
            let expected = if j == j2 {
                fp.mul(order_mod, fp.inv(t.class_sizes[j] % fp.p))
            } else {
                0
            };
            if acc != expected {
                return Err(Error::internal(format!(
                    "column orthogonality fails for classes {j}, {j2}"
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

    #[test]
    fn dixon_context_examples() {
        assert_eq!(dixon_context(6, 6).p, 13);
        assert_eq!(dixon_context(20, 20).p, 41);
        assert_eq!(dixon_context(2, 2).p, 5);
        let ctx = dixon_context(6, 6);
        // omega has order exactly 6 mod 13
        let fp = Fp::new(13);
        assert_eq!(fp.pow(ctx.omega, 6), 1);
        assert_ne!(fp.pow(ctx.omega, 3), 1);
        assert_ne!(fp.pow(ctx.omega, 2), 1);
    }

    #[test]
    fn dixon_prime_stream_is_ascending_and_admissible() {
        let ps: Vec<u64> = dixon_primes(24, 12).take(3).collect();
        assert!(ps.windows(2).all(|w| w[0] < w[1]));
        for p in ps {
            assert!(is_prime(p) && p > 48 && (p - 1) % 12 == 0);
        }
    }

    #[test]
    fn class_matrix_identities_on_s3() {
        let g = s3();
        let cc = g.classes();
        let cm = class_matrices(&g, cc);
        let k = cc.count();
        // identity class acts as the unit: a_{0jl} = delta_jl
        for j in 0..k {
            for l in 0..k {
                assert_eq!(cm.a(0, j, l), u64::from(j == l));
            }
        }
        // row sums: every product lands somewhere
        for i in 0..k {
            for l in 0..k {
                let total: u64 = (0..k).map(|j| cm.a(i, j, l)).sum();
                assert_eq!(total, cc.sizes[i]);
            }
        }
        // transpositions * transpositions contains the identity 3 times
        let t = (0..k).find(|&c| cc.element_orders[c] == 2).unwrap();
        assert_eq!(cm.a(t, t, 0), 3);
    }

    #[test]
    fn s3_table() {
        let t = character_table(&s3()).unwrap();
        assert_eq!(t.degrees(), &[1, 1, 2]);
        assert_eq!(t.context().p, 13);
        assert_eq!(t.linear_count(), 2);
        assert_eq!(t.total_degree(), 4);
        // all three rows of S3 are real
        assert_eq!(t.real_row_count(), 3);
    }

    #[test]
    fn f20_table() {
        let g = f20();
        assert_eq!(g.order(), 20);
        let t = character_table(&g).unwrap();
        assert_eq!(t.degrees(), &[1, 1, 1, 1, 4]);
        assert_eq!(t.linear_count(), 4);
        // linear character count equals the abelianization order
        let derived = crate::groups::commutator_subgroup(&g, 100).unwrap();
        assert_eq!(t.linear_count() as u64, g.order() / derived.order());
        assert_eq!(t.total_degree(), 8);
    }

    #[test]
    fn c2_table() {
        let g = perm_group(2, vec![vec![1, 0]]);
        let t = character_table(&g).unwrap();
        assert_eq!(t.context().p, 5);
        assert_eq!(t.degrees(), &[1, 1]);
    }

    #[test]
    fn q8_table_has_rational_shape() {
        // Quaternion group: degrees 1,1,1,1,2 and 5 real rows.
        let g = perm_group(
            8,
            vec![vec![1, 2, 3, 0, 7, 4, 5, 6], vec![4, 5, 6, 7, 2, 3, 0, 1]],
        );
        assert_eq!(g.order(), 8);
        let t = character_table(&g).unwrap();
        assert_eq!(t.degrees(), &[1, 1, 1, 1, 2]);
        assert_eq!(t.real_row_count(), 5);
    }

    #[test]
    fn prime_independence_of_degrees_small() {
        let g = f20();
        let e = exponent(&g);
        let mut ps = dixon_primes(g.order(), e);
        let p1 = ps.next().unwrap();
        let p2 = ps.next().unwrap();
        let t1 =
            character_table_with(&g, &dixon_context_with_prime(g.order(), e, p1).unwrap())
                .unwrap();
        let t2 =
            character_table_with(&g, &dixon_context_with_prime(g.order(), e, p2).unwrap())
                .unwrap();
        assert_eq!(t1.degrees(), t2.degrees());
    }

    #[test]
    fn rejects_inadmissible_prime() {
        let g = s3();
        assert!(dixon_context_with_prime(6, 6, 7).is_err()); // = 1 mod 6 but <= 12
        assert!(dixon_context_with_prime(6, 6, 14).is_err()); // composite
        assert!(dixon_context_with_prime(6, 6, 17).is_err()); // not 1 mod 6
        let ctx = dixon_context_with_prime(6, 6, 19).unwrap();
        assert!(character_table_with(&g, &ctx).is_ok());
    }
}
