//! Dense exact linear algebra over Z/p for an odd prime p < 2^31.
//!
//! Everything downstream of the class-algebra eigenproblem runs here:
//! reduced row echelon form, kernels, characteristic polynomials (Hessenberg
//! reduction plus the standard recurrence), root scans, and restriction of an
//! operator to an invariant subspace. All routines are deterministic; no
//! randomized pivoting or splitting anywhere.

use crate::error::{Error, Result};

/// Arithmetic helpers mod p. Values are canonical residues in [0, p).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fp {
    pub p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Fp {
        assert!(p > 2 && p < (1 << 31), "prime out of supported range");
        Fp { p }
    }
    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p { s - self.p } else { s }
    }
    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b { a - b } else { a + self.p - b }
    }
    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 { 0 } else { self.p - a }
    }
    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }
    pub fn pow(&self, mut b: u64, mut e: u64) -> u64 {
        let mut acc = 1;
        b %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        acc
    }
    /// Inverse of a nonzero residue (p prime).
    pub fn inv(&self, a: u64) -> u64 {
        assert!(a % self.p != 0, "inverse of zero mod p");
        self.pow(a, self.p - 2)
    }
}

/// Row-major dense matrix over Z/p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatFp {
    pub fp: Fp,
    pub rows: usize,
    pub cols: usize,
    data: Vec<u64>,
}

impl MatFp {
    pub fn zero(fp: Fp, rows: usize, cols: usize) -> MatFp {
        MatFp { fp, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(fp: Fp, n: usize) -> MatFp {
        let mut m = Self::zero(fp, n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_fn(fp: Fp, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> u64) -> MatFp {
        let mut m = Self::zero(fp, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j) % fp.p;
            }
        }
        m
    }

    pub fn add(&self, other: &MatFp) -> MatFp {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, &b) in out.data.iter_mut().zip(other.data.iter()) {
            *a = self.fp.add(*a, b);
        }
        out
    }

    pub fn mul_vec(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.cols);
        let fp = self.fp;
        (0..self.rows)
            .map(|i| {
                let row = &self.data[i * self.cols..(i + 1) * self.cols];
                let mut acc = 0u64;
                for (a, b) in row.iter().zip(v.iter()) {
                    acc = (acc + a * b) % fp.p;
                }
                acc
            })
            .collect()
    }
}

impl std::ops::Index<(usize, usize)> for MatFp {
    type Output = u64;
    fn index(&self, (i, j): (usize, usize)) -> &u64 {
        &self.data[i * self.cols + j]
    }
}
impl std::ops::IndexMut<(usize, usize)> for MatFp {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut u64 {
        &mut self.data[i * self.cols + j]
    }
}

/// In-place reduced row echelon form. Returns the pivot columns in order.
pub fn rref(m: &mut MatFp) -> Vec<usize> {
    let fp = m.fp;
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..m.cols {
        if row == m.rows {
            break;
        }
        let Some(pr) = (row..m.rows).find(|&r| m[(r, col)] != 0) else {
            continue;
        };
        if pr != row {
            for j in 0..m.cols {
                let (a, b) = (m[(row, j)], m[(pr, j)]);
                m[(row, j)] = b;
                m[(pr, j)] = a;
            }
        }
        let inv = fp.inv(m[(row, col)]);
        for j in col..m.cols {
            m[(row, j)] = fp.mul(m[(row, j)], inv);
        }
        for r in 0..m.rows {
            if r != row && m[(r, col)] != 0 {
                let f = m[(r, col)];
                for j in col..m.cols {
                    let s = fp.mul(f, m[(row, j)]);
                    m[(r, j)] = fp.sub(m[(r, j)], s);
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

/// Basis of the kernel of m, one vector per free column in ascending column
/// order; each vector has a 1 in its free coordinate.
pub fn kernel_basis(m: &MatFp) -> Vec<Vec<u64>> {
    let fp = m.fp;
    let mut r = m.clone();
    let pivots = rref(&mut r);
    let mut out = Vec::new();
    let mut pivot_of_col = vec![usize::MAX; m.cols];
    for (i, &c) in pivots.iter().enumerate() {
        pivot_of_col[c] = i;
    }
    for free in 0..m.cols {
        if pivot_of_col[free] != usize::MAX {
            continue;
        }
        let mut v = vec![0u64; m.cols];
        v[free] = 1;
        for (i, &c) in pivots.iter().enumerate() {
            v[c] = fp.neg(r[(i, free)]);
        }
        out.push(v);
    }
    out
}

fn poly_mul_linear(fp: Fp, poly: &[u64], c: u64) -> Vec<u64> {
    // poly * (x - c)
    let mut out = vec![0u64; poly.len() + 1];
    for (i, &a) in poly.iter().enumerate() {
        out[i + 1] = fp.add(out[i + 1], a);
        out[i] = fp.sub(out[i], fp.mul(a, c));
    }
    out
}

/// Characteristic polynomial det(xI - A), coefficients ascending, monic.
pub fn charpoly(a: &MatFp) -> Vec<u64> {
    assert_eq!(a.rows, a.cols);
    let fp = a.fp;
    let n = a.rows;
    if n == 0 {
        return vec![1];
    }
    // Reduce a copy to upper Hessenberg form by a similarity transform.
    let mut h = a.clone();
    for j in 0..n.saturating_sub(2) {
        let Some(pr) = ((j + 1)..n).find(|&r| h[(r, j)] != 0) else {
            continue;
        };
        if pr != j + 1 {
            for c in 0..n {
                let (x, y) = (h[(j + 1, c)], h[(pr, c)]);
                h[(j + 1, c)] = y;
                h[(pr, c)] = x;
            }
            for r in 0..n {
                let (x, y) = (h[(r, j + 1)], h[(r, pr)]);
                h[(r, j + 1)] = y;
                h[(r, pr)] = x;
            }
        }
        let inv = fp.inv(h[(j + 1, j)]);
        for r in (j + 2)..n {
            if h[(r, j)] == 0 {
                continue;
            }
            let f = fp.mul(h[(r, j)], inv);
            for c in 0..n {
                let s = fp.mul(f, h[(j + 1, c)]);
                h[(r, c)] = fp.sub(h[(r, c)], s);
            }
            for rr in 0..n {
                let s = fp.mul(f, h[(rr, r)]);
                h[(rr, j + 1)] = fp.add(h[(rr, j + 1)], s);
            }
        }
    }
    // d_k(x) = (x - h_kk) d_{k-1}(x) - sum_m h_mk (prod subdiagonals) d_{m-1}(x)
    let mut d: Vec<Vec<u64>> = vec![vec![1]];
    for k in 1..=n {
        let mut poly = poly_mul_linear(fp, &d[k - 1], h[(k - 1, k - 1)]);
        let mut subprod = 1u64;
        for m in (1..k).rev() {
            subprod = fp.mul(subprod, h[(m, m - 1)]);
            if subprod == 0 {
                break;
            }
            let coef = fp.mul(h[(m - 1, k - 1)], subprod);
            if coef == 0 {
                continue;
            }
            for (i, &c) in d[m - 1].iter().enumerate() {
                poly[i] = fp.sub(poly[i], fp.mul(coef, c));
            }
        }
        d.push(poly);
    }
    d.pop().unwrap()
}

/// All roots of the polynomial in Z/p, ascending, by direct scan.
pub fn poly_roots(fp: Fp, coeffs: &[u64]) -> Vec<u64> {
    let mut roots = Vec::new();
    for x in 0..fp.p {
        let mut acc = 0u64;
        for &c in coeffs.iter().rev() {
            acc = (acc * x + c) % fp.p;
        }
        if acc == 0 {
            roots.push(x);
        }
    }
    roots
}

/// The eigenvalue/eigenspace pairs of a square matrix, eigenvalues ascending.
pub fn eigenspaces(a: &MatFp) -> Vec<(u64, Vec<Vec<u64>>)> {
    let fp = a.fp;
    let cp = charpoly(a);
    poly_roots(fp, &cp)
        .into_iter()
        .map(|lam| {
            let mut m = a.clone();
            for i in 0..a.rows {
                m[(i, i)] = fp.sub(m[(i, i)], lam);
            }
            (lam, kernel_basis(&m))
        })
        .collect()
}

/// Express the action of `mat` on the invariant subspace spanned by `basis`
/// as a d x d matrix A with mat * B = B * A (columns of B are the basis).
pub fn restrict_operator(mat: &MatFp, basis: &[Vec<u64>]) -> Result<MatFp> {
    let fp = mat.fp;
    let n = mat.rows;
    let d = basis.len();
    let images: Vec<Vec<u64>> = basis.iter().map(|v| mat.mul_vec(v)).collect();
    // Solve B x = image for each image by row reducing [B | images].
    let mut aug = MatFp::zero(fp, n, d + d);
    for (j, v) in basis.iter().enumerate() {
        for i in 0..n {
            aug[(i, j)] = v[i];
        }
    }
    for (j, v) in images.iter().enumerate() {
        for i in 0..n {
            aug[(i, d + j)] = v[i];
        }
    }
    let pivots = rref(&mut aug);
    if pivots.len() != d || pivots.iter().enumerate().any(|(i, &c)| c != i) {
        return Err(Error::internal(
            "subspace basis is dependent or not invariant under the operator",
        ));
    }
    let mut a = MatFp::zero(fp, d, d);
    for i in 0..d {
        for j in 0..d {
            a[(i, j)] = aug[(i, d + j)];
        }
    }
    // The subspace must really be invariant: rows beyond the pivots of the
    // augmented system must be zero on the image side.
    for r in d..n {
        for j in 0..d {
            if aug[(r, d + j)] != 0 {
                return Err(Error::internal("subspace not invariant under the operator"));
            }
        }
    }
    Ok(a)
}

/// Matrix-free linear combination: sum of basis columns weighted by coords.
pub fn combine(fp: Fp, basis: &[Vec<u64>], coords: &[u64]) -> Vec<u64> {
    let n = basis[0].len();
    let mut out = vec![0u64; n];
    for (v, &c) in basis.iter().zip(coords.iter()) {
        if c == 0 {
            continue;
        }
        for i in 0..n {
            out[i] = (out[i] + c * v[i]) % fp.p;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Determinant by plain elimination, used only as an oracle here.
    fn det(a: &MatFp) -> u64 {
        let fp = a.fp;
        let n = a.rows;
        let mut m = a.clone();
        let mut acc = 1u64;
        for col in 0..n {
            let Some(pr) = (col..n).find(|&r| m[(r, col)] != 0) else {
                return 0;
            };
            if pr != col {
                for j in 0..n {
                    let (x, y) = (m[(col, j)], m[(pr, j)]);
                    m[(col, j)] = y;
                    m[(pr, j)] = x;
                }
                acc = fp.neg(acc);
            }
            acc = fp.mul(acc, m[(col, col)]);
            let inv = fp.inv(m[(col, col)]);
            for r in (col + 1)..n {
                let f = fp.mul(m[(r, col)], inv);
                for j in col..n {
                    let s = fp.mul(f, m[(col, j)]);
                    m[(r, j)] = fp.sub(m[(r, j)], s);
                }
            }
        }
        acc
    }

    #[test]
    fn rref_and_kernel() {
        let fp = Fp::new(7);
        // x + 2y + 3z = 0 has a 2-dimensional kernel mod 7
        let m = MatFp::from_fn(fp, 1, 3, |_, j| [1, 2, 3][j]);
        let k = kernel_basis(&m);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert_eq!(m.mul_vec(v), vec![0]);
        }
    }

    #[test]
    fn charpoly_of_diagonal() {
        let fp = Fp::new(101);
        let m = MatFp::from_fn(fp, 3, 3, |i, j| if i == j { (i as u64) + 1 } else { 0 });
        // (x-1)(x-2)(x-3) = x^3 - 6x^2 + 11x - 6
        let cp = charpoly(&m);
        assert_eq!(cp, vec![fp.neg(6), 11, fp.neg(6), 1]);
        assert_eq!(poly_roots(fp, &cp), vec![1, 2, 3]);
    }

    #[test]
    fn eigenspaces_of_permutation_matrix() {
        let fp = Fp::new(13);
        // Cyclic shift on 3 coordinates: eigenvalues are the cube roots of 1
        // mod 13, namely 1, 3, 9.
        let m = MatFp::from_fn(fp, 3, 3, |i, j| u64::from(j == (i + 1) % 3));
        let eigs = eigenspaces(&m);
        let lams: Vec<u64> = eigs.iter().map(|(l, _)| *l).collect();
        assert_eq!(lams, vec![1, 3, 9]);
        for (lam, vecs) in eigs {
            assert_eq!(vecs.len(), 1);
            let v = &vecs[0];
            let mv = m.mul_vec(v);
            for i in 0..3 {
                assert_eq!(mv[i], fp.mul(lam, v[i]));
            }
        }
    }

    #[test]
    fn restriction_to_invariant_subspace() {
        let fp = Fp::new(11);
        // Block diagonal: span(e0, e1) is invariant.
        let mut m = MatFp::zero(fp, 4, 4);
        m[(0, 0)] = 2;
        m[(0, 1)] = 1;
        m[(1, 0)] = 3;
        m[(1, 1)] = 5;
        m[(2, 2)] = 7;
        m[(3, 3)] = 9;
        let basis = vec![vec![1, 0, 0, 0], vec![0, 1, 0, 0]];
        let a = restrict_operator(&m, &basis).unwrap();
        assert_eq!(a[(0, 0)], 2);
        assert_eq!(a[(1, 0)], 3);
        assert_eq!(a[(0, 1)], 1);
        assert_eq!(a[(1, 1)], 5);
        // A subspace that is not invariant must be rejected.
        let bad = vec![vec![0, 0, 1, 1]];
        assert!(restrict_operator(&m, &bad).is_err());
    }

    proptest::proptest! {
        #[test]
        fn charpoly_evaluates_to_characteristic_determinant(
            entries in proptest::collection::vec(0u64..97, 16),
            x in 0u64..97,
        ) {
            let fp = Fp::new(97);
            let m = MatFp::from_fn(fp, 4, 4, |i, j| entries[4 * i + j]);
            let cp = charpoly(&m);
            // det(xI - M) by elimination
            let mut xm = MatFp::zero(fp, 4, 4);
            for i in 0..4 {
                for j in 0..4 {
                    xm[(i, j)] = fp.sub(if i == j { x } else { 0 }, m[(i, j)]);
                }
            }
            let mut acc = 0u64;
            for &c in cp.iter().rev() {
                acc = (acc * x + c) % 97;
            }
            proptest::prop_assert_eq!(acc, det(&xm));
        }
    }
}
